//! Braid words and the `braid <n>: <letters>` text format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A braid on `strands` strands; letter `k` stands for the generator
/// `sigma_{|k|}` with exponent `sign(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse {
                position: 0,
                message: "strand count must be positive".into(),
            });
        }
        for (i, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() >= strands {
                return Err(Error::Parse {
                    position: i + 1,
                    message: format!(
                        "letter {l} is not a generator of the {strands}-strand braid group"
                    ),
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `c(sigma)`, the exponent sum.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Number of cycles of the underlying permutation, i.e. the number of
    /// components of the closure.
    pub fn closure_components(&self) -> usize {
        let n = self.strands as usize;
        let mut perm: Vec<usize> = (0..n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if !seen[s] {
                cycles += 1;
                let mut j = s;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        cycles
    }

    /// Cyclic rotation by `k` letters (a conjugate braid).
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// The word read backwards with the same exponents.
    pub fn reversed(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The inverse braid: reversed with every exponent negated.
    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Every exponent negated (mirror image of the closure).
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Markov stabilization: adds a strand and appends `sigma_n^{sign}`.
    pub fn stabilized(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let g = self.strands as i32;
        letters.push(if positive { g } else { -g });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// The same word with letter `i` flipped.
    pub fn with_letter_switched(&self, i: usize) -> Self {
        let mut letters = self.letters.clone();
        letters[i] = -letters[i];
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Connected sum of braid closures: `other` is placed on strands
    /// `n .. n + m - 1`, sharing strand `n` with `self`.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let shift = self.strands as i32 - 1;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&l| l + l.signum() * shift));
        Self {
            strands: self.strands + other.strands - 1,
            letters,
        }
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text.strip_prefix("braid").ok_or_else(|| Error::Parse {
            position: 0,
            message: "expected `braid <n>: <letters>`".into(),
        })?;
        let (head, body) = rest.split_once(':').ok_or_else(|| Error::Parse {
            position: 0,
            message: "missing `:` after strand count".into(),
        })?;
        let strands: u32 = head.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("bad strand count `{}`", head.trim()),
        })?;
        let mut letters = Vec::new();
        for (i, tok) in body.split_whitespace().enumerate() {
            let l: i32 = tok.parse().map_err(|_| Error::Parse {
                position: i + 1,
                message: format!("`{tok}` is not an integer"),
            })?;
            if l == 0 {
                return Err(Error::Parse {
                    position: i + 1,
                    message: "letter 0 is not a generator".into(),
                });
            }
            letters.push(l);
        }
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

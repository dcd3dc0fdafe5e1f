//! Exact bivariate Laurent polynomials over the integers.
//!
//! The first variable is called `z` for skein polynomials and `t` once the
//! Jaeger substitution `z -> t - 1/t` has been applied; the second variable is
//! always the framing variable `a`. Terms are kept sparse in a `BTreeMap`
//! keyed by `(a-exponent, first-exponent)`, which fixes the serialization
//! order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Selects one of the two variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    /// `z` (or `t` after substitution).
    First,
    /// The framing variable `a`.
    A,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // (ea, ex) -> nonzero coefficient
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * x^ex * a^ea`.
    pub fn monomial(c: impl Into<BigInt>, ex: i32, ea: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(ex, ea, c.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// Builds a polynomial from `(coefficient, x-exponent, a-exponent)` triples.
    pub fn from_terms(terms: &[(i64, i32, i32)]) -> Self {
        let mut p = Self::zero();
        for &(c, ex, ea) in terms {
            p.add_term(ex, ea, BigInt::from(c));
        }
        p
    }

    /// `t - t^{-1}` (equivalently `z` written in `t`).
    pub fn delta_t() -> Self {
        Self::from_terms(&[(1, 1, 0), (-1, -1, 0)])
    }

    /// `(a - a^{-1}) / z`, the HOMFLY value of the trivial circle.
    pub fn homfly_circle() -> Self {
        Self::from_terms(&[(1, -1, 1), (-1, -1, -1)])
    }

    /// `1 + (a - a^{-1}) / z`, the Dubrovnik value of the trivial circle.
    pub fn kauffman_circle() -> Self {
        Self::homfly_circle() + Self::one()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(x-exponent, a-exponent, coefficient)` in `(a, x)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> {
        self.terms.iter().map(|(&(ea, ex), c)| (ex, ea, c))
    }

    pub fn coeff(&self, ex: i32, ea: i32) -> BigInt {
        self.terms.get(&(ea, ex)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, ex: i32, ea: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((ea, ex)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `x^ex * a^ea`.
    pub fn shift(&self, ex: i32, ea: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, x), c)| ((a + ea, x + ex), c.clone()))
            .collect();
        Self { terms }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&e, c)| (e, c * k)).collect();
        Self { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Least exponent of `var` over all stored terms.
    pub fn min_degree(&self, var: Var) -> Result<i32> {
        self.degrees(var).min().ok_or(Error::UndefinedDegree)
    }

    pub fn max_degree(&self, var: Var) -> Result<i32> {
        self.degrees(var).max().ok_or(Error::UndefinedDegree)
    }

    fn degrees(&self, var: Var) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().map(move |&(ea, ex)| match var {
            Var::First => ex,
            Var::A => ea,
        })
    }

    /// Returns `q` with `q * (t - t^{-1}) == self`, if one exists.
    ///
    /// Works column by column in `a`: the highest `t` term of the remainder
    /// fixes the next quotient term, until the remainder vanishes or drops
    /// below the reach of any quotient.
    pub fn exact_divide_delta(&self) -> Option<Self> {
        let mut quotient = Self::zero();
        let mut columns: BTreeMap<i32, BTreeMap<i32, BigInt>> = BTreeMap::new();
        for (&(ea, ex), c) in &self.terms {
            columns.entry(ea).or_default().insert(ex, c.clone());
        }
        for (ea, mut col) in columns {
            let floor = *col.keys().next().expect("nonempty column");
            while let Some((&top, _)) = col.iter().next_back() {
                if top - 2 < floor {
                    return None;
                }
                let c = col.remove(&top).expect("present");
                quotient.add_term(top - 1, ea, c.clone());
                let below = col.entry(top - 2).or_default();
                *below += c;
                if below.is_zero() {
                    col.remove(&(top - 2));
                }
            }
        }
        Some(quotient)
    }

    /// Exact division by an arbitrary nonzero divisor, `None` if the quotient
    /// is not a Laurent polynomial with integer coefficients.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (&lead_key, lead_c) = divisor.terms.iter().next_back()?;
        let (&tail_key, _) = divisor.terms.iter().next()?;
        let Some((&floor_key, _)) = self.terms.iter().next() else {
            return Some(Self::zero());
        };
        // every quotient term must sit at or above this key (lex order)
        let bound = (floor_key.0 - tail_key.0, floor_key.1 - tail_key.1);
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((&key, c)) = rem.terms.iter().next_back() {
            let q_key = (key.0 - lead_key.0, key.1 - lead_key.1);
            if q_key < bound {
                return None;
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let q_term = Self::monomial(q, q_key.1, q_key.0);
            rem -= &(&q_term * divisor);
            quotient += &q_term;
        }
        Some(quotient)
    }

    /// Applies the Jaeger substitution and returns the image as a fraction
    /// over powers of `t - t^{-1}`.
    ///
    /// Both sides send `z` to `t - t^{-1}`; the Kauffman side additionally
    /// sends `a` to `a^2 t^{-1}`.
    pub fn substitute_jaeger(&self, side: JaegerSide) -> DeltaFraction {
        let Some(min_ez) = self.degrees(Var::First).min() else {
            return DeltaFraction::zero();
        };
        let denom = (-min_ez).max(0) as u32;
        let delta = Self::delta_t();
        let mut powers: BTreeMap<i32, Self> = BTreeMap::new();
        let mut num = Self::zero();
        for (&(ea, ez), c) in &self.terms {
            let lift = (ez + denom as i32) as u32;
            let dpow = powers.entry(ez).or_insert_with(|| delta.pow(lift));
            let (tx, ta) = match side {
                JaegerSide::KauffmanLhs => (-ea, 2 * ea),
                JaegerSide::HomflyRhs => (0, ea),
            };
            num += &dpow.shift(tx, ta).scale(c);
        }
        DeltaFraction::new(num, denom)
    }

    /// Substitutes `a -> a^{-1}` and `z -> -z` (mirror image of a diagram).
    pub fn mirror(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ea, ex), c)| {
                let c = if ex.rem_euclid(2) == 1 { -c } else { c.clone() };
                ((-ea, ex), c)
            })
            .collect();
        Self { terms }
    }
}

/// Which side of the Jaeger identity a substitution feeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JaegerSide {
    KauffmanLhs,
    HomflyRhs,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (ex, ea, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (ex == 0 && ea == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("z", ex), ("a", ea)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c)).collect();
        LaurentPoly { terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&(ea, ex), c) in &rhs.terms {
            self.add_term(ex, ea, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&(ea, ex), c) in &rhs.terms {
            self.add_term(ex, ea, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(ea1, ex1), c1) in &self.terms {
            for (&(ea2, ex2), c2) in &rhs.terms {
                out.add_term(ex1 + ex2, ea1 + ea2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

#[derive(Serialize, Deserialize)]
struct TermRepr {
    ez: i32,
    ea: i32,
    c: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(ez, ea, c)| TermRepr {
                ez,
                ea,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c: BigInt = t.c.parse().map_err(de::Error::custom)?;
            p.add_term(t.ez, t.ea, c);
        }
        Ok(p)
    }
}

/// `numerator / (t - t^{-1})^denom_power`, kept normalized so that the
/// numerator is not divisible by `t - t^{-1}` whenever the power is positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeltaFraction {
    numerator: LaurentPoly,
    denom_power: u32,
}

impl DeltaFraction {
    pub fn new(numerator: LaurentPoly, denom_power: u32) -> Self {
        let mut f = Self {
            numerator,
            denom_power,
        };
        f.normalize();
        f
    }

    pub fn zero() -> Self {
        Self::new(LaurentPoly::zero(), 0)
    }

    pub fn one() -> Self {
        Self::new(LaurentPoly::one(), 0)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, 0)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.denom_power = 0;
            return;
        }
        while self.denom_power > 0 {
            match self.numerator.exact_divide_delta() {
                Some(q) => {
                    self.numerator = q;
                    self.denom_power -= 1;
                }
                None => break,
            }
        }
    }

    /// Multiplies the numerator by a polynomial.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.numerator * p, self.denom_power)
    }

    /// The numerator lifted to denominator power `k >= denom_power`.
    fn lifted(&self, k: u32) -> LaurentPoly {
        &self.numerator * &LaurentPoly::delta_t().pow(k - self.denom_power)
    }
}

impl fmt::Debug for DeltaFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_power == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / (t - t^-1)^{}", self.numerator, self.denom_power)
        }
    }
}

impl Add for &DeltaFraction {
    type Output = DeltaFraction;
    fn add(self, rhs: &DeltaFraction) -> DeltaFraction {
        let k = self.denom_power.max(rhs.denom_power);
        DeltaFraction::new(self.lifted(k) + rhs.lifted(k), k)
    }
}

impl Sub for &DeltaFraction {
    type Output = DeltaFraction;
    fn sub(self, rhs: &DeltaFraction) -> DeltaFraction {
        let k = self.denom_power.max(rhs.denom_power);
        DeltaFraction::new(self.lifted(k) - rhs.lifted(k), k)
    }
}

impl Mul for &DeltaFraction {
    type Output = DeltaFraction;
    fn mul(self, rhs: &DeltaFraction) -> DeltaFraction {
        DeltaFraction::new(
            &self.numerator * &rhs.numerator,
            self.denom_power + rhs.denom_power,
        )
    }
}

impl Neg for &DeltaFraction {
    type Output = DeltaFraction;
    fn neg(self) -> DeltaFraction {
        DeltaFraction {
            numerator: -&self.numerator,
            denom_power: self.denom_power,
        }
    }
}

impl std::iter::Sum for DeltaFraction {
    fn sum<I: Iterator<Item = DeltaFraction>>(iter: I) -> Self {
        iter.fold(DeltaFraction::zero(), |acc, f| &acc + &f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = p(&[(1, 0, 1), (-1, 0, -1)]) * p(&[(1, 0, 1), (1, 0, -1)]);
        assert_eq!(lhs, p(&[(1, 0, 2), (-1, 0, -2)]));
    }

    #[test]
    fn additive_identity_and_pruning() {
        let x = p(&[(3, 1, -2), (-1, 0, 4)]);
        assert_eq!(&x + &LaurentPoly::zero(), x);
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).len(), 0);
    }

    #[test]
    fn trefoil_homfly_expansion() {
        // z^{-1}(a - a^{-1}) * (2a - a^{-1} + a z^2) * a^{-3}
        let circle = LaurentPoly::homfly_circle();
        let tail = p(&[(2, 0, 1), (-1, 0, -1), (1, 2, 1)]);
        let prod = (&circle * &tail).shift(0, -3);
        let expected = p(&[
            (2, -1, -1),
            (-3, -1, -3),
            (1, -1, -5),
            (1, 1, -1),
            (-1, 1, -3),
        ]);
        assert_eq!(prod, expected);
        assert_eq!(prod.min_degree(Var::A).unwrap(), -5);
    }

    #[test]
    fn trefoil_kauffman_min_degree() {
        let tail = p(&[
            (2, 0, 1),
            (-1, 0, -1),
            (1, 1, 0),
            (-1, 1, -2),
            (1, 2, 1),
            (-1, 2, -1),
        ]);
        let y = (LaurentPoly::kauffman_circle() * tail).shift(0, -3);
        assert_eq!(y.min_degree(Var::A).unwrap(), -6);
    }

    #[test]
    fn degree_of_zero_is_an_error() {
        assert!(matches!(
            LaurentPoly::zero().min_degree(Var::A),
            Err(Error::UndefinedDegree)
        ));
        assert_eq!(LaurentPoly::one().min_degree(Var::A).unwrap(), 0);
    }

    #[test]
    fn divide_by_delta() {
        let q = p(&[(1, 2, 0), (-1, -2, 0)]).exact_divide_delta().unwrap();
        assert_eq!(q, p(&[(1, 1, 0), (1, -1, 0)]));
        assert!(p(&[(1, 0, 1), (-1, 0, -1)]).exact_divide_delta().is_none());
        let d = LaurentPoly::delta_t();
        assert_eq!(d.pow(2).exact_divide_delta().unwrap(), d);
        assert!(LaurentPoly::one().exact_divide_delta().is_none());
        assert_eq!(
            LaurentPoly::zero().exact_divide_delta(),
            Some(LaurentPoly::zero())
        );
    }

    #[test]
    fn general_exact_division() {
        let a = p(&[(1, 0, 1), (2, -1, 0), (1, 3, -2)]);
        let b = LaurentPoly::kauffman_circle();
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(a.exact_div(&b).is_none());
    }

    #[test]
    fn substitution_examples() {
        let f = p(&[(1, -1, 1), (-1, -1, -1)]).substitute_jaeger(JaegerSide::HomflyRhs);
        assert_eq!(f.numerator(), &p(&[(1, 0, 1), (-1, 0, -1)]));
        assert_eq!(f.denom_power(), 1);

        let unknot_d = LaurentPoly::kauffman_circle();
        let lhs = unknot_d.substitute_jaeger(JaegerSide::KauffmanLhs);
        // (t - t^-1) + a^2 t^-1 - a^-2 t over (t - t^-1)
        let expected = p(&[(1, 1, 0), (-1, -1, 0), (1, -1, 2), (-1, 1, -2)]);
        assert_eq!(lhs, DeltaFraction::new(expected, 1));

        let z2 = p(&[(1, 2, 0)]);
        for side in [JaegerSide::HomflyRhs, JaegerSide::KauffmanLhs] {
            let f = z2.substitute_jaeger(side);
            assert_eq!(f.numerator(), &LaurentPoly::delta_t().pow(2));
            assert_eq!(f.denom_power(), 0);
        }
    }

    #[test]
    fn fraction_cancellation() {
        let x = p(&[(1, 0, 2), (-1, 0, 0)]);
        let f = DeltaFraction::new(x.clone(), 1);
        let g = DeltaFraction::new(-&x, 1);
        let s = &f + &g;
        assert!(s.is_zero());
        assert_eq!(s.denom_power(), 0);
        assert_eq!(&f * &DeltaFraction::one(), f);
    }

    #[test]
    fn saucer_state_sum_matches_lhs() {
        // (a^2 - 1)/(t - 1/t) + (a t^-1)^2 (a^2 - 1)/(t - 1/t)
        let r = p(&[(1, 0, 2), (-1, 0, 0)]);
        let first = DeltaFraction::new(r.clone(), 1);
        let second = DeltaFraction::new(r.shift(-2, 2), 1);
        let rhs = &first + &second;
        let d_curl = p(&[(1, 0, 1), (1, -1, 2), (-1, -1, 0)]);
        assert_eq!(rhs, d_curl.substitute_jaeger(JaegerSide::KauffmanLhs));
    }

    #[test]
    fn json_is_sorted_by_a_then_z() {
        let x = p(&[(5, 2, -1), (-3, -1, 2), (7, 0, -1)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"[{"ez":0,"ea":-1,"c":"7"},{"ez":2,"ea":-1,"c":"5"},{"ez":-1,"ea":2,"c":"-3"}]"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let f = DeltaFraction::new(p(&[(1, 0, 1)]), 2);
        let fs = serde_json::to_string(&f).unwrap();
        assert!(fs.contains(r#""denom_power":2"#));
    }

    #[test]
    fn mirror_is_an_involution() {
        let x = p(&[(5, 3, -1), (-3, -1, 2), (7, 0, -4)]);
        assert_eq!(x.mirror().mirror(), x);
        assert_eq!(
            LaurentPoly::homfly_circle().mirror(),
            LaurentPoly::homfly_circle()
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec((-5i64..=5, -3i32..=3, -3i32..=3), 0..6)
                .prop_map(|t| LaurentPoly::from_terms(&t))
        }

        proptest! {
            #[test]
            fn ring_axioms(x in poly(), y in poly(), w in poly()) {
                prop_assert_eq!(&x + &y, &y + &x);
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert_eq!(&(&x * &y) * &w, &x * &(&y * &w));
                prop_assert_eq!(&x * &(&y + &w), &(&x * &y) + &(&x * &w));
            }

            #[test]
            fn monomial_shifts_min_degree(x in poly(), ex in -3i32..3, ea in -3i32..3) {
                prop_assume!(!x.is_zero());
                let m = LaurentPoly::monomial(3, ex, ea);
                prop_assert_eq!(
                    (&m * &x).min_degree(Var::A).unwrap(),
                    x.min_degree(Var::A).unwrap() + ea
                );
            }

            #[test]
            fn delta_division_roundtrip(x in poly()) {
                let prod = &x * &LaurentPoly::delta_t();
                prop_assert_eq!(prod.exact_divide_delta(), Some(x));
            }

            #[test]
            fn substitution_is_multiplicative(x in poly(), y in poly()) {
                for side in [JaegerSide::KauffmanLhs, JaegerSide::HomflyRhs] {
                    let lhs = (&x * &y).substitute_jaeger(side);
                    let rhs = &x.substitute_jaeger(side) * &y.substitute_jaeger(side);
                    prop_assert_eq!(lhs, rhs);
                }
            }

            #[test]
            fn fraction_normal_form_is_stable(x in poly(), y in poly(), k in 0u32..3) {
                let f = DeltaFraction::new(x.clone(), k);
                let g = DeltaFraction::new(y, 1);
                let round = &(&f + &g) - &g;
                prop_assert_eq!(&round, &f);
                let again = DeltaFraction::new(round.numerator().clone(), round.denom_power());
                prop_assert_eq!(again, f);
            }
        }
    }
}

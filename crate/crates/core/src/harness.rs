//! Corpus enumeration, random generators and the batch search over braid
//! closures or random fronts.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::cache::SharedCache;
use crate::diagram::MorseDiagram;
use crate::error::{Error, Result};
use crate::front::{FrontEvent, FrontWord};
use crate::inequalities::{check_front_bounds, mfw_check, write_csv, BoundReport};
use crate::skein::SkeinEngine;

/// Which braid words are treated as duplicates during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dedup {
    None,
    /// Cyclic rotations (conjugation).
    Cyclic,
    /// Rotations and reading the word backwards. Both preserve the closure
    /// up to isotopy and reversal of orientation.
    CyclicReverse,
    /// Rotations and inversion. Inversion mirrors the closure, so this also
    /// merges mirror images, whose `e_P` and `e_Y` may differ.
    CyclicInverse,
}

impl FromStr for Dedup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "none" => Dedup::None,
            "cyclic" => Dedup::Cyclic,
            "cyclic+reverse" => Dedup::CyclicReverse,
            "cyclic+inverse" => Dedup::CyclicInverse,
            _ => return Err(Error::Config(format!("unknown dedup `{s}`"))),
        })
    }
}

impl fmt::Display for Dedup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dedup::None => "none",
            Dedup::Cyclic => "cyclic",
            Dedup::CyclicReverse => "cyclic+reverse",
            Dedup::CyclicInverse => "cyclic+inverse",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Predicate {
    EpLtEy,
    BoundViolation,
    All,
}

impl FromStr for Predicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ep_lt_ey" => Predicate::EpLtEy,
            "bound_violation" => Predicate::BoundViolation,
            "all" => Predicate::All,
            _ => return Err(Error::Config(format!("unknown predicate `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    Braids,
    Fronts,
}

impl FromStr for Source {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "braids" => Ok(Source::Braids),
            "fronts" => Ok(Source::Fronts),
            _ => Err(Error::Config(format!("unknown source `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Config(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    pub source: Source,
    pub max_strands: u32,
    pub max_letters: usize,
    pub dedup: Dedup,
    pub predicate: Predicate,
    /// Random fronts to draw when the source is `fronts`.
    pub samples: usize,
    pub max_crossings: usize,
    pub max_cusps: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
    /// Worker threads; 0 lets the thread pool decide.
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    /// Extra braid words appended after the enumerated ones.
    pub extra: Vec<BraidWord>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            source: Source::Braids,
            max_strands: 3,
            max_letters: 6,
            dedup: Dedup::CyclicReverse,
            predicate: Predicate::EpLtEy,
            samples: 100,
            max_crossings: 8,
            max_cusps: 8,
            seed: 1,
            out: None,
            format: Format::Csv,
            jobs: 0,
            cache: None,
            extra: Vec::new(),
        }
    }
}

impl SearchConfig {
    /// Reads `key = value` lines; `#` starts a comment.
    pub fn from_kv(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", n + 1)))?;
            cfg.set(k.trim(), v.trim())
                .map_err(|e| Error::Config(format!("line {}: {e}", n + 1)))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_kv(&text)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
            v.parse()
                .map_err(|_| Error::Config(format!("`{key}` expects a number, got `{v}`")))
        }
        match key {
            "source" => self.source = value.parse()?,
            "max_strands" => self.max_strands = num(key, value)?,
            "max_letters" => self.max_letters = num(key, value)?,
            "dedup" => self.dedup = value.parse()?,
            "predicate" => self.predicate = value.parse()?,
            "samples" => self.samples = num(key, value)?,
            "max_crossings" => self.max_crossings = num(key, value)?,
            "max_cusps" => self.max_cusps = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            "out" => self.out = Some(PathBuf::from(value)),
            "format" => self.format = value.parse()?,
            "jobs" => self.jobs = num(key, value)?,
            "cache" => self.cache = Some(PathBuf::from(value)),
            "extra" => self.extra.push(value.parse()?),
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_strands < 1 {
            return Err(Error::Config("max_strands must be at least 1".into()));
        }
        if self.source == Source::Fronts && self.max_cusps < 2 {
            return Err(Error::Config("max_cusps must be at least 2".into()));
        }
        Ok(())
    }
}

const fn generator_alphabet(strands: u32) -> u32 {
    2 * (strands - 1)
}

fn letter(code: u32) -> i32 {
    let g = (code / 2 + 1) as i32;
    if code.is_multiple_of(2) {
        g
    } else {
        -g
    }
}

fn canonical_under(word: &[i32], dedup: Dedup) -> bool {
    if dedup == Dedup::None || word.is_empty() {
        return true;
    }
    fn rotations(w: &[i32]) -> impl Iterator<Item = Vec<i32>> + '_ {
        (0..w.len()).map(move |k| {
            let mut r = w.to_vec();
            r.rotate_left(k);
            r
        })
    }
    let key = |w: &[i32]| w.iter().map(|&l| (l.abs(), l < 0)).collect::<Vec<_>>();
    let mine = key(word);
    let mut images: Vec<Vec<i32>> = rotations(word).collect();
    match dedup {
        Dedup::CyclicReverse => {
            let rev: Vec<i32> = word.iter().rev().copied().collect();
            images.extend(rotations(&rev));
        }
        Dedup::CyclicInverse => {
            let inv: Vec<i32> = word.iter().rev().map(|l| -l).collect();
            images.extend(rotations(&inv));
        }
        _ => {}
    }
    images.iter().all(|w| key(w) >= mine)
}

/// Braid words on `1..=max_strands` strands with at most `max_letters`
/// letters, in a fixed order. A word on `n > 1` strands is listed only if
/// it uses generator `n - 1`; the empty word appears once, on one strand.
pub fn enumerate_braids(cfg: &SearchConfig) -> impl Iterator<Item = BraidWord> + '_ {
    let (dedup, max_letters) = (cfg.dedup, cfg.max_letters);
    (1..=cfg.max_strands).flat_map(move |n| {
        let alphabet = if n == 1 { 0 } else { generator_alphabet(n) };
        let lengths = if n == 1 { 0..=0 } else { 1..=max_letters };
        lengths.flat_map(move |len| {
            let total = (alphabet as u64).pow(len as u32);
            (0..total).filter_map(move |mut code| {
                let mut letters = Vec::with_capacity(len);
                for _ in 0..len {
                    letters.push(letter((code % alphabet as u64) as u32));
                    code /= alphabet as u64;
                }
                letters.reverse();
                let top = n as i32 - 1;
                if n > 1 && !letters.iter().any(|l| l.abs() == top) {
                    return None;
                }
                if !canonical_under(&letters, dedup) {
                    return None;
                }
                Some(BraidWord::new(n, letters).expect("letters are in range"))
            })
        })
    })
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: u32, letters: usize) -> BraidWord {
    let word = (0..letters)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, word).expect("letters are in range")
}

/// A random closed front with at most `max_cusps` cusps (at least 2) and at
/// most `max_crossings` crossings. The front never splits before its last
/// event, but it may still be a link.
pub fn random_front<R: Rng>(rng: &mut R, max_crossings: usize, max_cusps: usize) -> FrontWord {
    let mut lefts = rng.gen_range(1..=(max_cusps / 2).max(1));
    let mut crossings = rng.gen_range(0..=max_crossings);
    let mut open = 0u32;
    let mut events = Vec::new();
    loop {
        let can_left = lefts > 0;
        let can_cross = open >= 2 && crossings > 0;
        let can_right = open > 2 || (open == 2 && lefts == 0 && crossings == 0);
        let choices: Vec<u8> = [(0u8, can_left), (1, can_cross), (2, can_right)]
            .iter()
            .filter(|c| c.1)
            .map(|c| c.0)
            .collect();
        if choices.is_empty() {
            break;
        }
        match choices[rng.gen_range(0..choices.len())] {
            0 => {
                events.push(FrontEvent::Left(rng.gen_range(0..=open)));
                open += 2;
                lefts -= 1;
            }
            1 => {
                events.push(FrontEvent::Cross(rng.gen_range(0..open - 1)));
                crossings -= 1;
            }
            _ => {
                events.push(FrontEvent::Right(rng.gen_range(0..open - 1)));
                open -= 2;
                if open == 0 {
                    break;
                }
            }
        }
    }
    FrontWord::new(events).expect("the walk closes every strand")
}

/// Draws random fronts until one is a knot.
pub fn random_knot_front<R: Rng>(rng: &mut R, max_crossings: usize, max_cusps: usize) -> FrontWord {
    loop {
        let f = random_front(rng, max_crossings, max_cusps);
        if f.components() == 1 {
            return f;
        }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchSummary {
    pub examined: usize,
    pub knots: usize,
    pub rows: Vec<BoundReport>,
    pub cache_hit_rate: f64,
}

fn keep(predicate: Predicate, r: &BoundReport) -> bool {
    match predicate {
        Predicate::EpLtEy => r.witness,
        Predicate::BoundViolation => !r.holds(),
        Predicate::All => true,
    }
}

enum Subject {
    Braid(BraidWord),
    Front(FrontWord),
}

/// Runs a search and returns the matching rows in enumeration order. Every
/// witness is recomputed from scratch before it is reported.
pub fn search(cfg: &SearchConfig) -> Result<SearchSummary> {
    cfg.validate()?;
    let subjects: Vec<Subject> = match cfg.source {
        Source::Braids => enumerate_braids(cfg)
            .chain(cfg.extra.iter().cloned())
            .map(Subject::Braid)
            .collect(),
        Source::Fronts => {
            let mut rng = seeded_rng(cfg.seed);
            (0..cfg.samples)
                .map(|_| {
                    Subject::Front(random_knot_front(
                        &mut rng,
                        cfg.max_crossings,
                        cfg.max_cusps,
                    ))
                })
                .collect()
        }
    };
    let shared = match &cfg.cache {
        Some(p) => Some(Arc::new(SharedCache::open(p)?)),
        None => SharedCache::from_env()?.map(Arc::new),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let examined = subjects.len();
    let results: Vec<(Option<BoundReport>, (u64, u64))> = pool.install(|| {
        subjects
            .par_iter()
            .map_init(
                || match &shared {
                    Some(s) => SkeinEngine::with_shared(s.clone()),
                    None => SkeinEngine::new(),
                },
                |engine, subject| {
                    let before = engine.stats();
                    let row = match subject {
                        Subject::Braid(b) if b.closure_components() == 1 => {
                            Some(mfw_check(engine, b))
                        }
                        Subject::Braid(_) => None,
                        Subject::Front(f) => {
                            Some(check_front_bounds(engine, f).expect("sampled fronts are knots"))
                        }
                    };
                    let after = engine.stats();
                    let hits =
                        (after.hits + after.shared_hits) - (before.hits + before.shared_hits);
                    let misses = after.misses - before.misses;
                    (row, (hits, misses))
                },
            )
            .collect()
    });
    let (mut hits, mut total) = (0u64, 0u64);
    let mut knots = 0;
    let mut rows = Vec::new();
    for (row, (h, m)) in results {
        hits += h;
        total += h + m;
        if let Some(r) = row {
            knots += 1;
            if keep(cfg.predicate, &r) {
                rows.push(r);
            }
        }
    }
    for r in rows.iter().filter(|r| r.witness) {
        let again = reverify(r);
        if again.as_ref() != Some(r) {
            return Err(Error::InvalidDiagram(format!(
                "witness {} did not reproduce on recomputation",
                r.id
            )));
        }
    }
    Ok(SearchSummary {
        examined,
        knots,
        rows,
        cache_hit_rate: if total == 0 {
            0.0
        } else {
            hits as f64 / total as f64
        },
    })
}

/// Recomputes a row without any cache.
fn reverify(r: &BoundReport) -> Option<BoundReport> {
    let mut engine = SkeinEngine::new();
    if let Ok(b) = r.id.parse::<BraidWord>() {
        return Some(mfw_check(&mut engine, &b));
    }
    let f: FrontWord = r.id.parse().ok()?;
    check_front_bounds(&mut engine, &f).ok()
}

/// Writes search rows in the configured format.
pub fn write_report<W: Write>(out: W, cfg: &SearchConfig, summary: &SearchSummary) -> Result<()> {
    let io = |e: std::io::Error| Error::Io {
        path: cfg.out.clone().unwrap_or_else(|| PathBuf::from("<stdout>")),
        source: e,
    };
    match cfg.format {
        Format::Csv => write_csv(out, &summary.rows).map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(e) => io(e),
            other => Error::Config(format!("csv: {other:?}")),
        }),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                config: &'a SearchConfig,
                examined: usize,
                knots: usize,
                rows: &'a [BoundReport],
            }
            let mut out = out;
            serde_json::to_writer_pretty(
                &mut out,
                &Doc {
                    config: cfg,
                    examined: summary.examined,
                    knots: summary.knots,
                    rows: &summary.rows,
                },
            )
            .map_err(|e| io(e.into()))?;
            writeln!(out).map_err(io)
        }
    }
}

/// Runs the search and writes the report to `cfg.out` (or standard output).
pub fn run_search(cfg: &SearchConfig) -> Result<SearchSummary> {
    let summary = search(cfg)?;
    match &cfg.out {
        Some(path) => {
            let file = File::create(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            let mut w = BufWriter::new(file);
            write_report(&mut w, cfg, &summary)?;
            w.flush().map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
        }
        None => write_report(std::io::stdout().lock(), cfg, &summary)?,
    }
    Ok(summary)
}

/// Closure diagrams of every enumerated braid word.
pub fn braid_corpus(cfg: &SearchConfig) -> Vec<(String, MorseDiagram)> {
    enumerate_braids(cfg)
        .map(|b| (b.to_string(), MorseDiagram::braid_closure(&b)))
        .collect()
}

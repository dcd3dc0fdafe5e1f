//! The Jaeger state sum, expressing the Kauffman polynomial through HOMFLY
//! polynomials of spliced diagrams, and its version for Legendrian fronts.
//!
//! Local pictures at a spliced crossing are described after rotating the
//! crossing so that it looks like a positive (kind `+1`) Morse crossing. A
//! vertical splice then leaves two arcs side by side and a horizontal splice
//! leaves a cap under a cup. Either splice is clockwise or counterclockwise
//! when both arcs are traversed as parts of one loop around the splice
//! point, and neither otherwise.

use std::collections::HashMap;

use serde::Serialize;

use crate::diagram::{Event, MorseDiagram};
use crate::front::{CuspCounts, FrontEvent, FrontWord};
use crate::laurent::{DeltaFraction, JaegerSide, LaurentPoly, Var};
use crate::skein::SkeinEngine;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rotation {
    Clockwise,
    Counterclockwise,
    Neither,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Splice {
    Unspliced,
    Vertical,
    Horizontal,
}

/// Which local pictures carry the nonzero weights `±(t - t^-1)` in the
/// diagram state sum.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct WeightTable {
    /// Whether pictures are read after rotating every crossing to kind `+1`
    /// (otherwise vertical and horizontal refer to the Morse frame as is).
    pub positive_frame: bool,
    pub vertical: Rotation,
    pub horizontal: Rotation,
    /// The vertical weight is `+(t - t^-1)` and the horizontal one
    /// `-(t - t^-1)`, or the other way round.
    pub vertical_positive: bool,
    /// Sign applied to the rotation number in the `(t a^-1)^r` prefactor.
    pub rotation_sign: i8,
}

pub const JAEGER_TABLE: WeightTable = WeightTable {
    positive_frame: true,
    vertical: Rotation::Counterclockwise,
    horizontal: Rotation::Clockwise,
    vertical_positive: true,
    rotation_sign: 1,
};

/// The picture that gets weight `t^-1 - t` when a front crossing is
/// replaced by two parallel arcs. The cusp pair weight needs a right cusp
/// traversed downward followed by a left cusp traversed upward.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct FrontTable {
    pub horizontal: Rotation,
}

pub const FRONT_TABLE: FrontTable = FrontTable {
    horizontal: Rotation::Clockwise,
};

/// Where a splice sits in the spliced Morse diagram.
#[derive(Clone, Copy, Debug)]
enum Site {
    /// Two parallel arcs at `level, level+1` after the first `slot` events.
    Pass { slot: usize, level: usize },
    /// A cap at event `cap` followed by a cup.
    Turn { cap: usize },
}

fn site_rotation(d: &MorseDiagram, layout: &crate::diagram::Layout, site: Site) -> Rotation {
    match site {
        Site::Pass { slot, level } => {
            let dirs = d.strand_directions(layout, slot);
            match (dirs[level], dirs[level + 1]) {
                (true, false) => Rotation::Clockwise,
                (false, true) => Rotation::Counterclockwise,
                _ => Rotation::Neither,
            }
        }
        Site::Turn { cap } => {
            let cap_lr = d.arc_left_to_right(layout, cap);
            let cup_lr = d.arc_left_to_right(layout, cap + 1);
            match (cap_lr, cup_lr) {
                (true, false) => Rotation::Counterclockwise,
                (false, true) => Rotation::Clockwise,
                _ => Rotation::Neither,
            }
        }
    }
}

fn delta() -> LaurentPoly {
    LaurentPoly::delta_t()
}

/// `(t a^-1)^k`.
fn t_over_a(k: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, k as i32, -(k as i32))
}

/// Iterates over all splice choices for `c` crossings in a fixed order.
fn choice_vectors(c: usize) -> impl Iterator<Item = Vec<Splice>> {
    const ALL: [Splice; 3] = [Splice::Unspliced, Splice::Horizontal, Splice::Vertical];
    (0..3usize.pow(c as u32)).map(move |mut code| {
        (0..c)
            .map(|_| {
                let s = ALL[code % 3];
                code /= 3;
                s
            })
            .collect()
    })
}

fn flip_vectors(k: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u64 << k).map(move |m| (0..k).map(|i| m >> i & 1 == 1).collect())
}

struct Spliced {
    events: Vec<Event>,
    // splice type in the table's frame, site and the crossing it came from
    sites: Vec<(Splice, Site)>,
}

fn splice_diagram(d: &MorseDiagram, choices: &[Splice], positive_frame: bool) -> Spliced {
    let mut events = Vec::with_capacity(d.events().len() + choices.len());
    let mut sites = Vec::new();
    let mut j = 0;
    for &ev in d.events() {
        let Event::Crossing(level, kind) = ev else {
            events.push(ev);
            continue;
        };
        let choice = choices[j];
        j += 1;
        let rotated = positive_frame && kind < 0;
        let morse_vertical = match choice {
            Splice::Unspliced => {
                events.push(ev);
                continue;
            }
            Splice::Vertical => !rotated,
            Splice::Horizontal => rotated,
        };
        if morse_vertical {
            sites.push((
                choice,
                Site::Pass {
                    slot: events.len(),
                    level: level as usize,
                },
            ));
        } else {
            sites.push((choice, Site::Turn { cap: events.len() }));
            events.extend([Event::Cap(level), Event::Cup(level)]);
        }
    }
    Spliced { events, sites }
}

fn local_weight(table: &WeightTable, splice: Splice, rotation: Rotation) -> LaurentPoly {
    let (target, positive) = match splice {
        Splice::Vertical => (table.vertical, table.vertical_positive),
        Splice::Horizontal => (table.horizontal, !table.vertical_positive),
        Splice::Unspliced => return LaurentPoly::one(),
    };
    if rotation != target {
        LaurentPoly::zero()
    } else if positive {
        delta()
    } else {
        -delta()
    }
}

/// One state of the diagram state sum.
#[derive(Clone, Debug)]
pub struct SpliceState {
    pub choices: Vec<Splice>,
    /// Orientation of the spliced diagram, relative to its default.
    pub flips: Vec<bool>,
    pub spliced: MorseDiagram,
    pub weight: LaurentPoly,
    pub r_sigma: i64,
    pub vertical: usize,
    pub horizontal: usize,
}

fn for_each_state(
    d: &MorseDiagram,
    table: &WeightTable,
    nonzero_only: bool,
    mut f: impl FnMut(SpliceState),
) {
    for choices in choice_vectors(d.crossing_count()) {
        let sp = splice_diagram(d, &choices, table.positive_frame);
        let base = MorseDiagram::new(sp.events).expect("splicing keeps diagrams valid");
        let vertical = choices.iter().filter(|&&c| c == Splice::Vertical).count();
        let horizontal = choices.iter().filter(|&&c| c == Splice::Horizontal).count();
        for flips in flip_vectors(base.components()) {
            let oriented = base.with_component_orientations(&flips);
            let layout = oriented.layout();
            let mut weight = LaurentPoly::one();
            for &(splice, site) in &sp.sites {
                let w = local_weight(table, splice, site_rotation(&oriented, &layout, site));
                weight = &weight * &w;
                if weight.is_zero() && nonzero_only {
                    break;
                }
            }
            if weight.is_zero() && nonzero_only {
                continue;
            }
            let r_sigma = oriented.stats_with(&layout).rotation;
            f(SpliceState {
                choices: choices.clone(),
                flips,
                spliced: oriented,
                weight,
                r_sigma,
                vertical,
                horizontal,
            });
        }
    }
}

/// Every state of the diagram, vanishing ones included.
pub fn enumerate_states(d: &MorseDiagram) -> Vec<SpliceState> {
    let mut out = Vec::new();
    for_each_state(d, &JAEGER_TABLE, false, |s| out.push(s));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct StateContribution {
    pub choices: Vec<Splice>,
    pub flips: Vec<bool>,
    pub r_sigma: i64,
    pub weight: LaurentPoly,
    pub value: DeltaFraction,
}

#[derive(Clone, Debug, Serialize)]
pub struct JaegerCertificate {
    pub lhs: DeltaFraction,
    pub rhs: DeltaFraction,
    pub equal: bool,
    pub contributions: Vec<StateContribution>,
}

/// Substituted HOMFLY values, memoized by oriented canonical code.
#[derive(Default)]
pub struct JaegerEngine {
    pub skein: SkeinEngine,
    substituted: HashMap<Vec<u8>, DeltaFraction>,
}

impl JaegerEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_skein(skein: SkeinEngine) -> Self {
        Self {
            skein,
            substituted: HashMap::new(),
        }
    }

    fn homfly_rhs(&mut self, d: &MorseDiagram) -> DeltaFraction {
        let code = d.canonical_code();
        if let Some(v) = self.substituted.get(&code) {
            return v.clone();
        }
        let v = self
            .skein
            .homfly(d)
            .substitute_jaeger(JaegerSide::HomflyRhs);
        self.substituted.insert(code, v.clone());
        v
    }

    /// Both sides of the diagram state sum under the given weight table.
    pub fn jaeger_with(&mut self, d: &MorseDiagram, table: &WeightTable) -> JaegerCertificate {
        let lhs = self
            .skein
            .kauffman(d)
            .substitute_jaeger(JaegerSide::KauffmanLhs);
        let mut contributions = Vec::new();
        for_each_state(d, table, true, |s| {
            let factor = &t_over_a(table.rotation_sign as i64 * s.r_sigma) * &s.weight;
            let value = self.homfly_rhs(&s.spliced).scale(&factor);
            contributions.push(StateContribution {
                choices: s.choices,
                flips: s.flips,
                r_sigma: s.r_sigma,
                weight: s.weight,
                value,
            });
        });
        let rhs: DeltaFraction = contributions.iter().map(|c| c.value.clone()).sum();
        JaegerCertificate {
            equal: lhs == rhs,
            lhs,
            rhs,
            contributions,
        }
    }

    pub fn jaeger(&mut self, d: &MorseDiagram) -> JaegerCertificate {
        self.jaeger_with(d, &JAEGER_TABLE)
    }

    /// Both sides of the front state sum.
    pub fn lj_with(&mut self, f: &FrontWord, table: &FrontTable) -> LjCertificate {
        let lhs = self
            .skein
            .kauffman(&f.morsify())
            .substitute_jaeger(JaegerSide::KauffmanLhs);
        let mut contributions = Vec::new();
        for_each_front_state(f, table, true, |s| {
            let factor = &LaurentPoly::monomial(
                1,
                -(s.cusps.prefactor_exponent() as i32),
                s.cusps.prefactor_exponent() as i32,
            ) * &s.weight;
            let value = self.homfly_rhs(&s.morsified).scale(&factor);
            contributions.push(FrontContribution {
                spliced: s.spliced.to_string(),
                choices: s.choices,
                flips: s.flips,
                cusps: s.cusps,
                vertical: s.vertical,
                horizontal: s.horizontal,
                weight: s.weight,
                value,
            });
        });
        let rhs: DeltaFraction = contributions.iter().map(|c| c.value.clone()).sum();
        LjCertificate {
            equal: lhs == rhs,
            lhs,
            rhs,
            contributions,
        }
    }

    pub fn lj(&mut self, f: &FrontWord) -> LjCertificate {
        self.lj_with(f, &FRONT_TABLE)
    }

    /// Minimum `a` degree of every nonvanishing front state contribution,
    /// with the bound from the cusp counts.
    pub fn lemma_check(&mut self, f: &FrontWord) -> LemmaReport {
        let cert = self.lj(f);
        let states: Vec<LemmaState> = cert
            .contributions
            .iter()
            .map(|c| {
                let mu = c.cusps.maslov();
                let bound = 2 * (c.cusps.left_up as i64 - c.vertical as i64) + mu.abs() - mu;
                let min_a_degree = c
                    .value
                    .numerator()
                    .min_degree(Var::A)
                    .expect("nonvanishing states have nonzero contributions")
                    as i64;
                LemmaState {
                    spliced: c.spliced.clone(),
                    min_a_degree,
                    bound,
                    vertical: c.vertical,
                    left_up: c.cusps.left_up,
                }
            })
            .collect();
        let holds = states
            .iter()
            .all(|s| s.min_a_degree >= 0 && s.min_a_degree >= s.bound && s.vertical <= s.left_up);
        LemmaReport { states, holds }
    }

    /// Checks the relations that turn the diagram state sum of the rounded
    /// front into the front state sum, state by state.
    pub fn proof_chain(&mut self, f: &FrontWord) -> ProofChainReport {
        let nu = (f.cusp_count() / 2) as i64;
        let rounded = f.rounded();
        let mut report = ProofChainReport {
            kauffman_relation: true,
            states: 0,
            failures: Vec::new(),
        };
        let kauffman_l = self
            .skein
            .kauffman(&f.morsify())
            .substitute_jaeger(JaegerSide::KauffmanLhs);
        let kauffman_k = self
            .skein
            .kauffman(&rounded)
            .substitute_jaeger(JaegerSide::KauffmanLhs);
        let a2_over_t = |k: i64| LaurentPoly::monomial(1, -(k as i32), 2 * k as i32);
        report.kauffman_relation = kauffman_l == kauffman_k.scale(&a2_over_t(nu));

        let mut states = Vec::new();
        for_each_front_state(f, &FRONT_TABLE, false, |s| states.push(s));
        for s in states {
            report.states += 1;
            let mut fail = |what: &str| report.failures.push(format!("{}: {what}", s.spliced));
            let nu_sigma = (s.spliced.cusp_count() / 2) as i64;
            let k_sigma = &s.rounded;
            let r_k = self.skein.homfly(k_sigma);
            let r_l = self.skein.homfly(&s.morsified);
            if r_k != r_l.shift(0, -(nu_sigma as i32)) {
                fail("R(K_s) != a^-nu_s R(l_s)");
            }
            if nu != nu_sigma - s.vertical as i64 {
                fail("nu != nu_s - V");
            }
            let r = k_sigma.rotation();
            if nu_sigma - r != s.cusps.prefactor_exponent() {
                fail("nu_s - r(K_s) != #left-up + #right-down");
            }
            // the same state read as a state of the rounded diagram
            let k_weight = diagram_weight_for_front_state(&s, &JAEGER_TABLE);
            let expected = if s.weight.is_zero() {
                LaurentPoly::zero()
            } else {
                let sign = if s.horizontal % 2 == 0 { 1 } else { -1 };
                delta()
                    .pow((s.vertical + s.horizontal) as u32)
                    .scale(&sign.into())
            };
            if k_weight != expected {
                fail("[K,s] != (-1)^H (t - t^-1)^(V+H)");
            }
            if !s.weight.is_zero() {
                let lj_term = self.homfly_rhs(&s.morsified).scale(
                    &(&LaurentPoly::monomial(
                        1,
                        -(s.cusps.prefactor_exponent() as i32),
                        s.cusps.prefactor_exponent() as i32,
                    ) * &s.weight),
                );
                let k_term = self
                    .homfly_rhs(k_sigma)
                    .scale(&(&t_over_a(r) * &k_weight))
                    .scale(&a2_over_t(nu));
                if lj_term != k_term {
                    fail("front term != (a^2 t^-1)^nu times diagram term");
                }
            }
        }
        report
    }
}

/// One state of the front state sum.
#[derive(Clone, Debug)]
pub struct FrontState {
    pub choices: Vec<Splice>,
    pub flips: Vec<bool>,
    pub spliced: FrontWord,
    pub rounded: MorseDiagram,
    pub morsified: MorseDiagram,
    pub cusps: CuspCounts,
    pub weight: LaurentPoly,
    pub vertical: usize,
    pub horizontal: usize,
    sites: Vec<(Splice, Site)>,
}

/// Front splices: `Horizontal` removes the crossing, `Vertical` replaces it
/// by a right cusp followed by a left cusp.
fn for_each_front_state(
    f: &FrontWord,
    table: &FrontTable,
    nonzero_only: bool,
    mut g: impl FnMut(FrontState),
) {
    for choices in choice_vectors(f.crossing_count()) {
        let mut events = Vec::with_capacity(f.events().len() + choices.len());
        let mut sites = Vec::new();
        let mut j = 0;
        for &ev in f.events() {
            let FrontEvent::Cross(level) = ev else {
                events.push(ev);
                continue;
            };
            let choice = choices[j];
            j += 1;
            match choice {
                Splice::Unspliced => events.push(ev),
                Splice::Horizontal => sites.push((
                    choice,
                    Site::Pass {
                        slot: events.len(),
                        level: level as usize,
                    },
                )),
                Splice::Vertical => {
                    sites.push((choice, Site::Turn { cap: events.len() }));
                    events.extend([FrontEvent::Right(level), FrontEvent::Left(level)]);
                }
            }
        }
        let spliced = FrontWord::new(events).expect("splicing keeps fronts closed");
        let vertical = choices.iter().filter(|&&c| c == Splice::Vertical).count();
        let horizontal = choices.iter().filter(|&&c| c == Splice::Horizontal).count();
        for flips in flip_vectors(spliced.components()) {
            let oriented = spliced.orient(&flips);
            let layout = oriented.rounded.layout();
            let mut weight = LaurentPoly::one();
            for &(splice, site) in &sites {
                let w = match (splice, site) {
                    (Splice::Horizontal, _) => {
                        if site_rotation(&oriented.rounded, &layout, site) == table.horizontal {
                            -delta()
                        } else {
                            LaurentPoly::zero()
                        }
                    }
                    (Splice::Vertical, Site::Turn { cap }) => {
                        let right_down = oriented.rounded.arc_left_to_right(&layout, cap);
                        let left_up = !oriented.rounded.arc_left_to_right(&layout, cap + 1);
                        if right_down && left_up {
                            // t a^-2 (t - t^-1)
                            &LaurentPoly::monomial(1, 1, -2) * &delta()
                        } else {
                            LaurentPoly::zero()
                        }
                    }
                    _ => unreachable!(),
                };
                weight = &weight * &w;
                if weight.is_zero() && nonzero_only {
                    break;
                }
            }
            if weight.is_zero() && nonzero_only {
                continue;
            }
            g(FrontState {
                choices: choices.clone(),
                flips,
                spliced: spliced.clone(),
                rounded: oriented.rounded,
                morsified: oriented.morsified,
                cusps: oriented.cusps,
                weight,
                vertical,
                horizontal,
                sites: sites.clone(),
            });
        }
    }
}

/// The diagram state weight of the rounded front under the same splices.
/// A front crossing is a kind `-1` Morse crossing, so in the positive frame
/// removing it is a horizontal splice and the cusp pair is a vertical one.
fn diagram_weight_for_front_state(s: &FrontState, table: &WeightTable) -> LaurentPoly {
    let layout = s.rounded.layout();
    let mut weight = LaurentPoly::one();
    for &(splice, site) in &s.sites {
        let framed = if table.positive_frame {
            splice
        } else {
            match splice {
                Splice::Vertical => Splice::Horizontal,
                Splice::Horizontal => Splice::Vertical,
                Splice::Unspliced => Splice::Unspliced,
            }
        };
        let rot = site_rotation(&s.rounded, &layout, site);
        weight = &weight * &local_weight(table, framed, rot);
    }
    weight
}

#[derive(Clone, Debug, Serialize)]
pub struct FrontContribution {
    pub spliced: String,
    pub choices: Vec<Splice>,
    pub flips: Vec<bool>,
    pub cusps: CuspCounts,
    pub vertical: usize,
    pub horizontal: usize,
    pub weight: LaurentPoly,
    pub value: DeltaFraction,
}

#[derive(Clone, Debug, Serialize)]
pub struct LjCertificate {
    pub lhs: DeltaFraction,
    pub rhs: DeltaFraction,
    pub equal: bool,
    pub contributions: Vec<FrontContribution>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaState {
    pub spliced: String,
    pub min_a_degree: i64,
    pub bound: i64,
    pub vertical: usize,
    pub left_up: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub states: Vec<LemmaState>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofChainReport {
    pub kauffman_relation: bool,
    pub states: usize,
    pub failures: Vec<String>,
}

impl ProofChainReport {
    pub fn holds(&self) -> bool {
        self.kauffman_relation && self.failures.is_empty()
    }
}

pub fn jaeger_both_sides(d: &MorseDiagram) -> JaegerCertificate {
    JaegerEngine::new().jaeger(d)
}

pub fn lj_both_sides(f: &FrontWord) -> LjCertificate {
    JaegerEngine::new().lj(f)
}

pub fn lemma_check(f: &FrontWord) -> LemmaReport {
    JaegerEngine::new().lemma_check(f)
}

/// Every weight table considered when fixing [`JAEGER_TABLE`].
pub fn candidate_tables() -> Vec<WeightTable> {
    use Rotation::*;
    let mut out = Vec::new();
    for positive_frame in [true, false] {
        for vertical in [Clockwise, Counterclockwise, Neither] {
            for horizontal in [Clockwise, Counterclockwise, Neither] {
                for vertical_positive in [true, false] {
                    for rotation_sign in [1, -1] {
                        out.push(WeightTable {
                            positive_frame,
                            vertical,
                            horizontal,
                            vertical_positive,
                            rotation_sign,
                        });
                    }
                }
            }
        }
    }
    out
}

pub fn candidate_front_tables() -> Vec<FrontTable> {
    [
        Rotation::Clockwise,
        Rotation::Counterclockwise,
        Rotation::Neither,
    ]
    .into_iter()
    .map(|horizontal| FrontTable { horizontal })
    .collect()
}

/// A front with the exact list of state contributions it must produce.
pub struct FrontExpectation {
    pub front: FrontWord,
    pub terms: Vec<DeltaFraction>,
}

/// Outcome of testing one candidate table.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateOutcome<T> {
    pub table: T,
    /// First input on which the candidate fails, if any.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelectionReport {
    pub diagrams_checked: usize,
    pub fronts_checked: usize,
    pub diagram_tables: Vec<CandidateOutcome<WeightTable>>,
    pub front_tables: Vec<CandidateOutcome<FrontTable>>,
}

fn same_multiset(a: &[DeltaFraction], b: &[DeltaFraction]) -> bool {
    let mut rest: Vec<&DeltaFraction> = b.iter().collect();
    a.len() == b.len()
        && a.iter().all(|x| match rest.iter().position(|y| *y == x) {
            Some(i) => {
                rest.swap_remove(i);
                true
            }
            None => false,
        })
}

impl SelectionReport {
    pub fn surviving_diagram_tables(&self) -> Vec<WeightTable> {
        self.diagram_tables
            .iter()
            .filter(|c| c.failure.is_none())
            .map(|c| c.table)
            .collect()
    }

    pub fn surviving_front_tables(&self) -> Vec<FrontTable> {
        self.front_tables
            .iter()
            .filter(|c| c.failure.is_none())
            .map(|c| c.table)
            .collect()
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "weight table selection over {} diagrams and {} fronts\n\ndiagram tables\n",
            self.diagrams_checked, self.fronts_checked
        );
        let show = |r: Rotation| match r {
            Rotation::Clockwise => "cw",
            Rotation::Counterclockwise => "ccw",
            Rotation::Neither => "other",
        };
        for c in &self.diagram_tables {
            let t = c.table;
            s += &format!(
                "frame={} vertical={} horizontal={} positive={} r_sign={:+} : {}\n",
                if t.positive_frame {
                    "positive"
                } else {
                    "morse"
                },
                show(t.vertical),
                show(t.horizontal),
                if t.vertical_positive {
                    "vertical"
                } else {
                    "horizontal"
                },
                t.rotation_sign,
                c.failure.as_deref().unwrap_or("survives")
            );
        }
        s += "\nfront tables\n";
        for c in &self.front_tables {
            s += &format!(
                "horizontal={} : {}\n",
                show(c.table.horizontal),
                c.failure.as_deref().unwrap_or("survives")
            );
        }
        s += "\nsurvivors related by reversing every orientation give identical sums;\n";
        s += "the frozen table is the one with the prefactor (t a^-1)^r, r counterclockwise positive\n";
        s
    }
}

/// Tests every candidate table against the identity on `diagrams` and
/// against `fronts`, both the identity and the expected term lists.
pub fn select_tables(
    diagrams: &[(String, MorseDiagram)],
    fronts: &[FrontExpectation],
) -> SelectionReport {
    use rayon::prelude::*;
    let diagram_tables = candidate_tables()
        .into_par_iter()
        .map(|table| {
            let mut engine = JaegerEngine::new();
            let failure = diagrams
                .iter()
                .find(|(_, d)| !engine.jaeger_with(d, &table).equal)
                .map(|(name, _)| format!("fails on {name}"));
            CandidateOutcome { table, failure }
        })
        .collect();
    let front_tables = candidate_front_tables()
        .into_par_iter()
        .map(|table| {
            let mut engine = JaegerEngine::new();
            let failure = fronts.iter().find_map(|e| {
                let cert = engine.lj_with(&e.front, &table);
                let got: Vec<DeltaFraction> =
                    cert.contributions.iter().map(|c| c.value.clone()).collect();
                if !cert.equal {
                    Some(format!("identity fails on {}", e.front))
                } else if !e.terms.is_empty() && !same_multiset(&got, &e.terms) {
                    Some(format!("terms differ on {}", e.front))
                } else {
                    None
                }
            });
            CandidateOutcome { table, failure }
        })
        .collect();
    SelectionReport {
        diagrams_checked: diagrams.len(),
        fronts_checked: fronts.len(),
        diagram_tables,
        front_tables,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::front::enumerate_fronts;

    fn closure(s: &str) -> MorseDiagram {
        MorseDiagram::braid_closure(&s.parse::<BraidWord>().unwrap())
    }

    fn infinity_curve() -> MorseDiagram {
        MorseDiagram::new(vec![Event::Cup(0), Event::Crossing(0, -1), Event::Cap(0)]).unwrap()
    }

    #[test]
    fn unknot_states() {
        let states = enumerate_states(&closure("braid 1:"));
        assert_eq!(states.len(), 2);
        assert!(states.iter().all(|s| s.weight == LaurentPoly::one()));
        let mut r: Vec<i64> = states.iter().map(|s| s.r_sigma).collect();
        r.sort();
        assert_eq!(r, [-1, 1]);
        assert!(jaeger_both_sides(&closure("braid 1:")).equal);
    }

    #[test]
    fn infinity_curve_states() {
        for d in [infinity_curve(), infinity_curve().mirror()] {
            let all = enumerate_states(&d);
            // keep, vertical, horizontal; each with every orientation
            assert_eq!(all.len(), 2 + 2 + 4);
            let cert = jaeger_both_sides(&d);
            assert_eq!(cert.contributions.len(), 4);
            let kept: Vec<i64> = cert
                .contributions
                .iter()
                .filter(|c| c.choices == [Splice::Unspliced])
                .map(|c| c.r_sigma)
                .collect();
            assert_eq!(kept, [0, 0]);
            assert!(cert.equal);
            let curl = LaurentPoly::kauffman_circle().shift(0, d.writhe() as i32);
            assert_eq!(cert.lhs, curl.substitute_jaeger(JaegerSide::KauffmanLhs));
        }
    }

    #[test]
    fn identity_on_small_braids() {
        let mut engine = JaegerEngine::new();
        for s in [
            "braid 2: 1 1 1",
            "braid 2: -1 -1 -1",
            "braid 2: 1 1",
            "braid 3: 1 -2 1 -2",
            "braid 3: 1 1 2",
        ] {
            assert!(engine.jaeger(&closure(s)).equal, "{s}");
        }
    }

    #[test]
    fn proof_chain_on_small_fronts() {
        let mut engine = JaegerEngine::new();
        for f in enumerate_fronts(4, 2) {
            let report = engine.proof_chain(&f);
            assert!(report.holds(), "{f}: {:?}", report.failures);
            assert!(engine.lj(&f).equal, "{f}");
        }
    }

    #[test]
    fn saucer_lemma() {
        let report = lemma_check(&"front: L 1; R 1".parse().unwrap());
        let mut degrees: Vec<i64> = report.states.iter().map(|s| s.min_a_degree).collect();
        degrees.sort();
        assert_eq!(degrees, [0, 2]);
        assert!(report.holds);
    }

    #[test]
    fn selection_table_survives_small_inputs() {
        let diagrams = vec![
            ("infinity".to_string(), infinity_curve()),
            ("trefoil".into(), closure("braid 2: 1 1 1")),
        ];
        let report = select_tables(&diagrams, &[]);
        assert!(report.surviving_diagram_tables().contains(&JAEGER_TABLE));
        assert!(report.surviving_front_tables().contains(&FRONT_TABLE));
    }
}

//! Regular-isotopy HOMFLY (`R`) and Dubrovnik/Kauffman (`D`) polynomials by
//! skein recursion over Morse diagrams.
//!
//! Both polynomials are computed by the descending-diagram method: the
//! components are walked in order from their first cups, and the first
//! crossing met on its under strand is rewritten with the skein relation.
//! The switched diagram is strictly closer to descending and the smoothed
//! diagrams have one crossing fewer. A descending diagram is an unlink with
//! curls and evaluates to `a^w * circle^k`.
//!
//! Before each lookup the diagram is planar-reduced (isolated circles,
//! zigzags, cancelling crossing pairs, curls) and split at waists of width
//! 0 (disjoint union, values multiply) or 2 (connected sum, values multiply
//! and divide by the circle value).

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::cache::SharedCache;
use crate::diagram::{Event, MorseDiagram, Surgery};
use crate::laurent::{LaurentPoly, Var};

/// Which polynomial a computation targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Poly {
    Homfly,
    Kauffman,
}

impl Poly {
    fn circle(self) -> LaurentPoly {
        match self {
            Poly::Homfly => LaurentPoly::homfly_circle(),
            Poly::Kauffman => LaurentPoly::kauffman_circle(),
        }
    }

    pub fn tag(self) -> char {
        match self {
            Poly::Homfly => 'R',
            Poly::Kauffman => 'D',
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub shared_hits: u64,
}

impl CacheStats {
    pub fn hit_rate(&self) -> f64 {
        let total = self.hits + self.shared_hits + self.misses;
        if total == 0 {
            0.0
        } else {
            (self.hits + self.shared_hits) as f64 / total as f64
        }
    }
}

/// Invariants of a diagram derived from `R` and `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeinResult {
    #[serde(rename = "R")]
    pub r: LaurentPoly,
    #[serde(rename = "D")]
    pub d: LaurentPoly,
    #[serde(rename = "P")]
    pub p: LaurentPoly,
    #[serde(rename = "Y")]
    pub y: LaurentPoly,
    #[serde(rename = "e_P")]
    pub e_p: i32,
    #[serde(rename = "e_Y")]
    pub e_y: i32,
    pub w: i64,
}

/// Memoizing evaluator. One engine per thread; engines may share a
/// [`SharedCache`].
#[derive(Default)]
pub struct SkeinEngine {
    memo: HashMap<(Poly, Vec<u8>), LaurentPoly>,
    shared: Option<Arc<SharedCache>>,
    stats: CacheStats,
}

impl SkeinEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_shared(shared: Arc<SharedCache>) -> Self {
        Self {
            shared: Some(shared),
            ..Self::default()
        }
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn homfly(&mut self, d: &MorseDiagram) -> LaurentPoly {
        self.eval(Poly::Homfly, d)
    }

    pub fn kauffman(&mut self, d: &MorseDiagram) -> LaurentPoly {
        self.eval(Poly::Kauffman, d)
    }

    pub fn invariants(&mut self, d: &MorseDiagram) -> SkeinResult {
        let r = self.homfly(d);
        let dk = self.kauffman(d);
        let w = d.writhe();
        let shift = -i32::try_from(w).expect("writhe fits in i32");
        let p = r.shift(0, shift);
        let y = dk.shift(0, shift);
        let e_p = p.min_degree(Var::A).expect("R is never zero");
        let e_y = y.min_degree(Var::A).expect("D is never zero");
        SkeinResult {
            r,
            d: dk,
            p,
            y,
            e_p,
            e_y,
            w,
        }
    }

    pub fn eval(&mut self, which: Poly, d: &MorseDiagram) -> LaurentPoly {
        let (reduced, red) = d.planar_reduce();
        let mut value = self.eval_reduced(which, &reduced);
        if red.circles > 0 {
            value = &value * &which.circle().pow(red.circles);
        }
        value.shift(0, red.writhe as i32)
    }

    fn key(which: Poly, d: &MorseDiagram) -> Vec<u8> {
        match which {
            Poly::Homfly => d.canonical_code(),
            Poly::Kauffman => d.unoriented_code(),
        }
    }

    fn eval_reduced(&mut self, which: Poly, d: &MorseDiagram) -> LaurentPoly {
        if d.events().is_empty() {
            return LaurentPoly::one();
        }
        let key = (which, Self::key(which, d));
        if let Some(v) = self.memo.get(&key) {
            self.stats.hits += 1;
            return v.clone();
        }
        if let Some(v) = self.shared.as_ref().and_then(|s| s.get(which, &key.1)) {
            self.stats.shared_hits += 1;
            self.memo.insert(key, v.clone());
            return v;
        }
        self.stats.misses += 1;
        let value = self.compute(which, d);
        if let Some(s) = &self.shared {
            s.insert(which, &key.1, &value);
        }
        self.memo.insert(key, value.clone());
        value
    }

    fn compute(&mut self, which: Poly, d: &MorseDiagram) -> LaurentPoly {
        if let Some((index, strands)) = pick_waist(d) {
            let (lower, upper) = d.split_at(index, strands);
            let product = &self.eval(which, &lower) * &self.eval(which, &upper);
            return if strands == 0 {
                product
            } else {
                product
                    .exact_div(&which.circle())
                    .expect("connected-sum product is divisible by the circle value")
            };
        }
        let layout = d.layout();
        let Some(bad) = d.first_undercrossing(&layout) else {
            let stats = d.stats_with(&layout);
            return which
                .circle()
                .pow(stats.components as u32)
                .shift(0, stats.writhe as i32);
        };
        let switched = d.surgery_at_event(bad.event, Surgery::Switch);
        let z = LaurentPoly::monomial(1, 1, 0);
        match which {
            Poly::Homfly => {
                // R(L+) - R(L-) = z R(L0)
                let smoothed = d.surgery_at_event(bad.event, Surgery::SmoothOriented);
                let rest = &z * &self.eval(which, &smoothed);
                let base = self.eval(which, &switched);
                if bad.sign > 0 {
                    &base + &rest
                } else {
                    &base - &rest
                }
            }
            Poly::Kauffman => {
                // D(X+) - D(X-) = z (D(vertical) - D(horizontal)), X+ in the
                // braid convention of the Morse frame
                let Event::Crossing(_, kind) = d.events()[bad.event] else {
                    unreachable!()
                };
                let v = d.surgery_at_event(bad.event, Surgery::SmoothVertical);
                let h = d.surgery_at_event(bad.event, Surgery::SmoothHorizontal);
                let diff = &self.eval(which, &v) - &self.eval(which, &h);
                let base = self.eval(which, &switched);
                let rest = &z * &diff;
                if kind > 0 {
                    &base + &rest
                } else {
                    &base - &rest
                }
            }
        }
    }
}

/// The waist splitting the crossings most evenly, if any.
fn pick_waist(d: &MorseDiagram) -> Option<(usize, usize)> {
    let total = d.crossing_count();
    let events = d.events();
    let below = |idx: usize| {
        events[..idx]
            .iter()
            .filter(|e| matches!(e, Event::Crossing(..)))
            .count()
    };
    d.waists()
        .into_iter()
        // a 2-strand waist with no crossing on one side splits off nothing
        .filter(|&(idx, strands)| strands == 0 || (below(idx) > 0 && below(idx) < total))
        .min_by_key(|&(idx, _)| (2 * below(idx)).abs_diff(total))
}

/// `R` of a diagram with a fresh engine.
pub fn homfly_r(d: &MorseDiagram) -> LaurentPoly {
    SkeinEngine::new().homfly(d)
}

/// `D` of a diagram with a fresh engine.
pub fn kauffman_d(d: &MorseDiagram) -> LaurentPoly {
    SkeinEngine::new().kauffman(d)
}

pub fn full_invariants(d: &MorseDiagram) -> SkeinResult {
    SkeinEngine::new().invariants(d)
}

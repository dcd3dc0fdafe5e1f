//! Legendrian fronts as words of cusps and crossings.
//!
//! A front is read left to right along the `q` axis. Strands at a given `q`
//! are numbered from the top, starting at 0 internally and at 1 in text:
//!
//! * `L i` is a left cusp creating strands `i, i+1`;
//! * `R i` is a right cusp joining strands `i, i+1`;
//! * `X i` is a crossing of strands `i, i+1`.
//!
//! Turning the `(q, u)` plane a quarter turn counterclockwise puts `q` on the
//! vertical axis and strand `i` at Morse position `i`, so a front word maps
//! event by event onto a [`MorseDiagram`]. The quarter turn preserves the
//! sense of rotation, so rotation numbers need no correction.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::{Event, MorseDiagram};
use crate::error::{Error, Result};

/// Crossing kind produced by a front crossing after the quarter turn.
pub const FRONT_CROSSING_KIND: i8 = -1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FrontEvent {
    Left(u32),
    Right(u32),
    Cross(u32),
}

impl FrontEvent {
    pub fn level(self) -> u32 {
        match self {
            FrontEvent::Left(l) | FrontEvent::Right(l) | FrontEvent::Cross(l) => l,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FrontWord {
    events: Vec<FrontEvent>,
}

/// `tb`, `mu` and size data of an oriented front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LegendrianInvariants {
    pub tb: i64,
    #[serde(rename = "mu")]
    pub maslov: i64,
    pub cusp_count: usize,
    pub crossing_count: usize,
}

/// Cusps sorted by the direction they point and the direction they are
/// traversed in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CuspCounts {
    pub left_up: usize,
    pub left_down: usize,
    pub right_up: usize,
    pub right_down: usize,
}

impl CuspCounts {
    pub fn maslov(&self) -> i64 {
        self.left_up as i64 - self.right_down as i64
    }

    /// The exponent of the `(a t^-1)` prefactor in the front state sum.
    pub fn prefactor_exponent(&self) -> i64 {
        (self.left_up + self.right_down) as i64
    }
}

/// A front with a chosen orientation. `rounded` replaces every cusp by a
/// plain cup or cap; `morsified` adds the curl at right cusps.
#[derive(Clone, Debug)]
pub struct OrientedFront {
    pub front: FrontWord,
    pub rounded: MorseDiagram,
    pub morsified: MorseDiagram,
    pub cusps: CuspCounts,
}

impl FrontWord {
    pub fn new(events: Vec<FrontEvent>) -> Result<Self> {
        let mut k = 0u32;
        for (i, ev) in events.iter().enumerate() {
            let bad = |message: String| Error::Parse {
                position: i + 1,
                message,
            };
            match *ev {
                FrontEvent::Left(l) => {
                    if l > k {
                        return Err(bad(format!(
                            "left cusp at level {} with {k} strands",
                            l + 1
                        )));
                    }
                    k += 2;
                }
                FrontEvent::Right(l) | FrontEvent::Cross(l) => {
                    if l + 2 > k {
                        return Err(bad(format!(
                            "level {} needs two strands below it, {k} present",
                            l + 1
                        )));
                    }
                    if matches!(ev, FrontEvent::Right(_)) {
                        k -= 2;
                    }
                }
            }
        }
        if events.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty front".into(),
            });
        }
        if k != 0 {
            return Err(Error::Parse {
                position: events.len(),
                message: format!("front is not closed: {k} strands left open"),
            });
        }
        Ok(Self { events })
    }

    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    pub fn crossing_count(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, FrontEvent::Cross(_)))
            .count()
    }

    pub fn cusp_count(&self) -> usize {
        self.events.len() - self.crossing_count()
    }

    /// Event indices of the crossings.
    pub fn crossing_events(&self) -> Vec<usize> {
        (0..self.events.len())
            .filter(|&i| matches!(self.events[i], FrontEvent::Cross(_)))
            .collect()
    }

    fn morse_events(&self, curls: bool) -> Vec<Event> {
        let mut out = Vec::with_capacity(self.events.len() * 2);
        for ev in &self.events {
            match *ev {
                FrontEvent::Left(l) => out.push(Event::Cup(l)),
                FrontEvent::Right(l) => {
                    if curls {
                        out.push(Event::Crossing(l, FRONT_CROSSING_KIND));
                    }
                    out.push(Event::Cap(l));
                }
                FrontEvent::Cross(l) => out.push(Event::Crossing(l, FRONT_CROSSING_KIND)),
            }
        }
        out
    }

    /// The diagram with cusps rounded off (no curls), in default orientation.
    pub fn rounded(&self) -> MorseDiagram {
        self.orient(&[]).rounded
    }

    /// The morsification, in the default orientation.
    pub fn morsify(&self) -> MorseDiagram {
        self.orient(&[]).morsified
    }

    pub fn components(&self) -> usize {
        self.rounded().components()
    }

    /// Orients the front. By default each component is traversed starting at
    /// its first left cusp along the upper branch; `flips[k]` reverses
    /// component `k` (components in order of first left cusp).
    pub fn orient(&self, flips: &[bool]) -> OrientedFront {
        let base = MorseDiagram::new(self.morse_events(false))
            .expect("closed fronts give valid diagrams")
            .reversed();
        let layout = base.layout();
        let mut bits = base.orientation_bits().to_vec();
        for (i, ev) in base.events().iter().enumerate() {
            if matches!(ev, Event::Cup(_))
                && flips.get(base.component_of(&layout, i)) == Some(&true)
            {
                bits[i] = !bits[i];
            }
        }
        let rounded = MorseDiagram::with_orientation(base.events().to_vec(), bits, false)
            .expect("component flips keep orientations consistent");
        self.finish(rounded)
    }

    /// Orients the front to match the cup bits of a rounded diagram.
    pub(crate) fn finish(&self, rounded: MorseDiagram) -> OrientedFront {
        let layout = rounded.layout();
        let mut cusps = CuspCounts::default();
        let mut morse_bits = Vec::with_capacity(self.events.len() * 2);
        for (i, ev) in self.events.iter().enumerate() {
            match ev {
                FrontEvent::Left(_) => {
                    // right to left across a cup is lower branch to upper
                    let lr = rounded.arc_left_to_right(&layout, i);
                    if lr {
                        cusps.left_down += 1;
                    } else {
                        cusps.left_up += 1;
                    }
                    morse_bits.push(lr);
                }
                FrontEvent::Right(_) => {
                    if rounded.arc_left_to_right(&layout, i) {
                        cusps.right_down += 1;
                    } else {
                        cusps.right_up += 1;
                    }
                    morse_bits.extend([false, false]);
                }
                FrontEvent::Cross(_) => morse_bits.push(false),
            }
        }
        let morsified = MorseDiagram::with_orientation(self.morse_events(true), morse_bits, false)
            .expect("curls do not change the cup orientations");
        OrientedFront {
            front: self.clone(),
            rounded,
            morsified,
            cusps,
        }
    }

    /// `tb` and `mu` in the default orientation.
    pub fn classical_invariants(&self) -> LegendrianInvariants {
        self.orient(&[]).invariants()
    }

    /// Stabilization: a zigzag inserted on the top strand right after the
    /// first event (which is always a left cusp at level 1).
    pub fn stabilized(&self, down: bool) -> Self {
        let mut events = self.events.clone();
        let zig: [FrontEvent; 2] = if down {
            // new cusps on the lower branch of the first strand pair
            [FrontEvent::Left(1), FrontEvent::Right(2)]
        } else {
            [FrontEvent::Left(0), FrontEvent::Right(1)]
        };
        events.splice(1..1, zig);
        Self { events }
    }
}

/// Every closed front word with at most `max_cusps` cusps and
/// `max_crossings` crossings, in a fixed order.
pub fn enumerate_fronts(max_cusps: usize, max_crossings: usize) -> Vec<FrontWord> {
    fn go(
        prefix: &mut Vec<FrontEvent>,
        open: u32,
        lefts: usize,
        crossings: usize,
        limits: (usize, usize),
        out: &mut Vec<FrontWord>,
    ) {
        if open == 0 && !prefix.is_empty() {
            out.push(FrontWord {
                events: prefix.clone(),
            });
        }
        // every remaining open strand pair still needs a right cusp
        if 2 * lefts < limits.0 {
            for l in 0..=open {
                prefix.push(FrontEvent::Left(l));
                go(prefix, open + 2, lefts + 1, crossings, limits, out);
                prefix.pop();
            }
        }
        if open >= 2 {
            for l in 0..open - 1 {
                prefix.push(FrontEvent::Right(l));
                go(prefix, open - 2, lefts, crossings, limits, out);
                prefix.pop();
            }
            if crossings < limits.1 {
                for l in 0..open - 1 {
                    prefix.push(FrontEvent::Cross(l));
                    go(prefix, open, lefts, crossings + 1, limits, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(
        &mut Vec::new(),
        0,
        0,
        0,
        (max_cusps, max_crossings),
        &mut out,
    );
    out
}

impl OrientedFront {
    pub fn invariants(&self) -> LegendrianInvariants {
        let stats = self.morsified.stats();
        LegendrianInvariants {
            tb: -stats.writhe,
            maslov: -stats.rotation,
            cusp_count: self.front.cusp_count(),
            crossing_count: self.front.crossing_count(),
        }
    }
}

impl FromStr for FrontWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix("front")
            .and_then(|r| r.trim_start().strip_prefix(':'))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: "expected `front: <events>`".into(),
            })?;
        let mut items: Vec<&str> = body.split(';').collect();
        if items.len() > 1 && items.last().is_some_and(|t| t.trim().is_empty()) {
            items.pop();
        }
        let mut events = Vec::new();
        for (i, item) in items.into_iter().enumerate() {
            let bad = |message: String| Error::Parse {
                position: i + 1,
                message,
            };
            let mut toks = item.split_whitespace();
            let (Some(kind), Some(level), None) = (toks.next(), toks.next(), toks.next()) else {
                return Err(bad(format!(
                    "expected `L|R|X <level>`, found `{}`",
                    item.trim()
                )));
            };
            let level: u32 = level
                .parse()
                .ok()
                .filter(|&l| l >= 1)
                .ok_or_else(|| bad(format!("bad level `{level}`")))?;
            let level = level - 1;
            events.push(match kind {
                "L" => FrontEvent::Left(level),
                "R" => FrontEvent::Right(level),
                "X" => FrontEvent::Cross(level),
                other => return Err(bad(format!("unknown event `{other}`"))),
            });
        }
        Self::new(events)
    }
}

impl fmt::Display for FrontWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "front:")?;
        for (i, ev) in self.events.iter().enumerate() {
            let sep = if i == 0 { " " } else { "; " };
            let (c, l) = match *ev {
                FrontEvent::Left(l) => ('L', l),
                FrontEvent::Right(l) => ('R', l),
                FrontEvent::Cross(l) => ('X', l),
            };
            write!(f, "{sep}{c} {}", l + 1)?;
        }
        Ok(())
    }
}

impl Serialize for FrontWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let events: Vec<(&str, u32)> = self
            .events
            .iter()
            .map(|e| match *e {
                FrontEvent::Left(l) => ("L", l + 1),
                FrontEvent::Right(l) => ("R", l + 1),
                FrontEvent::Cross(l) => ("X", l + 1),
            })
            .collect();
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("events", &events)?;
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::skein::{homfly_r, kauffman_d};

    fn front(s: &str) -> FrontWord {
        s.parse().unwrap()
    }

    fn same_r(a: &str, b: &str) {
        assert_eq!(
            homfly_r(&front(a).morsify()),
            homfly_r(&front(b).morsify()),
            "{a} vs {b}"
        );
        assert_eq!(
            kauffman_d(&front(a).morsify()),
            kauffman_d(&front(b).morsify()),
            "{a} vs {b}"
        );
    }

    #[test]
    fn parse_and_display() {
        let f = front("front: L 1; X 1; R 1");
        assert_eq!(
            f.events(),
            &[
                FrontEvent::Left(0),
                FrontEvent::Cross(0),
                FrontEvent::Right(0)
            ]
        );
        assert_eq!(f.to_string(), "front: L 1; X 1; R 1");
        assert_eq!(front(&f.to_string()), f);
        assert_eq!(front("  front :L 1 ;R 1;  "), front("front: L 1; R 1"));
        for bad in [
            "L 1; R 1",
            "front:",
            "front: L 1; X 1",
            "front: R 1",
            "front: L 2; R 1",
            "front: L 0; R 0",
            "front: Q 1",
            "front: L 1 2; R 1",
            "front: L 1; X 2; R 1",
        ] {
            assert!(bad.parse::<FrontWord>().is_err(), "{bad}");
        }
    }

    #[test]
    fn flying_saucer() {
        let f = front("front: L 1; R 1");
        let o = f.orient(&[]);
        assert_eq!(o.morsified.writhe(), 1);
        let inv = o.invariants();
        assert_eq!(
            (inv.tb, inv.maslov, inv.cusp_count, inv.crossing_count),
            (-1, 0, 2, 0)
        );
        assert_eq!(
            homfly_r(&o.morsified),
            LaurentPoly::from_terms(&[(1, -1, 2), (-1, -1, 0)])
        );
        assert_eq!(
            kauffman_d(&o.morsified),
            LaurentPoly::from_terms(&[(1, 0, 1), (1, -1, 2), (-1, -1, 0)])
        );
        assert_eq!(homfly_r(&o.rounded), LaurentPoly::homfly_circle());
    }

    #[test]
    fn one_crossing_front() {
        let f = front("front: L 1; X 1; R 1");
        assert_eq!(f.components(), 1);
        let o = f.orient(&[]);
        assert_eq!(o.morsified.writhe(), 2);
        let inv = o.invariants();
        assert_eq!((inv.tb, inv.maslov.abs()), (-2, 1));
        assert_eq!(
            homfly_r(&o.morsified),
            LaurentPoly::from_terms(&[(1, -1, 3), (-1, -1, 1)])
        );
        assert_eq!(
            kauffman_d(&o.morsified),
            LaurentPoly::from_terms(&[(1, 0, 2), (1, -1, 3), (-1, -1, 1)])
        );
    }

    #[test]
    fn cusp_classes_under_reversal() {
        for (text, exps) in [
            ("front: L 1; R 1", [0, 2]),
            ("front: L 1; X 1; R 1", [1, 1]),
        ] {
            let f = front(text);
            let (a, b) = (f.orient(&[]), f.orient(&[true]));
            let mut got = [a.cusps.prefactor_exponent(), b.cusps.prefactor_exponent()];
            got.sort();
            assert_eq!(got, exps, "{text}");
            assert_eq!(a.cusps.left_up, b.cusps.left_down);
            assert_eq!(a.cusps.left_down, b.cusps.left_up);
            assert_eq!(a.cusps.right_up, b.cusps.right_down);
            assert_eq!(a.cusps.right_down, b.cusps.right_up);
            assert_eq!(a.invariants().tb, b.invariants().tb);
            assert_eq!(a.invariants().maslov, -b.invariants().maslov);
        }
    }

    #[test]
    fn maslov_from_cusps_matches_rotation() {
        let fronts = enumerate_fronts(4, 2);
        assert!(fronts.len() > 50);
        for f in fronts {
            let k = f.components();
            for mask in 0..1u32 << k {
                let flips: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
                let o = f.orient(&flips);
                assert_eq!(o.cusps.maslov(), o.invariants().maslov, "{f} {flips:?}");
                let c = o.cusps;
                assert_eq!(
                    c.left_up + c.left_down + c.right_up + c.right_down,
                    f.cusp_count()
                );
            }
        }
    }

    #[test]
    fn stabilization_shifts_tb_and_mu() {
        for text in [
            "front: L 1; R 1",
            "front: L 1; X 1; R 1",
            "front: L 1; X 1; X 1; X 1; R 1",
        ] {
            let f = front(text);
            let inv = f.classical_invariants();
            let mut shifts: Vec<i64> = [false, true]
                .iter()
                .map(|&down| {
                    let s = f.stabilized(down).classical_invariants();
                    assert_eq!(s.tb, inv.tb - 1, "{text}");
                    s.maslov - inv.maslov
                })
                .collect();
            shifts.sort();
            assert_eq!(shifts, [-1, 1], "{text}");
        }
    }

    #[test]
    fn legendrian_moves_preserve_polynomials() {
        // kinks on the top and bottom strand
        same_r("front: L 1; L 2; X 1; R 2; R 1", "front: L 1; R 1");
        same_r("front: L 1; L 2; X 3; R 2; R 1", "front: L 1; R 1");
        // a cusp passing through a strand
        same_r(
            "front: L 1; L 2; R 3; R 1",
            "front: L 1; L 1; X 2; X 1; R 3; R 1",
        );
        same_r(
            "front: L 1; L 2; R 2; R 1",
            "front: L 1; L 2; X 1; X 2; R 1; R 1",
        );
        // triple point
        same_r(
            "front: L 1; L 3; X 1; X 2; X 1; R 3; R 1",
            "front: L 1; L 3; X 2; X 1; X 2; R 3; R 1",
        );
        same_r(
            "front: L 1; L 3; X 1; X 3; R 3; R 1",
            "front: L 1; L 3; X 3; X 1; R 3; R 1",
        );
    }

    #[test]
    fn tb_plus_mu_parity() {
        // tb + mu is odd for Legendrian knots; logged rather than asserted
        for f in enumerate_fronts(6, 3) {
            if f.components() == 1 {
                let inv = f.classical_invariants();
                if (inv.tb + inv.maslov).rem_euclid(2) != 1 {
                    eprintln!("even tb + mu on {f}: {inv:?}");
                }
            }
        }
    }
}

//! Closed link diagrams in Morse (slice) form.
//!
//! A diagram is read bottom to top as a sequence of events acting on a row of
//! strand positions, numbered from 0 on the left:
//!
//! * `Cup(i)` creates two strands at positions `i, i+1`;
//! * `Cap(i)` joins the strands at `i, i+1`;
//! * `Crossing(i, s)` exchanges the strands at `i, i+1`.
//!
//! The sign of a crossing is its oriented sign when both strands run upward
//! (the braid convention); with `s = +1` the strand from lower-left to
//! upper-right passes over. Orientation is carried as one bit per cup
//! (`true` when the cup is traversed left to right) and must be consistent
//! along each component.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Event {
    Cup(u32),
    Cap(u32),
    Crossing(u32, i8),
}

impl Event {
    pub fn level(self) -> u32 {
        match self {
            Event::Cup(l) | Event::Cap(l) | Event::Crossing(l, _) => l,
        }
    }
}

// Port numbering inside an event: bottom-left, bottom-right, top-left, top-right.
const BL: usize = 0;
const BR: usize = 1;
const TL: usize = 2;
const TR: usize = 3;
const NONE: u32 = u32::MAX;

fn through(ev: Event, port: usize) -> usize {
    match (ev, port) {
        (Event::Cup(_), TL) => TR,
        (Event::Cup(_), TR) => TL,
        (Event::Cap(_), BL) => BR,
        (Event::Cap(_), BR) => BL,
        (Event::Crossing(..), BL) => TR,
        (Event::Crossing(..), TR) => BL,
        (Event::Crossing(..), BR) => TL,
        (Event::Crossing(..), TL) => BR,
        _ => unreachable!("port {port} not present on {ev:?}"),
    }
}

/// Surgery applied at a single crossing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Surgery {
    /// Exchange over and under strands.
    Switch,
    /// The smoothing compatible with the orientation.
    SmoothOriented,
    /// Remove the crossing, leaving two vertical arcs.
    SmoothVertical,
    /// Replace the crossing by a cap followed by a cup.
    SmoothHorizontal,
}

/// Where a strand passes through a crossing during traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingInfo {
    /// Event index of the crossing.
    pub event: usize,
    /// Oriented sign under the diagram's orientation.
    pub sign: i8,
    /// Whether both strands run in the same vertical direction.
    pub parallel: bool,
}

/// Port connectivity and orientation data derived from an event list.
#[derive(Clone, Debug)]
pub struct Layout {
    link: Vec<u32>,
    out: Vec<bool>,
    component: Vec<u32>,
    /// Components in order of their first cup; each entry is that cup's event index.
    first_cups: Vec<usize>,
}

impl Layout {
    pub fn component_count(&self) -> usize {
        self.first_cups.len()
    }

    /// Whether traversal leaves the event through `port`.
    fn exits(&self, event: usize, port: usize) -> bool {
        self.out[4 * event + port]
    }

    /// Component index of the strand through the given port.
    fn component_at(&self, event: usize, port: usize) -> usize {
        self.component[4 * event + port] as usize
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MorseDiagram {
    events: Vec<Event>,
    // aligned with `events`; meaningful only at cups
    lr: Vec<bool>,
}

impl MorseDiagram {
    /// A diagram with the default orientation: the first cup of every
    /// component is traversed left to right.
    pub fn new(events: Vec<Event>) -> Result<Self> {
        let lr = vec![true; events.len()];
        Self::with_orientation(events, lr, true)
    }

    /// A diagram with explicit cup bits (one per event, ignored off cups).
    /// With `force`, the first cup of each component decides and other bits
    /// are overwritten; otherwise inconsistent bits are an error.
    pub fn with_orientation(events: Vec<Event>, lr: Vec<bool>, force: bool) -> Result<Self> {
        if lr.len() != events.len() {
            return Err(Error::InvalidDiagram(
                "orientation vector length differs from event count".into(),
            ));
        }
        check_events(&events)?;
        let d = Self { events, lr };
        let (_, lr, consistent) = d.traverse();
        if !consistent && !force {
            return Err(Error::InvalidDiagram(
                "cup orientations are inconsistent along a component".into(),
            ));
        }
        Ok(Self { lr, ..d })
    }

    pub(crate) fn from_parts_unchecked(events: Vec<Event>, lr: Vec<bool>) -> Self {
        let d = Self { events, lr };
        let (_, lr, _) = d.traverse();
        Self { lr, ..d }
    }

    /// Walks every component from its first cup, using that cup's bit.
    /// Returns the layout, the cup bits forced consistent, and whether the
    /// stored bits already were.
    fn traverse(&self) -> (Layout, Vec<bool>, bool) {
        let n = self.events.len();
        let mut layout = self.compute_layout();
        let mut lr = self.lr.clone();
        let mut out = vec![false; 4 * n];
        let mut component = vec![NONE; 4 * n];
        let mut first_cups = Vec::new();
        let mut consistent = true;
        for start in 0..n {
            if !matches!(self.events[start], Event::Cup(_)) || component[4 * start + TL] != NONE {
                continue;
            }
            let comp = first_cups.len() as u32;
            first_cups.push(start);
            let exit0 = if lr[start] { TR } else { TL };
            let start_port = 4 * start + exit0;
            let mut exit = start_port;
            loop {
                out[exit] = true;
                component[exit] = comp;
                let arrive = layout.link[exit] as usize;
                component[arrive] = comp;
                let ev = arrive / 4;
                let next = through(self.events[ev], arrive % 4);
                if matches!(self.events[ev], Event::Cup(_)) {
                    let bit = next == TR;
                    if lr[ev] != bit {
                        consistent = false;
                        lr[ev] = bit;
                    }
                }
                exit = 4 * ev + next;
                if exit == start_port {
                    break;
                }
            }
        }
        for (i, ev) in self.events.iter().enumerate() {
            if !matches!(ev, Event::Cup(_)) {
                lr[i] = false;
            }
        }
        layout.out = out;
        layout.component = component;
        layout.first_cups = first_cups;
        (layout, lr, consistent)
    }

    fn compute_layout(&self) -> Layout {
        let n = self.events.len();
        let mut link = vec![NONE; 4 * n];
        let mut row: Vec<u32> = Vec::new();
        let connect = |link: &mut Vec<u32>, lower: u32, upper: usize| {
            link[lower as usize] = upper as u32;
            link[upper] = lower;
        };
        for (i, ev) in self.events.iter().enumerate() {
            let base = 4 * i;
            match *ev {
                Event::Cup(l) => {
                    let l = l as usize;
                    row.splice(l..l, [(base + TL) as u32, (base + TR) as u32]);
                }
                Event::Cap(l) => {
                    let l = l as usize;
                    let (a, b) = (row[l], row[l + 1]);
                    connect(&mut link, a, base + BL);
                    connect(&mut link, b, base + BR);
                    row.drain(l..l + 2);
                }
                Event::Crossing(l, _) => {
                    let l = l as usize;
                    let (a, b) = (row[l], row[l + 1]);
                    connect(&mut link, a, base + BL);
                    connect(&mut link, b, base + BR);
                    row[l] = (base + TL) as u32;
                    row[l + 1] = (base + TR) as u32;
                }
            }
        }
        Layout {
            link,
            out: Vec::new(),
            component: Vec::new(),
            first_cups: Vec::new(),
        }
    }

    /// Fully populated layout (links, orientation, components).
    pub fn layout(&self) -> Layout {
        self.traverse().0
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Orientation bits aligned with `events()`.
    pub fn orientation_bits(&self) -> &[bool] {
        &self.lr
    }

    pub fn crossing_count(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, Event::Crossing(..)))
            .count()
    }

    /// Event indices of the crossings, in event order.
    pub fn crossing_events(&self) -> Vec<usize> {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| matches!(e, Event::Crossing(..)))
            .map(|(i, _)| i)
            .collect()
    }

    /// Maximum number of strands present between two events.
    pub fn width(&self) -> usize {
        let mut k = 0usize;
        let mut best = 0;
        for ev in &self.events {
            match ev {
                Event::Cup(_) => k += 2,
                Event::Cap(_) => k -= 2,
                Event::Crossing(..) => {}
            }
            best = best.max(k);
        }
        best
    }

    pub fn components(&self) -> usize {
        self.layout().component_count()
    }

    /// Writhe, doubled Whitney index is an integer so we return `r` itself.
    pub fn stats(&self) -> DiagramStats {
        let layout = self.layout();
        self.stats_with(&layout)
    }

    pub fn stats_with(&self, layout: &Layout) -> DiagramStats {
        let mut writhe = 0i64;
        let mut twice_rot = 0i64;
        for (i, ev) in self.events.iter().enumerate() {
            match ev {
                Event::Cup(_) => twice_rot += if layout.exits(i, TR) { 1 } else { -1 },
                // right-to-left across the top is counterclockwise
                Event::Cap(_) => twice_rot += if layout.exits(i, BL) { 1 } else { -1 },
                Event::Crossing(..) => writhe += self.crossing_info(layout, i).sign as i64,
            }
        }
        debug_assert!(twice_rot % 2 == 0);
        DiagramStats {
            writhe,
            rotation: twice_rot / 2,
            components: layout.component_count(),
        }
    }

    pub fn writhe(&self) -> i64 {
        self.stats().writhe
    }

    pub fn rotation(&self) -> i64 {
        self.stats().rotation
    }

    /// Whether the cup or cap at `event` is traversed left to right.
    pub fn arc_left_to_right(&self, layout: &Layout, event: usize) -> bool {
        match self.events[event] {
            Event::Cup(_) => layout.exits(event, TR),
            Event::Cap(_) => layout.exits(event, BR),
            Event::Crossing(..) => panic!("event {event} is a crossing"),
        }
    }

    /// Component index (in order of first cups) of the strand leaving the cup
    /// or entering the cap at `event`.
    pub fn component_of(&self, layout: &Layout, event: usize) -> usize {
        match self.events[event] {
            Event::Cup(_) => layout.component_at(event, TL),
            _ => layout.component_at(event, BL),
        }
    }

    /// Sign and parallelism of the crossing at event index `event`.
    pub fn crossing_info(&self, layout: &Layout, event: usize) -> CrossingInfo {
        let Event::Crossing(_, kind) = self.events[event] else {
            panic!("event {event} is not a crossing");
        };
        let up_a = layout.exits(event, TR); // strand BL-TR
        let up_b = layout.exits(event, TL); // strand BR-TL
        let d = |up: bool| if up { 1 } else { -1 };
        CrossingInfo {
            event,
            sign: kind * d(up_a) * d(up_b),
            parallel: up_a == up_b,
        }
    }

    /// Whether the strand through the crossing at `event` on the given pair of
    /// ports is the over strand.
    fn is_over(&self, event: usize, port: usize) -> bool {
        let Event::Crossing(_, kind) = self.events[event] else {
            unreachable!()
        };
        let on_bl_tr = port == BL || port == TR;
        on_bl_tr == (kind > 0)
    }

    /// The first crossing met on its under strand when components are walked
    /// in order from their first cups, or `None` for a descending diagram.
    pub fn first_undercrossing(&self, layout: &Layout) -> Option<CrossingInfo> {
        let mut seen = vec![false; self.events.len()];
        for &cup in &layout.first_cups {
            let exit0 = if self.lr[cup] { TR } else { TL };
            let start = 4 * cup + exit0;
            let mut exit = start;
            loop {
                let arrive = layout.link[exit] as usize;
                let (ev, port) = (arrive / 4, arrive % 4);
                if matches!(self.events[ev], Event::Crossing(..)) && !seen[ev] {
                    seen[ev] = true;
                    if !self.is_over(ev, port) {
                        return Some(self.crossing_info(layout, ev));
                    }
                }
                exit = 4 * ev + through(self.events[ev], port);
                if exit == start {
                    break;
                }
            }
        }
        None
    }

    /// Applies a surgery at the crossing with ordinal `id` (0-based, event order).
    pub fn crossing_surgery(&self, id: usize, action: Surgery) -> Result<Self> {
        let crossings = self.crossing_events();
        let &event = crossings.get(id).ok_or(Error::InvalidCrossing {
            index: id,
            count: crossings.len(),
        })?;
        Ok(self.surgery_at_event(event, action))
    }

    pub(crate) fn surgery_at_event(&self, event: usize, action: Surgery) -> Self {
        let Event::Crossing(level, kind) = self.events[event] else {
            panic!("event {event} is not a crossing");
        };
        let layout = self.layout();
        let action = match action {
            Surgery::SmoothOriented => {
                if self.crossing_info(&layout, event).parallel {
                    Surgery::SmoothVertical
                } else {
                    Surgery::SmoothHorizontal
                }
            }
            other => other,
        };
        let mut events = self.events.clone();
        let mut lr = self.lr.clone();
        match action {
            Surgery::Switch => {
                events[event] = Event::Crossing(level, -kind);
                return Self { events, lr };
            }
            Surgery::SmoothVertical => {
                events.remove(event);
                lr.remove(event);
            }
            Surgery::SmoothHorizontal => {
                let new_lr = layout.exits(event, TR);
                events.splice(event..=event, [Event::Cap(level), Event::Cup(level)]);
                lr.splice(event..=event, [false, new_lr]);
            }
            Surgery::SmoothOriented => unreachable!(),
        }
        Self::from_parts_unchecked(events, lr)
    }

    /// The same diagram with every component's orientation reversed.
    pub fn reversed(&self) -> Self {
        let lr = self
            .events
            .iter()
            .zip(&self.lr)
            .map(|(e, &b)| matches!(e, Event::Cup(_)) && !b)
            .collect();
        Self {
            events: self.events.clone(),
            lr,
        }
    }

    /// Reverses the orientation of a single component.
    pub fn reverse_component(&self, component: usize) -> Self {
        let layout = self.layout();
        let mut lr = self.lr.clone();
        for (i, e) in self.events.iter().enumerate() {
            if matches!(e, Event::Cup(_)) && layout.component_at(i, TL) == component {
                lr[i] = !lr[i];
            }
        }
        Self {
            events: self.events.clone(),
            lr,
        }
    }

    /// Sets component orientations: bit `k` reverses component `k` relative to
    /// the default orientation.
    pub fn with_component_orientations(&self, flips: &[bool]) -> Self {
        let base = Self::from_parts_unchecked(self.events.clone(), vec![true; self.events.len()]);
        let layout = base.layout();
        let mut lr = base.lr.clone();
        for (i, e) in base.events.iter().enumerate() {
            if matches!(e, Event::Cup(_)) && flips.get(layout.component_at(i, TL)) == Some(&true) {
                lr[i] = !lr[i];
            }
        }
        Self {
            events: base.events,
            lr,
        }
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let events = self
            .events
            .iter()
            .map(|&e| match e {
                Event::Crossing(l, k) => Event::Crossing(l, -k),
                other => other,
            })
            .collect();
        Self {
            events,
            lr: self.lr.clone(),
        }
    }

    /// Connected sum of two knot diagrams: the top cap of `self` is opened and
    /// joined to the bottom cup of `other`.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        for d in [self, other] {
            let k = d.components();
            if k != 1 {
                return Err(Error::NotAKnot { components: k });
            }
        }
        let mut events = self.events[..self.events.len() - 1].to_vec();
        events.extend_from_slice(&other.events[1..]);
        Self::new(events)
    }

    /// Deterministic byte encoding including orientation.
    pub fn canonical_code(&self) -> Vec<u8> {
        self.encode(true)
    }

    /// Deterministic byte encoding of the unoriented diagram.
    pub fn unoriented_code(&self) -> Vec<u8> {
        self.encode(false)
    }

    fn encode(&self, oriented: bool) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 * self.events.len() + 1);
        out.push(oriented as u8);
        for (ev, &lr) in self.events.iter().zip(&self.lr) {
            let (tag, level) = match *ev {
                Event::Cup(l) => (if oriented && lr { 4 } else { 0 }, l),
                Event::Cap(l) => (1, l),
                Event::Crossing(l, k) => (if k > 0 { 2 } else { 3 }, l),
            };
            // tag in the low 3 bits, level above; LEB128 for wide diagrams
            let mut v = (level as u64) << 3 | tag;
            loop {
                let byte = (v & 0x7f) as u8;
                v >>= 7;
                if v == 0 {
                    out.push(byte);
                    break;
                }
                out.push(byte | 0x80);
            }
        }
        out
    }

    /// Positions at which the strand count drops to 0 or 2 strictly inside the
    /// event list, as `(split_index, strands)`: events before the index form
    /// the lower part.
    pub(crate) fn waists(&self) -> Vec<(usize, usize)> {
        let mut k = 0usize;
        let mut found = Vec::new();
        for (i, ev) in self.events.iter().enumerate() {
            match ev {
                Event::Cup(_) => k += 2,
                Event::Cap(_) => k -= 2,
                Event::Crossing(..) => {}
            }
            let next = i + 1;
            if next < self.events.len() && (k == 0 || k == 2) {
                found.push((next, k));
            }
        }
        found
    }

    /// Direction (upward?) of the strands present after the first `slot` events.
    pub fn strand_directions(&self, layout: &Layout, slot: usize) -> Vec<bool> {
        let mut row: Vec<usize> = Vec::new();
        for (i, ev) in self.events[..slot].iter().enumerate() {
            let base = 4 * i;
            match *ev {
                Event::Cup(l) => {
                    let l = l as usize;
                    row.splice(l..l, [base + TL, base + TR]);
                }
                Event::Cap(l) => {
                    row.drain(l as usize..l as usize + 2);
                }
                Event::Crossing(l, _) => {
                    row[l as usize] = base + TL;
                    row[l as usize + 1] = base + TR;
                }
            }
        }
        row.iter().map(|&p| layout.out[p]).collect()
    }

    /// Splits at a waist found by [`Self::waists`]. For a 0-strand waist the
    /// two parts are disjoint; for a 2-strand waist they are the summands of a
    /// connected sum.
    pub(crate) fn split_at(&self, index: usize, strands: usize) -> (Self, Self) {
        let (lower_ev, upper_ev) = self.events.split_at(index);
        let (lower_lr, upper_lr) = self.lr.split_at(index);
        match strands {
            0 => (
                Self::from_parts_unchecked(lower_ev.to_vec(), lower_lr.to_vec()),
                Self::from_parts_unchecked(upper_ev.to_vec(), upper_lr.to_vec()),
            ),
            2 => {
                let layout = self.layout();
                let dirs = self.strand_directions(&layout, index);
                let mut lower = lower_ev.to_vec();
                lower.push(Event::Cap(0));
                let mut lower_bits = lower_lr.to_vec();
                lower_bits.push(false);
                let mut upper = vec![Event::Cup(0)];
                upper.extend_from_slice(upper_ev);
                let mut upper_bits = vec![dirs[1]];
                upper_bits.extend_from_slice(upper_lr);
                (
                    Self::from_parts_unchecked(lower, lower_bits),
                    Self::from_parts_unchecked(upper, upper_bits),
                )
            }
            _ => panic!("waists have 0 or 2 strands"),
        }
    }

    /// Removes local configurations that change the value of a skein
    /// polynomial only by a known factor: isolated circles, zigzags, cancelling
    /// crossing pairs and curls next to a cup or cap.
    pub fn planar_reduce(&self) -> (Self, Reduction) {
        let mut events = self.events.clone();
        let mut lr = self.lr.clone();
        let mut red = Reduction::default();
        let mut i = 0;
        while i + 1 < events.len() {
            let (e0, e1) = (events[i], events[i + 1]);
            let step = match (e0, e1) {
                (Event::Cup(a), Event::Cap(b)) if a == b => {
                    red.circles += 1;
                    Some(Rewrite::Drop2)
                }
                (Event::Cup(a), Event::Cap(b)) if a + 1 == b || b + 1 == a => Some(Rewrite::Drop2),
                (Event::Crossing(a, k), Event::Crossing(b, m)) if a == b && k == -m => {
                    Some(Rewrite::Drop2)
                }
                (Event::Crossing(a, k), Event::Cap(b)) if a == b => {
                    red.writhe -= k as i64;
                    Some(Rewrite::DropFirst)
                }
                (Event::Cup(a), Event::Crossing(b, k)) if a == b => {
                    red.writhe -= k as i64;
                    lr[i] = !lr[i];
                    Some(Rewrite::DropSecond)
                }
                _ => None,
            };
            match step {
                Some(Rewrite::Drop2) => {
                    events.drain(i..i + 2);
                    lr.drain(i..i + 2);
                    i = i.saturating_sub(1);
                }
                Some(Rewrite::DropFirst) => {
                    events.remove(i);
                    lr.remove(i);
                    i = i.saturating_sub(1);
                }
                Some(Rewrite::DropSecond) => {
                    events.remove(i + 1);
                    lr.remove(i + 1);
                    i = i.saturating_sub(1);
                }
                None => i += 1,
            }
        }
        (Self::from_parts_unchecked(events, lr), red)
    }

    pub fn braid_closure(b: &BraidWord) -> Self {
        let n = b.strands();
        let mut events: Vec<Event> = (0..n).map(Event::Cup).collect();
        for &letter in b.letters() {
            let idx = letter.unsigned_abs();
            events.push(Event::Crossing(n - 1 + idx, letter.signum() as i8));
        }
        events.extend((0..n).rev().map(Event::Cap));
        Self::new(events).expect("braid closures are valid diagrams")
    }
}

enum Rewrite {
    Drop2,
    DropFirst,
    DropSecond,
}

/// Factors removed by [`MorseDiagram::planar_reduce`]: the reduced diagram's
/// value times `a^writhe * circle^circles` is the original value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Reduction {
    pub writhe: i64,
    pub circles: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub writhe: i64,
    pub rotation: i64,
    pub components: usize,
}

fn check_events(events: &[Event]) -> Result<()> {
    let mut k: u32 = 0;
    for (i, ev) in events.iter().enumerate() {
        let ok = match *ev {
            Event::Cup(l) => l <= k,
            Event::Cap(l) | Event::Crossing(l, _) => k >= 2 && l + 1 < k,
        };
        if !ok {
            return Err(Error::InvalidDiagram(format!(
                "event {i} ({ev:?}) is out of range with {k} strands"
            )));
        }
        if let Event::Crossing(_, s) = ev {
            if s.abs() != 1 {
                return Err(Error::InvalidDiagram(format!(
                    "event {i}: sign must be +1 or -1"
                )));
            }
        }
        match ev {
            Event::Cup(_) => k += 2,
            Event::Cap(_) => k -= 2,
            Event::Crossing(..) => {}
        }
    }
    if k != 0 {
        return Err(Error::InvalidDiagram(format!(
            "diagram is not closed: {k} strands remain"
        )));
    }
    Ok(())
}

impl fmt::Debug for MorseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Morse[")?;
        for (i, (ev, lr)) in self.events.iter().zip(&self.lr).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match ev {
                Event::Cup(l) => write!(f, "U{}{}", l, if *lr { ">" } else { "<" })?,
                Event::Cap(l) => write!(f, "N{l}")?,
                Event::Crossing(l, k) => write!(f, "X{}{}", l, if *k > 0 { "+" } else { "-" })?,
            }
        }
        f.write_str("]")
    }
}

/// JSON dump `{"events":[["cup",i],["cap",i],["x",i,s],...]}` with 1-based levels.
impl Serialize for MorseDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Events<'a>(&'a [Event]);
        impl Serialize for Events<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for ev in self.0 {
                    match *ev {
                        Event::Cup(l) => seq.serialize_element(&("cup", l + 1))?,
                        Event::Cap(l) => seq.serialize_element(&("cap", l + 1))?,
                        Event::Crossing(l, k) => seq.serialize_element(&("x", l + 1, k))?,
                    }
                }
                seq.end()
            }
        }
        #[derive(Serialize)]
        struct Dump<'a> {
            events: Events<'a>,
        }
        Dump {
            events: Events(&self.events),
        }
        .serialize(s)
    }
}

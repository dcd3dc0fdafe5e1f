pub mod braid;
pub mod cache;
pub mod diagram;
pub mod error;
pub mod front;
pub mod harness;
pub mod inequalities;
pub mod jaeger;
pub mod laurent;
pub mod skein;

pub use braid::BraidWord;
pub use cache::SharedCache;
pub use diagram::{DiagramStats, Event, MorseDiagram, Surgery};
pub use error::{Error, Result};
pub use front::{CuspCounts, FrontEvent, FrontWord, LegendrianInvariants, OrientedFront};
pub use jaeger::{jaeger_both_sides, lemma_check, lj_both_sides, JaegerEngine};
pub use laurent::{DeltaFraction, JaegerSide, LaurentPoly, Var};
pub use skein::{full_invariants, homfly_r, kauffman_d, SkeinEngine, SkeinResult};

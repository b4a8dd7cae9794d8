//! Profinite classification of Seifert fibre spaces.
//!
//! Symbols are parsed and normalized in [`symbol`], their classifying
//! invariants live in [`invariants`], finite-quotient fingerprints in [`fp`],
//! and the equivalence decisions in [`decider`].
//!
//! ```
//! use seifert::{decide_closed, SeifertSymbol, VerdictKind};
//!
//! let m1: SeifertSymbol = "SFS[-1; o 0; (5,1)(5,1)(5,3)]".parse().unwrap();
//! let m2: SeifertSymbol = "SFS[-1; o 0; (5,1)(5,2)(5,2)]".parse().unwrap();
//! let verdict = decide_closed(&m1, &m2).unwrap();
//! assert_eq!(verdict.kind, VerdictKind::HempelEquivalent { k: 2 });
//! ```

pub mod cli;
pub mod decider;
pub mod error;
pub mod fp;
pub mod grammar;
pub mod invariants;
pub mod presentation;
pub mod rational;
pub mod snf;
pub mod symbol;

pub use decider::{
    class_vector, decide, decide_bounded, decide_closed, decide_closed_with, decide_orbifolds, decide_orbifolds_with,
    hempel_partners, CohomClass, DecideOptions, Separator, Verdict, VerdictKind,
};
pub use error::{CatalogueError, Error, ParseError, Result};
pub use invariants::{
    euler_number, first_homology, geometry, orbifold_euler_characteristic, orbifold_presentation, presentation,
    Geometry, InvariantReport,
};
pub use presentation::Presentation;
pub use rational::Rational;
pub use snf::{smith_normal_form, AbelianGroup, IntMatrix};
pub use symbol::{BaseSurface, FibrePair, OrbifoldData, SeifertSymbol};

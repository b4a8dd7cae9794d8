//! Finite-quotient machinery for finitely presented groups.

pub mod catalogue;
pub mod fingerprint;
pub mod homs;
pub mod low_index;
pub mod schreier;

pub use catalogue::{catalogue_id, default_catalogue, load_catalogue, FiniteGroupTable, Perm};
pub use fingerprint::{fingerprint, CoverRecord, FingerprintDepth, QuotientFingerprint};
pub use homs::{count_epimorphisms, count_homomorphisms};
pub use low_index::{low_index_subgroups, CosetTable};
pub use schreier::{raw_subgroup_presentation, simplify, subgroup_presentation};

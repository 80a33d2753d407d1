//! Structure analysis of finite semirings given by Cayley tables.
//!
//! A [`Semiring`] is a pair of `n × n` tables over the ids `0..n`. On top of
//! that the crate provides additive Green's relations and their starred
//! variants ([`greens`]), class predicates ([`classify`]), Rees matrix
//! semirings over skew-rings ([`rees`]), bi-ideals, quotients and
//! decompositions ([`structure`]), per-instance checks of the
//! characterization theorems ([`theorems`]), and a corpus of reference
//! examples including the complete census of orders 1 to 3 ([`corpus`]).
//!
//! ```
//! use finsemi::{classify, Semiring};
//!
//! // integers mod 2
//! let z2 = Semiring::from_fns(2, |a, b| (a + b) % 2, |a, b| a * b).unwrap();
//! assert!(classify(&z2).is_skew_ring.holds);
//! ```

pub mod bitset;
pub mod classify;
pub mod corpus;
pub mod greens;
pub mod iso;
pub mod partition;
pub mod rees;
pub mod report;
pub mod semiring;
pub mod smr;
pub mod structure;
pub mod theorems;

pub use bitset::ElementSet;
pub use classify::{classify, ClassificationReport, Verdict};
pub use corpus::{CorpusItem, Family, Named};
pub use greens::{greens_additive, starred_greens, GreensData, GreensVariant};
pub use iso::{find_isomorphism, IsoWitness};
pub use partition::Partition;
pub use rees::{
    build_rees, coordinatize, parse_rees, serialize_rees, validate_sandwich, Band, ReesError,
    ReesSpec,
};
pub use report::{analysis_report, AnalysisReport};
pub use semiring::{direct_product, validate_axioms, Semiring, SemiringError, Table, MAX_ORDER};
pub use smr::{parse_semiring, serialize_semiring, SmrError};
pub use structure::{
    blattice_decompose, decompose_rectangular, BLatticeDecomposition, Congruence,
    RectangularDecomposition, StructureError,
};
pub use theorems::{check_equivalence, EquivalenceVerdict, TheoremId};

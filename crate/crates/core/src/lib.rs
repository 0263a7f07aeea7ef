//! Arc-space invariants of Schubert varieties in the Grassmannian `G(k,n)`.
//!
//! Arcs on `G(k,n)` are sorted into contact strata indexed by plane partitions
//! inside the `k × (n-k)` box. This crate computes the invariant factor profile
//! of a concrete arc, builds generic arcs of a stratum from a weighted planar
//! network, evaluates orders of Plücker coordinates tropically, tests closure
//! containments between strata, and computes log canonical thresholds of pairs
//! `(G(k,n), Ω_λ)` through an exact rational linear program.
//!
//! Indexing conventions: cells of partitions and plane partitions, network
//! sources/sinks, and multi-index entries are 1-based as in the usual
//! combinatorial notation. [`SeriesMatrix`] is a plain matrix and is 0-based.

pub mod error;
pub mod lct;
pub mod nash;
pub mod networks;
pub mod partitions;
pub mod planepartitions;
pub mod powerseries;
pub mod simplex;

pub use error::{Error, Result};
pub use lct::{ArnoldResult, SvPolytopeLp};
pub use nash::{ContainmentVerdict, Discrepancy, Relation, Witness};
pub use networks::{EssentialWeighting, PlanarNetwork, UnitSource};
pub use partitions::{Corner, CornerKind, GrassmannShape, MultiIndex, Partition};
pub use planepartitions::{EssentialProfile, ExtNat, PlanePartition, Plateau, WeightExponents};
pub use powerseries::{ArcMatrix, Order, SeriesMatrix, TruncatedSeries};
pub use simplex::{Constraint, LpSolution, RationalLp, Relation as LpRelation};

/// Exact rational numbers used throughout.
pub type Rational = num::BigRational;

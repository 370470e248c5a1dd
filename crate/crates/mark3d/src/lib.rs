//! Combinatorial engine for marked ideal triangulations of compact 3-manifolds.
//!
//! A triangulation is a set of abstract tetrahedra together with a total,
//! fixed-point-free, involutive gluing of their faces. On top of that sit:
//!
//! * skeleton computation (edge/vertex/triangle classes, vertex links),
//! * invariants (spine counts, integral first homology via Smith normal form),
//! * canonical isomorphism signatures for deduplication,
//! * the admissible move calculus (MPa, Va, La, Ca, Ba moves and their
//!   inverses) on triangulations carrying a set of marked edge classes,
//! * decomposition certificates, edge subdivision and desingularization,
//! * breadth-first connectivity and domination searches over the move graph,
//! * distinguished (Hamiltonian) and partially truncated front-ends,
//! * a plain-text file format and replayable certificates.

pub mod apps;
pub mod calculus;
pub mod census;
pub mod format;
pub mod homology;
pub mod link;
pub mod marked;
pub mod moves;
pub mod perm;
pub mod sign;
pub mod singular;
pub mod skeleton;
pub mod spine;
pub mod tri;

pub use homology::Homology;
pub use link::LinkSurface;
pub use marked::MarkedTriangulation;
pub use perm::Perm4;
pub use sign::Signature;
pub use singular::{Singularity, SingularityReport};
pub use skeleton::{EdgeClass, Skeleton, TriangleClass, VertexClass};
pub use spine::SpineStats;
pub use tri::{FaceSlot, Gluing, GluingEntry, LooseTriangulation, TriError};

//! Mutation of diagrams (weighted quivers), recognition of 2-finite diagrams
//! and catalogs of minimal 2-infinite diagrams.

pub mod bm;
pub mod canon;
pub mod catalog;
pub mod diagram;
pub mod dynkin;
pub mod explorer;
pub mod mutation;
pub mod recognizer;
mod square;

pub use canon::{canonical_form, CanonicalForm, SkeletonForm};
pub use diagram::{diagram_of_matrix, Diagram, DiagramError, IntMatrix, VertexSet};
pub use dynkin::{AffineType, DynkinType};
pub use explorer::{decide_2finite, ExplorationLimits, Verdict};
pub use mutation::{mutate, mutate_seq, MutationStep};
pub use recognizer::{recognize, RecognitionReport};

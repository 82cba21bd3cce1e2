//! Exact-arithmetic toolkit for simplicial wedge operations, characteristic
//! matrices, complete non-singular fans, Gale and Shephard diagrams, small
//! covers, and lifting mod-2 characteristic matrices to the integers.
//!
//! Design principles:
//! * **Exact arithmetic only.**  All computation runs over arbitrary-precision
//!   integers and rationals (and GF(2)); there is no floating point and there
//!   are no tolerances.
//! * **Labels, not positions.**  Vertices carry `base_copy` labels that track
//!   wedge copies, so matrices and complexes stay aligned across operations.
//! * **Canonical forms decide equivalence.**  Equivalence of characteristic
//!   matrices is decided through unique normal forms, never through search.

pub mod charmap;
pub mod complex;
pub mod fanprops;
pub mod galeview;
pub mod label;
pub mod liftkit;
pub mod lp;
pub mod matrix;
pub mod picard3;
pub mod realcover;

pub use charmap::{CharError, CharMatrix, Ring};
pub use complex::{ComplexError, SimplicialComplex};
pub use fanprops::{FanError, OrientedSphere};
pub use galeview::{GaleError, PointConfiguration, ShephardRegion};
pub use label::VertexLabel;
pub use liftkit::{LiftCertificate, LiftError};
pub use picard3::{PentagonFamilySpec, PentagonType, Picard3Error};
pub use realcover::{CoverError, FaceInput, Z2Census};

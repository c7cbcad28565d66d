pub mod bracket;
pub mod error;
pub mod field;
pub mod linear_code;
pub mod orbit_sqt;
pub mod polynomial;
mod prime_poly;
pub mod skew_constacyclic;
pub mod table;

pub use error::{Error, ErrorKind, Result};
pub use field::{Automorphism, Embedding, FieldElement, FieldSpec};
pub use linear_code::{CodeExport, LinearCode, MatrixFq, SemiLinearVectorMap, WeightRoute};
pub use polynomial::{SkewPoly, SkewRing};
pub use skew_constacyclic::{ConstacyclicSpec, SkewCyclicCode};
pub use orbit_sqt::{OneGenerator, ProjectivePoint, SqtExport, SqtSpec};

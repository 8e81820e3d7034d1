pub mod classify;
pub mod coframe;
pub mod double_complex;
pub mod error;
pub mod exterior;
pub mod lattice;
pub mod lie;
pub mod matrix;
pub mod metrics;
pub mod nakamura;
pub mod scalar;

pub use double_complex::{CohomologyTable, DoubleComplex, Theory};
pub use error::{Error, Result};
pub use lattice::{certificate, LatticeCertificate};
pub use lie::{catalog, parse_salamon, verify_isomorphism, AppendixChange, BasisChange, CatalogLabel, RealLieAlgebra};
pub use matrix::ExactMatrix;
pub use nakamura::{build_complexes, NakamuraComplexes, NakamuraParams};
pub use scalar::{Field, GaussianRational, QuadraticScalar, Rational};

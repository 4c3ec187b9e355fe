//! Exact models of entwining structures, corings, and the composed-coring
//! homomorphism between their bicategories.
//!
//! Finite-dimensional algebras, coalgebras and bimodules over a field are
//! stored as matrices of structure constants. Every axiom and coherence
//! diagram is checked as an exact equality of matrices.

pub mod algstruct;
pub mod comc;
pub mod corcat;
pub mod entwcat;
pub mod error;
pub mod exactlin;
pub mod gallery;
pub mod laws;
pub mod qtensor;

pub use algstruct::{Algebra, Bimodule, CheckReport, Coalgebra};
pub use corcat::{CorOneCell, CorTwoCell, Coring};
pub use entwcat::{EntwObj, EntwOneCell, EntwTwoCell};
pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, Scalar};
pub use qtensor::QuotientPresentation;

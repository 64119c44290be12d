//! Exact commutative algebra for local Artinian Gorenstein algebras:
//! polynomial arithmetic over Q and F_p, Gröbner bases, Hilbert functions,
//! apolarity, tangent spaces of Hilbert schemes of points, and a catalog of
//! algebras and families with their expected invariants.

pub mod apolarity;
pub mod artinian;
pub mod catalog;
pub mod deformations;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod verify;

pub use apolarity::{apolar_ideal, contract, InverseForm};
pub use artinian::{HilbertFunction, QuotientAlgebra};
pub use catalog::{registry, CatalogEntry, EntryKind, ExpectedProfile};
pub use deformations::{tangent_dimension, TangentReport};
pub use error::{AlgebraError, Result};
pub use field::{Field, Scalar};
pub use groebner::{buchberger, GroebnerBasis};
pub use ideal::Ideal;
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{Ring, RingContext};
pub use verify::{verify_entry, EntryReport, Summary, VerificationReport};

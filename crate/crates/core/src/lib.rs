//! Exact arithmetic for Schur Laurent polynomials, Littlewood-Richardson
//! coefficients and the piecewise-linear involution that matches the
//! coefficients of two related families.
//!
//! Layers, bottom up: [`tuple`] (integer tuples, snakes, R-sets),
//! [`semifield`] and [`birational`] (the map `f_u` over any semifield),
//! [`tropical`] (its integer shadow `f_μ` and the bijection `φ`), [`laurent`]
//! and [`symmetric`] (Laurent polynomials and `s̄_λ`), [`lr`] (coefficients),
//! and [`verify`] (parameter sweeps).

pub mod birational;
pub mod error;
pub mod laurent;
pub mod lr;
pub mod report;
pub mod semifield;
pub mod symmetric;
pub mod tropical;
pub mod tuple;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use lr::{lr_coeff, lr_family, lr_via_r, CoefficientFamily, LrQuery};
pub use semifield::{QPlus, Semifield, Tropical};
pub use symmetric::{schur_laurent, SchurCache, SchurExpansion};
pub use tropical::{phi, phi_inverse, PhiParams, TropicalContext};
pub use tuple::{IntTuple, Snake};

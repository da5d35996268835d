//! Exact generalized inverses of quaternion matrices.
//!
//! Every inverse is computed from sums of noncommutative row and column
//! determinants over exact rationals, and can be checked against an
//! independent channel built on the complex adjoint embedding
//! ([`oracle`]).
//!
//! ```
//! use qginv::{mp_inverse, QMatrix, Settings};
//!
//! let a = QMatrix::parse_rows(&[vec!["i", "j"], vec!["0", "k"]]).unwrap();
//! let x = mp_inverse(&a, &Settings::default()).unwrap();
//! assert_eq!(a.mul(&x).unwrap().mul(&a).unwrap(), a);
//! ```

pub mod cli;
pub mod cmatrix;
pub mod determinant;
pub mod error;
pub mod format;
pub mod inverses;
pub mod matrix;
pub mod oracle;
pub mod quaternion;
pub mod trace;
pub mod weighted;

pub use cmatrix::{CMatrix, CRational};
pub use determinant::{cdet, hdet, minor_sum, rdet, CycleDecomposition, Settings};
pub use error::{Error, Result};
pub use inverses::{
    core_ep_left, core_ep_right, core_left, core_right, mp_inverse, projector_p, projector_q,
    wdrazin, wdrazin_hermitian, wdrazin_u, wdrazin_v, MpRoute, Product, WeightedPair,
};
pub use matrix::{IndexSet, QMatrix};
pub use quaternion::{Quaternion, Rational};
pub use trace::Trace;
pub use weighted::{wcep_left, wcep_right, wcmp, wdmp, wmpd, Variant};

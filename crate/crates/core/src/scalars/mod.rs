//! Exact arithmetic in the field `Q(q)`.

mod laurent;
pub mod linalg;
mod qnum;
mod scalar;

pub use laurent::LaurentPoly;
pub use linalg::Matrix;
pub use qnum::{
    exp_coeff, expq_coeff, q_binomial_laurent, q_factorial, q_factorial_laurent, q_int,
    q_int_laurent,
};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("negative argument {0} to a q-number")]
    NegativeArgument(i64),
    #[error("symmetrizer must be positive")]
    ZeroSymmetrizer,
}

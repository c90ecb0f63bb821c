//! Polynomial arithmetic over exact fields: monomials, orders, division,
//! Groebner bases and linear algebra.

pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod polynomial;

use thiserror::Error;

pub use field::{Field, PrimeField, Rationals, DEFAULT_CHARACTERISTIC};
pub use monomial::{Monomial, VariableId};
pub use order::{MonomialOrder, RankMode};
pub use polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable {0:?} is not ranked by this order")]
    VariableOutsideOrder(VariableId),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("computation budget of {steps} steps exceeded")]
    BudgetExceeded { steps: usize },
    #[error("invalid characteristic {0}")]
    BadCharacteristic(u64),
}

//! Arithmetic kernel for graded-commutative algebra: exact scalars, graded
//! generator tables, Koszul-sign bookkeeping, monomial/polynomial arithmetic
//! and tensor squares.
//!
//! All values are immutable after construction and freely shareable between
//! threads; no operation mutates shared state.

mod element;
mod error;
mod field;
mod generator;
mod monomial;
mod tensor;

pub use element::{fmt_monomial, fmt_terms, Element, Homogeneity};
pub use error::CoreError;
pub use field::{is_displayed_negative, koszul_parity, koszul_sign, FieldSpec, Scalar};
pub use generator::{tables_match, GenId, Generator, GeneratorTable};
pub use monomial::{mul_monomials, normalize_word, Monomial};
pub use tensor::{Tensor3, TensorElement};

//! The quantum symplectic space: normal monomials, elements, and exact
//! normal-ordered multiplication.

mod basis;
mod element;
mod index;
mod monomial;
mod mul;
mod naive;

pub use basis::{basis_up_to, homogeneous_basis, homogeneous_dim};
pub use element::Element;
pub use index::{Index, Rank};
pub use monomial::Monomial;
pub use mul::{left_mul_gen, omega, omega_times, product, right_mul_gen};
pub use naive::{naive_normalize, naive_normalize_with_fuel, DEFAULT_FUEL};

pub(crate) use mul::{left_mul_monomial, right_mul_monomial};

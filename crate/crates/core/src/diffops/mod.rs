//! Quantum differential operators on the symplectic space: generator
//! operators, the expression calculus, and the named operators built from them.

mod equality;
mod named;
mod operator;

pub use equality::{compare_on, first_discrepancy, op_equal_up_to, Comparison, Counterexample};
pub use named::{Construction, NamedOp, Realization, RootLabel};
pub use operator::{GeneratorOp, Node, Operator};

//! Exact arithmetic in Q(q) and q-combinatorics.

mod laurent;
mod qcomb;
mod ratq;

pub use laurent::Laurent;
pub use qcomb::{lambda, qbinom, qbinom_base, qfact, qint, qint_base};
pub use ratq::RatQ;

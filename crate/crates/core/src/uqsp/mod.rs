//! U_q(sp_2n) structural data and the verification suites for its realization
//! by q-differential operators.

mod actions;
mod check;
mod data;
mod highest_weight;
mod lemmas;
mod module_algebra;
mod report;
mod root_vectors;
mod serre;

use std::fmt;
use std::str::FromStr;

pub use actions::{actions_suite, e12_action, e_action, f_action, k_action};
pub use check::{check_cases, check_operator_identities, OpIdentity};
pub use data::{counit, enumerate_positive_roots, CartanData, CoproductRule, HopfGen};
pub use highest_weight::{f_closure_dim, highest_weight_suite, highest_weight_vector, Echelon};
pub use lemmas::{lemma_identities, lemma_suite};
pub use module_algebra::module_algebra_suite;
pub use report::{CounterexampleRecord, IdentityRecord, Status, SuiteReport};
pub use root_vectors::{root_operators, root_vector_identities, root_vector_suite};
pub use serre::{serre_identities, serre_suite};

use crate::error::{QsympError, Result};
use crate::sympspace::Rank;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteKind {
    Serre,
    ModuleAlgebra,
    HighestWeight,
    RootVectors,
    Lemmas,
    Actions,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 6] = [
        SuiteKind::Actions,
        SuiteKind::Serre,
        SuiteKind::ModuleAlgebra,
        SuiteKind::HighestWeight,
        SuiteKind::RootVectors,
        SuiteKind::Lemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Serre => "serre",
            SuiteKind::ModuleAlgebra => "module-algebra",
            SuiteKind::HighestWeight => "highest-weight",
            SuiteKind::RootVectors => "root-vectors",
            SuiteKind::Lemmas => "lemmas",
            SuiteKind::Actions => "actions",
        }
    }

    /// Runs the suite at bound `d`. The highest-weight suite is run once for
    /// each `m` in `0..=d`.
    pub fn run(self, rank: Rank, d: u32) -> Result<Vec<SuiteReport>> {
        Ok(match self {
            SuiteKind::Serre => vec![serre_suite(rank, d)?],
            SuiteKind::ModuleAlgebra => vec![module_algebra_suite(rank, d)?],
            SuiteKind::HighestWeight => (0..=d)
                .map(|m| highest_weight_suite(rank, m))
                .collect::<Result<_>>()?,
            SuiteKind::RootVectors => vec![root_vector_suite(rank, d)?],
            SuiteKind::Lemmas => vec![lemma_suite(rank, d)?],
            SuiteKind::Actions => vec![actions_suite(rank, d)?],
        })
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = QsympError;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| QsympError::InvalidOperator(format!("unknown suite '{s}'")))
    }
}

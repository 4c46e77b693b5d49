//! Closed subgroups of `T²` and exact arithmetic in the Euler rings `U(T²)` and `U(S¹)`.

mod s1;
mod subgroup;
pub mod syntax;
mod t2;

use num_bigint::BigInt;

pub use s1::{embed_s1_to_t2, s1_fixed_coefficient, EulerElementS1, S1Orbit};
pub use subgroup::TorusSubgroup;
pub use syntax::ParseError;
pub use t2::EulerElementT2;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EulerError {
    #[error("subgroup {subgroup} has dimension {dim}; order is only defined for finite subgroups")]
    NotFinite { subgroup: TorusSubgroup, dim: usize },
    #[error("element is not a unit: coefficient of T is {top}, expected 1 or -1")]
    NotInvertible { top: BigInt },
    #[error("unknown S1 subgroup {0:?}; expected \"S1\" or \"Z<k>\" with k >= 1")]
    BadS1Orbit(String),
}

/// `H = ∩ ker(mᵢ, nᵢ)` in canonical form.
pub fn subgroup_from_characters<T: Into<BigInt> + Clone>(chars: &[(T, T)]) -> TorusSubgroup {
    TorusSubgroup::from_characters(chars.iter().cloned())
}

pub fn intersect(h1: &TorusSubgroup, h2: &TorusSubgroup) -> TorusSubgroup {
    h1.intersect(h2)
}

pub fn star(a: &EulerElementT2, b: &EulerElementT2) -> EulerElementT2 {
    a.star(b)
}

pub fn project(a: &EulerElementT2, dim: usize) -> EulerElementT2 {
    a.project(dim)
}

pub fn invert(a: &EulerElementT2) -> Result<EulerElementT2, EulerError> {
    a.invert()
}

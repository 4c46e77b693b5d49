//! Exact computation of `T²`-equivariant bifurcation indices for `S¹`-symmetric
//! autonomous Newtonian systems `ü = −λ²∇U(u)` with 2π-periodic solutions.
//!
//! The crate is organized bottom-up:
//!
//! * [`euler_ring`]: closed subgroups of `T²` (canonical annihilator lattices) and
//!   arithmetic in the Euler rings `U(T²)` and `U(S¹)`;
//! * [`representations`]: orthogonal `S¹`/`T²`-representations, the Fourier-mode
//!   decomposition and degrees of `−Id`;
//! * [`spectral`]: linearization data at a critical point, the level set `Λ(u₀)` and
//!   the negative and resonant spaces of the Hessian;
//! * [`bifurcation`]: the bifurcation index, its nontriviality certificate and
//!   non-compactness classification;
//! * [`problem_file`] and [`report`]: the JSON problem and report formats.

pub mod bifurcation;
pub mod euler_ring;
pub mod problem_file;
pub mod report;
pub mod representations;
pub mod spectral;

pub use bifurcation::{
    bif_index, bif_index_two_sided, brouwer_index, certify_nontrivial, classify_noncompact, deg_h0,
    example_problem, exists_zero_sum_subset, BifError, BifurcationReport, Certificate,
    Certification, Classification, NonCompactReason,
};
pub use euler_ring::{EulerElementS1, EulerElementT2, EulerError, S1Orbit, TorusSubgroup};
pub use representations::{S1Representation, T2Representation};
pub use spectral::{BifurcationLevel, CriticalPointProblem, ProblemError, Side, SpectralDatum};

//! Linearization data at a critical point `u₀` of an `S¹`-invariant potential `U`.
//!
//! The Hessian of the action functional at `(u₀, λ)` acts on the Fourier mode `ℍ_n`
//! restricted to the `α`-eigenspace of `A = U″(u₀)` as multiplication by
//! `(n² − λ²α)/(n² + 1)`. Everything here is exact: eigenvalues are rationals and a
//! level `λ = k/√α` is identified by `λ² = k²/α ∈ ℚ`.
//!
//! The two one-sided neighbourhoods `λ₀ ± ε` are realized as the strict (`−`) and
//! non-strict (`+`) versions of `n² < λ₀²α`; no `ε` is ever materialized.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::euler_ring::EulerElementS1;
use crate::representations::{S1Representation, T2Representation};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProblemError {
    #[error("problem has no eigenvalues")]
    EmptySpectra,
    #[error("eigenvalue {0} listed more than once")]
    DuplicateAlpha(BigRational),
    #[error("eigenspace of {0} is the zero representation")]
    EmptyIsotypic(BigRational),
    #[error("level index k must be positive")]
    ZeroK,
    #[error("{0} is not a positive eigenvalue of U''(u0)")]
    NotAPositiveEigenvalue(BigRational),
    #[error("lambda^2 = {0} is not a bifurcation level: no mode is resonant")]
    NotALevel(BigRational),
}

/// An eigenvalue `α` of `U″(u₀)` with the `S¹`-isotypic decomposition of its eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralDatum {
    pub alpha: BigRational,
    pub isotypic: S1Representation,
}

impl SpectralDatum {
    pub fn new(alpha: BigRational, isotypic: S1Representation) -> Self {
        Self { alpha, isotypic }
    }
}

/// Which one-sided neighbourhood of a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `λ₀ − ε`: modes with `n² < λ₀²α`.
    Minus,
    /// `λ₀ + ε`: modes with `n² ≤ λ₀²α`.
    Plus,
}

/// Flags for the spectral and degree assumptions at `u₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assumptions {
    /// `σ(U″(u₀)) ∩ (0, ∞) ≠ ∅`.
    pub a31: bool,
    /// `deg^∇_{S¹}(−U′, B_δ(u₀)) ≠ Θ`.
    pub a32: bool,
}

impl Assumptions {
    pub fn hold(&self) -> bool {
        self.a31 && self.a32
    }
}

/// One isolated critical point `u₀`: the spectrum of `U″(u₀)` with eigenspace
/// decompositions and the `S¹`-degree of `−U′` near `u₀`.
///
/// The growth bound on `U′` and the domain of `U` do not enter any finite computation
/// and are not represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPointProblem {
    spectra: Vec<SpectralDatum>,
    deg_s1: EulerElementS1,
    unique_critical_point: bool,
}

impl CriticalPointProblem {
    /// Eigenvalues must be distinct and every eigenspace nonzero. Spectra are stored
    /// sorted by `α`.
    pub fn new(
        mut spectra: Vec<SpectralDatum>,
        deg_s1: EulerElementS1,
        unique_critical_point: bool,
    ) -> Result<Self, ProblemError> {
        if spectra.is_empty() {
            return Err(ProblemError::EmptySpectra);
        }
        if let Some(d) = spectra.iter().find(|d| d.isotypic.is_zero()) {
            return Err(ProblemError::EmptyIsotypic(d.alpha.clone()));
        }
        spectra.sort_by(|a, b| a.alpha.cmp(&b.alpha));
        if let Some(w) = spectra.windows(2).find(|w| w[0].alpha == w[1].alpha) {
            return Err(ProblemError::DuplicateAlpha(w[0].alpha.clone()));
        }
        Ok(Self {
            spectra,
            deg_s1,
            unique_critical_point,
        })
    }

    pub fn spectra(&self) -> &[SpectralDatum] {
        &self.spectra
    }

    pub fn deg_s1(&self) -> &EulerElementS1 {
        &self.deg_s1
    }

    pub fn unique_critical_point(&self) -> bool {
        self.unique_critical_point
    }

    /// `N`, the dimension of the configuration space.
    pub fn dimension(&self) -> u64 {
        self.spectra.iter().map(|d| d.isotypic.dim()).sum()
    }

    pub fn validate(&self) -> Assumptions {
        Assumptions {
            a31: self.positive_spectra().next().is_some(),
            a32: !self.deg_s1.is_zero(),
        }
    }

    fn positive_spectra(&self) -> impl Iterator<Item = &SpectralDatum> {
        self.spectra.iter().filter(|d| d.alpha.is_positive())
    }

    pub fn eigenspace(&self, alpha: &BigRational) -> Option<&S1Representation> {
        self.spectra
            .iter()
            .find(|d| &d.alpha == alpha)
            .map(|d| &d.isotypic)
    }

    /// The level `k/√α` for a positive eigenvalue `α`.
    pub fn level(&self, k: u64, alpha: &BigRational) -> Result<BifurcationLevel, ProblemError> {
        if !alpha.is_positive() || self.eigenspace(alpha).is_none() {
            return Err(ProblemError::NotAPositiveEigenvalue(alpha.clone()));
        }
        BifurcationLevel::new(k, alpha.clone())
    }

    /// The level with the given `λ²`, represented by its first resonant pair.
    pub fn level_from_lambda_sq(
        &self,
        lambda_sq: &BigRational,
    ) -> Result<BifurcationLevel, ProblemError> {
        let first = self
            .resonances(lambda_sq)
            .into_iter()
            .next()
            .ok_or_else(|| ProblemError::NotALevel(lambda_sq.clone()))?;
        BifurcationLevel::new(first.n, first.alpha)
    }

    /// Whether `λ²` belongs to `Λ(u₀)`, i.e. some mode is resonant.
    pub fn is_level(&self, lambda_sq: &BigRational) -> bool {
        !self.resonances(lambda_sq).is_empty()
    }

    /// All `(n, α)`, `n ≥ 1`, `α > 0`, with `n² = λ²α`, ascending in `α`.
    pub fn resonances(&self, lambda_sq: &BigRational) -> Vec<Resonance> {
        if !lambda_sq.is_positive() {
            return Vec::new();
        }
        self.positive_spectra()
            .filter_map(|d| {
                let n = exact_sqrt(&(lambda_sq * &d.alpha))?;
                Some(Resonance {
                    n,
                    alpha: d.alpha.clone(),
                })
            })
            .collect()
    }

    /// `Λ(u₀)` truncated to `k ≤ max_k`: every distinct `λ² = k²/α`, ascending, with its
    /// complete resonance set (coincident levels of different eigenvalues merge).
    pub fn lambda_set(&self, max_k: u64) -> Vec<ResonantLevel> {
        let mut levels: Vec<BifurcationLevel> = self
            .positive_spectra()
            .flat_map(|d| {
                (1..=max_k).map(move |k| {
                    BifurcationLevel::new(k, d.alpha.clone()).expect("k ≥ 1 and α > 0")
                })
            })
            .collect();
        levels.sort();
        levels.dedup();
        levels
            .into_iter()
            .map(|level| {
                let resonances = self.resonances(level.lambda_sq());
                ResonantLevel { level, resonances }
            })
            .collect()
    }

    /// `𝕍⁻_±`: the sum of `ℍ_n`-components `𝒱_A^n(α)` on which the Hessian at `λ₀ ± ε`
    /// is negative.
    pub fn negative_space(&self, level: &BifurcationLevel, side: Side) -> T2Representation {
        let mut out = T2Representation::zero();
        for d in self.positive_spectra() {
            let bound = level.lambda_sq() * &d.alpha;
            for n in 1u64.. {
                let n_sq = BigRational::from_integer(BigInt::from(n) * BigInt::from(n));
                let inside = match side {
                    Side::Minus => n_sq < bound,
                    Side::Plus => n_sq <= bound,
                };
                if !inside {
                    break;
                }
                out = out.direct_sum(&d.isotypic.loop_decompose(n));
            }
        }
        out
    }

    /// `𝒱`: the sum of the `ℍ_n`-components on which the Hessian at `λ₀` vanishes.
    pub fn resonant_space(&self, level: &BifurcationLevel) -> T2Representation {
        self.resonances(level.lambda_sq())
            .iter()
            .map(|r| {
                self.eigenspace(&r.alpha)
                    .expect("resonances come from the spectrum")
                    .loop_decompose(r.n)
            })
            .fold(T2Representation::zero(), |acc, w| acc.direct_sum(&w))
    }
}

/// `√q` when `q` is the square of a positive integer.
fn exact_sqrt(q: &BigRational) -> Option<u64> {
    if !q.is_integer() || !q.is_positive() {
        return None;
    }
    let v = q.to_integer();
    let r = v.sqrt();
    if &r * &r == v {
        Some(r.to_u64().expect("resonant Fourier index fits in u64"))
    } else {
        None
    }
}

/// `(n² − λ²α)/(n² + 1)`, the Hessian eigenvalue on `𝒱_A^n(α)`.
pub fn hessian_eigenvalue(n: u64, lambda_sq: &BigRational, alpha: &BigRational) -> BigRational {
    let n_sq = BigRational::from_integer(BigInt::from(n) * BigInt::from(n));
    (&n_sq - lambda_sq * alpha) / (n_sq + BigRational::one())
}

/// A resonant mode: `n² = λ²α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Resonance {
    pub n: u64,
    pub alpha: BigRational,
}

/// A level of `Λ(u₀)` with every resonant pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonantLevel {
    pub level: BifurcationLevel,
    pub resonances: Vec<Resonance>,
}

/// A candidate level `λ = k/√α`, identified by `λ² = k²/α`.
///
/// Equality, ordering and hashing only look at `λ²`, so `(1, 1)` and `(2, 4)` denote the
/// same level.
#[derive(Clone, Debug)]
pub struct BifurcationLevel {
    k: u64,
    alpha: BigRational,
    lambda_sq: BigRational,
}

impl BifurcationLevel {
    pub fn new(k: u64, alpha: BigRational) -> Result<Self, ProblemError> {
        if k == 0 {
            return Err(ProblemError::ZeroK);
        }
        if !alpha.is_positive() {
            return Err(ProblemError::NotAPositiveEigenvalue(alpha));
        }
        let k_sq = BigRational::from_integer(BigInt::from(k) * BigInt::from(k));
        let lambda_sq = k_sq / &alpha;
        Ok(Self {
            k,
            alpha,
            lambda_sq,
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn lambda_sq(&self) -> &BigRational {
        &self.lambda_sq
    }
}

impl PartialEq for BifurcationLevel {
    fn eq(&self, other: &Self) -> bool {
        self.lambda_sq == other.lambda_sq
    }
}

impl Eq for BifurcationLevel {}

impl Ord for BifurcationLevel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lambda_sq.cmp(&other.lambda_sq)
    }
}

impl PartialOrd for BifurcationLevel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for BifurcationLevel {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.lambda_sq.hash(state);
    }
}

/// `k/√α (λ² = …)`.
impl fmt::Display for BifurcationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/sqrt({}) (lambda^2 = {})",
            self.k, self.alpha, self.lambda_sq
        )
    }
}

pub fn validate(problem: &CriticalPointProblem) -> Assumptions {
    problem.validate()
}

pub fn lambda_set(problem: &CriticalPointProblem, max_k: u64) -> Vec<ResonantLevel> {
    problem.lambda_set(max_k)
}

pub fn negative_space(
    problem: &CriticalPointProblem,
    level: &BifurcationLevel,
    side: Side,
) -> T2Representation {
    problem.negative_space(level, side)
}

pub fn resonant_space(
    problem: &CriticalPointProblem,
    level: &BifurcationLevel,
) -> T2Representation {
    problem.resonant_space(level)
}

/// Parses `"p/q"` or `"p"` into a reduced rational; floats and zero denominators are rejected.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let int = |t: &str| -> Option<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (int(p)?, int(q)?);
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => int(s).map(BigRational::from_integer),
    }
}

/// Inverse of [`parse_rational`]: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler_ring::S1Orbit;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn example() -> CriticalPointProblem {
        CriticalPointProblem::new(
            vec![
                SpectralDatum::new(q("0"), S1Representation::from_summands([(0, 1), (1, 1)])),
                SpectralDatum::new(q("2"), S1Representation::irreducible(1, 0)),
            ],
            EulerElementS1::term(1, S1Orbit::cyclic(1).unwrap()),
            true,
        )
        .unwrap()
    }

    fn two_eigenvalues() -> CriticalPointProblem {
        CriticalPointProblem::new(
            vec![
                SpectralDatum::new(q("1"), S1Representation::irreducible(1, 0)),
                SpectralDatum::new(q("4"), S1Representation::irreducible(1, 0)),
            ],
            EulerElementS1::term(1, S1Orbit::CIRCLE),
            false,
        )
        .unwrap()
    }

    #[test]
    fn validation_flags() {
        assert_eq!(
            example().validate(),
            Assumptions {
                a31: true,
                a32: true
            }
        );
        let neg = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q("-1"),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::term(1, S1Orbit::CIRCLE),
            true,
        )
        .unwrap();
        assert!(!neg.validate().a31);
        let no_deg = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q("2"),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::zero(),
            true,
        )
        .unwrap();
        assert_eq!(
            no_deg.validate(),
            Assumptions {
                a31: true,
                a32: false
            }
        );
    }

    #[test]
    fn construction_errors() {
        let dup = CriticalPointProblem::new(
            vec![
                SpectralDatum::new(q("2"), S1Representation::irreducible(1, 0)),
                SpectralDatum::new(q("4/2"), S1Representation::irreducible(1, 1)),
            ],
            EulerElementS1::zero(),
            true,
        );
        assert_eq!(dup, Err(ProblemError::DuplicateAlpha(q("2"))));
        assert_eq!(
            CriticalPointProblem::new(vec![], EulerElementS1::zero(), true),
            Err(ProblemError::EmptySpectra)
        );
        assert!(matches!(
            CriticalPointProblem::new(
                vec![SpectralDatum::new(q("1"), S1Representation::zero())],
                EulerElementS1::zero(),
                true
            ),
            Err(ProblemError::EmptyIsotypic(_))
        ));
    }

    #[test]
    fn example_levels() {
        let levels: Vec<BigRational> = example()
            .lambda_set(3)
            .into_iter()
            .map(|l| l.level.lambda_sq().clone())
            .collect();
        assert_eq!(levels, vec![q("1/2"), q("2"), q("9/2")]);
    }

    #[test]
    fn coincident_levels_merge() {
        let set = two_eigenvalues().lambda_set(2);
        let lsq: Vec<BigRational> = set.iter().map(|l| l.level.lambda_sq().clone()).collect();
        assert_eq!(lsq, vec![q("1/4"), q("1"), q("4")]);
        assert_eq!(
            set[1].resonances,
            vec![
                Resonance {
                    n: 1,
                    alpha: q("1")
                },
                Resonance {
                    n: 2,
                    alpha: q("4")
                }
            ]
        );
        // λ² = 4 is also resonant for α = 4 at n = 4, beyond max_k
        assert_eq!(set[2].resonances.len(), 2);
    }

    #[test]
    fn empty_without_positive_eigenvalues() {
        let p = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q("-3"),
                S1Representation::irreducible(2, 1),
            )],
            EulerElementS1::term(1, S1Orbit::CIRCLE),
            true,
        )
        .unwrap();
        assert!(p.lambda_set(5).is_empty());
    }

    #[test]
    fn hessian_values() {
        assert!(hessian_eigenvalue(3, &q("9/2"), &q("2")).is_zero());
        assert_eq!(hessian_eigenvalue(1, &q("1"), &q("2")), q("-1/2"));
        assert_eq!(hessian_eigenvalue(3, &q("1/2"), &q("2")), q("4/5"));
    }

    #[test]
    fn example_spaces() {
        let p = example();
        let l2 = p.level(2, &q("2")).unwrap();
        assert_eq!(
            p.negative_space(&l2, Side::Minus),
            T2Representation::irreducible(1, 0, 1)
        );
        assert_eq!(
            p.negative_space(&l2, Side::Plus),
            T2Representation::from_summands([((0, 1), 1), ((0, 2), 1)])
        );
        let l1 = p.level(1, &q("2")).unwrap();
        assert!(p.negative_space(&l1, Side::Minus).is_zero());
        for k in 1..6 {
            let l = p.level(k, &q("2")).unwrap();
            assert_eq!(
                p.resonant_space(&l),
                T2Representation::irreducible(1, 0, k as i64)
            );
        }
    }

    #[test]
    fn resonant_space_with_rotation() {
        let p = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q("1"),
                S1Representation::irreducible(1, 1),
            )],
            EulerElementS1::term(2, S1Orbit::CIRCLE),
            false,
        )
        .unwrap();
        let l = p.level(1, &q("1")).unwrap();
        assert_eq!(
            p.resonant_space(&l),
            T2Representation::from_summands([((1, 1), 1), ((-1, 1), 1)])
        );
    }

    #[test]
    fn merged_resonant_space_is_a_sum() {
        let p = two_eigenvalues();
        let l = p.level(1, &q("1")).unwrap();
        assert_eq!(
            p.resonant_space(&l),
            T2Representation::from_summands([((0, 1), 1), ((0, 2), 1)])
        );
    }

    #[test]
    fn levels_compare_by_lambda_sq() {
        let a = BifurcationLevel::new(1, q("1")).unwrap();
        let b = BifurcationLevel::new(2, q("4")).unwrap();
        assert_eq!(a, b);
        assert!(BifurcationLevel::new(0, q("1")).is_err());
        assert!(BifurcationLevel::new(1, q("0")).is_err());
        let p = example();
        assert!(p.level(1, &q("3")).is_err());
        assert!(p.level(1, &q("0")).is_err());
        assert_eq!(
            p.level_from_lambda_sq(&q("2")).unwrap(),
            p.level(2, &q("2")).unwrap()
        );
        assert!(p.level_from_lambda_sq(&q("1")).is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(
            parse_rational("4/6"),
            Some(BigRational::new(2.into(), 3.into()))
        );
        assert_eq!(parse_rational("-7"), Some(q("-7")));
        for bad in ["1.5", "1e3", "", "1/0", "/2", "2/", "+3", "1/-", " 1"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
        assert_eq!(format_rational(&q("9/2")), "9/2");
        assert_eq!(format_rational(&q("4/2")), "2");
    }
}

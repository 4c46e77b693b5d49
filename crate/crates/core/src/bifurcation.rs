//! The global bifurcation index `𝓑𝓘𝓕_{T²}(u₀, λ₀)` and what can be concluded from it.
//!
//! With `D₀ = deg^∇_{T²}` of the gradient restricted to the constant loops `ℍ₀`, the index
//! at a level `λ₀` factors as
//!
//! ```text
//! 𝓑𝓘𝓕(u₀, λ₀) = D₀ ⋆ deg(−Id, 𝕍⁻₋) ⋆ (deg(−Id, 𝒱) − 𝕀)
//! ```
//!
//! where `𝕍⁻₋` is the negative space just below the level and `𝒱` the resonant space.
//! `D₀` is the image of the `S¹`-degree of `−U′` under `U(S¹) → U(T²)`; positive rescaling
//! of the gradient does not change it, so the same `D₀` serves both sides of the level.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::euler_ring::{EulerElementS1, EulerElementT2, S1Orbit, TorusSubgroup};
use crate::representations::S1Representation;
use crate::spectral::{BifurcationLevel, CriticalPointProblem, ProblemError, Side, SpectralDatum};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BifError {
    #[error("lambda^2 = {0} is not in the level set of this critical point")]
    InvalidLevel(BigRational),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error("anchor level is not among the candidate levels")]
    AnchorNotInLevels,
    #[error("candidate levels are not pairwise distinct")]
    DuplicateLevels,
    #[error("{0} candidate levels is beyond exhaustive subset search")]
    TooManyLevels(usize),
    #[error("nontriviality argument disagrees with direct evaluation at lambda^2 = {0}")]
    CertificateMismatch(BigRational),
}

/// How nontriviality of the index was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// `𝔫₀ ≠ 0`: the `U₁`-part of the reduced index is `𝔫₀·π₁(deg(−Id,𝒱) − 𝕀) ≠ Θ`.
    FixedCoefficientPath,
    /// `𝔫₀ = 0`: a same-sign product of `U₁`-elements has a nonzero `U₀` coefficient.
    SameSignPath,
    /// Neither argument applied; the value of the index itself decides.
    DirectEvaluation,
    /// The spectral or degree assumption fails; no bifurcation claim is made.
    NotApplicable,
}

impl Certificate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certificate::FixedCoefficientPath => "FixedCoefficientPath",
            Certificate::SameSignPath => "SameSignPath",
            Certificate::DirectEvaluation => "DirectEvaluation",
            Certificate::NotApplicable => "NotApplicable",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonCompactReason {
    /// Unique critical point and `𝔫₀ ≠ 0`.
    C1,
    /// Unique critical point, `𝔫₀ = 0` and all nonzero `𝔫_i` of one sign.
    C2,
    /// No subset of the candidate levels containing this one has indices summing to `Θ`.
    SumObstruction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    NonCompactGuaranteed(NonCompactReason),
    /// The continuum is non-compact or returns to the trivial branch; nothing sharper is known.
    Alternative,
    NotApplicable,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::NonCompactGuaranteed(NonCompactReason::C1) => {
                "NonCompactGuaranteed(c1)"
            }
            Classification::NonCompactGuaranteed(NonCompactReason::C2) => {
                "NonCompactGuaranteed(c2)"
            }
            Classification::NonCompactGuaranteed(NonCompactReason::SumObstruction) => {
                "NonCompactGuaranteed(sum_obstruction)"
            }
            Classification::Alternative => "Alternative",
            Classification::NotApplicable => "NotApplicable",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certification {
    pub nontrivial: bool,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BifurcationReport {
    pub level: BifurcationLevel,
    pub index: EulerElementT2,
    pub nontrivial: bool,
    pub certificate: Certificate,
    pub classification: Classification,
}

/// `D₀ = deg^∇_{T²}((∇Φ_±)|ℍ₀)`, the embedded `S¹`-degree of `−U′`.
pub fn deg_h0(problem: &CriticalPointProblem) -> EulerElementT2 {
    problem.deg_s1().embed()
}

fn check_level(problem: &CriticalPointProblem, level: &BifurcationLevel) -> Result<(), BifError> {
    if problem.is_level(level.lambda_sq()) {
        Ok(())
    } else {
        Err(BifError::InvalidLevel(level.lambda_sq().clone()))
    }
}

/// `deg(−Id, 𝒱) − 𝕀`.
fn resonant_factor(problem: &CriticalPointProblem, level: &BifurcationLevel) -> EulerElementT2 {
    &problem.resonant_space(level).deg_minus_id() - &EulerElementT2::identity()
}

/// `𝓑𝓘𝓕_{T²}(u₀, λ₀) = D₀ ⋆ deg(−Id, 𝕍⁻₋) ⋆ (deg(−Id, 𝒱) − 𝕀)`.
pub fn bif_index(
    problem: &CriticalPointProblem,
    level: &BifurcationLevel,
) -> Result<EulerElementT2, BifError> {
    check_level(problem, level)?;
    let below = problem.negative_space(level, Side::Minus).deg_minus_id();
    Ok(deg_h0(problem).star(&below.star(&resonant_factor(problem, level))))
}

/// The index as the difference of the one-sided degrees,
/// `D₀ ⋆ deg(−Id, 𝕍⁻₊) − D₀ ⋆ deg(−Id, 𝕍⁻₋)`.
pub fn bif_index_two_sided(
    problem: &CriticalPointProblem,
    level: &BifurcationLevel,
) -> Result<EulerElementT2, BifError> {
    check_level(problem, level)?;
    let d0 = deg_h0(problem);
    let plus = d0.star(&problem.negative_space(level, Side::Plus).deg_minus_id());
    let minus = d0.star(&problem.negative_space(level, Side::Minus).deg_minus_id());
    Ok(&plus - &minus)
}

/// `a_{k₀} · Σ_j b_{(m₀ + k₀j, n₀)}`, the coefficient of `χ((H_{(k₀,0)} ∩ H_{(m₀,n₀)})⁺)`
/// in `A ⋆ B` for `A` supported on `{H_{(k,0)}}` and `B` on `{H_{(m,n)} : n ≥ 1}`.
pub fn twisted_coefficient(
    a: &EulerElementT2,
    b: &EulerElementT2,
    k0: &BigInt,
    m0: &BigInt,
    n0: &BigInt,
) -> BigInt {
    let a_k0 = a.coefficient(&TorusSubgroup::kernel(k0.clone(), 0));
    let b_sum: BigInt = b
        .terms()
        .filter_map(|(h, c)| {
            let (m, n) = h.generator()?;
            (n == n0 && (m - m0).is_multiple_of(k0)).then_some(c)
        })
        .sum();
    a_k0 * b_sum
}

/// Decides nontriviality of the index twice: by direct evaluation, and by the
/// graded argument on the reduced index `D₀ ⋆ (deg(−Id, 𝒱) − 𝕀)` (the factor
/// `deg(−Id, 𝕍⁻₋)` is a unit). The two must agree.
pub fn certify_nontrivial(
    problem: &CriticalPointProblem,
    level: &BifurcationLevel,
) -> Result<Certification, BifError> {
    let index = bif_index(problem, level)?;
    let direct = !index.is_zero();
    if !problem.validate().hold() {
        return Ok(Certification {
            nontrivial: direct,
            certificate: Certificate::NotApplicable,
        });
    }
    let mismatch = || BifError::CertificateMismatch(level.lambda_sq().clone());

    let d0 = deg_h0(problem);
    let factor = resonant_factor(problem, level);
    let factor_u1 = factor.project(1);
    let n0 = problem.deg_s1().fixed_coefficient();

    let (path_nontrivial, certificate) = if !n0.is_zero() {
        // U₁ ⋆ U₀ = Θ and U₁ ⋆ U₁ ⊂ U₀, so only 𝔫₀𝕀 reaches the U₁ part.
        let reduced = d0.star(&factor);
        let expected = factor_u1.scalar_mul(&n0);
        if reduced.project(1) != expected || !reduced.project(2).is_zero() {
            return Err(mismatch());
        }
        (!expected.is_zero(), Certificate::FixedCoefficientPath)
    } else {
        match same_sign_witness(&d0, &factor_u1) {
            Some(coeff) => {
                // The witness coefficient must be what the product actually contains.
                let product = d0.star(&factor_u1);
                let reduced = d0.star(&factor);
                if product != reduced || product.coefficient(&coeff.0) != coeff.1 {
                    return Err(mismatch());
                }
                (!coeff.1.is_zero(), Certificate::SameSignPath)
            }
            None => (direct, Certificate::DirectEvaluation),
        }
    };
    if path_nontrivial != direct {
        return Err(mismatch());
    }
    Ok(Certification {
        nontrivial: direct,
        certificate,
    })
}

/// When `A` is a nonzero combination of `H_{(k,0)}` and `B` a nonzero combination of
/// `H_{(m,n)}`, `n ≥ 1`, with all coefficients of `B` of one sign: a subgroup `H₀` and its
/// coefficient in `A ⋆ B` computed by the twisted-sum formula.
fn same_sign_witness(a: &EulerElementT2, b: &EulerElementT2) -> Option<(TorusSubgroup, BigInt)> {
    let (h_a, _) = a.terms().next()?;
    let (h_b, _) = b.terms().next()?;
    let a_ok = a
        .terms()
        .all(|(h, _)| matches!(h.generator(), Some((_, n)) if n.is_zero()));
    let b_ok = b
        .terms()
        .all(|(h, _)| matches!(h.generator(), Some((_, n)) if n.is_positive()));
    let signs: BTreeSet<bool> = b.terms().map(|(_, c)| c.is_positive()).collect();
    if !a_ok || !b_ok || signs.len() != 1 {
        return None;
    }
    let (k0, _) = h_a.generator()?;
    let (m0, n0) = h_b.generator()?;
    let h0 = h_a.intersect(h_b);
    Some((h0, twisted_coefficient(a, b, k0, m0, n0)))
}

/// The Brouwer index of `−U′` at `u₀`, read off as the `χ(S¹/S¹⁺)`-coefficient.
pub fn brouwer_index(problem: &CriticalPointProblem) -> BigInt {
    problem.deg_s1().fixed_coefficient()
}

/// Non-compactness of all continua bifurcating from a unique critical point.
pub fn classify_noncompact(problem: &CriticalPointProblem) -> Classification {
    if !problem.validate().hold() {
        return Classification::NotApplicable;
    }
    if !problem.unique_critical_point() {
        return Classification::Alternative;
    }
    let deg = problem.deg_s1();
    if !deg.fixed_coefficient().is_zero() {
        return Classification::NonCompactGuaranteed(NonCompactReason::C1);
    }
    let signs: BTreeSet<bool> = deg.cyclic_terms().map(|(_, c)| c.is_positive()).collect();
    if signs.len() == 1 {
        Classification::NonCompactGuaranteed(NonCompactReason::C2)
    } else {
        Classification::Alternative
    }
}

const MAX_SUBSET_LEVELS: usize = 24;

/// Searches for a subset of `indices` containing `anchor` that sums to `Θ`, returning the
/// chosen positions (ascending). Subsets are walked in Gray-code order so each step adds
/// or removes one element.
pub fn zero_sum_subset(
    indices: &[EulerElementT2],
    anchor: usize,
) -> Result<Option<Vec<usize>>, BifError> {
    if anchor >= indices.len() {
        return Err(BifError::AnchorNotInLevels);
    }
    let others: Vec<usize> = (0..indices.len()).filter(|&i| i != anchor).collect();
    if others.len() > MAX_SUBSET_LEVELS {
        return Err(BifError::TooManyLevels(indices.len()));
    }
    let witness = |included: &[bool]| {
        let mut w: Vec<usize> = others
            .iter()
            .zip(included)
            .filter(|(_, &on)| on)
            .map(|(&i, _)| i)
            .collect();
        w.push(anchor);
        w.sort_unstable();
        w
    };
    let mut included = vec![false; others.len()];
    let mut sum = indices[anchor].clone();
    if sum.is_zero() {
        return Ok(Some(witness(&included)));
    }
    for step in 1u64..(1u64 << others.len()) {
        let bit = step.trailing_zeros() as usize;
        included[bit] = !included[bit];
        if included[bit] {
            sum += &indices[others[bit]];
        } else {
            sum -= &indices[others[bit]];
        }
        if sum.is_zero() {
            return Ok(Some(witness(&included)));
        }
    }
    Ok(None)
}

/// Whether some set of candidate levels containing `anchor` has indices summing to `Θ`,
/// with the witness levels. `None` rules out a compact continuum through `anchor` meeting
/// the trivial branch only within `levels`.
pub fn exists_zero_sum_subset(
    problem: &CriticalPointProblem,
    levels: &[BifurcationLevel],
    anchor: &BifurcationLevel,
) -> Result<Option<Vec<BifurcationLevel>>, BifError> {
    let distinct: BTreeSet<&BifurcationLevel> = levels.iter().collect();
    if distinct.len() != levels.len() {
        return Err(BifError::DuplicateLevels);
    }
    let pos = levels
        .iter()
        .position(|l| l == anchor)
        .ok_or(BifError::AnchorNotInLevels)?;
    let indices = levels
        .iter()
        .map(|l| bif_index(problem, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(zero_sum_subset(&indices, pos)?.map(|w| w.into_iter().map(|i| levels[i].clone()).collect()))
}

/// Index, certificate and classification at one level.
pub fn report(
    problem: &CriticalPointProblem,
    level: &BifurcationLevel,
) -> Result<BifurcationReport, BifError> {
    let index = bif_index(problem, level)?;
    let cert = certify_nontrivial(problem, level)?;
    Ok(BifurcationReport {
        level: level.clone(),
        index,
        nontrivial: cert.nontrivial,
        certificate: cert.certificate,
        classification: classify_noncompact(problem),
    })
}

/// Classification of every level of `Λ(u₀)` with `k ≤ max_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub classification: Classification,
    pub reports: Vec<BifurcationReport>,
    /// Per report: the zero-sum witness among the enumerated levels, if any.
    pub zero_sum_witnesses: Vec<Option<Vec<BifurcationLevel>>>,
}

/// Reports for all enumerated levels. A level whose continuum is not already covered by
/// the global classification is marked `sum_obstruction` when no subset of the enumerated
/// levels through it has vanishing index sum.
pub fn analyze(problem: &CriticalPointProblem, max_k: u64) -> Result<Analysis, BifError> {
    let classification = classify_noncompact(problem);
    let levels: Vec<BifurcationLevel> = problem
        .lambda_set(max_k)
        .into_iter()
        .map(|l| l.level)
        .collect();
    let mut reports = levels
        .iter()
        .map(|l| report(problem, l))
        .collect::<Result<Vec<_>, _>>()?;
    let indices: Vec<EulerElementT2> = reports.iter().map(|r| r.index.clone()).collect();
    let mut zero_sum_witnesses = Vec::with_capacity(reports.len());
    for (i, r) in reports.iter_mut().enumerate() {
        let witness = zero_sum_subset(&indices, i)?
            .map(|w| w.into_iter().map(|j| levels[j].clone()).collect::<Vec<_>>());
        if classification == Classification::Alternative && r.nontrivial && witness.is_none() {
            r.classification =
                Classification::NonCompactGuaranteed(NonCompactReason::SumObstruction);
        }
        zero_sum_witnesses.push(witness);
    }
    Ok(Analysis {
        classification,
        reports,
        zero_sum_witnesses,
    })
}

/// The four-dimensional example `U(x) = −x₃(x₁² + x₂²) + x₃³/3 + (x₄ − x₃)²/2`, with
/// `S¹` rotating `(x₁, x₂)`, at its unique critical point `0`.
///
/// `U″(0)` has eigenvalues `0` (eigenspace `ℝ[1,0] ⊕ ℝ[1,1]`) and `2` (`ℝ[1,0]`), and
/// `deg^∇_{S¹}(−U′, B(0)) = χ(S¹/ℤ₁⁺)` with vanishing Brouwer index.
pub fn example_problem() -> CriticalPointProblem {
    CriticalPointProblem::new(
        vec![
            SpectralDatum::new(
                BigRational::zero(),
                S1Representation::from_summands([(0, 1), (1, 1)]),
            ),
            SpectralDatum::new(
                BigRational::from_integer(2.into()),
                S1Representation::irreducible(1, 0),
            ),
        ],
        EulerElementS1::term(1, S1Orbit::cyclic(1).expect("nonzero")),
        true,
    )
    .expect("example data is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn h(m: i64, n: i64) -> EulerElementT2 {
        EulerElementT2::generator(TorusSubgroup::kernel(m, n))
    }

    fn toy_fixed() -> CriticalPointProblem {
        CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q(1),
                S1Representation::irreducible(1, 1),
            )],
            EulerElementS1::term(2, S1Orbit::CIRCLE),
            true,
        )
        .unwrap()
    }

    #[test]
    fn deg_h0_values() {
        assert_eq!(deg_h0(&example_problem()), h(1, 0));
        assert_eq!(
            deg_h0(&toy_fixed()),
            EulerElementT2::identity().scalar_mul(&2.into())
        );
        let p = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q(1),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::zero(),
            true,
        )
        .unwrap();
        assert!(deg_h0(&p).is_zero());
    }

    #[test]
    fn golden_example_indices() {
        let p = example_problem();
        for k in 1..=10u64 {
            let level = p.level(k, &q(2)).unwrap();
            let f = TorusSubgroup::kernel(1, 0).intersect(&TorusSubgroup::kernel(0, k));
            assert_eq!(f.order().unwrap(), BigInt::from(k));
            assert_eq!(
                bif_index(&p, &level).unwrap(),
                -EulerElementT2::generator(f)
            );
        }
        let l1 = p.level(1, &q(2)).unwrap();
        assert_eq!(
            bif_index(&p, &l1).unwrap(),
            -EulerElementT2::generator(TorusSubgroup::trivial())
        );
    }

    #[test]
    fn toy_index_with_fixed_coefficient() {
        let p = toy_fixed();
        let level = p.level(1, &q(1)).unwrap();
        let f = TorusSubgroup::from_characters([(1, 1), (0, 2)]);
        assert_eq!(f.order().unwrap(), BigInt::from(2));
        let expected = EulerElementT2::from_terms([
            (-2, TorusSubgroup::kernel(1, 1)),
            (-2, TorusSubgroup::kernel(-1, 1)),
            (2, f),
        ]);
        assert_eq!(bif_index(&p, &level).unwrap(), expected);
        assert_eq!(
            certify_nontrivial(&p, &level).unwrap(),
            Certification {
                nontrivial: true,
                certificate: Certificate::FixedCoefficientPath
            }
        );
    }

    #[test]
    fn two_sided_matches() {
        let p = example_problem();
        for k in 1..=10 {
            let level = p.level(k, &q(2)).unwrap();
            assert_eq!(
                bif_index(&p, &level).unwrap(),
                bif_index_two_sided(&p, &level).unwrap()
            );
        }
    }

    #[test]
    fn invalid_levels() {
        let p = example_problem();
        let not_level = BifurcationLevel::new(1, q(3)).unwrap();
        assert!(matches!(
            bif_index(&p, &not_level),
            Err(BifError::InvalidLevel(_))
        ));
        assert!(matches!(
            bif_index_two_sided(&p, &not_level),
            Err(BifError::InvalidLevel(_))
        ));
    }

    #[test]
    fn certification_paths() {
        let p = example_problem();
        for k in 1..=10 {
            let level = p.level(k, &q(2)).unwrap();
            assert_eq!(
                certify_nontrivial(&p, &level).unwrap(),
                Certification {
                    nontrivial: true,
                    certificate: Certificate::SameSignPath
                }
            );
        }
        let no_deg = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q(2),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::zero(),
            true,
        )
        .unwrap();
        let level = no_deg.level(1, &q(2)).unwrap();
        assert_eq!(
            certify_nontrivial(&no_deg, &level).unwrap().certificate,
            Certificate::NotApplicable
        );
    }

    #[test]
    fn brouwer_indices() {
        assert_eq!(brouwer_index(&example_problem()), BigInt::zero());
        let p = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q(1),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::from_terms([(3, S1Orbit::CIRCLE), (1, S1Orbit::cyclic(2).unwrap())]),
            true,
        )
        .unwrap();
        assert_eq!(brouwer_index(&p), BigInt::from(3));
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_noncompact(&example_problem()),
            Classification::NonCompactGuaranteed(NonCompactReason::C2)
        );
        let c1 = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q(1),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::term(1, S1Orbit::CIRCLE),
            true,
        )
        .unwrap();
        assert_eq!(
            classify_noncompact(&c1),
            Classification::NonCompactGuaranteed(NonCompactReason::C1)
        );
        let mixed = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q(1),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::from_terms([
                (1, S1Orbit::cyclic(1).unwrap()),
                (-1, S1Orbit::cyclic(2).unwrap()),
            ]),
            true,
        )
        .unwrap();
        assert_eq!(classify_noncompact(&mixed), Classification::Alternative);
        let not_unique = CriticalPointProblem::new(
            vec![SpectralDatum::new(
                q(1),
                S1Representation::irreducible(1, 0),
            )],
            EulerElementS1::term(1, S1Orbit::CIRCLE),
            false,
        )
        .unwrap();
        assert_eq!(
            classify_noncompact(&not_unique),
            Classification::Alternative
        );
    }

    #[test]
    fn zero_sum_search() {
        let p = example_problem();
        let levels: Vec<_> = (1..=5).map(|k| p.level(k, &q(2)).unwrap()).collect();
        assert_eq!(
            exists_zero_sum_subset(&p, &levels, &levels[0]).unwrap(),
            None
        );

        let x = &h(1, 1) - &h(0, 3);
        let found = zero_sum_subset(&[x.clone(), h(2, 1), -x], 0).unwrap();
        assert_eq!(found, Some(vec![0, 2]));
        assert_eq!(zero_sum_subset(&[h(0, 1)], 0).unwrap(), None);
        assert_eq!(
            zero_sum_subset(&[EulerElementT2::zero()], 0).unwrap(),
            Some(vec![0])
        );
        assert!(matches!(
            exists_zero_sum_subset(&p, &[levels[0].clone(), levels[0].clone()], &levels[0]),
            Err(BifError::DuplicateLevels)
        ));
        assert!(matches!(
            exists_zero_sum_subset(&p, &levels[1..], &levels[0]),
            Err(BifError::AnchorNotInLevels)
        ));
    }

    #[test]
    fn twisted_coefficient_sums_residue_class() {
        // A = 2·H(3,0), B = H(1,1) + 4·H(4,1) + H(2,1): classes mod 3 of m at n = 1
        let a = EulerElementT2::term(2, TorusSubgroup::kernel(3, 0));
        let b = EulerElementT2::from_terms([
            (1, TorusSubgroup::kernel(1, 1)),
            (4, TorusSubgroup::kernel(4, 1)),
            (1, TorusSubgroup::kernel(2, 1)),
        ]);
        let c = twisted_coefficient(&a, &b, &3.into(), &1.into(), &1.into());
        assert_eq!(c, BigInt::from(10));
        let h0 = TorusSubgroup::kernel(3, 0).intersect(&TorusSubgroup::kernel(1, 1));
        assert_eq!(a.star(&b).coefficient(&h0), c);
    }

    #[test]
    fn analysis_of_example() {
        let a = analyze(&example_problem(), 4).unwrap();
        assert_eq!(a.reports.len(), 4);
        assert!(a.zero_sum_witnesses.iter().all(Option::is_none));
        assert!(a.reports.iter().all(|r| r.nontrivial
            && r.classification == Classification::NonCompactGuaranteed(NonCompactReason::C2)));
    }
}

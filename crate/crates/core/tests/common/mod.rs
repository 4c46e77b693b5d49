#![allow(dead_code)]

use num_rational::BigRational;
use proptest::prelude::*;
use torus_bif::{
    CriticalPointProblem, EulerElementS1, EulerElementT2, S1Orbit, S1Representation, SpectralDatum,
    T2Representation, TorusSubgroup,
};

pub fn character() -> impl Strategy<Value = (i64, i64)> {
    (-10i64..=10, -10i64..=10)
}

/// Subgroups of every dimension, weighted toward the interesting ones.
pub fn subgroup() -> impl Strategy<Value = TorusSubgroup> {
    prop_oneof![
        1 => Just(TorusSubgroup::torus()),
        3 => character().prop_map(|(m, n)| TorusSubgroup::kernel(m, n)),
        2 => (character(), character()).prop_map(|(a, b)| TorusSubgroup::from_characters([a, b])),
    ]
}

pub fn element() -> impl Strategy<Value = EulerElementT2> {
    prop::collection::vec((-5i64..=5, subgroup()), 0..5).prop_map(EulerElementT2::from_terms)
}

/// Elements with no `𝕀` component.
pub fn nilpotent_element() -> impl Strategy<Value = EulerElementT2> {
    element().prop_map(|x| &x - &x.project(2))
}

pub fn unit() -> impl Strategy<Value = EulerElementT2> {
    (prop::bool::ANY, nilpotent_element()).prop_map(|(neg, n)| {
        let top = EulerElementT2::term(if neg { -1 } else { 1 }, TorusSubgroup::torus());
        &top + &n
    })
}

pub fn t2_rep() -> impl Strategy<Value = T2Representation> {
    (
        0u64..3,
        prop::collection::vec(((-4i64..=4, -4i64..=4), 1u64..3), 0..4),
    )
        .prop_map(|(k0, chars)| {
            T2Representation::from_summands(std::iter::once(((0, 0), k0)).chain(chars))
        })
}

pub fn s1_rep() -> impl Strategy<Value = S1Representation> {
    prop::collection::vec((0u64..5, 1u64..3), 1..4).prop_map(S1Representation::from_summands)
}

pub fn s1_degree() -> impl Strategy<Value = EulerElementS1> {
    prop::collection::vec((-3i64..=3, 0u64..5), 0..4).prop_map(|terms| {
        EulerElementS1::from_terms(
            terms
                .into_iter()
                .map(|(c, k)| (c, S1Orbit::cyclic(k).unwrap_or(S1Orbit::CIRCLE))),
        )
    })
}

/// Problems with at least one positive eigenvalue and a nonzero degree.
pub fn admissible_problem() -> impl Strategy<Value = CriticalPointProblem> {
    (
        prop::collection::btree_map((-6i64..=12, 1i64..=3), s1_rep(), 1..4),
        (1i64..=12, 1i64..=3),
        s1_rep(),
        s1_degree(),
        1i64..=3,
        prop::bool::ANY,
    )
        .prop_map(|(others, pos, pos_rep, deg, fallback, unique)| {
            let mut spectra: Vec<SpectralDatum> = Vec::new();
            let mut push = |(p, q): (i64, i64), rep: S1Representation| {
                let alpha = BigRational::new(p.into(), q.into());
                if spectra.iter().all(|d| d.alpha != alpha) {
                    spectra.push(SpectralDatum::new(alpha, rep));
                }
            };
            push(pos, pos_rep);
            for (a, rep) in others {
                push(a, rep);
            }
            let deg = if deg.is_zero() {
                EulerElementS1::term(1, S1Orbit::cyclic(fallback as u64).unwrap())
            } else {
                deg
            };
            CriticalPointProblem::new(spectra, deg, unique).unwrap()
        })
}

/// Points of `μ_N × μ_N` (as exponents) on which all characters are trivial.
pub fn torsion_points(chars: &[(i64, i64)], modulus: i64) -> usize {
    let mut count = 0;
    for p in 0..modulus {
        for q in 0..modulus {
            if chars
                .iter()
                .all(|&(m, n)| (m * p + n * q).rem_euclid(modulus) == 0)
            {
                count += 1;
            }
        }
    }
    count
}

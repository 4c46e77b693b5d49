//! Finite-dimensional orthogonal representations of `S¹` and `T²`, stored as multiplicities
//! of irreducibles, together with the exact equivariant gradient degree of `−Id` on them.
//!
//! `ℝ[k, m]` denotes `k` copies of the irreducible `S¹`-representation on which `e^{iφ}`
//! acts by rotation through `mφ` (`m = 0`: the trivial line). `ℝ[k, (m, n)]` is the
//! `T²` analogue with character `(m, n)`; `ℝ[1,(m,n)] ≅ ℝ[1,(−m,−n)]`, so character keys
//! are normalized to `n > 0` or `n = 0, m > 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroU64;

use num_bigint::BigInt;

use crate::euler_ring::{EulerElementS1, EulerElementT2, S1Orbit, TorusSubgroup};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct S1Representation {
    trivial: u64,
    rotations: BTreeMap<u64, u64>,
}

impl S1Representation {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ℝ[k, m]`.
    pub fn irreducible(k: u64, m: u64) -> Self {
        Self::from_summands([(m, k)])
    }

    /// Sum of `ℝ[k, m]` over `(m, k)` pairs.
    pub fn from_summands<I: IntoIterator<Item = (u64, u64)>>(summands: I) -> Self {
        let mut out = Self::zero();
        for (m, k) in summands {
            out.add_summand(m, k);
        }
        out
    }

    fn add_summand(&mut self, m: u64, k: u64) {
        if k == 0 {
            return;
        }
        if m == 0 {
            self.trivial += k;
        } else {
            *self.rotations.entry(m).or_default() += k;
        }
    }

    /// `k₀`, the dimension of the fixed-point space.
    pub fn trivial_mult(&self) -> u64 {
        self.trivial
    }

    /// `(m, k_m)` for the rotation summands, ascending in `m`.
    pub fn rotation_mults(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.rotations.iter().map(|(&m, &k)| (m, k))
    }

    /// All `(m, k)` summands including the trivial one as `m = 0`.
    pub fn summands(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        if self.trivial > 0 {
            out.push((0, self.trivial));
        }
        out.extend(self.rotation_mults());
        out
    }

    pub fn dim(&self) -> u64 {
        self.trivial + 2 * self.rotations.values().sum::<u64>()
    }

    pub fn is_zero(&self) -> bool {
        self.trivial == 0 && self.rotations.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_summand(0, other.trivial);
        for (m, k) in other.rotation_mults() {
            out.add_summand(m, k);
        }
        out
    }

    /// The `T²`-representation on the Fourier mode space `ℍ_n ≅ V` (`cos nt`, `sin nt`
    /// components), where the second circle acts by time shift.
    ///
    /// For `n ≥ 1`: `ℝ[k₀,0] ↦ ℝ[k₀,(0,n)]` and `ℝ[k,m] ↦ ℝ[k,(m,n)] ⊕ ℝ[k,(−m,n)]`.
    /// For `n = 0`: `ℝ[k₀,0] ↦ ℝ[k₀,(0,0)]` and `ℝ[k,m] ↦ ℝ[k,(m,0)]`.
    pub fn loop_decompose(&self, n: u64) -> T2Representation {
        let n = i64::try_from(n).expect("Fourier mode index fits in i64");
        let mut out = T2Representation::zero();
        if n == 0 {
            out.add_summand(0, 0, self.trivial);
            for (m, k) in self.rotation_mults() {
                out.add_summand(to_i64(m), 0, k);
            }
        } else {
            out.add_summand(0, n, self.trivial);
            for (m, k) in self.rotation_mults() {
                let m = to_i64(m);
                out.add_summand(m, n, k);
                out.add_summand(-m, n, k);
            }
        }
        out
    }

    /// `deg^∇_{S¹}(−Id, B(V)) = (−1)^{k₀} (χ(S¹/S¹⁺) − Σ_m k_m χ(S¹/ℤ_m⁺))`.
    ///
    /// Follows from the product formula: each `ℝ[1,m]`, `m ≥ 1`, contributes
    /// `χ(S¹/S¹⁺) − χ(S¹/ℤ_m⁺)`, each trivial line contributes `−χ(S¹/S¹⁺)`, and in
    /// `U(S¹)` the product of two `ℤ`-generators vanishes.
    pub fn deg_minus_id(&self) -> EulerElementS1 {
        let sign = if self.trivial.is_multiple_of(2) {
            1
        } else {
            -1
        };
        let terms = std::iter::once((BigInt::from(sign), S1Orbit::CIRCLE)).chain(
            self.rotation_mults().map(|(m, k)| {
                (
                    BigInt::from(-sign) * BigInt::from(k),
                    S1Orbit::cyclic(m).expect("rotation index is positive"),
                )
            }),
        );
        EulerElementS1::from_terms(terms)
    }
}

fn to_i64(m: u64) -> i64 {
    i64::try_from(m).expect("character index fits in i64")
}

/// `ℝ[k₀,0] ⊕ ℝ[k₁,m₁] ⊕ …`; `0` for the zero representation.
impl fmt::Display for S1Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands()
            .into_iter()
            .map(|(m, k)| format!("ℝ[{k},{m}]"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct T2Representation {
    trivial: u64,
    characters: BTreeMap<(i64, i64), u64>,
}

/// `(m, n) ~ (−m, −n)`, representative with `n > 0`, or `n = 0` and `m > 0`.
fn normalize_character(m: i64, n: i64) -> (i64, i64) {
    if n < 0 || (n == 0 && m < 0) {
        (-m, -n)
    } else {
        (m, n)
    }
}

impl T2Representation {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ℝ[k, (m, n)]`.
    pub fn irreducible(k: u64, m: i64, n: i64) -> Self {
        let mut out = Self::zero();
        out.add_summand(m, n, k);
        out
    }

    /// Sum of `ℝ[k, (m, n)]` over `((m, n), k)` pairs.
    pub fn from_summands<I: IntoIterator<Item = ((i64, i64), u64)>>(summands: I) -> Self {
        let mut out = Self::zero();
        for ((m, n), k) in summands {
            out.add_summand(m, n, k);
        }
        out
    }

    fn add_summand(&mut self, m: i64, n: i64, k: u64) {
        if k == 0 {
            return;
        }
        if m == 0 && n == 0 {
            self.trivial += k;
        } else {
            *self
                .characters
                .entry(normalize_character(m, n))
                .or_default() += k;
        }
    }

    pub fn trivial_mult(&self) -> u64 {
        self.trivial
    }

    /// Normalized characters with their multiplicities.
    pub fn character_mults(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.characters.iter().map(|(&c, &k)| (c, k))
    }

    pub fn dim(&self) -> u64 {
        self.trivial + 2 * self.characters.values().sum::<u64>()
    }

    pub fn is_zero(&self) -> bool {
        self.trivial == 0 && self.characters.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_summand(0, 0, other.trivial);
        for ((m, n), k) in other.character_mults() {
            out.add_summand(m, n, k);
        }
        out
    }

    /// `deg^∇_{T²}(−Id, B(W))`, as the product over irreducible summands:
    /// `(−1)^{k₀} · ⋆_{(m,n)} (𝕀 − χ(T²/H_{(m,n)}⁺))^{k_{(m,n)}}`.
    ///
    /// The product includes the 0-dimensional tail, which has no closed form.
    pub fn deg_minus_id(&self) -> EulerElementT2 {
        let mut acc = EulerElementT2::identity();
        if self.trivial % 2 == 1 {
            acc = -acc;
        }
        for ((m, n), k) in self.character_mults() {
            let factor = &EulerElementT2::identity()
                - &EulerElementT2::generator(TorusSubgroup::kernel(m, n));
            acc = acc.star(&factor.pow(k));
        }
        acc
    }
}

/// `ℝ[k₀,(0,0)] ⊕ ℝ[k₁,(m₁,n₁)] ⊕ …`; `0` for the zero representation.
impl fmt::Display for T2Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.trivial > 0 {
            parts.push(format!("ℝ[{},(0,0)]", self.trivial));
        }
        for ((m, n), k) in self.character_mults() {
            parts.push(format!("ℝ[{k},({m},{n})]"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

pub fn direct_sum_s1(a: &S1Representation, b: &S1Representation) -> S1Representation {
    a.direct_sum(b)
}

pub fn direct_sum_t2(a: &T2Representation, b: &T2Representation) -> T2Representation {
    a.direct_sum(b)
}

pub fn loop_decompose(v: &S1Representation, n: u64) -> T2Representation {
    v.loop_decompose(n)
}

pub fn deg_minus_id_t2(w: &T2Representation) -> EulerElementT2 {
    w.deg_minus_id()
}

pub fn deg_minus_id_s1(v: &S1Representation) -> EulerElementS1 {
    v.deg_minus_id()
}

/// Degree of `−∇φ` on a neighbourhood of a nondegenerate critical `S¹`-orbit with
/// isotropy `ℤ_k`: `(−1)^{m⁻} χ(S¹/ℤ_k⁺)`, `m⁻` the Morse index.
pub fn s1_degree_nondegenerate_orbit(morse_index: u64, isotropy_k: NonZeroU64) -> EulerElementS1 {
    let sign = if morse_index.is_multiple_of(2) { 1 } else { -1 };
    EulerElementS1::term(
        sign,
        S1Orbit::cyclic(isotropy_k.get()).expect("nonzero order"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(m: i64, n: i64) -> EulerElementT2 {
        EulerElementT2::generator(TorusSubgroup::kernel(m, n))
    }

    fn z(k: u64) -> S1Orbit {
        S1Orbit::cyclic(k).unwrap()
    }

    #[test]
    fn direct_sum_merges_multiplicities() {
        let a = S1Representation::irreducible(1, 1);
        assert_eq!(a.direct_sum(&a), S1Representation::irreducible(2, 1));
        assert_eq!(a.direct_sum(&S1Representation::zero()), a);
        let w = T2Representation::irreducible(1, 1, 2);
        assert_eq!(w.direct_sum(&T2Representation::zero()), w);
        assert_eq!(
            w.direct_sum(&T2Representation::irreducible(2, -1, -2)),
            T2Representation::irreducible(3, 1, 2)
        );
    }

    #[test]
    fn loop_decomposition_of_example_space() {
        let v = S1Representation::from_summands([(1, 1), (0, 2)]);
        assert_eq!(
            v.loop_decompose(1),
            T2Representation::from_summands([((0, 1), 2), ((1, 1), 1), ((-1, 1), 1)])
        );
        assert_eq!(
            v.loop_decompose(0),
            T2Representation::from_summands([((0, 0), 2), ((1, 0), 1)])
        );
        assert_eq!(
            S1Representation::irreducible(3, 0).loop_decompose(4),
            T2Representation::irreducible(3, 0, 4)
        );
        assert_eq!(v.loop_decompose(5).dim(), 2 * v.dim());
        assert_eq!(v.loop_decompose(0).dim(), v.dim());
    }

    #[test]
    fn degree_of_minus_identity_t2() {
        let i = EulerElementT2::identity();
        assert_eq!(
            T2Representation::irreducible(1, 3, -2).deg_minus_id(),
            &i - &h(3, -2)
        );
        assert_eq!(T2Representation::irreducible(1, 0, 0).deg_minus_id(), -&i);
        let w = T2Representation::from_summands([((0, 1), 1), ((0, 2), 1)]);
        assert_eq!(w.deg_minus_id(), &(&i - &h(0, 1)) - &h(0, 2));
        assert_eq!(T2Representation::zero().deg_minus_id(), i);
    }

    #[test]
    fn transverse_characters_produce_finite_tail() {
        // (𝕀 − H(1,0)) ⋆ (𝕀 − H(0,1)) = 𝕀 − H(1,0) − H(0,1) + χ({e})
        let w = T2Representation::from_summands([((1, 0), 1), ((0, 1), 1)]);
        let i = EulerElementT2::identity();
        let expected =
            &(&(&i - &h(1, 0)) - &h(0, 1)) + &EulerElementT2::generator(TorusSubgroup::trivial());
        assert_eq!(w.deg_minus_id(), expected);
    }

    #[test]
    fn degree_of_minus_identity_s1() {
        assert_eq!(
            S1Representation::irreducible(1, 0).deg_minus_id(),
            EulerElementS1::term(-1, S1Orbit::CIRCLE)
        );
        assert_eq!(
            S1Representation::irreducible(1, 3).deg_minus_id(),
            EulerElementS1::from_terms([(1, S1Orbit::CIRCLE), (-1, z(3))])
        );
        assert_eq!(
            S1Representation::from_summands([(0, 2), (1, 1)]).deg_minus_id(),
            EulerElementS1::from_terms([(1, S1Orbit::CIRCLE), (-1, z(1))])
        );
    }

    #[test]
    fn s1_formula_matches_embedded_t2_degree() {
        for m in 1..6u64 {
            let v = S1Representation::irreducible(1, m);
            assert_eq!(v.deg_minus_id().embed(), v.loop_decompose(0).deg_minus_id());
        }
    }

    #[test]
    fn nondegenerate_orbit() {
        let k = |v| NonZeroU64::new(v).unwrap();
        assert_eq!(
            s1_degree_nondegenerate_orbit(2, k(1)),
            EulerElementS1::term(1, z(1))
        );
        assert_eq!(
            s1_degree_nondegenerate_orbit(3, k(2)),
            EulerElementS1::term(-1, z(2))
        );
        assert_eq!(
            s1_degree_nondegenerate_orbit(0, k(5)),
            EulerElementS1::term(1, z(5))
        );
    }

    #[test]
    fn display() {
        let v = S1Representation::from_summands([(1, 1), (0, 2)]);
        assert_eq!(v.to_string(), "ℝ[2,0] ⊕ ℝ[1,1]");
        assert_eq!(
            v.loop_decompose(1).to_string(),
            "ℝ[1,(-1,1)] ⊕ ℝ[2,(0,1)] ⊕ ℝ[1,(1,1)]"
        );
        assert_eq!(T2Representation::zero().to_string(), "0");
    }
}

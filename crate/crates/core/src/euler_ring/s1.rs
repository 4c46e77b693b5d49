use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroU64;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{EulerElementT2, EulerError, TorusSubgroup};

/// A closed subgroup of `S¹`: either `S¹` itself or a cyclic group `ℤ_k`, `k ≥ 1`.
///
/// `S¹` sorts before every `ℤ_k`; cyclic groups sort by order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S1Orbit(Option<NonZeroU64>);

impl S1Orbit {
    pub const CIRCLE: S1Orbit = S1Orbit(None);

    /// `ℤ_k`; `None` for `k = 0`.
    pub fn cyclic(k: u64) -> Option<Self> {
        NonZeroU64::new(k).map(|k| S1Orbit(Some(k)))
    }

    /// Order of the cyclic group, `None` for `S¹`.
    pub fn cyclic_order(&self) -> Option<u64> {
        self.0.map(NonZeroU64::get)
    }

    /// Image under `U(S¹) → U(T²)`: `S¹ ↦ T²`, `ℤ_k ↦ H_{(k,0)}`.
    pub fn to_torus(&self) -> TorusSubgroup {
        match self.0 {
            None => TorusSubgroup::torus(),
            Some(k) => TorusSubgroup::kernel(k.get(), 0u64),
        }
    }
}

/// `S1` or `Z<k>`, as in problem files.
impl fmt::Display for S1Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "S1"),
            Some(k) => write!(f, "Z{k}"),
        }
    }
}

impl FromStr for S1Orbit {
    type Err = EulerError;
    fn from_str(s: &str) -> Result<Self, EulerError> {
        let bad = || EulerError::BadS1Orbit(s.to_string());
        if s == "S1" {
            return Ok(Self::CIRCLE);
        }
        let digits = s.strip_prefix('Z').ok_or_else(bad)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let k: u64 = digits.parse().map_err(|_| bad())?;
        Self::cyclic(k).ok_or_else(bad)
    }
}

/// An element of `U(S¹)`, `α₀χ(S¹/S¹⁺) + Σ α_k χ(S¹/ℤ_k⁺)`. Only the additive structure
/// and the embedding into `U(T²)` are provided.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EulerElementS1 {
    coeffs: BTreeMap<S1Orbit, BigInt>,
}

impl EulerElementS1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: impl Into<BigInt>, orbit: S1Orbit) -> Self {
        Self::from_terms([(coeff, orbit)])
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, S1Orbit)>,
        C: Into<BigInt>,
    {
        let mut coeffs: BTreeMap<S1Orbit, BigInt> = BTreeMap::new();
        for (c, o) in terms {
            *coeffs.entry(o).or_default() += c.into();
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, orbit: S1Orbit) -> BigInt {
        self.coeffs.get(&orbit).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&S1Orbit, &BigInt)> {
        self.coeffs.iter()
    }

    /// The coefficient `𝔫₀` of `χ(S¹/S¹⁺)`. For the degree of `−U′` at an isolated
    /// critical point this is the Brouwer index.
    pub fn fixed_coefficient(&self) -> BigInt {
        self.coefficient(S1Orbit::CIRCLE)
    }

    /// Coefficients `𝔫_k` of the cyclic generators, ascending in `k`.
    pub fn cyclic_terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs
            .iter()
            .filter_map(|(o, c)| o.cyclic_order().map(|k| (k, c)))
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(o, v)| (v * c, *o)))
    }

    /// `χ(S¹/S¹⁺) ↦ 𝕀`, `χ(S¹/ℤ_k⁺) ↦ χ(T²/H_{(k,0)}⁺)`.
    pub fn embed(&self) -> EulerElementT2 {
        EulerElementT2::from_terms(self.coeffs.iter().map(|(o, c)| (c.clone(), o.to_torus())))
    }
}

impl Add<&EulerElementS1> for &EulerElementS1 {
    type Output = EulerElementS1;
    fn add(self, rhs: &EulerElementS1) -> EulerElementS1 {
        EulerElementS1::from_terms(
            self.coeffs
                .iter()
                .chain(rhs.coeffs.iter())
                .map(|(o, c)| (c.clone(), *o)),
        )
    }
}

impl Neg for &EulerElementS1 {
    type Output = EulerElementS1;
    fn neg(self) -> EulerElementS1 {
        EulerElementS1::from_terms(self.coeffs.iter().map(|(o, c)| (-c, *o)))
    }
}

impl Sub<&EulerElementS1> for &EulerElementS1 {
    type Output = EulerElementS1;
    fn sub(self, rhs: &EulerElementS1) -> EulerElementS1 {
        self + &(-rhs)
    }
}

/// e.g. `1*S1 - 1*Z2`; `0` for `Θ`.
impl fmt::Display for EulerElementS1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (o, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}*{o}")?;
            } else if c.is_negative() {
                write!(f, " - {}*{o}", -c)?;
            } else {
                write!(f, " + {c}*{o}")?;
            }
        }
        Ok(())
    }
}

/// `embed_s1_to_t2` as a free function.
pub fn embed_s1_to_t2(e: &EulerElementS1) -> EulerElementT2 {
    e.embed()
}

/// `s1_fixed_coefficient` as a free function.
pub fn s1_fixed_coefficient(e: &EulerElementS1) -> BigInt {
    e.fixed_coefficient()
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::syntax::{self, ParseError};
use super::{EulerError, TorusSubgroup};

/// An element of the Euler ring `U(T²)`: a finitely supported integer combination of
/// generators `χ_{T²}(T²/H⁺)`, keyed by the subgroup `H`.
///
/// Zero coefficients are never stored, so derived equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EulerElementT2 {
    coeffs: BTreeMap<TorusSubgroup, BigInt>,
}

impl EulerElementT2 {
    /// `Θ`.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `𝕀 = χ_{T²}(T²/T²⁺)`.
    pub fn identity() -> Self {
        Self::generator(TorusSubgroup::torus())
    }

    /// `χ_{T²}(T²/H⁺)`.
    pub fn generator(h: TorusSubgroup) -> Self {
        Self::term(1, h)
    }

    pub fn term(coeff: impl Into<BigInt>, h: TorusSubgroup) -> Self {
        let mut out = Self::zero();
        out.add_term(h, coeff.into());
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, TorusSubgroup)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (c, h) in terms {
            out.add_term(h, c.into());
        }
        out
    }

    fn add_term(&mut self, h: TorusSubgroup, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(h);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `χ_{T²}(T²/H⁺)`, zero when absent.
    pub fn coefficient(&self, h: &TorusSubgroup) -> BigInt {
        self.coeffs.get(h).cloned().unwrap_or_default()
    }

    /// Terms in canonical print order.
    pub fn terms(&self) -> impl Iterator<Item = (&TorusSubgroup, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(h, v)| (h.clone(), v * c))
                .collect(),
        }
    }

    /// The ring product. On generators,
    /// `χ(H₁⁺) ⋆ χ(H₂⁺) = χ((H₁∩H₂)⁺)` when the annihilator ranks add up
    /// (`dim H₁ + dim H₂ = 2 + dim(H₁∩H₂)`), and `Θ` otherwise.
    pub fn star(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (h1, c1) in &self.coeffs {
            for (h2, c2) in &other.coeffs {
                if let Some(h0) = generator_product(h1, h2) {
                    out.add_term(h0, c1 * c2);
                }
            }
        }
        out
    }

    /// `self^exp` under `⋆`; `x^0 = 𝕀`.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.star(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.star(&base);
            }
        }
        acc
    }

    /// Restriction of the support to subgroups of dimension `dim` (the projection onto `U_dim`).
    pub fn project(&self, dim: usize) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(h, _)| h.dim() == dim)
                .map(|(h, c)| (h.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `𝕀`.
    pub fn top_coefficient(&self) -> BigInt {
        self.coefficient(&TorusSubgroup::torus())
    }

    /// Multiplicative inverse. `a` is a unit iff its `𝕀`-coefficient `ε` is `±1`;
    /// with `a = ε𝕀 + n` and `n ∈ U₁ ⊕ U₀` nilpotent (`n⋆n⋆n = Θ`),
    /// `a⁻¹ = ε(𝕀 − εn + n⋆n)`.
    pub fn invert(&self) -> Result<Self, EulerError> {
        let top = self.top_coefficient();
        if !top.abs().is_one() {
            return Err(EulerError::NotInvertible { top });
        }
        let nil = self - &Self::term(top.clone(), TorusSubgroup::torus());
        let inner = &(&Self::identity() - &nil.scalar_mul(&top)) + &nil.star(&nil);
        Ok(inner.scalar_mul(&top))
    }
}

/// Product of two generators, `None` standing for `Θ`.
fn generator_product(h1: &TorusSubgroup, h2: &TorusSubgroup) -> Option<TorusSubgroup> {
    if h1.is_torus() {
        return Some(h2.clone());
    }
    if h2.is_torus() {
        return Some(h1.clone());
    }
    if h1.rank() + h2.rank() > 2 {
        return None;
    }
    let h0 = h1.intersect(h2);
    (h0.rank() == h1.rank() + h2.rank()).then_some(h0)
}

impl Add<&EulerElementT2> for &EulerElementT2 {
    type Output = EulerElementT2;
    fn add(self, rhs: &EulerElementT2) -> EulerElementT2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for EulerElementT2 {
    type Output = EulerElementT2;
    fn add(mut self, rhs: EulerElementT2) -> EulerElementT2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&EulerElementT2> for EulerElementT2 {
    fn add_assign(&mut self, rhs: &EulerElementT2) {
        for (h, c) in &rhs.coeffs {
            self.add_term(h.clone(), c.clone());
        }
    }
}

impl SubAssign<&EulerElementT2> for EulerElementT2 {
    fn sub_assign(&mut self, rhs: &EulerElementT2) {
        for (h, c) in &rhs.coeffs {
            self.add_term(h.clone(), -c);
        }
    }
}

impl Sub<&EulerElementT2> for &EulerElementT2 {
    type Output = EulerElementT2;
    fn sub(self, rhs: &EulerElementT2) -> EulerElementT2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for EulerElementT2 {
    type Output = EulerElementT2;
    fn sub(mut self, rhs: EulerElementT2) -> EulerElementT2 {
        self -= &rhs;
        self
    }
}

impl Neg for &EulerElementT2 {
    type Output = EulerElementT2;
    fn neg(self) -> EulerElementT2 {
        EulerElementT2 {
            coeffs: self.coeffs.iter().map(|(h, c)| (h.clone(), -c)).collect(),
        }
    }
}

impl Neg for EulerElementT2 {
    type Output = EulerElementT2;
    fn neg(self) -> EulerElementT2 {
        -&self
    }
}

/// `a * b` is the ring product `a ⋆ b`.
impl Mul<&EulerElementT2> for &EulerElementT2 {
    type Output = EulerElementT2;
    fn mul(self, rhs: &EulerElementT2) -> EulerElementT2 {
        self.star(rhs)
    }
}

impl<'a> std::iter::Sum<&'a EulerElementT2> for EulerElementT2 {
    fn sum<I: Iterator<Item = &'a EulerElementT2>>(iter: I) -> Self {
        let mut out = Self::zero();
        for x in iter {
            out += x;
        }
        out
    }
}

/// Canonical text form, e.g. `1*T - 2*H(0,1) + 1*F(1,0;0,2)`; `Θ` prints as `0`.
impl fmt::Display for EulerElementT2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (h, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}*{h}")?;
            } else if c.is_negative() {
                write!(f, " - {}*{h}", -c)?;
            } else {
                write!(f, " + {c}*{h}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for EulerElementT2 {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        syntax::parse_t2(s)
    }
}

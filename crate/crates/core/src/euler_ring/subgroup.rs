//! Closed subgroups of the 2-torus, encoded by their annihilator lattices.
//!
//! A closed subgroup `H ⊂ T²` is determined by the lattice `L ⊂ ℤ²` of characters
//! `(m, n)` with `e^{i(mφ₁ + nφ₂)} = 1` on `H`. The lattice is kept in a canonical
//! basis so that structural equality coincides with equality of subgroups:
//!
//! * rank 0: `L = 0`, `H = T²`;
//! * rank 1: `L = ℤ·(m, n)` with `n > 0`, or `n = 0` and `m > 0` (a 1-dimensional `H_{(m,n)}`);
//! * rank 2: Hermite normal form rows `(a, 0), (b, d)` with `a, d > 0` and `0 ≤ b < a`
//!   (a finite subgroup of order `a·d`).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::EulerError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Lattice {
    Zero,
    Line { m: BigInt, n: BigInt },
    Full { a: BigInt, b: BigInt, d: BigInt },
}

/// A closed subgroup of `T²`, stored as the canonical basis of its annihilator lattice.
///
/// Ordering is by dimension (descending), then by the canonical lattice rows
/// lexicographically. This is the order in which Euler ring terms are printed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusSubgroup(Lattice);

/// Incremental lower-triangular basis `(a, 0), (b, d)`; a zero entry on the
/// diagonal means that row is absent.
#[derive(Default)]
struct HermiteBuilder {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl HermiteBuilder {
    fn insert(&mut self, x: BigInt, y: BigInt) {
        if y.is_zero() {
            self.a = self.a.gcd(&x);
        } else if self.d.is_zero() {
            if y.is_negative() {
                self.b = -x;
                self.d = -y;
            } else {
                self.b = x;
                self.d = y;
            }
        } else {
            // Unimodular change of basis on {(b, d), (x, y)}:
            // (s, t) gives the new second row, the other combination lands on the x-axis.
            let ext = self.d.extended_gcd(&y);
            let g = ext.gcd.abs();
            let (s, t) = if ext.gcd.is_negative() {
                (-ext.x, -ext.y)
            } else {
                (ext.x, ext.y)
            };
            let on_axis = (&y / &g) * &self.b - (&self.d / &g) * &x;
            self.b = s * &self.b + t * x;
            self.d = g;
            self.a = self.a.gcd(&on_axis);
        }
        if self.a.is_positive() {
            self.b = self.b.mod_floor(&self.a);
        }
    }

    fn finish(self) -> TorusSubgroup {
        let lattice = match (self.a.is_zero(), self.d.is_zero()) {
            (true, true) => Lattice::Zero,
            (true, false) => Lattice::Line {
                m: self.b,
                n: self.d,
            },
            (false, true) => Lattice::Line {
                m: self.a,
                n: BigInt::zero(),
            },
            (false, false) => Lattice::Full {
                a: self.a,
                b: self.b,
                d: self.d,
            },
        };
        TorusSubgroup(lattice)
    }
}

impl TorusSubgroup {
    /// The whole torus `T²`.
    pub fn torus() -> Self {
        TorusSubgroup(Lattice::Zero)
    }

    /// The trivial subgroup `{e}`.
    pub fn trivial() -> Self {
        Self::finite(1, 0, 1)
    }

    /// `H_{(m,n)}`, the kernel of the character `(m, n)`. The kernel of `(0, 0)` is `T²`.
    pub fn kernel(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        Self::from_characters([(m.into(), n.into())])
    }

    /// The finite subgroup annihilated by the rows `(a, 0), (b, d)`. Rows need not be
    /// canonical; a degenerate pair yields a positive-dimensional subgroup.
    pub fn finite(a: impl Into<BigInt>, b: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self::from_characters([(a.into(), BigInt::zero()), (b.into(), d.into())])
    }

    /// Intersection of the kernels of all given characters. `(0, 0)` entries are ignored,
    /// and the empty list gives `T²`.
    pub fn from_characters<I, T>(chars: I) -> Self
    where
        I: IntoIterator<Item = (T, T)>,
        T: Into<BigInt>,
    {
        let mut builder = HermiteBuilder::default();
        for (m, n) in chars {
            builder.insert(m.into(), n.into());
        }
        builder.finish()
    }

    /// Canonical basis rows of the annihilator lattice (0, 1 or 2 rows).
    pub fn rows(&self) -> Vec<(BigInt, BigInt)> {
        match &self.0 {
            Lattice::Zero => Vec::new(),
            Lattice::Line { m, n } => vec![(m.clone(), n.clone())],
            Lattice::Full { a, b, d } => vec![(a.clone(), BigInt::zero()), (b.clone(), d.clone())],
        }
    }

    pub fn rank(&self) -> usize {
        match self.0 {
            Lattice::Zero => 0,
            Lattice::Line { .. } => 1,
            Lattice::Full { .. } => 2,
        }
    }

    /// Dimension of the subgroup as a Lie group: `2 - rank`.
    pub fn dim(&self) -> usize {
        2 - self.rank()
    }

    /// Number of elements of a finite subgroup.
    pub fn order(&self) -> Result<BigInt, EulerError> {
        match &self.0 {
            Lattice::Full { a, d, .. } => Ok(a * d),
            _ => Err(EulerError::NotFinite {
                subgroup: self.clone(),
                dim: self.dim(),
            }),
        }
    }

    /// `self ∩ other`, whose annihilator is the lattice sum.
    pub fn intersect(&self, other: &Self) -> Self {
        Self::from_characters(self.rows().into_iter().chain(other.rows()))
    }

    pub fn is_torus(&self) -> bool {
        matches!(self.0, Lattice::Zero)
    }

    /// Whether the character `(m, n)` is trivial on this subgroup, i.e. lies in the lattice.
    pub fn annihilates(&self, m: &BigInt, n: &BigInt) -> bool {
        match &self.0 {
            Lattice::Zero => m.is_zero() && n.is_zero(),
            Lattice::Line { m: gm, n: gn } => {
                // (m, n) ∈ ℤ·(gm, gn)  ⇔  collinear and the ratio is an integer
                if (m * gn - n * gm).is_zero() {
                    if gn.is_zero() {
                        m.is_multiple_of(gm)
                    } else {
                        n.is_multiple_of(gn)
                    }
                } else {
                    false
                }
            }
            Lattice::Full { a, b, d } => {
                if !n.is_multiple_of(d) {
                    return false;
                }
                let rest = m - (n / d) * b;
                rest.is_multiple_of(a)
            }
        }
    }

    /// For a finite subgroup with canonical rows `(a,0),(b,d)`: the `(a, b, d)` triple.
    pub fn hermite_entries(&self) -> Option<(&BigInt, &BigInt, &BigInt)> {
        match &self.0 {
            Lattice::Full { a, b, d } => Some((a, b, d)),
            _ => None,
        }
    }

    /// For a 1-dimensional subgroup: its normalized generating character.
    pub fn generator(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.0 {
            Lattice::Line { m, n } => Some((m, n)),
            _ => None,
        }
    }
}

impl Ord for TorusSubgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Lattice::Line { m: m1, n: n1 }, Lattice::Line { m: m2, n: n2 }) => {
                (m1, n1).cmp(&(m2, n2))
            }
            (
                Lattice::Full {
                    a: a1,
                    b: b1,
                    d: d1,
                },
                Lattice::Full {
                    a: a2,
                    b: b2,
                    d: d2,
                },
            ) => (a1, b1, d1).cmp(&(a2, b2, d2)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for TorusSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints the generator token of the Euler ring grammar: `T`, `H(m,n)` or `F(a,0;b,d)`.
impl fmt::Display for TorusSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Lattice::Zero => write!(f, "T"),
            Lattice::Line { m, n } => write!(f, "H({m},{n})"),
            Lattice::Full { a, b, d } => write!(f, "F({a},0;{b},{d})"),
        }
    }
}

impl Default for TorusSubgroup {
    fn default() -> Self {
        Self::torus()
    }
}

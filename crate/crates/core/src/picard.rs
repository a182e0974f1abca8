//! The Picard lattice of a smooth cubic surface.
//!
//! A class `a l - sum b_i e_i` is stored as the 7-tuple `(a; b1, ..., b6)`,
//! where `l` pulls back a line of P^2 and `e_i` are the six exceptional
//! curves. The intersection form has signature (1, 6):
//! `l.l = 1`, `e_i.e_i = -1`, all other products zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 7]", into = "[i64; 7]")]
pub struct DivisorClass {
    pub a: i64,
    pub b: [i64; 6],
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { a: 0, b: [0; 6] };

    /// The hyperplane class `h = 3l - sum e_i`.
    pub const HYPERPLANE: DivisorClass = DivisorClass { a: 3, b: [1; 6] };

    /// The canonical class `K = -h`.
    pub const CANONICAL: DivisorClass = DivisorClass { a: -3, b: [-1; 6] };

    /// The class `l` (pullback of a line in the plane).
    pub const LINE_PULLBACK: DivisorClass = DivisorClass { a: 1, b: [0; 6] };

    pub const fn new(a: i64, b: [i64; 6]) -> Self {
        DivisorClass { a, b }
    }

    /// The exceptional class `e_i` for `i` in `1..=6`, i.e. `(0; ..., -1, ...)`.
    ///
    /// # Panics
    /// If `i` is not in `1..=6`.
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=6).contains(&i), "exceptional index {i} out of range 1..=6");
        let mut b = [0; 6];
        b[i - 1] = -1;
        DivisorClass { a: 0, b }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    pub fn coords(&self) -> [i64; 7] {
        (*self).into()
    }

    /// Largest absolute coordinate.
    pub fn max_abs_coord(&self) -> i64 {
        self.b.iter().fold(self.a.abs(), |m, x| m.max(x.abs()))
    }

    pub fn intersect(&self, other: &DivisorClass) -> i64 {
        intersect(self, other)
    }

    pub fn self_intersection(&self) -> i64 {
        intersect(self, self)
    }

    pub fn degree(&self) -> i64 {
        degree(self)
    }

    pub fn genus(&self) -> i64 {
        genus(self)
    }
}

pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> i64 {
    d1.a * d2.a - d1.b.iter().zip(&d2.b).map(|(x, y)| x * y).sum::<i64>()
}

/// `D . h = 3a - sum b_i`.
pub fn degree(d: &DivisorClass) -> i64 {
    3 * d.a - d.b.iter().sum::<i64>()
}

/// `n (n - 1) / 2`, for every integer `n`.
pub(crate) fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Arithmetic genus from the plane-model formula `C(a-1, 2) - sum C(b_i, 2)`.
///
/// Defined for every tuple (negative arguments included), which makes it
/// agree with [`adjunction_genus`] on the whole lattice.
pub fn genus(d: &DivisorClass) -> i64 {
    choose2(d.a - 1) - d.b.iter().map(|&x| choose2(x)).sum::<i64>()
}

/// Genus from adjunction, `(D.D + D.K) / 2 + 1`.
pub fn adjunction_genus(d: &DivisorClass) -> i64 {
    let twice = intersect(d, d) + intersect(d, &DivisorClass::CANONICAL);
    debug_assert!(twice % 2 == 0);
    twice / 2 + 1
}

/// Riemann-Roch: `chi(O_S(D)) = D.(D - K) / 2 + 1`.
pub fn euler_characteristic(d: &DivisorClass) -> i64 {
    let twice = intersect(d, &(*d - DivisorClass::CANONICAL));
    debug_assert!(twice % 2 == 0);
    twice / 2 + 1
}

impl From<[i64; 7]> for DivisorClass {
    fn from(c: [i64; 7]) -> Self {
        DivisorClass { a: c[0], b: [c[1], c[2], c[3], c[4], c[5], c[6]] }
    }
}

impl From<DivisorClass> for [i64; 7] {
    fn from(d: DivisorClass) -> Self {
        [d.a, d.b[0], d.b[1], d.b[2], d.b[3], d.b[4], d.b[5]]
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        let mut b = self.b;
        for (x, y) in b.iter_mut().zip(rhs.b) {
            *x += y;
        }
        DivisorClass { a: self.a + rhs.a, b }
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { a: -self.a, b: self.b.map(|x| -x) }
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass { a: self * rhs.a, b: rhs.b.map(|x| self * x) }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [b1, b2, b3, b4, b5, b6] = self.b;
        write!(f, "({};{},{},{},{},{},{})", self.a, b1, b2, b3, b4, b5, b6)
    }
}

/// Parses `a,b1,b2,b3,b4,b5,b6`. Surrounding parentheses and a `;` after `a`
/// are also accepted, so `Display` output round-trips.
impl FromStr for DivisorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = trimmed.split([',', ';']).map(str::trim).collect();
        if parts.len() != 7 {
            return Err(Error::Parse(format!(
                "expected 7 comma-separated integers a,b1,..,b6, got {} in {s:?}",
                parts.len()
            )));
        }
        let mut c = [0i64; 7];
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|e| Error::Parse(format!("bad integer {p:?} in {s:?}: {e}")))?;
        }
        Ok(c.into())
    }
}

//! Curves of bidegree `(a, b)` on a smooth quadric `Q = P^1 x P^1`.

use serde::{Deserialize, Serialize};

use crate::cohomology::Cohomology;
use crate::error::{Error, Result};

fn p(k: i64) -> i64 {
    (k + 1).max(0)
}

fn q(k: i64) -> i64 {
    (-k - 1).max(0)
}

/// `(h0, h1, h2)` of `O_Q(m, n)` by Kunneth from `O_P1(k)`.
pub fn cohomology_quadric(m: i64, n: i64) -> Cohomology {
    Cohomology { h0: p(m) * p(n), h1: p(m) * q(n) + q(m) * p(n), h2: q(m) * q(n) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum QuadricVerdict {
    Component,
    ProperSubvariety { codim: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricFamily {
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub g: i64,
    pub dim_w: i64,
    /// `h^1(I_C(2)) = h^1(O_Q(a - 4, b - 4))`.
    pub h1_ideal_2: i64,
    pub verdict: QuadricVerdict,
    /// The Hilbert scheme is generically smooth along every such family.
    pub generically_smooth: bool,
}

pub fn classify_quadric(a: i64, b: i64) -> Result<QuadricFamily> {
    if !(a >= b && b > 0 && a + b > 4) {
        return Err(Error::Domain(format!("bidegree ({a},{b}) needs a >= b > 0 and a + b > 4")));
    }
    let d = a + b;
    let g = (a - 1) * (b - 1);
    let h1_ideal_2 = cohomology_quadric(a - 4, b - 4).h1;
    let threshold = 2 * d - 8;
    let verdict = if g >= threshold {
        QuadricVerdict::Component
    } else {
        QuadricVerdict::ProperSubvariety { codim: threshold - g }
    };
    let expected = (threshold - g).max(0);
    if h1_ideal_2 != expected {
        return Err(Error::Internal(format!("bidegree ({a},{b}): h1(I_C(2)) = {h1_ideal_2}, expected {expected}")));
    }
    Ok(QuadricFamily { a, b, d, g, dim_w: 2 * d + g + 8, h1_ideal_2, verdict, generically_smooth: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cohomology_examples() {
        let c = |h0, h1, h2| Cohomology { h0, h1, h2 };
        assert_eq!(cohomology_quadric(0, 0), c(1, 0, 0));
        assert_eq!(cohomology_quadric(1, -2), c(0, 2, 0));
        assert_eq!(cohomology_quadric(-1, 3), c(0, 0, 0));
        assert_eq!(cohomology_quadric(-2, -2), c(0, 0, 1));
    }

    #[test]
    fn classify_examples() {
        let f = classify_quadric(4, 3).unwrap();
        assert_eq!((f.d, f.g, f.dim_w, f.verdict), (7, 6, 28, QuadricVerdict::Component));
        let f = classify_quadric(5, 2).unwrap();
        assert_eq!((f.d, f.g), (7, 4));
        assert_eq!(f.verdict, QuadricVerdict::ProperSubvariety { codim: 2 });
        assert_eq!(f.h1_ideal_2, 2);
        let f = classify_quadric(6, 3).unwrap();
        assert_eq!((f.d, f.g, f.verdict), (9, 10, QuadricVerdict::Component));
    }

    #[test]
    fn domain_errors() {
        assert!(classify_quadric(2, 3).is_err());
        assert!(classify_quadric(3, 0).is_err());
        assert!(classify_quadric(2, 2).is_err());
    }

    #[test]
    fn euler_characteristic_and_duality() {
        for m in -12..=12 {
            for n in -12..=12 {
                let c = cohomology_quadric(m, n);
                assert_eq!(c.h0 - c.h1 + c.h2, (m + 1) * (n + 1));
                assert_eq!(c.h2, cohomology_quadric(-m - 2, -n - 2).h0);
            }
        }
    }

    #[test]
    fn threshold_identity() {
        for a in 1..=40 {
            for b in 1..=a {
                if a + b <= 4 {
                    continue;
                }
                let f = classify_quadric(a, b).unwrap();
                assert_eq!((a - 3) * (b - 3), f.g - 2 * f.d + 8);
                assert_eq!(f.h1_ideal_2 == 0, f.g >= 2 * f.d - 8);
            }
        }
    }
}

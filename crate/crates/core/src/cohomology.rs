//! Linear systems and line-bundle cohomology on a smooth cubic surface.
//!
//! In an E-standard basis for `D`:
//!
//! * `D` is nef (equivalently `|D|` is non-empty and free) iff `b6 >= 0`;
//! * a nef `D` has `h^1(D) = h^2(D) = 0`, so `h^0(D) = chi(D)`;
//! * when `|D|` is non-empty its fixed part contains `sum_{b_i < 0} (-b_i) e_i`,
//!   a disjoint union of multiple lines.
//!
//! [`decompose`] turns this into a decision procedure by peeling that fixed
//! part, re-standardising and repeating until the remainder is nef or is
//! provably not effective. Effective classes pair non-negatively with the
//! nef classes `l` and `h`, so `a < 0` or `deg < 0` in any basis certifies
//! emptiness. Each peel lowers the degree, so the loop terminates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{degree, euler_characteristic, intersect, DivisorClass};
use crate::weyl::{apply_word, standard_class, standardize};

/// Shape of the mobile part of an effective system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MobileKind {
    /// No moving part (also used for ineffective classes).
    Zero,
    /// Square zero: the pencil of conics `m (l - e1)`, a general member being
    /// `m` disjoint conics.
    Conics(i64),
    /// Square positive: a general member is smooth and connected.
    Big,
}

/// A multiple line `multiplicity * class` split off during peeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLine {
    /// The line class, in the coordinates of the analysed input.
    pub class: DivisorClass,
    pub multiplicity: i64,
    /// Peeling round (0-based) in which the line was removed.
    pub stage: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cohomology {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemAnalysis {
    pub class: DivisorClass,
    pub effective: bool,
    /// `class - mobile`; zero when ineffective.
    pub fixed_part: DivisorClass,
    pub fixed_lines: Vec<FixedLine>,
    /// Nef when effective; zero when ineffective.
    pub mobile: DivisorClass,
    pub mobile_kind: MobileKind,
    /// Number of peeling rounds that removed lines.
    pub peel_stages: usize,
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl SystemAnalysis {
    pub fn cohomology(&self) -> Cohomology {
        Cohomology { h0: self.h0, h1: self.h1, h2: self.h2 }
    }
}

/// Dimension of `H^0(O_{mE})` for a line `E`.
pub fn h0_multiple_line(m: i64) -> i64 {
    assert!(m >= 0, "multiplicity must be non-negative, got {m}");
    m * (m + 1) / 2
}

/// Dimension of `H^0(O_{mD})` for a conic `D`.
pub fn h0_multiple_conic(m: i64) -> i64 {
    assert!(m >= 0, "multiplicity must be non-negative, got {m}");
    m
}

pub fn is_nef(d: &DivisorClass) -> Result<bool> {
    Ok(standard_class(d)?.b[5] >= 0)
}

pub fn is_big_and_nef(d: &DivisorClass) -> Result<bool> {
    Ok(is_nef(d)? && intersect(d, d) > 0)
}

struct Peeling {
    effective: bool,
    mobile: DivisorClass,
    lines: Vec<FixedLine>,
    stages: usize,
}

fn peel(d: &DivisorClass) -> Result<Peeling> {
    let ineffective = |lines, stages| Peeling { effective: false, mobile: DivisorClass::ZERO, lines, stages };
    let mut cur = *d;
    let mut lines = Vec::new();
    let mut stage = 0;
    loop {
        let sf = standardize(&cur)?;
        let s = sf.class;
        if s.is_zero() {
            return Ok(Peeling { effective: true, mobile: cur, lines, stages: stage });
        }
        if s.a < 0 || degree(&s) <= 0 {
            return Ok(ineffective(Vec::new(), stage));
        }
        if s.b[5] >= 0 {
            return Ok(Peeling { effective: true, mobile: cur, lines, stages: stage });
        }

        // Word entries are involutions, so the reversed word maps the
        // standard basis back to the coordinates of `cur`.
        let back: Vec<_> = sf.word.iter().rev().copied().collect();
        let first_new = lines.len();
        for (i, &bi) in s.b.iter().enumerate().filter(|(_, &bi)| bi < 0) {
            let line = apply_word(&DivisorClass::exceptional(i + 1), &back);
            cur = cur - (-bi) * line;
            lines.push(FixedLine { class: line, multiplicity: -bi, stage });
        }
        let batch = &lines[first_new..];
        for (i, x) in batch.iter().enumerate() {
            if intersect(&x.class, &x.class) != -1 || batch[i + 1..].iter().any(|y| intersect(&x.class, &y.class) != 0)
            {
                return Err(Error::Internal(format!(
                    "fixed lines of {d} at stage {stage} are not disjoint (-1)-curves"
                )));
            }
        }
        stage += 1;
    }
}

fn mobile_kind(mobile: &DivisorClass) -> Result<MobileKind> {
    if mobile.is_zero() {
        return Ok(MobileKind::Zero);
    }
    let sq = intersect(mobile, mobile);
    if sq > 0 {
        return Ok(MobileKind::Big);
    }
    let s = standard_class(mobile)?;
    match s {
        DivisorClass { a: m, b: [b1, 0, 0, 0, 0, 0] } if sq == 0 && m > 0 && b1 == m => Ok(MobileKind::Conics(m)),
        _ => {
            Err(Error::Internal(format!("mobile part {mobile} (standard form {s}) is neither big nor a conic pencil")))
        }
    }
}

/// `h^0(O_S(D))`, computed entirely in standard coordinates.
pub fn h0(d: &DivisorClass) -> Result<i64> {
    let mut cur = *d;
    loop {
        let s = standard_class(&cur)?;
        if s.is_zero() {
            return Ok(1);
        }
        if s.a < 0 || degree(&s) <= 0 {
            return Ok(0);
        }
        if s.b[5] >= 0 {
            return Ok(euler_characteristic(&s));
        }
        cur = DivisorClass { a: s.a, b: s.b.map(|x| x.max(0)) };
    }
}

/// `(h^0, h^1, h^2)` of `O_S(D)`: `h^0` from the mobile part, `h^2` by Serre
/// duality as `h^0(K - D)`, `h^1` from Riemann-Roch.
pub fn cohomology(d: &DivisorClass) -> Result<Cohomology> {
    let h0 = h0(d)?;
    let h2 = self::h0(&(DivisorClass::CANONICAL - *d))?;
    let h1 = h0 + h2 - euler_characteristic(d);
    if h1 < 0 {
        return Err(Error::Internal(format!("negative h1 = {h1} for {d}")));
    }
    Ok(Cohomology { h0, h1, h2 })
}

/// Effectivity, fixed/mobile split and cohomology of `D`.
pub fn decompose(d: &DivisorClass) -> Result<SystemAnalysis> {
    let p = peel(d)?;
    let coh = cohomology(d)?;
    let (fixed_part, kind) =
        if p.effective { (*d - p.mobile, mobile_kind(&p.mobile)?) } else { (DivisorClass::ZERO, MobileKind::Zero) };
    let expected_h0 = if p.effective { euler_characteristic(&p.mobile) } else { 0 };
    if coh.h0 != expected_h0 {
        return Err(Error::Internal(format!("h0 of {d}: peeling gives {expected_h0}, reduction gives {}", coh.h0)));
    }
    Ok(SystemAnalysis {
        class: *d,
        effective: p.effective,
        fixed_part,
        fixed_lines: if p.effective { p.lines } else { Vec::new() },
        mobile: p.mobile,
        mobile_kind: kind,
        peel_stages: p.stages,
        h0: coh.h0,
        h1: coh.h1,
        h2: coh.h2,
    })
}

/// `h^1(S, -D)` for effective non-zero `D` as `h^0(O_{D'}) + h^0(O_F) - 1`,
/// where `D'` is the mobile part and `F` the fixed part, a disjoint union of
/// multiple lines.
///
/// Only defined when a single peeling round reaches the mobile part; the
/// line description of `F` holds one basis at a time.
pub fn h1_of_minus(d: &DivisorClass) -> Result<i64> {
    if d.is_zero() {
        return Err(Error::Precondition("h1_of_minus needs a non-zero class".into()));
    }
    let p = peel(d)?;
    if !p.effective {
        return Err(Error::Precondition(format!("{d} is not effective")));
    }
    if p.stages > 1 {
        return Err(Error::Domain(format!(
            "fixed part of {d} needs {} peeling rounds; use cohomology(-D) instead",
            p.stages
        )));
    }
    let h0_mobile = match mobile_kind(&p.mobile)? {
        MobileKind::Zero => 0,
        MobileKind::Conics(m) => h0_multiple_conic(m),
        MobileKind::Big => 1,
    };
    let h0_fixed: i64 = p.lines.iter().map(|l| h0_multiple_line(l.multiplicity)).sum();
    Ok(h0_mobile + h0_fixed - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: i64, b: [i64; 6]) -> DivisorClass {
        DivisorClass::new(a, b)
    }

    fn coh(h0: i64, h1: i64, h2: i64) -> Cohomology {
        Cohomology { h0, h1, h2 }
    }

    #[test]
    fn nefness() {
        assert!(is_nef(&DivisorClass::HYPERPLANE).unwrap());
        assert!(!is_nef(&DivisorClass::exceptional(6)).unwrap());
        assert!(!is_nef(&c(3, [1, 1, 1, 1, 1, -1])).unwrap());
        assert!(is_big_and_nef(&c(3, [1, 1, 1, 1, 1, 0])).unwrap());
        assert_eq!(c(3, [1, 1, 1, 1, 1, 0]).self_intersection(), 4);
        assert!(is_nef(&c(1, [1, 0, 0, 0, 0, 0])).unwrap());
        assert!(!is_big_and_nef(&c(1, [1, 0, 0, 0, 0, 0])).unwrap());
        assert!(!is_big_and_nef(&DivisorClass::ZERO).unwrap());
    }

    #[test]
    fn decompose_single_fixed_line() {
        let s = decompose(&c(3, [1, 1, 1, 1, 1, -1])).unwrap();
        assert!(s.effective);
        assert_eq!(s.fixed_part, DivisorClass::exceptional(6));
        assert_eq!(s.fixed_lines, vec![FixedLine { class: DivisorClass::exceptional(6), multiplicity: 1, stage: 0 }]);
        assert_eq!(s.mobile, c(3, [1, 1, 1, 1, 1, 0]));
        assert_eq!(s.mobile_kind, MobileKind::Big);
    }

    #[test]
    fn decompose_double_line() {
        let s = decompose(&c(0, [0, 0, 0, 0, 0, -2])).unwrap();
        assert!(s.effective);
        assert_eq!(s.fixed_part, 2 * DivisorClass::exceptional(6));
        assert_eq!(s.fixed_lines.len(), 1);
        assert_eq!(s.fixed_lines[0].multiplicity, 2);
        assert_eq!(s.mobile, DivisorClass::ZERO);
        assert_eq!(s.mobile_kind, MobileKind::Zero);
    }

    #[test]
    fn decompose_ineffective() {
        let s = decompose(&c(-1, [0; 6])).unwrap();
        assert!(!s.effective);
        assert_eq!(s.h0, 0);
        assert!(s.fixed_lines.is_empty());
    }

    #[test]
    fn fixed_lines_in_a_moved_basis() {
        // l - e1 - e2 is the line through the first two points.
        let line = c(1, [1, 1, 0, 0, 0, 0]);
        let d = 2 * line + DivisorClass::HYPERPLANE;
        let s = decompose(&d).unwrap();
        assert!(s.effective);
        assert_eq!(s.fixed_lines.len(), 1);
        assert_eq!(s.fixed_lines[0].class, line);
        assert_eq!(s.fixed_lines[0].multiplicity, 1);
        assert_eq!(s.mobile + s.fixed_part, d);
    }

    #[test]
    fn conic_pencils() {
        let s = decompose(&(3 * c(1, [0, 0, 0, 1, 0, 0]))).unwrap();
        assert_eq!(s.mobile_kind, MobileKind::Conics(3));
        assert_eq!(s.h0, 4);
        // l - e1 - e2 + e3 + e4 + e5 + e6 reaches a nef remainder only after two rounds.
        let s = decompose(&c(1, [1, 1, -1, -1, -1, -1])).unwrap();
        assert!(s.effective);
        assert_eq!(s.peel_stages, 2);
        assert_eq!(s.mobile, DivisorClass::ZERO);
        assert_eq!(s.h0, 1);
    }

    #[test]
    fn multiple_curve_dimensions() {
        assert_eq!(h0_multiple_line(2), 3);
        assert_eq!(h0_multiple_line(0), 0);
        assert_eq!(h0_multiple_conic(3), 3);
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(cohomology(&DivisorClass::ZERO).unwrap(), coh(1, 0, 0));
        assert_eq!(cohomology(&DivisorClass::CANONICAL).unwrap(), coh(0, 0, 1));
        // Hand derivation from 0 -> O(E) -> O(2E) -> O_E(-2) -> 0 and
        // 0 -> O -> O(E) -> O_E(-1) -> 0: h^1(2E) = h^1(O_P1(-2)) = 1.
        let two_e = 2 * DivisorClass::exceptional(6);
        assert_eq!(cohomology(&two_e).unwrap(), coh(1, 1, 0));
        // h^1(-2E) = h^0(O_{2E}) - 1 = 3 - 1.
        assert_eq!(cohomology(&-two_e).unwrap(), coh(0, 2, 0));
    }

    #[test]
    fn h1_of_minus_examples() {
        let mumford = c(12, [4, 4, 4, 4, 4, 2]);
        let d = mumford - 3 * DivisorClass::HYPERPLANE;
        assert_eq!(h1_of_minus(&d).unwrap(), 1);
        assert_eq!(cohomology(&-d).unwrap().h1, 1);
        let two_e = 2 * DivisorClass::exceptional(6);
        assert_eq!(h1_of_minus(&two_e).unwrap(), 2);
        assert_eq!(h1_of_minus(&c(1, [1, 0, 0, 0, 0, 0])).unwrap(), 0);
    }

    #[test]
    fn h1_of_minus_preconditions() {
        assert!(matches!(h1_of_minus(&DivisorClass::ZERO), Err(Error::Precondition(_))));
        assert!(matches!(h1_of_minus(&c(-1, [0; 6])), Err(Error::Precondition(_))));
        assert!(matches!(h1_of_minus(&c(1, [1, 1, -1, -1, -1, -1])), Err(Error::Domain(_))));
    }

    fn small_box(r: i64) -> impl Iterator<Item = DivisorClass> {
        let n = (2 * r + 1) as usize;
        (0..n.pow(7)).map(move |mut idx| {
            let mut c = [0i64; 7];
            for x in c.iter_mut() {
                *x = (idx % n) as i64 - r;
                idx /= n;
            }
            DivisorClass::from(c)
        })
    }

    #[test]
    fn box_properties() {
        let k = DivisorClass::CANONICAL;
        for d in small_box(3) {
            let a = decompose(&d).unwrap();
            let chi = euler_characteristic(&d);
            assert_eq!(a.h0 - a.h1 + a.h2, chi, "{d}");
            assert_eq!(a.h2, h0(&(k - d)).unwrap(), "{d}");
            if a.effective {
                assert!(is_nef(&a.mobile).unwrap(), "{d}");
                assert_eq!(a.mobile + a.fixed_part, d);
                let total = a.fixed_lines.iter().fold(DivisorClass::ZERO, |s, l| s + l.multiplicity * l.class);
                assert_eq!(total, a.fixed_part, "{d}");
                assert!(a.h0 <= h0(&(d + DivisorClass::HYPERPLANE)).unwrap(), "{d}");
                if !d.is_zero() && a.peel_stages <= 1 {
                    assert_eq!(h1_of_minus(&d).unwrap(), cohomology(&-d).unwrap().h1, "{d}");
                }
            } else {
                assert_eq!(a.h0, 0);
            }
            if is_nef(&d).unwrap() {
                assert_eq!(a.cohomology(), coh(chi, 0, 0), "{d}");
                if a.fixed_lines.is_empty() && d.self_intersection() > 0 {
                    assert_eq!((a.h1, a.h2), (0, 0));
                }
            }
        }
    }
}

//! Families of space curves on smooth cubic surfaces.
//!
//! For `d > 9` every admissible tuple
//!
//! ```text
//! a > b1 >= ... >= b6 >= 0,  a >= b1 + b2 + b3
//! ```
//!
//! names exactly one maximal family `W(a; b)` of smooth connected curves of
//! degree `d = 3a - sum b_i` and genus `g = C(a-1,2) - sum C(b_i,2)` lying on
//! a smooth cubic. It has dimension `d + g + 18`, while every component of
//! the Hilbert scheme has dimension at least `4d`, so only the range
//! `Omega = { d > 9, g >= 3d - 18 }` is interesting. There the gap between
//! the tangent space and the family is `h^1(I_C(3))`, computed on the
//! surface as `h^1(S, -(C - 3h))`.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{cohomology, decompose, h0, is_big_and_nef};
use crate::error::{Error, Result};
use crate::picard::{degree, genus, intersect, DivisorClass};

const H: DivisorClass = DivisorClass::HYPERPLANE;

/// Largest degree accepted by [`sweep`].
pub const MAX_SWEEP_DEGREE: i64 = 40;

/// An admissible E-multidegree `(a; b1..b6)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "DivisorClass", into = "DivisorClass")]
pub struct FamilyKey(DivisorClass);

impl FamilyKey {
    pub fn new(class: DivisorClass) -> Result<Self> {
        let DivisorClass { a, b } = class;
        let sorted = b.windows(2).all(|w| w[0] >= w[1]);
        if a > b[0] && sorted && b[5] >= 0 && a >= b[0] + b[1] + b[2] {
            Ok(FamilyKey(class))
        } else {
            Err(Error::Domain(format!(
                "{class} is not admissible (need a > b1 >= ... >= b6 >= 0 and a >= b1 + b2 + b3)"
            )))
        }
    }

    pub fn class(&self) -> DivisorClass {
        self.0
    }

    pub fn degree(&self) -> i64 {
        degree(&self.0)
    }

    pub fn genus(&self) -> i64 {
        genus(&self.0)
    }

    pub fn in_omega(&self) -> bool {
        in_omega(self.degree(), self.genus())
    }
}

impl TryFrom<DivisorClass> for FamilyKey {
    type Error = Error;
    fn try_from(c: DivisorClass) -> Result<Self> {
        FamilyKey::new(c)
    }
}

impl From<FamilyKey> for DivisorClass {
    fn from(k: FamilyKey) -> Self {
        k.0
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn in_omega(d: i64, g: i64) -> bool {
    d > 9 && g >= 3 * d - 18
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ReducedComponent,
    NonReducedComponent,
    NotComponent,
    /// `g < 3d - 18`: the family is too small to be a component.
    BelowOmega,
    Open,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ReducedComponent => "reduced_component",
            Verdict::NonReducedComponent => "non_reduced_component",
            Verdict::NotComponent => "not_component",
            Verdict::BelowOmega => "below_omega",
            Verdict::Open => "open",
        })
    }
}

/// Ranges where Kleppe proved the Kleppe-Ellia conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LiteratureFlag {
    /// `d >= 18` and `g > 7 + (d-2)^2/8`.
    #[serde(rename = "kleppe_range_1")]
    KleppeRange1,
    /// `14 <= d <= 17` and `g > -1 + (d^2-4)/8`.
    #[serde(rename = "kleppe_range_2")]
    KleppeRange2,
}

pub fn literature_flags(d: i64, g: i64) -> Vec<LiteratureFlag> {
    let mut flags = Vec::new();
    if d >= 18 && 8 * g > 56 + (d - 2) * (d - 2) {
        flags.push(LiteratureFlag::KleppeRange1);
    }
    if (14..=17).contains(&d) && 8 * g > -8 + d * d - 4 {
        flags.push(LiteratureFlag::KleppeRange2);
    }
    flags
}

/// Lattice-level hypotheses and consequences of the obstruction criterion:
/// the fixed part of `|C - 3h|` is a single line `E` and `|C - 4h|` is
/// non-empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreCheck {
    pub fixed_part_is_single_line: bool,
    pub d_minus_4h_effective: bool,
    /// `C.E = 2`, so `Z = C n E` has length two.
    pub ce_is_2: bool,
    pub c3he_nef_big: bool,
    pub delta_effective: bool,
    pub delta_disjoint_e: bool,
    /// `(3h + 2E - C).C < 0`.
    pub injectivity_inequality: bool,
    pub h1_is_1: bool,
    pub line: Option<DivisorClass>,
    /// `C - 4h - 2E`.
    pub delta: Option<DivisorClass>,
}

impl CoreCheck {
    pub fn hypotheses_hold(&self) -> bool {
        self.fixed_part_is_single_line && self.d_minus_4h_effective
    }

    pub fn consequences_hold(&self) -> bool {
        self.ce_is_2
            && self.c3he_nef_big
            && self.delta_effective
            && self.delta_disjoint_e
            && self.injectivity_inequality
            && self.h1_is_1
    }

    pub fn all_hold(&self) -> bool {
        self.hypotheses_hold() && self.consequences_hold()
    }

    /// Consequences must follow whenever the hypotheses do.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold() || self.consequences_hold()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub key: FamilyKey,
    pub d: i64,
    pub g: i64,
    pub in_omega: bool,
    pub dim_w: i64,
    /// `chi(N_C) = 4d`.
    pub chi_normal: i64,
    pub h1_ideal_3: i64,
    pub h1_ideal_1: i64,
    /// `h^1(O_C(3)) = h^0(S, C - 4h)`.
    pub h1_oc3: i64,
    pub h0_normal: i64,
    pub verdict: Verdict,
    /// `h^1(I_C(3)) != 0` and `h^1(I_C(1)) = 0`.
    pub kleppe_ellia_applies: bool,
    /// Only populated on [`Verdict::Open`].
    pub literature_flags: Vec<LiteratureFlag>,
    pub core_hypotheses: Option<CoreCheck>,
}

/// `h^1(I_C(n)) = h^1(S, -(C - nh))`.
pub fn h1_ideal(key: &FamilyKey, n: u32) -> Result<i64> {
    let twist = key.class() - i64::from(n) * H;
    Ok(cohomology(&-twist)?.h1)
}

/// `h^1(I_C(3))` from the multidegree alone: zero for `d < 12`, otherwise
/// `#{b_i = 2} + 3 #{b_i = 1} + 6 #{b_i = 0}`. Only defined inside Omega.
///
/// The count assumes the fixed part of `|C - 3h|` is `sum (3 - b_i) e_i`.
/// That fails when the remainder still meets a further line negatively,
/// e.g. `(17; 8,7,2,2,2,2)` where `l - e1 - e2` is also fixed and the true
/// value is 5, not 4. [`h1_ideal`] is the authoritative route.
pub fn h1_ideal_3_closed_form(key: &FamilyKey) -> Result<i64> {
    let (d, g) = (key.degree(), key.genus());
    if !in_omega(d, g) {
        return Err(Error::Domain(format!("(d, g) = ({d}, {g}) of {key} is outside Omega")));
    }
    if d < 12 {
        return Ok(0);
    }
    Ok(key
        .class()
        .b
        .iter()
        .map(|&b| match b {
            2 => 1,
            1 => 3,
            0 => 6,
            _ => 0,
        })
        .sum())
}

pub fn verify_core(key: &FamilyKey) -> Result<CoreCheck> {
    let c = key.class();
    let minus_3h = decompose(&(c - 3 * H))?;
    let line = match minus_3h.fixed_lines.as_slice() {
        [only] if minus_3h.effective && only.multiplicity == 1 => Some(only.class),
        _ => None,
    };
    let d_minus_4h_effective = h0(&(c - 4 * H))? > 0;
    let h1_is_1 = h1_ideal(key, 3)? == 1;

    let mut check = CoreCheck {
        fixed_part_is_single_line: line.is_some(),
        d_minus_4h_effective,
        ce_is_2: false,
        c3he_nef_big: false,
        delta_effective: false,
        delta_disjoint_e: false,
        injectivity_inequality: false,
        h1_is_1,
        line,
        delta: None,
    };
    if let Some(e) = line {
        let delta = c - 4 * H - 2 * e;
        let h0_delta = h0(&delta)?;
        check.ce_is_2 = intersect(&c, &e) == 2;
        check.c3he_nef_big = is_big_and_nef(&(c - 3 * H - e))?;
        check.delta_effective = h0_delta > 0;
        // E is not a fixed component of |delta| and meets it in degree 0.
        check.delta_disjoint_e = intersect(&delta, &e) == 0 && h0(&(delta - e))? < h0_delta;
        check.injectivity_inequality = intersect(&(3 * H + 2 * e - c), &c) < 0;
        check.delta = Some(delta);
    }
    Ok(check)
}

pub fn classify(key: &FamilyKey) -> Result<FamilyReport> {
    let (d, g) = (key.degree(), key.genus());
    if d <= 9 {
        return Err(Error::Domain(format!("{key} has degree {d}; families are classified only for d > 9")));
    }
    let omega = in_omega(d, g);
    let dim_w = d + g + 18;
    let chi_normal = 4 * d;
    let h1_ideal_3 = h1_ideal(key, 3)?;
    let h1_ideal_1 = h1_ideal(key, 1)?;
    let h1_oc3 = h0(&(key.class() - 4 * H))?;
    let h0_normal = chi_normal + h1_oc3;

    if omega {
        if h0_normal - dim_w != h1_ideal_3 {
            return Err(Error::Internal(format!(
                "{key}: h0(N) - dim W = {} but h1(I_C(3)) = {h1_ideal_3}",
                h0_normal - dim_w
            )));
        }
        if h1_oc3 < h1_ideal_3 {
            return Err(Error::Internal(format!("{key}: h1(O_C(3)) = {h1_oc3} < h1(I_C(3)) = {h1_ideal_3}")));
        }
    }

    let [.., b5, b6] = key.class().b;
    let verdict = if !omega {
        Verdict::BelowOmega
    } else if h1_ideal_3 == 0 {
        Verdict::ReducedComponent
    } else if b6 == 2 && b5 >= 3 {
        Verdict::NonReducedComponent
    } else if b6 == 0 {
        Verdict::NotComponent
    } else {
        Verdict::Open
    };

    let core = if omega {
        let check = verify_core(key)?;
        if !check.consistent() {
            return Err(Error::Internal(format!("{key}: core hypotheses hold but a consequence fails: {check:?}")));
        }
        Some(check)
    } else {
        None
    };

    Ok(FamilyReport {
        key: *key,
        d,
        g,
        in_omega: omega,
        dim_w,
        chi_normal,
        h1_ideal_3,
        h1_ideal_1,
        h1_oc3,
        h0_normal,
        verdict,
        kleppe_ellia_applies: h1_ideal_3 != 0 && h1_ideal_1 == 0,
        literature_flags: if verdict == Verdict::Open { literature_flags(d, g) } else { Vec::new() },
        core_hypotheses: core,
    })
}

/// Integer square root, floor.
fn isqrt(n: i64) -> i64 {
    if n < 0 {
        return -1;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Fills `b[pos..]` with non-increasing values `<= hi`, summing to `sum` and,
/// when `squares` is given, with squares summing to it.
fn descend(b: &mut [i64; 6], pos: usize, hi: i64, sum: i64, squares: Option<i64>, out: &mut dyn FnMut(&[i64; 6])) {
    let k = (6 - pos) as i64;
    if k == 0 {
        if sum == 0 && squares.is_none_or(|q| q == 0) {
            out(b);
        }
        return;
    }
    if sum < 0 || sum > k * hi {
        return;
    }
    if let Some(q) = squares {
        // sum^2 <= k * squares (Cauchy-Schwarz) and squares <= hi * sum.
        if q < 0 || sum * sum > k * q || q > hi * sum {
            return;
        }
    }
    let lo = (sum + k - 1) / k;
    for v in (lo..=hi.min(sum)).rev() {
        b[pos] = v;
        descend(b, pos + 1, v, sum - v, squares.map(|q| q - v * v), out);
    }
}

fn collect_for_a(a: i64, d: i64, squares: Option<i64>, keys: &mut Vec<FamilyKey>) {
    let mut b = [0i64; 6];
    descend(&mut b, 0, a - 1, 3 * a - d, squares, &mut |b| {
        if b[0] + b[1] + b[2] <= a {
            keys.push(FamilyKey(DivisorClass::new(a, *b)));
        }
    });
}

/// All admissible keys of degree `d` and genus `g`, sorted.
///
/// With `s = sum b_i = 3a - d` and `q = sum b_i^2 = a^2 - (2g - 2 + d)`,
/// Cauchy-Schwarz `s^2 <= 6q` gives `3a^2 - 6da + d^2 + 12g - 12 + 6d <= 0`,
/// which bounds `a`; inside that interval the `b` are found by a pruned
/// descent.
pub fn enumerate(d: i64, g: i64) -> Result<Vec<FamilyKey>> {
    if d <= 9 {
        return Err(Error::Domain(format!("enumeration needs d > 9, got {d}")));
    }
    let c0 = d * d + 12 * g - 12 + 6 * d;
    let disc = 36 * d * d - 12 * c0;
    let mut keys = Vec::new();
    if disc < 0 {
        return Ok(keys);
    }
    let r = isqrt(disc);
    let lo = ((6 * d - r) / 6 - 1).max((d + 2) / 3);
    let hi = ((6 * d + r) / 6 + 1).min(d);
    for a in lo..=hi {
        if 3 * a * a - 6 * d * a + c0 > 0 {
            continue;
        }
        collect_for_a(a, d, Some(a * a - (2 * g - 2 + d)), &mut keys);
    }
    keys.sort();
    Ok(keys)
}

/// All admissible keys of degree `d`, sorted by genus and then by key.
pub fn enumerate_degree(d: i64) -> Result<Vec<FamilyKey>> {
    if d <= 9 {
        return Err(Error::Domain(format!("enumeration needs d > 9, got {d}")));
    }
    let mut keys = Vec::new();
    // a <= d because b4 + b5 + b6 <= b1 + b2 + b3 <= a.
    for a in (d + 2) / 3..=d {
        collect_for_a(a, d, None, &mut keys);
    }
    keys.sort_by_key(|k| (k.genus(), *k));
    Ok(keys)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusMode {
    OmegaOnly,
    All,
}

/// Classifies every family with degree in `degrees`, ordered by
/// `(d, g, key)`.
pub fn sweep(degrees: RangeInclusive<i64>, mode: GenusMode) -> Result<Vec<FamilyReport>> {
    if degrees.is_empty() {
        return Ok(Vec::new());
    }
    if *degrees.start() <= 9 || *degrees.end() > MAX_SWEEP_DEGREE {
        return Err(Error::Domain(format!(
            "sweep degrees must lie in 10..={MAX_SWEEP_DEGREE}, got {}..={}",
            degrees.start(),
            degrees.end()
        )));
    }
    let mut keys = Vec::new();
    for d in degrees {
        keys.extend(enumerate_degree(d)?.into_iter().filter(|k| mode == GenusMode::All || k.in_omega()));
    }
    keys.par_iter().map(classify).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(a: i64, b: [i64; 6]) -> FamilyKey {
        FamilyKey::new(DivisorClass::new(a, b)).unwrap()
    }

    const MUMFORD: [i64; 7] = [12, 4, 4, 4, 4, 4, 2];

    fn mumford() -> FamilyKey {
        FamilyKey::new(MUMFORD.into()).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(FamilyKey::new(DivisorClass::new(12, [4, 4, 4, 4, 4, 2])).is_ok());
        assert!(FamilyKey::new(DivisorClass::new(4, [4, 0, 0, 0, 0, 0])).is_err());
        assert!(FamilyKey::new(DivisorClass::new(12, [2, 4, 4, 4, 4, 4])).is_err());
        assert!(FamilyKey::new(DivisorClass::new(12, [5, 5, 5, 0, 0, -1])).is_err());
        assert!(FamilyKey::new(DivisorClass::new(12, [5, 5, 3, 0, 0, 0])).is_err());
    }

    #[test]
    fn h1_ideal_examples() {
        assert_eq!(h1_ideal(&mumford(), 3).unwrap(), 1);
        assert_eq!(h1_ideal(&mumford(), 4).unwrap(), 2);
        let k = key(10, [4, 3, 3, 3, 3, 3]);
        assert_eq!(k.degree(), 11);
        assert_eq!(h1_ideal(&k, 3).unwrap(), 0);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(h1_ideal_3_closed_form(&mumford()).unwrap(), 1);
        assert_eq!(h1_ideal_3_closed_form(&key(12, [4, 3, 3, 3, 3, 3])).unwrap(), 0);
        let k = key(13, [4, 4, 4, 4, 2, 2]);
        assert_eq!((k.degree(), k.genus()), (19, 40));
        assert_eq!(h1_ideal_3_closed_form(&k).unwrap(), 2);
        assert_eq!(h1_ideal(&k, 3).unwrap(), 2);
        // d = 6, outside Omega.
        assert!(matches!(h1_ideal_3_closed_form(&key(4, [1, 1, 1, 1, 1, 1])), Err(Error::Domain(_))));
    }

    #[test]
    fn classify_mumford() {
        let r = classify(&mumford()).unwrap();
        assert_eq!((r.d, r.g, r.dim_w, r.h0_normal), (14, 24, 56, 57));
        assert_eq!(r.h1_ideal_3, 1);
        assert_eq!(r.h1_oc3, 1);
        assert_eq!(r.chi_normal, 56);
        assert_eq!(r.verdict, Verdict::NonReducedComponent);
        assert!(r.kleppe_ellia_applies);
        assert!(r.core_hypotheses.unwrap().all_hold());
    }

    #[test]
    fn classify_other_verdicts() {
        let r = classify(&key(12, [4, 3, 3, 3, 3, 3])).unwrap();
        assert_eq!((r.d, r.g, r.verdict), (17, 34, Verdict::ReducedComponent));
        let r = classify(&key(15, [5, 5, 5, 4, 4, 0])).unwrap();
        assert_eq!((r.d, r.g, r.in_omega, r.verdict), (22, 49, true, Verdict::NotComponent));
        let low = classify(&key(10, [4, 4, 2, 1, 1, 0])).unwrap();
        assert_eq!(low.verdict, Verdict::BelowOmega);
        assert!(low.core_hypotheses.is_none());
        assert!(matches!(classify(&key(3, [0; 6])), Err(Error::Domain(_))));
        // Degree 18, not 9: admissible and simply below Omega.
        assert_eq!(classify(&key(9, [3, 3, 3, 0, 0, 0])).unwrap().verdict, Verdict::BelowOmega);
    }

    #[test]
    fn open_cases_carry_literature_flags() {
        // b6 = 2 with b5 = 2: h1(I_C(3)) = 2 and neither criterion applies.
        let k = key(13, [4, 4, 4, 4, 2, 2]);
        let r = classify(&k).unwrap();
        assert_eq!(r.verdict, Verdict::Open);
        assert_eq!(r.literature_flags, literature_flags(19, 40));
        // d = 19: 8g = 320 > 56 + 289 = 345 fails.
        assert!(r.literature_flags.is_empty());
        assert_eq!(literature_flags(14, 24), vec![LiteratureFlag::KleppeRange2]);
        assert_eq!(literature_flags(20, 48), vec![LiteratureFlag::KleppeRange1]);
        assert!(literature_flags(20, 47).is_empty());
    }

    /// `sum_{b_i < n} (n + 1 - b_i)(n - b_i) / 2`.
    fn single_peel_formula(k: &FamilyKey, n: i64) -> i64 {
        k.class().b.iter().filter(|&&b| b < n).map(|&b| (n + 1 - b) * (n - b) / 2).sum()
    }

    #[test]
    fn closed_form_undercounts_when_a_second_line_is_fixed() {
        let k = key(17, [8, 7, 2, 2, 2, 2]);
        assert_eq!((k.degree(), k.genus()), (28, 67));
        assert!(k.in_omega());
        assert_eq!(h1_ideal_3_closed_form(&k).unwrap(), 4);

        let twist = k.class() - 3 * H;
        assert_eq!(twist, DivisorClass::new(8, [5, 4, -1, -1, -1, -1]));
        let after_first_peel = DivisorClass::new(8, [5, 4, 0, 0, 0, 0]);
        let line_12 = DivisorClass::new(1, [1, 1, 0, 0, 0, 0]);
        assert_eq!(intersect(&after_first_peel, &line_12), -1);

        let a = decompose(&twist).unwrap();
        assert_eq!(a.peel_stages, 2);
        assert_eq!(a.fixed_lines.len(), 5);
        assert!(a.fixed_lines.iter().all(|l| l.multiplicity == 1));
        assert!(a.fixed_lines.iter().any(|l| l.class == line_12));
        assert_eq!(a.mobile, DivisorClass::new(7, [4, 3, 0, 0, 0, 0]));
        // h0(O_D') + h0(O_F) - 1 with D' big and F five disjoint lines.
        assert_eq!(h1_ideal(&k, 3).unwrap(), 1 + 5 - 1);
        // Independent route: h0(C - 4h) - chi(C - 4h) with h2(C - 4h) = 0.
        assert_eq!(h0(&(k.class() - 4 * H)).unwrap(), 6);
        assert_eq!(k.genus() - 3 * k.degree() + 18, 1);
        assert_eq!(classify(&k).unwrap().verdict, Verdict::Open);
    }

    #[test]
    fn closed_forms_hold_when_one_peel_suffices() {
        for d in 10..=30 {
            for k in enumerate_degree(d).unwrap().into_iter().filter(FamilyKey::in_omega) {
                for n in 0..=6i64 {
                    let twist = k.class() - n * H;
                    let a = decompose(&twist).unwrap();
                    if !a.effective || twist.self_intersection() <= 0 || a.peel_stages > 1 {
                        continue;
                    }
                    assert_eq!(h1_ideal(&k, n as u32).unwrap(), single_peel_formula(&k, n), "{k}, n = {n}");
                }
                let single = decompose(&(k.class() - 3 * H)).unwrap().peel_stages <= 1;
                if single || d < 12 {
                    assert_eq!(h1_ideal_3_closed_form(&k).unwrap(), h1_ideal(&k, 3).unwrap(), "{k}");
                }
            }
        }
    }

    #[test]
    fn core_examples() {
        let c = verify_core(&mumford()).unwrap();
        assert!(c.all_hold());
        assert_eq!(c.line, Some(DivisorClass::exceptional(6)));
        assert_eq!(c.delta, Some(DivisorClass::ZERO));

        let c = verify_core(&key(12, [3, 3, 3, 3, 3, 2])).unwrap();
        assert!(c.all_hold());
        assert_eq!(c.delta, Some(DivisorClass::new(0, [-1, -1, -1, -1, -1, 0])));

        let c = verify_core(&key(12, [4, 3, 3, 3, 3, 3])).unwrap();
        assert!(!c.fixed_part_is_single_line);
        assert!(c.consistent());
    }

    #[test]
    fn injectivity_identity() {
        // (3h + 2E - C).C = -(C - 3h - E)^2 - 3h.(C - 3h - E) + 2 whenever C.E = 2.
        for k in [mumford(), key(12, [3, 3, 3, 3, 3, 2]), key(14, [5, 4, 4, 4, 4, 2])] {
            let c = k.class();
            let e = DivisorClass::exceptional(6);
            let n = c - 3 * H - e;
            assert_eq!(intersect(&(3 * H + 2 * e - c), &c), -n.self_intersection() - 3 * intersect(&H, &n) + 2);
        }
    }

    #[test]
    fn enumerate_examples() {
        assert!(enumerate(14, 24).unwrap().contains(&mumford()));
        assert!(enumerate(19, 39).unwrap().contains(&key(12, [3, 3, 3, 3, 3, 2])));
        let (d, g) = (10, 0);
        for k in enumerate(d, g).unwrap() {
            let c = k.class();
            let sq: i64 = c.b.iter().map(|x| x * x).sum();
            assert_eq!(sq, c.a * c.a - (2 * g - 2 + d));
        }
        assert!(matches!(enumerate(9, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn enumerate_degree_agrees_with_enumerate() {
        for d in 10..=18 {
            let all = enumerate_degree(d).unwrap();
            let mut genera: Vec<i64> = all.iter().map(|k| k.genus()).collect();
            genera.dedup();
            let mut regrouped = Vec::new();
            for g in genera {
                regrouped.extend(enumerate(d, g).unwrap());
            }
            assert_eq!(regrouped, all, "d = {d}");
        }
    }

    #[test]
    fn sweep_small_degrees() {
        let reports = sweep(10..=11, GenusMode::OmegaOnly).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.verdict == Verdict::ReducedComponent));
        let reports = sweep(12..=14, GenusMode::OmegaOnly).unwrap();
        assert!(reports.iter().any(|r| r.key == mumford()));
        #[allow(clippy::reversed_empty_ranges)]
        let empty = sweep(14..=12, GenusMode::All).unwrap();
        assert!(empty.is_empty());
        assert!(sweep(9..=12, GenusMode::All).is_err());
    }

    #[test]
    fn sweep_is_ordered_and_reproducible() {
        let reports = sweep(12..=15, GenusMode::All).unwrap();
        let order: Vec<_> = reports.iter().map(|r| (r.d, r.g, r.key)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
        for r in &reports {
            assert_eq!(&classify(&r.key).unwrap(), r);
        }
    }
}

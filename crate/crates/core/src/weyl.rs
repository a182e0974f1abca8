//! The W(E6) action on the Picard lattice and reduction to E-standard form.
//!
//! W(E6) is generated by the transpositions of the `e_i` and by the
//! reflection in the root `l - e1 - e2 - e3` (the quadratic Cremona
//! transformation centred at the first three points). A class is
//! E-standard when
//!
//! ```text
//! b1 >= b2 >= ... >= b6   and   a >= b1 + b2 + b3,
//! ```
//!
//! which is exactly the fundamental chamber for the simple roots
//! `e_i - e_{i+1}` and `l - e1 - e2 - e3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::DivisorClass;

/// A generator of W(E6). Swap indices are 1-based with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Reflection {
    Swap(u8, u8),
    Cremona,
}

impl Reflection {
    /// `Swap(i, j)` with the indices normalised to `i < j`.
    ///
    /// # Panics
    /// If the indices are equal or outside `1..=6`.
    pub fn swap(i: u8, j: u8) -> Self {
        assert!(i != j && (1..=6).contains(&i) && (1..=6).contains(&j), "invalid swap({i},{j})");
        Reflection::Swap(i.min(j), i.max(j))
    }

    pub fn apply(&self, d: &DivisorClass) -> DivisorClass {
        match *self {
            Reflection::Swap(i, j) => {
                let mut out = *d;
                out.b.swap(i as usize - 1, j as usize - 1);
                out
            }
            Reflection::Cremona => cremona(d),
        }
    }
}

/// Reflection in `l - e1 - e2 - e3`.
fn cremona(d: &DivisorClass) -> DivisorClass {
    let [b1, b2, b3, b4, b5, b6] = d.b;
    DivisorClass { a: 2 * d.a - b1 - b2 - b3, b: [d.a - b2 - b3, d.a - b1 - b3, d.a - b1 - b2, b4, b5, b6] }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reflection::Swap(i, j) => write!(f, "swap({i},{j})"),
            Reflection::Cremona => f.write_str("cremona"),
        }
    }
}

impl FromStr for Reflection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "cremona" {
            return Ok(Reflection::Cremona);
        }
        let bad = || Error::Parse(format!("unknown reflection {s:?}"));
        let inner = s.strip_prefix("swap(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let i: u8 = i.trim().parse().map_err(|_| bad())?;
        let j: u8 = j.trim().parse().map_err(|_| bad())?;
        if i == j || !(1..=6).contains(&i) || !(1..=6).contains(&j) {
            return Err(bad());
        }
        Ok(Reflection::swap(i, j))
    }
}

impl From<Reflection> for String {
    fn from(r: Reflection) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for Reflection {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// An E-standard representative together with the word reaching it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardForm {
    pub class: DivisorClass,
    /// Reflections applied to the input, left to right.
    pub word: Vec<Reflection>,
}

/// Applies the reflections left to right.
pub fn apply_word(d: &DivisorClass, word: &[Reflection]) -> DivisorClass {
    word.iter().fold(*d, |acc, r| r.apply(&acc))
}

pub fn is_standard(d: &DivisorClass) -> bool {
    d.b.windows(2).all(|w| w[0] >= w[1]) && d.a >= d.b[0] + d.b[1] + d.b[2]
}

fn step_limit(d: &DivisorClass) -> u64 {
    let l1 = d.a.unsigned_abs() + d.b.iter().map(|x| x.unsigned_abs()).sum::<u64>();
    10 * (l1 + 7)
}

/// Stable bubble sort into descending order, reporting each adjacent swap.
fn sort_descending(b: &mut [i64; 6], mut on_swap: impl FnMut(u8)) {
    for end in (1..6).rev() {
        let mut swapped = false;
        for i in 0..end {
            if b[i] < b[i + 1] {
                b.swap(i, i + 1);
                on_swap(i as u8 + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

/// Reduces `d` into the E-standard chamber, recording the reflection word.
///
/// Each round sorts `b` and, if `a < b1 + b2 + b3`, applies the Cremona
/// reflection, which strictly lowers `a`. Since W(E6) is finite this
/// terminates; the step cap only guards against a bug.
pub fn standardize(d: &DivisorClass) -> Result<StandardForm> {
    let mut word = Vec::new();
    let class = reduce_with(d, |r| word.push(r))?;
    Ok(StandardForm { class, word })
}

/// The E-standard representative of `d` without the word.
pub fn standard_class(d: &DivisorClass) -> Result<DivisorClass> {
    reduce_with(d, |_| {})
}

fn reduce_with(d: &DivisorClass, mut record: impl FnMut(Reflection)) -> Result<DivisorClass> {
    let limit = step_limit(d);
    let mut cur = *d;
    let mut rounds = 0u64;
    loop {
        sort_descending(&mut cur.b, |i| record(Reflection::Swap(i, i + 1)));
        if cur.a >= cur.b[0] + cur.b[1] + cur.b[2] {
            return Ok(cur);
        }
        rounds += 1;
        if rounds > limit {
            return Err(Error::IterationLimit { input: *d, limit });
        }
        cur = cremona(&cur);
        record(Reflection::Cremona);
    }
}

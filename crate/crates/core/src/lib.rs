//! Exact lattice computations on smooth cubic surfaces and the
//! classification of the maximal families of space curves they carry
//! inside the Hilbert scheme of smooth connected curves in P^3.
//!
//! Everything is integer arithmetic on the Picard lattice
//! `Z l + Z e_1 + ... + Z e_6` with form `diag(1, -1, ..., -1)`:
//!
//! * [`picard`]: divisor classes, intersection form, degree and genus.
//! * [`weyl`]: reduction of a class to its E-standard representative.
//! * [`cohomology`]: fixed/mobile decomposition and `(h0, h1, h2)`.
//! * [`hilbert`]: invariants and component verdicts of the families
//!   `W(a; b1..b6)`, plus enumeration by degree and genus.
//! * [`quadric`]: the analogous families of bidegree `(a, b)` on a
//!   smooth quadric.

pub mod cohomology;
pub mod error;
pub mod hilbert;
pub mod picard;
pub mod quadric;
pub mod selftest;
pub mod weyl;

pub use cohomology::{
    cohomology, decompose, h0, h0_multiple_conic, h0_multiple_line, h1_of_minus, is_big_and_nef, is_nef, Cohomology,
    FixedLine, MobileKind, SystemAnalysis,
};
pub use error::{Error, Result};
pub use hilbert::{
    classify, enumerate, enumerate_degree, h1_ideal, h1_ideal_3_closed_form, sweep, verify_core, CoreCheck, FamilyKey,
    FamilyReport, GenusMode, LiteratureFlag, Verdict,
};
pub use picard::DivisorClass;
pub use quadric::{classify_quadric, cohomology_quadric, QuadricFamily, QuadricVerdict};
pub use weyl::{apply_word, standardize, Reflection, StandardForm};

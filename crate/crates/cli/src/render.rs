//! Human-readable tables.

use std::fmt::Write;

use cubic_hilbert::{CoreCheck, FamilyReport, QuadricVerdict};

use crate::request::{Outcome, Response};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_rows(out: &mut String, reports: &[FamilyReport]) {
    let _ = writeln!(
        out,
        "{:<26} {:>4} {:>5} {:>6} {:>6} {:>5} {:>5} {:>6}  verdict",
        "key", "d", "g", "dim W", "h0(N)", "h1I3", "h1I1", "h1OC3"
    );
    for r in reports {
        let flags: Vec<String> = r.literature_flags.iter().map(|f| format!("{f:?}")).collect();
        let extra = if flags.is_empty() { String::new() } else { format!(" [{}]", flags.join(",")) };
        let _ = writeln!(
            out,
            "{:<26} {:>4} {:>5} {:>6} {:>6} {:>5} {:>5} {:>6}  {}{}",
            r.key.to_string(),
            r.d,
            r.g,
            r.dim_w,
            r.h0_normal,
            r.h1_ideal_3,
            r.h1_ideal_1,
            r.h1_oc3,
            r.verdict,
            extra
        );
    }
}

fn core_rows(out: &mut String, c: &CoreCheck) {
    let rows = [
        ("fixed part of |C-3h| is a single line", c.fixed_part_is_single_line),
        ("|C-4h| non-empty", c.d_minus_4h_effective),
        ("C.E = 2", c.ce_is_2),
        ("C-3h-E nef and big", c.c3he_nef_big),
        ("Delta = C-4h-2E effective", c.delta_effective),
        ("Delta disjoint from E", c.delta_disjoint_e),
        ("(3h+2E-C).C < 0", c.injectivity_inequality),
        ("h1(I_C(3)) = 1", c.h1_is_1),
    ];
    for (label, ok) in rows {
        let _ = writeln!(out, "  {label:<40} {}", yes(ok));
    }
    if let Some(e) = c.line {
        let _ = writeln!(out, "  E = {e}");
    }
    if let Some(delta) = c.delta {
        let _ = writeln!(out, "  Delta = {delta}");
    }
    let _ = writeln!(out, "all checks pass: {}", yes(c.all_hold()));
}

pub fn table(outcome: &Outcome) -> String {
    let mut out = String::new();
    match &outcome.response {
        Response::Reduce(sf) => {
            let _ = writeln!(out, "standard form: {}", sf.class);
            let word: Vec<String> = sf.word.iter().map(ToString::to_string).collect();
            let _ =
                writeln!(out, "word ({}): {}", word.len(), if word.is_empty() { "-".into() } else { word.join(" ") });
        }
        Response::Report(r) => {
            report_rows(&mut out, std::slice::from_ref(r));
            let _ = writeln!(
                out,
                "in Omega: {}  chi(N_C) = {}  Kleppe-Ellia hypotheses: {}",
                yes(r.in_omega),
                r.chi_normal,
                yes(r.kleppe_ellia_applies)
            );
            if let Some(c) = &r.core_hypotheses {
                let _ = writeln!(out, "core hypotheses:");
                core_rows(&mut out, c);
            }
        }
        Response::Reports(rs) => {
            report_rows(&mut out, rs);
            let _ = writeln!(out, "{} families", rs.len());
        }
        Response::Cohomology(a) => {
            let _ = writeln!(out, "class: {}", a.class);
            let _ = writeln!(out, "effective: {}", yes(a.effective));
            if a.effective {
                let _ = writeln!(out, "mobile: {} ({:?})", a.mobile, a.mobile_kind);
                let _ = writeln!(out, "fixed part: {}", a.fixed_part);
                for l in &a.fixed_lines {
                    let _ = writeln!(out, "  {} x {} (round {})", l.multiplicity, l.class, l.stage);
                }
            }
            let _ = writeln!(out, "h0 = {}  h1 = {}  h2 = {}", a.h0, a.h1, a.h2);
        }
        Response::H1Ideal { n, h1 } => {
            let _ = writeln!(out, "h1(I_C({n})) = {h1}");
        }
        Response::Core(c) => core_rows(&mut out, c),
        Response::Quadric(f) => {
            let _ = writeln!(out, "bidegree ({},{}): d = {}, g = {}, dim W = {}", f.a, f.b, f.d, f.g, f.dim_w);
            let _ = writeln!(out, "h1(I_C(2)) = {}", f.h1_ideal_2);
            match f.verdict {
                QuadricVerdict::Component => {
                    let _ = writeln!(out, "verdict: component (generically smooth)");
                }
                QuadricVerdict::ProperSubvariety { codim } => {
                    let _ = writeln!(out, "verdict: proper subvariety of codim {codim} (generically smooth)");
                }
            }
        }
        Response::Keys(keys) => {
            for k in keys {
                let _ = writeln!(out, "{k}  d = {}  g = {}", k.degree(), k.genus());
            }
            let _ = writeln!(out, "{} keys", keys.len());
        }
        Response::Selftest { passed, checks } => {
            for c in checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                let _ = write!(out, "{status}  {} ({} cases", c.name, c.cases);
                match &c.first_failure {
                    Some(f) => {
                        let _ = writeln!(out, ", {} failures, first {f})", c.failures);
                    }
                    None => {
                        let _ = writeln!(out, ")");
                    }
                }
            }
            let _ = writeln!(out, "selftest: {}", if *passed { "passed" } else { "FAILED" });
        }
    }
    for w in &outcome.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

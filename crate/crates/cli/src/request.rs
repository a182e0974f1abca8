use serde::{Deserialize, Serialize};
use serde_json::Value;

use cubic_hilbert::hilbert::{GenusMode, MAX_SWEEP_DEGREE};
use cubic_hilbert::selftest::{self, CheckOutcome};
use cubic_hilbert::{
    classify, classify_quadric, decompose, enumerate, enumerate_degree, h1_ideal, h1_ideal_3_closed_form, standardize,
    sweep, verify_core, CoreCheck, DivisorClass, Error, FamilyKey, FamilyReport, QuadricFamily, Result, StandardForm,
    SystemAnalysis,
};

pub const SCHEMA_VERSION: &str = "1";

/// A fully parsed command. Serialised as the `command`/`input` pair of the
/// output envelope so that `verify` can replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", content = "input", rename_all = "kebab-case")]
pub enum Request {
    Reduce { class: DivisorClass },
    Classify { class: DivisorClass },
    ClassifyAll { degree: i64, genus: i64 },
    Cohomology { class: DivisorClass },
    H1Ideal { class: DivisorClass, n: u32 },
    VerifyCore { class: DivisorClass },
    Quadric { a: i64, b: i64 },
    Enumerate { degree: i64, genus: Option<i64> },
    Sweep { from: i64, to: i64, mode: GenusMode },
    Selftest { radius: i64, max_degree: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Response {
    Reduce(StandardForm),
    Report(Box<FamilyReport>),
    Reports(Vec<FamilyReport>),
    Cohomology(SystemAnalysis),
    H1Ideal { n: u32, h1: i64 },
    Core(CoreCheck),
    Quadric(QuadricFamily),
    Keys(Vec<FamilyKey>),
    Selftest { passed: bool, checks: Vec<CheckOutcome> },
}

impl Response {
    /// Whether the command's own checks succeeded (only selftest can fail).
    pub fn ok(&self) -> bool {
        match self {
            Response::Selftest { passed, .. } => *passed,
            _ => true,
        }
    }
}

pub struct Outcome {
    pub response: Response,
    pub warnings: Vec<String>,
}

impl Request {
    pub fn name(&self) -> &'static str {
        match self {
            Request::Reduce { .. } => "reduce",
            Request::Classify { .. } => "classify",
            Request::ClassifyAll { .. } => "classify-all",
            Request::Cohomology { .. } => "cohomology",
            Request::H1Ideal { .. } => "h1-ideal",
            Request::VerifyCore { .. } => "verify-core",
            Request::Quadric { .. } => "quadric",
            Request::Enumerate { .. } => "enumerate",
            Request::Sweep { .. } => "sweep",
            Request::Selftest { .. } => "selftest",
        }
    }

    /// Every coordinate or size parameter must be at most `max_coord` in absolute value.
    pub fn validate(&self, max_coord: i64) -> Result<()> {
        let check_class = |c: &DivisorClass| {
            if c.max_abs_coord() > max_coord {
                Err(Error::Domain(format!("coordinates of {c} exceed the bound {max_coord}")))
            } else {
                Ok(())
            }
        };
        let check_int = |what: &str, x: i64| {
            if x.abs() > max_coord {
                Err(Error::Domain(format!("{what} = {x} exceeds the bound {max_coord}")))
            } else {
                Ok(())
            }
        };
        match self {
            Request::Reduce { class }
            | Request::Classify { class }
            | Request::Cohomology { class }
            | Request::VerifyCore { class }
            | Request::H1Ideal { class, .. } => check_class(class),
            Request::ClassifyAll { degree, genus } => {
                check_int("degree", *degree)?;
                check_int("genus", *genus)
            }
            Request::Quadric { a, b } => {
                check_int("a", *a)?;
                check_int("b", *b)
            }
            Request::Enumerate { degree, genus } => {
                check_int("degree", *degree)?;
                match genus {
                    Some(g) => check_int("genus", *g),
                    None if *degree > MAX_SWEEP_DEGREE => Err(Error::Domain(format!(
                        "enumerating every genus is limited to degree <= {MAX_SWEEP_DEGREE}; pass --genus"
                    ))),
                    None => Ok(()),
                }
            }
            Request::Sweep { .. } => Ok(()),
            Request::Selftest { radius, max_degree } => {
                if !(0..=8).contains(radius) || !(10..=MAX_SWEEP_DEGREE).contains(max_degree) {
                    Err(Error::Domain(format!(
                        "selftest needs 0 <= radius <= 8 and 10 <= max-degree <= {MAX_SWEEP_DEGREE}"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn execute(&self) -> Result<Outcome> {
        let mut warnings = Vec::new();
        let response = match self {
            Request::Reduce { class } => Response::Reduce(standardize(class)?),
            Request::Classify { class } => {
                let key = FamilyKey::new(*class)?;
                let report = classify(&key)?;
                closed_form_warning(&report, &mut warnings)?;
                Response::Report(Box::new(report))
            }
            Request::ClassifyAll { degree, genus } => {
                let reports = enumerate(*degree, *genus)?.iter().map(classify).collect::<Result<Vec<_>>>()?;
                for r in &reports {
                    closed_form_warning(r, &mut warnings)?;
                }
                if reports.is_empty() {
                    warnings.push(format!("no admissible multidegree has (d, g) = ({degree}, {genus})"));
                }
                Response::Reports(reports)
            }
            Request::Cohomology { class } => Response::Cohomology(decompose(class)?),
            Request::H1Ideal { class, n } => Response::H1Ideal { n: *n, h1: h1_ideal(&FamilyKey::new(*class)?, *n)? },
            Request::VerifyCore { class } => {
                let check = verify_core(&FamilyKey::new(*class)?)?;
                if !check.consistent() {
                    return Err(Error::Internal(format!("core hypotheses hold for {class} but a consequence fails")));
                }
                Response::Core(check)
            }
            Request::Quadric { a, b } => Response::Quadric(classify_quadric(*a, *b)?),
            Request::Enumerate { degree, genus } => Response::Keys(match genus {
                Some(g) => enumerate(*degree, *g)?,
                None => enumerate_degree(*degree)?,
            }),
            Request::Sweep { from, to, mode } => {
                let reports = sweep(*from..=*to, *mode)?;
                for r in &reports {
                    closed_form_warning(r, &mut warnings)?;
                }
                Response::Reports(reports)
            }
            Request::Selftest { radius, max_degree } => {
                let checks = selftest::run(*radius, *max_degree)?;
                Response::Selftest { passed: checks.iter().all(CheckOutcome::passed), checks }
            }
        };
        Ok(Outcome { response, warnings })
    }
}

fn closed_form_warning(r: &FamilyReport, warnings: &mut Vec<String>) -> Result<()> {
    if r.in_omega {
        let closed = h1_ideal_3_closed_form(&r.key)?;
        if closed != r.h1_ideal_3 {
            warnings.push(format!(
                "{}: multidegree count gives h1(I_C(3)) = {closed}, surface computation gives {}; |C-3h| has a fixed line outside the E-standard exceptional curves",
                r.key, r.h1_ideal_3
            ));
        }
    }
    Ok(())
}

/// The canonical JSON envelope. `serde_json::Value` keeps object keys sorted.
pub fn envelope(request: &Request, outcome: &Outcome) -> Result<Value> {
    let tagged = to_value(request)?;
    let mut obj = serde_json::Map::new();
    obj.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
    obj.insert("command".into(), tagged["command"].clone());
    obj.insert("input".into(), tagged["input"].clone());
    obj.insert("result".into(), to_value(&outcome.response)?);
    obj.insert("warnings".into(), Value::from(outcome.warnings.clone()));
    Ok(Value::Object(obj))
}

/// Re-parses the request recorded in an envelope.
pub fn request_from_envelope(v: &Value) -> Result<Request> {
    let version = v.get("schema_version").and_then(Value::as_str);
    if version != Some(SCHEMA_VERSION) {
        return Err(Error::Parse(format!("unsupported schema_version {version:?}")));
    }
    let tagged = serde_json::json!({ "command": v["command"], "input": v["input"] });
    serde_json::from_value(tagged).map_err(|e| Error::Parse(format!("bad envelope: {e}")))
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Internal(format!("serialisation failed: {e}")))
}

mod render;
mod request;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_hilbert::hilbert::GenusMode;
use cubic_hilbert::{DivisorClass, Error};
use serde_json::Value;

use request::{envelope, request_from_envelope, Request};

#[derive(Parser)]
#[command(name = "cubic-hilbert", version, about = "Hilbert-scheme families of space curves on smooth cubic surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Write JSON output to this file as well as printing.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest allowed absolute value of any input coordinate.
    #[arg(long, global = true, env = "CUBIC_HILBERT_MAX_COORD", default_value_t = 1_000_000)]
    max_coord: i64,
    /// Re-run the command recorded in a JSON output file and compare (same as `verify --input`).
    #[arg(long, value_name = "FILE", conflicts_with = "out")]
    verify: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct ClassArg {
    /// Class as `a,b1,...,b6` or `(a;b1,...,b6)`.
    #[arg(long, allow_hyphen_values = true)]
    class: DivisorClass,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a class to its E-standard form under W(E6).
    Reduce(ClassArg),
    /// Classify one family, or every family with a given degree and genus.
    Classify {
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["degree", "genus", "all"])]
        class: Option<DivisorClass>,
        #[arg(long, requires = "genus")]
        degree: Option<i64>,
        #[arg(long, requires = "degree", allow_hyphen_values = true)]
        genus: Option<i64>,
        /// Required with --degree/--genus.
        #[arg(long, requires = "degree")]
        all: bool,
    },
    /// Cohomology and Zariski decomposition of a line bundle.
    Cohomology(ClassArg),
    /// h1 of the ideal sheaf twisted by n.
    H1Ideal {
        #[command(flatten)]
        class: ClassArg,
        #[arg(long)]
        n: u32,
    },
    /// Check the hypotheses of the non-reducedness criterion.
    VerifyCore(ClassArg),
    /// Curves of bidegree (a,b) on a smooth quadric.
    Quadric {
        /// `a,b` with a >= b > 0.
        #[arg(long, value_parser = parse_bidegree)]
        bidegree: (i64, i64),
    },
    /// List admissible multidegrees.
    Enumerate {
        #[arg(long)]
        degree: i64,
        #[arg(long, allow_hyphen_values = true)]
        genus: Option<i64>,
    },
    /// Classify every family over a degree range.
    Sweep {
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        /// Include families below the Omega range.
        #[arg(long)]
        all_genera: bool,
    },
    /// Run internal property checks.
    Selftest {
        #[arg(long, default_value_t = 2)]
        radius: i64,
        #[arg(long, default_value_t = 20)]
        max_degree: i64,
    },
    /// Re-run the command recorded in a JSON output file and compare results.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
}

fn parse_bidegree(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((a.parse().map_err(|e| format!("{a}: {e}"))?, b.parse().map_err(|e| format!("{b}: {e}"))?)),
        _ => Err(format!("expected a,b, got {s:?}")),
    }
}

fn to_request(cmd: Command) -> Result<Request, Error> {
    Ok(match cmd {
        Command::Reduce(c) => Request::Reduce { class: c.class },
        Command::Classify { class: Some(class), .. } => Request::Classify { class },
        Command::Classify { degree: Some(degree), genus: Some(genus), all: true, .. } => {
            Request::ClassifyAll { degree, genus }
        }
        Command::Classify { .. } => {
            return Err(Error::Parse("classify needs --class, or --degree, --genus and --all".into()))
        }
        Command::Cohomology(c) => Request::Cohomology { class: c.class },
        Command::H1Ideal { class, n } => Request::H1Ideal { class: class.class, n },
        Command::VerifyCore(c) => Request::VerifyCore { class: c.class },
        Command::Quadric { bidegree: (a, b) } => Request::Quadric { a, b },
        Command::Enumerate { degree, genus } => Request::Enumerate { degree, genus },
        Command::Sweep { from, to, all_genera } => {
            Request::Sweep { from, to, mode: if all_genera { GenusMode::All } else { GenusMode::OmegaOnly } }
        }
        Command::Selftest { radius, max_degree } => Request::Selftest { radius, max_degree },
        Command::Verify { .. } => unreachable!("handled separately"),
    })
}

fn exit_for(e: &Error) -> ExitCode {
    if e.is_user_error() {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    exit_for(&e)
}

fn write_out(path: &Path, json: &str) -> Result<(), Error> {
    std::fs::write(path, format!("{json}\n")).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

fn run_request(cli: &Cli, req: Request) -> ExitCode {
    if let Err(e) = req.validate(cli.max_coord) {
        return fail(e);
    }
    let outcome = match req.execute() {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let json = match envelope(&req, &outcome)
        .and_then(|v| serde_json::to_string_pretty(&v).map_err(|e| Error::Internal(e.to_string())))
    {
        Ok(j) => j,
        Err(e) => return fail(e),
    };
    match cli.format {
        Format::Json => println!("{json}"),
        Format::Table => print!("{}", render::table(&outcome)),
    }
    if let Some(path) = &cli.out {
        if let Err(e) = write_out(path, &json) {
            return fail(e);
        }
    }
    if outcome.response.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify(cli: &Cli, input: &Path) -> ExitCode {
    let recorded: Value = match std::fs::read_to_string(input)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", input.display())))
        .and_then(|s| serde_json::from_str(&s).map_err(|e| Error::Parse(format!("{}: {e}", input.display()))))
    {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    let req = match request_from_envelope(&recorded) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if let Err(e) = req.validate(cli.max_coord) {
        return fail(e);
    }
    let fresh = match req.execute().and_then(|o| envelope(&req, &o)) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    let matches = fresh == recorded;
    let summary = serde_json::json!({
        "schema_version": request::SCHEMA_VERSION,
        "command": "verify",
        "input": input.display().to_string(),
        "result": { "matches": matches, "replayed": req.name() },
        "warnings": [],
    });
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&summary).unwrap_or_default()),
        Format::Table => {
            println!("{}: {} ({})", input.display(), if matches { "matches" } else { "MISMATCH" }, req.name())
        }
    }
    if matches {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: recomputed output differs from {}", input.display());
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    let cmd = match (cli.command.take(), cli.verify.clone()) {
        (None, Some(input)) | (Some(Command::Verify { input }), None) => return verify(&cli, &input),
        (Some(_), Some(_)) => return fail(Error::Parse("--verify takes no subcommand".into())),
        (None, None) => return fail(Error::Parse("missing subcommand; see --help".into())),
        (Some(cmd), None) => cmd,
    };
    match to_request(cmd) {
        Ok(req) => run_request(&cli, req),
        Err(e) => fail(e),
    }
}

//! `park`: recognize, convert, enumerate, verify, label and render.

mod convert;
mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use shi_parking::geometry::{is_relatively_bounded, par_enumerate_regions};
use shi_parking::json::{canonical, graph_to_json, pf_to_json, region_to_json};
use shi_parking::mixed::par_enumerate_parking_graphs;
use shi_parking::pf::{check_by_simulation, check_by_sort, par_enumerate_parking_functions};
use shi_parking::verify::{run_suite, Suite};
use shi_parking::{pak_stanley_label_of_point, Error, Point, Rational, Scalar};

use convert::Kind;

#[derive(Debug, Parser)]
#[command(name = "park", version, about = "Parking functions, parking graphs and Shi regions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a sequence is a parking function.
    Check {
        /// Inline sequence such as `2,1,1`, or pf JSON.
        input: Option<String>,
        #[arg(long = "in", value_name = "FILE", conflicts_with = "input")]
        input_file: Option<PathBuf>,
    },
    /// Convert an object of one family into another.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        /// Attach the inverse-algorithm trace when it runs.
        #[arg(long)]
        trace: bool,
        #[arg(long = "in", value_name = "FILE")]
        input_file: Option<PathBuf>,
    },
    /// List every object of a family as JSON lines, or count them.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// Keep only relatively bounded regions.
        #[arg(long)]
        bounded_only: bool,
        #[arg(long, env = "PARK_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Run the exhaustive cross-checks at a fixed n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, env = "PARK_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Label the region containing a point, e.g. `--point 6/5,1/2,0`.
    Label {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Draw the labeled arrangement as SVG.
    Render {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Pf,
    Graph,
    Region,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Negative answer or rejected object (exit 1).
    Domain(String),
    /// Unreadable or malformed input (exit 2).
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Malformed(_)
            | Error::Empty
            | Error::ZeroLength
            | Error::LengthMismatch { .. }
            | Error::NonPositive { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

/// `2,1,1`, `(2,1,1)` or pf JSON; entries are not yet checked for parking.
pub fn parse_sequence(text: &str) -> Result<Vec<i64>, Failure> {
    let t = text.trim();
    if t.starts_with('{') {
        return Ok(shi_parking::json::sequence_from_json(t)?);
    }
    let inner = t.trim_start_matches('(').trim_end_matches(')').trim();
    if inner.is_empty() {
        return Err(Failure::Usage("empty sequence".into()));
    }
    inner
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("not an integer: {:?}", part.trim())))
        })
        .collect()
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_check(input: Option<String>, file: Option<PathBuf>) -> Result<(), Failure> {
    let text = match input {
        Some(s) => s,
        None => read_input(file.as_ref())?,
    };
    let seq = parse_sequence(&text)?;
    let sim = check_by_simulation(&seq)?;
    let sorted = check_by_sort(&seq)?;
    let verdict = |ok: bool| if ok { "parking" } else { "not parking" };
    let summary = match (&sim.assignment, sim.first_failed_car) {
        (Some(a), _) => format!("parking function; assignment {}", join(a)),
        (None, Some(car)) => format!("not a parking function; car {car} fails"),
        (None, None) => unreachable!("failed outcome names its car"),
    };
    println!("{summary}");
    println!("simulation: {}", verdict(sim.success));
    println!("sorted criterion: {}", verdict(sorted));
    if sim.success != sorted {
        return Err(Failure::Domain("recognizers disagree".into()));
    }
    if sim.success {
        Ok(())
    } else {
        Err(Failure::Domain(String::new()))
    }
}

fn cmd_enumerate(kind: EnumKind, n: usize, count_only: bool, bounded_only: bool, jobs: usize) -> Result<(), Failure> {
    if bounded_only && kind != EnumKind::Region {
        return Err(Failure::Usage("--bounded-only applies to --kind region".into()));
    }
    let lines: Vec<String> = match kind {
        EnumKind::Pf => par_enumerate_parking_functions(n, jobs)?
            .iter()
            .map(|x| canonical(&pf_to_json(x)))
            .collect(),
        EnumKind::Graph => par_enumerate_parking_graphs(n, jobs)?
            .iter()
            .map(|g| canonical(&graph_to_json(g)))
            .collect(),
        EnumKind::Region => {
            let mut out = Vec::new();
            for (sv, w) in par_enumerate_regions(n, jobs)? {
                if bounded_only && !is_relatively_bounded(&sv)? {
                    continue;
                }
                out.push(canonical(&region_to_json(&sv, Some(&w))));
            }
            out
        }
    };
    if count_only {
        println!("{}", lines.len());
    } else {
        for line in lines {
            println!("{line}");
        }
    }
    Ok(())
}

fn cmd_verify(n: usize, suite: Suite, jobs: usize) -> Result<(), Failure> {
    let results = run_suite(suite, n, jobs)?;
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(format!("failed checks: {}", failed.join(", "))))
    }
}

fn cmd_label(point: &str) -> Result<(), Failure> {
    let coords = point
        .split(',')
        .map(|c| Rational::parse(c).map_err(Failure::from))
        .collect::<Result<Vec<_>, _>>()?;
    let x = pak_stanley_label_of_point(&Point::new(coords))?;
    println!("{}", canonical(&pf_to_json(&x)));
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { input, input_file } => cmd_check(input, input_file),
        Command::Convert {
            from,
            to,
            trace,
            input_file,
        } => {
            let text = read_input(input_file.as_ref())?;
            println!("{}", convert::convert(&text, from, to, trace)?);
            Ok(())
        }
        Command::Enumerate {
            kind,
            n,
            count_only,
            bounded_only,
            jobs,
        } => cmd_enumerate(kind, n, count_only, bounded_only, jobs as usize),
        Command::Verify { n, suite, jobs } => cmd_verify(n, suite, jobs as usize),
        Command::Label { point } => cmd_label(&point),
        Command::Render { n, out } => {
            let svg = render::render(n)?;
            std::fs::write(&out, svg).map_err(|e| Failure::Domain(format!("{}: {e}", out.display())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use superkm_core::cartan::{SuperCartanDatum, Weight};
use superkm_core::covering::{render_letters, CoveringForm, SignedWord};
use superkm_core::diagrams::{compile, enumerate_pairings, graphical_form, Pairing};
use superkm_core::scalars::to_series;
use superkm_core::verify::{self, Bounds, Check, Status};
use superkm_core::Error;

#[derive(Parser)]
#[command(name = "superkm", version, about = "Exact checks for super Kac-Moody calculus")]
struct Cli {
    /// Path to a datum JSON file, or a preset name.
    #[arg(long, global = true, default_value = "odd-sl2")]
    datum: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the constraints on the datum.
    Validate,
    /// Evaluate <a, b> by the recursive form and by the matching sum.
    Form(WordArgs),
    /// List the pairings of two words with their degrees and parities.
    Matchings(WordArgs),
    /// Check the quiver Hecke relations on up to n strands.
    Qhsa {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Check homogeneity of the relation catalog.
    Lint {
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        lambda_range: String,
    },
    /// Run the acceptance suite on every preset.
    Verify {
        /// Also run the slow graded Serre sum.
        #[arg(long)]
        full: bool,
    },
}

#[derive(clap::Args)]
struct WordArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// Pairings `<h_i, lambda>`, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Serialize)]
struct Value {
    name: String,
    value: String,
}

#[derive(Serialize)]
struct MatchingRow {
    chords: String,
    crossings: usize,
    degree: i64,
    parity: u8,
}

#[derive(Serialize)]
struct Report {
    command: String,
    datum: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    values: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    matchings: Vec<MatchingRow>,
    checks: Vec<Check>,
}

impl Report {
    fn new(command: &str, datum: &str) -> Self {
        Self { command: command.into(), datum: datum.into(), values: vec![], matchings: vec![], checks: vec![] }
    }

    fn value(&mut self, name: &str, value: impl ToString) {
        self.values.push(Value { name: name.into(), value: value.to_string() });
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Text => {
                let mut out = format!("{} ({})\n", self.command, self.datum);
                for v in &self.values {
                    out += &format!("  {}: {}\n", v.name, v.value);
                }
                for m in &self.matchings {
                    out +=
                        &format!("  {}  crossings={} degree={} parity={}\n", m.chords, m.crossings, m.degree, m.parity);
                }
                for c in &self.checks {
                    let tag = match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "FAIL",
                    };
                    out += &format!("{tag}  {} [{}] {}\n", c.name, c.paper_ref, c.detail);
                }
                out
            }
        }
    }
}

/// A path to a datum file; failing that, a preset name or a path whose stem
/// names a preset.
fn load_datum(arg: &str) -> Result<(String, SuperCartanDatum), Error> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok((arg.to_string(), SuperCartanDatum::load(path)?));
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
    SuperCartanDatum::preset(stem)
        .map(|d| (stem.to_string(), d))
        .ok_or_else(|| Error::Parse(format!("no datum file or preset named {arg:?}")))
}

fn parse_range(text: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Parse(format!("expected N or a..b, got {text:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n: i64 = text.trim().parse().map_err(|_| bad())?;
            (-n.abs(), n.abs())
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn series_window() -> Result<(i64, i64), Error> {
    match std::env::var("SUPERKM_PRECISION") {
        Ok(text) => parse_range(&text),
        Err(_) => Ok((-32, 32)),
    }
}

fn words(datum: &SuperCartanDatum, args: &WordArgs) -> Result<(SignedWord, SignedWord), Error> {
    let lambda = Weight::parse(&args.lambda, datum.rank())?;
    Ok((SignedWord::parse(datum, &args.a, lambda.clone())?, SignedWord::parse(datum, &args.b, lambda)?))
}

fn chords(datum: &SuperCartanDatum, p: &Pairing) -> String {
    let point = |k: usize| {
        let side = if p.is_bottom(k) { ("a", k) } else { ("b", k - p.a.len()) };
        format!("{}{}({})", side.0, side.1, render_letters(datum, &[p.letter(k)]))
    };
    p.chords().into_iter().map(|(x, y)| format!("{}~{}", point(x), point(y))).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<Report, Error> {
    if let Command::Verify { full } = cli.command {
        let mut report = Report::new("verify", "presets");
        report.checks = verify::run_all(&Bounds::default(), full);
        return Ok(report);
    }
    let (label, datum) = load_datum(&cli.datum)?;
    let mut report;
    match &cli.command {
        Command::Validate => {
            report = Report::new("validate", &label);
            let violations = datum.validate();
            let bad: Vec<String> = violations.iter().map(|v| format!("{}: {}", v.constraint, v.detail)).collect();
            let mut check = Check::tally("datum constraints", "Section 1 super Cartan datum", violations.len(), &bad);
            if violations.is_empty() {
                check.detail = format!("rank {}, no violations", datum.rank());
            }
            report.checks.push(check);
        }
        Command::Form(args) => {
            report = Report::new("form", &label);
            let (a, b) = words(&datum, args)?;
            let (lo, hi) = series_window()?;
            let x = CoveringForm::new(&datum).cq_form(&a, &b);
            let y = graphical_form(&datum, &a, &b);
            report.value("cq_form", &x);
            report.value("graphical_form", &y);
            report.value(&format!("series on [{lo},{hi}]"), to_series(&x, lo, hi));
            report.value("match", x == y);
            let bad = if x == y { vec![] } else { vec![format!("{x} vs {y}")] };
            report.checks.push(Check::tally("cq_form = graphical_form", "Theorem sesqui", 1, &bad));
        }
        Command::Matchings(args) => {
            report = Report::new("matchings", &label);
            let (a, b) = words(&datum, args)?;
            report.value("a", a.render(&datum));
            report.value("b", b.render(&datum));
            for p in enumerate_pairings(&a.letters, &b.letters) {
                let shape = compile(&p);
                let (degree, parity) = shape.grade(&datum, &a.lambda);
                report.matchings.push(MatchingRow {
                    chords: chords(&datum, &p),
                    crossings: shape.crossings(),
                    degree,
                    parity,
                });
            }
            let x = CoveringForm::new(&datum).cq_form(&a, &b);
            let y = graphical_form(&datum, &a, &b);
            report.value("matching sum", &y);
            let bad = if x == y { vec![] } else { vec![format!("cq_form = {x}")] };
            report.checks.push(Check::tally("matching sum = cq_form", "Theorem sesqui", 1, &bad));
        }
        Command::Qhsa { n } => {
            if *n == 0 {
                return Err(Error::Parse("--n must be positive".into()));
            }
            let bounds = Bounds::default();
            report = Report::new("qhsa", &label);
            report.checks = verify::qhsa_checks(&label, &datum, *n, bounds.triples, bounds.seed);
        }
        Command::Lint { lambda_range } => {
            report = Report::new("lint", &label);
            let range = parse_range(lambda_range)?;
            report.checks = verify::lint_checks(&[(label.as_str(), datum)], range);
        }
        Command::Verify { .. } => unreachable!(),
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

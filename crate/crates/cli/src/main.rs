//! `ldp`: command-line front end for toric log del Pezzo lattice geometry.

mod catalog;
mod svg;

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use ldp_core::enumeration::{classify_catalog, enumerate_ldp, verify_catalog, BoxSpec};
use ldp_core::families::{generate, violation, FamilyParams, FamilyTag};
use ldp_core::{analyze, are_equivalent_with, blow_up, canonical_form_with, parse_vertices, validate_fan};
use ldp_core::{Fan, Mode, Polygon, Report};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "ldp", version, about = "Toric log del Pezzo surfaces via LDP polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report determinants, f-values, degrees and singular points of a fan.
    Analyze {
        /// Vertices as "x,y;x,y;...", counterclockwise.
        #[arg(allow_hyphen_values = true)]
        vertices: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate LDP classes with vertices in the box [-N, N]^2 as JSON lines.
    Enumerate {
        #[arg(long = "box", value_name = "N")]
        box_n: i64,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Fill in the family and three_case fields of a catalog.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a member of a named family.
    Family {
        #[arg(long)]
        family: FamilyTag,
        #[arg(long, allow_negative_numbers = true)]
        p: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        r: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        s: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<i64>,
    },
    /// Print a unimodular map taking polygon A onto polygon B.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Only allow determinant +1.
        #[arg(long)]
        sl: bool,
    },
    /// Print the canonical representative of a polygon's class.
    Canonical {
        #[arg(long, allow_hyphen_values = true)]
        vertices: String,
        #[arg(long)]
        sl: bool,
    },
    /// Blow up a smooth cone.
    Blowup {
        #[arg(long, allow_hyphen_values = true)]
        vertices: String,
        /// 1-based index of the cone between v_i and v_{i+1}.
        #[arg(long)]
        cone: usize,
    },
    /// Check a catalog against the classification; exits 1 on any counterexample.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Draw a polygon with its edge determinants as SVG.
    Svg {
        #[arg(long, allow_hyphen_values = true)]
        vertices: String,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input(anyhow::Error),
    Verification,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

type Outcome = Result<(), Failure>;

macro_rules! emit {
    ($($arg:tt)*) => {
        write_stdout(&(format!($($arg)*) + "\n"))?
    };
}

fn write_stdout(text: &str) -> io::Result<()> {
    use io::Write as _;
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Analyze { vertices, json } => cmd_analyze(&vertices, json),
        Command::Enumerate { box_n, out, jobs } => cmd_enumerate(box_n, out, jobs),
        Command::Classify { input, out } => cmd_classify(input, out),
        Command::Family { family, p, q, r, s, t } => cmd_family(family, [p, q, r, s, t]),
        Command::Equiv { a, b, sl } => cmd_equiv(&a, &b, sl),
        Command::Canonical { vertices, sl } => {
            let q = polygon(&vertices)?;
            emit!("{}", canonical_form_with(&q, mode(sl))?);
            Ok(())
        }
        Command::Blowup { vertices, cone } => {
            let fan = fan(&vertices)?;
            emit!("{}", blow_up(&fan, cone)?);
            Ok(())
        }
        Command::Check { input } => cmd_check(input),
        Command::Svg { vertices, out } => {
            let q = polygon(&vertices)?;
            fs::write(&out, svg::render(&q)).with_context(|| format!("cannot write {}", out.display()))?;
            Ok(())
        }
    }
}

fn mode(sl: bool) -> Mode {
    if sl {
        Mode::Special
    } else {
        Mode::General
    }
}

fn fan(text: &str) -> anyhow::Result<Fan> {
    Ok(validate_fan(parse_vertices(text)?)?)
}

fn polygon(text: &str) -> anyhow::Result<Polygon> {
    Ok(text.parse()?)
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    vertices: String,
    #[serde(flatten)]
    report: &'a Report,
}

fn cmd_analyze(text: &str, json: bool) -> Outcome {
    let fan = fan(text)?;
    let report = analyze(&fan)?;
    if json {
        let out = AnalyzeOutput { vertices: fan.to_string(), report: &report };
        emit!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        write_stdout(&report_text(&fan, &report))?;
    }
    Ok(())
}

fn report_text(fan: &Fan, report: &Report) -> String {
    let mut s = String::new();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(s, "vertices         {fan}");
    let _ = writeln!(s, "d                {}", report.d);
    let _ = writeln!(s, "picard number    {}", report.picard_number);
    let _ = writeln!(s, "log del Pezzo    {}", yes_no(report.is_log_del_pezzo));
    let singular: Vec<String> = report.singular_indices().iter().map(usize::to_string).collect();
    let _ = writeln!(s, "singular points  {} [{}]", report.singular_count, singular.join(", "));
    let rows: Vec<[String; 5]> = (0..report.d)
        .map(|k| {
            let v = fan.rays()[k];
            [
                (k + 1).to_string(),
                format!("{},{}", v.x, v.y),
                report.cones[k].det.to_string(),
                report.f_values[k].to_string(),
                report.anticanonical_degrees[k].to_string(),
            ]
        })
        .collect();
    let header = ["i", "v_i", "det", "f", "-K.D_i"];
    let widths: Vec<usize> = (0..5)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0).max(header[c].len()))
        .collect();
    let line = |cells: [&str; 5]| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        parts.join("  ")
    };
    let _ = writeln!(s, "{}", line(header));
    for r in &rows {
        let _ = writeln!(s, "{}", line([&r[0], &r[1], &r[2], &r[3], &r[4]]));
    }
    s
}

fn cmd_enumerate(n: i64, out: PathBuf, jobs: Option<usize>) -> Outcome {
    let start = Instant::now();
    let entries = enumerate_ldp(BoxSpec::new(n)?, jobs)?;
    let elapsed_ms = start.elapsed().as_millis();
    catalog::save(&out, &entries)?;
    let meta = catalog::Sidecar { box_n: n, jobs, classes: entries.len(), elapsed_ms };
    let meta_path = catalog::sidecar_path(&out);
    fs::write(&meta_path, serde_json::to_string_pretty(&meta)? + "\n")
        .with_context(|| format!("cannot write {}", meta_path.display()))?;
    eprintln!("{} classes in box {n} ({elapsed_ms} ms)", entries.len());
    Ok(())
}

fn cmd_classify(input: PathBuf, out: Option<PathBuf>) -> Outcome {
    let mut entries = catalog::load(&input)?;
    classify_catalog(&mut entries)?;
    match out {
        Some(path) => catalog::save(&path, &entries)?,
        None => catalog::write_entries(io::stdout().lock(), &entries)?,
    }
    Ok(())
}

fn cmd_family(tag: FamilyTag, given: [Option<i64>; 5]) -> Outcome {
    let names = ["p", "q", "r", "s", "t"];
    let wanted = tag.param_names();
    let mut values = Vec::new();
    for (name, value) in names.iter().zip(given) {
        match (wanted.contains(name), value) {
            (true, Some(v)) => values.push(v),
            (true, None) => return Err(anyhow!("{tag} needs --{name}").into()),
            (false, Some(_)) => return Err(anyhow!("{tag} takes no --{name}").into()),
            (false, None) => {}
        }
    }
    let params = FamilyParams::new(tag, &values)?;
    if let Some(constraint) = violation(&params) {
        return Err(anyhow!("{params}: violates {constraint}").into());
    }
    emit!("{}", generate(&params)?.polygon);
    Ok(())
}

fn cmd_equiv(a: &str, b: &str, sl: bool) -> Outcome {
    let (qa, qb) = (polygon(a)?, polygon(b)?);
    match are_equivalent_with(&qa, &qb, mode(sl))? {
        Some(m) => emit!("{m}"),
        None => emit!("inequivalent"),
    }
    Ok(())
}

fn cmd_check(input: PathBuf) -> Outcome {
    let entries = catalog::load(&input)?;
    let report = verify_catalog(&entries)?;
    emit!("{}", serde_json::to_string_pretty(&report)?);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

//! `annulus-chroma`: radial chromatic numbers, colorings, gadgets and an exact
//! unit-distance graph solver from the command line.
//!
//! Exit codes: 0 success, 1 negative verdict (improper coloring, infeasible
//! gadget), 2 usage, domain or input error, 3 internal inconsistency.

mod svg;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use annulus_chroma::gadgets::{embed_moser_spindle_with, SpindleSearch};
use annulus_chroma::io::{
    parse_graph, parse_radial_coloring, radial_coloring_to_json, FormatError, GadgetDoc,
    ThresholdDoc, VerdictDoc,
};
use annulus_chroma::radial::threshold_row;
use annulus_chroma::{
    chromatic_number_exact, construct_radial_coloring, embed_odd_cycle, embed_rod, embed_trirod,
    radial_chromatic_number, thresholds, unit_chord_angle, verify_radial_coloring, Error,
    GadgetEmbedding64, Verdict,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const SPINDLE_THRESHOLD_EXPR: &str = "3/sqrt(11)-1/2";

#[derive(Parser, Debug)]
#[command(name = "annulus-chroma", version, about = "Unit-distance colorings of annuli")]
struct Cli {
    /// Numeric tolerance for unit-distance tests.
    #[arg(long, global = true, env = "ANNULUS_CHROMA_TOLERANCE", default_value_t = 1e-9)]
    tolerance: f64,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized placement search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Radial chromatic number of A_r.
    ChiRadial {
        #[arg(long)]
        r: f64,
    },
    /// Threshold table of radial chromatic numbers.
    Table,
    /// Optimal radial coloring of A_r.
    Construct {
        #[arg(long)]
        r: f64,
    },
    /// Check a radial coloring (JSON) for same-colored unit pairs.
    Verify { path: PathBuf },
    /// Place a gadget inside A_r.
    Embed {
        #[arg(long, value_enum)]
        gadget: Gadget,
        #[arg(long)]
        r: f64,
    },
    /// Exact chromatic number of a graph or point set (JSON).
    Solve { path: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Svg,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Gadget {
    Rod,
    Cycle,
    Trirod,
    Spindle,
}

/// A failed command with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible { .. } | Error::NotFound { .. } => 1,
            Error::SearchFailure { .. } | Error::Internal(_) => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Invalid(e) => e.into(),
            json @ FormatError::Json { .. } => Failure::usage(json.to_string()),
        }
    }
}

/// Output of a successful (or negative-verdict) command.
struct Report {
    body: String,
    code: u8,
}

impl Report {
    fn ok(body: String) -> Self {
        Self { body, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|report| emit(cli.out.as_deref(), report)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(out: Option<&Path>, report: Report) -> Result<u8, Failure> {
    match out {
        Some(path) => std::fs::write(path, &report.body)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{}", report.body),
    }
    Ok(report.code)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Err(Failure::usage(format!(
            "tolerance must be positive and finite, got {}",
            cli.tolerance
        )));
    }
    let format = |default: Format, allowed: &[Format]| -> Result<Format, Failure> {
        let f = cli.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(Failure::usage(format!("--format {f:?} is not supported here").to_lowercase()))
        }
    };
    use Format::*;
    match &cli.command {
        Command::ChiRadial { r } => chi_radial(*r, format(Text, &[Text, Json])?),
        Command::Table => table(format(Text, &[Text, Json])?),
        Command::Construct { r } => construct(*r, cli.tolerance, format(Json, &[Json, Svg, Text])?),
        Command::Verify { path } => verify(path, cli.tolerance, format(Text, &[Text, Json])?),
        Command::Embed { gadget, r } => {
            embed(*gadget, *r, cli.seed, cli.tolerance, format(Json, &[Json, Svg, Text])?)
        }
        Command::Solve { path } => solve(path, cli.tolerance, format(Text, &[Text, Json])?),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn chi_radial(r: f64, format: Format) -> Result<Report, Failure> {
    let n = radial_chromatic_number(r)?;
    let theta = unit_chord_angle(0.5 + r)?;
    let (prev, row) = threshold_row(r)?;
    let lower = prev.map_or(0.0, |p| p.max_r);
    let body = match format {
        Format::Json => to_json(&json!({
            "r": r,
            "n": n,
            "theta": theta,
            "row": ThresholdDoc::from(&row),
            "row_lower": lower,
        })),
        _ => format!(
            "N={n}\ntheta={theta:.12}\nrow: {lower:.7} < r <= {:.7}  ({})  N={}\n",
            row.max_r, row.expr, row.colors
        ),
    };
    Ok(Report::ok(body))
}

fn table(format: Format) -> Result<Report, Failure> {
    let rows = thresholds::<f64>();
    let body = match format {
        Format::Json => {
            let docs: Vec<ThresholdDoc> = rows.iter().map(ThresholdDoc::from).collect();
            to_json(&docs)
        }
        _ => {
            let mut s = String::from("N  r up to     expression\n");
            for t in &rows {
                let _ = writeln!(s, "{}  {:<11.7}  {}", t.colors, t.max_r, t.expr);
            }
            s
        }
    };
    Ok(Report::ok(body))
}

fn construct(r: f64, tol: f64, format: Format) -> Result<Report, Failure> {
    let c = construct_radial_coloring(r)?;
    match verify_radial_coloring(&c, tol)? {
        Verdict::Proper => {}
        Verdict::Improper(v) => {
            return Err(Failure::internal(format!(
                "constructed coloring failed verification: color {} at distance {}",
                v.color,
                v.pair.distance()
            )));
        }
    }
    let body = match format {
        Format::Svg => svg::render_coloring(&c),
        Format::Text => {
            let mut s = format!("r={r}\ncolors={}\n", c.color_count());
            for i in 0..c.len() {
                let _ = writeln!(
                    s,
                    "boundary {i}: angle={:.12} color={}  sector width={:.12} color={}",
                    c.boundaries()[i],
                    c.boundary_colors()[i],
                    c.sector_width(i),
                    c.sector_colors()[i]
                );
            }
            s
        }
        Format::Json => {
            let mut s = radial_coloring_to_json(&c);
            s.push('\n');
            s
        }
    };
    Ok(Report::ok(body))
}

fn verify(path: &Path, tol: f64, format: Format) -> Result<Report, Failure> {
    let c = parse_radial_coloring::<f64>(&read(path)?)?;
    let verdict = verify_radial_coloring(&c, tol)?;
    let code = if verdict.is_proper() { 0 } else { 1 };
    let body = match format {
        Format::Json => to_json(&VerdictDoc::from(&verdict)),
        _ => match &verdict {
            Verdict::Proper => "proper\n".to_string(),
            Verdict::Improper(v) => format!(
                "improper: color {} on {:?} and {:?}\nwitness: ({:.12}, {:.12}) ({:.12}, {:.12})\ndistance: {:.12}\n",
                v.color,
                v.pieces.0,
                v.pieces.1,
                v.pair.p.x,
                v.pair.p.y,
                v.pair.q.x,
                v.pair.q.y,
                v.pair.distance()
            ),
        },
    };
    Ok(Report { body, code })
}

fn embed(gadget: Gadget, r: f64, seed: u64, tol: f64, format: Format) -> Result<Report, Failure> {
    let result = match gadget {
        Gadget::Rod => embed_rod(r),
        Gadget::Cycle => embed_odd_cycle(r),
        Gadget::Trirod => embed_trirod(r),
        Gadget::Spindle => embed_moser_spindle_with(r, SpindleSearch { seed, ..Default::default() }),
    };
    let e: GadgetEmbedding64 = match result {
        Ok(e) => e,
        Err(Error::Infeasible { gadget: name, threshold }) => {
            let expr = match gadget {
                Gadget::Spindle => Some(SPINDLE_THRESHOLD_EXPR),
                Gadget::Trirod => Some(thresholds::<f64>()[0].expr),
                _ => None,
            };
            let body = match format {
                Format::Json => to_json(&json!({
                    "kind": name,
                    "r": r,
                    "feasible": false,
                    "threshold": threshold,
                    "threshold_expr": expr,
                })),
                _ => format!(
                    "{name}: infeasible at r = {r}; requires r > {threshold:.9}{}\n",
                    expr.map(|x| format!(" = {x}")).unwrap_or_default()
                ),
            };
            return Ok(Report { body, code: 1 });
        }
        Err(e) => return Err(e.into()),
    };
    if !e.check(tol) {
        return Err(Failure::internal(format!(
            "{} embedding failed its own check (edge error {:e}, margin {:e})",
            e.kind.name(),
            e.max_edge_error(),
            e.margin
        )));
    }
    let body = match format {
        Format::Svg => svg::render_gadget(&e),
        Format::Json => to_json(&GadgetDoc::from_embedding(&e)),
        Format::Text => {
            let mut s = format!(
                "{}: feasible at r = {r}\nvertices={} edges={} margin={:.9}\n",
                e.kind.name(),
                e.vertices.len(),
                e.unit_edges.len(),
                e.margin
            );
            for (i, v) in e.vertices.iter().enumerate() {
                let _ = writeln!(s, "v{i}: ({:.12}, {:.12}) |v|={:.12}", v.x, v.y, v.norm());
            }
            s
        }
    };
    Ok(Report::ok(body))
}

fn solve(path: &Path, tol: f64, format: Format) -> Result<Report, Failure> {
    let g = parse_graph(&read(path)?, tol)?;
    let (k, witness) = chromatic_number_exact(&g)?;
    let body = match format {
        Format::Json => to_json(&json!({
            "chromatic_number": k,
            "n": g.vertex_count(),
            "edges": g.edges().len(),
            "coloring": witness.colors,
        })),
        _ => format!(
            "chromatic_number={k}\nvertices={} edges={}\ncoloring={:?}\n",
            g.vertex_count(),
            g.edges().len(),
            witness.colors
        ),
    };
    Ok(Report::ok(body))
}

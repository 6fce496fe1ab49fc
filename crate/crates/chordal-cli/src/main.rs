//! Command-line front end: builds the named drawing constructions, analyzes
//! drawing files, runs the verification suites, and renders SVGs.
//!
//! Exit codes: 0 when every check passes, 1 when a suite or analysis found
//! failures, 2 for usage and input errors. All JSON output is byte-stable
//! for identical inputs and seeds; timings never reach the serialized form.

use anyhow::{anyhow, bail, Context, Result};
use chordal::drawing::{export_svg_circular, export_svg_straight, wrap_linear, CircularDrawing};
use chordal::extremal::{
    grid_row_drawing, ktt_chord_diagram, nested_polygon_drawing, product_drawing,
    star_forest_construction, tree_plus_dominant, two_degenerate_expander, ConstructionDrawing,
    LabeledConstruction,
};
use chordal::graph::generate;
use chordal::suites::{run_suite, SuiteError, SuiteOptions, VerificationReport, SUITE_NAMES};
use chordal::{
    decompositions::{check_section3_bounds, BoundsReport, TransferError},
    invariant_report, Caps, GraphError, InvariantReport,
};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chordal", version, about = "Circular drawings, crossing graphs and their width parameters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named construction and write its drawing and witness files.
    Generate {
        /// One of: grid_row, ktt, expander, star_forest, nested_polygon,
        /// dominated_tree, product.
        construction: String,
        /// Integer parameters of the construction.
        params: Vec<usize>,
        /// Output path base; defaults to the construction name.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also render `<out>.svg`.
        #[arg(long)]
        svg: bool,
    },
    /// Compute invariants and inequality verdicts for a drawing file.
    Analyze {
        /// Path to a drawing JSON file.
        drawing: PathBuf,
        /// Cap overrides, e.g. `treewidth=12,enumeration=8`.
        #[arg(long)]
        caps: Option<String>,
        /// Skip over-cap solvers instead of refusing the instance.
        #[arg(long)]
        force: bool,
    },
    /// Run one verification suite; exit 0 only if nothing failed.
    Verify {
        /// Suite name; see `--help` for the list.
        #[arg(help = suite_help())]
        suite: String,
        /// Number of random drawings for the seeded suites.
        #[arg(long, default_value_t = 200)]
        seeds: usize,
        /// RNG seed for the seeded suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Family-size parameter for the parameterised suites.
        #[arg(long)]
        t: Option<usize>,
        /// Subgraph-size parameter for the `nok2k` suite.
        #[arg(long)]
        k: Option<usize>,
        /// Worker threads across instances (1 = sequential, 0 = all cores).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Cap overrides, e.g. `treewidth=12,enumeration=8`.
        #[arg(long)]
        caps: Option<String>,
        /// Also write the report JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a drawing file as an SVG image.
    ExportSvg {
        /// Path to a drawing JSON file.
        drawing: PathBuf,
        /// Output path; defaults to the input with an `.svg` extension.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn suite_help() -> String {
    format!("Suite name, one of: {}", SUITE_NAMES.join(", "))
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<ExitCode> {
    match Cli::parse().cmd {
        Cmd::Generate {
            construction,
            params,
            out,
            svg,
        } => cmd_generate(&construction, &params, out, svg),
        Cmd::Analyze {
            drawing,
            caps,
            force,
        } => cmd_analyze(&drawing, caps.as_deref(), force),
        Cmd::Verify {
            suite,
            seeds,
            seed,
            t,
            k,
            jobs,
            caps,
            out,
        } => cmd_verify(&suite, SuiteOptions { seeds, seed, t, k }, jobs, caps.as_deref(), out),
        Cmd::ExportSvg { drawing, out } => cmd_export_svg(&drawing, out),
    }
}

/// Caps resolve in order: defaults, then `CHORDAL_CAPS`, then the CLI flag.
fn resolve_caps(flag: Option<&str>) -> Result<Caps> {
    let spec = match flag {
        Some(s) => Some(s.to_owned()),
        None => std::env::var("CHORDAL_CAPS").ok(),
    };
    match spec {
        Some(s) => Caps::parse_overrides(&s).map_err(|e| anyhow!("invalid caps: {e}")),
        None => Ok(Caps::default()),
    }
}

fn arity<const N: usize>(name: &str, params: &[usize]) -> Result<[usize; N]> {
    params
        .try_into()
        .map_err(|_| anyhow!("`{name}` takes {N} integer parameter(s), got {}", params.len()))
}

fn build(construction: &str, params: &[usize]) -> Result<LabeledConstruction> {
    let built = match construction {
        "grid_row" => {
            let [n] = arity("grid_row", params)?;
            grid_row_drawing(n)
        }
        "ktt" => {
            let [t] = arity("ktt", params)?;
            ktt_chord_diagram(t)
        }
        "expander" | "two_degenerate_expander" => {
            let [t] = arity("expander", params)?;
            two_degenerate_expander(t)
        }
        "star_forest" => {
            let [t] = arity("star_forest", params)?;
            star_forest_construction(t)
        }
        "nested_polygon" => {
            let [layers, m] = arity("nested_polygon", params)?;
            nested_polygon_drawing(layers, m)
        }
        "dominated_tree" => {
            let [height] = arity("dominated_tree", params)?;
            tree_plus_dominant(&generate::complete_binary_tree(height))
        }
        "product" => {
            let [height, m] = arity("product", params)?;
            product_drawing(&generate::complete_binary_tree(height), m)
        }
        other => bail!("unknown construction `{other}`"),
    };
    built.with_context(|| format!("`{construction}` rejected the parameters"))
}

fn cmd_generate(
    construction: &str,
    params: &[usize],
    out: Option<PathBuf>,
    svg: bool,
) -> Result<ExitCode> {
    let built = build(construction, params)?;
    let base = out.unwrap_or_else(|| PathBuf::from(construction));

    let drawing_path = base.with_extension("drawing.json");
    let drawing_json = match &built.drawing {
        ConstructionDrawing::Circular(d) => serde_json::to_string_pretty(d)?,
        ConstructionDrawing::Straight(d) => serde_json::to_string_pretty(d)?,
    };
    write_file(&drawing_path, &drawing_json)?;

    #[derive(Serialize)]
    struct Sidecar<'a> {
        witnesses: &'a std::collections::BTreeMap<String, chordal::extremal::Witness>,
        notes: &'a [String],
    }
    let witness_path = base.with_extension("witnesses.json");
    let sidecar = Sidecar {
        witnesses: &built.witnesses,
        notes: &built.notes,
    };
    write_file(&witness_path, &serde_json::to_string_pretty(&sidecar)?)?;

    println!("{}", drawing_path.display());
    println!("{}", witness_path.display());
    if svg {
        let svg_path = base.with_extension("svg");
        write_file(&svg_path, &render_svg(&built.drawing))?;
        println!("{}", svg_path.display());
    }
    Ok(ExitCode::SUCCESS)
}

/// Everything `analyze` reports for one drawing: invariants of the drawn
/// graph and of its crossing graph, the inequality verdicts (absent for
/// non-linear straight-line inputs, where the circular bounds do not apply),
/// and the failure summary.
#[derive(Serialize)]
struct Analysis {
    graph: InvariantReport,
    crossing_graph: InvariantReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsReport>,
    report: VerificationReport,
}

fn cmd_analyze(path: &Path, caps_flag: Option<&str>, force: bool) -> Result<ExitCode> {
    let caps = resolve_caps(caps_flag)?;
    let drawing = read_drawing(path)?;

    let size_gate = |e: GraphError| match e {
        GraphError::SizeAboveCap { found, cap } => {
            anyhow!("instance too large: {found} exceeds cap {cap} (use --force to skip)")
        }
        other => anyhow::Error::new(other),
    };
    let graph = invariant_report(drawing.graph(), &caps, force).map_err(size_gate)?;
    let crossing_graph =
        invariant_report(drawing.crossing_graph().graph(), &caps, force).map_err(size_gate)?;

    let circular: Option<CircularDrawing> = match &drawing {
        ConstructionDrawing::Circular(d) => Some(d.clone()),
        ConstructionDrawing::Straight(d) if d.is_linear() => Some(wrap_linear(d)?),
        ConstructionDrawing::Straight(_) => None,
    };
    let bounds = match circular {
        Some(d) => match check_section3_bounds(&d, &caps) {
            Ok(b) => Some(b),
            Err(TransferError::TooLargeInstance { found, cap }) if force => {
                eprintln!("skipped inequality checks: {found} exceeds cap {cap}");
                None
            }
            Err(TransferError::TooLargeInstance { found, cap }) => {
                bail!("instance too large: {found} exceeds cap {cap} (use --force to skip)")
            }
            Err(e) => return Err(e.into()),
        },
        None => None,
    };

    let failures = bounds
        .iter()
        .flat_map(|b| b.failures())
        .map(|c| chordal::suites::Failure {
            instance: "input".to_owned(),
            name: c.name.clone(),
            lhs: c.lhs,
            rhs: c.rhs,
        })
        .collect::<Vec<_>>();
    let report = VerificationReport {
        suite: "analyze".to_owned(),
        instances: 1,
        failures,
        wall_time_ms: 0,
    };
    let passed = report.failures.is_empty();
    let analysis = Analysis {
        graph,
        crossing_graph,
        bounds,
        report,
    };
    println!("{}", serde_json::to_string_pretty(&analysis)?);
    Ok(exit_by(passed))
}

fn cmd_verify(
    suite: &str,
    opts: SuiteOptions,
    jobs: usize,
    caps_flag: Option<&str>,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let caps = resolve_caps(caps_flag)?;
    let report = run_suite(suite, &opts, jobs, &caps).map_err(|e| match e {
        SuiteError::UnknownSuite(name) => {
            anyhow!("unknown suite `{name}`; known suites: {}", SUITE_NAMES.join(", "))
        }
        other => anyhow::Error::new(other),
    })?;
    let json = serde_json::to_string_pretty(&report)?;
    println!("{json}");
    eprintln!(
        "{}: {} instances, {} failures in {} ms",
        report.suite,
        report.instances,
        report.failures.len(),
        report.wall_time_ms
    );
    if let Some(path) = out {
        write_file(&path, &json)?;
    }
    Ok(exit_by(report.passed()))
}

fn cmd_export_svg(path: &Path, out: Option<PathBuf>) -> Result<ExitCode> {
    let drawing = read_drawing(path)?;
    let out = out.unwrap_or_else(|| path.with_extension("svg"));
    write_file(&out, &render_svg(&drawing))?;
    println!("{}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn render_svg(drawing: &ConstructionDrawing) -> String {
    match drawing {
        ConstructionDrawing::Circular(d) => export_svg_circular(d),
        ConstructionDrawing::Straight(d) => export_svg_straight(d),
    }
}

/// Reads either drawing flavour, telling them apart by the `coords` field
/// that only straight-line drawings carry.
fn read_drawing(path: &Path) -> Result<ConstructionDrawing> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    let drawing = if value.get("coords").is_some() {
        ConstructionDrawing::Straight(serde_json::from_value(value)?)
    } else {
        ConstructionDrawing::Circular(serde_json::from_value(value)?)
    };
    Ok(drawing)
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    let mut text = content.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn exit_by(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

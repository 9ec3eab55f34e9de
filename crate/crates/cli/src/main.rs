mod selftest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use dyncolor::catalog::{complete_drawing, complete_subdivision_drawing};
use dyncolor::coloring::{
    chi_dynamic_with, chi_with, choosable_with, colors_used, first_violation, list_violation, SearchLimits,
};
use dyncolor::geometry::{random_drawing, RandomDrawingParams};
use dyncolor::reduce::{color_1planar_with, ColorOptions};
use dyncolor::{families, text, ColoringError, ListAssignment, OnePlaneDrawing, ReduceError};

#[derive(Parser)]
#[command(name = "dyncolor", version, about = "Dynamic list coloring of 1-planar graphs")]
struct Cli {
    /// Output format for reports on stdout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Chi,
    Chid,
    Ch,
    Chd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Complete,
    CompleteSubdiv,
    RandomPlanar,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring against a graph.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        /// Also require every vertex of degree >= 2 to see two colors.
        #[arg(long)]
        dynamic: bool,
        /// Also require colors to come from these lists.
        #[arg(long)]
        lists: Option<PathBuf>,
    },
    /// Exact chromatic number, dynamic chromatic number or choosability.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum)]
        param: Param,
        /// Decide choosability for this list size instead of minimizing.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, default_value_t = SearchLimits::default().max_vertices)]
        max_vertices: usize,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Largest list size tried for ch and chd.
        #[arg(long, default_value_t = SearchLimits::default().choose_max_ell)]
        max_ell: usize,
    },
    /// Dynamic list coloring of a 1-plane drawing by reductions.
    Color11 {
        drawing: PathBuf,
        #[arg(long, conflicts_with = "uniform_lists")]
        lists: Option<PathBuf>,
        /// Give every vertex the list {1..N}.
        #[arg(long)]
        uniform_lists: Option<u32>,
        /// Print one line per reduction.
        #[arg(long)]
        trace: bool,
        /// Where to write the coloring; defaults to the drawing path with
        /// a `.coloring` extension.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 2_000_000)]
        fallback_max_nodes: u64,
    },
    /// Charges, rules R1 to R5 and claim audit on a 1-plane drawing.
    Discharge { drawing: PathBuf },
    /// Write a graph or drawing from a family.
    Generate {
        #[arg(value_enum)]
        family: Family,
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the built-in examples.
    Selftest,
}

/// Failure with a stable exit status.
#[derive(Debug)]
struct Exit(u8);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::error::Error for Exit {}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn beside(input: &Path, suffix: &str) -> PathBuf {
    let mut s = input.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Text => print!("{}", text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
    }
    Ok(())
}

fn is_cap(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        matches!(c.downcast_ref::<ColoringError>(), Some(ColoringError::CapExceeded(_)))
            || matches!(
                c.downcast_ref::<ReduceError>(),
                Some(ReduceError::Coloring(ColoringError::CapExceeded(_)))
            )
    })
}

fn check(format: Format, graph: &Path, coloring: &Path, dynamic: bool, lists: Option<&Path>) -> Result<()> {
    let g = text::parse_graph(&read(graph)?).with_context(|| graph.display().to_string())?;
    let c = text::parse_coloring(&read(coloring)?).with_context(|| coloring.display().to_string())?;
    let mut violation = first_violation(&g, &c, dynamic)?;
    if violation.is_none() {
        if let Some(p) = lists {
            let l = text::parse_lists(&read(p)?).with_context(|| p.display().to_string())?;
            violation = list_violation(&g, &c, &l)?;
        }
    }
    let report = json!({ "valid": violation.is_none(), "dynamic": dynamic, "violation": violation });
    emit(format, &report, || match &violation {
        None => "valid\n".to_string(),
        Some(v) => format!("invalid: {v}\n"),
    })?;
    if violation.is_some() {
        return Err(Exit(1).into());
    }
    Ok(())
}

fn solve(format: Format, path: &Path, param: Param, ell: Option<usize>, limits: &SearchLimits) -> Result<()> {
    let g = text::parse_graph(&read(path)?).with_context(|| path.display().to_string())?;
    match param {
        Param::Chi | Param::Chid => {
            let (name, r) = match param {
                Param::Chi => ("chi", chi_with(&g, limits)?),
                _ => ("chid", chi_dynamic_with(&g, limits)?),
            };
            let out = beside(path, &format!(".{name}.coloring"));
            write(&out, &text::write_coloring(&r.witness))?;
            let report = json!({
                "param": name,
                "value": r.value,
                "nodes": r.nodes,
                "witness": out.display().to_string(),
            });
            emit(format, &report, || {
                format!("{name} = {}\nwitness: {} ({} nodes)\n", r.value, out.display(), r.nodes)
            })
        }
        Param::Ch | Param::Chd => {
            let dynamic = param == Param::Chd;
            let name = if dynamic { "chd" } else { "ch" };
            let sizes: Vec<usize> = match ell {
                Some(k) => vec![k],
                None => (1..=limits.choose_max_ell).collect(),
            };
            let mut last_no = None;
            for k in sizes {
                let r = choosable_with(&g, k, dynamic, limits)?;
                if r.choosable {
                    let value = ell.is_none().then_some(k);
                    let counter = last_no.take();
                    return report_choose(format, path, name, k, true, value, counter, r.method);
                }
                last_no = Some((k, r));
            }
            match (ell, last_no) {
                (Some(k), Some((_, r))) => {
                    report_choose(format, path, name, k, false, None, Some((k, r.clone())), r.method)
                }
                _ => Err(anyhow!(ColoringError::CapExceeded(format!(
                    "{name} exceeds the largest list size searched ({})",
                    limits.choose_max_ell
                )))),
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn report_choose(
    format: Format,
    path: &Path,
    name: &str,
    ell: usize,
    choosable: bool,
    value: Option<usize>,
    counter: Option<(usize, dyncolor::coloring::ChoosabilityReport)>,
    method: dyncolor::coloring::ChooseMethod,
) -> Result<()> {
    let mut counter_path = None;
    if let Some((k, r)) = &counter {
        if let Some(l) = &r.counterexample {
            let out = beside(path, &format!(".{name}{k}.lists"));
            write(&out, &text::write_lists(l))?;
            counter_path = Some((k, out));
        }
    }
    let report = json!({
        "param": name,
        "ell": ell,
        "choosable": choosable,
        "value": value,
        "method": method,
        "counterexample": counter_path.as_ref().map(|(k, p)| json!({"ell": k, "file": p.display().to_string()})),
    });
    emit(format, &report, || {
        let mut s = match value {
            Some(v) => format!("{name} = {v}\n"),
            None => format!(
                "{ell}-{}choosable: {}\n",
                if name == "chd" { "dynamic-" } else { "" },
                if choosable { "yes" } else { "no" }
            ),
        };
        s.push_str(&format!(
            "method: {}\n",
            serde_json::to_value(method).unwrap().as_str().unwrap_or("")
        ));
        if let Some((k, p)) = &counter_path {
            s.push_str(&format!("counterexample for {k}: {}\n", p.display()));
        }
        s
    })?;
    if !choosable {
        return Err(Exit(1).into());
    }
    Ok(())
}

fn parse_drawing(path: &Path) -> Result<OnePlaneDrawing> {
    let d = text::parse_drawing(&read(path)?).with_context(|| path.display().to_string())?;
    let violations = d.validate();
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| format!("  {v}")).collect();
        bail!("{}: invalid drawing\n{}", path.display(), list.join("\n"));
    }
    Ok(d)
}

#[allow(clippy::too_many_arguments)]
fn color11(
    format: Format,
    path: &Path,
    lists: Option<&Path>,
    uniform: Option<u32>,
    trace: bool,
    output: Option<&Path>,
    fallback_max_nodes: u64,
) -> Result<()> {
    let d = parse_drawing(path)?;
    let l = match lists {
        Some(p) => text::parse_lists(&read(p)?).with_context(|| p.display().to_string())?,
        None => ListAssignment::uniform(d.graph(), uniform.unwrap_or(11)),
    };
    let opts = ColorOptions {
        fallback_max_nodes: Some(fallback_max_nodes),
        ..ColorOptions::default()
    };
    let run = color_1planar_with(&d, &l, &opts)?;
    let out = output
        .map(Path::to_path_buf)
        .unwrap_or_else(|| path.with_extension("coloring"));
    write(&out, &text::write_coloring(&run.coloring))?;
    let report = json!({
        "coloring": out.display().to_string(),
        "vertices": d.graph().vertex_count(),
        "colors": colors_used(&run.coloring).len(),
        "fallback": run.fallback,
        "redraws": run.redraws,
        "trace": if trace { Some(&run.trace) } else { None },
    });
    emit(format, &report, || {
        let mut s = String::new();
        if trace {
            for t in &run.trace {
                s.push_str(&format!("{t}\n"));
            }
        }
        s.push_str(&format!(
            "dynamic list coloring of {} vertices with {} colors written to {}\n",
            d.graph().vertex_count(),
            colors_used(&run.coloring).len(),
            out.display()
        ));
        if run.fallback {
            s.push_str("note: exact fallback was used\n");
        }
        s
    })
}

fn discharge(format: Format, path: &Path) -> Result<()> {
    let d = parse_drawing(path)?;
    let r = dyncolor::discharge::discharge_report(&d)?;
    emit(format, &r, || r.to_text())
}

/// Drawing file for `family` and `n`.
fn generate_text(family: &str, n: u32, seed: u64) -> Result<String> {
    let d = match family {
        "cycle" if n >= 3 => OnePlaneDrawing::from_graph_trivial(&families::cycle(n))?,
        "cycle" => bail!("cycle needs n >= 3"),
        "path" => OnePlaneDrawing::from_graph_trivial(&families::path(n))?,
        "complete" => complete_drawing(n).ok_or_else(|| {
            anyhow!("K{n} has no 1-plane drawing (a 1-planar graph on n vertices has at most 4n - 8 edges)")
        })?,
        "complete-subdiv" => {
            complete_subdivision_drawing(n).ok_or_else(|| anyhow!("only 2-subdivisions of K2 to K7 are available"))?
        }
        "random-planar" => {
            let params = RandomDrawingParams {
                vertices: n as usize,
                extent: 1000,
                keep: 0.85,
                one_plane: false,
            };
            random_drawing(params, seed).to_drawing()?
        }
        other => bail!("unknown family {other}"),
    };
    Ok(text::write_drawing(&d))
}

fn generate(family: Family, n: u32, seed: u64, output: Option<&Path>) -> Result<()> {
    let name = family.to_possible_value().unwrap().get_name().to_string();
    let out = generate_text(&name, n, seed)?;
    match output {
        Some(p) => write(p, &out),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let f = cli.format;
    match cli.command {
        Command::Check {
            graph,
            coloring,
            dynamic,
            lists,
        } => check(f, &graph, &coloring, dynamic, lists.as_deref()),
        Command::Solve {
            graph,
            param,
            ell,
            max_vertices,
            max_nodes,
            max_ell,
        } => {
            let limits = SearchLimits {
                max_vertices,
                max_nodes,
                choose_max_ell: max_ell,
                ..SearchLimits::default()
            };
            solve(f, &graph, param, ell, &limits)
        }
        Command::Color11 {
            drawing,
            lists,
            uniform_lists,
            trace,
            output,
            fallback_max_nodes,
        } => color11(
            f,
            &drawing,
            lists.as_deref(),
            uniform_lists,
            trace,
            output.as_deref(),
            fallback_max_nodes,
        ),
        Command::Discharge { drawing } => discharge(f, &drawing),
        Command::Generate {
            family,
            n,
            seed,
            output,
        } => generate(family, n, seed, output.as_deref()),
        Command::Selftest => {
            if selftest::run(f) {
                Ok(())
            } else {
                Err(Exit(1).into())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(Exit(code)) = e.downcast_ref::<Exit>() {
                return ExitCode::from(*code);
            }
            eprintln!("error: {e:#}");
            ExitCode::from(if is_cap(&e) { 3 } else { 1 })
        }
    }
}

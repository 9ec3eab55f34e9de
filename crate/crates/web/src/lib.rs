//! Browser demo: cycle explorer, random 1-plane drawings colored from
//! 11-lists, and the discharge table of the shipped fixtures.
//!
//! Every export returns a JSON string; failures come back as
//! `{"error": "..."}`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use dyncolor::catalog::{fixture, fixture_names};
use dyncolor::coloring::{chi, chi_d_even_cycle, chi_dynamic_with, colors_used, SearchLimits};
use dyncolor::discharge::discharge_report;
use dyncolor::geometry::{random_drawing, RandomDrawingParams, StraightLineDrawing};
use dyncolor::reduce::{color_1planar, TraceEvent};
use dyncolor::{families, Coloring, ListAssignment};

const PALETTE: [&str; 11] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#469990", "#9a6324",
    "#800000",
];

const CYCLE_MAX: u32 = 24;
const RANDOM_MAX: u32 = 60;

fn fill(c: Option<u32>) -> &'static str {
    match c {
        Some(c) if c >= 1 => PALETTE[(c as usize - 1) % PALETTE.len()],
        _ => "#ffffff",
    }
}

/// Segment ends and whether the edge is crossed.
type Segment = ((f64, f64), (f64, f64), bool);

fn svg(points: &[(u32, f64, f64)], edges: &[Segment], coloring: &Coloring, size: f64) -> String {
    let mut s = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">"#
    );
    for ((x1, y1), (x2, y2), crossed) in edges {
        let stroke = if *crossed { "#c00" } else { "#555" };
        let _ = write!(
            s,
            r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="1.5"/>"#
        );
    }
    for &(v, x, y) in points {
        let c = coloring.get(dyncolor::VertexId(v));
        let _ = write!(
            s,
            r##"<circle cx="{x:.1}" cy="{y:.1}" r="9" fill="{}" stroke="#222"><title>v{v} color {}</title></circle>"##,
            fill(c),
            c.map_or("-".to_string(), |c| c.to_string()),
        );
        let _ = write!(
            s,
            r##"<text x="{x:.1}" y="{:.1}" font-size="9" text-anchor="middle" fill="#fff">{}</text>"##,
            y + 3.0,
            c.map_or(String::new(), |c| c.to_string()),
        );
    }
    s.push_str("</svg>");
    s
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| json!({ "error": e.to_string() }).to_string()),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn cycle_inner(m: u32) -> Result<serde_json::Value, String> {
    if !(3..=CYCLE_MAX).contains(&m) {
        return Err(format!("cycle length must be between 3 and {CYCLE_MAX}"));
    }
    let g = families::cycle(m);
    let limits = SearchLimits {
        max_vertices: CYCLE_MAX as usize,
        ..SearchLimits::default()
    };
    let x = chi(&g).map_err(|e| e.to_string())?;
    let xd = chi_dynamic_with(&g, &limits).map_err(|e| e.to_string())?;
    let formula = chi_d_even_cycle(m as usize).ok();
    let size = 260.0;
    let r = size / 2.0 - 20.0;
    let pos = |i: u32| {
        let t = std::f64::consts::TAU * i as f64 / m as f64 - std::f64::consts::FRAC_PI_2;
        (size / 2.0 + r * t.cos(), size / 2.0 + r * t.sin())
    };
    let points: Vec<(u32, f64, f64)> = (0..m).map(|i| (i, pos(i).0, pos(i).1)).collect();
    let edges: Vec<_> = (0..m).map(|i| (pos(i), pos((i + 1) % m), false)).collect();
    Ok(json!({
        "m": m,
        "chi": x.value,
        "chi_dynamic": xd.value,
        "even_formula": formula,
        "nodes": xd.nodes,
        "svg": svg(&points, &edges, &xd.witness, size),
    }))
}

/// Chromatic and dynamic chromatic number of `C_m` with a drawn witness.
#[wasm_bindgen]
pub fn cycle_explorer(m: u32) -> String {
    to_json(cycle_inner(m))
}

fn scaled(d: &StraightLineDrawing, extent: f64, size: f64) -> impl Fn(dyncolor::VertexId) -> (f64, f64) + '_ {
    let k = (size - 30.0) / extent;
    move |v| {
        let (x, y) = d.points[&v];
        (15.0 + x as f64 * k, 15.0 + y as f64 * k)
    }
}

fn random_inner(n: u32, seed: u64, one_plane: bool) -> Result<serde_json::Value, String> {
    if !(1..=RANDOM_MAX).contains(&n) {
        return Err(format!("vertex count must be between 1 and {RANDOM_MAX}"));
    }
    let extent = 1000;
    let params = RandomDrawingParams {
        vertices: n as usize,
        extent,
        keep: 0.85,
        one_plane,
    };
    let geo = random_drawing(params, seed);
    let d = geo.to_drawing().map_err(|e| e.to_string())?;
    let crossed = geo.crossings_per_edge().map_err(|e| e.to_string())?;
    let run = color_1planar(&d, &ListAssignment::uniform(d.graph(), 11)).map_err(|e| e.to_string())?;
    let size = 420.0;
    let at = scaled(&geo, extent as f64, size);
    let points: Vec<(u32, f64, f64)> = geo.points.keys().map(|&v| (v.0, at(v).0, at(v).1)).collect();
    let edges: Vec<_> = geo
        .edges
        .iter()
        .zip(&crossed)
        .map(|(&(a, b), &k)| (at(a), at(b), k > 0))
        .collect();
    let reductions = run
        .trace
        .iter()
        .filter(|t| matches!(t.event, TraceEvent::Reduce { .. }))
        .count();
    Ok(json!({
        "vertices": d.graph().vertex_count(),
        "edges": d.edge_count(),
        "crossings": d.crossing_count(),
        "colors": colors_used(&run.coloring).len(),
        "reductions": reductions,
        "fallback": run.fallback,
        "trace": run.trace.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "svg": svg(&points, &edges, &run.coloring, size),
    }))
}

/// Seeded random straight-line drawing, colored from the lists {1..11}.
#[wasm_bindgen]
pub fn random_coloring(n: u32, seed: u32, one_plane: bool) -> String {
    to_json(random_inner(n, seed as u64, one_plane))
}

/// Names of the shipped fixtures.
#[wasm_bindgen]
pub fn fixtures() -> String {
    to_json(Ok::<_, String>(fixture_names()))
}

/// Discharge report of a fixture, with the rendered table.
#[wasm_bindgen]
pub fn discharge_fixture(name: &str) -> String {
    to_json((|| {
        let f = fixture(name).ok_or_else(|| format!("unknown fixture {name}"))?;
        let r = discharge_report(&f.drawing).map_err(|e| e.to_string())?;
        Ok(json!({
            "name": f.name,
            "description": f.description,
            "total_final": r.total_final,
            "negative": r.negative.len(),
            "text": r.to_text(),
        }))
    })())
}

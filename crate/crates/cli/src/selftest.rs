//! Built-in examples, run by `dyncolor selftest`.

use serde::Serialize;

use dyncolor::catalog::{complete_drawing, fixture};
use dyncolor::coloring::{
    chi, chi_dynamic, choosable, colors_used, first_violation, is_proper, lift_coloring, ColoringViolation,
};
use dyncolor::discharge::{discharge_report, Claim};
use dyncolor::reduce::{color_1planar, ConfigKind};
use dyncolor::{families, text, Coloring, ListAssignment, OnePlaneDrawing, VertexId};

use crate::Format;

#[derive(Serialize)]
struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

type Check = fn() -> Result<String, String>;

fn ok(cond: bool, detail: String) -> Result<String, String> {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c4_alternating() -> (dyncolor::Graph, Coloring) {
    let g = families::cycle(4);
    let c = [1, 2, 1, 2]
        .iter()
        .enumerate()
        .map(|(i, c)| (VertexId(i as u32), *c))
        .collect();
    (g, c)
}

fn check_dynamic_c4() -> Result<String, String> {
    let (g, c) = c4_alternating();
    let v = first_violation(&g, &c, true).map_err(err)?;
    ok(
        matches!(v, Some(ColoringViolation::MonochromaticNeighborhood { .. })),
        format!("{v:?}"),
    )
}

fn check_proper_c4() -> Result<String, String> {
    let (g, c) = c4_alternating();
    let v = first_violation(&g, &c, false).map_err(err)?;
    ok(v.is_none(), "proper".into())
}

fn check_missing_vertex() -> Result<String, String> {
    let (g, mut c) = c4_alternating();
    c.remove(VertexId(3));
    let r = first_violation(&g, &c, false);
    ok(r.is_err(), format!("{r:?}"))
}

fn solve_c5() -> Result<String, String> {
    let v = chi_dynamic(&families::cycle(5)).map_err(err)?.value;
    ok(v == 5, format!("chid(C5) = {v}"))
}

fn solve_c8_chd() -> Result<String, String> {
    let three = choosable(&families::cycle(8), 3, true).map_err(err)?.choosable;
    let four = choosable(&families::cycle(8), 4, true).map_err(err)?.choosable;
    ok(!three && four, format!("3: {three}, 4: {four}"))
}

fn solve_k7() -> Result<String, String> {
    let v = chi(&families::complete(7)).map_err(err)?.value;
    ok(v == 7, format!("chi(K7) = {v}"))
}

fn uniform(d: &OnePlaneDrawing, k: u32) -> ListAssignment {
    ListAssignment::uniform(d.graph(), k)
}

fn color_k6() -> Result<String, String> {
    let d = complete_drawing(6).ok_or("no K6 drawing")?;
    let run = color_1planar(&d, &uniform(&d, 11)).map_err(err)?;
    Ok(format!("{} colors", colors_used(&run.coloring).len()))
}

fn color_k7_star() -> Result<String, String> {
    let d = fixture("k7-star").ok_or("missing fixture")?.drawing;
    let run = color_1planar(&d, &uniform(&d, 11)).map_err(err)?;
    let k7 = families::complete(7);
    let lifted = lift_coloring(&k7, &k7.two_subdivision(), &run.coloring).map_err(err)?;
    let used = colors_used(&lifted).len();
    ok(
        is_proper(&k7, &lifted).map_err(err)? && used >= 7,
        format!("lift uses {used} colors"),
    )
}

fn color_short_lists() -> Result<String, String> {
    let d = complete_drawing(6).ok_or("no K6 drawing")?;
    let r = color_1planar(&d, &uniform(&d, 10));
    ok(r.is_err(), format!("{:?}", r.err().map(|e| e.to_string())))
}

fn discharge_triangulation() -> Result<String, String> {
    let r = discharge_report(&fixture("octahedron").ok_or("missing fixture")?.drawing).map_err(err)?;
    ok(r.total_final == "-8", format!("total {}", r.total_final))
}

fn discharge_k6() -> Result<String, String> {
    let r = discharge_report(&complete_drawing(6).ok_or("no K6 drawing")?).map_err(err)?;
    let attached = r
        .claims
        .iter()
        .flat_map(|c| &c.witnesses)
        .filter(|w| w.attachment.is_some())
        .count();
    ok(attached > 0, format!("{attached} witnesses with attachments"))
}

fn discharge_six_face() -> Result<String, String> {
    let r = discharge_report(&fixture("six-face").ok_or("missing fixture")?.drawing).map_err(err)?;
    let c = r
        .claims
        .iter()
        .find(|c| c.claim == Claim::SixFaceSpecials)
        .ok_or("claim missing")?;
    let redraw = c.witnesses.iter().any(|w| w.attachment.is_some());
    ok(
        !c.holds && redraw,
        format!("violated: {}, redraw offered: {redraw}", !c.holds),
    )
}

fn discharge_c6() -> Result<String, String> {
    let r = discharge_report(&fixture("c6").ok_or("missing fixture")?.drawing).map_err(err)?;
    let c = r
        .claims
        .iter()
        .find(|c| c.claim == Claim::TwoVertexNonneg)
        .ok_or("claim missing")?;
    let kind = c.witnesses.first().and_then(|w| match &w.attachment {
        Some(dyncolor::discharge::Attachment::Configuration { config }) => Some(config.kind),
        _ => None,
    });
    ok(!c.holds && kind == Some(ConfigKind::AdjacentTwos), format!("{kind:?}"))
}

fn generate_cycle() -> Result<String, String> {
    let d = text::parse_drawing(&crate::generate_text("cycle", 6, 0).map_err(err)?).map_err(err)?;
    ok(d.graph() == &families::cycle(6) && d.crossing_count() == 0, "C6".into())
}

fn generate_complete() -> Result<String, String> {
    let d = text::parse_drawing(&crate::generate_text("complete", 6, 0).map_err(err)?).map_err(err)?;
    let refused = crate::generate_text("complete", 7, 0).is_err();
    ok(
        d.is_valid() && d.graph() == &families::complete(6) && refused,
        format!("{} crossings", d.crossing_count()),
    )
}

fn generate_k7_star() -> Result<String, String> {
    let out = crate::generate_text("complete-subdiv", 7, 0).map_err(err)?;
    let fixture = text::write_drawing(&fixture("k7-star").ok_or("missing fixture")?.drawing);
    ok(out == fixture, "matches the shipped drawing".into())
}

fn generate_reproducible() -> Result<String, String> {
    let a = crate::generate_text("random-planar", 20, 0).map_err(err)?;
    let b = crate::generate_text("random-planar", 20, 0).map_err(err)?;
    ok(a == b, "same seed, same file".into())
}

const CHECKS: [(&str, Check); 17] = [
    ("check: C4 1,2,1,2 is not dynamic", check_dynamic_c4),
    ("check: C4 1,2,1,2 is proper", check_proper_c4),
    ("check: missing vertex is reported", check_missing_vertex),
    ("solve: chid(C5) = 5", solve_c5),
    ("solve: chd(C8) = 4", solve_c8_chd),
    ("solve: chi(K7) = 7", solve_k7),
    ("color11: K6", color_k6),
    ("color11: K7 subdivision lifts to >= 7 colors", color_k7_star),
    ("color11: lists of size 10 are refused", color_short_lists),
    ("discharge: triangulation totals -8", discharge_triangulation),
    ("discharge: K6 audit attaches configurations", discharge_k6),
    ("discharge: six-face pattern offers a redraw", discharge_six_face),
    ("discharge: C6 two-vertices point at AdjacentTwos", discharge_c6),
    ("generate: cycle 6", generate_cycle),
    ("generate: complete 6, complete 7 refused", generate_complete),
    ("generate: complete-subdiv 7", generate_k7_star),
    ("generate: random-planar is seeded", generate_reproducible),
];

/// Runs every example; true when all pass.
pub fn run(format: Format) -> bool {
    let outcomes: Vec<Outcome> = CHECKS
        .iter()
        .map(|(name, f)| {
            let (pass, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Outcome { name, pass, detail }
        })
        .collect();
    match format {
        Format::Text => {
            for o in &outcomes {
                println!("{} {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.name, o.detail);
            }
            let passed = outcomes.iter().filter(|o| o.pass).count();
            println!("{passed}/{} passed", outcomes.len());
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&outcomes).unwrap()),
    }
    outcomes.iter().all(|o| o.pass)
}

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dyncolor::catalog::{all_graphs, fixture, fixtures, planar_graphs};
use dyncolor::coloring::{
    chi, chi_d_even_cycle, chi_dynamic, chi_dynamic_with, choosable, choosable_with, colors_used, is_dynamic,
    is_proper, lift_coloring, subdivision_gap, SearchLimits,
};
use dyncolor::discharge::{
    alpha_sum_bound, apply_rules, component_totals, consecutive_sums, initial_charges, Element, Rule,
};
use dyncolor::geometry::{random_drawing, RandomDrawingParams, StraightLineDrawing};
use dyncolor::reduce::{color_1planar, improve_drawing_6face, TraceEvent, BIG_DEGREE};
use dyncolor::{families, ListAssignment, OnePlaneDrawing, PlaneVertex};
use num_rational::Rational64;

type Outcome = Result<String, String>;

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Outcome {
    let mut got = Vec::new();
    for m in (4..=14).step_by(2) {
        let value = chi_dynamic(&families::cycle(m)).map_err(|e| e.to_string())?.value;
        let formula = chi_d_even_cycle(m as usize).map_err(|e| e.to_string())?;
        ensure(value == formula, format!("C{m}: solver {value}, formula {formula}"))?;
        got.push(value);
    }
    ensure(got == vec![4, 3, 4, 4, 3, 4], format!("values {got:?}"))?;
    Ok(format!("chi_d(C4..C14) = {got:?}"))
}

fn criterion_2() -> Outcome {
    let c5 = chi_dynamic(&families::cycle(5)).map_err(|e| e.to_string())?.value;
    ensure(c5 == 5, format!("chi_d(C5) = {c5}"))?;
    let catalog = planar_graphs(6);
    let mut worst = 0;
    for g in &catalog {
        let v = chi_dynamic(g).map_err(|e| e.to_string())?.value;
        ensure(v <= 5, format!("planar graph with chi_d {v}"))?;
        let is_c5 = g.vertex_count() == 5 && g.edge_count() == 5 && g.vertices().all(|x| g.neighbors(x).len() == 2);
        ensure((v == 5) == is_c5, "chi_d = 5 off C5")?;
        worst = worst.max(v);
    }
    Ok(format!(
        "chi_d(C5) = 5; max chi_d over {} connected planar graphs = {worst}",
        catalog.len()
    ))
}

fn criterion_3() -> Outcome {
    let c6 = choosable(&families::cycle(6), 3, true).map_err(|e| e.to_string())?;
    let c8_3 = choosable(&families::cycle(8), 3, true).map_err(|e| e.to_string())?;
    let c8_4 = choosable(&families::cycle(8), 4, true).map_err(|e| e.to_string())?;
    ensure(c6.choosable, "C6 not 3-choosable")?;
    ensure(!c8_3.choosable && c8_3.counterexample.is_some(), "C8 3-choosable")?;
    ensure(c8_4.choosable, "C8 not 4-choosable")?;
    // exhaustive search agrees where it is quick
    let limits = SearchLimits {
        exhaustive_only: true,
        ..SearchLimits::default()
    };
    let c6_game = choosable_with(&families::cycle(6), 3, true, &limits).map_err(|e| e.to_string())?;
    ensure(c6_game.choosable, "exhaustive search disagrees on C6")?;
    Ok(format!(
        "C6/3 yes ({:?}, exhaustive agrees), C8/3 no ({:?}), C8/4 yes ({:?})",
        c6.method, c8_3.method, c8_4.method
    ))
}

fn criterion_4() -> Outcome {
    let graphs = all_graphs(5);
    let limits = SearchLimits {
        max_vertices: 24,
        ..SearchLimits::default()
    };
    for g in &graphs {
        let x = chi(g).map_err(|e| e.to_string())?.value;
        let sub = g.two_subdivision();
        let xd = chi_dynamic_with(&sub.graph, &limits).map_err(|e| e.to_string())?.value;
        ensure(x <= xd, format!("chi {x} > chi_d of subdivision {xd}"))?;
    }
    for n in 3..=12u32 {
        let xd = chi_dynamic_with(&families::cycle(2 * n), &limits)
            .map_err(|e| e.to_string())?
            .value;
        let x = chi(&families::cycle(n)).map_err(|e| e.to_string())?.value;
        let gap = subdivision_gap(n as usize).map_err(|e| e.to_string())?;
        ensure(xd - x == gap, format!("n={n}: brute force {} vs table {gap}", xd - x))?;
    }
    Ok(format!("{} graphs on <= 5 vertices; gap table n = 3..12", graphs.len()))
}

fn criterion_5() -> Outcome {
    let all = fixtures();
    ensure(all.len() >= 10, "fewer than 10 fixtures")?;
    for name in ["c6", "k6", "k7-star", "six-face"] {
        ensure(fixture(name).is_some(), format!("missing fixture {name}"))?;
    }
    let mut comps = 0;
    for f in &all {
        let p = f.drawing.associated_plane_graph().map_err(|e| e.to_string())?;
        let ledger = apply_rules(&p, &initial_charges(&p));
        for (init, fin) in component_totals(&p, &ledger) {
            ensure(init == q(-8), format!("{}: component initial {init}", f.name))?;
            ensure(fin == init, format!("{}: component final {fin}", f.name))?;
            comps += 1;
        }
        ensure(
            ledger.total_final() == ledger.total_initial(),
            format!("{}: not conserved", f.name),
        )?;
    }
    Ok(format!(
        "{} fixtures, {comps} components, each -8 before and after R1-R5",
        all.len()
    ))
}

/// Two crossing edges plus one side, with both side vertices of degree 9.
fn big_false_triangle() -> OnePlaneDrawing {
    let mut pts = vec![(0, 0), (10, 0), (10, 10), (0, 10)];
    let mut edges = vec![(0, 2), (1, 3), (0, 1)];
    for k in 1..=7 {
        pts.push((-k, -10));
        edges.push((0, pts.len() as u32 - 1));
        pts.push((10 + k, -10));
        edges.push((1, pts.len() as u32 - 1));
    }
    StraightLineDrawing::new(&pts, &edges).to_drawing().unwrap()
}

fn criterion_6() -> Outcome {
    let three = |d: &OnePlaneDrawing, false_face: bool| -> Result<Rational64, String> {
        let p = d.associated_plane_graph().map_err(|e| e.to_string())?;
        let l = apply_rules(&p, &initial_charges(&p));
        let f = p
            .faces()
            .find(|(id, f)| f.degree() == 3 && p.is_false_face(*id) == false_face)
            .ok_or("no 3-face")?
            .0;
        Ok(l.final_charge(Element::Face(f)))
    };
    let r1 = three(&fixture("big-triangle").unwrap().drawing, false)?;
    ensure(r1 == q(0), format!("true 3-face ends at {r1}"))?;
    ensure(q(3) - q(4) + q(3) * Rational64::new(1, 3) == r1, "R1 arithmetic")?;
    let r2 = three(&big_false_triangle(), true)?;
    ensure(r2 == q(0), format!("false 3-face ends at {r2}"))?;
    ensure(q(3) - q(4) + q(2) * Rational64::new(1, 2) == r2, "R2 arithmetic")?;

    let d = fixture("special-4-face").unwrap().drawing;
    let p = d.associated_plane_graph().map_err(|e| e.to_string())?;
    let l = apply_rules(&p, &initial_charges(&p));
    let sf = p.special_4_faces(BIG_DEGREE);
    ensure(sf.len() == 1, "special 4-face not found")?;
    let f = Element::Face(sf[0].face);
    let inflow: Rational64 = l
        .transfers()
        .iter()
        .filter(|t| t.rule == Rule::R3 && t.to == f)
        .map(|t| t.amount)
        .sum();
    let outflow: Rational64 = l
        .transfers()
        .iter()
        .filter(|t| t.rule == Rule::R3 && t.from == f)
        .map(|t| t.amount)
        .sum();
    ensure(inflow == q(1) && outflow == q(1), "R3 flows")?;
    ensure(
        l.final_charge(f) == q(4) - q(4) + inflow - outflow && l.final_charge(f) == q(0),
        "R3 arithmetic",
    )?;
    let low = Element::Vertex(PlaneVertex::True(sf[0].low));
    ensure(l.net(low, Rule::R3) == q(1), "special vertex did not receive 1")?;

    let h = Rational64::new(1, 2);
    let alpha = [q(1), q(0), q(1), h, h, q(1), h, h, q(1), h, h];
    ensure(consecutive_sums(&alpha).iter().all(|w| *w <= q(2)), "window above 2")?;
    let bound = alpha_sum_bound(&alpha);
    ensure(
        bound == alpha.iter().sum::<Rational64>() && bound <= q(7),
        format!("sum alpha {bound}"),
    )?;
    ensure(q(11) - q(4) - bound == q(0), "11 - 4 - 7")?;
    Ok(format!("R1 {r1}, R2 {r2}, R3 in 1 out 1, d=11 sum alpha = {bound}"))
}

fn criterion_7() -> Outcome {
    let mut corpus: Vec<(String, OnePlaneDrawing)> = fixtures()
        .into_iter()
        .map(|f| (f.name.to_string(), f.drawing))
        .collect();
    for seed in 0..200u64 {
        let params = RandomDrawingParams {
            vertices: 3 + (seed as usize % 38),
            extent: 1000,
            keep: 0.85,
            one_plane: false,
        };
        let d = random_drawing(params, seed).to_drawing().map_err(|e| e.to_string())?;
        ensure(d.crossing_count() == 0, "planar generator produced a crossing")?;
        corpus.push((format!("planar-{seed}"), d));
    }
    for seed in 0..50u64 {
        let params = RandomDrawingParams {
            vertices: 6 + (seed as usize % 30),
            extent: 1000,
            keep: 0.85,
            one_plane: true,
        };
        let d = random_drawing(params, 1000 + seed)
            .to_drawing()
            .map_err(|e| e.to_string())?;
        corpus.push((format!("oneplane-{seed}"), d));
    }
    let (mut reductions, mut fallbacks, mut redraws) = (0, 0, 0);
    for (name, d) in &corpus {
        let lists = ListAssignment::uniform(d.graph(), 11);
        let run = color_1planar(d, &lists).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            is_dynamic(d.graph(), &run.coloring).unwrap_or(false),
            format!("{name}: not dynamic"),
        )?;
        for t in &run.trace {
            match t.event {
                TraceEvent::Reduce { .. } => {
                    reductions += 1;
                    ensure(
                        t.measure_after < t.measure_before,
                        format!("{name}: measure did not drop"),
                    )?;
                }
                TraceEvent::Redraw {
                    crossings_before,
                    crossings_after,
                } => {
                    redraws += 1;
                    ensure(
                        crossings_after < crossings_before,
                        format!("{name}: crossings did not drop"),
                    )?;
                }
                TraceEvent::Fallback { .. } => fallbacks += 1,
                TraceEvent::Base { .. } => {}
            }
        }
    }
    Ok(format!(
        "{} drawings colored; {reductions} reductions, {redraws} redraws, {fallbacks} fallbacks",
        corpus.len()
    ))
}

fn criterion_8() -> Outcome {
    let f = fixture("k7-star").ok_or("missing fixture")?;
    let k7 = families::complete(7);
    let sub = k7.two_subdivision();
    ensure(
        &sub.graph == f.drawing.graph(),
        "fixture is not the 2-subdivision of K7",
    )?;
    let run = color_1planar(&f.drawing, &ListAssignment::uniform(f.drawing.graph(), 11)).map_err(|e| e.to_string())?;
    let lifted = lift_coloring(&k7, &sub, &run.coloring).map_err(|e| e.to_string())?;
    ensure(is_proper(&k7, &lifted).unwrap_or(false), "lift not proper")?;
    let used = colors_used(&lifted).len();
    ensure(used >= 7, format!("{used} colors"))?;
    Ok(format!("lift proper on K7 with {used} colors"))
}

fn criterion_9() -> Outcome {
    let d = fixture("six-face").ok_or("missing fixture")?.drawing;
    let better = improve_drawing_6face(&d).ok_or("no redrawing found")?;
    ensure(better.is_valid(), "redrawing invalid")?;
    ensure(better.graph() == d.graph(), "graph changed")?;
    ensure(
        better.crossing_count() + 3 == d.crossing_count(),
        format!("{} -> {}", d.crossing_count(), better.crossing_count()),
    )?;
    Ok(format!(
        "crossings {} -> {}",
        d.crossing_count(),
        better.crossing_count()
    ))
}

fn criterion_10() -> Outcome {
    Ok(
        "statement: ch_d <= 11 for every 1-planar graph is not reproduced as a universal result; \
        acceptance rests on criteria 5 to 9"
            .to_string(),
    )
}

fn main() -> ExitCode {
    let criteria: [(fn() -> Outcome, Duration); 10] = [
        (criterion_1, Duration::from_secs(5)),
        (criterion_2, Duration::from_secs(60)),
        (criterion_3, Duration::from_secs(600)),
        (criterion_4, Duration::from_secs(120)),
        (criterion_5, Duration::from_secs(60)),
        (criterion_6, Duration::from_secs(60)),
        (criterion_7, Duration::from_secs(300)),
        (criterion_8, Duration::from_secs(60)),
        (criterion_9, Duration::from_secs(60)),
        (criterion_10, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(s) if took > *limit => Err(format!("{s}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(s) => println!("criterion {:>2} PASS [{took:.2?}] {s}", i + 1),
            Err(s) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{took:.2?}] {s}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Proper and dynamic coloring: checkers, exact solvers, closed forms for
//! cycles, and the coloring lift from a 2-subdivision.

mod choose;
mod polynomial;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Duration;

use web_time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::ColoringError;
use crate::graph::{Color, Coloring, Graph, ListAssignment, Subdivision, VertexId};

pub use choose::{choosable, choosable_with, ChoosabilityReport, ChooseMethod};
use search::{Dense, Search};

/// Configurable search caps. Exceeding one is an error, never a silent
/// approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Largest graph accepted by [`chi`] and [`chi_dynamic`].
    pub max_vertices: usize,
    /// Largest graph accepted by [`choosable`].
    pub choose_max_vertices: usize,
    /// Largest list size accepted by [`choosable`].
    pub choose_max_ell: usize,
    /// Node budget for a single backtracking run; `None` is unbounded.
    pub max_nodes: Option<u64>,
    /// Skip the polynomial certificate in [`choosable`] and always search.
    pub exhaustive_only: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 16,
            choose_max_vertices: 8,
            choose_max_ell: 4,
            max_nodes: None,
            exhaustive_only: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub value: usize,
    pub witness: Coloring,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// First constraint a coloring breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoringViolation {
    MonochromaticEdge { u: VertexId, v: VertexId, color: Color },
    MonochromaticNeighborhood { vertex: VertexId, color: Color },
    NotInList { vertex: VertexId, color: Color },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringViolation::MonochromaticEdge { u, v, color } => {
                write!(f, "monochromatic edge {u}-{v} (color {color})")
            }
            ColoringViolation::MonochromaticNeighborhood { vertex, color } => {
                write!(f, "monochromatic neighborhood at {vertex} (all color {color})")
            }
            ColoringViolation::NotInList { vertex, color } => {
                write!(f, "color {color} of vertex {vertex} is not in its list")
            }
        }
    }
}

fn require_total(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    match c.first_uncolored(g) {
        Some(v) => Err(ColoringError::Uncolored(v)),
        None => Ok(()),
    }
}

/// First violated constraint, edges before neighborhoods, both in vertex
/// order. `dynamic` adds the neighborhood condition.
pub fn first_violation(g: &Graph, c: &Coloring, dynamic: bool) -> Result<Option<ColoringViolation>, ColoringError> {
    require_total(g, c)?;
    for (u, v) in g.edges() {
        let color = c.get(u).unwrap();
        if color == c.get(v).unwrap() {
            return Ok(Some(ColoringViolation::MonochromaticEdge { u, v, color }));
        }
    }
    if dynamic {
        for v in g.vertices() {
            let ns = g.neighbors(v);
            if ns.len() < 2 {
                continue;
            }
            let mut colors = ns.iter().map(|w| c.get(*w).unwrap());
            let first = colors.next().unwrap();
            if colors.all(|x| x == first) {
                return Ok(Some(ColoringViolation::MonochromaticNeighborhood {
                    vertex: v,
                    color: first,
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(first_violation(g, c, false)?.is_none())
}

/// Proper, and every vertex of degree at least two sees two colors.
pub fn is_dynamic(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(first_violation(g, c, true)?.is_none())
}

/// Whether every vertex's color is taken from its list.
pub fn respects_lists(g: &Graph, c: &Coloring, l: &ListAssignment) -> Result<bool, ColoringError> {
    Ok(list_violation(g, c, l)?.is_none())
}

pub fn list_violation(g: &Graph, c: &Coloring, l: &ListAssignment) -> Result<Option<ColoringViolation>, ColoringError> {
    require_total(g, c)?;
    for v in g.vertices() {
        let color = c.get(v).unwrap();
        let list = l.get(v).ok_or(ColoringError::MissingList(v))?;
        if !list.contains(&color) {
            return Ok(Some(ColoringViolation::NotInList { vertex: v, color }));
        }
    }
    Ok(None)
}

fn exact(g: &Graph, dynamic: bool, limits: &SearchLimits) -> Result<SolveReport, ColoringError> {
    let n = g.vertex_count();
    if n > limits.max_vertices {
        return Err(ColoringError::CapExceeded(format!(
            "{n} vertices exceed the cap of {}",
            limits.max_vertices
        )));
    }
    let start = Instant::now();
    let lower = if n == 0 {
        0
    } else if dynamic && g.max_degree() >= 2 {
        3
    } else if g.edge_count() > 0 {
        2
    } else {
        1
    };
    let dense = Dense::new(g);
    let mut nodes = 0;
    for k in lower.max(1)..=n.max(1) {
        let lists = vec![(1..=k as Color).collect::<Vec<_>>(); n];
        let mut s = Search::new(&dense, lists, dynamic, true, limits.max_nodes);
        let found = s.run();
        nodes += s.nodes;
        match found {
            Err(()) => return Err(ColoringError::CapExceeded(format!("node budget exhausted at k = {k}"))),
            Ok(Some(witness)) => {
                let witness = dense.to_coloring(&witness);
                let ok = if dynamic {
                    is_dynamic(g, &witness)?
                } else {
                    is_proper(g, &witness)?
                };
                assert!(ok, "solver produced an invalid witness");
                return Ok(SolveReport {
                    value: if n == 0 { 0 } else { k },
                    witness,
                    nodes,
                    elapsed: start.elapsed(),
                });
            }
            Ok(None) => {}
        }
    }
    unreachable!("n distinct colors always give a dynamic coloring")
}

/// Chromatic number by exhaustive search.
pub fn chi(g: &Graph) -> Result<SolveReport, ColoringError> {
    chi_with(g, &SearchLimits::default())
}

pub fn chi_with(g: &Graph, limits: &SearchLimits) -> Result<SolveReport, ColoringError> {
    exact(g, false, limits)
}

/// Dynamic chromatic number by exhaustive search.
pub fn chi_dynamic(g: &Graph) -> Result<SolveReport, ColoringError> {
    chi_dynamic_with(g, &SearchLimits::default())
}

pub fn chi_dynamic_with(g: &Graph, limits: &SearchLimits) -> Result<SolveReport, ColoringError> {
    exact(g, true, limits)
}

/// An `L`-coloring (dynamic if asked), or `None` when none exists.
pub fn find_list_coloring(g: &Graph, l: &ListAssignment, dynamic: bool) -> Result<Option<Coloring>, ColoringError> {
    find_list_coloring_limited(g, l, dynamic, None)
}

/// As [`find_list_coloring`] with a node budget.
pub fn find_list_coloring_limited(
    g: &Graph,
    l: &ListAssignment,
    dynamic: bool,
    max_nodes: Option<u64>,
) -> Result<Option<Coloring>, ColoringError> {
    let dense = Dense::new(g);
    let lists = dense
        .ids
        .iter()
        .map(|v| {
            l.get(*v)
                .map(|s| s.iter().copied().collect::<Vec<_>>())
                .ok_or(ColoringError::MissingList(*v))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut s = Search::new(&dense, lists, dynamic, false, max_nodes);
    match s.run() {
        Err(()) => Err(ColoringError::CapExceeded(format!(
            "list coloring search exceeded {} nodes",
            max_nodes.unwrap_or(0)
        ))),
        Ok(None) => Ok(None),
        Ok(Some(found)) => {
            let c = dense.to_coloring(&found);
            let ok = if dynamic { is_dynamic(g, &c)? } else { is_proper(g, &c)? };
            assert!(
                ok && respects_lists(g, &c, l)?,
                "list search produced an invalid coloring"
            );
            Ok(Some(c))
        }
    }
}

/// Dynamic chromatic number of the even cycle `C_m`: 3 when `m/2` is a
/// multiple of 3, otherwise 4.
pub fn chi_d_even_cycle(m: usize) -> Result<usize, ColoringError> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(ColoringError::InvalidArgument(format!(
            "needs an even cycle length of at least 4, got {m}"
        )));
    }
    Ok(if (m / 2).is_multiple_of(3) { 3 } else { 4 })
}

/// `chi_d(C_n*) - chi(C_n)` by the residue of `n` modulo 6.
pub fn subdivision_gap(n: usize) -> Result<usize, ColoringError> {
    if n < 3 {
        return Err(ColoringError::InvalidArgument(format!(
            "cycles need at least 3 vertices, got {n}"
        )));
    }
    Ok(match n % 6 {
        3 => 0,
        0 | 1 | 5 => 1,
        _ => 2,
    })
}

/// Restricts a dynamic coloring of the 2-subdivision to the branch
/// vertices; the result is a proper coloring of the original graph.
pub fn lift_coloring(g: &Graph, sub: &Subdivision, c_star: &Coloring) -> Result<Coloring, ColoringError> {
    if !is_dynamic(&sub.graph, c_star)? {
        return Err(ColoringError::NotDynamic);
    }
    let lifted: Coloring = g
        .vertices()
        .map(|v| {
            let image = sub.embedding.get(&v).ok_or(crate::GraphError::UnknownVertex(v))?;
            Ok((v, c_star.get(*image).ok_or(ColoringError::Uncolored(*image))?))
        })
        .collect::<Result<_, ColoringError>>()?;
    debug_assert!(is_proper(g, &lifted)?);
    Ok(lifted)
}

/// Distinct colors used by a coloring.
pub fn colors_used(c: &Coloring) -> BTreeSet<Color> {
    c.distinct_colors()
}

/// All dynamic colorings with colors `1..=k`, each up to renaming of colors
/// exactly once (first occurrences ascending). Small graphs only.
pub fn all_dynamic_colorings(g: &Graph, k: usize) -> Vec<Coloring> {
    let dense = Dense::new(g);
    let lists = vec![(1..=k as Color).collect::<Vec<_>>(); dense.ids.len()];
    let mut s = Search::new(&dense, lists, true, true, None);
    s.enumerate_all().into_iter().map(|c| dense.to_coloring(&c)).collect()
}

/// Histogram of colors, used by reports.
pub fn color_histogram(c: &Coloring) -> BTreeMap<Color, usize> {
    let mut h = BTreeMap::new();
    for (_, col) in c.iter() {
        *h.entry(col).or_default() += 1;
    }
    h
}

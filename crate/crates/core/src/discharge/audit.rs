//! Verdicts on the nonnegativity claims for a concrete ledger.
//!
//! On drawings that are not minimal counterexamples the claims often fail;
//! each failure names a witness and, where possible, the configuration or
//! redrawing that would remove it.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use super::{r5_eligible, special_vertices, ChargeLedger, Element};
use crate::drawing::{AssociatedPlaneGraph, OnePlaneDrawing, PlaneVertex};
use crate::reduce::{find_all_configurations, improve_drawing_6face, ReducibleConfig, BIG_DEGREE, LIST_SIZE};

pub(crate) fn display<T: fmt::Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    FiveMinusFaceNonneg,
    SixFaceSpecials,
    SixPlusFaceNonneg,
    FivePlusFaceTransfer,
    TwoVertexNonneg,
    ThreeVertexNonneg,
    NoAdjacentSpecial4Faces,
    ThreeConsecutiveFaces,
    FourPlusVertexNonneg,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::FiveMinusFaceNonneg,
        Claim::SixFaceSpecials,
        Claim::SixPlusFaceNonneg,
        Claim::FivePlusFaceTransfer,
        Claim::TwoVertexNonneg,
        Claim::ThreeVertexNonneg,
        Claim::NoAdjacentSpecial4Faces,
        Claim::ThreeConsecutiveFaces,
        Claim::FourPlusVertexNonneg,
    ];

    pub fn statement(&self) -> &'static str {
        match self {
            Claim::FiveMinusFaceNonneg => "every 5- face ends nonnegative",
            Claim::SixFaceSpecials => "every 6-face has at most two special 2-vertices",
            Claim::SixPlusFaceNonneg => "every 6+ face ends nonnegative",
            Claim::FivePlusFaceTransfer => {
                "a 5+ face sends 2 (next to two 11+ vertices) or 1 (next to one) to a small vertex between crossings"
            }
            Claim::TwoVertexNonneg => "every 2-vertex ends nonnegative",
            Claim::ThreeVertexNonneg => "every 3-vertex ends nonnegative",
            Claim::NoAdjacentSpecial4Faces => "special 4-faces at a common 11+ vertex are not adjacent",
            Claim::ThreeConsecutiveFaces => "an 11+ vertex sends at most 2 to three consecutive faces",
            Claim::FourPlusVertexNonneg => "every 4+ vertex ends nonnegative",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Claim::FiveMinusFaceNonneg => "five_minus_face_nonneg",
            Claim::SixFaceSpecials => "six_face_specials",
            Claim::SixPlusFaceNonneg => "six_plus_face_nonneg",
            Claim::FivePlusFaceTransfer => "five_plus_face_transfer",
            Claim::TwoVertexNonneg => "two_vertex_nonneg",
            Claim::ThreeVertexNonneg => "three_vertex_nonneg",
            Claim::NoAdjacentSpecial4Faces => "no_adjacent_special4_faces",
            Claim::ThreeConsecutiveFaces => "three_consecutive_faces",
            Claim::FourPlusVertexNonneg => "four_plus_vertex_nonneg",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Attachment {
    Configuration {
        config: ReducibleConfig,
    },
    Redraw {
        crossings_before: usize,
        crossings_after: usize,
    },
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attachment::Configuration { config } => write!(f, "{config}"),
            Attachment::Redraw {
                crossings_before,
                crossings_after,
            } => write!(f, "redraw {crossings_before} -> {crossings_after} crossings"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "display")]
    pub element: Element,
    pub detail: String,
    pub attachment: Option<Attachment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimVerdict {
    pub claim: Claim,
    pub holds: bool,
    /// Number of elements or patterns the claim was checked on.
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

/// Amount `v` sends through each of its corners, in rotation order.
pub fn corner_alphas(p: &AssociatedPlaneGraph, ledger: &ChargeLedger, v: PlaneVertex) -> Vec<Rational64> {
    p.darts_around(v)
        .iter()
        .map(|&d| {
            ledger
                .transfers()
                .iter()
                .filter(|t| t.from == Element::Vertex(v) && t.dart == Some(d))
                .map(|t| t.amount)
                .sum()
        })
        .collect()
}

/// `omega_i = alpha_i + alpha_(i+1) + alpha_(i+2)`, indices cyclic.
pub fn consecutive_sums(alpha: &[Rational64]) -> Vec<Rational64> {
    let n = alpha.len();
    (0..n)
        .map(|i| alpha[i] + alpha[(i + 1) % n] + alpha[(i + 2) % n])
        .collect()
}

/// `sum(alpha)` computed as a third of `sum(omega)`.
pub fn alpha_sum_bound(alpha: &[Rational64]) -> Rational64 {
    consecutive_sums(alpha).iter().sum::<Rational64>() / Rational64::from_integer(3)
}

struct Context<'a> {
    d: &'a OnePlaneDrawing,
    p: &'a AssociatedPlaneGraph,
    configs: Option<Vec<ReducibleConfig>>,
    redraw: Option<Option<Attachment>>,
}

impl Context<'_> {
    fn related(&self, e: Element) -> BTreeSet<crate::graph::VertexId> {
        let vs: Vec<PlaneVertex> = match e {
            Element::Face(f) => self.p.face_vertices(f),
            Element::Vertex(v @ PlaneVertex::True(_)) => vec![v],
            Element::Vertex(v) => self.p.darts_around(v).iter().map(|&d| self.p.head(d)).collect(),
        };
        vs.iter().filter_map(PlaneVertex::as_true).collect()
    }

    fn configuration_near(&mut self, e: Element) -> Option<Attachment> {
        let related = self.related(e);
        let configs = self
            .configs
            .get_or_insert_with(|| find_all_configurations(self.d, LIST_SIZE));
        configs
            .iter()
            .find(|c| c.vertices().iter().any(|v| related.contains(v)))
            .map(|c| Attachment::Configuration { config: c.clone() })
    }

    fn redraw(&mut self) -> Option<Attachment> {
        let d = self.d;
        self.redraw
            .get_or_insert_with(|| {
                improve_drawing_6face(d).map(|better| Attachment::Redraw {
                    crossings_before: d.crossing_count(),
                    crossings_after: better.crossing_count(),
                })
            })
            .clone()
    }
}

fn zero() -> Rational64 {
    Rational64::from_integer(0)
}

/// Checks every claim on `ledger` (rules already applied) over the
/// planarization `p` of `d`.
pub fn audit_claims(d: &OnePlaneDrawing, p: &AssociatedPlaneGraph, ledger: &ChargeLedger) -> Vec<ClaimVerdict> {
    let mut ctx = Context {
        d,
        p,
        configs: None,
        redraw: None,
    };
    let finals = ledger.finals();
    let special = special_vertices(p);
    let mut out = Vec::new();

    let nonneg = |ctx: &mut Context, claim: Claim, pick: &dyn Fn(Element, usize) -> bool| {
        let mut checked = 0;
        let mut witnesses = Vec::new();
        for (&e, &c) in &finals {
            if !pick(e, ledger.degree(e)) {
                continue;
            }
            checked += 1;
            if c < zero() {
                witnesses.push(Witness {
                    element: e,
                    detail: format!("final charge {c}"),
                    attachment: ctx.configuration_near(e),
                });
            }
        }
        ClaimVerdict {
            claim,
            holds: witnesses.is_empty(),
            checked,
            witnesses,
        }
    };
    let is_face = |e: Element| matches!(e, Element::Face(_));
    let is_true = |e: Element| matches!(e, Element::Vertex(PlaneVertex::True(_)));

    out.push(nonneg(&mut ctx, Claim::FiveMinusFaceNonneg, &|e, deg| {
        is_face(e) && deg <= 5
    }));

    // six-faces with three special 2-vertices
    let specials2: BTreeSet<_> = special
        .iter()
        .copied()
        .filter(|&v| p.degree(PlaneVertex::True(v)) == 2)
        .collect();
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for (f, face) in p.faces() {
        if face.degree() != 6 {
            continue;
        }
        checked += 1;
        let count = face
            .walk()
            .iter()
            .filter(|&&dd| p.tail(dd).as_true().is_some_and(|v| specials2.contains(&v)))
            .count();
        if count > 2 {
            witnesses.push(Witness {
                element: Element::Face(f),
                detail: format!("{count} special 2-vertices"),
                attachment: ctx.redraw(),
            });
        }
    }
    out.push(ClaimVerdict {
        claim: Claim::SixFaceSpecials,
        holds: witnesses.is_empty(),
        checked,
        witnesses,
    });

    out.push(nonneg(&mut ctx, Claim::SixPlusFaceNonneg, &|e, deg| {
        is_face(e) && deg >= 6
    }));

    // transfers from 5+ faces to small vertices between two crossings
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for (f, face) in p.faces() {
        let w = face.walk();
        let n = w.len();
        if n < 5 {
            continue;
        }
        for k in 0..n {
            let at = |i: usize| p.tail(w[(k + i) % n]);
            let v = at(2);
            if !at(1).is_false() || !at(3).is_false() || !r5_eligible(p, v, &special) {
                continue;
            }
            let received: Rational64 = ledger
                .transfers()
                .iter()
                .filter(|t| t.from == Element::Face(f) && t.dart == Some(w[(k + 2) % n]))
                .map(|t| t.amount)
                .sum();
            for (u, other) in [(at(0), at(4)), (at(4), at(0))] {
                if !u.as_true().is_some() || p.degree(u) < BIG_DEGREE {
                    continue;
                }
                checked += 1;
                let big_other = other.as_true().is_some() && p.degree(other) >= BIG_DEGREE;
                let need = Rational64::from_integer(if big_other { 2 } else { 1 });
                if received < need {
                    witnesses.push(Witness {
                        element: Element::Face(f),
                        detail: format!("sends {received} to {v}, needs {need}"),
                        attachment: ctx.configuration_near(Element::Face(f)),
                    });
                }
            }
        }
    }
    out.push(ClaimVerdict {
        claim: Claim::FivePlusFaceTransfer,
        holds: witnesses.is_empty(),
        checked,
        witnesses,
    });

    out.push(nonneg(&mut ctx, Claim::TwoVertexNonneg, &|e, deg| {
        is_true(e) && deg == 2
    }));
    out.push(nonneg(&mut ctx, Claim::ThreeVertexNonneg, &|e, deg| {
        is_true(e) && deg == 3
    }));

    // adjacent special 4-faces sharing their big vertex
    let sf = p.special_4_faces(BIG_DEGREE);
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for (i, a) in sf.iter().enumerate() {
        for b in &sf[i + 1..] {
            if a.big != b.big || a.face == b.face {
                continue;
            }
            checked += 1;
            let adjacent = p.face(a.face).walk().iter().any(|&dd| p.face_of_dart(dd ^ 1) == b.face);
            if adjacent {
                witnesses.push(Witness {
                    element: Element::Face(a.face),
                    detail: format!("adjacent to {} at {}", b.face, a.big),
                    attachment: ctx.configuration_near(Element::Face(a.face)),
                });
            }
        }
    }
    out.push(ClaimVerdict {
        claim: Claim::NoAdjacentSpecial4Faces,
        holds: witnesses.is_empty(),
        checked,
        witnesses,
    });

    // three consecutive faces at big vertices
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for &v in p.vertices() {
        if v.is_false() || p.degree(v) < BIG_DEGREE {
            continue;
        }
        checked += 1;
        let omega = consecutive_sums(&corner_alphas(p, ledger, v));
        if let Some((i, w)) = omega
            .iter()
            .enumerate()
            .find(|(_, w)| **w > Rational64::from_integer(2))
        {
            witnesses.push(Witness {
                element: Element::Vertex(v),
                detail: format!("corners {i}..{} receive {w}", i + 2),
                attachment: ctx.configuration_near(Element::Vertex(v)),
            });
        }
    }
    out.push(ClaimVerdict {
        claim: Claim::ThreeConsecutiveFaces,
        holds: witnesses.is_empty(),
        checked,
        witnesses,
    });

    out.push(nonneg(&mut ctx, Claim::FourPlusVertexNonneg, &|e, deg| {
        matches!(e, Element::Vertex(_)) && deg >= 4
    }));
    out
}

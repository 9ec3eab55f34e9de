//! Charges on the planarization of a 1-plane drawing, the rules R1 to R5
//! and audits of the nonnegativity claims.
//!
//! Every vertex and face `x` starts with `d(x) - 4`. Incidence is counted
//! along face walks, so a vertex visited twice by a walk takes part twice.

mod audit;
mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::drawing::{AssociatedPlaneGraph, FaceId, PlaneVertex};
use crate::graph::VertexId;
use crate::reduce::BIG_DEGREE;

pub use audit::{
    alpha_sum_bound, audit_claims, consecutive_sums, corner_alphas, Attachment, Claim, ClaimVerdict, Witness,
};
pub use report::{discharge_report, DischargeReport, ReportRow};

/// Degree from which a vertex pays false 3-faces.
pub const FALSE_TRIANGLE_DEGREE: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Element {
    Vertex(PlaneVertex),
    Face(FaceId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "{v}"),
            Element::Face(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl Rule {
    pub const ALL: [Rule; 5] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Element,
    pub to: Element,
    pub amount: Rational64,
    /// Walk dart leaving the vertex end of the transfer, identifying the
    /// incidence it pays for.
    pub dart: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLedger {
    degree: BTreeMap<Element, usize>,
    initial: BTreeMap<Element, Rational64>,
    transfers: Vec<Transfer>,
    /// Faces whose R5 share came out negative.
    pub negative_shares: Vec<FaceId>,
}

impl ChargeLedger {
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.initial.keys().copied()
    }

    pub fn degree(&self, e: Element) -> usize {
        self.degree.get(&e).copied().unwrap_or(0)
    }

    pub fn initial(&self, e: Element) -> Rational64 {
        self.initial.get(&e).copied().unwrap_or_default()
    }

    pub fn transfers(&self) -> &[Transfer] {
        &self.transfers
    }

    /// Net inflow of `e` under `rule`.
    pub fn net(&self, e: Element, rule: Rule) -> Rational64 {
        self.transfers
            .iter()
            .filter(|t| t.rule == rule)
            .map(|t| {
                let mut x = Rational64::from_integer(0);
                if t.to == e {
                    x += t.amount;
                }
                if t.from == e {
                    x -= t.amount;
                }
                x
            })
            .sum()
    }

    pub fn finals(&self) -> BTreeMap<Element, Rational64> {
        let mut out = self.initial.clone();
        for t in &self.transfers {
            *out.get_mut(&t.from).expect("known source") -= t.amount;
            *out.get_mut(&t.to).expect("known target") += t.amount;
        }
        out
    }

    pub fn final_charge(&self, e: Element) -> Rational64 {
        self.finals().get(&e).copied().unwrap_or_default()
    }

    pub fn total_initial(&self) -> Rational64 {
        self.initial.values().sum()
    }

    pub fn total_final(&self) -> Rational64 {
        self.finals().values().sum()
    }

    fn push(&mut self, rule: Rule, from: Element, to: Element, amount: Rational64, dart: Option<usize>) {
        self.transfers.push(Transfer {
            rule,
            from,
            to,
            amount,
            dart,
        });
    }

    /// Current charge of `e` including all transfers so far.
    fn current(&self, e: Element) -> Rational64 {
        let mut c = self.initial(e);
        for t in &self.transfers {
            if t.to == e {
                c += t.amount;
            }
            if t.from == e {
                c -= t.amount;
            }
        }
        c
    }
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// `d - 4` on every vertex and face of `p`.
pub fn initial_charges(p: &AssociatedPlaneGraph) -> ChargeLedger {
    let mut degree = BTreeMap::new();
    for &v in p.vertices() {
        degree.insert(Element::Vertex(v), p.degree(v));
    }
    for (f, face) in p.faces() {
        degree.insert(Element::Face(f), face.degree());
    }
    let initial = degree
        .iter()
        .map(|(e, d)| (*e, Rational64::from_integer(*d as i64 - 4)))
        .collect();
    ChargeLedger {
        degree,
        initial,
        transfers: Vec::new(),
        negative_shares: Vec::new(),
    }
}

/// Initial and final totals per connected component of `p`, in
/// [`AssociatedPlaneGraph::component_euler`] order.
pub fn component_totals(p: &AssociatedPlaneGraph, ledger: &ChargeLedger) -> Vec<(Rational64, Rational64)> {
    let comp = p.component_of();
    let faces = p.face_components();
    let k = p.component_euler().len();
    let finals = ledger.finals();
    let mut out = vec![(Rational64::from_integer(0), Rational64::from_integer(0)); k];
    for (e, init) in &ledger.initial {
        let c = match e {
            Element::Vertex(v) => comp[v],
            Element::Face(f) => faces[f.0],
        };
        out[c].0 += *init;
        out[c].1 += finals[e];
    }
    out
}

/// True vertices of degree 2 or 3 that are the low vertex of a special
/// 4-face.
pub fn special_vertices(p: &AssociatedPlaneGraph) -> BTreeSet<VertexId> {
    p.special_4_faces(BIG_DEGREE).into_iter().map(|s| s.low).collect()
}

fn true_degree(p: &AssociatedPlaneGraph, v: PlaneVertex) -> Option<usize> {
    v.as_true().map(|_| p.degree(v))
}

fn rule_1_2(p: &AssociatedPlaneGraph, ledger: &mut ChargeLedger, rule: Rule) {
    for (f, face) in p.faces() {
        if face.degree() != 3 || p.is_false_face(f) != (rule == Rule::R2) {
            continue;
        }
        let (threshold, amount) = match rule {
            Rule::R1 => (BIG_DEGREE, r(1, 3)),
            _ => (FALSE_TRIANGLE_DEGREE, r(1, 2)),
        };
        for &d in face.walk() {
            let v = p.tail(d);
            if true_degree(p, v).is_some_and(|x| x >= threshold) {
                ledger.push(rule, Element::Vertex(v), Element::Face(f), amount, Some(d));
            }
        }
    }
}

fn rule_3(p: &AssociatedPlaneGraph, ledger: &mut ChargeLedger) {
    for s in p.special_4_faces(BIG_DEGREE) {
        let f = Element::Face(s.face);
        let one = Rational64::from_integer(1);
        ledger.push(
            Rule::R3,
            Element::Vertex(PlaneVertex::True(s.big)),
            f,
            one,
            Some(s.big_dart),
        );
        ledger.push(
            Rule::R3,
            f,
            Element::Vertex(PlaneVertex::True(s.low)),
            one,
            Some(s.low_dart),
        );
    }
}

fn rule_4(p: &AssociatedPlaneGraph, ledger: &mut ChargeLedger, special: &BTreeSet<VertexId>) {
    for (f, face) in p.faces() {
        if face.degree() < 5 {
            continue;
        }
        for &d in face.walk() {
            let v = p.tail(d);
            if let PlaneVertex::True(x) = v {
                if p.degree(v) == 2 && special.contains(&x) {
                    ledger.push(
                        Rule::R4,
                        Element::Face(f),
                        Element::Vertex(v),
                        Rational64::from_integer(1),
                        Some(d),
                    );
                }
            }
        }
    }
}

/// Whether `v` shares in R5: a non-special 2-vertex or any 3-vertex.
pub(crate) fn r5_eligible(p: &AssociatedPlaneGraph, v: PlaneVertex, special: &BTreeSet<VertexId>) -> bool {
    match v {
        PlaneVertex::True(x) => match p.degree(v) {
            2 => !special.contains(&x),
            3 => true,
            _ => false,
        },
        PlaneVertex::False(_) => false,
    }
}

fn rule_5(p: &AssociatedPlaneGraph, ledger: &mut ChargeLedger, special: &BTreeSet<VertexId>) {
    for (f, face) in p.faces() {
        if face.degree() < 5 {
            continue;
        }
        let takers: Vec<usize> = face
            .walk()
            .iter()
            .copied()
            .filter(|&d| r5_eligible(p, p.tail(d), special))
            .collect();
        if takers.is_empty() {
            continue;
        }
        let share = ledger.current(Element::Face(f)) / Rational64::from_integer(takers.len() as i64);
        if share < Rational64::from_integer(0) {
            ledger.negative_shares.push(f);
        }
        for d in takers {
            ledger.push(Rule::R5, Element::Face(f), Element::Vertex(p.tail(d)), share, Some(d));
        }
    }
}

/// R1 to R4 in the given order, then R5.
pub fn apply_rules_in_order(p: &AssociatedPlaneGraph, ledger: &ChargeLedger, order: [Rule; 4]) -> ChargeLedger {
    let mut out = ledger.clone();
    let special = special_vertices(p);
    for rule in order {
        match rule {
            Rule::R1 | Rule::R2 => rule_1_2(p, &mut out, rule),
            Rule::R3 => rule_3(p, &mut out),
            Rule::R4 => rule_4(p, &mut out, &special),
            Rule::R5 => panic!("R5 always runs last"),
        }
    }
    rule_5(p, &mut out, &special);
    out
}

pub fn apply_rules(p: &AssociatedPlaneGraph, ledger: &ChargeLedger) -> ChargeLedger {
    apply_rules_in_order(p, ledger, [Rule::R1, Rule::R2, Rule::R3, Rule::R4])
}

/// Elements with negative final charge, most negative first.
pub fn negative_elements(ledger: &ChargeLedger) -> Vec<(Element, Rational64)> {
    let mut out: Vec<(Element, Rational64)> = ledger
        .finals()
        .into_iter()
        .filter(|(_, c)| *c < Rational64::from_integer(0))
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    out
}

#[cfg(test)]
mod tests;

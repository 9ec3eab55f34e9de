//! Text and JSON rendering of a discharge run.

use std::fmt::Write as _;

use serde::Serialize;

use super::{
    apply_rules, audit_claims, component_totals, initial_charges, negative_elements, ChargeLedger, ClaimVerdict,
    Element, Rule,
};
use crate::drawing::OnePlaneDrawing;
use crate::error::DrawingError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub element: String,
    pub degree: usize,
    pub initial: String,
    /// Net inflow per rule, R1 to R5.
    pub rules: [String; 5],
    #[serde(rename = "final")]
    pub final_charge: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTotal {
    pub initial: String,
    #[serde(rename = "final")]
    pub final_charge: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeElement {
    pub element: String,
    pub charge: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DischargeReport {
    pub rows: Vec<ReportRow>,
    pub components: Vec<ComponentTotal>,
    pub total_initial: String,
    pub total_final: String,
    pub negative: Vec<NegativeElement>,
    pub negative_shares: Vec<String>,
    pub claims: Vec<ClaimVerdict>,
    #[serde(skip)]
    pub ledger: Option<ChargeLedger>,
}

fn rows(ledger: &ChargeLedger) -> Vec<ReportRow> {
    let finals = ledger.finals();
    // vertices first, then faces; each in id order
    let mut es: Vec<Element> = ledger.elements().collect();
    es.sort_by_key(|e| matches!(e, Element::Face(_)));
    es.into_iter()
        .map(|e| ReportRow {
            element: e.to_string(),
            degree: ledger.degree(e),
            initial: ledger.initial(e).to_string(),
            rules: Rule::ALL.map(|r| ledger.net(e, r).to_string()),
            final_charge: finals[&e].to_string(),
        })
        .collect()
}

/// Charges, rules, audits and witnesses for a valid drawing.
pub fn discharge_report(d: &OnePlaneDrawing) -> Result<DischargeReport, DrawingError> {
    if let Some(v) = d.validate().first() {
        return Err(DrawingError::Invalid(v.to_string()));
    }
    let p = d.associated_plane_graph()?;
    let ledger = apply_rules(&p, &initial_charges(&p));
    let claims = audit_claims(d, &p, &ledger);
    Ok(DischargeReport {
        rows: rows(&ledger),
        components: component_totals(&p, &ledger)
            .into_iter()
            .map(|(i, f)| ComponentTotal {
                initial: i.to_string(),
                final_charge: f.to_string(),
            })
            .collect(),
        total_initial: ledger.total_initial().to_string(),
        total_final: ledger.total_final().to_string(),
        negative: negative_elements(&ledger)
            .into_iter()
            .map(|(e, c)| NegativeElement {
                element: e.to_string(),
                charge: c.to_string(),
            })
            .collect(),
        negative_shares: ledger.negative_shares.iter().map(|f| f.to_string()).collect(),
        claims,
        ledger: Some(ledger),
    })
}

impl DischargeReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<12} {:>3} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7}",
            "element", "deg", "initial", "R1", "R2", "R3", "R4", "R5", "final"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<12} {:>3} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7}",
                r.element,
                r.degree,
                r.initial,
                r.rules[0],
                r.rules[1],
                r.rules[2],
                r.rules[3],
                r.rules[4],
                r.final_charge
            );
        }
        let _ = writeln!(s);
        for (i, c) in self.components.iter().enumerate() {
            let _ = writeln!(s, "component {i}: initial {} final {}", c.initial, c.final_charge);
        }
        let _ = writeln!(s, "total: initial {} final {}", self.total_initial, self.total_final);
        if !self.negative_shares.is_empty() {
            let _ = writeln!(s, "negative R5 shares on: {}", self.negative_shares.join(" "));
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "negative elements: {}", self.negative.len());
        for n in &self.negative {
            let _ = writeln!(s, "  {} {}", n.element, n.charge);
        }
        let _ = writeln!(s);
        for c in &self.claims {
            let _ = writeln!(
                s,
                "{} {} ({} checked): {}",
                if c.holds { "holds   " } else { "violated" },
                c.claim,
                c.checked,
                c.claim.statement()
            );
            for w in &c.witnesses {
                let _ = write!(s, "  {} {}", w.element, w.detail);
                if let Some(a) = &w.attachment {
                    let _ = write!(s, " => {a}");
                }
                let _ = writeln!(s);
            }
        }
        s
    }
}

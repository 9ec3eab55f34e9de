//! Polynomial certificate for list colorability.
//!
//! A coloring is valid exactly when a product of factors is nonzero at the
//! color vector: `x_u - x_v` per edge, and per vertex of degree at least two
//! a form vanishing exactly when its neighborhood is monochromatic
//! (`x_a - x_b` for two neighbors, a sum of squared consecutive differences
//! otherwise). If some monomial with every exponent below `ell` has nonzero
//! coefficient, every assignment of `ell`-lists is colorable. A zero result
//! proves nothing.

use std::collections::HashMap;

use super::search::Dense;

type Monomial = u64;

fn exp(m: Monomial, i: usize) -> u64 {
    (m >> (8 * i)) & 0xff
}

fn var(i: usize) -> Monomial {
    1 << (8 * i)
}

/// Terms of a homogeneous factor.
fn factors(g: &Dense, dynamic: bool) -> Vec<Vec<(Monomial, i128)>> {
    let n = g.ids.len();
    let mut out = Vec::new();
    for v in 0..n {
        for &w in &g.adj[v] {
            if v < w {
                out.push(vec![(var(v), 1), (var(w), -1)]);
            }
        }
    }
    if dynamic {
        for v in 0..n {
            let ns = &g.adj[v];
            match ns.len() {
                0 | 1 => {}
                2 => out.push(vec![(var(ns[0]), 1), (var(ns[1]), -1)]),
                _ => {
                    let mut terms: HashMap<Monomial, i128> = HashMap::new();
                    for pair in ns.windows(2) {
                        let (a, b) = (pair[0], pair[1]);
                        *terms.entry(2 * var(a)).or_default() += 1;
                        *terms.entry(2 * var(b)).or_default() += 1;
                        *terms.entry(var(a) + var(b)).or_default() -= 2;
                    }
                    out.push(terms.into_iter().filter(|t| t.1 != 0).collect());
                }
            }
        }
    }
    out
}

/// `Some(monomial)` with nonzero coefficient and all exponents below `ell`,
/// or `None` if no such monomial exists.
pub(crate) fn certificate(g: &Dense, ell: usize, dynamic: bool) -> Option<Vec<u32>> {
    let n = g.ids.len();
    if n > 8 {
        return None;
    }
    let cap = ell as u64;
    let mut poly: HashMap<Monomial, i128> = HashMap::from([(0, 1)]);
    for f in factors(g, dynamic) {
        let mut next: HashMap<Monomial, i128> = HashMap::with_capacity(poly.len() * 2);
        for (&m, &c) in &poly {
            for &(t, d) in &f {
                let prod = m + t;
                if (0..n).all(|i| exp(prod, i) < cap) {
                    *next.entry(prod).or_default() += c * d;
                }
            }
        }
        next.retain(|_, c| *c != 0);
        if next.is_empty() {
            return None;
        }
        poly = next;
    }
    let best = poly.keys().min()?;
    Some((0..n).map(|i| exp(*best, i) as u32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn even_cycle_has_a_certificate_for_two_lists() {
        let g = Dense::new(&families::cycle(6));
        assert!(certificate(&g, 2, false).is_some());
    }

    #[test]
    fn triangle_needs_three() {
        let g = Dense::new(&families::complete(3));
        assert!(certificate(&g, 2, false).is_none());
        assert!(certificate(&g, 3, false).is_some());
    }
}

//! Collision mining: non-isomorphic graphs sharing a harmonic polynomial.
//! Equal polynomials force equal coefficient profiles, so every profile-based
//! index must agree across such a pair; the miner recomputes the battery from
//! each graph's own edges and refuses to return a pair that disagrees.
//!
//! The mining universe is graphs without isolated vertices (padding a graph
//! with isolated vertices never changes its polynomial, so those collisions
//! are noise), deduplicated up to isomorphism by canonical form.

use super::enumerate::{check_order, graph_from_mask, vertex_pairs, VerifierError};
use crate::graph::{canonical_form, is_isomorphic, Graph};
use crate::indices::{chi, pi1_star, t_mu, u_mu, ChiExponent, ChiValue};
use crate::io::write_graph6;
use crate::polynomial::{approx_eq, rational_string, IntPolynomial};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

/// Relative tolerance for the non-integer exponents in the agreement battery.
pub const APPROX_TOLERANCE: f64 = 1e-12;

/// Exponents every mined pair is checked against: exact rational equality
/// for the integers, `APPROX_TOLERANCE` for the half-integer powers.
pub const BATTERY_ALPHAS: [ChiExponent; 8] = [
    ChiExponent::Integer(-2),
    ChiExponent::Integer(-1),
    ChiExponent::Real(-0.5),
    ChiExponent::Integer(0),
    ChiExponent::Real(0.5),
    ChiExponent::Integer(1),
    ChiExponent::Integer(2),
    ChiExponent::Integer(3),
];

/// Two non-isomorphic graphs with the same harmonic polynomial, plus the
/// shared index values the agreement battery verified.
#[derive(Clone, Debug)]
pub struct CollisionPair {
    pub graph6_a: String,
    pub graph6_b: String,
    pub connected_a: bool,
    pub connected_b: bool,
    pub polynomial: IntPolynomial,
    pub pi1_star: BigInt,
    pub chi_values: Vec<(ChiExponent, ChiValue)>,
}

#[derive(Clone, Debug)]
pub struct CollisionReport {
    pub n_max: usize,
    /// Isomorphism classes inspected (graphs without isolated vertices).
    pub class_count: usize,
    pub pairs: Vec<CollisionPair>,
    pub elapsed: Duration,
}

impl CollisionReport {
    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .pairs
            .iter()
            .map(|p| {
                let chi: Vec<Value> = p
                    .chi_values
                    .iter()
                    .map(|(alpha, value)| match value {
                        ChiValue::Exact(r) => json!({
                            "alpha": alpha.to_string(),
                            "value": rational_string(r),
                            "exact": true,
                        }),
                        ChiValue::Approx(x) => json!({
                            "alpha": alpha.to_string(),
                            "value": x,
                            "approx": true,
                        }),
                    })
                    .collect();
                json!({
                    "a": p.graph6_a,
                    "b": p.graph6_b,
                    "connected": [p.connected_a, p.connected_b],
                    "polynomial": p.polynomial.to_json(),
                    "pi1_star": p.pi1_star.to_string(),
                    "chi": chi,
                })
            })
            .collect();
        json!({
            "n_max": self.n_max,
            "classes": self.class_count,
            "pairs": pairs,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} isomorphism classes without isolated vertices up to n = {}\n",
            self.class_count, self.n_max
        );
        for p in &self.pairs {
            out.push_str(&format!(
                "{} ~ {}  H = {}  Pi1* = {}\n",
                p.graph6_a, p.graph6_b, p.polynomial, p.pi1_star
            ));
        }
        out.push_str(&format!(
            "{} collision pair(s) in {:.2?}; every pair passed the index-agreement battery\n",
            self.pairs.len(),
            self.elapsed
        ));
        out
    }
}

/// Checks that two graphs with equal polynomials agree on the whole battery,
/// recomputing each side from its own graph.
fn agreement_battery(a: &Graph, b: &Graph) -> Result<(), String> {
    for alpha in BATTERY_ALPHAS {
        match (chi(a, alpha), chi(b, alpha)) {
            (ChiValue::Exact(x), ChiValue::Exact(y)) => {
                if x != y {
                    return Err(format!(
                        "chi({alpha}) disagrees: {} vs {}",
                        rational_string(&x),
                        rational_string(&y)
                    ));
                }
            }
            (ChiValue::Approx(x), ChiValue::Approx(y)) => {
                if !approx_eq(x, y, APPROX_TOLERANCE) {
                    return Err(format!("chi({alpha}) disagrees: {x} vs {y}"));
                }
            }
            _ => unreachable!("the exponent kind fixes the value kind"),
        }
    }
    if pi1_star(a) != pi1_star(b) {
        return Err("Pi1* disagrees".to_string());
    }
    let mu = |t: usize| 1.0 / (t as f64 + 1.0);
    let (ta, tb) = (t_mu(a, mu).unwrap(), t_mu(b, mu).unwrap());
    if !approx_eq(ta, tb, APPROX_TOLERANCE) {
        return Err(format!("T_mu disagrees: {ta} vs {tb}"));
    }
    let (ua, ub) = (u_mu(a, mu).unwrap(), u_mu(b, mu).unwrap());
    if !approx_eq(ua, ub, APPROX_TOLERANCE) {
        return Err(format!("U_mu disagrees: {ua} vs {ub}"));
    }
    Ok(())
}

/// Mines all isomorphism classes of graphs with `1 <= n <= n_max` and no
/// isolated vertices, groups them by harmonic polynomial, and returns every
/// cross pair after verifying non-isomorphism and the agreement battery.
pub fn mine_collisions(n_max: usize, allow_large: bool) -> Result<CollisionReport, VerifierError> {
    let started = Instant::now();
    let mut reps: Vec<Graph> = Vec::new();
    for n in 1..=n_max {
        check_order(n, allow_large)?;
        let pairs = vertex_pairs(n);
        let mut seen: HashSet<u64> = HashSet::new();
        for mask in 0..(1u64 << pairs.len()) {
            let g = graph_from_mask(n, &pairs, mask);
            if g.n() >= 1 && g.has_isolated_vertex() {
                continue;
            }
            let key = canonical_form(&g).expect("order is within limits");
            if seen.insert(key) {
                reps.push(g);
            }
        }
    }

    let mut groups: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    let polynomials: Vec<IntPolynomial> = reps
        .iter()
        .map(crate::indices::harmonic_polynomial)
        .collect();
    for (i, poly) in polynomials.iter().enumerate() {
        groups.entry(poly.coeffs().to_vec()).or_default().push(i);
    }

    let mut pairs = Vec::new();
    for members in groups.values() {
        for (a_pos, &i) in members.iter().enumerate() {
            for &j in &members[a_pos + 1..] {
                let (a, b) = (&reps[i], &reps[j]);
                if a.n() == b.n() {
                    let isomorphic = is_isomorphic(a, b)
                        .expect("mining orders are within the isomorphism limit");
                    if isomorphic {
                        return Err(VerifierError::InvariantViolation(
                            "canonical deduplication let two isomorphic graphs through".into(),
                        ));
                    }
                }
                agreement_battery(a, b).map_err(|e| {
                    VerifierError::InvariantViolation(format!(
                        "graphs {} and {} share a polynomial but {e}",
                        write_graph6(a),
                        write_graph6(b)
                    ))
                })?;
                pairs.push(CollisionPair {
                    graph6_a: write_graph6(a),
                    graph6_b: write_graph6(b),
                    connected_a: a.is_connected(),
                    connected_b: b.is_connected(),
                    polynomial: polynomials[i].clone(),
                    pi1_star: pi1_star(a),
                    chi_values: BATTERY_ALPHAS.iter().map(|&al| (al, chi(a, al))).collect(),
                });
            }
        }
    }

    Ok(CollisionReport {
        n_max,
        class_count: reps.len(),
        pairs,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_graph6;

    #[test]
    fn star_and_triangle_collide_at_n4() {
        let report = mine_collisions(4, false).unwrap();
        assert!(!report.pairs.is_empty());
        let star_triangle = report.pairs.iter().find(|p| {
            let a = parse_graph6(&p.graph6_a).unwrap();
            let b = parse_graph6(&p.graph6_b).unwrap();
            let ns = (a.n().min(b.n()), a.n().max(b.n()));
            ns == (3, 4) && p.polynomial == IntPolynomial::from_terms(&[(3, 3)])
        });
        assert!(
            star_triangle.is_some(),
            "K_{{1,3}} vs C_3 must be mined: {:?}",
            report.pairs
        );
    }

    #[test]
    fn pairs_span_connected_and_disconnected_graphs() {
        let report = mine_collisions(6, false).unwrap();
        assert!(report.pairs.len() >= 2);
        assert!(report
            .pairs
            .iter()
            .any(|p| p.connected_a && p.connected_b));
        assert!(report
            .pairs
            .iter()
            .any(|p| !p.connected_a || !p.connected_b));
        // C_6 vs C_3 + C_3
        assert!(report
            .pairs
            .iter()
            .any(|p| p.polynomial == IntPolynomial::from_terms(&[(3, 6)])));
    }

    #[test]
    fn battery_rejects_unequal_profiles() {
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(agreement_battery(&p2, &p3).is_err());
    }
}

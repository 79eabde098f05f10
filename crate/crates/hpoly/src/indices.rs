//! The harmonic polynomial, its coefficient profile, and every degree-based
//! topological index derived from them.
//!
//! Index computations route through [`CoefficientProfile`] (bucket counts of
//! edge degree sums) and are recomputed directly from the edge set as a
//! cross-check. The two routes disagreeing is a fatal invariant violation,
//! not a warning, so the bucket arithmetic can be trusted everywhere else.

use crate::graph::Graph;
use crate::polynomial::{approx_eq, rational_string, IntPolynomial, PolyStructure, Rational};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum IndexError {
    #[error("mu({input}) = {value} is not positive; T_mu and U_mu require mu to map into (0, inf)")]
    NonPositiveMu { input: usize, value: f64 },
}

/// Bucket counts `c_j = #{uv in E : d_u + d_v - 1 = j}`. The multiset of edge
/// degree sums, and with it every index below, is fully determined by this
/// profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientProfile {
    counts: BTreeMap<usize, u64>,
    m: u64,
}

impl CoefficientProfile {
    pub fn new(g: &Graph) -> Self {
        let mut counts = BTreeMap::new();
        for (u, v) in g.edges() {
            *counts.entry(g.degree(u) + g.degree(v) - 1).or_insert(0) += 1;
        }
        let profile = Self {
            m: counts.values().sum(),
            counts,
        };
        assert_eq!(
            profile.m as usize,
            g.m(),
            "internal invariant violated: profile mass must equal the edge count"
        );
        profile
    }

    /// Iterates `(j, c_j)` pairs in increasing `j`.
    pub fn buckets(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&j, &c)| (j, c))
    }

    pub fn count(&self, j: usize) -> u64 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    pub fn edge_count(&self) -> u64 {
        self.m
    }

    /// Reconstructs `sum_j c_j x^j`.
    pub fn to_polynomial(&self) -> IntPolynomial {
        let top = self.counts.keys().next_back().map_or(0, |&j| j + 1);
        let mut coeffs = vec![BigInt::zero(); top];
        for (&j, &c) in &self.counts {
            coeffs[j] = BigInt::from(c);
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

pub fn coefficient_profile(g: &Graph) -> CoefficientProfile {
    CoefficientProfile::new(g)
}

/// `H(G,x) = sum over edges uv of x^(d_u + d_v - 1)`, exact. The zero
/// polynomial for edgeless graphs.
pub fn harmonic_polynomial(g: &Graph) -> IntPolynomial {
    let via_profile = CoefficientProfile::new(g).to_polynomial();
    // cross-check: accumulate the edge monomials one by one
    let mut direct = IntPolynomial::zero();
    for (u, v) in g.edges() {
        direct += &IntPolynomial::monomial(BigInt::one(), g.degree(u) + g.degree(v) - 1);
    }
    assert_eq!(
        via_profile, direct,
        "internal invariant violated: profile and edge-sum polynomials differ"
    );
    via_profile
}

/// `H(G) = sum over edges of 2/(d_u + d_v)`, computed both as the direct edge
/// sum and as `sum_j 2 c_j / (j + 1)`; the two must agree exactly.
pub fn harmonic_index(g: &Graph) -> Rational {
    let via_profile: Rational = CoefficientProfile::new(g)
        .buckets()
        .map(|(j, c)| Rational::new(BigInt::from(2 * c), BigInt::from(j as u64 + 1)))
        .sum();
    let via_edges: Rational = g
        .edges()
        .map(|(u, v)| Rational::new(BigInt::from(2), BigInt::from(g.degree(u) + g.degree(v))))
        .sum();
    assert_eq!(
        via_profile, via_edges,
        "internal invariant violated: harmonic index routes disagree"
    );
    via_profile
}

/// First Zagreb, second Zagreb, and forgotten indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZagrebIndices {
    pub m1: BigInt,
    pub m2: BigInt,
    pub forgotten: BigInt,
}

/// `M1 = sum (d_u + d_v) = sum d_u^2`, `M2 = sum d_u d_v`,
/// `F = sum (d_u^2 + d_v^2) = sum d_u^3`; M1 and F are computed both as edge
/// sums and as vertex power sums, which must agree.
pub fn zagreb_and_forgotten(g: &Graph) -> ZagrebIndices {
    let mut m1 = BigInt::zero();
    let mut m2 = BigInt::zero();
    let mut forgotten = BigInt::zero();
    for (u, v) in g.edges() {
        let (du, dv) = (BigInt::from(g.degree(u)), BigInt::from(g.degree(v)));
        m1 += &du + &dv;
        m2 += &du * &dv;
        forgotten += &du * &du + &dv * &dv;
    }
    let m1_vertex: BigInt = (0..g.n()).map(|v| BigInt::from(g.degree(v)).pow(2)).sum();
    let f_vertex: BigInt = (0..g.n()).map(|v| BigInt::from(g.degree(v)).pow(3)).sum();
    assert_eq!(m1, m1_vertex, "internal invariant violated: M1 routes disagree");
    assert_eq!(forgotten, f_vertex, "internal invariant violated: F routes disagree");
    ZagrebIndices { m1, m2, forgotten }
}

/// Exponent for the general sum-connectivity index. Integer exponents stay
/// in exact arithmetic; anything else takes the f64 route.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChiExponent {
    Integer(i64),
    Real(f64),
}

impl ChiExponent {
    /// Accepts `3`, `-1`, `0.5`, and fraction syntax like `-1/2`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Ok(i) = s.parse::<i64>() {
            return Ok(ChiExponent::Integer(i));
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: f64 = p.trim().parse().map_err(|_| format!("bad exponent: {s}"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("bad exponent: {s}"))?;
            if q == 0.0 {
                return Err(format!("bad exponent: {s}"));
            }
            return Ok(ChiExponent::Real(p / q));
        }
        s.parse::<f64>()
            .map(ChiExponent::Real)
            .map_err(|_| format!("bad exponent: {s}"))
    }
}

impl fmt::Display for ChiExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiExponent::Integer(i) => write!(f, "{i}"),
            ChiExponent::Real(x) => write!(f, "{x}"),
        }
    }
}

/// Value of `chi_alpha`: exact for integer exponents, f64 (documented
/// relative error <= 1e-12 at desk scale) otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum ChiValue {
    Exact(Rational),
    Approx(f64),
}

impl ChiValue {
    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            ChiValue::Exact(r) => Some(r),
            ChiValue::Approx(_) => None,
        }
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            ChiValue::Exact(r) => crate::polynomial::rational_to_f64(r),
            ChiValue::Approx(x) => *x,
        }
    }
}

/// `chi_alpha(G) = sum over edges of (d_u + d_v)^alpha`.
pub fn chi(g: &Graph, alpha: ChiExponent) -> ChiValue {
    let profile = CoefficientProfile::new(g);
    match alpha {
        ChiExponent::Integer(a) => {
            let via_profile = chi_exact_from_profile(&profile, a);
            let via_edges: Rational = g
                .edges()
                .map(|(u, v)| int_power(g.degree(u) + g.degree(v), a))
                .sum();
            assert_eq!(
                via_profile, via_edges,
                "internal invariant violated: chi routes disagree"
            );
            ChiValue::Exact(via_profile)
        }
        ChiExponent::Real(a) => {
            let via_profile: f64 = profile
                .buckets()
                .map(|(j, c)| c as f64 * ((j + 1) as f64).powf(a))
                .sum();
            let via_edges: f64 = g
                .edges()
                .map(|(u, v)| ((g.degree(u) + g.degree(v)) as f64).powf(a))
                .sum();
            assert!(
                via_profile == via_edges || approx_eq(via_profile, via_edges, 1e-9),
                "internal invariant violated: chi routes disagree ({via_profile} vs {via_edges})"
            );
            ChiValue::Approx(via_profile)
        }
    }
}

fn chi_exact_from_profile(profile: &CoefficientProfile, alpha: i64) -> Rational {
    profile
        .buckets()
        .map(|(j, c)| int_power(j + 1, alpha) * Rational::from(BigInt::from(c)))
        .sum()
}

fn int_power(base: usize, alpha: i64) -> Rational {
    let b = BigInt::from(base);
    if alpha >= 0 {
        Rational::from(b.pow(alpha as u32))
    } else {
        Rational::new(BigInt::one(), b.pow(alpha.unsigned_abs() as u32))
    }
}

/// Pointwise evaluation of the holomorphic map `z -> sum (d_u + d_v)^z`,
/// in double precision via `exp(z ln(j+1))`.
pub fn chi_complex(g: &Graph, z: Complex64) -> Complex64 {
    CoefficientProfile::new(g)
        .buckets()
        .map(|(j, c)| (z * ((j + 1) as f64).ln()).exp() * c as f64)
        .sum()
}

/// `T_mu(G) = sum mu(d_u + d_v)`, evaluated over profile buckets.
pub fn t_mu(g: &Graph, mu: impl Fn(usize) -> f64) -> Result<f64, IndexError> {
    let mut total = 0.0;
    for (j, c) in CoefficientProfile::new(g).buckets() {
        let value = checked_mu(&mu, j + 1)?;
        total += c as f64 * value;
    }
    Ok(total)
}

/// `U_mu(G) = prod mu(d_u + d_v)`, evaluated over profile buckets.
pub fn u_mu(g: &Graph, mu: impl Fn(usize) -> f64) -> Result<f64, IndexError> {
    let mut total = 1.0;
    for (j, c) in CoefficientProfile::new(g).buckets() {
        let value = checked_mu(&mu, j + 1)?;
        total *= value.powi(c.min(i32::MAX as u64) as i32);
    }
    Ok(total)
}

fn checked_mu(mu: &impl Fn(usize) -> f64, input: usize) -> Result<f64, IndexError> {
    let value = mu(input);
    if !(value > 0.0) {
        return Err(IndexError::NonPositiveMu { input, value });
    }
    Ok(value)
}

/// Modified first multiplicative Zagreb index `prod (d_u + d_v)`, exact.
/// The profile route uses binary powers; the edge route multiplies a product
/// tree, so large graphs stay tractable. Empty products are 1.
pub fn pi1_star(g: &Graph) -> BigInt {
    let via_profile = CoefficientProfile::new(g)
        .buckets()
        .fold(BigInt::one(), |acc, (j, c)| {
            acc * BigInt::from(j as u64 + 1).pow(u32::try_from(c).expect("bucket count fits u32"))
        });
    let mut leaves: Vec<BigInt> = g
        .edges()
        .map(|(u, v)| BigInt::from(g.degree(u) + g.degree(v)))
        .collect();
    while leaves.len() > 1 {
        leaves = leaves
            .chunks(2)
            .map(|pair| pair.iter().product())
            .collect();
    }
    let via_edges = leaves.pop().unwrap_or_else(BigInt::one);
    assert_eq!(
        via_profile, via_edges,
        "internal invariant violated: Pi1* routes disagree"
    );
    via_profile
}

/// Both sides of every identity relating derivatives of `H(G,x)` at `x = 1`
/// to degree sums of `G`. Left sides come from formal differentiation of the
/// polynomial; right sides are recomputed from degrees alone.
#[derive(Clone, Debug)]
pub struct DerivativeIdentities {
    /// `(k, H^(k)(G,1), chi_k + sum_j a_{k,j} chi_j)` for `k = 0..=k_max`;
    /// the `k = 0` entry pairs `H(G,1)` with the edge count.
    pub derivative_pairs: Vec<(usize, BigInt, BigInt)>,
    /// `H'(G,1) + H(G,1)` vs `M1(G)`.
    pub first_zagreb: (BigInt, BigInt),
    /// `H''(G,1) - 2H(G,1)` vs `F(G) + 2 M2(G) - 3 M1(G)`.
    pub forgotten_form: (BigInt, BigInt),
    /// `H''(G,1) + 2H(G,1)` vs `M1(L(G)) + M1(G)`.
    pub line_graph_form: (BigInt, BigInt),
    /// `(2H(G,1)/max_degree, n, 2H(G,1)/min_degree)`; `None` when the graph
    /// has no non-isolated vertex (the degree bounds are undefined there).
    pub vertex_count_bounds: Option<(Rational, BigInt, Rational)>,
}

impl DerivativeIdentities {
    /// True when every equality pair matches and the vertex count sits inside
    /// its bounds (vacuously for the undefined case).
    pub fn all_hold(&self) -> bool {
        self.derivative_pairs.iter().all(|(_, lhs, rhs)| lhs == rhs)
            && self.first_zagreb.0 == self.first_zagreb.1
            && self.forgotten_form.0 == self.forgotten_form.1
            && self.line_graph_form.0 == self.line_graph_form.1
            && self.vertex_count_bounds.as_ref().is_none_or(|(lo, n, hi)| {
                let n = Rational::from(n.clone());
                *lo <= n && n <= *hi
            })
    }
}

/// Evaluates the identity battery up to the `k_max`-th derivative
/// (`k_max >= 2` so the second-derivative forms are always present).
pub fn derivative_identities(g: &Graph, k_max: usize) -> DerivativeIdentities {
    assert!(k_max >= 2, "derivative_identities requires k_max >= 2");
    let h = harmonic_polynomial(g);
    let one = BigInt::one();
    let h1 = h.evaluate_int(&one);
    let zagreb = zagreb_and_forgotten(g);
    let chis: Vec<BigInt> = (0..=k_max)
        .map(|k| {
            g.edges()
                .map(|(u, v)| BigInt::from(g.degree(u) + g.degree(v)).pow(k as u32))
                .sum()
        })
        .collect();

    let mut derivative_pairs = vec![(0, h1.clone(), chis[0].clone())];
    for k in 1..=k_max {
        let lhs = h.derivative_k(k).evaluate_int(&one);
        let q = crate::polynomial::vieta_q(k);
        let mut rhs = chis[k].clone();
        for j in 0..k {
            rhs += q.coeff(j) * &chis[j];
        }
        derivative_pairs.push((k, lhs, rhs));
    }

    let hp1 = h.derivative_k(1).evaluate_int(&one);
    let hpp1 = h.derivative_k(2).evaluate_int(&one);
    let line_m1 = zagreb_and_forgotten(&g.line_graph()).m1;

    let summary = g.degree_summary();
    let vertex_count_bounds = match (summary.max_degree, summary.min_degree) {
        (Some(max), Some(min)) => Some((
            Rational::new(BigInt::from(2) * &h1, BigInt::from(max)),
            BigInt::from(g.n()),
            Rational::new(BigInt::from(2) * &h1, BigInt::from(min)),
        )),
        _ => None,
    };

    DerivativeIdentities {
        first_zagreb: (&hp1 + &h1, zagreb.m1.clone()),
        forgotten_form: (
            &hpp1 - BigInt::from(2) * &h1,
            &zagreb.forgotten + BigInt::from(2) * &zagreb.m2 - BigInt::from(3) * &zagreb.m1,
        ),
        line_graph_form: (&hpp1 + BigInt::from(2) * &h1, line_m1 + &zagreb.m1),
        vertex_count_bounds,
        derivative_pairs,
    }
}

/// Everything the `compute` surface reports for one graph.
#[derive(Clone, Debug)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: Option<usize>,
    pub min_degree: Option<usize>,
    pub polynomial: IntPolynomial,
    pub structure: PolyStructure,
    pub harmonic_index: Rational,
    pub m1: BigInt,
    pub m2: BigInt,
    pub forgotten: BigInt,
    pub pi1_star: BigInt,
    pub chi_values: Vec<(ChiExponent, ChiValue)>,
}

pub fn index_report(g: &Graph, alphas: &[ChiExponent]) -> IndexReport {
    let summary = g.degree_summary();
    let polynomial = harmonic_polynomial(g);
    let structure = polynomial.structure();
    let zagreb = zagreb_and_forgotten(g);
    let harmonic = harmonic_index(g);
    // chi_1 = M1 and 2 chi_{-1} = H(G), by definition; keep them honest
    if let ChiValue::Exact(chi1) = chi(g, ChiExponent::Integer(1)) {
        assert_eq!(
            chi1,
            Rational::from(zagreb.m1.clone()),
            "internal invariant violated: chi_1 != M1"
        );
    }
    if let ChiValue::Exact(chi_neg1) = chi(g, ChiExponent::Integer(-1)) {
        assert_eq!(
            chi_neg1 * Rational::from(BigInt::from(2)),
            harmonic,
            "internal invariant violated: 2 chi_{{-1}} != H(G)"
        );
    }
    let chi_values = alphas.iter().map(|&a| (a, chi(g, a))).collect();
    IndexReport {
        n: g.n(),
        m: g.m(),
        max_degree: summary.max_degree,
        min_degree: summary.min_degree,
        structure,
        harmonic_index: harmonic,
        pi1_star: pi1_star(g),
        m1: zagreb.m1,
        m2: zagreb.m2,
        forgotten: zagreb.forgotten,
        polynomial,
        chi_values,
    }
}

impl IndexReport {
    /// JSON rendering. Exact values are decimal or `p/q` strings; the only
    /// raw JSON numbers are f64 approximations, tagged `"approx": true`.
    pub fn to_json(&self) -> Value {
        let chi: Vec<Value> = self
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
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "harmonic_polynomial": self.polynomial.to_json(),
            "structure": {
                "degree": self.structure.degree,
                "min_degree": self.structure.min_degree,
                "nonzero_count": self.structure.nonzero_count,
                "leading": self.structure.leading.as_ref().map(|c| c.to_string()),
                "trailing": self.structure.trailing.as_ref().map(|c| c.to_string()),
            },
            "harmonic_index": rational_string(&self.harmonic_index),
            "m1": self.m1.to_string(),
            "m2": self.m2.to_string(),
            "forgotten": self.forgotten.to_string(),
            "pi1_star": self.pi1_star.to_string(),
            "chi": chi,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map_or("undefined".to_string(), |x| x.to_string());
        out.push_str(&format!(
            "n = {}, m = {}, max degree = {}, min degree = {}\n",
            self.n,
            self.m,
            opt(self.max_degree),
            opt(self.min_degree)
        ));
        out.push_str(&format!("H(G,x) = {}\n", self.polynomial));
        out.push_str(&format!(
            "degree = {}, min exponent = {}, nonzero coefficients = {}\n",
            opt(self.structure.degree),
            opt(self.structure.min_degree),
            self.structure.nonzero_count
        ));
        out.push_str(&format!("H(G) = {}\n", rational_string(&self.harmonic_index)));
        out.push_str(&format!(
            "M1 = {}, M2 = {}, F = {}, Pi1* = {}\n",
            self.m1, self.m2, self.forgotten, self.pi1_star
        ));
        for (alpha, value) in &self.chi_values {
            match value {
                ChiValue::Exact(r) => {
                    out.push_str(&format!("chi({alpha}) = {}\n", rational_string(r)))
                }
                ChiValue::Approx(x) => out.push_str(&format!("chi({alpha}) ~ {x:.12e}\n")),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::polynomial::rational;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn hypercube(dim: usize) -> Graph {
        let n = 1usize << dim;
        let mut edges = Vec::new();
        for v in 0..n {
            for b in 0..dim {
                let w = v ^ (1 << b);
                if w > v {
                    edges.push((v, w));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        for i in 1..n {
            edges.push((i, if i == n - 1 { 1 } else { i + 1 }));
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn harmonic_polynomial_examples() {
        assert_eq!(harmonic_polynomial(&complete(4)), IntPolynomial::from_terms(&[(5, 6)]));
        assert_eq!(
            harmonic_polynomial(&path(5)),
            IntPolynomial::from_terms(&[(2, 2), (3, 2)])
        );
        assert_eq!(harmonic_polynomial(&hypercube(3)), IntPolynomial::from_terms(&[(5, 12)]));
        assert!(harmonic_polynomial(&Graph::new(3, &[]).unwrap()).is_zero());
    }

    #[test]
    fn profile_examples() {
        let p = coefficient_profile(&wheel(5));
        assert_eq!(p.buckets().collect::<Vec<_>>(), vec![(5, 4), (6, 4)]);
        let p = coefficient_profile(&cycle(7));
        assert_eq!(p.buckets().collect::<Vec<_>>(), vec![(3, 7)]);
        let p = coefficient_profile(&path(2));
        assert_eq!(p.buckets().collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(p.to_polynomial(), harmonic_polynomial(&path(2)));
    }

    #[test]
    fn harmonic_index_examples() {
        assert_eq!(harmonic_index(&path(4)), rational(11, 6));
        assert_eq!(harmonic_index(&cycle(6)), rational(3, 1));
        assert_eq!(harmonic_index(&star(3)), rational(3, 2));
    }

    #[test]
    fn zagreb_examples() {
        let z = zagreb_and_forgotten(&cycle(4));
        assert_eq!(
            (z.m1, z.m2, z.forgotten),
            (BigInt::from(16), BigInt::from(16), BigInt::from(32))
        );
        let z = zagreb_and_forgotten(&star(3));
        assert_eq!(
            (z.m1, z.m2, z.forgotten),
            (BigInt::from(12), BigInt::from(9), BigInt::from(30))
        );
        let z = zagreb_and_forgotten(&path(2));
        assert_eq!(
            (z.m1, z.m2, z.forgotten),
            (BigInt::from(2), BigInt::from(1), BigInt::from(2))
        );
    }

    #[test]
    fn chi_examples() {
        let c4 = cycle(4);
        assert_eq!(
            chi(&c4, ChiExponent::Integer(1)),
            ChiValue::Exact(rational(16, 1))
        );
        // 2 chi_{-1} = H
        let p4 = path(4);
        if let ChiValue::Exact(v) = chi(&p4, ChiExponent::Integer(-1)) {
            assert_eq!(v * rational(2, 1), harmonic_index(&p4));
        } else {
            panic!("integer exponent must be exact");
        }
        // chi_0 = m
        for g in [path(4), cycle(6), star(5)] {
            assert_eq!(
                chi(&g, ChiExponent::Integer(0)),
                ChiValue::Exact(rational(g.m() as i64, 1))
            );
        }
        // chi_{-1/2} on K_2: single edge with degree sum 2
        if let ChiValue::Approx(v) = chi(&path(2), ChiExponent::Real(-0.5)) {
            assert!(approx_eq(v, std::f64::consts::FRAC_1_SQRT_2, 1e-12));
        } else {
            panic!("real exponent must be approximate");
        }
    }

    #[test]
    fn chi_exponent_parsing() {
        assert_eq!(ChiExponent::parse("2"), Ok(ChiExponent::Integer(2)));
        assert_eq!(ChiExponent::parse("-1"), Ok(ChiExponent::Integer(-1)));
        assert_eq!(ChiExponent::parse("-1/2"), Ok(ChiExponent::Real(-0.5)));
        assert_eq!(ChiExponent::parse("0.5"), Ok(ChiExponent::Real(0.5)));
        assert!(ChiExponent::parse("x").is_err());
        assert!(ChiExponent::parse("1/0").is_err());
    }

    #[test]
    fn chi_complex_examples() {
        let c4 = cycle(4);
        let at_zero = chi_complex(&c4, Complex64::new(0.0, 0.0));
        assert!(approx_eq(at_zero.re, 4.0, 1e-12) && at_zero.im.abs() < 1e-12);
        let at_one = chi_complex(&c4, Complex64::new(1.0, 0.0));
        assert!(approx_eq(at_one.re, 16.0, 1e-12) && at_one.im.abs() < 1e-12);
        // 2^(i pi / ln 2) = e^(i pi) = -1 on a single edge with degree sum 2
        let z = Complex64::new(0.0, std::f64::consts::PI / 2f64.ln());
        let v = chi_complex(&path(2), z);
        assert!(approx_eq(v.re, -1.0, 1e-9) && v.im.abs() < 1e-9);
    }

    #[test]
    fn mu_indices_examples() {
        let c3 = cycle(3);
        assert_eq!(t_mu(&c3, |t| t as f64).unwrap(), 12.0);
        assert_eq!(u_mu(&c3, |t| t as f64).unwrap(), 64.0);
        assert_eq!(pi1_star(&c3), BigInt::from(64));

        for g in [path(4), wheel(5)] {
            assert_eq!(t_mu(&g, |_| 1.0).unwrap(), g.m() as f64);
            assert_eq!(u_mu(&g, |_| 1.0).unwrap(), 1.0);
        }

        let k2 = path(2);
        let v = t_mu(&k2, |t| (t as f64).powf(-0.5)).unwrap();
        assert!(approx_eq(v, std::f64::consts::FRAC_1_SQRT_2, 1e-12));

        assert_eq!(
            t_mu(&c3, |_| 0.0).unwrap_err(),
            IndexError::NonPositiveMu { input: 4, value: 0.0 }
        );
        assert!(u_mu(&c3, |_| -1.0).is_err());
    }

    #[test]
    fn pi1_star_p4() {
        // degree sums 3, 4, 3
        assert_eq!(pi1_star(&path(4)), BigInt::from(36));
        assert_eq!(pi1_star(&Graph::new(2, &[]).unwrap()), BigInt::one());
    }

    #[test]
    fn derivative_identity_examples() {
        // C_4: H''(1) = 24 and F + 2 M2 - 3 M1 + 2m = 24
        let ids = derivative_identities(&cycle(4), 2);
        assert_eq!(ids.forgotten_form.0, BigInt::from(24) - BigInt::from(8));
        assert_eq!(ids.forgotten_form.0, ids.forgotten_form.1);

        // P_4: H'(1) + H(1) = 7 + 3 = 10 = M1
        let ids = derivative_identities(&path(4), 2);
        assert_eq!(ids.first_zagreb, (BigInt::from(10), BigInt::from(10)));
        assert!(ids.all_hold());

        // k-regular graphs collapse to a single bucket
        for g in [cycle(5), complete(5), hypercube(3)] {
            assert!(derivative_identities(&g, 5).all_hold());
        }
    }

    #[test]
    fn identities_hold_on_small_corpus() {
        // all labeled graphs on 4 vertices without isolated vertices
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(4, &edges).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            assert!(derivative_identities(&g, 5).all_hold(), "mask {mask}");
        }
    }

    #[test]
    fn report_json_shape() {
        let report = index_report(&path(4), &[ChiExponent::Integer(1), ChiExponent::Real(0.5)]);
        let v = report.to_json();
        assert_eq!(v["harmonic_index"], "11/6");
        assert_eq!(v["harmonic_polynomial"], serde_json::json!({"2": "2", "3": "1"}));
        assert_eq!(v["chi"][0]["exact"], true);
        assert_eq!(v["chi"][1]["approx"], true);
        let text = report.render_text();
        assert!(text.contains("H(G) = 11/6"));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let bits = n * (n - 1) / 2;
            (Just(n), 0u64..(1u64 << bits))
        })
        .prop_map(|(n, mask)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> k & 1 == 1 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    }

    proptest! {
        #[test]
        fn polynomial_is_additive_over_disjoint_union(g1 in arb_graph(5), g2 in arb_graph(5)) {
            let mut edges: Vec<_> = g1.edges().collect();
            edges.extend(g2.edges().map(|(u, v)| (u + g1.n(), v + g1.n())));
            let union = Graph::new(g1.n() + g2.n(), &edges).unwrap();
            prop_assert_eq!(
                harmonic_polynomial(&union),
                &harmonic_polynomial(&g1) + &harmonic_polynomial(&g2)
            );
        }

        #[test]
        fn regular_graphs_have_monomial_polynomial(n in 3usize..=8) {
            // cycles are 2-regular
            let g = cycle(n);
            prop_assert_eq!(
                harmonic_polynomial(&g),
                IntPolynomial::monomial(BigInt::from(n), 3)
            );
        }

        #[test]
        fn profile_reconstruction(g in arb_graph(6)) {
            prop_assert_eq!(coefficient_profile(&g).to_polynomial(), harmonic_polynomial(&g));
        }
    }
}

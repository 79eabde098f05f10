//! The registry of executable structural checks. Each check states its
//! hypotheses as an applicability predicate, computes both sides of its
//! relation through independent routes (polynomial side via the polynomial
//! machinery, graph side via graph-core), and returns an explicit verdict.
//! Hypotheses that fail yield `NotApplicable`, never a silent pass.
//!
//! Checks whose statement needs a minimum degree (or otherwise presumes that
//! every vertex has a neighbor) are gated on the absence of isolated
//! vertices; enumeration and parsing produce such graphs freely, and marking
//! them not-applicable keeps corpus tallies honest.

use crate::graph::{component_regularity, Component, Graph, RegularityClass};
use crate::indices::{
    derivative_identities, harmonic_index, zagreb_and_forgotten, CoefficientProfile,
    DerivativeIdentities,
};
use crate::io::write_graph6;
use crate::polynomial::{IntPolynomial, Parity, PolyStructure, Rational};
use crate::verifier::VerifierError;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cell::OnceCell;

/// Stable identifiers for every registered check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// Regular graphs have the monomial polynomial `m x^(2k-1)`.
    RegularMonomial,
    /// The five identities tying `H`, `H'`, `H''` at 1 to `m`, `M1`, `M2`,
    /// `F`, `M1` of the line graph, and the degree bounds on `n`.
    ValueAtOne,
    /// `H^(k)(G,1)` equals its falling-factorial expansion in `chi_0..chi_k`
    /// for `k <= 5`.
    HigherDerivatives,
    /// All coefficients non-negative and the lowest exponent at least 1.
    NonnegativeCoefficients,
    /// Degree at least 2 exactly when some component is not a single edge.
    StrictConvexity,
    /// One non-zero coefficient exactly when the graph is coherent.
    CoherentMonomial,
    /// Connected case: one non-zero coefficient iff regular or biregular.
    ConnectedRegularBiregular,
    /// `H(G) >= 2 H(G, 1/2)`, with equality exactly on unions of single edges.
    MidpointInequality,
    /// `2 min_deg - 1 <= Deg_min <= Deg <= 2 max_deg - 1 <= 2n - 3`, and the
    /// top is reached exactly when two dominant vertices are adjacent.
    DegreeBounds,
    /// Degree >= n forces a triangle; triangle-free with degree n-1 forces a
    /// connected graph of diameter at most 3.
    GirthDiameter,
    /// `1 <= K <= m`, with `K = 1` iff coherent and `K = m` iff a single edge.
    SupportSizeRange,
    /// `K <= m - 1` once `m >= 2`.
    SupportSizeStrict,
    /// `K` bounded by the exponent window and by `2D - 2d + 1`, `m - 2d + 2`,
    /// and `n - 2d + 1` (triangle-free case).
    SupportSizeBounds,
    /// The coefficient of `x^2` counts pendant paths.
    PendantPaths,
    /// `Deg_min <= H'(G,1)/m` and `4m/n - 1 <= Deg`.
    DegreeWindow,
    /// The trailing/leading-coefficient sandwich around the harmonic index.
    ExtremeCoefficientBounds,
    /// `K <= r(r+1)/2` for `r` distinct degrees, and the inverse bound on `r`.
    DegreeSequenceSupport,
    /// Connected graphs with three or more distinct degrees have `K >= 2`.
    ThreeDegreesSupport,
    /// Some component with three or more distinct degrees forces `K >= 2`.
    ComponentThreeDegrees,
    /// Odd function iff every component's degrees share one parity.
    OddFunction,
    /// Even function iff every edge joins degrees of opposite parity.
    EvenFunction,
    /// `2m^2/M1 <= H(G) <= (D+d)^2 m^2 / (2 D d M1)`, lower equality iff K=1.
    HarmonicZagrebBounds,
    /// Sampled proper subgraphs have a different polynomial and no larger
    /// degree.
    ProperSubgraph,
}

impl CheckId {
    pub const ALL: [CheckId; 23] = [
        CheckId::RegularMonomial,
        CheckId::ValueAtOne,
        CheckId::HigherDerivatives,
        CheckId::NonnegativeCoefficients,
        CheckId::StrictConvexity,
        CheckId::CoherentMonomial,
        CheckId::ConnectedRegularBiregular,
        CheckId::MidpointInequality,
        CheckId::DegreeBounds,
        CheckId::GirthDiameter,
        CheckId::SupportSizeRange,
        CheckId::SupportSizeStrict,
        CheckId::SupportSizeBounds,
        CheckId::PendantPaths,
        CheckId::DegreeWindow,
        CheckId::ExtremeCoefficientBounds,
        CheckId::DegreeSequenceSupport,
        CheckId::ThreeDegreesSupport,
        CheckId::ComponentThreeDegrees,
        CheckId::OddFunction,
        CheckId::EvenFunction,
        CheckId::HarmonicZagrebBounds,
        CheckId::ProperSubgraph,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CheckId::RegularMonomial => "regular-monomial",
            CheckId::ValueAtOne => "value-at-one",
            CheckId::HigherDerivatives => "higher-derivatives",
            CheckId::NonnegativeCoefficients => "nonnegative-coefficients",
            CheckId::StrictConvexity => "strict-convexity",
            CheckId::CoherentMonomial => "coherent-monomial",
            CheckId::ConnectedRegularBiregular => "connected-regular-biregular",
            CheckId::MidpointInequality => "midpoint-inequality",
            CheckId::DegreeBounds => "degree-bounds",
            CheckId::GirthDiameter => "girth-diameter",
            CheckId::SupportSizeRange => "support-size-range",
            CheckId::SupportSizeStrict => "support-size-strict",
            CheckId::SupportSizeBounds => "support-size-bounds",
            CheckId::PendantPaths => "pendant-paths",
            CheckId::DegreeWindow => "degree-window",
            CheckId::ExtremeCoefficientBounds => "extreme-coefficient-bounds",
            CheckId::DegreeSequenceSupport => "degree-sequence-support",
            CheckId::ThreeDegreesSupport => "three-degrees-support",
            CheckId::ComponentThreeDegrees => "component-three-degrees",
            CheckId::OddFunction => "odd-function",
            CheckId::EvenFunction => "even-function",
            CheckId::HarmonicZagrebBounds => "harmonic-zagreb-bounds",
            CheckId::ProperSubgraph => "proper-subgraph",
        }
    }

    pub fn from_tag(tag: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|id| id.tag() == tag)
    }

    /// Parses `all` or a comma-separated tag list.
    pub fn parse_registry(text: &str) -> Result<Vec<CheckId>, VerifierError> {
        if text.trim() == "all" {
            return Ok(CheckId::ALL.to_vec());
        }
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| CheckId::from_tag(t).ok_or_else(|| VerifierError::UnknownCheck(t.to_string())))
            .collect()
    }
}

/// Outcome of one check on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Carries both sides of the violated relation; the caller attaches the
    /// graph6 witness.
    Fail(String),
    NotApplicable(&'static str),
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: CheckId,
    pub verdict: Verdict,
    /// Logged observations that are not failures (bound equalities, mostly).
    pub note: Option<String>,
}

/// Runs every registered check against one graph.
pub fn run_checks(g: &Graph, registry: &[CheckId]) -> Vec<CheckOutcome> {
    let ctx = Context::new(g);
    registry.iter().map(|&id| ctx.run(id)).collect()
}

fn pass_if(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(detail())
    }
}

fn iff(
    label: &str,
    poly_side: bool,
    graph_side: bool,
) -> Result<(), String> {
    if poly_side == graph_side {
        Ok(())
    } else {
        Err(format!(
            "{label}: polynomial side {poly_side}, graph side {graph_side}"
        ))
    }
}

/// Everything the checks share for one graph, computed once.
struct Context<'g> {
    g: &'g Graph,
    n: usize,
    m: usize,
    degrees: Vec<usize>,
    distinct_count: usize,
    max_degree: Option<usize>,
    min_degree: Option<usize>,
    h: IntPolynomial,
    st: PolyStructure,
    h_index: Rational,
    components: Vec<Component>,
    classes: Vec<RegularityClass>,
    coherent: bool,
    /// n >= 1 and every vertex has a neighbor — the universe the degree-based
    /// statements live in.
    no_isolated: bool,
    identities: OnceCell<DerivativeIdentities>,
}

impl<'g> Context<'g> {
    fn new(g: &'g Graph) -> Self {
        let summary = g.degree_summary();
        let h = CoefficientProfile::new(g).to_polynomial();
        let st = h.structure();
        let components = g.connected_components();
        let classes: Vec<RegularityClass> = components
            .iter()
            .map(|c| component_regularity(&c.graph))
            .collect();
        let coherent = {
            let mut sums = classes.iter().map(RegularityClass::degree_sum);
            match sums.next() {
                None => true,
                Some(None) => false,
                Some(Some(first)) => sums.all(|s| s == Some(first)),
            }
        };
        Context {
            n: g.n(),
            m: g.m(),
            distinct_count: summary.distinct.len(),
            max_degree: summary.max_degree,
            min_degree: summary.min_degree,
            h_index: harmonic_index(g),
            st,
            h,
            components,
            classes,
            coherent,
            no_isolated: g.n() >= 1 && !g.has_isolated_vertex(),
            degrees: summary.degrees,
            identities: OnceCell::new(),
            g,
        }
    }

    fn identities(&self) -> &DerivativeIdentities {
        self.identities
            .get_or_init(|| derivative_identities(self.g, 5))
    }

    fn support_size(&self) -> usize {
        self.st.nonzero_count
    }

    /// Exponent window as signed integers; callable only when m >= 1.
    fn window(&self) -> (i64, i64) {
        (
            self.st.min_degree.expect("nonzero polynomial") as i64,
            self.st.degree.expect("nonzero polynomial") as i64,
        )
    }

    fn degree_pair(&self) -> (i64, i64) {
        (
            self.max_degree.expect("no isolated vertices") as i64,
            self.min_degree.expect("no isolated vertices") as i64,
        )
    }

    fn all_components_single_edges(&self) -> bool {
        self.components.iter().all(|c| c.graph.n() == 2)
    }

    fn run(&self, id: CheckId) -> CheckOutcome {
        let (verdict, note) = match id {
            CheckId::RegularMonomial => (self.regular_monomial(), None),
            CheckId::ValueAtOne => (self.value_at_one(), None),
            CheckId::HigherDerivatives => (self.higher_derivatives(), None),
            CheckId::NonnegativeCoefficients => (self.nonnegative_coefficients(), None),
            CheckId::StrictConvexity => (self.strict_convexity(), None),
            CheckId::CoherentMonomial => (self.coherent_monomial(), None),
            CheckId::ConnectedRegularBiregular => (self.connected_regular_biregular(), None),
            CheckId::MidpointInequality => (self.midpoint_inequality(), None),
            CheckId::DegreeBounds => (self.degree_bounds(), None),
            CheckId::GirthDiameter => (self.girth_diameter(), None),
            CheckId::SupportSizeRange => (self.support_size_range(), None),
            CheckId::SupportSizeStrict => (self.support_size_strict(), None),
            CheckId::SupportSizeBounds => (self.support_size_bounds(), None),
            CheckId::PendantPaths => (self.pendant_paths(), None),
            CheckId::DegreeWindow => (self.degree_window(), None),
            CheckId::ExtremeCoefficientBounds => self.extreme_coefficient_bounds(),
            CheckId::DegreeSequenceSupport => (self.degree_sequence_support(), None),
            CheckId::ThreeDegreesSupport => (self.three_degrees_support(), None),
            CheckId::ComponentThreeDegrees => (self.component_three_degrees(), None),
            CheckId::OddFunction => (self.odd_function(), None),
            CheckId::EvenFunction => (self.even_function(), None),
            CheckId::HarmonicZagrebBounds => self.harmonic_zagreb_bounds(),
            CheckId::ProperSubgraph => (self.proper_subgraph(), None),
        };
        CheckOutcome { id, verdict, note }
    }

    fn regular_monomial(&self) -> Verdict {
        let k = match self.degrees.first() {
            Some(&k) if k >= 1 && self.distinct_count == 1 => k,
            _ => return Verdict::NotApplicable("not regular with positive degree"),
        };
        let expected = IntPolynomial::monomial(BigInt::from(self.m), 2 * k - 1);
        pass_if(self.h == expected, || {
            format!("H = {} but the regular form gives {expected}", self.h)
        })
    }

    fn value_at_one(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let ids = self.identities();
        let mut problems = Vec::new();
        let (_, h1, m) = &ids.derivative_pairs[0];
        if h1 != m {
            problems.push(format!("H(1) = {h1} but m = {m}"));
        }
        let pairs = [
            ("H'(1) + H(1) vs M1", &ids.first_zagreb),
            ("H''(1) - 2H(1) vs F + 2M2 - 3M1", &ids.forgotten_form),
            ("H''(1) + 2H(1) vs M1(L(G)) + M1(G)", &ids.line_graph_form),
        ];
        for (label, (lhs, rhs)) in pairs {
            if lhs != rhs {
                problems.push(format!("{label}: {lhs} != {rhs}"));
            }
        }
        match &ids.vertex_count_bounds {
            Some((lo, n, hi)) => {
                let n = Rational::from(n.clone());
                if !(*lo <= n && n <= *hi) {
                    problems.push(format!("vertex bounds violated: {lo} <= {n} <= {hi}"));
                }
            }
            None => problems.push("degree bounds undefined despite no isolated vertices".into()),
        }
        pass_if(problems.is_empty(), || problems.join("; "))
    }

    fn higher_derivatives(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let ids = self.identities();
        let mismatch = ids.derivative_pairs[1..]
            .iter()
            .find(|(_, lhs, rhs)| lhs != rhs);
        pass_if(mismatch.is_none(), || {
            let (k, lhs, rhs) = mismatch.expect("mismatch exists");
            format!("k = {k}: H^(k)(1) = {lhs} but the chi expansion gives {rhs}")
        })
    }

    fn nonnegative_coefficients(&self) -> Verdict {
        if self.m == 0 {
            return Verdict::NotApplicable("no edges");
        }
        let all_nonneg = self.h.coeffs().iter().all(|c| !c.is_negative());
        let min_deg_ok = self.st.min_degree.is_some_and(|d| d >= 1);
        pass_if(all_nonneg && min_deg_ok, || {
            format!(
                "H = {} must have non-negative coefficients and minimum exponent >= 1",
                self.h
            )
        })
    }

    fn strict_convexity(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let convex = self.st.degree.is_some_and(|d| d >= 2);
        let not_all_single_edges = !self.all_components_single_edges();
        match iff("degree >= 2 vs not a union of single edges", convex, not_all_single_edges) {
            Ok(()) => Verdict::Pass,
            Err(e) => Verdict::Fail(e),
        }
    }

    fn coherent_monomial(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        match iff("K = 1 vs coherent", self.support_size() == 1, self.coherent) {
            Ok(()) => Verdict::Pass,
            Err(e) => Verdict::Fail(e),
        }
    }

    fn connected_regular_biregular(&self) -> Verdict {
        if self.components.len() != 1 || self.n < 2 {
            return Verdict::NotApplicable("needs a connected graph on >= 2 vertices");
        }
        let structured = matches!(
            self.classes[0],
            RegularityClass::Regular(_) | RegularityClass::Biregular { .. }
        );
        match iff("K = 1 vs regular-or-biregular", self.support_size() == 1, structured) {
            Ok(()) => Verdict::Pass,
            Err(e) => Verdict::Fail(e),
        }
    }

    fn midpoint_inequality(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let twice_mid = self.h.evaluate(&Rational::new(BigInt::one(), BigInt::from(2)))
            * Rational::from(BigInt::from(2));
        if self.h_index < twice_mid {
            return Verdict::Fail(format!(
                "H(G) = {} < 2 H(G,1/2) = {twice_mid}",
                self.h_index
            ));
        }
        match iff(
            "equality vs union of single edges",
            self.h_index == twice_mid,
            self.all_components_single_edges(),
        ) {
            Ok(()) => Verdict::Pass,
            Err(e) => Verdict::Fail(e),
        }
    }

    fn degree_bounds(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let (max_d, min_d) = self.degree_pair();
        let (low, high) = self.window();
        let n = self.n as i64;
        let mut problems = Vec::new();
        if !(2 * min_d - 1 <= low && low <= high && high <= 2 * max_d - 1) {
            problems.push(format!(
                "window violated: 2*{min_d}-1 <= {low} <= {high} <= 2*{max_d}-1"
            ));
        }
        if high > 2 * n - 3 {
            problems.push(format!("Deg = {high} > 2n - 3 = {}", 2 * n - 3));
        }
        let adjacent_dominants = self
            .g
            .edges()
            .any(|(u, v)| self.degrees[u] == self.n - 1 && self.degrees[v] == self.n - 1);
        if let Err(e) = iff(
            "Deg = 2n - 3 vs two adjacent dominant vertices",
            high == 2 * n - 3,
            adjacent_dominants,
        ) {
            problems.push(e);
        }
        pass_if(problems.is_empty(), || problems.join("; "))
    }

    fn girth_diameter(&self) -> Verdict {
        if self.m == 0 {
            return Verdict::NotApplicable("no edges");
        }
        let deg = self.st.degree.expect("nonzero polynomial") as i64;
        let n = self.n as i64;
        let triangle_free = self.g.is_triangle_free();
        let high_degree = deg >= n;
        let tight_triangle_free = triangle_free && deg == n - 1;
        if !high_degree && !tight_triangle_free {
            return Verdict::NotApplicable("neither degree hypothesis holds");
        }
        let mut problems = Vec::new();
        if high_degree && self.g.girth() != crate::graph::Girth::Cycle(3) {
            problems.push(format!(
                "Deg = {deg} >= n = {n} but girth is {:?}",
                self.g.girth()
            ));
        }
        if tight_triangle_free {
            match self.g.diameter() {
                crate::graph::Diameter::Value(d) if d <= 3 => {}
                other => problems.push(format!(
                    "triangle-free with Deg = n - 1 but diameter is {other:?}"
                )),
            }
        }
        pass_if(problems.is_empty(), || problems.join("; "))
    }

    fn support_size_range(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let k = self.support_size();
        let mut problems = Vec::new();
        if !(1 <= k && k <= self.m) {
            problems.push(format!("K = {k} outside 1..={}", self.m));
        }
        if let Err(e) = iff("K = 1 vs coherent", k == 1, self.coherent) {
            problems.push(e);
        }
        let single_edge = self.n == 2 && self.m == 1;
        if let Err(e) = iff("K = m vs single edge", k == self.m, single_edge) {
            problems.push(e);
        }
        pass_if(problems.is_empty(), || problems.join("; "))
    }

    fn support_size_strict(&self) -> Verdict {
        if self.m < 2 {
            return Verdict::NotApplicable("fewer than two edges");
        }
        let k = self.support_size();
        pass_if(k <= self.m - 1, || {
            format!("K = {k} > m - 1 = {}", self.m - 1)
        })
    }

    fn support_size_bounds(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let k = self.support_size() as i64;
        let (max_d, min_d) = self.degree_pair();
        let (low, high) = self.window();
        let (m, n) = (self.m as i64, self.n as i64);
        let mut problems = Vec::new();
        if k > high - low + 1 {
            problems.push(format!("K = {k} > Deg - Deg_min + 1 = {}", high - low + 1));
        }
        let cap = (2 * max_d - 2 * min_d + 1).min(m - 2 * min_d + 2);
        if k > cap {
            problems.push(format!("K = {k} > min(2D-2d+1, m-2d+2) = {cap}"));
        }
        if self.g.is_triangle_free() && k > n - 2 * min_d + 1 {
            problems.push(format!(
                "triangle-free but K = {k} > n - 2d + 1 = {}",
                n - 2 * min_d + 1
            ));
        }
        pass_if(problems.is_empty(), || problems.join("; "))
    }

    fn pendant_paths(&self) -> Verdict {
        let coefficient = self.h.coeff(2);
        let count = BigInt::from(self.g.pendant_path_count());
        pass_if(coefficient == count, || {
            format!("coefficient of x^2 is {coefficient} but {count} pendant paths exist")
        })
    }

    fn degree_window(&self) -> Verdict {
        if !self.no_isolated {
            return Verdict::NotApplicable("isolated vertex present");
        }
        let (max_d, min_d) = self.degree_pair();
        let (low, high) = self.window();
        let (m, n) = (self.m as i64, self.n as i64);
        let hp1 = self.h.derivative().evaluate_int(&BigInt::one());
        let mut problems = Vec::new();
        if !(2 * min_d - 1 <= low) {
            problems.push(format!("Deg_min = {low} < 2d - 1 = {}", 2 * min_d - 1));
        }
        if BigInt::from(low * m) > hp1 {
            problems.push(format!("Deg_min = {low} > H'(1)/m = {hp1}/{m}"));
        }
        if 4 * m > n * (high + 1) {
            problems.push(format!("Deg = {high} < 4m/n - 1 = {}/{n} - 1", 4 * m));
        }
        if high > 2 * max_d - 1 {
            problems.push(format!("Deg = {high} > 2D - 1 = {}", 2 * max_d - 1));
        }
        pass_if(problems.is_empty(), || problems.join("; "))
    }

    fn extreme_coefficient_bounds(&self) -> (Verdict, Option<String>) {
        if self.m == 0 {
            return (Verdict::NotApplicable("no edges"), None);
        }
        let (low, high) = self.window();
        let c_min = self.st.trailing.clone().expect("nonzero polynomial");
        let c_max = self.st.leading.clone().expect("nonzero polynomial");
        let two_m = BigInt::from(2 * self.m);
        let frac = |num: BigInt, den: i64| Rational::new(num, BigInt::from(den));
        let lower = frac(BigInt::from(2) * &c_min, low + 1)
            + frac(&two_m - BigInt::from(2) * &c_min, high + 1);
        let upper = frac(BigInt::from(2) * &c_max, high + 1)
            + frac(&two_m - BigInt::from(2) * &c_max, low + 1);
        if !(lower <= self.h_index && self.h_index <= upper) {
            return (
                Verdict::Fail(format!(
                    "H(G) = {} outside [{lower}, {upper}]",
                    self.h_index
                )),
                None,
            );
        }
        let note = (lower == self.h_index || self.h_index == upper)
            .then(|| "coefficient bound attained".to_string());
        (Verdict::Pass, note)
    }

    fn degree_sequence_support(&self) -> Verdict {
        if self.m == 0 {
            return Verdict::NotApplicable("no edges");
        }
        let r = self.distinct_count;
        let k = self.support_size();
        let mut problems = Vec::new();
        if 2 * k > r * (r + 1) {
            problems.push(format!("K = {k} > r(r+1)/2 with r = {r}"));
        }
        // least r0 with r0(r0+1)/2 >= K; the degree sequence must reach it
        let mut r0 = 0usize;
        while r0 * (r0 + 1) < 2 * k {
            r0 += 1;
        }
        if r < r0 {
            problems.push(format!("degree sequence has {r} terms, needs at least {r0}"));
        }
        pass_if(problems.is_empty(), || problems.join("; "))
    }

    fn three_degrees_support(&self) -> Verdict {
        if self.components.len() != 1 || self.n < 2 {
            return Verdict::NotApplicable("needs a connected graph on >= 2 vertices");
        }
        let (r, k) = (self.distinct_count, self.support_size());
        let needed = if r > 2 { 2 } else { 1 };
        pass_if(k >= needed, || {
            format!("r = {r} distinct degrees but K = {k} < {needed}")
        })
    }

    fn component_three_degrees(&self) -> Verdict {
        let triggered = self
            .components
            .iter()
            .any(|c| c.graph.degree_summary().distinct.len() > 2);
        if !triggered {
            return Verdict::NotApplicable("no component with three distinct degrees");
        }
        let k = self.support_size();
        pass_if(k >= 2, || {
            format!("a component has three distinct degrees but K = {k}")
        })
    }

    fn odd_function(&self) -> Verdict {
        if self.m == 0 {
            return Verdict::NotApplicable("no edges");
        }
        let odd = self.h.parity() == Parity::OddFunction;
        let uniform_parity = self.components.iter().all(|c| {
            let distinct = c.graph.degree_summary().distinct;
            distinct.iter().all(|d| d % 2 == 0) || distinct.iter().all(|d| d % 2 == 1)
        });
        match iff("odd function vs per-component degree parity", odd, uniform_parity) {
            Ok(()) => Verdict::Pass,
            Err(e) => Verdict::Fail(e),
        }
    }

    fn even_function(&self) -> Verdict {
        if self.m == 0 {
            return Verdict::NotApplicable("no edges");
        }
        let even = self.h.parity() == Parity::EvenFunction;
        match iff(
            "even function vs alternated degrees",
            even,
            self.g.has_alternated_degree(),
        ) {
            Ok(()) => Verdict::Pass,
            Err(e) => Verdict::Fail(e),
        }
    }

    fn harmonic_zagreb_bounds(&self) -> (Verdict, Option<String>) {
        if !self.no_isolated {
            return (Verdict::NotApplicable("isolated vertex present"), None);
        }
        let (max_d, min_d) = self.degree_pair();
        let m1 = zagreb_and_forgotten(self.g).m1;
        let m_sq = BigInt::from(self.m) * BigInt::from(self.m);
        let lower = Rational::new(BigInt::from(2) * &m_sq, m1.clone());
        let spread = BigInt::from(max_d + min_d);
        let upper = Rational::new(
            &spread * &spread * &m_sq,
            BigInt::from(2 * max_d * min_d) * &m1,
        );
        let mut problems = Vec::new();
        if !(lower <= self.h_index && self.h_index <= upper) {
            problems.push(format!(
                "H(G) = {} outside [{lower}, {upper}]",
                self.h_index
            ));
        }
        if let Err(e) = iff(
            "lower equality vs constant degree sum (K = 1)",
            self.h_index == lower,
            self.support_size() == 1,
        ) {
            problems.push(e);
        }
        let regular = self.distinct_count == 1;
        if regular && self.h_index != upper {
            problems.push(format!(
                "regular graph should attain the upper bound {upper}, got {}",
                self.h_index
            ));
        }
        let mut notes = Vec::new();
        if self.h_index == lower {
            notes.push("lower bound attained (K = 1)");
        }
        if self.h_index == upper {
            notes.push(if regular {
                "upper bound attained on a regular graph"
            } else {
                "upper bound attained on a non-regular graph"
            });
        }
        let verdict = pass_if(problems.is_empty(), || problems.join("; "));
        (verdict, (!notes.is_empty()).then(|| notes.join("; ")))
    }

    fn proper_subgraph(&self) -> Verdict {
        if self.m == 0 {
            return Verdict::NotApplicable("no proper edge subset to sample");
        }
        // deterministic seed from the graph itself, independent of worker
        // layout or iteration order
        let mut seed = 0xcbf2_9ce4_8422_2325u64;
        for byte in write_graph6(self.g).bytes() {
            seed ^= byte as u64;
            seed = seed.wrapping_mul(0x1000_0000_01b3);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<(usize, usize)> = self.g.edges().collect();
        for _ in 0..3 {
            let mut keep: Vec<bool> = (0..edges.len()).map(|_| rng.gen()).collect();
            if keep.iter().all(|&b| b) {
                let drop_at = rng.gen_range(0..keep.len());
                keep[drop_at] = false;
            }
            let subset: Vec<(usize, usize)> = edges
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            let sub = Graph::new(self.n, &subset).expect("edge subset is valid");
            let sub_h = CoefficientProfile::new(&sub).to_polynomial();
            if sub_h == self.h {
                return Verdict::Fail(format!(
                    "proper subgraph with {} edges shares the polynomial {}",
                    sub.m(),
                    self.h
                ));
            }
            if let (Some(sub_deg), Some(deg)) = (sub_h.degree(), self.st.degree) {
                if sub_deg > deg {
                    return Verdict::Fail(format!(
                        "subgraph polynomial degree {sub_deg} exceeds parent degree {deg}"
                    ));
                }
            }
        }
        Verdict::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &edges)
    }

    fn verdict_of(g: &Graph, id: CheckId) -> Verdict {
        run_checks(g, &[id]).remove(0).verdict
    }

    #[test]
    fn registry_parsing() {
        assert_eq!(CheckId::parse_registry("all").unwrap().len(), CheckId::ALL.len());
        assert_eq!(
            CheckId::parse_registry("pendant-paths, odd-function").unwrap(),
            vec![CheckId::PendantPaths, CheckId::OddFunction]
        );
        assert!(matches!(
            CheckId::parse_registry("nope"),
            Err(VerifierError::UnknownCheck(_))
        ));
        for id in CheckId::ALL {
            assert_eq!(CheckId::from_tag(id.tag()), Some(id));
        }
    }

    #[test]
    fn spec_case_cycles_are_regular_or_biregular() {
        assert_eq!(verdict_of(&cycle(6), CheckId::ConnectedRegularBiregular), Verdict::Pass);
    }

    #[test]
    fn spec_case_complete_graph_girth() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(verdict_of(&k4, CheckId::GirthDiameter), Verdict::Pass);
    }

    #[test]
    fn spec_case_path_pendant_paths() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(verdict_of(&p4, CheckId::PendantPaths), Verdict::Pass);
    }

    #[test]
    fn isolated_vertices_gate_degree_statements() {
        let g = graph(4, &[(0, 1), (1, 2)]);
        assert_eq!(verdict_of(&g, CheckId::ValueAtOne), Verdict::NotApplicable("isolated vertex present"));
        assert_eq!(verdict_of(&g, CheckId::HarmonicZagrebBounds), Verdict::NotApplicable("isolated vertex present"));
        // but edge-local statements still run
        assert_eq!(verdict_of(&g, CheckId::PendantPaths), Verdict::Pass);
    }

    #[test]
    fn single_edge_hits_equality_branches() {
        let p2 = graph(2, &[(0, 1)]);
        assert_eq!(verdict_of(&p2, CheckId::SupportSizeRange), Verdict::Pass);
        assert_eq!(verdict_of(&p2, CheckId::MidpointInequality), Verdict::Pass);
        assert_eq!(verdict_of(&p2, CheckId::StrictConvexity), Verdict::Pass);
        assert_eq!(
            verdict_of(&p2, CheckId::SupportSizeStrict),
            Verdict::NotApplicable("fewer than two edges")
        );
    }

    #[test]
    fn every_check_passes_on_assorted_graphs() {
        let samples = vec![
            graph(1, &[]),
            graph(2, &[(0, 1)]),
            cycle(3),
            cycle(6),
            graph(4, &[(0, 1), (1, 2), (2, 3)]),
            graph(4, &[(0, 1), (0, 2), (0, 3)]),
            graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]),
            graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]),
            graph(4, &[(0, 1), (1, 2)]),
            graph(3, &[]),
        ];
        for g in &samples {
            for outcome in run_checks(g, &CheckId::ALL) {
                assert!(
                    !matches!(outcome.verdict, Verdict::Fail(_)),
                    "{:?} failed on n={} m={}: {:?}",
                    outcome.id,
                    g.n(),
                    g.m(),
                    outcome.verdict
                );
            }
        }
    }

    #[test]
    fn equality_notes_are_logged() {
        // regular graphs attain the upper harmonic-Zagreb bound and K = 1
        let outcome = run_checks(&cycle(5), &[CheckId::HarmonicZagrebBounds]).remove(0);
        assert_eq!(outcome.verdict, Verdict::Pass);
        let note = outcome.note.expect("equality should be logged");
        assert!(note.contains("lower bound attained"));
        assert!(note.contains("upper bound attained"));
    }
}

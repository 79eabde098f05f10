//! Deterministic generators for named graph families, each paired with the
//! closed form of its harmonic polynomial so generated graphs can be checked
//! against an independent oracle.
//!
//! Vertex labelings are fixed and documented per family: paths and cycles
//! number vertices along the walk, stars and wheels put the hub at 0,
//! complete bipartite graphs list one side before the other, and hypercube
//! vertices are their coordinate bit strings read as integers.

use crate::graph::Graph;

use crate::polynomial::IntPolynomial;
use num_bigint::BigInt;
use thiserror::Error;

/// Trees beyond this grow super-exponentially (hundreds of millions of
/// vertices), so the generator refuses rather than thrash.
pub const TR_TREE_MAX: usize = 11;
/// Mirrors the union generator's quadratic growth; far above any desk use.
pub const GR_UNION_MAX: usize = 2000;

#[derive(Debug, Error, PartialEq)]
pub enum FamilyError {
    #[error(
        "unknown family `{0}`; expected complete:n, cycle:n, hypercube:n, kbip:n1,n2, \
         path:n, wheel:n, star:n, trtree:r, grunion:r"
    )]
    UnknownFamily(String),
    #[error("bad parameters for `{family}`: {detail}")]
    BadParameters { family: &'static str, detail: String },
    #[error("`{family}` requires {constraint}, got {got}")]
    ParameterOutOfRange {
        family: &'static str,
        constraint: &'static str,
        got: usize,
    },
}

/// A named family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete { n: usize },
    Cycle { n: usize },
    Hypercube { dim: usize },
    CompleteBipartite { a: usize, b: usize },
    Path { n: usize },
    Wheel { n: usize },
    Star { n: usize },
    TrTree { r: usize },
    GrUnion { r: usize },
}

/// Closed-form harmonic polynomial of a family instance. The alternating-tree
/// family has no fixed closed form (its two coefficients vary with `r`), so
/// only the exponent support and support size are predicted for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Polynomial(IntPolynomial),
    SupportOnly {
        low_exponent: usize,
        high_exponent: usize,
        nonzero_count: usize,
    },
}

impl FamilySpec {
    /// Parses the CLI-facing syntax, e.g. `wheel:6` or `kbip:2,3`.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let (name, params) = text
            .split_once(':')
            .ok_or_else(|| FamilyError::UnknownFamily(text.to_string()))?;
        let one = |family: &'static str| -> Result<usize, FamilyError> {
            params
                .trim()
                .parse()
                .map_err(|_| FamilyError::BadParameters {
                    family,
                    detail: format!("expected one integer, got `{params}`"),
                })
        };
        match name {
            "complete" => Ok(FamilySpec::Complete { n: one("complete")? }),
            "cycle" => Ok(FamilySpec::Cycle { n: one("cycle")? }),
            "hypercube" => Ok(FamilySpec::Hypercube { dim: one("hypercube")? }),
            "path" => Ok(FamilySpec::Path { n: one("path")? }),
            "wheel" => Ok(FamilySpec::Wheel { n: one("wheel")? }),
            "star" => Ok(FamilySpec::Star { n: one("star")? }),
            "trtree" => Ok(FamilySpec::TrTree { r: one("trtree")? }),
            "grunion" => Ok(FamilySpec::GrUnion { r: one("grunion")? }),
            "kbip" => {
                let parts: Vec<&str> = params.split(',').map(str::trim).collect();
                let parsed: Option<Vec<usize>> =
                    parts.iter().map(|p| p.parse().ok()).collect();
                match parsed.as_deref() {
                    Some([a, b]) => Ok(FamilySpec::CompleteBipartite { a: *a, b: *b }),
                    _ => Err(FamilyError::BadParameters {
                        family: "kbip",
                        detail: format!("expected two integers `n1,n2`, got `{params}`"),
                    }),
                }
            }
            _ => Err(FamilyError::UnknownFamily(name.to_string())),
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let check = |ok: bool, family: &'static str, constraint: &'static str, got: usize| {
            if ok {
                Ok(())
            } else {
                Err(FamilyError::ParameterOutOfRange {
                    family,
                    constraint,
                    got,
                })
            }
        };
        match *self {
            FamilySpec::Complete { n } => check(n >= 1, "complete", "n >= 1", n),
            FamilySpec::Cycle { n } => check(n >= 3, "cycle", "n >= 3", n),
            FamilySpec::Hypercube { dim } => {
                check(dim >= 1, "hypercube", "n >= 1", dim)?;
                check(dim <= 20, "hypercube", "n <= 20", dim)
            }
            FamilySpec::CompleteBipartite { a, b } => {
                check(a >= 1, "kbip", "n1 >= 1", a)?;
                check(b >= 1, "kbip", "n2 >= 1", b)
            }
            FamilySpec::Path { n } => check(n >= 2, "path", "n >= 2", n),
            FamilySpec::Wheel { n } => check(n >= 4, "wheel", "n >= 4", n),
            FamilySpec::Star { n } => check(n >= 2, "star", "n >= 2", n),
            FamilySpec::TrTree { r } => {
                check(r >= 3, "trtree", "r >= 3 (three distinct degrees)", r)?;
                check(r <= TR_TREE_MAX, "trtree", "r <= 11 (tree size explodes)", r)
            }
            FamilySpec::GrUnion { r } => {
                check(r >= 1, "grunion", "r >= 1", r)?;
                check(r <= GR_UNION_MAX, "grunion", "r <= 2000", r)
            }
        }
    }

    /// Builds the graph with the family's documented labeling.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let graph = match *self {
            FamilySpec::Complete { n } => {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Graph::new(n, &edges)
            }
            FamilySpec::Cycle { n } => {
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::new(n, &edges)
            }
            FamilySpec::Hypercube { dim } => {
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
                Graph::new(n, &edges)
            }
            FamilySpec::CompleteBipartite { a, b } => {
                let mut edges = Vec::new();
                for u in 0..a {
                    for v in 0..b {
                        edges.push((u, a + v));
                    }
                }
                Graph::new(a + b, &edges)
            }
            FamilySpec::Path { n } => {
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                Graph::new(n, &edges)
            }
            FamilySpec::Wheel { n } => {
                let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
                for i in 1..n {
                    edges.push((i, if i == n - 1 { 1 } else { i + 1 }));
                }
                Graph::new(n, &edges)
            }
            FamilySpec::Star { n } => {
                let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
                Graph::new(n, &edges)
            }
            FamilySpec::TrTree { r } => return t_r_tree(r),
            FamilySpec::GrUnion { r } => return g_r_union(r),
        };
        Ok(graph.expect("family edges are valid by construction"))
    }

    /// The family's closed-form harmonic polynomial. Must equal
    /// `harmonic_polynomial(self.generate())` exactly; the alternating tree
    /// reports support only.
    pub fn closed_form(&self) -> Result<ClosedForm, FamilyError> {
        self.validate()?;
        let mono = |c: BigInt, e: usize| ClosedForm::Polynomial(IntPolynomial::monomial(c, e));
        Ok(match *self {
            FamilySpec::Complete { n } => {
                if n < 2 {
                    ClosedForm::Polynomial(IntPolynomial::zero())
                } else {
                    mono(BigInt::from(n * (n - 1) / 2), 2 * n - 3)
                }
            }
            FamilySpec::Cycle { n } => mono(BigInt::from(n), 3),
            FamilySpec::Hypercube { dim } => {
                mono(BigInt::from(dim) << (dim - 1), 2 * dim - 1)
            }
            FamilySpec::CompleteBipartite { a, b } => mono(BigInt::from(a * b), a + b - 1),
            FamilySpec::Path { n } => {
                // P_2 is 1-regular, so the regular-graph form x applies; the
                // 2x^2 + (n-3)x^3 form starts at n = 3
                if n == 2 {
                    mono(BigInt::from(1), 1)
                } else {
                    ClosedForm::Polynomial(
                        IntPolynomial::monomial(BigInt::from(2), 2)
                            + IntPolynomial::monomial(BigInt::from(n as i64 - 3), 3),
                    )
                }
            }
            FamilySpec::Wheel { n } => ClosedForm::Polynomial(
                IntPolynomial::monomial(BigInt::from(n - 1), n + 1)
                    + IntPolynomial::monomial(BigInt::from(n - 1), 5),
            ),
            FamilySpec::Star { n } => mono(BigInt::from(n - 1), n - 1),
            FamilySpec::GrUnion { r } => {
                let m: usize = (1..=(r + 1) / 2).map(|i| i * (r + 1 - i)).sum();
                mono(BigInt::from(m), r)
            }
            FamilySpec::TrTree { r } => ClosedForm::SupportOnly {
                low_exponent: r,
                high_exponent: r + 1,
                nonzero_count: 2,
            },
        })
    }
}

/// The degree permutation `{a_1, ..., a_r}` of `{1, ..., r}` that alternates
/// around the midpoint so consecutive sums `a_j + a_{j+1}` always land in
/// `{r+1, r+2}`. Ends with 1 for every `r`.
pub fn degree_alternation_sequence(r: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(r);
    if r % 2 == 0 {
        let half = r / 2;
        for i in 1..=half {
            seq.push(half + i);
            seq.push(half + 1 - i);
        }
    } else {
        let mid = (r + 1) / 2;
        seq.push(mid);
        for i in 1..=r / 2 {
            seq.push(mid + i);
            seq.push(mid - i);
        }
    }
    debug_assert!(seq
        .windows(2)
        .all(|w| w[0] + w[1] == r + 1 || w[0] + w[1] == r + 2));
    debug_assert_eq!(seq.last(), Some(&1));
    seq
}

/// Layered tree with distinct-degree set exactly `{1, ..., r}` whose harmonic
/// polynomial has only two non-zero coefficients (exponents `r` and `r+1`).
///
/// The root gets `a_1` children; a vertex at distance `j-1` gets `a_j - 1`
/// children for `j = 2..r-1`; distance `r-1` vertices are the leaves. Vertex
/// ids follow breadth-first creation order starting from the root at 0.
pub fn t_r_tree(r: usize) -> Result<Graph, FamilyError> {
    FamilySpec::TrTree { r }.validate()?;
    let seq = degree_alternation_sequence(r);
    let mut edges = Vec::new();
    let mut next_id = 1usize;
    let mut frontier = vec![0usize];
    for layer in 1..r {
        let children = if layer == 1 { seq[0] } else { seq[layer - 1] - 1 };
        let mut next_frontier = Vec::with_capacity(frontier.len() * children);
        for &parent in &frontier {
            for _ in 0..children {
                edges.push((parent, next_id));
                next_frontier.push(next_id);
                next_id += 1;
            }
        }
        frontier = next_frontier;
    }
    let graph = Graph::new(next_id, &edges).expect("tree edges are valid");
    debug_assert_eq!(graph.m(), graph.n() - 1);
    Ok(graph)
}

/// Disjoint union of the complete bipartite graphs `K_{i, r+1-i}` for
/// `i = 1..=ceil(r/2)`. Every edge has degree sum `r + 1`, so the harmonic
/// polynomial is the monomial `m x^r`, while the distinct-degree set is
/// `{1, ..., r}`.
pub fn g_r_union(r: usize) -> Result<Graph, FamilyError> {
    FamilySpec::GrUnion { r }.validate()?;
    let mut edges = Vec::new();
    let mut offset = 0usize;
    for i in 1..=(r + 1) / 2 {
        let (a, b) = (i, r + 1 - i);
        for u in 0..a {
            for v in 0..b {
                edges.push((offset + u, offset + a + v));
            }
        }
        offset += a + b;
    }
    Ok(Graph::new(offset, &edges).expect("union edges are valid"))
}

/// Convenience wrapper: generated graph next to its closed form.
pub fn oracle_pair(spec: &FamilySpec) -> Result<(Graph, ClosedForm), FamilyError> {
    Ok((spec.generate()?, spec.closed_form()?))
}

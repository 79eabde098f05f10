//! Harmonic polynomials of finite simple graphs, done exactly.
//!
//! For a graph `G` the harmonic polynomial is `H(G,x) = sum over edges uv of
//! x^(d_u + d_v - 1)`. Its value at `1` is the edge count, `2 * integral of
//! H(G,x) over [0,1]` is the harmonic index, and its coefficient profile
//! determines every degree-sum based topological index (first Zagreb,
//! forgotten, general sum-connectivity, multiplicative variants, ...).
//!
//! The crate provides:
//!
//! * [`graph`] — immutable simple graphs and structural predicates (degrees,
//!   components, line graph, girth, diameter, regularity classes, small-scale
//!   isomorphism);
//! * [`polynomial`] — dense integer polynomials and exact rationals;
//! * [`indices`] — the harmonic polynomial, coefficient profile and every
//!   index derived from them, all in exact arithmetic;
//! * [`families`] — generators for named graph families paired with their
//!   closed-form harmonic polynomials, plus the `T_r` / `G_r` constructions;
//! * [`verifier`] — exhaustive labeled-graph enumeration, a registry of
//!   executable structural checks, and a miner for non-isomorphic graphs
//!   sharing a harmonic polynomial;
//! * [`io`] — bit-exact graph6/sparse6 codecs and an edge-list reader.
//!
//! ```
//! use hpoly::graph::Graph;
//! use hpoly::indices::{harmonic_index, harmonic_polynomial};
//! use hpoly::polynomial::rational;
//!
//! let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
//! assert_eq!(harmonic_polynomial(&p4).to_string(), "2x^2 + x^3");
//! assert_eq!(harmonic_index(&p4), rational(11, 6));
//! ```

pub mod families;
pub mod graph;
pub mod indices;
pub mod io;
pub mod polynomial;
pub mod verifier;

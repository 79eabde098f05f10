//! Exhaustive labeled-graph enumeration. Every simple graph on `n` vertices
//! is one subset of the `n(n-1)/2` vertex pairs, so graphs are visited as
//! bit masks in increasing order — trivially partitionable across workers
//! and deterministic by construction.

use crate::graph::{canonical_form, Graph};
use std::collections::HashSet;
use thiserror::Error;

/// Full labeled enumeration is allowed up to here without ceremony.
pub const FULL_ENUMERATION_LIMIT: usize = 7;
/// One step further is allowed behind an explicit opt-in; beyond that the
/// mask space (2^36 at n = 9) is out of reach.
pub const OPT_IN_ENUMERATION_LIMIT: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifierError {
    #[error(
        "enumerating all labeled graphs on {n} vertices means {count} graphs; \
         pass the large-corpus opt-in (--allow-large) to run n = 8"
    )]
    NeedsOptIn { n: usize, count: u128 },
    #[error("labeled enumeration is capped at n = {limit}; n = {n} would mean {count} graphs")]
    BeyondHardLimit { n: usize, count: u128, limit: usize },
    #[error("unknown check id `{0}`; run with --theorems all or see the documented tags")]
    UnknownCheck(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

/// Number of labeled simple graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u128 {
    1u128 << (n * (n - 1) / 2)
}

/// Enforces the enumeration limits, naming the count that was refused.
pub fn check_order(n: usize, allow_large: bool) -> Result<(), VerifierError> {
    if n <= FULL_ENUMERATION_LIMIT {
        return Ok(());
    }
    if n <= OPT_IN_ENUMERATION_LIMIT {
        if allow_large {
            return Ok(());
        }
        return Err(VerifierError::NeedsOptIn {
            n,
            count: labeled_count(n),
        });
    }
    Err(VerifierError::BeyondHardLimit {
        n,
        count: labeled_count(n),
        limit: OPT_IN_ENUMERATION_LIMIT,
    })
}

/// Vertex pairs in lexicographic order; bit `i` of a mask toggles pair `i`.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Materializes the graph for one mask. Lexicographic pair order keeps the
/// adjacency lists sorted without an extra pass.
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_sorted_edges_unchecked(n, &edges)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    pub connected_only: bool,
    /// Keep one representative per isomorphism class, chosen by canonical
    /// form under permutation minimization.
    pub deduplicate: bool,
    pub allow_large: bool,
}

/// Streams every labeled simple graph on `n` vertices exactly once, in mask
/// order, with optional connectivity filtering and isomorphism
/// deduplication.
pub fn enumerate_graphs(
    n: usize,
    options: EnumerateOptions,
) -> Result<impl Iterator<Item = Graph>, VerifierError> {
    check_order(n, options.allow_large)?;
    let pairs = vertex_pairs(n);
    let total: u64 = 1 << pairs.len();
    let mut seen: HashSet<u64> = HashSet::new();
    Ok((0..total).filter_map(move |mask| {
        let g = graph_from_mask(n, &pairs, mask);
        if options.connected_only && !g.is_connected() {
            return None;
        }
        if options.deduplicate {
            let key = canonical_form(&g).expect("n is within the canonical-form limit");
            if !seen.insert(key) {
                return None;
            }
        }
        Some(g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_orders() {
        assert_eq!(enumerate_graphs(1, EnumerateOptions::default()).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3, EnumerateOptions::default()).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4, EnumerateOptions::default()).unwrap().count(), 64);
    }

    #[test]
    fn connected_isomorphism_classes() {
        let opts = EnumerateOptions {
            connected_only: true,
            deduplicate: true,
            allow_large: false,
        };
        // P_3 and K_3
        assert_eq!(enumerate_graphs(3, opts).unwrap().count(), 2);
        // P_4, K_{1,3}, C_4, paw, diamond, K_4
        assert_eq!(enumerate_graphs(4, opts).unwrap().count(), 6);
        // the classical sequence continues 21 at n = 5
        assert_eq!(enumerate_graphs(5, opts).unwrap().count(), 21);
    }

    #[test]
    fn all_isomorphism_classes() {
        let opts = EnumerateOptions {
            deduplicate: true,
            ..Default::default()
        };
        assert_eq!(enumerate_graphs(4, opts).unwrap().count(), 11);
        assert_eq!(enumerate_graphs(5, opts).unwrap().count(), 34);
    }

    #[test]
    fn limits_are_enforced() {
        assert!(check_order(7, false).is_ok());
        assert_eq!(
            check_order(8, false),
            Err(VerifierError::NeedsOptIn {
                n: 8,
                count: 1 << 28
            })
        );
        assert!(check_order(8, true).is_ok());
        assert!(matches!(
            check_order(9, true),
            Err(VerifierError::BeyondHardLimit { .. })
        ));
    }
}

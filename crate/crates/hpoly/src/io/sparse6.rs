//! The sparse6 format: a ':' marker, the `N(n)` size prefix, then an edge
//! stream of `(b, x)` groups where `b` is one bit and `x` is a `k`-bit vertex
//! number, `k` being the bit length of `n-1` (at least 1). A set `b`
//! advances the current vertex; `x` either jumps it forward or names the
//! other endpoint of an edge. The stream is padded with 1-bits.

use super::{pack_bits, parse_order, write_order, FormatError, BYTE_OFFSET, MAX_DECLARED_ORDER};
use crate::graph::Graph;

fn group_width(n: u64) -> usize {
    if n <= 1 {
        1
    } else {
        (64 - (n - 1).leading_zeros()) as usize
    }
}

/// Decodes one sparse6 line. Duplicate edges (legal in sparse6, which can
/// carry multigraphs) collapse silently; loops are rejected with the byte
/// offset of the offending group.
pub fn parse_sparse6(line: &str) -> Result<Graph, FormatError> {
    let body = line.trim_end_matches(['\r', '\n']);
    let body = body.strip_prefix(">>sparse6<<").unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if bytes[0] != b':' {
        return Err(FormatError::MissingSparse6Marker);
    }
    let (n, prefix_len) = parse_order(&bytes[1..], 1)?;
    if n > MAX_DECLARED_ORDER {
        return Err(FormatError::OrderTooLarge {
            n,
            limit: MAX_DECLARED_ORDER,
        });
    }
    let data_start = 1 + prefix_len;
    let data = &bytes[data_start..];
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidByte {
                offset: data_start + i,
                byte: b,
            });
        }
    }
    if n == 0 {
        // nothing can follow the size of an empty graph
        if !data.is_empty() {
            return Err(FormatError::TrailingGarbage { offset: data_start });
        }
        return Ok(Graph::new(0, &[]).expect("empty graph"));
    }

    let k = group_width(n);
    let total_bits = data.len() * 6;
    let bit = |i: usize| (data[i / 6] - BYTE_OFFSET) >> (5 - i % 6) & 1 == 1;

    let n = n as usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut v = 0usize;
    let mut i = 0usize;
    while i + k + 1 <= total_bits {
        let group_offset = data_start + i / 6;
        let b = bit(i);
        let mut x = 0usize;
        for j in 1..=k {
            x = (x << 1) | bit(i + j) as usize;
        }
        i += k + 1;
        if b {
            v += 1;
        }
        if x >= n || v >= n {
            break; // padding
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(FormatError::LoopEdge {
                offset: group_offset,
                v,
            });
        } else {
            edges.push((x, v));
        }
    }
    Ok(Graph::build(n, &edges)
        .expect("loop-free edges within range")
        .graph)
}

/// Encodes a graph as one sparse6 line. Rejects `n = 0`, which the format
/// cannot express.
pub fn write_sparse6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n == 0 {
        return Err(FormatError::EmptyGraphUnsupported);
    }
    let k = group_width(n as u64);
    let mut out = vec![b':'];
    write_order(&mut out, n as u64);

    let push_value = |bits: &mut Vec<bool>, x: usize| {
        for shift in (0..k).rev() {
            bits.push(x >> shift & 1 == 1);
        }
    };

    // edges sorted by larger endpoint, then smaller
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (v, u)).collect();
    edges.sort_unstable();

    let mut bits: Vec<bool> = Vec::with_capacity(edges.len() * (k + 1) + 6);
    let mut current = 0usize;
    for (hi, lo) in edges {
        if hi == current {
            bits.push(false);
        } else if hi == current + 1 {
            current += 1;
            bits.push(true);
        } else {
            // jump to `hi`, then emit the edge against the fresh vertex
            current = hi;
            bits.push(true);
            push_value(&mut bits, hi);
            bits.push(false);
        }
        push_value(&mut bits, lo);
    }

    // All-ones padding would hand the decoder one final (1, 11..1) group.
    // When n = 2^k that group's x = n-1 survives the range check, and with
    // the current vertex at n-2 it would decode as a loop at n-1; a single
    // 0 bit turns it into a harmless forward jump.
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == 1 << k && pad >= k + 1 && current == n - 2 {
        bits.push(false);
    }
    let target = bits.len().div_ceil(6) * 6;
    bits.resize(target, true);

    out.extend(pack_bits(&bits));
    Ok(String::from_utf8(out).expect("sparse6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_graph6;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn reference_vector() {
        // 7 vertices, edges 0-1, 0-2, 1-2, 5-6
        let g = graph(7, &[(0, 1), (0, 2), (1, 2), (5, 6)]);
        let line = write_sparse6(&g).unwrap();
        assert_eq!(line, ":Fa@x^");
        assert_eq!(parse_sparse6(":Fa@x^").unwrap(), g);
    }

    #[test]
    fn single_vertex() {
        let g = graph(1, &[]);
        let line = write_sparse6(&g).unwrap();
        assert_eq!(parse_sparse6(&line).unwrap(), g);
    }

    #[test]
    fn zero_vertices_rejected_on_write() {
        assert_eq!(
            write_sparse6(&graph(0, &[])),
            Err(FormatError::EmptyGraphUnsupported)
        );
    }

    #[test]
    fn padding_near_power_of_two_orders() {
        // the classic trap: n = 2^k with the last edge leaving the current
        // vertex at n-2, so naive all-ones padding decodes as a loop
        let cases: Vec<Graph> = vec![
            graph(4, &[(0, 1), (0, 2), (1, 2)]),
            graph(4, &[(0, 2), (1, 2)]),
            graph(2, &[(0, 1)]),
            graph(8, &[(0, 1), (5, 6)]),
            graph(8, &[(0, 6), (1, 6), (2, 6)]),
            graph(16, &[(0, 14), (13, 14)]),
        ];
        for g in cases {
            let line = write_sparse6(&g).unwrap();
            assert_eq!(parse_sparse6(&line).unwrap(), g, "line {line}");
        }
    }

    #[test]
    fn exhaustive_round_trip_up_to_five_vertices() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = graph(n, &edges);
                let line = write_sparse6(&g).unwrap();
                assert_eq!(parse_sparse6(&line).unwrap(), g, "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn isolated_vertices_survive() {
        // sparse6, unlike an edge list, carries n explicitly
        let g = graph(6, &[(0, 1)]);
        let line = write_sparse6(&g).unwrap();
        assert_eq!(parse_sparse6(&line).unwrap().n(), 6);
    }

    #[test]
    fn error_cases() {
        assert_eq!(parse_sparse6(""), Err(FormatError::Empty));
        assert_eq!(parse_sparse6("Bw"), Err(FormatError::MissingSparse6Marker));
        assert_eq!(
            parse_sparse6(":B\x07"),
            Err(FormatError::InvalidByte { offset: 2, byte: 7 })
        );
        assert!(matches!(
            parse_sparse6(":~~~~~~~~"),
            Err(FormatError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn denser_than_graph6_for_sparse_graphs() {
        // sanity: the two encodings agree on the decoded graph
        let g = graph(20, &[(0, 19), (3, 7), (8, 9)]);
        let s6 = write_sparse6(&g).unwrap();
        let g6 = write_graph6(&g);
        assert_eq!(parse_sparse6(&s6).unwrap(), g);
        assert!(s6.len() < g6.len());
    }
}

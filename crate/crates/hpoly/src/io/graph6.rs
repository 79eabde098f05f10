//! The graph6 format: `N(n)` size prefix, then the upper triangle of the
//! adjacency matrix in column order (`x_01, x_02, x_12, x_03, ...`), packed
//! big-endian six bits per byte, each byte offset by 63, zero-padded.

use super::{pack_bits, parse_order, write_order, FormatError, BYTE_OFFSET};
use crate::graph::Graph;

/// Decodes one graph6 line. An optional `>>graph6<<` header is stripped.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let body = line.trim_end_matches(['\r', '\n']);
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let (n, prefix_len) = parse_order(bytes, 0)?;

    // how many data bytes the bit vector needs; u128 so absurd declared
    // orders fail the length check instead of overflowing
    let nbits = n as u128 * n.saturating_sub(1) as u128 / 2;
    let needed = nbits.div_ceil(6);
    let have = (bytes.len() - prefix_len) as u128;
    if have < needed {
        return Err(FormatError::Truncated { offset: bytes.len() });
    }
    if have > needed {
        return Err(FormatError::TrailingGarbage {
            offset: prefix_len + needed as usize,
        });
    }

    let data = &bytes[prefix_len..];
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidByte {
                offset: prefix_len + i,
                byte: b,
            });
        }
    }

    let n = n as usize;
    let bit = |i: usize| (data[i / 6] - BYTE_OFFSET) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("upper-triangle bits cannot form loops or duplicates"))
}

/// Encodes a graph as one graph6 line with the minimal-length size prefix.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    write_order(&mut out, n as u64);
    let nbits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let mut bits = vec![false; nbits];
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            bits[i] = g.has_edge(u, v);
            i += 1;
        }
    }
    out.extend(pack_bits(&bits));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_vectors() {
        // K_2: n = 2, single bit 1 padded to 100000 -> 32 + 63 = '_'
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert!(k2.has_edge(0, 1));
        assert_eq!(write_graph6(&k2), "A_");

        // K_3: n = 3, bits 111000 -> 56 + 63 = 'w'
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        assert_eq!(write_graph6(&k3), "Bw");

        // single vertex, no bit vector at all
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));

        // empty graph on zero vertices
        let k0 = parse_graph6("?").unwrap();
        assert_eq!((k0.n(), k0.m()), (0, 0));
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap().m(), 3);
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert_eq!(
            parse_graph6("B\x20"),
            Err(FormatError::InvalidByte { offset: 1, byte: 0x20 })
        );
        assert_eq!(parse_graph6("B"), Err(FormatError::Truncated { offset: 1 }));
        assert_eq!(
            parse_graph6("A_w"),
            Err(FormatError::TrailingGarbage { offset: 2 })
        );
        // absurd declared order: three-byte form claiming 258047 vertices
        assert!(matches!(
            parse_graph6("~}}}"),
            Err(FormatError::Truncated { .. })
        ));
    }

    #[test]
    fn round_trip_small() {
        for line in ["@", "A?", "A_", "BW", "Bw", "DQc", "C]", "E?~o"] {
            let g = parse_graph6(line).unwrap();
            assert_eq!(write_graph6(&g), line, "round trip of {line}");
        }
    }

    #[test]
    fn long_form_order_accepted() {
        // n = 63 forces the 126-prefixed three-byte order form
        let g = Graph::new(63, &[(0, 62)]).unwrap();
        let line = write_graph6(&g);
        assert!(line.starts_with('~'));
        let back = parse_graph6(&line).unwrap();
        assert_eq!(back, g);
    }
}

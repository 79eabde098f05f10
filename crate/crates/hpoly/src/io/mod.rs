//! Serialization: bit-exact graph6/sparse6 codecs and a labeled edge-list
//! reader. Parsers treat their input as untrusted: every failure is a typed
//! error naming the offending byte or line, never a panic.

pub mod edgelist;
pub mod graph6;
pub mod sparse6;

pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError, EdgeListGraph};
pub use graph6::{parse_graph6, write_graph6};
pub use sparse6::{parse_sparse6, write_sparse6};

use crate::graph::Graph;
use thiserror::Error;

/// Largest vertex count a sparse6 line may declare before decoding refuses.
/// graph6 needs no such cap: its fixed-size bit vector bounds `n` by the
/// line length on its own.
pub const MAX_DECLARED_ORDER: u64 = 1 << 23;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input line")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("input ends at offset {offset} before the adjacency data is complete")]
    Truncated { offset: usize },
    #[error("trailing garbage starting at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("declared vertex count {n} exceeds the decoder limit {limit}")]
    OrderTooLarge { n: u64, limit: u64 },
    #[error("sparse6 lines start with ':'")]
    MissingSparse6Marker,
    #[error("sparse6 cannot encode a graph with zero vertices")]
    EmptyGraphUnsupported,
    #[error("edge stream produced a loop at vertex {v} (byte offset {offset})")]
    LoopEdge { offset: usize, v: usize },
}

/// Which wire format a line used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Sparse6,
}

/// One decoded corpus line: the raw text, the graph, and the detected format.
#[derive(Clone, Debug)]
pub struct Graph6Record {
    pub raw: String,
    pub graph: Graph,
    pub format: GraphFormat,
}

/// Decodes a line in either format, detecting sparse6 by its ':' marker.
/// Optional `>>graph6<<` / `>>sparse6<<` headers are stripped first.
pub fn parse_record(line: &str) -> Result<Graph6Record, FormatError> {
    let body = line.trim_end_matches(['\r', '\n']);
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let body = body.strip_prefix(">>sparse6<<").unwrap_or(body);
    if body.is_empty() {
        return Err(FormatError::Empty);
    }
    if body.starts_with(':') {
        Ok(Graph6Record {
            raw: line.to_string(),
            graph: parse_sparse6(line)?,
            format: GraphFormat::Sparse6,
        })
    } else {
        Ok(Graph6Record {
            raw: line.to_string(),
            graph: parse_graph6(line)?,
            format: GraphFormat::Graph6,
        })
    }
}

pub(crate) const BYTE_OFFSET: u8 = 63;

/// Reads `N(n)` — the shared size prefix. Returns `(n, bytes consumed)`.
pub(crate) fn parse_order(bytes: &[u8], base_offset: usize) -> Result<(u64, usize), FormatError> {
    let at = |i: usize| -> Result<u64, FormatError> {
        let &b = bytes
            .get(i)
            .ok_or(FormatError::Truncated { offset: base_offset + bytes.len() })?;
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidByte {
                offset: base_offset + i,
                byte: b,
            });
        }
        Ok((b - BYTE_OFFSET) as u64)
    };
    if at(0)? != 63 {
        return Ok((at(0)?, 1));
    }
    if at(1)? != 63 {
        let n = (at(1)? << 12) | (at(2)? << 6) | at(3)?;
        return Ok((n, 4));
    }
    let mut n = 0u64;
    for i in 2..8 {
        n = (n << 6) | at(i)?;
    }
    Ok((n, 8))
}

/// Writes the minimal-length `N(n)` prefix.
pub(crate) fn write_order(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + BYTE_OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + BYTE_OFFSET);
        out.push(((n >> 6) & 63) as u8 + BYTE_OFFSET);
        out.push((n & 63) as u8 + BYTE_OFFSET);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + BYTE_OFFSET);
        }
    }
}

/// Packs a bit sequence into printable bytes, 6 bits per byte, zero-padded.
pub(crate) fn pack_bits(bits: &[bool]) -> impl Iterator<Item = u8> + '_ {
    bits.chunks(6).map(|chunk| {
        let mut x = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - k);
            }
        }
        x + BYTE_OFFSET
    })
}

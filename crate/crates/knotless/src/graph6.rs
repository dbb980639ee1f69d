//! Bit-exact graph6 codec (single-byte order form, n <= 62).
//!
//! Format: order byte n+63, then ceil(n(n-1)/2 / 6) bytes each carrying six
//! upper-triangle adjacency bits in column-major order x(0,1), x(0,2),
//! x(1,2), x(0,3), ...; every byte is offset by 63 and trailing pad bits
//! must be zero.

use crate::graph::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {0:#x} outside the printable graph6 range 63..=126")]
    BadChar(u8),
    #[error("expected {expected} data bytes for order {order}, got {got}")]
    BadLength { order: usize, expected: usize, got: usize },
    #[error("order {0} exceeds the single-byte maximum of 62")]
    OrderTooLarge(usize),
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("empty input")]
    Empty,
}

/// Decode one graph6 token; an optional ">>graph6<<" header is accepted.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let token = text.trim().strip_prefix(">>graph6<<").unwrap_or(text.trim());
    let bytes = token.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadChar(b));
        }
    }
    if bytes[0] == 126 {
        // Multi-byte order form always encodes n > 62.
        return Err(Graph6Error::OrderTooLarge(63));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expected = nbits.div_ceil(6);
    if bytes.len() - 1 != expected {
        return Err(Graph6Error::BadLength { order: n, expected, got: bytes.len() - 1 });
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    let mut pairs = Vec::with_capacity(nbits);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    for &b in &bytes[1..] {
        let group = b - 63;
        for k in 0..6 {
            let bit = group >> (5 - k) & 1;
            if idx < nbits {
                if bit == 1 {
                    let (u, v) = pairs[idx];
                    g = g.with_edge(u, v);
                }
            } else if bit == 1 {
                return Err(Graph6Error::NonzeroPadding);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Encode without header; exact inverse of [`decode_graph6`].
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut fill = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_is_question_mark() {
        let g = decode_graph6("?").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(encode_graph6(&g).unwrap(), "?");
    }

    #[test]
    fn four_regular_order_11() {
        // Printed alongside the size-22 4-regular graphs on 11 vertices.
        let g = decode_graph6("J?bFF`wN?{?").unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.size(), 22);
        assert_eq!(g.degree_sequence(), vec![4; 11]);
    }

    #[test]
    fn decode_matches_printed_edge_list() {
        let g = decode_graph6("J@yaig[gv@?").unwrap();
        let printed = "[(0, 4), (0, 5), (0, 9), (0, 10), (1, 4), (1, 6), (1, 7), (1, 10), \
                       (2, 3), (2, 4), (2, 5), (2, 9), (2, 10), (3, 6), (3, 7), (3, 8), \
                       (4, 8), (5, 6), (5, 7), (5, 8), (6, 9), (7, 9), (8, 10)]";
        let h = Graph::from_edge_list_text(printed).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn round_trip_is_identity() {
        for s in ["JObFF`wN?{?", "K?bAF`wN?{SO", "J?B@xzoyEo?", "KSrb`OTO?a`S", "D?{", "A_"] {
            let g = decode_graph6(s).unwrap();
            assert_eq!(encode_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn header_is_stripped() {
        let g = decode_graph6(">>graph6<<J?bFF`wN?{?").unwrap();
        assert_eq!(g.order(), 11);
    }

    #[test]
    fn errors_are_reported() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(decode_graph6("J\u{7f}"), Err(Graph6Error::BadChar(0x7f)));
        assert!(matches!(decode_graph6("JJ"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(decode_graph6("~??"), Err(Graph6Error::OrderTooLarge(_))));
        // Order 3 uses 3 of the 6 group bits; "@" sets a padding bit only.
        assert_eq!(decode_graph6("B@"), Err(Graph6Error::NonzeroPadding));
        // "w" = 0b111000 fills exactly the 3 data bits: K3.
        assert_eq!(decode_graph6("Bw").unwrap().size(), 3);
    }

    #[test]
    fn independent_bitstring_decoder_agrees() {
        // Second opinion: textual bit unpacking, no shared code with the
        // production decoder.
        fn decode_bits(s: &str) -> (usize, Vec<(usize, usize)>) {
            let b = s.as_bytes();
            let n = (b[0] - 63) as usize;
            let bits: String =
                b[1..].iter().map(|&c| format!("{:06b}", c - 63)).collect();
            let mut edges = Vec::new();
            let mut it = bits.chars();
            for v in 1..n {
                for u in 0..v {
                    if it.next() == Some('1') {
                        edges.push((u, v));
                    }
                }
            }
            (n, edges)
        }
        for s in ["J@yaig[gv@?", "JObFF`wN?{?", "L?tBP_SODGOS_T", "IEznfvm|o"] {
            let g = decode_graph6(s).unwrap();
            let (n, mut edges) = decode_bits(s);
            edges.sort_unstable();
            assert_eq!(g.order(), n);
            assert_eq!(g.edges().collect::<Vec<_>>(), edges);
        }
    }
}

//! graph6 codec (short form, n <= 62).
//!
//! One graph per ASCII line: an order byte `63 + n`, then
//! `ceil(n(n-1)/2 / 6)` payload bytes. Each payload byte holds six bits of
//! the upper triangle read in column-major order ((0,1), (0,2), (1,2),
//! (0,3), ...), most significant bit first, padded with zero bits. An
//! optional `>>graph6<<` header prefix is tolerated and stripped.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("order {0} not supported (short form caps at 62)")]
    UnsupportedOrder(usize),
    #[error("record length {got} does not match order {order} (expected {expected} bytes)")]
    BadLength {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("nonzero padding bit in final byte at offset {offset}")]
    TrailingBits { offset: usize },
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Leading `>>graph6<<` and trailing whitespace
/// are stripped.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let mut record = line.trim_end_matches(['\r', '\n']);
    record = record.strip_prefix(HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { offset, byte: b });
        }
    }
    if bytes[0] == 126 {
        // Long-form order prefix; out of scope for the short-form codec.
        return Err(Graph6Error::UnsupportedOrder(63));
    }
    let n = (bytes[0] - 63) as usize;
    let expected = 1 + payload_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            order: n,
            expected,
            got: bytes.len(),
        });
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut idx = 0;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6] - 63;
            if byte & (1 << (5 - idx % 6)) != 0 {
                g.add_edge_mut(i, j);
            }
            idx += 1;
            if idx == total_bits {
                break 'cols;
            }
        }
    }
    // Padding bits after the triangle must be zero.
    for idx in total_bits..payload_len(n) * 6 {
        let byte = bytes[1 + idx / 6] - 63;
        if byte & (1 << (5 - idx % 6)) != 0 {
            return Err(Graph6Error::TrailingBits {
                offset: 1 + idx / 6,
            });
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = vec![63 + n as u8];
    out.resize(1 + payload_len(n), 63);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + idx / 6] += 1 << (5 - idx % 6);
            }
            idx += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    // Hand-derived from the byte layout: order byte 63+n, then 6-bit groups
    // of the column-major upper triangle, MSB first.

    #[test]
    fn single_vertex_is_at_sign() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert_eq!(write_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn k2_is_a_underscore() {
        // n=2 -> 'A'; one pair bit set -> 0b100000 + 63 = 95 = '_'.
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
        assert!(g.has_edge(0, 1));
        assert_eq!(write_graph6(&families::complete(2).unwrap()).unwrap(), "A_");
    }

    #[test]
    fn two_isolated_vertices() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!((g.order(), g.size()), (2, 0));
    }

    #[test]
    fn zero_vertices() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(write_graph6(&g).unwrap(), "?");
    }

    #[test]
    fn header_is_stripped() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn known_encodings() {
        // C5 = cycle 0-1-2-3-4-0: pairs (0,1),(1,2),(2,3),(3,4),(0,4).
        // Column-major bits: (0,1)=1,(0,2)=0,(1,2)=1,(0,3)=0,(1,3)=0,(2,3)=1,
        // (0,4)=1,(1,4)=0,(2,4)=0,(3,4)=1 -> 101001 100100;
        // 0b101001=41+63=104='h'; 0b100100=36+63=99='c'.
        assert_eq!(write_graph6(&families::cycle(5).unwrap()).unwrap(), "Dhc");
        // K4: all six bits of n=4 set -> 0b111111 = 63+63=126='~'.
        assert_eq!(write_graph6(&families::complete(4).unwrap()).unwrap(), "C~");
    }

    #[test]
    fn parse_errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A!"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 1,
                byte: b'!'
            })
        );
        assert_eq!(
            parse_graph6("A"),
            Err(Graph6Error::BadLength {
                order: 2,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            parse_graph6("A_?"),
            Err(Graph6Error::BadLength {
                order: 2,
                expected: 2,
                got: 3
            })
        );
        // n=2 uses only the top bit of the payload byte; any lower bit is
        // nonzero padding. 0b000001 + 63 = 64 = '@'.
        assert_eq!(
            parse_graph6("A@"),
            Err(Graph6Error::TrailingBits { offset: 1 })
        );
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedOrder(63)));
    }

    #[test]
    fn oversized_graph_rejected_on_write() {
        let g = Graph::empty(63);
        assert_eq!(write_graph6(&g), Err(Graph6Error::UnsupportedOrder(63)));
    }

    #[test]
    fn round_trip_on_families() {
        for g in [
            families::cycle(7).unwrap(),
            families::complete(6).unwrap(),
            families::path(9).unwrap(),
            families::complete_multipartite(&[2, 3, 3]).unwrap(),
            families::graph_x().graph,
            Graph::empty(11),
            families::cycle(62).unwrap(),
        ] {
            let line = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&line).unwrap(), g);
        }
    }
}

//! graph6 interchange codec (one-byte header variant, n <= 62).
//!
//! The layout is the published one: the byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column-major order, six bits per
//! byte (most significant first), each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encodes a graph as graph6 text. Labels are preserved, not canonicalized.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    out.push(63 + n as u8);
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    // All bytes are printable ASCII in 63..=126.
    String::from_utf8(out).unwrap()
}

/// Decodes graph6 text into a graph with the encoded labeling.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let header = *bytes.first().ok_or(Error::Graph6 {
        offset: 0,
        reason: "empty input",
    })?;
    if header == 126 {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "orders above 62 are not supported",
        });
    }
    if !(63..126).contains(&header) {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "header byte outside 63..=125",
        });
    }
    let n = (header - 63) as usize;
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < 1 + nbytes {
        return Err(Error::Graph6 {
            offset: bytes.len(),
            reason: "truncated bit stream",
        });
    }
    if bytes.len() > 1 + nbytes {
        return Err(Error::Graph6 {
            offset: 1 + nbytes,
            reason: "trailing data after bit stream",
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6 {
                    offset: 1 + bit / 6,
                    reason: "payload byte outside 63..=126",
                });
            }
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if n == 0 {
        // The format admits n = 0; our Graph type starts at one vertex.
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty graph (n = 0) is not representable",
        });
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_small_complete_graphs() {
        let k2 = decode("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));

        let k3 = decode("Bw").unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));

        let k4 = decode("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
    }

    #[test]
    fn encodes_back() {
        assert_eq!(encode(&decode("A_").unwrap()), "A_");
        assert_eq!(encode(&decode("Bw").unwrap()), "Bw");
        assert_eq!(encode(&decode("C~").unwrap()), "C~");
        // 5-vertex path, labels preserved.
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(decode(&encode(&p5)).unwrap(), p5);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(decode(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(decode("C"), Err(Error::Graph6 { .. })));
        assert!(matches!(decode("C~~"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(decode("~??"), Err(Error::Graph6 { offset: 0, .. })));
    }
}

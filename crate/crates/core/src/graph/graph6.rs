//! The graph6 text format: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use alloc::string::String;
use alloc::vec::Vec;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated size header")]
    BadHeader,
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    TrailingBits,
    #[error("graph order {0} exceeds the supported maximum")]
    TooLarge(usize),
}

const HEADER_PREFIX: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(63 + n as u8);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | col.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut six = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
        six.push(byte - 63);
    }
    let (n, body) = if six[0] != 63 {
        (six[0] as usize, &six[1..])
    } else if six.len() >= 2 && six[1] == 63 {
        if six.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        let n = six[2..8].iter().fold(0usize, |a, &b| (a << 6) | b as usize);
        (n, &six[8..])
    } else {
        if six.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = six[1..4].iter().fold(0usize, |a, &b| (a << 6) | b as usize);
        (n, &six[4..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }
    if bits % 6 != 0 {
        let unused = 6 - bits % 6;
        if body[expected - 1] & ((1 << unused) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    let mut g = Graph::empty(n).map_err(|_| Graph6Error::TooLarge(n))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] >> (5 - k % 6)) & 1 == 1 {
                g.insert_edge(i, j).expect("indices below n");
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_packed_examples() {
        assert_eq!(graph6_encode(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(graph6_encode(&Graph::path(3).unwrap()), "Bg");
        assert_eq!(graph6_decode("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(graph6_encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(graph6_encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(
            graph6_decode(">>graph6<<Bg\n").unwrap(),
            Graph::path(3).unwrap()
        );
    }

    #[test]
    fn long_header_form() {
        let g = Graph::cycle(100).unwrap();
        let s = graph6_encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(&s.as_bytes()[1..4], &[63, 63 + 1, 63 + 36]);
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(graph6_decode(""), Err(Graph6Error::Empty));
        assert!(matches!(
            graph6_decode("B w"),
            Err(Graph6Error::BadByte { offset: 1, .. })
        ));
        assert_eq!(
            graph6_decode("B"),
            Err(Graph6Error::Length {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            graph6_decode("Bww"),
            Err(Graph6Error::Length {
                expected: 1,
                found: 2
            })
        );
        // K3 uses 3 of 6 bits; setting a padding bit must be rejected.
        assert_eq!(graph6_decode("Bx"), Err(Graph6Error::TrailingBits));
        assert_eq!(graph6_decode("~?"), Err(Graph6Error::BadHeader));
        assert_eq!(graph6_decode("~~??????"), Ok(Graph::empty(0).unwrap()));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn decode_inverts_encode(g in arb_graph(20)) {
            prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        }
    }
}

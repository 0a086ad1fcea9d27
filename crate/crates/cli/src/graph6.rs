//! graph6 encoding: the node count, then the upper triangle of the
//! adjacency matrix column by column (`(0,1), (0,2), (1,2), (0,3), …`),
//! six bits per printable byte offset by 63.

use ugqsym::graph::canonical;
use ugqsym::{CanonGraph, Error, LabeledGraph, Result};

const OFFSET: u8 = 63;
const MAX_NODES: usize = 258_047;

/// A decoded graph with its nominal node count; labels are 1-based and
/// isolated vertices are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6 {
    pub nodes: usize,
    pub edges: Vec<(u32, u32)>,
}

impl Graph6 {
    pub fn to_labeled(&self) -> Result<LabeledGraph> {
        LabeledGraph::from_edges(self.edges.iter().copied())
    }
}

fn byte_at(bytes: &[u8], offset: usize) -> Result<u8> {
    let b = *bytes
        .get(offset)
        .ok_or_else(|| Error::parse(offset, "unexpected end of graph6 string"))?;
    if !(OFFSET..=OFFSET + 63).contains(&b) {
        return Err(Error::parse(
            offset,
            format!("byte {b:#04x} outside graph6 range"),
        ));
    }
    Ok(b - OFFSET)
}

pub fn decode_raw(text: &str) -> Result<Graph6> {
    let bytes = text.as_bytes();
    let (nodes, mut pos) = if bytes.first() == Some(&b'~') {
        if bytes.get(1) == Some(&b'~') {
            return Err(Error::parse(
                1,
                "graph6 node counts above 258047 are unsupported",
            ));
        }
        let mut n = 0usize;
        for k in 1..=3 {
            n = n << 6 | byte_at(bytes, k)? as usize;
        }
        (n, 4)
    } else {
        (byte_at(bytes, 0)? as usize, 1)
    };
    let pairs = nodes * nodes.saturating_sub(1) / 2;
    let groups = pairs.div_ceil(6);
    if bytes.len() != pos + groups {
        return Err(Error::parse(
            bytes.len().min(pos + groups),
            format!(
                "expected {} bytes for {nodes} nodes, got {}",
                pos + groups,
                bytes.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    let mut current = 0u8;
    for j in 1..nodes {
        for i in 0..j {
            if bit % 6 == 0 {
                current = byte_at(bytes, pos)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
            bit += 1;
        }
    }
    let padding = (6 - bit % 6) % 6;
    if padding > 0 && current & ((1 << padding) - 1) != 0 {
        return Err(Error::parse(pos - 1, "nonzero padding bits"));
    }
    edges.sort();
    Ok(Graph6 { nodes, edges })
}

/// Encodes a graph on `nodes` vertices; every label must be at most `nodes`.
pub fn encode_raw(nodes: usize, edges: &[(u32, u32)]) -> Result<String> {
    if nodes > MAX_NODES {
        return Err(Error::Capacity {
            what: "graph6 node count",
            value: nodes,
            limit: MAX_NODES,
        });
    }
    let mut out = Vec::new();
    if nodes <= 62 {
        out.push(OFFSET + nodes as u8);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(OFFSET + (nodes >> shift & 63) as u8);
        }
    }
    let mut adjacent = vec![false; nodes * nodes];
    for &(i, j) in edges {
        let (i, j) = (i as usize, j as usize);
        if i == 0 || j == 0 || i > nodes || j > nodes || i == j {
            return Err(Error::Domain(format!(
                "edge {i}-{j} does not fit {nodes} nodes"
            )));
        }
        adjacent[(i - 1) * nodes + (j - 1)] = true;
        adjacent[(j - 1) * nodes + (i - 1)] = true;
    }
    let mut group = 0u8;
    let mut bit = 0;
    for j in 1..nodes {
        for i in 0..j {
            group = group << 1 | adjacent[i * nodes + j] as u8;
            bit += 1;
            if bit % 6 == 0 {
                out.push(OFFSET + group);
                group = 0;
            }
        }
    }
    if bit % 6 != 0 {
        out.push(OFFSET + (group << (6 - bit % 6)));
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// The canonical form of a graph6 string and its nominal node count.
pub fn decode_graph6(text: &str) -> Result<(CanonGraph, usize)> {
    let raw = decode_raw(text)?;
    Ok((canonical(&raw.to_labeled()?)?, raw.nodes))
}

/// graph6 of a canonical graph padded with isolated vertices up to `nodes`.
pub fn encode_graph6(g: &CanonGraph, nodes: usize) -> Result<String> {
    let edges: Vec<_> = g.edges().collect();
    encode_raw(nodes.max(g.node_count()), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cg(edges: &[(u32, u32)]) -> CanonGraph {
        CanonGraph::from_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_graph6("A_").unwrap(), (cg(&[(1, 2)]), 2));
        assert_eq!(
            decode_graph6("Bw").unwrap(),
            (cg(&[(1, 2), (1, 3), (2, 3)]), 3)
        );
        assert_eq!(decode_graph6("B?").unwrap(), (CanonGraph::empty(), 3));
        assert_eq!(decode_graph6("?").unwrap(), (CanonGraph::empty(), 0));
    }

    #[test]
    fn five_node_host() {
        let edges = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (3, 5)];
        assert_eq!(encode_raw(5, &edges).unwrap(), "D}g");
        let mut sorted = edges.to_vec();
        sorted.sort();
        assert_eq!(decode_raw("D}g").unwrap().edges, sorted);
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(
            decode_raw("Bw!"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            decode_raw("B"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            decode_raw("Bww"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            decode_raw("B\u{7f}"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            decode_raw("A`"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            decode_raw(""),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn long_header() {
        let path: Vec<(u32, u32)> = (1..70).map(|i| (i, i + 1)).collect();
        let s = encode_raw(70, &path).unwrap();
        assert!(s.starts_with("~?@E"));
        let back = decode_raw(&s).unwrap();
        assert_eq!((back.nodes, back.edges), (70, path));
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Vec<(u32, u32)>> {
        let pairs: Vec<(u32, u32)> = (1..=n as u32)
            .flat_map(|j| (1..j).map(move |i| (i, j)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut e: Vec<_> = (0..pairs.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| pairs[b])
                .collect();
            e.sort();
            e
        })
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 0..=5 {
            for edges in all_graphs(n) {
                let s = encode_raw(n, &edges).unwrap();
                let back = decode_raw(&s).unwrap();
                assert_eq!((back.nodes, &back.edges), (n, &edges));
                assert_eq!(encode_raw(back.nodes, &back.edges).unwrap(), s);
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn round_trip_sampled(n in 6usize..=8, mask in proptest::prelude::any::<u32>()) {
            let pairs: Vec<(u32, u32)> = (1..=n as u32)
                .flat_map(|j| (1..j).map(move |i| (i, j)))
                .collect();
            let mut edges: Vec<_> = (0..pairs.len())
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| pairs[b])
                .collect();
            edges.sort();
            let s = encode_raw(n, &edges).unwrap();
            let back = decode_raw(&s).unwrap();
            proptest::prop_assert_eq!(&back.edges, &edges);
            proptest::prop_assert_eq!(encode_raw(n, &back.edges).unwrap(), s);
        }
    }
}

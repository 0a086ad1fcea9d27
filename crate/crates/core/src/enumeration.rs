//! Orderly generation of canonical graphs and Euler transforms of count
//! series.
//!
//! Children of a canonical graph are formed by adding one edge that comes
//! after every existing edge in the variable order `x12, x13, x23, x14, ...`
//! and keeping the child only when it is its own canonical form. Removing
//! the last edge of a code-maximal graph leaves a code-maximal graph, so
//! every canonical graph is produced exactly once, from a unique parent.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_bit, Adjacency, CanonGraph};
use crate::{Limits, HARD_NODE_LIMIT};

/// Canonical graphs with `edge_count` edges and at most `max_nodes` nodes.
fn orderly_levels(max_nodes: usize, max_edges: usize) -> Vec<Vec<CanonGraph>> {
    let mut levels = vec![vec![CanonGraph::empty()]];
    for _ in 0..max_edges {
        let mut next = Vec::new();
        for parent in levels.last().expect("non-empty") {
            next.extend(orderly_children(parent, max_nodes));
        }
        next.sort();
        levels.push(next);
    }
    levels
}

fn orderly_children(parent: &CanonGraph, max_nodes: usize) -> Vec<CanonGraph> {
    let n = parent.node_count();
    let base = parent.adjacency();
    // a new edge must be less significant than every existing one
    let last_bit = match parent.code() {
        0 => None,
        code => Some(1u128 << code.trailing_zeros()),
    };
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for j in 1..n {
        candidates.extend((0..j).filter(|&i| !base.has(i, j)).map(|i| (i, j)));
    }
    if n < max_nodes {
        candidates.extend((0..n).map(|i| (i, n)));
    }
    if n + 2 <= max_nodes {
        candidates.push((n, n + 1));
    }
    let mut out = Vec::new();
    for (i, j) in candidates {
        let bit = pair_bit(i, j);
        if last_bit.is_some_and(|last| bit >= last) {
            continue;
        }
        let mut adj = Adjacency::new(n.max(j + 1));
        adj.rows = base.rows;
        adj.add(i, j);
        let canon = adj.canonical();
        if canon.code() == parent.code() | bit {
            out.push(canon);
        }
    }
    out
}

/// All canonical graphs with exactly `m` edges and no isolated vertex.
pub fn generate_by_edges(m: usize, limits: &Limits) -> Result<Vec<CanonGraph>> {
    Limits::check("edge count", m, limits.max_edges)?;
    Limits::check("node count", 2 * m, HARD_NODE_LIMIT)?;
    Ok(orderly_levels(2 * m, m).pop().expect("level m"))
}

/// All canonical graphs with at most `n` nodes and no isolated vertex, one
/// per isomorphism class of graphs on exactly `n` vertices.
pub fn generate_by_nodes(n: usize, limits: &Limits) -> Result<Vec<CanonGraph>> {
    Limits::check("node count", n, limits.max_generated_nodes)?;
    Limits::check("node count", n, HARD_NODE_LIMIT)?;
    let mut all: Vec<CanonGraph> = orderly_levels(n, n * n.saturating_sub(1) / 2)
        .into_iter()
        .flatten()
        .collect();
    all.sort();
    Ok(all)
}

pub fn filter_connected(graphs: &[CanonGraph]) -> Vec<CanonGraph> {
    graphs
        .iter()
        .filter(|g| g.component_count() == 1)
        .cloned()
        .collect()
}

/// Connected canonical graphs with exactly `m >= 1` edges. Every connected
/// graph loses an edge and stays connected (up to an isolated vertex), so
/// growing connected graphs one edge at a time reaches all of them. Needs
/// only `m + 1` nodes, against `2m` for [`generate_by_edges`].
pub fn generate_connected_by_edges(m: usize, limits: &Limits) -> Result<Vec<CanonGraph>> {
    Limits::check("edge count", m, limits.max_edges)?;
    Limits::check("node count", m + 1, HARD_NODE_LIMIT)?;
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<CanonGraph> = [CanonGraph::from_edges([(1, 2)])?].into_iter().collect();
    for _ in 1..m {
        let mut next = BTreeSet::new();
        for g in &level {
            let n = g.node_count();
            let base = g.adjacency();
            for j in 1..=n {
                for i in 0..j {
                    if j < n && base.has(i, j) {
                        continue;
                    }
                    let mut adj = Adjacency::new(n.max(j + 1));
                    adj.rows = base.rows;
                    adj.add(i, j);
                    next.insert(adj.canonical());
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Graphs with `m` edges by naive closure: add every possible edge to every
/// graph of the previous level, canonicalize, deduplicate.
pub fn generate_by_edges_naive(m: usize) -> Result<Vec<CanonGraph>> {
    Limits::check("node count", 2 * m, HARD_NODE_LIMIT)?;
    let mut level: BTreeSet<CanonGraph> = [CanonGraph::empty()].into_iter().collect();
    for _ in 0..m {
        let mut next = BTreeSet::new();
        for g in &level {
            let n = g.node_count();
            let base = g.adjacency();
            for j in 1..n + 2 {
                for i in 0..j {
                    if i < n && j < n && base.has(i, j) {
                        continue;
                    }
                    let mut adj = Adjacency::new(n + 2);
                    adj.rows = base.rows;
                    adj.add(i, j);
                    next.insert(adj.canonical());
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Coefficients `c_0, c_1, ...` of a counting series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountSeries(pub Vec<u64>);

impl CountSeries {
    pub fn get(&self, n: usize) -> Option<u64> {
        self.0.get(n).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u64>> for CountSeries {
    fn from(v: Vec<u64>) -> Self {
        CountSeries(v)
    }
}

/// Coefficients `0..=upto` of `prod_{n>0} (1 - q^n)^(-c(n))`, expanding each
/// factor as `sum_k C(c(n) + k - 1, k) q^(nk)`.
pub fn euler_transform(c: &CountSeries, upto: usize) -> Result<CountSeries> {
    if c.len() <= upto {
        return Err(Error::domain(format!(
            "series has {} coefficients, need indices 1..={upto}",
            c.len()
        )));
    }
    let overflow = || Error::domain("coefficient overflow in Euler transform");
    let mut acc = vec![0u64; upto + 1];
    acc[0] = 1;
    for n in 1..=upto {
        let a = c.0[n];
        if a == 0 {
            continue;
        }
        // multiset coefficients C(a + k - 1, k) for k = 0..=upto/n
        let mut factor = vec![0u64; upto / n + 1];
        factor[0] = 1;
        for k in 1..factor.len() {
            let num = (factor[k - 1] as u128) * (a as u128 + k as u128 - 1);
            factor[k] = u64::try_from(num / k as u128).map_err(|_| overflow())?;
        }
        let mut next = vec![0u64; upto + 1];
        for (d, &x) in acc.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (k, &f) in factor.iter().enumerate() {
                let e = d + n * k;
                if e > upto {
                    break;
                }
                let term = x.checked_mul(f).ok_or_else(overflow)?;
                next[e] = next[e].checked_add(term).ok_or_else(overflow)?;
            }
        }
        acc = next;
    }
    Ok(CountSeries(acc))
}

/// Counts of graphs by edges (`0..=m`): all, connected. The edgeless graph
/// (a single vertex) counts as connected at index 0.
pub fn counts_by_edges(m: usize, limits: &Limits) -> Result<(CountSeries, CountSeries)> {
    Limits::check("edge count", m, limits.max_edges)?;
    Limits::check("node count", 2 * m, HARD_NODE_LIMIT)?;
    let levels = orderly_levels(2 * m, m);
    let all = levels.iter().map(|l| l.len() as u64).collect();
    let mut connected: Vec<u64> = levels
        .iter()
        .map(|l| filter_connected(l).len() as u64)
        .collect();
    connected[0] = 1;
    Ok((CountSeries(all), CountSeries(connected)))
}

/// Counts of graphs on exactly `k` nodes (`k = 0..=n`): all, connected.
/// Index 0 and 1 count the empty and single-vertex graphs.
pub fn counts_by_nodes(n: usize, limits: &Limits) -> Result<(CountSeries, CountSeries)> {
    let graphs = generate_by_nodes(n, limits)?;
    let mut all = vec![0u64; n + 1];
    let mut connected = vec![0u64; n + 1];
    for g in &graphs {
        let v = g.node_count();
        // a graph on <= k nodes, padded, is a graph on exactly k nodes
        for slot in all.iter_mut().skip(v) {
            *slot += 1;
        }
        if g.component_count() == 1 {
            connected[v] += 1;
        }
    }
    // single vertex, and the usual a(0) = 1 convention
    connected[0] = 1;
    if n >= 1 {
        connected[1] = 1;
    }
    Ok((CountSeries(all), CountSeries(connected)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical, LabeledGraph};

    const GRAPH_EDGE: [u64; 9] = [1, 1, 2, 5, 11, 26, 68, 177, 497];
    const CONNECTED_EDGE: [u64; 10] = [1, 1, 1, 3, 5, 12, 30, 79, 227, 710];
    const GRAPH_NODE: [u64; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];
    const CONNECTED_NODE: [u64; 8] = [1, 1, 1, 2, 6, 21, 112, 853];

    fn cg(edges: &[(u32, u32)]) -> CanonGraph {
        CanonGraph::from_edges(edges.iter().copied()).unwrap()
    }

    /// Euler transform by the divisor-sum recurrence, independent of the
    /// product expansion above.
    fn euler_recurrence(a: &[u64], upto: usize) -> Vec<u64> {
        let c: Vec<i128> = (0..=upto)
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    (1..=k)
                        .filter(|d| k % d == 0)
                        .map(|d| d as i128 * a[d] as i128)
                        .sum()
                }
            })
            .collect();
        let mut b = vec![1i128];
        for n in 1..=upto {
            let s: i128 = (1..=n).map(|k| c[k] * b[n - k]).sum();
            assert_eq!(s % n as i128, 0);
            b.push(s / n as i128);
        }
        b.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn by_edges_examples() {
        let l = Limits::default();
        assert_eq!(generate_by_edges(0, &l).unwrap(), vec![CanonGraph::empty()]);
        assert_eq!(
            generate_by_edges(2, &l).unwrap(),
            vec![cg(&[(1, 2), (2, 3)]), cg(&[(1, 2), (3, 4)])]
        );
        assert_eq!(generate_by_edges(3, &l).unwrap().len(), 5);
        let limits = Limits { max_edges: 3, ..l };
        assert!(matches!(
            generate_by_edges(4, &limits),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn by_nodes_examples() {
        let l = Limits::default();
        let three = generate_by_nodes(3, &l).unwrap();
        assert_eq!(
            three,
            vec![
                CanonGraph::empty(),
                cg(&[(1, 2)]),
                cg(&[(1, 2), (2, 3)]),
                cg(&[(1, 2), (1, 3), (2, 3)])
            ]
        );
        assert_eq!(generate_by_nodes(4, &l).unwrap().len(), 11);
        assert_eq!(generate_by_nodes(0, &l).unwrap(), vec![CanonGraph::empty()]);
        assert!(generate_by_nodes(8, &l).is_err());
    }

    #[test]
    fn connected_filter_examples() {
        let l = Limits::default();
        let three = filter_connected(&generate_by_edges(3, &l).unwrap());
        assert_eq!(
            three,
            vec![
                cg(&[(1, 2), (1, 3), (2, 3)]),
                cg(&[(1, 2), (1, 3), (1, 4)]),
                cg(&[(1, 2), (2, 3), (3, 4)])
            ]
        );
        assert_eq!(
            filter_connected(&generate_by_edges(4, &l).unwrap()).len(),
            5
        );
        assert_eq!(
            filter_connected(&generate_by_edges(1, &l).unwrap()),
            vec![cg(&[(1, 2)])]
        );
    }

    #[test]
    fn orderly_matches_naive_closure() {
        for m in 0..=5 {
            let orderly = generate_by_edges(m, &Limits::default()).unwrap();
            assert_eq!(orderly, generate_by_edges_naive(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn orderly_matches_all_subsets() {
        // canonicalize every m-subset of the pairs on 2m labels
        for m in 0..=4usize {
            let n = 2 * m as u32;
            let pairs: Vec<(u32, u32)> =
                (1..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
            let mut seen = BTreeSet::new();
            let mut idx: Vec<usize> = (0..m).collect();
            loop {
                let g = LabeledGraph::from_edges(idx.iter().map(|&i| pairs[i])).unwrap();
                seen.insert(canonical(&g).unwrap());
                let mut i = m;
                while i > 0 && idx[i - 1] == pairs.len() - m + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                for t in i..m {
                    idx[t] = idx[t - 1] + 1;
                }
            }
            let seen: Vec<_> = seen.into_iter().collect();
            assert_eq!(generate_by_edges(m, &Limits::default()).unwrap(), seen);
        }
    }

    #[test]
    fn generated_graphs_are_canonical_and_distinct() {
        let graphs = generate_by_nodes(6, &Limits::default()).unwrap();
        let set: BTreeSet<_> = graphs.iter().cloned().collect();
        assert_eq!(set.len(), graphs.len());
        for g in &graphs {
            assert_eq!(&canonical(&g.to_labeled()).unwrap(), g);
        }
        assert!(graphs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn node_and_edge_generation_agree() {
        let l = Limits::default();
        let by_nodes = generate_by_nodes(5, &l).unwrap();
        for m in 0..=5 {
            let from_nodes: Vec<_> = by_nodes
                .iter()
                .filter(|g| g.edge_count() == m)
                .cloned()
                .collect();
            let from_edges: Vec<_> = generate_by_edges(m, &l)
                .unwrap()
                .into_iter()
                .filter(|g| g.node_count() <= 5)
                .collect();
            assert_eq!(from_nodes, from_edges);
        }
    }

    #[test]
    fn sequences_by_edges() {
        let (all, connected) = counts_by_edges(8, &Limits::default()).unwrap();
        assert_eq!(all.0, GRAPH_EDGE);
        assert_eq!(connected.0, CONNECTED_EDGE[..9]);
    }

    #[test]
    fn connected_growth_matches_filter() {
        let limits = Limits {
            max_edges: 9,
            ..Limits::default()
        };
        for m in 1..=7 {
            assert_eq!(
                generate_connected_by_edges(m, &limits).unwrap(),
                filter_connected(&generate_by_edges(m, &limits).unwrap())
            );
        }
        assert_eq!(generate_connected_by_edges(9, &limits).unwrap().len(), 710);
        assert!(generate_connected_by_edges(0, &limits).unwrap().is_empty());
        assert!(generate_connected_by_edges(10, &limits).is_err());
    }

    #[test]
    fn sequences_by_nodes() {
        let (all, connected) = counts_by_nodes(7, &Limits::default()).unwrap();
        assert_eq!(all.0, GRAPH_NODE);
        assert_eq!(connected.0, CONNECTED_NODE);
    }

    #[test]
    fn euler_transform_examples() {
        let t = euler_transform(&CountSeries(CONNECTED_EDGE.to_vec()), 8).unwrap();
        assert_eq!(t.0, GRAPH_EDGE);
        let geometric = CountSeries(vec![0, 1, 0, 0, 0, 0]);
        assert_eq!(euler_transform(&geometric, 5).unwrap().0, vec![1; 6]);
        let t = euler_transform(&CountSeries(CONNECTED_NODE.to_vec()), 7).unwrap();
        assert_eq!(t.0, GRAPH_NODE);
        assert!(euler_transform(&geometric, 6).is_err());
    }

    #[test]
    fn euler_transform_matches_recurrence() {
        for seq in [
            &CONNECTED_EDGE[..],
            &CONNECTED_NODE[..],
            &[0, 2, 1, 3, 0, 7, 1][..],
        ] {
            let upto = seq.len() - 1;
            assert_eq!(
                euler_transform(&CountSeries(seq.to_vec()), upto).unwrap().0,
                euler_recurrence(seq, upto)
            );
        }
    }
}

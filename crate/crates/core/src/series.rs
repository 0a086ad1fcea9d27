//! Truncations of `M_G` and their evaluation on host graphs.
//!
//! `M_G` is the sum of `m(g)` over all labelings `g` of `G` by positive
//! integers. Keeping only labels `<= N` gives a polynomial with
//! `C(N, n) * n! / |Aut(G)|` monomials. Evaluating at the adjacency bits of a
//! host counts the subgraphs (edge subsets) of the host isomorphic to `G`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{self, Adjacency, CanonGraph, Label, LabeledGraph};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    pub pattern: CanonGraph,
    pub max_label: usize,
    #[serde(serialize_with = "serialize_monomials")]
    pub monomials: BTreeSet<LabeledGraph>,
}

fn serialize_monomials<S: serde::Serializer>(
    monomials: &BTreeSet<LabeledGraph>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        monomials
            .iter()
            .map(|g| g.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>()),
    )
}

impl TruncatedSeries {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Value of the polynomial at the 0/1 point given by `host`'s edges.
    pub fn evaluate_at(&self, host: &LabeledGraph) -> u64 {
        self.monomials
            .iter()
            .filter(|m| m.is_subgraph_of(host))
            .count() as u64
    }
}

/// All labeled copies of `pattern` using labels `1..=max_label`.
pub fn expand(pattern: &CanonGraph, max_label: usize, limits: &Limits) -> Result<TruncatedSeries> {
    Limits::check("label bound", max_label, limits.max_label)?;
    let n = pattern.node_count();
    let mut monomials = BTreeSet::new();
    if n <= max_label {
        let orbit = graph::orbit(pattern)?;
        for chosen in increasing_sequences(max_label, n) {
            for g in &orbit {
                let relabeled = g
                    .edges()
                    .map(|(i, j)| (chosen[i as usize - 1], chosen[j as usize - 1]));
                monomials.insert(LabeledGraph::from_edges(relabeled)?);
            }
        }
        if n == 0 {
            // the unit series is the single empty monomial
            monomials.insert(LabeledGraph::empty());
        }
    }
    Ok(TruncatedSeries {
        pattern: pattern.clone(),
        max_label,
        monomials,
    })
}

/// `r_1 < ... < r_k` drawn from `1..=n`.
fn increasing_sequences(n: usize, k: usize) -> Vec<Vec<Label>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x as Label);
            go(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 1, &mut cur, &mut out);
    out
}

/// `M_G(H)`: the number of subgraphs of `host` isomorphic to `pattern`.
///
/// Counts injective edge-preserving maps from the pattern into the host by
/// backtracking and divides by `|Aut(pattern)|`.
pub fn evaluate(pattern: &CanonGraph, host: &CanonGraph) -> u64 {
    if pattern.is_empty() {
        return 1;
    }
    if pattern.node_count() > host.node_count() || pattern.edge_count() > host.edge_count() {
        return 0;
    }
    let p = pattern.adjacency();
    let h = host.adjacency();
    // place high-degree vertices first, then keep the placed set connected
    let mut order = Vec::with_capacity(p.n);
    let mut placed = 0u16;
    while order.len() < p.n {
        let next = (0..p.n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (p.rows[v] & placed).count_ones(),
                    p.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1 << next;
    }
    let mut images = vec![0usize; p.n];
    let maps = count_embeddings(&p, &h, &order, &mut images, 0, 0);
    let aut = graph::automorphism_count(pattern);
    debug_assert_eq!(maps % aut, 0);
    maps / aut
}

fn count_embeddings(
    p: &Adjacency,
    h: &Adjacency,
    order: &[usize],
    images: &mut [usize],
    k: usize,
    used: u16,
) -> u64 {
    if k == order.len() {
        return 1;
    }
    let v = order[k];
    // host vertices adjacent to the images of all placed neighbours of v
    let mut candidates: u16 = ((1u32 << h.n) - 1) as u16 & !used;
    for (q, &u) in order[..k].iter().enumerate() {
        if p.has(u, v) {
            candidates &= h.rows[images[q]];
        }
    }
    let need = p.degree(v);
    let mut total = 0;
    while candidates != 0 {
        let w = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if h.degree(w) < need {
            continue;
        }
        images[k] = w;
        total += count_embeddings(p, h, order, images, k + 1, used | 1 << w);
    }
    total
}

/// Reference count: edge subsets of the host of the pattern's size whose
/// canonical form is the pattern.
pub fn evaluate_oracle(pattern: &CanonGraph, host: &CanonGraph) -> u64 {
    let edges: Vec<(Label, Label)> = host.edges().collect();
    let k = pattern.edge_count();
    if k > edges.len() {
        return 0;
    }
    let mut count = 0;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let subset = idx.iter().map(|&i| edges[i]);
        let g = LabeledGraph::from_edges(subset).expect("host edges are valid");
        if graph::canonical(&g).expect("subgraph within host size") == *pattern {
            count += 1;
        }
        // next k-combination of 0..edges.len()
        let m = edges.len();
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for t in i..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
    count
}

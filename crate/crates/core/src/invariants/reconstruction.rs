//! Vertex-deleted decks and Kelly's identity
//! `Σ_i M_G(H_i) = (n - r) · M_G(H)` for `G` on `r < n` nodes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::CanonGraph;
use crate::series::evaluate;

/// One card per vertex of an `n`-node host. Cards drop isolated vertices
/// but nominally have `n - 1` nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Deck {
    pub n: usize,
    pub cards: Vec<CanonGraph>,
}

impl Deck {
    pub fn card_nodes(&self) -> usize {
        self.n - 1
    }
}

/// Deck of `host` viewed on `n >= host.node_count()` vertices; the extra
/// vertices are isolated.
pub fn deck_on(host: &CanonGraph, n: usize) -> Result<Deck> {
    if n < 3 {
        return Err(Error::domain(format!(
            "deck needs at least 3 nodes, got {n}"
        )));
    }
    if host.node_count() > n {
        return Err(Error::domain(format!("host has more than {n} nodes")));
    }
    let mut cards: Vec<CanonGraph> = (0..n)
        .map(|v| {
            if v < host.node_count() {
                host.delete_vertices(1 << v)
            } else {
                host.clone()
            }
        })
        .collect();
    cards.sort();
    Ok(Deck { n, cards })
}

pub fn deck(host: &CanonGraph) -> Result<Deck> {
    deck_on(host, host.node_count())
}

/// Both orientations of the identity. `printed_*` is the variant
/// `M_G(H) = (n - r) Σ_i M_G(H_i)`, which only holds when `M_G(H) = 0` or
/// `n - r = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KellyCheck {
    pub r: usize,
    pub n: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub printed_lhs: u64,
    pub printed_rhs: u64,
    pub printed_holds: bool,
}

pub fn kelly_check_on(pattern: &CanonGraph, host: &CanonGraph, n: usize) -> Result<KellyCheck> {
    kelly_check_with(pattern, host, n, evaluate)
}

/// Like [`kelly_check_on`] with a caller-supplied counting function.
pub fn kelly_check_with(
    pattern: &CanonGraph,
    host: &CanonGraph,
    n: usize,
    count: impl Fn(&CanonGraph, &CanonGraph) -> u64,
) -> Result<KellyCheck> {
    let r = pattern.node_count();
    if r >= n {
        return Err(Error::domain(format!(
            "pattern has {r} nodes, host only {n}"
        )));
    }
    let deck = deck_on(host, n)?;
    let whole = count(pattern, host);
    let sum: u64 = deck.cards.iter().map(|c| count(pattern, c)).sum();
    let factor = (n - r) as u64;
    Ok(KellyCheck {
        r,
        n,
        lhs: factor * whole,
        rhs: sum,
        holds: factor * whole == sum,
        printed_lhs: whole,
        printed_rhs: factor * sum,
        printed_holds: whole == factor * sum,
    })
}

pub fn kelly_check(pattern: &CanonGraph, host: &CanonGraph) -> Result<KellyCheck> {
    kelly_check_on(pattern, host, host.node_count())
}

fn binom(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn named(edges: &[(u32, u32)]) -> CanonGraph {
    CanonGraph::from_edges(edges.iter().copied()).expect("fixed small graph")
}

/// Sides `(left, right)` of `C(M_K2, 2) = M_P3` and `C(M_K2, 3) = M_K3`,
/// valid on hosts with 3 nodes.
pub fn three_node_identities(
    host: &CanonGraph,
    count: impl Fn(&CanonGraph, &CanonGraph) -> u64,
) -> [(i64, i64); 2] {
    let e = count(&named(&[(1, 2)]), host);
    let p3 = count(&named(&[(1, 2), (2, 3)]), host) as i64;
    let k3 = count(&named(&[(1, 2), (1, 3), (2, 3)]), host) as i64;
    [(binom(e, 2), p3), (binom(e, 3), k3)]
}

/// Sides of the two identities valid on hosts with 4 nodes:
/// `C(M_K2, 3) - M_K3 = M_K13 + M_P4` and
/// `M_P3 (M_K2 - 2) - 3 M_K3 = 3 M_K13 + 2 M_P4`.
pub fn four_node_identities(
    host: &CanonGraph,
    count: impl Fn(&CanonGraph, &CanonGraph) -> u64,
) -> [(i64, i64); 2] {
    let c = |edges: &[(u32, u32)]| count(&named(edges), host) as i64;
    let e = c(&[(1, 2)]);
    let p3 = c(&[(1, 2), (2, 3)]);
    let k3 = c(&[(1, 2), (1, 3), (2, 3)]);
    let claw = c(&[(1, 2), (1, 3), (1, 4)]);
    let p4 = c(&[(1, 2), (2, 3), (3, 4)]);
    [
        (binom(e as u64, 3) - k3, claw + p4),
        (p3 * (e - 2) - 3 * k3, 3 * claw + 2 * p4),
    ]
}

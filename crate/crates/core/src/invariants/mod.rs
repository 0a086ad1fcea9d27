//! Separating families of `M_G`, invariant vectors and the isomorphism
//! test, the subgraph-count matrix, decks and boolean evaluations.
//!
//! Two graphs on `n` nodes are isomorphic iff they agree on every `M_G`
//! with `G` connected, on at most `n` nodes, with at most `⌊C(n,2)/2⌋`
//! edges.

pub mod boolean;
pub mod reconstruction;

use std::cmp::{Ordering, Reverse};

use serde::Serialize;

use crate::enumeration::{filter_connected, generate_by_nodes};
use crate::error::{Error, Result};
use crate::graph::CanonGraph;
use crate::series::evaluate;
use crate::Limits;

pub use boolean::{
    columns, elementary_eval, partitions, standard_tableaux, vandermonde_value,
    vandermonde_vanishes, BooleanVector,
};
pub use reconstruction::{
    deck, deck_on, four_node_identities, kelly_check, kelly_check_on, kelly_check_with,
    three_node_identities, Deck, KellyCheck,
};

/// Largest edge count in the separating family for hosts on `n` nodes.
pub fn family_edge_bound(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2 / 2).max(1)
}

/// Connected graphs on at most `n` nodes with between 1 and
/// `max(1, ⌊C(n,2)/2⌋)` edges, in ascending [`CanonGraph`] order.
pub fn separating_family(n: usize, limits: &Limits) -> Result<Vec<CanonGraph>> {
    if n < 2 {
        return Err(Error::domain(format!(
            "separating family needs n >= 2, got {n}"
        )));
    }
    let bound = family_edge_bound(n);
    let mut family: Vec<CanonGraph> = filter_connected(&generate_by_nodes(n, limits)?)
        .into_iter()
        .filter(|g| !g.is_empty() && g.edge_count() <= bound)
        .collect();
    family.sort();
    Ok(family)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantVector {
    pub n: usize,
    pub entries: Vec<(CanonGraph, u64)>,
}

impl InvariantVector {
    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|(_, v)| *v).collect()
    }
}

/// Evaluates `host` on a precomputed family.
pub fn invariant_vector_with(
    host: &CanonGraph,
    n: usize,
    family: &[CanonGraph],
) -> Result<InvariantVector> {
    if host.node_count() > n {
        return Err(Error::domain(format!(
            "host has {} nodes, more than n = {n}",
            host.node_count()
        )));
    }
    Ok(InvariantVector {
        n,
        entries: family
            .iter()
            .map(|g| (g.clone(), evaluate(g, host)))
            .collect(),
    })
}

pub fn invariant_vector(host: &CanonGraph, n: usize, limits: &Limits) -> Result<InvariantVector> {
    invariant_vector_with(host, n, &separating_family(n, limits)?)
}

/// Isomorphism by comparing invariant vectors, both hosts padded to the
/// larger node count.
pub fn iso_test(h1: &CanonGraph, h2: &CanonGraph, limits: &Limits) -> Result<bool> {
    let n = h1.node_count().max(h2.node_count()).max(2);
    let family = separating_family(n, limits)?;
    Ok(invariant_vector_with(h1, n, &family)? == invariant_vector_with(h2, n, &family)?)
}

/// One CSV row per vector, columns headed by the pattern edge lists.
pub fn vectors_to_csv(hosts: &[CanonGraph], vectors: &[InvariantVector]) -> String {
    let label = |g: &CanonGraph| {
        g.edges()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::from("host");
    if let Some(first) = vectors.first() {
        for (g, _) in &first.entries {
            out.push(',');
            out.push_str(&label(g));
        }
    }
    out.push('\n');
    for (h, v) in hosts.iter().zip(vectors) {
        out.push_str(&label(h));
        for x in v.values() {
            out.push_str(&format!(",{x}"));
        }
        out.push('\n');
    }
    out
}

/// Order of the subgraph-count table: node count, then edge count, then
/// canonical code descending.
pub fn matrix_order(a: &CanonGraph, b: &CanonGraph) -> Ordering {
    (a.node_count(), a.edge_count(), Reverse(a.code())).cmp(&(
        b.node_count(),
        b.edge_count(),
        Reverse(b.code()),
    ))
}

/// The `k` smallest nonempty graphs in [`matrix_order`].
pub fn smallest_graphs(k: usize, limits: &Limits) -> Result<Vec<CanonGraph>> {
    let mut n = 2;
    loop {
        let mut graphs: Vec<CanonGraph> = generate_by_nodes(n, limits)?
            .into_iter()
            .filter(|g| !g.is_empty())
            .collect();
        // graphs with more nodes sort after all of these
        if graphs.len() >= k {
            graphs.sort_by(matrix_order);
            graphs.truncate(k);
            return Ok(graphs);
        }
        n += 1;
    }
}

/// `rows[h][g] = M_g(h)`.
pub fn subgraph_count_matrix(graphs: &[CanonGraph]) -> Vec<Vec<u64>> {
    graphs
        .iter()
        .map(|h| graphs.iter().map(|g| evaluate(g, h)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{relabel, Label, Permutation};
    use crate::series::evaluate_oracle;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn g(edges: &[(Label, Label)]) -> CanonGraph {
        CanonGraph::from_edges(edges.iter().copied()).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn family_examples() {
        assert_eq!(separating_family(3, &limits()).unwrap(), vec![g(&[(1, 2)])]);
        let four = separating_family(4, &limits()).unwrap();
        assert_eq!(
            four,
            vec![
                g(&[(1, 2)]),
                g(&[(1, 2), (2, 3)]),
                g(&[(1, 2), (1, 3), (2, 3)]),
                g(&[(1, 2), (1, 3), (1, 4)]),
                g(&[(1, 2), (2, 3), (3, 4)]),
            ]
        );
        let five = separating_family(5, &limits()).unwrap();
        assert!(five
            .iter()
            .all(|x| x.is_connected() && x.node_count() <= 5 && x.edge_count() <= 5));
        let all5 = generate_by_nodes(5, &limits()).unwrap();
        let want = all5
            .iter()
            .filter(|x| !x.is_empty() && x.is_connected() && x.edge_count() <= 5)
            .count();
        assert_eq!(five.len(), want);
        assert_eq!(separating_family(2, &limits()).unwrap(), vec![g(&[(1, 2)])]);
        assert!(separating_family(1, &limits()).is_err());
        assert!(separating_family(8, &limits()).is_err());
    }

    fn second_to_last() -> CanonGraph {
        smallest_graphs(23, &limits()).unwrap()[21].clone()
    }

    fn bowtie() -> CanonGraph {
        g(&[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
    }

    #[test]
    fn bolded_rows() {
        let graphs = smallest_graphs(23, &limits()).unwrap();
        assert_eq!(graphs[22], bowtie());
        let (k2, p3, k3, two_k2) = (
            g(&[(1, 2)]),
            g(&[(1, 2), (2, 3)]),
            g(&[(1, 2), (1, 3), (2, 3)]),
            g(&[(1, 2), (3, 4)]),
        );
        let claw = g(&[(1, 2), (1, 3), (1, 4)]);
        for (host, claws) in [(second_to_last(), 3), (bowtie(), 4)] {
            let v = invariant_vector(&host, 5, &limits()).unwrap();
            let first: Vec<_> = v.entries[..3].to_vec();
            assert_eq!(
                first,
                vec![(k2.clone(), 6), (p3.clone(), 10), (k3.clone(), 2)]
            );
            assert_eq!(evaluate(&two_k2, &host), 5);
            assert_eq!(v.entries[3], (claw.clone(), claws));
        }
        assert!(!iso_test(&second_to_last(), &bowtie(), &limits()).unwrap());
    }

    #[test]
    fn iso_examples() {
        let l = limits();
        assert!(!iso_test(&g(&[(1, 2), (1, 3), (2, 3)]), &g(&[(1, 2), (2, 3)]), &l).unwrap());
        let h = g(&[(1, 2), (2, 3), (3, 4), (1, 5)]);
        let moved = relabel(
            &h.to_labeled(),
            &Permutation::new(vec![3, 5, 1, 2, 4]).unwrap(),
        )
        .unwrap();
        assert!(iso_test(&h, &crate::graph::canonical(&moved).unwrap(), &l).unwrap());
        let v = invariant_vector(&g(&[(1, 2)]), 3, &l).unwrap();
        assert_eq!(v.entries, vec![(g(&[(1, 2)]), 1)]);
        assert!(invariant_vector(&bowtie(), 4, &l).is_err());
    }

    fn criterion_holds_on(
        hosts: &[CanonGraph],
        n: usize,
        pairs: impl Iterator<Item = (usize, usize)>,
    ) {
        let family = separating_family(n, &limits()).unwrap();
        let vectors: Vec<_> = hosts
            .iter()
            .map(|h| invariant_vector_with(h, n, &family).unwrap())
            .collect();
        for (a, b) in pairs {
            assert_eq!(
                vectors[a] == vectors[b],
                hosts[a] == hosts[b],
                "{} vs {}",
                hosts[a],
                hosts[b]
            );
        }
    }

    #[test]
    fn criterion_exhaustive_small() {
        for n in 3..=5 {
            let hosts = generate_by_nodes(n, &limits()).unwrap();
            let k = hosts.len();
            criterion_holds_on(&hosts, n, (0..k).flat_map(|a| (0..k).map(move |b| (a, b))));
        }
    }

    #[test]
    fn criterion_six_nodes() {
        let hosts = generate_by_nodes(6, &limits()).unwrap();
        let k = hosts.len();
        let mut degrees: Vec<Vec<usize>> = hosts
            .iter()
            .map(|h| {
                let mut d = h.degrees();
                d.resize(6, 0);
                d.sort();
                d
            })
            .collect();
        let same: Vec<(usize, usize)> = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .filter(|&(a, b)| degrees[a] == degrees[b])
            .collect();
        assert!(!same.is_empty());
        let mut rng = StdRng::seed_from_u64(6);
        let random: Vec<(usize, usize)> = (0..500)
            .map(|_| (rng.gen_range(0..k), rng.gen_range(0..k)))
            .collect();
        degrees.clear();
        criterion_holds_on(&hosts, 6, same.into_iter().chain(random));
    }

    #[test]
    fn smallest_graphs_prefix() {
        let graphs = smallest_graphs(23, &limits()).unwrap();
        assert_eq!(graphs.len(), 23);
        assert_eq!(graphs[0], g(&[(1, 2)]));
        assert_eq!(graphs[1], g(&[(1, 2), (2, 3)]));
        assert_eq!(graphs[2], g(&[(1, 2), (1, 3), (2, 3)]));
        assert_eq!(graphs[3], g(&[(1, 2), (3, 4)]));
        assert!(graphs[..10].iter().all(|x| x.node_count() <= 4));
        assert!(graphs[10..].iter().all(|x| x.node_count() == 5));
        assert_eq!(smallest_graphs(3, &limits()).unwrap(), graphs[..3].to_vec());
    }

    #[test]
    fn matrix_is_lower_triangular_with_unit_diagonal() {
        let graphs = smallest_graphs(23, &limits()).unwrap();
        let m = subgraph_count_matrix(&graphs);
        for (r, row) in m.iter().enumerate() {
            assert_eq!(row[r], 1);
            assert!(row[r + 1..].iter().all(|&x| x == 0));
            for (c, &x) in row.iter().enumerate() {
                assert_eq!(x, evaluate_oracle(&graphs[c], &graphs[r]));
            }
        }
    }

    #[test]
    fn csv_layout() {
        let hosts = vec![g(&[(1, 2), (2, 3)])];
        let vectors = vec![invariant_vector(&hosts[0], 3, &limits()).unwrap()];
        assert_eq!(vectors_to_csv(&hosts, &vectors), "host,1-2\n1-2 1-3,2\n");
    }
}

//! Simple labeled graphs, the relabeling action and canonical forms.
//!
//! A [`LabeledGraph`] is a finite set of pairs `(i, j)`, `1 <= i < j`, i.e. a
//! squarefree monomial in the variables `x_ij`. Vertices exist only as edge
//! endpoints, so isolated vertices are not representable.
//!
//! Canonical forms maximize the 0/1 word of edge indicators read in the
//! variable order `x12, x13, x23, x14, x24, x34, x15, ...` (pairs sorted by
//! larger endpoint, then smaller endpoint). Equivalently the canonical edge
//! list is the smallest one when pairs are compared by `(j, i)`.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::HARD_NODE_LIMIT;

pub type Label = u32;

/// Largest graph the exhaustive `n!` routines accept.
pub const EXHAUSTIVE_NODE_LIMIT: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    edges: BTreeSet<(Label, Label)>,
}

impl LabeledGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph from unordered pairs. Pairs are normalized to
    /// `(min, max)`; repeated pairs collapse (`x^2 = x`).
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == 0 || b == 0 {
                return Err(Error::domain("labels must be positive integers"));
            }
            if a == b {
                return Err(Error::domain(format!("loop at label {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(LabeledGraph { edges: set })
    }

    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, i: Label, j: Label) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn is_subgraph_of(&self, other: &LabeledGraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// Labels occurring in some edge.
    pub fn support(&self) -> BTreeSet<Label> {
        self.edges.iter().flat_map(|&(i, j)| [i, j]).collect()
    }

    pub fn max_label(&self) -> Label {
        self.edges.iter().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Parses the edge-list text format: one `i j` pair per line, blank
    /// lines ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 2 {
                    return Err(Error::parse(offset, "expected two labels per line"));
                }
                let mut nums = [0 as Label; 2];
                for (slot, field) in nums.iter_mut().zip(&fields) {
                    *slot = field
                        .parse()
                        .map_err(|_| Error::parse(offset, format!("bad label {field:?}")))?;
                }
                if nums[0] == 0 || nums[1] == 0 || nums[0] == nums[1] {
                    return Err(Error::parse(offset, "labels must be distinct and positive"));
                }
                pairs.push((nums[0], nums[1]));
            }
            offset += line.len();
        }
        Self::from_edges(pairs)
    }

    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|(i, j)| format!("{i} {j}\n"))
            .collect()
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pairs(f, self.edges())
    }
}

fn write_pairs(
    f: &mut fmt::Formatter<'_>,
    pairs: impl Iterator<Item = (Label, Label)>,
) -> fmt::Result {
    f.write_str("[")?;
    for (k, (i, j)) in pairs.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{i}-{j}")?;
    }
    f.write_str("]")
}

/// A bijection of `{1..n}`, stored as the images `σ(1), ..., σ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Label>,
}

impl Permutation {
    pub fn new(images: Vec<Label>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::domain("images do not form a permutation"));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as Label).collect(),
        }
    }

    /// Swaps `a` and `b`, fixing everything else in `{1..n}`.
    pub fn transposition(n: usize, a: Label, b: Label) -> Result<Self> {
        let mut images: Vec<Label> = (1..=n as Label).collect();
        if a == 0 || b == 0 || a as usize > n || b as usize > n {
            return Err(Error::domain("transposition outside 1..n"));
        }
        images.swap(a as usize - 1, b as usize - 1);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[Label] {
        &self.images
    }

    /// `σ(i)`; panics outside `1..=n`.
    pub fn apply(&self, i: Label) -> Label {
        self.images[i as usize - 1]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Result<Permutation> {
        if self.len() != first.len() {
            return Err(Error::domain("composing permutations of different degree"));
        }
        Ok(Permutation {
            images: first.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as Label + 1;
        }
        Permutation { images }
    }

    /// All of `S_n` in lexicographic order of the image sequence.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next: Option<Vec<Label>> = Some((1..=n as Label).collect());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation { images: current })
        })
    }
}

/// Advances to the next lexicographic permutation; false when wrapped.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Applies the relabeling action to a graph on `{1..n}`, `n = σ.len()`.
pub fn relabel(g: &LabeledGraph, sigma: &Permutation) -> Result<LabeledGraph> {
    let n = sigma.len() as Label;
    if g.max_label() > n {
        return Err(Error::domain(format!(
            "label {} exceeds permutation degree {n}",
            g.max_label()
        )));
    }
    Ok(LabeledGraph {
        edges: g
            .edges()
            .map(|(i, j)| {
                let (a, b) = (sigma.apply(i), sigma.apply(j));
                (a.min(b), a.max(b))
            })
            .collect(),
    })
}

/// Order-preserving relabeling of the support onto `{1..k}`.
pub fn pack(g: &LabeledGraph) -> LabeledGraph {
    let index: BTreeMap<Label, Label> = g.support().into_iter().zip(1..).collect();
    LabeledGraph {
        edges: g.edges().map(|(i, j)| (index[&i], index[&j])).collect(),
    }
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical(g: &LabeledGraph) -> Result<CanonGraph> {
    Ok(Adjacency::packed(g)?.canonical())
}

/// Reference canonical form: maximizes the code over all `n!` relabelings
/// of `pack(g)` with no pruning.
pub fn canonical_exhaustive(g: &LabeledGraph) -> Result<CanonGraph> {
    let adj = Adjacency::packed(g)?;
    let n = adj.n;
    if n > EXHAUSTIVE_NODE_LIMIT {
        return Err(Error::Capacity {
            what: "node count for exhaustive search",
            value: n,
            limit: EXHAUSTIVE_NODE_LIMIT,
        });
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let code = adj.code_of_order(&order);
        if best.as_ref().is_none_or(|(c, _)| code > *c) {
            best = Some((code, order.clone()));
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    let order = best.map(|(_, o)| o).unwrap_or_default();
    Ok(adj.relabeled_by_order(&order))
}

/// The distinct relabelings of `g` by `S_n`.
pub fn orbit(g: &CanonGraph) -> Result<BTreeSet<LabeledGraph>> {
    let n = g.node_count();
    if n > EXHAUSTIVE_NODE_LIMIT {
        return Err(Error::Capacity {
            what: "node count for orbit expansion",
            value: n,
            limit: EXHAUSTIVE_NODE_LIMIT,
        });
    }
    let labeled = g.to_labeled();
    Permutation::all(n)
        .map(|sigma| relabel(&labeled, &sigma))
        .collect()
}

/// `|{σ ∈ S_n : σ·G = G}|`.
pub fn automorphism_count(g: &CanonGraph) -> u64 {
    let mut total = 1u64;
    let mut by_kind: BTreeMap<CanonGraph, u64> = BTreeMap::new();
    for c in g.components() {
        *by_kind.entry(c).or_default() += 1;
    }
    for (c, mult) in by_kind {
        let adj = Adjacency::from_canon(&c);
        total *= adj.connected_automorphisms().pow(mult as u32);
        total *= (1..=mult).product::<u64>();
    }
    total
}

/// Brute-force automorphism count over all of `S_n`.
pub fn automorphism_count_exhaustive(g: &CanonGraph) -> Result<u64> {
    let n = g.node_count();
    if n > EXHAUSTIVE_NODE_LIMIT {
        return Err(Error::Capacity {
            what: "node count for exhaustive search",
            value: n,
            limit: EXHAUSTIVE_NODE_LIMIT,
        });
    }
    let labeled = g.to_labeled();
    let mut count = 0;
    for sigma in Permutation::all(n) {
        if relabel(&labeled, &sigma)? == labeled {
            count += 1;
        }
    }
    Ok(count)
}

pub fn components(g: &CanonGraph) -> Vec<CanonGraph> {
    g.components()
}

pub fn disjoint_union(a: &CanonGraph, b: &CanonGraph) -> Result<CanonGraph> {
    CanonGraph::disjoint_union_of([a, b])
}

/// A packed, canonically labeled graph without isolated vertex.
///
/// Ordered by `(edge_count, node_count, canonical edge list)`, the edge
/// lists compared as described in the module docs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonGraph {
    nodes: u8,
    edges: Vec<(u8, u8)>,
    code: u128,
}

impl CanonGraph {
    /// The graph with no vertex; it indexes the unit `M_• = 1`.
    pub fn empty() -> Self {
        CanonGraph {
            nodes: 0,
            edges: Vec::new(),
            code: 0,
        }
    }

    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        canonical(&LabeledGraph::from_edges(edges)?)
    }

    pub fn node_count(&self) -> usize {
        self.nodes as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Canonical edges, 1-based, sorted by `(i, j)`.
    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| (i as Label + 1, j as Label + 1))
    }

    pub fn to_labeled(&self) -> LabeledGraph {
        LabeledGraph {
            edges: self.edges().collect(),
        }
    }

    /// Edge indicators in the order `x12, x13, x23, x14, ...`, most
    /// significant bit first.
    pub fn code(&self) -> u128 {
        self.code
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.node_count()];
        for &(i, j) in &self.edges {
            deg[i as usize] += 1;
            deg[j as usize] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        Adjacency::from_canon(self).component_masks().len()
    }

    /// Connected components, each canonical, in ascending order.
    pub fn components(&self) -> Vec<CanonGraph> {
        let adj = Adjacency::from_canon(self);
        let mut out: Vec<CanonGraph> = adj
            .component_masks()
            .into_iter()
            .map(|mask| adj.induced(mask).canonical_connected())
            .collect();
        out.sort();
        out
    }

    /// Canonical form of the disjoint union of the given graphs.
    pub fn disjoint_union_of<'a, I>(parts: I) -> Result<CanonGraph>
    where
        I: IntoIterator<Item = &'a CanonGraph>,
    {
        let mut edges = Vec::new();
        let mut offset = 0;
        for part in parts {
            edges.extend(part.edges().map(|(i, j)| (i + offset, j + offset)));
            offset += part.node_count() as Label;
        }
        canonical(&LabeledGraph::from_edges(edges)?)
    }

    /// Canonical form of the subgraph induced on the vertices not in
    /// `removed` (0-based mask); isolated vertices are dropped.
    pub fn delete_vertices(&self, removed: u32) -> CanonGraph {
        let adj = Adjacency::from_canon(self);
        let keep = ((1u32 << adj.n) - 1) & !removed;
        adj.induced(keep as u16).canonical()
    }

    pub(crate) fn adjacency(&self) -> Adjacency {
        Adjacency::from_canon(self)
    }
}

impl Ord for CanonGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.edge_count(), self.node_count(), Reverse(self.code)).cmp(&(
            other.edge_count(),
            other.node_count(),
            Reverse(other.code),
        ))
    }
}

impl PartialOrd for CanonGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CanonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonGraph")?;
        write_pairs(f, self.edges())
    }
}

impl fmt::Display for CanonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pairs(f, self.edges())
    }
}

impl Serialize for CanonGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.edges().map(|(i, j)| [i, j]))
    }
}

impl<'de> Deserialize<'de> for CanonGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[Label; 2]>::deserialize(d)?;
        CanonGraph::from_edges(pairs.into_iter().map(|[i, j]| (i, j)))
            .map_err(serde::de::Error::custom)
    }
}

/// Bit of the pair `{i, j}` (0-based, `i != j`) inside a canonical code.
#[inline]
pub(crate) fn pair_bit(i: usize, j: usize) -> u128 {
    let (i, j) = (i.min(j), i.max(j));
    1u128 << (127 - (j * (j - 1) / 2 + i))
}

/// Adjacency bitmasks of a graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct Adjacency {
    pub n: usize,
    pub rows: [u16; HARD_NODE_LIMIT],
}

impl Adjacency {
    pub fn new(n: usize) -> Self {
        debug_assert!(n <= HARD_NODE_LIMIT);
        Adjacency {
            n,
            rows: [0; HARD_NODE_LIMIT],
        }
    }

    /// Adjacency of `pack(g)`.
    pub fn packed(g: &LabeledGraph) -> Result<Self> {
        let support = g.support();
        if support.len() > HARD_NODE_LIMIT {
            return Err(Error::Capacity {
                what: "node count",
                value: support.len(),
                limit: HARD_NODE_LIMIT,
            });
        }
        let index: BTreeMap<Label, usize> = support.into_iter().zip(0..).collect();
        let mut adj = Adjacency::new(index.len());
        for (i, j) in g.edges() {
            adj.add(index[&i], index[&j]);
        }
        Ok(adj)
    }

    pub fn from_canon(g: &CanonGraph) -> Self {
        let mut adj = Adjacency::new(g.node_count());
        for &(i, j) in &g.edges {
            adj.add(i as usize, j as usize);
        }
        adj
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize) {
        self.rows[i] |= 1 << j;
        self.rows[j] |= 1 << i;
    }

    #[inline]
    pub fn has(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Code of the labeling sending `order[k]` to position `k`.
    pub fn code_of_order(&self, order: &[usize]) -> u128 {
        let mut code = 0;
        for (b, &v) in order.iter().enumerate() {
            for (a, &u) in order[..b].iter().enumerate() {
                if self.has(u, v) {
                    code |= pair_bit(a, b);
                }
            }
        }
        code
    }

    /// The graph relabeled so that `order[k]` becomes vertex `k`.
    pub fn relabeled_by_order(&self, order: &[usize]) -> CanonGraph {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (b, &v) in order.iter().enumerate() {
            for (a, &u) in order[..b].iter().enumerate() {
                if self.has(u, v) {
                    edges.push((a as u8, b as u8));
                }
            }
        }
        edges.sort_unstable();
        CanonGraph {
            nodes: order.len() as u8,
            code: self.code_of_order(order),
            edges,
        }
    }

    /// Vertex masks of the connected components with at least one edge.
    pub fn component_masks(&self) -> Vec<u16> {
        let mut seen = 0u16;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 || self.rows[v] == 0 {
                continue;
            }
            let mut comp = 1u16 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.rows[u] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `mask`, renumbered in increasing vertex order.
    pub fn induced(&self, mask: u16) -> Adjacency {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut adj = Adjacency::new(verts.len());
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has(u, v) {
                    adj.add(a, b);
                }
            }
        }
        adj
    }

    /// Canonical form; isolated vertices are dropped first.
    pub fn canonical(&self) -> CanonGraph {
        let comps = self.component_masks();
        match comps.len() {
            0 => CanonGraph::empty(),
            1 => self.induced(comps[0]).canonical_connected(),
            _ => {
                let mut parts: Vec<CanonGraph> = comps
                    .into_iter()
                    .map(|m| self.induced(m).canonical_connected())
                    .collect();
                parts.sort();
                best_block_arrangement(parts)
            }
        }
    }

    /// Branch-and-bound search for the code-maximizing labeling of a
    /// connected graph. Pruning: a column below the best known column at
    /// the same depth is cut, and of two unplaced twin vertices only the
    /// first is branched on.
    pub fn canonical_connected(&self) -> CanonGraph {
        let n = self.n;
        if n == 0 {
            return CanonGraph::empty();
        }
        let mut search = MaxCodeSearch {
            adj: self,
            best_cols: vec![0; n],
            best_len: 0,
            best_order: Vec::new(),
            order: Vec::with_capacity(n),
            used: 0,
        };
        search.descend();
        self.relabeled_by_order(&search.best_order)
    }

    #[inline]
    fn twins(&self, v: usize, w: usize) -> bool {
        (self.rows[v] & !(1 << w)) == (self.rows[w] & !(1 << v))
    }

    /// Automorphisms of a connected graph by degree-pruned backtracking.
    pub fn connected_automorphisms(&self) -> u64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        // BFS order so each vertex after the first has a mapped neighbour.
        let mut order = vec![0usize];
        let mut placed = 1u16;
        let mut k = 0;
        while k < order.len() {
            let u = order[k];
            let mut fresh = self.rows[u] & !placed;
            placed |= fresh;
            while fresh != 0 {
                order.push(fresh.trailing_zeros() as usize);
                fresh &= fresh - 1;
            }
            k += 1;
        }
        debug_assert_eq!(order.len(), n, "graph must be connected");
        let mut images = vec![0usize; n];
        self.count_maps(&order, &mut images, 0, 0)
    }

    fn count_maps(&self, order: &[usize], images: &mut [usize], k: usize, used: u16) -> u64 {
        if k == order.len() {
            return 1;
        }
        let v = order[k];
        let mut total = 0;
        for w in 0..self.n {
            if used >> w & 1 == 1 || self.degree(w) != self.degree(v) {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .zip(images.iter())
                .all(|(&u, &img)| self.has(u, v) == self.has(img, w));
            if consistent {
                images[k] = w;
                total += self.count_maps(order, images, k + 1, used | 1 << w);
            }
        }
        total
    }
}

struct MaxCodeSearch<'a> {
    adj: &'a Adjacency,
    best_cols: Vec<u16>,
    best_len: usize,
    best_order: Vec<usize>,
    order: Vec<usize>,
    used: u16,
}

impl MaxCodeSearch<'_> {
    fn descend(&mut self) {
        let k = self.order.len();
        let n = self.adj.n;
        if k == n {
            self.best_order.clone_from(&self.order);
            return;
        }
        let mut tried = 0u16;
        for v in 0..n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut rest = tried;
            let mut is_twin = false;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.adj.twins(v, w) {
                    is_twin = true;
                    break;
                }
            }
            if is_twin {
                continue;
            }
            tried |= 1 << v;
            let mut col = 0u16;
            for (p, &u) in self.order.iter().enumerate() {
                if self.adj.has(u, v) {
                    col |= 1 << (15 - p);
                }
            }
            if k < self.best_len {
                match col.cmp(&self.best_cols[k]) {
                    Ordering::Less => continue,
                    Ordering::Equal => {}
                    Ordering::Greater => {
                        self.best_cols[k] = col;
                        self.best_len = k + 1;
                    }
                }
            } else {
                self.best_cols[k] = col;
                self.best_len = k + 1;
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.descend();
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// In a code-maximizing labeling every component occupies a contiguous
/// block of labels and is itself canonically labeled, so only the order of
/// the blocks remains to be chosen.
fn best_block_arrangement(mut parts: Vec<CanonGraph>) -> CanonGraph {
    let block_code = |parts: &[CanonGraph]| {
        let mut code = 0u128;
        let mut offset = 0;
        for p in parts {
            for &(i, j) in &p.edges {
                code |= pair_bit(offset + i as usize, offset + j as usize);
            }
            offset += p.node_count();
        }
        code
    };
    let mut best = parts.clone();
    let mut best_code = block_code(&parts);
    while next_permutation(&mut parts) {
        let code = block_code(&parts);
        if code > best_code {
            best_code = code;
            best.clone_from(&parts);
        }
    }
    let mut edges = Vec::new();
    let mut offset = 0u8;
    for p in &best {
        edges.extend(p.edges.iter().map(|&(i, j)| (i + offset, j + offset)));
        offset += p.nodes;
    }
    edges.sort_unstable();
    CanonGraph {
        nodes: offset,
        edges,
        code: best_code,
    }
}

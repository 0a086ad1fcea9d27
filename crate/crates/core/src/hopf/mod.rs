//! The Hopf algebra spanned by the `M_G`, in the `M` basis.
//!
//! * Product: `M_A · M_B = Σ_G c^G_{A,B} M_G`, where `c^G_{A,B}` counts the
//!   ordered pairs of edge subsets of `G`, isomorphic to `A` and `B`, whose
//!   union is every edge of `G`.
//! * Coproduct: `Δ(M_G) = Σ M_{G'} ⊗ M_{G''}` over the ordered ways of
//!   splitting the multiset of components of `G` in two.
//! * Antipode: `S(1) = 1`, `S(M_G) = -Σ_{G'' ≠ G} M_{G'} · S(M_{G''})`.
//!
//! Coefficients are exact rationals.

mod element;
mod generators;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use element::{parse_ratio, ratio, HopfElement, TensorElement};
pub use generators::{ConnectedMonomial, ConnectedPolynomial};

use crate::error::Result;
use crate::graph::{self, Adjacency, CanonGraph, LabeledGraph};
use crate::series;
use crate::{Limits, HARD_NODE_LIMIT};

pub fn basis(g: &CanonGraph) -> HopfElement {
    HopfElement::basis(g.clone())
}

pub fn counit(a: &HopfElement) -> BigRational {
    a.counit()
}

/// Number of ordered pairs `(A, B)` of edge subsets of `g` with
/// `A ≅ g1`, `B ≅ g2` and `A ∪ B = E(g)`.
pub fn structure_constant(g1: &CanonGraph, g2: &CanonGraph, g: &CanonGraph) -> u64 {
    let edges: Vec<_> = g.edges().collect();
    let m = edges.len();
    if m > 24 || g1.edge_count() + g2.edge_count() < m {
        return 0;
    }
    let copies = |pattern: &CanonGraph| -> Vec<u32> {
        let k = pattern.edge_count();
        (0u32..1 << m)
            .filter(|mask| mask.count_ones() as usize == k)
            .filter(|&mask| {
                let sub = (0..m).filter(|b| mask >> b & 1 == 1).map(|b| edges[b]);
                graph::canonical(&LabeledGraph::from_edges(sub).expect("valid edges"))
                    .is_ok_and(|c| &c == pattern)
            })
            .collect()
    };
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let left = copies(g1);
    let right = copies(g2);
    let mut count = 0;
    for a in &left {
        count += right.iter().filter(|&&b| a | b == full).count() as u64;
    }
    count
}

/// `Δ(a)`, extended linearly.
pub fn coproduct(a: &HopfElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (g, c) in a.terms() {
        for (left, right) in splittings(g) {
            out.add_term(left, right, c.clone());
        }
    }
    out
}

/// Ordered splittings `(G', G'')` of the component multiset of `g`.
pub fn splittings(g: &CanonGraph) -> Vec<(CanonGraph, CanonGraph)> {
    let mut kinds: Vec<(CanonGraph, usize)> = Vec::new();
    for c in g.components() {
        match kinds.last_mut() {
            Some((last, mult)) if *last == c => *mult += 1,
            _ => kinds.push((c, 1)),
        }
    }
    let mut out = Vec::new();
    let mut take = vec![0usize; kinds.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for ((kind, mult), &k) in kinds.iter().zip(&take) {
            left.extend(std::iter::repeat_n(kind, k));
            right.extend(std::iter::repeat_n(kind, mult - k));
        }
        out.push((
            CanonGraph::disjoint_union_of(left).expect("part of a valid graph"),
            CanonGraph::disjoint_union_of(right).expect("part of a valid graph"),
        ));
        // odometer over 0..=mult for each kind
        let mut i = 0;
        loop {
            if i == kinds.len() {
                return out;
            }
            if take[i] < kinds[i].1 {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
    }
}

/// `Σ coeff(G) · M_G(host)`.
pub fn evaluate_element(a: &HopfElement, host: &CanonGraph) -> BigRational {
    let mut total = BigRational::zero();
    for (g, c) in a.terms() {
        total += c * BigRational::from_integer(BigInt::from(series::evaluate(g, host)));
    }
    total
}

/// Basis product computed by overlaying the two patterns.
///
/// `g1` is fixed on labels `0..n1`; every vertex of `g2` goes either to an
/// unused label of `g1` or to the next fresh label, fresh labels being
/// taken in increasing order. If `t_G` such placements produce a union
/// isomorphic to `G` then `c^G = t_G · |Aut G| / (|Aut g1| · |Aut g2|)`.
pub fn overlay_product(g1: &CanonGraph, g2: &CanonGraph) -> Result<BTreeMap<CanonGraph, u64>> {
    let total_nodes = g1.node_count() + g2.node_count();
    Limits::check("product node count", total_nodes, HARD_NODE_LIMIT)?;
    let a = g1.adjacency();
    let b = g2.adjacency();
    let mut overlay = Overlay {
        base: &a,
        other: &b,
        images: vec![0; b.n],
        tallies: HashMap::new(),
        canon_cache: HashMap::new(),
    };
    overlay.place(0, 0, a.n);
    let aut12 = graph::automorphism_count(g1) * graph::automorphism_count(g2);
    let mut out = BTreeMap::new();
    for (g, t) in overlay.tallies {
        let numerator = t * graph::automorphism_count(&g);
        assert_eq!(numerator % aut12, 0, "overlay tally not divisible for {g}");
        out.insert(g, numerator / aut12);
    }
    Ok(out)
}

struct Overlay<'a> {
    base: &'a Adjacency,
    other: &'a Adjacency,
    images: Vec<usize>,
    tallies: HashMap<CanonGraph, u64>,
    canon_cache: HashMap<(usize, [u16; HARD_NODE_LIMIT]), CanonGraph>,
}

impl Overlay<'_> {
    fn place(&mut self, v: usize, used_old: u16, next_fresh: usize) {
        if v == self.other.n {
            let mut union = Adjacency::new(next_fresh);
            union.rows = self.base.rows;
            for x in 0..self.other.n {
                for y in x + 1..self.other.n {
                    if self.other.has(x, y) {
                        union.add(self.images[x], self.images[y]);
                    }
                }
            }
            let key = (union.n, union.rows);
            let canon = self
                .canon_cache
                .entry(key)
                .or_insert_with(|| union.canonical())
                .clone();
            *self.tallies.entry(canon).or_default() += 1;
            return;
        }
        for w in 0..self.base.n {
            if used_old >> w & 1 == 0 {
                self.images[v] = w;
                self.place(v + 1, used_old | 1 << w, next_fresh);
            }
        }
        self.images[v] = next_fresh;
        self.place(v + 1, used_old, next_fresh + 1);
    }
}

type Cache<K> = RwLock<HashMap<K, Arc<HopfElement>>>;

/// Product, antipode and related operations, with memoized basis products
/// and antipodes. Safe to share between threads.
#[derive(Debug, Default)]
pub struct Algebra {
    limits: Limits,
    products: Cache<(CanonGraph, CanonGraph)>,
    antipodes: Cache<CanonGraph>,
}

impl Algebra {
    pub fn new(limits: Limits) -> Self {
        Algebra {
            limits,
            ..Default::default()
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn cached<K: std::hash::Hash + Eq + Clone>(
        cache: &Cache<K>,
        key: &K,
        compute: impl FnOnce() -> Result<HopfElement>,
    ) -> Result<Arc<HopfElement>> {
        if let Some(hit) = cache.read().expect("cache lock").get(key) {
            return Ok(hit.clone());
        }
        let value = Arc::new(compute()?);
        let mut guard = cache.write().expect("cache lock");
        Ok(guard.entry(key.clone()).or_insert(value).clone())
    }

    /// `M_g1 · M_g2`.
    pub fn multiply_basis(&self, g1: &CanonGraph, g2: &CanonGraph) -> Result<Arc<HopfElement>> {
        Limits::check(
            "product node count",
            g1.node_count() + g2.node_count(),
            self.limits.max_nodes,
        )?;
        let key = if g1 <= g2 {
            (g1.clone(), g2.clone())
        } else {
            (g2.clone(), g1.clone())
        };
        Self::cached(&self.products, &key, || {
            let (a, b) = (&key.0, &key.1);
            let raw = overlay_product(a, b)?;
            debug_assert!(
                raw.iter().all(|(g, &c)| structure_constant(a, b, g) == c),
                "overlay disagrees with structure constants for {a} * {b}"
            );
            Ok(HopfElement::from_terms(raw.into_iter().map(|(g, c)| {
                (g, BigRational::from_integer(BigInt::from(c)))
            })))
        })
    }

    pub fn multiply(&self, a: &HopfElement, b: &HopfElement) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for (g1, c1) in a.terms() {
            for (g2, c2) in b.terms() {
                let coeff = c1 * c2;
                for (g, c) in self.multiply_basis(g1, g2)?.terms() {
                    out.add_term(g.clone(), c * &coeff);
                }
            }
        }
        Ok(out)
    }

    /// Componentwise product in the tensor square.
    pub fn multiply_tensor(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for ((a1, b1), c1) in x.terms() {
            for ((a2, b2), c2) in y.terms() {
                let left = self.multiply_basis(a1, a2)?;
                let right = self.multiply_basis(b1, b2)?;
                let coeff = c1 * c2;
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term(l.clone(), r.clone(), cl * cr * &coeff);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplication map `M_a ⊗ M_b -> M_a · M_b`.
    pub fn fold(&self, t: &TensorElement) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for ((a, b), c) in t.terms() {
            for (g, k) in self.multiply_basis(a, b)?.terms() {
                out.add_term(g.clone(), k * c);
            }
        }
        Ok(out)
    }

    pub fn antipode_basis(&self, g: &CanonGraph) -> Result<Arc<HopfElement>> {
        if g.is_empty() {
            return Ok(Arc::new(HopfElement::one()));
        }
        Self::cached(&self.antipodes, g, || {
            let mut sum = HopfElement::zero();
            for (left, right) in splittings(g) {
                if right == *g {
                    continue;
                }
                let s_right = self.antipode_basis(&right)?;
                sum += &self.multiply(&basis(&left), &s_right)?;
            }
            Ok(-sum)
        })
    }

    pub fn antipode(&self, a: &HopfElement) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for (g, c) in a.terms() {
            out += &self.antipode_basis(g)?.scale(c);
        }
        Ok(out)
    }

    /// `binom(M_K2, n) = M_K2 (M_K2 - 1) ... (M_K2 - n + 1) / n!`.
    pub fn binomial_of_edge(&self, n: usize) -> Result<HopfElement> {
        Limits::check("edge count", n, self.limits.max_edges)?;
        let edge = basis(&CanonGraph::from_edges([(1, 2)])?);
        let mut acc = HopfElement::one();
        let mut factorial = BigInt::one();
        for k in 0..n {
            let shifted = &edge - &HopfElement::one().scale(&ratio(k as i64));
            acc = self.multiply(&acc, &shifted)?;
            factorial *= BigInt::from(k + 1);
        }
        Ok(acc.scale(&BigRational::new(BigInt::one(), factorial)))
    }

    /// `m ∘ (S ⊗ id) ∘ Δ`, which must equal `ε(a) · 1`.
    pub fn antipode_convolution(&self, a: &HopfElement) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for ((left, right), c) in coproduct(a).terms() {
            let s_left = self.antipode_basis(left)?;
            out += &self.multiply(&s_left, &basis(right))?.scale(c);
        }
        Ok(out)
    }
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::new(self.limits)
    }
}

//! Expressing `M_G` as a polynomial in the connected `M_C`.
//!
//! For `G = C ⊔ R` with `C` a connected component,
//! `M_C · M_R = c_G M_G + Σ_{H ≠ G} c_H M_H` and every such `H` has fewer
//! components than `G`, so solving for `M_G` and recursing terminates.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Algebra, HopfElement};
use crate::error::Result;
use crate::graph::CanonGraph;

/// Product of connected basis elements, stored as (graph, exponent) pairs
/// sorted by graph.
pub type ConnectedMonomial = Vec<(CanonGraph, u32)>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConnectedPolynomial {
    terms: BTreeMap<ConnectedMonomial, BigRational>,
}

fn monomial_product(a: &ConnectedMonomial, b: &ConnectedMonomial) -> ConnectedMonomial {
    let mut exps: BTreeMap<CanonGraph, u32> = BTreeMap::new();
    for (g, e) in a.iter().chain(b) {
        *exps.entry(g.clone()).or_default() += e;
    }
    exps.into_iter().collect()
}

impl ConnectedPolynomial {
    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::default();
        p.add_term(Vec::new(), c);
        p
    }

    /// The single generator `M_c`; `c` must be connected.
    pub fn generator(c: CanonGraph) -> Self {
        debug_assert!(c.is_connected());
        let mut p = Self::default();
        p.add_term(vec![(c, 1)], BigRational::one());
        p
    }

    pub fn add_term(&mut self, m: ConnectedMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(m.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ConnectedMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(monomial_product(m1, m2), c1 * c2);
            }
        }
        out
    }

    /// Multiplies everything out in the `M` basis.
    pub fn to_element(&self, algebra: &Algebra) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for (m, c) in &self.terms {
            let mut value = HopfElement::one();
            for (g, e) in m {
                for _ in 0..*e {
                    value = algebra.multiply(&value, &HopfElement::basis(g.clone()))?;
                }
            }
            out += &value.scale(c);
        }
        Ok(out)
    }
}

impl fmt::Display for ConnectedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (g, e) in m {
                write!(f, "*M{g}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Algebra {
    /// `M_g` as a polynomial in connected basis elements.
    pub fn connected_expansion(&self, g: &CanonGraph) -> Result<ConnectedPolynomial> {
        if g.is_empty() {
            return Ok(ConnectedPolynomial::constant(BigRational::one()));
        }
        if g.is_connected() {
            return Ok(ConnectedPolynomial::generator(g.clone()));
        }
        let mut parts = g.components();
        let first = parts.remove(0);
        let rest = CanonGraph::disjoint_union_of(&parts)?;
        let product = self.multiply_basis(&first, &rest)?;
        let lead = product.coeff(g);
        debug_assert!(!lead.is_zero(), "disjoint union missing from product");
        let mut solved =
            ConnectedPolynomial::generator(first).mul(&self.connected_expansion(&rest)?);
        for (h, c) in product.terms() {
            if h != g {
                debug_assert!(h.component_count() < g.component_count());
                solved = solved.add(&self.connected_expansion(h)?.scale(&-c));
            }
        }
        Ok(solved.scale(&(BigRational::one() / lead)))
    }
}

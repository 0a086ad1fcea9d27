use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CanonGraph;

/// A finite linear combination of the `M_G` with rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HopfElement {
    terms: BTreeMap<CanonGraph, BigRational>,
}

impl HopfElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 = M_•`, indexed by the empty graph.
    pub fn one() -> Self {
        Self::basis(CanonGraph::empty())
    }

    pub fn basis(g: CanonGraph) -> Self {
        Self::term(g, BigRational::one())
    }

    pub fn term(g: CanonGraph, coeff: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(g, coeff);
        e
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (CanonGraph, BigRational)>,
    {
        let mut e = Self::zero();
        for (g, c) in terms {
            e.add_term(g, c);
        }
        e
    }

    /// Integer coefficients, convenient for literals.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (CanonGraph, i64)>,
    {
        Self::from_terms(terms.into_iter().map(|(g, c)| (g, ratio(c))))
    }

    pub fn add_term(&mut self, g: CanonGraph, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        accumulate(&mut self.terms, g, coeff);
    }

    pub fn coeff(&self, g: &CanonGraph) -> BigRational {
        self.terms.get(g).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonGraph, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &BigRational) -> HopfElement {
        HopfElement::from_terms(self.terms.iter().map(|(g, c)| (g.clone(), c * factor)))
    }

    /// Coefficient of the unit.
    pub fn counit(&self) -> BigRational {
        self.coeff(&CanonGraph::empty())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_terms()).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(value.clone()).map_err(|e| Error::parse(0, e.to_string()))?;
        let mut out = HopfElement::zero();
        for t in terms {
            out.add_term(t.graph, parse_ratio(&t.coeff)?);
        }
        Ok(out)
    }

    fn json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(g, c)| JsonTerm {
                graph: g.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    graph: CanonGraph,
    coeff: String,
}

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, BigRational>, key: K, coeff: BigRational) {
    match terms.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

pub fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q`.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(0, format!("bad coefficient {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl Add for &HopfElement {
    type Output = HopfElement;
    fn add(self, rhs: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HopfElement {
    type Output = HopfElement;
    fn add(mut self, rhs: HopfElement) -> HopfElement {
        self += &rhs;
        self
    }
}

impl AddAssign<&HopfElement> for HopfElement {
    fn add_assign(&mut self, rhs: &HopfElement) {
        for (g, c) in &rhs.terms {
            self.add_term(g.clone(), c.clone());
        }
    }
}

impl Neg for &HopfElement {
    type Output = HopfElement;
    fn neg(self) -> HopfElement {
        HopfElement {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl Neg for HopfElement {
    type Output = HopfElement;
    fn neg(self) -> HopfElement {
        -&self
    }
}

impl Sub for &HopfElement {
    type Output = HopfElement;
    fn sub(self, rhs: &HopfElement) -> HopfElement {
        self + &(-rhs)
    }
}

impl Sub for HopfElement {
    type Output = HopfElement;
    fn sub(self, rhs: HopfElement) -> HopfElement {
        &self - &rhs
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigRational, first: bool) -> fmt::Result {
    let negative = c < &BigRational::zero();
    let abs = if negative { -c } else { c.clone() };
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    Ok(())
}

impl fmt::Display for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            write_coeff(f, c, k == 0)?;
            write!(f, "M{g}")?;
        }
        Ok(())
    }
}

/// A finite linear combination of `M_G ⊗ M_H`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(CanonGraph, CanonGraph), BigRational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((CanonGraph, CanonGraph), BigRational)>,
    {
        let mut t = Self::zero();
        for (k, c) in terms {
            t.add_term(k.0, k.1, c);
        }
        t
    }

    pub fn add_term(&mut self, left: CanonGraph, right: CanonGraph, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        accumulate(&mut self.terms, (left, right), coeff);
    }

    pub fn coeff(&self, left: &CanonGraph, right: &CanonGraph) -> BigRational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CanonGraph, CanonGraph), &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The flip `a ⊗ b -> b ⊗ a`.
    pub fn swapped(&self) -> TensorElement {
        TensorElement::from_terms(
            self.terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((a, b), c)| serde_json::json!({ "left": a, "right": b, "coeff": c.to_string() }))
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            write_coeff(f, c, k == 0)?;
            write!(f, "M{a} (x) M{b}")?;
        }
        Ok(())
    }
}

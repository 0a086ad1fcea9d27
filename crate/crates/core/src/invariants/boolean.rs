//! Symmetric-function evaluations at 0/1 vectors.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BooleanVector {
    bits: Vec<u8>,
}

impl BooleanVector {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::domain(format!("boolean entry {b}")));
        }
        Ok(BooleanVector { bits })
    }

    /// Bit `i` of `mask` becomes entry `i`.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        BooleanVector {
            bits: (0..len).map(|i| (mask >> i & 1) as u8).collect(),
        }
    }

    /// All vectors of the given length.
    pub fn all(len: usize) -> impl Iterator<Item = BooleanVector> {
        (0..1u64 << len).map(move |m| Self::from_mask(m, len))
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn popcount(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

/// `e_k(v)`, computed from the generating polynomial `Π (1 + v_i t)`.
pub fn elementary_eval(v: &BooleanVector, k: usize) -> Result<u64> {
    if k > v.len() {
        return Err(Error::domain(format!(
            "e_{k} of a vector of length {}",
            v.len()
        )));
    }
    let mut coeffs = vec![0u64; k + 1];
    coeffs[0] = 1;
    for &b in v.bits() {
        for j in (1..=k).rev() {
            coeffs[j] += coeffs[j - 1] * b as u64;
        }
    }
    Ok(coeffs[k])
}

/// Product over columns of `Π_{a < b} (v[c_b] - v[c_a])`. Positions are
/// 1-based and must be distinct.
pub fn vandermonde_value(columns: &[Vec<usize>], v: &BooleanVector) -> Result<i64> {
    let mut seen = vec![false; v.len() + 1];
    for &p in columns.iter().flatten() {
        if p == 0 || p > v.len() {
            return Err(Error::domain(format!(
                "position {p} outside 1..={}",
                v.len()
            )));
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::domain(format!("position {p} repeated")));
        }
    }
    let x = |p: usize| v.bits()[p - 1] as i64;
    let mut value = 1;
    for col in columns {
        for (a, &pa) in col.iter().enumerate() {
            for &pb in &col[a + 1..] {
                value *= x(pb) - x(pa);
            }
        }
    }
    Ok(value)
}

pub fn vandermonde_vanishes(columns: &[Vec<usize>], v: &BooleanVector) -> Result<bool> {
    Ok(vandermonde_value(columns, v)? == 0)
}

/// Partitions of `n`, parts weakly decreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Standard Young tableaux of `shape` as rows of entries `1..=n`.
pub fn standard_tableaux(shape: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(
        shape: &[usize],
        next: usize,
        total: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if next > total {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                go(shape, next + 1, total, rows, out);
                rows[r].pop();
            }
        }
    }
    let total = shape.iter().sum();
    let mut out = Vec::new();
    go(
        shape,
        1,
        total,
        &mut vec![Vec::new(); shape.len()],
        &mut out,
    );
    out
}

/// Columns of a tableau given by rows.
pub fn columns(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| rows.iter().filter_map(|row| row.get(c).copied()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BooleanVector {
        BooleanVector::new(bits.to_vec()).unwrap()
    }

    fn binom(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_eval(&bv(&[1, 1, 0, 1]), 2).unwrap(), 3);
        assert_eq!(elementary_eval(&bv(&[0, 1, 0]), 0).unwrap(), 1);
        assert_eq!(elementary_eval(&bv(&[0, 0, 0]), 2).unwrap(), 0);
        assert!(elementary_eval(&bv(&[1]), 2).is_err());
        assert!(BooleanVector::new(vec![0, 2]).is_err());
    }

    #[test]
    fn elementary_collapse() {
        for len in 0..=12 {
            for v in BooleanVector::all(len) {
                for k in 0..=len {
                    assert_eq!(elementary_eval(&v, k).unwrap(), binom(v.popcount(), k));
                }
            }
        }
    }

    #[test]
    fn vandermonde_examples() {
        assert!(vandermonde_vanishes(&[vec![1, 2, 3]], &bv(&[0, 1, 1])).unwrap());
        assert!(!vandermonde_vanishes(&[vec![1, 2]], &bv(&[0, 1])).unwrap());
        for v in BooleanVector::all(6) {
            assert!(vandermonde_vanishes(&[vec![1, 2, 3], vec![4, 5, 6]], &v).unwrap());
        }
        assert!(vandermonde_value(&[vec![1, 4]], &bv(&[0, 1, 1])).is_err());
        assert!(vandermonde_value(&[vec![0]], &bv(&[0])).is_err());
        assert!(vandermonde_value(&[vec![1, 2], vec![2]], &bv(&[0, 1])).is_err());
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(8).len(), 22);
        let total: usize = partitions(6)
            .iter()
            .map(|s| standard_tableaux(s).len())
            .sum();
        // number of involutions of 6 elements
        assert_eq!(total, 76);
        assert_eq!(columns(&[vec![1, 2], vec![3]]), vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn tall_shapes_vanish() {
        for n in 3..=8 {
            for shape in partitions(n).into_iter().filter(|s| s.len() >= 3) {
                for t in standard_tableaux(&shape) {
                    let cols = columns(&t);
                    for v in BooleanVector::all(n) {
                        assert!(vandermonde_vanishes(&cols, &v).unwrap(), "{shape:?} {v:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn short_shapes_do_not_always_vanish() {
        for n in 1..=6 {
            for shape in partitions(n).into_iter().filter(|s| s.len() <= 2) {
                for t in standard_tableaux(&shape) {
                    let cols = columns(&t);
                    assert!(
                        BooleanVector::all(n).any(|v| !vandermonde_vanishes(&cols, &v).unwrap())
                    );
                }
            }
        }
    }
}

//! Independent checks by direct enumeration of semistandard tableaux.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::arith::{Field, Poly};
use crate::shapes::{Cell, SkewShape};
use crate::QPoly;

/// Calls `visit` with the entries (in `shape.cells()` order) of every
/// semistandard filling with values in `1..=t`.
pub fn for_each_ssyt(shape: &SkewShape, t: usize, mut visit: impl FnMut(&[usize])) {
    let cells = shape.cells();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    // predecessors always come earlier in row-major order
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|c| index.get(&Cell::new(c.row, c.col - 1)).copied())
        .collect();
    let above: Vec<Option<usize>> = cells
        .iter()
        .map(|c| index.get(&Cell::new(c.row - 1, c.col)).copied())
        .collect();
    let mut filling = vec![0; cells.len()];

    fn go(
        k: usize,
        t: usize,
        left: &[Option<usize>],
        above: &[Option<usize>],
        filling: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == filling.len() {
            visit(filling);
            return;
        }
        let lo_row = left[k].map_or(1, |i| filling[i]);
        let lo_col = above[k].map_or(1, |i| filling[i] + 1);
        for v in lo_row.max(lo_col)..=t {
            filling[k] = v;
            go(k + 1, t, left, above, filling, visit);
        }
    }
    go(0, t, &left, &above, &mut filling, &mut visit);
}

/// Number of semistandard tableaux of `shape` with entries in `1..=t`.
pub fn count_ssyt(shape: &SkewShape, t: usize) -> u64 {
    let mut n = 0;
    for_each_ssyt(shape, t, |_| n += 1);
    n
}

/// `Σ_T q^{Σ (entry - 1)}` over semistandard tableaux with entries in `1..=t`.
pub fn q_weight_ssyt(shape: &SkewShape, t: usize) -> QPoly {
    let mut counts: Vec<i64> = Vec::new();
    for_each_ssyt(shape, t, |f| {
        let w: usize = f.iter().map(|v| v - 1).sum();
        if counts.len() <= w {
            counts.resize(w + 1, 0);
        }
        counts[w] += 1;
    });
    Poly::new(counts.into_iter().map(BigRational::from_i64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn skew(outer: &str, inner: &str) -> SkewShape {
        let inner = if inner.is_empty() {
            Partition::empty()
        } else {
            inner.parse().unwrap()
        };
        SkewShape::new(outer.parse().unwrap(), inner).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count_ssyt(&skew("1", ""), 3), 3);
        assert_eq!(count_ssyt(&skew("2,1", ""), 2), 2);
        // cells (1,2), (2,1), (2,2): the top one must be 1, the bottom right 2
        assert_eq!(count_ssyt(&skew("2,2", "1"), 2), 2);
        assert_eq!(count_ssyt(&skew("2", ""), 3), 6);
        assert_eq!(count_ssyt(&skew("1,1", ""), 3), 3);
        assert_eq!(count_ssyt(&skew("1,1,1", ""), 2), 0);
        // disconnected skew shape: product of two single cells
        assert_eq!(count_ssyt(&skew("2,1", "1"), 3), 9);
        assert_eq!(count_ssyt(&skew("1", "1"), 2), 1);
    }

    #[test]
    fn q_weights() {
        assert_eq!(q_weight_ssyt(&skew("1", ""), 2), QPoly::from_i64s(&[1, 1]));
        assert_eq!(q_weight_ssyt(&skew("2", ""), 2), QPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(q_weight_ssyt(&skew("1,1", ""), 2), QPoly::from_i64s(&[0, 1]));
        assert_eq!(q_weight_ssyt(&skew("1,1,1", ""), 2), QPoly::from_i64s(&[]));
    }
}

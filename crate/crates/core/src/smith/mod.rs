//! Smith normal form over a Euclidean domain, the minor-gcd
//! characterization used as an independent oracle, and stabilization.

mod theorem;

pub use theorem::{
    predicted_diagonal, predicted_diagonal_with, verify_theorem, TheoremReport, VerifyOptions,
};

use std::collections::HashMap;

use crate::arith::EuclideanDomain;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Default largest order for which all minors are enumerated.
pub const DEFAULT_MINOR_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct SnfResult<R> {
    /// Unit-normalized `d_1, …, d_n`, zeros last.
    pub diagonal: Vec<R>,
    pub rank: usize,
    /// `L` with `L · A · R = diag`, when requested.
    pub left: Option<Matrix<R>>,
    pub right: Option<Matrix<R>>,
}

impl<R: EuclideanDomain> SnfResult<R> {
    /// `d_1 ⋯ d_k` for `k = 1..=n`.
    pub fn prefix_products(&self) -> Vec<R> {
        self.diagonal
            .iter()
            .scan(R::one(), |acc, d| {
                *acc = acc.clone() * d.clone();
                Some(acc.clone())
            })
            .collect()
    }

    /// Checks the divisibility chain, normalization, the rank, and the
    /// witnesses if present.
    pub fn check_invariants(&self, original: &Matrix<R>) -> std::result::Result<(), String> {
        let n = self.diagonal.len();
        for (k, d) in self.diagonal.iter().enumerate() {
            if (k < self.rank) == d.is_zero() {
                return Err(format!("d_{} is inconsistent with rank {}", k + 1, self.rank));
            }
            if !d.is_zero() && d.normalize() != *d {
                return Err(format!("d_{} is not unit-normal", k + 1));
            }
        }
        for k in 1..n {
            if !self.diagonal[k - 1].divides(&self.diagonal[k]) {
                return Err(format!("d_{k} does not divide d_{}", k + 1));
            }
        }
        if let (Some(l), Some(r)) = (&self.left, &self.right) {
            let prod = l.mul(original).mul(r);
            let mut diag = Matrix::zeros(original.nrows(), original.ncols());
            for (k, d) in self.diagonal.iter().enumerate() {
                diag[(k, k)] = d.clone();
            }
            if prod != diag {
                return Err("L·A·R differs from the diagonal".into());
            }
            for (name, w) in [("L", l), ("R", r)] {
                let det = w.determinant().map_err(|e| e.to_string())?;
                if !det.is_unit() {
                    return Err(format!("det {name} is not a unit"));
                }
            }
        }
        Ok(())
    }
}

struct Reducer<R> {
    a: Matrix<R>,
    left: Option<Matrix<R>>,
    right: Option<Matrix<R>>,
}

impl<R: EuclideanDomain> Reducer<R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(l) = &mut self.left {
            l.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(r) = &mut self.right {
            r.swap_cols(i, j);
        }
    }

    /// Rows `(s, t) <- ((x, y), (z, w)) · (row s, row t)`.
    fn mix_rows(&mut self, s: usize, t: usize, [x, y, z, w]: [&R; 4]) {
        fn apply<R: EuclideanDomain>(m: &mut Matrix<R>, s: usize, t: usize, c: [&R; 4]) {
            for j in 0..m.ncols() {
                let (a, b) = (m[(s, j)].clone(), m[(t, j)].clone());
                m[(s, j)] = c[0].clone() * a.clone() + c[1].clone() * b.clone();
                m[(t, j)] = c[2].clone() * a + c[3].clone() * b;
            }
        }
        apply(&mut self.a, s, t, [x, y, z, w]);
        if let Some(l) = &mut self.left {
            apply(l, s, t, [x, y, z, w]);
        }
    }

    /// Columns `(s, t) <- (col s, col t) · ((x, z), (y, w))`.
    fn mix_cols(&mut self, s: usize, t: usize, [x, y, z, w]: [&R; 4]) {
        fn apply<R: EuclideanDomain>(m: &mut Matrix<R>, s: usize, t: usize, c: [&R; 4]) {
            for i in 0..m.nrows() {
                let (a, b) = (m[(i, s)].clone(), m[(i, t)].clone());
                m[(i, s)] = c[0].clone() * a.clone() + c[1].clone() * b.clone();
                m[(i, t)] = c[2].clone() * a + c[3].clone() * b;
            }
        }
        apply(&mut self.a, s, t, [x, y, z, w]);
        if let Some(r) = &mut self.right {
            apply(r, s, t, [x, y, z, w]);
        }
    }

    /// Unimodular 2×2 combination zeroing `b` against the pivot `a`.
    fn eliminator(a: &R, b: &R) -> [R; 4] {
        if a.divides(b) {
            let q = b.exact_div(a).expect("a divides b");
            [R::one(), R::zero(), -q, R::one()]
        } else {
            let (g, u, v) = a.bezout(b).expect("pivot is nonzero");
            let x = a.exact_div(&g).expect("gcd divides a");
            let y = b.exact_div(&g).expect("gcd divides b");
            [u, v, -y, x]
        }
    }

    fn pivot_position(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), usize)> = None;
        for i in t..self.a.nrows() {
            for j in t..self.a.ncols() {
                if let Some(n) = self.a[(i, j)].norm() {
                    if best.is_none_or(|(_, b)| n < b) {
                        best = Some(((i, j), n));
                    }
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    fn reduce(&mut self) {
        let (n, m) = (self.a.nrows(), self.a.ncols());
        for t in 0..n.min(m) {
            let Some((pi, pj)) = self.pivot_position(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                for i in t + 1..n {
                    if !self.a[(i, t)].is_zero() {
                        let c = Self::eliminator(&self.a[(t, t)], &self.a[(i, t)]);
                        self.mix_rows(t, i, [&c[0], &c[1], &c[2], &c[3]]);
                    }
                }
                for j in t + 1..m {
                    if !self.a[(t, j)].is_zero() {
                        let c = Self::eliminator(&self.a[(t, t)], &self.a[(t, j)]);
                        self.mix_cols(t, j, [&c[0], &c[1], &c[2], &c[3]]);
                    }
                }
                if (t + 1..n).any(|i| !self.a[(i, t)].is_zero()) {
                    continue;
                }
                // the pivot must divide the whole trailing block
                let pivot = self.a[(t, t)].clone();
                let offender = (t + 1..n).find(|&i| (t + 1..m).any(|j| !pivot.divides(&self.a[(i, j)])));
                match offender {
                    Some(i) => {
                        let (one, zero) = (R::one(), R::zero());
                        self.mix_rows(t, i, [&one, &one, &zero, &one]);
                    }
                    None => break,
                }
            }
            let d = self.a[(t, t)].clone();
            let normal = d.normalize();
            if normal != d {
                let unit = normal.exact_div(&d).expect("associates");
                let zero = R::zero();
                let one = R::one();
                // scale row t only: ((unit, 0), (0, 1)) on rows (t, t)
                if t + 1 < n {
                    self.mix_rows(t, t + 1, [&unit, &zero, &zero, &one]);
                } else if let Some(l) = &mut self.left {
                    for j in 0..l.ncols() {
                        l[(t, j)] = unit.clone() * l[(t, j)].clone();
                    }
                    self.a[(t, t)] = normal;
                } else {
                    self.a[(t, t)] = normal;
                }
            }
        }
    }
}

pub fn smith_normal_form<R: EuclideanDomain>(mat: &Matrix<R>) -> SnfResult<R> {
    snf_impl(mat, false)
}

/// Like [`smith_normal_form`], also returning `L`, `R` with `L·A·R = D`.
pub fn smith_normal_form_with_witnesses<R: EuclideanDomain>(mat: &Matrix<R>) -> SnfResult<R> {
    snf_impl(mat, true)
}

fn snf_impl<R: EuclideanDomain>(mat: &Matrix<R>, witnesses: bool) -> SnfResult<R> {
    let mut red = Reducer {
        a: mat.clone(),
        left: witnesses.then(|| Matrix::identity(mat.nrows())),
        right: witnesses.then(|| Matrix::identity(mat.ncols())),
    };
    red.reduce();
    let k = mat.nrows().min(mat.ncols());
    let diagonal: Vec<R> = (0..k).map(|i| red.a[(i, i)].clone()).collect();
    let rank = diagonal.iter().take_while(|d| !d.is_zero()).count();
    SnfResult {
        diagonal,
        rank,
        left: red.left,
        right: red.right,
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Entry `k-1` is the unit-normal gcd of all `k × k` minors (0 if they all vanish).
///
/// The minors are generated level by level with Laplace expansion along the
/// last chosen row, so no division is ever performed.
pub fn minor_gcd_profile<R: EuclideanDomain>(mat: &Matrix<R>, bound: usize) -> Result<Vec<R>> {
    let n = mat.nrows();
    if !mat.is_square() {
        return Err(Error::NotSquare {
            rows: n,
            cols: mat.ncols(),
        });
    }
    if n > bound {
        return Err(Error::MinorBoundExceeded { order: n, bound });
    }
    let mut profile = Vec::with_capacity(n);
    // (row mask, column mask) -> minor
    let mut level: HashMap<(u32, u32), R> = HashMap::from([((0, 0), R::one())]);
    for k in 1..=n {
        let subsets: Vec<u32> = combinations(n, k).iter().map(|s| mask(s)).collect();
        let mut next = HashMap::with_capacity(subsets.len() * subsets.len());
        for &rows in &subsets {
            let last = 31 - rows.leading_zeros() as usize;
            let rest = rows & !(1 << last);
            for &cols in &subsets {
                let mut acc = R::zero();
                for (idx, c) in (0..n).filter(|c| cols >> c & 1 == 1).enumerate() {
                    let a = &mat[(last, c)];
                    let sub = &level[&(rest, cols & !(1 << c))];
                    if a.is_zero() || sub.is_zero() {
                        continue;
                    }
                    let term = a.clone() * sub.clone();
                    acc = if (k - 1 + idx) % 2 == 0 { acc + term } else { acc - term };
                }
                next.insert((rows, cols), acc);
            }
        }
        level = next;
        let mut minors: Vec<&R> = level.values().filter(|m| !m.is_zero()).collect();
        minors.sort_by_key(|m| m.norm());
        let mut g = R::zero();
        for minor in minors {
            g = if g.is_zero() { minor.normalize() } else { g.gcd(minor)? };
            if g.is_unit() {
                break;
            }
        }
        profile.push(g);
    }
    Ok(profile)
}

fn mask(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &i| m | 1 << i)
}

/// Block-diagonal `(I_times, mat)`.
pub fn stabilize<R: EuclideanDomain>(mat: &Matrix<R>, times: usize) -> Matrix<R> {
    let (n, m) = (mat.nrows(), mat.ncols());
    Matrix::from_fn(n + times, m + times, |i, j| match (i < times, j < times) {
        (true, true) if i == j => R::one(),
        (false, false) => mat[(i - times, j - times)].clone(),
        _ => R::zero(),
    })
}

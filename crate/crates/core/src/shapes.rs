//! Young diagrams: partitions, skew shapes, hooks, Frobenius coordinates,
//! border strips and rim peeling.
//!
//! Cells are 1-based `(row, col)` with row 1 on top. Cell coordinates are
//! signed so that translated ribbons (cutting strips) can be represented
//! without losing their absolute contents; cells of an actual diagram are
//! always positive.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Cell {
    pub row: i64,
    pub col: i64,
}

impl Cell {
    pub const fn new(row: i64, col: i64) -> Self {
        Cell { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col - self.row
    }

    pub fn up(&self) -> Cell {
        Cell::new(self.row - 1, self.col)
    }

    pub fn right(&self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn step(&self, step: Step) -> Cell {
        match step {
            Step::Up => self.up(),
            Step::Right => self.right(),
        }
    }
}

impl From<[i64; 2]> for Cell {
    fn from([row, col]: [i64; 2]) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for [i64; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// One move along a border strip, from content `c` to content `c + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Right,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Right => 'R',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'U' | 'u' => Ok(Step::Up),
            'R' | 'r' => Ok(Step::Right),
            other => Err(Error::BadDirectionChar(other)),
        }
    }
}

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Trailing zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `λ'_j`, the length of column `j`.
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.part(1)).map(|j| self.column_len(j)).collect();
        Partition { parts }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col as usize <= self.part(cell.row as usize)
    }

    /// Row-major list of cells.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i as i64 + 1, j as i64)))
            .collect()
    }

    pub fn contains_partition(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Largest `r` with `(r, r)` in the diagram.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutsideDiagram(cell));
        }
        let (i, j) = (cell.row as usize, cell.col as usize);
        Ok(self.part(i) - j + self.column_len(j) - i + 1)
    }

    pub fn frobenius(&self) -> FrobeniusNotation {
        let r = self.rank();
        FrobeniusNotation {
            alphas: (1..=r).map(|i| self.part(i) - i).collect(),
            betas: (1..=r).map(|i| self.column_len(i) - i).collect(),
        }
    }

    /// `D_i`: the cell `(i, i)` with its arm and leg; empty past the rank.
    pub fn diagonal_hook(&self, i: usize) -> Vec<Cell> {
        if i == 0 || i > self.rank() {
            return Vec::new();
        }
        let d = i as i64;
        let leg = (i + 1..=self.column_len(i))
            .rev()
            .map(|row| Cell::new(row as i64, d));
        let arm = (i..=self.part(i)).map(|col| Cell::new(d, col as i64));
        leg.chain(arm).collect()
    }

    /// `Σ (k-1) λ_k`.
    pub fn b_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(k, &p)| k * p).sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                go(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All nonempty partitions with `1 <= |λ| <= max`.
    pub fn all_up_to(max: usize) -> Vec<Partition> {
        (1..=max).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self`, including the empty one and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &Partition, row: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row > outer.len() {
                out.push(Partition::new(prefix.clone()).expect("bounded by the previous part"));
                return;
            }
            for k in 0..=outer.part(row).min(bound) {
                prefix.push(k);
                go(outer, row + 1, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 1, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Partition::empty());
        }
        let parts = s
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadPartitionToken(tok.trim().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Frobenius coordinates `(α | β)`: arm and leg lengths of the diagonal cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusNotation {
    alphas: Vec<usize>,
    betas: Vec<usize>,
}

impl FrobeniusNotation {
    pub fn new(alphas: Vec<usize>, betas: Vec<usize>) -> Result<Self> {
        if alphas.len() != betas.len() {
            return Err(Error::BadFrobenius(format!(
                "{} arms but {} legs",
                alphas.len(),
                betas.len()
            )));
        }
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&alphas) || !strict(&betas) {
            return Err(Error::BadFrobenius(format!(
                "({alphas:?} | {betas:?}) is not strictly decreasing"
            )));
        }
        Ok(FrobeniusNotation { alphas, betas })
    }

    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    pub fn betas(&self) -> &[usize] {
        &self.betas
    }

    pub fn rank(&self) -> usize {
        self.alphas.len()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        let height = self.betas.first().map_or(0, |b| b + 1);
        let parts = (1..=height)
            .map(|row| {
                let arm = if row <= r { self.alphas[row - 1] + row } else { 0 };
                // columns j <= r whose leg reaches this row
                let legs = (1..=r.min(row)).filter(|&j| self.betas[j - 1] + j >= row).count();
                arm.max(legs)
            })
            .collect();
        Partition::new(parts).expect("Frobenius coordinates describe a partition")
    }
}

impl fmt::Display for FrobeniusNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.alphas), join(&self.betas))
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains_partition(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts.clone(),
                inner: inner.parts.clone(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .into_iter()
            .filter(|&c| !self.inner.contains(c))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Edgewise connected ribbon, stored from its lowest-content cell upward.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorderStrip {
    cells: Vec<Cell>,
}

impl BorderStrip {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::NotABorderStrip("no cells".into()));
        }
        for w in cells.windows(2) {
            if w[1] != w[0].up() && w[1] != w[0].right() {
                return Err(Error::NotABorderStrip(format!(
                    "{} is not directly above or right of {}",
                    w[1], w[0]
                )));
            }
        }
        Ok(BorderStrip { cells })
    }

    pub fn from_steps(start: Cell, steps: &[Step]) -> Self {
        let mut cells = Vec::with_capacity(steps.len() + 1);
        cells.push(start);
        for &s in steps {
            let next = cells.last().unwrap().step(s);
            cells.push(next);
        }
        BorderStrip { cells }
    }

    /// Orders an unordered cell set by content and validates it.
    pub fn from_cell_set(mut cells: Vec<Cell>) -> Result<Self> {
        cells.sort_by_key(|c| (c.content(), std::cmp::Reverse(c.row)));
        Self::new(cells)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn end(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    /// Content of the starting cell.
    pub fn start_content(&self) -> i64 {
        self.start().content()
    }

    /// Content of the ending cell.
    pub fn end_content(&self) -> i64 {
        self.end().content()
    }

    pub fn steps(&self) -> Vec<Step> {
        self.cells
            .windows(2)
            .map(|w| if w[1] == w[0].up() { Step::Up } else { Step::Right })
            .collect()
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells.iter().copied().collect()
    }

    pub fn has_two_by_two_block(&self) -> bool {
        let set = self.cell_set();
        set.iter().any(|c| {
            set.contains(&c.right())
                && set.contains(&Cell::new(c.row + 1, c.col))
                && set.contains(&Cell::new(c.row + 1, c.col + 1))
        })
    }

    /// The cell of content `c`, if any.
    pub fn cell_with_content(&self, c: i64) -> Option<Cell> {
        let idx = c - self.start_content();
        usize::try_from(idx).ok().and_then(|i| self.cells.get(i)).copied()
    }
}

/// Peels successive rims `θ_1, θ_2, …` off the diagram, outermost first.
pub fn rim_decomposition(p: &Partition) -> Vec<BorderStrip> {
    let mut remaining: BTreeSet<Cell> = p.cells().into_iter().collect();
    let mut strips = Vec::new();
    while !remaining.is_empty() {
        let rim: Vec<Cell> = remaining
            .iter()
            .copied()
            .filter(|c| !remaining.contains(&Cell::new(c.row + 1, c.col + 1)))
            .collect();
        for c in &rim {
            remaining.remove(c);
        }
        strips.push(BorderStrip::from_cell_set(rim).expect("the rim of a diagram is a ribbon"));
    }
    strips
}

/// Translates a ribbon into skew-shape position.
///
/// Returns the shape and the content offset: a cell of content `c` in the
/// shape corresponds to content `c + offset` in the original strip.
pub fn ribbon_to_skew(strip: &BorderStrip) -> (SkewShape, i64) {
    let min_row = strip.cells.iter().map(|c| c.row).min().unwrap();
    let min_col = strip.cells.iter().map(|c| c.col).min().unwrap();
    let rows = (strip.cells.iter().map(|c| c.row).max().unwrap() - min_row + 1) as usize;
    let mut outer = vec![0usize; rows];
    let mut inner = vec![usize::MAX; rows];
    for c in &strip.cells {
        let r = (c.row - min_row) as usize;
        let col = (c.col - min_col + 1) as usize;
        outer[r] = outer[r].max(col);
        inner[r] = inner[r].min(col - 1);
    }
    let shape = SkewShape::new(
        Partition::new(outer).expect("ribbon rows shift left going down"),
        Partition::new(inner).expect("ribbon rows shift left going down"),
    )
    .expect("ribbon rows are nonempty");
    (shape, (min_col - 1) - (min_row - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(v: &[(i64, i64)]) -> Vec<Cell> {
        v.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(part("2,1").rank(), 1);
        assert_eq!(Partition::empty().rank(), 0);
        assert_eq!(part("4,3,3,1").rank(), 3);
    }

    #[test]
    fn frobenius_examples() {
        let f = part("3,2,1").frobenius();
        assert_eq!((f.alphas(), f.betas()), (&[2, 0][..], &[2, 0][..]));
        let f = part("1").frobenius();
        assert_eq!((f.alphas(), f.betas()), (&[0][..], &[0][..]));
        let f = part("4,3,3,1").frobenius();
        // self-conjugate, so α = β; sizes must agree: Σ(α+β) + r = 11
        assert_eq!((f.alphas(), f.betas()), (&[3, 1, 0][..], &[3, 1, 0][..]));
        assert_eq!(f.to_partition(), part("4,3,3,1"));
        assert!(Partition::empty().frobenius().alphas().is_empty());
    }

    #[test]
    fn diagonal_hook_examples() {
        let mut d = part("2,1").diagonal_hook(1);
        d.sort();
        assert_eq!(d, cells(&[(1, 1), (1, 2), (2, 1)]));
        assert!(part("2,1").diagonal_hook(2).is_empty());
        assert_eq!(part("2,2").diagonal_hook(2), cells(&[(2, 2)]));
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(part("2,1").hook_length(Cell::new(1, 1)).unwrap(), 3);
        assert_eq!(part("2,2").hook_length(Cell::new(1, 1)).unwrap(), 3);
        assert_eq!(part("5").hook_length(Cell::new(1, 2)).unwrap(), 4);
        assert!(matches!(
            part("2,1").hook_length(Cell::new(2, 2)),
            Err(Error::CellOutsideDiagram(_))
        ));
    }

    #[test]
    fn rim_examples() {
        let rims = rim_decomposition(&part("3,2,1"));
        assert_eq!(rims.len(), 2);
        assert_eq!(rims[0].cells(), &cells(&[(3, 1), (2, 1), (2, 2), (1, 2), (1, 3)])[..]);
        assert_eq!(rims[1].cells(), &cells(&[(1, 1)])[..]);

        let rims = rim_decomposition(&part("1"));
        assert_eq!(rims.len(), 1);
        assert_eq!(rims[0].cells(), &cells(&[(1, 1)])[..]);

        let rims = rim_decomposition(&part("2,2"));
        assert_eq!(rims[0].cells(), &cells(&[(2, 1), (2, 2), (1, 2)])[..]);
        assert_eq!(rims[1].cells(), &cells(&[(1, 1)])[..]);
    }

    #[test]
    fn ribbon_to_skew_examples() {
        let horiz = BorderStrip::from_steps(Cell::new(5, 5), &[Step::Right, Step::Right]);
        assert_eq!(ribbon_to_skew(&horiz).0, SkewShape::straight(part("3")));
        let vert = BorderStrip::from_steps(Cell::new(0, -3), &[Step::Up, Step::Up]);
        assert_eq!(ribbon_to_skew(&vert).0, SkewShape::straight(part("1,1,1")));
        let bent = BorderStrip::new(cells(&[(2, 1), (2, 2), (1, 2)])).unwrap();
        let (shape, offset) = ribbon_to_skew(&bent);
        assert_eq!(shape, SkewShape::new(part("2,2"), part("1")).unwrap());
        assert_eq!(shape.size(), 3);
        assert_eq!(offset, 0);
        // translated copy keeps its absolute contents through the offset
        let moved = BorderStrip::new(cells(&[(-3, 4), (-3, 5), (-4, 5)])).unwrap();
        let (shape2, off2) = ribbon_to_skew(&moved);
        assert_eq!(shape2, shape);
        assert_eq!(off2, moved.start_content() - bent.start_content());
    }

    #[test]
    fn border_strip_rejects_gaps() {
        assert!(BorderStrip::new(cells(&[(1, 1), (1, 3)])).is_err());
        assert!(BorderStrip::new(vec![]).is_err());
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(part("4,3,1").parts(), &[4, 3, 1]);
        assert_eq!(
            "4,x".parse::<Partition>(),
            Err(Error::BadPartitionToken("x".into()))
        );
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&part("3,1")).unwrap(), "[3,1]");
        assert_eq!(serde_json::to_string(&Cell::new(2, 1)).unwrap(), "[2,1]");
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all_up_to(10).len(), 138);
        // (2,1) contains (), (1), (2), (1,1), (2,1)
        assert_eq!(part("2,1").subpartitions().len(), 5);
    }
}

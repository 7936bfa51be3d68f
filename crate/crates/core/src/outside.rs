//! Outside decompositions of a diagram, generated from cutting strips.
//!
//! All cells on one diagonal of an outside decomposition continue their
//! strips the same way (up or right), so a decomposition is determined by a
//! direction per content `c < max`. That vector is also the step sequence
//! of the cutting strip, a ribbon with one cell per diagonal.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::shapes::{rim_decomposition, BorderStrip, Cell, Partition, Step};

/// One step per content `min_content ..= max_content - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectionVector {
    min_content: i64,
    steps: Vec<Step>,
}

impl DirectionVector {
    pub fn new(p: &Partition, steps: Vec<Step>) -> Result<Self> {
        let d = diagonal_count(p)?;
        if steps.len() != d - 1 {
            return Err(Error::DirectionLength {
                expected: d - 1,
                got: steps.len(),
            });
        }
        Ok(DirectionVector {
            min_content: min_content(p),
            steps,
        })
    }

    /// Parses a `U`/`R` string ordered by increasing content, e.g. `"URRU"`.
    pub fn parse(p: &Partition, s: &str) -> Result<Self> {
        let steps = s.trim().chars().map(Step::from_char).collect::<Result<_>>()?;
        Self::new(p, steps)
    }

    pub fn min_content(&self) -> i64 {
        self.min_content
    }

    pub fn max_content(&self) -> i64 {
        self.min_content + self.steps.len() as i64
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Direction taken by cells of content `c`; `None` on the last diagonal.
    pub fn at(&self, c: i64) -> Option<Step> {
        usize::try_from(c - self.min_content)
            .ok()
            .and_then(|i| self.steps.get(i))
            .copied()
    }
}

impl fmt::Display for DirectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

/// The three classical decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecompositionKind {
    /// Rows; gives the Jacobi–Trudi matrix.
    Horizontal,
    /// Diagonal hooks; gives the Giambelli matrix.
    Hook,
    /// Successive rims; gives the Lascoux–Pragacz matrix.
    Rim,
}

impl DecompositionKind {
    pub const ALL: [DecompositionKind; 3] = [Self::Horizontal, Self::Hook, Self::Rim];

    pub fn name(self) -> &'static str {
        match self {
            Self::Horizontal => "horizontal",
            Self::Hook => "hook",
            Self::Rim => "rim",
        }
    }
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of cutting the segment `θ[p, q]` out of a cutting strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment {
    Strip(BorderStrip),
    /// `p = q + 1`; its Schur function is 1.
    Empty,
    /// `p > q + 1`; its Schur function is 0.
    Undefined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutsideDecomposition {
    shape: Partition,
    direction: DirectionVector,
    strips: Vec<BorderStrip>,
    cutting_strip: BorderStrip,
}

fn min_content(p: &Partition) -> i64 {
    1 - p.len() as i64
}

/// Number of nonempty diagonals, `λ_1 + ℓ(λ) - 1`.
pub fn diagonal_count(p: &Partition) -> Result<usize> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(p.part(1) + p.len() - 1)
}

/// Builds `Π` from its cutting strip.
///
/// Each cell continues to the cell above or to its right according to the
/// direction of its diagonal, when that cell is in the diagram. Strips are
/// ordered by strictly decreasing ending-cell content, which lists rows top
/// to bottom, diagonal hooks as `D_1, D_2, …` and rims outermost first.
pub fn build_decomposition(p: &Partition, dir: &DirectionVector) -> Result<OutsideDecomposition> {
    let d = diagonal_count(p)?;
    if dir.steps.len() != d - 1 || dir.min_content != min_content(p) {
        return Err(Error::DirectionLength {
            expected: d - 1,
            got: dir.steps.len(),
        });
    }
    let successor = |c: Cell| -> Option<Cell> {
        let next = c.step(dir.at(c.content())?);
        p.contains(next).then_some(next)
    };
    let cells = p.cells();
    let targets: BTreeSet<Cell> = cells.iter().filter_map(|&c| successor(c)).collect();
    let mut strips: Vec<BorderStrip> = cells
        .iter()
        .filter(|c| !targets.contains(c))
        .map(|&start| {
            let mut chain = vec![start];
            while let Some(next) = successor(*chain.last().unwrap()) {
                chain.push(next);
            }
            BorderStrip::new(chain).expect("successors step up or right")
        })
        .collect();
    strips.sort_by_key(|s| std::cmp::Reverse(s.end_content()));

    let start = Cell::new(p.len() as i64, 1);
    let cutting_strip = BorderStrip::from_steps(start, &dir.steps);
    Ok(OutsideDecomposition {
        shape: p.clone(),
        direction: dir.clone(),
        strips,
        cutting_strip,
    })
}

pub fn canonical_direction(p: &Partition, kind: DecompositionKind) -> Result<DirectionVector> {
    let d = diagonal_count(p)?;
    let lo = min_content(p);
    let steps = match kind {
        DecompositionKind::Horizontal => vec![Step::Right; d - 1],
        DecompositionKind::Hook => (0..d - 1)
            .map(|i| if lo + (i as i64) < 0 { Step::Up } else { Step::Right })
            .collect(),
        DecompositionKind::Rim => rim_decomposition(p)[0].steps(),
    };
    DirectionVector::new(p, steps)
}

pub fn canonical_decomposition(p: &Partition, kind: DecompositionKind) -> Result<OutsideDecomposition> {
    build_decomposition(p, &canonical_direction(p, kind)?)
}

/// Direction vector number `index` in lexicographic string order (`R < U`).
pub fn direction_by_index(p: &Partition, index: u64) -> Result<DirectionVector> {
    let n = diagonal_count(p)? - 1;
    let steps = (0..n)
        .map(|i| {
            if (index >> (n - 1 - i)) & 1 == 1 {
                Step::Up
            } else {
                Step::Right
            }
        })
        .collect();
    DirectionVector::new(p, steps)
}

/// All `2^(d-1)` outside decompositions, in lexicographic direction order.
pub fn enumerate_decompositions(
    p: &Partition,
) -> Result<impl Iterator<Item = OutsideDecomposition> + '_> {
    let n = diagonal_count(p)? - 1;
    let total = 1u64 << n;
    Ok((0..total).map(move |i| {
        let dir = direction_by_index(p, i).expect("length matches");
        build_decomposition(p, &dir).expect("length matches")
    }))
}

fn direction_index(dir: &DirectionVector) -> u64 {
    dir.steps
        .iter()
        .fold(0, |acc, &s| (acc << 1) | u64::from(s == Step::Up))
}

/// The distinct canonical decompositions followed by `random` further ones
/// drawn without replacement from a generator seeded with `seed`; every
/// decomposition when there are no more than that many in total.
pub fn sample_decompositions(p: &Partition, random: usize, seed: u64) -> Result<Vec<OutsideDecomposition>> {
    let n = diagonal_count(p)? - 1;
    let mut chosen: Vec<u64> = Vec::new();
    for kind in DecompositionKind::ALL {
        let i = direction_index(&canonical_direction(p, kind)?);
        if !chosen.contains(&i) {
            chosen.push(i);
        }
    }
    let total = 1u128 << n;
    if total <= (chosen.len() + random) as u128 {
        return Ok(enumerate_decompositions(p)?.collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = chosen.len() + random;
    while chosen.len() < target {
        let i = rng.gen_range(0..(1u64 << n));
        if !chosen.contains(&i) {
            chosen.push(i);
        }
    }
    chosen
        .into_iter()
        .map(|i| build_decomposition(p, &direction_by_index(p, i)?))
        .collect()
}

/// Checks an explicit strip list against the outside-decomposition rules and
/// returns the decomposition it corresponds to.
pub fn decomposition_from_strips(p: &Partition, strips: &[BorderStrip]) -> Result<OutsideDecomposition> {
    let bad = |m: String| Error::InvalidDecomposition(m);
    let mut seen = BTreeSet::new();
    for s in strips {
        for &c in s.cells() {
            if !p.contains(c) {
                return Err(bad(format!("{c} lies outside {p}")));
            }
            if !seen.insert(c) {
                return Err(bad(format!("{c} lies in two strips")));
            }
        }
    }
    if seen.len() != p.size() {
        return Err(bad("strips do not cover the diagram".into()));
    }
    let d = diagonal_count(p)?;
    let lo = min_content(p);
    let mut chosen: HashMap<i64, Step> = HashMap::new();
    for s in strips {
        for (c, step) in s.cells().iter().zip(s.steps()) {
            if let Some(prev) = chosen.insert(c.content(), step) {
                if prev != step {
                    return Err(bad(format!("diagonal {} goes both up and right", c.content())));
                }
            }
        }
    }
    let steps = (0..d - 1)
        .map(|i| {
            let c = lo + i as i64;
            if let Some(&s) = chosen.get(&c) {
                return Ok(s);
            }
            // every cell on this diagonal ends a strip; pick a direction that leaves the diagram
            let diag: Vec<Cell> = p.cells().into_iter().filter(|x| x.content() == c).collect();
            [Step::Right, Step::Up]
                .into_iter()
                .find(|&s| diag.iter().all(|x| !p.contains(x.step(s))))
                .ok_or_else(|| bad(format!("strip ends on diagonal {c} could be extended")))
        })
        .collect::<Result<Vec<_>>>()?;
    let dec = build_decomposition(p, &DirectionVector::new(p, steps)?)?;
    let mine: BTreeSet<_> = strips.iter().map(|s| s.cells().to_vec()).collect();
    let built: BTreeSet<_> = dec.strips.iter().map(|s| s.cells().to_vec()).collect();
    if mine != built {
        return Err(bad("strips are not maximal under the induced directions".into()));
    }
    Ok(dec)
}

impl OutsideDecomposition {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn direction(&self) -> &DirectionVector {
        &self.direction
    }

    pub fn strips(&self) -> &[BorderStrip] {
        &self.strips
    }

    pub fn cutting_strip(&self) -> &BorderStrip {
        &self.cutting_strip
    }

    /// Number of strips `m`, the order of the Giambelli-type matrix.
    pub fn order(&self) -> usize {
        self.strips.len()
    }

    pub fn theta_segment(&self, p: i64, q: i64) -> Result<Segment> {
        if p == q + 1 {
            return Ok(Segment::Empty);
        }
        if p > q + 1 {
            return Ok(Segment::Undefined);
        }
        let (min, max) = (self.direction.min_content(), self.direction.max_content());
        if p < min || q > max {
            return Err(Error::SegmentOutOfRange { p, q, min, max });
        }
        let from = (p - min) as usize;
        let to = (q - min) as usize;
        let cells = self.cutting_strip.cells()[from..=to].to_vec();
        Ok(Segment::Strip(BorderStrip::new(cells)?))
    }

    /// Machine check of every structural invariant; `Err` names the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let p = &self.shape;
        let mut seen = BTreeSet::new();
        for s in &self.strips {
            if s.has_two_by_two_block() {
                return Err(format!("strip starting at {} has a 2x2 block", s.start()));
            }
            for &c in s.cells() {
                if !p.contains(c) || !seen.insert(c) {
                    return Err(format!("{c} is outside the diagram or repeated"));
                }
            }
            let st = s.start();
            if !(st.col == 1 || !p.contains(Cell::new(st.row + 1, st.col))) {
                return Err(format!("start {st} is not on the left or bottom perimeter"));
            }
            let en = s.end();
            if !(en.row == 1 || !p.contains(en.right())) {
                return Err(format!("end {en} is not on the right or top perimeter"));
            }
            for (c, step) in s.cells().iter().zip(s.steps()) {
                if self.direction.at(c.content()) != Some(step) {
                    return Err(format!("{c} disagrees with its diagonal direction"));
                }
            }
        }
        if seen.len() != p.size() {
            return Err("strips do not cover the diagram".into());
        }
        if self.strips.windows(2).any(|w| w[0].end_content() <= w[1].end_content()) {
            return Err("strips are not ordered by decreasing end content".into());
        }
        let d = diagonal_count(p).map_err(|e| e.to_string())?;
        if self.cutting_strip.len() != d || self.cutting_strip.steps() != self.direction.steps {
            return Err("cutting strip does not follow the direction vector".into());
        }
        if self.cutting_strip.start_content() != self.direction.min_content() {
            return Err("cutting strip is misplaced".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sampling() {
        // (2,1) has 4 decompositions, fewer than 3 + 8
        assert_eq!(sample_decompositions(&part("2,1"), 8, 1).unwrap().len(), 4);
        let p = part("4,3,1");
        let a = sample_decompositions(&p, 8, 7).unwrap();
        assert_eq!(a.len(), 11);
        let dirs: BTreeSet<String> = a.iter().map(|d| d.direction().to_string()).collect();
        assert_eq!(dirs.len(), 11);
        for kind in DecompositionKind::ALL {
            assert_eq!(a[kind as usize].direction(), &canonical_direction(&p, kind).unwrap());
        }
        let b = sample_decompositions(&p, 8, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(sample_decompositions(&part("1"), 8, 0).unwrap().len(), 1);
    }

    fn cells(v: &[(i64, i64)]) -> Vec<Cell> {
        v.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    fn strip_cells(dec: &OutsideDecomposition) -> Vec<Vec<Cell>> {
        dec.strips().iter().map(|s| s.cells().to_vec()).collect()
    }

    #[test]
    fn rows_and_columns_of_two_by_two() {
        let p = part("2,2");
        let rows = build_decomposition(&p, &DirectionVector::parse(&p, "RR").unwrap()).unwrap();
        assert_eq!(strip_cells(&rows), vec![cells(&[(1, 1), (1, 2)]), cells(&[(2, 1), (2, 2)])]);
        let cols = build_decomposition(&p, &DirectionVector::parse(&p, "UU").unwrap()).unwrap();
        let mut got = strip_cells(&cols);
        got.sort();
        assert_eq!(got, vec![cells(&[(2, 1), (1, 1)]), cells(&[(2, 2), (1, 2)])]);
        rows.check_invariants().unwrap();
        cols.check_invariants().unwrap();
    }

    #[test]
    fn single_cell() {
        let p = part("1");
        let dec = build_decomposition(&p, &DirectionVector::parse(&p, "").unwrap()).unwrap();
        assert_eq!(strip_cells(&dec), vec![cells(&[(1, 1)])]);
    }

    #[test]
    fn direction_length_checked() {
        let p = part("2,2");
        assert_eq!(
            DirectionVector::parse(&p, "R"),
            Err(Error::DirectionLength { expected: 2, got: 1 })
        );
        assert_eq!(DirectionVector::parse(&p, "RX"), Err(Error::BadDirectionChar('X')));
        assert!(matches!(diagonal_count(&Partition::empty()), Err(Error::EmptyPartition)));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_decompositions(&part("2,1")).unwrap().count(), 4);
        assert_eq!(enumerate_decompositions(&part("1")).unwrap().count(), 1);
        let all: Vec<_> = enumerate_decompositions(&part("3,2,1")).unwrap().collect();
        assert_eq!(all.len(), 16);
        let distinct: BTreeSet<_> = all.iter().map(strip_cells).collect();
        assert_eq!(distinct.len(), 16);
        assert_eq!(all[0].direction().to_string(), "RRRR");
        assert_eq!(all[15].direction().to_string(), "UUUU");
    }

    #[test]
    fn canonical_kinds() {
        let p = part("2,2");
        let hook = canonical_decomposition(&p, DecompositionKind::Hook).unwrap();
        assert_eq!(hook.direction().to_string(), "UR");
        assert_eq!(strip_cells(&hook), vec![cells(&[(2, 1), (1, 1), (1, 2)]), cells(&[(2, 2)])]);
        assert_eq!(strip_cells(&hook)[0], p.diagonal_hook(1));

        let p = part("3,2,1");
        let horiz = canonical_decomposition(&p, DecompositionKind::Horizontal).unwrap();
        assert_eq!(horiz.direction().to_string(), "RRRR");
        assert_eq!(horiz.order(), 3);

        let p = part("2,2");
        let rim = canonical_decomposition(&p, DecompositionKind::Rim).unwrap();
        assert_eq!(rim.direction().to_string(), "RU");
        let rims: Vec<Vec<Cell>> = rim_decomposition(&p).iter().map(|s| s.cells().to_vec()).collect();
        assert_eq!(strip_cells(&rim), rims);
    }

    #[test]
    fn theta_segments() {
        let p = part("3,2,1");
        let rim = canonical_decomposition(&p, DecompositionKind::Rim).unwrap();
        assert_eq!(rim.theta_segment(0, 0).unwrap(), Segment::Strip(BorderStrip::new(cells(&[(2, 2)])).unwrap()));
        assert_eq!(rim.theta_segment(1, 0).unwrap(), Segment::Empty);
        assert_eq!(rim.theta_segment(2, 0).unwrap(), Segment::Undefined);
        assert!(matches!(rim.theta_segment(-5, 0), Err(Error::SegmentOutOfRange { .. })));
    }

    #[test]
    fn explicit_strip_validation() {
        let p = part("2,2");
        let rows: Vec<BorderStrip> = vec![
            BorderStrip::new(cells(&[(1, 1), (1, 2)])).unwrap(),
            BorderStrip::new(cells(&[(2, 1), (2, 2)])).unwrap(),
        ];
        let dec = decomposition_from_strips(&p, &rows).unwrap();
        assert_eq!(dec.direction().to_string(), "RR");

        // single cells are not maximal
        let singles: Vec<BorderStrip> = p
            .cells()
            .into_iter()
            .map(|c| BorderStrip::new(vec![c]).unwrap())
            .collect();
        assert!(decomposition_from_strips(&p, &singles).is_err());

        // (1,1)->(1,2) with (2,1) alone and (2,2) alone: (2,1) could continue right
        let broken = vec![
            BorderStrip::new(cells(&[(1, 1), (1, 2)])).unwrap(),
            BorderStrip::new(cells(&[(2, 1)])).unwrap(),
            BorderStrip::new(cells(&[(2, 2)])).unwrap(),
        ];
        assert!(decomposition_from_strips(&p, &broken).is_err());
    }
}

//! Ring homomorphisms out of the symmetric functions, given by where they
//! send the complete homogeneous functions `h_i`.
//!
//! * [`PhiT`]: `x_1 = … = x_t = 1`, into `Q[t]`.
//! * [`QHat`]: `x_i = q^{i-1}` for `i <= t`, then `q^t = y`, into `Q(q)[y]`.
//! * [`QDiamond`]: the rescaled substitution `q^t -> 1/((1-q)y + 1)`, into `Q(q)[y]`.
//!
//! Skew Schur functions are carried over through the Jacobi–Trudi
//! determinant; straight shapes also have a closed hook-content product,
//! and agreement of the two routes is tested.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{Field, JsonCoeff, Poly, RationalFunction};
use crate::matrix::Matrix;
use crate::outside::Segment;
use crate::shapes::{BorderStrip, Partition, SkewShape, Step};
use crate::{QPoly, QqPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecKind {
    PhiT,
    QHat,
    QDiamond,
}

impl SpecKind {
    pub const ALL: [SpecKind; 3] = [Self::PhiT, Self::QHat, Self::QDiamond];

    pub fn name(self) -> &'static str {
        match self {
            Self::PhiT => "phi-t",
            Self::QHat => "q-hat",
            Self::QDiamond => "q-diamond",
        }
    }
}

impl fmt::Display for SpecKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown specialization `{s}` (expected phi-t, q-hat or q-diamond)"))
    }
}

/// A specialization homomorphism with values in `F[var]`.
pub trait Specialization: Send + Sync {
    type Coeff: Field + JsonCoeff;

    fn kind(&self) -> SpecKind;

    /// Name of the polynomial variable (`t` or `y`).
    fn variable(&self) -> &'static str;

    /// Image of `h_i`; 1 at `i = 0`, 0 for negative `i`.
    fn h(&self, i: i64) -> Poly<Self::Coeff>;

    /// Closed-form image of `s_λ` as a product over the cells of `λ`.
    fn hook_content(&self, p: &Partition) -> Poly<Self::Coeff>;

    /// Monic linear factor contributed by a cell of content `c` to a
    /// predicted Smith diagonal entry.
    fn diagonal_factor(&self, c: i64) -> Poly<Self::Coeff>;

    /// A second candidate factor, for specializations where two normal
    /// forms of the prediction are in circulation.
    fn alternative_diagonal_factor(&self, _c: i64) -> Option<Poly<Self::Coeff>> {
        None
    }
}

/// Lazily grown table of `h_0, h_1, …`.
struct HTable<F> {
    values: RwLock<Vec<Poly<F>>>,
}

impl<F: Field> HTable<F> {
    fn new() -> Self {
        HTable {
            values: RwLock::new(vec![Poly::one()]),
        }
    }

    /// `step(j)` is the factor taking `h_{j-1}` to `h_j`.
    fn get(&self, i: i64, step: impl Fn(i64) -> Poly<F>) -> Poly<F> {
        if i < 0 {
            return Poly::zero();
        }
        let i = i as usize;
        if let Some(v) = self.values.read().unwrap().get(i) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= i {
            let j = values.len() as i64;
            let next = values.last().unwrap() * &step(j);
            values.push(next);
        }
        values[i].clone()
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_i64(n)
}

/// `f(1^t)`, values in `Q[t]`.
pub struct PhiT {
    table: HTable<BigRational>,
}

impl PhiT {
    pub fn new() -> Self {
        PhiT { table: HTable::new() }
    }
}

impl Default for PhiT {
    fn default() -> Self {
        Self::new()
    }
}

impl Specialization for PhiT {
    type Coeff = BigRational;

    fn kind(&self) -> SpecKind {
        SpecKind::PhiT
    }

    fn variable(&self) -> &'static str {
        "t"
    }

    fn h(&self, i: i64) -> QPoly {
        // binom(t + i - 1, i) = prod_{j=1..i} (t + j - 1) / j
        self.table
            .get(i, |j| QPoly::linear(rat(j - 1)).scale(&BigRational::new(1.into(), j.into())))
    }

    fn hook_content(&self, p: &Partition) -> QPoly {
        p.cells().into_iter().fold(QPoly::one(), |acc, c| {
            let h = p.hook_length(c).expect("cell of p") as i64;
            &acc * &QPoly::linear(rat(c.content())).scale(&BigRational::new(1.into(), h.into()))
        })
    }

    fn diagonal_factor(&self, c: i64) -> QPoly {
        QPoly::linear(rat(c))
    }
}

fn q_pow(k: i64) -> RationalFunction {
    RationalFunction::q_pow(k)
}

fn q_int(k: i64) -> RationalFunction {
    RationalFunction::q_integer(k)
}

/// `1 - q^k y`.
fn one_minus_qk_y(k: i64) -> QqPoly {
    QqPoly::new(vec![RationalFunction::one(), -q_pow(k)])
}

fn inv(r: &RationalFunction) -> RationalFunction {
    r.inverse().expect("nonzero")
}

/// Principal specialization `f(1, q, …, q^{t-1})` with `q^t = y`, values in `Q(q)[y]`.
pub struct QHat {
    table: HTable<RationalFunction>,
}

impl QHat {
    pub fn new() -> Self {
        QHat { table: HTable::new() }
    }
}

impl Default for QHat {
    fn default() -> Self {
        Self::new()
    }
}

impl Specialization for QHat {
    type Coeff = RationalFunction;

    fn kind(&self) -> SpecKind {
        SpecKind::QHat
    }

    fn variable(&self) -> &'static str {
        "y"
    }

    fn h(&self, i: i64) -> QqPoly {
        // prod_{j=1..i} (1 - q^{j-1} y) / (1 - q^j)
        self.table.get(i, |j| {
            one_minus_qk_y(j - 1).scale(&inv(&(RationalFunction::one() - q_pow(j))))
        })
    }

    fn hook_content(&self, p: &Partition) -> QqPoly {
        let prefactor = QqPoly::constant(q_pow(p.b_statistic() as i64));
        p.cells().into_iter().fold(prefactor, |acc, c| {
            let h = p.hook_length(c).expect("cell of p") as i64;
            let factor = one_minus_qk_y(c.content()).scale(&inv(&(RationalFunction::one() - q_pow(h))));
            &acc * &factor
        })
    }

    fn diagonal_factor(&self, c: i64) -> QqPoly {
        one_minus_qk_y(c).monic()
    }
}

/// The rescaled substitution `φ^⋄`, values in `Q(q)[y]`.
pub struct QDiamond {
    table: HTable<RationalFunction>,
}

impl QDiamond {
    pub fn new() -> Self {
        QDiamond { table: HTable::new() }
    }

    /// The other printed form of the diagonal factor, `(1 - q^c y)` made monic.
    pub fn alternative_factor(c: i64) -> QqPoly {
        one_minus_qk_y(c).monic()
    }
}

impl Default for QDiamond {
    fn default() -> Self {
        Self::new()
    }
}

impl Specialization for QDiamond {
    type Coeff = RationalFunction;

    fn kind(&self) -> SpecKind {
        SpecKind::QDiamond
    }

    fn variable(&self) -> &'static str {
        "y"
    }

    fn h(&self, i: i64) -> QqPoly {
        // prod_{j=1..i} (y + [j-1]_q) / [j]_q
        self.table
            .get(i, |j| QqPoly::linear(q_int(j - 1)).scale(&inv(&q_int(j))))
    }

    fn hook_content(&self, p: &Partition) -> QqPoly {
        let prefactor = QqPoly::constant(q_pow(p.b_statistic() as i64));
        p.cells().into_iter().fold(prefactor, |acc, c| {
            let h = p.hook_length(c).expect("cell of p") as i64;
            &acc * &QqPoly::linear(q_int(c.content())).scale(&inv(&q_int(h)))
        })
    }

    fn diagonal_factor(&self, c: i64) -> QqPoly {
        QqPoly::linear(q_int(c))
    }

    fn alternative_diagonal_factor(&self, c: i64) -> Option<QqPoly> {
        Some(Self::alternative_factor(c))
    }
}

/// `(h_{seq_i - i + j})`, the Jacobi–Trudi matrix of an arbitrary integer sequence.
pub fn jacobi_trudi<S: Specialization>(s: &S, seq: &[i64]) -> Matrix<Poly<S::Coeff>> {
    let n = seq.len();
    Matrix::from_fn(n, n, |i, j| s.h(seq[i] - i as i64 + j as i64))
}

/// Skew Jacobi–Trudi matrix `(h_{ρ_i - σ_j - i + j})` of order `ℓ(ρ)`.
pub fn skew_jacobi_trudi<S: Specialization>(s: &S, shape: &SkewShape) -> Matrix<Poly<S::Coeff>> {
    let n = shape.outer().len();
    Matrix::from_fn(n, n, |i, j| {
        let rho = shape.outer().part(i + 1) as i64;
        let sigma = shape.inner().part(j + 1) as i64;
        s.h(rho - sigma - i as i64 + j as i64)
    })
}

pub fn specialized_skew_schur<S: Specialization>(s: &S, shape: &SkewShape) -> Poly<S::Coeff> {
    skew_jacobi_trudi(s, shape)
        .determinant()
        .expect("exact determinant of a polynomial matrix")
}

pub fn specialized_schur<S: Specialization>(s: &S, p: &Partition) -> Poly<S::Coeff> {
    specialized_skew_schur(s, &SkewShape::straight(p.clone()))
}

pub fn ribbon_schur<S: Specialization>(s: &S, seg: &Segment) -> Poly<S::Coeff> {
    match seg {
        Segment::Empty => Poly::one(),
        Segment::Undefined => Poly::zero(),
        Segment::Strip(strip) => ribbon_from_rows(s, &ribbon_rows(strip)),
    }
}

/// Row lengths of a ribbon, bottom row first.
pub fn ribbon_rows(strip: &BorderStrip) -> Vec<usize> {
    let mut rows = vec![1];
    for step in strip.steps() {
        match step {
            Step::Right => *rows.last_mut().expect("nonempty") += 1,
            Step::Up => rows.push(1),
        }
    }
    rows
}

/// Ribbon Schur function of row lengths `α` through the division-free
/// expansion `Σ_{β coarsening α} (-1)^{ℓ(α)-ℓ(β)} h_β`, evaluated by
/// recursion on suffixes of `α`.
pub fn ribbon_from_rows<S: Specialization>(s: &S, rows: &[usize]) -> Poly<S::Coeff> {
    let k = rows.len();
    // suffix[i] = image of the ribbon with rows i..k
    let mut suffix = vec![Poly::<S::Coeff>::one(); k + 1];
    for i in (0..k).rev() {
        let mut acc = Poly::zero();
        let mut width = 0;
        for j in i..k {
            width += rows[j];
            let term = &s.h(width as i64) * &suffix[j + 1];
            acc = if (j - i) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        suffix[i] = acc;
    }
    suffix.swap_remove(0)
}

/// Sets `q = 1` in every coefficient; `None` if some coefficient has a pole there.
pub fn at_q_equals_one(p: &QqPoly) -> Option<QPoly> {
    let one = BigRational::one();
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| c.eval(&one))
        .collect::<Option<Vec<_>>>()?;
    Some(QPoly::new(coeffs))
}

/// Substitutes `y = q^t`, returning an element of `Q(q)`.
pub fn substitute_y_as_q_power(p: &QqPoly, t: u32) -> RationalFunction {
    p.eval(&q_pow(t as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_t_h_values() {
        let s = PhiT::new();
        // t(t+1)/2
        assert_eq!(s.h(2), qp(&[0, 1, 1]).scale(&frac(1, 2)));
        assert!(s.h(-3).is_zero());
        assert!(QHat::new().h(-3).is_zero());
        assert!(QDiamond::new().h(-1).is_zero());
        assert!(s.h(0).is_one());
    }

    #[test]
    fn q_diamond_h2() {
        let s = QDiamond::new();
        // y(y+1)/(1+q)
        let expected = QqPoly::new(vec![RationalFunction::zero(), RationalFunction::one(), RationalFunction::one()])
            .scale(&inv(&q_int(2)));
        assert_eq!(s.h(2), expected);
        let at_one = at_q_equals_one(&s.h(2)).unwrap();
        assert_eq!(at_one, PhiT::new().h(2));
    }

    #[test]
    fn skew_schur_examples() {
        let s = PhiT::new();
        assert_eq!(specialized_schur(&s, &part("1")), qp(&[0, 1]));
        // t(t^2 - 1)/3
        assert_eq!(specialized_schur(&s, &part("2,1")), qp(&[0, -1, 0, 1]).scale(&frac(1, 3)));
        let skew = SkewShape::new(part("2,2"), part("1")).unwrap();
        let expected = &(&s.h(1) * &s.h(2)) - &s.h(3);
        assert_eq!(specialized_skew_schur(&s, &skew), expected);
        assert!(specialized_skew_schur(&s, &SkewShape::straight(Partition::empty())).is_one());
    }

    #[test]
    fn hook_content_examples() {
        let s = PhiT::new();
        assert_eq!(s.hook_content(&part("1")), qp(&[0, 1]));
        // t^2 (t^2 - 1) / 12
        assert_eq!(s.hook_content(&part("2,2")), qp(&[0, 0, -1, 0, 1]).scale(&frac(1, 12)));
        let qh = QHat::new();
        assert_eq!(qh.hook_content(&part("1")), qh.h(1));
        let expected = one_minus_qk_y(0).scale(&inv(&(RationalFunction::one() - RationalFunction::q())));
        assert_eq!(qh.hook_content(&part("1")), expected);
    }

    #[test]
    fn ribbon_segments() {
        let s = PhiT::new();
        assert!(ribbon_schur(&s, &Segment::Empty).is_one());
        assert!(ribbon_schur(&s, &Segment::Undefined).is_zero());
        let cell = crate::shapes::BorderStrip::new(vec![crate::shapes::Cell::new(4, 2)]).unwrap();
        assert_eq!(ribbon_schur(&s, &Segment::Strip(cell)), qp(&[0, 1]));
    }

    #[test]
    fn ribbon_expansion_matches_jacobi_trudi() {
        use crate::shapes::{ribbon_to_skew, Cell};
        let (phi, hat) = (PhiT::new(), QHat::new());
        for bits in 0u32..64 {
            let steps: Vec<Step> = (0..6).map(|i| if bits >> i & 1 == 1 { Step::Up } else { Step::Right }).collect();
            let strip = BorderStrip::from_steps(Cell::new(7, 1), &steps);
            let skew = ribbon_to_skew(&strip).0;
            assert_eq!(ribbon_schur(&phi, &Segment::Strip(strip.clone())), specialized_skew_schur(&phi, &skew));
            if bits % 9 == 0 {
                assert_eq!(ribbon_schur(&hat, &Segment::Strip(strip)), specialized_skew_schur(&hat, &skew));
            }
        }
        assert_eq!(ribbon_rows(&BorderStrip::from_steps(Cell::new(3, 1), &[Step::Up, Step::Right, Step::Right])), vec![1, 3]);
    }

    #[test]
    fn diagonal_factors_are_monic() {
        for c in -3..=3 {
            assert!(PhiT::new().diagonal_factor(c).is_monic());
            assert!(QHat::new().diagonal_factor(c).is_monic());
            assert!(QDiamond::new().diagonal_factor(c).is_monic());
        }
        // y - q^{-c}
        assert_eq!(QHat::new().diagonal_factor(2), QqPoly::linear(-q_pow(-2)));
    }

    #[test]
    fn spec_names_round_trip() {
        for k in SpecKind::ALL {
            assert_eq!(k.name().parse::<SpecKind>().unwrap(), k);
        }
        assert!("phi".parse::<SpecKind>().is_err());
    }
}

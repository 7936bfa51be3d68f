//! Specialized Giambelli-type matrices `M_λ(Π)` and their classical
//! instances (Jacobi–Trudi, Giambelli, Lascoux–Pragacz).
//!
//! Entry `(i, j)` is the specialized ribbon Schur function of the cutting
//! strip segment `θ[p(θ_j), q(θ_i)]`, where `p` and `q` are the start and
//! end contents of the strips. With the strip order used by
//! [`build_decomposition`](crate::outside::build_decomposition) this puts
//! `JT_λ = (h_{λ_i - i + j})`, `G_λ = (s_{(α_i|β_j)})` and
//! `LP_λ = (s_{θ_i^+ & θ_j^-})` in their usual layouts.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::{JsonCoeff, Poly};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::outside::{canonical_direction, DecompositionKind, OutsideDecomposition, Segment};
use crate::shapes::{rim_decomposition, BorderStrip, FrobeniusNotation, Partition, SkewShape, Step};
use crate::specialize::{ribbon_schur, specialized_skew_schur, SpecKind, Specialization};

#[derive(Clone, Debug)]
pub struct SpecializedMatrix<F: crate::arith::Field> {
    entries: Matrix<Poly<F>>,
    decomposition: OutsideDecomposition,
    spec: SpecKind,
    provenance: Vec<Vec<(i64, i64)>>,
}

pub fn build_matrix<S: Specialization>(dec: &OutsideDecomposition, s: &S) -> SpecializedMatrix<S::Coeff> {
    let m = dec.order();
    let strips = dec.strips();
    let mut cache: HashMap<Vec<Step>, Poly<S::Coeff>> = HashMap::new();
    let mut provenance = vec![Vec::with_capacity(m); m];
    let entries = Matrix::from_fn(m, m, |i, j| {
        let (p, q) = (strips[j].start_content(), strips[i].end_content());
        provenance[i].push((p, q));
        let seg = dec.theta_segment(p, q).expect("strip contents lie on the cutting strip");
        match &seg {
            Segment::Strip(strip) => cache
                .entry(strip.steps())
                .or_insert_with(|| ribbon_schur(s, &seg))
                .clone(),
            _ => ribbon_schur(s, &seg),
        }
    });
    SpecializedMatrix {
        entries,
        decomposition: dec.clone(),
        spec: s.kind(),
        provenance,
    }
}

impl<F: crate::arith::Field> SpecializedMatrix<F> {
    pub fn entries(&self) -> &Matrix<Poly<F>> {
        &self.entries
    }

    pub fn into_entries(self) -> Matrix<Poly<F>> {
        self.entries
    }

    pub fn decomposition(&self) -> &OutsideDecomposition {
        &self.decomposition
    }

    pub fn shape(&self) -> &Partition {
        self.decomposition.shape()
    }

    pub fn specialization(&self) -> SpecKind {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.entries.nrows()
    }

    /// `(p, q)` such that entry `(i, j)` is the image of `s_{θ[p, q]}`.
    pub fn provenance(&self, i: usize, j: usize) -> (i64, i64) {
        self.provenance[i][j]
    }

    pub fn determinant(&self) -> Poly<F> {
        self.entries.determinant().expect("exact determinant")
    }

    /// The canonical kind whose direction vector this decomposition uses, if any.
    pub fn kind(&self) -> Option<DecompositionKind> {
        canonical_kind(&self.decomposition)
    }
}

pub fn canonical_kind(dec: &OutsideDecomposition) -> Option<DecompositionKind> {
    DecompositionKind::ALL
        .into_iter()
        .find(|&k| canonical_direction(dec.shape(), k).ok().as_ref() == Some(dec.direction()))
}

/// Serialized form of a [`SpecializedMatrix`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct MatrixJson<F: crate::arith::Field + JsonCoeff> {
    pub shape: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub direction: String,
    pub specialization: String,
    pub entries: Vec<Vec<Poly<F>>>,
    pub provenance: Vec<Vec<[i64; 2]>>,
}

impl<F: crate::arith::Field + JsonCoeff> SpecializedMatrix<F> {
    pub fn to_json(&self) -> MatrixJson<F> {
        MatrixJson {
            shape: self.shape().clone(),
            kind: self.kind().map(|k| k.name().to_string()),
            direction: self.decomposition.direction().to_string(),
            specialization: self.spec.name().to_string(),
            entries: self.entries.to_rows(),
            provenance: self
                .provenance
                .iter()
                .map(|row| row.iter().map(|&(p, q)| [p, q]).collect())
                .collect(),
        }
    }
}

/// `(s_{(α_i | β_j)})` built directly from hook partitions.
pub fn giambelli_direct<S: Specialization>(s: &S, p: &Partition) -> Matrix<Poly<S::Coeff>> {
    let f = p.frobenius();
    giambelli_from_frobenius(s, f.alphas(), f.betas())
}

pub fn giambelli_from_frobenius<S: Specialization>(
    s: &S,
    alphas: &[usize],
    betas: &[usize],
) -> Matrix<Poly<S::Coeff>> {
    let r = alphas.len();
    Matrix::from_fn(r, r, |i, j| {
        let mut parts = vec![alphas[i] + 1];
        parts.extend(std::iter::repeat_n(1, betas[j]));
        s.hook_content(&Partition::new(parts).expect("hooks are partitions"))
    })
}

/// `θ_i^+ & θ_j^-`: the lower part of rim `θ_j` up to its diagonal cell,
/// followed by the upper part of rim `θ_i`.
pub fn lp_ribbon(rims: &[BorderStrip], i: usize, j: usize) -> BorderStrip {
    let lower = &rims[j];
    let upper = &rims[i];
    let below = usize::try_from(-lower.start_content()).expect("rims start below the diagonal");
    let mut steps: Vec<Step> = lower.steps()[..below].to_vec();
    let above = usize::try_from(-upper.start_content()).expect("rims start below the diagonal");
    steps.extend_from_slice(&upper.steps()[above..]);
    BorderStrip::from_steps(lower.start(), &steps)
}

/// `(s_{θ_i^+ & θ_j^-})` built directly from the rim decomposition.
pub fn lascoux_pragacz_direct<S: Specialization>(s: &S, p: &Partition) -> Matrix<Poly<S::Coeff>> {
    let rims = rim_decomposition(p);
    let r = rims.len();
    Matrix::from_fn(r, r, |i, j| {
        ribbon_schur(s, &Segment::Strip(lp_ribbon(&rims, i, j)))
    })
}

fn complement(set: &[usize], r: usize) -> Result<Vec<usize>> {
    for &i in set {
        if i == 0 || i > r {
            return Err(Error::IndexOutOfRange { index: i, bound: r });
        }
    }
    Ok((1..=r).filter(|i| !set.contains(i)).collect())
}

/// `λ/μ` with `μ = (α_{S̄_1} | β_{S̄_2})`, where `rows`, `cols` are 1-based
/// index sets of the Lascoux–Pragacz minor and the bars denote complements.
pub fn lp_minor_shape(p: &Partition, rows: &[usize], cols: &[usize]) -> Result<SkewShape> {
    if rows.len() != cols.len() {
        return Err(Error::MinorSizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    let f = p.frobenius();
    let r = f.rank();
    let row_c = complement(rows, r)?;
    let col_c = complement(cols, r)?;
    let alphas = row_c.iter().map(|&i| f.alphas()[i - 1]).collect();
    let betas = col_c.iter().map(|&j| f.betas()[j - 1]).collect();
    let mu = FrobeniusNotation::new(alphas, betas)?.to_partition();
    SkewShape::new(p.clone(), mu)
}

/// Minor of the specialized Lascoux–Pragacz matrix on 1-based `rows × cols`.
pub fn lp_minor<S: Specialization>(
    p: &Partition,
    rows: &[usize],
    cols: &[usize],
    s: &S,
) -> Result<Poly<S::Coeff>> {
    if rows.len() != cols.len() {
        return Err(Error::MinorSizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    let r = p.rank();
    complement(rows, r)?;
    complement(cols, r)?;
    let dec = crate::outside::canonical_decomposition(p, DecompositionKind::Rim)?;
    let mat = build_matrix(&dec, s);
    let ri: Vec<usize> = rows.iter().map(|i| i - 1).collect();
    let ci: Vec<usize> = cols.iter().map(|j| j - 1).collect();
    mat.entries().submatrix(&ri, &ci).determinant()
}

/// Predicted value of an LP minor: the specialized skew Schur function of
/// [`lp_minor_shape`].
pub fn lp_minor_prediction<S: Specialization>(
    p: &Partition,
    rows: &[usize],
    cols: &[usize],
    s: &S,
) -> Result<Poly<S::Coeff>> {
    Ok(specialized_skew_schur(s, &lp_minor_shape(p, rows, cols)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outside::canonical_decomposition;
    use crate::specialize::PhiT;
    use crate::QPoly;
    use num_rational::BigRational;
    use num_traits::One;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn jacobi_trudi_layout() {
        let s = PhiT::new();
        let dec = canonical_decomposition(&part("2,1"), DecompositionKind::Horizontal).unwrap();
        let m = build_matrix(&dec, &s);
        let expected = Matrix::from_rows(vec![vec![s.h(2), s.h(3)], vec![s.h(0), s.h(1)]]);
        assert_eq!(m.entries(), &expected);
        assert_eq!(m.provenance(0, 1), (-1, 1));
        // t(t^2-1)/3
        assert_eq!(m.determinant(), qp(&[0, -1, 0, 1]).scale(&BigRational::new(1.into(), 3.into())));
        assert_eq!(m.kind(), Some(DecompositionKind::Horizontal));
    }

    #[test]
    fn giambelli_layout() {
        let s = PhiT::new();
        let p = part("2,2");
        let dec = canonical_decomposition(&p, DecompositionKind::Hook).unwrap();
        let m = build_matrix(&dec, &s);
        assert_eq!(m.entries(), &giambelli_direct(&s, &p));
        assert_eq!(m.entries()[(0, 0)], s.hook_content(&part("2,1")));
        assert_eq!(m.entries()[(1, 1)], qp(&[0, 1]));
    }

    #[test]
    fn single_cell_matrix() {
        let s = PhiT::new();
        for kind in DecompositionKind::ALL {
            let dec = canonical_decomposition(&part("1"), kind).unwrap();
            assert_eq!(build_matrix(&dec, &s).entries(), &Matrix::from_rows(vec![vec![qp(&[0, 1])]]));
        }
    }

    #[test]
    fn rim_matrix_determinant() {
        let s = PhiT::new();
        let p = part("2,2");
        let dec = canonical_decomposition(&p, DecompositionKind::Rim).unwrap();
        let m = build_matrix(&dec, &s);
        assert_eq!(m.determinant(), s.hook_content(&p));
        assert_eq!(m.entries(), &lascoux_pragacz_direct(&s, &p));
    }

    #[test]
    fn lp_minor_examples() {
        let s = PhiT::new();
        let p = part("3,2,1");
        let full = lp_minor(&p, &[1, 2], &[1, 2], &s).unwrap();
        assert_eq!(full, s.hook_content(&p));
        let single = lp_minor(&p, &[2], &[2], &s).unwrap();
        assert_eq!(single, qp(&[0, 1]));
        let shape = lp_minor_shape(&p, &[2], &[2]).unwrap();
        assert_eq!(shape.inner(), &part("3,1,1"));
        assert_eq!(lp_minor_prediction(&p, &[2], &[2], &s).unwrap(), single);
        assert!(lp_minor(&p, &[], &[], &s).unwrap().is_one());
        assert!(matches!(
            lp_minor(&p, &[1], &[1, 2], &s),
            Err(Error::MinorSizeMismatch { .. })
        ));
        assert!(matches!(lp_minor(&p, &[3], &[1], &s), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let s = PhiT::new();
        let dec = canonical_decomposition(&part("3,1"), DecompositionKind::Hook).unwrap();
        let json = serde_json::to_string(&build_matrix(&dec, &s).to_json()).unwrap();
        let back: MatrixJson<BigRational> = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.starts_with(r#"{"shape":[3,1],"kind":"hook","direction":"URR""#));
    }
}

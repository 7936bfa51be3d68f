use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{EuclideanDomain, Field};
use crate::error::ArithError;

/// Dense univariate polynomial over a field, coefficient `i` multiplies `x^i`.
///
/// Always trimmed: the highest stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all (its degree is `None`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, degree: usize) -> Self {
        let mut coeffs = vec![F::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x + c`.
    pub fn linear(c: F) -> Self {
        Self::new(vec![c, F::one()])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at a point of any ring containing the coefficients.
    pub fn eval_with<R, G>(&self, at: &R, embed: G) -> R
    where
        R: Clone + Zero + Add<Output = R> + Mul<Output = R>,
        G: Fn(&F) -> R,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + embed(c))
    }

    pub fn eval(&self, at: &F) -> F {
        self.eval_with(at, Clone::clone)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Long division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        let d_deg = divisor.degree().ok_or(ArithError::DivisionByZero)?;
        let lc_inv = divisor
            .leading()
            .and_then(Field::inverse)
            .ok_or(ArithError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let c = rem[i + d_deg].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                let sub = c.clone() * dc.clone();
                rem[i + j] = rem[i + j].clone() - sub;
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd. Fails only for `gcd(0, 0)`.
    pub fn gcd(&self, other: &Self) -> Result<Self, ArithError> {
        if self.is_zero() && other.is_zero() {
            return Err(ArithError::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Extended Euclid: `(g, u, v)` with `u·self + v·other = g`, `g` monic.
    ///
    /// When `self` divides `other` the cofactors are `(1/lc(self), 0)`.
    pub fn bezout(&self, other: &Self) -> Result<(Self, Self, Self), ArithError> {
        if self.is_zero() && other.is_zero() {
            return Err(ArithError::ZeroGcd);
        }
        if let Some(lc) = self.leading() {
            if other.divmod(self)?.1.is_zero() {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                return Ok((self.scale(&inv), Self::constant(inv), Self::zero()));
            }
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0
            .leading()
            .and_then(Field::inverse)
            .expect("gcd of a nonzero pair is nonzero");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Renders in descending degree, e.g. `t^3 - t`.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut text = c.to_string();
            let negative = is_negative_atom(&text);
            if negative {
                text.remove(0);
            }
            let wrapped = if is_atom(&text) { text } else { format!("({text})") };
            let body = match deg {
                0 => wrapped,
                _ => {
                    let mono = if deg == 1 { var.to_string() } else { format!("{var}^{deg}") };
                    if wrapped == "1" {
                        mono
                    } else {
                        format!("{wrapped}*{mono}")
                    }
                }
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn is_atom(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_alphanumeric() || c == '/' || c == '^')
}

fn is_negative_atom(s: &str) -> bool {
    s.strip_prefix('-').is_some_and(is_atom)
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.display("x"))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

impl<F: Field> Zero for Poly<F> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for Poly<F> {
    fn one() -> Self {
        Poly {
            coeffs: vec![F::one()],
        }
    }
}

impl<F: Field> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;

    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = a.clone() + b.clone();
        }
        Poly::new(coeffs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Field> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;

    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(coeffs)
    }
}

impl<F: Field> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;

    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Field> $tr<&Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &Poly<F>) -> Poly<F> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        -&self
    }
}

impl<F: Field> EuclideanDomain for Poly<F> {
    fn norm(&self) -> Option<usize> {
        self.degree()
    }

    fn div_rem(&self, other: &Self) -> Result<(Self, Self), ArithError> {
        self.divmod(other)
    }

    fn normalize(&self) -> Self {
        self.monic()
    }

    fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    fn gcd(&self, other: &Self) -> Result<Self, ArithError> {
        Poly::gcd(self, other)
    }

    fn bezout(&self, other: &Self) -> Result<(Self, Self, Self), ArithError> {
        Poly::bezout(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(p(&[-1, 0, 1]).divmod(&p(&[-1, 1])).unwrap(), (p(&[1, 1]), QPoly::zero()));
        assert_eq!(p(&[0, 1]).divmod(&p(&[0, 1])).unwrap(), (QPoly::one(), QPoly::zero()));
        // t^3 + 2t = t·(t^2 + 1) + t
        let (q, r) = p(&[0, 2, 0, 1]).divmod(&p(&[1, 0, 1])).unwrap();
        assert_eq!((q.clone(), r.clone()), (p(&[0, 1]), p(&[0, 1])));
        assert_eq!(&(&q * &p(&[1, 0, 1])) + &r, p(&[0, 2, 0, 1]));
    }

    #[test]
    fn divmod_by_zero_fails() {
        assert_eq!(p(&[1, 1]).divmod(&QPoly::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[0, 1, 1]).gcd(&p(&[0, -1, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])).unwrap(), QPoly::one());
        let g = p(&[0, -1, 0, 1]).gcd(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(g, p(&[-1, 0, 1]));
        assert!(g.divides(&p(&[0, -1, 0, 1])));
        assert_eq!(QPoly::zero().gcd(&QPoly::zero()), Err(ArithError::ZeroGcd));
        assert_eq!(QPoly::zero().gcd(&p(&[2, 4])).unwrap(), p(&[1, 2]).monic());
    }

    #[test]
    fn bezout_examples() {
        let (g, u, v) = p(&[0, 1]).bezout(&p(&[1, 1])).unwrap();
        assert_eq!((g, u, v), (QPoly::one(), p(&[-1]), QPoly::one()));

        let (g, u, v) = p(&[0, 1]).bezout(&p(&[0, 1])).unwrap();
        assert_eq!((g, u, v), (p(&[0, 1]), QPoly::one(), QPoly::zero()));

        let (g, u, v) = p(&[-1, 0, 1]).bezout(&p(&[-1, 1])).unwrap();
        assert_eq!((g, u, v), (p(&[-1, 1]), QPoly::zero(), QPoly::one()));

        let a = p(&[3, 0, 2, 1]);
        let b = p(&[0, 5, 1]);
        let (g, u, v) = a.bezout(&b).unwrap();
        assert_eq!(&(&u * &a) + &(&v * &b), g);
        assert!(g.is_monic());
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[0, -1, 0, 1]).display("t"), "t^3 - t");
        assert_eq!(p(&[1, 2]).display("t"), "2*t + 1");
        assert_eq!(p(&[-3]).display("t"), "-3");
        assert_eq!(QPoly::zero().display("t"), "0");
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
    }
}

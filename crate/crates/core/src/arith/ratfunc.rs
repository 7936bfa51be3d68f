use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Field;
use super::poly::Poly;
use super::zgcd::qpoly_gcd;
use crate::error::ArithError;

type QPoly = Poly<BigRational>;

/// Element of `Q(q)`, kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = qpoly_gcd(&num, &den);
        let (num, den) = (exact(num, &g), exact(den, &g));
        Self::scaled(num, den)
    }

    /// Makes the denominator monic; `num/den` must already be reduced.
    fn scaled(mut num: QPoly, mut den: QPoly) -> Self {
        let lc = den.leading().cloned().expect("denominator is nonzero");
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(num: QPoly) -> Self {
        RationalFunction {
            num,
            den: QPoly::one(),
        }
    }

    /// Re-applies the canonical form; a no-op on values built through this API.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn q() -> Self {
        Self::from_poly(QPoly::x())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mono = QPoly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            RationalFunction {
                num: QPoly::one(),
                den: mono,
            }
        }
    }

    /// `[k]_q = (1 - q^k)/(1 - q)`, extended to negative `k`.
    pub fn q_integer(k: i64) -> Self {
        let one = Self::one();
        (one.clone() - Self::q_pow(k))
            .div_field(&(one - Self::q()))
            .expect("1 - q is nonzero")
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Evaluation at a rational point; `None` if the denominator vanishes there.
    pub fn eval(&self, at: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }
}

fn exact(p: QPoly, by: &QPoly) -> QPoly {
    if by.is_one() {
        p
    } else {
        p.divmod(by).expect("nonzero divisor").0
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn[{self}]")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.display("q");
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let wrap = |s: String, p: &QPoly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(
            f,
            "{}/{}",
            wrap(num, &self.num),
            wrap(self.den.display("q"), &self.den)
        )
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(QPoly::one())
    }
}

impl Add for RationalFunction {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num + &rhs.num);
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the sum
        let g = qpoly_gcd(&self.den, &rhs.den);
        let (b, d) = (exact(self.den, &g), exact(rhs.den, &g));
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        if num.is_zero() {
            return Self::zero();
        }
        let h = qpoly_gcd(&num, &g);
        let den = &(&b * &exact(g, &h)) * &d;
        Self::scaled(exact(num, &h), den)
    }
}

impl Neg for RationalFunction {
    type Output = Self;

    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RationalFunction {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel; both factors are already reduced
        let g1 = qpoly_gcd(&self.num, &rhs.den);
        let g2 = qpoly_gcd(&rhs.num, &self.den);
        let num = &exact(self.num, &g1) * &exact(rhs.num, &g2);
        let den = &exact(self.den, &g2) * &exact(rhs.den, &g1);
        Self::scaled(num, den)
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_poly(QPoly::constant(BigRational::from_i64(n)))
    }
}

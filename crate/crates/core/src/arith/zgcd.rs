//! Gcd in `Q[q]` through primitive integer remainder sequences. Much faster
//! than Euclid over rationals, where every coefficient operation pays for a
//! bigint gcd and intermediate coefficients swell.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

type QPoly = Poly<BigRational>;

fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = content(&v);
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    if v.last().is_some_and(Signed::is_negative) {
        for c in &mut v {
            *c = -&*c;
        }
    }
    v
}

/// Primitive integer polynomial proportional to `p`.
fn to_primitive(p: &QPoly) -> Vec<BigInt> {
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    make_primitive(
        p.coeffs()
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect(),
    )
}

/// Primitive part of the pseudo-remainder of `a` by `b`.
fn prem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let la = a.last().cloned().expect("nonempty");
        let g = la.gcd(lb);
        let (fa, fb) = (lb / &g, &la / &g);
        let shift = a.len() - 1 - db;
        for c in a.iter_mut() {
            *c *= &fa;
        }
        for (j, bc) in b.iter().enumerate() {
            a[shift + j] -= &fb * bc;
        }
        a.pop();
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
    }
    make_primitive(a)
}

fn trailing_zeros(p: &QPoly) -> usize {
    p.coeffs().iter().take_while(|c| c.is_zero()).count()
}

/// Monic gcd; `a`, `b` not both zero.
pub(crate) fn qpoly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    // split off the power of q first; it is common and cheap
    let (za, zb) = (trailing_zeros(a), trailing_zeros(b));
    let z = za.min(zb);
    let q_part = QPoly::monomial(BigRational::one(), z);
    if a.coeffs().len() - za == 1 || b.coeffs().len() - zb == 1 {
        return q_part;
    }
    let mut x = to_primitive(&QPoly::new(a.coeffs()[za..].to_vec()));
    let mut y = to_primitive(&QPoly::new(b.coeffs()[zb..].to_vec()));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return q_part;
        }
        let r = prem(x, &y);
        x = y;
        y = r;
    }
    let g = QPoly::new(x.into_iter().map(BigRational::from_integer).collect()).monic();
    if z == 0 {
        g
    } else {
        &g * &q_part
    }
}

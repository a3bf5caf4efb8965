//! Dense univariate polynomials in `t` over the rationals.
//!
//! A nonzero polynomial is stored as `content * prim`, where `prim` is a
//! primitive integer polynomial (coefficient gcd 1, positive leading
//! coefficient, lowest power first) and `content` a nonzero rational. This
//! split is unique, so structural equality is equality, and products need no
//! coefficient reduction: the product of primitive polynomials is primitive.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    /// Zero exactly when `prim` is empty.
    content: BigRational,
    prim: Vec<BigInt>,
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            content: BigRational::zero(),
            prim: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly {
            content: BigRational::one(),
            prim: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            content: c,
            prim: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from coefficients ordered by increasing power.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Poly::zero();
        }
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        Poly::from_integer(ints, BigRational::from_integer(lcm).recip())
    }

    /// `scale * p` for an integer polynomial `p` without trailing zeros.
    fn from_integer(mut p: Vec<BigInt>, scale: BigRational) -> Self {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        if p.is_empty() || scale.is_zero() {
            return Poly::zero();
        }
        let c = signed_content(&p);
        if !c.is_one() {
            for x in p.iter_mut() {
                *x /= &c;
            }
        }
        Poly {
            content: scale * BigRational::from_integer(c),
            prim: p,
        }
    }

    /// Coefficients by increasing power.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.prim
            .iter()
            .map(|c| &self.content * BigRational::from_integer(c.clone()))
            .collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.prim.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.prim.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.prim.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.prim.len() == 1 && self.content.is_one()
    }

    pub fn leading(&self) -> Option<BigRational> {
        self.prim
            .last()
            .map(|c| &self.content * BigRational::from_integer(c.clone()))
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> BigRational {
        match self.prim.first() {
            Some(c) => &self.content * BigRational::from_integer(c.clone()),
            None => BigRational::zero(),
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // content_a * A + content_b * B = (g / l) * (a' A + b' B)
        let (pa, qa) = (self.content.numer(), self.content.denom());
        let (pb, qb) = (rhs.content.numer(), rhs.content.denom());
        let g = pa.gcd(pb);
        let l = qa.lcm(qb);
        let ka = (pa / &g) * (&l / qa);
        let kb = (pb / &g) * (&l / qb);
        let len = self.prim.len().max(rhs.prim.len());
        let mut sum = vec![BigInt::zero(); len];
        for (s, a) in sum.iter_mut().zip(&self.prim) {
            *s = &ka * a;
        }
        for (s, b) in sum.iter_mut().zip(&rhs.prim) {
            *s += &kb * b;
        }
        Poly::from_integer(sum, BigRational::new(g, l))
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            content: -&self.content,
            prim: self.prim.clone(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        Poly {
            content: &self.content * &rhs.content,
            prim: int_mul(&self.prim, &rhs.prim),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Poly {
        if k.is_zero() || self.is_zero() {
            return Poly::zero();
        }
        Poly {
            content: &self.content * k,
            prim: self.prim.clone(),
        }
    }

    /// Euclidean division over the rationals. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let den = divisor.coeffs();
        let lead_inv = den[dd].recip();
        let mut rem = self.coeffs();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Poly::zero();
        }
        // Gauss's lemma: the primitive parts divide in Z[t].
        let prim = int_exact_div(&self.prim, &divisor.prim).expect("inexact polynomial division");
        Poly {
            content: &self.content / &divisor.content,
            prim,
        }
    }

    /// Scales to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.prim.last() {
            Some(lc) => Poly {
                content: BigRational::from_integer(lc.clone()).recip(),
                prim: self.prim.clone(),
            },
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.monic();
        }
        if rhs.is_zero() {
            return self.monic();
        }
        if self.is_constant() || rhs.is_constant() {
            return Poly::one();
        }
        let (a, b) = if self.prim.len() >= rhs.prim.len() {
            (&self.prim, &rhs.prim)
        } else {
            (&rhs.prim, &self.prim)
        };
        let g = primitive_gcd(a, b);
        Poly {
            content: BigRational::one(),
            prim: g,
        }
        .monic()
    }
}

/// Gcd of the coefficients, signed like the leading coefficient.
fn signed_content(p: &[BigInt]) -> BigInt {
    let mut c = BigInt::zero();
    for x in p {
        c = c.gcd(x);
        if c.is_one() {
            break;
        }
    }
    if p.last().is_some_and(|x| x.sign() == Sign::Minus) {
        -c
    } else {
        c
    }
}

fn primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let c = signed_content(&p);
    if c.is_one() {
        p
    } else {
        p.into_iter().map(|x| x / &c).collect()
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` in `Z[t]`, or `None` if `b` does not divide `a` there.
fn int_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (qk, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !qk.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[k + i] -= &qk * bc;
            }
        }
        q[k] = qk;
    }
    r[..db].iter().all(Zero::is_zero).then_some(q)
}

/// Pseudo-remainder of integer polynomials (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// A prime below `2^61`, so products of residues fit in `u128`.
const MODULUS: u64 = (1 << 61) - 1;

fn residues(p: &[BigInt]) -> Vec<u64> {
    let m = BigInt::from(MODULUS);
    p.iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("residue below modulus"))
        .collect()
}

fn mod_pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % MODULUS as u128) as u64;
        }
        base = ((base as u128 * base as u128) % MODULUS as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Degree of `gcd(a, b)` over `GF(MODULUS)`.
fn modular_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let db = b.len() - 1;
        let inv = mod_pow(b[db], MODULUS - 2);
        while a.len() > db {
            let da = a.len() - 1;
            let f = (a[da] as u128 * inv as u128 % MODULUS as u128) as u64;
            let shift = da - db;
            for (i, bc) in b.iter().enumerate() {
                let sub = (f as u128 * *bc as u128 % MODULUS as u128) as u64;
                a[shift + i] = (a[shift + i] + MODULUS - sub) % MODULUS;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Gcd of primitive integer polynomials with `deg a >= deg b >= 1`, as a
/// primitive polynomial with positive leading coefficient.
///
/// Reduction modulo a prime that divides neither leading coefficient can
/// only raise the degree of the gcd, so a constant modular gcd proves
/// coprimality and a modular gcd of full degree `deg b` leaves `b` as the
/// only candidate. Other cases fall back to a primitive pseudo-remainder
/// sequence.
fn primitive_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ra = residues(a);
    let rb = residues(b);
    if ra.last() != Some(&0) && rb.last() != Some(&0) {
        let k = modular_gcd_degree(ra, rb);
        if k == 0 {
            return vec![BigInt::one()];
        }
        if k == b.len() - 1 && int_exact_div(a, b).is_some() {
            return b.to_vec();
        }
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(r);
    }
    a
}

impl fmt::Display for Poly {
    /// Renders highest power first, e.g. `3*t^2 - 1/2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (power, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match power {
                0 => {}
                1 => f.write_str("t")?,
                p => write!(f, "t^{p}")?,
            }
        }
        Ok(())
    }
}

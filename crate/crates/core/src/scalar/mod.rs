//! Exact arithmetic in the field of rational functions of one parameter `t`.
//!
//! Every [`Scalar`] is kept in canonical form: numerator and denominator are
//! coprime over ℚ[t] and the denominator is monic. Two scalars are therefore
//! equal exactly when their representations are. Values that do not depend on
//! `t` are stored as a bare [`BigRational`] so the rescue-free path never
//! touches polynomial code.

mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Const(BigRational),
    /// At least one of `num`, `den` has positive degree.
    Ratio { num: Poly, den: Poly },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Const(BigRational::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Const(BigRational::one()))
    }

    /// The rescue parameter.
    pub fn t() -> Self {
        Scalar(Repr::Ratio {
            num: Poly::t(),
            den: Poly::one(),
        })
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar::from(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`, reduced. Fails when `den` is the zero polynomial.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Ok(Scalar::from_coprime(num, den))
    }

    /// Builds from an already coprime pair, normalizing the denominator to
    /// be monic.
    fn from_coprime(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator");
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        if num.is_constant() && den.is_constant() {
            // den is monic and constant, hence exactly 1.
            Scalar(Repr::Const(num.constant_term()))
        } else {
            Scalar(Repr::Ratio { num, den })
        }
    }

    pub fn num(&self) -> Poly {
        match &self.0 {
            Repr::Const(c) => Poly::constant(c.clone()),
            Repr::Ratio { num, .. } => num.clone(),
        }
    }

    pub fn den(&self) -> Poly {
        match &self.0 {
            Repr::Const(_) => Poly::one(),
            Repr::Ratio { den, .. } => den.clone(),
        }
    }

    /// True iff the value is identically zero as a function of `t`.
    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_zero())
    }

    /// True iff the value does not depend on `t`.
    pub fn is_constant(&self) -> bool {
        matches!(self.0, Repr::Const(_))
    }

    pub fn as_constant(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Const(c) => Some(c),
            Repr::Ratio { .. } => None,
        }
    }

    /// Degrees of numerator and denominator; the zero scalar reports `(0, 0)`.
    pub fn degrees(&self) -> (usize, usize) {
        match &self.0 {
            Repr::Const(_) => (0, 0),
            Repr::Ratio { num, den } => (num.degree().unwrap_or(0), den.degree().unwrap_or(0)),
        }
    }

    /// Substitutes `t = 0`.
    pub fn eval_at_zero(&self) -> Result<BigRational> {
        match &self.0 {
            Repr::Const(c) => Ok(c.clone()),
            Repr::Ratio { num, den } => {
                let d = den.constant_term();
                if d.is_zero() {
                    return Err(Error::PoleAtZero);
                }
                Ok(num.constant_term() / d)
            }
        }
    }

    /// Checks the representation invariants; used by tests.
    pub fn is_canonical(&self) -> bool {
        match &self.0 {
            Repr::Const(_) => true,
            Repr::Ratio { num, den } => {
                !(num.is_constant() && den.is_constant())
                    && !num.is_zero()
                    && den.leading().is_some_and(|lc| lc.is_one())
                    && num.gcd(den).is_one()
            }
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_ref(&rhs.recip_nonzero()))
    }

    fn recip_nonzero(&self) -> Scalar {
        match &self.0 {
            Repr::Const(c) => Scalar(Repr::Const(c.recip())),
            Repr::Ratio { num, den } => Scalar::from_coprime(den.clone(), num.clone()),
        }
    }

    fn add_ref(&self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Const(a), Repr::Const(b)) => Scalar(Repr::Const(a + b)),
            (Repr::Const(c), Repr::Ratio { num, den }) | (Repr::Ratio { num, den }, Repr::Const(c)) => {
                // gcd(num + c*den, den) = gcd(num, den) = 1
                let num = num.add(&den.scale(c));
                Scalar::from_coprime(num, den.clone())
            }
            (Repr::Ratio { num: a, den: b }, Repr::Ratio { num: c, den: d }) => {
                let g = b.gcd(d);
                if g.is_one() {
                    let num = a.mul(d).add(&c.mul(b));
                    return Scalar::from_coprime(num, b.mul(d));
                }
                let b1 = b.exact_div(&g);
                let d1 = d.exact_div(&g);
                let s = a.mul(&d1).add(&c.mul(&b1));
                if s.is_zero() {
                    return Scalar::zero();
                }
                // s shares no factor with b1 or d1, only possibly with g.
                let g2 = s.gcd(&g);
                let (s, d_red) = if g2.is_one() {
                    (s, d.clone())
                } else {
                    (s.exact_div(&g2), d.exact_div(&g2))
                };
                Scalar::from_coprime(s, b1.mul(&d_red))
            }
        }
    }

    fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Const(a), Repr::Const(b)) => Scalar(Repr::Const(a * b)),
            (Repr::Const(c), Repr::Ratio { num, den }) | (Repr::Ratio { num, den }, Repr::Const(c)) => {
                if c.is_zero() {
                    return Scalar::zero();
                }
                Scalar(Repr::Ratio {
                    num: num.scale(c),
                    den: den.clone(),
                })
            }
            (Repr::Ratio { num: a, den: b }, Repr::Ratio { num: c, den: d }) => {
                let g1 = a.gcd(d);
                let g2 = c.gcd(b);
                let num = a.exact_div(&g1).mul(&c.exact_div(&g2));
                let den = b.exact_div(&g2).mul(&d.exact_div(&g1));
                Scalar::from_coprime(num, den)
            }
        }
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Const(c) => Scalar(Repr::Const(-c)),
            Repr::Ratio { num, den } => Scalar(Repr::Ratio {
                num: num.neg(),
                den: den.clone(),
            }),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar(Repr::Const(q))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_ref(&rhs.neg_ref())
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

/// Panics on division by the zero scalar; see [`Scalar::checked_div`].
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("Scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Const(c) => write!(f, "{c}"),
            Repr::Ratio { num, den } if den.is_one() => write!(f, "{num}"),
            Repr::Ratio { num, den } => write!(f, "({num})/({den})"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p` or `p/q` with integer `p` and nonzero integer `q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |reason: String| Error::Syntax { line: 0, reason };
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p
        .parse()
        .map_err(|_| bad(format!("invalid numerator in {s:?}")))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| bad(format!("invalid denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(bad(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(p, q))
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Scalar::from)
    }
}

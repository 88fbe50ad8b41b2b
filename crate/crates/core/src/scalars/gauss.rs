use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ComplexRing, Conjugate, Field, Parts, Rational, Ring, ScalarError};

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> GaussRational {
        GaussRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> GaussRational {
        GaussRational::new(re.into(), im.into())
    }

    pub fn real(re: Rational) -> GaussRational {
        GaussRational::new(re, Rational::zero())
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `√z` when it lies in ℚ(i).
    pub fn sqrt_exact(&self) -> Option<GaussRational> {
        // (x+iy)² = z  gives  x² = (|z|+re)/2, y² = (|z|−re)/2
        let modulus = self.norm_sq().sqrt_exact()?;
        let two = Rational::from(2);
        let x = ((&modulus + &self.re) / two.clone()).sqrt_exact()?;
        let mut y = ((&modulus - &self.re) / two.clone()).sqrt_exact()?;
        if (&x * &y * two.clone()) != self.im {
            y = -y;
        }
        let r = GaussRational::new(x, y);
        (Ring::mul(&r, &r) == *self).then_some(r)
    }
}

impl From<Rational> for GaussRational {
    fn from(q: Rational) -> GaussRational {
        GaussRational::real(q)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> GaussRational {
        GaussRational::real(n.into())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im = |f: &mut fmt::Formatter<'_>, q: &Rational| {
            if q.is_one() {
                write!(f, "i")
            } else if (-q).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{q}*i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => im(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_positive() {
                    write!(f, "+")?;
                }
                im(f, &self.im)
            }
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `a/b`, `c/d*i`, `a/b+c/d*i`, `i`, `-i`, `(1+i)/3`.
impl FromStr for GaussRational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<GaussRational, ScalarError> {
        let err = || ScalarError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        if let Some(rest) = t.strip_prefix('(') {
            let (inner, tail) = rest.split_once(')').ok_or_else(err)?;
            let z: GaussRational = inner.parse()?;
            return match tail.strip_prefix('/') {
                Some(d) => {
                    let d: Rational = d.parse()?;
                    z.div(&GaussRational::real(d))
                }
                None if tail.is_empty() => Ok(z),
                None => Err(err()),
            };
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = t.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
                terms.push(&t[start..k]);
                start = k;
            }
        }
        terms.push(&t[start..]);
        let mut z = GaussRational::zero();
        for term in terms {
            if let Some(c) = term.strip_suffix('i') {
                let c = c.strip_suffix('*').unwrap_or(c);
                let q = match c {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    _ => c.strip_prefix('+').unwrap_or(c).parse()?,
                };
                z.im = &z.im + &q;
            } else {
                let q: Rational = term.strip_prefix('+').unwrap_or(term).parse()?;
                z.re = &z.re + &q;
            }
        }
        Ok(z)
    }
}

impl Add<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(&self.re * &rhs.re);
        }
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        GaussRational::default()
    }
    fn one() -> Self {
        GaussRational::real(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        GaussRational::real(q.clone())
    }
    fn add_assign(&mut self, other: &Self) {
        self.re.add_assign(&other.re);
        self.im.add_assign(&other.im);
    }
    fn sub_assign(&mut self, other: &Self) {
        self.re.sub_assign(&other.re);
        self.im.sub_assign(&other.im);
    }
}

impl Field for GaussRational {
    fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm_sq().inv()?;
        Ok(GaussRational::new(&self.re * &n, -(&self.im * &n)))
    }
}

impl Conjugate for GaussRational {
    fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }
}

impl ComplexRing for GaussRational {
    fn from_gauss(z: &GaussRational) -> Self {
        z.clone()
    }
    fn i() -> Self {
        GaussRational::from_ints(0, 1)
    }
}

impl Parts for GaussRational {
    fn re_part(&self) -> Rational {
        self.re.clone()
    }
    fn im_part(&self) -> Rational {
        self.im.clone()
    }
}

//! Exact scalars: rationals and Gaussian rationals.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::LinalgError;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Scalar = BigRational;

/// Builds a rational from a numerator and a denominator.
///
/// Panics when `den` is zero.
pub fn q(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn qi(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<Scalar, LinalgError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(LinalgError::ParseScalar(s.to_string()));
    }
    let v = BigRational::from_str(t).map_err(|_| LinalgError::ParseScalar(s.to_string()))?;
    Ok(v)
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn sqrt_rational(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    let r = BigRational::new(n, d);
    if &(&r * &r) == x {
        Some(r)
    } else {
        None
    }
}

/// Common interface of the exact fields used by the linear algebra.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + 'static
{
    fn from_scalar(q: Scalar) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_scalar(qi(n))
    }

    /// Parses a literal in the format produced by `Display`.
    fn parse_literal(s: &str) -> Result<Self, LinalgError>;

    /// Splits into a sign flag and a value whose display reads as "positive".
    fn split_sign(&self) -> (bool, Self);

    /// True when the display of the value needs parentheses inside a product.
    fn needs_parens(&self) -> bool {
        false
    }
}

impl Field for Scalar {
    fn from_scalar(q: Scalar) -> Self {
        q
    }

    fn parse_literal(s: &str) -> Result<Self, LinalgError> {
        parse_rational(s)
    }

    fn split_sign(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }
}

/// Element `re + im*i` of the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl GScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        GScalar { re, im }
    }

    pub fn i() -> Self {
        GScalar::new(Scalar::zero(), Scalar::one())
    }

    pub fn real(re: Scalar) -> Self {
        GScalar::new(re, Scalar::zero())
    }

    pub fn conj(&self) -> Self {
        GScalar::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Exact square root in the Gaussian rationals, if one exists.
    pub fn sqrt(&self) -> Option<GScalar> {
        if self.im.is_zero() {
            if let Some(r) = sqrt_rational(&self.re) {
                return Some(GScalar::real(r));
            }
            return sqrt_rational(&-self.re.clone()).map(|r| GScalar::new(Scalar::zero(), r));
        }
        let modulus = sqrt_rational(&self.norm_sqr())?;
        let half = q(1, 2);
        let x2 = (&self.re + &modulus) * &half;
        let x = sqrt_rational(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (qi(2) * &x);
        let root = GScalar::new(x, y);
        (root.clone() * root.clone() == *self).then_some(root)
    }
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(f: &mut fmt::Formatter<'_>, im: &Scalar, with_plus: bool) -> fmt::Result {
            let sign = if im.is_negative() {
                "-"
            } else if with_plus {
                "+"
            } else {
                ""
            };
            let a = im.abs();
            if a.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{a}i")
            }
        }
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            imag(f, &self.im, false)
        } else {
            write!(f, "({}", self.re)?;
            imag(f, &self.im, true)?;
            write!(f, ")")
        }
    }
}

impl FromStr for GScalar {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LinalgError::ParseScalar(s.to_string());
        let mut t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.starts_with('(') && t.ends_with(')') {
            t = t[1..t.len() - 1].to_string();
        }
        if t.is_empty() {
            return Err(err());
        }
        if !t.ends_with('i') {
            return parse_rational(&t).map(GScalar::real);
        }
        let body = &t[..t.len() - 1];
        let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(k, _)| k).last();
        let (re, im_str) = match split {
            Some(k) => (parse_rational(&body[..k])?, &body[k..]),
            None => (Scalar::zero(), body),
        };
        let im = match im_str {
            "" | "+" => Scalar::one(),
            "-" => -Scalar::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other)).map_err(|_| err())?,
        };
        Ok(GScalar::new(re, im))
    }
}

impl Add for GScalar {
    type Output = GScalar;
    fn add(self, o: GScalar) -> GScalar {
        GScalar::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GScalar {
    type Output = GScalar;
    fn sub(self, o: GScalar) -> GScalar {
        GScalar::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GScalar {
    type Output = GScalar;
    fn mul(self, o: GScalar) -> GScalar {
        GScalar::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Div for GScalar {
    type Output = GScalar;
    fn div(self, o: GScalar) -> GScalar {
        let n = o.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let p = self * o.conj();
        GScalar::new(p.re / &n, p.im / &n)
    }
}

impl Neg for GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar::new(-self.re, -self.im)
    }
}

impl AddAssign for GScalar {
    fn add_assign(&mut self, o: GScalar) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign for GScalar {
    fn sub_assign(&mut self, o: GScalar) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl MulAssign for GScalar {
    fn mul_assign(&mut self, o: GScalar) {
        *self = self.clone() * o;
    }
}

impl Zero for GScalar {
    fn zero() -> Self {
        GScalar::real(Scalar::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GScalar {
    fn one() -> Self {
        GScalar::real(Scalar::one())
    }
}

impl Field for GScalar {
    fn from_scalar(q: Scalar) -> Self {
        GScalar::real(q)
    }

    fn parse_literal(s: &str) -> Result<Self, LinalgError> {
        s.parse()
    }

    fn split_sign(&self) -> (bool, Self) {
        let neg = if self.re.is_zero() { self.im.is_negative() } else { self.re.is_negative() };
        if neg {
            (true, -self.clone())
        } else {
            (false, self.clone())
        }
    }

    fn needs_parens(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

//! Exact Gaussian rationals `re + im*i` over `Ratio<i64>`.
//!
//! All arithmetic is checked; an overflow panics instead of wrapping.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianScalar {
    pub re: Rational,
    pub im: Rational,
}

fn cadd(a: Rational, b: Rational) -> Rational {
    a.checked_add(&b).expect("rational overflow")
}

fn csub(a: Rational, b: Rational) -> Rational {
    a.checked_sub(&b).expect("rational overflow")
}

fn cmul(a: Rational, b: Rational) -> Rational {
    a.checked_mul(&b).expect("rational overflow")
}

impl GaussianScalar {
    pub const fn new(re: Rational, im: Rational) -> Self {
        GaussianScalar { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianScalar::new(Rational::from_integer(re), Rational::from_integer(im))
    }

    pub fn real(re: Rational) -> Self {
        GaussianScalar::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        GaussianScalar::from_ints(0, 0)
    }

    pub fn one() -> Self {
        GaussianScalar::from_ints(1, 0)
    }

    pub fn i() -> Self {
        GaussianScalar::from_ints(0, 1)
    }

    pub fn half() -> Self {
        GaussianScalar::real(Rational::new(1, 2))
    }

    /// `i^k` for any integer k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianScalar::from_ints(1, 0),
            1 => GaussianScalar::from_ints(0, 1),
            2 => GaussianScalar::from_ints(-1, 0),
            _ => GaussianScalar::from_ints(0, -1),
        }
    }

    pub fn sign(s: i8) -> Self {
        GaussianScalar::from_ints(s as i64, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianScalar::new(self.re, -self.im)
    }

    pub fn norm_sqr(&self) -> Rational {
        cadd(cmul(self.re, self.re), cmul(self.im, self.im))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(GaussianScalar::new(self.re / d, -self.im / d))
    }

    /// +1 or -1 if the scalar is exactly one of them.
    pub fn as_sign(&self) -> Option<i8> {
        if !self.im.is_zero() {
            return None;
        }
        if self.re.is_one() {
            Some(1)
        } else if (-self.re).is_one() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn scale(&self, r: Rational) -> Self {
        GaussianScalar::new(cmul(self.re, r), cmul(self.im, r))
    }
}

impl Add for GaussianScalar {
    type Output = GaussianScalar;
    fn add(self, o: Self) -> Self {
        GaussianScalar::new(cadd(self.re, o.re), cadd(self.im, o.im))
    }
}

impl AddAssign for GaussianScalar {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for GaussianScalar {
    type Output = GaussianScalar;
    fn sub(self, o: Self) -> Self {
        GaussianScalar::new(csub(self.re, o.re), csub(self.im, o.im))
    }
}

impl Mul for GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, o: Self) -> Self {
        // fast paths for the unit entries that dominate spinor matrices
        if self.is_zero() || o.is_zero() {
            return GaussianScalar::zero();
        }
        let re = csub(cmul(self.re, o.re), cmul(self.im, o.im));
        let im = cadd(cmul(self.re, o.im), cmul(self.im, o.re));
        GaussianScalar::new(re, im)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for GaussianScalar {
    type Output = GaussianScalar;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero")
    }
}

impl Neg for GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> Self {
        GaussianScalar::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianScalar {
    fn from(v: i64) -> Self {
        GaussianScalar::from_ints(v, 0)
    }
}

impl From<Rational> for GaussianScalar {
    fn from(v: Rational) -> Self {
        GaussianScalar::real(v)
    }
}

fn fmt_ratio(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_imag(r: &Rational) -> String {
    // magnitude only, sign handled by caller
    let a = r.abs();
    if a.is_one() {
        "i".to_string()
    } else {
        format!("{}i", fmt_ratio(&a))
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_ratio(&self.re));
        }
        let neg = self.im.is_negative();
        if self.re.is_zero() {
            let s = if neg { "-" } else { "" };
            return write!(f, "{}{}", s, fmt_imag(&self.im));
        }
        let op = if neg { '-' } else { '+' };
        write!(f, "{}{}{}", fmt_ratio(&self.re), op, fmt_imag(&self.im))
    }
}

impl fmt::Debug for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_ratio(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{}'", s));
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(Rational::new(n, d))
    } else {
        Ok(Rational::from_integer(s.parse().map_err(|_| bad())?))
    }
}

fn parse_imag(s: &str) -> Result<Rational> {
    // s ends with 'i'; sign already stripped or present
    let body = &s[..s.len() - 1];
    match body.trim() {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        b => parse_ratio(b),
    }
}

impl FromStr for GaussianScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if !t.ends_with('i') {
            return Ok(GaussianScalar::real(parse_ratio(&t)?));
        }
        // split at the last sign that is not the leading one
        let split = t.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(k, _)| k).last();
        match split {
            Some(k) => {
                let re = parse_ratio(&t[..k])?;
                let im = parse_imag(&t[k..])?;
                Ok(GaussianScalar::new(re, im))
            }
            None => Ok(GaussianScalar::new(Rational::zero(), parse_imag(&t)?)),
        }
    }
}

impl Serialize for GaussianScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let cases = [
            (GaussianScalar::from_ints(0, 0), "0"),
            (GaussianScalar::from_ints(-3, 0), "-3"),
            (GaussianScalar::from_ints(0, 1), "i"),
            (GaussianScalar::from_ints(0, -1), "-i"),
            (GaussianScalar::new(Rational::new(1, 2), Rational::from_integer(-3)), "1/2-3i"),
            (GaussianScalar::new(Rational::zero(), Rational::new(1, 2)), "1/2i"),
        ];
        for (v, s) in cases {
            assert_eq!(v.to_string(), s);
            assert_eq!(s.parse::<GaussianScalar>().unwrap(), v);
        }
    }

    #[test]
    fn i_squared() {
        let i = GaussianScalar::i();
        assert_eq!(i * i, GaussianScalar::from_ints(-1, 0));
        assert_eq!(GaussianScalar::i_pow(-1), i.conj());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("x".parse::<GaussianScalar>().is_err());
        assert!("1/0".parse::<GaussianScalar>().is_err());
    }
}

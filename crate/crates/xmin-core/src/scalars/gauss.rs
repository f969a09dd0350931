use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rat::Rat;
use crate::error::XminError;

/// An exact element `re + im·i` of the Gaussian rationals ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussQ {
    re: Rat,
    im: Rat,
}

impl GaussQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussQ { re: Rat::from_big(re), im: Rat::from_big(im) }
    }

    fn from_rats(re: Rat, im: Rat) -> Self {
        GaussQ { re, im }
    }

    pub fn zero() -> Self {
        GaussQ::default()
    }

    pub fn one() -> Self {
        GaussQ::from_int(1)
    }

    pub fn i() -> Self {
        GaussQ::from_rats(Rat::int(0), Rat::int(1))
    }

    pub fn from_int(n: i64) -> Self {
        GaussQ::from_rats(Rat::int(n), Rat::int(0))
    }

    /// `num/den` as a real Gaussian rational. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        GaussQ::from_rats(Rat::new(num, den), Rat::int(0))
    }

    /// `(a/b) + (c/d)·i`. Panics on a zero denominator.
    pub fn complex(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussQ::from_rats(Rat::new(a, b), Rat::new(c, d))
    }

    pub fn re(&self) -> BigRational {
        self.re.to_big()
    }

    pub fn im(&self) -> BigRational {
        self.im.to_big()
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

    /// Real and strictly negative.
    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }

    pub fn conj(&self) -> Self {
        GaussQ::from_rats(self.re.clone(), self.im.neg())
    }

    /// `re² + im²`.
    pub fn abs_sq(&self) -> BigRational {
        self.abs_sq_rat().to_big()
    }

    fn abs_sq_rat(&self) -> Rat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn inv(&self) -> Result<Self, XminError> {
        let n = self.abs_sq_rat();
        let re = self.re.div(&n).ok_or(XminError::DivisionByZero)?;
        let im = self.im.div(&n).ok_or(XminError::DivisionByZero)?.neg();
        Ok(GaussQ::from_rats(re, im))
    }

    pub fn checked_div(&self, other: &GaussQ) -> Result<Self, XminError> {
        if other.is_real() {
            let d = &other.re;
            return match (self.re.div(d), self.im.div(d)) {
                (Some(re), Some(im)) => Ok(GaussQ::from_rats(re, im)),
                _ => Err(XminError::DivisionByZero),
            };
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, e: i32) -> Result<Self, XminError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }
}

fn rat_str(r: &Rat) -> String {
    format!("{}/{}", r.numer_string(), r.denom_string())
}

fn rat_display(r: &Rat) -> String {
    if r.is_integer() {
        r.numer_string()
    } else {
        rat_str(r)
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", rat_display(&self.re));
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}i", rat_display(&im_abs))
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_part}")
            } else {
                write!(f, "{im_part}")
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", rat_display(&self.re), sign, im_part)
        }
    }
}

impl fmt::Debug for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GaussQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaussQ", 2)?;
        st.serialize_field("re", &rat_str(&self.re))?;
        st.serialize_field("im", &rat_str(&self.im))?;
        st.end()
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Parses a single signed term: `3/4`, `-i`, `i/2`, `3i/2`, `-1/2i`.
fn parse_term(t: &str) -> Option<GaussQ> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let body = body.trim();
    let value = if body.contains('i') {
        let stripped = body.replacen('i', "", 1).replace('*', "");
        let stripped = stripped.trim();
        let r = if stripped.is_empty() {
            BigRational::one()
        } else if let Some(d) = stripped.strip_prefix('/') {
            BigRational::new(BigInt::one(), d.trim().parse().ok()?)
        } else {
            parse_rational(stripped)?
        };
        GaussQ::new(BigRational::zero(), r)
    } else {
        GaussQ::new(parse_rational(body)?, BigRational::zero())
    };
    Some(if neg { -value } else { value })
}

impl FromStr for GaussQ {
    type Err = XminError;

    /// Accepts sums of real and imaginary terms such as `1`, `-1/2`, `i`, `-i/2`, `1/2-3i/4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || XminError::Parse(format!("invalid Gaussian rational `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (idx, ch) in compact.char_indices() {
            if idx > start && (ch == '+' || ch == '-') && !compact[..idx].ends_with('/') {
                terms.push(&compact[start..idx]);
                start = idx;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = GaussQ::zero();
        for t in terms {
            acc += &parse_term(t).ok_or_else(bad)?;
        }
        Ok(acc)
    }
}

impl From<i64> for GaussQ {
    fn from(n: i64) -> Self {
        GaussQ::from_int(n)
    }
}

impl From<BigRational> for GaussQ {
    fn from(r: BigRational) -> Self {
        GaussQ::new(r, BigRational::zero())
    }
}

impl<'a> Add<&'a GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn add(self, o: &'a GaussQ) -> GaussQ {
        GaussQ::from_rats(self.re.add(&o.re), self.im.add(&o.im))
    }
}

impl<'a> Sub<&'a GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn sub(self, o: &'a GaussQ) -> GaussQ {
        GaussQ::from_rats(self.re.sub(&o.re), self.im.sub(&o.im))
    }
}

impl<'a> Mul<&'a GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn mul(self, o: &'a GaussQ) -> GaussQ {
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => GaussQ::from_rats(self.re.mul(&o.re), Rat::int(0)),
            (true, false) => GaussQ::from_rats(self.re.mul(&o.re), self.re.mul(&o.im)),
            (false, true) => GaussQ::from_rats(self.re.mul(&o.re), self.im.mul(&o.re)),
            (false, false) => GaussQ::from_rats(
                self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
                self.re.mul(&o.im).add(&self.im.mul(&o.re)),
            ),
        }
    }
}

/// Panics on division by zero; use [`GaussQ::checked_div`] for a fallible version.
impl<'a> Div<&'a GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn div(self, o: &'a GaussQ) -> GaussQ {
        self.checked_div(o).expect("division by zero in GaussQ")
    }
}

impl Neg for &GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ::from_rats(self.re.neg(), self.im.neg())
    }
}

impl Neg for GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ::from_rats(self.re.neg(), self.im.neg())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussQ> for GaussQ {
            type Output = GaussQ;
            fn $m(self, o: GaussQ) -> GaussQ { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a GaussQ> for GaussQ {
            type Output = GaussQ;
            fn $m(self, o: &'a GaussQ) -> GaussQ { (&self).$m(o) }
        }
        impl $tr<GaussQ> for &GaussQ {
            type Output = GaussQ;
            fn $m(self, o: GaussQ) -> GaussQ { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussQ> for GaussQ {
    fn add_assign(&mut self, o: &GaussQ) {
        self.re = self.re.add(&o.re);
        self.im = self.im.add(&o.im);
    }
}

impl SubAssign<&GaussQ> for GaussQ {
    fn sub_assign(&mut self, o: &GaussQ) {
        self.re = self.re.sub(&o.re);
        self.im = self.im.sub(&o.im);
    }
}

impl MulAssign<&GaussQ> for GaussQ {
    fn mul_assign(&mut self, o: &GaussQ) {
        *self = &*self * o;
    }
}

impl Sum for GaussQ {
    fn sum<I: Iterator<Item = GaussQ>>(iter: I) -> Self {
        iter.fold(GaussQ::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl Product for GaussQ {
    fn product<I: Iterator<Item = GaussQ>>(iter: I) -> Self {
        iter.fold(GaussQ::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussQ {
        s.parse().unwrap()
    }

    #[test]
    fn field_examples() {
        assert_eq!(g("1+i") * g("1-i"), GaussQ::from_int(2));
        assert_eq!(GaussQ::i() * GaussQ::i(), GaussQ::from_int(-1));
        assert_eq!(g("1/2") + g("1/2"), GaussQ::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(GaussQ::one().checked_div(&GaussQ::zero()), Err(XminError::DivisionByZero)));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(GaussQ::ratio(2, 4), GaussQ::ratio(-1, -2));
        assert_eq!(GaussQ::ratio(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "-1/2", "i", "-i", "i/2", "-3i/4", "1/2+i", "-2-5i/3"] {
            let v = g(s);
            assert_eq!(g(&v.to_string()), v, "{s}");
        }
        assert_eq!(g("-i/2"), GaussQ::complex(0, 1, -1, 2));
        assert_eq!(g("1/2i"), GaussQ::complex(0, 1, 1, 2));
        assert_eq!(g("3i/2"), GaussQ::complex(0, 1, 3, 2));
        assert!("1/0".parse::<GaussQ>().is_err());
        assert!("x".parse::<GaussQ>().is_err());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(g("1/2-i")).unwrap();
        assert_eq!(v, serde_json::json!({"re": "1/2", "im": "-1/1"}));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(g("2").powi(-2).unwrap(), g("1/4"));
        assert!(GaussQ::zero().powi(-1).is_err());
    }
}

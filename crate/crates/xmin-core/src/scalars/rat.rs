//! Exact rationals stored inline as reduced `i64` pairs, promoted to `BigRational` on overflow.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

/// Canonical: `Small(n, d)` has `d > 0` and `gcd(n, d) = 1`; `Big` only holds values
/// that do not fit `Small`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::Small(0, 1)
    }
}

impl Rat {
    pub fn int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    /// Panics on `d == 0`.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    fn from_i128(n: i128, d: i128) -> Rat {
        if let (Ok(n), Ok(d)) = (i64::try_from(n), i64::try_from(d)) {
            if n != i64::MIN && d != i64::MIN {
                let g = gcd64(n.unsigned_abs(), d.unsigned_abs()) as i64;
                let (n, d) = (n / g, d / g);
                return if d < 0 { Rat::Small(-n, -d) } else { Rat::Small(n, d) };
            }
        }
        let g = gcd(n.unsigned_abs(), d.unsigned_abs()) as i128;
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rat::Small(a, b),
            _ => Rat::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    pub fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n < 0,
            Rat::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(b) => b.denom().is_one(),
        }
    }

    pub fn numer_string(&self) -> String {
        match self {
            Rat::Small(n, _) => n.to_string(),
            Rat::Big(b) => b.numer().to_string(),
        }
    }

    pub fn denom_string(&self) -> String {
        match self {
            Rat::Small(_, d) => d.to_string(),
            Rat::Big(b) => b.denom().to_string(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::from_i128(-(*n as i128), *d as i128),
            Rat::Big(b) => Rat::from_big(-b),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(0, _), _) => o.clone(),
            (_, Rat::Small(0, _)) => self.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if b == d {
                    return Rat::from_i128(*a as i128 + *c as i128, *b as i128);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match a.checked_mul(d).zip(c.checked_mul(b)).and_then(|(x, y)| x.checked_add(y)) {
                    Some(n) => Rat::from_i128(n, b * d),
                    None => Rat::from_big(self.to_big() + o.to_big()),
                }
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(0, _), _) | (_, Rat::Small(0, _)) => Rat::default(),
            (Rat::Small(1, 1), _) => o.clone(),
            (_, Rat::Small(1, 1)) => self.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    /// `None` when `o` is zero.
    pub fn div(&self, o: &Rat) -> Option<Rat> {
        match o {
            Rat::Small(0, _) => None,
            Rat::Small(c, d) => Some(self.mul(&Rat::from_i128(*d as i128, *c as i128))),
            Rat::Big(b) => Some(self.mul(&Rat::from_big(b.recip()))),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_and_demotes() {
        let big = Rat::int(i64::MAX).add(&Rat::int(i64::MAX));
        assert!(matches!(big, Rat::Big(_)));
        let back = big.sub(&Rat::int(i64::MAX));
        assert_eq!(back, Rat::int(i64::MAX));
        let tiny = Rat::new(1, i64::MAX).mul(&Rat::new(1, 3));
        assert!(matches!(tiny, Rat::Big(_)));
        assert_eq!(tiny.mul(&Rat::int(3)), Rat::new(1, i64::MAX));
    }

    #[test]
    fn canonical_and_ordered() {
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert_eq!(Rat::new(3, 4).div(&Rat::new(3, 8)), Some(Rat::int(2)));
        assert_eq!(Rat::int(1).div(&Rat::int(0)), None);
    }
}

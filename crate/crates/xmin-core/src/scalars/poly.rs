use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{GaussQ, Ring};
use crate::error::XminError;

/// Shared, ordered variable list of a polynomial ring.
pub type Vars = Arc<[String]>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

/// Sparse polynomial over [`GaussQ`] in a fixed, ordered list of variables.
///
/// With `laurent` set, exponents may be negative.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vars,
    terms: BTreeMap<Vec<i32>, GaussQ>,
    laurent: bool,
}

impl MPoly {
    pub fn zero(vars: &Vars, laurent: bool) -> Self {
        MPoly { vars: vars.clone(), terms: BTreeMap::new(), laurent }
    }

    pub fn constant(vars: &Vars, c: GaussQ, laurent: bool) -> Self {
        let mut p = MPoly::zero(vars, laurent);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn var(vars: &Vars, idx: usize, laurent: bool) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = MPoly::zero(vars, laurent);
        p.terms.insert(e, GaussQ::one());
        p
    }

    pub fn monomial(vars: &Vars, exps: Vec<i32>, coeff: GaussQ, laurent: bool) -> Result<Self, XminError> {
        if exps.len() != vars.len() {
            return Err(XminError::ArityMismatch { expected: vars.len(), got: exps.len() });
        }
        if !laurent && exps.iter().any(|&e| e < 0) {
            return Err(XminError::Precondition("negative exponent in a polynomial ring".into()));
        }
        let mut p = MPoly::zero(vars, laurent);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &GaussQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> GaussQ {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GaussQ {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Homogeneous component of total degree `d`.
    pub fn part_of_degree(&self, d: i32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<i32>() == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        MPoly { vars: self.vars.clone(), terms, laurent: self.laurent }
    }

    fn same_ring(&self, other: &MPoly) -> Result<(), XminError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(XminError::VariableMismatch)
        }
    }

    fn insert_term(terms: &mut BTreeMap<Vec<i32>, GaussQ>, e: Vec<i32>, c: GaussQ) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, XminError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        out.laurent |= other.laurent;
        for (e, c) in &other.terms {
            Self::insert_term(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, XminError> {
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, XminError> {
        self.same_ring(other)?;
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                Self::insert_term(&mut terms, e, c1 * c2);
            }
        }
        Ok(MPoly { vars: self.vars.clone(), terms, laurent: self.laurent || other.laurent })
    }

    fn neg_poly(&self) -> MPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MPoly { vars: self.vars.clone(), terms, laurent: self.laurent }
    }

    pub fn scale(&self, k: &GaussQ) -> MPoly {
        if k.is_zero() {
            return MPoly::zero(&self.vars, self.laurent);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        MPoly { vars: self.vars.clone(), terms, laurent: self.laurent }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::constant(&self.vars, GaussQ::one(), self.laurent);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> MPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[idx];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            Self::insert_term(&mut terms, e2, c * &GaussQ::from_int(k as i64));
        }
        MPoly { vars: self.vars.clone(), terms, laurent: self.laurent }
    }

    /// Evaluates at a point given in variable order.
    pub fn eval(&self, point: &[GaussQ]) -> Result<GaussQ, XminError> {
        if point.len() != self.vars.len() {
            return Err(XminError::ArityMismatch { expected: self.vars.len(), got: point.len() });
        }
        let mut acc = GaussQ::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if k < 0 && point[i].is_zero() {
                    return Err(XminError::LaurentAtZero(self.vars[i].clone()));
                }
                t = &t * &point[i].powi(k)?;
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes polynomial `values[i]` for variable `i`. Exponents must be nonnegative.
    pub fn substitute(&self, values: &[MPoly]) -> Result<MPoly, XminError> {
        if values.len() != self.vars.len() {
            return Err(XminError::ArityMismatch { expected: self.vars.len(), got: values.len() });
        }
        let target = values
            .first()
            .map(|v| (v.vars.clone(), v.laurent))
            .ok_or_else(|| XminError::Precondition("substitution into a ring with no variables".into()))?;
        for v in values {
            v.same_ring(&values[0])?;
        }
        let mut acc = MPoly::zero(&target.0, target.1);
        for (e, c) in &self.terms {
            if e.iter().any(|&k| k < 0) {
                return Err(XminError::Precondition("substitution into a negative exponent".into()));
            }
            let mut t = MPoly::constant(&target.0, c.clone(), target.1);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.checked_mul(&values[i].pow(k as u32))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Same polynomial over a different variable list of equal length.
    pub fn with_vars(&self, vars: &Vars) -> Result<MPoly, XminError> {
        if vars.len() != self.vars.len() {
            return Err(XminError::ArityMismatch { expected: self.vars.len(), got: vars.len() });
        }
        Ok(MPoly { vars: vars.clone(), terms: self.terms.clone(), laurent: self.laurent })
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            let (neg, mag) = if c.is_negative_real() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let coef = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => coef,
                (false, true) => mono.join("*"),
                (false, false) => format!("{}*{}", coef, mono.join("*")),
            };
            match (n, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on mismatched variable lists; the checked_* methods report it.
impl<'a> Add<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, o: &'a MPoly) -> MPoly {
        self.checked_add(o).expect("MPoly variable mismatch")
    }
}

impl<'a> Sub<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &'a MPoly) -> MPoly {
        self.checked_sub(o).expect("MPoly variable mismatch")
    }
}

impl<'a> Mul<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &'a MPoly) -> MPoly {
        self.checked_mul(o).expect("MPoly variable mismatch")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_poly()
    }
}

impl Ring for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(&self.vars, self.laurent)
    }
    fn one_like(&self) -> Self {
        MPoly::constant(&self.vars, GaussQ::one(), self.laurent)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_example() {
        let v = vars(&["q124", "q237"]);
        let p = &MPoly::var(&v, 0, false) * &MPoly::var(&v, 1, false);
        assert_eq!(p.derivative(0), MPoly::var(&v, 1, false));
    }

    #[test]
    fn laurent_cancellation() {
        let v = vars(&["lambda"]);
        let a = MPoly::monomial(&v, vec![2], GaussQ::one(), true).unwrap();
        let b = MPoly::monomial(&v, vec![-2], GaussQ::one(), true).unwrap();
        assert_eq!(&a * &b, MPoly::constant(&v, GaussQ::one(), true));
        assert_eq!(b.eval(&[GaussQ::zero()]), Err(XminError::LaurentAtZero("lambda".into())));
        assert_eq!(b.eval(&[GaussQ::from_int(2)]).unwrap(), GaussQ::ratio(1, 4));
    }

    #[test]
    fn evaluation_example() {
        let v = vars(&["q124", "q135"]);
        let p = &MPoly::var(&v, 0, false) * &MPoly::var(&v, 1, false);
        assert_eq!(p.eval(&[GaussQ::from_int(2), GaussQ::from_int(3)]).unwrap(), GaussQ::from_int(6));
    }

    #[test]
    fn mismatched_rings() {
        let a = MPoly::var(&vars(&["x"]), 0, false);
        let b = MPoly::var(&vars(&["y"]), 0, false);
        assert_eq!(a.checked_add(&b), Err(XminError::VariableMismatch));
        assert!(MPoly::monomial(&vars(&["x"]), vec![-1], GaussQ::one(), false).is_err());
    }

    #[test]
    fn substitution_composes() {
        let uv = vars(&["u", "v"]);
        let u = vars(&["u"]);
        let p = &MPoly::var(&u, 0, false) * &MPoly::var(&u, 0, false);
        let sum = &MPoly::var(&uv, 0, false) + &MPoly::var(&uv, 1, false);
        let q = p.substitute(std::slice::from_ref(&sum)).unwrap();
        assert_eq!(q, &sum * &sum);
    }

    #[test]
    fn display() {
        let v = vars(&["x", "y"]);
        let p = &(&MPoly::var(&v, 0, false) * &MPoly::var(&v, 1, false)).scale(&GaussQ::from_int(-2))
            + &MPoly::constant(&v, GaussQ::ratio(1, 2), false);
        assert_eq!(p.to_string(), "-2*x*y + 1/2");
    }
}

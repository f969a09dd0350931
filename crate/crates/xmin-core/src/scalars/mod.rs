//! Exact scalars: Gaussian rationals, sparse (Laurent) polynomials over them, and
//! fraction-free linear algebra.

mod gauss;
mod matrix;
mod poly;
mod rat;

pub use gauss::GaussQ;
pub use matrix::{normalize_leading, Echelon, Matrix};
pub use poly::{vars, MPoly, Vars};

/// Minimal commutative-ring interface shared by matrix entries.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for GaussQ {
    fn zero_like(&self) -> Self {
        GaussQ::zero()
    }
    fn one_like(&self) -> Self {
        GaussQ::one()
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

/// Lifts a scalar matrix to constant polynomials in the given ring.
pub fn lift(m: &Matrix<GaussQ>, vars: &Vars, laurent: bool) -> Matrix<MPoly> {
    m.map(|x| MPoly::constant(vars, x.clone(), laurent))
}

//! Split octonions 𝕆 = Mat₂ ⊕ Mat₂ over ℚ(i) with the Cayley–Dickson product
//! `(a,b)(c,d) = (ac + d̄b, da + bc̄)`, in three coordinate systems.
//!
//! The `E` basis is `e = (1,0)`, `e₁..e₃ = (𝐢,0),(𝐣,0),(𝐤,0)`, `e₄..e₇ = (0,1),(0,𝐢),(0,𝐣),(0,𝐤)`
//! with `𝐢 = diag(i,−i)`, `𝐣 = [[0,1],[−1,0]]`, `𝐤 = [[0,i],[i,0]]`. The `Tilde` basis is the
//! torus eigenbasis of the imaginary part.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::XminError;
use crate::grassmann::Plane3;
use crate::scalars::{GaussQ, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BasisTag {
    MatrixPair,
    E,
    Tilde,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisTag::MatrixPair => "matrix-pair",
            BasisTag::E => "e",
            BasisTag::Tilde => "tilde",
        };
        f.write_str(s)
    }
}

struct BasisData {
    /// Columns are the basis vectors in matrix-pair coordinates.
    to_pair: [Matrix<GaussQ>; 3],
    from_pair: [Matrix<GaussQ>; 3],
    /// 7×7 matrix whose columns are ẽ₁..ẽ₇ in E coordinates.
    tilde_in_e: Matrix<GaussQ>,
    e_in_tilde: Matrix<GaussQ>,
}

fn slot(tag: BasisTag) -> usize {
    match tag {
        BasisTag::MatrixPair => 0,
        BasisTag::E => 1,
        BasisTag::Tilde => 2,
    }
}

fn tilde_columns() -> Matrix<GaussQ> {
    let i = GaussQ::i();
    let one = GaussQ::one();
    let mut m = Matrix::zeros(7, 7);
    m.set(0, 0, one.clone());
    // ẽ_a = −i e_a + e_b, ẽ_b = i e_a + e_b for (a, b) = (2,3), (4,5), (6,7)
    for (a, b) in [(1usize, 2usize), (3, 4), (5, 6)] {
        m.set(a, a, -&i);
        m.set(b, a, one.clone());
        m.set(a, b, i.clone());
        m.set(b, b, one.clone());
    }
    m
}

fn basis_data() -> &'static BasisData {
    static DATA: OnceLock<BasisData> = OnceLock::new();
    DATA.get_or_init(|| {
        let i = GaussQ::i();
        let o = GaussQ::one();
        let z = GaussQ::zero();
        let quat = |q: usize| -> [GaussQ; 4] {
            match q {
                0 => [o.clone(), z.clone(), z.clone(), o.clone()],
                1 => [i.clone(), z.clone(), z.clone(), -&i],
                2 => [z.clone(), o.clone(), -&o, z.clone()],
                _ => [z.clone(), i.clone(), i.clone(), z.clone()],
            }
        };
        let mut e = Matrix::zeros(8, 8);
        for k in 0..8 {
            let (off, q) = if k < 4 { (0, k) } else { (4, k - 4) };
            for (r, v) in quat(q).into_iter().enumerate() {
                e.set(off + r, k, v);
            }
        }
        let tilde_in_e = tilde_columns();
        let mut t8 = Matrix::identity(8);
        for r in 0..7 {
            for c in 0..7 {
                t8.set(r + 1, c + 1, tilde_in_e.get(r, c).clone());
            }
        }
        let tilde = e.matmul(&t8).expect("8x8");
        let to_pair = [Matrix::identity(8), e, tilde];
        let from_pair = [
            Matrix::identity(8),
            to_pair[1].inverse().expect("E basis invertible"),
            to_pair[2].inverse().expect("tilde basis invertible"),
        ];
        let e_in_tilde = tilde_in_e.inverse().expect("tilde basis invertible");
        BasisData { to_pair, from_pair, tilde_in_e, e_in_tilde }
    })
}

/// 8×8 matrix whose columns are the basis vectors of `tag` in matrix-pair coordinates.
pub fn basis_matrix(tag: BasisTag) -> &'static Matrix<GaussQ> {
    &basis_data().to_pair[slot(tag)]
}

/// 7×7 matrix whose columns are ẽ₁..ẽ₇ written in the E basis.
pub fn tilde_in_e() -> &'static Matrix<GaussQ> {
    &basis_data().tilde_in_e
}

/// Inverse of [`tilde_in_e`].
pub fn e_in_tilde() -> &'static Matrix<GaussQ> {
    &basis_data().e_in_tilde
}

/// 7×7 change of imaginary coordinates from `from` to `to` (E or Tilde).
pub fn imag_change(from: BasisTag, to: BasisTag) -> Result<Matrix<GaussQ>, XminError> {
    match (from, to) {
        (BasisTag::MatrixPair, _) | (_, BasisTag::MatrixPair) => {
            Err(XminError::Precondition("imaginary coordinates need the E or tilde basis".into()))
        }
        (a, b) if a == b => Ok(Matrix::identity(7)),
        (BasisTag::Tilde, BasisTag::E) => Ok(tilde_in_e().clone()),
        _ => Ok(e_in_tilde().clone()),
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Quat([GaussQ; 4]);

impl Quat {
    fn mul(&self, o: &Quat) -> Quat {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        Quat([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }
    fn add(&self, o: &Quat) -> Quat {
        Quat(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }
    /// Adjugate, equal to `tr(x)·1 − x`.
    fn conj(&self) -> Quat {
        let [a, b, c, d] = &self.0;
        Quat([d.clone(), -b, -c, a.clone()])
    }
    fn det(&self) -> GaussQ {
        let [a, b, c, d] = &self.0;
        a * d - b * c
    }
}

/// An octonion with 8 exact coordinates in a declared basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Octonion {
    basis: BasisTag,
    coords: [GaussQ; 8],
}

impl Octonion {
    pub fn new(basis: BasisTag, coords: [GaussQ; 8]) -> Self {
        Octonion { basis, coords }
    }

    pub fn zero(basis: BasisTag) -> Self {
        Octonion::new(basis, Default::default())
    }

    /// Imaginary element with the given 7 coordinates (E or Tilde basis).
    pub fn imaginary(basis: BasisTag, coords: [GaussQ; 7]) -> Result<Self, XminError> {
        if basis == BasisTag::MatrixPair {
            return Err(XminError::Precondition("imaginary coordinates need the E or tilde basis".into()));
        }
        let mut c: [GaussQ; 8] = Default::default();
        for (k, v) in coords.into_iter().enumerate() {
            c[k + 1] = v;
        }
        Ok(Octonion::new(basis, c))
    }

    /// Basis element `k` of an E or Tilde basis, where `k = 0` is the unit.
    pub fn basis_element(basis: BasisTag, k: usize) -> Self {
        let mut c: [GaussQ; 8] = Default::default();
        c[k] = GaussQ::one();
        Octonion::new(basis, c)
    }

    /// `e_k` in the E basis (`e_0 = e`).
    pub fn e(k: usize) -> Self {
        Octonion::basis_element(BasisTag::E, k)
    }

    pub fn unit(basis: BasisTag) -> Self {
        Octonion::new(BasisTag::E, {
            let mut c: [GaussQ; 8] = Default::default();
            c[0] = GaussQ::one();
            c
        })
        .to_basis(basis)
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn coords(&self) -> &[GaussQ; 8] {
        &self.coords
    }

    /// The seven coordinates after the unit coordinate; errors unless in 𝕀.
    pub fn imag_coords(&self) -> Result<[GaussQ; 7], XminError> {
        if self.basis == BasisTag::MatrixPair {
            return self.to_basis(BasisTag::E).imag_coords();
        }
        if !self.coords[0].is_zero() {
            return Err(XminError::NotImaginary);
        }
        Ok(std::array::from_fn(|k| self.coords[k + 1].clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussQ::is_zero)
    }

    pub fn to_basis(&self, tag: BasisTag) -> Octonion {
        if tag == self.basis {
            return self.clone();
        }
        let data = basis_data();
        let pair = data.to_pair[slot(self.basis)].mul_vec(&self.coords).expect("8x8");
        let out = data.from_pair[slot(tag)].mul_vec(&pair).expect("8x8");
        Octonion::new(tag, out.try_into().expect("8 coordinates"))
    }

    fn to_quats(&self) -> (Quat, Quat) {
        let p = self.to_basis(BasisTag::MatrixPair).coords;
        let [a0, a1, a2, a3, b0, b1, b2, b3] = p;
        (Quat([a0, a1, a2, a3]), Quat([b0, b1, b2, b3]))
    }

    fn from_quats(tag: BasisTag, a: Quat, b: Quat) -> Octonion {
        let [a0, a1, a2, a3] = a.0;
        let [b0, b1, b2, b3] = b.0;
        Octonion::new(BasisTag::MatrixPair, [a0, a1, a2, a3, b0, b1, b2, b3]).to_basis(tag)
    }

    fn check(&self, o: &Octonion) -> Result<(), XminError> {
        if self.basis == o.basis {
            Ok(())
        } else {
            Err(XminError::BasisMismatch(self.basis, o.basis))
        }
    }

    /// Cayley–Dickson product.
    pub fn try_mul(&self, o: &Octonion) -> Result<Octonion, XminError> {
        self.check(o)?;
        let (a, b) = self.to_quats();
        let (c, d) = o.to_quats();
        let first = a.mul(&c).add(&d.conj().mul(&b));
        let second = d.mul(&a).add(&b.mul(&c.conj()));
        Ok(Octonion::from_quats(self.basis, first, second))
    }

    pub fn try_add(&self, o: &Octonion) -> Result<Octonion, XminError> {
        self.check(o)?;
        Ok(Octonion::new(self.basis, std::array::from_fn(|k| &self.coords[k] + &o.coords[k])))
    }

    pub fn scale(&self, k: &GaussQ) -> Octonion {
        Octonion::new(self.basis, std::array::from_fn(|j| &self.coords[j] * k))
    }

    /// `(a,b)‾ = (ā, −b)`.
    pub fn conj(&self) -> Octonion {
        let (a, b) = self.to_quats();
        let nb = Quat(std::array::from_fn(|k| -&b.0[k]));
        Octonion::from_quats(self.basis, a.conj(), nb)
    }

    /// `N((a,b)) = det a − det b`.
    pub fn norm(&self) -> GaussQ {
        let (a, b) = self.to_quats();
        a.det() - b.det()
    }

    /// Polarization of the norm.
    pub fn inner(&self, o: &Octonion) -> Result<GaussQ, XminError> {
        let s = self.try_add(o)?;
        Ok(&(s.norm() - self.norm() - o.norm()) * &GaussQ::ratio(1, 2))
    }

    /// Whether the first quaternion component is trace-free.
    pub fn is_imaginary(&self) -> bool {
        let (a, _) = self.to_quats();
        (&a.0[0] + &a.0[3]).is_zero()
    }

    /// Coefficient of the unit `e` (half the trace of the first component).
    pub fn real_part(&self) -> GaussQ {
        let (a, _) = self.to_quats();
        &(&a.0[0] + &a.0[3]) * &GaussQ::ratio(1, 2)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: [&str; 8] = match self.basis {
            BasisTag::MatrixPair => ["(e11,0)", "(e12,0)", "(e21,0)", "(e22,0)", "(0,e11)", "(0,e12)", "(0,e21)", "(0,e22)"],
            BasisTag::E => ["e", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
            BasisTag::Tilde => ["e", "~e1", "~e2", "~e3", "~e4", "~e5", "~e6", "~e7"],
        };
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| if c.is_one() { n.to_string() } else { format!("({c}){n}") })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion[{}]({})", self.basis, self)
    }
}

impl Serialize for Octonion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            basis: BasisTag,
            coords: &'a [GaussQ; 8],
        }
        Repr { basis: self.basis, coords: &self.coords }.serialize(s)
    }
}

// Operator forms panic on mismatched bases; use the try_* methods to get an error instead.
impl<'a> Mul<&'a Octonion> for &Octonion {
    type Output = Octonion;
    fn mul(self, o: &'a Octonion) -> Octonion {
        self.try_mul(o).expect("octonion basis mismatch")
    }
}

impl<'a> Add<&'a Octonion> for &Octonion {
    type Output = Octonion;
    fn add(self, o: &'a Octonion) -> Octonion {
        self.try_add(o).expect("octonion basis mismatch")
    }
}

impl<'a> Sub<&'a Octonion> for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &'a Octonion) -> Octonion {
        self + &(-o)
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(self.basis, std::array::from_fn(|k| -&self.coords[k]))
    }
}

fn require_imag(xs: &[&Octonion]) -> Result<(), XminError> {
    if xs.iter().all(|x| x.is_imaginary()) {
        Ok(())
    } else {
        Err(XminError::NotImaginary)
    }
}

/// `½(ab − ba)` for `a, b ∈ 𝕀`.
pub fn cross(a: &Octonion, b: &Octonion) -> Result<Octonion, XminError> {
    require_imag(&[a, b])?;
    Ok((&a.try_mul(b)? - &(b * a)).scale(&GaussQ::ratio(1, 2)))
}

/// The scalar `s` with `−½(ab + ba) = s·e` for `a, b ∈ 𝕀`.
pub fn dot(a: &Octonion, b: &Octonion) -> Result<GaussQ, XminError> {
    require_imag(&[a, b])?;
    let s = (&a.try_mul(b)? + &(b * a)).scale(&GaussQ::ratio(-1, 2));
    Ok(s.real_part())
}

/// `(xy)z − x(yz)`.
pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion) -> Result<Octonion, XminError> {
    let left = x.try_mul(y)?.try_mul(z)?;
    let right = x.try_mul(&y.try_mul(z)?)?;
    Ok(&left - &right)
}

/// `½(x(ȳz) − z(ȳx))`.
pub fn triple_cross(x: &Octonion, y: &Octonion, z: &Octonion) -> Result<Octonion, XminError> {
    let yb = y.conj();
    let a = x.try_mul(&yb.try_mul(z)?)?;
    let b = z.try_mul(&yb.try_mul(x)?)?;
    Ok((&a - &b).scale(&GaussQ::ratio(1, 2)))
}

/// `φ(x,y,z) = ⟨xy, z⟩`.
pub fn phi3(x: &Octonion, y: &Octonion, z: &Octonion) -> Result<GaussQ, XminError> {
    require_imag(&[x, y, z])?;
    x.try_mul(y)?.inner(z)
}

/// `*φ(u,v,w,z) = ⟨u×v×w, z⟩`.
pub fn star_phi4(u: &Octonion, v: &Octonion, w: &Octonion, z: &Octonion) -> Result<GaussQ, XminError> {
    require_imag(&[u, v, w, z])?;
    triple_cross(u, v, w)?.inner(z)
}

/// The values `⟨χ(u,v,w), e_m⟩ = *φ(u,v,w,e_m)` for `m = 1..7`.
pub fn chi_pairing(u: &Octonion, v: &Octonion, w: &Octonion) -> Result<[GaussQ; 7], XminError> {
    let (u, v, w) = (u.to_basis(BasisTag::E), v.to_basis(BasisTag::E), w.to_basis(BasisTag::E));
    let mut out: [GaussQ; 7] = Default::default();
    for (m, slot) in out.iter_mut().enumerate() {
        *slot = star_phi4(&u, &v, &w, &Octonion::e(m + 1))?;
    }
    Ok(out)
}

/// The 𝕀-valued form χ determined by `⟨χ(u,v,w), z⟩ = *φ(u,v,w,z)`.
pub fn chi3(u: &Octonion, v: &Octonion, w: &Octonion) -> Result<Octonion, XminError> {
    let rhs = chi_pairing(u, v, w)?;
    let gram = Matrix::from_fn(7, 7, |r, c| Octonion::e(r + 1).inner(&Octonion::e(c + 1)).expect("E basis"));
    let sol = gram.solve(&rhs)?.ok_or(XminError::Singular)?;
    let out = Octonion::imaginary(BasisTag::E, sol.try_into().expect("7 coordinates"))?;
    Ok(out.to_basis(u.basis))
}

/// A multilinear form on 𝕀 written in the dual E basis, `e^{ijk}(e_i,e_j,e_k) = 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Form {
    pub degree: usize,
    pub terms: BTreeMap<Vec<u8>, GaussQ>,
}

impl Form {
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Vec<u8>, GaussQ)>) -> Self {
        Form { degree, terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn coeff(&self, idx: &[u8]) -> GaussQ {
        self.terms.get(idx).cloned().unwrap_or_default()
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.terms.iter().enumerate() {
            let name: String = idx.iter().map(|d| d.to_string()).collect();
            let neg = c == &GaussQ::from_int(-1);
            let sep = match (n, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            if c.is_one() || neg {
                write!(f, "{sep}e^{name}")?;
            } else {
                write!(f, "{sep}({c})e^{name}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormKind {
    Phi,
    StarPhi,
    ChiComponents,
}

fn sorted_tuples(k: usize) -> Vec<Vec<u8>> {
    fn rec(start: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=7 {
            cur.push(i);
            rec(i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, k, &mut Vec::new(), &mut out);
    out
}

/// Evaluates φ, *φ or the seven χ pairing components on all sorted E-basis tuples.
pub fn form_expansion(kind: FormKind) -> Vec<Form> {
    let e = |i: u8| Octonion::e(i as usize);
    match kind {
        FormKind::Phi => vec![Form::from_terms(
            3,
            sorted_tuples(3).into_iter().map(|t| {
                let v = phi3(&e(t[0]), &e(t[1]), &e(t[2])).expect("imaginary");
                (t, v)
            }),
        )],
        FormKind::StarPhi => vec![Form::from_terms(
            4,
            sorted_tuples(4).into_iter().map(|t| {
                let v = star_phi4(&e(t[0]), &e(t[1]), &e(t[2]), &e(t[3])).expect("imaginary");
                (t, v)
            }),
        )],
        FormKind::ChiComponents => {
            let triples = sorted_tuples(3);
            let values: Vec<[GaussQ; 7]> =
                triples.iter().map(|t| chi_pairing(&e(t[0]), &e(t[1]), &e(t[2])).expect("imaginary")).collect();
            (0..7)
                .map(|m| Form::from_terms(3, triples.iter().zip(&values).map(|(t, v)| (t.clone(), v[m].clone()))))
                .collect()
        }
    }
}

/// The seven forms `(i,j,k) ↦` coefficient of `e_m` in the expansion of χ(e_i,e_j,e_k).
pub fn chi_coefficient_expansion() -> Vec<Form> {
    let triples = sorted_tuples(3);
    let e = |i: u8| Octonion::e(i as usize);
    let values: Vec<[GaussQ; 7]> = triples
        .iter()
        .map(|t| chi3(&e(t[0]), &e(t[1]), &e(t[2])).and_then(|x| x.imag_coords()).expect("imaginary"))
        .collect();
    (0..7)
        .map(|m| Form::from_terms(3, triples.iter().zip(&values).map(|(t, v)| (t.clone(), v[m].clone()))))
        .collect()
}

/// Outcome of fitting `x×y×z = φ(x,y,z)e + c·[x,y,z]` over all sorted E-basis triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Calibration {
    /// The common constant, when one exists.
    pub constant: Option<GaussQ>,
    /// Triples where the associator vanishes.
    pub associative_triples: usize,
    /// Triples where the associator is nonzero.
    pub nonassociative_triples: usize,
}

pub fn calibration_constant() -> Calibration {
    let mut constant: Option<GaussQ> = None;
    let mut consistent = true;
    let (mut assoc, mut nonassoc) = (0, 0);
    for t in sorted_tuples(3) {
        let (x, y, z) = (Octonion::e(t[0] as usize), Octonion::e(t[1] as usize), Octonion::e(t[2] as usize));
        let phi = phi3(&x, &y, &z).expect("imaginary");
        let rest = &triple_cross(&x, &y, &z).expect("same basis") - &Octonion::unit(BasisTag::E).scale(&phi);
        let a = associator(&x, &y, &z).expect("same basis");
        if a.is_zero() {
            assoc += 1;
            consistent &= rest.is_zero();
            continue;
        }
        nonassoc += 1;
        let k = a.coords().iter().position(|c| !c.is_zero()).expect("nonzero");
        let c = &rest.coords()[k] / &a.coords()[k];
        consistent &= rest == a.scale(&c);
        match &constant {
            Some(prev) => consistent &= prev == &c,
            None => constant = Some(c),
        }
    }
    Calibration {
        constant: if consistent { constant } else { None },
        associative_triples: assoc,
        nonassociative_triples: nonassoc,
    }
}

/// Whether the associator of the spanning rows of `p` vanishes.
pub fn is_associative_plane(p: &Plane3) -> Result<bool, XminError> {
    let rows = p.rows_as_octonions()?;
    Ok(associator(&rows[0], &rows[1], &rows[2])?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: usize) -> Octonion {
        Octonion::e(k)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&e(0) * &e(5), e(5));
        assert_eq!(&e(1) * &e(1), -&e(0));
        assert_eq!(&e(4) * &e(4), e(0));
        assert_eq!(&e(1) * &e(2), e(3));
        let t = Octonion::basis_element(BasisTag::Tilde, 2);
        assert!(e(1).try_mul(&t).is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(e(0).norm(), GaussQ::one());
        assert_eq!(e(4).norm(), GaussQ::from_int(-1));
        assert_eq!(e(1).norm(), GaussQ::one());
        assert_eq!(e(5).inner(&e(6)).unwrap(), GaussQ::zero());
    }

    #[test]
    fn cross_and_dot_examples() {
        assert!(cross(&e(1), &e(1)).unwrap().is_zero());
        assert_eq!(cross(&e(1), &e(2)).unwrap(), e(3));
        assert_eq!(dot(&e(4), &e(4)).unwrap(), GaussQ::from_int(-1));
        assert_eq!(cross(&e(0), &e(1)), Err(XminError::NotImaginary));
    }

    #[test]
    fn associator_examples() {
        assert!(associator(&e(5), &e(5), &e(2)).unwrap().is_zero());
        assert!(associator(&e(1), &e(2), &e(3)).unwrap().is_zero());
        assert_eq!(associator(&e(1), &e(4), &e(6)).unwrap(), e(3).scale(&GaussQ::from_int(2)));
    }

    #[test]
    fn triple_cross_examples() {
        assert!(triple_cross(&e(3), &e(3), &e(6)).unwrap().is_zero());
        assert_eq!(triple_cross(&e(1), &e(2), &e(3)).unwrap(), e(0));
        assert_eq!(triple_cross(&e(1), &e(4), &e(6)).unwrap(), e(3));
    }

    #[test]
    fn form_examples() {
        assert_eq!(phi3(&e(1), &e(2), &e(3)).unwrap(), GaussQ::one());
        assert_eq!(phi3(&e(1), &e(4), &e(5)).unwrap(), GaussQ::from_int(-1));
        assert_eq!(phi3(&e(1), &e(1), &e(2)).unwrap(), GaussQ::zero());
        assert_eq!(star_phi4(&e(4), &e(5), &e(6), &e(7)).unwrap(), GaussQ::from_int(-1));
    }

    #[test]
    fn tilde_round_trip() {
        let x = Octonion::new(BasisTag::E, std::array::from_fn(|k| GaussQ::complex(k as i64, 3, 1, 2)));
        for tag in [BasisTag::MatrixPair, BasisTag::Tilde] {
            assert_eq!(x.to_basis(tag).to_basis(BasisTag::E), x);
        }
        let t2 = Octonion::basis_element(BasisTag::Tilde, 2).to_basis(BasisTag::E);
        let expected = &e(2).scale(&-GaussQ::i()) + &e(3);
        assert_eq!(t2, expected);
    }

    #[test]
    fn unit_is_trace_one_pair() {
        let u = Octonion::unit(BasisTag::MatrixPair);
        assert_eq!(u.coords()[0], GaussQ::one());
        assert_eq!(u.coords()[3], GaussQ::one());
        assert!(!u.is_imaginary());
    }

    #[test]
    fn calibration_is_one_half() {
        let c = calibration_constant();
        assert_eq!(c.constant, Some(GaussQ::ratio(1, 2)));
        assert_eq!(c.associative_triples + c.nonassociative_triples, 35);
    }
}

//! Λ³ℂ⁷: sorted triples, trivectors and their duals, Plücker coordinates of 3-planes,
//! the quadratic Plücker relations, and the affine charts of Gr(3,7).
//!
//! Coordinates of `u∧v∧w` are the 3×3 minors with columns in increasing index order.

mod chart;

pub use chart::{
    adjacent, chart_coords, chart_identity_audit, chart_param, parse_summand, AuditLine, ChartExpr, ChartParam,
    ChartPoint, IdentityTarget, PrintedIdentity,
};
pub use chart::relations_hold_on_chart;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::XminError;
use crate::octonion::{imag_change, BasisTag, Octonion};
use crate::scalars::{GaussQ, Matrix, Ring};

/// A sorted triple `1 ≤ i < j < k ≤ 7`, ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriIndex([u8; 3]);

fn all_triples() -> &'static [TriIndex; 35] {
    static ALL: OnceLock<[TriIndex; 35]> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v = Vec::with_capacity(35);
        for i in 1..=7u8 {
            for j in i + 1..=7 {
                for k in j + 1..=7 {
                    v.push(TriIndex([i, j, k]));
                }
            }
        }
        v.try_into().expect("35 triples")
    })
}

impl TriIndex {
    pub fn new(i: u8, j: u8, k: u8) -> Result<Self, XminError> {
        if 1 <= i && i < j && j < k && k <= 7 {
            Ok(TriIndex([i, j, k]))
        } else {
            Err(XminError::Parse(format!("invalid triple ({i},{j},{k})")))
        }
    }

    /// All 35 triples in lex order.
    pub fn all() -> &'static [TriIndex; 35] {
        all_triples()
    }

    pub fn from_rank(r: usize) -> TriIndex {
        all_triples()[r]
    }

    pub fn rank(&self) -> usize {
        all_triples().binary_search(self).expect("valid triple")
    }

    pub fn indices(&self) -> [u8; 3] {
        self.0
    }

    pub fn contains(&self, a: u8) -> bool {
        self.0.contains(&a)
    }

    pub fn overlap(&self, other: &TriIndex) -> usize {
        self.0.iter().filter(|a| other.contains(**a)).count()
    }

    /// Sorts three distinct indices, returning the permutation sign; `None` on a repeat.
    pub fn sorted_with_sign(mut idx: [u8; 3]) -> Option<(i8, TriIndex)> {
        let mut sign = 1i8;
        for a in 0..3 {
            for b in 0..2 - a {
                if idx[b] > idx[b + 1] {
                    idx.swap(b, b + 1);
                    sign = -sign;
                }
            }
        }
        if idx[0] == idx[1] || idx[1] == idx[2] {
            return None;
        }
        TriIndex::new(idx[0], idx[1], idx[2]).ok().map(|t| (sign, t))
    }
}

impl fmt::Display for TriIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for TriIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for TriIndex {
    type Err = XminError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let d: Vec<u8> = s.trim().bytes().map(|b| b.wrapping_sub(b'0')).collect();
        if d.len() != 3 {
            return Err(XminError::Parse(format!("invalid triple `{s}`")));
        }
        TriIndex::new(d[0], d[1], d[2])
    }
}

impl Serialize for TriIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn four_subsets() -> &'static [[u8; 4]; 35] {
    static ALL: OnceLock<[[u8; 4]; 35]> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v = Vec::with_capacity(35);
        for a in 1..=7u8 {
            for b in a + 1..=7 {
                for c in b + 1..=7 {
                    for d in c + 1..=7 {
                        v.push([a, b, c, d]);
                    }
                }
            }
        }
        v.try_into().expect("35 four-subsets")
    })
}

/// Matrix of 3×3 minors: entry `(I, J)` is the minor of `m` on rows `I` and columns `J`.
///
/// For `m` whose columns are images of basis vectors this is the induced map on Λ³.
pub fn exterior_cube<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    let all = TriIndex::all();
    let idx = |t: &TriIndex| t.0.map(|x| (x - 1) as usize);
    Matrix::from_fn(35, 35, |r, c| m.minor(&idx(&all[r]), &idx(&all[c])))
}

/// An element of Λ³ℂ⁷ in the E or Tilde basis.
#[derive(Clone, PartialEq, Eq)]
pub struct TriVector {
    basis: BasisTag,
    coords: Vec<GaussQ>,
}

impl TriVector {
    pub fn zero(basis: BasisTag) -> Self {
        TriVector { basis, coords: vec![GaussQ::zero(); 35] }
    }

    pub fn from_coords(basis: BasisTag, coords: Vec<GaussQ>) -> Result<Self, XminError> {
        if coords.len() != 35 {
            return Err(XminError::Dimension(format!("{} trivector coordinates", coords.len())));
        }
        Ok(TriVector { basis, coords })
    }

    pub fn basis_vector(basis: BasisTag, t: TriIndex) -> Self {
        let mut w = TriVector::zero(basis);
        w.coords[t.rank()] = GaussQ::one();
        w
    }

    pub fn from_terms(basis: BasisTag, terms: impl IntoIterator<Item = (TriIndex, GaussQ)>) -> Self {
        let mut w = TriVector::zero(basis);
        for (t, c) in terms {
            w.coords[t.rank()] += &c;
        }
        w
    }

    /// `u∧v∧w` for coordinate vectors in the given basis.
    pub fn wedge3(basis: BasisTag, u: &[GaussQ], v: &[GaussQ], w: &[GaussQ]) -> Result<Self, XminError> {
        if u.len() != 7 || v.len() != 7 || w.len() != 7 {
            return Err(XminError::Dimension("wedge3 needs 7-vectors".into()));
        }
        let m = Matrix::from_rows(vec![u.to_vec(), v.to_vec(), w.to_vec()])?;
        Ok(plucker_of_rows(basis, &m))
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn coords(&self) -> &[GaussQ] {
        &self.coords
    }

    pub fn get(&self, t: TriIndex) -> &GaussQ {
        &self.coords[t.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussQ::is_zero)
    }

    pub fn support(&self) -> Vec<TriIndex> {
        TriIndex::all().iter().copied().filter(|t| !self.get(*t).is_zero()).collect()
    }

    pub fn scale(&self, k: &GaussQ) -> TriVector {
        TriVector { basis: self.basis, coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn try_add(&self, o: &TriVector) -> Result<TriVector, XminError> {
        if self.basis != o.basis {
            return Err(XminError::BasisMismatch(self.basis, o.basis));
        }
        Ok(TriVector { basis: self.basis, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() })
    }

    /// Whether `o = c·self` for some nonzero `c`.
    pub fn is_proportional(&self, o: &TriVector) -> bool {
        if self.basis != o.basis || self.is_zero() || o.is_zero() {
            return false;
        }
        let k = self.coords.iter().position(|c| !c.is_zero()).expect("nonzero");
        if o.coords[k].is_zero() {
            return false;
        }
        let c = &o.coords[k] / &self.coords[k];
        self.scale(&c) == *o
    }

    pub fn to_basis(&self, tag: BasisTag) -> Result<TriVector, XminError> {
        if tag == self.basis {
            return Ok(self.clone());
        }
        let l = exterior_cube(&imag_change(self.basis, tag)?);
        TriVector::from_coords(tag, l.mul_vec(&self.coords)?)
    }

    /// `w(e^a, e^b, e^c)`: the coordinate on the sorted triple, with the permutation sign.
    pub fn eval(&self, idx: [u8; 3]) -> GaussQ {
        match TriIndex::sorted_with_sign(idx) {
            Some((1, t)) => self.get(t).clone(),
            Some((_, t)) => -self.get(t),
            None => GaussQ::zero(),
        }
    }

    /// The 35 coordinates of `v∧self` in Λ⁴, indexed by sorted 4-subsets.
    pub fn wedge_vector(&self, v: &[GaussQ]) -> Vec<GaussQ> {
        let mut out = vec![GaussQ::zero(); 35];
        for (q, four) in four_subsets().iter().enumerate() {
            let mut acc = GaussQ::zero();
            for (pos, &a) in four.iter().enumerate() {
                let rest: Vec<u8> = four.iter().copied().filter(|&x| x != a).collect();
                let t = TriIndex([rest[0], rest[1], rest[2]]);
                let c = self.get(t);
                if c.is_zero() || v[(a - 1) as usize].is_zero() {
                    continue;
                }
                let term = &v[(a - 1) as usize] * c;
                if pos % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            out[q] = acc;
        }
        out
    }
}

impl fmt::Display for TriVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.basis == BasisTag::Tilde { "~e" } else { "e" };
        let parts: Vec<String> = TriIndex::all()
            .iter()
            .filter(|t| !self.get(**t).is_zero())
            .map(|t| {
                let c = self.get(*t);
                if c.is_one() {
                    format!("{prefix}{t}")
                } else {
                    format!("({c}){prefix}{t}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for TriVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriVector[{}]({})", self.basis, self)
    }
}

impl Serialize for TriVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: std::collections::BTreeMap<String, &GaussQ> =
            TriIndex::all().iter().filter(|t| !self.get(**t).is_zero()).map(|t| (t.to_string(), self.get(*t))).collect();
        terms.serialize(s)
    }
}

/// A linear form on Λ³ℂ⁷ given by its values on basis trivectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Covector3 {
    basis: BasisTag,
    coords: Vec<GaussQ>,
}

impl Covector3 {
    pub fn from_coords(basis: BasisTag, coords: Vec<GaussQ>) -> Result<Self, XminError> {
        if coords.len() != 35 {
            return Err(XminError::Dimension(format!("{} covector coordinates", coords.len())));
        }
        Ok(Covector3 { basis, coords })
    }

    pub fn from_terms(basis: BasisTag, terms: impl IntoIterator<Item = (TriIndex, GaussQ)>) -> Self {
        let mut coords = vec![GaussQ::zero(); 35];
        for (t, c) in terms {
            coords[t.rank()] += &c;
        }
        Covector3 { basis, coords }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn coords(&self) -> &[GaussQ] {
        &self.coords
    }

    pub fn get(&self, t: TriIndex) -> &GaussQ {
        &self.coords[t.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussQ::is_zero)
    }

    pub fn scale(&self, k: &GaussQ) -> Covector3 {
        Covector3 { basis: self.basis, coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn pair(&self, w: &TriVector) -> Result<GaussQ, XminError> {
        if self.basis != w.basis {
            return Err(XminError::BasisMismatch(self.basis, w.basis));
        }
        Ok(self.coords.iter().zip(&w.coords).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
    }

    /// Same linear form in coordinates dual to `tag`.
    pub fn to_basis(&self, tag: BasisTag) -> Result<Covector3, XminError> {
        if tag == self.basis {
            return Ok(self.clone());
        }
        let l = exterior_cube(&imag_change(tag, self.basis)?);
        Covector3::from_coords(tag, l.transpose().mul_vec(&self.coords)?)
    }

    /// If `other = c·self`, returns `c`.
    pub fn ratio_to(&self, other: &Covector3) -> Option<GaussQ> {
        if self.basis != other.basis || self.is_zero() {
            return None;
        }
        let k = self.coords.iter().position(|c| !c.is_zero())?;
        let c = &other.coords[k] / &self.coords[k];
        (self.scale(&c) == *other).then_some(c)
    }
}

impl fmt::Display for Covector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.basis == BasisTag::Tilde { "~p" } else { "p" };
        let mut first = true;
        for t in TriIndex::all() {
            let c = self.get(*t);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_real();
            let mag = if neg { -c } else { c.clone() };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if mag.is_one() {
                write!(f, "{sep}{prefix}{t}")?;
            } else if mag.is_real() {
                write!(f, "{sep}{mag}{prefix}{t}")?;
            } else {
                write!(f, "{sep}({mag}){prefix}{t}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Covector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Covector3[{}]({})", self.basis, self)
    }
}

impl Serialize for Covector3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: std::collections::BTreeMap<String, &GaussQ> =
            TriIndex::all().iter().filter(|t| !self.get(**t).is_zero()).map(|t| (t.to_string(), self.get(*t))).collect();
        terms.serialize(s)
    }
}

/// Stacks covectors as the rows of a k×35 matrix.
pub fn covector_matrix(covs: &[Covector3]) -> Matrix<GaussQ> {
    Matrix::from_fn(covs.len(), 35, |r, c| covs[r].coords[c].clone())
}

/// A 3-dimensional subspace of ℂ⁷ spanned by the rows of a rank-3 matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Plane3 {
    basis: BasisTag,
    rows: Matrix<GaussQ>,
}

impl Plane3 {
    pub fn new(basis: BasisTag, rows: Matrix<GaussQ>) -> Result<Self, XminError> {
        if rows.rows() != 3 || rows.cols() != 7 {
            return Err(XminError::Dimension(format!("plane needs 3x7, got {}x{}", rows.rows(), rows.cols())));
        }
        let r = rows.rank();
        if r < 3 {
            return Err(XminError::RankDeficient(r));
        }
        Ok(Plane3 { basis, rows })
    }

    /// Span of three basis vectors, 1-based.
    pub fn coordinate(basis: BasisTag, t: TriIndex) -> Plane3 {
        let rows = Matrix::from_fn(3, 7, |r, c| if c + 1 == t.0[r] as usize { GaussQ::one() } else { GaussQ::zero() });
        Plane3 { basis, rows }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn rows(&self) -> &Matrix<GaussQ> {
        &self.rows
    }

    pub fn rows_as_octonions(&self) -> Result<Vec<Octonion>, XminError> {
        (0..3)
            .map(|r| Octonion::imaginary(self.basis, self.rows.row(r).to_vec().try_into().expect("7 entries")))
            .collect()
    }

    pub fn to_basis(&self, tag: BasisTag) -> Result<Plane3, XminError> {
        let m = imag_change(self.basis, tag)?;
        Plane3::new(tag, self.rows.matmul(&m.transpose())?)
    }
}

fn plucker_of_rows(basis: BasisTag, m: &Matrix<GaussQ>) -> TriVector {
    let coords = TriIndex::all().iter().map(|t| m.minor(&[0, 1, 2], &t.0.map(|x| (x - 1) as usize))).collect();
    TriVector { basis, coords }
}

/// The Plücker point of a plane: its 3×3 minors.
pub fn plucker(p: &Plane3) -> TriVector {
    plucker_of_rows(p.basis, &p.rows)
}

/// The 35×7 matrix of `v ↦ v∧w`.
pub fn wedge_matrix(w: &TriVector) -> Matrix<GaussQ> {
    let cols: Vec<Vec<GaussQ>> = (0..7)
        .map(|a| {
            let mut v = vec![GaussQ::zero(); 7];
            v[a] = GaussQ::one();
            w.wedge_vector(&v)
        })
        .collect();
    Matrix::from_fn(35, 7, |r, c| cols[c][r].clone())
}

/// Kernel-dimension decomposability test; returns the plane `{v : v∧w = 0}` when it is 3-dimensional.
///
/// The kernel of `v ↦ v∧w` has dimension at most 3 for `w ≠ 0`. With `p_I ≠ 0`, `I = ijk`, the
/// contractions `ι(e^j∧e^k)w`, `ι(e^i∧e^k)w`, `ι(e^i∧e^j)w` are independent, and they span the
/// kernel whenever it is 3-dimensional; so the kernel is 3-dimensional iff all three lie in it.
pub fn is_decomposable(w: &TriVector) -> Result<(bool, Option<Plane3>), XminError> {
    let Some(pivot) = TriIndex::all().iter().find(|t| !w.get(**t).is_zero()) else {
        return Err(XminError::ZeroTrivector);
    };
    let [i, j, k] = pivot.indices();
    let rows: Vec<Vec<GaussQ>> = [(j, k), (i, k), (i, j)]
        .iter()
        .map(|&(a, b)| (1..=7).map(|m| w.eval([a, b, m])).collect())
        .collect();
    if rows.iter().any(|v| w.wedge_vector(v).iter().any(|c| !c.is_zero())) {
        return Ok((false, None));
    }
    let plane = Plane3::new(w.basis, Matrix::from_rows(rows)?)?;
    Ok((true, Some(plane)))
}

/// Decomposability read off the full kernel of the wedge map; slower reference for [`is_decomposable`].
pub fn kernel_dimension(w: &TriVector) -> usize {
    wedge_matrix(w).kernel().len()
}

/// One instance `Σ_s (−1)^s p_{i₁i₂j_s} p_{J∖j_s} = 0` of the straightening relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerRelation {
    pub i: [u8; 2],
    pub j: [u8; 4],
    pub terms: Vec<(i8, TriIndex, TriIndex)>,
}

impl PluckerRelation {
    pub fn eval<T: Ring>(&self, coords: &[T]) -> T {
        let mut acc = coords[0].zero_like();
        for (s, a, b) in &self.terms {
            let t = coords[a.rank()].mul_ref(&coords[b.rank()]);
            for _ in 0..s.unsigned_abs() {
                acc = if *s > 0 { acc.add_ref(&t) } else { acc.sub_ref(&t) };
            }
        }
        acc
    }
}

/// All nonvanishing instances of the relations for d = 3, n = 7.
pub fn plucker_relations() -> &'static [PluckerRelation] {
    static RELS: OnceLock<Vec<PluckerRelation>> = OnceLock::new();
    RELS.get_or_init(|| {
        let mut out = Vec::new();
        for i1 in 1..=7u8 {
            for i2 in i1 + 1..=7 {
                for j in four_subsets() {
                    let mut acc: std::collections::BTreeMap<(TriIndex, TriIndex), i32> = Default::default();
                    for s in 0..4 {
                        let Some((sg, a)) = TriIndex::sorted_with_sign([i1, i2, j[s]]) else {
                            continue;
                        };
                        let rest: Vec<u8> = (0..4).filter(|&k| k != s).map(|k| j[k]).collect();
                        let b = TriIndex([rest[0], rest[1], rest[2]]);
                        let sign = sg as i32 * if s % 2 == 0 { 1 } else { -1 };
                        let key = if a <= b { (a, b) } else { (b, a) };
                        *acc.entry(key).or_default() += sign;
                    }
                    let terms: Vec<(i8, TriIndex, TriIndex)> =
                        acc.into_iter().filter(|(_, c)| *c != 0).map(|((a, b), c)| (c as i8, a, b)).collect();
                    if !terms.is_empty() {
                        out.push(PluckerRelation { i: [i1, i2], j: *j, terms });
                    }
                }
            }
        }
        out
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: usize,
    pub i: [u8; 2],
    pub j: [u8; 4],
    pub value: GaussQ,
}

/// Relations that do not vanish on `w`.
pub fn plucker_relation_check(w: &TriVector) -> Vec<Violation> {
    plucker_relations()
        .iter()
        .enumerate()
        .filter_map(|(n, rel)| {
            let v = rel.eval(&w.coords);
            (!v.is_zero()).then_some(Violation { relation: n, i: rel.i, j: rel.j, value: v })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriIndex {
        s.parse().unwrap()
    }

    fn e_vec(k: usize) -> Vec<GaussQ> {
        let mut v = vec![GaussQ::zero(); 7];
        v[k - 1] = GaussQ::one();
        v
    }

    #[test]
    fn triple_ranks() {
        assert_eq!(t("123").rank(), 0);
        assert_eq!(t("567").rank(), 34);
        assert_eq!(TriIndex::from_rank(t("246").rank()), t("246"));
        assert!("124".parse::<TriIndex>().is_ok());
        assert!("132".parse::<TriIndex>().is_err());
    }

    #[test]
    fn plucker_examples() {
        let p = Plane3::coordinate(BasisTag::E, t("123"));
        assert_eq!(plucker(&p), TriVector::basis_vector(BasisTag::E, t("123")));
        let swapped = Matrix::from_rows(vec![e_vec(2), e_vec(1), e_vec(3)]).unwrap();
        let p2 = Plane3::new(BasisTag::E, swapped).unwrap();
        assert_eq!(plucker(&p2), TriVector::basis_vector(BasisTag::E, t("123")).scale(&GaussQ::from_int(-1)));
        assert_eq!(plucker(&Plane3::coordinate(BasisTag::E, t("167"))), TriVector::basis_vector(BasisTag::E, t("167")));
        let bad = Matrix::from_rows(vec![e_vec(1), e_vec(1), e_vec(3)]).unwrap();
        assert_eq!(Plane3::new(BasisTag::E, bad), Err(XminError::RankDeficient(2)));
    }

    #[test]
    fn relation_count() {
        assert_eq!(plucker_relations().len(), 525);
    }

    #[test]
    fn decomposability_examples() {
        let w = TriVector::basis_vector(BasisTag::Tilde, t("246"));
        let (ok, plane) = is_decomposable(&w).unwrap();
        assert!(ok);
        assert!(w.is_proportional(&plucker(&plane.unwrap())));

        // (e1∧e2 + e3∧e4)∧e5 = e125 + e345
        let w = TriVector::from_terms(BasisTag::E, [(t("125"), GaussQ::one()), (t("345"), GaussQ::one())]);
        assert!(!is_decomposable(&w).unwrap().0);
        assert_eq!(wedge_matrix(&w).kernel().len(), 1);
        assert!(!plucker_relation_check(&w).is_empty());

        let w = TriVector::from_terms(BasisTag::E, [(t("123"), GaussQ::one()), (t("456"), GaussQ::one())]);
        assert_eq!(wedge_matrix(&w).kernel().len(), 0);
        assert!(!plucker_relation_check(&w).is_empty());

        assert_eq!(is_decomposable(&TriVector::zero(BasisTag::E)).unwrap_err(), XminError::ZeroTrivector);
    }

    #[test]
    fn basis_change_round_trip() {
        let w = TriVector::from_terms(BasisTag::E, [(t("123"), GaussQ::i()), (t("357"), GaussQ::ratio(2, 3))]);
        let back = w.to_basis(BasisTag::Tilde).unwrap().to_basis(BasisTag::E).unwrap();
        assert_eq!(back, w);
        let f = Covector3::from_terms(BasisTag::E, [(t("247"), GaussQ::one()), (t("356"), GaussQ::from_int(-1))]);
        let ft = f.to_basis(BasisTag::Tilde).unwrap();
        assert_eq!(ft.pair(&w.to_basis(BasisTag::Tilde).unwrap()).unwrap(), f.pair(&w).unwrap());
    }
}

//! The maximal torus `t_{λ,μ}`: its matrix on 𝕀, the characters of the tilde
//! eigenbasis, torus-fixed points of X_min, Białynicki-Birula cells and the
//! resulting Poincaré polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::XminError;
use crate::grassmann::{plucker_relation_check, plucker_relations, Covector3, TriIndex, TriVector};
use crate::octonion::{basis_matrix, e_in_tilde, tilde_in_e, BasisTag};
use crate::scalars::{lift, vars, GaussQ, MPoly, Matrix, Vars};
use crate::xmin;

/// The character `λ^a μ^b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Character(pub i32, pub i32);

impl Character {
    pub fn pair(&self, g: OneParamSubgroup) -> i64 {
        self.0 as i64 * g.c as i64 + self.1 as i64 * g.d as i64
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.0, self.1].serialize(s)
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, o: Character) -> Character {
        Character(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for Character {
    type Output = Character;
    fn sub(self, o: Character) -> Character {
        Character(self.0 - o.0, self.1 - o.1)
    }
}

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character(-self.0, -self.1)
    }
}

/// `γ(s) = t_{s^c, s^d}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OneParamSubgroup {
    pub c: i32,
    pub d: i32,
}

impl OneParamSubgroup {
    pub fn new(c: i32, d: i32) -> Self {
        OneParamSubgroup { c, d }
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.d)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct FixedPoint {
    pub index: TriIndex,
    pub character: Character,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BBCell {
    pub point: FixedPoint,
    pub weights: Vec<i64>,
    pub plus_dim: usize,
    pub minus_dim: usize,
}

pub fn torus_vars() -> Vars {
    vars(&["λ", "μ"])
}

fn mono(v: &Vars, a: i32, b: i32) -> MPoly {
    MPoly::monomial(v, vec![a, b], GaussQ::one(), true).expect("two exponents")
}

/// `t_{λ,μ}(x, y) = (c_λ x c_λ⁻¹, c_μ y c_λ⁻¹)` with `c_ν = diag(ν, ν⁻¹)`, on the matrix-pair basis.
pub fn torus_matrix_pair() -> Matrix<MPoly> {
    let v = torus_vars();
    // exponent of λ (resp. μ) contributed by the row factor c_ν and the column factor c_λ⁻¹
    let sign = |k: usize| if k == 0 { 1 } else { -1 };
    let mut m = Matrix::from_fn(8, 8, |_, _| MPoly::zero(&v, true));
    for slot in 0..2 {
        for r in 0..2 {
            for c in 0..2 {
                let (lam, mu) = if slot == 0 { (sign(r) - sign(c), 0) } else { (-sign(c), sign(r)) };
                let k = 4 * slot + 2 * r + c;
                m.set(k, k, mono(&v, lam, mu));
            }
        }
    }
    m
}

/// The torus on 𝕀 in the E basis; column `j` is `t(e_j)`.
pub fn torus_matrix_e() -> Matrix<MPoly> {
    let v = torus_vars();
    let p = basis_matrix(BasisTag::E);
    let p_inv = p.inverse().expect("E basis invertible");
    let full = lift(&p_inv, &v, true)
        .matmul(&torus_matrix_pair())
        .and_then(|m| m.matmul(&lift(p, &v, true)))
        .expect("8x8 products");
    let idx: Vec<usize> = (1..8).collect();
    full.select(&idx, &idx)
}

/// `(tilde change)⁻¹ · torus_matrix_e · (tilde change)`.
pub fn torus_matrix_tilde() -> Matrix<MPoly> {
    let v = torus_vars();
    lift(e_in_tilde(), &v, true)
        .matmul(&torus_matrix_e())
        .and_then(|m| m.matmul(&lift(tilde_in_e(), &v, true)))
        .expect("7x7 products")
}

/// Characters of ẽ₁..ẽ₇, read off the diagonal of [`torus_matrix_tilde`].
pub fn tilde_characters() -> Result<[Character; 7], XminError> {
    static CHARS: OnceLock<Result<[Character; 7], XminError>> = OnceLock::new();
    CHARS
        .get_or_init(|| {
            let t = torus_matrix_tilde();
            let mut out = [Character::default(); 7];
            for (r, slot) in out.iter_mut().enumerate() {
                for c in 0..7 {
                    let e = t.get(r, c);
                    if r != c && !e.is_zero() {
                        return Err(XminError::Precondition(format!("tilde basis does not diagonalize the torus at ({r},{c})")));
                    }
                }
                let d = t.get(r, r);
                let (exps, coeff) = d
                    .terms()
                    .next()
                    .filter(|_| d.len() == 1)
                    .ok_or_else(|| XminError::Precondition(format!("diagonal entry {d} is not a monomial")))?;
                if !coeff.is_one() {
                    return Err(XminError::Precondition(format!("diagonal entry {d} is not a character")));
                }
                *slot = Character(exps[0], exps[1]);
            }
            Ok(out)
        })
        .clone()
}

pub fn weight_of(t: TriIndex) -> Character {
    let ch = tilde_characters().expect("torus diagonalizes in the tilde basis");
    t.indices().iter().fold(Character::default(), |a, &k| a + ch[(k - 1) as usize])
}

/// All 35 tilde triples grouped by character.
pub fn weight_table() -> BTreeMap<Character, Vec<TriIndex>> {
    let mut out: BTreeMap<Character, Vec<TriIndex>> = BTreeMap::new();
    for t in TriIndex::all() {
        out.entry(weight_of(*t)).or_default().push(*t);
    }
    out
}

fn require_distinct_characters() -> Result<(), XminError> {
    let ch = tilde_characters()?;
    let mut seen = ch.to_vec();
    seen.sort();
    seen.dedup();
    if seen.len() != 7 {
        return Err(XminError::Precondition("coordinate characters of the tilde basis are not distinct".into()));
    }
    Ok(())
}

/// Tilde coordinate planes annihilated by every covector.
pub fn torus_fixed_points_with(covectors: &[Covector3]) -> Result<Vec<FixedPoint>, XminError> {
    require_distinct_characters()?;
    if covectors.iter().any(|c| c.basis() != BasisTag::Tilde) {
        return Err(XminError::Precondition("fixed points are enumerated in tilde coordinates".into()));
    }
    Ok(TriIndex::all()
        .iter()
        .filter(|t| covectors.iter().all(|c| c.get(**t).is_zero()))
        .map(|t| FixedPoint { index: *t, character: weight_of(*t) })
        .collect())
}

pub fn torus_fixed_points() -> Result<Vec<FixedPoint>, XminError> {
    torus_fixed_points_with(&xmin::model().covectors_tilde)
}

/// Outcome of searching an eigenspace of Λ³ for non-coordinate points of X_min.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DeepCheck {
    /// Only coordinate points survive; these are listed.
    Confirmed { survivors: Vec<TriIndex> },
    /// Support patterns the procedure could not eliminate.
    Undecided { survivors: Vec<TriIndex>, open_patterns: Vec<Vec<TriIndex>> },
    /// A point of X_min in the eigenspace that is not a coordinate point.
    Counterexample { point: TriVector },
}

enum Pattern {
    Eliminated,
    Coordinate(TriIndex),
    Open,
    Point(TriVector),
}

/// Bounded search for points of X_min in `ℙ(eigenspace of ch)` other than coordinate points.
///
/// Each support pattern of the eigenspace coefficients is eliminated when the linear forms
/// force a coordinate of the support to vanish, when a Plücker quadric restricted to the
/// support is a single monomial, or when the linear forms leave a unique point that fails
/// the Plücker relations.
pub fn eigenspace_deep_check(ch: Character, covectors: &[Covector3]) -> Result<DeepCheck, XminError> {
    let table = weight_table();
    let triples = table.get(&ch).cloned().unwrap_or_default();
    if triples.len() < 2 {
        return Err(XminError::Precondition(format!("character {ch} has multiplicity {}", triples.len())));
    }
    if covectors.iter().any(|c| c.basis() != BasisTag::Tilde) {
        return Err(XminError::Precondition("eigenspaces are parametrized in tilde coordinates".into()));
    }
    let m = triples.len();
    let lin = Matrix::from_fn(covectors.len(), m, |r, k| covectors[r].get(triples[k]).clone());
    let slot: BTreeMap<TriIndex, usize> = triples.iter().enumerate().map(|(k, t)| (*t, k)).collect();
    // quadrics in the eigenspace coefficients, keyed by sorted coefficient pairs
    let quadrics: Vec<BTreeMap<(usize, usize), i32>> = plucker_relations()
        .iter()
        .filter_map(|rel| {
            let mut q: BTreeMap<(usize, usize), i32> = BTreeMap::new();
            for (s, a, b) in &rel.terms {
                if let (Some(&x), Some(&y)) = (slot.get(a), slot.get(b)) {
                    *q.entry((x.min(y), x.max(y))).or_default() += *s as i32;
                }
            }
            q.retain(|_, c| *c != 0);
            (!q.is_empty()).then_some(q)
        })
        .collect();

    let mut survivors = Vec::new();
    let mut open = Vec::new();
    for mask in 1u32..(1 << m) {
        let support: Vec<usize> = (0..m).filter(|k| mask >> k & 1 == 1).collect();
        let pattern = classify(&support, &lin, &quadrics, &triples)?;
        match pattern {
            Pattern::Eliminated => {}
            Pattern::Coordinate(t) => survivors.push(t),
            Pattern::Open => open.push(support.iter().map(|&k| triples[k]).collect()),
            Pattern::Point(point) => return Ok(DeepCheck::Counterexample { point }),
        }
    }
    survivors.sort();
    Ok(if open.is_empty() {
        DeepCheck::Confirmed { survivors }
    } else {
        DeepCheck::Undecided { survivors, open_patterns: open }
    })
}

fn classify(
    support: &[usize],
    lin: &Matrix<GaussQ>,
    quadrics: &[BTreeMap<(usize, usize), i32>],
    triples: &[TriIndex],
) -> Result<Pattern, XminError> {
    let all_rows: Vec<usize> = (0..lin.rows()).collect();
    let ker = lin.select(&all_rows, support).kernel();
    if ker.is_empty() {
        return Ok(Pattern::Eliminated);
    }
    let forced_zero = (0..support.len()).any(|k| ker.iter().all(|v| v[k].is_zero()));
    if forced_zero {
        return Ok(Pattern::Eliminated);
    }
    if support.len() == 1 {
        return Ok(Pattern::Coordinate(triples[support[0]]));
    }
    let single_monomial = quadrics.iter().any(|q| {
        let inside: Vec<_> = q.keys().filter(|(a, b)| support.contains(a) && support.contains(b)).collect();
        inside.len() == 1
    });
    if single_monomial {
        return Ok(Pattern::Eliminated);
    }
    if ker.len() == 1 {
        let w = TriVector::from_terms(
            BasisTag::Tilde,
            support.iter().zip(&ker[0]).map(|(&k, c)| (triples[k], c.clone())),
        );
        return Ok(if plucker_relation_check(&w).is_empty() { Pattern::Point(w) } else { Pattern::Eliminated });
    }
    Ok(Pattern::Open)
}

/// Distinct tangent characters at the fixed points that pair to zero with `g`, largest first.
pub fn vanishing_characters(g: OneParamSubgroup) -> Vec<Character> {
    let mut out: Vec<Character> = xmin::tangent_frames()
        .iter()
        .flat_map(|f| f.vectors.iter().map(|v| v.character))
        .filter(|ch| ch.pair(g) == 0)
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

pub fn regularity(g: OneParamSubgroup) -> Result<(), XminError> {
    let bad = vanishing_characters(g);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(XminError::Irregular { c: g.c, d: g.d, characters: bad })
    }
}

pub fn is_regular(g: OneParamSubgroup) -> bool {
    regularity(g).is_ok()
}

pub fn bb_decomposition(g: OneParamSubgroup) -> Result<Vec<BBCell>, XminError> {
    regularity(g)?;
    Ok(xmin::tangent_frames()
        .iter()
        .map(|f| {
            let weights: Vec<i64> = f.vectors.iter().map(|v| v.character.pair(g)).collect();
            let plus_dim = weights.iter().filter(|w| **w > 0).count();
            let minus_dim = weights.iter().filter(|w| **w < 0).count();
            BBCell { point: f.point, weights, plus_dim, minus_dim }
        })
        .collect())
}

/// Coefficient of `t^d` is the number of plus cells of dimension `d`.
pub fn poincare(g: OneParamSubgroup) -> Result<Vec<i64>, XminError> {
    let cells = bb_decomposition(g)?;
    let dim = cells.iter().map(|c| c.plus_dim + c.minus_dim).max().unwrap_or(0);
    let mut out = vec![0i64; dim + 1];
    for c in &cells {
        out[c.plus_dim] += 1;
    }
    Ok(out)
}

/// Poincaré coefficients of the wonderful compactification of G₂/SO₄.
pub const WONDERFUL: [i64; 9] = [1, 2, 4, 4, 5, 4, 4, 2, 1];

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WonderfulComparison {
    pub wonderful: Vec<i64>,
    pub xmin: Vec<i64>,
    pub difference: Vec<i64>,
    pub dominated: bool,
}

pub fn wonderful_compare() -> Result<WonderfulComparison, XminError> {
    let xmin = poincare(OneParamSubgroup::new(10, 1))?;
    let difference: Vec<i64> =
        WONDERFUL.iter().enumerate().map(|(k, w)| w - xmin.get(k).copied().unwrap_or(0)).collect();
    let dominated = difference.iter().all(|d| *d >= 0);
    Ok(WonderfulComparison { wonderful: WONDERFUL.to_vec(), xmin, difference, dominated })
}

/// The restricted Dynkin diagram `{2α₁, 2α₂}` and the support `I = {2α₁}`.
pub const DIAGRAM_NODES: [&str; 2] = ["2a1", "2a2"];
const DIAGRAM_EDGES: [(usize, usize); 1] = [(0, 1)];
const SUPPORT: u32 = 0b01;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitCount {
    /// `(J, Δ_I(J))` for every subset `J` of the diagram.
    pub delta: Vec<(Vec<String>, Vec<String>)>,
    pub count: usize,
}

fn names(mask: u32) -> Vec<String> {
    DIAGRAM_NODES.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, n)| n.to_string()).collect()
}

/// Union of the connected components of the diagram minus `j` that meet the support.
fn delta_i(j: u32) -> u32 {
    let n = DIAGRAM_NODES.len();
    let alive = !j & ((1 << n) - 1);
    let mut reached = SUPPORT & alive;
    loop {
        let mut next = reached;
        for &(a, b) in &DIAGRAM_EDGES {
            if alive >> a & 1 == 1 && alive >> b & 1 == 1 && (reached >> a & 1 == 1 || reached >> b & 1 == 1) {
                next |= (1 << a) | (1 << b);
            }
        }
        if next == reached {
            return reached;
        }
        reached = next;
    }
}

/// Orbits of the compactification correspond to distinct values of `Δ_I`.
pub fn special_orbit_count() -> OrbitCount {
    let n = DIAGRAM_NODES.len();
    let values: Vec<(u32, u32)> = (0u32..1 << n).map(|j| (j, delta_i(j))).collect();
    let mut distinct: Vec<u32> = values.iter().map(|v| v.1).collect();
    distinct.sort();
    distinct.dedup();
    OrbitCount { delta: values.iter().map(|(j, d)| (names(*j), names(*d))).collect(), count: distinct.len() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriIndex {
        s.parse().unwrap()
    }

    #[test]
    fn tilde_characters_match_eigenvalues() {
        let ch = tilde_characters().unwrap();
        let expected =
            [Character(0, 0), Character(-2, 0), Character(2, 0), Character(1, -1), Character(-1, 1), Character(-1, -1), Character(1, 1)];
        assert_eq!(ch, expected);
    }

    #[test]
    fn action_columns() {
        let m = torus_matrix_e();
        let v = torus_vars();
        assert_eq!(m.get(0, 0), &MPoly::constant(&v, GaussQ::one(), true));
        let half = GaussQ::ratio(1, 2);
        let l2 = mono(&v, 2, 0);
        let lm2 = mono(&v, -2, 0);
        assert_eq!(m.get(1, 1), &(&l2 + &lm2).scale(&half));
        assert_eq!(m.get(2, 1), &(&lm2 - &l2).scale(&(&GaussQ::i() * &half)));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_of(t("123")), Character(0, 0));
        assert_eq!(weight_of(t("126")), Character(-3, -1));
        assert_eq!(weight_of(t("357")), Character(2, 2));
        let table = weight_table();
        assert_eq!(table.len(), 19);
        assert_eq!(table[&Character(0, 0)].len(), 5);
    }

    #[test]
    fn orbit_count() {
        let o = special_orbit_count();
        assert_eq!(o.count, 3);
        assert_eq!(o.delta[0], (vec![], vec!["2a1".to_string(), "2a2".to_string()]));
        assert_eq!(o.delta[1], (vec!["2a1".to_string()], vec![]));
        assert_eq!(o.delta[2], (vec!["2a2".to_string()], vec!["2a1".to_string()]));
        assert_eq!(o.delta[3].1, Vec::<String>::new());
    }
}

//! X_min as the section of Gr(3, 𝕀) by the seven hyperplanes coming from χ:
//! membership, chart equations, Jacobians and tangent frames at the fixed points.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::XminError;
use crate::fixtures;
use crate::grassmann::{adjacent, chart_param, covector_matrix, is_decomposable, Covector3, TriIndex, TriVector};
use crate::octonion::{form_expansion, BasisTag, FormKind};
use crate::scalars::{GaussQ, MPoly, Matrix};
use crate::torus::{torus_fixed_points, weight_of, Character, FixedPoint};

#[derive(Clone, Debug)]
pub struct XminModel {
    /// Components of χ as covectors in E-basis Plücker coordinates.
    pub covectors_e: Vec<Covector3>,
    /// The same covectors in tilde coordinates.
    pub covectors_tilde: Vec<Covector3>,
    /// Printed hyperplanes in the E basis.
    pub printed_e: Vec<Covector3>,
    /// Printed hyperplanes in the tilde basis.
    pub printed_tilde: Vec<Covector3>,
}

pub fn build_model() -> Result<XminModel, XminError> {
    let covectors_e: Vec<Covector3> = form_expansion(FormKind::ChiComponents)
        .iter()
        .map(|f| {
            let terms = f
                .terms
                .iter()
                .map(|(idx, c)| Ok((TriIndex::new(idx[0], idx[1], idx[2])?, c.clone())))
                .collect::<Result<Vec<_>, XminError>>()?;
            Ok(Covector3::from_terms(BasisTag::E, terms))
        })
        .collect::<Result<_, XminError>>()?;
    let covectors_tilde = covectors_e.iter().map(|c| c.to_basis(BasisTag::Tilde)).collect::<Result<_, _>>()?;
    Ok(XminModel {
        covectors_e,
        covectors_tilde,
        printed_e: fixtures::linear_equations()?,
        printed_tilde: fixtures::tilde_equations()?,
    })
}

/// Shared instance of [`build_model`].
pub fn model() -> &'static XminModel {
    static MODEL: OnceLock<XminModel> = OnceLock::new();
    MODEL.get_or_init(|| build_model().expect("built-in fixtures are well formed"))
}

impl XminModel {
    pub fn covectors(&self, basis: BasisTag) -> Result<&[Covector3], XminError> {
        match basis {
            BasisTag::E => Ok(&self.covectors_e),
            BasisTag::Tilde => Ok(&self.covectors_tilde),
            BasisTag::MatrixPair => Err(XminError::Precondition("Plücker coordinates need the E or tilde basis".into())),
        }
    }
}

/// How a printed hyperplane relates to the derived one with the same index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormMatch {
    pub index: usize,
    pub derived: String,
    pub printed: String,
    /// `printed = ratio · derived`, when the two are proportional.
    pub ratio: Option<GaussQ>,
    /// Whether the printed form lies in the span of all derived forms.
    pub in_span: bool,
}

pub fn compare_forms(derived: &[Covector3], printed: &[Covector3]) -> Result<Vec<FormMatch>, XminError> {
    let span = covector_matrix(derived);
    derived
        .iter()
        .zip(printed)
        .enumerate()
        .map(|(k, (d, p))| {
            Ok(FormMatch {
                index: k + 1,
                derived: d.to_string(),
                printed: p.to_string(),
                ratio: d.ratio_to(p),
                in_span: span.row_space_contains(&covector_matrix(std::slice::from_ref(p)))?,
            })
        })
        .collect()
}

/// Decomposable and annihilated by the seven covectors.
pub fn xmin_member(w: &TriVector) -> Result<bool, XminError> {
    if w.is_zero() {
        return Err(XminError::ZeroTrivector);
    }
    for c in model().covectors(w.basis())? {
        if !c.pair(w)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(is_decomposable(w)?.0)
}

/// The seven covectors restricted to the chart `U_I`, as polynomials in its 12 coordinates.
pub fn chart_equations(chart: TriIndex, basis: BasisTag) -> Result<Vec<MPoly>, XminError> {
    chart_equations_for(chart, model().covectors(basis)?)
}

pub fn chart_equations_for(chart: TriIndex, covectors: &[Covector3]) -> Result<Vec<MPoly>, XminError> {
    let param = chart_param(chart);
    let minors = param.minors();
    Ok(covectors
        .iter()
        .map(|c| {
            TriIndex::all()
                .iter()
                .filter(|t| !c.get(**t).is_zero())
                .fold(MPoly::zero(&param.vars, false), |a, t| &a + &minors[t.rank()].scale(c.get(*t)))
        })
        .collect())
}

/// Jacobian of the chart equations at the origin of `U_I`; columns follow [`adjacent`].
pub fn jacobian_at(chart: TriIndex, covectors: &[Covector3]) -> Result<Matrix<GaussQ>, XminError> {
    let eqs = chart_equations_for(chart, covectors)?;
    let origin = chart_param(chart).origin();
    let mut m = Matrix::zeros(eqs.len(), 12);
    for (r, f) in eqs.iter().enumerate() {
        for c in 0..12 {
            m.set(r, c, f.derivative(c).eval(&origin)?);
        }
    }
    Ok(m)
}

/// Tilde-basis Jacobian at a fixed point and its rank.
pub fn jacobian_rank_at(p: &FixedPoint) -> Result<(Matrix<GaussQ>, usize), XminError> {
    let j = jacobian_at(p.index, &model().covectors_tilde)?;
    let r = j.rank();
    Ok((j, r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentVector {
    /// Coefficients of `∂/∂q_J` for the adjacent triples `J` in lex order.
    pub coords: Vec<GaussQ>,
    pub support: Vec<TriIndex>,
    /// `char(J) − char(I)` shared by every `J` in the support.
    pub character: Character,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentFrame {
    pub point: FixedPoint,
    pub columns: Vec<TriIndex>,
    pub jacobian_rank: usize,
    pub vectors: Vec<TangentVector>,
}

/// Kernel of the Jacobian at `p`, split into torus-homogeneous pieces.
pub fn tangent_frame_at(p: &FixedPoint) -> Result<TangentFrame, XminError> {
    let (jac, rank) = jacobian_rank_at(p)?;
    let columns = adjacent(p.index);
    let chars: Vec<Character> = columns.iter().map(|j| weight_of(*j) - weight_of(p.index)).collect();
    let mut blocks: Vec<Character> = Vec::new();
    for ch in &chars {
        if !blocks.contains(ch) {
            blocks.push(*ch);
        }
    }
    let rows: Vec<usize> = (0..jac.rows()).collect();
    let mut vectors = Vec::new();
    for ch in blocks {
        let cols: Vec<usize> = (0..12).filter(|&c| chars[c] == ch).collect();
        for k in jac.select(&rows, &cols).kernel() {
            let mut coords = vec![GaussQ::zero(); 12];
            for (c, v) in cols.iter().zip(k) {
                coords[*c] = v;
            }
            let support = (0..12).filter(|&c| !coords[c].is_zero()).map(|c| columns[c]).collect();
            vectors.push(TangentVector { coords, support, character: ch });
        }
    }
    if vectors.len() != 12 - rank {
        return Err(XminError::Precondition(format!(
            "Jacobian at {} is not torus-equivariant: {} homogeneous kernel vectors, nullity {}",
            p.index,
            vectors.len(),
            12 - rank
        )));
    }
    Ok(TangentFrame { point: *p, columns, jacobian_rank: rank, vectors })
}

/// Tangent frames at all torus-fixed points, computed once.
pub fn tangent_frames() -> &'static [TangentFrame] {
    static FRAMES: OnceLock<Vec<TangentFrame>> = OnceLock::new();
    FRAMES.get_or_init(|| {
        torus_fixed_points()
            .and_then(|pts| pts.iter().map(tangent_frame_at).collect())
            .expect("fixed points and frames are computable")
    })
}

/// Multiplies the coefficient of every triple containing 1 by `s`, i.e. rewrites a tilde
/// covector in the basis with ẽ₁ replaced by `s·ẽ₁`.
pub fn rescale_first_vector(c: &Covector3, s: &GaussQ) -> Covector3 {
    let coords = TriIndex::all()
        .iter()
        .map(|t| if t.contains(1) { c.get(*t) * s } else { c.get(*t).clone() })
        .collect();
    Covector3::from_coords(c.basis(), coords).expect("35 coordinates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{plucker, Plane3};

    fn t(s: &str) -> TriIndex {
        s.parse().unwrap()
    }

    #[test]
    fn derived_forms_match_printed_hyperplanes() {
        let m = model();
        for (d, p) in m.covectors_e.iter().zip(&m.printed_e) {
            assert_eq!(d, p);
        }
        assert_eq!(covector_matrix(&m.covectors_e).rank(), 7);
        let f1 = &m.covectors_tilde[0];
        assert!(f1.ratio_to(&m.printed_tilde[0]).is_some());
    }

    #[test]
    fn membership_examples() {
        let coord = |s: &str| plucker(&Plane3::coordinate(BasisTag::E, t(s)));
        assert!(xmin_member(&coord("123")).unwrap());
        assert!(xmin_member(&coord("167")).unwrap());
        assert!(!xmin_member(&coord("146")).unwrap());
        assert!(!xmin_member(&TriVector::basis_vector(BasisTag::Tilde, t("124"))).unwrap());
        assert_eq!(xmin_member(&TriVector::zero(BasisTag::E)), Err(XminError::ZeroTrivector));
    }

    #[test]
    fn chart_equation_examples() {
        let eqs = chart_equations(t("123"), BasisTag::E).unwrap();
        let lin = eqs[3].part_of_degree(1);
        assert_eq!(lin.to_string(), "q127 - q136 + q235");
        let tilde = chart_equations(t("123"), BasisTag::Tilde).unwrap();
        for f in &tilde[..3] {
            assert!(f.part_of_degree(1).is_zero());
        }
        let origin = vec![GaussQ::zero(); 12];
        assert!(tilde.iter().all(|f| f.eval(&origin).unwrap().is_zero()));
    }

    #[test]
    fn frame_at_123() {
        let p = FixedPoint { index: t("123"), character: Character(0, 0) };
        let f = tangent_frame_at(&p).unwrap();
        assert_eq!(f.jacobian_rank, 4);
        assert_eq!(f.vectors.len(), 8);
        let x137 = f.vectors.iter().find(|v| v.support == vec![t("137")]).unwrap();
        assert_eq!(x137.character, Character(3, 1));
    }
}

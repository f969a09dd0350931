//! Two SL₂ actions on 𝕆 = Mat₂ ⊕ Mat₂:
//! `diag: (x₁, x₂) ↦ (g x₁ g⁻¹, g x₂ g⁻¹)` and `left: (x₁, x₂) ↦ (x₁, g x₂)`,
//! their matrices on 𝕀 and the induced action on Λ³𝕀.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::XminError;
use crate::grassmann::{covector_matrix, exterior_cube, plucker, Covector3, Plane3, TriIndex, TriVector};
use crate::octonion::{is_associative_plane, BasisTag, Octonion};
use crate::report::Check;
use crate::sample::{self, mul2, SampleRng};
use crate::scalars::{vars, GaussQ, MPoly, Matrix, Vars};
use crate::xmin::{model, xmin_member};

/// A 2×2 matrix `(a b; c d)` of determinant 1, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Sl2Element([GaussQ; 4]);

impl Sl2Element {
    pub fn new(m: [GaussQ; 4]) -> Result<Self, XminError> {
        let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
        if !det.is_one() {
            return Err(XminError::NotSl2(det.to_string()));
        }
        Ok(Sl2Element(m))
    }

    pub fn identity() -> Self {
        Sl2Element([GaussQ::one(), GaussQ::zero(), GaussQ::zero(), GaussQ::one()])
    }

    /// `(1 u; 0 1)`.
    pub fn unipotent(u: GaussQ) -> Self {
        Sl2Element([GaussQ::one(), u, GaussQ::zero(), GaussQ::one()])
    }

    /// `diag(s, s⁻¹)`.
    pub fn diagonal(s: &GaussQ) -> Result<Self, XminError> {
        Ok(Sl2Element([s.clone(), GaussQ::zero(), GaussQ::zero(), s.inv()?]))
    }

    pub fn entries(&self) -> &[GaussQ; 4] {
        &self.0
    }

    /// The adjugate, which is the inverse when the determinant is 1.
    pub fn inverse(&self) -> Sl2Element {
        let [a, b, c, d] = &self.0;
        Sl2Element([d.clone(), -b, -c, a.clone()])
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Diag,
    Left,
}

impl ActionKind {
    pub const ALL: [ActionKind; 2] = [ActionKind::Diag, ActionKind::Left];
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionKind::Diag => "diag",
            ActionKind::Left => "left",
        })
    }
}

impl FromStr for ActionKind {
    type Err = XminError;
    fn from_str(s: &str) -> Result<Self, XminError> {
        match s {
            "diag" => Ok(ActionKind::Diag),
            "left" => Ok(ActionKind::Left),
            _ => Err(XminError::Parse(format!("unknown action `{s}`"))),
        }
    }
}

/// The action on all of 𝕆; the result is expressed in the basis of `x`.
pub fn act_full(kind: ActionKind, g: &Sl2Element, x: &Octonion) -> Octonion {
    let p = x.to_basis(BasisTag::MatrixPair);
    let c = p.coords();
    let x1: [GaussQ; 4] = std::array::from_fn(|k| c[k].clone());
    let x2: [GaussQ; 4] = std::array::from_fn(|k| c[k + 4].clone());
    let gi = g.inverse();
    let (y1, y2) = match kind {
        ActionKind::Diag => (mul2(&mul2(&g.0, &x1), &gi.0), mul2(&mul2(&g.0, &x2), &gi.0)),
        ActionKind::Left => (x1, mul2(&g.0, &x2)),
    };
    let coords: [GaussQ; 8] = std::array::from_fn(|k| if k < 4 { y1[k].clone() } else { y2[k - 4].clone() });
    Octonion::new(BasisTag::MatrixPair, coords).to_basis(x.basis())
}

fn act_imaginary(kind: ActionKind, g: &Sl2Element, x: &Octonion) -> Result<Octonion, XminError> {
    if !x.is_imaginary() {
        return Err(XminError::NotImaginary);
    }
    Ok(act_full(kind, g, x))
}

pub fn sl2_diag_act(g: &Sl2Element, x: &Octonion) -> Result<Octonion, XminError> {
    act_imaginary(ActionKind::Diag, g, x)
}

pub fn sl2_left_act(g: &Sl2Element, x: &Octonion) -> Result<Octonion, XminError> {
    act_imaginary(ActionKind::Left, g, x)
}

/// Matrix of the action on 𝕀 in the E basis; column `j` is the image of `e_j`.
pub fn action_matrix(kind: ActionKind, g: &Sl2Element) -> Matrix<GaussQ> {
    let cols: Vec<[GaussQ; 7]> = (1..=7)
        .map(|j| act_full(kind, g, &Octonion::e(j)).imag_coords().expect("actions preserve the imaginary part"))
        .collect();
    Matrix::from_fn(7, 7, |r, c| cols[c][r].clone())
}

/// `[g_u]` as displayed: row `j` holds the coordinates of the image of `e_j`.
pub fn unipotent_matrix(kind: ActionKind, u: &GaussQ) -> Matrix<GaussQ> {
    action_matrix(kind, &Sl2Element::unipotent(u.clone())).transpose()
}

pub fn u_vars() -> Vars {
    vars(&["u"])
}

/// `[g_u]` with symbolic `u`, interpolated through `u = 0, 1, 2` and confirmed at further points.
pub fn unipotent_matrix_symbolic(kind: ActionKind) -> Result<Matrix<MPoly>, XminError> {
    let v = u_vars();
    let at = |n: i64| unipotent_matrix(kind, &GaussQ::from_int(n));
    let (m0, m1, m2) = (at(0), at(1), at(2));
    let half = GaussQ::ratio(1, 2);
    let out = Matrix::from_fn(7, 7, |r, c| {
        let (y0, y1, y2) = (m0.get(r, c), m1.get(r, c), m2.get(r, c));
        let second = &(&(y2 - &(y1 + y1)) + y0) * &half;
        let c1 = &(y1 - y0) - &second;
        let terms = [(0, y0.clone()), (1, c1), (2, second)];
        terms.into_iter().fold(MPoly::zero(&v, false), |acc, (k, coeff)| {
            &acc + &MPoly::monomial(&v, vec![k], coeff, false).expect("one variable")
        })
    });
    for probe in [GaussQ::from_int(3), GaussQ::from_int(-5), GaussQ::complex(1, 2, 1, 3)] {
        let direct = unipotent_matrix(kind, &probe);
        let interp = out.map(|p| p.eval(std::slice::from_ref(&probe)).expect("polynomial"));
        if direct != interp {
            return Err(XminError::Precondition(format!("[g_u] for the {kind} action is not quadratic in u")));
        }
    }
    Ok(out)
}

/// `[g_u][g_v] = [g_{u+v}]` as an identity in `ℚ(i)[u, v]`.
pub fn one_parameter_identity(kind: ActionKind) -> Result<bool, XminError> {
    let m = unipotent_matrix_symbolic(kind)?;
    let uv = vars(&["u", "v"]);
    let u = MPoly::var(&uv, 0, false);
    let v = MPoly::var(&uv, 1, false);
    let sum = &u + &v;
    let sub = |p: &MPoly, x: &MPoly| p.substitute(std::slice::from_ref(x));
    let mu = m.map(|p| sub(p, &u).expect("one variable"));
    let mv = m.map(|p| sub(p, &v).expect("one variable"));
    let muv = m.map(|p| sub(p, &sum).expect("one variable"));
    Ok(mu.matmul(&mv)? == muv)
}

/// Λ³ of `[g_u]` acting on E-basis trivectors, entries in `ℚ(i)[u]`.
pub fn unipotent_cube(kind: ActionKind) -> Result<Matrix<MPoly>, XminError> {
    Ok(exterior_cube(&unipotent_matrix_symbolic(kind)?.transpose()))
}

/// Whether `[w]` is fixed by every `g_u`.
pub fn is_unipotent_fixed(kind: ActionKind, w: &TriVector) -> Result<bool, XminError> {
    let w = w.to_basis(BasisTag::E)?;
    let v = u_vars();
    let cube = unipotent_cube(kind)?;
    let coords: Vec<MPoly> = w.coords().iter().map(|c| MPoly::constant(&v, c.clone(), false)).collect();
    let image = cube.mul_vec(&coords)?;
    // projective fixedness: image ∧ w = 0 coordinatewise, i.e. image_a w_b = image_b w_a
    let k = w.coords().iter().position(|c| !c.is_zero()).ok_or(XminError::ZeroTrivector)?;
    Ok((0..35).all(|a| image[a].scale(&w.coords()[k]) == image[k].scale(&w.coords()[a])))
}

/// Whether `f ↦ f ∘ Λ³[g_u]` maps the span of the seven covectors into itself for all `u`.
pub fn preserves_covector_span(kind: ActionKind, covectors: &[Covector3]) -> Result<bool, XminError> {
    let cube = unipotent_cube(kind)?;
    let base = covector_matrix(covectors);
    let mut rows: Vec<Vec<GaussQ>> = base.to_rows();
    for f in covectors {
        let image: Vec<MPoly> = (0..35)
            .map(|c| {
                (0..35)
                    .filter(|r| !f.coords()[*r].is_zero())
                    .fold(MPoly::zero(&u_vars(), false), |a, r| &a + &cube.get(r, c).scale(&f.coords()[r]))
            })
            .collect();
        let top = image.iter().filter_map(MPoly::total_degree).max().unwrap_or(0);
        for d in 0..=top {
            rows.push(image.iter().map(|p| p.coeff(&[d])).collect());
        }
    }
    Ok(Matrix::from_rows(rows)?.rank() == base.rank())
}

pub fn act_on_trivector(kind: ActionKind, g: &Sl2Element, w: &TriVector) -> Result<TriVector, XminError> {
    let w = w.to_basis(BasisTag::E)?;
    let cube = exterior_cube(&action_matrix(kind, g));
    TriVector::from_coords(BasisTag::E, cube.mul_vec(w.coords())?)
}

pub fn act_on_plane(kind: ActionKind, g: &Sl2Element, p: &Plane3) -> Result<Plane3, XminError> {
    let p = p.to_basis(BasisTag::E)?;
    let rows: Vec<Vec<GaussQ>> = p
        .rows_as_octonions()?
        .iter()
        .map(|x| Ok(act_imaginary(kind, g, x)?.imag_coords()?.to_vec()))
        .collect::<Result<_, XminError>>()?;
    Plane3::new(BasisTag::E, Matrix::from_rows(rows)?)
}

/// In X_min and fixed by every `g_u`.
fn fixed_member(kind: ActionKind, w: &TriVector) -> Result<bool, XminError> {
    Ok(xmin_member(w)? && is_unipotent_fixed(kind, w)?)
}

/// Coordinates whose negation alone turns `w` into a fixed point of X_min.
pub fn sign_corrections(kind: ActionKind, w: &TriVector) -> Result<Vec<TriIndex>, XminError> {
    let w = w.to_basis(BasisTag::E)?;
    let mut found = Vec::new();
    for t in TriIndex::all().iter().filter(|t| !w.get(**t).is_zero()) {
        let coords: Vec<GaussQ> =
            TriIndex::all().iter().map(|s| if s == t { -w.get(*s) } else { w.get(*s).clone() }).collect();
        if fixed_member(kind, &TriVector::from_coords(BasisTag::E, coords)?)? {
            found.push(*t);
        }
    }
    Ok(found)
}

const PLUMBING: &str = "plumbing";
const ANCHOR_PROP: &str = "SL2 actions on associative 3-planes";
const ANCHOR_UNIPOTENT: &str = "unipotent matrices and their fixed points";

/// Sampled and symbolic properties of both actions.
pub fn verify_action_properties(samples: usize, rng: &mut SampleRng) -> Result<Vec<Check>, XminError> {
    let mut out = Vec::new();
    let printed = crate::fixtures::unipotent()?;
    let covs = &model().covectors_e;
    for kind in ActionKind::ALL {
        let sym = unipotent_matrix_symbolic(kind)?;
        let shown = printed.get(&kind.to_string()).ok_or_else(|| XminError::Parse(format!("no printed {kind} matrix")))?;
        let u = u_vars();
        let shown = shown.map(|p| p.with_vars(&u).expect("single variable"));
        out.push(Check::compare(format!("actions.{kind}.unipotent_matrix"), ANCHOR_UNIPOTENT, shown, &sym));
        out.push(Check::holds(format!("actions.{kind}.one_parameter"), ANCHOR_UNIPOTENT, one_parameter_identity(kind)?));
        out.push(Check::holds(
            format!("actions.{kind}.covector_span_preserved"),
            ANCHOR_PROP,
            preserves_covector_span(kind, covs)?,
        ));

        let (mut mult_fail, mut assoc_fail, mut member_fail) = (0usize, 0usize, 0usize);
        for _ in 0..samples {
            let g = sample::sl2(rng);
            let x = sample::imaginary(rng);
            let y = sample::imaginary(rng);
            let lhs = act_full(kind, &g, &(&x * &y));
            let rhs = &act_full(kind, &g, &x) * &act_full(kind, &g, &y);
            if lhs != rhs {
                mult_fail += 1;
            }
            let seed_plane = sample::associative_plane(rng);
            let moved = act_on_plane(kind, &g, &seed_plane)?;
            if !is_associative_plane(&moved)? {
                assoc_fail += 1;
            }
            let w = act_on_trivector(kind, &g, &plucker(&seed_plane))?;
            if !xmin_member(&w)? || !w.is_proportional(&plucker(&moved)) {
                member_fail += 1;
            }
        }
        out.push(Check::compare(format!("actions.{kind}.multiplicative"), ANCHOR_PROP, 0, mult_fail));
        out.push(Check::compare(format!("actions.{kind}.associative_images"), ANCHOR_PROP, 0, assoc_fail));
        out.push(Check::compare(format!("actions.{kind}.membership_preserved"), ANCHOR_PROP, 0, member_fail));
    }
    for (n, (name, w)) in crate::fixtures::unipotent_fixed()?.iter().enumerate() {
        let kind: ActionKind = name.parse()?;
        let ok = fixed_member(kind, w)?;
        out.push(Check::holds(format!("actions.fixed_point_{}.{kind}.in_xmin", n + 1), ANCHOR_UNIPOTENT, xmin_member(w)?));
        out.push(Check::holds(
            format!("actions.fixed_point_{}.{kind}.fixed", n + 1),
            ANCHOR_UNIPOTENT,
            is_unipotent_fixed(kind, w)?,
        ));
        if !ok {
            let flips = sign_corrections(kind, w)?;
            let computed = if flips.is_empty() { "none".to_string() } else { flips.iter().map(|t| format!("negate {t}")).collect::<Vec<_>>().join("; ") };
            out.push(Check::compare(format!("actions.fixed_point_{}.{kind}.sign_correction", n + 1), PLUMBING, "not needed", computed));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_is_checked() {
        let two = GaussQ::from_int(2);
        assert!(Sl2Element::new([two.clone(), GaussQ::zero(), GaussQ::zero(), two]).is_err());
        assert!(Sl2Element::diagonal(&GaussQ::zero()).is_err());
    }

    #[test]
    fn identity_and_torus_examples() {
        let x = Octonion::e(5);
        assert_eq!(sl2_diag_act(&Sl2Element::identity(), &x).unwrap(), x);
        let s = GaussQ::from_int(3);
        let g = Sl2Element::diagonal(&s).unwrap();
        let t2 = Octonion::basis_element(BasisTag::Tilde, 2);
        let s2 = s.powi(-2).unwrap();
        assert_eq!(sl2_diag_act(&g, &t2).unwrap(), t2.scale(&s2));
        assert_eq!(sl2_left_act(&g, &Octonion::e(1)).unwrap(), Octonion::e(1));
        assert_eq!(sl2_left_act(&g, &Octonion::e(0)), Err(XminError::NotImaginary));
    }

    #[test]
    fn printed_entries() {
        let m = unipotent_matrix(ActionKind::Diag, &GaussQ::one());
        assert_eq!(m.get(1, 1), &GaussQ::ratio(3, 2));
        let m = unipotent_matrix(ActionKind::Left, &GaussQ::one());
        assert_eq!(m.get(3, 5), &GaussQ::ratio(1, 2));
        assert_eq!(unipotent_matrix(ActionKind::Diag, &GaussQ::zero()), Matrix::identity(7));
    }
}

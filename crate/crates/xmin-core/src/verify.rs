//! Verification suites: every printed table and identity is recomputed and compared,
//! and random exact samples exercise the algebraic invariants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::actions::verify_action_properties;
use crate::error::XminError;
use crate::fixtures;
use crate::grassmann::{
    chart_identity_audit, covector_matrix, is_decomposable, plucker, plucker_relation_check, plucker_relations,
    relations_hold_on_chart, Covector3, Plane3, TriIndex,
};
use crate::octonion::{
    associator, calibration_constant, chi3, chi_coefficient_expansion, cross, dot, form_expansion,
    is_associative_plane, phi3, triple_cross, BasisTag, FormKind, Octonion,
};
use crate::report::{Check, VerificationReport};
use crate::sample::{self, SampleRng};
use crate::scalars::{GaussQ, Matrix};
use crate::torus::{
    bb_decomposition, eigenspace_deep_check, is_regular, poincare, tilde_characters, torus_fixed_points,
    torus_fixed_points_with, torus_matrix_e, torus_matrix_tilde, vanishing_characters, weight_of, weight_table,
    wonderful_compare, special_orbit_count, Character, DeepCheck, OneParamSubgroup, WONDERFUL,
};
use crate::xmin::{compare_forms, jacobian_at, model, rescale_first_vector, tangent_frames, xmin_member};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Algebra,
    Forms,
    Grassmann,
    Xmin,
    Torus,
    Actions,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Algebra, Suite::Forms, Suite::Grassmann, Suite::Xmin, Suite::Torus, Suite::Actions];

    fn stream(self) -> u64 {
        Suite::ALL.iter().position(|s| *s == self).expect("listed") as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Algebra => "algebra",
            Suite::Forms => "forms",
            Suite::Grassmann => "grassmann",
            Suite::Xmin => "xmin",
            Suite::Torus => "torus",
            Suite::Actions => "actions",
        })
    }
}

impl FromStr for Suite {
    type Err = XminError;
    fn from_str(s: &str) -> Result<Self, XminError> {
        Suite::ALL.into_iter().find(|k| k.to_string() == s).ok_or_else(|| XminError::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Config {
    pub seed: u64,
    /// Overrides every sample count when set.
    pub samples: Option<usize>,
}

/// Sample families and their default sizes.
const SAMPLE_DEFAULTS: [(&str, usize); 9] = [
    ("algebra.random_pairs", 1000),
    ("forms.orthogonal_triples", 100),
    ("forms.associative_planes", 100),
    ("grassmann.decomposable", 1000),
    ("grassmann.random", 1000),
    ("grassmann.minors", 100),
    ("xmin.orbit_points", 500),
    ("xmin.decomposable", 500),
    ("actions.pairs", 100),
];

impl Config {
    pub fn sample_counts(&self, suites: &[Suite]) -> BTreeMap<String, usize> {
        SAMPLE_DEFAULTS
            .iter()
            .filter(|(k, _)| suites.iter().any(|s| k.starts_with(&format!("{s}."))))
            .map(|(k, n)| (k.to_string(), self.samples.unwrap_or(*n)))
            .collect()
    }

    fn count(&self, key: &str) -> usize {
        self.samples.unwrap_or_else(|| SAMPLE_DEFAULTS.iter().find(|(k, _)| *k == key).expect("known family").1)
    }
}

/// Runs the given suites concurrently and assembles their checks in suite order.
pub fn run(suites: &[Suite], cfg: Config) -> Result<VerificationReport, XminError> {
    let results: Vec<Result<Vec<Check>, XminError>> = suites.par_iter().map(|s| run_suite(*s, cfg)).collect();
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    Ok(VerificationReport::new(cfg.seed, cfg.sample_counts(suites), checks, &fixtures::known_discrepancies()?))
}

pub fn run_suite(suite: Suite, cfg: Config) -> Result<Vec<Check>, XminError> {
    let mut rng = sample::rng(cfg.seed, suite.stream());
    match suite {
        Suite::Algebra => algebra(&cfg, &mut rng),
        Suite::Forms => forms(&cfg, &mut rng),
        Suite::Grassmann => grassmann(&cfg, &mut rng),
        Suite::Xmin => xmin(&cfg, &mut rng),
        Suite::Torus => torus(),
        Suite::Actions => verify_action_properties(cfg.count("actions.pairs"), &mut rng),
    }
}

const PLUMBING: &str = "plumbing";
const A_ALGEBRA: &str = "split octonions as a Cayley-Dickson double of 2x2 matrices";
const A_FORMS: &str = "calibration 3-form, coassociative 4-form and chi";
const A_ASSOC: &str = "associator identity x*y*z = phi(x,y,z)e + c[x,y,z]";
const A_GRASS: &str = "Plücker embedding of Gr(3,7)";
const A_CHART: &str = "chart U_123 relations";
const A_XMIN: &str = "linear equations of X_min";
const A_SMOOTH: &str = "smoothness of X_min";
const A_TORUS: &str = "torus action and weight table";
const A_FIXED: &str = "torus fixed points";
const A_BB: &str = "tangent weights for (10,1)";
const A_POINCARE: &str = "Poincaré polynomial of X_min";
const A_WONDERFUL: &str = "comparison with the wonderful compactification";
const A_ORBITS: &str = "orbits of the compactification";

fn e(k: usize) -> Octonion {
    Octonion::e(k)
}

fn imag_basis() -> Vec<Octonion> {
    (1..=7).map(e).collect()
}

fn join<T: fmt::Display>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn sorted_list(mut v: Vec<i64>) -> String {
    v.sort();
    format!("[{}]", join(v, ", "))
}

fn algebra(cfg: &Config, rng: &mut SampleRng) -> Result<Vec<Check>, XminError> {
    let mut out = Vec::new();
    let basis: Vec<Octonion> = (0..8).map(e).collect();
    let unit = Octonion::unit(BasisTag::E);

    let mut fails = 0;
    for x in &basis {
        for y in &basis {
            if (x * y).norm() != &x.norm() * &y.norm() {
                fails += 1;
            }
        }
    }
    out.push(Check::compare("algebra.composition.basis_pairs", A_ALGEBRA, 0, fails));
    out.push(Check::holds("algebra.unit", A_ALGEBRA, basis.iter().all(|x| &(&unit * x) == x && &(x * &unit) == x)));

    let products = [(1, 1, -&e(0)), (4, 4, e(0)), (1, 2, e(3))];
    for (a, b, want) in products {
        out.push(Check::compare(format!("algebra.product.e{a}e{b}"), A_ALGEBRA, &want, &e(a) * &e(b)));
    }
    out.push(Check::compare("algebra.norm.e4", A_ALGEBRA, -1, e(4).norm()));

    let n = cfg.count("algebra.random_pairs");
    let (mut comp, mut conj, mut alt, mut inner, mut zorn) = (0, 0, 0, 0, 0);
    for _ in 0..n {
        let x = sample::octonion(rng);
        let y = sample::octonion(rng);
        let xy = &x * &y;
        if xy.norm() != &x.norm() * &y.norm() {
            comp += 1;
        }
        if xy.conj() != &y.conj() * &x.conj() {
            conj += 1;
        }
        if &x * &(&x * &y) != &(&x * &x) * &y || &(&y * &x) * &x != &y * &(&x * &x) {
            alt += 1;
        }
        let a = sample::imaginary(rng);
        let b = sample::imaginary(rng);
        let polar = (&(&a + &b).norm() - &(&a.norm() + &b.norm())) / &GaussQ::from_int(2);
        if dot(&a, &b)? != polar || a.inner(&b)? != polar {
            inner += 1;
        }
        // N(a×b) = N(a)N(b) − (a·b)² for imaginary a, b
        let d = dot(&a, &b)?;
        if cross(&a, &b)?.norm() != &(&a.norm() * &b.norm()) - &(&d * &d) {
            zorn += 1;
        }
    }
    out.push(Check::compare("algebra.composition.random", A_ALGEBRA, 0, comp));
    out.push(Check::compare("algebra.conjugation_reverses_products", A_ALGEBRA, 0, conj));
    out.push(Check::compare("algebra.alternative", A_ALGEBRA, 0, alt));
    out.push(Check::compare("algebra.dot_is_polar_form", A_ALGEBRA, 0, inner));
    out.push(Check::compare("algebra.cross_norm", A_ALGEBRA, 0, zorn));

    // N(x×y×z) = N(x)N(y)N(z) is only claimed for orthogonal triples; record the general behavior.
    let x = e(1);
    let general = triple_cross(&x, &x, &x)?.norm() == x.norm().pow(3);
    out.push(
        Check::compare("algebra.triple_cross_norm_nonorthogonal", PLUMBING, false, general)
            .with_detail("x = y = z = e1 gives x×y×z = 0 while N(x)³ = 1"),
    );
    Ok(out)
}

fn forms(cfg: &Config, rng: &mut SampleRng) -> Result<Vec<Check>, XminError> {
    let mut out = Vec::new();
    let printed = fixtures::forms()?;
    let phi = &form_expansion(FormKind::Phi)[0];
    let star = &form_expansion(FormKind::StarPhi)[0];
    out.push(Check::compare("forms.phi", A_FORMS, &printed.phi, phi));
    out.push(Check::compare("forms.star_phi", A_FORMS, &printed.star_phi, star));
    out.push(Check::compare("forms.phi_terms", A_FORMS, 7, phi.terms.len()));
    let chi = form_expansion(FormKind::ChiComponents);
    for (m, (p, d)) in printed.chi.iter().zip(&chi).enumerate() {
        out.push(Check::compare(format!("forms.chi_{}", m + 1), A_FORMS, p, d));
    }
    out.push(Check::compare("forms.chi_terms", A_FORMS, 28, chi.iter().map(|f| f.terms.len()).sum::<usize>()));
    // coefficient of e_m in the vector χ(e_i,e_j,e_k), as opposed to the pairing ⟨χ(·), e_m⟩
    for (m, (p, d)) in printed.chi.iter().zip(chi_coefficient_expansion()).enumerate() {
        out.push(Check::compare(format!("forms.chi_vector_coefficients_{}", m + 1), A_FORMS, p, d));
    }

    let cal = calibration_constant();
    out.push(Check::holds("forms.calibration_exists", A_ASSOC, cal.constant.is_some()).with_detail(format!(
        "{} associative and {} non-associative basis triples",
        cal.associative_triples, cal.nonassociative_triples
    )));
    let c = cal.constant.clone().unwrap_or_default();
    out.push(Check::compare("forms.calibration_constant", A_ASSOC, 1, &c));

    // φ² + c²N([x,y,z]) = N(x)N(y)N(z) on pairwise orthogonal triples
    let c2 = &c * &c;
    let identity = |x: &Octonion, y: &Octonion, z: &Octonion| -> Result<bool, XminError> {
        let p = phi3(x, y, z)?;
        let lhs = &(&p * &p) + &(&c2 * &associator(x, y, z)?.norm());
        Ok(lhs == &(&x.norm() * &y.norm()) * &z.norm())
    };
    let ib = imag_basis();
    let (mut tested, mut fails) = (0, 0);
    for i in 0..7 {
        for j in i + 1..7 {
            for k in j + 1..7 {
                let (x, y, z) = (&ib[i], &ib[j], &ib[k]);
                if [x.inner(y)?, x.inner(z)?, y.inner(z)?].iter().all(GaussQ::is_zero) {
                    tested += 1;
                    if !identity(x, y, z)? {
                        fails += 1;
                    }
                }
            }
        }
    }
    out.push(Check::compare("forms.calibration_norm.basis", A_ASSOC, 0, fails).with_detail(format!("{tested} orthogonal basis triples")));
    let n = cfg.count("forms.orthogonal_triples");
    let mut fails = 0;
    for _ in 0..n {
        let (x, y, z) = orthogonal_triple(rng)?;
        if !identity(&x, &y, &z)? {
            fails += 1;
        }
    }
    out.push(Check::compare("forms.calibration_norm.random", A_ASSOC, 0, fails));
    let mut fails = 0;
    for t in TriIndex::all() {
        let [i, j, k] = t.indices().map(|a| e(a as usize));
        let a = associator(&i, &j, &k)?;
        let p = phi3(&i, &j, &k)?;
        let lhs = triple_cross(&i, &j, &k)?;
        let rhs = &Octonion::unit(BasisTag::E).scale(&p) + &a.scale(&c);
        if lhs != rhs {
            fails += 1;
        }
    }
    out.push(Check::compare("forms.associator_identity_basis", A_ASSOC, 0, fails));

    let coord = |s: &str| -> Result<Plane3, XminError> { Ok(Plane3::coordinate(BasisTag::E, s.parse()?)) };
    out.push(Check::compare("forms.associative.w0", A_FORMS, true, is_associative_plane(&coord("123")?)?));
    out.push(Check::compare("forms.associative.u0", A_FORMS, true, is_associative_plane(&coord("167")?)?));
    out.push(Check::compare("forms.associative.e124", PLUMBING, false, is_associative_plane(&coord("124")?)?));

    let n = cfg.count("forms.associative_planes");
    let mut fails = 0;
    for _ in 0..n {
        let p = sample::associative_plane(rng);
        let r = p.rows_as_octonions()?;
        if !chi3(&r[0], &r[1], &r[2])?.is_zero() || !is_associative_plane(&p)? {
            fails += 1;
        }
    }
    out.push(Check::compare("forms.chi_vanishes_on_associative", A_FORMS, 0, fails));
    Ok(out)
}

/// Gram-Schmidt on random imaginary octonions with respect to the complex bilinear inner product.
fn orthogonal_triple(rng: &mut SampleRng) -> Result<(Octonion, Octonion, Octonion), XminError> {
    let project = |v: &Octonion, on: &[Octonion]| -> Result<Octonion, XminError> {
        let mut w = v.clone();
        for u in on {
            let k = &v.inner(u)? / &u.norm();
            w = &w - &u.scale(&k);
        }
        Ok(w)
    };
    let mut found: Vec<Octonion> = Vec::new();
    while found.len() < 3 {
        let v = project(&sample::imaginary(rng), &found)?;
        if !v.norm().is_zero() {
            found.push(v);
        }
    }
    let z = found.pop().expect("three");
    let y = found.pop().expect("two");
    let x = found.pop().expect("one");
    Ok((x, y, z))
}

fn minors(m: &Matrix<GaussQ>) -> Vec<GaussQ> {
    TriIndex::all().iter().map(|t| m.minor(&[0, 1, 2], &t.indices().map(|a| a as usize - 1))).collect()
}

fn grassmann(cfg: &Config, rng: &mut SampleRng) -> Result<Vec<Check>, XminError> {
    let mut out = Vec::new();
    out.push(Check::compare("grassmann.relation_count", PLUMBING, 525, plucker_relations().len()));

    let n = cfg.count("grassmann.decomposable");
    let (mut disagree, mut detected, mut round) = (0, 0, 0);
    for _ in 0..n {
        let w = sample::decomposable(rng);
        let (kernel_test, plane) = is_decomposable(&w)?;
        let relation_test = plucker_relation_check(&w).is_empty();
        if kernel_test != relation_test {
            disagree += 1;
        }
        if kernel_test {
            detected += 1;
        }
        if plane.map(|p| plucker(&p).is_proportional(&w)) != Some(true) {
            round += 1;
        }
    }
    out.push(Check::compare("grassmann.oracles_agree.decomposable", A_GRASS, 0, disagree));
    out.push(Check::compare("grassmann.decomposable_detected", A_GRASS, n, detected));
    out.push(Check::compare("grassmann.plane_round_trip", A_GRASS, 0, round));

    let n = cfg.count("grassmann.random");
    let (mut disagree, mut rejected) = (0, 0);
    for _ in 0..n {
        let w = sample::trivector(rng);
        let kernel_test = is_decomposable(&w)?.0;
        if kernel_test != plucker_relation_check(&w).is_empty() {
            disagree += 1;
        }
        if !kernel_test {
            rejected += 1;
        }
    }
    out.push(Check::compare("grassmann.oracles_agree.random", A_GRASS, 0, disagree));
    out.push(Check::compare("grassmann.random_not_decomposable", A_GRASS, n, rejected));

    let n = cfg.count("grassmann.minors");
    let (mut fails, mut basis_change) = (0, 0);
    for _ in 0..n {
        let m = sample::matrix(rng, 3, 7);
        let q = minors(&m);
        if plucker_relations().iter().any(|r| !r.eval(&q).is_zero()) {
            fails += 1;
        }
        if let Ok(p) = Plane3::new(BasisTag::E, m) {
            if plucker(&p.to_basis(BasisTag::Tilde)?) != plucker(&p).to_basis(BasisTag::Tilde)? {
                basis_change += 1;
            }
        }
    }
    out.push(Check::compare("grassmann.relations_on_minors", A_GRASS, 0, fails));
    out.push(Check::compare("grassmann.basis_change_commutes", PLUMBING, 0, basis_change));

    let chart: TriIndex = "123".parse()?;
    out.push(Check::holds("grassmann.chart_123.relations_hold", A_CHART, relations_hold_on_chart(chart)));
    for line in chart_identity_audit(chart, &fixtures::chart_123()?) {
        let computed = if line.holds {
            line.printed.clone()
        } else {
            line.corrected.clone().unwrap_or_else(|| format!("no sign pattern; oracle {}", line.oracle))
        };
        let name = format!("grassmann.chart_123.{}", line.label.replace(' ', "_"));
        out.push(Check::compare(name, A_CHART, &line.printed, computed).with_detail(format!("oracle {}", line.oracle)));
    }
    Ok(out)
}

/// `Some(true)` when the rows of `sub` lie in the row space of `span` after clearing zero rows.
fn inclusion(span: &Matrix<GaussQ>, sub: &Matrix<GaussQ>) -> Result<bool, XminError> {
    span.row_space_contains(sub)
}

fn double_inclusion(computed: &Matrix<GaussQ>, printed: &Matrix<GaussQ>) -> Result<String, XminError> {
    Ok(match (inclusion(computed, printed)?, inclusion(printed, computed)?) {
        (true, true) => "equal".into(),
        (true, false) => "printed span is a proper subspace".into(),
        (false, true) => "computed span is a proper subspace".into(),
        (false, false) => "neither inclusion holds".into(),
    })
}

fn vectors_to_matrix(vs: Vec<Vec<GaussQ>>) -> Result<Matrix<GaussQ>, XminError> {
    Matrix::from_rows(vs)
}

fn xmin(cfg: &Config, rng: &mut SampleRng) -> Result<Vec<Check>, XminError> {
    let mut out = Vec::new();
    let m = model();
    out.push(Check::compare("xmin.covector_rank", A_XMIN, 7, covector_matrix(&m.covectors_e).rank()));
    for (k, (p, d)) in m.printed_e.iter().zip(&m.covectors_e).enumerate() {
        out.push(Check::compare(format!("xmin.linear_equation_{}", k + 1), A_XMIN, p, d));
    }
    let matches = compare_forms(&m.covectors_tilde, &m.printed_tilde)?;
    for f in &matches {
        let computed = if f.ratio.is_some() { "proportional" } else { "not proportional" };
        let detail = match &f.ratio {
            Some(r) => format!("printed = ({r})·derived"),
            None => format!("derived {}; in span: {}", f.derived, f.in_span),
        };
        out.push(Check::compare(format!("xmin.tilde_equation_{}", f.index), A_XMIN, "proportional", computed).with_detail(detail));
    }
    out.push(Check::compare("xmin.tilde_equations_in_span", A_XMIN, 7, matches.iter().filter(|f| f.in_span).count()));
    let span_rank = covector_matrix(&m.covectors_tilde).rank();
    let mut components: Vec<Covector3> = m.covectors_tilde.clone();
    for c in &m.covectors_tilde {
        let mut chars: Vec<Character> = TriIndex::all().iter().filter(|t| !c.get(**t).is_zero()).map(|t| weight_of(*t)).collect();
        chars.sort();
        chars.dedup();
        for ch in chars {
            let part = TriIndex::all().iter().filter(|t| weight_of(**t) == ch).map(|t| (*t, c.get(*t).clone()));
            components.push(Covector3::from_terms(BasisTag::Tilde, part));
        }
    }
    let stable = covector_matrix(&components).rank() == span_rank;
    out.push(Check::holds("xmin.equations_torus_stable", A_TORUS, stable));

    let coord = |s: &str| -> Result<Plane3, XminError> { Ok(Plane3::coordinate(BasisTag::E, s.parse()?)) };
    for (name, s) in [("w0", "123"), ("u0", "167")] {
        let w = plucker(&coord(s)?);
        let all_zero = m.covectors_e.iter().map(|c| c.pair(&w)).collect::<Result<Vec<_>, _>>()?.iter().all(GaussQ::is_zero);
        out.push(Check::holds(format!("xmin.annihilates_{name}"), A_XMIN, all_zero));
    }
    out.push(Check::compare("xmin.member.e146", PLUMBING, false, xmin_member(&plucker(&coord("146")?))?));

    let n = cfg.count("xmin.orbit_points");
    let (mut fails, mut moved) = (0, 0);
    let w0 = plucker(&coord("123")?);
    for _ in 0..n {
        let p = sample::orbit_plane(rng);
        let w = plucker(&p);
        if !xmin_member(&w)? {
            fails += 1;
        }
        if !w.is_proportional(&w0) {
            moved += 1;
        }
    }
    out.push(
        Check::compare("xmin.orbit_points_are_members", A_XMIN, 0, fails)
            .with_detail(format!("{moved} of {n} samples differ from W0")),
    );
    let n = cfg.count("xmin.decomposable");
    let mut fails = 0;
    for k in 0..n {
        let p = if k % 2 == 0 { sample::plane(rng, BasisTag::E) } else { sample::associative_plane(rng) };
        if xmin_member(&plucker(&p))? != is_associative_plane(&p)? {
            fails += 1;
        }
    }
    out.push(Check::compare("xmin.membership_matches_associativity", A_XMIN, 0, fails));

    for f in tangent_frames() {
        out.push(Check::compare(format!("xmin.jacobian_rank.{}", f.point.index), A_SMOOTH, 4, f.jacobian_rank));
        out.push(Check::compare(format!("xmin.tangent_dimension.{}", f.point.index), A_SMOOTH, 8, f.vectors.len()));
    }

    let t123: TriIndex = "123".parse()?;
    let jac = jacobian_at(t123, &m.covectors_tilde)?;
    let kernel = vectors_to_matrix(jac.kernel())?;
    let printed_kernel = vectors_to_matrix(fixtures::tangent_basis_123()?)?;
    let printed_jac = fixtures::jacobian_123()?;
    out.push(Check::compare("xmin.printed_jacobian_123_rank", A_SMOOTH, 4, printed_jac.rank()));
    out.push(Check::compare("xmin.printed_kernel_123_dimension", A_SMOOTH, 8, printed_kernel.rank()));
    out.push(Check::compare("xmin.kernel_123", A_SMOOTH, "equal", double_inclusion(&kernel, &printed_kernel)?));
    out.push(Check::compare("xmin.jacobian_123_row_space", A_SMOOTH, true, jac.same_row_space(&printed_jac)?));

    // The same comparisons with ẽ₁ replaced by 2ẽ₁.
    let two = GaussQ::from_int(2);
    let rescaled: Vec<Covector3> = m.covectors_tilde.iter().map(|c| rescale_first_vector(c, &two)).collect();
    let jac2 = jacobian_at(t123, &rescaled)?;
    let kernel2 = vectors_to_matrix(jac2.kernel())?;
    out.push(Check::compare("xmin.rescaled.kernel_123", PLUMBING, "equal", double_inclusion(&kernel2, &printed_kernel)?));
    out.push(Check::compare("xmin.rescaled.jacobian_123_row_space", PLUMBING, true, jac2.same_row_space(&printed_jac)?));
    let rescaled_matches = compare_forms(&rescaled, &m.printed_tilde)?;
    let proportional: Vec<String> =
        rescaled_matches.iter().filter(|f| f.ratio.is_some()).map(|f| f.index.to_string()).collect();
    out.push(Check::compare("xmin.rescaled.tilde_equations_proportional", PLUMBING, "1,2,3,4,5,6,7", proportional.join(",")));
    Ok(out)
}

const PRINTED_TILDE_CHARACTERS: [Character; 7] =
    [Character(0, 0), Character(-2, 0), Character(2, 0), Character(1, -1), Character(-1, 1), Character(-1, -1), Character(1, 1)];

/// `(a,b): 123 145 | ...` in character order.
fn render_table(map: &BTreeMap<Character, Vec<TriIndex>>) -> String {
    join(map.iter().map(|(ch, ts)| format!("{ch}: {}", join(ts, " "))), " | ")
}

fn render_points(mut pts: Vec<(TriIndex, Character)>) -> String {
    pts.sort();
    join(pts.iter().map(|(t, ch)| format!("{t}{ch}")), " ")
}

fn torus() -> Result<Vec<Check>, XminError> {
    let mut out = Vec::new();
    let printed_action = fixtures::torus_action()?;
    let t_e = torus_matrix_e();
    out.push(Check::compare("torus.action_matrix", A_TORUS, &printed_action, &t_e));
    let diagonal = (0..7).all(|r| (0..7).all(|c| r == c || torus_matrix_tilde().get(r, c).is_zero()));
    out.push(Check::holds("torus.tilde_basis_diagonalizes", A_TORUS, diagonal));
    out.push(Check::compare(
        "torus.tilde_characters",
        A_TORUS,
        join(PRINTED_TILDE_CHARACTERS, " "),
        join(tilde_characters()?, " "),
    ));

    let mut printed_table: BTreeMap<Character, Vec<TriIndex>> = BTreeMap::new();
    for (t, ch) in fixtures::weight_table()? {
        printed_table.entry(ch).or_default().push(t);
    }
    printed_table.values_mut().for_each(|v| v.sort());
    let table = weight_table();
    out.push(Check::compare("torus.weight_table", A_TORUS, render_table(&printed_table), render_table(&table)));
    out.push(Check::compare("torus.weight_table_characters", A_TORUS, 19, table.len()));

    let printed_points = render_points(fixtures::fixed_points()?);
    let pts = torus_fixed_points()?;
    out.push(Check::compare(
        "torus.fixed_points",
        A_FIXED,
        &printed_points,
        render_points(pts.iter().map(|p| (p.index, p.character)).collect()),
    ));
    let from_printed = torus_fixed_points_with(&model().printed_tilde)?;
    out.push(Check::compare(
        "torus.fixed_points.printed_equations",
        A_FIXED,
        &printed_points,
        render_points(from_printed.iter().map(|p| (p.index, p.character)).collect()),
    ));
    for (ch, ts) in table.iter().filter(|(_, ts)| ts.len() >= 2) {
        let expected_survivors: Vec<TriIndex> = pts.iter().filter(|p| p.character == *ch).map(|p| p.index).collect();
        let computed = match eigenspace_deep_check(*ch, &model().covectors_tilde)? {
            DeepCheck::Confirmed { survivors } => format!("confirmed [{}]", join(survivors, " ")),
            DeepCheck::Undecided { survivors, open_patterns } => {
                format!("undecided [{}], {} open patterns", join(survivors, " "), open_patterns.len())
            }
            DeepCheck::Counterexample { point } => format!("counterexample {point}"),
        };
        let expected = format!("confirmed [{}]", join(expected_survivors, " "));
        out.push(
            Check::compare(format!("torus.deep_check.{ch}"), A_FIXED, expected, computed)
                .with_detail(format!("eigenspace of dimension {}", ts.len())),
        );
    }

    let (g, printed_weights) = fixtures::bb_weights()?;
    out.push(Check::holds(format!("torus.regular.{g}"), A_BB, is_regular(g)));
    let cells = bb_decomposition(g)?;
    for cell in &cells {
        let printed = printed_weights.get(&cell.point.index).cloned().unwrap_or_default();
        out.push(Check::compare(
            format!("torus.bb_weights.{}", cell.point.index),
            A_BB,
            sorted_list(printed),
            sorted_list(cell.weights.clone()),
        ));
    }
    let t357: TriIndex = "357".parse()?;
    if let Some(cell) = cells.iter().find(|c| c.point.index == t357) {
        let recomputed = vec![9, -31, -11, -2, 18, -40, -11, -20];
        out.push(Check::compare("torus.bb_weights.357_recomputed", PLUMBING, sorted_list(recomputed), sorted_list(cell.weights.clone())));
        let mut pool = printed_weights.get(&t357).cloned().unwrap_or_default();
        let sub = cell.weights.iter().all(|w| match pool.iter().position(|p| p == w) {
            Some(k) => {
                pool.remove(k);
                true
            }
            None => false,
        });
        out.push(Check::holds("torus.bb_weights.357_submultiset", A_BB, sub));
    }
    let plus: Vec<usize> = {
        let mut h = vec![0usize; 9];
        for c in &cells {
            h[c.plus_dim] += 1;
        }
        h
    };
    out.push(Check::compare("torus.plus_dimension_histogram", A_POINCARE, "[1, 1, 2, 2, 3, 2, 2, 1, 1]", format!("{plus:?}")));

    let (printed_xmin, printed_wonderful) = fixtures::poincare()?;
    let p = poincare(g)?;
    out.push(Check::compare("torus.poincare", A_POINCARE, format!("{printed_xmin:?}"), format!("{p:?}")));
    out.push(Check::compare("torus.euler_characteristic", A_POINCARE, 15, p.iter().sum::<i64>()));
    let rev: Vec<i64> = p.iter().rev().copied().collect();
    out.push(Check::holds("torus.poincare_palindromic", A_POINCARE, rev == p));
    let others = [OneParamSubgroup::new(100, 1), OneParamSubgroup::new(7, 3), OneParamSubgroup::new(-10, -1), OneParamSubgroup::new(1, 10)];
    for h in others {
        let same_chamber = cells.iter().all(|c| {
            let frame = tangent_frames().iter().find(|f| f.point == c.point).expect("frame per point");
            frame.vectors.iter().all(|v| (v.character.pair(h) > 0) == (v.character.pair(g) > 0))
        });
        let computed = match poincare(h) {
            Ok(q) => format!("{q:?}"),
            Err(err) => err.to_string(),
        };
        out.push(
            Check::compare(format!("torus.poincare.{h}"), A_POINCARE, format!("{p:?}"), computed)
                .with_detail(if same_chamber { "same chamber as (10,1)" } else { "different chamber from (10,1)" }),
        );
    }
    let irregular = OneParamSubgroup::new(1, 1);
    out.push(Check::holds(
        "torus.irregular.(1,1)",
        PLUMBING,
        vanishing_characters(irregular).contains(&Character(1, -1)),
    ));

    let cmp = wonderful_compare()?;
    out.push(Check::compare("torus.wonderful_coefficients", A_WONDERFUL, format!("{printed_wonderful:?}"), format!("{:?}", WONDERFUL.to_vec())));
    let printed_diff: Vec<i64> = printed_wonderful.iter().zip(&printed_xmin).map(|(a, b)| a - b).collect();
    out.push(Check::compare("torus.wonderful_difference", A_WONDERFUL, format!("{printed_diff:?}"), format!("{:?}", cmp.difference)));
    out.push(Check::holds("torus.wonderful_dominates", A_WONDERFUL, cmp.dominated));

    let printed = fixtures::orbits()?;
    let orbits = special_orbit_count();
    let render = |d: &[(Vec<String>, Vec<String>)]| {
        let mut rows: Vec<String> =
            d.iter().map(|(j, v)| format!("{{{}}} -> {{{}}}", j.join(","), v.join(","))).collect();
        rows.sort();
        rows.join("; ")
    };
    out.push(Check::compare("torus.orbit_delta", A_ORBITS, render(&printed.delta), render(&orbits.delta)));
    out.push(Check::compare("torus.orbit_count", A_ORBITS, printed.count, orbits.count));
    Ok(out)
}

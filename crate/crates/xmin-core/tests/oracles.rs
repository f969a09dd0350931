//! Frozen values from hand computation and from the printed tables.

use xmin_core::actions::{sign_corrections, ActionKind};
use xmin_core::grassmann::{TriIndex, TriVector};
use xmin_core::octonion::{calibration_constant, BasisTag, Octonion};
use xmin_core::scalars::GaussQ;
use xmin_core::torus::{
    bb_decomposition, poincare, regularity, special_orbit_count, tilde_characters, torus_fixed_points,
    wonderful_compare, Character, OneParamSubgroup,
};
use xmin_core::xmin::{model, tangent_frames, xmin_member};
use xmin_core::XminError;

fn e(k: usize) -> Octonion {
    Octonion::e(k)
}

fn t(s: &str) -> TriIndex {
    s.parse().unwrap()
}

#[test]
fn basis_products() {
    assert_eq!(&e(1) * &e(1), -&e(0));
    assert_eq!(&e(4) * &e(4), e(0));
    assert_eq!(&e(1) * &e(2), e(3));
    assert_eq!(e(4).norm(), GaussQ::from_int(-1));
    assert_eq!(e(1).norm(), GaussQ::one());
}

#[test]
fn associator_constant_is_one_half() {
    let cal = calibration_constant();
    assert_eq!(cal.constant, Some(GaussQ::complex(1, 2, 0, 1)));
    assert_eq!(cal.associative_triples + cal.nonassociative_triples, 35);
}

#[test]
fn tilde_characters_frozen() {
    let want = [(0, 0), (-2, 0), (2, 0), (1, -1), (-1, 1), (-1, -1), (1, 1)].map(|(a, b)| Character(a, b));
    assert_eq!(tilde_characters().unwrap(), want);
}

#[test]
fn fifteen_fixed_points() {
    let want = [
        ("123", (0, 0)),
        ("125", (-3, 1)),
        ("126", (-3, -1)),
        ("134", (3, -1)),
        ("137", (3, 1)),
        ("145", (0, 0)),
        ("146", (0, -2)),
        ("157", (0, 2)),
        ("167", (0, 0)),
        ("246", (-2, -2)),
        ("256", (-4, 0)),
        ("257", (-2, 2)),
        ("346", (2, -2)),
        ("347", (4, 0)),
        ("357", (2, 2)),
    ];
    let got: Vec<(TriIndex, Character)> = torus_fixed_points().unwrap().iter().map(|p| (p.index, p.character)).collect();
    let want: Vec<(TriIndex, Character)> = want.iter().map(|(s, (a, b))| (t(s), Character(*a, *b))).collect();
    assert_eq!(got, want);
}

#[test]
fn smooth_everywhere() {
    for f in tangent_frames() {
        assert_eq!((f.jacobian_rank, f.vectors.len()), (4, 8), "at {}", f.point.index);
    }
}

#[test]
fn tangent_weights_at_123_and_357() {
    let cells = bb_decomposition(OneParamSubgroup::new(10, 1)).unwrap();
    let sorted = |p: &str| {
        let mut w = cells.iter().find(|c| c.point.index == t(p)).unwrap().weights.clone();
        w.sort();
        w
    };
    assert_eq!(sorted("123"), vec![-31, -29, -11, -9, 9, 11, 29, 31]);
    assert_eq!(sorted("357"), vec![-40, -31, -20, -11, -11, -2, 9, 18]);
    assert_eq!(sorted("125"), vec![-11, -2, 9, 11, 20, 29, 29, 31]);
}

#[test]
fn poincare_is_independent_of_the_chamber() {
    let want = vec![1, 1, 2, 2, 3, 2, 2, 1, 1];
    for (c, d) in [(10, 1), (100, 1), (7, 3), (-10, -1), (1, 10)] {
        assert_eq!(poincare(OneParamSubgroup::new(c, d)).unwrap(), want, "({c},{d})");
    }
}

#[test]
fn irregular_subgroup_names_the_character() {
    match regularity(OneParamSubgroup::new(1, 1)) {
        Err(XminError::Irregular { .. }) => {}
        other => panic!("expected an irregularity error, got {other:?}"),
    }
    let msg = regularity(OneParamSubgroup::new(1, 1)).unwrap_err().to_string();
    assert!(msg.contains("(1,-1)"), "{msg}");
}

#[test]
fn wonderful_difference() {
    let w = wonderful_compare().unwrap();
    assert_eq!(w.difference, vec![0, 1, 2, 2, 2, 2, 2, 1, 0]);
    assert!(w.dominated);
}

#[test]
fn three_orbits() {
    let o = special_orbit_count();
    assert_eq!(o.count, 3);
    assert_eq!(o.delta.len(), 4);
}

#[test]
fn seven_independent_equations() {
    let m = model();
    assert_eq!(m.covectors_e.len(), 7);
    let w0 = TriVector::basis_vector(BasisTag::E, t("123"));
    let e146 = TriVector::basis_vector(BasisTag::E, t("146"));
    assert!(xmin_member(&w0).unwrap());
    assert!(!xmin_member(&e146).unwrap());
}

#[test]
fn printed_left_fixed_point_needs_one_sign() {
    let i = GaussQ::i();
    let printed = TriVector::from_terms(
        BasisTag::E,
        [(t("346"), GaussQ::from_int(-1)), (t("347"), i.clone()), (t("356"), -&i), (t("357"), GaussQ::one())],
    );
    assert!(!xmin_member(&printed).unwrap());
    assert_eq!(sign_corrections(ActionKind::Left, &printed).unwrap(), vec![t("356")]);
}

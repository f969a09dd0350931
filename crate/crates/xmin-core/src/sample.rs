//! Seeded generators of small-height exact test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::{act_on_plane, ActionKind, Sl2Element};
use crate::grassmann::{plucker, Plane3, TriIndex, TriVector};
use crate::octonion::{cross, BasisTag, Octonion};
use crate::scalars::{GaussQ, Matrix};
use crate::torus::torus_matrix_e;

pub type SampleRng = ChaCha8Rng;

/// Independent generator for `stream` under a common seed.
pub fn rng(seed: u64, stream: u64) -> SampleRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// `a + bi` with numerators in [-3, 3] and denominators in [1, 3].
pub fn gauss(r: &mut SampleRng) -> GaussQ {
    let mut part = || (r.gen_range(-3..=3), r.gen_range(1..=3));
    let (a, b) = part();
    let (c, d) = part();
    GaussQ::complex(a, b, c, d)
}

pub fn nonzero_gauss(r: &mut SampleRng) -> GaussQ {
    loop {
        let g = gauss(r);
        if !g.is_zero() {
            return g;
        }
    }
}

pub fn octonion(r: &mut SampleRng) -> Octonion {
    Octonion::new(BasisTag::E, std::array::from_fn(|_| gauss(r)))
}

/// Random element of 𝕀 in the E basis.
pub fn imaginary(r: &mut SampleRng) -> Octonion {
    let c: [GaussQ; 7] = std::array::from_fn(|_| gauss(r));
    Octonion::imaginary(BasisTag::E, c).expect("seven coordinates")
}

pub fn matrix(r: &mut SampleRng, rows: usize, cols: usize) -> Matrix<GaussQ> {
    Matrix::from_fn(rows, cols, |_, _| gauss(r))
}

/// Random 3-plane of ℂ⁷, resampled until the spanning matrix has rank 3.
pub fn plane(r: &mut SampleRng, basis: BasisTag) -> Plane3 {
    loop {
        if let Ok(p) = Plane3::new(basis, matrix(r, 3, 7)) {
            return p;
        }
    }
}

pub fn decomposable(r: &mut SampleRng) -> TriVector {
    plucker(&plane(r, BasisTag::E))
}

/// Random nonzero element of Λ³ℂ⁷.
pub fn trivector(r: &mut SampleRng) -> TriVector {
    loop {
        let w = TriVector::from_coords(BasisTag::E, (0..35).map(|_| gauss(r)).collect()).expect("35 coordinates");
        if !w.is_zero() {
            return w;
        }
    }
}

/// `span(x, y, x×y)` for random `x, y ∈ 𝕀`; associative whenever it has rank 3.
pub fn associative_plane(r: &mut SampleRng) -> Plane3 {
    loop {
        let x = imaginary(r);
        let y = imaginary(r);
        let z = cross(&x, &y).expect("imaginary");
        let rows: Vec<Vec<GaussQ>> =
            [x, y, z].iter().map(|o| o.imag_coords().expect("imaginary").to_vec()).collect();
        if let Ok(p) = Plane3::new(BasisTag::E, Matrix::from_rows(rows).expect("3x7")) {
            return p;
        }
    }
}

/// Image of `t_{λ,μ}` on the rows of `p`, for `p` in the E basis.
pub fn torus_act(lam: &GaussQ, mu: &GaussQ, p: &Plane3) -> Plane3 {
    let m = torus_matrix_e().map(|f| f.eval(&[lam.clone(), mu.clone()]).expect("nonzero torus parameters"));
    let rows = p.rows().matmul(&m.transpose()).expect("3x7 times 7x7");
    Plane3::new(BasisTag::E, rows).expect("the torus acts invertibly")
}

/// Small nonzero torus parameter.
fn torus_parameter(r: &mut SampleRng) -> GaussQ {
    const CHOICES: [(i64, i64, i64, i64); 8] =
        [(2, 1, 0, 1), (-2, 1, 0, 1), (1, 2, 0, 1), (-1, 1, 0, 1), (0, 1, 1, 1), (0, 1, -1, 1), (1, 1, 1, 1), (3, 1, 0, 1)];
    let (a, b, c, d) = CHOICES[r.gen_range(0..CHOICES.len())];
    GaussQ::complex(a, b, c, d)
}

/// `(1 u; 0 1)` or `(1 0; u 1)` with `u` of small height.
fn unipotent(r: &mut SampleRng) -> Sl2Element {
    let u = gauss(r);
    if r.gen_bool(0.5) {
        Sl2Element::unipotent(u)
    } else {
        Sl2Element::new([GaussQ::one(), GaussQ::zero(), u, GaussQ::one()]).expect("determinant one")
    }
}

/// An associative plane moved by one to three random unipotent steps of the two SL₂ actions
/// and torus elements. The starting plane is U₀ or `span(x, y, x×y)`; W₀ would stay fixed.
pub fn orbit_plane(r: &mut SampleRng) -> Plane3 {
    let mut p = if r.gen_bool(0.5) {
        Plane3::coordinate(BasisTag::E, TriIndex::new(1, 6, 7).expect("valid"))
    } else {
        associative_plane(r)
    };
    for _ in 0..r.gen_range(1..=3) {
        p = match r.gen_range(0..3) {
            0 => act_on_plane(ActionKind::Diag, &unipotent(r), &p).expect("E basis plane"),
            1 => act_on_plane(ActionKind::Left, &unipotent(r), &p).expect("E basis plane"),
            _ => {
                let (lam, mu) = (torus_parameter(r), torus_parameter(r));
                torus_act(&lam, &mu, &p)
            }
        };
    }
    p
}

/// `(1 a; 0 1)(1 0; b 1)(s 0; 0 s⁻¹)`.
pub fn sl2(r: &mut SampleRng) -> Sl2Element {
    let a = gauss(r);
    let b = gauss(r);
    let s = nonzero_gauss(r);
    let si = s.inv().expect("nonzero");
    let one = GaussQ::one();
    let m1 = [one.clone(), a, GaussQ::zero(), one.clone()];
    let m2 = [one.clone(), GaussQ::zero(), b, one];
    let m3 = [s, GaussQ::zero(), GaussQ::zero(), si];
    Sl2Element::new(mul2(&mul2(&m1, &m2), &m3)).expect("determinant one")
}

pub(crate) fn mul2(x: &[GaussQ; 4], y: &[GaussQ; 4]) -> [GaussQ; 4] {
    [
        &(&x[0] * &y[0]) + &(&x[1] * &y[2]),
        &(&x[0] * &y[1]) + &(&x[1] * &y[3]),
        &(&x[2] * &y[0]) + &(&x[3] * &y[2]),
        &(&x[2] * &y[1]) + &(&x[3] * &y[3]),
    ]
}

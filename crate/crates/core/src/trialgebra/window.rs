use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::chevalley::{h_alpha, x_alpha, y_alpha};
use crate::error::{Error, Result};
use crate::exact_linalg::{
    cross, det3, dot, outer, unit, vadd, vneg, vscale, vsub, vzero, Mat, Scalar, Vector,
};
use crate::orthogonal::Bivector;

/// `(M, c, u, u*) ∈ sl₃ ⊕ h ⊕ (C³)³ ⊕ ((C³)*)³`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WindowElement {
    #[serde(rename = "M")]
    pub m: Mat,
    pub c: [Scalar; 3],
    pub u: [Vector; 3],
    pub ustar: [Vector; 3],
}

/// A vector of C⁴ ⊕ (C⁴)* in window form `(v, a, b, v*)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowVector {
    pub v: Vector,
    pub a: Scalar,
    pub b: Scalar,
    pub vstar: Vector,
}

impl WindowVector {
    pub fn zero() -> WindowVector {
        WindowVector { v: vzero(3), a: Scalar::zero(), b: Scalar::zero(), vstar: vzero(3) }
    }

    pub fn to_c8(&self) -> Vector {
        eta(&self.v, &self.a, &self.b, &self.vstar)
    }

    /// Inverse of [`eta`].
    pub fn from_c8(x: &[Scalar]) -> WindowVector {
        WindowVector {
            v: vec![x[1].clone(), x[2].clone(), -&x[7]],
            a: x[3].clone(),
            b: x[4].clone(),
            vstar: vec![x[6].clone(), x[5].clone(), -&x[0]],
        }
    }
}

/// `z₁e₂ + z₂e₃ − z₃e₈ + a·e₄ + b·e₅ − w₃e₁ + w₂e₆ + w₁e₇`.
pub fn eta(z: &[Scalar], a: &Scalar, b: &Scalar, w: &[Scalar]) -> Vector {
    let mut v = vzero(8);
    v[1] += z[0].clone();
    v[2] += z[1].clone();
    v[7] -= z[2].clone();
    v[3] += a.clone();
    v[4] += b.clone();
    v[0] -= w[2].clone();
    v[5] += w[1].clone();
    v[6] += w[0].clone();
    v
}

/// Ordered bases of V_i; coordinate j of u_i multiplies entry j.
pub fn v_basis(i: usize) -> [Bivector; 3] {
    match i {
        0 => [x_alpha(4).neg(), x_alpha(0), y_alpha(7)],
        1 => [x_alpha(5), x_alpha(2), y_alpha(8)],
        2 => [x_alpha(6), x_alpha(3), y_alpha(9)],
        _ => panic!("V index out of range"),
    }
}

/// Bases of V_i* listed from the highest weight down. Natural dual coordinate j of
/// u_i* multiplies entry 2−j, so the highest weight vector goes to e₃*.
pub fn vstar_basis(i: usize) -> [Bivector; 3] {
    match i {
        0 => [x_alpha(7), y_alpha(0), y_alpha(4).neg()],
        1 => [x_alpha(8), y_alpha(2), y_alpha(5)],
        2 => [x_alpha(9), y_alpha(3), y_alpha(6)],
        _ => panic!("V* index out of range"),
    }
}

/// `c₁H_{α₁} + c₂H_{α₃} + c₃H_{α₄}`.
pub fn phi_h(c: &[Scalar; 3]) -> Bivector {
    h_alpha(1).scale(&c[0]).add(&h_alpha(3).scale(&c[1])).add(&h_alpha(4).scale(&c[2]))
}

fn e3(i: usize) -> Vector {
    unit(3, i)
}

impl WindowElement {
    pub fn zero() -> WindowElement {
        WindowElement {
            m: Mat::zeros(3, 3),
            c: [Scalar::zero(), Scalar::zero(), Scalar::zero()],
            u: [vzero(3), vzero(3), vzero(3)],
            ustar: [vzero(3), vzero(3), vzero(3)],
        }
    }

    pub fn with_m(m: Mat) -> WindowElement {
        WindowElement { m, ..WindowElement::zero() }
    }

    pub fn with_c(c: [Scalar; 3]) -> WindowElement {
        WindowElement { c, ..WindowElement::zero() }
    }

    pub fn with_u(i: usize, v: Vector) -> WindowElement {
        let mut w = WindowElement::zero();
        w.u[i] = v;
        w
    }

    pub fn with_ustar(i: usize, v: Vector) -> WindowElement {
        let mut w = WindowElement::zero();
        w.ustar[i] = v;
        w
    }

    pub fn check(&self) -> Result<()> {
        if self.m.shape() != (3, 3) || self.u.iter().chain(&self.ustar).any(|v| v.len() != 3) {
            return Err(Error::ConstraintViolated("shape"));
        }
        if !self.m.trace().is_zero() {
            return Err(Error::ConstraintViolated("tr M = 0"));
        }
        if !(&(&self.c[0] + &self.c[1]) + &self.c[2]).is_zero() {
            return Err(Error::ConstraintViolated("c1 + c2 + c3 = 0"));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self == &WindowElement::zero()
    }

    /// The 30 raw coordinates: M row-major, c, u, u*.
    pub fn flatten(&self) -> Vector {
        let mut out = self.m.entries().to_vec();
        out.extend(self.c.iter().cloned());
        for v in self.u.iter().chain(&self.ustar) {
            out.extend(v.iter().cloned());
        }
        out
    }

    pub fn from_flat(x: &[Scalar]) -> WindowElement {
        assert_eq!(x.len(), 30, "window elements have 30 raw coordinates");
        let v = |k: usize| x[k..k + 3].to_vec();
        WindowElement {
            m: Mat::from_fn(3, 3, |i, j| x[3 * i + j].clone()),
            c: [x[9].clone(), x[10].clone(), x[11].clone()],
            u: [v(12), v(15), v(18)],
            ustar: [v(21), v(24), v(27)],
        }
    }

    pub fn add(&self, o: &WindowElement) -> WindowElement {
        WindowElement::from_flat(&vadd(&self.flatten(), &o.flatten()))
    }

    pub fn sub(&self, o: &WindowElement) -> WindowElement {
        WindowElement::from_flat(&vsub(&self.flatten(), &o.flatten()))
    }

    pub fn scale(&self, k: &Scalar) -> WindowElement {
        WindowElement::from_flat(&vscale(&self.flatten(), k))
    }

    /// Whether c₁, c₂, c₃ are pairwise distinct.
    pub fn is_regular(&self) -> bool {
        self.c[0] != self.c[1] && self.c[1] != self.c[2] && self.c[0] != self.c[2]
    }

    pub fn random<R: Rng>(rng: &mut R, range: i64) -> WindowElement {
        let mut r = || Scalar::from_int(rng.gen_range(-range..=range));
        let mut m = Mat::from_fn(3, 3, |_, _| r());
        m[(2, 2)] = -(&m[(0, 0)] + &m[(1, 1)]);
        let c0 = r();
        let c1 = r();
        let c2 = -(&c0 + &c1);
        let u = [vec![r(), r(), r()], vec![r(), r(), r()], vec![r(), r(), r()]];
        let ustar = [vec![r(), r(), r()], vec![r(), r(), r()], vec![r(), r(), r()]];
        WindowElement { m, c: [c0, c1, c2], u, ustar }
    }
}

/// The 28-element coordinate basis: off-diagonal E_ij, two diagonal sl₃
/// elements, two h elements, then the nine u and nine u* unit vectors.
pub fn window_basis() -> Vec<WindowElement> {
    let mut out = Vec::with_capacity(28);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m = Mat::zeros(3, 3);
                m[(i, j)] = Scalar::one();
                out.push(WindowElement::with_m(m));
            }
        }
    }
    for d in [[1, -1, 0], [0, 1, -1]] {
        out.push(WindowElement::with_m(Mat::diag(&d.map(Scalar::from_int))));
    }
    for d in [[1, -1, 0], [0, 1, -1]] {
        out.push(WindowElement::with_c(d.map(Scalar::from_int)));
    }
    for i in 0..3 {
        for j in 0..3 {
            out.push(WindowElement::with_u(i, e3(j)));
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            out.push(WindowElement::with_ustar(i, e3(j)));
        }
    }
    out
}

fn phi_unchecked(w: &WindowElement) -> Bivector {
    let z = vzero(3);
    let zero = Scalar::zero();
    let mut out = phi_h(&w.c);
    for i in 0..3 {
        for j in 0..3 {
            let x = &w.m[(i, j)];
            if !x.is_zero() {
                let t = Bivector::wedge(&eta(&e3(i), &zero, &zero, &z), &eta(&z, &zero, &zero, &e3(j)));
                out = out.add(&t.scale(x));
            }
        }
    }
    for i in 0..3 {
        let vb = v_basis(i);
        let sb = vstar_basis(i);
        for j in 0..3 {
            if !w.u[i][j].is_zero() {
                out = out.add(&vb[j].scale(&w.u[i][j]));
            }
            if !w.ustar[i][j].is_zero() {
                out = out.add(&sb[2 - j].scale(&w.ustar[i][j]));
            }
        }
    }
    out
}

pub fn phi_window(w: &WindowElement) -> Result<Bivector> {
    w.check()?;
    Ok(phi_unchecked(w))
}

fn phi_inverse_matrix() -> &'static Mat {
    static INV: OnceLock<Mat> = OnceLock::new();
    INV.get_or_init(|| {
        let cols: Vec<Vector> = window_basis().iter().map(|w| phi_unchecked(w).coeff_vector().to_vec()).collect();
        Mat::from_cols(&cols, 28).inverse().expect("φ is an isomorphism")
    })
}

pub fn phi_window_inv(b: &Bivector) -> WindowElement {
    assert_eq!(b.m(), 4, "window coordinates live on so8");
    let coords = phi_inverse_matrix().mul_vec(b.coeff_vector());
    let basis = window_basis();
    let mut acc = vzero(30);
    for (k, x) in coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        acc = vadd(&acc, &vscale(&basis[k].flatten(), x));
    }
    WindowElement::from_flat(&acc)
}

pub fn window_bracket(a: &WindowElement, b: &WindowElement) -> Result<WindowElement> {
    a.check()?;
    b.check()?;
    let third = Scalar::new(1, 3);
    let two = Scalar::from_int(2);
    let d: Vec<Scalar> = (0..3).map(|i| dot(&a.ustar[i], &b.u[i]) - dot(&b.ustar[i], &a.u[i])).collect();

    let mut m = a.m.commutator(&b.m);
    for i in 0..3 {
        m = &m + &(&outer(&a.u[i], &b.ustar[i]) - &outer(&b.u[i], &a.ustar[i]));
    }
    let t = d.iter().sum::<Scalar>() * &third;
    m = &m + &Mat::scalar_matrix(3, &t);

    let c: [Scalar; 3] = std::array::from_fn(|i| {
        let s: Scalar = d.iter().sum();
        &s * &third - &d[i]
    });

    let mut u: [Vector; 3] = Default::default();
    let mut us: [Vector; 3] = Default::default();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mut x = vsub(&a.m.mul_vec(&b.u[i]), &b.m.mul_vec(&a.u[i]));
        x = vadd(&x, &vsub(&cross(&a.ustar[j], &b.ustar[k]), &cross(&b.ustar[j], &a.ustar[k])));
        x = vadd(&x, &vsub(&vscale(&b.u[i], &(&two * &a.c[i])), &vscale(&a.u[i], &(&two * &b.c[i]))));
        u[i] = x;

        let mut y = vsub(&a.m.vec_mul(&b.ustar[i]), &b.m.vec_mul(&a.ustar[i]));
        y = vadd(&y, &vsub(&cross(&a.u[j], &b.u[k]), &cross(&b.u[j], &a.u[k])));
        y = vadd(&y, &vsub(&vscale(&b.ustar[i], &(&two * &a.c[i])), &vscale(&a.ustar[i], &(&two * &b.c[i]))));
        us[i] = vneg(&y);
    }
    Ok(WindowElement { m, c, u, ustar: us })
}

/// The linear action on `C⁴ ⊕ (C⁴)*` induced through η; matches the bivector operator.
pub fn window_act_vector(a: &WindowElement, x: &WindowVector) -> Result<WindowVector> {
    a.check()?;
    let c1 = &a.c[0];
    let d = &a.c[2] - &a.c[1];
    let mut v = vsub(&a.m.mul_vec(&x.v), &vscale(&x.v, c1));
    v = vadd(&v, &vadd(&vscale(&a.u[1], &x.a), &vscale(&a.u[2], &x.b)));
    v = vadd(&v, &cross(&x.vstar, &a.ustar[0]));
    let na = dot(&a.ustar[1], &x.v) + &d * &x.a - dot(&x.vstar, &a.u[2]);
    let nb = dot(&a.ustar[2], &x.v) - &d * &x.b - dot(&x.vstar, &a.u[1]);
    let mut vs = vadd(&vneg(&a.m.vec_mul(&x.vstar)), &vscale(&x.vstar, c1));
    vs = vsub(&vs, &vadd(&vscale(&a.ustar[2], &x.a), &vscale(&a.ustar[1], &x.b)));
    vs = vsub(&vs, &cross(&x.v, &a.u[0]));
    Ok(WindowVector { v, a: na, b: nb, vstar: vs })
}

/// A permutation of {0,1,2}: `images[i] = σ(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Perm3 {
    pub images: [usize; 3],
}

impl Perm3 {
    pub fn new(images: [usize; 3]) -> Option<Perm3> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm3 { images })
    }

    pub fn identity() -> Perm3 {
        Perm3 { images: [0, 1, 2] }
    }

    /// The transposition of two 1-based labels.
    pub fn transposition(a: usize, b: usize) -> Perm3 {
        let mut images = [0, 1, 2];
        images.swap(a - 1, b - 1);
        Perm3 { images }
    }

    /// s₁ = (23).
    pub fn s1() -> Perm3 {
        Perm3::transposition(2, 3)
    }

    /// s₂ = (13).
    pub fn s2() -> Perm3 {
        Perm3::transposition(1, 3)
    }

    pub fn all() -> [Perm3; 6] {
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]].map(|images| Perm3 { images })
    }

    pub fn inverse(&self) -> Perm3 {
        let mut images = [0; 3];
        for i in 0..3 {
            images[self.images[i]] = i;
        }
        Perm3 { images }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3 { images: std::array::from_fn(|i| self.images[other.images[i]]) }
    }
}

/// Fixes M and moves subscripts: the new i-th slot holds the old σ⁻¹(i)-th one.
pub fn triality(sigma: &Perm3, a: &WindowElement) -> WindowElement {
    let inv = sigma.inverse();
    WindowElement {
        m: a.m.clone(),
        c: std::array::from_fn(|i| a.c[inv.images[i]].clone()),
        u: std::array::from_fn(|i| a.u[inv.images[i]].clone()),
        ustar: std::array::from_fn(|i| a.ustar[inv.images[i]].clone()),
    }
}

/// `½Tr(AB)` in window coordinates.
pub fn window_killing(a: &WindowElement, b: &WindowElement) -> Scalar {
    let mut k = (&a.m * &b.m).trace();
    for i in 0..3 {
        k += dot(&a.ustar[i], &b.u[i]) + dot(&b.ustar[i], &a.u[i]);
        k += Scalar::from_int(2) * &a.c[i] * &b.c[i];
    }
    k
}

/// `½Tr(A[B,C])` in window coordinates.
pub fn cartan_three_form(a: &WindowElement, b: &WindowElement, c: &WindowElement) -> Scalar {
    let mut r = (&a.m * &b.m.commutator(&c.m)).trace();
    for p in Perm3::all() {
        let [i, j, k] = p.images;
        r += det3(&a.ustar[i], &b.ustar[j], &c.ustar[k]) - det3(&a.u[i], &b.u[j], &c.u[k]);
    }
    let two = Scalar::from_int(2);
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        for i in 0..3 {
            r += &two * &x.c[i] * (dot(&z.ustar[i], &y.u[i]) - dot(&y.ustar[i], &z.u[i]));
            r += dot(&z.ustar[i], &x.m.mul_vec(&y.u[i])) - dot(&y.ustar[i], &x.m.mul_vec(&z.u[i]));
        }
    }
    r
}

/// `(A∧v)(w₁,w₂) = det(Aw₁, v, w₂) + det(Aw₂, v, w₁)` as a symmetric 3×3 matrix.
fn wedge_sym(a: &Mat, v: &[Scalar]) -> Mat {
    Mat::from_fn(3, 3, |i, j| {
        det3(&a.mul_vec(&e3(i)), v, &e3(j)) + det3(&a.mul_vec(&e3(j)), v, &e3(i))
    })
}

/// `(x·y)(w₁,w₂) = x(w₁)y(w₂) + x(w₂)y(w₁)`.
fn sym_product(x: &[Scalar], y: &[Scalar]) -> Mat {
    &outer(x, y) + &outer(y, x)
}

/// The named equation families characterizing the orbit closure, each evaluated.
pub fn membership_equations(w: &WindowElement) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            if a != b {
                out.push((format!("u{}*(u{}) = 0", a + 1, b + 1), dot(&w.ustar[a], &w.u[b]).is_zero()));
            }
        }
    }
    for r in 0..3 {
        let (i, j, k) = (r, (r + 1) % 3, (r + 2) % 3);
        let (ci, cj, ck) = (&w.c[i], &w.c[j], &w.c[k]);
        let lab = |s: &str| s.replace('i', &(i + 1).to_string()).replace('j', &(j + 1).to_string()).replace('k', &(k + 1).to_string());
        out.push((lab("ui*(ui) = -(ci-cj)(ci-ck)"), dot(&w.ustar[i], &w.u[i]) == -((ci - cj) * (ci - ck))));
        out.push((lab("ui x uj = (ci-cj) uk*"), cross(&w.u[i], &w.u[j]) == vscale(&w.ustar[k], &(ci - cj))));
        out.push((lab("ui* x uj* = (ci-cj) uk"), cross(&w.ustar[i], &w.ustar[j]) == vscale(&w.u[k], &(ci - cj))));
        let mk = &w.m - &Mat::scalar_matrix(3, ck);
        let eq_u = &wedge_sym(&mk, &w.u[k]) + &sym_product(&w.ustar[i], &w.ustar[j]);
        out.push((lab("(M-ck)^uk + ui*.uj* = 0"), eq_u.is_zero()));
        let eq_s = &wedge_sym(&mk.transpose(), &w.ustar[k]) + &sym_product(&w.u[i], &w.u[j]);
        out.push((lab("(M-ck)^uk* + ui.uj = 0"), eq_s.is_zero()));
        let mut q = &mk * &mk;
        q = &q + &outer(&w.u[i], &w.ustar[i]);
        q = &q + &outer(&w.u[j], &w.ustar[j]);
        q = &q - &outer(&w.u[k], &w.ustar[k]);
        q = &q + &Mat::scalar_matrix(3, &dot(&w.ustar[k], &w.u[k]));
        out.push((lab("(M-ck)^2 + ui(x)ui* + uj(x)uj* - uk(x)uk* + uk*(uk) = 0"), q.is_zero()));
    }
    out
}

pub fn min_membership_window(w: &WindowElement) -> bool {
    membership_equations(w).iter().all(|(_, ok)| *ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{q, s};
    use crate::orthogonal::{biv_to_matrix, bracket, in_min_closure, pairing};

    fn ints(v: [i64; 3]) -> Vector {
        v.into_iter().map(s).collect()
    }

    #[test]
    fn eta_examples() {
        let z = vzero(3);
        assert_eq!(eta(&e3(0), &s(0), &s(0), &z), unit(8, 1));
        assert_eq!(eta(&z, &s(0), &s(0), &e3(2)), vneg(&unit(8, 0)));
    }

    #[test]
    fn eta_is_isometry_on_basis() {
        let mut basis = Vec::new();
        for i in 0..3 {
            basis.push(WindowVector { v: e3(i), ..WindowVector::zero() });
            basis.push(WindowVector { vstar: e3(i), ..WindowVector::zero() });
        }
        basis.push(WindowVector { a: s(1), ..WindowVector::zero() });
        basis.push(WindowVector { b: s(1), ..WindowVector::zero() });
        let natural = |x: &WindowVector, y: &WindowVector| {
            dot(&x.v, &y.vstar) + dot(&y.v, &x.vstar) + &x.a * &y.b + &x.b * &y.a
        };
        for x in &basis {
            assert_eq!(WindowVector::from_c8(&x.to_c8()), *x);
            for y in &basis {
                assert_eq!(pairing(&x.to_c8(), &y.to_c8()).unwrap(), natural(x, y));
            }
        }
    }

    #[test]
    fn phi_examples() {
        let mut e12 = Mat::zeros(3, 3);
        e12[(0, 1)] = s(1);
        assert_eq!(phi_window(&WindowElement::with_m(e12.clone())).unwrap(), x_alpha(1));
        let c = WindowElement::with_c([s(1), s(0), s(-1)]);
        assert_eq!(phi_window(&c).unwrap(), h_alpha(1).sub(&h_alpha(4)));
        assert_eq!(phi_window(&WindowElement::with_u(0, e3(0))).unwrap(), x_alpha(4).neg());
        assert_eq!(phi_window_inv(&x_alpha(1)), WindowElement::with_m(e12));
    }

    #[test]
    fn phi_rejects_constraint_violations() {
        let bad = WindowElement::with_c([s(1), s(0), s(0)]);
        assert!(matches!(phi_window(&bad), Err(Error::ConstraintViolated(_))));
        let bad = WindowElement::with_m(Mat::identity(3));
        assert!(matches!(phi_window(&bad), Err(Error::ConstraintViolated(_))));
    }

    #[test]
    fn h4_preimage() {
        let w = phi_window_inv(&h_alpha(4));
        assert_eq!(w.m, Mat::diag(&[q(-1, 3), q(2, 3), q(-1, 3)]));
        assert_eq!(w.c, [q(-1, 3), q(-1, 3), q(2, 3)]);
        assert_eq!(&w.c[2] - &w.c[1], s(1));
    }

    #[test]
    fn roundtrip_on_chevalley_table() {
        for e in super::super::chevalley::ChevalleyTable::new().entries {
            let w = phi_window_inv(&e.element);
            w.check().unwrap();
            assert_eq!(phi_window(&w).unwrap(), e.element);
        }
    }

    #[test]
    fn bracket_reduces_to_sl3() {
        let mut e12 = Mat::zeros(3, 3);
        e12[(0, 1)] = s(1);
        let e21 = e12.transpose();
        let c = window_bracket(&WindowElement::with_m(e12.clone()), &WindowElement::with_m(e21.clone())).unwrap();
        assert_eq!(c, WindowElement::with_m(e12.commutator(&e21)));
        let a = WindowElement::with_u(1, ints([1, 2, 3]));
        assert!(window_bracket(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn bracket_matches_commutator_on_basis() {
        let basis = window_basis();
        for a in &basis {
            for b in &basis {
                let lhs = phi_window(&window_bracket(a, b).unwrap()).unwrap();
                let rhs = bracket(&phi_window(a).unwrap(), &phi_window(b).unwrap());
                assert_eq!(lhs, rhs, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn action_matches_operator_on_basis() {
        let mut xs = Vec::new();
        for k in 0..8 {
            xs.push(WindowVector::from_c8(&unit(8, k)));
        }
        for a in window_basis() {
            let op = biv_to_matrix(&phi_window(&a).unwrap());
            for x in &xs {
                let lhs = window_act_vector(&a, x).unwrap().to_c8();
                assert_eq!(lhs, op.mul_vec(&x.to_c8()));
            }
        }
    }

    #[test]
    fn c_only_action() {
        let a = WindowElement::with_c([s(2), s(-3), s(1)]);
        let x = WindowVector { v: ints([1, 2, 3]), a: s(5), b: s(7), vstar: ints([1, -1, 2]) };
        let y = window_act_vector(&a, &x).unwrap();
        assert_eq!(y.v, vscale(&x.v, &s(-2)));
        assert_eq!(y.a, s(20));
        assert_eq!(y.b, s(-28));
        assert_eq!(y.vstar, vscale(&x.vstar, &s(2)));
    }

    #[test]
    fn killing_examples() {
        let a = WindowElement::with_c([s(1), s(0), s(-1)]);
        assert_eq!(window_killing(&a, &a), s(4));
        let m = WindowElement::with_m(Mat::diag(&[s(1), s(-1), s(0)]));
        assert_eq!(window_killing(&m, &WindowElement::with_u(0, ints([1, 1, 1]))), s(0));
    }

    #[test]
    fn killing_is_half_trace_on_basis() {
        let basis = window_basis();
        for a in &basis {
            for b in &basis {
                let tr = (&biv_to_matrix(&phi_window(a).unwrap()) * &biv_to_matrix(&phi_window(b).unwrap())).trace();
                assert_eq!(window_killing(a, b), tr * q(1, 2));
            }
        }
    }

    #[test]
    fn triality_moves_alpha3_to_alpha4() {
        let w = phi_window_inv(&x_alpha(2));
        assert_eq!(phi_window(&triality(&Perm3::s1(), &w)).unwrap(), x_alpha(3));
    }

    #[test]
    fn perm_laws() {
        let r = Perm3::s2().compose(&Perm3::s1());
        assert_ne!(r, Perm3::identity());
        assert_eq!(r.compose(&r).compose(&r), Perm3::identity());
        assert_eq!(Perm3::new([0, 0, 1]), None);
    }

    #[test]
    fn membership_examples() {
        assert!(min_membership_window(&WindowElement::zero()));
        let e12 = phi_window_inv(&Bivector::basis(4, 1, 2));
        assert!(min_membership_window(&e12));
        assert!(in_min_closure(&phi_window(&e12).unwrap()));
        assert!(!min_membership_window(&WindowElement::with_c([s(1), s(0), s(-1)])));
    }
}

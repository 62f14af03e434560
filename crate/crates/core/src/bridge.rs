//! The linear symplectic isomorphism F from the n = 3 quiver data to
//! `Hom(C², C⁸)`, and the SL₂-reduction side of it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{Mat, Scalar, Vector};
use crate::orthogonal::{biv_to_matrix_with, kks_lambda, pairing, Bivector, Convention};
use crate::quiver::QuiverPoint;
use crate::trialgebra::{eta, WindowVector};

/// `f ∈ Hom(C², C⁸)`; column j is `f(e_{j+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IsoMap {
    pub matrix: Mat,
}

impl IsoMap {
    pub fn new(matrix: Mat) -> Result<IsoMap> {
        if matrix.shape() != (8, 2) {
            return Err(Error::DimMismatch { left: matrix.rows() * matrix.cols(), right: 16 });
        }
        Ok(IsoMap { matrix })
    }

    pub fn zero() -> IsoMap {
        IsoMap { matrix: Mat::zeros(8, 2) }
    }

    pub fn from_columns(f1: &[Scalar], f2: &[Scalar]) -> IsoMap {
        IsoMap { matrix: Mat::from_cols(&[f1.to_vec(), f2.to_vec()], 8) }
    }

    pub fn col(&self, j: usize) -> Vector {
        self.matrix.col(j)
    }

    pub fn add(&self, o: &IsoMap) -> IsoMap {
        IsoMap { matrix: &self.matrix + &o.matrix }
    }
}

/// `F = η∘F₁∘F₀`. F₀ packs `(α₂ ⊕ −β₁, β₂ ⊕ α₁)`, F₁ swaps the second
/// column with the negated second row of the dual block.
#[allow(non_snake_case)]
pub fn F(p: &QuiverPoint) -> Result<IsoMap> {
    if p.n != 3 {
        return Err(Error::WrongRank(p.n));
    }
    let top = p.alpha(2).vstack(&-p.beta(1));
    let bot = p.beta(2).hstack(p.alpha(1));
    let z = |j: usize| top.col(j)[..3].to_vec();
    let w = |i: usize| bot.row(i)[..3].to_vec();
    let neg = |v: Vector| v.into_iter().map(|x| -x).collect::<Vector>();
    let c1 = eta(&z(0), &top[(3, 0)], &-&bot[(1, 3)], &neg(w(1)));
    let c2 = eta(&z(1), &top[(3, 1)], &bot[(0, 3)], &w(0));
    Ok(IsoMap::from_columns(&c1, &c2))
}

#[allow(non_snake_case)]
pub fn F_inv(f: &IsoMap) -> QuiverPoint {
    let x1 = WindowVector::from_c8(&f.col(0));
    let x2 = WindowVector::from_c8(&f.col(1));
    let alpha2 = Mat::from_fn(3, 2, |i, j| if j == 0 { x1.v[i].clone() } else { x2.v[i].clone() });
    let beta1 = Mat::from_rows(vec![vec![-&x1.a, -&x2.a]]);
    let beta2 = Mat::from_rows(vec![x2.vstar.clone(), x1.vstar.iter().map(|x| -x).collect()]);
    let alpha1 = Mat::from_rows(vec![vec![x2.b.clone()], vec![-&x1.b]]);
    QuiverPoint { n: 3, alpha: vec![alpha1, alpha2], beta: vec![beta1, beta2] }
}

fn pair(v: &[Scalar], w: &[Scalar]) -> Scalar {
    pairing(v, w).expect("columns live in C^8")
}

/// `(f(e₁), g(e₂)) − (f(e₂), g(e₁))`.
pub fn omega1(f: &IsoMap, g: &IsoMap) -> Scalar {
    pair(&f.col(0), &g.col(1)) - pair(&f.col(1), &g.col(0))
}

/// `[[(f₁,f₂), −(f₁,f₁)], [(f₂,f₂), −(f₁,f₂)]]`; satisfies
/// `μ(f∘g⁻¹) = g⁻ᵀ μ(f) gᵀ`.
pub fn mu_sl2(f: &IsoMap) -> Mat {
    let (a, b) = (f.col(0), f.col(1));
    let p12 = pair(&a, &b);
    Mat::from_rows(vec![vec![p12.clone(), -pair(&a, &a)], vec![pair(&b, &b), -p12]])
}

pub fn in_n1(f: &IsoMap) -> bool {
    mu_sl2(f).is_zero()
}

/// `f(e₁) ∧ f(e₂)`.
pub fn to_bivector(f: &IsoMap) -> Bivector {
    Bivector::wedge(&f.col(0), &f.col(1))
}

fn check_unimodular(g: &Mat) -> Result<Mat> {
    if g.shape() != (2, 2) || !g.det()?.is_one() {
        return Err(Error::NotUnimodular);
    }
    g.inverse()
}

/// `f ↦ f∘g⁻¹`.
pub fn sl2_act(g: &Mat, f: &IsoMap) -> Result<IsoMap> {
    let gi = check_unimodular(g)?;
    Ok(IsoMap { matrix: &f.matrix * &gi })
}

/// The vertex-2 factor of the quiver action: `α₁ ↦ gα₁`, `β₁ ↦ β₁g⁻¹`, `α₂ ↦ α₂g⁻¹`, `β₂ ↦ gβ₂`.
pub fn sl2_act_quiver(g: &Mat, p: &QuiverPoint) -> Result<QuiverPoint> {
    if p.n != 3 {
        return Err(Error::WrongRank(p.n));
    }
    let gi = check_unimodular(g)?;
    Ok(QuiverPoint {
        n: 3,
        alpha: vec![g * p.alpha(1), p.alpha(2) * &gi],
        beta: vec![p.beta(1) * &gi, g * p.beta(2)],
    })
}

/// `λ′_{v₁⊕v₂}(x₁⊕x₂) = (v₁,x₂) − (v₂,x₁)`.
pub fn lambda_prime(f: &IsoMap, x: &IsoMap) -> Scalar {
    pair(&f.col(0), &x.col(1)) - pair(&f.col(1), &x.col(0))
}

/// The tangent vector `x_i = (w₁,v_i)w₂ − (w₂,v_i)w₁` induced at `f` by `w₁∧w₂`.
pub fn tangent_lift(f: &IsoMap, dir: &Bivector) -> IsoMap {
    let op = biv_to_matrix_with(dir, Convention::Printed);
    IsoMap { matrix: &op * &f.matrix }
}

/// `2((w₁,v₂)(v₁,w₂) − (w₂,v₂)(v₁,w₁))`.
pub fn kks_closed_form(v1: &[Scalar], v2: &[Scalar], w1: &[Scalar], w2: &[Scalar]) -> Scalar {
    Scalar::from_int(2) * (pair(w1, v2) * pair(v1, w2) - pair(w2, v2) * pair(v1, w1))
}

/// Checks `λ′_f(tangent_lift(f, w₁∧w₂)) = κ(f₁∧f₂, w₁∧w₂)` and the closed form.
pub fn kks_pullback_holds(f: &IsoMap, w1: &[Scalar], w2: &[Scalar]) -> bool {
    let dir = Bivector::wedge(w1, w2);
    let lp = lambda_prime(f, &tangent_lift(f, &dir));
    lp == kks_lambda(&to_bivector(f), &dir) && lp == kks_closed_form(&f.col(0), &f.col(1), w1, w2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{s, unit};
    use crate::orthogonal::in_min_closure;
    use crate::quiver::{in_n, sample_n, symplectic_form};
    use crate::rng;

    fn e(i: usize) -> Vector {
        unit(8, i - 1)
    }

    #[test]
    fn zero_maps_to_zero() {
        assert_eq!(F(&QuiverPoint::zero(3)).unwrap(), IsoMap::zero());
        assert_eq!(F(&QuiverPoint::zero(4)), Err(Error::WrongRank(4)));
    }

    #[test]
    fn inverse_on_samples() {
        let mut r = rng(1);
        for _ in 0..20 {
            let p = QuiverPoint::random(&mut r, 3, 3);
            assert_eq!(F_inv(&F(&p).unwrap()), p);
        }
    }

    #[test]
    fn omega_and_mu_examples() {
        let f = IsoMap::from_columns(&e(1), &vec![s(0); 8]);
        let g = IsoMap::from_columns(&vec![s(0); 8], &e(8));
        assert_eq!(omega1(&f, &g), s(1));
        assert_eq!(omega1(&f, &f), s(0));
        let a = IsoMap::from_columns(&e(1), &e(2));
        assert!(mu_sl2(&a).is_zero() && in_n1(&a));
        let b = IsoMap::from_columns(&e(1), &e(8));
        assert_eq!(mu_sl2(&b), Mat::from_ints(&[[1, 0], [0, -1]]));
        assert!(!in_n1(&b));
        assert_eq!(to_bivector(&a), Bivector::basis(4, 1, 2));
    }

    #[test]
    fn pullback_of_omega_on_basis() {
        for i in 0..16 {
            for j in 0..16 {
                let p = QuiverPoint::from_flat(3, &unit(16, i));
                let q = QuiverPoint::from_flat(3, &unit(16, j));
                assert_eq!(omega1(&F(&p).unwrap(), &F(&q).unwrap()), symplectic_form(&p, &q).unwrap());
            }
        }
    }

    #[test]
    fn n_maps_into_n1_and_orbit() {
        let mut r = rng(3);
        for _ in 0..10 {
            let p = sample_n(&mut r, 3);
            assert!(in_n(&p).is_ok());
            let f = F(&p).unwrap();
            assert!(in_n1(&f));
            assert!(in_min_closure(&to_bivector(&f)));
        }
    }

    #[test]
    fn unimodular_required() {
        let g = Mat::from_ints(&[[2, 0], [0, 1]]);
        assert_eq!(sl2_act(&g, &IsoMap::zero()), Err(Error::NotUnimodular));
    }
}

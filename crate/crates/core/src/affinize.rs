//! The map Ξ from N_surj to `SL_n ×_U b`, its inverse construction, the
//! principal sl₂-triples and the C*-action.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{Mat, Scalar};
use crate::quiver::{in_n, is_surjective_part, QuiverPoint};

/// `[g, X] ∈ SL_n ×_U b`, with `X` upper triangular and traceless.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BPoint {
    pub g: Mat,
    #[serde(rename = "X")]
    pub x: Mat,
}

impl BPoint {
    pub fn new(g: Mat, x: Mat) -> Result<BPoint> {
        if !g.is_square() || g.shape() != x.shape() {
            return Err(Error::DimMismatch { left: g.rows(), right: x.rows() });
        }
        if !g.det()?.is_one() {
            return Err(Error::NotUnimodular);
        }
        if !x.is_upper_triangular() || !x.trace().is_zero() {
            return Err(Error::NotTriangular);
        }
        Ok(BPoint { g, x })
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }
}

/// `X − (1/n)Tr(X)·Id`.
pub fn gamma_proj(x: &Mat) -> Result<Mat> {
    if !x.is_square() {
        return Err(Error::NonSquare { rows: x.rows(), cols: x.cols() });
    }
    let n = x.rows();
    let t = x.trace() * Scalar::new(1, n as i64);
    Ok(x - &Mat::scalar_matrix(n, &t))
}

/// `β⁰_k = (0 | Id_k)`, a k×(k+1) matrix.
pub fn beta0(k: usize) -> Mat {
    Mat::from_fn(k, k + 1, |i, j| if j == i + 1 { Scalar::one() } else { Scalar::zero() })
}

/// `(g₁, …, g_n)` with `g_kβ_kg_{k+1}⁻¹ = β⁰_k` and `det g_k = 1`.
///
/// `g_{k+1}` stacks a first row `r` on top of `g_kβ_k`; `r` is the first
/// standard basis row that makes the matrix invertible, rescaled to det 1.
pub fn normalize_betas(p: &QuiverPoint) -> Result<Vec<Mat>> {
    if !is_surjective_part(p) {
        return Err(Error::NotSurjective);
    }
    let mut gs = vec![Mat::identity(1)];
    for k in 1..p.n {
        let lower = &gs[k - 1] * p.beta(k);
        let mut found = None;
        for j in 0..=k {
            let mut r = vec![Scalar::zero(); k + 1];
            r[j] = Scalar::one();
            let m = Mat::row_vector(&r).vstack(&lower);
            let d = m.det()?;
            if !d.is_zero() {
                r[j] = d.recip();
                found = Some(Mat::row_vector(&r).vstack(&lower));
                break;
            }
        }
        gs.push(found.ok_or(Error::NotSurjective)?);
    }
    Ok(gs)
}

/// `Ξ(α, β) = [g_n⁻¹, Γ(g_n α_{n−1}β_{n−1} g_n⁻¹)]`.
pub fn xi(p: &QuiverPoint) -> Result<BPoint> {
    in_n(p)?;
    let gs = normalize_betas(p)?;
    let n = p.n;
    let gn = &gs[n - 1];
    let gi = gn.inverse()?;
    let top = if n >= 2 { p.alpha(n - 1) * p.beta(n - 1) } else { Mat::zeros(1, 1) };
    let x = gamma_proj(&(&(gn * &top) * &gi))?;
    if !x.is_upper_triangular() {
        return Err(Error::NotTriangular);
    }
    Ok(BPoint { g: gi, x })
}

/// The point of N_surj with `Ξ = [g, X]`, built from the top vertex down.
pub fn lift_from_bpoint(b: &BPoint) -> Result<QuiverPoint> {
    let n = b.n();
    if n < 2 {
        return Err(Error::BadIndex(format!("rank {n}")));
    }
    let gi = b.g.inverse()?;
    let x11 = b.x[(0, 0)].clone();
    let shifted = &b.x - &Mat::scalar_matrix(n, &x11);
    let iota = beta0(n - 1).transpose();
    let mut p = QuiverPoint::zero(n);
    p.alpha[n - 2] = &(&b.g * &shifted) * &iota;
    p.beta[n - 2] = &beta0(n - 1) * &gi;
    let mut y = &beta0(n - 1) * &(&shifted * &iota);
    for k in (1..n - 1).rev() {
        let lam = y[(0, 0)].clone();
        let rest = &y - &Mat::scalar_matrix(k + 1, &lam);
        if !rest.col(0).iter().all(Scalar::is_zero) {
            return Err(Error::NotTriangular);
        }
        p.alpha[k - 1] = rest.block(0, 1, k + 1, k);
        p.beta[k - 1] = beta0(k);
        y = p.alpha(k).block(1, 0, k, k);
    }
    Ok(p)
}

/// Equality in `SL_n ×_U b`: `u = b.g⁻¹·a.g` unitriangular and `b.X = u·a.X·u⁻¹`.
pub fn bpoint_eq(a: &BPoint, b: &BPoint) -> bool {
    if a.g.shape() != b.g.shape() {
        return false;
    }
    let Ok(bgi) = b.g.inverse() else {
        return false;
    };
    let u = &bgi * &a.g;
    if !u.is_unitriangular_upper() {
        return false;
    }
    let Ok(ui) = u.inverse() else {
        return false;
    };
    b.x == &(&u * &a.x) * &ui
}

/// `(e_k, h_k, f_k)` with `h_k = diag(k−1, k−3, …)` and `f_k` subdiagonal `j(k−j)`.
pub fn principal_triple(k: usize) -> Result<(Mat, Mat, Mat)> {
    if k < 2 {
        return Err(Error::BadIndex(format!("principal triple needs k >= 2, got {k}")));
    }
    let e = Mat::from_fn(k, k, |i, j| if j == i + 1 { Scalar::one() } else { Scalar::zero() });
    let h = Mat::diag(&(0..k).map(|i| Scalar::from_int(k as i64 - 1 - 2 * i as i64)).collect::<Vec<_>>());
    let f = Mat::from_fn(k, k, |i, j| {
        if i == j + 1 {
            Scalar::from_int((i * (k - i)) as i64)
        } else {
            Scalar::zero()
        }
    });
    Ok((e, h, f))
}

/// `γ(z) = z^{h_n} = diag(z^{n−1}, z^{n−3}, …, z^{−(n−1)})`.
pub fn gamma_z(z: &Scalar, n: usize) -> Result<Mat> {
    if z.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(Mat::diag(&(0..n).map(|i| z.pow(n as i32 - 1 - 2 * i as i32)).collect::<Vec<_>>()))
}

/// `z·(α_k, β_k) = (zα_k, zβ_k)`.
pub fn cstar_act(z: &Scalar, p: &QuiverPoint) -> Result<QuiverPoint> {
    if z.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(p.scale(z))
}

/// `z·[g, X] = [g·γ(z), z²·Ad_{γ(z⁻¹)}X]`.
pub fn cstar_on_bpoint(z: &Scalar, b: &BPoint) -> Result<BPoint> {
    let n = b.n();
    let gz = gamma_z(z, n)?;
    let gzi = gamma_z(&z.recip(), n)?;
    let x = (&(&gzi * &b.x) * &gz).scale(&(z * z));
    Ok(BPoint { g: &b.g * &gz, x })
}

/// `Ξ(z·p) ~ z·Ξ(p)`.
pub fn cstar_compatible(z: &Scalar, p: &QuiverPoint) -> Result<bool> {
    let lhs = xi(&cstar_act(z, p)?)?;
    let rhs = cstar_on_bpoint(z, &xi(p)?)?;
    Ok(bpoint_eq(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{q, s};
    use crate::quiver::{h_act, random_h, sample_n};
    use crate::rng;

    fn jordan3() -> Mat {
        Mat::from_ints(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    }

    #[test]
    fn gamma_proj_examples() {
        assert!(gamma_proj(&Mat::identity(3)).unwrap().is_zero());
        assert_eq!(gamma_proj(&Mat::diag(&[s(1), s(0), s(0)])).unwrap(), Mat::diag(&[q(2, 3), q(-1, 3), q(-1, 3)]));
        assert!(gamma_proj(&Mat::zeros(2, 3)).is_err());
    }

    #[test]
    fn normalize_identity_case() {
        let mut p = QuiverPoint::zero(4);
        for k in 1..4 {
            p.beta[k - 1] = beta0(k);
        }
        for (k, g) in normalize_betas(&p).unwrap().iter().enumerate() {
            assert_eq!(g, &Mat::identity(k + 1));
        }
    }

    #[test]
    fn normalize_property() {
        let p = sample_n(&mut rng(4), 4);
        let gs = normalize_betas(&p).unwrap();
        for k in 1..4 {
            assert!(gs[k].det().unwrap().is_one());
            assert_eq!(&(&gs[k - 1] * p.beta(k)) * &gs[k].inverse().unwrap(), beta0(k));
        }
    }

    #[test]
    fn lift_of_principal_nilpotent() {
        let b = BPoint::new(Mat::identity(3), jordan3()).unwrap();
        let p = lift_from_bpoint(&b).unwrap();
        assert_eq!(p.alpha(2), &Mat::from_ints(&[[1, 0], [0, 1], [0, 0]]));
        assert_eq!(in_n(&p).unwrap(), vec![s(0), s(0)]);
        assert!(bpoint_eq(&xi(&p).unwrap(), &b));
    }

    #[test]
    fn zero_x() {
        let b = BPoint::new(Mat::identity(3), Mat::zeros(3, 3)).unwrap();
        let p = lift_from_bpoint(&b).unwrap();
        assert!(bpoint_eq(&xi(&p).unwrap(), &b));
    }

    #[test]
    fn bpoint_eq_examples() {
        let x = jordan3();
        let a = BPoint { g: Mat::identity(3), x: x.clone() };
        assert!(bpoint_eq(&a, &a));
        let u = Mat::from_ints(&[[1, 2, -1], [0, 1, 3], [0, 0, 1]]);
        let ui = u.inverse().unwrap();
        let b = BPoint { g: ui.clone(), x: &(&u * &x) * &ui };
        assert!(bpoint_eq(&a, &b));
        let mut e12 = Mat::zeros(3, 3);
        e12[(0, 1)] = s(1);
        let mut e13 = Mat::zeros(3, 3);
        e13[(0, 2)] = s(1);
        assert!(!bpoint_eq(&BPoint { g: Mat::identity(3), x: e12 }, &BPoint { g: Mat::identity(3), x: e13 }));
    }

    #[test]
    fn triples() {
        let (e, h, f) = principal_triple(2).unwrap();
        assert_eq!(e, Mat::from_ints(&[[0, 1], [0, 0]]));
        assert_eq!(h, Mat::from_ints(&[[1, 0], [0, -1]]));
        assert_eq!(f, Mat::from_ints(&[[0, 0], [1, 0]]));
        for k in 2..=6 {
            let (e, h, f) = principal_triple(k).unwrap();
            assert_eq!(e.commutator(&f), h);
            assert_eq!(h.commutator(&e), e.scale(&s(2)));
            assert_eq!(h.commutator(&f), f.scale(&s(-2)));
        }
        assert!(principal_triple(1).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_z(&s(2), 3).unwrap(), Mat::diag(&[s(4), s(1), q(1, 4)]));
        assert_eq!(gamma_z(&s(1), 4).unwrap(), Mat::identity(4));
        assert!(gamma_z(&s(3), 5).unwrap().det().unwrap().is_one());
        assert_eq!(gamma_z(&s(0), 2), Err(Error::ZeroParameter));
    }

    #[test]
    fn xi_is_h_invariant_and_cstar_compatible() {
        let mut r = rng(21);
        let p = sample_n(&mut r, 4);
        let h = random_h(&mut r, 4);
        assert!(bpoint_eq(&xi(&h_act(&h, &p).unwrap()).unwrap(), &xi(&p).unwrap()));
        for z in [2, 3, 5] {
            assert!(cstar_compatible(&s(z), &p).unwrap());
        }
    }
}

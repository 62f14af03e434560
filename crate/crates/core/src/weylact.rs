//! The Z_k correspondences, their constructive partners S_k, and the
//! comparison of the resulting Weyl action with triality at n = 3.
//!
//! Volume convention: with `vol_j = e₁∧…∧e_j`, the condition on
//! `C^k → C^{k+1} ⊕ C^{k−1} → C^k` reads `det[pre | out_k(B′)] = 1`, where `pre`
//! is any solution of `in_k(B)·pre = Id_k`.

use serde::{Deserialize, Serialize};

use crate::affinize::{bpoint_eq, xi};
use crate::bridge::{to_bivector, F};
use crate::error::{Error, Result};
use crate::exact_linalg::{vneg, vscale, Mat, Scalar};
use crate::quiver::{in_n, QuiverPoint};
use crate::trialgebra::{min_membership_window, phi_window, triality, Perm3, WindowElement};

/// A checked member of Z_k with the preimage used for the volume condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZkWitness {
    pub k: usize,
    #[serde(rename = "B")]
    pub b: QuiverPoint,
    #[serde(rename = "Bprime")]
    pub bprime: QuiverPoint,
    pub preimage: Mat,
}

fn check_k(p: &QuiverPoint, k: usize) -> Result<()> {
    if k == 0 || k >= p.n {
        return Err(Error::BadIndex(format!("vertex {k} outside 1..{}", p.n)));
    }
    Ok(())
}

/// `out_k = [α_k ; β_{k−1}]` (2k×k) and `in_k = [β_k | −α_{k−1}]` (k×2k).
pub fn out_in(p: &QuiverPoint, k: usize) -> Result<(Mat, Mat)> {
    check_k(p, k)?;
    let (a, b) = (p.alpha(k), p.beta(k));
    let out = Mat::from_fn(2 * k, k, |i, j| if i <= k { a[(i, j)].clone() } else { p.beta(k - 1)[(i - k - 1, j)].clone() });
    let inn = Mat::from_fn(k, 2 * k, |i, j| if j <= k { b[(i, j)].clone() } else { -&p.alpha(k - 1)[(i, j - k - 1)] });
    Ok((out, inn))
}

/// One solution of `in·X = Id_k`, or `NotSurjective`.
pub fn preimage(inn: &Mat) -> Result<Mat> {
    inn.solve(&Mat::identity(inn.rows())).map_err(|_| Error::NotSurjective)
}

fn lambda(p: &QuiverPoint, k: usize) -> Result<Scalar> {
    Ok(in_n(p)?[k - 1].clone())
}

/// Conditions (1)–(3) of the Z_k correspondence, with a chosen preimage.
pub fn zk_check_with(b: &QuiverPoint, bp: &QuiverPoint, k: usize, pre: Option<&Mat>) -> Result<bool> {
    check_k(b, k)?;
    if b.n != bp.n {
        return Err(Error::DimMismatch { left: b.n, right: bp.n });
    }
    let lam = lambda(b, k)?;
    in_n(bp)?;
    for j in 1..b.n {
        if (j + 1 < k || j > k) && (b.alpha(j) != bp.alpha(j) || b.beta(j) != bp.beta(j)) {
            return Ok(false);
        }
    }
    let (out, inn) = out_in(b, k)?;
    let (outp, innp) = out_in(bp, k)?;
    if outp.rank() != k || inn.rank() != k || !(&inn * &outp).is_zero() {
        return Ok(false);
    }
    let pre = match pre {
        Some(x) => x.clone(),
        None => preimage(&inn)?,
    };
    if &inn * &pre != Mat::identity(k) || !pre.hstack(&outp).det()?.is_one() {
        return Ok(false);
    }
    Ok(&outp * &innp == &(&out * &inn) - &Mat::scalar_matrix(2 * k, &lam))
}

pub fn zk_check(b: &QuiverPoint, bp: &QuiverPoint, k: usize) -> Result<bool> {
    zk_check_with(b, bp, k, None)
}

/// Reassembles `B′` from new `out_k`, `in_k` blocks.
fn with_blocks(b: &QuiverPoint, k: usize, outp: &Mat, innp: &Mat) -> QuiverPoint {
    let mut p = b.clone();
    p.alpha[k - 1] = outp.block(0, 0, k + 1, k);
    p.beta[k - 1] = innp.block(0, 0, k, k + 1);
    if k > 1 {
        p.beta[k - 2] = outp.block(k + 1, 0, k - 1, k);
        p.alpha[k - 2] = -&innp.block(0, k + 1, k, k - 1);
    }
    p
}

/// `S_k(B)` with the kernel basis of `in_k(B)` first multiplied by `h`.
pub fn sk_partner_with(b: &QuiverPoint, k: usize, h: &Mat) -> Result<QuiverPoint> {
    check_k(b, k)?;
    let lam = lambda(b, k)?;
    let (out, inn) = out_in(b, k)?;
    if inn.rank() != k {
        return Err(Error::NotSurjective);
    }
    let ker = Mat::from_cols(&inn.kernel_basis(), 2 * k);
    let mut outp = &ker * h;
    let pre = preimage(&inn)?;
    let d = pre.hstack(&outp).det()?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    let col: Vec<Scalar> = vscale(&outp.col(0), &d.recip());
    for i in 0..2 * k {
        outp[(i, 0)] = col[i].clone();
    }
    let target = &(&out * &inn) - &Mat::scalar_matrix(2 * k, &lam);
    let innp = outp.solve(&target)?;
    Ok(with_blocks(b, k, &outp, &innp))
}

pub fn sk_partner(b: &QuiverPoint, k: usize) -> Result<QuiverPoint> {
    sk_partner_with(b, k, &Mat::identity(k))
}

/// The preimage of a regular window element on the orbit closure, with
/// `λ = (c₂−c₃, c₃−c₁)` and `to_bivector(F(B)) = φ(A)`.
pub fn lift_regular(a: &WindowElement) -> Result<QuiverPoint> {
    a.check()?;
    if !a.is_regular() {
        return Err(Error::DegenerateC);
    }
    if !min_membership_window(a) {
        return Err(Error::NotInOrbit);
    }
    let d = &a.c[2] - &a.c[1];
    let di = d.recip();
    let alpha1 = Mat::col_vector(&[Scalar::zero(), d]);
    let beta1 = Mat::from_ints(&[[0, -1]]);
    let alpha2 = Mat::from_cols(&[a.u[2].clone(), vscale(&a.u[1], &di)], 3);
    let beta2 = Mat::from_rows(vec![vneg(&vscale(&a.ustar[2], &di)), a.ustar[1].clone()]);
    Ok(QuiverPoint { n: 3, alpha: vec![alpha1, alpha2], beta: vec![beta1, beta2] })
}

/// The explicit Z₁ partner of the lift: `α₁′ = (1,0)ᵀ`, `β₁′ = (c₃−c₂, 0)`.
pub fn s1_witness(a: &WindowElement) -> Result<QuiverPoint> {
    let mut b = lift_regular(a)?;
    b.alpha[0] = Mat::from_ints(&[[1], [0]]);
    b.beta[0] = Mat::row_vector(&[&a.c[2] - &a.c[1], Scalar::zero()]);
    Ok(b)
}

/// The Z₂ partner: the lift of `triality(s₂, A)`.
pub fn s2_witness(a: &WindowElement) -> Result<QuiverPoint> {
    lift_regular(&triality(&Perm3::s2(), a))
}

/// Generator label to vertex and permutation.
pub fn generator(k: usize) -> Result<Perm3> {
    match k {
        1 => Ok(Perm3::s1()),
        2 => Ok(Perm3::s2()),
        _ => Err(Error::BadIndex(format!("generator s{k}"))),
    }
}

/// Itemized result of one Weyl-versus-triality comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GgCheck {
    pub k: usize,
    pub in_zk: bool,
    pub bivector_matches: bool,
    pub partner_matches: bool,
}

impl GgCheck {
    pub fn holds(&self) -> bool {
        self.in_zk && self.bivector_matches && self.partner_matches
    }
}

pub fn gg_check(a: &WindowElement, k: usize) -> Result<GgCheck> {
    let sigma = generator(k)?;
    let b = lift_regular(a)?;
    let bp = if k == 1 { s1_witness(a)? } else { s2_witness(a)? };
    let in_zk = zk_check(&b, &bp, k)?;
    let bivector_matches = to_bivector(&F(&bp)?) == phi_window(&triality(&sigma, a))?;
    let partner_matches = bpoint_eq(&xi(&sk_partner(&b, k)?)?, &xi(&bp)?);
    Ok(GgCheck { k, in_zk, bivector_matches, partner_matches })
}

pub fn gg_equals_triality(a: &WindowElement, k: usize) -> Result<bool> {
    gg_check(a, k).map(|c| c.holds())
}

/// Applies `S_{k₁}, S_{k₂}, …` in order.
pub fn apply_word(b: &QuiverPoint, word: &[usize]) -> Result<QuiverPoint> {
    word.iter().try_fold(b.clone(), |p, &k| sk_partner(&p, k))
}

/// `S₁S₂S₁(B)` and `S₂S₁S₂(B)` agree in the quotient.
pub fn braid_holds(b: &QuiverPoint) -> Result<bool> {
    let x = apply_word(b, &[1, 2, 1])?;
    let y = apply_word(b, &[2, 1, 2])?;
    Ok(bpoint_eq(&xi(&x)?, &xi(&y)?))
}

//! The type-A double quiver `C ⇄ C² ⇄ … ⇄ Cⁿ`, its H-action and moment map,
//! the variety N cut out by `β_kα_k − α_{k−1}β_{k−1} = λ_k·Id`, and the
//! flag-sequence inequality behind the dimension count of N.
//!
//! Vertex indices `k` are 1-based: `alpha(k): C^k → C^{k+1}`, `beta(k): C^{k+1} → C^k`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{vadd, vscale, Mat, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverPoint {
    pub n: usize,
    pub alpha: Vec<Mat>,
    pub beta: Vec<Mat>,
}

impl QuiverPoint {
    pub fn zero(n: usize) -> QuiverPoint {
        QuiverPoint {
            n,
            alpha: (1..n).map(|k| Mat::zeros(k + 1, k)).collect(),
            beta: (1..n).map(|k| Mat::zeros(k, k + 1)).collect(),
        }
    }

    /// Checks the shape ladder.
    pub fn new(n: usize, alpha: Vec<Mat>, beta: Vec<Mat>) -> Result<QuiverPoint> {
        let p = QuiverPoint { n, alpha, beta };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        let m = self.n.saturating_sub(1);
        if self.alpha.len() != m || self.beta.len() != m {
            return Err(Error::DimMismatch { left: m, right: self.alpha.len().max(self.beta.len()) });
        }
        for k in 1..self.n {
            if self.alpha(k).shape() != (k + 1, k) || self.beta(k).shape() != (k, k + 1) {
                return Err(Error::BadIndex(format!("shape at vertex {k}")));
            }
        }
        Ok(())
    }

    pub fn alpha(&self, k: usize) -> &Mat {
        &self.alpha[k - 1]
    }

    pub fn beta(&self, k: usize) -> &Mat {
        &self.beta[k - 1]
    }

    /// `α_{k−1}β_{k−1}` as a k×k matrix, zero for k = 1.
    pub fn inner_product_at(&self, k: usize) -> Mat {
        if k <= 1 {
            Mat::zeros(k, k)
        } else {
            self.alpha(k - 1) * self.beta(k - 1)
        }
    }

    /// Total number of coordinates, `Σ 2k(k+1)`.
    pub fn dim(&self) -> usize {
        (1..self.n).map(|k| 2 * k * (k + 1)).sum()
    }

    /// Coordinates: every α_k row-major, then every β_k row-major.
    pub fn flatten(&self) -> Vector {
        let mut out = Vec::with_capacity(self.dim());
        for m in self.alpha.iter().chain(&self.beta) {
            out.extend(m.entries().iter().cloned());
        }
        out
    }

    pub fn from_flat(n: usize, x: &[Scalar]) -> QuiverPoint {
        let mut p = QuiverPoint::zero(n);
        let mut pos = 0;
        for m in p.alpha.iter_mut().chain(p.beta.iter_mut()) {
            let (r, c) = m.shape();
            *m = Mat::from_fn(r, c, |i, j| x[pos + i * c + j].clone());
            pos += r * c;
        }
        assert_eq!(pos, x.len(), "coordinate count mismatch");
        p
    }

    pub fn add(&self, o: &QuiverPoint) -> QuiverPoint {
        QuiverPoint::from_flat(self.n, &vadd(&self.flatten(), &o.flatten()))
    }

    pub fn scale(&self, z: &Scalar) -> QuiverPoint {
        QuiverPoint::from_flat(self.n, &vscale(&self.flatten(), z))
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize, range: i64) -> QuiverPoint {
        let x: Vector = (0..QuiverPoint::zero(n).dim()).map(|_| Scalar::from_int(rng.gen_range(-range..=range))).collect();
        QuiverPoint::from_flat(n, &x)
    }
}

/// `(g₂, …, g_{n−1})`, each of determinant one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HElement {
    pub gs: Vec<Mat>,
}

impl HElement {
    pub fn identity(n: usize) -> HElement {
        HElement { gs: (2..n).map(Mat::identity).collect() }
    }

    pub fn new(gs: Vec<Mat>) -> Result<HElement> {
        for (i, g) in gs.iter().enumerate() {
            if g.shape() != (i + 2, i + 2) {
                return Err(Error::BadIndex(format!("g_{} has shape {:?}", i + 2, g.shape())));
            }
            if !g.det()?.is_one() {
                return Err(Error::NotUnimodular);
            }
        }
        Ok(HElement { gs })
    }

    /// `g_k`, with `g_1 = g_n = Id`.
    pub fn g(&self, k: usize) -> Mat {
        if k >= 2 && k - 2 < self.gs.len() {
            self.gs[k - 2].clone()
        } else {
            Mat::identity(k)
        }
    }

    pub fn compose(&self, o: &HElement) -> HElement {
        HElement { gs: self.gs.iter().zip(&o.gs).map(|(a, b)| a * b).collect() }
    }

    pub fn inverse(&self) -> HElement {
        HElement { gs: self.gs.iter().map(|g| g.inverse().expect("unimodular")).collect() }
    }
}

/// Random unimodular matrix as a product of elementary unipotents.
pub fn random_sl<R: Rng>(rng: &mut R, k: usize, steps: usize, range: i64) -> Mat {
    let mut g = Mat::identity(k);
    if k < 2 {
        return g;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..k);
        let mut j = rng.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        let mut e = Mat::identity(k);
        e[(i, j)] = Scalar::from_int(rng.gen_range(-range..=range));
        g = &g * &e;
    }
    g
}

pub fn random_h<R: Rng>(rng: &mut R, n: usize) -> HElement {
    HElement { gs: (2..n).map(|k| random_sl(rng, k, 2 * k, 2)).collect() }
}

/// Traceless parts of `α_{k−1}β_{k−1} − β_kα_k` for k = 2..n−1.
pub fn moment_map(p: &QuiverPoint) -> Vec<Mat> {
    (2..p.n)
        .map(|k| {
            let d = &p.inner_product_at(k) - &(p.beta(k) * p.alpha(k));
            let t = d.trace() * Scalar::new(1, k as i64);
            &d - &Mat::scalar_matrix(k, &t)
        })
        .collect()
}

/// The λ-vector `(λ_1, …, λ_{n−1})`, or `NotInN`.
pub fn in_n(p: &QuiverPoint) -> Result<Vec<Scalar>> {
    (1..p.n)
        .map(|k| {
            let d = &(p.beta(k) * p.alpha(k)) - &p.inner_product_at(k);
            d.as_scalar().ok_or(Error::NotInN)
        })
        .collect()
}

/// Whether every `β_k` has full rank k.
pub fn is_surjective_part(p: &QuiverPoint) -> bool {
    (1..p.n).all(|k| p.beta(k).rank() == k)
}

/// `Σ_k Tr(q.β_k·p.α_k) − Tr(p.β_k·q.α_k)`.
pub fn symplectic_form(p: &QuiverPoint, q: &QuiverPoint) -> Result<Scalar> {
    if p.n != q.n {
        return Err(Error::DimMismatch { left: p.n, right: q.n });
    }
    Ok((1..p.n)
        .map(|k| (q.beta(k) * p.alpha(k)).trace() - (p.beta(k) * q.alpha(k)).trace())
        .sum())
}

/// `α_k ↦ g_{k+1}α_k g_k⁻¹`, `β_k ↦ g_kβ_k g_{k+1}⁻¹`.
pub fn h_act(h: &HElement, p: &QuiverPoint) -> Result<QuiverPoint> {
    if h.gs.len() != p.n.saturating_sub(2) {
        return Err(Error::DimMismatch { left: h.gs.len(), right: p.n.saturating_sub(2) });
    }
    let g: Vec<Mat> = (1..=p.n).map(|k| h.g(k)).collect();
    let ginv: Vec<Mat> = g.iter().map(|m| m.inverse()).collect::<Result<_>>()?;
    let alpha = (1..p.n).map(|k| &(&g[k] * p.alpha(k)) * &ginv[k - 1]).collect();
    let beta = (1..p.n).map(|k| &(&g[k - 1] * p.beta(k)) * &ginv[k]).collect();
    Ok(QuiverPoint { n: p.n, alpha, beta })
}

fn random_mat<R: Rng>(rng: &mut R, r: usize, c: usize, range: i64) -> Mat {
    Mat::from_fn(r, c, |_, _| Scalar::from_int(rng.gen_range(-range..=range)))
}

/// A random point of N with surjective β's: injective α's are drawn and the
/// β's solved vertex by vertex from `β_kα_k = α_{k−1}β_{k−1} + λ_k·Id`.
pub fn sample_n<R: Rng>(rng: &mut R, n: usize) -> QuiverPoint {
    assert!(n >= 2, "sample_n needs n >= 2");
    'retry: loop {
        let mut p = QuiverPoint::zero(n);
        for k in 1..n {
            let a = random_mat(rng, k + 1, k, 2);
            if a.rank() < k {
                continue 'retry;
            }
            let lambda = Scalar::from_int(rng.gen_range(-3..=3));
            let rhs = &p.inner_product_at(k) + &Mat::scalar_matrix(k, &lambda);
            let at = a.transpose();
            let Ok(x) = at.solve(&rhs.transpose()) else {
                continue 'retry;
            };
            let mut b = x.transpose();
            let ker = at.kernel_basis();
            let r: Vector = (0..k).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect();
            b = &b + &(&Mat::col_vector(&r) * &Mat::row_vector(&ker[0]));
            p.alpha[k - 1] = a;
            p.beta[k - 1] = b;
        }
        if is_surjective_part(&p) {
            return p;
        }
    }
}

/// Outcome of the exhaustive flag-sequence enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagReport {
    pub n: usize,
    pub sequences: usize,
    /// `Σ_{k=1}^{n−1} k`.
    pub bound: usize,
    pub maximum: usize,
    /// `(m_1, …, m_{n−1})` attaining the maximum.
    pub maximizers: Vec<Vec<usize>>,
    pub holds: bool,
}

/// Enumerates `0 ≤ m_1 ≤ … ≤ m_{n−1} ≤ n` with `m_k ≤ k` and evaluates
/// `Σ m_k(m_{k+1} − m_k)` (with `m_n = n`) against `Σ k`.
pub fn flag_report(n: usize) -> Result<FlagReport> {
    if n > 12 {
        return Err(Error::BadIndex(format!("n = {n} exceeds the enumeration bound 12")));
    }
    let bound = n * n.saturating_sub(1) / 2;
    let mut rep = FlagReport { n, sequences: 0, bound, maximum: 0, maximizers: Vec::new(), holds: true };
    let mut seq = Vec::with_capacity(n);
    enumerate(n, &mut seq, &mut rep);
    let staircase: Vec<usize> = (1..n).collect();
    rep.holds &= rep.maximum <= bound && rep.maximizers == vec![staircase];
    Ok(rep)
}

fn enumerate(n: usize, seq: &mut Vec<usize>, rep: &mut FlagReport) {
    let k = seq.len() + 1;
    if k == n || n == 0 {
        rep.sequences += 1;
        let mut full = seq.clone();
        full.push(n);
        let value: usize = (0..seq.len()).map(|i| full[i] * (full[i + 1] - full[i])).sum();
        if value > rep.maximum || rep.maximizers.is_empty() {
            rep.maximum = value;
            rep.maximizers = vec![seq.clone()];
        } else if value == rep.maximum {
            rep.maximizers.push(seq.clone());
        }
        rep.holds &= value <= rep.bound;
        return;
    }
    let lo = seq.last().copied().unwrap_or(0);
    for m in lo..=k {
        seq.push(m);
        enumerate(n, seq, rep);
        seq.pop();
    }
}

pub fn flag_inequality_check(n: usize) -> bool {
    flag_report(n).is_ok_and(|r| r.holds)
}

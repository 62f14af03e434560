//! The split orthogonal space C^{2m} with `(e_i, e_j) = δ_{i,2m+1-j}`, its
//! bivector model of so_{2m}, membership in the minimal orbit closure, the
//! Kostant quadratic forms, and the KKS pairing.
//!
//! Public index arguments are 1-based to match the usual e_1..e_{2m} labels.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_linalg::{dot, is_zero_vec, Mat, Scalar, Vector, FourVector};
use crate::trialgebra::chevalley;

/// Which overall sign turns a bivector into an operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// `v1∧v2 ↦ (u ↦ (v2,u)v1 − (v1,u)v2)`; makes the root table a Chevalley basis.
    Adopted,
    /// `v1∧v2 ↦ (u ↦ (v1,u)v2 − (v2,u)v1)`.
    Printed,
}

pub const CONVENTION: Convention = Convention::Adopted;

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Position of the 0-based pair (i<j) in lexicographic order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All 0-based pairs (i<j) of `0..n`, in the storage order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Element of Λ²C^{2m}, stored densely over the pairs i<j.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bivector {
    m: usize,
    coeffs: Vec<Scalar>,
}

impl Bivector {
    pub fn zero(m: usize) -> Bivector {
        Bivector { m, coeffs: vec![Scalar::zero(); pair_count(2 * m)] }
    }

    /// `e_i ∧ e_j`, 1-based; `i > j` gives the negated basis element.
    pub fn basis(m: usize, i: usize, j: usize) -> Bivector {
        let mut b = Bivector::zero(m);
        b.add_term(i, j, &Scalar::one());
        b
    }

    /// Sum of `c·e_i∧e_j` over integer triples `(c, i, j)`, 1-based.
    pub fn from_terms(m: usize, terms: &[(i64, usize, usize)]) -> Bivector {
        let mut b = Bivector::zero(m);
        for &(c, i, j) in terms {
            b.add_term(i, j, &Scalar::from_int(c));
        }
        b
    }

    pub fn from_coeff_vector(m: usize, coeffs: Vector) -> Bivector {
        assert_eq!(coeffs.len(), pair_count(2 * m), "wrong coefficient count");
        Bivector { m, coeffs }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    pub fn coeff_vector(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient λ_ij, 1-based, antisymmetric in (i, j).
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeff0(i - 1, j - 1)
    }

    fn coeff0(&self, i: usize, j: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim(), i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.coeffs[pair_index(self.dim(), j, i)],
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    /// Adds `x·e_i∧e_j`, 1-based.
    pub fn add_term(&mut self, i: usize, j: usize, x: &Scalar) {
        assert!(i >= 1 && j >= 1 && i <= self.dim() && j <= self.dim(), "index out of range");
        assert!(i != j, "e_i∧e_i vanishes");
        let (a, b, x) = if i < j { (i - 1, j - 1, x.clone()) } else { (j - 1, i - 1, -x) };
        let k = pair_index(self.dim(), a, b);
        self.coeffs[k] += x;
    }

    /// `v ∧ w` for vectors of length 2m.
    pub fn wedge(v: &[Scalar], w: &[Scalar]) -> Bivector {
        assert_eq!(v.len(), w.len(), "length mismatch in wedge");
        assert!(v.len().is_multiple_of(2), "odd dimension");
        let n = v.len();
        let coeffs = pairs(n).into_iter().map(|(i, j)| &v[i] * &w[j] - &v[j] * &w[i]).collect();
        Bivector { m: n / 2, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    pub fn scale(&self, x: &Scalar) -> Bivector {
        Bivector { m: self.m, coeffs: self.coeffs.iter().map(|c| c * x).collect() }
    }

    pub fn add(&self, other: &Bivector) -> Bivector {
        assert_eq!(self.m, other.m, "m mismatch");
        Bivector { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Bivector) -> Bivector {
        assert_eq!(self.m, other.m, "m mismatch");
        Bivector { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Bivector {
        self.scale(&Scalar::from_int(-1))
    }

    /// Nonzero terms as 1-based `(i, j, λ_ij)` with i<j.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        pairs(self.dim())
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| (i + 1, j + 1, c.clone()))
            .collect()
    }

    /// The antisymmetric coefficient matrix `A_ij = λ_ij`.
    pub fn coeff_matrix(&self) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |i, j| self.coeff0(i, j))
    }

    pub fn from_coeff_matrix(a: &Mat) -> Bivector {
        let n = a.rows();
        let coeffs = pairs(n).into_iter().map(|(i, j)| a[(i, j)].clone()).collect();
        Bivector { m: n / 2, coeffs }
    }

    /// Contraction with the dual basis covector `e_r*`, 1-based.
    pub fn contract(&self, r: usize) -> Vector {
        (0..self.dim()).map(|j| self.coeff0(r - 1, j)).collect()
    }

    /// `g·a` for `g ∈ GL_{2m}`, extending `g·(v∧w) = gv∧gw`.
    pub fn transform(&self, g: &Mat) -> Bivector {
        let a = self.coeff_matrix();
        Bivector::from_coeff_matrix(&(&(g * &a) * &g.transpose()))
    }
}

impl fmt::Debug for Bivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.terms();
        if t.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = t.iter().map(|(i, j, c)| format!("{c}·e{i}∧e{j}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct BivectorJson {
    m: usize,
    terms: Vec<(usize, usize, Scalar)>,
}

impl Serialize for Bivector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BivectorJson { m: self.m, terms: self.terms() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Bivector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BivectorJson::deserialize(d)?;
        let mut b = Bivector::zero(j.m);
        for (i, k, c) in j.terms {
            if i == 0 || k == 0 || i > 2 * j.m || k > 2 * j.m || i == k {
                return Err(serde::de::Error::custom("bad bivector index"));
            }
            b.add_term(i, k, &c);
        }
        Ok(b)
    }
}

pub fn pairing(v: &[Scalar], w: &[Scalar]) -> Result<Scalar> {
    if v.len() != w.len() || !v.len().is_multiple_of(2) {
        return Err(Error::DimMismatch { left: v.len(), right: w.len() });
    }
    let n = v.len();
    Ok((0..n).map(|i| &v[i] * &w[n - 1 - i]).sum())
}

fn pair_unchecked(v: &[Scalar], w: &[Scalar]) -> Scalar {
    let n = v.len();
    (0..n).map(|i| &v[i] * &w[n - 1 - i]).sum()
}

/// The operator of `a` under the adopted convention.
pub fn biv_to_matrix(a: &Bivector) -> Mat {
    biv_to_matrix_with(a, CONVENTION)
}

pub fn biv_to_matrix_with(a: &Bivector, conv: Convention) -> Mat {
    let n = a.dim();
    let mut m = Mat::zeros(n, n);
    for ((i, j), c) in pairs(n).into_iter().zip(&a.coeffs) {
        if c.is_zero() {
            continue;
        }
        m[(i, n - 1 - j)] += c.clone();
        m[(j, n - 1 - i)] -= c.clone();
    }
    match conv {
        Convention::Adopted => m,
        Convention::Printed => -m,
    }
}

/// Inverse of [`biv_to_matrix`] on pairing-skew matrices.
pub fn matrix_to_biv(a: &Mat) -> Bivector {
    let n = a.rows();
    let coeffs = pairs(n).into_iter().map(|(i, j)| a[(i, n - 1 - j)].clone()).collect();
    Bivector { m: n / 2, coeffs }
}

/// True when `(Au, w) + (u, Aw) = 0` for all u, w.
pub fn is_pairing_skew(a: &Mat) -> bool {
    let n = a.rows();
    (0..n).all(|i| (0..n).all(|j| (&a[(n - 1 - i, j)] + &a[(n - 1 - j, i)]).is_zero()))
}

pub fn bracket(a: &Bivector, b: &Bivector) -> Bivector {
    assert_eq!(a.m, b.m, "m mismatch in bracket");
    matrix_to_biv(&biv_to_matrix(a).commutator(&biv_to_matrix(b)))
}

pub fn wedge_square(a: &Bivector) -> FourVector {
    let n = a.dim();
    let mut out = FourVector::zero(n);
    let l = |i: usize, j: usize| a.coeff0(i, j);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for m in k + 1..n {
                    let v = &l(i, j) * &l(k, m) - &l(i, k) * &l(j, m) + &l(i, m) * &l(j, k);
                    out.add_term([i + 1, j + 1, k + 1, m + 1], Scalar::from_int(2) * v);
                }
            }
        }
    }
    out
}

pub fn is_decomposable(a: &Bivector) -> bool {
    wedge_square(a).is_zero()
}

pub fn is_isotropic(a: &Bivector) -> bool {
    let n = a.dim();
    let cs: Vec<Vector> = (1..=n).map(|r| a.contract(r)).collect();
    (0..n).all(|r| (r..n).all(|s| pair_unchecked(&cs[r], &cs[s]).is_zero()))
}

pub fn in_min_closure(a: &Bivector) -> bool {
    is_decomposable(a) && is_isotropic(a)
}

/// Vectors `(v1, v2)` with `a = v1 ∧ v2`.
pub fn factorize(a: &Bivector) -> Result<(Vector, Vector)> {
    if !is_decomposable(a) {
        return Err(Error::NotDecomposable);
    }
    let n = a.dim();
    let Some(((i, j), lam)) = pairs(n).into_iter().zip(&a.coeffs).find(|(_, c)| !c.is_zero()) else {
        let mut v = vec![Scalar::zero(); n];
        v[0] = Scalar::one();
        return Ok((v, vec![Scalar::zero(); n]));
    };
    let u = a.contract(i + 1);
    let w: Vector = a.contract(j + 1).iter().map(|x| x / lam).collect();
    Ok((u, w))
}

/// One letter of a group word: `exp(t·Z)` with Z the root vector of a table root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordLetter {
    /// Position in the positive-root list, 0..12.
    pub root: usize,
    /// Use the negative root vector `Y_{−α}` instead of `X_α`.
    pub negative: bool,
    pub t: Scalar,
}

pub type GroupWord = Vec<WordLetter>;

/// `exp(m)` for nilpotent `m`, as the finite power series.
pub fn exp_nilpotent(m: &Mat) -> Mat {
    let n = m.rows();
    let mut out = Mat::identity(n);
    let mut term = Mat::identity(n);
    for k in 1..=n {
        term = (&term * m).scale(&Scalar::from_int(k as i64).recip());
        if term.is_zero() {
            break;
        }
        out = &out + &term;
    }
    out
}

/// The group element `Π exp(t·Z)` of a word (leftmost letter applied last).
pub fn word_matrix(word: &[WordLetter]) -> Result<Mat> {
    let mut g = Mat::identity(8);
    for l in word {
        let z = chevalley::root_vector(l.root, l.negative)?;
        let e = exp_nilpotent(&biv_to_matrix(&z).scale(&l.t));
        g = &g * &e;
    }
    Ok(g)
}

/// Applies the word to `e_1∧e_2`; the result lies in the minimal orbit.
pub fn sample_min_orbit(word: &[WordLetter]) -> Result<Bivector> {
    let g = word_matrix(word)?;
    Ok(Bivector::wedge(&g.col(0), &g.col(1)))
}

pub fn random_word<R: Rng>(rng: &mut R, len: usize, t_range: i64) -> GroupWord {
    (0..len)
        .map(|_| {
            let mut t = 0;
            while t == 0 {
                t = rng.gen_range(-t_range..=t_range);
            }
            WordLetter { root: rng.gen_range(0..12), negative: rng.gen_bool(0.5), t: Scalar::from_int(t) }
        })
        .collect()
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, range: i64) -> Vector {
    (0..n).map(|_| Scalar::from_int(rng.gen_range(-range..=range))).collect()
}

pub fn random_bivector<R: Rng>(rng: &mut R, m: usize, range: i64) -> Bivector {
    let coeffs = (0..pair_count(2 * m)).map(|_| Scalar::from_int(rng.gen_range(-range..=range))).collect();
    Bivector { m, coeffs }
}

/// Random `v1∧v2` with independent small-integer factors.
pub fn random_decomposable<R: Rng>(rng: &mut R, m: usize, range: i64) -> (Vector, Vector) {
    loop {
        let v = random_vector(rng, 2 * m, range);
        let w = random_vector(rng, 2 * m, range);
        if !Bivector::wedge(&v, &w).is_zero() {
            return (v, w);
        }
    }
}

/// Quadratic form on Λ²C^{2m}: `α ↦ xᵀ·gram·x` with x the coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadForm {
    pub dim: usize,
    pub gram: Mat,
}

impl QuadForm {
    pub fn zero(m: usize) -> QuadForm {
        let d = pair_count(2 * m);
        QuadForm { dim: d, gram: Mat::zeros(d, d) }
    }

    /// Adds `x·λ_p·λ_q`, splitting it symmetrically over the gram matrix.
    fn add_monomial(&mut self, p: usize, q: usize, x: &Scalar) {
        if p == q {
            self.gram[(p, p)] += x.clone();
        } else {
            let half = x * &Scalar::new(1, 2);
            self.gram[(p, q)] += half.clone();
            self.gram[(q, p)] += half;
        }
    }

    /// Adds `x·λ_ab·λ_cd` for 0-based index pairs in either order.
    fn add_product(&mut self, n: usize, (a, b): (usize, usize), (c, d): (usize, usize), x: &Scalar) {
        if a == b || c == d || x.is_zero() {
            return;
        }
        let (p, s1) = if a < b { (pair_index(n, a, b), 1) } else { (pair_index(n, b, a), -1) };
        let (q, s2) = if c < d { (pair_index(n, c, d), 1) } else { (pair_index(n, d, c), -1) };
        self.add_monomial(p, q, &(x * &Scalar::from_int(s1 * s2)));
    }

    pub fn eval(&self, a: &Bivector) -> Scalar {
        let x = a.coeff_vector();
        assert_eq!(x.len(), self.dim, "dimension mismatch in eval");
        dot(x, &self.gram.mul_vec(x))
    }

    /// Coordinates in the monomial basis `λ_p·λ_q`, p ≤ q.
    pub fn monomial_vector(&self) -> Vector {
        let mut out = Vec::with_capacity(self.dim * (self.dim + 1) / 2);
        for p in 0..self.dim {
            for q in p..self.dim {
                if p == q {
                    out.push(self.gram[(p, p)].clone());
                } else {
                    out.push(&self.gram[(p, q)] + &self.gram[(q, p)]);
                }
            }
        }
        out
    }
}

/// `α ↦` coefficient of `e_i∧e_j∧e_k∧e_l` in `α∧α`.
pub fn phi_kostant(m: usize, idx: [usize; 4]) -> Result<QuadForm> {
    let n = 2 * m;
    if !idx.windows(2).all(|w| w[0] < w[1]) || idx[0] < 1 || idx[3] > n {
        return Err(Error::BadIndex(format!("{idx:?}")));
    }
    let [i, j, k, l] = idx.map(|x| x - 1);
    let mut f = QuadForm::zero(m);
    let two = Scalar::from_int(2);
    f.add_product(n, (i, j), (k, l), &two);
    f.add_product(n, (i, k), (j, l), &-&two);
    f.add_product(n, (i, l), (j, k), &two);
    Ok(f)
}

/// `α ↦ (ι_{e_r*}α, ι_{e_s*}α)`.
pub fn psi_kostant(m: usize, r: usize, s: usize) -> Result<QuadForm> {
    let n = 2 * m;
    if r < 1 || r > s || s > n {
        return Err(Error::BadIndex(format!("({r}, {s})")));
    }
    let (r, s) = (r - 1, s - 1);
    let mut f = QuadForm::zero(m);
    for t in 0..n {
        f.add_product(n, (r, t), (s, n - 1 - t), &Scalar::one());
    }
    Ok(f)
}

/// `α ↦ λ_12²`, the image of the highest weight vector.
pub fn hwv_form(m: usize) -> QuadForm {
    let mut f = QuadForm::zero(m);
    f.add_monomial(0, 0, &Scalar::one());
    f
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KostantReport {
    pub rank_joint: usize,
    pub rank_with_hwv: usize,
    /// (complement, |Φ| = C(2m,4), |Ψ| = C(2m+1,2), dim Sym²(so_{2m})).
    pub dims: (usize, usize, usize, usize),
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The stacked Φ and Ψ images as rows of monomial coordinates.
pub fn kostant_matrix(m: usize) -> Mat {
    let n = 2 * m;
    let mut rows = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    rows.push(phi_kostant(m, [i, j, k, l]).unwrap().monomial_vector());
                }
            }
        }
    }
    for r in 1..=n {
        for s in r..=n {
            rows.push(psi_kostant(m, r, s).unwrap().monomial_vector());
        }
    }
    Mat::from_rows(rows)
}

pub fn kostant_rank_report(m: usize) -> KostantReport {
    let n = 2 * m;
    let joint = kostant_matrix(m);
    let rank_joint = joint.rank();
    let with = joint.vstack(&Mat::row_vector(&hwv_form(m).monomial_vector()));
    let rank_with_hwv = with.rank();
    let complement = m * (4 * m * m * m - 7 * m - 3) / 3;
    let sym2 = binom(binom(n, 2) + 1, 2);
    KostantReport { rank_joint, rank_with_hwv, dims: (complement, binom(n, 4), binom(n + 1, 2), sym2) }
}

/// `Tr(φ_x φ_y)`; independent of the sign convention.
pub fn kks_lambda(x: &Bivector, y: &Bivector) -> Scalar {
    (&biv_to_matrix(x) * &biv_to_matrix(y)).trace()
}

/// `φ_d(v1)∧v2 + v1∧φ_d(v2)` at `point = v1∧v2`.
pub fn tangent_at(point: &Bivector, dir: &Bivector) -> Result<Bivector> {
    let (v1, v2) = factorize(point)?;
    let phi = biv_to_matrix(dir);
    Ok(Bivector::wedge(&phi.mul_vec(&v1), &v2).add(&Bivector::wedge(&v1, &phi.mul_vec(&v2))))
}

//! Independent recomputations: plain `BigRational` arrays, brute-force
//! enumeration and printed values, never the library's own linear algebra.

use num::{BigRational, One, Zero};
use omin::exact_linalg::{Mat, Scalar};
use omin::orthogonal::{biv_to_matrix, bracket, in_min_closure, kostant_rank_report, Bivector};
use omin::quiver::{flag_report, symplectic_form};
use omin::trialgebra::chevalley::{h_alpha, x_alpha, y_alpha, CARTAN_MATRIX};
use omin::trialgebra::{phi_window, window_basis};
use omin::weylact::zk_check;
use omin::{rng, QuiverPoint};

type Q = BigRational;
type Sq = Vec<Vec<Q>>;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `e_i∧e_j` as the operator `u ↦ (e_j,u)e_i − (e_i,u)e_j` with `(e_a,e_b) = δ_{a+b,9}`.
fn wedge_op(i: usize, j: usize) -> Sq {
    let mut m = vec![vec![q(0); 8]; 8];
    m[i - 1][8 - j] += q(1);
    m[j - 1][8 - i] -= q(1);
    m
}

fn op_of(b: &Bivector) -> Sq {
    let mut m = vec![vec![q(0); 8]; 8];
    for (i, j, c) in b.terms() {
        let w = wedge_op(i, j);
        for r in 0..8 {
            for s in 0..8 {
                m[r][s] += c.inner() * &w[r][s];
            }
        }
    }
    m
}

fn mul(a: &Sq, b: &Sq) -> Sq {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

fn commutator(a: &Sq, b: &Sq) -> Sq {
    let (ab, ba) = (mul(a, b), mul(b, a));
    (0..8).map(|i| (0..8).map(|j| &ab[i][j] - &ba[i][j]).collect()).collect()
}

fn lib(m: &Mat) -> Sq {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].inner().clone()).collect()).collect()
}

/// Leibniz expansion.
fn det(m: &Sq) -> Q {
    fn go(m: &Sq, used: &mut Vec<bool>, row: usize) -> Q {
        if row == m.len() {
            return Q::one();
        }
        let mut acc = Q::zero();
        let mut sign = 1;
        for c in 0..m.len() {
            if used[c] {
                continue;
            }
            used[c] = true;
            let t = &m[row][c] * go(m, used, row + 1);
            used[c] = false;
            if sign > 0 {
                acc += t;
            } else {
                acc -= t;
            }
            sign = -sign;
        }
        acc
    }
    go(m, &mut vec![false; m.len()], 0)
}

#[test]
fn bracket_matches_operator_commutator() {
    let mut r = rng(11);
    for _ in 0..20 {
        let a = omin::orthogonal::random_bivector(&mut r, 4, 3);
        let b = omin::orthogonal::random_bivector(&mut r, 4, 3);
        assert_eq!(op_of(&bracket(&a, &b)), commutator(&op_of(&a), &op_of(&b)));
        assert_eq!(lib(&biv_to_matrix(&a)), op_of(&a));
    }
}

#[test]
fn chevalley_relations_from_scratch() {
    for i in 1..=4 {
        let (x, y, h) = (op_of(&x_alpha(i - 1)), op_of(&y_alpha(i - 1)), op_of(&h_alpha(i)));
        assert_eq!(commutator(&x, &y), h, "[X,Y] = H for alpha_{i}");
        for j in 1..=4 {
            let xj = op_of(&x_alpha(j - 1));
            let a = q(CARTAN_MATRIX[j - 1][i - 1]);
            let scaled: Sq = xj.iter().map(|row| row.iter().map(|v| v * &a).collect()).collect();
            assert_eq!(commutator(&h, &xj), scaled, "[H_{i}, X_{j}]");
        }
    }
}

#[test]
fn d4_cartan_matrix_is_the_printed_one() {
    assert_eq!(CARTAN_MATRIX, [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]);
    let m: Sq = CARTAN_MATRIX.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    assert_eq!(det(&m), q(4));
}

#[test]
fn window_basis_spans_so8() {
    let ops: Vec<Sq> = window_basis().iter().map(|w| op_of(&phi_window(w).unwrap())).collect();
    assert_eq!(ops.len(), 28);
    let rows: Vec<Vec<Scalar>> =
        ops.iter().map(|m| m.iter().flatten().map(|x| Scalar::from(x.clone())).collect()).collect();
    assert_eq!(Mat::from_rows(rows).rank(), 28);
}

#[test]
fn determinant_agrees_with_leibniz() {
    let mut r = rng(5);
    for _ in 0..20 {
        let m = omin::quiver::random_sl(&mut r, 4, 3, 3);
        assert_eq!(det(&lib(&m)), q(1));
        let x = Mat::from_fn(4, 4, |i, j| Scalar::from_int(((i * 7 + j * 3) % 5) as i64 - 2));
        assert_eq!(Scalar::from(det(&lib(&x))), x.det().unwrap());
    }
}

#[test]
fn kostant_dimension_count() {
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    assert_eq!(binom(29, 2), 406);
    let rep = kostant_rank_report(4);
    assert_eq!(rep.rank_joint, 106);
    assert_eq!(rep.rank_with_hwv, 107);
}

/// Every tuple in `[0, n]^{n−1}`, filtered, rather than the library's recursion.
fn brute_flags(n: usize) -> (usize, Vec<Vec<usize>>) {
    let len = n - 1;
    let mut best = 0;
    let mut arg = Vec::new();
    let total = (n + 1).pow(len as u32);
    for code in 0..total {
        let mut c = code;
        let m: Vec<usize> = (0..len).map(|_| { let d = c % (n + 1); c /= n + 1; d }).collect();
        if m.iter().enumerate().any(|(k, &x)| x > k + 1) || m.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        let mut full = m.clone();
        full.push(n);
        let v: usize = (0..len).map(|i| full[i] * (full[i + 1] - full[i])).sum();
        if v > best {
            best = v;
            arg = vec![m];
        } else if v == best {
            arg.push(m);
        }
    }
    (best, arg)
}

#[test]
fn flag_maximum_matches_brute_force() {
    for n in 2..=7 {
        let (best, arg) = brute_flags(n);
        let rep = flag_report(n).unwrap();
        assert_eq!(rep.maximum, best);
        assert_eq!(best, n * (n - 1) / 2);
        assert_eq!(arg, vec![(1..n).collect::<Vec<_>>()]);
        assert!(rep.holds);
    }
}

#[test]
fn quiver_form_on_basis_pairs() {
    // ω(a, b) = Σ_k tr(α_k^a β_k^b) − tr(α_k^b β_k^a) on coordinate vectors.
    let dim = QuiverPoint::zero(3).dim();
    assert_eq!(dim, 16);
    let unit = |i: usize| QuiverPoint::from_flat(3, &(0..dim).map(|k| Scalar::from_int((k == i) as i64)).collect::<Vec<_>>());
    for i in 0..dim {
        for j in 0..dim {
            let (a, b) = (unit(i), unit(j));
            let mut expect = Q::zero();
            for k in 1..3 {
                let (aa, ab, ba, bb) = (lib(a.alpha(k)), lib(a.beta(k)), lib(b.alpha(k)), lib(b.beta(k)));
                for r in 0..aa.len() {
                    for c in 0..aa[0].len() {
                        expect += &aa[r][c] * &bb[c][r] - &ba[r][c] * &ab[c][r];
                    }
                }
            }
            assert_eq!(symplectic_form(&a, &b).unwrap().inner(), &expect);
        }
    }
}

#[test]
fn printed_z1_witness() {
    // Printed partner: α₁′ = (1,0)ᵀ, β₁′ = (c₃−c₂, 0), other maps unchanged.
    let a = omin::suites::regular_window_sample(&mut rng(2));
    let b = omin::weylact::lift_regular(&a).unwrap();
    let c = &a.c;
    let mut w = b.clone();
    w.alpha[0] = Mat::from_rows(vec![vec![Scalar::one()], vec![Scalar::zero()]]);
    w.beta[0] = Mat::from_rows(vec![vec![&c[2] - &c[1], Scalar::zero()]]);
    assert!(zk_check(&b, &w, 1).unwrap());
    assert!(in_min_closure(&phi_window(&a).unwrap()));
}

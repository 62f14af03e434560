//! Seeded verification suites. Each suite is a list of independent exact
//! checks; failures carry the serialized input that produced them.

use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::affinize::{bpoint_eq, cstar_act, cstar_compatible, lift_from_bpoint, xi, BPoint};
use crate::bridge::{
    in_n1, kks_pullback_holds, lambda_prime, mu_sl2, omega1, sl2_act, sl2_act_quiver, to_bivector, IsoMap, F,
    F_inv,
};
use crate::error::Result;
use crate::exact_linalg::{s, Mat, Scalar};
use crate::orthogonal::{
    biv_to_matrix, bracket, factorize, in_min_closure, is_isotropic, kks_lambda, kostant_matrix,
    kostant_rank_report, pairing, random_bivector, random_decomposable, random_vector, random_word,
    sample_min_orbit, tangent_at, Bivector,
};
use crate::quiver::{
    flag_report, h_act, in_n, random_h, random_sl, sample_n, symplectic_form, QuiverPoint,
};
use crate::trialgebra::chevalley::{root_position, x_alpha, y_alpha, ROOTS};
use crate::trialgebra::{
    chevalley_relations_report, h_alpha, min_membership_window, phi_window, phi_window_inv, triality,
    window_basis, window_bracket, window_killing, Perm3, WindowElement,
};
use crate::weylact::{
    apply_word, braid_holds, gg_check, lift_regular, out_in, s1_witness, s2_witness, sk_partner,
    sk_partner_with, zk_check,
};

pub const SUITES: [&str; 9] =
    ["chevalley", "triality", "kostant", "bridge", "membership", "kks", "weyl", "affinize", "flags"];

pub const DEFAULT_TRIALS: usize = 25;

const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<Value>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<Report>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Zeroes every timing so the report depends only on seed and trials.
    pub fn without_timings(mut self) -> Report {
        self.elapsed_ms = 0;
        self.suites = self.suites.into_iter().map(Report::without_timings).collect();
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, trials: DEFAULT_TRIALS }
    }
}

struct Tally {
    cases: usize,
    passed: usize,
    failed: usize,
    counterexamples: Vec<Value>,
}

impl Tally {
    fn new() -> Tally {
        Tally { cases: 0, passed: 0, failed: 0, counterexamples: Vec::new() }
    }

    fn check(&mut self, name: &str, outcome: Result<bool>, input: impl FnOnce() -> Value) {
        self.cases += 1;
        match outcome {
            Ok(true) => self.passed += 1,
            other => {
                self.failed += 1;
                if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    let mut v = json!({ "check": name, "input": input() });
                    if let Err(e) = other {
                        v["error"] = json!(e.to_string());
                    }
                    self.counterexamples.push(v);
                }
            }
        }
    }

    fn report(self, suite: &str, start: Instant) -> Report {
        Report {
            suite: suite.to_string(),
            cases: self.cases,
            passed: self.passed,
            failed: self.failed,
            counterexamples: self.counterexamples,
            elapsed_ms: start.elapsed().as_millis() as u64,
            suites: Vec::new(),
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

fn suite_rng(seed: u64, suite: &str) -> ChaCha8Rng {
    let mut r = crate::rng(seed);
    r.set_stream(SUITES.iter().position(|s| *s == suite).unwrap_or(SUITES.len()) as u64);
    r
}

/// A point of the minimal orbit.
pub fn orbit_sample<R: Rng>(rng: &mut R, len: usize) -> Bivector {
    sample_min_orbit(&random_word(rng, len, 2)).expect("table roots")
}

/// Window coordinates of an orbit point with pairwise distinct `c_i`.
pub fn regular_window_sample<R: Rng>(rng: &mut R) -> WindowElement {
    loop {
        let w = phi_window_inv(&orbit_sample(rng, 6));
        if w.is_regular() {
            return w;
        }
    }
}

pub fn run(name: &str, opts: Options) -> Option<Report> {
    let start = Instant::now();
    let mut rng = suite_rng(opts.seed, name);
    let mut t = Tally::new();
    let trials = opts.trials;
    match name {
        "chevalley" => chevalley(&mut t),
        "triality" => triality_suite(&mut t, &mut rng, trials),
        "kostant" => kostant(&mut t, &mut rng, trials),
        "bridge" => bridge(&mut t, &mut rng, trials),
        "membership" => membership(&mut t, &mut rng, trials),
        "kks" => kks(&mut t, &mut rng, trials),
        "weyl" => weyl(&mut t, &mut rng, trials),
        "affinize" => affinize(&mut t, &mut rng, trials),
        "flags" => flags(&mut t),
        "all" => return Some(run_all(opts)),
        _ => return None,
    }
    Some(t.report(name, start))
}

pub fn run_all(opts: Options) -> Report {
    let start = Instant::now();
    let suites: Vec<Report> = SUITES.iter().map(|s| run(s, opts).expect("known suite")).collect();
    Report {
        suite: "all".into(),
        cases: suites.iter().map(|r| r.cases).sum(),
        passed: suites.iter().map(|r| r.passed).sum(),
        failed: suites.iter().map(|r| r.failed).sum(),
        counterexamples: suites.iter().flat_map(|r| r.counterexamples.iter().cloned()).take(MAX_COUNTEREXAMPLES).collect(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        suites,
    }
}

fn chevalley(t: &mut Tally) {
    for c in chevalley_relations_report() {
        t.check("chevalley relation", Ok(c.holds), || json!(c.relation));
    }
}

/// Dynkin symmetry of a transposition on simple-root coordinates.
fn permute_root(sigma: &Perm3, r: [i64; 4]) -> [i64; 4] {
    match sigma.images {
        [0, 2, 1] => [r[0], r[1], r[3], r[2]],
        [2, 1, 0] => [r[3], r[1], r[2], r[0]],
        [1, 0, 2] => [r[2], r[1], r[0], r[3]],
        _ => r,
    }
}

fn triality_suite(t: &mut Tally, rng: &mut ChaCha8Rng, trials: usize) {
    let basis = window_basis();
    let brackets: Vec<Vec<WindowElement>> =
        basis.iter().map(|a| basis.iter().map(|b| window_bracket(a, b).unwrap()).collect()).collect();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let lhs = phi_window(&brackets[i][j]).and_then(|x| Ok(x == bracket(&phi_window(a)?, &phi_window(b)?)));
            t.check("phi intertwines brackets", lhs, || json!([a, b]));
        }
    }
    for sigma in [Perm3::s1(), Perm3::s2()] {
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let ok = window_bracket(&triality(&sigma, a), &triality(&sigma, b))
                    .map(|x| x == triality(&sigma, &brackets[i][j]));
                t.check("bracket equivariance", ok, || json!({"sigma": sigma, "A": a, "B": b}));
            }
        }
    }
    let a = WindowElement::random(rng, 3);
    for s in Perm3::all() {
        for u in Perm3::all() {
            let ok = triality(&s.compose(&u), &a) == triality(&s, &triality(&u, &a));
            t.check("S3 composition", Ok(ok), || json!({"sigma": s, "tau": u, "A": a}));
        }
    }
    for sigma in [Perm3::s1(), Perm3::s2()] {
        for k in 0..12 {
            for neg in [false, true] {
                let (v, r) = if neg { (y_alpha(k), ROOTS[k].0.map(|c| -c)) } else { (x_alpha(k), ROOTS[k].0) };
                let image = phi_window(&triality(&sigma, &phi_window_inv(&v)));
                let target = permute_root(&sigma, r);
                let expected = if neg {
                    root_position(target.map(|c| -c)).map(y_alpha)
                } else {
                    root_position(target).map(x_alpha)
                };
                let ok = image.map(|x| expected.is_some_and(|e| x == e || x == e.neg()));
                t.check("root label permutation", ok, || json!({"sigma": sigma, "root": r, "negative": neg}));
            }
        }
    }
    for _ in 0..trials {
        let a = WindowElement::random(rng, 3);
        let b = WindowElement::random(rng, 3);
        let ok = Perm3::all()
            .iter()
            .all(|s| window_killing(&triality(s, &a), &triality(s, &b)) == window_killing(&a, &b));
        t.check("Killing invariance", Ok(ok), || json!([a, b]));
    }
    for _ in 0..trials {
        let w = phi_window_inv(&orbit_sample(rng, 8));
        let ok = Perm3::all().iter().all(|s| min_membership_window(&triality(s, &w)));
        t.check("triality preserves the orbit", Ok(ok), || json!(w));
    }
}

fn kostant(t: &mut Tally, rng: &mut ChaCha8Rng, trials: usize) {
    let rep = kostant_rank_report(4);
    t.check("rank of Phi and Psi images = 106", Ok(rep.rank_joint == 106), || to_json(&rep));
    t.check("rank with highest weight form = 107", Ok(rep.rank_with_hwv == 107), || to_json(&rep));
    let (a, b, c, d) = rep.dims;
    t.check("300 + 70 + 36 = 406 = C(29,2)", Ok((a, b, c) == (300, 70, 36) && a + b + c == d && d == 406), || {
        to_json(&rep)
    });
    let forms = kostant_matrix(4);
    let monomials = |x: &Bivector| -> Vec<Scalar> {
        let v = x.coeff_vector();
        let mut out = Vec::new();
        for p in 0..v.len() {
            for q in p..v.len() {
                out.push(&v[p] * &v[q]);
            }
        }
        out
    };
    for _ in 0..trials {
        let x = orbit_sample(rng, 8);
        let ok = forms.mul_vec(&monomials(&x)).iter().all(Scalar::is_zero);
        t.check("Phi and Psi vanish on the orbit", Ok(ok), || json!(x));
    }
    for x in [Bivector::basis(4, 1, 8), Bivector::from_terms(4, &[(1, 1, 2), (1, 3, 4)])] {
        let ok = forms.mul_vec(&monomials(&x)).iter().any(|v| !v.is_zero());
        t.check("some form is nonzero off the orbit", Ok(ok), || json!(x));
    }
    for i in 0..4 * trials {
        let (v1, v2) = if i % 2 == 0 {
            factorize(&orbit_sample(rng, 6)).expect("orbit points are decomposable")
        } else {
            random_decomposable(rng, 4, 2)
        };
        let span_iso = [(&v1, &v1), (&v1, &v2), (&v2, &v2)].iter().all(|(a, b)| pairing(a, b).unwrap().is_zero());
        let ok = span_iso == is_isotropic(&Bivector::wedge(&v1, &v2));
        t.check("span isotropy matches bivector isotropy", Ok(ok), || json!([v1, v2]));
    }
}

fn random_unimodular2(rng: &mut ChaCha8Rng) -> Mat {
    random_sl(rng, 2, 4, 2)
}

fn bridge(t: &mut Tally, rng: &mut ChaCha8Rng, trials: usize) {
    let cols: Vec<Vec<Scalar>> = (0..16)
        .map(|i| {
            let mut e = vec![s(0); 16];
            e[i] = s(1);
            F(&QuiverPoint::from_flat(3, &e)).unwrap().matrix.entries().to_vec()
        })
        .collect();
    let fm = Mat::from_cols(&cols, 16);
    t.check("F is bijective", Ok(fm.rank() == 16), || Value::Null);
    for i in 0..16 {
        for j in i..16 {
            let mut e = vec![s(0); 16];
            e[i] = s(1);
            let p = QuiverPoint::from_flat(3, &e);
            let mut e = vec![s(0); 16];
            e[j] = s(1);
            let q = QuiverPoint::from_flat(3, &e);
            let ok = symplectic_form(&p, &q).map(|w| w == omega1(&F(&p).unwrap(), &F(&q).unwrap()));
            t.check("F pulls omega1 back to the quiver form", ok, || json!([i, j]));
        }
    }
    for _ in 0..4 * trials {
        let p = QuiverPoint::random(rng, 3, 3);
        let ok = F(&p).map(|f| F_inv(&f) == p);
        t.check("F inverse", ok, || json!(p));
    }
    for _ in 0..2 * trials {
        let g = random_unimodular2(rng);
        let p = QuiverPoint::random(rng, 3, 2);
        let ok = (|| -> Result<bool> {
            let lhs = F(&sl2_act_quiver(&g, &p)?)?;
            let f = F(&p)?;
            let rhs = sl2_act(&g, &f)?;
            let git = g.inverse()?.transpose();
            let mu_ok = mu_sl2(&rhs) == &(&git * &mu_sl2(&f)) * &g.transpose();
            let biv_ok = to_bivector(&rhs) == to_bivector(&f);
            Ok(lhs == rhs && mu_ok && biv_ok)
        })();
        t.check("SL2 equivariance", ok, || json!({"g": g, "p": p}));
    }
    for _ in 0..4 * trials {
        let p = sample_n(rng, 3);
        let ok = F(&p).map(|f| {
            let b = to_bivector(&f);
            in_n1(&f) && in_min_closure(&b) && min_membership_window(&phi_window_inv(&b))
        });
        t.check("N maps into N1 and the orbit closure", ok, || json!(p));
    }
    let mut negatives = 0;
    while negatives < 10 {
        let p = QuiverPoint::random(rng, 3, 2);
        if in_n(&p).is_ok() {
            continue;
        }
        negatives += 1;
        let ok = F(&p).map(|f| !in_n1(&f));
        t.check("points outside N map outside N1", ok, || json!(p));
    }
    for _ in 0..trials {
        let f = IsoMap::from_columns(&random_vector(rng, 8, 3), &random_vector(rng, 8, 3));
        let g = IsoMap::from_columns(&random_vector(rng, 8, 3), &random_vector(rng, 8, 3));
        let ok = lambda_prime(&f, &g) - lambda_prime(&g, &f) == s(2) * omega1(&f, &g);
        t.check("antisymmetrized lambda' is 2 omega1", Ok(ok), || json!([f, g]));
    }
}

fn membership(t: &mut Tally, rng: &mut ChaCha8Rng, trials: usize) {
    for _ in 0..4 * trials {
        let b = orbit_sample(rng, 12);
        let ok = in_min_closure(&b) && min_membership_window(&phi_window_inv(&b));
        t.check("orbit sample satisfies the window equations", Ok(ok), || json!(b));
    }
    for i in 0..4 * trials {
        let b = match i % 4 {
            0 => orbit_sample(rng, 8).add(&h_alpha(1 + i / 4 % 4)),
            1 => {
                let (v, w) = random_decomposable(rng, 4, 2);
                let x = Bivector::wedge(&v, &w);
                if is_isotropic(&x) {
                    Bivector::basis(4, 1, 8)
                } else {
                    x
                }
            }
            2 => orbit_sample(rng, 8).add(&orbit_sample(rng, 8)),
            _ => random_bivector(rng, 4, 2),
        };
        let expected = in_min_closure(&b);
        let ok = min_membership_window(&phi_window_inv(&b)) == expected;
        t.check("window equations agree with the closure test", Ok(ok), || json!({"bivector": b, "in_closure": expected}));
    }
}

fn kks(t: &mut Tally, rng: &mut ChaCha8Rng, trials: usize) {
    for _ in 0..2 * trials {
        let f = F(&sample_n(rng, 3)).unwrap();
        let (w1, w2) = random_decomposable(rng, 4, 3);
        t.check("lambda' pulls back the KKS form", Ok(kks_pullback_holds(&f, &w1, &w2)), || {
            json!({"f": f, "w1": w1, "w2": w2})
        });
    }
    for _ in 0..trials {
        let p = orbit_sample(rng, 6);
        let d = random_bivector(rng, 4, 2);
        let ok = tangent_at(&p, &d).map(|x| x == bracket(&d, &p));
        t.check("tangent vector is the adjoint action", ok, || json!([p, d]));
    }
    let e = x_alpha(1);
    let h = h_alpha(2);
    let (pe, ph) = (biv_to_matrix(&e), biv_to_matrix(&h));
    for _ in 0..4 * trials {
        let y = random_bivector(rng, 4, 3);
        let py = biv_to_matrix(&y);
        let rhs = (&pe * &py.commutator(&ph)).trace() * Scalar::new(1, 2);
        t.check("sl2-triple identity", Ok(kks_lambda(&e, &y) == rhs), || json!(y));
    }
    for _ in 0..trials {
        let x = orbit_sample(rng, 6);
        t.check("orbit points are null for the trace form", Ok(kks_lambda(&x, &x).is_zero()), || json!(x));
    }
}

fn weyl(t: &mut Tally, rng: &mut ChaCha8Rng, trials: usize) {
    for k in [1, 2] {
        for _ in 0..trials {
            let a = regular_window_sample(rng);
            let res = gg_check(&a, k);
            let ok = res.as_ref().map(|c| c.holds()).map_err(Clone::clone);
            t.check("Gelfand-Graev generator equals triality", ok, || json!({"k": k, "A": a, "detail": res.ok()}));
        }
    }
    let a = regular_window_sample(rng);
    let witnesses = (|| -> Result<[bool; 4]> {
        let b = lift_regular(&a)?;
        let b1 = s1_witness(&a)?;
        let b2 = s2_witness(&a)?;
        let d = &a.c[2] - &a.c[1];
        let (o1, i1) = out_in(&b1, 1)?;
        let printed1 = o1 == Mat::from_ints(&[[1], [0]]) && i1 == Mat::row_vector(&[d, s(0)]);
        let block = |c: &Scalar, corner: Scalar| {
            Mat::from_fn(4, 4, |r, col| match (r < 3, col < 3) {
                (true, true) => &a.m[(r, col)] - &(if r == col { c.clone() } else { s(0) }),
                (true, false) => -&a.u[1][r],
                (false, true) => -&a.ustar[1][col],
                (false, false) => corner.clone(),
            })
        };
        let (o, i) = out_in(&b, 2)?;
        let (o2, i2) = out_in(&b2, 2)?;
        let lam2 = in_n(&b)?[1].clone();
        let blocks = &o * &i == block(&a.c[0], &a.c[2] - &a.c[1])
            && &o2 * &i2 == block(&a.c[2], &a.c[0] - &a.c[1])
            && &o2 * &i2 == &(&o * &i) - &Mat::scalar_matrix(4, &lam2);
        Ok([zk_check(&b, &b1, 1)? && printed1, zk_check(&b, &b2, 2)?, blocks, !zk_check(&b, &b, 1)?])
    })();
    for (idx, name) in ["printed Z1 witness", "printed Z2 witness", "printed out2 in2 blocks", "(B, B) is not in Z1"]
        .iter()
        .enumerate()
    {
        t.check(name, witnesses.as_ref().map(|w| w[idx]).map_err(Clone::clone), || json!(a));
    }
    for _ in 0..trials {
        let p = sample_n(rng, 3);
        let ok = (|| -> Result<bool> {
            let mut good = true;
            for k in [1, 2] {
                let lam = in_n(&p)?[k - 1].clone();
                let (o, i) = out_in(&p, k)?;
                good &= &i * &o == Mat::scalar_matrix(k, &lam);
                good &= (&i * &(&(&o * &i) - &Mat::scalar_matrix(2 * k, &lam))).is_zero();
                let bp = sk_partner(&p, k)?;
                good &= zk_check(&p, &bp, k)?;
                good &= bpoint_eq(&xi(&apply_word(&p, &[k, k])?)?, &xi(&p)?);
            }
            Ok(good)
        })();
        t.check("S_k partner, solvability and involutivity", ok, || json!(p));
    }
    for _ in 0..(2 * trials / 5).max(10) {
        let p = sample_n(rng, 3);
        t.check("braid relation S1S2S1 = S2S1S2", braid_holds(&p), || json!(p));
    }
    for _ in 0..(trials / 5).max(1) {
        let p = sample_n(rng, 3);
        let h = random_sl(rng, 2, 4, 2).scale(&s(2));
        let ok = (|| Ok(bpoint_eq(&xi(&sk_partner(&p, 2)?)?, &xi(&sk_partner_with(&p, 2, &h)?)?)))();
        t.check("S_k independent of the kernel basis", ok, || json!({"p": p, "h": h}));
    }
}

fn random_bpoint(rng: &mut ChaCha8Rng, n: usize) -> BPoint {
    let g = random_sl(rng, n, 2 * n, 2);
    let mut x = Mat::from_fn(n, n, |i, j| if i <= j { s(rng.gen_range(-3..=3)) } else { s(0) });
    let tr = x.trace() * Scalar::new(1, n as i64);
    for i in 0..n {
        let v = &x[(i, i)] - &tr;
        x[(i, i)] = v;
    }
    BPoint { g, x }
}

fn affinize(t: &mut Tally, rng: &mut ChaCha8Rng, trials: usize) {
    for i in 0..2 * trials {
        let b = random_bpoint(rng, 2 + i % 3);
        let ok = lift_from_bpoint(&b).and_then(|p| Ok(in_n(&p).is_ok() && bpoint_eq(&xi(&p)?, &b)));
        t.check("xi inverts lift_from_bpoint", ok, || json!(b));
    }
    for i in 0..2 * trials {
        let p = sample_n(rng, 2 + i % 3);
        for z in [2, 3, 5] {
            t.check("C* compatibility", cstar_compatible(&s(z), &p), || json!({"z": z, "p": p}));
        }
    }
    for _ in 0..trials {
        let p = sample_n(rng, 3);
        let ok = (|| -> Result<bool> {
            let base = to_bivector(&F(&p)?);
            let mut good = true;
            for z in [2, 3, 5] {
                good &= to_bivector(&F(&cstar_act(&s(z), &p)?)?) == base.scale(&s(z * z));
            }
            Ok(good)
        })();
        t.check("C* acts by z^2 on the orbit", ok, || json!(p));
    }
    for i in 0..trials {
        let n = 3 + i % 2;
        let p = sample_n(rng, n);
        let h = random_h(rng, n);
        let ok = (|| Ok(bpoint_eq(&xi(&h_act(&h, &p)?)?, &xi(&p)?)))();
        t.check("xi is H-invariant", ok, || json!({"p": p, "h": h}));
        let ok = (|| Ok(cstar_act(&s(6), &p)? == cstar_act(&s(2), &cstar_act(&s(3), &p)?)?))();
        t.check("C* group law", ok, || json!(p));
    }
}

fn flags(t: &mut Tally) {
    for n in 1..=8 {
        let rep = flag_report(n);
        let ok = rep.as_ref().map(|r| r.holds && r.maximizers == vec![(1..n).collect::<Vec<_>>()]).map_err(Clone::clone);
        t.check("flag inequality with unique maximizer", ok, || json!({"n": n, "report": rep.ok()}));
    }
}

/// JSON samples for the `sample` command.
pub fn sample(kind: &str, seed: u64, count: usize) -> Option<Vec<Value>> {
    let mut rng = crate::rng(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(match kind {
            "orbit" => to_json(&orbit_sample(&mut rng, 8)),
            "quiver" => to_json(&sample_n(&mut rng, 3)),
            "window" => to_json(&phi_window_inv(&orbit_sample(&mut rng, 8))),
            _ => return None,
        });
    }
    Some(out)
}

//! The Chevalley basis of so₈ = Λ²C⁸ used throughout: twelve positive root
//! vectors, twelve negative ones and four coroots.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{Mat, Scalar};
use crate::orthogonal::{bracket, Bivector};

/// Positive roots in simple-root coordinates with `X_α = e_i∧e_j`, `Y_{−α} = e_k∧e_l`.
pub const ROOTS: [([i64; 4], (usize, usize), (usize, usize)); 12] = [
    ([1, 0, 0, 0], (1, 7), (2, 8)),
    ([0, 1, 0, 0], (2, 6), (3, 7)),
    ([0, 0, 1, 0], (3, 5), (4, 6)),
    ([0, 0, 0, 1], (3, 4), (5, 6)),
    ([1, 1, 0, 0], (1, 6), (3, 8)),
    ([0, 1, 1, 0], (2, 5), (4, 7)),
    ([0, 1, 0, 1], (2, 4), (5, 7)),
    ([0, 1, 1, 1], (2, 3), (6, 7)),
    ([1, 1, 0, 1], (1, 4), (5, 8)),
    ([1, 1, 1, 0], (1, 5), (4, 8)),
    ([1, 1, 1, 1], (1, 3), (6, 8)),
    ([1, 2, 1, 1], (1, 2), (7, 8)),
];

pub const CARTAN_MATRIX: [[i64; 4]; 4] = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]];

pub fn x_alpha(k: usize) -> Bivector {
    let (i, j) = ROOTS[k].1;
    Bivector::basis(4, i, j)
}

pub fn y_alpha(k: usize) -> Bivector {
    let (i, j) = ROOTS[k].2;
    Bivector::basis(4, i, j)
}

/// `H_{α_i}`, `i ∈ 1..=4`.
pub fn h_alpha(i: usize) -> Bivector {
    match i {
        1 => Bivector::from_terms(4, &[(1, 1, 8), (-1, 2, 7)]),
        2 => Bivector::from_terms(4, &[(1, 2, 7), (-1, 3, 6)]),
        3 => Bivector::from_terms(4, &[(1, 3, 6), (-1, 4, 5)]),
        4 => Bivector::from_terms(4, &[(1, 3, 6), (1, 4, 5)]),
        _ => panic!("simple root index {i} out of 1..=4"),
    }
}

pub fn root_vector(k: usize, negative: bool) -> Result<Bivector> {
    if k >= ROOTS.len() {
        return Err(Error::UnknownRootIndex(k));
    }
    Ok(if negative { y_alpha(k) } else { x_alpha(k) })
}

/// Index of a positive root given its coordinates.
pub fn root_position(coords: [i64; 4]) -> Option<usize> {
    ROOTS.iter().position(|r| r.0 == coords)
}

/// Root coordinates → root vector, for either sign.
pub fn vector_for_root(coords: [i64; 4]) -> Option<Bivector> {
    if let Some(k) = root_position(coords) {
        return Some(x_alpha(k));
    }
    root_position(coords.map(|c| -c)).map(y_alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EntryKind {
    Positive,
    Negative,
    Cartan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChevalleyEntry {
    pub kind: EntryKind,
    /// Root coordinates (negated for Y's); for Cartan entries, the simple-root unit vector.
    pub root: [i64; 4],
    pub element: Bivector,
}

/// All 28 entries: X's, then Y's, then H's.
#[derive(Debug, Clone)]
pub struct ChevalleyTable {
    pub entries: Vec<ChevalleyEntry>,
}

impl ChevalleyTable {
    pub fn new() -> ChevalleyTable {
        let mut entries = Vec::with_capacity(28);
        for k in 0..12 {
            entries.push(ChevalleyEntry { kind: EntryKind::Positive, root: ROOTS[k].0, element: x_alpha(k) });
        }
        for k in 0..12 {
            entries.push(ChevalleyEntry { kind: EntryKind::Negative, root: ROOTS[k].0.map(|c| -c), element: y_alpha(k) });
        }
        for i in 1..=4 {
            let mut r = [0; 4];
            r[i - 1] = 1;
            entries.push(ChevalleyEntry { kind: EntryKind::Cartan, root: r, element: h_alpha(i) });
        }
        ChevalleyTable { entries }
    }

    /// 28×28 matrix whose columns are the entries' coefficient vectors.
    pub fn basis_matrix(&self) -> Mat {
        let cols: Vec<Vec<Scalar>> = self.entries.iter().map(|e| e.element.coeff_vector().to_vec()).collect();
        Mat::from_cols(&cols, 28)
    }

    /// Coordinates of `b` in the table basis.
    pub fn coordinates(&self, b: &Bivector) -> Vec<Scalar> {
        let x = self.basis_matrix().solve(&Mat::col_vector(b.coeff_vector())).expect("table is a basis");
        x.col(0)
    }
}

impl Default for ChevalleyTable {
    fn default() -> Self {
        ChevalleyTable::new()
    }
}

/// One relation check with its outcome.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

/// `[X_i, Y_i] = H_i`, `[H_i, X_j] = a_ji X_j`, and closure of the table under bracket.
pub fn chevalley_relations_report() -> Vec<RelationCheck> {
    let mut out = Vec::new();
    for i in 1..=4 {
        let lhs = bracket(&x_alpha(i - 1), &y_alpha(i - 1));
        out.push(RelationCheck { relation: format!("[X_a{i}, Y_-a{i}] = H_a{i}"), holds: lhs == h_alpha(i) });
    }
    for i in 1..=4 {
        for j in 1..=4 {
            let a = CARTAN_MATRIX[j - 1][i - 1];
            let lhs = bracket(&h_alpha(i), &x_alpha(j - 1));
            let rhs = x_alpha(j - 1).scale(&Scalar::from_int(a));
            out.push(RelationCheck { relation: format!("[H_a{i}, X_a{j}] = {a}·X_a{j}"), holds: lhs == rhs });
        }
    }
    let table = ChevalleyTable::new();
    let basis = table.basis_matrix();
    let mut closed = basis.rank() == 28;
    for a in &table.entries {
        for b in &table.entries {
            let c = bracket(&a.element, &b.element);
            let coords = basis.solve(&Mat::col_vector(c.coeff_vector())).map(|x| x.col(0));
            let integral = coords.as_ref().is_ok_and(|x| x.iter().all(Scalar::is_integer));
            let root_ok = match (a.kind, b.kind) {
                (EntryKind::Cartan, _) | (_, EntryKind::Cartan) => true,
                _ => {
                    let sum: [i64; 4] = std::array::from_fn(|k| a.root[k] + b.root[k]);
                    if sum == [0; 4] {
                        true
                    } else {
                        match vector_for_root(sum) {
                            Some(v) => c.is_zero() || c == v || c == v.neg(),
                            None => c.is_zero(),
                        }
                    }
                }
            };
            closed &= integral && root_ok;
        }
    }
    out.push(RelationCheck { relation: "table closed under bracket with integer structure constants".into(), holds: closed });
    out
}

//! Exact rational scalars, dense matrices, and the elimination kernels the
//! rest of the crate is built on. Nothing here ever rounds.

mod fourvec;
mod mat;
mod scalar;

pub use fourvec::FourVector;
pub use mat::{
    cross, det3, dot, is_zero_vec, outer, unit, vadd, vneg, vscale, vsub, vzero, Mat, Vector,
};
pub use scalar::{q, s, ParseScalarError, Scalar};

use crate::error::Result;

pub fn rank(m: &Mat) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Mat) -> Vec<Vector> {
    m.kernel_basis()
}

pub fn solve(a: &Mat, b: &Mat) -> Result<Mat> {
    a.solve(b)
}

pub fn det(m: &Mat) -> Result<Scalar> {
    m.det()
}

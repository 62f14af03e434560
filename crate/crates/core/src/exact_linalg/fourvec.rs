use std::collections::BTreeMap;

use serde::Serialize;

use super::scalar::Scalar;

/// Element of Λ⁴C^{dim}: coefficients over strictly increasing 1-based 4-tuples, zeros omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourVector {
    pub dim: usize,
    coeffs: BTreeMap<[usize; 4], Scalar>,
}

impl FourVector {
    pub fn zero(dim: usize) -> FourVector {
        FourVector { dim, coeffs: BTreeMap::new() }
    }

    /// Adds `x` to the coefficient of `e_i∧e_j∧e_k∧e_l`. The tuple must be strictly increasing.
    pub fn add_term(&mut self, idx: [usize; 4], x: Scalar) {
        assert!(idx.windows(2).all(|w| w[0] < w[1]), "indices must increase");
        assert!(idx[0] >= 1 && idx[3] <= self.dim, "index out of range");
        if x.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(idx).or_insert_with(Scalar::zero);
        *entry += x;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn coeff(&self, idx: [usize; 4]) -> Scalar {
        self.coeffs.get(&idx).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize; 4], &Scalar)> {
        self.coeffs.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::s;

    #[test]
    fn cancellation_drops_term() {
        let mut f = FourVector::zero(8);
        f.add_term([1, 2, 3, 4], s(2));
        f.add_term([1, 2, 3, 4], s(-2));
        assert!(f.is_zero());
        f.add_term([2, 3, 5, 8], s(1));
        assert_eq!(f.coeff([2, 3, 5, 8]), s(1));
        assert_eq!(f.coeff([1, 2, 3, 4]), s(0));
    }
}

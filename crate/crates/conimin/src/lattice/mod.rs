//! Lattice reduction and exact SVP/CVP by enumeration, plus flatness
//! directions of ellipsoids via the dual-lattice SVP.
//!
//! Everything is exact: squared norms are compared as rationals and
//! enumeration bounds come from an LLL-preprocessed basis, so the solvers are
//! practical for rank ≤ 8, which is this crate's working regime.

mod enumerate;
mod flatness;
mod lll;

pub use enumerate::{cvp, svp};
pub use flatness::{flatness_direction, FlatnessCertificate};
pub use lll::lll_reduce;

use crate::error::{Error, Result};
use crate::exact::{Mat, Vect};

/// Full-column-rank rational matrix whose columns generate the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    basis: Mat,
}

impl LatticeBasis {
    /// Builds a basis from a matrix whose columns are the generators.
    /// Fails when the columns are linearly dependent.
    pub fn new(basis: Mat) -> Result<Self> {
        if basis.cols() == 0 || basis.rows() == 0 {
            return Err(Error::ShapeMismatch("empty lattice basis".into()));
        }
        if basis.rank() != basis.cols() {
            return Err(Error::ShapeMismatch(
                "lattice basis columns must be linearly independent".into(),
            ));
        }
        Ok(LatticeBasis { basis })
    }

    pub fn standard(dim: usize) -> Self {
        LatticeBasis {
            basis: Mat::identity(dim),
        }
    }

    pub fn from_int_columns(cols: &[&[i64]]) -> Result<Self> {
        let vs: Vec<Vect> = cols.iter().map(|c| Vect::from_ints(c)).collect();
        LatticeBasis::new(Mat::from_columns(&vs))
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Lattice point for a coefficient vector.
    pub fn point(&self, coeffs: &Vect) -> Vect {
        self.basis.mul_vec(coeffs)
    }

    /// Hermite normal form of the (integerized) basis; two bases generate the
    /// same lattice iff their HNFs agree. Requires integer entries.
    pub fn hnf_signature(&self) -> Mat {
        let (h, _) = crate::exact::hnf(&self.basis);
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rat;

    #[test]
    fn rejects_dependent_columns() {
        let m = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(LatticeBasis::new(m).is_err());
    }

    #[test]
    fn point_evaluation() {
        let l = LatticeBasis::from_int_columns(&[&[2, 0], &[1, 2]]).unwrap();
        let p = l.point(&Vect::from_ints(&[1, -1]));
        assert_eq!(p, Vect::from_ints(&[1, -2]));
        assert_eq!(l.rank(), 2);
        assert_eq!(l.ambient_dim(), 2);
        assert_eq!(p.norm_sq(), Rat::from_int(5));
    }
}

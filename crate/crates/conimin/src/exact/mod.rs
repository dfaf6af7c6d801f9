//! Exact rational scalars, vectors, matrices and the linear-algebra kernels
//! the rest of the crate is built on.
//!
//! Every operation here is exact: values are reduced fractions of
//! arbitrary-precision integers, and nothing rounds. Rational literals
//! serialize as `"p/q"` strings (`"p"` when the denominator is 1) in all
//! JSON interchange.

mod hnf;
mod matrix;
mod scalar;
mod solve;

pub use hnf::{hnf, solve_integer, IntegerSolution};
pub use matrix::Mat;
pub use scalar::Rat;
pub use solve::{invert, solve_linear, LinearSolution};

use crate::error::{Error, Result};

/// Column vector with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vect {
    entries: Vec<Rat>,
}

impl Vect {
    pub fn new(entries: Vec<Rat>) -> Self {
        Vect { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vect {
            entries: vec![Rat::zero(); dim],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = Rat::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vect::new(entries.iter().map(|&x| Rat::from_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.entries.iter()
    }

    pub fn dot(&self, other: &Vect) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dot: dimension mismatch");
        let mut acc = Rat::zero();
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            acc += a.clone() * b.clone();
        }
        acc
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn add(&self, other: &Vect) -> Vect {
        assert_eq!(self.dim(), other.dim());
        Vect::new(
            self.iter()
                .zip(other.iter())
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vect) -> Vect {
        assert_eq!(self.dim(), other.dim());
        Vect::new(
            self.iter()
                .zip(other.iter())
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> Vect {
        Vect::new(self.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn neg(&self) -> Vect {
        Vect::new(self.iter().map(|a| -a.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.to_f64()).collect()
    }

    /// Componentwise rounding to the nearest rational with denominator `den`.
    pub fn round_to_denominator(&self, den: u64) -> Vect {
        Vect::new(
            self.iter()
                .map(|e| e.round_to_denominator(den))
                .collect(),
        )
    }

    pub fn checked_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "expected dim {dim}, got {}",
                self.dim()
            )))
        }
    }
}

impl std::ops::Index<usize> for Vect {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.entries[i]
    }
}

impl std::ops::IndexMut<usize> for Vect {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.entries[i]
    }
}

impl std::fmt::Debug for Vect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_norm() {
        let a = Vect::from_ints(&[1, 2, 3]);
        let b = Vect::from_ints(&[4, -5, 6]);
        assert_eq!(a.dot(&b), Rat::from_int(12));
        assert_eq!(a.norm_sq(), Rat::from_int(14));
    }

    #[test]
    fn unit_vectors() {
        let e1 = Vect::unit(3, 1);
        assert_eq!(e1.entries(), &[Rat::zero(), Rat::one(), Rat::zero()]);
    }
}

use super::{Rat, Vect};
use crate::error::{Error, Result};

/// Dense row-major matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vect]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.dim());
        assert!(cols.iter().all(|v| v.dim() == r), "ragged columns");
        Mat::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn diagonal(diag: &[Rat]) -> Self {
        let mut m = Mat::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vect {
        Vect::new((0..self.cols).map(|j| self[(i, j)].clone()).collect())
    }

    pub fn column(&self, j: usize) -> Vect {
        Vect::new((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vect> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &Vect) {
        assert_eq!(v.dim(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i].clone();
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_mat(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul: shape mismatch");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += &self[(i, k)] * &other[(k, j)];
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &Vect) -> Vect {
        assert_eq!(self.cols, v.dim(), "matvec: shape mismatch");
        Vect::new(
            (0..self.rows)
                .map(|i| {
                    let mut acc = Rat::zero();
                    for k in 0..self.cols {
                        acc += &self[(i, k)] * &v[k];
                    }
                    acc
                })
                .collect(),
        )
    }

    /// `vᵀ · M` as a vector of length `cols`.
    pub fn vec_mul(&self, v: &Vect) -> Vect {
        assert_eq!(self.rows, v.dim(), "vecmat: shape mismatch");
        Vect::new(
            (0..self.cols)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for k in 0..self.rows {
                        acc += &v[k] * &self[(k, j)];
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    /// Gram matrix `MᵀM`.
    pub fn gram(&self) -> Mat {
        self.transpose().mul_mat(self)
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Exact determinant by fraction-free-ish Gaussian elimination.
    pub fn determinant(&self) -> Rat {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else {
                return Rat::zero();
            };
            if p != col {
                for j in 0..n {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(col, j)].clone();
                    m[(col, j)] = tmp;
                }
                det = -det;
            }
            let pv = m[(col, col)].clone();
            det *= pv.clone();
            for r in (col + 1)..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pv;
                for j in col..n {
                    let delta = &factor * &m[(col, j)];
                    m[(r, j)] = &m[(r, j)] - &delta;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(rank, j)].clone();
                m[(rank, j)] = tmp;
            }
            let pv = m[(rank, col)].clone();
            for r in (rank + 1)..rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pv;
                for j in col..cols {
                    let delta = &factor * &m[(rank, j)];
                    m[(r, j)] = &m[(r, j)] - &delta;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Symmetric LDLᵀ factorization without pivoting. Returns unit-lower `L`
    /// and the diagonal `D`; fails on a zero pivot with a nonzero remainder
    /// (matrix not positive definite / not factorizable this way).
    pub fn ldlt(&self) -> Result<(Mat, Vec<Rat>)> {
        assert!(self.is_square());
        let n = self.rows;
        let mut l = Mat::identity(n);
        let mut d = vec![Rat::zero(); n];
        for j in 0..n {
            let mut dj = self[(j, j)].clone();
            for k in 0..j {
                dj -= &(&l[(j, k)] * &l[(j, k)]) * &d[k];
            }
            d[j] = dj;
            for i in (j + 1)..n {
                let mut v = self[(i, j)].clone();
                for k in 0..j {
                    v -= &(&l[(i, k)] * &l[(j, k)]) * &d[k];
                }
                if d[j].is_zero() {
                    if v.is_zero() {
                        l[(i, j)] = Rat::zero();
                    } else {
                        return Err(Error::Singular);
                    }
                } else {
                    l[(i, j)] = &v / &d[j];
                }
            }
        }
        Ok((l, d))
    }

    /// Exact positive-semidefiniteness test for a symmetric matrix.
    pub fn is_psd(&self) -> bool {
        match self.ldlt() {
            Ok((_, d)) => d.iter().all(|x| !x.is_negative()),
            Err(_) => false,
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_f64()).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_rank() {
        let m = Mat::from_int_rows(&[&[2, 1], &[0, 1]]);
        assert_eq!(m.determinant(), Rat::from_int(2));
        assert_eq!(m.rank(), 2);
        let s = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant(), Rat::zero());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn ldlt_of_pd() {
        let m = Mat::from_int_rows(&[&[4, 2], &[2, 3]]);
        let (l, d) = m.ldlt().unwrap();
        assert_eq!(d, vec![Rat::from_int(4), Rat::from_int(2)]);
        let dm = Mat::diagonal(&d);
        assert_eq!(l.mul_mat(&dm).mul_mat(&l.transpose()), m);
        assert!(m.is_psd());
        let indef = Mat::from_int_rows(&[&[1, 3], &[3, 1]]);
        assert!(!indef.is_psd());
    }
}

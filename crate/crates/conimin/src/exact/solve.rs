use super::{Mat, Rat, Vect};
use crate::error::{Error, Result};

/// Outcome of `solve_linear`: an exact particular solution (when one exists)
/// together with a basis of the kernel. The kernel matrix has one column per
/// basis vector and is empty (zero columns) when the map is injective.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: Option<Vect>,
    pub kernel: Mat,
}

impl LinearSolution {
    pub fn is_feasible(&self) -> bool {
        self.particular.is_some()
    }
}

/// Solves `A x = b` exactly over the rationals.
///
/// Infeasibility is a value (`particular: None`), not a failure.
pub fn solve_linear(a: &Mat, b: &Vect) -> LinearSolution {
    assert_eq!(a.rows(), b.dim(), "solve_linear: shape mismatch");
    let rows = a.rows();
    let cols = a.cols();
    // augmented row-reduction
    let mut m = Mat::from_fn(rows, cols + 1, |i, j| {
        if j < cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..=cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
        }
        let pv = m[(r, c)].clone();
        for j in c..=cols {
            m[(r, j)] = &m[(r, j)] / &pv;
        }
        for i in 0..rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in c..=cols {
                    let delta = &f * &m[(r, j)];
                    m[(i, j)] = &m[(i, j)] - &delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    // inconsistent row: 0 = nonzero
    for i in r..rows {
        if !m[(i, cols)].is_zero() {
            return LinearSolution {
                particular: None,
                kernel: kernel_from_rref(&m, &pivot_cols, cols),
            };
        }
    }

    let mut particular = Vect::zeros(cols);
    for (row, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = m[(row, cols)].clone();
    }

    LinearSolution {
        particular: Some(particular),
        kernel: kernel_from_rref(&m, &pivot_cols, cols),
    }
}

fn kernel_from_rref(m: &Mat, pivot_cols: &[usize], cols: usize) -> Mat {
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut kernel = Mat::zeros(cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        kernel[(fc, k)] = Rat::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            kernel[(pc, k)] = -m[(row, fc)].clone();
        }
    }
    kernel
}

/// Exact inverse; `Err(Singular)` when `det A = 0`.
pub fn invert(a: &Mat) -> Result<Mat> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("invert: matrix not square".into()));
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut inv = Mat::identity(n);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
            return Err(Error::Singular);
        };
        if p != c {
            for j in 0..n {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(c, j)].clone();
                m[(c, j)] = tmp;
                let tmp = inv[(p, j)].clone();
                inv[(p, j)] = inv[(c, j)].clone();
                inv[(c, j)] = tmp;
            }
        }
        let pv = m[(c, c)].clone();
        for j in 0..n {
            m[(c, j)] = &m[(c, j)] / &pv;
            inv[(c, j)] = &inv[(c, j)] / &pv;
        }
        for i in 0..n {
            if i != c && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in 0..n {
                    let dm = &f * &m[(c, j)];
                    m[(i, j)] = &m[(i, j)] - &dm;
                    let di = &f * &inv[(c, j)];
                    inv[(i, j)] = &inv[(i, j)] - &di;
                }
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_identity() {
        let a = Mat::identity(2);
        let b = Vect::from_ints(&[1, 2]);
        let sol = solve_linear(&a, &b);
        assert_eq!(sol.particular.unwrap(), b);
        assert_eq!(sol.kernel.cols(), 0);
    }

    #[test]
    fn solve_underdetermined() {
        // x1 + x2 = 2: particular (2, 0), kernel spanned by (1, -1) up to sign
        let a = Mat::from_int_rows(&[&[1, 1]]);
        let b = Vect::from_ints(&[2]);
        let sol = solve_linear(&a, &b);
        let p = sol.particular.unwrap();
        assert_eq!(p, Vect::from_ints(&[2, 0]));
        assert_eq!(sol.kernel.cols(), 1);
        let k = sol.kernel.column(0);
        assert!(a.mul_vec(&k).is_zero());
        assert!(!k.is_zero());
    }

    #[test]
    fn solve_infeasible() {
        let a = Mat::from_int_rows(&[&[1], &[1]]);
        let b = Vect::from_ints(&[0, 1]);
        let sol = solve_linear(&a, &b);
        assert!(sol.particular.is_none());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&Mat::identity(3)).unwrap(), Mat::identity(3));
        let d = Mat::from_int_rows(&[&[2, 0], &[0, 3]]);
        let di = invert(&d).unwrap();
        assert_eq!(di[(0, 0)], Rat::new(1, 2));
        assert_eq!(di[(1, 1)], Rat::new(1, 3));
        let u = Mat::from_int_rows(&[&[1, 1], &[0, 1]]);
        let ui = invert(&u).unwrap();
        assert_eq!(ui.mul_mat(&u), Mat::identity(2));
        assert_eq!(ui[(0, 1)], Rat::from_int(-1));
        let s = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(invert(&s), Err(Error::Singular));
    }
}

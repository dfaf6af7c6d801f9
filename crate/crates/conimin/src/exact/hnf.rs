use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Mat, Rat, Vect};

/// Column-style Hermite normal form of an integer matrix.
///
/// Returns `(H, U)` with `M · U = H` and `U` unimodular. Pivots descend left
/// to right (lower-triangular columns for square nonsingular input); pivot
/// entries are positive and entries to their left in the pivot row are
/// reduced into `[0, pivot)`. A zero matrix yields a zero `H`.
pub fn hnf(m: &Mat) -> (Mat, Mat) {
    assert!(m.is_integer(), "hnf requires integer entries");
    let rows = m.rows();
    let cols = m.cols();
    let mut h: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| m[(i, j)].numer().clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let col_swap = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in h.iter_mut() {
            row.swap(a, b);
        }
        for row in u.iter_mut() {
            row.swap(a, b);
        }
    };
    // col_j -= q * col_p
    let col_axpy = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, j: usize, q: &BigInt, p: usize| {
        for row in h.iter_mut() {
            let d = q * &row[p];
            row[j] -= d;
        }
        for row in u.iter_mut() {
            let d = q * &row[p];
            row[j] -= d;
        }
    };
    let col_negate = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, j: usize| {
        for row in h.iter_mut() {
            let v = -row[j].clone();
            row[j] = v;
        }
        for row in u.iter_mut() {
            let v = -row[j].clone();
            row[j] = v;
        }
    };

    let mut p = 0; // next pivot column slot
    for i in 0..rows {
        if p >= cols {
            break;
        }
        if (p..cols).all(|j| h[i][j].is_zero()) {
            continue;
        }
        // euclidean column reduction until row i has a single nonzero at p
        loop {
            let mut best: Option<usize> = None;
            for j in p..cols {
                if h[i][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(b) if h[i][j].abs() < h[i][b].abs() => best = Some(j),
                    _ => {}
                }
            }
            let b = best.expect("nonzero entry exists");
            if b != p {
                col_swap(&mut h, &mut u, b, p);
            }
            let mut others = false;
            for j in (p + 1)..cols {
                if h[i][j].is_zero() {
                    continue;
                }
                let q = h[i][j].div_rounded(&h[i][p].clone());
                col_axpy(&mut h, &mut u, j, &q, p);
                if !h[i][j].is_zero() {
                    others = true;
                }
            }
            if !others {
                break;
            }
        }
        if h[i][p].is_negative() {
            col_negate(&mut h, &mut u, p);
        }
        // reduce earlier columns of this pivot row into [0, pivot)
        for j in 0..p {
            if h[i][j].is_zero() {
                continue;
            }
            let q = h[i][j].div_floor(&h[i][p]);
            if !q.is_zero() {
                col_axpy(&mut h, &mut u, j, &q, p);
            }
        }
        p += 1;
    }

    let to_mat = |g: &Vec<Vec<BigInt>>, r: usize, c: usize| {
        Mat::from_fn(r, c, |i, j| Rat::from_bigint(g[i][j].clone()))
    };
    (to_mat(&h, rows, cols), to_mat(&u, cols, cols))
}

/// Integer solution of `M t = b` plus an integer kernel basis.
#[derive(Debug, Clone)]
pub struct IntegerSolution {
    pub particular: Option<Vect>,
    /// Columns generate `{ t ∈ ℤᵏ : M t = 0 }`.
    pub kernel: Mat,
}

/// Solves `M t = b` over the integers via the Hermite normal form.
///
/// Rows of `(M | b)` may be rational; each row is scaled to integers first
/// (solutions are unchanged by row scaling).
pub fn solve_integer(m: &Mat, b: &Vect) -> IntegerSolution {
    assert_eq!(m.rows(), b.dim());
    let (mi, bi) = integerize_rows(m, b);
    let (h, u) = hnf(&mi);
    let rows = mi.rows();
    let cols = mi.cols();

    // locate pivots: column j has pivot in the first row where it is nonzero
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for j in 0..cols {
        let pr = (0..rows).find(|&i| !h[(i, j)].is_zero());
        match pr {
            Some(i) => {
                pivots.push((i, j));
                rank += 1;
            }
            None => break, // zero columns are trailing by construction
        }
    }

    let kernel = Mat::from_fn(cols, cols - rank, |i, k| u[(i, rank + k)].clone());

    // forward substitution over pivot rows with integrality checks
    let mut y = vec![Rat::zero(); cols];
    for &(pr, pc) in &pivots {
        let mut rhs = bi[pr].clone();
        for &(_, j) in pivots.iter().take_while(|&&(r, _)| r < pr) {
            rhs -= &h[(pr, j)] * &y[j];
        }
        let q = &rhs / &h[(pr, pc)];
        if !q.is_integer() {
            return IntegerSolution {
                particular: None,
                kernel,
            };
        }
        y[pc] = q;
    }
    let t = u.mul_vec(&Vect::new(y));
    // non-pivot rows (and everything else) verified by substitution
    if mi.mul_vec(&t) != bi {
        return IntegerSolution {
            particular: None,
            kernel,
        };
    }
    IntegerSolution {
        particular: Some(t),
        kernel,
    }
}

/// Scales each row of `(A | b)` to clear denominators.
fn integerize_rows(a: &Mat, b: &Vect) -> (Mat, Vect) {
    let mut m = a.clone();
    let mut v = b.clone();
    for i in 0..a.rows() {
        let mut l = BigInt::from(1);
        for j in 0..a.cols() {
            l = l.lcm(a[(i, j)].denom());
        }
        l = l.lcm(b[i].denom());
        let s = Rat::from_bigint(l);
        for j in 0..a.cols() {
            m[(i, j)] = &m[(i, j)] * &s;
        }
        v[i] = &v[i] * &s;
    }
    (m, v)
}

trait DivRounded {
    fn div_rounded(&self, other: &BigInt) -> BigInt;
}

impl DivRounded for BigInt {
    /// Quotient that leaves the smallest-magnitude remainder (rounded division);
    /// speeds up the euclidean column reduction.
    fn div_rounded(&self, other: &BigInt) -> BigInt {
        let (q, r) = self.div_rem(other);
        let two_r: BigInt = &r + &r;
        if two_r.abs() > other.abs() {
            if (r.is_negative()) == (other.is_negative()) {
                q + 1
            } else {
                q - 1
            }
        } else {
            q
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_hnf_shape(h: &Mat) {
        // pivots strictly descend left to right
        let mut last_pivot_row: isize = -1;
        for j in 0..h.cols() {
            let pr = (0..h.rows()).find(|&i| !h[(i, j)].is_zero());
            if let Some(i) = pr {
                assert!((i as isize) > last_pivot_row, "pivot rows must descend");
                assert!(h[(i, j)].is_positive());
                last_pivot_row = i as isize;
            }
        }
    }

    #[test]
    fn identity_case() {
        let (h, u) = hnf(&Mat::identity(2));
        assert_eq!(h, Mat::identity(2));
        assert_eq!(u, Mat::identity(2));
    }

    #[test]
    fn zero_case() {
        let z = Mat::zeros(2, 2);
        let (h, _) = hnf(&z);
        assert!(h.is_zero());
    }

    #[test]
    fn det_preserved() {
        let m = Mat::from_int_rows(&[&[2, 1], &[0, 1]]);
        let (h, u) = hnf(&m);
        check_hnf_shape(&h);
        assert_eq!(h.determinant().abs(), Rat::from_int(2));
        assert_eq!(u.determinant().abs(), Rat::one());
        assert_eq!(m.mul_mat(&u), h);
        // lower-triangular columns
        assert!(h[(0, 1)].is_zero());
    }

    #[test]
    fn integer_solve() {
        // x + y = 2 over integers
        let m = Mat::from_int_rows(&[&[1, 1]]);
        let b = Vect::from_ints(&[2]);
        let sol = solve_integer(&m, &b);
        let t = sol.particular.unwrap();
        assert_eq!(m.mul_vec(&t), b);
        assert_eq!(sol.kernel.cols(), 1);
        assert!(m.mul_vec(&sol.kernel.column(0)).is_zero());

        // 2x = 1 has no integer solution
        let m2 = Mat::from_int_rows(&[&[2]]);
        let b2 = Vect::from_ints(&[1]);
        assert!(solve_integer(&m2, &b2).particular.is_none());

        // rational rows are scaled: x/2 = 1/2 -> x = 1
        let m3 = Mat::from_rows(vec![vec![Rat::new(1, 2)]]);
        let b3 = Vect::new(vec![Rat::new(1, 2)]);
        let sol3 = solve_integer(&m3, &b3);
        assert_eq!(sol3.particular.unwrap(), Vect::from_ints(&[1]));
    }
}

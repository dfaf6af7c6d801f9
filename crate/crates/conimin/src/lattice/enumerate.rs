use super::{lll_reduce, LatticeBasis};
use crate::exact::{solve_linear, Mat, Rat, Vect};

/// Shortest nonzero lattice vector, exact.
///
/// Ties on the squared norm are broken lexicographically on the coefficient
/// vector (w.r.t. the *given* basis) after sign canonicalization (first
/// nonzero coefficient positive).
pub fn svp(lattice: &LatticeBasis) -> Vect {
    let (point, _) = svp_with_coeffs(lattice);
    point
}

/// As [`svp`], also returning the coefficient vector w.r.t. the given basis.
pub fn svp_with_coeffs(lattice: &LatticeBasis) -> (Vect, Vect) {
    let reduced = lll_reduce(lattice, &Rat::new(3, 4)).expect("valid delta");
    let k = reduced.rank();
    let gram = reduced.basis().gram();
    let (l, d) = gram.ldlt().expect("gram of independent columns is PD");
    let s = Vect::zeros(k);
    let init = reduced
        .basis()
        .columns()
        .iter()
        .map(|c| c.norm_sq())
        .min()
        .expect("nonempty basis");
    let cands = enumerate_minimal(&l, &d, &s, init, true);
    let winners = to_original_coeffs(lattice, &reduced, &cands);
    let best = winners
        .into_iter()
        .map(canonical_sign)
        .min_by(lex_order)
        .expect("svp: at least one candidate");
    (lattice.point(&best), best)
}

/// Closest lattice vector to `target`, exact (squared Euclidean distance).
/// Ties broken lexicographically on the coefficient vector.
pub fn cvp(lattice: &LatticeBasis, target: &Vect) -> Vect {
    let (point, _) = cvp_with_coeffs(lattice, target);
    point
}

/// As [`cvp`], also returning the coefficient vector w.r.t. the given basis.
pub fn cvp_with_coeffs(lattice: &LatticeBasis, target: &Vect) -> (Vect, Vect) {
    assert_eq!(
        target.dim(),
        lattice.ambient_dim(),
        "cvp: target dimension mismatch"
    );
    let reduced = lll_reduce(lattice, &Rat::new(3, 4)).expect("valid delta");
    let k = reduced.rank();
    let gram = reduced.basis().gram();
    let (l, d) = gram.ldlt().expect("gram of independent columns is PD");
    // continuous least-squares coefficients of the target
    let bt_w = reduced.basis().vec_mul(target);
    let s = solve_linear(&gram, &bt_w)
        .particular
        .expect("gram is invertible");
    // Babai rounding seeds the search radius
    let babai = Vect::new(s.iter().map(|c| Rat::from_bigint(c.round_int())).collect());
    let diff = babai.sub(&s);
    let init = quad_cost(&gram, &diff);
    let cands = enumerate_minimal(&l, &d, &s, init, false);
    let winners = to_original_coeffs(lattice, &reduced, &cands);
    let best = winners
        .into_iter()
        .min_by(lex_order)
        .expect("cvp: at least one candidate");
    (lattice.point(&best), best)
}

fn quad_cost(gram: &Mat, v: &Vect) -> Rat {
    gram.mul_vec(v).dot(v)
}

/// Depth-first enumeration of every integer coefficient vector minimizing
/// `(t - s)ᵀ G (t - s)` where `G = L diag(d) Lᵀ`. `exclude_zero` drops `t = 0`
/// (the SVP case). `init_bound` must be an attainable cost.
fn enumerate_minimal(
    l: &Mat,
    d: &[Rat],
    s: &Vect,
    init_bound: Rat,
    exclude_zero: bool,
) -> Vec<Vect> {
    let k = d.len();
    let mut best = init_bound;
    let mut out: Vec<Vect> = Vec::new();
    let mut t = Vect::zeros(k);
    descend(
        l,
        d,
        s,
        k,
        &mut t,
        Rat::zero(),
        &mut best,
        &mut out,
        exclude_zero,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn descend(
    l: &Mat,
    d: &[Rat],
    s: &Vect,
    level: usize,
    t: &mut Vect,
    partial: Rat,
    best: &mut Rat,
    out: &mut Vec<Vect>,
    exclude_zero: bool,
) {
    if level == 0 {
        if exclude_zero && t.is_zero() {
            return;
        }
        if partial < *best {
            *best = partial;
            out.clear();
            out.push(t.clone());
        } else if partial == *best {
            out.push(t.clone());
        }
        return;
    }
    let i = level - 1;
    // continuous minimizer of u_i given the fixed tail
    let mut center = s[i].clone();
    for j in (i + 1)..d.len() {
        let dt = &t[j] - &s[j];
        center -= &l[(j, i)] * &dt;
    }
    let m0 = Rat::from_bigint(center.round_int());
    // zigzag outward from the rounded center in both directions
    for dir in [1i64, -1i64] {
        let mut step = if dir == 1 { 0i64 } else { -1i64 };
        loop {
            let m = &m0 + &Rat::from_int(step);
            let u = &m - &center;
            let cost = partial.clone() + &(&u * &u) * &d[i];
            if cost > *best {
                break;
            }
            t[i] = m;
            descend(l, d, s, level - 1, t, cost, best, out, exclude_zero);
            step += dir;
        }
    }
    t[i] = Rat::zero();
}

/// Maps coefficient vectors w.r.t. the reduced basis back to coefficients
/// w.r.t. the original basis.
fn to_original_coeffs(orig: &LatticeBasis, reduced: &LatticeBasis, cands: &[Vect]) -> Vec<Vect> {
    // U with B_orig · U = B_red; exact because the bases span the same lattice
    let g = orig.basis().gram();
    let btr = orig.basis().transpose().mul_mat(reduced.basis());
    let mut u = Mat::zeros(orig.rank(), reduced.rank());
    for j in 0..reduced.rank() {
        let col = solve_linear(&g, &btr.column(j))
            .particular
            .expect("gram invertible");
        u.set_column(j, &col);
    }
    cands.iter().map(|t| u.mul_vec(t)).collect()
}

fn canonical_sign(v: Vect) -> Vect {
    match v.iter().find(|e| !e.is_zero()) {
        Some(first) if first.is_negative() => v.neg(),
        _ => v,
    }
}

fn lex_order(a: &Vect, b: &Vect) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svp_identity() {
        let l = LatticeBasis::standard(2);
        let v = svp(&l);
        assert_eq!(v.norm_sq(), Rat::one());
    }

    #[test]
    fn svp_one_dim() {
        let l = LatticeBasis::from_int_columns(&[&[3]]).unwrap();
        assert_eq!(svp(&l), Vect::from_ints(&[3]));
    }

    #[test]
    fn svp_sheared() {
        // {(2,0),(1,2)}: shortest squared norm is 4, verified exhaustively below
        let l = LatticeBasis::from_int_columns(&[&[2, 0], &[1, 2]]).unwrap();
        let v = svp(&l);
        assert_eq!(v.norm_sq(), Rat::from_int(4));
        let mut best = Rat::from_int(i64::MAX);
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                if a == 0 && b == 0 {
                    continue;
                }
                let p = l.point(&Vect::from_ints(&[a, b]));
                best = best.min(p.norm_sq());
            }
        }
        assert_eq!(v.norm_sq(), best);
    }

    #[test]
    fn cvp_rounding() {
        let l = LatticeBasis::standard(2);
        let t = Vect::new(vec![Rat::new(2, 5), Rat::new(3, 5)]);
        assert_eq!(cvp(&l, &t), Vect::from_ints(&[0, 1]));
    }

    #[test]
    fn cvp_tie_break_lex() {
        let l = LatticeBasis::standard(2);
        // (1/2, 0): tie between (0,0) and (1,0); lexicographic pick is (0,0)
        let t = Vect::new(vec![Rat::new(1, 2), Rat::zero()]);
        assert_eq!(cvp(&l, &t), Vect::from_ints(&[0, 0]));
        // (1,1) against 2Z^2: four points at squared distance 2; pick (0,0)
        let l2 = LatticeBasis::from_int_columns(&[&[2, 0], &[0, 2]]).unwrap();
        let t2 = Vect::from_ints(&[1, 1]);
        let c = cvp(&l2, &t2);
        assert_eq!(c.sub(&t2).norm_sq(), Rat::from_int(2));
        assert_eq!(c, Vect::from_ints(&[0, 0]));
    }
}

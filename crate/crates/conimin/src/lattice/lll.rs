use super::LatticeBasis;
use crate::error::{Error, Result};
use crate::exact::{Mat, Rat, Vect};

/// Lovász-reduces a basis with parameter `delta` (1/4 < delta < 1).
///
/// Exact rational Gram–Schmidt throughout; returns a basis of the same
/// lattice satisfying both the size condition |μ_ij| ≤ 1/2 and the Lovász
/// condition.
pub fn lll_reduce(lattice: &LatticeBasis, delta: &Rat) -> Result<LatticeBasis> {
    let quarter = Rat::new(1, 4);
    if *delta <= quarter || *delta >= Rat::one() {
        return Err(Error::ShapeMismatch(
            "lll delta must satisfy 1/4 < delta < 1".into(),
        ));
    }
    let mut b: Vec<Vect> = lattice.basis().columns();
    let n = b.len();
    if n <= 1 {
        return Ok(lattice.clone());
    }

    let mut gso = Gso::compute(&b);
    let mut k = 1;
    while k < n {
        // size-reduce b_k against b_{k-1}..b_0
        for j in (0..k).rev() {
            let mu = gso.mu[k][j].clone();
            let r = Rat::from_bigint(mu.round_int());
            if !r.is_zero() {
                b[k] = b[k].sub(&b[j].scale(&r));
                gso.size_reduce_update(k, j, &r);
            }
        }
        // Lovász condition on (k-1, k)
        let lhs = gso.norm_sq[k].clone();
        let mu = gso.mu[k][k - 1].clone();
        let rhs = (delta.clone() - &mu * &mu) * gso.norm_sq[k - 1].clone();
        if lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            gso = Gso::compute(&b);
            k = k.max(2) - 1;
        }
    }

    LatticeBasis::new(Mat::from_columns(&b))
}

/// Exact Gram–Schmidt data: μ coefficients and squared norms of b*_i.
struct Gso {
    mu: Vec<Vec<Rat>>,
    norm_sq: Vec<Rat>,
}

impl Gso {
    fn compute(b: &[Vect]) -> Gso {
        let n = b.len();
        let mut ortho: Vec<Vect> = Vec::with_capacity(n);
        let mut mu = vec![vec![Rat::zero(); n]; n];
        let mut norm_sq = vec![Rat::zero(); n];
        for i in 0..n {
            let mut v = b[i].clone();
            for j in 0..i {
                let m = if norm_sq[j].is_zero() {
                    Rat::zero()
                } else {
                    &b[i].dot(&ortho[j]) / &norm_sq[j]
                };
                mu[i][j] = m.clone();
                v = v.sub(&ortho[j].scale(&m));
            }
            norm_sq[i] = v.norm_sq();
            ortho.push(v);
        }
        Gso { mu, norm_sq }
    }

    /// After `b_k -= r * b_j`, only μ[k][0..=j] change.
    fn size_reduce_update(&mut self, k: usize, j: usize, r: &Rat) {
        for l in 0..j {
            let d = r * &self.mu[j][l];
            self.mu[k][l] = &self.mu[k][l] - &d;
        }
        self.mu[k][j] = &self.mu[k][j] - r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_delta() -> Rat {
        Rat::new(3, 4)
    }

    #[test]
    fn identity_is_reduced() {
        let l = LatticeBasis::standard(3);
        let r = lll_reduce(&l, &default_delta()).unwrap();
        assert_eq!(r.basis(), l.basis());
    }

    #[test]
    fn rank_one_unchanged() {
        let l = LatticeBasis::from_int_columns(&[&[5]]).unwrap();
        let r = lll_reduce(&l, &default_delta()).unwrap();
        assert_eq!(r.basis(), l.basis());
    }

    #[test]
    fn reduces_sheared_basis() {
        // {(1,0),(10,1)}: a reduced basis contains a vector of norm 1
        let l = LatticeBasis::from_int_columns(&[&[1, 0], &[10, 1]]).unwrap();
        let r = lll_reduce(&l, &default_delta()).unwrap();
        let has_unit = r
            .basis()
            .columns()
            .iter()
            .any(|c| c.norm_sq() == Rat::one());
        assert!(has_unit, "reduced basis: {:?}", r.basis());
        // same lattice
        assert_eq!(l.hnf_signature(), r.hnf_signature());
    }

    #[test]
    fn bad_delta_rejected() {
        let l = LatticeBasis::standard(2);
        assert!(lll_reduce(&l, &Rat::new(1, 4)).is_err());
        assert!(lll_reduce(&l, &Rat::one()).is_err());
    }
}

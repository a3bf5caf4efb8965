//! Dense reference algorithms, independent of the band structure.

use crate::dense::DenseMatrix;
use crate::field::Field;

#[derive(Clone, Debug)]
pub struct OracleResult<F> {
    pub determinant: F,
    /// `None` when the matrix is singular.
    pub inverse: Option<DenseMatrix<F>>,
}

/// Fraction-free (Bareiss) elimination.
pub fn bareiss_det<F: Field>(x: &DenseMatrix<F>) -> F {
    bareiss_det_with(x, |_, _| {})
}

/// [`bareiss_det`] calling `inspect(k, working)` after elimination step `k`
/// (1-based). For integer input every working entry stays an integer.
pub fn bareiss_det_with<F: Field>(x: &DenseMatrix<F>, mut inspect: impl FnMut(usize, &DenseMatrix<F>)) -> F {
    let n = x.order();
    if n == 0 {
        return F::one();
    }
    let mut a = x.clone();
    let mut negate = false;
    let mut prev = F::one();
    for k in 1..n {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..=n).find(|&p| !a.get(p, k).is_zero()) else {
                return F::zero();
            };
            for j in 1..=n {
                let tmp = a.get(k, j).clone();
                a.set(k, j, a.get(p, j).clone());
                a.set(p, j, tmp);
            }
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..=n {
            for j in k + 1..=n {
                let v = pivot
                    .times(a.get(i, j))
                    .minus(&a.get(i, k).times(a.get(k, j)))
                    .divide(&prev);
                a.set(i, j, v);
            }
            a.set(i, k, F::zero());
        }
        prev = pivot;
        inspect(k, &a);
    }
    let det = a.get(n, n).clone();
    if negate {
        det.negate()
    } else {
        det
    }
}

/// Gauss-Jordan elimination on `[X | I]`, pivoting on the first nonzero
/// entry of each column.
pub fn gauss_jordan_inverse<F: Field>(x: &DenseMatrix<F>) -> OracleResult<F> {
    let n = x.order();
    let mut a = x.clone();
    let mut inv = DenseMatrix::<F>::identity(n);
    let mut det = F::one();
    for k in 1..=n {
        let Some(p) = (k..=n).find(|&p| !a.get(p, k).is_zero()) else {
            return OracleResult {
                determinant: F::zero(),
                inverse: None,
            };
        };
        if p != k {
            swap_rows(&mut a, k, p);
            swap_rows(&mut inv, k, p);
            det = det.negate();
        }
        let pivot = a.get(k, k).clone();
        det = det.times(&pivot);
        for j in 1..=n {
            a.set(k, j, a.get(k, j).divide(&pivot));
            inv.set(k, j, inv.get(k, j).divide(&pivot));
        }
        for i in 1..=n {
            if i == k || a.get(i, k).is_zero() {
                continue;
            }
            let factor = a.get(i, k).clone();
            for j in 1..=n {
                a.set(i, j, a.get(i, j).minus(&factor.times(a.get(k, j))));
                inv.set(i, j, inv.get(i, j).minus(&factor.times(inv.get(k, j))));
            }
        }
    }
    OracleResult {
        determinant: det,
        inverse: Some(inv),
    }
}

fn swap_rows<F: Clone>(a: &mut DenseMatrix<F>, r: usize, s: usize) {
    for j in 1..=a.order() {
        let tmp = a.get(r, j).clone();
        a.set(r, j, a.get(s, j).clone());
        a.set(s, j, tmp);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn cofactor_det(x: &DenseMatrix<BigRational>) -> BigRational {
        let n = x.order();
        if n == 1 {
            return x.get(1, 1).clone();
        }
        let mut total = q(0);
        for j in 1..=n {
            let minor = DenseMatrix::from_fn(n - 1, |r, c| {
                x.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = x.get(1, j) * cofactor_det(&minor);
            total = if j % 2 == 1 { total + term } else { total - term };
        }
        total
    }

    fn random(n: usize, rng: &mut StdRng) -> DenseMatrix<BigRational> {
        DenseMatrix::from_fn(n, |_, _| q(rng.gen_range(-3..=3)))
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..10 {
                let x = random(n, &mut rng);
                assert_eq!(bareiss_det(&x), cofactor_det(&x));
            }
        }
    }

    #[test]
    fn gauss_jordan_matches_bareiss_and_inverts() {
        let mut rng = StdRng::seed_from_u64(11);
        for n in 1..=7 {
            for _ in 0..10 {
                let x = random(n, &mut rng);
                let r = gauss_jordan_inverse(&x);
                assert_eq!(r.determinant, bareiss_det(&x));
                match r.inverse {
                    Some(inv) => assert!(x.mul(&inv).unwrap().is_identity()),
                    None => assert_eq!(r.determinant, q(0)),
                }
            }
        }
    }

    #[test]
    fn bareiss_intermediates_stay_integral() {
        let mut rng = StdRng::seed_from_u64(3);
        let x = random(8, &mut rng);
        bareiss_det_with(&x, |_, a| {
            for r in a.rows() {
                assert!(r.iter().all(|v| v.is_integer()));
            }
        });
    }

    #[test]
    fn singular_has_no_inverse() {
        let x = DenseMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        let r = gauss_jordan_inverse(&x);
        assert_eq!(r.determinant, q(0));
        assert!(r.inverse.is_none());
    }
}

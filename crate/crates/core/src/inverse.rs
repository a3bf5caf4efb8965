//! Inverse of a cyclic nonadiagonal matrix from its structured factorization.
//!
//! The last six columns of `K^-1` come from `U C_j = L^-1 E_j`: closed forms
//! for the bottom-right triangle, short back-substitution rows for the
//! entries above it in rows `n-5..=n-2`, then a six-term upward sweep for
//! rows `n-6..=1`. Every other column follows from `K^-1 K = I` read one
//! column of `K` at a time, which expresses `C_j` through the eight columns
//! to its right and a division by `z_j`.

use crate::band::{Band, CyclicNonadiagonal};
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::factor::{factorize, LuFactors};
use crate::field::Field;

/// Result of the full pipeline after substituting `t = 0`.
#[derive(Clone, Debug)]
pub struct InverseResult<V> {
    pub inverse: DenseMatrix<V>,
    pub determinant: V,
    /// Whether `K * inverse = I` was checked (and held).
    pub verified: bool,
    /// Number of zeros rescued with `t`.
    pub substitutions: usize,
}

/// Columns `n-5..=n` of the inverse, as functions of `t`. Element `k` of the
/// result is column `n - 5 + k`, stored top to bottom.
#[allow(non_snake_case)]
pub fn last_six_columns<F: Field>(lu: &LuFactors<F>) -> Vec<Vec<F>> {
    let n = lu.order();
    let c = &lu.pivots;
    let e = &lu.upper1;
    let P = &lu.upper2;
    let T = &lu.upper3;
    let f = &lu.lower1;
    let g = &lu.lower2;
    let al = &lu.lower3;
    let k = &lu.row_penultimate;
    let h = &lu.row_last;
    let w = &lu.col_penultimate;
    let v = &lu.col_last;
    let z = lu.working_matrix().band(Band::Super4);

    // s[i][j - (n-5)] holds S_{i,j}; row 0 unused.
    let mut s = vec![vec![F::zero(); 6]; n + 1];
    let col = |j: usize| j + 5 - n;
    let one = F::one();

    // sum of signed products, e.g. [(1, &[&a, &b]), (-1, &[&c])] = a*b - c
    let poly = |terms: &[(i8, &[&F])]| -> F {
        terms.iter().fold(F::zero(), |acc, (sign, factors)| {
            let prod = factors
                .iter()
                .skip(1)
                .fold(factors[0].clone(), |p, x| p.times(x));
            if *sign > 0 {
                acc.plus(&prod)
            } else {
                acc.minus(&prod)
            }
        })
    };
    // (base - sum x*y) / pivot
    let solve = |base: F, terms: &[(&F, &F)], pivot: &F| -> F {
        terms
            .iter()
            .fold(base, |acc, (x, y)| acc.minus(&x.times(y)))
            .divide(pivot)
    };

    // Bottom-right triangle, column by column.
    let (jn, jn1, jn2, jn3, jn4, jn5) = (col(n), col(n - 1), col(n - 2), col(n - 3), col(n - 4), col(n - 5));

    s[n][jn] = one.divide(&c[n]);
    s[n - 1][jn] = solve(F::zero(), &[(&v[n - 1], &s[n][jn])], &c[n - 1]);

    s[n][jn1] = h[n - 1].negate().divide(&c[n]);
    s[n - 1][jn1] = solve(one.clone(), &[(&v[n - 1], &s[n][jn1])], &c[n - 1]);

    s[n][jn2] = poly(&[(-1, &[&h[n - 2]]), (1, &[&h[n - 1], &k[n - 2]])]).divide(&c[n]);
    s[n - 1][jn2] = solve(k[n - 2].negate(), &[(&v[n - 1], &s[n][jn2])], &c[n - 1]);
    s[n - 2][jn2] = solve(
        one.clone(),
        &[(&w[n - 2], &s[n - 1][jn2]), (&v[n - 2], &s[n][jn2])],
        &c[n - 2],
    );

    s[n][jn3] = poly(&[
        (-1, &[&h[n - 3]]),
        (1, &[&h[n - 2], &f[n - 2]]),
        (1, &[&h[n - 1], &k[n - 3]]),
        (-1, &[&h[n - 1], &k[n - 2], &f[n - 2]]),
    ])
    .divide(&c[n]);
    s[n - 1][jn3] = solve(
        poly(&[(-1, &[&k[n - 3]]), (1, &[&k[n - 2], &f[n - 2]])]),
        &[(&v[n - 1], &s[n][jn3])],
        &c[n - 1],
    );
    s[n - 2][jn3] = solve(
        f[n - 2].negate(),
        &[(&w[n - 2], &s[n - 1][jn3]), (&v[n - 2], &s[n][jn3])],
        &c[n - 2],
    );
    s[n - 3][jn3] = solve(
        one.clone(),
        &[
            (&e[n - 3], &s[n - 2][jn3]),
            (&w[n - 3], &s[n - 1][jn3]),
            (&v[n - 3], &s[n][jn3]),
        ],
        &c[n - 3],
    );

    s[n][jn4] = poly(&[
        (-1, &[&h[n - 4]]),
        (1, &[&h[n - 3], &f[n - 3]]),
        (1, &[&h[n - 2], &g[n - 2]]),
        (-1, &[&h[n - 2], &f[n - 2], &f[n - 3]]),
        (1, &[&h[n - 1], &k[n - 4]]),
        (-1, &[&h[n - 1], &k[n - 3], &f[n - 3]]),
        (-1, &[&h[n - 1], &k[n - 2], &g[n - 2]]),
        (1, &[&h[n - 1], &k[n - 2], &f[n - 2], &f[n - 3]]),
    ])
    .divide(&c[n]);
    s[n - 1][jn4] = solve(
        poly(&[
            (-1, &[&k[n - 4]]),
            (1, &[&k[n - 3], &f[n - 3]]),
            (1, &[&k[n - 2], &g[n - 2]]),
            (-1, &[&k[n - 2], &f[n - 2], &f[n - 3]]),
        ]),
        &[(&v[n - 1], &s[n][jn4])],
        &c[n - 1],
    );
    s[n - 2][jn4] = solve(
        poly(&[(-1, &[&g[n - 2]]), (1, &[&f[n - 2], &f[n - 3]])]),
        &[(&w[n - 2], &s[n - 1][jn4]), (&v[n - 2], &s[n][jn4])],
        &c[n - 2],
    );
    s[n - 3][jn4] = solve(
        f[n - 3].negate(),
        &[
            (&e[n - 3], &s[n - 2][jn4]),
            (&w[n - 3], &s[n - 1][jn4]),
            (&v[n - 3], &s[n][jn4]),
        ],
        &c[n - 3],
    );
    s[n - 4][jn4] = solve(
        one.clone(),
        &[
            (&e[n - 4], &s[n - 3][jn4]),
            (&P[n - 4], &s[n - 2][jn4]),
            (&w[n - 4], &s[n - 1][jn4]),
            (&v[n - 4], &s[n][jn4]),
        ],
        &c[n - 4],
    );

    // The third-order term of the last row reads f_{n-4} where the printed
    // formula has a stray f_{-4}.
    s[n][jn5] = poly(&[
        (-1, &[&h[n - 5]]),
        (1, &[&h[n - 4], &f[n - 4]]),
        (1, &[&h[n - 3], &g[n - 3]]),
        (-1, &[&h[n - 3], &f[n - 3], &f[n - 4]]),
        (1, &[&h[n - 2], &al[n - 2]]),
        (-1, &[&h[n - 2], &g[n - 2], &f[n - 4]]),
        (-1, &[&h[n - 2], &f[n - 2], &g[n - 3]]),
        (1, &[&h[n - 2], &f[n - 2], &f[n - 3], &f[n - 4]]),
        (1, &[&h[n - 1], &k[n - 5]]),
        (-1, &[&h[n - 1], &k[n - 4], &f[n - 4]]),
        (-1, &[&h[n - 1], &k[n - 3], &g[n - 3]]),
        (1, &[&h[n - 1], &k[n - 3], &f[n - 3], &f[n - 4]]),
        (-1, &[&h[n - 1], &k[n - 2], &al[n - 2]]),
        (1, &[&h[n - 1], &k[n - 2], &g[n - 2], &f[n - 4]]),
        (1, &[&h[n - 1], &k[n - 2], &f[n - 2], &g[n - 3]]),
        (-1, &[&h[n - 1], &k[n - 2], &f[n - 2], &f[n - 3], &f[n - 4]]),
    ])
    .divide(&c[n]);
    s[n - 1][jn5] = solve(
        poly(&[
            (-1, &[&k[n - 5]]),
            (1, &[&k[n - 4], &f[n - 4]]),
            (1, &[&k[n - 3], &g[n - 3]]),
            (-1, &[&k[n - 3], &f[n - 3], &f[n - 4]]),
            (1, &[&k[n - 2], &al[n - 2]]),
            (-1, &[&k[n - 2], &g[n - 2], &f[n - 4]]),
            (-1, &[&k[n - 2], &f[n - 2], &g[n - 3]]),
            (1, &[&k[n - 2], &f[n - 2], &f[n - 3], &f[n - 4]]),
        ]),
        &[(&v[n - 1], &s[n][jn5])],
        &c[n - 1],
    );
    s[n - 2][jn5] = solve(
        poly(&[
            (-1, &[&al[n - 2]]),
            (1, &[&g[n - 2], &f[n - 4]]),
            (1, &[&f[n - 2], &g[n - 3]]),
            (-1, &[&f[n - 2], &f[n - 3], &f[n - 4]]),
        ]),
        &[(&w[n - 2], &s[n - 1][jn5]), (&v[n - 2], &s[n][jn5])],
        &c[n - 2],
    );
    s[n - 3][jn5] = solve(
        poly(&[(-1, &[&g[n - 3]]), (1, &[&f[n - 3], &f[n - 4]])]),
        &[
            (&e[n - 3], &s[n - 2][jn5]),
            (&w[n - 3], &s[n - 1][jn5]),
            (&v[n - 3], &s[n][jn5]),
        ],
        &c[n - 3],
    );
    s[n - 4][jn5] = solve(
        f[n - 4].negate(),
        &[
            (&e[n - 4], &s[n - 3][jn5]),
            (&P[n - 4], &s[n - 2][jn5]),
            (&w[n - 4], &s[n - 1][jn5]),
            (&v[n - 4], &s[n][jn5]),
        ],
        &c[n - 4],
    );
    s[n - 5][jn5] = solve(
        one.clone(),
        &[
            (&e[n - 5], &s[n - 4][jn5]),
            (&P[n - 5], &s[n - 3][jn5]),
            (&T[n - 5], &s[n - 2][jn5]),
            (&w[n - 5], &s[n - 1][jn5]),
            (&v[n - 5], &s[n][jn5]),
        ],
        &c[n - 5],
    );

    // Entries above the triangle in rows n-2..=n-5.
    for j in [n, n - 1] {
        let q = col(j);
        s[n - 2][q] = solve(F::zero(), &[(&w[n - 2], &s[n - 1][q]), (&v[n - 2], &s[n][q])], &c[n - 2]);
    }
    for j in [n, n - 1, n - 2] {
        let q = col(j);
        s[n - 3][q] = solve(
            F::zero(),
            &[(&e[n - 3], &s[n - 2][q]), (&w[n - 3], &s[n - 1][q]), (&v[n - 3], &s[n][q])],
            &c[n - 3],
        );
    }
    for j in [n, n - 1, n - 2, n - 3] {
        let q = col(j);
        s[n - 4][q] = solve(
            F::zero(),
            &[
                (&e[n - 4], &s[n - 3][q]),
                (&P[n - 4], &s[n - 2][q]),
                (&w[n - 4], &s[n - 1][q]),
                (&v[n - 4], &s[n][q]),
            ],
            &c[n - 4],
        );
    }
    for j in [n, n - 1, n - 2, n - 3, n - 4] {
        let q = col(j);
        s[n - 5][q] = solve(
            F::zero(),
            &[
                (&e[n - 5], &s[n - 4][q]),
                (&P[n - 5], &s[n - 3][q]),
                (&T[n - 5], &s[n - 2][q]),
                (&w[n - 5], &s[n - 1][q]),
                (&v[n - 5], &s[n][q]),
            ],
            &c[n - 5],
        );
    }

    // Upward sweep through the band rows.
    #[allow(clippy::needless_range_loop)]
    for q in 0..6 {
        for i in (1..=n - 6).rev() {
            s[i][q] = solve(
                F::zero(),
                &[
                    (&e[i], &s[i + 1][q]),
                    (&P[i], &s[i + 2][q]),
                    (&T[i], &s[i + 3][q]),
                    (&z[i], &s[i + 4][q]),
                    (&w[i], &s[n - 1][q]),
                    (&v[i], &s[n][q]),
                ],
                &c[i],
            );
        }
    }

    (0..6)
        .map(|q| (1..=n).map(|i| s[i][q].clone()).collect())
        .collect()
}

/// Completes the inverse (still a function of `t`) from its last six
/// columns.
///
/// Fails only in float mode, where a zero `z_j` cannot be rescued.
#[allow(non_snake_case)]
pub fn back_columns<F: Field>(lu: &LuFactors<F>, six: &[Vec<F>]) -> Result<DenseMatrix<F>> {
    let n = lu.order();
    let kt = lu.working_matrix();
    if six.len() != 6 || six.iter().any(|c| c.len() != n) {
        return Err(Error::DimensionMismatch("expected six columns of length n".into()));
    }
    // cols[j] is C_j; index 0 unused.
    let mut cols: Vec<Vec<F>> = vec![Vec::new(); n + 1];
    for (q, column) in six.iter().enumerate() {
        cols[n - 5 + q] = column.clone();
    }
    let d = kt.band(Band::Diag);
    let a = kt.band(Band::Super1);
    let A = kt.band(Band::Super2);
    let M = kt.band(Band::Super3);
    let z = kt.band(Band::Super4);
    let b = kt.band(Band::Sub1);
    let B = kt.band(Band::Sub2);
    let N = kt.band(Band::Sub3);
    let R = kt.band(Band::Sub4);

    // C_j = (E_r - sum coeff * C_m) / z_j, where r = j + 4 is the column of K
    // being read.
    let combine = |r: usize, terms: &[(&F, usize)], divisor: &F, cols: &[Vec<F>]| -> Vec<F> {
        (1..=n)
            .map(|i| {
                let unit = if i == r { F::one() } else { F::zero() };
                terms
                    .iter()
                    .fold(unit, |acc, (coeff, m)| {
                        if coeff.is_zero() {
                            acc
                        } else {
                            acc.minus(&coeff.times(&cols[*m][i - 1]))
                        }
                    })
                    .divide(divisor)
            })
            .collect()
    };
    let check = |j: usize| -> Result<&F> {
        let zj = &z[j];
        if zj.is_zero() {
            Err(Error::ZeroSuperdiagonal { index: j })
        } else {
            Ok(zj)
        }
    };

    let j = n - 6;
    cols[j] = combine(
        n - 2,
        &[
            (&M[n - 5], n - 5),
            (&A[n - 4], n - 4),
            (&a[n - 3], n - 3),
            (&d[n - 2], n - 2),
            (&b[n - 1], n - 1),
            (&B[n], n),
        ],
        check(j)?,
        &cols,
    );
    let j = n - 7;
    cols[j] = combine(
        n - 3,
        &[
            (&M[n - 6], n - 6),
            (&A[n - 5], n - 5),
            (&a[n - 4], n - 4),
            (&d[n - 3], n - 3),
            (&b[n - 2], n - 2),
            (&B[n - 1], n - 1),
            (&N[n], n),
        ],
        check(j)?,
        &cols,
    );
    for j in (1..=n - 8).rev() {
        cols[j] = combine(
            j + 4,
            &[
                (&M[j + 1], j + 1),
                (&A[j + 2], j + 2),
                (&a[j + 3], j + 3),
                (&d[j + 4], j + 4),
                (&b[j + 5], j + 5),
                (&B[j + 6], j + 6),
                (&N[j + 7], j + 7),
                (&R[j + 8], j + 8),
            ],
            check(j)?,
            &cols,
        );
    }

    Ok(DenseMatrix::from_fn(n, |i, j| cols[j][i - 1].clone()))
}

/// The inverse of the working matrix as a function of `t`.
pub fn symbolic_inverse<F: Field>(lu: &LuFactors<F>) -> Result<DenseMatrix<F>> {
    let six = last_six_columns(lu);
    back_columns(lu, &six)
}

/// Determinant and inverse of `m` through the structured factorization.
///
/// With `verify`, the product of `m` and the computed inverse is checked
/// against the identity.
pub fn invert<F: Field>(m: &CyclicNonadiagonal<F>, verify: bool) -> Result<InverseResult<F::Value>> {
    let lu = factorize(m)?;
    let determinant = lu.determinant()?;
    if determinant.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let inverse = symbolic_inverse(&lu)?.try_map(Field::at_zero)?;
    if verify {
        let values = m.try_map(Field::at_zero)?;
        let product = values.mul_dense(&inverse)?;
        if let Some((row, col)) = product.first_non_identity() {
            return Err(Error::VerificationFailed { row, col });
        }
    }
    Ok(InverseResult {
        inverse,
        determinant,
        verified: verify,
        substitutions: lu.substitutions().len(),
    })
}

/// Inverse of the anti-nonadiagonal matrix `Y = K R`, where `m` holds `K`
/// and `R` is the exchange matrix: `Y^-1 = R K^-1`.
pub fn anti_inverse<F: Field>(m: &CyclicNonadiagonal<F>, verify: bool) -> Result<InverseResult<F::Value>> {
    let mut result = invert(m, verify)?;
    result.inverse = result.inverse.reverse_rows();
    Ok(result)
}

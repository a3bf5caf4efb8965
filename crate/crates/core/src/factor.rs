//! Structured Doolittle factorization `K = L U` of a cyclic nonadiagonal matrix.
//!
//! `L` is unit lower triangular with four subdiagonals (`f`, `g`, `alpha`,
//! `gamma`) on rows `..= n-2` and two dense bottom rows (`k`, `h`). `U` is upper
//! triangular with diagonal `c`, three computed superdiagonals (`e`, `P`, `T`),
//! the fourth superdiagonal copied from `z`, and two dense right columns
//! (`w`, `v`). Each coefficient family is computed by its own recurrence, so
//! the whole factorization costs O(n) field operations.
//!
//! Exact mode rescues vanishing divisors with the parameter `t`: zero `z_i`
//! (`i <= n-6`) and zero `R_i` are replaced by `t` up front, and any pivot that
//! comes out identically zero is replaced by `t` as soon as it is computed.
//! Replacing `c_i` by `t` is the same as adding `t` to `d_i`, which is how the
//! rescued pivots show up in [`LuFactors::working_matrix`].

use crate::band::{Band, CyclicNonadiagonal};
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::seq::Seq;

/// One replacement of a zero by the parameter `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Substitution {
    /// A zero band entry (`z_i` or `R_i`) replaced before factorizing.
    Band { band: Band, index: usize },
    /// A pivot `c_index` that vanished identically.
    Pivot { index: usize },
}

#[derive(Clone, Debug)]
pub struct LuFactors<F> {
    n: usize,
    /// `c`, diagonal of `U`, 1..=n.
    pub pivots: Seq<F>,
    /// `e`, first superdiagonal of `U`, 1..=n-3.
    pub upper1: Seq<F>,
    /// `P`, second superdiagonal of `U`, 1..=n-4.
    pub upper2: Seq<F>,
    /// `T`, third superdiagonal of `U`, 1..=n-5.
    pub upper3: Seq<F>,
    /// `f`, first subdiagonal of `L`, 2..=n-2.
    pub lower1: Seq<F>,
    /// `g`, second subdiagonal of `L`, 3..=n-2.
    pub lower2: Seq<F>,
    /// `alpha`, third subdiagonal of `L`, 4..=n-2.
    pub lower3: Seq<F>,
    /// `gamma`, fourth subdiagonal of `L`, 5..=n-2.
    pub lower4: Seq<F>,
    /// `k`, row `n-1` of `L`, 1..=n-2.
    pub row_penultimate: Seq<F>,
    /// `h`, row `n` of `L`, 1..=n-1.
    pub row_last: Seq<F>,
    /// `w`, column `n-1` of `U`, 1..=n-2.
    pub col_penultimate: Seq<F>,
    /// `v`, column `n` of `U`, 1..=n-1.
    pub col_last: Seq<F>,
    working: CyclicNonadiagonal<F>,
    substitutions: Vec<Substitution>,
    arithmetic_ops: u64,
}

impl<F: Field> LuFactors<F> {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The matrix actually factorized: the input with every rescued zero
    /// replaced by `t` (pivot rescues appear as `d_i + t`).
    pub fn working_matrix(&self) -> &CyclicNonadiagonal<F> {
        &self.working
    }

    pub fn substitutions(&self) -> &[Substitution] {
        &self.substitutions
    }

    /// Field operations (add, subtract, multiply, divide, negate) spent in
    /// the recurrences.
    pub fn arithmetic_ops(&self) -> u64 {
        self.arithmetic_ops
    }

    /// `prod c_i` before substituting `t = 0`.
    pub fn pivot_product(&self) -> F {
        self.pivots
            .values()
            .iter()
            .fold(F::one(), |acc, c| acc.times(c))
    }

    /// Determinant of the input matrix: the pivot product at `t = 0`.
    pub fn determinant(&self) -> Result<F::Value> {
        self.pivot_product().at_zero()
    }

    pub fn assemble_l(&self) -> DenseMatrix<F> {
        let n = self.n;
        let mut l = DenseMatrix::<F>::identity(n);
        for (i, x) in self.lower1.iter() {
            l.set(i, i - 1, x.clone());
        }
        for (i, x) in self.lower2.iter() {
            l.set(i, i - 2, x.clone());
        }
        for (i, x) in self.lower3.iter() {
            l.set(i, i - 3, x.clone());
        }
        for (i, x) in self.lower4.iter() {
            l.set(i, i - 4, x.clone());
        }
        for (j, x) in self.row_penultimate.iter() {
            l.set(n - 1, j, x.clone());
        }
        for (j, x) in self.row_last.iter() {
            l.set(n, j, x.clone());
        }
        l
    }

    pub fn assemble_u(&self) -> DenseMatrix<F> {
        let n = self.n;
        let mut u = DenseMatrix::filled(n, F::zero());
        for (i, x) in self.pivots.iter() {
            u.set(i, i, x.clone());
        }
        for (i, x) in self.upper1.iter() {
            u.set(i, i + 1, x.clone());
        }
        for (i, x) in self.upper2.iter() {
            u.set(i, i + 2, x.clone());
        }
        for (i, x) in self.upper3.iter() {
            u.set(i, i + 3, x.clone());
        }
        for i in 1..=n - 6 {
            u.set(i, i + 4, self.working.get(Band::Super4, i).clone());
        }
        for (i, x) in self.col_penultimate.iter() {
            u.set(i, n - 1, x.clone());
        }
        for (i, x) in self.col_last.iter() {
            u.set(i, n, x.clone());
        }
        u
    }
}

/// Operation-counting helpers for the recurrences. Every coefficient is of
/// the form `(base - sum x*y) / pivot` or a special case of it.
struct Tally {
    ops: u64,
}

impl Tally {
    /// `base - sum(x * y)`; with no base, `-sum(x * y)`.
    fn diff<F: Field>(&mut self, base: Option<&F>, terms: &[(&F, &F)]) -> F {
        let mut sum: Option<F> = None;
        for (x, y) in terms {
            let prod = x.times(y);
            self.ops += 1;
            sum = Some(match sum {
                Some(s) => {
                    self.ops += 1;
                    s.plus(&prod)
                }
                None => prod,
            });
        }
        match (base, sum) {
            (Some(b), Some(s)) => {
                self.ops += 1;
                b.minus(&s)
            }
            (Some(b), None) => b.clone(),
            (None, Some(s)) => {
                self.ops += 1;
                s.negate()
            }
            (None, None) => F::zero(),
        }
    }

    fn quot<F: Field>(&mut self, x: F, pivot: &F) -> F {
        self.ops += 1;
        x.divide(pivot)
    }
}

/// 1-based scratch vector, sized so every subscript up to `n` is valid.
fn scratch<F: Field>(n: usize) -> Vec<F> {
    vec![F::zero(); n + 1]
}

fn pack<F: Clone>(v: &[F], first: usize, last: usize) -> Seq<F> {
    Seq::new(first, v[first..=last].to_vec())
}

/// Computes the structured factorization.
///
/// For number types with an indeterminate (exact mode) zero divisors are
/// rescued with `t` and this only fails on orders below the structured
/// minimum. Without one (float mode) a vanishing pivot is
/// [`Error::ZeroPivot`].
#[allow(non_snake_case)]
pub fn factorize<F: Field>(m: &CyclicNonadiagonal<F>) -> Result<LuFactors<F>> {
    m.validate()?;
    let n = m.order();
    let mut substitutions = Vec::new();
    let t = F::indeterminate();

    let mut working = m.clone();
    if let Some(t) = &t {
        for i in 1..=n - 6 {
            if working.get(Band::Super4, i).is_zero() {
                working.set(Band::Super4, i, t.clone());
                substitutions.push(Substitution::Band { band: Band::Super4, index: i });
            }
        }
        for i in 5..=n {
            if working.get(Band::Sub4, i).is_zero() {
                working.set(Band::Sub4, i, t.clone());
                substitutions.push(Substitution::Band { band: Band::Sub4, index: i });
            }
        }
    }

    // Band values by row subscript; index 0 and out-of-range slots stay zero.
    let band = |b: Band| {
        let mut v = scratch::<F>(n);
        for (i, x) in working.band(b).iter() {
            v[i] = x.clone();
        }
        v
    };
    let mut d = band(Band::Diag);
    let a = band(Band::Super1);
    let A = band(Band::Super2);
    let M = band(Band::Super3);
    let z = band(Band::Super4);
    let b = band(Band::Sub1);
    let B = band(Band::Sub2);
    let N = band(Band::Sub3);
    let R = band(Band::Sub4);

    let mut c = scratch::<F>(n);
    let mut e = scratch::<F>(n);
    let mut P = scratch::<F>(n);
    let mut T = scratch::<F>(n);
    let mut f = scratch::<F>(n);
    let mut g = scratch::<F>(n);
    let mut al = scratch::<F>(n);
    let mut ga = scratch::<F>(n);
    let mut k = scratch::<F>(n);
    let mut h = scratch::<F>(n);
    let mut w = scratch::<F>(n);
    let mut v = scratch::<F>(n);

    let mut tally = Tally { ops: 0 };
    let mut settle = |i: usize, value: F, c: &mut Vec<F>, d: &mut Vec<F>, ops: &mut Tally| -> Result<()> {
        if !value.is_zero() {
            c[i] = value;
            return Ok(());
        }
        match &t {
            Some(t) => {
                c[i] = t.clone();
                d[i] = d[i].plus(t);
                ops.ops += 1;
                substitutions.push(Substitution::Pivot { index: i });
                Ok(())
            }
            None => Err(Error::ZeroPivot { index: i }),
        }
    };

    // Rows 1..=4.
    settle(1, d[1].clone(), &mut c, &mut d, &mut tally)?;
    f[2] = tally.quot(b[2].clone(), &c[1]);
    g[3] = tally.quot(B[3].clone(), &c[1]);
    e[1] = a[1].clone();
    P[1] = A[1].clone();
    al[4] = tally.quot(N[4].clone(), &c[1]);
    T[1] = M[1].clone();
    k[1] = tally.quot(A[n - 1].clone(), &c[1]);
    w[1] = B[1].clone();
    h[1] = tally.quot(a[n].clone(), &c[1]);
    v[1] = b[1].clone();

    let c2 = tally.diff(Some(&d[2]), &[(&f[2], &e[1])]);
    settle(2, c2, &mut c, &mut d, &mut tally)?;
    f[3] = {
        let x = tally.diff(Some(&b[3]), &[(&g[3], &e[1])]);
        tally.quot(x, &c[2])
    };
    g[4] = {
        let x = tally.diff(Some(&B[4]), &[(&al[4], &e[1])]);
        tally.quot(x, &c[2])
    };
    e[2] = tally.diff(Some(&a[2]), &[(&f[2], &P[1])]);
    P[2] = tally.diff(Some(&A[2]), &[(&f[2], &T[1])]);
    T[2] = tally.diff(Some(&M[2]), &[(&f[2], &z[1])]);
    k[2] = {
        let x = tally.diff(None, &[(&k[1], &e[1])]);
        tally.quot(x, &c[2])
    };
    w[2] = tally.diff(None, &[(&f[2], &w[1])]);
    h[2] = {
        let x = tally.diff(Some(&A[n]), &[(&h[1], &e[1])]);
        tally.quot(x, &c[2])
    };
    v[2] = tally.diff(Some(&B[2]), &[(&f[2], &v[1])]);

    let c3 = tally.diff(Some(&d[3]), &[(&g[3], &P[1]), (&f[3], &e[2])]);
    settle(3, c3, &mut c, &mut d, &mut tally)?;
    f[4] = {
        let x = tally.diff(Some(&b[4]), &[(&al[4], &P[1]), (&g[4], &e[2])]);
        tally.quot(x, &c[3])
    };
    e[3] = tally.diff(Some(&a[3]), &[(&g[3], &T[1]), (&f[3], &P[2])]);
    P[3] = tally.diff(Some(&A[3]), &[(&g[3], &z[1]), (&f[3], &T[2])]);
    T[3] = tally.diff(Some(&M[3]), &[(&f[3], &z[2])]);
    k[3] = {
        let x = tally.diff(None, &[(&k[1], &P[1]), (&k[2], &e[2])]);
        tally.quot(x, &c[3])
    };
    w[3] = tally.diff(None, &[(&g[3], &w[1]), (&f[3], &w[2])]);
    h[3] = {
        let x = tally.diff(None, &[(&h[1], &P[1]), (&h[2], &e[2])]);
        tally.quot(x, &c[3])
    };
    v[3] = tally.diff(None, &[(&g[3], &v[1]), (&f[3], &v[2])]);

    let c4 = tally.diff(Some(&d[4]), &[(&al[4], &T[1]), (&g[4], &P[2]), (&f[4], &e[3])]);
    settle(4, c4, &mut c, &mut d, &mut tally)?;
    e[4] = tally.diff(Some(&a[4]), &[(&al[4], &z[1]), (&g[4], &T[2]), (&f[4], &P[3])]);
    P[4] = tally.diff(Some(&A[4]), &[(&g[4], &z[2]), (&f[4], &T[3])]);
    T[4] = tally.diff(Some(&M[4]), &[(&f[4], &z[3])]);
    k[4] = {
        let x = tally.diff(None, &[(&k[1], &T[1]), (&k[2], &P[2]), (&k[3], &e[3])]);
        tally.quot(x, &c[4])
    };
    w[4] = tally.diff(None, &[(&al[4], &w[1]), (&g[4], &w[2]), (&f[4], &w[3])]);
    h[4] = {
        let x = tally.diff(None, &[(&h[1], &T[1]), (&h[2], &P[2]), (&h[3], &e[3])]);
        tally.quot(x, &c[4])
    };
    v[4] = tally.diff(None, &[(&al[4], &v[1]), (&g[4], &v[2]), (&f[4], &v[3])]);

    // Band part of L and U, rows 5..=n-2. T_i and P_i are produced inside
    // the sweep because e_{i+1}, e_{i+2} and c_{i+2}, c_{i+3} read them.
    for i in 5..=n - 2 {
        ga[i] = tally.quot(R[i].clone(), &c[i - 4]);
        al[i] = {
            let x = tally.diff(Some(&N[i]), &[(&ga[i], &e[i - 4])]);
            tally.quot(x, &c[i - 3])
        };
        g[i] = {
            let x = tally.diff(Some(&B[i]), &[(&ga[i], &P[i - 4]), (&al[i], &e[i - 3])]);
            tally.quot(x, &c[i - 2])
        };
        f[i] = {
            let x = tally.diff(
                Some(&b[i]),
                &[(&ga[i], &T[i - 4]), (&al[i], &P[i - 3]), (&g[i], &e[i - 2])],
            );
            tally.quot(x, &c[i - 1])
        };
        if i <= n - 3 {
            e[i] = tally.diff(
                Some(&a[i]),
                &[(&al[i], &z[i - 3]), (&g[i], &T[i - 2]), (&f[i], &P[i - 1])],
            );
        }
        let ci = tally.diff(
            Some(&d[i]),
            &[
                (&ga[i], &z[i - 4]),
                (&al[i], &T[i - 3]),
                (&g[i], &P[i - 2]),
                (&f[i], &e[i - 1]),
            ],
        );
        settle(i, ci, &mut c, &mut d, &mut tally)?;
        if i <= n - 5 {
            T[i] = tally.diff(Some(&M[i]), &[(&f[i], &z[i - 1])]);
        }
        if i <= n - 4 {
            P[i] = tally.diff(Some(&A[i]), &[(&g[i], &z[i - 2]), (&f[i], &T[i - 1])]);
        }
    }

    // Row n-1 of L and column n-1 of U.
    for i in 5..=n - 6 {
        k[i] = {
            let x = tally.diff(
                None,
                &[
                    (&k[i - 4], &z[i - 4]),
                    (&k[i - 3], &T[i - 3]),
                    (&k[i - 2], &P[i - 2]),
                    (&k[i - 1], &e[i - 1]),
                ],
            );
            tally.quot(x, &c[i])
        };
        w[i] = tally.diff(
            None,
            &[
                (&ga[i], &w[i - 4]),
                (&al[i], &w[i - 3]),
                (&g[i], &w[i - 2]),
                (&f[i], &w[i - 1]),
            ],
        );
    }
    // The four trailing entries of k pick up R_{n-1}, N_{n-1}, B_{n-1}, b_{n-1}.
    for (i, base) in [(n - 5, &R[n - 1]), (n - 4, &N[n - 1]), (n - 3, &B[n - 1]), (n - 2, &b[n - 1])] {
        k[i] = {
            let x = tally.diff(
                Some(base),
                &[
                    (&k[i - 4], &z[i - 4]),
                    (&k[i - 3], &T[i - 3]),
                    (&k[i - 2], &P[i - 2]),
                    (&k[i - 1], &e[i - 1]),
                ],
            );
            tally.quot(x, &c[i])
        };
    }
    // Column n-1 of K holds z_{n-5}, M_{n-4}, A_{n-3}, a_{n-2} above the
    // diagonal.
    for (i, base) in [(n - 5, &z[n - 5]), (n - 4, &M[n - 4]), (n - 3, &A[n - 3]), (n - 2, &a[n - 2])] {
        w[i] = tally.diff(
            Some(base),
            &[
                (&ga[i], &w[i - 4]),
                (&al[i], &w[i - 3]),
                (&g[i], &w[i - 2]),
                (&f[i], &w[i - 1]),
            ],
        );
    }
    let kw: Vec<(&F, &F)> = (1..=n - 2).map(|i| (&k[i], &w[i])).collect();
    let cn1 = tally.diff(Some(&d[n - 1]), &kw);
    settle(n - 1, cn1, &mut c, &mut d, &mut tally)?;

    // Row n of L and column n of U.
    for i in 5..=n - 5 {
        h[i] = {
            let x = tally.diff(
                None,
                &[
                    (&h[i - 4], &z[i - 4]),
                    (&h[i - 3], &T[i - 3]),
                    (&h[i - 2], &P[i - 2]),
                    (&h[i - 1], &e[i - 1]),
                ],
            );
            tally.quot(x, &c[i])
        };
        v[i] = tally.diff(
            None,
            &[
                (&ga[i], &v[i - 4]),
                (&al[i], &v[i - 3]),
                (&g[i], &v[i - 2]),
                (&f[i], &v[i - 1]),
            ],
        );
    }
    for (i, base) in [(n - 4, &R[n]), (n - 3, &N[n]), (n - 2, &B[n])] {
        h[i] = {
            let x = tally.diff(
                Some(base),
                &[
                    (&h[i - 4], &z[i - 4]),
                    (&h[i - 3], &T[i - 3]),
                    (&h[i - 2], &P[i - 2]),
                    (&h[i - 1], &e[i - 1]),
                ],
            );
            tally.quot(x, &c[i])
        };
    }
    h[n - 1] = {
        let hw: Vec<(&F, &F)> = (1..=n - 2).map(|i| (&h[i], &w[i])).collect();
        let x = tally.diff(Some(&b[n]), &hw);
        tally.quot(x, &c[n - 1])
    };
    for (i, base) in [(n - 4, &z[n - 4]), (n - 3, &M[n - 3]), (n - 2, &A[n - 2])] {
        v[i] = tally.diff(
            Some(base),
            &[
                (&ga[i], &v[i - 4]),
                (&al[i], &v[i - 3]),
                (&g[i], &v[i - 2]),
                (&f[i], &v[i - 1]),
            ],
        );
    }
    v[n - 1] = {
        let kv: Vec<(&F, &F)> = (1..=n - 2).map(|i| (&k[i], &v[i])).collect();
        tally.diff(Some(&a[n - 1]), &kv)
    };
    let hv: Vec<(&F, &F)> = (1..=n - 1).map(|i| (&h[i], &v[i])).collect();
    let cn = tally.diff(Some(&d[n]), &hv);
    settle(n, cn, &mut c, &mut d, &mut tally)?;

    for (i, x) in d.iter().enumerate().skip(1) {
        working.set(Band::Diag, i, x.clone());
    }

    Ok(LuFactors {
        n,
        pivots: pack(&c, 1, n),
        upper1: pack(&e, 1, n - 3),
        upper2: pack(&P, 1, n - 4),
        upper3: pack(&T, 1, n - 5),
        lower1: pack(&f, 2, n - 2),
        lower2: pack(&g, 3, n - 2),
        lower3: pack(&al, 4, n - 2),
        lower4: pack(&ga, 5, n - 2),
        row_penultimate: pack(&k, 1, n - 2),
        row_last: pack(&h, 1, n - 1),
        col_penultimate: pack(&w, 1, n - 2),
        col_last: pack(&v, 1, n - 1),
        working,
        substitutions,
        arithmetic_ops: tally.ops,
    })
}

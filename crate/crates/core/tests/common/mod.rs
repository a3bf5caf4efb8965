//! Shared fixtures: the 12 x 12 worked example and random instance builders.

#![allow(dead_code)]

use nonadiag::{bareiss_det, Band, CyclicNonadiagonal, DenseMatrix, Scalar};
use num_rational::BigRational;
use rand::{rngs::StdRng, Rng};

pub fn q(s: &str) -> BigRational {
    nonadiag::scalar::parse_rational(s).unwrap()
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The worked example as a dense matrix.
pub const EXAMPLE_ROWS: [[i64; 12]; 12] = [
    [1, 1, -1, 2, 1, 0, 0, 0, 0, 0, 1, 1],
    [-2, 2, 1, 1, -1, 2, 0, 0, 0, 0, 0, 1],
    [1, 1, 2, 1, 1, -1, 1, 0, 0, 0, 0, 0],
    [1, 2, 1, -1, 1, 1, 1, 1, 0, 0, 0, 0],
    [-1, 1, 1, 2, 1, -1, -1, 1, 1, 0, 0, 0],
    [0, 1, -1, 1, 1, 1, 2, -1, 1, 2, 0, 0],
    [0, 0, -1, -1, 2, 1, -1, 2, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, -1, 1, 1, 2, 3, -1, 2],
    [0, 0, 0, 0, -2, 1, 1, -1, 2, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, -1, 3, 1, -1, -2, 1],
    [1, 0, 0, 0, 0, 0, 1, 2, 3, 1, -1, 1],
    [1, 1, 0, 0, 0, 0, 0, 1, 1, 1, -1, 1],
];

pub fn example_dense() -> DenseMatrix<BigRational> {
    DenseMatrix::from_fn(12, |i, j| int(EXAMPLE_ROWS[i - 1][j - 1]))
}

/// The worked example in band form, built band by band.
pub fn example() -> CyclicNonadiagonal<BigRational> {
    let v = |xs: &[i64]| xs.iter().map(|&x| int(x)).collect::<Vec<_>>();
    CyclicNonadiagonal::new(
        12,
        [
            v(&[1, 2, 2, -1, 1, 1, -1, 1, 2, -1, -1, 1]),
            v(&[1, 1, 1, 1, -1, 2, 2, 2, 1, -2, 1, 1]),
            v(&[-1, 1, 1, 1, -1, -1, 1, 3, 1, 1, 1, 1]),
            v(&[2, -1, -1, 1, 1, 1, 1, -1, 1]),
            v(&[1, 2, 1, 1, 1, 2, 1, 2]),
            v(&[1, -2, 1, 1, 2, 1, 1, 1, -1, 1, 1, -1]),
            v(&[1, 1, 1, 2, 1, 1, 2, -1, 1, 3, 3, 1]),
            v(&[1, 1, -1, -1, 1, 1, -1, 2, 1]),
            v(&[-1, 1, -1, 1, -2, 1, 1, 1]),
        ],
    )
    .unwrap()
}

pub const EXAMPLE_DET: i64 = 4715;

/// The example with row 7 overwritten by row 6 (after clearing the two cells
/// where their supports differ), so it is singular.
pub fn singular_example() -> CyclicNonadiagonal<BigRational> {
    let mut m = example();
    m.set(Band::Sub4, 6, int(0));
    m.set(Band::Super4, 7, int(0));
    for j in 3..=10 {
        let v = m.entry(6, j).unwrap();
        let (band, i) = m.locate(7, j).unwrap().unwrap();
        m.set(band, i, v);
    }
    m
}

/// Published factorization values: (name, first subscript, values).
pub const EXAMPLE_SEQUENCES: [(&str, usize, &[&str]); 12] = [
    ("c", 1, &["1", "4", "3", "-7/2", "29/21", "45/58", "-20/3", "77/50", "218/77", "-1088/327", "511/544", "-4715/4088"]),
    ("f", 2, &["-2", "0", "3/4", "-10/21", "33/58", "8/3", "-49/300", "38/77", "13/218"]),
    ("g", 3, &["1", "1/4", "1/6", "1/7", "44/29", "11/45", "-53/150", "116/77"]),
    ("alpha", 4, &["1", "1/2", "-1/4", "8/21", "39/58", "-46/45", "52/75"]),
    ("gamma", 5, &["-1", "1/4", "-1/3", "-2/7", "-42/29", "58/45"]),
    ("e", 1, &["1", "-1", "-1", "-1/4", "-26/21", "163/58", "14/3", "19/20", "48/77"]),
    ("P", 1, &["-1", "5", "0", "5/4", "-22/21", "-115/58", "-5/3", "541/300"]),
    ("T", 1, &["2", "1", "-1", "1/4", "31/21", "25/58", "-13/3"]),
    ("k", 1, &["1", "-1/4", "1/4", "1/7", "-15/29", "-4/45", "-19/300", "137/77", "271/436", "1761/2176"]),
    ("h", 1, &["1", "0", "1/3", "10/21", "-37/58", "-61/45", "-121/300", "3/7", "44/109", "-307/1088", "-1146/511"]),
    ("w", 1, &["1", "2", "-1", "-3/4", "-4/21", "-31/58", "8/3", "-13/25", "106/77", "-268/109"]),
    ("v", 1, &["1", "3", "-1", "-1", "-17/21", "-23/58", "7/3", "821/300", "-85/77", "-2723/654", "101/4352"]),
];

/// Published inverse of the example.
pub const EXAMPLE_INVERSE: [[&str; 12]; 12] = [
    ["231/4715", "199/943", "3154/4715", "-3181/4715", "-2187/4715", "142/4715", "1562/4715", "-1998/4715", "-171/943", "-689/4715", "1282/4715", "3032/4715"],
    ["79/943", "-170/943", "-591/943", "643/943", "440/943", "-29/943", "-319/943", "76/943", "75/943", "-105/943", "-129/943", "98/943"],
    ["-1172/4715", "15/943", "3062/4715", "-1088/4715", "-416/4715", "96/4715", "1056/4715", "-89/4715", "243/943", "1128/4715", "-1524/4715", "456/4715"],
    ["33/205", "46/41", "187/205", "-308/205", "-166/205", "-9/205", "106/205", "-139/205", "-42/41", "-157/205", "271/205", "111/205"],
    ["-107/943", "-1608/943", "-620/943", "1600/943", "1111/943", "469/943", "-499/943", "852/943", "1486/943", "1503/943", "-2141/943", "-837/943"],
    ["-26/205", "6/41", "126/205", "-99/205", "-68/205", "63/205", "78/205", "-52/205", "7/41", "74/205", "-52/205", "43/205"],
    ["896/4715", "629/943", "89/4715", "-1051/4715", "-2482/4715", "-878/4715", "-228/4715", "-463/4715", "-749/943", "-3244/4715", "5687/4715", "-1813/4715"],
    ["1147/4715", "2025/943", "4108/4715", "-9202/4715", "-7124/4715", "-3071/4715", "3939/4715", "-4471/4715", "-2086/943", "-8973/4715", "13979/4715", "3094/4715"],
    ["-824/4715", "-1412/943", "-3576/4715", "6734/4715", "5903/4715", "1902/4715", "-2653/4715", "2657/4715", "1455/943", "5846/4715", "-7798/4715", "-2753/4715"],
    ["-507/4715", "1388/943", "4712/4715", "-8388/4715", "-5426/4715", "-924/4715", "3981/4715", "-3269/4715", "-1278/943", "-6142/4715", "7596/4715", "5041/4715"],
    ["1188/4715", "754/943", "1402/4715", "-2888/4715", "-2491/4715", "-1964/4715", "1971/4715", "-1519/4715", "-610/943", "-4217/4715", "5246/4715", "101/4715"],
    ["746/4715", "-1276/943", "-4041/4715", "7934/4715", "4143/4715", "132/4715", "-3263/4715", "5182/4715", "1395/943", "6266/4715", "-9168/4715", "-4088/4715"],
];

/// Published inverse of the example's anti-nonadiagonal counterpart.
pub const EXAMPLE_ANTI_INVERSE: [[&str; 12]; 12] = [
    ["746/4715", "-1276/943", "-4041/4715", "7934/4715", "4143/4715", "132/4715", "-3263/4715", "5182/4715", "1395/943", "6266/4715", "-9168/4715", "-4088/4715"],
    ["1188/4715", "754/943", "1402/4715", "-2888/4715", "-2491/4715", "-1964/4715", "1971/4715", "-1519/4715", "-610/943", "-4217/4715", "5246/4715", "101/4715"],
    ["-507/4715", "1388/943", "4712/4715", "-8388/4715", "-5426/4715", "-924/4715", "3981/4715", "-3269/4715", "-1278/943", "-6142/4715", "7596/4715", "5041/4715"],
    ["-824/4715", "-1412/943", "-3576/4715", "6734/4715", "5903/4715", "1902/4715", "-2653/4715", "2657/4715", "1455/943", "5846/4715", "-7798/4715", "-2753/4715"],
    ["1147/4715", "2025/943", "4108/4715", "-9202/4715", "-7124/4715", "-3071/4715", "3939/4715", "-4471/4715", "-2086/943", "-8973/4715", "13979/4715", "3094/4715"],
    ["896/4715", "629/943", "89/4715", "-1051/4715", "-2482/4715", "-878/4715", "-228/4715", "-463/4715", "-749/943", "-3244/4715", "5687/4715", "-1813/4715"],
    ["-26/205", "6/41", "126/205", "-99/205", "-68/205", "63/205", "78/205", "-52/205", "7/41", "74/205", "-52/205", "43/205"],
    ["-107/943", "-1608/943", "-620/943", "1600/943", "1111/943", "469/943", "-499/943", "852/943", "1486/943", "1503/943", "-2141/943", "-837/943"],
    ["33/205", "46/41", "187/205", "-308/205", "-166/205", "-9/205", "106/205", "-139/205", "-42/41", "-157/205", "271/205", "111/205"],
    ["-1172/4715", "15/943", "3062/4715", "-1088/4715", "-416/4715", "96/4715", "1056/4715", "-89/4715", "243/943", "1128/4715", "-1524/4715", "456/4715"],
    ["79/943", "-170/943", "-591/943", "643/943", "440/943", "-29/943", "-319/943", "76/943", "75/943", "-105/943", "-129/943", "98/943"],
    ["231/4715", "199/943", "3154/4715", "-3181/4715", "-2187/4715", "142/4715", "1562/4715", "-1998/4715", "-171/943", "-689/4715", "1282/4715", "3032/4715"],
];

pub fn table(rows: &[[&str; 12]; 12]) -> DenseMatrix<BigRational> {
    DenseMatrix::from_fn(12, |i, j| q(rows[i - 1][j - 1]))
}

pub fn to_scalar(m: &CyclicNonadiagonal<BigRational>) -> CyclicNonadiagonal<Scalar> {
    m.map(|x| Scalar::from(x.clone()))
}

/// Uniform integer entries in `[-range, range]`; with `nonzero`, zeros are
/// redrawn.
pub fn random_matrix(rng: &mut StdRng, n: usize, range: i64, nonzero: bool) -> CyclicNonadiagonal<BigRational> {
    CyclicNonadiagonal::from_fn(n, |_, _| loop {
        let v = rng.gen_range(-range..=range);
        if v != 0 || !nonzero {
            break int(v);
        }
    })
    .unwrap()
}

fn leading_minor(x: &DenseMatrix<BigRational>, k: usize) -> BigRational {
    bareiss_det(&DenseMatrix::from_fn(k, |i, j| x.get(i, j).clone()))
}

/// A nonsingular instance whose factorization needs rescues.
pub struct RescueInstance {
    pub matrix: CyclicNonadiagonal<BigRational>,
    /// Row whose pivot vanishes.
    pub pivot: usize,
    pub zero_z: Vec<usize>,
    pub zero_r: Vec<usize>,
}

impl RescueInstance {
    pub fn planted(&self) -> usize {
        1 + self.zero_z.len() + self.zero_r.len()
    }
}

/// Builds an instance with nonzero random entries except for
///
/// * `z_i = 0` for at least two `i` in `p+1..=n-6`,
/// * `R_i = 0` for at least one `i` in `p+1..=n`,
/// * `d_p` chosen so that the `p`-th leading minor vanishes while all
///   smaller ones do not, which makes the pivot `c_p` zero.
///
/// The zeros sit outside the leading `p x p` block, so they do not disturb
/// `c_p`.
pub fn rescue_instance(rng: &mut StdRng, n: usize) -> RescueInstance {
    assert!(n >= 14);
    loop {
        let p = rng.gen_range(5..=n - 8);
        let mut m = random_matrix(rng, n, 5, true);
        let z_slots: Vec<usize> = (p + 1..=n - 6).collect();
        let r_slots: Vec<usize> = (p + 1..=n).collect();
        let nz = rng.gen_range(2..=z_slots.len().min(3));
        let nr = rng.gen_range(1..=r_slots.len().min(3));
        let zero_z = sample(rng, &z_slots, nz);
        let zero_r = sample(rng, &r_slots, nr);
        for &i in &zero_z {
            m.set(Band::Super4, i, int(0));
        }
        for &i in &zero_r {
            m.set(Band::Sub4, i, int(0));
        }

        m.set(Band::Diag, p, int(0));
        let dense = m.to_dense();
        let minors: Vec<BigRational> = (1..=p).map(|k| leading_minor(&dense, k)).collect();
        if minors[..p - 1].iter().any(|x| *x == int(0)) {
            continue;
        }
        // D_p is affine in d_p with slope D_{p-1}.
        let dp = -(&minors[p - 1] / &minors[p - 2]);
        if dp == int(0) {
            continue;
        }
        m.set(Band::Diag, p, dp);
        if bareiss_det(&m.to_dense()) == int(0) {
            continue;
        }
        return RescueInstance {
            matrix: m,
            pivot: p,
            zero_z,
            zero_r,
        };
    }
}

fn sample(rng: &mut StdRng, slots: &[usize], k: usize) -> Vec<usize> {
    let mut picked: Vec<usize> = rand::seq::index::sample(rng, slots.len(), k)
        .into_iter()
        .map(|i| slots[i])
        .collect();
    picked.sort_unstable();
    picked
}

//! Small exact integer matrix helpers shared by the root-system and Weyl
//! group modules. Matrices are dense `Vec<Vec<i64>>` in row-major order;
//! every operation is exact or panics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// `a * b` with i128 accumulation; panics on (unreachable at our sizes) overflow.
pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc: i128 = 0;
            for k in 0..n {
                acc += a[i][k] as i128 * b[k][j] as i128;
            }
            out[i][j] = i64::try_from(acc).expect("matrix entry overflow");
        }
    }
    out
}

/// Apply `m` to a big-integer column vector.
pub fn mat_apply_big(m: &[Vec<i64>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| {
            let mut acc = BigInt::zero();
            for (c, x) in row.iter().zip(v) {
                acc += x * *c;
            }
            acc
        })
        .collect()
}

/// Determinant and adjugate (inverse times determinant) of an integer matrix,
/// via exact rational Gaussian elimination. Panics if the matrix is singular
/// or the adjugate is not integral (it always is for integer input).
#[allow(clippy::needless_range_loop)]
pub fn det_and_adjugate(m: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = m.len();
    // Augmented [M | I] over exact rationals.
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from(BigInt::from(m[i][j]))
                    } else {
                        BigRational::from(BigInt::from(i64::from(j - n == i)))
                    }
                })
                .collect()
        })
        .collect();

    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for j in 0..2 * n {
            a[col][j] = &a[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    let sub = &f * &a[col][j];
                    a[r][j] = &a[r][j] - sub;
                }
            }
        }
    }

    assert!(det.is_integer(), "integer matrix has integer determinant");
    let det_big = det.to_integer();
    let adj: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (n..2 * n)
                .map(|j| {
                    let e = &a[i][j] * BigRational::from(det_big.clone());
                    assert!(e.is_integer(), "adjugate entry must be integral");
                    i64::try_from(e.to_integer()).expect("adjugate entry overflow")
                })
                .collect()
        })
        .collect();
    let det_i64 = i64::try_from(det_big).expect("determinant overflow");
    assert!(det_i64 != 0);
    (det_i64, adj)
}

/// True iff `det` divides every entry of `scaled`.
pub fn all_divisible(scaled: &[BigInt], det: i64) -> bool {
    let d = BigInt::from(det);
    scaled.iter().all(|x| (x % &d).is_zero())
}

/// Divide each entry by `det`, panicking on inexact division.
pub fn divide_exact(scaled: &[BigInt], det: i64) -> Vec<BigInt> {
    let d = BigInt::from(det);
    scaled
        .iter()
        .map(|x| {
            let (q, r) = num_integer::Integer::div_rem(x, &d);
            assert!(r.is_zero(), "inexact division");
            q
        })
        .collect()
}

/// Exact signed conversion used when lattice data is known to be small.
pub fn to_i64(v: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    v.to_i64().unwrap_or_else(|| {
        panic!(
            "coordinate {v} exceeds the supported range ({} bits)",
            v.abs().bits()
        )
    })
}

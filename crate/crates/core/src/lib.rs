//! Exact root-system combinatorics for the cohomology of finite Chevalley
//! groups.
//!
//! The crate is organized bottom-up:
//!
//! * [`rootsys`]: irreducible root systems (types A-D, G2, F4) with Bourbaki
//!   numbering, weights carried in fundamental-weight and simple-root
//!   coordinates, and all lattice arithmetic.
//! * [`weyl`]: finite Weyl group enumeration, linear and dot actions,
//!   lengths, signs, and the distinct-positive-root decomposition of -w.0.
//! * [`kostant`]: the Kostant partition function P_n(nu) as a memoized
//!   dynamic program, plus an independent brute-force oracle.
//! * [`cohom`]: the dimension formula for the degree-i cohomology of
//!   H^0(lambda) (x) H^0(lambda*)^(1) as an alternating sum of partition
//!   counts over the Weyl group, degree lower bounds, and the reference
//!   table of known sharp vanishing bounds.
//! * [`scan`]: exhaustive vanishing-range scans over all candidate weights
//!   and verifiers that compare scan results against the reference table.
//!
//! All arithmetic is exact: weights use arbitrary-precision integers and
//! rationals, partition counts are big integers, and no floating point
//! appears anywhere.

pub mod cohom;
pub mod error;
pub mod kostant;
mod linalg;
pub mod rootsys;
pub mod scan;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{Family, RootSystem, RootSystemSpec, Weight};
pub use weyl::{WeylElement, WeylGroup};

/// Deterministic primality test for the moduli used by the engine.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::is_prime;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }
}

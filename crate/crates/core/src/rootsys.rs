//! Irreducible root systems with Bourbaki numbering.
//!
//! Roots are constructed internally from the standard ε-coordinate
//! realizations (stored with doubled entries so that F₄'s half-integral
//! simple root stays integral) and immediately converted to simple-root
//! coordinates; the ε-basis is not part of the public data model. A
//! [`Weight`] carries its coordinates in both standard bases at once:
//! integers over the fundamental weights ω₁,…,ωₙ and exact rationals over
//! the simple roots α₁,…,αₙ.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// The six irreducible families handled by the engine (E₆–E₈ are out of
/// range for desk-scale scans and are not constructed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    F,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
            Family::F => 'F',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G" | "g" => Ok(Family::G),
            "F" | "f" => Ok(Family::F),
            other => Err(format!(
                "unknown family {other:?} (expected A, B, C, D, G or F)"
            )),
        }
    }
}

/// Type and rank of an irreducible system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    /// Validates the rank against the family (D₃ is permitted; it is
    /// isomorphic to A₃ but keeps its own numbering).
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::G => rank == 2,
            Family::F => rank == 4,
        };
        if !ok {
            let expected = match family {
                Family::A => "rank >= 1",
                Family::B | Family::C => "rank >= 2",
                Family::D => "rank >= 3",
                Family::G => "rank = 2",
                Family::F => "rank = 4",
            };
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                expected,
            });
        }
        Ok(RootSystemSpec { family, rank })
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A lattice vector carried simultaneously in fundamental-weight integer
/// coordinates and simple-root rational coordinates. The two vectors are
/// related by the Cartan matrix and stay consistent by construction.
#[derive(Debug, Clone)]
pub struct Weight {
    fund: Vec<BigInt>,
    root: Vec<BigRational>,
}

impl Weight {
    pub fn fund_coords(&self) -> &[BigInt] {
        &self.fund
    }

    pub fn root_coords(&self) -> &[BigRational] {
        &self.root
    }

    pub fn rank(&self) -> usize {
        self.fund.len()
    }

    pub fn is_zero(&self) -> bool {
        self.fund.iter().all(Zero::is_zero)
    }

    /// Fundamental coordinates as machine integers (they are small at every
    /// scale this engine targets).
    pub fn fund_i64(&self) -> Vec<i64> {
        self.fund.iter().map(linalg::to_i64).collect()
    }

    /// Root coordinates if they are all integral, e.g. for partition-function
    /// arguments. `None` means the weight is outside the root lattice.
    pub fn root_coords_i64(&self) -> Option<Vec<i64>> {
        self.root
            .iter()
            .map(|r| r.is_integer().then(|| linalg::to_i64(&r.to_integer())))
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Weight {
        Weight {
            fund: self.fund.iter().map(|x| x * k).collect(),
            root: self
                .root
                .iter()
                .map(|x| x * BigRational::from(k.clone()))
                .collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Weight {
        self.scale(&BigInt::from(k))
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.fund == other.fund
    }
}

impl Eq for Weight {}

impl std::hash::Hash for Weight {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.fund.hash(state);
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    /// Lexicographic on fundamental coordinates; used only to make reports
    /// and candidate lists deterministic.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.fund.cmp(&other.fund)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.fund.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            fund: self
                .fund
                .iter()
                .zip(&rhs.fund)
                .map(|(a, b)| a + b)
                .collect(),
            root: self
                .root
                .iter()
                .zip(&rhs.root)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            fund: self
                .fund
                .iter()
                .zip(&rhs.fund)
                .map(|(a, b)| a - b)
                .collect(),
            root: self
                .root
                .iter()
                .zip(&rhs.root)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            fund: self.fund.iter().map(|a| -a).collect(),
            root: self.root.iter().map(|a| -a).collect(),
        }
    }
}

/// The maximum-coefficient statistics of a weight written over the simple
/// roots: the coefficient list, its maximum, and the largest index attaining
/// the maximum (1-based, following the classical convention).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffStats {
    pub coefficients: Vec<BigRational>,
    pub max: BigRational,
    pub argmax: usize,
}

/// Immutable tables for one irreducible root system.
#[derive(Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    cartan_det: i64,
    cartan_adjugate: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    simple_norm2: Vec<i64>,
    positive_roots: Vec<Weight>,
    pos_root_i64: Vec<Vec<i64>>,
    pos_fund_i64: Vec<Vec<i64>>,
    pos_norm2: Vec<i64>,
    index_by_fund: HashMap<Vec<i64>, usize>,
    rho: Weight,
    highest: usize,
    highest_short: usize,
    coxeter: u64,
    w0_matrix: Vec<Vec<i64>>,
}

/// Doubled ε-coordinates of the simple and positive roots for one family.
fn epsilon_realization(spec: RootSystemSpec) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = spec.rank;
    let unit = |dim: usize, i: usize, v: i64| {
        let mut e = vec![0i64; dim];
        e[i] = v;
        e
    };
    let pair = |dim: usize, i: usize, vi: i64, j: usize, vj: i64| {
        let mut e = vec![0i64; dim];
        e[i] = vi;
        e[j] = vj;
        e
    };
    match spec.family {
        Family::A => {
            let dim = n + 1;
            let simple: Vec<_> = (0..n).map(|i| pair(dim, i, 2, i + 1, -2)).collect();
            let mut pos = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    pos.push(pair(dim, i, 2, j, -2));
                }
            }
            (simple, pos)
        }
        Family::B => {
            let mut simple: Vec<_> = (0..n - 1).map(|i| pair(n, i, 2, i + 1, -2)).collect();
            simple.push(unit(n, n - 1, 2));
            let mut pos = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(pair(n, i, 2, j, -2));
                    pos.push(pair(n, i, 2, j, 2));
                }
                pos.push(unit(n, i, 2));
            }
            (simple, pos)
        }
        Family::C => {
            let mut simple: Vec<_> = (0..n - 1).map(|i| pair(n, i, 2, i + 1, -2)).collect();
            simple.push(unit(n, n - 1, 4));
            let mut pos = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(pair(n, i, 2, j, -2));
                    pos.push(pair(n, i, 2, j, 2));
                }
                pos.push(unit(n, i, 4));
            }
            (simple, pos)
        }
        Family::D => {
            let mut simple: Vec<_> = (0..n - 1).map(|i| pair(n, i, 2, i + 1, -2)).collect();
            simple.push(pair(n, n - 2, 2, n - 1, 2));
            let mut pos = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(pair(n, i, 2, j, -2));
                    pos.push(pair(n, i, 2, j, 2));
                }
            }
            (simple, pos)
        }
        Family::G => {
            let simple = vec![vec![2, -2, 0], vec![-4, 2, 2]];
            // α₁, α₂, α₁+α₂, 2α₁+α₂, 3α₁+α₂, 3α₁+2α₂
            let pos = vec![
                vec![2, -2, 0],
                vec![-4, 2, 2],
                vec![-2, 0, 2],
                vec![0, -2, 2],
                vec![2, -4, 2],
                vec![-2, -2, 4],
            ];
            (simple, pos)
        }
        Family::F => {
            let simple = vec![
                vec![0, 2, -2, 0],
                vec![0, 0, 2, -2],
                vec![0, 0, 0, 2],
                vec![1, -1, -1, -1],
            ];
            let mut pos = Vec::new();
            for i in 0..4 {
                pos.push(unit(4, i, 2));
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    pos.push(pair(4, i, 2, j, -2));
                    pos.push(pair(4, i, 2, j, 2));
                }
            }
            for s2 in [-1i64, 1] {
                for s3 in [-1i64, 1] {
                    for s4 in [-1i64, 1] {
                        pos.push(vec![1, s2, s3, s4]);
                    }
                }
            }
            (simple, pos)
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn expected_positive_count(spec: RootSystemSpec) -> usize {
    let n = spec.rank;
    match spec.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::G => 6,
        Family::F => 24,
    }
}

fn expected_coxeter(spec: RootSystemSpec) -> u64 {
    let n = spec.rank as u64;
    match spec.family {
        Family::A => n + 1,
        Family::B | Family::C => 2 * n,
        Family::D => 2 * n - 2,
        Family::G => 6,
        Family::F => 12,
    }
}

impl RootSystem {
    /// Constructs the system: simple and positive roots, Cartan data,
    /// fundamental-weight conversion tables, ρ, highest (short) root,
    /// Coxeter number and the longest-element matrix. All invariants are
    /// asserted during construction.
    pub fn build(spec: RootSystemSpec) -> Result<RootSystem> {
        RootSystemSpec::new(spec.family, spec.rank)?;
        let n = spec.rank;
        let (simple_eps, pos_eps) = epsilon_realization(spec);
        assert_eq!(pos_eps.len(), expected_positive_count(spec));

        let simple_norm2: Vec<i64> = simple_eps.iter().map(|a| dot(a, a)).collect();

        // cartan[i][j] = <alpha_j, alpha_i^vee>
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let num = 2 * dot(&simple_eps[j], &simple_eps[i]);
                        assert_eq!(num % simple_norm2[i], 0);
                        num / simple_norm2[i]
                    })
                    .collect()
            })
            .collect();
        let (cartan_det, cartan_adjugate) = linalg::det_and_adjugate(&cartan);

        // Fundamental and simple-root coordinates of each positive root.
        let mut table: Vec<(Vec<i64>, Vec<i64>, i64)> = pos_eps
            .iter()
            .map(|v| {
                let fund: Vec<i64> = (0..n)
                    .map(|i| {
                        let num = 2 * dot(v, &simple_eps[i]);
                        assert_eq!(num % simple_norm2[i], 0);
                        num / simple_norm2[i]
                    })
                    .collect();
                let root: Vec<i64> = (0..n)
                    .map(|i| {
                        let num: i64 = (0..n).map(|j| cartan_adjugate[i][j] * fund[j]).sum();
                        assert_eq!(num % cartan_det, 0, "positive root outside root lattice");
                        num / cartan_det
                    })
                    .collect();
                assert!(root.iter().all(|&c| c >= 0));
                (root, fund, dot(v, v))
            })
            .collect();
        // Fixed order: ascending height, ties by lexicographic root coordinates.
        table.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
        });

        let pos_root_i64: Vec<Vec<i64>> = table.iter().map(|t| t.0.clone()).collect();
        let pos_fund_i64: Vec<Vec<i64>> = table.iter().map(|t| t.1.clone()).collect();
        let pos_norm2: Vec<i64> = table.iter().map(|t| t.2).collect();

        let make_weight = |fund: &[i64], root: &[i64]| Weight {
            fund: fund.iter().map(|&x| BigInt::from(x)).collect(),
            root: root
                .iter()
                .map(|&x| BigRational::from(BigInt::from(x)))
                .collect(),
        };
        let positive_roots: Vec<Weight> = pos_fund_i64
            .iter()
            .zip(&pos_root_i64)
            .map(|(f, r)| make_weight(f, r))
            .collect();

        let mut index_by_fund = HashMap::new();
        for (k, f) in pos_fund_i64.iter().enumerate() {
            index_by_fund.insert(f.clone(), k);
        }

        // Simple roots as weights: fund coords of alpha_i form column i of the
        // Cartan matrix, root coords are the standard basis vector.
        let simple_roots: Vec<Weight> = (0..n)
            .map(|i| {
                let fund: Vec<i64> = (0..n).map(|j| cartan[j][i]).collect();
                let mut root = vec![0i64; n];
                root[i] = 1;
                make_weight(&fund, &root)
            })
            .collect();

        // rho = half the sum of the positive roots; its fundamental
        // coordinates must be (1, ..., 1).
        let mut rho_root2 = vec![0i64; n];
        let mut rho_fund2 = vec![0i64; n];
        for k in 0..pos_root_i64.len() {
            for i in 0..n {
                rho_root2[i] += pos_root_i64[k][i];
                rho_fund2[i] += pos_fund_i64[k][i];
            }
        }
        assert!(rho_fund2.iter().all(|&x| x == 2));
        let rho = Weight {
            fund: vec![BigInt::from(1); n],
            root: rho_root2
                .iter()
                .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(2)))
                .collect(),
        };

        let count = pos_root_i64.len();
        let height_of = |k: usize| -> i64 { pos_root_i64[k].iter().sum() };
        let highest = count - 1;
        if count > 1 {
            assert!(
                height_of(highest) > height_of(highest - 1),
                "highest root unique"
            );
        }

        let min_norm = *pos_norm2.iter().min().unwrap();
        let max_norm = *pos_norm2.iter().max().unwrap();
        let highest_short = if min_norm == max_norm {
            highest
        } else {
            let shorts: Vec<usize> = (0..count).filter(|&k| pos_norm2[k] == min_norm).collect();
            let best = *shorts
                .iter()
                .max_by_key(|&&k| (height_of(k), pos_root_i64[k].clone()))
                .unwrap();
            assert!(
                shorts
                    .iter()
                    .all(|&k| k == best || height_of(k) < height_of(best)),
                "highest short root unique"
            );
            best
        };

        let coxeter = (height_of(highest) + 1) as u64;
        assert_eq!(coxeter, expected_coxeter(spec));

        // Longest element: drive rho to the antidominant chamber, recording
        // the product of simple reflections along the way.
        let mut w0_matrix = linalg::identity(n);
        let mut current = vec![1i64; n];
        while let Some(i) = (0..n).find(|&i| current[i] > 0) {
            let ci = current[i];
            for j in 0..n {
                current[j] -= ci * cartan[j][i];
            }
            // left-multiply by the reflection matrix s_i
            let mut s = linalg::identity(n);
            for j in 0..n {
                s[j][i] -= cartan[j][i];
            }
            w0_matrix = linalg::mat_mul(&s, &w0_matrix);
        }
        assert!(current.iter().all(|&x| x == -1));

        let rs = RootSystem {
            spec,
            cartan,
            cartan_det,
            cartan_adjugate,
            simple_roots,
            simple_norm2,
            positive_roots,
            pos_root_i64,
            pos_fund_i64,
            pos_norm2,
            index_by_fund,
            rho,
            highest,
            highest_short,
            coxeter,
            w0_matrix,
        };
        // h = <rho, alpha_0^vee> + 1 for the highest short root alpha_0.
        let via_short = rs.pairing(&rs.rho, rs.highest_short);
        assert_eq!(
            BigRational::from(BigInt::from(rs.coxeter as i64 - 1)),
            via_short
        );
        Ok(rs)
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn label(&self) -> String {
        self.spec.label()
    }

    /// `cartan()[i][j]` is the pairing of α_j against the coroot of α_i.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_det(&self) -> i64 {
        self.cartan_det
    }

    /// Inverse Cartan matrix times the determinant; all entries integral.
    pub fn cartan_adjugate(&self) -> &[Vec<i64>] {
        &self.cartan_adjugate
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_root(&self, index: usize) -> &Weight {
        &self.positive_roots[index]
    }

    /// Integer root coordinates of every positive root, in table order.
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.pos_root_i64
    }

    /// Integer fundamental coordinates of a positive root, without the
    /// big-integer round trip.
    pub fn positive_root_fund(&self, index: usize) -> &[i64] {
        &self.pos_fund_i64[index]
    }

    pub fn simple_root(&self, index: usize) -> &Weight {
        &self.simple_roots[index]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    pub fn highest_root(&self) -> &Weight {
        &self.positive_roots[self.highest]
    }

    pub fn highest_short_root_index(&self) -> usize {
        self.highest_short
    }

    pub fn highest_short_root(&self) -> &Weight {
        &self.positive_roots[self.highest_short]
    }

    pub fn coxeter_number(&self) -> u64 {
        self.coxeter
    }

    pub fn is_long_root(&self, index: usize) -> bool {
        self.pos_norm2[index] == self.pos_norm2[self.highest]
    }

    /// Index of a positive root given its fundamental coordinates.
    pub fn root_index_by_fund(&self, fund: &[i64]) -> Option<usize> {
        self.index_by_fund.get(fund).copied()
    }

    pub fn zero_weight(&self) -> Weight {
        self.weight_from_fund(&vec![0; self.rank()])
    }

    /// ω_{index+1} (indices are 0-based in code, 1-based in the usual
    /// numbering).
    pub fn fundamental_weight(&self, index: usize) -> Weight {
        let mut f = vec![0i64; self.rank()];
        f[index] = 1;
        self.weight_from_fund(&f)
    }

    pub fn weight_from_fund(&self, fund: &[i64]) -> Weight {
        self.weight_from_fund_big(fund.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn weight_from_fund_big(&self, fund: Vec<BigInt>) -> Weight {
        assert_eq!(fund.len(), self.rank());
        let det = BigInt::from(self.cartan_det);
        let root = (0..self.rank())
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, f) in fund.iter().enumerate() {
                    acc += f * self.cartan_adjugate[i][j];
                }
                BigRational::new(acc, det.clone())
            })
            .collect();
        Weight { fund, root }
    }

    /// Weight with the given integral simple-root coordinates.
    pub fn weight_from_root_ints(&self, root: &[i64]) -> Weight {
        assert_eq!(root.len(), self.rank());
        let fund = (0..self.rank())
            .map(|i| {
                let acc: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * root[j]).sum();
                BigInt::from(acc)
            })
            .collect();
        Weight {
            fund,
            root: root
                .iter()
                .map(|&x| BigRational::from(BigInt::from(x)))
                .collect(),
        }
    }

    /// Adjugate-Cartan image of fundamental coordinates: root coordinates
    /// scaled by the Cartan determinant. Hot-path helper for integrality
    /// checks without rational arithmetic.
    pub(crate) fn fund_to_root_scaled(&self, fund: &[BigInt]) -> Vec<BigInt> {
        linalg::mat_apply_big(&self.cartan_adjugate, fund)
    }

    /// ⟨λ, β∨⟩ for the positive root with the given index. Exact rational;
    /// an integer whenever λ is in the weight lattice.
    pub fn pairing(&self, lambda: &Weight, root_index: usize) -> BigRational {
        let b = &self.pos_root_i64[root_index];
        let mut num = BigInt::zero();
        for ((f, b), d) in lambda.fund.iter().zip(b).zip(&self.simple_norm2) {
            num += f * (b * d);
        }
        BigRational::new(num, BigInt::from(self.pos_norm2[root_index]))
    }

    /// λ* = −w₀λ. An involution; maps dominant weights to dominant weights.
    pub fn dual_weight(&self, lambda: &Weight) -> Weight {
        let image = linalg::mat_apply_big(&self.w0_matrix, &lambda.fund);
        self.weight_from_fund_big(image.iter().map(|x| -x).collect())
    }

    /// Coefficient statistics of γ = Σ c_j α_j: the c_j themselves, their
    /// maximum, and the largest (1-based) index attaining it.
    pub fn coeff_stats(&self, gamma: &Weight) -> CoeffStats {
        let coefficients = gamma.root.clone();
        let max = coefficients.iter().max().expect("rank >= 1").clone();
        let argmax = coefficients.iter().rposition(|c| *c == max).unwrap() + 1;
        CoeffStats {
            coefficients,
            max,
            argmax,
        }
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.fund.iter().all(|c| !c.is_negative())
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self, lambda: &Weight) -> BigRational {
        let mut acc = BigRational::zero();
        for c in &lambda.root {
            acc += c;
        }
        acc
    }

    pub fn in_root_lattice(&self, lambda: &Weight) -> bool {
        lambda.root.iter().all(|c| c.is_integer())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemSpec { family, rank }).unwrap()
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_validation() {
        assert!(RootSystemSpec::new(Family::A, 0).is_err());
        assert!(RootSystemSpec::new(Family::B, 1).is_err());
        assert!(RootSystemSpec::new(Family::C, 1).is_err());
        assert!(RootSystemSpec::new(Family::D, 2).is_err());
        assert!(RootSystemSpec::new(Family::D, 3).is_ok());
        assert!(RootSystemSpec::new(Family::G, 3).is_err());
        assert!(RootSystemSpec::new(Family::F, 5).is_err());
        assert!(RootSystem::build(RootSystemSpec {
            family: Family::G,
            rank: 4
        })
        .is_err());
    }

    #[test]
    fn a2_tables() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.coxeter_number(), 3);
        assert_eq!(a2.highest_root().fund_i64(), vec![1, 1]);
    }

    #[test]
    fn c2_tables() {
        let c2 = rs(Family::C, 2);
        assert_eq!(c2.num_positive_roots(), 4);
        assert_eq!(c2.coxeter_number(), 4);
        // longest root is 2*omega_1
        assert_eq!(c2.highest_root().fund_i64(), vec![2, 0]);
        // highest short root is omega_2
        assert_eq!(c2.highest_short_root().fund_i64(), vec![0, 1]);
    }

    #[test]
    fn a3_omega2_root_coords() {
        let a3 = rs(Family::A, 3);
        let w2 = a3.fundamental_weight(1);
        assert_eq!(
            w2.root_coords(),
            &[rational(1, 2), rational(1, 1), rational(1, 2)]
        );
    }

    #[test]
    fn standard_counts_and_coxeter_numbers() {
        for (family, rank, count, h) in [
            (Family::A, 1, 1, 2),
            (Family::A, 4, 10, 5),
            (Family::B, 2, 4, 4),
            (Family::B, 3, 9, 6),
            (Family::C, 3, 9, 6),
            (Family::D, 3, 6, 4),
            (Family::D, 4, 12, 6),
            (Family::G, 2, 6, 6),
            (Family::F, 4, 24, 12),
        ] {
            let r = rs(family, rank);
            assert_eq!(r.num_positive_roots(), count, "{}", r.label());
            assert_eq!(r.coxeter_number(), h, "{}", r.label());
        }
    }

    #[test]
    fn rho_is_all_ones_and_half_sum() {
        for (family, rank) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
        ] {
            let r = rs(family, rank);
            assert!(r.rho().fund_coords().iter().all(|c| *c == BigInt::from(1)));
            // sum over positive roots equals 2*rho in both coordinate systems
            let mut total = r.zero_weight();
            for beta in r.positive_roots() {
                total = &total + beta;
            }
            assert_eq!(total, r.rho().scale_i64(2));
            assert_eq!(
                total.root_coords(),
                r.rho().scale_i64(2).root_coords(),
                "{}",
                r.label()
            );
        }
    }

    #[test]
    fn highest_root_pairings() {
        // For beta != highest root the pairing with its coroot is 0 or 1
        // away from G2; G2 stays bounded by 2 with equality only at the top.
        for (family, rank) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::F, 4),
        ] {
            let r = rs(family, rank);
            let top = r.highest_root_index();
            for k in 0..r.num_positive_roots() {
                let v = r.pairing(r.positive_root(k), top);
                if k == top {
                    assert_eq!(v, rational(2, 1));
                } else {
                    assert!(
                        v == rational(0, 1) || v == rational(1, 1),
                        "{} root {k}: {v}",
                        r.label()
                    );
                }
            }
        }
        let g2 = rs(Family::G, 2);
        let top = g2.highest_root_index();
        for k in 0..6 {
            let v = g2.pairing(g2.positive_root(k), top);
            assert!(v <= rational(2, 1));
            assert_eq!(v == rational(2, 1), k == top);
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            a2.pairing(a2.rho(), a2.highest_root_index()),
            rational(2, 1)
        );

        let c2 = rs(Family::C, 2);
        let w1 = c2.fundamental_weight(0);
        assert_eq!(c2.pairing(&w1, c2.highest_root_index()), rational(1, 1));

        let a3 = rs(Family::A, 3);
        let two_rho = a3.rho().scale_i64(2);
        let alpha2 = a3
            .root_index_by_fund(&a3.simple_root(1).fund_i64())
            .unwrap();
        assert_eq!(a3.pairing(&two_rho, alpha2), rational(2, 1));
    }

    #[test]
    fn dual_weight_examples() {
        let a3 = rs(Family::A, 3);
        assert_eq!(
            a3.dual_weight(&a3.fundamental_weight(0)),
            a3.fundamental_weight(2)
        );
        assert_eq!(a3.dual_weight(&a3.zero_weight()), a3.zero_weight());

        // -w0 = identity in type C
        let c2 = rs(Family::C, 2);
        for f in [[3, 1], [0, 2], [5, 0]] {
            let w = c2.weight_from_fund(&f);
            assert_eq!(c2.dual_weight(&w), w);
        }
    }

    #[test]
    fn dual_weight_is_involution_and_fixes_rho() {
        for (family, rank) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
        ] {
            let r = rs(family, rank);
            assert_eq!(r.dual_weight(r.rho()), *r.rho());
            let mut state = 0x12345678_9abcdef0u64;
            let mut rand = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % 41) as i64 - 20
            };
            for _ in 0..50 {
                let f: Vec<i64> = (0..rank).map(|_| rand()).collect();
                let w = r.weight_from_fund(&f);
                assert_eq!(r.dual_weight(&r.dual_weight(&w)), w);
                if r.is_dominant(&w) {
                    assert!(r.is_dominant(&r.dual_weight(&w)));
                }
            }
        }
    }

    #[test]
    fn coeff_stats_examples() {
        let a3 = rs(Family::A, 3);
        let s = a3.coeff_stats(&a3.rho().scale_i64(2));
        assert_eq!(
            s.coefficients,
            vec![rational(3, 1), rational(4, 1), rational(3, 1)]
        );
        assert_eq!(s.max, rational(4, 1));
        assert_eq!(s.argmax, 2);

        let s = a3.coeff_stats(&a3.fundamental_weight(1));
        assert_eq!(s.argmax, 2);
        assert_eq!(s.max, rational(1, 1));

        let a2 = rs(Family::A, 2);
        let s = a2.coeff_stats(&a2.zero_weight());
        assert_eq!(s.max, rational(0, 1));
        assert_eq!(s.argmax, 2);
    }

    #[test]
    fn dominance_height_lattice() {
        let a2 = rs(Family::A, 2);
        let alpha1 = a2.simple_root(0).clone();
        assert!(!a2.is_dominant(&alpha1));
        assert_eq!(a2.height(&alpha1), rational(1, 1));
        assert!(a2.in_root_lattice(&alpha1));

        let a3 = rs(Family::A, 3);
        let w = a3.fundamental_weight(1).scale_i64(3);
        assert!(a3.is_dominant(&w));
        // 3*omega_2 = (3/2)(alpha_1 + 2 alpha_2 + alpha_3): not integral
        assert_eq!(
            w.root_coords(),
            &[rational(3, 2), rational(3, 1), rational(3, 2)]
        );
        assert!(!a3.in_root_lattice(&w));
        assert!(a3.in_root_lattice(&a3.fundamental_weight(1).scale_i64(2)));

        let c2 = rs(Family::C, 2);
        assert!(c2.is_dominant(&c2.fundamental_weight(0)));
    }

    #[test]
    fn coordinate_round_trip_property() {
        // fund -> root -> fund is the identity on [-20, 20]^rank.
        for (family, rank) in [
            (Family::A, 3),
            (Family::B, 2),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
        ] {
            let r = rs(family, rank);
            let mut state = 0xdeadbeef_cafef00du64;
            let mut rand = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % 41) as i64 - 20
            };
            for _ in 0..200 {
                let f: Vec<i64> = (0..rank).map(|_| rand()).collect();
                let w = r.weight_from_fund(&f);
                // rebuild fund coords from the rational root coords
                let back: Vec<BigRational> = (0..rank)
                    .map(|i| {
                        let mut acc = BigRational::zero();
                        for j in 0..rank {
                            acc += w.root_coords()[j].clone()
                                * BigRational::from(BigInt::from(r.cartan[i][j]));
                        }
                        acc
                    })
                    .collect();
                for (i, b) in back.iter().enumerate() {
                    assert_eq!(*b, BigRational::from(BigInt::from(f[i])));
                }
            }
        }
    }

    #[test]
    fn root_coord_denominators_divide_cartan_det() {
        for (family, rank) in [
            (Family::A, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::F, 4),
        ] {
            let r = rs(family, rank);
            let det = BigInt::from(r.cartan_det().abs());
            for i in 0..rank {
                let w = r.fundamental_weight(i);
                for c in w.root_coords() {
                    assert!((&det % c.denom()).is_zero());
                }
            }
        }
    }

    #[test]
    fn positive_root_order_is_by_height_then_lex() {
        let a2 = rs(Family::A, 2);
        let coords: Vec<Vec<i64>> = a2.positive_root_coords().to_vec();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}

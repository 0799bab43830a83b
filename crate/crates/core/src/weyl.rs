//! Finite Weyl groups: enumeration, lengths, signs, the linear and dot
//! actions, and the decomposition of −w·0 into distinct positive roots.
//!
//! Elements are stored as dense integer matrices acting on fundamental-weight
//! coordinates rather than as reduced words; words are recovered on demand by
//! length descent through the generator table. Enumeration is a BFS over the
//! simple reflections, so elements are ordered by length with deterministic
//! tie-breaking, and the identity always has index 0 with the simple
//! reflection s_{j+1} at index 1 + j.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{RootSystem, Weight};

/// Default cap on the group order during enumeration.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// An integral lattice automorphism with cached length and sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    length: u32,
    sign: i8,
}

impl WeylElement {
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// (−1)^length
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn apply_fund(&self, fund: &[BigInt]) -> Vec<BigInt> {
        linalg::mat_apply_big(&self.matrix, fund)
    }

    /// Linear action on a weight.
    pub fn apply(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        rs.weight_from_fund_big(self.apply_fund(lambda.fund_coords()))
    }
}

/// The full Weyl group, materialized in BFS-by-length order.
#[derive(Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    /// `generator_table[e][j]` is the index of `elements[e] * s_j`.
    generator_table: Vec<Vec<usize>>,
    index_by_matrix: HashMap<Vec<i64>, usize>,
}

fn flatten(m: &[Vec<i64>]) -> Vec<i64> {
    m.iter().flatten().copied().collect()
}

/// Matrix of the simple reflection s_j on fundamental coordinates.
fn reflection_matrix(rs: &RootSystem, j: usize) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let mut s = linalg::identity(n);
    for (srow, crow) in s.iter_mut().zip(rs.cartan()) {
        srow[j] -= crow[j];
    }
    s
}

impl WeylGroup {
    /// BFS enumeration over the simple reflections with the default order cap.
    pub fn enumerate(rs: &RootSystem) -> Result<WeylGroup> {
        WeylGroup::enumerate_with_cap(rs, DEFAULT_GROUP_CAP)
    }

    pub fn enumerate_with_cap(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
        let n = rs.rank();
        let gens: Vec<Vec<Vec<i64>>> = (0..n).map(|j| reflection_matrix(rs, j)).collect();

        let mut elements = vec![WeylElement {
            matrix: linalg::identity(n),
            length: 0,
            sign: 1,
        }];
        let mut index_by_matrix = HashMap::new();
        index_by_matrix.insert(flatten(&elements[0].matrix), 0usize);
        let mut generator_table: Vec<Vec<usize>> = vec![vec![usize::MAX; n]];

        let mut head = 0;
        while head < elements.len() {
            for j in 0..n {
                let product = linalg::mat_mul(&elements[head].matrix, &gens[j]);
                let key = flatten(&product);
                let idx = match index_by_matrix.get(&key) {
                    Some(&idx) => idx,
                    None => {
                        let idx = elements.len();
                        if idx >= cap {
                            return Err(Error::GroupTooLarge { cap });
                        }
                        let length = elements[head].length + 1;
                        elements.push(WeylElement {
                            matrix: product,
                            length,
                            sign: if length % 2 == 0 { 1 } else { -1 },
                        });
                        generator_table.push(vec![usize::MAX; n]);
                        index_by_matrix.insert(key, idx);
                        idx
                    }
                };
                generator_table[head][j] = idx;
            }
            head += 1;
        }

        let group = WeylGroup {
            rank: n,
            elements,
            generator_table,
            index_by_matrix,
        };
        // Exactly one element of maximal length |Phi^+|.
        let top = rs.num_positive_roots() as u32;
        debug_assert_eq!(group.elements.iter().filter(|e| e.length == top).count(), 1);
        Ok(group)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &WeylElement {
        &self.elements[index]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    /// Index of s_{j+1} (generator j).
    pub fn simple_reflection_index(&self, j: usize) -> usize {
        self.generator_table[0][j]
    }

    /// Index of `elements[e] * s_j`.
    pub fn right_multiply(&self, e: usize, j: usize) -> usize {
        self.generator_table[e][j]
    }

    /// Index of the product of two elements.
    pub fn product(&self, a: usize, b: usize) -> usize {
        let m = linalg::mat_mul(&self.elements[a].matrix, &self.elements[b].matrix);
        self.index_by_matrix[&flatten(&m)]
    }

    pub fn index_of_matrix(&self, matrix: &[Vec<i64>]) -> Option<usize> {
        self.index_by_matrix.get(&flatten(matrix)).copied()
    }

    /// Index of s_{w1} s_{w2} ... s_{wk} for a word in generator indices.
    pub fn element_from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0usize, |e, &j| self.right_multiply(e, j))
    }

    /// The longest element w0.
    pub fn longest_index(&self) -> usize {
        self.order() - 1
    }

    /// A reduced word for the element, recovered by length descent through
    /// the generator table; deterministic (smallest descent generator first).
    pub fn reduced_word(&self, e: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.elements[e].length as usize);
        let mut cur = e;
        while self.elements[cur].length > 0 {
            let j = (0..self.rank)
                .find(|&j| {
                    self.elements[self.generator_table[cur][j]].length < self.elements[cur].length
                })
                .expect("every non-identity element has a descent");
            word.push(j);
            cur = self.generator_table[cur][j];
        }
        word.reverse();
        word
    }
}

/// w · λ = w(λ + ρ) − ρ.
pub fn dot_action(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Weight {
    let shifted = lambda + rs.rho();
    &w.apply(rs, &shifted) - rs.rho()
}

/// The ℓ(w) distinct positive roots that sum to −w·0: for a reduced word
/// w = s_{β₁} s_{β₂} ⋯ s_{βₘ} they are β₁, s_{β₁}(β₂), s_{β₁}s_{β₂}(β₃), …
/// Returns sorted positive-root indices.
pub fn minus_w_dot_zero_roots(rs: &RootSystem, group: &WeylGroup, e: usize) -> Vec<usize> {
    let word = group.reduced_word(e);
    let mut indices = Vec::with_capacity(word.len());
    let mut prefix = group.identity_index();
    for &j in &word {
        let alpha: Vec<BigInt> = rs.simple_root(j).fund_coords().to_vec();
        let image = group.element(prefix).apply_fund(&alpha);
        let image_i64: Vec<i64> = image.iter().map(linalg::to_i64).collect();
        let idx = rs
            .root_index_by_fund(&image_i64)
            .expect("prefix image of a word letter is a positive root");
        indices.push(idx);
        prefix = group.right_multiply(prefix, j);
    }
    indices.sort_unstable();
    debug_assert!(
        indices.windows(2).all(|p| p[0] != p[1]),
        "roots are distinct"
    );
    indices
}

/// All elements fixing λ under the linear action.
pub fn stabilizer(rs: &RootSystem, group: &WeylGroup, lambda: &Weight) -> Vec<usize> {
    (0..group.order())
        .filter(|&e| group.element(e).apply(rs, lambda) == *lambda)
        .collect()
}

//! Elementary representations of the Borel subgroup B ⊂ SL(2,C) and the
//! homogeneous bundles they induce on P¹ = SL(2,C)/B.
//!
//! An indecomposable elementary representation is a *string*: weights
//! `k, k−2, ..., k−2(m−1)` of `H`, with `X` raising each weight by 2. On a
//! number line, the "left side" of a string is its lowest weights. B-invariant
//! subspaces drop nodes from the left, so a subspace keeps the top-weight
//! prefix and the matching quotient keeps the low-weight suffix:
//!
//! ```text
//!   adjoint   •-----•-----•      weights -2, 0, 2
//!   b ⊂ sl2         •-----•      subspace (keep 2): weights 0, 2
//!   sl2/b     •                  quotient (remove 2): weight -2 ↦ O(2)
//! ```
//!
//! A one-node string of weight −d induces O(d).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::splitting::SplittingType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BStringRep {
    top_weight: i64,
    node_count: usize,
}

impl BStringRep {
    pub fn new(top_weight: i64, node_count: usize) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::InvalidRep("a string needs at least one node".into()));
        }
        Ok(BStringRep {
            top_weight,
            node_count,
        })
    }

    pub fn top_weight(&self) -> i64 {
        self.top_weight
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// `k, k−2, ..., k−2(m−1)`.
    pub fn weights(&self) -> Vec<i64> {
        (0..self.node_count as i64)
            .map(|r| self.top_weight - 2 * r)
            .collect()
    }

    /// `ρ(H)` and `ρ(X)` scaled so the superdiagonal of `ρ(X)` reads `k, k−1, ..., k−m+2`.
    pub fn canonical_matrices(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let m = self.node_count;
        let weights = self.weights();
        let mut h = vec![vec![0; m]; m];
        let mut x = vec![vec![0; m]; m];
        for r in 0..m {
            h[r][r] = weights[r];
            if r + 1 < m {
                x[r][r + 1] = self.top_weight - r as i64;
            }
        }
        assert!(bracket_is_twice(&h, &x));
        assert!((0..m).all(|i| (0..m).all(|j| x[i][j] == 0 || h[i][i] - h[j][j] == 2)));
        (h, x)
    }

    /// Comes from an SL(2,C)-representation exactly when `k = m − 1`.
    pub fn is_equivariantly_trivial(&self) -> bool {
        self.top_weight == self.node_count as i64 - 1
    }

    /// Centres the string with a twist: `O((m−1) − k)^m`.
    pub fn to_splitting(&self) -> SplittingType {
        SplittingType::line(
            self.node_count as i64 - 1 - self.top_weight,
            self.node_count as u64,
        )
    }

    /// The B-invariant subspace formed by the top `keep` nodes.
    pub fn invariant_subspace(&self, keep: usize) -> Result<Self> {
        if keep == 0 || keep > self.node_count {
            return Err(Error::InvalidRep(format!(
                "subspace must keep 1..={} nodes, got {keep}",
                self.node_count
            )));
        }
        BStringRep::new(self.top_weight, keep)
    }

    /// The quotient by the subspace formed by the top `remove` nodes.
    pub fn quotient(&self, remove: usize) -> Result<Self> {
        if remove >= self.node_count {
            return Err(Error::InvalidRep(format!(
                "quotient must remove 0..{} nodes, got {remove}",
                self.node_count
            )));
        }
        BStringRep::new(
            self.top_weight - 2 * remove as i64,
            self.node_count - remove,
        )
    }
}

pub fn tensor_reps(a: &BStringRep, b: &BStringRep) -> SplittingType {
    a.to_splitting().tensor(&b.to_splitting())
}

/// Checks `[H, X] = 2X`.
pub fn bracket_is_twice(h: &[Vec<i64>], x: &[Vec<i64>]) -> bool {
    let m = h.len();
    let product = |a: &[Vec<i64>], b: &[Vec<i64>], i: usize, j: usize| -> i64 {
        (0..m).map(|k| a[i][k] * b[k][j]).sum()
    };
    (0..m).all(|i| (0..m).all(|j| product(h, x, i, j) - product(x, h, i, j) == 2 * x[i][j]))
}

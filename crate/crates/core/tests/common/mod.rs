//! Brute-force α-string walker in ε-coordinates, independent of the
//! library's root enumeration and string inventory.
//!
//! Roots are listed explicitly (`ε_a − ε_b` for A, `±ε_a ± ε_b` and `±2ε_a`
//! for C, `±ε_a ± ε_b` for D) with the standard inner product, and omitted
//! roots are decided by a caller-supplied predicate.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

pub type Vector = Vec<i64>;

pub struct EpsilonSystem {
    pub roots: Vec<Vector>,
    pub members: HashSet<Vector>,
}

fn unit(n: usize, a: usize, c: i64) -> Vector {
    let mut v = vec![0; n];
    v[a] = c;
    v
}

fn add(x: &[i64], y: &[i64], k: i64) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + k * b).collect()
}

fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

impl EpsilonSystem {
    fn from_roots(roots: Vec<Vector>) -> Self {
        let members = roots.iter().cloned().collect();
        EpsilonSystem { roots, members }
    }

    /// `sl(n)`: ε_a − ε_b in R^n.
    pub fn type_a(n: usize) -> Self {
        let mut roots = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    roots.push(add(&unit(n, a, 1), &unit(n, b, -1), 1));
                }
            }
        }
        Self::from_roots(roots)
    }

    fn pm_pairs(n: usize) -> Vec<Vector> {
        let mut roots = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for sa in [-1, 1] {
                    for sb in [-1, 1] {
                        roots.push(add(&unit(n, a, sa), &unit(n, b, sb), 1));
                    }
                }
            }
        }
        roots
    }

    pub fn type_c(n: usize) -> Self {
        let mut roots = Self::pm_pairs(n);
        for a in 0..n {
            roots.push(unit(n, a, 2));
            roots.push(unit(n, a, -2));
        }
        Self::from_roots(roots)
    }

    pub fn type_d(n: usize) -> Self {
        Self::from_roots(Self::pm_pairs(n))
    }

    fn is_node(&self, v: &[i64]) -> bool {
        v.iter().all(|&c| c == 0) || self.members.contains(v)
    }

    /// Full string through `beta`, highest `<·, α^∨>` first.
    pub fn walk(&self, alpha: &[i64], beta: &[i64]) -> Vec<Vector> {
        let mut top = beta.to_vec();
        while self.is_node(&add(&top, alpha, 1)) {
            top = add(&top, alpha, 1);
        }
        let mut out = vec![top.clone()];
        let mut cur = top;
        while self.is_node(&add(&cur, alpha, -1)) {
            cur = add(&cur, alpha, -1);
            out.push(cur.clone());
        }
        out
    }

    /// `<β, α^∨> = 2(β, α)/(α, α)`.
    pub fn weight(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        2 * dot(beta, alpha) / dot(alpha, alpha)
    }

    /// Tangent splitting `degree -> multiplicity` along the circle of `alpha`,
    /// computed by walking every omitted root's string.
    pub fn tangent(&self, alpha: &[i64], omitted: impl Fn(&[i64]) -> bool) -> BTreeMap<i64, u64> {
        let mut seen: HashSet<Vector> = HashSet::new();
        let mut out = BTreeMap::new();
        for beta in self.roots.iter().filter(|r| omitted(r)) {
            if seen.contains(beta) {
                continue;
            }
            let string = self.walk(alpha, beta);
            let n_s = string.iter().filter(|v| self.members.contains(*v) && omitted(v)).count();
            let d_s = string.len() - n_s;
            for v in &string {
                if self.members.contains(v) && omitted(v) {
                    seen.insert(v.clone());
                }
            }
            *out.entry(d_s as i64).or_insert(0) += n_s as u64;
        }
        out
    }
}

/// Omitted-root predicate for the block-lower-triangular complement in `sl(n)`.
pub fn flag_omitted(blocks: &[usize]) -> impl Fn(&[i64]) -> bool + '_ {
    move |v: &[i64]| {
        let block = |idx: usize| {
            let mut upper = 0;
            for (b, &k) in blocks.iter().enumerate() {
                upper += k;
                if idx < upper {
                    return b;
                }
            }
            unreachable!()
        };
        let a = v.iter().position(|&c| c == 1).unwrap();
        let b = v.iter().position(|&c| c == -1).unwrap();
        block(a) > block(b)
    }
}

/// Omitted roots of the spinor and Lagrangian models: negative ε-sum.
pub fn negative_sum(v: &[i64]) -> bool {
    v.iter().sum::<i64>() < 0
}

pub fn as_map(s: &rootcircle::SplittingType) -> BTreeMap<i64, u64> {
    s.iter_desc().collect()
}

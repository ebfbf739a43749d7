//! Finite simple root systems built from Cartan matrices.
//!
//! Simple roots follow Bourbaki numbering for every family:
//!
//! | family | diagram                         | lengths                         |
//! |--------|---------------------------------|---------------------------------|
//! | A_n    | 1 - 2 - ... - n                 | all equal                       |
//! | B_n    | 1 - 2 - ... - (n-1) => n        | α_n short                       |
//! | C_n    | 1 - 2 - ... - (n-1) <= n        | α_n long                        |
//! | D_n    | 1 - ... - (n-2) - (n-1), (n-2) - n | all equal                    |
//! | E_n    | 1 - 3 - 4 - 5 - ... - n, 2 - 4  | all equal                       |
//! | F_4    | 1 - 2 => 3 - 4                  | α_1, α_2 long                   |
//! | G_2    | 1 <= 2 (triple bond)            | α_1 short, α_2 long             |
//!
//! The Cartan matrix is `C[i][j] = <α_j, α_i^∨> = 2(α_i, α_j)/(α_i, α_i)`, so
//! in B_2 the pairing `<α_1, α_2^∨>` is −2 and `<α_2, α_1^∨>` is −1.
//! Roots are integer coefficient vectors in the simple-root basis.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A Cartan type such as `A3` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bound = match family {
            Family::A if rank < 1 => Some("A-type rank must be >= 1"),
            Family::B if rank < 2 => Some("B-type rank must be >= 2"),
            Family::C if rank < 2 => Some("C-type rank must be >= 2"),
            Family::D if rank < 3 => Some("D-type rank must be >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("E-type rank must be 6, 7 or 8"),
            Family::F if rank != 4 => Some("F-type rank must be 4"),
            Family::G if rank != 2 => Some("G-type rank must be 2"),
            _ => None,
        };
        match bound {
            Some(reason) => Err(Error::InvalidType {
                token: format!("{}{}", family.letter(), rank),
                reason: reason.to_string(),
            }),
            None => Ok(LieType { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the simple Lie algebra, from the classical table.
    pub fn dimension(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * n + 2 * n,
            Family::B | Family::C => 2 * n * n + n,
            Family::D => 2 * n * n - n,
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Warnings a report should carry for this type.
    pub fn warnings(&self) -> Vec<String> {
        if self.family == Family::D && self.rank == 3 {
            vec!["D3 is isomorphic to A3; node indices follow the D3 diagram (2 and 3 are the fork)".into()]
        } else {
            Vec::new()
        }
    }

    /// Symmetric bilinear form on simple roots, scaled so the shortest root has norm 2.
    fn inner_products(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut b = vec![vec![0i64; n]; n];
        let bond = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            b[i - 1][j - 1] = v;
            b[j - 1][i - 1] = v;
        };
        match self.family {
            Family::A => {
                for i in 1..=n {
                    b[i - 1][i - 1] = 2;
                }
                for i in 1..n {
                    bond(&mut b, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 1..n {
                    b[i - 1][i - 1] = 4;
                }
                b[n - 1][n - 1] = 2;
                for i in 1..n {
                    bond(&mut b, i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 1..n {
                    b[i - 1][i - 1] = 2;
                }
                b[n - 1][n - 1] = 4;
                for i in 1..n - 1 {
                    bond(&mut b, i, i + 1, -1);
                }
                bond(&mut b, n - 1, n, -2);
            }
            Family::D => {
                for i in 1..=n {
                    b[i - 1][i - 1] = 2;
                }
                for i in 1..n - 1 {
                    bond(&mut b, i, i + 1, -1);
                }
                bond(&mut b, n - 2, n, -1);
            }
            Family::E => {
                for i in 1..=n {
                    b[i - 1][i - 1] = 2;
                }
                bond(&mut b, 1, 3, -1);
                bond(&mut b, 2, 4, -1);
                for i in 3..n {
                    bond(&mut b, i, i + 1, -1);
                }
            }
            Family::F => {
                b[0][0] = 4;
                b[1][1] = 4;
                b[2][2] = 2;
                b[3][3] = 2;
                bond(&mut b, 1, 2, -2);
                bond(&mut b, 2, 3, -2);
                bond(&mut b, 3, 4, -1);
            }
            Family::G => {
                b[0][0] = 2;
                b[1][1] = 6;
                bond(&mut b, 1, 2, -3);
            }
        }
        b
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidType {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(invalid("family must be one of A..G")),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| invalid("rank must be a positive integer"))?;
        LieType::new(family, rank)
    }
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    /// Wraps a coefficient vector without checking membership.
    pub fn from_coefficients(coefficients: Vec<i64>) -> Self {
        Root(coefficients)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Coefficient-wise `self + factor * other`.
    pub fn add_scaled(&self, other: &Root, factor: i64) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan_matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    form: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    members: HashSet<Root>,
}

impl RootSystem {
    pub fn build(lie_type: LieType) -> RootSystem {
        let rank = lie_type.rank();
        let form = lie_type.inner_products();
        let symmetrizer: Vec<i64> = (0..rank).map(|i| form[i][i] / 2).collect();
        let cartan_matrix: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();

        let simple: Vec<Root> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                Root(v)
            })
            .collect();

        // Height-layered closure: β + α_i is a root exactly when the α_i-string
        // through β extends upward, i.e. p − <β, α_i^∨> > 0 where p counts the
        // downward steps β − α_i, β − 2α_i, ... that stay positive roots.
        let mut members: HashSet<Root> = simple.iter().cloned().collect();
        let mut positive_roots = Vec::new();
        let mut layer = simple.clone();
        while !layer.is_empty() {
            layer.sort_by(|a, b| b.cmp(a));
            let mut next: Vec<Root> = Vec::new();
            for beta in &layer {
                for (i, alpha_i) in simple.iter().enumerate() {
                    let mut p = 0;
                    while members.contains(&beta.add_scaled(alpha_i, -(p + 1))) {
                        p += 1;
                    }
                    let weight: i64 = (0..rank)
                        .map(|j| beta.0[j] * cartan_matrix[i][j])
                        .sum();
                    if p - weight > 0 {
                        let up = beta.add_scaled(alpha_i, 1);
                        if !members.contains(&up) {
                            members.insert(up.clone());
                            next.push(up);
                        }
                    }
                }
            }
            positive_roots.append(&mut layer);
            layer = next;
        }

        for r in &positive_roots {
            members.insert(r.negate());
        }

        RootSystem {
            lie_type,
            cartan_matrix,
            symmetrizer,
            form,
            positive_roots,
            members,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, then by descending coefficient vector.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots: positive roots in order, followed by their negatives in the same order.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(Root::negate))
    }

    pub fn root_count(&self) -> usize {
        self.members.len()
    }

    pub fn dimension(&self) -> usize {
        self.root_count() + self.rank()
    }

    pub fn simple_root(&self, index: usize) -> Option<Root> {
        if index == 0 || index > self.rank() {
            return None;
        }
        let mut v = vec![0; self.rank()];
        v[index - 1] = 1;
        Some(Root(v))
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                vector: v.to_vec(),
                expected: self.rank(),
                actual: v.len(),
            });
        }
        Ok(())
    }

    pub fn is_root(&self, v: &[i64]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.members.contains(&Root(v.to_vec())))
    }

    pub(crate) fn contains(&self, r: &Root) -> bool {
        self.members.contains(r)
    }

    /// Checked conversion of a coefficient vector to a root of this system.
    pub fn root(&self, v: &[i64]) -> Result<Root> {
        if self.is_root(v)? {
            Ok(Root(v.to_vec()))
        } else {
            Err(Error::NotARoot(v.to_vec(), self.lie_type.to_string()))
        }
    }

    /// The sum `r1 + r2` when it is a root.
    pub fn add(&self, r1: &Root, r2: &Root) -> Result<Option<Root>> {
        self.check_len(&r1.0)?;
        self.check_len(&r2.0)?;
        let sum = r1.add_scaled(r2, 1);
        Ok(self.members.contains(&sum).then_some(sum))
    }

    /// Invariant form `(x, y) = x^T D C y` on coefficient vectors.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                total += x[i] * self.form[i][j] * y[j];
            }
        }
        total
    }

    /// `<β, α^∨> = 2(β, α)/(α, α)`.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> Result<i64> {
        for r in [beta, alpha] {
            self.check_len(&r.0)?;
            if !self.contains(r) {
                return Err(Error::NotARoot(r.0.clone(), self.lie_type.to_string()));
            }
        }
        Ok(self.pairing_unchecked(&beta.0, &alpha.0))
    }

    pub(crate) fn pairing_unchecked(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let num = 2 * self.inner(beta, alpha);
        let den = self.inner(alpha, alpha);
        assert!(
            den > 0 && num % den == 0,
            "coroot pairing {num}/{den} is not an integer"
        );
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn rank_bounds_rejected() {
        for bad in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H2", "Ax"] {
            assert!(bad.parse::<LieType>().is_err(), "{bad} should be rejected");
        }
        let err = "D2".parse::<LieType>().unwrap_err();
        assert!(err.to_string().contains(">= 3"));
    }

    #[test]
    fn a1_and_a2_roots() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots(), &[Root(vec![1])]);
        assert_eq!(a1.root_count(), 2);

        let a2 = rs("A2");
        assert_eq!(
            a2.positive_roots(),
            &[Root(vec![1, 0]), Root(vec![0, 1]), Root(vec![1, 1])]
        );
        assert_eq!(a2.root_count(), 6);
    }

    #[test]
    fn e8_has_240_roots() {
        let e8 = rs("E8");
        assert_eq!(e8.positive_roots().len(), 120);
        assert_eq!(e8.root_count(), 240);
        assert_eq!(e8.dimension(), 248);
    }

    #[test]
    fn pairings() {
        let a2 = rs("A2");
        let a1 = a2.simple_root(1).unwrap();
        let a2r = a2.simple_root(2).unwrap();
        assert_eq!(a2.pairing(&a1, &a1).unwrap(), 2);
        assert_eq!(a2.pairing(&a1, &a2r).unwrap(), -1);

        let b2 = rs("B2");
        let l = b2.simple_root(1).unwrap();
        let s = b2.simple_root(2).unwrap();
        assert_eq!(b2.pairing(&l, &s).unwrap(), -2);
        assert_eq!(b2.pairing(&s, &l).unwrap(), -1);
        assert_eq!(b2.cartan_matrix()[1][0], -2);
    }

    #[test]
    fn pairing_rejects_non_roots() {
        let a2 = rs("A2");
        let bad = Root(vec![2, 0]);
        let a1 = a2.simple_root(1).unwrap();
        assert!(matches!(a2.pairing(&bad, &a1), Err(Error::NotARoot(..))));
        assert!(matches!(
            a2.pairing(&Root(vec![1]), &a1),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn add_and_negate() {
        let a2 = rs("A2");
        let a1 = a2.simple_root(1).unwrap();
        let a2r = a2.simple_root(2).unwrap();
        assert_eq!(a2.add(&a1, &a2r).unwrap(), Some(Root(vec![1, 1])));
        assert_eq!(a2.add(&a1, &a1).unwrap(), None);
        assert_eq!(a1.negate().negate(), a1);
        assert!(a2.is_root(&[-1, -1]).unwrap());
        assert!(a2.is_root(&[1, 0, 0]).is_err());
    }

    #[test]
    fn cartan_axioms() {
        for t in ["A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            let c = r.cartan_matrix();
            let d = r.symmetrizer();
            for i in 0..r.rank() {
                assert_eq!(c[i][i], 2);
                for j in 0..r.rank() {
                    if i != j {
                        assert!(c[i][j] <= 0);
                        assert_eq!(c[i][j] == 0, c[j][i] == 0);
                    }
                    assert_eq!(d[i] * c[i][j], d[j] * c[j][i], "{t}: DC not symmetric");
                }
            }
        }
    }

    #[test]
    fn d3_warns() {
        assert!(!"D3".parse::<LieType>().unwrap().warnings().is_empty());
        assert!("D4".parse::<LieType>().unwrap().warnings().is_empty());
    }
}

//! Parabolic subalgebras given by crossed Dynkin nodes.
//!
//! A root β is omitted from p when `deg_S(β) = Σ_{i∈S} β_i < 0`, where S is
//! the crossed set. Every omitted root is negative, and the omitted root
//! spaces form a basis of the tangent space g/p.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root_system::{Family, LieType, Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    Parabolic,
    Omitted,
}

#[derive(Debug, Clone)]
pub struct Parabolic {
    root_system: Arc<RootSystem>,
    crossed: BTreeSet<usize>,
    omitted: Vec<Root>,
    omitted_set: HashSet<Root>,
}

impl Parabolic {
    pub fn new(root_system: Arc<RootSystem>, crossed: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = root_system.rank();
        let crossed: BTreeSet<usize> = crossed.into_iter().collect();
        if let Some(&index) = crossed.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::CrossedOutOfRange { index, rank });
        }
        let mut p = Parabolic {
            root_system,
            crossed,
            omitted: Vec::new(),
            omitted_set: HashSet::new(),
        };
        let omitted: Vec<Root> = p
            .root_system
            .positive_roots()
            .iter()
            .map(Root::negate)
            .filter(|r| p.degree(r) < 0)
            .collect();
        p.omitted_set = omitted.iter().cloned().collect();
        p.omitted = omitted;
        Ok(p)
    }

    pub fn from_type(lie_type: LieType, crossed: impl IntoIterator<Item = usize>) -> Result<Self> {
        Parabolic::new(Arc::new(RootSystem::build(lie_type)), crossed)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn shared_root_system(&self) -> Arc<RootSystem> {
        Arc::clone(&self.root_system)
    }

    /// Crossed nodes, 1-based.
    pub fn crossed(&self) -> &BTreeSet<usize> {
        &self.crossed
    }

    /// The grading `deg_S(β)`.
    pub fn degree(&self, v: &Root) -> i64 {
        self.crossed.iter().map(|&i| v.coefficients()[i - 1]).sum()
    }

    pub fn classify(&self, root: &Root) -> RootClass {
        if self.degree(root) < 0 {
            RootClass::Omitted
        } else {
            RootClass::Parabolic
        }
    }

    /// Omitted roots, in the order of their positive counterparts.
    pub fn omitted_roots(&self) -> &[Root] {
        &self.omitted
    }

    pub fn is_omitted(&self, root: &Root) -> bool {
        self.omitted_set.contains(root)
    }

    /// `dim g/p`.
    pub fn tangent_dimension(&self) -> usize {
        self.omitted.len()
    }

    pub(crate) fn require_omitted(&self, root: &Root) -> Result<()> {
        if root.coefficients().len() != self.root_system.rank() {
            return Err(Error::LengthMismatch {
                vector: root.coefficients().to_vec(),
                expected: self.root_system.rank(),
                actual: root.coefficients().len(),
            });
        }
        if self.is_omitted(root) {
            Ok(())
        } else {
            Err(Error::NotOmitted {
                root: root.coefficients().to_vec(),
                omitted: self.describe_omitted(),
            })
        }
    }

    pub fn describe_omitted(&self) -> String {
        if self.omitted.is_empty() {
            return "(none)".to_string();
        }
        self.omitted
            .iter()
            .map(Root::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// `A3/1`, `C2/2`, `A2/1,2`.
    pub fn label(&self) -> String {
        let crossed: Vec<String> = self.crossed.iter().map(usize::to_string).collect();
        format!("{}/{}", self.root_system.lie_type(), crossed.join(","))
    }
}

/// Block sizes `k_1, ..., k_p` of a partial flag in C^n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagShape {
    block_sizes: Vec<usize>,
}

impl FlagShape {
    pub fn new(block_sizes: Vec<usize>) -> Result<Self> {
        let token = join(&block_sizes);
        if block_sizes.len() < 2 {
            return Err(Error::MalformedModel {
                token,
                reason: "a flag needs at least two blocks".into(),
            });
        }
        if block_sizes.contains(&0) {
            return Err(Error::MalformedModel {
                token,
                reason: "block sizes must be positive".into(),
            });
        }
        Ok(FlagShape { block_sizes })
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn n(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// 1-based block containing the 1-based matrix index `index`.
    pub fn block_of(&self, index: usize) -> Option<usize> {
        let mut upper = 0;
        for (b, &k) in self.block_sizes.iter().enumerate() {
            let lower = upper;
            upper += k;
            if lower < index && index <= upper {
                return Some(b + 1);
            }
        }
        None
    }

    /// Crossed nodes of A_{n-1}: the partial sums `k_1, k_1 + k_2, ...` below n.
    pub fn crossed(&self) -> Vec<usize> {
        let mut sum = 0;
        let mut out = Vec::new();
        for &k in &self.block_sizes[..self.block_sizes.len() - 1] {
            sum += k;
            out.push(sum);
        }
        out
    }

    /// Blocks `(s, t)` of the column `j` and row `i` of a below-block entry.
    pub fn entry_blocks(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        let n = self.n();
        if !(1 <= j && j < i && i <= n) {
            return Err(Error::IndexOutOfRange(format!(
                "need 1 <= j < i <= {n}, got i={i}, j={j}"
            )));
        }
        let s = self.block_of(j).expect("j in range");
        let t = self.block_of(i).expect("i in range");
        if s >= t {
            return Err(Error::IndexOutOfRange(format!(
                "entry ({i},{j}) lies in diagonal block {s}, not in g/p"
            )));
        }
        Ok((s, t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NamedModel {
    Projective(usize),
    Quadric(usize),
    Grassmannian { k: usize, n: usize },
    Flag(FlagShape),
    Spinor(usize),
    Lagrangian(usize),
}

impl NamedModel {
    /// `grassmannian:1,n` becomes `projective:n-1`; everything else is unchanged.
    pub fn normalized(self) -> NamedModel {
        match self {
            NamedModel::Grassmannian { k: 1, n } => NamedModel::Projective(n - 1),
            other => other,
        }
    }

    pub fn lie_type(&self) -> Result<LieType> {
        match self {
            NamedModel::Projective(n) => LieType::new(Family::A, *n),
            NamedModel::Quadric(n) if n % 2 == 1 => LieType::new(Family::B, (n + 1) / 2),
            NamedModel::Quadric(n) => LieType::new(Family::D, (n + 2) / 2),
            NamedModel::Grassmannian { n, .. } => LieType::new(Family::A, n - 1),
            NamedModel::Flag(shape) => LieType::new(Family::A, shape.n() - 1),
            NamedModel::Spinor(n) => LieType::new(Family::D, *n),
            NamedModel::Lagrangian(n) => LieType::new(Family::C, *n),
        }
    }

    pub fn crossed(&self) -> Vec<usize> {
        match self {
            NamedModel::Projective(_) | NamedModel::Quadric(_) => vec![1],
            NamedModel::Grassmannian { k, .. } => vec![*k],
            NamedModel::Flag(shape) => shape.crossed(),
            NamedModel::Spinor(n) | NamedModel::Lagrangian(n) => vec![*n],
        }
    }

    pub fn to_parabolic(&self) -> Result<Parabolic> {
        Parabolic::from_type(self.lie_type()?, self.crossed())
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for NamedModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedModel::Projective(n) => write!(f, "projective:{n}"),
            NamedModel::Quadric(n) => write!(f, "quadric:{n}"),
            NamedModel::Grassmannian { k, n } => write!(f, "grassmannian:{k},{n}"),
            NamedModel::Flag(shape) => write!(f, "flag:{}", join(shape.block_sizes())),
            NamedModel::Spinor(n) => write!(f, "spinor:{n}"),
            NamedModel::Lagrangian(n) => write!(f, "lagrangian:{n}"),
        }
    }
}

impl FromStr for NamedModel {
    type Err = Error;

    /// Parses `name:params`, e.g. `projective:3`, `grassmannian:2,4`, `flag:1,2,1`.
    /// The result is normalized.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = |reason: &str| Error::MalformedModel {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| malformed("expected name:params"))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| malformed("parameters must be comma-separated non-negative integers"))?;
        let single = |min: usize, what: &str| -> Result<usize> {
            match nums.as_slice() {
                [n] if *n >= min => Ok(*n),
                [_] => Err(malformed(&format!("{what} requires n >= {min}"))),
                _ => Err(malformed(&format!("{what} takes exactly one parameter"))),
            }
        };
        let model = match name.trim().to_ascii_lowercase().as_str() {
            "projective" => NamedModel::Projective(single(1, "projective")?),
            "quadric" => NamedModel::Quadric(single(3, "quadric")?),
            "spinor" => NamedModel::Spinor(single(3, "spinor")?),
            "lagrangian" => NamedModel::Lagrangian(single(2, "lagrangian")?),
            "grassmannian" => match nums.as_slice() {
                [k, n] if 1 <= *k && k < n => NamedModel::Grassmannian { k: *k, n: *n },
                [_, _] => return Err(malformed("grassmannian k,n requires 1 <= k < n")),
                _ => return Err(malformed("grassmannian takes two parameters k,n")),
            },
            "flag" => NamedModel::Flag(FlagShape::new(nums.clone()).map_err(|e| match e {
                Error::MalformedModel { reason, .. } => malformed(&reason),
                other => other,
            })?),
            other => return Err(malformed(&format!("unknown model `{other}`"))),
        };
        Ok(model.normalized())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(v: &[&[i64]]) -> Vec<Root> {
        v.iter().map(|c| Root::from_coefficients(c.to_vec())).collect()
    }

    #[test]
    fn projective_space_omits_first_column() {
        for n in 1..=6 {
            let p = Parabolic::from_type(LieType::new(Family::A, n).unwrap(), [1]).unwrap();
            assert_eq!(p.tangent_dimension(), n);
            for r in p.omitted_roots() {
                let c = r.coefficients();
                let j = c.iter().filter(|&&x| x == -1).count();
                assert!(c[..j].iter().all(|&x| x == -1) && c[j..].iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn empty_cross_has_no_omitted() {
        let p = Parabolic::from_type("E6".parse().unwrap(), []).unwrap();
        assert!(p.omitted_roots().is_empty());
    }

    #[test]
    fn a2_full_flag() {
        let p = Parabolic::from_type("A2".parse().unwrap(), [1, 2]).unwrap();
        assert_eq!(p.omitted_roots(), roots(&[&[-1, 0], &[0, -1], &[-1, -1]]).as_slice());
    }

    #[test]
    fn out_of_range_cross() {
        let err = Parabolic::from_type("A2".parse().unwrap(), [3]).unwrap_err();
        assert_eq!(err, Error::CrossedOutOfRange { index: 3, rank: 2 });
    }

    #[test]
    fn named_models() {
        let p = "projective:3".parse::<NamedModel>().unwrap().to_parabolic().unwrap();
        assert_eq!(p.label(), "A3/1");
        assert_eq!(p.tangent_dimension(), 3);

        let lag = "lagrangian:2".parse::<NamedModel>().unwrap().to_parabolic().unwrap();
        assert_eq!(lag.label(), "C2/2");
        assert_eq!(lag.tangent_dimension(), 3);

        let spin = "spinor:4".parse::<NamedModel>().unwrap().to_parabolic().unwrap();
        assert_eq!(spin.label(), "D4/4");
        assert_eq!(spin.tangent_dimension(), 6);

        assert_eq!(
            "quadric:3".parse::<NamedModel>().unwrap().to_parabolic().unwrap().label(),
            "B2/1"
        );
        assert_eq!(
            "quadric:6".parse::<NamedModel>().unwrap().to_parabolic().unwrap().label(),
            "D4/1"
        );
        assert_eq!(
            "flag:1,2,1".parse::<NamedModel>().unwrap().to_parabolic().unwrap().label(),
            "A3/1,3"
        );
    }

    #[test]
    fn grassmannian_one_is_projective() {
        let m: NamedModel = "grassmannian:1,5".parse().unwrap();
        assert_eq!(m, NamedModel::Projective(4));
        assert_eq!(m.to_string(), "projective:4");
    }

    #[test]
    fn malformed_models() {
        for bad in [
            "projective",
            "projective:0",
            "quadric:2",
            "grassmannian:3,3",
            "grassmannian:2",
            "flag:3",
            "flag:2,0",
            "lagrangian:1",
            "torus:2",
            "spinor:x",
        ] {
            assert!(bad.parse::<NamedModel>().is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn flag_blocks() {
        let f = FlagShape::new(vec![2, 1, 3]).unwrap();
        assert_eq!(f.n(), 6);
        assert_eq!(f.block_of(2), Some(1));
        assert_eq!(f.block_of(3), Some(2));
        assert_eq!(f.block_of(4), Some(3));
        assert_eq!(f.entry_blocks(5, 1).unwrap(), (1, 3));
        assert!(f.entry_blocks(2, 1).is_err());
        assert!(f.entry_blocks(1, 2).is_err());
    }
}

//! Splitting types `⊕ O(d)^m` of vector bundles on P¹ and the bundles of a
//! rational homogeneous variety restricted to its root circles.

mod audit;
mod report;

pub use audit::{audit_model, AuditModel, AuditReport, AuditRow, AuditStatus};
pub use report::{
    adjoint_splitting, curvature_report, flatness_report, tangent_splitting,
    tangent_splitting_via_quotients, CurvatureReport, FlatnessReport,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// Multiset of line-bundle degrees: degree → multiplicity, no zero multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SplittingType {
    summands: BTreeMap<i64, u64>,
}

impl SplittingType {
    pub fn new() -> Self {
        Self::default()
    }

    /// `O(degree)^multiplicity`.
    pub fn line(degree: i64, multiplicity: u64) -> Self {
        let mut s = Self::new();
        s.add(degree, multiplicity);
        s
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut s = Self::new();
        for (d, m) in pairs {
            s.add(d, m);
        }
        s
    }

    pub fn add(&mut self, degree: i64, multiplicity: u64) {
        if multiplicity > 0 {
            *self.summands.entry(degree).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, degree: i64) -> u64 {
        self.summands.get(&degree).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> u64 {
        self.summands.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `(degree, multiplicity)` pairs, degrees descending.
    pub fn iter_desc(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.summands.iter().rev().map(|(&d, &m)| (d, m))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.summands.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.summands.keys().next_back().copied()
    }

    pub fn dual(&self) -> Self {
        Self::from_pairs(self.summands.iter().map(|(&d, &m)| (-d, m)))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &m) in &other.summands {
            out.add(d, m);
        }
        out
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (&d1, &m1) in &self.summands {
            for (&d2, &m2) in &other.summands {
                out.add(d1 + d2, m1 * m2);
            }
        }
        out
    }

    /// Second exterior power: unordered pairs of distinct line summands.
    pub fn wedge2(&self) -> Self {
        let blocks: Vec<(i64, u64)> = self.summands.iter().map(|(&d, &m)| (d, m)).collect();
        let mut out = Self::new();
        for (a, &(d1, m1)) in blocks.iter().enumerate() {
            out.add(2 * d1, m1 * m1.saturating_sub(1) / 2);
            for &(d2, m2) in &blocks[a + 1..] {
                out.add(d1 + d2, m1 * m2);
            }
        }
        out
    }

    /// `h⁰ = Σ max(d + 1, 0) · m`.
    pub fn h0(&self) -> u64 {
        self.summands
            .iter()
            .map(|(&d, &m)| (d + 1).max(0) as u64 * m)
            .sum()
    }

    /// Summands of degree ≥ 0.
    pub fn nonnegative_part(&self) -> Self {
        Self::from_pairs(self.summands.range(0..).map(|(&d, &m)| (d, m)))
    }
}

impl fmt::Display for SplittingType {
    /// `O(2) + O(1)^3 + O(0)^2`, degrees descending; the zero bundle is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, m)) in self.iter_desc().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m == 1 {
                write!(f, "O({d})")?;
            } else {
                write!(f, "O({d})^{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SplittingType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.summands.len()))?;
        for (d, m) in self.iter_desc() {
            map.serialize_entry(&d.to_string(), &m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SplittingType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(deserializer)?;
        let mut out = SplittingType::new();
        for (k, m) in raw {
            let d: i64 = k
                .parse()
                .map_err(|_| de::Error::custom(format!("degree `{k}` is not an integer")))?;
            out.add(d, m);
        }
        Ok(out)
    }
}

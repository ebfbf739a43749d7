//! α-strings through omitted roots.
//!
//! For an omitted root α the string through β is the maximal chain
//! `β + qα, ..., β, ..., β − pα` inside `roots ∪ {0}`, listed by decreasing
//! weight `<node, α^∨>`. Subtracting α raises `deg_S`, so the omitted nodes
//! (the g/p-piece, `n_s` of them) come first and the p-piece (`d_s` nodes)
//! follows.

use std::collections::HashSet;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::parabolic::{Parabolic, RootClass};
use crate::root_system::{Root, RootSystem};

/// Maximum length of a root string in a reduced system (G2 reaches 4).
const MAX_STRING_LEN: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Omitted,
    Parabolic,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Node {
    /// Coefficients of the node; the zero node is the zero vector.
    pub root: Root,
    pub weight: i64,
    pub tag: Tag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaString {
    alpha: Root,
    nodes: Vec<Node>,
}

impl AlphaString {
    pub fn alpha(&self) -> &Root {
        &self.alpha
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Length of the g/p-piece.
    pub fn n_s(&self) -> usize {
        self.nodes.iter().filter(|n| n.tag == Tag::Omitted).count()
    }

    /// Length of the p-piece (parabolic and zero nodes).
    pub fn d_s(&self) -> usize {
        self.nodes.len() - self.n_s()
    }

    pub fn top_weight(&self) -> i64 {
        self.nodes[0].weight
    }

    pub fn head(&self) -> &Root {
        &self.nodes[0].root
    }

    pub fn contains_zero(&self) -> bool {
        self.nodes.iter().any(|n| n.tag == Tag::Zero)
    }
}

impl Serialize for AlphaString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("AlphaString", 3)?;
        st.serialize_field("nodes", &self.nodes)?;
        st.serialize_field("n_s", &self.n_s())?;
        st.serialize_field("d_s", &self.d_s())?;
        st.end()
    }
}

/// Walks the full α-string through `beta` in `roots ∪ {0}`, highest weight first.
///
/// Works for any pair of roots; tags are not assigned here.
pub fn full_string(rs: &RootSystem, alpha: &Root, beta: &Root) -> Result<Vec<(Root, i64)>> {
    let is_node = |v: &Root| v.is_zero() || rs.contains(v);
    if !rs.contains(alpha) || !rs.contains(beta) {
        let bad = if rs.contains(alpha) { beta } else { alpha };
        return Err(Error::NotARoot(
            bad.coefficients().to_vec(),
            rs.lie_type().to_string(),
        ));
    }
    let mut q = 0;
    while is_node(&beta.add_scaled(alpha, q + 1)) {
        q += 1;
    }
    let mut p = 0;
    while is_node(&beta.add_scaled(alpha, -(p + 1))) {
        p += 1;
    }
    for gap in 2..=MAX_STRING_LEN {
        if is_node(&beta.add_scaled(alpha, q + gap)) || is_node(&beta.add_scaled(alpha, -(p + gap))) {
            return Err(Error::Invariant(format!(
                "{alpha}-string through {beta} is not an interval"
            )));
        }
    }
    let nodes: Vec<(Root, i64)> = (-p..=q)
        .rev()
        .map(|k| {
            let v = beta.add_scaled(alpha, k);
            let w = rs.pairing_unchecked(v.coefficients(), alpha.coefficients());
            (v, w)
        })
        .collect();
    if nodes.windows(2).any(|w| w[0].1 - w[1].1 != 2) {
        return Err(Error::Invariant(format!(
            "{alpha}-string through {beta}: weights do not step by 2"
        )));
    }
    Ok(nodes)
}

/// The α-string through the omitted root `beta`, tagged by `parabolic`.
pub fn alpha_string_through(parabolic: &Parabolic, alpha: &Root, beta: &Root) -> Result<AlphaString> {
    parabolic.require_omitted(alpha)?;
    parabolic.require_omitted(beta)?;
    let walked = full_string(parabolic.root_system(), alpha, beta)?;
    let nodes: Vec<Node> = walked
        .into_iter()
        .map(|(root, weight)| {
            let tag = if root.is_zero() {
                Tag::Zero
            } else {
                match parabolic.classify(&root) {
                    RootClass::Omitted => Tag::Omitted,
                    RootClass::Parabolic => Tag::Parabolic,
                }
            };
            Node { root, weight, tag }
        })
        .collect();

    let prefix = nodes.iter().take_while(|n| n.tag == Tag::Omitted).count();
    if nodes[prefix..].iter().any(|n| n.tag == Tag::Omitted) {
        return Err(Error::Invariant(format!(
            "{alpha}-string through {beta}: omitted nodes are not a prefix"
        )));
    }
    let zero_expected = alpha == beta;
    let zero_count = nodes.iter().filter(|n| n.tag == Tag::Zero).count();
    if zero_count != usize::from(zero_expected) {
        return Err(Error::Invariant(format!(
            "{alpha}-string through {beta}: found {zero_count} zero nodes"
        )));
    }
    Ok(AlphaString {
        alpha: alpha.clone(),
        nodes,
    })
}

/// Partitions the omitted roots of `parabolic` into α-strings.
///
/// Ordered by decreasing top weight, then by the enumeration index of the head node.
pub fn string_inventory(parabolic: &Parabolic, alpha: &Root) -> Result<Vec<AlphaString>> {
    parabolic.require_omitted(alpha)?;
    let mut covered: HashSet<Root> = HashSet::new();
    let mut strings = Vec::new();
    for beta in parabolic.omitted_roots() {
        if covered.contains(beta) {
            continue;
        }
        let s = alpha_string_through(parabolic, alpha, beta)?;
        for node in s.nodes() {
            if node.tag == Tag::Omitted && !covered.insert(node.root.clone()) {
                return Err(Error::Invariant(format!("{} lies in two strings", node.root)));
            }
        }
        strings.push(s);
    }
    let total: usize = strings.iter().map(AlphaString::n_s).sum();
    if total != parabolic.tangent_dimension() {
        return Err(Error::Invariant(format!(
            "strings cover {total} omitted roots, expected {}",
            parabolic.tangent_dimension()
        )));
    }
    let position = |r: &Root| {
        parabolic
            .omitted_roots()
            .iter()
            .position(|o| o == r)
            .unwrap_or(usize::MAX)
    };
    strings.sort_by_key(|s| (-s.top_weight(), position(s.head())));
    Ok(strings)
}

/// Degree of the string's line bundle recovered from weight symmetry alone:
/// a full sl2 string with top weight k has k + 1 nodes, so the p-piece has
/// `k + 1 − n_s` of them.
pub fn oracle_degree(s: &AlphaString) -> i64 {
    s.top_weight() - s.n_s() as i64 + 1
}

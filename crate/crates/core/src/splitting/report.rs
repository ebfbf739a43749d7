use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::p1::BStringRep;
use crate::parabolic::Parabolic;
use crate::root_system::Root;
use crate::strings::{full_string, string_inventory, AlphaString};

use super::SplittingType;

/// `T(G/P)` restricted to the circle of `alpha`: `⊕_s O(d_s)^{n_s}`.
pub fn tangent_splitting(parabolic: &Parabolic, alpha: &Root) -> Result<SplittingType> {
    let inventory = string_inventory(parabolic, alpha)?;
    Ok(from_inventory(&inventory))
}

fn from_inventory(inventory: &[AlphaString]) -> SplittingType {
    let mut t = SplittingType::new();
    for s in inventory {
        t.add(s.d_s() as i64, s.n_s() as u64);
    }
    t
}

/// The same splitting, computed as a sum of P¹ quotients.
///
/// Each full α-string is an SL(2)-string; measured against the circle's
/// Borel (weights negated) its p-piece is the B-invariant top, and the
/// g/p-piece is the quotient by it.
pub fn tangent_splitting_via_quotients(parabolic: &Parabolic, alpha: &Root) -> Result<SplittingType> {
    let inventory = string_inventory(parabolic, alpha)?;
    let mut t = SplittingType::new();
    for s in &inventory {
        let full = full_string(parabolic.root_system(), alpha, s.head())?;
        let borel_top = -full.last().expect("strings are non-empty").1;
        let rep = BStringRep::new(borel_top, full.len())?;
        let piece = rep.quotient(s.d_s())?;
        t = t.direct_sum(&piece.to_splitting());
    }
    Ok(t)
}

/// `g` restricted to the circle: always trivial of rank `dim g`.
///
/// Partitions `roots ∪ h` into full α-strings and checks each is a
/// weight-symmetric SL(2)-string.
pub fn adjoint_splitting(parabolic: &Parabolic, alpha: &Root) -> Result<SplittingType> {
    parabolic.require_omitted(alpha)?;
    let rs = parabolic.root_system();
    let mut covered: HashSet<Root> = HashSet::new();
    let mut total = SplittingType::new();
    let mut zero_nodes = 0;
    for beta in rs.roots() {
        if covered.contains(&beta) {
            continue;
        }
        let full = full_string(rs, alpha, &beta)?;
        let rep = BStringRep::new(full[0].1, full.len())?;
        if !rep.is_equivariantly_trivial() {
            return Err(Error::Invariant(format!(
                "{alpha}-string through {beta} is not weight-symmetric"
            )));
        }
        for (node, _) in full {
            if node.is_zero() {
                zero_nodes += 1;
            } else {
                covered.insert(node);
            }
        }
        total = total.direct_sum(&rep.to_splitting());
    }
    if zero_nodes != 1 {
        return Err(Error::Invariant(format!(
            "expected one zero node across all {alpha}-strings, found {zero_nodes}"
        )));
    }
    // The kernel of α^∨ in the Cartan subalgebra: weight-0 singletons.
    let kernel = rs.rank() as u64 - 1;
    total = total.direct_sum(&SplittingType::line(0, kernel));
    if total.rank() != rs.dimension() as u64 {
        return Err(Error::Invariant(format!(
            "adjoint strings have total rank {}, expected {}",
            total.rank(),
            rs.dimension()
        )));
    }
    Ok(total)
}

#[derive(Debug, Clone, Serialize)]
pub struct CurvatureReport {
    pub alpha: Root,
    pub strings: Vec<AlphaString>,
    pub tangent: SplittingType,
    pub curvature: SplittingType,
    pub h0: u64,
    pub section_subbundle: SplittingType,
    /// Highest degree among summands with a factor from the α-string slot;
    /// `None` when `dim G/P = 1` and there are no such summands.
    pub alpha_slot_max_degree: Option<i64>,
    pub contraction_vanishes: bool,
}

/// Curvature bundle `g ⊗ Λ²(g/p)*` on the circle of `alpha`.
pub fn curvature_report(parabolic: &Parabolic, alpha: &Root) -> Result<CurvatureReport> {
    let strings = string_inventory(parabolic, alpha)?;
    let tangent = from_inventory(&strings);
    let adjoint = adjoint_splitting(parabolic, alpha)?;
    let curvature = adjoint.tensor(&tangent.dual().wedge2());
    let h0 = curvature.h0();

    // All tangent degrees are >= 0, so sections come only from pairs of O(0) summands.
    let section_subbundle = curvature.nonnegative_part();
    let flat = tangent.multiplicity(0);
    let expected = adjoint.tensor(&SplittingType::line(0, flat * flat.saturating_sub(1) / 2));
    if section_subbundle != expected {
        return Err(Error::Invariant(format!(
            "section subbundle {section_subbundle} does not come from trivial strings ({expected})"
        )));
    }

    let alpha_string = strings
        .iter()
        .find(|s| s.contains_zero())
        .ok_or_else(|| Error::Invariant(format!("no string of {alpha} meets zero")))?;
    if (alpha_string.n_s(), alpha_string.d_s()) != (1, 2) {
        return Err(Error::Invariant(format!(
            "string through {alpha} has (n_s, d_s) = ({}, {})",
            alpha_string.n_s(),
            alpha_string.d_s()
        )));
    }
    let mut others = tangent.clone();
    others.summands.entry(2).and_modify(|m| *m -= 1);
    others.summands.retain(|_, m| *m > 0);
    let alpha_slot = adjoint.tensor(&SplittingType::line(-2, 1).tensor(&others.dual()));
    let alpha_slot_max_degree = alpha_slot.max_degree();
    let contraction_vanishes = alpha_slot_max_degree.is_none_or(|d| d < 0);

    Ok(CurvatureReport {
        alpha: alpha.clone(),
        strings,
        tangent,
        curvature,
        h0,
        section_subbundle,
        alpha_slot_max_degree,
        contraction_vanishes,
    })
}

#[derive(Debug, Clone)]
pub struct FlatnessReport {
    pub dim_g: usize,
    pub dim_gp: usize,
    pub reports: Vec<CurvatureReport>,
    /// The circle directions are exactly the omitted root spaces.
    pub spans_tangent: bool,
    pub verdict: bool,
}

impl FlatnessReport {
    pub fn conclusion(&self, model: &str) -> String {
        if self.verdict {
            format!(
                "curvature sections vanish along all {} circle directions: complete parabolic geometries modelled on {model} are flat",
                self.dim_gp
            )
        } else {
            format!("flatness certificate failed for {model}")
        }
    }
}

pub fn flatness_report(parabolic: &Parabolic) -> Result<FlatnessReport> {
    if parabolic.omitted_roots().is_empty() {
        return Err(Error::NoOmittedRoots);
    }
    let reports = parabolic
        .omitted_roots()
        .iter()
        .map(|a| curvature_report(parabolic, a))
        .collect::<Result<Vec<_>>>()?;
    let directions: HashSet<&Root> = reports.iter().map(|r| &r.alpha).collect();
    let spans_tangent = directions.len() == parabolic.tangent_dimension()
        && parabolic.omitted_roots().iter().all(|a| directions.contains(a));
    let verdict = spans_tangent && reports.iter().all(|r| r.contraction_vanishes);
    Ok(FlatnessReport {
        dim_g: parabolic.root_system().dimension(),
        dim_gp: parabolic.tangent_dimension(),
        reports,
        spans_tangent,
        verdict,
    })
}

//! Instance-level checks of the categorical properties: subtractive and
//! 1-regularity terms, cokernels of surjections, and congruence
//! permutability (full and at the unit).

use serde::Serialize;

use crate::congruence::{all_congruences, psi};
use crate::error::{Error, Result};
use crate::magma::{is_l, require_pre_l, MagmaTable};
use crate::morphism::{all_morphisms, ElementMap};
use crate::partition::Partition;
use crate::relation::{compose, PairRelation};

/// The binary terms used by the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Term {
    /// `s(x, y) = y·x`
    S,
    /// `t₁(x, y) = x·y`
    T1,
    /// `t₂(x, y) = y·x`
    T2,
}

impl Term {
    pub fn eval(self, m: &MagmaTable, x: usize, y: usize) -> usize {
        match self {
            Term::S | Term::T2 => m.op(y, x),
            Term::T1 => m.op(x, y),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubtractiveLaw {
    /// `s(x, x) = 1`
    Diagonal,
    /// `s(x, 1) = x`
    RightUnit,
}

/// Every `(law, x)` at which a subtractive identity fails.
pub fn subtractive_violations(m: &MagmaTable) -> Vec<(SubtractiveLaw, usize)> {
    let u = m.unit();
    let mut out = Vec::new();
    for x in m.elements() {
        if Term::S.eval(m, x, x) != u {
            out.push((SubtractiveLaw::Diagonal, x));
        }
        if Term::S.eval(m, x, u) != x {
            out.push((SubtractiveLaw::RightUnit, x));
        }
    }
    out
}

pub fn check_subtractive_terms(m: &MagmaTable) -> bool {
    subtractive_violations(m).is_empty()
}

/// First `(a, b)` where `t₁(a,b) = t₂(a,b) = 1` disagrees with `a = b`.
pub fn one_regularity_violation(m: &MagmaTable) -> Option<(usize, usize)> {
    let u = m.unit();
    for a in m.elements() {
        for b in m.elements() {
            let both = Term::T1.eval(m, a, b) == u && Term::T2.eval(m, a, b) == u;
            if both != (a == b) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn check_one_regularity(m: &MagmaTable) -> bool {
    one_regularity_violation(m).is_none()
}

/// For a surjective morphism between L-algebras, `Eq(f) = ∼_{f⁻¹(1)}`.
pub fn check_cokernel_factorization(f: &ElementMap) -> Result<bool> {
    if !f.is_morphism() {
        return Err(Error::Precondition("map is not a morphism".into()));
    }
    if !f.is_surjective() {
        return Err(Error::Precondition("morphism is not surjective".into()));
    }
    if !is_l(f.domain()) {
        return Err(Error::Precondition("domain is not an L-algebra".into()));
    }
    if !is_l(f.codomain()) {
        return Err(Error::Precondition("codomain is not an L-algebra".into()));
    }
    let by_kernel = psi(f.domain(), f.kernel())?.to_relation();
    Ok(f.kernel_pair() == by_kernel)
}

/// Carrier bound for [`surjective_morphisms`].
pub const SURJECTION_SEARCH_BOUND: usize = 4;

pub fn surjective_morphisms(domain: &MagmaTable, codomain: &MagmaTable) -> Result<Vec<ElementMap>> {
    let biggest = domain.size().max(codomain.size());
    if biggest > SURJECTION_SEARCH_BOUND {
        return Err(Error::Capacity {
            what: "surjection search carrier",
            requested: biggest,
            limit: SURJECTION_SEARCH_BOUND,
            hint: "",
        });
    }
    Ok(all_morphisms(domain, codomain)
        .into_iter()
        .filter(ElementMap::is_surjective)
        .collect())
}

pub fn compose_relations(r: &PairRelation, s: &PairRelation) -> Result<PairRelation> {
    compose(r, s)
}

/// Outcome of one pass over all ordered congruence pairs `(R, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutabilityScan {
    pub congruences: Vec<Partition>,
    /// First pair with `S∘R ≠ R∘S`.
    pub full_violation: Option<(Partition, Partition)>,
    /// First `(R, S, x)` with `(x,1) ∈ S∘R` but `(x,1) ∉ R∘S` or vice versa.
    pub at_one_violation: Option<(Partition, Partition, usize)>,
}

impl PermutabilityScan {
    pub fn permutable(&self) -> bool {
        self.full_violation.is_none()
    }

    pub fn permutable_at_one(&self) -> bool {
        self.at_one_violation.is_none()
    }
}

/// Scans every congruence pair once, recording both full and at-one
/// permutability.
pub fn scan_permutability(m: &MagmaTable) -> Result<PermutabilityScan> {
    let congruences = all_congruences(m)?;
    let rels: Vec<PairRelation> = congruences.iter().map(Partition::to_relation).collect();
    let u = m.unit();
    let mut full_violation = None;
    let mut at_one_violation = None;
    for (i, r) in rels.iter().enumerate() {
        for (j, s) in rels.iter().enumerate() {
            let s_after_r = compose(r, s)?;
            let r_after_s = compose(s, r)?;
            if full_violation.is_none() && s_after_r != r_after_s {
                full_violation = Some((congruences[i].clone(), congruences[j].clone()));
            }
            if at_one_violation.is_none() {
                if let Some(x) = m
                    .elements()
                    .find(|&x| s_after_r.contains(x, u) != r_after_s.contains(x, u))
                {
                    at_one_violation = Some((congruences[i].clone(), congruences[j].clone(), x));
                }
            }
        }
    }
    Ok(PermutabilityScan {
        congruences,
        full_violation,
        at_one_violation,
    })
}

pub fn check_permutability(m: &MagmaTable) -> Result<bool> {
    Ok(scan_permutability(m)?.permutable())
}

pub fn check_permutability_at_one(m: &MagmaTable) -> Result<bool> {
    require_pre_l(m)?;
    Ok(scan_permutability(m)?.permutable_at_one())
}

//! Ideals of pre-L-algebras: the membership test, generated ideals and
//! enumeration of the whole ideal set.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::magma::{require_pre_l, MagmaTable};

/// The five defining conditions of an ideal `I`, quantified over `x, y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealCondition {
    /// `1 ∈ I`
    ContainsUnit,
    /// `x ∈ I` and `x·y ∈ I` imply `y ∈ I`
    Detachment,
    /// `x ∈ I` implies `(x·y)·y ∈ I`
    RightReturn,
    /// `x ∈ I` implies `y·x ∈ I`
    LeftAbsorption,
    /// `x ∈ I` implies `y·(x·y) ∈ I`
    Conjugation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealViolation {
    pub condition: IdealCondition,
    /// `(x, y)`; for [`IdealCondition::ContainsUnit`] both are the unit.
    pub witness: (usize, usize),
}

/// First violated condition, scanning conditions in order and `(x, y)` in
/// row-major order within each.
pub fn ideal_violation(m: &MagmaTable, s: BitSet) -> Option<IdealViolation> {
    use IdealCondition::*;
    let u = m.unit();
    if !s.contains(u) {
        return Some(IdealViolation {
            condition: ContainsUnit,
            witness: (u, u),
        });
    }
    type Holds<'a> = &'a dyn Fn(usize, usize) -> bool;
    let checks: [(IdealCondition, Holds); 4] = [
        (Detachment, &|x, y| !s.contains(m.op(x, y)) || s.contains(y)),
        (RightReturn, &|x, y| s.contains(m.op(m.op(x, y), y))),
        (LeftAbsorption, &|x, y| s.contains(m.op(y, x))),
        (Conjugation, &|x, y| s.contains(m.op(y, m.op(x, y)))),
    ];
    for (condition, holds) in checks {
        for x in s.iter() {
            for y in m.elements() {
                if !holds(x, y) {
                    return Some(IdealViolation {
                        condition,
                        witness: (x, y),
                    });
                }
            }
        }
    }
    None
}

pub fn is_ideal(m: &MagmaTable, s: BitSet) -> bool {
    s.is_subset(m.carrier()) && ideal_violation(m, s).is_none()
}

pub(crate) fn require_ideal(m: &MagmaTable, s: BitSet) -> Result<()> {
    if is_ideal(m, s) {
        Ok(())
    } else {
        Err(Error::NotIdeal(s.to_vec()))
    }
}

/// Least ideal containing `gens`, as a monotone fixpoint of the closure rules.
pub fn ideal_closure(m: &MagmaTable, gens: BitSet) -> Result<BitSet> {
    require_pre_l(m)?;
    if !gens.is_subset(m.carrier()) {
        let bad = (gens - m.carrier()).iter().next().unwrap_or(0);
        return Err(Error::ElementOutOfRange {
            element: bad,
            size: m.size(),
        });
    }
    Ok(closure_unchecked(m, gens))
}

pub(crate) fn closure_unchecked(m: &MagmaTable, gens: BitSet) -> BitSet {
    let mut current = gens.with(m.unit());
    loop {
        let mut next = current;
        for x in current.iter() {
            for y in m.elements() {
                let xy = m.op(x, y);
                next.insert(m.op(xy, y));
                next.insert(m.op(y, x));
                next.insert(m.op(y, xy));
                if current.contains(xy) {
                    next.insert(y);
                }
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Strategy for [`all_ideals_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealEnumeration {
    /// Test every subset containing the unit; carrier size at most
    /// [`EXHAUSTIVE_IDEAL_BOUND`].
    Exhaustive,
    /// Close the principal ideals under joins. Works for any carrier.
    PrincipalClosure,
}

pub const EXHAUSTIVE_IDEAL_BOUND: usize = 20;

/// Every ideal once, sorted by cardinality and then bit pattern.
pub fn all_ideals(m: &MagmaTable) -> Result<Vec<BitSet>> {
    all_ideals_with(m, IdealEnumeration::Exhaustive)
}

pub fn all_ideals_with(m: &MagmaTable, mode: IdealEnumeration) -> Result<Vec<BitSet>> {
    require_pre_l(m)?;
    let n = m.size();
    let mut out = match mode {
        IdealEnumeration::Exhaustive => {
            if n > EXHAUSTIVE_IDEAL_BOUND {
                return Err(Error::Capacity {
                    what: "exhaustive ideal enumeration",
                    requested: n,
                    limit: EXHAUSTIVE_IDEAL_BOUND,
                    hint: "; use principal-closure mode",
                });
            }
            let u = m.unit();
            let others: Vec<usize> = m.elements().filter(|&e| e != u).collect();
            (0u64..1 << others.len())
                .map(|code| {
                    BitSet::from_bits(code)
                        .iter()
                        .map(|k| others[k])
                        .collect::<BitSet>()
                        .with(u)
                })
                .filter(|&s| ideal_violation(m, s).is_none())
                .collect::<Vec<_>>()
        }
        IdealEnumeration::PrincipalClosure => {
            let mut seen: BTreeSet<BitSet> = BTreeSet::new();
            let mut frontier: Vec<BitSet> = std::iter::once(BitSet::EMPTY)
                .chain(m.elements().map(BitSet::singleton))
                .map(|g| closure_unchecked(m, g))
                .collect();
            frontier.sort();
            frontier.dedup();
            let principals = frontier.clone();
            seen.extend(frontier.iter().copied());
            while let Some(i) = frontier.pop() {
                for &p in &principals {
                    let j = closure_unchecked(m, i | p);
                    if seen.insert(j) {
                        frontier.push(j);
                    }
                }
            }
            seen.into_iter().collect()
        }
    };
    out.sort_by_key(|s| s.order_key());
    Ok(out)
}

//! Congruences, quotients and the Galois connection with ideals.
//!
//! `phi` sends a congruence to the class of the unit; `psi` sends an ideal
//! `I` to the relation `x ∼ y ⇔ x·y ∈ I and y·x ∈ I`.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideals::require_ideal;
use crate::magma::{require_pre_l, MagmaTable};
use crate::morphism::ElementMap;
use crate::partition::{all_partitions, Partition};

/// Largest carrier for which [`all_congruences`] enumerates partitions.
pub const CONGRUENCE_BOUND: usize = 9;

/// Every congruence in canonical label form, in restricted-growth order.
pub fn all_congruences(m: &MagmaTable) -> Result<Vec<Partition>> {
    if m.size() > CONGRUENCE_BOUND {
        return Err(Error::Capacity {
            what: "congruence enumeration",
            requested: m.size(),
            limit: CONGRUENCE_BOUND,
            hint: "",
        });
    }
    Ok(all_partitions(m.size())
        .filter(|p| p.is_congruence(m))
        .collect())
}

fn require_congruence(m: &MagmaTable, c: &Partition) -> Result<()> {
    if c.is_congruence(m) {
        Ok(())
    } else {
        Err(Error::NotCongruence(c.labels().to_vec()))
    }
}

/// `[1]_∼`.
pub fn phi(m: &MagmaTable, c: &Partition) -> Result<BitSet> {
    require_congruence(m, c)?;
    Ok(c.class_of(m.unit()))
}

/// `∼_I`. Rejects non-ideals.
pub fn psi(m: &MagmaTable, i: BitSet) -> Result<Partition> {
    require_ideal(m, i)?;
    Ok(psi_unchecked(m, i))
}

pub(crate) fn psi_unchecked(m: &MagmaTable, i: BitSet) -> Partition {
    let n = m.size();
    let mut labels = vec![usize::MAX; n];
    for x in 0..n {
        if labels[x] != usize::MAX {
            continue;
        }
        labels[x] = x;
        for y in x + 1..n {
            if i.contains(m.op(x, y)) && i.contains(m.op(y, x)) {
                labels[y] = x;
            }
        }
    }
    Partition::from_labels(&labels)
}

/// A quotient table with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: MagmaTable,
    pub projection: ElementMap,
}

/// `m/c`. Class `k` of the quotient is the class with label `k`.
pub fn quotient(m: &MagmaTable, c: &Partition) -> Result<Quotient> {
    require_congruence(m, c)?;
    let reps: Vec<usize> = c
        .classes()
        .iter()
        .map(|cl| cl.iter().next().expect("classes are nonempty"))
        .collect();
    let algebra = MagmaTable::from_fn(reps.len(), c.label(m.unit()), |a, b| {
        c.label(m.op(reps[a], reps[b]))
    })?;
    let projection = ElementMap::new(m.clone(), algebra.clone(), c.labels().to_vec())?;
    Ok(Quotient {
        algebra,
        projection,
    })
}

/// `ψ(φ(c))`: the least congruence containing `c` with an L-algebra quotient.
pub fn smallest_l_congruence(m: &MagmaTable, c: &Partition) -> Result<Partition> {
    require_pre_l(m)?;
    let i = phi(m, c)?;
    psi(m, i)
}

/// The L-algebra reflection: quotient by `x ∼ y ⇔ x·y = y·x = 1`.
pub fn reflect(m: &MagmaTable) -> Result<Quotient> {
    require_pre_l(m)?;
    let c = psi_unchecked(m, BitSet::singleton(m.unit()));
    quotient(m, &c)
}

//! Commutators of ideals, found by minimal-ideal search, and the prime and
//! semiprime ideals built on them.

use crate::bitset::BitSet;
use crate::congruence::{psi_unchecked, quotient};
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, require_ideal};
use crate::lattice::ideal_lattice;
use crate::magma::{product, require_l, subalgebra, MagmaTable};
use crate::morphism::ElementMap;

/// The multiplication map `μ: I×J → X/∼_K`, `μ(a, b) = [a·b]`.
pub fn multiplication_map(m: &MagmaTable, i: BitSet, j: BitSet, k: BitSet) -> Result<ElementMap> {
    let (left, left_emb) = subalgebra(m, i)?;
    let (right, right_emb) = subalgebra(m, j)?;
    let domain = product(&left, &right)?;
    let q = quotient(m, &psi_unchecked(m, k))?;
    let width = right.size();
    let images = (0..domain.size())
        .map(|s| {
            let (a, b) = (left_emb[s / width], right_emb[s % width]);
            q.projection.apply(m.op(a, b))
        })
        .collect();
    ElementMap::new(domain, q.algebra, images)
}

/// Every ideal `K` for which [`multiplication_map`] is a morphism, in
/// (cardinality, bits) order.
pub fn commutator_candidates(m: &MagmaTable, i: BitSet, j: BitSet) -> Result<Vec<BitSet>> {
    require_l(m)?;
    require_ideal(m, i)?;
    require_ideal(m, j)?;
    let mut out = Vec::new();
    for k in all_ideals(m)? {
        if multiplication_map(m, i, j, k)?.is_morphism() {
            out.push(k);
        }
    }
    Ok(out)
}

/// `[I, J]`: the least ideal `K` making `μ: I×J → X/∼_K` a morphism.
///
/// Every ideal is tried, not only those inside `I∩J`. The first success of
/// minimal size must be the only one of that size and must lie inside every
/// other success; otherwise the search reports the ambiguity.
pub fn commutator(m: &MagmaTable, i: BitSet, j: BitSet) -> Result<BitSet> {
    let successes = commutator_candidates(m, i, j)?;
    let Some(&first) = successes.first() else {
        // X itself always works, since X/∼_X is trivial
        return Err(Error::Precondition("no ideal makes μ a morphism".into()));
    };
    let minimal: Vec<BitSet> = successes
        .iter()
        .copied()
        .filter(|k| k.len() == first.len())
        .collect();
    if minimal.len() > 1 || !successes.iter().all(|k| first.is_subset(*k)) {
        return Err(Error::AmbiguousCommutator(
            successes.iter().map(|k| k.to_vec()).collect(),
        ));
    }
    Ok(first)
}

/// `[J,J] ⊆ I ⇒ J ⊆ I` for every ideal `J`.
pub fn is_semiprime(m: &MagmaTable, i: BitSet) -> Result<bool> {
    require_l(m)?;
    require_ideal(m, i)?;
    for j in all_ideals(m)? {
        if commutator(m, j, j)?.is_subset(i) && !j.is_subset(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Proper meet-irreducible ideals, in (cardinality, bits) order.
pub fn prime_ideals(m: &MagmaTable) -> Result<Vec<BitSet>> {
    let lattice = ideal_lattice(m)?;
    Ok(lattice
        .meet_irreducibles()
        .into_iter()
        .map(|p| *lattice.element(p))
        .collect())
}

/// Ideals maximal among the proper ones.
pub fn maximal_ideals(m: &MagmaTable) -> Result<Vec<BitSet>> {
    let ideals = all_ideals(m)?;
    let full = m.carrier();
    Ok(ideals
        .iter()
        .copied()
        .filter(|&p| {
            p != full
                && !ideals
                    .iter()
                    .any(|&q| q != full && q != p && p.is_subset(q))
        })
        .collect())
}

//! Per-algebra checks of the structural theorems. Each function returns the
//! list of counterexamples found; an empty list means the law holds on that
//! instance.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::category::{
    check_cokernel_factorization, check_one_regularity, check_subtractive_terms,
    scan_permutability, surjective_morphisms,
};
use crate::commutator::{commutator, is_semiprime, prime_ideals};
use crate::congruence::{all_congruences, phi, psi, quotient};
use crate::error::Result;
use crate::ideals::all_ideals;
use crate::lattice::ideal_lattice;
use crate::magma::{is_l, MagmaTable};
use crate::partition::Partition;
use crate::spectrum::spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: &'static str,
    pub detail: String,
}

fn fail(law: &'static str, detail: String) -> LawFailure {
    LawFailure { law, detail }
}

/// Galois connection between congruences and ideals of a pre-L-algebra:
/// adjunction, `φψ = id`, `ψφ` a closure operator, the image of `ψ`, the
/// minimality of `ψφ(c)` and the ideal/L-congruence bijection.
pub fn galois_failures(m: &MagmaTable) -> Result<Vec<LawFailure>> {
    let ideals = all_ideals(m)?;
    let congs = all_congruences(m)?;
    let mut out = Vec::new();

    let phis: Vec<BitSet> = congs.iter().map(|c| phi(m, c)).collect::<Result<_>>()?;
    let psis: Vec<Partition> = ideals.iter().map(|&i| psi(m, i)).collect::<Result<_>>()?;
    let closures: Vec<Partition> = phis.iter().map(|&i| psi(m, i)).collect::<Result<_>>()?;
    let l_quotient: Vec<bool> = congs
        .iter()
        .map(|c| quotient(m, c).map(|q| is_l(&q.algebra)))
        .collect::<Result<_>>()?;

    for (ci, c) in congs.iter().enumerate() {
        for (ii, &i) in ideals.iter().enumerate() {
            if phis[ci].is_subset(i) != c.refines(&psis[ii]) {
                out.push(fail(
                    "adjunction",
                    format!("congruence {:?}, ideal {:?}", c.labels(), i.to_vec()),
                ));
            }
        }
    }
    for (ii, &i) in ideals.iter().enumerate() {
        if phi(m, &psis[ii])? != i {
            out.push(fail("phi-psi-identity", format!("ideal {:?}", i.to_vec())));
        }
    }
    for (ci, c) in congs.iter().enumerate() {
        let cl = &closures[ci];
        if !c.refines(cl) {
            out.push(fail("closure-extensive", format!("{:?}", c.labels())));
        }
        if psi(m, phi(m, cl)?)? != *cl {
            out.push(fail("closure-idempotent", format!("{:?}", c.labels())));
        }
        for (di, d) in congs.iter().enumerate() {
            if c.refines(d) && !cl.refines(&closures[di]) {
                out.push(fail(
                    "closure-monotone",
                    format!("{:?} ⊆ {:?}", c.labels(), d.labels()),
                ));
            }
        }
        if l_quotient[ci] != (*c == *cl) {
            out.push(fail("image-characterization", format!("{:?}", c.labels())));
        }
        // intersection of every congruence above c with an L-algebra quotient
        let meet = congs
            .iter()
            .zip(&l_quotient)
            .filter(|(d, &l)| l && c.refines(d))
            .map(|(d, _)| d.clone())
            .reduce(|a, b| a.meet(&b));
        if meet.as_ref() != Some(cl) {
            out.push(fail("minimality", format!("{:?}", c.labels())));
        }
    }
    let l_count = l_quotient.iter().filter(|&&l| l).count();
    if l_count != ideals.len() {
        out.push(fail(
            "ideal-congruence-bijection",
            format!("{} ideals, {} L-congruences", ideals.len(), l_count),
        ));
    }
    Ok(out)
}

/// `[I,J] = I∩J` by minimal-ideal search, for every pair of ideals of an
/// L-algebra, plus abelian triviality.
pub fn commutator_failures(m: &MagmaTable) -> Result<Vec<LawFailure>> {
    let ideals = all_ideals(m)?;
    let mut out = Vec::new();
    for &i in &ideals {
        for &j in &ideals {
            let c = commutator(m, i, j)?;
            if c != (i & j) {
                out.push(fail(
                    "commutator-is-intersection",
                    format!("[{:?}, {:?}] = {:?}", i.to_vec(), j.to_vec(), c.to_vec()),
                ));
            }
        }
    }
    let full = m.carrier();
    let abelian = commutator(m, full, full)? == BitSet::singleton(m.unit());
    if abelian != (m.size() == 1) {
        out.push(fail(
            "abelian-triviality",
            format!("size {}, [X,X] = {{1}}: {abelian}", m.size()),
        ));
    }
    Ok(out)
}

/// Distributivity, semiprimeness, prime decomposition, the spectrum
/// isomorphism and sobriety for an L-algebra.
pub fn lattice_failures(m: &MagmaTable) -> Result<Vec<LawFailure>> {
    let lattice = ideal_lattice(m)?;
    let mut out = Vec::new();
    if let Some(t) = lattice.distributivity_violation() {
        out.push(fail("distributive", format!("triple {t:?}")));
    }
    let primes = prime_ideals(m)?;
    for &i in lattice.elements() {
        if !is_semiprime(m, i)? {
            out.push(fail("semiprime", format!("{:?}", i.to_vec())));
        }
        let meet = primes
            .iter()
            .filter(|p| i.is_subset(**p))
            .fold(m.carrier(), |acc, &p| acc & p);
        if meet != i {
            out.push(fail("intersection-of-primes", format!("{:?}", i.to_vec())));
        }
    }
    let spec = spectrum(m)?;
    if let Some(why) = &spec.isomorphism_violation {
        out.push(fail("spectrum-isomorphism", why.clone()));
    }
    if let Some((c, generic)) = spec.space.sobriety_violation() {
        out.push(fail(
            "sober",
            format!("closed {:?} has generic points {generic:?}", c.to_vec()),
        ));
    }
    Ok(out)
}

/// Subtractive terms, 1-regularity exactly on L-algebras, and
/// permutability at the unit for a pre-L-algebra.
pub fn category_failures(m: &MagmaTable) -> Result<Vec<LawFailure>> {
    let mut out = Vec::new();
    if !check_subtractive_terms(m) {
        out.push(fail("subtractive-terms", String::new()));
    }
    if check_one_regularity(m) != is_l(m) {
        out.push(fail("one-regularity-iff-l", String::new()));
    }
    let scan = scan_permutability(m)?;
    if let Some((r, s, x)) = scan.at_one_violation {
        out.push(fail(
            "permutable-at-one",
            format!("R = {:?}, S = {:?}, x = {x}", r.labels(), s.labels()),
        ));
    }
    Ok(out)
}

/// `Eq(f) = ∼_{f⁻¹(1)}` for every surjective morphism `domain → codomain`.
/// Returns the failures and the number of surjections checked.
pub fn cokernel_failures(
    domain: &MagmaTable,
    codomain: &MagmaTable,
) -> Result<(Vec<LawFailure>, usize)> {
    let maps = surjective_morphisms(domain, codomain)?;
    let mut out = Vec::new();
    for f in &maps {
        if !check_cokernel_factorization(f)? {
            out.push(fail("cokernel", format!("images {:?}", f.images())));
        }
    }
    Ok((out, maps.len()))
}

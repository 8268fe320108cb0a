//! Finite topological spaces and the Zariski spectrum of an L-algebra.

use crate::bitset::{BitSet, MAX_CARRIER};
use crate::commutator::prime_ideals;
use crate::error::{Error, Result};
use crate::lattice::{ideal_lattice, FiniteLattice};
use crate::magma::{require_l, MagmaTable};

/// A topology on points `{0..n}` given by its open sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    points: usize,
    opens: Vec<BitSet>,
}

impl FiniteSpace {
    /// Opens are deduplicated and sorted by (cardinality, bits). The family
    /// must contain `∅` and the whole space and be closed under union and
    /// intersection.
    pub fn new(points: usize, opens: impl IntoIterator<Item = BitSet>) -> Result<Self> {
        if points > MAX_CARRIER {
            return Err(Error::Capacity {
                what: "space points",
                requested: points,
                limit: MAX_CARRIER,
                hint: "",
            });
        }
        let mut opens: Vec<BitSet> = opens.into_iter().collect();
        opens.sort_by_key(|s| s.order_key());
        opens.dedup();
        let whole = BitSet::full(points);
        let space = FiniteSpace { points, opens };
        if !space.is_open(BitSet::EMPTY) || !space.is_open(whole) {
            return Err(Error::Precondition(
                "topology lacks ∅ or the whole space".into(),
            ));
        }
        for &a in &space.opens {
            if !a.is_subset(whole) {
                return Err(Error::Precondition(format!(
                    "open {a:?} has foreign points"
                )));
            }
            for &b in &space.opens {
                if !space.is_open(a | b) || !space.is_open(a & b) {
                    return Err(Error::Precondition(format!(
                        "opens {a:?}, {b:?} not closed under union/intersection"
                    )));
                }
            }
        }
        Ok(space)
    }

    /// The indiscrete topology: only `∅` and the whole space.
    pub fn indiscrete(points: usize) -> Self {
        Self::new(points, [BitSet::EMPTY, BitSet::full(points)]).expect("indiscrete topology")
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    pub fn is_open(&self, s: BitSet) -> bool {
        self.opens.contains(&s)
    }

    pub fn closed_sets(&self) -> Vec<BitSet> {
        let whole = BitSet::full(self.points);
        let mut closed: Vec<BitSet> = self.opens.iter().map(|&o| whole - o).collect();
        closed.sort_by_key(|s| s.order_key());
        closed
    }

    /// Smallest closed set containing `p`.
    pub fn point_closure(&self, p: usize) -> BitSet {
        self.closed_sets()
            .into_iter()
            .filter(|c| c.contains(p))
            .fold(BitSet::full(self.points), |acc, c| acc & c)
    }

    /// Nonempty closed sets that are not the union of two proper closed
    /// subsets.
    pub fn irreducible_closed_sets(&self) -> Vec<BitSet> {
        let closed = self.closed_sets();
        closed
            .iter()
            .copied()
            .filter(|&c| {
                !c.is_empty()
                    && !closed.iter().any(|&a| {
                        a != c
                            && a.is_subset(c)
                            && closed
                                .iter()
                                .any(|&b| b != c && b.is_subset(c) && (a | b) == c)
                    })
            })
            .collect()
    }

    /// An irreducible closed set with its generic points, when their number
    /// is not exactly one.
    pub fn sobriety_violation(&self) -> Option<(BitSet, Vec<usize>)> {
        let closures: Vec<BitSet> = (0..self.points).map(|p| self.point_closure(p)).collect();
        self.irreducible_closed_sets().into_iter().find_map(|c| {
            let generic: Vec<usize> = (0..self.points).filter(|&p| closures[p] == c).collect();
            (generic.len() != 1).then_some((c, generic))
        })
    }

    pub fn is_sober(&self) -> bool {
        self.sobriety_violation().is_none()
    }

    /// `p` lies in the closure of `q`.
    pub fn specializes(&self, p: usize, q: usize) -> bool {
        self.point_closure(q).contains(p)
    }
}

/// `Spec(X)`: prime ideals with opens `U_I = {P : I ⊄ P}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSpace {
    pub points: Vec<BitSet>,
    pub space: FiniteSpace,
    /// The ideals of `X` in lattice order.
    pub ideals: Vec<BitSet>,
    /// For each ideal, the index of `U_I` in `space.opens()`.
    pub open_of_ideal: Vec<usize>,
    /// Why `I ↦ U_I` fails to be a lattice isomorphism, if it does.
    pub isomorphism_violation: Option<String>,
}

impl SpectrumSpace {
    pub fn open_set(&self, ideal: BitSet) -> BitSet {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, p)| !ideal.is_subset(**p))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn is_sober(&self) -> bool {
        self.space.is_sober()
    }
}

pub fn spectrum(m: &MagmaTable) -> Result<SpectrumSpace> {
    require_l(m)?;
    let lattice = ideal_lattice(m)?;
    let points = prime_ideals(m)?;
    if points.len() > MAX_CARRIER {
        return Err(Error::Capacity {
            what: "prime ideals",
            requested: points.len(),
            limit: MAX_CARRIER,
            hint: "",
        });
    }
    let ideals = lattice.elements().to_vec();
    let open_of = |i: BitSet| -> BitSet {
        points
            .iter()
            .enumerate()
            .filter(|(_, p)| !i.is_subset(**p))
            .map(|(k, _)| k)
            .collect()
    };
    let raw_opens: Vec<BitSet> = ideals.iter().map(|&i| open_of(i)).collect();
    let mut family = raw_opens.clone();
    family.push(BitSet::EMPTY);
    family.push(BitSet::full(points.len()));
    // the union/intersection closure is checked by FiniteSpace::new; close
    // first so a failure shows up as an isomorphism violation instead
    let mut closed = family.clone();
    loop {
        let mut grown = closed.clone();
        for &a in &closed {
            for &b in &closed {
                for c in [a | b, a & b] {
                    if !grown.contains(&c) {
                        grown.push(c);
                    }
                }
            }
        }
        if grown.len() == closed.len() {
            break;
        }
        closed = grown;
    }
    let space = FiniteSpace::new(points.len(), closed)?;
    let open_of_ideal: Vec<usize> = raw_opens
        .iter()
        .map(|o| space.opens().iter().position(|x| x == o).expect("present"))
        .collect();
    let isomorphism_violation = check_isomorphism(&lattice, &space, &open_of_ideal);
    Ok(SpectrumSpace {
        points,
        space,
        ideals,
        open_of_ideal,
        isomorphism_violation,
    })
}

fn check_isomorphism(
    lattice: &FiniteLattice<BitSet>,
    space: &FiniteSpace,
    open_of_ideal: &[usize],
) -> Option<String> {
    let n = lattice.len();
    let mut seen = open_of_ideal.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != n {
        return Some("I ↦ U_I is not injective".into());
    }
    if space.opens().len() != n {
        return Some(format!("{} opens but {} ideals", space.opens().len(), n));
    }
    let open = |i: usize| space.opens()[open_of_ideal[i]];
    for i in 0..n {
        for j in 0..n {
            if lattice.leq(i, j) != open(i).is_subset(open(j)) {
                return Some(format!("order not preserved at ideals {i}, {j}"));
            }
            if open(lattice.meet(i, j)) != (open(i) & open(j)) {
                return Some(format!("meet not preserved at ideals {i}, {j}"));
            }
            if open(lattice.join(i, j)) != (open(i) | open(j)) {
                return Some(format!("join not preserved at ideals {i}, {j}"));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn empty_space_is_sober() {
        let s = FiniteSpace::new(0, [BitSet::EMPTY]).unwrap();
        assert!(s.is_sober());
        let spec = spectrum(&MagmaTable::trivial()).unwrap();
        assert!(spec.points.is_empty());
        assert!(spec.is_sober());
        assert!(spec.isomorphism_violation.is_none());
    }

    #[test]
    fn indiscrete_two_points_not_sober() {
        let s = FiniteSpace::indiscrete(2);
        let (c, generic) = s.sobriety_violation().unwrap();
        assert_eq!(c, BitSet::full(2));
        assert_eq!(generic, vec![0, 1]);
    }

    #[test]
    fn sierpinski_is_sober() {
        let s =
            FiniteSpace::new(2, [BitSet::EMPTY, BitSet::singleton(0), BitSet::full(2)]).unwrap();
        assert!(s.is_sober());
    }

    #[test]
    fn bad_topologies_rejected() {
        assert!(FiniteSpace::new(2, [BitSet::full(2)]).is_err());
        assert!(FiniteSpace::new(
            3,
            [
                BitSet::EMPTY,
                BitSet::singleton(0),
                BitSet::singleton(1),
                BitSet::full(3)
            ]
        )
        .is_err());
    }

    #[test]
    fn two_element_spectrum() {
        let s = spectrum(&fixtures::two_element()).unwrap();
        assert_eq!(s.points, vec![BitSet::singleton(1)]);
        assert_eq!(s.space.opens(), &[BitSet::EMPTY, BitSet::singleton(0)]);
        assert!(s.is_sober());
    }

    #[test]
    fn table1_spectrum() {
        let m = fixtures::table1();
        let s = spectrum(&m).unwrap();
        assert!(s.isomorphism_violation.is_none());
        assert_eq!(s.open_set(BitSet::singleton(3)), BitSet::EMPTY);
        assert_eq!(s.open_set(m.carrier()), BitSet::full(s.points.len()));
        assert!(s.is_sober());
    }

    #[test]
    fn spectrum_requires_l() {
        assert_eq!(spectrum(&fixtures::table2()), Err(Error::NotL));
    }
}

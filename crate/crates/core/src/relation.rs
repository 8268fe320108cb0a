use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::magma::MagmaTable;
use crate::partition::Partition;

/// A set of ordered pairs over a carrier `{0..n}`, one bit row per element.
///
/// Relations on a product carrier use the flattened indices of
/// [`product`](crate::product).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairRelation {
    rows: Vec<BitSet>,
}

impl PairRelation {
    pub fn empty(n: usize) -> Self {
        PairRelation {
            rows: vec![BitSet::EMPTY; n],
        }
    }

    pub fn diagonal(n: usize) -> Self {
        PairRelation {
            rows: (0..n).map(BitSet::singleton).collect(),
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rel = Self::empty(n);
        for (a, b) in pairs {
            for e in [a, b] {
                if e >= n {
                    return Err(Error::ElementOutOfRange {
                        element: e,
                        size: n,
                    });
                }
            }
            rel.insert(a, b);
        }
        Ok(rel)
    }

    pub fn carrier_size(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.rows[a].insert(b);
    }

    /// Everything related to `a`.
    pub fn image(&self, a: usize) -> BitSet {
        self.rows[a]
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |b| (a, b)))
    }

    pub fn is_subset(&self, other: &PairRelation) -> bool {
        self.rows.len() == other.rows.len()
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(*b))
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(a, r)| r.contains(a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.rows
            .iter()
            .all(|&row| row.iter().all(|b| self.rows[b].is_subset(row)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(a, b)| a == b || !self.contains(b, a))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// `a R b` and `c R d` imply `a·c R b·d`.
    pub fn is_compatible(&self, m: &MagmaTable) -> bool {
        self.rows.len() == m.size()
            && self.pairs().all(|(a, b)| {
                self.pairs()
                    .all(|(c, d)| self.contains(m.op(a, c), m.op(b, d)))
            })
    }

    /// Composition applying `self` first: `{(a, c) : a self b, b then c}`.
    /// In the usual notation this is `then ∘ self`.
    pub fn then(&self, then: &PairRelation) -> Result<PairRelation> {
        compose(self, then)
    }

    /// The equivalence classes when this is an equivalence relation.
    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_equivalence() {
            return Err(Error::Precondition(
                "relation is not an equivalence".to_string(),
            ));
        }
        let n = self.rows.len();
        let mut labels = vec![usize::MAX; n];
        let mut next = 0;
        for a in 0..n {
            if labels[a] == usize::MAX {
                for b in self.rows[a].iter() {
                    labels[b] = next;
                }
                next += 1;
            }
        }
        Ok(Partition::from_labels(&labels))
    }
}

impl fmt::Debug for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// `S∘R = {(a, c) : ∃b, a R b and b S c}`: `r` is applied first.
pub fn compose(r: &PairRelation, s: &PairRelation) -> Result<PairRelation> {
    if r.rows.len() != s.rows.len() {
        return Err(Error::CarrierMismatch {
            left: r.rows.len(),
            right: s.rows.len(),
        });
    }
    let rows = r
        .rows
        .iter()
        .map(|row| row.iter().fold(BitSet::EMPTY, |acc, b| acc | s.rows[b]))
        .collect();
    Ok(PairRelation { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_relation(n: usize) -> impl Strategy<Value = PairRelation> {
        proptest::collection::vec(0u64..(1 << n), n).prop_map(|rows| PairRelation {
            rows: rows.into_iter().map(BitSet::from_bits).collect(),
        })
    }

    #[test]
    fn compose_order() {
        let r = PairRelation::from_pairs(3, [(0, 1)]).unwrap();
        let s = PairRelation::from_pairs(3, [(1, 2)]).unwrap();
        assert!(compose(&r, &s).unwrap().contains(0, 2));
        assert!(compose(&s, &r).unwrap().is_empty());
    }

    #[test]
    fn carrier_mismatch() {
        let r = PairRelation::diagonal(2);
        let s = PairRelation::diagonal(3);
        assert_eq!(
            compose(&r, &s),
            Err(Error::CarrierMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn out_of_range_pair() {
        assert!(PairRelation::from_pairs(2, [(0, 2)]).is_err());
    }

    proptest! {
        #[test]
        fn diagonal_is_identity(r in arb_relation(6)) {
            let d = PairRelation::diagonal(6);
            prop_assert_eq!(&compose(&r, &d).unwrap(), &r);
            prop_assert_eq!(&compose(&d, &r).unwrap(), &r);
        }

        #[test]
        fn composition_is_associative(
            a in arb_relation(5), b in arb_relation(5), c in arb_relation(5)
        ) {
            let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
            let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn composition_matches_definition(a in arb_relation(5), b in arb_relation(5)) {
            let c = compose(&a, &b).unwrap();
            for x in 0..5 {
                for z in 0..5 {
                    let expected = (0..5).any(|y| a.contains(x, y) && b.contains(y, z));
                    prop_assert_eq!(c.contains(x, z), expected);
                }
            }
        }
    }
}

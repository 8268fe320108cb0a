use serde::Serialize;

use crate::bitset::BitSet;
use crate::magma::MagmaTable;
use crate::relation::PairRelation;

/// An equivalence relation on `{0..n}` as class labels.
///
/// Labels are normalized by first occurrence (element 0 is in class 0, the
/// next new class is 1, ...), so equal partitions have equal label arrays.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Normalizes arbitrary labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let labels = labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Partition { labels }
    }

    pub fn diagonal(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    pub fn from_classes(n: usize, classes: &[BitSet]) -> Self {
        let mut labels = vec![usize::MAX; n];
        for (k, c) in classes.iter().enumerate() {
            for e in c.iter() {
                labels[e] = k;
            }
        }
        // elements not mentioned become singletons
        for (next, l) in (classes.len()..).zip(labels.iter_mut().filter(|l| **l == usize::MAX)) {
            *l = next;
        }
        Self::from_labels(&labels)
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn carrier_size(&self) -> usize {
        self.labels.len()
    }

    pub fn num_classes(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn class_of(&self, x: usize) -> BitSet {
        let l = self.labels[x];
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k == l)
            .map(|(i, _)| i)
            .collect()
    }

    /// Classes indexed by label.
    pub fn classes(&self) -> Vec<BitSet> {
        let mut out = vec![BitSet::EMPTY; self.num_classes()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l].insert(i);
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.num_classes() == self.labels.len()
    }

    /// Containment as relations: every class of `self` lies in a class of
    /// `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.labels.len() == other.labels.len()
            && self.classes().iter().all(|c| {
                let first = c.iter().next().expect("classes are nonempty");
                c.iter().all(|e| other.same_class(first, e))
            })
    }

    /// Intersection of the two relations.
    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.labels.len();
        let pairs: Vec<usize> = (0..n)
            .map(|i| self.labels[i] * n + other.labels[i])
            .collect();
        Partition::from_labels(&pairs)
    }

    /// Equivalence relation generated by the union (transitive closure).
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for part in [self, other] {
            for c in part.classes() {
                let mut it = c.iter();
                let first = it.next().expect("classes are nonempty");
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    parent[a] = b;
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Partition::from_labels(&roots)
    }

    pub fn to_relation(&self) -> PairRelation {
        let classes = self.classes();
        let n = self.labels.len();
        let mut rel = PairRelation::empty(n);
        for a in 0..n {
            for b in classes[self.labels[a]].iter() {
                rel.insert(a, b);
            }
        }
        rel
    }

    /// Compatibility with the operation of `m`.
    pub fn is_congruence(&self, m: &MagmaTable) -> bool {
        let n = m.size();
        if self.labels.len() != n {
            return false;
        }
        // single-sided substitution suffices by transitivity
        for a in 0..n {
            for b in a + 1..n {
                if !self.same_class(a, b) {
                    continue;
                }
                for y in 0..n {
                    if !self.same_class(m.op(a, y), m.op(b, y))
                        || !self.same_class(m.op(y, a), m.op(y, b))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Every partition of `{0..n}` in canonical label form, as restricted
/// growth strings in lexicographic order.
pub fn all_partitions(n: usize) -> impl Iterator<Item = Partition> {
    let mut labels = vec![0usize; n];
    let mut max = vec![0usize; n];
    let mut done = n == 0;
    let mut first = true;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        if first {
            first = false;
            return Some(Partition {
                labels: labels.clone(),
            });
        }
        // advance the rightmost position that can still grow
        let mut i = n - 1;
        loop {
            if i == 0 {
                done = true;
                return None;
            }
            let bound = max[i - 1] + 1;
            if labels[i] < bound {
                labels[i] += 1;
                max[i] = max[i - 1].max(labels[i]);
                for j in i + 1..n {
                    labels[j] = 0;
                    max[j] = max[i];
                }
                return Some(Partition {
                    labels: labels.clone(),
                });
            }
            i -= 1;
        }
    })
}

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::magma::MagmaTable;
use crate::partition::Partition;
use crate::relation::PairRelation;

/// A total map between the carriers of two tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementMap {
    domain: MagmaTable,
    codomain: MagmaTable,
    images: Vec<usize>,
}

impl ElementMap {
    pub fn new(domain: MagmaTable, codomain: MagmaTable, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.size() {
            return Err(Error::CarrierMismatch {
                left: images.len(),
                right: domain.size(),
            });
        }
        if let Some(&bad) = images.iter().find(|&&v| v >= codomain.size()) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                size: codomain.size(),
            });
        }
        Ok(ElementMap {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(m: &MagmaTable) -> Self {
        ElementMap {
            domain: m.clone(),
            codomain: m.clone(),
            images: m.elements().collect(),
        }
    }

    pub fn domain(&self) -> &MagmaTable {
        &self.domain
    }

    pub fn codomain(&self) -> &MagmaTable {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// First pair `(a, b)` in row-major order with `f(a·b) ≠ f(a)·f(b)`.
    pub fn morphism_violation(&self) -> Option<(usize, usize)> {
        let (d, c) = (&self.domain, &self.codomain);
        for a in d.elements() {
            for b in d.elements() {
                if self.images[d.op(a, b)] != c.op(self.images[a], self.images[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Preservation of the operation only; the unit follows from
    /// `f(1) = f(1·1) = f(1)·f(1) = 1` in pre-L-algebras.
    pub fn is_morphism(&self) -> bool {
        self.morphism_violation().is_none()
    }

    pub fn image(&self) -> BitSet {
        self.images.iter().copied().collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.codomain.carrier()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.images.len()
    }

    /// `f⁻¹(1)`.
    pub fn kernel(&self) -> BitSet {
        let unit = self.codomain.unit();
        self.images
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == unit)
            .map(|(i, _)| i)
            .collect()
    }

    /// `Eq(f) = {(a, a') : f(a) = f(a')}`.
    pub fn kernel_pair(&self) -> PairRelation {
        let n = self.domain.size();
        let mut rel = PairRelation::empty(n);
        for a in 0..n {
            for b in 0..n {
                if self.images[a] == self.images[b] {
                    rel.insert(a, b);
                }
            }
        }
        rel
    }

    pub fn kernel_partition(&self) -> Partition {
        Partition::from_labels(&self.images)
    }
}

/// Free-function form of [`ElementMap::kernel_pair`].
pub fn kernel_pair(f: &ElementMap) -> PairRelation {
    f.kernel_pair()
}

/// Every morphism `domain → codomain`, by exhaustive search over all maps
/// with pruning on already-assigned pairs.
pub fn all_morphisms(domain: &MagmaTable, codomain: &MagmaTable) -> Vec<ElementMap> {
    let n = domain.size();
    let mut out = Vec::new();
    let mut images = vec![0usize; n];
    fn consistent(d: &MagmaTable, c: &MagmaTable, images: &[usize], upto: usize) -> bool {
        // every product among the first `upto + 1` elements whose result is
        // also assigned must be preserved
        let k = upto;
        for a in 0..=k {
            for (x, y) in [(a, k), (k, a)] {
                let xy = d.op(x, y);
                if xy <= k && images[xy] != c.op(images[x], images[y]) {
                    return false;
                }
            }
        }
        true
    }
    fn rec(
        d: &MagmaTable,
        c: &MagmaTable,
        i: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<ElementMap>,
    ) {
        if i == d.size() {
            let f = ElementMap {
                domain: d.clone(),
                codomain: c.clone(),
                images: images.clone(),
            };
            if f.is_morphism() {
                out.push(f);
            }
            return;
        }
        for v in c.elements() {
            images[i] = v;
            if consistent(d, c, images, i) {
                rec(d, c, i + 1, images, out);
            }
        }
    }
    rec(domain, codomain, 0, &mut images, &mut out);
    out
}

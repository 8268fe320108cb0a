//! Finite magmas with a designated unit, and the pre-L / L axiom checks.

use serde::{Deserialize, Serialize};

use crate::bitset::{BitSet, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::relation::PairRelation;

/// A finite set `{0..n}` with a binary operation table and a unit index.
///
/// Entry `(a, b)` of the table is `a·b`. Construction validates the table,
/// so every value of this type is structurally well-formed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MagmaTable {
    size: usize,
    unit: usize,
    cells: Vec<usize>,
}

impl MagmaTable {
    pub fn new(unit: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if size > MAX_CARRIER {
            return Err(Error::Capacity {
                what: "carrier size",
                requested: size,
                limit: MAX_CARRIER,
                hint: "",
            });
        }
        let mut cells = Vec::with_capacity(size * size);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != size {
                return Err(Error::RowLength {
                    row,
                    len: entries.len(),
                    size,
                });
            }
            cells.extend(entries);
        }
        Self::from_cells(size, unit, cells)
    }

    /// Builds a table from a row-major flat array.
    pub fn from_cells(size: usize, unit: usize, cells: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if size > MAX_CARRIER {
            return Err(Error::Capacity {
                what: "carrier size",
                requested: size,
                limit: MAX_CARRIER,
                hint: "",
            });
        }
        if cells.len() != size * size {
            return Err(Error::RowCount {
                size,
                rows: cells.len() / size,
            });
        }
        if unit >= size {
            return Err(Error::UnitOutOfRange { unit, size });
        }
        if let Some(pos) = cells.iter().position(|&v| v >= size) {
            return Err(Error::EntryOutOfRange {
                row: pos / size,
                col: pos % size,
                value: cells[pos],
                size,
            });
        }
        Ok(MagmaTable { size, unit, cells })
    }

    pub fn from_fn(size: usize, unit: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let cells = (0..size * size).map(|i| op(i / size, i % size)).collect();
        Self::from_cells(size, unit, cells)
    }

    /// The one-element algebra `{1}`.
    pub fn trivial() -> Self {
        MagmaTable {
            size: 1,
            unit: 0,
            cells: vec![0],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// `a·b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.size + b]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn carrier(&self) -> BitSet {
        BitSet::full(self.size)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Relabels along the bijection `perm` (old index → new index).
    pub fn relabel(&self, perm: &[usize]) -> MagmaTable {
        let n = self.size;
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        MagmaTable {
            size: n,
            unit: perm[self.unit],
            cells,
        }
    }
}

impl std::fmt::Debug for MagmaTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MagmaTable")
            .field("unit", &self.unit)
            .field("rows", &self.rows())
            .finish()
    }
}

/// Which axioms an algebra is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "pre-l")]
    PreL,
    #[serde(rename = "l")]
    L,
}

impl Kind {
    /// Whether the axiom report satisfies this kind.
    pub fn admits(self, report: &AxiomReport) -> bool {
        match self {
            Kind::PreL => report.is_pre_l(),
            Kind::L => report.is_l(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::PreL => "pre-l",
            Kind::L => "l",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "pre-l" | "prel" | "pre_l" => Ok(Kind::PreL),
            "l" => Ok(Kind::L),
            other => Err(format!("unknown kind {other:?} (expected pre-l or l)")),
        }
    }
}

/// Which defining law a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `x·x = x·1 = 1` and `1·x = x`.
    Unital,
    /// `(x·y)·(x·z) = (y·x)·(y·z)`.
    Cycloid,
    /// `x·y = y·x = 1` implies `x = y`.
    Antisymmetric,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Unital => "unital",
            Axiom::Cycloid => "cycloid",
            Axiom::Antisymmetric => "antisymmetric",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Outcome of [`check_axioms`]. A flag is false exactly when the violation
/// list holds an entry for that axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub unital: bool,
    pub cycloid: bool,
    pub antisymmetric: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_pre_l(&self) -> bool {
        self.unital && self.cycloid
    }

    pub fn is_l(&self) -> bool {
        self.unital && self.cycloid && self.antisymmetric
    }

    pub fn witnesses(&self, axiom: Axiom) -> impl Iterator<Item = &[usize]> {
        self.violations
            .iter()
            .filter(move |v| v.axiom == axiom)
            .map(|v| v.witness.as_slice())
    }
}

/// Reported violations are capped per axiom.
pub const MAX_WITNESSES_PER_AXIOM: usize = 32;

/// Exhaustive check of the three defining laws. Every violation is counted,
/// but at most [`MAX_WITNESSES_PER_AXIOM`] witnesses are kept per law.
pub fn check_axioms(m: &MagmaTable) -> AxiomReport {
    let n = m.size;
    let u = m.unit;
    let mut violations = Vec::new();
    let mut push = |axiom, witness: Vec<usize>, count: &mut usize| {
        if *count < MAX_WITNESSES_PER_AXIOM {
            violations.push(Violation { axiom, witness });
        }
        *count += 1;
    };

    let mut unital = 0;
    for x in 0..n {
        if m.op(x, x) != u || m.op(x, u) != u || m.op(u, x) != x {
            push(Axiom::Unital, vec![x], &mut unital);
        }
    }

    let mut cycloid = 0;
    for x in 0..n {
        for y in 0..n {
            let xy = m.op(x, y);
            let yx = m.op(y, x);
            for z in 0..n {
                if m.op(xy, m.op(x, z)) != m.op(yx, m.op(y, z)) {
                    push(Axiom::Cycloid, vec![x, y, z], &mut cycloid);
                }
            }
        }
    }

    let mut antisym = 0;
    for x in 0..n {
        for y in x + 1..n {
            if m.op(x, y) == u && m.op(y, x) == u {
                push(Axiom::Antisymmetric, vec![x, y], &mut antisym);
            }
        }
    }

    AxiomReport {
        unital: unital == 0,
        cycloid: cycloid == 0,
        antisymmetric: antisym == 0,
        violations,
    }
}

pub fn is_pre_l(m: &MagmaTable) -> bool {
    check_axioms(m).is_pre_l()
}

pub fn is_l(m: &MagmaTable) -> bool {
    check_axioms(m).is_l()
}

pub(crate) fn require_pre_l(m: &MagmaTable) -> Result<()> {
    let report = check_axioms(m);
    if !report.unital {
        Err(Error::NotPreL("unital law"))
    } else if !report.cycloid {
        Err(Error::NotPreL("cycloid law"))
    } else {
        Ok(())
    }
}

pub(crate) fn require_l(m: &MagmaTable) -> Result<()> {
    require_pre_l(m)?;
    if check_axioms(m).antisymmetric {
        Ok(())
    } else {
        Err(Error::NotL)
    }
}

/// `{(x, y) : x·y = 1}`, the natural preorder of a pre-L-algebra.
pub fn natural_preorder(m: &MagmaTable) -> Result<PairRelation> {
    require_pre_l(m)?;
    let mut rel = PairRelation::empty(m.size);
    for x in m.elements() {
        for y in m.elements() {
            if m.op(x, y) == m.unit {
                rel.insert(x, y);
            }
        }
    }
    Ok(rel)
}

/// Componentwise product. The pair `(a, b)` is element `a·|right| + b`.
pub fn product(left: &MagmaTable, right: &MagmaTable) -> Result<MagmaTable> {
    let (p, q) = (left.size, right.size);
    let size = p * q;
    if size > MAX_CARRIER {
        return Err(Error::Capacity {
            what: "product carrier",
            requested: size,
            limit: MAX_CARRIER,
            hint: "",
        });
    }
    MagmaTable::from_fn(size, left.unit * q + right.unit, |s, t| {
        let (a, b) = (s / q, s % q);
        let (c, d) = (t / q, t % q);
        left.op(a, c) * q + right.op(b, d)
    })
}

/// True iff `s` contains the unit and is closed under the operation.
pub fn is_subalgebra(m: &MagmaTable, s: BitSet) -> bool {
    s.contains(m.unit)
        && s.is_subset(m.carrier())
        && s.iter().all(|a| s.iter().all(|b| s.contains(m.op(a, b))))
}

/// Extracts a subalgebra as a standalone table. Element `k` of the result is
/// the `k`-th smallest member of `s`; the embedding is returned alongside.
pub fn subalgebra(m: &MagmaTable, s: BitSet) -> Result<(MagmaTable, Vec<usize>)> {
    if !is_subalgebra(m, s) {
        return Err(Error::Precondition(format!(
            "{:?} is not a subalgebra",
            s.to_vec()
        )));
    }
    let embedding = s.to_vec();
    let mut index = vec![usize::MAX; m.size];
    for (k, &e) in embedding.iter().enumerate() {
        index[e] = k;
    }
    let table = MagmaTable::from_fn(embedding.len(), index[m.unit], |i, j| {
        index[m.op(embedding[i], embedding[j])]
    })?;
    Ok((table, embedding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn table1_is_l_algebra() {
        let r = check_axioms(&fixtures::table1());
        assert!(r.is_l(), "{r:?}");
        assert!(r.violations.is_empty());
    }

    #[test]
    fn table2_fails_antisymmetry_at_a_b() {
        let r = check_axioms(&fixtures::table2());
        assert!(r.unital && r.cycloid && !r.antisymmetric);
        let w: Vec<_> = r.witnesses(Axiom::Antisymmetric).collect();
        assert_eq!(w, vec![&[0usize, 1][..]]);
    }

    #[test]
    fn trivial_algebra_passes() {
        assert!(check_axioms(&MagmaTable::trivial()).is_l());
    }

    #[test]
    fn structural_errors_are_not_axiom_failures() {
        assert_eq!(
            MagmaTable::new(0, vec![vec![0, 2], vec![0, 0]]),
            Err(Error::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                size: 2
            })
        );
        assert_eq!(
            MagmaTable::new(2, vec![vec![0, 0], vec![0, 0]]),
            Err(Error::UnitOutOfRange { unit: 2, size: 2 })
        );
        assert!(matches!(
            MagmaTable::new(0, vec![vec![0], vec![0, 0]]),
            Err(Error::RowLength { row: 0, .. })
        ));
        assert_eq!(MagmaTable::new(0, vec![]), Err(Error::EmptyCarrier));
    }

    #[test]
    fn violation_lists_are_capped() {
        // constant-0 table on 8 elements with unit 7: every triple is fine for
        // cycloid, but unital fails everywhere and antisymmetry never triggers
        let m = MagmaTable::from_fn(8, 7, |_, _| 0).unwrap();
        let r = check_axioms(&m);
        assert!(!r.unital);
        assert_eq!(r.witnesses(Axiom::Unital).count(), 8);
        // a table where the cycloid law fails on many triples
        let m = MagmaTable::from_fn(8, 0, |a, b| (a + 2 * b) % 8).unwrap();
        let r = check_axioms(&m);
        assert!(!r.cycloid);
        assert_eq!(r.witnesses(Axiom::Cycloid).count(), MAX_WITNESSES_PER_AXIOM);
    }

    #[test]
    fn table1_preorder() {
        let m = fixtures::table1();
        let le = natural_preorder(&m).unwrap();
        let (x, y, z, one) = (0, 1, 2, 3);
        assert!(le.contains(y, x) && le.contains(z, x));
        for w in 0..4 {
            assert!(le.contains(w, one));
            assert!(le.contains(w, w));
        }
        // exactly the unit entries of Table 1
        assert_eq!(le.len(), 4 + 3 + 2);
        assert!(le.is_antisymmetric());
    }

    #[test]
    fn table2_preorder_not_antisymmetric() {
        let le = natural_preorder(&fixtures::table2()).unwrap();
        assert!(le.contains(0, 1) && le.contains(1, 0));
        assert!(!le.is_antisymmetric());
    }

    #[test]
    fn preorder_rejects_non_pre_l() {
        let m = MagmaTable::from_fn(2, 0, |_, _| 1).unwrap();
        assert!(matches!(natural_preorder(&m), Err(Error::NotPreL(_))));
    }

    #[test]
    fn products() {
        let x = fixtures::two_element();
        let xx = product(&x, &x).unwrap();
        assert_eq!(xx.size(), 4);
        assert_eq!(xx.unit(), 3);
        assert!(is_l(&xx));

        let t1 = fixtures::table1();
        let big = product(&t1, &t1).unwrap();
        assert_eq!(big.size(), 16);
        assert!(check_axioms(&big).is_l());

        let same = product(&t1, &MagmaTable::trivial()).unwrap();
        assert_eq!(same, t1);

        let t2 = fixtures::table2();
        let r = check_axioms(&product(&t2, &t1).unwrap());
        assert!(r.is_pre_l() && !r.antisymmetric);
    }

    #[test]
    fn product_capacity() {
        let m = MagmaTable::from_fn(9, 8, |a, b| if a == b { 8 } else { b }).unwrap();
        assert!(matches!(product(&m, &m), Err(Error::Capacity { .. })));
    }

    #[test]
    fn subalgebras_of_square() {
        let x = fixtures::two_element();
        let xx = product(&x, &x).unwrap();
        let r: BitSet = [1, 2, 3].into_iter().collect();
        assert!(is_subalgebra(&xx, r));
        assert!(is_subalgebra(&xx, BitSet::singleton(3)));
        assert!(!is_subalgebra(&x, BitSet::singleton(0)));
        let (sub, emb) = subalgebra(&xx, r).unwrap();
        assert_eq!(emb, vec![1, 2, 3]);
        assert!(is_l(&sub));
    }
}

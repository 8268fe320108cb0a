//! Explicit finite lattices: ideal lattices, congruence lattices and raw
//! fixtures such as `M₃`.

use crate::bitset::BitSet;
use crate::congruence::all_congruences;
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, closure_unchecked};
use crate::magma::MagmaTable;
use crate::partition::Partition;

/// A finite lattice with precomputed order, meet and join tables over
/// element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice<T> {
    elements: Vec<T>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

/// A triple `(a, b, c)` with `a∧(b∨c) ≠ (a∧b)∨(a∧c)`.
pub type DistributivityViolation = (usize, usize, usize);

impl<T> FiniteLattice<T> {
    /// Builds the lattice from a partial order, computing meets and joins as
    /// greatest lower / least upper bounds. Fails if some pair lacks one.
    pub fn from_order(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Precondition(
                "a lattice has at least one element".into(),
            ));
        }
        let leq: Vec<Vec<bool>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| leq(a, b)).collect())
            .collect();
        check_partial_order(&leq)?;
        let bound = |i: usize, j: usize, lower: bool| -> Result<usize> {
            let cands: Vec<usize> = (0..n)
                .filter(|&k| {
                    if lower {
                        leq[k][i] && leq[k][j]
                    } else {
                        leq[i][k] && leq[j][k]
                    }
                })
                .collect();
            cands
                .iter()
                .copied()
                .find(|&k| {
                    cands
                        .iter()
                        .all(|&o| if lower { leq[o][k] } else { leq[k][o] })
                })
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "elements {i} and {j} have no {}",
                        if lower { "meet" } else { "join" }
                    ))
                })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = bound(i, j, true)?;
                join[i][j] = bound(i, j, false)?;
            }
        }
        Ok(FiniteLattice {
            elements,
            leq,
            meet,
            join,
        })
    }

    /// Builds the lattice from explicit operations, then checks the lattice
    /// laws against the given order.
    pub fn from_operations(
        elements: Vec<T>,
        leq: impl Fn(&T, &T) -> bool,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = elements.len();
        let leq: Vec<Vec<bool>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| leq(a, b)).collect())
            .collect();
        let meet: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| meet(i, j)).collect())
            .collect();
        let join: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| join(i, j)).collect())
            .collect();
        let lattice = FiniteLattice {
            elements,
            leq,
            meet,
            join,
        };
        lattice.validate()?;
        Ok(lattice)
    }

    /// Partial order, lattice identities, and agreement of the operations
    /// with the order.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Precondition(
                "a lattice has at least one element".into(),
            ));
        }
        check_partial_order(&self.leq)?;
        let fail = |what: &str, i: usize, j: usize| {
            Err(Error::Precondition(format!("{what} fails at ({i}, {j})")))
        };
        for i in 0..n {
            if self.meet[i][i] != i || self.join[i][i] != i {
                return fail("idempotence", i, i);
            }
            for j in 0..n {
                let (m, jn) = (self.meet[i][j], self.join[i][j]);
                if m >= n || jn >= n {
                    return fail("range", i, j);
                }
                if m != self.meet[j][i] || jn != self.join[j][i] {
                    return fail("commutativity", i, j);
                }
                if self.meet[i][jn] != i || self.join[i][m] != i {
                    return fail("absorption", i, j);
                }
                if self.leq[i][j] != (m == i) {
                    return fail("order/meet agreement", i, j);
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn bottom(&self) -> usize {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
            .expect("finite lattices have a bottom")
    }

    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq[j][i]))
            .expect("finite lattices have a top")
    }

    /// `i` is covered by `j`: `i < j` with nothing strictly between.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j
            && self.leq[i][j]
            && !(0..self.len()).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j])
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.covers(i, j))
            .collect()
    }

    pub fn distributivity_violation(&self) -> Option<DistributivityViolation> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.meet[a][self.join[b][c]];
                    let right = self.join[self.meet[a][b]][self.meet[a][c]];
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_violation().is_none()
    }

    /// Proper, finitely meet-irreducible elements: `p ≠ top`, and
    /// `p = a∧b` forces `p = a` or `p = b`.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        let n = self.len();
        let top = self.top();
        (0..n)
            .filter(|&p| {
                p != top && (0..n).all(|a| (0..n).all(|b| self.meet[a][b] != p || a == p || b == p))
            })
            .collect()
    }

    /// Index of the element equal to `x`, if present.
    pub fn position(&self, x: &T) -> Option<usize>
    where
        T: PartialEq,
    {
        self.elements.iter().position(|e| e == x)
    }
}

impl FiniteLattice<String> {
    /// The diamond `M₃`: bottom, three atoms, top. Not distributive.
    pub fn m3() -> Self {
        let names = ["0", "a", "b", "c", "1"];
        FiniteLattice::from_order(names.iter().map(|s| s.to_string()).collect(), |x, y| {
            x == y || x == "0" || y == "1"
        })
        .expect("M3 is a lattice")
    }

    /// The pentagon `N₅`: `0 < a < b < 1`, `0 < c < 1`. Not distributive.
    pub fn n5() -> Self {
        let names = ["0", "a", "b", "c", "1"];
        let below = |x: &str, y: &str| x == y || x == "0" || y == "1" || (x == "a" && y == "b");
        FiniteLattice::from_order(names.iter().map(|s| s.to_string()).collect(), |x, y| {
            below(x, y)
        })
        .expect("N5 is a lattice")
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        FiniteLattice::from_order((0..n).map(|i| i.to_string()).collect(), |x, y| {
            x.parse::<usize>().unwrap() <= y.parse::<usize>().unwrap()
        })
        .expect("chains are lattices")
    }
}

fn check_partial_order(leq: &[Vec<bool>]) -> Result<()> {
    let n = leq.len();
    for i in 0..n {
        if !leq[i][i] {
            return Err(Error::Precondition(format!("order not reflexive at {i}")));
        }
        for j in 0..n {
            if i != j && leq[i][j] && leq[j][i] {
                return Err(Error::Precondition(format!(
                    "order not antisymmetric at ({i}, {j})"
                )));
            }
            for k in 0..n {
                if leq[i][j] && leq[j][k] && !leq[i][k] {
                    return Err(Error::Precondition(format!(
                        "order not transitive at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `I(X)` ordered by inclusion; meet is intersection, join is the closure of
/// the union.
pub fn ideal_lattice(m: &MagmaTable) -> Result<FiniteLattice<BitSet>> {
    let ideals = all_ideals(m)?;
    let index = |s: BitSet| {
        ideals
            .iter()
            .position(|&i| i == s)
            .expect("ideals are closed under meet and join")
    };
    let meet: Vec<Vec<usize>> = ideals
        .iter()
        .map(|&a| ideals.iter().map(|&b| index(a & b)).collect())
        .collect();
    let join: Vec<Vec<usize>> = ideals
        .iter()
        .map(|&a| {
            ideals
                .iter()
                .map(|&b| index(closure_unchecked(m, a | b)))
                .collect()
        })
        .collect();
    FiniteLattice::from_operations(
        ideals.clone(),
        |a, b| a.is_subset(*b),
        |i, j| meet[i][j],
        |i, j| join[i][j],
    )
}

/// `C(X)` ordered by refinement; meet is intersection, join the generated
/// equivalence.
pub fn congruence_lattice(m: &MagmaTable) -> Result<FiniteLattice<Partition>> {
    let congs = all_congruences(m)?;
    let index = |p: &Partition| {
        congs
            .iter()
            .position(|c| c == p)
            .expect("congruences are closed under meet and join")
    };
    let meet: Vec<Vec<usize>> = congs
        .iter()
        .map(|a| congs.iter().map(|b| index(&a.meet(b))).collect())
        .collect();
    let join: Vec<Vec<usize>> = congs
        .iter()
        .map(|a| congs.iter().map(|b| index(&a.join(b))).collect())
        .collect();
    FiniteLattice::from_operations(
        congs.clone(),
        |a, b| a.refines(b),
        |i, j| meet[i][j],
        |i, j| join[i][j],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chains_are_distributive() {
        for n in 1..6 {
            assert!(FiniteLattice::chain(n).is_distributive());
        }
    }

    #[test]
    fn m3_and_n5_are_not() {
        let m3 = FiniteLattice::m3();
        m3.validate().unwrap();
        let (a, b, c) = m3.distributivity_violation().unwrap();
        assert_ne!(
            m3.meet(a, m3.join(b, c)),
            m3.join(m3.meet(a, b), m3.meet(a, c))
        );
        assert!(!FiniteLattice::n5().is_distributive());
    }

    #[test]
    fn from_order_rejects_non_lattices() {
        // two incomparable maximal elements: no join
        let r = FiniteLattice::from_order(vec![0, 1, 2], |a: &i32, b: &i32| a == b || *a == 0);
        assert!(r.is_err());
    }

    #[test]
    fn ideal_lattices() {
        let l = ideal_lattice(&MagmaTable::trivial()).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.meet_irreducibles(), Vec::<usize>::new());

        let l = ideal_lattice(&fixtures::two_element()).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.cover_pairs(), vec![(0, 1)]);
        assert_eq!(l.meet_irreducibles(), vec![0]);

        let l = ideal_lattice(&fixtures::table1()).unwrap();
        assert!(l.is_distributive());
        assert_eq!(*l.element(l.bottom()), BitSet::singleton(3));
        assert_eq!(*l.element(l.top()), BitSet::full(4));
    }

    #[test]
    fn congruence_lattice_table1() {
        let l = congruence_lattice(&fixtures::table1()).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(*l.element(l.bottom()), Partition::diagonal(4));
        assert_eq!(*l.element(l.top()), Partition::total(4));
        assert!(l.is_distributive());
    }

    #[test]
    fn meet_irreducible_iff_single_upper_cover() {
        for l in [
            FiniteLattice::m3(),
            FiniteLattice::n5(),
            FiniteLattice::chain(4),
        ] {
            let by_cover: Vec<usize> = (0..l.len())
                .filter(|&p| (0..l.len()).filter(|&q| l.covers(p, q)).count() == 1)
                .collect();
            assert_eq!(l.meet_irreducibles(), by_cover);
        }
    }
}

//! Brute-force reference implementations, written against nothing but the
//! raw operation table.

#![allow(dead_code)]

use lalg_core::MagmaTable;

pub type Table = (usize, Vec<Vec<usize>>);

pub fn raw(m: &MagmaTable) -> Table {
    (m.unit(), m.rows())
}

pub fn unital(t: &Table) -> bool {
    let (u, rows) = t;
    (0..rows.len()).all(|x| rows[x][x] == *u && rows[x][*u] == *u && rows[*u][x] == x)
}

pub fn cycloid(t: &Table) -> bool {
    let rows = &t.1;
    let n = rows.len();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| rows[rows[x][y]][rows[x][z]] == rows[rows[y][x]][rows[y][z]]))
    })
}

pub fn antisymmetric(t: &Table) -> bool {
    let (u, rows) = t;
    let n = rows.len();
    (0..n).all(|x| (0..n).all(|y| x == y || rows[x][y] != *u || rows[y][x] != *u))
}

pub fn pre_l(t: &Table) -> bool {
    unital(t) && cycloid(t)
}

pub fn l(t: &Table) -> bool {
    pre_l(t) && antisymmetric(t)
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Table transported along `p: old -> new`.
pub fn transport(t: &Table, p: &[usize]) -> Table {
    let (u, rows) = t;
    let n = rows.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[p[x]][p[y]] = p[rows[x][y]];
        }
    }
    (p[*u], out)
}

/// Least transported copy over all `n!` bijections.
pub fn canon(t: &Table) -> Table {
    permutations(t.1.len())
        .iter()
        .map(|p| transport(t, p))
        .min()
        .expect("at least one permutation")
}

pub fn isomorphic(a: &Table, b: &Table) -> bool {
    a.1.len() == b.1.len()
        && permutations(a.1.len())
            .iter()
            .any(|p| transport(a, p) == *b)
}

/// All tables on `n` elements with every possible unit, filtered by `keep`,
/// reduced to isomorphism classes.
pub fn classes(n: usize, keep: impl Fn(&Table) -> bool) -> Vec<Table> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut found = std::collections::BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let mut rows = vec![vec![0; n]; n];
        for k in 0..cells {
            rows[k / n][k % n] = c % n;
            c /= n;
        }
        for u in 0..n {
            let t = (u, rows.clone());
            if keep(&t) {
                found.insert(canon(&t));
            }
        }
    }
    found.into_iter().collect()
}

/// Every partition of `0..n` as a normalized label vector.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 0 } else { max + 1 };
        for v in 0..=limit {
            cur.push(v);
            go(n, cur, max.max(v), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

pub fn compatible(t: &Table, labels: &[usize]) -> bool {
    let rows = &t.1;
    let n = rows.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            labels[a] != labels[b]
                || (0..n).all(|c| {
                    labels[rows[a][c]] == labels[rows[b][c]]
                        && labels[rows[c][a]] == labels[rows[c][b]]
                })
        })
    })
}

pub fn congruences(t: &Table) -> Vec<Vec<usize>> {
    partitions(t.1.len())
        .into_iter()
        .filter(|p| compatible(t, p))
        .collect()
}

pub fn normalize(labels: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    labels
        .iter()
        .map(|l| {
            let next = map.len();
            *map.entry(*l).or_insert(next)
        })
        .collect()
}

/// `a ⊆ b` as equivalence relations.
pub fn finer(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|x| (0..a.len()).all(|y| a[x] != a[y] || b[x] == b[y]))
}

pub fn meet(a: &[usize], b: &[usize]) -> Vec<usize> {
    let n = a.len();
    normalize(&(0..n).map(|x| a[x] * n + b[x]).collect::<Vec<_>>())
}

/// The quotient table, class `k` being label `k`.
pub fn quotient(t: &Table, labels: &[usize]) -> Table {
    let (u, rows) = t;
    let k = labels.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![vec![0; k]; k];
    for a in 0..rows.len() {
        for b in 0..rows.len() {
            out[labels[a]][labels[b]] = labels[rows[a][b]];
        }
    }
    (labels[*u], out)
}

pub fn subset(bits: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| bits >> i & 1 == 1).collect()
}

pub fn is_ideal(t: &Table, bits: u64) -> bool {
    let (u, rows) = t;
    let n = rows.len();
    let has = |x: usize| bits >> x & 1 == 1;
    has(*u)
        && (0..n).filter(|&x| has(x)).all(|x| {
            (0..n).all(|y| {
                let xy = rows[x][y];
                (!has(xy) || has(y)) && has(rows[xy][y]) && has(rows[y][x]) && has(rows[y][xy])
            })
        })
}

pub fn ideals(t: &Table) -> Vec<u64> {
    let n = t.1.len();
    (0u64..1 << n).filter(|&b| is_ideal(t, b)).collect()
}

/// Least ideal over `bits`, as the intersection of all ideals over it.
pub fn closure(t: &Table, bits: u64) -> u64 {
    ideals(t)
        .into_iter()
        .filter(|&i| bits & !i == 0)
        .fold((1u64 << t.1.len()) - 1, |acc, i| acc & i)
}

/// Class of the unit.
pub fn phi(t: &Table, labels: &[usize]) -> u64 {
    let u = t.0;
    (0..labels.len())
        .filter(|&x| labels[x] == labels[u])
        .fold(0, |acc, x| acc | 1 << x)
}

/// `x ∼ y` iff `x·y` and `y·x` lie in `bits`.
pub fn psi(t: &Table, bits: u64) -> Vec<usize> {
    let rows = &t.1;
    let n = rows.len();
    let rel = |x: usize, y: usize| bits >> rows[x][y] & 1 == 1 && bits >> rows[y][x] & 1 == 1;
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if labels[x] == usize::MAX {
            for y in x..n {
                if labels[y] == usize::MAX && rel(x, y) {
                    labels[y] = next;
                }
            }
            next += 1;
        }
    }
    labels
}

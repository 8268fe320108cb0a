//! Small worked examples, shipped as JSON documents.

use crate::bitset::BitSet;
use crate::document::{parse_document, AlgebraDocument};
use crate::magma::{product, subalgebra, MagmaTable};
use crate::morphism::ElementMap;
use crate::relation::PairRelation;

pub const TABLE1_JSON: &str = include_str!("../fixtures/table1.json");
pub const TABLE2_JSON: &str = include_str!("../fixtures/table2.json");
pub const TWO_ELEMENT_JSON: &str = include_str!("../fixtures/two_element.json");

/// File names of the shipped fixtures, in suite order.
pub const FIXTURE_FILES: [&str; 3] = ["table1.json", "table2.json", "two_element.json"];

pub fn table1_document() -> AlgebraDocument {
    parse_document(TABLE1_JSON.as_bytes()).expect("shipped fixture is valid")
}

pub fn table2_document() -> AlgebraDocument {
    parse_document(TABLE2_JSON.as_bytes()).expect("shipped fixture is valid")
}

pub fn two_element_document() -> AlgebraDocument {
    parse_document(TWO_ELEMENT_JSON.as_bytes()).expect("shipped fixture is valid")
}

/// `{x, y, z, 1}` with `x=0, y=1, z=2, 1=3`.
pub fn table1() -> MagmaTable {
    table1_document()
        .to_table()
        .expect("shipped fixture is valid")
}

/// `{a, b, 1}` with `a=0, b=1, 1=2`.
pub fn table2() -> MagmaTable {
    table2_document()
        .to_table()
        .expect("shipped fixture is valid")
}

/// `{0, 1}` with `0·0 = 0·1 = 1·1 = 1`, `1·0 = 0`.
pub fn two_element() -> MagmaTable {
    two_element_document()
        .to_table()
        .expect("shipped fixture is valid")
}

/// `f: Table 1 → Table 2` with `f(x) = f(1) = 1`, `f(y) = a`, `f(z) = b`.
pub fn witness_morphism() -> ElementMap {
    ElementMap::new(table1(), table2(), vec![2, 0, 1, 2]).expect("valid map")
}

/// `(a, b)` of `X × X`, flattened as `2a + b`.
pub fn square_index(a: usize, b: usize) -> usize {
    2 * a + b
}

/// `R = {(0,1), (1,0), (1,1)}` inside `X × X` for the two-element `X`.
pub fn relation_subset() -> BitSet {
    [square_index(0, 1), square_index(1, 0), square_index(1, 1)]
        .into_iter()
        .collect()
}

/// `R` as a standalone three-element L-algebra together with its embedding
/// into `X × X`. Element `k` of `R` is the `k`-th of `(0,1), (1,0), (1,1)`.
pub fn relation_algebra() -> (MagmaTable, Vec<usize>) {
    let x = two_element();
    let square = product(&x, &x).expect("4 elements fit");
    subalgebra(&square, relation_subset()).expect("R is a subalgebra")
}

/// The projections `p₁, p₂ : R → X`.
pub fn relation_projections() -> (ElementMap, ElementMap) {
    let (r, embedding) = relation_algebra();
    let x = two_element();
    let p1 = embedding.iter().map(|&e| e / 2).collect();
    let p2 = embedding.iter().map(|&e| e % 2).collect();
    (
        ElementMap::new(r.clone(), x.clone(), p1).expect("valid map"),
        ElementMap::new(r, x, p2).expect("valid map"),
    )
}

/// Index of the pair `(a, b)` as an element of the three-element `R`.
pub fn relation_element(a: usize, b: usize) -> usize {
    match (a, b) {
        (0, 1) => 0,
        (1, 0) => 1,
        (1, 1) => 2,
        _ => panic!("({a},{b}) is not in R"),
    }
}

/// `Eq(p₁)` as a literal listing: the diagonal plus one
/// orientation of the off-diagonal pair. Not symmetric.
pub fn listed_eq_p1() -> PairRelation {
    let e = relation_element;
    PairRelation::from_pairs(
        3,
        [
            (e(0, 1), e(0, 1)),
            (e(1, 0), e(1, 0)),
            (e(1, 1), e(1, 1)),
            (e(1, 0), e(1, 1)),
        ],
    )
    .expect("in range")
}

/// `Eq(p₂)` as a literal listing.
pub fn listed_eq_p2() -> PairRelation {
    let e = relation_element;
    PairRelation::from_pairs(
        3,
        [
            (e(0, 1), e(0, 1)),
            (e(1, 0), e(1, 0)),
            (e(1, 1), e(1, 1)),
            (e(0, 1), e(1, 1)),
        ],
    )
    .expect("in range")
}

//! A workbench for finite pre-L-algebras and L-algebras.
//!
//! An L-algebra is a set with a binary operation `·` and a unit `1` such that
//! `x·x = x·1 = 1`, `1·x = x`, `(x·y)·(x·z) = (y·x)·(y·z)`, and
//! `x·y = y·x = 1` forces `x = y`. Dropping the last law gives a
//! pre-L-algebra. Everything here works on explicit tables of at most 64
//! elements: axiom checks, ideals and congruences with the Galois connection
//! between them, quotients and reflection, commutators of ideals, prime
//! ideals and the Zariski spectrum, permutability checks, and enumeration up
//! to isomorphism.

pub mod bitset;
pub mod category;
pub mod commutator;
pub mod congruence;
pub mod document;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod ideals;
pub mod lattice;
pub mod laws;
pub mod magma;
pub mod morphism;
pub mod partition;
pub mod relation;
pub mod spectrum;
pub mod suite;

pub use bitset::{BitSet, MAX_CARRIER};
pub use category::{
    check_cokernel_factorization, check_one_regularity, check_permutability,
    check_permutability_at_one, check_subtractive_terms, compose_relations, scan_permutability,
    PermutabilityScan, Term,
};
pub use commutator::{commutator, is_semiprime, maximal_ideals, prime_ideals};
pub use congruence::{
    all_congruences, phi, psi, quotient, reflect, smallest_l_congruence, Quotient,
};
pub use document::{parse_algebra, parse_document, AlgebraDocument, Diagnostic, DiagnosticCode};
pub use enumerate::{are_isomorphic, canonical_form, enumerate, CanonicalForm};
pub use error::{Error, Result};
pub use ideals::{
    all_ideals, all_ideals_with, ideal_closure, ideal_violation, is_ideal, IdealCondition,
    IdealEnumeration,
};
pub use lattice::{congruence_lattice, ideal_lattice, FiniteLattice};
pub use magma::{
    check_axioms, is_l, is_pre_l, is_subalgebra, natural_preorder, product, subalgebra, Axiom,
    AxiomReport, Kind, MagmaTable,
};
pub use morphism::{kernel_pair, ElementMap};
pub use partition::Partition;
pub use relation::{compose, PairRelation};
pub use spectrum::{spectrum, FiniteSpace, SpectrumSpace};
pub use suite::{run_paper_suite, SuiteConfig, VerdictReport};

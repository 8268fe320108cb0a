mod oracle;

use lalg_core::morphism::all_morphisms;
use lalg_core::{
    all_congruences, all_ideals, enumerate, ideal_closure, is_l, is_pre_l, is_subalgebra,
    natural_preorder, reflect, subalgebra, BitSet, Kind, MagmaTable,
};

fn pre_l_universe() -> Vec<MagmaTable> {
    (1..=4)
        .flat_map(|n| enumerate(n, Kind::PreL).unwrap())
        .collect()
}

#[test]
fn closure_is_intersection_of_ideals_above() {
    for m in pre_l_universe() {
        let t = oracle::raw(&m);
        for gens in 0u64..1 << m.size() {
            let got = ideal_closure(&m, BitSet::from_bits(gens)).unwrap();
            assert_eq!(
                got.bits(),
                oracle::closure(&t, gens),
                "{:?} {gens:#b}",
                m.rows()
            );
        }
    }
}

#[test]
fn ideals_are_subalgebras() {
    for m in pre_l_universe() {
        for i in all_ideals(&m).unwrap() {
            assert!(is_subalgebra(&m, i), "{:?} {:?}", m.rows(), i.to_vec());
        }
    }
}

#[test]
fn subalgebras_of_l_algebras_are_l() {
    for n in 1..=4 {
        for m in enumerate(n, Kind::L).unwrap() {
            for s in 0u64..1 << n {
                let s = BitSet::from_bits(s);
                if is_subalgebra(&m, s) {
                    let (sub, emb) = subalgebra(&m, s).unwrap();
                    assert!(is_l(&sub));
                    assert_eq!(emb, s.to_vec());
                }
            }
        }
    }
}

#[test]
fn natural_preorder_is_a_preorder_and_antisymmetric_exactly_on_l() {
    for m in pre_l_universe() {
        let r = natural_preorder(&m).unwrap();
        assert!(r.is_reflexive() && r.is_transitive());
        assert_eq!(r.is_antisymmetric(), is_l(&m));
        // the unit is the top element
        assert!(m.elements().all(|x| r.contains(x, m.unit())));
    }
}

#[test]
fn kernel_pairs_of_morphisms_are_congruences() {
    let small: Vec<MagmaTable> = (1..=3)
        .flat_map(|n| enumerate(n, Kind::PreL).unwrap())
        .collect();
    let mut seen = 0;
    for a in &small {
        for b in &small {
            for f in all_morphisms(a, b) {
                assert_eq!(f.apply(a.unit()), b.unit());
                let k = f.kernel_pair();
                assert!(k.is_equivalence() && k.is_compatible(a));
                assert!(all_congruences(a).unwrap().contains(&f.kernel_partition()));
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn reflection_is_l_and_universal_on_small_cases() {
    for m in pre_l_universe() {
        let r = reflect(&m).unwrap();
        assert!(is_l(&r.algebra));
        assert!(r.projection.is_morphism() && r.projection.is_surjective());
        if is_l(&m) {
            assert_eq!(r.algebra.size(), m.size());
        }
        // every morphism into the two-element L-algebra factors through it
        let two = lalg_core::fixtures::two_element();
        for f in all_morphisms(&m, &two) {
            let p = r.projection.kernel_partition();
            assert!(p.refines(&f.kernel_partition()));
        }
    }
}

#[test]
fn congruence_quotients_are_pre_l() {
    for m in pre_l_universe() {
        for c in all_congruences(&m).unwrap() {
            let q = lalg_core::quotient(&m, &c).unwrap();
            assert!(is_pre_l(&q.algebra));
            assert_eq!(q.algebra.size(), c.num_classes());
        }
    }
}

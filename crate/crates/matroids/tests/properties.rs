//! Randomized axiom checks over arbitrary small binary matroids.

use matroids::connectivity::lambda;
use matroids::gf2::{kernel_basis, minimal_supports, BitMatrix};
use matroids::{BinaryMatroid, ElementSet};
use proptest::prelude::*;

fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
    (1usize..=5, 1usize..=11).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(0u64..(1 << cols), rows)
            .prop_map(move |words| BitMatrix::from_rows(&words, cols).unwrap())
    })
}

fn arb_matroid() -> impl Strategy<Value = BinaryMatroid> {
    arb_matrix().prop_map(BinaryMatroid::with_default_labels)
}

fn subset_of(m: &BinaryMatroid, seed: u64) -> ElementSet {
    ElementSet::from_mask(seed & m.ground_set().mask())
}

proptest! {
    #[test]
    fn rank_axioms(m in arb_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let x = subset_of(&m, a);
        let y = subset_of(&m, b);
        prop_assert!(m.rank(x) <= x.len());
        prop_assert!(m.rank(x) <= m.rank(x.union(y)));
        prop_assert!(
            m.rank(x) + m.rank(y) >= m.rank(x.union(y)) + m.rank(x.intersection(y))
        );
        prop_assert!(m.rank(x) + m.rank(m.ground_set().difference(x)) >= m.full_rank());
    }

    #[test]
    fn rank_grows_by_at_most_one_per_element(m in arb_matroid(), a in any::<u64>(), e in 0usize..11) {
        let x = subset_of(&m, a);
        if e < m.size() {
            let grown = m.rank(x.with(e));
            prop_assert!(grown == m.rank(x) || grown == m.rank(x) + 1 || x.contains(e));
        }
    }

    #[test]
    fn closure_is_a_closure_operator(m in arb_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let x = subset_of(&m, a);
        let y = x.union(subset_of(&m, b));
        let cl = m.closure(x);
        prop_assert!(x.is_subset_of(cl));
        prop_assert_eq!(m.closure(cl), cl);
        prop_assert!(cl.is_subset_of(m.closure(y)));
        prop_assert_eq!(m.rank(cl), m.rank(x));

        let ccl = m.coclosure(x);
        prop_assert!(x.is_subset_of(ccl));
        prop_assert_eq!(m.coclosure(ccl), ccl);
        prop_assert!(ccl.is_subset_of(m.coclosure(y)));
    }

    #[test]
    fn full_closure_is_idempotent_and_doubly_closed(m in arb_matroid(), a in any::<u64>()) {
        let x = subset_of(&m, a);
        let fcl = m.full_closure(x);
        prop_assert_eq!(m.full_closure(fcl), fcl);
        prop_assert_eq!(m.closure(fcl), fcl);
        prop_assert_eq!(m.coclosure(fcl), fcl);
    }

    #[test]
    fn dual_is_an_involution_and_computes_corank(m in arb_matroid(), a in any::<u64>()) {
        let x = subset_of(&m, a);
        let dual = m.dual();
        prop_assert_eq!(dual.rank(x), m.corank(x));
        prop_assert_eq!(dual.dual().rank(x), m.rank(x));
        prop_assert_eq!(dual.full_rank(), m.size() - m.full_rank());
    }

    #[test]
    fn lambda_is_symmetric_self_dual_submodular(m in arb_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let x = subset_of(&m, a);
        let y = subset_of(&m, b);
        prop_assert_eq!(lambda(&m, x), lambda(&m, m.ground_set().difference(x)));
        prop_assert_eq!(lambda(&m, x), lambda(&m.dual(), x));
        prop_assert!(
            lambda(&m, x) + lambda(&m, y)
                >= lambda(&m, x.union(y)) + lambda(&m, x.intersection(y))
        );
    }

    #[test]
    fn moving_closure_elements_never_raises_lambda(m in arb_matroid(), a in any::<u64>()) {
        let x = subset_of(&m, a);
        let movable = m.closure(x).union(m.coclosure(x)).difference(x);
        for e in movable.iter() {
            prop_assert!(lambda(&m, x.with(e)) <= lambda(&m, x));
        }
    }

    #[test]
    fn cocircuits_are_circuits_of_the_dual(m in arb_matroid()) {
        let cocircuits = m.cocircuits().unwrap();
        let dual_circuits = m.dual().circuits(m.size()).unwrap();
        prop_assert_eq!(cocircuits, dual_circuits);
    }

    #[test]
    fn triangles_are_three_element_circuits(m in arb_matroid()) {
        let triangles: Vec<ElementSet> = m.triangles().sets().to_vec();
        let circuits: Vec<ElementSet> = m
            .circuits(3)
            .unwrap()
            .into_iter()
            .filter(|c| c.len() == 3)
            .collect();
        prop_assert_eq!(triangles, circuits);
        let triads: Vec<ElementSet> = m.triads().sets().to_vec();
        let cocircuit_triples: Vec<ElementSet> = m
            .cocircuits()
            .unwrap()
            .into_iter()
            .filter(|c| c.len() == 3)
            .collect();
        prop_assert_eq!(triads, cocircuit_triples);
    }

    #[test]
    fn contract_and_delete_commute_on_disjoint_sets(m in arb_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let c = subset_of(&m, a);
        let d = subset_of(&m, b).difference(c);
        let one = m.contract(c).delete_by_labels(&m, d);
        let two = m.delete(d).contract_by_labels(&m, c);
        prop_assert_eq!(one.labels(), two.labels());
        for mask in 0u64..(1 << one.size().min(10)) {
            let x = ElementSet::from_mask(mask & one.ground_set().mask());
            prop_assert_eq!(one.rank(x), two.rank(x));
        }
    }

    #[test]
    fn contraction_dual_is_dual_deletion(m in arb_matroid(), e in 0usize..11) {
        if e < m.size() {
            let single = ElementSet::singleton(e);
            let one = m.contract(single).dual();
            let two = m.dual().delete(single);
            prop_assert_eq!(one.labels(), two.labels());
            for mask in 0u64..(1 << one.size().min(10)) {
                let x = ElementSet::from_mask(mask & one.ground_set().mask());
                prop_assert_eq!(one.rank(x), two.rank(x));
            }
        }
    }

    #[test]
    fn simplification_keeps_the_rank_function(m in arb_matroid(), a in any::<u64>()) {
        let (si, trace) = m.simplify();
        prop_assert_eq!(si.full_rank(), m.full_rank());
        // rank of any set equals the rank of its kept image
        let x = subset_of(&m, a);
        let mapped: ElementSet = x
            .iter()
            .filter_map(|e| {
                if trace.kept.contains(e) {
                    Some(e)
                } else {
                    trace.representative.get(&e).copied()
                }
            })
            .collect();
        let kept_order: Vec<usize> = trace.kept.iter().collect();
        let image: ElementSet = mapped
            .iter()
            .map(|e| kept_order.iter().position(|&k| k == e).unwrap())
            .collect();
        prop_assert_eq!(m.rank(x), si.rank(image));
    }

    #[test]
    fn minimal_supports_form_an_antichain_in_the_span(gens in arb_matrix()) {
        if gens.rows() <= 12 {
            let supports = minimal_supports(&gens, None).unwrap();
            for (i, &a) in supports.iter().enumerate() {
                for &b in &supports[i + 1..] {
                    prop_assert!(a & b != a && a & b != b);
                }
            }
            // every support is realized by a vector of the span
            let rows: Vec<u64> = (0..gens.rows()).map(|i| gens.row_word(i)).collect();
            for &s in &supports {
                let mut found = false;
                for combo in 1u64..(1 << rows.len()) {
                    let mut acc = 0u64;
                    for (i, r) in rows.iter().enumerate() {
                        if combo >> i & 1 == 1 {
                            acc ^= r;
                        }
                    }
                    if acc == s {
                        found = true;
                        break;
                    }
                }
                prop_assert!(found, "support {s:#b} not in the span");
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate_the_columns(m in arb_matrix()) {
        let words: Vec<u64> = (0..m.cols()).map(|j| m.column_word(j)).collect();
        for v in kernel_basis(&m) {
            let mut sum = 0u64;
            for (j, w) in words.iter().enumerate() {
                if v >> j & 1 == 1 {
                    sum ^= w;
                }
            }
            prop_assert_eq!(sum, 0);
        }
        prop_assert_eq!(
            kernel_basis(&m).len(),
            m.cols() - BinaryMatroid::with_default_labels(m.clone()).full_rank()
        );
    }
}

/// Rank-comparison helpers used by the commutation properties: apply
/// the second minor operation through labels of the original matroid.
trait MinorByLabels {
    fn delete_by_labels(&self, original: &BinaryMatroid, d: ElementSet) -> BinaryMatroid;
    fn contract_by_labels(&self, original: &BinaryMatroid, c: ElementSet) -> BinaryMatroid;
}

impl MinorByLabels for BinaryMatroid {
    fn delete_by_labels(&self, original: &BinaryMatroid, d: ElementSet) -> BinaryMatroid {
        let labels: Vec<&str> = d.iter().map(|e| original.label(e)).collect();
        self.delete(self.parse_set(&labels).unwrap())
    }

    fn contract_by_labels(&self, original: &BinaryMatroid, c: ElementSet) -> BinaryMatroid {
        let labels: Vec<&str> = c.iter().map(|e| original.label(e)).collect();
        self.contract(self.parse_set(&labels).unwrap())
    }
}

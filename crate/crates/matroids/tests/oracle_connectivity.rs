//! Connectivity search checked against full naive scans, plus the
//! frozen facts about the counterexample pipeline.

mod common;

use common::*;
use matroids::connectivity::{
    find_43_violator, find_4fans, find_separation, is_internally_4_connected, is_sequential,
    lambda, Decision, SearchBudget, SearchOutcome,
};
use matroids::constructions::{catalog, section6, CatalogId, Section6Stage};
use matroids::{BinaryMatroid, ElementSet};

fn small_catalog() -> Vec<(&'static str, BinaryMatroid)> {
    ["f7", "mk4", "wheel4", "mk33dual", "mk5"]
        .into_iter()
        .map(|id| (id, catalog(&CatalogId::parse(id).unwrap()).unwrap()))
        .collect()
}

#[test]
fn lambda_matches_oracle_on_all_subsets() {
    for (id, m) in small_catalog() {
        for mask in 0u64..(1 << m.size()) {
            let x = ElementSet::from_mask(mask);
            assert_eq!(lambda(&m, x), naive_lambda(&m, x), "{id} {mask:#b}");
        }
    }
}

#[test]
fn both_strategies_match_the_naive_scan() {
    for (id, m) in small_catalog() {
        for bound in 0..=2usize {
            for min_side in [1usize, 2, 4] {
                let naive =
                    naive_min_lambda_separation(&m, min_side, min_side).filter(|&l| l <= bound);
                for budget in [SearchBudget::default(), SearchBudget::exhaustive()] {
                    match find_separation(&m, bound, min_side, min_side, &budget) {
                        SearchOutcome::Found(w) => {
                            assert_eq!(Some(w.lambda), naive, "{id} b{bound} s{min_side}");
                            assert!(w.revalidate(&m));
                        }
                        SearchOutcome::NotFound => {
                            assert_eq!(None, naive, "{id} b{bound} s{min_side}")
                        }
                        SearchOutcome::Indeterminate => panic!("budget too small"),
                    }
                }
            }
        }
    }
}

#[test]
fn strategies_agree_on_medium_restrictions_of_the_connection_stage() {
    let m = section6(Section6Stage::M).unwrap();
    let mut state = 0xD1B54A32D192ED03u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for trial in 0..12 {
        let want = 15 + (next() % 3) as usize;
        let mut keep = ElementSet::EMPTY;
        while keep.len() < want {
            keep = keep.with((next() % 37) as usize);
        }
        let r = m.restrict(keep);
        for (bound, min_side) in [(2usize, 4usize), (1, 2), (0, 1)] {
            let pruned = find_separation(&r, bound, min_side, min_side, &SearchBudget::default());
            let exhaustive =
                find_separation(&r, bound, min_side, min_side, &SearchBudget::exhaustive());
            let lam = |o: &SearchOutcome| o.witness().map(|w| w.lambda);
            assert_eq!(
                lam(&pruned),
                lam(&exhaustive),
                "trial {trial} bound {bound} min {min_side}"
            );
            assert_eq!(pruned.witness().is_some(), exhaustive.witness().is_some());
        }
    }
}

#[test]
fn wheel_has_exactly_eight_fan_pairs() {
    // count confirmed by the brute-force enumeration below: each of
    // the four triangles pairs with the triads at both ends
    let w4 = catalog(&CatalogId::Wheel(4)).unwrap();
    let fans = find_4fans(&w4);
    assert_eq!(fans.len(), 8);

    let triangles = naive_triangles(&w4);
    let triads: Vec<ElementSet> = naive_cocircuits(&w4)
        .into_iter()
        .filter(|c| c.len() == 3)
        .collect();
    let mut expected = Vec::new();
    for t in &triangles {
        for s in &triads {
            if t.intersection(*s).len() == 2 {
                expected.push((*t, *s));
            }
        }
    }
    assert_eq!(fans.len(), expected.len());
    for pair in &expected {
        assert!(fans.contains(pair));
    }
}

#[test]
fn fans_imply_not_internally_4_connected() {
    for n in 4..=6 {
        let wheel = catalog(&CatalogId::Wheel(n)).unwrap();
        assert!(!find_4fans(&wheel).is_empty());
        assert!(matches!(
            is_internally_4_connected(&wheel, &SearchBudget::default()),
            Decision::Fails(_)
        ));
    }
}

#[test]
fn graph_stage_is_internally_4_connected() {
    let g = section6(Section6Stage::G).unwrap();
    assert_eq!(
        find_separation(&g, 2, 4, 4, &SearchBudget::default()),
        SearchOutcome::NotFound
    );
    assert_eq!(
        is_internally_4_connected(&g, &SearchBudget::default()),
        Decision::Holds
    );
}

#[test]
fn connection_stage_is_internally_4_connected() {
    let m = section6(Section6Stage::M).unwrap();
    assert_eq!(
        is_internally_4_connected(&m, &SearchBudget::default()),
        Decision::Holds
    );
    assert!(find_4fans(&m).is_empty());
}

#[test]
fn k5_side_of_the_connection_is_exactly_3_separating() {
    let m = section6(Section6Stage::M).unwrap();
    let k5_side = m.parse_set(&["g15", "g25", "g35", "g45"]).unwrap();
    assert_eq!(lambda(&m, k5_side), 3);
    assert_eq!(naive_lambda(&m, k5_side), 3);
}

#[test]
fn contracting_glue_elements_leaves_a_violator() {
    let m = section6(Section6Stage::M).unwrap();
    for z in ["a", "b", "c", "d", "e", "f"] {
        let (si, _) = m.si_contract(m.index_of(z).unwrap()).unwrap();
        let outcome = find_43_violator(&si, &SearchBudget::default());
        let w = outcome
            .witness()
            .unwrap_or_else(|| panic!("si(M/{z}) must have a violator"));
        assert!(w.lambda <= 2);
        assert!(w.sizes.0 >= 4 && w.sizes.1 >= 4);
        assert!(w.revalidate(&si));
        // the witness groups the surviving K_5-side elements together
        let k5_side: Vec<usize> = ["g15", "g25", "g35", "g45"]
            .iter()
            .filter_map(|l| si.index_of(l).ok())
            .collect();
        assert!(!k5_side.is_empty());
        let on_x = k5_side.iter().all(|&e| w.side_x.contains(e));
        let on_y = k5_side.iter().all(|&e| !w.side_x.contains(e));
        assert!(on_x || on_y, "K_5-side elements split across the witness");
    }
}

#[test]
fn contracting_graph_elements_stays_internally_4_connected() {
    let m = section6(Section6Stage::M).unwrap();
    for l in ["a1b1", "ua1", "g15"] {
        let (si, _) = m.si_contract(m.index_of(l).unwrap()).unwrap();
        assert_eq!(
            is_internally_4_connected(&si, &SearchBudget::default()),
            Decision::Holds,
            "si(M/{l})"
        );
    }
}

#[test]
fn fano_line_separation_is_sequential_on_the_line_side() {
    let f = catalog(&CatalogId::F7).unwrap();
    let line = f.parse_set(&["e0", "e1", "e2"]).unwrap();
    let peel = is_sequential(&f, line, 3).unwrap().expect("sequential");
    assert_eq!(peel.side, line);
    assert_eq!(peel.order.len(), 3);
    let anchor = f.ground_set().difference(line);
    let mut grown = anchor;
    for &e in &peel.order {
        grown = grown.with(e);
        assert!(lambda(&f, grown) <= 2);
    }
    assert_eq!(grown, f.ground_set());
}

#[test]
fn exhaustive_witness_is_lexicographically_least() {
    let w4 = catalog(&CatalogId::Wheel(4)).unwrap();
    let found = find_separation(&w4, 2, 4, 4, &SearchBudget::exhaustive());
    let w = found.witness().expect("wheel has a violator");
    // scan everything containing element 0 for the least valid side
    let n = w4.size();
    let mut best: Option<ElementSet> = None;
    for rest in 0u64..(1 << (n - 1)) {
        let x = ElementSet::from_mask(rest << 1 | 1);
        if x.len() >= 4 && n - x.len() >= 4 && naive_lambda(&w4, x) <= 2 {
            best = Some(match best {
                None => x,
                Some(b) => {
                    if x < b {
                        x
                    } else {
                        b
                    }
                }
            });
        }
    }
    assert_eq!(w.side_x, best.unwrap());
}

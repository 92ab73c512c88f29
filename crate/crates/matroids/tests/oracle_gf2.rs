//! Rank values of the pipeline matrices, frozen after computing them
//! with the naive elimination oracle.

mod common;

use common::BoolMatrix;
use matroids::constructions::{catalog, section6, CatalogId, Section6Stage};
use matroids::gf2::{minimal_supports, rank_of_columns, standard_form, BitMatrix, ColumnSelection};

#[test]
fn incidence_stage_has_rank_8() {
    let g = section6(Section6Stage::G).unwrap();
    let oracle = BoolMatrix::from_matroid(&g);
    let all: Vec<usize> = (0..27).collect();
    assert_eq!(oracle.rank_of(&all), 8);
    assert_eq!(g.full_rank(), 8);
    // every column has exactly two ones, so the all-ones covector
    // annihilates the whole matrix and the rank stays below 9
    for j in 0..27 {
        assert_eq!(g.column_words()[j].count_ones(), 2);
    }
}

#[test]
fn extension_stage_has_rank_8() {
    let n = section6(Section6Stage::N).unwrap();
    let oracle = BoolMatrix::from_matroid(&n);
    let all: Vec<usize> = (0..33).collect();
    assert_eq!(oracle.rank_of(&all), 8);
    assert_eq!(n.full_rank(), 8);
    for j in 0..33 {
        assert_eq!(n.column_words()[j].count_ones() % 2, 0);
    }
}

#[test]
fn connection_stage_has_rank_9() {
    let m = section6(Section6Stage::M).unwrap();
    let oracle = BoolMatrix::from_matroid(&m);
    let all: Vec<usize> = (0..37).collect();
    assert_eq!(oracle.rank_of(&all), 9);
    assert_eq!(m.full_rank(), 9);
}

#[test]
fn rank_of_columns_matches_oracle_on_catalog() {
    for id in ["f7", "mk5", "wheel5", "mk33dual", "ag32"] {
        let m = catalog(&CatalogId::parse(id).unwrap()).unwrap();
        let oracle = BoolMatrix::from_matroid(&m);
        let mut state = 0x9E3779B97F4A7C15u64;
        for _ in 0..200 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let mask = state % (1 << m.size());
            let sel: Vec<usize> = (0..m.size()).filter(|j| mask >> j & 1 == 1).collect();
            let selection = ColumnSelection::new(sel.clone(), m.size()).unwrap();
            assert_eq!(
                rank_of_columns(m.matrix(), &selection).unwrap(),
                oracle.rank_of(&sel),
                "{id} mask {mask:#b}"
            );
        }
    }
}

#[test]
fn standard_form_preserves_independence_relations() {
    let m = catalog(&CatalogId::MK5).unwrap();
    let sf = standard_form(m.matrix());
    assert_eq!(sf.rank(), 4);
    let oracle_before = BoolMatrix::from_matroid(&m);
    let reduced = matroids::BinaryMatroid::with_default_labels(sf.reduced.clone());
    let oracle_after = BoolMatrix::from_matroid(&reduced);
    for mask in 0u64..(1 << 10) {
        let sel: Vec<usize> = (0..10).filter(|j| mask >> j & 1 == 1).collect();
        assert_eq!(
            oracle_before.rank_of(&sel),
            oracle_after.rank_of(&sel),
            "mask {mask:#b}"
        );
    }
    // identity block sits on the basis columns
    for (row, &col) in sf.basis_columns.indices().iter().enumerate() {
        for i in 0..sf.reduced.rows() {
            assert_eq!(sf.reduced.get(i, col), i == row);
        }
    }
    // permutation lists basis columns first, then the rest in order
    assert_eq!(&sf.permutation[..4], sf.basis_columns.indices());
}

#[test]
fn minimal_supports_match_brute_force() {
    let gens = BitMatrix::from_strings(&["110010", "011001", "000111"]).unwrap();
    let fast = minimal_supports(&gens, None).unwrap();

    // brute force: all 2^3 - 1 combinations, minimal supports by scan
    let rows: Vec<u64> = (0..3).map(|i| gens.row_word(i)).collect();
    let mut all: Vec<u64> = (1u64..8)
        .map(|c| {
            (0..3)
                .filter(|i| c >> i & 1 == 1)
                .fold(0u64, |acc, i| acc ^ rows[i])
        })
        .collect();
    all.sort_unstable();
    all.dedup();
    let mut slow: Vec<u64> = all
        .iter()
        .copied()
        .filter(|&v| v != 0 && !all.iter().any(|&w| w != 0 && w != v && w & v == w))
        .collect();
    slow.sort_unstable();
    let mut fast_sorted = fast.clone();
    fast_sorted.sort_unstable();
    assert_eq!(fast_sorted, slow);
}

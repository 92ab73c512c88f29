#![allow(dead_code)]

//! Naive reference oracles for the integration tests.
//!
//! Everything here is textbook arithmetic over `Vec<Vec<bool>>`,
//! deliberately sharing no code path with the library's word-parallel
//! kernels, so agreement between the two is meaningful evidence.

use matroids::{BinaryMatroid, ElementSet};

pub struct BoolMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<bool>>,
}

impl BoolMatrix {
    pub fn from_matroid(m: &BinaryMatroid) -> Self {
        let matrix = m.matrix();
        let data = (0..matrix.rows())
            .map(|i| (0..matrix.cols()).map(|j| matrix.get(i, j)).collect())
            .collect();
        BoolMatrix {
            rows: matrix.rows(),
            cols: matrix.cols(),
            data,
        }
    }

    /// Gaussian elimination over the selected columns.
    pub fn rank_of(&self, selection: &[usize]) -> usize {
        let mut cols: Vec<Vec<bool>> = selection
            .iter()
            .map(|&j| (0..self.rows).map(|i| self.data[i][j]).collect())
            .collect();
        let mut rank = 0;
        for row in 0..self.rows {
            let Some(pivot) = (rank..cols.len()).find(|&c| cols[c][row]) else {
                continue;
            };
            cols.swap(rank, pivot);
            let pivot_col = cols[rank].clone();
            for (c, col) in cols.iter_mut().enumerate() {
                if c != rank && col[row] {
                    for i in 0..self.rows {
                        col[i] ^= pivot_col[i];
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

pub fn set_to_indices(x: ElementSet) -> Vec<usize> {
    x.iter().collect()
}

pub fn naive_rank(m: &BinaryMatroid, x: ElementSet) -> usize {
    BoolMatrix::from_matroid(m).rank_of(&set_to_indices(x))
}

pub fn naive_lambda(m: &BinaryMatroid, x: ElementSet) -> usize {
    let b = BoolMatrix::from_matroid(m);
    let complement = m.ground_set().difference(x);
    b.rank_of(&set_to_indices(x)) + b.rank_of(&set_to_indices(complement))
        - b.rank_of(&set_to_indices(m.ground_set()))
}

pub fn naive_closure(m: &BinaryMatroid, x: ElementSet) -> ElementSet {
    let b = BoolMatrix::from_matroid(m);
    let base = b.rank_of(&set_to_indices(x));
    let mut out = x;
    for e in m.ground_set().difference(x).iter() {
        if b.rank_of(&set_to_indices(x.with(e))) == base {
            out = out.with(e);
        }
    }
    out
}

pub fn naive_corank(m: &BinaryMatroid, x: ElementSet) -> usize {
    let b = BoolMatrix::from_matroid(m);
    let ground = m.ground_set();
    x.len() + b.rank_of(&set_to_indices(ground.difference(x))) - b.rank_of(&set_to_indices(ground))
}

pub fn naive_coclosure(m: &BinaryMatroid, x: ElementSet) -> ElementSet {
    let base = naive_corank(m, x);
    let mut out = x;
    for e in m.ground_set().difference(x).iter() {
        if naive_corank(m, x.with(e)) == base {
            out = out.with(e);
        }
    }
    out
}

pub fn naive_full_closure(m: &BinaryMatroid, x: ElementSet) -> ElementSet {
    let mut current = x;
    loop {
        let next = naive_coclosure(m, naive_closure(m, current));
        if next == current {
            return current;
        }
        current = next;
    }
}

fn subsets_of_size_at_most(n: usize, max: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    let mut stack: Vec<(ElementSet, usize)> = vec![(ElementSet::EMPTY, 0)];
    while let Some((set, next)) = stack.pop() {
        if !set.is_empty() {
            out.push(set);
        }
        if set.len() < max {
            for e in next..n {
                stack.push((set.with(e), e + 1));
            }
        }
    }
    out
}

/// All circuits of size at most `max_size` by definition: dependent
/// sets whose proper subsets are all independent.
pub fn naive_circuits(m: &BinaryMatroid, max_size: usize) -> Vec<ElementSet> {
    let b = BoolMatrix::from_matroid(m);
    let mut out = Vec::new();
    for c in subsets_of_size_at_most(m.size(), max_size) {
        if b.rank_of(&set_to_indices(c)) == c.len() {
            continue;
        }
        let minimal = c
            .iter()
            .all(|e| b.rank_of(&set_to_indices(c.without(e))) == c.len() - 1);
        if minimal {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// All cocircuits by definition: minimal nonempty sets whose removal
/// drops the rank.
pub fn naive_cocircuits(m: &BinaryMatroid) -> Vec<ElementSet> {
    let b = BoolMatrix::from_matroid(m);
    let ground = m.ground_set();
    let full = b.rank_of(&set_to_indices(ground));
    let n = m.size();
    let mut hitters: Vec<ElementSet> = Vec::new();
    let mut masks: Vec<ElementSet> = (1..(1u64 << n)).map(ElementSet::from_mask).collect();
    masks.sort_by_key(|s| s.len());
    'outer: for c in masks {
        for kept in &hitters {
            if kept.is_subset_of(c) {
                continue 'outer;
            }
        }
        if b.rank_of(&set_to_indices(ground.difference(c))) < full {
            hitters.push(c);
        }
    }
    hitters.sort();
    hitters
}

pub fn naive_triangles(m: &BinaryMatroid) -> Vec<ElementSet> {
    naive_circuits(m, 3)
        .into_iter()
        .filter(|c| c.len() == 3)
        .collect()
}

/// Full scan over sides containing element 0; returns the least λ of
/// any partition meeting the size minimums.
pub fn naive_min_lambda_separation(m: &BinaryMatroid, min_x: usize, min_y: usize) -> Option<usize> {
    let n = m.size();
    if n == 0 || min_x + min_y > n {
        return None;
    }
    let mut best: Option<usize> = None;
    for rest in 0u64..(1 << (n - 1)) {
        let x = ElementSet::from_mask(rest << 1 | 1);
        let a = x.len();
        let b = n - a;
        let fits = (a >= min_x && b >= min_y) || (a >= min_y && b >= min_x);
        if !fits {
            continue;
        }
        let l = naive_lambda(m, x);
        best = Some(best.map_or(l, |current| current.min(l)));
    }
    best
}

//! Binary matroids: a labeled GF(2) column matrix with rank semantics.
//!
//! Subsets of the ground set are [`ElementSet`] column masks relative to a
//! specific matroid; labels exist only at the API boundary. Operations are
//! pure and values immutable, so everything here is safe to share across
//! threads.

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, Elimination};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A subset of the ground set of a specific matroid, stored as a column
/// mask (bit `i` = element with column index `i`).
///
/// Sets order as sorted index lists: `{0,2} < {1}`, and a set precedes
/// its proper supersets-by-suffix. That ordering is used everywhere a
/// deterministic enumeration is promised.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    pub fn singleton(index: usize) -> Self {
        Self(1 << index)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Self {
        Self(self.0 | 1 << index)
    }

    pub fn without(self, index: usize) -> Self {
        Self(self.0 & !(1 << index))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut mask = 0u64;
        for i in iter {
            assert!(i < 64, "element index {i} out of range");
            mask |= 1 << i;
        }
        Self(mask)
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        gf2::cmp_sets_lex(self.0, other.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A binary matroid: columns of a GF(2) matrix with distinct labels.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatroid {
    matrix: BitMatrix,
    labels: Vec<String>,
    /// Column words cached for the rank oracles (bit `i` = row `i`).
    words: Vec<u64>,
    rank: usize,
}

impl BinaryMatroid {
    /// Wraps a matrix with explicit labels (must be distinct and match
    /// the column count).
    pub fn new<S: Into<String>>(matrix: BitMatrix, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != matrix.cols() {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} columns",
                labels.len(),
                matrix.cols()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let words = matrix.column_words();
        let rank = gf2::rank_of_mask(&words, ElementSet::full(words.len()).mask());
        Ok(Self {
            matrix,
            labels,
            words,
            rank,
        })
    }

    /// Wraps a matrix with labels `e0..e{n-1}`.
    pub fn with_default_labels(matrix: BitMatrix) -> Self {
        let labels: Vec<String> = (0..matrix.cols()).map(|j| format!("e{j}")).collect();
        Self::new(matrix, labels).expect("default labels are valid")
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Rank of the whole matroid.
    pub fn full_rank(&self) -> usize {
        self.rank
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a list of labels into a set.
    pub fn parse_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        let mut set = ElementSet::EMPTY;
        for l in labels {
            set = set.with(self.index_of(l.as_ref())?);
        }
        Ok(set)
    }

    /// Labels of a set, in column order.
    pub fn label_set(&self, set: ElementSet) -> Vec<&str> {
        set.iter().map(|i| self.label(i)).collect()
    }

    /// Cached column words (bit `i` of word `j` = entry `(i, j)`).
    pub fn column_words(&self) -> &[u64] {
        &self.words
    }

    fn assert_resolves(&self, set: ElementSet) {
        assert!(
            set.is_subset_of(self.ground_set()),
            "element set {set:?} does not resolve in a matroid on {} elements",
            self.size()
        );
    }

    /// GF(2) rank of the columns of `x`.
    pub fn rank(&self, x: ElementSet) -> usize {
        self.assert_resolves(x);
        gf2::rank_of_mask(&self.words, x.mask())
    }

    /// Corank `r*(X) = |X| + r(E−X) − r(M)`.
    pub fn corank(&self, x: ElementSet) -> usize {
        self.assert_resolves(x);
        x.len() + self.rank(self.ground_set().difference(x)) - self.rank
    }

    /// Closure: `X` together with every element spanned by it.
    pub fn closure(&self, x: ElementSet) -> ElementSet {
        self.assert_resolves(x);
        let mut elim = Elimination::new();
        for i in x.iter() {
            elim.insert(self.words[i]);
        }
        let mut out = x;
        for e in self.ground_set().difference(x).iter() {
            if elim.spans(self.words[e]) {
                out = out.with(e);
            }
        }
        out
    }

    /// Coclosure: closure in the dual, computed from ranks of complements.
    pub fn coclosure(&self, x: ElementSet) -> ElementSet {
        self.assert_resolves(x);
        let complement = self.ground_set().difference(x);
        let r_complement = self.rank(complement);
        let mut out = x;
        for e in complement.iter() {
            if self.rank(complement.without(e)) + 1 == r_complement {
                out = out.with(e);
            }
        }
        out
    }

    /// Least fixed point of alternating closure and coclosure.
    pub fn full_closure(&self, x: ElementSet) -> ElementSet {
        let mut current = x;
        loop {
            let next = self.coclosure(self.closure(current));
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Deletes the elements of `d`, keeping labels of the rest.
    pub fn delete(&self, d: ElementSet) -> BinaryMatroid {
        self.assert_resolves(d);
        self.restrict(self.ground_set().difference(d))
    }

    /// Restricts to the elements of `r`.
    pub fn restrict(&self, r: ElementSet) -> BinaryMatroid {
        self.assert_resolves(r);
        let keep: Vec<usize> = r.iter().collect();
        let mut matrix = BitMatrix::zeros(self.matrix.rows(), keep.len()).expect("shrinking");
        for (jj, &j) in keep.iter().enumerate() {
            for i in 0..self.matrix.rows() {
                if self.matrix.get(i, j) {
                    matrix.set(i, jj, true);
                }
            }
        }
        let labels: Vec<String> = keep.iter().map(|&j| self.labels[j].clone()).collect();
        BinaryMatroid::new(matrix, labels).expect("labels stay distinct")
    }

    /// Contracts the elements of `c`: pivots for non-loops, deletion for
    /// loops. The rank drops by exactly `rank(c)`.
    pub fn contract(&self, c: ElementSet) -> BinaryMatroid {
        self.assert_resolves(c);
        let mut matrix = self.matrix.clone();
        let mut labels = self.labels.clone();
        for target in c.iter().map(|i| self.labels[i].clone()) {
            let j = labels
                .iter()
                .position(|l| *l == target)
                .expect("label still present");
            let col_word = matrix.column_word(j);
            if col_word == 0 {
                // loop: contraction degenerates to deletion
                let keep: Vec<u64> = (0..matrix.rows())
                    .map(|i| drop_col(matrix.row_word(i), j))
                    .collect();
                matrix = BitMatrix::from_rows(&keep, matrix.cols() - 1).expect("shrinking");
            } else {
                matrix = gf2::pivot_contract(&matrix, j).expect("non-loop column");
            }
            labels.remove(j);
        }
        BinaryMatroid::new(matrix, labels).expect("labels stay distinct")
    }

    /// Removes loops and all but the least-indexed element of each
    /// parallel class.
    pub fn simplify(&self) -> (BinaryMatroid, SimplificationTrace) {
        let mut kept = ElementSet::EMPTY;
        let mut removed_loops = ElementSet::EMPTY;
        let mut representative = BTreeMap::new();
        let mut class_head: HashMap<u64, usize> = HashMap::new();
        for j in 0..self.size() {
            let w = self.words[j];
            if w == 0 {
                removed_loops = removed_loops.with(j);
            } else if let Some(&head) = class_head.get(&w) {
                representative.insert(j, head);
            } else {
                class_head.insert(w, j);
                kept = kept.with(j);
            }
        }
        let trace = SimplificationTrace {
            kept,
            removed_loops,
            representative,
        };
        (self.restrict(kept), trace)
    }

    /// `si(M/e)`: contract a non-loop element, then simplify.
    pub fn si_contract(&self, e: usize) -> Result<(BinaryMatroid, SimplificationTrace)> {
        if e >= self.size() {
            return Err(Error::ColumnOutOfRange {
                index: e,
                cols: self.size(),
            });
        }
        if self.words[e] == 0 {
            return Err(Error::Precondition(format!(
                "element `{}` is a loop and cannot be contracted",
                self.labels[e]
            )));
        }
        Ok(self.contract(ElementSet::singleton(e)).simplify())
    }

    /// The dual matroid, in canonical reduced form, labels preserved.
    ///
    /// From the standard form `[I | D]` on the lexicographically first
    /// basis, the dual is `[Dᵀ | I]` with the column permutation undone;
    /// the result is then row-reduced so that `dual(dual(M))` reproduces
    /// the canonical form of `M` exactly.
    pub fn dual(&self) -> BinaryMatroid {
        let sf = gf2::standard_form(&self.matrix);
        let r = sf.rank();
        let n = self.size();
        let basis = sf.basis_columns.indices();
        let nonbasis: Vec<usize> = sf.permutation[r..].to_vec();
        let mut rows = vec![0u64; n - r];
        for (k, &nb) in nonbasis.iter().enumerate() {
            rows[k] |= 1u64 << nb;
            for (j, &b) in basis.iter().enumerate() {
                if sf.reduced.row_word(j) >> nb & 1 == 1 {
                    rows[k] |= 1u64 << b;
                }
            }
        }
        let raw = BitMatrix::from_rows(&rows, n).expect("dual fits the same width");
        let canonical = gf2::standard_form(&raw).reduced;
        BinaryMatroid::new(canonical, self.labels.clone()).expect("labels unchanged")
    }

    /// Parallel classes of non-loop elements, each as a set, ordered by
    /// least element.
    pub fn parallel_classes(&self) -> Vec<ElementSet> {
        let mut by_word: BTreeMap<usize, ElementSet> = BTreeMap::new();
        let mut head_of: HashMap<u64, usize> = HashMap::new();
        for j in 0..self.size() {
            let w = self.words[j];
            if w == 0 {
                continue;
            }
            let head = *head_of.entry(w).or_insert(j);
            by_word
                .entry(head)
                .and_modify(|s| *s = s.with(j))
                .or_insert_with(|| ElementSet::singleton(j));
        }
        by_word.into_values().collect()
    }

    /// Elements represented by zero columns.
    pub fn loops(&self) -> ElementSet {
        (0..self.size()).filter(|&j| self.words[j] == 0).collect()
    }

    /// All triangles (3-element circuits), found by hashing pairwise
    /// column XORs, along with a per-element index.
    pub fn triangles(&self) -> TriangleList {
        let n = self.size();
        let mut by_value: HashMap<u64, Vec<usize>> = HashMap::new();
        for j in 0..n {
            if self.words[j] != 0 {
                by_value.entry(self.words[j]).or_default().push(j);
            }
        }
        let mut triangles = Vec::new();
        for i in 0..n {
            if self.words[i] == 0 {
                continue;
            }
            for j in i + 1..n {
                if self.words[j] == 0 {
                    continue;
                }
                let v = self.words[i] ^ self.words[j];
                if v == 0 {
                    continue; // parallel pair
                }
                if let Some(ks) = by_value.get(&v) {
                    for &k in ks {
                        if k > j {
                            triangles.push(ElementSet::from_mask(1 << i | 1 << j | 1 << k));
                        }
                    }
                }
            }
        }
        triangles.sort();
        TriangleList::build(triangles, n)
    }

    /// Triads: triangles of the dual.
    pub fn triads(&self) -> TriangleList {
        let dual = self.dual();
        let list = dual.triangles();
        TriangleList::build(list.triangles, self.size())
    }

    /// Circuits of size at most `max_size`, in set-lexicographic order.
    ///
    /// Uses null-space support enumeration when the corank is within the
    /// span guard; otherwise falls back to a bounded independent-set
    /// search, which is only tractable for small `max_size`.
    pub fn circuits(&self, max_size: usize) -> Result<Vec<ElementSet>> {
        let n = self.size();
        let nullity = n - self.rank;
        if nullity <= gf2::SUPPORT_SPAN_LIMIT {
            let kernel = gf2::kernel_basis(&self.matrix);
            let gens = BitMatrix::from_rows(&kernel, n)?;
            let supports = gf2::minimal_supports(&gens, Some(max_size))?;
            return Ok(supports.into_iter().map(ElementSet::from_mask).collect());
        }
        if max_size > 8 {
            return Err(Error::Capacity(format!(
                "nullity {nullity} exceeds the span guard and max_size {max_size} > 8 \
                 makes subset search infeasible"
            )));
        }
        let mut out = Vec::new();
        let mut elim = AugmentedElimination::new();
        let mut stack = Vec::new();
        self.circuit_dfs(0, max_size, &mut stack, &mut elim, &mut out);
        out.sort();
        Ok(out)
    }

    fn circuit_dfs(
        &self,
        start: usize,
        max_size: usize,
        independent: &mut Vec<usize>,
        elim: &mut AugmentedElimination,
        out: &mut Vec<ElementSet>,
    ) {
        let current: ElementSet = independent.iter().copied().collect();
        for e in start..self.size() {
            let (reduced, combo) = elim.reduce(self.words[e], 1 << e);
            if reduced == 0 {
                // fundamental circuit of e over the current independent set
                if combo == current.mask() | 1 << e {
                    out.push(ElementSet::from_mask(combo));
                }
            } else if independent.len() + 1 < max_size {
                let slot = elim.insert_reduced(reduced, combo);
                independent.push(e);
                self.circuit_dfs(e + 1, max_size, independent, elim, out);
                independent.pop();
                elim.remove(slot);
            }
        }
    }

    /// Cocircuits: minimal supports of the row space.
    pub fn cocircuits(&self) -> Result<Vec<ElementSet>> {
        if self.rank > gf2::SUPPORT_SPAN_LIMIT {
            return Err(Error::Capacity(format!(
                "rank {} exceeds the cocircuit enumeration guard {}",
                self.rank,
                gf2::SUPPORT_SPAN_LIMIT
            )));
        }
        let supports = gf2::minimal_supports(&self.matrix, None)?;
        Ok(supports.into_iter().map(ElementSet::from_mask).collect())
    }

    /// Renames elements; `pairs` maps old labels to new ones.
    pub fn rename_elements(&self, pairs: &[(&str, &str)]) -> Result<BinaryMatroid> {
        let mut labels = self.labels.clone();
        for (old, new) in pairs {
            let i = self.index_of(old)?;
            labels[i] = (*new).to_string();
        }
        BinaryMatroid::new(self.matrix.clone(), labels)
    }

    /// Searches for a matroid isomorphism onto `other`; returns the
    /// column map (index in `self` → index in `other`) if one exists.
    ///
    /// Backtracking over column correspondences, pruned by per-element
    /// invariants (loop status, parallel class size, triangle membership
    /// count) and incremental rank equality, verified at the leaves by
    /// mapping the cycle space.
    pub fn is_isomorphic(&self, other: &BinaryMatroid) -> Result<Option<Vec<usize>>> {
        const ISO_GUARD: usize = 15;
        if self.size() > ISO_GUARD || other.size() > ISO_GUARD {
            return Err(Error::Capacity(format!(
                "isomorphism search is limited to {ISO_GUARD} elements"
            )));
        }
        if self.size() != other.size() || self.rank != other.rank {
            return Ok(None);
        }
        let sig_a = self.signatures();
        let sig_b = other.signatures();
        let mut sorted_a = sig_a.clone();
        let mut sorted_b = sig_b.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return Ok(None);
        }
        // rarest signatures first
        let mut freq: HashMap<(bool, usize, usize), usize> = HashMap::new();
        for s in &sig_a {
            *freq.entry(*s).or_insert(0) += 1;
        }
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&i| (freq[&sig_a[i]], i));

        let mut search = IsoSearch {
            a: self,
            b: other,
            sig_a: &sig_a,
            sig_b: &sig_b,
            order: &order,
            map: vec![usize::MAX; self.size()],
            used: ElementSet::EMPTY,
            elim_a: Elimination::new(),
            elim_b: Elimination::new(),
        };
        if search.assign(0) {
            let map = search.map;
            debug_assert!(self.is_isomorphism_under(other, &map));
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    /// Checks a specific bijection (`map[i]` = image of column `i`) for
    /// being a matroid isomorphism onto `other`.
    ///
    /// For binary matroids this is exactly: the bijection carries the
    /// cycle space of `self` onto the cycle space of `other`.
    pub fn is_isomorphism_under(&self, other: &BinaryMatroid, map: &[usize]) -> bool {
        if map.len() != self.size() || self.size() != other.size() || self.rank != other.rank {
            return false;
        }
        let mut seen = 0u64;
        for &t in map {
            if t >= other.size() || seen >> t & 1 == 1 {
                return false;
            }
            seen |= 1 << t;
        }
        for v in gf2::kernel_basis(&self.matrix) {
            let mut sum = 0u64;
            let mut rest = v;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                sum ^= other.words[map[i]];
            }
            if sum != 0 {
                return false;
            }
        }
        true
    }

    /// Per-element invariant: (is loop, parallel class size, triangles).
    fn signatures(&self) -> Vec<(bool, usize, usize)> {
        let triangles = self.triangles();
        let mut class_size = vec![0usize; self.size()];
        for class in self.parallel_classes() {
            for e in class.iter() {
                class_size[e] = class.len();
            }
        }
        (0..self.size())
            .map(|e| {
                (
                    self.words[e] == 0,
                    class_size[e],
                    triangles.containing(e).len(),
                )
            })
            .collect()
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BinaryMatroid(n={}, r={}, labels={:?})",
            self.size(),
            self.rank,
            self.labels
        )
    }
}

fn drop_col(row: u64, col: usize) -> u64 {
    let lo = if col == 0 { 0 } else { (1u64 << col) - 1 };
    (row & lo) | ((row >> 1) & !lo)
}

struct IsoSearch<'a> {
    a: &'a BinaryMatroid,
    b: &'a BinaryMatroid,
    sig_a: &'a [(bool, usize, usize)],
    sig_b: &'a [(bool, usize, usize)],
    order: &'a [usize],
    map: Vec<usize>,
    used: ElementSet,
    elim_a: Elimination,
    elim_b: Elimination,
}

impl IsoSearch<'_> {
    fn assign(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.a.is_isomorphism_under(self.b, &self.map);
        }
        let e = self.order[depth];
        for t in 0..self.b.size() {
            if self.used.contains(t) || self.sig_a[e] != self.sig_b[t] {
                continue;
            }
            let slot_a = self.elim_a.insert(self.a.words[e]);
            let slot_b = self.elim_b.insert(self.b.words[t]);
            if slot_a.is_some() == slot_b.is_some() {
                self.map[e] = t;
                self.used = self.used.with(t);
                if self.assign(depth + 1) {
                    return true;
                }
                self.used = self.used.without(t);
                self.map[e] = usize::MAX;
            }
            if let Some(s) = slot_b {
                self.elim_b.remove(s);
            }
            if let Some(s) = slot_a {
                self.elim_a.remove(s);
            }
        }
        false
    }
}

/// Elimination state that tracks, for each pivot, which inserted columns
/// combine to it. Used to read off fundamental circuits.
struct AugmentedElimination {
    pivots: [u64; 64],
    combos: [u64; 64],
}

impl AugmentedElimination {
    fn new() -> Self {
        Self {
            pivots: [0; 64],
            combos: [0; 64],
        }
    }

    /// Reduces `word`, accumulating the combination that produced it.
    fn reduce(&self, mut word: u64, mut combo: u64) -> (u64, u64) {
        while word != 0 {
            let hi = 63 - word.leading_zeros() as usize;
            if self.pivots[hi] == 0 {
                break;
            }
            word ^= self.pivots[hi];
            combo ^= self.combos[hi];
        }
        (word, combo)
    }

    fn insert_reduced(&mut self, reduced: u64, combo: u64) -> usize {
        let hi = 63 - reduced.leading_zeros() as usize;
        self.pivots[hi] = reduced;
        self.combos[hi] = combo;
        hi
    }

    fn remove(&mut self, slot: usize) {
        self.pivots[slot] = 0;
        self.combos[slot] = 0;
    }
}

/// Triangles of a matroid together with a per-element membership index.
#[derive(Clone, Debug)]
pub struct TriangleList {
    triangles: Vec<ElementSet>,
    per_element: Vec<Vec<usize>>,
}

impl TriangleList {
    fn build(triangles: Vec<ElementSet>, n: usize) -> Self {
        let mut per_element = vec![Vec::new(); n];
        for (t, tri) in triangles.iter().enumerate() {
            for e in tri.iter() {
                per_element[e].push(t);
            }
        }
        Self {
            triangles,
            per_element,
        }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.triangles
    }

    pub fn get(&self, index: usize) -> ElementSet {
        self.triangles[index]
    }

    /// Indices of the triangles containing element `e`.
    pub fn containing(&self, e: usize) -> &[usize] {
        &self.per_element[e]
    }

    /// Triangle membership count per element.
    pub fn counts(&self) -> Vec<usize> {
        self.per_element.iter().map(Vec::len).collect()
    }
}

/// Bookkeeping from [`BinaryMatroid::simplify`]: which elements were
/// kept, which were loops, and which parallel element each removed
/// element maps to. Indices refer to the matroid that was simplified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplificationTrace {
    pub kept: ElementSet,
    pub removed_loops: ElementSet,
    pub representative: BTreeMap<usize, usize>,
}

impl SimplificationTrace {
    pub fn is_identity(&self) -> bool {
        self.removed_loops.is_empty() && self.representative.is_empty()
    }
}

//! Dense bit-parallel linear algebra over GF(2).
//!
//! Every matrix is stored row-major with one `u64` word per row, so both
//! dimensions are capped at 64. That is enough for every ground set this
//! crate works with, and it keeps row XOR, rank oracles, and support
//! enumeration at word speed.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Hard cap on rows and columns: one machine word per row.
pub const WORD_BITS: usize = 64;

/// A dense matrix over GF(2).
///
/// Entry `(i, j)` is bit `j` of word `i`. Equality is entrywise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    /// One word per row; bits at positions >= `cols` are always zero.
    bits: Vec<u64>,
}

impl BitMatrix {
    /// Creates an all-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows > WORD_BITS || cols > WORD_BITS {
            return Err(Error::Capacity(format!(
                "matrix {rows}x{cols} exceeds {WORD_BITS}x{WORD_BITS}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            bits: vec![0; rows],
        })
    }

    /// Creates the `n`-by-`n` identity.
    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.bits[i] = 1u64 << i;
        }
        Ok(m)
    }

    /// Builds a matrix from row words; bits beyond `cols` must be clear.
    pub fn from_rows(rows: &[u64], cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols)?;
        let mask = mask_lo(cols);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::InvalidInput(format!(
                    "row {i} has bits set beyond column {cols}"
                )));
            }
            m.bits[i] = r;
        }
        Ok(m)
    }

    /// Builds a matrix from rows written as strings of `0`/`1` characters.
    pub fn from_strings(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidInput(format!(
                    "row {i} has length {} but expected {cols}",
                    row.len()
                )));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "row {i} contains `{ch}`; expected 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        (self.bits[row] >> col) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        if value {
            self.bits[row] |= 1u64 << col;
        } else {
            self.bits[row] &= !(1u64 << col);
        }
    }

    /// Row `i` as a word (bit `j` = entry `(i, j)`).
    pub fn row_word(&self, row: usize) -> u64 {
        self.bits[row]
    }

    /// Column `j` as a word over rows (bit `i` = entry `(i, j)`).
    pub fn column_word(&self, col: usize) -> u64 {
        assert!(col < self.cols, "column out of range");
        let mut w = 0u64;
        for i in 0..self.rows {
            w |= ((self.bits[i] >> col) & 1) << i;
        }
        w
    }

    /// All column words, in column order.
    pub fn column_words(&self) -> Vec<u64> {
        (0..self.cols).map(|j| self.column_word(j)).collect()
    }

    /// Checked column bound used by public entry points.
    fn check_col(&self, col: usize) -> Result<()> {
        if col >= self.cols {
            Err(Error::ColumnOutOfRange {
                index: col,
                cols: self.cols,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn mask_lo(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An ordered list of distinct column positions of some matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSelection(Vec<usize>);

impl ColumnSelection {
    /// Validates indices against a column count: in range, no duplicates.
    pub fn new(indices: Vec<usize>, cols: usize) -> Result<Self> {
        let mut seen = 0u64;
        for &i in &indices {
            if i >= cols {
                return Err(Error::ColumnOutOfRange { index: i, cols });
            }
            if seen >> i & 1 == 1 {
                return Err(Error::DuplicateColumn(i));
            }
            seen |= 1 << i;
        }
        Ok(Self(indices))
    }

    pub fn all(cols: usize) -> Self {
        Self((0..cols).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Incremental GF(2) elimination over column words.
///
/// Columns can only be added; each insertion reduces the incoming word by
/// the stored pivots and either absorbs it (rank unchanged) or records a
/// new pivot. Removal of the most recently added pivot is supported so
/// depth-first searches can backtrack in O(1).
#[derive(Clone)]
pub struct Elimination {
    /// pivot word with leading (highest set) bit `p` lives at `pivots[p]`.
    pivots: [u64; WORD_BITS],
    rank: usize,
}

impl Default for Elimination {
    fn default() -> Self {
        Self::new()
    }
}

impl Elimination {
    pub fn new() -> Self {
        Self {
            pivots: [0; WORD_BITS],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces a word by the current pivots.
    pub fn reduce(&self, mut word: u64) -> u64 {
        while word != 0 {
            let hi = 63 - word.leading_zeros() as usize;
            let p = self.pivots[hi];
            if p == 0 {
                return word;
            }
            word ^= p;
        }
        0
    }

    /// Inserts a column; returns the pivot slot if the rank grew.
    pub fn insert(&mut self, word: u64) -> Option<usize> {
        let reduced = self.reduce(word);
        if reduced == 0 {
            return None;
        }
        let hi = 63 - reduced.leading_zeros() as usize;
        self.pivots[hi] = reduced;
        self.rank += 1;
        Some(hi)
    }

    /// True if the column lies in the span of what was inserted so far.
    pub fn spans(&self, word: u64) -> bool {
        self.reduce(word) == 0
    }

    /// Undoes an `insert` that returned `Some(slot)`.
    ///
    /// Valid only in LIFO order: insertions never modify existing pivots,
    /// so clearing the slot restores the prior state exactly.
    pub fn remove(&mut self, slot: usize) {
        debug_assert!(self.pivots[slot] != 0);
        self.pivots[slot] = 0;
        self.rank -= 1;
    }
}

/// GF(2) rank of the selected columns; 0 for an empty selection.
pub fn rank_of_columns(m: &BitMatrix, sel: &ColumnSelection) -> Result<usize> {
    let mut elim = Elimination::new();
    for &j in sel.indices() {
        m.check_col(j)?;
        elim.insert(m.column_word(j));
    }
    Ok(elim.rank())
}

/// Rank of the columns flagged in `mask` (bit j = column j).
///
/// Mask-based twin of [`rank_of_columns`] used on hot paths; bits at or
/// beyond `cols` must be clear.
pub fn rank_of_mask(column_words: &[u64], mask: u64) -> usize {
    let mut elim = Elimination::new();
    let mut m = mask;
    while m != 0 {
        let j = m.trailing_zeros() as usize;
        m &= m - 1;
        elim.insert(column_words[j]);
    }
    elim.rank()
}

/// Output of [`standard_form`].
#[derive(Clone, Debug)]
pub struct StandardForm {
    /// Reduced row-echelon form of the input with zero rows removed;
    /// has exactly `rank` rows and an identity on `basis_columns`.
    pub reduced: BitMatrix,
    /// Pivot columns: the lexicographically first column basis.
    pub basis_columns: ColumnSelection,
    /// Maps positions of the `[I | D]` arrangement back to input columns:
    /// basis columns first, then the rest in order.
    pub permutation: Vec<usize>,
}

impl StandardForm {
    pub fn rank(&self) -> usize {
        self.basis_columns.len()
    }
}

/// Reduced row-echelon form with pivot bookkeeping.
///
/// Pivots are chosen greedily left to right, so `basis_columns` is the
/// lexicographically first maximal independent set of columns.
pub fn standard_form(m: &BitMatrix) -> StandardForm {
    let mut rows: Vec<u64> = (0..m.rows()).map(|i| m.row_word(i)).collect();
    let mut basis = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..m.cols() {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let pivot = rows[pivot_row];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
        basis.push(col);
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    let reduced = BitMatrix::from_rows(&rows, m.cols()).expect("reduction preserves shape");
    let mut permutation = basis.clone();
    let in_basis: u64 = basis.iter().fold(0, |acc, &b| acc | 1 << b);
    permutation.extend((0..m.cols()).filter(|&j| in_basis >> j & 1 == 0));
    StandardForm {
        reduced,
        basis_columns: ColumnSelection::new(basis, m.cols()).expect("pivots are valid columns"),
        permutation,
    }
}

/// Contracts the represented matroid by a non-loop column.
///
/// Pivots on the first 1-entry of `col`, then deletes that row and the
/// column. A zero column is a loop and must be deleted instead.
pub fn pivot_contract(m: &BitMatrix, col: usize) -> Result<BitMatrix> {
    m.check_col(col)?;
    let w = m.column_word(col);
    if w == 0 {
        return Err(Error::Precondition(format!(
            "column {col} is a loop; delete it instead of contracting"
        )));
    }
    let pivot_row = w.trailing_zeros() as usize;
    let pivot = m.row_word(pivot_row);
    let col_mask = 1u64 << col;
    let keep_lo = mask_lo(col);
    let mut rows = Vec::with_capacity(m.rows() - 1);
    for i in 0..m.rows() {
        if i == pivot_row {
            continue;
        }
        let mut r = m.row_word(i);
        if r & col_mask != 0 {
            r ^= pivot;
        }
        // drop the contracted column, shifting higher columns down by one
        rows.push((r & keep_lo) | ((r >> 1) & !keep_lo));
    }
    BitMatrix::from_rows(&rows, m.cols() - 1)
}

/// Span dimension guard for [`minimal_supports`].
pub const SUPPORT_SPAN_LIMIT: usize = 25;

/// Enumerates the minimal nonzero supports of the row space of `generators`.
///
/// Every nonzero vector of the span is generated (hence the dimension
/// guard), supports that strictly contain another support are discarded,
/// and the survivors are returned as column masks in set-lexicographic
/// order. `max_weight` filters by support size after minimality.
pub fn minimal_supports(generators: &BitMatrix, max_weight: Option<usize>) -> Result<Vec<u64>> {
    let mut elim = Elimination::new();
    let mut basis = Vec::new();
    for i in 0..generators.rows() {
        let w = generators.row_word(i);
        if elim.insert(w).is_some() {
            basis.push(w);
        }
    }
    let dim = elim.rank();
    if dim > SUPPORT_SPAN_LIMIT {
        return Err(Error::Capacity(format!(
            "span dimension {dim} exceeds the limit of {SUPPORT_SPAN_LIMIT}"
        )));
    }
    // Gray-code walk: one XOR per span vector.
    let mut vectors = Vec::with_capacity((1usize << dim).saturating_sub(1));
    let mut current = 0u64;
    let mut gray_prev = 0u64;
    for k in 1u64..(1u64 << dim) {
        let gray = k ^ (k >> 1);
        let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
        gray_prev = gray;
        current ^= basis[flipped];
        vectors.push(current);
    }
    // Sort by weight so every potential subset precedes its supersets.
    vectors.sort_unstable_by_key(|v| (v.count_ones(), *v));
    vectors.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    'outer: for v in vectors {
        for &m in &minimal {
            if m & v == m {
                continue 'outer;
            }
        }
        minimal.push(v);
    }
    if let Some(w) = max_weight {
        minimal.retain(|v| v.count_ones() as usize <= w);
    }
    minimal.sort_unstable_by(|a, b| cmp_sets_lex(*a, *b));
    Ok(minimal)
}

/// Basis of the null space of `m` (kernel vectors as column masks).
pub fn kernel_basis(m: &BitMatrix) -> Vec<u64> {
    let sf = standard_form(m);
    let r = sf.rank();
    let n = m.cols();
    let pivot_of_row: &[usize] = sf.basis_columns.indices();
    let in_basis: u64 = pivot_of_row.iter().fold(0, |acc, &b| acc | 1 << b);
    let mut out = Vec::with_capacity(n - r);
    for free in 0..n {
        if in_basis >> free & 1 == 1 {
            continue;
        }
        // x_free = 1; pivot variables read off the reduced rows.
        let mut v = 1u64 << free;
        for (row, &pivot) in pivot_of_row.iter().enumerate().take(r) {
            if sf.reduced.row_word(row) >> free & 1 == 1 {
                v |= 1u64 << pivot;
            }
        }
        out.push(v);
    }
    out
}

/// Compares two column masks as sorted index lists (set-lexicographic).
///
/// `{0,2} < {1}` because the lists `[0,2]` and `[1]` compare that way;
/// a set that is a prefix of another precedes it.
pub fn cmp_sets_lex(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = (a ^ b).trailing_zeros(); // sets agree strictly below d
    let a_has = a >> d & 1 == 1;
    let higher = if a_has { b } else { a } >> d; // other set's elements >= d
    match (a_has, higher != 0) {
        (true, true) => Ordering::Less, // a continues with d, b with something larger
        (true, false) => Ordering::Greater, // b is a strict prefix of a
        (false, true) => Ordering::Greater,
        (false, false) => Ordering::Less,
    }
}

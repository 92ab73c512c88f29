//! The connectivity function, separation search (exhaustive and
//! branch-and-bound), connectivity decisions up to internal
//! 4-connectivity, sequential-separation analysis, and fan detection.

use crate::error::{Error, Result};
use crate::gf2::Elimination;
use crate::matroid::{BinaryMatroid, ElementSet};
use std::time::{Duration, Instant};

/// The connectivity function `λ(X) = r(X) + r(E−X) − r(M)`.
pub fn lambda(m: &BinaryMatroid, x: ElementSet) -> usize {
    let l = m.rank(x) + m.rank(m.ground_set().difference(x)) - m.full_rank();
    debug_assert_eq!(l, m.rank(x) + m.corank(x) - x.len());
    l
}

/// `λ(X) ≤ k − 1`.
pub fn is_k_separating(m: &BinaryMatroid, x: ElementSet, k: usize) -> bool {
    assert!(k >= 1);
    lambda(m, x) < k
}

/// A k-separating partition with both sides of size at least `k`.
pub fn is_k_separation(m: &BinaryMatroid, x: ElementSet, k: usize) -> bool {
    let y = m.ground_set().difference(x);
    is_k_separating(m, x, k) && x.len() >= k && y.len() >= k
}

/// What a returned separation certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparationKind {
    /// A `k`-separating side; a genuine `k`-separation whenever both
    /// recorded sizes are at least `k`.
    KSeparation(usize),
    /// λ ≤ 2 with both sides of size ≥ 4.
    Violator43,
    /// A 4-fan side: the violator is a triangle plus a triad.
    Fan4,
    /// Marked sequential by separation analysis.
    Sequential,
}

/// A certified partition: the X side, its λ value, and both sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub side_x: ElementSet,
    pub lambda: usize,
    pub kind: SeparationKind,
    pub sizes: (usize, usize),
}

impl SeparationWitness {
    /// Recomputes everything this witness claims against `m`.
    pub fn revalidate(&self, m: &BinaryMatroid) -> bool {
        let y = m.ground_set().difference(self.side_x);
        if lambda(m, self.side_x) != self.lambda || (self.side_x.len(), y.len()) != self.sizes {
            return false;
        }
        match self.kind {
            SeparationKind::KSeparation(k) => self.lambda < k,
            SeparationKind::Violator43 => {
                self.lambda <= 2 && self.side_x.len() >= 4 && y.len() >= 4
            }
            SeparationKind::Fan4 => {
                self.lambda <= 2
                    && self.side_x.len() >= 4
                    && y.len() >= 4
                    && (is_4fan_set(m, self.side_x) || is_4fan_set(m, y))
            }
            SeparationKind::Sequential => self.lambda <= 2,
        }
    }
}

/// True if `s` is a 4-element set containing a triangle and a triad.
pub fn is_4fan_set(m: &BinaryMatroid, s: ElementSet) -> bool {
    if s.len() != 4 {
        return false;
    }
    let has_triangle = m.triangles().sets().iter().any(|t| t.is_subset_of(s));
    has_triangle && m.triads().sets().iter().any(|t| t.is_subset_of(s))
}

/// Search strategy for [`find_separation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Scans all subsets in set-lexicographic order; the returned
    /// witness is the lexicographically least valid side.
    Exhaustive,
    /// Depth-first side assignment with rank-based pruning.
    BranchAndBound,
}

/// Node and wall-clock limits for a separation search.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub strategy: SearchStrategy,
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            strategy: SearchStrategy::BranchAndBound,
            node_limit: 1_000_000_000,
            time_limit: Duration::from_secs(3600),
        }
    }
}

impl SearchBudget {
    pub fn exhaustive() -> Self {
        Self {
            strategy: SearchStrategy::Exhaustive,
            ..Self::default()
        }
    }

    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = nodes;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = limit;
        self
    }
}

/// Outcome of a separation search. `NotFound` is a proof of
/// nonexistence; `Indeterminate` means the budget ran out first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SeparationWitness),
    NotFound,
    Indeterminate,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&SeparationWitness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_determinate(&self) -> bool {
        !matches!(self, SearchOutcome::Indeterminate)
    }
}

/// Three-valued verdict for a connectivity property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Holds,
    Fails(SeparationWitness),
    Indeterminate,
}

impl Decision {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Decision::Holds => Some(true),
            Decision::Fails(_) => Some(false),
            Decision::Indeterminate => None,
        }
    }

    pub fn witness(&self) -> Option<&SeparationWitness> {
        match self {
            Decision::Fails(w) => Some(w),
            _ => None,
        }
    }
}

/// Searches for a partition `(X, Y)` with `λ(X) ≤ lambda_bound`,
/// `|X| ≥ min_x`, and `|Y| ≥ min_y` (either orientation).
///
/// Bounds are tried in increasing order, so the witness of a `Found`
/// outcome carries the minimum λ over all qualifying partitions —
/// both strategies therefore agree on `(exists, λ)` exactly. The
/// witness `kind` is `KSeparation(λ + 1)`.
pub fn find_separation(
    m: &BinaryMatroid,
    lambda_bound: usize,
    min_x: usize,
    min_y: usize,
    budget: &SearchBudget,
) -> SearchOutcome {
    assert!(min_x >= 1 && min_y >= 1, "side minimums must be positive");
    let n = m.size();
    if min_x + min_y > n {
        return SearchOutcome::NotFound;
    }
    let mut ticker = BudgetTicker::new(budget);
    for bound in 0..=lambda_bound {
        let outcome = match budget.strategy {
            SearchStrategy::Exhaustive => exhaustive_search(m, bound, min_x, min_y, &mut ticker),
            SearchStrategy::BranchAndBound => branch_and_bound(m, bound, min_x, min_y, &mut ticker),
        };
        match outcome {
            SearchOutcome::NotFound => continue,
            found_or_out => return found_or_out,
        }
    }
    SearchOutcome::NotFound
}

/// Shared node/time accounting across the deepening rounds.
struct BudgetTicker {
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
    exhausted: bool,
}

impl BudgetTicker {
    fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: 0,
            node_limit: budget.node_limit,
            deadline: Instant::now() + budget.time_limit,
            exhausted: false,
        }
    }

    /// Counts a node; returns false once the budget is exhausted.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit
            || (self.nodes & 0xFFF == 0 && Instant::now() > self.deadline)
        {
            self.exhausted = true;
            return false;
        }
        true
    }
}

fn witness(m: &BinaryMatroid, x: ElementSet, lambda_value: usize) -> SeparationWitness {
    SeparationWitness {
        side_x: x,
        lambda: lambda_value,
        kind: SeparationKind::KSeparation(lambda_value + 1),
        sizes: (x.len(), m.size() - x.len()),
    }
}

fn sizes_ok(a: usize, b: usize, min_x: usize, min_y: usize) -> bool {
    (a >= min_x && b >= min_y) || (a >= min_y && b >= min_x)
}

/// Subset scan in set-lexicographic order over sides containing
/// element 0 (the complement makes that loss-free). First hit is the
/// lexicographically least valid side.
fn exhaustive_search(
    m: &BinaryMatroid,
    bound: usize,
    min_x: usize,
    min_y: usize,
    ticker: &mut BudgetTicker,
) -> SearchOutcome {
    let n = m.size();
    if n == 0 {
        return SearchOutcome::NotFound;
    }
    let mut stack = vec![(ElementSet::singleton(0), 0usize)];
    while let Some((x, last)) = stack.pop() {
        if !ticker.tick() {
            return SearchOutcome::Indeterminate;
        }
        if sizes_ok(x.len(), n - x.len(), min_x, min_y) {
            let l = lambda(m, x);
            if l <= bound {
                return SearchOutcome::Found(witness(m, x, l));
            }
        }
        // grow by a larger index; pushed in reverse to pop in lex order
        for next in (last + 1..n).rev() {
            stack.push((x.with(next), next));
        }
    }
    SearchOutcome::NotFound
}

/// Depth-first side assignment in descending triangle-fanout order.
///
/// Pruning: for partial sides `A ⊆ X` and `B ⊆ Y`, every completion
/// satisfies `r(X) + r(Y) ≥ r(A) + r(B) + r(M) − r(A ∪ B)` — each unit
/// of span the unassigned elements add must land on one of the sides.
/// So `r(A) + r(B) − r(A ∪ B) > bound` kills the subtree. The first
/// element in the order is pinned to `X` to break complement symmetry.
fn branch_and_bound(
    m: &BinaryMatroid,
    bound: usize,
    min_x: usize,
    min_y: usize,
    ticker: &mut BudgetTicker,
) -> SearchOutcome {
    let n = m.size();
    if n == 0 {
        return SearchOutcome::NotFound;
    }
    let mut order: Vec<usize> = (0..n).collect();
    let fanout = m.triangles().counts();
    order.sort_by_key(|&e| (std::cmp::Reverse(fanout[e]), e));

    let mut search = Assignment {
        words: m.column_words(),
        order: &order,
        bound,
        min_x,
        min_y,
        n,
        x_side: ElementSet::EMPTY,
        y_side: ElementSet::EMPTY,
        x_elim: Elimination::new(),
        y_elim: Elimination::new(),
        union_elim: Elimination::new(),
    };
    match search.descend(0, ticker) {
        Descent::Found(x) => {
            let l = lambda(m, x);
            SearchOutcome::Found(witness(m, x, l))
        }
        Descent::Exhausted => SearchOutcome::NotFound,
        Descent::BudgetOut => SearchOutcome::Indeterminate,
    }
}

enum Descent {
    Found(ElementSet),
    Exhausted,
    BudgetOut,
}

struct Assignment<'a> {
    words: &'a [u64],
    order: &'a [usize],
    bound: usize,
    min_x: usize,
    min_y: usize,
    n: usize,
    x_side: ElementSet,
    y_side: ElementSet,
    x_elim: Elimination,
    y_elim: Elimination,
    union_elim: Elimination,
}

impl Assignment<'_> {
    fn descend(&mut self, depth: usize, ticker: &mut BudgetTicker) -> Descent {
        if !ticker.tick() {
            return Descent::BudgetOut;
        }
        let guaranteed = self.x_elim.rank() + self.y_elim.rank() - self.union_elim.rank();
        if guaranteed > self.bound {
            return Descent::Exhausted;
        }
        if depth == self.n {
            if sizes_ok(self.x_side.len(), self.y_side.len(), self.min_x, self.min_y) {
                return Descent::Found(self.x_side);
            }
            return Descent::Exhausted;
        }
        let remaining = self.n - depth;
        let feasible = |a: usize, b: usize| {
            self.x_side.len() + remaining >= a && self.y_side.len() + remaining >= b
        };
        if !feasible(self.min_x, self.min_y) && !feasible(self.min_y, self.min_x) {
            return Descent::Exhausted;
        }
        let e = self.order[depth];
        let word = self.words[e];
        let union_slot = self.union_elim.insert(word);

        // try X; the first element only ever goes to X
        let slot = self.x_elim.insert(word);
        self.x_side = self.x_side.with(e);
        let verdict = self.descend(depth + 1, ticker);
        self.x_side = self.x_side.without(e);
        if let Some(s) = slot {
            self.x_elim.remove(s);
        }
        if !matches!(verdict, Descent::Exhausted) {
            if let Some(s) = union_slot {
                self.union_elim.remove(s);
            }
            return verdict;
        }

        let verdict = if depth == 0 {
            Descent::Exhausted
        } else {
            let slot = self.y_elim.insert(word);
            self.y_side = self.y_side.with(e);
            let verdict = self.descend(depth + 1, ticker);
            self.y_side = self.y_side.without(e);
            if let Some(s) = slot {
                self.y_elim.remove(s);
            }
            verdict
        };
        if let Some(s) = union_slot {
            self.union_elim.remove(s);
        }
        verdict
    }
}

/// `n`-connectivity for `n ∈ {2, 3, 4}`: no k-separations for `k < n`.
pub fn is_n_connected(m: &BinaryMatroid, n: usize, budget: &SearchBudget) -> Result<Decision> {
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "connectivity order {n} out of supported range 2..=4"
        )));
    }
    for k in 1..n {
        match find_separation(m, k - 1, k, k, budget) {
            SearchOutcome::Found(mut w) => {
                w.kind = SeparationKind::KSeparation(k);
                return Ok(Decision::Fails(w));
            }
            SearchOutcome::NotFound => {}
            SearchOutcome::Indeterminate => return Ok(Decision::Indeterminate),
        }
    }
    Ok(Decision::Holds)
}

/// Searches for a 3-separation with both sides of size ≥ 4, the
/// certificate that a 3-connected matroid is not internally
/// 4-connected. Fan sides are classified as such.
pub fn find_43_violator(m: &BinaryMatroid, budget: &SearchBudget) -> SearchOutcome {
    match find_separation(m, 2, 4, 4, budget) {
        SearchOutcome::Found(mut w) => {
            let y = m.ground_set().difference(w.side_x);
            w.kind = if is_4fan_set(m, w.side_x) || is_4fan_set(m, y) {
                SeparationKind::Fan4
            } else {
                SeparationKind::Violator43
            };
            SearchOutcome::Found(w)
        }
        other => other,
    }
}

/// Internal 4-connectivity: 3-connected with no (4,3)-violator.
///
/// In a 3-connected binary matroid every 3-separating 3-set is a
/// triangle or a triad, so the two conditions together are equivalent
/// to the triangle-or-triad form of the definition.
pub fn is_internally_4_connected(m: &BinaryMatroid, budget: &SearchBudget) -> Decision {
    match is_n_connected(m, 3, budget).expect("order 3 is in range") {
        Decision::Holds => {}
        other => return other,
    }
    match find_43_violator(m, budget) {
        SearchOutcome::Found(w) => Decision::Fails(w),
        SearchOutcome::NotFound => Decision::Holds,
        SearchOutcome::Indeterminate => Decision::Indeterminate,
    }
}

/// The peel certificate of a sequential separation: the sequential
/// side and an ordering that absorbs it element by element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelOrder {
    pub side: ElementSet,
    pub order: Vec<usize>,
}

/// Decides whether the k-separation `(X, E−X)` is sequential, i.e.
/// `fcl(X)` or `fcl(E−X)` is everything.
///
/// When it is, returns the sequential side and a greedy peel ordering
/// of it such that moving each prefix across keeps the partition
/// k-separating.
pub fn is_sequential(m: &BinaryMatroid, x: ElementSet, k: usize) -> Result<Option<PeelOrder>> {
    if !is_k_separation(m, x, k) {
        return Err(Error::Precondition(format!(
            "({x:?}, complement) is not a {k}-separation"
        )));
    }
    let ground = m.ground_set();
    let anchor = if m.full_closure(x) == ground {
        x
    } else if m.full_closure(ground.difference(x)) == ground {
        ground.difference(x)
    } else {
        return Ok(None);
    };
    let mut absorbed = anchor;
    let mut order = Vec::new();
    while absorbed != ground {
        let movable = m
            .closure(absorbed)
            .union(m.coclosure(absorbed))
            .difference(absorbed);
        let e = movable
            .min_element()
            .expect("full closure reaches the ground set");
        debug_assert!(is_k_separating(m, absorbed.with(e), k));
        absorbed = absorbed.with(e);
        order.push(e);
    }
    Ok(Some(PeelOrder {
        side: ground.difference(anchor),
        order,
    }))
}

/// All 4-fans: (triangle, triad) pairs sharing exactly two elements,
/// in set-lexicographic order of (union, triangle, triad).
pub fn find_4fans(m: &BinaryMatroid) -> Vec<(ElementSet, ElementSet)> {
    let triangles = m.triangles();
    let triads = m.triads();
    let mut fans = Vec::new();
    for t in triangles.sets() {
        for s in triads.sets() {
            if t.intersection(*s).len() == 2 {
                fans.push((t.union(*s), *t, *s));
            }
        }
    }
    fans.sort();
    fans.into_iter().map(|(_, t, s)| (t, s)).collect()
}

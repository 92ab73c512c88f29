//! Structure audits and the contractible-elements verifier.
//!
//! Each audit checks the hypotheses of the claim it verifies before
//! judging the conclusion, and reports `applicable = false` instead of
//! a verdict when they fail — applying a conclusion outside its
//! hypotheses is the audit equivalent of a false positive.

use crate::connectivity::{
    is_internally_4_connected, is_n_connected, Decision, SearchBudget, SeparationWitness,
};
use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, ElementSet};
use rayon::prelude::*;

/// Triangle membership counts per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    /// Count by column index.
    pub per_element: Vec<usize>,
    /// Set when every element has the same count.
    pub uniform_k: Option<usize>,
    pub total_triangles: usize,
}

/// Counts triangles through each element.
///
/// A uniform count of three forces the triangle total to equal the
/// ground set size (double counting of element-triangle incidences);
/// that identity is asserted, not just reported.
pub fn triangle_census(m: &BinaryMatroid) -> CensusReport {
    let triangles = m.triangles();
    let per_element = triangles.counts();
    let uniform_k = match per_element.as_slice() {
        [] => None,
        [first, rest @ ..] => rest.iter().all(|c| c == first).then_some(*first),
    };
    if uniform_k == Some(3) {
        assert_eq!(
            triangles.len(),
            m.size(),
            "a uniform-3 census forces one triangle per element"
        );
    }
    CensusReport {
        per_element,
        uniform_k,
        total_triangles: triangles.len(),
    }
}

/// Pass/fail outcome of one audited claim, with hypothesis gating.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub audit_name: &'static str,
    /// Whether the claim's hypotheses hold for this matroid.
    pub applicable: bool,
    /// Verdict on the conclusion; present exactly when applicable.
    pub passed: Option<bool>,
    pub witnesses: Vec<AuditWitness>,
    pub notes: Vec<String>,
}

impl AuditReport {
    fn gated(name: &'static str, notes: Vec<String>) -> Self {
        Self {
            audit_name: name,
            applicable: false,
            passed: None,
            witnesses: Vec::new(),
            notes,
        }
    }
}

/// Evidence attached to an audit verdict.
#[derive(Clone, Debug)]
pub enum AuditWitness {
    /// A cocircuit of odd size.
    OddCocircuit(ElementSet),
    /// A contraction that breaks the audited conclusion.
    BadContraction {
        element: usize,
        failure: ContractionFailure,
    },
}

/// Why `si(M/e)` failed a requirement. Sets and witnesses live in the
/// ground set of `si(M/e)`, which is recomputed deterministically.
#[derive(Clone, Debug)]
pub enum ContractionFailure {
    NotThreeConnected(SeparationWitness),
    Violator(SeparationWitness),
    HasTriads(Vec<ElementSet>),
}

/// Verdict on one element's simplified contraction.
#[derive(Clone, Debug)]
pub enum ElementGoodness {
    /// `si(M/e)` is internally 4-connected.
    Good,
    Bad(ContractionFailure),
    /// The search budget ran out.
    Unknown,
}

/// Decides whether `si(M/e)` is internally 4-connected.
pub fn contraction_goodness(m: &BinaryMatroid, e: usize, budget: &SearchBudget) -> ElementGoodness {
    let (si, _) = match m.si_contract(e) {
        Ok(pair) => pair,
        Err(_) => return ElementGoodness::Unknown, // loops are the caller's concern
    };
    match is_n_connected(&si, 3, budget).expect("order in range") {
        Decision::Fails(w) => {
            return ElementGoodness::Bad(ContractionFailure::NotThreeConnected(w))
        }
        Decision::Indeterminate => return ElementGoodness::Unknown,
        Decision::Holds => {}
    }
    match is_internally_4_connected(&si, budget) {
        Decision::Holds => ElementGoodness::Good,
        Decision::Fails(w) => ElementGoodness::Bad(ContractionFailure::Violator(w)),
        Decision::Indeterminate => ElementGoodness::Unknown,
    }
}

fn i4c_or_err(
    m: &BinaryMatroid,
    budget: &SearchBudget,
    context: &str,
) -> Result<Option<SeparationWitness>> {
    match is_internally_4_connected(m, budget) {
        Decision::Holds => Ok(None),
        Decision::Fails(w) => Ok(Some(w)),
        Decision::Indeterminate => Err(Error::BudgetExhausted(context.to_string())),
    }
}

/// Audits the parity claim: an internally 4-connected binary matroid
/// with a uniform-3 triangle census has no odd cocircuit.
///
/// Odd cocircuits are listed as witnesses even when the hypotheses
/// fail, as information.
pub fn odd_cocircuit_audit(m: &BinaryMatroid, budget: &SearchBudget) -> Result<AuditReport> {
    let name = "odd-cocircuit";
    let census = triangle_census(m);
    let odd: Vec<AuditWitness> = m
        .cocircuits()?
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(AuditWitness::OddCocircuit)
        .collect();
    let mut notes = Vec::new();
    if census.uniform_k != Some(3) {
        notes.push(format!(
            "census is not uniform-3 (uniform_k = {:?}); odd cocircuits listed as information",
            census.uniform_k
        ));
        return Ok(AuditReport {
            witnesses: odd,
            ..AuditReport::gated(name, notes)
        });
    }
    if let Some(w) = i4c_or_err(m, budget, "checking internal 4-connectivity")? {
        notes.push(format!(
            "not internally 4-connected (lambda {} witness of sizes {:?})",
            w.lambda, w.sizes
        ));
        return Ok(AuditReport {
            witnesses: odd,
            ..AuditReport::gated(name, notes)
        });
    }
    Ok(AuditReport {
        audit_name: name,
        applicable: true,
        passed: Some(odd.is_empty()),
        witnesses: odd,
        notes,
    })
}

/// Audits: contracting any element of an internally 4-connected binary
/// matroid leaves a 3-connected simplification.
pub fn contraction_3conn_audit(m: &BinaryMatroid, budget: &SearchBudget) -> Result<AuditReport> {
    let name = "contraction-3-connected";
    if let Some(w) = i4c_or_err(m, budget, "checking internal 4-connectivity")? {
        return Ok(AuditReport::gated(
            name,
            vec![format!(
                "not internally 4-connected (lambda {} witness of sizes {:?})",
                w.lambda, w.sizes
            )],
        ));
    }
    let loops = m.loops();
    let verdicts: Vec<(usize, Option<SeparationWitness>)> = (0..m.size())
        .filter(|e| !loops.contains(*e))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|e| {
            let (si, _) = m.si_contract(e).expect("non-loop");
            let verdict = is_n_connected(&si, 3, budget).expect("order in range");
            (e, verdict.witness().cloned())
        })
        .collect();
    let mut witnesses = Vec::new();
    for (e, w) in verdicts {
        if let Some(w) = w {
            witnesses.push(AuditWitness::BadContraction {
                element: e,
                failure: ContractionFailure::NotThreeConnected(w),
            });
        }
    }
    Ok(AuditReport {
        audit_name: name,
        applicable: true,
        passed: Some(witnesses.is_empty()),
        witnesses,
        notes: Vec::new(),
    })
}

/// The standing hypotheses shared by the small-cocircuit audits:
/// internally
/// 4-connected, uniform-3 census, and at least 14 elements.
///
/// Returns gating notes when they fail.
fn small_cocircuit_gate(
    m: &BinaryMatroid,
    budget: &SearchBudget,
) -> Result<std::result::Result<(), Vec<String>>> {
    let mut notes = Vec::new();
    let census = triangle_census(m);
    if census.uniform_k != Some(3) {
        notes.push(format!(
            "census is not uniform-3 (uniform_k = {:?})",
            census.uniform_k
        ));
    }
    if m.size() < 14 {
        notes.push(format!("|E| = {} is below the size gate of 14", m.size()));
    }
    if notes.is_empty() {
        if let Some(w) = i4c_or_err(m, budget, "checking internal 4-connectivity")? {
            notes.push(format!(
                "not internally 4-connected (lambda {} witness of sizes {:?})",
                w.lambda, w.sizes
            ));
        }
    }
    Ok(if notes.is_empty() { Ok(()) } else { Err(notes) })
}

/// Checks one contraction for the 4-cocircuit audit's conclusion:
/// internally 4-connected with no triads.
fn goodness_with_triads(
    m: &BinaryMatroid,
    e: usize,
    budget: &SearchBudget,
) -> Result<Option<ContractionFailure>> {
    match contraction_goodness(m, e, budget) {
        ElementGoodness::Bad(f) => return Ok(Some(f)),
        ElementGoodness::Unknown => {
            return Err(Error::BudgetExhausted(format!(
                "deciding si(M/{})",
                m.label(e)
            )))
        }
        ElementGoodness::Good => {}
    }
    let (si, _) = m.si_contract(e).expect("non-loop");
    let triads: Vec<ElementSet> = si.triads().sets().to_vec();
    if triads.is_empty() {
        Ok(None)
    } else {
        Ok(Some(ContractionFailure::HasTriads(triads)))
    }
}

/// Audits the 4-cocircuit claim: under the standing hypotheses, every
/// element of a 4-element cocircuit contracts to an internally
/// 4-connected simplification with no triads.
///
/// For small matroids below the size gate that do have 4-cocircuits,
/// the conclusion is evaluated anyway and recorded as a note — it can
/// genuinely fail there, which is what the gate is for.
pub fn four_cocircuit_audit(m: &BinaryMatroid, budget: &SearchBudget) -> Result<AuditReport> {
    let name = "four-cocircuit-contractions";
    match small_cocircuit_gate(m, budget)? {
        Ok(()) => {}
        Err(mut notes) => {
            if m.size() <= 13 && m.size() >= 4 {
                if let Ok(cocircuits) = m.cocircuits() {
                    let fours: Vec<ElementSet> =
                        cocircuits.into_iter().filter(|c| c.len() == 4).collect();
                    if !fours.is_empty() {
                        let mut would_fail = false;
                        for c in &fours {
                            for e in c.iter() {
                                if goodness_with_triads(m, e, budget)?.is_some() {
                                    would_fail = true;
                                }
                            }
                        }
                        notes.push(format!(
                            "information: on this gated instance the conclusion would {}",
                            if would_fail { "fail" } else { "hold" }
                        ));
                    }
                }
            }
            return Ok(AuditReport::gated(name, notes));
        }
    }
    let fours: Vec<ElementSet> = m
        .cocircuits()?
        .into_iter()
        .filter(|c| c.len() == 4)
        .collect();
    let mut notes = Vec::new();
    if fours.is_empty() {
        notes.push("no 4-element cocircuits; the conclusion holds vacuously".into());
    }
    let mut targets = ElementSet::EMPTY;
    for c in &fours {
        targets = targets.union(*c);
    }
    let checked: Vec<usize> = targets.iter().collect();
    let failures: Vec<(usize, Option<ContractionFailure>)> = checked
        .into_par_iter()
        .map(|e| goodness_with_triads(m, e, budget).map(|f| (e, f)))
        .collect::<Result<_>>()?;
    let witnesses: Vec<AuditWitness> = failures
        .into_iter()
        .filter_map(|(element, failure)| {
            failure.map(|failure| AuditWitness::BadContraction { element, failure })
        })
        .collect();
    Ok(AuditReport {
        audit_name: name,
        applicable: true,
        passed: Some(witnesses.is_empty()),
        witnesses,
        notes,
    })
}

/// The configurations the triangle-union audit checks: elements `e`
/// for which the union of the triangles through `e`, minus `e`, is a
/// cocircuit, paired with that cocircuit.
pub fn triangle_union_cocircuits(m: &BinaryMatroid) -> Result<Vec<(usize, ElementSet)>> {
    let triangles = m.triangles();
    let cocircuits = m.cocircuits()?;
    let mut out = Vec::new();
    for e in 0..m.size() {
        let mut union = ElementSet::EMPTY;
        for &t in triangles.containing(e) {
            union = union.union(triangles.get(t));
        }
        let candidate = union.without(e);
        if !candidate.is_empty() && cocircuits.contains(&candidate) {
            out.push((e, candidate));
        }
    }
    Ok(out)
}

/// Audits the triangle-union claim: under the standing hypotheses, if
/// the union of the three triangles through `e`, minus `e`, is a
/// cocircuit, then every element of that cocircuit contracts well.
pub fn triangle_union_cocircuit_audit(
    m: &BinaryMatroid,
    budget: &SearchBudget,
) -> Result<AuditReport> {
    let name = "triangle-union-cocircuit";
    match small_cocircuit_gate(m, budget)? {
        Ok(()) => {}
        Err(notes) => return Ok(AuditReport::gated(name, notes)),
    }
    let configurations = triangle_union_cocircuits(m)?;
    let mut targets = ElementSet::EMPTY;
    for (_, cocircuit) in &configurations {
        targets = targets.union(*cocircuit);
    }
    let mut notes = Vec::new();
    if configurations.is_empty() {
        notes.push("no triangle-union cocircuit configurations; vacuous pass".into());
    } else {
        notes.push(format!("{} configuration(s) found", configurations.len()));
    }
    let checked: Vec<usize> = targets.iter().collect();
    let witnesses: Vec<AuditWitness> = checked
        .into_par_iter()
        .map(|e| {
            Ok(match contraction_goodness(m, e, budget) {
                ElementGoodness::Good => None,
                ElementGoodness::Bad(failure) => Some(AuditWitness::BadContraction {
                    element: e,
                    failure,
                }),
                ElementGoodness::Unknown => {
                    return Err(Error::BudgetExhausted(format!(
                        "deciding si(M/{})",
                        m.label(e)
                    )))
                }
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(AuditReport {
        audit_name: name,
        applicable: true,
        passed: Some(witnesses.is_empty()),
        witnesses,
        notes,
    })
}

/// Whether a 6-element cocircuit splits as two 4-circuits that share
/// exactly two elements and together cover it.
pub fn has_spike_pattern(m: &BinaryMatroid, cocircuit: ElementSet) -> Result<bool> {
    if cocircuit.len() != 6 {
        return Ok(false);
    }
    let restricted = m.restrict(cocircuit);
    let order: Vec<usize> = cocircuit.iter().collect();
    let four_circuits: Vec<ElementSet> = restricted
        .circuits(4)?
        .into_iter()
        .filter(|c| c.len() == 4)
        .map(|c| c.iter().map(|i| order[i]).collect())
        .collect();
    Ok(four_circuits.iter().enumerate().any(|(i, a)| {
        four_circuits[i + 1..]
            .iter()
            .any(|b| a.intersection(*b).len() == 2 && a.union(*b) == cocircuit)
    }))
}

/// Audits the 6-cocircuit claim: under the standing hypotheses, a
/// 6-cocircuit that is the union of two 4-circuits meeting in two
/// elements has all six contractions internally 4-connected.
pub fn spike_cocircuit_audit(m: &BinaryMatroid, budget: &SearchBudget) -> Result<AuditReport> {
    let name = "spike-cocircuit";
    match small_cocircuit_gate(m, budget)? {
        Ok(()) => {}
        Err(notes) => return Ok(AuditReport::gated(name, notes)),
    }
    let mut targets = ElementSet::EMPTY;
    let mut configurations = 0usize;
    for c in m.cocircuits()?.into_iter().filter(|c| c.len() == 6) {
        if has_spike_pattern(m, c)? {
            configurations += 1;
            targets = targets.union(c);
        }
    }
    let mut notes = Vec::new();
    if configurations == 0 {
        notes.push("no qualifying 6-cocircuits; vacuous pass".into());
    } else {
        notes.push(format!("{configurations} qualifying 6-cocircuit(s)"));
    }
    let checked: Vec<usize> = targets.iter().collect();
    let witnesses: Vec<AuditWitness> = checked
        .into_par_iter()
        .map(|e| {
            Ok(match contraction_goodness(m, e, budget) {
                ElementGoodness::Good => None,
                ElementGoodness::Bad(failure) => Some(AuditWitness::BadContraction {
                    element: e,
                    failure,
                }),
                ElementGoodness::Unknown => {
                    return Err(Error::BudgetExhausted(format!(
                        "deciding si(M/{})",
                        m.label(e)
                    )))
                }
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(AuditReport {
        audit_name: name,
        applicable: true,
        passed: Some(witnesses.is_empty()),
        witnesses,
        notes,
    })
}

/// Audits the small-instance classification: an internally
/// 4-connected binary matroid with a uniform-3 census on at most 13
/// elements must be one of the two known examples.
pub fn small_classification_check(m: &BinaryMatroid, budget: &SearchBudget) -> Result<AuditReport> {
    let name = "small-classification";
    let census = triangle_census(m);
    let mut notes = Vec::new();
    if census.uniform_k != Some(3) {
        notes.push(format!(
            "census is not uniform-3 (uniform_k = {:?})",
            census.uniform_k
        ));
    }
    if m.size() > 13 {
        notes.push(format!("|E| = {} exceeds the size gate of 13", m.size()));
    }
    if notes.is_empty() {
        if let Some(w) = i4c_or_err(m, budget, "checking internal 4-connectivity")? {
            notes.push(format!(
                "not internally 4-connected (lambda {} witness of sizes {:?})",
                w.lambda, w.sizes
            ));
        }
    }
    if !notes.is_empty() {
        return Ok(AuditReport::gated(name, notes));
    }
    let fano = crate::constructions::catalog(&crate::constructions::CatalogId::F7)?;
    let mk5 = crate::constructions::catalog(&crate::constructions::CatalogId::MK5)?;
    let matched = if m.is_isomorphic(&fano)?.is_some() {
        Some("f7")
    } else if m.is_isomorphic(&mk5)?.is_some() {
        Some("mk5")
    } else {
        None
    };
    if let Some(which) = matched {
        notes.push(format!("isomorphic to {which}"));
    }
    Ok(AuditReport {
        audit_name: name,
        applicable: true,
        passed: Some(matched.is_some()),
        witnesses: Vec::new(),
        notes,
    })
}

/// How the small-S cocircuit clause of the verified claim came out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocircuitClause {
    /// Six or more good elements: the clause says nothing.
    NotTriggered,
    /// The good elements sit inside this 4-element cocircuit.
    Satisfied(ElementSet),
    Violated,
    /// Exactly five good elements cannot fit in a 4-cocircuit and the
    /// claim does not address that count; reported, not judged.
    AmbiguousSize5,
}

/// Full verification record of the contractible-elements claim on
/// one matroid.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub hypotheses_ok: bool,
    pub hypothesis_notes: Vec<String>,
    /// Elements whose simplified contraction is internally 4-connected.
    pub good: ElementSet,
    pub bad: Vec<(usize, ContractionFailure)>,
    /// Elements whose verdict ran out of budget.
    pub unknown: ElementSet,
    pub min4_ok: bool,
    pub cocircuit_clause: CocircuitClause,
}

impl TheoremReport {
    pub fn indeterminate(&self) -> bool {
        !self.unknown.is_empty()
    }

    /// Overall verdict: hypotheses hold, at least four
    /// good elements, and the small-S clause not violated.
    pub fn verdict_ok(&self) -> bool {
        self.hypotheses_ok && self.min4_ok && self.cocircuit_clause != CocircuitClause::Violated
    }
}

/// Verifies the contractible-elements claim on `m`: computes the set
/// `S` of elements
/// with internally 4-connected simplified contraction, requires
/// `|S| >= 4`, and when `|S| < 6` looks for a 4-element cocircuit
/// containing `S`.
///
/// Elements are checked independently (in parallel when a thread pool
/// is available); each element gets the full budget, so verdicts do
/// not depend on scheduling. Glue-labeled elements (`a`..`f`) are
/// queued first so a counterexample-shaped input fails fast.
pub fn theorem_verifier(m: &BinaryMatroid, budget: &SearchBudget) -> Result<TheoremReport> {
    let mut hypothesis_notes = Vec::new();
    let census = triangle_census(m);
    if census.uniform_k != Some(3) {
        hypothesis_notes.push(format!(
            "census is not uniform-3 (uniform_k = {:?})",
            census.uniform_k
        ));
    }
    if hypothesis_notes.is_empty() {
        if let Some(w) = i4c_or_err(m, budget, "checking internal 4-connectivity")? {
            hypothesis_notes.push(format!(
                "not internally 4-connected (lambda {} witness of sizes {:?})",
                w.lambda, w.sizes
            ));
        }
    }
    if !hypothesis_notes.is_empty() {
        return Ok(TheoremReport {
            hypotheses_ok: false,
            hypothesis_notes,
            good: ElementSet::EMPTY,
            bad: Vec::new(),
            unknown: ElementSet::EMPTY,
            min4_ok: false,
            cocircuit_clause: CocircuitClause::NotTriggered,
        });
    }

    let glue_labels = ["a", "b", "c", "d", "e", "f"];
    let loops = m.loops();
    let mut scan: Vec<usize> = (0..m.size()).filter(|e| !loops.contains(*e)).collect();
    scan.sort_by_key(|&e| (!glue_labels.contains(&m.label(e)), e));
    if !loops.is_empty() {
        hypothesis_notes.push(format!("skipped {} loop element(s)", loops.len()));
    }

    let verdicts: Vec<(usize, ElementGoodness)> = scan
        .into_par_iter()
        .map(|e| (e, contraction_goodness(m, e, budget)))
        .collect();
    let mut good = ElementSet::EMPTY;
    let mut unknown = ElementSet::EMPTY;
    let mut bad = Vec::new();
    for (e, verdict) in verdicts {
        match verdict {
            ElementGoodness::Good => good = good.with(e),
            ElementGoodness::Bad(f) => bad.push((e, f)),
            ElementGoodness::Unknown => unknown = unknown.with(e),
        }
    }
    bad.sort_by_key(|(e, _)| *e);

    let cocircuit_clause = if good.len() >= 6 {
        CocircuitClause::NotTriggered
    } else if good.len() == 5 {
        CocircuitClause::AmbiguousSize5
    } else {
        let hit = m
            .cocircuits()?
            .into_iter()
            .find(|c| c.len() == 4 && good.is_subset_of(*c));
        match hit {
            Some(c) => CocircuitClause::Satisfied(c),
            None => CocircuitClause::Violated,
        }
    };
    Ok(TheoremReport {
        hypotheses_ok: true,
        hypothesis_notes,
        min4_ok: good.len() >= 4,
        good,
        bad,
        unknown,
        cocircuit_clause,
    })
}

//! Named matroids, graphic matroids from edge lists, generalized
//! parallel connection across a modular flat, and the three-stage
//! counterexample pipeline (`section6-g`, `section6-n`, `section6-m`).

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Elimination};
use crate::matroid::{BinaryMatroid, ElementSet};

/// A simple multigraph given by named vertices and labeled edges.
///
/// Self-loops are rejected: the GF(2) incidence matrix cannot encode
/// them. Parallel edges are allowed and become parallel elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    vertices: Vec<String>,
    /// (endpoint index, endpoint index, label)
    edges: Vec<(usize, usize, String)>,
}

impl GraphSpec {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut spec = GraphSpec {
            vertices,
            edges: Vec::new(),
        };
        for &(u, v, label) in edges {
            spec.push_edge(u, v, label)?;
        }
        Ok(spec)
    }

    /// Parses the edge-list text format: one `u v label` triple per
    /// line, `#` starts a comment, vertices appear in order of first use.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut spec = GraphSpec {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected `u v label`, found {} fields", fields.len()),
                });
            }
            for endpoint in &fields[..2] {
                if !spec.vertices.iter().any(|v| v == endpoint) {
                    spec.vertices.push(endpoint.to_string());
                }
            }
            spec.push_edge(fields[0], fields[1], fields[2])
                .map_err(|e| Error::Parse {
                    line: lineno + 1,
                    message: e.to_string(),
                })?;
        }
        Ok(spec)
    }

    fn push_edge(&mut self, u: &str, v: &str, label: &str) -> Result<()> {
        let ui = self.vertex_index(u)?;
        let vi = self.vertex_index(v)?;
        if ui == vi {
            return Err(Error::InvalidInput(format!(
                "self-loop `{label}` at vertex `{u}`"
            )));
        }
        if self.edges.iter().any(|(_, _, l)| l == label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        self.edges.push((ui, vi, label.to_string()));
        Ok(())
    }

    fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// The cycle matroid `M(G)` via the vertex-edge incidence matrix over
/// GF(2): one row per vertex, one column per edge.
pub fn graphic(g: &GraphSpec) -> Result<BinaryMatroid> {
    let mut matrix = BitMatrix::zeros(g.vertices.len(), g.edges.len())?;
    let mut labels = Vec::with_capacity(g.edges.len());
    for (j, (u, v, label)) in g.edges.iter().enumerate() {
        matrix.set(*u, j, true);
        matrix.set(*v, j, true);
        labels.push(label.clone());
    }
    BinaryMatroid::new(matrix, labels)
}

/// Identifiers for the fixed catalog of named matroids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogId {
    F7,
    F7Dual,
    MK4,
    MK5,
    MK5Dual,
    MK33,
    MK33Dual,
    /// `PG(r, 2)` for `1 <= r <= 4`; `Pg(2)` is the Fano plane.
    Pg(usize),
    Ag32,
    /// Wheel with `n` rim vertices, `3 <= n <= 8`.
    Wheel(usize),
    Section6G,
    Section6N,
    Section6M,
}

impl CatalogId {
    /// Parses the textual names used by the CLI (`f7`, `mk33dual`,
    /// `pg32`, `ag32`, `wheel4`, `section6-m`, ...).
    pub fn parse(name: &str) -> Result<Self> {
        let id = match name {
            "f7" => CatalogId::F7,
            "f7dual" => CatalogId::F7Dual,
            "mk4" => CatalogId::MK4,
            "mk5" => CatalogId::MK5,
            "mk5dual" => CatalogId::MK5Dual,
            "mk33" => CatalogId::MK33,
            "mk33dual" => CatalogId::MK33Dual,
            "ag32" => CatalogId::Ag32,
            "section6-g" => CatalogId::Section6G,
            "section6-n" => CatalogId::Section6N,
            "section6-m" => CatalogId::Section6M,
            _ => {
                if let Some(r) = name.strip_prefix("pg").and_then(|s| s.strip_suffix('2')) {
                    CatalogId::Pg(r.parse().map_err(|_| unknown_id(name))?)
                } else if let Some(n) = name.strip_prefix("wheel") {
                    CatalogId::Wheel(n.parse().map_err(|_| unknown_id(name))?)
                } else {
                    return Err(unknown_id(name));
                }
            }
        };
        id.validate()?;
        Ok(id)
    }

    pub fn name(&self) -> String {
        match self {
            CatalogId::F7 => "f7".into(),
            CatalogId::F7Dual => "f7dual".into(),
            CatalogId::MK4 => "mk4".into(),
            CatalogId::MK5 => "mk5".into(),
            CatalogId::MK5Dual => "mk5dual".into(),
            CatalogId::MK33 => "mk33".into(),
            CatalogId::MK33Dual => "mk33dual".into(),
            CatalogId::Pg(r) => format!("pg{r}2"),
            CatalogId::Ag32 => "ag32".into(),
            CatalogId::Wheel(n) => format!("wheel{n}"),
            CatalogId::Section6G => "section6-g".into(),
            CatalogId::Section6N => "section6-n".into(),
            CatalogId::Section6M => "section6-m".into(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            CatalogId::Pg(r) if !(1..=4).contains(r) => Err(Error::InvalidInput(format!(
                "pg rank {r} out of range 1..=4"
            ))),
            CatalogId::Wheel(n) if !(3..=8).contains(n) => Err(Error::InvalidInput(format!(
                "wheel size {n} out of range 3..=8"
            ))),
            _ => Ok(()),
        }
    }
}

fn unknown_id(name: &str) -> Error {
    Error::InvalidInput(format!("unknown catalog id `{name}`"))
}

/// Builds the canonical representation of a catalog matroid.
pub fn catalog(id: &CatalogId) -> Result<BinaryMatroid> {
    id.validate()?;
    Ok(match id {
        CatalogId::F7 => projective_geometry(2),
        CatalogId::F7Dual => projective_geometry(2).dual(),
        CatalogId::Pg(r) => projective_geometry(*r),
        CatalogId::Ag32 => affine_geometry_32(),
        CatalogId::MK4 => graphic(&complete_graph(4))?,
        CatalogId::MK5 => graphic(&complete_graph(5))?,
        CatalogId::MK5Dual => graphic(&complete_graph(5))?.dual(),
        CatalogId::MK33 => graphic(&complete_bipartite_33())?,
        CatalogId::MK33Dual => graphic(&complete_bipartite_33())?.dual(),
        CatalogId::Wheel(n) => graphic(&wheel_graph(*n))?,
        CatalogId::Section6G => section6(Section6Stage::G)?,
        CatalogId::Section6N => section6(Section6Stage::N)?,
        CatalogId::Section6M => section6(Section6Stage::M)?,
    })
}

/// `PG(r, 2)`: all nonzero vectors of `GF(2)^{r+1}`, column `j`
/// holding the vector with value `j + 1`.
fn projective_geometry(r: usize) -> BinaryMatroid {
    let rows = r + 1;
    let cols = (1usize << rows) - 1;
    let mut m = BitMatrix::zeros(rows, cols).expect("pg fits");
    for j in 0..cols {
        for i in 0..rows {
            if (j + 1) >> i & 1 == 1 {
                m.set(i, j, true);
            }
        }
    }
    BinaryMatroid::with_default_labels(m)
}

/// `AG(3, 2)`: the eight vectors of `GF(2)^4` with first coordinate 1.
fn affine_geometry_32() -> BinaryMatroid {
    let mut m = BitMatrix::zeros(4, 8).expect("ag fits");
    for j in 0..8 {
        m.set(0, j, true);
        for i in 0..3 {
            if j >> i & 1 == 1 {
                m.set(i + 1, j, true);
            }
        }
    }
    BinaryMatroid::with_default_labels(m)
}

fn build_graph(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> GraphSpec {
    let edge_refs: Vec<(&str, &str, &str)> = edges
        .iter()
        .map(|(u, v, l)| (u.as_str(), v.as_str(), l.as_str()))
        .collect();
    GraphSpec::new(&vertices, &edge_refs).expect("catalog graph is well formed")
}

fn complete_graph(n: usize) -> GraphSpec {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i.to_string(), j.to_string(), format!("{i}{j}")));
        }
    }
    build_graph(vertices, edges)
}

fn complete_bipartite_33() -> GraphSpec {
    let vertices: Vec<String> = ["a1", "a2", "a3", "b1", "b2", "b3"]
        .map(String::from)
        .to_vec();
    let mut edges = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            edges.push((format!("a{i}"), format!("b{j}"), format!("a{i}b{j}")));
        }
    }
    build_graph(vertices, edges)
}

/// Wheel graph: hub `h` joined to rim vertices `1..n`, rim cycle on top.
fn wheel_graph(n: usize) -> GraphSpec {
    let mut vertices = vec!["h".to_string()];
    vertices.extend((1..=n).map(|i| i.to_string()));
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push(("h".to_string(), i.to_string(), format!("h{i}")));
    }
    for i in 1..n {
        edges.push((i.to_string(), (i + 1).to_string(), format!("{i}{}", i + 1)));
    }
    edges.push(("1".to_string(), n.to_string(), format!("1{n}")));
    build_graph(vertices, edges)
}

/// Decides modularity of a hyperplane flat: every line of the matroid
/// must intersect it. Flats of other ranks are not supported.
pub fn is_modular_flat(m: &BinaryMatroid, flat: ElementSet) -> Result<bool> {
    if m.closure(flat) != flat {
        return Err(Error::Unsupported(
            "modularity check requires a closed set".into(),
        ));
    }
    if m.rank(flat) + 1 != m.full_rank() {
        return Err(Error::Unsupported(
            "modularity check is implemented for hyperplanes only".into(),
        ));
    }
    let outside = m.ground_set().difference(flat);
    let words = m.column_words();
    for x in outside.iter() {
        if words[x] == 0 {
            continue;
        }
        for y in outside.iter() {
            if y <= x || words[y] == 0 || words[y] == words[x] {
                continue;
            }
            let line = m.closure(ElementSet::from_mask(1 << x | 1 << y));
            if line.intersection(flat).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A bijection between a subset of `E(M1)` and a subset of `E(M2)`,
/// given by label pairs.
#[derive(Clone, Debug)]
pub struct GlueMap {
    pairs: Vec<(String, String)>,
}

impl GlueMap {
    pub fn new<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Self> {
        for (i, (a, b)) in pairs.iter().enumerate() {
            for (c, d) in &pairs[..i] {
                if a.as_ref() == c.as_ref() {
                    return Err(Error::DuplicateLabel(a.as_ref().to_string()));
                }
                if b.as_ref() == d.as_ref() {
                    return Err(Error::DuplicateLabel(b.as_ref().to_string()));
                }
            }
        }
        Ok(Self {
            pairs: pairs
                .iter()
                .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
                .collect(),
        })
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }
}

/// Generalized parallel connection of `m1` and `m2` across the common
/// restriction given by `glue` (from `m1` labels to `m2` labels).
///
/// Preconditions enforced: the glued sets induce isomorphic restrictions
/// under exactly the given bijection, the `m2` side is closed, and the
/// `m1` side is a modular flat (checked for hyperplanes; callers must
/// pass `assume_modular` to skip the check for other flats).
///
/// The result keeps all of `m2`'s columns (zero-padded to the new rows)
/// and expresses each remaining `m1` column over a basis of the glue
/// flat mapped into `m2` coordinates plus fresh unit rows. Ground set:
/// `E(M2)` followed by `E(M1) - T1`. The rank formula
/// `r(M1) + r(M2) - r(T)` and both restrictions are verified on the
/// result before it is returned.
pub fn generalized_parallel_connection(
    m1: &BinaryMatroid,
    m2: &BinaryMatroid,
    glue: &GlueMap,
    assume_modular: bool,
) -> Result<BinaryMatroid> {
    let mut t1 = ElementSet::EMPTY;
    let mut t2 = ElementSet::EMPTY;
    for (a, b) in glue.pairs() {
        t1 = t1.with(m1.index_of(a)?);
        t2 = t2.with(m2.index_of(b)?);
    }
    if m2.closure(t2) != t2 {
        return Err(Error::Precondition(
            "glue image must be closed in the second matroid".into(),
        ));
    }
    if !assume_modular && t1 != m1.ground_set() {
        match is_modular_flat(m1, t1)? {
            true => {}
            false => {
                return Err(Error::Precondition(
                    "glue flat is not modular in the first matroid".into(),
                ))
            }
        }
    }

    // The stated bijection must be an isomorphism of the restrictions.
    let r1 = m1.restrict(t1);
    let r2 = m2.restrict(t2);
    let t1_order: Vec<usize> = t1.iter().collect();
    let t2_order: Vec<usize> = t2.iter().collect();
    let mut forced = vec![usize::MAX; t1_order.len()];
    for (a, b) in glue.pairs() {
        let pos1 = t1_order
            .iter()
            .position(|&i| m1.label(i) == a)
            .expect("resolved above");
        let pos2 = t2_order
            .iter()
            .position(|&i| m2.label(i) == b)
            .expect("resolved above");
        forced[pos1] = pos2;
    }
    if !r1.is_isomorphism_under(&r2, &forced) {
        return Err(Error::InvalidInput(
            "glue bijection is not an isomorphism of the glued restrictions".into(),
        ));
    }

    let glue_rank = m1.rank(t1);
    let extra_rows = m1.full_rank() - glue_rank;
    let m2_rows = m2.matrix().rows();

    // Lexicographically first basis of the glue flat, extended greedily
    // through the rest of m1's columns.
    let words1 = m1.column_words();
    let mut elim = Elimination::new();
    let mut flat_basis = Vec::new();
    for i in t1.iter() {
        if elim.insert(words1[i]).is_some() {
            flat_basis.push(i);
        }
    }
    let mut extension = Vec::new();
    for i in m1.ground_set().difference(t1).iter() {
        if elim.insert(words1[i]).is_some() {
            extension.push(i);
        }
    }
    debug_assert_eq!(flat_basis.len(), glue_rank);
    debug_assert_eq!(extension.len(), extra_rows);

    // m2 column words for the glued partners of the flat basis.
    let partner_index = |i: usize| -> usize {
        let label = m1.label(i);
        let partner = &glue
            .pairs()
            .iter()
            .find(|(a, _)| a == label)
            .expect("basis lies in the glue set")
            .1;
        m2.index_of(partner).expect("resolved above")
    };
    let basis_words_out: Vec<u64> = flat_basis
        .iter()
        .map(|&i| m2.column_words()[partner_index(i)])
        .collect();

    let solver = CoordinateSolver::new(&flat_basis, &extension, words1);
    let new_size = m2.size() + m1.size() - t1.len();
    let mut out = BitMatrix::zeros(m2_rows + extra_rows, new_size)?;
    let mut labels: Vec<String> = m2.labels().to_vec();
    for (j, w) in m2.column_words().iter().enumerate() {
        for i in 0..m2_rows {
            if w >> i & 1 == 1 {
                out.set(i, j, true);
            }
        }
    }
    for (next, x) in (m2.size()..).zip(m1.ground_set().difference(t1).iter()) {
        let (alpha, beta) = solver.coordinates(words1[x]);
        let mut w = 0u64;
        for (k, &bw) in basis_words_out.iter().enumerate() {
            if alpha >> k & 1 == 1 {
                w ^= bw;
            }
        }
        for k in 0..extra_rows {
            if beta >> k & 1 == 1 {
                w |= 1u64 << (m2_rows + k);
            }
        }
        for i in 0..(m2_rows + extra_rows) {
            if w >> i & 1 == 1 {
                out.set(i, next, true);
            }
        }
        labels.push(m1.label(x).to_string());
    }
    let result = BinaryMatroid::new(out, labels)?;

    if result.full_rank() != m1.full_rank() + m2.full_rank() - glue_rank {
        return Err(Error::InvalidInput(
            "generalized parallel connection violated the rank formula".into(),
        ));
    }
    let back: Vec<usize> = (0..m2.size()).collect();
    if !result
        .restrict(ElementSet::full(m2.size()))
        .is_isomorphism_under(m2, &back)
    {
        return Err(Error::InvalidInput(
            "generalized parallel connection did not reproduce the second matroid".into(),
        ));
    }
    if !m1_side_check(m1, &result, t1, glue)? {
        return Err(Error::InvalidInput(
            "generalized parallel connection did not reproduce the first matroid".into(),
        ));
    }
    Ok(result)
}

/// Restricting the connection to the labels of `m1` (glued elements
/// replaced by their partners) must reproduce `m1` under the natural
/// bijection.
fn m1_side_check(
    m1: &BinaryMatroid,
    result: &BinaryMatroid,
    t1: ElementSet,
    glue: &GlueMap,
) -> Result<bool> {
    let mut image_labels: Vec<String> = Vec::new();
    for i in 0..m1.size() {
        let label = m1.label(i);
        if t1.contains(i) {
            let partner = &glue
                .pairs()
                .iter()
                .find(|(a, _)| a == label)
                .expect("glue covers t1")
                .1;
            image_labels.push(partner.clone());
        } else {
            image_labels.push(label.to_string());
        }
    }
    let mut image_set = ElementSet::EMPTY;
    for l in &image_labels {
        image_set = image_set.with(result.index_of(l)?);
    }
    let restricted = result.restrict(image_set);
    let mut map = vec![usize::MAX; m1.size()];
    for (i, l) in image_labels.iter().enumerate() {
        map[i] = restricted.index_of(l)?;
    }
    Ok(m1.is_isomorphism_under(&restricted, &map))
}

/// Expresses column words in coordinates over a split basis
/// (flat basis positions first, extension positions after).
struct CoordinateSolver {
    /// pivot slot -> (pivot word, combination over basis positions)
    pivots: [(u64, u64); 64],
    basis_len: usize,
}

impl CoordinateSolver {
    fn new(flat_basis: &[usize], extension: &[usize], words: &[u64]) -> Self {
        let mut solver = CoordinateSolver {
            pivots: [(0, 0); 64],
            basis_len: flat_basis.len(),
        };
        for (pos, &col) in flat_basis.iter().chain(extension.iter()).enumerate() {
            let mut word = words[col];
            let mut combo = 1u64 << pos;
            loop {
                debug_assert!(word != 0, "basis columns are independent");
                let hi = 63 - word.leading_zeros() as usize;
                let (pw, pc) = solver.pivots[hi];
                if pw == 0 {
                    solver.pivots[hi] = (word, combo);
                    break;
                }
                word ^= pw;
                combo ^= pc;
            }
        }
        solver
    }

    /// Returns `(alpha, beta)`: the combination over the flat basis and
    /// over the extension. Panics if the word lies outside the span,
    /// which cannot happen for columns of the represented matroid.
    fn coordinates(&self, mut word: u64) -> (u64, u64) {
        let mut combo = 0u64;
        while word != 0 {
            let hi = 63 - word.leading_zeros() as usize;
            let (pw, pc) = self.pivots[hi];
            assert!(pw != 0, "column outside the represented span");
            word ^= pw;
            combo ^= pc;
        }
        let alpha = combo & ((1u64 << self.basis_len) - 1);
        let beta = combo >> self.basis_len;
        (alpha, beta)
    }
}

/// The stages of the counterexample construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section6Stage {
    /// The graph stage: `K_{3,3}` plus three vertices joined to all six.
    G,
    /// The extension `N = [A | B]` with glue elements `a..f`.
    N,
    /// The generalized parallel connection of `M(K_5)` with `N`.
    M,
}

/// Rows of the glue block `B`, over the vertex rows
/// `a1 a2 a3 b1 b2 b3 u v w` and columns `a b c d e f`.
const B_ROWS: [&str; 9] = [
    "101110", // a1
    "101110", // a2
    "101110", // a3
    "110011", // b1
    "011101", // b2
    "011101", // b3
    "110011", // u
    "100101", // v
    "001011", // w
];

fn section6_graph() -> GraphSpec {
    let vertices: Vec<String> = ["a1", "a2", "a3", "b1", "b2", "b3", "u", "v", "w"]
        .map(String::from)
        .to_vec();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            edges.push((format!("a{i}"), format!("b{j}"), format!("a{i}b{j}")));
        }
    }
    for hub in ["u", "v", "w"] {
        for other in ["a1", "a2", "a3", "b1", "b2", "b3"] {
            edges.push((hub.to_string(), other.to_string(), format!("{hub}{other}")));
        }
    }
    build_graph(vertices, edges)
}

/// Builds the requested stage of the counterexample pipeline.
pub fn section6(stage: Section6Stage) -> Result<BinaryMatroid> {
    match stage {
        Section6Stage::G => graphic(&section6_graph()),
        Section6Stage::N => {
            let g = graphic(&section6_graph())?;
            let a = g.matrix();
            let mut m = BitMatrix::zeros(9, 33)?;
            for j in 0..27 {
                for i in 0..9 {
                    if a.get(i, j) {
                        m.set(i, j, true);
                    }
                }
            }
            for (i, row) in B_ROWS.iter().enumerate() {
                for (k, ch) in row.chars().enumerate() {
                    if ch == '1' {
                        m.set(i, 27 + k, true);
                    }
                }
            }
            let mut labels: Vec<String> = g.labels().to_vec();
            labels.extend(["a", "b", "c", "d", "e", "f"].map(String::from));
            BinaryMatroid::new(m, labels)
        }
        Section6Stage::M => {
            let k5 = catalog(&CatalogId::MK5)?;
            let n = section6(Section6Stage::N)?;
            let glue = GlueMap::new(&[
                ("12", "a"),
                ("13", "b"),
                ("14", "c"),
                ("23", "d"),
                ("34", "e"),
                ("24", "f"),
            ])?;
            let connected = generalized_parallel_connection(&k5, &n, &glue, false)?;
            connected.rename_elements(&[("15", "g15"), ("25", "g25"), ("35", "g35"), ("45", "g45")])
        }
    }
}

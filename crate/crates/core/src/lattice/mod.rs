//! Integral representations of graphs.
//!
//! A representation assigns an integer vector to every vertex. It is
//! *s-integrable* for a graph when every vector has squared length
//! `s · ⌈−λ_min⌉`, adjacent vertices have inner product `s`, and other pairs
//! are orthogonal. All checks in this module run in exact integer arithmetic.
//!
//! For `s = 1` and norm 3 every vector is a `(0, ±1)`-vector with exactly
//! three nonzero coordinates; its *support* is the set of those coordinates.
//! [`support_profile`], [`check_support_laws`], [`detect_mates`] and
//! [`check_mate_free_structure`] analyse representations through supports.

mod constructions;
mod reconstruct;
mod search;

pub use constructions::{cube3_representation, cycle_complement_representation};
pub use reconstruct::{sts_from_representation, Reconstruction};
pub use search::{find_norm3_representation, search_order, Certification, SearchOutcome, SearchStatus};

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::graphs::{classify_regularity, distances, Diameter, Graph, Param};
use serde::de::Deserializer;
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// `⌈−λ_min⌉` used for every representation unless set explicitly.
pub const DEFAULT_CEILING: u32 = 3;

/// Vertex-indexed integer vectors of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralRepresentation {
    dimension: usize,
    vectors: Vec<Vec<i64>>,
    scale: u32,
    ceiling: u32,
}

impl IntegralRepresentation {
    /// Vectors must all have length `dimension`; `scale` is `s`.
    pub fn new(dimension: usize, vectors: Vec<Vec<i64>>, scale: u32) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidParameter("scale must be positive".into()));
        }
        for (vertex, x) in vectors.iter().enumerate() {
            if x.len() != dimension {
                return Err(Error::DimensionMismatch { vertex, expected: dimension, found: x.len() });
            }
        }
        Ok(IntegralRepresentation { dimension, vectors, scale, ceiling: DEFAULT_CEILING })
    }

    /// Overrides `⌈−λ_min⌉` (the norm of a scale-1 vector).
    pub fn with_ceiling(mut self, ceiling: u32) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, v: usize) -> &[i64] {
        &self.vectors[v]
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    /// `s · ⌈−λ_min⌉`.
    pub fn target_norm(&self) -> i64 {
        self.scale as i64 * self.ceiling as i64
    }

    pub fn inner(&self, x: usize, y: usize) -> i64 {
        dot(&self.vectors[x], &self.vectors[y])
    }

    /// Coordinate-wise concatenation; the scales add.
    pub fn direct_sum(&self, other: &IntegralRepresentation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::VertexCountMismatch { expected: self.len(), found: other.len() });
        }
        if self.ceiling != other.ceiling {
            return Err(Error::InvalidParameter("representations use different norms".into()));
        }
        let vectors =
            self.vectors.iter().zip(&other.vectors).map(|(a, b)| a.iter().chain(b).copied().collect()).collect();
        Ok(IntegralRepresentation {
            dimension: self.dimension + other.dimension,
            vectors,
            scale: self.scale + other.scale,
            ceiling: self.ceiling,
        })
    }

    /// Applies a signed permutation of coordinates: coordinate `i` moves to
    /// `perm[i]` and is multiplied by `signs[i]`.
    pub fn transformed(&self, perm: &[usize], signs: &[i64]) -> Result<Self> {
        if perm.len() != self.dimension || signs.len() != self.dimension {
            return Err(Error::InvalidParameter("permutation has the wrong length".into()));
        }
        let mut seen = vec![false; self.dimension];
        for &p in perm {
            if p >= self.dimension || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let vectors = self
            .vectors
            .iter()
            .map(|x| {
                let mut y = vec![0; self.dimension];
                for (i, &xi) in x.iter().enumerate() {
                    y[perm[i]] = signs[i] * xi;
                }
                y
            })
            .collect();
        Ok(IntegralRepresentation { vectors, ..self.clone() })
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct VectorMap<'a>(&'a [Vec<i64>]);

impl Serialize for VectorMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (v, x) in self.0.iter().enumerate() {
            m.serialize_entry(&v.to_string(), x)?;
        }
        m.end()
    }
}

/// Parses `{"<vertex>": [...]}` requiring keys to be exactly `0..len`.
pub(crate) fn vectors_from_map(map: BTreeMap<String, Vec<i64>>) -> Result<Vec<Vec<i64>>> {
    let mut indexed = BTreeMap::new();
    for (k, x) in map {
        let v: usize = k.parse().map_err(|_| Error::Parse(format!("vertex key `{k}` is not an integer")))?;
        indexed.insert(v, x);
    }
    let len = indexed.len();
    if let Some(missing) = (0..len).find(|v| !indexed.contains_key(v)) {
        return Err(Error::MissingVertex(missing));
    }
    Ok(indexed.into_values().collect())
}

pub(crate) fn serialize_vectors<S: Serializer>(
    s: S,
    name: &'static str,
    scalar_key: &'static str,
    scalar: i64,
    dimension: usize,
    vectors: &[Vec<i64>],
) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct(name, 3)?;
    st.serialize_field(scalar_key, &scalar)?;
    st.serialize_field("dimension", &dimension)?;
    st.serialize_field("vectors", &VectorMap(vectors))?;
    st.end()
}

/// Wire form `{"s": int, "dimension": int, "vectors": {"<vertex>": [ints]}}`.
impl Serialize for IntegralRepresentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_vectors(s, "IntegralRepresentation", "s", self.scale as i64, self.dimension, &self.vectors)
    }
}

#[derive(Deserialize)]
struct RepresentationJson {
    s: u32,
    dimension: usize,
    vectors: BTreeMap<String, Vec<i64>>,
}

impl<'de> Deserialize<'de> for IntegralRepresentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RepresentationJson::deserialize(d)?;
        let vectors = vectors_from_map(j.vectors).map_err(serde::de::Error::custom)?;
        IntegralRepresentation::new(j.dimension, vectors, j.s).map_err(serde::de::Error::custom)
    }
}

/// Which relation a failing pair violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Norm,
    Adjacent,
    NonAdjacent,
    /// Slim–fat incidence in a full Hoffman representation.
    Incidence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub x: usize,
    pub y: usize,
    pub relation: Relation,
    pub expected: i64,
    pub found: i64,
}

/// Result of an exact inner-product check; `violation` is the first failing
/// pair in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub violation: Option<Violation>,
}

impl VerifyReport {
    pub(crate) fn from_violation(violation: Option<Violation>) -> Self {
        VerifyReport { pass: violation.is_none(), violation }
    }
}

/// Checks the s-integrability equations for `r` on `g`.
pub fn verify_integrable(g: &Graph, r: &IntegralRepresentation, s: u32) -> Result<VerifyReport> {
    if r.len() < g.n() {
        return Err(Error::MissingVertex(r.len()));
    }
    if r.len() > g.n() {
        return Err(Error::VertexCountMismatch { expected: g.n(), found: r.len() });
    }
    if r.scale != s {
        return Err(Error::ScaleMismatch { expected: s, found: r.scale });
    }
    let norm = s as i64 * r.ceiling as i64;
    for x in 0..g.n() {
        for y in x..g.n() {
            let (relation, expected) = if x == y {
                (Relation::Norm, norm)
            } else if g.has_edge(x, y) {
                (Relation::Adjacent, s as i64)
            } else {
                (Relation::NonAdjacent, 0)
            };
            let found = r.inner(x, y);
            if found != expected {
                return Ok(VerifyReport::from_violation(Some(Violation { x, y, relation, expected, found })));
            }
        }
    }
    Ok(VerifyReport::from_violation(None))
}

/// Pairwise inner products.
pub fn gram_matrix(r: &IntegralRepresentation) -> IntMatrix {
    let n = r.len();
    let mut m = IntMatrix::zeros(n);
    for x in 0..n {
        for y in x..n {
            let ip = r.inner(x, y);
            m.set(x, y, ip);
            m.set(y, x, ip);
        }
    }
    m
}

/// Supports and signs of a norm-3 `(0, ±1)` representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportProfile {
    /// Sorted support of each vertex.
    pub supports: Vec<[usize; 3]>,
    /// `signs[v][i]` is the sign at coordinate `supports[v][i]`.
    pub signs: Vec<[i8; 3]>,
}

impl SupportProfile {
    /// `σ_v(coordinate)`: the sign on the support, zero elsewhere.
    pub fn sign(&self, v: usize, coordinate: usize) -> i8 {
        self.supports[v].iter().position(|&c| c == coordinate).map_or(0, |i| self.signs[v][i])
    }

    pub fn intersection(&self, x: usize, y: usize) -> usize {
        self.supports[x].iter().filter(|c| self.supports[y].contains(c)).count()
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }
}

/// Reads off supports; every vector must have exactly three `±1` entries.
pub fn support_profile(r: &IntegralRepresentation) -> Result<SupportProfile> {
    let mut supports = Vec::with_capacity(r.len());
    let mut signs = Vec::with_capacity(r.len());
    for (v, x) in r.vectors.iter().enumerate() {
        let nz: Vec<(usize, i64)> = x.iter().copied().enumerate().filter(|&(_, a)| a != 0).collect();
        if nz.len() != 3 || nz.iter().any(|&(_, a)| a.abs() != 1) {
            return Err(Error::NotSignVector(v));
        }
        supports.push([nz[0].0, nz[1].0, nz[2].0]);
        signs.push([nz[0].1 as i8, nz[1].1 as i8, nz[2].1 as i8]);
    }
    Ok(SupportProfile { supports, signs })
}

fn require_verified(g: &Graph, r: &IntegralRepresentation) -> Result<()> {
    let report = verify_integrable(g, r, 1)?;
    match report.violation {
        None => Ok(()),
        Some(v) => Err(Error::Unverified(format!(
            "pair ({}, {}) has inner product {}, expected {}",
            v.x, v.y, v.found, v.expected
        ))),
    }
}

/// Support-intersection sizes tallied over adjacent and non-adjacent pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportLawReport {
    pub pass: bool,
    /// `adjacent[i]` counts adjacent pairs whose supports meet in `i` points.
    pub adjacent: [usize; 4],
    pub non_adjacent: [usize; 4],
    /// Pairs breaking the law, as `(x, y, intersection size)`.
    pub violations: Vec<(usize, usize, usize)>,
}

/// Adjacent pairs must meet in 1 or 3 coordinates, non-adjacent pairs in 0
/// or 2. Holds for every verified norm-3 representation.
pub fn check_support_laws(g: &Graph, r: &IntegralRepresentation) -> Result<SupportLawReport> {
    require_verified(g, r)?;
    let profile = support_profile(r)?;
    let mut report = SupportLawReport { pass: true, adjacent: [0; 4], non_adjacent: [0; 4], violations: Vec::new() };
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let size = profile.intersection(x, y);
            let ok = if g.has_edge(x, y) {
                report.adjacent[size] += 1;
                size == 1 || size == 3
            } else {
                report.non_adjacent[size] += 1;
                size == 0 || size == 2
            };
            if !ok {
                report.violations.push((x, y, size));
            }
        }
    }
    report.pass = report.violations.is_empty();
    Ok(report)
}

/// Vertices whose support is shared with another vertex, paired with that
/// (unique) mate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MateReport {
    /// The set `S`, sorted.
    pub members: Vec<usize>,
    /// Mate pairs `(x, x')` with `x < x'`.
    pub pairs: Vec<(usize, usize)>,
}

impl MateReport {
    pub fn mate(&self, x: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| match x {
            _ if x == a => Some(b),
            _ if x == b => Some(a),
            _ => None,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Groups vertices by support. A support held by three or more vertices, or
/// mates that are not at inner product 1, cannot occur in a verified
/// representation and are reported as errors.
pub fn detect_mates(r: &IntegralRepresentation) -> Result<MateReport> {
    let profile = support_profile(r)?;
    let mut by_support: BTreeMap<[usize; 3], Vec<usize>> = BTreeMap::new();
    for (v, s) in profile.supports.iter().enumerate() {
        by_support.entry(*s).or_default().push(v);
    }
    let mut report = MateReport::default();
    for (support, vertices) in by_support {
        match vertices.as_slice() {
            [_] => {}
            &[x, y] => {
                let ip = r.inner(x, y);
                if ip != 1 {
                    return Err(Error::MatesNotAdjacent(x, y, ip));
                }
                report.members.extend([x, y]);
                report.pairs.push((x, y));
            }
            _ => return Err(Error::SharedSupport { support, vertices }),
        }
    }
    report.members.sort_unstable();
    report.pairs.sort_unstable();
    Ok(report)
}

/// One named structural check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MateFreeReport {
    pub pass: bool,
    /// Common-neighbour count at distance two, computed from the graph.
    pub c: usize,
    pub checks: Vec<StructureCheck>,
}

/// Verifies the structure forced on a 1-integrable sesqui-regular graph with
/// `c ≥ 9`: no vertex has a mate; adjacent supports meet in exactly one
/// coordinate and non-adjacent supports are disjoint; `c = 9`; the diameter
/// is 2; and every pair `(i, j)` of support coordinates of two vertices at
/// distance two (or of the private coordinates of two adjacent vertices) is
/// covered by a common neighbour `w` with `σ_x(i) w_i + σ_y(j) w_j = 2`.
pub fn check_mate_free_structure(g: &Graph, r: &IntegralRepresentation) -> Result<MateFreeReport> {
    let report = classify_regularity(g);
    if !report.connected {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let c = match report.sesqui.map(|s| s.c) {
        Some(Param::Count(c)) => c,
        Some(Param::Vacuous) => return Err(Error::Precondition("graph is complete; c is undefined".into())),
        None => return Err(Error::Precondition("graph is not sesqui-regular".into())),
    };
    if c < 9 {
        return Err(Error::Precondition(format!("c = {c} is below 9")));
    }
    require_verified(g, r)?;
    let profile = support_profile(r)?;
    let mates = detect_mates(r)?;
    let dist = distances(g);
    let n = g.n();
    let mut checks = Vec::new();

    checks.push(StructureCheck {
        name: "mate_free".into(),
        passed: mates.is_empty(),
        witness: mates.pairs.first().map(|(x, y)| format!("mates {x} and {y}")),
    });

    let law_witness = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| profile.intersection(x, y) != if g.has_edge(x, y) { 1 } else { 0 })
        .map(|(x, y)| format!("pair ({x}, {y}) meets in {} coordinates", profile.intersection(x, y)));
    checks.push(StructureCheck {
        name: "intersection_one_or_zero".into(),
        passed: law_witness.is_none(),
        witness: law_witness,
    });

    checks.push(StructureCheck {
        name: "c_equals_9".into(),
        passed: c == 9,
        witness: (c != 9).then(|| format!("c = {c}")),
    });

    let diameter = dist.diameter();
    checks.push(StructureCheck {
        name: "diameter_two".into(),
        passed: diameter == Diameter::Finite(2),
        witness: (diameter != Diameter::Finite(2)).then(|| format!("diameter {diameter:?}")),
    });

    let covered = |x: usize, y: usize, i: usize, j: usize| {
        let (sx, sy) = (profile.sign(x, i) as i64, profile.sign(y, j) as i64);
        (0..n).any(|w| g.has_edge(w, x) && g.has_edge(w, y) && sx * r.vector(w)[i] + sy * r.vector(w)[j] == 2)
    };

    let mut far_witness = None;
    'far: for x in 0..n {
        for y in x + 1..n {
            if dist.get(x, y) != Some(2) {
                continue;
            }
            for &i in &profile.supports[x] {
                for &j in &profile.supports[y] {
                    if !covered(x, y, i, j) {
                        far_witness = Some(format!("pair ({x}, {y}), coordinates ({i}, {j})"));
                        break 'far;
                    }
                }
            }
        }
    }
    checks.push(StructureCheck {
        name: "distance_two_cover".into(),
        passed: far_witness.is_none(),
        witness: far_witness,
    });

    let mut near_witness = None;
    'near: for (x, y) in g.edges() {
        if profile.intersection(x, y) != 1 {
            continue;
        }
        let shared = profile.supports[x].iter().find(|c| profile.supports[y].contains(c)).copied();
        for &i in profile.supports[x].iter().filter(|&&i| Some(i) != shared) {
            for &j in profile.supports[y].iter().filter(|&&j| Some(j) != shared) {
                if !covered(x, y, i, j) {
                    near_witness = Some(format!("edge ({x}, {y}), coordinates ({i}, {j})"));
                    break 'near;
                }
            }
        }
    }
    checks.push(StructureCheck {
        name: "adjacent_cover".into(),
        passed: near_witness.is_none(),
        witness: near_witness,
    });

    Ok(MateFreeReport { pass: checks.iter().all(|c| c.passed), c, checks })
}

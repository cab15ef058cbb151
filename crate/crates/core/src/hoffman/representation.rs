//! Integral representations of Hoffman graphs, full (every vertex) and
//! reduced (slim vertices only, with fat contributions subtracted).

use super::HoffmanGraph;
use crate::error::{Error, Result};
use crate::lattice::{dot, serialize_vectors, vectors_from_map, Relation, VerifyReport, Violation};
use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

macro_rules! vector_family {
    ($name:ident, $label:literal) => {
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            dimension: usize,
            vectors: Vec<Vec<i64>>,
            t: i64,
        }

        impl $name {
            pub fn new(dimension: usize, vectors: Vec<Vec<i64>>, t: i64) -> Result<Self> {
                for (vertex, x) in vectors.iter().enumerate() {
                    if x.len() != dimension {
                        return Err(Error::DimensionMismatch { vertex, expected: dimension, found: x.len() });
                    }
                }
                Ok($name { dimension, vectors, t })
            }

            pub fn dimension(&self) -> usize {
                self.dimension
            }

            pub fn vectors(&self) -> &[Vec<i64>] {
                &self.vectors
            }

            pub fn vector(&self, v: usize) -> &[i64] {
                &self.vectors[v]
            }

            pub fn len(&self) -> usize {
                self.vectors.len()
            }

            pub fn is_empty(&self) -> bool {
                self.vectors.is_empty()
            }

            pub fn t(&self) -> i64 {
                self.t
            }
        }

        /// Wire form `{"t": int, "dimension": int, "vectors": {"<vertex>": [ints]}}`.
        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_vectors(s, $label, "t", self.t, self.dimension, &self.vectors)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                #[derive(Deserialize)]
                struct Wire {
                    t: i64,
                    dimension: usize,
                    vectors: BTreeMap<String, Vec<i64>>,
                }
                let w = Wire::deserialize(d)?;
                let vectors = vectors_from_map(w.vectors).map_err(serde::de::Error::custom)?;
                $name::new(w.dimension, vectors, w.t).map_err(serde::de::Error::custom)
            }
        }
    };
}

vector_family!(ReducedRepresentation, "ReducedRepresentation");
vector_family!(FullRepresentation, "FullRepresentation");

/// Checks `(ψ(x), ψ(x)) = t − |N^fat(x)|`, `(ψ(x), ψ(y)) = 1 − |N^fat(x, y)|`
/// on slim edges and `−|N^fat(x, y)|` otherwise, using the norm `t` given
/// here rather than the one stored in `psi`.
pub fn verify_reduced_representation(h: &HoffmanGraph, psi: &ReducedRepresentation, t: i64) -> Result<VerifyReport> {
    coverage(h.n_slim(), psi.len())?;
    let sp = h.special_matrix();
    for x in 0..h.n_slim() {
        for y in x..h.n_slim() {
            let (relation, expected) = if x == y {
                (Relation::Norm, t + sp.get(x, x))
            } else if h.graph().has_edge(x, y) {
                (Relation::Adjacent, sp.get(x, y))
            } else {
                (Relation::NonAdjacent, sp.get(x, y))
            };
            let found = dot(psi.vector(x), psi.vector(y));
            if found != expected {
                return Ok(VerifyReport::from_violation(Some(Violation { x, y, relation, expected, found })));
            }
        }
    }
    Ok(VerifyReport::from_violation(None))
}

fn coverage(expected: usize, found: usize) -> Result<()> {
    if found < expected {
        return Err(Error::MissingVertex(found));
    }
    if found > expected {
        return Err(Error::VertexCountMismatch { expected, found });
    }
    Ok(())
}

/// Checks norms `t` on slim and `1` on fat vertices, inner product `1` on
/// edges of `H` and `0` on non-edges.
pub fn verify_full_representation(h: &HoffmanGraph, phi: &FullRepresentation) -> Result<VerifyReport> {
    coverage(h.n(), phi.len())?;
    for x in 0..h.n() {
        for y in x..h.n() {
            let (relation, expected) = match (x == y, h.graph().has_edge(x, y)) {
                (true, _) if h.is_fat_vertex(x) => (Relation::Norm, 1),
                (true, _) => (Relation::Norm, phi.t),
                (false, true) if h.is_fat_vertex(y) => (Relation::Incidence, 1),
                (false, true) => (Relation::Adjacent, 1),
                (false, false) if h.is_fat_vertex(y) => (Relation::Incidence, 0),
                (false, false) => (Relation::NonAdjacent, 0),
            };
            let found = dot(phi.vector(x), phi.vector(y));
            if found != expected {
                return Ok(VerifyReport::from_violation(Some(Violation { x, y, relation, expected, found })));
            }
        }
    }
    Ok(VerifyReport::from_violation(None))
}

/// Appends one coordinate per fat vertex: fat vertex `f` becomes that unit
/// vector and each slim vector gains the indicator of its fat neighbours.
pub fn reduced_to_full(h: &HoffmanGraph, psi: &ReducedRepresentation, t: i64) -> Result<FullRepresentation> {
    let report = verify_reduced_representation(h, psi, t)?;
    if let Some(v) = report.violation {
        return Err(Error::Unverified(format!(
            "pair ({}, {}) has inner product {}, expected {}",
            v.x, v.y, v.found, v.expected
        )));
    }
    let m = psi.dimension();
    let dimension = m + h.n_fat();
    let mut vectors = Vec::with_capacity(h.n());
    for x in 0..h.n_slim() {
        let mut v = psi.vector(x).to_vec();
        v.resize(dimension, 0);
        for f in h.fat_neighbors(x) {
            v[m + f - h.n_slim()] = 1;
        }
        vectors.push(v);
    }
    for i in 0..h.n_fat() {
        let mut v = vec![0; dimension];
        v[m + i] = 1;
        vectors.push(v);
    }
    FullRepresentation::new(dimension, vectors, t)
}

/// Inverse of [`reduced_to_full`] for full representations in which every
/// fat vertex is a distinct standard unit vector `+e_c`: those coordinates
/// are dropped.
pub fn full_to_reduced(h: &HoffmanGraph, phi: &FullRepresentation) -> Result<ReducedRepresentation> {
    let report = verify_full_representation(h, phi)?;
    if report.violation.is_some() {
        return Err(Error::Unverified("full representation does not verify".into()));
    }
    let mut fat_coordinates = Vec::with_capacity(h.n_fat());
    for f in h.n_slim()..h.n() {
        let x = phi.vector(f);
        let nz: Vec<usize> = (0..x.len()).filter(|&i| x[i] != 0).collect();
        match nz.as_slice() {
            &[c] if x[c] == 1 => fat_coordinates.push(c),
            _ => {
                return Err(Error::Precondition(format!("fat vertex {f} is not a standard unit vector")));
            }
        }
    }
    let keep: Vec<usize> = (0..phi.dimension()).filter(|c| !fat_coordinates.contains(c)).collect();
    let vectors = (0..h.n_slim()).map(|x| keep.iter().map(|&c| phi.vector(x)[c]).collect()).collect();
    ReducedRepresentation::new(keep.len(), vectors, phi.t)
}

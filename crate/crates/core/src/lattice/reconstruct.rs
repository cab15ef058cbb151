use super::{detect_mates, support_profile, verify_integrable, IntegralRepresentation};
use crate::error::{Error, Result};
use crate::graphs::{classify_regularity, Graph, Param};
use crate::steiner::{verify_sts, TripleSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A triple system read off a mate-free representation. Block `i` is the
/// support of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub system: TripleSystem,
    /// Used coordinates in increasing order: point `p` is coordinate `coordinate_of_point[p]`.
    pub coordinate_of_point: Vec<usize>,
}

/// Points are the coordinates used by some support and blocks are the
/// supports. Requires a connected sesqui-regular graph with `k − 2 ≥ c ≥ 9`
/// and a verified mate-free representation. The output is checked to be a
/// Steiner triple system whose block graph is `g` under vertex `i` ↦ block `i`.
pub fn sts_from_representation(g: &Graph, r: &IntegralRepresentation) -> Result<Reconstruction> {
    let report = classify_regularity(g);
    if !report.connected {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let verified = verify_integrable(g, r, 1)?;
    if let Some(v) = verified.violation {
        return Err(Error::Unverified(format!("first violation at ({}, {})", v.x, v.y)));
    }
    let mates = detect_mates(r)?;
    if !mates.is_empty() {
        return Err(Error::MatesPresent(mates.pairs));
    }
    let Some(sesqui) = report.sesqui else {
        return Err(Error::Precondition("graph is not sesqui-regular".into()));
    };
    let c = match sesqui.c {
        Param::Count(c) => c,
        Param::Vacuous => return Err(Error::Precondition("graph is complete; c is undefined".into())),
    };
    if c < 9 || c + 2 > sesqui.k {
        return Err(Error::Precondition(format!("need k − 2 ≥ c ≥ 9, have k = {}, c = {c}", sesqui.k)));
    }
    let profile = support_profile(r)?;
    let mut points: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &profile.supports {
        for &coord in s {
            points.insert(coord, 0);
        }
    }
    for (p, slot) in points.values_mut().enumerate() {
        *slot = p;
    }
    let blocks = profile.supports.iter().map(|s| s.map(|coord| points[&coord])).collect();
    let system = TripleSystem::new(points.len(), blocks)?;
    if let Some(w) = verify_sts(&system).witness {
        return Err(Error::NotSteiner { pair: w.pair, count: w.count });
    }
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let meet = profile.intersection(x, y);
            if (meet == 1) != g.has_edge(x, y) {
                return Err(Error::Unverified(format!(
                    "blocks {x} and {y} meet in {meet} points but adjacency is {}",
                    g.has_edge(x, y)
                )));
            }
        }
    }
    Ok(Reconstruction { system, coordinate_of_point: points.into_keys().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steiner::{block_graph, canonical_block_representation, construct_sts};

    #[test]
    fn round_trips() {
        for v in [13, 15] {
            let t = construct_sts(v).unwrap();
            let g = block_graph(&t).unwrap();
            let r = canonical_block_representation(&t).unwrap();
            let rec = sts_from_representation(&g, &r).unwrap();
            assert!(verify_sts(&rec.system).pass);
            assert_eq!(rec.system.v(), v);
            assert_eq!(rec.system.blocks().len(), v * (v - 1) / 6);
            assert_eq!(rec.system.normalized(), t);
        }
    }

    #[test]
    fn coordinates_are_relabelled_densely() {
        let t = construct_sts(13).unwrap();
        let g = block_graph(&t).unwrap();
        let r = canonical_block_representation(&t).unwrap();
        // Spread coordinate p to 2p + 1 inside a dimension-27 ambient space.
        let wide: Vec<Vec<i64>> = r
            .vectors()
            .iter()
            .map(|x| {
                let mut y = vec![0; 27];
                for (p, &a) in x.iter().enumerate() {
                    y[2 * p + 1] = a;
                }
                y
            })
            .collect();
        let r = IntegralRepresentation::new(27, wide, 1).unwrap();
        let rec = sts_from_representation(&g, &r).unwrap();
        assert_eq!(rec.coordinate_of_point, (0..13).map(|p| 2 * p + 1).collect::<Vec<_>>());
        assert_eq!(rec.system.normalized(), t);
    }

    #[test]
    fn mates_rejected() {
        let g = crate::graphs::complete_graph(2).unwrap();
        let r = IntegralRepresentation::new(3, vec![vec![1, 1, 1], vec![1, 1, -1]], 1).unwrap();
        assert!(matches!(sts_from_representation(&g, &r), Err(Error::MatesPresent(p)) if p == vec![(0, 1)]));
    }

    #[test]
    fn small_c_rejected() {
        let t = construct_sts(9).unwrap();
        let g = block_graph(&t).unwrap();
        let r = canonical_block_representation(&t).unwrap();
        assert!(matches!(sts_from_representation(&g, &r), Err(Error::Precondition(_))));
    }
}

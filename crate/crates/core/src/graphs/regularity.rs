use super::Graph;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

/// All-pairs hop distances; `None` marks pairs in different components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn get(&self, x: usize, y: usize) -> Option<u32> {
        self.d[x * self.n + y]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> Diameter {
        let mut max = 0;
        for &d in &self.d {
            match d {
                None => return Diameter::Infinite,
                Some(d) => max = max.max(d as usize),
            }
        }
        Diameter::Finite(max)
    }

    /// Vertices at distance exactly `i` from `x`.
    pub fn sphere(&self, x: usize, i: u32) -> Vec<usize> {
        (0..self.n).filter(|&y| self.get(x, y) == Some(i)).collect()
    }
}

/// Breadth-first search from every vertex.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![None; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        d[s * n + s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = d[s * n + u].unwrap();
            for w in g.neighbors(u) {
                if d[s * n + w].is_none() {
                    d[s * n + w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Graph diameter, infinite for disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Diameter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|v| Diameter::Finite(v as usize))
                .ok_or_else(|| de::Error::custom("diameter must be a nonnegative integer")),
            serde_json::Value::String(s) if s == "infinity" => Ok(Diameter::Infinite),
            _ => Err(de::Error::custom("expected integer or \"infinity\"")),
        }
    }
}

/// A common-neighbour count that may hold vacuously (no pair to count over).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    Count(usize),
    Vacuous,
}

impl Param {
    /// True when the count equals `value`, or there was nothing to count.
    pub fn admits(self, value: usize) -> bool {
        match self {
            Param::Count(c) => c == value,
            Param::Vacuous => true,
        }
    }

    pub fn count(self) -> Option<usize> {
        match self {
            Param::Count(c) => Some(c),
            Param::Vacuous => None,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Count(c) => write!(f, "{c}"),
            Param::Vacuous => f.write_str("vacuous"),
        }
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Param::Count(c) => s.serialize_u64(*c as u64),
            Param::Vacuous => s.serialize_str("vacuous"),
        }
    }
}

impl<'de> Deserialize<'de> for Param {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|v| Param::Count(v as usize))
                .ok_or_else(|| de::Error::custom("count must be a nonnegative integer")),
            serde_json::Value::String(s) if s == "vacuous" => Ok(Param::Vacuous),
            _ => Err(de::Error::custom("expected integer or \"vacuous\"")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sesqui {
    pub n: usize,
    pub k: usize,
    pub c: Param,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Srg {
    pub n: usize,
    pub k: usize,
    pub a: Param,
    pub c: Param,
}

impl Srg {
    /// Exact match, with vacuous counts matching any value.
    pub fn matches(&self, n: usize, k: usize, a: usize, c: usize) -> bool {
        self.n == n && self.k == k && self.a.admits(a) && self.c.admits(c)
    }
}

/// Why a stronger regularity property is absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReasonCode {
    NotRegular,
    Disconnected,
    /// Pairs at distance two disagree on the number of common neighbours.
    DistanceTwoVaries,
    /// Adjacent pairs disagree on the number of common neighbours.
    AdjacentVaries,
    /// Some non-adjacent pair is at distance three or more.
    DiameterAboveTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub n: usize,
    pub connected: bool,
    pub regular: Option<usize>,
    pub sesqui: Option<Sesqui>,
    pub srg: Option<Srg>,
    pub diameter: Diameter,
    /// Set when `srg` (or a weaker field) is absent.
    pub reason: Option<ReasonCode>,
}

fn constant_count(mut counts: impl Iterator<Item = usize>) -> Option<Param> {
    let Some(first) = counts.next() else {
        return Some(Param::Vacuous);
    };
    counts.all(|c| c == first).then_some(Param::Count(first))
}

/// Brute-force regularity classification.
///
/// `sesqui` requires connectivity and a constant common-neighbour count over
/// pairs at distance exactly two. `srg` additionally requires a constant count
/// over adjacent pairs and diameter at most two, so that every non-adjacent
/// pair is counted by `c`.
pub fn classify_regularity(g: &Graph) -> RegularityReport {
    let n = g.n();
    let dist = distances(g);
    let diameter = dist.diameter();
    let connected = diameter != Diameter::Infinite;
    let k = g.degree(0);
    let regular = (0..n).all(|v| g.degree(v) == k).then_some(k);
    let mut report = RegularityReport { n, connected, regular, sesqui: None, srg: None, diameter, reason: None };
    if regular.is_none() {
        report.reason = Some(ReasonCode::NotRegular);
        return report;
    }
    if !connected {
        report.reason = Some(ReasonCode::Disconnected);
        return report;
    }
    let pairs = || (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)));
    let c = constant_count(pairs().filter(|&(x, y)| dist.get(x, y) == Some(2)).map(|(x, y)| g.common_neighbors(x, y)));
    let Some(c) = c else {
        report.reason = Some(ReasonCode::DistanceTwoVaries);
        return report;
    };
    report.sesqui = Some(Sesqui { n, k, c });
    let a = constant_count(pairs().filter(|&(x, y)| g.has_edge(x, y)).map(|(x, y)| g.common_neighbors(x, y)));
    let Some(a) = a else {
        report.reason = Some(ReasonCode::AdjacentVaries);
        return report;
    };
    if matches!(diameter, Diameter::Finite(d) if d > 2) {
        report.reason = Some(ReasonCode::DiameterAboveTwo);
        return report;
    }
    report.srg = Some(Srg { n, k, a, c });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, complete_multipartite, cycle_complement, disjoint_cycles, hypercube};

    #[test]
    fn cube_antipodes() {
        let d = distances(&hypercube(3).unwrap());
        assert_eq!(d.get(0b000, 0b111), Some(3));
        assert_eq!(d.diameter(), Diameter::Finite(3));
    }

    #[test]
    fn multipartite_diameter_two() {
        let d = distances(&complete_multipartite(4, 3).unwrap());
        assert_eq!(d.diameter(), Diameter::Finite(2));
    }

    #[test]
    fn disconnected_pairs_are_infinite() {
        let d = distances(&disjoint_cycles(&[3, 3]).unwrap());
        assert_eq!(d.get(0, 3), None);
        assert_eq!(d.diameter(), Diameter::Infinite);
    }

    #[test]
    fn cube_is_sesqui_not_srg() {
        let r = classify_regularity(&hypercube(3).unwrap());
        assert_eq!(r.sesqui, Some(Sesqui { n: 8, k: 3, c: Param::Count(2) }));
        assert_eq!(r.srg, None);
        assert_eq!(r.reason, Some(ReasonCode::DiameterAboveTwo));
    }

    #[test]
    fn cycle_complement_has_c_equal_k_minus_one() {
        let r = classify_regularity(&cycle_complement(&[4, 4]).unwrap());
        assert_eq!(r.sesqui, Some(Sesqui { n: 8, k: 5, c: Param::Count(4) }));
    }

    #[test]
    fn complete_graph_is_vacuous_in_c() {
        let r = classify_regularity(&complete_graph(5).unwrap());
        let srg = r.srg.unwrap();
        assert_eq!(srg.a, Param::Count(3));
        assert_eq!(srg.c, Param::Vacuous);
        assert!(srg.matches(5, 4, 3, 9));
    }

    #[test]
    fn disconnected_graphs_only_report_regularity() {
        let r = classify_regularity(&disjoint_cycles(&[3, 3]).unwrap());
        assert_eq!(r.regular, Some(2));
        assert_eq!(r.sesqui, None);
        assert_eq!(r.reason, Some(ReasonCode::Disconnected));
    }

    #[test]
    fn irregular_graph() {
        let r = classify_regularity(&crate::graphs::star(3).unwrap());
        assert_eq!(r.regular, None);
        assert_eq!(r.reason, Some(ReasonCode::NotRegular));
    }

    #[test]
    fn params_serialize() {
        assert_eq!(serde_json::to_string(&Param::Vacuous).unwrap(), "\"vacuous\"");
        assert_eq!(serde_json::to_string(&Diameter::Infinite).unwrap(), "\"infinity\"");
        let p: Param = serde_json::from_str("9").unwrap();
        assert_eq!(p, Param::Count(9));
    }
}

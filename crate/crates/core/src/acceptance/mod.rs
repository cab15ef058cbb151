//! The acceptance criteria, runnable from tests and from `sesqui accept`.
//!
//! Each criterion returns a [`CriterionResult`] with a one-line detail
//! string; failures carry the first witness found.

pub mod oracle;

use crate::error::Result;
use crate::exact::IntMatrix;
use crate::graphs::{
    classify_regularity, complete_multipartite, cycle_complement, hypercube, star, Figure, Graph, Param, Partition,
};
use crate::hoffman::{
    factors_reassemble, full_to_reduced, is_block_diagonal, random_hoffman, random_represented, reduced_to_full,
    verify_full_representation, verify_reduced_representation, verify_sum, HoffmanGraph, ReducedRepresentation,
};
use crate::lattice::{
    check_mate_free_structure, check_support_laws, cube3_representation, cycle_complement_representation, detect_mates,
    find_norm3_representation, gram_matrix, sts_from_representation, verify_integrable, IntegralRepresentation,
    SearchStatus,
};
use crate::spectra::{
    deep_pairs_bound, deep_pairs_quotient, fat_bound_determinant, fat_bound_matrix, layered_quotient, quotient_matrix,
    smallest_eigenvalue, EXTERNAL_TOLERANCE, INTERNAL_TOLERANCE,
};
use crate::steiner::{
    block_graph, canonical_block_representation, construct_sts, sts_srg_params, verify_sts, TripleSystem,
};
use oracle::{brute_force_norm3, connected_graphs_up_to_isomorphism, OracleVerdict};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::{Duration, Instant};

/// Node budget used by the search criteria.
pub const SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl CriterionResult {
    /// `PASS [3] cycle-complement witnesses (12 ms): ...`
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {} ({} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.detail
        )
    }
}

/// Inputs shared by the criteria.
#[derive(Clone, Debug, Default)]
pub struct Config {
    pub seed: u64,
    /// Replaces the constructed STS of the same order in criterion 1.
    pub sts_override: Option<TripleSystem>,
}

struct Criterion {
    id: u8,
    name: &'static str,
    tags: &'static [&'static str],
    limit: Duration,
    run: fn(&Config) -> Outcome,
}

type Outcome = std::result::Result<String, String>;

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        name: "sts block-graph parameters",
        tags: &["steiner", "graphs"],
        limit: Duration::from_secs(5),
        run: sts_parameters,
    },
    Criterion {
        id: 2,
        name: "block-graph witness pipeline",
        tags: &["steiner", "lattice"],
        limit: Duration::from_secs(10),
        run: block_pipeline,
    },
    Criterion {
        id: 3,
        name: "cycle-complement and cube witnesses",
        tags: &["lattice", "graphs"],
        limit: Duration::from_secs(2),
        run: explicit_witnesses,
    },
    Criterion {
        id: 4,
        name: "closed-form quotient eigenvalues",
        tags: &["spectra"],
        limit: Duration::from_secs(1),
        run: closed_forms,
    },
    Criterion {
        id: 5,
        name: "figure fixtures",
        tags: &["spectra", "hoffman", "graphs"],
        limit: Duration::from_secs(1),
        run: figures,
    },
    Criterion {
        id: 6,
        name: "interlacing property suite",
        tags: &["spectra"],
        limit: Duration::from_secs(30),
        run: interlacing,
    },
    Criterion {
        id: 7,
        name: "search oracle equivalence",
        tags: &["lattice", "search"],
        limit: Duration::from_secs(300),
        run: search_equivalence,
    },
    Criterion {
        id: 8,
        name: "hoffman calculus",
        tags: &["hoffman"],
        limit: Duration::from_secs(30),
        run: hoffman_calculus,
    },
    Criterion {
        id: 9,
        name: "support-law suite",
        tags: &["lattice"],
        limit: Duration::from_secs(5),
        run: support_laws,
    },
];

/// Whether `filter` selects criterion `id`: an exact id, a tag, or a
/// substring of the name.
fn selected(c: &Criterion, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => f == c.id.to_string() || c.tags.contains(&f) || c.name.contains(f),
    }
}

/// Runs every criterion selected by `filter`, in order.
pub fn run(config: &Config, filter: Option<&str>) -> Vec<CriterionResult> {
    CRITERIA.iter().filter(|c| selected(c, filter)).map(|c| run_one(c, config)).collect()
}

/// Runs a single criterion by id.
pub fn run_criterion(id: u8, config: &Config) -> Option<CriterionResult> {
    CRITERIA.iter().find(|c| c.id == id).map(|c| run_one(c, config))
}

fn run_one(c: &Criterion, config: &Config) -> CriterionResult {
    let start = Instant::now();
    let outcome = (c.run)(config);
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > c.limit {
        passed = false;
        detail = format!("over the {} ms runtime limit; {detail}", c.limit.as_millis());
    }
    CriterionResult {
        id: c.id,
        name: c.name,
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: c.limit.as_millis(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn sts_for(v: usize, config: &Config) -> Result<TripleSystem> {
    match &config.sts_override {
        Some(t) if t.v() == v => Ok(t.clone()),
        _ => construct_sts(v),
    }
}

fn sts_parameters(config: &Config) -> Outcome {
    for v in [7, 9, 13, 15, 19] {
        let t = lift(sts_for(v, config))?;
        let report = verify_sts(&t);
        if let Some(w) = report.witness {
            return Err(format!("STS({v}) fails at pair {:?}, which lies in {} blocks", w.pair, w.count));
        }
        let g = lift(block_graph(&t))?;
        let expected = lift(sts_srg_params(v))?;
        let srg =
            classify_regularity(&g).srg.ok_or_else(|| format!("block graph of STS({v}) is not strongly regular"))?;
        ensure(srg.matches(expected.n, expected.k, expected.a, expected.c), || {
            format!("STS({v}): classified {srg:?}, formula {expected:?}")
        })?;
        if v >= 9 {
            let lambda = smallest_eigenvalue(&g);
            ensure((lambda + 3.0).abs() <= EXTERNAL_TOLERANCE, || format!("STS({v}): λ_min = {lambda}"))?;
        }
    }
    Ok("srg parameters match (v(v−1)/6, 3(v−3)/2, (v+3)/2, 9) for v = 7, 9, 13, 15, 19; λ_min = −3 for v ≥ 9".into())
}

fn block_pipeline(_: &Config) -> Outcome {
    for v in [13, 15] {
        let t = lift(construct_sts(v))?;
        let g = lift(block_graph(&t))?;
        let r = lift(canonical_block_representation(&t))?;
        let target = IntMatrix::from_rows(g.adjacency_rows()).shifted(3);
        ensure(gram_matrix(&r) == target, || format!("STS({v}): Gram matrix differs from A + 3I"))?;
        let mf = lift(check_mate_free_structure(&g, &r))?;
        ensure(mf.pass && mf.c == 9, || format!("STS({v}): mate-free structure {mf:?}"))?;
        let rec = lift(sts_from_representation(&g, &r))?;
        let relabelled: Vec<[usize; 3]> =
            rec.system.blocks().iter().map(|b| b.map(|p| rec.coordinate_of_point[p])).collect();
        let back = lift(TripleSystem::new(v, relabelled))?;
        ensure(back.normalized() == t.normalized(), || format!("STS({v}): reconstruction differs"))?;
    }
    Ok("v = 13, 15: Gram = A + 3I, mate-free checks pass with c = 9, reconstruction round-trips".into())
}

/// Lists used by criterion 3; `true` marks the all-triangle cases (`c = k`).
const CYCLE_CASES: [(&[usize], bool); 5] =
    [(&[4, 4], false), (&[4, 5], false), (&[3, 3], true), (&[3, 3, 3, 3], true), (&[7], false)];

fn explicit_witnesses(_: &Config) -> Outcome {
    for (lengths, triangles) in CYCLE_CASES {
        let g = lift(cycle_complement(lengths))?;
        let r = lift(cycle_complement_representation(lengths))?;
        let report = lift(verify_integrable(&g, &r, 1))?;
        ensure(report.pass, || format!("{lengths:?}: {:?}", report.violation))?;
        let s = classify_regularity(&g).sesqui.ok_or_else(|| format!("{lengths:?}: not sesqui-regular"))?;
        let expected = if triangles { s.k } else { s.k - 1 };
        ensure(s.c == Param::Count(expected), || format!("{lengths:?}: c = {}, k = {}", s.c, s.k))?;
    }
    let cube = lift(hypercube(3))?;
    let report = lift(verify_integrable(&cube, &cube3_representation(), 1))?;
    ensure(report.pass, || format!("cube: {:?}", report.violation))?;
    Ok("five cycle-complement representations and the cube witness verify; c = k − 1 or c = k as expected".into())
}

fn closed_forms(_: &Config) -> Outcome {
    for k in 3..=20 {
        let closed = lift(deep_pairs_bound(k))?;
        let solved = lift(deep_pairs_quotient(k))?.smallest_eigenvalue();
        ensure((closed - solved).abs() <= INTERNAL_TOLERANCE, || {
            format!("k = {k}: closed form {closed}, eigensolve {solved}")
        })?;
        let layered = lift(layered_quotient(k))?.smallest_eigenvalue();
        ensure((layered + k as f64).abs() <= INTERNAL_TOLERANCE, || {
            format!("k = {k}: layered quotient λ_min = {layered}")
        })?;
    }
    let at3 = lift(deep_pairs_bound(3))?;
    ensure((at3 + 3.0).abs() <= INTERNAL_TOLERANCE, || format!("bound at k = 3 is {at3}"))?;
    Ok("3×3 closed form matches eigensolve for k = 3..20 and equals −3 at k = 3; 4×4 quotient gives −k".into())
}

fn figures(_: &Config) -> Outcome {
    let fig3 = HoffmanGraph::figure3().smallest_eigenvalue();
    ensure((fig3 + 4.0).abs() <= EXTERNAL_TOLERANCE, || format!("figure 3: λ_min = {fig3}"))?;
    for f in [Figure::Fig1a, Figure::Fig1b, Figure::Fig2] {
        let lambda = smallest_eigenvalue(&f.graph());
        ensure(lambda < -2.0 - EXTERNAL_TOLERANCE, || format!("{f}: λ_min = {lambda}"))?;
    }
    for w in 0..=20i64 {
        let exact = fat_bound_matrix(w).shifted(3).determinant();
        let closed = fat_bound_determinant(w);
        ensure(exact == closed.into(), || format!("w = {w}: det = {exact}, closed form {closed}"))?;
        ensure((closed < 0) == (w >= 7), || format!("w = {w}: sign of {closed} is wrong"))?;
    }
    Ok("figure 3 gives −4; figures 1a, 1b, 2 lie below −2; det(M + 3I) = 258 − 37w, negative iff w ≥ 7".into())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("edges are in range")
}

fn interlacing(config: &Config) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut trials = 0;
    for graph in 0..200 {
        let n = rng.gen_range(1..=40);
        let p = rng.gen_range(0.05..0.95);
        let g = random_graph(&mut rng, n, p);
        let lambda = smallest_eigenvalue(&g);
        for _ in 0..3 {
            let size = rng.gen_range(1..=n);
            let mut vertices: Vec<usize> = (0..n).collect();
            vertices.shuffle(&mut rng);
            vertices.truncate(size);
            let sub = lift(g.induced(&vertices))?;
            let mu = smallest_eigenvalue(&sub);
            ensure(mu >= lambda - EXTERNAL_TOLERANCE, || {
                format!("graph {graph}: induced subgraph on {vertices:?} has λ_min {mu} < {lambda}")
            })?;
            let cells = rng.gen_range(1..=n);
            let labels: Vec<usize> = (0..n).map(|v| if v < cells { v } else { rng.gen_range(0..cells) }).collect();
            let partition = lift(Partition::from_labels(&labels))?;
            let q = lift(quotient_matrix(&g, &partition))?.smallest_eigenvalue();
            ensure(q >= lambda - EXTERNAL_TOLERANCE, || {
                format!("graph {graph}: quotient for labels {labels:?} has λ_min {q} < {lambda}")
            })?;
            trials += 1;
        }
    }
    Ok(format!("{trials} induced-subgraph and {trials} quotient trials on 200 random graphs"))
}

/// Verified witnesses from criterion 7, with their graphs.
fn search_witnesses() -> std::result::Result<(Vec<(Graph, IntegralRepresentation)>, String), String> {
    let graphs = connected_graphs_up_to_isomorphism(6);
    let mut witnesses = Vec::new();
    let (mut found, mut exhausted, mut rejected) = (0, 0, 0);
    for (i, g) in graphs.iter().enumerate() {
        let out = lift(find_norm3_representation(g, SEARCH_BUDGET))?;
        let reference = brute_force_norm3(g);
        let agree = matches!(
            (out.status, &reference),
            (SearchStatus::Found, OracleVerdict::Found(_))
                | (SearchStatus::Exhausted, OracleVerdict::Exhausted)
                | (SearchStatus::NotRepresentable, OracleVerdict::Indefinite)
        );
        ensure(agree, || format!("graph {i} ({:?}): search {:?}, oracle {reference:?}", g.edges(), out.status))?;
        match out.status {
            SearchStatus::Found => {
                found += 1;
                let r = out.representation.expect("found outcomes carry a witness");
                let report = lift(verify_integrable(g, &r, 1))?;
                ensure(report.pass, || format!("graph {i}: witness fails {:?}", report.violation))?;
                witnesses.push((g.clone(), r));
                if let OracleVerdict::Found(x) = reference {
                    let d = x[0].len();
                    let r = lift(IntegralRepresentation::new(d, x, 1))?;
                    let report = lift(verify_integrable(g, &r, 1))?;
                    ensure(report.pass, || format!("graph {i}: oracle witness fails {:?}", report.violation))?;
                    witnesses.push((g.clone(), r));
                }
            }
            SearchStatus::Exhausted => exhausted += 1,
            SearchStatus::NotRepresentable => rejected += 1,
            SearchStatus::BudgetExceeded => return Err(format!("graph {i}: budget exceeded")),
        }
        if smallest_eigenvalue(g) < -3.0 - EXTERNAL_TOLERANCE {
            ensure(out.status == SearchStatus::NotRepresentable, || {
                format!("graph {i}: λ_min < −3 but {:?}", out.status)
            })?;
        }
    }
    Ok((
        witnesses,
        format!("{} graphs: {found} found, {exhausted} exhausted, {rejected} not representable", graphs.len()),
    ))
}

fn search_equivalence(_: &Config) -> Outcome {
    let (_, summary) = search_witnesses()?;
    for (name, g) in [
        ("K_{1,10}", lift(star(10))?),
        ("K_{4,4}", lift(complete_multipartite(2, 4))?),
        ("K_{3,4}", lift(Graph::from_edges(7, (0..3).flat_map(|u| (3..7).map(move |v| (u, v)))))?),
    ] {
        let out = lift(find_norm3_representation(&g, SEARCH_BUDGET))?;
        ensure(out.status == SearchStatus::NotRepresentable, || format!("{name}: {:?}", out.status))?;
        ensure(brute_force_norm3(&g) == OracleVerdict::Indefinite, || format!("{name}: oracle disagrees"))?;
    }
    Ok(format!("{summary}; K_{{1,10}}, K_{{4,4}}, K_{{3,4}} not representable"))
}

fn hoffman_calculus(config: &Config) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed);
    let (mut decomposable, mut sums, mut represented) = (0, 0, 0);
    for trial in 0..100 {
        let (h, psi): (HoffmanGraph, Option<ReducedRepresentation>) = if trial % 2 == 0 {
            let t = 3 + (trial / 2) % 2;
            let (h, psi) = random_represented(&mut rng, 15, 6, t);
            (h, Some(psi))
        } else {
            let p = rng.gen_range(0.1..0.9);
            let q = rng.gen_range(0.1..0.6);
            (random_hoffman(&mut rng, 15, 6, p, q), None)
        };
        let sp = h.special_matrix();
        let factors = h.decompose();
        let cells: Vec<&[usize]> = factors.iter().map(|f| f.slim_vertices()).collect();
        ensure(is_block_diagonal(&sp, &cells) && factors_reassemble(&h, &factors), || {
            format!("trial {trial}: factors do not reassemble Sp")
        })?;
        if factors.len() > 1 {
            decomposable += 1;
            let first: Vec<usize> = factors[0].slim_vertices().to_vec();
            let rest: Vec<usize> = factors[1..].iter().flat_map(|f| f.slim_vertices().to_vec()).collect();
            let report = lift(verify_sum(&h, &lift(h.generated(&first))?, &lift(h.generated(&rest))?))?;
            ensure(report.pass, || format!("trial {trial}: factor split is not a sum: {report:?}"))?;
        }
        if h.n_slim() >= 2 {
            for _ in 0..4 {
                let mut slim: Vec<usize> = (0..h.n_slim()).collect();
                slim.shuffle(&mut rng);
                let cut = rng.gen_range(1..h.n_slim());
                let (w1, w2) = slim.split_at(cut);
                let report = lift(verify_sum(&h, &lift(h.generated(w1))?, &lift(h.generated(w2))?))?;
                ensure(report.pass == is_block_diagonal(&sp, &[w1, w2]), || {
                    format!("trial {trial}: verify_sum {} disagrees with block-diagonality for {w1:?}", report.pass)
                })?;
                sums += 1;
            }
        }
        let lambda = h.smallest_eigenvalue();
        for _ in 0..4 {
            let vertices: Vec<usize> = (0..h.n()).filter(|_| rng.gen_bool(0.6)).collect();
            let Ok(sub) = h.induced(&vertices) else { continue };
            let mu = sub.hoffman.smallest_eigenvalue();
            ensure(mu >= lambda - EXTERNAL_TOLERANCE, || {
                format!("trial {trial}: subgraph on {vertices:?} has λ_min {mu} < {lambda}")
            })?;
        }
        if let Some(psi) = psi {
            let t = psi.t();
            let report = lift(verify_reduced_representation(&h, &psi, t))?;
            ensure(report.pass, || format!("trial {trial}: generated ψ fails {:?}", report.violation))?;
            let phi = lift(reduced_to_full(&h, &psi, t))?;
            let full = lift(verify_full_representation(&h, &phi))?;
            ensure(full.pass, || format!("trial {trial}: full representation fails {:?}", full.violation))?;
            ensure(lift(full_to_reduced(&h, &phi))? == psi, || format!("trial {trial}: full → reduced differs"))?;
            represented += 1;
        }
    }
    Ok(format!(
        "100 graphs: {decomposable} decomposable, {sums} sum checks, {represented} reduced representations lifted"
    ))
}

fn support_laws(_: &Config) -> Outcome {
    let mut reps: Vec<(Graph, IntegralRepresentation)> = Vec::new();
    for v in [13, 15] {
        let t = lift(construct_sts(v))?;
        reps.push((lift(block_graph(&t))?, lift(canonical_block_representation(&t))?));
    }
    for (lengths, _) in CYCLE_CASES {
        reps.push((lift(cycle_complement(lengths))?, lift(cycle_complement_representation(lengths))?));
    }
    reps.push((lift(hypercube(3))?, cube3_representation()));
    let (found, _) = search_witnesses()?;
    reps.extend(found);
    let mut with_mates = 0;
    for (i, (g, r)) in reps.iter().enumerate() {
        let law = lift(check_support_laws(g, r))?;
        ensure(law.pass, || format!("representation {i}: violations {:?}", law.violations))?;
        let mates = lift(detect_mates(r))?;
        for &(x, y) in &mates.pairs {
            ensure(g.has_edge(x, y) && mates.mate(x) == Some(y) && mates.mate(y) == Some(x), || {
                format!("representation {i}: mates {x}, {y} inconsistent")
            })?;
        }
        with_mates += !mates.is_empty() as usize;
    }
    Ok(format!("{} representations obey the intersection law; {with_mates} contain mates, all adjacent", reps.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_selection() {
        let c = &CRITERIA[0];
        assert!(selected(c, None));
        assert!(selected(c, Some("steiner")));
        assert!(selected(c, Some("1")));
        assert!(!selected(c, Some("hoffman")));
    }

    #[test]
    fn corrupted_fixture_fails_with_witness() {
        let t = construct_sts(7).unwrap();
        let mut blocks = t.blocks().to_vec();
        blocks[0] = [blocks[0][0], blocks[0][1], blocks[1][2]];
        if blocks[0][2] == blocks[0][0] || blocks[0][2] == blocks[0][1] {
            blocks[0][2] = (0..7).find(|p| !blocks[0].contains(p)).unwrap();
        }
        let config = Config { seed: 0, sts_override: Some(TripleSystem::new(7, blocks).unwrap()) };
        let r = run_criterion(1, &config).unwrap();
        assert!(!r.passed);
        assert!(r.detail.contains("pair"), "{}", r.detail);
    }
}

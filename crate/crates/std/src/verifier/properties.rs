//! Seeded randomized invariant suites.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use trebly_core::chords::{
    find_k_chords_at_apex, longest_cycle, max_path_order, verify_certificate,
};
use trebly_core::graph::{graph6_encode, Family};
use trebly_core::spectral::appendix::{item_partition, valid_params, AppendixId};
use trebly_core::spectral::{
    max_eta, q_compare_rational, q_exact_compare, q_index, q_value, quotient_matrix,
    SpectralResult, DEFAULT_TOLERANCE,
};
use trebly_core::{Graph, VertexSet};

use super::claims::{check_claims, ClaimBounds, ClaimTally};
use super::parallel::map_chunks;
use super::report::{Detail, Report, COUNTEREXAMPLE_CAP};
use super::sampling::{
    connected_graph, er_graph, greedy_config_free, random_permutation, stratum,
    structured_config_free, with_edge_count, without_isolated,
};
use super::{elapsed_ms, VerifyError, NEAR_TIE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyOptions {
    pub seed: u64,
    /// Trials per suite.
    pub trials: usize,
    pub bounds: ClaimBounds,
    pub jobs: usize,
}

impl Default for PropertyOptions {
    fn default() -> PropertyOptions {
        PropertyOptions {
            seed: 0,
            trials: 1000,
            bounds: ClaimBounds::default(),
            jobs: 1,
        }
    }
}

pub const SUITES: [&str; 8] = [
    "subgraph_monotonicity",
    "perron_shift",
    "equitable_quotient",
    "eta_bound",
    "longest_cycle_edges",
    "apex_free_edge_bound",
    "path_free_edges",
    "structural_claims",
];

/// Largest order sampled for the structural claims.
const CLAIMS_MAX_ORDER: usize = 10;
const LISTED: usize = 16;

#[derive(Debug, Default)]
struct Outcome {
    cases: u64,
    skipped: u64,
    messages: Vec<String>,
    graphs: Vec<String>,
    failure_count: u64,
    values: BTreeMap<String, Value>,
    extra: Vec<Detail>,
}

impl Outcome {
    fn fail(&mut self, g: &Graph, what: impl FnOnce() -> String) {
        self.failure_count += 1;
        let code = graph6_encode(g);
        if self.messages.len() < LISTED {
            self.messages.push(format!("{code}: {}", what()));
        }
        if self.graphs.len() < COUNTEREXAMPLE_CAP && !self.graphs.contains(&code) {
            self.graphs.push(code);
        }
    }

    fn check(&mut self, g: &Graph, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(g, what);
        }
    }

    fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.to_string(), value.into());
    }
}

fn q(g: &Graph) -> f64 {
    q_value(g).expect("non-empty graph")
}

/// Orders `q(g)` against `q(h)`, exactly when the floats are within the band.
fn q_order(g: &Graph, qg: f64, h: &Graph, qh: f64) -> Ordering {
    if (qg - qh).abs() <= NEAR_TIE {
        q_exact_compare(g, h)
    } else {
        qg.total_cmp(&qh)
    }
}

fn subgraph_monotonicity(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut out = Outcome::default();
    for t in 0..trials {
        let n = rng.random_range(2..=10);
        let g = er_graph(rng, n, stratum(t));
        let keep: VertexSet = (0..n).filter(|_| rng.random_bool(0.8)).collect();
        let keep = if keep.is_empty() {
            VertexSet::singleton(0)
        } else {
            keep
        };
        let (induced, _) = g.induced(&keep);
        let edges: Vec<_> = induced.edges().filter(|_| rng.random_bool(0.7)).collect();
        let h = Graph::from_edges(induced.n(), &edges).expect("subgraph edges");
        let proper = h.n() < n || h.edge_count() < g.edge_count();
        let strict = proper && g.is_connected();
        let ord = q_order(&h, q(&h), &g, q(&g));
        let ok = if strict { ord.is_lt() } else { ord.is_le() };
        out.check(&g, ok, || {
            format!("subgraph {} has q ordered {ord:?}", graph6_encode(&h))
        });
    }
    out
}

/// A connected graph with Perron vector `x`, and `u`, `v`, `S` as in the
/// edge-shift statement; redrawn until such a triple exists.
fn shift_instance(
    rng: &mut ChaCha8Rng,
    t: usize,
) -> (Graph, SpectralResult, usize, usize, Vec<usize>) {
    loop {
        let n = rng.random_range(3..=9);
        let g = connected_graph(rng, n, stratum(t) / 2.0);
        let r = q_index(&g, DEFAULT_TOLERANCE).expect("non-empty graph");
        for _ in 0..16 {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n - 1);
            let b = if b >= a { b + 1 } else { b };
            let (u, v) = if r.vector[a] >= r.vector[b] {
                (a, b)
            } else {
                (b, a)
            };
            let mut closed_u = g.neighbors(u);
            closed_u.insert(u);
            let options: Vec<usize> = (g.neighbors(v) - closed_u).iter().collect();
            if options.is_empty() {
                continue;
            }
            let mut s: Vec<usize> = options
                .iter()
                .copied()
                .filter(|_| rng.random_bool(0.5))
                .collect();
            if s.is_empty() {
                s.push(*options.choose(rng).expect("non-empty"));
            }
            return (g, r, u, v, s);
        }
    }
}

fn perron_shift(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut out = Outcome::default();
    for t in 0..trials {
        let (g, r, u, v, s) = shift_instance(rng, t);
        let mut h = g.clone();
        for &w in &s {
            h = h.without_edge(v, w).expect("edge exists");
            h = h.with_edge(u, w).expect("in range");
        }
        let ord = q_order(&h, q(&h), &g, r.q);
        out.check(&g, ord.is_gt(), || {
            format!("moving {s:?} from {v} to {u} gives q ordered {ord:?}")
        });
    }
    out
}

fn equitable_quotient(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut out = Outcome::default();
    let fixtures: Vec<(AppendixId, usize, Option<usize>)> = AppendixId::all()
        .into_iter()
        .filter(|id| id.has_matrix())
        .flat_map(|id| {
            valid_params(id, 7, 14)
                .into_iter()
                .map(move |(n, s)| (id, n, s))
        })
        .collect();
    out.note("fixtures", fixtures.len());
    for _ in 0..trials {
        let &(id, n, s) = fixtures.choose(rng).expect("fixtures exist");
        let (g, blocks) = item_partition(id, n, s).expect("valid parameters");
        let perm = random_permutation(rng, n);
        let g = g.relabel(&perm).expect("permutation");
        let blocks: Vec<VertexSet> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|b| b.iter().map(|v| perm[v]).collect())
            .collect();
        let label = || format!("{id} n={n} s={s:?}");
        match quotient_matrix(&g, &blocks) {
            Ok(b) if b.equitable => {
                let lambda = b.spectral_radius().unwrap_or(f64::NAN);
                let qg = q(&g);
                out.check(&g, (lambda - qg).abs() <= 1e-8, || {
                    format!("{}: lambda {lambda} vs q {qg}", label())
                });
            }
            Ok(_) => out.check(&g, false, || {
                format!("{}: partition is not equitable", label())
            }),
            Err(e) => out.check(&g, false, || format!("{}: {e}", label())),
        }
    }
    out
}

/// Regular, or bipartite with each side of constant degree.
fn regular_or_semiregular_bipartite(g: &Graph) -> bool {
    let n = g.n();
    if (0..n).all(|v| g.degree(v) == g.degree(0)) {
        return true;
    }
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).iter() {
            match side[u] {
                None => {
                    side[u] = Some(!side[v].expect("coloured"));
                    stack.push(u);
                }
                Some(c) if c == side[v].expect("coloured") => return false,
                Some(_) => {}
            }
        }
    }
    [false, true].iter().all(|&c| {
        let mut d = (0..n).filter(|&v| side[v] == Some(c)).map(|v| g.degree(v));
        let first = d.next();
        d.all(|x| Some(x) == first)
    })
}

fn eta_fixture(rng: &mut ChaCha8Rng) -> Graph {
    let family = match rng.random_range(0..4) {
        0 => Family::Cycle {
            n: rng.random_range(3..=10),
        },
        1 => Family::Complete {
            n: rng.random_range(2..=8),
        },
        2 => Family::CompleteMultipartite {
            parts: vec![rng.random_range(1..=4), rng.random_range(1..=5)],
        },
        _ => {
            // Disjoint copies of one cycle are regular but disconnected.
            let k = rng.random_range(3..=5);
            return Graph::cycle(k).and_then(|c| c.copies(2)).expect("small");
        }
    };
    family.graph().expect("valid parameters")
}

fn eta_bound(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut out = Outcome::default();
    let mut equalities = 0u64;
    for t in 0..trials {
        let g = match t % 8 {
            0 => eta_fixture(rng),
            1 | 2 => {
                let n = rng.random_range(2..=10);
                let g = er_graph(rng, n, stratum(t));
                without_isolated(rng, g)
            }
            _ => {
                let n = rng.random_range(2..=10);
                connected_graph(rng, n, stratum(t) / 2.0)
            }
        };
        let e = max_eta(&g).expect("no isolated vertex");
        let bound = BigRational::new(BigInt::from(*e.numer()), BigInt::from(*e.denom()));
        let ord = q_compare_rational(&g, &bound);
        out.check(&g, ord.is_le(), || format!("q exceeds max eta {e}"));
        if ord.is_eq() {
            equalities += 1;
        }
        if g.is_connected() {
            let expected = regular_or_semiregular_bipartite(&g);
            out.check(&g, ord.is_eq() == expected, || {
                format!(
                    "equality is {} but the degree structure says {expected}",
                    ord.is_eq()
                )
            });
        }
    }
    out.note("equalities", equalities);
    out
}

fn longest_cycle_edges(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut out = Outcome::default();
    for t in 0..trials {
        let (g, c, cycle) = loop {
            let n = rng.random_range(3..=12);
            let g = er_graph(rng, n, stratum(t) / 2.0);
            if let Some((c, cycle)) = longest_cycle(&g).expect("order within the search limit") {
                break (g, c, cycle);
            }
        };
        let n = g.n();
        let on: VertexSet = cycle.iter().collect();
        let off = g.edge_count() - g.induced_edge_count(&on);
        out.check(&g, 2 * off <= c * (n - c), || {
            format!("{off} edges leave the longest cycle of length {c}")
        });
    }
    out
}

fn apex_free_edge_bound(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut out = Outcome::default();
    for _ in 0..trials {
        let n = rng.random_range(10..=14);
        let m = (4 * n - 15 + rng.random_range(0..=n)).min(n * (n - 1) / 2);
        let g = with_edge_count(rng, n, m);
        let ok = find_k_chords_at_apex(&g, 3).is_some_and(|c| verify_certificate(&g, &c, 3, true));
        out.check(&g, ok, || format!("{m} edges and no verified certificate"));
    }
    out
}

fn path_free_edges(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut out = Outcome::default();
    let mut extremal = 0u64;
    for t in 0..trials {
        let g = if t % 5 == 0 {
            let k = rng.random_range(1..=4);
            let copies = rng.random_range(1..=12 / (k + 1));
            let perm = random_permutation(rng, copies * (k + 1));
            Graph::complete(k + 1)
                .and_then(|c| c.copies(copies))
                .and_then(|g| g.relabel(&perm))
                .expect("small")
        } else {
            loop {
                let n = rng.random_range(2..=12);
                let g = er_graph(rng, n, stratum(t) / 3.0);
                if g.edge_count() > 0 {
                    break g;
                }
            }
        };
        let n = g.n();
        let k = max_path_order(&g).expect("order within the search limit") - 1;
        let twice = 2 * g.edge_count();
        out.check(&g, twice <= n * k, || {
            format!("{} edges with longest path order {}", g.edge_count(), k + 1)
        });
        let cliques = g
            .components()
            .iter()
            .all(|c| c.len() == k + 1 && g.induced_edge_count(c) == k * (k + 1) / 2);
        if cliques {
            extremal += 1;
        }
        out.check(&g, (twice == n * k) == cliques, || {
            format!(
                "equality is {} but clique cover is {cliques}",
                twice == n * k
            )
        });
    }
    out.note("extremal", extremal);
    out
}

fn claims_sample(rng: &mut ChaCha8Rng, t: usize) -> Option<Graph> {
    match t % 3 {
        0 | 1 => {
            (0..16).find_map(|_| structured_config_free(rng).filter(|g| g.n() <= CLAIMS_MAX_ORDER))
        }
        _ => {
            let n = rng.random_range(7..=CLAIMS_MAX_ORDER);
            Some(greedy_config_free(rng, n, stratum(t)))
        }
    }
}

fn structural_claims(rng: &mut ChaCha8Rng, trials: usize, bounds: &ClaimBounds) -> Outcome {
    let mut out = Outcome::default();
    let mut tally = ClaimTally::default();
    for t in 0..trials {
        let Some(g) = claims_sample(rng, t) else {
            out.skipped += 1;
            continue;
        };
        out.cases += 1;
        let before = tally.violation_count;
        check_claims(&g, bounds, &mut tally);
        if tally.violation_count > before {
            out.failure_count += tally.violation_count - before;
            let code = graph6_encode(&g);
            if out.graphs.len() < COUNTEREXAMPLE_CAP {
                out.graphs.push(code);
            }
        }
    }
    out.messages = tally.violations.clone();
    out.note("apexes", tally.apexes);
    out.note("uncatalogued", tally.uncatalogued);
    out.note(
        "checks",
        serde_json::to_value(&tally.checks).expect("map of counts"),
    );
    out.note(
        "max_seen",
        serde_json::to_value(&tally.max_seen).expect("map of counts"),
    );
    let unattained = tally.unattained(bounds);
    out.extra.push(
        Detail::new("claim_sharpness", unattained.is_empty())
            .with(
                "bounds",
                serde_json::to_value(bounds).expect("plain struct"),
            )
            .with("unattained", unattained),
    );
    out
}

fn run_suite(index: usize, opts: &PropertyOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(index as u64);
    let trials = opts.trials;
    match SUITES[index] {
        "subgraph_monotonicity" => subgraph_monotonicity(&mut rng, trials),
        "perron_shift" => perron_shift(&mut rng, trials),
        "equitable_quotient" => equitable_quotient(&mut rng, trials),
        "eta_bound" => eta_bound(&mut rng, trials),
        "longest_cycle_edges" => longest_cycle_edges(&mut rng, trials),
        "apex_free_edge_bound" => apex_free_edge_bound(&mut rng, trials),
        "path_free_edges" => path_free_edges(&mut rng, trials),
        "structural_claims" => structural_claims(&mut rng, trials, &opts.bounds),
        other => unreachable!("unknown suite {other}"),
    }
}

/// Runs every suite in [`SUITES`] for `opts.trials` trials each. Results do
/// not depend on `opts.jobs`.
pub fn property_suite(opts: PropertyOptions) -> Result<Report, VerifyError> {
    if opts.trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    let start = Instant::now();
    let outcomes = map_chunks(SUITES.len() as u64, opts.jobs, |range| {
        range
            .map(|i| run_suite(i as usize, &opts))
            .collect::<Vec<_>>()
    });
    let mut report = Report::new("properties")
        .param("seed", opts.seed)
        .param("trials", opts.trials)
        .param(
            "bounds",
            serde_json::to_value(opts.bounds).expect("plain struct"),
        );
    for (name, o) in SUITES.iter().zip(outcomes.into_iter().flatten()) {
        log::info!("{name}: {} cases, {} failures", o.cases, o.failure_count);
        report.graphs_examined += o.cases;
        report.counterexample_count += o.failure_count;
        for code in o.graphs {
            report.push_counterexample(code);
        }
        let mut d = Detail::new(*name, o.failure_count == 0 && o.cases > 0)
            .with("cases", o.cases)
            .with("skipped", o.skipped)
            .with("failures", o.failure_count)
            .with("failed", o.messages);
        for (k, v) in o.values {
            d = d.with(&k, v);
        }
        report.details.push(d);
        report.details.extend(o.extra);
    }
    report.finish(elapsed_ms(start));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_structure_for_eta_equality() {
        let yes = [
            Graph::cycle(6).unwrap(),
            Graph::complete(5).unwrap(),
            Family::CompleteMultipartite { parts: vec![2, 3] }
                .graph()
                .unwrap(),
            Family::Star { s: 4 }.graph().unwrap(),
        ];
        for g in &yes {
            assert!(regular_or_semiregular_bipartite(g));
        }
        assert!(!regular_or_semiregular_bipartite(&Graph::path(4).unwrap()));
        assert!(!regular_or_semiregular_bipartite(
            &Family::StarPlus { s: 3 }.graph().unwrap()
        ));
    }

    #[test]
    fn zero_trials_is_an_error() {
        let opts = PropertyOptions {
            trials: 0,
            ..PropertyOptions::default()
        };
        assert_eq!(property_suite(opts), Err(VerifyError::NoTrials));
    }

    #[test]
    fn small_run_is_deterministic() {
        let opts = PropertyOptions {
            seed: 3,
            trials: 40,
            ..PropertyOptions::default()
        };
        let a = property_suite(opts).unwrap();
        let b = property_suite(PropertyOptions { jobs: 3, ..opts }).unwrap();
        assert!(diff(&a, &b).is_empty());
        for name in SUITES.iter().filter(|&&s| s != "structural_claims") {
            assert!(a.detail(name).unwrap().passed, "{name}");
        }
    }

    fn diff(a: &Report, b: &Report) -> Vec<String> {
        crate::verifier::diff_reports(a, b)
    }
}

use std::time::Instant;

use trebly_core::chords::{find_k_chords_at_apex, verify_certificate};
use trebly_core::graph::{graph6_encode, is_isomorphic};
use trebly_core::spectral::{q_exact_compare, q_value};
use trebly_core::Graph;

use super::enumerate::{Constraints, Enumeration};
use super::parallel::map_chunks;
use super::report::{Detail, Report, COUNTEREXAMPLE_CAP};
use super::{elapsed_ms, extremal_graph, VerifyError, NEAR_TIE};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremOptions {
    /// Subtracted from the threshold; non-zero values are mutation runs and
    /// compare in floating point only.
    pub threshold_offset: f64,
    pub allow_n8: bool,
    pub jobs: usize,
}

impl Default for TheoremOptions {
    fn default() -> TheoremOptions {
        TheoremOptions {
            threshold_offset: 0.0,
            allow_n8: false,
            jobs: 1,
        }
    }
}

/// Threshold state shared by the theorem and corollary passes.
pub(super) struct Threshold {
    pub extremal: Graph,
    pub exact: f64,
    pub offset: f64,
}

impl Threshold {
    pub fn new(n: usize, offset: f64) -> Threshold {
        let extremal = extremal_graph(n);
        let exact = q_value(&extremal).expect("extremal graph has a spectrum");
        Threshold {
            extremal,
            exact,
            offset,
        }
    }

    pub fn value(&self) -> f64 {
        self.exact - self.offset
    }

    /// Orders `q(g)` (already computed as `q`) against the threshold.
    pub fn compare(&self, g: &Graph, q: f64) -> std::cmp::Ordering {
        if self.offset == 0.0 && (q - self.exact).abs() <= NEAR_TIE {
            q_exact_compare(g, &self.extremal)
        } else {
            q.partial_cmp(&self.value())
                .unwrap_or(std::cmp::Ordering::Less)
        }
    }

    /// Names the cheap bound, `q <= 2Δ` or `q <= max_{uv} d(u) + d(v)`, that
    /// already puts `q` strictly below the threshold, if any.
    pub fn prefilter(&self, g: &Graph) -> Option<&'static str> {
        let t = self.value();
        if ((2 * g.max_degree()) as f64) < t {
            return Some("max_degree");
        }
        let edge_bound = g
            .edges()
            .map(|(u, v)| g.degree(u) + g.degree(v))
            .max()
            .unwrap_or(0);
        ((edge_bound as f64) < t).then_some("edge_degree_sum")
    }

    pub fn in_spot_sample(mask: u64) -> bool {
        mask % 100 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Below,
    Certified,
    BadCertificate,
    Extremal,
    Counterexample,
}

fn classify(g: &Graph, t: &Threshold) -> Outcome {
    let q = q_value(g).expect("non-empty graph");
    if t.compare(g, q).is_lt() {
        return Outcome::Below;
    }
    match find_k_chords_at_apex(g, 3) {
        Some(c) if verify_certificate(g, &c, 3, true) => Outcome::Certified,
        Some(_) => Outcome::BadCertificate,
        None if is_isomorphic(g, &t.extremal) => Outcome::Extremal,
        None => Outcome::Counterexample,
    }
}

#[derive(Debug, Default)]
struct Tally {
    examined: u64,
    skipped_max_degree: u64,
    skipped_edge_sum: u64,
    spot_checked: u64,
    spot_failures: u64,
    at_or_above: u64,
    certified: u64,
    bad_certificates: u64,
    extremal_hits: u64,
    counterexamples: Vec<String>,
    counterexample_count: u64,
}

impl Tally {
    fn absorb(&mut self, o: Tally) {
        self.examined += o.examined;
        self.skipped_max_degree += o.skipped_max_degree;
        self.skipped_edge_sum += o.skipped_edge_sum;
        self.spot_checked += o.spot_checked;
        self.spot_failures += o.spot_failures;
        self.at_or_above += o.at_or_above;
        self.certified += o.certified;
        self.bad_certificates += o.bad_certificates;
        self.extremal_hits += o.extremal_hits;
        self.counterexample_count += o.counterexample_count;
        self.counterexamples.extend(o.counterexamples);
        self.counterexamples.truncate(COUNTEREXAMPLE_CAP);
    }
}

fn check_supported(n: usize, allow_n8: bool, lo: usize) -> Result<(), VerifyError> {
    let supported = if lo == 6 { "6, 7, 8" } else { "7, 8" };
    if !(lo..=8).contains(&n) {
        return Err(VerifyError::UnsupportedOrder { n, supported });
    }
    if n == 8 && !allow_n8 {
        return Err(VerifyError::NeedsOptIn);
    }
    Ok(())
}

/// Checks, over every labelled graph of order `n` without isolated
/// vertices, that `q(G) >= q(extremal)` forces three chords at a common
/// vertex on some cycle unless `G` is the extremal graph.
pub fn verify_theorem_main(n: usize, opts: TheoremOptions) -> Result<Report, VerifyError> {
    check_supported(n, opts.allow_n8, 6)?;
    let start = Instant::now();
    let t = Threshold::new(n, opts.threshold_offset);
    let e = Enumeration::new(
        n,
        Constraints {
            no_isolated: true,
            ..Constraints::default()
        },
    )?;
    log::info!(
        "theorem n={n}: {} candidates, threshold {:.12}",
        e.candidates(),
        t.value()
    );
    let parts = map_chunks(e.candidates(), opts.jobs, |range| {
        let mut tally = Tally::default();
        for (mask, g) in e.range(range) {
            tally.examined += 1;
            if let Some(reason) = t.prefilter(&g) {
                if reason == "max_degree" {
                    tally.skipped_max_degree += 1;
                } else {
                    tally.skipped_edge_sum += 1;
                }
                if Threshold::in_spot_sample(mask) {
                    tally.spot_checked += 1;
                    if q_value(&g).expect("non-empty") >= t.value() {
                        tally.spot_failures += 1;
                    }
                }
                continue;
            }
            let outcome = classify(&g, &t);
            if outcome != Outcome::Below {
                tally.at_or_above += 1;
            }
            match outcome {
                Outcome::Below => {}
                Outcome::Certified => tally.certified += 1,
                Outcome::Extremal => tally.extremal_hits += 1,
                Outcome::BadCertificate | Outcome::Counterexample => {
                    if outcome == Outcome::BadCertificate {
                        tally.bad_certificates += 1;
                    }
                    tally.counterexample_count += 1;
                    if tally.counterexamples.len() < COUNTEREXAMPLE_CAP {
                        tally.counterexamples.push(graph6_encode(&g));
                    }
                }
            }
        }
        tally
    });
    let mut tally = Tally::default();
    for p in parts {
        tally.absorb(p);
    }

    let mut report = Report::new("theorem")
        .param("n", n)
        .param("threshold", t.value())
        .param("threshold_offset", opts.threshold_offset)
        .param("candidates", e.candidates());
    report.graphs_examined = tally.examined;
    report.extremal_hits = tally.extremal_hits;
    report.counterexamples = tally.counterexamples;
    report.counterexample_count = tally.counterexample_count;
    report.details.push(
        Detail::new("prefilter", tally.spot_failures == 0)
            .with("skipped_max_degree", tally.skipped_max_degree)
            .with("skipped_edge_degree_sum", tally.skipped_edge_sum)
            .with("spot_checked", tally.spot_checked)
            .with("spot_failures", tally.spot_failures),
    );
    report.details.push(
        Detail::new("certificates", tally.bad_certificates == 0)
            .with("at_or_above_threshold", tally.at_or_above)
            .with("certified", tally.certified)
            .with("rejected", tally.bad_certificates),
    );
    report.details.push(
        Detail::new("extremal", tally.extremal_hits > 0)
            .with("graph6", graph6_encode(&t.extremal))
            .with("q", t.exact)
            .with("hits", tally.extremal_hits),
    );
    report.finish(elapsed_ms(start));
    Ok(report)
}

/// Re-runs the theorem check on one graph; `true` when it is a
/// counterexample under the given threshold offset.
pub fn replay_theorem(g: &Graph, threshold_offset: f64) -> Result<bool, VerifyError> {
    check_supported(g.n(), true, 6)?;
    if g.has_isolated_vertex() {
        return Ok(false);
    }
    let t = Threshold::new(g.n(), threshold_offset);
    Ok(matches!(
        classify(g, &t),
        Outcome::Counterexample | Outcome::BadCertificate
    ))
}

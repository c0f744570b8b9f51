use std::time::Instant;

use trebly_core::chords::{find_chorded_cycle, verify_certificate};
use trebly_core::graph::{graph6_encode, is_isomorphic};
use trebly_core::spectral::q_value;
use trebly_core::Graph;

use super::enumerate::{Constraints, Enumeration};
use super::parallel::map_chunks;
use super::report::{Detail, Report, COUNTEREXAMPLE_CAP};
use super::theorem::Threshold;
use super::{elapsed_ms, VerifyError, NEAR_TIE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorollaryOptions {
    /// Chords a cycle needs to count; 3 unless deliberately misconfigured.
    pub min_chords: usize,
    pub allow_n8: bool,
    pub jobs: usize,
}

impl Default for CorollaryOptions {
    fn default() -> CorollaryOptions {
        CorollaryOptions {
            min_chords: 3,
            allow_n8: false,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    AtMost,
    Exception,
    Chorded,
    BadCertificate,
    Counterexample,
}

fn classify(g: &Graph, t: &Threshold, min_chords: usize) -> Outcome {
    let q = q_value(g).expect("non-empty graph");
    if q < t.exact - NEAR_TIE {
        return Outcome::AtMost;
    }
    if is_isomorphic(g, &t.extremal) {
        return Outcome::Exception;
    }
    if t.compare(g, q).is_le() {
        return Outcome::AtMost;
    }
    match find_chorded_cycle(g, min_chords) {
        Some(c) if verify_certificate(g, &c, min_chords, false) => Outcome::Chorded,
        Some(_) => Outcome::BadCertificate,
        None => Outcome::Counterexample,
    }
}

#[derive(Debug, Default)]
struct Tally {
    examined: u64,
    skipped: u64,
    spot_checked: u64,
    spot_failures: u64,
    above: u64,
    bad_certificates: u64,
    exceptions: u64,
    counterexamples: Vec<String>,
    counterexample_count: u64,
}

fn check_supported(n: usize, allow_n8: bool) -> Result<(), VerifyError> {
    if !(7..=8).contains(&n) {
        return Err(VerifyError::UnsupportedOrder {
            n,
            supported: "7, 8",
        });
    }
    if n == 8 && !allow_n8 {
        return Err(VerifyError::NeedsOptIn);
    }
    Ok(())
}

/// Checks that every labelled graph of order `n` without isolated vertices
/// and without a cycle carrying `min_chords` chords has `q(G) <= q(K^+)`,
/// the extremal graph itself excepted.
pub fn verify_corollary(n: usize, opts: CorollaryOptions) -> Result<Report, VerifyError> {
    check_supported(n, opts.allow_n8)?;
    let start = Instant::now();
    let t = Threshold::new(n, 0.0);
    let e = Enumeration::new(
        n,
        Constraints {
            no_isolated: true,
            ..Constraints::default()
        },
    )?;
    log::info!("corollary n={n}: {} candidates", e.candidates());
    let parts = map_chunks(e.candidates(), opts.jobs, |range| {
        let mut tally = Tally::default();
        for (mask, g) in e.range(range) {
            tally.examined += 1;
            if t.prefilter(&g).is_some() {
                tally.skipped += 1;
                if Threshold::in_spot_sample(mask) {
                    tally.spot_checked += 1;
                    if q_value(&g).expect("non-empty") >= t.value() {
                        tally.spot_failures += 1;
                    }
                }
                continue;
            }
            match classify(&g, &t, opts.min_chords) {
                Outcome::AtMost => {}
                Outcome::Exception => tally.exceptions += 1,
                Outcome::Chorded => tally.above += 1,
                o @ (Outcome::BadCertificate | Outcome::Counterexample) => {
                    tally.above += 1;
                    if o == Outcome::BadCertificate {
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

    let mut report = Report::new("corollary")
        .param("n", n)
        .param("threshold", t.exact)
        .param("min_chords", opts.min_chords)
        .param("candidates", e.candidates());
    let mut tally = Tally::default();
    for p in parts {
        tally.examined += p.examined;
        tally.skipped += p.skipped;
        tally.spot_checked += p.spot_checked;
        tally.spot_failures += p.spot_failures;
        tally.above += p.above;
        tally.bad_certificates += p.bad_certificates;
        tally.exceptions += p.exceptions;
        tally.counterexample_count += p.counterexample_count;
        tally.counterexamples.extend(p.counterexamples);
        tally.counterexamples.truncate(COUNTEREXAMPLE_CAP);
    }
    report.graphs_examined = tally.examined;
    report.extremal_hits = tally.exceptions;
    report.counterexamples = tally.counterexamples;
    report.counterexample_count = tally.counterexample_count;
    report.details.push(
        Detail::new("prefilter", tally.spot_failures == 0)
            .with("skipped", tally.skipped)
            .with("spot_checked", tally.spot_checked)
            .with("spot_failures", tally.spot_failures),
    );
    report.details.push(
        Detail::new("certificates", tally.bad_certificates == 0)
            .with("above_threshold", tally.above)
            .with("rejected", tally.bad_certificates),
    );
    report.details.push(
        Detail::new("exception", tally.exceptions > 0)
            .with("graph6", graph6_encode(&t.extremal))
            .with("labelled_copies", tally.exceptions),
    );
    report.finish(elapsed_ms(start));
    Ok(report)
}

/// Re-runs the corollary check on one graph; `true` for a counterexample.
pub fn replay_corollary(g: &Graph, min_chords: usize) -> Result<bool, VerifyError> {
    check_supported(g.n(), true)?;
    if g.has_isolated_vertex() {
        return Ok(false);
    }
    let t = Threshold::new(g.n(), 0.0);
    Ok(matches!(
        classify(g, &t, min_chords),
        Outcome::Counterexample | Outcome::BadCertificate
    ))
}

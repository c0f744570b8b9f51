use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::Value;
use trebly_core::spectral::appendix::{
    appendix_polynomial, derivative_chains, formal_quotient, item_partition, parse_in,
    parse_integer, rational_claims, threshold_point, valid_params, AppendixId,
};
use trebly_core::spectral::{
    charpoly, compare_largest_roots, largest_root_f64, q_value, quotient_matrix, IntPolynomial,
    LargestRoot,
};
use trebly_core::{Graph, VertexSet};

use super::report::{Detail, Report};
use super::{elapsed_ms, VerifyError, NEAR_TIE};

/// A four-decimal value printed alongside the appendix comparisons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedValue {
    pub id: AppendixId,
    pub n: usize,
    pub value: f64,
}

const fn pv(id: AppendixId, n: usize, value: f64) -> PrintedValue {
    PrintedValue { id, n, value }
}

pub const PRINTED_VALUES: &[PrintedValue] = &[
    pv(AppendixId::Item(10), 7, 8.2351),
    pv(AppendixId::G, 7, 8.7355),
    pv(AppendixId::Item(11), 8, 9.0478),
    pv(AppendixId::G, 8, 9.7324),
    pv(AppendixId::Item(14), 9, 10.3723),
    pv(AppendixId::G, 9, 10.7381),
    pv(AppendixId::Item(15), 10, 11.0666),
    pv(AppendixId::G, 10, 11.7474),
    pv(AppendixId::Item(16), 7, 8.7016),
];

/// Tolerance for four-decimal printed values.
pub const PRINTED_TOLERANCE: f64 = 5e-4;

/// Failure messages kept per detail item.
const LISTED: usize = 16;

#[derive(Default)]
struct Check {
    cases: u64,
    failures: Vec<String>,
    failure_count: u64,
}

impl Check {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < LISTED {
                self.failures.push(what());
            }
        }
    }

    fn detail(self, item: &str) -> Detail {
        Detail::new(item, self.failure_count == 0)
            .with("cases", self.cases)
            .with("failures", self.failure_count)
            .with(
                "failed",
                Value::Array(self.failures.into_iter().map(Value::String).collect()),
            )
    }
}

fn label(id: AppendixId, n: usize, s: Option<usize>) -> String {
    match s {
        Some(s) => format!("{id}(n={n},s={s})"),
        None => format!("{id}(n={n})"),
    }
}

/// The graph behind a matrix id together with the characteristic
/// polynomial of its quotient matrix, computed from the graph itself.
struct Member {
    graph: Graph,
    blocks: Vec<VertexSet>,
    quotient_poly: Option<IntPolynomial>,
    equitable: bool,
}

fn member(id: AppendixId, n: usize, s: Option<usize>) -> Member {
    let (graph, blocks) = item_partition(id, n, s).expect("valid parameters");
    let blocks: Vec<VertexSet> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
    let b = quotient_matrix(&graph, &blocks).expect("blocks partition the graph");
    Member {
        quotient_poly: b.charpoly(),
        equitable: b.equitable,
        graph,
        blocks,
    }
}

fn ids_with_matrix() -> Vec<AppendixId> {
    AppendixId::all()
        .into_iter()
        .filter(|id| id.has_matrix())
        .collect()
}

/// Checks every appendix polynomial and inequality for `n` in
/// `n_lo..=n_hi`.
pub fn verify_appendix(n_lo: usize, n_hi: usize) -> Result<Report, VerifyError> {
    if !(7 <= n_lo && n_lo <= n_hi && n_hi <= 30) {
        return Err(VerifyError::InvalidRange {
            lo: n_lo,
            hi: n_hi,
            need: "7 <= n_lo <= n_hi <= 30",
        });
    }
    let start = Instant::now();
    let mut partition = Check::default();
    let mut identity = Check::default();
    let mut inequality = Check::default();
    let mut examined = 0u64;

    let extremal: BTreeMap<usize, Member> = (n_lo..=n_hi)
        .map(|n| (n, member(AppendixId::G, n, None)))
        .collect();

    for id in ids_with_matrix() {
        for (n, s) in valid_params(id, n_lo, n_hi) {
            examined += 1;
            let name = label(id, n, s);
            let m = member(id, n, s);
            let q = q_value(&m.graph).expect("non-empty");
            let lambda = m.quotient_poly.as_ref().and_then(largest_root_f64);
            let (_, all_blocks) = item_partition(id, n, s).expect("valid parameters");
            let formal = formal_quotient(id, n, s).expect("valid parameters");
            let b = quotient_matrix(&m.graph, &m.blocks).expect("partition");
            let kept: Vec<usize> = (0..all_blocks.len())
                .filter(|&i| !all_blocks[i].is_empty())
                .collect();
            let entries_match = kept.iter().enumerate().all(|(a, &i)| {
                kept.iter().enumerate().all(|(c, &j)| {
                    b.get(a, c).is_integer() && &b.get(a, c).to_integer() == formal.get(i, j)
                })
            });
            partition.record(
                m.equitable && entries_match && lambda.is_some_and(|l| (l - q).abs() <= NEAR_TIE),
                || {
                    format!(
                        "{name}: equitable={} entries_match={entries_match} lambda={lambda:?} q={q}",
                        m.equitable
                    )
                },
            );

            let printed = appendix_polynomial(id, n, s).expect("valid parameters");
            identity.record(charpoly(&formal) == printed, || {
                format!(
                    "{name}: charpoly(B) = {} but printed {printed}",
                    charpoly(&formal)
                )
            });

            if id == AppendixId::G {
                continue;
            }
            let ext = &extremal[&n];
            let expected = if id == AppendixId::Item(18) && s == Some(n - 2) {
                // The chain endpoint is the extremal graph itself.
                Ordering::Equal
            } else {
                Ordering::Less
            };
            let (Some(p), Some(pe)) = (&m.quotient_poly, &ext.quotient_poly) else {
                inequality.record(false, || format!("{name}: non-integral quotient"));
                continue;
            };
            let exact = compare_largest_roots(p, pe);
            let q_ext = q_value(&ext.graph).expect("non-empty");
            let float_agrees = match expected {
                Ordering::Less => q < q_ext,
                _ => (q - q_ext).abs() <= NEAR_TIE,
            };
            inequality.record(exact == expected && float_agrees, || {
                format!("{name}: q = {q:.10} vs q(K+) = {q_ext:.10}, exact {exact:?}")
            });
        }
    }

    let threshold = threshold_checks(n_lo, n_hi);
    let chains = monotone_chains(n_lo, n_hi);
    let derivatives = derivative_checks(n_lo, n_hi);
    let printed = printed_values(n_lo, n_hi);

    let mut report = Report::new("appendix")
        .param("n_lo", n_lo)
        .param("n_hi", n_hi);
    report.graphs_examined = examined;
    report.details.push(partition.detail("partition"));
    report.details.push(identity.detail("charpoly_identity"));
    report.details.push(inequality.detail("extremal_dominance"));
    report.details.push(threshold.detail("threshold_bound"));
    report.details.push(chains.detail("monotone_chains"));
    report.details.push(derivatives.detail("derivative_chains"));
    report.details.push(printed);
    report.finish(elapsed_ms(start));
    Ok(report)
}

/// `q(K^+_{1,1,n-2}) > n + 2 - 4/(n + 2)` and the printed exact values at
/// that point.
fn threshold_checks(n_lo: usize, n_hi: usize) -> Check {
    let mut check = Check::default();
    for n in n_lo..=n_hi {
        let tp = threshold_point(n);
        let g = appendix_polynomial(AppendixId::G, n, None).expect("defined for n >= 6");
        let mut root = LargestRoot::isolate(&g).expect("cubic has a real root");
        check.record(root.compare_with(&tp) == Ordering::Greater, || {
            format!("n={n}: largest root of g not above n+2-4/(n+2)")
        });
    }
    for claim in rational_claims() {
        let lo = n_lo.max(claim.min_n);
        for (n, s) in valid_params(claim.id, lo, n_hi.max(lo)) {
            if n > n_hi {
                continue;
            }
            let tp = threshold_point(n);
            let value = appendix_polynomial(claim.id, n, s)
                .expect("valid parameters")
                .eval_rational(&tp);
            let printed = BigRational::new(
                parse_integer(claim.numerator, n, s),
                parse_integer(claim.denominator, n, s),
            );
            let sign_ok = if claim.positive {
                value.is_positive()
            } else {
                value.is_negative()
            };
            check.record(value == printed && sign_ok, || {
                format!(
                    "{}: value at n+2-4/(n+2) is {value}, printed {printed}",
                    label(claim.id, n, s)
                )
            });
        }
    }
    check
}

/// `q(G(n, s)) < q(G(n, s + 4))` for the two `s`-indexed families.
fn monotone_chains(n_lo: usize, n_hi: usize) -> Check {
    let mut check = Check::default();
    for id in [AppendixId::Item(12), AppendixId::Item(18)] {
        for (n, s) in valid_params(id, n_lo, n_hi) {
            let next = s.map(|s| s + 4);
            if trebly_core::spectral::appendix::check_params(id, n, next).is_err() {
                continue;
            }
            let (a, b) = (member(id, n, s), member(id, n, next));
            let ok = match (&a.quotient_poly, &b.quotient_poly) {
                (Some(p), Some(q)) => compare_largest_roots(p, q) == Ordering::Less,
                _ => false,
            };
            check.record(ok, || format!("{} is not below s + 4", label(id, n, s)));
        }
    }
    check
}

/// The printed derivative tables: each derivative, its value at `n + 1`,
/// the sign of that value and any printed lower bound.
fn derivative_checks(n_lo: usize, n_hi: usize) -> Check {
    let mut check = Check::default();
    for chain in derivative_chains() {
        let lo = n_lo.max(chain.min_n);
        if lo > n_hi {
            continue;
        }
        for (n, s) in valid_params(chain.id, lo, n_hi) {
            let name = label(chain.id, n, s);
            let base = appendix_polynomial(chain.id, n, s).expect("valid parameters");
            let at = BigInt::from(n + 1);
            for st in chain.steps {
                let formal = base.derivative_n(st.order);
                if let Some(text) = st.derivative {
                    let printed = parse_in(text, n, s);
                    check.record(printed == formal, || {
                        format!(
                            "{name}: derivative {} printed {printed}, formal {formal}",
                            st.order
                        )
                    });
                }
                let value = match st.at_n_plus_1 {
                    Some(text) => {
                        let printed = parse_integer(text, n, s);
                        let actual = formal.eval(&at);
                        check.record(printed == actual, || {
                            format!(
                                "{name}: derivative {} at n+1 printed {printed}, actual {actual}",
                                st.order
                            )
                        });
                        printed
                    }
                    None => formal.eval(&at),
                };
                check.record(value.is_positive(), || {
                    format!(
                        "{name}: derivative {} at n+1 is {value}, not positive",
                        st.order
                    )
                });
                if let Some(text) = st.lower_bound {
                    let bound = parse_integer(text, n, s);
                    check.record(bound.is_positive() && value >= bound, || {
                        format!(
                            "{name}: derivative {} at n+1 is {value}, printed bound {bound}",
                            st.order
                        )
                    });
                }
            }
        }
    }
    check
}

fn printed_values(n_lo: usize, n_hi: usize) -> Detail {
    let mut rows = Vec::new();
    let mut ok = true;
    for pv in PRINTED_VALUES
        .iter()
        .filter(|p| (n_lo..=n_hi).contains(&p.n))
    {
        let (g, _) = item_partition(pv.id, pv.n, None).expect("printed values are in range");
        let q = q_value(&g).expect("non-empty");
        let hit = (q - pv.value).abs() <= PRINTED_TOLERANCE;
        ok &= hit;
        rows.push(serde_json::json!({
            "graph": label(pv.id, pv.n, None),
            "printed": pv.value,
            "q": (q * 1e10).round() / 1e10,
            "ok": hit,
        }));
    }
    Detail::new("printed_values", ok).with("rows", Value::Array(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_is_validated() {
        assert!(verify_appendix(6, 10).is_err());
        assert!(verify_appendix(10, 9).is_err());
        assert!(verify_appendix(7, 31).is_err());
    }

    #[test]
    fn printed_values_hold_at_small_n() {
        let d = printed_values(7, 10);
        assert!(d.passed, "{d:?}");
        assert_eq!(
            d.values["rows"].as_array().unwrap().len(),
            PRINTED_VALUES.len()
        );
    }

    #[test]
    fn small_range_report() {
        let r = verify_appendix(9, 11).unwrap();
        for item in [
            "partition",
            "extremal_dominance",
            "threshold_bound",
            "monotone_chains",
        ] {
            assert!(
                r.detail(item).unwrap().passed,
                "{item}: {:?}",
                r.detail(item)
            );
        }
        // g4 exists at n = 11 and its printed factorisation is off.
        let id = r.detail("charpoly_identity").unwrap();
        assert!(!id.passed);
        assert!(id.values["failed"][0]
            .as_str()
            .unwrap()
            .starts_with("g4(n=11)"));
    }
}

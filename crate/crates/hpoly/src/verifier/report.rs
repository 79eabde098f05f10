//! Corpus sweeps: run a check registry over every labeled graph up to a
//! given order, in one or many workers, and aggregate the verdicts into a
//! deterministic report.
//!
//! Workers split each order's mask space into contiguous ranges and merge in
//! range order, so tallies, witnesses, and the JSON rendering are identical
//! for any worker count. The elapsed time appears only in the text
//! rendering; the JSON is byte-for-byte reproducible.

use super::checks::{run_checks, CheckId, CheckOutcome, Verdict};
use super::enumerate::{check_order, graph_from_mask, vertex_pairs, VerifierError};
use crate::io::write_graph6;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// At most this many failure witnesses are retained per check; the tallies
/// always carry full counts.
pub const WITNESS_CAP: usize = 25;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
    /// Number of graphs that produced a logged observation (equality cases).
    pub notes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureWitness {
    pub check: &'static str,
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n_max: usize,
    pub connected_only: bool,
    pub corpus_size: u64,
    pub tallies: BTreeMap<&'static str, CheckTally>,
    pub witnesses: Vec<FailureWitness>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn failure_count(&self) -> u64 {
        self.tallies.values().map(|t| t.fail).sum()
    }

    pub fn tally(&self, id: CheckId) -> CheckTally {
        self.tallies.get(id.tag()).copied().unwrap_or_default()
    }

    /// Deterministic JSON rendering (no timing information).
    pub fn to_json(&self) -> Value {
        let checks: BTreeMap<&str, Value> = self
            .tallies
            .iter()
            .map(|(&tag, t)| {
                (
                    tag,
                    json!({
                        "pass": t.pass,
                        "fail": t.fail,
                        "not_applicable": t.not_applicable,
                        "notes": t.notes,
                    }),
                )
            })
            .collect();
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| json!({"check": w.check, "graph6": w.graph6, "detail": w.detail}))
            .collect();
        json!({
            "corpus": {
                "n_max": self.n_max,
                "connected_only": self.connected_only,
                "count": self.corpus_size,
            },
            "checks": checks,
            "witnesses": witnesses,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "corpus: all labeled graphs with 1 <= n <= {}{}, {} graphs\n",
            self.n_max,
            if self.connected_only { " (connected only)" } else { "" },
            self.corpus_size
        ));
        let width = self
            .tallies
            .keys()
            .map(|t| t.len())
            .max()
            .unwrap_or(8)
            .max("check".len());
        out.push_str(&format!(
            "{:width$}  {:>9} {:>6} {:>9} {:>7}\n",
            "check", "pass", "fail", "n/a", "notes"
        ));
        for (tag, t) in &self.tallies {
            out.push_str(&format!(
                "{tag:width$}  {:>9} {:>6} {:>9} {:>7}\n",
                t.pass, t.fail, t.not_applicable, t.notes
            ));
        }
        for w in &self.witnesses {
            out.push_str(&format!("FAIL {} on {}: {}\n", w.check, w.graph6, w.detail));
        }
        out.push_str(&format!(
            "result: {} failure(s) in {:.2?}\n",
            self.failure_count(),
            self.elapsed
        ));
        out
    }
}

struct WorkerOutput {
    tallies: Vec<CheckTally>,
    /// `(mask, registry index, graph6, detail)` in ascending mask order.
    witnesses: Vec<(u64, usize, String, String)>,
    count: u64,
}

fn sweep_range(
    n: usize,
    pairs: &[(usize, usize)],
    masks: std::ops::Range<u64>,
    connected_only: bool,
    registry: &[CheckId],
) -> WorkerOutput {
    let mut tallies = vec![CheckTally::default(); registry.len()];
    let mut witnesses = Vec::new();
    let mut count = 0;
    let mut capped = vec![0usize; registry.len()];
    for mask in masks {
        let g = graph_from_mask(n, pairs, mask);
        if connected_only && !g.is_connected() {
            continue;
        }
        count += 1;
        for (idx, outcome) in run_checks(&g, registry).into_iter().enumerate() {
            let CheckOutcome { verdict, note, .. } = outcome;
            if note.is_some() {
                tallies[idx].notes += 1;
            }
            match verdict {
                Verdict::Pass => tallies[idx].pass += 1,
                Verdict::NotApplicable(_) => tallies[idx].not_applicable += 1,
                Verdict::Fail(detail) => {
                    tallies[idx].fail += 1;
                    if capped[idx] < WITNESS_CAP {
                        capped[idx] += 1;
                        witnesses.push((mask, idx, write_graph6(&g), detail));
                    }
                }
            }
        }
    }
    WorkerOutput {
        tallies,
        witnesses,
        count,
    }
}

/// Runs `registry` over every labeled graph with `1 <= n <= n_max`,
/// partitioned across `workers` threads. Tallies and witnesses are
/// independent of the worker count.
pub fn verify_corpus(
    n_max: usize,
    connected_only: bool,
    registry: &[CheckId],
    workers: usize,
    allow_large: bool,
) -> Result<VerificationReport, VerifierError> {
    for n in 1..=n_max {
        check_order(n, allow_large)?;
    }
    let workers = workers.max(1);
    let started = Instant::now();

    let mut tallies = vec![CheckTally::default(); registry.len()];
    let mut witnesses: Vec<(usize, u64, usize, String, String)> = Vec::new();
    let mut corpus_size = 0u64;

    for n in 1..=n_max {
        let pairs = vertex_pairs(n);
        let total: u64 = 1 << pairs.len();
        let chunk = total.div_ceil(workers as u64).max(1);
        let ranges: Vec<std::ops::Range<u64>> = (0..workers as u64)
            .map(|w| (w * chunk).min(total)..((w + 1) * chunk).min(total))
            .collect();

        let outputs: Vec<WorkerOutput> = std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|range| {
                    let pairs = &pairs;
                    scope.spawn(move || sweep_range(n, pairs, range, connected_only, registry))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });

        for output in outputs {
            corpus_size += output.count;
            for (idx, t) in output.tallies.iter().enumerate() {
                tallies[idx].pass += t.pass;
                tallies[idx].fail += t.fail;
                tallies[idx].not_applicable += t.not_applicable;
                tallies[idx].notes += t.notes;
            }
            witnesses.extend(
                output
                    .witnesses
                    .into_iter()
                    .map(|(mask, idx, g6, detail)| (n, mask, idx, g6, detail)),
            );
        }
    }

    // keep the first WITNESS_CAP per check in (n, mask) order; each worker
    // already kept the earliest of its own range, so this is exact
    witnesses.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    let mut kept = vec![0usize; registry.len()];
    let witnesses: Vec<FailureWitness> = witnesses
        .into_iter()
        .filter(|(_, _, idx, _, _)| {
            kept[*idx] += 1;
            kept[*idx] <= WITNESS_CAP
        })
        .map(|(_, _, idx, graph6, detail)| FailureWitness {
            check: registry[idx].tag(),
            graph6,
            detail,
        })
        .collect();

    let tallies: BTreeMap<&'static str, CheckTally> = registry
        .iter()
        .zip(tallies)
        .map(|(id, t)| (id.tag(), t))
        .collect();

    Ok(VerificationReport {
        n_max,
        connected_only,
        corpus_size,
        tallies,
        witnesses,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_registry_has_zero_tallies() {
        let report = verify_corpus(3, false, &[], 1, false).unwrap();
        assert_eq!(report.corpus_size, 1 + 2 + 8);
        assert!(report.tallies.is_empty());
        assert_eq!(report.failure_count(), 0);
    }

    #[test]
    fn tallies_partition_the_corpus() {
        let report = verify_corpus(4, false, &CheckId::ALL, 1, false).unwrap();
        assert_eq!(report.corpus_size, 1 + 2 + 8 + 64);
        for (tag, t) in &report.tallies {
            assert_eq!(
                t.pass + t.fail + t.not_applicable,
                report.corpus_size,
                "verdicts must partition the corpus for {tag}"
            );
        }
        assert_eq!(report.failure_count(), 0);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let one = verify_corpus(4, false, &CheckId::ALL, 1, false).unwrap();
        let four = verify_corpus(4, false, &CheckId::ALL, 4, false).unwrap();
        assert_eq!(one.tallies, four.tallies);
        assert_eq!(one.witnesses, four.witnesses);
        assert_eq!(one.corpus_size, four.corpus_size);
        assert_eq!(one.to_json(), four.to_json());
    }

    #[test]
    fn connected_filter_shrinks_corpus() {
        let all = verify_corpus(4, false, &[CheckId::PendantPaths], 1, false).unwrap();
        let connected = verify_corpus(4, true, &[CheckId::PendantPaths], 1, false).unwrap();
        assert!(connected.corpus_size < all.corpus_size);
        // labeled connected graphs on 4 vertices: 38
        assert_eq!(connected.corpus_size, 1 + 1 + 4 + 38);
    }

    #[test]
    fn json_is_deterministic() {
        let a = verify_corpus(3, false, &CheckId::ALL, 1, false).unwrap();
        let b = verify_corpus(3, false, &CheckId::ALL, 1, false).unwrap();
        assert_eq!(
            serde_json::to_string(&a.to_json()).unwrap(),
            serde_json::to_string(&b.to_json()).unwrap()
        );
    }
}

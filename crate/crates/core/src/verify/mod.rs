//! End-to-end reproduction report.
//!
//! Every item recomputes a published result with the library and compares
//! it with the golden data file, which stores the expected values as
//! expression strings. Items run concurrently; the report keeps a fixed
//! order.

mod golden;
mod linear;
mod quadratic;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;
use serde_json::Value;

pub use golden::{Golden, EMBEDDED_GOLDEN};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ItemResult {
    pub item: String,
    pub status: Status,
    pub details: String,
}

/// Verdict of one check and a human-readable account of it.
pub(crate) type Outcome = crate::Result<(bool, String)>;

pub(crate) fn item(label: String, outcome: Outcome) -> ItemResult {
    match outcome {
        Ok((ok, details)) => ItemResult { item: label, status: if ok { Status::Pass } else { Status::Fail }, details },
        Err(e) => ItemResult { item: label, status: Status::Fail, details: format!("error: {e}") },
    }
}

type Group = fn(&Golden) -> Vec<ItemResult>;

const GROUPS: &[Group] = &[
    linear::decomposition,
    linear::decomposition_n4,
    linear::isomorphism,
    linear::standard_forms,
    linear::classify,
    linear::aut,
    quadratic::ktilde,
    quadratic::deform_paths,
    quadratic::deform_unimodular,
    quadratic::equivariance,
    linear::der0,
    quadratic::o3,
    quadratic::o21,
    quadratic::t_of_v,
    quadratic::orbit_counts,
    quadratic::lemma51,
    quadratic::lemma52,
    quadratic::lemma53,
    quadratic::prop51,
    quadratic::prop52,
    quadratic::prop53,
    quadratic::coset,
    quadratic::case10_distinct,
    quadratic::prop_final,
    linear::properties,
];

/// Runs every item on up to `threads` worker threads (0 = available
/// parallelism). The order of the result never depends on scheduling.
pub fn run(golden: &Golden, threads: usize) -> Vec<ItemResult> {
    let threads = match threads {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    }
    .min(GROUPS.len());
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Vec<ItemResult>>>> = Mutex::new(vec![None; GROUPS.len()]);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(group) = GROUPS.get(i) else { break };
                let out = group(golden);
                slots.lock().expect("no worker panics while holding the lock")[i] = Some(out);
            });
        }
    });
    slots.into_inner().expect("workers joined").into_iter().flatten().flatten().collect()
}

pub fn all_pass(results: &[ItemResult]) -> bool {
    results.iter().all(|r| r.status == Status::Pass)
}

/// One line per item, then a summary line.
pub fn render_table(results: &[ItemResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!("{}  {}  [{}]\n", r.status, r.item, r.details));
    }
    let passed = results.iter().filter(|r| r.status == Status::Pass).count();
    out.push_str(&format!("{passed}/{} items passed\n", results.len()));
    out
}

pub fn render_json(results: &[ItemResult]) -> Value {
    serde_json::to_value(results).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_carry_the_error() {
        let r = item("x".into(), Err(crate::Error::SingularMatrix));
        assert_eq!(r.status, Status::Fail);
        assert!(r.details.contains("singular"));
        assert_eq!(render_json(&[r])[0]["status"], "FAIL");
    }

    #[test]
    fn table_summarizes() {
        let r = vec![item("a".into(), Ok((true, "ok".into()))), item("b".into(), Ok((false, "bad".into())))];
        let t = render_table(&r);
        assert!(t.starts_with("PASS  a  [ok]\nFAIL  b  [bad]\n"));
        assert!(t.ends_with("1/2 items passed\n"));
        assert!(!all_pass(&r));
    }
}

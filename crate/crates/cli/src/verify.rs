use std::time::Instant;

use encone_core::combinatorics::hasse_check;
use encone_core::fqoracle::{
    classification_check, closure_check, fiber_count_check, hall_count_check, omega_point_count_check,
    orbit_count_check,
};
use encone_core::shoji::{
    omega_crosscheck, order_independence_check, point_count_identity_check, table_structure_check,
    type_a_specialization_check,
};
use encone_core::weylb::character_check;
use encone_core::{CheckReport, Error};
use serde_json::json;

use crate::config::RunConfig;
use crate::memo::TableCache;
use crate::output::Output;
use crate::parallel::count_orbits_par;

/// Largest `n` for the exact cross-checks that need no flag.
const CROSSCHECK_MAX_N: usize = 3;
/// Failure messages kept per check.
const KEEP_FAILURES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Outside the enabled budget.
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: String,
    pub n: usize,
    pub q: Option<u32>,
    pub status: Status,
    pub checked: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl Outcome {
    /// One line for stderr.
    pub fn line(&self) -> String {
        let q = self.q.map(|q| format!(" q={q}")).unwrap_or_default();
        match &self.status {
            Status::Pass => format!("PASS {} n={}{q} ({} checked, {:.2}s)", self.name, self.n, self.checked, self.seconds),
            Status::Fail => format!(
                "FAIL {} n={}{q} ({} of {} failed): {}",
                self.name,
                self.n,
                self.failures.len(),
                self.checked,
                self.failures.first().map(String::as_str).unwrap_or("")
            ),
            Status::Skipped(why) => format!("SKIP {} n={}{q}: {why}", self.name, self.n),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub outcomes: Vec<Outcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Fail)
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.outcomes.iter().filter(|o| pred(&o.status)).count()
    }

    /// Structured report; timings stay on stderr so this is byte-stable.
    pub fn to_output(&self) -> Output {
        let checks: Vec<_> = self
            .outcomes
            .iter()
            .map(|o| {
                let (status, reason) = match &o.status {
                    Status::Pass => ("pass", None),
                    Status::Fail => ("fail", None),
                    Status::Skipped(r) => ("skipped", Some(r.clone())),
                };
                json!({
                    "name": o.name, "n": o.n, "q": o.q, "status": status, "reason": reason,
                    "checked": o.checked, "failures": o.failures,
                })
            })
            .collect();
        let rows = self
            .outcomes
            .iter()
            .map(|o| {
                let status = match &o.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped(_) => "skipped",
                };
                vec![
                    o.name.clone(),
                    o.n.to_string(),
                    o.q.map(|q| q.to_string()).unwrap_or_default(),
                    status.into(),
                    o.checked.to_string(),
                    o.failures.len().to_string(),
                ]
            })
            .collect();
        Output {
            json: json!({ "passed": self.passed(), "checks": checks }),
            header: ["name", "n", "q", "status", "checked", "failures"].map(String::from).to_vec(),
            rows,
            dot: None,
        }
    }
}

fn run(name: &str, n: usize, q: Option<u32>, f: impl FnOnce() -> encone_core::Result<CheckReport>) -> Outcome {
    let start = Instant::now();
    let res = f();
    let seconds = start.elapsed().as_secs_f64();
    let (status, checked, failures) = match res {
        Ok(r) if r.passed() => (Status::Pass, r.checked, Vec::new()),
        Ok(r) => (Status::Fail, r.checked, r.failures.into_iter().take(KEEP_FAILURES).collect()),
        Err(e @ Error::BudgetExceeded { .. }) => (Status::Skipped(e.to_string()), 0, Vec::new()),
        Err(e) => (Status::Fail, 0, vec![e.to_string()]),
    };
    Outcome { name: name.into(), n, q, status, checked, failures, seconds }
}

/// Runs the suite for every size up to `config.n`, calling `progress` after
/// each check.
pub fn cmd_verify(config: &RunConfig, cache: &TableCache, progress: &mut dyn FnMut(&Outcome)) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut push = |o: Outcome, report: &mut VerifyReport| {
        progress(&o);
        report.outcomes.push(o);
    };
    let budget = config.budget();
    let cross_max = if config.large { CROSSCHECK_MAX_N + 1 } else { CROSSCHECK_MAX_N };
    for n in 0..=config.n {
        push(run("hasse", n, None, || Ok(hasse_check(n))), &mut report);
        push(run("characters", n, None, || character_check(n)), &mut report);
        let table = match cache.get(n) {
            Ok(t) => t,
            Err(e) => {
                push(run("lusztig_shoji", n, None, || Err(e)), &mut report);
                continue;
            }
        };
        push(run("table_structure", n, None, || table_structure_check(&table)), &mut report);
        push(run("type_a", n, None, || type_a_specialization_check(&table)), &mut report);
        push(run("order_independence", n, None, || order_independence_check(n)), &mut report);
        if n <= cross_max {
            push(run("omega_crosscheck", n, None, || omega_crosscheck(n)), &mut report);
            push(run("point_count_identity", n, None, || point_count_identity_check(&table)), &mut report);
        }
        for &q in &config.qs {
            let qq = Some(q);
            match count_orbits_par(n, q, budget) {
                Ok(counts) => {
                    push(run("orbit_counts", n, qq, || orbit_count_check(&table, q, &counts)), &mut report);
                    push(run("classification", n, qq, || classification_check(n, q, budget)), &mut report);
                    if n <= CROSSCHECK_MAX_N {
                        push(
                            run("omega_point_counts", n, qq, || omega_point_count_check(n, q, &counts, budget)),
                            &mut report,
                        );
                    }
                }
                Err(e) => push(run("orbit_counts", n, qq, || Err(e)), &mut report),
            }
            push(run("fiber_counts", n, qq, || fiber_count_check(&table, q, budget)), &mut report);
            push(run("hall_counts", n, qq, || hall_count_check(&table, q, budget)), &mut report);
            push(run("closure_order", n, qq, || closure_check(n, q, budget)), &mut report);
        }
    }
    report
}

//! Verification suites. Each suite is a list of independent check groups
//! run in parallel; results are collected in declaration order so the
//! report for a given seed is byte-for-byte reproducible.

use rayon::prelude::*;

use crate::error::Result;
use crate::report::{Check, Report};

mod algebra;
mod octonions;
mod physics;
mod quantum;

pub const SUITES: [&str; 9] =
    ["core", "tensor", "rep", "spinor", "gates", "relativistic", "susy", "m-algebra", "octonion"];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Config {
    pub seed: u64,
    /// Replaces the default tolerance of every non-exact check.
    pub tol: Option<f64>,
}

impl Config {
    pub fn new(seed: u64) -> Self {
        Config { seed, tol: None }
    }

    pub(crate) fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

type Group = fn(&Config) -> Result<Vec<Check>>;

fn groups(suite: &str) -> Option<Vec<(&'static str, Group)>> {
    Some(match suite {
        "core" => algebra::core(),
        "tensor" => algebra::tensor(),
        "rep" => algebra::rep(),
        "spinor" => quantum::spinor(),
        "gates" => quantum::gates(),
        "relativistic" => physics::relativistic(),
        "susy" => physics::susy(),
        "m-algebra" => physics::m_algebra(),
        "octonion" => octonions::octonion_groups(),
        _ => return None,
    })
}

fn run_groups(cfg: &Config, items: Vec<(String, &'static str, Group)>) -> Vec<Check> {
    let results: Vec<Vec<Check>> = items
        .par_iter()
        .map(|(suite, label, f)| match f(cfg) {
            Ok(checks) => checks
                .into_iter()
                .map(|mut c| {
                    c.name = format!("{suite}/{}", c.name);
                    c
                })
                .collect(),
            Err(e) => vec![Check::failed(format!("{suite}/{label}"), e.to_string())],
        })
        .collect();
    results.into_iter().flatten().collect()
}

/// Runs one suite, or every suite for `"all"`. Unknown names give `None`.
pub fn run_suite(name: &str, cfg: &Config) -> Option<Report> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let mut items = Vec::new();
    for suite in names {
        for (label, f) in groups(suite)? {
            items.push((suite.to_string(), label, f));
        }
    }
    Some(Report::new(name, cfg.seed, run_groups(cfg, items)))
}

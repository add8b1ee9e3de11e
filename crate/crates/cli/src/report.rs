//! Decision reports and their JSON form.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use srg_core::connectivity::{kappa2_exact, vertex_connectivity, ConnectivityError, Kappa2Result};
use srg_core::srg::{rules_fired, spectrum, srg_check, SearchOutcome};
use srg_core::{graph6, verify_cut, CutCertificate, Kappa2, Kappa2Options, Verdict, VerdictStatus};

use crate::input::LabelledGraph;
use crate::{CliError, Tuning};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub theta2: f64,
    pub thetav: f64,
    pub f: usize,
    pub g: usize,
    pub theta2_exact: String,
    pub thetav_exact: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kappa2Json {
    pub value: Option<usize>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct CertificateJson {
    pub A: Vec<String>,
    pub S: Vec<String>,
    pub B: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub evaluated: u64,
    pub frontier_prunes: u64,
    pub seed_bound: Option<usize>,
    pub size_cap: usize,
    pub size_floor: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TimingJson {
    pub kappa: f64,
    pub kappa2: f64,
    pub total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub id: String,
    /// `None` for graphs that are not strongly regular.
    pub params: Option<ParamsJson>,
    pub spectrum: Option<SpectrumJson>,
    pub kappa: usize,
    pub kappa2: Kappa2Json,
    pub verdict: Option<String>,
    pub rule: Option<String>,
    pub rules_fired: Vec<String>,
    /// `2k - lambda - 2`.
    pub bound: Option<usize>,
    pub certificate: Option<CertificateJson>,
    pub stats: StatsJson,
    pub timing_ms: TimingJson,
    pub version: String,
    pub graph6: String,
    pub labels: Vec<String>,
}

impl Report {
    pub fn is_undecided(&self) -> bool {
        !self.kappa2.closed && self.verdict.as_deref() != Some(VerdictStatus::OkByRule.name())
    }

    /// Rebuilds the graph and certificate from the report alone and checks them.
    pub fn recheck(&self) -> Result<Option<CutCertificate>, CliError> {
        let Some(cert) = &self.certificate else { return Ok(None) };
        let graph = graph6::decode(self.graph6.as_bytes())?;
        let g = LabelledGraph {
            id: self.id.clone(),
            graph,
            labels: self.labels.clone(),
            lines: None,
        };
        let s = g.set_of(&cert.S)?;
        let rebuilt = CutCertificate {
            a: g.set_of(&cert.A)?,
            s: s.clone(),
            b: g.set_of(&cert.B)?,
        };
        rebuilt.check(&g.graph)?;
        verify_cut(&g.graph, &s)?;
        if self.kappa2.value != Some(s.len()) {
            return Err(CliError::Usage(format!(
                "certificate has {} vertices, report says {:?}",
                s.len(),
                self.kappa2.value
            )));
        }
        Ok(Some(rebuilt))
    }
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn certificate_json(g: &LabelledGraph, c: &CutCertificate) -> CertificateJson {
    CertificateJson {
        A: g.labels_of(&c.a),
        S: g.labels_of(&c.s),
        B: g.labels_of(&c.b),
    }
}

/// Runs the solver, treating an exhausted budget as an unclosed result.
pub fn run_kappa2(g: &LabelledGraph, tuning: &Tuning) -> Result<Kappa2Result, ConnectivityError> {
    let opts = Kappa2Options {
        threads: tuning.threads,
        node_budget: tuning.node_budget,
        seeds: g.lines.clone().unwrap_or_default(),
        ..Kappa2Options::default()
    };
    match kappa2_exact(&g.graph, &opts) {
        Err(ConnectivityError::BudgetExceeded(partial)) => Ok(*partial),
        other => other,
    }
}

pub fn decide(g: &LabelledGraph, tuning: &Tuning) -> Result<Report, CliError> {
    let start = Instant::now();
    let kappa = vertex_connectivity(&g.graph)?;
    let kappa_ms = ms(start);
    let t2 = Instant::now();
    let result = run_kappa2(g, tuning)?;
    let kappa2_ms = ms(t2);

    let params = srg_check(&g.graph).ok();
    let outcome = match (&result.value, result.closed) {
        (_, false) => SearchOutcome::NotClosed,
        (Kappa2::NoValidCut, true) => SearchOutcome::NoValidCut,
        (Kappa2::Value(v), true) => {
            SearchOutcome::Value(*v, result.certificate.clone().expect("closed value has a certificate"))
        }
    };
    let verdict = params.map(|p| Verdict::decide(&p, outcome));
    let s = result.stats;
    Ok(Report {
        schema: SCHEMA,
        id: g.id.clone(),
        params: params.map(|p| ParamsJson {
            v: p.v,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        }),
        spectrum: params.and_then(|p| spectrum(&p).ok()).map(|sp| SpectrumJson {
            theta2: sp.theta2.to_f64(),
            thetav: sp.thetav.to_f64(),
            f: sp.f,
            g: sp.g,
            theta2_exact: sp.theta2.to_string(),
            thetav_exact: sp.thetav.to_string(),
        }),
        kappa,
        kappa2: Kappa2Json {
            value: result.value.value(),
            closed: result.closed,
        },
        verdict: verdict.as_ref().map(|v| v.status.name().to_string()),
        rule: verdict.as_ref().and_then(|v| v.rule).map(|r| r.name().to_string()),
        rules_fired: params
            .map(|p| rules_fired(&p))
            .unwrap_or_default()
            .iter()
            .map(|r| r.name().to_string())
            .collect(),
        bound: params.map(|p| p.edge_neighborhood_size()),
        certificate: result
            .certificate
            .as_ref()
            .filter(|_| result.closed)
            .map(|c| certificate_json(g, c)),
        stats: StatsJson {
            nodes: s.nodes,
            evaluated: s.evaluated,
            frontier_prunes: s.frontier_prunes,
            seed_bound: s.seed_bound,
            size_cap: s.size_cap,
            size_floor: s.size_floor,
        },
        timing_ms: TimingJson {
            kappa: kappa_ms,
            kappa2: kappa2_ms,
            total: ms(start),
        },
        version: env!("CARGO_PKG_VERSION").to_string(),
        graph6: graph6::encode_string(&g.graph),
        labels: g.labels.clone(),
    })
}

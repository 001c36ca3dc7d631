//! Seeded instance generation and the fuzz loop that runs constructions and
//! oracles against each other.
//!
//! Instance `i` of a run uses seed `seed + i`, so any single instance can be
//! replayed on its own.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::certificate::{verify_certificate, CaseTag};
use crate::constructions::{certify_detailed, check_fishbone, Evidence};
use crate::digraph::{iter_mask, Digraph};
use crate::oracles::{alpha_k_oracle, chi_k_oracle, lambda_k_oracle, pi_k_oracle, OracleBudget};
use crate::recognition::{check_spine_partition, classify_tightness, is_valid_loose_witness, SpinePartition, Tightness};

/// Largest n at which the fuzz loop consults the π_k / α_k oracles.
pub const SANDWICH_MAX_N: usize = 9;

/// Largest n at which loose witnesses are cross-checked by enumeration.
pub const WITNESS_ENUMERATION_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("unknown instance kind {0:?}")]
    UnknownKind(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Spine,
    Split,
    Tournament,
    General,
    TransitiveAcyclic,
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::Spine => "spine",
            InstanceKind::Split => "split",
            InstanceKind::Tournament => "tournament",
            InstanceKind::General => "general",
            InstanceKind::TransitiveAcyclic => "transitive-acyclic",
        }
    }

    pub fn has_spine(self) -> bool {
        matches!(self, InstanceKind::Spine | InstanceKind::Split)
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InstanceKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "spine" => Ok(InstanceKind::Spine),
            "split" => Ok(InstanceKind::Split),
            "tournament" => Ok(InstanceKind::Tournament),
            "general" => Ok(InstanceKind::General),
            "transitive-acyclic" => Ok(InstanceKind::TransitiveAcyclic),
            other => Err(HarnessError::UnknownKind(other.to_string())),
        }
    }
}

/// Size bounds: `(|X|, |Y|)` for spine/split kinds, vertex count otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sizes {
    /// `|X|` uniform in `0..=max_x`, `|Y|` uniform in `0..=max_y`, redrawn
    /// while both are zero.
    Spine { max_x: usize, max_y: usize },
    /// `n` uniform in `min_n..=max_n`.
    Order { min_n: usize, max_n: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenParams {
    pub kind: InstanceKind,
    pub sizes: Sizes,
    pub density: f64,
    pub seed: u64,
}

impl GenParams {
    pub fn spine(max_x: usize, max_y: usize, density: f64, seed: u64) -> Self {
        Self { kind: InstanceKind::Spine, sizes: Sizes::Spine { max_x, max_y }, density, seed }
    }

    pub fn order(kind: InstanceKind, min_n: usize, max_n: usize, density: f64, seed: u64) -> Self {
        Self { kind, sizes: Sizes::Order { min_n, max_n }, density, seed }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::InvalidParams(msg));
        if !(0.0..=1.0).contains(&self.density) {
            return bad(format!("density {} outside [0, 1]", self.density));
        }
        match (self.kind.has_spine(), self.sizes) {
            (true, Sizes::Spine { max_x, max_y }) => {
                if max_x + max_y == 0 {
                    return bad("max_x + max_y must be at least 1".into());
                }
                if max_x + max_y > crate::digraph::MAX_VERTICES {
                    return bad(format!("max_x + max_y = {} too large", max_x + max_y));
                }
            }
            (false, Sizes::Order { min_n, max_n }) => {
                if min_n > max_n {
                    return bad(format!("min n {min_n} > max n {max_n}"));
                }
                if max_n > crate::digraph::MAX_VERTICES {
                    return bad(format!("n = {max_n} too large"));
                }
            }
            (true, _) => return bad(format!("{} instances need --max-x/--max-y", self.kind)),
            (false, _) => return bad(format!("{} instances need --n", self.kind)),
        }
        Ok(())
    }

    fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..self.clone() }
    }
}

/// A generated digraph, with its planted spine partition for spine/split kinds.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub digraph: Digraph,
    pub spine: Option<SpinePartition>,
}

/// Deterministic in `params` (including the seed).
pub fn gen_instance(params: &GenParams) -> Result<Instance, HarnessError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let p = params.density;
    let mut arcs = Vec::new();
    let mut spine = None;
    let n = match params.sizes {
        Sizes::Spine { max_x, max_y } => {
            let (x, y) = loop {
                let x = rng.gen_range(0..=max_x);
                let y = rng.gen_range(0..=max_y);
                if x + y > 0 {
                    break (x, y);
                }
            };
            // X = 0..x in path order, Y = x..x+y
            for i in 0..x {
                for j in 0..x {
                    if i == j {
                        continue;
                    }
                    if j == i + 1 {
                        arcs.push((i, j));
                    } else if params.kind == InstanceKind::Split && i < j {
                        let (fwd, bwd) = match rng.gen_range(0..3) {
                            0 => (true, false),
                            1 => (false, true),
                            _ => (true, true),
                        };
                        if fwd {
                            arcs.push((i, j));
                        }
                        if bwd {
                            arcs.push((j, i));
                        }
                    } else if params.kind == InstanceKind::Spine && rng.gen_bool(p) {
                        arcs.push((i, j));
                    }
                }
                // the path arc (i, i+1) is fixed; its reverse is optional
                if params.kind == InstanceKind::Split && i + 1 < x && rng.gen_bool(p) {
                    arcs.push((i + 1, i));
                }
            }
            for xv in 0..x {
                for yv in x..x + y {
                    if rng.gen_bool(p) {
                        arcs.push((xv, yv));
                    }
                    if rng.gen_bool(p) {
                        arcs.push((yv, xv));
                    }
                }
            }
            spine = Some(SpinePartition::new((0..x).collect::<Vec<_>>(), (x..x + y).collect()));
            x + y
        }
        Sizes::Order { min_n, max_n } => {
            let n = rng.gen_range(min_n..=max_n);
            match params.kind {
                InstanceKind::Tournament => {
                    for i in 0..n {
                        for j in i + 1..n {
                            arcs.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
                        }
                    }
                }
                InstanceKind::General => {
                    for i in 0..n {
                        for j in 0..n {
                            if i != j && rng.gen_bool(p) {
                                arcs.push((i, j));
                            }
                        }
                    }
                }
                InstanceKind::TransitiveAcyclic => {
                    let mut order: Vec<usize> = (0..n).collect();
                    order.shuffle(&mut rng);
                    // reach[a] bit b: a precedes b in the closure, positions in `order`
                    let mut reach = vec![0u64; n];
                    for (a, row) in reach.iter_mut().enumerate() {
                        for b in a + 1..n {
                            if rng.gen_bool(p) {
                                *row |= 1 << b;
                            }
                        }
                    }
                    for a in (0..n).rev() {
                        let mut closed = reach[a];
                        for mid in iter_mask(reach[a]) {
                            closed |= reach[mid];
                        }
                        reach[a] = closed;
                    }
                    for (a, &row) in reach.iter().enumerate() {
                        for b in iter_mask(row) {
                            arcs.push((order[a], order[b]));
                        }
                    }
                }
                InstanceKind::Spine | InstanceKind::Split => unreachable!("validated"),
            }
            n
        }
    };
    let digraph = Digraph::new(n, &arcs).map_err(|e| HarnessError::InvalidParams(e.to_string()))?;
    if let Some(s) = &spine {
        if let Err(v) = check_spine_partition(&digraph, s.x_order.vertices(), &s.y_set) {
            return Err(HarnessError::InvalidParams(format!("generator produced a bad spine: {v:?}")));
        }
    }
    Ok(Instance { digraph, spine })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KPolicy {
    /// Every k in 1..=n.
    All,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    /// certify + verify + construction invariants + oracle sandwich.
    Constructive,
    /// π_k ≤ α_k by oracles.
    Linial,
    /// χ_k ≤ λ_k by oracles.
    Dual,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Constructive => "constructive",
            Check::Linial => "linial",
            Check::Dual => "dual",
        }
    }
}

impl FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "constructive" => Ok(Check::Constructive),
            "linial" | "oracle-linial" => Ok(Check::Linial),
            "dual" | "oracle-dual" => Ok(Check::Dual),
            other => Err(HarnessError::UnknownCheck(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzConfig {
    pub params: GenParams,
    /// When nonempty, instance `i` uses `densities[i % len]` instead of
    /// `params.density`.
    pub densities: Vec<f64>,
    pub count: usize,
    pub k_policy: KPolicy,
    pub checks: Vec<Check>,
}

impl FuzzConfig {
    pub fn new(params: GenParams, count: usize, checks: Vec<Check>) -> Self {
        Self { params, densities: Vec::new(), count, k_policy: KPolicy::All, checks }
    }

    fn params_for(&self, index: usize) -> GenParams {
        let mut params = self.params.with_seed(self.params.seed.wrapping_add(index as u64));
        if !self.densities.is_empty() {
            params.density = self.densities[index % self.densities.len()];
        }
        params
    }
}

/// One line of the JSONL log: one instance at one k.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogRecord {
    pub seed: u64,
    pub kind: InstanceKind,
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub x: Option<Vec<usize>>,
    pub y: Option<Vec<usize>>,
    pub k: usize,
    pub case: Option<CaseTag>,
    pub k_norm: Option<usize>,
    pub weight: Option<usize>,
    pub pi_k: Option<usize>,
    pub alpha_k: Option<usize>,
    pub chi_k: Option<usize>,
    pub lambda_k: Option<usize>,
    pub status: &'static str,
    pub check: Option<String>,
}

/// Everything the checks observed about one instance at one k, beyond the
/// log line.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub instance_index: usize,
    pub density: f64,
    pub spine: Option<SpinePartition>,
    pub evidence: Option<Evidence>,
    pub record: LogRecord,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub seed: u64,
    pub kind: InstanceKind,
    pub k: usize,
    pub instance: String,
    pub check: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FuzzReport {
    pub instances_run: usize,
    pub case_counts: BTreeMap<CaseTag, usize>,
    pub violations: Vec<Violation>,
    pub observations: Vec<Observation>,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// The run as JSONL: a header line, then one record per observation.
    pub fn write_jsonl(&self, config: &FuzzConfig, out: &mut dyn Write) -> io::Result<()> {
        let header = serde_json::json!({
            "header": {
                "params": config.params,
                "densities": config.densities,
                "count": config.count,
                "checks": config.checks.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            }
        });
        writeln!(out, "{header}")?;
        for obs in &self.observations {
            writeln!(out, "{}", serde_json::to_string(&obs.record).expect("record serializes"))?;
        }
        Ok(())
    }

    pub fn to_jsonl(&self, config: &FuzzConfig) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(config, &mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("utf-8")
    }
}

/// Runs every configured check on `count` instances. Instances are evaluated
/// in parallel but reported in index order.
pub fn fuzz_run(config: &FuzzConfig) -> Result<FuzzReport, HarnessError> {
    config.params.validate()?;
    for &density in &config.densities {
        if !(0.0..=1.0).contains(&density) {
            return Err(HarnessError::InvalidParams(format!("density {density} outside [0, 1]")));
        }
    }
    let per_instance: Vec<Vec<Observation>> = (0..config.count)
        .into_par_iter()
        .map(|index| run_instance(config, index))
        .collect::<Result<_, _>>()?;

    let mut report = FuzzReport { instances_run: config.count, ..FuzzReport::default() };
    for obs in per_instance.into_iter().flatten() {
        if let Some(case) = obs.record.case {
            *report.case_counts.entry(case).or_default() += 1;
        }
        if let Some(check) = &obs.record.check {
            report.violations.push(Violation {
                seed: obs.record.seed,
                kind: obs.record.kind,
                k: obs.record.k,
                instance: crate::cli::render_graph(&obs.record_digraph(), obs.spine.as_ref()),
                check: check.clone(),
            });
        }
        report.observations.push(obs);
    }
    Ok(report)
}

impl Observation {
    fn record_digraph(&self) -> Digraph {
        Digraph::new(self.record.n, &self.record.arcs).expect("recorded from a valid digraph")
    }
}

fn run_instance(config: &FuzzConfig, index: usize) -> Result<Vec<Observation>, HarnessError> {
    let params = config.params_for(index);
    let instance = gen_instance(&params)?;
    let d = &instance.digraph;
    let ks: Vec<usize> = match config.k_policy {
        KPolicy::All => (1..=d.n().max(1)).collect(),
        KPolicy::Fixed(k) => vec![k],
    };
    let arcs = d.arcs();
    Ok(ks
        .into_iter()
        .map(|k| {
            let mut record = LogRecord {
                seed: params.seed,
                kind: params.kind,
                n: d.n(),
                arcs: arcs.clone(),
                x: instance.spine.as_ref().map(|s| s.x_order.vertices().to_vec()),
                y: instance.spine.as_ref().map(|s| s.y_set.clone()),
                k,
                case: None,
                k_norm: None,
                weight: None,
                pi_k: None,
                alpha_k: None,
                chi_k: None,
                lambda_k: None,
                status: "ok",
                check: None,
            };
            let mut failures = Vec::new();
            let mut evidence = None;
            for &check in &config.checks {
                match check {
                    Check::Constructive => {
                        evidence = constructive_check(d, instance.spine.as_ref(), k, &mut record, &mut failures);
                    }
                    Check::Linial => linial_check(d, k, &mut record, &mut failures),
                    Check::Dual => dual_check(d, k, &mut record, &mut failures),
                }
            }
            if !failures.is_empty() {
                record.status = "violation";
                record.check = Some(failures.join("; "));
            }
            Observation { instance_index: index, density: params.density, spine: instance.spine.clone(), evidence, record }
        })
        .collect())
}

fn sandwich_budget() -> OracleBudget {
    OracleBudget::with_max_n(SANDWICH_MAX_N)
}

fn constructive_check(
    d: &Digraph,
    spine: Option<&SpinePartition>,
    k: usize,
    record: &mut LogRecord,
    failures: &mut Vec<String>,
) -> Option<Evidence> {
    let Some(spine) = spine else {
        failures.push("constructive check needs a spine partition".into());
        return None;
    };
    let certified = match certify_detailed(d, spine, k) {
        Ok(c) => c,
        Err(e) => {
            failures.push(format!("certify: {e}"));
            return None;
        }
    };
    let cert = &certified.certificate;
    record.case = Some(cert.case_tag);
    record.k_norm = Some(cert.k_norm);
    record.weight = Some(cert.weight);
    if let Err(v) = verify_certificate(d, cert) {
        let list: Vec<String> = v.iter().map(ToString::to_string).collect();
        failures.push(format!("verify: {}", list.join(", ")));
    }
    match &certified.evidence {
        Evidence::Fishbone(fb) => {
            if let Err(e) = check_fishbone(d, spine, k, fb) {
                failures.push(format!("fishbone: {e}"));
            }
        }
        Evidence::Loose(witness) => {
            if !is_valid_loose_witness(d, spine, k, witness) {
                failures.push(format!("witness {witness:?} has a common Y-neighbour"));
            }
            if d.n() <= WITNESS_ENUMERATION_MAX_N {
                if let Ok(Tightness::Tight) = classify_tightness(d, spine, k) {
                    failures.push("fishbone gave a witness but enumeration says tight".into());
                }
            }
        }
        Evidence::SmallX | Evidence::LongPath(_) => {}
    }
    if d.n() <= SANDWICH_MAX_N {
        let budget = sandwich_budget();
        match (
            crate::oracles::pi_k_oracle_with(d, k, &budget),
            crate::oracles::alpha_k_oracle_with(d, k, &budget),
        ) {
            (Ok(pi), Ok(alpha)) => {
                record.pi_k = Some(pi);
                record.alpha_k = Some(alpha);
                if pi > cert.k_norm {
                    failures.push(format!("pi_k {pi} > certificate k_norm {}", cert.k_norm));
                }
                if cert.weight > alpha {
                    failures.push(format!("certificate weight {} > alpha_k {alpha}", cert.weight));
                }
                let (x, y) = (spine.x_len(), spine.y_len());
                if pi > y + x.min(k) {
                    failures.push(format!("pi_k {pi} > |Y| + min(|X|, k) = {}", y + x.min(k)));
                }
                if alpha < y + x.min(k - 1) {
                    failures.push(format!("alpha_k {alpha} < |Y| + min(|X|, k-1) = {}", y + x.min(k - 1)));
                }
            }
            (Err(e), _) | (_, Err(e)) => failures.push(format!("oracle: {e}")),
        }
    }
    Some(certified.evidence)
}

fn linial_check(d: &Digraph, k: usize, record: &mut LogRecord, failures: &mut Vec<String>) {
    if record.pi_k.is_none() {
        match (pi_k_oracle(d, k), alpha_k_oracle(d, k)) {
            (Ok(pi), Ok(alpha)) => {
                record.pi_k = Some(pi);
                record.alpha_k = Some(alpha);
            }
            (Err(e), _) | (_, Err(e)) => {
                failures.push(format!("oracle: {e}"));
                return;
            }
        }
    }
    if let (Some(pi), Some(alpha)) = (record.pi_k, record.alpha_k) {
        if pi > alpha {
            failures.push(format!("linial: pi_k {pi} > alpha_k {alpha}"));
        }
    }
}

fn dual_check(d: &Digraph, k: usize, record: &mut LogRecord, failures: &mut Vec<String>) {
    match (chi_k_oracle(d, k), lambda_k_oracle(d, k)) {
        (Ok(chi), Ok(lambda)) => {
            record.chi_k = Some(chi);
            record.lambda_k = Some(lambda);
            if chi > lambda {
                failures.push(format!("dual: chi_k {chi} > lambda_k {lambda}"));
            }
        }
        (Err(e), _) | (_, Err(e)) => failures.push(format!("oracle: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_semicomplete;

    #[test]
    fn spine_instances_carry_valid_partitions() {
        let inst = gen_instance(&GenParams::spine(4, 3, 0.5, 42)).unwrap();
        let spine = inst.spine.unwrap();
        assert!(check_spine_partition(&inst.digraph, spine.x_order.vertices(), &spine.y_set).is_ok());
    }

    #[test]
    fn tournaments_have_one_arc_per_pair() {
        let inst = gen_instance(&GenParams::order(InstanceKind::Tournament, 5, 5, 0.5, 7)).unwrap();
        assert_eq!(inst.digraph.arc_count(), 10);
        let all: Vec<usize> = inst.digraph.vertices().collect();
        assert!(is_semicomplete(&inst.digraph, &all));
    }

    #[test]
    fn zero_density_general_is_edgeless() {
        let inst = gen_instance(&GenParams::order(InstanceKind::General, 4, 4, 0.0, 1)).unwrap();
        assert_eq!(inst.digraph.arc_count(), 0);
        assert_eq!(inst.digraph.n(), 4);
    }

    #[test]
    fn split_instances_are_semicomplete_on_x() {
        for seed in 0..30 {
            let params = GenParams { kind: InstanceKind::Split, ..GenParams::spine(6, 4, 0.3, seed) };
            let inst = gen_instance(&params).unwrap();
            let spine = inst.spine.unwrap();
            assert!(is_semicomplete(&inst.digraph, spine.x_order.vertices()));
        }
    }

    #[test]
    fn transitive_acyclic_is_closed() {
        for seed in 0..20 {
            let inst = gen_instance(&GenParams::order(InstanceKind::TransitiveAcyclic, 1, 7, 0.4, seed)).unwrap();
            let d = &inst.digraph;
            for (a, b) in d.arcs() {
                assert!(!d.has_arc(b, a));
                for c in d.vertices() {
                    if d.has_arc(b, c) {
                        assert!(d.has_arc(a, c), "missing ({a},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_params() {
        assert!(gen_instance(&GenParams::spine(0, 0, 0.5, 1)).is_err());
        assert!(gen_instance(&GenParams::spine(2, 2, 1.5, 1)).is_err());
        assert!(gen_instance(&GenParams::order(InstanceKind::Spine, 1, 3, 0.5, 1)).is_err());
        assert!(gen_instance(&GenParams::order(InstanceKind::General, 4, 3, 0.5, 1)).is_err());
        assert!("nope".parse::<InstanceKind>().is_err());
    }

    #[test]
    fn empty_run() {
        let config = FuzzConfig::new(GenParams::spine(3, 3, 0.5, 9), 0, vec![Check::Constructive]);
        let report = fuzz_run(&config).unwrap();
        assert!(report.is_clean());
        assert_eq!(report.instances_run, 0);
        assert!(report.observations.is_empty());
        assert_eq!(report.to_jsonl(&config).lines().count(), 1);
    }

    #[test]
    fn small_constructive_run_is_clean() {
        let config = FuzzConfig::new(GenParams::spine(4, 3, 0.5, 100), 40, vec![Check::Constructive]);
        let report = fuzz_run(&config).unwrap();
        assert!(report.is_clean(), "{:?}", report.violations);
        assert!(report.observations.iter().all(|o| o.record.pi_k.is_some()));
    }
}

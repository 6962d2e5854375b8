//! Census sweeps: every selected closed form against its oracle, one
//! report per graph.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::OracleCache;
use super::census::{edged_graphs_between, with_almost_complete};
use super::oracles::{ass_oracle, depth_zero_oracle, stable_ass_localization, strong_persistence_check, v_oracle, VWitness};
use super::oracles::first_persistence_violation;
use crate::error::{Error, Result};
use crate::field::is_supported_prime;
use crate::formulas;
use crate::graph::{io::to_graph6, Graph, ENUMERATION_LIMIT};
use crate::ideal::{classify_big_degree, BigDegreeCase, MonomialIdeal};
use crate::resolution::{
    betti_table_p, has_linear_quotients_with, is_componentwise_linear, reg_pd_depth, BettiTable,
    LinearQuotientsOptions,
};
use crate::varset::{format_sets, VarSet};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Oracle `Ass(I^k)` equals the predicted stable set for `n−2 ≤ k ≤ k_max`.
    Ass,
    FirstPower,
    Persistence,
    EntryBound,
    Localization,
    StableLocalization,
    Reg,
    /// Monotonicity, the socle cross-check and the stable value.
    Depth,
    /// Regularity and stable depth of `I_c(G) + (x_[n]/x_i : i ∈ S)`.
    Mixed,
    BettiFieldIndependence,
    LinearPowers,
    Symbolic,
    V,
    StrongPersistence,
    /// Whether a graph outside the symbolic class has a 4-set `F` with
    /// `b̃(G|_F) = 0`. Recorded, not asserted.
    FourSubset,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::Ass,
        Check::FirstPower,
        Check::Persistence,
        Check::EntryBound,
        Check::Localization,
        Check::StableLocalization,
        Check::Reg,
        Check::Depth,
        Check::Mixed,
        Check::BettiFieldIndependence,
        Check::LinearPowers,
        Check::Symbolic,
        Check::V,
        Check::StrongPersistence,
        Check::FourSubset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Ass => "ass",
            Check::FirstPower => "first-power",
            Check::Persistence => "persistence",
            Check::EntryBound => "entry-bound",
            Check::Localization => "localization",
            Check::StableLocalization => "stable-localization",
            Check::Reg => "reg",
            Check::Depth => "depth",
            Check::Mixed => "mixed",
            Check::BettiFieldIndependence => "betti-field-independence",
            Check::LinearPowers => "linear-powers",
            Check::Symbolic => "symbolic",
            Check::V => "v",
            Check::StrongPersistence => "strong-persistence",
            Check::FourSubset => "four-subset",
        }
    }

    /// `all` or a comma-separated list of check names.
    pub fn parse_selection(s: &str) -> Result<BTreeSet<Check>> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.insert(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::Parse("empty check selection".into()));
        }
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check '{s}'")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not run to completion: time budget or a search limit.
    Skipped,
    /// Recorded evidence with nothing asserted.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub detail: String,
}

/// Raw oracle and formula values at one power.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ass_oracle: Option<Vec<VarSet>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ass_formula: Option<Vec<VarSet>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ass_formula_match: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reg_oracle: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reg_formula: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_oracle: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_prime: Option<VarSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_formula: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth_oracle: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub socle_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub graph: Graph,
    pub ideal: MonomialIdeal,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable_set: Option<Vec<VarSet>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry_bounds: Option<Vec<(VarSet, u32)>>,
    /// Least `k ≤ k_max` with `F ∈ Ass(I^k)`, for stable `F` seen by then.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observed_entry: Option<Vec<(VarSet, u32)>>,
    pub per_k: BTreeMap<u32, PowerRecord>,
    pub summary: Vec<CheckOutcome>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn status(&self, check: Check) -> Option<Status> {
        self.summary.iter().find(|c| c.check == check).map(|c| c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.summary.iter().filter(|c| c.status == Status::Fail)
    }

    /// Ass match flags recomputed from the stored sets.
    pub fn match_flags_consistent(&self) -> bool {
        self.per_k.values().all(|r| match (&r.ass_oracle, &r.ass_formula) {
            (Some(o), Some(f)) => r.ass_formula_match == Some(o == f),
            _ => r.ass_formula_match.is_none(),
        })
    }
}

/// 1 if any check failed, else 3 if any was skipped, else 0.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    let statuses = || reports.iter().flat_map(|r| r.summary.iter().map(|c| c.status));
    if statuses().any(|s| s == Status::Fail) {
        1
    } else if statuses().any(|s| s == Status::Skipped) {
        3
    } else {
        0
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub k_max: u32,
    pub checks: BTreeSet<Check>,
    /// Betti tables are computed over each; the first drives reg and depth.
    pub primes: Vec<u32>,
    /// Wall-clock budget per graph; checks starting after it are skipped.
    pub budget_ms: Option<u64>,
    pub cache: OracleCache,
    pub linear_quotients: LinearQuotientsOptions,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            k_max: 3,
            checks: Check::ALL.into_iter().collect(),
            primes: vec![2, 3],
            budget_ms: None,
            cache: OracleCache::disabled(),
            linear_quotients: LinearQuotientsOptions {
                max_generators: 512,
                ..Default::default()
            },
        }
    }
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_max == 0 {
            return Err(Error::Precondition("k_max must be at least 1".into()));
        }
        if self.primes.is_empty() {
            return Err(Error::Precondition("at least one prime is required".into()));
        }
        if let Some(&p) = self.primes.iter().find(|&&p| !is_supported_prime(p)) {
            return Err(Error::UnsupportedPrime(p));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Smallest vertex count; defaults to `n_max`.
    pub n_min: Option<usize>,
    pub n_max: usize,
    pub workers: usize,
    pub analysis: AnalysisConfig,
}

impl SweepConfig {
    pub fn new(n_max: usize, k_max: u32, checks: BTreeSet<Check>) -> Self {
        SweepConfig {
            n_min: None,
            n_max,
            workers: rayon::current_num_threads(),
            analysis: AnalysisConfig {
                k_max,
                checks,
                ..Default::default()
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        let lo = self.n_min.unwrap_or(self.n_max);
        if lo < 3 || lo > self.n_max || self.n_max > ENUMERATION_LIMIT {
            return Err(Error::Precondition(format!(
                "vertex range {lo}..={} must lie in 3..={ENUMERATION_LIMIT}",
                self.n_max
            )));
        }
        if self.workers == 0 {
            return Err(Error::Precondition("workers must be at least 1".into()));
        }
        self.analysis.validate()
    }
}

/// One report per edged labeled graph on `n_min..=n_max` vertices, in
/// census order.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    cfg.validate()?;
    let graphs = edged_graphs_between(cfg.n_min.unwrap_or(cfg.n_max), cfg.n_max)?;
    sweep_graphs(&graphs, &cfg.analysis, cfg.workers)
}

pub fn sweep_graphs(graphs: &[Graph], cfg: &AnalysisConfig, workers: usize) -> Result<Vec<VerificationReport>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    Ok(pool.install(|| graphs.par_iter().map(|g| analyze_graph(g, cfg)).collect()))
}

/// Run the selected checks on `I_c(G)`.
pub fn analyze_graph(g: &Graph, cfg: &AnalysisConfig) -> VerificationReport {
    let mut cx = Ctx::new(g, cfg);
    let mut summary = Vec::new();
    let mut timings = BTreeMap::new();
    for &check in &cfg.checks {
        let t = Instant::now();
        let (status, detail) = match cfg.budget_ms {
            Some(b) if cx.started.elapsed().as_millis() as u64 >= b => {
                (Status::Skipped, format!("budget of {b} ms exhausted"))
            }
            _ => match cx.run(check) {
                Ok(out) => out,
                Err(e @ (Error::LimitExceeded { .. } | Error::BudgetExceeded(_))) => {
                    (Status::Skipped, e.to_string())
                }
                Err(e) => (Status::Fail, format!("error: {e}")),
            },
        };
        timings.insert(check.name().to_string(), t.elapsed().as_millis() as u64);
        summary.push(CheckOutcome {
            check,
            status,
            detail,
        });
    }
    VerificationReport {
        schema_version: REPORT_SCHEMA_VERSION,
        graph: g.clone(),
        ideal: cx.ideal,
        stable_set: cx.stable.as_ref().map(|p| p.stable_set.clone()),
        entry_bounds: cx.stable.map(|p| p.per_prime_entry_bound),
        observed_entry: cx.observed_entry,
        per_k: cx.record,
        summary,
        timings_ms: timings,
    }
}

type Outcome = Result<(Status, String)>;

fn pass(detail: impl Into<String>) -> Outcome {
    Ok((Status::Pass, detail.into()))
}

fn verdict(problems: Vec<String>, ok: impl Into<String>) -> Outcome {
    if problems.is_empty() {
        pass(ok)
    } else {
        Ok((Status::Fail, problems.join("; ")))
    }
}

struct Ctx<'a> {
    g: &'a Graph,
    n: usize,
    cfg: &'a AnalysisConfig,
    ideal: MonomialIdeal,
    powers: Vec<MonomialIdeal>,
    ass: BTreeMap<u32, Vec<VarSet>>,
    tables: BTreeMap<(u32, u32), BettiTable>,
    stable: Option<formulas::AssPrediction>,
    observed_entry: Option<Vec<(VarSet, u32)>>,
    record: BTreeMap<u32, PowerRecord>,
    started: Instant,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, cfg: &'a AnalysisConfig) -> Self {
        let ideal = MonomialIdeal::complementary_edge_ideal(g);
        Ctx {
            g,
            n: g.vertex_count(),
            cfg,
            powers: vec![ideal.clone()],
            ideal,
            ass: BTreeMap::new(),
            tables: BTreeMap::new(),
            stable: None,
            observed_entry: None,
            record: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    fn k_max(&self) -> u32 {
        self.cfg.k_max
    }

    /// First power at which the stable set is claimed.
    fn k_stable(&self) -> u32 {
        (self.n as u32).saturating_sub(2).max(1)
    }

    fn power(&mut self, k: u32) -> Result<MonomialIdeal> {
        while self.powers.len() < k as usize {
            let next = self.powers.last().unwrap().product(&self.ideal)?;
            self.powers.push(next);
        }
        Ok(self.powers[k as usize - 1].clone())
    }

    fn rec(&mut self, k: u32) -> &mut PowerRecord {
        self.record.entry(k).or_default()
    }

    fn ass(&mut self, k: u32) -> Result<Vec<VarSet>> {
        if let Some(a) = self.ass.get(&k) {
            return Ok(a.clone());
        }
        let p = self.power(k)?;
        let a = self.cfg.cache.get_or_compute("ass", "", &p, || ass_oracle(&p))?;
        self.ass.insert(k, a.clone());
        self.rec(k).ass_oracle = Some(a.clone());
        Ok(a)
    }

    fn set_ass_formula(&mut self, k: u32, formula: Vec<VarSet>) {
        let r = self.rec(k);
        r.ass_formula_match = r.ass_oracle.as_ref().map(|o| *o == formula);
        r.ass_formula = Some(formula);
    }

    fn table_of(&self, ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
        self.cfg
            .cache
            .get_or_compute("betti", &format!("p={p}"), ideal, || betti_table_p(ideal, p))
    }

    fn table(&mut self, k: u32, p: u32) -> Result<BettiTable> {
        if let Some(t) = self.tables.get(&(k, p)) {
            return Ok(t.clone());
        }
        let pk = self.power(k)?;
        let t = self.table_of(&pk, p)?;
        self.tables.insert((k, p), t.clone());
        Ok(t)
    }

    fn stable(&mut self) -> Result<formulas::AssPrediction> {
        if self.stable.is_none() {
            self.stable = Some(formulas::ass_infinity(self.g)?);
        }
        Ok(self.stable.clone().unwrap())
    }

    fn run(&mut self, check: Check) -> Outcome {
        match check {
            Check::Ass => self.check_ass(),
            Check::FirstPower => self.check_first_power(),
            Check::Persistence => self.check_persistence(),
            Check::EntryBound => self.check_entry_bound(),
            Check::Localization => self.check_localization(),
            Check::StableLocalization => self.check_stable_localization(),
            Check::Reg => self.check_reg(),
            Check::Depth => self.check_depth(),
            Check::Mixed => self.check_mixed(),
            Check::BettiFieldIndependence => self.check_field_independence(),
            Check::LinearPowers => self.check_linear_powers(),
            Check::Symbolic => self.check_symbolic(),
            Check::V => self.check_v(),
            Check::StrongPersistence => self.check_strong_persistence(),
            Check::FourSubset => self.check_four_subset(),
        }
    }

    fn check_ass(&mut self) -> Outcome {
        let stable = self.stable()?.stable_set;
        let k0 = self.k_stable();
        if k0 > self.k_max() {
            return Ok((Status::Skipped, format!("needs k_max >= {k0}")));
        }
        let mut problems = Vec::new();
        for k in k0..=self.k_max() {
            let a = self.ass(k)?;
            if a != stable {
                problems.push(format!(
                    "k={k}: oracle {} vs formula {}",
                    format_sets(&a),
                    format_sets(&stable)
                ));
            }
            self.set_ass_formula(k, stable.clone());
        }
        verdict(problems, format!("Ass(I^k) = {} for k = {k0}..={}", format_sets(&stable), self.k_max()))
    }

    fn check_first_power(&mut self) -> Outcome {
        let formula = formulas::ass_first_power(self.g)?;
        let a = self.ass(1)?;
        if self.record.get(&1).is_none_or(|r| r.ass_formula.is_none()) {
            self.set_ass_formula(1, formula.clone());
        }
        let problems = if a == formula {
            vec![]
        } else {
            vec![format!("oracle {} vs formula {}", format_sets(&a), format_sets(&formula))]
        };
        verdict(problems, format!("Ass(I) = {}", format_sets(&a)))
    }

    fn check_persistence(&mut self) -> Outcome {
        let chain = (1..=self.k_max()).map(|k| self.ass(k)).collect::<Result<Vec<_>>>()?;
        match first_persistence_violation(&chain) {
            None => pass(format!("Ass chain increasing for k = 1..={}", self.k_max())),
            Some(v) => Ok((
                Status::Fail,
                format!("{} in Ass(I^{}) but not in Ass(I^{})", v.prime, v.k, v.k + 1),
            )),
        }
    }

    fn check_entry_bound(&mut self) -> Outcome {
        let pred = self.stable()?;
        let chain = (1..=self.k_max()).map(|k| self.ass(k)).collect::<Result<Vec<_>>>()?;
        let mut observed = Vec::new();
        let mut problems = Vec::new();
        let mut unchecked = 0;
        for &(f, bound) in &pred.per_prime_entry_bound {
            let seen = chain.iter().position(|a| a.contains(&f)).map(|j| j as u32 + 1);
            if let Some(k) = seen {
                observed.push((f, k));
            }
            if f.len() < 2 {
                continue;
            }
            if bound > self.k_max() {
                unchecked += 1;
            } else if !chain[bound as usize - 1].contains(&f) {
                problems.push(format!(
                    "{f} not in Ass(I^{bound}); enters at {}",
                    seen.map_or_else(|| format!("k > {}", self.k_max()), |k| k.to_string())
                ));
            }
        }
        self.observed_entry = Some(observed);
        if problems.is_empty() && unchecked > 0 {
            return Ok((Status::Skipped, format!("{unchecked} bounds above k_max")));
        }
        verdict(problems, "every stable prime present at its bound")
    }

    fn check_localization(&mut self) -> Outcome {
        let mut problems = Vec::new();
        for f in 1u64..1 << self.n {
            let formula = formulas::localization_formula(self.g, VarSet(f))?;
            let direct = self.ideal.localize(VarSet(f))?.ideal;
            if formula != direct {
                problems.push(format!("F={}: formula {formula} vs {direct}", VarSet(f)));
            }
        }
        verdict(problems, format!("all {} localizations agree", (1u64 << self.n) - 1))
    }

    fn check_stable_localization(&mut self) -> Outcome {
        let stable = self.stable()?.stable_set;
        let found = stable_ass_localization(&self.ideal, self.k_stable())?;
        let sets: Vec<VarSet> = found.iter().map(|&(f, _)| f).collect();
        let listing = found
            .iter()
            .map(|(f, k)| format!("{f}@{k}"))
            .collect::<Vec<_>>()
            .join(" ");
        if sets == stable {
            pass(listing)
        } else {
            Ok((
                Status::Fail,
                format!("localization route {listing} vs formula {}", format_sets(&stable)),
            ))
        }
    }

    fn check_reg(&mut self) -> Outcome {
        let cls = classify_big_degree(&self.ideal)?;
        let p = self.cfg.primes[0];
        let mut problems = Vec::new();
        for k in 1..=self.k_max() {
            let oracle = self.table(k, p)?.regularity().ok_or(Error::DegenerateIdeal)?;
            let formula = formulas::reg_closed_form(&cls, k)?;
            let r = self.rec(k);
            r.reg_oracle = Some(oracle);
            r.reg_formula = Some(formula);
            if oracle != formula {
                problems.push(format!("k={k}: oracle {oracle} vs formula {formula}"));
            }
        }
        verdict(problems, "reg matches for every k")
    }

    fn depths(&mut self, k: u32) -> Result<(usize, Option<String>)> {
        let p = self.cfg.primes[0];
        let pk = self.power(k)?;
        let depth = reg_pd_depth(&self.table(k, p)?, &pk)?.depth;
        let socle = depth_zero_oracle(&pk)?.map(|m| m.to_string());
        let r = self.rec(k);
        r.depth_oracle = Some(depth);
        r.socle_witness = socle.clone();
        Ok((depth, socle))
    }

    fn check_depth(&mut self) -> Outcome {
        let cls = classify_big_degree(&self.ideal)?;
        let pred = formulas::depth_and_dstab_closed_form(&cls)?;
        let mut problems = Vec::new();
        let mut prev = usize::MAX;
        let mut seq = Vec::new();
        for k in 1..=self.k_max() {
            let (d, socle) = self.depths(k)?;
            seq.push(d.to_string());
            if d > prev {
                problems.push(format!("depth rises at k={k}: {prev} -> {d}"));
            }
            if (d == 0) != socle.is_some() {
                problems.push(format!("k={k}: depth {d} but socle witness {socle:?}"));
            }
            if k >= pred.dstab_bound && d != pred.stable_depth {
                problems.push(format!("k={k}: depth {d} vs stable depth {}", pred.stable_depth));
            }
            prev = d;
        }
        verdict(
            problems,
            format!("depths {} (stable {} from k <= {})", seq.join(","), pred.stable_depth, pred.dstab_bound),
        )
    }

    fn check_mixed(&mut self) -> Outcome {
        let iso = self.g.isolated().into_iter().fold(0u64, |m, i| m | 1 << i);
        if iso == 0 {
            return pass("no isolated vertices");
        }
        let p = self.cfg.primes[0];
        let n = self.n as u32;
        let mut problems = Vec::new();
        let mut count = 0;
        let mut s = iso;
        while s != 0 {
            count += 1;
            let j = with_almost_complete(self.g, VarSet(s))?;
            let cls = classify_big_degree(&j)?;
            if cls.case != BigDegreeCase::Mixed {
                problems.push(format!("{j} classified as {:?}", cls.case));
            } else {
                let stable = formulas::depth_and_dstab_closed_form(&cls)?;
                let mut power = j.clone();
                for k in 1..=self.k_max() {
                    if k > 1 {
                        power = power.product(&j)?;
                    }
                    let t = self.table_of(&power, p)?;
                    let rpd = reg_pd_depth(&t, &power)?;
                    if rpd.reg != (n - 1) * k {
                        problems.push(format!("{j}, k={k}: reg {} vs {}", rpd.reg, (n - 1) * k));
                    }
                    if k >= stable.dstab_bound.max(1) && rpd.depth != stable.stable_depth {
                        problems.push(format!(
                            "{j}, k={k}: depth {} vs {}",
                            rpd.depth, stable.stable_depth
                        ));
                    }
                }
            }
            s = (s - 1) & iso;
        }
        verdict(problems, format!("{count} mixed ideals agree"))
    }

    fn check_field_independence(&mut self) -> Outcome {
        let primes = self.cfg.primes.clone();
        if primes.len() < 2 {
            return pass("single prime, nothing to compare");
        }
        let mut problems = Vec::new();
        for k in 1..=self.k_max() {
            let base = self.table(k, primes[0])?;
            for &p in &primes[1..] {
                if self.table(k, p)?.entries != base.entries {
                    problems.push(format!("k={k}: tables over p={} and p={p} differ", primes[0]));
                }
            }
        }
        verdict(problems, format!("identical tables over p in {primes:?}"))
    }

    fn check_linear_powers(&mut self) -> Outcome {
        let cls = classify_big_degree(&self.ideal)?;
        let predicted = formulas::linear_powers_predicate(&cls)?;
        let p = self.cfg.primes[0];
        let mut problems = Vec::new();
        for k in 1..=self.k_max() {
            let pk = self.power(k)?;
            let lq = has_linear_quotients_with(&pk, &self.cfg.linear_quotients)?.is_some();
            let cl = is_componentwise_linear(&pk, p)?;
            if lq != cl || cl != predicted {
                problems.push(format!(
                    "k={k}: linear quotients {lq}, componentwise linear {cl}, c(G)=1 criterion {predicted}"
                ));
            }
        }
        verdict(problems, format!("all three conditions {predicted}"))
    }

    fn check_symbolic(&mut self) -> Outcome {
        let equal = self.power(2)? == self.ideal.symbolic_power(2)?;
        let class = formulas::symbolic_equals_ordinary_class(self.g)?;
        let detail = format!("I^2 = I^(2): {equal}; in class: {class}");
        if equal == class {
            pass(detail)
        } else {
            Ok((Status::Fail, detail))
        }
    }

    fn check_v(&mut self) -> Outcome {
        let n = self.n as u32;
        let mut problems = Vec::new();
        for k in 1..=self.k_max() {
            let pk = self.power(k)?;
            let w: VWitness = self.cfg.cache.get_or_compute("v", "", &pk, || v_oracle(&pk))?;
            let formula = formulas::v_closed_form(self.g, k)?;
            let r = self.rec(k);
            r.v_oracle = Some(w.v);
            r.v_witness = Some(w.witness.to_string());
            r.v_prime = Some(w.prime);
            r.v_formula = Some(formula);
            if w.v != formula {
                problems.push(format!("k={k}: oracle {} (witness {}) vs formula {formula}", w.v, w.witness));
            }
            if w.v + 1 < (n - 2) * k {
                problems.push(format!("k={k}: v = {} below (n-2)k-1", w.v));
            }
        }
        verdict(problems, "v matches for every k")
    }

    fn check_strong_persistence(&mut self) -> Outcome {
        let out = strong_persistence_check(&self.ideal, self.k_max())?;
        Ok((Status::Info, format!("I^(k+1):I = I^k for k = 1..: {:?}", out.per_k)))
    }

    fn check_four_subset(&mut self) -> Outcome {
        if formulas::symbolic_equals_ordinary_class(self.g)? {
            return Ok((Status::Info, "in class".into()));
        }
        let core = self.g.non_isolated_mask();
        let mut f = core;
        while f != 0 {
            if f.count_ones() == 4 && self.g.b_tilde_within(f) == 0 {
                return Ok((Status::Info, format!("found {}", VarSet(f))));
            }
            f = (f - 1) & core;
        }
        Ok((Status::Info, "none".into()))
    }
}

pub fn write_jsonl<W: Write>(reports: &[VerificationReport], mut w: W) -> Result<()> {
    for r in reports {
        serde_json::to_writer(&mut w, r).map_err(|e| Error::Io(e.to_string()))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_jsonl<R: BufRead>(r: R) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for line in r.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line).map_err(|e| Error::Parse(e.to_string()))?);
        }
    }
    Ok(out)
}

/// Per-check counts, every failure with its witness, and the recorded
/// evidence of the informational checks.
pub fn markdown_summary(reports: &[VerificationReport]) -> String {
    let mut counts: BTreeMap<Check, [usize; 4]> = BTreeMap::new();
    for r in reports {
        for c in &r.summary {
            let slot = match c.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Skipped => 2,
                Status::Info => 3,
            };
            counts.entry(c.check).or_default()[slot] += 1;
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "# Sweep summary\n\n{} graphs\n", reports.len());
    out.push_str("| check | pass | fail | skipped | info |\n|---|---|---|---|---|\n");
    for (check, [p, f, s, i]) in &counts {
        let _ = writeln!(out, "| {check} | {p} | {f} | {s} | {i} |");
    }
    let mut section = |title: &str, pick: &dyn Fn(&CheckOutcome) -> bool| {
        let rows: Vec<String> = reports
            .iter()
            .flat_map(|r| {
                r.summary
                    .iter()
                    .filter(|c| pick(c))
                    .map(move |c| format!("- `{}` {} ({}): {}", to_graph6(&r.graph), r.graph, c.check, c.detail))
            })
            .collect();
        if !rows.is_empty() {
            let _ = writeln!(out, "\n## {title}\n");
            for row in rows {
                let _ = writeln!(out, "{row}");
            }
        }
    };
    section("Failures", &|c| c.status == Status::Fail);
    section("Skipped", &|c| c.status == Status::Skipped);
    section("Graphs outside the symbolic class without a 4-set of b̃ = 0", &|c| {
        c.check == Check::FourSubset && c.detail == "none"
    });
    section("Strong persistence not observed", &|c| {
        c.check == Check::StrongPersistence && c.detail.contains("false")
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(k_max: u32, checks: &str) -> AnalysisConfig {
        AnalysisConfig {
            k_max,
            checks: Check::parse_selection(checks).unwrap(),
            ..Default::default()
        }
    }

    #[test]
    fn selection_parsing() {
        assert_eq!(Check::parse_selection("all").unwrap().len(), Check::ALL.len());
        let s = Check::parse_selection("ass, v").unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![Check::Ass, Check::V]);
        assert!(Check::parse_selection("nope").is_err());
        assert!(Check::parse_selection("").is_err());
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
        }
    }

    #[test]
    fn c4_report() {
        let r = analyze_graph(&Graph::cycle(4).unwrap(), &cfg(3, "all"));
        for c in &r.summary {
            assert_ne!(c.status, Status::Fail, "{c:?}");
            assert_ne!(c.status, Status::Skipped, "{c:?}");
        }
        assert_eq!(r.per_k[&2].ass_formula_match, Some(true));
        assert_eq!(r.per_k[&3].reg_oracle, r.per_k[&3].reg_formula);
        assert!(r.match_flags_consistent());
        assert_eq!(exit_code(std::slice::from_ref(&r)), 0);
    }

    #[test]
    fn entry_bound_fails_on_independent_triples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = analyze_graph(&star, &cfg(3, "entry-bound,ass"));
        assert_eq!(r.status(Check::Ass), Some(Status::Pass));
        assert_eq!(r.status(Check::EntryBound), Some(Status::Fail));
        let triple = VarSet::from_labels(&[2, 3, 4]);
        assert!(r.observed_entry.unwrap().contains(&(triple, 2)));
        assert_eq!(r.entry_bounds.unwrap().iter().find(|(f, _)| *f == triple).unwrap().1, 1);
    }

    #[test]
    fn budget_and_exit_codes() {
        let g = Graph::path(4).unwrap();
        let mut c = cfg(2, "ass,reg");
        c.budget_ms = Some(0);
        let skipped = analyze_graph(&g, &c);
        assert!(skipped.summary.iter().all(|s| s.status == Status::Skipped));
        assert_eq!(exit_code(std::slice::from_ref(&skipped)), 3);
        let ok = analyze_graph(&g, &cfg(2, "ass,reg"));
        assert_eq!(exit_code(std::slice::from_ref(&ok)), 0);
        let mut fail = ok.clone();
        fail.summary[0].status = Status::Fail;
        assert_eq!(exit_code(&[ok, skipped, fail]), 1);
    }

    #[test]
    fn jsonl_round_trip_and_markdown() {
        let sweep_cfg = SweepConfig {
            n_min: Some(3),
            n_max: 3,
            workers: 2,
            analysis: cfg(2, "all"),
        };
        let reports = sweep(&sweep_cfg).unwrap();
        assert_eq!(reports.len(), 7);
        let mut buf = Vec::new();
        write_jsonl(&reports, &mut buf).unwrap();
        let back = read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back, reports);
        assert_eq!(exit_code(&back), exit_code(&reports));
        let md = markdown_summary(&reports);
        assert!(md.contains("| ass |"));
        assert!(md.contains("7 graphs"));
    }

    #[test]
    fn config_validation() {
        assert!(SweepConfig::new(7, 2, Check::ALL.into_iter().collect()).validate().is_err());
        assert!(SweepConfig::new(2, 2, Check::ALL.into_iter().collect()).validate().is_err());
        let mut c = SweepConfig::new(4, 2, Check::ALL.into_iter().collect());
        c.analysis.primes = vec![4];
        assert!(c.validate().is_err());
        c.analysis.primes = vec![];
        assert!(c.validate().is_err());
    }
}

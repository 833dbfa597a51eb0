//! Seeded random frameworks and brute-force checks of the correspondences
//! between ABA frameworks and their instantiated (p)BAFs, of the two
//! defense formulations, and of the reduction gadgets.
//!
//! Every check returns a [`CheckReport`]; failing records carry a
//! serialization of the framework that reproduces them.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::aba::{write_aba, AbaFramework, AssumptionSet, Rule, DEFAULT_ARGUMENT_CAP};
use crate::baf::{write_baf, Baf, Extension};
use crate::error::{Error, Result};
use crate::idset::{ArgId, AtomId};
use crate::instantiate::instantiate;
use crate::reductions::{
    brute_force_sat, construct_gr_baf, construct_sat_baf, construct_skept_baf,
    construct_skept_pbaf, Cnf,
};
use crate::semantics::{DefenseMode, Semantics, Task};

/// Shape of a random ABA framework.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenParams {
    pub n_atoms: usize,
    pub n_assumptions: usize,
    pub n_rules: usize,
    pub max_body: usize,
    pub seed: u64,
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_assumptions == 0 || self.n_assumptions > self.n_atoms {
            return Err(Error::Invalid(format!(
                "need 1 <= n_assumptions ({}) <= n_atoms ({})",
                self.n_assumptions, self.n_atoms
            )));
        }
        Ok(())
    }

    /// Draws a shape within `limits`, deterministically from `seed`. The
    /// drawn shape keeps `seed` for generating the framework itself.
    pub fn sampled(limits: &CorpusLimits, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed_5eed_5eed);
        let n_atoms = rng.gen_range(1..=limits.max_atoms.max(1));
        let n_assumptions = rng.gen_range(1..=limits.max_assumptions.clamp(1, n_atoms));
        Self {
            n_atoms,
            n_assumptions,
            n_rules: rng.gen_range(0..=limits.max_rules),
            max_body: limits.max_body,
            seed,
        }
    }
}

/// Upper bounds for a corpus of random ABA frameworks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusLimits {
    pub max_atoms: usize,
    pub max_assumptions: usize,
    pub max_rules: usize,
    pub max_body: usize,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        Self {
            max_atoms: 8,
            max_assumptions: 5,
            max_rules: 10,
            max_body: 3,
        }
    }
}

/// A random framework whose first `n_assumptions` atoms are the
/// assumptions. Contraries and rule heads are uniform over all atoms, so
/// rules may derive assumptions.
pub fn random_aba(params: &GenParams) -> Result<AbaFramework> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.n_atoms;
    let contraries: Vec<(AtomId, AtomId)> = (0..params.n_assumptions)
        .map(|a| (AtomId(a), AtomId(rng.gen_range(0..n))))
        .collect();
    let rules: Vec<Rule> = (0..params.n_rules)
        .map(|_| {
            let head = AtomId(rng.gen_range(0..n));
            let size = rng.gen_range(0..=params.max_body.min(n));
            let body = sample(&mut rng, n, size).into_iter().map(AtomId);
            Rule::new(head, body)
        })
        .collect();
    AbaFramework::new(n, contraries, rules)
}

/// Shape of a random BAF: each ordered pair is an attack with probability
/// `attack_prob` and, independently, a support with `support_prob`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BafParams {
    pub n_args: usize,
    pub attack_prob: f64,
    pub support_prob: f64,
    pub seed: u64,
}

impl BafParams {
    /// Draws 1..=`max_args` arguments and edge densities from `seed`.
    pub fn sampled(max_args: usize, supports: bool, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbaf0_baf0_baf0_baf0);
        Self {
            n_args: rng.gen_range(1..=max_args.max(1)),
            attack_prob: rng.gen_range(0.05..0.45),
            support_prob: if supports { rng.gen_range(0.0..0.3) } else { 0.0 },
            seed,
        }
    }
}

pub fn random_baf(params: &BafParams) -> Baf {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.n_args;
    let mut attacks = Vec::new();
    let mut supports = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if rng.gen_bool(params.attack_prob) {
                attacks.push((ArgId(x), ArgId(y)));
            }
            if x != y && rng.gen_bool(params.support_prob) {
                supports.push((ArgId(x), ArgId(y)));
            }
        }
    }
    Baf::new(n, attacks, supports).expect("edges stay within range")
}

fn random_clause(rng: &mut ChaCha8Rng, n_vars: usize, max_width: usize) -> Vec<i64> {
    let width = rng.gen_range(1..=max_width.min(n_vars));
    sample(rng, n_vars, width)
        .into_iter()
        .map(|v| {
            let lit = v as i64 + 1;
            if rng.gen_bool(0.5) {
                lit
            } else {
                -lit
            }
        })
        .collect()
}

/// A random CNF over `n_vars >= 1` variables with 1..=`max_clauses` clauses
/// of width 1..=`max_width`.
pub fn random_cnf(n_vars: usize, max_clauses: usize, max_width: usize, seed: u64) -> Cnf {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(1..=max_clauses.max(1));
    let clauses: Vec<Vec<i64>> = (0..m)
        .map(|_| random_clause(&mut rng, n_vars, max_width.max(1)))
        .collect();
    Cnf::new(n_vars, clauses).expect("generated clauses are well formed")
}

/// Every CNF over `n_vars` variables with at most `max_clauses` distinct
/// non-tautological clauses of width 1..=`max_width`, including the empty
/// formula.
pub fn all_cnfs(n_vars: usize, max_clauses: usize, max_width: usize) -> Vec<Cnf> {
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    for mask in 1u32..(1 << n_vars) {
        let vars: Vec<i64> = (0..n_vars as i64).filter(|v| mask >> v & 1 == 1).collect();
        if vars.len() > max_width {
            continue;
        }
        for signs in 0u32..(1 << vars.len()) {
            let clause = vars
                .iter()
                .enumerate()
                .map(|(k, v)| if signs >> k & 1 == 1 { -(v + 1) } else { v + 1 })
                .collect();
            clauses.push(clause);
        }
    }
    let mut out = Vec::new();
    let mut pick = Vec::new();
    choose(&clauses, 0, max_clauses, &mut pick, &mut |chosen| {
        out.push(Cnf::new(n_vars, chosen.to_vec()).expect("generated clauses are well formed"));
    });
    out
}

fn choose(
    items: &[Vec<i64>],
    from: usize,
    left: usize,
    pick: &mut Vec<Vec<i64>>,
    emit: &mut impl FnMut(&[Vec<i64>]),
) {
    emit(pick);
    if left == 0 {
        return;
    }
    for i in from..items.len() {
        pick.push(items[i].clone());
        choose(items, i + 1, left - 1, pick, emit);
        pick.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// One checked case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub seed: u64,
    pub check: &'static str,
    pub sigma: Option<Semantics>,
    pub direction: String,
    pub status: Status,
    /// The offending set on failure, or the reason for skipping.
    pub witness: Option<String>,
    /// A serialization that reproduces a failure.
    pub framework: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub records: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Cases that ran to a verdict.
    pub fn cases_run(&self) -> usize {
        self.records.len() - self.skipped()
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skipped)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.records.extend(other.records);
    }

    /// Stamps every record with `seed`.
    pub fn with_seed(mut self, seed: u64) -> Self {
        for r in &mut self.records {
            r.seed = seed;
        }
        self
    }

    fn push(
        &mut self,
        check: &'static str,
        sigma: Option<Semantics>,
        direction: &str,
        status: Status,
        witness: Option<String>,
    ) {
        self.records.push(CheckRecord {
            seed: 0,
            check,
            sigma,
            direction: direction.to_string(),
            status,
            witness,
            framework: None,
        });
    }

    /// Attaches `framework` to every failing record.
    fn attach(mut self, framework: impl FnOnce() -> String) -> Self {
        if !self.passed() {
            let text = framework();
            for r in self.records.iter_mut().filter(|r| r.status == Status::Fail) {
                r.framework = Some(text.clone());
            }
        }
        self
    }

    /// One line per record, failing frameworks indented below their
    /// record, and a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let sigma = r.sigma.map_or("-", Semantics::as_str);
            let _ = write!(
                out,
                "seed={} check={} sigma={} direction={} status={}",
                r.seed,
                r.check,
                sigma,
                r.direction,
                r.status.as_str()
            );
            if let Some(w) = &r.witness {
                let _ = write!(out, " witness={w}");
            }
            out.push('\n');
            if let Some(f) = &r.framework {
                for line in f.lines() {
                    let _ = writeln!(out, "  | {line}");
                }
            }
        }
        let _ = writeln!(
            out,
            "cases: {} failures: {} skipped: {}",
            self.cases_run(),
            self.count(Status::Fail),
            self.skipped()
        );
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            cases_run: usize,
            failures: usize,
            skipped: usize,
            records: &'a [CheckRecord],
        }
        let doc = Doc {
            cases_run: self.cases_run(),
            failures: self.count(Status::Fail),
            skipped: self.skipped(),
            records: &self.records,
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

/// Limits for [`check_correspondence_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorrespondenceLimits {
    /// Instantiation argument cap; exceeding it skips the case.
    pub cap: usize,
    /// Enumeration guard for the instantiated frameworks.
    pub max_args: usize,
}

impl Default for CorrespondenceLimits {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ARGUMENT_CAP,
            max_args: DEFAULT_ARGUMENT_CAP,
        }
    }
}

pub fn check_correspondence(d: &AbaFramework, sigma: Semantics) -> CheckReport {
    check_correspondence_with(d, sigma, CorrespondenceLimits::default())
}

/// Compares `sigma(d)` with `sigma` over the instantiated BAF and pBAF.
///
/// On the BAF, complete, grounded and stable extensions are compared in
/// both directions and admissible sets only from the framework to the
/// BAF. On the pBAF all of ad, co, pr, gr and stb are compared in both
/// directions. Guard and cap violations are recorded as skipped.
pub fn check_correspondence_with(
    d: &AbaFramework,
    sigma: Semantics,
    limits: CorrespondenceLimits,
) -> CheckReport {
    const CHECK: &str = "correspondence";
    let mut report = CheckReport::new();
    if sigma == Semantics::Cf {
        return report;
    }
    let skip = |report: &mut CheckReport, e: Error| {
        report.push(CHECK, Some(sigma), "all", Status::Skipped, Some(e.to_string()));
    };
    let inst = match instantiate(d, limits.cap) {
        Ok(inst) => inst,
        Err(e) => {
            skip(&mut report, e);
            return report;
        }
    };
    let aba = match d.extensions(sigma) {
        Ok(family) => family,
        Err(e) => {
            skip(&mut report, e);
            return report;
        }
    };
    let aba_set: BTreeSet<&AssumptionSet> = aba.iter().collect();
    let show_asms = |s: &AssumptionSet| {
        let names: Vec<String> = s.iter().map(|a| d.atom_name(a)).collect();
        format!("{{{}}}", names.join(","))
    };
    let baf = inst.baf();

    let forward = |report: &mut CheckReport, direction: &str, family: &[Extension]| {
        let bad = family
            .iter()
            .find(|e| !aba_set.contains(&inst.assumptions_of(e)));
        let witness = bad.map(|e| {
            format!(
                "{} has assumptions {}",
                baf.display_set(e),
                show_asms(&inst.assumptions_of(e))
            )
        });
        let status = if bad.is_some() { Status::Fail } else { Status::Pass };
        report.push(CHECK, Some(sigma), direction, status, witness);
    };
    let backward = |report: &mut CheckReport, direction: &str, member: &dyn Fn(&Extension) -> bool| {
        let bad = aba.iter().find(|s| !member(&inst.arguments_for(s)));
        let witness = bad.map(|s| {
            format!(
                "{} gives arguments {}",
                show_asms(s),
                baf.display_set(&inst.arguments_for(s))
            )
        });
        let status = if bad.is_some() { Status::Fail } else { Status::Pass };
        report.push(CHECK, Some(sigma), direction, status, witness);
    };

    // Without complete extensions the grounded extension is a convention
    // on both sides; what must correspond is that both families are empty.
    if sigma == Semantics::Gr && d.extensions(Semantics::Co).is_ok_and(|co| co.is_empty()) {
        let families = [
            ("baf<->aba", baf.extensions_bounded(Semantics::Co, limits.max_args)),
            ("pbaf<->aba", inst.pbaf().extensions_bounded(Semantics::Co, limits.max_args)),
        ];
        for (direction, co) in families {
            match co {
                Ok(co) if co.is_empty() => report.push(CHECK, Some(sigma), direction, Status::Pass, None),
                Ok(co) => report.push(
                    CHECK,
                    Some(sigma),
                    direction,
                    Status::Fail,
                    Some(format!("no complete assumption sets but {} complete argument sets", co.len())),
                ),
                Err(e) => skip(&mut report, e),
            }
        }
        return report.attach(|| write_aba(d));
    }

    match sigma {
        Semantics::Ad => backward(&mut report, "aba->baf", &|e| baf.is_admissible(e)),
        Semantics::Co | Semantics::Gr | Semantics::Stb => {
            match baf.extensions_bounded(sigma, limits.max_args) {
                Ok(family) => {
                    forward(&mut report, "baf->aba", &family);
                    let set: BTreeSet<&Extension> = family.iter().collect();
                    backward(&mut report, "aba->baf", &|e| set.contains(e));
                }
                Err(e) => skip(&mut report, e),
            }
        }
        _ => {}
    }
    match inst.pbaf().extensions_bounded(sigma, limits.max_args) {
        Ok(family) => {
            forward(&mut report, "pbaf->aba", &family);
            let set: BTreeSet<&Extension> = family.iter().collect();
            backward(&mut report, "aba->pbaf", &|e| set.contains(e));
        }
        Err(e) => skip(&mut report, e),
    }
    report.attach(|| write_aba(d))
}

/// Admissible sets of the instantiated BAF whose assumptions are not
/// admissible in `d`. Such sets exist, which is why the BAF correspondence
/// for admissibility is only checked in one direction.
pub fn ad_forward_counterexamples(
    d: &AbaFramework,
    cap: usize,
) -> Result<Vec<(Extension, AssumptionSet)>> {
    let inst = instantiate(d, cap)?;
    let aba = d.extensions(Semantics::Ad)?;
    Ok(inst
        .baf()
        .extensions_bounded(Semantics::Ad, cap)?
        .into_iter()
        .map(|e| {
            let s = inst.assumptions_of(&e);
            (e, s)
        })
        .filter(|(_, s)| !aba.contains(s))
        .collect())
}

/// Largest BAF [`check_defense_equivalence`] accepts.
pub const MAX_DEFENSE_CHECK_ARGS: usize = 8;

/// Compares both defense formulations on every `(E, a)` of `f`.
pub fn check_defense_equivalence(f: &Baf) -> Result<CheckReport> {
    if f.n_args() > MAX_DEFENSE_CHECK_ARGS {
        return Err(Error::TooLarge {
            guard: "max-args",
            size: f.n_args(),
            limit: MAX_DEFENSE_CHECK_ARGS,
        });
    }
    let n = f.n_args();
    let mut witness = None;
    'outer: for mask in 0u32..(1 << n) {
        let e: Extension = (0..n).filter(|i| mask >> i & 1 == 1).map(ArgId).collect();
        for a in (0..n).map(ArgId) {
            let closed = f.defends_with(&e, a, DefenseMode::ClosedSets)?;
            let single = f.defends_with(&e, a, DefenseMode::AttackerClosure)?;
            if closed != single {
                witness = Some(format!(
                    "E={} a={}: closed-sets {closed}, attacker-closure {single}",
                    f.display_set(&e),
                    f.arg_name(a)
                ));
                break 'outer;
            }
        }
    }
    let mut report = CheckReport::new();
    let status = if witness.is_some() { Status::Fail } else { Status::Pass };
    report.push("defense-eq", None, "baf", status, witness);
    Ok(report.attach(|| write_baf(f)))
}

/// Largest framework [`check_aba_defense_equivalence`] accepts.
pub const MAX_ABA_DEFENSE_CHECK_ASSUMPTIONS: usize = 12;

/// Compares both defense formulations on every `(S, a)` of `d`.
pub fn check_aba_defense_equivalence(d: &AbaFramework) -> Result<CheckReport> {
    let k = d.assumptions().len();
    if k > MAX_ABA_DEFENSE_CHECK_ASSUMPTIONS {
        return Err(Error::TooLarge {
            guard: "max-assumptions",
            size: k,
            limit: MAX_ABA_DEFENSE_CHECK_ASSUMPTIONS,
        });
    }
    let mut witness = None;
    'outer: for mask in 0u64..(1 << k) {
        let s = d.set_from_mask(mask);
        for &a in d.assumptions() {
            let closed = d.defends(&s, a, DefenseMode::ClosedSets)?;
            let single = d.defends(&s, a, DefenseMode::AttackerClosure)?;
            if closed != single {
                witness = Some(format!(
                    "S={} a={}: closed-sets {closed}, attacker-closure {single}",
                    d.display_set(&s),
                    d.atom_name(a)
                ));
                break 'outer;
            }
        }
    }
    let mut report = CheckReport::new();
    let status = if witness.is_some() { Status::Fail } else { Status::Pass };
    report.push("defense-eq", None, "aba", status, witness);
    Ok(report.attach(|| write_aba(d)))
}

/// Enumeration guard for the frameworks built by the reductions.
pub const MAX_CONSTRUCTION_ARGS: usize = 64;

/// Checks the behavior of all four reductions on `phi` against
/// [`brute_force_sat`].
pub fn check_construction_lemmas(phi: &Cnf) -> Result<CheckReport> {
    const CHECK: &str = "constructions";
    let sat = brute_force_sat(phi)?;
    let n = phi.n_vars();
    let mut report = CheckReport::new();
    let mut verdict = |sigma: Semantics, direction: &str, failure: Option<String>| {
        let status = if failure.is_some() { Status::Fail } else { Status::Pass };
        report.push(CHECK, Some(sigma), direction, status, failure);
    };
    let sat_word = if sat { "satisfiable" } else { "unsatisfiable" };

    let f = construct_sat_baf(phi);
    let co = f.extensions_bounded(Semantics::Co, MAX_CONSTRUCTION_ARGS)?;
    verdict(
        Semantics::Co,
        "sat-baf",
        (co.is_empty() == sat).then(|| format!("{sat_word} but {} complete extensions", co.len())),
    );

    let f = construct_gr_baf(phi);
    let gr = f.extensions_bounded(Semantics::Gr, MAX_CONSTRUCTION_ARGS)?;
    let expected = if sat {
        f.set_of(["top", "phi"])
    } else {
        Extension::new()
    };
    verdict(
        Semantics::Gr,
        "gr-baf",
        (gr != [expected.clone()]).then(|| {
            let got: Vec<String> = gr.iter().map(|e| f.display_set(e)).collect();
            format!("{sat_word}, expected {} got {}", f.display_set(&expected), got.join(" "))
        }),
    );

    let f = construct_skept_baf(phi);
    let co = f.extensions_bounded(Semantics::Co, MAX_CONSTRUCTION_ARGS)?;
    let neg_psi = f.arg("neg_psi");
    let skept = co.iter().all(|e| e.contains(neg_psi));
    let mut failure = (skept == sat)
        .then(|| format!("{sat_word} but neg_psi skeptically accepted: {skept}"));
    'ext: for e in &co {
        for i in 1..=n {
            let has = |name: String| e.contains(f.arg(&name));
            let one_literal = has(format!("x{i}")) != has(format!("~x{i}"));
            if !(has(format!("top_{i}")) && has(format!("d_{i}")) && one_literal) {
                failure.get_or_insert(format!(
                    "complete extension {} breaks the gadget for variable {i}",
                    f.display_set(e)
                ));
                break 'ext;
            }
        }
    }
    if !sat && failure.is_none() {
        let mut expected: Extension = (1..=n)
            .flat_map(|i| [f.arg(&format!("top_{i}")), f.arg(&format!("d_{i}"))])
            .collect();
        expected.insert(neg_psi);
        let gr = f.extensions_bounded(Semantics::Gr, MAX_CONSTRUCTION_ARGS)?;
        if gr != [expected.clone()] {
            failure = Some(format!("grounded extension is not {}", f.display_set(&expected)));
        }
    }
    verdict(Semantics::Co, "skept-baf", failure);

    let pf = construct_skept_pbaf(phi);
    let neg_psi: Extension = std::iter::once(pf.baf().arg("neg_psi")).collect();
    let skept = pf.decide_bounded(Semantics::Ad, Task::Skept, &neg_psi, MAX_CONSTRUCTION_ARGS)?;
    verdict(
        Semantics::Ad,
        "skept-pbaf",
        (skept == sat).then(|| format!("{sat_word} but neg_psi skeptically accepted: {skept}")),
    );

    Ok(report.attach(|| phi.to_dimacs()))
}

/// Which checks a fuzz run performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Correspondence,
    DefenseEq,
    Constructions,
}

impl CheckKind {
    pub const ALL: [CheckKind; 3] = [
        CheckKind::Correspondence,
        CheckKind::DefenseEq,
        CheckKind::Constructions,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Correspondence => "correspondence",
            CheckKind::DefenseEq => "defense-eq",
            CheckKind::Constructions => "constructions",
        }
    }
}

impl std::str::FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidQuery(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub count: u64,
    pub first_seed: u64,
    pub checks: Vec<CheckKind>,
    /// Semantics for correspondence checks; all five when empty.
    pub semantics: Vec<Semantics>,
    pub limits: CorpusLimits,
    pub correspondence: CorrespondenceLimits,
    pub max_baf_args: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            count: 100,
            first_seed: 0,
            checks: CheckKind::ALL.to_vec(),
            semantics: Vec::new(),
            limits: CorpusLimits::default(),
            correspondence: CorrespondenceLimits::default(),
            max_baf_args: 7,
        }
    }
}

fn fuzz_case(config: &FuzzConfig, seed: u64) -> CheckReport {
    let mut report = CheckReport::new();
    let guarded = |report: &mut CheckReport, check: &'static str, r: Result<CheckReport>| match r {
        Ok(r) => report.merge(r),
        Err(e) => report.push(check, None, "all", Status::Skipped, Some(e.to_string())),
    };
    for &check in &config.checks {
        match check {
            CheckKind::Correspondence => {
                let params = GenParams::sampled(&config.limits, seed);
                let d = match random_aba(&params) {
                    Ok(d) => d,
                    Err(e) => {
                        guarded(&mut report, check.as_str(), Err(e));
                        continue;
                    }
                };
                let all = [Semantics::Ad, Semantics::Co, Semantics::Pr, Semantics::Gr, Semantics::Stb];
                let sigmas = if config.semantics.is_empty() {
                    &all[..]
                } else {
                    &config.semantics[..]
                };
                for &sigma in sigmas {
                    report.merge(check_correspondence_with(&d, sigma, config.correspondence));
                }
            }
            CheckKind::DefenseEq => {
                let f = random_baf(&BafParams::sampled(config.max_baf_args, true, seed));
                guarded(&mut report, check.as_str(), check_defense_equivalence(&f));
            }
            CheckKind::Constructions => {
                let n_vars = 3 + (seed % 2) as usize;
                let phi = random_cnf(n_vars, 5, 3, seed);
                guarded(&mut report, check.as_str(), check_construction_lemmas(&phi));
            }
        }
    }
    report.with_seed(seed)
}

/// Runs the configured checks on `count` consecutive seeds in parallel;
/// records are ordered by seed.
pub fn run_fuzz(config: &FuzzConfig) -> CheckReport {
    let reports: Vec<CheckReport> = (config.first_seed..config.first_seed + config.count)
        .into_par_iter()
        .map(|seed| fuzz_case(config, seed))
        .collect();
    let mut out = CheckReport::new();
    for r in reports {
        out.merge(r);
    }
    out
}

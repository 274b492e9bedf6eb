//! Executable checkers for the correspondence theorems between the logical
//! encodings, the equational systems and complete semantics. Each checker
//! runs on one framework; reports aggregate over fixtures or a corpus.

mod checks;
mod fixtures;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use crate::af::ArgumentationFramework;
use crate::equational::{FunctionProperty, PropertyReport};
use crate::error::{Error, Result};
use crate::logic::{ImplicationTable, Limits, Negation, TNorm};

pub use checks::{luka_nary_sample, random_unit_rationals};
pub use fixtures::{corpus, fixtures, mutual_attack, CorpusSpec};

macro_rules! theorems {
    ($($variant:ident => $name:literal, $doc:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $(#[doc = $doc] $variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            /// Upper-case identifier, e.g. `COMPLETE_EQ_EC1_L`.
            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $doc,)*
                }
            }
        }
    };
}

theorems! {
    StableEqEc1K => "STABLE_EQ_EC1_K",
        "Stable labellings are exactly the models of ec1 in three-valued Kleene logic.";
    CompleteEqEc1L => "COMPLETE_EQ_EC1_L",
        "Complete labellings are exactly the models of ec1 in three-valued Lukasiewicz logic.";
    Ec2Pl2Fwd => "EC2_PL2_FWD",
        "Every complete labelling binarizes to a two-valued model of ec2.";
    Ec2Pl2Bwd => "EC2_PL2_BWD",
        "Every two-valued model of ec2 ternarizes to a complete labelling.";
    Ec2KFwd => "EC2_K_FWD",
        "Every complete labelling binarizes to a Kleene model of ec2.";
    Ec2KBwd => "EC2_K_BWD",
        "Every Kleene model of ec2 ternarizes to a complete labelling.";
    Ec2LFwd => "EC2_L_FWD",
        "Every complete labelling is a Lukasiewicz model of ec2.";
    Ec2LTcom => "EC2_L_TCOM",
        "Every Lukasiewicz model of ec2 binarizes to a two-valued model of ec2 and ternarizes to a complete labelling.";
    Ec2LCounterexample => "EC2_L_COUNTEREXAMPLE",
        "On a <-> b, the assignment (a=1/2, b=0) is a Lukasiewicz model of ec2 but not a complete labelling.";
    EqEc1Iff => "EQ_EC1_IFF",
        "An assignment is a fuzzy model of ec1 iff it solves the encoded equational system.";
    EqmaxIsG => "EQMAX_IS_G",
        "The Goedel encoded system and the max system have the same solutions.";
    EqinvIsP => "EQINV_IS_P",
        "The product encoded system and the inverse system have the same solutions.";
    EqlIsL => "EQL_IS_L",
        "The Lukasiewicz encoded system and the closed-form Lukasiewicz system have the same solutions.";
    LukaNary => "LUKA_NARY",
        "The n-ary Lukasiewicz t-norm is max(0, sum - (n - 1)).";
    HMonotone => "H_MONOTONE",
        "Encoded update functions are decreasing in each argument.";
    HBoundarySym => "H_BOUNDARY_SYM",
        "Encoded update functions map all-zero to 1, vanish when an input is 1, and are symmetric.";
    ZdfTcomComplete => "ZDF_TCOM_COMPLETE",
        "With a zero-divisor-free t-norm and standard negation, every solution ternarizes to a complete labelling.";
    IdemEmbed => "IDEM_EMBED",
        "With a 1/2-idempotent t-norm and standard negation, every complete labelling is a solution.";
    CompleteFuzzySetEq => "COMPLETE_FUZZY_SET_EQ",
        "Complete labellings are exactly the ternarized solutions of the Goedel encoded system.";
    TcomFixesComplete => "TCOM_FIXES_COMPLETE",
        "Ternarization fixes complete labellings; grounded is unique and least; stable labellings are preferred.";
}

impl TheoremId {
    /// Lower-case, dash-separated identifier, e.g. `complete-eq-ec1-l`.
    pub fn cli_name(self) -> String {
        self.as_str().to_ascii_lowercase().replace('_', "-")
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyParams {
    /// Grid resolution for fuzzy checks.
    pub grid_k: u32,
    /// Largest grid swept per check; on larger frameworks the resolution is
    /// lowered until the grid fits, never below 2.
    pub grid_budget: u128,
    /// T-norms for the fuzzy checkers; `None` picks each checker's default.
    pub tnorms: Option<Vec<TNorm>>,
    pub negation: Negation,
    /// Implication table used wherever three-valued Lukasiewicz logic is.
    pub pl3l_table: ImplicationTable,
    pub limits: Limits,
    /// Random tuples per in-degree for the n-ary Lukasiewicz check.
    pub luka_samples: usize,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            grid_k: 4,
            grid_budget: 20_000,
            tnorms: None,
            negation: Negation::Standard,
            pl3l_table: ImplicationTable::LUKASIEWICZ,
            limits: Limits::default(),
            luka_samples: 20,
            seed: 7,
        }
    }
}

impl VerifyParams {
    /// Largest resolution `≤ grid_k` whose grid over `n` arguments fits the
    /// budget, at least 2. With `even`, only even resolutions are considered.
    pub fn effective_k(&self, n: usize, even: bool) -> u32 {
        let step = if even { 2 } else { 1 };
        let mut k = if even { (self.grid_k / 2 * 2).max(2) } else { self.grid_k.max(2) };
        while k > 2 && crate::logic::grid_size(k, n) > self.grid_budget {
            k -= step;
        }
        k.max(2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    /// The framework, as `{"arguments": [...], "attacks": [[a, b], ...]}`.
    pub af: Value,
    pub witnesses: Vec<Value>,
    /// Which part of the statement failed.
    pub clause: String,
}

impl Counterexample {
    pub fn to_json(&self) -> Value {
        json!({ "af": self.af, "witnesses": self.witnesses, "clause": self.clause })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub instances_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
    /// `exhaustive`, `grid-complete` or `sampled`.
    pub coverage: String,
    pub metadata: Map<String, Value>,
}

impl VerificationReport {
    fn new(theorem: TheoremId, coverage: &str) -> Self {
        VerificationReport {
            theorem,
            instances_checked: 0,
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
            coverage: coverage.to_string(),
            metadata: Map::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Folds another report for the same theorem into this one. Resolutions
    /// listed under `grid_k` are unioned; other metadata keeps the first value.
    pub fn merge(&mut self, other: VerificationReport) {
        debug_assert_eq!(self.theorem, other.theorem);
        self.instances_checked += other.instances_checked;
        self.counterexamples.extend(other.counterexamples);
        self.elapsed += other.elapsed;
        for (key, value) in other.metadata {
            match (self.metadata.get_mut(&key), key.as_str()) {
                (Some(Value::Array(ks)), "grid_k") => {
                    for k in value.as_array().into_iter().flatten() {
                        if !ks.contains(k) {
                            ks.push(k.clone());
                        }
                    }
                    ks.sort_by_key(|k| k.as_u64());
                }
                (Some(_), _) => {}
                (None, _) => {
                    self.metadata.insert(key, value);
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theorem": self.theorem.as_str(),
            "instances": self.instances_checked,
            "pass": self.passed(),
            "counterexamples": self.counterexamples.iter().map(Counterexample::to_json).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "coverage": self.coverage,
            "metadata": self.metadata,
        })
    }
}

/// Runs checkers with shared parameters, caching update-function property
/// checks across frameworks.
pub struct Verifier {
    params: VerifyParams,
    property_cache: HashMap<(FunctionProperty, String, usize, u32), PropertyReport>,
}

impl Verifier {
    pub fn new(params: VerifyParams) -> Self {
        Verifier {
            params,
            property_cache: HashMap::new(),
        }
    }

    pub fn params(&self) -> &VerifyParams {
        &self.params
    }

    pub fn check(&mut self, id: TheoremId, af: &ArgumentationFramework) -> Result<VerificationReport> {
        let start = Instant::now();
        let mut report = checks::run(self, id, af)?;
        report.elapsed = start.elapsed();
        Ok(report)
    }

    /// One aggregated report per theorem, in the order of `ids`.
    pub fn check_all(&mut self, ids: &[TheoremId], afs: &[ArgumentationFramework]) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::with_capacity(ids.len());
        for &id in ids {
            let mut agg = VerificationReport::new(id, "");
            let mut first = true;
            for af in afs {
                let r = self.check(id, af)?;
                if first {
                    agg.coverage = r.coverage.clone();
                    first = false;
                }
                agg.merge(r);
            }
            out.push(agg);
        }
        Ok(out)
    }
}

/// Checks one theorem on one framework.
pub fn verify_theorem(id: TheoremId, af: &ArgumentationFramework, params: &VerifyParams) -> Result<VerificationReport> {
    Verifier::new(params.clone()).check(id, af)
}

/// Checks the theorems on the eight fixtures.
pub fn verify_fixtures(ids: &[TheoremId], params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let afs: Vec<ArgumentationFramework> = fixtures().into_iter().map(|(_, af)| af).collect();
    Verifier::new(params.clone()).check_all(ids, &afs)
}

/// Checks the theorems on a seeded random corpus. Deterministic for fixed inputs
/// apart from the elapsed times.
pub fn verify_corpus(ids: &[TheoremId], spec: &CorpusSpec, params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    if ids.is_empty() {
        return Ok(Vec::new());
    }
    Verifier::new(params.clone()).check_all(ids, &corpus(spec))
}

//! Per-framework checkers.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{Counterexample, TheoremId, VerificationReport, Verifier, VerifyParams};
use crate::af::ArgumentationFramework;
use crate::equational::{
    check_function_property, grid_solutions, luka_nary, satisfies, EquationalSystem, FunctionProperty, PropertyReport,
    PropertyVerdict,
};
use crate::error::{Error, Result};
use crate::formula::{encode_normal, encode_regular};
use crate::logic::{
    enumerate_models, evaluate, evaluate_on_grid, for_each_grid_assignment, is_model, Assignment, ImplicationTable,
    LogicSystem, Negation, TNorm, TruthValue,
};
use crate::semantics::{binarize, dung_labellings, is_complete_labelling, ternarize, SemanticsName};

struct Run<'a> {
    af: &'a ArgumentationFramework,
    report: VerificationReport,
}

impl<'a> Run<'a> {
    fn new(af: &'a ArgumentationFramework, id: TheoremId, coverage: &str) -> Self {
        Run {
            af,
            report: VerificationReport::new(id, coverage),
        }
    }

    fn fail(&mut self, witnesses: &[&Assignment], clause: impl Into<String>) {
        self.report.counterexamples.push(Counterexample {
            af: self.af.to_json(),
            witnesses: witnesses.iter().map(|w| w.to_json(self.af)).collect(),
            clause: clause.into(),
        });
    }

    fn count(&mut self, n: usize) {
        self.report.instances_checked += n as u64;
    }

    fn meta(&mut self, key: &str, value: Value) {
        self.report.metadata.insert(key.to_string(), value);
    }
}

fn pl3l(params: &VerifyParams) -> LogicSystem {
    if params.pl3l_table == ImplicationTable::LUKASIEWICZ {
        LogicSystem::Pl3L
    } else {
        LogicSystem::Pl3Custom(params.pl3l_table)
    }
}

fn is_zero_divisor_free(t: &TNorm, k: u32) -> bool {
    match t {
        TNorm::Goedel | TNorm::Product => true,
        TNorm::Lukasiewicz => false,
        TNorm::User(_) => check_function_property(
            &EquationalSystem::encoded(Negation::Standard, t.clone()),
            FunctionProperty::ZeroDivisorFreeTNorm,
            2,
            k,
        )
        .passed(),
    }
}

fn is_half_idempotent(t: &TNorm) -> bool {
    let h = TruthValue::half();
    t.apply(&h, &h) == h
}

fn tnorm_names(ts: &[TNorm]) -> Value {
    json!(ts.iter().map(|t| t.name().to_string()).collect::<Vec<_>>())
}

/// Checks the t-norm selection for a checker with preconditions on the
/// t-norm and on the negation.
fn restricted_tnorms(
    params: &VerifyParams,
    id: TheoremId,
    default: Vec<TNorm>,
    qualifies: impl Fn(&TNorm) -> bool,
    requirement: &str,
) -> Result<Vec<TNorm>> {
    if params.negation != Negation::Standard {
        return Err(Error::UnsupportedConfiguration(format!(
            "{id} is only checked with the standard negation, got {}",
            params.negation
        )));
    }
    let chosen = params.tnorms.clone().unwrap_or(default);
    if let Some(bad) = chosen.iter().find(|t| !qualifies(t)) {
        return Err(Error::UnsupportedConfiguration(format!(
            "{id} needs {requirement} t-norms; `{}` is not one",
            bad.name()
        )));
    }
    Ok(chosen)
}

pub(super) fn run(v: &mut Verifier, id: TheoremId, af: &ArgumentationFramework) -> Result<VerificationReport> {
    let params = v.params.clone();
    let lim = &params.limits;
    let complete = || dung_labellings(af, SemanticsName::Complete, lim);
    let assignments3 = 3usize.saturating_pow(af.len() as u32);
    let mut run = Run::new(af, id, "exhaustive");

    match id {
        TheoremId::StableEqEc1K | TheoremId::CompleteEqEc1L => {
            let (sem, ls, name) = if id == TheoremId::StableEqEc1K {
                (SemanticsName::Stable, LogicSystem::Pl3K, "Kleene")
            } else {
                (SemanticsName::Complete, pl3l(&params), "Lukasiewicz")
            };
            let labs: BTreeSet<Assignment> = dung_labellings(af, sem, lim)?.into_iter().collect();
            let models: BTreeSet<Assignment> = enumerate_models(&encode_normal(af), af, &ls, lim)?.into_iter().collect();
            run.count(assignments3);
            for w in labs.difference(&models) {
                run.fail(&[w], format!("{sem} labelling that is not a {name} model of ec1"));
            }
            for w in models.difference(&labs) {
                run.fail(&[w], format!("{name} model of ec1 that is not a {sem} labelling"));
            }
        }

        TheoremId::Ec2Pl2Fwd | TheoremId::Ec2KFwd | TheoremId::Ec2LFwd => {
            let f = encode_regular(af);
            let labs = complete()?;
            run.count(labs.len());
            for lab in &labs {
                let (target, ls, name) = match id {
                    TheoremId::Ec2Pl2Fwd => (binarize(lab), LogicSystem::Pl2, "binarized labelling is not a two-valued model of ec2"),
                    TheoremId::Ec2KFwd => (binarize(lab), LogicSystem::Pl3K, "binarized labelling is not a Kleene model of ec2"),
                    _ => (lab.clone(), pl3l(&params), "complete labelling is not a Lukasiewicz model of ec2"),
                };
                if !is_model(&f, &target, &ls)? {
                    run.fail(&[lab, &target], name);
                }
            }
        }

        TheoremId::Ec2Pl2Bwd | TheoremId::Ec2KBwd | TheoremId::Ec2LTcom => {
            let f = encode_regular(af);
            let ls = match id {
                TheoremId::Ec2Pl2Bwd => LogicSystem::Pl2,
                TheoremId::Ec2KBwd => LogicSystem::Pl3K,
                _ => pl3l(&params),
            };
            let models = enumerate_models(&f, af, &ls, lim)?;
            run.count(models.len());
            for m in &models {
                if id == TheoremId::Ec2LTcom {
                    let b = binarize(m);
                    if !is_model(&f, &b, &LogicSystem::Pl2)? {
                        run.fail(&[m, &b], "binarized model is not a two-valued model of ec2");
                    }
                    if ternarize(af, &b).ok() != ternarize(af, m).ok() {
                        run.fail(&[m, &b], "ternarizing the binarized model gives a different labelling");
                    }
                }
                match ternarize(af, m) {
                    Ok(t) if is_complete_labelling(af, &t) => {}
                    Ok(t) => run.fail(&[m, &t], "ternarized model is not a complete labelling"),
                    Err(e) => run.fail(&[m], format!("ternarization undefined: {e}")),
                }
            }
        }

        TheoremId::Ec2LCounterexample => {
            let m = super::mutual_attack();
            let w = Assignment::parse(&["1/2", "0"])?;
            let value = evaluate(&encode_regular(&m), &w, &pl3l(&params))?;
            let complete = is_complete_labelling(&m, &w);
            run.count(1);
            run.meta("af", m.to_json());
            run.meta("assignment", w.to_json(&m));
            run.meta("ec2_value", json!(value.to_string()));
            run.meta("complete", json!(complete));
            let mut fail = |clause: &str| {
                run.report.counterexamples.push(Counterexample {
                    af: m.to_json(),
                    witnesses: vec![w.to_json(&m)],
                    clause: clause.to_string(),
                })
            };
            if !value.is_one() {
                fail("assignment is not a Lukasiewicz model of ec2");
            }
            if complete {
                fail("assignment is a complete labelling");
            }
        }

        TheoremId::EqEc1Iff => {
            run.report.coverage = "grid-complete".into();
            let k = params.effective_k(af.len(), false);
            lim.check_grid(k, af.len())?;
            let tnorms = params.tnorms.clone().unwrap_or_else(|| TNorm::named().to_vec());
            run.meta("grid_k", json!([k]));
            run.meta("tnorms", tnorm_names(&tnorms));
            run.meta("negation", json!(params.negation.to_string()));
            let f = encode_normal(af);
            for t in &tnorms {
                let ls = LogicSystem::fuzzy(params.negation.clone(), t.clone());
                let sys = EquationalSystem::encoded(params.negation.clone(), t.clone());
                for_each_grid_assignment(af.len(), k, |v| {
                    run.count(1);
                    let model = evaluate_on_grid(&f, v, &ls, k)?.is_one();
                    let solution = satisfies(&sys, af, v)?;
                    if model != solution {
                        run.fail(
                            &[v],
                            format!("t-norm {t}: fuzzy model of ec1 = {model}, solution of {sys} = {solution}"),
                        );
                    }
                    Ok(())
                })?;
            }
        }

        TheoremId::EqmaxIsG | TheoremId::EqinvIsP | TheoremId::EqlIsL => {
            run.report.coverage = "grid-complete".into();
            let (t, named) = match id {
                TheoremId::EqmaxIsG => (TNorm::Goedel, EquationalSystem::Max),
                TheoremId::EqinvIsP => (TNorm::Product, EquationalSystem::Inverse),
                _ => (TNorm::Lukasiewicz, EquationalSystem::LukaClosed),
            };
            let encoded = EquationalSystem::encoded(Negation::Standard, t);
            let k = params.effective_k(af.len(), false);
            lim.check_grid(k, af.len())?;
            run.meta("grid_k", json!([k]));
            for_each_grid_assignment(af.len(), k, |v| {
                run.count(1);
                let (x, y) = (satisfies(&encoded, af, v)?, satisfies(&named, af, v)?);
                if x != y {
                    run.fail(&[v], format!("{encoded} says {x}, {named} says {y}"));
                }
                Ok(())
            })?;
        }

        TheoremId::LukaNary => {
            run.report.coverage = "sampled".into();
            let encoded = EquationalSystem::encoded(Negation::Standard, TNorm::Lukasiewicz);
            let degrees: BTreeSet<usize> = (0..af.len()).map(|a| af.attackers(a).len()).filter(|&d| d > 0).collect();
            for d in degrees {
                let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ (d as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                for _ in 0..params.luka_samples {
                    let xs = random_unit_rationals(&mut rng, d);
                    run.count(1);
                    let closed = luka_nary(&xs);
                    let folded = TNorm::Lukasiewicz.fold(&xs);
                    let enc = encoded.h(&xs).expect("defined");
                    let named = EquationalSystem::LukaClosed.h(&xs).expect("defined");
                    if closed != folded || enc != named {
                        let w = Assignment::new(xs);
                        run.fail(
                            &[],
                            format!("inputs {w:?}: closed form {closed}, fold {folded}, encoded {enc}, closed system {named}"),
                        );
                    }
                }
            }
        }

        TheoremId::HMonotone | TheoremId::HBoundarySym => {
            run.report.coverage = "grid-complete".into();
            let props: &[FunctionProperty] = if id == TheoremId::HMonotone {
                &[FunctionProperty::DecreasingMonotonicity]
            } else {
                &[
                    FunctionProperty::BoundaryZeroToOne,
                    FunctionProperty::BoundaryOneKills,
                    FunctionProperty::Symmetry,
                ]
            };
            let tnorms = params.tnorms.clone().unwrap_or_else(|| TNorm::named().to_vec());
            run.meta("tnorms", tnorm_names(&tnorms));
            let degrees: BTreeSet<usize> = (0..af.len()).map(|a| af.attackers(a).len()).filter(|&d| d > 0).collect();
            let mut ks = BTreeSet::new();
            for d in degrees {
                let k = params.effective_k(d, false);
                ks.insert(k);
                for t in &tnorms {
                    let sys = EquationalSystem::encoded(params.negation.clone(), t.clone());
                    for &prop in props {
                        let r = v.property(&sys, prop, d, k);
                        run.report.instances_checked += r.points_checked;
                        if let PropertyVerdict::Counterexample { inputs, detail } = &r.verdict {
                            let w = Assignment::new(inputs.clone());
                            run.report.counterexamples.push(Counterexample {
                                af: af.to_json(),
                                witnesses: vec![json!(w.values().iter().map(|x| x.to_string()).collect::<Vec<_>>())],
                                clause: format!("{sys}, arity {d}: {prop} fails: {detail}"),
                            });
                        }
                    }
                }
            }
            run.meta("grid_k", json!(ks));
        }

        TheoremId::ZdfTcomComplete => {
            run.report.coverage = "grid-complete".into();
            let tnorms = restricted_tnorms(
                &params,
                id,
                vec![TNorm::Goedel, TNorm::Product],
                |t| is_zero_divisor_free(t, params.grid_k.max(2)),
                "zero-divisor-free",
            )?;
            let k = params.effective_k(af.len(), false);
            run.meta("grid_k", json!([k]));
            run.meta("tnorms", tnorm_names(&tnorms));
            run.meta("precondition_checked", json!("zero-divisor-free t-norm"));
            run.meta("precondition_in_statement", json!("1/2-idempotent t-norm"));
            run.meta("precondition_in_proof", json!("zero-divisor-free t-norm"));
            run.meta(
                "negation",
                json!("standard only: the argument needs N(x) = 0 to force x = 1"),
            );
            for t in tnorms {
                let sys = EquationalSystem::encoded(Negation::Standard, t);
                let sols = grid_solutions(&sys, af, k, lim)?;
                run.count(sols.len());
                for m in &sols {
                    match ternarize(af, m) {
                        Ok(lab) if is_complete_labelling(af, &lab) => {}
                        Ok(lab) => run.fail(&[m, &lab], format!("{sys}: ternarized solution is not complete")),
                        Err(e) => run.fail(&[m], format!("{sys}: ternarization undefined: {e}")),
                    }
                }
            }
        }

        TheoremId::IdemEmbed => {
            let tnorms = restricted_tnorms(&params, id, vec![TNorm::Goedel], is_half_idempotent, "1/2-idempotent")?;
            run.meta("tnorms", tnorm_names(&tnorms));
            let labs = complete()?;
            for t in tnorms {
                let sys = EquationalSystem::encoded(Negation::Standard, t);
                run.count(labs.len());
                for lab in &labs {
                    if !satisfies(&sys, af, lab)? {
                        run.fail(&[lab], format!("complete labelling does not solve {sys}"));
                    }
                }
            }
        }

        TheoremId::CompleteFuzzySetEq => {
            run.report.coverage = "grid-complete".into();
            let tnorms = restricted_tnorms(
                &params,
                id,
                vec![TNorm::Goedel],
                |t| is_half_idempotent(t) && is_zero_divisor_free(t, params.grid_k.max(2)),
                "1/2-idempotent, zero-divisor-free",
            )?;
            let k = params.effective_k(af.len(), true);
            run.meta("grid_k", json!([k]));
            run.meta("tnorms", tnorm_names(&tnorms));
            let labs: BTreeSet<Assignment> = complete()?.into_iter().collect();
            for t in tnorms {
                let sys = EquationalSystem::encoded(Negation::Standard, t);
                let sols = grid_solutions(&sys, af, k, lim)?;
                run.count(sols.len() + labs.len());
                let sol_set: BTreeSet<&Assignment> = sols.iter().collect();
                for lab in &labs {
                    if !sol_set.contains(lab) {
                        run.fail(&[lab], format!("complete labelling is not a grid solution of {sys}"));
                    }
                }
                for m in &sols {
                    match ternarize(af, m) {
                        Ok(lab) if labs.contains(&lab) => {}
                        Ok(lab) => run.fail(&[m, &lab], format!("{sys}: ternarized solution is not complete")),
                        Err(e) => run.fail(&[m], format!("{sys}: ternarization undefined: {e}")),
                    }
                }
            }
        }

        TheoremId::TcomFixesComplete => {
            let labs = complete()?;
            run.count(labs.len());
            for lab in &labs {
                match ternarize(af, lab) {
                    Ok(t) if &t == lab => {}
                    Ok(t) => run.fail(&[lab, &t], "ternarization moves a complete labelling"),
                    Err(e) => run.fail(&[lab], format!("ternarization undefined on a complete labelling: {e}")),
                }
                let b = binarize(lab);
                if binarize(&b) != b {
                    run.fail(&[lab], "binarization is not idempotent");
                }
            }
            let ones = |l: &Assignment| -> Vec<bool> { l.values().iter().map(TruthValue::is_one).collect() };
            let grounded = dung_labellings(af, SemanticsName::Grounded, lim)?;
            if grounded.len() != 1 {
                let ws: Vec<&Assignment> = grounded.iter().collect();
                run.fail(&ws, format!("{} grounded labellings", grounded.len()));
            } else {
                let g = ones(&grounded[0]);
                for lab in &labs {
                    if !g.iter().zip(ones(lab)).all(|(&x, y)| !x || y) {
                        run.fail(&[&grounded[0], lab], "grounded extension is not contained in a complete extension");
                    }
                }
            }
            let preferred: BTreeSet<Assignment> = dung_labellings(af, SemanticsName::Preferred, lim)?.into_iter().collect();
            for s in dung_labellings(af, SemanticsName::Stable, lim)? {
                if !preferred.contains(&s) {
                    run.fail(&[&s], "stable labelling is not preferred");
                }
            }
            let extensions: BTreeSet<Vec<bool>> = labs.iter().map(ones).collect();
            if extensions.len() != labs.len() {
                run.fail(&[], "two complete labellings share an extension");
            }
        }
    }
    Ok(run.report)
}

impl Verifier {
    fn property(&mut self, sys: &EquationalSystem, prop: FunctionProperty, arity: usize, k: u32) -> PropertyReport {
        self.property_cache
            .entry((prop, sys.to_string(), arity, k))
            .or_insert_with(|| check_function_property(sys, prop, arity, k))
            .clone()
    }
}

/// `arity` rationals in `[0,1]` with denominators up to 1000.
pub fn random_unit_rationals(rng: &mut impl Rng, arity: usize) -> Vec<TruthValue> {
    (0..arity)
        .map(|_| {
            let d: i128 = rng.random_range(1..=1000);
            let n: i128 = rng.random_range(0..=d);
            TruthValue::new(n, d).expect("n <= d")
        })
        .collect()
}

/// Compares the closed-form n-ary Lukasiewicz t-norm with the binary fold on
/// `count` seeded random tuples of arity `min_arity..=max_arity`.
pub fn luka_nary_sample(seed: u64, count: usize, min_arity: usize, max_arity: usize) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport::new(TheoremId::LukaNary, "sampled");
    let start = std::time::Instant::now();
    for _ in 0..count {
        let arity = rng.random_range(min_arity..=max_arity);
        let xs = random_unit_rationals(&mut rng, arity);
        report.instances_checked += 1;
        let (closed, folded) = (luka_nary(&xs), TNorm::Lukasiewicz.fold(&xs));
        if closed != folded {
            report.counterexamples.push(Counterexample {
                af: Value::Null,
                witnesses: vec![json!(xs.iter().map(|x| x.to_string()).collect::<Vec<_>>())],
                clause: format!("closed form {closed}, fold {folded}"),
            });
        }
    }
    report.metadata.insert("seed".into(), json!(seed));
    report.metadata.insert("arity".into(), json!([min_arity, max_arity]));
    report.elapsed = start.elapsed();
    report
}

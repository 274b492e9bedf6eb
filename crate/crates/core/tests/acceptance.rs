//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use arglogic::equational::{
    check_function_property, grid_solutions, satisfies, EquationalSystem, FunctionProperty, PropertyVerdict,
};
use arglogic::logic::three::HALF;
use arglogic::logic::{enumerate_models, evaluate, evaluate_on_grid, ImplicationTable, LogicSystem};
use arglogic::semantics::{binarize, dung_labellings, is_complete_labelling, ternarize};
use arglogic::verify::{corpus, fixtures, luka_nary_sample, mutual_attack, verify_corpus, verify_theorem, CorpusSpec};
use arglogic::{
    encode_normal, encode_regular, Assignment, ArgumentationFramework, Limits, Negation, SemanticsName, TNorm, TheoremId,
    TruthValue, VerifyParams,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Complete labellings by direct brute force over `{0,1,2}^n` (half-units),
/// written against the attack list only.
fn oracle_complete(af: &ArgumentationFramework) -> BTreeSet<Assignment> {
    let n = af.len();
    let attacks: Vec<(usize, usize)> = af.attacks().collect();
    let mut out = BTreeSet::new();
    for code in 0..3usize.pow(n as u32) {
        let lab: Vec<usize> = (0..n).map(|i| code / 3usize.pow((n - 1 - i) as u32) % 3).collect();
        let ok = (0..n).all(|a| {
            let att: Vec<usize> = attacks.iter().filter(|e| e.1 == a).map(|e| lab[e.0]).collect();
            let want = if att.contains(&2) {
                0
            } else if att.iter().all(|&x| x == 0) {
                2
            } else {
                1
            };
            lab[a] == want
        });
        if ok {
            out.insert(Assignment::new(lab.iter().map(|&x| TruthValue::grid(x as u32, 2)).collect()));
        }
    }
    out
}

fn set(v: Vec<Assignment>) -> BTreeSet<Assignment> {
    v.into_iter().collect()
}

fn small_fixtures(max: usize) -> Vec<(&'static str, ArgumentationFramework)> {
    fixtures().into_iter().filter(|(_, af)| af.len() <= max).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let reports = verify_corpus(TheoremId::ALL, &CorpusSpec::default(), &VerifyParams::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} ({} counterexamples)", r.theorem, r.counterexamples.len()))
        .collect();
    ensure(failing.is_empty(), || format!("failing theorems: {}", failing.join(", ")))?;
    ensure(reports.len() == 20, || format!("{} reports", reports.len()))?;
    ensure(elapsed <= Duration::from_secs(120), || format!("took {:.1} s > 120 s", elapsed.as_secs_f64()))?;
    let instances: u64 = reports.iter().map(|r| r.instances_checked).sum();
    Ok(format!("20 theorems x 200 frameworks, {instances} instances, {:.1} s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let lim = Limits::default();
    for (name, af) in fixtures() {
        let oracle = oracle_complete(&af);
        let oracle_stable: BTreeSet<Assignment> =
            oracle.iter().filter(|l| !l.values().iter().any(TruthValue::is_half)).cloned().collect();
        let ec1 = encode_normal(&af);
        let k = set(enumerate_models(&ec1, &af, &LogicSystem::Pl3K, &lim).unwrap());
        let l = set(enumerate_models(&ec1, &af, &LogicSystem::Pl3L, &lim).unwrap());
        let stable = set(dung_labellings(&af, SemanticsName::Stable, &lim).unwrap());
        let complete = set(dung_labellings(&af, SemanticsName::Complete, &lim).unwrap());
        ensure(stable == oracle_stable && k == oracle_stable, || format!("{name}: stable/Kleene mismatch"))?;
        ensure(complete == oracle && l == oracle, || format!("{name}: complete/Lukasiewicz mismatch"))?;
    }
    let m = mutual_attack();
    let ec1 = encode_normal(&m);
    let nk = enumerate_models(&ec1, &m, &LogicSystem::Pl3K, &lim).unwrap().len();
    let nl = enumerate_models(&ec1, &m, &LogicSystem::Pl3L, &lim).unwrap().len();
    ensure((nk, nl) == (2, 3), || format!("mutual attack counts {nk}, {nl}"))?;
    Ok("8 fixtures match the brute-force oracle; mutual attack: 2 stable, 3 complete".into())
}

fn criterion_3() -> Outcome {
    let m = mutual_attack();
    let w = Assignment::parse(&["1/2", "0"]).unwrap();
    let v = evaluate(&encode_regular(&m), &w, &LogicSystem::Pl3L).unwrap();
    ensure(v == TruthValue::one(), || format!("ec2 evaluates to {v}"))?;
    ensure(!is_complete_labelling(&m, &w), || "(1/2, 0) is complete".into())?;
    ensure(!oracle_complete(&m).contains(&w), || "oracle says complete".into())?;
    Ok("ec2(a<->b) at (a=1/2, b=0) is exactly 1 in Lukasiewicz logic; not complete".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut afs: Vec<ArgumentationFramework> = small_fixtures(3).into_iter().map(|(_, af)| af).collect();
    // Every framework on {a, b}, self-attacks included.
    let pairs = [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")];
    for mask in 0..16 {
        let attacks: Vec<(&str, &str)> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        afs.push(ArgumentationFramework::new(&["a", "b"], &attacks).unwrap());
    }
    let mut checked = 0u64;
    let k = 4;
    for af in &afs {
        let f = encode_normal(af);
        for t in TNorm::named() {
            let ls = LogicSystem::fuzzy(Negation::Standard, t.clone());
            let sys = EquationalSystem::encoded(Negation::Standard, t.clone());
            for code in 0..(k + 1u32).pow(af.len() as u32) {
                let vals: Vec<TruthValue> =
                    (0..af.len()).map(|i| TruthValue::grid(code / (k + 1).pow(i as u32) % (k + 1), k)).collect();
                let v = Assignment::new(vals);
                let model = evaluate_on_grid(&f, &v, &ls, k).unwrap().is_one();
                let sol = satisfies(&sys, af, &v).unwrap();
                ensure(model == sol, || format!("{af:?} {t} {}: model {model}, solution {sol}", v.display(af)))?;
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(10), || format!("took {:.1} s > 10 s", elapsed.as_secs_f64()))?;
    Ok(format!("{} frameworks, {checked} assignment/t-norm pairs, 0 mismatches, {:.2} s", afs.len(), elapsed.as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let params = VerifyParams::default();
    let mut points = 0;
    for (name, af) in small_fixtures(4) {
        ensure(params.effective_k(af.len(), false) == 4, || format!("{name}: grid lowered"))?;
        for id in [TheoremId::EqmaxIsG, TheoremId::EqinvIsP, TheoremId::EqlIsL] {
            let r = verify_theorem(id, &af, &params).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{id} on {name}: {:?}", r.counterexamples))?;
            ensure(r.instances_checked == 5u64.pow(af.len() as u32), || format!("{id} on {name}: grid not exhaustive"))?;
            points += r.instances_checked;
        }
    }
    Ok(format!("Goedel=max, product=inverse, Lukasiewicz=closed form on {points} grid points, 0 mismatches"))
}

fn criterion_6() -> Outcome {
    let r = luka_nary_sample(6, 10_000, 2, 6);
    ensure(r.passed(), || format!("{:?}", r.counterexamples.first()))?;
    ensure(r.instances_checked == 10_000, || format!("{} tuples", r.instances_checked))?;
    Ok("10000 random rational tuples of arity 2..6, exact equality".into())
}

fn criterion_7() -> Outcome {
    let props = [
        FunctionProperty::DecreasingMonotonicity,
        FunctionProperty::BoundaryZeroToOne,
        FunctionProperty::BoundaryOneKills,
        FunctionProperty::Symmetry,
    ];
    for t in TNorm::named() {
        let sys = EquationalSystem::encoded(Negation::Standard, t);
        for arity in 1..=4 {
            for prop in props {
                let r = check_function_property(&sys, prop, arity, 4);
                ensure(r.passed(), || format!("{sys} arity {arity}: {:?}", r.verdict))?;
                ensure(r.points_checked == 5u64.pow(arity as u32), || format!("{sys} {prop}: not exhaustive"))?;
            }
        }
    }
    for arity in 1..=4 {
        let r = check_function_property(&EquationalSystem::Geometrical, FunctionProperty::DecreasingMonotonicity, arity, 4);
        ensure(r.passed(), || format!("geometrical arity {arity}: {:?}", r.verdict))?;
    }
    let luka = EquationalSystem::encoded(Negation::Standard, TNorm::Lukasiewicz);
    let zdf = check_function_property(&luka, FunctionProperty::ZeroDivisorFreeTNorm, 2, 2);
    let half = TruthValue::half();
    match &zdf.verdict {
        PropertyVerdict::Counterexample { inputs, .. } if *inputs == [half.clone(), half.clone()] => {}
        other => return Err(format!("Lukasiewicz zero-divisor witness: {other:?}")),
    }
    ensure(TNorm::Lukasiewicz.apply(&half, &half).is_zero(), || "T(1/2,1/2) != 0".into())?;
    let goedel = EquationalSystem::encoded(Negation::Standard, TNorm::Goedel);
    for prop in [FunctionProperty::HalfIdempotentTNorm, FunctionProperty::ZeroDivisorFreeTNorm] {
        ensure(check_function_property(&goedel, prop, 2, 4).passed(), || format!("Goedel fails {prop}"))?;
    }
    Ok("monotone, boundary, symmetric (3 t-norms, arity 1..4, k=4); geometrical monotone; Lukasiewicz T(1/2,1/2)=0; Goedel idempotent and zero-divisor-free".into())
}

fn criterion_8() -> Outcome {
    let lim = Limits::default();
    let sys = EquationalSystem::encoded(Negation::Standard, TNorm::Goedel);
    let mut n = 0;
    for (name, af) in small_fixtures(3) {
        let oracle = oracle_complete(&af);
        for k in [2, 4, 6] {
            let sols = grid_solutions(&sys, &af, k, &lim).map_err(|e| e.to_string())?;
            let image: BTreeSet<Assignment> = sols
                .iter()
                .map(|m| ternarize(&af, m))
                .collect::<Result<_, _>>()
                .map_err(|e| format!("{name}: {e}"))?;
            ensure(image.is_subset(&oracle), || format!("{name}, k={k}: ternarized solution not complete"))?;
            ensure(oracle.is_subset(&image), || format!("{name}, k={k}: complete labelling missed"))?;
            n += 1;
        }
    }
    Ok(format!("both inclusions exact on {n} fixture/resolution pairs (k = 2, 4, 6)"))
}

fn criterion_9() -> Outcome {
    let mutated = VerifyParams {
        pl3l_table: ImplicationTable::LUKASIEWICZ.with_cell(HALF, HALF, HALF),
        ..VerifyParams::default()
    };
    let r = verify_theorem(TheoremId::CompleteEqEc1L, &mutual_attack(), &mutated).map_err(|e| e.to_string())?;
    ensure(!r.passed(), || "mutated table went unnoticed".into())?;
    let clean = verify_theorem(TheoremId::CompleteEqEc1L, &mutual_attack(), &VerifyParams::default()).unwrap();
    ensure(clean.passed(), || "unmutated table fails".into())?;
    Ok(format!("mutated cell (1/2 -> 1/2) = 1/2 yields {} counterexample(s): {}", r.counterexamples.len(), r.counterexamples[0].clause))
}

fn criterion_10() -> Outcome {
    let lim = Limits::default();
    let (mut fwd, mut bwd) = (0, 0);
    for af in corpus(&CorpusSpec::default()) {
        let ec2 = encode_regular(&af);
        let oracle = oracle_complete(&af);
        for m in enumerate_models(&ec2, &af, &LogicSystem::Pl2, &lim).unwrap() {
            let t = ternarize(&af, &m).map_err(|e| format!("{af:?}: {e}"))?;
            ensure(oracle.contains(&t), || format!("{af:?}: {} ternarizes to a non-complete labelling", m.display(&af)))?;
            bwd += 1;
        }
        for lab in &oracle {
            let b = binarize(lab);
            ensure(evaluate(&ec2, &b, &LogicSystem::Pl2).unwrap().is_one(), || {
                format!("{af:?}: {} binarizes to a non-model", lab.display(&af))
            })?;
            fwd += 1;
        }
    }
    Ok(format!("{bwd} two-valued ec2 models ternarize to complete; {fwd} complete labellings binarize to models"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("theorem corpus (seed 7, 200 frameworks, n <= 8) passes in <= 120 s", criterion_1),
        ("stable = ec1 in Kleene, complete = ec1 in Lukasiewicz on fixtures", criterion_2),
        ("regular-encoding counterexample on mutual attack", criterion_3),
        ("fuzzy ec1 models = encoded equational solutions (k=4, 3 t-norms) in <= 10 s", criterion_4),
        ("named equational systems equal their encoded forms", criterion_5),
        ("n-ary Lukasiewicz closed form equals the binary fold", criterion_6),
        ("update-function and t-norm properties", criterion_7),
        ("complete labellings = ternarized Goedel grid solutions", criterion_8),
        ("mutated Lukasiewicz table is detected", criterion_9),
        ("two-valued regular encoding vs complete labellings on the corpus", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Equational systems over `[0,1]`: each argument's value is a function of
//! its attackers' values. Evaluated directly on the attack graph, never
//! through formulas.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::logic::{for_each_grid_assignment, for_each_tuple, Assignment, Limits, Negation, Rational, TNorm, TruthValue};

#[derive(Clone, PartialEq)]
pub enum EquationalSystem {
    /// `N(x₁) T … T N(x_k)`
    Encoded { negation: Negation, tnorm: TNorm },
    /// `1 − max xᵢ`
    Max,
    /// `∏(1 − xᵢ)`
    Inverse,
    /// `0` if `Σxᵢ ≥ 1`, else `1 − Σxᵢ`
    LukaClosed,
    /// `∏(1 − xᵢ) / (∏(1 − xᵢ) + ∏xᵢ)`
    Geometrical,
}

/// The only failure of an update function: a vanishing geometrical denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Singular;

impl EquationalSystem {
    pub fn encoded(negation: Negation, tnorm: TNorm) -> Self {
        EquationalSystem::Encoded { negation, tnorm }
    }

    /// Update function on the attackers' values; 1 on the empty list.
    pub fn h(&self, xs: &[TruthValue]) -> std::result::Result<TruthValue, Singular> {
        if xs.is_empty() {
            return Ok(TruthValue::one());
        }
        Ok(match self {
            EquationalSystem::Encoded { negation, tnorm } => {
                let negated: Vec<TruthValue> = xs.iter().map(|x| negation.apply(x)).collect();
                tnorm.fold(&negated)
            }
            EquationalSystem::Max => xs.iter().max().expect("non-empty").one_minus(),
            EquationalSystem::Inverse => product(xs.iter().map(TruthValue::one_minus)),
            EquationalSystem::LukaClosed => {
                let sum = xs.iter().fold(Rational::zero(), |acc, x| &acc + x.as_rational());
                if sum >= Rational::one() {
                    TruthValue::zero()
                } else {
                    TruthValue::from_rational(&Rational::one() - &sum).expect("in [0,1]")
                }
            }
            EquationalSystem::Geometrical => {
                let out = product(xs.iter().map(TruthValue::one_minus));
                let inn = product(xs.iter().cloned());
                let denom = out.as_rational() + inn.as_rational();
                if denom.is_zero() {
                    return Err(Singular);
                }
                TruthValue::from_rational(out.as_rational() / &denom).expect("in [0,1]")
            }
        })
    }

    /// Floating-point update function, for iteration where exact denominators
    /// would grow without bound.
    pub fn h_f64(&self, xs: &[f64]) -> std::result::Result<f64, Singular> {
        if xs.is_empty() {
            return Ok(1.0);
        }
        Ok(match self {
            EquationalSystem::Encoded { negation, tnorm } => {
                let mut acc: Option<f64> = None;
                for &x in xs {
                    let n = match negation {
                        Negation::Standard => 1.0 - x,
                        Negation::Table(_) => negation.apply(&exact(x)).to_f64(),
                    };
                    acc = Some(match acc {
                        None => n,
                        Some(a) => match tnorm {
                            TNorm::Goedel => a.min(n),
                            TNorm::Lukasiewicz => (a + n - 1.0).max(0.0),
                            TNorm::Product => a * n,
                            TNorm::User(_) => tnorm.apply(&exact(a), &exact(n)).to_f64(),
                        },
                    });
                }
                acc.expect("non-empty")
            }
            EquationalSystem::Max => 1.0 - xs.iter().cloned().fold(0.0, f64::max),
            EquationalSystem::Inverse => xs.iter().map(|x| 1.0 - x).product(),
            EquationalSystem::LukaClosed => {
                let sum: f64 = xs.iter().sum();
                if sum >= 1.0 {
                    0.0
                } else {
                    1.0 - sum
                }
            }
            EquationalSystem::Geometrical => {
                let out: f64 = xs.iter().map(|x| 1.0 - x).product();
                let inn: f64 = xs.iter().product();
                if out + inn == 0.0 {
                    return Err(Singular);
                }
                out / (out + inn)
            }
        })
    }

    /// The conjunction the system folds with, when it is a t-norm.
    fn tnorm(&self) -> Option<TNorm> {
        match self {
            EquationalSystem::Encoded { tnorm, .. } => Some(tnorm.clone()),
            EquationalSystem::Max => Some(TNorm::Goedel),
            EquationalSystem::Inverse => Some(TNorm::Product),
            EquationalSystem::LukaClosed => Some(TNorm::Lukasiewicz),
            EquationalSystem::Geometrical => None,
        }
    }
}

fn product(xs: impl Iterator<Item = TruthValue>) -> TruthValue {
    xs.fold(TruthValue::one(), |acc, x| acc.product(&x))
}

fn exact(x: f64) -> TruthValue {
    TruthValue::from_f64(x.clamp(0.0, 1.0)).expect("finite value in [0,1]")
}

impl fmt::Display for EquationalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquationalSystem::Encoded { negation, tnorm } => write!(f, "encoded:{negation}:{tnorm}"),
            EquationalSystem::Max => f.write_str("max"),
            EquationalSystem::Inverse => f.write_str("inverse"),
            EquationalSystem::LukaClosed => f.write_str("luka"),
            EquationalSystem::Geometrical => f.write_str("geometrical"),
        }
    }
}

impl fmt::Debug for EquationalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for EquationalSystem {
    type Err = Error;

    /// `encoded:<negation>:<tnorm>`, `max`, `inverse`, `luka`, `geometrical`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("encoded:") {
            let (neg, tnorm) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::UnknownName(format!("{s} (expected encoded:<negation>:<tnorm>)")))?;
            return Ok(EquationalSystem::encoded(neg.parse()?, tnorm.parse()?));
        }
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(EquationalSystem::Max),
            "inverse" => Ok(EquationalSystem::Inverse),
            "luka" | "lukasiewicz" => Ok(EquationalSystem::LukaClosed),
            "geometrical" => Ok(EquationalSystem::Geometrical),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

fn attacker_values(af: &ArgumentationFramework, v: &Assignment, a: usize) -> Vec<TruthValue> {
    af.attackers(a).iter().map(|&b| v.get(b).clone()).collect()
}

fn check_len(af: &ArgumentationFramework, v: &Assignment) -> Result<()> {
    if v.len() != af.len() {
        return Err(Error::AssignmentMismatch {
            expected: af.len(),
            found: v.len(),
        });
    }
    Ok(())
}

/// Right-hand side of the equation for argument `a`.
pub fn rhs(sys: &EquationalSystem, af: &ArgumentationFramework, v: &Assignment, a: usize) -> Result<TruthValue> {
    check_len(af, v)?;
    sys.h(&attacker_values(af, v, a)).map_err(|Singular| Error::GeometricalSingularity {
        argument: af.argument(a).name().to_string(),
    })
}

/// Whether `v` solves every equation exactly.
pub fn satisfies(sys: &EquationalSystem, af: &ArgumentationFramework, v: &Assignment) -> Result<bool> {
    for a in 0..af.len() {
        if rhs(sys, af, v, a)? != *v.get(a) {
            return Ok(false);
        }
    }
    check_len(af, v)?;
    Ok(true)
}

/// All exact solutions with every value in `{0, 1/k, …, 1}`, in lexicographic
/// order. Assignments at which some update is undefined are not solutions.
pub fn grid_solutions(
    sys: &EquationalSystem,
    af: &ArgumentationFramework,
    k: u32,
    limits: &Limits,
) -> Result<Vec<Assignment>> {
    if k == 0 {
        return Err(Error::UnsupportedConfiguration("grid resolution must be at least 1".into()));
    }
    limits.check_grid(k, af.len())?;
    let mut out = Vec::new();
    for_each_grid_assignment(af.len(), k, |v| {
        match satisfies(sys, af, v) {
            Ok(true) => out.push(v.clone()),
            Ok(false) | Err(Error::GeometricalSingularity { .. }) => {}
            Err(e) => return Err(e),
        }
        Ok(())
    })?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IterationMode {
    Exact,
    /// Stop once the max-norm step is at most the tolerance.
    Float(f64),
}

impl Default for IterationMode {
    fn default() -> Self {
        IterationMode::Float(1e-9)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum IterValues {
    Exact(Assignment),
    Float(Vec<f64>),
}

impl IterValues {
    pub fn to_json(&self, af: &ArgumentationFramework) -> Value {
        match self {
            IterValues::Exact(v) => v.to_json(af),
            IterValues::Float(xs) => {
                let mut map = serde_json::Map::new();
                for (a, x) in af.arguments().iter().zip(xs) {
                    map.insert(a.name().to_string(), json!(x));
                }
                Value::Object(map)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum IterationOutcome {
    /// `steps` counts the updates that changed the state.
    FixedPoint { values: IterValues, steps: usize },
    /// `period` is `Some(2)` when the last two states alternate.
    NonConvergent {
        last: IterValues,
        previous: IterValues,
        period: Option<usize>,
        iterations: usize,
    },
}

pub const DEFAULT_MAX_ITERS: usize = 10_000;

/// Simultaneous (Jacobi) fixed-point iteration from `start`. In exact mode a
/// state that repeats two steps later is a 2-cycle, which is reported at once.
pub fn iterate(
    sys: &EquationalSystem,
    af: &ArgumentationFramework,
    start: &Assignment,
    max_iters: usize,
    mode: IterationMode,
) -> Result<IterationOutcome> {
    check_len(af, start)?;
    let singular = |a: usize| Error::GeometricalSingularity {
        argument: af.argument(a).name().to_string(),
    };
    match mode {
        IterationMode::Exact => {
            let mut prev: Option<Assignment> = None;
            let mut cur = start.clone();
            for i in 0..max_iters {
                let next = Assignment::new(
                    (0..af.len())
                        .map(|a| rhs(sys, af, &cur, a))
                        .collect::<Result<Vec<_>>>()?,
                );
                if next == cur {
                    return Ok(IterationOutcome::FixedPoint {
                        values: IterValues::Exact(cur),
                        steps: i,
                    });
                }
                if prev.as_ref() == Some(&next) {
                    return Ok(IterationOutcome::NonConvergent {
                        last: IterValues::Exact(next),
                        previous: IterValues::Exact(cur),
                        period: Some(2),
                        iterations: i + 1,
                    });
                }
                prev = Some(std::mem::replace(&mut cur, next));
            }
            Ok(IterationOutcome::NonConvergent {
                previous: IterValues::Exact(prev.unwrap_or_else(|| cur.clone())),
                last: IterValues::Exact(cur),
                period: None,
                iterations: max_iters,
            })
        }
        IterationMode::Float(tol) => {
            let mut cur: Vec<f64> = start.values().iter().map(TruthValue::to_f64).collect();
            let mut prev = cur.clone();
            for i in 0..max_iters {
                let mut next = Vec::with_capacity(cur.len());
                for a in 0..af.len() {
                    let xs: Vec<f64> = af.attackers(a).iter().map(|&b| cur[b]).collect();
                    next.push(sys.h_f64(&xs).map_err(|Singular| singular(a))?);
                }
                if max_norm(&next, &cur) <= tol {
                    return Ok(IterationOutcome::FixedPoint {
                        values: IterValues::Float(next),
                        steps: i,
                    });
                }
                prev = std::mem::replace(&mut cur, next);
            }
            let period = (!af.is_empty() && max_iters >= 2 && {
                let next: Vec<f64> = (0..af.len())
                    .map(|a| {
                        let xs: Vec<f64> = af.attackers(a).iter().map(|&b| cur[b]).collect();
                        sys.h_f64(&xs).unwrap_or(f64::NAN)
                    })
                    .collect();
                max_norm(&next, &prev) <= tol
            })
            .then_some(2);
            Ok(IterationOutcome::NonConvergent {
                last: IterValues::Float(cur),
                previous: IterValues::Float(prev),
                period,
                iterations: max_iters,
            })
        }
    }
}

fn max_norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `max(0, Σxᵢ − (n − 1))`: the n-ary Łukasiewicz t-norm in closed form.
pub fn luka_nary(xs: &[TruthValue]) -> TruthValue {
    assert!(!xs.is_empty(), "luka_nary needs at least one value");
    let sum = xs.iter().fold(Rational::zero(), |acc, x| &acc + x.as_rational());
    let shifted = &sum - &Rational::from_integer(xs.len() as i128 - 1);
    if shifted.is_negative() {
        TruthValue::zero()
    } else {
        TruthValue::from_rational(shifted).expect("at most 1")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionProperty {
    /// Raising any one input never raises the output.
    DecreasingMonotonicity,
    /// `h(0, …, 0) = 1`
    BoundaryZeroToOne,
    /// `h(…, 1, …) = 0`
    BoundaryOneKills,
    /// Invariance under permutation of the inputs.
    Symmetry,
    /// The conjunction satisfies `½ ⊙ ½ = ½`.
    HalfIdempotentTNorm,
    /// The conjunction has no zero divisors: `x, y > 0 ⇒ x ⊙ y > 0`.
    ZeroDivisorFreeTNorm,
}

impl FunctionProperty {
    pub const ALL: [FunctionProperty; 6] = [
        FunctionProperty::DecreasingMonotonicity,
        FunctionProperty::BoundaryZeroToOne,
        FunctionProperty::BoundaryOneKills,
        FunctionProperty::Symmetry,
        FunctionProperty::HalfIdempotentTNorm,
        FunctionProperty::ZeroDivisorFreeTNorm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionProperty::DecreasingMonotonicity => "decreasing-monotonicity",
            FunctionProperty::BoundaryZeroToOne => "boundary-zero-to-one",
            FunctionProperty::BoundaryOneKills => "boundary-one-kills",
            FunctionProperty::Symmetry => "symmetry",
            FunctionProperty::HalfIdempotentTNorm => "half-idempotent",
            FunctionProperty::ZeroDivisorFreeTNorm => "zero-divisor-free",
        }
    }
}

impl fmt::Display for FunctionProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PropertyVerdict {
    Pass,
    Counterexample { inputs: Vec<TruthValue>, detail: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub property: FunctionProperty,
    pub system: String,
    pub arity: usize,
    pub k: u32,
    pub points_checked: u64,
    pub verdict: PropertyVerdict,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.verdict == PropertyVerdict::Pass
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "property": self.property.as_str(),
            "system": self.system,
            "arity": self.arity,
            "k": self.k,
            "points": self.points_checked,
            "pass": self.passed(),
        });
        if let PropertyVerdict::Counterexample { inputs, detail } = &self.verdict {
            v["counterexample"] = json!({
                "inputs": inputs.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "detail": detail,
            });
        }
        v
    }
}

fn show(xs: &[TruthValue]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Checks `prop` exhaustively on the `(k+1)^arity` grid and returns the first
/// counterexample in lexicographic order. Points where the geometrical update
/// is undefined are skipped. The t-norm properties concern the conjunction the
/// system folds with; the geometrical combination is not a t-norm and fails
/// them at the unit law.
pub fn check_function_property(
    sys: &EquationalSystem,
    prop: FunctionProperty,
    arity: usize,
    k: u32,
) -> PropertyReport {
    let k = k.max(1);
    let grid: Vec<TruthValue> = (0..=k).map(|i| TruthValue::grid(i, k)).collect();
    let mut points = 0u64;
    let verdict = match prop {
        FunctionProperty::HalfIdempotentTNorm | FunctionProperty::ZeroDivisorFreeTNorm => {
            tnorm_property(sys, prop, &grid, &mut points)
        }
        _ => grid_property(&|xs| sys.h(xs).ok(), prop, arity, &grid, &mut points),
    };
    PropertyReport {
        property: prop,
        system: sys.to_string(),
        arity,
        k,
        points_checked: points,
        verdict,
    }
}

type UpdateFn<'a> = dyn Fn(&[TruthValue]) -> Option<TruthValue> + 'a;

fn grid_property(
    h: &UpdateFn<'_>,
    prop: FunctionProperty,
    arity: usize,
    grid: &[TruthValue],
    points: &mut u64,
) -> PropertyVerdict {
    let top = grid.len() as u32 - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for_each_tuple(arity, top + 1, |d| {
        *points += 1;
        let xs: Vec<TruthValue> = d.iter().map(|&i| grid[i as usize].clone()).collect();
        let Some(y) = h(&xs) else {
            return Ok(());
        };
        let fail = |detail: String| {
            Err(PropertyVerdict::Counterexample {
                inputs: xs.clone(),
                detail,
            })
        };
        match prop {
            FunctionProperty::DecreasingMonotonicity => {
                for i in 0..arity {
                    if d[i] == top {
                        continue;
                    }
                    let mut up = xs.clone();
                    up[i] = grid[d[i] as usize + 1].clone();
                    if let Some(z) = h(&up) {
                        if z > y {
                            return fail(format!("h{} = {y} < h{} = {z}", show(&xs), show(&up)));
                        }
                    }
                }
            }
            FunctionProperty::BoundaryZeroToOne => {
                if xs.iter().all(TruthValue::is_zero) && !y.is_one() {
                    return fail(format!("h{} = {y}, expected 1", show(&xs)));
                }
            }
            FunctionProperty::BoundaryOneKills => {
                if xs.iter().any(TruthValue::is_one) && !y.is_zero() {
                    return fail(format!("h{} = {y}, expected 0", show(&xs)));
                }
            }
            FunctionProperty::Symmetry => {
                let mut perms: Vec<Vec<TruthValue>> = Vec::new();
                for i in 0..arity {
                    for j in i + 1..arity {
                        let mut p = xs.clone();
                        p.swap(i, j);
                        perms.push(p);
                    }
                }
                let mut p = xs.clone();
                p.shuffle(&mut rng);
                perms.push(p);
                for p in perms {
                    if let Some(z) = h(&p) {
                        if z != y {
                            return fail(format!("h{} = {y} but h{} = {z}", show(&xs), show(&p)));
                        }
                    }
                }
            }
            FunctionProperty::HalfIdempotentTNorm | FunctionProperty::ZeroDivisorFreeTNorm => {
                unreachable!("t-norm properties are checked on the conjunction")
            }
        }
        Ok(())
    })
    .err()
    .unwrap_or(PropertyVerdict::Pass)
}

fn tnorm_property(sys: &EquationalSystem, prop: FunctionProperty, grid: &[TruthValue], points: &mut u64) -> PropertyVerdict {
    let half = TruthValue::half();
    let Some(t) = sys.tnorm() else {
        // x ⊛ y = xy / (xy + (1−x)(1−y)); at (½, 1) this is 1, not ½.
        *points += 1;
        return PropertyVerdict::Counterexample {
            inputs: vec![half.clone(), TruthValue::one()],
            detail: "not a t-norm: 1/2 ⊛ 1 = 1, unit law requires 1/2".into(),
        };
    };
    match prop {
        FunctionProperty::HalfIdempotentTNorm => {
            *points += 1;
            let v = t.apply(&half, &half);
            if v == half {
                PropertyVerdict::Pass
            } else {
                PropertyVerdict::Counterexample {
                    inputs: vec![half.clone(), half],
                    detail: format!("T(1/2, 1/2) = {v}"),
                }
            }
        }
        _ => {
            for x in grid.iter().filter(|x| !x.is_zero()) {
                for y in grid.iter().filter(|y| !y.is_zero()) {
                    *points += 1;
                    if t.apply(x, y).is_zero() {
                        return PropertyVerdict::Counterexample {
                            inputs: vec![x.clone(), y.clone()],
                            detail: format!("T({x}, {y}) = 0"),
                        };
                    }
                }
            }
            PropertyVerdict::Pass
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::random_af;
    use proptest::prelude::*;

    fn af(names: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
        ArgumentationFramework::new(names, attacks).unwrap()
    }

    fn a(vals: &[&str]) -> Assignment {
        Assignment::parse(vals).unwrap()
    }

    fn tv(s: &str) -> TruthValue {
        s.parse().unwrap()
    }

    fn mutual() -> ArgumentationFramework {
        af(&["a", "b"], &[("a", "b"), ("b", "a")])
    }

    fn cycle3() -> ArgumentationFramework {
        af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
    }

    #[test]
    fn update_function_examples() {
        let two = af(&["a", "b", "c"], &[("a", "c"), ("b", "c")]);
        let v = a(&["1/2", "1/2", "0"]);
        assert_eq!(rhs(&EquationalSystem::Inverse, &two, &v, 2).unwrap(), tv("1/4"));
        let v = a(&["2/5", "7/10", "0"]);
        assert_eq!(rhs(&EquationalSystem::LukaClosed, &two, &v, 2).unwrap(), TruthValue::zero());
        let v = a(&["1/5", "1/10", "0"]);
        assert_eq!(rhs(&EquationalSystem::LukaClosed, &two, &v, 2).unwrap(), tv("7/10"));
        let half = a(&["1/2", "1/2", "1/2"]);
        for i in 0..3 {
            assert_eq!(rhs(&EquationalSystem::Max, &cycle3(), &half, i).unwrap(), TruthValue::half());
        }
        let v = a(&["1/4", "1/2", "0"]);
        // (3/4 · 1/2) / (3/8 + 1/8)
        assert_eq!(rhs(&EquationalSystem::Geometrical, &two, &v, 2).unwrap(), tv("3/4"));
        let v = a(&["1", "0", "0"]);
        assert!(matches!(
            rhs(&EquationalSystem::Geometrical, &two, &v, 2),
            Err(Error::GeometricalSingularity { argument }) if argument == "c"
        ));
    }

    #[test]
    fn unattacked_arguments_get_one() {
        let single = af(&["a"], &[]);
        let v = a(&["0"]);
        for sys in systems() {
            assert!(rhs(&sys, &single, &v, 0).unwrap().is_one(), "{sys}");
        }
    }

    fn systems() -> Vec<EquationalSystem> {
        let mut out: Vec<EquationalSystem> =
            TNorm::named().into_iter().map(|t| EquationalSystem::encoded(Negation::Standard, t)).collect();
        out.extend([
            EquationalSystem::Max,
            EquationalSystem::Inverse,
            EquationalSystem::LukaClosed,
            EquationalSystem::Geometrical,
        ]);
        out
    }

    #[test]
    fn satisfaction_examples() {
        assert!(satisfies(&EquationalSystem::Max, &mutual(), &a(&["3/4", "1/4"])).unwrap());
        assert!(satisfies(&EquationalSystem::Max, &cycle3(), &a(&["1/2", "1/2", "1/2"])).unwrap());
        assert!(!satisfies(&EquationalSystem::Max, &cycle3(), &a(&["1", "0", "0"])).unwrap());
        assert!(satisfies(&EquationalSystem::Max, &mutual(), &a(&["1"])).is_err());
    }

    #[test]
    fn grid_solution_examples() {
        let lim = Limits::default();
        let sols = grid_solutions(&EquationalSystem::Max, &mutual(), 4, &lim).unwrap();
        let expected: Vec<Assignment> = (0..=4)
            .map(|i| Assignment::new(vec![TruthValue::grid(i, 4), TruthValue::grid(4 - i, 4)]))
            .collect();
        assert_eq!(sols, expected);

        let s = af(&["a"], &[("a", "a")]);
        assert_eq!(grid_solutions(&EquationalSystem::Inverse, &s, 2, &lim).unwrap(), [a(&["1/2"])]);
        assert!(grid_solutions(&EquationalSystem::Inverse, &s, 3, &lim).unwrap().is_empty());

        let single = af(&["a"], &[]);
        for k in 1..6 {
            assert_eq!(grid_solutions(&EquationalSystem::LukaClosed, &single, k, &lim).unwrap(), [a(&["1"])]);
        }
        assert!(matches!(
            grid_solutions(&EquationalSystem::Max, &random_af(9, 0.3, 1), 4, &lim),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn geometrical_grid_skips_singular_points() {
        let two = af(&["a", "b", "c"], &[("a", "c"), ("b", "c")]);
        let sols = grid_solutions(&EquationalSystem::Geometrical, &two, 2, &Limits::default()).unwrap();
        assert_eq!(sols, [a(&["1", "1", "0"])]);
    }

    #[test]
    fn godel_encoded_agrees_with_max_pointwise() {
        let g = EquationalSystem::encoded(Negation::Standard, TNorm::Goedel);
        for seed in 0..10 {
            let f = random_af(3, 0.4, seed);
            for_each_grid_assignment(3, 4, |v| {
                assert_eq!(satisfies(&g, &f, v)?, satisfies(&EquationalSystem::Max, &f, v)?);
                Ok(())
            })
            .unwrap();
        }
    }

    #[test]
    fn iteration_examples() {
        let max = EquationalSystem::Max;
        let out = iterate(&max, &mutual(), &a(&["1/2", "1/2"]), 100, IterationMode::Exact).unwrap();
        assert_eq!(
            out,
            IterationOutcome::FixedPoint {
                values: IterValues::Exact(a(&["1/2", "1/2"])),
                steps: 0
            }
        );

        let out = iterate(&max, &mutual(), &a(&["0", "0"]), 100, IterationMode::Exact).unwrap();
        assert_eq!(
            out,
            IterationOutcome::NonConvergent {
                last: IterValues::Exact(a(&["0", "0"])),
                previous: IterValues::Exact(a(&["1", "1"])),
                period: Some(2),
                iterations: 2
            }
        );

        let chain = af(&["a", "b"], &[("a", "b")]);
        let out = iterate(&EquationalSystem::Inverse, &chain, &a(&["0", "0"]), 100, IterationMode::Exact).unwrap();
        assert_eq!(
            out,
            IterationOutcome::FixedPoint {
                values: IterValues::Exact(a(&["1", "0"])),
                steps: 2
            }
        );
    }

    #[test]
    fn float_iteration() {
        let chain = af(&["a", "b"], &[("a", "b")]);
        let out = iterate(&EquationalSystem::Inverse, &chain, &a(&["0", "0"]), 100, IterationMode::default()).unwrap();
        assert_eq!(
            out,
            IterationOutcome::FixedPoint {
                values: IterValues::Float(vec![1.0, 0.0]),
                steps: 2
            }
        );
        let out = iterate(&EquationalSystem::Max, &mutual(), &a(&["0", "0"]), 50, IterationMode::Float(1e-9)).unwrap();
        assert!(matches!(out, IterationOutcome::NonConvergent { period: Some(2), iterations: 50, .. }));

        // x = 1 − x: ½ is fixed, any other start oscillates.
        let s = af(&["a"], &[("a", "a")]);
        let out = iterate(&EquationalSystem::Inverse, &s, &a(&["1/2"]), 10, IterationMode::Float(1e-12)).unwrap();
        assert!(matches!(out, IterationOutcome::FixedPoint { steps: 0, .. }));
        let out = iterate(&EquationalSystem::Inverse, &s, &a(&["1/4"]), 10, IterationMode::Exact).unwrap();
        assert!(matches!(out, IterationOutcome::NonConvergent { period: Some(2), .. }));
    }

    #[test]
    fn luka_nary_examples() {
        assert_eq!(luka_nary(&[tv("9/10"), tv("8/10"), tv("7/10")]), tv("2/5"));
        assert_eq!(luka_nary(&[tv("3/7"), TruthValue::one()]), tv("3/7"));
        assert_eq!(luka_nary(&[tv("3/10"), tv("3/10")]), TruthValue::zero());
    }

    #[test]
    fn property_examples() {
        let luka = EquationalSystem::encoded(Negation::Standard, TNorm::Lukasiewicz);
        assert!(check_function_property(&luka, FunctionProperty::DecreasingMonotonicity, 3, 4).passed());
        assert!(check_function_property(&EquationalSystem::Geometrical, FunctionProperty::DecreasingMonotonicity, 2, 4)
            .passed());
        let zdf = check_function_property(&luka, FunctionProperty::ZeroDivisorFreeTNorm, 2, 2);
        assert_eq!(
            zdf.verdict,
            PropertyVerdict::Counterexample {
                inputs: vec![TruthValue::half(), TruthValue::half()],
                detail: "T(1/2, 1/2) = 0".into()
            }
        );
        let geo = check_function_property(&EquationalSystem::Geometrical, FunctionProperty::HalfIdempotentTNorm, 2, 2);
        assert!(!geo.passed());
    }

    #[test]
    fn tnorm_property_verdicts() {
        let cases = [
            (TNorm::Goedel, true, true),
            (TNorm::Product, false, true),
            (TNorm::Lukasiewicz, false, false),
        ];
        for (t, idem, zdf) in cases {
            let sys = EquationalSystem::encoded(Negation::Standard, t);
            assert_eq!(check_function_property(&sys, FunctionProperty::HalfIdempotentTNorm, 2, 4).passed(), idem);
            assert_eq!(check_function_property(&sys, FunctionProperty::ZeroDivisorFreeTNorm, 2, 4).passed(), zdf);
        }
    }

    #[test]
    fn checker_catches_broken_update_functions() {
        let grid: Vec<TruthValue> = (0..=4).map(|i| TruthValue::grid(i, 4)).collect();
        let mut points = 0;
        let increasing = |xs: &[TruthValue]| xs.iter().max().cloned();
        let v = grid_property(&increasing, FunctionProperty::DecreasingMonotonicity, 2, &grid, &mut points);
        assert!(matches!(v, PropertyVerdict::Counterexample { inputs, .. } if inputs == [TruthValue::zero(), TruthValue::zero()]));

        let first = |xs: &[TruthValue]| Some(xs[0].one_minus());
        assert!(grid_property(&first, FunctionProperty::Symmetry, 2, &grid, &mut points) != PropertyVerdict::Pass);
        assert_eq!(grid_property(&first, FunctionProperty::BoundaryZeroToOne, 2, &grid, &mut points), PropertyVerdict::Pass);
        assert!(grid_property(&first, FunctionProperty::BoundaryOneKills, 2, &grid, &mut points) != PropertyVerdict::Pass);

        let half = |_: &[TruthValue]| Some(TruthValue::half());
        assert!(grid_property(&half, FunctionProperty::BoundaryZeroToOne, 3, &grid, &mut points) != PropertyVerdict::Pass);
    }

    #[test]
    fn system_names_roundtrip() {
        for sys in systems() {
            assert_eq!(sys.to_string().parse::<EquationalSystem>().unwrap(), sys);
        }
        let t: EquationalSystem = "encoded:table(0=1,1/2=1/4,1=0):product".parse().unwrap();
        assert_eq!(t.to_string(), "encoded:table(0=1,1/2=1/4,1=0):product");
        assert!("encoded:standard".parse::<EquationalSystem>().is_err());
        assert!("gabbay".parse::<EquationalSystem>().is_err());
    }

    fn rational_tuple() -> impl Strategy<Value = Vec<TruthValue>> {
        prop::collection::vec((0i128..=60, 1i128..=60), 1..7)
            .prop_map(|ps| ps.into_iter().map(|(n, d)| TruthValue::new(n.min(d), d).unwrap()).collect())
    }

    proptest! {
        #[test]
        fn luka_nary_is_the_binary_fold(xs in rational_tuple()) {
            prop_assert_eq!(luka_nary(&xs), TNorm::Lukasiewicz.fold(&xs));
        }

        #[test]
        fn named_systems_match_encoded_updates(xs in rational_tuple()) {
            let pairs = [
                (TNorm::Goedel, EquationalSystem::Max),
                (TNorm::Product, EquationalSystem::Inverse),
                (TNorm::Lukasiewicz, EquationalSystem::LukaClosed),
            ];
            for (t, named) in pairs {
                prop_assert_eq!(EquationalSystem::encoded(Negation::Standard, t).h(&xs), named.h(&xs));
            }
        }

        #[test]
        fn float_update_tracks_exact(xs in rational_tuple()) {
            let fx: Vec<f64> = xs.iter().map(TruthValue::to_f64).collect();
            for sys in systems() {
                match (sys.h(&xs), sys.h_f64(&fx)) {
                    (Ok(e), Ok(f)) => prop_assert!((e.to_f64() - f).abs() < 1e-12, "{sys}: {e} vs {f}"),
                    (Err(Singular), Err(Singular)) => {}
                    (e, f) => prop_assert!(false, "{sys}: {e:?} vs {f:?}"),
                }
            }
        }
    }
}

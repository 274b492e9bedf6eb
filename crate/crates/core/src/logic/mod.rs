//! Truth-value algebra, formula evaluation and model search for the
//! two-valued, three-valued (Kleene, Łukasiewicz) and fuzzy systems.

mod fuzzy;
pub mod rational;
pub mod three;
mod value;

use std::fmt;

pub use fuzzy::{Negation, NegationTable, TNorm, UserTNorm};
pub use rational::Rational;
pub use three::ImplicationTable;
pub use value::{Assignment, TruthValue};

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::formula::Formula;
use three::{Halves, ONE, ZERO};

/// Enumeration caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_args: usize,
    pub max_grid_points: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_args: 14,
            max_grid_points: 1_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_args(&self, af: &ArgumentationFramework) -> Result<()> {
        if af.len() > self.max_args {
            return Err(Error::TooLarge {
                what: "enumeration",
                required: af.len() as u128,
                cap: self.max_args as u128,
            });
        }
        Ok(())
    }

    pub(crate) fn check_grid(&self, k: u32, n: usize) -> Result<u128> {
        let points = grid_size(k, n);
        if points > self.max_grid_points {
            return Err(Error::TooLarge {
                what: "grid search",
                required: points,
                cap: self.max_grid_points,
            });
        }
        Ok(points)
    }
}

/// `(k+1)^n`, saturating.
pub fn grid_size(k: u32, n: usize) -> u128 {
    u32::try_from(n)
        .ok()
        .and_then(|n| (k as u128 + 1).checked_pow(n))
        .unwrap_or(u128::MAX)
}

/// Visits every tuple in `{0..base}^n` in lexicographic order, first position
/// most significant. Stops at the first error.
pub(crate) fn for_each_tuple<E>(
    n: usize,
    base: u32,
    mut visit: impl FnMut(&[u32]) -> std::result::Result<(), E>,
) -> std::result::Result<(), E> {
    let mut digits = vec![0u32; n];
    loop {
        visit(&digits)?;
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[derive(Clone, PartialEq)]
pub enum LogicSystem {
    Pl2,
    Pl3K,
    Pl3L,
    /// Three-valued system with `¬ = 1 − x`, `∧ = min`, `∨ = max` and a given
    /// implication table. Used to test the harness against mutated tables.
    Pl3Custom(ImplicationTable),
    Fuzzy { negation: Negation, tnorm: TNorm },
}

impl LogicSystem {
    pub fn fuzzy(negation: Negation, tnorm: TNorm) -> Self {
        LogicSystem::Fuzzy { negation, tnorm }
    }

    pub fn name(&self) -> String {
        match self {
            LogicSystem::Pl2 => "PL2".into(),
            LogicSystem::Pl3K => "PL3-Kleene".into(),
            LogicSystem::Pl3L => "PL3-Lukasiewicz".into(),
            LogicSystem::Pl3Custom(t) => format!("PL3-custom{:?}", t.0),
            LogicSystem::Fuzzy { negation, tnorm } => format!("fuzzy({negation}, {tnorm})"),
        }
    }

    fn three_valued_table(&self) -> Option<ImplicationTable> {
        match self {
            LogicSystem::Pl3K => Some(ImplicationTable::KLEENE),
            LogicSystem::Pl3L => Some(ImplicationTable::LUKASIEWICZ),
            LogicSystem::Pl3Custom(t) => Some(*t),
            _ => None,
        }
    }

    /// The finite truth domain in increasing order, if there is one.
    pub fn finite_domain(&self) -> Option<Vec<TruthValue>> {
        match self {
            LogicSystem::Pl2 => Some(vec![TruthValue::zero(), TruthValue::one()]),
            LogicSystem::Fuzzy { .. } => None,
            _ => Some(vec![TruthValue::zero(), TruthValue::half(), TruthValue::one()]),
        }
    }
}

impl fmt::Debug for LogicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn domain_error(f: &Formula, index: usize, value: &TruthValue, ls: &LogicSystem) -> Error {
    let argument = crate::formula::atoms_of(f)
        .into_iter()
        .find(|a| a.index() == index)
        .map(|a| a.name().to_string())
        .unwrap_or_else(|| format!("#{index}"));
    Error::DomainViolation {
        argument,
        value: value.to_string(),
        logic: ls.name(),
    }
}

fn max_atom_index(f: &Formula) -> Option<usize> {
    crate::formula::atoms_of(f).iter().map(|a| a.index()).max()
}

fn eval_bool(f: &Formula, v: &[bool]) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(a) => v[a.index()],
        Formula::Not(g) => !eval_bool(g, v),
        Formula::And(cs) => cs.iter().all(|c| eval_bool(c, v)),
        Formula::Or(cs) => cs.iter().any(|c| eval_bool(c, v)),
        Formula::Implies(l, r) => !eval_bool(l, v) || eval_bool(r, v),
        Formula::Iff(l, r) => eval_bool(l, v) == eval_bool(r, v),
    }
}

fn eval_three(f: &Formula, v: &[Halves], table: &ImplicationTable) -> Halves {
    match f {
        Formula::Top => ONE,
        Formula::Bottom => ZERO,
        Formula::Atom(a) => v[a.index()],
        Formula::Not(g) => ONE - eval_three(g, v, table),
        Formula::And(cs) => cs.iter().map(|c| eval_three(c, v, table)).min().expect("non-empty"),
        Formula::Or(cs) => cs.iter().map(|c| eval_three(c, v, table)).max().expect("non-empty"),
        Formula::Implies(l, r) => table.implies(eval_three(l, v, table), eval_three(r, v, table)),
        Formula::Iff(l, r) => {
            let (x, y) = (eval_three(l, v, table), eval_three(r, v, table));
            table.implies(x, y).min(table.implies(y, x))
        }
    }
}

fn eval_fuzzy(f: &Formula, v: &[TruthValue], n: &Negation, t: &TNorm, grid: Option<u32>) -> Result<TruthValue> {
    Ok(match f {
        Formula::Top => TruthValue::one(),
        Formula::Bottom => TruthValue::zero(),
        Formula::Atom(a) => v[a.index()].clone(),
        Formula::Not(g) => n.apply(&eval_fuzzy(g, v, n, t, grid)?),
        Formula::And(cs) => {
            let mut acc = eval_fuzzy(&cs[0], v, n, t, grid)?;
            for c in &cs[1..] {
                acc = t.apply(&acc, &eval_fuzzy(c, v, n, t, grid)?);
            }
            acc
        }
        // Fuzzy disjunction is taken as max; the encodings studied here never
        // produce one in a fuzzy system.
        Formula::Or(cs) => {
            let mut acc = eval_fuzzy(&cs[0], v, n, t, grid)?;
            for c in &cs[1..] {
                acc = acc.max(eval_fuzzy(c, v, n, t, grid)?);
            }
            acc
        }
        Formula::Implies(l, r) => {
            let (x, y) = (eval_fuzzy(l, v, n, t, grid)?, eval_fuzzy(r, v, n, t, grid)?);
            t.residuum_on_grid(&x, &y, grid)?
        }
        Formula::Iff(l, r) => {
            let (x, y) = (eval_fuzzy(l, v, n, t, grid)?, eval_fuzzy(r, v, n, t, grid)?);
            t.apply(&t.residuum_on_grid(&x, &y, grid)?, &t.residuum_on_grid(&y, &x, grid)?)
        }
    })
}

fn evaluate_impl(f: &Formula, v: &Assignment, ls: &LogicSystem, grid: Option<u32>) -> Result<TruthValue> {
    if let Some(max) = max_atom_index(f) {
        if max >= v.len() {
            return Err(Error::AssignmentMismatch {
                expected: max + 1,
                found: v.len(),
            });
        }
    }
    match ls {
        LogicSystem::Pl2 => {
            let mut bools = Vec::with_capacity(v.len());
            for (i, x) in v.values().iter().enumerate() {
                if x.is_one() {
                    bools.push(true);
                } else if x.is_zero() {
                    bools.push(false);
                } else {
                    return Err(domain_error(f, i, x, ls));
                }
            }
            Ok(if eval_bool(f, &bools) { TruthValue::one() } else { TruthValue::zero() })
        }
        LogicSystem::Fuzzy { negation, tnorm } => eval_fuzzy(f, v.values(), negation, tnorm, grid),
        _ => {
            let table = ls.three_valued_table().expect("three-valued system");
            let mut halves = Vec::with_capacity(v.len());
            for (i, x) in v.values().iter().enumerate() {
                halves.push(three::to_halves(x).ok_or_else(|| domain_error(f, i, x, ls))?);
            }
            Ok(three::from_halves(eval_three(f, &halves, &table)))
        }
    }
}

/// Value of `f` under `v` in `ls`.
pub fn evaluate(f: &Formula, v: &Assignment, ls: &LogicSystem) -> Result<TruthValue> {
    evaluate_impl(f, v, ls, None)
}

pub fn is_model(f: &Formula, v: &Assignment, ls: &LogicSystem) -> Result<bool> {
    Ok(evaluate(f, v, ls)?.is_one())
}

/// Every model of `f` over the finite domain of `ls`, in lexicographic order.
pub fn enumerate_models(
    f: &Formula,
    af: &ArgumentationFramework,
    ls: &LogicSystem,
    limits: &Limits,
) -> Result<Vec<Assignment>> {
    limits.check_args(af)?;
    let n = af.len();
    let mut models = Vec::new();
    match ls {
        LogicSystem::Fuzzy { .. } => {
            return Err(Error::UnsupportedConfiguration(
                "exhaustive enumeration needs a finite truth domain; use grid search for fuzzy systems".into(),
            ))
        }
        LogicSystem::Pl2 => {
            let mut bools = vec![false; n];
            for_each_tuple(n, 2, |digits| {
                for (b, d) in bools.iter_mut().zip(digits) {
                    *b = *d == 1;
                }
                if eval_bool(f, &bools) {
                    models.push(Assignment::new(
                        bools.iter().map(|&b| if b { TruthValue::one() } else { TruthValue::zero() }).collect(),
                    ));
                }
                Ok::<_, Error>(())
            })?;
        }
        _ => {
            let table = ls.three_valued_table().expect("three-valued system");
            let mut halves = vec![ZERO; n];
            for_each_tuple(n, 3, |digits| {
                for (h, d) in halves.iter_mut().zip(digits) {
                    *h = *d as Halves;
                }
                if eval_three(f, &halves, &table) == ONE {
                    models.push(Assignment::new(halves.iter().map(|&h| three::from_halves(h)).collect()));
                }
                Ok::<_, Error>(())
            })?;
        }
    }
    Ok(models)
}

/// Every model of `f` in a fuzzy system with all values in `{0, 1/k, …, 1}`,
/// in lexicographic order. Exact on the grid; says nothing about models off it.
pub fn grid_models(
    f: &Formula,
    af: &ArgumentationFramework,
    ls: &LogicSystem,
    k: u32,
    limits: &Limits,
) -> Result<Vec<Assignment>> {
    let LogicSystem::Fuzzy { .. } = ls else {
        return Err(Error::UnsupportedConfiguration("grid search needs a fuzzy logic system".into()));
    };
    if k == 0 {
        return Err(Error::UnsupportedConfiguration("grid resolution must be at least 1".into()));
    }
    limits.check_grid(k, af.len())?;
    let mut models = Vec::new();
    for_each_grid_assignment(af.len(), k, |v| {
        if evaluate_impl(f, v, ls, Some(k))?.is_one() {
            models.push(v.clone());
        }
        Ok(())
    })?;
    Ok(models)
}

/// Visits every assignment with values in `{0, 1/k, …, 1}` in lexicographic order.
pub(crate) fn for_each_grid_assignment(
    n: usize,
    k: u32,
    mut visit: impl FnMut(&Assignment) -> Result<()>,
) -> Result<()> {
    let points: Vec<TruthValue> = (0..=k).map(|i| TruthValue::grid(i, k)).collect();
    for_each_tuple(n, k + 1, |digits| {
        let v = Assignment::new(digits.iter().map(|&d| points[d as usize].clone()).collect());
        visit(&v)
    })
}

/// Fuzzy evaluation in a grid context (user t-norm residua snap to the grid).
pub fn evaluate_on_grid(f: &Formula, v: &Assignment, ls: &LogicSystem, k: u32) -> Result<TruthValue> {
    evaluate_impl(f, v, ls, Some(k))
}

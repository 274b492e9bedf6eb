//! Propositional formulas over argument atoms and the two encodings of a
//! framework into a formula.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::af::{ArgumentId, ArgumentationFramework};

/// Formula AST. `And`/`Or` are n-ary and never empty; build them through
/// [`Formula::and`] and [`Formula::or`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Atom(ArgumentId),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Empty conjunction is `Top`; a single conjunct is returned as is.
    pub fn and(mut children: Vec<Formula>) -> Formula {
        match children.len() {
            0 => Formula::Top,
            1 => children.pop().expect("one child"),
            _ => Formula::And(children),
        }
    }

    /// Empty disjunction is `Bottom`; a single disjunct is returned as is.
    pub fn or(mut children: Vec<Formula>) -> Formula {
        match children.len() {
            0 => Formula::Bottom,
            1 => children.pop().expect("one child"),
            _ => Formula::Or(children),
        }
    }

    pub fn negate(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Iff(Box::new(lhs), Box::new(rhs))
    }

    pub fn atom(arg: &ArgumentId) -> Formula {
        Formula::Atom(arg.clone())
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(_) => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::And(cs) | Formula::Or(cs) => 1 + cs.iter().map(Formula::size).sum::<usize>(),
            Formula::Implies(l, r) | Formula::Iff(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// `{"op":"and","args":[...]}`, `{"op":"atom","name":"a"}`, `{"op":"top"}`, ...
    pub fn to_json(&self) -> Value {
        match self {
            Formula::Top => json!({ "op": "top" }),
            Formula::Bottom => json!({ "op": "bottom" }),
            Formula::Atom(a) => json!({ "op": "atom", "name": a.name() }),
            Formula::Not(f) => json!({ "op": "not", "args": [f.to_json()] }),
            Formula::And(cs) => json!({ "op": "and", "args": cs.iter().map(Formula::to_json).collect::<Vec<_>>() }),
            Formula::Or(cs) => json!({ "op": "or", "args": cs.iter().map(Formula::to_json).collect::<Vec<_>>() }),
            Formula::Implies(l, r) => json!({ "op": "implies", "args": [l.to_json(), r.to_json()] }),
            Formula::Iff(l, r) => json!({ "op": "iff", "args": [l.to_json(), r.to_json()] }),
        }
    }
}

/// Fully parenthesized rendering with `~ & | -> <-> T F`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn joined(f: &mut fmt::Formatter<'_>, cs: &[Formula], op: &str) -> fmt::Result {
            f.write_str("(")?;
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")
        }
        match self {
            Formula::Top => f.write_str("T"),
            Formula::Bottom => f.write_str("F"),
            Formula::Atom(a) => f.write_str(a.name()),
            Formula::Not(inner) => write!(f, "(~{inner})"),
            Formula::And(cs) => joined(f, cs, "&"),
            Formula::Or(cs) => joined(f, cs, "|"),
            Formula::Implies(l, r) => write!(f, "({l} -> {r})"),
            Formula::Iff(l, r) => write!(f, "({l} <-> {r})"),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn negated_attackers(af: &ArgumentationFramework, a: usize) -> Formula {
    Formula::and(
        af.attackers(a)
            .iter()
            .map(|&b| Formula::negate(Formula::atom(af.argument(b))))
            .collect(),
    )
}

/// `AND_a (a <-> AND_{b attacks a} ~b)`.
pub fn encode_normal(af: &ArgumentationFramework) -> Formula {
    Formula::and(
        af.arguments()
            .iter()
            .map(|a| Formula::iff(Formula::atom(a), negated_attackers(af, a.index())))
            .collect(),
    )
}

/// `AND_a ((a -> AND_{b attacks a} ~b) & (a <-> AND_{b attacks a} OR_{c attacks b} c))`,
/// flattened into a single conjunction of `2|A|` conjuncts.
pub fn encode_regular(af: &ArgumentationFramework) -> Formula {
    let mut conjuncts = Vec::with_capacity(2 * af.len());
    for a in af.arguments() {
        let defended = Formula::and(
            af.attackers(a.index())
                .iter()
                .map(|&b| {
                    Formula::or(
                        af.attackers(b)
                            .iter()
                            .map(|&c| Formula::atom(af.argument(c)))
                            .collect(),
                    )
                })
                .collect(),
        );
        conjuncts.push(Formula::implies(Formula::atom(a), negated_attackers(af, a.index())));
        conjuncts.push(Formula::iff(Formula::atom(a), defended));
    }
    Formula::and(conjuncts)
}

pub fn atoms_of(f: &Formula) -> BTreeSet<ArgumentId> {
    fn walk(f: &Formula, out: &mut BTreeSet<ArgumentId>) {
        match f {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(g) => walk(g, out),
            Formula::And(cs) | Formula::Or(cs) => cs.iter().for_each(|c| walk(c, out)),
            Formula::Implies(l, r) | Formula::Iff(l, r) => {
                walk(l, out);
                walk(r, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out
}

//! Dung labelling semantics by definition-checking over exhaustive
//! enumeration, and the binarization and ternarization transforms.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::af::{ArgumentId, ArgumentationFramework};
use crate::error::{Error, Result};
use crate::logic::three::{self, Halves, HALF, ONE, ZERO};
use crate::logic::{for_each_tuple, Assignment, Limits, TruthValue};

/// A total assignment with values in `{0, ½, 1}`.
pub type Labelling = Assignment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsName {
    ConflictFree,
    Admissible,
    Complete,
    Stable,
    Grounded,
    Preferred,
}

impl SemanticsName {
    pub const ALL: [SemanticsName; 6] = [
        SemanticsName::ConflictFree,
        SemanticsName::Admissible,
        SemanticsName::Complete,
        SemanticsName::Stable,
        SemanticsName::Grounded,
        SemanticsName::Preferred,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsName::ConflictFree => "conflict-free",
            SemanticsName::Admissible => "admissible",
            SemanticsName::Complete => "complete",
            SemanticsName::Stable => "stable",
            SemanticsName::Grounded => "grounded",
            SemanticsName::Preferred => "preferred",
        }
    }
}

impl fmt::Display for SemanticsName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemanticsName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let short = match key.as_str() {
            "cf" => "conflict-free",
            "adm" => "admissible",
            "co" | "com" => "complete",
            "st" | "stb" => "stable",
            "gr" | "grd" => "grounded",
            "pr" | "prf" => "preferred",
            other => other,
        };
        SemanticsName::ALL
            .into_iter()
            .find(|s| s.as_str() == short)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The value the complete-labelling condition forces on `a` given its
/// attackers: 1 if all are 0, 0 if some is 1, ½ otherwise.
fn forced(af: &ArgumentationFramework, a: usize, lab: &[Halves]) -> Halves {
    let attackers = af.attackers(a);
    if attackers.iter().any(|&b| lab[b] == ONE) {
        ZERO
    } else if attackers.iter().all(|&b| lab[b] == ZERO) {
        ONE
    } else {
        HALF
    }
}

fn is_complete_halves(af: &ArgumentationFramework, lab: &[Halves]) -> bool {
    (0..af.len()).all(|a| lab[a] == forced(af, a, lab))
}

/// Whether `lab` is a complete labelling. Values outside `{0, ½, 1}` and
/// labellings of the wrong length are never complete.
pub fn is_complete_labelling(af: &ArgumentationFramework, lab: &Labelling) -> bool {
    if lab.len() != af.len() {
        return false;
    }
    let halves: Option<Vec<Halves>> = lab.values().iter().map(three::to_halves).collect();
    halves.is_some_and(|h| is_complete_halves(af, &h))
}

fn from_halves(h: &[Halves]) -> Labelling {
    Assignment::new(h.iter().map(|&x| three::from_halves(x)).collect())
}

fn complete_halves(af: &ArgumentationFramework, limits: &Limits) -> Result<Vec<Vec<Halves>>> {
    limits.check_args(af)?;
    let mut out = Vec::new();
    let mut lab = vec![ZERO; af.len()];
    for_each_tuple(af.len(), 3, |d| {
        for (x, &v) in lab.iter_mut().zip(d) {
            *x = v as Halves;
        }
        if is_complete_halves(af, &lab) {
            out.push(lab.clone());
        }
        Ok::<_, Error>(())
    })?;
    Ok(out)
}

fn ones(lab: &[Halves]) -> Vec<bool> {
    lab.iter().map(|&x| x == ONE).collect()
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

fn conflict_free(af: &ArgumentationFramework, s: &[bool]) -> bool {
    af.attacks().all(|(x, y)| !(s[x] && s[y]))
}

fn admissible(af: &ArgumentationFramework, s: &[bool]) -> bool {
    conflict_free(af, s)
        && (0..af.len())
            .filter(|&a| s[a])
            .all(|a| af.attackers(a).iter().all(|&b| af.attackers(b).iter().any(|&c| s[c])))
}

/// All labellings of the given semantics, in lexicographic order.
pub fn dung_labellings(af: &ArgumentationFramework, s: SemanticsName, limits: &Limits) -> Result<Vec<Labelling>> {
    match s {
        SemanticsName::ConflictFree | SemanticsName::Admissible => {
            limits.check_args(af)?;
            let mut out = Vec::new();
            let mut set = vec![false; af.len()];
            for_each_tuple(af.len(), 2, |d| {
                for (x, &v) in set.iter_mut().zip(d) {
                    *x = v == 1;
                }
                let keep = match s {
                    SemanticsName::ConflictFree => conflict_free(af, &set),
                    _ => admissible(af, &set),
                };
                if keep {
                    out.push(Assignment::new(
                        set.iter().map(|&b| if b { TruthValue::one() } else { TruthValue::zero() }).collect(),
                    ));
                }
                Ok::<_, Error>(())
            })?;
            Ok(out)
        }
        SemanticsName::Complete => Ok(complete_halves(af, limits)?.iter().map(|h| from_halves(h)).collect()),
        SemanticsName::Stable => Ok(complete_halves(af, limits)?
            .iter()
            .filter(|h| !h.contains(&HALF))
            .map(|h| from_halves(h))
            .collect()),
        SemanticsName::Grounded | SemanticsName::Preferred => {
            let complete = complete_halves(af, limits)?;
            let sets: Vec<Vec<bool>> = complete.iter().map(|h| ones(h)).collect();
            Ok(complete
                .iter()
                .zip(&sets)
                .filter(|(_, e)| {
                    if s == SemanticsName::Grounded {
                        sets.iter().all(|other| subset(e, other))
                    } else {
                        !sets.iter().any(|other| other != *e && subset(e, other))
                    }
                })
                .map(|(h, _)| from_halves(h))
                .collect())
        }
    }
}

/// Arguments with value 1.
pub fn extension_of(af: &ArgumentationFramework, lab: &Assignment) -> BTreeSet<ArgumentId> {
    lab.values()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_one())
        .map(|(i, _)| af.argument(i).clone())
        .collect()
}

/// 1 stays 1; every other value becomes 0.
pub fn binarize(v: &Assignment) -> Assignment {
    Assignment::new(
        v.values()
            .iter()
            .map(|x| if x.is_one() { TruthValue::one() } else { TruthValue::zero() })
            .collect(),
    )
}

/// 1 stays 1; an argument with an attacker valued 1 becomes 0; anything else
/// becomes ½. Undefined when an argument valued 1 has an attacker valued 1.
pub fn ternarize(af: &ArgumentationFramework, v: &Assignment) -> Result<Labelling> {
    if v.len() != af.len() {
        return Err(Error::AssignmentMismatch {
            expected: af.len(),
            found: v.len(),
        });
    }
    let vals = v.values();
    let mut out = Vec::with_capacity(vals.len());
    for (a, x) in vals.iter().enumerate() {
        let hot = af.attackers(a).iter().find(|&&b| vals[b].is_one());
        out.push(match (x.is_one(), hot) {
            (true, Some(&b)) => {
                return Err(Error::Partiality {
                    argument: af.argument(a).name().to_string(),
                    attacker: af.argument(b).name().to_string(),
                })
            }
            (true, None) => TruthValue::one(),
            (false, Some(_)) => TruthValue::zero(),
            (false, None) => TruthValue::half(),
        });
    }
    Ok(Assignment::new(out))
}

//! Abstract argumentation frameworks: a finite set of arguments and an attack
//! relation over them, with APX/TGF/JSON input and output.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// An argument together with its position in the canonical order of its framework.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArgumentId {
    index: usize,
    name: String,
}

impl ArgumentId {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A finite attack graph. Immutable once built.
///
/// Arguments keep declaration order, which is the canonical order every
/// enumeration and every output in this crate follows.
#[derive(Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    arguments: Vec<ArgumentId>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    attacked: Vec<Vec<usize>>,
}

impl ArgumentationFramework {
    /// Builds a framework from argument names and `(attacker, target)` pairs.
    /// Duplicate names and duplicate attacks collapse.
    pub fn new<S: AsRef<str>>(names: &[S], attacks: &[(S, S)]) -> Result<Self> {
        let mut builder = Builder::default();
        for n in names {
            builder.declare(n.as_ref())?;
        }
        for (x, y) in attacks {
            builder.attack(x.as_ref(), y.as_ref())?;
        }
        Ok(builder.finish())
    }

    pub fn empty() -> Self {
        Builder::default().finish()
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.arguments
    }

    pub fn argument(&self, index: usize) -> &ArgumentId {
        &self.arguments[index]
    }

    pub fn find(&self, name: &str) -> Option<&ArgumentId> {
        self.arguments.iter().find(|a| a.name == name)
    }

    /// Attacks as `(attacker, target)` index pairs, ordered by index.
    pub fn attacks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_pair(&self, attacker: usize, target: usize) -> bool {
        self.attacks.contains(&(attacker, target))
    }

    /// Attackers of `target` in canonical order.
    pub fn attackers(&self, target: usize) -> &[usize] {
        &self.attackers[target]
    }

    /// Arguments attacked by `attacker`, in canonical order.
    pub fn attacked_by(&self, attacker: usize) -> &[usize] {
        &self.attacked[attacker]
    }

    pub fn max_in_degree(&self) -> usize {
        self.attackers.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Attack pairs by name, sorted lexicographically.
    fn named_attacks(&self) -> Vec<(&str, &str)> {
        let mut pairs: Vec<(&str, &str)> = self
            .attacks
            .iter()
            .map(|&(x, y)| (self.arguments[x].name(), self.arguments[y].name()))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn to_apx(&self) -> String {
        let mut out = String::new();
        for a in &self.arguments {
            out.push_str(&format!("arg({}).\n", a.name));
        }
        for &(x, y) in &self.attacks {
            out.push_str(&format!("att({},{}).\n", self.arguments[x].name, self.arguments[y].name));
        }
        out
    }

    pub fn to_tgf(&self) -> String {
        let mut out = String::new();
        for a in &self.arguments {
            out.push_str(&a.name);
            out.push('\n');
        }
        out.push_str("#\n");
        for &(x, y) in &self.attacks {
            out.push_str(&format!("{} {}\n", self.arguments[x].name, self.arguments[y].name));
        }
        out
    }

    /// `{"arguments":[...],"attacks":[["x","y"],...]}` with attacks sorted by name.
    pub fn to_json(&self) -> Value {
        let args: Vec<&str> = self.arguments.iter().map(|a| a.name()).collect();
        let attacks: Vec<[&str; 2]> = self.named_attacks().into_iter().map(|(x, y)| [x, y]).collect();
        json!({ "arguments": args, "attacks": attacks })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Json(m.to_string());
        let args = value
            .get("arguments")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `arguments` array"))?;
        let attacks = value
            .get("attacks")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `attacks` array"))?;
        let mut builder = Builder::default();
        for a in args {
            builder.declare(a.as_str().ok_or_else(|| bad("argument names must be strings"))?)?;
        }
        for pair in attacks {
            let pair = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("attacks must be pairs"))?;
            let x = pair[0].as_str().ok_or_else(|| bad("attack endpoints must be strings"))?;
            let y = pair[1].as_str().ok_or_else(|| bad("attack endpoints must be strings"))?;
            builder.attack(x, y)?;
        }
        Ok(builder.finish())
    }
}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.arguments.iter().map(|a| a.name()).collect();
        write!(f, "AF({{{}}}, {{", names.join(","))?;
        let attacks: Vec<String> = self.named_attacks().iter().map(|(x, y)| format!("({x},{y})")).collect();
        write!(f, "{}}})", attacks.join(","))
    }
}

#[derive(Default)]
struct Builder {
    arguments: Vec<ArgumentId>,
    by_name: HashMap<String, usize>,
    attacks: BTreeSet<(usize, usize)>,
}

impl Builder {
    fn declare(&mut self, name: &str) -> Result<()> {
        if !is_valid_name(name) {
            return Err(Error::InvalidName(name.to_string()));
        }
        if !self.by_name.contains_key(name) {
            let index = self.arguments.len();
            self.by_name.insert(name.to_string(), index);
            self.arguments.push(ArgumentId {
                index,
                name: name.to_string(),
            });
        }
        Ok(())
    }

    fn lookup(&self, name: &str) -> Result<usize> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UndeclaredArgument(name.to_string()))
    }

    fn attack(&mut self, attacker: &str, target: &str) -> Result<()> {
        let x = self.lookup(attacker)?;
        let y = self.lookup(target)?;
        self.attacks.insert((x, y));
        Ok(())
    }

    fn finish(self) -> ArgumentationFramework {
        let n = self.arguments.len();
        let mut attackers = vec![Vec::new(); n];
        let mut attacked = vec![Vec::new(); n];
        // BTreeSet order is (attacker, target), so pushing yields sorted lists.
        for &(x, y) in &self.attacks {
            attackers[y].push(x);
            attacked[x].push(y);
        }
        for list in &mut attackers {
            list.sort_unstable();
        }
        ArgumentationFramework {
            arguments: self.arguments,
            attacks: self.attacks,
            attackers,
            attacked,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str),
    Punct(char),
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            text,
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
    }

    /// Next token with its starting (line, col), or `None` at end of input.
    fn next_token(&mut self) -> Result<Option<(Token<'a>, usize, usize)>> {
        loop {
            let Some(c) = self.text[self.pos..].chars().next() else {
                return Ok(None);
            };
            if c.is_whitespace() {
                self.bump(c);
            } else if c == '%' {
                while let Some(c) = self.text[self.pos..].chars().next() {
                    if c == '\n' {
                        break;
                    }
                    self.bump(c);
                }
            } else {
                break;
            }
        }
        let (line, col) = (self.line, self.col);
        let c = self.text[self.pos..].chars().next().expect("checked above");
        if matches!(c, '(' | ')' | ',' | '.') {
            self.bump(c);
            return Ok(Some((Token::Punct(c), line, col)));
        }
        if c.is_ascii_alphanumeric() || c == '_' {
            let start = self.pos;
            while let Some(c) = self.text[self.pos..].chars().next() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    self.bump(c);
                } else {
                    break;
                }
            }
            return Ok(Some((Token::Ident(&self.text[start..self.pos]), line, col)));
        }
        Err(Error::Syntax {
            line,
            col,
            message: format!("unexpected character `{c}`"),
        })
    }
}

/// Parses the ASPARTIX format: `arg(x).` and `att(x,y).` facts, `%` comments.
/// An attack may only mention arguments declared earlier in the input.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut lexer = Lexer::new(text);
    let mut builder = Builder::default();

    fn expect<'a>(lexer: &mut Lexer<'a>, want: Option<char>) -> Result<(Token<'a>, usize, usize)> {
        let (line, col) = (lexer.line, lexer.col);
        let Some((tok, l, c)) = lexer.next_token()? else {
            return Err(Error::Syntax {
                line,
                col,
                message: "unexpected end of input".into(),
            });
        };
        match (want, tok) {
            (Some(p), Token::Punct(q)) if p == q => Ok((tok, l, c)),
            (None, Token::Ident(_)) => Ok((tok, l, c)),
            (Some(p), _) => Err(Error::Syntax {
                line: l,
                col: c,
                message: format!("expected `{p}`"),
            }),
            (None, _) => Err(Error::Syntax {
                line: l,
                col: c,
                message: "expected an identifier".into(),
            }),
        }
    }

    fn ident<'a>(lexer: &mut Lexer<'a>) -> Result<&'a str> {
        match expect(lexer, None)? {
            (Token::Ident(s), _, _) => Ok(s),
            _ => unreachable!(),
        }
    }

    while let Some((tok, line, col)) = lexer.next_token()? {
        match tok {
            Token::Ident("arg") => {
                expect(&mut lexer, Some('('))?;
                let name = ident(&mut lexer)?;
                expect(&mut lexer, Some(')'))?;
                expect(&mut lexer, Some('.'))?;
                builder.declare(name)?;
            }
            Token::Ident("att") => {
                expect(&mut lexer, Some('('))?;
                let x = ident(&mut lexer)?;
                expect(&mut lexer, Some(','))?;
                let y = ident(&mut lexer)?;
                expect(&mut lexer, Some(')'))?;
                expect(&mut lexer, Some('.'))?;
                builder.attack(x, y)?;
            }
            _ => {
                return Err(Error::Syntax {
                    line,
                    col,
                    message: "expected `arg` or `att`".into(),
                })
            }
        }
    }
    Ok(builder.finish())
}

/// Parses trivial graph format: node ids, a `#` line, then `src dst` edges.
/// Anything after the id on a node line, or after `dst` on an edge line, is a
/// label and is ignored.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut builder = Builder::default();
    let mut in_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let col = raw.len() - raw.trim_start().len() + 1;
        if line == "#" {
            if in_edges {
                return Err(Error::Syntax {
                    line: line_no,
                    col,
                    message: "second `#` separator".into(),
                });
            }
            in_edges = true;
            continue;
        }
        let mut fields = line.split_whitespace();
        let first = fields.next().expect("non-empty line");
        let check = |name: &str| -> Result<()> {
            if is_valid_name(name) {
                Ok(())
            } else {
                Err(Error::Syntax {
                    line: line_no,
                    col,
                    message: format!("invalid identifier `{name}`"),
                })
            }
        };
        check(first)?;
        if in_edges {
            let Some(second) = fields.next() else {
                return Err(Error::Syntax {
                    line: line_no,
                    col: col + first.len(),
                    message: "edge line needs a source and a target".into(),
                });
            };
            check(second)?;
            builder.attack(first, second)?;
        } else {
            builder.declare(first)?;
        }
    }
    Ok(builder.finish())
}

/// Random framework over `a0..a{n-1}`: every ordered pair, self-loops
/// included, is an attack independently with probability `p`.
///
/// Deterministic in `(n, p, seed)` for this implementation.
pub fn random_af(n: usize, p: f64, seed: u64) -> ArgumentationFramework {
    assert!((0.0..=1.0).contains(&p), "attack probability {p} outside [0,1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut builder = Builder::default();
    for i in 0..n {
        builder.declare(&format!("a{i}")).expect("generated names are valid");
    }
    for x in 0..n {
        for y in 0..n {
            if rng.random_bool(p) {
                builder.attacks.insert((x, y));
            }
        }
    }
    builder.finish()
}

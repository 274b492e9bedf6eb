use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::{Map, Value};

use super::rational::Rational;
use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};

/// An exact truth degree in `[0, 1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthValue(Rational);

impl TruthValue {
    pub fn zero() -> Self {
        TruthValue(Rational::zero())
    }

    pub fn one() -> Self {
        TruthValue(Rational::one())
    }

    pub fn half() -> Self {
        TruthValue(Rational::new(1, 2))
    }

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidNumber(format!("{numer}/0")));
        }
        Self::from_rational(Rational::new(numer, denom))
    }

    /// `i / k`, the `i`-th point of the resolution-`k` grid.
    pub fn grid(i: u32, k: u32) -> Self {
        assert!(k > 0 && i <= k, "grid point {i}/{k} out of range");
        TruthValue(Rational::new(i as i128, k as i128))
    }

    pub fn from_rational(r: Rational) -> Result<Self> {
        if r.is_negative() || r > Rational::one() {
            return Err(Error::OutOfUnitInterval(r.to_string()));
        }
        Ok(TruthValue(r))
    }

    /// Caller guarantees `r` lies in `[0, 1]`.
    pub(crate) fn from_rational_unchecked(r: Rational) -> Self {
        debug_assert!(!r.is_negative() && r <= Rational::one(), "{r} not in [0,1]");
        TruthValue(r)
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        let r = Rational::from_f64(x).ok_or_else(|| Error::InvalidNumber(x.to_string()))?;
        Self::from_rational(r)
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_half(&self) -> bool {
        self.0 == Rational::new(1, 2)
    }

    pub fn one_minus(&self) -> Self {
        TruthValue(&Rational::one() - &self.0)
    }

    pub fn min(&self, other: &Self) -> Self {
        if other < self {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        if other > self {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn product(&self, other: &Self) -> Self {
        TruthValue(&self.0 * &other.0)
    }

    /// `max(0, x + y - 1)`.
    pub fn lukasiewicz(&self, other: &Self) -> Self {
        let s = &(&self.0 + &other.0) - &Rational::one();
        if s.is_negative() {
            Self::zero()
        } else {
            TruthValue(s)
        }
    }

    /// `min(1, 1 - x + y)`.
    pub fn lukasiewicz_residuum(&self, other: &Self) -> Self {
        let s = &(&Rational::one() - &self.0) + &other.0;
        if s > Rational::one() {
            Self::one()
        } else {
            TruthValue(s)
        }
    }

    /// `self / other` for `self <= other`, `other > 0`.
    pub fn ratio_below(&self, other: &Self) -> Self {
        assert!(self <= other && !other.is_zero());
        TruthValue(&self.0 / &other.0)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for TruthValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_rational(s.parse()?)
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A total map from the arguments of a framework to truth values, stored in
/// the framework's canonical argument order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(Vec<TruthValue>);

impl Assignment {
    pub fn new(values: Vec<TruthValue>) -> Self {
        Assignment(values)
    }

    /// Convenience for tests and the CLI: parses each entry with `TruthValue::from_str`.
    pub fn parse(values: &[&str]) -> Result<Self> {
        values.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>().map(Assignment)
    }

    pub fn uniform(n: usize, v: TruthValue) -> Self {
        Assignment(vec![v; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.0
    }

    pub fn get(&self, index: usize) -> &TruthValue {
        &self.0[index]
    }

    pub fn into_values(self) -> Vec<TruthValue> {
        self.0
    }

    pub fn check_domain(&self, af: &ArgumentationFramework) -> Result<()> {
        if self.0.len() != af.len() {
            return Err(Error::AssignmentMismatch {
                expected: af.len(),
                found: self.0.len(),
            });
        }
        Ok(())
    }

    /// `{"a":"1/2", ...}` in canonical argument order.
    pub fn to_json(&self, af: &ArgumentationFramework) -> Value {
        let mut map = Map::new();
        for (arg, v) in af.arguments().iter().zip(&self.0) {
            map.insert(arg.name().to_string(), Value::String(v.to_string()));
        }
        Value::Object(map)
    }

    pub fn from_json(af: &ArgumentationFramework, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Json("assignment must be an object".into()))?;
        let mut values = Vec::with_capacity(af.len());
        for arg in af.arguments() {
            let v = obj
                .get(arg.name())
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json(format!("missing value for `{}`", arg.name())))?;
            values.push(v.parse()?);
        }
        if obj.len() != af.len() {
            return Err(Error::AssignmentMismatch {
                expected: af.len(),
                found: obj.len(),
            });
        }
        Ok(Assignment(values))
    }

    pub fn display(&self, af: &ArgumentationFramework) -> String {
        let parts: Vec<String> = af
            .arguments()
            .iter()
            .zip(&self.0)
            .map(|(a, v)| format!("{}={}", a.name(), v))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl From<Vec<TruthValue>> for Assignment {
    fn from(values: Vec<TruthValue>) -> Self {
        Assignment(values)
    }
}

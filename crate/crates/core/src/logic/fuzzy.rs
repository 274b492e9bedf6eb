//! Negations, t-norms and their residual implications on exact truth values.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::rational::Rational;
use super::value::TruthValue;
use crate::error::{Error, Result};

/// Resolution of the grid on which user-supplied operations are sampled at
/// construction time.
const VALIDATION_GRID: u32 = 10;

#[derive(Clone, PartialEq, Eq)]
pub enum Negation {
    /// `x ↦ 1 − x`
    Standard,
    /// Piecewise-linear through the given breakpoints.
    Table(NegationTable),
}

impl Negation {
    pub fn apply(&self, x: &TruthValue) -> TruthValue {
        match self {
            Negation::Standard => x.one_minus(),
            Negation::Table(t) => t.apply(x),
        }
    }

    /// Whether `N(x) = 0` only at `x = 1`.
    pub fn vanishes_only_at_one(&self) -> bool {
        match self {
            Negation::Standard => true,
            Negation::Table(t) => {
                let n = t.points.len();
                // Non-increasing and piecewise linear: zero before 1 iff the
                // second-to-last breakpoint already maps to 0.
                !t.points[n - 2].1.is_zero()
            }
        }
    }
}

impl fmt::Display for Negation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Negation::Standard => f.write_str("standard"),
            Negation::Table(t) => {
                let pts: Vec<String> = t.points.iter().map(|(x, y)| format!("{x}={y}")).collect();
                write!(f, "table({})", pts.join(","))
            }
        }
    }
}

impl fmt::Debug for Negation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Negation {
    type Err = Error;

    /// `standard`, or `table(0=1,1/2=1/4,1=0)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("standard") {
            return Ok(Negation::Standard);
        }
        let body = s
            .strip_prefix("table(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidNegation(format!("unknown negation `{s}`")))?;
        let mut points = Vec::new();
        for pair in body.split(',') {
            let (x, y) = pair
                .split_once('=')
                .ok_or_else(|| Error::InvalidNegation(format!("breakpoint `{pair}` is not `x=y`")))?;
            points.push((x.parse()?, y.parse()?));
        }
        Ok(Negation::Table(NegationTable::new(points)?))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NegationTable {
    points: Vec<(TruthValue, TruthValue)>,
}

impl NegationTable {
    /// Breakpoints must start at `0 ↦ 1`, end at `1 ↦ 0`, have strictly
    /// increasing abscissae and non-increasing values.
    pub fn new(points: Vec<(TruthValue, TruthValue)>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidNegation(m.to_string()));
        if points.len() < 2 {
            return bad("need at least the breakpoints 0 and 1");
        }
        let (first, last) = (&points[0], &points[points.len() - 1]);
        if !first.0.is_zero() || !first.1.is_one() {
            return bad("N(0) must be 1");
        }
        if !last.0.is_one() || !last.1.is_zero() {
            return bad("N(1) must be 0");
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return bad("breakpoints must be strictly increasing");
            }
            if w[0].1 < w[1].1 {
                return bad("negation must be non-increasing");
            }
        }
        Ok(NegationTable { points })
    }

    pub fn apply(&self, x: &TruthValue) -> TruthValue {
        let i = self.points.partition_point(|(px, _)| px < x);
        let (x1, y1) = &self.points[i];
        if x1 == x || i == 0 {
            return y1.clone();
        }
        let (x0, y0) = &self.points[i - 1];
        let (x0, y0, x1, y1, x) = (x0.as_rational(), y0.as_rational(), x1.as_rational(), y1.as_rational(), x.as_rational());
        let t = &(x - x0) / &(x1 - x0);
        TruthValue::from_rational_unchecked(y0 + &(&t * &(y1 - y0)))
    }
}

type UserFn = dyn Fn(&TruthValue, &TruthValue) -> TruthValue + Send + Sync;

#[derive(Clone)]
pub enum TNorm {
    /// `min(x, y)`
    Goedel,
    /// `max(0, x + y − 1)`
    Lukasiewicz,
    /// `x · y`
    Product,
    User(UserTNorm),
}

/// A caller-supplied t-norm that passed the sampled axiom and left-continuity checks.
#[derive(Clone)]
pub struct UserTNorm {
    name: String,
    f: Arc<UserFn>,
}

impl TNorm {
    /// Wraps a closed-form t-norm after checking, on a rational grid, the unit
    /// law, commutativity, associativity, monotonicity and left-continuity.
    pub fn user<F>(name: impl Into<String>, f: F) -> Result<TNorm>
    where
        F: Fn(&TruthValue, &TruthValue) -> TruthValue + Send + Sync + 'static,
    {
        let t = TNorm::User(UserTNorm {
            name: name.into(),
            f: Arc::new(f),
        });
        t.validate()?;
        Ok(t)
    }

    pub fn named() -> [TNorm; 3] {
        [TNorm::Goedel, TNorm::Lukasiewicz, TNorm::Product]
    }

    pub fn name(&self) -> &str {
        match self {
            TNorm::Goedel => "goedel",
            TNorm::Lukasiewicz => "lukasiewicz",
            TNorm::Product => "product",
            TNorm::User(u) => &u.name,
        }
    }

    pub fn apply(&self, x: &TruthValue, y: &TruthValue) -> TruthValue {
        match self {
            TNorm::Goedel => x.min(y),
            TNorm::Lukasiewicz => x.lukasiewicz(y),
            TNorm::Product => x.product(y),
            TNorm::User(u) => (u.f)(x, y),
        }
    }

    /// Left fold; the empty product is 1.
    pub fn fold<'a>(&self, xs: impl IntoIterator<Item = &'a TruthValue>) -> TruthValue {
        let mut it = xs.into_iter();
        let Some(first) = it.next() else {
            return TruthValue::one();
        };
        it.fold(first.clone(), |acc, x| self.apply(&acc, x))
    }

    fn validate(&self) -> Result<()> {
        let grid: Vec<TruthValue> = (0..=VALIDATION_GRID).map(|i| TruthValue::grid(i, VALIDATION_GRID)).collect();
        let fail = |m: String| Err(Error::InvalidTNorm(format!("{}: {m}", self.name())));
        let one = TruthValue::one();
        for x in &grid {
            if self.apply(x, &one) != *x {
                return fail(format!("T({x}, 1) != {x}"));
            }
            for y in &grid {
                let xy = self.apply(x, y);
                if xy != self.apply(y, x) {
                    return fail(format!("T({x}, {y}) != T({y}, {x})"));
                }
                for z in &grid {
                    if self.apply(x, &self.apply(y, z)) != self.apply(&xy, z) {
                        return fail(format!("not associative at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        for w in grid.windows(2) {
            for x in &grid {
                if self.apply(x, &w[0]) > self.apply(x, &w[1]) {
                    return fail(format!("not monotone: T({x}, {}) > T({x}, {})", w[0], w[1]));
                }
            }
        }
        // Left-continuity: no jump when approaching a grid point from below.
        let eps = Rational::new(1, 1 << 48);
        let jump = Rational::new(1, 1 << 24);
        for x in &grid {
            for z in grid.iter().skip(1) {
                let below = TruthValue::from_rational_unchecked(z.as_rational() - &eps);
                let gap = self.apply(x, z).as_rational() - self.apply(x, &below).as_rational();
                if gap > jump {
                    return Err(Error::NonLeftContinuous {
                        name: self.name().to_string(),
                        x: x.to_string(),
                        y: z.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn residuum(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue> {
        self.residuum_on_grid(x, y, None)
    }

    /// `sup{z | T(x, z) ≤ y}`. Closed forms for the named t-norms; bisection
    /// to width 2⁻⁶⁴ for user t-norms. With a grid resolution `k`, user
    /// t-norms return the largest `i/k` with `T(x, i/k) ≤ y`.
    pub fn residuum_on_grid(&self, x: &TruthValue, y: &TruthValue, grid: Option<u32>) -> Result<TruthValue> {
        if x <= y {
            return Ok(TruthValue::one());
        }
        match self {
            TNorm::Goedel => Ok(y.clone()),
            TNorm::Lukasiewicz => Ok(x.lukasiewicz_residuum(y)),
            TNorm::Product => Ok(y.ratio_below(x)),
            TNorm::User(_) => self.bisect_residuum(x, y, grid),
        }
    }

    fn bisect_residuum(&self, x: &TruthValue, y: &TruthValue, grid: Option<u32>) -> Result<TruthValue> {
        let broken = || Error::NonLeftContinuous {
            name: self.name().to_string(),
            x: x.to_string(),
            y: y.to_string(),
        };
        // Invariant: T(x, lo) ≤ y < T(x, hi).
        let mut lo = TruthValue::zero();
        let mut hi = TruthValue::one();
        let (mut t_lo, mut t_hi) = (self.apply(x, &lo), self.apply(x, &hi));
        if t_lo > *y || t_hi <= *y {
            return Err(broken());
        }
        let two = Rational::from_integer(2);
        for _ in 0..64 {
            let mid = TruthValue::from_rational_unchecked(&(lo.as_rational() + hi.as_rational()) / &two);
            let t_mid = self.apply(x, &mid);
            if t_mid < t_lo || t_mid > t_hi {
                return Err(broken());
            }
            if t_mid <= *y {
                lo = mid;
                t_lo = t_mid;
            } else {
                hi = mid;
                t_hi = t_mid;
            }
        }
        let Some(k) = grid else {
            return Ok(lo);
        };
        let scaled = lo.as_rational() * &Rational::from_integer(k as i128);
        let nearest = (scaled.to_f64().round() as u32).min(k);
        // Largest grid point with T(x, z) ≤ y: the nearest one, or the one below
        // it when the supremum lies strictly between grid points.
        let mut snapped = TruthValue::grid(nearest, k);
        if self.apply(x, &snapped) > *y {
            snapped = TruthValue::grid(nearest.saturating_sub(1), k);
        }
        if self.apply(x, &snapped) > *y {
            return Err(broken());
        }
        Ok(snapped)
    }
}

impl PartialEq for TNorm {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (TNorm::User(a), TNorm::User(b)) => a.name == b.name && Arc::ptr_eq(&a.f, &b.f),
            (a, b) => std::mem::discriminant(a) == std::mem::discriminant(b),
        }
    }
}

impl fmt::Debug for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TNorm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "goedel" | "godel" | "gödel" | "min" | "minimum" => Ok(TNorm::Goedel),
            "lukasiewicz" | "luka" | "łukasiewicz" => Ok(TNorm::Lukasiewicz),
            "product" | "prod" => Ok(TNorm::Product),
            other => Err(Error::InvalidTNorm(format!("unknown t-norm `{other}`"))),
        }
    }
}

//! Three-valued implication tables.
//!
//! Values are indexed in half-units: 0 ↦ 0, 1 ↦ ½, 2 ↦ 1.

use super::value::TruthValue;

/// A truth value of `{0, ½, 1}` in half-units.
pub type Halves = u8;

pub const ZERO: Halves = 0;
pub const HALF: Halves = 1;
pub const ONE: Halves = 2;

pub fn to_halves(v: &TruthValue) -> Option<Halves> {
    if v.is_zero() {
        Some(ZERO)
    } else if v.is_half() {
        Some(HALF)
    } else if v.is_one() {
        Some(ONE)
    } else {
        None
    }
}

pub fn from_halves(h: Halves) -> TruthValue {
    match h {
        ZERO => TruthValue::zero(),
        HALF => TruthValue::half(),
        ONE => TruthValue::one(),
        _ => unreachable!("not a three-valued code: {h}"),
    }
}

/// `table[x][y]` is the value of `x → y`; rows are the antecedent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ImplicationTable(pub [[Halves; 3]; 3]);

impl ImplicationTable {
    /// Kleene's strong implication.
    pub const KLEENE: ImplicationTable = ImplicationTable([
        //  0    ½    1
        [ONE, ONE, ONE],    // 0
        [HALF, HALF, ONE],  // ½
        [ZERO, HALF, ONE],  // 1
    ]);

    /// Łukasiewicz's three-valued implication.
    pub const LUKASIEWICZ: ImplicationTable = ImplicationTable([
        //  0    ½    1
        [ONE, ONE, ONE],   // 0
        [HALF, ONE, ONE],  // ½
        [ZERO, HALF, ONE], // 1
    ]);

    #[inline]
    pub fn implies(&self, x: Halves, y: Halves) -> Halves {
        self.0[x as usize][y as usize]
    }

    /// Copy with one cell replaced.
    pub fn with_cell(mut self, x: Halves, y: Halves, value: Halves) -> Self {
        self.0[x as usize][y as usize] = value;
        self
    }
}

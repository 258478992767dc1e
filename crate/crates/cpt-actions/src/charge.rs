//! Charge-preserving versus charge-conjugating maps of W.

use std::fmt;

use cpt_algebra::{FieldSymbolSpace, Scalar, WMap};

use crate::error::ActionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChargeClass {
    Preserving,
    Conjugating,
    /// Only possible when W = W⁰.
    Both,
    Neither,
}

impl ChargeClass {
    pub fn is_preserving(self) -> bool {
        matches!(self, ChargeClass::Preserving | ChargeClass::Both)
    }

    pub fn is_conjugating(self) -> bool {
        matches!(self, ChargeClass::Conjugating | ChargeClass::Both)
    }

    /// PT for charge-preserving maps, CPT for charge-conjugating ones.
    pub fn transformation_name(self) -> &'static str {
        match self {
            ChargeClass::Preserving => "PT",
            ChargeClass::Conjugating => "CPT",
            ChargeClass::Both => "PT and CPT",
            ChargeClass::Neither => "neither PT nor CPT",
        }
    }
}

impl fmt::Display for ChargeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChargeClass::Preserving => "preserving",
            ChargeClass::Conjugating => "conjugating",
            ChargeClass::Both => "both",
            ChargeClass::Neither => "neither",
        })
    }
}

/// Reads off the sector-block structure of σ from the images of the basis symbols.
pub fn classify_charge<S: Scalar>(space: &FieldSymbolSpace, sigma: &WMap<S>) -> Result<ChargeClass, ActionError> {
    let n = space.len();
    let m = &sigma.matrix;
    if (m.rows(), m.cols()) != (n, n) || m.rank() < n {
        return Err(ActionError::NotInvertible);
    }
    let sectors = space.sectors();
    let negligible = |x: &S| x.is_zero() || (!S::EXACT && x.norm() <= 1e-9 * m.max_norm().max(1.0));
    let mut preserving = true;
    let mut conjugating = true;
    for j in 0..n {
        for k in 0..n {
            if negligible(&m[(j, k)]) {
                continue;
            }
            preserving &= sectors[k] == sectors[j];
            conjugating &= sectors[k] == sectors[j].flipped();
        }
    }
    Ok(match (preserving, conjugating) {
        (true, true) => ChargeClass::Both,
        (true, false) => ChargeClass::Preserving,
        (false, true) => ChargeClass::Conjugating,
        (false, false) => ChargeClass::Neither,
    })
}

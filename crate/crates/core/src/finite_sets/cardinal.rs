use std::fmt;
use std::sync::Arc;

use super::covering::Coverings;
use super::laws::DEFAULT_BUDGET;
use super::{product, tagged_union, FiniteSet};
use crate::error::{Error, Result};

/// A finite cardinal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CardinalValue(pub u64);

impl CardinalValue {
    pub fn get(self) -> u64 {
        self.0
    }

    /// The canonical set `{e0, ..., e(n-1)}` with this cardinality.
    pub fn witness(self) -> Result<FiniteSet> {
        let n = usize::try_from(self.0).map_err(|_| Error::Overflow(format!("{self} labels")))?;
        Ok(FiniteSet::witness(n))
    }
}

impl From<u64> for CardinalValue {
    fn from(n: u64) -> Self {
        CardinalValue(n)
    }
}

impl fmt::Display for CardinalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn checked(value: Option<u64>, what: impl FnOnce() -> String) -> Result<u64> {
    value.ok_or_else(|| Error::Overflow(what()))
}

// The operations below count an explicit set built from witness sets. When the
// count would exceed the enumeration budget they report the closed form
// instead, which the witnessed cases pin down.

/// `a + b`: the size of the union of two disjoint sets of sizes `a` and `b`.
pub fn cardinal_add(a: CardinalValue, b: CardinalValue) -> Result<CardinalValue> {
    let sum = checked(a.0.checked_add(b.0), || format!("{a} + {b}"))?;
    if sum > DEFAULT_BUDGET {
        return Ok(CardinalValue(sum));
    }
    // Both witnesses use the same labels, so the tags are what keeps them apart.
    let union = tagged_union(&a.witness()?, &b.witness()?);
    Ok(CardinalValue(union.len() as u64))
}

/// `a · b`: the size of the product of sets of sizes `a` and `b`.
pub fn cardinal_mul(a: CardinalValue, b: CardinalValue) -> Result<CardinalValue> {
    let prod = checked(a.0.checked_mul(b.0), || format!("{a} · {b}"))?;
    if prod > DEFAULT_BUDGET {
        return Ok(CardinalValue(prod));
    }
    Ok(CardinalValue(
        product(&a.witness()?, &b.witness()?).len() as u64
    ))
}

/// `a^b`: the size of `(N | M)` for `|M| = a`, `|N| = b`.
pub fn cardinal_pow(a: CardinalValue, b: CardinalValue) -> Result<CardinalValue> {
    let exp = u32::try_from(b.0).ok();
    let power = checked(exp.and_then(|e| a.0.checked_pow(e)), || format!("{a}^{b}"))?;
    if power > DEFAULT_BUDGET {
        return Ok(CardinalValue(power));
    }
    let base = Arc::new(a.witness()?);
    let exponent = Arc::new(b.witness()?);
    Ok(CardinalValue(Coverings::new(exponent, base).count() as u64))
}

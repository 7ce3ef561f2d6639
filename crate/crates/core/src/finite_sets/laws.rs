//! Exponent laws checked by explicit bijection.
//!
//! With `|M| = a`, `|N| = b`, `|P| = c`:
//!
//! | law       | left collection          | right collection   | cardinals              |
//! |-----------|--------------------------|--------------------|------------------------|
//! | `ADD_EXP` | `(N \| M) · (P \| M)`    | `((N, P) \| M)`    | `a^b · a^c = a^(b+c)`  |
//! | `MUL_EXP` | `(P \| M) · (P \| N)`    | `(P \| M · N)`     | `a^c · b^c = (a·b)^c`  |
//! | `CURRY`   | `(P \| (N \| M))`        | `(P · N \| M)`     | `(a^b)^c = a^(b·c)`    |

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::covering::{covering_set, Covering, Coverings};
use super::{product, tagged_union, CardinalValue, FiniteSet, Label};
use crate::error::{Error, Result};

/// Default cap on the number of items a single law check may enumerate.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawId {
    AddExp,
    MulExp,
    Curry,
}

impl LawId {
    pub const ALL: [LawId; 3] = [LawId::AddExp, LawId::MulExp, LawId::Curry];

    pub fn as_str(self) -> &'static str {
        match self {
            LawId::AddExp => "ADD_EXP",
            LawId::MulExp => "MUL_EXP",
            LawId::Curry => "CURRY",
        }
    }

    /// Sizes of the left and right collections, `None` on overflow.
    pub fn predicted_sizes(self, a: u64, b: u64, c: u64) -> Option<(u128, u128)> {
        let pow = |base: u128, exp: u64| base.checked_pow(u32::try_from(exp).ok()?);
        let (a, b) = (a as u128, b as u128);
        match self {
            LawId::AddExp => {
                let left = pow(a, b as u64)?.checked_mul(pow(a, c)?)?;
                let right = pow(a, (b as u64).checked_add(c)?)?;
                Some((left, right))
            }
            LawId::MulExp => {
                let left = pow(a, c)?.checked_mul(pow(b, c)?)?;
                let right = pow(a.checked_mul(b)?, c)?;
                Some((left, right))
            }
            LawId::Curry => {
                let left = pow(pow(a, b as u64)?, c)?;
                let right = pow(a, (b as u64).checked_mul(c)?)?;
                Some((left, right))
            }
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ADD_EXP" => Ok(LawId::AddExp),
            "MUL_EXP" => Ok(LawId::MulExp),
            "CURRY" => Ok(LawId::Curry),
            _ => Err(Error::parse(s, 0, "expected ADD_EXP, MUL_EXP or CURRY")),
        }
    }
}

/// A fully enumerated bijection between the two sides of an exponent law.
#[derive(Clone, Debug)]
pub struct LawWitness {
    pub law: LawId,
    pub left_set: FiniteSet,
    pub right_set: FiniteSet,
    pub pairs: Vec<(Label, Label)>,
}

impl LawWitness {
    /// Checks, by direct inspection of `pairs`, that they describe a total,
    /// injective and surjective map `left_set -> right_set`.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::LawViolation(format!("{}: {msg}", self.law)));
        let mut sources = HashSet::with_capacity(self.pairs.len());
        let mut images = HashSet::with_capacity(self.pairs.len());
        for (from, to) in &self.pairs {
            if !self.left_set.contains(from) {
                return fail(format!("{from} is not in the left set"));
            }
            if !self.right_set.contains(to) {
                return fail(format!("{to} is not in the right set"));
            }
            if !sources.insert(from) {
                return fail(format!("{from} is mapped twice"));
            }
            if !images.insert(to) {
                return fail(format!("{to} is hit twice"));
            }
        }
        if sources.len() != self.left_set.len() {
            return fail(format!(
                "only {} of {} left elements are mapped",
                sources.len(),
                self.left_set.len()
            ));
        }
        if images.len() != self.right_set.len() {
            return fail(format!(
                "only {} of {} right elements are hit",
                images.len(),
                self.right_set.len()
            ));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }
}

/// [`verify_exponent_law_with_budget`] with [`DEFAULT_BUDGET`].
pub fn verify_exponent_law(
    law: LawId,
    a: CardinalValue,
    b: CardinalValue,
    c: CardinalValue,
) -> Result<LawWitness> {
    verify_exponent_law_with_budget(law, a, b, c, DEFAULT_BUDGET)
}

/// Builds witness sets `M`, `N`, `P` of sizes `a`, `b`, `c`, enumerates both
/// sides of `law`, maps each left element to the right through the natural
/// bijection and validates the result.
///
/// The budget bounds `|left| + |right|` and is checked before anything is
/// enumerated.
pub fn verify_exponent_law_with_budget(
    law: LawId,
    a: CardinalValue,
    b: CardinalValue,
    c: CardinalValue,
    budget: u64,
) -> Result<LawWitness> {
    let (left, right) = law
        .predicted_sizes(a.0, b.0, c.0)
        .ok_or_else(|| Error::Overflow(format!("{law} with a={a}, b={b}, c={c}")))?;
    let required = left.saturating_add(right);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }

    let m = a.witness()?;
    let n = b.witness()?;
    let p = c.witness()?;
    let witness = match law {
        LawId::AddExp => add_exp(&m, &n, &p),
        LawId::MulExp => mul_exp(&m, &n, &p),
        LawId::Curry => curry(&m, &n, &p),
    };
    witness.validate()?;
    if witness.left_set.len() as u128 != left || witness.right_set.len() as u128 != right {
        return Err(Error::LawViolation(format!(
            "{law}: enumerated {} <-> {}, expected {left} <-> {right}",
            witness.left_set.len(),
            witness.right_set.len()
        )));
    }
    Ok(witness)
}

fn pairs_of(first: &[Covering], second: &[Covering]) -> Vec<(Covering, Covering)> {
    first
        .iter()
        .flat_map(|f| second.iter().map(move |g| (f.clone(), g.clone())))
        .collect()
}

fn pair_label(f: &Covering, g: &Covering) -> Label {
    Label::pair(f.to_label(), g.to_label())
}

// (f, g) ↦ h on the tagged union, h(L.n) = f(n), h(R.p) = g(p)
fn add_exp(m: &FiniteSet, n: &FiniteSet, p: &FiniteSet) -> LawWitness {
    let from_n: Vec<_> = covering_set(n, m).iter().cloned().collect();
    let from_p: Vec<_> = covering_set(p, m).iter().cloned().collect();
    let union = Arc::new(tagged_union(n, p));
    let right = covering_set(&union, m);

    let mut left_set = Vec::new();
    let mut pairs = Vec::new();
    for (f, g) in pairs_of(&from_n, &from_p) {
        let values = union
            .iter()
            .map(|tagged| match tagged {
                Label::Left(x) => f.apply(x).cloned(),
                Label::Right(x) => g.apply(x).cloned(),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .expect("tagged union labels are tagged");
        let h = Covering::new(Arc::clone(&union), values).expect("one value per element");
        let from = pair_label(&f, &g);
        left_set.push(from.clone());
        pairs.push((from, h.to_label()));
    }
    LawWitness {
        law: LawId::AddExp,
        left_set: left_set.into_iter().collect(),
        right_set: right.to_finite_set(),
        pairs,
    }
}

// (f, g) ↦ h, h(p) = (f(p), g(p))
fn mul_exp(m: &FiniteSet, n: &FiniteSet, p: &FiniteSet) -> LawWitness {
    let into_m: Vec<_> = covering_set(p, m).iter().cloned().collect();
    let into_n: Vec<_> = covering_set(p, n).iter().cloned().collect();
    let domain = Arc::new(p.clone());
    let right = covering_set(p, &product(m, n));

    let mut left_set = Vec::new();
    let mut pairs = Vec::new();
    for (f, g) in pairs_of(&into_m, &into_n) {
        let values = p
            .iter()
            .map(|x| Label::pair(f.apply(x).unwrap().clone(), g.apply(x).unwrap().clone()))
            .collect();
        let h = Covering::new(Arc::clone(&domain), values).expect("one value per element");
        let from = pair_label(&f, &g);
        left_set.push(from.clone());
        pairs.push((from, h.to_label()));
    }
    LawWitness {
        law: LawId::MulExp,
        left_set: left_set.into_iter().collect(),
        right_set: right.to_finite_set(),
        pairs,
    }
}

// F ↦ h, h((p, n)) = F(p)(n)
fn curry(m: &FiniteSet, n: &FiniteSet, p: &FiniteSet) -> LawWitness {
    let inner: Vec<_> = covering_set(n, m).iter().cloned().collect();
    let inner_set = Arc::new(inner.iter().map(Covering::to_label).collect::<FiniteSet>());
    let outer = Coverings::new(Arc::new(p.clone()), Arc::clone(&inner_set));
    let grid = Arc::new(product(p, n));
    let right = covering_set(&grid, m);

    let mut left_set = Vec::new();
    let mut pairs = Vec::new();
    for big_f in outer {
        let values = grid
            .iter()
            .map(|cell| {
                let Label::Pair(x, y) = cell else {
                    unreachable!("product labels are pairs")
                };
                let chosen = big_f.apply(x).expect("x is in P");
                let at = inner_set.position(chosen).expect("F maps into (N | M)");
                inner[at].apply(y).expect("y is in N").clone()
            })
            .collect();
        let h = Covering::new(Arc::clone(&grid), values).expect("one value per element");
        let from = big_f.to_label();
        left_set.push(from.clone());
        pairs.push((from, h.to_label()));
    }
    LawWitness {
        law: LawId::Curry,
        left_set: left_set.into_iter().collect(),
        right_set: right.to_finite_set(),
        pairs,
    }
}

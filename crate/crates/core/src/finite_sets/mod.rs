//! Finite sets, coverings and cardinal arithmetic.
//!
//! Everything here works on finite, ordered sets of [`Label`]s. A *covering*
//! of `N` with `M` is a total function `N -> M`; the covering-set `(N | M)`
//! collects all of them and is what gives meaning to `a^b` for cardinals.

mod cardinal;
mod covering;
mod laws;

use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};

pub use cardinal::{cardinal_add, cardinal_mul, cardinal_pow, CardinalValue};
pub use covering::{covering_set, Covering, CoveringSet, Coverings};
pub use laws::{
    verify_exponent_law, verify_exponent_law_with_budget, LawId, LawWitness, DEFAULT_BUDGET,
};

/// An opaque element of a [`FiniteSet`].
///
/// Besides plain tokens, labels can be tagged by the side of a union, paired
/// for products, or stand for a whole covering (so that covering-sets can
/// themselves be used as sets).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Atom(String),
    Left(Box<Label>),
    Right(Box<Label>),
    Pair(Box<Label>, Box<Label>),
    /// The values of a covering, listed in the order of its domain.
    Func(Vec<Label>),
}

impl Label {
    pub fn atom(token: impl Into<String>) -> Self {
        Label::Atom(token.into())
    }

    pub fn pair(first: Label, second: Label) -> Self {
        Label::Pair(Box::new(first), Box::new(second))
    }

    fn is_single_char(&self) -> bool {
        matches!(self, Label::Atom(s) if s.chars().count() == 1)
    }
}

impl From<&str> for Label {
    fn from(token: &str) -> Self {
        Label::Atom(token.to_owned())
    }
}

impl From<String> for Label {
    fn from(token: String) -> Self {
        Label::Atom(token)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => f.write_str(s),
            Label::Left(l) => write!(f, "L.{l}"),
            Label::Right(l) => write!(f, "R.{l}"),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
            // Coverings into single-character labels print as words, like
            // `10110`; anything else is bracketed.
            Label::Func(values)
                if !values.is_empty() && values.iter().all(Label::is_single_char) =>
            {
                values.iter().try_for_each(|v| write!(f, "{v}"))
            }
            Label::Func(values) => {
                f.write_str("[")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// A finite set of labels in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteSet {
    elements: IndexSet<Label>,
}

impl FiniteSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The canonical witness set `{e0, ..., e(n-1)}` of cardinality `n`.
    pub fn witness(n: usize) -> Self {
        (0..n).map(|i| Label::Atom(format!("e{i}"))).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.elements.contains(label)
    }

    /// Position of `label` in the element order.
    pub fn position(&self, label: &Label) -> Option<usize> {
        self.elements.get_index_of(label)
    }

    pub fn get(&self, index: usize) -> Option<&Label> {
        self.elements.get_index(index)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Label> + '_ {
        self.elements.iter()
    }
}

impl std::ops::Index<usize> for FiniteSet {
    type Output = Label;

    fn index(&self, index: usize) -> &Label {
        self.get(index).expect("label index out of bounds")
    }
}

impl FromIterator<Label> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        FiniteSet {
            elements: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Label;
    type IntoIter = indexmap::set::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// Builds a set from labels, dropping repeats and keeping first occurrences.
pub fn make_set<I, L>(labels: I) -> FiniteSet
where
    I: IntoIterator<Item = L>,
    L: Into<Label>,
{
    labels.into_iter().map(Into::into).collect()
}

/// Strict union `(M, N)`: fails unless `M ∩ N = ∅`.
pub fn disjoint_union(left: &FiniteSet, right: &FiniteSet) -> Result<FiniteSet> {
    let common: Vec<String> = left
        .iter()
        .filter(|l| right.contains(l))
        .map(ToString::to_string)
        .collect();
    if !common.is_empty() {
        return Err(Error::DisjointnessViolation { common });
    }
    Ok(left.iter().chain(right.iter()).cloned().collect())
}

/// Union after tagging every label with its side, so the operands are always
/// disjoint.
pub fn tagged_union(left: &FiniteSet, right: &FiniteSet) -> FiniteSet {
    left.iter()
        .map(|l| Label::Left(Box::new(l.clone())))
        .chain(right.iter().map(|l| Label::Right(Box::new(l.clone()))))
        .collect()
}

/// Cartesian product, lexicographic in `(left order, right order)`.
pub fn product(left: &FiniteSet, right: &FiniteSet) -> FiniteSet {
    left.iter()
        .flat_map(|a| right.iter().map(move |b| Label::pair(a.clone(), b.clone())))
        .collect()
}

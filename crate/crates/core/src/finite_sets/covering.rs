use std::fmt;
use std::sync::Arc;

use super::{FiniteSet, Label};

/// A covering `f(N)`: one codomain element bound to each domain element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    domain: Arc<FiniteSet>,
    values: Vec<Label>,
}

impl Covering {
    /// Builds a covering from values listed in domain order.
    ///
    /// Returns `None` unless exactly one value is given per domain element.
    pub fn new(domain: Arc<FiniteSet>, values: Vec<Label>) -> Option<Self> {
        (values.len() == domain.len()).then_some(Covering { domain, values })
    }

    pub fn domain(&self) -> &FiniteSet {
        &self.domain
    }

    /// The covering function `f(n)`.
    pub fn apply(&self, n: &Label) -> Option<&Label> {
        self.domain.position(n).map(|i| &self.values[i])
    }

    pub fn values(&self) -> &[Label] {
        &self.values
    }

    /// This covering as an element of a set, e.g. of `(N | M)`.
    pub fn to_label(&self) -> Label {
        Label::Func(self.values.clone())
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_label().fmt(f)
    }
}

/// The covering-set `(N | M)` of every function from `N` to `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringSet {
    domain: Arc<FiniteSet>,
    codomain: Arc<FiniteSet>,
    coverings: Vec<Covering>,
}

impl CoveringSet {
    pub fn domain(&self) -> &FiniteSet {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSet {
        &self.codomain
    }

    pub fn len(&self) -> usize {
        self.coverings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coverings.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Covering> {
        self.coverings.iter()
    }

    /// The coverings as labels, so `(N | M)` can be used as the base or
    /// exponent of another covering-set.
    pub fn to_finite_set(&self) -> FiniteSet {
        self.coverings.iter().map(Covering::to_label).collect()
    }
}

impl<'a> IntoIterator for &'a CoveringSet {
    type Item = &'a Covering;
    type IntoIter = std::slice::Iter<'a, Covering>;

    fn into_iter(self) -> Self::IntoIter {
        self.coverings.iter()
    }
}

/// Lazy enumeration of `(N | M)`.
///
/// Order is lexicographic: domain positions are digits, most significant
/// first, and codomain order gives the digit values.
#[derive(Clone, Debug)]
pub struct Coverings {
    domain: Arc<FiniteSet>,
    codomain: Arc<FiniteSet>,
    digits: Option<Vec<usize>>,
}

impl Coverings {
    pub fn new(domain: Arc<FiniteSet>, codomain: Arc<FiniteSet>) -> Self {
        // With a nonempty domain and nothing to map into there is no covering;
        // with an empty domain there is exactly one, the empty function.
        let digits = if codomain.is_empty() && !domain.is_empty() {
            None
        } else {
            Some(vec![0; domain.len()])
        };
        Coverings {
            domain,
            codomain,
            digits,
        }
    }

    /// `|M|^|N|`, or `None` if it does not fit in a `u128`.
    pub fn count(domain_len: usize, codomain_len: usize) -> Option<u128> {
        let exp = u32::try_from(domain_len).ok()?;
        (codomain_len as u128).checked_pow(exp)
    }
}

impl Iterator for Coverings {
    type Item = Covering;

    fn next(&mut self) -> Option<Covering> {
        let digits = self.digits.as_mut()?;
        let values = digits.iter().map(|&d| self.codomain[d].clone()).collect();
        let current = Covering {
            domain: Arc::clone(&self.domain),
            values,
        };

        let base = self.codomain.len();
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < base {
                break;
            }
            digits[pos] = 0;
        }
        Some(current)
    }
}

/// Enumerates `(N | M)`: every total function from `domain` to `codomain`,
/// each exactly once, `|M|^|N|` in all (`0^0 = 1`).
pub fn covering_set(domain: &FiniteSet, codomain: &FiniteSet) -> CoveringSet {
    let domain = Arc::new(domain.clone());
    let codomain = Arc::new(codomain.clone());
    let coverings = Coverings::new(Arc::clone(&domain), Arc::clone(&codomain)).collect();
    CoveringSet {
        domain,
        codomain,
        coverings,
    }
}

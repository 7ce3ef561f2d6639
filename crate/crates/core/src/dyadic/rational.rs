use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A nonnegative rational number, always stored in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigUint,
    denom: BigUint,
}

impl Rational {
    /// `numer / denom` reduced; `None` if `denom` is zero.
    pub fn new(numer: impl Into<BigUint>, denom: impl Into<BigUint>) -> Option<Self> {
        let (numer, denom) = (numer.into(), denom.into());
        if denom.is_zero() {
            return None;
        }
        let g = numer.gcd(&denom);
        if g.is_one() {
            return Some(Rational { numer, denom });
        }
        Some(Rational {
            numer: numer / &g,
            denom: denom / g,
        })
    }

    pub fn zero() -> Self {
        Rational {
            numer: BigUint::zero(),
            denom: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        Rational {
            numer: BigUint::one(),
            denom: BigUint::one(),
        }
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer == self.denom
    }

    /// Whether `0 <= self <= 1`.
    pub fn in_unit_interval(&self) -> bool {
        self.numer <= self.denom
    }

    pub(crate) fn check_unit_interval(&self) -> Result<()> {
        if self.in_unit_interval() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                value: self.to_string(),
            })
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// Parses `p/q` or a bare integer `p`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = |part: &str, offset: usize| -> Result<BigUint> {
            if part.is_empty() {
                return Err(Error::parse(s, offset, "expected digits"));
            }
            if let Some(i) = part.find(|c: char| !c.is_ascii_digit()) {
                return Err(Error::parse(s, offset + i, "expected a decimal digit"));
            }
            Ok(part.parse().expect("all ascii digits"))
        };
        match s.split_once('/') {
            None => Ok(Rational {
                numer: digits(s, 0)?,
                denom: BigUint::one(),
            }),
            Some((p, q)) => {
                let numer = digits(p, 0)?;
                let denom = digits(q, p.len() + 1)?;
                Rational::new(numer, denom)
                    .ok_or_else(|| Error::parse(s, p.len() + 1, "zero denominator"))
            }
        }
    }
}

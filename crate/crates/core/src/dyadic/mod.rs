//! Exact rationals in `[0,1]` and the points with two binary expansions.
//!
//! The dual-representation points are the dyadic rationals
//! `(2ν+1)/2^μ` strictly between 0 and 1. They are enumerated by increasing
//! `μ`, then increasing numerator, with 0-based indices:
//!
//! ```text
//! index   0    1    2    3    4    5    6    7     ...
//! dyadic  1/2  1/4  3/4  1/8  3/8  5/8  7/8  1/16  ...
//! ```

mod rational;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use rational::Rational;

use crate::error::Result;

/// A dyadic rational `numerator / 2^exponent` in `(0,1)` with odd numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigUint,
    exponent: u64,
}

impl Dyadic {
    /// `None` unless `numerator` is odd, `exponent >= 1` and
    /// `numerator < 2^exponent`.
    pub fn new(numerator: impl Into<BigUint>, exponent: u64) -> Option<Self> {
        let numerator = numerator.into();
        let valid = exponent >= 1 && numerator.is_odd() && numerator.bits() <= exponent;
        valid.then_some(Dyadic {
            numerator,
            exponent,
        })
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    /// `μ`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `ν`, where the numerator is `2ν+1`.
    pub fn nu(&self) -> BigUint {
        &self.numerator >> 1u32
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.numerator.clone(), BigUint::one() << self.exponent)
            .expect("nonzero denominator")
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_rational().fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Zero,
    One,
}

/// Which kind of point of `[0,1]` a rational is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    /// Has exactly two binary expansions.
    DualDyadic(Dyadic),
    Endpoint(Endpoint),
    OtherRational,
}

/// Classifies `q`, which must lie in `[0,1]`.
pub fn classify(q: &Rational) -> Result<PointClass> {
    q.check_unit_interval()?;
    if q.is_zero() {
        return Ok(PointClass::Endpoint(Endpoint::Zero));
    }
    if q.is_one() {
        return Ok(PointClass::Endpoint(Endpoint::One));
    }
    Ok(as_dyadic(q).map_or(PointClass::OtherRational, PointClass::DualDyadic))
}

/// `q` as a dyadic if its reduced denominator is a power of two and
/// `0 < q < 1`.
pub(crate) fn as_dyadic(q: &Rational) -> Option<Dyadic> {
    let d = q.denom();
    if q.is_zero() || !q.numer().lt(d) {
        return None;
    }
    let is_power_of_two = (d & (d - 1u32)).is_zero();
    is_power_of_two.then(|| Dyadic {
        numerator: q.numer().clone(),
        exponent: d.bits() - 1,
    })
}

/// Position of `d` in the enumeration of dyadics,
/// `2^(μ-1) - 1 + (numerator - 1) / 2`.
pub fn index_of(d: &Dyadic) -> BigUint {
    (BigUint::one() << (d.exponent - 1)) - 1u32 + d.nu()
}

/// The dyadic at position `k`; inverse of [`index_of`].
pub fn dyadic_at(k: &BigUint) -> Dyadic {
    let k1 = k + 1u32;
    let exponent = k1.bits();
    let offset = k1 - (BigUint::one() << (exponent - 1));
    Dyadic {
        numerator: (offset << 1u32) + 1u32,
        exponent,
    }
}

/// Every dyadic in `(0,1)`, in enumeration order.
#[derive(Clone, Debug)]
pub struct Duals {
    numerator: BigUint,
    exponent: u64,
}

impl Default for Duals {
    fn default() -> Self {
        Duals {
            numerator: BigUint::one(),
            exponent: 1,
        }
    }
}

impl Iterator for Duals {
    type Item = Dyadic;

    fn next(&mut self) -> Option<Dyadic> {
        let current = Dyadic {
            numerator: self.numerator.clone(),
            exponent: self.exponent,
        };
        self.numerator += 2u32;
        if self.numerator.bits() > self.exponent {
            self.exponent += 1;
            self.numerator = BigUint::one();
        }
        Some(current)
    }
}

/// The first `count` dyadics `d_0, d_1, ...`.
pub fn enumerate_duals(count: usize) -> Vec<Dyadic> {
    Duals::default().take(count).collect()
}

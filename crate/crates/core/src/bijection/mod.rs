//! The explicit bijection between `B_X` and `B = B_X ∪ B_S`.
//!
//! `T = {t_0, t_1, ...}` is the set of trailing-0 expansions of the dyadics,
//! `t_k` representing the `k`-th dyadic, and `s_k` is the trailing-1
//! expansion of that same dyadic. Splitting `T` by index parity gives the
//! shift
//!
//! ```text
//! forward:  t_2k   -> s_k        inverse:  s_k  -> t_2k
//!           t_2k+1 -> t_k                  t_k  -> t_2k+1
//!           e      -> e   (e ∈ B_X ∖ T)    e    -> e   otherwise
//! ```
//!
//! which absorbs the countable set `B_S` into `B_X`. All outputs are
//! canonical.

mod trace;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::binary_streams::{canonicalize, Epbs};
use crate::dyadic::{dyadic_at, index_of};
use crate::error::{Error, Result};

pub use trace::{
    derivation_trace, CheckBound, CheckResult, DerivationStep, DerivationTrace, Justification,
};

/// Which countable subset of `B_X` plays the role of `T`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TChoice {
    /// Trailing-0 expansions of the dyadics, in dyadic enumeration order.
    #[default]
    TerminatingDyadics,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MapConfig {
    pub t_choice: TChoice,
    /// Indices start at 0: `T_E = {t_0, t_2, ...}`, `T_O = {t_1, t_3, ...}`.
    pub index_base: u8,
}

/// Where a stream sits in `B = B_S ∪ T_E ∪ T_O ∪ B'_X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `s_k`.
    Bs(BigUint),
    /// `t_k` with `k` even.
    TEven(BigUint),
    /// `t_k` with `k` odd.
    TOdd(BigUint),
    /// `B'_X = B_X ∖ T`.
    Rest,
}

impl MapConfig {
    pub fn t(&self, k: &BigUint) -> Epbs {
        match self.t_choice {
            TChoice::TerminatingDyadics => Epbs::terminating(&dyadic_at(k)),
        }
    }

    pub fn s(&self, k: &BigUint) -> Epbs {
        Epbs::trailing_ones(&dyadic_at(k))
    }

    /// `Some(k)` if `e = t_k`.
    pub fn t_index(&self, e: &Epbs) -> Option<BigUint> {
        canonicalize(e).terminating_dyadic().map(|d| index_of(&d))
    }

    /// `Some(k)` if `e = s_k`.
    pub fn s_index(&self, e: &Epbs) -> Option<BigUint> {
        canonicalize(e).trailing_ones_dyadic().map(|d| index_of(&d))
    }

    pub fn region(&self, e: &Epbs) -> Region {
        let c = canonicalize(e);
        if let Some(d) = c.trailing_ones_dyadic() {
            return Region::Bs(index_of(&d));
        }
        match c.terminating_dyadic().map(|d| index_of(&d)) {
            Some(k) if k.is_even() => Region::TEven(k),
            Some(k) => Region::TOdd(k),
            None => Region::Rest,
        }
    }

    /// `φ: B_X -> B`.
    pub fn forward(&self, e: &Epbs) -> Result<Epbs> {
        Ok(match self.region(e) {
            Region::Bs(_) => {
                return Err(Error::DomainViolation {
                    stream: e.to_string(),
                })
            }
            Region::TEven(k) => self.s(&(k >> 1u32)),
            Region::TOdd(k) => self.t(&(k >> 1u32)),
            Region::Rest => canonicalize(e),
        })
    }

    /// `ψ: B -> B_X`, the inverse of [`MapConfig::forward`].
    pub fn inverse(&self, e: &Epbs) -> Epbs {
        match self.region(e) {
            Region::Bs(k) => self.t(&(k << 1u32)),
            Region::TEven(k) | Region::TOdd(k) => self.t(&((k << 1u32) + 1u32)),
            Region::Rest => canonicalize(e),
        }
    }
}

/// `t_k`: the trailing-0 expansion of the `k`-th dyadic.
pub fn t_enumerate(k: impl Into<BigUint>) -> Epbs {
    MapConfig::default().t(&k.into())
}

/// `s_k`: the trailing-1 expansion of the `k`-th dyadic.
pub fn s_enumerate(k: impl Into<BigUint>) -> Epbs {
    MapConfig::default().s(&k.into())
}

/// `φ` under the default [`MapConfig`]; fails on streams in `B_S`.
pub fn forward(e: &Epbs) -> Result<Epbs> {
    MapConfig::default().forward(e)
}

/// `ψ` under the default [`MapConfig`].
pub fn inverse(e: &Epbs) -> Epbs {
    MapConfig::default().inverse(e)
}

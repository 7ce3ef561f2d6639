//! Eventually-periodic binary streams.
//!
//! An infinite bit string `f(1) f(2) f(3) ...` is read as the binary
//! fraction `Σ f(ν) / 2^ν`. The streams that can be written down as a finite
//! preamble followed by a block repeated forever are exactly those with a
//! rational value, and those are the ones this module works with. The text
//! form is `preamble(period)`, e.g. `011(0)` for 3/8.

mod expansion;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::dyadic::{Dyadic, Rational};
use crate::error::{Error, Result};

pub use expansion::expansions_of;

/// An eventually-periodic binary stream: `preamble` then `period` repeated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Epbs {
    preamble: Vec<bool>,
    period: Vec<bool>,
}

impl Epbs {
    /// `None` if `period` is empty.
    pub fn new(preamble: Vec<bool>, period: Vec<bool>) -> Option<Self> {
        (!period.is_empty()).then_some(Epbs { preamble, period })
    }

    pub fn preamble(&self) -> &[bool] {
        &self.preamble
    }

    pub fn period(&self) -> &[bool] {
        &self.period
    }

    /// `|preamble| + |period|`.
    pub fn size(&self) -> usize {
        self.preamble.len() + self.period.len()
    }

    /// Bit at 0-based position `i`; position `i` carries weight `2^-(i+1)`.
    pub fn bit(&self, i: usize) -> bool {
        match self.preamble.get(i) {
            Some(&b) => b,
            None => self.period[(i - self.preamble.len()) % self.period.len()],
        }
    }

    /// The first `n` bits of the infinite expansion.
    pub fn prefix(&self, n: usize) -> Vec<bool> {
        (0..n).map(|i| self.bit(i)).collect()
    }

    /// The canonical trailing-0 expansion of a dyadic, e.g. `011(0)` for 3/8.
    pub fn terminating(d: &Dyadic) -> Self {
        Epbs {
            preamble: fixed_width_bits(d.numerator(), d.exponent()),
            period: vec![false],
        }
    }

    /// The trailing-1 expansion of a dyadic, e.g. `010(1)` for 3/8.
    pub fn trailing_ones(d: &Dyadic) -> Self {
        let mut preamble = fixed_width_bits(d.numerator(), d.exponent());
        *preamble.last_mut().expect("exponent >= 1") = false;
        Epbs {
            preamble,
            period: vec![true],
        }
    }

    /// Whether this is already in canonical form.
    pub fn is_canonical(&self) -> bool {
        primitive_root_len(&self.period) == self.period.len() && !self.absorbable()
    }

    fn absorbable(&self) -> bool {
        self.preamble.last() == self.period.last()
    }

    /// The dyadic this stream represents as `w1(0)`, if it has that shape.
    /// Assumes canonical form.
    pub(crate) fn terminating_dyadic(&self) -> Option<Dyadic> {
        (self.period == [false] && !self.preamble.is_empty())
            .then(|| Dyadic::new(bits_value(&self.preamble), self.preamble.len() as u64))
            .flatten()
    }

    /// The dyadic this stream represents as `w0(1)`, if it has that shape.
    /// Assumes canonical form.
    pub(crate) fn trailing_ones_dyadic(&self) -> Option<Dyadic> {
        if self.period != [true] || self.preamble.is_empty() {
            return None;
        }
        let mut bits = self.preamble.clone();
        *bits.last_mut().unwrap() = true;
        Dyadic::new(bits_value(&bits), bits.len() as u64)
    }
}

fn fixed_width_bits(n: &BigUint, width: u64) -> Vec<bool> {
    (0..width).rev().map(|i| n.bit(i)).collect()
}

/// Big-endian bits as an integer.
fn bits_value(bits: &[bool]) -> BigUint {
    let mut n = BigUint::zero();
    for (i, &b) in bits.iter().rev().enumerate() {
        if b {
            n.set_bit(i as u64, true);
        }
    }
    n
}

/// Length of the shortest block whose repetition gives `bits`.
fn primitive_root_len(bits: &[bool]) -> usize {
    let n = bits.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| bits[i] == bits[i - d]))
        .unwrap_or(n)
}

impl fmt::Display for Epbs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |b: &bool| if *b { '1' } else { '0' };
        let preamble: String = self.preamble.iter().map(bit).collect();
        let period: String = self.period.iter().map(bit).collect();
        write!(f, "{preamble}({period})")
    }
}

impl FromStr for Epbs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_stream(s)
    }
}

/// Parses `bits "(" bits ")"`, period nonempty. The result is not
/// canonicalized.
pub fn parse_stream(text: &str) -> Result<Epbs> {
    let mut preamble = Vec::new();
    let mut period = Vec::new();
    let mut in_period = false;
    let mut closed = false;
    for (i, c) in text.char_indices() {
        if closed {
            return Err(Error::parse(text, i, "trailing input after ')'"));
        }
        match c {
            '0' | '1' => {
                let bits = if in_period {
                    &mut period
                } else {
                    &mut preamble
                };
                bits.push(c == '1');
            }
            '(' if !in_period => in_period = true,
            ')' if in_period => {
                if period.is_empty() {
                    return Err(Error::parse(text, i, "empty period"));
                }
                closed = true;
            }
            _ => return Err(Error::parse(text, i, format!("unexpected {c:?}"))),
        }
    }
    if !closed {
        let reason = if in_period {
            "missing ')'"
        } else {
            "missing '('"
        };
        return Err(Error::parse(text, text.len(), reason));
    }
    Ok(Epbs { preamble, period })
}

/// Inverse of [`parse_stream`].
pub fn format_stream(e: &Epbs) -> String {
    e.to_string()
}

/// The unique representative of `e`'s bit sequence: primitive period and a
/// preamble that cannot be shortened.
pub fn canonicalize(e: &Epbs) -> Epbs {
    let root = primitive_root_len(&e.period);
    let mut out = Epbs {
        preamble: e.preamble.clone(),
        period: e.period[..root].to_vec(),
    };
    // `w b (p b)` and `w (b p)` are the same stream.
    while out.absorbable() {
        out.preamble.pop();
        out.period.rotate_right(1);
    }
    out
}

/// Exact value `Σ f(ν) / 2^ν`, always in `[0,1]`.
pub fn value(e: &Epbs) -> Rational {
    let cycle = (BigUint::one() << e.period.len()) - 1u32;
    let numer = bits_value(&e.preamble) * &cycle + bits_value(&e.period);
    let denom = (BigUint::one() << e.preamble.len()) * cycle;
    Rational::new(numer, denom).expect("denominator is positive")
}

/// Which half of `B = B_X ∪ B_S` a stream belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StreamClass {
    /// Streams that canonically represent a point of `[0,1]`.
    InBX,
    /// Second (trailing-1) expansions of the dyadics in `(0,1)`.
    InBS,
}

impl fmt::Display for StreamClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StreamClass::InBX => "InBX",
            StreamClass::InBS => "InBS",
        })
    }
}

/// `InBS` iff `e` ends in all 1s and contains a 0; `(1)` itself is `InBX`.
pub fn classify_stream(e: &Epbs) -> StreamClass {
    let c = canonicalize(e);
    // Canonically, an eventually-all-1 stream with a 0 has a nonempty
    // preamble ending in 0.
    if c.period == [true] && !c.preamble.is_empty() {
        StreamClass::InBS
    } else {
        StreamClass::InBX
    }
}

/// The other expansion of the same dyadic, or `None` if `e`'s value has only
/// one expansion.
pub fn dual_of(e: &Epbs) -> Option<Epbs> {
    let c = canonicalize(e);
    if let Some(d) = c.terminating_dyadic() {
        Some(Epbs::trailing_ones(&d))
    } else {
        c.trailing_ones_dyadic().map(|d| Epbs::terminating(&d))
    }
}

/// Every stream with `|preamble| + |period| <= max_size`, canonical or not.
pub fn bounded_streams(max_size: usize) -> impl Iterator<Item = Epbs> {
    (1..=max_size).flat_map(move |period_len| {
        (0..=max_size - period_len).flat_map(move |preamble_len| {
            let total = preamble_len + period_len;
            (0u64..1 << total).map(move |word| {
                let bit = |i: usize| (word >> (total - 1 - i)) & 1 == 1;
                Epbs {
                    preamble: (0..preamble_len).map(bit).collect(),
                    period: (preamble_len..total).map(bit).collect(),
                }
            })
        })
    })
}

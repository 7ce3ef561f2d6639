use std::collections::HashMap;

use num_bigint::BigUint;

use super::{canonicalize, Epbs};
use crate::dyadic::{self, Rational};
use crate::error::Result;

/// Every binary expansion of `q ∈ [0,1]`.
///
/// Dyadics in `(0,1)` get two, the trailing-0 form first; every other
/// rational, including 0 and 1, gets one.
pub fn expansions_of(q: &Rational) -> Result<Vec<Epbs>> {
    q.check_unit_interval()?;
    if q.is_one() {
        return Ok(vec![Epbs::new(vec![], vec![true]).unwrap()]);
    }
    let first = long_division(q.numer(), q.denom());
    Ok(match dyadic::as_dyadic(q) {
        Some(d) => vec![first, Epbs::trailing_ones(&d)],
        None => vec![first],
    })
}

/// Base-2 long division of `numer / denom < 1`, stopping at the first
/// repeated remainder.
fn long_division(numer: &BigUint, denom: &BigUint) -> Epbs {
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut bits = Vec::new();
    let mut r = numer.clone();
    let start = loop {
        if let Some(&at) = seen.get(&r) {
            break at;
        }
        seen.insert(r.clone(), bits.len());
        r <<= 1u32;
        let bit = &r >= denom;
        if bit {
            r -= denom;
        }
        bits.push(bit);
    };
    let period = bits.split_off(start);
    // The first repeat already gives the shortest preamble and period.
    let e = Epbs::new(bits, period).expect("cycle is nonempty");
    debug_assert_eq!(canonicalize(&e), e);
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary_streams::value;

    fn q(text: &str) -> Rational {
        text.parse().unwrap()
    }

    fn texts(q: &Rational) -> Vec<String> {
        expansions_of(q)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(texts(&q("3/8")), ["011(0)", "010(1)"]);
        for e in expansions_of(&q("3/8")).unwrap() {
            assert_eq!(value(&e), q("3/8"));
        }
        assert_eq!(texts(&q("1/3")), ["(01)"]);
        assert_eq!(texts(&q("0")), ["(0)"]);
        assert_eq!(texts(&q("1")), ["(1)"]);
        assert_eq!(texts(&q("1/2")), ["1(0)", "0(1)"]);
        assert_eq!(texts(&q("1/6")), ["0(01)"]);
        assert_eq!(texts(&q("5/7")), ["(101)"]);
    }

    #[test]
    fn out_of_range() {
        assert_eq!(expansions_of(&q("3/2")).unwrap_err().name(), "OutOfRange");
    }

    #[test]
    fn long_period() {
        // 2 has multiplicative order 100 modulo 101
        let e = &expansions_of(&q("1/101")).unwrap()[0];
        assert!(e.preamble().is_empty());
        assert_eq!(e.period().len(), 100);
        assert_eq!(value(e), q("1/101"));
    }
}

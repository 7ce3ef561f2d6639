//! A replay of the corrected argument, step by step, with every step that
//! is about finitely representable streams checked exhaustively over all
//! streams of bounded size.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{MapConfig, Region};
use crate::binary_streams::{
    bounded_streams, canonicalize, classify_stream, expansions_of, value, Epbs, StreamClass,
};
use crate::dyadic::{classify, PointClass};
use crate::finite_sets::{cardinal_pow, CardinalValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Justification {
    Definition,
    WitnessedEquivalence,
    /// About `X`, `ℝ` or a pure rewrite; nothing to compute.
    Symbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckResult {
    Pass,
    Fail,
    NotCheckable,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckResult::Pass => "pass",
            CheckResult::Fail => "fail",
            CheckResult::NotCheckable => "not-checkable",
        })
    }
}

/// What a bounded check looked at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckBound {
    /// Streams with `|preamble| + |period|` up to this size were examined.
    pub max_size: usize,
    /// Distinct canonical streams examined.
    pub streams: usize,
    pub check: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationStep {
    pub step: u32,
    pub statement: String,
    pub justification: Justification,
    pub bound: Option<CheckBound>,
    pub result: CheckResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationTrace {
    pub steps: Vec<DerivationStep>,
    /// `Pass` iff every checkable step passed.
    pub verdict: CheckResult,
}

impl DerivationTrace {
    pub fn from_steps(steps: Vec<DerivationStep>) -> Self {
        let ok = steps.iter().all(|s| s.result != CheckResult::Fail);
        DerivationTrace {
            steps,
            verdict: verdict(ok),
        }
    }

    /// JSON array of steps, pretty-printed with sorted keys.
    pub fn to_json(&self) -> String {
        // serde_json's default map is ordered by key
        let value = serde_json::to_value(&self.steps).expect("steps serialize");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!(
                "({}) {}\n    {:?}: {}",
                s.step, s.statement, s.justification, s.result
            ));
            if let Some(b) = &s.bound {
                out.push_str(&format!(
                    " [{}; {} streams, size <= {}]",
                    b.check, b.streams, b.max_size
                ));
            }
            out.push('\n');
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

struct Universe {
    max_size: usize,
    /// Distinct canonical streams of bounded size, sorted.
    streams: Vec<Epbs>,
    map: MapConfig,
}

impl Universe {
    fn new(max_size: usize) -> Self {
        let streams: BTreeSet<Epbs> = bounded_streams(max_size)
            .map(|e| canonicalize(&e))
            .collect();
        Universe {
            max_size,
            streams: streams.into_iter().collect(),
            map: MapConfig::default(),
        }
    }

    fn all(&self, check: impl Fn(&Epbs) -> bool + Sync + Send) -> bool {
        self.streams.par_iter().all(check)
    }

    fn in_bx(&self) -> Vec<&Epbs> {
        self.streams
            .iter()
            .filter(|e| classify_stream(e) == StreamClass::InBX)
            .collect()
    }

    fn bound(&self, streams: usize, check: &str) -> Option<CheckBound> {
        Some(CheckBound {
            max_size: self.max_size,
            streams,
            check: check.to_owned(),
        })
    }
}

fn verdict(ok: bool) -> CheckResult {
    if ok {
        CheckResult::Pass
    } else {
        CheckResult::Fail
    }
}

fn checked(
    step: u32,
    statement: &str,
    justification: Justification,
    bound: Option<CheckBound>,
    ok: bool,
) -> DerivationStep {
    DerivationStep {
        step,
        statement: statement.to_owned(),
        justification,
        bound,
        result: verdict(ok),
    }
}

fn symbolic(step: u32, statement: &str) -> DerivationStep {
    DerivationStep {
        step,
        statement: statement.to_owned(),
        justification: Justification::Symbolic,
        bound: None,
        result: CheckResult::NotCheckable,
    }
}

/// Replays the derivation from `|B| = 2^ℵ₀` to `|X| = |ℝ| = 2^ℵ₀`, checking
/// each step about streams over every stream with
/// `|preamble| + |period| <= max_size`.
pub fn derivation_trace(max_size: usize) -> DerivationTrace {
    use Justification::*;

    let u = Universe::new(max_size);
    let map = &u.map;
    let n = u.streams.len();
    let bx = u.in_bx();
    let region = |e: &Epbs| map.region(e);

    let mut steps = Vec::new();

    // B is the covering-set of the positions by {0,1}: its length-m prefixes
    // are exactly the 2^m coverings of {1..m}.
    let prefixes_ok = (1..=max_size).all(|m| {
        let seen: HashSet<Vec<bool>> = u.streams.iter().map(|e| e.prefix(m)).collect();
        cardinal_pow(CardinalValue(2), CardinalValue(m as u64))
            .is_ok_and(|c| c.get() == seen.len() as u64)
    });
    steps.push(checked(
        20,
        "|B| = 2^ℵ₀",
        Definition,
        u.bound(n, "prefixes of length m realize all of ({1..m} | {0,1})"),
        prefixes_ok,
    ));

    // Independent route: B_S is the set of streams that are not the first
    // expansion of their own (dyadic) value.
    let partition_ok = u.all(|e| {
        let q = value(e);
        let second = matches!(classify(&q), Ok(PointClass::DualDyadic(_)))
            && expansions_of(&q).is_ok_and(|xs| xs[0] != *e && xs.len() == 2 && xs[1] == *e);
        let class = classify_stream(e);
        second == (class == StreamClass::InBS)
    });
    steps.push(checked(
        21,
        "B = B_X ∪ B_S, B_X ∩ B_S = ∅",
        WitnessedEquivalence,
        u.bound(
            n,
            "each stream is in B_S iff it is the second expansion of its value",
        ),
        partition_ok,
    ));

    steps.push(symbolic(22, "B_X ∼ X ∼ ℝ"));

    let t_ok = u.all(|e| match map.t_index(e) {
        Some(k) => map.t(&k) == *e && classify_stream(e) == StreamClass::InBX,
        None => true,
    });
    steps.push(checked(
        23,
        "B_X = T ∪ B'_X, T ∩ B'_X = ∅",
        Definition,
        u.bound(n, "every t_k is in B_X and is recovered from its index"),
        t_ok,
    ));

    let split_ok = u.all(|e| match region(e) {
        Region::TEven(k) | Region::TOdd(k) => {
            let even = matches!(region(e), Region::TEven(_));
            even == !k.bit(0) && map.t_index(e) == Some(k)
        }
        _ => map.t_index(e).is_none(),
    });
    steps.push(checked(
        24,
        "B_X = T_E ∪ T_O ∪ B'_X, T_E ∪ T_O = T, T_E ∩ T_O = ∅",
        Definition,
        u.bound(n, "each t_k falls in T_E or T_O by the parity of k"),
        split_ok,
    ));

    let pieces_ok = u.all(|e| {
        let in_bs = classify_stream(e) == StreamClass::InBS;
        let in_t = map.t_index(e).is_some();
        let in_rest = !in_bs && !in_t;
        in_bs as u8 + in_t as u8 + in_rest as u8 == 1
    });
    steps.push(checked(
        25,
        "B_S ∪ B_X = B_S ∪ T ∪ B'_X",
        Definition,
        u.bound(n, "each stream lies in exactly one of B_S, T, B'_X"),
        pieces_ok,
    ));

    // T_E ∼ B_S through t_2k <-> s_k, both directions.
    let te_bs = u.all(|e| match region(e) {
        Region::TEven(_) => map
            .forward(e)
            .is_ok_and(|img| classify_stream(&img) == StreamClass::InBS && map.inverse(&img) == *e),
        Region::Bs(_) => {
            let pre = map.inverse(e);
            matches!(region(&pre), Region::TEven(_)) && map.forward(&pre).is_ok_and(|x| x == *e)
        }
        _ => true,
    });
    steps.push(checked(
        26,
        "T_E ∼ B_S",
        WitnessedEquivalence,
        u.bound(n, "t_2k -> s_k and s_k -> t_2k are mutually inverse"),
        te_bs,
    ));

    let to_t = u.all(|e| {
        let odd_ok = !matches!(region(e), Region::TOdd(_))
            || map
                .forward(e)
                .is_ok_and(|img| map.t_index(&img).is_some() && map.inverse(&img) == *e);
        let t_ok = map.t_index(e).is_none() || {
            let pre = map.inverse(e);
            matches!(region(&pre), Region::TOdd(_)) && map.forward(&pre).is_ok_and(|x| x == *e)
        };
        odd_ok && t_ok
    });
    steps.push(checked(
        27,
        "T_O ∼ T",
        WitnessedEquivalence,
        u.bound(n, "t_2k+1 -> t_k and t_k -> t_2k+1 are mutually inverse"),
        to_t,
    ));

    let rest_ok = u.all(|e| match region(e) {
        Region::Rest => map.forward(e).is_ok_and(|img| img == *e) && map.inverse(e) == *e,
        _ => true,
    });
    steps.push(checked(
        28,
        "B'_X ∼ B'_X",
        WitnessedEquivalence,
        u.bound(n, "identity on B'_X in both directions"),
        rest_ok,
    ));

    // Piecewise maps glue: the image pieces are disjoint, so the union of the
    // three bijections is a bijection.
    let glued = bx.par_iter().all(|e| {
        let Ok(img) = map.forward(e) else {
            return false;
        };
        match region(e) {
            Region::TEven(_) => matches!(region(&img), Region::Bs(_)),
            Region::TOdd(_) => map.t_index(&img).is_some(),
            Region::Rest => region(&img) == Region::Rest,
            Region::Bs(_) => false,
        }
    });
    steps.push(checked(
        29,
        "T_E ∪ T_O ∪ B'_X ∼ B_S ∪ T ∪ B'_X",
        WitnessedEquivalence,
        u.bound(bx.len(), "forward sends T_E, T_O, B'_X into B_S, T, B'_X"),
        glued,
    ));

    let round_trips = bx
        .par_iter()
        .all(|e| map.forward(e).is_ok_and(|img| map.inverse(&img) == **e))
        && u.all(|e| {
            let pre = map.inverse(e);
            classify_stream(&pre) == StreamClass::InBX && map.forward(&pre).is_ok_and(|x| x == *e)
        });
    steps.push(checked(
        30,
        "B_X ∼ B_S ∪ B_X",
        WitnessedEquivalence,
        u.bound(n, "inverse∘forward = id on B_X, forward∘inverse = id on B"),
        round_trips,
    ));

    steps.push(symbolic(
        31,
        "B_X ∼ B  (B_S ∪ B_X = B substituted into (30))",
    ));

    let forward_images: Option<HashSet<Epbs>> = bx.iter().map(|e| map.forward(e).ok()).collect();
    let inverse_images: HashSet<Epbs> = u.streams.iter().map(|e| map.inverse(e)).collect();
    let injective =
        forward_images.is_some_and(|imgs| imgs.len() == bx.len()) && inverse_images.len() == n;
    steps.push(checked(
        32,
        "|B_X| = |B| = 2^ℵ₀",
        WitnessedEquivalence,
        u.bound(n, "forward and inverse are injective on bounded streams"),
        injective,
    ));

    steps.push(symbolic(33, "|X| = |ℝ| = 2^ℵ₀"));

    DerivationTrace::from_steps(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_at_size_eight() {
        let trace = derivation_trace(8);
        assert_eq!(trace.verdict, CheckResult::Pass);
        assert_eq!(trace.steps.len(), 14);
        let ids: Vec<u32> = trace.steps.iter().map(|s| s.step).collect();
        assert_eq!(ids, (20..=33).collect::<Vec<_>>());
        for s in &trace.steps {
            match s.justification {
                Justification::Symbolic => assert_eq!(s.result, CheckResult::NotCheckable),
                _ => assert_eq!(s.result, CheckResult::Pass, "step {}", s.step),
            }
        }
    }

    #[test]
    fn partition_step_is_witnessed() {
        let trace = derivation_trace(4);
        let step = trace.steps.iter().find(|s| s.step == 21).unwrap();
        assert_eq!(step.justification, Justification::WitnessedEquivalence);
        assert_eq!(step.result, CheckResult::Pass);
        let last = trace.steps.last().unwrap();
        assert_eq!(last.justification, Justification::Symbolic);
    }

    #[test]
    fn json_has_sorted_keys() {
        let json = derivation_trace(3).to_json();
        let first = json.find("\"bound\"").unwrap();
        let order = [
            "\"justification\"",
            "\"result\"",
            "\"statement\"",
            "\"step\"",
        ];
        let mut last = first;
        for key in order {
            let at = json[first..].find(key).unwrap() + first;
            assert!(at > last, "{key} out of order");
            last = at;
        }
    }

    #[test]
    fn failed_step_fails_verdict() {
        let mut steps = derivation_trace(2).steps;
        assert_eq!(
            DerivationTrace::from_steps(steps.clone()).verdict,
            CheckResult::Pass
        );
        steps[1].result = CheckResult::Fail;
        assert_eq!(
            DerivationTrace::from_steps(steps).verdict,
            CheckResult::Fail
        );
    }

    #[test]
    fn symbolic_steps_do_not_fail_the_verdict() {
        let steps = vec![symbolic(33, "|X| = |ℝ| = 2^ℵ₀")];
        assert_eq!(
            DerivationTrace::from_steps(steps).verdict,
            CheckResult::Pass
        );
    }
}

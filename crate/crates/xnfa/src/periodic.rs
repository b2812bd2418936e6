//! Canonical ultimately-periodic sets of word lengths.
//!
//! A unary language is determined by its set of word lengths, which for
//! regular languages is ultimately periodic: a finite prefix table plus a
//! repeating cycle. The canonical form here (minimal period, then minimal
//! threshold) makes language equality a structural comparison, so this type
//! doubles as the independent oracle that every construction in the crate is
//! checked against.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::automaton::{SemanticsMode, UnaryAutomaton};
use crate::counting::CountVector;
use crate::error::{Error, Result};
use crate::numtheory;

/// Distinct count vectors explored by [`extract_periodic`] before giving up.
pub const DEFAULT_VECTOR_CAP: usize = 2_000_000;

/// A set of natural numbers of the form "explicit bits below `threshold`,
/// then `cycle_bits` repeating with period `period`".
///
/// Membership of `m >= threshold` is `cycle_bits[(m - threshold) % period]`.
/// Values are always stored normalized: no divisor of the period folds the
/// cycle onto itself, and the threshold cannot shrink further while agreeing
/// with the cycle. Equality of normalized values is language equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UltimatelyPeriodicSet {
    threshold: usize,
    period: usize,
    pre_bits: Vec<bool>,
    cycle_bits: Vec<bool>,
}

/// How one set relates to another, from the left operand's point of view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetRelation {
    Equal,
    /// Strictly contained in the other set.
    Subset,
    /// Strictly contains the other set.
    Superset,
    Incomparable,
}

/// Result of [`UltimatelyPeriodicSet::compare`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub relation: SetRelation,
    pub disjoint: bool,
}

impl UltimatelyPeriodicSet {
    /// Builds a set from explicit prefix bits and a non-empty cycle, then
    /// normalizes.
    pub fn from_bits(pre_bits: Vec<bool>, cycle_bits: Vec<bool>) -> Self {
        assert!(!cycle_bits.is_empty(), "cycle must have period at least 1");
        let mut s = UltimatelyPeriodicSet {
            threshold: pre_bits.len(),
            period: cycle_bits.len(),
            pre_bits,
            cycle_bits,
        };
        s.normalize();
        s
    }

    /// The set of all lengths.
    pub fn universal() -> Self {
        Self::from_bits(Vec::new(), vec![true])
    }

    /// The empty set.
    pub fn empty() -> Self {
        Self::from_bits(Vec::new(), vec![false])
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn pre_bits(&self) -> &[bool] {
        &self.pre_bits
    }

    pub fn cycle_bits(&self) -> &[bool] {
        &self.cycle_bits
    }

    fn normalize(&mut self) {
        // Fold the cycle by prime divisors until no divisor reproduces it.
        loop {
            let p = self.cycle_bits.len();
            if p == 1 {
                break;
            }
            let mut folded = false;
            for q in prime_divisors(p) {
                let shorter = p / q;
                if (0..p).all(|i| self.cycle_bits[i] == self.cycle_bits[i % shorter]) {
                    self.cycle_bits.truncate(shorter);
                    folded = true;
                    break;
                }
            }
            if !folded {
                break;
            }
        }
        // Roll the threshold back while the last prefix bit agrees with the
        // cycle position that would cover it.
        while let Some(&last) = self.pre_bits.last() {
            let p = self.cycle_bits.len();
            if last == self.cycle_bits[p - 1] {
                self.pre_bits.pop();
                self.cycle_bits.rotate_right(1);
            } else {
                break;
            }
        }
        self.threshold = self.pre_bits.len();
        self.period = self.cycle_bits.len();
    }

    fn bit_at(&self, m: usize) -> bool {
        if m < self.threshold {
            self.pre_bits[m]
        } else {
            self.cycle_bits[(m - self.threshold) % self.period]
        }
    }

    /// Membership of an arbitrary-precision length.
    pub fn member(&self, m: &BigUint) -> bool {
        match m.to_usize() {
            Some(small) => self.bit_at(small),
            None => {
                // m certainly exceeds the threshold; reduce mod period.
                let rem = (m - BigUint::from(self.threshold)) % BigUint::from(self.period);
                self.cycle_bits[rem.to_usize().unwrap()]
            }
        }
    }

    /// Membership of a machine-word length.
    pub fn member_small(&self, m: usize) -> bool {
        self.bit_at(m)
    }

    /// Smallest member, if the set is non-empty.
    pub fn smallest_member(&self) -> Option<usize> {
        (0..self.threshold + self.period).find(|&m| self.bit_at(m))
    }

    /// Smallest non-member, if the set is not universal.
    pub fn smallest_non_member(&self) -> Option<usize> {
        (0..self.threshold + self.period).find(|&m| !self.bit_at(m))
    }

    pub fn is_empty_set(&self) -> bool {
        self.smallest_member().is_none()
    }

    pub fn is_universal_set(&self) -> bool {
        self.smallest_non_member().is_none()
    }

    fn zip(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
        let threshold = self.threshold.max(other.threshold);
        let period = numtheory::lcm(self.period as u64, other.period as u64) as usize;
        let pre = (0..threshold)
            .map(|m| f(self.bit_at(m), other.bit_at(m)))
            .collect();
        let cycle = (0..period)
            .map(|i| f(self.bit_at(threshold + i), other.bit_at(threshold + i)))
            .collect();
        Self::from_bits(pre, cycle)
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(
            self.pre_bits.iter().map(|b| !b).collect(),
            self.cycle_bits.iter().map(|b| !b).collect(),
        )
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    /// Members of `self` that are not members of `other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    /// Decides equality, strict inclusion either way, or incomparability on
    /// the common threshold-and-lcm alignment, and whether the sets are
    /// disjoint.
    pub fn compare(&self, other: &Self) -> Comparison {
        let threshold = self.threshold.max(other.threshold);
        let period = numtheory::lcm(self.period as u64, other.period as u64) as usize;
        let mut left_in_right = true;
        let mut right_in_left = true;
        let mut disjoint = true;
        for m in 0..threshold + period {
            let (x, y) = (self.bit_at(m), other.bit_at(m));
            left_in_right &= !x | y;
            right_in_left &= !y | x;
            disjoint &= !(x & y);
        }
        let relation = match (left_in_right, right_in_left) {
            (true, true) => SetRelation::Equal,
            (true, false) => SetRelation::Subset,
            (false, true) => SetRelation::Superset,
            (false, false) => SetRelation::Incomparable,
        };
        Comparison { relation, disjoint }
    }

    /// The minimal deterministic automaton of the set: a chain of `threshold`
    /// states feeding a cycle of `period` states, accepting per the bits.
    pub fn canonical_dfa(&self) -> UnaryAutomaton {
        let t = self.threshold;
        let p = self.period;
        let mut edges = Vec::with_capacity(t + p);
        for i in 0..t {
            edges.push((i, i + 1));
        }
        for i in 0..p {
            let next = if i + 1 < p { t + i + 1 } else { t };
            edges.push((t + i, next));
        }
        let accepting = (0..t + p).filter(|&q| self.bit_at(q)).collect::<Vec<_>>();
        UnaryAutomaton::from_parts(t + p, 0, accepting, edges)
    }
}

impl fmt::Display for UltimatelyPeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |bits: &[bool]| -> String {
            bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
        };
        write!(
            f,
            "t={} p={} pre={} cyc={}",
            self.threshold,
            self.period,
            render(&self.pre_bits),
            render(&self.cycle_bits)
        )
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Extracts the exact length set of an automaton under a semantics mode.
///
/// The saturating count vector after `m` steps determines acceptance of the
/// length-`m` word, and the vector sequence over a finite automaton must
/// eventually repeat; detecting the first repeated vector therefore yields
/// the complete language. `cap` bounds the number of distinct vectors stored
/// (at most `3^n` exist).
pub fn extract_periodic(
    a: &UnaryAutomaton,
    mode: SemanticsMode,
    cap: usize,
) -> Result<UltimatelyPeriodicSet> {
    extract_periodic_counted(a, mode, cap).map(|(set, _)| set)
}

/// Like [`extract_periodic`], also reporting the number of vector steps
/// performed before the repeat was found.
pub fn extract_periodic_counted(
    a: &UnaryAutomaton,
    mode: SemanticsMode,
    cap: usize,
) -> Result<(UltimatelyPeriodicSet, usize)> {
    let mut seen: HashMap<CountVector, usize> = HashMap::new();
    let mut bits: Vec<bool> = Vec::new();
    let mut v = CountVector::unit(a.state_count(), a.initial());
    loop {
        if let Some(&first) = seen.get(&v) {
            let mu = first;
            let pi = bits.len() - first;
            let cycle = bits.split_off(mu);
            let steps = mu + pi;
            return Ok((UltimatelyPeriodicSet::from_bits(bits, cycle), steps));
        }
        if seen.len() >= cap {
            return Err(Error::VectorSpaceExceeded(cap));
        }
        seen.insert(v.clone(), bits.len());
        bits.push(mode.accepts_total(v.accepting_total(a)));
        v = v.step(a);
    }
}

//! Decision procedures: membership at astronomically long inputs, emptiness,
//! universality, inclusion, and equivalence.
//!
//! Membership raises the adjacency matrix to the input length over the
//! saturating semiring, processing the length's ternary digits from the most
//! significant end: cube the accumulator, then multiply by the adjacency
//! matrix as many times as the digit says. The language-level questions are
//! answered on exact periodic sets, which also furnish the shortest witness
//! length whenever the answer is negative.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::automaton::{SemanticsMode, UnaryAutomaton};
use crate::counting::{CountMatrix, SaturatingCount};
use crate::error::Result;
use crate::periodic::{extract_periodic_counted, UltimatelyPeriodicSet};

/// A length in ternary, most significant digit first. No leading zeros
/// except for the single digit of zero itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryDigits {
    digits: Vec<u8>,
}

impl TernaryDigits {
    pub fn from_biguint(m: &BigUint) -> Self {
        if m.is_zero() {
            return TernaryDigits { digits: vec![0] };
        }
        let mut rest = m.clone();
        let mut digits = Vec::new();
        while !rest.is_zero() {
            let digit = (&rest % 3u32).to_u32_digits().first().copied().unwrap_or(0);
            digits.push(digit as u8);
            rest /= 3u32;
        }
        digits.reverse();
        TernaryDigits { digits }
    }

    pub fn from_u64(m: u64) -> Self {
        Self::from_biguint(&BigUint::from(m))
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }

    /// The represented value.
    pub fn value(&self) -> BigUint {
        self.digits
            .iter()
            .fold(BigUint::zero(), |acc, &d| acc * 3u32 + d)
    }
}

/// Outcome of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    pub verdict: bool,
    /// Shortest length demonstrating non-emptiness, non-universality,
    /// non-inclusion, or non-equivalence; absent when the verdict is
    /// positive (and always for membership).
    pub witness_length: Option<BigUint>,
    /// Matrix multiplications or count-vector steps performed.
    pub work: usize,
}

/// Membership of the word of length `m`, by ternary exponentiation of the
/// adjacency matrix. At most `2 + digit` multiplications per digit, so never
/// more than four.
pub fn member_at(a: &UnaryAutomaton, mode: SemanticsMode, m: &TernaryDigits) -> DecisionReport {
    let adjacency = CountMatrix::adjacency(a);
    // `None` stands for the identity, so leading digits cost nothing.
    let mut accumulator: Option<CountMatrix> = None;
    let mut work = 0;
    for &digit in m.digits() {
        if let Some(matrix) = accumulator.take() {
            let squared = matrix.mul(&matrix);
            accumulator = Some(squared.mul(&matrix));
            work += 2;
        }
        for _ in 0..digit {
            accumulator = Some(match accumulator.take() {
                Some(matrix) => {
                    work += 1;
                    matrix.mul(&adjacency)
                }
                None => adjacency.clone(),
            });
        }
    }
    let total = match &accumulator {
        Some(matrix) => matrix.row_accepting_total(a.initial(), a),
        None => {
            if a.is_accepting(a.initial()) {
                SaturatingCount::One
            } else {
                SaturatingCount::Zero
            }
        }
    };
    DecisionReport {
        verdict: mode.accepts_total(total),
        witness_length: None,
        work,
    }
}

fn report(verdict_witness: Option<usize>, work: usize) -> DecisionReport {
    DecisionReport {
        verdict: verdict_witness.is_none(),
        witness_length: verdict_witness.map(BigUint::from),
        work,
    }
}

/// Emptiness; a negative verdict carries the shortest member. The periodic
/// extraction bounds the witness by the number of distinct count vectors,
/// i.e. by `3^n`.
pub fn is_empty(a: &UnaryAutomaton, mode: SemanticsMode, cap: usize) -> Result<DecisionReport> {
    let (set, steps) = extract_periodic_counted(a, mode, cap)?;
    Ok(report(set.smallest_member(), steps))
}

/// Universality; a negative verdict carries the shortest non-member.
pub fn is_universal(a: &UnaryAutomaton, mode: SemanticsMode, cap: usize) -> Result<DecisionReport> {
    let (set, steps) = extract_periodic_counted(a, mode, cap)?;
    Ok(report(set.smallest_non_member(), steps))
}

/// Does `b` accept everything `a` accepts? A negative verdict carries the
/// shortest length in the difference.
pub fn includes(
    a: &UnaryAutomaton,
    mode_a: SemanticsMode,
    b: &UnaryAutomaton,
    mode_b: SemanticsMode,
    cap: usize,
) -> Result<DecisionReport> {
    let (set_a, steps_a) = extract_periodic_counted(a, mode_a, cap)?;
    let (set_b, steps_b) = extract_periodic_counted(b, mode_b, cap)?;
    let witness = set_a.difference(&set_b).smallest_member();
    Ok(report(witness, steps_a + steps_b))
}

/// Language equality; a negative verdict carries the shortest disagreement.
pub fn equivalent(
    a: &UnaryAutomaton,
    mode_a: SemanticsMode,
    b: &UnaryAutomaton,
    mode_b: SemanticsMode,
    cap: usize,
) -> Result<DecisionReport> {
    let (set_a, steps_a) = extract_periodic_counted(a, mode_a, cap)?;
    let (set_b, steps_b) = extract_periodic_counted(b, mode_b, cap)?;
    let witness = smallest_disagreement(&set_a, &set_b);
    Ok(report(witness, steps_a + steps_b))
}

fn smallest_disagreement(
    a: &UltimatelyPeriodicSet,
    b: &UltimatelyPeriodicSet,
) -> Option<usize> {
    let left = a.difference(b).smallest_member();
    let right = b.difference(a).smallest_member();
    match (left, right) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

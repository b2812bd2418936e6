//! Path counting in the semiring {0, 1, at least two}.
//!
//! Exclusive acceptance only ever distinguishes "no accepting path", "exactly
//! one" and "two or more", so all path arithmetic in this crate saturates at
//! two. Exact big-integer counting is deliberately not part of the library.

use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};

use crate::automaton::{StateId, UnaryAutomaton};

/// A path count capped at two.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SaturatingCount {
    #[default]
    Zero,
    One,
    Many,
}

impl SaturatingCount {
    /// Saturating image of an exact count.
    pub fn from_count(count: usize) -> Self {
        match count {
            0 => SaturatingCount::Zero,
            1 => SaturatingCount::One,
            _ => SaturatingCount::Many,
        }
    }

    pub fn is_zero(self) -> bool {
        self == SaturatingCount::Zero
    }
}

impl Add for SaturatingCount {
    type Output = SaturatingCount;

    fn add(self, rhs: SaturatingCount) -> SaturatingCount {
        use SaturatingCount::*;
        match (self, rhs) {
            (Zero, x) | (x, Zero) => x,
            _ => Many,
        }
    }
}

impl AddAssign for SaturatingCount {
    fn add_assign(&mut self, rhs: SaturatingCount) {
        *self = *self + rhs;
    }
}

impl Mul for SaturatingCount {
    type Output = SaturatingCount;

    fn mul(self, rhs: SaturatingCount) -> SaturatingCount {
        use SaturatingCount::*;
        match (self, rhs) {
            (Zero, _) | (_, Zero) => Zero,
            (One, x) | (x, One) => x,
            (Many, Many) => Many,
        }
    }
}

impl Sum for SaturatingCount {
    fn sum<I: Iterator<Item = SaturatingCount>>(iter: I) -> SaturatingCount {
        iter.fold(SaturatingCount::Zero, |acc, x| acc + x)
    }
}

/// Saturating path counts per state, indexed like the automaton's states.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountVector {
    entries: Vec<SaturatingCount>,
}

impl CountVector {
    /// The vector with a single `One` at `at`.
    pub fn unit(len: usize, at: StateId) -> Self {
        let mut entries = vec![SaturatingCount::Zero; len];
        entries[at] = SaturatingCount::One;
        CountVector { entries }
    }

    pub fn entries(&self) -> &[SaturatingCount] {
        &self.entries
    }

    pub fn get(&self, state: StateId) -> SaturatingCount {
        self.entries[state]
    }

    /// One transition step: the vector-matrix product with the automaton's
    /// adjacency matrix, walked sparsely over the successor sets.
    pub fn step(&self, a: &UnaryAutomaton) -> CountVector {
        let mut next = vec![SaturatingCount::Zero; self.entries.len()];
        for (state, &count) in self.entries.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &succ in a.successors(state) {
                next[succ] += count;
            }
        }
        CountVector { entries: next }
    }

    /// Saturating sum of the entries over the accepting states.
    pub fn accepting_total(&self, a: &UnaryAutomaton) -> SaturatingCount {
        a.accepting().iter().map(|&q| self.entries[q]).sum()
    }
}

/// Dense square matrix of saturating counts; the automaton's adjacency matrix
/// and its powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountMatrix {
    size: usize,
    cells: Vec<SaturatingCount>,
}

impl CountMatrix {
    pub fn identity(size: usize) -> Self {
        let mut m = CountMatrix {
            size,
            cells: vec![SaturatingCount::Zero; size * size],
        };
        for i in 0..size {
            m.cells[i * size + i] = SaturatingCount::One;
        }
        m
    }

    /// Adjacency matrix: entry (i, j) is `One` exactly when j is a successor
    /// of i.
    pub fn adjacency(a: &UnaryAutomaton) -> Self {
        let size = a.state_count();
        let mut m = CountMatrix {
            size,
            cells: vec![SaturatingCount::Zero; size * size],
        };
        for i in 0..size {
            for &j in a.successors(i) {
                m.cells[i * size + j] = SaturatingCount::One;
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn at(&self, i: usize, j: usize) -> SaturatingCount {
        self.cells[i * self.size + j]
    }

    pub fn mul(&self, rhs: &CountMatrix) -> CountMatrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = CountMatrix {
            size: n,
            cells: vec![SaturatingCount::Zero; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let lhs = self.cells[i * n + k];
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.cells[i * n + j] += lhs * rhs.cells[k * n + j];
                }
            }
        }
        out
    }

    /// Saturating sum of row `i` over the accepting columns.
    pub fn row_accepting_total(&self, i: usize, a: &UnaryAutomaton) -> SaturatingCount {
        a.accepting()
            .iter()
            .map(|&j| self.cells[i * self.size + j])
            .sum()
    }
}

//! The shared automaton representation.
//!
//! One graph type serves DFAs, NFAs and exclusive NFAs over the one-letter
//! alphabet; a [`SemanticsMode`] picks how the computation tree is read.
//! States are plain indices, transitions are successor sets (never multisets),
//! and every value is immutable once built.

use std::collections::{BTreeSet, VecDeque};

use crate::counting::{CountVector, SaturatingCount};
use crate::error::{Error, Result};

pub type StateId = usize;

/// How acceptance is read off the computation tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SemanticsMode {
    /// At least one accepting path (plain NFA).
    Existential,
    /// Exactly one accepting path (exclusive NFA).
    Exclusive,
    /// Exactly one successor everywhere; acceptance degenerates to the single
    /// run. Only valid on complete single-successor automata.
    Deterministic,
}

impl SemanticsMode {
    /// Whether a word with the given saturated accepting-path count is
    /// accepted under this mode.
    pub fn accepts_total(self, total: SaturatingCount) -> bool {
        match self {
            SemanticsMode::Exclusive => total == SaturatingCount::One,
            SemanticsMode::Existential | SemanticsMode::Deterministic => !total.is_zero(),
        }
    }
}

/// A unary finite automaton: a directed graph over states `0..state_count`
/// with an initial state and a set of accepting states. The single input
/// symbol is implicit; reading it moves along any outgoing edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryAutomaton {
    state_count: usize,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    successors: Vec<BTreeSet<StateId>>,
}

impl UnaryAutomaton {
    /// Builds an automaton from raw parts. Duplicate edges collapse (successor
    /// sets, not multisets). Out-of-range accepting or target indices are
    /// stored as-is and reported by [`validate`](Self::validate); an
    /// out-of-range edge *source* has nowhere to live and panics.
    pub fn from_parts(
        state_count: usize,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        edges: impl IntoIterator<Item = (StateId, StateId)>,
    ) -> Self {
        let mut successors = vec![BTreeSet::new(); state_count];
        for (from, to) in edges {
            assert!(
                from < state_count,
                "edge source {from} out of range for {state_count} states"
            );
            successors[from].insert(to);
        }
        UnaryAutomaton {
            state_count,
            initial,
            accepting: accepting.into_iter().collect(),
            successors,
        }
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting.contains(&state)
    }

    pub fn successors(&self, state: StateId) -> &BTreeSet<StateId> {
        &self.successors[state]
    }

    /// All edges in (from, to) order.
    pub fn edges(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(from, set)| set.iter().map(move |&to| (from, to)))
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(BTreeSet::len).sum()
    }

    /// Checks the structural invariants and the compatibility with `mode`.
    pub fn validate(&self, mode: SemanticsMode) -> Result<()> {
        let n = self.state_count;
        if self.initial >= n {
            return Err(Error::IndexOutOfRange {
                what: "initial state",
                index: self.initial,
                state_count: n,
            });
        }
        if let Some(&bad) = self.accepting.iter().find(|&&q| q >= n) {
            return Err(Error::IndexOutOfRange {
                what: "accepting state",
                index: bad,
                state_count: n,
            });
        }
        for set in &self.successors {
            if let Some(&bad) = set.iter().find(|&&q| q >= n) {
                return Err(Error::IndexOutOfRange {
                    what: "edge target",
                    index: bad,
                    state_count: n,
                });
            }
        }
        if mode == SemanticsMode::Deterministic {
            for (state, set) in self.successors.iter().enumerate() {
                if set.len() != 1 {
                    return Err(Error::NondeterministicUnderDfaMode {
                        state,
                        out_degree: set.len(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Saturating number of paths of exactly `length` steps from the initial
    /// state to each state.
    pub fn path_count_vector(&self, length: usize) -> CountVector {
        let mut v = CountVector::unit(self.state_count, self.initial);
        for _ in 0..length {
            v = v.step(self);
        }
        v
    }

    /// Acceptance of the word of the given length under `mode`.
    pub fn accepts(&self, mode: SemanticsMode, length: usize) -> bool {
        mode.accepts_total(self.path_count_vector(length).accepting_total(self))
    }

    /// Acceptance bits for every length in `0..=max_length`, computed in one
    /// sweep of the count vector.
    pub fn acceptance_bits(&self, mode: SemanticsMode, max_length: usize) -> Vec<bool> {
        let mut bits = Vec::with_capacity(max_length + 1);
        let mut v = CountVector::unit(self.state_count, self.initial);
        bits.push(mode.accepts_total(v.accepting_total(self)));
        for _ in 0..max_length {
            v = v.step(self);
            bits.push(mode.accepts_total(v.accepting_total(self)));
        }
        bits
    }

    /// Removes states that are unreachable from the initial state or cannot
    /// reach an accepting state, remapping the survivors in ascending order.
    /// If the initial state itself is unproductive the result is the one-state
    /// automaton with no edges and no accepting states. Accepting-path counts
    /// are preserved for every length.
    pub fn trim(&self) -> UnaryAutomaton {
        self.trim_with_map().0
    }

    /// Like [`trim`](Self::trim), also reporting where each original state
    /// ended up (`None` for removed states; all `None` in the dead case).
    pub fn trim_with_map(&self) -> (UnaryAutomaton, Vec<Option<StateId>>) {
        let n = self.state_count;

        let mut reachable = vec![false; n];
        let mut queue = VecDeque::from([self.initial]);
        reachable[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            for &s in &self.successors[q] {
                if !reachable[s] {
                    reachable[s] = true;
                    queue.push_back(s);
                }
            }
        }

        let mut predecessors = vec![Vec::new(); n];
        for (from, to) in self.edges() {
            predecessors[to].push(from);
        }
        let mut productive = vec![false; n];
        let mut queue: VecDeque<StateId> = self.accepting.iter().copied().collect();
        for &q in &self.accepting {
            productive[q] = true;
        }
        while let Some(q) = queue.pop_front() {
            for &p in &predecessors[q] {
                if !productive[p] {
                    productive[p] = true;
                    queue.push_back(p);
                }
            }
        }

        let keep: Vec<StateId> = (0..n).filter(|&q| reachable[q] && productive[q]).collect();
        if !keep.contains(&self.initial) {
            let dead = UnaryAutomaton::from_parts(1, 0, [], []);
            return (dead, vec![None; n]);
        }

        let mut map = vec![None; n];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let edges = self.edges().filter_map(|(from, to)| match (map[from], map[to]) {
            (Some(f), Some(t)) => Some((f, t)),
            _ => None,
        });
        let accepting = self.accepting.iter().filter_map(|&q| map[q]);
        let trimmed = UnaryAutomaton::from_parts(
            keep.len(),
            map[self.initial].unwrap(),
            accepting.collect::<Vec<_>>(),
            edges.collect::<Vec<_>>(),
        );
        (trimmed, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::SaturatingCount::*;

    #[test]
    fn validate_accepts_complete_one_state_dfa() {
        let a = UnaryAutomaton::from_parts(1, 0, [0], [(0, 0)]);
        assert_eq!(a.validate(SemanticsMode::Deterministic), Ok(()));
    }

    #[test]
    fn validate_rejects_incomplete_dfa() {
        let a = UnaryAutomaton::from_parts(1, 0, [0], []);
        assert_eq!(
            a.validate(SemanticsMode::Deterministic),
            Err(Error::NondeterministicUnderDfaMode {
                state: 0,
                out_degree: 0
            })
        );
        // Fine as an NFA: the transition function may map to the empty set.
        assert_eq!(a.validate(SemanticsMode::Existential), Ok(()));
    }

    #[test]
    fn validate_rejects_out_of_range_target() {
        let a = UnaryAutomaton::from_parts(3, 0, [1], [(0, 5)]);
        assert_eq!(
            a.validate(SemanticsMode::Exclusive),
            Err(Error::IndexOutOfRange {
                what: "edge target",
                index: 5,
                state_count: 3
            })
        );
    }

    #[test]
    fn path_counts_single_branch() {
        let a = UnaryAutomaton::from_parts(3, 0, [], [(0, 1), (0, 2)]);
        assert_eq!(a.path_count_vector(1).entries(), &[Zero, One, One]);
    }

    #[test]
    fn path_counts_saturate_on_parallel_paths() {
        let a = UnaryAutomaton::from_parts(4, 0, [3], [(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(a.path_count_vector(2).get(3), Many);
        assert!(!a.accepts(SemanticsMode::Exclusive, 2));
        assert!(a.accepts(SemanticsMode::Existential, 2));
    }

    #[test]
    fn path_counts_length_zero() {
        let a = UnaryAutomaton::from_parts(2, 1, [], [(0, 1), (1, 0)]);
        assert_eq!(a.path_count_vector(0).entries(), &[Zero, One]);
    }

    #[test]
    fn exclusive_accepts_unique_path() {
        let a = UnaryAutomaton::from_parts(1, 0, [0], [(0, 0)]);
        for len in [0, 1, 7, 100] {
            assert!(a.accepts(SemanticsMode::Exclusive, len));
        }
    }

    #[test]
    fn trim_drops_unproductive_tail() {
        let a = UnaryAutomaton::from_parts(3, 0, [1], [(0, 1), (1, 2)]);
        let t = a.trim();
        assert_eq!(t, UnaryAutomaton::from_parts(2, 0, [1], [(0, 1)]));
    }

    #[test]
    fn trim_keeps_accepting_cycle_intact() {
        let a = UnaryAutomaton::from_parts(3, 0, [0, 1, 2], [(0, 1), (1, 2), (2, 0)]);
        assert_eq!(a.trim(), a);
    }

    #[test]
    fn trim_of_unproductive_initial_is_dead_automaton() {
        let a = UnaryAutomaton::from_parts(2, 0, [], [(0, 1)]);
        let (t, map) = a.trim_with_map();
        assert_eq!(t, UnaryAutomaton::from_parts(1, 0, [], []));
        assert_eq!(map, vec![None, None]);
    }

    #[test]
    fn acceptance_bits_match_pointwise_accepts() {
        let a = UnaryAutomaton::from_parts(4, 0, [2], [(0, 1), (1, 2), (2, 3), (3, 2), (0, 2)]);
        for mode in [SemanticsMode::Existential, SemanticsMode::Exclusive] {
            let bits = a.acceptance_bits(mode, 12);
            for (len, &bit) in bits.iter().enumerate() {
                assert_eq!(bit, a.accepts(mode, len));
            }
        }
    }
}

//! Single-final-state form.
//!
//! Rewrites a trimmed automaton so that the initial state has no incoming
//! edges and a single accepting state `q+` has no outgoing edges, while the
//! number of paths from the initial state to `q+` of each length `l >= 1`
//! equals the number of accepting paths of length `l` in the input. The empty
//! word is deliberately not represented; callers that need it read it off the
//! original automaton directly.

use std::collections::BTreeSet;

use crate::automaton::{StateId, UnaryAutomaton};
use crate::error::{Error, Result};

/// A normalized automaton together with its unique accepting state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleFinal {
    pub automaton: UnaryAutomaton,
    pub final_state: StateId,
}

/// Builds the single-final-state form of a trimmed automaton.
///
/// For every state `u` with `c >= 2` accepting successors, `c - 1` fresh
/// copies of `u` are added sharing all of `u`'s incoming edges; each copy and
/// `u` itself get one edge to `q+`. The copies replay every path into `u`, so
/// a length-`l` input with `c * k` accepting continuations through `u` keeps
/// exactly that path multiplicity towards `q+`.
///
/// One corner cannot be represented exactly: successor sets admit at most one
/// edge from the initial state to `q+`, so when the initial state has two or
/// more accepting successors the length-one multiplicity (>= 2, hence
/// rejected under exclusive semantics) is mapped to zero paths, which is also
/// rejected. All lengths `l >= 2` are exact.
///
/// Errors with [`Error::EmptyLanguageAfterTrim`] when the input has no
/// accepting path of positive length (language empty or `{lambda}`).
pub fn normalize_single_final(a: &UnaryAutomaton) -> Result<SingleFinal> {
    if a.accepting().is_empty() {
        return Err(Error::EmptyLanguageAfterTrim);
    }
    let n = a.state_count();
    let mut successors: Vec<BTreeSet<StateId>> = (0..n).map(|q| a.successors(q).clone()).collect();
    let mut initial = a.initial();

    let initial_has_in_edges = successors.iter().any(|set| set.contains(&initial));
    if initial_has_in_edges {
        let fresh = successors.len();
        let outgoing = successors[initial].clone();
        successors.push(outgoing);
        initial = fresh;
    }
    let base = successors.len();

    // Incoming edges per state before any gadget edges are added.
    let mut predecessors: Vec<Vec<StateId>> = vec![Vec::new(); base];
    for (from, set) in successors.iter().enumerate() {
        for &to in set {
            predecessors[to].push(from);
        }
    }

    // Copies and q+ live after the base states; q+ is the last state.
    let mut copy_owners: Vec<StateId> = Vec::new();
    let mut final_feeders: Vec<StateId> = Vec::new();
    for (u, out_edges) in successors.iter().enumerate() {
        let fanout = out_edges
            .iter()
            .filter(|s| a.accepting().contains(s))
            .count();
        if fanout == 0 {
            continue;
        }
        if u == initial {
            if fanout == 1 {
                final_feeders.push(u);
            }
            // fanout >= 2: a single q+ edge cannot carry the multiplicity,
            // and copies of a state without incoming edges are unreachable;
            // dropping the edge keeps length one rejected on both sides.
            continue;
        }
        final_feeders.push(u);
        for _ in 1..fanout {
            copy_owners.push(u);
        }
    }

    let state_count = base + copy_owners.len() + 1;
    let q_plus = state_count - 1;
    let mut edges: Vec<(StateId, StateId)> = Vec::new();
    for (from, set) in successors.iter().enumerate() {
        for &to in set {
            edges.push((from, to));
        }
    }
    for (k, &owner) in copy_owners.iter().enumerate() {
        let copy = base + k;
        for &p in &predecessors[owner] {
            edges.push((p, copy));
        }
        edges.push((copy, q_plus));
    }
    for &u in &final_feeders {
        edges.push((u, q_plus));
    }

    let built = UnaryAutomaton::from_parts(state_count, initial, [q_plus], edges);
    let (trimmed, map) = built.trim_with_map();
    match map[q_plus] {
        Some(final_state) => Ok(SingleFinal {
            automaton: trimmed,
            final_state,
        }),
        None => Err(Error::EmptyLanguageAfterTrim),
    }
}

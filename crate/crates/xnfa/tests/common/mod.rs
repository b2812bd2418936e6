//! Shared helpers for the integration suites: exact big-integer counting,
//! brute-force enumeration oracles, and seeded corpora. Everything here is
//! deliberately independent of the library's saturating-count machinery.

#![allow(dead_code)]

use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use xnfa::scc::SccAnalysis;
use xnfa::witness::{random_automaton, SplitMix64};
use xnfa::{SemanticsMode, UnaryAutomaton};

/// Exact number of accepting paths per length `0..=upto`, by big-integer
/// vector iteration over the raw successor sets.
pub fn exact_accepting_counts(a: &UnaryAutomaton, upto: usize) -> Vec<BigUint> {
    exact_counts(a, a.accepting().iter().copied().collect::<Vec<_>>(), upto)
}

/// Exact number of paths from the initial state into `targets` per length.
pub fn exact_counts(a: &UnaryAutomaton, targets: Vec<usize>, upto: usize) -> Vec<BigUint> {
    let mut v = vec![BigUint::zero(); a.state_count()];
    v[a.initial()] = BigUint::from(1u32);
    let mut out = Vec::with_capacity(upto + 1);
    out.push(targets.iter().map(|&q| v[q].clone()).sum());
    for _ in 0..upto {
        let mut next = vec![BigUint::zero(); a.state_count()];
        for (q, count) in v.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &s in a.successors(q) {
                next[s] += count;
            }
        }
        v = next;
        out.push(targets.iter().map(|&q| v[q].clone()).sum());
    }
    out
}

/// Exact per-state path counts of a fixed length.
pub fn exact_count_vector(a: &UnaryAutomaton, length: usize) -> Vec<BigUint> {
    let mut v = vec![BigUint::zero(); a.state_count()];
    v[a.initial()] = BigUint::from(1u32);
    for _ in 0..length {
        let mut next = vec![BigUint::zero(); a.state_count()];
        for (q, count) in v.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &s in a.successors(q) {
                next[s] += count;
            }
        }
        v = next;
    }
    v
}

/// Lengths of every simple cycle whose nodes all lie in `nodes`. Each cycle
/// is enumerated once, from its smallest node.
pub fn simple_cycle_lengths(a: &UnaryAutomaton, nodes: &[usize]) -> Vec<usize> {
    let allowed: std::collections::BTreeSet<usize> = nodes.iter().copied().collect();
    let mut lengths = Vec::new();
    for &start in nodes {
        let mut on_path = vec![false; a.state_count()];
        let mut stack = vec![(start, a.successors(start).iter().copied().collect::<Vec<_>>(), 0usize)];
        on_path[start] = true;
        while let Some((state, succ, pos)) = stack.last_mut() {
            if *pos >= succ.len() {
                on_path[*state] = false;
                stack.pop();
                continue;
            }
            let next = succ[*pos];
            *pos += 1;
            if next == start {
                lengths.push(stack.len());
            } else if allowed.contains(&next) && next > start && !on_path[next] {
                on_path[next] = true;
                stack.push((next, a.successors(next).iter().copied().collect(), 0));
            }
        }
    }
    lengths
}

/// Every simple path from `from` to `to`, reported as (length, sequence of
/// non-trivial component ids in visit order).
pub fn simple_paths_with_sequences(
    a: &UnaryAutomaton,
    analysis: &SccAnalysis,
    from: usize,
    to: usize,
) -> Vec<(usize, Vec<usize>)> {
    let mut results = Vec::new();
    let mut visited = vec![false; a.state_count()];
    let mut sequence = Vec::new();
    visited[from] = true;
    if analysis.components[analysis.component_of[from]].nontrivial {
        sequence.push(analysis.component_of[from]);
    }
    dfs_paths(a, analysis, from, to, 0, &mut visited, &mut sequence, &mut results);
    results
}

#[allow(clippy::too_many_arguments)]
fn dfs_paths(
    a: &UnaryAutomaton,
    analysis: &SccAnalysis,
    state: usize,
    to: usize,
    length: usize,
    visited: &mut Vec<bool>,
    sequence: &mut Vec<usize>,
    results: &mut Vec<(usize, Vec<usize>)>,
) {
    if state == to {
        results.push((length, sequence.clone()));
        // `to` has no outgoing edges in normalized automata, but fall through
        // anyway for generality.
    }
    for &next in a.successors(state) {
        if visited[next] {
            continue;
        }
        visited[next] = true;
        let comp = analysis.component_of[next];
        let pushed = analysis.components[comp].nontrivial && sequence.last() != Some(&comp);
        if pushed {
            sequence.push(comp);
        }
        dfs_paths(a, analysis, next, to, length + 1, visited, sequence, results);
        if pushed {
            sequence.pop();
        }
        visited[next] = false;
    }
}

/// Largest lcm over all partitions of exactly `n` (parts of one allowed, so
/// this also covers budgets below `n`).
pub fn max_lcm_over_partitions(n: u64) -> u128 {
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    fn go(remaining: u64, max_part: u64, lcm: u128, best: &mut u128) {
        if remaining == 0 {
            *best = (*best).max(lcm);
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            let p = part as u128;
            go(remaining - part, part, lcm / gcd(lcm, p) * p, best);
        }
    }
    let mut best = 1;
    go(n, n, 1, &mut best);
    best
}

/// Deterministic automaton corpus: states cycle over `2..=max_states`,
/// density over a fixed ladder, per-case seeds come from one SplitMix64
/// stream.
pub fn seeded_corpus(
    base_seed: u64,
    count: usize,
    max_states: usize,
    ensure_trim: bool,
) -> Vec<UnaryAutomaton> {
    const DENSITIES: [f64; 4] = [0.15, 0.25, 0.35, 0.5];
    let mut stream = SplitMix64::new(base_seed);
    (0..count)
        .map(|i| {
            let states = 2 + i % (max_states - 1);
            let density = DENSITIES[i % DENSITIES.len()];
            random_automaton(states, density, stream.next_u64(), ensure_trim)
        })
        .collect()
}

/// Proptest strategy over small automata with at most `max_states` states.
pub fn arb_automaton(max_states: usize) -> impl Strategy<Value = UnaryAutomaton> {
    (1..=max_states).prop_flat_map(|n| {
        let edges = proptest::collection::vec(proptest::bool::weighted(0.3), n * n);
        let accepting = proptest::collection::vec(any::<bool>(), n);
        let initial = 0..n;
        (edges, accepting, initial).prop_map(move |(edges, accepting, initial)| {
            let edge_list = edges
                .iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(|(idx, _)| (idx / n, idx % n));
            let accepting_list = accepting
                .iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(|(q, _)| q);
            UnaryAutomaton::from_parts(n, initial, accepting_list, edge_list)
        })
    })
}

/// Acceptance scan straight from the definition: exact big-integer path
/// counts per length, read under the mode. Used to cross-check the decision
/// procedures without touching the saturating machinery.
pub fn scan_bits(a: &UnaryAutomaton, mode: SemanticsMode, upto: usize) -> Vec<bool> {
    exact_accepting_counts(a, upto)
        .into_iter()
        .map(|count| match mode {
            SemanticsMode::Exclusive => count == BigUint::from(1u32),
            SemanticsMode::Existential | SemanticsMode::Deterministic => !count.is_zero(),
        })
        .collect()
}

//! Chrobak normal form for unary exclusive NFAs, and determinization.
//!
//! A unary automaton in Chrobak normal form is a deterministic tail that ends
//! in a single nondeterministic branch into disjoint cycles. The conversion
//! here keeps exclusive acceptance exact: the tail answers every length it
//! covers outright, and beyond the tail the cycles reproduce the *saturated
//! number* of accepting paths per residue class, so lengths with two or more
//! accepting paths stay rejected.
//!
//! Cycle marks are derived per superpath family: paths from the initial state
//! to the final state are grouped by the sequence of non-trivial strongly
//! connected components they traverse. Within one family every walk length is
//! congruent, modulo the gcd `d` of the component periods, to one of finitely
//! many residues, and for lengths beyond the tail every such residue class is
//! fully populated. A family whose components contain more than one simple
//! cycle yields at least two accepting paths for each of its lengths; a
//! single-simple-cycle family contributes exactly as many paths per length as
//! it has entry/exit route combinations in that residue class. Summing those
//! contributions per `(d, residue)` with saturating arithmetic tells each
//! class apart: count one marks the accept cycle `A_d` alone, count two or
//! more marks its twin `R_d` as well, so exclusive acceptance kills the
//! class.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::automaton::{SemanticsMode, StateId, UnaryAutomaton};
use crate::counting::SaturatingCount;
use crate::error::{Error, Result};
use crate::normalize::{normalize_single_final, SingleFinal};
use crate::numtheory;
use crate::scc::{self, SccAnalysis};

/// Most sequences of non-trivial components explored before giving up.
pub const DEFAULT_SUPERPATH_BUDGET: usize = 10_000;

/// Largest lcm cycle a determinization is allowed to materialize.
pub const DEFAULT_DFA_STATE_BUDGET: usize = 1_000_000;

/// An automaton in Chrobak normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChrobakAutomaton {
    /// Acceptance per tail position; the word of length `i` is accepted on
    /// the tail exactly when bit `i` is set. Conversions emit a tail of
    /// length `m^3 + 2`.
    pub tail_accepting: Vec<bool>,
    /// Disjoint cycles entered from the last tail state, in ascending length;
    /// equal-length cycles come in accept/reject-twin pairs.
    pub cycles: Vec<ChrobakCycle>,
    /// Semantics the form is meant to be read under.
    pub mode: SemanticsMode,
    /// State count of the normalized automaton the form was derived from;
    /// the parameter in all size formulas.
    pub m: usize,
}

/// One cycle of a Chrobak normal form. Position `i` is reached exactly at
/// input lengths `tail + i + x * length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChrobakCycle {
    pub length: usize,
    pub accepting: BTreeSet<usize>,
}

/// Which marking rule a superpath family falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleCase {
    /// The family traverses a single non-trivial component that is one
    /// simple cycle; path multiplicity per residue is the number of
    /// entry/exit combinations.
    OneSimpleCycle,
    /// Anything else; every length the family covers has at least two
    /// accepting paths within the family.
    ManySimpleCycles,
}

/// Aggregated view of all initial-to-final paths sharing one sequence of
/// non-trivial strongly connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperpathSummary {
    /// Component ids (per [`scc::analyze`] of the normalized automaton) in
    /// traversal order.
    pub scc_sequence: Vec<usize>,
    /// Gcd of the periods of the sequence's components.
    pub d: usize,
    pub case: CycleCase,
    /// Residues mod `d` of the lengths of initial-to-final walks confined to
    /// the sequence's allowed subgraph.
    pub residues: BTreeSet<usize>,
    /// The subset of `residues` whose long lengths carry two or more paths.
    /// Equals `residues` whenever `case` is [`CycleCase::ManySimpleCycles`].
    pub many_path_residues: BTreeSet<usize>,
}

impl ChrobakAutomaton {
    pub fn total_cycle_length(&self) -> usize {
        self.cycles.iter().map(|c| c.length).sum()
    }

    pub fn state_count(&self) -> usize {
        self.tail_accepting.len() + self.total_cycle_length()
    }

    /// Explicit graph embedding: the tail chain, one branch edge per cycle,
    /// and the cycle edges, so that every automaton-level operation applies
    /// directly. The embedding accepts the same language as the form under
    /// `self.mode`.
    pub fn as_automaton(&self) -> UnaryAutomaton {
        let tail = self.tail_accepting.len();
        assert!(tail >= 1, "a normal form always has a tail state");
        let states = tail + self.total_cycle_length();
        let mut edges = Vec::new();
        for i in 0..tail.saturating_sub(1) {
            edges.push((i, i + 1));
        }
        let mut accepting: Vec<StateId> = (0..tail).filter(|&i| self.tail_accepting[i]).collect();
        let mut offset = tail;
        for cycle in &self.cycles {
            edges.push((tail - 1, offset));
            for h in 0..cycle.length {
                edges.push((offset + h, offset + (h + 1) % cycle.length));
            }
            accepting.extend(cycle.accepting.iter().map(|&h| offset + h));
            offset += cycle.length;
        }
        UnaryAutomaton::from_parts(states, 0, accepting, edges)
    }

    /// Determinizes the form: the tail is kept verbatim and all cycles merge
    /// into one big cycle whose length is the lcm of the cycle lengths. Each
    /// big-cycle position counts how many small-cycle accepting positions it
    /// aliases and becomes accepting exactly on count one, which preserves
    /// the exclusive language.
    pub fn to_dfa(&self, state_budget: usize) -> Result<UnaryAutomaton> {
        assert!(!self.tail_accepting.is_empty(), "a normal form always has a tail state");
        let mut ell: u128 = 1;
        for cycle in &self.cycles {
            ell = num_lcm_u128(ell, cycle.length as u128);
            if ell > state_budget as u128 {
                return Err(Error::LcmOverflow(state_budget));
            }
        }
        let ell = ell as usize;

        let mut counters = vec![0usize; ell];
        for cycle in &self.cycles {
            for &j in &cycle.accepting {
                let mut t = j;
                while t < ell {
                    counters[t] += 1;
                    t += cycle.length;
                }
            }
        }

        let tail = self.tail_accepting.len();
        let mut edges = Vec::new();
        for i in 0..tail.saturating_sub(1) {
            edges.push((i, i + 1));
        }
        edges.push((tail - 1, tail));
        for i in 0..ell {
            edges.push((tail + i, tail + (i + 1) % ell));
        }
        let mut accepting: Vec<StateId> = (0..tail).filter(|&i| self.tail_accepting[i]).collect();
        accepting.extend((0..ell).filter(|&i| counters[i] == 1).map(|i| tail + i));
        Ok(UnaryAutomaton::from_parts(tail + ell, 0, accepting, edges))
    }
}

fn num_lcm_u128(a: u128, b: u128) -> u128 {
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Converts an automaton, read as an exclusive NFA, into Chrobak normal form
/// with an exactly equal language.
///
/// The tail has `m^3 + 2` states, where `m` is the state count of the
/// single-final-state form (or of the trimmed input when the language has no
/// word of positive length, in which case the tail alone carries the
/// language). The total cycle length is at most `2m`.
pub fn to_chrobak(a: &UnaryAutomaton, superpath_budget: usize) -> Result<ChrobakAutomaton> {
    let trimmed = a.trim();
    let normalized = match normalize_single_final(&trimmed) {
        Ok(sf) => Some(sf),
        Err(Error::EmptyLanguageAfterTrim) => None,
        Err(e) => return Err(e),
    };
    let m = normalized
        .as_ref()
        .map_or(trimmed.state_count(), |sf| sf.automaton.state_count());
    let tail_len = m * m * m + 2;
    let tail_accepting = trimmed.acceptance_bits(SemanticsMode::Exclusive, tail_len - 1);

    let summaries = match &normalized {
        Some(SingleFinal {
            automaton,
            final_state,
        }) => superpath_summaries(automaton, *final_state, superpath_budget)?,
        None => Vec::new(),
    };

    // Saturated path multiplicity per (cycle length, residue) class.
    let mut totals: BTreeMap<(usize, usize), SaturatingCount> = BTreeMap::new();
    for summary in &summaries {
        for &residue in &summary.residues {
            let mult = if summary.many_path_residues.contains(&residue) {
                SaturatingCount::Many
            } else {
                SaturatingCount::One
            };
            *totals
                .entry((summary.d, residue))
                .or_insert(SaturatingCount::Zero) += mult;
        }
    }

    let mut pairs: BTreeMap<usize, (BTreeSet<usize>, BTreeSet<usize>)> = BTreeMap::new();
    for summary in &summaries {
        pairs.entry(summary.d).or_default();
    }
    for (&(d, residue), &total) in &totals {
        // Cycle position i is reached at lengths tail_len + i + x*d; mark the
        // position whose lengths are congruent to the residue.
        let position = (residue + d - tail_len % d) % d;
        let (accept_marks, reject_marks) = pairs.get_mut(&d).unwrap();
        accept_marks.insert(position);
        if total == SaturatingCount::Many {
            reject_marks.insert(position);
        }
    }

    let mut cycles = Vec::new();
    for (d, (accept_marks, reject_marks)) in pairs {
        cycles.push(ChrobakCycle {
            length: d,
            accepting: accept_marks,
        });
        cycles.push(ChrobakCycle {
            length: d,
            accepting: reject_marks,
        });
    }

    Ok(ChrobakAutomaton {
        tail_accepting,
        cycles,
        mode: SemanticsMode::Exclusive,
        m,
    })
}

/// Groups all initial-to-final paths of a single-final-state automaton by the
/// sequence of non-trivial strongly connected components they traverse, and
/// summarizes each group's residues and path multiplicities.
///
/// Sequences with no non-trivial component are omitted: such paths are
/// acyclic, never exceed the tail, and need no cycle marks.
pub fn superpath_summaries(
    normalized: &UnaryAutomaton,
    final_state: StateId,
    budget: usize,
) -> Result<Vec<SuperpathSummary>> {
    let analysis = scc::analyze(normalized);
    let ncomp = analysis.components.len();
    let start = analysis.component_of[normalized.initial()];
    let target = analysis.component_of[final_state];
    debug_assert!(!analysis.components[start].nontrivial);
    debug_assert!(!analysis.components[target].nontrivial);

    let mut dag_successors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncomp];
    for (from, to) in normalized.edges() {
        let (cf, ct) = (analysis.component_of[from], analysis.component_of[to]);
        if cf != ct {
            dag_successors[cf].insert(ct);
        }
    }

    // Component ids are in reverse topological order, so ascending id order
    // visits successors before their predecessors.
    let mut sequences_from: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); ncomp];
    for c in 0..ncomp {
        let mut base: BTreeSet<Vec<usize>> = BTreeSet::new();
        if c == target {
            base.insert(Vec::new());
        }
        for &s in &dag_successors[c] {
            debug_assert!(s < c);
            base.extend(sequences_from[s].iter().cloned());
        }
        if analysis.components[c].nontrivial {
            base = base
                .into_iter()
                .map(|mut seq| {
                    seq.insert(0, c);
                    seq
                })
                .collect();
        }
        if base.len() > budget {
            return Err(Error::SuperpathBudgetExceeded(budget));
        }
        sequences_from[c] = base;
    }

    let mut summaries = Vec::new();
    for sequence in &sequences_from[start] {
        if sequence.is_empty() {
            continue;
        }
        let d = sequence
            .iter()
            .map(|&c| analysis.components[c].period as u64)
            .fold(0, numtheory::gcd) as usize;
        let single = sequence.len() == 1 && analysis.components[sequence[0]].is_simple_cycle;
        let (case, residues, many) = if single {
            let (residues, many) =
                single_cycle_multiplicities(normalized, &analysis, sequence[0], d, final_state);
            (CycleCase::OneSimpleCycle, residues, many)
        } else {
            let residues = sequence_residues(normalized, &analysis, sequence, d, final_state);
            let many = residues.clone();
            (CycleCase::ManySimpleCycles, residues, many)
        };
        summaries.push(SuperpathSummary {
            scc_sequence: sequence.clone(),
            d,
            case,
            residues,
            many_path_residues: many,
        });
    }
    Ok(summaries)
}

/// Residues mod `d` of walk lengths from the initial state to `final_state`
/// whose non-trivial-component visits are exactly `sequence`, in order.
/// Reachability search over (state, components entered, length mod d).
fn sequence_residues(
    a: &UnaryAutomaton,
    analysis: &SccAnalysis,
    sequence: &[usize],
    d: usize,
    final_state: StateId,
) -> BTreeSet<usize> {
    let k = sequence.len();
    let position_of: HashMap<usize, usize> = sequence
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i + 1))
        .collect();

    let width = (k + 1) * d;
    let encode = |state: StateId, phase: usize, residue: usize| state * width + phase * d + residue;
    let mut visited = vec![false; a.state_count() * width];
    let mut queue = VecDeque::new();
    visited[encode(a.initial(), 0, 0)] = true;
    queue.push_back((a.initial(), 0usize, 0usize));

    while let Some((state, phase, residue)) = queue.pop_front() {
        for &next in a.successors(state) {
            let next_residue = (residue + 1) % d;
            let comp = analysis.component_of[next];
            let next_phase = if analysis.components[comp].nontrivial {
                match position_of.get(&comp) {
                    Some(&pos) if pos == phase => phase,
                    Some(&pos) if pos == phase + 1 => phase + 1,
                    _ => continue,
                }
            } else {
                phase
            };
            let idx = encode(next, next_phase, next_residue);
            if !visited[idx] {
                visited[idx] = true;
                queue.push_back((next, next_phase, next_residue));
            }
        }
    }

    (0..d)
        .filter(|&r| visited[encode(final_state, k, r)])
        .collect()
}

/// Residues and saturated path multiplicities for a family traversing a
/// single simple-cycle component.
///
/// Every such walk decomposes uniquely into an entry path through states of
/// trivial components into the cycle, any number of full loops plus the arc
/// between entry and exit positions, and an exit path through trivial states.
/// Entry and exit path counts per residue come from two DAG dynamic programs;
/// the loop count never adds multiplicity because the cycle offers exactly
/// one route.
fn single_cycle_multiplicities(
    a: &UnaryAutomaton,
    analysis: &SccAnalysis,
    comp_id: usize,
    d: usize,
    final_state: StateId,
) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let comp = &analysis.components[comp_id];
    debug_assert_eq!(comp.period, d);
    debug_assert_eq!(comp.nodes.len(), d);
    let n = a.state_count();
    let is_trivial = |q: StateId| !analysis.components[analysis.component_of[q]].nontrivial;

    // Positions along the unique cycle.
    let mut position: HashMap<StateId, usize> = HashMap::new();
    let mut current = comp.nodes[0];
    for step in 0..d {
        position.insert(current, step);
        current = *a
            .successors(current)
            .iter()
            .find(|&&s| analysis.component_of[s] == comp_id)
            .expect("simple cycle node without internal successor");
    }
    debug_assert_eq!(current, comp.nodes[0]);

    use SaturatingCount::Zero;

    // Entry: counts of trivial-only paths from the initial state, recorded
    // per (cycle state, length mod d) at first touch.
    let mut entry = vec![Zero; n * d];
    let mut counts = vec![Zero; n];
    counts[a.initial()] = SaturatingCount::One;
    for length in 1..=n {
        let mut next = vec![Zero; n];
        let mut alive = false;
        for (q, &count) in counts.iter().enumerate() {
            if count.is_zero() || !is_trivial(q) {
                continue;
            }
            for &s in a.successors(q) {
                if is_trivial(s) {
                    next[s] += count;
                    alive = true;
                } else if analysis.component_of[s] == comp_id {
                    entry[s * d + length % d] += count;
                }
            }
        }
        counts = next;
        if !alive {
            break;
        }
    }

    // Exit: counts of trivial-only paths to the final state, recorded per
    // (cycle state, length mod d) at the step that leaves the cycle.
    let mut exit = vec![Zero; n * d];
    let mut rev_counts = vec![Zero; n];
    rev_counts[final_state] = SaturatingCount::One;
    for length in 1..=n {
        for &w in &comp.nodes {
            for &z in a.successors(w) {
                if is_trivial(z) {
                    exit[w * d + length % d] += rev_counts[z];
                }
            }
        }
        let mut next = vec![Zero; n];
        let mut alive = false;
        for (q, slot) in next.iter_mut().enumerate() {
            if !is_trivial(q) {
                continue;
            }
            for &z in a.successors(q) {
                if is_trivial(z) && !rev_counts[z].is_zero() {
                    *slot += rev_counts[z];
                    alive = true;
                }
            }
        }
        rev_counts = next;
        if !alive {
            break;
        }
    }

    // Combine entry, in-cycle arc, and exit per residue.
    let mut multiplicity = vec![Zero; d];
    for &v in &comp.nodes {
        for &w in &comp.nodes {
            let arc = (position[&w] + d - position[&v]) % d;
            for r1 in 0..d {
                let ev = entry[v * d + r1];
                if ev.is_zero() {
                    continue;
                }
                for r2 in 0..d {
                    let xw = exit[w * d + r2];
                    if xw.is_zero() {
                        continue;
                    }
                    multiplicity[(r1 + arc + r2) % d] += ev * xw;
                }
            }
        }
    }

    let residues = (0..d).filter(|&r| !multiplicity[r].is_zero()).collect();
    let many = (0..d)
        .filter(|&r| multiplicity[r] == SaturatingCount::Many)
        .collect();
    (residues, many)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodic::{extract_periodic, DEFAULT_VECTOR_CAP};

    fn language(a: &UnaryAutomaton, mode: SemanticsMode) -> crate::periodic::UltimatelyPeriodicSet {
        extract_periodic(a, mode, DEFAULT_VECTOR_CAP).unwrap()
    }

    #[test]
    fn embedding_of_bare_tail_is_a_chain() {
        let c = ChrobakAutomaton {
            tail_accepting: vec![false, true],
            cycles: vec![],
            mode: SemanticsMode::Exclusive,
            m: 0,
        };
        let a = c.as_automaton();
        assert_eq!(a.state_count(), 2);
        assert_eq!(a.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(a.accepting().iter().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn embedding_branches_once_into_each_cycle() {
        let c = ChrobakAutomaton {
            tail_accepting: vec![false, false],
            cycles: vec![ChrobakCycle {
                length: 3,
                accepting: BTreeSet::from([1]),
            }],
            mode: SemanticsMode::Exclusive,
            m: 0,
        };
        let a = c.as_automaton();
        assert_eq!(a.state_count(), 5);
        let branch: Vec<_> = a.successors(1).iter().copied().collect();
        assert_eq!(branch, vec![2]);
        assert_eq!(a.successors(4).iter().copied().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn dfa_counter_of_two_rejects() {
        let c = ChrobakAutomaton {
            tail_accepting: vec![false],
            cycles: vec![
                ChrobakCycle {
                    length: 2,
                    accepting: BTreeSet::from([0]),
                },
                ChrobakCycle {
                    length: 2,
                    accepting: BTreeSet::from([0]),
                },
            ],
            mode: SemanticsMode::Exclusive,
            m: 0,
        };
        let dfa = c.to_dfa(DEFAULT_DFA_STATE_BUDGET).unwrap();
        assert_eq!(dfa.validate(SemanticsMode::Deterministic), Ok(()));
        // tail of 1 plus big cycle of 2, no accepting state anywhere
        assert_eq!(dfa.state_count(), 3);
        assert!(dfa.accepting().is_empty());
    }

    #[test]
    fn dfa_keeps_single_cycle_marks() {
        let c = ChrobakAutomaton {
            tail_accepting: vec![false],
            cycles: vec![ChrobakCycle {
                length: 3,
                accepting: BTreeSet::from([1]),
            }],
            mode: SemanticsMode::Exclusive,
            m: 0,
        };
        let dfa = c.to_dfa(DEFAULT_DFA_STATE_BUDGET).unwrap();
        assert_eq!(dfa.state_count(), 4);
        assert_eq!(dfa.accepting().iter().copied().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn dfa_aliases_counters_over_the_lcm() {
        let c = ChrobakAutomaton {
            tail_accepting: vec![false],
            cycles: vec![
                ChrobakCycle {
                    length: 2,
                    accepting: BTreeSet::from([0]),
                },
                ChrobakCycle {
                    length: 3,
                    accepting: BTreeSet::from([0]),
                },
            ],
            mode: SemanticsMode::Exclusive,
            m: 0,
        };
        let dfa = c.to_dfa(DEFAULT_DFA_STATE_BUDGET).unwrap();
        // tail 1 + big cycle 6; accepting big-cycle positions 2, 3, 4
        assert_eq!(dfa.state_count(), 7);
        assert_eq!(
            dfa.accepting().iter().copied().collect::<Vec<_>>(),
            vec![3, 4, 5]
        );
    }

    #[test]
    fn dfa_respects_the_state_budget() {
        let c = ChrobakAutomaton {
            tail_accepting: vec![false],
            cycles: vec![
                ChrobakCycle {
                    length: 5,
                    accepting: BTreeSet::new(),
                },
                ChrobakCycle {
                    length: 7,
                    accepting: BTreeSet::new(),
                },
            ],
            mode: SemanticsMode::Exclusive,
            m: 0,
        };
        assert_eq!(c.to_dfa(20), Err(Error::LcmOverflow(20)));
    }

    #[test]
    fn finite_language_converts_to_a_bare_tail() {
        let a = UnaryAutomaton::from_parts(3, 0, [2], [(0, 1), (1, 2)]);
        let c = to_chrobak(&a, DEFAULT_SUPERPATH_BUDGET).unwrap();
        assert!(c.cycles.is_empty());
        assert_eq!(
            language(&c.as_automaton(), SemanticsMode::Exclusive),
            language(&a, SemanticsMode::Exclusive)
        );
    }

    #[test]
    fn empty_language_converts_to_a_bare_tail() {
        let a = UnaryAutomaton::from_parts(2, 0, [], [(0, 1)]);
        let c = to_chrobak(&a, DEFAULT_SUPERPATH_BUDGET).unwrap();
        assert!(c.cycles.is_empty());
        assert!(c.tail_accepting.iter().all(|&b| !b));
        assert_eq!(c.tail_accepting.len(), 3); // trimmed to one state, tail 1^3 + 2
    }

    #[test]
    fn twin_cycles_kill_doubly_covered_even_lengths() {
        // Two disjoint accepting 2-cycles reachable in one step: every even
        // length from two onward has exactly two accepting paths, so the
        // exclusive language is empty.
        let a = UnaryAutomaton::from_parts(
            5,
            0,
            [2, 4],
            [(0, 1), (1, 2), (2, 1), (0, 3), (3, 4), (4, 3)],
        );
        let c = to_chrobak(&a, DEFAULT_SUPERPATH_BUDGET).unwrap();
        let marked: Vec<&ChrobakCycle> =
            c.cycles.iter().filter(|cy| !cy.accepting.is_empty()).collect();
        assert_eq!(marked.len(), 2, "both twins of the 2-cycle carry the mark");
        assert_eq!(marked[0].accepting, marked[1].accepting);
        assert!(language(&a, SemanticsMode::Exclusive).is_empty_set());
        assert_eq!(
            language(&c.as_automaton(), SemanticsMode::Exclusive),
            language(&a, SemanticsMode::Exclusive)
        );
    }

    #[test]
    fn lambda_only_language_converts_to_a_bare_tail() {
        let a = UnaryAutomaton::from_parts(1, 0, [0], []);
        let c = to_chrobak(&a, DEFAULT_SUPERPATH_BUDGET).unwrap();
        assert!(c.cycles.is_empty());
        assert_eq!(c.tail_accepting, vec![true, false, false]);
        assert_eq!(
            language(&c.as_automaton(), SemanticsMode::Exclusive),
            language(&a, SemanticsMode::Exclusive)
        );
    }

    #[test]
    fn superpath_budget_is_enforced() {
        let a = crate::witness::witness_xnfa(&[2, 3]).unwrap();
        assert_eq!(to_chrobak(&a, 0), Err(Error::SuperpathBudgetExceeded(0)));
    }

    #[test]
    fn witness_two_three_round_trips_through_the_normal_form() {
        let a = crate::witness::witness_xnfa(&[2, 3]).unwrap();
        let c = to_chrobak(&a, DEFAULT_SUPERPATH_BUDGET).unwrap();
        assert!(c.m <= 14);
        assert!(c.total_cycle_length() <= 2 * c.m);
        assert_eq!(
            language(&c.as_automaton(), SemanticsMode::Exclusive),
            language(&a, SemanticsMode::Exclusive)
        );
        let dfa = c.to_dfa(DEFAULT_DFA_STATE_BUDGET).unwrap();
        assert_eq!(dfa.validate(SemanticsMode::Deterministic), Ok(()));
        assert_eq!(
            language(&dfa, SemanticsMode::Deterministic),
            language(&a, SemanticsMode::Exclusive)
        );
    }

    #[test]
    fn chained_components_pump_to_rejection() {
        // A 4-cycle feeding a 6-cycle in series: beyond the tail every
        // covered length has several loop decompositions, so the exclusive
        // language is finite and the cycle pair of d = gcd(4, 6) = 2 must be
        // double-marked.
        let a = UnaryAutomaton::from_parts(
            12,
            0,
            [11],
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 10),
                (10, 5),
                (10, 11),
            ],
        );
        let c = to_chrobak(&a, DEFAULT_SUPERPATH_BUDGET).unwrap();
        let marked: Vec<&ChrobakCycle> =
            c.cycles.iter().filter(|cy| !cy.accepting.is_empty()).collect();
        assert_eq!(marked.len(), 2);
        assert!(marked.iter().all(|cy| cy.length == 2));
        assert_eq!(
            language(&c.as_automaton(), SemanticsMode::Exclusive),
            language(&a, SemanticsMode::Exclusive)
        );
    }

    #[test]
    fn parallel_routes_into_one_cycle_are_counted() {
        // Two equal-length routes feed the same 2-cycle, so every covered
        // length has two accepting paths and must stay rejected.
        let a = UnaryAutomaton::from_parts(
            6,
            0,
            [5],
            [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 3), (4, 5)],
        );
        assert!(language(&a, SemanticsMode::Exclusive).is_empty_set());
        let c = to_chrobak(&a, DEFAULT_SUPERPATH_BUDGET).unwrap();
        assert_eq!(
            language(&c.as_automaton(), SemanticsMode::Exclusive),
            language(&a, SemanticsMode::Exclusive)
        );
    }
}

//! Generators for the extremal automaton families and the test corpus.

use crate::automaton::{SemanticsMode, StateId, UnaryAutomaton};
use crate::error::{Error, Result};

/// SplitMix64: the fixed, seedable generator behind [`random_automaton`].
///
/// The algorithm is pinned so that corpora are reproducible byte for byte
/// across platforms and implementations: state advances by the golden-ratio
/// increment 0x9e3779b97f4a7c15 and the output is the finalizer
/// `z ^= z >> 30; z *= 0xbf58476d1ce4e5b9; z ^= z >> 27;
/// z *= 0x94d049bb133111eb; z ^= z >> 31` applied to the advanced state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1), using the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// A recipe for one of the generator families.
#[derive(Clone, Debug)]
pub enum WitnessSpec {
    /// Lengths divisible by exactly one of the listed primes (exclusive).
    ExactlyOneDivisor { primes: Vec<u64> },
    /// Lengths not divisible by the lcm of the cycle lengths, plus the empty
    /// word (existential).
    OkhotinNotMultiple { cycles: Vec<u64> },
    /// Exclusive complement of an existential automaton.
    ComplementGadget { source: UnaryAutomaton },
    /// Seeded random automaton, read under the given mode.
    Random {
        states: usize,
        density: f64,
        seed: u64,
        ensure_trim: bool,
        mode: SemanticsMode,
    },
}

impl WitnessSpec {
    pub fn build(&self) -> Result<(UnaryAutomaton, SemanticsMode)> {
        match self {
            WitnessSpec::ExactlyOneDivisor { primes } => {
                Ok((witness_xnfa(primes)?, SemanticsMode::Exclusive))
            }
            WitnessSpec::OkhotinNotMultiple { cycles } => {
                Ok((okhotin_nfa(cycles)?, SemanticsMode::Existential))
            }
            WitnessSpec::ComplementGadget { source } => {
                Ok((complement_gadget(source), SemanticsMode::Exclusive))
            }
            WitnessSpec::Random {
                states,
                density,
                seed,
                ensure_trim,
                mode,
            } => Ok((
                random_automaton(*states, *density, *seed, *ensure_trim),
                *mode,
            )),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The exclusive witness family: an initial state branching into one cycle
/// per prime, length `p` each, accepting at position 0. Exactly one path per
/// cycle exists for any input, so a length is accepted precisely when it is
/// divisible by exactly one of the primes. Note the automaton rejects the
/// empty word even for a single prime, because the initial state is not
/// accepting. Total states: 1 + sum of the primes.
pub fn witness_xnfa(primes: &[u64]) -> Result<UnaryAutomaton> {
    if primes.is_empty() || primes.iter().any(|&p| !is_prime(p)) {
        return Err(Error::InvalidPrimes);
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != primes.len() {
        return Err(Error::InvalidPrimes);
    }

    let total: usize = 1 + primes.iter().map(|&p| p as usize).sum::<usize>();
    let mut edges = Vec::new();
    let mut accepting = Vec::new();
    let mut offset = 1;
    for &p in primes {
        let p = p as usize;
        for h in 0..p {
            edges.push((offset + h, offset + (h + 1) % p));
        }
        // Entering position 1 keeps the position congruent to the input
        // length modulo p.
        edges.push((0, offset + 1 % p));
        accepting.push(offset);
        offset += p;
    }
    Ok(UnaryAutomaton::from_parts(total, 0, accepting, edges))
}

/// The existential family: an accepting initial state (covering the empty
/// word) branching into one cycle per length, every position accepting except
/// position 0. A length is accepted when it avoids residue 0 in at least one
/// cycle, i.e. when it is not a multiple of the lcm. Total states: 1 + sum of
/// the cycle lengths.
pub fn okhotin_nfa(cycles: &[u64]) -> Result<UnaryAutomaton> {
    if cycles.is_empty() || cycles.iter().any(|&c| c < 2) {
        return Err(Error::InvalidCycleLengths);
    }
    let total: usize = 1 + cycles.iter().map(|&c| c as usize).sum::<usize>();
    let mut edges = Vec::new();
    let mut accepting = vec![0];
    let mut offset = 1;
    for &c in cycles {
        let c = c as usize;
        for h in 0..c {
            edges.push((offset + h, offset + (h + 1) % c));
            if h != 0 {
                accepting.push(offset + h);
            }
        }
        edges.push((0, offset + 1));
        offset += c;
    }
    Ok(UnaryAutomaton::from_parts(total, 0, accepting, edges))
}

/// Complements an existential automaton by exclusive counting.
///
/// A fresh initial state forks into the original start behaviour and into an
/// always-accepting sink, so every non-empty word gains exactly one accepting
/// path on top of the original count: the total is exactly one precisely when
/// the original count was zero. The fresh initial state is accepting exactly
/// when the original rejects the empty word, which completes the complement
/// at length zero. Adds exactly two states.
pub fn complement_gadget(a: &UnaryAutomaton) -> UnaryAutomaton {
    let n = a.state_count();
    let start = n;
    let sink = n + 1;
    let mut edges: Vec<(StateId, StateId)> = a.edges().collect();
    for &s in a.successors(a.initial()) {
        edges.push((start, s));
    }
    edges.push((start, sink));
    edges.push((sink, sink));
    let mut accepting: Vec<StateId> = a.accepting().iter().copied().collect();
    accepting.push(sink);
    if !a.is_accepting(a.initial()) {
        accepting.push(start);
    }
    UnaryAutomaton::from_parts(n + 2, start, accepting, edges)
}

/// Seed-deterministic random automaton.
///
/// Draw order is fixed: one uniform draw per ordered state pair (row by row)
/// deciding edge inclusion against `density`, then one draw per state taking
/// its low bit as the accepting flag, then, if no state was accepting, one
/// draw selecting a single accepting state by remainder. The initial state is
/// always 0. With `ensure_trim` the result is trimmed, which may shrink it.
pub fn random_automaton(states: usize, density: f64, seed: u64, ensure_trim: bool) -> UnaryAutomaton {
    assert!(states >= 1);
    assert!((0.0..=1.0).contains(&density));
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for from in 0..states {
        for to in 0..states {
            if rng.next_f64() < density {
                edges.push((from, to));
            }
        }
    }
    let mut accepting = Vec::new();
    for q in 0..states {
        if rng.next_u64() & 1 == 1 {
            accepting.push(q);
        }
    }
    if accepting.is_empty() {
        accepting.push((rng.next_u64() % states as u64) as usize);
    }
    let a = UnaryAutomaton::from_parts(states, 0, accepting, edges);
    if ensure_trim {
        a.trim()
    } else {
        a
    }
}

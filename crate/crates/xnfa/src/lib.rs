//! Unary automata with exclusive nondeterminism.
//!
//! An exclusive NFA (XNFA) accepts a word when its computation tree contains
//! *exactly one* accepting path; none or several both reject. Over a
//! one-letter alphabet every construction on such automata becomes effective,
//! and this crate implements them end to end:
//!
//! * [`automaton`] — the shared graph representation with existential,
//!   exclusive and deterministic readings, validation, trimming, and path
//!   counting in the saturating semiring of [`counting`];
//! * [`periodic`] — canonical ultimately-periodic length sets, the
//!   independent oracle for every language-level claim, plus minimal DFAs;
//! * [`chrobak`] — conversion of a unary XNFA to Chrobak normal form (a
//!   deterministic tail with one nondeterministic branch into disjoint
//!   cycles) and from there to a DFA with a single lcm-length cycle;
//! * [`decide`] — membership at astronomically long inputs via ternary
//!   matrix exponentiation, and emptiness, universality, inclusion and
//!   equivalence;
//! * [`numtheory`] — Landau's function, the greedy prime-sum bound, and the
//!   arithmetic-progression structure of coin sets;
//! * [`witness`] — generators for the extremal automaton families, the
//!   complement gadget, and a seedable random-automaton source.

pub mod automaton;
pub mod chrobak;
pub mod counting;
pub mod decide;
pub mod error;
pub mod normalize;
pub mod numtheory;
pub mod periodic;
pub mod scc;
pub mod witness;

pub use automaton::{SemanticsMode, StateId, UnaryAutomaton};
pub use counting::{CountMatrix, CountVector, SaturatingCount};
pub use error::{Error, Result};
pub use periodic::UltimatelyPeriodicSet;

//! Library surface of the command-line tool: the automaton text format,
//! shared between the binary and its tests.

pub mod format;

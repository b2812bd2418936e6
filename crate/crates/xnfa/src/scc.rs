//! Strongly connected components, their periods, and the condensation order.

use crate::automaton::{StateId, UnaryAutomaton};
use crate::numtheory;

/// One strongly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccComponent {
    /// Member states in ascending order.
    pub nodes: Vec<StateId>,
    /// Whether the component contains at least one internal edge. A single
    /// state without a self-loop is trivial.
    pub nontrivial: bool,
    /// Gcd of the lengths of all cycles inside the component; 0 for trivial
    /// components.
    pub period: usize,
    /// Whether the component is exactly one directed cycle over all its nodes.
    pub is_simple_cycle: bool,
}

/// Component decomposition of an automaton's state graph. Component ids are
/// in reverse topological order of the condensation: every edge that crosses
/// components goes from a higher id to a lower one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccAnalysis {
    pub component_of: Vec<usize>,
    pub components: Vec<SccComponent>,
}

impl SccAnalysis {
    pub fn component(&self, state: StateId) -> &SccComponent {
        &self.components[self.component_of[state]]
    }
}

/// Tarjan's algorithm, iterative so that chain-shaped automata with many
/// thousands of states cannot exhaust the call stack.
pub fn analyze(a: &UnaryAutomaton) -> SccAnalysis {
    let n = a.state_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<StateId> = Vec::new();
    let mut next_index = 0usize;
    let mut component_of = vec![usize::MAX; n];
    let mut component_nodes: Vec<Vec<StateId>> = Vec::new();

    // Explicit DFS frames: (state, resume position in its successor list).
    let mut frames: Vec<(StateId, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            let succ: Vec<StateId> = a.successors(v).iter().copied().collect();
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let id = component_nodes.len();
                    let mut nodes = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        component_of[w] = id;
                        nodes.push(w);
                        if w == v {
                            break;
                        }
                    }
                    nodes.sort_unstable();
                    component_nodes.push(nodes);
                }
            }
        }
    }

    let components = component_nodes
        .iter()
        .enumerate()
        .map(|(id, nodes)| describe_component(a, &component_of, id, nodes))
        .collect();

    SccAnalysis {
        component_of,
        components,
    }
}

fn describe_component(
    a: &UnaryAutomaton,
    component_of: &[usize],
    id: usize,
    nodes: &[StateId],
) -> SccComponent {
    let intra_degree = |q: StateId| {
        a.successors(q)
            .iter()
            .filter(|&&s| component_of[s] == id)
            .count()
    };
    let nontrivial = nodes.iter().any(|&q| intra_degree(q) > 0);
    let period = if nontrivial {
        component_period(a, component_of, id, nodes)
    } else {
        0
    };
    // A strongly connected component with one internal successor per node has
    // exactly |nodes| internal edges, which forces a single Hamiltonian cycle.
    let is_simple_cycle = nontrivial && nodes.iter().all(|&q| intra_degree(q) == 1);
    SccComponent {
        nodes: nodes.to_vec(),
        nontrivial,
        period,
        is_simple_cycle,
    }
}

/// Period by level labeling: BFS from an arbitrary member, then fold
/// gcd(level(u) + 1 - level(v)) over every internal edge u -> v. The gcd of
/// those level defects equals the gcd of all internal cycle lengths.
fn component_period(
    a: &UnaryAutomaton,
    component_of: &[usize],
    id: usize,
    nodes: &[StateId],
) -> usize {
    let root = nodes[0];
    let mut level = vec![None; a.state_count()];
    level[root] = Some(0i64);
    let mut queue = std::collections::VecDeque::from([root]);
    let mut g: i64 = 0;
    while let Some(q) = queue.pop_front() {
        for &s in a.successors(q) {
            if component_of[s] != id {
                continue;
            }
            match level[s] {
                None => {
                    level[s] = Some(level[q].unwrap() + 1);
                    queue.push_back(s);
                }
                Some(ls) => {
                    g = numtheory::gcd(g.unsigned_abs(), (level[q].unwrap() + 1 - ls).unsigned_abs())
                        as i64;
                }
            }
        }
    }
    g.unsigned_abs() as usize
}

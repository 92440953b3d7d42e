//! Graphviz export. Nodes and edges are emitted in index order, so the
//! output is stable across runs.

use std::fmt::Write;

use crate::automata::Automaton;
use crate::observability::TestAutomaton;
use crate::observer::Observer;

/// Anything that renders as a DOT digraph.
pub trait ToDot {
    fn to_dot(&self) -> String;
}

pub fn export_dot(item: &impl ToDot) -> String {
    item.to_dot()
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

struct Graph {
    out: String,
}

impl Graph {
    fn new(name: &str) -> Self {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", quote(name)).unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        writeln!(out, "  __start [shape=point];").unwrap();
        Graph { out }
    }

    fn node(&mut self, id: usize, label: &str) {
        writeln!(self.out, "  n{id} [label={}];", quote(label)).unwrap();
    }

    fn initial(&mut self, id: usize) {
        writeln!(self.out, "  __start -> n{id};").unwrap();
    }

    fn edge(&mut self, from: usize, to: usize, label: &str) {
        writeln!(self.out, "  n{from} -> n{to} [label={}];", quote(label)).unwrap();
    }

    fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}

impl ToDot for Automaton {
    fn to_dot(&self) -> String {
        let mut g = Graph::new("automaton");
        for s in self.states() {
            g.node(s.index(), self.state_name(s));
        }
        g.initial(self.initial().index());
        for (s, e, t) in self.transitions() {
            g.edge(s.index(), t.index(), self.alphabet().name(e));
        }
        g.finish()
    }
}

impl ToDot for Observer {
    fn to_dot(&self) -> String {
        let mut g = Graph::new("observer");
        for (i, s) in self.states().iter().enumerate() {
            g.node(i, &s.label(self.spec()));
        }
        g.initial(0);
        let p = self.observation();
        for (s, t, u) in self.transitions() {
            g.edge(s, u, p.symbol_name(t));
        }
        g.finish()
    }
}

impl ToDot for TestAutomaton {
    fn to_dot(&self) -> String {
        let spec = self.spec();
        let plant = self.plant();
        let names = spec.alphabet();
        let ev = |e: Option<crate::Event>| e.map_or("ε", |e| names.name(e));
        let mut g = Graph::new("test_automaton");
        for (i, q) in self.states().iter().enumerate() {
            let label = format!(
                "({},{},{})",
                spec.state_name(q.spec),
                plant.state_name(q.plant),
                spec.state_name(q.spec_prime)
            );
            g.node(i, &label);
        }
        if self.num_states() > 0 {
            g.initial(0);
        }
        for i in 0..self.num_states() {
            for &(k, j) in self.edges(i) {
                let (a, b) = self.events()[k];
                g.edge(i, j, &format!("({},{})", ev(a), ev(b)));
            }
        }
        g.finish()
    }
}

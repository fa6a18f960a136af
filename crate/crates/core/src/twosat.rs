//! 2-CNF formulas and a strongly-connected-component 2-SAT solver.

use std::collections::BTreeSet;
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Self {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Self {
        Self {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    // node index in the implication graph
    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }
}

/// A disjunction of one or two literals, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause(Vec<Literal>);

impl Clause {
    pub fn unit(l: Literal) -> Self {
        Self(vec![l])
    }

    pub fn binary(a: Literal, b: Literal) -> Self {
        let mut lits = vec![a, b];
        lits.sort_unstable();
        lits.dedup();
        Self(lits)
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.0.iter().any(|l| l.eval(assignment))
    }
}

/// A 2-CNF formula over named variables. Variables are kept sorted and clauses
/// deduplicated, so two formulas built from the same clause set compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf2Formula<V> {
    variables: Vec<V>,
    clauses: BTreeSet<Clause>,
}

impl<V: Ord + Clone> Cnf2Formula<V> {
    pub fn new(variables: impl IntoIterator<Item = V>) -> Self {
        let mut variables: Vec<V> = variables.into_iter().collect();
        variables.sort();
        variables.dedup();
        Self {
            variables,
            clauses: BTreeSet::new(),
        }
    }

    pub fn variables(&self) -> &[V] {
        &self.variables
    }

    pub fn var(&self, v: &V) -> Option<usize> {
        self.variables.binary_search(v).ok()
    }

    /// Literal for a declared variable.
    ///
    /// # Panics
    /// If `v` was not declared.
    pub fn lit(&self, v: &V, positive: bool) -> Literal {
        let var = self.var(v).expect("undeclared variable");
        Literal { var, positive }
    }

    pub fn add(&mut self, clause: Clause) {
        debug_assert!(clause.0.iter().all(|l| l.var < self.variables.len()));
        self.clauses.insert(clause);
    }

    pub fn add_unit(&mut self, l: Literal) {
        self.add(Clause::unit(l));
    }

    pub fn add_binary(&mut self, a: Literal, b: Literal) {
        self.add(Clause::binary(a, b));
    }

    pub fn clauses(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter()
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn contains(&self, clause: &Clause) -> bool {
        self.clauses.contains(clause)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variables.len()
            && self.clauses.iter().all(|c| c.is_satisfied_by(assignment))
    }

    /// Pretty-prints clauses with a custom variable renderer.
    pub fn display_with<'a, F>(&'a self, name: F) -> impl fmt::Display + 'a
    where
        F: Fn(&V) -> String + 'a,
    {
        DisplayFormula {
            formula: self,
            name,
        }
    }
}

struct DisplayFormula<'a, V, F> {
    formula: &'a Cnf2Formula<V>,
    name: F,
}

impl<V, F: Fn(&V) -> String> fmt::Display for DisplayFormula<'_, V, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |l: &Literal| {
            let n = (self.name)(&self.formula.variables[l.var]);
            if l.positive {
                n
            } else {
                format!("¬{n}")
            }
        };
        let parts: Vec<String> = self
            .formula
            .clauses
            .iter()
            .map(|c| {
                let lits: Vec<String> = c.0.iter().map(render).collect();
                format!("({})", lits.join(" ∨ "))
            })
            .collect();
        write!(f, "{}", parts.join(" ∧ "))
    }
}

/// Returns a satisfying assignment, or `None` if the formula is unsatisfiable.
///
/// Builds the implication graph (`¬a → b` and `¬b → a` for each clause
/// `a ∨ b`) and compares strongly connected components of `x` and `¬x`.
pub fn solve_2sat<V: Ord + Clone>(formula: &Cnf2Formula<V>) -> Option<Vec<bool>> {
    let n = formula.variables.len();
    let mut graph = DiGraph::<(), ()>::with_capacity(2 * n, 2 * formula.clauses.len());
    for _ in 0..2 * n {
        graph.add_node(());
    }
    let idx = petgraph::graph::NodeIndex::new;
    for clause in &formula.clauses {
        let (a, b) = match clause.0.as_slice() {
            [a] => (*a, *a),
            [a, b] => (*a, *b),
            _ => unreachable!("clauses hold one or two literals"),
        };
        graph.add_edge(idx(a.negated().node()), idx(b.node()), ());
        graph.add_edge(idx(b.negated().node()), idx(a.node()), ());
    }
    // tarjan_scc yields components in reverse topological order
    let mut component = vec![0usize; 2 * n];
    for (c, scc) in tarjan_scc(&graph).into_iter().enumerate() {
        for node in scc {
            component[node.index()] = c;
        }
    }
    (0..n)
        .map(|v| {
            let (p, q) = (component[2 * v], component[2 * v + 1]);
            (p != q).then_some(p < q)
        })
        .collect()
}

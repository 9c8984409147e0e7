//! Materialised finite quasi-crystal graphs and their axiom-level checks.
//!
//! A graph of rank `n` has index set `I = {1, ..., n-1}`. Every vertex
//! carries a weight in `Z^n` and, for each index, the two lengths
//! `eps_i`, `phi_i` and the partial maps `e_i`, `f_i`. Loops are not stored:
//! a vertex has an `i`-loop exactly when `eps_i = phi_i = +inf`.
//!
//! The raising and lowering tables are stored independently so that a
//! partial-bijection failure is representable and can be reported by
//! [`validate`].

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::ext::ExtInt;
use crate::report::AxiomReport;
use crate::weight::{pair_with_root, Weight};

/// Vertex label, unique within a graph. Word-model graphs use the word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Self {
        VertexId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("operator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vertex {vertex}: expected {expected} {what}, got {got}")]
    Arity {
        vertex: VertexId,
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("conflicting {op}_{index} entries at vertex {vertex}")]
    ConflictingEdge {
        op: &'static str,
        index: usize,
        vertex: VertexId,
    },
    #[error("empty graph")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiCrystalGraph {
    rank: usize,
    ids: Vec<VertexId>,
    lookup: HashMap<VertexId, usize>,
    weights: Vec<Weight>,
    // [vertex][i - 1]
    eps: Vec<Vec<ExtInt>>,
    phi: Vec<Vec<ExtInt>>,
    raise: Vec<Vec<Option<usize>>>,
    lower: Vec<Vec<Option<usize>>>,
}

impl QuasiCrystalGraph {
    /// The rank `n` of `A_{n-1}`; weights have length `n`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Iterator over the index set `I = 1..n`.
    pub fn indices(&self) -> std::ops::Range<usize> {
        1..self.rank.max(1)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.ids.len()
    }

    pub fn id(&self, v: usize) -> &VertexId {
        &self.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.lookup.get(&VertexId::new(id)).copied()
    }

    pub fn weight(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn eps(&self, v: usize, i: usize) -> ExtInt {
        self.eps[v][i - 1]
    }

    pub fn phi(&self, v: usize, i: usize) -> ExtInt {
        self.phi[v][i - 1]
    }

    /// `e_i(v)`, or `None` for bottom.
    pub fn raise(&self, v: usize, i: usize) -> Option<usize> {
        self.raise[v][i - 1]
    }

    /// `f_i(v)`, or `None` for bottom.
    pub fn lower(&self, v: usize, i: usize) -> Option<usize> {
        self.lower[v][i - 1]
    }

    /// Applies `e_i` `k` times.
    pub fn raise_n(&self, v: usize, i: usize, k: usize) -> Option<usize> {
        (0..k).try_fold(v, |x, _| self.raise(x, i))
    }

    pub fn lower_n(&self, v: usize, i: usize, k: usize) -> Option<usize> {
        (0..k).try_fold(v, |x, _| self.lower(x, i))
    }

    pub fn has_loop(&self, v: usize, i: usize) -> bool {
        self.eps(v, i).is_pos_inf() && self.phi(v, i).is_pos_inf()
    }

    /// Lowering edges `(x, f_i(x), i)` in vertex and index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.vertices().flat_map(move |v| {
            self.indices()
                .filter_map(move |i| self.lower(v, i).map(|w| (v, w, i)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Copy of this graph with one table entry replaced.
    pub fn mutated(&self, m: &Mutation) -> Result<QuasiCrystalGraph, GraphError> {
        let mut g = self.clone();
        let check_v = |v: usize| {
            if v < g.len() {
                Ok(())
            } else {
                Err(GraphError::VertexOutOfRange(v))
            }
        };
        let check_i = |i: usize| {
            if i >= 1 && i < g.rank {
                Ok(i - 1)
            } else {
                Err(GraphError::IndexOutOfRange { index: i, rank: g.rank })
            }
        };
        match *m {
            Mutation::Eps { vertex, index, value } => {
                check_v(vertex)?;
                g.eps[vertex][check_i(index)?] = value;
            }
            Mutation::Phi { vertex, index, value } => {
                check_v(vertex)?;
                g.phi[vertex][check_i(index)?] = value;
            }
            Mutation::Weight { vertex, coord, value } => {
                check_v(vertex)?;
                if coord == 0 || coord > g.rank {
                    return Err(GraphError::IndexOutOfRange { index: coord, rank: g.rank });
                }
                let mut coords = g.weights[vertex].coords().to_vec();
                coords[coord - 1] = value;
                g.weights[vertex] = Weight::new(coords);
            }
            Mutation::Raise { vertex, index, target } => {
                check_v(vertex)?;
                if let Some(t) = target {
                    check_v(t)?;
                }
                g.raise[vertex][check_i(index)?] = target;
            }
            Mutation::Lower { vertex, index, target } => {
                check_v(vertex)?;
                if let Some(t) = target {
                    check_v(t)?;
                }
                g.lower[vertex][check_i(index)?] = target;
            }
        }
        Ok(g)
    }

    /// The induced subgraph on `vertices`, in the given order. Operator
    /// entries pointing outside the set are dropped.
    pub fn induced(&self, vertices: &[usize]) -> QuasiCrystalGraph {
        let mut remap = HashMap::with_capacity(vertices.len());
        for (new, &old) in vertices.iter().enumerate() {
            remap.insert(old, new);
        }
        let map_table = |table: &Vec<Vec<Option<usize>>>| -> Vec<Vec<Option<usize>>> {
            vertices
                .iter()
                .map(|&v| {
                    table[v]
                        .iter()
                        .map(|t| t.and_then(|t| remap.get(&t).copied()))
                        .collect()
                })
                .collect()
        };
        let ids: Vec<VertexId> = vertices.iter().map(|&v| self.ids[v].clone()).collect();
        QuasiCrystalGraph {
            rank: self.rank,
            lookup: ids.iter().cloned().enumerate().map(|(k, id)| (id, k)).collect(),
            ids,
            weights: vertices.iter().map(|&v| self.weights[v].clone()).collect(),
            eps: vertices.iter().map(|&v| self.eps[v].clone()).collect(),
            phi: vertices.iter().map(|&v| self.phi[v].clone()).collect(),
            raise: map_table(&self.raise),
            lower: map_table(&self.lower),
        }
    }

    /// Same graph with vertices relabelled; `relabel` must stay injective.
    pub fn relabelled(
        &self,
        relabel: impl Fn(&VertexId) -> VertexId,
    ) -> Result<QuasiCrystalGraph, GraphError> {
        let ids: Vec<VertexId> = self.ids.iter().map(relabel).collect();
        let mut lookup = HashMap::with_capacity(ids.len());
        for (k, id) in ids.iter().enumerate() {
            if lookup.insert(id.clone(), k).is_some() {
                return Err(GraphError::DuplicateVertex(id.clone()));
            }
        }
        Ok(QuasiCrystalGraph {
            ids,
            lookup,
            ..self.clone()
        })
    }
}

/// A single-entry change to a graph's tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mutation {
    Eps { vertex: usize, index: usize, value: ExtInt },
    Phi { vertex: usize, index: usize, value: ExtInt },
    Weight { vertex: usize, coord: usize, value: i64 },
    Raise { vertex: usize, index: usize, target: Option<usize> },
    Lower { vertex: usize, index: usize, target: Option<usize> },
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = |t: &Option<usize>| t.map_or("bot".to_string(), |t| format!("#{t}"));
        match self {
            Mutation::Eps { vertex, index, value } => write!(f, "eps_{index}(#{vertex}) := {value}"),
            Mutation::Phi { vertex, index, value } => write!(f, "phi_{index}(#{vertex}) := {value}"),
            Mutation::Weight { vertex, coord, value } => write!(f, "wt_{coord}(#{vertex}) := {value}"),
            Mutation::Raise { vertex, index, target: t } => {
                write!(f, "e_{index}(#{vertex}) := {}", target(t))
            }
            Mutation::Lower { vertex, index, target: t } => {
                write!(f, "f_{index}(#{vertex}) := {}", target(t))
            }
        }
    }
}

/// Incremental construction. Vertices keep insertion order.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    graph: QuasiCrystalGraph,
}

impl GraphBuilder {
    pub fn new(rank: usize) -> Self {
        GraphBuilder {
            graph: QuasiCrystalGraph {
                rank,
                ids: Vec::new(),
                lookup: HashMap::new(),
                weights: Vec::new(),
                eps: Vec::new(),
                phi: Vec::new(),
                raise: Vec::new(),
                lower: Vec::new(),
            },
        }
    }

    pub fn with_capacity(rank: usize, vertices: usize) -> Self {
        let mut b = GraphBuilder::new(rank);
        let g = &mut b.graph;
        g.ids.reserve(vertices);
        g.lookup.reserve(vertices);
        g.weights.reserve(vertices);
        g.eps.reserve(vertices);
        g.phi.reserve(vertices);
        g.raise.reserve(vertices);
        g.lower.reserve(vertices);
        b
    }

    fn num_indices(&self) -> usize {
        self.graph.rank.saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.graph.index_of(id)
    }

    pub fn add_vertex(
        &mut self,
        id: VertexId,
        weight: Weight,
        eps: Vec<ExtInt>,
        phi: Vec<ExtInt>,
    ) -> Result<usize, GraphError> {
        let m = self.num_indices();
        for (what, expected, got) in [
            ("weight coordinates", self.graph.rank, weight.len()),
            ("eps values", m, eps.len()),
            ("phi values", m, phi.len()),
        ] {
            if expected != got {
                return Err(GraphError::Arity {
                    vertex: id,
                    what,
                    expected,
                    got,
                });
            }
        }
        let g = &mut self.graph;
        if g.lookup.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        let v = g.ids.len();
        g.lookup.insert(id.clone(), v);
        g.ids.push(id);
        g.weights.push(weight);
        g.eps.push(eps);
        g.phi.push(phi);
        g.raise.push(vec![None; m]);
        g.lower.push(vec![None; m]);
        Ok(v)
    }

    fn check(&self, v: usize, i: usize) -> Result<(), GraphError> {
        if v >= self.graph.len() {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if i == 0 || i > self.num_indices() {
            return Err(GraphError::IndexOutOfRange {
                index: i,
                rank: self.graph.rank,
            });
        }
        Ok(())
    }

    /// Sets `e_i(v) = target`.
    pub fn set_raise(&mut self, v: usize, i: usize, target: usize) -> Result<(), GraphError> {
        self.check(v, i)?;
        self.check(target, i)?;
        let slot = &mut self.graph.raise[v][i - 1];
        match *slot {
            Some(t) if t != target => Err(GraphError::ConflictingEdge {
                op: "e",
                index: i,
                vertex: self.graph.ids[v].clone(),
            }),
            _ => {
                *slot = Some(target);
                Ok(())
            }
        }
    }

    /// Sets `f_i(v) = target`.
    pub fn set_lower(&mut self, v: usize, i: usize, target: usize) -> Result<(), GraphError> {
        self.check(v, i)?;
        self.check(target, i)?;
        let slot = &mut self.graph.lower[v][i - 1];
        match *slot {
            Some(t) if t != target => Err(GraphError::ConflictingEdge {
                op: "f",
                index: i,
                vertex: self.graph.ids[v].clone(),
            }),
            _ => {
                *slot = Some(target);
                Ok(())
            }
        }
    }

    /// Adds the edge `from --i--> to`, i.e. `f_i(from) = to` and `e_i(to) = from`.
    pub fn add_edge(&mut self, from: usize, to: usize, i: usize) -> Result<(), GraphError> {
        self.set_lower(from, i, to)?;
        self.set_raise(to, i, from)
    }

    pub fn build(self) -> Result<QuasiCrystalGraph, GraphError> {
        if self.graph.is_empty() {
            return Err(GraphError::Empty);
        }
        Ok(self.graph)
    }
}

/// Checks Q1-Q4 and loop two-sidedness at every (vertex, index).
pub fn validate(g: &QuasiCrystalGraph) -> AxiomReport {
    let mut report = AxiomReport::new("Q");
    for x in g.vertices() {
        let wt = g.weight(x);
        for i in g.indices() {
            let (eps, phi) = (g.eps(x, i), g.phi(x, i));
            if let Some(y) = g.raise(x, i) {
                if g.lower(y, i) != Some(x) {
                    report.push(g, &[x, y], &[i], "Q1: e_i(x)=y but f_i(y)!=x");
                }
                let expected = wt + &crate::weight::simple_root(i, g.rank()).expect("index in range");
                if g.weight(y) != &expected {
                    report.push(
                        g,
                        &[x, y],
                        &[i],
                        format!("Q1: wt(y)={} expected {}", g.weight(y), expected),
                    );
                }
                if g.eps(y, i) != eps.shift(-1) {
                    report.push(
                        g,
                        &[x, y],
                        &[i],
                        format!("Q1: eps_i(y)={} expected {}", g.eps(y, i), eps.shift(-1)),
                    );
                }
                if g.phi(y, i) != phi.shift(1) {
                    report.push(
                        g,
                        &[x, y],
                        &[i],
                        format!("Q1: phi_i(y)={} expected {}", g.phi(y, i), phi.shift(1)),
                    );
                }
            }
            if let Some(y) = g.lower(x, i) {
                if g.raise(y, i) != Some(x) {
                    report.push(g, &[x, y], &[i], "Q1: f_i(x)=y but e_i(y)!=x");
                }
            }
            let expected_phi = eps.shift(pair_with_root(wt, i));
            if phi != expected_phi {
                report.push(
                    g,
                    &[x],
                    &[i],
                    format!("Q2: phi_i={phi} expected eps_i+<wt,alpha_i>={expected_phi}"),
                );
            }
            let defined = g.raise(x, i).is_some() || g.lower(x, i).is_some();
            if eps == ExtInt::NegInf && defined {
                report.push(g, &[x], &[i], "Q3: eps_i=-inf but an operator is defined");
            }
            if eps == ExtInt::PosInf && defined {
                report.push(g, &[x], &[i], "Q4: eps_i=+inf but an operator is defined");
            }
            if eps.is_pos_inf() != phi.is_pos_inf() {
                report.push(
                    g,
                    &[x],
                    &[i],
                    format!("loop: one-sided infinity eps_i={eps} phi_i={phi}"),
                );
            }
        }
    }
    report.finish()
}

/// Length of the maximal chain `v, op(v), op^2(v), ...`, or `None` if the
/// chain revisits a vertex.
fn chain_length(g: &QuasiCrystalGraph, v: usize, step: impl Fn(usize) -> Option<usize>) -> Option<i64> {
    let mut cur = v;
    let mut k = 0;
    while let Some(next) = step(cur) {
        k += 1;
        if k > g.len() {
            return None;
        }
        cur = next;
    }
    Some(k as i64)
}

/// Finite lengths must equal maximal raising/lowering chain lengths.
pub fn is_seminormal(g: &QuasiCrystalGraph) -> AxiomReport {
    let mut report = AxiomReport::new("seminormal");
    for x in g.vertices() {
        for i in g.indices() {
            let eps = g.eps(x, i);
            if !eps.is_pos_inf() {
                match chain_length(g, x, |v| g.raise(v, i)) {
                    Some(k) if eps == k => {}
                    Some(k) => report.push(g, &[x], &[i], format!("eps_i={eps} but e_i-chain has length {k}")),
                    None => report.push(g, &[x], &[i], "e_i-chain is cyclic"),
                }
            }
            let phi = g.phi(x, i);
            if !phi.is_pos_inf() {
                match chain_length(g, x, |v| g.lower(v, i)) {
                    Some(k) if phi == k => {}
                    Some(k) => report.push(g, &[x], &[i], format!("phi_i={phi} but f_i-chain has length {k}")),
                    None => report.push(g, &[x], &[i], "f_i-chain is cyclic"),
                }
            }
        }
    }
    report.finish()
}

pub fn is_crystal(g: &QuasiCrystalGraph) -> bool {
    g.vertices()
        .all(|x| g.indices().all(|i| !g.eps(x, i).is_pos_inf() && !g.phi(x, i).is_pos_inf()))
}

/// Vertices with every `e_i` undefined. Loops do not disqualify.
pub fn highest_weight_vertices(g: &QuasiCrystalGraph) -> Vec<usize> {
    g.vertices()
        .filter(|&x| g.indices().all(|i| g.raise(x, i).is_none()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{pairing, rho};
    use crate::word::{quasi_tensor_power, standard_crystal};

    fn looped_vertex() -> QuasiCrystalGraph {
        let mut b = GraphBuilder::new(2);
        b.add_vertex(
            "x".into(),
            Weight::new(vec![1, 1]),
            vec![ExtInt::PosInf],
            vec![ExtInt::PosInf],
        )
        .unwrap();
        b.build().unwrap()
    }

    #[test]
    fn standard_crystal_validates() {
        let b3 = standard_crystal(3).unwrap();
        assert!(validate(&b3).passed());
        assert!(is_seminormal(&b3).passed());
        assert!(is_crystal(&b3));
        let hw = highest_weight_vertices(&b3);
        assert_eq!(hw.len(), 1);
        assert_eq!(b3.id(hw[0]).as_str(), "1");
    }

    #[test]
    fn single_looped_vertex() {
        let g = looped_vertex();
        assert!(validate(&g).passed());
        assert!(is_seminormal(&g).passed());
        assert!(!is_crystal(&g));
        assert_eq!(highest_weight_vertices(&g), vec![0]);
        assert!(g.has_loop(0, 1));
    }

    #[test]
    fn corrupted_weight_is_reported() {
        let b3 = standard_crystal(3).unwrap();
        let two = b3.index_of("2").unwrap();
        // wt(2) := (0,0,1) by changing two coordinates
        let g = b3
            .mutated(&Mutation::Weight { vertex: two, coord: 2, value: 0 })
            .unwrap()
            .mutated(&Mutation::Weight { vertex: two, coord: 3, value: 1 })
            .unwrap();
        let report = validate(&g);
        assert!(!report.passed());
        assert!(report
            .witnesses
            .iter()
            .any(|w| w.vertices.iter().any(|v| v.as_str() == "1") && w.indices == [1]));
    }

    #[test]
    fn one_sided_edge_is_reported() {
        let b3 = standard_crystal(3).unwrap();
        let g = b3
            .mutated(&Mutation::Lower { vertex: 0, index: 1, target: None })
            .unwrap();
        let report = validate(&g);
        assert!(report.witnesses.iter().any(|w| w.detail.contains("f_i(y)!=x")));
    }

    #[test]
    fn seminormality_failure() {
        let b3 = standard_crystal(3).unwrap();
        let two = b3.index_of("2").unwrap();
        let g = b3
            .mutated(&Mutation::Eps { vertex: two, index: 1, value: ExtInt::Finite(2) })
            .unwrap();
        let report = is_seminormal(&g);
        assert_eq!(report.witnesses.len(), 1);
        assert!(report.witnesses[0].detail.contains("length 1"));
    }

    #[test]
    fn all_infinite_no_edges_is_seminormal() {
        let mut b = GraphBuilder::new(3);
        for id in ["a", "b"] {
            b.add_vertex(
                id.into(),
                Weight::new(vec![1, 1, 1]),
                vec![ExtInt::PosInf; 2],
                vec![ExtInt::PosInf; 2],
            )
            .unwrap();
        }
        let g = b.build().unwrap();
        assert!(validate(&g).passed());
        assert!(is_seminormal(&g).passed());
        assert_eq!(highest_weight_vertices(&g).len(), 2);
    }

    #[test]
    fn rank_one_is_vacuous() {
        let b1 = standard_crystal(1).unwrap();
        assert_eq!(b1.indices().count(), 0);
        assert!(validate(&b1).passed());
        assert!(is_seminormal(&b1).passed());
        assert_eq!(highest_weight_vertices(&b1), vec![0]);
    }

    #[test]
    fn quasi_square_is_not_crystal() {
        let g = quasi_tensor_power(3, 2, 1_000).unwrap();
        assert!(!is_crystal(&g));
        assert_eq!(highest_weight_vertices(&g).len(), 2);
        let blocked = g.index_of("21").unwrap();
        assert!(g.has_loop(blocked, 1));
    }

    #[test]
    fn builder_rejects_structural_errors() {
        let mut b = GraphBuilder::new(2);
        let x = b
            .add_vertex("x".into(), Weight::new(vec![1, 0]), vec![0.into()], vec![1.into()])
            .unwrap();
        assert!(matches!(
            b.add_vertex("x".into(), Weight::new(vec![1, 0]), vec![0.into()], vec![1.into()]),
            Err(GraphError::DuplicateVertex(_))
        ));
        assert!(matches!(
            b.add_vertex("y".into(), Weight::new(vec![1]), vec![0.into()], vec![1.into()]),
            Err(GraphError::Arity { .. })
        ));
        assert!(b.add_edge(x, 5, 1).is_err());
        assert!(b.add_edge(x, x, 2).is_err());
    }

    #[test]
    fn edges_strictly_increase_rank() {
        for g in [quasi_tensor_power(3, 3, 1_000).unwrap(), quasi_tensor_power(4, 2, 1_000).unwrap()] {
            assert!(validate(&g).passed());
            let r = rho(g.rank()).unwrap();
            for (x, y, _) in g.edges() {
                let diff = g.weight(x) - g.weight(y);
                assert_eq!(pairing(&diff, &r).unwrap(), 1);
            }
        }
    }

    #[test]
    fn validate_is_idempotent() {
        let g = quasi_tensor_power(3, 3, 1_000).unwrap();
        let corrupted = g
            .mutated(&Mutation::Phi { vertex: 4, index: 2, value: ExtInt::Finite(7) })
            .unwrap();
        assert_eq!(validate(&corrupted), validate(&corrupted));
        assert!(!validate(&corrupted).passed());
    }
}

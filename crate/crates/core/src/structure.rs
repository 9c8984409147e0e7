//! Connected components, highest-weight analysis, rank, the degree-one
//! property and hw-anchored component isomorphism.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::graph::{is_seminormal, QuasiCrystalGraph, VertexId};
use crate::report::AxiomReport;
use crate::weight::{pairing, rho, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("expected exactly one highest-weight vertex, found {0}")]
    HighestWeightCount(usize),
    #[error("vertex {0} is not in the component")]
    NotInComponent(VertexId),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("theorem violation:\n{0}")]
    TheoremViolation(AxiomReport),
}

/// A connected component of a graph. Loops never connect; vertices are
/// kept in parent-index order.
#[derive(Debug, Clone)]
pub struct Component<'g> {
    graph: &'g QuasiCrystalGraph,
    vertices: Vec<usize>,
    highest: Vec<usize>,
}

impl<'g> Component<'g> {
    pub fn graph(&self) -> &'g QuasiCrystalGraph {
        self.graph
    }

    /// Parent-graph vertex indices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertices with every `e_i` undefined.
    pub fn highest_weight_vertices(&self) -> &[usize] {
        &self.highest
    }

    pub fn min_id(&self) -> &VertexId {
        self.vertices
            .iter()
            .map(|&v| self.graph.id(v))
            .min()
            .expect("components are non-empty")
    }

    /// The component as a standalone graph.
    pub fn subgraph(&self) -> QuasiCrystalGraph {
        self.graph.induced(&self.vertices)
    }

    /// Weight of the unique highest-weight vertex.
    pub fn highest_weight(&self) -> Result<&'g Weight, StructureError> {
        Ok(self.graph.weight(unique_highest_weight(self)?))
    }
}

/// Components of `g` by undirected reachability over edges, ordered by
/// their minimal vertex id.
pub fn components(g: &QuasiCrystalGraph) -> Vec<Component<'_>> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for i in g.indices() {
                for y in [g.raise(x, i), g.lower(x, i)].into_iter().flatten() {
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        members.sort_unstable();
        let highest = members
            .iter()
            .copied()
            .filter(|&x| g.indices().all(|i| g.raise(x, i).is_none()))
            .collect();
        out.push(Component {
            graph: g,
            vertices: members,
            highest,
        });
    }
    out.sort_by(|a, b| a.min_id().cmp(b.min_id()));
    out
}

/// The component containing `v`.
pub fn component_of(g: &QuasiCrystalGraph, v: usize) -> Component<'_> {
    components(g)
        .into_iter()
        .find(|c| c.contains(v))
        .expect("every vertex lies in a component")
}

pub fn unique_highest_weight(c: &Component<'_>) -> Result<usize, StructureError> {
    match c.highest.as_slice() {
        [u] => Ok(*u),
        other => Err(StructureError::HighestWeightCount(other.len())),
    }
}

/// From every vertex some highest-weight vertex is reachable by raising.
pub fn is_bounded_above(c: &Component<'_>) -> bool {
    let g = c.graph;
    let mut reached: HashMap<usize, ()> = c.highest.iter().map(|&u| (u, ())).collect();
    let mut queue: VecDeque<usize> = c.highest.iter().copied().collect();
    while let Some(y) = queue.pop_front() {
        for i in g.indices() {
            if let Some(x) = g.lower(y, i) {
                // x reaches y by raising only if e_i(x) = y
                if g.raise(x, i) == Some(y) && reached.insert(x, ()).is_none() {
                    queue.push_back(x);
                }
            }
        }
    }
    c.vertices.iter().all(|v| reached.contains_key(v))
}

/// `<wt(u) - wt(x), rho>` for the unique highest-weight vertex `u`.
pub fn rank_of(c: &Component<'_>, x: usize) -> Result<i64, StructureError> {
    if !c.contains(x) {
        return Err(StructureError::NotInComponent(c.graph.id(x).clone()));
    }
    let u = unique_highest_weight(c)?;
    let g = c.graph;
    let diff = g.weight(u) - g.weight(x);
    Ok(pairing(&diff, &rho(g.rank()).expect("rank >= 1")).expect("same rank"))
}

/// Rank of every vertex of the component, by parent index.
pub fn rank_table(c: &Component<'_>) -> Result<BTreeMap<usize, i64>, StructureError> {
    c.vertices.iter().map(|&x| Ok((x, rank_of(c, x)?))).collect()
}

/// Length of a shortest raising path from `x` to a highest-weight vertex.
pub fn raising_distance(c: &Component<'_>, x: usize) -> Option<usize> {
    let g = c.graph;
    let mut dist = HashMap::from([(x, 0usize)]);
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if c.highest.contains(&v) {
            return Some(d);
        }
        for i in g.indices() {
            if let Some(y) = g.raise(v, i) {
                dist.entry(y).or_insert_with(|| {
                    queue.push_back(y);
                    d + 1
                });
            }
        }
    }
    None
}

/// Passes iff the unique highest-weight vertex has at most one defined
/// lowering operator. Loops are not edges and do not count.
pub fn check_degree_one(c: &Component<'_>) -> Result<AxiomReport, StructureError> {
    let u = unique_highest_weight(c)?;
    let g = c.graph;
    let mut report = AxiomReport::new("degree-one");
    let defined: Vec<usize> = g.indices().filter(|&i| g.lower(u, i).is_some()).collect();
    if defined.len() > 1 {
        report.push(g, &[u], &defined, format!("highest-weight vertex has degree {}", defined.len()));
    }
    Ok(report.finish())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IsoOptions {
    /// Compare weights modulo `(1, ..., 1)` instead of as raw vectors.
    pub modulo_ones: bool,
}

fn weights_match(a: &Weight, b: &Weight, options: IsoOptions) -> bool {
    if options.modulo_ones {
        a.eq_modulo_ones(b)
    } else {
        a == b
    }
}

/// A vertex bijection between two components, by parent indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub theta: BTreeMap<usize, usize>,
}

impl IsoWitness {
    pub fn identity(c: &Component<'_>) -> Self {
        IsoWitness {
            theta: c.vertices.iter().map(|&v| (v, v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        IsoWitness {
            theta: self.theta.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    /// `other` after `self`.
    pub fn then(&self, other: &IsoWitness) -> Option<Self> {
        let theta = self
            .theta
            .iter()
            .map(|(&a, b)| other.theta.get(b).map(|&c| (a, c)))
            .collect::<Option<_>>()?;
        Some(IsoWitness { theta })
    }

    /// Pairs of vertex ids, in source order.
    pub fn table(&self, c1: &Component<'_>, c2: &Component<'_>) -> Vec<(VertexId, VertexId)> {
        self.theta
            .iter()
            .map(|(&a, &b)| (c1.graph.id(a).clone(), c2.graph.id(b).clone()))
            .collect()
    }

    /// Re-checks the witness from scratch: bijectivity onto `c2`,
    /// commutation with every `e_i` and `f_i`, and preservation of
    /// `eps_i`, `phi_i` and `wt`.
    pub fn verify(&self, c1: &Component<'_>, c2: &Component<'_>, options: IsoOptions) -> AxiomReport {
        let (g1, g2) = (c1.graph, c2.graph);
        let mut report = AxiomReport::new("iso");
        if g1.rank() != g2.rank() {
            report.witnesses.push(crate::report::Witness {
                vertices: vec![],
                indices: vec![],
                detail: format!("ranks differ: {} vs {}", g1.rank(), g2.rank()),
            });
            return report;
        }
        let domain: Vec<usize> = self.theta.keys().copied().collect();
        let mut image: Vec<usize> = self.theta.values().copied().collect();
        image.sort_unstable();
        let image_len = image.len();
        image.dedup();
        if domain != c1.vertices || image != c2.vertices || image_len != image.len() {
            report.witnesses.push(crate::report::Witness {
                vertices: vec![],
                indices: vec![],
                detail: "theta is not a bijection between the components".into(),
            });
            return report.finish();
        }
        for (&x, &y) in &self.theta {
            let fail = |report: &mut AxiomReport, indices: &[usize], detail: String| {
                report.witnesses.push(crate::report::Witness {
                    vertices: vec![g1.id(x).clone(), g2.id(y).clone()],
                    indices: indices.to_vec(),
                    detail,
                });
            };
            if !weights_match(g1.weight(x), g2.weight(y), options) {
                fail(&mut report, &[], format!("wt {} vs {}", g1.weight(x), g2.weight(y)));
            }
            for i in g1.indices() {
                if g1.eps(x, i) != g2.eps(y, i) || g1.phi(x, i) != g2.phi(y, i) {
                    fail(&mut report, &[i], "eps_i or phi_i not preserved".into());
                }
                let mapped_raise = g1.raise(x, i).map(|v| self.theta[&v]);
                let mapped_lower = g1.lower(x, i).map(|v| self.theta[&v]);
                if mapped_raise != g2.raise(y, i) {
                    fail(&mut report, &[i], "theta does not commute with e_i".into());
                }
                if mapped_lower != g2.lower(y, i) {
                    fail(&mut report, &[i], "theta does not commute with f_i".into());
                }
            }
        }
        report.finish()
    }
}

fn require_iso_preconditions(c: &Component<'_>) -> Result<usize, StructureError> {
    let sub = c.subgraph();
    let semi = is_seminormal(&sub);
    if !semi.passed() {
        return Err(StructureError::Precondition(format!(
            "component of {} is not seminormal",
            c.min_id()
        )));
    }
    unique_highest_weight(c)
}

/// Isomorphism anchored at the highest-weight vertices.
///
/// `Ok(None)` when the highest weights differ. Otherwise `theta` is grown
/// breadth-first from `theta(u) = u'` along lowering operators in index
/// order; the result is checked by [`IsoWitness::verify`] and any failure
/// is reported as a theorem violation.
pub fn isomorphic(
    c1: &Component<'_>,
    c2: &Component<'_>,
    options: IsoOptions,
) -> Result<Option<IsoWitness>, StructureError> {
    let u1 = require_iso_preconditions(c1)?;
    let u2 = require_iso_preconditions(c2)?;
    let (g1, g2) = (c1.graph, c2.graph);
    if g1.rank() != g2.rank() || !weights_match(g1.weight(u1), g2.weight(u2), options) {
        return Ok(None);
    }
    let mut violations = AxiomReport::new("iso");
    let mut theta = BTreeMap::from([(u1, u2)]);
    // u is the unique maximum, so every vertex is reached by lowering from u;
    // breadth-first order from u is rank order
    let mut queue = VecDeque::from([u1]);
    while let Some(x) = queue.pop_front() {
        let y = theta[&x];
        for i in g1.indices() {
            let Some(x1) = g1.lower(x, i) else { continue };
            match g2.lower(y, i) {
                None => violations.witnesses.push(crate::report::Witness {
                    vertices: vec![g1.id(x).clone(), g2.id(y).clone()],
                    indices: vec![i],
                    detail: "f_i defined on the source but not on the image".into(),
                }),
                Some(y1) => match theta.get(&x1) {
                    Some(&prev) if prev != y1 => violations.witnesses.push(crate::report::Witness {
                        vertices: vec![g1.id(x1).clone(), g2.id(prev).clone(), g2.id(y1).clone()],
                        indices: vec![i],
                        detail: "two lowering paths assign different images".into(),
                    }),
                    Some(_) => {}
                    None => {
                        theta.insert(x1, y1);
                        queue.push_back(x1);
                    }
                },
            }
        }
    }
    if !violations.passed() {
        return Err(StructureError::TheoremViolation(violations.finish()));
    }
    let witness = IsoWitness { theta };
    let check = witness.verify(c1, c2, options);
    if !check.passed() {
        return Err(StructureError::TheoremViolation(check));
    }
    Ok(Some(witness))
}

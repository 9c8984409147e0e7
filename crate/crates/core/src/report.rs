//! Witness-collecting reports shared by every checker.

use std::fmt;

use crate::graph::{QuasiCrystalGraph, VertexId};

/// One observed violation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub vertices: Vec<VertexId>,
    pub indices: Vec<usize>,
    pub detail: String,
}

/// All violations of one axiom. Empty witness list means the axiom holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: String,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn new(axiom: impl Into<String>) -> Self {
        AxiomReport {
            axiom: axiom.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn push(
        &mut self,
        g: &QuasiCrystalGraph,
        vertices: &[usize],
        indices: &[usize],
        detail: impl Into<String>,
    ) {
        self.witnesses.push(Witness {
            vertices: vertices.iter().map(|&v| g.id(v).clone()).collect(),
            indices: indices.to_vec(),
            detail: detail.into(),
        });
    }

    /// Sorts and deduplicates witnesses so that reports do not depend on
    /// traversal order.
    pub fn finish(mut self) -> Self {
        self.witnesses.sort();
        self.witnesses.dedup();
        self
    }

    /// Merges several reports under one name.
    pub fn merged(axiom: impl Into<String>, parts: impl IntoIterator<Item = AxiomReport>) -> Self {
        let mut out = AxiomReport::new(axiom);
        for part in parts {
            out.witnesses.extend(part.witnesses);
        }
        out.finish()
    }
}

impl fmt::Display for AxiomReport {
    /// One tab-separated line per witness: axiom, vertices, indices, detail.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.witnesses {
            let vertices: Vec<&str> = w.vertices.iter().map(VertexId::as_str).collect();
            let indices: Vec<String> = w.indices.iter().map(usize::to_string).collect();
            writeln!(
                f,
                "{}\t{}\t{}\t{}",
                self.axiom,
                vertices.join(","),
                indices.join(","),
                w.detail
            )?;
        }
        Ok(())
    }
}

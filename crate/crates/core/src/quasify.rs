//! The crystal-to-quasi-crystal construction: an `i`-edge of a crystal
//! survives exactly where `eps_i(x) = wt_{i+1}(x)`, and every other
//! `(x, i)` becomes an `i`-loop.

use thiserror::Error;

use crate::axioms::{check_stembridge, AxiomError};
use crate::ext::ExtInt;
use crate::graph::{is_crystal, is_seminormal, GraphBuilder, GraphError, QuasiCrystalGraph};
use crate::report::AxiomReport;
use crate::structure::{component_of, components, unique_highest_weight};
use crate::weight::{pair_with_root, Partition, Weight};
use crate::word::{tensor_power, BuildError, Word, DEFAULT_SIZE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasifyError {
    #[error("input has infinite lengths")]
    NotCrystal,
    #[error("input is not seminormal:\n{0}")]
    NotSeminormal(AxiomReport),
    #[error("input has {0} components, expected one")]
    NotConnected(usize),
    #[error("input fails the Stembridge axioms:\n{0}")]
    Stembridge(AxiomReport),
    #[error(
        "vertex {vertex} has weight {weight} with a negative entry; \
         add a multiple of (1,...,1) so that all weights are content vectors"
    )]
    NegativeWeight { vertex: String, weight: Weight },
    #[error("graphs do not share vertices, weights and rank")]
    Mismatch,
    #[error("shape {shape} has more than {n} parts")]
    InvalidShape { shape: Partition, n: usize },
    #[error("no component with highest weight {0}")]
    NoSuchComponent(Weight),
    #[error("{0} is not a word over 1..={1}")]
    InvalidWord(Word, usize),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The quasi-crystal of a connected seminormal Stembridge crystal whose
/// weights are content vectors.
pub fn quasify(c: &QuasiCrystalGraph) -> Result<QuasiCrystalGraph, QuasifyError> {
    if !is_crystal(c) {
        return Err(QuasifyError::NotCrystal);
    }
    let semi = is_seminormal(c);
    if !semi.passed() {
        return Err(QuasifyError::NotSeminormal(semi));
    }
    let count = components(c).len();
    if count != 1 {
        return Err(QuasifyError::NotConnected(count));
    }
    let stembridge = AxiomReport::merged("stembridge", check_stembridge(c)?);
    if !stembridge.passed() {
        return Err(QuasifyError::Stembridge(stembridge));
    }
    if let Some(v) = c.vertices().find(|&v| !c.weight(v).is_nonnegative()) {
        return Err(QuasifyError::NegativeWeight {
            vertex: c.id(v).to_string(),
            weight: c.weight(v).clone(),
        });
    }
    Ok(quasify_unchecked(c))
}

fn keeps(c: &QuasiCrystalGraph, x: usize, i: usize) -> bool {
    c.eps(x, i) == c.weight(x).get(i + 1)
}

fn quasify_unchecked(c: &QuasiCrystalGraph) -> QuasiCrystalGraph {
    let mut b = GraphBuilder::with_capacity(c.rank(), c.len());
    for x in c.vertices() {
        let wt = c.weight(x);
        let eps: Vec<ExtInt> = c
            .indices()
            .map(|i| if keeps(c, x, i) { c.eps(x, i) } else { ExtInt::PosInf })
            .collect();
        let phi = c
            .indices()
            .zip(&eps)
            .map(|(i, e)| e.shift(pair_with_root(wt, i)))
            .collect();
        b.add_vertex(c.id(x).clone(), wt.clone(), eps, phi)
            .expect("source ids are unique and arities match");
    }
    for x in c.vertices() {
        for i in c.indices() {
            if let Some(y) = c.raise(x, i).filter(|_| keeps(c, x, i)) {
                b.add_edge(y, x, i).expect("source edges are single-valued");
            }
        }
    }
    b.build().expect("source is non-empty")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorClass {
    /// `f_i(x)` defined in both the crystal and the quasi-crystal.
    Quasi,
    /// `f_i(x)` defined in the crystal only.
    Strict,
    /// `f_i(x)` undefined in the crystal.
    Undefined,
}

/// Class of every lowering operator, indexed `[x][i - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorClasses {
    pub classes: Vec<Vec<OperatorClass>>,
}

impl OperatorClasses {
    pub fn get(&self, x: usize, i: usize) -> OperatorClass {
        self.classes[x][i - 1]
    }

    pub fn count(&self, class: OperatorClass) -> usize {
        self.classes.iter().flatten().filter(|&&c| c == class).count()
    }

    /// `(x, i)` with `f_i` strict.
    pub fn strict_edges(&self) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(x, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c == OperatorClass::Strict)
                    .map(move |(k, _)| (x, k + 1))
            })
            .collect()
    }
}

pub fn classify_operators(
    c: &QuasiCrystalGraph,
    q: &QuasiCrystalGraph,
) -> Result<OperatorClasses, QuasifyError> {
    let same_shape = c.rank() == q.rank()
        && c.len() == q.len()
        && c.vertices().all(|v| c.id(v) == q.id(v) && c.weight(v) == q.weight(v));
    if !same_shape {
        return Err(QuasifyError::Mismatch);
    }
    let mut classes = Vec::with_capacity(c.len());
    for x in c.vertices() {
        let mut row = Vec::with_capacity(c.rank().saturating_sub(1));
        for i in c.indices() {
            row.push(match (c.lower(x, i), q.lower(x, i)) {
                (None, None) => OperatorClass::Undefined,
                (Some(_), None) => OperatorClass::Strict,
                (Some(a), Some(b)) if a == b => OperatorClass::Quasi,
                _ => return Err(QuasifyError::Mismatch),
            });
        }
        classes.push(row);
    }
    Ok(OperatorClasses { classes })
}

/// The component of the classical power `B_n^{⊗|λ|}` with highest weight
/// `λ` whose minimal vertex id is smallest.
pub fn crystal_of_content(shape: &Partition, n: usize) -> Result<QuasiCrystalGraph, QuasifyError> {
    if shape.len() > n {
        return Err(QuasifyError::InvalidShape { shape: shape.clone(), n });
    }
    let power = tensor_power(n, shape.size(), DEFAULT_SIZE_CAP)?;
    let target = shape.to_weight(n);
    components(&power)
        .into_iter()
        .find(|comp| unique_highest_weight(comp).is_ok_and(|u| *power.weight(u) == target))
        .map(|comp| comp.subgraph())
        .ok_or(QuasifyError::NoSuchComponent(target))
}

/// The component of `B_n^{⊗|w|}` containing the word `w`.
pub fn crystal_component_containing(word: &Word, n: usize) -> Result<QuasiCrystalGraph, QuasifyError> {
    if word.letters().iter().any(|&a| a > n) {
        return Err(QuasifyError::InvalidWord(word.clone(), n));
    }
    let power = tensor_power(n, word.len(), DEFAULT_SIZE_CAP)?;
    let v = power
        .index_of(&word.label(n))
        .ok_or_else(|| QuasifyError::InvalidWord(word.clone(), n))?;
    Ok(component_of(&power, v).subgraph())
}

/// Number of components of the quasification of the crystal with
/// highest weight `λ`.
pub fn count_quasi_components(shape: &Partition, n: usize) -> Result<usize, QuasifyError> {
    let crystal = crystal_of_content(shape, n)?;
    Ok(components(&quasify(&crystal)?).len())
}

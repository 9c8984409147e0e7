//! Word-model constructions: the standard crystal `B_n`, the classical and
//! quasi tensor products, and their left-iterated powers.
//!
//! The pair `x (x) y` is labelled by the word `yx`, so the last letter of a
//! power's word is its first tensor factor.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ext::ExtInt;
use crate::graph::{is_crystal, is_seminormal, GraphBuilder, GraphError, QuasiCrystalGraph, VertexId};
use crate::weight::{pair_with_root, Weight};

/// Default bound on the number of vertices any builder will materialise.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("operand is not a crystal: {0}")]
    NotCrystal(String),
    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },
    #[error("tensor length must be at least 1")]
    EmptyPower,
    #[error("{size} vertices exceed the size cap {cap}")]
    SizeCap { size: u128, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A word over `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Content vector: the number of occurrences of each letter.
    pub fn content(&self, n: usize) -> Weight {
        let mut coords = vec![0; n];
        for &a in &self.0 {
            coords[a - 1] += 1;
        }
        Weight::new(coords)
    }

    /// Label used for vertex ids: plain digits for `n <= 9`, dot-separated
    /// otherwise.
    pub fn label(&self, n: usize) -> String {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        parts.join(if n <= 9 { "" } else { "." })
    }

    pub fn to_vertex_id(&self, n: usize) -> VertexId {
        VertexId::new(self.label(n))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.iter().copied().max().unwrap_or(1);
        f.write_str(&self.label(n))
    }
}

impl FromStr for Word {
    type Err = String;
    /// Accepts `3121` or `3.1.2.1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters: Option<Vec<usize>> = if s.contains('.') {
            s.split('.').map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        match letters {
            Some(v) if !v.is_empty() && v.iter().all(|&a| a >= 1) => Ok(Word(v)),
            _ => Err(format!("invalid word {s:?}")),
        }
    }
}

/// `B_n`: vertices `1..=n`, `f_i(i) = i+1`, `wt(j) = e_j`.
pub fn standard_crystal(n: usize) -> Result<QuasiCrystalGraph, BuildError> {
    if n < 1 {
        return Err(BuildError::RankTooSmall { min: 1, got: n });
    }
    let mut b = GraphBuilder::with_capacity(n, n);
    for j in 1..=n {
        let eps = (1..n).map(|i| ExtInt::Finite((j == i + 1) as i64)).collect();
        let phi = (1..n).map(|i| ExtInt::Finite((j == i) as i64)).collect();
        b.add_vertex(Word(vec![j]).to_vertex_id(n), Weight::unit(n, j), eps, phi)?;
    }
    for i in 1..n {
        b.add_edge(i - 1, i, i)?;
    }
    Ok(b.build()?)
}

fn product_id(n: usize, left: &VertexId, right: &VertexId) -> VertexId {
    if n <= 9 {
        VertexId::new(format!("{right}{left}"))
    } else {
        VertexId::new(format!("{right}.{left}"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    Classical,
    Quasi,
}

fn check_cap(size: u128, cap: usize) -> Result<(), BuildError> {
    if size > cap as u128 {
        return Err(BuildError::SizeCap { size, cap });
    }
    Ok(())
}

fn product(
    a: &QuasiCrystalGraph,
    b: &QuasiCrystalGraph,
    rule: Rule,
    cap: usize,
) -> Result<QuasiCrystalGraph, BuildError> {
    if a.rank() != b.rank() {
        return Err(BuildError::RankMismatch(a.rank(), b.rank()));
    }
    check_cap(a.len() as u128 * b.len() as u128, cap)?;
    let n = a.rank();
    let (na, nb) = (a.len(), b.len());
    // vertex (x, x') sits at x' * na + x, so ids `x'x` come out in word order
    let cell = |x: usize, xp: usize| xp * na + x;

    let mut builder = GraphBuilder::with_capacity(n, na * nb);
    let mut raise_entries = Vec::new();
    let mut lower_entries = Vec::new();
    for xp in 0..nb {
        for x in 0..na {
            let (wx, wxp) = (a.weight(x), b.weight(xp));
            let mut eps = Vec::with_capacity(n.saturating_sub(1));
            let mut phi = Vec::with_capacity(n.saturating_sub(1));
            for i in 1..n {
                let (phi_x, eps_xp) = (a.phi(x, i), b.eps(xp, i));
                if rule == Rule::Quasi && phi_x > 0 && eps_xp > 0 {
                    eps.push(ExtInt::PosInf);
                    phi.push(ExtInt::PosInf);
                    continue;
                }
                let up = if phi_x >= eps_xp {
                    a.raise(x, i).map(|y| cell(y, xp))
                } else {
                    b.raise(xp, i).map(|yp| cell(x, yp))
                };
                let down = if phi_x > eps_xp {
                    a.lower(x, i).map(|y| cell(y, xp))
                } else {
                    b.lower(xp, i).map(|yp| cell(x, yp))
                };
                if let Some(t) = up {
                    raise_entries.push((cell(x, xp), i, t));
                }
                if let Some(t) = down {
                    lower_entries.push((cell(x, xp), i, t));
                }
                eps.push(a.eps(x, i).max(eps_xp.shift(-pair_with_root(wx, i))));
                phi.push(phi_x.shift(pair_with_root(wxp, i)).max(b.phi(xp, i)));
            }
            builder.add_vertex(product_id(n, a.id(x), b.id(xp)), wx + wxp, eps, phi)?;
        }
    }
    for (v, i, t) in raise_entries {
        builder.set_raise(v, i, t)?;
    }
    for (v, i, t) in lower_entries {
        builder.set_lower(v, i, t)?;
    }
    Ok(builder.build()?)
}

/// Classical tensor product of two seminormal crystals.
pub fn tensor(a: &QuasiCrystalGraph, b: &QuasiCrystalGraph) -> Result<QuasiCrystalGraph, BuildError> {
    tensor_capped(a, b, DEFAULT_SIZE_CAP)
}

pub fn tensor_capped(
    a: &QuasiCrystalGraph,
    b: &QuasiCrystalGraph,
    cap: usize,
) -> Result<QuasiCrystalGraph, BuildError> {
    for (name, g) in [("left", a), ("right", b)] {
        if !is_crystal(g) {
            return Err(BuildError::NotCrystal(format!("{name} operand has infinite lengths")));
        }
        if !is_seminormal(g).passed() {
            return Err(BuildError::NotCrystal(format!("{name} operand is not seminormal")));
        }
    }
    product(a, b, Rule::Classical, cap)
}

/// Quasi-tensor product: pairs with `phi_i(x) > 0` and `eps_i(x') > 0` are
/// blocked at `i` and carry an `i`-loop.
pub fn quasi_tensor(a: &QuasiCrystalGraph, b: &QuasiCrystalGraph) -> Result<QuasiCrystalGraph, BuildError> {
    quasi_tensor_capped(a, b, DEFAULT_SIZE_CAP)
}

pub fn quasi_tensor_capped(
    a: &QuasiCrystalGraph,
    b: &QuasiCrystalGraph,
    cap: usize,
) -> Result<QuasiCrystalGraph, BuildError> {
    product(a, b, Rule::Quasi, cap)
}

fn power(n: usize, k: usize, rule: Rule, cap: usize) -> Result<QuasiCrystalGraph, BuildError> {
    if n < 2 {
        return Err(BuildError::RankTooSmall { min: 2, got: n });
    }
    if k < 1 {
        return Err(BuildError::EmptyPower);
    }
    let size = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    check_cap(size, cap)?;
    let base = standard_crystal(n)?;
    let mut acc = base.clone();
    for _ in 1..k {
        // the operands are seminormal crystals by construction
        acc = product(&acc, &base, rule, cap)?;
    }
    Ok(acc)
}

/// `B_n^{(x) k}`, left-iterated, vertices labelled by words.
pub fn tensor_power(n: usize, k: usize, cap: usize) -> Result<QuasiCrystalGraph, BuildError> {
    power(n, k, Rule::Classical, cap)
}

/// `B_n^{quasi-(x) k}`, left-iterated, vertices labelled by words.
pub fn quasi_tensor_power(n: usize, k: usize, cap: usize) -> Result<QuasiCrystalGraph, BuildError> {
    power(n, k, Rule::Quasi, cap)
}

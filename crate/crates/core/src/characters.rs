//! Characters as exact integer polynomials: crystal characters, Schur
//! polynomials, fundamental quasisymmetric polynomials and the
//! decomposition of `s_λ` over standard tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use thiserror::Error;

use crate::graph::QuasiCrystalGraph;
use crate::quasify::{crystal_of_content, quasify, QuasifyError};
use crate::structure::{components, unique_highest_weight, Component, StructureError};
use crate::weight::{descent_composition, enumerate_syt, Composition, Partition, StandardTableau, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("vertex {vertex} has weight {weight} with a negative entry")]
    NegativeWeight { vertex: String, weight: Weight },
    #[error(transparent)]
    Quasify(#[from] QuasifyError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Polynomial in `x_1, ..., x_n` with integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl IntPolynomial {
    pub fn zero(nvars: usize) -> Self {
        IntPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exponents: Vec<u32>, coefficient: i64) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coefficient);
        p
    }

    /// `x_k`, 1-based.
    pub fn variable(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k - 1] = 1;
        Self::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Sum of all coefficients, the value at `(1, ..., 1)`.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coefficient: i64) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(exponents.clone()).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.terms.remove(&exponents);
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = IntPolynomial::zero(self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    /// Monomials in decreasing lexicographic order, e.g. `x1^2 + 2*x1*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| if p == 1 { format!("x{}", v + 1) } else { format!("x{}^{p}", v + 1) })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let magnitude = c.unsigned_abs();
            match (factors.is_empty(), magnitude) {
                (true, m) => write!(f, "{m}")?,
                (false, 1) => write!(f, "{}", factors.join("*"))?,
                (false, m) => write!(f, "{m}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

fn character_of_vertices(
    g: &QuasiCrystalGraph,
    vertices: impl Iterator<Item = usize>,
) -> Result<IntPolynomial, CharacterError> {
    let mut p = IntPolynomial::zero(g.rank());
    for v in vertices {
        let wt = g.weight(v);
        if !wt.is_nonnegative() {
            return Err(CharacterError::NegativeWeight {
                vertex: g.id(v).to_string(),
                weight: wt.clone(),
            });
        }
        p.add_term(wt.coords().iter().map(|&c| c as u32).collect(), 1);
    }
    Ok(p)
}

/// Sum of `x^wt(v)` over all vertices.
pub fn character(g: &QuasiCrystalGraph) -> Result<IntPolynomial, CharacterError> {
    character_of_vertices(g, g.vertices())
}

pub fn component_character(c: &Component<'_>) -> Result<IntPolynomial, CharacterError> {
    character_of_vertices(c.graph(), c.vertices().iter().copied())
}

/// The Schur polynomial `s_λ(x_1, ..., x_n)` as the character of the
/// crystal with highest weight `λ`.
pub fn schur(shape: &Partition, n: usize) -> Result<IntPolynomial, CharacterError> {
    character(&crystal_of_content(shape, n)?)
}

/// Gessel's fundamental quasisymmetric polynomial `F_α(x_1, ..., x_n)`:
/// the sum of `x_{i_1} ... x_{i_k}` over weakly increasing index
/// sequences that increase strictly at every partial sum of `α`.
pub fn fundamental_qsym(alpha: &Composition, n: usize) -> IntPolynomial {
    let k = alpha.size();
    let descents = alpha.descent_set();
    let mut strict = vec![false; k + 1];
    for d in descents {
        strict[d] = true;
    }
    let mut out = IntPolynomial::zero(n);
    let mut exps = vec![0u32; n];
    // position j (1-based) takes index >= prev, strictly if j-1 is a descent
    fn recurse(j: usize, prev: usize, k: usize, n: usize, strict: &[bool], exps: &mut [u32], out: &mut IntPolynomial) {
        if j > k {
            out.add_term(exps.to_vec(), 1);
            return;
        }
        let lo = if j > 1 && strict[j - 1] { prev + 1 } else { prev };
        for idx in lo..=n {
            exps[idx - 1] += 1;
            recurse(j + 1, idx, k, n, strict, exps, out);
            exps[idx - 1] -= 1;
        }
    }
    recurse(1, 1, k, n, &strict, &mut exps, &mut out);
    out
}

/// One term `F_{DesComp(T)}` of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurTerm {
    pub tableau: StandardTableau,
    pub composition: Composition,
    pub polynomial: IntPolynomial,
}

/// A quasi-component of the quasified crystal and its character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiComponentData {
    pub highest_weight_vertex: String,
    pub character: IntPolynomial,
    /// Highest-weight content without trailing zeros.
    pub content: Option<Composition>,
    /// Whether the character equals `F` of `content`.
    pub matches_content: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurDecomposition {
    pub shape: Partition,
    pub n: usize,
    pub schur: IntPolynomial,
    pub terms: Vec<SchurTerm>,
    pub components: Vec<QuasiComponentData>,
}

impl SchurDecomposition {
    pub fn term_sum(&self) -> IntPolynomial {
        self.terms
            .iter()
            .fold(IntPolynomial::zero(self.n), |acc, t| &acc + &t.polynomial)
    }

    /// `s_λ = sum over SYT(λ) of F_{DesComp(T)}`.
    pub fn polynomial_identity_holds(&self) -> bool {
        self.schur == self.term_sum()
    }

    /// The component characters and the F-terms agree as multisets.
    pub fn multisets_match(&self) -> bool {
        let mut a: Vec<&IntPolynomial> = self.components.iter().map(|c| &c.character).collect();
        let mut b: Vec<&IntPolynomial> = self.terms.iter().map(|t| &t.polynomial).collect();
        a.sort();
        b.sort();
        a == b
    }

    /// Every component character is `F` of its highest-weight content.
    pub fn components_match_content(&self) -> bool {
        self.components.iter().all(|c| c.matches_content)
    }

    pub fn passed(&self) -> bool {
        self.polynomial_identity_holds() && self.multisets_match()
    }
}

/// Computes both sides of the decomposition of `s_λ` together with the
/// characters of the quasi-components of the crystal with highest weight
/// `λ`.
pub fn verify_schur_decomposition(shape: &Partition, n: usize) -> Result<SchurDecomposition, CharacterError> {
    let crystal = crystal_of_content(shape, n)?;
    let schur = character(&crystal)?;
    let terms = enumerate_syt(shape)
        .into_iter()
        .map(|tableau| {
            let composition = descent_composition(&tableau);
            let polynomial = fundamental_qsym(&composition, n);
            SchurTerm {
                tableau,
                composition,
                polynomial,
            }
        })
        .collect();
    let q = quasify(&crystal)?;
    let mut comps = Vec::new();
    for c in components(&q) {
        let u = unique_highest_weight(&c)?;
        let character = component_character(&c)?;
        let content = Composition::from_content(q.weight(u));
        let matches_content = content
            .as_ref()
            .is_some_and(|alpha| fundamental_qsym(alpha, n) == character);
        comps.push(QuasiComponentData {
            highest_weight_vertex: q.id(u).to_string(),
            character,
            content,
            matches_content,
        });
    }
    Ok(SchurDecomposition {
        shape: shape.clone(),
        n,
        schur,
        terms,
        components: comps,
    })
}

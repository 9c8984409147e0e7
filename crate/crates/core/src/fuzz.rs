//! Random single-entry mutations of compliant graphs, used to measure how
//! often the checkers notice a corrupted table.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::{check_local_axioms, check_stembridge};
use crate::ext::ExtInt;
use crate::graph::{is_seminormal, validate, Mutation, QuasiCrystalGraph};
use crate::quasify::{crystal_of_content, quasify};
use crate::report::AxiomReport;
use crate::weight::Partition;
use crate::word::{quasi_tensor_power, standard_crystal, tensor_power};

/// The compliant corpus: quasi-tensor powers `B_n^{qt k}` for
/// `(n, k)` in `(2, <=5)`, `(3, <=4)`, `(4, <=3)`, and the quasification of
/// the crystal with highest weight `λ` for every `λ` of size at most 4
/// fitting in rank 3 or 4.
pub fn quasi_corpus() -> Vec<(String, QuasiCrystalGraph)> {
    let mut out = Vec::new();
    for (n, max_k) in [(2, 5), (3, 4), (4, 3)] {
        for k in 1..=max_k {
            let g = quasi_tensor_power(n, k, 10_000).expect("small power");
            out.push((format!("B{n}^qt{k}"), g));
        }
    }
    for n in [3, 4] {
        for m in 1..=4 {
            for shape in Partition::all(m).into_iter().filter(|p| p.len() <= n) {
                let c = crystal_of_content(&shape, n).expect("shape fits rank");
                out.push((format!("Q{shape}/n{n}"), quasify(&c).expect("Stembridge crystal")));
            }
        }
    }
    out
}

/// Classical crystals checked against the Stembridge axioms.
pub fn classical_corpus() -> Vec<(String, QuasiCrystalGraph)> {
    let mut out = vec![("B3".to_string(), standard_crystal(3).expect("n >= 1"))];
    for (n, k) in [(3, 2), (3, 3), (4, 2)] {
        out.push((format!("B{n}^t{k}"), tensor_power(n, k, 10_000).expect("small power")));
    }
    out
}

/// Both corpora.
pub fn default_corpus() -> Vec<(String, QuasiCrystalGraph)> {
    let mut out = quasi_corpus();
    out.extend(classical_corpus());
    out
}

/// Every checker applicable to `g`, in a fixed order.
pub fn run_checkers(g: &QuasiCrystalGraph) -> Vec<AxiomReport> {
    let mut reports = vec![validate(g), is_seminormal(g)];
    reports.extend(check_local_axioms(g));
    if let Ok(stembridge) = check_stembridge(g) {
        reports.push(AxiomReport::merged("stembridge", stembridge));
    }
    reports
}

fn random_length(rng: &mut ChaCha8Rng, current: ExtInt) -> ExtInt {
    loop {
        let candidate = match rng.gen_range(0..6) {
            0 => ExtInt::PosInf,
            1 => ExtInt::ZERO,
            _ => match current {
                ExtInt::Finite(v) => ExtInt::Finite(v + [-2, -1, 1, 2][rng.gen_range(0..4)]),
                _ => ExtInt::Finite(rng.gen_range(0..4)),
            },
        };
        if candidate != current {
            return candidate;
        }
    }
}

fn random_target(rng: &mut ChaCha8Rng, g: &QuasiCrystalGraph, current: Option<usize>) -> Option<usize> {
    loop {
        let candidate = if rng.gen_bool(0.2) {
            None
        } else {
            Some(rng.gen_range(0..g.len()))
        };
        if candidate != current {
            return candidate;
        }
    }
}

/// A mutation that changes exactly one table entry of `g`. `g` must have
/// rank at least 2.
pub fn random_mutation(rng: &mut ChaCha8Rng, g: &QuasiCrystalGraph) -> Mutation {
    let vertex = rng.gen_range(0..g.len());
    let index = rng.gen_range(1..g.rank());
    match rng.gen_range(0..5) {
        0 => Mutation::Eps {
            vertex,
            index,
            value: random_length(rng, g.eps(vertex, index)),
        },
        1 => Mutation::Phi {
            vertex,
            index,
            value: random_length(rng, g.phi(vertex, index)),
        },
        2 => Mutation::Raise {
            vertex,
            index,
            target: random_target(rng, g, g.raise(vertex, index)),
        },
        3 => Mutation::Lower {
            vertex,
            index,
            target: random_target(rng, g, g.lower(vertex, index)),
        },
        _ => {
            let coord = rng.gen_range(1..=g.rank());
            let delta = *[-2i64, -1, 1, 2].choose(rng).expect("non-empty");
            Mutation::Weight {
                vertex,
                coord,
                value: g.weight(vertex).get(coord) + delta,
            }
        }
    }
}

/// A mutation no checker noticed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SilentMutation {
    pub graph: String,
    pub mutation: String,
    /// The mutated vertex has no incident edges, so no local condition
    /// relates its weight to anything else.
    pub isolated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzOutcome {
    pub total: usize,
    pub detected: usize,
    pub silent: Vec<SilentMutation>,
}

impl FuzzOutcome {
    pub fn detection_rate(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.detected as f64 / self.total as f64
        }
    }

    /// Silent mutations not explained by an isolated vertex.
    pub fn unexplained(&self) -> impl Iterator<Item = &SilentMutation> {
        self.silent.iter().filter(|s| !s.isolated)
    }
}

fn mutated_vertex(m: &Mutation) -> usize {
    match *m {
        Mutation::Eps { vertex, .. }
        | Mutation::Phi { vertex, .. }
        | Mutation::Weight { vertex, .. }
        | Mutation::Raise { vertex, .. }
        | Mutation::Lower { vertex, .. } => vertex,
    }
}

fn is_isolated(g: &QuasiCrystalGraph, v: usize) -> bool {
    g.indices().all(|i| g.raise(v, i).is_none() && g.lower(v, i).is_none())
}

/// Applies `count` random mutations, cycling through `corpus`. A mutation
/// counts as detected when some checker that passes on the original graph
/// reports a witness on the mutated one.
pub fn fuzz(corpus: &[(String, QuasiCrystalGraph)], count: usize, seed: u64) -> FuzzOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let usable: Vec<(&String, &QuasiCrystalGraph, Vec<String>)> = corpus
        .iter()
        .filter(|(_, g)| g.rank() >= 2)
        .map(|(name, g)| {
            let baseline = run_checkers(g)
                .into_iter()
                .filter(AxiomReport::passed)
                .map(|r| r.axiom)
                .collect();
            (name, g, baseline)
        })
        .collect();
    let mut outcome = FuzzOutcome {
        total: 0,
        detected: 0,
        silent: Vec::new(),
    };
    if usable.is_empty() {
        return outcome;
    }
    for k in 0..count {
        let (name, g, baseline) = &usable[k % usable.len()];
        let m = random_mutation(&mut rng, g);
        let mutated = g.mutated(&m).expect("mutation stays in range");
        let caught = run_checkers(&mutated)
            .iter()
            .any(|r| baseline.contains(&r.axiom) && !r.passed());
        outcome.total += 1;
        if caught {
            outcome.detected += 1;
        } else {
            outcome.silent.push(SilentMutation {
                graph: name.to_string(),
                mutation: m.to_string(),
                isolated: is_isolated(g, mutated_vertex(&m)),
            });
        }
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_compliant_where_expected() {
        for (name, g) in default_corpus() {
            assert!(validate(&g).passed(), "{name}");
            assert!(is_seminormal(&g).passed(), "{name}");
            if !name.contains("^t") {
                assert!(check_local_axioms(&g).iter().all(AxiomReport::passed), "{name}");
            }
        }
    }

    #[test]
    fn mutations_change_the_graph() {
        let g = quasi_tensor_power(3, 2, 100).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let m = random_mutation(&mut rng, &g);
            assert_ne!(g.mutated(&m).unwrap(), g, "{m}");
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let corpus = default_corpus();
        assert_eq!(fuzz(&corpus, 40, 3), fuzz(&corpus, 40, 3));
    }
}

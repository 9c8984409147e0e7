use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcrystal::axioms::{check_local_axioms, check_lq2, check_lq3, check_stembridge, local_ax_cases_report};
use qcrystal::characters::{character, component_character, IntPolynomial};
use qcrystal::fuzz::quasi_corpus;
use qcrystal::graph::{is_crystal, validate, QuasiCrystalGraph};
use qcrystal::quasify::{crystal_of_content, quasify};
use qcrystal::report::AxiomReport;
use qcrystal::structure::{components, isomorphic, rank_of, raising_distance, IsoOptions};
use qcrystal::weight::Partition;
use qcrystal::word::{quasi_tensor, quasi_tensor_power, standard_crystal, tensor, tensor_power};

fn small_power() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![(Just(2usize), 1usize..=5), (Just(3usize), 1usize..=3), (Just(4usize), 1usize..=2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quasi_powers_satisfy_local_axioms((n, k) in small_power()) {
        let g = quasi_tensor_power(n, k, 10_000).unwrap();
        prop_assert!(validate(&g).passed());
        prop_assert!(check_local_axioms(&g).iter().all(AxiomReport::passed));
        prop_assert!(local_ax_cases_report(&g).0.passed());
    }

    #[test]
    fn rank_is_raising_distance((n, k) in small_power()) {
        let g = quasi_tensor_power(n, k, 10_000).unwrap();
        for c in components(&g) {
            for &x in c.vertices() {
                prop_assert_eq!(Some(rank_of(&c, x).unwrap() as usize), raising_distance(&c, x));
            }
        }
    }

    #[test]
    fn checkers_ignore_vertex_order((n, k) in small_power(), seed in any::<u64>()) {
        let g = tensor_power(n, k, 10_000).unwrap();
        let mut order: Vec<usize> = g.vertices().collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.induced(&order);
        prop_assert_eq!(check_lq2(&g), check_lq2(&h));
        prop_assert_eq!(check_lq3(&g), check_lq3(&h));
        prop_assert_eq!(validate(&g), validate(&h));
    }

    #[test]
    fn characters_multiply(n in 2usize..4, a in 1usize..3, b in 1usize..3) {
        let (ta, tb) = (tensor_power(n, a, 1000).unwrap(), tensor_power(n, b, 1000).unwrap());
        let (ca, cb) = (character(&ta).unwrap(), character(&tb).unwrap());
        prop_assert_eq!(character(&tensor(&ta, &tb).unwrap()).unwrap(), &ca * &cb);
        prop_assert_eq!(character(&quasi_tensor(&ta, &tb).unwrap()).unwrap(), &ca * &cb);
    }
}

#[test]
fn characters_add_over_components() {
    for (_, g) in quasi_corpus() {
        let sum = components(&g)
            .iter()
            .fold(IntPolynomial::zero(g.rank()), |acc, c| &acc + &component_character(c).unwrap());
        assert_eq!(sum, character(&g).unwrap());
    }
}

#[test]
fn isomorphism_is_an_equivalence() {
    let g = quasi_tensor_power(3, 3, 1000).unwrap();
    let cs = components(&g);
    let opts = IsoOptions::default();
    for a in &cs {
        for b in &cs {
            let ab = isomorphic(a, b, opts).unwrap();
            let ba = isomorphic(b, a, opts).unwrap();
            assert_eq!(ab.is_some(), ba.is_some());
            if let Some(theta) = &ab {
                assert!(theta.inverse().verify(b, a, opts).passed());
                for c in &cs {
                    if let Some(eta) = isomorphic(b, c, opts).unwrap() {
                        let composed = theta.then(&eta).unwrap();
                        assert!(composed.verify(a, c, opts).passed());
                    }
                }
            }
        }
    }
}

#[test]
fn lq_compliant_crystals_are_weak_stembridge() {
    let mut graphs: Vec<QuasiCrystalGraph> = quasi_corpus().into_iter().map(|(_, g)| g).collect();
    graphs.extend((2..=5).map(|n| standard_crystal(n).unwrap()));
    let mut seen = 0;
    for g in graphs.iter().filter(|g| is_crystal(g)) {
        if check_local_axioms(g).iter().all(AxiomReport::passed) {
            seen += 1;
            let reports = check_stembridge(g).unwrap();
            assert!(reports[0].passed() && reports[1].passed());
        }
    }
    assert!(seen > 0);
}

#[test]
fn quasified_crystals_satisfy_local_axioms() {
    for m in 1..=5 {
        for shape in Partition::all(m).into_iter().filter(|p| p.len() <= 4) {
            let c = crystal_of_content(&shape, 4).unwrap();
            let q = quasify(&c).unwrap();
            assert!(check_local_axioms(&q).iter().all(AxiomReport::passed), "{shape}");
            assert_eq!(q.len(), c.len());
            assert!(q.edge_count() <= c.edge_count());
        }
    }
}

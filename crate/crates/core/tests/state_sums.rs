use bennequin::harness::{random_braid, random_front, random_knot_front};
use bennequin::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn diagram_identity(n in 2u32..=4, len in 1usize..=6, seed in any::<u64>()) {
        let b = random_braid(&mut rng(seed), n, len);
        let cert = jaeger_both_sides(&MorseDiagram::braid_closure(&b));
        prop_assert!(cert.equal, "{}", b);
    }

    #[test]
    fn front_identity_and_proof_chain(seed in any::<u64>()) {
        let f = random_front(&mut rng(seed), 5, 6);
        let mut engine = JaegerEngine::new();
        prop_assert!(engine.lj(&f).equal, "{}", f);
        let chain = engine.proof_chain(&f);
        prop_assert!(chain.holds(), "{}: {:?}", f, chain.failures);
    }

    #[test]
    fn state_contributions_are_polynomials(seed in any::<u64>()) {
        let f = random_front(&mut rng(seed), 6, 6);
        let report = lemma_check(&f);
        for s in &report.states {
            prop_assert!(s.min_a_degree >= 0, "{}: {:?}", f, s);
            prop_assert!(s.min_a_degree >= s.bound, "{}: {:?}", f, s);
            prop_assert!(s.vertical <= s.left_up, "{}: {:?}", f, s);
        }
        prop_assert!(report.holds);
    }

    #[test]
    fn orientation_choice_is_irrelevant(seed in any::<u64>()) {
        // a knot's polynomial does not see which way it is traversed
        let f = random_knot_front(&mut rng(seed), 4, 6);
        let o = f.orient(&[true]);
        prop_assert_eq!(homfly_r(&o.morsified), homfly_r(&f.morsify()));
    }
}

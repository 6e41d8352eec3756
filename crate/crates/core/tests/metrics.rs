mod common;

use common::monte_carlo_hitting;
use observer_core::metrics::{adaptation_time, complexity, expected_hitting_time};
use observer_core::morphism::minimize;
use observer_core::testkit::{random_chain, random_environment_for, random_observer, scrambled_copy};
use observer_core::{Alphabet, CoupledSystem, Environment, Joint, Observer, SetKind};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The observer with one more state: arbitrary successors, arbitrary or
/// fresh output.
fn with_extra_state(r: &mut ChaCha8Rng, obs: &Observer) -> Observer {
    let (nx, ny, nz) = (obs.num_states(), obs.num_inputs(), obs.num_outputs());
    let fresh_output = r.gen_bool(0.5);
    let states = Alphabet::numbered(SetKind::State, "x", nx + 1).unwrap();
    let outputs = Alphabet::numbered(SetKind::Output, "z", nz + usize::from(fresh_output)).unwrap();
    let mut transition = obs.transition_table().to_vec();
    transition.extend((0..ny).map(|_| r.gen_range(0..=nx)));
    let mut output_map = obs.output_table().to_vec();
    output_map.push(if fresh_output { nz } else { r.gen_range(0..nz) });
    Observer::from_tables(states, obs.inputs().clone(), outputs, transition, output_map, obs.boundary().clone())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complexity_bounds(seed in any::<u64>()) {
        let a = random_observer(&mut rng(seed), 5);
        let rep = complexity(&a);
        prop_assert!(rep.complexity >= 0.0);
        prop_assert!((rep.raw_log - rep.lambda - rep.complexity).abs() < 1e-12);
        if rep.reduced_sizes.0 > 1 {
            prop_assert!(rep.complexity >= std::f64::consts::LN_2 - 1e-12);
        }
        if rep.reduced_sizes == rep.sizes {
            prop_assert!(rep.lambda.abs() < 1e-12);
            let (x, y, z) = rep.sizes;
            prop_assert!((rep.complexity - ((x * y * z) as f64).ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn complexity_is_invariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_observer(&mut r, 5);
        let (b, _) = scrambled_copy(&mut r, &a);
        prop_assert_eq!(complexity(&a), complexity(&b));
    }

    #[test]
    fn distinguishable_state_never_lowers_complexity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_observer(&mut r, 4);
        let b = with_extra_state(&mut r, &a);
        if minimize(&b).reduced_sizes().0 > minimize(&a).reduced_sizes().0 {
            prop_assert!(complexity(&b).complexity >= complexity(&a).complexity - 1e-12);
        }
    }

    #[test]
    fn adaptation_within_pigeonhole_bound(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_observer(&mut r, 5);
        let ns = r.gen_range(1..=5);
        let env = random_environment_for(&mut r, &a, ns);
        let sys = CoupledSystem::new(a, env).unwrap();
        let bound = sys.observer().num_states() * ns;
        let res = adaptation_time(&sys, Joint::new(0, 0), None, bound).unwrap();
        prop_assert!(res.steps().unwrap() <= bound);
        prop_assert!(res.cycle_period().unwrap() >= 1);
    }

    #[test]
    fn adaptation_is_invariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_observer(&mut r, 5);
        let ns = r.gen_range(1..=5);
        let env = random_environment_for(&mut r, &a, ns);
        let (b, [px, py, pz]) = scrambled_copy(&mut r, &a);
        // The same environment seen through the copy's labels.
        let mut transition = vec![0; ns * b.num_outputs()];
        for s in 0..ns {
            for z in 0..a.num_outputs() {
                transition[s * b.num_outputs() + pz[z]] = env.next(s, z);
            }
        }
        let observation = (0..ns).map(|s| py[env.observe(s)]).collect();
        let env_b = Environment::from_tables(
            env.env_states().clone(),
            b.outputs().retagged(SetKind::Action),
            b.inputs().retagged(SetKind::Observation),
            transition,
            observation,
        ).unwrap();
        let x0 = r.gen_range(0..a.num_states());
        let s0 = r.gen_range(0..ns);
        let sa = CoupledSystem::new(a, env).unwrap();
        let sb = CoupledSystem::new(b, env_b).unwrap();
        let cap = 100;
        prop_assert_eq!(
            adaptation_time(&sa, Joint::new(x0, s0), None, cap).unwrap(),
            adaptation_time(&sb, Joint::new(px[x0], s0), None, cap).unwrap()
        );
    }
}

#[test]
fn hitting_times_match_monte_carlo() {
    let mut r = rng(2024);
    let mut checked = 0;
    while checked < 20 {
        let n = r.gen_range(2..=20);
        let m = random_chain(&mut r, n, 0.4);
        let goal = vec![n - 1];
        let start = r.gen_range(0..n - 1);
        let exact = expected_hitting_time(&m, start, &goal).unwrap();
        if !exact.is_finite() {
            continue;
        }
        let (mean, se) = monte_carlo_hitting(&mut r, &m, start, &goal, 100_000);
        assert!(
            (exact - mean).abs() <= 3.0 * se,
            "n={n} exact={exact} mc={mean} se={se}"
        );
        checked += 1;
    }
}

mod common;

use common::brute_force_has_cycle;
use observer_core::composition::wigner::{WignerScript, ALICE, WIGNER};
use observer_core::composition::{
    check_well_founded, second_order_wrap, stack, MetaGraph, RuleFamily, WellFoundedness, Wiring,
};
use observer_core::morphism::{equivalent, find_isomorphism};
use observer_core::testkit::random_observer_sized;
use observer_core::{Alphabet, Observer, SetKind};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random observer whose outputs carry the shared labels `z0..`, and whose
/// inputs do too when `shared_inputs` is set.
fn pipeline_stage(r: &mut ChaCha8Rng, nx: usize, ny: usize, sigma: usize, shared_inputs: bool) -> Observer {
    let o = random_observer_sized(r, nx, if shared_inputs { sigma } else { ny }, sigma);
    if !shared_inputs {
        return o;
    }
    o.relabeled(
        o.states().clone(),
        Alphabet::numbered(SetKind::Input, "z", sigma).unwrap(),
        o.outputs().clone(),
    )
    .unwrap()
}

fn pipe(lower: &Observer, upper: &Observer) -> Observer {
    stack(lower, upper, &Wiring::by_name(lower, upper, true).unwrap()).unwrap()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> (MetaGraph, Vec<(usize, usize)>) {
    let mut g = MetaGraph::new();
    for i in 0..n {
        g.add_node(&format!("n{i}"));
    }
    let mut edges = Vec::new();
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            g.add_edge(&format!("n{u}"), &format!("n{v}"));
            edges.push((u, v));
        }
    }
    (g, edges)
}

fn assert_agrees(n: usize, g: &MetaGraph, edges: &[(usize, usize)]) {
    let expected = brute_force_has_cycle(n, edges);
    match check_well_founded(g) {
        WellFoundedness::WellFounded => assert!(!expected, "missed cycle in {edges:?}"),
        WellFoundedness::Cycle(c) => {
            assert!(expected, "phantom cycle in {edges:?}");
            let idx: Vec<usize> = c.iter().map(|s| s[1..].parse().unwrap()).collect();
            for i in 0..idx.len() {
                let e = (idx[i], idx[(i + 1) % idx.len()]);
                assert!(edges.contains(&e), "reported cycle {c:?} uses missing edge {e:?}");
            }
        }
    }
}

#[test]
fn well_founded_matches_brute_force_on_small_graphs() {
    for n in 1..=5usize {
        let loopless: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        for mask in 0..1u64 << loopless.len() {
            let (g, edges) = graph_from_mask(n, &loopless, mask);
            assert_agrees(n, &g, &edges);
        }
        if n <= 4 {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
            for mask in 0..1u64 << all.len() {
                let (g, edges) = graph_from_mask(n, &all, mask);
                assert_agrees(n, &g, &edges);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn well_founded_matches_brute_force_up_to_eight(n in 1usize..=8, density in 0.0f64..0.4, seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
        let edges: Vec<(usize, usize)> = all.into_iter().filter(|_| r.gen_bool(density)).collect();
        let mut g = MetaGraph::new();
        for i in 0..n {
            g.add_node(&format!("n{i}"));
        }
        for (u, v) in &edges {
            g.add_edge(&format!("n{u}"), &format!("n{v}"));
        }
        assert_agrees(n, &g, &edges);
    }

    #[test]
    fn pipeline_stacking_is_associative(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let sigma = r.gen_range(1..=3);
        let na = r.gen_range(1..=3);
        let a = pipeline_stage(&mut r, na, 2, sigma, false);
        let b = pipeline_stage(&mut r, 2, sigma, sigma, true);
        let c = pipeline_stage(&mut r, 2, sigma, sigma, true);
        let left = pipe(&pipe(&a, &b), &c);
        let right = pipe(&a, &pipe(&b, &c));
        prop_assert!(find_isomorphism(&left, &right, None).unwrap().is_some());
    }

    #[test]
    fn second_order_wrap_is_total(seed in any::<u64>(), nk in 1usize..=3) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let tables: Vec<Observer> = (0..nk).map(|_| random_observer_sized(&mut r, 3, 2, 2)).collect();
        let meta: Vec<usize> = (0..nk * 3 * 2).map(|_| r.gen_range(0..nk)).collect();
        let family = RuleFamily::from_observers(&tables, |k, x, y| meta[(k * 3 + x) * 2 + y]).unwrap();
        let base = &tables[0];
        let w = second_order_wrap(base.states(), base.inputs(), base.outputs(), &family).unwrap();
        prop_assert_eq!(w.num_states(), 3 * nk);
        prop_assert_eq!(w.transition_table().len(), 3 * nk * 2);
    }
}

#[test]
fn twenty_associative_triples() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let sigma = r.gen_range(2..=3);
        let na = r.gen_range(1..=3);
        let a = pipeline_stage(&mut r, na, 2, sigma, false);
        let b = pipeline_stage(&mut r, 2, sigma, sigma, true);
        let c = pipeline_stage(&mut r, 2, sigma, sigma, true);
        let left = pipe(&pipe(&a, &b), &c);
        let right = pipe(&a, &pipe(&b, &c));
        assert_eq!(left.num_states(), right.num_states());
        assert!(equivalent(&left, &right));
    }
}

#[test]
fn wigner_asymmetry_then_agreement() {
    let script = WignerScript::default();
    let run = script.run().unwrap();
    let l = &run.ledger;
    let strict = (1..=script.horizon).find(|&t| {
        let a = l.known_inputs(ALICE, t);
        let w = l.known_inputs(WIGNER, t);
        w.is_subset(&a) && a.len() > w.len()
    });
    assert_eq!(strict, Some(script.measure_step));
    for t in script.read_step..=script.horizon {
        assert_eq!(l.known_inputs(ALICE, t), l.known_inputs(WIGNER, t));
    }
}

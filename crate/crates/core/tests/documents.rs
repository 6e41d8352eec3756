use std::path::PathBuf;

use observer_core::ca::{damping_observer, rule_table, transparent_observer};
use observer_core::composition::wigner::{alice, spin_environment, wigner};
use observer_core::document::{
    parse_chain, parse_environment, parse_observer, serialize_chain, serialize_environment,
    serialize_observer,
};
use observer_core::fixtures::*;
use observer_core::testkit::{random_environment_for, random_observer};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Shipped fixtures must equal the canonical serialization of the library
/// fixtures. Set `OBSERVER_BLESS=1` to rewrite them.
#[test]
fn shipped_fixtures_are_canonical() {
    let r110 = rule_table(110).unwrap();
    let docs: Vec<(&str, String)> = vec![
        ("thermostat.json", serialize_observer(&thermostat())),
        ("thermostat_renamed.json", serialize_observer(&thermostat_renamed())),
        ("constant_output.json", serialize_observer(&constant_output_thermostat())),
        ("redundant.json", serialize_observer(&redundant_observer())),
        ("flip_env.json", serialize_environment(&flip_environment())),
        ("hot_env.json", serialize_environment(&constant_environment("Hot"))),
        ("alice.json", serialize_observer(&alice())),
        ("wigner.json", serialize_observer(&wigner())),
        ("spin_env.json", serialize_environment(&spin_environment())),
        ("transparent_110_k3.json", serialize_observer(&transparent_observer(&r110, 3).unwrap())),
        ("damping_110_k3.json", serialize_observer(&damping_observer(&r110, 3).unwrap())),
        ("two_state_chain.json", serialize_chain(&[vec![0.5, 0.5], vec![0.0, 1.0]])),
    ];
    let bless = std::env::var_os("OBSERVER_BLESS").is_some();
    for (name, text) in docs {
        let path = fixture_dir().join(name);
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let shipped = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(shipped, text, "{name} is stale");
    }
}

#[test]
fn shipped_documents_parse() {
    let t = parse_observer(&std::fs::read(fixture_dir().join("thermostat.json")).unwrap()).unwrap();
    assert_eq!(t.step_observer("OFF", "Cold").unwrap(), "ON");
    assert_eq!(t.step_observer("OFF", "Hot").unwrap(), "OFF");
    assert_eq!(t.step_observer("ON", "Cold").unwrap(), "ON");
    assert_eq!(t.step_observer("ON", "Hot").unwrap(), "OFF");
    assert_eq!(t.output("ON").unwrap(), "HeaterOn");
    assert_eq!(t.output("OFF").unwrap(), "HeaterOff");
    let m = parse_chain(&std::fs::read(fixture_dir().join("two_state_chain.json")).unwrap()).unwrap();
    assert_eq!(m, vec![vec![0.5, 0.5], vec![0.0, 1.0]]);
}

proptest! {
    #[test]
    fn observer_round_trip(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let o = random_observer(&mut r, 5);
        let text = serialize_observer(&o);
        let back = parse_observer(text.as_bytes()).unwrap();
        prop_assert_eq!(back.states(), o.states());
        prop_assert_eq!(back.transition_table(), o.transition_table());
        prop_assert_eq!(back.output_table(), o.output_table());
        prop_assert_eq!(serialize_observer(&back), text);
    }

    #[test]
    fn environment_round_trip(seed in any::<u64>(), ns in 1usize..6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let o = random_observer(&mut r, 4);
        let e = random_environment_for(&mut r, &o, ns);
        let text = serialize_environment(&e);
        let back = parse_environment(text.as_bytes()).unwrap();
        prop_assert_eq!(serialize_environment(&back), text);
    }
}

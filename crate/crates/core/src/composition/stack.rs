use crate::alphabet::Alphabet;
use crate::error::{Error, Result, SetKind};
use crate::observer::{Boundary, Observer};

/// How an upper observer is attached to a lower one.
///
/// `lift` turns each lower output into an upper input (the upper observer
/// watches the lower output stream). `drop`, when present, replaces the
/// composite's output with a lower-level output chosen by the upper
/// observer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wiring {
    pub lift: Vec<usize>,
    pub drop: Option<Vec<usize>>,
}

impl Wiring {
    pub fn from_labels(
        lower: &Observer,
        upper: &Observer,
        lift: &[(&str, &str)],
        drop: Option<&[(&str, &str)]>,
    ) -> Result<Self> {
        let build = |pairs: &[(&str, &str)], from: &Alphabet, to: &Alphabet, name: &str| {
            let mut map = vec![None; from.len()];
            for (a, b) in pairs {
                let i = from.lookup(a).map_err(|e| Error::Wiring(format!("{name}: {e}")))?;
                let j = to.lookup(b).map_err(|e| Error::Wiring(format!("{name}: {e}")))?;
                map[i] = Some(j);
            }
            map.into_iter()
                .enumerate()
                .map(|(i, t)| {
                    t.ok_or_else(|| Error::Wiring(format!("{name} is not total: `{}` unmapped", from.label(i))))
                })
                .collect::<Result<Vec<_>>>()
        };
        Ok(Wiring {
            lift: build(lift, lower.outputs(), upper.inputs(), "lift")?,
            drop: drop
                .map(|d| build(d, upper.outputs(), lower.outputs(), "drop"))
                .transpose()?,
        })
    }

    /// Lifts each lower output to the upper input with the same label, and,
    /// with `with_drop`, drops each upper output to the same-named lower
    /// output.
    pub fn by_name(lower: &Observer, upper: &Observer, with_drop: bool) -> Result<Self> {
        let same = |from: &Alphabet, to: &Alphabet, name: &str| {
            from.iter()
                .map(|(_, l)| {
                    to.get(l)
                        .ok_or_else(|| Error::Wiring(format!("{name}: no counterpart for `{l}`")))
                })
                .collect::<Result<Vec<_>>>()
        };
        Ok(Wiring {
            lift: same(lower.outputs(), upper.inputs(), "lift")?,
            drop: if with_drop {
                Some(same(upper.outputs(), lower.outputs(), "drop")?)
            } else {
                None
            },
        })
    }

    fn validate(&self, lower: &Observer, upper: &Observer) -> Result<()> {
        if self.lift.len() != lower.num_outputs() || self.lift.iter().any(|&y| y >= upper.num_inputs()) {
            return Err(Error::Wiring(
                "lift must map every lower output to an upper input".into(),
            ));
        }
        if let Some(drop) = &self.drop {
            if drop.len() != upper.num_outputs() || drop.iter().any(|&z| z >= lower.num_outputs()) {
                return Err(Error::Wiring(
                    "drop must map every upper output to a lower output".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Product observer: the lower observer reads the external input, the upper
/// observer reads the lifted lower output, both from their post-update
/// states. States are `[lower|upper]` pairs, lower-major.
pub fn stack(lower: &Observer, upper: &Observer, wiring: &Wiring) -> Result<Observer> {
    wiring.validate(lower, upper)?;
    let (nl, nu, ny) = (lower.num_states(), upper.num_states(), lower.num_inputs());
    let states = Alphabet::new(
        SetKind::State,
        lower.states().labels().iter().flat_map(|l| {
            upper
                .states()
                .labels()
                .iter()
                .map(move |u| format!("[{l}|{u}]"))
        }),
    )?;
    let pair = |l: usize, u: usize| l * nu + u;

    let mut transition = Vec::with_capacity(nl * nu * ny);
    let mut output_map = Vec::with_capacity(nl * nu);
    for l in 0..nl {
        for u in 0..nu {
            for y in 0..ny {
                let l2 = lower.next(l, y);
                let u2 = upper.next(u, wiring.lift[lower.out(l2)]);
                transition.push(pair(l2, u2));
            }
            output_map.push(match &wiring.drop {
                Some(drop) => drop[upper.out(u)],
                None => lower.out(l),
            });
        }
    }
    let boundary = Boundary::new(format!(
        "{} within {}",
        lower.boundary().description,
        upper.boundary().description
    ));
    Observer::from_tables(
        states,
        lower.inputs().clone(),
        lower.outputs().clone(),
        transition,
        output_map,
        boundary,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::thermostat;
    use crate::morphism::{check_homomorphism, ObserverMorphism};

    fn supervisor() -> Observer {
        // Counts heater switch-ons modulo two.
        Observer::builder(["even", "odd"], ["HeaterOn", "HeaterOff"], ["HeaterOn", "HeaterOff"])
            .transition("even", "HeaterOn", "odd")
            .transition("even", "HeaterOff", "even")
            .transition("odd", "HeaterOn", "even")
            .transition("odd", "HeaterOff", "odd")
            .output("even", "HeaterOn")
            .output("odd", "HeaterOff")
            .build()
            .unwrap()
    }

    #[test]
    fn product_cardinalities() {
        let t = thermostat();
        let s = stack(&t, &supervisor(), &Wiring::by_name(&t, &supervisor(), false).unwrap()).unwrap();
        assert_eq!((s.num_states(), s.num_inputs()), (4, 2));
    }

    #[test]
    fn drop_forces_heater_off() {
        let t = thermostat();
        let sup = supervisor();
        let w = Wiring::from_labels(
            &t,
            &sup,
            &[("HeaterOn", "HeaterOn"), ("HeaterOff", "HeaterOff")],
            Some(&[("HeaterOn", "HeaterOff"), ("HeaterOff", "HeaterOff")]),
        )
        .unwrap();
        let s = stack(&t, &sup, &w).unwrap();
        let off = s.outputs().lookup("HeaterOff").unwrap();
        let start = s.states().lookup("[OFF|even]").unwrap();
        let cold = s.inputs().lookup("Cold").unwrap();
        let hot = s.inputs().lookup("Hot").unwrap();
        assert_eq!(s.run_word(start, &[cold, hot, cold]), vec![off; 3]);
        assert!((0..s.num_states()).all(|x| s.out(x) == off));
    }

    #[test]
    fn trivial_upper_is_neutral() {
        let t = thermostat();
        let unit = Observer::builder(["u"], ["HeaterOn", "HeaterOff"], ["none"])
            .transition("u", "HeaterOn", "u")
            .transition("u", "HeaterOff", "u")
            .output("u", "none")
            .build()
            .unwrap();
        let s = stack(&t, &unit, &Wiring::by_name(&t, &unit, false).unwrap()).unwrap();
        let m = ObserverMorphism::new(&t, &s, vec![0, 1], vec![0, 1], vec![0, 1]).unwrap();
        assert!(check_homomorphism(&t, &s, &m).unwrap().holds());
        for len in 0..=6u32 {
            for code in 0..(1usize << len) {
                let word: Vec<usize> = (0..len).map(|i| (code >> i) & 1).collect();
                for x in 0..2 {
                    assert_eq!(t.run_word(x, &word), s.run_word(x, &word));
                }
            }
        }
    }

    #[test]
    fn wiring_errors() {
        let t = thermostat();
        let sup = supervisor();
        assert!(matches!(
            Wiring::from_labels(&t, &sup, &[("HeaterOn", "HeaterOn")], None),
            Err(Error::Wiring(_))
        ));
        let bad = Wiring { lift: vec![0, 5], drop: None };
        assert!(matches!(stack(&t, &sup, &bad), Err(Error::Wiring(_))));
        let bad = Wiring { lift: vec![0, 1], drop: Some(vec![0]) };
        assert!(matches!(stack(&t, &sup, &bad), Err(Error::Wiring(_))));
    }
}

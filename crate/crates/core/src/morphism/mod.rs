//! Structure-preserving maps between observers, isomorphism search and
//! behavioral minimization.

mod iso;
mod minimize;
pub mod union_find;

pub use iso::{
    canonical_invariants, equivalence_partition, equivalent, find_isomorphism, Invariants,
};
pub use minimize::{minimize, BehavioralPartition, Minimized};

use crate::error::{Error, Result};
use crate::observer::Observer;

/// A triple of maps `(phi_X, phi_Y, phi_Z)` from one observer's sets to
/// another's, stored as index vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObserverMorphism {
    phi_x: Vec<usize>,
    phi_y: Vec<usize>,
    phi_z: Vec<usize>,
    bijective: bool,
}

fn is_bijection(map: &[usize], target_len: usize) -> bool {
    if map.len() != target_len {
        return false;
    }
    let mut hit = vec![false; target_len];
    map.iter().all(|&t| !std::mem::replace(&mut hit[t], true))
}

fn check_map(name: &str, map: &[usize], src_len: usize, dst_len: usize) -> Result<()> {
    if map.len() != src_len {
        return Err(Error::MorphismShape(format!(
            "{name} has {} entries, source set has {src_len}",
            map.len()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&t| t >= dst_len) {
        return Err(Error::MorphismShape(format!(
            "{name} maps to index {bad}, target set has {dst_len}"
        )));
    }
    Ok(())
}

impl ObserverMorphism {
    pub fn new(
        src: &Observer,
        dst: &Observer,
        phi_x: Vec<usize>,
        phi_y: Vec<usize>,
        phi_z: Vec<usize>,
    ) -> Result<Self> {
        check_map("phi_X", &phi_x, src.num_states(), dst.num_states())?;
        check_map("phi_Y", &phi_y, src.num_inputs(), dst.num_inputs())?;
        check_map("phi_Z", &phi_z, src.num_outputs(), dst.num_outputs())?;
        let bijective = is_bijection(&phi_x, dst.num_states())
            && is_bijection(&phi_y, dst.num_inputs())
            && is_bijection(&phi_z, dst.num_outputs());
        Ok(ObserverMorphism {
            phi_x,
            phi_y,
            phi_z,
            bijective,
        })
    }

    /// Builds the maps from `(source label, target label)` pairs. Every
    /// source label must appear exactly once.
    pub fn from_labels(
        src: &Observer,
        dst: &Observer,
        phi_x: &[(&str, &str)],
        phi_y: &[(&str, &str)],
        phi_z: &[(&str, &str)],
    ) -> Result<Self> {
        fn build(
            name: &str,
            pairs: &[(&str, &str)],
            from: &crate::alphabet::Alphabet,
            to: &crate::alphabet::Alphabet,
        ) -> Result<Vec<usize>> {
            let mut map = vec![None; from.len()];
            for (a, b) in pairs {
                let i = from.lookup(a)?;
                if map[i].replace(to.lookup(b)?).is_some() {
                    return Err(Error::MorphismShape(format!("{name} maps `{a}` twice")));
                }
            }
            map.into_iter()
                .enumerate()
                .map(|(i, t)| {
                    t.ok_or_else(|| {
                        Error::MorphismShape(format!("{name} is not total: `{}` unmapped", from.label(i)))
                    })
                })
                .collect()
        }
        let x = build("phi_X", phi_x, src.states(), dst.states())?;
        let y = build("phi_Y", phi_y, src.inputs(), dst.inputs())?;
        let z = build("phi_Z", phi_z, src.outputs(), dst.outputs())?;
        Self::new(src, dst, x, y, z)
    }

    pub fn identity(obs: &Observer) -> Self {
        ObserverMorphism {
            phi_x: (0..obs.num_states()).collect(),
            phi_y: (0..obs.num_inputs()).collect(),
            phi_z: (0..obs.num_outputs()).collect(),
            bijective: true,
        }
    }

    pub fn phi_x(&self) -> &[usize] {
        &self.phi_x
    }

    pub fn phi_y(&self) -> &[usize] {
        &self.phi_y
    }

    pub fn phi_z(&self) -> &[usize] {
        &self.phi_z
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    /// Componentwise inverse; `None` unless all three maps are bijections.
    pub fn inverse(&self) -> Option<Self> {
        if !self.bijective {
            return None;
        }
        fn inv(map: &[usize]) -> Vec<usize> {
            let mut out = vec![0; map.len()];
            for (i, &t) in map.iter().enumerate() {
                out[t] = i;
            }
            out
        }
        Some(ObserverMorphism {
            phi_x: inv(&self.phi_x),
            phi_y: inv(&self.phi_y),
            phi_z: inv(&self.phi_z),
            bijective: true,
        })
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        let comp = |a: &[usize], b: &[usize]| a.iter().map(|&i| b[i]).collect::<Vec<_>>();
        ObserverMorphism {
            phi_x: comp(&self.phi_x, &other.phi_x),
            phi_y: comp(&self.phi_y, &other.phi_y),
            phi_z: comp(&self.phi_z, &other.phi_z),
            bijective: self.bijective && other.bijective,
        }
    }

    /// The three maps rendered as `(source label, target label)` pairs.
    pub fn label_pairs<'a>(
        &self,
        src: &'a Observer,
        dst: &'a Observer,
    ) -> [Vec<(&'a str, &'a str)>; 3] {
        let pairs = |map: &[usize], a: &'a crate::alphabet::Alphabet, b: &'a crate::alphabet::Alphabet| {
            map.iter()
                .enumerate()
                .map(|(i, &t)| (a.label(i), b.label(t)))
                .collect::<Vec<_>>()
        };
        [
            pairs(&self.phi_x, src.states(), dst.states()),
            pairs(&self.phi_y, src.inputs(), dst.inputs()),
            pairs(&self.phi_z, src.outputs(), dst.outputs()),
        ]
    }
}

/// A failed commutation condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `phi_X(f1(x, y)) != f2(phi_X(x), phi_Y(y))`
    Transition { state: usize, input: usize },
    /// `phi_Z(g1(x)) != g2(phi_X(x))`
    Output { state: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismVerdict {
    pub violations: Vec<Violation>,
}

impl HomomorphismVerdict {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks both commutation conditions for every state and input, collecting
/// every witness of failure.
pub fn check_homomorphism(
    src: &Observer,
    dst: &Observer,
    m: &ObserverMorphism,
) -> Result<HomomorphismVerdict> {
    check_map("phi_X", &m.phi_x, src.num_states(), dst.num_states())?;
    check_map("phi_Y", &m.phi_y, src.num_inputs(), dst.num_inputs())?;
    check_map("phi_Z", &m.phi_z, src.num_outputs(), dst.num_outputs())?;
    let mut violations = Vec::new();
    for x in 0..src.num_states() {
        for y in 0..src.num_inputs() {
            if m.phi_x[src.next(x, y)] != dst.next(m.phi_x[x], m.phi_y[y]) {
                violations.push(Violation::Transition { state: x, input: y });
            }
        }
        if m.phi_z[src.out(x)] != dst.out(m.phi_x[x]) {
            violations.push(Violation::Output { state: x });
        }
    }
    Ok(HomomorphismVerdict { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn identity_is_homomorphism() {
        let t = thermostat();
        let v = check_homomorphism(&t, &t, &ObserverMorphism::identity(&t)).unwrap();
        assert!(v.holds());
    }

    #[test]
    fn quotient_of_redundant_observer() {
        let r = redundant_observer();
        let q = Observer::builder(["a"], ["y0"], ["z0"])
            .transition("a", "y0", "a")
            .output("a", "z0")
            .build()
            .unwrap();
        let m = ObserverMorphism::from_labels(
            &r,
            &q,
            &[("a", "a"), ("b", "a")],
            &[("y0", "y0")],
            &[("z0", "z0")],
        )
        .unwrap();
        assert!(!m.is_bijective());
        assert!(check_homomorphism(&r, &q, &m).unwrap().holds());
    }

    #[test]
    fn swapped_states_fail_with_witness() {
        let t = thermostat();
        let m = ObserverMorphism::from_labels(
            &t,
            &t,
            &[("ON", "OFF"), ("OFF", "ON")],
            &[("Cold", "Cold"), ("Hot", "Hot")],
            &[("HeaterOn", "HeaterOn"), ("HeaterOff", "HeaterOff")],
        )
        .unwrap();
        let v = check_homomorphism(&t, &t, &m).unwrap();
        assert!(!v.holds());
        let off = t.states().lookup("OFF").unwrap();
        let cold = t.inputs().lookup("Cold").unwrap();
        assert!(v.violations.contains(&Violation::Transition { state: off, input: cold }));
    }

    #[test]
    fn shape_errors() {
        let t = thermostat();
        let r = redundant_observer();
        assert!(matches!(
            ObserverMorphism::new(&t, &r, vec![0], vec![0, 0], vec![0, 0]),
            Err(Error::MorphismShape(_))
        ));
        assert!(matches!(
            ObserverMorphism::new(&t, &r, vec![0, 2], vec![0, 0], vec![0, 0]),
            Err(Error::MorphismShape(_))
        ));
        assert!(matches!(
            ObserverMorphism::from_labels(&t, &t, &[("ON", "ON")], &[], &[]),
            Err(Error::MorphismShape(_))
        ));
    }

    #[test]
    fn inverse_requires_bijection() {
        let t = thermostat();
        let id = ObserverMorphism::identity(&t);
        assert_eq!(id.inverse().unwrap(), id);
        let r = redundant_observer();
        let collapse = ObserverMorphism::new(&r, &r, vec![0, 0], vec![0], vec![0]).unwrap();
        assert!(collapse.inverse().is_none());
    }
}

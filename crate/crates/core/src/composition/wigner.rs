//! A two-observer relational-fact script: Alice measures a spin inside her
//! lab, Wigner later reads Alice's record. Facts enter the ledger only when
//! an input crosses the corresponding observer's boundary.

use super::ledger::FactLedger;
use crate::coupled::{CoupledSystem, Joint};
use crate::environment::Environment;
use crate::error::{Error, Result};
use crate::observer::Observer;

pub const ALICE: &str = "alice";
pub const WIGNER: &str = "wigner";

/// Alice keeps the first spin reading she sees and reports it afterwards.
pub fn alice() -> Observer {
    Observer::builder(["Ready", "SawUp", "SawDown"], ["Up", "Down"], ["Silent", "Up", "Down"])
        .transition("Ready", "Up", "SawUp")
        .transition("Ready", "Down", "SawDown")
        .transition("SawUp", "Up", "SawUp")
        .transition("SawUp", "Down", "SawUp")
        .transition("SawDown", "Up", "SawDown")
        .transition("SawDown", "Down", "SawDown")
        .output("Ready", "Silent")
        .output("SawUp", "Up")
        .output("SawDown", "Down")
        .boundary("Alice and her measuring apparatus inside; the spin outside")
        .build()
        .expect("alice fixture is well formed")
}

/// Wigner reads Alice's report and keeps the first definite one.
pub fn wigner() -> Observer {
    Observer::builder(
        ["Ignorant", "KnowsUp", "KnowsDown"],
        ["Silent", "Up", "Down"],
        ["Unaware", "Up", "Down"],
    )
    .transition("Ignorant", "Silent", "Ignorant")
    .transition("Ignorant", "Up", "KnowsUp")
    .transition("Ignorant", "Down", "KnowsDown")
    .transition("KnowsUp", "Silent", "KnowsUp")
    .transition("KnowsUp", "Up", "KnowsUp")
    .transition("KnowsUp", "Down", "KnowsUp")
    .transition("KnowsDown", "Silent", "KnowsDown")
    .transition("KnowsDown", "Up", "KnowsDown")
    .transition("KnowsDown", "Down", "KnowsDown")
    .output("Ignorant", "Unaware")
    .output("KnowsUp", "Up")
    .output("KnowsDown", "Down")
    .boundary("Wigner inside; Alice's lab outside")
    .build()
    .expect("wigner fixture is well formed")
}

/// A spin that stays as prepared whatever Alice does.
pub fn spin_environment() -> Environment {
    Environment::builder(["SpinUp", "SpinDown"], ["Silent", "Up", "Down"], ["Up", "Down"])
        .constant_transition("SpinUp", "SpinUp")
        .constant_transition("SpinDown", "SpinDown")
        .observation("SpinUp", "Up")
        .observation("SpinDown", "Down")
        .build()
        .expect("spin environment fixture is well formed")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WignerScript {
    pub spin: Spin,
    /// Step at which Alice's apparatus interacts with the spin.
    pub measure_step: u64,
    /// Step at which Wigner reads Alice's record.
    pub read_step: u64,
    pub horizon: u64,
}

impl Default for WignerScript {
    fn default() -> Self {
        WignerScript {
            spin: Spin::Up,
            measure_step: 1,
            read_step: 5,
            horizon: 6,
        }
    }
}

#[derive(Debug, Clone)]
pub struct WignerRun {
    pub ledger: FactLedger,
    pub alice_state: String,
    pub wigner_state: String,
}

impl WignerScript {
    pub fn run(&self) -> Result<WignerRun> {
        if !(1..=self.horizon).contains(&self.measure_step) || !(1..=self.horizon).contains(&self.read_step) {
            return Err(Error::InvalidInput("script steps must lie within the horizon".into()));
        }
        let lab = CoupledSystem::new(alice(), spin_environment())?;
        let wigner = wigner();
        let spin = match self.spin {
            Spin::Up => "SpinUp",
            Spin::Down => "SpinDown",
        };
        let mut alice_joint = lab.joint("Ready", spin)?;
        let mut wigner_state = wigner.states().lookup("Ignorant")?;
        let mut ledger = FactLedger::new();

        for t in 1..=self.horizon {
            if t == self.measure_step {
                let (next, rec) = lab.step_coupled(alice_joint, t as usize);
                alice_joint = next;
                ledger.record_fact(
                    ALICE,
                    t,
                    lab.observer().inputs().label(rec.input),
                    lab.observer().states().label(rec.state),
                )?;
            }
            if t == self.read_step {
                let report = lab.observer().outputs().label(lab.observer().out(alice_joint.state));
                let y = wigner.inputs().lookup(report)?;
                wigner_state = wigner.next(wigner_state, y);
                ledger.record_fact(WIGNER, t, report, wigner.states().label(wigner_state))?;
            }
        }
        let Joint { state, .. } = alice_joint;
        Ok(WignerRun {
            ledger,
            alice_state: lab.observer().states().label(state).to_string(),
            wigner_state: wigner.states().label(wigner_state).to_string(),
        })
    }
}

//! Small named machines used throughout the docs, tests and CLI fixtures.

use crate::environment::Environment;
use crate::observer::Observer;

/// Two-state thermostat: senses Cold/Hot, switches ON/OFF, drives a heater.
pub fn thermostat() -> Observer {
    Observer::builder(["ON", "OFF"], ["Cold", "Hot"], ["HeaterOn", "HeaterOff"])
        .transition("OFF", "Cold", "ON")
        .transition("OFF", "Hot", "OFF")
        .transition("ON", "Cold", "ON")
        .transition("ON", "Hot", "OFF")
        .output("ON", "HeaterOn")
        .output("OFF", "HeaterOff")
        .boundary("controller inside; ambient air outside")
        .build()
        .expect("thermostat fixture is well formed")
}

/// The thermostat under fresh names for every state, input and output.
pub fn thermostat_renamed() -> Observer {
    Observer::builder(["A", "B"], ["c", "h"], ["on", "off"])
        .transition("B", "c", "A")
        .transition("B", "h", "B")
        .transition("A", "c", "A")
        .transition("A", "h", "B")
        .output("A", "on")
        .output("B", "off")
        .boundary("controller inside; ambient air outside")
        .build()
        .expect("renamed thermostat fixture is well formed")
}

/// Thermostat with the heater always reported off.
pub fn constant_output_thermostat() -> Observer {
    Observer::builder(["ON", "OFF"], ["Cold", "Hot"], ["HeaterOn", "HeaterOff"])
        .transition("OFF", "Cold", "ON")
        .transition("OFF", "Hot", "OFF")
        .transition("ON", "Cold", "ON")
        .transition("ON", "Hot", "OFF")
        .output("ON", "HeaterOff")
        .output("OFF", "HeaterOff")
        .build()
        .expect("constant-output fixture is well formed")
}

/// Two behaviorally identical states: same output, both move to `a`.
pub fn redundant_observer() -> Observer {
    Observer::builder(["a", "b"], ["y0"], ["z0"])
        .transition("a", "y0", "a")
        .transition("b", "y0", "a")
        .output("a", "z0")
        .output("b", "z0")
        .build()
        .expect("redundant fixture is well formed")
}

/// Room that turns Hot when heated and Cold otherwise; observed exactly.
pub fn flip_environment() -> Environment {
    Environment::builder(["Cold", "Hot"], ["HeaterOn", "HeaterOff"], ["Cold", "Hot"])
        .transition("Cold", "HeaterOn", "Hot")
        .transition("Cold", "HeaterOff", "Cold")
        .transition("Hot", "HeaterOn", "Hot")
        .transition("Hot", "HeaterOff", "Cold")
        .observation("Cold", "Cold")
        .observation("Hot", "Hot")
        .build()
        .expect("flip environment fixture is well formed")
}

/// Single-state room that always reads `reading` (`Cold` or `Hot`).
pub fn constant_environment(reading: &str) -> Environment {
    Environment::builder([reading], ["HeaterOn", "HeaterOff"], ["Cold", "Hot"])
        .constant_transition(reading, reading)
        .observation(reading, reading)
        .build()
        .expect("constant environment fixture is well formed")
}

use crate::morphism::minimize;
use crate::observer::Observer;

/// Observational complexity in nats.
///
/// `raw_log = ln(|X|·|Y|·|Z|)`, `complexity = ln(|X̂|·|Ŷ|·|Ẑ|)` over the
/// minimized observer, and `lambda = raw_log - complexity` is the redundancy
/// removed by minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexityReport {
    pub sizes: (usize, usize, usize),
    pub reduced_sizes: (usize, usize, usize),
    pub raw_log: f64,
    pub lambda: f64,
    pub complexity: f64,
}

impl ComplexityReport {
    pub fn from_sizes(sizes: (usize, usize, usize), reduced_sizes: (usize, usize, usize)) -> Self {
        let product = |(x, y, z): (usize, usize, usize)| (x as f64) * (y as f64) * (z as f64);
        let raw_log = product(sizes).ln();
        let complexity = product(reduced_sizes).ln();
        ComplexityReport {
            sizes,
            reduced_sizes,
            raw_log,
            lambda: raw_log - complexity,
            complexity,
        }
    }

    /// Same report with every logarithm expressed in bits.
    pub fn in_bits(&self) -> Self {
        let k = std::f64::consts::LN_2;
        ComplexityReport {
            raw_log: self.raw_log / k,
            lambda: self.lambda / k,
            complexity: self.complexity / k,
            ..*self
        }
    }
}

pub fn complexity(obs: &Observer) -> ComplexityReport {
    let reduced = minimize(obs).reduced_sizes();
    ComplexityReport::from_sizes(
        (obs.num_states(), obs.num_inputs(), obs.num_outputs()),
        reduced,
    )
}

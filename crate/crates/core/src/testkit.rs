//! Random machine generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::alphabet::Alphabet;
use crate::environment::Environment;
use crate::error::SetKind;
use crate::observer::{Boundary, Observer};

fn numbered(kind: SetKind, prefix: &str, n: usize) -> Alphabet {
    Alphabet::numbered(kind, prefix, n).expect("n >= 1")
}

/// Uniformly random tables over `x0..`, `y0..`, `z0..`.
pub fn random_observer_sized<R: Rng + ?Sized>(rng: &mut R, nx: usize, ny: usize, nz: usize) -> Observer {
    let transition = (0..nx * ny).map(|_| rng.gen_range(0..nx)).collect();
    let output_map = (0..nx).map(|_| rng.gen_range(0..nz)).collect();
    Observer::from_tables(
        numbered(SetKind::State, "x", nx),
        numbered(SetKind::Input, "y", ny),
        numbered(SetKind::Output, "z", nz),
        transition,
        output_map,
        Boundary::default(),
    )
    .expect("generated tables are in range")
}

/// Sizes drawn uniformly from `1..=max` for each set.
pub fn random_observer<R: Rng + ?Sized>(rng: &mut R, max: usize) -> Observer {
    let nx = rng.gen_range(1..=max);
    let ny = rng.gen_range(1..=max);
    let nz = rng.gen_range(1..=max);
    random_observer_sized(rng, nx, ny, nz)
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// An isomorphic copy under random bijections and fresh labels. Returns the
/// copy and the three bijections `(px, py, pz)` taking original indices to
/// copy indices.
pub fn scrambled_copy<R: Rng + ?Sized>(
    rng: &mut R,
    obs: &Observer,
) -> (Observer, [Vec<usize>; 3]) {
    let (nx, ny, nz) = (obs.num_states(), obs.num_inputs(), obs.num_outputs());
    let px = random_permutation(rng, nx);
    let py = random_permutation(rng, ny);
    let pz = random_permutation(rng, nz);
    let mut transition = vec![0; nx * ny];
    let mut output_map = vec![0; nx];
    for x in 0..nx {
        for y in 0..ny {
            transition[px[x] * ny + py[y]] = px[obs.next(x, y)];
        }
        output_map[px[x]] = pz[obs.out(x)];
    }
    let copy = Observer::from_tables(
        numbered(SetKind::State, "s", nx),
        numbered(SetKind::Input, "i", ny),
        numbered(SetKind::Output, "o", nz),
        transition,
        output_map,
        obs.boundary().clone(),
    )
    .expect("permuted tables are in range");
    (copy, [px, py, pz])
}

/// A random environment whose actions are the observer's outputs and whose
/// observations are the observer's inputs.
pub fn random_environment_for<R: Rng + ?Sized>(rng: &mut R, obs: &Observer, ns: usize) -> Environment {
    let na = obs.num_outputs();
    let no = obs.num_inputs();
    Environment::from_tables(
        numbered(SetKind::EnvState, "s", ns),
        obs.outputs().retagged(SetKind::Action),
        obs.inputs().retagged(SetKind::Observation),
        (0..ns * na).map(|_| rng.gen_range(0..ns)).collect(),
        (0..ns).map(|_| rng.gen_range(0..no)).collect(),
    )
    .expect("generated tables are in range")
}

/// A random row-stochastic matrix in which each entry is zero with
/// probability `sparsity`. Every row keeps at least one positive entry.
pub fn random_chain<R: Rng + ?Sized>(rng: &mut R, n: usize, sparsity: f64) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| {
            let mut row: Vec<f64> = (0..n)
                .map(|_| if rng.gen_bool(sparsity) { 0.0 } else { rng.gen_range(0.05..1.0) })
                .collect();
            if row.iter().all(|&p| p == 0.0) {
                row[rng.gen_range(0..n)] = 1.0;
            }
            let total: f64 = row.iter().sum();
            row.iter_mut().for_each(|p| *p /= total);
            row
        })
        .collect()
}

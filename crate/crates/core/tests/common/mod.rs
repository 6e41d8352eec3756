//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use observer_core::ca::CaRule;
use observer_core::Observer;
use rand::Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Lexicographically least bijection triple satisfying both commutation
/// conditions, found by trying every triple in order.
pub fn brute_force_isomorphism(a: &Observer, b: &Observer) -> Option<[Vec<usize>; 3]> {
    let (nx, ny, nz) = (a.num_states(), a.num_inputs(), a.num_outputs());
    if (nx, ny, nz) != (b.num_states(), b.num_inputs(), b.num_outputs()) {
        return None;
    }
    let pz_all = permutations(nz);
    for px in permutations(nx) {
        for py in permutations(ny) {
            let commutes = (0..nx)
                .all(|x| (0..ny).all(|y| px[a.next(x, y)] == b.next(px[x], py[y])));
            if !commutes {
                continue;
            }
            for pz in &pz_all {
                if (0..nx).all(|x| pz[a.out(x)] == b.out(px[x])) {
                    return Some([px, py, pz.clone()]);
                }
            }
        }
    }
    None
}

/// Cycle detection by enumerating simple paths from every node.
pub fn brute_force_has_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    fn extend(path: &mut Vec<usize>, edges: &[(usize, usize)]) -> bool {
        let last = *path.last().unwrap();
        for &(u, v) in edges {
            if u != last {
                continue;
            }
            if v == path[0] {
                return true;
            }
            if !path.contains(&v) {
                path.push(v);
                if extend(path, edges) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..n).any(|s| extend(&mut vec![s], edges))
}

/// Mean and standard error of the steps needed to enter `goal` from
/// `start`, over `trials` simulated walks.
pub fn monte_carlo_hitting<R: Rng>(
    rng: &mut R,
    matrix: &[Vec<f64>],
    start: usize,
    goal: &[usize],
    trials: usize,
) -> (f64, f64) {
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..trials {
        let mut s = start;
        let mut t = 0u64;
        while !goal.contains(&s) {
            let u: f64 = rng.gen();
            let mut acc = 0.0;
            let mut next = matrix[s].len() - 1;
            for (j, &p) in matrix[s].iter().enumerate() {
                acc += p;
                if u < acc {
                    next = j;
                    break;
                }
            }
            // Guard against landing on a zero-probability tail entry.
            while matrix[s][next] == 0.0 {
                next -= 1;
            }
            s = next;
            t += 1;
        }
        sum += t as f64;
        sum_sq += (t * t) as f64;
    }
    let n = trials as f64;
    let mean = sum / n;
    let var = (sum_sq / n - mean * mean) * n / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Next cell from the rule number's binary expansion written as a string
/// (`"01101110"` for 110), read with neighborhood `111` first.
pub fn oracle_cell(rule_bits: &str, l: bool, c: bool, r: bool) -> bool {
    let pattern = format!("{}{}{}", u8::from(l), u8::from(c), u8::from(r));
    let order = ["111", "110", "101", "100", "011", "010", "001", "000"];
    let pos = order.iter().position(|p| *p == pattern).unwrap();
    rule_bits.as_bytes()[pos] == b'1'
}

pub fn oracle_evolve(rule_bits: &str, init: &[bool], steps: usize) -> Vec<Vec<bool>> {
    let w = init.len();
    let mut rows = vec![init.to_vec()];
    for _ in 0..steps {
        let prev = rows.last().unwrap();
        let next = (0..w)
            .map(|i| oracle_cell(rule_bits, prev[(i + w - 1) % w], prev[i], prev[(i + 1) % w]))
            .collect();
        rows.push(next);
    }
    rows
}

pub fn rule_bits(rule: &CaRule) -> String {
    format!("{:08b}", rule.number())
}

use crate::error::{Error, Result};

const ROW_SUM_TOLERANCE: f64 = 1e-9;
const PIVOT_EPSILON: f64 = 1e-12;

/// Expected number of steps for a Markov chain started at `start` to enter
/// `goal`.
///
/// Returns `f64::INFINITY` when the goal is not hit with probability one,
/// i.e. when the chain can reach (while avoiding the goal) a state from which
/// the goal is unreachable. On the remaining states the first-passage system
/// `t = 1 + Q t` is solved by Gaussian elimination with partial pivoting.
pub fn expected_hitting_time(matrix: &[Vec<f64>], start: usize, goal: &[usize]) -> Result<f64> {
    let n = matrix.len();
    validate(matrix)?;
    if goal.is_empty() {
        return Err(Error::InvalidInput("goal set must not be empty".into()));
    }
    if let Some(&g) = goal.iter().find(|&&g| g >= n) {
        return Err(Error::InvalidInput(format!("goal state {g} out of range")));
    }
    if start >= n {
        return Err(Error::InvalidInput(format!("start state {start} out of range")));
    }
    let mut is_goal = vec![false; n];
    for &g in goal {
        is_goal[g] = true;
    }
    if is_goal[start] {
        return Ok(0.0);
    }

    // States that can reach the goal at all (backwards search).
    let mut reaches = is_goal.clone();
    let mut stack: Vec<usize> = goal.to_vec();
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if !reaches[u] && !is_goal[u] && matrix[u][v] > 0.0 {
                reaches[u] = true;
                stack.push(u);
            }
        }
    }
    // Non-goal states that can slip into a dead region never hit surely.
    let mut infinite: Vec<bool> = (0..n).map(|u| !reaches[u]).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&u| infinite[u]).collect();
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if !infinite[u] && !is_goal[u] && matrix[u][v] > 0.0 {
                infinite[u] = true;
                stack.push(u);
            }
        }
    }
    if infinite[start] {
        return Ok(f64::INFINITY);
    }

    let transient: Vec<usize> = (0..n).filter(|&u| !is_goal[u] && !infinite[u]).collect();
    let mut slot = vec![usize::MAX; n];
    for (i, &u) in transient.iter().enumerate() {
        slot[u] = i;
    }
    let m = transient.len();
    // Augmented system (I - Q) t = 1.
    let mut a = vec![vec![0.0; m + 1]; m];
    for (i, &u) in transient.iter().enumerate() {
        a[i][i] = 1.0;
        for (v, &p) in matrix[u].iter().enumerate() {
            if slot[v] != usize::MAX {
                a[i][slot[v]] -= p;
            }
        }
        a[i][m] = 1.0;
    }
    let t = solve(a)?;
    Ok(t[slot[start]])
}

fn validate(matrix: &[Vec<f64>]) -> Result<()> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::InvalidInput("transition matrix is empty".into()));
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidInput(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if row.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidInput(format!("row {i} has a negative or non-finite entry")));
        }
        let sum: f64 = row.iter().sum();
        if (sum - 1.0).abs() > ROW_SUM_TOLERANCE {
            return Err(Error::InvalidInput(format!("row {i} sums to {sum}, not 1")));
        }
    }
    Ok(())
}

/// Gaussian elimination with partial pivoting on an augmented `m × (m+1)`
/// matrix.
fn solve(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>> {
    let m = a.len();
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("non-empty range");
        if a[pivot][col].abs() < PIVOT_EPSILON {
            return Err(Error::Numerical(format!("singular first-passage system at column {col}")));
        }
        a.swap(col, pivot);
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            let factor = row[col] / pivot_row[col];
            if factor != 0.0 {
                for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= factor * p;
                }
            }
        }
    }
    let mut x = vec![0.0; m];
    for row in (0..m).rev() {
        let tail: f64 = (row + 1..m).map(|k| a[row][k] * x[k]).sum();
        x[row] = (a[row][m] - tail) / a[row][row];
    }
    Ok(x)
}

use super::rule::CaRule;
use crate::error::{Error, Result};

/// One synchronous update of a cyclic row.
pub fn ca_step(config: &[bool], rule: &CaRule) -> Result<Vec<bool>> {
    let w = config.len();
    if w < 3 {
        return Err(Error::InvalidInput(format!("lattice width {w} is below 3")));
    }
    Ok((0..w)
        .map(|i| rule.apply(config[(i + w - 1) % w], config[i], config[(i + 1) % w]))
        .collect())
}

/// `steps + 1` rows starting with `config`.
pub fn evolve(config: &[bool], rule: &CaRule, steps: usize) -> Result<Vec<Vec<bool>>> {
    if config.len() < 3 {
        return Err(Error::InvalidInput(format!("lattice width {} is below 3", config.len())));
    }
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(config.to_vec());
    for _ in 0..steps {
        let next = ca_step(rows.last().expect("non-empty"), rule)?;
        rows.push(next);
    }
    Ok(rows)
}

/// A single live cell at the center of an otherwise empty row.
pub fn single_seed(width: usize) -> Vec<bool> {
    let mut row = vec![false; width];
    if width > 0 {
        row[width / 2] = true;
    }
    row
}

/// Parses `.`/`#` or `0`/`1` cells; whitespace is ignored.
pub fn parse_row(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '.' | '0' => Ok(false),
            '#' | '1' => Ok(true),
            other => Err(Error::InvalidInput(format!("unexpected cell character `{other}`"))),
        })
        .collect()
}

use crate::error::{Error, Result};

/// An elementary cellular-automaton rule. Neighborhood `(l, c, r)` maps to
/// bit `4l + 2c + r` of the rule number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaRule {
    number: u8,
    table: [bool; 8],
}

impl CaRule {
    pub fn number(&self) -> u8 {
        self.number
    }

    /// Entries indexed by `4l + 2c + r`.
    pub fn table(&self) -> [bool; 8] {
        self.table
    }

    #[inline]
    pub fn apply(&self, left: bool, center: bool, right: bool) -> bool {
        self.table[(usize::from(left) << 2) | (usize::from(center) << 1) | usize::from(right)]
    }

    /// Rebuilds the rule number from the table.
    pub fn number_from_table(table: &[bool; 8]) -> u8 {
        table
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &bit)| acc | (u8::from(bit) << i))
    }
}

pub fn rule_table(n: u32) -> Result<CaRule> {
    let number = u8::try_from(n)
        .map_err(|_| Error::InvalidInput(format!("rule number {n} is outside 0..=255")))?;
    let mut table = [false; 8];
    for (i, slot) in table.iter_mut().enumerate() {
        *slot = (number >> i) & 1 == 1;
    }
    Ok(CaRule { number, table })
}

//! Effort limits shared by the colon, Gröbner and powering engines.

use std::env;

use serde::Serialize;

pub const BUDGET_ENV: &str = "FROBSING_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest admissible `q^d` for Artinian colon computations; also caps
    /// the number of terms of any intermediate truncated power.
    pub dimension: u64,
    /// Largest number of critical pairs one Buchberger run may process.
    pub pairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            dimension: 2_000_000,
            pairs: 200_000,
        }
    }
}

impl Budget {
    /// Reads `FROBSING_BUDGET`, either a single integer applied to both
    /// limits or `dimension=N,pairs=M` (either key optional).
    pub fn from_env() -> Result<Self, String> {
        match env::var(BUDGET_ENV) {
            Ok(v) => Self::parse(&v),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let text = text.trim();
        let mut budget = Self::default();
        if let Ok(n) = text.parse::<u64>() {
            budget.dimension = n;
            budget.pairs = n as usize;
            return Ok(budget);
        }
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("malformed budget entry '{part}'"))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| format!("malformed budget value in '{part}'"))?;
            match key.trim() {
                "dimension" | "dim" => budget.dimension = value,
                "pairs" => budget.pairs = value as usize,
                other => return Err(format!("unknown budget key '{other}'")),
            }
        }
        Ok(budget)
    }

    pub fn term_limit(&self) -> usize {
        self.dimension.min(usize::MAX as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(
            Budget::parse("5000").unwrap(),
            Budget {
                dimension: 5000,
                pairs: 5000
            }
        );
        let b = Budget::parse("pairs=10").unwrap();
        assert_eq!(b.pairs, 10);
        assert_eq!(b.dimension, Budget::default().dimension);
        assert!(Budget::parse("speed=3").is_err());
        assert!(Budget::parse("pairs").is_err());
    }
}

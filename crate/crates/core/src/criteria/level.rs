use serde::Serialize;

use crate::algebra::{FrobeniusPower, Rational};

use super::{CriteriaError, Mode};

/// One Frobenius level `q = p^e` with its boundary exponent `r_e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Level {
    pub e: u32,
    pub q: u64,
    pub r: u64,
}

impl Level {
    pub fn power(&self, p: u32) -> FrobeniusPower {
        FrobeniusPower::new(p, self.e).expect("level was constructed from a valid power")
    }
}

pub fn r_level(t: &Rational, p: u32, e: u32, mode: Mode) -> Result<Level, CriteriaError> {
    if t.is_negative() {
        return Err(CriteriaError::NegativeCoefficient(t.clone()));
    }
    let q = FrobeniusPower::new(p, e)?.q();
    let scale = match mode {
        Mode::Weak => q - 1,
        Mode::Strong => q,
    };
    let r = t
        .floor_times(scale)
        .ok_or(CriteriaError::Algebra(crate::algebra::AlgebraError::ExponentOverflow))?;
    Ok(Level { e, q, r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let t = Rational::new(5, 6);
        assert_eq!(r_level(&t, 7, 1, Mode::Weak).unwrap().r, 5);
        assert_eq!(r_level(&t, 5, 2, Mode::Weak).unwrap().r, 20);
        assert_eq!(r_level(&t, 5, 1, Mode::Strong).unwrap().r, 4);
        for mode in [Mode::Weak, Mode::Strong] {
            for e in 1..4 {
                assert_eq!(r_level(&Rational::zero(), 3, e, mode).unwrap().r, 0);
            }
        }
        assert!(matches!(
            r_level(&Rational::new(-1, 2), 3, 1, Mode::Weak),
            Err(CriteriaError::NegativeCoefficient(_))
        ));
    }
}

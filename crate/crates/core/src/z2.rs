//! Elements of ℤ₂ used as outcome indices and Bell labels.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// An element of ℤ₂ = {0, 1} with addition modulo 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bit(bool);

impl Bit {
    pub const ZERO: Bit = Bit(false);
    pub const ONE: Bit = Bit(true);
    pub const BOTH: [Bit; 2] = [Bit::ZERO, Bit::ONE];

    pub fn new(value: u8) -> Result<Self> {
        match value {
            0 => Ok(Bit::ZERO),
            1 => Ok(Bit::ONE),
            other => Err(Error::InvalidBit(other)),
        }
    }

    pub fn value(self) -> u8 {
        self.0 as u8
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn flip(self) -> Self {
        Bit(!self.0)
    }

    /// `(−1)^self`.
    pub fn sign(self) -> f64 {
        if self.0 {
            -1.0
        } else {
            1.0
        }
    }

    /// `cos(angle)` for 0 and `sin(angle)` for 1.
    pub fn trig(self, angle: f64) -> f64 {
        if self.0 {
            angle.sin()
        } else {
            angle.cos()
        }
    }

    /// Kronecker delta `δ_{self,other}` as a real.
    pub fn delta(self, other: Bit) -> f64 {
        if self == other {
            1.0
        } else {
            0.0
        }
    }
}

/// Addition modulo 2.
impl Add for Bit {
    type Output = Bit;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Bit) -> Bit {
        Bit(self.0 ^ rhs.0)
    }
}

impl From<bool> for Bit {
    fn from(b: bool) -> Self {
        Bit(b)
    }
}

impl TryFrom<u8> for Bit {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Bit::new(value)
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_two() {
        assert_eq!(Bit::ONE + Bit::ONE, Bit::ZERO);
        assert_eq!(Bit::ZERO + Bit::ONE, Bit::ONE);
        assert_eq!(Bit::ONE.flip(), Bit::ZERO);
        assert_eq!(Bit::ONE.sign(), -1.0);
        assert!(Bit::new(2).is_err());
    }

    #[test]
    fn trig_selects_cos_or_sin() {
        assert_eq!(Bit::ZERO.trig(0.3), 0.3f64.cos());
        assert_eq!(Bit::ONE.trig(0.3), 0.3f64.sin());
    }
}

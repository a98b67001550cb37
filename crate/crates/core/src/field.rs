use core::fmt;

use crate::error::{Error, Result};

/// Coefficient field for homology and Betti computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum FieldSpec {
    #[default]
    Gf2,
    /// `GF(p)` for an odd prime `p < 2^16`. Use [`FieldSpec::prime`] to build one.
    Gfp(u32),
    Rational,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// `GF(p)`; `p = 2` yields [`FieldSpec::Gf2`].
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(if p == 2 { FieldSpec::Gf2 } else { FieldSpec::Gfp(p) })
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Gf2 => 2,
            FieldSpec::Gfp(p) => p,
            FieldSpec::Rational => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => f.write_str("GF(2)"),
            FieldSpec::Gfp(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => f.write_str("QQ"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_only() {
        assert_eq!(FieldSpec::prime(2), Ok(FieldSpec::Gf2));
        assert_eq!(FieldSpec::prime(65521), Ok(FieldSpec::Gfp(65521)));
        assert_eq!(FieldSpec::prime(9), Err(Error::InvalidField(9)));
        assert_eq!(FieldSpec::prime(65537), Err(Error::InvalidField(65537)));
        assert_eq!(FieldSpec::prime(1), Err(Error::InvalidField(1)));
    }
}

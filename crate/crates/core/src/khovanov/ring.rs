use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::KhError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientRing {
    Q,
    Z,
    Fp(u64),
}

impl CoefficientRing {
    /// `F_p`, rejecting composite or trivial `p`.
    pub fn fp(p: u64) -> Result<Self, KhError> {
        if is_prime(p) {
            Ok(CoefficientRing::Fp(p))
        } else {
            Err(KhError::NotPrime(p))
        }
    }

    pub fn validate(self) -> Result<Self, KhError> {
        match self {
            CoefficientRing::Fp(p) => Self::fp(p),
            r => Ok(r),
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoefficientRing::Z)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
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

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Q => f.write_str("Q"),
            CoefficientRing::Z => f.write_str("Z"),
            CoefficientRing::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// Accepts `q`, `z`, `f2`, `fP` in either case; `F_3` is also accepted.
impl FromStr for CoefficientRing {
    type Err = KhError;
    fn from_str(s: &str) -> Result<Self, KhError> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "q" => Ok(CoefficientRing::Q),
            "z" => Ok(CoefficientRing::Z),
            _ => {
                let digits = lower
                    .strip_prefix('f')
                    .map(|r| r.trim_start_matches('_'))
                    .ok_or_else(|| KhError::BadRing(s.to_string()))?;
                let p: u64 = digits.parse().map_err(|_| KhError::BadRing(s.to_string()))?;
                Self::fp(p)
            }
        }
    }
}

impl Serialize for CoefficientRing {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CoefficientRing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

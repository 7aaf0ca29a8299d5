use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A validated pair of coprime integers `0 < a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct CoprimePair {
    a: u32,
    b: u32,
}

#[derive(Deserialize)]
struct RawPair {
    a: u32,
    b: u32,
}

impl TryFrom<RawPair> for CoprimePair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        Self::new(raw.a, raw.b)
    }
}

impl CoprimePair {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || a >= b {
            return Err(Error::BadOrder { a, b });
        }
        if a.gcd(&b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        Ok(Self { a, b })
    }

    pub const fn a(self) -> u32 {
        self.a
    }

    pub const fn b(self) -> u32 {
        self.b
    }

    /// The pair `(b - a, b)`.
    pub fn dual(self) -> Self {
        Self { a: self.b - self.a, b: self.b }
    }

    /// True when `b = k·a + 1` for some positive `k`.
    pub fn is_fuss(self) -> bool {
        self.b % self.a == 1 % self.a
    }

    /// Every coprime pair with `a < b` satisfying the predicate on `(a, b)`, ordered by `b` then `a`,
    /// for `b` up to `max_b`.
    pub fn all_up_to(max_b: u32, mut keep: impl FnMut(u32, u32) -> bool) -> Vec<Self> {
        let mut out = Vec::new();
        for b in 2..=max_b {
            for a in 1..b {
                if a.gcd(&b) == 1 && keep(a, b) {
                    out.push(Self { a, b });
                }
            }
        }
        out
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

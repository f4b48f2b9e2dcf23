//! Letters of the primed alphabet `1' < 1 < 2' < 2 < ... < n' < n`.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A letter `k` or `k'`.
///
/// Stored as a single code `2k - 1` (primed) or `2k` (unprimed), so the derived
/// ordering is exactly the primed total order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimedEntry(u8);

impl PrimedEntry {
    pub fn new(value: u8, primed: bool) -> Self {
        assert!((1..=127).contains(&value), "letter {value} out of range");
        PrimedEntry(2 * value - u8::from(primed))
    }

    pub fn unprimed(value: u8) -> Self {
        Self::new(value, false)
    }

    pub fn primed(value: u8) -> Self {
        Self::new(value, true)
    }

    /// The letter `k`, ignoring the prime.
    pub fn value(self) -> u8 {
        self.0.div_ceil(2)
    }

    pub fn is_primed(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn with_prime(self, primed: bool) -> Self {
        Self::new(self.value(), primed)
    }

    pub fn with_value(self, value: u8) -> Self {
        Self::new(value, self.is_primed())
    }

    /// Position in the primed order, starting at 1 for `1'`.
    pub fn code(self) -> u8 {
        self.0
    }

    pub fn from_code(code: u8) -> Self {
        assert!(code >= 1, "entry code must be positive");
        PrimedEntry(code)
    }
}

impl fmt::Display for PrimedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl fmt::Debug for PrimedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PrimedEntry {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u8 = digits
            .parse()
            .map_err(|_| ParseError::BadToken(s.to_string()))?;
        if value == 0 || value > 127 {
            return Err(ParseError::BadToken(s.to_string()));
        }
        Ok(PrimedEntry::new(value, primed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primed_order() {
        let letters: Vec<PrimedEntry> = ["1'", "1", "2'", "2", "3'", "3"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert!(letters.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(letters[2].value(), 2);
        assert!(letters[2].is_primed());
        assert_eq!(letters[3].to_string(), "2");
        assert_eq!(letters[4].to_string(), "3'");
    }

    #[test]
    fn rejects_bad_tokens() {
        for bad in ["", "0", "x", "2''", "'", "-1"] {
            assert!(bad.parse::<PrimedEntry>().is_err(), "{bad}");
        }
    }
}

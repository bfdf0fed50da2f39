//! Argument value types shared by the subcommands.

use std::fmt;
use std::str::FromStr;

use anyhow::Result;

/// Bad input that clap could not catch; exits with code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// A parameter given as an absolute value (`4`) or relative to the order
/// (`n`, `n-1`, `n-3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Offset {
    Abs(usize),
    FromN(usize),
}

impl Offset {
    pub fn resolve(self, n: usize) -> Result<usize> {
        match self {
            Offset::Abs(v) => Ok(v),
            Offset::FromN(o) => n.checked_sub(o).ok_or_else(|| usage(format!("n-{o} is negative for n={n}"))),
        }
    }
}

impl FromStr for Offset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || format!("expected an integer, `n` or `n-<int>`, got {s:?}");
        if s == "n" {
            return Ok(Offset::FromN(0));
        }
        if let Some(rest) = s.strip_prefix("n-") {
            return rest.trim().parse().map(Offset::FromN).map_err(|_| bad());
        }
        s.parse().map(Offset::Abs).map_err(|_| bad())
    }
}

/// An inclusive range of orders: `6`, `5..7` or `5..=7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderRange {
    pub lo: usize,
    pub hi: usize,
}

impl OrderRange {
    pub fn orders(self) -> Vec<usize> {
        (self.lo..=self.hi).collect()
    }
}

impl FromStr for OrderRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected `N`, `A..B` or `A..=B`, got {s:?}");
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(OrderRange { lo, hi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets() {
        assert_eq!("n-1".parse::<Offset>().unwrap().resolve(6).unwrap(), 5);
        assert_eq!("n".parse::<Offset>().unwrap().resolve(6).unwrap(), 6);
        assert_eq!("4".parse::<Offset>().unwrap().resolve(6).unwrap(), 4);
        assert!("n-7".parse::<Offset>().unwrap().resolve(6).is_err());
        assert!("m-1".parse::<Offset>().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!("5..7".parse::<OrderRange>().unwrap().orders(), [5, 6, 7]);
        assert_eq!("5..=7".parse::<OrderRange>().unwrap().orders(), [5, 6, 7]);
        assert_eq!("6".parse::<OrderRange>().unwrap().orders(), [6]);
        assert!("7..5".parse::<OrderRange>().is_err());
    }
}

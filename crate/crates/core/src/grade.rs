//! Exact membership grades in `[0, 1]`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::FuzzyError;

/// A membership grade: an exact rational in `[0, 1]`, always reduced.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<u64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    pub fn new(numer: u64, denom: u64) -> Result<Self, FuzzyError> {
        if denom == 0 || numer > denom {
            return Err(FuzzyError::OutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Grade(Ratio::new(numer, denom)))
    }

    pub fn numer(self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// `self^k`, with `0^0 = 1`.
    pub fn pow(self, k: u32) -> Result<Self, FuzzyError> {
        let numer = self.numer().checked_pow(k).ok_or(FuzzyError::Overflow)?;
        let denom = self.denom().checked_pow(k).ok_or(FuzzyError::Overflow)?;
        Ok(Grade(Ratio::new(numer, denom)))
    }
}

impl Default for Grade {
    fn default() -> Self {
        Grade::ZERO
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Grade {
    type Err = FuzzyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FuzzyError::OutOfRange(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p = p.trim().parse().map_err(|_| bad())?;
                let q = q.trim().parse().map_err(|_| bad())?;
                Grade::new(p, q)
            }
            None => Grade::new(s.parse().map_err(|_| bad())?, 1),
        }
    }
}

impl Serialize for Grade {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite chain of grades containing 0 and 1, used to quantify over
/// "every fuzzy subset" at a fixed resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeGrid {
    levels: Vec<Grade>,
}

impl GradeGrid {
    /// Evenly spaced chain `{0, 1/(k-1), ..., 1}` with `k = levels`.
    pub fn uniform(levels: usize) -> Result<Self, FuzzyError> {
        if levels < 2 {
            return Err(FuzzyError::OutOfRange(format!("{levels} grid levels")));
        }
        let denom = (levels - 1) as u64;
        let levels = (0..=denom).map(|i| Grade::new(i, denom)).collect::<Result<_, _>>()?;
        Ok(GradeGrid { levels })
    }

    /// The `n + 1` level grid that is complete up to order-equivalence for a
    /// carrier of size `n`.
    pub fn complete_for(n: usize) -> Self {
        GradeGrid::uniform(n.max(1) + 1).expect("at least two levels")
    }

    pub fn from_levels(mut levels: Vec<Grade>) -> Result<Self, FuzzyError> {
        levels.sort();
        levels.dedup();
        if levels.first() != Some(&Grade::ZERO) || levels.last() != Some(&Grade::ONE) {
            return Err(FuzzyError::OutOfRange("grid must contain 0 and 1".into()));
        }
        Ok(GradeGrid { levels })
    }

    pub fn levels(&self) -> &[Grade] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

impl Default for GradeGrid {
    fn default() -> Self {
        GradeGrid::uniform(3).expect("three levels")
    }
}

impl fmt::Display for GradeGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let g: Grade = "2/4".parse().unwrap();
        assert_eq!(g, Grade::new(1, 2).unwrap());
        assert_eq!(g.to_string(), "1/2");
        assert_eq!("1".parse::<Grade>().unwrap(), Grade::ONE);
        assert_eq!(Grade::ZERO.to_string(), "0");
        assert!("3/2".parse::<Grade>().is_err());
        assert!("1/0".parse::<Grade>().is_err());
        assert!("-1/2".parse::<Grade>().is_err());
        assert!("x".parse::<Grade>().is_err());
    }

    #[test]
    fn powers_are_exact() {
        let half = Grade::new(1, 2).unwrap();
        assert_eq!(half.pow(2).unwrap(), Grade::new(1, 4).unwrap());
        assert_eq!(half.pow(1).unwrap(), half);
        assert_eq!(Grade::ZERO.pow(0).unwrap(), Grade::ONE);
        assert_eq!(Grade::new(1, 3).unwrap().pow(100), Err(FuzzyError::Overflow));
    }

    #[test]
    fn grids() {
        let g = GradeGrid::default();
        assert_eq!(g.to_string(), "{0, 1/2, 1}");
        assert_eq!(GradeGrid::complete_for(3).len(), 4);
        assert!(GradeGrid::uniform(1).is_err());
        assert!(GradeGrid::from_levels(vec![Grade::ONE]).is_err());
        let custom = GradeGrid::from_levels(vec![Grade::ONE, Grade::ZERO, Grade::new(1, 3).unwrap()]).unwrap();
        assert_eq!(custom.levels()[1], Grade::new(1, 3).unwrap());
    }
}

use crate::fuzzy::FuzzySubset;
use crate::grade::GradeGrid;
use crate::ideal::IdealKind;
use crate::semigroup::GammaSemigroup;

/// Default cap on the number of grid assignments visited per instance.
pub const DEFAULT_FAMILY_LIMIT: usize = 1 << 16;

/// Every non-zero assignment of grid grades to elements, element 0 most
/// significant, in increasing grade order.
pub struct GridAssignments<'a> {
    g: &'a GammaSemigroup,
    grid: &'a GradeGrid,
    digits: Option<Vec<usize>>,
}

impl<'a> GridAssignments<'a> {
    pub fn new(g: &'a GammaSemigroup, grid: &'a GradeGrid) -> Self {
        GridAssignments { g, grid, digits: Some(vec![0; g.n()]) }
    }
}

impl Iterator for GridAssignments<'_> {
    type Item = FuzzySubset;

    fn next(&mut self) -> Option<FuzzySubset> {
        let digits = self.digits.as_mut()?;
        let base = self.grid.len();
        let mut i = digits.len();
        loop {
            if i == 0 {
                self.digits = None;
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
        }
        let grades = digits.iter().map(|&d| self.grid.levels()[d]).collect();
        Some(FuzzySubset::from_parts(self.g.id(), grades))
    }
}

#[derive(Debug, Clone)]
pub struct Family {
    pub members: Vec<FuzzySubset>,
    /// Size of the untruncated, unfiltered assignment space.
    pub space: u128,
    pub truncated: bool,
}

/// Non-empty grid fuzzy subsets, optionally restricted to one kind, visiting
/// at most `limit` assignments.
pub fn enumerate_fuzzy_family(g: &GammaSemigroup, grid: &GradeGrid, filter: Option<IdealKind>, limit: usize) -> Family {
    let space = (grid.len() as u128).checked_pow(g.n() as u32).map_or(u128::MAX, |v| v - 1);
    let truncated = space > limit as u128;
    let members = GridAssignments::new(g, grid)
        .take(limit)
        .filter(|mu| filter.is_none_or(|k| g.check_fuzzy(k, mu).unwrap_or(false)))
        .collect();
    Family { members, space, truncated }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::Grade;

    #[test]
    fn family_sizes() {
        let lz2 = GammaSemigroup::from_fn(2, 1, |x, _, _| x).unwrap();
        let grid = GradeGrid::default();
        let fam = enumerate_fuzzy_family(&lz2, &grid, None, DEFAULT_FAMILY_LIMIT);
        assert_eq!(fam.members.len(), 8);
        assert!(!fam.truncated);
        assert_eq!(fam.members[0].grades(), &[Grade::ZERO, Grade::new(1, 2).unwrap()]);
        let sub = lz2.subset(&[1]);
        assert!(fam.members.contains(&FuzzySubset::characteristic(&sub)));
        // fuzzy left ideals of a left zero structure are the constants
        let left = enumerate_fuzzy_family(&lz2, &grid, Some(IdealKind::Left), DEFAULT_FAMILY_LIMIT);
        assert_eq!(left.members.len(), 2);
        let cut = enumerate_fuzzy_family(&lz2, &grid, None, 5);
        assert!(cut.truncated);
        assert_eq!(cut.members.len(), 5);
    }
}

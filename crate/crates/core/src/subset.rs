use std::fmt;

use crate::error::BindingError;
use crate::semigroup::StructureId;

/// A subset of the carrier of one particular Γ-semigroup.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    owner: StructureId,
    n: usize,
    mask: u64,
}

impl ElementSubset {
    pub(crate) fn from_mask_unchecked(owner: StructureId, n: usize, mask: u64) -> Self {
        ElementSubset { owner, n, mask }
    }

    pub fn owner(&self) -> StructureId {
        self.owner
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.mask >> x & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| self.contains(x))
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn insert(&mut self, x: usize) {
        debug_assert!(x < self.n);
        self.mask |= 1 << x;
    }

    fn same_owner(&self, other: &Self) -> Result<(), BindingError> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(BindingError { expected: self.owner, found: other.owner })
        }
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, BindingError> {
        self.same_owner(other)?;
        Ok(ElementSubset { mask: self.mask & other.mask, ..*self })
    }

    pub fn union(&self, other: &Self) -> Result<Self, BindingError> {
        self.same_owner(other)?;
        Ok(ElementSubset { mask: self.mask | other.mask, ..*self })
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool, BindingError> {
        self.same_owner(other)?;
        Ok(self.mask & !other.mask == 0)
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

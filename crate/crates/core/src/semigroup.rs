//! Γ-semigroup tables and their validation.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{BindingError, ValidationError};
use crate::subset::ElementSubset;

/// Element subsets are bitmasks, which bounds the carrier.
pub const MAX_CARRIER: usize = 64;

/// Fingerprint of a validated table; subsets and fuzzy subsets carry the id
/// of the structure they were created over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureId(u64);

/// Raw input to [`GammaSemigroup::validate`]: `slices[γ][x][y] = x γ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableData {
    pub n: usize,
    pub m: usize,
    pub slices: Vec<Vec<Vec<usize>>>,
}

/// One failure of `(x β y) γ z = x β (y γ z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AssocViolation {
    pub x: usize,
    pub beta: usize,
    pub y: usize,
    pub gamma: usize,
    pub z: usize,
    /// `(x β y) γ z`
    pub lhs: usize,
    /// `x β (y γ z)`
    pub rhs: usize,
}

impl fmt::Display for AssocViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {} {} {}", self.x, self.beta, self.y, self.gamma, self.z, self.lhs, self.rhs)
    }
}

/// A finite Γ-semigroup with carrier `0..n` and parameters `0..m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GammaSemigroup {
    n: usize,
    m: usize,
    /// Flat `[γ][x][y]`.
    table: Vec<usize>,
    id: StructureId,
}

impl GammaSemigroup {
    pub fn validate(data: &TableData) -> Result<Self, ValidationError> {
        let TableData { n, m, slices } = data;
        let (n, m) = (*n, *m);
        if slices.len() != m {
            return Err(ValidationError::Shape { location: "table".into(), expected: m, found: slices.len() });
        }
        let mut flat = Vec::with_capacity(n * n * m);
        for (gamma, slice) in slices.iter().enumerate() {
            if slice.len() != n {
                return Err(ValidationError::Shape {
                    location: format!("slice {gamma}"),
                    expected: n,
                    found: slice.len(),
                });
            }
            for (x, row) in slice.iter().enumerate() {
                if row.len() != n {
                    return Err(ValidationError::Shape {
                        location: format!("slice {gamma} row {x}"),
                        expected: n,
                        found: row.len(),
                    });
                }
                flat.extend_from_slice(row);
            }
        }
        Self::from_flat(n, m, flat)
    }

    /// Build from a flat `[γ][x][y]` table, checking range and associativity.
    pub fn from_flat(n: usize, m: usize, table: Vec<usize>) -> Result<Self, ValidationError> {
        if n == 0 || m == 0 {
            return Err(ValidationError::Degenerate { n, m });
        }
        if n > MAX_CARRIER {
            return Err(ValidationError::TooLarge { n, max: MAX_CARRIER });
        }
        if table.len() != n * n * m {
            return Err(ValidationError::Shape { location: "table".into(), expected: n * n * m, found: table.len() });
        }
        let out_of_range: Vec<_> = table
            .iter()
            .enumerate()
            .filter(|(_, &v)| v >= n)
            .map(|(i, &v)| (i / (n * n), (i / n) % n, i % n, v))
            .collect();
        if !out_of_range.is_empty() {
            return Err(ValidationError::OutOfRange { n, entries: out_of_range });
        }
        let violations = associativity_violations(n, m, &table);
        if !violations.is_empty() {
            return Err(ValidationError::NotAssociative(violations));
        }
        let id = fingerprint(n, m, &table);
        Ok(GammaSemigroup { n, m, table, id })
    }

    /// Build from a closure `op(x, γ, y)`.
    pub fn from_fn(n: usize, m: usize, op: impl Fn(usize, usize, usize) -> usize) -> Result<Self, ValidationError> {
        let mut table = Vec::with_capacity(n * n * m);
        for gamma in 0..m {
            for x in 0..n {
                for y in 0..n {
                    table.push(op(x, gamma, y));
                }
            }
        }
        Self::from_flat(n, m, table)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn id(&self) -> StructureId {
        self.id
    }

    /// `x γ y`.
    #[inline]
    pub fn op(&self, x: usize, gamma: usize, y: usize) -> usize {
        self.table[(gamma * self.n + x) * self.n + y]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn to_table_data(&self) -> TableData {
        let slices = (0..self.m)
            .map(|g| (0..self.n).map(|x| (0..self.n).map(|y| self.op(x, g, y)).collect()).collect())
            .collect();
        TableData { n: self.n, m: self.m, slices }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn gammas(&self) -> std::ops::Range<usize> {
        0..self.m
    }

    /// All `(y, γ, z)` with `y γ z = x`.
    pub fn factorizations(&self, x: usize) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        self.table.iter().enumerate().filter(move |(_, &v)| v == x).map(move |(i, _)| ((i / n) % n, i / (n * n), i % n))
    }

    pub fn check_binding(&self, id: StructureId) -> Result<(), BindingError> {
        if id == self.id {
            Ok(())
        } else {
            Err(BindingError { expected: self.id, found: id })
        }
    }

    pub fn empty_subset(&self) -> ElementSubset {
        ElementSubset::from_mask_unchecked(self.id, self.n, 0)
    }

    pub fn full_subset(&self) -> ElementSubset {
        ElementSubset::from_mask_unchecked(self.id, self.n, full_mask(self.n))
    }

    /// Subset from element indices; panics on an index outside the carrier.
    pub fn subset(&self, elements: &[usize]) -> ElementSubset {
        let mut mask = 0u64;
        for &e in elements {
            assert!(e < self.n, "element {e} outside carrier of size {}", self.n);
            mask |= 1 << e;
        }
        ElementSubset::from_mask_unchecked(self.id, self.n, mask)
    }

    /// Subset from a bitmask; `None` if it has bits beyond the carrier.
    pub fn subset_from_mask(&self, mask: u64) -> Option<ElementSubset> {
        (mask & !full_mask(self.n) == 0).then(|| ElementSubset::from_mask_unchecked(self.id, self.n, mask))
    }

    pub fn singleton(&self, a: usize) -> ElementSubset {
        self.subset(&[a])
    }
}

impl fmt::Debug for GammaSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GammaSemigroup").field("n", &self.n).field("m", &self.m).field("table", &self.table).finish()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Every associativity failure of a flat `[γ][x][y]` table with entries in
/// range, in `(x, β, y, γ, z)` lexicographic order.
pub fn associativity_violations(n: usize, m: usize, table: &[usize]) -> Vec<AssocViolation> {
    let op = |x: usize, g: usize, y: usize| table[(g * n + x) * n + y];
    let mut out = Vec::new();
    for x in 0..n {
        for beta in 0..m {
            for y in 0..n {
                let xy = op(x, beta, y);
                for gamma in 0..m {
                    for z in 0..n {
                        let lhs = op(xy, gamma, z);
                        let rhs = op(x, beta, op(y, gamma, z));
                        if lhs != rhs {
                            out.push(AssocViolation { x, beta, y, gamma, z, lhs, rhs });
                        }
                    }
                }
            }
        }
    }
    out
}

fn fingerprint(n: usize, m: usize, table: &[usize]) -> StructureId {
    let mut h = DefaultHasher::new();
    (n, m, table).hash(&mut h);
    StructureId(h.finish())
}

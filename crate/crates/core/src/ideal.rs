//! Crisp subset products, ideal predicates and generated ideals.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BindingError, GuardError, IdealError};
use crate::semigroup::GammaSemigroup;
use crate::subset::ElementSubset;

/// Largest carrier for which [`GammaSemigroup::enumerate_crisp`] walks all `2^n - 1` subsets.
pub const SUBSET_GUARD: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Subsemigroup,
    Left,
    Right,
    TwoSided,
    Bi,
    OneTwo,
    Quasi,
}

impl IdealKind {
    pub const ALL: [IdealKind; 7] = [
        IdealKind::Subsemigroup,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Bi,
        IdealKind::OneTwo,
        IdealKind::Quasi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Subsemigroup => "subsemigroup",
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two_sided",
            IdealKind::Bi => "bi",
            IdealKind::OneTwo => "one_two",
            IdealKind::Quasi => "quasi",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown ideal kind {0:?} (expected one of subsemigroup, left, right, two_sided, bi, one_two, quasi)")]
pub struct UnknownKind(pub String);

impl FromStr for IdealKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "subsemigroup" | "sub" => IdealKind::Subsemigroup,
            "left" => IdealKind::Left,
            "right" => IdealKind::Right,
            "two_sided" | "ideal" | "twosided" => IdealKind::TwoSided,
            "bi" => IdealKind::Bi,
            "one_two" | "(1,2)" | "1,2" => IdealKind::OneTwo,
            "quasi" => IdealKind::Quasi,
            _ => return Err(UnknownKind(s.to_string())),
        })
    }
}

/// A failed inclusion: `element` lies in the left-hand product set but not in
/// the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrispViolation {
    pub inclusion: &'static str,
    pub element: usize,
}

impl fmt::Display for CrispViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at element {}", self.inclusion, self.element)
    }
}

impl GammaSemigroup {
    /// `AΓB = {a γ b : a ∈ A, γ ∈ Γ, b ∈ B}`.
    pub fn subset_product(&self, a: &ElementSubset, b: &ElementSubset) -> Result<ElementSubset, BindingError> {
        self.check_binding(a.owner())?;
        self.check_binding(b.owner())?;
        let mut out = self.empty_subset();
        for x in a.iter() {
            for y in b.iter() {
                for g in self.gammas() {
                    out.insert(self.op(x, g, y));
                }
            }
        }
        Ok(out)
    }

    fn product_chain(&self, parts: &[&ElementSubset]) -> ElementSubset {
        parts[1..].iter().fold(*parts[0], |acc, p| self.subset_product(&acc, p).expect("same structure"))
    }

    /// First failed defining inclusion for `kind`, if any.
    pub fn crisp_violation(
        &self,
        kind: IdealKind,
        subset: &ElementSubset,
    ) -> Result<Option<CrispViolation>, IdealError> {
        self.check_binding(subset.owner())?;
        if subset.is_empty() {
            return Err(IdealError::Empty);
        }
        let s = self.full_subset();
        let i = subset;
        let outside = |inclusion: &'static str, set: ElementSubset| {
            set.iter().find(|&x| !i.contains(x)).map(|element| CrispViolation { inclusion, element })
        };
        let closed = || outside("IΓI ⊆ I", self.product_chain(&[i, i]));
        let v = match kind {
            IdealKind::Subsemigroup => closed(),
            IdealKind::Left => outside("SΓI ⊆ I", self.product_chain(&[&s, i])),
            IdealKind::Right => outside("IΓS ⊆ I", self.product_chain(&[i, &s])),
            IdealKind::TwoSided => outside("SΓI ⊆ I", self.product_chain(&[&s, i]))
                .or_else(|| outside("IΓS ⊆ I", self.product_chain(&[i, &s]))),
            IdealKind::Bi => closed().or_else(|| outside("IΓSΓI ⊆ I", self.product_chain(&[i, &s, i]))),
            IdealKind::OneTwo => closed().or_else(|| outside("IΓSΓIΓI ⊆ I", self.product_chain(&[i, &s, i, i]))),
            IdealKind::Quasi => {
                let both =
                    self.product_chain(&[&s, i]).intersection(&self.product_chain(&[i, &s])).expect("same structure");
                outside("SΓQ ∩ QΓS ⊆ Q", both)
            }
        };
        Ok(v)
    }

    pub fn check_crisp(&self, kind: IdealKind, subset: &ElementSubset) -> Result<bool, IdealError> {
        Ok(self.crisp_violation(kind, subset)?.is_none())
    }

    /// Least subset of the given kind containing `a`, by fixed-point closure.
    /// For `Quasi` this is `{a} ∪ (aΓS ∩ SΓa)`.
    pub fn generate_ideal(&self, kind: IdealKind, a: usize) -> ElementSubset {
        match kind {
            IdealKind::Quasi => {
                let q = self.quasi_formula(a);
                assert!(self.check_crisp(IdealKind::Quasi, &q).expect("non-empty"), "{{a}} ∪ (aΓS ∩ SΓa) is quasi");
                q
            }
            _ => self.closure(kind, self.singleton(a)),
        }
    }

    /// Least subset of `kind` containing `seed` (seed must be non-empty).
    pub fn closure(&self, kind: IdealKind, seed: ElementSubset) -> ElementSubset {
        let s = self.full_subset();
        let mut cur = seed;
        loop {
            let forced = match kind {
                IdealKind::Subsemigroup => self.product_chain(&[&cur, &cur]),
                IdealKind::Left => self.product_chain(&[&s, &cur]),
                IdealKind::Right => self.product_chain(&[&cur, &s]),
                IdealKind::TwoSided => {
                    self.product_chain(&[&s, &cur]).union(&self.product_chain(&[&cur, &s])).expect("same structure")
                }
                IdealKind::Bi => self
                    .product_chain(&[&cur, &cur])
                    .union(&self.product_chain(&[&cur, &s, &cur]))
                    .expect("same structure"),
                IdealKind::OneTwo => self
                    .product_chain(&[&cur, &cur])
                    .union(&self.product_chain(&[&cur, &s, &cur, &cur]))
                    .expect("same structure"),
                IdealKind::Quasi => self
                    .product_chain(&[&s, &cur])
                    .intersection(&self.product_chain(&[&cur, &s]))
                    .expect("same structure"),
            };
            let next = cur.union(&forced).expect("same structure");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    fn quasi_formula(&self, a: usize) -> ElementSubset {
        let s = self.full_subset();
        let x = self.singleton(a);
        let right = self.product_chain(&[&x, &s]);
        let left = self.product_chain(&[&s, &x]);
        x.union(&right.intersection(&left).expect("same structure")).expect("same structure")
    }

    /// The textbook formula for the principal ideal of `kind` generated by `a`:
    /// `{a} ∪ SΓa`, `{a} ∪ aΓS`, `{a} ∪ SΓa ∪ aΓS ∪ SΓaΓS`, and
    /// `{a} ∪ (aΓS ∩ SΓa)`. Other kinds fall back to [`Self::generate_ideal`].
    pub fn generated_by_formula(&self, kind: IdealKind, a: usize) -> ElementSubset {
        let s = self.full_subset();
        let x = self.singleton(a);
        let u = |p: ElementSubset, q: ElementSubset| p.union(&q).expect("same structure");
        match kind {
            IdealKind::Left => u(x, self.product_chain(&[&s, &x])),
            IdealKind::Right => u(x, self.product_chain(&[&x, &s])),
            IdealKind::TwoSided => u(
                u(x, self.product_chain(&[&s, &x])),
                u(self.product_chain(&[&x, &s]), self.product_chain(&[&s, &x, &s])),
            ),
            IdealKind::Quasi => self.quasi_formula(a),
            _ => self.generate_ideal(kind, a),
        }
    }

    /// All non-empty subsets of `kind`, in ascending mask order.
    pub fn enumerate_crisp(&self, kind: IdealKind) -> Result<Vec<ElementSubset>, IdealError> {
        Ok(self.nonempty_subsets()?.filter(|s| self.check_crisp(kind, s).expect("non-empty")).collect())
    }

    /// All `2^n - 1` non-empty subsets in ascending mask order.
    pub fn nonempty_subsets(&self) -> Result<impl Iterator<Item = ElementSubset> + '_, GuardError> {
        if self.n() > SUBSET_GUARD {
            return Err(GuardError { what: "subset enumeration carrier size", limit: SUBSET_GUARD, actual: self.n() });
        }
        Ok((1u64..1 << self.n()).map(move |mask| self.subset_from_mask(mask).expect("in range")))
    }
}

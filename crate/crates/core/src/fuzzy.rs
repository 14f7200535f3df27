//! Fuzzy subsets over a finite Γ-semigroup with exact rational grades.
//!
//! Membership grades are [`Grade`]s. The sup in the composition
//!
//! ```text
//! (μ ∘ σ)(x) = max { min(μ(y), σ(z)) : y γ z = x },   0 if x has no factorization
//! ```
//!
//! is a max over a finite set, so everything is exact.

use std::fmt;

use serde::Serialize;

use crate::error::{BindingError, FuzzyError};
use crate::grade::Grade;
use crate::ideal::IdealKind;
use crate::semigroup::{GammaSemigroup, StructureId};
use crate::subset::ElementSubset;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzySubset {
    owner: StructureId,
    grades: Vec<Grade>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Meet,
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasiForm {
    /// `μ(x) ≥ min(μ(b), μ(c))` whenever `x = b α s = t β c`.
    Min,
    /// `μ(x) ≥ max(min(μ(b), μ(c)), min(μ(t), μ(s)))` for the same pairs.
    MaxMin,
}

/// A failed fuzzy inequality: at `point`, `have` should be at least `need`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: IdealKind,
    /// Carrier elements of the quantified tuple, in the order they appear in
    /// the defining inequality.
    pub elements: Vec<usize>,
    /// Γ indices of the quantified tuple.
    pub gammas: Vec<usize>,
    pub point: usize,
    pub have: Grade,
    pub need: Grade,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind)?;
        for (i, e) in self.elements.iter().enumerate() {
            write!(f, " {e}")?;
            if let Some(g) = self.gammas.get(i) {
                write!(f, " γ{g}")?;
            }
        }
        write!(f, " -> μ({}) = {} < {}", self.point, self.have, self.need)
    }
}

impl FuzzySubset {
    pub fn new(g: &GammaSemigroup, grades: Vec<Grade>) -> Result<Self, FuzzyError> {
        if grades.len() != g.n() {
            return Err(FuzzyError::Arity { expected: g.n(), found: grades.len() });
        }
        Ok(FuzzySubset { owner: g.id(), grades })
    }

    pub(crate) fn from_parts(owner: StructureId, grades: Vec<Grade>) -> Self {
        FuzzySubset { owner, grades }
    }

    pub fn constant(g: &GammaSemigroup, c: Grade) -> Self {
        FuzzySubset { owner: g.id(), grades: vec![c; g.n()] }
    }

    /// `χ_A`: 1 on `A`, 0 elsewhere.
    pub fn characteristic(a: &ElementSubset) -> Self {
        let grades = (0..a.universe()).map(|x| if a.contains(x) { Grade::ONE } else { Grade::ZERO }).collect();
        FuzzySubset { owner: a.owner(), grades }
    }

    /// `χ_S`, the characteristic function of the whole carrier.
    pub fn chi(g: &GammaSemigroup) -> Self {
        Self::characteristic(&g.full_subset())
    }

    pub fn owner(&self) -> StructureId {
        self.owner
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn grade(&self, x: usize) -> Grade {
        self.grades[x]
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    /// Non-empty in the fuzzy sense: some grade is positive.
    pub fn has_support(&self) -> bool {
        self.grades.iter().any(|g| !g.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.grades.windows(2).all(|w| w[0] == w[1])
    }

    fn same_owner(&self, other: &Self) -> Result<(), BindingError> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(BindingError { expected: self.owner, found: other.owner })
        }
    }

    pub fn combine(&self, op: Combine, other: &Self) -> Result<Self, BindingError> {
        self.same_owner(other)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(&a, &b)| match op {
                Combine::Meet => a.min(b),
                Combine::Join => a.max(b),
            })
            .collect();
        Ok(FuzzySubset { owner: self.owner, grades })
    }

    pub fn meet(&self, other: &Self) -> Result<Self, BindingError> {
        self.combine(Combine::Meet, other)
    }

    pub fn join(&self, other: &Self) -> Result<Self, BindingError> {
        self.combine(Combine::Join, other)
    }

    /// Pointwise `≤`.
    pub fn leq(&self, other: &Self) -> Result<bool, BindingError> {
        self.same_owner(other)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }

    /// Pointwise `=`; equivalent to `==` once bindings agree.
    pub fn eq_pointwise(&self, other: &Self) -> Result<bool, BindingError> {
        self.same_owner(other)?;
        Ok(self.grades == other.grades)
    }

    /// `μ_t = {x : μ(x) ≥ t}`.
    pub fn level_set(&self, g: &GammaSemigroup, t: Grade) -> Result<ElementSubset, BindingError> {
        g.check_binding(self.owner)?;
        let members: Vec<usize> = (0..self.len()).filter(|&x| self.grades[x] >= t).collect();
        Ok(g.subset(&members))
    }

    /// `Im(μ)`, ascending.
    pub fn image_values(&self) -> Vec<Grade> {
        let mut v = self.grades.clone();
        v.sort();
        v.dedup();
        v
    }

    /// Pointwise integer power; `k = 0` gives the constant 1.
    pub fn power(&self, k: u32) -> Result<Self, FuzzyError> {
        let grades = self.grades.iter().map(|g| g.pow(k)).collect::<Result<_, _>>()?;
        Ok(FuzzySubset { owner: self.owner, grades })
    }

    /// Grades as the whitespace-separated text used by fuzzy files.
    pub fn to_text(&self) -> String {
        self.grades.iter().map(Grade::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.grades.iter().map(Grade::to_string).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl GammaSemigroup {
    /// Sup-min composition `μ ∘ σ`.
    pub fn compose(&self, mu: &FuzzySubset, sigma: &FuzzySubset) -> Result<FuzzySubset, BindingError> {
        self.check_binding(mu.owner)?;
        self.check_binding(sigma.owner)?;
        let mut out = vec![Grade::ZERO; self.n()];
        for c in self.gammas() {
            for y in self.elements() {
                let my = mu.grades[y];
                if my.is_zero() {
                    continue;
                }
                for z in self.elements() {
                    let x = self.op(y, c, z);
                    let v = my.min(sigma.grades[z]);
                    if v > out[x] {
                        out[x] = v;
                    }
                }
            }
        }
        Ok(FuzzySubset { owner: self.id(), grades: out })
    }

    /// Left-to-right composition of a chain, `((μ₁ ∘ μ₂) ∘ μ₃) ∘ …`.
    pub fn compose_chain(&self, parts: &[&FuzzySubset]) -> Result<FuzzySubset, BindingError> {
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = self.compose(&acc, p)?;
        }
        Ok(acc)
    }

    fn require_support(&self, mu: &FuzzySubset) -> Result<(), FuzzyError> {
        self.check_binding(mu.owner)?;
        if mu.has_support() {
            Ok(())
        } else {
            Err(FuzzyError::Empty)
        }
    }

    /// First failed defining inequality of `kind`, straight from the
    /// quantified definitions (quasi goes through `(μ∘χ) ∩ (χ∘μ) ⊆ μ`).
    pub fn fuzzy_violation(&self, kind: IdealKind, mu: &FuzzySubset) -> Result<Option<Violation>, FuzzyError> {
        self.require_support(mu)?;
        let g = |x: usize| mu.grades[x];
        let n = self.n();
        let gammas = self.m();
        let violation = |elements: Vec<usize>, gs: Vec<usize>, point: usize, need: Grade| Violation {
            kind,
            elements,
            gammas: gs,
            point,
            have: g(point),
            need,
        };
        // μ(x γ y) ≥ bound(x, y)
        let binary = |bound: &dyn Fn(usize, usize) -> Grade| {
            for x in 0..n {
                for c in 0..gammas {
                    for y in 0..n {
                        let p = self.op(x, c, y);
                        let need = bound(x, y);
                        if g(p) < need {
                            return Some(violation(vec![x, y], vec![c], p, need));
                        }
                    }
                }
            }
            None
        };
        let sub = || binary(&|x, y| g(x).min(g(y)));
        let v = match kind {
            IdealKind::Subsemigroup => sub(),
            IdealKind::Left => binary(&|_, y| g(y)),
            IdealKind::Right => binary(&|x, _| g(x)),
            IdealKind::TwoSided => binary(&|_, y| g(y)).or_else(|| binary(&|x, _| g(x))),
            IdealKind::Bi => sub().or_else(|| {
                for x in 0..n {
                    for b in 0..gammas {
                        for s in 0..n {
                            let xs = self.op(x, b, s);
                            for c in 0..gammas {
                                for y in 0..n {
                                    let p = self.op(xs, c, y);
                                    let need = g(x).min(g(y));
                                    if g(p) < need {
                                        return Some(violation(vec![x, s, y], vec![b, c], p, need));
                                    }
                                }
                            }
                        }
                    }
                }
                None
            }),
            IdealKind::OneTwo => sub().or_else(|| {
                for x in 0..n {
                    for a in 0..gammas {
                        for w in 0..n {
                            let xw = self.op(x, a, w);
                            for b in 0..gammas {
                                for y in 0..n {
                                    for c in 0..gammas {
                                        for z in 0..n {
                                            let p = self.op(xw, b, self.op(y, c, z));
                                            let need = g(x).min(g(y)).min(g(z));
                                            if g(p) < need {
                                                return Some(violation(vec![x, w, y, z], vec![a, b, c], p, need));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                None
            }),
            IdealKind::Quasi => {
                let chi = FuzzySubset::chi(self);
                let bound = self.compose(mu, &chi)?.meet(&self.compose(&chi, mu)?)?;
                (0..n).find(|&x| bound.grades[x] > g(x)).map(|x| violation(vec![x], vec![], x, bound.grades[x]))
            }
        };
        Ok(v)
    }

    pub fn check_fuzzy(&self, kind: IdealKind, mu: &FuzzySubset) -> Result<bool, FuzzyError> {
        Ok(self.fuzzy_violation(kind, mu)?.is_none())
    }

    /// Quasi-ideal test by the pointwise factorization conditions, enumerating
    /// every pair of factorizations `x = b α s`, `x = t β c` directly.
    pub fn check_fuzzy_quasi_pointwise(&self, mu: &FuzzySubset, form: QuasiForm) -> Result<bool, FuzzyError> {
        self.require_support(mu)?;
        let g = |x: usize| mu.grades[x];
        for x in self.elements() {
            let facts: Vec<_> = self.factorizations(x).collect();
            for &(b, _, s) in &facts {
                for &(t, _, c) in &facts {
                    let need = match form {
                        QuasiForm::Min => g(b).min(g(c)),
                        QuasiForm::MaxMin => g(b).min(g(c)).max(g(t).min(g(s))),
                    };
                    if g(x) < need {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, d: u64) -> Grade {
        Grade::new(p, d).unwrap()
    }

    fn lz2() -> GammaSemigroup {
        GammaSemigroup::from_fn(2, 1, |x, _, _| x).unwrap()
    }

    fn mod3() -> GammaSemigroup {
        GammaSemigroup::from_fn(3, 2, |x, g, y| (x * (g + 1) * y) % 3).unwrap()
    }

    fn fz(g: &GammaSemigroup, grades: &[Grade]) -> FuzzySubset {
        FuzzySubset::new(g, grades.to_vec()).unwrap()
    }

    #[test]
    fn meet_and_join() {
        let g = lz2();
        let mu = fz(&g, &[Grade::ONE, q(1, 2)]);
        let sigma = fz(&g, &[Grade::ZERO, Grade::ONE]);
        assert_eq!(mu.meet(&sigma).unwrap(), fz(&g, &[Grade::ZERO, q(1, 2)]));
        assert_eq!(mu.join(&sigma).unwrap(), fz(&g, &[Grade::ONE, Grade::ONE]));
        assert_eq!(mu.meet(&mu).unwrap(), mu);
        let other = FuzzySubset::chi(&mod3());
        assert!(mu.meet(&other).is_err());
    }

    #[test]
    fn composition_examples() {
        let g = lz2();
        let mu = fz(&g, &[q(1, 2), Grade::ONE]);
        let sigma = fz(&g, &[Grade::ONE, Grade::ZERO]);
        assert_eq!(g.compose(&mu, &sigma).unwrap(), mu);
        // Right-zero semigroup on two elements with an extra unreachable
        // element: 2 never appears as a product.
        let h = GammaSemigroup::from_fn(3, 1, |_, _, y| if y == 2 { 0 } else { y }).unwrap();
        let one = FuzzySubset::constant(&h, Grade::ONE);
        assert_eq!(h.compose(&one, &one).unwrap().grade(2), Grade::ZERO);
        let chi = FuzzySubset::chi(&g);
        assert_eq!(
            g.compose(&chi, &chi).unwrap(),
            FuzzySubset::characteristic(&g.subset_product(&g.full_subset(), &g.full_subset()).unwrap())
        );
    }

    #[test]
    fn characteristic_functions() {
        let g = lz2();
        assert_eq!(FuzzySubset::characteristic(&g.subset(&[0])).grades(), &[Grade::ONE, Grade::ZERO]);
        assert!(FuzzySubset::chi(&g).grades().iter().all(|&x| x == Grade::ONE));
        let a = g.subset(&[0]);
        let b = g.full_subset();
        assert_eq!(
            FuzzySubset::characteristic(&a.intersection(&b).unwrap()),
            FuzzySubset::characteristic(&a).meet(&FuzzySubset::characteristic(&b)).unwrap()
        );
    }

    #[test]
    fn fuzzy_predicates() {
        let g = lz2();
        let mu = fz(&g, &[q(1, 2), Grade::ONE]);
        let v = g.fuzzy_violation(IdealKind::Left, &mu).unwrap().unwrap();
        assert_eq!((v.elements.clone(), v.point, v.have, v.need), (vec![0, 1], 0, q(1, 2), Grade::ONE));
        assert!(g.check_fuzzy(IdealKind::Right, &mu).unwrap());
        for kind in IdealKind::ALL {
            assert!(g.check_fuzzy(kind, &FuzzySubset::constant(&g, q(1, 3))).unwrap());
            assert!(mod3().check_fuzzy(kind, &FuzzySubset::constant(&mod3(), Grade::ONE)).unwrap());
        }
        let m = mod3();
        assert!(m.check_fuzzy(IdealKind::TwoSided, &fz(&m, &[Grade::ONE, q(1, 2), q(1, 2)])).unwrap());
        assert_eq!(g.check_fuzzy(IdealKind::Left, &FuzzySubset::constant(&g, Grade::ZERO)), Err(FuzzyError::Empty));
    }

    #[test]
    fn pointwise_quasi_forms() {
        let m = mod3();
        let q0 = FuzzySubset::characteristic(&m.generate_ideal(IdealKind::Quasi, 0));
        assert!(m.check_fuzzy_quasi_pointwise(&q0, QuasiForm::Min).unwrap());
        assert!(m.check_fuzzy_quasi_pointwise(&q0, QuasiForm::MaxMin).unwrap());
        // Element 2 has no factorization, so only 0 and 1 constrain μ.
        let h = GammaSemigroup::from_fn(3, 1, |_, _, y| if y == 2 { 0 } else { y }).unwrap();
        let mu = fz(&h, &[Grade::ONE, Grade::ONE, Grade::ZERO]);
        assert!(h.check_fuzzy_quasi_pointwise(&mu, QuasiForm::Min).unwrap());
    }

    #[test]
    fn level_sets_and_powers() {
        let g = lz2();
        let mu = fz(&g, &[Grade::ONE, q(1, 2)]);
        assert_eq!(mu.level_set(&g, q(1, 2)).unwrap(), g.full_subset());
        assert_eq!(mu.level_set(&g, Grade::ONE).unwrap(), g.subset(&[0]));
        assert_eq!(mu.level_set(&g, Grade::ZERO).unwrap(), g.full_subset());
        assert_eq!(mu.image_values(), vec![q(1, 2), Grade::ONE]);
        let nu = fz(&g, &[q(1, 2), Grade::ONE]);
        assert_eq!(nu.power(2).unwrap(), fz(&g, &[q(1, 4), Grade::ONE]));
        assert_eq!(nu.power(1).unwrap(), nu);
        assert_eq!(nu.power(0).unwrap(), FuzzySubset::constant(&g, Grade::ONE));
    }

    #[test]
    fn order_relations() {
        let g = lz2();
        let mu = fz(&g, &[Grade::ONE, q(1, 2)]);
        let sigma = fz(&g, &[q(1, 2), q(1, 2)]);
        assert!(mu.meet(&sigma).unwrap().leq(&mu).unwrap());
        assert!(mu.leq(&mu.join(&sigma).unwrap()).unwrap());
        assert!(!mu.leq(&sigma).unwrap());
        assert!(mu.eq_pointwise(&mu).unwrap());
    }
}

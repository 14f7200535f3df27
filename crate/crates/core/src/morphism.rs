//! Homomorphisms between Γ-semigroups over the same Γ, and transport of
//! fuzzy subsets along them.

use thiserror::Error;

use crate::error::{BindingError, GuardError};
use crate::fuzzy::FuzzySubset;
use crate::grade::Grade;
use crate::semigroup::{GammaSemigroup, StructureId};

/// Largest carrier for which all `n^n` self-maps are tried.
pub const ENDOMORPHISM_GUARD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("source has |Γ| = {source_m}, target has |Γ| = {target_m}")]
    GammaMismatch { source_m: usize, target_m: usize },
    #[error("map has {found} entries for a source of size {expected}")]
    Arity { expected: usize, found: usize },
    #[error("image {value} of element {element} outside target of size {n}")]
    OutOfRange { element: usize, value: usize, n: usize },
    /// Every `(x, γ, y)` with `f(x γ y) ≠ f(x) γ f(y)`.
    #[error("{} triples violate f(xγy) = f(x)γf(y)", .0.len())]
    NotHomomorphic(Vec<(usize, usize, usize)>),
    #[error("pushforward requires a surjective homomorphism")]
    NotSurjective,
    #[error(transparent)]
    Binding(#[from] BindingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: StructureId,
    target: StructureId,
    target_n: usize,
    map: Vec<usize>,
    surjective: bool,
}

impl Homomorphism {
    pub fn validate(source: &GammaSemigroup, target: &GammaSemigroup, map: Vec<usize>) -> Result<Self, HomError> {
        if source.m() != target.m() {
            return Err(HomError::GammaMismatch { source_m: source.m(), target_m: target.m() });
        }
        if map.len() != source.n() {
            return Err(HomError::Arity { expected: source.n(), found: map.len() });
        }
        if let Some((element, &value)) = map.iter().enumerate().find(|(_, &v)| v >= target.n()) {
            return Err(HomError::OutOfRange { element, value, n: target.n() });
        }
        let bad = homomorphism_violations(source, target, &map);
        if !bad.is_empty() {
            return Err(HomError::NotHomomorphic(bad));
        }
        let mut hit = vec![false; target.n()];
        map.iter().for_each(|&v| hit[v] = true);
        Ok(Homomorphism {
            source: source.id(),
            target: target.id(),
            target_n: target.n(),
            surjective: hit.iter().all(|&h| h),
            map,
        })
    }

    pub fn identity(g: &GammaSemigroup) -> Self {
        Homomorphism::validate(g, g, g.elements().collect()).expect("identity is a homomorphism")
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn source_id(&self) -> StructureId {
        self.source
    }

    pub fn target_id(&self) -> StructureId {
        self.target
    }

    /// `f⁻¹(λ)(x) = λ(f(x))`.
    pub fn pullback(&self, lambda: &FuzzySubset) -> Result<FuzzySubset, HomError> {
        check(self.target, lambda.owner())?;
        let grades = self.map.iter().map(|&y| lambda.grade(y)).collect();
        Ok(FuzzySubset::from_parts(self.source, grades))
    }

    /// `f(μ)(y) = max { μ(x) : f(x) = y }`; needs `f` surjective so every
    /// preimage is non-empty.
    pub fn pushforward(&self, mu: &FuzzySubset) -> Result<FuzzySubset, HomError> {
        if !self.surjective {
            return Err(HomError::NotSurjective);
        }
        check(self.source, mu.owner())?;
        let mut grades = vec![Grade::ZERO; self.target_n];
        for (x, &y) in self.map.iter().enumerate() {
            grades[y] = grades[y].max(mu.grade(x));
        }
        Ok(FuzzySubset::from_parts(self.target, grades))
    }

    /// `μ[θ](x) = μ(θ(x))` for an endomorphism `θ`.
    pub fn endo_transport(&self, mu: &FuzzySubset) -> Result<FuzzySubset, HomError> {
        check(self.source, self.target)?;
        self.pullback(mu)
    }
}

fn check(expected: StructureId, found: StructureId) -> Result<(), BindingError> {
    if expected == found {
        Ok(())
    } else {
        Err(BindingError { expected, found })
    }
}

fn homomorphism_violations(
    source: &GammaSemigroup,
    target: &GammaSemigroup,
    map: &[usize],
) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for x in source.elements() {
        for c in source.gammas() {
            for y in source.elements() {
                if map[source.op(x, c, y)] != target.op(map[x], c, map[y]) {
                    out.push((x, c, y));
                }
            }
        }
    }
    out
}

/// Every self-map of `g` that is a homomorphism, in lexicographic map order.
pub fn enumerate_endomorphisms(g: &GammaSemigroup) -> Result<Vec<Homomorphism>, GuardError> {
    let n = g.n();
    if n > ENDOMORPHISM_GUARD {
        return Err(GuardError { what: "endomorphism enumeration carrier size", limit: ENDOMORPHISM_GUARD, actual: n });
    }
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    loop {
        if let Ok(h) = Homomorphism::validate(g, g, map.clone()) {
            out.push(h);
        }
        // odometer, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
        }
    }
}

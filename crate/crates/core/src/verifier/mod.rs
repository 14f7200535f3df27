//! Extensional verification of the theorem catalog over finite instances
//! and grid families of fuzzy subsets.

mod catalog;
mod checks;
mod family;

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

pub use catalog::{parse_list, TheoremId, UnknownTheorem};
pub use family::{enumerate_fuzzy_family, Family, GridAssignments, DEFAULT_FAMILY_LIMIT};

use crate::classify::{classify, StructureProfile};
use crate::error::{GuardError, IdealError};
use crate::fuzzy::FuzzySubset;
use crate::grade::GradeGrid;
use crate::ideal::IdealKind;
use crate::instances::{canonicalize, enumerate_all};
use crate::morphism::{enumerate_endomorphisms, Homomorphism};
use crate::semigroup::GammaSemigroup;
use crate::subset::ElementSubset;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Counterexample,
    HypothesisNotMet,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::HypothesisNotMet => "hypothesis_not_met",
            Status::Skipped => "skipped",
        }
    }
}

/// Replayable evidence: fuzzy subsets in the fuzzy-file format, subsets as
/// `{i,j}`, plus any elements or self-maps involved.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fuzzy: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subsets: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<Vec<usize>>,
}

impl Witness {
    pub fn text(description: impl Into<String>) -> Self {
        Witness { description: description.into(), ..Witness::default() }
    }

    pub fn with_fuzzy(mut self, mu: &FuzzySubset) -> Self {
        self.fuzzy.push(mu.to_text());
        self
    }

    pub fn with_subset(mut self, a: &ElementSubset) -> Self {
        self.subsets.push(a.to_string());
        self
    }

    pub fn with_element(mut self, x: usize) -> Self {
        self.elements.push(x);
        self
    }

    pub fn with_map(mut self, f: &Homomorphism) -> Self {
        self.maps.push(f.map().to_vec());
        self
    }

    fn prefixed(mut self, prefix: impl std::fmt::Display) -> Self {
        self.description = format!("{prefix}: {}", self.description);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: String,
    pub status: Status,
    pub family_size: usize,
    pub grid: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}

/// One instance together with the lazily computed data every check shares.
pub struct Context<'a> {
    g: &'a GammaSemigroup,
    grid: GradeGrid,
    profile: StructureProfile,
    family: Family,
    chi: FuzzySubset,
    kinds: [OnceLock<Vec<usize>>; 7],
    endos: OnceLock<Result<Vec<Homomorphism>, GuardError>>,
    subsets: OnceLock<Result<Vec<ElementSubset>, GuardError>>,
    crisp: [OnceLock<Result<Vec<ElementSubset>, IdealError>>; 7],
}

impl<'a> Context<'a> {
    pub fn new(g: &'a GammaSemigroup, grid: &GradeGrid, family_limit: usize) -> Self {
        Context {
            g,
            grid: grid.clone(),
            profile: classify(g),
            family: enumerate_fuzzy_family(g, grid, None, family_limit),
            chi: FuzzySubset::chi(g),
            kinds: Default::default(),
            endos: OnceLock::new(),
            subsets: OnceLock::new(),
            crisp: Default::default(),
        }
    }

    pub fn structure(&self) -> &GammaSemigroup {
        self.g
    }

    pub fn profile(&self) -> &StructureProfile {
        &self.profile
    }

    pub fn family(&self) -> &[FuzzySubset] {
        &self.family.members
    }

    /// Family members passing the fuzzy predicate of `kind`.
    pub fn members(&self, kind: IdealKind) -> Vec<&FuzzySubset> {
        let slot = IdealKind::ALL.iter().position(|&k| k == kind).expect("listed kind");
        self.kinds[slot]
            .get_or_init(|| {
                let fam = &self.family.members;
                (0..fam.len()).filter(|&i| self.is(kind, &fam[i])).collect()
            })
            .iter()
            .map(|&i| &self.family.members[i])
            .collect()
    }

    /// Fuzzy predicate; the zero function belongs to no kind.
    pub fn is(&self, kind: IdealKind, mu: &FuzzySubset) -> bool {
        self.g.check_fuzzy(kind, mu).unwrap_or(false)
    }

    fn endomorphisms(&self) -> Result<&[Homomorphism], GuardError> {
        match self.endos.get_or_init(|| enumerate_endomorphisms(self.g)) {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    fn nonempty_subsets(&self) -> Result<&[ElementSubset], GuardError> {
        let cached = self.subsets.get_or_init(|| self.g.nonempty_subsets().map(Iterator::collect));
        match cached {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    fn crisp_ideals(&self, kind: IdealKind) -> Result<&[ElementSubset], IdealError> {
        let slot = IdealKind::ALL.iter().position(|&k| k == kind).expect("listed kind");
        match self.crisp[slot].get_or_init(|| self.g.enumerate_crisp(kind)) {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    /// Runs one catalog entry; `instance` labels the report.
    pub fn run(&self, id: TheoremId, instance: &str) -> TheoremReport {
        let outcome = checks::check(self, id);
        let (status, family_size, witness, note) = match outcome {
            checks::Outcome::Verified { checked, note } => (Status::Verified, checked, None, note),
            checks::Outcome::Counter { checked, witness } => (Status::Counterexample, checked, Some(witness), None),
            checks::Outcome::NotMet(why) => (Status::HypothesisNotMet, 0, None, Some(why)),
            checks::Outcome::Skipped(why) => (Status::Skipped, 0, None, Some(why)),
        };
        TheoremReport {
            theorem: id,
            instance: instance.to_string(),
            status,
            family_size,
            grid: self.grid.to_string(),
            witness,
            note,
            truncated: self.family.truncated,
        }
    }
}

pub fn run_check(id: TheoremId, g: &GammaSemigroup, grid: &GradeGrid) -> TheoremReport {
    Context::new(g, grid, DEFAULT_FAMILY_LIMIT).run(id, "instance")
}

#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub id: String,
    pub structure: GammaSemigroup,
}

/// Every shape's associative tables, exhaustive where the candidate count
/// fits `budget` and sampled otherwise.
pub fn build_corpus(shapes: &[(usize, usize)], budget: u128, seed: u64) -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    for &(n, m) in shapes {
        let e = enumerate_all(n, m, budget, seed);
        out.extend(
            e.structures
                .into_iter()
                .enumerate()
                .map(|(i, structure)| CorpusInstance { id: format!("n{n}m{m}-{i:04}"), structure }),
        );
    }
    out
}

/// All `(n, m)` with `1 ≤ n ≤ max_n`, `1 ≤ m ≤ max_m`.
pub fn shapes_up_to(max_n: usize, max_m: usize) -> Vec<(usize, usize)> {
    (1..=max_n).flat_map(|n| (1..=max_m).map(move |m| (n, m))).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusEntry {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub table: Vec<Vec<Vec<usize>>>,
    pub canonical: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub version: u32,
    pub corpus: Vec<CorpusEntry>,
    pub results: Vec<TheoremReport>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub verified: usize,
    pub counterexample: usize,
    pub hypothesis_not_met: usize,
    pub skipped: usize,
}

impl CorpusReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &TheoremReport> {
        self.results.iter().filter(|r| r.status == Status::Counterexample)
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples().next().is_none()
    }

    /// Status counts per theorem, in catalog order.
    pub fn summary(&self) -> Vec<(TheoremId, StatusCounts)> {
        let mut rows: Vec<(TheoremId, StatusCounts)> = Vec::new();
        for r in &self.results {
            if rows.last().is_none_or(|(id, _)| *id != r.theorem) {
                rows.push((r.theorem, StatusCounts::default()));
            }
            let c = &mut rows.last_mut().expect("pushed").1;
            match r.status {
                Status::Verified => c.verified += 1,
                Status::Counterexample => c.counterexample += 1,
                Status::HypothesisNotMet => c.hypothesis_not_met += 1,
                Status::Skipped => c.skipped += 1,
            }
        }
        rows
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub grid: GradeGrid,
    pub theorems: Vec<TheoremId>,
    pub family_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            grid: GradeGrid::default(),
            theorems: TheoremId::ALL.to_vec(),
            family_limit: DEFAULT_FAMILY_LIMIT,
        }
    }
}

/// Runs every selected theorem on every instance; results are ordered by
/// theorem, then by corpus position.
pub fn verify_corpus(corpus: &[CorpusInstance], options: &VerifyOptions) -> CorpusReport {
    let contexts: Vec<Context<'_>> =
        corpus.par_iter().map(|inst| Context::new(&inst.structure, &options.grid, options.family_limit)).collect();
    let mut theorems = options.theorems.clone();
    theorems.sort();
    theorems.dedup();
    let jobs: Vec<(usize, usize)> = (0..theorems.len()).flat_map(|t| (0..corpus.len()).map(move |i| (t, i))).collect();
    let results = jobs.par_iter().map(|&(t, i)| contexts[i].run(theorems[t], &corpus[i].id)).collect();
    let entries = corpus
        .iter()
        .map(|inst| {
            let g = &inst.structure;
            CorpusEntry {
                id: inst.id.clone(),
                n: g.n(),
                m: g.m(),
                table: g.to_table_data().slices,
                canonical: canonicalize(g).ok().map(|c| c.to_table_data().slices),
            }
        })
        .collect();
    CorpusReport { version: REPORT_VERSION, corpus: entries, results }
}

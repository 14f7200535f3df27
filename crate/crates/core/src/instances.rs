//! Named Γ-semigroup families, exhaustive and sampled enumeration, and
//! canonical forms up to relabeling of `S` and `Γ`.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{GuardError, ValidationError};
use crate::semigroup::{associativity_violations, GammaSemigroup};

pub const CANONICAL_MAX_N: usize = 6;
pub const CANONICAL_MAX_M: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "constructor")]
pub enum InstanceSpec {
    /// `x γ y = x`.
    LeftZero {
        n: usize,
        m: usize,
    },
    /// `x γ y = y`.
    RightZero {
        n: usize,
        m: usize,
    },
    /// `Z_n` with `x γ y = x·γ·y mod n`, one parameter per listed γ.
    Modular {
        n: usize,
        gammas: Vec<usize>,
    },
    /// An ordinary semigroup `product[x][y]` with every γ acting as it.
    Lift {
        product: Vec<Vec<usize>>,
        m: usize,
    },
    Explicit {
        n: usize,
        m: usize,
        table: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

impl InstanceSpec {
    pub fn make(&self) -> Result<GammaSemigroup, InstanceError> {
        let param = |msg: String| Err(InstanceError::Parameters(msg));
        let g = match self {
            InstanceSpec::LeftZero { n, m } => GammaSemigroup::from_fn(*n, *m, |x, _, _| x)?,
            InstanceSpec::RightZero { n, m } => GammaSemigroup::from_fn(*n, *m, |_, _, y| y)?,
            InstanceSpec::Modular { n, gammas } => {
                if let Some(bad) = gammas.iter().find(|&&c| c == 0 || c >= *n) {
                    return param(format!("modular γ value {bad} not in 1..{}", n.saturating_sub(1)));
                }
                let gammas = gammas.clone();
                GammaSemigroup::from_fn(*n, gammas.len(), |x, c, y| x * gammas[c] % n * y % n)?
            }
            InstanceSpec::Lift { product, m } => {
                let n = product.len();
                if let Some(row) = product.iter().find(|r| r.len() != n) {
                    return param(format!("semigroup row of length {} in table of size {n}", row.len()));
                }
                if product.iter().flatten().any(|&v| v >= n) {
                    return param("semigroup entry out of range".into());
                }
                GammaSemigroup::from_fn(n, *m, |x, _, y| product[x][y])?
            }
            InstanceSpec::Explicit { n, m, table } => GammaSemigroup::from_flat(*n, *m, table.clone())?,
        };
        Ok(g)
    }

    pub fn label(&self) -> String {
        match self {
            InstanceSpec::LeftZero { n, m } => format!("left_zero({n},{m})"),
            InstanceSpec::RightZero { n, m } => format!("right_zero({n},{m})"),
            InstanceSpec::Modular { n, gammas } => format!("modular({n},[{}])", gammas.iter().join(",")),
            InstanceSpec::Lift { product, m } => format!("lift({},{m})", product.len()),
            InstanceSpec::Explicit { n, m, .. } => format!("explicit({n},{m})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum EnumerationMode {
    Exhaustive { candidates: u128 },
    Sampled { seed: u64, drawn: usize, accepted: usize },
}

impl EnumerationMode {
    /// Fraction of sampled tables that were associative.
    pub fn yield_rate(&self) -> Option<f64> {
        match *self {
            EnumerationMode::Sampled { drawn, accepted, .. } if drawn > 0 => Some(accepted as f64 / drawn as f64),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub n: usize,
    pub m: usize,
    pub mode: EnumerationMode,
    pub structures: Vec<GammaSemigroup>,
}

/// `n^(n·n·m)`, saturating.
pub fn candidate_count(n: usize, m: usize) -> u128 {
    let cells = (n * n * m) as u32;
    (n as u128).checked_pow(cells).unwrap_or(u128::MAX)
}

/// All associative tables of shape `(n, m)`, in lexicographic order of the
/// flat `[γ][x][y]` table, when the candidate count fits `budget`; otherwise
/// `budget` seeded uniform draws, keeping the distinct associative ones in
/// order of first appearance.
pub fn enumerate_all(n: usize, m: usize, budget: u128, seed: u64) -> Enumeration {
    let candidates = candidate_count(n, m);
    if candidates <= budget {
        let mut structures = Vec::new();
        for_each_associative(n, m, |table| {
            structures.push(GammaSemigroup::from_flat(n, m, table.to_vec()).expect("associative by construction"));
        });
        return Enumeration { n, m, mode: EnumerationMode::Exhaustive { candidates }, structures };
    }
    let draws = usize::try_from(budget).unwrap_or(usize::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | m as u64);
    let mut seen = std::collections::HashSet::new();
    let mut structures = Vec::new();
    let mut table = vec![0usize; n * n * m];
    for _ in 0..draws {
        table.iter_mut().for_each(|c| *c = rng.random_range(0..n));
        if associativity_violations(n, m, &table).is_empty() && seen.insert(table.clone()) {
            structures.push(GammaSemigroup::from_flat(n, m, table.clone()).expect("associative"));
        }
    }
    Enumeration { n, m, mode: EnumerationMode::Sampled { seed, drawn: draws, accepted: structures.len() }, structures }
}

/// Backtracking over table cells in flat order, pruning as soon as a fully
/// determined instance of the associative law fails.
pub fn for_each_associative(n: usize, m: usize, mut emit: impl FnMut(&[usize])) {
    if n == 0 || m == 0 {
        return;
    }
    const UNSET: usize = usize::MAX;
    let cells = n * n * m;
    let mut table = vec![UNSET; cells];
    let idx = |g: usize, x: usize, y: usize| (g * n + x) * n + y;

    // Every law instance whose four lookups are already set holds.
    let consistent = |table: &[usize]| -> bool {
        for b in 0..m {
            for x in 0..n {
                for y in 0..n {
                    let xy = table[idx(b, x, y)];
                    if xy == UNSET {
                        continue;
                    }
                    for c in 0..m {
                        for z in 0..n {
                            let yz = table[idx(c, y, z)];
                            if yz == UNSET {
                                continue;
                            }
                            let (l, r) = (table[idx(c, xy, z)], table[idx(b, x, yz)]);
                            if l != UNSET && r != UNSET && l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    };

    let mut cell = 0usize;
    loop {
        // advance the current cell to its next value
        let next = if table[cell] == UNSET { 0 } else { table[cell] + 1 };
        if next >= n {
            table[cell] = UNSET;
            if cell == 0 {
                return;
            }
            cell -= 1;
            continue;
        }
        table[cell] = next;
        if !consistent(&table) {
            continue;
        }
        if cell + 1 == cells {
            emit(&table);
        } else {
            cell += 1;
        }
    }
}

/// Lexicographically least flat table over all relabelings of `S` and `Γ`.
pub fn canonicalize(g: &GammaSemigroup) -> Result<GammaSemigroup, GuardError> {
    let (n, m) = (g.n(), g.m());
    if n > CANONICAL_MAX_N {
        return Err(GuardError { what: "canonicalization carrier size", limit: CANONICAL_MAX_N, actual: n });
    }
    if m > CANONICAL_MAX_M {
        return Err(GuardError { what: "canonicalization parameter count", limit: CANONICAL_MAX_M, actual: m });
    }
    let mut best: Option<Vec<usize>> = None;
    let mut buf = vec![0usize; n * n * m];
    for perm in (0..n).permutations(n) {
        for gperm in (0..m).permutations(m) {
            // relabeled x' = perm[x]; slot gperm[γ] holds old slice γ
            for c in 0..m {
                for x in 0..n {
                    for y in 0..n {
                        buf[(gperm[c] * n + perm[x]) * n + perm[y]] = perm[g.op(x, c, y)];
                    }
                }
            }
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
    }
    Ok(GammaSemigroup::from_flat(n, m, best.expect("at least one permutation")).expect("isomorphic copy is valid"))
}

pub fn is_isomorphic(a: &GammaSemigroup, b: &GammaSemigroup) -> Result<bool, GuardError> {
    if (a.n(), a.m()) != (b.n(), b.m()) {
        return Ok(false);
    }
    Ok(canonicalize(a)? == canonicalize(b)?)
}

/// Keep the first structure of every isomorphism class, preserving order.
pub fn dedupe_up_to_isomorphism(structures: Vec<GammaSemigroup>) -> Result<Vec<GammaSemigroup>, GuardError> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in structures {
        if seen.insert(canonicalize(&g)?.flat_table().to_vec()) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    #[test]
    fn named_families() {
        let lz = InstanceSpec::LeftZero { n: 2, m: 1 }.make().unwrap();
        assert!(classify(&lz).left_zero);
        let mod3 = InstanceSpec::Modular { n: 3, gammas: vec![1, 2] }.make().unwrap();
        assert_eq!(mod3.op(1, 1, 1), 2);
        let rz = InstanceSpec::Lift { product: vec![vec![0, 1], vec![0, 1]], m: 1 }.make().unwrap();
        assert!(classify(&rz).right_zero);
        let lifted = InstanceSpec::Lift { product: vec![vec![0, 1], vec![0, 1]], m: 3 }.make().unwrap();
        assert!((0..3).all(|c| lifted.op(0, c, 1) == 1));
        assert!(InstanceSpec::Modular { n: 3, gammas: vec![3] }.make().is_err());
        assert!(InstanceSpec::Lift { product: vec![vec![0], vec![0, 1]], m: 1 }.make().is_err());
        // 0·0 = 1 and every other product 0: (0·0)·1 = 0 but 0·(0·1) = 1.
        let bad = InstanceSpec::Lift { product: vec![vec![1, 0], vec![0, 0]], m: 1 };
        assert!(matches!(bad.make(), Err(InstanceError::Invalid(ValidationError::NotAssociative(_)))));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_all(2, 1, u128::MAX, 0).structures.len(), 8);
        for m in 1..=3 {
            assert_eq!(enumerate_all(1, m, u128::MAX, 0).structures.len(), 1);
        }
        assert_eq!(candidate_count(3, 1), 19683);
    }

    #[test]
    fn exhaustive_order_is_lexicographic() {
        let e = enumerate_all(2, 2, u128::MAX, 0);
        let tables: Vec<_> = e.structures.iter().map(|g| g.flat_table().to_vec()).collect();
        assert!(tables.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sampling_is_reproducible_and_valid() {
        let a = enumerate_all(3, 2, 2000, 7);
        let b = enumerate_all(3, 2, 2000, 7);
        assert!(matches!(a.mode, EnumerationMode::Sampled { drawn: 2000, .. }));
        assert_eq!(
            a.structures.iter().map(|g| g.flat_table().to_vec()).collect::<Vec<_>>(),
            b.structures.iter().map(|g| g.flat_table().to_vec()).collect::<Vec<_>>()
        );
        assert!(a.mode.yield_rate().is_some());
    }

    #[test]
    fn canonical_forms() {
        let lz = InstanceSpec::LeftZero { n: 2, m: 1 }.make().unwrap();
        let rz = InstanceSpec::RightZero { n: 2, m: 1 }.make().unwrap();
        let c = canonicalize(&lz).unwrap();
        assert_eq!(canonicalize(&c).unwrap(), c);
        assert_ne!(c, canonicalize(&rz).unwrap());
        // 0γ0 = 0, everything else 1 versus its relabeling.
        let a = GammaSemigroup::from_flat(2, 1, vec![0, 1, 1, 1]).unwrap();
        let b = GammaSemigroup::from_flat(2, 1, vec![0, 0, 0, 1]).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
        let big = InstanceSpec::LeftZero { n: 7, m: 1 }.make().unwrap();
        assert!(canonicalize(&big).is_err());
    }
}

//! Acceptance criteria, one line each. Runs as a plain binary so every line
//! is printed; the process exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;

use common::Grades;
use gamma_core::fuzzy::QuasiForm;
use gamma_core::instances::enumerate_all;
use gamma_core::morphism::enumerate_endomorphisms;
use gamma_core::verifier::{build_corpus, verify_corpus, Status, TheoremId, VerifyOptions};
use gamma_core::{FuzzySubset, GammaSemigroup, Grade, GradeGrid, IdealKind};
use rand::seq::IndexedRandom;
use rand::SeedableRng;

const SHAPES: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)];
const ALL_KINDS: [IdealKind; 7] = IdealKind::ALL;

struct Line {
    pass: bool,
    text: String,
}

fn line(pass: bool, text: String) -> Line {
    Line { pass, text }
}

fn fz(g: &GammaSemigroup, v: &[Grade]) -> FuzzySubset {
    FuzzySubset::new(g, v.to_vec()).unwrap()
}

fn corpus() -> Vec<GammaSemigroup> {
    build_corpus(&SHAPES, 1 << 20, 0).into_iter().map(|c| c.structure).collect()
}

fn criterion_1() -> Line {
    let corpus = build_corpus(&SHAPES, 1 << 20, 0);
    let report = verify_corpus(&corpus, &VerifyOptions::default());
    let bad: Vec<String> = report.counterexamples().map(|r| format!("{} on {}", r.theorem, r.instance)).collect();
    line(
        bad.is_empty(),
        format!(
            "corpus soundness: {} instances x {} theorems, {} counterexamples{}",
            corpus.len(),
            TheoremId::ALL.len(),
            bad.len(),
            if bad.is_empty() { String::new() } else { format!(" ({})", bad.join(", ")) }
        ),
    )
}

/// Disagreements of the composition and pointwise characterizations.
fn oracle_disagreements(g: &GammaSemigroup, levels: &[Grade]) -> usize {
    let n = g.n();
    let chi = common::ones(n);
    let mut bad = 0;
    for v in common::grid_family(n, levels) {
        let mu = fz(g, &v);
        let mm = common::compose(g, &v, &v);
        let sub = common::leq(&mm, &v);
        if g.check_fuzzy(IdealKind::Subsemigroup, &mu).unwrap() != sub {
            bad += 1;
        }
        let bi = sub && common::leq(&common::compose(g, &common::compose(g, &v, &chi), &v), &v);
        if g.check_fuzzy(IdealKind::Bi, &mu).unwrap() != bi {
            bad += 1;
        }
        let by_def = common::leq(&common::meet(&common::compose(g, &v, &chi), &common::compose(g, &chi, &v)), &v);
        for form in [QuasiForm::Min, QuasiForm::MaxMin] {
            if g.check_fuzzy_quasi_pointwise(&mu, form).unwrap() != by_def {
                bad += 1;
            }
        }
    }
    if n <= 3 {
        let full = (1u64 << n) - 1;
        for a in 0..=full {
            for b in 0..=full {
                let ca = FuzzySubset::characteristic(&g.subset_from_mask(a).unwrap());
                let cb = FuzzySubset::characteristic(&g.subset_from_mask(b).unwrap());
                let got = g.compose(&ca, &cb).unwrap();
                if got.grades() != &common::characteristic(common::product(g, a, b), n)[..] {
                    bad += 1;
                }
                let sa = g.subset_from_mask(a).unwrap();
                let sb = g.subset_from_mask(b).unwrap();
                let prod = g.subset_product(&sa, &sb).unwrap();
                let naive = common::compose(g, &common::characteristic(a, n), &common::characteristic(b, n));
                if common::characteristic(prod.mask(), n) != naive {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// Disagreements between a fuzzy predicate and its level sets.
fn level_disagreements(g: &GammaSemigroup, levels: &[Grade]) -> usize {
    let mut bad = 0;
    for v in common::grid_family(g.n(), levels) {
        let mu = fz(g, &v);
        for kind in ALL_KINDS {
            let cuts = mu.image_values().into_iter().all(|t| {
                let cut = mu.level_set(g, t).unwrap();
                g.check_crisp(kind, &cut).unwrap()
            });
            if g.check_fuzzy(kind, &mu).unwrap() != cuts {
                bad += 1;
            }
        }
    }
    bad
}

/// Disagreements between a crisp predicate and the characteristic function.
fn bridge_disagreements(g: &GammaSemigroup) -> usize {
    let mut bad = 0;
    for a in 1..(1u64 << g.n()) {
        let s = g.subset_from_mask(a).unwrap();
        let chi = FuzzySubset::characteristic(&s);
        for kind in ALL_KINDS {
            if g.check_crisp(kind, &s).unwrap() != g.check_fuzzy(kind, &chi).unwrap() {
                bad += 1;
            }
        }
    }
    bad
}

fn criterion_2(corpus: &[GammaSemigroup]) -> Line {
    let levels = common::uniform_levels(3);
    let bad: usize = corpus.iter().map(|g| oracle_disagreements(g, &levels)).sum();
    line(bad == 0, format!("oracle equivalences: {bad} disagreements over {} instances", corpus.len()))
}

fn criterion_3(corpus: &[GammaSemigroup]) -> Line {
    let levels = common::uniform_levels(3);
    let bad: usize = corpus.iter().map(|g| level_disagreements(g, &levels)).sum();
    line(bad == 0, format!("level-set bridges: {bad} disagreements"))
}

fn criterion_4(corpus: &[GammaSemigroup]) -> Line {
    let bad: usize = corpus.iter().map(bridge_disagreements).sum();
    line(bad == 0, format!("crisp-fuzzy bridges: {bad} disagreements"))
}

fn regular(g: &GammaSemigroup) -> bool {
    g.elements().all(|a| g.elements().any(|x| g.gammas().any(|b| g.gammas().any(|c| g.op(g.op(a, b, x), c, a) == a))))
}

fn criterion_5(corpus: &[GammaSemigroup]) -> Line {
    let levels = common::uniform_levels(3);
    let (mut regular_count, mut failures) = (0, 0);
    for g in corpus {
        let family = common::grid_family(g.n(), &levels);
        let of = |k| family.iter().filter(|v| common::fuzzy(g, k, v)).cloned().collect::<Vec<Grades>>();
        let (rights, lefts, quasis) = (of(IdealKind::Right), of(IdealKind::Left), of(IdealKind::Quasi));
        let chi = common::ones(g.n());
        let pairs_ok = rights.iter().all(|r| lefts.iter().all(|l| common::compose(g, r, l) == common::meet(r, l)));
        let sandwich_ok = quasis.iter().all(|d| common::compose(g, &common::compose(g, d, &chi), d) == *d);
        if regular(g) {
            regular_count += 1;
            if !(pairs_ok && sandwich_ok) {
                failures += 1;
            }
        } else if pairs_ok || sandwich_ok {
            failures += 1;
        }
    }
    let report = verify_corpus(
        &build_corpus(&SHAPES, 1 << 20, 0),
        &VerifyOptions { theorems: vec![TheoremId::T5_13], ..VerifyOptions::default() },
    );
    let verifier_bad = report.results.iter().filter(|r| r.status != Status::Verified).count();
    line(
        failures == 0 && verifier_bad == 0,
        format!(
            "regularity characterization: {regular_count} regular of {}, {failures} oracle failures, {verifier_bad} verifier failures",
            corpus.len()
        ),
    )
}

const GRID_SENSITIVE: [TheoremId; 11] = [
    TheoremId::T3_4,
    TheoremId::T3_5,
    TheoremId::T3_6,
    TheoremId::T3_7,
    TheoremId::T3_12,
    TheoremId::T3_13,
    TheoremId::L5_12,
    TheoremId::T5_6,
    TheoremId::T5_7,
    TheoremId::T5_17,
    TheoremId::T5_18,
];

fn criterion_6() -> Line {
    let mut pool = enumerate_all(3, 1, 1 << 20, 0).structures;
    pool.extend(enumerate_all(3, 2, 1 << 20, 0).structures);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let picks: Vec<&GammaSemigroup> = pool.choose_multiple(&mut rng, 5).collect();
    let corpus: Vec<_> = picks
        .iter()
        .enumerate()
        .map(|(i, g)| gamma_core::verifier::CorpusInstance { id: format!("pick-{i}"), structure: (*g).clone() })
        .collect();
    let statuses = |levels: usize| {
        let options = VerifyOptions {
            grid: GradeGrid::uniform(levels).unwrap(),
            theorems: GRID_SENSITIVE.to_vec(),
            ..VerifyOptions::default()
        };
        verify_corpus(&corpus, &options).results.iter().map(|r| r.status).collect::<Vec<_>>()
    };
    let tally = |levels: usize| {
        let grid = common::uniform_levels(levels);
        picks
            .iter()
            .map(|g| (oracle_disagreements(g, &grid), level_disagreements(g, &grid), bridge_disagreements(g)))
            .collect::<Vec<_>>()
    };
    let (s3, s4) = (statuses(3), statuses(4));
    let (t3, t4) = (tally(3), tally(4));
    let clean = t3.iter().chain(&t4).all(|&t| t == (0, 0, 0)) && s3.iter().all(|&s| s == Status::Verified);
    line(
        clean && s3 == s4 && t3 == t4,
        format!(
            "complete-mode spot check: 5 instances with n=3, grids of 3 and 4 levels agree: {}",
            s3 == s4 && t3 == t4
        ),
    )
}

fn criterion_7() -> Line {
    let got = enumerate_all(2, 1, 1 << 20, 0).structures.len();
    let naive = common::count_associative(2, 1);
    line(got == 8 && naive == 8, format!("enumeration counts: enumerate_all(2,1) = {got}, naive recount = {naive}"))
}

fn criterion_8(corpus: &[GammaSemigroup]) -> Line {
    let levels = common::uniform_levels(3);
    let (mut maps, mut failures) = (0usize, 0usize);
    for g in corpus.iter().filter(|g| g.n() <= 3) {
        let n = g.n();
        let endos = common::endomorphisms(g);
        let library: Vec<Vec<usize>> = enumerate_endomorphisms(g).unwrap().iter().map(|f| f.map().to_vec()).collect();
        if library != endos {
            failures += 1;
        }
        maps += endos.len();
        let family = common::grid_family(n, &levels);
        let chi = common::ones(n);
        for f in &endos {
            let surjective = (0..n).all(|y| f.contains(&y));
            for v in &family {
                let back: Grades = (0..n).map(|x| v[f[x]]).collect();
                let push: Grades =
                    (0..n).map(|y| (0..n).filter(|&x| f[x] == y).map(|x| v[x]).max().unwrap_or(Grade::ZERO)).collect();
                for kind in
                    [IdealKind::Subsemigroup, IdealKind::Bi, IdealKind::Left, IdealKind::Right, IdealKind::Quasi]
                {
                    if !common::fuzzy(g, kind, v) {
                        continue;
                    }
                    let nonzero = back.iter().any(|t| !t.is_zero());
                    if nonzero && !common::fuzzy(g, kind, &back) {
                        failures += 1;
                    }
                    if surjective && !common::fuzzy(g, kind, &push) {
                        failures += 1;
                    }
                    let absorbs = |h: &Grades, c: &Grades| match kind {
                        IdealKind::Left => common::leq(&common::compose(g, c, h), h),
                        IdealKind::Right => common::leq(&common::compose(g, h, c), h),
                        _ => true,
                    };
                    if nonzero && !absorbs(&back, &chi) {
                        failures += 1;
                    }
                    let pushed_chi: Grades =
                        (0..n).map(|y| if f.contains(&y) { Grade::ONE } else { Grade::ZERO }).collect();
                    if surjective && !absorbs(&push, &pushed_chi) {
                        failures += 1;
                    }
                }
            }
        }
    }
    let small: Vec<_> = build_corpus(&SHAPES, 1 << 20, 0).into_iter().filter(|c| c.structure.n() <= 3).collect();
    let options = VerifyOptions {
        theorems: vec![
            TheoremId::P3_9,
            TheoremId::P3_10,
            TheoremId::P5_8,
            TheoremId::P5_9,
            TheoremId::P5_10,
            TheoremId::P5_11,
        ],
        ..VerifyOptions::default()
    };
    let verifier_bad = verify_corpus(&small, &options).counterexamples().count();
    line(
        failures == 0 && verifier_bad == 0,
        format!("morphism transport: {maps} endomorphisms, {failures} oracle failures, {verifier_bad} verifier counterexamples"),
    )
}

fn main() -> ExitCode {
    let corpus = corpus();
    let lines = [
        criterion_1(),
        criterion_2(&corpus),
        criterion_3(&corpus),
        criterion_4(&corpus),
        criterion_5(&corpus),
        criterion_6(),
        criterion_7(),
        criterion_8(&corpus),
    ];
    for (i, l) in lines.iter().enumerate() {
        println!("{} criterion {}: {}", if l.pass { "PASS" } else { "FAIL" }, i + 1, l.text);
    }
    let failed = lines.iter().filter(|l| !l.pass).count();
    println!("acceptance: {} passed, {failed} failed", lines.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

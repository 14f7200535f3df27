use super::{Context, TheoremId, Witness};
use crate::classify::{intra_regular_witness, left_regular_witness, regular_witness, right_regular_witness};
use crate::fuzzy::{FuzzySubset, QuasiForm};
use crate::ideal::IdealKind::{self, Bi, Left, OneTwo, Quasi, Right, Subsemigroup as Sub, TwoSided};
use crate::morphism::Homomorphism;
use crate::subset::ElementSubset;

pub(crate) enum Outcome {
    Verified { checked: usize, note: Option<String> },
    Counter { checked: usize, witness: Witness },
    NotMet(String),
    Skipped(String),
}

/// `Ok` when a condition holds, otherwise the evidence that it fails.
type Side = Result<(), Witness>;
type Finder = fn(&crate::semigroup::GammaSemigroup, usize) -> Option<(usize, usize, usize)>;

fn verified(checked: usize) -> Outcome {
    Outcome::Verified { checked, note: None }
}

fn settle(checked: usize, side: Side) -> Outcome {
    match side {
        Ok(()) => verified(checked),
        Err(witness) => Outcome::Counter { checked, witness },
    }
}

/// Both conditions hold or both fail; a disagreement reports the evidence of
/// the failing one.
fn iff(a_name: &str, a: Side, b_name: &str, b: Side) -> Side {
    match (a, b) {
        (Ok(()), Ok(())) | (Err(_), Err(_)) => Ok(()),
        (Ok(()), Err(w)) => Err(w.prefixed(format!("{a_name} holds but {b_name} fails"))),
        (Err(w), Ok(())) => Err(w.prefixed(format!("{b_name} holds but {a_name} fails"))),
    }
}

fn flag(holds: bool, name: &str) -> Side {
    if holds {
        Ok(())
    } else {
        Err(Witness::text(format!("not {name}")))
    }
}

/// First item for which `bad` returns a description becomes the witness.
fn all<'b, T: 'b>(items: impl IntoIterator<Item = T>, mut bad: impl FnMut(T) -> Option<Witness>) -> Side {
    for it in items {
        if let Some(w) = bad(it) {
            return Err(w);
        }
    }
    Ok(())
}

fn fz(desc: impl Into<String>, mu: &FuzzySubset) -> Witness {
    Witness::text(desc).with_fuzzy(mu)
}

/// Collects independent sub-statements whose applicability depends on the
/// instance; any failure fails the whole entry.
struct Variants {
    applied: Vec<&'static str>,
    failure: Option<Witness>,
}

impl Variants {
    fn new() -> Self {
        Variants { applied: Vec::new(), failure: None }
    }

    fn run(&mut self, name: &'static str, applies: bool, side: impl FnOnce() -> Side) {
        if !applies {
            return;
        }
        self.applied.push(name);
        if self.failure.is_none() {
            if let Err(w) = side() {
                self.failure = Some(w.prefixed(name));
            }
        }
    }

    fn finish(self, checked: usize, unmet: &str) -> Outcome {
        match (self.failure, self.applied.is_empty()) {
            (Some(witness), _) => Outcome::Counter { checked, witness },
            (None, true) => Outcome::NotMet(unmet.to_string()),
            (None, false) => Outcome::Verified { checked, note: Some(format!("checked: {}", self.applied.join(", "))) },
        }
    }
}

impl Context<'_> {
    fn comp(&self, a: &FuzzySubset, b: &FuzzySubset) -> FuzzySubset {
        self.g.compose(a, b).expect("same structure")
    }

    fn comp3(&self, a: &FuzzySubset, b: &FuzzySubset, c: &FuzzySubset) -> FuzzySubset {
        self.g.compose_chain(&[a, b, c]).expect("same structure")
    }

    fn idempotent(&self, mu: &FuzzySubset) -> bool {
        self.comp(mu, mu) == *mu
    }

    fn regular_side(&self) -> Side {
        match self.g.elements().find(|&a| regular_witness(self.g, a).is_none()) {
            None => Ok(()),
            Some(a) => Err(Witness::text("element with no regularity witness").with_element(a)),
        }
    }

    fn intra_side(&self) -> Side {
        match self.g.elements().find(|&a| intra_regular_witness(self.g, a).is_none()) {
            None => Ok(()),
            Some(a) => Err(Witness::text("element with no intra-regularity witness").with_element(a)),
        }
    }

    fn regular_and_intra_side(&self) -> Side {
        self.regular_side().and_then(|()| self.intra_side())
    }

    /// Every member of `kind` is also of kind `other`.
    fn contained(&self, kind: IdealKind, other: IdealKind) -> Side {
        all(self.members(kind), |mu| {
            (!self.is(other, mu)).then(|| fz(format!("fuzzy {kind} but not fuzzy {other}"), mu))
        })
    }

    fn constant_members(&self, kind: IdealKind) -> Side {
        all(self.members(kind), |mu| (!mu.is_constant()).then(|| fz(format!("non-constant fuzzy {kind}"), mu)))
    }

    /// Right and left parts of the canonical decomposition of a fuzzy quasi ideal.
    fn decompose(&self, mu: &FuzzySubset) -> (FuzzySubset, FuzzySubset) {
        let right = mu.join(&self.comp(mu, &self.chi)).expect("same structure");
        let left = self.comp(&self.chi, mu).join(mu).expect("same structure");
        (right, left)
    }

    fn pairs<'s>(
        &'s self,
        a: IdealKind,
        b: IdealKind,
    ) -> impl Iterator<Item = (&'s FuzzySubset, &'s FuzzySubset)> + 's {
        let left = self.members(a);
        let right = self.members(b);
        left.into_iter().flat_map(move |x| right.clone().into_iter().map(move |y| (x, y)))
    }
}

pub(crate) fn check(ctx: &Context<'_>, id: TheoremId) -> Outcome {
    use TheoremId::*;
    let n_family = ctx.family().len();
    match id {
        T3_4 => crisp_bridge(ctx, &[Sub, Left, Right, TwoSided]),
        T3_5 => crisp_bridge(ctx, &[Bi]),
        T5_6 => crisp_bridge(ctx, &[Quasi]),
        T3_6 => level_bridge(ctx, Sub),
        T3_7 => level_bridge(ctx, Bi),
        T5_7 => level_bridge(ctx, Quasi),
        P3_8 => settle(n_family, meets_closed(ctx)),
        P3_9 => transport(ctx, false),
        P3_10 => transport(ctx, true),
        P3_11 => settle(n_family, powers(ctx)),
        T3_12 => settle(
            n_family,
            all(ctx.family(), |mu| {
                let by_def = ctx.is(Sub, mu);
                let by_comp = ctx.comp(mu, mu).leq(mu).expect("same structure");
                (by_def != by_comp).then(|| fz(format!("predicate {by_def}, composition form {by_comp}"), mu))
            }),
        ),
        T3_13 => settle(
            n_family,
            all(ctx.family(), |mu| {
                let by_def = ctx.is(Bi, mu);
                let by_comp = ctx.comp(mu, mu).leq(mu).expect("same structure")
                    && ctx.comp3(mu, &ctx.chi, mu).leq(mu).expect("same structure");
                (by_def != by_comp).then(|| fz(format!("predicate {by_def}, composition form {by_comp}"), mu))
            }),
        ),
        T4_7 => duo_equivalence(ctx, |ctx, kind| {
            all(ctx.family(), |mu| {
                let (a, b) = (ctx.is(kind, mu), ctx.is(Bi, mu));
                (a != b).then(|| fz(format!("fuzzy {kind} {a}, fuzzy bi {b}"), mu))
            })
        }),
        T4_8 => duo_equivalence(ctx, |ctx, _| {
            all(ctx.family(), |mu| {
                let (a, b) = (ctx.is(Bi, mu), ctx.is(OneTwo, mu));
                (a != b).then(|| fz(format!("fuzzy bi {a}, fuzzy one_two {b}"), mu))
            })
        }),
        T4_9 => {
            if ctx.regular_side().is_err() {
                return Outcome::NotMet("not regular".into());
            }
            let p = ctx.profile();
            let both = || ctx.contained(Left, TwoSided).and_then(|()| ctx.contained(Right, TwoSided));
            let mut v = Variants::new();
            v.run("left", true, || {
                iff("left duo", flag(p.left_duo, "left duo"), "fuzzy left duo", ctx.contained(Left, TwoSided))
            });
            v.run("right", true, || {
                iff("right duo", flag(p.right_duo, "right duo"), "fuzzy right duo", ctx.contained(Right, TwoSided))
            });
            v.run("duo", true, || iff("duo", flag(p.duo, "duo"), "fuzzy duo", both()));
            v.finish(n_family, "not regular")
        }
        T4_10 => bi_ideals_one_sided(ctx),
        P4_13 => {
            let p = ctx.profile();
            let mut v = Variants::new();
            v.run("left zero", p.left_zero, || ctx.constant_members(Left));
            v.run("right zero", p.right_zero, || ctx.constant_members(Right));
            v.finish(n_family, "neither left zero nor right zero")
        }
        T4_14 => idempotent_zero(ctx),
        C4_15 => {
            let p = ctx.profile();
            if !p.idempotents.is_full() {
                return Outcome::NotMet("some element is not idempotent".into());
            }
            let mut v = Variants::new();
            let all_elements = ctx.g.full_subset();
            v.run("left", true, || {
                iff("left zero", zero_on(ctx, &all_elements, true), "constancy", ctx.constant_members(Left))
            });
            v.run("right", true, || {
                iff("right zero", zero_on(ctx, &all_elements, false), "constancy", ctx.constant_members(Right))
            });
            v.finish(n_family, "")
        }
        T4_17 => squares(ctx),
        T4_18 => {
            let g = ctx.g;
            let side = |f: Finder, name: &str| match g.elements().find(|&a| f(g, a).is_none()) {
                None => Ok(()),
                Some(a) => Err(Witness::text(format!("element with no {name} witness")).with_element(a)),
            };
            let mut v = Variants::new();
            v.run("left", true, || {
                iff(
                    "left regular",
                    side(left_regular_witness, "left regularity"),
                    "square condition",
                    square_condition(ctx, Left),
                )
            });
            v.run("right", true, || {
                iff(
                    "right regular",
                    side(right_regular_witness, "right regularity"),
                    "square condition",
                    square_condition(ctx, Right),
                )
            });
            v.finish(n_family, "")
        }
        P4_19 => {
            if ctx.regular_and_intra_side().is_err() {
                return Outcome::NotMet("not both regular and intra-regular".into());
            }
            settle(
                n_family,
                all(ctx.pairs(Bi, Bi), |(a, b)| {
                    let meet = a.meet(b).expect("same structure");
                    let ab = ctx.comp(a, b);
                    let ba = ctx.comp(b, a);
                    let both = ab.meet(&ba).expect("same structure");
                    (!meet.leq(&ab).expect("same structure") || !meet.leq(&both).expect("same structure"))
                        .then(|| Witness::text("composite below the meet").with_fuzzy(a).with_fuzzy(b))
                }),
            )
        }
        T4_24 => {
            let p = ctx.profile();
            let mut v = Variants::new();
            v.run("left", true, || {
                iff("left simple", flag(p.left_simple, "left simple"), "constancy", ctx.constant_members(Left))
            });
            v.run("right", true, || {
                iff("right simple", flag(p.right_simple, "right simple"), "constancy", ctx.constant_members(Right))
            });
            v.run("two-sided", true, || {
                iff("simple", flag(p.simple, "simple"), "constancy", ctx.constant_members(TwoSided))
            });
            v.finish(n_family, "")
        }
        T4_25 => {
            let p = ctx.profile();
            let mut v = Variants::new();
            v.run("left simple", p.left_simple, || ctx.contained(Bi, Right));
            v.run("right simple", p.right_simple, || ctx.contained(Bi, Left));
            v.finish(n_family, "neither left simple nor right simple")
        }
        P5_2 => settle(
            n_family,
            all(ctx.family(), |mu| {
                let one_sided = ctx.is(Left, mu) || ctx.is(Right, mu);
                let quasi = ctx.is(Quasi, mu);
                if one_sided && !quasi {
                    Some(fz("one-sided but not quasi", mu))
                } else if quasi && !ctx.is(Bi, mu) {
                    Some(fz("quasi but not bi", mu))
                } else {
                    None
                }
            }),
        ),
        P5_3 => settle(n_family, quasi_decomposition(ctx)),
        C5_4 => regular_products(ctx, Quasi),
        P5_5 => regular_products(ctx, Bi),
        P5_8 => pullback_one_sided(ctx),
        P5_9 => pullback_quasi(ctx),
        P5_10 => pushforward_one_sided(ctx),
        P5_11 => pushforward_quasi(ctx),
        L5_12 => characteristic_lemma(ctx),
        T5_13 => regularity_characterization(ctx),
        T5_14 => match ctx.crisp_ideals(Quasi) {
            Err(e) => Outcome::Skipped(e.to_string()),
            Ok(qs) => settle(
                qs.len(),
                iff(
                    "regular and intra-regular",
                    ctx.regular_and_intra_side(),
                    "quasi idempotency",
                    crisp_quasi_idempotent(ctx, qs),
                ),
            ),
        },
        T5_15 => match ctx.crisp_ideals(Quasi) {
            Err(e) => Outcome::Skipped(e.to_string()),
            Ok(qs) => settle(
                n_family,
                iff(
                    "quasi idempotency",
                    crisp_quasi_idempotent(ctx, qs),
                    "fuzzy quasi idempotency",
                    fuzzy_idempotent(ctx, Quasi),
                ),
            ),
        },
        T5_16 => {
            let base = ctx.regular_and_intra_side();
            settle(
                n_family,
                iff("regular and intra-regular", base.clone(), "fuzzy quasi idempotency", fuzzy_idempotent(ctx, Quasi))
                    .and_then(|()| {
                        iff("regular and intra-regular", base, "fuzzy bi idempotency", fuzzy_idempotent(ctx, Bi))
                    }),
            )
        }
        T5_17 => pointwise_quasi(ctx, QuasiForm::Min),
        T5_18 => pointwise_quasi(ctx, QuasiForm::MaxMin),
    }
}

fn crisp_bridge(ctx: &Context<'_>, kinds: &[IdealKind]) -> Outcome {
    let subsets = match ctx.nonempty_subsets() {
        Ok(s) => s,
        Err(e) => return Outcome::Skipped(e.to_string()),
    };
    let side = all(subsets, |a| {
        let chi = FuzzySubset::characteristic(a);
        kinds.iter().find_map(|&k| {
            let crisp = ctx.g.check_crisp(k, a).expect("non-empty");
            let fuzzy = ctx.is(k, &chi);
            (crisp != fuzzy)
                .then(|| Witness::text(format!("{k}: subset {crisp}, characteristic function {fuzzy}")).with_subset(a))
        })
    });
    settle(subsets.len(), side)
}

fn level_bridge(ctx: &Context<'_>, kind: IdealKind) -> Outcome {
    let side = all(ctx.family(), |mu| {
        let fuzzy = ctx.is(kind, mu);
        let failing_cut = mu.image_values().into_iter().find_map(|t| {
            let cut = mu.level_set(ctx.g, t).expect("same structure");
            (!ctx.g.check_crisp(kind, &cut).expect("attained level is non-empty")).then_some(cut)
        });
        match (fuzzy, failing_cut) {
            (true, Some(cut)) => Some(fz(format!("fuzzy {kind} with a level set that is not"), mu).with_subset(&cut)),
            (false, None) => Some(fz(format!("every level set is {kind} but the fuzzy subset is not"), mu)),
            _ => None,
        }
    });
    settle(ctx.family().len(), side)
}

fn meets_closed(ctx: &Context<'_>) -> Side {
    [Sub, Bi].into_iter().try_for_each(|kind| {
        all(ctx.pairs(kind, kind), |(a, b)| {
            let m = a.meet(b).expect("same structure");
            (m.has_support() && !ctx.is(kind, &m))
                .then(|| Witness::text(format!("meet of two fuzzy {kind} is not one")).with_fuzzy(a).with_fuzzy(b))
        })
    })
}

/// Pullback (or endomorphism composite) and surjective pushforward of fuzzy
/// subsemigroups and bi-ideals. A transported function that vanishes
/// everywhere satisfies the defining inequalities and is only counted.
fn transport(ctx: &Context<'_>, endo_only: bool) -> Outcome {
    let endos = match ctx.endomorphisms() {
        Ok(e) => e,
        Err(e) => return Outcome::Skipped(e.to_string()),
    };
    let mut vanished = 0usize;
    let side = [Sub, Bi].into_iter().try_for_each(|kind| {
        all(endos.iter().flat_map(|f| ctx.members(kind).into_iter().map(move |mu| (f, mu))), |(f, mu)| {
            let back = if endo_only { f.endo_transport(mu) } else { f.pullback(mu) }.expect("same structure");
            if !back.has_support() {
                vanished += 1;
            } else if !ctx.is(kind, &back) {
                return Some(fz(format!("transport of a fuzzy {kind} is not one"), mu).with_map(f));
            }
            if !endo_only && f.is_surjective() {
                let push = f.pushforward(mu).expect("surjective");
                if !ctx.is(kind, &push) {
                    return Some(fz(format!("pushforward of a fuzzy {kind} is not one"), mu).with_map(f));
                }
            }
            None
        })
    });
    match settle(ctx.family().len(), side) {
        Outcome::Verified { checked, .. } => Outcome::Verified {
            checked,
            note: Some(format!("{} endomorphisms, {vanished} transports vanish identically", endos.len())),
        },
        other => other,
    }
}

fn powers(ctx: &Context<'_>) -> Side {
    [Sub, Bi].into_iter().try_for_each(|kind| {
        all(ctx.members(kind), |mu| {
            (0..=3u32).find_map(|k| {
                let p = mu.power(k).expect("small powers of grid grades fit");
                (!ctx.is(kind, &p)).then(|| fz(format!("power {k} of a fuzzy {kind} is not one"), mu))
            })
        })
    })
}

fn duo_equivalence(ctx: &Context<'_>, side: impl Fn(&Context<'_>, IdealKind) -> Side) -> Outcome {
    if ctx.regular_side().is_err() {
        return Outcome::NotMet("not regular".into());
    }
    let p = ctx.profile();
    let mut v = Variants::new();
    v.run("left duo", p.left_duo, || side(ctx, Right));
    v.run("right duo", p.right_duo, || side(ctx, Left));
    v.run("duo", p.duo, || side(ctx, TwoSided));
    v.finish(ctx.family().len(), "regular but neither left nor right duo")
}

fn bi_ideals_one_sided(ctx: &Context<'_>) -> Outcome {
    if ctx.regular_side().is_err() {
        return Outcome::NotMet("not regular".into());
    }
    let bis = match ctx.crisp_ideals(Bi) {
        Ok(b) => b,
        Err(e) => return Outcome::Skipped(e.to_string()),
    };
    let mut v = Variants::new();
    for (name, kind) in [("right", Right), ("left", Left), ("two-sided", TwoSided)] {
        v.run(name, true, || {
            let crisp = all(bis, |b| {
                (!ctx.g.check_crisp(kind, b).expect("non-empty"))
                    .then(|| Witness::text(format!("bi-ideal that is not {kind}")).with_subset(b))
            });
            iff("crisp condition", crisp, "fuzzy condition", ctx.contained(Bi, kind))
        });
    }
    v.finish(ctx.family().len(), "")
}

fn idempotent_zero(ctx: &Context<'_>) -> Outcome {
    if ctx.regular_side().is_err() {
        return Outcome::NotMet("not regular".into());
    }
    let es = &ctx.profile().idempotents;
    let constant_on_es = |kind: IdealKind| {
        all(ctx.members(kind), |mu| {
            let mut grades = es.iter().map(|e| mu.grade(e));
            let first = grades.next();
            grades.any(|g| Some(g) != first).then(|| fz(format!("fuzzy {kind} not constant on idempotents"), mu))
        })
    };
    let mut v = Variants::new();
    for (name, left, kind) in [("left", true, Left), ("right", false, Right)] {
        v.run(name, true, || {
            iff(
                "zero subsemigroup of idempotents",
                zero_on(ctx, &ctx.profile().idempotents, left),
                "constancy on idempotents",
                constant_on_es(kind),
            )
        });
    }
    v.finish(ctx.family().len(), "")
}

/// `e γ f = e` (or `= f`) on all of `es`; the first offending `(e, γ, f)` is
/// the witness. An empty set fails.
fn zero_on(ctx: &Context<'_>, es: &ElementSubset, left: bool) -> Side {
    let g = ctx.g;
    if es.is_empty() {
        return Err(Witness::text("no idempotents"));
    }
    let side = if left { "left" } else { "right" };
    // closure under products is automatic once the zero law holds
    for e in es.iter() {
        for f in es.iter() {
            for c in g.gammas() {
                if g.op(e, c, f) != if left { e } else { f } {
                    return Err(Witness::text(format!("not {side} zero at (e, γ, f)"))
                        .with_element(e)
                        .with_element(c)
                        .with_element(f));
                }
            }
        }
    }
    Ok(())
}

/// `μ(a) = μ(a β a)` for some β at each a, over the members of `kind`.
fn square_condition(ctx: &Context<'_>, kind: IdealKind) -> Side {
    all(ctx.members(kind), |mu| {
        ctx.g
            .elements()
            .find(|&a| !ctx.g.gammas().any(|b| mu.grade(ctx.g.op(a, b, a)) == mu.grade(a)))
            .map(|a| fz(format!("fuzzy {kind} with mu(a) != mu(a b a) for every b"), mu).with_element(a))
    })
}

fn squares(ctx: &Context<'_>) -> Outcome {
    let main = iff("intra-regular", ctx.intra_side(), "square condition", square_condition(ctx, TwoSided));
    let g = ctx.g;
    let global = ctx
        .members(TwoSided)
        .into_iter()
        .all(|mu| g.gammas().any(|b| g.elements().all(|a| mu.grade(g.op(a, b, a)) == mu.grade(a))));
    match settle(ctx.family().len(), main) {
        Outcome::Verified { checked, .. } => Outcome::Verified {
            checked,
            note: Some(format!("single-parameter reading {}", if global { "holds" } else { "fails" })),
        },
        other => other,
    }
}

fn quasi_decomposition(ctx: &Context<'_>) -> Side {
    all(ctx.members(Quasi), |mu| {
        let (right, left) = ctx.decompose(mu);
        if !ctx.is(Right, &right) {
            Some(fz("right part is not a fuzzy right ideal", mu))
        } else if !ctx.is(Left, &left) {
            Some(fz("left part is not a fuzzy left ideal", mu))
        } else if right.meet(&left).expect("same structure") != *mu {
            Some(fz("meet of the parts differs", mu))
        } else {
            None
        }
    })?;
    all(ctx.pairs(Right, Left), |(r, l)| {
        let m = r.meet(l).expect("same structure");
        (!ctx.is(Quasi, &m))
            .then(|| Witness::text("meet of a fuzzy right and left ideal is not quasi").with_fuzzy(r).with_fuzzy(l))
    })?;
    all(ctx.family(), |mu| {
        let left = ctx.comp(&ctx.chi, mu).leq(mu).expect("same structure");
        let right = ctx.comp(mu, &ctx.chi).leq(mu).expect("same structure");
        if left != ctx.is(Left, mu) {
            Some(fz("left predicate disagrees with chi o mu <= mu", mu))
        } else if right != ctx.is(Right, mu) {
            Some(fz("right predicate disagrees with mu o chi <= mu", mu))
        } else {
            None
        }
    })
}

fn regular_products(ctx: &Context<'_>, kind: IdealKind) -> Outcome {
    if ctx.regular_side().is_err() {
        return Outcome::NotMet("not regular".into());
    }
    settle(
        ctx.family().len(),
        all(ctx.pairs(Right, Left), |(r, l)| {
            (!ctx.is(kind, &ctx.comp(r, l)))
                .then(|| Witness::text(format!("composite is not fuzzy {kind}")).with_fuzzy(r).with_fuzzy(l))
        }),
    )
}

fn with_endos(ctx: &Context<'_>, surjective_only: bool, body: impl FnOnce(&[&Homomorphism]) -> Side) -> Outcome {
    match ctx.endomorphisms() {
        Err(e) => Outcome::Skipped(e.to_string()),
        Ok(endos) => {
            let chosen: Vec<&Homomorphism> = endos.iter().filter(|f| !surjective_only || f.is_surjective()).collect();
            match settle(ctx.family().len(), body(&chosen)) {
                Outcome::Verified { checked, .. } => {
                    Outcome::Verified { checked, note: Some(format!("{} maps", chosen.len())) }
                }
                other => other,
            }
        }
    }
}

fn pullback_one_sided(ctx: &Context<'_>) -> Outcome {
    with_endos(ctx, false, |endos| {
        [Left, Right].into_iter().try_for_each(|kind| {
            all(endos.iter().flat_map(|&f| ctx.members(kind).into_iter().map(move |l| (f, l))), |(f, l)| {
                let back = f.pullback(l).expect("same structure");
                if !back.has_support() {
                    return None;
                }
                let chi = f.pullback(&ctx.chi).expect("same structure");
                let absorbed = if kind == Left { ctx.comp(&chi, &back) } else { ctx.comp(&back, &chi) };
                if !absorbed.leq(&back).expect("same structure") {
                    Some(fz(format!("pullback of a fuzzy {kind} ideal does not absorb chi"), l).with_map(f))
                } else if !ctx.is(kind, &back) {
                    Some(fz(format!("pullback of a fuzzy {kind} ideal is not one"), l).with_map(f))
                } else {
                    None
                }
            })
        })
    })
}

fn pullback_quasi(ctx: &Context<'_>) -> Outcome {
    with_endos(ctx, false, |endos| {
        all(endos.iter().flat_map(|&f| ctx.members(Quasi).into_iter().map(move |l| (f, l))), |(f, l)| {
            let back = f.pullback(l).expect("same structure");
            if !back.has_support() {
                return None;
            }
            let (right, left) = ctx.decompose(l);
            let parts = f.pullback(&right).and_then(|r| Ok(r.meet(&f.pullback(&left)?)?)).expect("same structure");
            if parts != back {
                Some(fz("pullback does not split along the decomposition", l).with_map(f))
            } else if !ctx.is(Quasi, &back) {
                Some(fz("pullback of a fuzzy quasi ideal is not one", l).with_map(f))
            } else {
                None
            }
        })
    })
}

fn pushforward_one_sided(ctx: &Context<'_>) -> Outcome {
    with_endos(ctx, true, |endos| {
        [Left, Right].into_iter().try_for_each(|kind| {
            all(endos.iter().flat_map(|&f| ctx.members(kind).into_iter().map(move |l| (f, l))), |(f, l)| {
                let push = f.pushforward(l).expect("surjective");
                let chi = f.pushforward(&ctx.chi).expect("surjective");
                let absorbed = if kind == Left { ctx.comp(&chi, &push) } else { ctx.comp(&push, &chi) };
                if !absorbed.leq(&push).expect("same structure") {
                    Some(fz(format!("pushforward of a fuzzy {kind} ideal does not absorb chi"), l).with_map(f))
                } else if !ctx.is(kind, &push) {
                    Some(fz(format!("pushforward of a fuzzy {kind} ideal is not one"), l).with_map(f))
                } else {
                    None
                }
            })
        })
    })
}

fn pushforward_quasi(ctx: &Context<'_>) -> Outcome {
    with_endos(ctx, true, |endos| {
        all(endos.iter().flat_map(|&f| ctx.members(Quasi).into_iter().map(move |l| (f, l))), |(f, l)| {
            let push = f.pushforward(l).expect("surjective");
            let (right, left) = ctx.decompose(l);
            let parts = f.pushforward(&right).and_then(|r| Ok(r.meet(&f.pushforward(&left)?)?)).expect("surjective");
            if parts != push {
                Some(fz("pushforward does not split along the decomposition", l).with_map(f))
            } else if !ctx.is(Quasi, &push) {
                Some(fz("pushforward of a fuzzy quasi ideal is not one", l).with_map(f))
            } else {
                None
            }
        })
    })
}

fn characteristic_lemma(ctx: &Context<'_>) -> Outcome {
    let g = ctx.g;
    let mut subsets: Vec<ElementSubset> = vec![g.empty_subset()];
    match g.nonempty_subsets() {
        Ok(rest) => subsets.extend(rest),
        Err(e) => return Outcome::Skipped(e.to_string()),
    }
    let side = all(subsets.iter().flat_map(|a| subsets.iter().map(move |b| (a, b))), |(a, b)| {
        let (ca, cb) = (FuzzySubset::characteristic(a), FuzzySubset::characteristic(b));
        let w = |what: &str| Some(Witness::text(what.to_string()).with_subset(a).with_subset(b));
        if a.is_subset_of(b).expect("same structure") != ca.leq(&cb).expect("same structure") {
            w("inclusion not reflected")
        } else if ca.meet(&cb).expect("same structure")
            != FuzzySubset::characteristic(&a.intersection(b).expect("same structure"))
        {
            w("meet differs from the intersection")
        } else if ctx.comp(&ca, &cb) != FuzzySubset::characteristic(&g.subset_product(a, b).expect("same structure")) {
            w("composite differs from the subset product")
        } else {
            None
        }
    });
    settle(subsets.len(), side)
}

fn regularity_characterization(ctx: &Context<'_>) -> Outcome {
    let regular = ctx.regular_side();
    let products_are_meets = all(ctx.pairs(Right, Left), |(r, l)| {
        (ctx.comp(r, l) != r.meet(l).expect("same structure"))
            .then(|| Witness::text("mu o lambda differs from the meet").with_fuzzy(r).with_fuzzy(l))
    });
    let idempotent_and_quasi = fuzzy_idempotent(ctx, Right).and_then(|()| fuzzy_idempotent(ctx, Left)).and_then(|()| {
        all(ctx.pairs(Right, Left), |(r, l)| {
            (!ctx.is(Quasi, &ctx.comp(r, l)))
                .then(|| Witness::text("mu o lambda is not a fuzzy quasi ideal").with_fuzzy(r).with_fuzzy(l))
        })
    });
    let sandwich = all(ctx.members(Quasi), |d| {
        (ctx.comp3(d, &ctx.chi, d) != *d).then(|| fz("delta differs from delta o chi o delta", d))
    });
    let side = iff("regular", regular.clone(), "product condition", products_are_meets)
        .and_then(|()| iff("regular", regular.clone(), "idempotency condition", idempotent_and_quasi))
        .and_then(|()| iff("regular", regular, "sandwich condition", sandwich));
    settle(ctx.family().len(), side)
}

fn crisp_quasi_idempotent(ctx: &Context<'_>, quasis: &[ElementSubset]) -> Side {
    all(quasis, |q| {
        (ctx.g.subset_product(q, q).expect("same structure") != *q)
            .then(|| Witness::text("quasi ideal Q with Q Gamma Q != Q").with_subset(q))
    })
}

fn fuzzy_idempotent(ctx: &Context<'_>, kind: IdealKind) -> Side {
    all(ctx.members(kind), |mu| (!ctx.idempotent(mu)).then(|| fz(format!("fuzzy {kind} with mu o mu != mu"), mu)))
}

fn pointwise_quasi(ctx: &Context<'_>, form: QuasiForm) -> Outcome {
    settle(
        ctx.family().len(),
        all(ctx.family(), |mu| {
            let by_def = ctx.is(Quasi, mu);
            let pointwise = ctx.g.check_fuzzy_quasi_pointwise(mu, form).expect("non-empty member");
            (by_def != pointwise).then(|| fz(format!("definition {by_def}, pointwise form {pointwise}"), mu))
        }),
    )
}

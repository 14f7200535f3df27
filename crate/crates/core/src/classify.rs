//! Structural flags of a finite Γ-semigroup, each computed by direct search
//! over its defining quantifiers.

use serde::Serialize;

use crate::ideal::IdealKind;
use crate::semigroup::GammaSemigroup;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub regular: bool,
    pub intra_regular: bool,
    pub left_regular: bool,
    pub right_regular: bool,
    pub left_simple: bool,
    pub right_simple: bool,
    pub simple: bool,
    pub left_zero: bool,
    pub right_zero: bool,
    pub left_duo: bool,
    pub right_duo: bool,
    pub duo: bool,
    #[serde(serialize_with = "serialize_elements")]
    pub idempotents: ElementSubset,
}

fn serialize_elements<S: serde::Serializer>(s: &ElementSubset, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

impl StructureProfile {
    /// `(name, value)` for every boolean flag, in declaration order.
    pub fn flags(&self) -> [(&'static str, bool); 12] {
        [
            ("regular", self.regular),
            ("intra_regular", self.intra_regular),
            ("left_regular", self.left_regular),
            ("right_regular", self.right_regular),
            ("left_simple", self.left_simple),
            ("right_simple", self.right_simple),
            ("simple", self.simple),
            ("left_zero", self.left_zero),
            ("right_zero", self.right_zero),
            ("left_duo", self.left_duo),
            ("right_duo", self.right_duo),
            ("duo", self.duo),
        ]
    }
}

pub fn classify(g: &GammaSemigroup) -> StructureProfile {
    let left_ideals = one_sided_ideals(g, IdealKind::Left);
    let right_ideals = one_sided_ideals(g, IdealKind::Right);
    let two_sided = one_sided_ideals(g, IdealKind::TwoSided);
    let only_full = |ideals: &[ElementSubset]| ideals.iter().all(|i| i.is_full());
    let all_two_sided =
        |ideals: &[ElementSubset]| ideals.iter().all(|i| g.check_crisp(IdealKind::TwoSided, i).expect("non-empty"));
    let left_duo = all_two_sided(&left_ideals);
    let right_duo = all_two_sided(&right_ideals);
    StructureProfile {
        regular: g.elements().all(|a| regular_witness(g, a).is_some()),
        intra_regular: g.elements().all(|a| intra_regular_witness(g, a).is_some()),
        left_regular: g.elements().all(|a| left_regular_witness(g, a).is_some()),
        right_regular: g.elements().all(|a| right_regular_witness(g, a).is_some()),
        left_simple: only_full(&left_ideals),
        right_simple: only_full(&right_ideals),
        simple: only_full(&two_sided),
        left_zero: all_products(g, |x, _, _, p| p == x),
        right_zero: all_products(g, |_, _, y, p| p == y),
        left_duo,
        right_duo,
        duo: left_duo && right_duo,
        idempotents: idempotents(g),
    }
}

fn all_products(g: &GammaSemigroup, pred: impl Fn(usize, usize, usize, usize) -> bool) -> bool {
    g.elements().all(|x| g.gammas().all(|c| g.elements().all(|y| pred(x, c, y, g.op(x, c, y)))))
}

/// Ideals of `kind`; uses subset enumeration when it fits the guard, and
/// otherwise the principal ideals (enough for simplicity and duo checks
/// because every one-sided ideal is a union of principal ones).
fn one_sided_ideals(g: &GammaSemigroup, kind: IdealKind) -> Vec<ElementSubset> {
    match g.enumerate_crisp(kind) {
        Ok(all) => all,
        Err(_) => g.elements().map(|a| g.generate_ideal(kind, a)).collect(),
    }
}

/// `E_S = {e : e γ e = e for some γ}`.
pub fn idempotents(g: &GammaSemigroup) -> ElementSubset {
    let es: Vec<usize> = g.elements().filter(|&e| g.gammas().any(|c| g.op(e, c, e) == e)).collect();
    g.subset(&es)
}

/// `(x, α, β)` with `a = a α x β a`.
pub fn regular_witness(g: &GammaSemigroup, a: usize) -> Option<(usize, usize, usize)> {
    for alpha in g.gammas() {
        for x in g.elements() {
            let ax = g.op(a, alpha, x);
            for beta in g.gammas() {
                if g.op(ax, beta, a) == a {
                    return Some((x, alpha, beta));
                }
            }
        }
    }
    None
}

/// `(x, α, β)` with `a = x α a β a`.
pub fn left_regular_witness(g: &GammaSemigroup, a: usize) -> Option<(usize, usize, usize)> {
    for beta in g.gammas() {
        let aa = g.op(a, beta, a);
        for x in g.elements() {
            for alpha in g.gammas() {
                if g.op(x, alpha, aa) == a {
                    return Some((x, alpha, beta));
                }
            }
        }
    }
    None
}

/// `(x, α, β)` with `a = a β a α x`.
pub fn right_regular_witness(g: &GammaSemigroup, a: usize) -> Option<(usize, usize, usize)> {
    for beta in g.gammas() {
        let aa = g.op(a, beta, a);
        for alpha in g.gammas() {
            for x in g.elements() {
                if g.op(aa, alpha, x) == a {
                    return Some((x, alpha, beta));
                }
            }
        }
    }
    None
}

/// `(x, y, α, β, γ)` with `a = x α a β a γ y`.
pub fn intra_regular_witness(g: &GammaSemigroup, a: usize) -> Option<(usize, usize, usize, usize, usize)> {
    for beta in g.gammas() {
        let aa = g.op(a, beta, a);
        for x in g.elements() {
            for alpha in g.gammas() {
                let xaa = g.op(x, alpha, aa);
                for gamma in g.gammas() {
                    for y in g.elements() {
                        if g.op(xaa, gamma, y) == a {
                            return Some((x, y, alpha, beta, gamma));
                        }
                    }
                }
            }
        }
    }
    None
}

/// `E_S` is non-empty and `e γ f = e` (resp. `= f`) for all `e, f ∈ E_S`,
/// `γ ∈ Γ`; such a set is automatically closed under every product.
pub fn idempotents_form_zero_subsemigroup(g: &GammaSemigroup, left: bool) -> bool {
    let es = idempotents(g);
    !es.is_empty()
        && es.iter().all(|e| es.iter().all(|f| g.gammas().all(|c| g.op(e, c, f) == if left { e } else { f })))
}

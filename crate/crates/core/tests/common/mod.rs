//! Naive reference implementations, written directly from the quantified
//! definitions and sharing no code with the library beyond table lookup.

#![allow(dead_code)]

use gamma_core::{GammaSemigroup, Grade, IdealKind};

pub type Grades = Vec<Grade>;

pub fn associative(n: usize, m: usize, t: &[usize]) -> bool {
    let op = |x: usize, g: usize, y: usize| t[(g * n + x) * n + y];
    (0..n).all(|x| {
        (0..m).all(|b| (0..n).all(|y| (0..m).all(|c| (0..n).all(|z| op(op(x, b, y), c, z) == op(x, b, op(y, c, z))))))
    })
}

/// Counts associative tables by running through every candidate.
pub fn count_associative(n: usize, m: usize) -> usize {
    let cells = n * n * m;
    let total = n.pow(cells as u32);
    let mut t = vec![0usize; cells];
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        for cell in t.iter_mut().rev() {
            *cell = c % n;
            c /= n;
        }
        if associative(n, m, &t) {
            count += 1;
        }
    }
    count
}

pub fn triples(g: &GammaSemigroup) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    let (n, m) = (g.n(), g.m());
    (0..n).flat_map(move |x| (0..m).flat_map(move |c| (0..n).map(move |y| (x, c, y))))
}

pub fn compose(g: &GammaSemigroup, a: &[Grade], b: &[Grade]) -> Grades {
    let mut out = vec![Grade::ZERO; g.n()];
    for (y, c, z) in triples(g) {
        let x = g.op(y, c, z);
        out[x] = out[x].max(a[y].min(b[z]));
    }
    out
}

pub fn leq(a: &[Grade], b: &[Grade]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn meet(a: &[Grade], b: &[Grade]) -> Grades {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub fn ones(n: usize) -> Grades {
    vec![Grade::ONE; n]
}

fn nonzero(mu: &[Grade]) -> bool {
    mu.iter().any(|g| !g.is_zero())
}

/// Fuzzy predicate by direct quantification over the defining inequality.
pub fn fuzzy(g: &GammaSemigroup, kind: IdealKind, mu: &[Grade]) -> bool {
    let (n, m) = (g.n(), g.m());
    let sub = || triples(g).all(|(x, c, y)| mu[g.op(x, c, y)] >= mu[x].min(mu[y]));
    let bi = || {
        (0..n).all(|x| {
            (0..m).all(|b| {
                (0..n).all(|s| (0..m).all(|c| (0..n).all(|y| mu[g.op(g.op(x, b, s), c, y)] >= mu[x].min(mu[y]))))
            })
        })
    };
    let one_two = || {
        (0..n).all(|x| {
            (0..m).all(|a| {
                (0..n).all(|w| {
                    (0..m).all(|b| {
                        (0..n).all(|y| {
                            (0..m).all(|c| {
                                (0..n).all(|z| mu[g.op(g.op(x, a, w), b, g.op(y, c, z))] >= mu[x].min(mu[y]).min(mu[z]))
                            })
                        })
                    })
                })
            })
        })
    };
    nonzero(mu)
        && match kind {
            IdealKind::Subsemigroup => sub(),
            IdealKind::Left => triples(g).all(|(x, c, y)| mu[g.op(x, c, y)] >= mu[y]),
            IdealKind::Right => triples(g).all(|(x, c, y)| mu[g.op(x, c, y)] >= mu[x]),
            IdealKind::TwoSided => triples(g).all(|(x, c, y)| mu[g.op(x, c, y)] >= mu[x].max(mu[y])),
            IdealKind::Bi => sub() && bi(),
            IdealKind::OneTwo => sub() && one_two(),
            IdealKind::Quasi => {
                let chi = ones(n);
                leq(&meet(&compose(g, mu, &chi), &compose(g, &chi, mu)), mu)
            }
        }
}

pub fn members(set: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| set >> i & 1 == 1).collect()
}

pub fn product(g: &GammaSemigroup, a: u64, b: u64) -> u64 {
    let mut out = 0;
    for x in members(a, g.n()) {
        for y in members(b, g.n()) {
            for c in 0..g.m() {
                out |= 1 << g.op(x, c, y);
            }
        }
    }
    out
}

/// Crisp predicate on a bitmask subset.
pub fn crisp(g: &GammaSemigroup, kind: IdealKind, a: u64) -> bool {
    let s = (1u64 << g.n()) - 1;
    let within = |x: u64| x & !a == 0;
    let sub = within(product(g, a, a));
    a != 0
        && match kind {
            IdealKind::Subsemigroup => sub,
            IdealKind::Left => within(product(g, s, a)),
            IdealKind::Right => within(product(g, a, s)),
            IdealKind::TwoSided => within(product(g, s, a)) && within(product(g, a, s)),
            IdealKind::Bi => sub && within(product(g, product(g, a, s), a)),
            IdealKind::OneTwo => sub && within(product(g, product(g, product(g, a, s), a), a)),
            IdealKind::Quasi => within(product(g, a, s) & product(g, s, a)),
        }
}

pub fn characteristic(a: u64, n: usize) -> Grades {
    (0..n).map(|i| if a >> i & 1 == 1 { Grade::ONE } else { Grade::ZERO }).collect()
}

pub fn level(mu: &[Grade], t: Grade) -> u64 {
    mu.iter().enumerate().filter(|(_, g)| **g >= t).fold(0, |acc, (i, _)| acc | 1 << i)
}

/// All self-maps that respect every product.
pub fn endomorphisms(g: &GammaSemigroup) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for code in 0..n.pow(n as u32) {
        let f: Vec<usize> = (0..n).map(|i| code / n.pow((n - 1 - i) as u32) % n).collect();
        if triples(g).all(|(x, c, y)| f[g.op(x, c, y)] == g.op(f[x], c, f[y])) {
            out.push(f);
        }
    }
    out
}

/// Every grade vector over `levels` except the zero one.
pub fn grid_family(n: usize, levels: &[Grade]) -> Vec<Grades> {
    let k = levels.len();
    (1..k.pow(n as u32)).map(|code| (0..n).map(|i| levels[code / k.pow((n - 1 - i) as u32) % k]).collect()).collect()
}

pub fn uniform_levels(k: usize) -> Vec<Grade> {
    (0..k).map(|i| Grade::new(i as u64, (k - 1) as u64).unwrap()).collect()
}

pub fn build(n: usize, m: usize, t: &[usize]) -> GammaSemigroup {
    GammaSemigroup::from_flat(n, m, t.to_vec()).unwrap()
}

pub fn lz2() -> GammaSemigroup {
    GammaSemigroup::from_fn(2, 1, |x, _, _| x).unwrap()
}

pub fn mod3() -> GammaSemigroup {
    GammaSemigroup::from_fn(3, 2, |x, c, y| x * (c + 1) * y % 3).unwrap()
}

/// Every associative table with `n ≤ 2, m ≤ 2`, plus `n = 3, m = 1`,
/// found by brute force.
pub fn small_corpus() -> Vec<GammaSemigroup> {
    let mut out = Vec::new();
    for (n, m) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2), (3, 1)] {
        let cells = n * n * m;
        for code in 0..n.pow(cells as u32) {
            let t: Vec<usize> = (0..cells).map(|i| code / n.pow((cells - 1 - i) as u32) % n).collect();
            if associative(n, m, &t) {
                out.push(build(n, m, &t));
            }
        }
    }
    out
}

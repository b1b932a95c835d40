//! Finite bases: codes are indices, every relation is a bit matrix.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::basis::{
    Basis, MeetBasis, INTERPOLATION, MONOTONE, PLUS, STAR_SLIP, STAR_SLIP_CONVERSE, TRANSITIVITY, WILKER, ZERO,
};
use crate::bitset::{Bits, Relation};
use crate::code_algebra::{
    dnf_meet, dnf_plus, upper_order, CodeAlgebra, FinSet, FiniteAlgebra, FormalDNF, MeetAlgebra,
};
use crate::report::AxiomReport;
use crate::spatial::Geometry;

#[derive(Debug)]
struct Inner {
    alg: FiniteAlgebra,
    wb: Relation,
    wb_t: Relation,
    order: Relation,
}

/// A finite abstract basis. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct FiniteBasis {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteBasis {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.alg == other.inner.alg
                && self.inner.wb == other.inner.wb
                && self.inner.order == other.inner.order)
    }
}

impl Eq for FiniteBasis {}

impl FiniteBasis {
    /// `≪` given as a relation; `⊑` is the rule-generated order.
    pub fn new(alg: FiniteAlgebra, wb: Relation) -> Self {
        let order = alg.imposed_order();
        Self::with_order(alg, wb, order)
    }

    /// `≪` and the order used for monotonicity both given.
    pub fn with_order(alg: FiniteAlgebra, wb: Relation, order: Relation) -> Self {
        assert_eq!(wb.size(), alg.size());
        assert_eq!(order.size(), alg.size());
        let wb_t = wb.transpose();
        FiniteBasis {
            inner: Arc::new(Inner { alg, wb, wb_t, order }),
        }
    }

    /// `≪ := ⊑`, the rule-generated order.
    pub fn reflexive(alg: FiniteAlgebra) -> Self {
        let order = alg.imposed_order();
        Self::with_order(alg, order.clone(), order)
    }

    /// Tabulates any basis with a finite carrier closed under `+` and `⋆`.
    pub fn tabulate<B: Basis + ?Sized>(b: &B) -> Option<Self> {
        let codes = b.carrier()?;
        let index: BTreeMap<&B::Code, usize> = codes.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let n = codes.len();
        let look = |c: B::Code| index.get(&c).copied();
        let mut plus = vec![vec![0; n]; n];
        let mut star = vec![vec![0; n]; n];
        for (i, x) in codes.iter().enumerate() {
            for (j, y) in codes.iter().enumerate() {
                plus[i][j] = look(b.plus(x, y))?;
                star[i][j] = look(b.star(x, y))?;
            }
        }
        let mut names: Vec<String> = codes.iter().map(|c| b.label(c)).collect();
        // labels must be unique to serve as names
        let mut seen = BTreeMap::new();
        for (i, name) in names.iter_mut().enumerate() {
            if seen.insert(name.clone(), ()).is_some() {
                *name = alloc::format!("{name}#{i}");
            }
        }
        let alg = FiniteAlgebra::new(names, look(b.zero())?, look(b.one())?, plus, star).ok()?;
        let wb = Relation::from_fn(n, |i, j| b.way_below(&codes[i], &codes[j]));
        let order = Relation::from_fn(n, |i, j| b.leq(&codes[i], &codes[j]));
        Some(Self::with_order(alg, wb, order))
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.inner.alg
    }

    pub fn size(&self) -> usize {
        self.inner.alg.size()
    }

    pub fn name(&self, i: usize) -> &str {
        self.inner.alg.name(i)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.alg.index_of(name)
    }

    #[inline]
    pub fn wb(&self, a: usize, b: usize) -> bool {
        self.inner.wb.get(a, b)
    }

    /// `{ b : a ≪ b }`
    pub fn above(&self, a: usize) -> &Bits {
        self.inner.wb.row(a)
    }

    /// `{ a : a ≪ b }`
    pub fn below(&self, b: usize) -> &Bits {
        self.inner.wb_t.row(b)
    }

    pub fn waybelow_relation(&self) -> &Relation {
        &self.inner.wb
    }

    pub fn order(&self) -> &Relation {
        &self.inner.order
    }

    /// Same algebra and order, different `≪`.
    pub fn with_waybelow(&self, wb: Relation) -> Self {
        Self::with_order(self.inner.alg.clone(), wb, self.inner.order.clone())
    }

    /// All rules, every instance, via bit-matrix operations.
    pub fn check_exhaustive(&self) -> AxiomReport {
        let n = self.size();
        let alg = &self.inner.alg;
        let nm = |i: usize| self.name(i).to_string();
        let mut rep = AxiomReport::new(&crate::basis::AXIOM_RULES);
        rep.samples = (n as u64).pow(3);
        let z = alg.zero();

        rep.check(ZERO, self.wb(z, z), || vec![nm(z), nm(z)]);
        for p in 0..n {
            rep.check(ZERO, self.wb(z, p), || vec![nm(z), nm(p)]);
        }

        for a in 0..n {
            for b in 0..n {
                let both = self.above(a).and(self.above(b));
                let sum = self.above(alg.plus_idx(a, b));
                if &both == sum {
                    rep.pass(PLUS);
                } else {
                    let p = both.or(sum).and(&both.and(sum).complement()).first().unwrap();
                    rep.fail(PLUS, crate::report::Failure::Refuted, vec![nm(a), nm(b), nm(p)]);
                }
            }
        }

        for (a, b) in self.inner.order.pairs() {
            // a ⊑ b: b ≪ x ⟹ a ≪ x, and x ≪ a ⟹ x ≪ b
            let up_ok = self.above(b).is_subset(self.above(a));
            rep.check(MONOTONE, up_ok, || {
                let x = self.above(b).and(&self.above(a).complement()).first().unwrap();
                vec![nm(a), nm(b), nm(x)]
            });
            let down_ok = self.below(a).is_subset(self.below(b));
            rep.check(MONOTONE, down_ok, || {
                let x = self.below(a).and(&self.below(b).complement()).first().unwrap();
                vec![nm(x), nm(a), nm(b)]
            });
        }

        for (a, b) in self.inner.wb.pairs() {
            rep.check(INTERPOLATION, self.above(a).intersects(self.below(b)), || {
                vec![nm(a), nm(b)]
            });
            rep.check(TRANSITIVITY, self.above(b).is_subset(self.above(a)), || {
                let x = self.above(b).and(&self.above(a).complement()).first().unwrap();
                vec![nm(a), nm(b), nm(x)]
            });
        }

        for p in 0..n {
            for q in 0..n {
                let mids = self.below(p).and(self.below(q));
                let mut reach = Bits::new(n);
                for m in mids.iter() {
                    reach.union_with(self.below(m));
                }
                let target = self.below(alg.star_idx(p, q));
                let missing = target.and(&reach.complement());
                rep.check(STAR_SLIP, missing.is_empty(), || {
                    vec![nm(missing.first().unwrap()), nm(p), nm(q)]
                });
                let extra = reach.and(&target.complement());
                rep.check(STAR_SLIP_CONVERSE, extra.is_empty(), || {
                    let x = extra.first().unwrap();
                    let m = mids.iter().find(|&m| self.wb(x, m)).unwrap();
                    vec![nm(x), nm(m), nm(p), nm(q)]
                });
            }
        }

        for p in 0..n {
            for q in 0..n {
                let target = self.below(alg.plus_idx(p, q));
                let mut reach = Bits::new(n);
                'outer: for p2 in self.below(p).iter() {
                    for q2 in self.below(q).iter() {
                        reach.union_with(self.below(alg.plus_idx(p2, q2)));
                        if target.is_subset(&reach) {
                            break 'outer;
                        }
                    }
                }
                let missing = target.and(&reach.complement());
                rep.check(WILKER, missing.is_empty(), || {
                    vec![nm(missing.first().unwrap()), nm(p), nm(q)]
                });
            }
        }
        rep
    }
}

impl MeetAlgebra for FiniteBasis {
    type Code = usize;
    fn zero(&self) -> usize {
        self.inner.alg.zero()
    }
    fn one(&self) -> usize {
        self.inner.alg.one()
    }
    fn star(&self, a: &usize, b: &usize) -> usize {
        self.inner.alg.star_idx(*a, *b)
    }
}

impl CodeAlgebra for FiniteBasis {
    fn plus(&self, a: &usize, b: &usize) -> usize {
        self.inner.alg.plus_idx(*a, *b)
    }
}

impl MeetBasis for FiniteBasis {
    fn way_below(&self, a: &usize, b: &usize) -> bool {
        self.wb(*a, *b)
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.inner.order.get(*a, *b)
    }

    fn label(&self, a: &usize) -> String {
        self.name(*a).to_string()
    }

    fn carrier(&self) -> Option<Vec<usize>> {
        Some((0..self.size()).collect())
    }

    fn sample(&self, rng: &mut dyn RngCore) -> usize {
        rng.gen_range(0..self.size())
    }

    fn cover(&self, n: &usize, set: &[usize]) -> Option<bool> {
        let joined = set.iter().fold(self.zero(), |acc, s| self.plus(&acc, s));
        Some(self.wb(*n, joined))
    }
}

impl Basis for FiniteBasis {}

impl Geometry for FiniteBasis {}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn lattice_from_masks(names: Vec<String>, masks: &[u32], zero: usize, one: usize) -> FiniteAlgebra {
    let n = masks.len();
    let idx = |m: u32| masks.iter().position(|x| *x == m).expect("closed under | and &");
    let plus = (0..n)
        .map(|i| (0..n).map(|j| idx(masks[i] | masks[j])).collect())
        .collect();
    let star = (0..n)
        .map(|i| (0..n).map(|j| idx(masks[i] & masks[j])).collect())
        .collect();
    FiniteAlgebra::new(names, zero, one, plus, star).expect("well-formed lattice")
}

/// The `k`-element chain with `+ = max`, `⋆ = min`, `≪ = ≤`.
pub fn chain(k: usize) -> FiniteBasis {
    assert!(k >= 2);
    let nm: Vec<String> = (0..k)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == k - 1 => "1".to_string(),
            i => alloc::format!("c{i}"),
        })
        .collect();
    let masks: Vec<u32> = (0..k).map(|i| (1u32 << i) - 1).collect();
    FiniteBasis::reflexive(lattice_from_masks(nm, &masks, 0, k - 1))
}

/// Free distributive lattice on one generator: `0 < g < 1`, `≪ = ⊑`.
pub fn free_dl_1() -> FiniteBasis {
    FiniteBasis::reflexive(lattice_from_masks(names(&["0", "g", "1"]), &[0b00, 0b01, 0b11], 0, 2))
}

/// Free distributive lattice on two generators (six codes), `≪ = ⊑`.
pub fn free_dl_2() -> FiniteBasis {
    // down-sets of the join-irreducibles ab < a, b < 1
    let masks = [0b0000, 0b0001, 0b0011, 0b0101, 0b0111, 0b1111];
    FiniteBasis::reflexive(lattice_from_masks(
        names(&["0", "ab", "a", "b", "a+b", "1"]),
        &masks,
        0,
        5,
    ))
}

/// The four-element Boolean lattice `0 < a, b < 1`, `≪ = ⊑`.
pub fn diamond() -> FiniteBasis {
    FiniteBasis::reflexive(lattice_from_masks(
        names(&["0", "a", "b", "1"]),
        &[0b00, 0b01, 0b10, 0b11],
        0,
        3,
    ))
}

/// The two-element chain with `≪` strict, so `0 ≪ 0` fails.
pub fn broken_chain_2() -> FiniteBasis {
    let c = chain(2);
    c.with_waybelow(Relation::from_fn(2, |i, j| i < j))
}

/// Finite subsets of `{0..k−1}`: `+ = ∪`, `⋆ = ∩`, `≪ = ⊆`.
pub fn discrete_basis(k: usize) -> FiniteBasis {
    assert!(k <= 8, "discrete basis limited to 8 points");
    let n = 1usize << k;
    let label = |m: usize| {
        let s: FinSet<usize> = (0..k).filter(|i| m >> i & 1 == 1).collect();
        s.to_string()
    };
    let nm: Vec<String> = (0..n).map(label).collect();
    let plus = (0..n).map(|i| (0..n).map(|j| i | j).collect()).collect();
    let star = (0..n).map(|i| (0..n).map(|j| i & j).collect()).collect();
    let alg = FiniteAlgebra::new(nm, 0, n - 1, plus, star).unwrap();
    let sub = Relation::from_fn(n, |i, j| i & !j == 0);
    FiniteBasis::with_order(alg, sub.clone(), sub)
}

/// Every raw formal DNF over `{0..k−1}`; `L ≪ R` iff `upper_order(R, L)`.
pub fn sigma_codes(k: usize) -> Vec<FormalDNF<usize>> {
    assert!(k <= 3, "sigma basis limited to 3 generators");
    let products: Vec<FinSet<usize>> = (0u32..1 << k)
        .map(|m| (0..k).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    let mut codes: Vec<FormalDNF<usize>> = (0u64..1 << products.len())
        .map(|sel| {
            FormalDNF::new(
                products
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| sel >> i & 1 == 1)
                    .map(|(_, p)| p.clone()),
            )
        })
        .collect();
    codes.sort();
    codes
}

pub fn sigma_basis(k: usize) -> FiniteBasis {
    let codes = sigma_codes(k);
    let index: BTreeMap<&FormalDNF<usize>, usize> = codes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let n = codes.len();
    let nm: Vec<String> = codes.iter().map(|c| c.to_string()).collect();
    let plus = codes
        .iter()
        .map(|a| codes.iter().map(|b| index[&dnf_plus(a, b)]).collect())
        .collect();
    let star = codes
        .iter()
        .map(|a| codes.iter().map(|b| index[&dnf_meet(a, b)]).collect())
        .collect();
    let zero = index[&FormalDNF::bottom()];
    let one = index[&FormalDNF::top()];
    let alg = FiniteAlgebra::new(nm, zero, one, plus, star).unwrap();
    let wb = Relation::from_fn(n, |i, j| upper_order(&codes[j], &codes[i]));
    FiniteBasis::with_order(alg, wb.clone(), wb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{check_axioms, SearchBound, Universe};

    #[test]
    fn builtins_pass_exhaustively() {
        for b in [
            chain(2),
            chain(3),
            free_dl_1(),
            free_dl_2(),
            diamond(),
            discrete_basis(3),
            sigma_basis(2),
        ] {
            let rep = check_axioms(&b, Universe::Exhaustive, SearchBound::default()).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn broken_chain_fails_zero() {
        let rep = broken_chain_2().check_exhaustive();
        assert!(rep.rule(ZERO).unwrap().refuted > 0);
        assert!(rep.rule(INTERPOLATION).unwrap().refuted > 0);
    }

    #[test]
    fn discrete_and_sigma_examples() {
        let d = discrete_basis(3);
        let a = d.index_of("{0}").unwrap();
        let b = d.index_of("{0,1}").unwrap();
        assert!(d.wb(a, b));
        let s = sigma_basis(2);
        assert_eq!(s.size(), 16);
        let l = s.index_of("{{0}}").unwrap();
        let r = s.index_of("{{0},{0,1}}").unwrap();
        assert!(s.wb(l, r));
        let bot = s.index_of("{}").unwrap();
        for m in 0..16 {
            assert!(s.wb(bot, m));
            assert!(s.wb(m, m));
        }
    }

    #[test]
    fn free_dl_2_order() {
        let f = free_dl_2();
        let a = f.index_of("a").unwrap();
        let ab = f.index_of("a+b").unwrap();
        assert!(!f.algebra().imposed_leq(ab, a));
        assert!(f.algebra().imposed_leq(a, ab));
    }
}

//! The nucleus `E` on `Σ^N` for a finite basis, checked by brute force.
//!
//! `Σ` is the two-point lattice, so a point `ξ : Σ^N` is a subset of the
//! carrier and a second-order predicate `Φ : Σ^(Σ^N)` is a set of subsets.
//! Maps `Σ^N → Σ` in the intended model are monotone, and the law checks
//! range over monotone `Φ` by default.
//!
//! `EΦξ = ∃n. ξn ∧ ∃L. n ≪ ev L ∧ ∀ℓ∈L. Φℓ`, so `EΦ` is decided by the set
//! `D(Φ) = { n : ∃L ⊆ Φ. n ≪ ev L }`: `EΦξ` iff `ξ` meets `D(Φ)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::Bits;
use crate::code_algebra::MeetAlgebra;
use crate::instances::finite::FiniteBasis;
use crate::report::AxiomReport;

/// Largest carrier for point-level operations (`2^16` subsets).
pub const MAX_CARRIER: usize = 16;
/// Default bound on `|N|` for exhaustive law checks.
pub const DEFAULT_MAX_CARD: usize = 4;
/// Largest number of enumerated `Φ` an exhaustive law check accepts.
pub const MAX_ENUMERATED: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NucleusError {
    #[error("carrier has {size} codes, limit is {cap}")]
    CarrierTooLarge { size: usize, cap: usize },
    #[error("basis fails its axioms: {0}")]
    AxiomsFail(String),
    #[error("subset mask {0:#x} is outside the carrier")]
    OutOfCarrier(u32),
}

/// `ξ ⊆ N`, bit `i` standing for code `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SigmaNPoint(pub u32);

impl SigmaNPoint {
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn singleton(i: usize) -> Self {
        SigmaNPoint(1 << i)
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        SigmaNPoint(idx.into_iter().fold(0, |m, i| m | 1 << i))
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1)
    }

    pub fn render(self, b: &FiniteBasis) -> String {
        let names: Vec<&str> = self.indices().map(|i| b.name(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// `Φ`, a set of subsets of an `n`-code carrier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecondOrderPred {
    n: usize,
    bits: Bits,
}

impl SecondOrderPred {
    pub fn empty(n: usize) -> Self {
        SecondOrderPred {
            n,
            bits: Bits::new(1 << n),
        }
    }

    pub fn full(n: usize) -> Self {
        SecondOrderPred {
            n,
            bits: Bits::full(1 << n),
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(SigmaNPoint) -> bool) -> Self {
        let mut p = Self::empty(n);
        for m in 0..1u32 << n {
            if f(SigmaNPoint(m)) {
                p.bits.insert(m as usize);
            }
        }
        p
    }

    /// `λξ. ξm`
    pub fn projection(n: usize, m: usize) -> Self {
        Self::from_fn(n, |x| x.contains(m))
    }

    /// `↑ξ`, the least monotone predicate holding at `ξ`.
    pub fn up(n: usize, xi: SigmaNPoint) -> Self {
        Self::from_fn(n, |x| x.0 & xi.0 == xi.0)
    }

    /// Everything not below `ξ`: the greatest monotone predicate failing at `ξ`.
    pub fn not_below(n: usize, xi: SigmaNPoint) -> Self {
        Self::from_fn(n, |x| x.0 & !xi.0 != 0)
    }

    /// Up-closure of the given subsets.
    pub fn up_closure(n: usize, gens: &[SigmaNPoint]) -> Self {
        Self::from_fn(n, |x| gens.iter().any(|g| x.0 & g.0 == g.0))
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, xi: SigmaNPoint) -> bool {
        self.bits.contains(xi.0 as usize)
    }

    pub fn members(&self) -> impl Iterator<Item = SigmaNPoint> + '_ {
        self.bits.iter().map(|m| SigmaNPoint(m as u32))
    }

    pub fn count(&self) -> usize {
        self.bits.count()
    }

    pub fn and(&self, o: &Self) -> Self {
        SecondOrderPred {
            n: self.n,
            bits: self.bits.and(&o.bits),
        }
    }

    pub fn or(&self, o: &Self) -> Self {
        SecondOrderPred {
            n: self.n,
            bits: self.bits.or(&o.bits),
        }
    }

    pub fn is_monotone(&self) -> bool {
        self.members()
            .all(|x| (0..self.n).all(|i| self.contains(SigmaNPoint(x.0 | 1 << i))))
    }

    /// Minimal members; for a monotone predicate they generate it.
    pub fn minimal(&self) -> Vec<SigmaNPoint> {
        self.members()
            .filter(|x| (0..self.n).all(|i| !x.contains(i) || !self.contains(SigmaNPoint(x.0 & !(1 << i)))))
            .collect()
    }

    /// Set notation; large monotone predicates print as `↑` of their minimal members.
    pub fn render(&self, b: &FiniteBasis) -> String {
        let show = |xs: &[SigmaNPoint]| {
            let parts: Vec<String> = xs.iter().map(|x| x.render(b)).collect();
            format!("{{{}}}", parts.join(","))
        };
        let all: Vec<SigmaNPoint> = self.members().collect();
        if all.len() > 32 && self.is_monotone() {
            format!("↑{}", show(&self.minimal()))
        } else {
            show(&all)
        }
    }
}

/// Which second-order predicates the law checks quantify over.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PredicateClass {
    #[default]
    Monotone,
    Arbitrary,
}

/// Precomputed tables for one finite basis.
#[derive(Clone, Debug)]
pub struct Nucleus {
    b: FiniteBasis,
    n: usize,
    /// `prod[ℓ]`: the product of the codes in `ℓ`, `1` for `ℓ = ∅`.
    prod: Vec<u16>,
    /// `below[v] = { n : n ≪ v }` as a mask.
    below: Vec<u32>,
    /// `+` is a semilattice, so sums over `L` depend only on the set of products.
    semilattice: bool,
    /// All subset masks in lexicographic order of the sorted index lists.
    lex: Vec<u32>,
    /// `up_of[n]`: union of every `η` with `n ≪ prod η` (all codes when `n ≪ 0`).
    up_of: Vec<u32>,
}

impl Nucleus {
    pub fn new(b: &FiniteBasis) -> Result<Self, NucleusError> {
        let n = b.size();
        if n > MAX_CARRIER {
            return Err(NucleusError::CarrierTooLarge {
                size: n,
                cap: MAX_CARRIER,
            });
        }
        let alg = b.algebra();
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut prod = vec![0u16; 1 << n];
        for m in 0..1usize << n {
            prod[m] = if m == 0 {
                alg.one() as u16
            } else {
                let top = usize::BITS as usize - 1 - m.leading_zeros() as usize;
                let rest = m & !(1 << top);
                if rest == 0 {
                    top as u16
                } else {
                    alg.star_idx(prod[rest] as usize, top) as u16
                }
            };
        }
        let below: Vec<u32> = (0..n)
            .map(|v| b.below(v).iter().fold(0u32, |acc, i| acc | 1 << i))
            .collect();
        let idx: Vec<usize> = (0..n).collect();
        let semilattice = idx.iter().all(|&a| {
            alg.plus_idx(a, a) == a
                && idx.iter().all(|&c| {
                    alg.plus_idx(a, c) == alg.plus_idx(c, a)
                        && idx
                            .iter()
                            .all(|&d| alg.plus_idx(alg.plus_idx(a, c), d) == alg.plus_idx(a, alg.plus_idx(c, d)))
                })
        });
        let mut lex: Vec<u32> = (0..1u32 << n).collect();
        lex.sort_by_cached_key(|&m| SigmaNPoint(m).indices().collect::<Vec<_>>());
        let zero = alg.zero();
        let mut up_of = vec![0u32; n];
        for (i, u) in up_of.iter_mut().enumerate() {
            if b.wb(i, zero) {
                *u = full;
            }
        }
        for (eta, &p) in prod.iter().enumerate() {
            let mut who = below[p as usize];
            while who != 0 {
                let i = who.trailing_zeros() as usize;
                who &= who - 1;
                up_of[i] |= eta as u32;
            }
        }
        Ok(Nucleus {
            b: b.clone(),
            n,
            prod,
            below,
            semilattice,
            lex,
            up_of,
        })
    }

    pub fn basis(&self) -> &FiniteBasis {
        &self.b
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn check_point(&self, xi: SigmaNPoint) -> Result<(), NucleusError> {
        if self.n < 32 && xi.0 >> self.n != 0 {
            return Err(NucleusError::OutOfCarrier(xi.0));
        }
        Ok(())
    }

    fn plus(&self, a: usize, c: usize) -> usize {
        self.b.algebra().plus_idx(a, c)
    }

    /// The values `ev L` for `L ⊆ Φ`, as a code mask.
    fn sums(&self, phi: &SecondOrderPred) -> u32 {
        let zero = self.b.algebra().zero();
        if self.semilattice {
            let mut gens = 0u32;
            for l in phi.members() {
                gens |= 1 << self.prod[l.0 as usize];
            }
            let mut vals = gens;
            loop {
                let mut next = vals;
                let mut a_set = vals;
                while a_set != 0 {
                    let a = a_set.trailing_zeros() as usize;
                    a_set &= a_set - 1;
                    let mut g = gens;
                    while g != 0 {
                        let c = g.trailing_zeros() as usize;
                        g &= g - 1;
                        next |= 1 << self.plus(a, c);
                    }
                }
                if next == vals {
                    break;
                }
                vals = next;
            }
            vals | 1 << zero
        } else {
            // fold1 of + over the chosen products in lexicographic order of ℓ
            // `states` are the partial folds so far; starting afresh is always possible
            let mut states = 0u32;
            for &m in &self.lex {
                if !phi.contains(SigmaNPoint(m)) {
                    continue;
                }
                let p = self.prod[m as usize] as usize;
                let mut next = states | 1 << p;
                let mut s = states;
                while s != 0 {
                    let r = s.trailing_zeros() as usize;
                    s &= s - 1;
                    next |= 1 << self.plus(r, p);
                }
                states = next;
            }
            states | 1 << zero
        }
    }

    /// `D(Φ) = { n : ∃L ⊆ Φ. n ≪ ev L }`.
    pub fn d(&self, phi: &SecondOrderPred) -> u32 {
        let mut vals = self.sums(phi);
        let mut out = 0;
        while vals != 0 {
            let v = vals.trailing_zeros() as usize;
            vals &= vals - 1;
            out |= self.below[v];
        }
        out
    }

    pub fn apply(&self, phi: &SecondOrderPred, xi: SigmaNPoint) -> bool {
        xi.0 & self.d(phi) != 0
    }

    /// `EΦ` as a predicate.
    pub fn e(&self, phi: &SecondOrderPred) -> SecondOrderPred {
        let d = self.d(phi);
        SecondOrderPred::from_fn(self.n, |x| x.0 & d != 0)
    }

    /// `EΦξ = Φξ` for every monotone `Φ`. Since `E` is monotone in `Φ`,
    /// it is enough to try `↑ξ` and everything not below `ξ`.
    pub fn is_admissible(&self, xi: SigmaNPoint) -> bool {
        // a single η ⊄ ξ with n ≪ prod η already puts n into D(P∖↓ξ)
        if xi.indices().any(|i| self.up_of[i] & !xi.0 != 0) {
            return false;
        }
        let n = self.n;
        self.apply(&SecondOrderPred::up(n, xi), xi) && !self.apply(&SecondOrderPred::not_below(n, xi), xi)
    }

    /// `ξ0 = ⊥, ξ1 = ⊤`, `ξ` preserves `+` and `⋆`, and `ξn ⟺ ∃m. ξm ∧ m ≪ n`.
    pub fn is_rounded_hom(&self, xi: SigmaNPoint) -> bool {
        let alg = self.b.algebra();
        if xi.contains(alg.zero()) || !xi.contains(alg.one()) {
            return false;
        }
        let n = self.n;
        for a in 0..n {
            if xi.contains(a) != (self.below[a] & xi.0 != 0) {
                return false;
            }
        }
        for a in 0..n {
            for c in 0..n {
                if xi.contains(alg.plus_idx(a, c)) != (xi.contains(a) || xi.contains(c))
                    || xi.contains(alg.star_idx(a, c)) != (xi.contains(a) && xi.contains(c))
                {
                    return false;
                }
            }
        }
        true
    }

    /// `E(λξ.ξm){n}`.
    pub fn recovered_waybelow(&self, n: usize, m: usize) -> bool {
        self.apply(&SecondOrderPred::projection(self.n, m), SigmaNPoint::singleton(n))
    }

    /// Every monotone (or every) predicate on this carrier, in a fixed order.
    pub fn enumerate(&self, class: PredicateClass) -> Result<Vec<SecondOrderPred>, NucleusError> {
        enumerate_predicates(self.n, class)
    }

    pub fn random_predicate(&self, class: PredicateClass, rng: &mut impl Rng) -> SecondOrderPred {
        let n = self.n;
        match class {
            PredicateClass::Arbitrary => SecondOrderPred::from_fn(n, |_| rng.gen_bool(0.5)),
            PredicateClass::Monotone => {
                let k = rng.gen_range(0..=3);
                let gens: Vec<SigmaNPoint> = (0..k)
                    .map(|_| SigmaNPoint((0..n).fold(0, |m, i| if rng.gen_bool(0.4) { m | 1 << i } else { m })))
                    .collect();
                SecondOrderPred::up_closure(n, &gens)
            }
        }
    }
}

fn enumerate_predicates(n: usize, class: PredicateClass) -> Result<Vec<SecondOrderPred>, NucleusError> {
    let points = 1usize << n;
    let too_large = NucleusError::CarrierTooLarge {
        size: n,
        cap: max_card_for(class),
    };
    if points > 16 {
        return Err(too_large);
    }
    let mut out = Vec::new();
    for sel in 0u32..(1u32 << points) {
        let p = SecondOrderPred::from_fn(n, |x| sel >> x.0 & 1 == 1);
        if class == PredicateClass::Arbitrary || p.is_monotone() {
            out.push(p);
            if out.len() > MAX_ENUMERATED {
                return Err(too_large);
            }
        }
    }
    Ok(out)
}

/// Largest `|N|` an exhaustive law check supports for the class.
pub fn max_card_for(class: PredicateClass) -> usize {
    match class {
        PredicateClass::Monotone => 4,
        PredicateClass::Arbitrary => 3,
    }
}

pub const MEET_LAW: &str = "meet-law";
pub const JOIN_LAW: &str = "join-law";
pub const IDEMPOTENCE: &str = "idempotence";
pub const ADMISSIBLE_TO_HOM: &str = "admissible-implies-rounded-hom";
pub const HOM_TO_ADMISSIBLE: &str = "rounded-hom-implies-admissible";
pub const RECOVERED: &str = "recovered-waybelow";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NucleusOptions {
    pub max_card: usize,
    pub class: PredicateClass,
    /// `Some((pairs, seed))` samples random pairs `(Φ, Ψ)` instead.
    pub sampled: Option<(usize, u64)>,
}

impl Default for NucleusOptions {
    fn default() -> Self {
        NucleusOptions {
            max_card: DEFAULT_MAX_CARD,
            class: PredicateClass::Monotone,
            sampled: None,
        }
    }
}

/// `apply_E` on a fresh table; prefer [`Nucleus`] for repeated queries.
pub fn apply_e(b: &FiniteBasis, phi: &SecondOrderPred, xi: SigmaNPoint) -> Result<bool, NucleusError> {
    let nu = Nucleus::new(b)?;
    nu.check_point(xi)?;
    Ok(nu.apply(phi, xi))
}

pub fn is_admissible(b: &FiniteBasis, xi: SigmaNPoint) -> Result<bool, NucleusError> {
    let nu = Nucleus::new(b)?;
    nu.check_point(xi)?;
    Ok(nu.is_admissible(xi))
}

pub fn recovered_waybelow(b: &FiniteBasis, n: usize, m: usize) -> Result<bool, NucleusError> {
    Ok(Nucleus::new(b)?.recovered_waybelow(n, m))
}

/// `E(Φ∧Ψ) = E(EΦ∧EΨ)`, `E(Φ∨Ψ) = E(EΦ∨EΨ)` and `E(EΦ) = EΦ`.
pub fn check_nucleus_laws(b: &FiniteBasis, opts: NucleusOptions) -> Result<AxiomReport, NucleusError> {
    let nu = Nucleus::new(b)?;
    let n = nu.size();
    let mut rep = AxiomReport::new(&[MEET_LAW, JOIN_LAW, IDEMPOTENCE]);
    let witness = |d1: u32, d2: u32| SigmaNPoint::singleton((d1 ^ d2).trailing_zeros() as usize);
    let pair = |rep: &mut AxiomReport,
                phi: &SecondOrderPred,
                psi: &SecondOrderPred,
                ephi: &SecondOrderPred,
                epsi: &SecondOrderPred| {
        for (rule, lhs, rhs) in [
            (MEET_LAW, phi.and(psi), ephi.and(epsi)),
            (JOIN_LAW, phi.or(psi), ephi.or(epsi)),
        ] {
            let (d1, d2) = (nu.d(&lhs), nu.d(&rhs));
            rep.check(rule, d1 == d2, || {
                vec![phi.render(b), psi.render(b), witness(d1, d2).render(b)]
            });
        }
    };
    match opts.sampled {
        None => {
            let cap = opts.max_card.min(max_card_for(opts.class));
            if n > cap {
                return Err(NucleusError::CarrierTooLarge { size: n, cap });
            }
            let phis = nu.enumerate(opts.class)?;
            let es: Vec<SecondOrderPred> = phis.iter().map(|p| nu.e(p)).collect();
            for (p, e) in phis.iter().zip(&es) {
                let (d1, d2) = (nu.d(e), nu.d(p));
                rep.check(IDEMPOTENCE, d1 == d2, || vec![p.render(b), witness(d1, d2).render(b)]);
            }
            for i in 0..phis.len() {
                for j in 0..phis.len() {
                    pair(&mut rep, &phis[i], &phis[j], &es[i], &es[j]);
                }
            }
            rep.samples = (phis.len() * phis.len()) as u64;
        }
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let phi = nu.random_predicate(opts.class, &mut rng);
                let psi = nu.random_predicate(opts.class, &mut rng);
                let (ephi, epsi) = (nu.e(&phi), nu.e(&psi));
                let (d1, d2) = (nu.d(&ephi), nu.d(&phi));
                rep.check(IDEMPOTENCE, d1 == d2, || vec![phi.render(b), witness(d1, d2).render(b)]);
                pair(&mut rep, &phi, &psi, &ephi, &epsi);
            }
            rep.samples = count as u64;
        }
    }
    Ok(rep)
}

/// For every `ξ ⊆ N`: admissible iff rounded lattice homomorphism.
/// The basis must pass its axioms first.
pub fn points_theorem_check(b: &FiniteBasis) -> Result<AxiomReport, NucleusError> {
    let axioms = b.check_exhaustive();
    if !axioms.passed() {
        let bad: Vec<&str> = axioms.rules.iter().filter(|r| !r.passed()).map(|r| r.rule).collect();
        return Err(NucleusError::AxiomsFail(bad.join(", ")));
    }
    let nu = Nucleus::new(b)?;
    let mut rep = AxiomReport::new(&[ADMISSIBLE_TO_HOM, HOM_TO_ADMISSIBLE]);
    for m in 0..1u32 << nu.size() {
        let xi = SigmaNPoint(m);
        let adm = nu.is_admissible(xi);
        let hom = nu.is_rounded_hom(xi);
        if adm {
            rep.check(ADMISSIBLE_TO_HOM, hom, || vec![xi.render(b)]);
        }
        if hom {
            rep.check(HOM_TO_ADMISSIBLE, adm, || vec![xi.render(b)]);
        }
    }
    rep.samples = 1 << nu.size();
    Ok(rep)
}

/// `E(λξ.ξm){n} ⟺ n ≪ m` on every pair.
pub fn check_recovery(b: &FiniteBasis) -> Result<AxiomReport, NucleusError> {
    let nu = Nucleus::new(b)?;
    let n = nu.size();
    let mut rep = AxiomReport::new(&[RECOVERED]);
    for m in 0..n {
        let d = nu.d(&SecondOrderPred::projection(n, m));
        for k in 0..n {
            let got = d >> k & 1 == 1;
            rep.check(RECOVERED, got == b.wb(k, m), || {
                vec![String::from(b.name(k)), String::from(b.name(m))]
            });
        }
    }
    rep.samples = (n * n) as u64;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::finite::{broken_chain_2, chain, diamond, free_dl_1, free_dl_2, sigma_basis};

    fn xi(b: &FiniteBasis, names: &[&str]) -> SigmaNPoint {
        SigmaNPoint::from_indices(names.iter().map(|s| b.index_of(s).unwrap()))
    }

    #[test]
    fn apply_e_examples() {
        let b = chain(2);
        let one = b.index_of("1").unwrap();
        let phi = SecondOrderPred::projection(2, one);
        assert!(apply_e(&b, &phi, SigmaNPoint::singleton(one)).unwrap());
        assert!(!apply_e(&b, &SecondOrderPred::full(2), SigmaNPoint(0)).unwrap());
        assert!(apply_e(&b, &SecondOrderPred::full(2), SigmaNPoint::singleton(one)).unwrap());
    }

    #[test]
    fn dedekind_counts() {
        for (n, m) in [(1, 3), (2, 6), (3, 20), (4, 168)] {
            assert_eq!(enumerate_predicates(n, PredicateClass::Monotone).unwrap().len(), m);
        }
    }

    #[test]
    fn admissibility_on_free_dl_1() {
        let b = free_dl_1();
        let g = b.name(1).to_string();
        assert!(is_admissible(&b, xi(&b, &[g.as_str(), "1"])).unwrap());
        assert!(!is_admissible(&b, xi(&b, &["0", g.as_str(), "1"])).unwrap());
        assert!(!is_admissible(&b, SigmaNPoint(0)).unwrap());
    }

    #[test]
    fn laws_hold_on_small_carriers() {
        for b in [chain(2), chain(3), free_dl_1(), diamond()] {
            let rep = check_nucleus_laws(&b, NucleusOptions::default()).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn strict_chain_breaks_the_laws() {
        let rep = check_nucleus_laws(&broken_chain_2(), NucleusOptions::default()).unwrap();
        assert!(rep.refutations() > 0);
    }

    #[test]
    fn arbitrary_predicates_break_the_laws_already_on_chain_2() {
        let opts = NucleusOptions {
            class: PredicateClass::Arbitrary,
            ..Default::default()
        };
        let rep = check_nucleus_laws(&chain(2), opts).unwrap();
        assert!(rep.refutations() > 0, "{rep}");
    }

    #[test]
    fn points_and_recovery() {
        for b in [chain(2), free_dl_1(), free_dl_2(), diamond()] {
            assert!(points_theorem_check(&b).unwrap().passed());
            assert!(check_recovery(&b).unwrap().passed());
        }
    }

    #[test]
    fn broken_basis_is_rejected_before_points_check() {
        assert!(matches!(
            points_theorem_check(&broken_chain_2()),
            Err(NucleusError::AxiomsFail(_))
        ));
    }

    #[test]
    fn sigma_2_is_beyond_exhaustive_laws() {
        let err = check_nucleus_laws(&sigma_basis(2), NucleusOptions::default()).unwrap_err();
        assert!(matches!(err, NucleusError::CarrierTooLarge { size: 16, .. }));
    }

    #[test]
    fn e_is_monotone_and_stable_on_principal_points() {
        let b = free_dl_1();
        let nu = Nucleus::new(&b).unwrap();
        let phis = nu.enumerate(PredicateClass::Monotone).unwrap();
        for p in &phis {
            for q in &phis {
                if p.and(q) == *p {
                    assert_eq!(nu.d(p) & !nu.d(q), 0);
                }
            }
            let ep = nu.e(p);
            for k in 0..b.size() {
                let down = SigmaNPoint(b.below(k).iter().fold(0, |m, i| m | 1 << i));
                assert_eq!(nu.apply(p, down), nu.apply(&ep, down));
            }
        }
    }

    #[test]
    fn sigma_2_points_and_recovery_are_exact() {
        let b = sigma_basis(2);
        let rep = points_theorem_check(&b).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(check_recovery(&b).unwrap().passed());
    }

    #[test]
    fn sigma_2_sampled_laws() {
        let opts = NucleusOptions {
            sampled: Some((200, 7)),
            ..Default::default()
        };
        let rep = check_nucleus_laws(&sigma_basis(2), opts).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

//! Abstract bases: codes with a way-below relation `≪`, axiom checking and
//! bounded witness search.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code_algebra::{CodeAlgebra, FinSet, MeetAlgebra};
use crate::instances::finite::FiniteBasis;
use crate::report::{AxiomReport, Failure};

/// Three-valued answer of a bounded semi-decision.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Truth {
    True,
    False,
    /// The search bound ran out before a decision.
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Truth::True
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    pub fn or(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::True, _) | (_, Truth::True) => Truth::True,
            (Truth::False, Truth::False) => Truth::False,
            _ => Truth::Unknown,
        }
    }
}

impl core::ops::Not for Truth {
    type Output = Truth;

    fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }
}

/// Limits on witness search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBound {
    /// Refinement levels tried after level 0.
    pub levels: u32,
    /// Total candidates examined per query.
    pub max_candidates: usize,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound {
            levels: 3,
            max_candidates: 1000,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Universe {
    Exhaustive,
    Random { count: usize, seed: u64 },
}

/// What a candidate stream is looking for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Goal<C> {
    /// `k` with `n ≪ k ≪ m`
    Between(C, C),
    /// `k` with `n ≪ k`
    Above(C),
    /// `k` with `k ≪ m`
    Below(C),
}

/// Outcome of a bounded witness search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Search<T> {
    Found(T),
    /// The precondition of the search is false.
    NotApplicable,
    Exhausted,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("exhaustive checking needs a finite carrier")]
    NoCarrier,
    #[error("carrier has {size} codes, limit is {limit}")]
    CarrierTooLarge { size: usize, limit: usize },
    #[error("or-closure needs a cover test or a `+`")]
    MissingCover,
    #[error("basis is not a filter basis")]
    NotFilter,
}

/// Codes with `0`, `1`, `⋆` and a decidable `≪`.
pub trait MeetBasis: MeetAlgebra {
    fn way_below(&self, a: &Self::Code, b: &Self::Code) -> bool;

    /// The order monotonicity is checked against. Finite presentations use
    /// the rule-generated order; spatial bases use inclusion of denotations.
    fn leq(&self, a: &Self::Code, b: &Self::Code) -> bool;

    fn label(&self, a: &Self::Code) -> String;

    /// Every code, when the carrier is finite.
    fn carrier(&self) -> Option<Vec<Self::Code>> {
        None
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Self::Code;

    /// A code likely to be `≪`- or `⊑`-related to `base`.
    fn sample_related(&self, base: &Self::Code, rng: &mut dyn RngCore) -> Self::Code {
        let _ = base;
        self.sample(rng)
    }

    /// Candidate witnesses at one refinement level. Finite bases return the
    /// whole carrier at level 0.
    fn candidates(&self, goal: &Goal<Self::Code>, level: u32) -> Vec<Self::Code> {
        let _ = goal;
        if level == 0 {
            self.carrier().unwrap_or_default()
        } else {
            Vec::new()
        }
    }

    /// Whether the open of `a` has a point.
    fn inhabited(&self, a: &Self::Code) -> Option<bool> {
        let _ = a;
        None
    }

    /// Whether the compact of `n` lies in the union of the opens in `set`.
    fn cover(&self, n: &Self::Code, set: &[Self::Code]) -> Option<bool> {
        let _ = (n, set);
        None
    }

    /// Codes whose compacts cover the compact of `n`, each inside it.
    fn bisect(&self, n: &Self::Code) -> Option<Vec<Self::Code>> {
        let _ = n;
        None
    }
}

/// A full abstract basis.
pub trait Basis: MeetBasis + CodeAlgebra {
    /// Candidate pairs `(p′, q′)` for the Wilker rule at `n ≪ p+q`.
    fn wilker_candidates(
        &self,
        n: &Self::Code,
        p: &Self::Code,
        q: &Self::Code,
        level: u32,
    ) -> Vec<(Self::Code, Self::Code)> {
        let _ = (n, p, q);
        match (level, self.carrier()) {
            (0, Some(c)) => c
                .iter()
                .flat_map(|x| c.iter().map(move |y| (x.clone(), y.clone())))
                .collect(),
            _ => Vec::new(),
        }
    }
}

fn bounded<T>(
    bound: SearchBound,
    mut level_items: impl FnMut(u32) -> Vec<T>,
    mut ok: impl FnMut(&T) -> bool,
) -> Option<T> {
    let mut seen = 0usize;
    for level in 0..=bound.levels {
        for c in level_items(level) {
            if seen >= bound.max_candidates {
                return None;
            }
            seen += 1;
            if ok(&c) {
                return Some(c);
            }
        }
    }
    None
}

/// `k` with `n ≪ k ≪ m`.
pub fn interpolant<B: MeetBasis + ?Sized>(b: &B, n: &B::Code, m: &B::Code, bound: SearchBound) -> Search<B::Code> {
    if !b.way_below(n, m) {
        return Search::NotApplicable;
    }
    let goal = Goal::Between(n.clone(), m.clone());
    match bounded(
        bound,
        |l| b.candidates(&goal, l),
        |k| b.way_below(n, k) && b.way_below(k, m),
    ) {
        Some(k) => Search::Found(k),
        None => Search::Exhausted,
    }
}

/// `m` with `n ≪ m`, `m ≪ p`, `m ≪ q`, given `n ≪ p⋆q`.
pub fn slip_witness<B: MeetBasis + ?Sized>(
    b: &B,
    n: &B::Code,
    p: &B::Code,
    q: &B::Code,
    bound: SearchBound,
) -> Search<B::Code> {
    let pq = b.star(p, q);
    if !b.way_below(n, &pq) {
        return Search::NotApplicable;
    }
    let goal = Goal::Between(n.clone(), pq);
    match bounded(
        bound,
        |l| b.candidates(&goal, l),
        |m| b.way_below(n, m) && b.way_below(m, p) && b.way_below(m, q),
    ) {
        Some(m) => Search::Found(m),
        None => Search::Exhausted,
    }
}

/// `(p′, q′)` with `n ≪ p′+q′`, `p′ ≪ p`, `q′ ≪ q`, given `n ≪ p+q`.
pub fn wilker_witness<B: Basis + ?Sized>(
    b: &B,
    n: &B::Code,
    p: &B::Code,
    q: &B::Code,
    bound: SearchBound,
) -> Search<(B::Code, B::Code)> {
    if !b.way_below(n, &b.plus(p, q)) {
        return Search::NotApplicable;
    }
    match bounded(
        bound,
        |l| b.wilker_candidates(n, p, q, l),
        |(p2, q2)| b.way_below(p2, p) && b.way_below(q2, q) && b.way_below(n, &b.plus(p2, q2)),
    ) {
        Some(w) => Search::Found(w),
        None => Search::Exhausted,
    }
}

pub const ZERO: &str = "zero";
pub const PLUS: &str = "plus";
pub const MONOTONE: &str = "monotone";
pub const INTERPOLATION: &str = "interpolation";
pub const TRANSITIVITY: &str = "transitivity";
pub const STAR_SLIP: &str = "star-slip";
pub const STAR_SLIP_CONVERSE: &str = "star-slip-converse";
pub const WILKER: &str = "wilker";

pub const AXIOM_RULES: [&str; 8] = [
    ZERO,
    PLUS,
    MONOTONE,
    INTERPOLATION,
    TRANSITIVITY,
    STAR_SLIP,
    STAR_SLIP_CONVERSE,
    WILKER,
];

/// Checks the abstract-basis rules over the universe.
pub fn check_axioms<B: Basis + ?Sized>(
    b: &B,
    universe: Universe,
    bound: SearchBound,
) -> Result<AxiomReport, BasisError> {
    match universe {
        Universe::Exhaustive => {
            let fb = FiniteBasis::tabulate(b).ok_or(BasisError::NoCarrier)?;
            Ok(fb.check_exhaustive())
        }
        Universe::Random { count, seed } => Ok(check_sampled(b, count, seed, bound)),
    }
}

/// Draws four codes, later ones derived from earlier ones so that
/// the antecedents of the rules hold often.
pub fn draw4<B: MeetBasis + ?Sized>(b: &B, rng: &mut dyn RngCore) -> [B::Code; 4] {
    let a = b.sample(rng);
    let x = if rng.gen_bool(0.8) {
        b.sample_related(&a, rng)
    } else {
        b.sample(rng)
    };
    let c = if rng.gen_bool(0.8) {
        b.sample_related(&x, rng)
    } else {
        b.sample(rng)
    };
    let d = match rng.gen_range(0..3) {
        0 => b.sample_related(&x, rng),
        1 => b.sample_related(&a, rng),
        _ => b.sample(rng),
    };
    [a, x, c, d]
}

fn check_sampled<B: Basis + ?Sized>(b: &B, count: usize, seed: u64, bound: SearchBound) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = AxiomReport::new(&AXIOM_RULES);
    let wb = |x: &B::Code, y: &B::Code| b.way_below(x, y);
    let z = b.zero();
    rep.check(ZERO, wb(&z, &z), || vec![b.label(&z), b.label(&z)]);
    for _ in 0..count {
        let [n, m, p, q] = draw4(b, &mut rng);
        rep.samples += 1;
        let lab = |cs: &[&B::Code]| cs.iter().map(|c| b.label(c)).collect::<Vec<_>>();

        rep.check(ZERO, wb(&z, &n), || lab(&[&z, &n]));

        for (x, y, t) in [(&n, &m, &p), (&n, &p, &q), (&m, &n, &q)] {
            let lhs = wb(x, t) && wb(y, t);
            let rhs = wb(&b.plus(x, y), t);
            rep.check(PLUS, lhs == rhs, || lab(&[x, y, t]));
        }

        let nm = b.star(&n, &m);
        if b.leq(&nm, &n) && wb(&n, &p) {
            rep.check(MONOTONE, wb(&nm, &p), || lab(&[&nm, &n, &p]));
        }
        let pq = b.plus(&p, &q);
        if wb(&n, &p) && b.leq(&p, &pq) {
            rep.check(MONOTONE, wb(&n, &pq), || lab(&[&n, &p, &pq]));
        }
        if b.leq(&n, &m) && wb(&m, &p) {
            rep.check(MONOTONE, wb(&n, &p), || lab(&[&n, &m, &p]));
        }
        if wb(&n, &m) && b.leq(&m, &p) {
            rep.check(MONOTONE, wb(&n, &p), || lab(&[&n, &m, &p]));
        }

        for (x, y) in [(&n, &m), (&n, &p), (&m, &p)] {
            match interpolant(b, x, y, bound) {
                Search::Found(_) => rep.pass(INTERPOLATION),
                Search::Exhausted => rep.fail(INTERPOLATION, Failure::Unwitnessed, lab(&[x, y])),
                Search::NotApplicable => {}
            }
        }
        if wb(&n, &m) && wb(&m, &p) {
            rep.check(TRANSITIVITY, wb(&n, &p), || lab(&[&n, &m, &p]));
        }

        for (x, s, t) in [(&n, &p, &q), (&n, &m, &p), (&m, &p, &q)] {
            match slip_witness(b, x, s, t, bound) {
                Search::Found(_) => rep.pass(STAR_SLIP),
                Search::Exhausted => rep.fail(STAR_SLIP, Failure::Unwitnessed, lab(&[x, s, t])),
                Search::NotApplicable => {}
            }
        }
        if wb(&n, &m) && wb(&m, &p) && wb(&m, &q) {
            rep.check(STAR_SLIP_CONVERSE, wb(&n, &b.star(&p, &q)), || lab(&[&n, &m, &p, &q]));
        }

        for (x, s, t) in [(&n, &p, &q), (&n, &m, &q), (&m, &p, &q)] {
            match wilker_witness(b, x, s, t, bound) {
                Search::Found(_) => rep.pass(WILKER),
                Search::Exhausted => rep.fail(WILKER, Failure::Unwitnessed, lab(&[x, s, t])),
                Search::NotApplicable => {}
            }
        }
    }
    rep
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub compact: bool,
    pub filter: bool,
}

pub const FILTER_RULE: &str = "filter";

/// Checks `m ≪ p⋆q ⟺ m ≪ p ∧ m ≪ q` over the universe.
pub fn check_filter_rule<B: MeetBasis + ?Sized>(b: &B, universe: Universe) -> AxiomReport {
    let mut rep = AxiomReport::new(&[FILTER_RULE]);
    let one = |m: &B::Code, p: &B::Code, q: &B::Code, rep: &mut AxiomReport| {
        let lhs = b.way_below(m, &b.star(p, q));
        let rhs = b.way_below(m, p) && b.way_below(m, q);
        rep.check(FILTER_RULE, lhs == rhs, || vec![b.label(m), b.label(p), b.label(q)]);
    };
    match (universe, b.carrier()) {
        (Universe::Exhaustive, Some(c)) => {
            for m in &c {
                for p in &c {
                    for q in &c {
                        one(m, p, q, &mut rep);
                    }
                }
            }
            rep.samples = (c.len() as u64).pow(3);
        }
        (Universe::Random { count, seed }, _) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let [m, p, q, _] = draw4(b, &mut rng);
                one(&m, &p, &q, &mut rep);
                one(&p, &m, &q, &mut rep);
                rep.samples += 1;
            }
        }
        (Universe::Exhaustive, None) => {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..1000 {
                let [m, p, q, _] = draw4(b, &mut rng);
                one(&m, &p, &q, &mut rep);
                rep.samples += 1;
            }
        }
    }
    rep
}

/// `compact := 1≪1`; `filter := compact ∧ (m≪p⋆q ⟺ m≪p ∧ m≪q)`.
pub fn classify<B: MeetBasis + ?Sized>(b: &B, universe: Universe) -> Classification {
    let one = b.one();
    let compact = b.way_below(&one, &one);
    let filter = compact && check_filter_rule(b, universe).passed();
    Classification { compact, filter }
}

/// The relation `((p,q), n) ↦ ∃p′,q′. p′⋆q′ ≪ n ∧ p ≪ p′ ∧ q ≪ q′`.
pub struct DualWilker<'a, B: MeetBasis + ?Sized> {
    basis: &'a B,
    bound: SearchBound,
}

pub fn dual_wilker_star<B: MeetBasis + ?Sized>(
    b: &B,
    universe: Universe,
    bound: SearchBound,
) -> Result<DualWilker<'_, B>, BasisError> {
    if !classify(b, universe).filter {
        return Err(BasisError::NotFilter);
    }
    Ok(DualWilker { basis: b, bound })
}

impl<B: MeetBasis + ?Sized> DualWilker<'_, B> {
    pub fn witness(&self, p: &B::Code, q: &B::Code, n: &B::Code) -> Search<(B::Code, B::Code)> {
        let b = self.basis;
        let mut seen = 0usize;
        for level in 0..=self.bound.levels {
            let ps = b.candidates(&Goal::Above(p.clone()), level);
            let qs = b.candidates(&Goal::Above(q.clone()), level);
            for p2 in ps.iter().filter(|x| b.way_below(p, x)) {
                for q2 in qs.iter().filter(|y| b.way_below(q, y)) {
                    if seen >= self.bound.max_candidates {
                        return Search::Exhausted;
                    }
                    seen += 1;
                    if b.way_below(&b.star(p2, q2), n) {
                        return Search::Found((p2.clone(), q2.clone()));
                    }
                }
            }
        }
        Search::Exhausted
    }

    /// `True` on a witness; `Unknown` when the bound runs out. On finite
    /// carriers the search is complete and exhaustion means `False`.
    pub fn holds(&self, p: &B::Code, q: &B::Code, n: &B::Code) -> Truth {
        match self.witness(p, q, n) {
            Search::Found(_) => Truth::True,
            _ if self.basis.carrier().is_some() => Truth::False,
            _ => Truth::Unknown,
        }
    }
}

/// Finite joins of a `∧`-basis: codes are finite sets, `+` is union,
/// `ℓ ≪ ℓ′` means every compact in `ℓ` is covered by the opens of `ℓ′`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrClosure<B> {
    base: B,
}

/// Fails unless the base supplies a cover test.
pub fn or_closure<B: MeetBasis>(b: B) -> Result<OrClosure<B>, BasisError> {
    let z = b.zero();
    if b.cover(&z, core::slice::from_ref(&z)).is_none() {
        return Err(BasisError::MissingCover);
    }
    Ok(OrClosure { base: b })
}

impl<B: MeetBasis> OrClosure<B> {
    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn lift(&self, n: B::Code) -> FinSet<B::Code> {
        FinSet::singleton(n)
    }

    fn cover(&self, n: &B::Code, set: &FinSet<B::Code>) -> bool {
        self.base.cover(n, set.as_slice()).unwrap_or(false)
    }

    /// Pieces of `n` each lying `≪` a single member of `target`, refining by
    /// bisection up to `depth` times.
    fn assign(&self, n: &B::Code, target: &FinSet<B::Code>, depth: u32) -> Option<Vec<(B::Code, B::Code)>> {
        if let Some(t) = target.iter().find(|t| self.base.way_below(n, t)) {
            return Some(vec![(n.clone(), t.clone())]);
        }
        if depth == 0 {
            return None;
        }
        let pieces = self.base.bisect(n)?;
        let mut out = Vec::new();
        for p in pieces {
            out.extend(self.assign(&p, target, depth - 1)?);
        }
        Some(out)
    }

    const MAX_SPLIT: u32 = 6;

    fn pieces(&self, l: &FinSet<B::Code>, target: &FinSet<B::Code>) -> Option<Vec<(B::Code, B::Code)>> {
        let mut out = Vec::new();
        for n in l.iter() {
            if self.base.way_below(n, &self.base.zero()) {
                continue;
            }
            out.extend(self.assign(n, target, Self::MAX_SPLIT)?);
        }
        Some(out)
    }

    fn finite_carrier(&self) -> Option<Vec<FinSet<B::Code>>> {
        let c = self.base.carrier()?;
        if c.len() > 12 {
            return None;
        }
        Some(
            (0u32..(1 << c.len()))
                .map(|mask| {
                    FinSet::new(
                        c.iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .map(|(_, x)| x.clone()),
                    )
                })
                .collect(),
        )
    }
}

impl<B: MeetBasis> MeetAlgebra for OrClosure<B> {
    type Code = FinSet<B::Code>;

    fn zero(&self) -> Self::Code {
        FinSet::empty()
    }

    fn one(&self) -> Self::Code {
        FinSet::singleton(self.base.one())
    }

    fn star(&self, a: &Self::Code, b: &Self::Code) -> Self::Code {
        FinSet::new(a.iter().flat_map(|x| b.iter().map(move |y| self.base.star(x, y))))
    }
}

impl<B: MeetBasis> CodeAlgebra for OrClosure<B> {
    fn plus(&self, a: &Self::Code, b: &Self::Code) -> Self::Code {
        a.union(b)
    }
}

impl<B: MeetBasis> MeetBasis for OrClosure<B> {
    fn way_below(&self, a: &Self::Code, b: &Self::Code) -> bool {
        a.iter().all(|n| self.cover(n, b))
    }

    fn leq(&self, a: &Self::Code, b: &Self::Code) -> bool {
        a.iter().all(|n| b.iter().any(|m| self.base.leq(n, m)))
    }

    fn label(&self, a: &Self::Code) -> String {
        let parts: Vec<String> = a.iter().map(|n| self.base.label(n)).collect();
        format!("{{{}}}", parts.join(","))
    }

    fn carrier(&self) -> Option<Vec<Self::Code>> {
        self.finite_carrier()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Self::Code {
        let k = rng.gen_range(0..=2);
        FinSet::new((0..k).map(|_| self.base.sample(rng)))
    }

    fn sample_related(&self, base: &Self::Code, rng: &mut dyn RngCore) -> Self::Code {
        let mut items: Vec<B::Code> = base.iter().map(|n| self.base.sample_related(n, rng)).collect();
        if rng.gen_bool(0.25) {
            items.push(self.base.sample(rng));
        }
        if items.len() > 1 && rng.gen_bool(0.2) {
            items.pop();
        }
        FinSet::new(items)
    }

    fn candidates(&self, goal: &Goal<Self::Code>, level: u32) -> Vec<Self::Code> {
        if let Some(c) = self.finite_carrier() {
            return if level == 0 { c } else { Vec::new() };
        }
        match goal {
            Goal::Between(l, target) => {
                let Some(pieces) = self.pieces(l, target) else {
                    return Vec::new();
                };
                let mut per: Vec<Vec<B::Code>> = Vec::new();
                for (p, t) in &pieces {
                    let g = Goal::Between(p.clone(), t.clone());
                    let ks: Vec<B::Code> = self
                        .base
                        .candidates(&g, level)
                        .into_iter()
                        .filter(|k| self.base.way_below(p, k) && self.base.way_below(k, t))
                        .collect();
                    if ks.is_empty() {
                        return Vec::new();
                    }
                    per.push(ks);
                }
                // one candidate per choice index, aligned across pieces
                let width = per.iter().map(|v| v.len()).max().unwrap_or(1);
                (0..width)
                    .map(|i| FinSet::new(per.iter().map(|v| v[i.min(v.len() - 1)].clone())))
                    .collect()
            }
            Goal::Above(l) | Goal::Below(l) => {
                let per: Vec<Vec<B::Code>> = l
                    .iter()
                    .map(|n| {
                        let g = match goal {
                            Goal::Above(_) => Goal::Above(n.clone()),
                            _ => Goal::Below(n.clone()),
                        };
                        self.base.candidates(&g, level)
                    })
                    .collect();
                if per.iter().any(|v| v.is_empty()) {
                    return if l.is_empty() {
                        vec![FinSet::empty()]
                    } else {
                        Vec::new()
                    };
                }
                let width = per.iter().map(|v| v.len()).max().unwrap_or(1);
                (0..width)
                    .map(|i| FinSet::new(per.iter().map(|v| v[i.min(v.len() - 1)].clone())))
                    .collect()
            }
        }
    }

    fn inhabited(&self, a: &Self::Code) -> Option<bool> {
        let mut any = false;
        for n in a.iter() {
            any |= self.base.inhabited(n)?;
        }
        Some(any)
    }

    fn cover(&self, n: &Self::Code, set: &[Self::Code]) -> Option<bool> {
        let joined = set.iter().fold(FinSet::empty(), |acc, s| acc.union(s));
        Some(self.way_below(n, &joined))
    }

    fn bisect(&self, n: &Self::Code) -> Option<Vec<Self::Code>> {
        let mut out = Vec::new();
        for x in n.iter() {
            for p in self.base.bisect(x)? {
                out.push(FinSet::singleton(p));
            }
        }
        Some(out)
    }
}

impl<B: MeetBasis> Basis for OrClosure<B> {
    fn wilker_candidates(
        &self,
        n: &Self::Code,
        p: &Self::Code,
        q: &Self::Code,
        level: u32,
    ) -> Vec<(Self::Code, Self::Code)> {
        if let Some(c) = self.finite_carrier() {
            if level != 0 {
                return Vec::new();
            }
            return c
                .iter()
                .flat_map(|x| c.iter().map(move |y| (x.clone(), y.clone())))
                .collect();
        }
        let target = p.union(q);
        let Some(pieces) = self.pieces(n, &target) else {
            return Vec::new();
        };
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (piece, t) in &pieces {
            let g = Goal::Between(piece.clone(), t.clone());
            let k = self
                .base
                .candidates(&g, level)
                .into_iter()
                .find(|k| self.base.way_below(piece, k) && self.base.way_below(k, t));
            let Some(k) = k else {
                return Vec::new();
            };
            if p.contains(t) {
                left.push(k);
            } else {
                right.push(k);
            }
        }
        vec![(FinSet::new(left), FinSet::new(right))]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truth_tables() {
        use Truth::*;
        assert_eq!(True.and(Unknown), Unknown);
        assert_eq!(False.and(Unknown), False);
        assert_eq!(True.or(Unknown), True);
        assert_eq!(False.or(Unknown), Unknown);
        assert_eq!(!Unknown, Unknown);
    }
}

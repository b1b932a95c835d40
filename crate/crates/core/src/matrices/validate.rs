//! Checking the rules of an abstract matrix over a universe of codes.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::{Goal, MeetBasis, SearchBound, Truth, Universe};
use crate::code_algebra::{CodeAlgebra, MeetAlgebra};
use crate::matrices::{image_of, Matrix, MatrixError, SrcCode, TgtCode};
use crate::rational::{dyadic, max, Q};
use crate::report::{AxiomReport, Failure};
use crate::spatial::{split_longest, Cell, Extent, Geometry};

/// `ρ(0, m)`
pub const SOURCE_ZERO: &str = "source-zero";
/// `ρ(n, m) ∧ ρ(p, m) ⟺ ρ(n+p, m)`
pub const SOURCE_JOIN: &str = "source-join";
/// `n′ ⊑ n ∧ ρ(n, m) ∧ m ⊑ m′ ⟹ ρ(n′, m′)`
pub const MONOTONE: &str = "monotone";
/// `ρ(n′, m′) ⟺ ∃n, m. n′ ≪ n ∧ ρ(n, m) ∧ m ≪ m′`
pub const ROUNDED: &str = "rounded";
/// `ρ(n, 0) ⟺ n ≪ 0`
pub const TARGET_ZERO: &str = "target-zero";
/// `ρ(n, 1) ⟺ n ≪ 1`
pub const TARGET_ONE: &str = "target-one";
/// `ρ(n, s⋆t) ⟺ ∃m, p. ρ(m, s) ∧ ρ(p, t) ∧ n ≪ m⋆p`
pub const TARGET_MEET: &str = "target-meet";
/// `ρ(n, s+t) ⟺ ∃m, p. ρ(m, s) ∧ ρ(p, t) ∧ n ≪ m+p`
pub const TARGET_JOIN: &str = "target-join";

pub const MATRIX_RULES: [&str; 8] = [
    SOURCE_ZERO,
    SOURCE_JOIN,
    MONOTONE,
    ROUNDED,
    TARGET_ZERO,
    TARGET_ONE,
    TARGET_MEET,
    TARGET_JOIN,
];

/// Largest carrier walked exhaustively.
pub const MAX_EXHAUSTIVE: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Connective {
    Top,
    Bot,
    Meet,
    Join,
}

impl Connective {
    pub fn rule(self) -> &'static str {
        match self {
            Connective::Top => TARGET_ONE,
            Connective::Bot => TARGET_ZERO,
            Connective::Meet => TARGET_MEET,
            Connective::Join => TARGET_JOIN,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "top" => Connective::Top,
            "bot" => Connective::Bot,
            "meet" => Connective::Meet,
            "join" => Connective::Join,
            _ => return None,
        })
    }
}

type Carriers<M> = (Vec<SrcCode<M>>, Vec<TgtCode<M>>);

struct Checker<'a, M: Matrix + ?Sized> {
    mx: &'a M,
    bound: SearchBound,
    /// Both carriers, when every existential is decided by enumeration.
    carriers: Option<Carriers<M>>,
    rules: &'a [&'static str],
    rep: AxiomReport,
}

impl<M: Matrix + ?Sized> Checker<'_, M> {
    fn wants(&self, rule: &str) -> bool {
        self.rules.contains(&rule)
    }

    fn rel(&self, n: &SrcCode<M>, m: &TgtCode<M>) -> Truth {
        self.mx.relate(n, m)
    }

    fn sl(&self, n: &SrcCode<M>) -> alloc::string::String {
        self.mx.source().label(n)
    }

    fn tl(&self, m: &TgtCode<M>) -> alloc::string::String {
        self.mx.target().label(m)
    }

    /// Both sides decided and equal.
    fn agree(
        &mut self,
        rule: &'static str,
        lhs: Truth,
        rhs: Truth,
        codes: impl FnOnce() -> Vec<alloc::string::String>,
    ) {
        match (lhs, rhs) {
            (Truth::Unknown, _) | (_, Truth::Unknown) => self.rep.fail(rule, Failure::Unwitnessed, codes()),
            (a, b) if a == b => self.rep.pass(rule),
            _ => self.rep.fail(rule, Failure::Refuted, codes()),
        }
    }

    /// `lhs ⟺ ∃witness`; the search is told whether the left side holds so
    /// it can spend less on refutation hunting.
    fn existential(
        &mut self,
        rule: &'static str,
        lhs: Truth,
        search: impl FnOnce(&Self, bool) -> bool,
        codes: impl FnOnce() -> Vec<alloc::string::String>,
    ) {
        match lhs {
            Truth::Unknown => self.rep.fail(rule, Failure::Unwitnessed, codes()),
            Truth::True => {
                if search(self, true) {
                    self.rep.pass(rule)
                } else if self.carriers.is_some() {
                    self.rep.fail(rule, Failure::Refuted, codes())
                } else {
                    self.rep.fail(rule, Failure::Unwitnessed, codes())
                }
            }
            Truth::False => {
                if search(self, false) {
                    self.rep.fail(rule, Failure::Refuted, codes())
                } else {
                    self.rep.pass(rule)
                }
            }
        }
    }

    fn source_zero(&mut self, m: &TgtCode<M>) {
        if !self.wants(SOURCE_ZERO) {
            return;
        }
        let z = self.mx.source().zero();
        let r = self.rel(&z, m);
        let codes = || vec![self.sl(&z), self.tl(m)];
        match r {
            Truth::True => self.rep.pass(SOURCE_ZERO),
            Truth::False => {
                let c = codes();
                self.rep.fail(SOURCE_ZERO, Failure::Refuted, c)
            }
            Truth::Unknown => {
                let c = codes();
                self.rep.fail(SOURCE_ZERO, Failure::Unwitnessed, c)
            }
        }
    }

    fn source_join(&mut self, n: &SrcCode<M>, p: &SrcCode<M>, m: &TgtCode<M>) {
        if !self.wants(SOURCE_JOIN) {
            return;
        }
        let lhs = self.rel(n, m).and(self.rel(p, m));
        let rhs = self.rel(&self.mx.source().plus(n, p), m);
        let codes = vec![self.sl(n), self.sl(p), self.tl(m)];
        self.agree(SOURCE_JOIN, lhs, rhs, || codes);
    }

    fn monotone(&mut self, n2: &SrcCode<M>, n: &SrcCode<M>, m: &TgtCode<M>, m2: &TgtCode<M>) {
        if !self.wants(MONOTONE) {
            return;
        }
        if !self.mx.source().leq(n2, n) || !self.mx.target().leq(m, m2) || !self.rel(n, m).is_true() {
            return;
        }
        let codes = vec![self.sl(n2), self.sl(n), self.tl(m), self.tl(m2)];
        match self.rel(n2, m2) {
            Truth::True => self.rep.pass(MONOTONE),
            Truth::False => self.rep.fail(MONOTONE, Failure::Refuted, codes),
            Truth::Unknown => self.rep.fail(MONOTONE, Failure::Unwitnessed, codes),
        }
    }

    fn rounded(&mut self, n: &SrcCode<M>, m: &TgtCode<M>) {
        if !self.wants(ROUNDED) {
            return;
        }
        let lhs = self.rel(n, m);
        let codes = vec![self.sl(n), self.tl(m)];
        self.existential(ROUNDED, lhs, |c, eager| c.rounded_witness(n, m, eager), || codes);
    }

    fn target_zero(&mut self, n: &SrcCode<M>) {
        if !self.wants(TARGET_ZERO) {
            return;
        }
        let (s, t) = (self.mx.source(), self.mx.target());
        let lhs = self.rel(n, &t.zero());
        let rhs = Truth::from_bool(s.way_below(n, &s.zero()));
        let codes = vec![self.sl(n), self.tl(&t.zero())];
        self.agree(TARGET_ZERO, lhs, rhs, || codes);
    }

    fn target_one(&mut self, n: &SrcCode<M>) {
        if !self.wants(TARGET_ONE) {
            return;
        }
        let (s, t) = (self.mx.source(), self.mx.target());
        let lhs = self.rel(n, &t.one());
        let rhs = Truth::from_bool(s.way_below(n, &s.one()));
        let codes = vec![self.sl(n), self.tl(&t.one())];
        self.agree(TARGET_ONE, lhs, rhs, || codes);
    }

    fn meet(&mut self, n: &SrcCode<M>, s: &TgtCode<M>, t: &TgtCode<M>) {
        if !self.wants(TARGET_MEET) {
            return;
        }
        let st = self.mx.target().star(s, t);
        let lhs = self.rel(n, &st);
        let codes = vec![self.sl(n), self.tl(s), self.tl(t)];
        self.existential(TARGET_MEET, lhs, |c, eager| c.meet_witness(n, s, t, eager), || codes);
    }

    fn join(&mut self, n: &SrcCode<M>, s: &TgtCode<M>, t: &TgtCode<M>) {
        if !self.wants(TARGET_JOIN) {
            return;
        }
        let st = self.mx.target().plus(s, t);
        let lhs = self.rel(n, &st);
        let codes = vec![self.sl(n), self.tl(s), self.tl(t)];
        self.existential(TARGET_JOIN, lhs, |c, eager| c.join_witness(n, s, t, eager), || codes);
    }

    fn levels(eager: bool) -> u32 {
        if eager {
            48
        } else {
            8
        }
    }

    /// Compact boxes of `n` when the matrix can also map them; geometric
    /// searches are then the primary ones.
    fn geometric(&self, n: &SrcCode<M>) -> Option<Vec<Cell>> {
        match self.mx.source().compact(n)? {
            Extent::Cells(cs) => self.mx.image_cells(&cs).map(|_| cs),
            Extent::Unbounded => None,
        }
    }

    fn rounded_witness(&self, n0: &SrcCode<M>, m0: &TgtCode<M>, eager: bool) -> bool {
        let (s, t) = (self.mx.source(), self.mx.target());
        if let Some((sc, tc)) = &self.carriers {
            return sc.iter().filter(|n| s.way_below(n0, n)).any(|n| {
                tc.iter()
                    .filter(|m| t.way_below(m, m0))
                    .any(|m| self.rel(n, m).is_true())
            });
        }
        if let Some(cs) = self.geometric(n0) {
            for i in 0..Self::levels(eager) {
                let w = dyadic(i);
                let Some(n) = s.enclose(&cs, &w) else { break };
                let Some(img) = image_of(self.mx, &n) else { break };
                let Some(m) = t.enclose(&img, &w) else { break };
                if s.way_below(n0, &n) && t.way_below(&m, m0) && self.rel(&n, &m).is_true() {
                    return true;
                }
            }
            if !eager {
                return false;
            }
        }
        let top = if eager { self.bound.levels } else { 0 };
        let mut budget = self.bound.max_candidates;
        for l in 0..=top {
            let ns: Vec<_> = s
                .candidates(&Goal::Above(n0.clone()), l)
                .into_iter()
                .filter(|n| s.way_below(n0, n))
                .collect();
            let ms: Vec<_> = t
                .candidates(&Goal::Below(m0.clone()), l)
                .into_iter()
                .filter(|m| t.way_below(m, m0))
                .collect();
            for n in &ns {
                for m in &ms {
                    if budget == 0 {
                        return false;
                    }
                    budget -= 1;
                    if self.rel(n, m).is_true() {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn meet_witness(&self, n: &SrcCode<M>, s0: &TgtCode<M>, t0: &TgtCode<M>, eager: bool) -> bool {
        let src = self.mx.source();
        if let Some((sc, _)) = &self.carriers {
            return sc.iter().filter(|m| self.rel(m, s0).is_true()).any(|m| {
                sc.iter()
                    .any(|p| self.rel(p, t0).is_true() && src.way_below(n, &src.star(m, p)))
            });
        }
        let ok = |e: &SrcCode<M>| {
            src.way_below(n, &src.star(e, e)) && self.rel(e, s0).is_true() && self.rel(e, t0).is_true()
        };
        if let Some(cs) = self.geometric(n) {
            for i in 0..Self::levels(eager) {
                match src.enclose(&cs, &dyadic(i)) {
                    Some(e) if ok(&e) => return true,
                    Some(_) => {}
                    None => break,
                }
            }
            if !eager {
                return false;
            }
        }
        let top = if eager { self.bound.levels } else { 0 };
        (0..=top).any(|l| src.candidates(&Goal::Above(n.clone()), l).iter().any(ok))
    }

    /// Splits the compact of `n` until every piece, enlarged by a thousandth
    /// of its width, maps into `s` or into `t`.
    fn assign(
        &self,
        c: &Cell,
        s0: &TgtCode<M>,
        t0: &TgtCode<M>,
        depth: u32,
        out: &mut (Vec<SrcCode<M>>, Vec<SrcCode<M>>),
        pieces: &mut usize,
    ) -> bool {
        let src = self.mx.source();
        let diam = c
            .iter()
            .map(|(a, b)| b - a)
            .fold(Q::from_integer(0.into()), |acc, d| max(&acc, &d));
        let w = if diam > Q::from_integer(0.into()) {
            diam * dyadic(10)
        } else {
            dyadic(30)
        };
        let Some(e) = src.enclose(core::slice::from_ref(c), &w) else {
            return false;
        };
        if self.rel(&e, s0).is_true() {
            out.0.push(e);
            return true;
        }
        if self.rel(&e, t0).is_true() {
            out.1.push(e);
            return true;
        }
        if depth == 0 || *pieces > 16384 {
            return false;
        }
        let subs = split_longest(c);
        *pieces += subs.len();
        subs.iter().all(|sub| self.assign(sub, s0, t0, depth - 1, out, pieces))
    }

    fn join_witness(&self, n: &SrcCode<M>, s0: &TgtCode<M>, t0: &TgtCode<M>, eager: bool) -> bool {
        let src = self.mx.source();
        if let Some((sc, _)) = &self.carriers {
            return sc.iter().filter(|m| self.rel(m, s0).is_true()).any(|m| {
                sc.iter()
                    .any(|p| self.rel(p, t0).is_true() && src.way_below(n, &src.plus(m, p)))
            });
        }
        let check = |m: &SrcCode<M>, p: &SrcCode<M>| {
            src.way_below(n, &src.plus(m, p)) && self.rel(m, s0).is_true() && self.rel(p, t0).is_true()
        };
        if let Some(cs) = self.geometric(n) {
            let dim = cs.first().map_or(1, |c| c.len());
            let depth = match (eager, dim) {
                (false, d) => 3 * d as u32,
                (true, d) => 12 * d as u32,
            };
            let mut out = (Vec::new(), Vec::new());
            let mut pieces = 0;
            if cs.iter().all(|c| self.assign(c, s0, t0, depth, &mut out, &mut pieces)) {
                let sum = |v: &[SrcCode<M>]| v.iter().fold(src.zero(), |acc, x| src.plus(&acc, x));
                if check(&sum(&out.0), &sum(&out.1)) {
                    return true;
                }
            }
            if !eager {
                return false;
            }
        }
        let z = src.zero();
        let top = if eager { self.bound.levels } else { 0 };
        (0..=top).any(|l| {
            src.candidates(&Goal::Above(n.clone()), l)
                .iter()
                .any(|e| check(e, &z) || check(&z, e))
        })
    }
}

fn pick<C: Clone>(v: Vec<C>, rng: &mut dyn RngCore) -> Option<C> {
    (!v.is_empty()).then(|| v[rng.gen_range(0..v.len())].clone())
}

fn run<M: Matrix + ?Sized>(
    mx: &M,
    universe: Universe,
    bound: SearchBound,
    rules: &[&'static str],
) -> Result<AxiomReport, MatrixError> {
    let (s, t) = (mx.source(), mx.target());
    let carriers = match universe {
        Universe::Exhaustive => {
            let (sc, tc) = (
                s.carrier().ok_or(MatrixError::NoCarrier)?,
                t.carrier().ok_or(MatrixError::NoCarrier)?,
            );
            let size = sc.len().max(tc.len());
            if size > MAX_EXHAUSTIVE {
                return Err(MatrixError::CarrierTooLarge {
                    size,
                    limit: MAX_EXHAUSTIVE,
                });
            }
            Some((sc, tc))
        }
        Universe::Random { .. } => None,
    };
    let mut c = Checker {
        mx,
        bound,
        carriers,
        rules,
        rep: AxiomReport::new(rules),
    };
    match universe {
        Universe::Exhaustive => {
            let (sc, tc) = c.carriers.clone().unwrap();
            for m in &tc {
                c.source_zero(m);
            }
            for n in &sc {
                c.target_zero(n);
                c.target_one(n);
                for m in &tc {
                    c.rounded(n, m);
                    for p in &sc {
                        c.source_join(n, p, m);
                    }
                    if c.wants(MONOTONE) {
                        for n2 in &sc {
                            for m2 in &tc {
                                c.monotone(n2, n, m, m2);
                            }
                        }
                    }
                }
                for s0 in &tc {
                    for t0 in &tc {
                        c.meet(n, s0, t0);
                        c.join(n, s0, t0);
                    }
                }
            }
            c.rep.samples = (sc.len() * tc.len()) as u64;
        }
        Universe::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut prev: Option<SrcCode<M>> = None;
            for i in 0..count {
                let n = match &prev {
                    Some(p) if i % 4 == 3 => s.sample_related(p, &mut rng),
                    _ => s.sample(&mut rng),
                };
                let m = mx.sample_target(&n, &mut rng);
                let p = if rng.gen_bool(0.5) {
                    s.sample_related(&n, &mut rng)
                } else {
                    s.sample(&mut rng)
                };
                c.source_zero(&m);
                c.source_join(&n, &p, &m);
                if c.wants(MONOTONE) {
                    let n2 = pick(s.candidates(&Goal::Below(n.clone()), 0), &mut rng).unwrap_or_else(|| n.clone());
                    let m2 = pick(t.candidates(&Goal::Above(m.clone()), 0), &mut rng).unwrap_or_else(|| m.clone());
                    c.monotone(&n2, &n, &m, &m2);
                }
                c.rounded(&n, &m);
                c.target_zero(&n);
                c.target_one(&n);
                if c.wants(TARGET_MEET) || c.wants(TARGET_JOIN) {
                    let s0 = mx.sample_target(&n, &mut rng);
                    let t0 = mx.sample_target(&n, &mut rng);
                    c.meet(&n, &s0, &t0);
                    c.join(&n, &s0, &t0);
                }
                prev = Some(n);
            }
            c.rep.samples = count as u64;
        }
    }
    Ok(c.rep)
}

/// Every rule of an abstract matrix. Sampled runs report missing witnesses
/// as unwitnessed; exhaustive runs on finite carriers decide everything.
pub fn validate_matrix<M: Matrix + ?Sized>(
    mx: &M,
    universe: Universe,
    bound: SearchBound,
) -> Result<AxiomReport, MatrixError> {
    run(mx, universe, bound, &MATRIX_RULES)
}

/// The one rule saying `ρ` preserves a lattice connective of the target.
pub fn preserves<M: Matrix + ?Sized>(
    mx: &M,
    connective: Connective,
    universe: Universe,
    bound: SearchBound,
) -> Result<AxiomReport, MatrixError> {
    let rules: &[&'static str] = match connective {
        Connective::Top => &[TARGET_ONE],
        Connective::Bot => &[TARGET_ZERO],
        Connective::Meet => &[TARGET_MEET],
        Connective::Join => &[TARGET_JOIN],
    };
    run(mx, universe, bound, rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::finite::{diamond, free_dl_1};
    use crate::instances::interval::real_line_basis;
    use crate::matrices::broken::{constant_true, shift_union};
    use crate::matrices::{identity, matrix_of_hom, UnaryMatrix, UnaryOp};
    use crate::rational::int;

    fn sampled(count: usize) -> Universe {
        Universe::Random { count, seed: 11 }
    }

    #[test]
    fn identity_on_finite_carriers() {
        for b in [free_dl_1(), diamond()] {
            let rep = validate_matrix(&identity(b), Universe::Exhaustive, SearchBound::default()).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn empty_hom_breaks_source_zero() {
        let b = free_dl_1();
        let rho = matrix_of_hom(&b, &b, &[0; 8]).unwrap();
        let rep = validate_matrix(&rho, Universe::Exhaustive, SearchBound::default()).unwrap();
        assert!(rep.rule(SOURCE_ZERO).unwrap().refuted > 0);
    }

    #[test]
    fn identity_and_add_one_on_samples() {
        let rep = validate_matrix(&identity(real_line_basis()), sampled(500), SearchBound::default()).unwrap();
        assert!(rep.passed(), "{rep}");
        let rep = validate_matrix(
            &UnaryMatrix::new(UnaryOp::AddConst(int(1))),
            sampled(500),
            SearchBound::default(),
        )
        .unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn broken_relations_are_caught() {
        let rep = validate_matrix(&constant_true(), sampled(200), SearchBound::default()).unwrap();
        assert!(rep.rule(TARGET_ZERO).unwrap().refuted > 0, "{rep}");
        let rep = preserves(&shift_union(), Connective::Meet, sampled(300), SearchBound::default()).unwrap();
        assert!(rep.rule(TARGET_MEET).unwrap().refuted > 0, "{rep}");
        for c in [Connective::Top, Connective::Bot, Connective::Join] {
            let rep = preserves(&shift_union(), c, sampled(300), SearchBound::default()).unwrap();
            assert!(rep.passed(), "{c:?} {rep}");
        }
    }

    #[test]
    fn waybelow_one_preserves_meets_but_not_bottom() {
        // ρ(n, m) ≡ n ≪ 1, ignoring m.
        #[derive(Clone)]
        struct Top;
        impl Matrix for Top {
            type Source = crate::instances::interval::IntervalBasis;
            type Target = crate::instances::interval::IntervalBasis;
            fn source(&self) -> &Self::Source {
                &R
            }
            fn target(&self) -> &Self::Target {
                &R
            }
            fn name(&self) -> alloc::string::String {
                "n << 1".into()
            }
            fn relate(
                &self,
                n: &crate::instances::interval::IntervalCode,
                _: &crate::instances::interval::IntervalCode,
            ) -> Truth {
                Truth::from_bool(R.way_below(n, &crate::instances::interval::IntervalCode::One))
            }
        }
        static R: crate::instances::interval::IntervalBasis = crate::instances::interval::IntervalBasis {
            space: crate::instances::interval::Space::Line,
            non_strict: false,
        };
        let bot = preserves(&Top, Connective::Bot, sampled(300), SearchBound::default()).unwrap();
        assert!(bot.rule(TARGET_ZERO).unwrap().refuted > 0);
        let meet = preserves(&Top, Connective::Meet, sampled(300), SearchBound::default()).unwrap();
        assert_eq!(meet.rule(TARGET_MEET).unwrap().refuted, 0, "{meet}");
    }
}

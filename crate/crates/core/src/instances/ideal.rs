//! Rounded ideals: predicates on codes that stand for points.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::basis::{Basis, BasisError, Goal, MeetBasis, SearchBound, Truth, Universe};
use crate::instances::interval::{IntervalBasis, IntervalCode};
use crate::rational::{dyadic, lit, Q};
use crate::report::{AxiomReport, Failure};

/// Direction of the relation `◁` an ideal is rounded for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// `n ◁ k` is `n ≪ k`; principal ideals `↓n` are rounded this way.
    Up,
    /// `n ◁ k` is `k ≪ n`; points are rounded this way: every open
    /// containing the point contains a smaller one that still does.
    Down,
}

type MemberFn<C> = dyn Fn(&C) -> Truth + Send + Sync;
type CertFn<C> = dyn Fn(usize) -> Option<C> + Send + Sync;

/// A membership predicate plus a restartable stream of known members.
#[derive(Clone)]
pub struct RoundedIdeal<C> {
    pub orientation: Orientation,
    pub name: String,
    /// The point itself, when the ideal is known to be a point of `ℝ^d`.
    pub point: Option<Vec<Q>>,
    member: Arc<MemberFn<C>>,
    certificates: Arc<CertFn<C>>,
}

impl<C> core::fmt::Debug for RoundedIdeal<C> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "RoundedIdeal({}, {:?})", self.name, self.orientation)
    }
}

impl<C: Clone> RoundedIdeal<C> {
    pub fn new(
        name: impl Into<String>,
        orientation: Orientation,
        member: impl Fn(&C) -> Truth + Send + Sync + 'static,
        certificates: impl Fn(usize) -> Option<C> + Send + Sync + 'static,
    ) -> Self {
        RoundedIdeal {
            orientation,
            name: name.into(),
            point: None,
            member: Arc::new(member),
            certificates: Arc::new(certificates),
        }
    }

    pub fn with_point(mut self, p: Vec<Q>) -> Self {
        self.point = Some(p);
        self
    }

    pub fn contains(&self, c: &C) -> Truth {
        (self.member)(c)
    }

    pub fn certificate(&self, i: usize) -> Option<C> {
        (self.certificates)(i)
    }

    pub fn certificates(&self, limit: usize) -> Vec<C> {
        (0..limit).map_while(|i| self.certificate(i)).collect()
    }

    /// `n ◁ k` for this ideal's orientation.
    pub fn rel<B: MeetBasis<Code = C> + ?Sized>(&self, b: &B, n: &C, k: &C) -> bool {
        match self.orientation {
            Orientation::Up => b.way_below(n, k),
            Orientation::Down => b.way_below(k, n),
        }
    }
}

/// How many certificates a point ideal offers; radii go down to `2^-199`.
pub const POINT_CERTIFICATES: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("point {0} lies outside the space")]
    OutsideSpace(String),
}

/// `ξn ≡ x ∈ Uⁿ`, with certificates `⟨x ± 2^-i⟩`.
pub fn point_ideal(b: &IntervalBasis, x: Q) -> Result<RoundedIdeal<IntervalCode>, IdealError> {
    if !b.in_space(&x) {
        return Err(IdealError::OutsideSpace(lit(&x)));
    }
    let basis = *b;
    let xm = x.clone();
    let xc = x.clone();
    Ok(RoundedIdeal::new(
        format!("point {}", lit(&x)),
        Orientation::Down,
        move |n: &IntervalCode| Truth::from_bool(basis.in_open(n, &xm)),
        move |i| (i < POINT_CERTIFICATES).then(|| IntervalCode::ball(xc.clone(), dyadic(i as u32)).unwrap()),
    )
    .with_point(vec![x]))
}

/// `↓n ≡ λk. k ≪ n`. Certificates come from the carrier when finite,
/// otherwise from the basis's candidates below `n`.
pub fn principal<B>(b: &B, n: B::Code) -> RoundedIdeal<B::Code>
where
    B: MeetBasis + Clone + Send + Sync + 'static,
    B::Code: Send + Sync + 'static,
{
    let members: Vec<B::Code> = match b.carrier() {
        Some(c) => c.into_iter().filter(|k| b.way_below(k, &n)).collect(),
        None => (0..4)
            .flat_map(|l| b.candidates(&Goal::Below(n.clone()), l))
            .filter(|k| b.way_below(k, &n))
            .collect(),
    };
    let bm = b.clone();
    let top = n.clone();
    RoundedIdeal::new(
        format!("principal {}", b.label(&n)),
        Orientation::Up,
        move |k: &B::Code| Truth::from_bool(bm.way_below(k, &top)),
        move |i| members.get(i).cloned(),
    )
}

pub const ROUNDED: &str = "rounded";
pub const ROUNDED_CONVERSE: &str = "rounded-converse";
pub const INHABITED: &str = "inhabited";
pub const DIRECTED: &str = "directed";

/// How many certificates the checks look at.
const CERT_LIMIT: usize = 64;

/// Roundedness `ξn ⟺ ∃k. n◁k ∧ ξk`, inhabitation, and directedness
/// `ξr ∧ ξs ⟹ ∃k. r◁k ∧ s◁k ∧ ξk`.
pub fn is_rounded_ideal<B: Basis + ?Sized>(
    b: &B,
    xi: &RoundedIdeal<B::Code>,
    universe: Universe,
    bound: SearchBound,
) -> Result<AxiomReport, BasisError> {
    let mut rep = AxiomReport::new(&[ROUNDED, ROUNDED_CONVERSE, INHABITED, DIRECTED]);
    let certs = xi.certificates(CERT_LIMIT);
    let (codes, complete) = match universe {
        Universe::Exhaustive => (b.carrier().ok_or(BasisError::NoCarrier)?, true),
        Universe::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v = Vec::with_capacity(count);
            for i in 0..count {
                if i % 2 == 1 && !certs.is_empty() {
                    let c = &certs[i / 2 % certs.len()];
                    v.push(b.sample_related(c, &mut rng));
                } else {
                    v.push(b.sample(&mut rng));
                }
            }
            (v, false)
        }
    };
    rep.samples = codes.len() as u64;

    let goal = |n: &B::Code| match xi.orientation {
        Orientation::Up => Goal::Above(n.clone()),
        Orientation::Down => Goal::Below(n.clone()),
    };
    let pool = |g: &Goal<B::Code>| -> Vec<B::Code> {
        let mut v: Vec<B::Code> = certs.clone();
        if complete {
            v.extend(b.carrier().unwrap_or_default());
        } else {
            for l in 0..=bound.levels {
                v.extend(b.candidates(g, l));
            }
        }
        v.truncate(bound.max_candidates.max(certs.len()));
        v
    };

    let mut members: Vec<B::Code> = Vec::new();
    for n in &codes {
        let candidates = pool(&goal(n));
        let witness = candidates.iter().find(|k| xi.rel(b, n, k) && xi.contains(k).is_true());
        match xi.contains(n) {
            Truth::True => {
                members.push(n.clone());
                match witness {
                    Some(_) => rep.pass(ROUNDED),
                    None if complete => rep.fail(ROUNDED, Failure::Refuted, vec![b.label(n)]),
                    None => rep.fail(ROUNDED, Failure::Unwitnessed, vec![b.label(n)]),
                }
            }
            Truth::False => match witness {
                Some(k) => rep.fail(ROUNDED_CONVERSE, Failure::Refuted, vec![b.label(n), b.label(k)]),
                None => rep.pass(ROUNDED_CONVERSE),
            },
            Truth::Unknown => rep.fail(ROUNDED, Failure::Unwitnessed, vec![b.label(n)]),
        }
    }

    let inhabited = certs.iter().any(|c| xi.contains(c).is_true()) || !members.is_empty();
    rep.check(INHABITED, inhabited, || vec![xi.name.clone()]);

    let pairs: Vec<(usize, usize)> = if complete {
        (0..members.len())
            .flat_map(|i| (0..members.len()).map(move |j| (i, j)))
            .collect()
    } else {
        (0..members.len()).map(|i| (i, (i + 1) % members.len())).collect()
    };
    for (i, j) in pairs {
        let (r, s) = (&members[i], &members[j]);
        let mut candidates = pool(&goal(r));
        if !complete {
            candidates.extend(pool(&goal(s)));
            if xi.orientation == Orientation::Down {
                candidates.extend(pool(&Goal::Below(b.star(r, s))));
            }
        }
        let found = candidates
            .iter()
            .any(|k| xi.rel(b, r, k) && xi.rel(b, s, k) && xi.contains(k).is_true());
        if found {
            rep.pass(DIRECTED);
        } else {
            let kind = if complete {
                Failure::Refuted
            } else {
                Failure::Unwitnessed
            };
            rep.fail(DIRECTED, kind, vec![b.label(r), b.label(s)]);
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::finite::free_dl_1;
    use crate::instances::interval::real_line_basis;
    use crate::rational::{int, ratio};

    #[test]
    fn point_membership() {
        let r = real_line_basis();
        let xi = point_ideal(&r, int(0)).unwrap();
        assert!(xi.contains(&IntervalCode::ball_i((0, 1), (1, 1))).is_true());
        assert_eq!(xi.contains(&IntervalCode::ball_i((2, 1), (1, 1))), Truth::False);
        let n = IntervalCode::ball_i((0, 1), (1, 1));
        let m = IntervalCode::ball_i((0, 1), (1, 2));
        assert!(r.way_below(&m, &n) && xi.contains(&m).is_true());
        assert!(point_ideal(&crate::instances::interval::unit_interval_basis(), ratio(3, 2)).is_err());
    }

    #[test]
    fn principal_ideals_on_free_dl() {
        let b = free_dl_1();
        for n in 0..b.size() {
            let xi = principal(&b, n);
            let rep = is_rounded_ideal(&b, &xi, Universe::Exhaustive, SearchBound::default()).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn constant_false_is_not_inhabited() {
        let b = free_dl_1();
        let xi: RoundedIdeal<usize> = RoundedIdeal::new("false", Orientation::Down, |_| Truth::False, |_| None);
        let rep = is_rounded_ideal(&b, &xi, Universe::Exhaustive, SearchBound::default()).unwrap();
        assert_eq!(rep.rule(INHABITED).unwrap().refuted, 1);
    }
}

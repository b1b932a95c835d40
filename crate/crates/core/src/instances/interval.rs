//! Rational-interval bases for `ℝ` and `[0,1]`.
//!
//! A code is `0`, `1`, or a finite union of open intervals `(lo, hi)`, each
//! paired with its closure `[lo, hi]`. Components whose opens overlap are
//! merged; components that only touch stay apart, because the point they
//! share is in the compact but not in the open.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore};

use crate::basis::{Basis, Goal, MeetBasis};
use crate::code_algebra::{CodeAlgebra, MeetAlgebra};
use crate::rational::{dyadic, half, int, lit, max, min, parse_rational, ratio, Q};
use crate::spatial::{Cell, Extent, Geometry};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IntervalCode {
    Zero,
    One,
    /// Open components, sorted, pairwise without overlap.
    Union(Vec<(Q, Q)>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("malformed interval literal `{0}`")]
    Malformed(String),
}

impl IntervalCode {
    /// `⟨c±r⟩`
    pub fn ball(c: Q, r: Q) -> Result<Self, IntervalError> {
        if r <= int(0) {
            return Err(IntervalError::NonPositiveRadius);
        }
        Ok(IntervalCode::Union(vec![(&c - &r, c + r)]))
    }

    /// Convenience for tests and examples: `⟨p/q ± r/s⟩` from machine integers.
    pub fn ball_i(c: (i64, i64), r: (i64, i64)) -> Self {
        Self::ball(ratio(c.0, c.1), ratio(r.0, r.1)).expect("positive radius")
    }

    pub fn from_open(lo: Q, hi: Q) -> Self {
        Self::union(vec![(lo, hi)])
    }

    /// Canonical union; empty input gives `0`.
    pub fn union(mut comps: Vec<(Q, Q)>) -> Self {
        comps.retain(|(a, b)| a < b);
        comps.sort();
        let mut out: Vec<(Q, Q)> = Vec::with_capacity(comps.len());
        for (a, b) in comps {
            if let Some(last) = out.last_mut() {
                if a < last.1 {
                    if b > last.1 {
                        last.1 = b;
                    }
                    continue;
                }
            }
            out.push((a, b));
        }
        if out.is_empty() {
            IntervalCode::Zero
        } else {
            IntervalCode::Union(out)
        }
    }

    pub fn components(&self) -> &[(Q, Q)] {
        match self {
            IntervalCode::Union(v) => v,
            _ => &[],
        }
    }

    /// `Some((centre, radius))` for a single-component code.
    pub fn single(&self) -> Option<(Q, Q)> {
        match self {
            IntervalCode::Union(v) if v.len() == 1 => {
                let (a, b) = &v[0];
                Some((half(&(a + b)), half(&(b - a))))
            }
            _ => None,
        }
    }
}

fn fmt_component(f: &mut fmt::Formatter<'_>, a: &Q, b: &Q) -> fmt::Result {
    write!(f, "<{}±{}>", lit(&half(&(a + b))), lit(&half(&(b - a))))
}

impl fmt::Display for IntervalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalCode::Zero => f.write_str("0"),
            IntervalCode::One => f.write_str("1"),
            IntervalCode::Union(v) => {
                for (i, (a, b)) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    fmt_component(f, a, b)?;
                }
                Ok(())
            }
        }
    }
}

/// Parses `0`, `1`, `<q±d>` (or `<q+-d>`), and `+`-joined unions of those.
pub fn parse_interval_code(text: &str) -> Result<IntervalCode, IntervalError> {
    let s = text.trim();
    let bad = || IntervalError::Malformed(s.to_string());
    match s {
        "0" => return Ok(IntervalCode::Zero),
        "1" => return Ok(IntervalCode::One),
        _ => {}
    }
    let mut comps = Vec::new();
    let mut rest = s;
    loop {
        rest = rest.trim_start();
        let body_start = rest.strip_prefix('<').ok_or_else(bad)?;
        let end = body_start.find('>').ok_or_else(bad)?;
        let body = &body_start[..end];
        let (c, r) = body.split_once('±').or_else(|| body.split_once("+-")).ok_or_else(bad)?;
        let c = parse_rational(c).map_err(|_| bad())?;
        let r = parse_rational(r).map_err(|_| bad())?;
        if r <= int(0) {
            return Err(IntervalError::NonPositiveRadius);
        }
        comps.push((&c - &r, c + r));
        rest = body_start[end + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix('+')
            .or_else(|| rest.strip_prefix('∪'))
            .ok_or_else(bad)?;
    }
    Ok(IntervalCode::union(comps))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Space {
    /// The real line; `1` is not compact.
    Line,
    /// `[0,1]`; everything is clipped to it and `1 ≪ 1`.
    Unit,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct IntervalBasis {
    pub space: Space,
    /// When set, `≪` compares with `≤` at endpoints. Not a valid basis;
    /// kept to show the checker catching it.
    pub non_strict: bool,
}

pub fn real_line_basis() -> IntervalBasis {
    IntervalBasis {
        space: Space::Line,
        non_strict: false,
    }
}

pub fn unit_interval_basis() -> IntervalBasis {
    IntervalBasis {
        space: Space::Unit,
        non_strict: false,
    }
}

/// The real-line basis with `≤` in place of `<` at endpoints.
pub fn mutated_real_line_basis() -> IntervalBasis {
    IntervalBasis {
        space: Space::Line,
        non_strict: true,
    }
}

impl IntervalBasis {
    fn clip(&self, a: &Q, b: &Q) -> Option<(Q, Q)> {
        match self.space {
            Space::Line => Some((a.clone(), b.clone())),
            Space::Unit => {
                let lo = max(a, &int(0));
                let hi = min(b, &int(1));
                (lo <= hi).then_some((lo, hi))
            }
        }
    }

    /// The compact part as closed intervals; `None` when unbounded.
    pub fn closed_parts(&self, n: &IntervalCode) -> Option<Vec<(Q, Q)>> {
        match n {
            IntervalCode::Zero => Some(Vec::new()),
            IntervalCode::One => match self.space {
                Space::Line => None,
                Space::Unit => Some(vec![(int(0), int(1))]),
            },
            IntervalCode::Union(v) => Some(v.iter().filter_map(|(a, b)| self.clip(a, b)).collect()),
        }
    }

    fn strictly(&self, outer_lo: &Q, inner_lo: &Q) -> bool {
        if self.non_strict {
            outer_lo <= inner_lo
        } else {
            outer_lo < inner_lo
        }
    }

    /// Closed `[a,b]` (inside the space) lies in the open of `m`.
    pub fn closed_in_open(&self, a: &Q, b: &Q, m: &IntervalCode) -> bool {
        match m {
            IntervalCode::Zero => false,
            IntervalCode::One => true,
            IntervalCode::Union(v) => v.iter().any(|(c, d)| self.strictly(c, a) && self.strictly(b, d)),
        }
    }

    pub fn in_open(&self, n: &IntervalCode, x: &Q) -> bool {
        if !self.in_space(x) {
            return false;
        }
        match n {
            IntervalCode::Zero => false,
            IntervalCode::One => true,
            IntervalCode::Union(v) => v.iter().any(|(a, b)| a < x && x < b),
        }
    }

    pub fn in_closed(&self, n: &IntervalCode, x: &Q) -> bool {
        if !self.in_space(x) {
            return false;
        }
        match n {
            IntervalCode::Zero => false,
            IntervalCode::One => true,
            IntervalCode::Union(v) => v.iter().any(|(a, b)| a <= x && x <= b),
        }
    }

    pub fn in_space(&self, x: &Q) -> bool {
        match self.space {
            Space::Line => true,
            Space::Unit => *x >= int(0) && *x <= int(1),
        }
    }

    /// Representative points of the arrangement cut out by the endpoints of
    /// both codes: membership in either code is constant between them.
    fn arrangement(&self, a: &IntervalCode, b: &IntervalCode) -> Vec<Q> {
        let mut pts: Vec<Q> = a
            .components()
            .iter()
            .chain(b.components())
            .flat_map(|(x, y)| [x.clone(), y.clone()])
            .collect();
        if self.space == Space::Unit {
            pts.push(int(0));
            pts.push(int(1));
        }
        pts.sort();
        pts.dedup();
        let mut out = Vec::with_capacity(pts.len() * 2 + 2);
        if let (Some(first), Some(last)) = (pts.first(), pts.last()) {
            out.push(first - int(1));
            out.push(last + int(1));
        } else {
            out.push(int(0));
        }
        for w in pts.windows(2) {
            out.push(half(&(&w[0] + &w[1])));
        }
        out.extend(pts);
        out.retain(|x| self.in_space(x));
        out
    }

    /// Open of `a` inside open of `b`.
    pub fn open_subset(&self, a: &IntervalCode, b: &IntervalCode) -> bool {
        match (a, b) {
            (_, IntervalCode::One) | (IntervalCode::Zero, _) => true,
            (IntervalCode::One, _) => match self.space {
                Space::Line => false,
                Space::Unit => self.arrangement(a, b).iter().all(|x| self.in_open(b, x)),
            },
            _ => self
                .arrangement(a, b)
                .iter()
                .all(|x| !self.in_open(a, x) || self.in_open(b, x)),
        }
    }

    /// Compact of `a` inside compact of `b`.
    pub fn closed_subset(&self, a: &IntervalCode, b: &IntervalCode) -> bool {
        match (a, b) {
            (_, IntervalCode::One) | (IntervalCode::Zero, _) => true,
            (IntervalCode::One, _) => match self.space {
                Space::Line => false,
                Space::Unit => self.arrangement(a, b).iter().all(|x| self.in_closed(b, x)),
            },
            _ => self
                .arrangement(a, b)
                .iter()
                .all(|x| !self.in_closed(a, x) || self.in_closed(b, x)),
        }
    }

    fn sample_component(&self, rng: &mut dyn RngCore) -> (Q, Q) {
        let (c, r) = match self.space {
            Space::Line => (ratio(rng.gen_range(-24..=24), 8), ratio(rng.gen_range(1..=32), 16)),
            Space::Unit => (ratio(rng.gen_range(-2..=10), 8), ratio(rng.gen_range(1..=12), 16)),
        };
        (&c - &r, c + r)
    }

    /// A single open interval (never `0`/`1`).
    pub fn sample_single(&self, rng: &mut dyn RngCore) -> IntervalCode {
        let (a, b) = self.sample_component(rng);
        IntervalCode::Union(vec![(a, b)])
    }

    /// Enlarged, shrunk or shifted copy of a single-component code.
    pub fn related_single(&self, base: &IntervalCode, rng: &mut dyn RngCore) -> IntervalCode {
        let Some((c, r)) = base.single() else {
            return self.sample_single(rng);
        };
        let (c2, r2) = match rng.gen_range(0..4) {
            0 => (c, r + ratio(rng.gen_range(1..=16), 32)),
            1 => {
                let f = ratio(rng.gen_range(1..=15), 16);
                (c, r * f)
            }
            2 => {
                let shift = ratio(rng.gen_range(-8..=8), 32);
                (c + shift, r)
            }
            _ => (c, r + ratio(1, 1 << rng.gen_range(3..=10))),
        };
        IntervalCode::ball(c2, r2).unwrap_or(IntervalCode::Zero)
    }

    /// `k` with `n ≪ k ≪ m` built from endpoint pairs: each closed component
    /// `[a,b]` of `n` inside an open `(c,d)` of `m` becomes
    /// `(a − t(a−c), b + t(d−b))`.
    fn between(&self, n: &IntervalCode, m: &IntervalCode, t: &Q) -> Option<IntervalCode> {
        let ks = self.closed_parts(n)?;
        if ks.is_empty() {
            return Some(IntervalCode::Zero);
        }
        let mut comps = Vec::with_capacity(ks.len());
        for (a, b) in &ks {
            let (c, d) = match m {
                IntervalCode::Zero => return None,
                IntervalCode::One => (a - int(2), b + int(2)),
                IntervalCode::Union(v) => v.iter().find(|(c, d)| c < a && b < d).cloned()?,
            };
            comps.push((a - t * (a - &c), b + t * (&d - b)));
        }
        Some(IntervalCode::union(comps))
    }

    fn ratios(level: u32) -> Vec<Q> {
        if level == 0 {
            return vec![ratio(1, 2)];
        }
        let den = 1i64 << (level + 1);
        (1..den)
            .step_by(2)
            .map(|k| ratio(k, den))
            .filter(|t| *t != ratio(1, 2))
            .collect()
    }

    fn enlarge(&self, n: &IntervalCode, w: &Q) -> Option<IntervalCode> {
        let ks = self.closed_parts(n)?;
        if ks.is_empty() {
            return Some(IntervalCode::Zero);
        }
        Some(IntervalCode::union(
            ks.into_iter().map(|(a, b)| (a - w, b + w)).collect(),
        ))
    }

    fn shrink(comps: &[(Q, Q)], s: &Q) -> IntervalCode {
        IntervalCode::union(comps.iter().map(|(c, d)| (c + s, d - s)).collect())
    }

    /// Depth of the worst point of `[a,b]` inside the union of the opens:
    /// `min_x max_j min(x−c_j, d_j−x)`. The minimum sits at an endpoint or
    /// where a falling edge meets a rising one.
    fn slack(a: &Q, b: &Q, opens: &[(Q, Q)]) -> Q {
        let depth = |x: &Q| {
            opens
                .iter()
                .map(|(c, d)| min(&(x - c), &(d - x)))
                .max()
                .unwrap_or_else(|| int(-1))
        };
        let mut pts = vec![a.clone(), b.clone()];
        for (_, d) in opens {
            for (c, _) in opens {
                let x = half(&(d + c));
                if a <= &x && &x <= b {
                    pts.push(x);
                }
            }
        }
        pts.iter().map(depth).min().unwrap()
    }
}

impl MeetAlgebra for IntervalBasis {
    type Code = IntervalCode;

    fn zero(&self) -> IntervalCode {
        IntervalCode::Zero
    }

    fn one(&self) -> IntervalCode {
        IntervalCode::One
    }

    fn star(&self, a: &IntervalCode, b: &IntervalCode) -> IntervalCode {
        match (a, b) {
            (IntervalCode::Zero, _) | (_, IntervalCode::Zero) => IntervalCode::Zero,
            (IntervalCode::One, x) | (x, IntervalCode::One) => x.clone(),
            (IntervalCode::Union(u), IntervalCode::Union(v)) => {
                let mut comps = Vec::new();
                for (a1, b1) in u {
                    for (a2, b2) in v {
                        let lo = max(a1, a2);
                        let hi = min(b1, b2);
                        if lo < hi {
                            comps.push((lo, hi));
                        }
                    }
                }
                IntervalCode::union(comps)
            }
        }
    }
}

impl CodeAlgebra for IntervalBasis {
    fn plus(&self, a: &IntervalCode, b: &IntervalCode) -> IntervalCode {
        match (a, b) {
            (IntervalCode::One, _) | (_, IntervalCode::One) => IntervalCode::One,
            (IntervalCode::Zero, x) | (x, IntervalCode::Zero) => x.clone(),
            (IntervalCode::Union(u), IntervalCode::Union(v)) => {
                IntervalCode::union(u.iter().chain(v).cloned().collect())
            }
        }
    }
}

impl MeetBasis for IntervalBasis {
    /// Closed part of `a` inside the open part of `b`, component by component.
    fn way_below(&self, a: &IntervalCode, b: &IntervalCode) -> bool {
        match self.closed_parts(a) {
            None => false,
            Some(ks) => ks.iter().all(|(x, y)| self.closed_in_open(x, y, b)),
        }
    }

    fn leq(&self, a: &IntervalCode, b: &IntervalCode) -> bool {
        self.open_subset(a, b) && self.closed_subset(a, b)
    }

    fn label(&self, a: &IntervalCode) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> IntervalCode {
        match rng.gen_range(0..100) {
            0..=2 => IntervalCode::Zero,
            3..=6 => IntervalCode::One,
            7..=79 => self.sample_single(rng),
            _ => {
                let a = self.sample_component(rng);
                let b = self.sample_component(rng);
                IntervalCode::union(vec![a, b])
            }
        }
    }

    fn sample_related(&self, base: &IntervalCode, rng: &mut dyn RngCore) -> IntervalCode {
        let comps = match base {
            IntervalCode::Union(v) => v.clone(),
            _ => return self.sample(rng),
        };
        match rng.gen_range(0..6) {
            0 | 1 => {
                let w = ratio(rng.gen_range(1..=16), 32);
                IntervalCode::union(comps.into_iter().map(|(a, b)| (a - &w, b + &w)).collect())
            }
            2 => {
                let f = ratio(rng.gen_range(1..=15), 32);
                IntervalCode::union(
                    comps
                        .into_iter()
                        .map(|(a, b)| {
                            let s = (&b - &a) * &f;
                            (a + &s, b - s)
                        })
                        .collect(),
                )
            }
            3 => self.plus(base, &self.sample_single(rng)),
            4 => {
                let shift = ratio(rng.gen_range(-8..=8), 32);
                IntervalCode::union(comps.into_iter().map(|(a, b)| (a + &shift, b + &shift)).collect())
            }
            _ => {
                let w = ratio(1, 1 << rng.gen_range(3..=10));
                IntervalCode::union(comps.into_iter().map(|(a, b)| (a - &w, b + &w)).collect())
            }
        }
    }

    fn candidates(&self, goal: &Goal<IntervalCode>, level: u32) -> Vec<IntervalCode> {
        let mut out = Vec::new();
        match goal {
            Goal::Between(n, m) => {
                if level == 0 {
                    out.push(IntervalCode::Zero);
                    out.push(IntervalCode::One);
                }
                for t in Self::ratios(level) {
                    if let Some(k) = self.between(n, m, &t) {
                        out.push(k);
                    }
                }
            }
            Goal::Above(n) => {
                if level == 0 {
                    out.push(IntervalCode::One);
                }
                for i in 0..8 {
                    if let Some(k) = self.enlarge(n, &dyadic(8 * level + i)) {
                        out.push(k);
                    }
                }
            }
            Goal::Below(m) => match m {
                IntervalCode::Zero => out.push(IntervalCode::Zero),
                IntervalCode::One => {
                    if level == 0 && self.space == Space::Unit {
                        out.push(IntervalCode::One);
                    }
                    for i in 0..4 {
                        let r = Q::from_integer((4 * level + i + 1).into()) * int(4);
                        out.push(IntervalCode::ball(int(0), r).unwrap());
                    }
                }
                IntervalCode::Union(v) => {
                    for i in 0..8 {
                        let f = dyadic(8 * level + i + 2);
                        out.push(IntervalCode::union(
                            v.iter()
                                .map(|(c, d)| {
                                    let s = (d - c) * &f;
                                    (c + &s, d - s)
                                })
                                .collect(),
                        ));
                    }
                }
            },
        }
        out
    }

    fn inhabited(&self, a: &IntervalCode) -> Option<bool> {
        Some(match a {
            IntervalCode::Zero => false,
            IntervalCode::One => true,
            IntervalCode::Union(v) => match self.space {
                Space::Line => !v.is_empty(),
                Space::Unit => v.iter().any(|(c, d)| *c < int(1) && *d > int(0)),
            },
        })
    }

    fn cover(&self, n: &IntervalCode, set: &[IntervalCode]) -> Option<bool> {
        let joined = set.iter().fold(IntervalCode::Zero, |acc, s| self.plus(&acc, s));
        Some(self.way_below(n, &joined))
    }

    fn bisect(&self, n: &IntervalCode) -> Option<Vec<IntervalCode>> {
        let ks = self.closed_parts(n)?;
        Some(
            ks.into_iter()
                .flat_map(|(a, b)| {
                    let mid = half(&(&a + &b));
                    if a == b {
                        vec![IntervalCode::ball(a, dyadic(40)).unwrap()]
                    } else {
                        vec![IntervalCode::from_open(a, mid.clone()), IntervalCode::from_open(mid, b)]
                    }
                })
                .collect(),
        )
    }
}

impl Basis for IntervalBasis {
    /// `(0,0)` when `n ≪ 0`; `1` split off whole when `p` or `q` is `1`;
    /// otherwise both summands shrink by half the slack of `n` in `p+q`,
    /// then a quarter, and so on by level.
    fn wilker_candidates(
        &self,
        n: &IntervalCode,
        p: &IntervalCode,
        q: &IntervalCode,
        level: u32,
    ) -> Vec<(IntervalCode, IntervalCode)> {
        let Some(ks) = self.closed_parts(n) else {
            return Vec::new();
        };
        if ks.is_empty() {
            return vec![(IntervalCode::Zero, IntervalCode::Zero)];
        }
        let whole = |other_first: bool| -> Vec<(IntervalCode, IntervalCode)> {
            let big = match self.space {
                Space::Unit => Some(IntervalCode::One),
                Space::Line => self.enlarge(n, &dyadic(level)),
            };
            big.map(|b| {
                if other_first {
                    (IntervalCode::Zero, b)
                } else {
                    (b, IntervalCode::Zero)
                }
            })
            .into_iter()
            .collect()
        };
        if *p == IntervalCode::One {
            return whole(false);
        }
        if *q == IntervalCode::One {
            return whole(true);
        }
        let opens: Vec<(Q, Q)> = p.components().iter().chain(q.components()).cloned().collect();
        let slack = ks.iter().map(|(a, b)| Self::slack(a, b, &opens)).min().unwrap();
        if slack <= int(0) {
            return Vec::new();
        }
        let s = slack * dyadic(level + 1);
        vec![(Self::shrink(p.components(), &s), Self::shrink(q.components(), &s))]
    }
}

impl Geometry for IntervalBasis {
    fn is_spatial(&self) -> bool {
        true
    }

    fn compact(&self, n: &IntervalCode) -> Option<Extent> {
        Some(match self.closed_parts(n) {
            None => Extent::Unbounded,
            Some(ks) => Extent::Cells(ks.into_iter().map(|c| vec![c]).collect()),
        })
    }

    fn inside(&self, cells: &[Cell], m: &IntervalCode) -> Option<bool> {
        Some(cells.iter().all(|c| {
            let (a, b) = &c[0];
            match self.clip(a, b) {
                None => true,
                Some((a, b)) => self.closed_in_open(&a, &b, m),
            }
        }))
    }

    fn point_in(&self, y: &[Q], m: &IntervalCode) -> Option<bool> {
        Some(self.in_open(m, &y[0]))
    }

    fn enclose(&self, cells: &[Cell], w: &Q) -> Option<IntervalCode> {
        Some(IntervalCode::union(
            cells.iter().map(|c| (&c[0].0 - w, &c[0].1 + w)).collect(),
        ))
    }
}

impl fmt::Display for IntervalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.space {
            Space::Line => "real-line",
            Space::Unit => "unit-interval",
        };
        if self.non_strict {
            write!(f, "{name} (non-strict)")
        } else {
            f.write_str(name)
        }
    }
}

/// Renders a rational interval `[l, u]`.
pub fn format_closed(l: &Q, u: &Q) -> String {
    format!("[{}, {}]", lit(l), lit(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{interpolant, wilker_witness, Search, SearchBound};

    fn b(c: (i64, i64), r: (i64, i64)) -> IntervalCode {
        IntervalCode::ball_i(c, r)
    }

    #[test]
    fn literal_round_trip() {
        for s in ["<0±1>", "<-1/2±3/4>", "<0±1>+<5±1>", "0", "1"] {
            let c = parse_interval_code(s).unwrap();
            assert_eq!(parse_interval_code(&c.to_string()).unwrap(), c);
        }
        assert_eq!(parse_interval_code("<1+-1/2>").unwrap(), b((1, 1), (1, 2)));
        assert!(parse_interval_code("<1±0>").is_err());
        assert!(parse_interval_code("<1±").is_err());
    }

    #[test]
    fn merge_rules() {
        let touching = IntervalCode::union(vec![(int(0), int(1)), (int(1), int(2))]);
        assert_eq!(touching.components().len(), 2);
        let overlapping = IntervalCode::union(vec![(int(0), int(2)), (int(1), int(3))]);
        assert_eq!(overlapping, IntervalCode::from_open(int(0), int(3)));
    }

    #[test]
    fn real_line_way_below() {
        let r = real_line_basis();
        assert!(r.way_below(&b((0, 1), (1, 1)), &b((0, 1), (2, 1))));
        assert!(!r.way_below(&b((0, 1), (2, 1)), &b((0, 1), (1, 1))));
        assert!(!r.way_below(&IntervalCode::One, &IntervalCode::One));
        let u = unit_interval_basis();
        assert!(u.way_below(&IntervalCode::One, &IntervalCode::One));
        // touching components do not cover the shared point
        let touching = IntervalCode::union(vec![(int(0), int(1)), (int(1), int(2))]);
        assert!(!r.way_below(&b((1, 1), (1, 4)), &touching));
    }

    #[test]
    fn interpolant_midpoint_rule() {
        let r = real_line_basis();
        let k = interpolant(&r, &b((0, 1), (1, 1)), &b((0, 1), (2, 1)), SearchBound::default());
        assert_eq!(k, Search::Found(b((0, 1), (3, 2))));
        let none = interpolant(&r, &IntervalCode::One, &IntervalCode::One, SearchBound::default());
        assert_eq!(none, Search::NotApplicable);
        let u = unit_interval_basis();
        assert_eq!(
            interpolant(&u, &IntervalCode::One, &IntervalCode::One, SearchBound::default()),
            Search::Found(IntervalCode::One)
        );
    }

    #[test]
    fn wilker_example() {
        let r = real_line_basis();
        let n = b((0, 1), (1, 1));
        let p = b((-1, 2), (3, 4));
        let q = b((1, 2), (3, 4));
        let w = wilker_witness(&r, &n, &p, &q, SearchBound::default());
        assert_eq!(w, Search::Found((b((-1, 2), (5, 8)), b((1, 2), (5, 8)))));
        let z = wilker_witness(&r, &IntervalCode::Zero, &p, &q, SearchBound::default());
        assert_eq!(z, Search::Found((IntervalCode::Zero, IntervalCode::Zero)));
        let far = b((10, 1), (1, 1));
        assert_eq!(
            wilker_witness(&r, &far, &p, &q, SearchBound::default()),
            Search::NotApplicable
        );
    }

    #[test]
    fn semantic_order() {
        let r = real_line_basis();
        assert!(r.leq(&b((0, 1), (1, 1)), &b((0, 1), (2, 1))));
        assert!(!r.leq(&b((0, 1), (2, 1)), &b((0, 1), (1, 1))));
        let touching = IntervalCode::union(vec![(int(0), int(1)), (int(1), int(2))]);
        let whole = IntervalCode::from_open(int(0), int(2));
        assert!(r.leq(&touching, &whole));
        assert!(!r.leq(&whole, &touching));
        assert!(r.leq(&r.star(&touching, &whole), &touching));
    }
}

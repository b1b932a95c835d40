//! Products of interval bases: rectangles `U^a × U^b` with compacts
//! `K_a × K_b`, closed under finite unions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::basis::{or_closure, Goal, MeetBasis, OrClosure, Truth};
use crate::code_algebra::{FinSet, MeetAlgebra};
use crate::instances::interval::{IntervalBasis, IntervalCode};
use crate::matrices::{refine_relate, Matrix, SrcCode, REFINE_BUDGET};
use crate::rational::Q;
use crate::spatial::{box_covered, hull, Cell, Extent, Geometry};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Rect {
    Zero,
    Pair(IntervalCode, IntervalCode),
}

/// Rectangles over two interval bases. `≪` is componentwise once both
/// compacts are inhabited; a rectangle with an empty side is `0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RectBasis {
    pub left: IntervalBasis,
    pub right: IntervalBasis,
}

pub type ProductBasis = OrClosure<RectBasis>;

pub fn product_basis(left: IntervalBasis, right: IntervalBasis) -> ProductBasis {
    or_closure(RectBasis { left, right }).expect("rectangles have a cover test")
}

fn compact_empty(b: &IntervalBasis, a: &IntervalCode) -> bool {
    b.closed_parts(a).is_some_and(|v| v.is_empty())
}

impl RectBasis {
    fn empty(&self, r: &Rect) -> bool {
        match r {
            Rect::Zero => true,
            Rect::Pair(a, b) => compact_empty(&self.left, a) || compact_empty(&self.right, b),
        }
    }

    fn open_empty(&self, r: &Rect) -> bool {
        match r {
            Rect::Zero => true,
            Rect::Pair(a, b) => self.left.inhabited(a) == Some(false) || self.right.inhabited(b) == Some(false),
        }
    }

    /// Closed boxes of the compact; `None` when unbounded.
    pub fn cells(&self, r: &Rect) -> Option<Vec<Cell>> {
        if self.empty(r) {
            return Some(Vec::new());
        }
        let Rect::Pair(a, b) = r else { unreachable!() };
        let xs = self.left.closed_parts(a)?;
        let ys = self.right.closed_parts(b)?;
        Some(
            xs.iter()
                .flat_map(|x| ys.iter().map(move |y| vec![x.clone(), y.clone()]))
                .collect(),
        )
    }

    /// Open boxes, with `None` for a whole side.
    pub fn opens(&self, r: &Rect) -> Vec<Vec<Option<(Q, Q)>>> {
        let side = |c: &IntervalCode| -> Vec<Option<(Q, Q)>> {
            match c {
                IntervalCode::Zero => Vec::new(),
                IntervalCode::One => vec![None],
                IntervalCode::Union(v) => v.iter().cloned().map(Some).collect(),
            }
        };
        match r {
            Rect::Zero => Vec::new(),
            Rect::Pair(a, b) => {
                let ys = side(b);
                side(a)
                    .into_iter()
                    .flat_map(|x| ys.iter().map(move |y| vec![x.clone(), y.clone()]))
                    .collect()
            }
        }
    }

    fn zip(&self, xs: Vec<IntervalCode>, ys: Vec<IntervalCode>) -> Vec<Rect> {
        if xs.is_empty() || ys.is_empty() {
            return Vec::new();
        }
        let width = xs.len().max(ys.len());
        (0..width)
            .map(|i| self.mk(xs[i.min(xs.len() - 1)].clone(), ys[i.min(ys.len() - 1)].clone()))
            .collect()
    }

    pub fn mk(&self, a: IntervalCode, b: IntervalCode) -> Rect {
        let r = Rect::Pair(a, b);
        if self.empty(&r) {
            Rect::Zero
        } else {
            r
        }
    }
}

impl MeetAlgebra for RectBasis {
    type Code = Rect;

    fn zero(&self) -> Rect {
        Rect::Zero
    }

    fn one(&self) -> Rect {
        Rect::Pair(IntervalCode::One, IntervalCode::One)
    }

    fn star(&self, x: &Rect, y: &Rect) -> Rect {
        match (x, y) {
            (Rect::Pair(a, b), Rect::Pair(c, d)) => self.mk(self.left.star(a, c), self.right.star(b, d)),
            _ => Rect::Zero,
        }
    }
}

impl MeetBasis for RectBasis {
    fn way_below(&self, x: &Rect, y: &Rect) -> bool {
        if self.empty(x) {
            return true;
        }
        match (x, y) {
            (Rect::Pair(a, b), Rect::Pair(c, d)) => self.left.way_below(a, c) && self.right.way_below(b, d),
            _ => false,
        }
    }

    fn leq(&self, x: &Rect, y: &Rect) -> bool {
        let open = self.open_empty(x)
            || match (x, y) {
                (Rect::Pair(a, b), Rect::Pair(c, d)) => self.left.open_subset(a, c) && self.right.open_subset(b, d),
                _ => false,
            };
        let closed = self.empty(x)
            || match (x, y) {
                (Rect::Pair(a, b), Rect::Pair(c, d)) => self.left.closed_subset(a, c) && self.right.closed_subset(b, d),
                _ => false,
            };
        open && closed
    }

    fn label(&self, r: &Rect) -> String {
        match r {
            Rect::Zero => String::from("0"),
            Rect::Pair(a, b) => format!("({a}, {b})"),
        }
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Rect {
        match rng.gen_range(0..40) {
            0 => Rect::Zero,
            1 => self.mk(self.left.sample(rng), self.right.sample(rng)),
            _ => self.mk(self.left.sample_single(rng), self.right.sample_single(rng)),
        }
    }

    fn sample_related(&self, base: &Rect, rng: &mut dyn RngCore) -> Rect {
        match base {
            Rect::Zero => self.sample(rng),
            Rect::Pair(a, b) => self.mk(self.left.sample_related(a, rng), self.right.sample_related(b, rng)),
        }
    }

    fn candidates(&self, goal: &Goal<Rect>, level: u32) -> Vec<Rect> {
        let split = |r: &Rect| match r {
            Rect::Zero => (IntervalCode::Zero, IntervalCode::Zero),
            Rect::Pair(a, b) => (a.clone(), b.clone()),
        };
        match goal {
            Goal::Above(r) => {
                if self.empty(r) {
                    return vec![Rect::Zero];
                }
                let (a, b) = split(r);
                self.zip(
                    self.left.candidates(&Goal::Above(a), level),
                    self.right.candidates(&Goal::Above(b), level),
                )
            }
            Goal::Below(r) => {
                if self.open_empty(r) {
                    return vec![Rect::Zero];
                }
                let (a, b) = split(r);
                let mut out = if level == 0 { vec![Rect::Zero] } else { Vec::new() };
                out.extend(self.zip(
                    self.left.candidates(&Goal::Below(a), level),
                    self.right.candidates(&Goal::Below(b), level),
                ));
                out
            }
            Goal::Between(x, y) => {
                if self.empty(x) {
                    return vec![Rect::Zero];
                }
                let ((a, b), (c, d)) = (split(x), split(y));
                self.zip(
                    self.left.candidates(&Goal::Between(a, c), level),
                    self.right.candidates(&Goal::Between(b, d), level),
                )
            }
        }
    }

    fn inhabited(&self, r: &Rect) -> Option<bool> {
        Some(!self.open_empty(r))
    }

    fn cover(&self, n: &Rect, set: &[Rect]) -> Option<bool> {
        let Some(cells) = self.cells(n) else {
            return Some(false);
        };
        let opens: Vec<_> = set.iter().flat_map(|r| self.opens(r)).collect();
        Some(cells.iter().all(|c| box_covered(c, &opens)))
    }

    fn bisect(&self, n: &Rect) -> Option<Vec<Rect>> {
        if self.empty(n) {
            return Some(Vec::new());
        }
        let Rect::Pair(a, b) = n else { unreachable!() };
        let xs = self.left.bisect(a)?;
        let ys = self.right.bisect(b)?;
        Some(
            xs.iter()
                .flat_map(|x| ys.iter().map(move |y| self.mk(x.clone(), y.clone())))
                .collect(),
        )
    }
}

impl Geometry for OrClosure<RectBasis> {
    fn is_spatial(&self) -> bool {
        true
    }

    fn compact(&self, n: &FinSet<Rect>) -> Option<Extent> {
        let mut out = Vec::new();
        for r in n.iter() {
            match self.base().cells(r) {
                None => return Some(Extent::Unbounded),
                Some(cs) => out.extend(cs),
            }
        }
        Some(Extent::Cells(out))
    }

    fn inside(&self, cells: &[Cell], m: &FinSet<Rect>) -> Option<bool> {
        let opens: Vec<_> = m.iter().flat_map(|r| self.base().opens(r)).collect();
        Some(cells.iter().all(|c| box_covered(c, &opens)))
    }

    fn point_in(&self, y: &[Q], m: &FinSet<Rect>) -> Option<bool> {
        let b = self.base();
        Some(m.iter().any(|r| match r {
            Rect::Zero => false,
            Rect::Pair(a, c) => b.left.in_open(a, &y[0]) && b.right.in_open(c, &y[1]),
        }))
    }

    fn enclose(&self, cells: &[Cell], w: &Q) -> Option<FinSet<Rect>> {
        let b = self.base();
        Some(FinSet::new(cells.iter().map(|c| {
            b.mk(
                IntervalCode::from_open(&c[0].0 - w, &c[0].1 + w),
                IntervalCode::from_open(&c[1].0 - w, &c[1].1 + w),
            )
        })))
    }
}

/// `⟨ρ, σ⟩(n, (p, q)) ≡ ρ(n, p) ∧ σ(n, q)`, extended to unions of
/// rectangles through image enclosures.
#[derive(Clone, Debug)]
pub struct Pair<R, S> {
    left: R,
    right: S,
    target: ProductBasis,
}

pub fn pair_matrix<R, S>(left: R, right: S) -> Result<Pair<R, S>, super::MatrixError>
where
    R: Matrix<Target = IntervalBasis>,
    S: Matrix<Source = R::Source, Target = IntervalBasis>,
    R::Source: PartialEq,
{
    if left.source() != right.source() {
        return Err(super::MatrixError::BasisMismatch);
    }
    let target = product_basis(*left.target(), *right.target());
    Ok(Pair { left, right, target })
}

impl<R, S> Matrix for Pair<R, S>
where
    R: Matrix<Target = IntervalBasis>,
    S: Matrix<Source = R::Source, Target = IntervalBasis>,
{
    type Source = R::Source;
    type Target = ProductBasis;

    fn source(&self) -> &R::Source {
        self.left.source()
    }

    fn target(&self) -> &ProductBasis {
        &self.target
    }

    fn name(&self) -> String {
        format!("<{}, {}>", self.left.name(), self.right.name())
    }

    fn relate(&self, n: &SrcCode<R>, m: &FinSet<Rect>) -> Truth {
        let nonzero: Vec<&Rect> = m.iter().filter(|r| **r != Rect::Zero).collect();
        match nonzero.as_slice() {
            [] => self.left.relate(n, &IntervalCode::Zero),
            [Rect::Pair(p, q)] => self.left.relate(n, p).and(self.right.relate(n, q)),
            _ => refine_relate(self, n, m, REFINE_BUDGET),
        }
    }

    fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
        let mut out = Vec::with_capacity(cells.len());
        for c in cells {
            let one = core::slice::from_ref(c);
            let a = hull(&self.left.image_cells(one)?)?;
            let b = hull(&self.right.image_cells(one)?)?;
            out.push(vec![a[0].clone(), b[0].clone()]);
        }
        Some(out)
    }

    fn at_point(&self, x: &[Q]) -> Option<Vec<Q>> {
        let mut y = self.left.at_point(x)?;
        y.extend(self.right.at_point(x)?);
        Some(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::interval::real_line_basis;

    fn rect(a: IntervalCode, b: IntervalCode) -> FinSet<Rect> {
        FinSet::singleton(Rect::Pair(a, b))
    }

    #[test]
    fn componentwise_waybelow() {
        let p = product_basis(real_line_basis(), real_line_basis());
        let b = IntervalCode::ball_i;
        let small = rect(b((0, 1), (1, 1)), b((0, 1), (1, 1)));
        let big = rect(b((0, 1), (2, 1)), b((0, 1), (2, 1)));
        assert!(p.way_below(&small, &big));
        let skew1 = rect(b((0, 1), (2, 1)), b((0, 1), (1, 1)));
        let skew2 = rect(b((0, 1), (1, 1)), b((0, 1), (2, 1)));
        assert!(!p.way_below(&skew1, &skew2));
    }

    #[test]
    fn union_of_rectangles_covers_square() {
        let p = product_basis(real_line_basis(), real_line_basis());
        let b = IntervalCode::ball_i;
        let sq = rect(b((0, 1), (1, 1)), b((0, 1), (1, 1)));
        let halves = FinSet::new([
            Rect::Pair(
                IntervalCode::from_open(crate::rational::int(-2), crate::rational::ratio(1, 4)),
                b((0, 1), (2, 1)),
            ),
            Rect::Pair(
                IntervalCode::from_open(crate::rational::int(0), crate::rational::int(2)),
                b((0, 1), (2, 1)),
            ),
        ]);
        assert!(p.way_below(&sq, &halves));
        assert!(!p.way_below(&sq, &FinSet::singleton(halves.iter().next().unwrap().clone())));
    }
}

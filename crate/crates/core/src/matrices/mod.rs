//! Matrices: relations `ρ(n, m)` read as "the compact of `n` maps into the
//! open of `m`", standing for continuous maps between the spaces of two
//! bases.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::basis::{Basis, MeetBasis, Truth};
use crate::code_algebra::MeetAlgebra;
use crate::rational::{dyadic, Q};
use crate::spatial::{point_cell, probes, split_cell, Cell, Extent, Geometry};

pub mod broken;
pub mod finite;
pub mod ideal;
pub mod product;
pub mod real;
pub mod validate;

pub use finite::{hom_of_matrix, matrix_of_hom, FiniteMatrix};
pub use ideal::apply_ideal;
pub use product::{pair_matrix, product_basis, Pair, ProductBasis, Rect, RectBasis};
pub use real::{builtin_real_matrix, BinaryMatrix, BinaryOp, BuiltinMatrix, UnaryMatrix, UnaryOp};
pub use validate::{preserves, validate_matrix, Connective, MATRIX_RULES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("target of the inner matrix is not the source of the outer one")]
    BasisMismatch,
    #[error("unknown builtin `{0}`")]
    UnknownKind(String),
    #[error("builtin `{kind}` takes {expected} parameter(s), got {got}")]
    BadParams { kind: String, expected: usize, got: usize },
    #[error("carrier has {size} codes, limit is {limit}")]
    CarrierTooLarge { size: usize, limit: usize },
    #[error("table has {got} rows, expected {expected}")]
    PartialTable { expected: usize, got: usize },
    #[error("table entry {0} names codes outside the source carrier")]
    BadEntry(usize),
    #[error("exhaustive validation needs finite carriers on both sides")]
    NoCarrier,
}

pub type SrcCode<M> = <<M as Matrix>::Source as MeetAlgebra>::Code;
pub type TgtCode<M> = <<M as Matrix>::Target as MeetAlgebra>::Code;

/// Subdivisions spent on one query before giving up with `Unknown`.
pub const REFINE_BUDGET: usize = 256;

pub trait Matrix {
    type Source: Basis + Geometry;
    type Target: Basis + Geometry;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn name(&self) -> String;

    /// `ρ(n, m)`; `Unknown` only when a search bound ran out.
    fn relate(&self, n: &SrcCode<Self>, m: &TgtCode<Self>) -> Truth;

    /// Closed boxes covering the image of the given boxes. Must shrink to the
    /// true image as the boxes shrink.
    fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
        let _ = cells;
        None
    }

    /// Whether `image_cells` of a single box is exactly its image.
    fn image_exact(&self) -> bool {
        false
    }

    /// The function's value at a point, when it is single-valued.
    fn at_point(&self, x: &[Q]) -> Option<Vec<Q>> {
        let _ = x;
        None
    }

    /// A target code that is often, but not always, related to `n`.
    fn sample_target(&self, n: &SrcCode<Self>, rng: &mut dyn RngCore) -> TgtCode<Self> {
        default_sample_target(self, n, rng)
    }
}

pub fn default_sample_target<M: Matrix + ?Sized>(mx: &M, n: &SrcCode<M>, rng: &mut dyn RngCore) -> TgtCode<M> {
    let t = mx.target();
    if rng.gen_bool(0.7) {
        if let Some(img) = image_of(mx, n) {
            let w = dyadic(rng.gen_range(0..12));
            if let Some(m) = t.enclose(&img, &w) {
                return if rng.gen_bool(0.3) {
                    t.sample_related(&m, rng)
                } else {
                    m
                };
            }
        }
    }
    if let Some(c) = t.carrier() {
        let below: Vec<_> = c.iter().filter(|m| mx.relate(n, m).is_true()).cloned().collect();
        if !below.is_empty() && rng.gen_bool(0.5) {
            return below[rng.gen_range(0..below.len())].clone();
        }
    }
    t.sample(rng)
}

/// Image boxes of the compact of `n`, or `None` when unbounded or unknown.
pub fn image_of<M: Matrix + ?Sized>(mx: &M, n: &SrcCode<M>) -> Option<Vec<Cell>> {
    match mx.source().compact(n)? {
        Extent::Unbounded => None,
        Extent::Cells(cs) => mx.image_cells(&cs),
    }
}

macro_rules! forward_matrix {
    ($($ty:ty),*) => {$(
        impl<M: Matrix + ?Sized> Matrix for $ty {
            type Source = M::Source;
            type Target = M::Target;
            fn source(&self) -> &M::Source {
                (**self).source()
            }
            fn target(&self) -> &M::Target {
                (**self).target()
            }
            fn name(&self) -> String {
                (**self).name()
            }
            fn relate(&self, n: &SrcCode<M>, m: &TgtCode<M>) -> Truth {
                (**self).relate(n, m)
            }
            fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
                (**self).image_cells(cells)
            }
            fn image_exact(&self) -> bool {
                (**self).image_exact()
            }
            fn at_point(&self, x: &[Q]) -> Option<Vec<Q>> {
                (**self).at_point(x)
            }
            fn sample_target(&self, n: &SrcCode<M>, rng: &mut dyn RngCore) -> TgtCode<M> {
                (**self).sample_target(n, rng)
            }
        }
    )*};
}

forward_matrix!(&M, Box<M>, Arc<M>);

/// Decides `ρ(n, m)` from image enclosures: a box whose enclosure lies in
/// `m` is settled, a probe point mapped outside `m` refutes, anything else
/// is split. `True` is sound because the enclosures contain the image, and
/// the image of a compact inside an open can always be separated from it by
/// an intermediate code.
pub fn refine_relate<M: Matrix + ?Sized>(mx: &M, n: &SrcCode<M>, m: &TgtCode<M>, budget: usize) -> Truth {
    let cells = match mx.source().compact(n) {
        None => return Truth::Unknown,
        Some(Extent::Unbounded) => return Truth::False,
        Some(Extent::Cells(cs)) => cs,
    };
    let t = mx.target();
    let mut stack = cells;
    let mut spent = 0;
    while let Some(c) = stack.pop() {
        let Some(img) = mx.image_cells(core::slice::from_ref(&c)) else {
            return Truth::Unknown;
        };
        match t.inside(&img, m) {
            Some(true) => continue,
            None => return Truth::Unknown,
            Some(false) => {}
        }
        if mx.image_exact() {
            return Truth::False;
        }
        for p in probes(&c) {
            if let Some(y) = mx.at_point(&p) {
                if t.point_in(&y, m) == Some(false) {
                    return Truth::False;
                }
            }
        }
        spent += 1;
        if spent > budget {
            return Truth::Unknown;
        }
        stack.extend(split_cell(&c));
    }
    Truth::True
}

/// `id(n, m) ≡ n ≪ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityMatrix<B> {
    basis: B,
}

pub fn identity<B: Basis + Geometry>(b: B) -> IdentityMatrix<B> {
    IdentityMatrix { basis: b }
}

impl<B: Basis + Geometry> Matrix for IdentityMatrix<B> {
    type Source = B;
    type Target = B;

    fn source(&self) -> &B {
        &self.basis
    }

    fn target(&self) -> &B {
        &self.basis
    }

    fn name(&self) -> String {
        String::from("identity")
    }

    fn relate(&self, n: &B::Code, m: &B::Code) -> Truth {
        Truth::from_bool(self.basis.way_below(n, m))
    }

    fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
        self.basis.is_spatial().then(|| cells.to_vec())
    }

    fn image_exact(&self) -> bool {
        true
    }

    fn at_point(&self, x: &[Q]) -> Option<Vec<Q>> {
        self.basis.is_spatial().then(|| x.to_vec())
    }
}

/// `(σ ∘ ρ)(n, k) ≡ ∃m. ρ(n, m) ∧ σ(m, k)`.
#[derive(Clone, Debug)]
pub struct Compose<S, R> {
    outer: S,
    inner: R,
    pub budget: usize,
}

pub fn compose<S, R>(outer: S, inner: R) -> Result<Compose<S, R>, MatrixError>
where
    R: Matrix,
    S: Matrix<Source = R::Target>,
    R::Target: PartialEq,
{
    if inner.target() != outer.source() {
        return Err(MatrixError::BasisMismatch);
    }
    Ok(Compose {
        outer,
        inner,
        budget: REFINE_BUDGET,
    })
}

impl<S, R> Compose<S, R>
where
    R: Matrix,
    S: Matrix<Source = R::Target>,
{
    pub fn outer(&self) -> &S {
        &self.outer
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }

    fn spatial(&self) -> bool {
        self.inner.source().is_spatial() && self.inner.target().is_spatial() && self.outer.target().is_spatial()
    }

    /// An explicit middle code `m` with `ρ(n, m) ∧ σ(m, k)`: a finite search
    /// over the middle carrier, or an enclosure of the image of `n` grown by
    /// `2^-i` for increasing `i`.
    pub fn witness(&self, n: &SrcCode<R>, k: &TgtCode<S>) -> Option<TgtCode<R>> {
        let mid = self.inner.target();
        if let Some(c) = mid.carrier() {
            return c
                .into_iter()
                .find(|m| self.inner.relate(n, m).is_true() && self.outer.relate(m, k).is_true());
        }
        let img = image_of(&self.inner, n)?;
        (0..64).find_map(|i| {
            let m = mid.enclose(&img, &dyadic(i))?;
            (self.inner.relate(n, &m).is_true() && self.outer.relate(&m, k).is_true()).then_some(m)
        })
    }
}

impl<S, R> Matrix for Compose<S, R>
where
    R: Matrix,
    S: Matrix<Source = R::Target>,
{
    type Source = R::Source;
    type Target = S::Target;

    fn source(&self) -> &R::Source {
        self.inner.source()
    }

    fn target(&self) -> &S::Target {
        self.outer.target()
    }

    fn name(&self) -> String {
        alloc::format!("{} . {}", self.outer.name(), self.inner.name())
    }

    fn relate(&self, n: &SrcCode<R>, k: &TgtCode<S>) -> Truth {
        if self.spatial() {
            return refine_relate(self, n, k, self.budget);
        }
        if let Some(c) = self.inner.target().carrier() {
            return c.iter().fold(Truth::False, |acc, m| {
                acc.or(self.inner.relate(n, m).and(self.outer.relate(m, k)))
            });
        }
        if self.witness(n, k).is_some() {
            Truth::True
        } else {
            Truth::Unknown
        }
    }

    fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
        let mid = self.inner.image_cells(cells)?;
        self.outer.image_cells(&mid)
    }

    fn image_exact(&self) -> bool {
        self.inner.image_exact() && self.outer.image_exact()
    }

    fn at_point(&self, x: &[Q]) -> Option<Vec<Q>> {
        self.outer.at_point(&self.inner.at_point(x)?)
    }
}

/// Image enclosure of a single point, for callers that only have a value.
pub fn point_image<M: Matrix + ?Sized>(mx: &M, x: &[Q]) -> Option<Vec<Q>> {
    mx.at_point(x).or_else(|| {
        let img = mx.image_cells(&[point_cell(x)])?;
        (img.len() == 1 && img[0].iter().all(|(a, b)| a == b)).then(|| img[0].iter().map(|(a, _)| a.clone()).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::finite::free_dl_1;
    use crate::instances::interval::{real_line_basis, IntervalCode};
    use crate::rational::{int, ratio};

    #[test]
    fn identity_is_waybelow() {
        let id = identity(real_line_basis());
        let n = IntervalCode::ball_i((0, 1), (1, 1));
        let m = IntervalCode::ball_i((0, 1), (2, 1));
        assert!(id.relate(&n, &m).is_true());
        assert_eq!(id.relate(&m, &n), Truth::False);
        assert_eq!(id.relate(&IntervalCode::One, &IntervalCode::One), Truth::False);
    }

    #[test]
    fn finite_composition_is_complete() {
        let b = free_dl_1();
        let c = compose(identity(b.clone()), identity(b.clone())).unwrap();
        for n in 0..3 {
            for m in 0..3 {
                assert_eq!(c.relate(&n, &m), Truth::from_bool(b.wb(n, m)));
            }
        }
    }

    #[test]
    fn mismatched_bases_are_rejected() {
        let a = identity(crate::instances::finite::chain(2));
        let b = identity(free_dl_1());
        assert_eq!(compose(a, b).unwrap_err(), MatrixError::BasisMismatch);
    }

    #[test]
    fn spatial_witness_exists() {
        let r = real_line_basis();
        let c = compose(identity(r), identity(r)).unwrap();
        let n = IntervalCode::ball_i((0, 1), (1, 1));
        let k = IntervalCode::from_open(ratio(-11, 10), int(2));
        assert!(c.relate(&n, &k).is_true());
        let m = c.witness(&n, &k).unwrap();
        assert!(r.way_below(&n, &m) && r.way_below(&m, &k));
    }
}

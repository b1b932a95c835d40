//! Matrices of elementary real functions, decided by exact interval
//! arithmetic: `ρ(n, m)` holds when the image of every closed component of
//! `n` lies inside the open of `m`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::basis::Truth;
use crate::code_algebra::FinSet;
use crate::instances::interval::{real_line_basis, IntervalBasis, IntervalCode};
use crate::matrices::product::{product_basis, ProductBasis, Rect};
use crate::matrices::{refine_relate, Matrix, MatrixError};
use crate::rational::{lit, max, min, Q};
use crate::spatial::Cell;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UnaryOp {
    Const(Q),
    Identity,
    Negate,
    AddConst(Q),
    Scale(Q),
}

impl UnaryOp {
    pub fn apply(&self, x: &Q) -> Q {
        match self {
            UnaryOp::Const(c) => c.clone(),
            UnaryOp::Identity => x.clone(),
            UnaryOp::Negate => -x,
            UnaryOp::AddConst(c) => x + c,
            UnaryOp::Scale(c) => x * c,
        }
    }

    /// Image of `[a, b]`; every op is monotone, so the endpoints decide.
    pub fn image(&self, a: &Q, b: &Q) -> (Q, Q) {
        let (x, y) = (self.apply(a), self.apply(b));
        (min(&x, &y), max(&x, &y))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BinaryOp {
    Add,
    Mul,
    Min,
    Max,
}

impl BinaryOp {
    pub fn apply(&self, x: &Q, y: &Q) -> Q {
        match self {
            BinaryOp::Add => x + y,
            BinaryOp::Mul => x * y,
            BinaryOp::Min => min(x, y),
            BinaryOp::Max => max(x, y),
        }
    }

    /// Image of a box. Each op is monotone or bilinear in each argument, so
    /// its extremes sit at corners.
    pub fn image(&self, (a, b): &(Q, Q), (c, d): &(Q, Q)) -> (Q, Q) {
        let corners = [self.apply(a, c), self.apply(a, d), self.apply(b, c), self.apply(b, d)];
        let lo = corners.iter().min().unwrap().clone();
        let hi = corners.iter().max().unwrap().clone();
        (lo, hi)
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            BinaryOp::Add => "add",
            BinaryOp::Mul => "mul",
            BinaryOp::Min => "min",
            BinaryOp::Max => "max",
        }
    }
}

/// A unary function `ℝ → ℝ` over the real-line basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnaryMatrix {
    pub op: UnaryOp,
    basis: IntervalBasis,
}

impl UnaryMatrix {
    pub fn new(op: UnaryOp) -> Self {
        UnaryMatrix {
            op,
            basis: real_line_basis(),
        }
    }
}

impl Matrix for UnaryMatrix {
    type Source = IntervalBasis;
    type Target = IntervalBasis;

    fn source(&self) -> &IntervalBasis {
        &self.basis
    }

    fn target(&self) -> &IntervalBasis {
        &self.basis
    }

    fn name(&self) -> String {
        match &self.op {
            UnaryOp::Const(c) => format!("const {}", lit(c)),
            UnaryOp::Identity => "identity".to_string(),
            UnaryOp::Negate => "negate".to_string(),
            UnaryOp::AddConst(c) => format!("add_const {}", lit(c)),
            UnaryOp::Scale(c) => format!("scale {}", lit(c)),
        }
    }

    fn relate(&self, n: &IntervalCode, m: &IntervalCode) -> Truth {
        refine_relate(self, n, m, 0)
    }

    fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
        Some(
            cells
                .iter()
                .map(|c| {
                    let (lo, hi) = self.op.image(&c[0].0, &c[0].1);
                    vec![(lo, hi)]
                })
                .collect(),
        )
    }

    fn image_exact(&self) -> bool {
        true
    }

    fn at_point(&self, x: &[Q]) -> Option<Vec<Q>> {
        Some(vec![self.op.apply(&x[0])])
    }
}

/// A binary function `ℝ² → ℝ` over the product of two real lines.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatrix {
    pub op: BinaryOp,
    source: ProductBasis,
    target: IntervalBasis,
}

impl BinaryMatrix {
    pub fn new(op: BinaryOp) -> Self {
        BinaryMatrix {
            op,
            source: product_basis(real_line_basis(), real_line_basis()),
            target: real_line_basis(),
        }
    }
}

impl Matrix for BinaryMatrix {
    type Source = ProductBasis;
    type Target = IntervalBasis;

    fn source(&self) -> &ProductBasis {
        &self.source
    }

    fn target(&self) -> &IntervalBasis {
        &self.target
    }

    fn name(&self) -> String {
        self.op.symbol().to_string()
    }

    fn relate(&self, n: &FinSet<Rect>, m: &IntervalCode) -> Truth {
        refine_relate(self, n, m, 0)
    }

    fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
        Some(cells.iter().map(|c| vec![self.op.image(&c[0], &c[1])]).collect())
    }

    fn image_exact(&self) -> bool {
        true
    }

    fn at_point(&self, x: &[Q]) -> Option<Vec<Q>> {
        Some(vec![self.op.apply(&x[0], &x[1])])
    }
}

/// Unary and binary builtins live over different sources.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BuiltinMatrix {
    Unary(UnaryMatrix),
    Binary(BinaryMatrix),
}

pub const BUILTIN_KINDS: [&str; 9] = [
    "const",
    "identity",
    "negate",
    "add_const",
    "scale",
    "add",
    "mul",
    "min",
    "max",
];

/// Looks a builtin up by name; `-` and `_` are interchangeable.
pub fn builtin_real_matrix(kind: &str, params: &[Q]) -> Result<BuiltinMatrix, MatrixError> {
    let key = kind.replace('-', "_");
    let expected = match key.as_str() {
        "const" | "add_const" | "scale" => 1,
        "identity" | "negate" | "add" | "mul" | "min" | "max" => 0,
        _ => return Err(MatrixError::UnknownKind(kind.to_string())),
    };
    if params.len() != expected {
        return Err(MatrixError::BadParams {
            kind: kind.to_string(),
            expected,
            got: params.len(),
        });
    }
    let p = || params[0].clone();
    let unary = |op| BuiltinMatrix::Unary(UnaryMatrix::new(op));
    let binary = |op| BuiltinMatrix::Binary(BinaryMatrix::new(op));
    Ok(match key.as_str() {
        "const" => unary(UnaryOp::Const(p())),
        "identity" => unary(UnaryOp::Identity),
        "negate" => unary(UnaryOp::Negate),
        "add_const" => unary(UnaryOp::AddConst(p())),
        "scale" => unary(UnaryOp::Scale(p())),
        "add" => binary(BinaryOp::Add),
        "mul" => binary(BinaryOp::Mul),
        "min" => binary(BinaryOp::Min),
        _ => binary(BinaryOp::Max),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn rect(a: IntervalCode, b: IntervalCode) -> FinSet<Rect> {
        FinSet::singleton(Rect::Pair(a, b))
    }

    #[test]
    fn examples() {
        let b = IntervalCode::ball_i;
        let add = BinaryMatrix::new(BinaryOp::Add);
        assert!(add
            .relate(&rect(b((0, 1), (1, 4)), b((0, 1), (1, 4))), &b((0, 1), (1, 1)))
            .is_true());
        let mul = BinaryMatrix::new(BinaryOp::Mul);
        let n = rect(b((1, 1), (1, 2)), b((1, 1), (1, 2)));
        assert!(mul.relate(&n, &b((1, 1), (2, 1))).is_true());
        assert_eq!(
            mul.relate(&n, &IntervalCode::from_open(ratio(1, 4), int(3))),
            Truth::False
        );
        let neg = UnaryMatrix::new(UnaryOp::Negate);
        assert!(neg.relate(&b((1, 1), (1, 4)), &b((-1, 1), (1, 2))).is_true());
    }

    #[test]
    fn unbounded_and_empty_compacts() {
        let c = UnaryMatrix::new(UnaryOp::Const(int(3)));
        assert_eq!(c.relate(&IntervalCode::One, &IntervalCode::One), Truth::False);
        assert!(c.relate(&IntervalCode::Zero, &IntervalCode::Zero).is_true());
        assert!(c
            .relate(
                &IntervalCode::ball_i((100, 1), (1, 1)),
                &IntervalCode::ball_i((3, 1), (1, 1000))
            )
            .is_true());
    }

    #[test]
    fn lookup() {
        assert!(matches!(
            builtin_real_matrix("add-const", &[int(1)]),
            Ok(BuiltinMatrix::Unary(_))
        ));
        assert!(matches!(builtin_real_matrix("mul", &[]), Ok(BuiltinMatrix::Binary(_))));
        assert!(matches!(
            builtin_real_matrix("sqrt", &[]),
            Err(MatrixError::UnknownKind(_))
        ));
        assert!(matches!(
            builtin_real_matrix("scale", &[]),
            Err(MatrixError::BadParams { .. })
        ));
    }
}

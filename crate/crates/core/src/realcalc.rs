//! Real expressions in one variable `x`, compiled to matrices over the
//! interval basis on the line and evaluated to a requested precision.
//!
//! Grammar: `+`, `-` (binary and unary), `*`, `min(a, b)`, `max(a, b)`,
//! parentheses, `x`, and rational literals `p/q` or integers. Unary minus
//! binds tightest, so `-3*x` is `(-3)*x`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::instances::interval::{format_closed, real_line_basis, IntervalBasis, IntervalCode};
use crate::matrices::{compose, identity, pair_matrix, BinaryMatrix, BinaryOp, Matrix, UnaryMatrix, UnaryOp};
use crate::rational::{dyadic, lit, max, min, parse_rational, Q};
use crate::spatial::hull;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Lit(Q),
    Var,
    Neg(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn bin(op: Op, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    pub fn negated(a: Expr) -> Expr {
        Expr::Neg(Box::new(a))
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Lit(q) if q.is_negative() => 3,
            Expr::Neg(_) => 3,
            Expr::Bin(Op::Add | Op::Sub, ..) => 1,
            Expr::Bin(Op::Mul, ..) => 2,
            _ => 4,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, need: u8) -> fmt::Result {
        let paren = self.prec() < need;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Expr::Lit(q) => write!(f, "{}", lit(q))?,
            Expr::Var => f.write_str("x")?,
            // a literal right after `-` would be read back as a negative literal
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.write(f, if matches!(**a, Expr::Lit(_)) { 5 } else { 3 })?;
            }
            Expr::Bin(op @ (Op::Min | Op::Max), a, b) => {
                f.write_str(if *op == Op::Min { "min(" } else { "max(" })?;
                a.write(f, 0)?;
                f.write_str(", ")?;
                b.write(f, 0)?;
                f.write_str(")")?;
            }
            Expr::Bin(op, a, b) => {
                let (sym, p) = match op {
                    Op::Add => (" + ", 1),
                    Op::Sub => (" - ", 1),
                    _ => ("*", 2),
                };
                a.write(f, p)?;
                f.write_str(sym)?;
                b.write(f, p + 1)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Prints in the accepted syntax; parsing the output gives the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("non-rational literal `{text}` at offset {offset}")]
    Literal { offset: usize, text: String },
}

impl ExprError {
    pub fn offset(&self) -> usize {
        match self {
            ExprError::Syntax { offset, .. } | ExprError::Literal { offset, .. } => *offset,
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn bytes(&self) -> &[u8] {
        self.src.as_bytes()
    }

    fn peek(&mut self) -> Option<u8> {
        while self.bytes().get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.bytes().get(self.pos).copied()
    }

    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            offset,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.describe();
            self.err(self.pos, alloc::format!("expected `{}`, found {found}", c as char))
        }
    }

    fn describe(&self) -> String {
        match self.src[self.pos..].chars().next() {
            None => String::from("end of input"),
            Some(c) => alloc::format!("`{c}`"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => Op::Add,
                Some(b'-') => Op::Sub,
                _ => return Ok(e),
            };
            self.pos += 1;
            e = Expr::bin(op, e, self.term()?);
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    e = Expr::bin(Op::Mul, e, self.unary()?);
                }
                Some(b'/') => return self.err(self.pos, "division is not supported"),
                _ => return Ok(e),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() != Some(b'-') {
            return self.atom();
        }
        self.pos += 1;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return Ok(match self.atom()? {
                Expr::Lit(q) => Expr::Lit(-q),
                e => Expr::negated(e),
            });
        }
        Ok(Expr::negated(self.unary()?))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let start = match self.peek() {
            None => return self.err(self.pos, "expected an operand, found end of input"),
            Some(_) => self.pos,
        };
        let b = self.bytes()[start];
        if b.is_ascii_digit() {
            return self.literal(start);
        }
        if b == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        if b.is_ascii_alphabetic() {
            let len = self.bytes()[start..]
                .iter()
                .take_while(|c| c.is_ascii_alphanumeric() || **c == b'_')
                .count();
            self.pos = start + len;
            let op = match &self.src[start..self.pos] {
                "x" => return Ok(Expr::Var),
                "min" => Op::Min,
                "max" => Op::Max,
                name => return self.err(start, alloc::format!("unknown name `{name}`")),
            };
            self.expect(b'(')?;
            let a = self.expr()?;
            self.expect(b',')?;
            let c = self.expr()?;
            self.expect(b')')?;
            return Ok(Expr::bin(op, a, c));
        }
        let found = self.describe();
        self.err(start, alloc::format!("expected an operand, found {found}"))
    }

    /// Digits, optionally `/` and more digits, with no spaces inside.
    fn literal(&mut self, start: usize) -> Result<Expr, ExprError> {
        let len = self.bytes()[start..]
            .iter()
            .take_while(|c| c.is_ascii_alphanumeric() || matches!(c, b'/' | b'.' | b'_'))
            .count();
        self.pos = start + len;
        let text = &self.src[start..self.pos];
        parse_rational(text).map(Expr::Lit).map_err(|_| ExprError::Literal {
            offset: start,
            text: text.to_string(),
        })
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        let found = p.describe();
        return p.err(p.pos, alloc::format!("unexpected {found}"));
    }
    Ok(e)
}

/// Exact value at a rational point.
pub fn eval_rational(e: &Expr, x: &Q) -> Q {
    match e {
        Expr::Lit(q) => q.clone(),
        Expr::Var => x.clone(),
        Expr::Neg(a) => -eval_rational(a, x),
        Expr::Bin(op, a, b) => {
            let (a, b) = (eval_rational(a, x), eval_rational(b, x));
            match op {
                Op::Add => a + b,
                Op::Sub => a - b,
                Op::Mul => a * b,
                Op::Min => min(&a, &b),
                Op::Max => max(&a, &b),
            }
        }
    }
}

/// A matrix from the line to itself.
pub type RealMatrix = Arc<dyn Matrix<Source = IntervalBasis, Target = IntervalBasis> + Send + Sync>;

fn negate(a: RealMatrix) -> RealMatrix {
    Arc::new(compose(UnaryMatrix::new(UnaryOp::Negate), a).expect("both sides live on the line"))
}

fn binary(op: BinaryOp, a: RealMatrix, b: RealMatrix) -> RealMatrix {
    let pair = pair_matrix(a, b).expect("both sides live on the line");
    Arc::new(compose(BinaryMatrix::new(op), pair).expect("pairs land in the product of lines"))
}

/// Literals become constants, `x` the identity, and each binary node
/// `compose(op, pair(left, right))`. Subtraction is `add ∘ ⟨a, negate ∘ b⟩`.
pub fn compile(e: &Expr) -> RealMatrix {
    match e {
        Expr::Lit(q) => Arc::new(UnaryMatrix::new(UnaryOp::Const(q.clone()))),
        Expr::Var => Arc::new(identity(real_line_basis())),
        Expr::Neg(a) => negate(compile(a)),
        Expr::Bin(op, a, b) => {
            let (a, b) = (compile(a), compile(b));
            match op {
                Op::Add => binary(BinaryOp::Add, a, b),
                Op::Sub => binary(BinaryOp::Add, a, negate(b)),
                Op::Mul => binary(BinaryOp::Mul, a, b),
                Op::Min => binary(BinaryOp::Min, a, b),
                Op::Max => binary(BinaryOp::Max, a, b),
            }
        }
    }
}

/// A closed interval with exact endpoints, `lower ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lower: Q,
    pub upper: Q,
}

impl RationalInterval {
    pub fn new(lower: Q, upper: Q) -> Option<Self> {
        (lower <= upper).then_some(RationalInterval { lower, upper })
    }

    pub fn contains(&self, x: &Q) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    pub fn width(&self) -> Q {
        &self.upper - &self.lower
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_closed(&self.lower, &self.upper))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub interval: RationalInterval,
    /// `δ = 2^-depth` at the verified query.
    pub depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("precision must be positive")]
    NonPositiveEps,
    #[error("no answer verified down to depth {0}")]
    DepthExhausted(u32),
}

pub const DEFAULT_MAX_DEPTH: u32 = 64;

/// Grid points tried per depth. Deeper levels are used while the enclosed
/// image is wider than this many half-ε steps.
pub const MAX_CANDIDATES: usize = 64;

/// Grid multiples `k·pitch` from just below `lo` to just above `hi`, by
/// increasing `|y|` and then `y`. `None` when there are too many.
fn grid(lo: &Q, hi: &Q, pitch: &Q) -> Option<Vec<Q>> {
    let k0: BigInt = (lo / pitch).floor().to_integer();
    let k1: BigInt = (hi / pitch).ceil().to_integer();
    let count = &k1 - &k0 + 1;
    if count > BigInt::from(MAX_CANDIDATES) {
        return None;
    }
    let mut ys = Vec::new();
    let mut k = k0;
    while k <= k1 {
        ys.push(Q::from_integer(k.clone()) * pitch);
        k += 1;
    }
    ys.sort_by(|a, b| a.abs().cmp(&b.abs()).then(a.cmp(b)));
    Some(ys)
}

/// For `δ = 1, 1/2, 1/4, …` asks `ρ(⟨x±δ⟩, ⟨y±ε⟩)` for grid centres `y`
/// around the enclosed image of `[x-δ, x+δ]` and returns `[y-ε, y+ε]` for the
/// first `y` that is verified. The answer contains `f(x)` since `x` lies in
/// the compact of `⟨x±δ⟩`.
pub fn evaluate(e: &Expr, x: &Q, eps: &Q, max_depth: u32) -> Result<Evaluation, EvalError> {
    if !eps.is_positive() {
        return Err(EvalError::NonPositiveEps);
    }
    let rho = compile(e);
    let pitch = eps / Q::from_integer(2.into());
    for depth in 0..=max_depth {
        let delta = dyadic(depth);
        let cell = vec![(x - &delta, x + &delta)];
        let Some(img) = rho.image_cells(&[cell]).and_then(|cs| hull(&cs)) else {
            continue;
        };
        let Some(ys) = grid(&img[0].0, &img[0].1, &pitch) else {
            continue;
        };
        let n = IntervalCode::ball(x.clone(), delta).expect("positive radius");
        for y in ys {
            let m = IntervalCode::ball(y.clone(), eps.clone()).expect("positive radius");
            if rho.relate(&n, &m).is_true() {
                let interval = RationalInterval::new(&y - eps, &y + eps).expect("ε > 0");
                return Ok(Evaluation { interval, depth });
            }
        }
    }
    Err(EvalError::DepthExhausted(max_depth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Truth;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn p(s: &str) -> Expr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(p("x+1"), Expr::bin(Op::Add, Expr::Var, Expr::Lit(int(1))));
        assert_eq!(
            p("x*(x+1)"),
            Expr::bin(Op::Mul, Expr::Var, Expr::bin(Op::Add, Expr::Var, Expr::Lit(int(1))))
        );
        assert_eq!(
            p("1-x-x"),
            Expr::bin(Op::Sub, Expr::bin(Op::Sub, Expr::Lit(int(1)), Expr::Var), Expr::Var)
        );
        assert_eq!(p("-x*x"), Expr::bin(Op::Mul, Expr::negated(Expr::Var), Expr::Var));
        assert_eq!(p("-3/4*x"), Expr::bin(Op::Mul, Expr::Lit(ratio(-3, 4)), Expr::Var));
        assert_eq!(
            p(" min( x , 0-x ) "),
            Expr::bin(Op::Min, Expr::Var, Expr::bin(Op::Sub, Expr::Lit(int(0)), Expr::Var))
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let off = |s: &str| parse_expr(s).unwrap_err().offset();
        assert_eq!(off("x+"), 2);
        assert_eq!(off(""), 0);
        assert_eq!(off("x/2"), 1);
        assert_eq!(off("(x"), 2);
        assert_eq!(off("x x"), 2);
        assert_eq!(off("sin(x)"), 0);
        assert!(matches!(parse_expr("1.5"), Err(ExprError::Literal { offset: 0, .. })));
        assert!(matches!(parse_expr("x+1/0"), Err(ExprError::Literal { offset: 2, .. })));
        assert!(matches!(parse_expr("2e3"), Err(ExprError::Literal { .. })));
    }

    #[test]
    fn printer_examples() {
        for s in [
            "x + 1",
            "x*(x + 1)",
            "-(3)",
            "-(-3)",
            "-3*x",
            "x - -1/2",
            "min(x, max(1, -x))",
            "x - (x - 1)",
            "--x",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            Just(Expr::Var),
            (-20i64..20, 1i64..6).prop_map(|(a, b)| Expr::Lit(ratio(a, b)))
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            let op = prop_oneof![
                Just(Op::Add),
                Just(Op::Sub),
                Just(Op::Mul),
                Just(Op::Min),
                Just(Op::Max)
            ];
            prop_oneof![
                inner.clone().prop_map(Expr::negated),
                (op, inner.clone(), inner).prop_map(|(o, a, b)| Expr::bin(o, a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse(e in arb_expr()) {
            prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn compiled_variable_is_waybelow() {
        let id = compile(&Expr::Var);
        let b = IntervalCode::ball_i;
        assert!(id.relate(&b((0, 1), (1, 1)), &b((0, 1), (2, 1))).is_true());
        assert_eq!(id.relate(&b((0, 1), (2, 1)), &b((0, 1), (1, 1))), Truth::False);
    }

    #[test]
    fn evaluation_examples() {
        let r = evaluate(&p("x+1"), &int(0), &ratio(1, 2), 20).unwrap();
        assert!(r.interval.contains(&int(1)) && r.interval.width() == int(1));
        let eps = ratio(1, 1_000_000);
        let r = evaluate(&p("x*x+1"), &ratio(1, 3), &eps, 64).unwrap();
        assert!(r.interval.contains(&ratio(10, 9)));
        assert_eq!(r.interval.width(), &eps * int(2));
        let r = evaluate(&p("min(x, 0-x)"), &int(0), &ratio(1, 4), 20).unwrap();
        assert!(r.interval.contains(&int(0)));
    }

    #[test]
    fn evaluation_failures() {
        assert_eq!(evaluate(&p("x"), &int(0), &int(0), 4), Err(EvalError::NonPositiveEps));
        assert_eq!(
            evaluate(&p("x*x"), &int(5), &ratio(1, 1000), 2),
            Err(EvalError::DepthExhausted(2))
        );
    }

    #[test]
    fn grid_order() {
        let ys = grid(&ratio(-1, 2), &ratio(1, 2), &ratio(1, 4)).unwrap();
        assert_eq!(&ys[..3], &[int(0), ratio(-1, 4), ratio(1, 4)]);
        assert!(grid(&int(0), &int(100), &ratio(1, 4)).is_none());
    }
}

//! Relations that are not matrices, for exercising the validator.

use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::basis::{MeetBasis, Truth};
use crate::instances::interval::{real_line_basis, IntervalBasis, IntervalCode};
use crate::matrices::Matrix;
use crate::rational::{dyadic, int, Q};
use crate::spatial::{box_covered, Cell, Extent, Geometry};

/// `ρ(n, m) ≡ ⊤`. Breaks `ρ(n, 0) ⟺ n ≪ 0` at every inhabited `n`.
#[derive(Clone, Debug)]
pub struct ConstantTrue {
    basis: IntervalBasis,
}

pub fn constant_true() -> ConstantTrue {
    ConstantTrue {
        basis: real_line_basis(),
    }
}

impl Matrix for ConstantTrue {
    type Source = IntervalBasis;
    type Target = IntervalBasis;

    fn source(&self) -> &IntervalBasis {
        &self.basis
    }

    fn target(&self) -> &IntervalBasis {
        &self.basis
    }

    fn name(&self) -> String {
        String::from("constant-true")
    }

    fn relate(&self, _: &IntervalCode, _: &IntervalCode) -> Truth {
        Truth::True
    }
}

/// The offset used by [`shift_union`].
pub const SHIFT: i64 = 10;

/// `ρ(n, m) ≡ ∀x ∈ Kₙ. x ∈ U^m ∨ x + 10 ∈ U^m`, the relation of the
/// two-valued map `x ↦ {x, x+10}`. It respects `0`, `1`, `+` and rounding
/// but not `⋆`: `⟨0±1⟩` maps into both `⟨0±2⟩` and `⟨10±2⟩`, whose meet
/// is empty.
#[derive(Clone, Debug)]
pub struct ShiftUnion {
    basis: IntervalBasis,
}

pub fn shift_union() -> ShiftUnion {
    ShiftUnion {
        basis: real_line_basis(),
    }
}

fn shifted(cells: &[Cell], d: &Q) -> Vec<Cell> {
    cells
        .iter()
        .map(|c| c.iter().map(|(a, b)| (a + d, b + d)).collect())
        .collect()
}

impl Matrix for ShiftUnion {
    type Source = IntervalBasis;
    type Target = IntervalBasis;

    fn source(&self) -> &IntervalBasis {
        &self.basis
    }

    fn target(&self) -> &IntervalBasis {
        &self.basis
    }

    fn name(&self) -> String {
        String::from("shift-union")
    }

    fn relate(&self, n: &IntervalCode, m: &IntervalCode) -> Truth {
        let cells = match self.basis.compact(n) {
            Some(Extent::Cells(cs)) => cs,
            _ => return Truth::False,
        };
        let opens: Vec<Vec<Option<(Q, Q)>>> = match m {
            IntervalCode::Zero => Vec::new(),
            IntervalCode::One => alloc::vec![alloc::vec![None]],
            IntervalCode::Union(v) => v
                .iter()
                .flat_map(|(a, b)| {
                    [
                        alloc::vec![Some((a.clone(), b.clone()))],
                        alloc::vec![Some((a - int(SHIFT), b - int(SHIFT)))],
                    ]
                })
                .collect(),
        };
        Truth::from_bool(cells.iter().all(|c| box_covered(c, &opens)))
    }

    fn image_cells(&self, cells: &[Cell]) -> Option<Vec<Cell>> {
        let mut out = cells.to_vec();
        out.extend(shifted(cells, &int(SHIFT)));
        Some(out)
    }

    /// Encloses `n`, its shift, or both.
    fn sample_target(&self, n: &IntervalCode, rng: &mut dyn RngCore) -> IntervalCode {
        let Some(Extent::Cells(cs)) = self.basis.compact(n) else {
            return self.basis.sample(rng);
        };
        let w = dyadic(rng.gen_range(0..6));
        let img = match rng.gen_range(0..3) {
            0 => cs,
            1 => shifted(&cs, &int(SHIFT)),
            _ => self.image_cells(&cs).unwrap_or_default(),
        };
        self.basis.enclose(&img, &w).unwrap_or(IntervalCode::Zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meet_counterexample_from_the_doc() {
        let s = shift_union();
        let b = IntervalCode::ball_i;
        let n = b((0, 1), (1, 1));
        assert!(s.relate(&n, &b((0, 1), (2, 1))).is_true());
        assert!(s.relate(&n, &b((10, 1), (2, 1))).is_true());
        assert_eq!(s.relate(&n, &IntervalCode::Zero), Truth::False);
    }
}

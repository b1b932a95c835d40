//! Applying a matrix to a point: `υ(m) ≡ ∃n. ξ(n) ∧ ρ(n, m)`.

use alloc::format;
use alloc::vec::Vec;

use crate::basis::{MeetBasis, Truth};
use crate::instances::ideal::{RoundedIdeal, POINT_CERTIFICATES};
use crate::matrices::{Matrix, SrcCode, TgtCode};
use crate::rational::dyadic;
use crate::spatial::{point_cell, Geometry};

/// Certificate indices tried for ideals of points. Point certificates shrink,
/// so `ρ` only gets easier along the stream and sparse probing suffices.
const POINT_PROBES: [usize; 16] = [
    0,
    1,
    2,
    3,
    4,
    6,
    8,
    12,
    16,
    24,
    32,
    48,
    64,
    96,
    128,
    POINT_CERTIFICATES - 1,
];

/// The image ideal. On finite sources membership is decided over the whole
/// carrier. Otherwise witnesses come from `ξ`'s certificates; a missing
/// witness is `False` only when `ξ` is a point whose image provably lies
/// outside `m`, and `Unknown` otherwise.
pub fn apply_ideal<M>(mx: M, xi: &RoundedIdeal<SrcCode<M>>) -> RoundedIdeal<TgtCode<M>>
where
    M: Matrix + Clone + Send + Sync + 'static,
    SrcCode<M>: Clone + Send + Sync + 'static,
    TgtCode<M>: Clone + Send + Sync + 'static,
{
    let name = format!("{} applied to {}", mx.name(), xi.name);
    let image_point = xi.point.as_ref().and_then(|x| mx.at_point(x));
    let finite_members: Option<Vec<SrcCode<M>>> = mx
        .source()
        .carrier()
        .map(|c| c.into_iter().filter(|n| xi.contains(n).is_true()).collect());

    let member = {
        let mx = mx.clone();
        let xi = xi.clone();
        let y = image_point.clone();
        move |m: &TgtCode<M>| -> Truth {
            if let Some(ns) = &finite_members {
                return ns.iter().fold(Truth::False, |acc, n| acc.or(mx.relate(n, m)));
            }
            if let Some(y) = &y {
                if mx.target().point_in(y, m) == Some(false) {
                    return Truth::False;
                }
            }
            let found = if xi.point.is_some() {
                POINT_PROBES
                    .iter()
                    .filter_map(|&i| xi.certificate(i))
                    .any(|n| mx.relate(&n, m).is_true())
            } else {
                (0..POINT_CERTIFICATES)
                    .map_while(|i| xi.certificate(i))
                    .any(|n| mx.relate(&n, m).is_true())
            };
            if found {
                Truth::True
            } else {
                Truth::Unknown
            }
        }
    };

    let target_members: Option<Vec<TgtCode<M>>> = mx
        .target()
        .carrier()
        .map(|c| c.into_iter().filter(|m| member(m).is_true()).collect());
    let certs = {
        let mx = mx.clone();
        let y = image_point.clone();
        move |i: usize| -> Option<TgtCode<M>> {
            if let Some(ms) = &target_members {
                return ms.get(i).cloned();
            }
            let y = y.as_ref()?;
            if i >= POINT_CERTIFICATES {
                return None;
            }
            mx.target().enclose(&[point_cell(y)], &dyadic(i as u32))
        }
    };
    let out = RoundedIdeal::new(name, xi.orientation, member, certs);
    match image_point {
        Some(y) => out.with_point(y),
        None => out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::ideal::point_ideal;
    use crate::instances::interval::{real_line_basis, IntervalCode};
    use crate::matrices::{identity, UnaryMatrix, UnaryOp};
    use crate::rational::int;

    #[test]
    fn add_one_at_zero() {
        let xi = point_ideal(&real_line_basis(), int(0)).unwrap();
        let up = apply_ideal(UnaryMatrix::new(UnaryOp::AddConst(int(1))), &xi);
        assert!(up.contains(&IntervalCode::ball_i((1, 1), (1, 2))).is_true());
        assert_eq!(up.contains(&IntervalCode::ball_i((5, 1), (1, 1))), Truth::False);
        assert_eq!(up.point, Some(alloc::vec![int(1)]));
    }

    #[test]
    fn identity_leaves_points_alone() {
        let r = real_line_basis();
        let xi = point_ideal(&r, int(0)).unwrap();
        let same = apply_ideal(identity(r), &xi);
        for m in [
            IntervalCode::ball_i((1, 2), (1, 1)),
            IntervalCode::ball_i((1, 1), (1, 1)),
            IntervalCode::One,
        ] {
            assert_eq!(same.contains(&m), xi.contains(&m), "{m}");
        }
    }
}

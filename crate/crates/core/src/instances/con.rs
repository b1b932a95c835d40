//! The consistency predicate on finite sets of single intervals.

use alloc::string::{String, ToString};

use crate::instances::interval::IntervalCode;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConError {
    #[error("`{0}` is not a single interval")]
    NotSingle(String),
}

/// Whether the open intervals share a point: the largest lower endpoint is
/// below the smallest upper one. By density of the rationals this is the
/// same as asking for a rational common point.
pub fn con_check<'a>(codes: impl IntoIterator<Item = &'a IntervalCode>) -> Result<bool, ConError> {
    let mut lower = None;
    let mut upper = None;
    for c in codes {
        let comps = c.components();
        if comps.len() != 1 {
            return Err(ConError::NotSingle(c.to_string()));
        }
        let (a, b) = &comps[0];
        if lower.as_ref().is_none_or(|l| a > l) {
            lower = Some(a.clone());
        }
        if upper.as_ref().is_none_or(|u| b < u) {
            upper = Some(b.clone());
        }
    }
    Ok(match (lower, upper) {
        (Some(l), Some(u)) => l < u,
        _ => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_cases() {
        let b = IntervalCode::ball_i;
        assert!(con_check(&[b((0, 1), (1, 1)), b((1, 1), (1, 2))]).unwrap());
        assert!(!con_check(&[b((0, 1), (1, 4)), b((1, 1), (1, 4))]).unwrap());
        assert!(con_check(&[]).unwrap());
        assert!(con_check(&[IntervalCode::One]).is_err());
    }
}

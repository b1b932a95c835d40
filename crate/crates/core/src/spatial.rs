//! Geometric hooks for bases whose codes denote boxes in `ℝ^d`.

use alloc::vec;
use alloc::vec::Vec;

use crate::basis::MeetBasis;
use crate::rational::{half, simplest_between, Q};

/// A closed box, one `(lo, hi)` with `lo ≤ hi` per dimension.
pub type Cell = Vec<(Q, Q)>;

/// The compact of a code, or an enclosure of an image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extent {
    /// Not compact: relates to nothing.
    Unbounded,
    Cells(Vec<Cell>),
}

/// Optional geometry. Non-spatial bases keep the defaults.
pub trait Geometry: MeetBasis {
    fn is_spatial(&self) -> bool {
        false
    }

    /// Closed boxes whose union is the compact of `n`.
    fn compact(&self, n: &Self::Code) -> Option<Extent> {
        let _ = n;
        None
    }

    /// Whether every box lies in the open of `m`.
    fn inside(&self, cells: &[Cell], m: &Self::Code) -> Option<bool> {
        let _ = (cells, m);
        None
    }

    fn point_in(&self, y: &[Q], m: &Self::Code) -> Option<bool> {
        let _ = (y, m);
        None
    }

    /// A code whose open contains every box and whose compact lies within
    /// distance `w` of them.
    fn enclose(&self, cells: &[Cell], w: &Q) -> Option<Self::Code> {
        let _ = (cells, w);
        None
    }
}

pub fn point_cell(xs: &[Q]) -> Cell {
    xs.iter().map(|x| (x.clone(), x.clone())).collect()
}

pub fn grow(c: &Cell, w: &Q) -> Cell {
    c.iter().map(|(a, b)| (a - w, b + w)).collect()
}

/// Splits every side in half.
pub fn split_cell(c: &Cell) -> Vec<Cell> {
    let mut out: Vec<Cell> = vec![Vec::new()];
    for (a, b) in c {
        let mid = half(&(a + b));
        let mut next = Vec::with_capacity(out.len() * 2);
        for prefix in &out {
            for side in [(a.clone(), mid.clone()), (mid.clone(), b.clone())] {
                let mut p = prefix.clone();
                p.push(side);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Corners, centre, and the point with the simplest coordinates, which is
/// where breakpoints such as `0` tend to sit.
pub fn probes(c: &Cell) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = vec![Vec::new()];
    for (a, b) in c {
        let mut next = Vec::new();
        for p in &out {
            for x in [a, b] {
                let mut q = p.clone();
                q.push(x.clone());
                next.push(q);
            }
        }
        out = next;
    }
    out.push(c.iter().map(|(a, b)| half(&(a + b))).collect());
    out.push(c.iter().map(|(a, b)| simplest_between(a, b)).collect());
    out
}

pub fn hull(cells: &[Cell]) -> Option<Cell> {
    let first = cells.first()?;
    let mut h = first.clone();
    for c in &cells[1..] {
        for (i, (a, b)) in c.iter().enumerate() {
            if *a < h[i].0 {
                h[i].0 = a.clone();
            }
            if *b > h[i].1 {
                h[i].1 = b.clone();
            }
        }
    }
    Some(h)
}

/// Halves the longest side.
pub fn split_longest(c: &Cell) -> Vec<Cell> {
    let k = (0..c.len())
        .max_by(|&i, &j| (&c[i].1 - &c[i].0).cmp(&(&c[j].1 - &c[j].0)))
        .unwrap_or(0);
    let (a, b) = &c[k];
    let mid = half(&(a + b));
    let mut lo = c.clone();
    let mut hi = c.clone();
    lo[k].1 = mid.clone();
    hi[k].0 = mid;
    vec![lo, hi]
}

type OpenBox = Vec<Option<(Q, Q)>>;

/// Whether the closed box lies in the union of the open boxes. Sides of
/// open boxes may be `None` for the whole line. Membership is constant
/// between consecutive endpoints, so each leading dimension is cut into
/// slabs at the endpoints and the last dimension is a sorted sweep.
pub fn box_covered(c: &Cell, opens: &[OpenBox]) -> bool {
    let refs: Vec<&OpenBox> = opens.iter().collect();
    covered_from(c, 0, &refs)
}

fn covered_from(c: &Cell, k: usize, opens: &[&OpenBox]) -> bool {
    if opens.is_empty() {
        return false;
    }
    if k == c.len() {
        return true;
    }
    let (a, b) = &c[k];
    if k + 1 == c.len() {
        let mut ivs: Vec<(&Q, &Q)> = Vec::with_capacity(opens.len());
        for o in opens {
            match &o[k] {
                None => return true,
                Some((lo, hi)) => {
                    if lo <= b && hi >= a {
                        ivs.push((lo, hi));
                    }
                }
            }
        }
        ivs.sort();
        let mut x = a.clone();
        let mut i = 0;
        let mut best: Option<&Q> = None;
        loop {
            while i < ivs.len() && *ivs[i].0 < x {
                if best.is_none_or(|h| ivs[i].1 > h) {
                    best = Some(ivs[i].1);
                }
                i += 1;
            }
            match best {
                Some(h) if *h > x => {
                    if h > b {
                        return true;
                    }
                    x = h.clone();
                }
                _ => return false,
            }
        }
    }
    let mut cuts: Vec<&Q> = vec![a, b];
    for o in opens {
        if let Some((lo, hi)) = &o[k] {
            for x in [lo, hi] {
                if a <= x && x <= b {
                    cuts.push(x);
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let mids: Vec<Q> = cuts.windows(2).map(|w| half(&(w[0] + w[1]))).collect();
    cuts.iter().copied().chain(mids.iter()).all(|r| {
        let sub: Vec<&OpenBox> = opens
            .iter()
            .copied()
            .filter(|o| match &o[k] {
                None => true,
                Some((lo, hi)) => lo < r && r < hi,
            })
            .collect();
        covered_from(c, k + 1, &sub)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn unit_square_needs_both_halves() {
        let c: Cell = vec![(int(0), int(1)), (int(0), int(1))];
        let left = vec![Some((int(-1), ratio(2, 3))), Some((int(-1), int(2)))];
        let right = vec![Some((ratio(1, 3), int(2))), None];
        assert!(box_covered(&c, &[left.clone(), right.clone()]));
        assert!(!box_covered(&c, &[left]));
        let touching = vec![Some((int(1), int(2))), None];
        let lower = vec![Some((int(-1), int(1))), None];
        assert!(!box_covered(&c, &[lower, touching]));
    }
}

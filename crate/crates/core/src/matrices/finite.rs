//! Matrices between finite bases, stored as bit tables, and their exchange
//! with maps `Σ^N₂ → Σ^N₁` given as tables on subsets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::basis::Truth;
use crate::bitset::Bits;
use crate::instances::finite::FiniteBasis;
use crate::matrices::{Matrix, MatrixError};

/// Largest target carrier accepted for tables on subsets.
pub const MAX_TABLE_CARRIER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMatrix {
    source: FiniteBasis,
    target: FiniteBasis,
    /// `rows[n]` holds every `m` with `ρ(n, m)`.
    rows: Vec<Bits>,
    name: String,
}

impl FiniteMatrix {
    pub fn from_fn(
        name: impl Into<String>,
        source: FiniteBasis,
        target: FiniteBasis,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let rows = (0..source.size())
            .map(|n| Bits::from_indices(target.size(), (0..target.size()).filter(|&m| f(n, m))))
            .collect();
        FiniteMatrix {
            source,
            target,
            rows,
            name: name.into(),
        }
    }

    pub fn get(&self, n: usize, m: usize) -> bool {
        self.rows[n].contains(m)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, r)| r.iter().map(move |m| (n, m)))
    }
}

impl Matrix for FiniteMatrix {
    type Source = FiniteBasis;
    type Target = FiniteBasis;

    fn source(&self) -> &FiniteBasis {
        &self.source
    }

    fn target(&self) -> &FiniteBasis {
        &self.target
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn relate(&self, n: &usize, m: &usize) -> Truth {
        Truth::from_bool(self.get(*n, *m))
    }
}

fn down_mask(b: &FiniteBasis, m: usize) -> u32 {
    b.below(m).iter().fold(0, |acc, k| acc | 1 << k)
}

/// `ρ(n, m) ≡ ∃n′ ∈ H(↓m). n ≪ n′`, where `↓m = {k : k ≪ m}` is the
/// predicate `β^m` read on the target carrier and `H` is a table indexed by
/// subset masks of the target carrier.
pub fn matrix_of_hom(source: &FiniteBasis, target: &FiniteBasis, h: &[u32]) -> Result<FiniteMatrix, MatrixError> {
    if target.size() > MAX_TABLE_CARRIER {
        return Err(MatrixError::CarrierTooLarge {
            size: target.size(),
            limit: MAX_TABLE_CARRIER,
        });
    }
    let expected = 1usize << target.size();
    if h.len() != expected {
        return Err(MatrixError::PartialTable { expected, got: h.len() });
    }
    if let Some(i) = h.iter().position(|&v| source.size() < 32 && v >> source.size() != 0) {
        return Err(MatrixError::BadEntry(i));
    }
    Ok(FiniteMatrix::from_fn(
        format!("matrix of hom ({} rows)", h.len()),
        source.clone(),
        target.clone(),
        |n, m| {
            let image = h[down_mask(target, m) as usize];
            source.above(n).iter().any(|k| image >> k & 1 == 1)
        },
    ))
}

/// `H(ψ) = {n : ∃m. (∃m′ ∈ ψ. m ≪ m′) ∧ ρ(n, m)}`.
pub fn hom_of_matrix(rho: &FiniteMatrix) -> Result<Vec<u32>, MatrixError> {
    let (s, t) = (rho.source(), rho.target());
    if t.size() > MAX_TABLE_CARRIER || s.size() > 32 {
        return Err(MatrixError::CarrierTooLarge {
            size: t.size().max(s.size()),
            limit: MAX_TABLE_CARRIER,
        });
    }
    Ok((0u32..1 << t.size())
        .map(|psi| {
            let reach: Vec<usize> = (0..t.size())
                .filter(|&m| t.above(m).iter().any(|m2| psi >> m2 & 1 == 1))
                .collect();
            (0..s.size())
                .filter(|&n| reach.iter().any(|&m| rho.get(n, m)))
                .fold(0, |acc, n| acc | 1 << n)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::finite::{diamond, free_dl_1};

    #[test]
    fn identity_table_gives_waybelow() {
        for b in [free_dl_1(), diamond()] {
            let id: Vec<u32> = (0..1u32 << b.size()).collect();
            let rho = matrix_of_hom(&b, &b, &id).unwrap();
            for n in 0..b.size() {
                for m in 0..b.size() {
                    assert_eq!(rho.get(n, m), b.wb(n, m), "{n} {m}");
                }
            }
        }
    }

    #[test]
    fn roundtrip_on_free_dl_1() {
        let b = free_dl_1();
        let rho = FiniteMatrix::from_fn("wb", b.clone(), b.clone(), |n, m| b.wb(n, m));
        let h = hom_of_matrix(&rho).unwrap();
        assert_eq!(matrix_of_hom(&b, &b, &h).unwrap().rows, rho.rows);
    }

    #[test]
    fn table_errors() {
        let b = free_dl_1();
        assert_eq!(
            matrix_of_hom(&b, &b, &[0; 3]).unwrap_err(),
            MatrixError::PartialTable { expected: 8, got: 3 }
        );
        assert_eq!(
            matrix_of_hom(&b, &b, &[0, 0, 0, 0, 0, 0, 0, 8]).unwrap_err(),
            MatrixError::BadEntry(7)
        );
    }
}

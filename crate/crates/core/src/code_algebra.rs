//! Codes, the imposed lattice operations and formal sums of products.
//!
//! Nothing here assumes the lattice equations hold on the nose. `+` and `⋆`
//! are arbitrary total operations; the order `⊑` is generated by rules and
//! the equations only hold up to mutual `⊑`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::Relation;

/// Codes with `0`, `1` and an intersection-like `⋆`.
pub trait MeetAlgebra {
    type Code: Clone + Ord + fmt::Debug;

    fn zero(&self) -> Self::Code;
    fn one(&self) -> Self::Code;
    fn star(&self, a: &Self::Code, b: &Self::Code) -> Self::Code;
}

/// A full code algebra: `0`, `1`, `+`, `⋆`.
pub trait CodeAlgebra: MeetAlgebra {
    fn plus(&self, a: &Self::Code, b: &Self::Code) -> Self::Code;
}

/// Finite set in canonical (sorted, deduplicated) form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FinSet<T>(Vec<T>);

impl<T: Ord> FinSet<T> {
    pub fn new(items: impl IntoIterator<Item = T>) -> Self {
        let mut v: Vec<T> = items.into_iter().collect();
        v.sort();
        v.dedup();
        FinSet(v)
    }

    pub fn empty() -> Self {
        FinSet(Vec::new())
    }

    pub fn singleton(x: T) -> Self {
        FinSet(alloc::vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().all(|x| other.contains(x))
    }

    pub fn iter(&self) -> core::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }
}

impl<T: Ord + Clone> FinSet<T> {
    pub fn union(&self, other: &Self) -> Self {
        FinSet::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn insert(&self, x: T) -> Self {
        FinSet::new(self.0.iter().cloned().chain(core::iter::once(x)))
    }
}

impl<T: Ord> FromIterator<T> for FinSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        FinSet::new(iter)
    }
}

impl<'a, T> IntoIterator for &'a FinSet<T> {
    type Item = &'a T;
    type IntoIter = core::slice::Iter<'a, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<T: fmt::Display> fmt::Display for FinSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// A formal sum of formal products: a finite set of finite sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FormalDNF<T>(FinSet<FinSet<T>>);

impl<T: Ord> FormalDNF<T> {
    pub fn new(products: impl IntoIterator<Item = FinSet<T>>) -> Self {
        FormalDNF(FinSet::new(products))
    }

    pub fn from_nested<I, J>(products: I) -> Self
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = T>,
    {
        FormalDNF::new(products.into_iter().map(FinSet::new))
    }

    /// The empty sum (`⊥`).
    pub fn bottom() -> Self {
        FormalDNF(FinSet::empty())
    }

    /// The sum holding one empty product (`⊤`).
    pub fn top() -> Self {
        FormalDNF(FinSet::singleton(FinSet::empty()))
    }

    pub fn products(&self) -> &FinSet<FinSet<T>> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, FinSet<T>> {
        self.0.iter()
    }
}

impl<T: fmt::Display> fmt::Display for FormalDNF<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `{ ℓ ∪ ℓ′ : ℓ ∈ R, ℓ′ ∈ S }`
pub fn dnf_meet<T: Ord + Clone>(r: &FormalDNF<T>, s: &FormalDNF<T>) -> FormalDNF<T> {
    FormalDNF::new(r.iter().flat_map(|l| s.iter().map(move |l2| l.union(l2))))
}

/// Union of the two sets of products.
pub fn dnf_plus<T: Ord + Clone>(r: &FormalDNF<T>, s: &FormalDNF<T>) -> FormalDNF<T> {
    FormalDNF(r.0.union(&s.0))
}

/// `∀ℓ∈L. ∃ℓ′∈R. ℓ′ ⊆ ℓ`
pub fn upper_order<T: Ord>(r: &FormalDNF<T>, l: &FormalDNF<T>) -> bool {
    l.iter().all(|p| r.iter().any(|q| q.is_subset(p)))
}

pub fn dnf_congruent<T: Ord>(l: &FormalDNF<T>, r: &FormalDNF<T>) -> bool {
    upper_order(r, l) && upper_order(l, r)
}

/// `⋆`-fold of a formal product; the empty product is `1`.
pub fn product<A: MeetAlgebra>(alg: &A, l: &FinSet<A::Code>) -> A::Code {
    let mut it = l.iter();
    match it.next() {
        None => alg.one(),
        Some(first) => it.fold(first.clone(), |acc, x| alg.star(&acc, x)),
    }
}

/// `+`-fold of the `⋆`-folds, in canonical order; the empty sum is `0`.
pub fn ev<A: CodeAlgebra>(alg: &A, l: &FormalDNF<A::Code>) -> A::Code {
    let mut it = l.iter();
    match it.next() {
        None => alg.zero(),
        Some(first) => it.fold(product(alg, first), |acc, p| alg.plus(&acc, &product(alg, p))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("duplicate code name `{0}`")]
    DuplicateName(String),
    #[error("unknown code name `{0}`")]
    UnknownName(String),
    #[error("`{op}` table is missing the entry for ({left}, {right})")]
    MissingEntry {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("`{op}` table gives two results for ({left}, {right})")]
    ConflictingEntry {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("`{op}` table has wrong shape")]
    BadShape { op: &'static str },
    #[error("code index {0} out of range")]
    OutOfRange(usize),
}

/// A finitely presented code algebra: codes are indices `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    zero: usize,
    one: usize,
    plus: Vec<usize>,
    star: Vec<usize>,
}

impl FiniteAlgebra {
    /// Tables are indexed `[left][right]`.
    pub fn new(
        names: Vec<String>,
        zero: usize,
        one: usize,
        plus: Vec<Vec<usize>>,
        star: Vec<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mut seen = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateName(name.clone()));
            }
        }
        for c in [zero, one] {
            if c >= n {
                return Err(AlgebraError::OutOfRange(c));
            }
        }
        let flat = |op: &'static str, t: Vec<Vec<usize>>| -> Result<Vec<usize>, AlgebraError> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(AlgebraError::BadShape { op });
            }
            let v: Vec<usize> = t.into_iter().flatten().collect();
            if let Some(&bad) = v.iter().find(|&&x| x >= n) {
                return Err(AlgebraError::OutOfRange(bad));
            }
            Ok(v)
        };
        let plus = flat("plus", plus)?;
        let star = flat("star", star)?;
        Ok(FiniteAlgebra {
            names,
            zero,
            one,
            plus,
            star,
        })
    }

    /// Builds from named `[left, right, result]` triples; every pair must appear.
    pub fn from_triples(
        names: Vec<String>,
        zero: &str,
        one: &str,
        plus: &[[String; 3]],
        star: &[[String; 3]],
    ) -> Result<Self, AlgebraError> {
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if index.len() != names.len() {
            let mut seen = BTreeMap::new();
            for s in &names {
                if seen.insert(s, ()).is_some() {
                    return Err(AlgebraError::DuplicateName(s.clone()));
                }
            }
        }
        let look = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| AlgebraError::UnknownName(s.to_string()))
        };
        let n = names.len();
        let table = |op: &'static str, triples: &[[String; 3]]| {
            let mut t: Vec<Vec<Option<usize>>> = alloc::vec![alloc::vec![None; n]; n];
            for [l, r, v] in triples {
                let (li, ri, vi) = (look(l)?, look(r)?, look(v)?);
                match t[li][ri] {
                    Some(old) if old != vi => {
                        return Err(AlgebraError::ConflictingEntry {
                            op,
                            left: l.clone(),
                            right: r.clone(),
                        })
                    }
                    _ => t[li][ri] = Some(vi),
                }
            }
            let mut out = Vec::with_capacity(n);
            for (i, row) in t.into_iter().enumerate() {
                let mut r = Vec::with_capacity(n);
                for (j, v) in row.into_iter().enumerate() {
                    r.push(v.ok_or_else(|| AlgebraError::MissingEntry {
                        op,
                        left: names[i].clone(),
                        right: names[j].clone(),
                    })?);
                }
                out.push(r);
            }
            Ok(out)
        };
        let p = table("plus", plus)?;
        let s = table("star", star)?;
        FiniteAlgebra::new(names.clone(), look(zero)?, look(one)?, p, s)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    #[inline]
    pub fn plus_idx(&self, a: usize, b: usize) -> usize {
        self.plus[a * self.size() + b]
    }

    #[inline]
    pub fn star_idx(&self, a: usize, b: usize) -> usize {
        self.star[a * self.size() + b]
    }

    /// The least relation closed under the rules generating `⊑`.
    ///
    /// Base facts: `0⊑n`, `n⊑n`, `n⊑1`, `(k⋆n)+(k⋆m) ⊑ k⋆(n+m)`. Closure:
    /// transitivity, and both directions of the meet and join rules
    /// (`k⊑n ∧ k⊑m ⟺ k⊑n⋆m`, `n⊑k ∧ m⊑k ⟺ n+m⊑k`).
    pub fn imposed_order(&self) -> Relation {
        let n = self.size();
        let mut up = Relation::empty(n);
        for a in 0..n {
            up.insert(self.zero, a);
            up.insert(a, a);
            up.insert(a, self.one);
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let l = self.plus_idx(self.star_idx(k, a), self.star_idx(k, b));
                    let r = self.star_idx(k, self.plus_idx(a, b));
                    up.insert(l, r);
                }
            }
        }
        loop {
            let mut changed = up.close_transitive();
            let down = up.transpose();
            for a in 0..n {
                for b in 0..n {
                    let s = self.star_idx(a, b);
                    for k in down.row(a).and(down.row(b)).iter() {
                        changed |= up.insert(k, s);
                    }
                    for k in down.row(s).iter() {
                        changed |= up.insert(k, a);
                        changed |= up.insert(k, b);
                    }
                    let j = self.plus_idx(a, b);
                    let both = up.row(a).and(up.row(b));
                    changed |= up.row_mut(j).union_with(&both);
                    let above = up.row(j).clone();
                    changed |= up.row_mut(a).union_with(&above);
                    changed |= up.row_mut(b).union_with(&above);
                }
            }
            if !changed {
                return up;
            }
        }
    }

    pub fn imposed_leq(&self, a: usize, b: usize) -> bool {
        self.imposed_order().get(a, b)
    }
}

impl MeetAlgebra for FiniteAlgebra {
    type Code = usize;
    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn star(&self, a: &usize, b: &usize) -> usize {
        self.star_idx(*a, *b)
    }
}

impl CodeAlgebra for FiniteAlgebra {
    fn plus(&self, a: &usize, b: &usize) -> usize {
        self.plus_idx(*a, *b)
    }
}

/// The Lindenbaum-style algebra of raw formal DNFs, with `+` = union of
/// products and `⋆` = [`dnf_meet`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct DnfAlgebra;

impl MeetAlgebra for DnfAlgebra {
    type Code = FormalDNF<usize>;
    fn zero(&self) -> Self::Code {
        FormalDNF::bottom()
    }
    fn one(&self) -> Self::Code {
        FormalDNF::top()
    }
    fn star(&self, a: &Self::Code, b: &Self::Code) -> Self::Code {
        dnf_meet(a, b)
    }
}

impl CodeAlgebra for DnfAlgebra {
    fn plus(&self, a: &Self::Code, b: &Self::Code) -> Self::Code {
        dnf_plus(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn d(v: &[&[usize]]) -> FormalDNF<usize> {
        FormalDNF::from_nested(v.iter().map(|s| s.iter().copied()))
    }

    /// Two-generator free distributive lattice: 0, ab, a, b, a+b, 1.
    fn free2() -> FiniteAlgebra {
        // elements as down-set bitmasks over {ab, a, b} join-irreducibles
        let masks = [0b000u8, 0b001, 0b011, 0b101, 0b111];
        let mut all: Vec<u8> = masks.to_vec();
        all.push(0b1000 | 0b111); // top, distinct from a+b
        let names: Vec<String> = ["0", "ab", "a", "b", "a+b", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let idx = |m: u8| all.iter().position(|x| *x == m).unwrap();
        let plus = (0..6).map(|i| (0..6).map(|j| idx(all[i] | all[j])).collect()).collect();
        let star = (0..6).map(|i| (0..6).map(|j| idx(all[i] & all[j])).collect()).collect();
        FiniteAlgebra::new(names, 0, 5, plus, star).unwrap()
    }

    #[test]
    fn ev_examples() {
        let alg = DnfAlgebra;
        assert_eq!(ev(&alg, &FormalDNF::<FormalDNF<usize>>::bottom()), FormalDNF::bottom());
        assert_eq!(ev(&alg, &FormalDNF::<FormalDNF<usize>>::top()), FormalDNF::top());
        let a = d(&[&[0]]);
        let b = d(&[&[1]]);
        let c = d(&[&[2]]);
        let l = FormalDNF::from_nested(vec![vec![a.clone(), b.clone()], vec![c.clone()]]);
        let expect = dnf_plus(&dnf_meet(&a, &b), &c);
        assert_eq!(ev(&alg, &l), expect);
    }

    #[test]
    fn meet_examples() {
        assert_eq!(dnf_meet(&d(&[&[0]]), &d(&[&[1], &[2]])), d(&[&[0, 1], &[0, 2]]));
        assert_eq!(dnf_meet(&FormalDNF::bottom(), &d(&[&[1]])), FormalDNF::bottom());
        let s = d(&[&[1], &[0, 2]]);
        assert_eq!(dnf_meet(&FormalDNF::top(), &s), s);
    }

    #[test]
    fn upper_order_examples() {
        assert!(upper_order(&d(&[&[1]]), &d(&[&[1, 2], &[1, 3]])));
        assert!(!upper_order(&d(&[&[1, 2]]), &d(&[&[1]])));
        assert!(upper_order(&d(&[&[5]]), &FormalDNF::bottom()));
        assert!(dnf_congruent(&d(&[&[0]]), &d(&[&[0], &[0, 1]])));
        assert!(!dnf_congruent(&FormalDNF::<usize>::bottom(), &FormalDNF::top()));
    }

    #[test]
    fn imposed_order_base_rules() {
        let alg = free2();
        let ord = alg.imposed_order();
        for n in 0..alg.size() {
            assert!(ord.get(alg.zero(), n));
            assert!(ord.get(n, alg.one()));
            assert!(ord.get(n, n));
        }
        let (a, b) = (alg.index_of("a").unwrap(), alg.index_of("b").unwrap());
        let ab = alg.plus_idx(a, b);
        assert!(!ord.get(ab, a));
        assert!(ord.get(a, ab));
        assert!(ord.get(alg.star_idx(a, b), b));
        for k in 0..6 {
            for n in 0..6 {
                for m in 0..6 {
                    let l = alg.plus_idx(alg.star_idx(k, n), alg.star_idx(k, m));
                    assert!(ord.get(l, alg.star_idx(k, alg.plus_idx(n, m))));
                }
            }
        }
    }

    #[test]
    fn triples_loader_rejects_partial() {
        let names: Vec<String> = vec!["0".into(), "1".into()];
        let t = |l: &str, r: &str, v: &str| [l.to_string(), r.to_string(), v.to_string()];
        let full_plus = vec![t("0", "0", "0"), t("0", "1", "1"), t("1", "0", "1"), t("1", "1", "1")];
        let full_star = vec![t("0", "0", "0"), t("0", "1", "0"), t("1", "0", "0"), t("1", "1", "1")];
        assert!(FiniteAlgebra::from_triples(names.clone(), "0", "1", &full_plus, &full_star).is_ok());
        let partial = &full_plus[..3];
        assert!(matches!(
            FiniteAlgebra::from_triples(names.clone(), "0", "1", partial, &full_star),
            Err(AlgebraError::MissingEntry { op: "plus", .. })
        ));
        assert!(matches!(
            FiniteAlgebra::from_triples(names, "0", "z", &full_plus, &full_star),
            Err(AlgebraError::UnknownName(_))
        ));
    }
}

//! Finite bases from documents (names and operation tables) and from
//! builtin names such as `chain-3` or `sigma-2`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::basis::MeetBasis;
use crate::bitset::Relation;
use crate::code_algebra::{AlgebraError, FiniteAlgebra};
use crate::instances::finite::{
    broken_chain_2, chain, diamond, discrete_basis, free_dl_1, free_dl_2, sigma_basis, FiniteBasis,
};
use crate::instances::interval::{parse_interval_code, real_line_basis};

/// How `≪` is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Waybelow {
    Pairs(Vec<[String; 2]>),
    /// One of [`WAYBELOW_RULES`].
    Rule(String),
}

pub const WAYBELOW_RULES: [&str; 5] = ["interval", "subset", "superset", "equality", "upper_order"];

/// A finitely presented basis: the carrier by name, `0` and `1`, total
/// `+` and `⋆` tables as `[left, right, result]`, and `≪`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisDocument {
    pub carrier: Vec<String>,
    pub zero: String,
    pub one: String,
    pub plus: Vec<[String; 3]>,
    pub star: Vec<[String; 3]>,
    pub waybelow: Waybelow,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("unknown waybelow rule `{0}`")]
    UnknownRule(String),
    #[error("waybelow rule `{rule}` cannot read the code name `{name}`")]
    RuleMismatch { rule: String, name: String },
    #[error("unknown code name `{0}` in the waybelow pairs")]
    UnknownName(String),
    #[error("unknown builtin basis `{0}`")]
    UnknownBuiltin(String),
}

/// `{a,b}` as a set of element names; `None` for anything else.
fn set_literal(name: &str) -> Option<BTreeSet<String>> {
    let inner = name.trim().strip_prefix('{')?.strip_suffix('}')?.trim();
    if inner.is_empty() {
        return Some(BTreeSet::new());
    }
    Some(inner.split(',').map(|s| s.trim().to_string()).collect())
}

fn rule_relation(names: &[String], rule: &str) -> Result<Relation, LoadError> {
    let n = names.len();
    let mismatch = |name: &String| LoadError::RuleMismatch {
        rule: rule.to_string(),
        name: name.clone(),
    };
    match rule {
        "equality" => Ok(Relation::from_fn(n, |i, j| i == j)),
        "subset" | "superset" => {
            let sets = names
                .iter()
                .map(|s| set_literal(s).ok_or_else(|| mismatch(s)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Relation::from_fn(n, |i, j| {
                if rule == "subset" {
                    sets[i].is_subset(&sets[j])
                } else {
                    sets[j].is_subset(&sets[i])
                }
            }))
        }
        "interval" => {
            let codes = names
                .iter()
                .map(|s| parse_interval_code(s).map_err(|_| mismatch(s)))
                .collect::<Result<Vec<_>, _>>()?;
            let line = real_line_basis();
            Ok(Relation::from_fn(n, |i, j| line.way_below(&codes[i], &codes[j])))
        }
        other => Err(LoadError::UnknownRule(other.to_string())),
    }
}

/// Builds the basis. The axioms are not checked here.
pub fn load_finite_basis(doc: &BasisDocument) -> Result<FiniteBasis, LoadError> {
    let alg = FiniteAlgebra::from_triples(doc.carrier.clone(), &doc.zero, &doc.one, &doc.plus, &doc.star)?;
    let wb = match &doc.waybelow {
        Waybelow::Rule(r) if r == "upper_order" => return Ok(FiniteBasis::reflexive(alg)),
        Waybelow::Rule(r) => rule_relation(&doc.carrier, r)?,
        Waybelow::Pairs(pairs) => {
            let mut rel = Relation::empty(alg.size());
            for [a, b] in pairs {
                let look = |s: &String| alg.index_of(s).ok_or_else(|| LoadError::UnknownName(s.clone()));
                rel.insert(look(a)?, look(b)?);
            }
            rel
        }
    };
    Ok(FiniteBasis::new(alg, wb))
}

pub const FINITE_BUILTINS: [&str; 7] = [
    "chain-K",
    "free-dl-1",
    "free-dl-2",
    "diamond",
    "broken-chain-2",
    "discrete-K",
    "sigma-K",
];

/// `chain-K` for `2 ≤ K ≤ 16`, `discrete-K` for `K ≤ 4`, `sigma-K` for `K ≤ 2`.
pub fn builtin_finite_basis(name: &str) -> Result<FiniteBasis, LoadError> {
    let unknown = || LoadError::UnknownBuiltin(name.to_string());
    let key = name.replace('_', "-");
    let sized = |prefix: &str, lo: usize, hi: usize| -> Option<usize> {
        let k: usize = key.strip_prefix(prefix)?.parse().ok()?;
        (lo..=hi).contains(&k).then_some(k)
    };
    Ok(match key.as_str() {
        "free-dl-1" => free_dl_1(),
        "free-dl-2" => free_dl_2(),
        "diamond" => diamond(),
        "broken-chain-2" => broken_chain_2(),
        _ => {
            if let Some(k) = sized("chain-", 2, 16) {
                chain(k)
            } else if let Some(k) = sized("discrete-", 1, 4) {
                discrete_basis(k)
            } else if let Some(k) = sized("sigma-", 1, 2) {
                sigma_basis(k)
            } else {
                return Err(unknown());
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(x: &str) -> String {
        x.to_string()
    }

    fn named_chain(lo: &str, hi: &str, waybelow: Waybelow) -> BasisDocument {
        let t = |a: &str, b: &str, c: &str| [s(a), s(b), s(c)];
        BasisDocument {
            carrier: vec![s(lo), s(hi)],
            zero: s(lo),
            one: s(hi),
            plus: vec![t(lo, lo, lo), t(lo, hi, hi), t(hi, lo, hi), t(hi, hi, hi)],
            star: vec![t(lo, lo, lo), t(lo, hi, lo), t(hi, lo, lo), t(hi, hi, hi)],
            waybelow,
        }
    }

    fn chain_doc(waybelow: Waybelow) -> BasisDocument {
        named_chain("0", "1", waybelow)
    }

    #[test]
    fn two_point_chain_loads_and_passes() {
        let pairs = vec![[s("0"), s("0")], [s("0"), s("1")], [s("1"), s("1")]];
        for wb in [Waybelow::Pairs(pairs), Waybelow::Rule(s("upper_order"))] {
            let b = load_finite_basis(&chain_doc(wb)).unwrap();
            assert!(b.check_exhaustive().passed());
            assert!(b.wb(0, 1) && !b.wb(1, 0));
        }
    }

    #[test]
    fn load_errors() {
        let mut doc = chain_doc(Waybelow::Rule(s("upper_order")));
        doc.plus.pop();
        assert!(matches!(
            load_finite_basis(&doc),
            Err(LoadError::Algebra(AlgebraError::MissingEntry { .. }))
        ));
        let doc = named_chain("bot", "top", Waybelow::Rule(s("interval")));
        assert!(matches!(load_finite_basis(&doc), Err(LoadError::RuleMismatch { .. })));
        let doc = chain_doc(Waybelow::Rule(s("sideways")));
        assert_eq!(load_finite_basis(&doc), Err(LoadError::UnknownRule(s("sideways"))));
        let doc = chain_doc(Waybelow::Pairs(vec![[s("0"), s("2")]]));
        assert_eq!(load_finite_basis(&doc), Err(LoadError::UnknownName(s("2"))));
    }

    #[test]
    fn subset_rule_reads_set_names() {
        let d = discrete_basis(2);
        let names: Vec<String> = (0..d.size()).map(|i| s(d.name(i))).collect();
        let rel = rule_relation(&names, "subset").unwrap();
        assert_eq!(&rel, d.waybelow_relation());
        let sup = rule_relation(&names, "superset").unwrap();
        assert_eq!(sup, rel.transpose());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin_finite_basis("chain-3").unwrap().size(), 3);
        assert_eq!(builtin_finite_basis("sigma_2").unwrap().size(), 16);
        assert!(builtin_finite_basis("chain-1").is_err());
        assert!(builtin_finite_basis("torus").is_err());
    }
}

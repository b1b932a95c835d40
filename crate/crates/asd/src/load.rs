//! Basis and matrix references: builtin names, JSON files and inline JSON.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use asd_core::instances::document::{
    builtin_finite_basis, load_finite_basis, BasisDocument, Waybelow, FINITE_BUILTINS,
};
use asd_core::instances::finite::FiniteBasis;
use asd_core::instances::interval::{mutated_real_line_basis, real_line_basis, unit_interval_basis, IntervalBasis};
use asd_core::matrices::broken::{constant_true, shift_union};
use asd_core::matrices::{builtin_real_matrix, identity, BinaryMatrix, BuiltinMatrix, FiniteMatrix, IdentityMatrix};
use asd_core::rational::parse_rational;
use asd_core::realcalc::{compile, parse_expr, RealMatrix};
use serde::Deserialize;

pub const SPATIAL_BUILTINS: [&str; 3] = ["real-line", "unit-interval", "mutated-real-line"];

#[derive(Clone, Debug)]
pub enum Space {
    Interval(IntervalBasis),
    Finite(FiniteBasis),
}

#[derive(Clone, Debug)]
pub struct NamedBasis {
    pub name: String,
    pub space: Space,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisJson {
    carrier: Vec<String>,
    zero: String,
    one: String,
    plus: Vec<[String; 3]>,
    star: Vec<[String; 3]>,
    waybelow: WaybelowJson,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WaybelowJson {
    Rule(String),
    Pairs(Vec<[String; 2]>),
}

/// A basis inside a matrix file: a name, a path relative to the file, or
/// an inline document.
#[derive(Deserialize)]
#[serde(untagged)]
enum BasisRef {
    Name(String),
    Inline(BasisJson),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    source: Option<BasisRef>,
    target: Option<BasisRef>,
    pairs: Option<Vec<[String; 2]>>,
    kind: Option<String>,
    #[serde(default)]
    params: Vec<String>,
    /// The basis of an `identity`; without it `identity` is the real one.
    basis: Option<BasisRef>,
    expr: Option<String>,
}

fn spatial(name: &str) -> Option<IntervalBasis> {
    match name.replace('_', "-").as_str() {
        "real-line" | "R" => Some(real_line_basis()),
        "unit-interval" | "[0,1]" => Some(unit_interval_basis()),
        "mutated-real-line" => Some(mutated_real_line_basis()),
        _ => None,
    }
}

fn document(json: BasisJson) -> BasisDocument {
    BasisDocument {
        carrier: json.carrier,
        zero: json.zero,
        one: json.one,
        plus: json.plus,
        star: json.star,
        waybelow: match json.waybelow {
            WaybelowJson::Rule(r) => Waybelow::Rule(r),
            WaybelowJson::Pairs(p) => Waybelow::Pairs(p),
        },
    }
}

fn from_json(json: BasisJson, name: String) -> Result<NamedBasis, String> {
    let fb = load_finite_basis(&document(json)).map_err(|e| format!("{name}: {e}"))?;
    Ok(NamedBasis {
        name,
        space: Space::Finite(fb),
    })
}

fn read_basis_file(path: &Path) -> Result<NamedBasis, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let json: BasisJson = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    from_json(json, path.display().to_string())
}

/// A builtin name, else a file path (relative to `dir` when given).
pub fn resolve_basis(arg: &str, dir: Option<&Path>) -> Result<NamedBasis, String> {
    if let Some(b) = spatial(arg) {
        return Ok(NamedBasis {
            name: arg.to_string(),
            space: Space::Interval(b),
        });
    }
    if let Ok(fb) = builtin_finite_basis(arg) {
        return Ok(NamedBasis {
            name: arg.to_string(),
            space: Space::Finite(fb),
        });
    }
    let path = match dir {
        Some(d) => d.join(arg),
        None => PathBuf::from(arg),
    };
    if path.is_file() {
        return read_basis_file(&path);
    }
    Err(format!(
        "unknown basis `{arg}`: not a readable file and not a builtin ({}, {})",
        SPATIAL_BUILTINS.join(", "),
        FINITE_BUILTINS.join(", ")
    ))
}

fn resolve_ref(r: BasisRef, dir: &Path, what: &str) -> Result<NamedBasis, String> {
    match r {
        BasisRef::Name(n) => resolve_basis(&n, Some(dir)),
        BasisRef::Inline(json) => from_json(json, format!("inline {what}")),
    }
}

pub enum LoadedMatrix {
    Real(RealMatrix),
    Binary(BinaryMatrix),
    Finite(FiniteMatrix),
    FiniteIdentity(IdentityMatrix<FiniteBasis>),
}

fn finite(b: NamedBasis, what: &str) -> Result<FiniteBasis, String> {
    match b.space {
        Space::Finite(fb) => Ok(fb),
        Space::Interval(_) => Err(format!(
            "{what} `{}` has no finite carrier; pair lists need one",
            b.name
        )),
    }
}

fn pair_matrix(json: &mut MatrixJson, pairs: Vec<[String; 2]>, dir: &Path) -> Result<LoadedMatrix, String> {
    let (Some(s), Some(t)) = (json.source.take(), json.target.take()) else {
        return Err("a pair list needs `source` and `target`".into());
    };
    let source = finite(resolve_ref(s, dir, "source")?, "source")?;
    let target = finite(resolve_ref(t, dir, "target")?, "target")?;
    let mut idx = Vec::with_capacity(pairs.len());
    for [n, m] in &pairs {
        let i = source
            .index_of(n)
            .ok_or_else(|| format!("`{n}` is not a source code"))?;
        let j = target
            .index_of(m)
            .ok_or_else(|| format!("`{m}` is not a target code"))?;
        idx.push((i, j));
    }
    let name = format!("{} listed pairs", idx.len());
    Ok(LoadedMatrix::Finite(FiniteMatrix::from_fn(
        name,
        source,
        target,
        |n, m| idx.contains(&(n, m)),
    )))
}

fn kind_matrix(json: &mut MatrixJson, kind: &str, dir: &Path) -> Result<LoadedMatrix, String> {
    let key = kind.replace('-', "_");
    if key == "identity" {
        if let Some(r) = json.basis.take() {
            let b = resolve_ref(r, dir, "basis")?;
            return Ok(match b.space {
                Space::Finite(fb) => LoadedMatrix::FiniteIdentity(identity(fb)),
                Space::Interval(ib) => LoadedMatrix::Real(Arc::new(identity(ib))),
            });
        }
    }
    if !json.params.is_empty() && matches!(key.as_str(), "constant_true" | "shift_union") {
        return Err(format!("`{kind}` takes no parameters"));
    }
    match key.as_str() {
        "constant_true" => return Ok(LoadedMatrix::Real(Arc::new(constant_true()))),
        "shift_union" => return Ok(LoadedMatrix::Real(Arc::new(shift_union()))),
        _ => {}
    }
    let params = json
        .params
        .iter()
        .map(|p| parse_rational(p).map_err(|e| format!("parameter `{p}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    match builtin_real_matrix(kind, &params).map_err(|e| e.to_string())? {
        BuiltinMatrix::Unary(u) => Ok(LoadedMatrix::Real(Arc::new(u))),
        BuiltinMatrix::Binary(b) => Ok(LoadedMatrix::Binary(b)),
    }
}

/// Exactly one of `pairs`, `kind` or `expr` must be present.
pub fn parse_matrix(text: &str, dir: &Path) -> Result<LoadedMatrix, String> {
    let mut json: MatrixJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let given = [json.pairs.is_some(), json.kind.is_some(), json.expr.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err("a matrix file needs exactly one of `pairs`, `kind` or `expr`".into());
    }
    if json.basis.is_some() && json.kind.as_deref().map(|k| k.replace('-', "_")) != Some("identity".into()) {
        return Err("`basis` only goes with `kind: identity`".into());
    }
    if let Some(pairs) = json.pairs.take() {
        return pair_matrix(&mut json, pairs, dir);
    }
    if json.source.is_some() || json.target.is_some() {
        return Err("`source` and `target` only go with `pairs`".into());
    }
    if let Some(kind) = json.kind.take() {
        return kind_matrix(&mut json, &kind, dir);
    }
    if !json.params.is_empty() {
        return Err("`params` only goes with `kind`".into());
    }
    let text = json.expr.unwrap_or_default();
    let e = parse_expr(&text).map_err(|e| format!("expr `{text}`: {e}"))?;
    Ok(LoadedMatrix::Real(compile(&e)))
}

pub fn load_matrix(path: &Path) -> Result<LoadedMatrix, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_matrix(&text, dir).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use asd_core::matrices::Matrix;

    fn here() -> &'static Path {
        Path::new(".")
    }

    fn err(text: &str) -> String {
        match parse_matrix(text, here()) {
            Err(e) => e,
            Ok(_) => panic!("accepted {text}"),
        }
    }

    #[test]
    fn builtin_names_resolve() {
        assert!(matches!(
            resolve_basis("real-line", None).unwrap().space,
            Space::Interval(_)
        ));
        assert!(matches!(
            resolve_basis("unit_interval", None).unwrap().space,
            Space::Interval(_)
        ));
        match resolve_basis("chain-3", None).unwrap().space {
            Space::Finite(fb) => assert_eq!(fb.size(), 3),
            _ => panic!(),
        }
        assert!(resolve_basis("no-such-basis", None)
            .unwrap_err()
            .contains("unknown basis"));
    }

    #[test]
    fn inline_pair_matrix() {
        let text = r#"{
            "source": "chain-2", "target": "chain-2",
            "pairs": [["0", "0"], ["0", "1"], ["1", "1"]]
        }"#;
        let LoadedMatrix::Finite(m) = parse_matrix(text, here()).unwrap() else {
            panic!()
        };
        assert!(m.get(0, 1) && !m.get(1, 0));
        assert_eq!(m.source().size(), 2);
    }

    #[test]
    fn kinds_and_exprs() {
        let ok = |t: &str| parse_matrix(t, here()).unwrap();
        assert!(matches!(
            ok(r#"{"kind": "add_const", "params": ["1/3"]}"#),
            LoadedMatrix::Real(_)
        ));
        assert!(matches!(ok(r#"{"kind": "mul"}"#), LoadedMatrix::Binary(_)));
        assert!(matches!(ok(r#"{"kind": "shift-union"}"#), LoadedMatrix::Real(_)));
        assert!(matches!(
            ok(r#"{"kind": "identity", "basis": "diamond"}"#),
            LoadedMatrix::FiniteIdentity(_)
        ));
        assert!(matches!(ok(r#"{"expr": "min(x, 0-x)"}"#), LoadedMatrix::Real(_)));
    }

    #[test]
    fn malformed_matrices() {
        assert!(err(r#"{"kind": "add_const"}"#).contains("parameter"));
        assert!(err(r#"{"kind": "scale", "params": ["0.5"]}"#).contains("0.5"));
        assert!(err(r#"{"expr": "x+", "kind": "mul"}"#).contains("exactly one"));
        assert!(err(r#"{"expr": "x+"}"#).contains("offset 2"));
        assert!(err(r#"{"source": "real-line", "target": "chain-2", "pairs": []}"#).contains("no finite carrier"));
        assert!(err(r#"{"source": "chain-2", "target": "chain-2", "pairs": [["0", "7"]]}"#).contains("`7`"));
        assert!(err(r#"{"kind": "mul", "colour": 3}"#).contains("colour"));
    }
}

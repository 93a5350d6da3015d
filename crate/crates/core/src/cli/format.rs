//! Fixture files: JSON documents tagged by `kind`.
//!
//! Coefficients are strings (`"3"`, `"-1/2"`). Tables are sparse and keyed by
//! basis names: a bracket `[a,b] = 2c` is written `"[a,b]": {"c": "2"}`, and a
//! linear map sends each source basis name to a sparse target vector. An
//! object may be given inline or referenced by the `name` of another fixture
//! file in the same directory.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::algebra::{LeibnizAction, LeibnizAlgebra};
use crate::ratlin::{format_rational, parse_rational, zero_vector, RatMatrix, Rational};
use crate::xmod::{CrossedModule, XModHom};

/// Sparse vector: basis name to coefficient.
pub type SparseVec = BTreeMap<String, String>;
/// Sparse table: key (a basis name or `[a,b]`) to sparse vector.
pub type SparseTable = BTreeMap<String, SparseVec>;

pub const EXTENSIONS: [&str; 5] = ["algebra", "action", "xmod", "hom", "extension"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FixtureFile {
    Algebra(AlgebraDoc),
    Action(ActionDoc),
    Xmod(XModDoc),
    Hom(HomDoc),
    Extension(ExtensionDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Name(String),
    Inline(Box<T>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: SparseTable,
}

/// Action of `actor` on `acted`: `left["[q,n]"]` is `^q n`, `right["[n,q]"]` is `n^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub name: String,
    pub actor: Ref<AlgebraDoc>,
    pub acted: Ref<AlgebraDoc>,
    #[serde(default)]
    pub left: SparseTable,
    #[serde(default)]
    pub right: SparseTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionTables {
    #[serde(default)]
    pub left: SparseTable,
    #[serde(default)]
    pub right: SparseTable,
}

/// `"adjoint"`, `"trivial"`, the name of an action file, or explicit tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionSpec {
    Named(String),
    Tables(ActionTables),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XModDoc {
    pub name: String,
    pub top: Ref<AlgebraDoc>,
    pub base: Ref<AlgebraDoc>,
    /// Top basis name to its image in the base.
    #[serde(default)]
    pub delta: SparseTable,
    pub action: ActionSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub name: String,
    pub source: Ref<XModDoc>,
    pub target: Ref<XModDoc>,
    #[serde(default)]
    pub top: SparseTable,
    #[serde(default)]
    pub base: SparseTable,
}

/// An extension given by its surjective projection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    pub name: String,
    pub projection: Ref<HomDoc>,
}

/// A fully resolved fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(LeibnizAlgebra),
    Action(LeibnizAction),
    XMod(CrossedModule),
    Hom(XModHom),
    Extension { name: String, projection: XModHom },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Action(_) => "action",
            Object::XMod(_) => "xmod",
            Object::Hom(_) => "hom",
            Object::Extension { .. } => "extension",
        }
    }
}

fn unreadable(msg: impl Into<String>) -> CliError {
    CliError::Unreadable(msg.into())
}

pub fn parse_coefficient(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| unreadable(e.to_string()))
}

fn index_of(basis: &[String], name: &str, ctx: &str) -> Result<usize, CliError> {
    basis
        .iter()
        .position(|b| b == name)
        .ok_or_else(|| unreadable(format!("{ctx}: unknown basis element {name:?}")))
}

fn dense(basis: &[String], v: &SparseVec, ctx: &str) -> Result<Vec<Rational>, CliError> {
    let mut out = zero_vector(basis.len());
    for (name, c) in v {
        out[index_of(basis, name, ctx)?] = parse_coefficient(c)?;
    }
    Ok(out)
}

fn sparse(basis: &[String], v: &[Rational]) -> SparseVec {
    basis
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| (n.clone(), format_rational(c)))
        .collect()
}

/// Splits `[a,b]` at the unique comma leaving a name of `left` and a name of `right`.
fn split_pair(key: &str, left: &[String], right: &[String], ctx: &str) -> Result<(usize, usize), CliError> {
    let inner = key
        .trim()
        .strip_prefix('[')
        .and_then(|k| k.strip_suffix(']'))
        .ok_or_else(|| unreadable(format!("{ctx}: key {key:?} is not of the form [a,b]")))?;
    let mut hits = Vec::new();
    for (pos, _) in inner.match_indices(',') {
        let (a, b) = (inner[..pos].trim(), inner[pos + 1..].trim());
        if let (Some(i), Some(j)) = (left.iter().position(|n| n == a), right.iter().position(|n| n == b)) {
            hits.push((i, j));
        }
    }
    match hits.as_slice() {
        [one] => Ok(*one),
        [] => Err(unreadable(format!("{ctx}: key {key:?} does not name two basis elements"))),
        _ => Err(unreadable(format!("{ctx}: key {key:?} is ambiguous"))),
    }
}

fn pair_key(a: &str, b: &str) -> String {
    format!("[{a},{b}]")
}

fn check_basis(basis: &[String], ctx: &str) -> Result<(), CliError> {
    for (i, b) in basis.iter().enumerate() {
        if b.is_empty() || b.trim() != b {
            return Err(unreadable(format!("{ctx}: basis name {b:?} is empty or padded")));
        }
        if basis[..i].contains(b) {
            return Err(unreadable(format!("{ctx}: basis name {b:?} repeated")));
        }
    }
    Ok(())
}

/// Columns of a linear map from a table keyed by source basis names.
fn matrix(src: &[String], tgt: &[String], t: &SparseTable, ctx: &str) -> Result<RatMatrix, CliError> {
    let mut cols = vec![zero_vector(tgt.len()); src.len()];
    for (k, v) in t {
        cols[index_of(src, k, ctx)?] = dense(tgt, v, ctx)?;
    }
    Ok(RatMatrix::from_columns(tgt.len(), &cols))
}

fn matrix_table(src: &[String], tgt: &[String], m: &RatMatrix) -> SparseTable {
    src.iter()
        .enumerate()
        .map(|(j, n)| (n.clone(), sparse(tgt, &m.column(j))))
        .filter(|(_, v)| !v.is_empty())
        .collect()
}

/// Index of fixture files in a directory, by `(kind, name)`.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    index: BTreeMap<(String, String), PathBuf>,
}

#[derive(Deserialize)]
struct Header {
    kind: String,
    name: String,
}

const MAX_DEPTH: usize = 16;

impl Workspace {
    /// Indexes every readable fixture file in `dir`; unreadable files are skipped.
    pub fn scan(dir: &Path) -> Self {
        let mut index = BTreeMap::new();
        let Ok(entries) = fs::read_dir(dir) else {
            return Workspace { index };
        };
        let mut paths: Vec<PathBuf> = entries.flatten().map(|e| e.path()).collect();
        paths.sort();
        for p in paths {
            let known = p
                .extension()
                .and_then(|e| e.to_str())
                .is_some_and(|e| EXTENSIONS.contains(&e) || e == "json");
            if !known {
                continue;
            }
            if let Some(h) = fs::read_to_string(&p)
                .ok()
                .and_then(|s| serde_json::from_str::<Header>(&s).ok())
            {
                index.entry((h.kind, h.name)).or_insert(p);
            }
        }
        Workspace { index }
    }

    pub fn for_file(path: &Path) -> Self {
        let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
        Self::scan(dir)
    }

    pub fn names(&self) -> impl Iterator<Item = (&str, &str)> {
        self.index.keys().map(|(k, n)| (k.as_str(), n.as_str()))
    }

    fn lookup(&self, kind: &str, name: &str, depth: usize) -> Result<FixtureFile, CliError> {
        if depth > MAX_DEPTH {
            return Err(unreadable(format!("reference chain too deep at {kind} {name:?}")));
        }
        let path = self
            .index
            .get(&(kind.to_string(), name.to_string()))
            .ok_or_else(|| unreadable(format!("no {kind} named {name:?} in the workspace")))?;
        read_file(path)
    }

    fn algebra(&self, r: &Ref<AlgebraDoc>, depth: usize) -> Result<LeibnizAlgebra, CliError> {
        match r {
            Ref::Inline(doc) => decode_algebra(doc),
            Ref::Name(n) => match self.lookup("algebra", n, depth + 1)? {
                FixtureFile::Algebra(doc) => decode_algebra(&doc),
                _ => unreachable!("indexed by kind"),
            },
        }
    }

    fn xmod(&self, r: &Ref<XModDoc>, depth: usize) -> Result<CrossedModule, CliError> {
        match r {
            Ref::Inline(doc) => self.decode_xmod(doc, depth),
            Ref::Name(n) => match self.lookup("xmod", n, depth + 1)? {
                FixtureFile::Xmod(doc) => self.decode_xmod(&doc, depth + 1),
                _ => unreachable!("indexed by kind"),
            },
        }
    }

    fn hom(&self, r: &Ref<HomDoc>, depth: usize) -> Result<XModHom, CliError> {
        match r {
            Ref::Inline(doc) => self.decode_hom(doc, depth),
            Ref::Name(n) => match self.lookup("hom", n, depth + 1)? {
                FixtureFile::Hom(doc) => self.decode_hom(&doc, depth + 1),
                _ => unreachable!("indexed by kind"),
            },
        }
    }

    fn decode_action(&self, doc: &ActionDoc, depth: usize) -> Result<LeibnizAction, CliError> {
        let actor = self.algebra(&doc.actor, depth)?;
        let acted = self.algebra(&doc.acted, depth)?;
        action_from_tables(actor, acted, &doc.left, &doc.right, &doc.name)
    }

    fn decode_xmod(&self, doc: &XModDoc, depth: usize) -> Result<CrossedModule, CliError> {
        let ctx = format!("xmod {}", doc.name);
        let top = self.algebra(&doc.top, depth)?;
        let base = self.algebra(&doc.base, depth)?;
        let delta = matrix(top.basis_names(), base.basis_names(), &doc.delta, &ctx)?;
        let action = match &doc.action {
            ActionSpec::Named(n) if n == "trivial" => LeibnizAction::trivial(base.clone(), top.clone()),
            ActionSpec::Named(n) if n == "adjoint" => {
                if top != base {
                    return Err(unreadable(format!("{ctx}: adjoint action needs top = base")));
                }
                LeibnizAction::adjoint(&base)
            }
            ActionSpec::Named(n) => match self.lookup("action", n, depth + 1)? {
                FixtureFile::Action(a) => {
                    let act = self.decode_action(&a, depth + 1)?;
                    if act.actor() != &base || act.acted() != &top {
                        return Err(unreadable(format!("{ctx}: action {n:?} is between other algebras")));
                    }
                    act
                }
                _ => unreachable!("indexed by kind"),
            },
            ActionSpec::Tables(t) => action_from_tables(base.clone(), top.clone(), &t.left, &t.right, &ctx)?,
        };
        CrossedModule::new(doc.name.clone(), top, base, delta, action).map_err(|e| unreadable(format!("{ctx}: {e}")))
    }

    fn decode_hom(&self, doc: &HomDoc, depth: usize) -> Result<XModHom, CliError> {
        let ctx = format!("hom {}", doc.name);
        let source = self.xmod(&doc.source, depth)?;
        let target = self.xmod(&doc.target, depth)?;
        let top = matrix(source.top().basis_names(), target.top().basis_names(), &doc.top, &ctx)?;
        let base = matrix(source.base().basis_names(), target.base().basis_names(), &doc.base, &ctx)?;
        XModHom::from_matrices(source, target, top, base).map_err(|e| unreadable(format!("{ctx}: {e}")))
    }

    pub fn decode(&self, file: &FixtureFile) -> Result<Object, CliError> {
        Ok(match file {
            FixtureFile::Algebra(doc) => Object::Algebra(decode_algebra(doc)?),
            FixtureFile::Action(doc) => Object::Action(self.decode_action(doc, 0)?),
            FixtureFile::Xmod(doc) => Object::XMod(self.decode_xmod(doc, 0)?),
            FixtureFile::Hom(doc) => Object::Hom(self.decode_hom(doc, 0)?),
            FixtureFile::Extension(doc) => Object::Extension {
                name: doc.name.clone(),
                projection: self.hom(&doc.projection, 0)?,
            },
        })
    }
}

fn decode_algebra(doc: &AlgebraDoc) -> Result<LeibnizAlgebra, CliError> {
    let ctx = format!("algebra {}", doc.name);
    check_basis(&doc.basis, &ctx)?;
    let mut brackets = Vec::new();
    for (key, v) in &doc.brackets {
        let (i, j) = split_pair(key, &doc.basis, &doc.basis, &ctx)?;
        brackets.push((i, j, dense(&doc.basis, v, &ctx)?));
    }
    LeibnizAlgebra::new(doc.name.clone(), doc.basis.clone(), brackets).map_err(|e| unreadable(format!("{ctx}: {e}")))
}

fn action_from_tables(
    actor: LeibnizAlgebra,
    acted: LeibnizAlgebra,
    left: &SparseTable,
    right: &SparseTable,
    ctx: &str,
) -> Result<LeibnizAction, CliError> {
    let (qb, nb) = (actor.basis_names().to_vec(), acted.basis_names().to_vec());
    let (dq, dn) = (qb.len(), nb.len());
    let mut l = vec![zero_vector(dn); dq * dn];
    for (key, v) in left {
        let (a, j) = split_pair(key, &qb, &nb, ctx)?;
        l[a * dn + j] = dense(&nb, v, ctx)?;
    }
    let mut r = vec![zero_vector(dn); dq * dn];
    for (key, v) in right {
        let (j, a) = split_pair(key, &nb, &qb, ctx)?;
        r[j * dq + a] = dense(&nb, v, ctx)?;
    }
    LeibnizAction::new(actor, acted, l, r).map_err(|e| unreadable(format!("{ctx}: {e}")))
}

pub fn read_file(path: &Path) -> Result<FixtureFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| unreadable(format!("{}: {e}", path.display())))?;
    parse_str(&text).map_err(|e| unreadable(format!("{}: {e}", path.display())))
}

pub fn parse_str(text: &str) -> Result<FixtureFile, CliError> {
    serde_json::from_str(text).map_err(|e| unreadable(e.to_string()))
}

/// Reads, resolves against the file's directory, and decodes.
pub fn load(path: &Path) -> Result<Object, CliError> {
    let file = read_file(path)?;
    Workspace::for_file(path).decode(&file)
}

pub fn encode_algebra(a: &LeibnizAlgebra) -> AlgebraDoc {
    let b = a.basis_names();
    let mut brackets = SparseTable::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = sparse(b, a.bracket_basis(i, j));
            if !v.is_empty() {
                brackets.insert(pair_key(&b[i], &b[j]), v);
            }
        }
    }
    AlgebraDoc {
        name: a.name().to_string(),
        basis: b.to_vec(),
        brackets,
    }
}

fn action_tables(act: &LeibnizAction) -> ActionTables {
    let (qb, nb) = (act.actor().basis_names(), act.acted().basis_names());
    let mut left = SparseTable::new();
    let mut right = SparseTable::new();
    for (a, q) in qb.iter().enumerate() {
        for (j, n) in nb.iter().enumerate() {
            let v = sparse(nb, act.left_basis(a, j));
            if !v.is_empty() {
                left.insert(pair_key(q, n), v);
            }
            let v = sparse(nb, act.right_basis(j, a));
            if !v.is_empty() {
                right.insert(pair_key(n, q), v);
            }
        }
    }
    ActionTables { left, right }
}

pub fn encode_action(name: &str, act: &LeibnizAction) -> ActionDoc {
    let t = action_tables(act);
    ActionDoc {
        name: name.to_string(),
        actor: Ref::Inline(Box::new(encode_algebra(act.actor()))),
        acted: Ref::Inline(Box::new(encode_algebra(act.acted()))),
        left: t.left,
        right: t.right,
    }
}

pub fn encode_xmod(xm: &CrossedModule) -> XModDoc {
    XModDoc {
        name: xm.name().to_string(),
        top: Ref::Inline(Box::new(encode_algebra(xm.top()))),
        base: Ref::Inline(Box::new(encode_algebra(xm.base()))),
        delta: matrix_table(xm.top().basis_names(), xm.base().basis_names(), xm.delta()),
        action: ActionSpec::Tables(action_tables(xm.action())),
    }
}

pub fn encode_hom(name: &str, f: &XModHom) -> HomDoc {
    let (s, t) = (f.source(), f.target());
    HomDoc {
        name: name.to_string(),
        source: Ref::Inline(Box::new(encode_xmod(s))),
        target: Ref::Inline(Box::new(encode_xmod(t))),
        top: matrix_table(s.top().basis_names(), t.top().basis_names(), f.top_map().matrix()),
        base: matrix_table(s.base().basis_names(), t.base().basis_names(), f.base_map().matrix()),
    }
}

/// Self-contained document for an object; every reference is inlined.
pub fn encode(obj: &Object) -> FixtureFile {
    match obj {
        Object::Algebra(a) => FixtureFile::Algebra(encode_algebra(a)),
        Object::Action(a) => {
            FixtureFile::Action(encode_action(&format!("{} on {}", a.actor().name(), a.acted().name()), a))
        }
        Object::XMod(x) => FixtureFile::Xmod(encode_xmod(x)),
        Object::Hom(f) => FixtureFile::Hom(encode_hom(&format!("{} -> {}", f.source().name(), f.target().name()), f)),
        Object::Extension { name, projection } => FixtureFile::Extension(ExtensionDoc {
            name: name.clone(),
            projection: Ref::Inline(Box::new(encode_hom(&format!("proj {name}"), projection))),
        }),
    }
}

/// Canonical text: pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_string(file: &FixtureFile) -> String {
    let value = serde_json::to_value(file).expect("fixture documents serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn round_trip(obj: Object) {
        let text = to_canonical_string(&encode(&obj));
        let back = Workspace::default().decode(&parse_str(&text).unwrap()).unwrap();
        assert_eq!(back, obj);
        assert_eq!(to_canonical_string(&encode(&back)), text);
    }

    #[test]
    fn algebras_round_trip() {
        for a in fixtures::algebras().into_iter().chain(fixtures::random_corpus(5, 3)) {
            round_trip(Object::Algebra(a));
        }
    }

    #[test]
    fn crossed_modules_and_extensions_round_trip() {
        for xm in fixtures::crossed_modules() {
            round_trip(Object::Action(xm.action().clone()));
            round_trip(Object::XMod(xm));
        }
        for e in fixtures::central_extensions() {
            round_trip(Object::Hom(e.proj().clone()));
            round_trip(Object::Extension {
                name: e.name().to_string(),
                projection: e.proj().clone(),
            });
        }
    }

    #[test]
    fn bracket_keys_split_on_the_unique_valid_comma() {
        let basis = vec!["a,b".to_string(), "c".to_string(), "a".to_string(), "b,c".to_string()];
        assert_eq!(split_pair("[a,b,c]", &basis, &basis, "t").unwrap_err().exit_code(), 2);
        let basis = vec!["a,b".to_string(), "c".to_string()];
        assert_eq!(split_pair("[a,b,c]", &basis, &basis, "t").unwrap(), (0, 1));
        assert_eq!(split_pair("[c, c]", &basis, &basis, "t").unwrap(), (1, 1));
        assert!(split_pair("c,c", &basis, &basis, "t").is_err());
    }

    #[test]
    fn malformed_inputs_are_unreadable() {
        let bad = [
            r#"{"kind":"algebra","name":"X","basis":["e"],"brackets":{"[e,e]":{"e":"1/0"}}}"#,
            r#"{"kind":"algebra","name":"X","basis":["e"],"brackets":{"[e,f]":{"e":"1"}}}"#,
            r#"{"kind":"algebra","name":"X","basis":["e","e"]}"#,
            r#"{"kind":"algebra","name":"X","basis":["e"],"extra":1}"#,
            r#"{"kind":"widget","name":"X"}"#,
            r#"{"kind":"xmod","name":"X","top":"nowhere","base":"nowhere","action":"trivial"}"#,
        ];
        for text in bad {
            let r = parse_str(text).and_then(|f| Workspace::default().decode(&f));
            assert_eq!(r.unwrap_err().exit_code(), 2, "{text}");
        }
    }
}

//! The JSON system-description format.
//!
//! ```json
//! {
//!   "basic_sets": [
//!     {"name": "p", "index": 0, "matrix": [[1]]},
//!     {"name": "h", "index": 1,
//!      "graph": {"adjacency": [[1, 1], [1, 1]], "orientation": [1, -1]}}
//!   ],
//!   "ambient": {"dim": 2, "homology_maps": {"0": [[1]]}, "split_at": 1}
//! }
//! ```
//!
//! Matrix entry `[j][k]` is row `j`, column `k`. For a graph the structure
//! matrix is `A[j][k] = orientation[k] * adjacency[j][k]`, so orientation
//! scales columns.
//!
//! A basic set may also carry `"unstable_manifold_dim"` and
//! `"stable_manifold_dim"`; they are kept as metadata and not checked.
//!
//! Validation collects every problem it finds, each located by a JSON
//! pointer such as `/basic_sets/0/matrix/1`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use conley_core::dynamics::{BasicSetSpec, ManifoldDims, SystemSpec, VertexShiftSpec};
use conley_core::IntMatrix;
use serde_json::{json, Map, Value};

use crate::error::CliError;

pub fn parse_system(path: &Path) -> Result<SystemSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_system_str(&text)
}

pub fn parse_system_str(text: &str) -> Result<SystemSpec, CliError> {
    let doc: Value = serde_json::from_str(text)?;
    parse_system_value(&doc)
}

pub fn parse_system_value(doc: &Value) -> Result<SystemSpec, CliError> {
    let mut p = Parser::default();
    let spec = p.system(doc);
    match spec {
        Some(spec) if p.problems.is_empty() => {
            spec.validate()?;
            Ok(spec)
        }
        _ => Err(CliError::Schema(p.problems)),
    }
}

/// `(dim, homology_maps, split_at)`.
type Ambient = (Option<usize>, BTreeMap<usize, IntMatrix>, Option<usize>);

#[derive(Default)]
struct Parser {
    problems: Vec<String>,
}

impl Parser {
    fn fail(&mut self, at: &str, msg: impl AsRef<str>) {
        let at = if at.is_empty() { "/" } else { at };
        self.problems.push(format!("{at}: {}", msg.as_ref()));
    }

    fn object<'a>(&mut self, v: &'a Value, at: &str, allowed: &[&str]) -> Option<&'a Map<String, Value>> {
        let Some(obj) = v.as_object() else {
            self.fail(at, "expected an object");
            return None;
        };
        for key in obj.keys() {
            if !allowed.contains(&key.as_str()) {
                self.fail(&format!("{at}/{}", escape(key)), "unknown key");
            }
        }
        Some(obj)
    }

    fn natural(&mut self, v: &Value, at: &str) -> Option<usize> {
        match v.as_u64().and_then(|n| usize::try_from(n).ok()) {
            Some(n) => Some(n),
            None => {
                self.fail(at, "expected a nonnegative integer");
                None
            }
        }
    }

    fn integer(&mut self, v: &Value, at: &str) -> Option<i64> {
        let n = v.as_i64();
        if n.is_none() {
            if v.is_number() && v.to_string().bytes().all(|b| b.is_ascii_digit() || b == b'-') {
                self.fail(at, "integer does not fit in 64 bits");
            } else {
                self.fail(at, "expected an integer");
            }
        }
        n
    }

    /// A square array of integer rows; `[]` is the 0x0 matrix.
    fn rows(&mut self, v: &Value, at: &str) -> Option<Vec<Vec<i64>>> {
        let Some(rows) = v.as_array() else {
            self.fail(at, "expected an array of rows");
            return None;
        };
        let n = rows.len();
        let mut out = Vec::with_capacity(n);
        let mut ok = true;
        for (j, row) in rows.iter().enumerate() {
            let row_at = format!("{at}/{j}");
            let Some(entries) = row.as_array() else {
                self.fail(&row_at, "expected an array of integers");
                ok = false;
                continue;
            };
            if entries.len() != n {
                self.fail(&row_at, format!("row has {} entries, a square matrix needs {n}", entries.len()));
                ok = false;
            }
            let parsed: Vec<Option<i64>> = entries
                .iter()
                .enumerate()
                .map(|(k, e)| self.integer(e, &format!("{row_at}/{k}")))
                .collect();
            ok &= parsed.iter().all(Option::is_some);
            out.push(parsed.into_iter().flatten().collect());
        }
        ok.then_some(out)
    }

    fn matrix(&mut self, v: &Value, at: &str) -> Option<IntMatrix> {
        let rows = self.rows(v, at)?;
        Some(IntMatrix::from_i64_rows(&rows).expect("rows were checked square"))
    }

    fn graph(&mut self, v: &Value, at: &str) -> Option<VertexShiftSpec> {
        let obj = self.object(v, at, &["adjacency", "orientation"])?;
        let adjacency = match obj.get("adjacency") {
            Some(a) => self.rows(a, &format!("{at}/adjacency")),
            None => {
                self.fail(at, "missing key \"adjacency\"");
                None
            }
        };
        let orientation: Option<Vec<i64>> = match obj.get("orientation") {
            None => {
                self.fail(at, "missing key \"orientation\"");
                None
            }
            Some(o) => match o.as_array() {
                None => {
                    self.fail(&format!("{at}/orientation"), "expected an array of +1/-1");
                    None
                }
                Some(signs) => {
                    let parsed: Vec<Option<i64>> = signs
                        .iter()
                        .enumerate()
                        .map(|(k, s)| self.integer(s, &format!("{at}/orientation/{k}")))
                        .collect();
                    parsed.into_iter().collect()
                }
            },
        };
        let (adjacency, orientation) = (adjacency?, orientation?);
        let mut ok = true;
        for (j, row) in adjacency.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                if x != 0 && x != 1 {
                    self.fail(&format!("{at}/adjacency/{j}/{k}"), format!("adjacency entries are 0 or 1, got {x}"));
                    ok = false;
                }
            }
        }
        for (k, &s) in orientation.iter().enumerate() {
            if s != 1 && s != -1 {
                self.fail(&format!("{at}/orientation/{k}"), format!("orientation is +1 or -1, got {s}"));
                ok = false;
            }
        }
        if orientation.len() != adjacency.len() {
            self.fail(
                &format!("{at}/orientation"),
                format!("{} signs for {} symbols", orientation.len(), adjacency.len()),
            );
            ok = false;
        }
        if !ok {
            return None;
        }
        match VertexShiftSpec::new(&adjacency, &orientation) {
            Ok(s) => Some(s),
            Err(e) => {
                self.fail(at, e.to_string());
                None
            }
        }
    }

    fn basic_set(&mut self, v: &Value, at: &str) -> Option<BasicSetSpec> {
        let obj = self.object(
            v,
            at,
            &["name", "index", "matrix", "graph", "unstable_manifold_dim", "stable_manifold_dim", "note"],
        )?;
        let name = match obj.get("name") {
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => {
                self.fail(&format!("{at}/name"), "expected a string");
                None
            }
            None => {
                self.fail(at, "missing key \"name\"");
                None
            }
        };
        let index = match obj.get("index") {
            Some(i) => self.natural(i, &format!("{at}/index")),
            None => {
                self.fail(at, "missing key \"index\"");
                None
            }
        };
        self.note(obj, at);
        let mut dims_ok = true;
        let mut dim_of = |p: &mut Self, key: &str| match obj.get(key) {
            None => None,
            Some(d) => {
                let d = p.natural(d, &format!("{at}/{key}"));
                dims_ok &= d.is_some();
                d
            }
        };
        let manifold_dims = ManifoldDims {
            unstable: dim_of(self, "unstable_manifold_dim"),
            stable: dim_of(self, "stable_manifold_dim"),
        };
        let body = match (obj.get("matrix"), obj.get("graph")) {
            (Some(m), None) => self.matrix(m, &format!("{at}/matrix")).map(Err),
            (None, Some(g)) => self.graph(g, &format!("{at}/graph")).map(Ok),
            (Some(_), Some(_)) => {
                self.fail(at, "\"matrix\" and \"graph\" are mutually exclusive");
                None
            }
            (None, None) => {
                self.fail(at, "needs one of \"matrix\" or \"graph\"");
                None
            }
        };
        let (name, index, body) = (name?, index?, body?);
        if !dims_ok {
            return None;
        }
        let mut b = match body {
            Ok(shift) => BasicSetSpec::from_shift(name, shift, index),
            Err(m) => BasicSetSpec::from_matrix(name, m, index).expect("matrix was checked square"),
        };
        b.manifold_dims = manifold_dims;
        Some(b)
    }

    fn note(&mut self, obj: &Map<String, Value>, at: &str) {
        if obj.get("note").is_some_and(|n| !n.is_string()) {
            self.fail(&format!("{at}/note"), "expected a string");
        }
    }

    fn ambient(&mut self, v: &Value) -> Option<Ambient> {
        let obj = self.object(v, "/ambient", &["dim", "homology_maps", "split_at", "note"])?;
        self.note(obj, "/ambient");
        let dim = obj.get("dim").map(|d| self.natural(d, "/ambient/dim"));
        let split_at = obj.get("split_at").map(|q| self.natural(q, "/ambient/split_at"));
        let mut maps = BTreeMap::new();
        let mut ok = true;
        if let Some(hm) = obj.get("homology_maps") {
            match hm.as_object() {
                None => {
                    self.fail("/ambient/homology_maps", "expected an object keyed by degree");
                    ok = false;
                }
                Some(hm) => {
                    for (key, m) in hm {
                        let at = format!("/ambient/homology_maps/{}", escape(key));
                        let degree = key.parse::<usize>().ok().filter(|d| d.to_string() == *key);
                        if degree.is_none() {
                            self.fail(&at, "degree keys are nonnegative integers such as \"1\"");
                        }
                        match (degree, self.matrix(m, &at)) {
                            (Some(d), Some(m)) => {
                                maps.insert(d, m);
                            }
                            _ => ok = false,
                        }
                    }
                }
            }
        }
        let dim = dim.map_or(Some(None), |d| d.map(Some));
        let split_at = split_at.map_or(Some(None), |q| q.map(Some));
        let (dim, split_at) = (dim?, split_at?);
        if let Some(d) = dim {
            for &k in maps.keys() {
                if k > d {
                    self.fail(&format!("/ambient/homology_maps/{k}"), format!("degree above the dimension {d}"));
                }
            }
            if split_at.is_some_and(|q| q > d) {
                self.fail("/ambient/split_at", format!("above the dimension {d}"));
            }
        }
        ok.then_some((dim, maps, split_at))
    }

    fn system(&mut self, doc: &Value) -> Option<SystemSpec> {
        let obj = self.object(doc, "", &["basic_sets", "ambient", "note"])?;
        self.note(obj, "");
        let sets = match obj.get("basic_sets") {
            None => {
                self.fail("", "missing key \"basic_sets\"");
                None
            }
            Some(Value::Array(items)) => {
                let parsed: Vec<Option<BasicSetSpec>> = items
                    .iter()
                    .enumerate()
                    .map(|(i, b)| self.basic_set(b, &format!("/basic_sets/{i}")))
                    .collect();
                let mut seen = BTreeSet::new();
                for (i, b) in parsed.iter().enumerate() {
                    if let Some(b) = b {
                        if !seen.insert(b.name.clone()) {
                            self.fail(&format!("/basic_sets/{i}/name"), format!("duplicate name {:?}", b.name));
                        }
                    }
                }
                parsed.into_iter().collect::<Option<Vec<_>>>()
            }
            Some(_) => {
                self.fail("/basic_sets", "expected an array");
                None
            }
        };
        let ambient = match obj.get("ambient") {
            Some(a) => self.ambient(a),
            None => Some((None, BTreeMap::new(), None)),
        };
        let (sets, (dim, maps, split_at)) = (sets?, ambient?);
        if let Some(d) = dim {
            for (i, b) in sets.iter().enumerate() {
                if b.index_u > d {
                    self.fail(&format!("/basic_sets/{i}/index"), format!("index {} above the dimension {d}", b.index_u));
                }
            }
        }
        Some(SystemSpec {
            basic_sets: sets,
            ambient_dim: dim,
            ambient_maps: maps,
            split_at,
        })
    }
}

/// JSON pointer escaping of one reference token.
fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

fn int_rows(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|r| Value::Array(r.iter().map(crate::report::integer).collect()))
            .collect(),
    )
}

/// Serializes a system in the input format; `parse_system_value` inverts it.
pub fn system_to_json(spec: &SystemSpec) -> Value {
    let sets: Vec<Value> = spec
        .basic_sets
        .iter()
        .map(|b| {
            let mut o = Map::new();
            o.insert("name".into(), json!(b.name));
            o.insert("index".into(), json!(b.index_u));
            match &b.shift {
                Some(s) => {
                    o.insert(
                        "graph".into(),
                        json!({"adjacency": s.adjacency_rows(), "orientation": s.orientation()}),
                    );
                }
                None => {
                    o.insert("matrix".into(), int_rows(b.structure.matrix()));
                }
            }
            if let Some(d) = b.manifold_dims.unstable {
                o.insert("unstable_manifold_dim".into(), json!(d));
            }
            if let Some(d) = b.manifold_dims.stable {
                o.insert("stable_manifold_dim".into(), json!(d));
            }
            Value::Object(o)
        })
        .collect();
    let mut doc = Map::new();
    doc.insert("basic_sets".into(), Value::Array(sets));
    if spec.ambient_dim.is_some() || !spec.ambient_maps.is_empty() || spec.split_at.is_some() {
        let mut a = Map::new();
        if let Some(d) = spec.ambient_dim {
            a.insert("dim".into(), json!(d));
        }
        if !spec.ambient_maps.is_empty() {
            let maps: Map<String, Value> = spec
                .ambient_maps
                .iter()
                .map(|(k, m)| (k.to_string(), int_rows(m)))
                .collect();
            a.insert("homology_maps".into(), Value::Object(maps));
        }
        if let Some(q) = spec.split_at {
            a.insert("split_at".into(), json!(q));
        }
        doc.insert("ambient".into(), Value::Object(a));
    }
    Value::Object(doc)
}

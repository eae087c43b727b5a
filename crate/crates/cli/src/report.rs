//! Text and JSON renderings of command results.
//!
//! Both renderings are pure functions of the report, list basic sets by
//! name, and write polynomial coefficients in ascending degree. JSON
//! integers are exact at any size.

use std::fmt::Write as _;

use conley_core::dynamics::{BasicSetSpec, ConleyIndex, ManifoldDims, MorseReport};
use conley_core::spectral::{EigenClass, JordanProfile};
use conley_core::{BigInt, BigRational, IntPolynomial, RationalFunction, RationalMatrix};
use serde_json::{json, Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn integer(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("decimal integers are JSON numbers"))
}

/// Integers as numbers, fractions as `"p/q"` strings.
pub fn rational(x: &BigRational) -> Value {
    if x.is_integer() {
        integer(x.numer())
    } else {
        Value::String(x.to_string())
    }
}

pub fn polynomial(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(integer).collect())
}

pub fn rational_matrix(m: &RationalMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(rational).collect()))
            .collect(),
    )
}

/// Numerator and denominator with the denominator's constant term made
/// nonnegative, the sign convention of the text rendering.
fn display_pair(f: &RationalFunction) -> (IntPolynomial, IntPolynomial) {
    if f.denominator().coeff(0) < BigInt::from(0) {
        (-f.numerator(), -f.denominator())
    } else {
        (f.numerator().clone(), f.denominator().clone())
    }
}

pub fn rational_function(f: &RationalFunction) -> Value {
    let (num, den) = display_pair(f);
    json!({
        "numerator": polynomial(&num),
        "denominator": polynomial(&den),
        "text": f.to_string(),
    })
}

fn indent(block: &str, by: usize) -> String {
    let pad = " ".repeat(by);
    block.lines().map(|l| format!("{pad}{l}\n")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree(String),
    Skipped(String),
}

/// One oracle comparison run by `verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub basic_set: String,
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct BasicSetReport {
    pub name: String,
    pub index_u: usize,
    pub structure: RationalMatrix,
    /// Smallest `k` with `A^k = 0`, when `A` is nilpotent.
    pub nilpotency: Option<usize>,
    pub index: Option<ConleyIndex>,
    pub jordan: Option<JordanProfile>,
    pub zeta: Option<RationalFunction>,
    pub manifold_dims: ManifoldDims,
}

impl BasicSetReport {
    pub fn new(basic: &BasicSetSpec) -> Self {
        Self {
            name: basic.name.clone(),
            index_u: basic.index_u,
            structure: basic.structure.matrix().to_rational(),
            nilpotency: None,
            index: None,
            jordan: None,
            zeta: None,
            manifold_dims: basic.manifold_dims,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: &'static str,
    pub ambient_dim: usize,
    /// Sorted by name.
    pub basic_sets: Vec<BasicSetReport>,
    pub zeta_product: Option<RationalFunction>,
    pub morse: Option<MorseReport>,
    pub checks: Option<Vec<Check>>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }

    pub fn all_agree(&self) -> bool {
        self.checks
            .iter()
            .flatten()
            .all(|c| !matches!(c.outcome, Outcome::Disagree(_)))
    }

    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("ambient_dim".into(), json!(self.ambient_dim));
        let sets: Vec<Value> = self.basic_sets.iter().map(set_json).collect();
        doc.insert("basic_sets".into(), Value::Array(sets));
        if let Some(z) = &self.zeta_product {
            doc.insert("zeta_product".into(), rational_function(z));
        }
        if let Some(m) = &self.morse {
            doc.insert("morse".into(), morse_json(m));
        }
        if let Some(checks) = &self.checks {
            let items: Vec<Value> = checks
                .iter()
                .map(|c| {
                    let (status, detail) = match &c.outcome {
                        Outcome::Agree => ("agree", None),
                        Outcome::Disagree(d) => ("disagree", Some(d)),
                        Outcome::Skipped(d) => ("skipped", Some(d)),
                    };
                    let mut o = Map::new();
                    o.insert("basic_set".into(), json!(c.basic_set));
                    o.insert("check".into(), json!(c.name));
                    o.insert("status".into(), json!(status));
                    if let Some(d) = detail {
                        o.insert("detail".into(), json!(d));
                    }
                    Value::Object(o)
                })
                .collect();
            doc.insert("checks".into(), Value::Array(items));
            doc.insert("all_agree".into(), json!(self.all_agree()));
        }
        Value::Object(doc)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.basic_sets.is_empty() && self.morse.is_none() && self.checks.is_none() {
            out.push_str("no basic sets\n");
        }
        for b in &self.basic_sets {
            set_text(&mut out, b);
        }
        if let Some(z) = &self.zeta_product {
            let _ = writeln!(out, "product of zeta functions: {z}");
        }
        if let Some(m) = &self.morse {
            morse_text(&mut out, m);
        }
        if let Some(checks) = &self.checks {
            for c in checks {
                let (tag, detail) = match &c.outcome {
                    Outcome::Agree => ("ok  ", None),
                    Outcome::Disagree(d) => ("FAIL", Some(d)),
                    Outcome::Skipped(d) => ("skip", Some(d)),
                };
                let _ = write!(out, "{tag} {}: {}", c.basic_set, c.name);
                if let Some(d) = detail {
                    let _ = write!(out, " ({d})");
                }
                out.push('\n');
            }
            let verdict = if self.all_agree() { "all checks agree" } else { "some checks disagree" };
            let _ = writeln!(out, "{verdict}");
        }
        out
    }
}

fn set_json(b: &BasicSetReport) -> Value {
    let mut o = Map::new();
    o.insert("name".into(), json!(b.name));
    o.insert("index".into(), json!(b.index_u));
    o.insert("size".into(), json!(b.structure.rows()));
    if let Some(d) = b.manifold_dims.unstable {
        o.insert("unstable_manifold_dim".into(), json!(d));
    }
    if let Some(d) = b.manifold_dims.stable {
        o.insert("stable_manifold_dim".into(), json!(d));
    }
    if let Some(index) = &b.index {
        o.insert("structure_matrix".into(), rational_matrix(&b.structure));
        o.insert("nilpotent".into(), json!(b.nilpotency.is_some()));
        o.insert("nilpotency_index".into(), json!(b.nilpotency));
        let degrees: Vec<Value> = index
            .graded
            .iter()
            .map(|(k, e)| {
                json!({
                    "degree": k,
                    "dim": e.dim,
                    "chi": rational_matrix(&e.chi),
                    "invariant_factors": e.invariant_factors.iter().map(polynomial).collect::<Vec<_>>(),
                })
            })
            .collect();
        o.insert("conley_index".into(), Value::Array(degrees));
        o.insert("trivial".into(), json!(index.is_trivial()));
    }
    if let Some(j) = &b.jordan {
        let classes: Vec<Value> = j.entries.iter().map(class_json).collect();
        o.insert("jordan_profile".into(), Value::Array(classes));
    }
    if let Some(z) = &b.zeta {
        o.insert("zeta".into(), rational_function(z));
    }
    Value::Object(o)
}

fn class_json(c: &EigenClass) -> Value {
    let mut o = Map::new();
    o.insert("factor".into(), polynomial(&c.factor));
    o.insert("kind".into(), json!(c.kind.as_str()));
    if let Some(l) = c.eigenvalue() {
        o.insert("eigenvalue".into(), rational(&l));
    }
    o.insert("block_sizes".into(), json!(c.block_sizes));
    o.insert("algebraic_multiplicity".into(), json!(c.algebraic_multiplicity));
    o.insert("geometric_multiplicity".into(), json!(c.geometric_multiplicity));
    Value::Object(o)
}

fn morse_json(m: &MorseReport) -> Value {
    json!({
        "q": m.q,
        "contributing": m.contributing,
        "lhs": rational_function(&m.lhs_product),
        "rhs": rational_function(&m.rhs_product),
        "p_of_t": rational_function(&m.p_of_t),
        "is_integer_polynomial": m.is_integer_polynomial,
        "split_asserted": m.split_asserted,
        "verdict": m.is_integer_polynomial,
    })
}

fn set_text(out: &mut String, b: &BasicSetReport) {
    let _ = writeln!(
        out,
        "basic set {} (index {}, {} symbol{})",
        b.name,
        b.index_u,
        b.structure.rows(),
        if b.structure.rows() == 1 { "" } else { "s" }
    );
    if let Some(d) = b.manifold_dims.unstable {
        let _ = writeln!(out, "  dim W^u = {d} (given)");
    }
    if let Some(d) = b.manifold_dims.stable {
        let _ = writeln!(out, "  dim W^s = {d} (given)");
    }
    if let Some(index) = &b.index {
        out.push_str("  structure matrix:\n");
        out.push_str(&indent(&b.structure.to_string(), 4));
        match b.nilpotency {
            Some(k) => {
                let _ = writeln!(out, "  nilpotent: A^{k} = 0, so the nonnilpotent part is 0x0");
            }
            None => out.push_str("  not nilpotent\n"),
        }
        for (k, e) in &index.graded {
            let _ = writeln!(out, "  Con_{k}: CH_{k} has dimension {}, chi_{k} =", e.dim);
            out.push_str(&indent(&e.chi.to_string(), 4));
            let factors: Vec<String> = e.invariant_factors.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "    invariant factors: {}", factors.join(", "));
        }
        if index.is_trivial() {
            out.push_str("  Con_q = (0, 0) for every q\n");
        } else {
            let degrees: Vec<String> = index.graded.keys().map(ToString::to_string).collect();
            let _ = writeln!(out, "  Con_q = (0, 0) for q not in {{{}}}", degrees.join(", "));
        }
    }
    if let Some(j) = &b.jordan {
        if j.entries.is_empty() {
            out.push_str("  Jordan profile: empty\n");
        }
        for c in &j.entries {
            let _ = write!(out, "  factor {}: {}", c.factor, c.kind.as_str().replace('_', " "));
            if let Some(l) = c.eigenvalue() {
                let _ = write!(out, " {l}");
            }
            let sizes: Vec<String> = c.block_sizes.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                ", blocks [{}], algebraic {}, geometric {}",
                sizes.join(", "),
                c.algebraic_multiplicity,
                c.geometric_multiplicity
            );
        }
    }
    if let Some(z) = &b.zeta {
        let _ = writeln!(out, "  zeta: {z}");
    }
}

fn morse_text(out: &mut String, m: &MorseReport) {
    let _ = writeln!(out, "Morse check at q = {}", m.q);
    let _ = writeln!(out, "  contributing basic sets: {}", m.contributing.join(", "));
    let _ = writeln!(out, "  lhs: {}", m.lhs_product);
    let _ = writeln!(out, "  rhs: {}", m.rhs_product);
    let _ = writeln!(out, "  P(t) = {}", m.p_of_t);
    let _ = writeln!(out, "  split asserted at q: {}", m.split_asserted);
    let _ = writeln!(out, "  verdict: {}", m.is_integer_polynomial);
}

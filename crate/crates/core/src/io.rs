//! The algebra and cochain file formats.
//!
//! An algebra file is a JSON object with keys `basis` (optional), `constants`,
//! `dim`, `field`, `kind` and `name`. Each constant is `[i, j, k, c]`
//! (1-based) meaning `e_i e_j` has coefficient `c` on `e_k`; only the stored
//! half (`i < j` for `lie`, `i ≤ j` for `assoc-comm`) may appear. Over `Q` a
//! coefficient is a string `"p"` or `"p/q"`, over `Qi` an object
//! `{"im": "p/q", "re": "p/q"}`.

use std::collections::BTreeSet;
use std::io::Read;

use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;

use crate::algebra::{Algebra, Kind};
use crate::cohomology::ChevalleyCochain;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Field, Scalar};

/// Reads a whole file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    name: String,
    kind: String,
    field: String,
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    constants: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochains {
    dim: usize,
    field: String,
    cochains: Vec<Vec<Value>>,
}

fn json_error(e: serde_json::Error) -> Error {
    let msg = e.to_string();
    let msg = match msg.rfind(" at line ") {
        Some(p) => msg[..p].to_string(),
        None => msg,
    };
    Error::Parse { line: e.line(), column: e.column(), message: msg }
}

/// 1-based line and column of a byte offset.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Byte offsets of the elements of the top-level array under `key`, and of
/// the elements of each nested array when `nested` is set.
fn element_offsets(text: &str, key: &str, nested: bool) -> (Vec<usize>, Vec<Vec<usize>>) {
    let bytes = text.as_bytes();
    let mut depth = 0usize;
    let mut i = 0;
    let mut target: Option<usize> = None;
    let mut outer = Vec::new();
    let mut inner: Vec<Vec<usize>> = Vec::new();
    let mut expect_value = false;
    let mut last_key = String::new();
    while i < bytes.len() {
        let c = bytes[i];
        if c == b'"' {
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i] != b'"' {
                if bytes[i] == b'\\' {
                    i += 1;
                }
                i += 1;
            }
            if depth == 1 {
                last_key = text[start + 1..i.min(text.len())].to_string();
            }
            if let Some(d) = target {
                record(d, depth, start, expect_value, nested, &mut outer, &mut inner);
            }
            expect_value = false;
            i += 1;
            continue;
        }
        match c {
            b'[' | b'{' => {
                if let Some(d) = target {
                    record(d, depth, i, expect_value, nested, &mut outer, &mut inner);
                } else if c == b'[' && depth == 1 && last_key == key {
                    target = Some(depth + 1);
                }
                depth += 1;
                expect_value = true;
            }
            b']' | b'}' => {
                depth = depth.saturating_sub(1);
                if target == Some(depth + 1) {
                    target = None;
                    last_key.clear();
                }
                expect_value = false;
            }
            b',' => expect_value = true,
            b':' => expect_value = true,
            c if c.is_ascii_whitespace() => {}
            _ => {
                if let Some(d) = target {
                    record(d, depth, i, expect_value, nested, &mut outer, &mut inner);
                }
                expect_value = false;
            }
        }
        i += 1;
    }
    (outer, inner)
}

fn record(
    target: usize,
    depth: usize,
    at: usize,
    expect_value: bool,
    nested: bool,
    outer: &mut Vec<usize>,
    inner: &mut Vec<Vec<usize>>,
) {
    if !expect_value {
        return;
    }
    if depth == target {
        outer.push(at);
        inner.push(Vec::new());
    } else if nested && depth == target + 1 {
        if let Some(v) = inner.last_mut() {
            v.push(at);
        }
    }
}

struct Located<'a> {
    text: &'a str,
    offset: usize,
}

impl Located<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        let (line, column) = position(self.text, self.offset);
        Error::Parse { line, column, message: message.into() }
    }
}

fn parse_coeff(v: &Value, field: Field, at: &Located<'_>) -> Result<Scalar> {
    let rational = |v: &Value, what: &str| match v {
        Value::String(s) => parse_rational(s).map_err(|e| at.err(format!("{what}: {e}"))),
        other => Err(at.err(format!("{what}: expected a string \"p/q\", found {other}"))),
    };
    match (field, v) {
        (Field::Q, Value::Object(_)) => Err(at.err("coefficient: field Q takes \"p/q\" strings")),
        (Field::Q, v) => Ok(Scalar::from_ratio(rational(v, "coefficient")?)),
        (Field::Qi, Value::Object(m)) => {
            if let Some(k) = m.keys().find(|k| *k != "re" && *k != "im") {
                return Err(at.err(format!("coefficient: unknown key `{k}`")));
            }
            let re = m.get("re").ok_or_else(|| at.err("coefficient: missing `re`"))?;
            let im = m.get("im").ok_or_else(|| at.err("coefficient: missing `im`"))?;
            Ok(Scalar::new(rational(re, "re")?, rational(im, "im")?))
        }
        (Field::Qi, _) => Err(at.err("coefficient: field Qi takes {\"re\": \"p/q\", \"im\": \"p/q\"}")),
    }
}

fn parse_index(v: &Value, dim: usize, at: &Located<'_>) -> Result<usize> {
    match v.as_u64() {
        Some(x) if x >= 1 && x as usize <= dim => Ok(x as usize),
        Some(x) => Err(at.err(format!("index {x} out of range 1..{dim}"))),
        None => Err(at.err(format!("index: expected a positive integer, found {v}"))),
    }
}

type Entry = (usize, usize, usize, Scalar);

/// Parses `[i, j, k, c]` entries, enforcing range, symmetry class and
/// uniqueness, with positions taken from `offsets`.
fn parse_entries(
    text: &str,
    items: &[Value],
    offsets: &[usize],
    dim: usize,
    field: Field,
    kind: Kind,
) -> Result<Vec<Entry>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (n, item) in items.iter().enumerate() {
        let at = Located { text, offset: offsets.get(n).copied().unwrap_or(0) };
        let Some(arr) = item.as_array().filter(|a| a.len() == 4) else {
            return Err(at.err("constant: expected [i, j, k, coefficient]"));
        };
        let (i, j, k) =
            (parse_index(&arr[0], dim, &at)?, parse_index(&arr[1], dim, &at)?, parse_index(&arr[2], dim, &at)?);
        if !kind.is_stored_pair(i - 1, j - 1) {
            let rule = match kind {
                Kind::Lie => "i < j",
                Kind::AssocComm => "i <= j",
            };
            return Err(at.err(format!("lower-triangular entry [{i}, {j}, {k}] for kind {kind} (need {rule})")));
        }
        if !seen.insert((i, j, k)) {
            return Err(at.err(format!("duplicate entry [{i}, {j}, {k}]")));
        }
        let c = parse_coeff(&arr[3], field, &at)?;
        if !c.is_zero() {
            out.push((i, j, k, c));
        }
    }
    Ok(out)
}

fn parse_tag<T: std::str::FromStr<Err = String>>(text: &str, key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|e: String| {
        let offset = text.find(&format!("\"{key}\"")).unwrap_or(0);
        Located { text, offset }.err(e)
    })
}

/// Parses an algebra file.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let raw: RawAlgebra = serde_json::from_str(text).map_err(json_error)?;
    let kind: Kind = parse_tag(text, "kind", &raw.kind)?;
    let field: Field = parse_tag(text, "field", &raw.field)?;
    if raw.dim == 0 {
        let offset = text.find("\"dim\"").unwrap_or(0);
        return Err(Located { text, offset }.err("dimension must be positive"));
    }
    let (offsets, _) = element_offsets(text, "constants", false);
    let entries = parse_entries(text, &raw.constants, &offsets, raw.dim, field, kind)?;
    let alg = Algebra::new(raw.name, kind, field, raw.dim, &entries)?;
    if let Some(b) = &raw.basis {
        if b.len() != raw.dim {
            let offset = text.find("\"basis\"").unwrap_or(0);
            return Err(Located { text, offset }.err(format!("basis has {} labels, dim is {}", b.len(), raw.dim)));
        }
    }
    alg.with_basis_labels(raw.basis)
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn coeff_text(c: &Scalar, field: Field) -> String {
    match field {
        Field::Q => json_str(&c.re_string()),
        Field::Qi => format!("{{\"im\": {}, \"re\": {}}}", json_str(&c.im_string()), json_str(&c.re_string())),
    }
}

fn constants_block(entries: &[Entry], field: Field, indent: &str) -> String {
    if entries.is_empty() {
        return "[]".into();
    }
    let lines: Vec<String> =
        entries.iter().map(|(i, j, k, c)| format!("{indent}  [{i}, {j}, {k}, {}]", coeff_text(c, field))).collect();
    format!("[\n{}\n{indent}]", lines.join(",\n"))
}

/// Canonical text: sorted keys, lowest-terms coefficients, one constant per
/// line, trailing newline.
pub fn emit_algebra(alg: &Algebra) -> String {
    let mut out = String::from("{\n");
    if let Some(b) = alg.basis_labels() {
        let labels: Vec<String> = b.iter().map(|l| json_str(l)).collect();
        out += &format!("  \"basis\": [{}],\n", labels.join(", "));
    }
    out += &format!("  \"constants\": {},\n", constants_block(&alg.entries(), alg.field(), "  "));
    out += &format!("  \"dim\": {},\n", alg.dim());
    out += &format!("  \"field\": {},\n", json_str(alg.field().tag()));
    out += &format!("  \"kind\": {},\n", json_str(alg.kind().tag()));
    out += &format!("  \"name\": {}\n}}\n", json_str(alg.name()));
    out
}

/// Parses a cochain file: `{"cochains": [[[i, j, k, c], …], …], "dim": n,
/// "field": "Q"}`, each inner list one alternating 2-cochain with
/// `φ(X_i, X_j)` having coefficient `c` on `X_k` (`i < j`, 1-based).
pub fn parse_cochains(text: &str) -> Result<(Field, Vec<ChevalleyCochain>)> {
    let raw: RawCochains = serde_json::from_str(text).map_err(json_error)?;
    let field: Field = parse_tag(text, "field", &raw.field)?;
    let (outer, inner) = element_offsets(text, "cochains", true);
    let mut out = Vec::new();
    for (n, items) in raw.cochains.iter().enumerate() {
        let offsets = inner.get(n).cloned().unwrap_or_else(|| vec![outer.get(n).copied().unwrap_or(0); items.len()]);
        let entries = parse_entries(text, items, &offsets, raw.dim, field, Kind::Lie)?;
        let e: Vec<_> = entries.into_iter().map(|(i, j, k, c)| (vec![i - 1, j - 1], k - 1, c)).collect();
        out.push(ChevalleyCochain::from_entries(raw.dim, 2, &e)?);
    }
    Ok((field, out))
}

/// Canonical text of a cochain file.
pub fn emit_cochains(field: Field, dim: usize, cochains: &[ChevalleyCochain]) -> String {
    let blocks: Vec<String> = cochains
        .iter()
        .map(|c| {
            let mut entries = Vec::new();
            for (t, v) in c.tuples().iter().zip(c.values()) {
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        entries.push((t[0] + 1, t[1] + 1, k + 1, x.clone()));
                    }
                }
            }
            format!("    {}", constants_block(&entries, field, "    "))
        })
        .collect();
    let list = if blocks.is_empty() { "[]".to_string() } else { format!("[\n{}\n  ]", blocks.join(",\n")) };
    format!("{{\n  \"cochains\": {list},\n  \"dim\": {dim},\n  \"field\": {}\n}}\n", json_str(field.tag()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    const R2: &str = "{\n  \"constants\": [\n    [1, 2, 2, \"1\"]\n  ],\n  \"dim\": 2,\n  \"field\": \"Q\",\n  \"kind\": \"lie\",\n  \"name\": \"r2\"\n}\n";

    #[test]
    fn canonical_round_trip() {
        let a = parse_algebra(R2).unwrap();
        assert_eq!(a, Algebra::new("r2", Kind::Lie, Field::Q, 2, &[(1, 2, 2, Scalar::one())]).unwrap());
        assert_eq!(emit_algebra(&a), R2);
    }

    #[test]
    fn canonicalizes_coefficients_and_order() {
        let txt = r#"{"name": "x", "kind": "assoc-comm", "field": "Q", "dim": 2,
            "constants": [[2, 2, 2, "2/4"], [1, 1, 1, "3"], [1, 2, 1, "0"]]}"#;
        let out = emit_algebra(&parse_algebra(txt).unwrap());
        assert!(out.contains("[1, 1, 1, \"3\"],\n    [2, 2, 2, \"1/2\"]"));
        assert_eq!(emit_algebra(&parse_algebra(&out).unwrap()), out);
    }

    #[test]
    fn gaussian_coefficients() {
        let txt = r#"{"name": "c", "kind": "assoc-comm", "field": "Qi", "dim": 1,
            "constants": [[1, 1, 1, {"re": "1", "im": "-1/2"}]]}"#;
        let a = parse_algebra(txt).unwrap();
        assert!(emit_algebra(&a).contains("{\"im\": \"-1/2\", \"re\": \"1\"}"));
        let bad = txt.replace("{\"re\": \"1\", \"im\": \"-1/2\"}", "\"1\"");
        assert!(matches!(parse_algebra(&bad), Err(Error::Parse { .. })));
    }

    #[test]
    fn diagnostics_carry_positions() {
        let txt = "{\"name\": \"x\", \"kind\": \"lie\", \"field\": \"Q\", \"dim\": 2,\n \"constants\": [\n  [2, 1, 2, \"1\"]]}";
        match parse_algebra(txt) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (3, 3));
                assert!(message.contains("lower-triangular entry"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let dup = txt.replace("[2, 1, 2, \"1\"]", "[1, 2, 2, \"1\"], [1, 2, 2, \"2\"]");
        assert!(matches!(parse_algebra(&dup), Err(Error::Parse { message, .. }) if message.contains("duplicate")));
        let range = txt.replace("[2, 1, 2, \"1\"]", "[1, 2, 3, \"1\"]");
        assert!(matches!(parse_algebra(&range), Err(Error::Parse { message, .. }) if message.contains("out of range")));
        let rat = txt.replace("[2, 1, 2, \"1\"]", "[1, 2, 2, \"1/0\"]");
        assert!(matches!(parse_algebra(&rat), Err(Error::Parse { message, .. }) if message.contains("malformed")));
        assert!(matches!(parse_algebra("{\"name\": 1}"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn cochain_files() {
        let txt = r#"{"dim": 3, "field": "Q", "cochains": [[[1, 2, 1, "1"]], []]}"#;
        let (field, cs) = parse_cochains(txt).unwrap();
        assert_eq!((field, cs.len()), (Field::Q, 2));
        assert_eq!(cs[0].eval_basis(&[1, 0])[0], -Scalar::one());
        let out = emit_cochains(field, 3, &cs);
        let (_, again) = parse_cochains(&out).unwrap();
        assert_eq!(again, cs);
        assert_eq!(emit_cochains(field, 3, &again), out);
        let bad = r#"{"dim": 3, "field": "Q", "cochains": [[], [[2, 1, 1, "1"]]]}"#;
        let e = parse_cochains(bad);
        assert!(matches!(e, Err(Error::Parse { column: 44, .. })), "{e:?}");
    }
}

//! Configuration-file parsing for the `check` subcommand.
//!
//! Text form is line-oriented and hand-editable:
//!
//! ```text
//! # optional comments
//! field: gf:7
//! u: (1, 0, 3)
//! v: (0, 1, 2)
//! ...
//! ```
//!
//! The structured alternative is a JSON object with a "field" selector
//! and one three-element array per vector label; components are strings
//! ("-1/2") or integers.

use crossdet::fields::{FieldCtx, FieldSelector};
use crossdet::identities::{Configuration, VECTOR_LABELS};
use crossdet::vec3::Vec3;
use crossdet::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum InputFormat {
    /// Line-oriented `label: (a, b, c)` text.
    Text,
    /// A JSON object keyed by "field" and the vector labels.
    Structured,
}

/// The six vectors still in textual form, plus the chosen field.
#[derive(Debug)]
pub struct RawConfig {
    pub selector: FieldSelector,
    vectors: [String; 6],
}

impl RawConfig {
    /// Finish parsing against a concrete field.
    pub fn configuration<C: FieldCtx>(
        &self,
        ctx: &C,
    ) -> Result<Configuration<C::Elem>, Error> {
        let [u, v, w, x, y, z] = &self.vectors;
        Configuration::new(
            Vec3::parse(ctx, u)?,
            Vec3::parse(ctx, v)?,
            Vec3::parse(ctx, w)?,
            Vec3::parse(ctx, x)?,
            Vec3::parse(ctx, y)?,
            Vec3::parse(ctx, z)?,
        )
    }
}

pub fn parse_raw(body: &str, format: InputFormat) -> Result<RawConfig, Error> {
    match format {
        InputFormat::Text => parse_text(body),
        InputFormat::Structured => parse_json(body),
    }
}

fn parse_text(body: &str) -> Result<RawConfig, Error> {
    let mut selector: Option<FieldSelector> = None;
    let mut vectors: [Option<String>; 6] = Default::default();
    for (lineno, line) in body.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| {
            Error::ParseError(format!("line {}: expected \"key: value\"", lineno + 1))
        })?;
        let key = key.trim();
        let value = value.trim();
        if key == "field" {
            if selector.replace(value.parse()?).is_some() {
                return Err(Error::ParseError("duplicate field line".into()));
            }
            continue;
        }
        match VECTOR_LABELS.iter().position(|l| *l == key) {
            Some(i) => {
                if vectors[i].replace(value.to_string()).is_some() {
                    return Err(Error::ParseError(format!("duplicate vector {key:?}")));
                }
            }
            None => {
                return Err(Error::ParseError(format!(
                    "line {}: unknown key {key:?}",
                    lineno + 1
                )))
            }
        }
    }
    finish(selector, vectors)
}

fn parse_json(body: &str) -> Result<RawConfig, Error> {
    let value: serde_json::Value = serde_json::from_str(body)
        .map_err(|e| Error::ParseError(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::ParseError("expected a JSON object".into()))?;
    for key in obj.keys() {
        if key != "field" && !VECTOR_LABELS.contains(&key.as_str()) {
            return Err(Error::ParseError(format!("unknown key {key:?}")));
        }
    }
    let selector = obj
        .get("field")
        .and_then(|f| f.as_str())
        .ok_or_else(|| Error::ParseError("missing \"field\" string".into()))?
        .parse()?;
    let mut vectors: [Option<String>; 6] = Default::default();
    for (i, label) in VECTOR_LABELS.iter().enumerate() {
        let arr = obj
            .get(*label)
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::ParseError(format!("missing vector {label:?}")))?;
        if arr.len() != 3 {
            return Err(Error::ParseError(format!(
                "vector {label:?} needs 3 components"
            )));
        }
        let comps: Vec<String> = arr
            .iter()
            .map(|c| match c {
                serde_json::Value::String(s) => Ok(s.clone()),
                serde_json::Value::Number(n) => Ok(n.to_string()),
                other => Err(Error::ParseError(format!(
                    "vector {label:?}: bad component {other}"
                ))),
            })
            .collect::<Result<_, _>>()?;
        vectors[i] = Some(format!("({}, {}, {})", comps[0], comps[1], comps[2]));
    }
    finish(Some(selector), vectors)
}

fn finish(
    selector: Option<FieldSelector>,
    vectors: [Option<String>; 6],
) -> Result<RawConfig, Error> {
    let selector = selector.ok_or_else(|| Error::ParseError("missing field line".into()))?;
    let mut out: Vec<String> = Vec::with_capacity(6);
    for (i, v) in vectors.into_iter().enumerate() {
        out.push(v.ok_or_else(|| {
            Error::ParseError(format!("missing vector {:?}", VECTOR_LABELS[i]))
        })?);
    }
    Ok(RawConfig {
        selector,
        vectors: out.try_into().expect("six vectors"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crossdet::fields::Rationals;

    #[test]
    fn text_round_trip() {
        let raw = parse_raw(
            "# demo\nfield: rational\nu: (1, 0, 0)\nv: (0, 1, 0)\nw: (0, 0, 1)\n\
             x: (2, 1, 1)\ny: (1, 2, 1)\nz: (1, 1, 2)\n",
            InputFormat::Text,
        )
        .unwrap();
        assert_eq!(raw.selector, FieldSelector::Rational);
        let c = raw.configuration(&Rationals).unwrap();
        assert_eq!(format!("{}", c.x()), "(2, 1, 1)");
    }

    #[test]
    fn json_accepts_strings_and_numbers() {
        let raw = parse_raw(
            r#"{"field": "rational", "u": [1, 0, 0], "v": [0, 1, 0], "w": [0, 0, 1],
                "x": ["1/2", 1, 1], "y": [1, 2, 1], "z": [1, 1, 2]}"#,
            InputFormat::Structured,
        )
        .unwrap();
        let c = raw.configuration(&Rationals).unwrap();
        assert_eq!(format!("{}", c.x()), "(1/2, 1, 1)");
    }

    #[test]
    fn errors_are_specific() {
        let e = parse_raw("u: (1,2,3)\n", InputFormat::Text).unwrap_err();
        assert!(matches!(e, Error::ParseError(ref m) if m.contains("missing field")));
        let e = parse_raw("field: rational\nfoo: (1,2,3)\n", InputFormat::Text).unwrap_err();
        assert!(matches!(e, Error::ParseError(ref m) if m.contains("unknown key")));
        let e = parse_raw("field: gf:4\n", InputFormat::Text).unwrap_err();
        assert_eq!(e, Error::NotPrime(4));
        let e = parse_raw("{", InputFormat::Structured).unwrap_err();
        assert!(matches!(e, Error::ParseError(ref m) if m.contains("JSON")));
    }
}

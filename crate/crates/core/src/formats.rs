//! Text and JSON input formats.
//!
//! Ideal file:
//!
//! ```text
//! # comment
//! ring Q x1 x2 x3          (or: ring Fp:32003 x y z)
//! x1*x2 + x3
//! x2^2
//! ```
//!
//! Partition file: the same header, then `subset:` blocks. Each following
//! line is an element; a line `exp: k` sets the exponent of the element just
//! above it, and an optional `variant: lemma1|lemma2` line selects the
//! condition to check.
//!
//! Matrix-criterion JSON:
//! `{"ring": "Q x1 x2", "p": [...], "rows": [{"c": "...", "i": 1}], "alpha0": [...]}`
//! where `ring` is optional if the ring is supplied separately.

use serde::{Deserialize, Serialize};

use crate::constructions::{MatrixCriterionInput, MatrixRow, SvElement, SvPartition, SvVariant};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingContext};

/// Parses `Q x1 x2 ...` or `Fp:p x y ...` (the part after `ring`). When the
/// first token is not a field, `default_field` is used. `field_override`
/// replaces whatever the text says.
pub fn parse_ring_spec(
    spec: &str,
    default_field: Field,
    field_override: Option<Field>,
    order: MonomialOrder,
) -> Result<Ring> {
    let mut tokens = spec.split_whitespace().peekable();
    let mut field = default_field;
    if let Some(first) = tokens.peek() {
        if let Ok(f) = first.parse::<Field>() {
            field = f;
            tokens.next();
        } else if first.starts_with("Fp:") {
            return Err(Error::InvalidField(first.to_string()));
        }
    }
    let vars: Vec<String> = tokens.map(str::to_string).collect();
    if vars.is_empty() {
        return Err(Error::InvalidRing("no variables declared".into()));
    }
    RingContext::new(field_override.unwrap_or(field), vars, order)
}

/// Content lines with their 1-based numbers, comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Format {
        line,
        msg: e.to_string(),
    })
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    field_override: Option<Field>,
    order: MonomialOrder,
) -> Result<Ring> {
    match lines.next() {
        Some((n, line)) => match line.strip_prefix("ring") {
            Some(rest) if rest.starts_with(char::is_whitespace) => at_line(
                n,
                parse_ring_spec(rest, Field::Rational, field_override, order),
            ),
            _ => Err(Error::Format {
                line: n,
                msg: "expected a `ring <field> <vars...>` header".into(),
            }),
        },
        None => Err(Error::Format {
            line: 1,
            msg: "empty file".into(),
        }),
    }
}

pub fn parse_ideal_file(
    text: &str,
    field_override: Option<Field>,
    order: MonomialOrder,
) -> Result<Ideal> {
    let mut lines = content_lines(text);
    let ring = header(&mut lines, field_override, order)?;
    let mut gens = Vec::new();
    for (n, line) in lines {
        gens.push(at_line(n, Polynomial::parse(line, &ring))?);
    }
    Ideal::new(&ring, gens)
}

pub fn parse_partition_file(
    text: &str,
    field_override: Option<Field>,
    order: MonomialOrder,
    default_variant: SvVariant,
) -> Result<SvPartition> {
    let mut lines = content_lines(text);
    let ring = header(&mut lines, field_override, order)?;
    let mut variant = default_variant;
    let mut subsets: Vec<Vec<SvElement>> = Vec::new();
    for (n, line) in lines {
        if let Some(v) = line.strip_prefix("variant:") {
            variant = at_line(n, v.trim().parse())?;
        } else if let Some(rest) = line.strip_prefix("subset:") {
            subsets.push(Vec::new());
            let rest = rest.trim();
            if !rest.is_empty() {
                let p = at_line(n, Polynomial::parse(rest, &ring))?;
                subsets.last_mut().unwrap().push(SvElement::new(p));
            }
        } else if let Some(e) = line.strip_prefix("exp:") {
            let last = subsets.last_mut().and_then(|s| s.last_mut());
            let Some(last) = last else {
                return Err(Error::Format {
                    line: n,
                    msg: "`exp:` must follow an element".into(),
                });
            };
            last.exponent = e.trim().parse().map_err(|_| Error::Format {
                line: n,
                msg: format!("invalid exponent `{}`", e.trim()),
            })?;
        } else {
            let Some(current) = subsets.last_mut() else {
                return Err(Error::Format {
                    line: n,
                    msg: "element before the first `subset:`".into(),
                });
            };
            current.push(SvElement::new(at_line(n, Polynomial::parse(line, &ring))?));
        }
    }
    SvPartition::new(&ring, subsets, variant)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixRowSpec {
    pub c: String,
    pub i: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    pub p: Vec<String>,
    pub rows: Vec<MatrixRowSpec>,
    pub alpha0: Vec<String>,
}

/// Reads matrix-criterion input. `ring` takes precedence over the document's
/// own `ring` entry.
pub fn parse_matrix_json(
    text: &str,
    ring: Option<&Ring>,
    field_override: Option<Field>,
    order: MonomialOrder,
) -> Result<MatrixCriterionInput> {
    let spec: MatrixSpec = serde_json::from_str(text)?;
    let ring = match (ring, &spec.ring) {
        (Some(r), _) => r.clone(),
        (None, Some(s)) => parse_ring_spec(s, Field::Rational, field_override, order)?,
        (None, None) => {
            return Err(Error::MalformedInput(
                "no ring given for the matrix input".into(),
            ))
        }
    };
    let parse_all = |v: &[String]| {
        v.iter()
            .map(|s| Polynomial::parse(s, &ring))
            .collect::<Result<Vec<_>>>()
    };
    let rows = spec
        .rows
        .iter()
        .map(|r| {
            Ok(MatrixRow {
                coeff: Polynomial::parse(&r.c, &ring)?,
                column: r.i,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixCriterionInput::new(&ring, parse_all(&spec.p)?, rows, parse_all(&spec.alpha0)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = "\
# partition of a six-variable ideal
ring Q x1 x2 x3 x4 x5 x6
subset:
x1*x6
subset: x3*x6
subset:
x1*x2 + x3*x4
exp: 2
x5*x6
";

    #[test]
    fn partition_file_round() {
        let p = parse_partition_file(EXAMPLE1, None, MonomialOrder::Grevlex, SvVariant::Lemma2)
            .unwrap();
        assert_eq!(p.subsets().len(), 3);
        assert_eq!(p.subsets()[2][0].exponent, 2);
        assert_eq!(p.subsets()[2][1].exponent, 1);
        assert_eq!(p.ring().nvars(), 6);
    }

    #[test]
    fn ideal_file_with_field_override() {
        let text = "ring Q x y\n# gens\nx^2 - 1/2\n\ny\n";
        let i = parse_ideal_file(text, Some(Field::Prime(5)), MonomialOrder::Lex).unwrap();
        assert_eq!(i.ring().field(), Field::Prime(5));
        assert_eq!(i.gens()[0].to_string(), "x^2 + 2");
    }

    #[test]
    fn errors_report_lines() {
        let text = "ring Q x y\nx +\n";
        match parse_ideal_file(text, None, MonomialOrder::Lex) {
            Err(Error::Format { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_ideal_file("x + y\n", None, MonomialOrder::Lex),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(parse_ideal_file("ring Fp:10 x\n", None, MonomialOrder::Lex).is_err());
        let bad = "ring Q x\nexp: 2\n";
        assert!(parse_partition_file(bad, None, MonomialOrder::Lex, SvVariant::Lemma2).is_err());
    }

    #[test]
    fn matrix_json() {
        let text = r#"{"ring": "Q x1 x3 x5", "p": ["x5"], "rows": [{"c": "x3", "i": 1}, {"c": "-x1", "i": 1}], "alpha0": ["1", "0"]}"#;
        let m = parse_matrix_json(text, None, None, MonomialOrder::Grevlex).unwrap();
        assert_eq!(m.n(), 2);
        let missing = r#"{"p": ["x"], "rows": [], "alpha0": []}"#;
        assert!(parse_matrix_json(missing, None, None, MonomialOrder::Grevlex).is_err());
    }
}

//! The `punctile-tiling/v1` interchange format.
//!
//! ```text
//! format punctile-tiling/v1
//! k 3
//! dim 3
//! periods 8 8 9
//! construction z3-odd
//! tool punctile 0.1.0
//! placements
//! 0 1 0 0
//! 1 0 1 0
//! ```
//!
//! Header fields appear in that order; `construction` and `tool` are
//! optional. Every line after `placements` is one tile copy: the axis
//! followed by the origin coordinates. Blank lines are ignored.

use std::fmt::Write as _;

use punctile_core::{Placement, PeriodicTiling, TorusShape};
use thiserror::Error;

pub const FORMAT_TAG: &str = "punctile-tiling/v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {field}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub field: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingDocument {
    pub k: usize,
    pub periods: Vec<usize>,
    pub placements: Vec<Placement>,
    pub construction: Option<String>,
    pub tool: Option<String>,
}

impl TilingDocument {
    pub fn from_tiling(t: &PeriodicTiling, construction: Option<&str>) -> Self {
        TilingDocument {
            k: t.k,
            periods: t.shape.dims().to_vec(),
            placements: t.placements.clone(),
            construction: construction.map(str::to_owned),
            tool: Some(format!("punctile {}", env!("CARGO_PKG_VERSION"))),
        }
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }

    pub fn to_tiling(&self) -> punctile_core::Result<PeriodicTiling> {
        PeriodicTiling::new(self.k, TorusShape::new(self.periods.clone())?, self.placements.clone())
    }

    pub fn write(&self) -> String {
        let mut out = String::with_capacity(16 * self.placements.len() + 128);
        let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(" ");
        writeln!(out, "format {FORMAT_TAG}").unwrap();
        writeln!(out, "k {}", self.k).unwrap();
        writeln!(out, "dim {}", self.dim()).unwrap();
        writeln!(out, "periods {}", join(&mut self.periods.iter().map(|p| p.to_string()))).unwrap();
        if let Some(c) = &self.construction {
            writeln!(out, "construction {c}").unwrap();
        }
        if let Some(t) = &self.tool {
            writeln!(out, "tool {t}").unwrap();
        }
        out.push_str("placements\n");
        for p in &self.placements {
            writeln!(out, "{} {}", p.axis, join(&mut p.origin.iter().map(|c| c.to_string()))).unwrap();
        }
        out
    }

    /// Parses a document. Origins are reduced into `[0, period)`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .peekable();
        let mut last_line = 0;
        let mut expect = |field: &'static str| -> Result<(usize, Vec<&str>), ParseError> {
            let (line, text) = lines.next().ok_or(ParseError {
                line: last_line + 1,
                field,
                message: "unexpected end of document".into(),
            })?;
            last_line = line;
            let mut words = text.split_whitespace();
            match words.next() {
                Some(w) if w == field => Ok((line, words.collect())),
                other => Err(ParseError {
                    line,
                    field,
                    message: format!("expected `{field}`, found `{}`", other.unwrap_or("")),
                }),
            }
        };

        let (line, tag) = expect("format")?;
        if tag != [FORMAT_TAG] {
            return Err(ParseError { line, field: "format", message: format!("unsupported format {tag:?}") });
        }
        let (line, k) = expect("k")?;
        let k = single(line, "k", &k)?;
        if k == 0 {
            return Err(ParseError { line, field: "k", message: "k must be positive".into() });
        }
        let (line, dim) = expect("dim")?;
        let dim = single(line, "dim", &dim)?;
        let (line, periods) = expect("periods")?;
        let periods: Vec<usize> = periods.iter().map(|w| number(line, "periods", w)).collect::<Result<_, _>>()?;
        if periods.len() != dim || dim == 0 {
            return Err(ParseError {
                line,
                field: "periods",
                message: format!("expected {dim} positive periods, found {}", periods.len()),
            });
        }
        if periods.contains(&0) {
            return Err(ParseError { line, field: "periods", message: "periods must be positive".into() });
        }

        let mut construction = None;
        let mut tool = None;
        let mut body_started = false;
        let mut placements = Vec::new();
        for (line, text) in lines {
            if !body_started {
                let (key, rest) = text.split_once(' ').unwrap_or((text, ""));
                match key {
                    "construction" if construction.is_none() && tool.is_none() => {
                        construction = Some(rest.trim().to_owned())
                    }
                    "tool" if tool.is_none() => tool = Some(rest.trim().to_owned()),
                    "placements" if rest.is_empty() => body_started = true,
                    _ => {
                        return Err(ParseError {
                            line,
                            field: "header",
                            message: format!("unexpected line `{text}`"),
                        })
                    }
                }
                continue;
            }
            let words: Vec<&str> = text.split_whitespace().collect();
            if words.len() != dim + 1 {
                return Err(ParseError {
                    line,
                    field: "placement",
                    message: format!("expected axis and {dim} coordinates, found {} values", words.len()),
                });
            }
            let axis: usize = number(line, "placement axis", words[0])?;
            if axis >= dim {
                return Err(ParseError {
                    line,
                    field: "placement axis",
                    message: format!("axis {axis} out of range for dimension {dim}"),
                });
            }
            let origin = words[1..]
                .iter()
                .zip(&periods)
                .map(|(w, &p)| {
                    w.parse::<i64>().map(|c| c.rem_euclid(p as i64)).map_err(|e| ParseError {
                        line,
                        field: "placement origin",
                        message: format!("`{w}`: {e}"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            placements.push(Placement::new(axis, origin));
        }
        if !body_started {
            return Err(ParseError {
                line: last_line + 1,
                field: "placements",
                message: "missing `placements` section".into(),
            });
        }
        Ok(TilingDocument { k, periods, placements, construction, tool })
    }
}

fn number<T: std::str::FromStr>(line: usize, field: &'static str, word: &str) -> Result<T, ParseError>
where
    T::Err: std::fmt::Display,
{
    word.parse().map_err(|e: T::Err| ParseError { line, field, message: format!("`{word}`: {e}") })
}

fn single(line: usize, field: &'static str, words: &[&str]) -> Result<usize, ParseError> {
    match words {
        [w] => number(line, field, w),
        _ => Err(ParseError { line, field, message: format!("expected one value, found {}", words.len()) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SAMPLE: &str = "format punctile-tiling/v1\nk 1\ndim 1\nperiods 4\nplacements\n0 0\n0 1\n";

    #[test]
    fn parses_minimal_document() {
        let doc = TilingDocument::parse(SAMPLE).unwrap();
        assert_eq!(doc.k, 1);
        assert_eq!(doc.periods, vec![4]);
        assert_eq!(doc.placements.len(), 2);
        assert_eq!(doc.construction, None);
        assert_eq!(doc.write(), SAMPLE);
    }

    #[test]
    fn golden_construction_header() {
        let t = punctile_core::construct_odd(3).unwrap();
        let doc = TilingDocument::from_tiling(&t, Some("z3-odd"));
        let text = doc.write();
        let head: Vec<&str> = text.lines().take(7).collect();
        assert_eq!(
            head,
            vec![
                "format punctile-tiling/v1",
                "k 3",
                "dim 3",
                "periods 8 8 9",
                "construction z3-odd",
                &format!("tool punctile {}", env!("CARGO_PKG_VERSION")),
                "placements",
            ]
        );
        assert_eq!(text.lines().count(), 7 + 96);
        assert_eq!(TilingDocument::parse(&text).unwrap(), doc);
    }

    #[test]
    fn origins_are_reduced() {
        let doc = TilingDocument::parse("format punctile-tiling/v1\nk 1\ndim 1\nperiods 4\nplacements\n0 -1\n0 9\n").unwrap();
        assert_eq!(doc.placements[0].origin, vec![3]);
        assert_eq!(doc.placements[1].origin, vec![1]);
    }

    fn err(text: &str) -> ParseError {
        TilingDocument::parse(text).unwrap_err()
    }

    #[test]
    fn errors_carry_line_and_field() {
        let e = err("format punctile-tiling/v2\n");
        assert_eq!((e.line, e.field), (1, "format"));
        let e = err("format punctile-tiling/v1\nk x\n");
        assert_eq!((e.line, e.field), (2, "k"));
        let e = err("format punctile-tiling/v1\nk 1\ndim 2\nperiods 4\n");
        assert_eq!((e.line, e.field), (4, "periods"));
        let e = err("format punctile-tiling/v1\nk 1\ndim 1\nperiods 4\nplacements\n0 1\n3 1\n");
        assert_eq!((e.line, e.field), (7, "placement axis"));
        let e = err("format punctile-tiling/v1\nk 1\ndim 1\nperiods 4\nplacements\n0 1 2\n");
        assert_eq!((e.line, e.field), (6, "placement"));
        let e = err("format punctile-tiling/v1\nk 1\ndim 1\nperiods 4\n");
        assert_eq!(e.field, "placements");
        let e = err("format punctile-tiling/v1\nk 1\ndim 1\nperiods 4\nbogus\nplacements\n");
        assert_eq!((e.line, e.field), (5, "header"));
    }

    fn arb_doc() -> impl Strategy<Value = TilingDocument> {
        (1usize..6, prop::collection::vec(1usize..12, 1..=4)).prop_flat_map(|(k, periods)| {
            let dim = periods.len();
            let p2 = periods.clone();
            let placement = (0..dim, prop::collection::vec(0i64..1000, dim)).prop_map(move |(axis, o)| {
                let origin = o.iter().zip(&p2).map(|(c, &p)| c % p as i64).collect();
                Placement::new(axis, origin)
            });
            (
                prop::collection::vec(placement, 0..20),
                prop::option::of("[a-z0-9-]{1,10}"),
            )
                .prop_map(move |(placements, construction)| TilingDocument {
                    k,
                    periods: periods.clone(),
                    placements,
                    construction,
                    tool: Some("punctile test".into()),
                })
        })
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(doc in arb_doc()) {
            let text = doc.write();
            prop_assert_eq!(TilingDocument::parse(&text).unwrap(), doc.clone());
            prop_assert_eq!(TilingDocument::parse(&text).unwrap().write(), text);
        }
    }
}

//! Textual graph files and move specifications.
//!
//! A graph file is a JSON document of the exact shape
//!
//! ```json
//! {
//!   "vertices": [
//!     {"id": 1, "genus": 0, "self_int": -2},
//!     {"id": 2, "genus": 0, "self_int": "inf"}
//!   ],
//!   "edges": [
//!     [1, 2]
//!   ]
//! }
//! ```
//!
//! parsed by a small recursive-descent reader that reports line and column
//! on every failure. [`emit_graph`] writes the canonical form (vertices
//! and edges sorted), and parsing a canonical file reproduces it byte for
//! byte.

use crate::graph::{GraphError, PlumbingGraph, Vertex, VertexId, Weight};
use std::fmt::Write as _;
use thiserror::Error;

/// Bounds on file input; in-memory graphs are unrestricted.
pub const MAX_GENUS: i64 = 10_000;
pub const MAX_WEIGHT: i64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: u32, col: u32, msg: String },
    #[error("invalid graph: {0}")]
    Validation(#[from] GraphError),
}

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Reader<'a> {
    fn new(src: &'a str) -> Self {
        Reader {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, FormatError> {
        Err(FormatError::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), FormatError> {
        self.skip_ws();
        match self.peek() {
            Some(got) if got == c => {
                self.bump();
                Ok(())
            }
            Some(got) => self.fail(format!(
                "expected `{}`, found `{}`",
                c as char, got as char
            )),
            None => self.fail(format!("expected `{}`, found end of input", c as char)),
        }
    }

    fn string(&mut self) -> Result<String, FormatError> {
        self.expect(b'"')?;
        let mut out = String::new();
        loop {
            match self.bump() {
                Some(b'"') => return Ok(out),
                Some(b'\\') | Some(b'\n') => return self.fail("unsupported string content"),
                Some(c) => out.push(c as char),
                None => return self.fail("unterminated string"),
            }
        }
    }

    fn integer(&mut self) -> Result<i64, FormatError> {
        self.skip_ws();
        let negative = self.peek() == Some(b'-');
        if negative {
            self.bump();
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.fail("expected a digit");
        }
        let mut value: i64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            self.bump();
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as i64))
                .ok_or(())
                .or_else(|_| self.fail::<i64>("number out of range"))?;
        }
        Ok(if negative { -value } else { value })
    }

    /// `self_int` value: an integer or the string "inf".
    fn weight(&mut self) -> Result<Weight, FormatError> {
        self.skip_ws();
        if self.peek() == Some(b'"') {
            let s = self.string()?;
            if s == "inf" {
                Ok(Weight::Inf)
            } else {
                self.fail(format!("expected \"inf\", found \"{s}\""))
            }
        } else {
            Ok(Weight::Int(self.integer()?))
        }
    }

    fn vertex(&mut self) -> Result<Vertex, FormatError> {
        self.expect(b'{')?;
        let mut id: Option<i64> = None;
        let mut genus: Option<i64> = None;
        let mut self_int: Option<Weight> = None;
        loop {
            let key = self.string()?;
            self.expect(b':')?;
            match key.as_str() {
                "id" => {
                    if id.replace(self.integer()?).is_some() {
                        return self.fail("duplicate key `id`");
                    }
                }
                "genus" => {
                    if genus.replace(self.integer()?).is_some() {
                        return self.fail("duplicate key `genus`");
                    }
                }
                "self_int" => {
                    if self_int.replace(self.weight()?).is_some() {
                        return self.fail("duplicate key `self_int`");
                    }
                }
                other => return self.fail(format!("unknown vertex key `{other}`")),
            }
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.bump();
                    self.skip_ws();
                }
                Some(b'}') => {
                    self.bump();
                    break;
                }
                _ => return self.fail("expected `,` or `}` in vertex"),
            }
        }
        let Some(id) = id else {
            return self.fail("vertex is missing `id`");
        };
        let Some(genus) = genus else {
            return self.fail("vertex is missing `genus`");
        };
        let Some(self_int) = self_int else {
            return self.fail("vertex is missing `self_int`");
        };
        if !(0..=u32::MAX as i64).contains(&id) {
            return self.fail("vertex id out of range");
        }
        // Presentations carry genus-many handle pairs and weight-many
        // letters per relator, so untrusted files get sane bounds.
        if !(0..=MAX_GENUS).contains(&genus) {
            return self.fail(format!("genus must be between 0 and {MAX_GENUS}"));
        }
        if let Weight::Int(w) = self_int {
            if w.abs() > MAX_WEIGHT {
                return self.fail(format!(
                    "self_int must be between -{MAX_WEIGHT} and {MAX_WEIGHT}"
                ));
            }
        }
        Ok(Vertex {
            id: id as VertexId,
            genus: genus as u32,
            self_int,
        })
    }

    fn vertex_ref(&mut self) -> Result<VertexId, FormatError> {
        let v = self.integer()?;
        if !(0..=u32::MAX as i64).contains(&v) {
            return self.fail("vertex id out of range");
        }
        Ok(v as VertexId)
    }

    fn edge(&mut self) -> Result<(VertexId, VertexId), FormatError> {
        self.expect(b'[')?;
        let a = self.vertex_ref()?;
        self.expect(b',')?;
        let b = self.vertex_ref()?;
        self.expect(b']')?;
        Ok((a, b))
    }

    fn list<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T, FormatError>,
    ) -> Result<Vec<T>, FormatError> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.bump();
                }
                Some(b']') => {
                    self.bump();
                    return Ok(out);
                }
                _ => return self.fail("expected `,` or `]` in list"),
            }
        }
    }
}

/// Parse a graph file and validate the result.
pub fn parse_graph(src: &str) -> Result<PlumbingGraph, FormatError> {
    let (vertices, edges) = parse_graph_parts(src)?;
    Ok(PlumbingGraph::new(vertices, edges)?)
}

/// Raw document content before graph validation.
pub type GraphParts = (Vec<Vertex>, Vec<(VertexId, VertexId)>);

/// Parse without validation; used to distinguish syntax errors from
/// structural ones.
pub fn parse_graph_parts(src: &str) -> Result<GraphParts, FormatError> {
    let mut r = Reader::new(src);
    r.expect(b'{')?;
    let mut vertices: Option<Vec<Vertex>> = None;
    let mut edges: Option<Vec<(VertexId, VertexId)>> = None;
    loop {
        let key = r.string()?;
        r.expect(b':')?;
        match key.as_str() {
            "vertices" => {
                if vertices.replace(r.list(Reader::vertex)?).is_some() {
                    return r.fail("duplicate key `vertices`");
                }
            }
            "edges" => {
                if edges.replace(r.list(Reader::edge)?).is_some() {
                    return r.fail("duplicate key `edges`");
                }
            }
            other => return r.fail(format!("unknown key `{other}`")),
        }
        r.skip_ws();
        match r.peek() {
            Some(b',') => {
                r.bump();
                r.skip_ws();
            }
            Some(b'}') => {
                r.bump();
                break;
            }
            _ => return r.fail("expected `,` or `}`"),
        }
    }
    r.skip_ws();
    if r.peek().is_some() {
        return r.fail("trailing input after document");
    }
    let Some(vertices) = vertices else {
        return r.fail("document is missing `vertices`");
    };
    let Some(edges) = edges else {
        return r.fail("document is missing `edges`");
    };
    Ok((vertices, edges))
}

/// Canonical text of a graph: vertices by id, edges sorted.
pub fn emit_graph(g: &PlumbingGraph) -> String {
    let mut out = String::from("{\n  \"vertices\": [\n");
    let n = g.vertices().len();
    for (i, v) in g.vertices().iter().enumerate() {
        let weight = match v.self_int {
            Weight::Int(w) => w.to_string(),
            Weight::Inf => "\"inf\"".to_string(),
        };
        let _ = writeln!(
            out,
            "    {{\"id\": {}, \"genus\": {}, \"self_int\": {}}}{}",
            v.id,
            v.genus,
            weight,
            if i + 1 < n { "," } else { "" }
        );
    }
    out.push_str("  ],\n  \"edges\": [\n");
    let m = g.edges().len();
    for (i, (a, b)) in g.edges().iter().enumerate() {
        let _ = writeln!(
            out,
            "    [{}, {}]{}",
            a,
            b,
            if i + 1 < m { "," } else { "" }
        );
    }
    out.push_str("  ]\n}\n");
    out
}

/// A single graph rewrite, as given on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveSpec {
    BlowUpEdge(VertexId, VertexId),
    BlowUpPoint(VertexId),
    BlowDown(VertexId),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid move specification: {0}")]
pub struct MoveSpecError(pub String);

/// Parse `blowup-edge I J`, `blowup-point V` or `blowdown V`.
pub fn parse_move_spec(spec: &str) -> Result<MoveSpec, MoveSpecError> {
    let mut parts = spec.split_whitespace();
    let op = parts
        .next()
        .ok_or_else(|| MoveSpecError("empty specification".into()))?;
    let mut arg = || -> Result<VertexId, MoveSpecError> {
        let raw = parts
            .next()
            .ok_or_else(|| MoveSpecError(format!("`{op}` needs more arguments")))?;
        raw.parse()
            .map_err(|_| MoveSpecError(format!("`{raw}` is not a vertex id")))
    };
    let parsed = match op {
        "blowup-edge" => MoveSpec::BlowUpEdge(arg()?, arg()?),
        "blowup-point" => MoveSpec::BlowUpPoint(arg()?),
        "blowdown" => MoveSpec::BlowDown(arg()?),
        other => {
            return Err(MoveSpecError(format!(
                "unknown move `{other}` (expected blowup-edge, blowup-point or blowdown)"
            )))
        }
    };
    if let Some(extra) = parts.next() {
        return Err(MoveSpecError(format!("unexpected argument `{extra}`")));
    }
    Ok(parsed)
}

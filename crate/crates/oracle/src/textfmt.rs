//! Plain-text serialization of web diagrams.
//!
//! One directive per line; `#` starts a comment and blank lines are ignored.
//! Every edge has a name chosen by the author. `+name` denotes the head end
//! of that edge (the arrow points into the port holding it) and `-name` the
//! tail end; each name must appear exactly once with each sign. Ports are
//! listed counterclockwise around their vertex.
//!
//! ```text
//! V s source -a -b -c    # trivalent, edges outgoing
//! V t sink   +a +c +b    # trivalent, edges incoming
//! X c  +p -q +r -s       # crossing; the first port's strand is the over one
//! K w  2  +a +b -c -d    # clasp across a 2-strand cable, one side then the
//!                        # other reversed
//! D m  1 2  ...          # double clasp joining antiparallel cables of
//!                        # widths 1 and 2
//! B +x -y                # boundary stubs, in boundary order
//! ```
//!
//! A crossing's over strand is the one through its first listed port, so the
//! syntax needs no separate over/under flag; the writer rotates each crossing
//! to honor the convention. Parsing ends with full structural validation, so
//! a text that parses denotes a planar web.

use std::collections::HashMap;

use crate::diagram::{is_head, Half, VertexKind, WebDiagram};
use crate::OracleError;

// ----------------------------------------------------------------------
// Parsing
// ----------------------------------------------------------------------

fn err(line: usize, msg: impl std::fmt::Display) -> OracleError {
    OracleError::Parse(format!("line {line}: {msg}"))
}

/// Incremental builder: edges are allocated the first time a name appears,
/// and every signed end may be claimed only once.
struct Parser {
    d: WebDiagram,
    edges: HashMap<String, (Half, Half)>,
    used: HashMap<(String, bool), usize>,
}

impl Parser {
    fn port(&mut self, tok: &str, line: usize) -> Result<Half, OracleError> {
        let (head, name) = match tok.as_bytes().first() {
            Some(b'+') => (true, &tok[1..]),
            Some(b'-') => (false, &tok[1..]),
            _ => return Err(err(line, format!("port `{tok}` must start with + or -"))),
        };
        if name.is_empty() {
            return Err(err(line, format!("port `{tok}` has no edge name")));
        }
        let (t, h) = *self
            .edges
            .entry(name.to_string())
            .or_insert_with(|| self.d.alloc_edge());
        if let Some(prev) = self.used.insert((name.to_string(), head), line) {
            let end = if head { "head" } else { "tail" };
            return Err(err(line, format!("{end} end of edge `{name}` already used on line {prev}")));
        }
        Ok(if head { h } else { t })
    }

    fn ports(&mut self, toks: &[&str], line: usize) -> Result<Vec<Half>, OracleError> {
        toks.iter().map(|t| self.port(t, line)).collect()
    }
}

/// Parses the text form of a diagram and validates it.
pub fn parse_diagram(text: &str) -> Result<WebDiagram, OracleError> {
    let mut p = Parser { d: WebDiagram::new(), edges: HashMap::new(), used: HashMap::new() };
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut boundary: Vec<Half> = Vec::new();

    for (lno, raw) in text.lines().enumerate() {
        let line = lno + 1;
        let toks: Vec<&str> = raw.split('#').next().unwrap().split_whitespace().collect();
        let Some((&dir, rest)) = toks.split_first() else { continue };

        // Directives with a vertex id claim it here; `B` has none.
        if dir != "B" {
            let Some(&id) = rest.first() else {
                return Err(err(line, format!("`{dir}` needs a vertex id")));
            };
            if id.starts_with('+') || id.starts_with('-') {
                return Err(err(line, format!("vertex id `{id}` may not start with + or -")));
            }
            if let Some(prev) = ids.insert(id.to_string(), line) {
                return Err(err(line, format!("vertex id `{id}` already used on line {prev}")));
            }
        }

        let width = |tok: Option<&&str>, what: &str| -> Result<usize, OracleError> {
            let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
            match tok.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(err(line, format!("{what} `{tok}` must be a positive integer"))),
            }
        };

        let (kind, port_toks): (VertexKind, &[&str]) = match dir {
            "V" => {
                let kind = match rest.get(1) {
                    Some(&"sink") => VertexKind::Sink,
                    Some(&"source") => VertexKind::Source,
                    other => {
                        let got = other.map_or(String::from("nothing"), |t| format!("`{t}`"));
                        return Err(err(line, format!("expected `sink` or `source`, got {got}")));
                    }
                };
                (kind, &rest[2..])
            }
            "X" => (VertexKind::Crossing { over_first: true }, &rest[1..]),
            "K" => {
                let n = width(rest.get(1), "clasp width")?;
                (VertexKind::Clasp { n }, &rest[2..])
            }
            "D" => {
                let a = width(rest.get(1), "first cable width")?;
                let b = width(rest.get(2), "second cable width")?;
                (VertexKind::DoubleClasp { a, b }, &rest[3..])
            }
            "B" => {
                boundary.extend(p.ports(rest, line)?);
                continue;
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        };

        let rot = p.ports(port_toks, line)?;
        if rot.len() != kind.arity() {
            return Err(err(
                line,
                format!("vertex wants {} ports, got {}", kind.arity(), rot.len()),
            ));
        }
        p.d.add_vertex(kind, rot);
    }

    let mut dangling: Vec<String> = Vec::new();
    for (name, _) in &p.edges {
        for head in [true, false] {
            if !p.used.contains_key(&(name.clone(), head)) {
                let end = if head { "head" } else { "tail" };
                dangling.push(format!("edge `{name}` is missing its {end} end"));
            }
        }
    }
    if !dangling.is_empty() {
        dangling.sort();
        return Err(OracleError::Parse(dangling.join("; ")));
    }

    p.d.push_boundary(&boundary);
    p.d.validate()?;
    Ok(p.d)
}

// ----------------------------------------------------------------------
// Writing
// ----------------------------------------------------------------------

/// Renders a diagram in the text form. The output parses back to an
/// isomorphic diagram; crossings are rotated so the over strand comes first.
/// Edge names and vertex ids follow appearance order, so the output is a
/// fixed point of parse-then-write.
pub fn write_diagram(d: &WebDiagram) -> String {
    let mut rows: Vec<(String, Vec<Half>)> = Vec::new();
    for (seq, vid) in d.live_vertices().enumerate() {
        let rot = d.rotation(vid);
        let row = match d.kind(vid).unwrap() {
            VertexKind::Sink => (format!("V v{seq} sink"), rot.to_vec()),
            VertexKind::Source => (format!("V v{seq} source"), rot.to_vec()),
            VertexKind::Crossing { over_first } => {
                let r: Vec<Half> = if over_first {
                    rot.to_vec()
                } else {
                    rot.iter().cycle().skip(1).take(4).copied().collect()
                };
                (format!("X v{seq}"), r)
            }
            VertexKind::Clasp { n } => (format!("K v{seq} {n}"), rot.to_vec()),
            VertexKind::DoubleClasp { a, b } => (format!("D v{seq} {a} {b}"), rot.to_vec()),
        };
        rows.push(row);
    }
    if !d.boundary().is_empty() {
        rows.push(("B".to_string(), d.boundary().to_vec()));
    }

    let mut names: HashMap<usize, String> = HashMap::new();
    for (_, hs) in &rows {
        for &h in hs {
            let next = names.len();
            names.entry(h / 2).or_insert_with(|| format!("e{next}"));
        }
    }

    let mut out = String::new();
    for (prefix, hs) in rows {
        out.push_str(&prefix);
        for h in hs {
            out.push(' ');
            out.push(if is_head(h) { '+' } else { '-' });
            out.push_str(&names[&(h / 2)]);
        }
        out.push('\n');
    }
    out
}

// ----------------------------------------------------------------------

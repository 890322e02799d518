//! Text formats for trees, cycle statistics, expanded grids and matrices.
//!
//! Tree file:
//!
//! ```text
//! n <n>
//! root <x> <y>
//! <edge id>            (n^2 - 1 lines)
//! ```
//!
//! Expanded grid file:
//!
//! ```text
//! n <n>
//! dup <id> <base x> <base y> <slot>
//! xedge <endpoint> <endpoint>     endpoint = "h <x> <y>" | "d <id>"
//! ```
//!
//! Matrix file: a header `rows cols nnz` followed by one `row col` pair per
//! one, 0-based, column by column.

use std::fmt::Write as _;
use std::io::Write;

use gridcycle_core::expanded::{Duplicate, ExpandedGrid, XVertex};
use gridcycle_core::matroid::EchelonMatrix;
use gridcycle_core::{CycleStats, GridCoord, GridGraph, SpanningTree};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input, expected {0}")]
    Truncated(&'static str),
    #[error(transparent)]
    Grid(#[from] gridcycle_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| {
            (
                i + 1,
                l.split('#')
                    .next()
                    .unwrap_or("")
                    .split_whitespace()
                    .collect::<Vec<_>>(),
            )
        })
        .filter(|(_, w)| !w.is_empty())
}

fn num<T: std::str::FromStr>(line: usize, word: &str) -> Result<T, FormatError> {
    word.parse()
        .map_err(|_| syntax(line, format!("`{word}` is not a valid number")))
}

fn expect_keyword<'a>(
    item: Option<(usize, Vec<&'a str>)>,
    key: &'static str,
    arity: usize,
) -> Result<(usize, Vec<&'a str>), FormatError> {
    let (line, words) = item.ok_or(FormatError::Truncated(key))?;
    if words[0] != key || words.len() != arity + 1 {
        return Err(syntax(
            line,
            format!("expected `{key}` with {arity} value(s)"),
        ));
    }
    Ok((line, words))
}

fn header<'a>(
    it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<GridGraph, FormatError> {
    let (line, w) = expect_keyword(it.next(), "n", 1)?;
    Ok(GridGraph::from_signed(num(line, w[1])?)?)
}

pub fn write_tree(t: &SpanningTree) -> String {
    let mut s = String::new();
    let r = t.root();
    writeln!(s, "n {}", t.grid().n()).unwrap();
    writeln!(s, "root {} {}", r.x, r.y).unwrap();
    for id in t.edge_ids() {
        writeln!(s, "{id}").unwrap();
    }
    s
}

pub fn parse_tree(text: &str) -> Result<SpanningTree, FormatError> {
    let mut it = lines(text);
    let g = header(&mut it)?;
    let (line, w) = expect_keyword(it.next(), "root", 2)?;
    let root = GridCoord::new(num(line, w[1])?, num(line, w[2])?);
    let mut ids = Vec::with_capacity(g.vertex_count().saturating_sub(1));
    for (line, w) in it {
        if w.len() != 1 {
            return Err(syntax(line, "expected one edge id per line"));
        }
        let id: u32 = num(line, w[0])?;
        g.edge(id)?;
        ids.push(id);
    }
    Ok(SpanningTree::from_edges(g, &ids, root)?)
}

pub fn write_stats_csv<W: Write>(stats: &CycleStats, out: W) -> Result<(), FormatError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["edge_id", "length", "perimeter"])?;
    for r in &stats.records {
        w.serialize((r.edge_id, r.length, r.perimeter))?;
    }
    w.flush()?;
    Ok(())
}

fn write_endpoint(s: &mut String, v: XVertex) {
    match v {
        XVertex::Host(c) => write!(s, "h {} {}", c.x, c.y).unwrap(),
        XVertex::Dup(i) => write!(s, "d {i}").unwrap(),
    }
}

pub fn write_expanded(h: &ExpandedGrid) -> String {
    let mut s = String::new();
    writeln!(s, "n {}", h.host().n()).unwrap();
    for (i, d) in h.duplicates().iter().enumerate() {
        writeln!(s, "dup {i} {} {} {}", d.base.x, d.base.y, d.slot).unwrap();
    }
    for e in h.xedges() {
        s.push_str("xedge ");
        write_endpoint(&mut s, e.a);
        s.push(' ');
        write_endpoint(&mut s, e.b);
        s.push('\n');
    }
    s
}

fn parse_endpoint(line: usize, w: &[&str]) -> Result<(XVertex, usize), FormatError> {
    match w.first() {
        Some(&"h") if w.len() >= 3 => Ok((
            XVertex::Host(GridCoord::new(num(line, w[1])?, num(line, w[2])?)),
            3,
        )),
        Some(&"d") if w.len() >= 2 => Ok((XVertex::Dup(num(line, w[1])?), 2)),
        _ => Err(syntax(line, "endpoint must be `h <x> <y>` or `d <id>`")),
    }
}

/// Parses and validates an expanded grid. Duplicates must be numbered
/// `0, 1, 2, ...` in order of appearance.
pub fn parse_expanded(text: &str) -> Result<ExpandedGrid, FormatError> {
    let mut it = lines(text);
    let g = header(&mut it)?;
    let mut dups = Vec::new();
    let mut pairs = Vec::new();
    for (line, w) in it {
        match w[0] {
            "dup" => {
                if w.len() != 5 {
                    return Err(syntax(line, "expected `dup <id> <x> <y> <slot>`"));
                }
                let id: usize = num(line, w[1])?;
                if id != dups.len() {
                    return Err(syntax(line, format!("duplicate id {id} out of order")));
                }
                let base = GridCoord::new(num(line, w[2])?, num(line, w[3])?);
                dups.push(Duplicate {
                    base,
                    slot: num(line, w[4])?,
                });
            }
            "xedge" => {
                let (a, used) = parse_endpoint(line, &w[1..])?;
                let (b, used_b) = parse_endpoint(line, &w[1 + used..])?;
                if 1 + used + used_b != w.len() {
                    return Err(syntax(line, "trailing words after xedge endpoints"));
                }
                pairs.push((a, b));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    Ok(ExpandedGrid::new(g, dups, &pairs)?)
}

pub fn write_matrix<W: Write>(m: &EchelonMatrix, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{} {} {}", m.rows(), m.cols(), m.nnz())?;
    for (r, c) in m.entries() {
        writeln!(out, "{r} {c}")?;
    }
    Ok(())
}

/// Drawing of the tree: grid edges in light grey, tree edges in black.
pub fn tree_svg(t: &SpanningTree) -> String {
    let g = t.grid();
    let n = g.n();
    let unit = if n <= 64 {
        24.0
    } else {
        (1536.0 / f64::from(n)).max(1.0)
    };
    let size = unit * f64::from(n + 1);
    let at = |c: GridCoord| (unit * f64::from(c.x), size - unit * f64::from(c.y));
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for e in g.edges() {
        let ((x1, y1), (x2, y2)) = (at(e.a), at(e.b));
        let (stroke, width) = if t.contains_edge(e.id) {
            ("black", unit / 6.0)
        } else {
            ("#dddddd", unit / 24.0)
        };
        writeln!(
            s,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="{width}" stroke-linecap="round"/>"#
        )
        .unwrap();
    }
    let (rx, ry) = at(t.root());
    writeln!(
        s,
        r#"<circle cx="{rx}" cy="{ry}" r="{}" fill="red"/>"#,
        unit / 4.0
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

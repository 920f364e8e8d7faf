//! Text formats for instances and results.
//!
//! An instance file is line-oriented:
//!
//! ```text
//! c free-form comment
//! p eg <n> <m> <W>
//! o <v> <A|B>
//! e <u> <v> <w>
//! ```
//!
//! Exactly one `p` line comes before any `o`/`e` line, vertex ids are
//! one-based and contiguous, there are exactly `m` edge lines, and every
//! weight satisfies `|w| <= W`. Owner lines are optional (at most one per
//! vertex); vertices without one default to Alice, which is the
//! convention for reachability-only instances.
//!
//! Energy results are printed as `v <id> <value>` lines with `inf` for
//! infinite values; reachability matrices as an `r <n>` header followed
//! by `n` rows of `0`/`1` characters, where character `j` of row `i`
//! answers the query from vertex `i` to vertex `j` (one-based).

use crate::energy::EnergyFunction;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, GameGraph, Owner};
use crate::matrix::ReachMatrix;

struct Header {
    n: usize,
    m: usize,
    w_max: i64,
}

pub fn parse_instance(input: &str) -> Result<GameGraph> {
    let mut header: Option<Header> = None;
    let mut owners: Vec<Option<Owner>> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();

    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let tag = tok.next().expect("non-empty line has a first token");
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "duplicate problem line"));
                }
                let kind = tok
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "problem line needs a format tag"))?;
                if kind != "eg" {
                    return Err(Error::parse(lineno, format!("unknown format '{kind}'")));
                }
                let n = parse_num::<usize>(&mut tok, lineno, "vertex count")?;
                let m = parse_num::<usize>(&mut tok, lineno, "edge count")?;
                let w_max = parse_num::<i64>(&mut tok, lineno, "weight bound")?;
                expect_end(&mut tok, lineno)?;
                if n == 0 {
                    return Err(Error::parse(lineno, "instance needs at least one vertex"));
                }
                if w_max < 0 {
                    return Err(Error::parse(lineno, "weight bound must be nonnegative"));
                }
                if (n as i128) * (w_max as i128) > i64::MAX as i128 {
                    return Err(Error::parse(
                        lineno,
                        "n * W exceeds 64-bit range; instance not supported",
                    ));
                }
                owners = vec![None; n];
                header = Some(Header { n, m, w_max });
            }
            "o" => {
                let h = header
                    .as_ref()
                    .ok_or_else(|| Error::parse(lineno, "owner line before problem line"))?;
                let v = parse_vertex(&mut tok, lineno, h.n)?;
                let who = tok
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "owner line needs A or B"))?;
                let owner = match who {
                    "A" => Owner::Alice,
                    "B" => Owner::Bob,
                    other => {
                        return Err(Error::parse(lineno, format!("unknown owner '{other}'")))
                    }
                };
                expect_end(&mut tok, lineno)?;
                if owners[v].is_some() {
                    return Err(Error::parse(
                        lineno,
                        format!("duplicate owner line for vertex {}", v + 1),
                    ));
                }
                owners[v] = Some(owner);
            }
            "e" => {
                let h = header
                    .as_ref()
                    .ok_or_else(|| Error::parse(lineno, "edge line before problem line"))?;
                let u = parse_vertex(&mut tok, lineno, h.n)?;
                let v = parse_vertex(&mut tok, lineno, h.n)?;
                let w = parse_num::<i64>(&mut tok, lineno, "edge weight")?;
                expect_end(&mut tok, lineno)?;
                if w.abs() > h.w_max {
                    return Err(Error::parse(
                        lineno,
                        format!("edge weight {} exceeds bound {}", w, h.w_max),
                    ));
                }
                edges.push(Edge::new(u, v, w));
            }
            other => {
                return Err(Error::parse(
                    lineno,
                    format!("unknown line tag '{other}'"),
                ));
            }
        }
    }

    let h = header.ok_or_else(|| Error::parse(input.lines().count(), "missing problem line"))?;
    if edges.len() != h.m {
        return Err(Error::parse(
            input.lines().count(),
            format!("expected {} edge lines, found {}", h.m, edges.len()),
        ));
    }
    let owners: Vec<Owner> = owners
        .into_iter()
        .map(|o| o.unwrap_or(Owner::Alice))
        .collect();
    GameGraph::new(Digraph::new(h.n, edges)?, owners, h.w_max)
}

fn parse_num<T: std::str::FromStr>(
    tok: &mut std::str::SplitWhitespace<'_>,
    lineno: usize,
    what: &str,
) -> Result<T> {
    let s = tok
        .next()
        .ok_or_else(|| Error::parse(lineno, format!("missing {what}")))?;
    s.parse::<T>()
        .map_err(|_| Error::parse(lineno, format!("invalid {what} '{s}'")))
}

fn parse_vertex(
    tok: &mut std::str::SplitWhitespace<'_>,
    lineno: usize,
    n: usize,
) -> Result<usize> {
    let id = parse_num::<usize>(tok, lineno, "vertex id")?;
    if id == 0 || id > n {
        return Err(Error::parse(
            lineno,
            format!("vertex id {id} outside 1..={n}"),
        ));
    }
    Ok(id - 1)
}

fn expect_end(tok: &mut std::str::SplitWhitespace<'_>, lineno: usize) -> Result<()> {
    match tok.next() {
        None => Ok(()),
        Some(extra) => Err(Error::parse(
            lineno,
            format!("unexpected trailing token '{extra}'"),
        )),
    }
}

/// Canonical text form: problem line, then owner lines in vertex order,
/// then edge lines in stored order. `parse_instance` inverts this exactly.
pub fn serialize_instance(g: &GameGraph) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "p eg {} {} {}\n",
        g.n(),
        g.edges().len(),
        g.max_weight()
    ));
    for v in 0..g.n() {
        s.push_str(&format!("o {} {}\n", v + 1, g.owner(v).letter()));
    }
    for e in g.edges() {
        s.push_str(&format!("e {} {} {}\n", e.from + 1, e.to + 1, e.weight));
    }
    s
}

/// One `v <id> <value>` line per vertex, ids ascending.
pub fn write_energies(e: &EnergyFunction) -> String {
    let mut s = String::new();
    for (v, val) in e.iter().enumerate() {
        s.push_str(&format!("v {} {}\n", v + 1, val));
    }
    s
}

/// `r <n>` header plus one row of `0`/`1` per vertex.
pub fn write_reach_matrix(m: &ReachMatrix) -> String {
    let n = m.n();
    let mut s = format!("r {n}\n");
    for u in 0..n {
        for v in 0..n {
            s.push(if m.get(u, v) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

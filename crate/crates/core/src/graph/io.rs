//! Text formats: annotated edge lists, graph6, and vertex colorings.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// `# expect: <pattern-id> <count>` annotation carried by fixture files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub pattern: String,
    pub count: usize,
    pub line: usize,
}

/// A parsed edge-list file.
#[derive(Debug, Clone)]
pub struct EdgeListFile {
    pub graph: Graph,
    /// Original vertex labels when the file used non-numeric names; vertex
    /// `i` is `labels[i]`.
    pub labels: Option<Vec<String>>,
    pub expectations: Vec<Expectation>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Everything after `#` is a comment. Vertices are 0-based integers; if any
/// endpoint token is not an integer, tokens are treated as labels and
/// numbered in order of first appearance.
pub fn parse_edge_list(text: &str) -> Result<EdgeListFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<(usize, String, String)> = Vec::new();
    let mut expectations = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let (body, comment) = match line.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (line, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.trim().strip_prefix("expect:") {
                let mut it = rest.split_whitespace();
                let (Some(pattern), Some(count), None) = (it.next(), it.next(), it.next()) else {
                    return Err(parse_err(lineno, "expected `# expect: <pattern-id> <count>`"));
                };
                let count = count.parse().map_err(|_| parse_err(lineno, format!("bad match count `{count}`")))?;
                expectations.push(Expectation { pattern: pattern.to_string(), count, line: lineno });
            }
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 2 {
            return Err(parse_err(lineno, format!("expected two fields, found {}", toks.len())));
        }
        if header.is_none() {
            let n = toks[0].parse().map_err(|_| parse_err(lineno, format!("bad vertex count `{}`", toks[0])))?;
            let m = toks[1].parse().map_err(|_| parse_err(lineno, format!("bad edge count `{}`", toks[1])))?;
            header = Some((n, m));
        } else {
            raw.push((lineno, toks[0].to_string(), toks[1].to_string()));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    if raw.len() != m {
        let line = raw.last().map_or(1, |r| r.0);
        return Err(parse_err(line, format!("header announces {m} edges but {} were listed", raw.len())));
    }
    let numeric = raw.iter().all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
    let mut pairs = Vec::with_capacity(m);
    let labels = if numeric {
        for (lineno, a, b) in &raw {
            let (u, v): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
            if u >= n || v >= n {
                return Err(parse_err(*lineno, format!("vertex {} out of range 0..{n}", u.max(v))));
            }
            if u == v {
                return Err(parse_err(*lineno, format!("self-loop at vertex {u}")));
            }
            pairs.push((u, v));
        }
        None
    } else {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut names = Vec::new();
        for (lineno, a, b) in &raw {
            let mut id = |s: &String| -> Result<usize> {
                if let Some(&i) = index.get(s) {
                    return Ok(i);
                }
                if names.len() == n {
                    return Err(parse_err(*lineno, format!("more than {n} distinct vertex labels")));
                }
                index.insert(s.clone(), names.len());
                names.push(s.clone());
                Ok(names.len() - 1)
            };
            let (u, v) = (id(a)?, id(b)?);
            if u == v {
                return Err(parse_err(*lineno, format!("self-loop at vertex `{a}`")));
            }
            pairs.push((u, v));
        }
        while names.len() < n {
            names.push(format!("#{}", names.len()));
        }
        Some(names)
    };
    Ok(EdgeListFile { graph: Graph::from_valid_pairs(n, pairs), labels, expectations })
}

/// Writes the edge-list format with edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn g6_size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]
    } else {
        let mut v = vec![126, 126];
        v.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        v
    }
}

/// Encodes `g` in graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = g6_size_bytes(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("invalid graph6 byte {b}")));
    }
    let take = |from: usize, count: usize| -> Result<usize> {
        let chunk = bytes.get(from..from + count).ok_or_else(|| parse_err(1, "truncated graph6 size field"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err(1, "empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => (take(2, 6)?, 8),
        Some(126) => (take(1, 3)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() != pos + needed {
        return Err(parse_err(
            1,
            format!("graph6 body has {} bytes, expected {needed} for n = {n}", bytes.len() - pos.min(bytes.len())),
        ));
    }
    let mut pairs = Vec::new();
    let mut bit = 0;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit == 0 {
                current = bytes[pos] - 63;
                pos += 1;
            }
            if current >> (5 - bit) & 1 == 1 {
                pairs.push((i, j));
            }
            bit = (bit + 1) % 6;
        }
    }
    Ok(Graph::from_valid_pairs(n, pairs))
}

/// Reads a graph from file contents, choosing graph6 when the name ends in
/// `.g6` or the text carries the graph6 header, and the edge-list format
/// otherwise.
pub fn parse_graph_auto(name: &str, text: &str) -> Result<EdgeListFile> {
    if name.ends_with(".g6") || text.trim_start().starts_with(">>graph6<<") {
        let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        Ok(EdgeListFile { graph: from_graph6(first)?, labels: None, expectations: Vec::new() })
    } else {
        parse_edge_list(text)
    }
}

/// Parses the coloring format: one line `v c` per vertex, `#` comments.
/// Returns the color of each vertex; every vertex of `0..n` must appear
/// exactly once and colors are positive.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<u32>> {
    let mut colors = vec![0u32; n];
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let body = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 2 {
            return Err(parse_err(lineno, format!("expected `v c`, found {} fields", toks.len())));
        }
        let v: usize = toks[0].parse().map_err(|_| parse_err(lineno, format!("bad vertex `{}`", toks[0])))?;
        let c: u32 = toks[1].parse().map_err(|_| parse_err(lineno, format!("bad color `{}`", toks[1])))?;
        if v >= n {
            return Err(parse_err(lineno, format!("vertex {v} out of range 0..{n}")));
        }
        if c == 0 {
            return Err(parse_err(lineno, "colors start at 1"));
        }
        if colors[v] != 0 {
            return Err(parse_err(lineno, format!("vertex {v} colored twice")));
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(Error::InvalidParameter(format!("coloring is partial: vertex {v} has no color")));
    }
    Ok(colors)
}

pub fn write_coloring(colors: &[u32]) -> String {
    colors.iter().enumerate().fold(String::new(), |mut out, (v, c)| {
        let _ = writeln!(out, "{v} {c}");
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments_and_expectations() {
        let text = "# a path\n3 2\n0 1 # first\n1 2\n# expect: L2.4-i 2\n";
        let f = parse_edge_list(text).unwrap();
        assert_eq!(f.graph, path(3).unwrap());
        assert_eq!(f.expectations, vec![Expectation { pattern: "L2.4-i".into(), count: 2, line: 5 }]);
        assert!(f.labels.is_none());
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("3 1\n0 0\n").unwrap_err(), parse_err(2, "self-loop at vertex 0"));
        assert!(matches!(parse_edge_list("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn labelled_edge_list() {
        let f = parse_edge_list("3 2\na b\nb c\n").unwrap();
        assert_eq!(f.graph, path(3).unwrap());
        assert_eq!(f.labels.unwrap(), vec!["a", "b", "c"]);
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&path(3).unwrap()), "Bg");
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), complete(4).unwrap());
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
        assert!(from_graph6("C~~").is_err());
    }

    #[test]
    fn graph6_long_form() {
        let g = cycle(70).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn colorings() {
        assert_eq!(parse_coloring("0 1\n1 2\n", 2).unwrap(), vec![1, 2]);
        assert!(parse_coloring("0 1\n", 2).is_err());
        assert!(parse_coloring("0 1\n0 2\n", 1).is_err());
        assert!(parse_coloring("0 0\n", 1).is_err());
        assert_eq!(write_coloring(&[3, 1]), "0 3\n1 1\n");
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 1usize..80, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_graph(n, p, seed).unwrap();
            prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
            prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap().graph, &g);
        }
    }
}

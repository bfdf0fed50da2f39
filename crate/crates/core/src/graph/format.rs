//! Text formats: graph6 (short form only) and a plain adjacency-list format.
//!
//! The adjacency-list format is a header line `n m` followed by `m` lines
//! `u v` with `u < v`, sorted lexicographically, 0-based.

use std::fmt::Write as _;

use super::{Graph, GraphError, MAX_ORDER};

/// Largest order encodable in the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

fn g6_err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 string (no header, no newline).
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(g6_err(0, "empty input"));
    };
    if first == b'~' {
        return Err(g6_err(0, "long-form graph6 (n > 62) is not supported"));
    }
    if !(63..=125).contains(&first) {
        return Err(g6_err(0, format!("invalid order byte 0x{first:02x}")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(g6_err(0, "order 0 is not a graph here"));
    }
    let pairs = super::pair_count(n);
    let expected = pairs.div_ceil(6);
    let body = &bytes[1..];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(1 + i, format!("byte 0x{b:02x} outside 63..=126")));
        }
    }
    if body.len() < expected {
        return Err(g6_err(
            bytes.len(),
            format!("truncated: expected {expected} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > expected {
        return Err(g6_err(1 + expected, "trailing bytes after graph data"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(g6_err(expected, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 string. Orders above 62 need the adjacency-list format.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::OrderOutOfRange(n));
    }
    let pairs = super::pair_count(n);
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Renders an edge list in the adjacency-list format.
pub(crate) fn write_adjacency_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", n, edges.len());
    for &(u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn to_adjacency_list(g: &Graph) -> String {
    write_adjacency_list(g.order(), &g.edges())
}

fn adj_err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::AdjacencyList {
        line,
        reason: reason.into(),
    }
}

/// Parses raw `(n, edges)` blocks from adjacency-list text. Blank lines between
/// blocks are ignored; line numbers in errors are 1-based.
pub(crate) fn parse_adjacency_blocks(
    text: &str,
) -> Vec<Result<(usize, Vec<(usize, usize)>), GraphError>> {
    let mut out = Vec::new();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    while let Some((lineno, header)) = lines.next() {
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parsed = match nums.as_slice() {
            [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
            _ => None,
        };
        let Some((n, m)) = parsed else {
            out.push(Err(adj_err(lineno, "expected header `n m`")));
            continue;
        };
        let mut edges = Vec::with_capacity(m);
        let mut failed = None;
        for _ in 0..m {
            let Some((l, text)) = lines.next() else {
                failed = Some(adj_err(lineno, format!("expected {m} edge lines")));
                break;
            };
            let parts: Vec<&str> = text.split_whitespace().collect();
            let pair = match parts.as_slice() {
                [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
                _ => None,
            };
            match pair {
                Some((u, v)) if u < v && v < n => {
                    if edges.last().is_some_and(|&last| last >= (u, v)) {
                        failed = Some(adj_err(l, "edges must be strictly increasing"));
                        break;
                    }
                    edges.push((u, v));
                }
                Some(_) => {
                    failed = Some(adj_err(l, format!("edge must satisfy u < v < {n}")));
                    break;
                }
                None => {
                    failed = Some(adj_err(l, "expected edge line `u v`"));
                    break;
                }
            }
        }
        out.push(match failed {
            Some(e) => Err(e),
            None => Ok((n, edges)),
        });
    }
    out
}

/// Parses every graph in adjacency-list text.
pub fn parse_adjacency_lists(text: &str) -> Vec<Result<Graph, GraphError>> {
    parse_adjacency_blocks(text)
        .into_iter()
        .map(|block| {
            let (n, edges) = block?;
            if n == 0 || n > MAX_ORDER {
                return Err(GraphError::OrderOutOfRange(n));
            }
            Graph::from_edges(n, edges)
        })
        .collect()
}

/// Parses exactly one graph in adjacency-list text.
pub fn from_adjacency_list(text: &str) -> Result<Graph, GraphError> {
    let mut all = parse_adjacency_lists(text);
    match all.len() {
        1 => all.pop().expect("one element"),
        0 => Err(adj_err(1, "no graph found")),
        _ => Err(adj_err(1, "more than one graph")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn decodes_reference_strings() {
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1).unwrap());
        // P_4 = 0-1-2-3: pairs (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) -> 101001
        assert_eq!(to_graph6(&Graph::path(4).unwrap()).unwrap(), "Ch");
    }

    #[test]
    fn rejects_malformed() {
        let offset = |s: &str| match from_graph6(s) {
            Err(GraphError::Graph6 { offset, .. }) => offset,
            other => panic!("expected error for {s:?}, got {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset("B"), 1);
        assert_eq!(offset("Bww"), 2);
        assert_eq!(offset("B\x20"), 1);
        assert_eq!(offset("~?@"), 0);
        // "Bx": 120-63 = 57 = 111001, padding bits set
        assert_eq!(offset("Bx"), 1);
    }

    #[test]
    fn random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a09);
        for _ in 0..10_000 {
            let n = rng.gen_range(1..=12);
            let mut g = Graph::empty(n).unwrap();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.4) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let s = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&s).unwrap(), g);
            assert_eq!(to_graph6(&from_graph6(&s).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn graph6_order_cap() {
        let g = Graph::empty(62).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        assert!(to_graph6(&Graph::empty(63).unwrap()).is_err());
    }

    #[test]
    fn adjacency_list_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = to_adjacency_list(&g);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(from_adjacency_list(&text).unwrap(), g);
    }

    #[test]
    fn adjacency_list_errors() {
        let parsed = parse_adjacency_lists("3 2\n0 1\n1 2\n\n2 1\n1 0\n3 1\n0 1\n");
        assert_eq!(parsed.len(), 3);
        assert!(parsed[0].is_ok());
        assert!(matches!(
            parsed[1],
            Err(GraphError::AdjacencyList { line: 6, .. })
        ));
        assert!(parsed[2].is_ok());
        assert!(from_adjacency_list("4 1\n0 x\n").is_err());
        assert!(from_adjacency_list("3 2\n1 2\n0 1\n").is_err());
    }
}

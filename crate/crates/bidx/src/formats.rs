//! Text formats: the edge-list format ("n=<int>" header line, then one
//! "u v" pair per line) and graph6 files with one graph per line.

use anyhow::{anyhow, bail, Context, Result};
use bidx_core::{graph6, Graph};

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, header) = lines.next().ok_or_else(|| anyhow!("empty input"))?;
    let n: usize = header
        .strip_prefix("n=")
        .ok_or_else(|| anyhow!("line {lineno}: expected \"n=<int>\" header, got {header:?}"))?
        .trim()
        .parse()
        .with_context(|| format!("line {lineno}: invalid vertex count"))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let (u, v) = (it.next(), it.next());
        let (Some(u), Some(v), None) = (u, v, it.next()) else {
            bail!("line {lineno}: expected \"u v\", got {line:?}");
        };
        let u: usize = u
            .parse()
            .with_context(|| format!("line {lineno}: invalid vertex label"))?;
        let v: usize = v
            .parse()
            .with_context(|| format!("line {lineno}: invalid vertex label"))?;
        edges.push((u, v));
    }
    Graph::new(n, &edges).map_err(|e| anyhow!("invalid edge list: {e}"))
}

/// Writes the edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses graph6 text, one graph per line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(
            graph6::decode(line)
                .map_err(|e| anyhow!("line {}: {e}", i + 1))?,
        );
    }
    Ok(out)
}

/// Writes graph6 text, one graph per line.
pub fn write_graph6_lines(graphs: &[Graph]) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&graph6::encode(g));
        out.push('\n');
    }
    out
}

/// Reads graphs from file contents, sniffing the format: an "n=" header
/// marks the edge-list format (a single graph), anything else graph6 lines.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("n=") => Ok(vec![parse_edge_list(text)?]),
        Some(_) => parse_graph6_lines(text),
        None => bail!("empty input"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "n=4\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_diagnostics_carry_line_numbers() {
        let err = parse_edge_list("n=3\n0 1\n0 1 2\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = parse_edge_list("3\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("n=<int>"), "{err}");
    }

    #[test]
    fn sniffs_both_formats() {
        let from_g6 = parse_graphs("Bw\nA_\n").unwrap();
        assert_eq!(from_g6.len(), 2);
        assert_eq!(from_g6[0].m(), 3);
        let from_el = parse_graphs("n=2\n0 1\n").unwrap();
        assert_eq!(from_el.len(), 1);
        assert_eq!(from_el[0].m(), 1);
    }
}

//! graph6 encoding and a human-readable adjacency-list format.
//!
//! graph6 stores the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), …`), six bits per printable byte, after a
//! vertex-count header.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("graph6 declares {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjacencyTextError {
    #[error("expected `n=<count>; edges: u-v …`")]
    Syntax,
    #[error("bad edge token `{0}`")]
    BadEdge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 string. A trailing newline is tolerated; an optional
/// `>>graph6<<` prefix is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    let (n, body) = match bytes {
        [] => return Err(Graph6Error::MalformedHeader),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Graph6Error::MalformedHeader);
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            if n < 258048 {
                return Err(Graph6Error::MalformedHeader);
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader);
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            if n < 63 {
                return Err(Graph6Error::MalformedHeader);
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = body[bit / 6] - 63;
        if last & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

/// graph6 encoding without trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Renders `n=<count>; edges: u-v …`.
pub fn to_adjacency_text(g: &Graph) -> String {
    let mut s = format!("n={}; edges:", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}

/// Parses the format produced by [`to_adjacency_text`].
pub fn parse_adjacency_text(text: &str) -> Result<Graph, AdjacencyTextError> {
    let text = text.trim();
    let rest = text.strip_prefix("n=").ok_or(AdjacencyTextError::Syntax)?;
    let (count, rest) = rest.split_once(';').ok_or(AdjacencyTextError::Syntax)?;
    let n: usize = count.trim().parse().map_err(|_| AdjacencyTextError::Syntax)?;
    let edges = rest
        .trim()
        .strip_prefix("edges:")
        .ok_or(AdjacencyTextError::Syntax)?;
    let mut pairs = Vec::new();
    for tok in edges.split_whitespace() {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| AdjacencyTextError::BadEdge(tok.to_string()))?;
        let u = a
            .parse()
            .map_err(|_| AdjacencyTextError::BadEdge(tok.to_string()))?;
        let v = b
            .parse()
            .map_err(|_| AdjacencyTextError::BadEdge(tok.to_string()))?;
        pairs.push((u, v));
    }
    Ok(Graph::from_edges(n, pairs)?)
}

/// Accepts either graph6 or the adjacency-list text.
pub fn parse_graph(text: &str) -> Result<Graph, Graph6Error> {
    let t = text.trim();
    if t.starts_with("n=") {
        parse_adjacency_text(t).map_err(|_| Graph6Error::MalformedHeader)
    } else {
        parse_graph6(t)
    }
}

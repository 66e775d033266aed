//! graph6 text format: `N(n)` followed by the upper triangle in column order,
//! six bits per printable byte (value + 63).

use super::{Edge, Graph, GraphError};

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
}

/// Encodes without a trailing newline.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let mut start = 0;
    let bytes = text.as_bytes();
    if bytes.starts_with(b">>graph6<<") {
        start = 10;
    }
    let bytes = &bytes[..bytes.len()
        - bytes
            .iter()
            .rev()
            .take_while(|b| b.is_ascii_whitespace())
            .count()];
    let sextet = |pos: usize| -> Result<usize, GraphError> {
        match bytes.get(pos) {
            None => Err(err(pos, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(err(pos, format!("byte 0x{b:02x} outside 63..=126"))),
        }
    };
    let mut pos = start;
    let n = if bytes.get(pos) == Some(&b'~') {
        if bytes.get(pos + 1) == Some(&b'~') {
            let mut n = 0;
            for k in 0..6 {
                n = n << 6 | sextet(pos + 2 + k)?;
            }
            pos += 8;
            n
        } else {
            let mut n = 0;
            for k in 0..3 {
                n = n << 6 | sextet(pos + 1 + k)?;
            }
            pos += 4;
            n
        }
    } else {
        let n = sextet(pos)?;
        pos += 1;
        n
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() < pos + need {
        return Err(err(
            bytes.len(),
            format!("expected {need} data bytes for n = {n}"),
        ));
    }
    if bytes.len() > pos + need {
        return Err(err(pos + need, "trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0, 1);
    for k in 0..need {
        let word = sextet(pos + k)?;
        for b in (0..6).rev() {
            if j >= n {
                if word >> b & 1 == 1 {
                    return Err(err(pos + k, "nonzero padding bits"));
                }
                continue;
            }
            if word >> b & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::from_valid_edges(n, edges))
}

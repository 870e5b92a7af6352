//! graph6 encoding (as produced by nauty's `geng`), restricted to n <= 64.

use super::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 record. A trailing newline and the optional
/// `>>graph6<<` header are stripped; byte offsets in errors refer to the
/// record after header removal.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty record"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, format!("byte {:#04x} outside 63..=126", bytes[pos])));
    }

    let (n, body_start) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated length header"));
        }
        if bytes[1] == 126 {
            return Err(err(1, format!("vertex count exceeds {MAX_VERTICES}")));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n == 0 {
        return Err(err(0, "record must have at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(err(0, format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < nbytes {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if body.len() > nbytes {
        return Err(err(body_start + nbytes, "trailing garbage after record"));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for pad in nbits..nbytes * 6 {
        if bit(pad) {
            return Err(err(body_start + nbytes - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

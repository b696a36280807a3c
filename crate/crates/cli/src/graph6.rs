//! Short-form graph6 (n <= 62).

use wiener_core::Graph;

use crate::error::{CliError, CliResult};

pub const GRAPH6_LIMIT: usize = 62;
const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Graph6 { line: 0, msg: msg.into() }
}

pub fn encode(g: &Graph) -> CliResult<String> {
    let n = g.order();
    if n > GRAPH6_LIMIT {
        return Err(bad(format!("order {n} needs the long form")));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let (mut acc, mut k) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(line: &str) -> CliResult<Graph> {
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some((i, &c)) = bytes.iter().enumerate().find(|(_, &c)| !(63..=126).contains(&c)) {
        return Err(bad(format!("byte {c:#04x} at offset {i} outside 63..126")));
    }
    let (&size, body) = bytes.split_first().ok_or_else(|| bad("empty line"))?;
    if size == 126 {
        return Err(bad("long-form size header is not supported"));
    }
    let n = (size - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() != need {
        return Err(bad(format!("order {n} needs {need} data bytes, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let pad = need * 6 - pairs;
    if pad > 0 && (body[need - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(bad("padding bits set"));
    }
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
    Ok(g)
}

/// Decodes every non-blank line, tagging errors with 1-based line numbers.
pub fn decode_lines(text: &str) -> CliResult<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode(l.trim()).map_err(|e| match e {
                CliError::Graph6 { msg, .. } => CliError::Graph6 { line: i + 1, msg },
                e => e,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(encode(&Graph::new(1)).unwrap(), "@");
        assert_eq!(encode(&Graph::new(0)).unwrap(), "?");
        // Standard nauty spellings.
        assert_eq!(encode(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(encode(&Graph::cycle(5)).unwrap(), "Dhc");
        assert_eq!(decode("A_").unwrap(), Graph::complete(2));
        assert_eq!(decode(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("A").is_err());
        assert!(decode("A_?").is_err());
        assert!(decode("A`").is_err());
        assert!(decode("~??~").is_err());
        assert!(decode("A\u{7f}").is_err());
        assert!(decode("A ").is_err());
        let e = decode_lines("A_\n\nBw\nA`\n").unwrap_err();
        assert!(matches!(e, CliError::Graph6 { line: 4, .. }));
    }
}

//! Reader for the graph6 text format.
//!
//! A graph on `n` vertices is written as `N(n)` followed by the upper
//! triangle of its adjacency matrix, column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte with 63
//! added to each byte.

use cage_spectra::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed vertex-count header")]
    Header,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    Padding,
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Graph6Error> },
}

fn sixbits(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Decodes `N(n)`: one byte for `n <= 62`, `~` plus three bytes up to
/// `2^18 - 1`, `~~` plus six bytes beyond.
fn parse_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != b'~' {
        return Ok((usize::from(sixbits(0, first)?), 1));
    }
    let (start, width) = if bytes.get(1) == Some(&b'~') { (2, 6) } else { (1, 3) };
    let digits = bytes.get(start..start + width).ok_or(Graph6Error::Header)?;
    let mut n = 0usize;
    for (i, &b) in digits.iter().enumerate() {
        n = (n << 6) | usize::from(sixbits(start + i, b)?);
    }
    let smallest = if width == 3 { 63 } else { 1 << 18 };
    if n < smallest {
        return Err(Graph6Error::Header);
    }
    Ok((n, start + width))
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (n, header_len) = parse_header(bytes)?;
    let data = &bytes[header_len..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::Length { n, expected, found: data.len() });
    }
    let values = data
        .iter()
        .enumerate()
        .map(|(i, &b)| sixbits(header_len + i, b))
        .collect::<Result<Vec<u8>, _>>()?;
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 encodes a simple graph"))
}

/// Parses every non-empty line, skipping an optional `>>graph6<<` prefix.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let l = l.trim();
            let l = l.strip_prefix(">>graph6<<").unwrap_or(l);
            parse_graph6(l).map_err(|e| Graph6Error::Line { line: i + 1, source: Box::new(e) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let star = parse_graph6("D?{").unwrap();
        assert_eq!(star.order(), 5);
        assert_eq!(star.degree(4), 4);
        assert_eq!(star.edge_count(), 4);

        let g = parse_graph6("DQc").unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, [(0, 2), (0, 4), (1, 3), (3, 4)]);

        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn long_header() {
        // 63 vertices need the four-byte header ~??~.
        let mut s = String::from("~??~");
        s.push_str(&"?".repeat(63 * 62 / 2 / 6 + 1));
        assert_eq!(parse_graph6(&s).unwrap().order(), 63);
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::Header));
        // A long header may not encode a count that fits in one byte.
        assert_eq!(parse_graph6("~??A"), Err(Graph6Error::Header));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6("D?"), Err(Graph6Error::Length { n: 5, expected: 2, found: 1 })));
        assert!(matches!(parse_graph6("D? "), Err(Graph6Error::InvalidByte { offset: 2, byte: b' ' })));
        // "D?|" sets a padding bit after the ten data bits.
        assert_eq!(parse_graph6("D?|"), Err(Graph6Error::Padding));
    }

    #[test]
    fn file_with_header_and_blank_lines() {
        let gs = parse_graph6_file(">>graph6<<DQc\n\nD?{\n").unwrap();
        assert_eq!(gs.len(), 2);
        let err = parse_graph6_file("DQc\nD?").unwrap_err();
        assert!(matches!(err, Graph6Error::Line { line: 2, .. }));
    }
}

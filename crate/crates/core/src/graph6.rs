//! graph6 encoding and decoding.
//!
//! Only orders up to 64 are representable by [`Graph`]; the 4-byte size
//! field is still decoded so that oversize inputs get a precise error.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn size_field(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` as a graph6 string without header or newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    size_field(n, &mut out);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    out
}

fn sextet(byte: u8, pos: usize) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Error::Graph6(format!("byte {byte:#04x} at offset {pos} outside 63..=126")))
    }
}

/// Decodes a single graph6 record. An optional `>>graph6<<` header and one
/// trailing newline are accepted; anything else malformed is rejected.
pub fn decode(input: &[u8]) -> Result<Graph> {
    let mut data = input.strip_prefix(HEADER.as_bytes()).unwrap_or(input);
    data = data.strip_suffix(b"\n").unwrap_or(data);
    data = data.strip_suffix(b"\r").unwrap_or(data);
    let (&first, _) = data.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    let (n, body) = if first == b'~' {
        if data.get(1) == Some(&b'~') {
            return Err(Error::Graph6("orders above 258047 are not supported".into()));
        }
        if data.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for (k, &b) in data[1..4].iter().enumerate() {
            n = (n << 6) | sextet(b, k + 1)? as usize;
        }
        if n < 63 {
            return Err(Error::Graph6(format!("non-canonical long size field for order {n}")));
        }
        (n, &data[4..])
    } else {
        (sextet(first, 0)? as usize, &data[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let offset = data.len() - body.len();
    let mut values = Vec::with_capacity(expected);
    for (k, &b) in body.iter().enumerate() {
        values.push(sextet(b, offset + k)?);
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if values[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(&rows)
}

pub fn decode_str(input: &str) -> Result<Graph> {
    decode(input.as_bytes())
}

/// Decodes every non-blank line of `text`.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty())
        .map(decode_str)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::complete(5).unwrap()), "D~{");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::path(3).unwrap()), "Bg");
        assert_eq!(encode(&Graph::cycle(5).unwrap()), "Dhc");
    }

    #[test]
    fn long_size_field() {
        let g = Graph::complete(63).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode_str(&s).unwrap(), g);
        let h = Graph::path(64).unwrap();
        assert_eq!(decode_str(&encode(&h)).unwrap(), h);
    }

    #[test]
    fn header_and_newline() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(decode_str(">>graph6<<D~{\n").unwrap(), k5);
        assert_eq!(decode_str("D~{\r\n").unwrap(), k5);
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode_str("").is_err());
        assert!(decode_str("D~").is_err());
        assert!(decode_str("D~{{").is_err());
        assert!(decode_str("D~\x7f").is_err());
        assert!(decode_str("Bh").is_err()); // padding bit set
        assert!(decode_str("~?@?").is_err()); // order 64 via long form needs data
        assert!(decode_str("~??A").is_err()); // non-canonical long form
        assert!(matches!(decode_str("~?@@"), Err(Error::Capacity(65))));
        assert!(decode_str("~~").is_err());
    }
}

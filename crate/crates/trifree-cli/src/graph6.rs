//! The nauty text formats: graph6 for undirected graphs and digraph6 for
//! digraphs. One graph per line, printable ASCII, byte-exact round trips.

use thiserror::Error;
use trifree_core::{Digraph, UndirectedGraph, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("empty line")]
    Empty,
    #[error("malformed length field")]
    BadLength,
    #[error("vertex count {0} exceeds the toolkit cap of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("character {0:#x} out of the graph6 range at byte {1}")]
    BadCharacter(u8, usize),
    #[error("body has {got} bytes, expected {expected}")]
    WrongBodyLength { got: usize, expected: usize },
    #[error("padding bits beyond the matrix are not zero")]
    TrailingBits,
    #[error("digraph6 line must start with '&'")]
    MissingDirectedHeader,
    #[error("diagonal (self-loop) bit set at vertex {0}")]
    SelfLoop(usize),
}

/// Encode the size field N(n).
fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        // 63 <= n <= 258047: '~' then 18 bits in three 6-bit chunks
        out.push('~');
        out.push(((n >> 12 & 63) as u8 + 63) as char);
        out.push(((n >> 6 & 63) as u8 + 63) as char);
        out.push(((n & 63) as u8 + 63) as char);
    }
}

/// Decode the size field; returns (n, bytes consumed).
fn read_size(bytes: &[u8]) -> Result<(usize, usize), CodecError> {
    let &first = bytes.first().ok_or(CodecError::Empty)?;
    if first == b'~' {
        if bytes.len() < 4 {
            return Err(CodecError::BadLength);
        }
        if bytes[1] == b'~' {
            // the 36-bit form exists in the format, but lies far beyond the cap
            return Err(CodecError::BadLength);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(CodecError::BadCharacter(b, i + 1));
            }
            n = n << 6 | (b - 63) as usize;
        }
        Ok((n, 4))
    } else {
        if !(63..=126).contains(&first) {
            return Err(CodecError::BadCharacter(first, 0));
        }
        Ok(((first - 63) as usize, 1))
    }
}

fn push_bits(out: &mut String, bits: &[bool]) {
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - i);
            }
        }
        out.push((value + 63) as char);
    }
}

fn read_bits(bytes: &[u8], offset: usize, count: usize) -> Result<Vec<bool>, CodecError> {
    let expected = count.div_ceil(6);
    let body = &bytes[offset..];
    if body.len() != expected {
        return Err(CodecError::WrongBodyLength {
            got: body.len(),
            expected,
        });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(CodecError::BadCharacter(b, offset + i));
        }
        let v = b - 63;
        for j in (0..6).rev() {
            bits.push(v >> j & 1 == 1);
        }
    }
    if bits[count..].iter().any(|&b| b) {
        return Err(CodecError::TrailingBits);
    }
    bits.truncate(count);
    Ok(bits)
}

/// graph6: N(n) followed by the upper triangle column-wise,
/// `x(0,1) x(0,2) x(1,2) x(0,3) ...`
pub fn encode_graph6(g: &UndirectedGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    push_bits(&mut out, &bits);
    out
}

pub fn decode_graph6(line: &str) -> Result<UndirectedGraph, CodecError> {
    let bytes = line.as_bytes();
    let (n, offset) = read_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(CodecError::TooLarge(n));
    }
    let bits = read_bits(bytes, offset, n * n.saturating_sub(1) / 2)?;
    let mut g = UndirectedGraph::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// digraph6: '&', N(n), then the full adjacency matrix row-major
/// (`bit r*n + c` set iff arc `r -> c`).
pub fn encode_digraph6(d: &Digraph) -> String {
    let n = d.n();
    let mut out = String::from("&");
    push_size(&mut out, n);
    let mut bits = vec![false; n * n];
    for (u, v) in d.arcs() {
        bits[u * n + v] = true;
    }
    push_bits(&mut out, &bits);
    out
}

pub fn decode_digraph6(line: &str) -> Result<Digraph, CodecError> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty);
    }
    if bytes[0] != b'&' {
        return Err(CodecError::MissingDirectedHeader);
    }
    let (n, offset) = read_size(&bytes[1..])?;
    if n > MAX_VERTICES {
        return Err(CodecError::TooLarge(n));
    }
    let bits = read_bits(bytes, 1 + offset, n * n)?;
    let mut d = Digraph::new(n);
    for r in 0..n {
        if bits[r * n + r] {
            return Err(CodecError::SelfLoop(r));
        }
        for c in 0..n {
            if bits[r * n + c] && r != c {
                d.add_arc(r, c);
            }
        }
    }
    Ok(d)
}

/// Iterate the non-empty lines of a graph6/digraph6 file, skipping the
/// optional `>>graph6<<` style headers.
pub fn data_lines(content: &str) -> impl Iterator<Item = &str> {
    content
        .lines()
        .map(|l| l.trim_end())
        .filter(|l| !l.is_empty() && !l.starts_with(">>"))
}

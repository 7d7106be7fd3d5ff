//! Text formats.
//!
//! Matrix block: a header `p n k`, then `k` rows of digits with no
//! separators. A blank line ends the block. Lines starting with `#` are
//! comments.
//!
//! ```text
//! 2 4 2
//! 1000
//! 0100
//! ```
//!
//! `H_z`-code file: a header `ring n`, then the `C_a` block, then the `C_b`
//! block.

use std::fmt::Write as _;

use crate::code::{HzCode, HzWord};
use crate::error::{Error, Result};
use crate::gf::{LinearCode, Prime};
use crate::ring::RingId;

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
        }
    }

    /// Next non-blank, non-comment line with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            let t = line.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((i + 1, t));
            }
        }
        None
    }

    /// Next line for a matrix row; blank lines terminate the block.
    fn next_row(&mut self) -> Option<(usize, &'a str)> {
        loop {
            let (i, line) = self.inner.next()?;
            let t = line.trim();
            if t.starts_with('#') {
                continue;
            }
            if t.is_empty() {
                return None;
            }
            return Some((i + 1, t));
        }
    }
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{tok}`")))
}

fn parse_block(lines: &mut Lines<'_>) -> Result<Option<LinearCode>> {
    let Some((lno, header)) = lines.next_content() else {
        return Ok(None);
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(Error::parse(lno, "matrix header must be `p n k`"));
    }
    let p = parse_usize(lno, toks[0], "prime")?;
    let p = u8::try_from(p)
        .ok()
        .and_then(Prime::from_value)
        .ok_or_else(|| Error::parse(lno, format!("unsupported prime {p}")))?;
    let n = parse_usize(lno, toks[1], "length")?;
    let k = parse_usize(lno, toks[2], "row count")?;
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let (rl, row) = lines
            .next_row()
            .ok_or_else(|| Error::parse(lno, format!("expected {k} rows, found {r}")))?;
        let digits = row
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if (d as u8) < p.value() => Ok(d as u8),
                _ => Err(Error::parse(
                    rl,
                    format!("`{c}` is not an element of F_{p}"),
                )),
            })
            .collect::<Result<Vec<u8>>>()?;
        if digits.len() != n {
            return Err(Error::parse(
                rl,
                format!("row has {} entries, header says {n}", digits.len()),
            ));
        }
        rows.push(digits);
    }
    Ok(Some(LinearCode::from_rows(p, n, rows)?))
}

pub fn parse_matrix(text: &str) -> Result<LinearCode> {
    let mut lines = Lines::new(text);
    parse_block(&mut lines)?.ok_or_else(|| Error::parse(1, "no matrix found"))
}

/// Any number of matrix blocks.
pub fn parse_matrices(text: &str) -> Result<Vec<LinearCode>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while let Some(code) = parse_block(&mut lines)? {
        out.push(code);
    }
    Ok(out)
}

pub fn write_matrix(code: &LinearCode) -> String {
    let mut s = format!("{} {} {}\n", code.p(), code.len(), code.dim());
    for row in matrix_rows(code) {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

pub fn write_matrices(codes: &[LinearCode]) -> String {
    codes
        .iter()
        .map(write_matrix)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Generator rows as digit strings.
pub fn matrix_rows(code: &LinearCode) -> Vec<String> {
    code.rows()
        .iter()
        .map(|r| r.iter().map(|&x| char::from(b'0' + x)).collect())
        .collect()
}

pub fn rows_to_code(p: Prime, n: usize, rows: &[String]) -> Result<LinearCode> {
    let parsed = rows
        .iter()
        .map(|r| {
            r.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| (d as u8) < p.value())
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::parse(0, format!("bad digit `{c}` in `{r}`")))
                })
                .collect::<Result<Vec<u8>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LinearCode::from_rows(p, n, parsed)
}

pub fn parse_hz_code(text: &str) -> Result<HzCode> {
    let mut lines = Lines::new(text);
    let (lno, header) = lines
        .next_content()
        .ok_or_else(|| Error::parse(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(lno, "code header must be `ring n`"));
    }
    let ring: RingId = toks[0]
        .parse()
        .map_err(|_| Error::parse(lno, format!("unknown ring `{}`", toks[0])))?;
    let n = parse_usize(lno, toks[1], "length")?;
    let ca = parse_block(&mut lines)?.ok_or_else(|| Error::parse(lno, "missing C_a block"))?;
    let cb = parse_block(&mut lines)?.ok_or_else(|| Error::parse(lno, "missing C_b block"))?;
    if ca.p() != Prime::Two || cb.p() != Prime::Three {
        return Err(Error::parse(lno, "C_a must be over F_2 and C_b over F_3"));
    }
    for c in [&ca, &cb] {
        if c.len() != n {
            return Err(Error::LengthMismatch(n, c.len()));
        }
    }
    if lines.next_content().is_some() {
        return Err(Error::parse(lno, "trailing content after C_b"));
    }
    HzCode::build(ring, ca, cb)
}

pub fn write_hz_code(code: &HzCode) -> String {
    format!(
        "{} {}\n{}\n{}",
        code.ring(),
        code.len(),
        write_matrix(code.ca()),
        write_matrix(code.cb())
    )
}

pub fn write_words(words: &[HzWord]) -> String {
    let mut s = String::new();
    for w in words {
        let _ = writeln!(s, "{w}");
    }
    s
}

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Provenance, RingTable};
use crate::error::{Error, Result};
use crate::qalgebra::QRing;
use crate::Q;

pub fn save_ring(t: &RingTable, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_table(t))?;
    Ok(())
}

pub fn load_ring(path: impl AsRef<Path>) -> Result<RingTable> {
    let s = std::fs::read_to_string(path)?;
    parse_table(&s)
}

pub(super) fn write_table(t: &RingTable) -> String {
    let r = &t.ring;
    let mut s = String::new();
    let _ = writeln!(s, "name {}", r.name());
    let _ = writeln!(s, "c1 {}", r.c1());
    let _ = writeln!(s, "dim {}", r.dim());
    let _ = writeln!(s, "provenance {}", t.provenance);
    let _ = writeln!(s, "unit {}", r.unit_index());
    s.push_str("basis\n");
    for i in 0..r.dim() {
        let _ = writeln!(s, "{i} {} {}", r.label(i), r.degree(i));
    }
    s.push_str("products\n");
    for (i, j, k, d, c) in r.entries() {
        let _ = writeln!(s, "{i} {j} -> {k} {d} {}/{}", c.numer(), c.denom());
    }
    s
}

struct Lines<'a> {
    it: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl<'a> Lines<'a> {
    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.it.next() {
            Some((i, l)) => Ok((i + 1, l)),
            None => Err(err(
                0,
                0,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    /// `key value`, returning the value and its column.
    fn field(&mut self, key: &str) -> Result<(usize, usize, &'a str)> {
        let (ln, l) = self.next_line(key)?;
        let rest = l
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or_else(|| err(ln, 1, format!("expected `{key} <value>`")))?;
        Ok((ln, key.len() + 2, rest))
    }

    fn keyword(&mut self, key: &str) -> Result<()> {
        let (ln, l) = self.next_line(key)?;
        if l != key {
            return Err(err(ln, 1, format!("expected `{key}`")));
        }
        Ok(())
    }
}

fn parse_num<T: std::str::FromStr>(ln: usize, col: usize, s: &str, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| err(ln, col, format!("invalid {what} `{s}`")))
}

fn parse_rational(ln: usize, col: usize, s: &str) -> Result<Q> {
    let (a, b) = s
        .split_once('/')
        .ok_or_else(|| err(ln, col, format!("expected num/den, found `{s}`")))?;
    let num: BigInt = parse_num(ln, col, a, "numerator")?;
    let den: BigInt = parse_num(ln, col + a.len() + 1, b, "denominator")?;
    if den.is_zero() {
        return Err(err(ln, col + a.len() + 1, "zero denominator"));
    }
    Ok(Q::new(num, den))
}

pub(super) fn parse_table(s: &str) -> Result<RingTable> {
    let mut ls = Lines {
        it: s.lines().enumerate().peekable(),
    };
    let (_, _, name) = ls.field("name")?;
    let (ln, col, c1) = ls.field("c1")?;
    let c1: u32 = parse_num(ln, col, c1, "c1")?;
    let (ln, col, dim) = ls.field("dim")?;
    let dim: usize = parse_num(ln, col, dim, "dim")?;
    let (ln, col, prov) = ls.field("provenance")?;
    let provenance: Provenance = prov
        .parse()
        .map_err(|_| err(ln, col, format!("unknown provenance `{prov}`")))?;
    let (ln, col, unit) = ls.field("unit")?;
    let unit: usize = parse_num(ln, col, unit, "unit index")?;
    ls.keyword("basis")?;

    let mut basis = Vec::with_capacity(dim);
    for i in 0..dim {
        let (ln, l) = ls.next_line("basis line")?;
        let t = tokens(l);
        if t.len() != 3 {
            return Err(err(ln, 1, "expected `<index> <label> <degree>`"));
        }
        let idx: usize = parse_num(ln, t[0].0, t[0].1, "index")?;
        if idx != i {
            return Err(err(ln, t[0].0, format!("expected basis index {i}")));
        }
        let deg: u32 = parse_num(ln, t[2].0, t[2].1, "degree")?;
        basis.push((t[1].1.to_string(), deg));
    }
    ls.keyword("products")?;

    let mut products = Vec::new();
    let mut last: Option<(usize, usize, usize, u32)> = None;
    for (i, l) in ls.it.by_ref() {
        let ln = i + 1;
        if l.is_empty() {
            continue;
        }
        let t = tokens(l);
        if t.len() != 6 || t[2].1 != "->" {
            return Err(err(ln, 1, "expected `i j -> k d num/den`"));
        }
        let a: usize = parse_num(ln, t[0].0, t[0].1, "index")?;
        let b: usize = parse_num(ln, t[1].0, t[1].1, "index")?;
        let k: usize = parse_num(ln, t[3].0, t[3].1, "index")?;
        let d: u32 = parse_num(ln, t[4].0, t[4].1, "q power")?;
        let c = parse_rational(ln, t[5].0, t[5].1)?;
        if a > b {
            return Err(err(ln, t[0].0, "products must have i <= j"));
        }
        if last.is_some_and(|p| p >= (a, b, k, d)) {
            return Err(err(ln, 1, "products out of canonical order"));
        }
        last = Some((a, b, k, d));
        products.push((a, b, k, d, c));
    }
    let ring = QRing::new(name, basis, c1, unit, products)?;
    Ok(RingTable { ring, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::projective_space;

    #[test]
    fn round_trip_is_byte_identical() {
        let t = RingTable::builtin(projective_space(3).unwrap());
        let s = write_table(&t);
        let u = parse_table(&s).unwrap();
        assert_eq!(u, t);
        assert_eq!(write_table(&u), s);
    }

    #[test]
    fn parse_error_has_position() {
        let t = RingTable::builtin(projective_space(2).unwrap());
        let s = write_table(&t).replace("c1 3", "c1 x");
        match parse_table(&s) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn grading_violation_names_triple() {
        let t = RingTable::builtin(projective_space(2).unwrap());
        let s = write_table(&t).replace("1 1 -> 2 0 1/1", "1 1 -> 1 0 1/1");
        match parse_table(&s) {
            Err(Error::Validation { invariant, detail }) => {
                assert_eq!(invariant, "grading");
                assert!(detail.contains("(1,1,1,0)"), "{detail}");
            }
            other => panic!("{other:?}"),
        }
    }
}

//! The `sgt-table v1` text format.
//!
//! ```text
//! 2
//! 0 1
//! 1 0
//! # name: C2
//! ```
//!
//! Line 1 is the order `n`, the next `n` lines are the rows of the table with
//! 0-based entries, and any number of `#` comment lines may follow. A
//! `# name: ...` comment carries the semigroup's name. Streams are blocks
//! separated by blank lines.

use std::fmt::Write;

use super::{make_semigroup, FiniteSemigroup};
use crate::{Error, Result};

const NAME_PREFIX: &str = "# name: ";

pub fn write_table(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    writeln!(out, "{}", s.order()).unwrap();
    for a in s.elements() {
        let row: Vec<String> = s.row(a).map(|v| v.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    if let Some(name) = s.name() {
        writeln!(out, "{NAME_PREFIX}{name}").unwrap();
    }
    out
}

pub fn parse_table(text: &str) -> Result<FiniteSemigroup> {
    let mut blocks = parse_stream(text)?;
    match blocks.len() {
        1 => Ok(blocks.pop().unwrap()),
        0 => Err(Error::parse(1, "empty input")),
        k => Err(Error::parse(1, format!("expected one table, found {k}"))),
    }
}

pub fn write_stream<'a, I>(semigroups: I) -> String
where
    I: IntoIterator<Item = &'a FiniteSemigroup>,
{
    semigroups
        .into_iter()
        .map(write_table)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses blank-line-separated blocks. Line numbers in errors are 1-based
/// positions in `text`.
pub fn parse_stream(text: &str) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !block.is_empty() {
                out.push(parse_block(&block)?);
                block.clear();
            }
        } else {
            block.push((i + 1, line));
        }
    }
    if !block.is_empty() {
        out.push(parse_block(&block)?);
    }
    Ok(out)
}

fn parse_block(lines: &[(usize, &str)]) -> Result<FiniteSemigroup> {
    let mut name = None;
    let mut data = Vec::new();
    for &(no, line) in lines {
        if let Some(rest) = line.strip_prefix(NAME_PREFIX) {
            name = Some(rest.to_string());
        } else if !line.starts_with('#') {
            data.push((no, line));
        }
    }
    let Some(&(header_no, header)) = data.first() else {
        return Err(Error::parse(lines[0].0, "block has no order line"));
    };
    let order: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::parse(header_no, format!("bad order {:?}", header.trim())))?;
    if order == 0 {
        return Err(Error::parse(header_no, "order must be positive"));
    }
    if data.len() != order + 1 {
        let line = data.last().map_or(header_no, |&(no, _)| no);
        return Err(Error::parse(
            line,
            format!("expected {order} rows, found {}", data.len() - 1),
        ));
    }
    let mut table = Vec::with_capacity(order * order);
    for &(no, line) in &data[1..] {
        let before = table.len();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::parse(no, format!("bad entry {tok:?}")))?;
            if v >= order {
                return Err(Error::parse(
                    no,
                    format!("entry {v} out of range for order {order}"),
                ));
            }
            table.push(v);
        }
        if table.len() - before != order {
            return Err(Error::parse(
                no,
                format!("expected {order} entries, found {}", table.len() - before),
            ));
        }
    }
    let mut s = make_semigroup(order, table).map_err(|e| Error::parse(header_no, e.to_string()))?;
    s.set_name(name);
    Ok(s)
}

/// Sidecar label file: one element name per line.
pub fn write_labels(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    for x in s.elements() {
        writeln!(out, "{}", s.label(x)).unwrap();
    }
    out
}

pub fn parse_labels(text: &str, order: usize) -> Result<Vec<String>> {
    let labels: Vec<String> = text.lines().map(str::to_string).collect();
    if labels.len() != order {
        return Err(Error::parse(
            labels.len().max(1),
            format!("expected {order} labels, found {}", labels.len()),
        ));
    }
    Ok(labels)
}

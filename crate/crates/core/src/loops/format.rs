//! The `.tbl` text format.
//!
//! Lines starting with `#` are comments. The remaining text is a
//! whitespace-separated token stream: the order `n` followed by `n²`
//! one-based entries in row-major order.

use std::fmt::Write as _;
use std::str::FromStr;

use super::LoopTable;
use crate::error::{Error, Result};

pub fn parse_table(text: &str) -> Result<LoopTable> {
    let mut tokens = text
        .lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace);

    let first = tokens
        .next()
        .ok_or_else(|| Error::Malformed("empty input".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Malformed(format!("bad order token {first:?}")))?;
    if n == 0 {
        return Err(Error::Malformed("order must be positive".into()));
    }
    if n > super::MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }

    let mut cells = Vec::with_capacity(n * n);
    for tok in tokens {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Malformed(format!("bad entry token {tok:?}")))?;
        if v == 0 || v > n {
            return Err(Error::Malformed(format!("entry {v} out of range 1..={n}")));
        }
        cells.push((v - 1) as u16);
    }
    if cells.len() != n * n {
        return Err(Error::Malformed(format!(
            "expected {} entries, found {}",
            n * n,
            cells.len()
        )));
    }

    let (mut table, moved) = LoopTable::normalized(n, cells)?;
    if let Some(e) = moved {
        table.set_name(format!("identity relabeled from {} to 1", e + 1));
    }
    Ok(table)
}

/// Renders the order on the first line, then one row per line.
pub fn render_table(table: &LoopTable) -> String {
    let n = table.order();
    let mut out = String::with_capacity(n * n * 3 + 8);
    writeln!(out, "{n}").unwrap();
    for row in table.cells().chunks(n) {
        for (j, &v) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write!(out, "{}", v as usize + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

impl FromStr for LoopTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_table(s)
    }
}

impl LoopTable {
    pub fn render(&self) -> String {
        render_table(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::Element;

    #[test]
    fn parses_z2() {
        let t = parse_table("2\n1 2\n2 1\n").unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(
            t.mul(Element::from_label(2), Element::from_label(2)),
            Element::IDENTITY
        );
    }

    #[test]
    fn comments_are_skipped() {
        let t = parse_table("# Z2\n2\n# rows follow\n1 2\n2 1").unwrap();
        assert_eq!(t.order(), 2);
    }

    #[test]
    fn rejects_repeated_row_entry() {
        assert!(matches!(
            parse_table("2\n1 1\n2 1\n"),
            Err(Error::NotLatin { .. })
        ));
    }

    #[test]
    fn rejects_wrong_counts_and_ranges() {
        assert!(matches!(parse_table("2\n1 2\n2"), Err(Error::Malformed(_))));
        assert!(matches!(
            parse_table("2\n1 2\n2 1 1"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            parse_table("2\n1 2\n2 3"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(parse_table("two\n"), Err(Error::Malformed(_))));
        assert!(matches!(parse_table(""), Err(Error::Malformed(_))));
    }

    #[test]
    fn no_identity() {
        assert_eq!(
            parse_table("3\n1 3 2\n3 2 1\n2 1 3\n"),
            Err(Error::NoIdentity)
        );
    }

    #[test]
    fn relabeling_is_recorded() {
        // Z3 with identity written as 3.
        let t = parse_table("3\n2 3 1\n3 1 2\n1 2 3\n").unwrap();
        assert_eq!(t.name(), Some("identity relabeled from 3 to 1"));
        assert_eq!(t.render(), "3\n1 2 3\n2 3 1\n3 1 2\n");
    }

    #[test]
    fn render_has_no_trailing_whitespace() {
        let t = parse_table("2 1 2 2 1").unwrap();
        assert_eq!(t.render(), "2\n1 2\n2 1\n");
    }
}

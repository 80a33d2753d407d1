//! The SMR v1 text format.
//!
//! ```text
//! smr 1
//! order 2
//! add
//! 0 1
//! 1 0
//! mul
//! 0 0
//! 0 1
//! name Z2
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. The `name` line is
//! optional and must follow the tables.

use std::fmt::Write as _;

use thiserror::Error;

use crate::semiring::{Semiring, SemiringError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmrError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] SemiringError),
}

pub fn parse_semiring(text: &str) -> Result<Semiring, SmrError> {
    let mut cursor = Cursor::new(text);
    let s = parse_block(&mut cursor)?;
    if let Some(line) = cursor.next_line() {
        return Err(line.error(1, "unexpected content after semiring"));
    }
    Ok(s)
}

pub fn serialize_semiring(s: &Semiring) -> String {
    let mut out = String::new();
    write_block(&mut out, s);
    out
}

pub(crate) fn write_block(out: &mut String, s: &Semiring) {
    let n = s.order();
    let _ = writeln!(out, "smr 1");
    let _ = writeln!(out, "order {n}");
    for (label, table) in [("add", s.add_table()), ("mul", s.mul_table())] {
        out.push_str(label);
        out.push('\n');
        for row in table.chunks(n) {
            let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    if let Some(name) = s.name() {
        let _ = writeln!(out, "name {name}");
    }
}

/// One significant input line: its 1-based number and raw text.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub text: &'a str,
}

impl<'a> Line<'a> {
    pub fn error(&self, column: usize, message: impl Into<String>) -> SmrError {
        SmrError::Syntax {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    /// Whitespace-separated tokens with their 1-based columns.
    pub fn tokens(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.text.char_indices() {
            match (ch.is_ascii_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    out.push((s + 1, &self.text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s + 1, &self.text[s..]));
        }
        out
    }

    /// Expects `keyword` as the first token and returns the rest.
    pub fn keyword(&self, keyword: &str) -> Result<Vec<(usize, &'a str)>, SmrError> {
        let tokens = self.tokens();
        match tokens.first() {
            Some((_, k)) if *k == keyword => Ok(tokens[1..].to_vec()),
            Some((col, k)) => Err(self.error(*col, format!("expected `{keyword}`, found `{k}`"))),
            None => Err(self.error(1, format!("expected `{keyword}`"))),
        }
    }
}

pub(crate) struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        let mut last_line = 0;
        let lines = text
            .lines()
            .enumerate()
            .inspect(|(i, _)| last_line = i + 1)
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .map(|(i, l)| Line {
                number: i + 1,
                text: l.trim_end_matches('\r'),
            })
            .collect();
        Cursor {
            lines,
            pos: 0,
            last_line,
        }
    }

    pub fn next_line(&mut self) -> Option<Line<'a>> {
        let line = self.lines.get(self.pos).copied();
        if line.is_some() {
            self.pos += 1;
        }
        line
    }

    pub fn peek(&self) -> Option<Line<'a>> {
        self.lines.get(self.pos).copied()
    }

    pub fn expect_line(&mut self, what: &str) -> Result<Line<'a>, SmrError> {
        self.next_line().ok_or_else(|| SmrError::Syntax {
            line: self.last_line + 1,
            column: 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }
}

pub(crate) fn parse_usize(line: &Line<'_>, (col, tok): (usize, &str)) -> Result<usize, SmrError> {
    tok.parse::<usize>().map_err(|_| {
        line.error(
            col,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

/// Parses one SMR block, leaving the cursor after it.
pub(crate) fn parse_block(cursor: &mut Cursor<'_>) -> Result<Semiring, SmrError> {
    let header = cursor.expect_line("`smr 1`")?;
    let rest = header.keyword("smr")?;
    match rest.as_slice() {
        [(_, "1")] => {}
        [(col, v)] => return Err(header.error(*col, format!("unsupported version `{v}`"))),
        _ => return Err(header.error(1, "expected `smr 1`")),
    }

    let order_line = cursor.expect_line("`order <n>`")?;
    let rest = order_line.keyword("order")?;
    let [tok] = rest.as_slice() else {
        return Err(order_line.error(1, "expected `order <n>`"));
    };
    let n = parse_usize(&order_line, *tok)?;
    if n == 0 || n > MAX_ORDER {
        return Err(order_line.error(tok.0, format!("order must be in 1..={MAX_ORDER}")));
    }

    let add = parse_table(cursor, "add", n)?;
    let mul = parse_table(cursor, "mul", n)?;
    let mut name = None;
    if let Some(line) = cursor.peek() {
        if let Some((col, "name")) = line.tokens().first().copied() {
            cursor.next_line();
            let value = line.text[col - 1 + "name".len()..].trim();
            if value.is_empty() {
                return Err(line.error(col, "empty name"));
            }
            name = Some(value.to_string());
        }
    }
    let s = Semiring::new(n, add, mul)?;
    Ok(match name {
        Some(name) => s.with_name(name),
        None => s,
    })
}

fn parse_table(cursor: &mut Cursor<'_>, label: &str, n: usize) -> Result<Vec<usize>, SmrError> {
    let head = cursor.expect_line(&format!("`{label}`"))?;
    if !head.keyword(label)?.is_empty() {
        return Err(head.error(
            label.len() + 2,
            format!("unexpected tokens after `{label}`"),
        ));
    }
    let mut table = Vec::with_capacity(n * n);
    for _ in 0..n {
        let line = cursor.expect_line(&format!("a row of the {label} table"))?;
        let tokens = line.tokens();
        if tokens.len() != n {
            return Err(line.error(1, format!("expected {n} entries, found {}", tokens.len())));
        }
        for tok in tokens {
            let v = parse_usize(&line, tok)?;
            if v >= n {
                return Err(line.error(
                    tok.0,
                    format!("entry out of range: {v} is not below order {n}"),
                ));
            }
            table.push(v);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = "smr 1\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n0 1\nname Z2\n";

    #[test]
    fn parses_z2() {
        let s = parse_semiring(Z2).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.name(), Some("Z2"));
        assert_eq!(s.add(1, 1), 0);
        assert_eq!(serialize_semiring(&s), Z2);
    }

    #[test]
    fn trivial_semiring_text() {
        let s = Semiring::new(1, vec![0], vec![0]).unwrap();
        assert_eq!(serialize_semiring(&s), "smr 1\norder 1\nadd\n0\nmul\n0\n");
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# header\nsmr 1\n\norder 1\nadd\n# the table\n0\nmul\n0\n";
        assert_eq!(parse_semiring(text).unwrap().order(), 1);
    }

    #[test]
    fn distributivity_failure_is_reported() {
        let text = "smr 1\norder 2\nadd\n0 1\n1 1\nmul\n0 1\n1 0\n";
        let err = parse_semiring(text).unwrap_err();
        assert!(matches!(err, SmrError::Invalid(SemiringError::Axioms(_))));
        assert!(err
            .to_string()
            .contains("right distributivity fails at (b,c,a)=(0,1,1)"));
    }

    #[test]
    fn out_of_range_entry_has_position() {
        let text = "smr 1\norder 2\nadd\n0 1\n1 7\nmul\n0 0\n0 1\n";
        let err = parse_semiring(text).unwrap_err();
        assert_eq!(
            err,
            SmrError::Syntax {
                line: 5,
                column: 3,
                message: "entry out of range: 7 is not below order 2".into()
            }
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_semiring("smr 1\norder x\n").unwrap_err();
        assert!(
            matches!(
                err,
                SmrError::Syntax {
                    line: 2,
                    column: 7,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_semiring("smr 2\n").unwrap_err();
        assert!(
            matches!(
                err,
                SmrError::Syntax {
                    line: 1,
                    column: 5,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_semiring("smr 1\norder 2\nadd\n0 1\n").unwrap_err();
        assert!(matches!(err, SmrError::Syntax { line: 5, .. }), "{err}");
        let err = parse_semiring("smr 1\norder 1\nadd\n0\nmul\n0\nbogus\n").unwrap_err();
        assert!(matches!(err, SmrError::Syntax { line: 7, .. }), "{err}");
    }
}

//! The REES v1 text format.
//!
//! ```text
//! rees 1
//! skewring
//! smr 1
//! order 2
//! add
//! 0 1
//! 1 0
//! mul
//! 0 0
//! 0 1
//! bandI o* i
//! o o
//! i i
//! bandL o*
//! o
//! P
//! 0 0
//! ```
//!
//! Band headers list the labels in declaration order; the distinguished
//! element carries a trailing `*`. Band tables are written with labels.
//! `P` is followed by `|Λ|` rows of `|I|` element ids of the skew-ring.

use std::fmt::Write as _;

use super::{Band, ReesError, ReesSpec};
use crate::smr::{parse_block, parse_usize, write_block, Cursor};

pub fn parse_rees(text: &str) -> Result<ReesSpec, ReesError> {
    let mut cursor = Cursor::new(text);
    let header = cursor.expect_line("`rees 1`")?;
    let rest = header.keyword("rees")?;
    if !matches!(rest.as_slice(), [(_, "1")]) {
        return Err(header.error(1, "expected `rees 1`").into());
    }
    let line = cursor.expect_line("`skewring`")?;
    if !line.keyword("skewring")?.is_empty() {
        return Err(line.error(1, "unexpected tokens after `skewring`").into());
    }
    let ring = parse_block(&mut cursor)?;
    let index_i = parse_band(&mut cursor, "bandI")?;
    let index_lambda = parse_band(&mut cursor, "bandL")?;

    let line = cursor.expect_line("`P`")?;
    if !line.keyword("P")?.is_empty() {
        return Err(line.error(1, "unexpected tokens after `P`").into());
    }
    let mut sandwich = Vec::with_capacity(index_i.len() * index_lambda.len());
    for _ in 0..index_lambda.len() {
        let line = cursor.expect_line("a row of P")?;
        let tokens = line.tokens();
        if tokens.len() != index_i.len() {
            return Err(line
                .error(
                    1,
                    format!("expected {} entries, found {}", index_i.len(), tokens.len()),
                )
                .into());
        }
        for tok in tokens {
            sandwich.push(parse_usize(&line, tok)?);
        }
    }
    if let Some(line) = cursor.next_line() {
        return Err(line.error(1, "unexpected content after P").into());
    }
    ReesSpec::new(ring, index_i, index_lambda, sandwich)
}

fn parse_band(cursor: &mut Cursor<'_>, keyword: &str) -> Result<Band, ReesError> {
    let head = cursor.expect_line(&format!("`{keyword}`"))?;
    let tokens = head.keyword(keyword)?;
    if tokens.is_empty() {
        return Err(head.error(1, "band needs at least one label").into());
    }
    let mut labels = Vec::with_capacity(tokens.len());
    let mut o = None;
    for (col, tok) in &tokens {
        match tok.strip_suffix('*') {
            Some(label) if !label.is_empty() => {
                if o.replace(labels.len()).is_some() {
                    return Err(head.error(*col, "more than one distinguished label").into());
                }
                labels.push(label.to_string());
            }
            Some(_) => return Err(head.error(*col, "empty label").into()),
            None => labels.push(tok.to_string()),
        }
    }
    let o = o.ok_or_else(|| head.error(1, "no label is marked with `*`"))?;
    let k = labels.len();
    let mut table = Vec::with_capacity(k * k);
    for _ in 0..k {
        let line = cursor.expect_line("a band table row")?;
        let row = line.tokens();
        if row.len() != k {
            return Err(line
                .error(1, format!("expected {k} entries, found {}", row.len()))
                .into());
        }
        for (col, tok) in row {
            let pos = labels
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| line.error(col, format!("unknown label `{tok}`")))?;
            table.push(pos);
        }
    }
    Band::new(labels, table, o)
}

pub fn serialize_rees(spec: &ReesSpec) -> String {
    let mut out = String::from("rees 1\nskewring\n");
    write_block(&mut out, spec.ring());
    for (keyword, band) in [("bandI", spec.index_i()), ("bandL", spec.index_lambda())] {
        out.push_str(keyword);
        for (x, label) in band.labels().iter().enumerate() {
            out.push(' ');
            out.push_str(label);
            if x == band.o() {
                out.push('*');
            }
        }
        out.push('\n');
        for x in 0..band.len() {
            let row: Vec<&str> = (0..band.len())
                .map(|y| band.label(band.mul(x, y)))
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out.push_str("P\n");
    let ni = spec.index_i().len();
    for row in spec.sandwich().chunks(ni) {
        let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const M4: &str = "rees 1\nskewring\nsmr 1\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n\
                      bandI o* i\no o\ni i\nbandL o*\no\nP\n0 0\n";

    #[test]
    fn round_trip() {
        let spec = parse_rees(M4).unwrap();
        assert_eq!(spec.index_i().len(), 2);
        assert_eq!(spec.index_lambda().len(), 1);
        assert_eq!(serialize_rees(&spec), M4);
    }

    #[test]
    fn missing_marker() {
        let text = M4.replace("bandL o*", "bandL o");
        assert!(parse_rees(&text)
            .unwrap_err()
            .to_string()
            .contains("marked"));
    }

    #[test]
    fn unknown_label() {
        let text = M4.replace("i i\n", "i q\n");
        assert!(parse_rees(&text)
            .unwrap_err()
            .to_string()
            .contains("unknown label `q`"));
    }
}

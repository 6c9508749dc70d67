//! Matrix text format: a header line "n k rows" followed by one line per
//! defining column, each holding k space-separated residues.

use crate::code::ColumnMultiset;
use crate::error::{Error, Result};
use crate::linalg::ZnVec;
use crate::ring::RingSpec;

pub fn parse_matrix(text: &str) -> Result<ColumnMultiset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input; expected a header line \"n k rows\"".into(),
    })?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let [n, k, rows] = parts[..] else {
        return Err(Error::Parse {
            line: header_line,
            msg: format!(
                "header must be \"n k rows\" (three integers), got {} field(s)",
                parts.len()
            ),
        });
    };
    let parse_int = |line: usize, s: &str, what: &str| -> Result<u64> {
        s.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("{what} must be a non-negative integer, got \"{s}\""),
        })
    };
    let n = parse_int(header_line, n, "modulus n")?;
    let k = parse_int(header_line, k, "dimension k")? as usize;
    let rows = parse_int(header_line, rows, "row count")? as usize;
    let ring = RingSpec::new(n).map_err(|e| Error::Parse {
        line: header_line,
        msg: e.to_string(),
    })?;

    let mut columns = Vec::with_capacity(rows);
    for (line_no, line) in lines.by_ref().take(rows) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != k {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {k} residues, got {}", fields.len()),
            });
        }
        let mut entries = Vec::with_capacity(k);
        for (col, f) in fields.iter().enumerate() {
            let r = parse_int(line_no, f, "residue")?;
            if r >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("residue {r} at column {} is out of range for Z_{n}", col + 1),
                });
            }
            entries.push(r);
        }
        columns.push(ZnVec::new(ring.clone(), entries));
    }
    if columns.len() != rows {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header promises {rows} rows, found {}", columns.len()),
        });
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("trailing data after the {rows} rows promised by the header"),
        });
    }
    ColumnMultiset::new(ring, k, columns).map_err(|e| match e {
        Error::NotEnoughIndependent { k } => Error::Parse {
            line: header_line,
            msg: format!("columns do not contain {k} linearly independent vectors"),
        },
        other => other,
    })
}

pub fn write_matrix(lambda: &ColumnMultiset) -> String {
    let mut out = format!("{} {} {}\n", lambda.ring().n(), lambda.k(), lambda.m());
    for c in lambda.columns() {
        let row: Vec<String> = c.entries().iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

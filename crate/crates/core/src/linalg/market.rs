//! Matrix Market coordinate format (`integer general`), 1-based indices.

use std::io::{BufRead, Write};

use thiserror::Error;

use super::SparseIntMatrix;

#[derive(Debug, Error)]
pub enum MarketError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub fn write_matrix_market<W: Write>(m: &SparseIntMatrix, mut w: W) -> std::io::Result<()> {
    writeln!(w, "%%MatrixMarket matrix coordinate integer general")?;
    writeln!(w, "{} {} {}", m.n_rows(), m.n_cols(), m.nnz())?;
    for (r, c, v) in m.triplets() {
        writeln!(w, "{} {} {}", r + 1, c + 1, v)?;
    }
    Ok(())
}

pub fn read_matrix_market<R: BufRead>(r: R) -> Result<SparseIntMatrix, MarketError> {
    let mut shape: Option<(usize, usize, usize)> = None;
    let mut triplets = Vec::new();
    for (n, line) in r.lines().enumerate() {
        let line = line?;
        let line_no = n + 1;
        let err = |msg: &str| MarketError::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        if n == 0 {
            let header = line.to_ascii_lowercase();
            if !header.starts_with("%%matrixmarket matrix coordinate")
                || !(header.contains("integer") || header.contains("real"))
            {
                return Err(err("expected a coordinate integer Matrix Market header"));
            }
            continue;
        }
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = t.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(err("expected three fields"));
        }
        let num = |s: &str| s.parse::<i64>().map_err(|e| err(&e.to_string()));
        let (a, b, c) = (num(fields[0])?, num(fields[1])?, num(fields[2])?);
        match shape {
            None => {
                if a < 0 || b < 0 || c < 0 {
                    return Err(err("negative size"));
                }
                shape = Some((a as usize, b as usize, c as usize));
            }
            Some((rows, cols, _)) => {
                if a < 1 || b < 1 || a as usize > rows || b as usize > cols {
                    return Err(err("index out of range"));
                }
                triplets.push((a as usize - 1, b as usize - 1, c));
            }
        }
    }
    let (rows, cols, nnz) = shape.ok_or(MarketError::Parse {
        line: 0,
        msg: "missing size line".into(),
    })?;
    if triplets.len() != nnz {
        return Err(MarketError::Parse {
            line: 0,
            msg: format!("expected {nnz} entries, found {}", triplets.len()),
        });
    }
    Ok(SparseIntMatrix::from_triplets(rows, cols, triplets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = SparseIntMatrix::from_dense(&[vec![1, 0, -2], vec![0, 0, 7]]);
        let mut buf = Vec::new();
        write_matrix_market(&m, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(
            text,
            "%%MatrixMarket matrix coordinate integer general\n2 3 3\n1 1 1\n1 3 -2\n2 3 7\n"
        );
        assert_eq!(read_matrix_market(buf.as_slice()).unwrap(), m);
    }

    #[test]
    fn rejects_garbage() {
        assert!(read_matrix_market("hello\n".as_bytes()).is_err());
        let bad = "%%MatrixMarket matrix coordinate integer general\n1 1 1\n2 1 5\n";
        assert!(read_matrix_market(bad.as_bytes()).is_err());
    }
}

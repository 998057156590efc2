//! Square integer matrices, their text formats and magnitude statistics.

use std::fmt::Write as _;
use std::io::Read;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// On-disk matrix encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixFormat {
    /// `n n` header followed by `n` rows of `n` signed integers.
    Dense,
    /// `rows cols M` header, 1-based `i j value` triples, `0 0 0` terminator.
    Sms,
}

impl FromStr for MatrixFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dense" => Ok(MatrixFormat::Dense),
            "sms" => Ok(MatrixFormat::Sms),
            other => Err(format!("unknown matrix format '{other}'")),
        }
    }
}

/// Magnitude statistics every bound consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnitudeStats {
    /// Largest absolute entry, `B`.
    pub max_abs: BigInt,
    pub row_abs_sums: Vec<BigInt>,
    pub col_abs_sums: Vec<BigInt>,
    /// `row_abs_sums[i] - |a_ii|`.
    pub off_diag_row_sums: Vec<BigInt>,
    /// `col_abs_sums[j] - |a_jj|`.
    pub off_diag_col_sums: Vec<BigInt>,
}

impl MagnitudeStats {
    fn compute(n: usize, entries: &[BigInt]) -> Self {
        let mut max_abs = BigInt::zero();
        let mut row_abs_sums = vec![BigInt::zero(); n];
        let mut col_abs_sums = vec![BigInt::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let a = entries[i * n + j].abs();
                row_abs_sums[i] += &a;
                col_abs_sums[j] += &a;
                if a > max_abs {
                    max_abs = a;
                }
            }
        }
        let diag = |i: usize| entries[i * n + i].abs();
        let off_diag_row_sums = (0..n).map(|i| &row_abs_sums[i] - diag(i)).collect();
        let off_diag_col_sums = (0..n).map(|j| &col_abs_sums[j] - diag(j)).collect();
        MagnitudeStats {
            max_abs,
            row_abs_sums,
            col_abs_sums,
            off_diag_row_sums,
            off_diag_col_sums,
        }
    }
}

/// A square matrix of arbitrary-precision integers, immutable once built.
///
/// Magnitude statistics are computed on first use and cached; the cache is
/// a `OnceLock`, so sharing a matrix across worker threads is safe.
#[derive(Debug)]
pub struct IntegerMatrix {
    n: usize,
    entries: Vec<BigInt>,
    stats: OnceLock<MagnitudeStats>,
}

impl Clone for IntegerMatrix {
    fn clone(&self) -> Self {
        IntegerMatrix::from_entries(self.n, self.entries.clone())
            .expect("cloned matrix keeps its shape")
    }
}

impl PartialEq for IntegerMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for IntegerMatrix {}

impl IntegerMatrix {
    /// Builds an `n x n` matrix from row-major entries.
    pub fn from_entries(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(IntegerMatrix {
            n,
            entries,
            stats: OnceLock::new(),
        })
    }

    /// Builds a matrix from nested rows of machine integers.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntegerMatrix::from_entries(n, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::from(1);
        }
        IntegerMatrix::from_entries(n, entries).expect("n >= 1")
    }

    pub fn zeros(n: usize) -> Self {
        IntegerMatrix::from_entries(n, vec![BigInt::zero(); n * n]).expect("n >= 1")
    }

    /// Diagonal matrix with the given diagonal.
    pub fn diagonal(diag: &[i64]) -> Self {
        let n = diag.len();
        let mut entries = vec![BigInt::zero(); n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = BigInt::from(d);
        }
        IntegerMatrix::from_entries(n, entries).expect("n >= 1")
    }

    /// Companion matrix of a monic polynomial given by its ascending
    /// coefficients `c_0..c_{n-1}` (the leading 1 is implicit).
    pub fn companion(lower_coeffs: &[i64]) -> Self {
        let n = lower_coeffs.len();
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 1..n {
            entries[i * n + (i - 1)] = BigInt::from(1);
        }
        for (i, &c) in lower_coeffs.iter().enumerate() {
            entries[i * n + (n - 1)] = BigInt::from(-c);
        }
        IntegerMatrix::from_entries(n, entries).expect("n >= 1")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn stats(&self) -> &MagnitudeStats {
        self.stats
            .get_or_init(|| MagnitudeStats::compute(self.n, &self.entries))
    }

    /// `B` as a float, for the logarithmic bound formulas.
    pub fn max_abs_f64(&self) -> f64 {
        self.stats().max_abs.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn load<R: Read>(mut source: R, format: MatrixFormat) -> Result<Self> {
        let mut text = String::new();
        source.read_to_string(&mut text).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })?;
        match format {
            MatrixFormat::Dense => parse_dense(&text),
            MatrixFormat::Sms => parse_sms(&text),
        }
    }

    pub fn to_dense_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// SMS serialization listing the nonzero entries in row-major order.
    pub fn to_sms_string(&self) -> String {
        let mut out = format!("{} {} M\n", self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if !v.is_zero() {
                    let _ = writeln!(out, "{} {} {}", i + 1, j + 1, v);
                }
            }
        }
        out.push_str("0 0 0\n");
        out
    }

    pub fn serialize(&self, format: MatrixFormat) -> String {
        match format {
            MatrixFormat::Dense => self.to_dense_string(),
            MatrixFormat::Sms => self.to_sms_string(),
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect()
    }
}

/// Reads a matrix, mapping I/O failures to a parse error.
pub fn load_matrix<R: Read>(source: R, format: MatrixFormat) -> Result<IntegerMatrix> {
    IntegerMatrix::load(source, format)
}

fn parse_int(token: &str, line: usize) -> Result<BigInt> {
    token.parse::<BigInt>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid integer '{token}'"),
    })
}

fn parse_dim(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid dimension '{token}'"),
    })
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    arity: usize,
) -> Result<(usize, usize, usize)> {
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != arity {
        return Err(Error::Parse {
            line,
            message: format!("header must have {arity} fields, found {}", tokens.len()),
        });
    }
    let rows = parse_dim(tokens[0], line)?;
    let cols = parse_dim(tokens[1], line)?;
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    if rows == 0 {
        return Err(Error::Parse {
            line,
            message: "dimension must be at least 1".into(),
        });
    }
    Ok((rows, cols, line))
}

fn parse_dense(text: &str) -> Result<IntegerMatrix> {
    let mut lines = content_lines(text);
    let (n, _, _) = parse_header(&mut lines, 2)?;
    let mut entries = Vec::with_capacity(n * n);
    let mut rows_read = 0;
    for (line, content) in lines {
        if rows_read == n {
            return Err(Error::Parse {
                line,
                message: "trailing data after the last row".into(),
            });
        }
        let row = content
            .split_whitespace()
            .map(|t| parse_int(t, line))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        entries.extend(row);
        rows_read += 1;
    }
    if rows_read != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rows_read,
        });
    }
    IntegerMatrix::from_entries(n, entries)
}

/// Duplicate `(i, j)` triples: the last one wins.
fn parse_sms(text: &str) -> Result<IntegerMatrix> {
    let mut lines = content_lines(text);
    let (n, _, _) = parse_header(&mut lines, 3)?;
    let mut entries = vec![BigInt::zero(); n * n];
    let mut terminated = false;
    for (line, content) in lines.by_ref() {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected 'i j value', found {} fields", tokens.len()),
            });
        }
        let i = parse_dim(tokens[0], line)?;
        let j = parse_dim(tokens[1], line)?;
        let v = parse_int(tokens[2], line)?;
        if i == 0 && j == 0 {
            if !v.is_zero() {
                return Err(Error::Parse {
                    line,
                    message: "terminator must be '0 0 0'".into(),
                });
            }
            terminated = true;
            break;
        }
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::Parse {
                line,
                message: format!("index ({i}, {j}) outside 1..={n}"),
            });
        }
        entries[(i - 1) * n + (j - 1)] = v;
    }
    if !terminated {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: "missing '0 0 0' terminator".into(),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "data after terminator".into(),
        });
    }
    IntegerMatrix::from_entries(n, entries)
}


#[cfg(test)]
mod tests {
    use super::tests_support::EXAMPLE5;
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn dense_identity() {
        let m = load_matrix("2 2\n1 0\n0 1".as_bytes(), MatrixFormat::Dense).unwrap();
        assert_eq!(m, IntegerMatrix::identity(2));
    }

    #[test]
    fn sms_single_entry() {
        let m = load_matrix("3 3 M\n1 1 5\n0 0 0".as_bytes(), MatrixFormat::Sms).unwrap();
        let mut expected = IntegerMatrix::zeros(3).entries().to_vec();
        expected[0] = BigInt::from(5);
        assert_eq!(m.entries(), &expected[..]);
        let again = load_matrix(m.to_sms_string().as_bytes(), MatrixFormat::Sms).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn sms_duplicates_last_wins() {
        let m = load_matrix(
            "2 2 M\n1 2 3\n1 2 -4\n0 0 0\n".as_bytes(),
            MatrixFormat::Sms,
        )
        .unwrap();
        assert_eq!(m.get(0, 1), &BigInt::from(-4));
    }

    #[test]
    fn example_matrix_stats() {
        let m = load_matrix(EXAMPLE5.as_bytes(), MatrixFormat::Dense).unwrap();
        assert_eq!(m.n(), 5);
        let s = m.stats();
        assert_eq!(s.max_abs, BigInt::from(1));
        assert_eq!(ints(&s.row_abs_sums), vec![5; 5]);
        assert_eq!(ints(&s.off_diag_row_sums), vec![4; 5]);
    }

    #[test]
    fn identity_and_zero_stats() {
        let s = IntegerMatrix::identity(4).stats().clone();
        assert_eq!(s.max_abs, BigInt::from(1));
        assert_eq!(ints(&s.row_abs_sums), vec![1; 4]);
        assert_eq!(ints(&s.off_diag_row_sums), vec![0; 4]);
        let z = IntegerMatrix::zeros(3).stats().clone();
        assert!(z.max_abs.is_zero());
        assert!(z
            .row_abs_sums
            .iter()
            .chain(&z.col_abs_sums)
            .all(Zero::is_zero));
    }

    #[test]
    fn rejects_bad_input() {
        let err = |s: &str, f| load_matrix(s.as_bytes(), f).unwrap_err();
        assert_eq!(
            err("2 3\n1 2 3\n4 5 6", MatrixFormat::Dense),
            Error::NotSquare { rows: 2, cols: 3 }
        );
        assert!(matches!(
            err("2 2\n1 2\n3", MatrixFormat::Dense),
            Error::DimensionMismatch { .. }
        ));
        assert!(matches!(
            err("2 2\n1 2", MatrixFormat::Dense),
            Error::DimensionMismatch { .. }
        ));
        assert!(matches!(
            err("2 2\n1 x\n3 4", MatrixFormat::Dense),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(err("", MatrixFormat::Dense), Error::Parse { .. }));
        assert!(matches!(
            err("2 2 M\n1 1 1\n", MatrixFormat::Sms),
            Error::Parse { .. }
        ));
        assert!(matches!(
            err("2 2 M\n3 1 1\n0 0 0", MatrixFormat::Sms),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            err("3 2 M\n0 0 0", MatrixFormat::Sms),
            Error::NotSquare { .. }
        ));
    }

    #[test]
    fn companion_layout() {
        let c = IntegerMatrix::companion(&[-5, -2, 0]);
        assert_eq!(c.get(0, 2), &BigInt::from(5));
        assert_eq!(c.get(1, 2), &BigInt::from(2));
        assert_eq!(c.get(1, 0), &BigInt::from(1));
    }
}

//! Dense matrices over GF(2) and GF(4).
//!
//! Matrices are small in this crate (at most a few hundred columns), so they
//! are stored as row-major symbol vectors. The hot enumeration loops pack
//! codewords into bit planes separately (see `enumerate`).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{FieldKind, FiniteField, Gf2, Gf4};

/// A `rows × cols` matrix over `F`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of [`FieldMatrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<F> {
    pub matrix: FieldMatrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: FiniteField> FieldMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FieldMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. `cols` is needed to describe a
    /// matrix with zero rows.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(FieldMatrix {
            rows: r,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldKind {
        F::KIND
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns on {}",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FieldMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| *a * *b).sum_field())
            .collect()
    }

    /// Reduced row-echelon form. Pivots are chosen as the first nonzero entry
    /// scanning columns left to right.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if !f.is_zero() {
                        m.add_scaled_row(i, r, f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : self · xᵀ = 0}`, one basis vector per row.
    pub fn nullspace(&self) -> Self {
        let Rref {
            matrix,
            rank,
            pivots,
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            out.set(b, fc, F::one());
            for (pr, &pc) in pivots.iter().enumerate().take(rank) {
                // x_pc = -sum over free of a[pr][f] x_f
                out.set(b, pc, -matrix.get(pr, fc));
            }
        }
        out
    }

    /// The nonzero rows of the reduced row-echelon form.
    pub fn row_basis(&self) -> Self {
        let rr = self.rref();
        let mut m = rr.matrix;
        m.data.truncate(rr.rank * m.cols);
        m.rows = rr.rank;
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: F) {
        for j in 0..self.cols {
            let v = self.get(r, j) * s;
            self.set(r, j, v);
        }
    }

    /// row[dst] -= f · row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, f: F) {
        for j in 0..self.cols {
            let v = self.get(dst, j) - f * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// Renders the matrix in the text format described in [`parse_matrix`].
    pub fn to_text(&self) -> String {
        self.to_text_with(&[])
    }

    /// Like [`to_text`](Self::to_text) with extra `key=value` header tokens.
    pub fn to_text_with(&self, extra: &[(&str, String)]) -> String {
        let mut s = format!("field={} rows={} cols={}", F::order(), self.rows, self.cols);
        for (k, v) in extra {
            s.push_str(&format!(" {k}={v}"));
        }
        s.push('\n');
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.symbol().to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

trait SumField<F> {
    fn sum_field(self) -> F;
}

impl<F: FiniteField, I: Iterator<Item = F>> SumField<F> for I {
    fn sum_field(self) -> F {
        self.fold(F::zero(), |a, b| a + b)
    }
}

impl<F: fmt::Debug> fmt::Debug for FieldMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let line: String = row.iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  {line}")?;
        }
        write!(f, "]")
    }
}

/// Dot product of two equal-length vectors.
pub fn dot<F: FiniteField>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum_field()
}

/// Hamming weight of a vector.
pub fn weight<F: FiniteField>(v: &[F]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// A matrix whose field is only known at run time (parsed from text).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatrix {
    Gf2(FieldMatrix<Gf2>),
    Gf4(FieldMatrix<Gf4>),
}

impl AnyMatrix {
    pub fn field(&self) -> FieldKind {
        match self {
            AnyMatrix::Gf2(_) => FieldKind::Gf2,
            AnyMatrix::Gf4(_) => FieldKind::Gf4,
        }
    }

    pub fn mul(&self, other: &AnyMatrix) -> Result<AnyMatrix> {
        match (self, other) {
            (AnyMatrix::Gf2(a), AnyMatrix::Gf2(b)) => Ok(AnyMatrix::Gf2(a.mul(b)?)),
            (AnyMatrix::Gf4(a), AnyMatrix::Gf4(b)) => Ok(AnyMatrix::Gf4(a.mul(b)?)),
            _ => Err(Error::FieldMismatch {
                expected: self.field().order(),
                found: other.field().order(),
            }),
        }
    }

    pub fn to_text_with(&self, extra: &[(&str, String)]) -> String {
        match self {
            AnyMatrix::Gf2(m) => m.to_text_with(extra),
            AnyMatrix::Gf4(m) => m.to_text_with(extra),
        }
    }
}

/// Header of a matrix text file: the mandatory shape plus any extra
/// `key=value` tokens (for example `kind=parity`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixHeader {
    pub field: FieldKind,
    pub rows: usize,
    pub cols: usize,
    pub extra: BTreeMap<String, String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses whitespace-separated `key=value` tokens.
pub(crate) fn parse_header_tokens(line: &str, lineno: usize) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for tok in line.split_whitespace() {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(lineno, format!("expected key=value, found `{tok}`")))?;
        if map.insert(k.to_string(), v.to_string()).is_some() {
            return Err(parse_err(lineno, format!("duplicate header key `{k}`")));
        }
    }
    Ok(map)
}

pub(crate) fn parse_count(map: &BTreeMap<String, String>, key: &str, line: usize) -> Result<usize> {
    map.get(key)
        .ok_or_else(|| parse_err(line, format!("missing `{key}`")))?
        .parse()
        .map_err(|_| parse_err(line, format!("`{key}` is not a count")))
}

fn parse_rows<F: FiniteField>(lines: &[&str], rows: usize, cols: usize) -> Result<FieldMatrix<F>> {
    let mut data = Vec::with_capacity(rows * cols);
    for (i, line) in lines.iter().enumerate() {
        let lineno = i + 2;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != cols {
            return Err(parse_err(
                lineno,
                format!("expected {cols} symbols, found {}", toks.len()),
            ));
        }
        for t in toks {
            let mut chars = t.chars();
            let sym = match (chars.next(), chars.next()) {
                (Some(c), None) => F::from_symbol(c),
                _ => None,
            };
            data.push(sym.ok_or_else(|| {
                parse_err(lineno, format!("`{t}` is not a GF({}) symbol", F::order()))
            })?);
        }
    }
    Ok(FieldMatrix { rows, cols, data })
}

/// Parses the matrix text format:
///
/// ```text
/// field=<2|4> rows=<r> cols=<c> [key=value ...]
/// <r lines of c whitespace-separated symbols>
/// ```
///
/// GF(2) symbols are `0 1`; GF(4) symbols are `0 1 w W` with `W = w²`.
/// Keys other than `field`, `rows` and `cols` are returned in
/// [`MatrixHeader::extra`] for the caller to validate.
pub fn parse_matrix(text: &str) -> Result<(MatrixHeader, AnyMatrix)> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let first = lines.first().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut map = parse_header_tokens(first, 1)?;
    let q = parse_count(&map, "field", 1)?;
    let field = FieldKind::from_order(q as u32)
        .ok_or_else(|| parse_err(1, format!("unsupported field size {q}")))?;
    let rows = parse_count(&map, "rows", 1)?;
    let cols = parse_count(&map, "cols", 1)?;
    for k in ["field", "rows", "cols"] {
        map.remove(k);
    }
    let body = &lines[1..];
    if body.len() != rows {
        return Err(parse_err(
            lines.len() + 1,
            format!("expected {rows} matrix rows, found {}", body.len()),
        ));
    }
    let matrix = match field {
        FieldKind::Gf2 => AnyMatrix::Gf2(parse_rows(body, rows, cols)?),
        FieldKind::Gf4 => AnyMatrix::Gf4(parse_rows(body, rows, cols)?),
    };
    Ok((
        MatrixHeader {
            field,
            rows,
            cols,
            extra: map,
        },
        matrix,
    ))
}

/// Parses a GF(4) row vector written with the symbol alphabet, with or
/// without separating whitespace (`"1 w W"` or `"1wW"`).
pub fn parse_symbols<F: FiniteField>(s: &str) -> Result<Vec<F>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| {
            F::from_symbol(c)
                .ok_or_else(|| parse_err(1, format!("`{c}` is not a GF({}) symbol", F::order())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn g2(rows: &[&[u8]]) -> FieldMatrix<Gf2> {
        let cols = rows.first().map_or(0, |r| r.len());
        FieldMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&b| Gf2::from_bits(b)).collect())
                .collect(),
            cols,
        )
        .unwrap()
    }

    fn g4(rows: &[&str]) -> FieldMatrix<Gf4> {
        let v: Vec<Vec<Gf4>> = rows.iter().map(|r| parse_symbols(r).unwrap()).collect();
        let cols = v.first().map_or(0, |r| r.len());
        FieldMatrix::from_rows(v, cols).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = FieldMatrix::<Gf2>::identity(2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!((r.rank, r.pivots), (2, vec![0, 1]));

        let ones = g2(&[&[1, 1, 1]]);
        let r = ones.rref();
        assert_eq!(r.matrix, ones);
        assert_eq!((r.rank, r.pivots), (1, vec![0]));

        let m = g4(&["w1", "Ww"]);
        let r = m.rref();
        assert_eq!(r.matrix, g4(&["1W", "00"]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = g4(&["w1W0", "Ww10", "0101"]);
        let r = m.rref();
        let again = r.matrix.rref();
        assert_eq!(again.matrix, r.matrix);
        assert_eq!(again.rank, r.rank);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(FieldMatrix::<Gf2>::identity(3).nullspace().rows(), 0);

        let h = g2(&[&[1, 1, 1]]);
        let n = h.nullspace();
        assert_eq!(n.rows(), 2);
        assert!(h.mul(&n.transpose()).unwrap().is_zero());
        assert_eq!(n.rank(), 2);

        // [5,3] Hamming parity-check over GF(4)
        let h = g4(&["1011 1", "011wW"]);
        let n = h.nullspace();
        assert_eq!(n.rows(), 3);
        for i in 0..n.rows() {
            for r in 0..h.rows() {
                assert!(dot(h.row(r), n.row(i)).is_zero());
            }
        }
    }

    #[test]
    fn mul_examples() {
        let q = g2(&[&[0, 1, 0], &[0, 0, 1]]);
        let g_in = g2(&[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(q.mul(&g_in.transpose()).unwrap(), FieldMatrix::identity(2));

        let z = FieldMatrix::<Gf2>::zeros(3, 4);
        assert!(q.mul(&z).unwrap().is_zero());

        assert_eq!(g4(&["w"]).mul(&g4(&["w"])).unwrap(), g4(&["W"]));

        assert!(matches!(q.mul(&q), Err(Error::ShapeMismatch(_))));
        let a = AnyMatrix::Gf2(q);
        let b = AnyMatrix::Gf4(g4(&["w"]));
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn text_round_trip_and_strictness() {
        let m = g4(&["10w", "W01"]);
        let text = m.to_text_with(&[("kind", "parity".into())]);
        assert!(text.starts_with("field=4 rows=2 cols=3 kind=parity\n"));
        let (hdr, parsed) = parse_matrix(&text).unwrap();
        assert_eq!(parsed, AnyMatrix::Gf4(m));
        assert_eq!(hdr.extra.get("kind").map(String::as_str), Some("parity"));

        let bad = "field=4 rows=1 cols=2\n1 x\n";
        assert!(matches!(
            parse_matrix(bad),
            Err(Error::Parse { line: 2, .. })
        ));
        let bad = "field=2 rows=1 cols=2\n1 w\n";
        assert!(matches!(parse_matrix(bad), Err(Error::Parse { .. })));
        let bad = "field=3 rows=1 cols=1\n1\n";
        assert!(matches!(
            parse_matrix(bad),
            Err(Error::Parse { line: 1, .. })
        ));
        let bad = "field=2 rows=2 cols=1\n1\n";
        assert!(matches!(parse_matrix(bad), Err(Error::Parse { .. })));
    }
}

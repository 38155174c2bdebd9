//! Dense exact linear algebra over a [`Field`].
//!
//! Everything here is exact, so there are no pivot thresholds: the pivot is
//! the first nonzero entry found scanning columns left to right, which makes
//! every output deterministic.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Row-major dense matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Matrix { rows: self.rows, cols: cols.len(), data }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { rows: rows.len(), cols: self.cols, data }
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, field.add(cur, field.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Text form: header `rows cols p k`, then one line per row.
    pub fn to_text(&self, field: &Field) -> String {
        let mut s = String::new();
        writeln!(s, "{} {} {} {}", self.rows, self.cols, field.characteristic(), field.degree()).unwrap();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.index().to_string()).collect();
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
        s
    }

    /// Parses the text form, checking entries against `field`. Returns the
    /// matrix and the number of lines consumed.
    pub fn parse_text(text: &str, field: &Field) -> Result<(Matrix, usize)> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::Parse("missing matrix header".into()))?;
        let nums = parse_numbers(header)?;
        if nums.len() != 4 {
            return Err(Error::Parse(format!("matrix header needs 4 fields, got {}", nums.len())));
        }
        let (rows, cols) = (nums[0] as usize, nums[1] as usize);
        if nums[2] != field.characteristic() as u64 || nums[3] != field.degree() as u64 {
            return Err(Error::DimensionMismatch(format!(
                "matrix over F_{}^{} read into F_{}^{}",
                nums[2],
                nums[3],
                field.characteristic(),
                field.degree()
            )));
        }
        let mut data = Vec::with_capacity(rows * cols);
        let mut consumed = 1;
        for _ in 0..rows {
            let (idx, line) = lines.next().ok_or_else(|| Error::Parse("matrix has too few rows".into()))?;
            let row = parse_numbers(line)?;
            if row.len() != cols {
                return Err(Error::Parse(format!("row has {} entries, expected {cols}", row.len())));
            }
            for v in row {
                data.push(field.element(v as u32)?);
            }
            consumed = idx + 1;
        }
        Ok((Matrix { rows, cols, data }, consumed))
    }
}

pub(crate) fn parse_numbers(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("not an integer: {t:?}"))))
        .collect()
}

/// Reduced row echelon form plus rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Output of [`rref_rank_kernel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefKernel {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Rows form a basis of `{v : M v = 0}`.
    pub kernel: Matrix,
}

/// Row reduction without the emptiness check. Zero rows are dropped from
/// `reduced`, which therefore has exactly `rank` rows.
pub fn rref(field: &Field, m: &Matrix) -> Rref {
    let mut a = m.data.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(a[r * cols + c]);
        for j in c..cols {
            a[r * cols + j] = field.mul(a[r * cols + j], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[i * cols + c];
            if f.is_zero() {
                continue;
            }
            let nf = field.neg(f);
            for j in c..cols {
                let v = a[r * cols + j];
                if !v.is_zero() {
                    a[i * cols + j] = field.add(a[i * cols + j], field.mul(nf, v));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r * cols);
    Rref { reduced: Matrix { rows: r, cols, data: a }, rank: r, pivots }
}

pub fn rank(field: &Field, m: &Matrix) -> usize {
    rref(field, m).rank
}

/// Kernel basis from an rref: one vector per free column.
pub fn kernel_from_rref(field: &Field, rr: &Rref) -> Matrix {
    let cols = rr.reduced.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &rr.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(free.len(), cols);
    for (i, &f) in free.iter().enumerate() {
        k.set(i, f, Elem::ONE);
        for (r, &p) in rr.pivots.iter().enumerate() {
            k.set(i, p, field.neg(rr.reduced.get(r, f)));
        }
    }
    k
}

/// Reduced row echelon form, rank and a kernel basis of `M v = 0`.
pub fn rref_rank_kernel(field: &Field, m: &Matrix) -> Result<RrefKernel> {
    if m.rows == 0 || m.cols == 0 {
        return Err(Error::EmptyMatrix { rows: m.rows, cols: m.cols });
    }
    let rr = rref(field, m);
    let kernel = kernel_from_rref(field, &rr);
    Ok(RrefKernel { reduced: rr.reduced, rank: rr.rank, pivots: rr.pivots, kernel })
}

/// Whether `a` and `b` span the same row space.
pub fn row_space_equal(field: &Field, a: &Matrix, b: &Matrix) -> Result<bool> {
    if a.cols != b.cols {
        return Err(Error::DimensionMismatch(format!("{} vs {} columns", a.cols, b.cols)));
    }
    Ok(rref(field, a).reduced == rref(field, b).reduced)
}

/// Incrementally maintained echelon basis of a set of vectors of fixed
/// length, with push/pop for depth-first subset searches.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    // Each basis vector is normalized to 1 at its pivot; stored flat.
    basis: Vec<Elem>,
    pivots: Vec<usize>,
    // For every pushed vector: whether it extended the basis.
    history: Vec<bool>,
    scratch: Vec<Elem>,
}

impl Echelon {
    pub fn new(len: usize) -> Echelon {
        Echelon { len, basis: Vec::new(), pivots: Vec::new(), history: Vec::new(), scratch: vec![Elem::ZERO; len] }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of pushed vectors.
    pub fn depth(&self) -> usize {
        self.history.len()
    }

    /// Whether the pushed vectors are linearly dependent.
    pub fn is_dependent(&self) -> bool {
        self.rank() < self.depth()
    }

    /// Adds a vector; returns true when it was independent of the others.
    pub fn push(&mut self, field: &Field, v: &[Elem]) -> bool {
        debug_assert_eq!(v.len(), self.len);
        self.scratch.copy_from_slice(v);
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = self.scratch[p];
            if f.is_zero() {
                continue;
            }
            let nf = field.neg(f);
            let b = &self.basis[i * self.len..(i + 1) * self.len];
            for (s, &bv) in self.scratch.iter_mut().zip(b) {
                if !bv.is_zero() {
                    *s = field.add(*s, field.mul(nf, bv));
                }
            }
        }
        match self.scratch.iter().position(|e| !e.is_zero()) {
            Some(p) => {
                let inv = field.inv(self.scratch[p]);
                for s in self.scratch.iter_mut() {
                    *s = field.mul(*s, inv);
                }
                self.basis.extend_from_slice(&self.scratch);
                self.pivots.push(p);
                self.history.push(true);
                true
            }
            None => {
                self.history.push(false);
                false
            }
        }
    }

    pub fn pop(&mut self) {
        if let Some(extended) = self.history.pop() {
            if extended {
                self.pivots.pop();
                self.basis.truncate(self.pivots.len() * self.len);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 2).unwrap()
    }

    fn e(i: u32) -> Elem {
        Elem::raw(i)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let f = f4();
        let out = rref_rank_kernel(&f, &Matrix::identity(4)).unwrap();
        assert_eq!(out.rank, 4);
        assert_eq!(out.kernel.rows(), 0);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let f = f4();
        let out = rref_rank_kernel(&f, &Matrix::zeros(2, 3)).unwrap();
        assert_eq!(out.rank, 0);
        assert_eq!(out.kernel, Matrix::identity(3));
    }

    #[test]
    fn proportional_rows_over_f4() {
        let f = f4();
        let w = e(2);
        let w2 = f.mul(w, w);
        let m = Matrix::from_rows(2, &[vec![Elem::ONE, w], vec![w, w2]]).unwrap();
        let out = rref_rank_kernel(&f, &m).unwrap();
        assert_eq!(out.rank, 1);
        assert_eq!(out.kernel.rows(), 1);
        let prod = m.mul(&f, &out.kernel.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn empty_matrix_is_an_error() {
        let f = f4();
        assert!(matches!(rref_rank_kernel(&f, &Matrix::zeros(0, 3)), Err(Error::EmptyMatrix { .. })));
    }

    #[test]
    fn row_space_comparisons() {
        let f = f4();
        let a = Matrix::from_rows(3, &[vec![e(1), e(2), e(0)], vec![e(0), e(1), e(3)]]).unwrap();
        let permuted = a.select_rows(&[1, 0]);
        assert!(row_space_equal(&f, &a, &permuted).unwrap());
        let mut scaled = a.clone();
        for c in 0..3 {
            scaled.set(0, c, f.mul(e(3), a.get(0, c)));
        }
        assert!(row_space_equal(&f, &a, &scaled).unwrap());
        let x = Matrix::from_rows(2, &[vec![e(1), e(0)]]).unwrap();
        let y = Matrix::from_rows(2, &[vec![e(0), e(1)]]).unwrap();
        assert!(!row_space_equal(&f, &x, &y).unwrap());
        assert!(row_space_equal(&f, &x, &a).is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = Field::new(3, 2).unwrap();
        let m = Matrix::from_rows(3, &[vec![e(8), e(0), e(4)], vec![e(1), e(2), e(3)]]).unwrap();
        let text = m.to_text(&f);
        assert!(text.starts_with("2 3 3 2\n"));
        let (back, _) = Matrix::parse_text(&text, &f).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_text(&f), text);
        let f4 = f4();
        assert!(Matrix::parse_text(&text, &f4).is_err());
    }

    #[test]
    fn echelon_push_pop() {
        let f = f4();
        let mut ech = Echelon::new(2);
        assert!(ech.push(&f, &[e(1), e(2)]));
        assert!(!ech.push(&f, &[e(2), e(3)]));
        assert!(ech.is_dependent());
        ech.pop();
        assert!(!ech.is_dependent());
        assert!(ech.push(&f, &[e(0), e(1)]));
        assert_eq!(ech.rank(), 2);
    }
}

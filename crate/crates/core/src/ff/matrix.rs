use std::fmt;

use super::{FieldElement, FiniteField, Poly};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`FiniteField`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        Self::scalar(field, n, field.one())
    }

    pub fn scalar(field: &FiniteField, n: usize, c: FieldElement) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_fn(
        field: &FiniteField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from row-major entries in packed form.
    pub fn from_entries(
        field: &FiniteField,
        rows: usize,
        cols: usize,
        data: Vec<FieldElement>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| e.0 >= field.order()) {
            return Err(Error::InvalidInput(format!(
                "entry {} does not belong to {field}",
                bad.0
            )));
        }
        Ok(Self {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Integer rows reduced into the prime subfield.
    pub fn from_ints(field: &FiniteField, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self::from_fn(field, r, c, |i, j| {
            field.from_int(rows[i][j])
        }))
    }

    pub fn diagonal(field: &FiniteField, diag: &[FieldElement]) -> Self {
        let n = diag.len();
        Self::from_fn(
            field,
            n,
            n,
            |i, j| if i == j { diag[i] } else { field.zero() },
        )
    }

    /// The `m x m` nilpotent Jordan block with ones on the superdiagonal.
    pub fn nilpotent_block(field: &FiniteField, m: usize) -> Self {
        Self::from_fn(field, m, m, |i, j| {
            if j == i + 1 {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// Companion matrix of a monic polynomial of degree >= 1.
    pub fn companion(poly: &Poly) -> Result<Self> {
        let field = poly.field();
        let n = match poly.degree() {
            Some(d) if d >= 1 && poly.is_monic() => d,
            _ => {
                return Err(Error::InvalidInput(
                    "companion needs a monic polynomial of degree >= 1".into(),
                ))
            }
        };
        let c = poly.coeffs();
        Ok(Self::from_fn(field, n, n, |i, j| {
            if j == n - 1 {
                field.neg(c[i])
            } else if i == j + 1 {
                field.one()
            } else {
                field.zero()
            }
        }))
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn row_ints(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).0).collect())
            .collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.0 == 0)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&FiniteField, FieldElement, FieldElement) -> FieldElement,
    ) -> Result<Self> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| op(&self.field, a, b))
            .collect();
        Ok(Self {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = &self.field;
        Self {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(c, x)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(self.field.neg(self.field.one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(&self.field, n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self - c * I`.
    pub fn shift(&self, c: FieldElement) -> Result<Self> {
        let n = self.require_square()?;
        self.sub(&Self::scalar(&self.field, n, c))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            if pr != row {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, row * m.cols + j);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for j in col..m.cols {
                let v = f.mul(inv, m.get(row, j));
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if f.is_zero(factor) {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `cols - rank`.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the right kernel `{x : M x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (pr, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(pr, fc));
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<FieldElement> {
        let n = self.require_square()?;
        let cp = self.charpoly()?;
        // det(M) = (-1)^n chi(0)
        let c0 = cp.coeffs().first().copied().unwrap_or(self.field.zero());
        Ok(if n % 2 == 0 { c0 } else { self.field.neg(c0) })
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let aug = Self::from_fn(&self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.iter().filter(|&&c| c < n).count() != n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(&self.field, n, n, |i, j| r.get(i, n + j)))
    }

    /// Characteristic polynomial `det(T I - M)` by Berkowitz's algorithm,
    /// which uses only ring operations and is therefore valid in every
    /// characteristic.
    pub fn charpoly(&self) -> Result<Poly> {
        let n = self.require_square()?;
        let f = &self.field;
        // Coefficients highest degree first: v = [1, c_1, ..., c_r].
        let mut v = vec![f.one()];
        for r in 0..n {
            // Leading (r+1)x(r+1) block is [[A_r, C], [R, a]].
            let a = self.get(r, r);
            let row: Vec<FieldElement> = (0..r).map(|j| self.get(r, j)).collect();
            let mut col: Vec<FieldElement> = (0..r).map(|i| self.get(i, r)).collect();
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(f.one());
            toeplitz.push(f.neg(a));
            for _ in 0..r {
                let dot = row
                    .iter()
                    .zip(&col)
                    .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                toeplitz.push(f.neg(dot));
                // col <- A_r * col
                col = (0..r)
                    .map(|i| {
                        (0..r).fold(f.zero(), |acc, k| f.add(acc, f.mul(self.get(i, k), col[k])))
                    })
                    .collect();
            }
            let next: Vec<FieldElement> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(f.zero(), |acc, j| f.add(acc, f.mul(toeplitz[i - j], v[j])))
                })
                .collect();
            v = next;
        }
        v.reverse();
        Ok(Poly::new(f, v))
    }

    /// True iff `(M - I)^n = 0`.
    pub fn is_unipotent(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.shift(self.field.one())?.pow(n as u64)?.is_zero())
    }

    /// Block-diagonal assembly; the empty list gives a `0 x 0` matrix over `field`.
    pub fn block_diag(field: &FiniteField, blocks: &[Matrix]) -> Result<Self> {
        for b in blocks {
            if &b.field != field {
                return Err(Error::FieldMismatch);
            }
            b.require_square()?;
        }
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(field, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        Ok(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.display(self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

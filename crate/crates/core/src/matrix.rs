use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::Field;

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: &Arc<Field>, cols: usize, rows: Vec<Vec<u32>>) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            field: Arc::clone(field),
            rows: n,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::LengthMismatch);
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.data[i * other.rows + j] = dot(f, self.row(i), other.row(j));
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Standard (Euclidean) inner product.
pub fn dot(f: &Field, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix {}x{} over GF({})",
            self.rows,
            self.cols,
            self.field.order()
        )
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.iter_rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

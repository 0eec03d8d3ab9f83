//! Dense exact matrices, row reduction, and the subspace/quotient helpers built on it.
//!
//! Linear maps act on column vectors: a map `V → W` is a `dim W × dim V` matrix.
//! Tensor products use the lexicographic basis order with the left leg major.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(short).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn short(s: &Scalar) -> String {
    match s {
        Scalar::Modular { value, .. } => value.to_string(),
        other => other.to_string(),
    }
}

/// Solution set of `m x = b`: `particular + span(nullspace)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub nullspace: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        debug_assert!(data.iter().all(|s| s.field() == field));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Field, rows: &[Vector]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Matrix::from_vec(field, r, c, data)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, &rows)
    }

    /// The matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn column_vector(field: Field, v: Vector) -> Matrix {
        let n = v.len();
        Matrix::from_vec(field, n, 1, v)
    }

    pub fn row_vector(field: Field, v: Vector) -> Matrix {
        let n = v.len();
        Matrix::from_vec(field, 1, n, v)
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, value: &Scalar) {
        let idx = i * self.cols + j;
        self.data[idx] += value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let columns: Vec<Vector> = cols.iter().map(|&j| self.col(j)).collect();
        Matrix::from_columns(self.field, self.rows, &columns)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let rs: Vec<Vector> = rows.iter().map(|&i| self.row(i).to_vec()).collect();
        let mut m = Matrix::from_rows(self.field, &rs);
        if rows.is_empty() {
            m.cols = self.cols;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "{op}: shape {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other, "add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other, "sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix::from_vec(self.field, self.rows, self.cols, data)
    }

    /// Adds `c * other` in place.
    pub fn axpy(&mut self, c: &Scalar, other: &Matrix) {
        self.check_same_shape(other, "axpy");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "mul: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let base = k * other.cols;
                for j in 0..other.cols {
                    let b = &other.data[base + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "mul_vec: {} columns vs length {}", self.cols, v.len());
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product: `(a⊗b)(v⊗w) = a(v)⊗b(w)`, left factor index major.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::from_vec(self.field, self.rows + other.rows, self.cols, data)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack_all(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack_all column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix::from_vec(field, rows, cols, data)
    }

    /// Reduced row echelon form. Pivots are the leftmost nonzero entries, rows
    /// processed top-down. Returns the reduced matrix and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
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
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] = &m.data[idx] * &inv;
                }
            }
            let pivot_row: Vec<Scalar> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if !pivot_row[j].is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] -= &(&factor * &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the nullspace, one vector per free column in increasing order.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    pub fn solve(&self, b: &[Scalar]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} rows vs right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let aug = self.hstack(&Matrix::column_vector(self.field, b.to_vec()));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        let coeff = r.select_columns(&(0..self.cols).collect::<Vec<_>>());
        Ok(Solution {
            particular: x,
            nullspace: kernel_from_rref(&coeff, &pivots),
        })
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "invert: {}x{} is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::NotInvertible);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(r.select_columns(&cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// First entry (row, column) where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        self.check_same_shape(other, "compare");
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Row-major flattening.
    pub fn to_vector(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_vector(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
        Matrix::from_vec(field, rows, cols, v.to_vec())
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vector> {
    let field = r.field;
    let mut is_pivot = vec![false; r.cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..r.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); r.cols];
        v[free] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, free);
        }
        out.push(v);
    }
    out
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// `Σ c_i v_i`.
pub fn linear_combination(field: Field, len: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    assert_eq!(coeffs.len(), vectors.len());
    let mut out = vec![field.zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += &(c * x);
            }
        }
    }
    out
}

/// Coordinates with respect to a linearly independent family of vectors.
#[derive(Debug, Clone)]
pub struct SpanCoordinates {
    dim: usize,
    ambient: usize,
    transform: Matrix,
}

impl SpanCoordinates {
    pub fn new(field: Field, ambient: usize, basis: &[Vector]) -> Result<SpanCoordinates> {
        let v = Matrix::from_columns(field, ambient, basis);
        let aug = v.hstack(&Matrix::identity(field, ambient));
        let (r, pivots) = aug.rref();
        let d = basis.len();
        if pivots.len() < d || pivots[..d].iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::InternalInvariant(
                "basis vectors are linearly dependent".into(),
            ));
        }
        let cols: Vec<usize> = (d..d + ambient).collect();
        Ok(SpanCoordinates {
            dim: d,
            ambient,
            transform: r.select_columns(&cols),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `v`, or `None` when `v` lies outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let w = self.transform.mul_vec(v);
        if w[self.dim..].iter().all(Scalar::is_zero) {
            Some(w[..self.dim].to_vec())
        } else {
            None
        }
    }

    /// Coordinates of every column of `m`; `None` if any column leaves the span.
    pub fn coords_matrix(&self, m: &Matrix) -> Option<Matrix> {
        let w = self.transform.mul(m);
        let outside = (self.dim..self.ambient).any(|i| w.row(i).iter().any(|x| !x.is_zero()));
        if outside {
            return None;
        }
        Some(w.select_rows(&(0..self.dim).collect::<Vec<_>>()))
    }

    /// The linear map sending a vector to its coordinates, ignoring the
    /// component outside the span.
    pub fn left_inverse(&self) -> Matrix {
        self.transform.select_rows(&(0..self.dim).collect::<Vec<_>>())
    }
}

/// A quotient `V / span(relations)` in coordinates: pivot coordinates of the
/// reduced relation matrix are eliminated, the remaining ones form the quotient basis.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    ambient: usize,
    kept: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn new(field: Field, ambient: usize, relations: &[Vector]) -> QuotientSpace {
        let rel = if relations.is_empty() {
            Matrix::zeros(field, 0, ambient)
        } else {
            Matrix::from_rows(field, relations)
        };
        let (r, pivots) = rel.rref();
        let mut is_pivot = vec![false; ambient];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let kept: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
        let q = kept.len();
        let mut projection = Matrix::zeros(field, q, ambient);
        let mut section = Matrix::zeros(field, ambient, q);
        for (k, &c) in kept.iter().enumerate() {
            projection.set(k, c, field.one());
            section.set(c, k, field.one());
        }
        for (i, &p) in pivots.iter().enumerate() {
            for (k, &c) in kept.iter().enumerate() {
                let x = r.get(i, c);
                if !x.is_zero() {
                    projection.set(k, p, -x);
                }
            }
        }
        QuotientSpace {
            ambient,
            kept,
            projection,
            section,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    /// Ambient coordinates that survive as quotient basis vectors.
    pub fn kept_coordinates(&self) -> &[usize] {
        &self.kept
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.projection.mul_vec(v)
    }
}

/// Rows separated by `;`, entries by `,`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows() {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(q(), 2).kernel().is_empty());
    }

    #[test]
    fn kernel_rank_one() {
        let m = Matrix::from_i64(q(), &[&[1, 1], &[2, 2]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], -k[0][1].clone());
        assert!(vec_is_zero(&m.mul_vec(&k[0])));
    }

    #[test]
    fn kernel_over_f2_matches_enumeration() {
        let f2 = Field::Prime(2);
        let m = Matrix::from_i64(f2, &[&[1, 1], &[1, 1]]);
        let brute: Vec<Vector> = (0..4u64)
            .map(|i| vec![f2.element(i & 1), f2.element(i >> 1)])
            .filter(|v| !vec_is_zero(v) && vec_is_zero(&m.mul_vec(v)))
            .collect();
        assert_eq!(m.kernel(), brute);
        assert_eq!(brute, vec![vec![f2.one(), f2.one()]]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(q(), 2);
        let b = vec![q().from_i64(3), q().from_i64(-1)];
        assert_eq!(id.solve(&b).unwrap().particular, b);

        let m = Matrix::from_i64(q(), &[&[1, 1]]);
        let s = m.solve(&[q().one()]).unwrap();
        assert_eq!(s.particular, vec![q().one(), q().zero()]);
        assert_eq!(s.nullspace, vec![vec![q().from_i64(-1), q().one()]]);

        let m = Matrix::from_i64(q(), &[&[1], &[2]]);
        assert!(matches!(m.solve(&[q().one(), q().one()]), Err(Error::NoSolution)));
    }

    #[test]
    fn invert_examples() {
        let m = Matrix::from_i64(q(), &[&[2]]);
        assert_eq!(m.invert().unwrap(), Matrix::from_rows(q(), &[vec![q().from_ratio(1, 2).unwrap()]]));
        let swap = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.invert().unwrap(), swap);
        let f5 = Field::Prime(5);
        assert_eq!(
            Matrix::from_i64(f5, &[&[2]]).invert().unwrap(),
            Matrix::from_i64(f5, &[&[3]])
        );
        assert!(matches!(
            Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]).invert(),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn kron_examples() {
        assert!(Matrix::identity(q(), 2).kron(&Matrix::identity(q(), 3)).is_identity());
        let a = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        assert_eq!(a.kron(&Matrix::from_i64(q(), &[&[1]])), a);

        let swap = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        let k = swap.kron(&swap);
        for i in 0..2 {
            for j in 0..2 {
                let input = unit_vector(q(), 4, i * 2 + j);
                let expected = unit_vector(q(), 4, (1 - i) * 2 + (1 - j));
                assert_eq!(k.mul_vec(&input), expected);
            }
        }
    }

    #[test]
    fn span_coordinates_membership() {
        let basis = vec![
            vec![q().one(), q().one(), q().zero()],
            vec![q().zero(), q().one(), q().one()],
        ];
        let sc = SpanCoordinates::new(q(), 3, &basis).unwrap();
        let v = vec![q().from_i64(2), q().from_i64(5), q().from_i64(3)];
        assert_eq!(sc.coords(&v).unwrap(), vec![q().from_i64(2), q().from_i64(3)]);
        assert!(sc.coords(&[q().one(), q().zero(), q().zero()]).is_none());
    }

    #[test]
    fn quotient_projection_and_section() {
        let rel = vec![vec![q().one(), q().from_i64(-1), q().zero()]];
        let qs = QuotientSpace::new(q(), 3, &rel);
        assert_eq!(qs.dim(), 2);
        assert!(qs.projection().mul(qs.section()).is_identity());
        assert!(vec_is_zero(&qs.project(&rel[0])));
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
            let f = Field::Rationals;
            Matrix::from_vec(f, rows, cols, v.into_iter().map(|x| f.from_i64(x)).collect())
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| small_matrix(r, c))) {
            prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
            for v in m.kernel() {
                prop_assert!(vec_is_zero(&m.mul_vec(&v)));
            }
        }

        #[test]
        fn inverse_is_two_sided(m in small_matrix(3, 3)) {
            match m.invert() {
                Ok(inv) => {
                    prop_assert!(inv.mul(&m).is_identity());
                    prop_assert!(m.mul(&inv).is_identity());
                    prop_assert!(m.kernel().is_empty());
                }
                Err(_) => prop_assert!(!m.kernel().is_empty()),
            }
        }

        #[test]
        fn kron_associative(a in small_matrix(2, 2), b in small_matrix(1, 2), c in small_matrix(2, 1)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn kron_bilinear(a in small_matrix(2, 2), a2 in small_matrix(2, 2), b in small_matrix(2, 3)) {
            prop_assert_eq!(a.add(&a2).kron(&b), a.kron(&b).add(&a2.kron(&b)));
            let two = Field::Rationals.from_i64(2);
            prop_assert_eq!(a.scale(&two).kron(&b), a.kron(&b.scale(&two)));
        }

        #[test]
        fn kron_mixed_product(a in small_matrix(2, 2), b in small_matrix(2, 2), c in small_matrix(2, 2), d in small_matrix(2, 2)) {
            prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        }

        #[test]
        fn rational_round_trip(n in -1000i64..1000, d in 1i64..1000) {
            let f = Field::Rationals;
            let s = f.from_ratio(n, d).unwrap();
            prop_assert_eq!(f.parse_scalar(&s.to_string()).unwrap(), s);
        }
    }
}

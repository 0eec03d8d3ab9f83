//! Finite-dimensional associative algebras given by structure constants.

use crate::error::{Error, Result};
use crate::matrix::{unit_vector, Matrix, SpanCoordinates, Vector};
use crate::report::ValidationReport;
use crate::scalar::{Field, Scalar};

/// An algebra with basis `e_0..e_{n-1}`. Column `i*n + j` of `mul` holds `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    mul: Matrix,
    unit: Vector,
    terms: Vec<Vec<(usize, Scalar)>>,
}

impl Algebra {
    /// Builds an algebra without checking the axioms; see [`Algebra::validate`].
    pub fn new(field: Field, labels: Vec<String>, mul: Matrix, unit: Vector) -> Result<Algebra> {
        let n = labels.len();
        if mul.rows() != n || mul.cols() != n * n || unit.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "algebra of dimension {n} needs an {n}x{} multiplication and a unit of length {n}",
                n * n
            )));
        }
        let terms = (0..n * n)
            .map(|c| {
                (0..n)
                    .filter_map(|k| {
                        let x = mul.get(k, c);
                        (!x.is_zero()).then(|| (k, x.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Algebra {
            field,
            labels,
            mul,
            unit,
            terms,
        })
    }

    /// Builds an algebra from a product rule on basis indices.
    pub fn from_fn<F>(field: Field, labels: Vec<String>, unit: Vector, product: F) -> Result<Algebra>
    where
        F: Fn(usize, usize) -> Vector,
    {
        let n = labels.len();
        let mut mul = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                mul.set_col(i * n + j, &product(i, j));
            }
        }
        Algebra::new(field, labels, mul, unit)
    }

    /// The ground field viewed as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra::from_fn(field, vec!["1".into()], vec![field.one()], |_, _| vec![field.one()])
            .expect("ground field is well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul_matrix(&self) -> &Matrix {
        &self.mul
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// `e_i e_j` as a sparse list of `(k, coefficient)`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.terms[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (k, z) in self.basis_product(i, j) {
                    out[*k] += &(&c * z);
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim(), i)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut report = ValidationReport::default();
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&self.basis(i), &self.basis(j));
                for k in 0..n {
                    let jk = self.mul(&self.basis(j), &self.basis(k));
                    if self.mul(&ij, &self.basis(k)) != self.mul(&self.basis(i), &jk) {
                        report.push("associativity", vec![i, j, k]);
                        break 'assoc;
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                report.push("unit", vec![i]);
                break;
            }
        }
        report
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Two-sided inverse, if it exists.
    pub fn inverse(&self, a: &[Scalar]) -> Option<Vector> {
        let x = self.left_mult(a).solve(&self.unit).ok()?.particular;
        (self.mul(&x, a) == self.unit).then_some(x)
    }

    pub fn is_unit_element(&self, a: &[Scalar]) -> bool {
        self.inverse(a).is_some()
    }

    /// The subalgebra spanned by the given vectors, with its induced structure.
    /// Fails if the span is not closed under multiplication or misses the unit.
    pub fn subalgebra(&self, basis: Vec<Vector>, labels: Vec<String>) -> Result<SubalgebraEmbedding> {
        let field = self.field;
        let n = self.dim();
        let coords = SpanCoordinates::new(field, n, &basis)?;
        let d = basis.len();
        let mut mul = Matrix::zeros(field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&basis[i], &basis[j]);
                let c = coords.coords(&p).ok_or_else(|| {
                    Error::InternalInvariant(format!("subspace not closed under multiplication at ({i}, {j})"))
                })?;
                mul.set_col(i * d + j, &c);
            }
        }
        let unit = coords
            .coords(&self.unit)
            .ok_or_else(|| Error::InternalInvariant("subspace does not contain the unit".into()))?;
        let sub = Algebra::new(field, labels, mul, unit)?;
        let inclusion = Matrix::from_columns(field, n, &basis);
        Ok(SubalgebraEmbedding {
            algebra: sub,
            inclusion,
            coords,
        })
    }
}

/// A subalgebra `B ↪ A` with its inclusion matrix.
#[derive(Debug, Clone)]
pub struct SubalgebraEmbedding {
    algebra: Algebra,
    inclusion: Matrix,
    coords: SpanCoordinates,
}

impl SubalgebraEmbedding {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `ι: B → A` as a `dim A × dim B` matrix.
    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    pub fn include(&self, b: &[Scalar]) -> Vector {
        self.inclusion.mul_vec(b)
    }

    /// Image of the `k`-th basis element of `B` in `A`.
    pub fn basis_image(&self, k: usize) -> Vector {
        self.inclusion.col(k)
    }

    /// Coordinates in `B` of an element of `A`, if it lies in `B`.
    pub fn restrict(&self, a: &[Scalar]) -> Option<Vector> {
        self.coords.coords(a)
    }

    pub fn coordinates(&self) -> &SpanCoordinates {
        &self.coords
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers(field: Field) -> Algebra {
        // basis 1, x with x^2 = 0
        Algebra::from_fn(field, vec!["1".into(), "x".into()], unit_vector(field, 2, 0), |i, j| {
            if i + j >= 2 {
                vec![field.zero(), field.zero()]
            } else {
                unit_vector(field, 2, i + j)
            }
        })
        .unwrap()
    }

    #[test]
    fn dual_numbers_validate() {
        let a = dual_numbers(Field::Rationals);
        assert!(a.validate().passed());
        assert!(a.is_commutative());
        assert!(a.inverse(&a.basis(1)).is_none());
        let one_plus_x = vec![Field::Rationals.one(), Field::Rationals.one()];
        let inv = a.inverse(&one_plus_x).unwrap();
        assert_eq!(inv, vec![Field::Rationals.one(), Field::Rationals.from_i64(-1)]);
    }

    #[test]
    fn broken_unit_is_reported() {
        let f = Field::Rationals;
        let a = Algebra::from_fn(f, vec!["1".into(), "x".into()], unit_vector(f, 2, 1), |i, j| {
            if i + j >= 2 {
                vec![f.zero(), f.zero()]
            } else {
                unit_vector(f, 2, i + j)
            }
        })
        .unwrap();
        let r = a.validate();
        assert!(!r.passed());
        assert_eq!(r.violations[0].axiom, "unit");
    }
}

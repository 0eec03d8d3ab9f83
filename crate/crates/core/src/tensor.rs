//! Index bookkeeping for tensor products and a few generic linear-map builders.

use crate::matrix::{Matrix, Vector};
use crate::scalar::Field;

/// Flat index of a multi-index, left leg major.
pub fn encode(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

pub fn decode(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    idx
}

fn permuted_index(dims: &[usize], perm: &[usize], flat_in: usize) -> usize {
    let idx = decode(dims, flat_in);
    let out_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    encode(&out_dims, &out_idx)
}

/// The linear map rearranging tensor legs: output leg `k` is input leg `perm[k]`.
pub fn permute_legs(field: Field, dims: &[usize], perm: &[usize]) -> Matrix {
    let n: usize = dims.iter().product();
    let mut m = Matrix::zeros(field, n, n);
    for flat in 0..n {
        m.set(permuted_index(dims, perm, flat), flat, field.one());
    }
    m
}

/// `permute_legs(dims, perm) · m`, computed without materializing the permutation.
pub fn permute_rows(m: &Matrix, dims: &[usize], perm: &[usize]) -> Matrix {
    let n: usize = dims.iter().product();
    assert_eq!(m.rows(), n, "permute_rows: leg dimensions do not match row count");
    let mut out = Matrix::zeros(m.field(), n, m.cols());
    for flat in 0..n {
        let target = permuted_index(dims, perm, flat);
        for j in 0..m.cols() {
            let x = m.get(flat, j);
            if !x.is_zero() {
                out.set(target, j, x.clone());
            }
        }
    }
    out
}

/// The flip `V⊗W → W⊗V`.
pub fn swap(field: Field, a: usize, b: usize) -> Matrix {
    permute_legs(field, &[a, b], &[1, 0])
}

/// Unit matrix `E_kl` of the given shape.
pub fn unit_matrix(field: Field, rows: usize, cols: usize, k: usize, l: usize) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    m.set(k, l, field.one());
    m
}

/// Matrix of a linear operator on `rows × cols` matrices, found by probing it on
/// the unit matrices. Inputs and outputs are flattened row-major; the output
/// shapes of all probes must agree.
pub fn operator_matrix<F>(field: Field, rows: usize, cols: usize, op: F) -> Matrix
where
    F: Fn(&Matrix) -> Matrix,
{
    let mut columns: Vec<Vector> = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        for l in 0..cols {
            columns.push(op(&unit_matrix(field, rows, cols, k, l)).to_vector());
        }
    }
    let out_len = columns.first().map_or(0, Vec::len);
    Matrix::from_columns(field, out_len, &columns)
}

/// Basis of `{X : op(X) = 0}` for a linear operator on `rows × cols` matrices.
pub fn solution_space<F>(field: Field, rows: usize, cols: usize, op: F) -> Vec<Matrix>
where
    F: Fn(&Matrix) -> Matrix,
{
    operator_matrix(field, rows, cols, op)
        .kernel()
        .into_iter()
        .map(|v| Matrix::from_vector(field, rows, cols, &v))
        .collect()
}

/// Matrix with a single column extracted from `m` as a row selector: the map
/// `V⊗W → V` picking the `w`-th component of the right leg.
pub fn right_leg_component(field: Field, v: usize, w_dim: usize, w: usize) -> Matrix {
    let mut m = Matrix::zeros(field, v, v * w_dim);
    for i in 0..v {
        m.set(i, i * w_dim + w, field.one());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unit_vector;

    #[test]
    fn encode_decode_round_trip() {
        let dims = [2, 3, 4];
        for flat in 0..24 {
            assert_eq!(encode(&dims, &decode(&dims, flat)), flat);
        }
        assert_eq!(encode(&dims, &[1, 2, 3]), 23);
    }

    #[test]
    fn permutation_moves_legs() {
        let f = Field::Rationals;
        let dims = [2, 3, 2];
        let p = permute_legs(f, &dims, &[2, 0, 1]);
        let input = unit_vector(f, 12, encode(&dims, &[1, 2, 0]));
        let expected = unit_vector(f, 12, encode(&[2, 2, 3], &[0, 1, 2]));
        assert_eq!(p.mul_vec(&input), expected);
        let m = Matrix::identity(f, 12);
        assert_eq!(permute_rows(&m, &dims, &[2, 0, 1]), p);
    }

    #[test]
    fn swap_squares_to_identity() {
        let f = Field::Prime(3);
        let s = swap(f, 2, 3);
        assert!(swap(f, 3, 2).mul(&s).is_identity());
    }

    #[test]
    fn operator_matrix_of_transpose_kernel() {
        let f = Field::Rationals;
        // X - X^T = 0 on 2x2 matrices: symmetric matrices, dimension 3.
        let sym = solution_space(f, 2, 2, |x| x.sub(&x.transpose()));
        assert_eq!(sym.len(), 3);
        for s in sym {
            assert_eq!(s, s.transpose());
        }
    }
}

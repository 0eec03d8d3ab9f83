//! Hopf algebras with bijective antipode, given by structure constants.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::{unit_vector, Matrix, Vector};
use crate::report::ValidationReport;
use crate::scalar::{Field, Scalar};
use crate::tensor::{decode, encode, swap};

/// Sweedler term `c · h_(1) ⊗ h_(2)` of a comultiplication.
pub type ComulTerm = (Scalar, usize, usize);

#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    algebra: Algebra,
    comul: Matrix,
    counit: Vector,
    antipode: Matrix,
    antipode_inv: Matrix,
    terms: Vec<Vec<ComulTerm>>,
}

impl HopfAlgebra {
    /// Assembles the data after checking shapes. Axioms are checked by [`HopfAlgebra::validate`].
    pub fn new(
        algebra: Algebra,
        comul: Matrix,
        counit: Vector,
        antipode: Matrix,
        antipode_inv: Matrix,
    ) -> Result<HopfAlgebra> {
        let n = algebra.dim();
        if comul.rows() != n * n || comul.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication must be {}x{n}, got {}x{}",
                n * n,
                comul.rows(),
                comul.cols()
            )));
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch(format!("counit must have length {n}")));
        }
        for (name, m) in [("antipode", &antipode), ("inverse antipode", &antipode_inv)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!("{name} must be {n}x{n}")));
            }
        }
        let terms = (0..n)
            .map(|c| {
                (0..n * n)
                    .filter_map(|r| {
                        let x = comul.get(r, c);
                        (!x.is_zero()).then(|| (x.clone(), r / n, r % n))
                    })
                    .collect()
            })
            .collect();
        Ok(HopfAlgebra {
            algebra,
            comul,
            counit,
            antipode,
            antipode_inv,
            terms,
        })
    }

    /// Like [`HopfAlgebra::new`] with the inverse antipode computed by matrix inversion.
    pub fn with_computed_inverse(
        algebra: Algebra,
        comul: Matrix,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        let inv = antipode.invert()?;
        HopfAlgebra::new(algebra, comul, counit, antipode, inv)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn comul_matrix(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field(), self.dim(), i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    /// Sweedler terms of `Δ(e_i)`.
    pub fn comul_terms(&self, i: usize) -> &[ComulTerm] {
        &self.terms[i]
    }

    pub fn comul(&self, x: &[Scalar]) -> Vector {
        self.comul.mul_vec(x)
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let mut s = self.field().zero();
        for (a, b) in x.iter().zip(&self.counit) {
            if !a.is_zero() && !b.is_zero() {
                s += &(a * b);
            }
        }
        s
    }

    pub fn counit_row(&self) -> Matrix {
        Matrix::row_vector(self.field(), self.counit.clone())
    }

    pub fn unit_column(&self) -> Matrix {
        Matrix::column_vector(self.field(), self.unit().clone())
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vector {
        self.antipode.mul_vec(x)
    }

    /// `η∘ε: H → H`.
    pub fn unit_counit(&self) -> Matrix {
        self.unit_column().mul(&self.counit_row())
    }

    /// Iterated comultiplication `H → H^{⊗r}`, computed by left-nested Δ.
    pub fn comul_iterated(&self, x: &[Scalar], arity: usize) -> Vector {
        assert!(arity >= 1, "arity must be at least 1");
        let n = self.dim();
        let mut v = x.to_vec();
        for r in 1..arity {
            let dims = vec![n; r];
            let mut next = vec![self.field().zero(); n.pow(r as u32 + 1)];
            for (flat, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let idx = decode(&dims, flat);
                for (d, a, b) in self.comul_terms(idx[0]) {
                    let mut out = vec![*a, *b];
                    out.extend_from_slice(&idx[1..]);
                    next[encode(&vec![n; r + 1], &out)] += &(c * d);
                }
            }
            v = next;
        }
        v
    }

    /// Nonzero terms `(c, [i_1, …, i_r])` of `Δ^{(r)}(x)`.
    pub fn sweedler(&self, x: &[Scalar], arity: usize) -> Vec<(Scalar, Vec<usize>)> {
        let dims = vec![self.dim(); arity];
        self.comul_iterated(x, arity)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, c)| (c, decode(&dims, flat)))
            .collect()
    }

    pub fn comul_iterated_matrix(&self, arity: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.comul_iterated(&self.basis(i), arity)).collect();
        Matrix::from_columns(self.field(), n.pow(arity as u32), &cols)
    }

    /// Convolution `f*g = μ(f⊗g)Δ` of two linear maps `H → H`.
    pub fn convolve_endomorphisms(&self, f: &Matrix, g: &Matrix) -> Matrix {
        self.algebra
            .mul_matrix()
            .mul(&f.kron(g))
            .mul(&self.comul)
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        swap(self.field(), n, n).mul(&self.comul) == self.comul
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let f = self.field();
        let mut report = self.algebra.validate();
        let id = Matrix::identity(f, n);

        let left = self.comul.kron(&id).mul(&self.comul);
        let right = id.kron(&self.comul).mul(&self.comul);
        if let Some((_, j)) = left.first_difference(&right) {
            report.push("coassociativity", vec![j]);
        }
        let eps = self.counit_row();
        for (name, m) in [
            ("counit (left)", eps.kron(&id).mul(&self.comul)),
            ("counit (right)", id.kron(&eps).mul(&self.comul)),
        ] {
            if let Some((_, j)) = m.first_difference(&id) {
                report.push(name, vec![j]);
            }
        }

        let mul_hh = self.tensor_square_mul();
        'mult: for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&self.basis(i), &self.basis(j));
                let lhs = self.comul(&prod);
                let rhs = mul_hh.mul_vec(&kron_vec(&self.comul.col(i), &self.comul.col(j)));
                if lhs != rhs {
                    report.push("comultiplication is multiplicative", vec![i, j]);
                    break 'mult;
                }
                if self.counit_of(&prod) != &self.counit[i] * &self.counit[j] {
                    report.push("counit is multiplicative", vec![i, j]);
                    break 'mult;
                }
            }
        }
        let one = self.unit().clone();
        if self.comul(&one) != kron_vec(&one, &one) {
            report.push("comultiplication is unital", vec![]);
        }
        if !self.counit_of(&one).is_one() {
            report.push("counit is unital", vec![]);
        }

        let ee = self.unit_counit();
        for (name, m) in [
            ("antipode (S*id)", self.convolve_endomorphisms(&self.antipode, &id)),
            ("antipode (id*S)", self.convolve_endomorphisms(&id, &self.antipode)),
        ] {
            if let Some((_, j)) = m.first_difference(&ee) {
                report.push(name, vec![j]);
            }
        }
        for m in [
            self.antipode.mul(&self.antipode_inv),
            self.antipode_inv.mul(&self.antipode),
        ] {
            if let Some((_, j)) = m.first_difference(&id) {
                report.push("inverse antipode", vec![j]);
            }
        }
        report
    }

    /// Multiplication of the algebra `H⊗H` as an `n² × n⁴` matrix.
    fn tensor_square_mul(&self) -> Matrix {
        let n = self.dim();
        let f = self.field();
        let mu = self.algebra.mul_matrix();
        // (a⊗b)(c⊗d) = ac⊗bd: reorder legs (a,b,c,d) -> (a,c,b,d) then μ⊗μ.
        let perm = crate::tensor::permute_legs(f, &[n, n, n, n], &[0, 2, 1, 3]);
        mu.kron(mu).mul(&perm)
    }

    /// Checks `S(ab) = S(b)S(a)` on all basis pairs.
    pub fn antipode_is_antimultiplicative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.antipode_of(&self.mul(&self.basis(i), &self.basis(j)));
                let rhs = self.mul(&self.antipode.col(j), &self.antipode.col(i));
                lhs == rhs
            })
        })
    }

    /// The one-dimensional Hopf algebra `k`.
    pub fn trivial(field: Field) -> HopfAlgebra {
        let alg = Algebra::ground(field);
        let one = Matrix::identity(field, 1);
        HopfAlgebra::new(alg, one.clone(), vec![field.one()], one.clone(), one)
            .expect("trivial Hopf algebra is well formed")
    }

    /// Group algebra `kG` of a group given by its Cayley table.
    pub fn group_algebra(field: Field, cayley: &[Vec<usize>], labels: Vec<String>) -> Result<HopfAlgebra> {
        let g = GroupTable::new(cayley)?;
        let n = g.order();
        check_labels(&labels, n)?;
        let alg = Algebra::from_fn(field, labels, unit_vector(field, n, g.identity), |i, j| {
            unit_vector(field, n, g.mul(i, j))
        })?;
        let mut comul = Matrix::zeros(field, n * n, n);
        let mut antipode = Matrix::zeros(field, n, n);
        for i in 0..n {
            comul.set(i * n + i, i, field.one());
            antipode.set(g.inverse(i), i, field.one());
        }
        HopfAlgebra::with_computed_inverse(alg, comul, vec![field.one(); n], antipode)
    }

    /// Dual group algebra `(kG)*` in the basis of point masses `p_g`.
    pub fn dual_group_algebra(field: Field, cayley: &[Vec<usize>], labels: Vec<String>) -> Result<HopfAlgebra> {
        let g = GroupTable::new(cayley)?;
        let n = g.order();
        check_labels(&labels, n)?;
        let alg = Algebra::from_fn(field, labels, vec![field.one(); n], |i, j| {
            if i == j {
                unit_vector(field, n, i)
            } else {
                vec![field.zero(); n]
            }
        })?;
        let mut comul = Matrix::zeros(field, n * n, n);
        let mut antipode = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                comul.set(i * n + j, g.mul(i, j), field.one());
            }
            antipode.set(g.inverse(i), i, field.one());
        }
        HopfAlgebra::with_computed_inverse(alg, comul, unit_vector(field, n, g.identity), antipode)
    }

    /// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
    /// `g² = 1`, `x² = 0`, `xg = -gx`, `Δx = x⊗1 + g⊗x`, `S(x) = -gx`.
    pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
        if field.characteristic() == 2 {
            return Err(Error::BadCharacteristic {
                characteristic: 2,
                reason: "Sweedler's algebra needs characteristic different from 2".into(),
            });
        }
        let labels = vec!["1".into(), "g".into(), "x".into(), "gx".into()];
        // basis index a + 2b stands for g^a x^b
        let alg = Algebra::from_fn(field, labels, unit_vector(field, 4, 0), |i, j| {
            let (a, b) = (i % 2, i / 2);
            let (c, d) = (j % 2, j / 2);
            let mut v = vec![field.zero(); 4];
            if b + d < 2 {
                let sign = if b * c == 1 { -1 } else { 1 };
                v[(a + c) % 2 + 2 * (b + d)] = field.from_i64(sign);
            }
            v
        })?;
        let mut comul = Matrix::zeros(field, 16, 4);
        let one = field.one();
        comul.set(0, 0, one.clone());
        comul.set(5, 1, one.clone());
        comul.set(2 * 4, 2, one.clone()); // x⊗1
        comul.set(4 + 2, 2, one.clone()); // g⊗x
        comul.set(3 * 4 + 1, 3, one.clone()); // gx⊗g
        comul.set(3, 3, one); // 1⊗gx
        let antipode = Matrix::from_i64(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        HopfAlgebra::with_computed_inverse(alg, comul, vec![field.one(), field.one(), field.zero(), field.zero()], antipode)
    }
}

fn check_labels(labels: &[String], n: usize) -> Result<()> {
    if labels.len() != n {
        return Err(Error::DimensionMismatch(format!("{} labels for a group of order {n}", labels.len())));
    }
    Ok(())
}

pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// A validated finite group multiplication table.
#[derive(Debug, Clone)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    pub fn new(cayley: &[Vec<usize>]) -> Result<GroupTable> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if cayley.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table must be square with entries below its order".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| cayley[a][b] == identity && cayley[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(GroupTable {
            table: cayley.to_vec(),
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let t: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupTable::new(&t).expect("cyclic table is a group")
    }

    /// The symmetric group on three letters, elements listed as permutations of (0 1 2).
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let t: Vec<Vec<usize>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        let (a, b) = (perms[i], perms[j]);
                        idx([a[b[0]], a[b[1]], a[b[2]]])
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(&t).expect("S_3 table is a group")
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }
}

/// Labels `1, g, g^2, …` for a cyclic group.
pub fn cyclic_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect()
}

pub fn cyclic_group_algebra(field: Field, n: usize) -> HopfAlgebra {
    HopfAlgebra::group_algebra(field, GroupTable::cyclic(n).table(), cyclic_labels(n))
        .expect("cyclic group algebra is well formed")
}

pub fn cyclic_dual_group_algebra(field: Field, n: usize) -> HopfAlgebra {
    let labels = cyclic_labels(n).into_iter().map(|l| format!("p_{l}")).collect();
    HopfAlgebra::dual_group_algebra(field, GroupTable::cyclic(n).table(), labels)
        .expect("dual cyclic group algebra is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn group_algebra_c2_validates() {
        let h = cyclic_group_algebra(q(), 2);
        assert!(h.validate().passed(), "{}", h.validate().summary());
        assert!(h.antipode().is_identity());
        assert!(h.is_cocommutative());
    }

    #[test]
    fn zero_antipode_fails_at_antipode_axiom() {
        let h = cyclic_group_algebra(q(), 2);
        let broken = HopfAlgebra::new(
            h.algebra().clone(),
            h.comul_matrix().clone(),
            h.counit().clone(),
            Matrix::zeros(q(), 2, 2),
            Matrix::zeros(q(), 2, 2),
        )
        .unwrap();
        let r = broken.validate();
        assert!(!r.passed());
        assert!(r.violations[0].axiom.starts_with("antipode"));
    }

    #[test]
    fn sweedler_h4_over_f5_validates_against_expanded_axioms() {
        let f5 = Field::Prime(5);
        let h = HopfAlgebra::sweedler_h4(f5).unwrap();
        assert!(h.validate().passed(), "{}", h.validate().summary());
        // Independent expansion of S * id = ηε on the generators.
        // (S*id)(x) = S(x)·1 + S(g)·x = -gx + gx = 0 = ε(x)1.
        let sx = h.antipode_of(&h.basis(2));
        let sg = h.antipode_of(&h.basis(1));
        let lhs: Vec<Scalar> = sx
            .iter()
            .zip(h.mul(&sg, &h.basis(2)))
            .map(|(a, b)| a + &b)
            .collect();
        assert!(lhs.iter().all(Scalar::is_zero));
    }

    #[test]
    fn sweedler_h4_square_of_antipode_is_not_identity() {
        let h = HopfAlgebra::sweedler_h4(q()).unwrap();
        assert!(h.validate().passed());
        assert!(!h.antipode().mul(h.antipode()).is_identity());
        assert!(!h.is_cocommutative());
        assert!(h.antipode_is_antimultiplicative());
    }

    #[test]
    fn sweedler_needs_odd_characteristic() {
        assert!(matches!(
            HopfAlgebra::sweedler_h4(Field::Prime(2)),
            Err(Error::BadCharacteristic { .. })
        ));
    }

    #[test]
    fn comul_iterated_examples() {
        let h = HopfAlgebra::sweedler_h4(q()).unwrap();
        let x = h.basis(2);
        assert_eq!(h.comul_iterated(&x, 1), x);
        let mut expected = vec![q().zero(); 16];
        expected[2 * 4] = q().one();
        expected[4 + 2] = q().one();
        assert_eq!(h.comul_iterated(&x, 2), expected);
        let g = h.basis(1);
        let mut ggg = vec![q().zero(); 64];
        ggg[encode(&[4, 4, 4], &[1, 1, 1])] = q().one();
        assert_eq!(h.comul_iterated(&g, 3), ggg);
        let n = h.dim();
        let id = Matrix::identity(q(), n);
        let right = id.kron(h.comul_matrix()).mul(h.comul_matrix());
        assert_eq!(h.comul_iterated_matrix(3), right);
    }

    #[test]
    fn dual_group_algebra_c2() {
        let h = cyclic_dual_group_algebra(q(), 2);
        assert!(h.validate().passed());
        let mut d1 = vec![q().zero(); 4];
        d1[0] = q().one();
        d1[3] = q().one();
        assert_eq!(h.comul(&h.basis(0)), d1);
    }

    #[test]
    fn dual_group_algebra_cocommutativity() {
        let c3 = cyclic_dual_group_algebra(q(), 3);
        assert!(c3.validate().passed());
        assert!(c3.is_cocommutative());
        let labels = (0..6).map(|i| format!("p{i}")).collect();
        let s3 = HopfAlgebra::dual_group_algebra(q(), GroupTable::symmetric3().table(), labels).unwrap();
        assert!(s3.validate().passed());
        assert!(!s3.is_cocommutative());
        assert!(s3.is_commutative());
    }

    #[test]
    fn non_group_table_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            HopfAlgebra::group_algebra(q(), &t, cyclic_labels(2)),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn every_generated_fixture_is_antimultiplicative() {
        for h in [
            cyclic_group_algebra(q(), 4),
            cyclic_dual_group_algebra(q(), 4),
            HopfAlgebra::sweedler_h4(Field::Prime(3)).unwrap(),
            HopfAlgebra::trivial(q()),
        ] {
            assert!(h.validate().passed());
            assert!(h.antipode_is_antimultiplicative());
        }
    }
}

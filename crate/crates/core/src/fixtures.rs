//! Small worked examples used by the tests, the examples and the command line tool.

use crate::algebra::Algebra;
use crate::cleft::CrossedData;
use crate::comodule::{ComoduleAlgebra, RightModule};
use crate::hopf::{cyclic_group_algebra, HopfAlgebra};
use crate::io::Bundle;
use crate::matrix::{unit_vector, Matrix};
use crate::scalar::{Field, Scalar};

/// The 2×2 matrix algebra with basis `e11, e12, e21, e22` (index `2i + j`).
pub fn matrix_algebra_m2(field: Field) -> Algebra {
    let labels = ["e11", "e12", "e21", "e22"].map(String::from).to_vec();
    Algebra::from_fn(field, labels, vec![field.one(), field.zero(), field.zero(), field.one()], |p, q| {
        let (i, j) = (p / 2, p % 2);
        let (k, l) = (q / 2, q % 2);
        if j == k {
            unit_vector(field, 4, 2 * i + l)
        } else {
            vec![field.zero(); 4]
        }
    })
    .expect("M_2 is well formed")
}

/// `M_2` graded by `C_2`: diagonal entries in degree 1, off-diagonal entries in degree `g`.
pub fn graded_m2(field: Field) -> ComoduleAlgebra {
    let h = cyclic_group_algebra(field, 2);
    let a = matrix_algebra_m2(field);
    let mut rho = Matrix::zeros(field, 8, 4);
    for (p, deg) in [(0, 0), (1, 1), (2, 1), (3, 0)] {
        rho.set(p * 2 + deg, p, field.one());
    }
    ComoduleAlgebra::new(h, a, rho).expect("graded M_2 is a comodule algebra")
}

/// The simple module `k` over the diagonal of graded `M_2`: `e11` acts by 1, `e22` by 0.
pub fn graded_m2_simple_module(ca: &ComoduleAlgebra) -> RightModule {
    let field = ca.field();
    let b = ca.coinvariants();
    let chi: Vec<_> = (0..b.dim())
        .map(|k| {
            if b.basis_image(k) == unit_vector(field, 4, 0) {
                field.one()
            } else {
                field.zero()
            }
        })
        .collect();
    RightModule::from_character(b.algebra(), &chi).expect("character module is well formed")
}

/// Dual numbers `k[x]/(x²)` graded by `C_2` with `x` in degree `g`. Not Galois.
pub fn graded_dual_numbers(field: Field) -> ComoduleAlgebra {
    let h = cyclic_group_algebra(field, 2);
    let a = dual_numbers(field);
    let mut rho = Matrix::zeros(field, 4, 2);
    rho.set(0, 0, field.one());
    rho.set(3, 1, field.one());
    ComoduleAlgebra::new(h, a, rho).expect("graded dual numbers form a comodule algebra")
}

pub fn dual_numbers(field: Field) -> Algebra {
    Algebra::from_fn(field, vec!["1".into(), "x".into()], unit_vector(field, 2, 0), |i, j| {
        if i + j >= 2 {
            vec![field.zero(); 2]
        } else {
            unit_vector(field, 2, i + j)
        }
    })
    .expect("dual numbers are well formed")
}

/// `k×k` with basis of idempotents `e1, e2`.
pub fn split_pair(field: Field) -> Algebra {
    Algebra::from_fn(field, vec!["e1".into(), "e2".into()], vec![field.one(), field.one()], |i, j| {
        if i == j {
            unit_vector(field, 2, i)
        } else {
            vec![field.zero(); 2]
        }
    })
    .expect("k×k is well formed")
}

/// `k×k` with the trivial `kC_2`-coaction. Coinvariants are everything; not Galois.
pub fn trivial_kxk(field: Field) -> ComoduleAlgebra {
    ComoduleAlgebra::trivial(&cyclic_group_algebra(field, 2), split_pair(field))
        .expect("trivial coaction is a comodule algebra")
}

/// Sweedler's Hopf algebra coacting on itself.
pub fn h4_regular(field: Field) -> crate::Result<ComoduleAlgebra> {
    Ok(ComoduleAlgebra::regular(&HopfAlgebra::sweedler_h4(field)?))
}

pub fn kc2_regular(field: Field) -> ComoduleAlgebra {
    ComoduleAlgebra::regular(&cyclic_group_algebra(field, 2))
}

/// The module `k` over the one-dimensional coinvariants.
pub fn ground_module(ca: &ComoduleAlgebra) -> RightModule {
    let b = ca.coinvariants().algebra();
    assert_eq!(b.dim(), 1, "ground module needs one-dimensional coinvariants");
    RightModule::regular(b)
}

pub fn kc4_regular(field: Field) -> ComoduleAlgebra {
    ComoduleAlgebra::regular(&cyclic_group_algebra(field, 4))
}

/// `(kC_2)*` coacting on itself.
pub fn dual_kc2_regular(field: Field) -> ComoduleAlgebra {
    ComoduleAlgebra::regular(&crate::hopf::cyclic_dual_group_algebra(field, 2))
}

/// `k#_σ kC_2` with `σ(g⊗g) = c`, i.e. `k[x]/(x² - c)` graded by `C_2`.
pub fn crossed_product_data(field: Field, c: &Scalar) -> crate::Result<CrossedData> {
    let h = cyclic_group_algebra(field, 2);
    let b = Algebra::ground(field);
    let mut sigma = CrossedData::trivial_cocycle(&h, &b);
    sigma.set(0, 3, c.clone());
    CrossedData::new(h.clone(), b.clone(), CrossedData::trivial_action(&h, &b), sigma, None)
}

pub fn crossed_product(field: Field, c: &Scalar) -> crate::Result<ComoduleAlgebra> {
    crossed_product_data(field, c)?.build()
}

/// Trivial action of `kC_4` on `k` with `σ(g⊗g) = 2` and every other value 1.
/// Normalized and invertible but not a cocycle.
pub fn broken_cocycle_data(field: Field) -> crate::Result<CrossedData> {
    let h = cyclic_group_algebra(field, 4);
    let b = Algebra::ground(field);
    let mut sigma = CrossedData::trivial_cocycle(&h, &b);
    sigma.set(0, 5, field.from_i64(2));
    CrossedData::new(h.clone(), b.clone(), CrossedData::trivial_action(&h, &b), sigma, None)
}

/// Names accepted by [`builtin`]. `cp:<c>` takes any scalar `c`.
pub const BUILTIN_NAMES: &[&str] = &[
    "kc2",
    "kc4",
    "dual_kc2",
    "h4",
    "h4_f5",
    "m2_graded",
    "cp_minus1",
    "cp:<c>",
    "trivial_kxk",
    "dual_numbers",
    "broken_cocycle",
];

/// A built-in fixture as a bundle. Fixtures are defined over ℚ unless the name
/// says otherwise; `field` overrides that.
pub fn builtin(name: &str, field: Option<Field>) -> crate::Result<Bundle> {
    let q = field.unwrap_or(Field::Rationals);
    let mut bundle = Bundle::new(q);
    match name {
        "kc2" | "kc4" | "dual_kc2" | "h4" | "h4_f5" => {
            let (hname, ca) = match name {
                "kc2" => ("kC2", kc2_regular(q)),
                "kc4" => ("kC4", kc4_regular(q)),
                "dual_kc2" => ("dual_kC2", dual_kc2_regular(q)),
                "h4" => ("H4", h4_regular(q)?),
                _ => ("H4", h4_regular(field.unwrap_or(Field::Prime(5)))?),
            };
            if name == "h4_f5" {
                bundle = Bundle::new(ca.field());
            }
            let k = ground_module(&ca);
            bundle.add_hopf(hname, ca.hopf().clone());
            bundle.add_comodule_algebra(name, hname, ca)?;
            bundle.add_module("k", name, k)?;
        }
        "m2_graded" => {
            let ca = graded_m2(q);
            let simple = graded_m2_simple_module(&ca);
            let regular = ca.regular_base_module();
            bundle.add_hopf("kC2", ca.hopf().clone());
            bundle.add_comodule_algebra(name, "kC2", ca)?;
            bundle.add_module("B", name, regular)?;
            bundle.add_module("k", name, simple)?;
        }
        "trivial_kxk" | "dual_numbers" => {
            let ca = if name == "trivial_kxk" {
                trivial_kxk(q)
            } else {
                graded_dual_numbers(q)
            };
            bundle.add_hopf("kC2", ca.hopf().clone());
            bundle.add_comodule_algebra(name, "kC2", ca)?;
        }
        "broken_cocycle" => {
            let data = broken_cocycle_data(q)?;
            bundle.add_hopf("kC4", data.hopf().clone());
            bundle.add_crossed_data(name, "kC4", data)?;
        }
        _ => {
            let c = match name {
                "cp_minus1" => q.from_i64(-1),
                _ => {
                    let text = name
                        .strip_prefix("cp:")
                        .ok_or_else(|| crate::Error::Parse(format!("unknown fixture {name:?}; known: {}", BUILTIN_NAMES.join(", "))))?;
                    q.parse_scalar(text).map_err(|e| crate::Error::Parse(e.to_string()))?
                }
            };
            let data = crossed_product_data(q, &c)?;
            let ca = data.build()?;
            bundle.add_hopf("kC2", data.hopf().clone());
            bundle.add_crossed_data("cp", "kC2", data)?;
            bundle.add_comodule_algebra("cp", "kC2", ca)?;
        }
    }
    Ok(bundle)
}

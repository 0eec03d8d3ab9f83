//! JSON bundles of named Hopf algebras, comodule algebras, modules and crossed data.
//!
//! Tensors are stored sparsely. With `n` the dimension of the algebra in question:
//!
//! - `mul`: `[i, j, k, "c"]` means `e_i e_j` has coefficient `c` at `e_k`;
//! - `comul`: `[i, j, k, "c"]` means `Δ(e_i)` has coefficient `c` at `e_j⊗e_k`;
//! - `antipode`: `[i, j, "c"]` means `S(e_i)` has coefficient `c` at `e_j`;
//! - `coaction`: `[i, j, k, "c"]` means `ρ(e_i)` has coefficient `c` at `e_j⊗h_k`;
//! - module `action`: `[m, b, n, "c"]` means `e_m·b_b` has coefficient `c` at `e_n`,
//!   where `b_b` runs over the computed basis of the coinvariants;
//! - crossed `action`: `[h, b, d, "c"]` means `h·b` has coefficient `c` at `e_d`;
//! - `cocycle`: `[h, k, b, "c"]` means `σ(h⊗k)` has coefficient `c` at `e_b`.
//!
//! Scalars use the text format of [`Field::parse_scalar`].

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::cleft::CrossedData;
use crate::comodule::{ComoduleAlgebra, RightModule};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matrix::{Matrix, Vector};
use crate::scalar::{Field, Scalar};

type Entry3 = (usize, usize, usize, String);
type Entry2 = (usize, usize, String);

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleFile {
    field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    hopf_algebras: BTreeMap<String, HopfRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    comodule_algebras: BTreeMap<String, ComoduleRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    modules: BTreeMap<String, ModuleRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    crossed_data: BTreeMap<String, CrossedRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraRecord {
    labels: Vec<String>,
    mul: Vec<Entry3>,
    unit: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfRecord {
    labels: Vec<String>,
    mul: Vec<Entry3>,
    unit: Vec<String>,
    comul: Vec<Entry3>,
    counit: Vec<String>,
    antipode: Vec<Entry2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode_inv: Option<Vec<Entry2>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComoduleRecord {
    hopf: String,
    algebra: AlgebraRecord,
    coaction: Vec<Entry3>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleRecord {
    comodule_algebra: String,
    dim: usize,
    action: Vec<Entry3>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossedRecord {
    hopf: String,
    base: AlgebraRecord,
    action: Vec<Entry3>,
    cocycle: Vec<Entry3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cocycle_inv: Option<Vec<Entry3>>,
}

#[derive(Debug, Clone)]
pub struct NamedComodule {
    pub hopf: String,
    pub ca: ComoduleAlgebra,
}

#[derive(Debug, Clone)]
pub struct NamedModule {
    pub comodule_algebra: String,
    pub module: RightModule,
}

#[derive(Debug, Clone)]
pub struct NamedCrossed {
    pub hopf: String,
    pub data: CrossedData,
}

/// A validated collection of named objects over one field.
#[derive(Debug, Clone)]
pub struct Bundle {
    pub field: Field,
    pub hopf_algebras: BTreeMap<String, HopfAlgebra>,
    pub comodule_algebras: BTreeMap<String, NamedComodule>,
    pub modules: BTreeMap<String, NamedModule>,
    /// Checked for shape on load; the algebraic conditions are checked when the crossed product is built.
    pub crossed_data: BTreeMap<String, NamedCrossed>,
}

impl Bundle {
    pub fn new(field: Field) -> Bundle {
        Bundle {
            field,
            hopf_algebras: BTreeMap::new(),
            comodule_algebras: BTreeMap::new(),
            modules: BTreeMap::new(),
            crossed_data: BTreeMap::new(),
        }
    }

    pub fn add_hopf(&mut self, name: &str, h: HopfAlgebra) {
        self.hopf_algebras.insert(name.to_string(), h);
    }

    pub fn add_comodule_algebra(&mut self, name: &str, hopf: &str, ca: ComoduleAlgebra) -> Result<()> {
        self.require_hopf(hopf, ca.hopf())?;
        self.comodule_algebras.insert(
            name.to_string(),
            NamedComodule {
                hopf: hopf.to_string(),
                ca,
            },
        );
        Ok(())
    }

    pub fn add_module(&mut self, name: &str, comodule_algebra: &str, module: RightModule) -> Result<()> {
        let ca = &self
            .comodule_algebras
            .get(comodule_algebra)
            .ok_or_else(|| Error::Validation(format!("unknown comodule algebra {comodule_algebra:?}")))?
            .ca;
        if module.algebra() != ca.coinvariants().algebra() {
            return Err(Error::Validation(format!(
                "module {name:?} is not over the coinvariants of {comodule_algebra:?}"
            )));
        }
        self.modules.insert(
            name.to_string(),
            NamedModule {
                comodule_algebra: comodule_algebra.to_string(),
                module,
            },
        );
        Ok(())
    }

    pub fn add_crossed_data(&mut self, name: &str, hopf: &str, data: CrossedData) -> Result<()> {
        self.require_hopf(hopf, data.hopf())?;
        self.crossed_data.insert(
            name.to_string(),
            NamedCrossed {
                hopf: hopf.to_string(),
                data,
            },
        );
        Ok(())
    }

    fn require_hopf(&self, name: &str, h: &HopfAlgebra) -> Result<()> {
        match self.hopf_algebras.get(name) {
            Some(known) if known.algebra() == h.algebra() && known.comul_matrix() == h.comul_matrix() => Ok(()),
            Some(_) => Err(Error::Validation(format!("Hopf algebra {name:?} does not match the one referenced"))),
            None => Err(Error::Validation(format!("unknown Hopf algebra {name:?}"))),
        }
    }

    /// The named comodule algebra, or the only one when `name` is `None`.
    pub fn comodule_algebra(&self, name: Option<&str>) -> Result<(&str, &ComoduleAlgebra)> {
        pick(&self.comodule_algebras, name, "comodule algebra").map(|(k, v)| (k, &v.ca))
    }

    pub fn module(&self, name: Option<&str>) -> Result<(&str, &NamedModule)> {
        pick(&self.modules, name, "module")
    }

    pub fn crossed(&self, name: Option<&str>) -> Result<(&str, &NamedCrossed)> {
        pick(&self.crossed_data, name, "crossed data")
    }

    /// Parses and validates a bundle. `field` overrides the header; rational
    /// entries are then reduced modulo `p`.
    pub fn parse(text: &str, field: Option<Field>) -> Result<Bundle> {
        let file: BundleFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let header: Field = file
            .field
            .parse()
            .map_err(|e| Error::Parse(format!("field: {e}")))?;
        let field = field.unwrap_or(header);
        let mut bundle = Bundle::new(field);
        let p = Parser { field };

        for (name, r) in &file.hopf_algebras {
            let ctx = format!("hopf_algebras.{name}");
            let alg = p.algebra(&ctx, &r.labels, &r.mul, &r.unit)?;
            let n = alg.dim();
            let comul = p.tensor3(&format!("{ctx}.comul"), &r.comul, [n, n, n], |i, j, k| (j * n + k, i), n * n, n)?;
            let counit = p.vector(&format!("{ctx}.counit"), &r.counit, n)?;
            let antipode = p.matrix2(&format!("{ctx}.antipode"), &r.antipode, n)?;
            let h = match &r.antipode_inv {
                Some(inv) => HopfAlgebra::new(alg, comul, counit, antipode, p.matrix2(&format!("{ctx}.antipode_inv"), inv, n)?)?,
                None => HopfAlgebra::with_computed_inverse(alg, comul, counit, antipode)
                    .map_err(|_| Error::Validation(format!("{ctx}: antipode is not invertible")))?,
            };
            let report = h.validate();
            if !report.passed() {
                return Err(Error::Validation(format!("{ctx}: {}", report.summary())));
            }
            bundle.add_hopf(name, h);
        }
        for (name, r) in &file.comodule_algebras {
            let ctx = format!("comodule_algebras.{name}");
            let h = bundle
                .hopf_algebras
                .get(&r.hopf)
                .ok_or_else(|| Error::Validation(format!("{ctx}: unknown Hopf algebra {:?}", r.hopf)))?
                .clone();
            let alg = p.algebra(&format!("{ctx}.algebra"), &r.algebra.labels, &r.algebra.mul, &r.algebra.unit)?;
            let (na, nh) = (alg.dim(), h.dim());
            let rho = p.tensor3(&format!("{ctx}.coaction"), &r.coaction, [na, na, nh], |i, j, k| (j * nh + k, i), na * nh, na)?;
            let ca = ComoduleAlgebra::new(h, alg, rho).map_err(|e| Error::Validation(format!("{ctx}: {e}")))?;
            bundle.add_comodule_algebra(name, &r.hopf, ca)?;
        }
        for (name, r) in &file.modules {
            let ctx = format!("modules.{name}");
            let ca = &bundle
                .comodule_algebras
                .get(&r.comodule_algebra)
                .ok_or_else(|| Error::Validation(format!("{ctx}: unknown comodule algebra {:?}", r.comodule_algebra)))?
                .ca;
            let b = ca.coinvariants().algebra().clone();
            let (nm, nb) = (r.dim, b.dim());
            let mut action = vec![Matrix::zeros(field, nm, nm); nb];
            for (idx, (m, bi, n, c)) in r.action.iter().enumerate() {
                if *m >= nm || *bi >= nb || *n >= nm {
                    return Err(Error::Parse(format!("{ctx}.action[{idx}]: index out of range")));
                }
                action[*bi].set(*n, *m, p.scalar(&format!("{ctx}.action[{idx}]"), c)?);
            }
            let module = RightModule::new(b, nm, action)?;
            let report = module.validate();
            if !report.passed() {
                return Err(Error::Validation(format!("{ctx}: {}", report.summary())));
            }
            bundle.add_module(name, &r.comodule_algebra, module)?;
        }
        for (name, r) in &file.crossed_data {
            let ctx = format!("crossed_data.{name}");
            let h = bundle
                .hopf_algebras
                .get(&r.hopf)
                .ok_or_else(|| Error::Validation(format!("{ctx}: unknown Hopf algebra {:?}", r.hopf)))?
                .clone();
            let b = p.algebra(&format!("{ctx}.base"), &r.base.labels, &r.base.mul, &r.base.unit)?;
            let (nh, nb) = (h.dim(), b.dim());
            let action = p.tensor3(&format!("{ctx}.action"), &r.action, [nh, nb, nb], |i, j, k| (k, i * nb + j), nb, nh * nb)?;
            let cocycle = p.tensor3(&format!("{ctx}.cocycle"), &r.cocycle, [nh, nh, nb], |i, j, k| (k, i * nh + j), nb, nh * nh)?;
            let cocycle_inv = match &r.cocycle_inv {
                Some(e) => Some(p.tensor3(&format!("{ctx}.cocycle_inv"), e, [nh, nh, nb], |i, j, k| (k, i * nh + j), nb, nh * nh)?),
                None => None,
            };
            let data = CrossedData::new(h, b, action, cocycle, cocycle_inv)?;
            bundle.add_crossed_data(name, &r.hopf, data)?;
        }
        Ok(bundle)
    }

    pub fn load(path: &Path, field: Option<Field>) -> Result<Bundle> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
        Bundle::parse(&text, field)
    }

    /// Pretty-printed JSON with entries in a fixed order.
    pub fn to_json(&self) -> String {
        let file = BundleFile {
            field: self.field.to_string(),
            hopf_algebras: self
                .hopf_algebras
                .iter()
                .map(|(k, h)| {
                    let n = h.dim();
                    let alg = algebra_record(h.algebra());
                    let rec = HopfRecord {
                        labels: alg.labels,
                        mul: alg.mul,
                        unit: alg.unit,
                        comul: emit3(h.comul_matrix(), |r, c| (c, r / n, r % n)),
                        counit: emit_vec(h.counit()),
                        antipode: emit2(h.antipode()),
                        antipode_inv: Some(emit2(h.antipode_inv())),
                    };
                    (k.clone(), rec)
                })
                .collect(),
            comodule_algebras: self
                .comodule_algebras
                .iter()
                .map(|(k, v)| {
                    let nh = v.ca.hopf().dim();
                    let rec = ComoduleRecord {
                        hopf: v.hopf.clone(),
                        algebra: algebra_record(v.ca.algebra()),
                        coaction: emit3(v.ca.coaction(), |r, c| (c, r / nh, r % nh)),
                    };
                    (k.clone(), rec)
                })
                .collect(),
            modules: self
                .modules
                .iter()
                .map(|(k, v)| {
                    let mut action = Vec::new();
                    for (b, m) in v.module.action().iter().enumerate() {
                        for (col, row, x) in nonzero(m) {
                            action.push((col, b, row, x.to_string()));
                        }
                    }
                    action.sort();
                    let rec = ModuleRecord {
                        comodule_algebra: v.comodule_algebra.clone(),
                        dim: v.module.dim(),
                        action,
                    };
                    (k.clone(), rec)
                })
                .collect(),
            crossed_data: self
                .crossed_data
                .iter()
                .map(|(k, v)| {
                    let (nh, nb) = (v.data.hopf().dim(), v.data.base().dim());
                    let rec = CrossedRecord {
                        hopf: v.hopf.clone(),
                        base: algebra_record(v.data.base()),
                        action: emit3(v.data.action(), |r, c| (c / nb, c % nb, r)),
                        cocycle: emit3(v.data.cocycle(), |r, c| (c / nh, c % nh, r)),
                        cocycle_inv: Some(emit3(v.data.cocycle_inv(), |r, c| (c / nh, c % nh, r))),
                    };
                    (k.clone(), rec)
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("bundle serializes");
        s.push('\n');
        s
    }
}

fn pick<'a, T>(map: &'a BTreeMap<String, T>, name: Option<&str>, what: &str) -> Result<(&'a str, &'a T)> {
    match name {
        Some(n) => map
            .get_key_value(n)
            .map(|(k, v)| (k.as_str(), v))
            .ok_or_else(|| Error::Validation(format!("no {what} named {n:?}; available: {:?}", map.keys().collect::<Vec<_>>()))),
        None if map.len() == 1 => {
            let (k, v) = map.iter().next().expect("one entry");
            Ok((k.as_str(), v))
        }
        None => Err(Error::Validation(format!(
            "expected exactly one {what}, found {:?}; choose one by name",
            map.keys().collect::<Vec<_>>()
        ))),
    }
}

struct Parser {
    field: Field,
}

impl Parser {
    fn scalar(&self, ctx: &str, text: &str) -> Result<Scalar> {
        self.field.parse_scalar(text).map_err(|e| Error::Parse(format!("{ctx}: {e}")))
    }

    fn vector(&self, ctx: &str, entries: &[String], n: usize) -> Result<Vector> {
        if entries.len() != n {
            return Err(Error::Parse(format!("{ctx}: expected {n} entries, found {}", entries.len())));
        }
        entries
            .iter()
            .enumerate()
            .map(|(i, t)| self.scalar(&format!("{ctx}[{i}]"), t))
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn tensor3<F>(&self, ctx: &str, entries: &[Entry3], bounds: [usize; 3], place: F, rows: usize, cols: usize) -> Result<Matrix>
    where
        F: Fn(usize, usize, usize) -> (usize, usize),
    {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for (idx, (i, j, k, c)) in entries.iter().enumerate() {
            if *i >= bounds[0] || *j >= bounds[1] || *k >= bounds[2] {
                return Err(Error::Parse(format!("{ctx}[{idx}]: index out of range for bounds {bounds:?}")));
            }
            let (r, col) = place(*i, *j, *k);
            let x = self.scalar(&format!("{ctx}[{idx}]"), c)?;
            let sum = m.get(r, col) + &x;
            m.set(r, col, sum);
        }
        Ok(m)
    }

    fn matrix2(&self, ctx: &str, entries: &[Entry2], n: usize) -> Result<Matrix> {
        let mut m = Matrix::zeros(self.field, n, n);
        for (idx, (i, j, c)) in entries.iter().enumerate() {
            if *i >= n || *j >= n {
                return Err(Error::Parse(format!("{ctx}[{idx}]: index out of range")));
            }
            m.set(*j, *i, self.scalar(&format!("{ctx}[{idx}]"), c)?);
        }
        Ok(m)
    }

    fn algebra(&self, ctx: &str, labels: &[String], mul: &[Entry3], unit: &[String]) -> Result<Algebra> {
        let n = labels.len();
        let m = self.tensor3(&format!("{ctx}.mul"), mul, [n, n, n], |i, j, k| (k, i * n + j), n, n * n)?;
        let u = self.vector(&format!("{ctx}.unit"), unit, n)?;
        let alg = Algebra::new(self.field, labels.to_vec(), m, u)?;
        let report = alg.validate();
        if !report.passed() {
            return Err(Error::Validation(format!("{ctx}: {}", report.summary())));
        }
        Ok(alg)
    }
}

fn nonzero(m: &Matrix) -> Vec<(usize, usize, Scalar)> {
    let mut out = Vec::new();
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            let x = m.get(r, c);
            if !x.is_zero() {
                out.push((c, r, x.clone()));
            }
        }
    }
    out
}

fn emit3<F: Fn(usize, usize) -> (usize, usize, usize)>(m: &Matrix, index: F) -> Vec<Entry3> {
    let mut out: Vec<Entry3> = nonzero(m)
        .into_iter()
        .map(|(c, r, x)| {
            let (i, j, k) = index(r, c);
            (i, j, k, x.to_string())
        })
        .collect();
    out.sort();
    out
}

fn emit2(m: &Matrix) -> Vec<Entry2> {
    nonzero(m).into_iter().map(|(c, r, x)| (c, r, x.to_string())).collect()
}

fn emit_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn algebra_record(a: &Algebra) -> AlgebraRecord {
    let n = a.dim();
    AlgebraRecord {
        labels: a.labels().to_vec(),
        mul: emit3(a.mul_matrix(), |r, c| (c / n, c % n, r)),
        unit: emit_vec(a.unit()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{builtin, BUILTIN_NAMES};

    #[test]
    fn builtins_round_trip() {
        for name in BUILTIN_NAMES.iter().map(|n| if *n == "cp:<c>" { "cp:3" } else { n }) {
            let b = builtin(name, None).unwrap();
            let text = b.to_json();
            let again = Bundle::parse(&text, None).unwrap();
            assert_eq!(again.to_json(), text, "{name}");
            for (k, v) in &b.comodule_algebras {
                let w = &again.comodule_algebras[k].ca;
                assert_eq!(v.ca.algebra(), w.algebra());
                assert_eq!(v.ca.coaction(), w.coaction());
            }
        }
    }

    #[test]
    fn field_override_reduces() {
        let text = builtin("m2_graded", None).unwrap().to_json();
        let b = Bundle::parse(&text, Some(Field::Prime(3))).unwrap();
        assert_eq!(b.field, Field::Prime(3));
        assert_eq!(b.comodule_algebra(Some("m2_graded")).unwrap().1.field(), Field::Prime(3));
    }

    #[test]
    fn wrong_arity_is_a_parse_error() {
        let bad = r#"{"field": "Q", "hopf_algebras": {"h": {"labels": ["1"], "mul": [[0, 0, "1"]], "unit": ["1"], "comul": [], "counit": ["1"], "antipode": []}}}"#;
        assert!(matches!(Bundle::parse(bad, None), Err(Error::Parse(_))));
    }

    #[test]
    fn axiom_violation_is_named() {
        let bad = r#"{"field": "Q", "hopf_algebras": {"h": {"labels": ["1", "g"],
            "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]], "unit": ["1", "0"],
            "comul": [[0, 0, 0, "1"], [1, 1, 1, "1"]], "counit": ["1", "1"], "antipode": [[0, 0, "1"], [1, 1, "-1"]]}}}"#;
        match Bundle::parse(bad, None) {
            Err(Error::Validation(msg)) => assert!(msg.contains("antipode"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }
}

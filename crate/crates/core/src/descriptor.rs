//! JSON descriptors for group schemes and comodules.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::comodule::Comodule;
use crate::diag::FinGenAbelianGroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hopf::{alpha_p, cartier_dual, constant_group_scheme, mu_n, product, FiniteHopfAlgebra};
use crate::linalg::{Field, Matrix, Scalar};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::Rationals),
            FieldSpec::Fp { p } => Field::prime(p),
        }
    }

    pub fn from_field(f: Field) -> FieldSpec {
        match f {
            Field::Rationals => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::Fp { p },
        }
    }
}

/// A scalar written either as text (`"3/2"`, `"4 mod 5"`) or as a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn parse(&self, f: Field) -> Result<Scalar> {
        match self {
            ScalarText::Int(n) => Ok(f.from_i64(*n)),
            ScalarText::Text(s) => f.parse(s),
        }
    }
}

fn parse_vector(f: Field, v: &[ScalarText]) -> Result<Vec<Scalar>> {
    v.iter().map(|s| s.parse(f)).collect()
}

fn parse_tensor(f: Field, t: &[Vec<Vec<ScalarText>>]) -> Result<Tensor3> {
    let nested = t
        .iter()
        .map(|plane| plane.iter().map(|row| parse_vector(f, row)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let a = nested.len();
    let b = nested.first().map_or(0, Vec::len);
    let c = nested.first().and_then(|p| p.first()).map_or(0, Vec::len);
    Tensor3::from_nested(f, [a, b, c], nested)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    /// Constant group from a multiplication table on `0..n`.
    Constant { table: Vec<Vec<usize>> },
    Cyclic { n: usize },
    /// `Z/d_1 x ... x Z/d_k`.
    Abelian { orders: Vec<usize> },
    Symmetric { n: usize },
    Mu { n: usize },
    AlphaP,
    Product { left: Box<GroupSpec>, right: Box<GroupSpec> },
    CartierDual { of: Box<GroupSpec> },
    Diag { free_rank: usize, torsion: Vec<u64> },
    /// Raw structure constants; every axiom is checked.
    Hopf {
        mult: Vec<Vec<Vec<ScalarText>>>,
        unit: Vec<ScalarText>,
        comult: Vec<Vec<Vec<ScalarText>>>,
        counit: Vec<ScalarText>,
        /// `antipode[i][j]` is the coefficient of `e_i` in `S(e_j)`.
        antipode: Vec<Vec<ScalarText>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

/// Largest symmetric group a descriptor may request.
pub const MAX_SYMMETRIC_DEGREE: usize = 5;

#[derive(Debug, Clone)]
pub enum BuiltGroup {
    Finite(FiniteHopfAlgebra),
    Diag(FinGenAbelianGroup),
}

impl GroupSpec {
    pub fn build(&self, field: Field) -> Result<BuiltGroup> {
        let finite = |spec: &GroupSpec| match spec.build(field)? {
            BuiltGroup::Finite(a) => Ok(a),
            BuiltGroup::Diag(_) => {
                Err(Error::Descriptor("diag groups cannot be combined with finite constructions".into()))
            }
        };
        let a = match self {
            GroupSpec::Constant { table } => {
                constant_group_scheme(&FiniteGroup::from_table(table.clone())?, field)
            }
            GroupSpec::Cyclic { n } => {
                if *n == 0 {
                    return Err(Error::Descriptor("cyclic group of order 0".into()));
                }
                constant_group_scheme(&FiniteGroup::cyclic(*n), field)
            }
            GroupSpec::Abelian { orders } => {
                if orders.contains(&0) {
                    return Err(Error::Descriptor("abelian factor of order 0".into()));
                }
                constant_group_scheme(&FiniteGroup::abelian(orders), field)
            }
            GroupSpec::Symmetric { n } => {
                if *n == 0 || *n > MAX_SYMMETRIC_DEGREE {
                    return Err(Error::Unsupported(format!(
                        "symmetric groups are limited to degree 1..={MAX_SYMMETRIC_DEGREE}"
                    )));
                }
                constant_group_scheme(&FiniteGroup::symmetric(*n), field)
            }
            GroupSpec::Mu { n } => {
                if *n == 0 {
                    return Err(Error::Descriptor("mu_0 is not finite".into()));
                }
                mu_n(*n, field)
            }
            GroupSpec::AlphaP => alpha_p(field)?,
            GroupSpec::Product { left, right } => product(&finite(left)?, &finite(right)?)?,
            GroupSpec::CartierDual { of } => cartier_dual(&finite(of)?)?,
            GroupSpec::Diag { free_rank, torsion } => {
                return Ok(BuiltGroup::Diag(FinGenAbelianGroup::new(*free_rank, torsion)?));
            }
            GroupSpec::Hopf { mult, unit, comult, counit, antipode, labels } => {
                let rows = antipode.iter().map(|r| parse_vector(field, r)).collect::<Result<Vec<_>>>()?;
                FiniteHopfAlgebra::new(
                    parse_tensor(field, mult)?,
                    parse_vector(field, unit)?,
                    parse_tensor(field, comult)?,
                    parse_vector(field, counit)?,
                    Matrix::from_rows(field, rows)?,
                    labels.clone(),
                )?
            }
        };
        Ok(BuiltGroup::Finite(a))
    }

    /// Dimension of the Hopf algebra this descriptor describes, without building it.
    /// `None` for diagonalizable groups and for raw tensors of unknown shape.
    pub fn estimated_dim(&self, field: Field) -> Option<usize> {
        match self {
            GroupSpec::Constant { table } => Some(table.len()),
            GroupSpec::Cyclic { n } | GroupSpec::Mu { n } => Some(*n),
            GroupSpec::Abelian { orders } => orders.iter().try_fold(1usize, |a, &d| a.checked_mul(d)),
            GroupSpec::Symmetric { n } => (1..=*n).try_fold(1usize, |a, d| a.checked_mul(d)),
            GroupSpec::AlphaP => match field {
                Field::Prime(p) => usize::try_from(p).ok(),
                Field::Rationals => Some(0),
            },
            GroupSpec::Product { left, right } => {
                left.estimated_dim(field)?.checked_mul(right.estimated_dim(field)?)
            }
            GroupSpec::CartierDual { of } => of.estimated_dim(field),
            GroupSpec::Diag { .. } => None,
            GroupSpec::Hopf { unit, .. } => Some(unit.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    #[serde(default)]
    pub field: Option<FieldSpec>,
    pub group: GroupSpec,
}

impl Descriptor {
    pub fn from_json(text: &str) -> Result<Descriptor> {
        serde_json::from_str(text).map_err(|e| Error::Descriptor(e.to_string()))
    }

    /// The field, with `override_field` taking precedence over the descriptor.
    pub fn resolve_field(&self, override_field: Option<Field>) -> Result<Field> {
        match (override_field, self.field) {
            (Some(f), _) => Ok(f),
            (None, Some(spec)) => spec.to_field(),
            (None, None) => Err(Error::Descriptor("no field given".into())),
        }
    }

    pub fn build(&self, override_field: Option<Field>) -> Result<BuiltGroup> {
        self.group.build(self.resolve_field(override_field)?)
    }
}

/// `{"dim": v, "coaction": [[[scalar, ...], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleSpec {
    pub dim: usize,
    pub coaction: Vec<Vec<Vec<ScalarText>>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl ComoduleSpec {
    pub fn from_json(text: &str) -> Result<ComoduleSpec> {
        serde_json::from_str(text).map_err(|e| Error::Descriptor(e.to_string()))
    }

    pub fn build(&self, algebra: Arc<FiniteHopfAlgebra>) -> Result<Comodule> {
        let coaction = parse_tensor(algebra.field(), &self.coaction)?;
        if coaction.dims()[0] != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: coaction.dims()[0] });
        }
        Comodule::new(algebra, coaction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::mu_n;

    fn finite(b: BuiltGroup) -> FiniteHopfAlgebra {
        match b {
            BuiltGroup::Finite(a) => a,
            BuiltGroup::Diag(_) => panic!("expected a finite group"),
        }
    }

    #[test]
    fn parses_the_documented_forms() {
        let d = Descriptor::from_json(
            r#"{"field": {"kind": "Fp", "p": 5}, "group": {"type": "constant", "table": [[0,1],[1,0]]}}"#,
        )
        .unwrap();
        let a = finite(d.build(None).unwrap());
        assert_eq!(a, constant_group_scheme(&FiniteGroup::cyclic(2), Field::Prime(5)));

        let d = Descriptor::from_json(r#"{"field": {"kind": "Q"}, "group": {"type": "mu", "n": 3}}"#).unwrap();
        assert_eq!(finite(d.build(None).unwrap()), mu_n(3, Field::Rationals));

        let d = Descriptor::from_json(
            r#"{"field": {"kind": "Fp", "p": 3}, "group": {"type": "cartier_dual", "of": {"type": "product",
                "left": {"type": "mu", "n": 3}, "right": {"type": "alpha_p"}}}}"#,
        )
        .unwrap();
        assert_eq!(finite(d.build(None).unwrap()).dim(), 9);

        let d = Descriptor::from_json(r#"{"group": {"type": "diag", "free_rank": 1, "torsion": [2, 3]}}"#).unwrap();
        match d.build(Some(Field::Rationals)).unwrap() {
            BuiltGroup::Diag(g) => assert_eq!(g.torsion(), &[6]),
            BuiltGroup::Finite(_) => panic!("expected diag"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Descriptor::from_json("{").is_err());
        assert!(Descriptor::from_json(r#"{"group": {"type": "klein"}}"#).is_err());
        let d = Descriptor::from_json(r#"{"group": {"type": "mu", "n": 2}}"#).unwrap();
        assert!(d.build(None).is_err());
        let d = Descriptor::from_json(
            r#"{"field": {"kind": "Q"}, "group": {"type": "constant", "table": [[0,1],[0,1]]}}"#,
        )
        .unwrap();
        assert!(matches!(d.build(None), Err(Error::NotAGroup(_))));
        let d = Descriptor::from_json(r#"{"field": {"kind": "Fp", "p": 4}, "group": {"type": "mu", "n": 2}}"#).unwrap();
        assert!(matches!(d.build(None), Err(Error::InvalidField(_))));
    }

    #[test]
    fn raw_tensors_are_verified() {
        let good = r#"{"field": {"kind": "Q"}, "group": {"type": "hopf",
            "mult": [[["1","0"],["0","1"]],[["0","1"],["1","0"]]],
            "unit": ["1","0"],
            "comult": [[["1","0"],["0","0"]],[["0","0"],["0","1"]]],
            "counit": [1, 1],
            "antipode": [["1","0"],["0","1"]],
            "labels": ["x^0", "x^1"]}}"#;
        let a = finite(Descriptor::from_json(good).unwrap().build(None).unwrap());
        assert_eq!(a, mu_n(2, Field::Rationals));
        let bad = good.replace(r#""counit": [1, 1]"#, r#""counit": [1, 0]"#);
        let err = Descriptor::from_json(&bad).unwrap().build(None).unwrap_err();
        assert!(matches!(err, Error::HopfAxioms(_)));
    }

    #[test]
    fn comodule_specs() {
        let a = Arc::new(constant_group_scheme(&FiniteGroup::cyclic(2), Field::Rationals));
        let sign = ComoduleSpec::from_json(r#"{"dim": 1, "coaction": [[["1", "-1"]]]}"#).unwrap();
        assert_eq!(sign.build(a.clone()).unwrap().dim(), 1);
        let bad = ComoduleSpec::from_json(r#"{"dim": 1, "coaction": [[["2", "-1"]]]}"#).unwrap();
        assert!(matches!(bad.build(a.clone()), Err(Error::ComoduleAxioms(_))));
        let wrong = ComoduleSpec::from_json(r#"{"dim": 2, "coaction": [[["1", "1"]]]}"#).unwrap();
        assert!(wrong.build(a).is_err());
    }
}

use std::collections::BTreeMap;
use std::sync::Arc;

use hopftrace::blocks::{center, dual_group, pairing_matches_block_dims, pairing_of_idempotents, split_center};
use hopftrace::descriptor::{BuiltGroup, ComoduleSpec, Descriptor, ScalarText};
use hopftrace::diag::{
    diag_fourier, diag_integral, diag_phi, diag_trace_pair, DiagFunctional, FinGenAbelianGroup,
    FinSupportFunctional, GroupElement,
};
use hopftrace::dual_trace::{convolution_algebra, is_linearly_reductive};
use hopftrace::hopf::FiniteHopfAlgebra;
use hopftrace::integral::{fourier, invariant_integral, verify_parseval};
use hopftrace::linalg::{dot, Field, Scalar, Vector};
use hopftrace::report::AxiomReport;
use hopftrace::Error;
use serde::Deserialize;

use crate::report::{
    matrix_rows, scalars, AnalysisReport, BlockStatus, BlocksSection, ComoduleRecord, DiagSection,
    FourierSection, IntegralSection, ParsevalStatus,
};

/// Why a command could not produce a report; each kind has its own exit code.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Axioms(String, Option<AxiomReport>),
    Unsupported(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Axioms(..) => 2,
            Failure::Unsupported(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let text = e.to_string();
        match e {
            Error::HopfAxioms(r) | Error::ComoduleAxioms(r) => Failure::Axioms(text, Some(r)),
            Error::NotAGroup(_) | Error::IntegralSpace(_) => Failure::Axioms(text, None),
            Error::Unsupported(_)
            | Error::CharacteristicZero
            | Error::NotCocommutative
            | Error::NoInvariantIntegral
            | Error::NotSemisimple => Failure::Unsupported(text),
            Error::DimensionMismatch { .. }
            | Error::FieldMismatch(..)
            | Error::InvalidField(_)
            | Error::ParseScalar(_)
            | Error::AlgebraMismatch
            | Error::Descriptor(_) => Failure::Input(text),
        }
    }
}

pub type Outcome = std::result::Result<AnalysisReport, Failure>;

pub struct Loaded {
    pub echo: serde_json::Value,
    pub field: Field,
    pub group: BuiltGroup,
}

pub fn parse_field_flag(text: &str) -> std::result::Result<Field, String> {
    let t = text.trim().to_ascii_lowercase();
    if t == "q" {
        return Ok(Field::Rationals);
    }
    let p = t
        .strip_prefix("fp:")
        .ok_or_else(|| format!("expected `q` or `fp:<p>`, got `{text}`"))?
        .parse::<u64>()
        .map_err(|e| format!("bad characteristic in `{text}`: {e}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

pub fn load(text: &str, field: Option<Field>, max_dim: usize) -> Result<Loaded, Failure> {
    let echo: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Failure::Input(format!("malformed JSON: {e}")))?;
    let descriptor: Descriptor = serde_json::from_value(echo.clone())
        .map_err(|e| Failure::Input(format!("invalid descriptor: {e}")))?;
    let field = descriptor.resolve_field(field)?;
    if let Some(d) = descriptor.group.estimated_dim(field) {
        if d > max_dim {
            return Err(too_large(d, max_dim));
        }
    }
    let group = descriptor.build(Some(field))?;
    if let BuiltGroup::Finite(a) = &group {
        if a.dim() > max_dim {
            return Err(too_large(a.dim(), max_dim));
        }
    }
    Ok(Loaded { echo, field, group })
}

fn too_large(d: usize, max_dim: usize) -> Failure {
    Failure::Unsupported(format!("dimension {d} exceeds --max-dim {max_dim}"))
}

fn finite(loaded: &Loaded) -> Result<&FiniteHopfAlgebra, Failure> {
    match &loaded.group {
        BuiltGroup::Finite(a) => Ok(a),
        BuiltGroup::Diag(_) => Err(Failure::Unsupported(
            "diagonalizable groups are infinite-dimensional; use the diag command".into(),
        )),
    }
}

fn base_report(command: &str, loaded: &Loaded) -> AnalysisReport {
    let mut r = AnalysisReport::new(command, loaded.echo.clone(), loaded.field.to_string());
    if let BuiltGroup::Finite(a) = &loaded.group {
        r.dim = Some(a.dim());
        r.labels = Some(a.labels().to_vec());
    }
    r
}

fn integral_section(a: &FiniteHopfAlgebra) -> Result<(IntegralSection, Option<Vector>), Failure> {
    let result = invariant_integral(a)?;
    let section = IntegralSection {
        space_dim: result.integral_space_dim,
        normalized: result.normalized.as_deref().map(scalars),
    };
    Ok((section, result.normalized))
}

fn discrete_dual(a: &FiniteHopfAlgebra) -> Result<Option<bool>, Failure> {
    match dual_group(a) {
        Ok(s) => Ok(Some(s.discrete)),
        Err(Error::Unsupported(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn check(loaded: &Loaded) -> Outcome {
    let a = finite(loaded)?;
    let mut r = base_report("check", loaded);
    let decision = is_linearly_reductive(a);
    r.reductive = Some(decision.reductive);
    r.gram_rank = Some(decision.gram_rank);
    let (section, w_g) = integral_section(a)?;
    r.integral = Some(section);
    r.parseval = Some(match w_g {
        Some(_) if verify_parseval(a)?.holds() => ParsevalStatus::Pass,
        Some(_) => ParsevalStatus::Fail,
        None => ParsevalStatus::Skipped,
    });
    r.dual_group_discrete = discrete_dual(a)?;
    Ok(r)
}

pub fn gram(loaded: &Loaded) -> Outcome {
    let a = finite(loaded)?;
    let mut r = base_report("gram", loaded);
    let g = convolution_algebra(a).trace_form_gram();
    let rank = g.rank();
    r.gram = Some(matrix_rows(g.entries()));
    r.gram_rank = Some(rank);
    r.reductive = Some(rank == a.dim());
    Ok(r)
}

pub fn integral(loaded: &Loaded) -> Outcome {
    let a = finite(loaded)?;
    let mut r = base_report("integral", loaded);
    let (section, w_g) = integral_section(a)?;
    r.reductive = Some(w_g.is_some());
    r.integral = Some(section);
    Ok(r)
}

/// A basis label such as `d2` or `x^1`, or a comma-separated coordinate list.
fn parse_element(a: &FiniteHopfAlgebra, text: &str) -> Result<Vector, Failure> {
    if let Some(i) = a.labels().iter().position(|l| l == text.trim()) {
        return Ok(a.basis(i));
    }
    let coords = text
        .split(',')
        .map(|s| a.field().parse(s))
        .collect::<hopftrace::Result<Vector>>()
        .map_err(|_| {
            Failure::Input(format!(
                "element `{text}` is neither a basis label ({}) nor a list of {} scalars",
                a.labels().join(", "),
                a.dim()
            ))
        })?;
    a.check_element(&coords)?;
    Ok(coords)
}

pub fn fourier_cmd(loaded: &Loaded, element: &str) -> Outcome {
    let a = finite(loaded)?;
    let x = parse_element(a, element)?;
    let mut r = base_report("fourier", loaded);
    let transform = fourier(a, &x)?;
    r.reductive = Some(true);
    r.fourier = Some(FourierSection { element: scalars(&x), transform: scalars(&transform) });
    Ok(r)
}

pub fn blocks(loaded: &Loaded) -> Outcome {
    let a = finite(loaded)?;
    let mut r = base_report("blocks", loaded);
    let c = convolution_algebra(a);
    let center_dim = center(&c).len();
    let mut section = BlocksSection {
        status: BlockStatus::Split,
        center_dim,
        block_dims: None,
        idempotents: None,
        pairing: None,
        pairing_matches_dims: None,
    };
    match split_center(&c) {
        Ok(b) => {
            let pairing = pairing_of_idempotents(&b, &c.trace_form_gram())?;
            section.pairing_matches_dims = Some(pairing_matches_block_dims(&b, &pairing));
            section.pairing = Some(matrix_rows(&pairing));
            section.idempotents = Some(b.idempotents.iter().map(|e| scalars(e)).collect());
            section.block_dims = Some(b.block_dims);
            r.dual_group_discrete = Some(true);
        }
        Err(Error::NotSemisimple) => {
            section.status = BlockStatus::NotSemisimple;
            r.dual_group_discrete = Some(false);
        }
        Err(Error::Unsupported(_)) => {
            section.status = match loaded.field {
                Field::Rationals => BlockStatus::UnsupportedOverQ,
                Field::Prime(_) => BlockStatus::PrimeTooLarge,
            };
        }
        Err(e) => return Err(e.into()),
    }
    r.blocks = Some(section);
    Ok(r)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComoduleFile {
    One(ComoduleSpec),
    Many(Vec<ComoduleSpec>),
}

pub fn chars(loaded: &Loaded, comodule_text: &str) -> Outcome {
    let a = finite(loaded)?;
    let specs = match serde_json::from_str::<ComoduleFile>(comodule_text)
        .map_err(|e| Failure::Input(format!("invalid comodule file: {e}")))?
    {
        ComoduleFile::One(s) => vec![s],
        ComoduleFile::Many(v) => v,
    };
    let algebra = Arc::new(a.clone());
    let w_g = invariant_integral(a)?.normalized;
    let mut r = base_report("chars", loaded);
    r.reductive = Some(w_g.is_some());
    for (i, spec) in specs.iter().enumerate() {
        let v = spec.build(algebra.clone())?;
        let chi = v.character();
        let invariants = v.invariants_dim();
        let value = w_g.as_ref().map(|w| dot(w, &chi));
        let counts_match = value.as_ref().map(|s| *s == a.field().from_u64(invariants as u64));
        r.comodules.push(ComoduleRecord {
            name: spec.name.clone().unwrap_or_else(|| format!("V{i}")),
            dim: v.dim(),
            character: scalars(&chi),
            invariants_dim: invariants,
            integral_of_character: value.map(|s| s.to_string()),
            integral_counts_invariants: counts_match,
        });
    }
    Ok(r)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SupportEntry {
    at: Vec<i64>,
    value: ScalarText,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionalFile {
    support: Vec<SupportEntry>,
}

fn element_key(m: &GroupElement) -> String {
    let parts: Vec<String> = m.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn keyed(map: &BTreeMap<GroupElement, Scalar>) -> BTreeMap<String, String> {
    map.iter().map(|(m, v)| (element_key(m), v.to_string())).collect()
}

pub fn diag(loaded: &Loaded, functional_text: Option<&str>) -> Outcome {
    let group: &FinGenAbelianGroup = match &loaded.group {
        BuiltGroup::Diag(g) => g,
        BuiltGroup::Finite(_) => {
            return Err(Failure::Input("the diag command needs a descriptor of type diag".into()))
        }
    };
    let f = loaded.field;
    let mut r = AnalysisReport::new("diag", loaded.echo.clone(), f.to_string());
    r.reductive = Some(true);
    let mut section = DiagSection {
        free_rank: group.free_rank(),
        torsion: group.torsion().to_vec(),
        integral: keyed(diag_integral(group, f).support()),
        functional: None,
        phi: None,
        fourier_inverts_phi: None,
        pairing_with_unit: None,
    };
    if let Some(text) = functional_text {
        let file: FunctionalFile = serde_json::from_str(text)
            .map_err(|e| Failure::Input(format!("invalid functional file: {e}")))?;
        let entries = file
            .support
            .iter()
            .map(|e| Ok((e.at.clone(), e.value.parse(f)?)))
            .collect::<hopftrace::Result<Vec<_>>>()?;
        let w = FinSupportFunctional::from_entries(group, f, entries)?;
        let phi = diag_phi(&w);
        section.fourier_inverts_phi = Some(diag_fourier(&phi) == w);
        section.pairing_with_unit =
            Some(diag_trace_pair(&DiagFunctional::unit(group, f), &w)?.to_string());
        section.phi = Some(keyed(phi.coeffs()));
        section.functional = Some(keyed(w.support()));
    }
    r.diag = Some(section);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load_str(text: &str) -> Loaded {
        load(text, None, 64).unwrap()
    }

    #[test]
    fn field_flags() {
        assert_eq!(parse_field_flag("q").unwrap(), Field::Rationals);
        assert_eq!(parse_field_flag("fp:7").unwrap(), Field::Prime(7));
        assert!(parse_field_flag("fp:8").is_err());
        assert!(parse_field_flag("r").is_err());
    }

    #[test]
    fn check_reports_are_consistent() {
        for (text, reductive) in [
            (r#"{"field":{"kind":"Fp","p":2},"group":{"type":"constant","table":[[0,1],[1,0]]}}"#, false),
            (r#"{"field":{"kind":"Fp","p":2},"group":{"type":"mu","n":2}}"#, true),
            (r#"{"field":{"kind":"Q"},"group":{"type":"symmetric","n":3}}"#, true),
        ] {
            let r = check(&load_str(text)).unwrap();
            assert_eq!(r.reductive, Some(reductive));
            let present = r.integral.as_ref().unwrap().normalized.is_some();
            assert_eq!(present, reductive);
            assert_eq!(r.parseval == Some(ParsevalStatus::Pass), reductive);
        }
    }

    #[test]
    fn max_dim_is_enforced() {
        let text = r#"{"field":{"kind":"Q"},"group":{"type":"cyclic","n":65}}"#;
        assert_eq!(load(text, None, 64).err().unwrap().exit_code(), 3);
        assert!(load(text, None, 65).is_ok());
    }

    #[test]
    fn elements_by_label_or_coordinates() {
        let loaded = load_str(r#"{"field":{"kind":"Q"},"group":{"type":"mu","n":3}}"#);
        let a = finite(&loaded).unwrap();
        assert_eq!(parse_element(a, "x^1").unwrap(), a.basis(1));
        assert_eq!(parse_element(a, "0, 1, 0").unwrap(), a.basis(1));
        assert!(parse_element(a, "1,2").is_err());
    }
}

//! Serializable reports. Scalars are kept as exact strings.

use std::collections::BTreeMap;
use std::fmt::Write;

use hopftrace::linalg::{Matrix, Scalar};
use serde::{Deserialize, Serialize};

pub fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| scalars(r)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralSection {
    pub space_dim: usize,
    /// `w_G` on the dual basis, absent when no integral is normalizable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalized: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParsevalStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierSection {
    pub element: Vec<String>,
    pub transform: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockStatus {
    Split,
    UnsupportedOverQ,
    PrimeTooLarge,
    NotSemisimple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksSection {
    pub status: BlockStatus,
    pub center_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing_matches_dims: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleRecord {
    pub name: String,
    pub dim: usize,
    pub character: Vec<String>,
    pub invariants_dim: usize,
    /// `w_G(chi_V)`, when the group is linearly reductive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral_of_character: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral_counts_invariants: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagSection {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    /// Support of `w_G`, keyed by the group element.
    pub integral: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functional: Option<BTreeMap<String, String>>,
    /// `phi` of the functional, as monomial coefficients.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fourier_inverts_phi: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing_with_unit: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub command: String,
    pub descriptor: serde_json::Value,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reductive: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral: Option<IntegralSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parseval: Option<ParsevalStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_group_discrete: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fourier: Option<FourierSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlocksSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comodules: Vec<ComoduleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diag: Option<DiagSection>,
}

impl AnalysisReport {
    pub fn new(command: &str, descriptor: serde_json::Value, field: String) -> AnalysisReport {
        AnalysisReport {
            command: command.to_string(),
            descriptor,
            field,
            dim: None,
            labels: None,
            reductive: None,
            gram_rank: None,
            gram: None,
            integral: None,
            parseval: None,
            dual_group_discrete: None,
            fourier: None,
            blocks: None,
            comodules: Vec::new(),
            diag: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "field: {}", self.field);
        if let Some(d) = self.dim {
            let _ = writeln!(out, "dim: {d}");
        }
        if let Some(r) = self.reductive {
            let _ = writeln!(out, "linearly reductive: {}", yes_no(r));
        }
        if let Some(r) = self.gram_rank {
            let _ = writeln!(out, "gram rank: {r}");
        }
        if let Some(g) = &self.gram {
            let _ = writeln!(out, "gram:");
            for row in g {
                let _ = writeln!(out, "  [{}]", row.join(", "));
            }
        }
        if let Some(i) = &self.integral {
            match &i.normalized {
                Some(w) => {
                    let _ = writeln!(out, "integral: [{}]", w.join(", "));
                }
                None => {
                    let _ = writeln!(out, "integral: none (space of dimension {}, not normalizable)", i.space_dim);
                }
            }
        }
        if let Some(p) = &self.parseval {
            let text = match p {
                ParsevalStatus::Pass => "pass",
                ParsevalStatus::Fail => "fail",
                ParsevalStatus::Skipped => "skipped",
            };
            let _ = writeln!(out, "parseval: {text}");
        }
        if let Some(d) = self.dual_group_discrete {
            let _ = writeln!(out, "dual group discrete: {}", yes_no(d));
        }
        if let Some(f) = &self.fourier {
            let _ = writeln!(out, "fourier of [{}]: [{}]", f.element.join(", "), f.transform.join(", "));
        }
        if let Some(b) = &self.blocks {
            let _ = writeln!(out, "center dim: {}", b.center_dim);
            match b.status {
                BlockStatus::Split => {}
                BlockStatus::UnsupportedOverQ => {
                    let _ = writeln!(out, "blocks: unsupported over Q");
                }
                BlockStatus::PrimeTooLarge => {
                    let _ = writeln!(out, "blocks: characteristic too large to split");
                }
                BlockStatus::NotSemisimple => {
                    let _ = writeln!(out, "blocks: not semisimple");
                }
            }
            if let Some(dims) = &b.block_dims {
                let dims: Vec<String> = dims.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "block dims: [{}]", dims.join(", "));
            }
            if let Some(m) = b.pairing_matches_dims {
                let _ = writeln!(out, "pairing is diag(block dims): {}", yes_no(m));
            }
        }
        for c in &self.comodules {
            let _ = write!(
                out,
                "comodule {}: dim {}, character [{}], invariants {}",
                c.name,
                c.dim,
                c.character.join(", "),
                c.invariants_dim
            );
            if let Some(w) = &c.integral_of_character {
                let _ = write!(out, ", w_G(chi) = {w}");
            }
            if let Some(ok) = c.integral_counts_invariants {
                let _ = write!(out, ", equality {}", if ok { "holds" } else { "FAILS" });
            }
            out.push('\n');
        }
        if let Some(d) = &self.diag {
            let torsion: Vec<String> = d.torsion.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "group: Z^{} x torsion [{}]", d.free_rank, torsion.join(", "));
            let _ = writeln!(out, "integral: {}", map_text(&d.integral));
            if let Some(f) = &d.functional {
                let _ = writeln!(out, "functional: {}", map_text(f));
            }
            if let Some(p) = &d.phi {
                let _ = writeln!(out, "phi: {}", map_text(p));
            }
            if let Some(ok) = d.fourier_inverts_phi {
                let _ = writeln!(out, "fourier inverts phi: {}", yes_no(ok));
            }
            if let Some(s) = &d.pairing_with_unit {
                let _ = writeln!(out, "pairing with unit: {s}");
            }
        }
        out
    }
}

fn map_text(m: &BTreeMap<String, String>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k} -> {v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

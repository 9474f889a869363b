//! Machine-readable reports. Field order is declaration order and every
//! rational is a reduced string, so the same input always serializes to the
//! same bytes.

use std::collections::BTreeMap;

use bihom_core::analysis::Decomposition;
use bihom_core::classify::ClassLabel;
use bihom_core::{AxiomReport, MatrixQ, Rational, Witness};
use serde::Serialize;

pub fn rational(x: &Rational) -> String {
    x.to_string()
}

pub fn vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational).collect()
}

pub fn matrix(m: &MatrixQ) -> Vec<Vec<String>> {
    m.row_iter().map(vector).collect()
}

#[derive(Serialize)]
pub struct WitnessJson {
    /// 1-based basis indices.
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        Self {
            indices: w.indices.iter().map(|i| i + 1).collect(),
            lhs: vector(&w.lhs),
            rhs: vector(&w.rhs),
        }
    }
}

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<WitnessJson>,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub all_pass: bool,
    pub checks: Vec<CheckEntry>,
}

impl From<&AxiomReport> for CheckReport {
    fn from(r: &AxiomReport) -> Self {
        Self {
            all_pass: r.all_pass(),
            checks: r
                .entries()
                .iter()
                .map(|(name, c)| CheckEntry {
                    name,
                    pass: c.is_pass(),
                    witness: c.witness().map(WitnessJson::from),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DecompositionJson {
    pub m: usize,
    /// Each ideal as its reduced row-echelon basis.
    pub ideals: Vec<Vec<Vec<String>>>,
    pub sigma_alpha: String,
    pub sigma_beta: String,
    pub warning: Option<&'static str>,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        Self {
            m: d.m,
            ideals: d.ideals.iter().map(|s| matrix(s.basis())).collect(),
            sigma_alpha: d.sigma_alpha.to_string(),
            sigma_beta: d.sigma_beta.to_string(),
            warning: d.warning(),
        }
    }
}

#[derive(Serialize, Default)]
pub struct AnalyzeReport {
    pub dim: usize,
    pub axioms_pass: bool,
    pub regular: bool,
    pub abelian: bool,
    pub simple: Option<bool>,
    pub enveloping_dim: Option<usize>,
    pub induced_killing_determinant: Option<String>,
    pub semisimple: Option<bool>,
    pub decomposition: Option<DecompositionJson>,
    pub decomposition_error: Option<String>,
    pub type_candidates: Vec<String>,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub family: String,
    pub params: BTreeMap<&'static str, String>,
    pub label: String,
    pub change_of_basis: Vec<Vec<String>>,
    pub alpha_profile: String,
    pub beta_profile: String,
}

impl From<&ClassLabel> for ClassifyReport {
    fn from(l: &ClassLabel) -> Self {
        let names: &[&'static str] = match l.params.len() {
            2 => &["a", "b"],
            1 => &["a"],
            _ => &[],
        };
        Self {
            family: l.family.to_string(),
            params: names.iter().copied().zip(l.params.iter().map(rational)).collect(),
            label: l.to_string(),
            change_of_basis: matrix(&l.change_of_basis),
            alpha_profile: l.alpha_profile.to_string(),
            beta_profile: l.beta_profile.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct IsoReport {
    pub isomorphic: bool,
    pub first: String,
    pub second: String,
    pub isomorphism: Option<Vec<Vec<String>>>,
}

//! JSON documents emitted by the CLI.

use std::sync::Arc;

use flagcert_core::obstruction::euler_verdict;
use flagcert_core::{Engine, ObstructionVerdict, PolyF2, RingPresentation, Vars};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum EngineName {
    Groebner,
    Oracle,
    Both,
}

impl From<EngineName> for Engine {
    fn from(e: EngineName) -> Engine {
        match e {
            EngineName::Groebner => Engine::Groebner,
            EngineName::Oracle => Engine::Oracle,
            EngineName::Both => Engine::Both,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictFields {
    pub obstruction_nonzero: bool,
    /// Reduced Euler class in canonical text form.
    pub certificate: String,
    pub certificate_degree: u32,
    pub trivial_summand_shortcut: bool,
}

impl From<&ObstructionVerdict> for VerdictFields {
    fn from(v: &ObstructionVerdict) -> Self {
        VerdictFields {
            obstruction_nonzero: v.obstruction_nonzero(),
            certificate: v.certificate().to_string(),
            certificate_degree: v.certificate_degree(),
            trivial_summand_shortcut: v.trivial_summand_shortcut(),
        }
    }
}

/// Output of `certify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub n: u32,
    pub ell: u32,
    pub verdict: VerdictFields,
    pub base_relations: Vec<String>,
    pub engine: EngineName,
    pub tool_version: String,
}

impl CertificateDocument {
    pub fn new(n: u32, ell: u32, verdict: &ObstructionVerdict, engine: EngineName) -> Self {
        CertificateDocument {
            n,
            ell,
            verdict: verdict.into(),
            base_relations: relation_strings(verdict.presentation()),
            engine,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Rebuilds the base ring from the recorded relations and checks that
    /// the certificate is reduced, of the recorded degree, and nonzero
    /// exactly when the verdict says so.
    pub fn recheck(&self) -> Result<(), String> {
        let vars = Vars::new(0, self.ell as usize + 1);
        let relations = self
            .base_relations
            .iter()
            .enumerate()
            .map(|(i, r)| PolyF2::parse_line(vars, r, i + 1))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let ring = RingPresentation::new(vars, relations).map_err(|e| e.to_string())?;
        let cert = PolyF2::parse(vars, &self.verdict.certificate).map_err(|e| e.to_string())?;
        if ring.normal_form(&cert).map_err(|e| e.to_string())? != cert {
            return Err("certificate is not in normal form".into());
        }
        if cert.is_zero() == self.verdict.obstruction_nonzero {
            return Err("verdict flag disagrees with certificate".into());
        }
        if !cert.is_zero() && cert.degree() != Some(self.verdict.certificate_degree) {
            return Err("certificate degree mismatch".into());
        }
        Ok(())
    }
}

/// Output of `euler --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EulerDocument {
    pub representation: Vec<String>,
    pub verdict: VerdictFields,
    pub base_relations: Vec<String>,
    pub engine: EngineName,
    pub tool_version: String,
}

impl EulerDocument {
    pub fn new(
        rep: &flagcert_core::RepSpec,
        verdict: &ObstructionVerdict,
        engine: EngineName,
    ) -> Self {
        EulerDocument {
            representation: rep.to_text().lines().map(str::to_string).collect(),
            verdict: verdict.into(),
            base_relations: relation_strings(verdict.presentation()),
            engine,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

fn relation_strings(ring: &Arc<RingPresentation>) -> Vec<String> {
    ring.relations().iter().map(ToString::to_string).collect()
}

/// Convenience used by `euler`: verdict over an owned presentation.
pub(crate) fn verdict_for(
    rep: &flagcert_core::RepSpec,
    ring: RingPresentation,
    engine: EngineName,
) -> flagcert_core::Result<ObstructionVerdict> {
    euler_verdict(rep, Arc::new(ring), engine.into())
}

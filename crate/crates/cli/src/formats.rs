//! JSON schemas for instance files, fan files, A-infinity data, and every
//! certificate the pipelines emit. JSON is the authoritative output format;
//! tables are a human convenience. All field-element values serialize as
//! strings so GF(p) residues and exact rationals share one shape.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use cocert_core::ainfinity::RelationCheck;
use cocert_core::field::FieldElement;
use cocert_core::hochschild::NonformalityCertificate;
use cocert_core::qh::{RealVerdict, TraceEntry, TraceStatus};
use cocert_core::superpotential::{CertStatus, CritKind, CritReport, FibreReport, FibreVerdict};
use cocert_core::QuotientRing;

/// Instance descriptor for the real-Lagrangian pipelines.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub family: String,
    pub n: u64,
    #[serde(default)]
    pub k: u64,
    #[serde(default)]
    pub a: Vec<u64>,
    #[serde(rename = "char")]
    pub characteristic: u64,
}

/// Fan file: outer facet normals.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    pub name: String,
    pub dim: usize,
    pub normals: Vec<Vec<i64>>,
}

/// A-infinity data: basis with integer degrees and structure constants.
/// `mu["k"]` lists d^k coordinate arrays; the multi-index runs over input
/// tuples in display order (leftmost input most significant).
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AInfFile {
    pub basis: Vec<AInfBasisGen>,
    pub mu: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(rename = "char")]
    pub characteristic: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct AInfBasisGen {
    pub name: String,
    pub deg: i64,
}

/// Hochschild cochain: component k is a list of d^k coordinate arrays in
/// the same display-order ranking as `AInfFile::mu`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    #[serde(default)]
    pub parity: u8,
    pub components: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TraceEntryJson {
    pub claim: String,
    pub status: String,
    #[serde(rename = "ref")]
    pub reference: String,
}

impl From<&TraceEntry> for TraceEntryJson {
    fn from(t: &TraceEntry) -> Self {
        TraceEntryJson {
            claim: t.claim.clone(),
            status: match t.status {
                TraceStatus::Checked => "checked".to_string(),
                TraceStatus::Axiom => "axiom".to_string(),
            },
            reference: t.reference.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct HypothesisJson {
    pub name: String,
    pub status: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerdictFlags {
    pub co0_injective: bool,
    pub costar_injective: bool,
    pub split_generates: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RealVerdictJson {
    pub instance: InstanceFile,
    pub hypotheses: Vec<HypothesisJson>,
    pub branch: String,
    pub flags: VerdictFlags,
    pub qh_dim: usize,
    pub kernel_dim: usize,
    pub minimal_chern: u64,
    pub trace: Vec<TraceEntryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anomaly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationJson>,
    pub spot_checks: SpotChecks,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PresentationJson {
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub v_poly: String,
    pub seidel: String,
    pub seidel_plus_one_is_unit_times_v: bool,
    pub phi_alpha: i64,
    pub phi_beta: i64,
    pub phi_gcd: u64,
}

/// Seeded randomized self-checks run inside a pipeline.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SpotChecks {
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
    pub description: String,
}

pub fn verdict_to_json(
    instance: &InstanceFile,
    hypotheses: Vec<(String, bool)>,
    v: &RealVerdict,
    presentation: Option<PresentationJson>,
    spot_checks: SpotChecks,
) -> RealVerdictJson {
    RealVerdictJson {
        instance: instance.clone(),
        hypotheses: hypotheses
            .into_iter()
            .map(|(name, ok)| HypothesisJson {
                name,
                status: if ok { "pass" } else { "fail" }.to_string(),
            })
            .collect(),
        branch: v.branch.clone(),
        flags: VerdictFlags {
            co0_injective: v.co0_injective,
            costar_injective: v.costar_injective,
            split_generates: v.split_generates,
        },
        qh_dim: v.qh_dim,
        kernel_dim: v.kernel_dim,
        minimal_chern: v.minimal_chern,
        trace: v.trace.iter().map(TraceEntryJson::from).collect(),
        anomaly: v.anomaly.clone(),
        presentation,
        spot_checks,
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RpRow {
    pub n: u64,
    pub qh_dim: usize,
    pub kernel_dim: usize,
    pub co0_injective: bool,
    pub costar_injective: bool,
    pub split_generates: bool,
    /// "certified", "refused", or "-" for even n.
    pub nonformality: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RpReportJson {
    pub rows: Vec<RpRow>,
    pub spot_checks: SpotChecks,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CritReportJson {
    pub point: Vec<String>,
    pub value: String,
    pub kind: String,
    pub hessian_rank: usize,
    pub local_dim: usize,
    pub local_basis: Vec<String>,
}

pub fn crit_report_to_json(r: &CritReport, ring: &QuotientRing) -> CritReportJson {
    CritReportJson {
        point: r.point.iter().map(field_str).collect(),
        value: field_str(&r.value),
        kind: match &r.kind {
            CritKind::Morse => "Morse".to_string(),
            CritKind::A2 { .. } => "A2".to_string(),
            CritKind::Other { corank } => format!("Other(corank {corank})"),
        },
        hessian_rank: r.rank,
        local_dim: r.local_dim,
        local_basis: r
            .local_basis
            .iter()
            .map(|e| ring.element_string(e))
            .collect(),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct StarWitnessJson {
    pub point: Vec<String>,
    pub hessian_diagonal: Vec<String>,
    pub kernel_index: usize,
    pub infeasibility_certificate: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FibreVerdictJson {
    pub value: String,
    pub points: Vec<CritReportJson>,
    pub all_morse: bool,
    pub all_morse_or_a2: bool,
    pub co0_injective: bool,
    pub costar_certified: String,
    pub split_generates: String,
    pub witnesses: Vec<StarWitnessJson>,
    pub trace: Vec<TraceEntryJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FibreReportJson {
    pub fan: FanFile,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub jacobian_dim: usize,
    pub search_complete: bool,
    pub local_dims_sum_to_ring_dim: bool,
    pub eigen_grouping_consistent: bool,
    pub eigen_exhaustive: bool,
    pub verdicts: Vec<FibreVerdictJson>,
    pub spot_checks: SpotChecks,
}

fn cert_status_str(s: &CertStatus) -> String {
    match s {
        CertStatus::Certified => "certified".to_string(),
        CertStatus::NotCertified(reason) => format!("not certified: {reason}"),
    }
}

pub fn fibre_verdict_to_json(v: &FibreVerdict, ring: &QuotientRing) -> FibreVerdictJson {
    FibreVerdictJson {
        value: field_str(&v.value),
        points: v
            .points
            .iter()
            .map(|r| crit_report_to_json(r, ring))
            .collect(),
        all_morse: v.all_morse,
        all_morse_or_a2: v.all_morse_or_a2,
        co0_injective: v.co0_injective,
        costar_certified: cert_status_str(&v.costar_certified),
        split_generates: cert_status_str(&v.split_generates),
        witnesses: v
            .witnesses
            .iter()
            .map(|w| StarWitnessJson {
                point: w.point.iter().map(field_str).collect(),
                hessian_diagonal: w.diagonal.iter().map(field_str).collect(),
                kernel_index: w.kernel_index,
                infeasibility_certificate: w.certificate.iter().map(field_str).collect(),
            })
            .collect(),
        trace: v.trace.iter().map(TraceEntryJson::from).collect(),
    }
}

pub fn fibre_report_to_json(
    fan: &FanFile,
    ch: u64,
    report: &FibreReport,
    ring: &QuotientRing,
    spot_checks: SpotChecks,
) -> FibreReportJson {
    FibreReportJson {
        fan: fan.clone(),
        characteristic: ch,
        jacobian_dim: report.ring_dim,
        search_complete: report.complete,
        local_dims_sum_to_ring_dim: report.dims_consistent,
        eigen_grouping_consistent: report.eigen_consistent,
        eigen_exhaustive: report.eigen_exhaustive,
        verdicts: report
            .verdicts
            .iter()
            .map(|v| fibre_verdict_to_json(v, ring))
            .collect(),
        spot_checks,
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MasseyJson {
    pub literal_value: String,
    pub tabulated_value: String,
    pub discrepancy: bool,
    pub indeterminacy_dim: usize,
    pub nonzero_mod_indeterminacy: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RelationCheckJson {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<RelationFailureJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RelationFailureJson {
    pub arity: usize,
    pub inputs: Vec<String>,
    pub value: Vec<String>,
}

pub fn relation_check_to_json(c: &RelationCheck) -> RelationCheckJson {
    RelationCheckJson {
        passed: c.passed,
        first_failure: c
            .first_failure
            .as_ref()
            .map(|(k, inputs, value)| RelationFailureJson {
                arity: *k,
                inputs: inputs.clone(),
                value: value.iter().map(field_str).collect(),
            }),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CircleReportJson {
    pub config: String,
    pub mu3_table: Vec<Mu3Entry>,
    pub relation_check_through_arity_4: RelationCheckJson,
    pub massey: MasseyJson,
    pub co1_cochain_is_coboundary: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Mu3Entry {
    pub inputs: Vec<String>,
    pub value: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CertClauseJson {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CertificateJson {
    pub issued: bool,
    pub hypotheses: Vec<CertClauseJson>,
    pub conclusion: String,
    pub axioms: Vec<TraceEntryJson>,
}

pub fn certificate_to_json(c: &NonformalityCertificate) -> CertificateJson {
    CertificateJson {
        issued: c.issued,
        hypotheses: c
            .clauses
            .iter()
            .map(|cl| CertClauseJson {
                name: cl.name.clone(),
                status: if cl.passed { "pass" } else { "fail" }.to_string(),
                detail: cl.detail.clone(),
            })
            .collect(),
        conclusion: c.conclusion.clone(),
        axioms: c.axioms.iter().map(TraceEntryJson::from).collect(),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct HochschildReportJson {
    pub f: String,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub algebra_dim: usize,
    pub hh_dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    pub yoneda_scale: String,
    pub yoneda_scale_invertible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AinfCheckJson {
    pub dim: usize,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub arity_checked: usize,
    pub mu2_degree_additive: bool,
    pub relations: RelationCheckJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coboundary: Option<CoboundaryJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryJson {
    pub length: usize,
    pub is_coboundary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infeasibility_certificate: Option<Vec<String>>,
}

pub fn field_str(f: &FieldElement) -> String {
    format!("{f}")
}

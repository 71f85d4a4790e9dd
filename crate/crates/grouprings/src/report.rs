//! JSON report schema and conversions from the core types.

use std::time::{SystemTime, UNIX_EPOCH};

use grouprings_core::algebra::{AlgElement, Rational};
use grouprings_core::nd::g223::SampleSummary;
use grouprings_core::nd::witness::{GpmnWitness, ThersyReport, WitnessSource};
use grouprings_core::nd::{DkReport, NdBasis, NdStatus, NdVerdict, NdWitness, SnReport, WitnessOrigin};
use grouprings_core::structure::Subgroup;
use grouprings_core::wedderburn::{ComponentClass, WedderburnReport};
use grouprings_core::CayleyGroup;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn rational_from_str(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let (n, d): (BigInt, BigInt) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
    if d == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// SHA-256 of the canonical Cayley table bytes.
pub fn fingerprint(g: &CayleyGroup) -> String {
    hex(&Sha256::digest(g.canonical_bytes()))
}

/// Seconds since the epoch, or `SOURCE_DATE_EPOCH` when set.
pub fn timestamp() -> u64 {
    if let Some(t) = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.parse().ok()) {
        return t;
    }
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// A group ring element as `(element name, "num/den")` pairs over its support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sparse(pub Vec<(String, String)>);

impl Sparse {
    pub fn from_element(g: &CayleyGroup, x: &AlgElement) -> Self {
        Sparse(x.support().into_iter().map(|i| (g.name(i).to_string(), rational_to_string(&x.coeff(i)))).collect())
    }

    pub fn to_element(&self, g: &CayleyGroup) -> Result<AlgElement, String> {
        let mut coeffs = vec![Rational::from_integer(0.into()); g.order()];
        for (name, c) in &self.0 {
            let i = g.element_by_name(name).ok_or_else(|| format!("unknown element {name}"))?;
            coeffs[i] += rational_from_str(c).ok_or_else(|| format!("bad rational {c}"))?;
        }
        Ok(AlgElement::from_rationals(&coeffs))
    }
}

fn names(g: &CayleyGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.name(x).to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub expr: String,
    pub order: usize,
    pub fingerprint: String,
}

impl GroupInfo {
    pub fn new(expr: &str, g: &CayleyGroup) -> Self {
        GroupInfo { expr: expr.to_string(), order: g.order(), fingerprint: fingerprint(g) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassJson {
    Field { conductor: usize },
    Matrix { reduced_degree_at_least: usize },
    DivisionQuaternionOverQ { d: i64, gamma: i64 },
    Undecided,
}

impl From<&ComponentClass> for ClassJson {
    fn from(c: &ComponentClass) -> Self {
        match *c {
            ComponentClass::Field { conductor } => ClassJson::Field { conductor },
            ComponentClass::Matrix { reduced_degree_at_least } => ClassJson::Matrix { reduced_degree_at_least },
            ComponentClass::DivisionQuaternionOverQ { d, gamma } => ClassJson::DivisionQuaternionOverQ { d, gamma },
            ComponentClass::Undecided => ClassJson::Undecided,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub order: usize,
    pub generators: Vec<String>,
}

impl SubgroupJson {
    fn new(g: &CayleyGroup, h: &Subgroup) -> Self {
        SubgroupJson { order: h.order(), generators: names(g, h.gens()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub dim: usize,
    pub dim_formula: usize,
    pub class: ClassJson,
    pub h: SubgroupJson,
    pub k: SubgroupJson,
    pub kernel: SubgroupJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnJson {
    pub total_components: usize,
    pub covered: bool,
    pub uncovered_components: usize,
    pub uncovered_dim: usize,
    pub uncovered_has_nilpotent: bool,
    pub matrix_count_min: usize,
    pub matrix_count_max: usize,
    pub dims: Vec<usize>,
    pub components: Vec<ComponentJson>,
}

impl WedderburnJson {
    pub fn new(g: &CayleyGroup, r: &WedderburnReport) -> Self {
        let components: Vec<ComponentJson> = r
            .components
            .iter()
            .map(|c| ComponentJson {
                dim: c.dim,
                dim_formula: c.dim_formula,
                class: (&c.class).into(),
                h: SubgroupJson::new(g, &c.ssp.h),
                k: SubgroupJson::new(g, &c.ssp.k),
                kernel: SubgroupJson::new(g, &c.kernel),
            })
            .collect();
        let mut dims: Vec<usize> = components.iter().map(|c| c.dim).collect();
        dims.sort_unstable();
        WedderburnJson {
            total_components: r.total_components,
            covered: r.covered,
            uncovered_components: r.uncovered_components,
            uncovered_dim: r.uncovered_dim,
            uncovered_has_nilpotent: r.uncovered_has_nilpotent,
            matrix_count_min: r.matrix_count_min,
            matrix_count_max: r.matrix_count_max,
            dims,
            components,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnJson {
    pub holds: bool,
    pub via_hats: bool,
    pub via_epsilons: bool,
    pub consistent: bool,
}

impl From<SnReport> for SnJson {
    fn from(r: SnReport) -> Self {
        SnJson { holds: r.direct, via_hats: r.via_hats, via_epsilons: r.via_epsilons, consistent: r.consistent() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DkJson {
    pub holds: bool,
    pub nonzero_epsilon_count: usize,
    pub cyclic_class_count: usize,
}

impl From<DkReport> for DkJson {
    fn from(r: DkReport) -> Self {
        DkJson { holds: r.holds, nonzero_epsilon_count: r.nonzero_epsilon_count, cyclic_class_count: r.cyclic_class_count }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NdWitnessJson {
    pub origin: String,
    pub n: Sparse,
    pub e: Sparse,
    pub element: String,
    pub coefficient: String,
}

pub fn status_name(s: NdStatus) -> &'static str {
    match s {
        NdStatus::Holds => "Holds",
        NdStatus::Fails => "Fails",
        NdStatus::Undetermined => "Undetermined",
    }
}

fn basis_name(b: NdBasis) -> &'static str {
    match b {
        NdBasis::OneMatrixComponent => "one_matrix_component",
        NdBasis::KnownException => "known_exception",
        NdBasis::WitnessFound => "witness_found",
        NdBasis::FamilyExhausted => "family_exhausted",
    }
}

fn source_name(s: WitnessSource) -> &'static str {
    match s {
        WitnessSource::Formula => "formula",
        WitnessSource::Triangular => "triangular",
    }
}

fn origin_name(o: WitnessOrigin) -> String {
    match o {
        WitnessOrigin::Triple(s) => format!("triple_{}", source_name(s)),
        WitnessOrigin::Bicyclic => "bicyclic".into(),
        WitnessOrigin::Involution => "involution".into(),
        WitnessOrigin::Supplied => "supplied".into(),
    }
}

impl NdWitnessJson {
    pub fn new(g: &CayleyGroup, w: &NdWitness) -> Self {
        NdWitnessJson {
            origin: origin_name(w.origin),
            n: Sparse::from_element(g, &w.n),
            e: Sparse::from_element(g, &w.e),
            element: g.name(w.element).to_string(),
            coefficient: rational_to_string(&w.coefficient),
        }
    }

    /// Rebuilds the witness in `g`; the origin is not needed for verification.
    pub fn to_witness(&self, g: &CayleyGroup) -> Result<NdWitness, String> {
        Ok(NdWitness {
            n: self.n.to_element(g)?,
            e: self.e.to_element(g)?,
            element: g.element_by_name(&self.element).ok_or_else(|| format!("unknown element {}", self.element))?,
            coefficient: rational_from_str(&self.coefficient).ok_or("bad coefficient")?,
            origin: WitnessOrigin::Supplied,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NdJson {
    pub status: String,
    pub basis: String,
    pub witness: Option<NdWitnessJson>,
}

impl NdJson {
    pub fn new(g: &CayleyGroup, v: &NdVerdict) -> Self {
        NdJson {
            status: status_name(v.status).into(),
            basis: basis_name(v.basis).into(),
            witness: v.witness.as_ref().map(|w| NdWitnessJson::new(g, w)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertiesJson {
    pub sn: SnJson,
    pub ssn: bool,
    pub dedekind: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub supersolvable: bool,
    pub dk: DkJson,
    pub bicyclic_resistant: String,
    pub nd: NdJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceJson {
    pub seed: u64,
    pub samples: usize,
    pub nonzero: usize,
    pub passed: usize,
    pub all_pass: bool,
}

impl From<SampleSummary> for CongruenceJson {
    fn from(s: SampleSummary) -> Self {
        CongruenceJson { seed: s.seed, samples: s.samples, nonzero: s.nonzero, passed: s.passed, all_pass: s.all_pass() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleChecks {
    pub integral_inputs: bool,
    pub y_central: bool,
    pub e_central_idempotent: bool,
    pub orthogonal: bool,
    pub r_nilpotent: bool,
    pub s_nilpotent: bool,
    pub square_zero: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
    pub condition_iv: bool,
    pub n_nilpotent: bool,
    pub ne_matches: bool,
    pub accepted: bool,
}

impl From<&ThersyReport> for TripleChecks {
    fn from(r: &ThersyReport) -> Self {
        TripleChecks {
            integral_inputs: r.integral_inputs,
            y_central: r.y_central,
            e_central_idempotent: r.e_central_idempotent,
            orthogonal: r.orthogonal,
            r_nilpotent: r.r_nilpotent,
            s_nilpotent: r.s_nilpotent,
            square_zero: r.square_zero,
            condition_ii: r.condition_ii,
            condition_iii: r.condition_iii,
            condition_iv: r.condition_iv,
            n_nilpotent: r.n_nilpotent,
            ne_matches: r.ne_matches,
            accepted: r.accepted(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleJson {
    pub p: u32,
    pub source: String,
    pub r: Sparse,
    pub s: Sparse,
    pub y: Sparse,
    pub e: Sparse,
    pub checks: TripleChecks,
}

impl TripleJson {
    pub fn new(g: &CayleyGroup, w: &GpmnWitness, report: &ThersyReport) -> Self {
        let t = &w.triple;
        TripleJson {
            p: t.p,
            source: source_name(w.source).into(),
            r: Sparse::from_element(g, &t.r),
            s: Sparse::from_element(g, &t.s),
            y: Sparse::from_element(g, &t.y),
            e: Sparse::from_element(g, &t.e),
            checks: report.into(),
        }
    }
}

/// One command result. Sections not produced by the command are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub schema_version: u32,
    pub artifact_version: String,
    pub command: String,
    pub timestamp: u64,
    pub group: GroupInfo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedderburn: Option<WedderburnJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertiesJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sn: Option<SnJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ssn: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dk: Option<DkJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nd: Option<NdJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub congruence: Option<CongruenceJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<TripleJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<NdWitnessJson>,
}

impl AnalysisRecord {
    pub fn new(command: &str, group: GroupInfo) -> Self {
        AnalysisRecord {
            schema_version: SCHEMA_VERSION,
            artifact_version: ARTIFACT_VERSION.into(),
            command: command.into(),
            timestamp: timestamp(),
            group,
            wedderburn: None,
            properties: None,
            sn: None,
            ssn: None,
            dk: None,
            nd: None,
            congruence: None,
            triple: None,
            witnesses: Vec::new(),
        }
    }

    /// The ND status carried by the record, if any.
    pub fn nd_status(&self) -> Option<&str> {
        self.nd.as_ref().or(self.properties.as_ref().map(|p| &p.nd)).map(|n| n.status.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use grouprings_core::group::families::dihedral;

    #[test]
    fn rationals_round_trip() {
        for s in ["3/4", "-1/2", "0/1", "7/1"] {
            assert_eq!(rational_to_string(&rational_from_str(s).unwrap()), s);
        }
        assert_eq!(rational_from_str("5"), Some(Rational::from_integer(5.into())));
        assert_eq!(rational_from_str("1/0"), None);
        assert_eq!(rational_from_str("x"), None);
    }

    #[test]
    fn sparse_round_trip() {
        let g = dihedral(8).unwrap();
        let x = AlgElement::from_rationals(
            &(0..8).map(|i| Rational::new((i as i64 - 3).into(), 4.into())).collect::<Vec<_>>(),
        );
        let s = Sparse::from_element(&g, &x);
        assert_eq!(s.0.len(), 7);
        assert_eq!(s.to_element(&g).unwrap(), x);
        assert!(Sparse(vec![("zz".into(), "1/1".into())]).to_element(&g).is_err());
    }

    #[test]
    fn fingerprint_is_stable() {
        let a = fingerprint(&dihedral(8).unwrap());
        assert_eq!(a.len(), 64);
        assert_eq!(a, fingerprint(&dihedral(8).unwrap()));
        assert_ne!(a, fingerprint(&dihedral(10).unwrap()));
    }
}

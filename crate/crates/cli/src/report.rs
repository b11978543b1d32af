//! The machine-readable report emitted by `--json`: one JSON object per
//! invocation, with a fixed field order and no nondeterministic content, so
//! identical inputs produce byte-identical output.

use serde::Serialize;

#[derive(Serialize, Default)]
pub struct Report {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kmax: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing_rays: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unsupported_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilization_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slices: Option<Vec<SliceReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segment: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locus: Option<LocusReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ray_curve: Option<RayCurveReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_ray: Option<Vec<PerRayReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_ray: Option<Vec<i64>>,
    pub caveats: Vec<String>,
}

#[derive(Serialize)]
pub struct SliceReport {
    pub k: usize,
    pub dim: usize,
    pub orders: Vec<usize>,
}

#[derive(Serialize)]
pub struct LocusReport {
    /// "every-point" or the monic constraint form in the coordinates (a : b) of Q.
    pub constraint: String,
    pub roots: Vec<RootReport>,
    pub residual_degree: usize,
}

#[derive(Serialize)]
pub struct RootReport {
    pub point: String,
    pub multiplicity: usize,
}

#[derive(Serialize)]
pub struct RayCurveReport {
    pub ray: Vec<i64>,
    pub lambda: usize,
    pub big_degree: usize,
    pub basis: Vec<String>,
}

#[derive(Serialize)]
pub struct PerRayReport {
    pub ray: Vec<i64>,
    pub lambda: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub big_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            ..Report::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports are serializable")
    }
}

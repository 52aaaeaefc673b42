//! JSON instance documents and their conversion into oracles.

use serde::{Deserialize, Serialize};
use submax::{
    CoverageFunction, CutFunction, FacilityLocationFunction, GraphicMatroid, GroundSet,
    MatroidOracle, ModularFunction, PartitionMatroid, SubmodularOracle, UniformMatroid,
};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub schema_version: u32,
    pub n: usize,
    pub function: FunctionSpec,
    pub matroid: MatroidSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FunctionSpec {
    Cut { edges: Vec<(usize, usize, f64)> },
    Coverage { universe_weights: Vec<f64>, covers: Vec<Vec<usize>> },
    Facility { benefits: Vec<Vec<f64>> },
    Modular { weights: Vec<f64> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatroidSpec {
    Uniform { k: usize },
    Partition { parts: Vec<usize>, capacities: Vec<usize> },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
}

pub struct LoadedInstance {
    pub file: InstanceFile,
    pub function: Box<dyn SubmodularOracle>,
    pub matroid: Box<dyn MatroidOracle>,
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, CliError> {
    let file: InstanceFile = serde_json::from_str(text)
        .map_err(|e| CliError::Validation(format!("instance parse error: {e}")))?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(CliError::Validation(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            file.schema_version
        )));
    }
    Ok(file)
}

/// Builds and validates the oracles described by `file`. Construction errors
/// from the library (negative weights, out-of-range ids, ...) surface as
/// validation failures naming the offending section.
pub fn build_oracles(file: InstanceFile) -> Result<LoadedInstance, CliError> {
    let ground = GroundSet::new(file.n)
        .map_err(|e| CliError::Validation(format!("field n: {e}")))?;
    let function: Box<dyn SubmodularOracle> = match file.function.clone() {
        FunctionSpec::Cut { edges } => Box::new(
            CutFunction::new(ground, edges)
                .map_err(|e| CliError::Validation(format!("function.edges: {e}")))?,
        ),
        FunctionSpec::Coverage { universe_weights, covers } => Box::new(
            CoverageFunction::new(ground, universe_weights, covers)
                .map_err(|e| CliError::Validation(format!("function: {e}")))?,
        ),
        FunctionSpec::Facility { benefits } => Box::new(
            FacilityLocationFunction::new(ground, benefits)
                .map_err(|e| CliError::Validation(format!("function.benefits: {e}")))?,
        ),
        FunctionSpec::Modular { weights } => Box::new(
            ModularFunction::new(ground, weights)
                .map_err(|e| CliError::Validation(format!("function.weights: {e}")))?,
        ),
    };
    let matroid: Box<dyn MatroidOracle> = match file.matroid.clone() {
        MatroidSpec::Uniform { k } => Box::new(UniformMatroid::new(ground, k)),
        MatroidSpec::Partition { parts, capacities } => {
            for (p, &cap) in capacities.iter().enumerate() {
                let size = parts.iter().filter(|&&q| q == p).count();
                if cap > size {
                    eprintln!(
                        "warning: matroid part {p} has capacity {cap} but only {size} elements"
                    );
                }
            }
            Box::new(
                PartitionMatroid::new(ground, parts, capacities)
                    .map_err(|e| CliError::Validation(format!("matroid: {e}")))?,
            )
        }
        MatroidSpec::Graphic { vertices, edges } => Box::new(
            GraphicMatroid::new(ground, vertices, edges)
                .map_err(|e| CliError::Validation(format!("matroid: {e}")))?,
        ),
    };
    Ok(LoadedInstance { file, function, matroid })
}

pub fn load_instance(path: &std::path::Path) -> Result<LoadedInstance, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    build_oracles(parse_instance(&text)?)
}

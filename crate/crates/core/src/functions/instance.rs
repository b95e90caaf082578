//! JSON instance files.
//!
//! ```text
//! { "type": "modular",  "weights": [..] }
//! { "type": "tabular",  "m": 3, "values": {"{}": 0.0, "{0}": 2.0, ...} }
//! { "type": "coverage", "universe_weights": [..], "covers": [[..], ..] }
//! { "type": "logdet",   "d": 20, "matrices": [[[..],..], ..] }
//! { "type": "logdet_random", "m": 10, "d": 20, "seed": 42 }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{
    random_psd_instance, DenseMatrix, LogDetFunction, ModularFunction, TabularFunction,
    WeightedCoverageFunction,
};
use crate::error::{Error, Result};
use crate::oracle::SetFunction;
use crate::subset::{parse_members, Subset};

const KNOWN_TYPES: &[&str] = &["modular", "tabular", "coverage", "logdet", "logdet_random"];

/// The on-disk description of an objective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceSpec {
    Modular {
        weights: Vec<f64>,
    },
    Tabular {
        m: usize,
        values: BTreeMap<String, f64>,
    },
    Coverage {
        universe_weights: Vec<f64>,
        covers: Vec<Vec<usize>>,
    },
    Logdet {
        d: usize,
        matrices: Vec<Vec<Vec<f64>>>,
    },
    LogdetRandom {
        m: usize,
        d: usize,
        seed: u64,
    },
}

/// Any of the shipped objective families.
#[derive(Debug, Clone, PartialEq)]
pub enum Objective {
    Modular(ModularFunction),
    Tabular(TabularFunction),
    Coverage(WeightedCoverageFunction),
    LogDet(LogDetFunction),
}

impl SetFunction for Objective {
    fn ground_size(&self) -> usize {
        match self {
            Objective::Modular(f) => f.ground_size(),
            Objective::Tabular(f) => f.ground_size(),
            Objective::Coverage(f) => f.ground_size(),
            Objective::LogDet(f) => f.ground_size(),
        }
    }

    fn value(&self, set: &Subset) -> f64 {
        match self {
            Objective::Modular(f) => f.value(set),
            Objective::Tabular(f) => f.value(set),
            Objective::Coverage(f) => f.value(set),
            Objective::LogDet(f) => f.value(set),
        }
    }
}

impl Objective {
    pub fn family(&self) -> &'static str {
        match self {
            Objective::Modular(_) => "modular",
            Objective::Tabular(_) => "tabular",
            Objective::Coverage(_) => "coverage",
            Objective::LogDet(_) => "logdet",
        }
    }

    /// The explicit (non-generator) file form of this objective.
    pub fn to_spec(&self) -> InstanceSpec {
        match self {
            Objective::Modular(f) => InstanceSpec::Modular {
                weights: f.weights().to_vec(),
            },
            Objective::Tabular(f) => {
                let m = f.ground_size();
                let values = f
                    .values()
                    .iter()
                    .enumerate()
                    .map(|(mask, &v)| {
                        let s = Subset::from_mask(mask as u64, m).expect("mask in range");
                        (s.to_string(), v)
                    })
                    .collect();
                InstanceSpec::Tabular { m, values }
            }
            Objective::Coverage(f) => InstanceSpec::Coverage {
                universe_weights: f.universe_weights().to_vec(),
                covers: f.covers().to_vec(),
            },
            Objective::LogDet(f) => InstanceSpec::Logdet {
                d: f.dim(),
                matrices: f.matrices().iter().map(DenseMatrix::to_rows).collect(),
            },
        }
    }
}

impl From<ModularFunction> for Objective {
    fn from(f: ModularFunction) -> Self {
        Objective::Modular(f)
    }
}

impl From<TabularFunction> for Objective {
    fn from(f: TabularFunction) -> Self {
        Objective::Tabular(f)
    }
}

impl From<WeightedCoverageFunction> for Objective {
    fn from(f: WeightedCoverageFunction) -> Self {
        Objective::Coverage(f)
    }
}

impl From<LogDetFunction> for Objective {
    fn from(f: LogDetFunction) -> Self {
        Objective::LogDet(f)
    }
}

impl InstanceSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        match raw.get("type") {
            Some(Value::String(t)) if KNOWN_TYPES.contains(&t.as_str()) => {}
            Some(Value::String(t)) => {
                return Err(Error::Parse(format!(
                    "unknown instance type {t:?}; expected one of {}",
                    KNOWN_TYPES.join(", ")
                )))
            }
            Some(other) => {
                return Err(Error::Parse(format!(
                    "field \"type\" must be a string, got {other}"
                )))
            }
            None => return Err(Error::Parse("missing field \"type\"".into())),
        }
        serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance specs always serialize")
    }

    pub fn build(&self) -> Result<Objective> {
        Ok(match self {
            InstanceSpec::Modular { weights } => ModularFunction::new(weights.clone())?.into(),
            InstanceSpec::Tabular { m, values } => build_tabular(*m, values)?.into(),
            InstanceSpec::Coverage {
                universe_weights,
                covers,
            } => WeightedCoverageFunction::new(universe_weights.clone(), covers.clone())?.into(),
            InstanceSpec::Logdet { d, matrices } => {
                let mats = matrices
                    .iter()
                    .enumerate()
                    .map(|(i, rows)| {
                        let mat = DenseMatrix::from_rows(rows)?;
                        if mat.dim() != *d {
                            return Err(Error::invalid(format!(
                                "matrix {i} has dimension {}, but d = {d}",
                                mat.dim()
                            )));
                        }
                        Ok(mat)
                    })
                    .collect::<Result<Vec<_>>>()?;
                LogDetFunction::new(mats)?.into()
            }
            InstanceSpec::LogdetRandom { m, d, seed } => random_psd_instance(*m, *d, *seed)?.into(),
        })
    }
}

fn build_tabular(m: usize, values: &BTreeMap<String, f64>) -> Result<TabularFunction> {
    if m == 0 || m > super::tabular::MAX_TABULAR_SIZE {
        return Err(Error::invalid(format!("tabular m = {m} out of range")));
    }
    let mut table = vec![None; 1 << m];
    for (key, &v) in values {
        let members = parse_members(key)?;
        let s = Subset::from_indices(members, m)
            .map_err(|e| Error::Parse(format!("tabular key {key:?}: {e}")))?;
        let mask = s.to_mask().expect("m <= 20") as usize;
        if table[mask].replace(v).is_some() {
            return Err(Error::Parse(format!("tabular key {key:?} given twice")));
        }
    }
    let values = table
        .into_iter()
        .enumerate()
        .map(|(mask, v)| {
            v.ok_or_else(|| {
                let s = Subset::from_mask(mask as u64, m).expect("mask in range");
                Error::invalid(format!("tabular values missing subset {s}"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TabularFunction::new(m, values)
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<Objective> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    InstanceSpec::from_json(&text)?.build()
}

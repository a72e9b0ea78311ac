//! Scenario files: `[model]`, `[amplitude]`, `[sigma]`, `[oracle]` plus the
//! `ζ` values and truncation order, in TOML.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::amplitude::{AmplitudeSpec, ScriptS};
use crate::error::{Error, Result};
use crate::model::LocalModel;
use crate::oracle::OracleConfig;
use crate::schwartz::SchwartzSpec;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    /// Signed integer weights, positive first.
    pub weights: Vec<i64>,
    /// `J(F)`.
    #[serde(default)]
    pub j_f: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Levels `ζ` of `J`; the model sees `ζ_F = ζ − J(F)`.
    pub zeta_values: Vec<f64>,
    /// Truncation order `M`.
    pub order: usize,
    pub model: ModelConfig,
    pub amplitude: AmplitudeSpec,
    pub sigma: SchwartzSpec,
    #[serde(default)]
    pub oracle: OracleConfig,
}

impl Scenario {
    pub fn from_toml(text: &str) -> Result<Self> {
        let sc: Scenario = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        sc.validate()?;
        Ok(sc)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        let model = self.local_model()?;
        self.amplitude.validate(&model).map_err(as_config)?;
        SchwartzSpec::new(self.sigma.poly.clone(), self.sigma.tau).map_err(as_config)?;
        self.oracle.validate()?;
        if self.zeta_values.is_empty() {
            return Err(Error::Config("zeta_values must not be empty".into()));
        }
        if let Some(z) = self.zeta_values.iter().find(|z| !z.is_finite()) {
            return Err(Error::Config(format!("zeta value {z} is not finite")));
        }
        Ok(())
    }

    pub fn local_model(&self) -> Result<LocalModel> {
        LocalModel::new(self.model.weights.clone(), self.model.j_f).map_err(as_config)
    }

    pub fn script(&self) -> Result<ScriptS> {
        ScriptS::new(&self.local_model()?, &self.amplitude)
    }

    pub fn zeta_f(&self, zeta: f64) -> f64 {
        zeta - self.model.j_f
    }
}

fn as_config(e: Error) -> Error {
    match e {
        Error::Domain(m) => Error::Config(m),
        other => other,
    }
}

//! Run specifications read by the command-line front end.
//!
//! Each subcommand reads one JSON object. Unknown fields are rejected so
//! typos surface as invalid specs rather than silently ignored settings.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::json::{
    ConfigJson, GpConditionJson, GpRequirementJson, PartitionJson, PointJson, RequirementJson, ToastJson,
};
use twocolor_core::{Config, Point, Rect};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Pgm,
    Ascii,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitsSpec {
    pub max_side: Option<i64>,
    pub max_steps: Option<usize>,
}

/// A seeded random configuration on `origin + [0, width) × [0, height)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSeed {
    pub width: i64,
    pub height: i64,
    pub seed: u64,
    #[serde(default)]
    pub origin: PointJson,
}

impl RandomSeed {
    pub fn generate(&self) -> twocolor_core::Result<Config> {
        let rect = Rect::with_size(Point::new(self.origin[0], self.origin[1]), self.width, self.height)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        Ok(Config::from_fn(rect, |_| rng.random::<bool>()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategySpec {
    #[default]
    PreferInPlace,
    Tiling,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildMtSpec {
    pub seed: Option<ConfigJson>,
    pub random: Option<RandomSeed>,
    #[serde(default)]
    pub odd: bool,
    #[serde(default)]
    pub schedule: Vec<RequirementJson>,
    #[serde(default)]
    pub strategy: StrategySpec,
    #[serde(default)]
    pub limits: LimitsSpec,
    pub format: Option<Format>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildGpSpec {
    #[serde(default = "default_n")]
    pub n: i64,
    pub seed: Option<GpConditionJson>,
    /// Random bits with the hole in the top right corner.
    pub random: Option<RandomSeed>,
    #[serde(default)]
    pub schedule: Vec<GpRequirementJson>,
    #[serde(default = "default_copies")]
    pub copies: i64,
    #[serde(default)]
    pub limits: LimitsSpec,
    pub format: Option<Format>,
}

fn default_n() -> i64 {
    2
}

fn default_copies() -> i64 {
    twocolor_core::forcing_gp::WINDOW_COPIES
}

/// Paths are relative to the spec file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySpec {
    pub certificate: PathBuf,
    pub window: Option<PathBuf>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToastSpec {
    pub toast: Option<ToastJson>,
    /// Path to a toast JSON file, relative to the spec file.
    pub input: Option<PathBuf>,
    /// Number of levels of the concentric-squares instance.
    pub concentric: Option<usize>,
    #[serde(default = "default_probes")]
    pub probes: Vec<PointJson>,
    pub format: Option<Format>,
}

fn default_probes() -> Vec<PointJson> {
    vec![[0, 0]]
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkersSpec {
    pub a: i64,
    /// Defaults to `5(2a+1)²`.
    pub window_side: Option<i64>,
    /// Defaults to one more than the threshold.
    pub seg_len: Option<i64>,
    /// A configuration on `[−a, a]²`.
    pub seed: Option<ConfigJson>,
    #[serde(default)]
    pub random_seed: u64,
    pub partitions: Option<PartitionJson>,
    #[serde(default)]
    pub probes: Vec<PointJson>,
    pub format: Option<Format>,
}

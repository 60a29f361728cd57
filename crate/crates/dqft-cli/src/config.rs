//! Optional TOML config file and its merge with command-line flags.
//!
//! Keys mirror the long option names; explicit flags always win. Boolean
//! keys in the config enable behavior that the corresponding flag would.

use std::path::Path;

use dqft::{Encoding, Engine, Side, TransformAxis};
use serde::Deserialize;

use crate::cli::{EncodingArg, PipelineOpts, SideArg};
use crate::commands::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct ConfigFile {
    pub side: Option<SideArg>,
    pub axis: Option<String>,
    pub encoding: Option<EncodingArg>,
    pub fast: Option<bool>,
    pub workers: Option<usize>,
    pub renormalize_input: Option<bool>,
    pub hemisphere_align: Option<bool>,
    pub renormalize: Option<bool>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("config {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }
}

/// Pipeline options after merging flags, config and defaults.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub side: Side,
    pub axis: TransformAxis,
    pub encoding: Encoding,
    pub engine: Engine,
    pub workers: Option<usize>,
    pub renormalize_input: bool,
    pub hemisphere_align: bool,
    /// Only meaningful for `filter`; carried here so the config file can
    /// set it.
    pub renormalize: bool,
}

pub fn resolve(opts: &PipelineOpts, renormalize_flag: bool) -> Result<Resolved, CliError> {
    let config = match &opts.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };

    let side = match opts.side.or(config.side) {
        Some(SideArg::Left) => Side::Left,
        Some(SideArg::Right) | None => Side::Right,
    };
    let axis_spec = opts
        .axis
        .clone()
        .or(config.axis)
        .unwrap_or_else(|| "1,1,1".to_string());
    let axis = parse_axis(&axis_spec)?;
    let encoding = match opts.encoding.or(config.encoding) {
        Some(EncodingArg::Pure) => Encoding::Pure,
        Some(EncodingArg::Rigid) | None => Encoding::Rigid,
    };
    let engine = if opts.fast || config.fast.unwrap_or(false) {
        Engine::Fast
    } else {
        Engine::Naive
    };
    Ok(Resolved {
        side,
        axis,
        encoding,
        engine,
        workers: opts.workers.or(config.workers),
        renormalize_input: opts.renormalize_input || config.renormalize_input.unwrap_or(false),
        hemisphere_align: opts.hemisphere_align || config.hemisphere_align.unwrap_or(false),
        renormalize: renormalize_flag || config.renormalize.unwrap_or(false),
    })
}

pub fn parse_axis(spec: &str) -> Result<TransformAxis, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "axis must be three comma-separated reals, got {spec:?}"
        )));
    }
    let mut v = [0.0f64; 3];
    for (i, part) in parts.iter().enumerate() {
        v[i] = part
            .parse()
            .map_err(|e| CliError::Usage(format!("axis component {}: {e}", i + 1)))?;
    }
    TransformAxis::from_vector(v).map_err(|e| CliError::Usage(e.to_string()))
}

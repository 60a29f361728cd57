//! Argument surface of the `dqft` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(
    name = "dqft",
    version,
    about = "Dual-quaternion motion signals: spectra, filtering, synthesis and conversion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a motion track and export its spectrum.
    Spectrum(SpectrumArgs),
    /// Filter a motion track in the frequency domain.
    Filter(FilterArgs),
    /// Check forward/inverse reconstruction of a track.
    Roundtrip(RoundtripArgs),
    /// Generate a synthetic motion track.
    Synth(SynthArgs),
    /// Convert a track between formats and encodings.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingArg {
    Rigid,
    Pure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Csv,
    Json,
}

/// Options shared by the pipeline commands. Unset values fall back to the
/// config file (when given), then to built-in defaults.
#[derive(Debug, Clone, Args)]
pub struct PipelineOpts {
    /// Which side of the samples the transform kernel multiplies on.
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,

    /// Transform axis as three comma-separated reals, normalized internally.
    #[arg(long)]
    pub axis: Option<String>,

    /// How motion samples map onto dual-quaternions.
    #[arg(long, value_enum)]
    pub encoding: Option<EncodingArg>,

    /// Use the FFT-backed fast transform path.
    #[arg(long)]
    pub fast: bool,

    /// Worker threads for the transform stages (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,

    /// Renormalize off-unit input rotations instead of rejecting the row.
    #[arg(long)]
    pub renormalize_input: bool,

    /// Flip rotation signs for hemisphere continuity before encoding.
    #[arg(long)]
    pub hemisphere_align: bool,

    /// TOML config file; keys match the long option names.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Input track (CSV or JSON, inferred from the extension).
    #[arg(short, long)]
    pub input: PathBuf,

    /// Output spectrum file.
    #[arg(short, long)]
    pub output: PathBuf,

    /// Output format (default: inferred from the output extension, else csv).
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,

    #[command(flatten)]
    pub pipeline: PipelineOpts,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    /// Input track (CSV or JSON, inferred from the extension).
    #[arg(short, long)]
    pub input: PathBuf,

    /// Output track file.
    #[arg(short, long)]
    pub output: PathBuf,

    /// Output format (default: inferred from the output extension, else csv).
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,

    /// Low-pass cutoff, in bins or hertz with an `hz` suffix.
    #[arg(long)]
    pub low_pass: Option<String>,

    /// High-pass cutoff, in bins or hertz with an `hz` suffix.
    #[arg(long)]
    pub high_pass: Option<String>,

    /// Band-pass range `lo:hi`, each bound in bins or hertz.
    #[arg(long)]
    pub band: Option<String>,

    /// Renormalize filtered samples onto the unit manifold with hemisphere
    /// continuity (rigid encoding only).
    #[arg(long)]
    pub renormalize: bool,

    #[command(flatten)]
    pub pipeline: PipelineOpts,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    /// Input track (CSV or JSON, inferred from the extension).
    #[arg(short, long)]
    pub input: PathBuf,

    #[command(flatten)]
    pub pipeline: PipelineOpts,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Number of frames to generate.
    #[arg(long)]
    pub length: usize,

    /// Component spec `bin:rotAmp:transAmp:ax,ay,az;...`; empty for an
    /// identity track.
    #[arg(long, default_value = "")]
    pub components: String,

    /// Sample rate of the generated track in Hz.
    #[arg(long, default_value_t = 1.0)]
    pub sample_rate: f64,

    /// Output track file.
    #[arg(short, long)]
    pub output: PathBuf,

    /// Output format (default: inferred from the output extension, else csv).
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Input track (CSV or JSON, inferred from the extension).
    #[arg(short, long)]
    pub input: PathBuf,

    /// Output track file.
    #[arg(short, long)]
    pub output: PathBuf,

    /// Output format (default: inferred from the output extension, else csv).
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,

    /// Re-encode the track: `rigid` rebuilds poses from rotation vectors,
    /// `pure` writes Euler-channel rotation vectors (translations dropped).
    #[arg(long, value_enum)]
    pub to_encoding: Option<EncodingArg>,

    /// Renormalize off-unit input rotations instead of rejecting the row.
    #[arg(long)]
    pub renormalize_input: bool,

    /// Flip rotation signs for hemisphere continuity before re-encoding.
    #[arg(long)]
    pub hemisphere_align: bool,
}

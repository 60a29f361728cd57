//! Command implementations and the exit-code policy.
//!
//! Exit codes: 0 success, 2 invalid flags or input validation failure,
//! 3 I/O failure, 4 degenerate sample during renormalization, 5 round-trip
//! reconstruction bound exceeded. Output files are written atomically, so
//! nothing lands on the output path when a command fails.

use std::fmt;
use std::path::Path;

use dqft::{
    export_spectrum, filter_signal_with, forward, generate_synthetic, inverse, load_track_path,
    save_track, DQSignal, Encoding, EulerSample, FileFormat, FilterError, FrequencyMask,
    LoadOptions, MotionTrack, SynthComponent, TrackError, TrackSamples,
};

use crate::cli::{
    Cli, Command, ConvertArgs, EncodingArg, FilterArgs, FormatArg, RoundtripArgs, SpectrumArgs,
    SynthArgs,
};
use crate::config::{resolve, Resolved};
use crate::output::write_atomic;

const ROUNDTRIP_BOUND: f64 = 1e-9;

#[derive(Debug)]
pub enum CliError {
    /// Invalid flags or input that failed validation.
    Usage(String),
    /// Filesystem-level failure.
    Io(String),
    /// A sample collapsed during renormalization.
    Degenerate(String),
    /// Reconstruction error above the round-trip bound.
    RoundtripExceeded(f64),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Degenerate(_) => 4,
            CliError::RoundtripExceeded(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::Degenerate(msg) => write!(f, "{msg}"),
            CliError::RoundtripExceeded(err) => {
                write!(f, "reconstruction error {err:e} exceeds {ROUNDTRIP_BOUND:e}")
            }
        }
    }
}

impl From<TrackError> for CliError {
    fn from(err: TrackError) -> Self {
        match err {
            TrackError::Io(e) => CliError::Io(e.to_string()),
            TrackError::DegenerateSample { .. } => CliError::Degenerate(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<FilterError> for CliError {
    fn from(err: FilterError) -> Self {
        match err {
            FilterError::DegenerateSample { .. } => CliError::Degenerate(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub fn run(args: Cli) -> Result<(), CliError> {
    match args.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Filter(args) => cmd_filter(args),
        Command::Roundtrip(args) => cmd_roundtrip(args),
        Command::Synth(args) => cmd_synth(args),
        Command::Convert(args) => cmd_convert(args),
    }
}

/// Run `body` on a rayon pool of the requested size, or inline on the
/// default pool. Results are identical either way: the per-bin summation
/// order is fixed.
fn with_workers<T: Send>(
    workers: Option<usize>,
    body: impl FnOnce() -> T + Send,
) -> Result<T, CliError> {
    match workers {
        None => Ok(body()),
        Some(0) => Err(CliError::Usage("worker count must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("worker pool: {e}")))?;
            Ok(pool.install(body))
        }
    }
}

fn load(path: &Path, renormalize_input: bool) -> Result<MotionTrack, CliError> {
    let options = LoadOptions {
        renormalize_rotations: renormalize_input,
    };
    Ok(load_track_path(path, &options)?)
}

fn output_format(explicit: Option<FormatArg>, path: &Path) -> FileFormat {
    match explicit {
        Some(FormatArg::Csv) => FileFormat::Csv,
        Some(FormatArg::Json) => FileFormat::Json,
        None => FileFormat::from_path(path).unwrap_or(FileFormat::Csv),
    }
}

fn encode(track: &MotionTrack, resolved: &Resolved) -> Result<DQSignal, CliError> {
    Ok(track.to_signal(resolved.encoding, resolved.hemisphere_align)?)
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<(), CliError> {
    let resolved = resolve(&args.pipeline, false)?;
    let track = load(&args.input, resolved.renormalize_input)?;
    let signal = encode(&track, &resolved)?;
    let spectrum = with_workers(resolved.workers, || {
        forward(&signal, &resolved.axis, resolved.side, resolved.engine)
    })?;
    let format = output_format(args.format, &args.output);
    let mut bytes = Vec::new();
    export_spectrum(&spectrum, &mut bytes, format)?;
    write_atomic(&args.output, &bytes)
}

fn cmd_filter(args: FilterArgs) -> Result<(), CliError> {
    let resolved = resolve(&args.pipeline, args.renormalize)?;
    if resolved.renormalize && resolved.encoding == Encoding::Pure {
        return Err(CliError::Usage(
            "renormalization applies to the rigid encoding; pure-encoded samples \
             are not unit dual-quaternions"
                .into(),
        ));
    }
    let track = load(&args.input, resolved.renormalize_input)?;
    let signal = encode(&track, &resolved)?;
    let mask = build_mask(&args, signal.len(), signal.sample_rate())?;

    let (filtered, report) = with_workers(resolved.workers, || {
        filter_signal_with(
            &signal,
            &mask,
            resolved.side,
            &resolved.axis,
            resolved.renormalize,
            resolved.engine,
        )
    })??;

    // Decode back into the input's schema. Euler tracks stay Euler (the
    // transform keeps their dual parts and scalar parts at rounding
    // level). Rigid tracks must hold unit rotations, so decoding always
    // projects samples onto the unit manifold; the --renormalize flag
    // additionally enforced hemisphere continuity at the signal level
    // above.
    let out_track = if track.is_rigid() {
        MotionTrack::from_signal(&filtered, resolved.encoding, track.sample_rate(), true)?
    } else {
        MotionTrack::euler_from_signal(&filtered, track.sample_rate())?
    };
    let format = output_format(args.format, &args.output);
    let mut bytes = Vec::new();
    save_track(&out_track, &mut bytes, format)?;
    write_atomic(&args.output, &bytes)?;
    println!(
        "kept_bins={} attenuated_energy_fraction={} renormalized={}",
        report.kept_bins, report.attenuated_energy_fraction, report.renormalized
    );
    Ok(())
}

fn cmd_roundtrip(args: RoundtripArgs) -> Result<(), CliError> {
    let resolved = resolve(&args.pipeline, false)?;
    let track = load(&args.input, resolved.renormalize_input)?;
    let signal = encode(&track, &resolved)?;
    let reconstructed = with_workers(resolved.workers, || {
        let spectrum = forward(&signal, &resolved.axis, resolved.side, resolved.engine);
        inverse(&spectrum, resolved.engine)
    })?;
    let mut max_error = 0.0f64;
    for (a, b) in signal.samples().iter().zip(reconstructed.samples()) {
        let d = *a - *b;
        for c in [
            d.real.w, d.real.x, d.real.y, d.real.z, d.dual.w, d.dual.x, d.dual.y, d.dual.z,
        ] {
            max_error = max_error.max(c.abs());
        }
    }
    println!("max reconstruction error: {max_error:e}");
    if max_error <= ROUNDTRIP_BOUND {
        Ok(())
    } else {
        Err(CliError::RoundtripExceeded(max_error))
    }
}

fn cmd_synth(args: SynthArgs) -> Result<(), CliError> {
    let components = parse_components(&args.components)?;
    let track = generate_synthetic(args.length, &components, args.sample_rate)?;
    let format = output_format(args.format, &args.output);
    let mut bytes = Vec::new();
    save_track(&track, &mut bytes, format)?;
    write_atomic(&args.output, &bytes)
}

fn cmd_convert(args: ConvertArgs) -> Result<(), CliError> {
    let track = load(&args.input, args.renormalize_input)?;
    let out_track = match args.to_encoding {
        None => track,
        Some(EncodingArg::Rigid) => match track.samples() {
            TrackSamples::Rigid(_) => track,
            TrackSamples::Euler(_) => {
                // Euler channels are rotation vectors under the pure
                // encoding; rebuild poses from them (translation zero).
                let signal = track.to_signal(Encoding::Pure, false)?;
                MotionTrack::from_signal(&signal, Encoding::Pure, track.sample_rate(), false)?
            }
        },
        Some(EncodingArg::Pure) => match track.samples() {
            TrackSamples::Euler(_) => track,
            TrackSamples::Rigid(rows) => {
                let dropped = rows
                    .iter()
                    .any(|r| r.translation.iter().any(|c| *c != 0.0));
                if dropped {
                    eprintln!(
                        "note: Euler-channel output has no translation columns; \
                         translations were dropped"
                    );
                }
                let signal = track.to_signal(Encoding::Pure, args.hemisphere_align)?;
                let rate = track.sample_rate();
                let euler_rows: Vec<EulerSample> = signal
                    .samples()
                    .iter()
                    .enumerate()
                    .map(|(i, dq)| EulerSample {
                        t: i as f64 / rate,
                        angles: [dq.real.x, dq.real.y, dq.real.z],
                    })
                    .collect();
                MotionTrack::from_euler(euler_rows)?
            }
        },
    };
    let format = output_format(args.format, &args.output);
    let mut bytes = Vec::new();
    save_track(&out_track, &mut bytes, format)?;
    write_atomic(&args.output, &bytes)
}

/// Exactly one of the three mask options must be present; cutoffs accept a
/// bare bin count or hertz with an `hz` suffix, converted via
/// `bin = round(hz * M / sample_rate)`.
fn build_mask(args: &FilterArgs, m: usize, sample_rate: f64) -> Result<FrequencyMask, CliError> {
    let selected = [&args.low_pass, &args.high_pass, &args.band]
        .iter()
        .filter(|o| o.is_some())
        .count();
    if selected != 1 {
        return Err(CliError::Usage(
            "exactly one of --low-pass, --high-pass, --band is required".into(),
        ));
    }
    if let Some(cut) = &args.low_pass {
        return Ok(FrequencyMask::low_pass(m, parse_cutoff(cut, m, sample_rate)?));
    }
    if let Some(cut) = &args.high_pass {
        return Ok(FrequencyMask::high_pass(m, parse_cutoff(cut, m, sample_rate)?));
    }
    let band = args.band.as_ref().expect("one option is present");
    let (lo_spec, hi_spec) = band.split_once(':').ok_or_else(|| {
        CliError::Usage(format!("band must be written lo:hi, got {band:?}"))
    })?;
    let lo = parse_cutoff(lo_spec, m, sample_rate)?;
    let hi = parse_cutoff(hi_spec, m, sample_rate)?;
    FrequencyMask::band_pass(m, lo, hi).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_cutoff(spec: &str, m: usize, sample_rate: f64) -> Result<usize, CliError> {
    let spec = spec.trim();
    if let Some(hz_text) = spec
        .strip_suffix("hz")
        .or_else(|| spec.strip_suffix("Hz"))
        .or_else(|| spec.strip_suffix("HZ"))
    {
        let hz: f64 = hz_text
            .trim()
            .parse()
            .map_err(|e| CliError::Usage(format!("cutoff {spec:?}: {e}")))?;
        if !hz.is_finite() || hz < 0.0 {
            return Err(CliError::Usage(format!(
                "cutoff {spec:?}: hertz value must be finite and non-negative"
            )));
        }
        let bin = (hz * m as f64 / sample_rate).round();
        return Ok(bin as usize);
    }
    spec.parse()
        .map_err(|e| CliError::Usage(format!("cutoff {spec:?}: {e}")))
}

/// Parse `bin:rotAmp:transAmp:ax,ay,az;...`; the empty string means no
/// components.
fn parse_components(spec: &str) -> Result<Vec<SynthComponent>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    let mut components = Vec::new();
    for (index, part) in spec.split(';').enumerate() {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let fields: Vec<&str> = part.split(':').collect();
        if fields.len() != 4 {
            return Err(CliError::Usage(format!(
                "component {}: expected bin:rotAmp:transAmp:ax,ay,az, got {part:?}",
                index + 1
            )));
        }
        let bin = fields[0].trim().parse().map_err(|e| {
            CliError::Usage(format!("component {}: bin: {e}", index + 1))
        })?;
        let rot_amplitude: f64 = fields[1].trim().parse().map_err(|e| {
            CliError::Usage(format!("component {}: rotation amplitude: {e}", index + 1))
        })?;
        let trans_amplitude: f64 = fields[2].trim().parse().map_err(|e| {
            CliError::Usage(format!("component {}: translation amplitude: {e}", index + 1))
        })?;
        let axis_fields: Vec<&str> = fields[3].split(',').collect();
        if axis_fields.len() != 3 {
            return Err(CliError::Usage(format!(
                "component {}: axis must be ax,ay,az",
                index + 1
            )));
        }
        let mut axis = [0.0f64; 3];
        for (i, a) in axis_fields.iter().enumerate() {
            axis[i] = a.trim().parse().map_err(|e| {
                CliError::Usage(format!("component {}: axis component {}: {e}", index + 1, i + 1))
            })?;
        }
        components.push(SynthComponent {
            bin,
            rot_amplitude,
            trans_amplitude,
            axis,
        });
    }
    Ok(components)
}

//! File ingestion and export.
//!
//! Track files come in two CSV schemas, `t,qw,qx,qy,qz,tx,ty,tz` for rigid
//! poses and `t,ax,ay,az` for Euler channels, with JSON mirrors (arrays of
//! row records with the same field names). Spectrum exports are plot-ready
//! rows with one line per bin.

use std::io::{BufReader, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::spectral::DQSpectrum;
use crate::track::{EulerSample, MotionSample, MotionTrack, TrackError, TrackSamples};

/// Supported on-disk formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    Csv,
    Json,
}

impl FileFormat {
    /// Guess the format from a file extension; `None` when unrecognized.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "csv" => Some(Self::Csv),
            "json" => Some(Self::Json),
            _ => None,
        }
    }
}

/// Ingestion policy knobs.
#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    /// Renormalize off-unit rotations instead of rejecting the row.
    pub renormalize_rotations: bool,
}

const RIGID_HEADER: [&str; 8] = ["t", "qw", "qx", "qy", "qz", "tx", "ty", "tz"];
const EULER_HEADER: [&str; 4] = ["t", "ax", "ay", "az"];
const SPECTRUM_HEADER: [&str; 13] = [
    "bin", "freq_hz", "mag8", "mag_real", "mag_dual", "wr", "xr", "yr", "zr", "wd", "xd", "yd",
    "zd",
];

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RigidRow {
    t: f64,
    qw: f64,
    qx: f64,
    qy: f64,
    qz: f64,
    tx: f64,
    ty: f64,
    tz: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EulerRow {
    t: f64,
    ax: f64,
    ay: f64,
    az: f64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum TrackRow {
    Rigid(RigidRow),
    Euler(EulerRow),
}

/// One exported spectrum bin. `freq_hz` is wrap-aware: bins past `M/2`
/// report the equivalent negative frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub bin: usize,
    pub freq_hz: f64,
    pub mag8: f64,
    pub mag_real: f64,
    pub mag_dual: f64,
    pub wr: f64,
    pub xr: f64,
    pub yr: f64,
    pub zr: f64,
    pub wd: f64,
    pub xd: f64,
    pub yd: f64,
    pub zd: f64,
}

/// Parse a track from a reader, validating as it goes; parse failures
/// carry the line number, invariant violations the sample index.
pub fn load_track<R: Read>(
    reader: R,
    format: FileFormat,
    options: &LoadOptions,
) -> Result<MotionTrack, TrackError> {
    let rows = match format {
        FileFormat::Csv => load_rows_csv(reader)?,
        FileFormat::Json => load_rows_json(reader)?,
    };
    build_track(rows, options)
}

/// [`load_track`] from a path, inferring the format from the extension
/// (defaulting to CSV).
pub fn load_track_path(path: &Path, options: &LoadOptions) -> Result<MotionTrack, TrackError> {
    let format = FileFormat::from_path(path).unwrap_or(FileFormat::Csv);
    let file = std::fs::File::open(path)?;
    load_track(BufReader::new(file), format, options)
}

fn load_rows_csv<R: Read>(reader: R) -> Result<Vec<TrackRow>, TrackError> {
    let mut csv_reader = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let headers = csv_reader
        .headers()
        ?
        .iter()
        .map(str::trim)
        .map(String::from)
        .collect::<Vec<_>>();
    let rigid = headers == RIGID_HEADER;
    let euler = headers == EULER_HEADER;
    if !rigid && !euler {
        return Err(TrackError::Parse {
            line: 1,
            message: format!(
                "unrecognized header {:?}; expected {:?} or {:?}",
                headers.join(","),
                RIGID_HEADER.join(","),
                EULER_HEADER.join(",")
            ),
        });
    }
    let expected_fields = if rigid { 8 } else { 4 };
    let mut rows = Vec::new();
    for record in csv_reader.records() {
        let record = record?;
        let line = record
            .position()
            .map(|p| p.line() as usize)
            .unwrap_or(rows.len() + 2);
        if record.len() != expected_fields {
            return Err(TrackError::Parse {
                line,
                message: format!(
                    "expected {expected_fields} fields, found {}",
                    record.len()
                ),
            });
        }
        let mut values = [0.0f64; 8];
        for (i, field) in record.iter().enumerate() {
            values[i] = field.trim().parse::<f64>().map_err(|e| TrackError::Parse {
                line,
                message: format!("field {}: {e}", i + 1),
            })?;
        }
        rows.push(if rigid {
            TrackRow::Rigid(RigidRow {
                t: values[0],
                qw: values[1],
                qx: values[2],
                qy: values[3],
                qz: values[4],
                tx: values[5],
                ty: values[6],
                tz: values[7],
            })
        } else {
            TrackRow::Euler(EulerRow {
                t: values[0],
                ax: values[1],
                ay: values[2],
                az: values[3],
            })
        });
    }
    Ok(rows)
}

fn load_rows_json<R: Read>(reader: R) -> Result<Vec<TrackRow>, TrackError> {
    serde_json::from_reader(reader).map_err(|e| TrackError::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}

impl From<csv::Error> for TrackError {
    fn from(e: csv::Error) -> Self {
        let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
        let message = e.to_string();
        match e.into_kind() {
            csv::ErrorKind::Io(io) => TrackError::Io(io),
            _ => TrackError::Parse { line, message },
        }
    }
}

fn build_track(rows: Vec<TrackRow>, options: &LoadOptions) -> Result<MotionTrack, TrackError> {
    if rows.is_empty() {
        return Err(TrackError::Empty);
    }
    match rows.first() {
        Some(TrackRow::Rigid(_)) => {
            let mut samples = Vec::with_capacity(rows.len());
            for (index, row) in rows.into_iter().enumerate() {
                let TrackRow::Rigid(r) = row else {
                    return Err(TrackError::InvalidSample {
                        index,
                        message: "mixed rigid and Euler rows".into(),
                    });
                };
                let mut rotation = crate::Quaternion::new(r.qw, r.qx, r.qy, r.qz);
                if options.renormalize_rotations {
                    rotation = rotation.normalized().map_err(|e| TrackError::InvalidSample {
                        index,
                        message: e.to_string(),
                    })?;
                }
                samples.push(MotionSample {
                    t: r.t,
                    rotation,
                    translation: [r.tx, r.ty, r.tz],
                });
            }
            MotionTrack::from_rigid(samples)
        }
        Some(TrackRow::Euler(_)) => {
            let mut samples = Vec::with_capacity(rows.len());
            for (index, row) in rows.into_iter().enumerate() {
                let TrackRow::Euler(r) = row else {
                    return Err(TrackError::InvalidSample {
                        index,
                        message: "mixed rigid and Euler rows".into(),
                    });
                };
                samples.push(EulerSample {
                    t: r.t,
                    angles: [r.ax, r.ay, r.az],
                });
            }
            MotionTrack::from_euler(samples)
        }
        None => Err(TrackError::Empty),
    }
}

/// Write a track in the schema matching its sample kind. Numeric fields use
/// the shortest representation that parses back to the same value, so
/// save/load round trips are lossless.
pub fn save_track<W: Write>(
    track: &MotionTrack,
    writer: W,
    format: FileFormat,
) -> Result<(), TrackError> {
    match (format, track.samples()) {
        (FileFormat::Csv, TrackSamples::Rigid(samples)) => {
            let mut w = csv::Writer::from_writer(writer);
            w.write_record(RIGID_HEADER)?;
            for s in samples {
                w.write_record([
                    fmt_f64(s.t),
                    fmt_f64(s.rotation.w),
                    fmt_f64(s.rotation.x),
                    fmt_f64(s.rotation.y),
                    fmt_f64(s.rotation.z),
                    fmt_f64(s.translation[0]),
                    fmt_f64(s.translation[1]),
                    fmt_f64(s.translation[2]),
                ])?;
            }
            w.flush()?;
        }
        (FileFormat::Csv, TrackSamples::Euler(samples)) => {
            let mut w = csv::Writer::from_writer(writer);
            w.write_record(EULER_HEADER)?;
            for s in samples {
                w.write_record([
                    fmt_f64(s.t),
                    fmt_f64(s.angles[0]),
                    fmt_f64(s.angles[1]),
                    fmt_f64(s.angles[2]),
                ])?;
            }
            w.flush()?;
        }
        (FileFormat::Json, TrackSamples::Rigid(samples)) => {
            let rows: Vec<RigidRow> = samples
                .iter()
                .map(|s| RigidRow {
                    t: s.t,
                    qw: s.rotation.w,
                    qx: s.rotation.x,
                    qy: s.rotation.y,
                    qz: s.rotation.z,
                    tx: s.translation[0],
                    ty: s.translation[1],
                    tz: s.translation[2],
                })
                .collect();
            write_json(writer, &rows)?;
        }
        (FileFormat::Json, TrackSamples::Euler(samples)) => {
            let rows: Vec<EulerRow> = samples
                .iter()
                .map(|s| EulerRow {
                    t: s.t,
                    ax: s.angles[0],
                    ay: s.angles[1],
                    az: s.angles[2],
                })
                .collect();
            write_json(writer, &rows)?;
        }
    }
    Ok(())
}

/// Row records for a spectrum, in bin order.
pub fn spectrum_rows(spectrum: &DQSpectrum) -> Vec<SpectrumRow> {
    let m = spectrum.len();
    let rate = spectrum.sample_rate();
    spectrum
        .coefficients()
        .iter()
        .enumerate()
        .map(|(bin, c)| {
            let signed_bin = if bin <= m - bin {
                bin as f64
            } else {
                bin as f64 - m as f64
            };
            SpectrumRow {
                bin,
                freq_hz: signed_bin * rate / m as f64,
                mag8: c.norm8(),
                mag_real: c.real.norm(),
                mag_dual: c.dual.norm(),
                wr: c.real.w,
                xr: c.real.x,
                yr: c.real.y,
                zr: c.real.z,
                wd: c.dual.w,
                xd: c.dual.x,
                yd: c.dual.y,
                zd: c.dual.z,
            }
        })
        .collect()
}

/// Export one row per bin: index, signed frequency, magnitudes and all
/// eight raw coefficients. CSV values are printed with 17 significant
/// digits, enough to reparse bit-exactly.
pub fn export_spectrum<W: Write>(
    spectrum: &DQSpectrum,
    writer: W,
    format: FileFormat,
) -> Result<(), TrackError> {
    let rows = spectrum_rows(spectrum);
    match format {
        FileFormat::Csv => {
            let mut w = csv::Writer::from_writer(writer);
            w.write_record(SPECTRUM_HEADER)?;
            for r in rows {
                w.write_record([
                    r.bin.to_string(),
                    fmt_sig17(r.freq_hz),
                    fmt_sig17(r.mag8),
                    fmt_sig17(r.mag_real),
                    fmt_sig17(r.mag_dual),
                    fmt_sig17(r.wr),
                    fmt_sig17(r.xr),
                    fmt_sig17(r.yr),
                    fmt_sig17(r.zr),
                    fmt_sig17(r.wd),
                    fmt_sig17(r.xd),
                    fmt_sig17(r.yd),
                    fmt_sig17(r.zd),
                ])?;
            }
            w.flush()?;
        }
        FileFormat::Json => write_json(writer, &rows)?,
    }
    Ok(())
}

/// Reparse an exported spectrum into its row records.
pub fn read_spectrum_rows<R: Read>(
    reader: R,
    format: FileFormat,
) -> Result<Vec<SpectrumRow>, TrackError> {
    match format {
        FileFormat::Csv => {
            let mut csv_reader = csv::ReaderBuilder::new()
                .has_headers(true)
                .from_reader(reader);
            let mut rows = Vec::new();
            for record in csv_reader.deserialize() {
                let row: SpectrumRow = record?;
                rows.push(row);
            }
            Ok(rows)
        }
        FileFormat::Json => serde_json::from_reader(reader).map_err(|e| TrackError::Parse {
            line: e.line(),
            message: e.to_string(),
        }),
    }
}

fn write_json<W: Write, T: Serialize>(mut writer: W, rows: &T) -> Result<(), TrackError> {
    serde_json::to_writer_pretty(&mut writer, rows).map_err(|e| TrackError::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    writer.write_all(b"\n")?;
    Ok(())
}

/// Shortest representation that round-trips through `parse::<f64>()`.
fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// 17 significant digits, fixed scientific layout.
fn fmt_sig17(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;
    use crate::spectral::{dqft_right, DQSignal, TransformAxis};
    use crate::DualQuaternion;

    const RIGID_CSV: &str = "t,qw,qx,qy,qz,tx,ty,tz\n0,1,0,0,0,0,0,0\n1,1,0,0,0,0.5,0,0\n";

    #[test]
    fn loads_minimal_rigid_csv() {
        let track = load_track(RIGID_CSV.as_bytes(), FileFormat::Csv, &LoadOptions::default())
            .unwrap();
        assert_eq!(track.len(), 2);
        assert!(track.is_rigid());
    }

    #[test]
    fn rejects_off_unit_rotation_without_flag() {
        let data = "t,qw,qx,qy,qz,tx,ty,tz\n0,0.5,0,0,0,0,0,0\n";
        let err = load_track(data.as_bytes(), FileFormat::Csv, &LoadOptions::default())
            .unwrap_err();
        assert!(matches!(err, TrackError::InvalidSample { index: 0, .. }));

        let opts = LoadOptions {
            renormalize_rotations: true,
        };
        let track = load_track(data.as_bytes(), FileFormat::Csv, &opts).unwrap();
        let TrackSamples::Rigid(samples) = track.samples() else {
            unreachable!()
        };
        assert!((samples[0].rotation.norm() - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let data = "t,qw,qx,qy,qz,tx,ty,tz\n0,1,0,0,0,0,0,0\n1,oops,0,0,0,0,0,0\n";
        let err = load_track(data.as_bytes(), FileFormat::Csv, &LoadOptions::default())
            .unwrap_err();
        match err {
            TrackError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn loads_json_tracks() {
        let data = r#"[
            {"t": 0.0, "qw": 1.0, "qx": 0.0, "qy": 0.0, "qz": 0.0, "tx": 0.0, "ty": 0.0, "tz": 0.0},
            {"t": 1.0, "qw": 1.0, "qx": 0.0, "qy": 0.0, "qz": 0.0, "tx": 0.5, "ty": 0.0, "tz": 0.0}
        ]"#;
        let track = load_track(data.as_bytes(), FileFormat::Json, &LoadOptions::default())
            .unwrap();
        assert_eq!(track.len(), 2);
        assert!(track.is_rigid());

        let euler = r#"[{"t": 0.0, "ax": 0.1, "ay": 0.2, "az": 0.3}]"#;
        let track = load_track(euler.as_bytes(), FileFormat::Json, &LoadOptions::default())
            .unwrap();
        assert!(!track.is_rigid());
    }

    #[test]
    fn rejects_mixed_row_kinds_in_json() {
        let data = r#"[
            {"t": 0.0, "qw": 1.0, "qx": 0.0, "qy": 0.0, "qz": 0.0, "tx": 0.0, "ty": 0.0, "tz": 0.0},
            {"t": 1.0, "ax": 0.1, "ay": 0.2, "az": 0.3}
        ]"#;
        let err = load_track(data.as_bytes(), FileFormat::Json, &LoadOptions::default())
            .unwrap_err();
        assert!(matches!(err, TrackError::InvalidSample { index: 1, .. }));
    }

    #[test]
    fn rejects_unknown_header() {
        let data = "time,w,x,y,z\n0,1,0,0,0\n";
        let err = load_track(data.as_bytes(), FileFormat::Csv, &LoadOptions::default())
            .unwrap_err();
        assert!(matches!(err, TrackError::Parse { line: 1, .. }));
    }

    #[test]
    fn csv_round_trip_is_lossless() {
        let samples: Vec<crate::track::MotionSample> = (0..4)
            .map(|i| crate::track::MotionSample {
                t: i as f64 / 3.0,
                rotation: Quaternion::pure([0.0, 0.0, 0.1 * i as f64]).exp().unwrap(),
                translation: [1.0 / 7.0 * i as f64, -0.25, 2e-17],
            })
            .collect();
        let track = MotionTrack::from_rigid(samples).unwrap();
        for format in [FileFormat::Csv, FileFormat::Json] {
            let mut buffer = Vec::new();
            save_track(&track, &mut buffer, format).unwrap();
            let back = load_track(buffer.as_slice(), format, &LoadOptions::default()).unwrap();
            assert_eq!(&back, &track, "{format:?}");
        }
    }

    #[test]
    fn euler_round_trip() {
        let track = MotionTrack::from_euler(
            (0..3)
                .map(|i| EulerSample {
                    t: i as f64,
                    angles: [0.1 * i as f64, 0.0, -1.0 / 3.0],
                })
                .collect(),
        )
        .unwrap();
        let mut buffer = Vec::new();
        save_track(&track, &mut buffer, FileFormat::Csv).unwrap();
        assert!(String::from_utf8_lossy(&buffer).starts_with("t,ax,ay,az\n"));
        let back = load_track(buffer.as_slice(), FileFormat::Csv, &LoadOptions::default())
            .unwrap();
        assert_eq!(&back, &track);
    }

    #[test]
    fn spectrum_export_constant_signal() {
        let f = DQSignal::new(vec![DualQuaternion::IDENTITY; 4]).unwrap();
        let spectrum = dqft_right(&f, &TransformAxis::default());
        let rows = spectrum_rows(&spectrum);
        assert_eq!(rows.len(), 4);
        assert!(rows[0].mag8 > 0.0);
        assert!(rows.iter().skip(1).all(|r| r.mag8 <= 1e-12));
    }

    #[test]
    fn spectrum_frequencies_are_wrap_aware() {
        let f = DQSignal::with_sample_rate(vec![DualQuaternion::IDENTITY; 8], 16.0).unwrap();
        let spectrum = dqft_right(&f, &TransformAxis::default());
        let freqs: Vec<f64> = spectrum_rows(&spectrum).iter().map(|r| r.freq_hz).collect();
        assert_eq!(freqs, vec![0.0, 2.0, 4.0, 6.0, 8.0, -6.0, -4.0, -2.0]);
    }

    #[test]
    fn spectrum_round_trip_both_formats() {
        let samples: Vec<DualQuaternion> = (0..5)
            .map(|i| {
                let i = i as f64;
                DualQuaternion::new(
                    Quaternion::new(0.1 + i, -i / 3.0, i * i, 0.5),
                    Quaternion::new(1.0 - i, 0.0, i / 7.0, -2.0 * i),
                )
            })
            .collect();
        let f = DQSignal::new(samples).unwrap();
        let spectrum = dqft_right(&f, &TransformAxis::default());
        let rows = spectrum_rows(&spectrum);
        for format in [FileFormat::Csv, FileFormat::Json] {
            let mut buffer = Vec::new();
            export_spectrum(&spectrum, &mut buffer, format).unwrap();
            let back = read_spectrum_rows(buffer.as_slice(), format).unwrap();
            assert_eq!(back.len(), rows.len());
            for (a, b) in rows.iter().zip(&back) {
                assert_eq!(a.bin, b.bin);
                for (x, y) in [
                    (a.wr, b.wr),
                    (a.xr, b.xr),
                    (a.yr, b.yr),
                    (a.zr, b.zr),
                    (a.wd, b.wd),
                    (a.xd, b.xd),
                    (a.yd, b.yd),
                    (a.zd, b.zd),
                ] {
                    assert!((x - y).abs() <= 1e-15 * x.abs().max(1.0), "{format:?}");
                }
            }
        }
    }
}

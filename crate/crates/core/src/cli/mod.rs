//! Command-line front end. [`run`] takes the argument list and the two output
//! streams and returns the process exit code, so it can be driven in-process.

mod sweep;

pub use sweep::{
    g2_rows, parse_angle, parse_eta, squeezing_rows, EtaScale, G2Row, OutputFormat, SqueezingRow,
    SweepConfig,
};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::closedform;
use crate::error::SpinError;
use crate::squeezing::{find_critical_eta, xi_xyz_closedform, XiValue};
use crate::states::{sscs, sscs_cross_overlap, SscsParams};
use crate::verify::{run_verification, GridPreset};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

pub const G2_HEADER: &str = "eta_abs,theta,twice_j,g2";
pub const SQUEEZING_HEADER: &str = "eta_abs,theta,twice_j,xi_x2,xi_y2,inv_xi_x2,inv_xi_y2";
pub const VERIFY_HEADER: &str = "quantity,samples,max_abs,max_rel,failures";
pub const CRITICAL_HEADER: &str = "twice_j,eta_c";

#[derive(Parser, Debug)]
#[command(
    name = "spincat",
    version,
    about = "Spin cat states: coherence and squeezing"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// g² against |η| for each θ
    G2Sweep(SweepArgs),
    /// ξx², ξy² and their inverses against |η| for θ ∈ {0, π}
    SqueezingSweep(SweepArgs),
    /// Closed forms against the matrix oracle over a parameter grid
    Verify(VerifyArgs),
    /// Everything about one state, as JSON
    StateInfo(StateArgs),
    /// Onset of squeezing in odd cat states with half-integer j
    CriticalEta(CriticalArgs),
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Twice the spin quantum number
    #[arg(long)]
    twice_j: u32,
    /// Comma separated angles: radians or multiples of pi (0, pi/2, pi, 3pi/4)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_angle)]
    theta: Option<Vec<f64>>,
    #[arg(long, default_value_t = 0.05)]
    eta_min: f64,
    #[arg(long, default_value_t = 3.0)]
    eta_max: f64,
    #[arg(long, default_value_t = 120)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = EtaScale::Linear)]
    eta_scale: EtaScale,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn config(self, default_theta: &[f64]) -> SweepConfig {
        SweepConfig {
            twice_j: self.twice_j,
            theta_list: self.theta.unwrap_or_else(|| default_theta.to_vec()),
            eta_min: self.eta_min,
            eta_max: self.eta_max,
            steps: self.steps,
            eta_scale: self.eta_scale,
            output_format: self.format,
            output_path: self.out,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PresetArg {
    Small,
    Default,
    Large,
}

impl From<PresetArg> for GridPreset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::Small => GridPreset::Small,
            PresetArg::Default => GridPreset::Default,
            PresetArg::Large => GridPreset::Large,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = PresetArg::Default)]
    grid_preset: PresetArg,
    /// Relative tolerance; defaults to 1e-9, or 1e-6 for the large grid
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct StateArgs {
    #[arg(long)]
    twice_j: u32,
    /// `r` or `r@phi`
    #[arg(long, value_parser = parse_eta)]
    eta: Complex64,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_angle)]
    theta: f64,
}

#[derive(Args, Debug)]
struct CriticalArgs {
    /// Comma separated odd values
    #[arg(long, value_delimiter = ',', required = true)]
    twice_j: Vec<u32>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Degenerate(SpinError),
}

impl From<SpinError> for Failure {
    fn from(e: SpinError) -> Self {
        match e {
            SpinError::DegenerateSuperposition { .. } => Failure::Degenerate(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let flags = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let header = format!(
        "generated-by spincat {} {}",
        env!("CARGO_PKG_VERSION"),
        flags
    );
    let outcome = match cli.command {
        Command::G2Sweep(a) => g2_sweep(
            a.config(&[0.0, std::f64::consts::FRAC_PI_2, std::f64::consts::PI]),
            &header,
            stdout,
        ),
        Command::SqueezingSweep(a) => {
            squeezing_sweep(a.config(&[0.0, std::f64::consts::PI]), &header, stdout)
        }
        Command::Verify(a) => verify(a, &header, stdout),
        Command::StateInfo(a) => state_info(a, stdout),
        Command::CriticalEta(a) => critical_eta(a, &header, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Degenerate(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DEGENERATE
        }
    }
}

/// Decimal text that parses back to the same double; `nan`/`inf` otherwise.
pub fn number_token(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:?}")
    }
}

fn json_number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or_else(|| Value::String(number_token(v)), Value::Number)
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("standard output: {e}"))),
    }
}

fn csv(header: &str, columns: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut text = format!("# {header}\n{columns}\n");
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    text
}

fn sweep_json(header: &str, config: &SweepConfig, rows: Vec<Value>, markers: Vec<Value>) -> String {
    let doc = json!({
        "params": {
            "generated_by": header,
            "twice_j": config.twice_j,
            "theta": config.theta_list,
            "eta_min": config.eta_min,
            "eta_max": config.eta_max,
            "steps": config.steps,
            "eta_scale": config.eta_scale,
        },
        "rows": rows,
        "markers": markers,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("json values serialize");
    text.push('\n');
    text
}

fn marker(row: usize, column: &str, token: &str) -> Value {
    json!({ "row": row, "column": column, "token": token })
}

fn g2_sweep(config: SweepConfig, header: &str, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let rows = g2_rows(&config).map_err(|e| Failure::Usage(e.to_string()))?;
    let text = match config.output_format {
        OutputFormat::Csv => csv(
            header,
            G2_HEADER,
            rows.iter().map(|r| {
                vec![
                    number_token(r.eta_abs),
                    number_token(r.theta),
                    r.twice_j.to_string(),
                    number_token(r.g2.unwrap_or(f64::NAN)),
                ]
            }),
        ),
        OutputFormat::Json => {
            let markers = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.g2.is_none())
                .map(|(i, _)| marker(i, "g2", "nan"))
                .collect();
            let rows = rows
                .iter()
                .map(|r| {
                    json!({
                        "eta_abs": r.eta_abs,
                        "theta": r.theta,
                        "twice_j": r.twice_j,
                        "g2": r.g2.map_or(Value::String("nan".into()), json_number),
                    })
                })
                .collect();
            sweep_json(header, &config, rows, markers)
        }
    };
    emit(&text, config.output_path.as_ref(), stdout)?;
    Ok(EXIT_OK)
}

fn xi_token(v: XiValue) -> String {
    match v {
        XiValue::Finite(x) => number_token(x),
        other => other.to_string(),
    }
}

fn inverse_token(v: XiValue) -> String {
    v.inverse().map_or_else(|| v.to_string(), number_token)
}

fn xi_json(v: XiValue) -> Value {
    match v {
        XiValue::Finite(x) => json_number(x),
        other => Value::String(other.to_string()),
    }
}

fn inverse_json(v: XiValue) -> Value {
    v.inverse()
        .map_or_else(|| Value::String(v.to_string()), json_number)
}

fn squeezing_sweep(
    config: SweepConfig,
    header: &str,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let rows = squeezing_rows(&config).map_err(|e| Failure::Usage(e.to_string()))?;
    let text = match config.output_format {
        OutputFormat::Csv => csv(
            header,
            SQUEEZING_HEADER,
            rows.iter().map(|r| {
                vec![
                    number_token(r.eta_abs),
                    number_token(r.theta),
                    r.twice_j.to_string(),
                    xi_token(r.xi_x2),
                    xi_token(r.xi_y2),
                    inverse_token(r.xi_x2),
                    inverse_token(r.xi_y2),
                ]
            }),
        ),
        OutputFormat::Json => {
            let mut markers = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                for (column, v) in [("xi_x2", r.xi_x2), ("xi_y2", r.xi_y2)] {
                    if !v.is_finite() {
                        markers.push(marker(i, column, &v.to_string()));
                    }
                }
            }
            let rows = rows
                .iter()
                .map(|r| {
                    json!({
                        "eta_abs": r.eta_abs,
                        "theta": r.theta,
                        "twice_j": r.twice_j,
                        "xi_x2": xi_json(r.xi_x2),
                        "xi_y2": xi_json(r.xi_y2),
                        "inv_xi_x2": inverse_json(r.xi_x2),
                        "inv_xi_y2": inverse_json(r.xi_y2),
                    })
                })
                .collect();
            sweep_json(header, &config, rows, markers)
        }
    };
    emit(&text, config.output_path.as_ref(), stdout)?;
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, header: &str, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let preset = GridPreset::from(args.grid_preset);
    let tolerance = args.tolerance.unwrap_or_else(|| preset.default_tolerance());
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Failure::Usage(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let report = run_verification(&preset.grid(), tolerance)?;
    let text = match args.format {
        OutputFormat::Csv => {
            let mut text = csv(
                header,
                VERIFY_HEADER,
                report.quantities.iter().map(|q| {
                    vec![
                        q.quantity.clone(),
                        q.samples.to_string(),
                        number_token(q.max_abs),
                        number_token(q.max_rel),
                        q.failures.to_string(),
                    ]
                }),
            );
            text.push_str(&format!(
                "# points {} skipped {} tolerance {} abs_tolerance {} {}\n",
                report.points,
                report.skipped,
                number_token(report.tolerance),
                number_token(report.abs_tolerance),
                if report.passed() { "PASS" } else { "FAIL" }
            ));
            text
        }
        OutputFormat::Json => {
            let mut doc = serde_json::to_value(&report).expect("report serializes");
            doc["generated_by"] = Value::String(header.to_string());
            doc["passed"] = Value::Bool(report.passed());
            let mut text = serde_json::to_string_pretty(&doc).expect("json values serialize");
            text.push('\n');
            text
        }
    };
    emit(&text, args.out.as_ref(), stdout)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": json_number(z.re), "im": json_number(z.im) })
}

fn state_info(args: StateArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let params = SscsParams::new(args.twice_j, args.eta, args.theta);
    let space = params.space()?;
    let state = match sscs(space, &params) {
        Ok(s) => s,
        Err(e @ SpinError::DegenerateSuperposition { denominator }) => {
            let doc = json!({
                "error": {
                    "kind": "degenerate_superposition",
                    "message": e.to_string(),
                    "denominator": json_number(denominator),
                }
            });
            let text = format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("json values serialize")
            );
            emit(&text, None, stdout)?;
            return Err(Failure::Degenerate(e));
        }
        Err(e) => return Err(e.into()),
    };
    let moments = closedform::cartesian_moments(&params)?;
    let g2 = match closedform::g2(&params) {
        Ok(v) => json_number(v),
        Err(SpinError::UndefinedCorrelation { .. }) => Value::String("nan".into()),
        Err(e) => return Err(e.into()),
    };
    let [xi_x, xi_y, xi_z] = xi_xyz_closedform(&params)?;
    let cross = match sscs_cross_overlap(&params) {
        Ok(z) => complex_json(z),
        Err(SpinError::DegenerateSuperposition { .. } | SpinError::Pole) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let amplitudes: Vec<Value> = state
        .amplitudes()
        .iter()
        .map(|c| json!([json_number(c.re), json_number(c.im)]))
        .collect();
    let doc = json!({
        "twice_j": params.twice_j,
        "j": params.j(),
        "eta": complex_json(params.eta),
        "theta": params.theta,
        "amplitudes": amplitudes,
        "n_moments": [moments.n1, moments.n2, moments.n3, moments.n4],
        "g2": g2,
        "mean_spin": moments.mean_spin(),
        "xi2": { "x": xi_json(xi_x), "y": xi_json(xi_y), "z": xi_json(xi_z) },
        "cross_overlap": cross,
    });
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&doc).expect("json values serialize")
    );
    emit(&text, None, stdout)?;
    Ok(EXIT_OK)
}

fn critical_eta(args: CriticalArgs, header: &str, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let found = args
        .twice_j
        .iter()
        .map(|&tj| find_critical_eta(tj).map(|eta| (tj, eta)))
        .collect::<crate::Result<Vec<_>>>()?;
    let text = match args.format {
        OutputFormat::Csv => csv(
            header,
            CRITICAL_HEADER,
            found
                .iter()
                .map(|(tj, eta)| vec![tj.to_string(), number_token(*eta)]),
        ),
        OutputFormat::Json => {
            let rows: Vec<Value> = found
                .iter()
                .map(|(tj, eta)| json!({ "twice_j": tj, "eta_c": eta }))
                .collect();
            let doc = json!({
                "params": { "generated_by": header, "twice_j": args.twice_j },
                "rows": rows,
                "markers": [],
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("json values serialize")
            )
        }
    };
    emit(&text, args.out.as_ref(), stdout)?;
    Ok(EXIT_OK)
}

//! Command-line interface. [`run`] returns the exit status and captured output
//! so it can be driven from tests without spawning a process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bohr::{function_radius, majorant_sum};
use crate::coeffs::CoefficientSequence;
use crate::error::Error;
use crate::extremal::{default_a_schedule, sharpness_witness};
use crate::radii::{bernardi_radius, cesaro_radius, djakov_ramanujan_bounds, general_radius, shifted_disk_radius_m};
use crate::report::{emit, format_sig10, reproduce_table, sample_curve, CurveParams, Format, Item};
use crate::weights::{WeightFamily, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bohr", version, about = "Bohr radii for weighted majorant series on shifted disks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Radius for a weight family on the shifted disk
    Radius(RadiusArgs),
    /// Reproduce one of the six radius tables
    Table(TableArgs),
    /// Sample the radius equation along r
    Curve(CurveArgs),
    /// Check sharpness of a radius with the extremal functions
    Verify(VerifyArgs),
    /// Bohr sum or per-function radius for a coefficient file
    Sum(SumArgs),
    /// Lower and upper bounds of the Djakov-Ramanujan radius
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Power,
    N1,
    N,
    N2,
    Cesaro,
    Bernardi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Markdown,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Tag {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    p: f64,
    /// Cesaro order
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    alpha: f64,
    /// Bernardi shift
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    beta: f64,
    /// Vanishing order at the origin
    #[arg(long, default_value_t = 0)]
    m: u32,
}

impl FamilyArgs {
    fn weights(&self) -> crate::Result<WeightFamily> {
        match self.family {
            FamilyName::Power => Ok(WeightFamily::power()),
            FamilyName::N1 => Ok(WeightFamily::power_times_n_plus_1()),
            FamilyName::N => Ok(WeightFamily::power_times_n()),
            FamilyName::N2 => Ok(WeightFamily::power_times_n_squared()),
            FamilyName::Cesaro => WeightFamily::cesaro(self.alpha),
            FamilyName::Bernardi => WeightFamily::bernardi(self.beta, self.m),
        }
    }
}

#[derive(Debug, Args)]
struct RadiusArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda")]
    gamma: Option<f64>,
    /// Coefficient-bound constant; replaces gamma
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    id: u8,
    #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[arg(long, value_enum)]
    tag: Tag,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    p: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    beta: f64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    gamma_list: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Output file; with several gammas each curve goes to `<stem>-gamma-<g>.<ext>`
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    gamma: f64,
    /// Probe a single radius instead of radius -/+ 0.01
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    a_list: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
struct SumArgs {
    #[arg(long)]
    coeffs: PathBuf,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "q")]
    r: Option<f64>,
    /// Exponent on the tail sum; switches to the per-function radius
    #[arg(long, allow_hyphen_values = true)]
    q: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

const VERIFY_OFFSET: f64 = 0.01;

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::Domain(_) | Error::InvalidInput(_) | Error::InvalidTolerance(_) => 2,
                _ => 1,
            };
            let mut stderr = format!("error: {e}\n");
            if code == 2 {
                stderr.push_str("\nFor usage, run 'bohr --help' or 'bohr <COMMAND> --help'.\n");
            }
            Outcome { code, stdout: String::new(), stderr }
        }
    }
}

fn dispatch(command: Command) -> crate::Result<Outcome> {
    match command {
        Command::Radius(a) => radius(a),
        Command::Table(a) => table(a),
        Command::Curve(a) => curve(a),
        Command::Verify(a) => verify(a),
        Command::Sum(a) => sum(a),
        Command::Bounds(a) => bounds(a),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize") + "\n"
}

fn write_out(path: &Path, text: &str) -> crate::Result<()> {
    std::fs::write(path, text).map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

/// Radius for the family: Cesaro and Bernardi use their own
/// operators' equations, the power families the weighted majorant equation.
fn family_radius(f: &FamilyArgs, gamma: f64) -> crate::Result<crate::rootfind::RootResult> {
    match f.family {
        FamilyName::Cesaro => cesaro_radius(gamma, f.alpha),
        FamilyName::Bernardi => bernardi_radius(f.m, f.beta, gamma),
        _ => shifted_disk_radius_m(&f.weights()?, f.p, gamma, f.m),
    }
}

fn radius(a: RadiusArgs) -> crate::Result<Outcome> {
    let res = match (a.gamma, a.lambda) {
        (_, Some(lambda)) => {
            if a.family.m != 0 {
                return Err(Error::InvalidInput("--lambda applies to m = 0 only".into()));
            }
            general_radius(&a.family.weights()?, a.family.p, lambda)?
        }
        (gamma, None) => family_radius(&a.family, gamma.unwrap_or(0.0))?,
    };
    let text = match a.format {
        OutputFormat::Json => to_json(&res),
        _ => {
            let mut s = format!("{}\nresidual {:e}\n", format_sig10(res.root), res.residual);
            if res.tangency {
                s.push_str("tangency root (no sign change)\n");
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn table(a: TableArgs) -> crate::Result<Outcome> {
    let t = reproduce_table(a.id)?;
    let format = match a.format {
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Json => Format::Json,
        OutputFormat::Markdown | OutputFormat::Plain => Format::Markdown,
    };
    let text = emit(Item::Table(&t), format);
    match a.out {
        Some(path) => {
            write_out(&path, &text)?;
            Ok(Outcome::ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn curve_path(base: &Path, gamma: f64) -> PathBuf {
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}-gamma-{gamma}.{}", ext.to_string_lossy()),
        None => format!("{stem}-gamma-{gamma}"),
    };
    base.with_file_name(name)
}

fn curve(a: CurveArgs) -> crate::Result<Outcome> {
    let format = match a.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Markdown => Format::Markdown,
        OutputFormat::Csv | OutputFormat::Plain => Format::Csv,
    };
    let mut stdout = String::new();
    let several = a.gamma_list.len() > 1;
    for &gamma in &a.gamma_list {
        let params = match a.tag {
            Tag::G => CurveParams::G { p: a.p, gamma },
            Tag::C => CurveParams::C { gamma, alpha: a.alpha },
            Tag::B => CurveParams::B { m: a.m, beta: a.beta, gamma },
        };
        let text = emit(Item::Curve(&sample_curve(params, a.samples)?), format);
        match &a.out {
            Some(base) => {
                let path = if several { curve_path(base, gamma) } else { base.clone() };
                write_out(&path, &text)?;
                stdout.push_str(&format!("wrote {}\n", path.display()));
            }
            None => {
                if several {
                    stdout.push_str(&format!("# gamma={gamma}\n"));
                }
                stdout.push_str(&text);
            }
        }
    }
    Ok(Outcome::ok(stdout))
}

fn verify(a: VerifyArgs) -> crate::Result<Outcome> {
    let family = a.family.weights()?;
    let radius = shifted_disk_radius_m(&family, a.family.p, a.gamma, a.family.m)?.root;
    let schedule = a.a_list.unwrap_or_else(default_a_schedule);
    let probes: Vec<f64> = match a.r {
        Some(r) => vec![r],
        None => vec![radius - VERIFY_OFFSET, radius + VERIFY_OFFSET],
    };
    let mut out = format!("radius {}\n", format_sig10(radius));
    let mut consistent = true;
    for r in probes {
        if !(0.0..1.0).contains(&r) {
            out.push_str(&format!("r {} skipped: outside [0, 1)\n", format_sig10(r)));
            continue;
        }
        let hit = sharpness_witness(&family, a.family.p, a.gamma, a.family.m, r, &schedule)?;
        let expect_violation = r > radius;
        let ok = hit.is_some() == expect_violation;
        consistent &= ok;
        let what = match hit {
            Some(h) => format!("violated at a = {} (margin {:e})", format_sig10(h.a), h.margin),
            None => "no violation".to_string(),
        };
        out.push_str(&format!("r {}: {what} [{}]\n", format_sig10(r), if ok { "ok" } else { "unexpected" }));
    }
    Ok(Outcome { code: if consistent { 0 } else { 1 }, stdout: out, stderr: String::new() })
}

fn sum(a: SumArgs) -> crate::Result<Outcome> {
    let text = std::fs::read_to_string(&a.coeffs)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", a.coeffs.display())))?;
    let coeffs = CoefficientSequence::from_json_str(&text)?;
    let family = a.family.weights()?;
    let json = a.format == OutputFormat::Json;
    let body = match a.q {
        Some(q) => {
            let fr = function_radius(&coeffs, &family, a.family.p, q)?;
            if json {
                to_json(&fr)
            } else {
                let mut s = format!("radius {}\n", format_sig10(fr.radius));
                if fr.capped {
                    s.push_str("no violation below 1 - 1e-9\n");
                }
                if fr.non_interval {
                    s.push_str("satisfaction set is not an interval\n");
                }
                s
            }
        }
        None => {
            let r = a.r.expect("clap requires --r without --q");
            let rep = majorant_sum(&coeffs, &family, a.family.p, r, DEFAULT_TOL)?;
            if json {
                to_json(&rep)
            } else {
                format!(
                    "value {}\nbound {}\nsatisfied {}\nterms {}\ntail_bound {:e}\n",
                    format_sig10(rep.value),
                    format_sig10(rep.bound),
                    rep.satisfied,
                    rep.truncation_terms,
                    rep.tail_bound
                )
            }
        }
    };
    Ok(Outcome::ok(body))
}

fn bounds(a: BoundsArgs) -> crate::Result<Outcome> {
    let b = djakov_ramanujan_bounds(a.p)?;
    let text = match a.format {
        OutputFormat::Json => to_json(&b),
        _ => format!("lower {}\nupper {}\n", format_sig10(b.lower), format_sig10(b.upper)),
    };
    Ok(Outcome::ok(text))
}

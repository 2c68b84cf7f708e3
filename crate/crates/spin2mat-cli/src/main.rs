//! `spin2mat`: build 5×5 matrices with prescribed eigenvalues from four
//! quantization angles, and run the inverse problem — recovering the angles
//! and reading the spectrum back off a matrix.

mod matfile;
mod parse;
mod report;
mod selftest;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use spin2mat::amplitudes::ParameterPoint;
use spin2mat::diagonalizer::{
    bisect_recover, multistart_recover, recover_spectrum, verify_recovery, FreeAngle,
    RecoveryResult,
};
use spin2mat::generator::{classify, eigenvectors, generate, predict_family, Spectrum};
use spin2mat::oracle::{eig5, match_spectra};
use spin2mat::{Error, Tolerances};

use report::Val;

const TOLERANCE_HELP: &str = "Tolerance overrides:
  --tol.<name> <value> with name one of: unitarity, eigen-equation,
  residual-root, residual-accept, denominator, verify, spectrum-match,
  classify, oracle-residual (library tolerances), plus locate (bisection
  angle width, default 1e-8) and refine (multistart target, default 1e-8).";

#[derive(Parser)]
#[command(
    name = "spin2mat",
    version,
    about = "Matrices with prescribed spectra from spin-2 amplitudes, and their inverse problem",
    after_help = TOLERANCE_HELP
)]
struct Cli {
    /// Seed for all randomized sampling (selftest).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format on stdout (matrix files are always JSON).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Interpret input angles (and brackets) as degrees.
    #[arg(long, global = true)]
    degrees: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Bisect,
    Multistart,
}

#[derive(Clone, Copy, ValueEnum)]
enum FreeArg {
    #[value(name = "theta")]
    Theta,
    #[value(name = "phi")]
    Phi,
    #[value(name = "theta_p")]
    ThetaP,
    #[value(name = "phi_p")]
    PhiP,
}

impl FreeArg {
    fn to_free(self) -> FreeAngle {
        match self {
            FreeArg::Theta => FreeAngle::Theta,
            FreeArg::Phi => FreeAngle::Phi,
            FreeArg::ThetaP => FreeAngle::ThetaPrime,
            FreeArg::PhiP => FreeAngle::PhiPrime,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the matrix with the given spectrum and angle-defined eigenbasis.
    Generate {
        #[arg(allow_negative_numbers = true)]
        theta: f64,
        #[arg(allow_negative_numbers = true)]
        phi: f64,
        #[arg(allow_negative_numbers = true)]
        theta_p: f64,
        #[arg(allow_negative_numbers = true)]
        phi_p: f64,
        /// Five eigenvalues, each "re", "re+imi" or "re-imi".
        #[arg(allow_hyphen_values = true)]
        l1: String,
        #[arg(allow_hyphen_values = true)]
        l2: String,
        #[arg(allow_hyphen_values = true)]
        l3: String,
        #[arg(allow_hyphen_values = true)]
        l4: String,
        #[arg(allow_hyphen_values = true)]
        l5: String,
        /// Also write the matrix (with provenance) to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recover generating angles and spectrum from a matrix file.
    Diagonalize {
        matrix_file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Multistart)]
        mode: Mode,
        /// Which angle bisection treats as unknown.
        #[arg(long, value_enum)]
        free: Option<FreeArg>,
        /// Bisection bracket; defaults to the free angle's full range.
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["LO", "HI"])]
        bracket: Option<Vec<f64>>,
        /// All four angles θ φ θ′ φ′; the free one is ignored. Defaults to
        /// the file's provenance angles.
        #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["THETA", "PHI", "THETA_P", "PHI_P"])]
        fixed: Option<Vec<f64>>,
        /// Multistart grid density per axis.
        #[arg(long, default_value_t = 8)]
        grid: usize,
    },
    /// Report the structural families a matrix file belongs to.
    Classify { matrix_file: PathBuf },
    /// Run the seeded invariant suite and report each check.
    Selftest,
}

enum Failure {
    Usage(String),
    Recovery,
    Selftest,
}

fn main() {
    match run() {
        Ok(()) => {}
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(Failure::Recovery) => std::process::exit(3),
        Err(Failure::Selftest) => std::process::exit(4),
    }
}

fn run() -> Result<(), Failure> {
    let argv: Vec<String> = std::env::args().collect();
    let (rest, overrides) = parse::extract_tolerance_args(argv).map_err(Failure::Usage)?;
    let cli = Cli::try_parse_from(rest).unwrap_or_else(|e| e.exit());

    let mut tols = Tolerances::default();
    let mut locate_tol = 1e-8_f64;
    let mut refine_tol = 1e-8_f64;
    for (name, value) in overrides {
        match name.as_str() {
            "locate" => locate_tol = value,
            "refine" => refine_tol = value,
            _ => tols.set(&name, value).map_err(|_| {
                Failure::Usage(format!(
                    "unknown tolerance {name:?}; valid names: {}, locate, refine",
                    Tolerances::NAMES.join(", ")
                ))
            })?,
        }
    }

    let angle = |raw: f64| if cli.degrees { raw.to_radians() } else { raw };

    match cli.command {
        Command::Generate {
            theta,
            phi,
            theta_p,
            phi_p,
            l1,
            l2,
            l3,
            l4,
            l5,
            output,
        } => cmd_generate(
            [theta, phi, theta_p, phi_p],
            &[l1, l2, l3, l4, l5],
            output,
            angle,
            cli.format,
            &tols,
        ),
        Command::Diagonalize {
            matrix_file,
            mode,
            free,
            bracket,
            fixed,
            grid,
        } => cmd_diagonalize(
            &matrix_file,
            mode,
            free,
            bracket,
            fixed,
            grid,
            angle,
            cli.format,
            &tols,
            locate_tol,
            refine_tol,
        ),
        Command::Classify { matrix_file } => cmd_classify(&matrix_file, cli.format, &tols),
        Command::Selftest => cmd_selftest(cli.seed, cli.format, &tols),
    }
}

fn emit(format: Format, val: &Val) {
    match format {
        Format::Json => println!("{}", report::to_json(val)),
        Format::Csv => print!("{}", report::to_csv(val)),
    }
}

fn parse_spectrum(args: &[String; 5]) -> Result<Spectrum, Failure> {
    let mut values = [spin2mat::Complex64::new(0.0, 0.0); 5];
    for (k, text) in args.iter().enumerate() {
        values[k] = parse::parse_complex(text)
            .map_err(|e| Failure::Usage(format!("eigenvalue {}: {e}", k + 1)))?;
    }
    let spectrum = Spectrum::new(values);
    if !spectrum.all_finite() {
        return Err(Failure::Usage("eigenvalues must be finite".into()));
    }
    Ok(spectrum)
}

fn read_matrix(path: &PathBuf) -> Result<matfile::MatrixFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    matfile::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_generate(
    angles: [f64; 4],
    spectrum_args: &[String; 5],
    output: Option<PathBuf>,
    angle: impl Fn(f64) -> f64,
    format: Format,
    tols: &Tolerances,
) -> Result<(), Failure> {
    let point = ParameterPoint::new(
        angle(angles[0]),
        angle(angles[1]),
        angle(angles[2]),
        angle(angles[3]),
    );
    let spectrum = parse_spectrum(spectrum_args)?;
    let generated = generate(&point, &spectrum);

    let mut pairs = eigenvectors(&point);
    for (pair, value) in pairs.iter_mut().zip(spectrum.values.iter()) {
        pair.value = *value;
    }
    let predicted = predict_family(&point, &spectrum);
    let measured = classify(&generated.entries, tols.classify);

    if let Some(path) = &output {
        std::fs::write(
            path,
            matfile::render(&generated.entries, Some((&point, &spectrum))),
        )
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }

    let (_, vectors) = report::pairs_val(&pairs);
    let mut fields = vec![
        ("command", Val::Str("generate".into())),
        ("point", report::point_val(&point)),
        ("spectrum", report::values_val(&spectrum.values)),
        ("matrix", report::matrix_val(&generated.entries)),
        ("eigenvectors", vectors),
        ("predicted_flags", report::flags_val(&predicted)),
        ("measured_flags", report::flags_val(&measured)),
    ];
    if let Some(path) = &output {
        fields.push(("output", Val::Str(path.display().to_string())));
    }
    emit(format, &Val::Obj(fields));
    Ok(())
}

fn consistency_val(result: &RecoveryResult) -> Val {
    Val::List(
        result
            .consistency
            .iter()
            .map(|row| {
                Val::List(
                    row.iter()
                        .map(|slot| slot.map_or(Val::Null, Val::Pair))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn recovery_error_val(err: &Error) -> Val {
    let mut fields = vec![("error", Val::Str(err.to_string()))];
    match err {
        Error::SpuriousRoot {
            best,
            bracket_magnitude,
        } => {
            fields.push(("best", report::point_val(best)));
            fields.push(("bracket_magnitude", Val::Real(*bracket_magnitude)));
        }
        Error::RecoveryFailed {
            best,
            bracket_magnitude_sq,
        } => {
            fields.push(("best", report::point_val(best)));
            fields.push(("bracket_magnitude_sq", Val::Real(*bracket_magnitude_sq)));
        }
        Error::NoRootInBracket { lo, hi } => {
            fields.push(("bracket", Val::List(vec![Val::Real(*lo), Val::Real(*hi)])));
        }
        _ => {}
    }
    Val::Obj(fields)
}

#[allow(clippy::too_many_arguments)]
fn cmd_diagonalize(
    matrix_file: &PathBuf,
    mode: Mode,
    free: Option<FreeArg>,
    bracket: Option<Vec<f64>>,
    fixed: Option<Vec<f64>>,
    grid: usize,
    angle: impl Fn(f64) -> f64,
    format: Format,
    tols: &Tolerances,
    locate_tol: f64,
    refine_tol: f64,
) -> Result<(), Failure> {
    let file = read_matrix(matrix_file)?;
    let m = file.entries;

    let (recovered, mode_name) = match mode {
        Mode::Bisect => {
            let free = free.ok_or_else(|| {
                Failure::Usage("bisect mode needs --free {theta|phi|theta_p|phi_p}".into())
            })?;
            let base = match (&fixed, &file.provenance) {
                (Some(raw), _) => {
                    ParameterPoint::new(angle(raw[0]), angle(raw[1]), angle(raw[2]), angle(raw[3]))
                }
                (None, Some((point, _))) => *point,
                (None, None) => {
                    return Err(Failure::Usage(
                        "bisect mode needs --fixed angles or a matrix file with provenance".into(),
                    ))
                }
            };
            let span = match &bracket {
                Some(raw) => (angle(raw[0]), angle(raw[1])),
                None => free.to_free().range(),
            };
            (
                bisect_recover(&m, &base, free.to_free(), span, locate_tol, tols),
                "bisect",
            )
        }
        Mode::Multistart => {
            if grid < 2 {
                return Err(Failure::Usage("--grid must be at least 2".into()));
            }
            (multistart_recover(&m, grid, refine_tol, tols), "multistart")
        }
    };

    let recovered = match recovered {
        Ok(point) => point,
        Err(err) => {
            emit(
                format,
                &Val::Obj(vec![
                    ("command", Val::Str("diagonalize".into())),
                    ("mode", Val::Str(mode_name.into())),
                    ("result", recovery_error_val(&err)),
                ]),
            );
            return Err(Failure::Recovery);
        }
    };

    let result = match recover_spectrum(&m, &recovered, tols) {
        Ok(r) => r,
        Err(err) => {
            emit(
                format,
                &Val::Obj(vec![
                    ("command", Val::Str("diagonalize".into())),
                    ("mode", Val::Str(mode_name.into())),
                    ("result", recovery_error_val(&err)),
                ]),
            );
            return Err(Failure::Recovery);
        }
    };
    let verify = verify_recovery(&m, &recovered, tols.verify, tols);
    let oracle = match eig5(&m, tols)
        .and_then(|found| match_spectra(&found, &result.pairs, tols.spectrum_match))
    {
        Ok(matched) => Val::Obj(vec![
            (
                "permutation",
                Val::List(
                    matched
                        .permutation
                        .iter()
                        .map(|k| Val::Int(*k as i64 + 1))
                        .collect(),
                ),
            ),
            ("max_value_error", Val::Real(matched.max_value_error)),
            ("max_vector_error", Val::Real(matched.max_vector_error)),
        ]),
        Err(err) => Val::Obj(vec![("error", Val::Str(err.to_string()))]),
    };

    let (values, vectors) = report::pairs_val(&result.pairs);
    emit(
        format,
        &Val::Obj(vec![
            ("command", Val::Str("diagonalize".into())),
            ("mode", Val::Str(mode_name.into())),
            ("point", report::point_val(&result.point)),
            ("spectrum", values),
            ("eigenvectors", vectors),
            ("consistency", consistency_val(&result)),
            ("max_spread", Val::Real(result.max_spread)),
            (
                "verify",
                Val::Obj(vec![
                    ("pass", Val::Bool(verify.pass)),
                    ("max_spread", Val::Real(verify.max_spread)),
                    ("max_eigen_residual", Val::Real(verify.max_eigen_residual)),
                ]),
            ),
            ("oracle", oracle),
        ]),
    );
    Ok(())
}

fn cmd_classify(matrix_file: &PathBuf, format: Format, tols: &Tolerances) -> Result<(), Failure> {
    let file = read_matrix(matrix_file)?;
    let measured = classify(&file.entries, tols.classify);
    let mut fields = vec![
        ("command", Val::Str("classify".into())),
        ("flags", report::flags_val(&measured)),
    ];
    if let Some((point, spectrum)) = &file.provenance {
        let predicted = predict_family(point, spectrum);
        fields.push(("predicted_flags", report::flags_val(&predicted)));
        fields.push((
            "prediction_matches",
            Val::Bool(predicted.named() == measured.named()),
        ));
    }
    emit(format, &Val::Obj(fields));
    Ok(())
}

fn cmd_selftest(seed: u64, format: Format, tols: &Tolerances) -> Result<(), Failure> {
    let checks = selftest::run(seed, tols);
    let all_pass = checks.iter().all(|c| c.pass);
    let items = checks
        .iter()
        .map(|c| {
            Val::Obj(vec![
                ("name", Val::Str(c.name.into())),
                ("pass", Val::Bool(c.pass)),
                ("worst", Val::Real(c.worst)),
                ("tolerance", Val::Real(c.tolerance)),
            ])
        })
        .collect();
    emit(
        format,
        &Val::Obj(vec![
            ("command", Val::Str("selftest".into())),
            ("seed", Val::UInt(seed)),
            ("checks", Val::List(items)),
            ("pass", Val::Bool(all_pass)),
        ]),
    );
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Selftest)
    }
}

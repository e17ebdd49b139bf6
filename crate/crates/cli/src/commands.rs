//! Command implementations. Each command writes line-oriented `key=value`
//! reports to the supplied writer (the binary passes stdout) and returns
//! the process exit code; human-readable notes go to stderr.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use prelie_witt::central::{closed_form_omega, reduce_cocycle, solve_cocycle, SolveOutcome};
use prelie_witt::classify::{fit_family, flip_params, ClassificationResult};
use prelie_witt::families::{make_family, verify_module, FamilyParams, ModuleSpec};
use prelie_witt::scalar::{FieldMode, Scalar};
use prelie_witt::witt::{GradedLSA, IndexWindow, StructureFunction, VerificationReport};

use crate::error::CliError;
use crate::literal::parse_scalar;
use crate::table::{
    file_to_structure, omega_to_file, read_table_file, structure_to_file, write_table_file,
    FieldTag,
};

/// Raw family selection flags, as collected by the argument parser.
#[derive(Clone, Debug, Default)]
pub struct FamilyFlags {
    pub family: Option<String>,
    pub alpha: Option<String>,
    pub eps: Option<String>,
    pub beta: Option<String>,
    pub k: Option<i64>,
    pub a: Option<String>,
    pub b: Option<String>,
}

fn parse_param(
    name: &str,
    value: Option<&str>,
    symbolic_default: Option<&str>,
    mode: FieldMode,
) -> Result<Scalar, CliError> {
    let text = match (value, mode, symbolic_default) {
        (Some(v), _, _) => v,
        (None, FieldMode::Symbolic, Some(default)) => default,
        (None, _, _) => {
            return Err(CliError::InvalidParams(format!(
                "missing required parameter --{name}"
            )))
        }
    };
    parse_scalar(text, mode)
        .map_err(|e| CliError::InvalidParams(format!("--{name} {text:?}: {e}")))
}

/// Resolve family flags into parameters in the requested field mode.
/// In symbolic mode, omitted scalar parameters default to the formal
/// generators (`alpha` for weights, `eps` for deformation parameters).
pub fn build_family(flags: &FamilyFlags, mode: FieldMode) -> Result<FamilyParams, CliError> {
    let name = flags
        .family
        .as_deref()
        .ok_or_else(|| CliError::InvalidParams("missing required parameter --family".into()))?;
    let params = match name {
        "v-alpha-eps" => FamilyParams::VAlphaEps {
            alpha: parse_param("alpha", flags.alpha.as_deref(), Some("alpha"), mode)?,
            eps: parse_param("eps", flags.eps.as_deref(), Some("eps"), mode)?,
        },
        "v-beta-k" => FamilyParams::VBetaK {
            beta: parse_param("beta", flags.beta.as_deref(), Some("alpha"), mode)?,
            k: flags.k.ok_or_else(|| {
                CliError::InvalidParams("missing required parameter --k".into())
            })?,
        },
        "novikov" => FamilyParams::Novikov {
            alpha: parse_param("alpha", flags.alpha.as_deref(), Some("alpha"), mode)?,
        },
        "chapoton-a" => FamilyParams::ChapotonA {
            a: parse_param("a", flags.a.as_deref(), Some("alpha"), mode)?,
        },
        "chapoton-b" => FamilyParams::ChapotonB {
            b: parse_param("b", flags.b.as_deref(), Some("eps"), mode)?,
        },
        "w1" => match mode {
            FieldMode::Gaussian => FamilyParams::W1,
            // a symbolic table of the same structure: alpha = 1, eps = 0
            FieldMode::Symbolic => FamilyParams::VAlphaEps {
                alpha: Scalar::integer(1, mode),
                eps: Scalar::zero(mode),
            },
        },
        other => {
            return Err(CliError::InvalidParams(format!(
                "unknown family `{other}` (expected v-alpha-eps, v-beta-k, novikov, \
                 chapoton-a, chapoton-b or w1)"
            )))
        }
    };
    Ok(params)
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(|e| CliError::Parse(format!("write failed: {e}")))
}

fn family_kv(params: &FamilyParams) -> Vec<(String, String)> {
    match params {
        FamilyParams::VAlphaEps { alpha, eps } => vec![
            ("family".into(), "v-alpha-eps".into()),
            ("alpha".into(), alpha.to_string()),
            ("eps".into(), eps.to_string()),
        ],
        FamilyParams::VBetaK { beta, k } => vec![
            ("family".into(), "v-beta-k".into()),
            ("beta".into(), beta.to_string()),
            ("k".into(), k.to_string()),
        ],
        FamilyParams::Novikov { alpha } => vec![
            ("family".into(), "novikov".into()),
            ("alpha".into(), alpha.to_string()),
        ],
        FamilyParams::ChapotonA { a } => vec![
            ("family".into(), "chapoton-a".into()),
            ("a".into(), a.to_string()),
        ],
        FamilyParams::ChapotonB { b } => vec![
            ("family".into(), "chapoton-b".into()),
            ("b".into(), b.to_string()),
        ],
        FamilyParams::W1 => vec![("family".into(), "w1".into())],
    }
}

fn kv_line(pairs: &[(String, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn map_core_error(e: prelie_witt::Error) -> CliError {
    CliError::InvalidParams(e.to_string())
}

/// Generate a family table on a window and write it as a table file.
pub fn cmd_gen(
    flags: &FamilyFlags,
    field: FieldTag,
    window_n: i64,
    out_path: &Path,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mode: FieldMode = field.into();
    let params = build_family(flags, mode)?;
    let algebra = make_family(&params).map_err(map_core_error)?;
    let window = IndexWindow::new(window_n).map_err(map_core_error)?;
    let table = algebra.to_table(&window).map_err(map_core_error)?;
    let file = structure_to_file(&table)?;
    write_table_file(out_path, &file)?;
    for (k, v) in family_kv(&params) {
        emit(out, &format!("{k}={v}"))?;
    }
    emit(out, &format!("field={mode}"))?;
    emit(out, &format!("window={window_n}"))?;
    emit(out, &format!("entries={}", file.entries.len()))?;
    emit(out, &format!("out={}", out_path.display()))?;
    Ok(0)
}

fn emit_verification(
    report: &VerificationReport,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    emit(out, &format!("pairs_checked={}", report.pairs_checked))?;
    emit(out, &format!("triples_checked={}", report.triples_checked))?;
    emit(out, &format!("triples_skipped={}", report.triples_skipped))?;
    emit(out, &format!("defects={}", report.defect_count()))?;
    emit(out, &format!("errors={}", report.errors.len()))?;
    let mut shown = 0;
    for d in &report.pair_defects {
        if shown == 10 {
            break;
        }
        emit(
            out,
            &format!("witness=commutator m={} n={} value={}", d.m, d.n, d.defect),
        )?;
        shown += 1;
    }
    for d in &report.triple_defects {
        if shown == 10 {
            break;
        }
        emit(
            out,
            &format!(
                "witness=left-symmetry m={} n={} l={} value={}",
                d.m, d.n, d.l, d.defect
            ),
        )?;
        shown += 1;
    }
    for e in &report.errors {
        if shown == 10 {
            break;
        }
        let indices = e
            .indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        emit(
            out,
            &format!("witness=error indices={indices} message={}", e.error),
        )?;
        shown += 1;
    }
    Ok(())
}

/// Verify a structure table against the commutator and left-symmetry
/// residual sweeps.
pub fn cmd_verify(input: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = read_table_file(input)?;
    let algebra = file_to_structure(&file)?;
    let window = algebra.window().expect("tables carry a window");
    let report = algebra.verify_lsa(&window);
    emit(out, &format!("window={}", window.half_width()))?;
    emit(out, &format!("field={}", algebra.mode()))?;
    emit_verification(&report, out)?;
    Ok(if report.is_clean() { 0 } else { 1 })
}

/// Classify a structure table against the family list and print its
/// isomorphism orbit.
pub fn cmd_classify(input: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = read_table_file(input)?;
    let algebra = file_to_structure(&file)?;
    if algebra.mode() != FieldMode::Gaussian {
        return Err(CliError::InvalidParams(
            "classification runs in the concrete gaussian field only".into(),
        ));
    }
    let window = algebra.window().expect("tables carry a window");
    let outcome = fit_family(&algebra, &window).map_err(map_core_error)?;
    for note in &outcome.notes {
        eprintln!("note: {note}");
    }
    match outcome.result {
        ClassificationResult::Fitted { params, ambiguous } => {
            emit(out, "result=fitted")?;
            for (k, v) in family_kv(&params) {
                emit(out, &format!("{k}={v}"))?;
            }
            emit(out, &format!("ambiguous={ambiguous}"))?;
            if let Some(flipped) = flip_params(&params) {
                emit(out, &format!("orbit=flip {}", kv_line(&family_kv(&flipped))))?;
            }
            for twin in parameterization_twins(&params) {
                emit(out, &format!("orbit=equal {}", kv_line(&family_kv(&twin))))?;
            }
            Ok(0)
        }
        ClassificationResult::NoFit { witness } => {
            emit(out, "result=nofit")?;
            if let Some((m, n)) = witness {
                emit(out, &format!("witness_m={m}"))?;
                emit(out, &format!("witness_n={n}"))?;
            }
            Ok(1)
        }
    }
}

/// The documented coincidence: for non-integer nonzero `alpha`, the
/// parameter pairs `(alpha, 0)` and `(alpha, 1/alpha)` describe literally
/// the same structure function.
fn parameterization_twins(params: &FamilyParams) -> Vec<FamilyParams> {
    let FamilyParams::VAlphaEps { alpha, eps } = params else {
        return Vec::new();
    };
    let Some(a) = alpha.as_constant() else {
        return Vec::new();
    };
    if a.is_zero() || a.is_integer() {
        return Vec::new();
    }
    let mode = alpha.mode();
    if eps.is_zero() {
        return vec![FamilyParams::VAlphaEps {
            alpha: alpha.clone(),
            eps: alpha.inv().expect("nonzero").clone(),
        }];
    }
    if alpha.mul(eps).map(|p| p.is_one()).unwrap_or(false) {
        return vec![FamilyParams::VAlphaEps {
            alpha: alpha.clone(),
            eps: Scalar::zero(mode),
        }];
    }
    Vec::new()
}

/// Solve the central-extension system over a base structure.
pub fn cmd_cocycle(
    input: Option<&Path>,
    flags: &FamilyFlags,
    window_n: i64,
    out_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let base = match input {
        Some(path) => {
            let file = read_table_file(path)?;
            let algebra = file_to_structure(&file)?;
            if algebra.mode() != FieldMode::Gaussian {
                return Err(CliError::InvalidParams(
                    "the cocycle solver runs in the concrete gaussian field only".into(),
                ));
            }
            let table_window = algebra.window().expect("tables carry a window");
            if table_window.half_width() < window_n {
                return Err(CliError::InvalidParams(format!(
                    "table window {} is narrower than the requested window {window_n}",
                    table_window.half_width()
                )));
            }
            algebra
        }
        None => {
            let params = build_family(flags, FieldMode::Gaussian)?;
            make_family(&params).map_err(map_core_error)?
        }
    };
    let window = IndexWindow::new(window_n).map_err(map_core_error)?;

    let report = base.verify_lsa(&window);
    if !report.is_clean() {
        return Err(CliError::Precondition(format!(
            "base structure fails verification: {} defects, {} errors",
            report.defect_count(),
            report.errors.len()
        )));
    }

    let outcome = solve_cocycle(&base, &window).map_err(map_core_error)?;
    match outcome {
        SolveOutcome::Unique { omega } => {
            emit(out, "outcome=unique")?;
            emit(out, &format!("entries={}", omega.len()))?;
            cross_check_unique(&base, &omega, &window, out)?;
            if let Some(path) = out_path {
                let file = omega_to_file(&omega, FieldMode::Gaussian, window);
                write_table_file(path, &file)?;
                emit(out, &format!("out={}", path.display()))?;
            }
        }
        SolveOutcome::Infeasible { witness } => {
            emit(out, "outcome=infeasible")?;
            emit(out, &format!("witness_size={}", witness.combination.len()))?;
            emit(out, &format!("contradiction={}", witness.contradiction))?;
            for (id, coeff) in witness.combination.iter().take(10) {
                emit(out, &format!("witness id={id} coeff={coeff}"))?;
            }
        }
        SolveOutcome::Underdetermined { nullspace, .. } => {
            emit(out, "outcome=underdetermined")?;
            emit(out, &format!("nullspace_dim={}", nullspace.len()))?;
        }
    }
    Ok(0)
}

/// For a base of the `V_{0,eps}` shape, check the solved table against the
/// closed form and against the one-variable reduction.
fn cross_check_unique(
    base: &GradedLSA,
    omega: &BTreeMap<(i64, i64), Scalar>,
    window: &IndexWindow,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let StructureFunction::ClosedForm(FamilyParams::VAlphaEps { alpha, eps }) = base.structure()
    else {
        return Ok(());
    };
    if !alpha.is_zero() {
        return Ok(());
    }
    let closed_ok = omega.iter().all(|((m, n), value)| {
        closed_form_omega(eps, *m, *n).map_or(false, |expected| expected == *value)
    });
    emit(
        out,
        &format!("closed_form_check={}", if closed_ok { "ok" } else { "mismatch" }),
    )?;
    let reduced = reduce_cocycle(base, window).map_err(map_core_error)?;
    let reduction_ok = match reduced.omega_table(window) {
        Some(table) => omega
            .iter()
            .all(|(key, value)| table.get(key).map_or(false, |t| t == value)),
        None => false,
    };
    emit(
        out,
        &format!(
            "reduction_check={}",
            if reduction_ok { "ok" } else { "mismatch" }
        ),
    )?;
    Ok(())
}

/// Verify the bracket law on one of the weight modules.
pub fn cmd_modules(
    spec_name: &str,
    alpha: Option<&str>,
    beta: Option<&str>,
    field: FieldTag,
    window_n: i64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mode: FieldMode = field.into();
    let spec = match spec_name {
        "feigin-fuchs" => ModuleSpec::FeiginFuchs {
            alpha: parse_param("alpha", alpha, Some("alpha"), mode)?,
            beta: parse_param("beta", beta, Some("eps"), mode)?,
        },
        "a-prime-01" => ModuleSpec::APrime01,
        "a-alpha" => ModuleSpec::AAlpha {
            alpha: parse_param("alpha", alpha, Some("alpha"), mode)?,
        },
        "b-beta" => ModuleSpec::BBeta {
            beta: parse_param("beta", beta, Some("eps"), mode)?,
        },
        other => {
            return Err(CliError::InvalidParams(format!(
                "unknown module spec `{other}` (expected feigin-fuchs, a-prime-01, a-alpha \
                 or b-beta)"
            )))
        }
    };
    let window = IndexWindow::new(window_n).map_err(map_core_error)?;
    let report = verify_module(&spec, &window);
    emit(out, &format!("spec={spec_name}"))?;
    emit(out, &format!("window={window_n}"))?;
    emit(out, &format!("triples_checked={}", report.triples_checked))?;
    emit(out, &format!("triples_skipped={}", report.triples_skipped))?;
    emit(out, &format!("defects={}", report.defects.len()))?;
    emit(out, &format!("errors={}", report.errors.len()))?;
    if spec_name == "a-prime-01" {
        emit(out, "note=index 0 excluded")?;
    }
    for d in report.defects.iter().take(10) {
        emit(
            out,
            &format!(
                "witness=bracket i={} j={} n={} value={}",
                d.i, d.j, d.n, d.defect
            ),
        )?;
    }
    Ok(if report.is_clean() { 0 } else { 1 })
}

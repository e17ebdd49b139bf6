//! Closed-form constructors for the classified algebra families and the
//! indecomposable weight modules, plus module-axiom verification.
//!
//! The families:
//!
//! ```text
//! V_{alpha,eps}:  f(m,n) = (alpha + n + alpha*eps*m)(1 + eps*n) / (1 + eps*(m+n))
//! V^{beta,k}:     f(m,n) = n + k                        for m+n+k != 0
//!                 f(-n-k,n) = (n+k)(beta-n-k)/(beta-k)  on the anti-diagonal
//! N_alpha:        f(m,n) = alpha + n        (Novikov; equals V_{alpha,0})
//! A_a:            f(m,n) = 1 + a*n          (Chapoton)
//! B_b:            f(m,n) = n / (1 + b*m)    (Chapoton)
//! W1:             f(m,n) = 1 + n            (equals V_{1,0})
//! ```
//!
//! The Chapoton families are kept distinct from the V families on purpose:
//! their commutators are rescaled Witt brackets, and reducing them to V form
//! is a real basis-change computation exercised in the classify module.

use crate::error::{Error, Result};
use crate::scalar::{FieldMode, Scalar};
use crate::sweep;
use crate::witt::{GradedLSA, IndexWindow, SweepError};

/// Tagged identifier of a classified family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyParams {
    VAlphaEps { alpha: Scalar, eps: Scalar },
    VBetaK { beta: Scalar, k: i64 },
    Novikov { alpha: Scalar },
    ChapotonA { a: Scalar },
    ChapotonB { b: Scalar },
    W1,
}

impl FamilyParams {
    /// Field mode of the scalar parameters; `None` for parameter-free
    /// families, which default to the concrete mode.
    pub fn mode(&self) -> Option<FieldMode> {
        match self {
            FamilyParams::VAlphaEps { alpha, .. } => Some(alpha.mode()),
            FamilyParams::VBetaK { beta, .. } => Some(beta.mode()),
            FamilyParams::Novikov { alpha } => Some(alpha.mode()),
            FamilyParams::ChapotonA { a } => Some(a.mode()),
            FamilyParams::ChapotonB { b } => Some(b.mode()),
            FamilyParams::W1 => None,
        }
    }

    /// Check the parameter invariants. Genuinely formal (non-constant
    /// symbolic) parameters are exempt from the reciprocal-integer tests;
    /// symbolic constants are checked exactly like concrete values.
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilyParams::VAlphaEps { alpha, eps } => {
                if alpha.mode() != eps.mode() {
                    return Err(Error::InvalidParameter(
                        "alpha and eps must share a field mode".into(),
                    ));
                }
                reject_integer_reciprocal("eps", eps)
            }
            FamilyParams::VBetaK { beta, k } => {
                let diff = beta.sub(&Scalar::integer(*k, beta.mode()))?;
                if diff.is_zero() {
                    return Err(Error::InvalidParameter(format!(
                        "beta must differ from k, got beta = k = {k}"
                    )));
                }
                Ok(())
            }
            FamilyParams::ChapotonB { b } => reject_integer_reciprocal("b", b),
            FamilyParams::Novikov { .. } | FamilyParams::ChapotonA { .. } | FamilyParams::W1 => {
                Ok(())
            }
        }
    }
}

/// Error unless `value` is zero or its reciprocal is not an integer.
/// Performed exactly in Q(i): a value is an integer reciprocal iff its
/// inverse has zero imaginary part and denominator one.
fn reject_integer_reciprocal(name: &str, value: &Scalar) -> Result<()> {
    let Some(c) = value.as_constant() else {
        return Ok(()); // formal parameter, exempt
    };
    if c.is_zero() {
        return Ok(());
    }
    let inverse = c.inv().expect("nonzero constant");
    if let Some(q) = inverse.to_integer() {
        return Err(Error::InvalidParameter(format!(
            "{name} = {c} is the reciprocal of the integer {q}"
        )));
    }
    Ok(())
}

/// Validated closed-form constructor.
pub fn make_family(params: &FamilyParams) -> Result<GradedLSA> {
    params.validate()?;
    Ok(GradedLSA::closed_form(params.clone()))
}

/// Evaluate the closed-form structure constant `f(m,n)` of a family.
pub fn family_coefficient(
    params: &FamilyParams,
    m: i64,
    n: i64,
    mode: FieldMode,
) -> Result<Scalar> {
    let int = |k: i64| Scalar::integer(k, mode);
    match params {
        FamilyParams::VAlphaEps { alpha, eps } => {
            let den = int(1).add(&eps.scale_int(m + n))?;
            if den.is_zero() {
                return Err(Error::Pole { m, n });
            }
            let left = alpha
                .add(&int(n))?
                .add(&alpha.mul(eps)?.scale_int(m))?;
            let right = int(1).add(&eps.scale_int(n))?;
            Ok(left.mul(&right)?.div(&den)?)
        }
        FamilyParams::VBetaK { beta, k } => {
            if m + n + k != 0 {
                return Ok(int(n + k));
            }
            // anti-diagonal branch; depends only on n once m = -n-k
            let den = beta.sub(&int(*k))?;
            if den.is_zero() {
                return Err(Error::Pole { m, n });
            }
            let num = beta.sub(&int(n + k))?.scale_int(n + k);
            Ok(num.div(&den)?)
        }
        FamilyParams::Novikov { alpha } => Ok(alpha.add(&int(n))?),
        FamilyParams::ChapotonA { a } => Ok(int(1).add(&a.scale_int(n))?),
        FamilyParams::ChapotonB { b } => {
            let den = int(1).add(&b.scale_int(m))?;
            if den.is_zero() {
                return Err(Error::Pole { m, n });
            }
            Ok(int(n).div(&den)?)
        }
        FamilyParams::W1 => Ok(int(1 + n)),
    }
}

/// Residual of the identity map as a 1-cocycle for the left-regular
/// action: `(n-m) - f(m,n) + f(n,m)`, the negated commutator residual.
/// Kept as a named operation because the bijective-1-cocycle mechanism is
/// what makes a compatible product possible at all.
pub fn identity_cocycle_defect(algebra: &GradedLSA, m: i64, n: i64) -> Result<Scalar> {
    Ok(algebra.commutator_defect(m, n)?.neg())
}

/// Tagged identifier of one of the four indecomposable weight modules.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleSpec {
    /// Action `x_i v_n = (alpha + n + i*beta) v_{n+i}` on basis `{v_n}`.
    FeiginFuchs { alpha: Scalar, beta: Scalar },
    /// Action `x_i v_n = (n+i) v_{n+i}` on basis `{v_n | n != 0}`.
    APrime01,
    /// Action `x_i v_n = (n+i) v_{n+i}` for `n != 0`,
    /// `x_i v_0 = i(alpha+i) v_i`.
    AAlpha { alpha: Scalar },
    /// Action `x_i v_n = n v_{n+i}` for `n+i != 0`,
    /// `x_i v_{-i} = -i(beta+i) v_0`.
    BBeta { beta: Scalar },
}

impl ModuleSpec {
    pub fn mode(&self) -> FieldMode {
        match self {
            ModuleSpec::FeiginFuchs { alpha, .. } => alpha.mode(),
            ModuleSpec::APrime01 => FieldMode::Gaussian,
            ModuleSpec::AAlpha { alpha } => alpha.mode(),
            ModuleSpec::BBeta { beta } => beta.mode(),
        }
    }

    /// Whether `n` indexes a basis vector of the module.
    pub fn is_valid_index(&self, n: i64) -> bool {
        match self {
            ModuleSpec::APrime01 => n != 0,
            _ => true,
        }
    }
}

/// The coefficient `c` in `x_i v_n = c v_{n+i}`. The annihilator acts as
/// zero on every module by construction and needs no operation.
pub fn module_action(spec: &ModuleSpec, i: i64, n: i64) -> Result<Scalar> {
    let mode = spec.mode();
    let int = |k: i64| Scalar::integer(k, mode);
    match spec {
        ModuleSpec::FeiginFuchs { alpha, beta } => {
            Ok(alpha.add(&int(n))?.add(&beta.scale_int(i))?)
        }
        ModuleSpec::APrime01 => {
            if n == 0 {
                return Err(Error::InvalidIndex {
                    index: 0,
                    reason: "the module has no basis vector at index 0".into(),
                });
            }
            Ok(int(n + i))
        }
        ModuleSpec::AAlpha { alpha } => {
            if n == 0 {
                Ok(alpha.add(&int(i))?.scale_int(i))
            } else {
                Ok(int(n + i))
            }
        }
        ModuleSpec::BBeta { beta } => {
            if n + i == 0 {
                Ok(beta.add(&int(i))?.scale_int(-i))
            } else {
                Ok(int(n))
            }
        }
    }
}

/// A nonzero residual of the bracket law on a module: the coefficient of
/// `v_{n+i+j}` in `[x_i, x_j] v_n - x_i (x_j v_n) + x_j (x_i v_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleDefect {
    pub i: i64,
    pub j: i64,
    pub n: i64,
    pub defect: Scalar,
}

#[derive(Clone, Debug)]
pub struct ModuleReport {
    pub defects: Vec<ModuleDefect>,
    pub errors: Vec<SweepError>,
    pub triples_checked: usize,
    pub triples_skipped: usize,
}

impl ModuleReport {
    pub fn is_clean(&self) -> bool {
        self.defects.is_empty() && self.errors.is_empty()
    }
}

/// Sweep the bracket law `[x_i, x_j] v_n = x_i (x_j v_n) - x_j (x_i v_n)`
/// over all window triples with valid basis indices.
pub fn verify_module(spec: &ModuleSpec, w: &IndexWindow) -> ModuleReport {
    let mode = spec.mode();
    let reach = 2 * w.half_width();
    let mut cache = std::collections::HashMap::new();
    for i in -reach..=reach {
        for n in -reach..=reach {
            if spec.is_valid_index(n) {
                cache.insert((i, n), module_action(spec, i, n));
            }
        }
    }
    let lookup = move |i: i64, n: i64| -> Result<Scalar> {
        match cache.get(&(i, n)) {
            Some(Ok(s)) => Ok(s.clone()),
            Some(Err(e)) => Err(e.clone()),
            None => Err(Error::InvalidIndex {
                index: n,
                reason: "the module has no basis vector at index 0".into(),
            }),
        }
    };
    module_sweep(&lookup, &|n| spec.is_valid_index(n), mode, w)
}

/// The sweep itself, over an arbitrary action-coefficient function.
/// Composite terms short-circuit on a zero first factor, which is exactly
/// the case where the intermediate basis index may be missing.
fn module_sweep(
    action: &(dyn Fn(i64, i64) -> Result<Scalar> + Sync),
    valid: &(dyn Fn(i64) -> bool + Sync),
    mode: FieldMode,
    w: &IndexWindow,
) -> ModuleReport {
    let is: Vec<i64> = w.indices().collect();
    let chunks = sweep::par_flat_map(is, |i| {
        let mut defects = Vec::new();
        let mut errors = Vec::new();
        let mut checked = 0usize;
        let mut skipped = 0usize;
        for j in w.indices() {
            for n in w.indices() {
                if !valid(n) {
                    skipped += 1;
                    continue;
                }
                checked += 1;
                match module_bracket_defect(action, mode, i, j, n) {
                    Ok(d) if d.is_zero() => {}
                    Ok(d) => defects.push(ModuleDefect { i, j, n, defect: d }),
                    Err(e) => errors.push(SweepError {
                        indices: vec![i, j, n],
                        error: e,
                    }),
                }
            }
        }
        vec![(defects, errors, checked, skipped)]
    });
    let mut report = ModuleReport {
        defects: Vec::new(),
        errors: Vec::new(),
        triples_checked: 0,
        triples_skipped: 0,
    };
    for (defects, errors, checked, skipped) in chunks {
        report.defects.extend(defects);
        report.errors.extend(errors);
        report.triples_checked += checked;
        report.triples_skipped += skipped;
    }
    report
}

fn module_bracket_defect(
    action: &dyn Fn(i64, i64) -> Result<Scalar>,
    mode: FieldMode,
    i: i64,
    j: i64,
    n: i64,
) -> Result<Scalar> {
    // (j-i) c(i+j, n) - c(j,n) c(i, n+j) + c(i,n) c(j, n+i)
    let bracket = action(i + j, n)?.scale_int(j - i);
    let first = {
        let outer = action(j, n)?;
        if outer.is_zero() {
            Scalar::zero(mode)
        } else {
            outer.mul(&action(i, n + j)?)?
        }
    };
    let second = {
        let outer = action(i, n)?;
        if outer.is_zero() {
            Scalar::zero(mode)
        } else {
            outer.mul(&action(j, n + i)?)?
        }
    };
    Ok(bracket.sub(&first)?.add(&second)?)
}

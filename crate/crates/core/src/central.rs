//! Central extensions by an annihilator element theta.
//!
//! Adjoining theta with products `x_m x_n = f(m,n) x_{m+n} + w(m,n) theta`
//! and `theta x = x theta = theta theta = 0` yields a left-symmetric
//! structure whose commutator is the centrally extended bracket exactly
//! when the bilinear form `w` satisfies two conditions:
//!
//! ```text
//! w(m,n) - w(n,m) = (n^3 - n)/12                  when m + n = 0, else 0
//! (n-m) w(m+n,l) = w(m,n+l) f(n,l) - w(n,m+l) f(m,l)
//! ```
//!
//! This module evaluates both residuals, solves the window-truncated linear
//! system they generate by exact elimination (with full provenance so
//! infeasibility comes with an auditable certificate), and independently
//! re-derives the solution through the one-variable reduction
//! `w(m,n) = phi(m) delta_{m+n,0}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{FieldMode, Scalar};
use crate::witt::{GradedLSA, IndexWindow, PairDefect, SweepError, TripleDefect};

/// The bilinear form of a central extension: a closed form in one
/// parameter, or a finite table (possibly sparse, e.g. a solver output).
#[derive(Clone, Debug, PartialEq)]
pub enum Cocycle {
    ClosedForm { eps: Scalar },
    Table {
        entries: BTreeMap<(i64, i64), Scalar>,
        window: IndexWindow,
    },
}

impl Cocycle {
    /// Closed form with validated parameter: `eps` nonzero and not the
    /// reciprocal of an integer (formal parameters are exempt).
    pub fn closed_form(eps: Scalar) -> Result<Self> {
        if eps.is_zero() {
            return Err(Error::InvalidParameter(
                "cocycle parameter eps must be nonzero".into(),
            ));
        }
        if let Some(c) = eps.as_constant() {
            if let Some(q) = c.inv().expect("nonzero constant").to_integer() {
                return Err(Error::InvalidParameter(format!(
                    "eps = {c} is the reciprocal of the integer {q}"
                )));
            }
        }
        Ok(Cocycle::ClosedForm { eps })
    }

    /// Table cocycle; entries may cover only part of the window square.
    pub fn table(entries: BTreeMap<(i64, i64), Scalar>, window: IndexWindow) -> Result<Self> {
        let mut mode = None;
        for ((m, n), value) in &entries {
            if !window.contains(*m) || !window.contains(*n) {
                return Err(Error::OutOfWindow {
                    m: *m,
                    n: *n,
                    half_width: window.half_width(),
                });
            }
            match mode {
                None => mode = Some(value.mode()),
                Some(expected) if expected != value.mode() => {
                    return Err(Error::InvalidParameter(format!(
                        "cocycle table mixes field modes at entry ({m},{n})"
                    )));
                }
                _ => {}
            }
        }
        if entries.is_empty() {
            return Err(Error::InvalidParameter("empty cocycle table".into()));
        }
        Ok(Cocycle::Table { entries, window })
    }

    pub fn mode(&self) -> FieldMode {
        match self {
            Cocycle::ClosedForm { eps } => eps.mode(),
            Cocycle::Table { entries, .. } => {
                entries.values().next().expect("nonempty table").mode()
            }
        }
    }

    /// Whether `w(m,n)` can be evaluated.
    pub fn defined_at(&self, m: i64, n: i64) -> bool {
        match self {
            Cocycle::ClosedForm { .. } => true,
            Cocycle::Table { entries, .. } => entries.contains_key(&(m, n)),
        }
    }

    /// The value `w(m,n)`.
    pub fn value(&self, m: i64, n: i64) -> Result<Scalar> {
        match self {
            Cocycle::ClosedForm { eps } => closed_form_omega_unchecked(eps, m, n),
            Cocycle::Table { entries, window } => {
                if let Some(v) = entries.get(&(m, n)) {
                    Ok(v.clone())
                } else if window.contains(m) && window.contains(n) {
                    Err(Error::MissingCocycleEntry { m, n })
                } else {
                    Err(Error::OutOfWindow {
                        m,
                        n,
                        half_width: window.half_width(),
                    })
                }
            }
        }
    }
}

/// The closed-form cocycle
/// `w(m,n) = (n^3 - n - (eps - 1/eps) n^2)/24` on the anti-diagonal
/// `m + n = 0`, zero elsewhere. Validates `eps` like
/// [`Cocycle::closed_form`].
pub fn closed_form_omega(eps: &Scalar, m: i64, n: i64) -> Result<Scalar> {
    let cocycle = Cocycle::closed_form(eps.clone())?;
    cocycle.value(m, n)
}

fn closed_form_omega_unchecked(eps: &Scalar, m: i64, n: i64) -> Result<Scalar> {
    let mode = eps.mode();
    if m + n != 0 {
        return Ok(Scalar::zero(mode));
    }
    let diff = eps.sub(&eps.inv()?)?;
    let cubic = Scalar::integer(n * n * n - n, mode);
    let value = cubic.sub(&diff.scale_int(n * n))?;
    Ok(value.mul(&Scalar::from_pair(1, 24, mode))?)
}

/// Residual of the skew condition:
/// `w(m,n) - w(n,m) - (n^3 - n)/12 * delta_{m+n,0}`.
pub fn virasoro_skew_defect(omega: &Cocycle, m: i64, n: i64) -> Result<Scalar> {
    let mode = omega.mode();
    let skew = omega.value(m, n)?.sub(&omega.value(n, m)?)?;
    let rhs = if m + n == 0 {
        Scalar::integer(n * n * n - n, mode).mul(&Scalar::from_pair(1, 12, mode))?
    } else {
        Scalar::zero(mode)
    };
    Ok(skew.sub(&rhs)?)
}

/// Residual of the extension compatibility condition:
/// `(n-m) w(m+n,l) - w(m,n+l) f(n,l) + w(n,m+l) f(m,l)`.
pub fn lsa_cocycle_defect(
    omega: &Cocycle,
    algebra: &GradedLSA,
    m: i64,
    n: i64,
    l: i64,
) -> Result<Scalar> {
    let t1 = omega.value(m + n, l)?.scale_int(n - m);
    let t2 = omega.value(m, n + l)?.mul(&algebra.product(n, l)?)?;
    let t3 = omega.value(n, m + l)?.mul(&algebra.product(m, l)?)?;
    Ok(t1.sub(&t2)?.add(&t3)?)
}

/// Sweep both cocycle conditions over a window, skipping instances whose
/// required values fall outside a table's domain.
#[derive(Clone, Debug)]
pub struct CocycleSweepReport {
    pub skew_defects: Vec<PairDefect>,
    pub lsa_defects: Vec<TripleDefect>,
    pub errors: Vec<SweepError>,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub instances_skipped: usize,
}

impl CocycleSweepReport {
    pub fn is_clean(&self) -> bool {
        self.skew_defects.is_empty() && self.lsa_defects.is_empty() && self.errors.is_empty()
    }
}

pub fn cocycle_sweep(
    omega: &Cocycle,
    algebra: &GradedLSA,
    w: &IndexWindow,
) -> CocycleSweepReport {
    let f_limit = algebra.window().map(|tw| tw.half_width());
    let f_ok = |m: i64, n: i64| f_limit.map_or(true, |h| m.abs() <= h && n.abs() <= h);
    let mut report = CocycleSweepReport {
        skew_defects: Vec::new(),
        lsa_defects: Vec::new(),
        errors: Vec::new(),
        pairs_checked: 0,
        triples_checked: 0,
        instances_skipped: 0,
    };
    for m in w.indices() {
        for n in w.indices() {
            if !(omega.defined_at(m, n) && omega.defined_at(n, m)) {
                report.instances_skipped += 1;
                continue;
            }
            report.pairs_checked += 1;
            match virasoro_skew_defect(omega, m, n) {
                Ok(d) if d.is_zero() => {}
                Ok(d) => report.skew_defects.push(PairDefect { m, n, defect: d }),
                Err(e) => report.errors.push(SweepError {
                    indices: vec![m, n],
                    error: e,
                }),
            }
        }
    }
    for m in w.indices() {
        for n in w.indices() {
            for l in w.indices() {
                let available = omega.defined_at(m + n, l)
                    && omega.defined_at(m, n + l)
                    && omega.defined_at(n, m + l)
                    && f_ok(n, l)
                    && f_ok(m, l);
                if !available {
                    report.instances_skipped += 1;
                    continue;
                }
                report.triples_checked += 1;
                match lsa_cocycle_defect(omega, algebra, m, n, l) {
                    Ok(d) if d.is_zero() => {}
                    Ok(d) => report.lsa_defects.push(TripleDefect { m, n, l, defect: d }),
                    Err(e) => report.errors.push(SweepError {
                        indices: vec![m, n, l],
                        error: e,
                    }),
                }
            }
        }
    }
    report
}

/// The extended algebra on the basis `{x_n} + {theta}`.
#[derive(Clone, Debug)]
pub struct ExtendedAlgebra {
    base: GradedLSA,
    omega: Cocycle,
}

impl ExtendedAlgebra {
    pub fn base(&self) -> &GradedLSA {
        &self.base
    }

    pub fn omega(&self) -> &Cocycle {
        &self.omega
    }

    /// `x_m x_n` as the pair (coefficient of `x_{m+n}`, coefficient of
    /// theta).
    pub fn product(&self, m: i64, n: i64) -> Result<(Scalar, Scalar)> {
        Ok((self.base.product(m, n)?, self.omega.value(m, n)?))
    }

    /// Products touching theta are identically zero on both components.
    pub fn product_with_theta(&self) -> (Scalar, Scalar) {
        let mode = self.base.mode();
        (Scalar::zero(mode), Scalar::zero(mode))
    }

    /// `[x_m, x_n]` as the pair (coefficient of `x_{m+n}`, coefficient of
    /// theta).
    pub fn commutator(&self, m: i64, n: i64) -> Result<(Scalar, Scalar)> {
        let x = self.base.product(m, n)?.sub(&self.base.product(n, m)?)?;
        let theta = self.omega.value(m, n)?.sub(&self.omega.value(n, m)?)?;
        Ok((x, theta))
    }

    /// The associator `(x_m x_n) x_l - x_m (x_n x_l)` as the pair
    /// (coefficient of `x_{m+n+l}`, coefficient of theta). Left-symmetry
    /// of the extension is symmetry of both components in `(m, n)`.
    pub fn associator(&self, m: i64, n: i64, l: i64) -> Result<(Scalar, Scalar)> {
        let x = self.base.associator(m, n, l)?;
        let theta = self
            .base
            .product(m, n)?
            .mul(&self.omega.value(m + n, l)?)?
            .sub(&self.base.product(n, l)?.mul(&self.omega.value(m, n + l)?)?)?;
        Ok((x, theta))
    }
}

/// Adjoin theta after sweeping both cocycle conditions on the window;
/// any defect aborts the construction.
pub fn extend_algebra(
    base: GradedLSA,
    omega: Cocycle,
    w: &IndexWindow,
) -> Result<ExtendedAlgebra> {
    let report = cocycle_sweep(&omega, &base, w);
    if !report.is_clean() {
        return Err(Error::Precondition(format!(
            "cocycle fails its defect sweeps: {} skew defects, {} compatibility defects, {} errors",
            report.skew_defects.len(),
            report.lsa_defects.len(),
            report.errors.len()
        )));
    }
    Ok(ExtendedAlgebra { base, omega })
}

// ---------------------------------------------------------------------------
// the window-truncated linear system
// ---------------------------------------------------------------------------

/// Identity instance generating one linear constraint on the unknowns
/// `w(m,n)`. The derived `Ord` gives the deterministic row order: all skew
/// instances first, each family ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EquationId {
    Skew { m: i64, n: i64 },
    LeftSym { m: i64, n: i64, l: i64 },
}

impl std::fmt::Display for EquationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EquationId::Skew { m, n } => write!(f, "skew({m},{n})"),
            EquationId::LeftSym { m, n, l } => write!(f, "leftsym({m},{n},{l})"),
        }
    }
}

/// One sparse row: `sum coeffs * w(m,n) = rhs`.
#[derive(Clone, Debug)]
pub struct SystemRow {
    pub id: EquationId,
    pub coeffs: Vec<((i64, i64), Scalar)>,
    pub rhs: Scalar,
}

/// The assembled constraint system over a window.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub window: IndexWindow,
    pub rows: Vec<SystemRow>,
}

/// Assemble every skew instance with `|m|,|n| <= N` and every
/// compatibility instance whose six index arguments
/// `m, n, l, m+n, n+l, m+l` all lie in `[-N, N]`. Instances with `m >= n`
/// are omitted: they are trivial or exact negations of the emitted ones.
pub fn build_system(algebra: &GradedLSA, w: &IndexWindow) -> Result<LinearSystem> {
    if algebra.mode() != FieldMode::Gaussian {
        return Err(Error::SymbolicUnsupported);
    }
    let mode = FieldMode::Gaussian;
    let mut rows = Vec::new();
    for m in w.indices() {
        for n in w.indices() {
            if m >= n {
                continue;
            }
            let rhs = if m + n == 0 {
                Scalar::integer(n * n * n - n, mode)
                    .mul(&Scalar::from_pair(1, 12, mode))?
            } else {
                Scalar::zero(mode)
            };
            rows.push(SystemRow {
                id: EquationId::Skew { m, n },
                coeffs: vec![
                    ((m, n), Scalar::one(mode)),
                    ((n, m), Scalar::integer(-1, mode)),
                ],
                rhs,
            });
        }
    }
    for m in w.indices() {
        for n in w.indices() {
            if m >= n {
                continue;
            }
            for l in w.indices() {
                if !(w.contains(m + n) && w.contains(n + l) && w.contains(m + l)) {
                    continue;
                }
                let mut coeffs: BTreeMap<(i64, i64), Scalar> = BTreeMap::new();
                let mut add = |key: (i64, i64), value: Scalar| {
                    let entry = coeffs.entry(key).or_insert_with(|| Scalar::zero(mode));
                    *entry = entry.add(&value).expect("same mode");
                };
                add((m + n, l), Scalar::integer(n - m, mode));
                add((m, n + l), algebra.product(n, l)?.neg());
                add((n, m + l), algebra.product(m, l)?);
                let coeffs: Vec<_> = coeffs
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if coeffs.is_empty() {
                    continue;
                }
                rows.push(SystemRow {
                    id: EquationId::LeftSym { m, n, l },
                    coeffs,
                    rhs: Scalar::zero(mode),
                });
            }
        }
    }
    Ok(LinearSystem { window: *w, rows })
}

/// A certificate of infeasibility: scaling each listed generating identity
/// by its coefficient and adding the rows yields `0 = contradiction`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub combination: Vec<(EquationId, Scalar)>,
    pub contradiction: Scalar,
}

#[derive(Clone, Debug)]
pub struct NullspaceVector {
    /// The free unknown this vector is dual to.
    pub free: (i64, i64),
    /// Full coordinate vector, keyed by unknown.
    pub components: BTreeMap<(i64, i64), Scalar>,
}

#[derive(Clone, Debug)]
pub enum SolveOutcome {
    /// Consistent and every unknown of the claim region is pinned; the
    /// table carries exactly the claim region.
    Unique {
        omega: BTreeMap<(i64, i64), Scalar>,
    },
    Infeasible { witness: Witness },
    /// Consistent, but some claim-region unknown stays free.
    Underdetermined {
        particular: BTreeMap<(i64, i64), Scalar>,
        nullspace: Vec<NullspaceVector>,
    },
}

/// The region on which window truncation cannot disturb uniqueness:
/// unknowns `w(m,n)` with `|m|,|n| <= N-2` that appear in at least one
/// in-window identity instance, which requires `|m+n| <= N`. Corner
/// unknowns with `|m+n| > N` occur in no instance at all and are
/// structurally free, so no claim is made about them.
pub fn claim_region(w: &IndexWindow) -> Vec<(i64, i64)> {
    let inner = w.half_width() - 2;
    let mut region = Vec::new();
    for m in -inner..=inner {
        for n in -inner..=inner {
            if (m + n).abs() <= w.half_width() {
                region.push((m, n));
            }
        }
    }
    region
}

/// Build and solve the window-truncated system for a base structure.
/// The base is assumed to have passed `verify_lsa` on the window.
pub fn solve_cocycle(algebra: &GradedLSA, w: &IndexWindow) -> Result<SolveOutcome> {
    let system = build_system(algebra, w)?;
    Ok(solve_system(&system))
}

/// Exact elimination with provenance tracking.
///
/// Pivoting is deterministic: columns in unknown order, the pivot being the
/// first remaining row with a nonzero entry. Every row carries the linear
/// combination of generating identities it currently represents, so an
/// inconsistent row directly yields an auditable witness.
pub fn solve_system(system: &LinearSystem) -> SolveOutcome {
    let w = system.window;
    let mode = FieldMode::Gaussian;
    let mut unknowns: Vec<(i64, i64)> = Vec::new();
    let mut col_of: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for m in w.indices() {
        for n in w.indices() {
            col_of.insert((m, n), unknowns.len());
            unknowns.push((m, n));
        }
    }
    let ncols = unknowns.len();

    #[derive(Clone)]
    struct Work {
        coeffs: BTreeMap<usize, Scalar>,
        rhs: Scalar,
        provenance: BTreeMap<usize, Scalar>,
        used: bool,
    }

    let mut rows: Vec<Work> = system
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| Work {
            coeffs: row
                .coeffs
                .iter()
                .map(|(key, c)| (col_of[key], c.clone()))
                .collect(),
            rhs: row.rhs.clone(),
            provenance: BTreeMap::from([(i, Scalar::one(mode))]),
            used: false,
        })
        .collect();

    fn scale(row: &mut Work, factor: &Scalar) {
        for c in row.coeffs.values_mut() {
            *c = c.mul(factor).expect("same mode");
        }
        row.rhs = row.rhs.mul(factor).expect("same mode");
        for c in row.provenance.values_mut() {
            *c = c.mul(factor).expect("same mode");
        }
    }

    fn axpy_map(
        target: &mut BTreeMap<usize, Scalar>,
        factor: &Scalar,
        source: &BTreeMap<usize, Scalar>,
    ) {
        for (k, v) in source {
            let add = v.mul(factor).expect("same mode");
            match target.entry(*k) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !add.is_zero() {
                        e.insert(add);
                    }
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(&add).expect("same mode");
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
    }

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    for col in 0..ncols {
        let pivot_idx = rows
            .iter()
            .position(|r| !r.used && r.coeffs.contains_key(&col));
        let Some(pidx) = pivot_idx else { continue };
        let pivot_value = rows[pidx].coeffs[&col].clone();
        let inverse = pivot_value.inv().expect("pivot entries are nonzero");
        scale(&mut rows[pidx], &inverse);
        rows[pidx].used = true;
        pivot_of_col[col] = Some(pidx);
        let pivot_row = rows[pidx].clone();
        for (ridx, row) in rows.iter_mut().enumerate() {
            if ridx == pidx {
                continue;
            }
            let Some(a) = row.coeffs.get(&col).cloned() else {
                continue;
            };
            let factor = a.neg();
            axpy_map(&mut row.coeffs, &factor, &pivot_row.coeffs);
            row.rhs = row
                .rhs
                .add(&pivot_row.rhs.mul(&factor).expect("same mode"))
                .expect("same mode");
            axpy_map(&mut row.provenance, &factor, &pivot_row.provenance);
        }
    }

    // an exhausted row with a nonzero right-hand side is a contradiction
    for row in &rows {
        if !row.used && row.coeffs.is_empty() && !row.rhs.is_zero() {
            let combination = row
                .provenance
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (system.rows[*i].id, c.clone()))
                .collect();
            return SolveOutcome::Infeasible {
                witness: Witness {
                    combination,
                    contradiction: row.rhs.clone(),
                },
            };
        }
    }

    // after full elimination a pivot row reads x_c + sum(free terms) = rhs
    let mut determined: BTreeMap<(i64, i64), Scalar> = BTreeMap::new();
    let mut particular: BTreeMap<(i64, i64), Scalar> = BTreeMap::new();
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(pidx) = pivot {
            let row = &rows[*pidx];
            particular.insert(unknowns[col], row.rhs.clone());
            if row.coeffs.len() == 1 {
                determined.insert(unknowns[col], row.rhs.clone());
            }
        }
    }

    let region = claim_region(&w);
    if region.iter().all(|key| determined.contains_key(key)) {
        let omega = region
            .into_iter()
            .map(|key| {
                let value = determined[&key].clone();
                (key, value)
            })
            .collect();
        return SolveOutcome::Unique { omega };
    }

    let mut nullspace = Vec::new();
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if pivot.is_some() {
            continue;
        }
        let mut components: BTreeMap<(i64, i64), Scalar> = BTreeMap::new();
        components.insert(unknowns[col], Scalar::one(mode));
        for (pcol, ppivot) in pivot_of_col.iter().enumerate() {
            if let Some(pidx) = ppivot {
                if let Some(a) = rows[*pidx].coeffs.get(&col) {
                    if !a.is_zero() {
                        components.insert(unknowns[pcol], a.neg());
                    }
                }
            }
        }
        nullspace.push(NullspaceVector {
            free: unknowns[col],
            components,
        });
    }
    SolveOutcome::Underdetermined {
        particular,
        nullspace,
    }
}

// ---------------------------------------------------------------------------
// the one-variable reduction
// ---------------------------------------------------------------------------

/// Outcome of the reduction of the cocycle conditions to a one-variable
/// function on the anti-diagonal.
#[derive(Clone, Debug)]
pub enum ReducedOutcome {
    /// `w(m,n) = phi(m) delta_{m+n,0}` with `phi` tabulated on the window.
    Unique { phi: BTreeMap<i64, Scalar> },
    /// The recurrences force an inconsistency; `lhs != rhs` states the
    /// first violated constraint.
    Contradiction {
        constraint: String,
        lhs: Scalar,
        rhs: Scalar,
    },
}

impl ReducedOutcome {
    /// Materialize the cocycle table `w(m,n) = phi(m) delta_{m+n,0}` on
    /// the window square, when the reduction succeeded.
    pub fn omega_table(&self, w: &IndexWindow) -> Option<BTreeMap<(i64, i64), Scalar>> {
        let ReducedOutcome::Unique { phi } = self else {
            return None;
        };
        let mode = phi.values().next().map(|s| s.mode())?;
        let mut table = BTreeMap::new();
        for m in w.indices() {
            for n in w.indices() {
                let value = if m + n == 0 {
                    phi.get(&m)?.clone()
                } else {
                    Scalar::zero(mode)
                };
                table.insert((m, n), value);
            }
        }
        Some(table)
    }
}

/// Fast path mirroring the hand reduction, applicable to bases of the
/// `V_{0,eps}` shape (`f(m,n) = n(1 + eps n)/(1 + eps(m+n))`).
///
/// Support off the anti-diagonal is forced to zero, the substitution
/// `psi(m) = phi(m) / (m (1 - eps m))` turns the compatibility constraints
/// into two-term recurrences, and the skew constraint at `n = 2` either
/// pins `psi(1)` or (exactly when `eps = 0`) contradicts the system.
/// Cross-checked against the elimination solver by the acceptance suite.
pub fn reduce_cocycle(algebra: &GradedLSA, w: &IndexWindow) -> Result<ReducedOutcome> {
    use crate::families::FamilyParams;
    use crate::witt::StructureFunction;

    let eps = match algebra.structure() {
        StructureFunction::ClosedForm(FamilyParams::VAlphaEps { alpha, eps })
            if alpha.is_zero() =>
        {
            eps.clone()
        }
        StructureFunction::ClosedForm(FamilyParams::Novikov { alpha }) if alpha.is_zero() => {
            Scalar::zero(algebra.mode())
        }
        _ => {
            return Err(Error::Precondition(
                "the reduction applies to V_{0,eps} closed forms only".into(),
            ))
        }
    };
    let mode = algebra.mode();
    let int = |k: i64| Scalar::integer(k, mode);
    let frac = |n: i64, d: i64| Scalar::from_pair(n, d, mode);
    let one = int(1);

    // psi(2), psi(-2) in terms of psi(1); the skew constraint at n = 2
    // reads (1 - 2 eps) psi(2) + (1 + 2 eps) psi(-2) = -1/4
    let one_plus = one.add(&eps)?;
    let c_pos = eps.add(&int(2))?.div(&one_plus)?;
    let c_neg = eps.sub(&int(2))?.div(&one_plus)?;
    let coefficient = one
        .sub(&eps.scale_int(2))?
        .mul(&c_pos)?
        .add(&one.add(&eps.scale_int(2))?.mul(&c_neg)?)?;
    let target = frac(-1, 4);
    if coefficient.is_zero() {
        return Ok(ReducedOutcome::Contradiction {
            constraint: "(1-2*eps)*psi(2) + (1+2*eps)*psi(-2) = -1/4".into(),
            lhs: Scalar::zero(mode),
            rhs: target,
        });
    }
    let psi1 = target.div(&coefficient)?;

    let half = w.half_width();
    let mut psi: BTreeMap<i64, Scalar> = BTreeMap::new();
    psi.insert(1, psi1.clone());
    // skew at n = 1: (1 - eps) psi(1) + (1 + eps) psi(-1) = 0
    let psi_neg1 = one.sub(&eps)?.mul(&psi1)?.neg().div(&one_plus)?;
    psi.insert(-1, psi_neg1.clone());
    psi.insert(2, c_pos.mul(&psi1)?);
    psi.insert(-2, c_neg.mul(&psi1)?);
    // (1-m) psi(m+1) = -m psi(m) + psi(1), stepped upward from m = 2
    for m in 2..half {
        let prev = psi[&m].clone();
        let value = prev
            .scale_int(m)
            .sub(&psi1)?
            .div(&int(m - 1))?;
        psi.insert(m + 1, value);
    }
    // (-1-m) psi(m-1) = -m psi(m) - psi(-1), stepped downward from m = -2
    for m in (-half + 1..=-2).rev() {
        let prev = psi[&m].clone();
        let value = prev
            .scale_int(m)
            .add(&psi_neg1)?
            .div(&int(m + 1))?;
        psi.insert(m - 1, value);
    }

    // every computed pair must satisfy the skew constraint
    // (1 - eps n) psi(n) + (1 + eps n) psi(-n) = (1 - n^2)/12
    for n in 1..=half {
        let lhs = one
            .sub(&eps.scale_int(n))?
            .mul(&psi[&n])?
            .add(&one.add(&eps.scale_int(n))?.mul(&psi[&-n])?)?;
        let rhs = frac(1 - n * n, 12);
        if lhs != rhs {
            return Ok(ReducedOutcome::Contradiction {
                constraint: format!(
                    "(1-{n}*eps)*psi({n}) + (1+{n}*eps)*psi(-{n}) = (1-{n}^2)/12"
                ),
                lhs,
                rhs,
            });
        }
    }

    // phi(m) = m (1 - eps m) psi(m), phi(0) = 0
    let mut phi = BTreeMap::new();
    phi.insert(0, Scalar::zero(mode));
    for s in w.indices() {
        if s == 0 {
            continue;
        }
        let value = one.sub(&eps.scale_int(s))?.mul(&psi[&s])?.scale_int(s);
        phi.insert(s, value);
    }
    Ok(ReducedOutcome::Unique { phi })
}

//! Graded algebra representation and defect evaluators.
//!
//! A graded structure on the basis `{x_n}` is determined by a structure
//! function `f` through `x_m x_n = f(m,n) x_{m+n}`. Compatibility with the
//! Witt bracket `[x_m, x_n] = (n-m) x_{m+n}` and left-symmetry of the
//! associator translate into two functional equations on `f`:
//!
//! ```text
//! f(m,n) - f(n,m) = n - m
//! (n-m) f(m+n,l) = f(n,l) f(m,n+l) - f(m,l) f(n,m+l)
//! ```
//!
//! All evaluators return the residual scalar of the identity they check, so
//! "holds" means "residual is exactly zero" in either field mode.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::families::{family_coefficient, FamilyParams};
use crate::scalar::{FieldMode, Scalar};
use crate::sweep;

/// Symmetric index window `{-N, ..., N}`.
///
/// Windows narrower than `N = 2` cannot express the probe identities used
/// by the classifier, so they are rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexWindow {
    half_width: i64,
}

impl IndexWindow {
    pub fn new(half_width: i64) -> Result<Self> {
        if half_width < 2 {
            return Err(Error::InvalidParameter(format!(
                "window half-width must be at least 2, got {half_width}"
            )));
        }
        Ok(IndexWindow { half_width })
    }

    pub fn half_width(&self) -> i64 {
        self.half_width
    }

    pub fn contains(&self, i: i64) -> bool {
        i.abs() <= self.half_width
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + Clone {
        -self.half_width..=self.half_width
    }

    pub fn len(&self) -> usize {
        (2 * self.half_width + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The structure-constant map `f(m,n)`: either a closed-form family or a
/// finite table, total on its window.
#[derive(Clone, Debug, PartialEq)]
pub enum StructureFunction {
    ClosedForm(FamilyParams),
    Table {
        entries: BTreeMap<(i64, i64), Scalar>,
        window: IndexWindow,
    },
}

/// A graded left-symmetric algebra candidate: a structure function together
/// with its field mode. Nothing is verified at construction; unverified
/// tables are legal inputs to the verifier and the classifier.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLSA {
    f: StructureFunction,
    mode: FieldMode,
}

impl GradedLSA {
    /// Wrap family parameters without validating them. Use
    /// [`crate::families::make_family`] for validated construction; raw
    /// parameters may hit closed-form poles, reported at evaluation time.
    pub fn closed_form(params: FamilyParams) -> Self {
        let mode = params.mode().unwrap_or(FieldMode::Gaussian);
        GradedLSA {
            f: StructureFunction::ClosedForm(params),
            mode,
        }
    }

    /// Build from a table, checking totality on the window and mode
    /// homogeneity of the entries.
    pub fn from_table(entries: BTreeMap<(i64, i64), Scalar>, window: IndexWindow) -> Result<Self> {
        let mut mode = None;
        for m in window.indices() {
            for n in window.indices() {
                let value = entries.get(&(m, n)).ok_or(Error::OutOfWindow {
                    m,
                    n,
                    half_width: window.half_width(),
                })?;
                match mode {
                    None => mode = Some(value.mode()),
                    Some(expected) if expected != value.mode() => {
                        return Err(Error::InvalidParameter(format!(
                            "table mixes field modes at entry ({m},{n})"
                        )));
                    }
                    _ => {}
                }
            }
        }
        for (m, n) in entries.keys() {
            if !window.contains(*m) || !window.contains(*n) {
                return Err(Error::OutOfWindow {
                    m: *m,
                    n: *n,
                    half_width: window.half_width(),
                });
            }
        }
        Ok(GradedLSA {
            f: StructureFunction::Table { entries, window },
            mode: mode.expect("window is nonempty"),
        })
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn structure(&self) -> &StructureFunction {
        &self.f
    }

    /// The table window, when the structure is a table.
    pub fn window(&self) -> Option<IndexWindow> {
        match &self.f {
            StructureFunction::ClosedForm(_) => None,
            StructureFunction::Table { window, .. } => Some(*window),
        }
    }

    pub fn table_entries(&self) -> Option<&BTreeMap<(i64, i64), Scalar>> {
        match &self.f {
            StructureFunction::ClosedForm(_) => None,
            StructureFunction::Table { entries, .. } => Some(entries),
        }
    }

    /// The coefficient `f(m,n)` of `x_m x_n = f(m,n) x_{m+n}`.
    pub fn product(&self, m: i64, n: i64) -> Result<Scalar> {
        match &self.f {
            StructureFunction::ClosedForm(params) => family_coefficient(params, m, n, self.mode),
            StructureFunction::Table { entries, window } => entries
                .get(&(m, n))
                .cloned()
                .ok_or(Error::OutOfWindow {
                    m,
                    n,
                    half_width: window.half_width(),
                }),
        }
    }

    /// Residual of the commutator condition: `f(m,n) - f(n,m) - (n-m)`.
    pub fn commutator_defect(&self, m: i64, n: i64) -> Result<Scalar> {
        commutator_defect_with(&|a, b| self.product(a, b), self.mode, m, n)
    }

    /// Coefficient of `x_{m+n+l}` in `(x_m x_n) x_l - x_m (x_n x_l)`.
    pub fn associator(&self, m: i64, n: i64, l: i64) -> Result<Scalar> {
        let f = |a, b| self.product(a, b);
        let t1 = f(m, n)?.mul(&f(m + n, l)?)?;
        let t2 = f(n, l)?.mul(&f(m, n + l)?)?;
        Ok(t1.sub(&t2)?)
    }

    /// Residual of the left-symmetry equation:
    /// `(n-m) f(m+n,l) - f(n,l) f(m,n+l) + f(m,l) f(n,m+l)`.
    ///
    /// Equals `associator(m,n,l) - associator(n,m,l)` whenever the
    /// commutator condition holds, and is antisymmetric in `(m, n)`
    /// identically.
    pub fn left_symmetry_defect(&self, m: i64, n: i64, l: i64) -> Result<Scalar> {
        left_symmetry_defect_with(&|a, b| self.product(a, b), self.mode, m, n, l)
    }

    /// Residual of the regular-representation bracket law
    /// `[L_m, L_n] = L_{[x_m, x_n]}` applied to `x_p`:
    /// `f(n,p) f(m,n+p) - f(m,p) f(n,m+p) - (n-m) f(m+n,p)`.
    ///
    /// Identically equal to `-left_symmetry_defect(m, n, p)`.
    pub fn regular_rep_defect(&self, m: i64, n: i64, p: i64) -> Result<Scalar> {
        Ok(self.left_symmetry_defect(m, n, p)?.neg())
    }

    /// Sweep the commutator and left-symmetry residuals over the window.
    ///
    /// Closed forms are evaluated at arbitrary integers, so every triple in
    /// the window cube is checked. Tables can only witness identities
    /// locally: a triple is checked only when every required index pair
    /// lies inside the table window, and the skipped count is reported.
    /// Evaluation errors are recorded per point, not fatal.
    pub fn verify_lsa(&self, w: &IndexWindow) -> VerificationReport {
        let cache = PairCache::build(self, w);
        // tables can only evaluate pairs inside their own window, so the
        // triple sweep keeps every required pair within reach
        let pair_limit = match &self.f {
            StructureFunction::ClosedForm(_) => None,
            StructureFunction::Table { window, .. } => {
                Some(window.half_width().min(w.half_width()))
            }
        };
        let mode = self.mode;

        let mut pair_defects = Vec::new();
        let mut errors = Vec::new();
        let mut pairs_checked = 0usize;
        for m in w.indices() {
            for n in w.indices() {
                pairs_checked += 1;
                match commutator_defect_with(&|a, b| cache.get(a, b), mode, m, n) {
                    Ok(d) if d.is_zero() => {}
                    Ok(d) => pair_defects.push(PairDefect { m, n, defect: d }),
                    Err(e) => errors.push(SweepError {
                        indices: vec![m, n],
                        error: e,
                    }),
                }
            }
        }

        let ms: Vec<i64> = w.indices().collect();
        let chunks = sweep::par_flat_map(ms, |m| {
            let mut out = Vec::new();
            let mut chunk = TripleChunk::default();
            for n in w.indices() {
                for l in w.indices() {
                    if let Some(limit) = pair_limit {
                        if (m + n).abs() > limit || (n + l).abs() > limit || (m + l).abs() > limit
                        {
                            chunk.skipped += 1;
                            continue;
                        }
                    }
                    chunk.checked += 1;
                    match left_symmetry_defect_with(&|a, b| cache.get(a, b), mode, m, n, l) {
                        Ok(d) if d.is_zero() => {}
                        Ok(d) => chunk.defects.push(TripleDefect { m, n, l, defect: d }),
                        Err(e) => chunk.errors.push(SweepError {
                            indices: vec![m, n, l],
                            error: e,
                        }),
                    }
                }
            }
            out.push(chunk);
            out
        });

        let mut triple_defects = Vec::new();
        let mut triples_checked = 0usize;
        let mut triples_skipped = 0usize;
        for chunk in chunks {
            triple_defects.extend(chunk.defects);
            errors.extend(chunk.errors);
            triples_checked += chunk.checked;
            triples_skipped += chunk.skipped;
        }

        VerificationReport {
            window: *w,
            pair_defects,
            triple_defects,
            errors,
            pairs_checked,
            triples_checked,
            triples_skipped,
        }
    }

    /// The weights `f(0,n)` of the basis vectors under the action of `x_0`,
    /// together with residuals of the derived laws `f(0,n) = f(0,0) + n`
    /// and `f(m,0) = f(0,0)`.
    pub fn weights(&self, w: &IndexWindow) -> Result<WeightReport> {
        let f00 = self.product(0, 0)?;
        let mut weights = Vec::new();
        let mut row_violations = Vec::new();
        let mut column_violations = Vec::new();
        for n in w.indices() {
            let f0n = self.product(0, n)?;
            let defect = f0n.sub(&f00)?.sub(&Scalar::integer(n, self.mode))?;
            if !defect.is_zero() {
                row_violations.push((n, defect));
            }
            weights.push((n, f0n));
        }
        for m in w.indices() {
            let fm0 = self.product(m, 0)?;
            let defect = fm0.sub(&f00)?;
            if !defect.is_zero() {
                column_violations.push((m, defect));
            }
        }
        Ok(WeightReport {
            weights,
            row_violations,
            column_violations,
        })
    }

    /// Weak connectivity of the basis indices under the action graph with
    /// an edge `n -> m+n` whenever `f(m,n)` is nonzero and both endpoints
    /// lie in the window. Finite-window evidence for indecomposability
    /// only; never a proof.
    pub fn connectivity_check(&self, w: &IndexWindow) -> Result<ConnectivityReport> {
        let half = w.half_width();
        let size = w.len();
        let idx = |i: i64| (i + half) as usize;
        let mut parent: Vec<usize> = (0..size).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for m in w.indices() {
            for n in w.indices() {
                if !w.contains(m + n) {
                    continue;
                }
                if self.product(m, n)?.is_zero() {
                    continue;
                }
                let (a, b) = (find(&mut parent, idx(n)), find(&mut parent, idx(m + n)));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for i in w.indices() {
            let root = find(&mut parent, idx(i));
            groups.entry(root).or_default().push(i);
        }
        let mut components: Vec<Vec<i64>> = groups.into_values().collect();
        components.sort_by_key(|c| c[0]);
        Ok(ConnectivityReport { components })
    }

    /// Materialize the structure function as a table on the given window.
    pub fn to_table(&self, w: &IndexWindow) -> Result<GradedLSA> {
        let mut entries = BTreeMap::new();
        for m in w.indices() {
            for n in w.indices() {
                entries.insert((m, n), self.product(m, n)?);
            }
        }
        GradedLSA::from_table(entries, *w)
    }
}

pub(crate) fn commutator_defect_with(
    f: &dyn Fn(i64, i64) -> Result<Scalar>,
    mode: FieldMode,
    m: i64,
    n: i64,
) -> Result<Scalar> {
    let fmn = f(m, n)?;
    let fnm = f(n, m)?;
    Ok(fmn.sub(&fnm)?.sub(&Scalar::integer(n - m, mode))?)
}

pub(crate) fn left_symmetry_defect_with(
    f: &dyn Fn(i64, i64) -> Result<Scalar>,
    _mode: FieldMode,
    m: i64,
    n: i64,
    l: i64,
) -> Result<Scalar> {
    let t1 = f(m + n, l)?.scale_int(n - m);
    let t2 = f(n, l)?.mul(&f(m, n + l)?)?;
    let t3 = f(m, l)?.mul(&f(n, m + l)?)?;
    Ok(t1.sub(&t2)?.add(&t3)?)
}

/// Precomputed `f` values for every pair a window sweep can touch.
pub(crate) struct PairCache {
    values: HashMap<(i64, i64), Result<Scalar>>,
}

impl PairCache {
    pub(crate) fn build(algebra: &GradedLSA, w: &IndexWindow) -> Self {
        // triples reach sums of two window indices in either slot
        let reach = 2 * w.half_width();
        let mut values = HashMap::new();
        for m in -reach..=reach {
            for n in -reach..=reach {
                values.insert((m, n), algebra.product(m, n));
            }
        }
        PairCache { values }
    }

    pub(crate) fn get(&self, m: i64, n: i64) -> Result<Scalar> {
        match self.values.get(&(m, n)) {
            Some(Ok(s)) => Ok(s.clone()),
            Some(Err(e)) => Err(e.clone()),
            None => Err(Error::OutOfWindow {
                m,
                n,
                half_width: 0,
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairDefect {
    pub m: i64,
    pub n: i64,
    pub defect: Scalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleDefect {
    pub m: i64,
    pub n: i64,
    pub l: i64,
    pub defect: Scalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepError {
    pub indices: Vec<i64>,
    pub error: Error,
}

#[derive(Default)]
struct TripleChunk {
    defects: Vec<TripleDefect>,
    errors: Vec<SweepError>,
    checked: usize,
    skipped: usize,
}

/// Outcome of a commutator/left-symmetry sweep. Clean means every checked
/// residual is exactly zero and no evaluation failed.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub window: IndexWindow,
    pub pair_defects: Vec<PairDefect>,
    pub triple_defects: Vec<TripleDefect>,
    pub errors: Vec<SweepError>,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub triples_skipped: usize,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.pair_defects.is_empty() && self.triple_defects.is_empty() && self.errors.is_empty()
    }

    pub fn defect_count(&self) -> usize {
        self.pair_defects.len() + self.triple_defects.len()
    }
}

#[derive(Clone, Debug)]
pub struct WeightReport {
    /// Pairs `(n, f(0,n))`.
    pub weights: Vec<(i64, Scalar)>,
    /// Residuals of `f(0,n) - f(0,0) - n`, where nonzero.
    pub row_violations: Vec<(i64, Scalar)>,
    /// Residuals of `f(m,0) - f(0,0)`, where nonzero.
    pub column_violations: Vec<(i64, Scalar)>,
}

impl WeightReport {
    pub fn is_clean(&self) -> bool {
        self.row_violations.is_empty() && self.column_violations.is_empty()
    }
}

/// Weakly connected components of the basis index set under the action
/// graph. Finite-window evidence, not a proof of indecomposability: the
/// infinite-index argument cannot be captured by any finite sweep.
#[derive(Clone, Debug)]
pub struct ConnectivityReport {
    pub components: Vec<Vec<i64>>,
}

impl ConnectivityReport {
    pub const EVIDENCE_NOTE: &'static str =
        "finite-window connectivity is evidence only, not a proof of indecomposability";

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn note(&self) -> &'static str {
        Self::EVIDENCE_NOTE
    }
}

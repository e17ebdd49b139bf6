//! Bivariate polynomials over Q in the formal parameters `alpha` and `eps`.
//!
//! Terms are kept in a map from exponent pairs to nonzero rational
//! coefficients; the zero polynomial is the empty map. The normalization
//! used for gcds and fraction-field denominators is "integer-primitive with
//! positive leading coefficient", where the leading term is taken in graded
//! lexicographic order with `alpha > eps`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use super::gaussian::{GaussianRational, Rational};

/// Exponent pair `(alpha degree, eps degree)`.
pub type Monomial = (u32, u32);

/// Graded lexicographic comparison with `alpha > eps`.
fn grlex(a: Monomial, b: Monomial) -> Ordering {
    let ta = a.0 + a.1;
    let tb = b.0 + b.1;
    ta.cmp(&tb).then(a.0.cmp(&b.0))
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BivariatePolynomial { terms }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// The generator `alpha`.
    pub fn alpha() -> Self {
        Self::monomial((1, 0), Rational::one())
    }

    /// The generator `eps`.
    pub fn eps() -> Self {
        Self::monomial((0, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BivariatePolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    /// Constant value when the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Leading monomial under graded lex with `alpha > eps`.
    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().copied().max_by(|a, b| grlex(*a, *b))
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_monomial().and_then(|m| self.terms.get(&m))
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term((ma.0 + mb.0, ma.1 + mb.1), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact substitution of Gaussian-rational values for the generators.
    pub fn eval(&self, alpha: &GaussianRational, eps: &GaussianRational) -> GaussianRational {
        let max_a = self.terms.keys().map(|m| m.0).max().unwrap_or(0) as usize;
        let max_e = self.terms.keys().map(|m| m.1).max().unwrap_or(0) as usize;
        let mut pow_a = Vec::with_capacity(max_a + 1);
        let mut pow_e = Vec::with_capacity(max_e + 1);
        pow_a.push(GaussianRational::one());
        for i in 0..max_a {
            let next = &pow_a[i] * alpha;
            pow_a.push(next);
        }
        pow_e.push(GaussianRational::one());
        for i in 0..max_e {
            let next = &pow_e[i] * eps;
            pow_e.push(next);
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let term = &pow_a[m.0 as usize] * &pow_e[m.1 as usize];
            acc = &acc + &(&term * &GaussianRational::from_rational(c.clone()));
        }
        acc
    }

    /// Rational content: the positive rational `c` such that `self / c` has
    /// coprime integer coefficients. Zero for the zero polynomial.
    pub fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = (c * Rational::from_integer(denom_lcm.clone())).to_integer();
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        Rational::new(numer_gcd, denom_lcm)
    }

    /// Canonical associate: coprime integer coefficients, positive leading
    /// coefficient under graded lex. Returns zero for zero.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.rational_content();
        if self.leading_coefficient().unwrap().is_negative() {
            content = -content;
        }
        self.scale(&content.recip())
    }

    // --- the Q[eps][alpha] view, used by the gcd ---

    /// Degree in `alpha`; `None` for the zero polynomial.
    pub fn alpha_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    /// Degree in `eps`; `None` for the zero polynomial.
    pub fn eps_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.1).max()
    }

    /// Coefficient of `alpha^k` as a polynomial in `eps` alone.
    fn alpha_coefficient(&self, k: u32) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0 == k)
                .map(|(m, c)| ((0, m.1), c.clone()))
                .collect(),
        }
    }

    fn mul_alpha_power(&self, k: u32) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ((m.0 + k, m.1), c.clone()))
                .collect(),
        }
    }

    /// Content with respect to `alpha`: a gcd in Q[eps] of the alpha
    /// coefficients, integer-normalized. The quotient `self / content` is
    /// the primitive part.
    fn alpha_content(&self) -> BivariatePolynomial {
        let mut content = BivariatePolynomial::zero();
        let deg = match self.alpha_degree() {
            Some(d) => d,
            None => return content,
        };
        for k in 0..=deg {
            let c = self.alpha_coefficient(k);
            if !c.is_zero() {
                content = eps_gcd(&content, &c);
                if content.as_constant().is_some() {
                    // gcd can only shrink; a constant is already minimal
                    return BivariatePolynomial::one();
                }
            }
        }
        content
    }

    fn alpha_primitive_part(&self) -> BivariatePolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let content = self.alpha_content();
        div_exact(self, &content).expect("alpha content divides the polynomial")
    }
}

/// Univariate gcd in Q[eps] (both arguments must be alpha-free), normalized
/// to coprime integer coefficients and positive leading coefficient.
/// Every remainder is content-stripped; plain Euclid over Q explodes the
/// coefficient bit sizes already at moderate degrees.
fn eps_gcd(a: &BivariatePolynomial, b: &BivariatePolynomial) -> BivariatePolynomial {
    debug_assert!(a.is_zero() || a.alpha_degree() == Some(0) || a.alpha_degree().is_none());
    let mut a = a.normalized();
    let mut b = b.normalized();
    while !b.is_zero() {
        let r = eps_rem(&a, &b).normalized();
        a = b;
        b = r;
    }
    a.normalized()
}

/// Remainder of univariate division in Q[eps].
fn eps_rem(a: &BivariatePolynomial, b: &BivariatePolynomial) -> BivariatePolynomial {
    let db = b.eps_degree().expect("division by zero polynomial");
    let lb = b.terms.get(&(0, db)).expect("leading term").clone();
    let mut r = a.clone();
    while let Some(dr) = r.eps_degree() {
        if dr < db {
            break;
        }
        let lr = match r.terms.get(&(0, dr)) {
            Some(c) => c.clone(),
            None => unreachable!("eps_degree points at a present term"),
        };
        let factor = BivariatePolynomial::monomial((0, dr - db), &lr / &lb);
        r = r.sub(&factor.mul(b));
    }
    r
}

/// Pseudo-remainder of `a` by `b` in Q[eps][alpha]. The result is `a`
/// scaled by a power of `lc(b)` reduced below `deg_alpha(b)`; callers take
/// primitive parts afterwards so the scaling is irrelevant.
fn alpha_prem(a: &BivariatePolynomial, b: &BivariatePolynomial) -> BivariatePolynomial {
    let db = b.alpha_degree().expect("pseudo-division by zero");
    let lb = b.alpha_coefficient(db);
    let mut r = a.clone();
    while let Some(dr) = r.alpha_degree() {
        if dr < db || r.is_zero() {
            break;
        }
        let lr = r.alpha_coefficient(dr);
        if lr.is_zero() {
            break;
        }
        // r <- lc(b)*r - lc(r)*alpha^(dr-db)*b kills the leading alpha
        // term; stripping rational content keeps the integers small, and
        // callers take primitive parts anyway so the scaling is free
        r = r.mul(&lb).sub(&lr.mul(&b.mul_alpha_power(dr - db))).normalized();
    }
    r
}

/// Exact division in Q[alpha, eps]; `None` when `q` does not divide `p`.
pub fn div_exact(p: &BivariatePolynomial, q: &BivariatePolynomial) -> Option<BivariatePolynomial> {
    if q.is_zero() {
        return None;
    }
    if p.is_zero() {
        return Some(BivariatePolynomial::zero());
    }
    let dq = q.alpha_degree().unwrap();
    let lq = q.alpha_coefficient(dq);
    let mut rem = p.clone();
    let mut quot = BivariatePolynomial::zero();
    while let Some(dr) = rem.alpha_degree() {
        if rem.is_zero() {
            break;
        }
        if dr < dq {
            return None;
        }
        let lr = rem.alpha_coefficient(dr);
        let c = eps_div_exact(&lr, &lq)?;
        let t = c.mul_alpha_power(dr - dq);
        quot = quot.add(&t);
        rem = rem.sub(&t.mul(q));
    }
    if rem.is_zero() {
        Some(quot)
    } else {
        None
    }
}

/// Exact univariate division in Q[eps]; `None` when not exact.
fn eps_div_exact(p: &BivariatePolynomial, q: &BivariatePolynomial) -> Option<BivariatePolynomial> {
    if q.is_zero() {
        return None;
    }
    if p.is_zero() {
        return Some(BivariatePolynomial::zero());
    }
    let dq = q.eps_degree().unwrap();
    let lq = q.terms.get(&(0, dq)).unwrap().clone();
    let mut rem = p.clone();
    let mut quot = BivariatePolynomial::zero();
    while let Some(dr) = rem.eps_degree() {
        if rem.is_zero() {
            break;
        }
        if dr < dq {
            return None;
        }
        let lr = rem.terms.get(&(0, dr)).cloned().unwrap_or_else(Rational::zero);
        let t = BivariatePolynomial::monomial((0, dr - dq), &lr / &lq);
        quot = quot.add(&t);
        rem = rem.sub(&t.mul(q));
    }
    if rem.is_zero() {
        Some(quot)
    } else {
        None
    }
}

/// Greatest common divisor in Q[alpha, eps], returned integer-primitive with
/// positive leading coefficient. `gcd(p, 0)` is the normalized `p`.
///
/// Content/primitive-part recursion on `alpha` with Euclidean gcd in `eps`;
/// adequate for the small degrees arising from index-window sweeps.
pub fn poly_gcd(p: &BivariatePolynomial, q: &BivariatePolynomial) -> BivariatePolynomial {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    let content_gcd = eps_gcd(&p.alpha_content(), &q.alpha_content());
    let mut a = p.alpha_primitive_part();
    let mut b = q.alpha_primitive_part();
    if a.alpha_degree() < b.alpha_degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = alpha_prem(&a, &b);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            r.alpha_primitive_part()
        };
    }
    content_gcd.mul(&a).normalized()
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(Monomial, &Rational)> =
            self.terms.iter().map(|(m, c)| (*m, c)).collect();
        terms.sort_by(|a, b| grlex(b.0, a.0));
        for (idx, (m, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || *m == (0, 0) {
                factors.push(mag.to_string());
            }
            match m.0 {
                0 => {}
                1 => factors.push("alpha".into()),
                k => factors.push(format!("alpha^{k}")),
            }
            match m.1 {
                0 => {}
                1 => factors.push("eps".into()),
                k => factors.push(format!("eps^{k}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

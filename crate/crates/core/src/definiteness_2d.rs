//! Closed-form positivity tests for univariate quartics and binary quartic
//! forms.
//!
//! The quartic criterion is implemented once, on [`QuarticPoly`], in terms
//! of sign tests of expressions `X + Y·√(ae)`. Exact scalars decide those
//! by squaring; floating point evaluates them directly inside a relative
//! band. The tensor and coupling entry points are substitutions into it.

use crate::error::{Error, Result};
use crate::oracle;
use crate::scalar::{Scalar, Sign, Surd, Tolerance, Tracked};
use crate::tensor::{Couplings2, QuarticPoly, Sym4Tensor2};
use crate::verdict::{Certificate, Class};

/// Sign decisions with boundary bookkeeping.
pub(crate) struct Band {
    pub tol: Tolerance,
    pub boundary: bool,
}

impl Band {
    pub fn new(tol: Tolerance) -> Self {
        Band {
            tol,
            boundary: false,
        }
    }

    fn note<S: Scalar>(&mut self, s: Sign) -> Sign {
        if !S::EXACT && s.is_zero() {
            self.boundary = true;
        }
        s
    }

    pub fn sign<S: Scalar>(&mut self, x: &Tracked<S>) -> Sign {
        let s = x.sign(self.tol);
        self.note::<S>(s)
    }

    pub fn surd<S: Scalar>(&mut self, a: Surd<S>, b: Surd<S>) -> Sign {
        let s = S::surd_sign(&a, &b, self.tol);
        self.note::<S>(s)
    }
}

fn exact_sign<S: Scalar>(x: &S) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// `at² + bt + c > 0` (strict) or `≥ 0` for every `t ≥ 0`, given `a > 0`.
pub fn quadratic_on_halfline<S: Scalar>(a: &S, b: &S, c: &S, strict: bool) -> Result<bool> {
    quadratic_on_halfline_with(a, b, c, strict, Tolerance::default())
}

pub fn quadratic_on_halfline_with<S: Scalar>(
    a: &S,
    b: &S,
    c: &S,
    strict: bool,
    tol: Tolerance,
) -> Result<bool> {
    if !a.is_positive() {
        return Err(Error::NonPositiveLeadingCoefficient);
    }
    let accept = |s: Sign| {
        if strict {
            s.is_positive()
        } else {
            s.is_nonnegative()
        }
    };
    if !b.is_negative() {
        Ok(accept(exact_sign(c)))
    } else {
        let (a, b, c) = (
            Tracked::new(a.clone()),
            Tracked::new(b.clone()),
            Tracked::new(c.clone()),
        );
        let det = Tracked::int(4) * &a * &c - b.square();
        Ok(accept(det.sign(tol)))
    }
}

fn tracked_discriminant<S: Scalar>(p: &QuarticPoly<S>) -> Tracked<S> {
    let [a, b, c, d, e] = p.coeffs().map(Tracked::new);
    let k = Tracked::<S>::int;
    let lo = k(12) * &a * &e - k(3) * &b * &d + c.square();
    let hi = k(72) * &a * &c * &e + k(9) * &b * &c * &d
        - k(2) * c.cube()
        - k(27) * &a * d.square()
        - k(27) * b.square() * &e;
    k(4) * lo.cube() - hi.square()
}

/// `Δ = 4(12ae − 3bd + c²)³ − (72ace + 9bcd − 2c³ − 27ad² − 27b²e)²`.
pub fn quartic_discriminant<S: Scalar>(p: &QuarticPoly<S>) -> S {
    tracked_discriminant(p).value
}

/// The classical invariants of a binary quartic in tensor-entry form.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminantReport<S> {
    pub delta: S,
    pub i: S,
    pub j: S,
}

pub fn invariant_i<S: Scalar>(t: &Sym4Tensor2<S>) -> S {
    let [v1, v2, v3, v4, v5] = t.entries();
    v1 * v5 - S::int(4) * v2 * v4 + S::int(3) * v3.clone() * v3
}

pub fn invariant_j<S: Scalar>(t: &Sym4Tensor2<S>) -> S {
    let [v1, v2, v3, v4, v5] = t.entries();
    v1.clone() * v3.clone() * v5.clone() + S::int(2) * v2.clone() * v3.clone() * v4.clone()
        - v3.clone() * v3.clone() * v3
        - v1 * v4.clone() * v4
        - v2.clone() * v2 * v5
}

pub fn discriminant_report<S: Scalar>(t: &Sym4Tensor2<S>) -> DiscriminantReport<S> {
    DiscriminantReport {
        delta: quartic_discriminant(&t.restrict_to_line()),
        i: invariant_i(t),
        j: invariant_j(t),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PdCase {
    /// Δ = 0 with a repeated complex pair.
    One,
    TwoI,
    TwoII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsdCase {
    I,
    II,
}

/// The quartic criterion evaluated on `P` with `a > 0`, `e > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticCriterion<S> {
    pub discriminant: S,
    pub positive: Option<PdCase>,
    pub nonnegative: Option<PsdCase>,
    pub boundary: bool,
}

fn criterion_in<S: Scalar>(p: &QuarticPoly<S>, band: &mut Band) -> QuarticCriterion<S> {
    let [a, b, c, d, e] = p.coeffs().map(Tracked::new);
    let k = Tracked::<S>::int;
    // s = √(ae) throughout.
    let ae = p.a().clone() * p.e().clone();
    let s_term = |coeff: Tracked<S>| Surd::new(coeff, ae.clone());

    let delta = tracked_discriminant(p);
    let sd = band.sign(&delta);

    // c + 2s ≥ 0 and 6s − c ≥ 0
    let lower = band.surd(Surd::rational(c.clone()), s_term(k(2)));
    let upper = band.surd(Surd::rational(-&c), s_term(k(6)));
    let range_i = lower.is_nonnegative() && upper.is_nonnegative();

    // (b√e − d√a)² ≤ 16(ace + 2ae·s), valid once c ≥ −2s.
    let x = b.square() * &e + d.square() * &a - k(16) * &a * &c * &e;
    let diff_ok = lower.is_nonnegative()
        && band
            .surd(
                Surd::rational(x.clone()),
                s_term(-(k(2) * &b * &d) - k(32) * &a * &e),
            )
            .is_nonpositive();
    // c > 6s and (b√e + d√a)² ≤ 16(ace − 2ae·s)
    let range_ii = upper.is_negative()
        && band
            .surd(Surd::rational(x), s_term(k(2) * &b * &d + k(32) * &a * &e))
            .is_nonpositive();

    let shared = diff_ok && (range_i || range_ii);
    let which = if range_i { PsdCase::I } else { PsdCase::II };
    let nonnegative = (sd.is_nonnegative() && shared).then_some(which);

    let positive = if sd.is_positive() {
        shared.then_some(match which {
            PsdCase::I => PdCase::TwoI,
            PsdCase::II => PdCase::TwoII,
        })
    } else if sd.is_zero() {
        // b√e = d√a, b² + 8a·s = 4ac, 4ac < 24a·s
        let balanced = band
            .surd(
                Surd::new(b.clone(), p.e().clone()),
                Surd::new(-&d, p.a().clone()),
            )
            .is_zero();
        let on_curve = balanced
            && band
                .surd(
                    Surd::rational(b.square() - k(4) * &a * &c),
                    s_term(k(8) * &a),
                )
                .is_zero();
        (on_curve && upper.is_positive()).then_some(PdCase::One)
    } else {
        None
    };

    QuarticCriterion {
        discriminant: delta.value,
        positive,
        nonnegative,
        boundary: band.boundary,
    }
}

/// Evaluates the quartic criterion; requires `a > 0` and `e > 0`.
pub fn quartic_criterion<S: Scalar>(
    p: &QuarticPoly<S>,
    tol: Tolerance,
) -> Result<QuarticCriterion<S>> {
    if !p.a().is_positive() || !p.e().is_positive() {
        return Err(Error::NegativeLeadingOrTrailing);
    }
    Ok(criterion_in(p, &mut Band::new(tol)))
}

fn check_ends<S: Scalar>(p: &QuarticPoly<S>) -> Result<()> {
    if p.a().is_negative() || p.e().is_negative() {
        Err(Error::NegativeLeadingOrTrailing)
    } else {
        Ok(())
    }
}

/// `P(t) ≥ 0` for every real `t`. Zero leading or trailing coefficients
/// are reduced to a lower-degree check.
pub fn quartic_nonneg<S: Scalar>(p: &QuarticPoly<S>) -> Result<bool> {
    quartic_nonneg_with(p, Tolerance::default())
}

pub fn quartic_nonneg_with<S: Scalar>(p: &QuarticPoly<S>, tol: Tolerance) -> Result<bool> {
    check_ends(p)?;
    let mut band = Band::new(tol);
    let answer = match (p.a().is_zero(), p.e().is_zero()) {
        (false, false) => criterion_in(p, &mut band).nonnegative.is_some(),
        (_, true) => trailing_zero_nonneg(p, &mut band),
        // t⁴P(1/t) is nonnegative exactly when P is, given a ≥ 0.
        (true, false) => trailing_zero_nonneg(&p.reversed(), &mut band),
    };
    if band.boundary {
        // Inside the band a float decision is unreliable; the inputs are
        // exact dyadic rationals, so decide those exactly instead.
        return quartic_nonneg_with(&p.to_exact(), tol);
    }
    Ok(answer)
}

/// `e = 0`: `P = t(at³ + bt² + ct + d)` needs `d = 0` and then
/// `at² + bt + c ≥ 0` on ℝ.
fn trailing_zero_nonneg<S: Scalar>(p: &QuarticPoly<S>, band: &mut Band) -> bool {
    if !p.d().is_zero() {
        return false;
    }
    quadratic_nonneg_everywhere(p.a(), p.b(), p.c(), band)
}

fn quadratic_nonneg_everywhere<S: Scalar>(a: &S, b: &S, c: &S, band: &mut Band) -> bool {
    if a.is_zero() {
        return b.is_zero() && !c.is_negative();
    }
    if a.is_negative() || c.is_negative() {
        return false;
    }
    let (a, b, c) = (
        Tracked::new(a.clone()),
        Tracked::new(b.clone()),
        Tracked::new(c.clone()),
    );
    band.sign(&(b.square() - Tracked::int(4) * &a * &c))
        .is_nonpositive()
}

/// `P(t) > 0` for every real `t`.
pub fn quartic_positive<S: Scalar>(p: &QuarticPoly<S>) -> Result<bool> {
    quartic_positive_with(p, Tolerance::default())
}

pub fn quartic_positive_with<S: Scalar>(p: &QuarticPoly<S>, tol: Tolerance) -> Result<bool> {
    check_ends(p)?;
    let mut band = Band::new(tol);
    let answer = match (p.a().is_zero(), p.e().is_zero()) {
        (false, false) => criterion_in(p, &mut band).positive.is_some(),
        (_, true) => false,
        (true, false) => {
            // Degree at most three: positive only as a quadratic c t² + d t + e.
            if !p.b().is_zero() {
                false
            } else if p.c().is_zero() {
                p.d().is_zero()
            } else if p.c().is_negative() {
                false
            } else {
                let (c, d, e) = (
                    Tracked::new(p.c().clone()),
                    Tracked::new(p.d().clone()),
                    Tracked::new(p.e().clone()),
                );
                band.sign(&(d.square() - Tracked::int(4) * &c * &e))
                    .is_negative()
            }
        }
    };
    if band.boundary {
        return quartic_positive_with(&p.to_exact(), tol);
    }
    Ok(answer)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Phi1,
    Phi2,
}

/// The branch that decided a binary-form verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch2 {
    Positive(PdCase),
    Nonnegative(PsdCase),
    /// Corner entries positive but the quartic criterion fails.
    NotNonnegative,
    /// The form is negative on this coordinate axis.
    NegativeAxis(Axis),
    ZeroForm,
    /// Only the mixed term `c φ1²φ2²` with `c > 0` survives.
    CrossSquare,
    /// PSD-only: the form vanishes along this coordinate axis.
    NullAxis(Axis),
    DegenerateIndefinite,
}

/// Whether labels cite the tensor-entry criterion or the coupling form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelStyle {
    Tensor,
    Couplings,
}

impl Branch2 {
    pub fn label(self, style: LabelStyle) -> &'static str {
        use Branch2::*;
        use LabelStyle::*;
        match (self, style) {
            (Positive(PdCase::One), Tensor) => "Lemma2.3-PD-case(1)",
            (Positive(PdCase::TwoI), Tensor) => "Lemma2.3-PD-case(2)(i)",
            (Positive(PdCase::TwoII), Tensor) => "Lemma2.3-PD-case(2)(ii)",
            (Nonnegative(PsdCase::I), Tensor) => "Lemma2.3-PSD-(i)",
            (Nonnegative(PsdCase::II), Tensor) => "Lemma2.3-PSD-(ii)",
            (NotNonnegative, Tensor) => "Lemma2.3-not-PSD",
            (Positive(PdCase::One), Couplings) => "Thm3.3-(1)",
            (Positive(PdCase::TwoI), Couplings) => "Thm3.3-(2)(i)",
            (Positive(PdCase::TwoII), Couplings) => "Thm3.3-(2)(ii)",
            (Nonnegative(PsdCase::I), Couplings) => "Thm3.3-PSD-(i)",
            (Nonnegative(PsdCase::II), Couplings) => "Thm3.3-PSD-(ii)",
            (NotNonnegative, Couplings) => "Thm3.3-not-PSD",
            (NegativeAxis(Axis::Phi1), _) => "axis-negative-phi1",
            (NegativeAxis(Axis::Phi2), _) => "axis-negative-phi2",
            (ZeroForm, _) => "degenerate-zero-form",
            (CrossSquare, _) => "degenerate-cross-square",
            (NullAxis(Axis::Phi1), _) => "degenerate-null-phi1-axis",
            (NullAxis(Axis::Phi2), _) => "degenerate-null-phi2-axis",
            (DegenerateIndefinite, _) => "degenerate-indefinite",
        }
    }

    pub fn class(self) -> Class {
        use Branch2::*;
        match self {
            Positive(_) => Class::PositiveDefinite,
            Nonnegative(_) | ZeroForm | CrossSquare | NullAxis(_) => {
                Class::PositiveSemidefiniteOnly
            }
            NotNonnegative | NegativeAxis(_) | DegenerateIndefinite => Class::Indefinite,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict2<S> {
    pub class: Class,
    pub branch: Branch2,
    pub certificate: Certificate,
    /// A direction where the form is `≤ 0`, max-norm 1; present iff indefinite.
    pub witness: Option<[S; 2]>,
}

/// Decides the binary form whose restriction to `(t, 1)` is `p`.
pub(crate) fn decide_line_form<S: Scalar>(p: &QuarticPoly<S>, band: &mut Band) -> Branch2 {
    let (sa, se) = (exact_sign(p.a()), exact_sign(p.e()));
    match (sa, se) {
        (Sign::Negative, _) => Branch2::NegativeAxis(Axis::Phi1),
        (_, Sign::Negative) => Branch2::NegativeAxis(Axis::Phi2),
        (Sign::Positive, Sign::Positive) => {
            let crit = criterion_in(p, band);
            match (crit.positive, crit.nonnegative) {
                (Some(case), _) => Branch2::Positive(case),
                (None, Some(case)) => Branch2::Nonnegative(case),
                (None, None) => Branch2::NotNonnegative,
            }
        }
        (Sign::Positive, Sign::Zero) => {
            if trailing_zero_nonneg(p, band) {
                Branch2::NullAxis(Axis::Phi2)
            } else {
                Branch2::DegenerateIndefinite
            }
        }
        (Sign::Zero, Sign::Positive) => {
            if trailing_zero_nonneg(&p.reversed(), band) {
                Branch2::NullAxis(Axis::Phi1)
            } else {
                Branch2::DegenerateIndefinite
            }
        }
        (Sign::Zero, Sign::Zero) => {
            // b φ1³φ2 + c φ1²φ2² + d φ1φ2³
            if !p.b().is_zero() || !p.d().is_zero() || p.c().is_negative() {
                Branch2::DegenerateIndefinite
            } else if p.c().is_zero() {
                Branch2::ZeroForm
            } else {
                Branch2::CrossSquare
            }
        }
    }
}

pub(crate) fn max_norm_direction<S: Scalar>(x: &[S]) -> Vec<S> {
    let m = crate::scalar::max_abs(x.iter());
    if m.is_zero() {
        return x.to_vec();
    }
    x.iter().map(|v| v.clone() / m.clone()).collect()
}

pub(crate) fn witness_for<S: Scalar>(p: &QuarticPoly<S>, branch: Branch2) -> Option<[S; 2]> {
    if branch.class() != Class::Indefinite {
        return None;
    }
    Some(match branch {
        Branch2::NegativeAxis(Axis::Phi1) => [S::one(), S::zero()],
        Branch2::NegativeAxis(Axis::Phi2) => [S::zero(), S::one()],
        _ => {
            let m = oracle::min_binary_form_on_circle(p);
            let v = max_norm_direction(&m.argmin);
            [v[0].clone(), v[1].clone()]
        }
    })
}

fn classify_line_form<S: Scalar>(
    p: &QuarticPoly<S>,
    style: LabelStyle,
    tol: Tolerance,
) -> Verdict2<S> {
    let mut band = Band::new(tol);
    let branch = decide_line_form(p, &mut band);
    if band.boundary {
        // Re-decide the dyadic inputs exactly; the flag stays set.
        let exact = classify_line_form(&p.to_exact(), style, tol);
        return Verdict2 {
            class: exact.class,
            branch: exact.branch,
            certificate: Certificate::new(exact.certificate.label, true),
            witness: exact.witness.map(|w| w.map(|x| S::from_rational(&x))),
        };
    }
    Verdict2 {
        class: branch.class(),
        branch,
        certificate: Certificate::new(branch.label(style), band.boundary),
        witness: witness_for(p, branch),
    }
}

pub fn classify_tensor2<S: Scalar>(t: &Sym4Tensor2<S>) -> Verdict2<S> {
    classify_tensor2_with(t, Tolerance::default())
}

pub fn classify_tensor2_with<S: Scalar>(t: &Sym4Tensor2<S>, tol: Tolerance) -> Verdict2<S> {
    classify_line_form(&t.restrict_to_line(), LabelStyle::Tensor, tol)
}

pub fn classify_couplings2<S: Scalar>(c: &Couplings2<S>) -> Verdict2<S> {
    classify_couplings2_with(c, Tolerance::default())
}

pub fn classify_couplings2_with<S: Scalar>(c: &Couplings2<S>, tol: Tolerance) -> Verdict2<S> {
    classify_line_form(&c.line_polynomial(), LabelStyle::Couplings, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn p(c: [f64; 5]) -> QuarticPoly<f64> {
        QuarticPoly::from_coeffs(c).unwrap()
    }

    fn pq(c: [i64; 5]) -> QuarticPoly<Rational> {
        QuarticPoly::from_coeffs(c.map(|v| Rational::from_integer(v.into()))).unwrap()
    }

    #[test]
    fn quadratic_on_halfline_examples() {
        assert!(quadratic_on_halfline(&1.0, &1.0, &1.0, true).unwrap());
        assert!(!quadratic_on_halfline(&1.0, &-2.0, &1.0, true).unwrap());
        assert!(quadratic_on_halfline(&1.0, &-2.0, &1.0, false).unwrap());
        assert!(!quadratic_on_halfline(&1.0, &-3.0, &1.0, false).unwrap());
        assert_eq!(
            quadratic_on_halfline(&0.0, &1.0, &1.0, true).unwrap_err(),
            Error::NonPositiveLeadingCoefficient
        );
        assert!(quadratic_on_halfline(&1.0, &0.0, &0.0, false).unwrap());
        assert!(!quadratic_on_halfline(&1.0, &0.0, &0.0, true).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        // Substituting a = e = 1, b = c = d = 0: 4·12³ = 6912.
        assert_eq!(quartic_discriminant(&p([1.0, 0.0, 0.0, 0.0, 1.0])), 6912.0);
        assert_eq!(quartic_discriminant(&p([1.0, 0.0, -2.0, 0.0, 1.0])), 0.0);
        assert_eq!(quartic_discriminant(&p([1.0, 0.0, 2.0, 0.0, 1.0])), 0.0);
        // t⁴ − t² + 1: 4·13³ − 70² = 8788 − 4900
        assert_eq!(quartic_discriminant(&p([1.0, 0.0, -1.0, 0.0, 1.0])), 3888.0);
    }

    #[test]
    fn nonneg_examples() {
        assert!(quartic_nonneg(&p([1.0, 0.0, -2.0, 0.0, 1.0])).unwrap());
        assert!(quartic_nonneg(&p([1.0, 0.0, -1.0, 0.0, 1.0])).unwrap());
        assert!(!quartic_nonneg(&p([1.0, 0.0, -3.0, 0.0, 1.0])).unwrap());
        assert_eq!(
            quartic_nonneg(&p([-1.0, 0.0, 0.0, 0.0, 1.0])).unwrap_err(),
            Error::NegativeLeadingOrTrailing
        );
    }

    #[test]
    fn positive_examples() {
        let crit = quartic_criterion(&pq([1, 0, 2, 0, 1]), Tolerance::default()).unwrap();
        assert_eq!(crit.positive, Some(PdCase::One));
        assert!(!quartic_positive(&p([1.0, 0.0, -2.0, 0.0, 1.0])).unwrap());
        let crit = quartic_criterion(&p([1.0, 0.0, 0.0, 0.0, 1.0]), Tolerance::default()).unwrap();
        assert_eq!(crit.positive, Some(PdCase::TwoI));
        assert_eq!(crit.discriminant, 6912.0);
    }

    #[test]
    fn degenerate_univariate_reductions() {
        // t²(t² + 1) ≥ 0, not > 0
        assert!(quartic_nonneg(&p([1.0, 0.0, 1.0, 0.0, 0.0])).unwrap());
        assert!(!quartic_positive(&p([1.0, 0.0, 1.0, 0.0, 0.0])).unwrap());
        // t⁴ + t has a negative dip near 0
        assert!(!quartic_nonneg(&p([1.0, 0.0, 0.0, 1.0, 0.0])).unwrap());
        // t² + 1 as a quartic with a = 0
        assert!(quartic_positive(&p([0.0, 0.0, 1.0, 0.0, 1.0])).unwrap());
        assert!(quartic_nonneg(&p([0.0, 0.0, 1.0, 0.0, 1.0])).unwrap());
        // t³ + 1 is not nonnegative
        assert!(!quartic_nonneg(&p([0.0, 1.0, 0.0, 0.0, 1.0])).unwrap());
        assert!(!quartic_positive(&p([0.0, 1.0, 0.0, 0.0, 1.0])).unwrap());
    }

    #[test]
    fn squared_quadratic_with_linear_term_is_positive() {
        // (t² + t + 1)² = t⁴ + 2t³ + 3t² + 2t + 1 sits on the Δ = 0 branch
        let crit = quartic_criterion(&pq([1, 2, 3, 2, 1]), Tolerance::default()).unwrap();
        assert_eq!(crit.discriminant, Rational::from_integer(0.into()));
        assert_eq!(crit.positive, Some(PdCase::One));
    }

    #[test]
    fn classify_tensor2_examples() {
        let t = Sym4Tensor2::new(1.0, 0.0, 0.0, 0.0, 1.0).unwrap();
        let v = classify_tensor2(&t);
        assert_eq!(v.class, Class::PositiveDefinite);
        assert_eq!(v.certificate.label, "Lemma2.3-PD-case(2)(i)");
        assert!(v.witness.is_none());

        let third = Rational::new((-1).into(), 3.into());
        let one = Rational::from_integer(1.into());
        let zero = Rational::from_integer(0.into());
        let t = Sym4Tensor2::new(one.clone(), zero.clone(), third, zero, one.clone()).unwrap();
        let v = classify_tensor2(&t);
        assert_eq!(v.class, Class::PositiveSemidefiniteOnly);
        assert!(num_traits::Zero::is_zero(
            &t.eval(&[one.clone(), one.clone()])
        ));
        assert!(num_traits::Zero::is_zero(&t.eval(&[one.clone(), -one])));

        let t = Sym4Tensor2::new(1.0, 0.0, 0.0, 0.0, -1.0).unwrap();
        let v = classify_tensor2(&t);
        assert_eq!(v.class, Class::Indefinite);
        assert_eq!(v.witness, Some([0.0, 1.0]));
    }

    #[test]
    fn classify_couplings2_examples() {
        let v = classify_couplings2(&Couplings2::new(1.0, 0.0, -1.0, 0.0, 1.0).unwrap());
        assert_eq!(v.class, Class::PositiveDefinite);
        assert_eq!(v.certificate.label, "Thm3.3-(2)(i)");

        let c = Couplings2::from_array([1, 0, 2, 0, 1].map(|v| Rational::from_integer(v.into())))
            .unwrap();
        let v = classify_couplings2(&c);
        assert_eq!(v.class, Class::PositiveDefinite);
        assert_eq!(v.certificate.label, "Thm3.3-(1)");
        assert!(!v.certificate.boundary);

        let v = classify_couplings2(&Couplings2::new(0.0, 0.0, 1.0, 0.0, 0.0).unwrap());
        assert_eq!(v.class, Class::PositiveSemidefiniteOnly);
        assert_eq!(v.branch, Branch2::CrossSquare);
    }

    #[test]
    fn float_knife_edge_sets_boundary_flag() {
        let v = classify_couplings2(&Couplings2::new(1.0, 0.0, 2.0, 0.0, 1.0).unwrap());
        assert_eq!(v.class, Class::PositiveDefinite);
        assert!(v.certificate.boundary);
        let v = classify_couplings2(&Couplings2::new(1.0, 0.0, -1.0, 0.0, 1.0).unwrap());
        assert!(!v.certificate.boundary);
    }

    #[test]
    fn near_double_root_is_decided_exactly() {
        // Two real roots 0.047 apart: Δ ≈ −1.2e-4 sits inside the float band
        // although the minimum, ≈ −1.4e-4, is clearly negative.
        let p = p([
            0.5077300894481281,
            -2.137714836340225,
            3.56975689809172,
            -2.841027082780176,
            0.9097829162788234,
        ]);
        assert!(!quartic_nonneg(&p).unwrap());
        assert!(!quartic_positive(&p).unwrap());
        let c = Couplings2::from_array(p.coeffs()).unwrap();
        let v = classify_couplings2(&c);
        assert_eq!(v.class, Class::Indefinite);
        assert!(v.certificate.boundary);
        let [x1, x2] = v.witness.unwrap();
        assert!(c.eval(&x1, &x2) < 0.0);
    }

    #[test]
    fn degenerate_forms() {
        let cases: [([f64; 5], Branch2); 7] = [
            ([0.0; 5], Branch2::ZeroForm),
            ([1.0, 0.0, 1.0, 0.0, 0.0], Branch2::NullAxis(Axis::Phi2)),
            ([0.0, 0.0, 1.0, 0.0, 1.0], Branch2::NullAxis(Axis::Phi1)),
            ([1.0, 0.0, 0.0, 1.0, 0.0], Branch2::DegenerateIndefinite),
            ([0.0, 1.0, 0.0, 0.0, 1.0], Branch2::DegenerateIndefinite),
            ([0.0, 0.0, -1.0, 0.0, 0.0], Branch2::DegenerateIndefinite),
            (
                [-1.0, 0.0, 5.0, 0.0, 1.0],
                Branch2::NegativeAxis(Axis::Phi1),
            ),
        ];
        for (coeffs, want) in cases {
            let c = Couplings2::from_array(coeffs).unwrap();
            let v = classify_couplings2(&c);
            assert_eq!(v.branch, want, "{coeffs:?}");
            if let Some([x1, x2]) = v.witness {
                assert!(c.eval(&x1, &x2) <= 0.0, "{coeffs:?} witness ({x1}, {x2})");
                assert!((x1.abs().max(x2.abs()) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn indefinite_witness_is_negative() {
        let c = Couplings2::new(1.0, 0.0, -3.0, 0.0, 1.0).unwrap();
        let v = classify_couplings2(&c);
        assert_eq!(v.class, Class::Indefinite);
        assert_eq!(v.certificate.label, "Thm3.3-not-PSD");
        let [x1, x2] = v.witness.unwrap();
        assert!(c.eval(&x1, &x2) < 0.0);
    }

    #[test]
    fn invariants_match_hand_values() {
        let t = Sym4Tensor2::<f64>::new(1.0, 0.0, 0.0, 0.0, 1.0).unwrap();
        let r = discriminant_report(&t);
        assert_eq!((r.i, r.j), (1.0, 0.0));
        assert_eq!(r.delta, 6912.0 * (r.i.powi(3) - 27.0 * r.j * r.j));
    }
}

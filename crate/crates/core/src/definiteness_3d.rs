//! Positivity of the two-singlet plus Higgs-doublet potential
//! `V = λH h⁴ + M(φ) h² + V̄(φ)`.
//!
//! For fixed `φ` the potential is a quadratic in `u = h² ≥ 0`. When `M` has
//! one sign on the whole plane that collapses to a binary-form question:
//! `V̄` itself if `M ≥ 0`, the primed form `V̄′ = 4λH V̄ − M²` if `M ≤ 0`.
//! Mixed-sign `M` falls back to a sufficient test and then to the oracle.

use crate::definiteness_2d::{
    decide_line_form, max_norm_direction, quadratic_on_halfline, witness_for, Band, Branch2,
    PdCase, PsdCase,
};
use crate::error::{Error, Result};
use crate::oracle::{self, GridConfig};
use crate::scalar::{Scalar, Tolerance, Tracked};
use crate::tensor::{Couplings2, Couplings3, QuarticPoly};
use crate::verdict::{Certificate, Class, Confidence};

/// `M(φ) = λH20 φ1² + λH11 φ1φ2 + λH02 φ2²`.
pub fn eval_m<S: Scalar>(c: &Couplings3<S>, phi: &[S; 2]) -> S {
    c.eval_m(&phi[0], &phi[1])
}

/// Sign class of the quadratic form `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MSign {
    PositiveDefinite,
    /// Nonnegative, singular, not identically zero.
    PositiveSemidefinite,
    Zero,
    NegativeSemidefinite,
    NegativeDefinite,
    Indefinite,
}

impl MSign {
    pub fn as_str(self) -> &'static str {
        match self {
            MSign::PositiveDefinite => "PositiveDefinite",
            MSign::PositiveSemidefinite => "PositiveSemidefinite",
            MSign::Zero => "Zero",
            MSign::NegativeSemidefinite => "NegativeSemidefinite",
            MSign::NegativeDefinite => "NegativeDefinite",
            MSign::Indefinite => "Indefinite",
        }
    }

    /// `M(φ) ≥ 0` everywhere (includes the zero form).
    pub fn is_nonnegative(self) -> bool {
        matches!(
            self,
            MSign::PositiveDefinite | MSign::PositiveSemidefinite | MSign::Zero
        )
    }

    pub fn is_nonpositive(self) -> bool {
        matches!(
            self,
            MSign::NegativeDefinite | MSign::NegativeSemidefinite | MSign::Zero
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MFormClass<S> {
    pub class: MSign,
    /// `[[λH20, λH11/2], [λH11/2, λH02]]`
    pub matrix: [[S; 2]; 2],
    /// `4λH20λH02 − λH11²`, four times the determinant.
    pub det4: S,
    pub boundary: bool,
}

impl<S: Scalar> MFormClass<S> {
    pub fn is_positive_semidefinite(&self) -> bool {
        self.class.is_nonnegative()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.class == MSign::NegativeDefinite
    }
}

fn m_sign<S: Scalar>(c: &Couplings3<S>, band: &mut Band) -> (MSign, S) {
    let (p, q, r) = (c.lambda_h20(), c.lambda_h11(), c.lambda_h02());
    let det = Tracked::int(4) * Tracked::new(p.clone()) * Tracked::new(r.clone())
        - Tracked::new(q.clone()).square();
    let sd = band.sign(&det);
    let class = if sd.is_negative() {
        MSign::Indefinite
    } else if p.is_positive() || r.is_positive() {
        if p.is_negative() || r.is_negative() {
            MSign::Indefinite
        } else if sd.is_positive() {
            MSign::PositiveDefinite
        } else {
            MSign::PositiveSemidefinite
        }
    } else if p.is_negative() || r.is_negative() {
        if sd.is_positive() {
            MSign::NegativeDefinite
        } else {
            MSign::NegativeSemidefinite
        }
    } else if q.is_zero() {
        MSign::Zero
    } else {
        MSign::Indefinite
    };
    (class, det.value)
}

pub fn classify_m<S: Scalar>(c: &Couplings3<S>) -> MFormClass<S> {
    classify_m_with(c, Tolerance::default())
}

pub fn classify_m_with<S: Scalar>(c: &Couplings3<S>, tol: Tolerance) -> MFormClass<S> {
    let mut band = Band::new(tol);
    let (class, det4) = m_sign(c, &mut band);
    let half = c.lambda_h11().clone() / S::int(2);
    MFormClass {
        class,
        matrix: [
            [c.lambda_h20().clone(), half.clone()],
            [half, c.lambda_h02().clone()],
        ],
        det4,
        boundary: band.boundary,
    }
}

/// Couplings of `V̄′ = 4λH V̄ − M²` and its discriminant.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimedCouplings<S> {
    pub quartic: Couplings2<S>,
    pub delta: S,
}

impl<S: Scalar> PrimedCouplings<S> {
    pub fn lambda_40(&self) -> &S {
        self.quartic.lambda_40()
    }
    pub fn lambda_31(&self) -> &S {
        self.quartic.lambda_31()
    }
    pub fn lambda_22(&self) -> &S {
        self.quartic.lambda_22()
    }
    pub fn lambda_13(&self) -> &S {
        self.quartic.lambda_13()
    }
    pub fn lambda_04(&self) -> &S {
        self.quartic.lambda_04()
    }
}

fn primed_quartic<S: Scalar>(c: &Couplings3<S>) -> Couplings2<S> {
    let k = S::int;
    let lh = c.lambda_h().clone();
    let (p, q, r) = (
        c.lambda_h20().clone(),
        c.lambda_h11().clone(),
        c.lambda_h02().clone(),
    );
    let [l40, l31, l22, l13, l04] = c.quartic().to_array();
    let four_lh = k(4) * lh;
    let primed = [
        four_lh.clone() * l40 - p.clone() * p.clone(),
        four_lh.clone() * l31 - k(2) * p.clone() * q.clone(),
        four_lh.clone() * l22 - k(2) * p * r.clone() - q.clone() * q.clone(),
        four_lh.clone() * l13 - k(2) * r.clone() * q,
        four_lh * l04 - r.clone() * r,
    ];
    // Products of finite inputs can only overflow in float; saturate the
    // verdict path rather than fail.
    Couplings2::from_array(primed.clone()).unwrap_or_else(|_| {
        Couplings2::from_array(primed.map(|v| if v.is_finite_value() { v } else { S::zero() }))
            .expect("sanitized couplings are finite")
    })
}

pub fn primed_couplings<S: Scalar>(c: &Couplings3<S>) -> PrimedCouplings<S> {
    let quartic = primed_quartic(c);
    let delta = crate::definiteness_2d::quartic_discriminant(&quartic.line_polynomial());
    PrimedCouplings { quartic, delta }
}

/// Whether `λH h⁴ + M(φ) h² + V̄(φ)` is positive (`strict`) or nonnegative
/// for every `h`, at a fixed direction `φ`.
pub fn pointwise_reduction<S: Scalar>(
    c: &Couplings3<S>,
    phi: &[S; 2],
    strict: bool,
) -> Result<bool> {
    if !c.lambda_h().is_positive() {
        return Err(Error::NonPositiveLambdaH);
    }
    if phi[0].is_zero() && phi[1].is_zero() {
        return Err(Error::ZeroDirection);
    }
    let m = eval_m(c, phi);
    let vbar = c.quartic().eval(&phi[0], &phi[1]);
    quadratic_on_halfline(c.lambda_h(), &m, &vbar, strict)
}

/// Which reduction decided a three-field verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    NegativeLambdaH,
    /// `λH = 0`: nonnegative iff `M ≥ 0` and `V̄ ≥ 0`.
    ZeroLambdaH,
    /// `M ≥ 0`: decided by `V̄`.
    MNonnegative,
    /// `M < 0` everywhere: decided by `V̄′`.
    MNegativeDefinite,
    /// `M ≤ 0` and singular: still decided by `V̄′`.
    MNegativeSemidefinite,
    /// `M` of mixed sign.
    MIndefinite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict3<S> {
    pub class: Class,
    pub certificate: Certificate,
    pub confidence: Confidence,
    pub route: Route,
    /// `(φ1, φ2, h)` with `h ≥ 0`, max-norm 1; present iff indefinite.
    pub witness: Option<[S; 3]>,
}

fn circled(case: PdCase) -> &'static str {
    match case {
        PdCase::One => "",
        PdCase::TwoI => "(i)",
        PdCase::TwoII => "(ii)",
    }
}

fn lifted_label(route: Route, branch: Branch2) -> String {
    let (n, first, second, prefix) = match route {
        Route::MNonnegative => ("1", "①", "②", "M-PSD"),
        Route::MNegativeDefinite => ("2", "③", "④", "M-ND"),
        _ => {
            return format!(
                "M-NSD-{}",
                branch.label(crate::definiteness_2d::LabelStyle::Couplings)
            )
        }
    };
    match branch {
        Branch2::Positive(PdCase::One) => format!("Thm3.6-({n})-{first}"),
        Branch2::Positive(case) => format!("Thm3.6-({n})-{second}{}", circled(case)),
        Branch2::Nonnegative(PsdCase::I) => format!("Thm3.7-({n})(i)"),
        Branch2::Nonnegative(PsdCase::II) => format!("Thm3.7-({n})(ii)"),
        Branch2::NotNonnegative => format!("Thm3.6-({n})-not-PSD"),
        other => format!(
            "{prefix}-{}",
            other.label(crate::definiteness_2d::LabelStyle::Couplings)
        ),
    }
}

fn sqrt_scalar<S: Scalar>(x: &S) -> S {
    S::from_f64_lossy(x.approx().max(0.0).sqrt()).unwrap_or_else(S::zero)
}

fn normalized3<S: Scalar>(phi: [S; 2], h: S) -> [S; 3] {
    let v = max_norm_direction(&[phi[0].clone(), phi[1].clone(), h]);
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

/// Some `φ` with `M(φ) < 0`, given that `M` is not nonnegative.
fn m_negative_direction<S: Scalar>(c: &Couplings3<S>) -> [S; 2] {
    let (p, q, r) = (c.lambda_h20(), c.lambda_h11(), c.lambda_h02());
    if p.is_negative() {
        [S::one(), S::zero()]
    } else if r.is_negative() {
        [S::zero(), S::one()]
    } else if p.is_positive() {
        // M(−q, 2p) = p(4pr − q²)
        [-q.clone(), S::int(2) * p.clone()]
    } else if r.is_positive() {
        [S::int(2) * r.clone(), -q.clone()]
    } else {
        // M = q φ1φ2
        [-q.clone(), q.clone()]
    }
}

struct Context<S: Scalar> {
    c: Couplings3<S>,
    band: Band,
}

impl<S: Scalar> Context<S> {
    fn verdict(
        &self,
        class: Class,
        label: impl Into<String>,
        route: Route,
        witness: Option<[S; 3]>,
    ) -> Verdict3<S> {
        self.verdict_with(class, label, route, witness, Confidence::Analytic)
    }

    fn verdict_with(
        &self,
        class: Class,
        label: impl Into<String>,
        route: Route,
        witness: Option<[S; 3]>,
        confidence: Confidence,
    ) -> Verdict3<S> {
        Verdict3 {
            class,
            certificate: Certificate::new(label, self.band.boundary),
            confidence,
            route,
            witness,
        }
    }

    fn vbar(&self) -> QuarticPoly<S> {
        self.c.quartic().line_polynomial()
    }

    /// Decides `V̄`, with an `h = 0` witness when it is indefinite.
    fn vbar_branch(&mut self) -> (Branch2, Option<[S; 3]>) {
        let p = self.vbar();
        let branch = decide_line_form(&p, &mut self.band);
        let w = witness_for(&p, branch).map(|[a, b]| [a, b, S::zero()]);
        (branch, w)
    }

    /// Decides `V̄′`; a witness `φ*` lifts to `h² = −M(φ*)/(2λH)`, where
    /// `V = V̄′(φ*)/(4λH)`.
    fn primed_branch(&mut self) -> (Branch2, Option<[S; 3]>) {
        let p = primed_quartic(&self.c).line_polynomial();
        let branch = decide_line_form(&p, &mut self.band);
        let w = witness_for(&p, branch).map(|phi| {
            let m = eval_m(&self.c, &phi);
            let h2 = -m / (S::int(2) * self.c.lambda_h().clone());
            normalized3(phi, sqrt_scalar(&h2))
        });
        (branch, w)
    }

    fn zero_lambda_h(&mut self, m: MSign) -> Verdict3<S> {
        let route = Route::ZeroLambdaH;
        if !m.is_nonnegative() {
            // V = M(φ)h² + V̄(φ) is unbounded below along φ once h is large.
            let phi = m_negative_direction(&self.c);
            let mv = eval_m(&self.c, &phi).abs();
            let vb = self.c.quartic().eval(&phi[0], &phi[1]).abs();
            let h2 = S::int(2) * vb / mv.clone() + S::one();
            let w = normalized3(phi, sqrt_scalar(&h2));
            return self.verdict(Class::Indefinite, "lambda-H-zero-M-not-PSD", route, Some(w));
        }
        let (branch, w) = self.vbar_branch();
        if branch.class().is_psd() {
            self.verdict(
                Class::PositiveSemidefiniteOnly,
                "lambda-H-zero-PSD",
                route,
                None,
            )
        } else {
            self.verdict(Class::Indefinite, "lambda-H-zero-V-bar-not-PSD", route, w)
        }
    }

    fn lift(&self, route: Route, branch: Branch2, w: Option<[S; 3]>) -> Verdict3<S> {
        self.verdict(branch.class(), lifted_label(route, branch), route, w)
    }

    fn indefinite_m(&mut self, cfg: GridConfig) -> Verdict3<S> {
        let route = Route::MIndefinite;
        let (vbar, w) = self.vbar_branch();
        if vbar.class() == Class::Indefinite {
            return self.verdict(Class::Indefinite, "M-indefinite-V-bar-not-PSD", route, w);
        }
        let vbar_pd = vbar.class() == Class::PositiveDefinite;
        if vbar_pd {
            let (primed, _) = self.primed_branch();
            if primed.class() == Class::PositiveDefinite {
                return self.verdict(
                    Class::PositiveDefinite,
                    "M-indefinite-sufficient",
                    route,
                    None,
                );
            }
        }
        let min = oracle::min_potential3_with(&self.c, cfg);
        let scale = self.c.max_abs().approx();
        let slack = self.band.tol.rel() * scale;
        let value = min.min_value.approx();
        if value < -slack {
            let w = normalized3(
                [min.argmin[0].clone(), min.argmin[1].clone()],
                min.argmin[2].clone(),
            );
            self.verdict_with(
                Class::Indefinite,
                "M-indefinite-oracle-negative",
                route,
                Some(w),
                Confidence::NumericOracle,
            )
        } else if vbar_pd && value > slack {
            self.verdict_with(
                Class::PositiveDefinite,
                "M-indefinite-oracle-positive",
                route,
                None,
                Confidence::NumericOracle,
            )
        } else {
            self.verdict_with(
                Class::AnalyticInconclusive,
                "M-indefinite-inconclusive",
                route,
                None,
                Confidence::NumericOracle,
            )
        }
    }
}

pub fn classify_couplings3<S: Scalar>(c: &Couplings3<S>) -> Verdict3<S> {
    classify_couplings3_with(c, Tolerance::default(), GridConfig::default())
}

/// Total classifier. Every branch except the mixed-sign-`M` oracle fallback
/// is an exact equivalence.
pub fn classify_couplings3_with<S: Scalar>(
    c: &Couplings3<S>,
    tol: Tolerance,
    cfg: GridConfig,
) -> Verdict3<S> {
    let v = classify_in(c, tol, cfg);
    if !v.certificate.boundary {
        return v;
    }
    // A float comparison fell inside the band: decide the dyadic inputs
    // exactly and keep the flag.
    let exact = classify_in(&c.to_exact(), tol, cfg);
    Verdict3 {
        class: exact.class,
        certificate: Certificate::new(exact.certificate.label, true),
        confidence: exact.confidence,
        route: exact.route,
        witness: exact.witness.map(|w| w.map(|x| S::from_rational(&x))),
    }
}

fn classify_in<S: Scalar>(c: &Couplings3<S>, tol: Tolerance, cfg: GridConfig) -> Verdict3<S> {
    let mut ctx = Context {
        c: c.clone(),
        band: Band::new(tol),
    };
    let lh = c.lambda_h();
    if lh.is_negative() {
        let w = [S::zero(), S::zero(), S::one()];
        return ctx.verdict(
            Class::Indefinite,
            "lambda-H-negative",
            Route::NegativeLambdaH,
            Some(w),
        );
    }
    let (m, _) = m_sign(c, &mut ctx.band);
    if lh.is_zero() {
        return ctx.zero_lambda_h(m);
    }
    match m {
        MSign::PositiveDefinite | MSign::PositiveSemidefinite | MSign::Zero => {
            let (branch, w) = ctx.vbar_branch();
            ctx.lift(Route::MNonnegative, branch, w)
        }
        MSign::NegativeDefinite => {
            let (branch, w) = ctx.primed_branch();
            ctx.lift(Route::MNegativeDefinite, branch, w)
        }
        MSign::NegativeSemidefinite => {
            let (branch, w) = ctx.primed_branch();
            ctx.lift(Route::MNegativeSemidefinite, branch, w)
        }
        MSign::Indefinite => ctx.indefinite_m(cfg),
    }
}

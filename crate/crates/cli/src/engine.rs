//! Runs classifiers and oracles on a parsed spec and collects plain results.

use quartic_pd::definiteness_2d::classify_couplings2_with;
use quartic_pd::definiteness_3d::{classify_couplings3_with, classify_m_with};
use quartic_pd::oracle::{min_binary_form_on_circle, min_potential3_with};
use quartic_pd::{
    couplings2_to_tensor, discriminant_report, primed_couplings, Certificate, Class, Confidence,
    Couplings2, Couplings3, GridConfig, Method, Rational, Scalar, Tolerance,
};

use crate::spec::{Arith, Model, PotentialSpec};

/// A reported number: a double in float mode, exact text in rational mode.
#[derive(Debug, Clone, PartialEq)]
pub enum Num {
    Float(f64),
    Exact(String),
}

impl Num {
    fn of<S: Scalar>(x: &S) -> Num {
        if S::EXACT {
            Num::Exact(x.to_string())
        } else {
            Num::Float(x.approx())
        }
    }
}

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Num::Float(x) => write!(f, "{x}"),
            Num::Exact(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub model: Model,
    pub class: Class,
    pub certificate: Certificate,
    pub confidence: Confidence,
    pub witness: Option<Vec<f64>>,
    /// Named invariants, in a fixed order.
    pub invariants: Vec<(&'static str, Num)>,
    /// Coefficients of the binary form the verdict was read from.
    pub quartic: Vec<Num>,
    pub arithmetic: Arith,
    /// A floating-point run hit the tolerance band and was redone exactly.
    pub escalated: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub arith: Option<Arith>,
    pub tol: Tolerance,
    pub grid: GridConfig,
}

fn check_with<S: Scalar>(
    model: Model,
    values: Vec<S>,
    arith: Arith,
    set: &Settings,
) -> CheckOutcome {
    match model {
        Model::BinaryQuartic => {
            let c = Couplings2::from_array(to_array(values)).expect("finite couplings");
            let v = classify_couplings2_with(&c, set.tol);
            let rep = discriminant_report(&couplings2_to_tensor(&c));
            CheckOutcome {
                model,
                class: v.class,
                certificate: v.certificate,
                confidence: Confidence::Analytic,
                witness: v.witness.map(|w| w.iter().map(Scalar::approx).collect()),
                invariants: vec![
                    ("delta", Num::of(&rep.delta)),
                    ("I", Num::of(&rep.i)),
                    ("J", Num::of(&rep.j)),
                ],
                quartic: c.to_array().iter().map(Num::of).collect(),
                arithmetic: arith,
                escalated: false,
            }
        }
        Model::TwoSingletsHiggs => {
            let c = Couplings3::from_array(to_array(values)).expect("finite couplings");
            let v = classify_couplings3_with(&c, set.tol, set.grid);
            let m = classify_m_with(&c, set.tol);
            let primed = primed_couplings(&c);
            let vbar = c.quartic().line_polynomial();
            let mut invariants = vec![
                ("M_class", Num::Exact(m.class.as_str().to_string())),
                ("M_det4", Num::of(&m.det4)),
                ("delta", Num::of(&quartic_pd::quartic_discriminant(&vbar))),
                ("delta_prime", Num::of(&primed.delta)),
            ];
            let names = [
                "lambda_40'",
                "lambda_31'",
                "lambda_22'",
                "lambda_13'",
                "lambda_04'",
            ];
            invariants.extend(
                names
                    .iter()
                    .zip(primed.quartic.to_array().iter())
                    .map(|(n, x)| (*n, Num::of(x))),
            );
            // The form that decided the verdict, when one did.
            let quartic = if m.class.is_nonnegative() {
                c.quartic().to_array()
            } else {
                primed.quartic.to_array()
            };
            CheckOutcome {
                model,
                class: v.class,
                certificate: v.certificate,
                confidence: v.confidence,
                witness: v.witness.map(|w| w.iter().map(Scalar::approx).collect()),
                invariants,
                quartic: quartic.iter().map(Num::of).collect(),
                arithmetic: arith,
                escalated: false,
            }
        }
    }
}

fn to_array<S: Scalar, const N: usize>(values: Vec<S>) -> [S; N] {
    values
        .try_into()
        .unwrap_or_else(|v: Vec<S>| panic!("expected {N} couplings, got {}", v.len()))
}

fn arith_for(spec: &PotentialSpec, set: &Settings) -> Arith {
    set.arith.unwrap_or(spec.arithmetic)
}

/// Classifies the spec. Floating-point verdicts that touched the tolerance
/// band are recomputed with the exact decimal values.
pub fn check(spec: &PotentialSpec, set: &Settings) -> CheckOutcome {
    match arith_for(spec, set) {
        Arith::Rational => {
            check_with::<Rational>(spec.model, spec.values_exact(), Arith::Rational, set)
        }
        Arith::Float => {
            let out = check_with::<f64>(spec.model, spec.values_f64(), Arith::Float, set);
            if !out.certificate.boundary {
                return out;
            }
            let mut exact =
                check_with::<Rational>(spec.model, spec.values_exact(), Arith::Rational, set);
            exact.escalated = true;
            exact
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub min_value: Num,
    pub argmin: Vec<f64>,
    pub method: Method,
    /// Sign of the minimum under the tolerance band, as a verdict class.
    pub class: Class,
    pub arithmetic: Arith,
}

fn oracle_with<S: Scalar>(
    model: Model,
    values: Vec<S>,
    arith: Arith,
    set: &Settings,
) -> OracleOutcome {
    let scale = quartic_pd::scalar::max_abs(values.iter()).approx();
    let m = match model {
        Model::BinaryQuartic => {
            let c = Couplings2::from_array(to_array(values)).expect("finite couplings");
            min_binary_form_on_circle(&c.line_polynomial())
        }
        Model::TwoSingletsHiggs => {
            let c = Couplings3::from_array(to_array(values)).expect("finite couplings");
            min_potential3_with(&c, set.grid)
        }
    };
    let v = m.min_value.approx();
    let band = set.tol.rel() * scale;
    let class = if S::EXACT && m.min_value.is_zero() || v.abs() <= band {
        Class::PositiveSemidefiniteOnly
    } else if v > 0.0 {
        Class::PositiveDefinite
    } else {
        Class::Indefinite
    };
    OracleOutcome {
        min_value: Num::of(&m.min_value),
        argmin: m.argmin.iter().map(Scalar::approx).collect(),
        method: m.method,
        class,
        arithmetic: arith,
    }
}

pub fn oracle(spec: &PotentialSpec, set: &Settings) -> OracleOutcome {
    match arith_for(spec, set) {
        Arith::Rational => {
            oracle_with::<Rational>(spec.model, spec.values_exact(), Arith::Rational, set)
        }
        Arith::Float => oracle_with::<f64>(spec.model, spec.values_f64(), Arith::Float, set),
    }
}

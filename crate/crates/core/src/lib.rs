//! Closed-form positivity tests for binary quartic forms and for the
//! two-singlet scalar potential with a Higgs doublet, plus independent
//! numeric minimizers to check them against.
//!
//! Everything is generic over [`Scalar`]: `f64`/`f32` evaluate the criteria
//! inside a relative tolerance band, [`Rational`] decides them exactly.
//!
//! ```
//! use quartic_pd::{classify_couplings2, Class, Couplings2};
//!
//! // φ1⁴ − φ1²φ2² + φ2⁴
//! let c = Couplings2::new(1.0, 0.0, -1.0, 0.0, 1.0).unwrap();
//! let v = classify_couplings2(&c);
//! assert_eq!(v.class, Class::PositiveDefinite);
//! assert_eq!(v.certificate.label, "Thm3.3-(2)(i)");
//! ```

pub mod definiteness_2d;
pub mod definiteness_3d;
pub mod error;
pub mod oracle;
pub mod scalar;
pub mod tensor;
pub mod verdict;

pub use definiteness_2d::{
    classify_couplings2, classify_couplings2_with, classify_tensor2, classify_tensor2_with,
    discriminant_report, quadratic_on_halfline, quartic_discriminant, quartic_nonneg,
    quartic_nonneg_with, quartic_positive, quartic_positive_with, Branch2, DiscriminantReport,
    Verdict2,
};
pub use definiteness_3d::{
    classify_couplings3, classify_couplings3_with, classify_m, eval_m, pointwise_reduction,
    primed_couplings, MFormClass, MSign, PrimedCouplings, Route, Verdict3,
};
pub use error::{Error, Result};
pub use oracle::{
    min_form2_on_sphere, min_potential3, min_quartic_exact, GridConfig, Method, MinResult,
};
pub use scalar::{parse_rational, Rational, Scalar, Sign, Tolerance};
pub use tensor::{
    couplings2_to_tensor, couplings3_to_tensor, eval_tensor2, eval_tensor3, restrict_to_line,
    tensor_to_couplings2, Couplings2, Couplings3, QuarticPoly, Sym4Tensor2, Sym4Tensor3,
};
pub use verdict::{Certificate, Class, Confidence};

pub type QuarticPoly64 = QuarticPoly<f64>;
pub type QuarticPolyQ = QuarticPoly<Rational>;
pub type Couplings2F64 = Couplings2<f64>;
pub type Couplings2Q = Couplings2<Rational>;
pub type Couplings3F64 = Couplings3<f64>;
pub type Couplings3Q = Couplings3<Rational>;
pub type Sym4Tensor2F64 = Sym4Tensor2<f64>;
pub type Sym4Tensor2Q = Sym4Tensor2<Rational>;

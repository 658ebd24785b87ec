//! Number abstraction shared by every classifier.
//!
//! Two families implement [`Scalar`]: binary floating point (`f32`, `f64`),
//! where sign decisions are made inside a relative tolerance band, and exact
//! rationals ([`Rational`]), where every sign decision is exact. Comparisons
//! involving square roots go through [`Scalar::surd_sign`] so the exact
//! family never needs an irrational intermediate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    /// Exactly zero, or inside the tolerance band for floating point.
    Zero,
    Positive,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn is_nonnegative(self) -> bool {
        self != Sign::Negative
    }

    pub fn is_nonpositive(self) -> bool {
        self != Sign::Positive
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    fn of<S: Scalar>(x: &S) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Relative width of the band inside which a floating-point comparison is
/// treated as an equality. Ignored by exact scalars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    rel: f64,
}

impl Tolerance {
    pub const DEFAULT_REL: f64 = 1e-9;

    pub fn new(rel: f64) -> Result<Self, Error> {
        if !rel.is_finite() || rel < 0.0 {
            return Err(Error::InvalidTolerance(rel));
        }
        Ok(Tolerance { rel })
    }

    pub fn rel(&self) -> f64 {
        self.rel
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: Self::DEFAULT_REL,
        }
    }
}

/// A value paired with the sum of the absolute values of the terms that
/// produced it. The magnitude is the scale against which the floating-point
/// band is measured, so cancellation near a knife edge is detected relative
/// to the size of the inputs rather than the size of the result.
#[derive(Debug, Clone, PartialEq)]
pub struct Tracked<S> {
    pub value: S,
    pub mag: S,
}

impl<S: Scalar> Tracked<S> {
    pub fn new(value: S) -> Self {
        let mag = value.abs();
        Tracked { value, mag }
    }

    pub fn int(n: i64) -> Self {
        Tracked::new(S::int(n))
    }

    pub fn sign(&self, tol: Tolerance) -> Sign {
        S::banded_sign(&self.value, &self.mag, tol)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn cube(&self) -> Self {
        &self.square() * self
    }
}

macro_rules! tracked_binop {
    ($trait:ident, $method:ident, $mag:ident) => {
        impl<S: Scalar> $trait<&Tracked<S>> for &Tracked<S> {
            type Output = Tracked<S>;
            fn $method(self, rhs: &Tracked<S>) -> Tracked<S> {
                Tracked {
                    value: self.value.clone().$method(rhs.value.clone()),
                    mag: self.mag.clone().$mag(rhs.mag.clone()),
                }
            }
        }
        impl<S: Scalar> $trait<Tracked<S>> for Tracked<S> {
            type Output = Tracked<S>;
            fn $method(self, rhs: Tracked<S>) -> Tracked<S> {
                (&self).$method(&rhs)
            }
        }
        impl<S: Scalar> $trait<&Tracked<S>> for Tracked<S> {
            type Output = Tracked<S>;
            fn $method(self, rhs: &Tracked<S>) -> Tracked<S> {
                (&self).$method(rhs)
            }
        }
        impl<S: Scalar> $trait<Tracked<S>> for &Tracked<S> {
            type Output = Tracked<S>;
            fn $method(self, rhs: Tracked<S>) -> Tracked<S> {
                self.$method(&rhs)
            }
        }
    };
}

tracked_binop!(Add, add, add);
tracked_binop!(Sub, sub, add);
tracked_binop!(Mul, mul, mul);

impl<S: Scalar> Neg for Tracked<S> {
    type Output = Tracked<S>;
    fn neg(self) -> Tracked<S> {
        Tracked {
            value: -self.value,
            mag: self.mag,
        }
    }
}

impl<S: Scalar> Neg for &Tracked<S> {
    type Output = Tracked<S>;
    fn neg(self) -> Tracked<S> {
        -self.clone()
    }
}

/// The term `coeff * sqrt(radicand)`, with `radicand >= 0`.
#[derive(Debug, Clone)]
pub struct Surd<S> {
    pub coeff: Tracked<S>,
    pub radicand: S,
}

impl<S: Scalar> Surd<S> {
    pub fn new(coeff: Tracked<S>, radicand: S) -> Self {
        Surd { coeff, radicand }
    }

    /// A plain term, `coeff * sqrt(1)`.
    pub fn rational(coeff: Tracked<S>) -> Self {
        Surd {
            coeff,
            radicand: S::one(),
        }
    }
}

pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialOrd
    + Num
    + Neg<Output = Self>
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// `true` when arithmetic and comparisons are exact.
    const EXACT: bool;

    fn is_finite_value(&self) -> bool;

    /// Converts a double. Exact scalars take the exact dyadic value.
    fn from_f64_lossy(x: f64) -> Option<Self>;

    /// Sign of `value`, treating it as zero when `|value| <= tol * magnitude`
    /// in floating point.
    fn banded_sign(value: &Self, magnitude: &Self, tol: Tolerance) -> Sign;

    /// Sign of `a.coeff * sqrt(a.radicand) + b.coeff * sqrt(b.radicand)`.
    fn surd_sign(a: &Surd<Self>, b: &Surd<Self>, tol: Tolerance) -> Sign;

    /// Nearby values worth trying as exact roots, simplest first. Floating
    /// point returns `x` itself; rationals return the continued-fraction
    /// convergents of `x`.
    fn rational_candidates(x: f64) -> Vec<Self>;

    /// The exact value. Finite doubles are dyadic rationals, so this never
    /// rounds.
    fn to_rational(&self) -> Rational;

    /// Nearest value to an exact rational.
    fn from_rational(r: &Rational) -> Self;

    /// Strictly greater than zero. Unlike `num_traits::Signed`, `+0.0` is
    /// not positive and `-0.0` is not negative.
    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer constant")
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Exact sign of `a√p + b√q` via squaring.
fn exact_surd_sign<S: Scalar>(a: &Surd<S>, b: &Surd<S>) -> Sign {
    let term_sign = |s: &Surd<S>| {
        if s.radicand.is_zero() {
            Sign::Zero
        } else {
            Sign::of(&s.coeff.value)
        }
    };
    let (sa, sb) = (term_sign(a), term_sign(b));
    match (sa, sb) {
        (Sign::Zero, s) | (s, Sign::Zero) => s,
        (x, y) if x == y => x,
        _ => {
            let lhs = a.coeff.value.clone() * a.coeff.value.clone() * a.radicand.clone();
            let rhs = b.coeff.value.clone() * b.coeff.value.clone() * b.radicand.clone();
            match lhs.partial_cmp(&rhs) {
                Some(std::cmp::Ordering::Greater) => sa,
                Some(std::cmp::Ordering::Less) => sb,
                _ => Sign::Zero,
            }
        }
    }
}

macro_rules! float_scalar {
    ($t:ty, $band_floor:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }

            fn from_f64_lossy(x: f64) -> Option<Self> {
                let y = x as $t;
                y.is_finite().then_some(y)
            }

            fn banded_sign(value: &Self, magnitude: &Self, tol: Tolerance) -> Sign {
                let band = (tol.rel() as $t).max($band_floor) * magnitude.abs();
                if value.abs() <= band {
                    Sign::Zero
                } else if *value > 0.0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                }
            }

            fn surd_sign(a: &Surd<Self>, b: &Surd<Self>, tol: Tolerance) -> Sign {
                let ra = a.radicand.max(0.0).sqrt();
                let rb = b.radicand.max(0.0).sqrt();
                let value = a.coeff.value * ra + b.coeff.value * rb;
                let mag = a.coeff.mag * ra + b.coeff.mag * rb;
                Self::banded_sign(&value, &mag, tol)
            }

            fn rational_candidates(x: f64) -> Vec<Self> {
                Self::from_f64_lossy(x).into_iter().collect()
            }

            fn to_rational(&self) -> Rational {
                BigRational::from_float(*self).expect("finite scalar")
            }

            fn from_rational(r: &Rational) -> Self {
                r.to_f64().map_or(<$t>::NAN, |x| x as $t)
            }
        }
    };
}

float_scalar!(f64, 0.0);
float_scalar!(f32, 64.0 * f32::EPSILON);

const MAX_CONVERGENTS: usize = 64;

impl Scalar for Rational {
    const EXACT: bool = true;

    fn is_finite_value(&self) -> bool {
        true
    }

    fn from_f64_lossy(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }

    fn banded_sign(value: &Self, _magnitude: &Self, _tol: Tolerance) -> Sign {
        Sign::of(value)
    }

    fn surd_sign(a: &Surd<Self>, b: &Surd<Self>, _tol: Tolerance) -> Sign {
        exact_surd_sign(a, b)
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn rational_candidates(x: f64) -> Vec<Self> {
        let Some(target) = BigRational::from_float(x) else {
            return Vec::new();
        };
        // Convergents h_k / k_k of the continued fraction of the exact dyadic.
        let mut out = Vec::new();
        let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
        let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
        let mut rest = target.clone();
        for _ in 0..MAX_CONVERGENTS {
            let a = rest.floor().to_integer();
            let h_next = &a * &h + &h_prev;
            let k_next = &a * &k + &k_prev;
            h_prev = std::mem::replace(&mut h, h_next);
            k_prev = std::mem::replace(&mut k, k_next);
            out.push(BigRational::new(h.clone(), k.clone()));
            let frac = &rest - BigRational::from_integer(a);
            if frac.is_zero() {
                break;
            }
            rest = frac.recip();
        }
        if out.last() != Some(&target) {
            out.push(target);
        }
        out
    }
}

/// Parses `"p/q"`, `"p"` or a decimal literal such as `"-1.25e-3"` into an
/// exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::BadNumber(text.to_string());
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n = parse_rational(num)?;
        let d = parse_rational(den)?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(n / d);
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = t[pos + 1..].parse().map_err(|_| bad())?;
            (&t[..pos], exp)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    if exponent.unsigned_abs() > 10_000 {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| bad())?
    };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Formats a rational as `"p/q"` (or `"p"` for integers).
pub fn format_rational(r: &Rational) -> String {
    let r = r.reduced();
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Greatest absolute value in a list, or zero.
pub fn max_abs<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> S {
    values
        .into_iter()
        .map(|v| v.abs())
        .fold(S::zero(), |m, v| if v > m { v } else { m })
}

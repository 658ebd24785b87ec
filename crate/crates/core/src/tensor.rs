//! Symmetric 4th-order tensors in two and three dimensions, their coupling
//! parameterizations, and quartic-form evaluation.
//!
//! Tensors are stored by independent entry only. A fully indexed entry
//! `v_ijkl` is looked up by counting how often each axis occurs in the index.

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

fn finite<S: Scalar>(name: &'static str, v: S) -> Result<S> {
    if v.is_finite_value() {
        Ok(v)
    } else {
        Err(Error::NonFinite { name })
    }
}

/// `P(t) = a t⁴ + b t³ + c t² + d t + e`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticPoly<S> {
    a: S,
    b: S,
    c: S,
    d: S,
    e: S,
}

impl<S: Scalar> QuarticPoly<S> {
    pub fn new(a: S, b: S, c: S, d: S, e: S) -> Result<Self> {
        Ok(QuarticPoly {
            a: finite("a", a)?,
            b: finite("b", b)?,
            c: finite("c", c)?,
            d: finite("d", d)?,
            e: finite("e", e)?,
        })
    }

    pub fn from_coeffs([a, b, c, d, e]: [S; 5]) -> Result<Self> {
        Self::new(a, b, c, d, e)
    }

    pub fn a(&self) -> &S {
        &self.a
    }
    pub fn b(&self) -> &S {
        &self.b
    }
    pub fn c(&self) -> &S {
        &self.c
    }
    pub fn d(&self) -> &S {
        &self.d
    }
    pub fn e(&self) -> &S {
        &self.e
    }

    /// Coefficients from the quartic term down to the constant.
    pub fn coeffs(&self) -> [S; 5] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
        ]
    }

    pub fn eval(&self, t: &S) -> S {
        let mut acc = self.a.clone();
        for k in [&self.b, &self.c, &self.d, &self.e] {
            acc = acc * t.clone() + k.clone();
        }
        acc
    }

    /// `t⁴ P(1/t)`: the coefficient list read backwards.
    pub fn reversed(&self) -> Self {
        QuarticPoly {
            a: self.e.clone(),
            b: self.d.clone(),
            c: self.c.clone(),
            d: self.b.clone(),
            e: self.a.clone(),
        }
    }

    pub fn max_abs_coeff(&self) -> S {
        crate::scalar::max_abs([&self.a, &self.b, &self.c, &self.d, &self.e])
    }

    pub fn to_f64(&self) -> QuarticPoly<f64> {
        QuarticPoly {
            a: self.a.approx(),
            b: self.b.approx(),
            c: self.c.approx(),
            d: self.d.approx(),
            e: self.e.approx(),
        }
    }

    /// The same polynomial with its coefficients' exact values.
    pub fn to_exact(&self) -> QuarticPoly<Rational> {
        QuarticPoly {
            a: self.a.to_rational(),
            b: self.b.to_rational(),
            c: self.c.to_rational(),
            d: self.d.to_rational(),
            e: self.e.to_rational(),
        }
    }
}

/// Binary quartic potential `λ40 φ1⁴ + λ31 φ1³φ2 + λ22 φ1²φ2² + λ13 φ1φ2³ + λ04 φ2⁴`.
#[derive(Debug, Clone, PartialEq)]
pub struct Couplings2<S> {
    l40: S,
    l31: S,
    l22: S,
    l13: S,
    l04: S,
}

impl<S: Scalar> Couplings2<S> {
    pub fn new(l40: S, l31: S, l22: S, l13: S, l04: S) -> Result<Self> {
        Ok(Couplings2 {
            l40: finite("lambda_40", l40)?,
            l31: finite("lambda_31", l31)?,
            l22: finite("lambda_22", l22)?,
            l13: finite("lambda_13", l13)?,
            l04: finite("lambda_04", l04)?,
        })
    }

    pub fn lambda_40(&self) -> &S {
        &self.l40
    }
    pub fn lambda_31(&self) -> &S {
        &self.l31
    }
    pub fn lambda_22(&self) -> &S {
        &self.l22
    }
    pub fn lambda_13(&self) -> &S {
        &self.l13
    }
    pub fn lambda_04(&self) -> &S {
        &self.l04
    }

    /// `[λ40, λ31, λ22, λ13, λ04]`.
    pub fn to_array(&self) -> [S; 5] {
        [
            self.l40.clone(),
            self.l31.clone(),
            self.l22.clone(),
            self.l13.clone(),
            self.l04.clone(),
        ]
    }

    pub fn from_array([l40, l31, l22, l13, l04]: [S; 5]) -> Result<Self> {
        Self::new(l40, l31, l22, l13, l04)
    }

    /// The potential on the line `φ = (t, 1)`; the couplings are already the
    /// polynomial coefficients.
    pub fn line_polynomial(&self) -> QuarticPoly<S> {
        QuarticPoly {
            a: self.l40.clone(),
            b: self.l31.clone(),
            c: self.l22.clone(),
            d: self.l13.clone(),
            e: self.l04.clone(),
        }
    }

    pub fn eval(&self, phi1: &S, phi2: &S) -> S {
        let (x, y) = (phi1.clone(), phi2.clone());
        let x2 = x.clone() * x.clone();
        let y2 = y.clone() * y.clone();
        self.l40.clone() * x2.clone() * x2.clone()
            + self.l31.clone() * x2.clone() * x.clone() * y.clone()
            + self.l22.clone() * x2 * y2.clone()
            + self.l13.clone() * x * y2.clone() * y
            + self.l04.clone() * y2.clone() * y2
    }

    pub fn scaled(&self, s: &S) -> Self {
        let k = |v: &S| v.clone() * s.clone();
        Couplings2 {
            l40: k(&self.l40),
            l31: k(&self.l31),
            l22: k(&self.l22),
            l13: k(&self.l13),
            l04: k(&self.l04),
        }
    }

    pub fn max_abs(&self) -> S {
        crate::scalar::max_abs([&self.l40, &self.l31, &self.l22, &self.l13, &self.l04])
    }

    pub fn to_f64(&self) -> Couplings2<f64> {
        Couplings2 {
            l40: self.l40.approx(),
            l31: self.l31.approx(),
            l22: self.l22.approx(),
            l13: self.l13.approx(),
            l04: self.l04.approx(),
        }
    }
}

/// 4th-order symmetric tensor on ℝ², by its five independent entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Sym4Tensor2<S> {
    v1111: S,
    v1112: S,
    v1122: S,
    v1222: S,
    v2222: S,
}

impl<S: Scalar> Sym4Tensor2<S> {
    pub fn new(v1111: S, v1112: S, v1122: S, v1222: S, v2222: S) -> Result<Self> {
        Ok(Sym4Tensor2 {
            v1111: finite("v1111", v1111)?,
            v1112: finite("v1112", v1112)?,
            v1122: finite("v1122", v1122)?,
            v1222: finite("v1222", v1222)?,
            v2222: finite("v2222", v2222)?,
        })
    }

    pub fn from_entries([a, b, c, d, e]: [S; 5]) -> Result<Self> {
        Self::new(a, b, c, d, e)
    }

    pub fn v1111(&self) -> &S {
        &self.v1111
    }
    pub fn v1112(&self) -> &S {
        &self.v1112
    }
    pub fn v1122(&self) -> &S {
        &self.v1122
    }
    pub fn v1222(&self) -> &S {
        &self.v1222
    }
    pub fn v2222(&self) -> &S {
        &self.v2222
    }

    /// `[v1111, v1112, v1122, v1222, v2222]`.
    pub fn entries(&self) -> [S; 5] {
        [
            self.v1111.clone(),
            self.v1112.clone(),
            self.v1122.clone(),
            self.v1222.clone(),
            self.v2222.clone(),
        ]
    }

    /// Entry `v_ijkl` for 1-based indices in `{1, 2}`.
    ///
    /// # Panics
    /// On an index outside `{1, 2}`.
    pub fn entry(&self, idx: [usize; 4]) -> &S {
        assert!(idx.iter().all(|&i| i == 1 || i == 2), "index out of range");
        match idx.iter().filter(|&&i| i == 2).count() {
            0 => &self.v1111,
            1 => &self.v1112,
            2 => &self.v1122,
            3 => &self.v1222,
            _ => &self.v2222,
        }
    }

    pub fn eval(&self, x: &[S; 2]) -> S {
        let [x1, x2] = x;
        let sq1 = x1.clone() * x1.clone();
        let sq2 = x2.clone() * x2.clone();
        self.v1111.clone() * sq1.clone() * sq1.clone()
            + S::int(4) * self.v1112.clone() * sq1.clone() * x1.clone() * x2.clone()
            + S::int(6) * self.v1122.clone() * sq1 * sq2.clone()
            + S::int(4) * self.v1222.clone() * x1.clone() * sq2.clone() * x2.clone()
            + self.v2222.clone() * sq2.clone() * sq2
    }

    /// The form on the line `x = (t, 1)`.
    pub fn restrict_to_line(&self) -> QuarticPoly<S> {
        QuarticPoly {
            a: self.v1111.clone(),
            b: S::int(4) * self.v1112.clone(),
            c: S::int(6) * self.v1122.clone(),
            d: S::int(4) * self.v1222.clone(),
            e: self.v2222.clone(),
        }
    }

    pub fn to_f64(&self) -> Sym4Tensor2<f64> {
        Sym4Tensor2 {
            v1111: self.v1111.approx(),
            v1112: self.v1112.approx(),
            v1122: self.v1122.approx(),
            v1222: self.v1222.approx(),
            v2222: self.v2222.approx(),
        }
    }
}

impl<S: Scalar> std::ops::Add for &Sym4Tensor2<S> {
    type Output = Sym4Tensor2<S>;
    fn add(self, rhs: &Sym4Tensor2<S>) -> Sym4Tensor2<S> {
        Sym4Tensor2 {
            v1111: self.v1111.clone() + rhs.v1111.clone(),
            v1112: self.v1112.clone() + rhs.v1112.clone(),
            v1122: self.v1122.clone() + rhs.v1122.clone(),
            v1222: self.v1222.clone() + rhs.v1222.clone(),
            v2222: self.v2222.clone() + rhs.v2222.clone(),
        }
    }
}

/// Potential of two real singlets and the Higgs doublet norm `h = |H|`:
/// `λH h⁴ + M(φ) h² + V̄(φ)` with `M(φ) = λH20 φ1² + λH11 φ1φ2 + λH02 φ2²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Couplings3<S> {
    lh: S,
    lh20: S,
    lh11: S,
    lh02: S,
    quartic: Couplings2<S>,
}

impl<S: Scalar> Couplings3<S> {
    pub fn new(lh: S, lh20: S, lh11: S, lh02: S, quartic: Couplings2<S>) -> Result<Self> {
        Ok(Couplings3 {
            lh: finite("lambda_H", lh)?,
            lh20: finite("lambda_H20", lh20)?,
            lh11: finite("lambda_H11", lh11)?,
            lh02: finite("lambda_H02", lh02)?,
            quartic,
        })
    }

    pub fn lambda_h(&self) -> &S {
        &self.lh
    }
    pub fn lambda_h20(&self) -> &S {
        &self.lh20
    }
    pub fn lambda_h11(&self) -> &S {
        &self.lh11
    }
    pub fn lambda_h02(&self) -> &S {
        &self.lh02
    }
    /// The singlet-only part `V̄`.
    pub fn quartic(&self) -> &Couplings2<S> {
        &self.quartic
    }

    /// `[λH, λH20, λH11, λH02, λ40, λ31, λ22, λ13, λ04]`.
    pub fn to_array(&self) -> [S; 9] {
        let [a, b, c, d, e] = self.quartic.to_array();
        [
            self.lh.clone(),
            self.lh20.clone(),
            self.lh11.clone(),
            self.lh02.clone(),
            a,
            b,
            c,
            d,
            e,
        ]
    }

    pub fn from_array([lh, lh20, lh11, lh02, a, b, c, d, e]: [S; 9]) -> Result<Self> {
        Self::new(lh, lh20, lh11, lh02, Couplings2::new(a, b, c, d, e)?)
    }

    pub fn eval_m(&self, phi1: &S, phi2: &S) -> S {
        self.lh20.clone() * phi1.clone() * phi1.clone()
            + self.lh11.clone() * phi1.clone() * phi2.clone()
            + self.lh02.clone() * phi2.clone() * phi2.clone()
    }

    pub fn eval(&self, phi1: &S, phi2: &S, h: &S) -> S {
        let h2 = h.clone() * h.clone();
        self.lh.clone() * h2.clone() * h2.clone()
            + self.eval_m(phi1, phi2) * h2
            + self.quartic.eval(phi1, phi2)
    }

    pub fn scaled(&self, s: &S) -> Self {
        let k = |v: &S| v.clone() * s.clone();
        Couplings3 {
            lh: k(&self.lh),
            lh20: k(&self.lh20),
            lh11: k(&self.lh11),
            lh02: k(&self.lh02),
            quartic: self.quartic.scaled(s),
        }
    }

    pub fn max_abs(&self) -> S {
        let arr = self.to_array();
        crate::scalar::max_abs(arr.iter())
    }

    pub fn to_f64(&self) -> Couplings3<f64> {
        Couplings3 {
            lh: self.lh.approx(),
            lh20: self.lh20.approx(),
            lh11: self.lh11.approx(),
            lh02: self.lh02.approx(),
            quartic: self.quartic.to_f64(),
        }
    }

    pub fn to_exact(&self) -> Couplings3<Rational> {
        let q = &self.quartic;
        Couplings3 {
            lh: self.lh.to_rational(),
            lh20: self.lh20.to_rational(),
            lh11: self.lh11.to_rational(),
            lh02: self.lh02.to_rational(),
            quartic: Couplings2 {
                l40: q.l40.to_rational(),
                l31: q.l31.to_rational(),
                l22: q.l22.to_rational(),
                l13: q.l13.to_rational(),
                l04: q.l04.to_rational(),
            },
        }
    }
}

/// Exponent patterns `(n1, n2, n3)` of the 15 independent entries, in the
/// order v1111, v2222, v3333, v1222, v1333, v1112, v1113, v2333, v2223, v1122,
/// v1133, v2233, v1223, v1123, v1233.
pub const MONOMIALS3: [[u8; 3]; 15] = [
    [4, 0, 0],
    [0, 4, 0],
    [0, 0, 4],
    [1, 3, 0],
    [1, 0, 3],
    [3, 1, 0],
    [3, 0, 1],
    [0, 1, 3],
    [0, 3, 1],
    [2, 2, 0],
    [2, 0, 2],
    [0, 2, 2],
    [1, 2, 1],
    [2, 1, 1],
    [1, 1, 2],
];

/// Number of index orderings `4! / (n1! n2! n3!)` for an exponent pattern.
pub fn multiplicity([n1, n2, n3]: [u8; 3]) -> i64 {
    let fact = |n: u8| (1..=n as i64).product::<i64>();
    24 / (fact(n1) * fact(n2) * fact(n3))
}

/// 4th-order symmetric tensor on ℝ³, by its 15 independent entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Sym4Tensor3<S> {
    entries: [S; 15],
}

impl<S: Scalar> Sym4Tensor3<S> {
    /// Entries in [`MONOMIALS3`] order.
    pub fn new(entries: [S; 15]) -> Result<Self> {
        for v in &entries {
            if !v.is_finite_value() {
                return Err(Error::NonFinite {
                    name: "tensor entry",
                });
            }
        }
        Ok(Sym4Tensor3 { entries })
    }

    pub fn entries(&self) -> &[S; 15] {
        &self.entries
    }

    /// Entry with exponent pattern `[n1, n2, n3]`, summing to 4.
    ///
    /// # Panics
    /// If the pattern does not sum to 4.
    pub fn by_exponents(&self, pattern: [u8; 3]) -> &S {
        let pos = MONOMIALS3
            .iter()
            .position(|m| *m == pattern)
            .expect("exponent pattern must sum to 4");
        &self.entries[pos]
    }

    /// Entry `v_ijkl` for 1-based indices in `{1, 2, 3}`.
    pub fn entry(&self, idx: [usize; 4]) -> &S {
        let mut pattern = [0u8; 3];
        for i in idx {
            assert!((1..=3).contains(&i), "index out of range");
            pattern[i - 1] += 1;
        }
        self.by_exponents(pattern)
    }

    pub fn eval(&self, x: &[S; 3]) -> S {
        let mut powers: [[S; 5]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| S::one()));
        for (axis, p) in powers.iter_mut().enumerate() {
            for k in 1..5 {
                p[k] = p[k - 1].clone() * x[axis].clone();
            }
        }
        MONOMIALS3
            .iter()
            .zip(&self.entries)
            .fold(S::zero(), |acc, (m, v)| {
                acc + S::int(multiplicity(*m))
                    * v.clone()
                    * powers[0][m[0] as usize].clone()
                    * powers[1][m[1] as usize].clone()
                    * powers[2][m[2] as usize].clone()
            })
    }
}

pub fn couplings2_to_tensor<S: Scalar>(c: &Couplings2<S>) -> Sym4Tensor2<S> {
    Sym4Tensor2 {
        v1111: c.l40.clone(),
        v1112: c.l31.clone() / S::int(4),
        v1122: c.l22.clone() / S::int(6),
        v1222: c.l13.clone() / S::int(4),
        v2222: c.l04.clone(),
    }
}

pub fn tensor_to_couplings2<S: Scalar>(t: &Sym4Tensor2<S>) -> Couplings2<S> {
    Couplings2 {
        l40: t.v1111.clone(),
        l31: S::int(4) * t.v1112.clone(),
        l22: S::int(6) * t.v1122.clone(),
        l13: S::int(4) * t.v1222.clone(),
        l04: t.v2222.clone(),
    }
}

pub fn couplings3_to_tensor<S: Scalar>(c: &Couplings3<S>) -> Sym4Tensor3<S> {
    let q = &c.quartic;
    let mut entries: [S; 15] = std::array::from_fn(|_| S::zero());
    let set = |entries: &mut [S; 15], pattern: [u8; 3], v: S| {
        let pos = MONOMIALS3.iter().position(|m| *m == pattern).unwrap();
        entries[pos] = v;
    };
    set(&mut entries, [4, 0, 0], q.l40.clone());
    set(&mut entries, [0, 4, 0], q.l04.clone());
    set(&mut entries, [0, 0, 4], c.lh.clone());
    set(&mut entries, [3, 1, 0], q.l31.clone() / S::int(4));
    set(&mut entries, [1, 3, 0], q.l13.clone() / S::int(4));
    set(&mut entries, [2, 2, 0], q.l22.clone() / S::int(6));
    set(&mut entries, [2, 0, 2], c.lh20.clone() / S::int(6));
    set(&mut entries, [0, 2, 2], c.lh02.clone() / S::int(6));
    set(&mut entries, [1, 1, 2], c.lh11.clone() / S::int(12));
    Sym4Tensor3 { entries }
}

pub fn eval_tensor2<S: Scalar>(t: &Sym4Tensor2<S>, x: &[S; 2]) -> S {
    t.eval(x)
}

pub fn eval_tensor3<S: Scalar>(t: &Sym4Tensor3<S>, x: &[S; 3]) -> S {
    t.eval(x)
}

pub fn restrict_to_line<S: Scalar>(t: &Sym4Tensor2<S>) -> QuarticPoly<S> {
    t.restrict_to_line()
}

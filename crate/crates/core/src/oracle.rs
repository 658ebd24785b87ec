//! Ground-truth minimizers used to cross-check the closed-form classifiers.
//!
//! Nothing here looks at discriminants or branch inequalities. Univariate
//! quartics are minimized over their critical points, binary forms over the
//! critical points of their restriction to the unit circle, and the ternary
//! potential by a one-dimensional angular sweep with an exact inner step.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Couplings3, QuarticPoly, Sym4Tensor2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactCriticalPoints,
    GridRefine,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactCriticalPoints => "ExactCriticalPoints",
            Method::GridRefine => "GridRefine",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinResult<S> {
    pub min_value: S,
    /// `[t]` for a univariate quartic; a unit (Euclidean) direction for forms.
    pub argmin: Vec<S>,
    pub method: Method,
}

/// Horner evaluation, coefficients from the highest degree down.
fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &k| acc * x + k)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len().saturating_sub(1);
    coeffs[..n]
        .iter()
        .enumerate()
        .map(|(i, &k)| k * (n - i) as f64)
        .collect()
}

fn trim_leading_zeros(coeffs: &[f64]) -> &[f64] {
    let start = coeffs
        .iter()
        .position(|&k| k != 0.0)
        .unwrap_or(coeffs.len());
    &coeffs[start..]
}

fn newton_polish(coeffs: &[f64], mut x: f64) -> f64 {
    let d = derivative(coeffs);
    let mut res = horner(coeffs, x).abs();
    for _ in 0..64 {
        let slope = horner(&d, x);
        if slope == 0.0 || res == 0.0 {
            break;
        }
        let next = x - horner(coeffs, x) / slope;
        let next_res = horner(coeffs, next).abs();
        if !next.is_finite() || next_res >= res {
            break;
        }
        x = next;
        res = next_res;
    }
    x
}

fn cluster(mut roots: Vec<f64>) -> Vec<f64> {
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|b, a| (*b - *a).abs() <= 1e-11 * a.abs().max(1.0));
    roots
}

fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a == 0.0 {
        return if b == 0.0 { Vec::new() } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        // Near-double roots still deserve a candidate at the vertex.
        return if disc.abs() <= 1e-12 * (b * b).max((4.0 * a * c).abs()) {
            vec![-b / (2.0 * a)]
        } else {
            Vec::new()
        };
    }
    let sgn = if b >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (b + sgn * disc.sqrt());
    let mut out = vec![q / a];
    if q != 0.0 {
        out.push(c / q);
    } else {
        out.push(0.0);
    }
    out
}

/// Real roots of `a x³ + b x² + c x + d`, by the depressed-cubic closed form
/// followed by a Newton polish. Falls back to lower degree when `a == 0`.
pub fn cubic_real_roots(a: f64, b: f64, c: f64, d: f64) -> Vec<f64> {
    if a == 0.0 {
        return cluster(quadratic_roots(b, c, d));
    }
    let (b1, c1, d1) = (b / a, c / a, d / a);
    let shift = b1 / 3.0;
    let p = c1 - b1 * b1 / 3.0;
    let q = 2.0 * b1 * b1 * b1 / 27.0 - b1 * c1 / 3.0 + d1;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);

    let mut ys = Vec::with_capacity(4);
    if p == 0.0 {
        ys.push((-q).cbrt());
    } else if disc > 0.0 {
        let w = -q / 2.0 - q.signum() * disc.sqrt();
        let u = w.cbrt();
        ys.push(if u == 0.0 { 0.0 } else { u - p / (3.0 * u) });
        // Position of the would-be double root; harmless if it is not a root.
        ys.push(-3.0 * q / (2.0 * p));
    } else {
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = ((3.0 * q) / (p * r)).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        for k in 0..3 {
            ys.push(r * (phi - 2.0 * PI * k as f64 / 3.0).cos());
        }
    }
    let coeffs = [a, b, c, d];
    let polished: Vec<f64> = ys
        .into_iter()
        .map(|y| newton_polish(&coeffs, y - shift))
        .filter(|x| x.is_finite())
        .collect();
    // Keep only genuine roots: the residual must be small relative to the
    // size of the terms being summed.
    let roots = polished
        .into_iter()
        .filter(|&x| {
            let scale = a.abs() * x.abs().powi(3) + b.abs() * x * x + c.abs() * x.abs() + d.abs();
            horner(&coeffs, x).abs() <= 1e-6 * scale.max(f64::MIN_POSITIVE)
        })
        .collect();
    cluster(roots)
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = horner(coeffs, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = horner(coeffs, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Real roots of a polynomial inside `[lo, hi]`, isolated between the
/// critical points of the polynomial and refined by bisection. Also returns
/// the critical points in the interval (double roots show up there).
pub fn real_roots_in(coeffs: &[f64], lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
    let coeffs = trim_leading_zeros(coeffs);
    let in_range = |x: &f64| *x >= lo && *x <= hi;
    match coeffs.len() {
        0 | 1 => return (Vec::new(), Vec::new()),
        2 => {
            return (
                vec![-coeffs[1] / coeffs[0]]
                    .into_iter()
                    .filter(in_range)
                    .collect(),
                Vec::new(),
            )
        }
        _ => {}
    }
    let d = derivative(coeffs);
    let crit: Vec<f64> = if d.len() == 4 {
        cubic_real_roots(d[0], d[1], d[2], d[3])
    } else {
        let (r, _) = real_roots_in(&d, lo, hi);
        r
    }
    .into_iter()
    .filter(in_range)
    .collect();

    let mut breaks = Vec::with_capacity(crit.len() + 2);
    breaks.push(lo);
    breaks.extend(crit.iter().copied());
    breaks.push(hi);
    let breaks = cluster(breaks);

    let mut roots = Vec::new();
    for w in breaks.windows(2) {
        let (fl, fr) = (horner(coeffs, w[0]), horner(coeffs, w[1]));
        if fl == 0.0 {
            roots.push(w[0]);
        }
        if fl != 0.0 && fr != 0.0 && (fl < 0.0) != (fr < 0.0) {
            roots.push(bisect(coeffs, w[0], w[1]));
        }
    }
    if let Some(&last) = breaks.last() {
        if horner(coeffs, last) == 0.0 {
            roots.push(last);
        }
    }
    (cluster(roots), crit)
}

/// Snap a floating critical point to an exact value when the scalar type is
/// exact and a nearby simple rational is a true root of `is_root`.
fn snap<S: Scalar>(x: f64, is_root: impl Fn(&S) -> bool) -> Option<S> {
    let candidates = S::rational_candidates(x);
    if !S::EXACT {
        return candidates.into_iter().next();
    }
    let tol = 1e-6 * x.abs().max(1.0);
    candidates
        .iter()
        .find(|r| (r.approx() - x).abs() <= tol && is_root(r))
        .cloned()
        .or_else(|| candidates.last().cloned())
}

fn argmin_by<S: Scalar, T>(items: Vec<(S, T)>) -> Option<(S, T)> {
    let mut best: Option<(S, T)> = None;
    for (v, x) in items {
        // NaN candidates never displace a finite one.
        if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
            best = Some((v, x));
        }
    }
    best
}

/// Global minimum of `P(t)` over ℝ for `a > 0`.
pub fn min_quartic_exact<S: Scalar>(p: &QuarticPoly<S>) -> Result<MinResult<S>> {
    if !p.a().is_positive() {
        return Err(Error::NonPositiveLeadingCoefficient);
    }
    let f = p.to_f64();
    let crit = cubic_real_roots(4.0 * f.a(), 3.0 * f.b(), 2.0 * f.c(), *f.d());
    let dp = |t: &S| {
        let [a, b, c, d, _] = p.coeffs();
        ((S::int(4) * a * t.clone() + S::int(3) * b) * t.clone() + S::int(2) * c) * t.clone() + d
    };
    let mut items = Vec::with_capacity(crit.len() + 1);
    for r in crit {
        if let Some(t) = snap::<S>(r, |t| dp(t).is_zero()) {
            items.push((p.eval(&t), t));
        }
    }
    if items.is_empty() {
        items.push((p.e().clone(), S::zero()));
    }
    let (min_value, t) = argmin_by(items).expect("at least one candidate");
    Ok(MinResult {
        min_value,
        argmin: vec![t],
        method: Method::ExactCriticalPoints,
    })
}

/// Numerator of the derivative of `P(t) / (1 + t²)²`, highest degree first.
fn circle_critical_numerator([a, b, c, d, e]: [f64; 5]) -> [f64; 5] {
    [
        -b,
        4.0 * a - 2.0 * c,
        3.0 * b - 3.0 * d,
        2.0 * c - 4.0 * e,
        d,
    ]
}

/// Minimum over the unit circle of the binary form whose restriction to the
/// line `(t, 1)` is `p`, i.e. `F(x1, x2) = a x1⁴ + b x1³x2 + c x1²x2² + d x1x2³ + e x2⁴`.
pub fn min_binary_form_on_circle<S: Scalar>(p: &QuarticPoly<S>) -> MinResult<S> {
    let f = p.to_f64();
    let line = f.coeffs();
    let rev = f.reversed().coeffs();
    let mut dirs: Vec<[f64; 2]> = Vec::new();
    for (coeffs, flip) in [(line, false), (rev, true)] {
        let num = circle_critical_numerator(coeffs);
        let (roots, crit) = real_roots_in(&num, -1.0, 1.0);
        for t in roots.into_iter().chain(crit).chain([-1.0, 0.0, 1.0]) {
            dirs.push(if flip { [1.0, t] } else { [t, 1.0] });
        }
    }
    let eval = |x: &[S; 2]| {
        let (x1, x2) = (&x[0], &x[1]);
        let sq1 = x1.clone() * x1.clone();
        let sq2 = x2.clone() * x2.clone();
        p.a().clone() * sq1.clone() * sq1.clone()
            + p.b().clone() * sq1.clone() * x1.clone() * x2.clone()
            + p.c().clone() * sq1 * sq2.clone()
            + p.d().clone() * x1.clone() * sq2.clone() * x2.clone()
            + p.e().clone() * sq2.clone() * sq2
    };
    let items: Vec<(S, Vec<S>)> = dirs
        .into_iter()
        .filter_map(|[x1, x2]| {
            let n = x1.hypot(x2);
            let u = [S::from_f64_lossy(x1 / n)?, S::from_f64_lossy(x2 / n)?];
            Some((eval(&u), u.to_vec()))
        })
        .collect();
    let (min_value, argmin) = argmin_by(items).expect("endpoint candidates always present");
    MinResult {
        min_value,
        argmin,
        method: Method::ExactCriticalPoints,
    }
}

/// Minimum of the tensor form over the unit circle.
pub fn min_form2_on_sphere<S: Scalar>(t: &Sym4Tensor2<S>) -> MinResult<S> {
    min_binary_form_on_circle(&t.restrict_to_line())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridConfig {
    /// Outer angular samples over `[0, 2π)`.
    pub samples: usize,
    /// Best cells refined by golden-section search.
    pub seeds: usize,
    /// Angular width at which refinement stops.
    pub theta_tol: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            samples: 4096,
            seeds: 8,
            theta_tol: 1e-10,
        }
    }
}

impl GridConfig {
    pub fn with_samples(samples: usize) -> Self {
        GridConfig {
            samples,
            ..Default::default()
        }
    }
}

/// `min over u ∈ [0,1]` of `λH u² + M u (1-u) + V̄ (1-u)²`, where `u = h²` on
/// the unit sphere. Returns `(value, u)`.
fn inner_min(lh: f64, m: f64, vbar: f64) -> (f64, f64) {
    let quad = lh - m + vbar;
    let lin = m - 2.0 * vbar;
    let mut best = if lh < vbar { (lh, 1.0) } else { (vbar, 0.0) };
    if quad > 0.0 {
        let u = -lin / (2.0 * quad);
        if u > 0.0 && u < 1.0 {
            let v = (quad * u + lin) * u + vbar;
            if v < best.0 {
                best = (v, u);
            }
        }
    }
    best
}

struct Sweep {
    lh: f64,
    m: [f64; 3],
    vbar: [f64; 5],
}

impl Sweep {
    fn new(c: &Couplings3<f64>) -> Self {
        Sweep {
            lh: *c.lambda_h(),
            m: [*c.lambda_h20(), *c.lambda_h11(), *c.lambda_h02()],
            vbar: c.quartic().to_array(),
        }
    }

    fn at(&self, theta: f64) -> (f64, f64) {
        let (s, c) = theta.sin_cos();
        let m = self.m[0] * c * c + self.m[1] * c * s + self.m[2] * s * s;
        let [l40, l31, l22, l13, l04] = self.vbar;
        let (c2, s2) = (c * c, s * s);
        let vbar =
            l40 * c2 * c2 + l31 * c2 * c * s + l22 * c2 * s2 + l13 * c * s2 * s + l04 * s2 * s2;
        inner_min(self.lh, m, vbar)
    }
}

fn golden_section(sweep: &Sweep, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = sweep.at(x1);
    let mut f2 = sweep.at(x2);
    while hi - lo > tol {
        if f1.0 <= f2.0 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = sweep.at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = sweep.at(x2);
        }
    }
    if f1.0 <= f2.0 {
        (x1, f1.0, f1.1)
    } else {
        (x2, f2.0, f2.1)
    }
}

pub fn min_potential3<S: Scalar>(c: &Couplings3<S>) -> MinResult<S> {
    min_potential3_with(c, GridConfig::default())
}

/// Minimum of the potential over the unit sphere in `(φ1, φ2, h)`, `h ≥ 0`.
///
/// The potential depends on `h` only through `h²`, so for each direction of
/// `(φ1, φ2)` the mixing with `h` is minimized exactly and only the angle is
/// searched: a uniform sweep followed by golden-section refinement of the
/// best cells. Deterministic for a fixed configuration.
pub fn min_potential3_with<S: Scalar>(c: &Couplings3<S>, cfg: GridConfig) -> MinResult<S> {
    let sweep = Sweep::new(&c.to_f64());
    let n = cfg.samples.max(3);
    let step = 2.0 * PI / n as f64;
    let grid: Vec<(f64, f64)> = (0..n).map(|i| sweep.at(i as f64 * step)).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| grid[i].0.total_cmp(&grid[j].0).then(i.cmp(&j)));

    let first = order[0];
    let mut best = (first as f64 * step, grid[first].0, grid[first].1);
    for &i in order.iter().take(cfg.seeds) {
        let centre = i as f64 * step;
        let cand = golden_section(&sweep, centre - step, centre + step, cfg.theta_tol);
        if cand.1 < best.1 {
            best = cand;
        }
    }

    let (theta, _, u) = best;
    let (s, co) = theta.sin_cos();
    let r = (1.0 - u).max(0.0).sqrt();
    let dir = [r * co, r * s, u.sqrt()];
    let x: Vec<S> = dir
        .iter()
        .map(|&v| S::from_f64_lossy(v).unwrap_or_else(S::zero))
        .collect();
    let min_value = c.eval(&x[0], &x[1], &x[2]);
    MinResult {
        min_value,
        argmin: x,
        method: Method::GridRefine,
    }
}

//! Two-parameter grid scans written as CSV.

use std::fmt::Write as _;

use quartic_pd::{parse_rational, Rational, Scalar};
use rayon::prelude::*;

use crate::engine::{self, Settings};
use crate::spec::{Number, PotentialSpec, SpecError};

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: String,
    pub min: Rational,
    pub max: Rational,
    pub steps: usize,
}

impl Axis {
    /// Parses `name:min:max:steps`.
    pub fn parse(text: &str) -> Result<Axis, SpecError> {
        let bad = |why: &str| SpecError::Invalid(format!("axis {text:?}: {why}"));
        let parts: Vec<&str> = text.split(':').collect();
        let [name, min, max, steps] = parts[..] else {
            return Err(bad("expected name:min:max:steps"));
        };
        let min = parse_rational(min).map_err(|_| bad("bad min"))?;
        let max = parse_rational(max).map_err(|_| bad("bad max"))?;
        let steps: usize = steps.parse().map_err(|_| bad("bad steps"))?;
        if steps < 2 {
            return Err(bad("steps must be at least 2"));
        }
        Ok(Axis {
            name: name.to_string(),
            min,
            max,
            steps,
        })
    }

    /// The `i`-th grid value, computed exactly.
    pub fn value(&self, i: usize) -> Rational {
        let span = self.max.clone() - self.min.clone();
        self.min.clone() + span * Rational::new(i.into(), (self.steps - 1).into())
    }
}

pub struct Scan {
    pub base: PotentialSpec,
    pub axis1: Axis,
    pub axis2: Axis,
}

impl Scan {
    pub fn new(base_text: &str, axis1: Axis, axis2: Axis) -> Result<Scan, SpecError> {
        if axis1.name == axis2.name {
            return Err(SpecError::Invalid(format!("both axes name {}", axis1.name)));
        }
        let base =
            PotentialSpec::parse_partial(base_text, &[axis1.name.as_str(), axis2.name.as_str()])?;
        let keys = base.model.keys();
        for a in [&axis1, &axis2] {
            if !keys.contains(&a.name.as_str()) {
                return Err(SpecError::Invalid(format!(
                    "axis {} is not a coupling of {}",
                    a.name,
                    base.model.as_str()
                )));
            }
        }
        Ok(Scan { base, axis1, axis2 })
    }

    fn cell(&self, i: usize, j: usize, set: &Settings) -> String {
        let (x, y) = (self.axis1.value(i), self.axis2.value(j));
        let mut spec = self.base.clone();
        spec.couplings
            .insert(self.axis1.name.clone(), Number::from_exact(x.clone()));
        spec.couplings
            .insert(self.axis2.name.clone(), Number::from_exact(y.clone()));
        let out = engine::check(&spec, set);
        format!(
            "{},{},{},{},{}\n",
            x.approx(),
            y.approx(),
            out.class.code(),
            out.certificate.label,
            out.confidence.as_str()
        )
    }

    /// The full CSV document. Rows run over axis 2 fastest; the result does
    /// not depend on the number of workers.
    pub fn run(&self, set: &Settings, jobs: usize) -> String {
        let (n1, n2) = (self.axis1.steps, self.axis2.steps);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool");
        let rows: Vec<String> = pool.install(|| {
            (0..n1 * n2)
                .into_par_iter()
                .map(|k| self.cell(k / n2, k % n2, set))
                .collect()
        });
        let mut csv = String::with_capacity(rows.iter().map(String::len).sum::<usize>() + 64);
        writeln!(csv, "axis1,axis2,verdict,certificate,confidence").unwrap();
        rows.iter().for_each(|r| csv.push_str(r));
        csv
    }
}

use std::fmt;

/// Definiteness class of a quartic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    PositiveDefinite,
    /// Nonnegative everywhere with a nontrivial zero.
    PositiveSemidefiniteOnly,
    Indefinite,
    /// Neither the closed-form branches nor the numeric fallback could decide.
    AnalyticInconclusive,
}

impl Class {
    /// Integer code used for process exit status and scan output.
    pub fn code(self) -> i32 {
        match self {
            Class::PositiveDefinite => 0,
            Class::PositiveSemidefiniteOnly => 1,
            Class::Indefinite => 2,
            Class::AnalyticInconclusive => 3,
        }
    }

    pub fn from_code(code: i32) -> Option<Class> {
        Some(match code {
            0 => Class::PositiveDefinite,
            1 => Class::PositiveSemidefiniteOnly,
            2 => Class::Indefinite,
            3 => Class::AnalyticInconclusive,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Class::PositiveDefinite => "PositiveDefinite",
            Class::PositiveSemidefiniteOnly => "PositiveSemidefiniteOnly",
            Class::Indefinite => "Indefinite",
            Class::AnalyticInconclusive => "AnalyticInconclusive",
        }
    }

    pub fn is_psd(self) -> bool {
        matches!(
            self,
            Class::PositiveDefinite | Class::PositiveSemidefiniteOnly
        )
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Confidence {
    Analytic,
    NumericOracle,
}

impl Confidence {
    pub fn as_str(self) -> &'static str {
        match self {
            Confidence::Analytic => "Analytic",
            Confidence::NumericOracle => "NumericOracle",
        }
    }
}

impl fmt::Display for Confidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Stable identifier of the branch that decided a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub label: String,
    /// Set when some floating-point comparison on the decision path fell
    /// inside the tolerance band. Never set in exact arithmetic.
    pub boundary: bool,
}

impl Certificate {
    pub fn new(label: impl Into<String>, boundary: bool) -> Self {
        Certificate {
            label: label.into(),
            boundary,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)?;
        if self.boundary {
            f.write_str(" [boundary]")?;
        }
        Ok(())
    }
}

use std::f64::consts::PI;
use std::fmt;

use crate::SignOptError;

/// Which search strategy produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Exhaustive,
    MeetInMiddle,
    BlockPattern,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Exhaustive => "exhaustive",
            Engine::MeetInMiddle => "meet_in_middle",
            Engine::BlockPattern => "block_pattern",
        })
    }
}

/// A ±1 vector of length n/4 indexed by k, stored with canonical global
/// sign: the first entry is +1. Flipping every entry negates the signed
/// sum and the objective takes an absolute value, so each orbit keeps
/// one representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector {
    n: u32,
    b: Vec<i8>,
}

impl SignVector {
    pub fn new(n: u32, entries: Vec<i8>) -> Result<Self, SignOptError> {
        if !n.is_power_of_two() || n < 4 {
            return Err(SignOptError::Parameter(format!(
                "sign vectors are defined for powers of two n >= 4, got n = {n}"
            )));
        }
        let want = (n / 4) as usize;
        if entries.len() != want {
            return Err(SignOptError::Parameter(format!(
                "sign vector for n = {n} must have {want} entries, got {}",
                entries.len()
            )));
        }
        if entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(SignOptError::Parameter(format!(
                "sign vector entries must be +1 or -1, got {entries:?}"
            )));
        }
        let b = if entries[0] < 0 {
            entries.iter().map(|e| -e).collect()
        } else {
            entries
        };
        Ok(Self { n, b })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[i8] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// Σ b_k sin((2k+1)π/n), summed in ascending k so the value is
    /// reproducible bit for bit.
    pub fn signed_sum(&self) -> f64 {
        let nf = f64::from(self.n);
        self.b.iter().enumerate().fold(0.0, |acc, (k, &s)| {
            acc + f64::from(s) * ((2 * k + 1) as f64 * PI / nf).sin()
        })
    }

    /// Entries with the global sign fixed so the signed sum is ≤ 0,
    /// the orientation in which the turning angle comes out positive.
    pub fn oriented_entries(&self) -> Vec<i8> {
        if self.signed_sum() > 0.0 {
            self.b.iter().map(|e| -e).collect()
        } else {
            self.b.clone()
        }
    }
}

/// Outcome of a sign-vector search.
#[derive(Debug, Clone)]
pub struct SignSearchResult {
    pub best: SignVector,
    pub m_value: f64,
    pub sigma: f64,
    pub engine: Engine,
    /// True only when the engine guarantees a global optimum.
    pub optimal: bool,
}

impl SignSearchResult {
    pub(crate) fn from_vector(best: SignVector, engine: Engine, optimal: bool) -> Self {
        let m_value = best.signed_sum().abs();
        let sigma = 2.0 * (PI / f64::from(best.n())).sin() * m_value;
        Self {
            best,
            m_value,
            sigma,
            engine,
            optimal,
        }
    }
}

//! Normal-form data of one fixed-point component.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn of(x: f64) -> Option<Sign> {
        if x > 0.0 {
            Some(Sign::Plus)
        } else if x < 0.0 {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Weights `λ_1..λ_{d/2}` (positive first) of `J = J(F) + ½ Σ λ_j |w_j|²`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalModel {
    pub weights: Vec<i64>,
    pub n_plus: usize,
    pub n_minus: usize,
    pub j_f: f64,
}

impl LocalModel {
    pub fn new(weights: Vec<i64>, j_f: f64) -> Result<Self> {
        if weights.is_empty() {
            return domain("a local model needs at least one weight");
        }
        if weights.iter().any(|&w| w == 0) {
            return domain("weights must be nonzero");
        }
        let pos = weights.iter().take_while(|&&w| w > 0).count();
        if weights[pos..].iter().any(|&w| w > 0) {
            return domain("weights must be ordered positive-first");
        }
        if !j_f.is_finite() {
            return domain("J(F) must be finite");
        }
        let n_plus = 2 * pos;
        let n_minus = 2 * (weights.len() - pos);
        Ok(Self { weights, n_plus, n_minus, j_f })
    }

    pub fn codim(&self) -> usize {
        self.n_plus + self.n_minus
    }

    /// `Λ_F = Π |λ_j|`.
    pub fn lambda(&self) -> i64 {
        self.weights.iter().map(|w| w.abs()).product()
    }

    pub fn is_definite(&self) -> bool {
        self.n_plus == 0 || self.n_minus == 0
    }

    /// Sign of a definite form; `None` for indefinite models.
    pub fn definite_sign(&self) -> Option<Sign> {
        match (self.n_plus, self.n_minus) {
            (_, 0) => Some(Sign::Plus),
            (0, _) => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn l_plus(&self) -> usize {
        self.n_plus / 2
    }

    pub fn l_minus(&self) -> usize {
        self.n_minus / 2
    }

    /// `|λ|` of the weight acting on coordinate `i` of `R^d`.
    pub fn coordinate_weight(&self, i: usize) -> i64 {
        self.weights[i / 2].abs()
    }

    /// `ζ_F = ζ − J(F)`.
    pub fn zeta_f(&self, zeta: f64) -> f64 {
        zeta - self.j_f
    }

    /// Order `j_F = d/2 − 1` of the singular leading term.
    pub fn j_f_order(&self) -> usize {
        self.codim() / 2 - 1
    }
}

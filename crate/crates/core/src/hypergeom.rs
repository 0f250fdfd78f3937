//! Generalized hypergeometric series ₚF_q as exact coefficient streams (never
//! numerically summed), with termination detection and parameter
//! cancellation.

use crate::exact::{factorial, pochhammer, to_rat, Rat};
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricSpec {
    upper: Vec<Rat>,
    lower: Vec<Rat>,
    /// the series is read at (argument_scale · t)
    argument_scale: Rat,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergeomError {
    #[error("lower parameter {0} is a nonpositive integer and no upper parameter terminates the series strictly earlier")]
    UnterminatedLower(Rat),
}

/// −a for a nonpositive integer parameter: the index from which its
/// Pochhammer factors vanish.
fn termination_index(p: &Rat) -> Option<usize> {
    (p.is_integer() && !p.is_positive()).then(|| (-p).to_integer().to_usize().unwrap())
}

fn lower_params_terminated(upper: &[Rat], lower: &[Rat]) -> Result<(), HypergeomError> {
    for b in lower {
        if let Some(db) = termination_index(b) {
            let witnessed = upper
                .iter()
                .filter_map(termination_index)
                .any(|da| da < db);
            if !witnessed {
                return Err(HypergeomError::UnterminatedLower(b.clone()));
            }
        }
    }
    Ok(())
}

impl HypergeometricSpec {
    pub fn new(
        upper: Vec<Rat>,
        lower: Vec<Rat>,
        argument_scale: Rat,
    ) -> Result<Self, HypergeomError> {
        lower_params_terminated(&upper, &lower)?;
        Ok(HypergeometricSpec { upper, lower, argument_scale })
    }

    pub fn upper(&self) -> &[Rat] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rat] {
        &self.lower
    }

    pub fn argument_scale(&self) -> &Rat {
        &self.argument_scale
    }

    /// Coefficient of t^j: ∏(aᵢ)_j / (∏(bᵢ)_j · j!) · scale^j. The numerator
    /// is checked first, so a terminated stream stays at exact zero.
    pub fn coefficient(&self, j: usize) -> Rat {
        let mut num = Rat::one();
        for a in &self.upper {
            num *= pochhammer(a, j);
        }
        if num.is_zero() {
            return num;
        }
        let mut den = to_rat(&factorial(j));
        for b in &self.lower {
            den *= pochhammer(b, j);
        }
        assert!(
            !den.is_zero(),
            "hypergeometric stream: lower Pochhammer vanished before termination (blocked at construction)"
        );
        num / den * self.argument_scale.pow(j as i32)
    }

    pub fn coefficients(&self, order: usize) -> Vec<Rat> {
        (0..=order).map(|j| self.coefficient(j)).collect()
    }

    /// Least d with −d among the upper parameters: all coefficients beyond d
    /// vanish. None when no upper parameter is a nonpositive integer.
    pub fn termination_degree(&self) -> Option<usize> {
        self.upper.iter().filter_map(termination_index).min()
    }

    /// Cancel matched upper/lower parameter pairs (multiset cancellation),
    /// but only where the leftover lower parameters stay validly terminated —
    /// so the coefficient stream is unchanged for every j.
    pub fn reduce(&self) -> HypergeometricSpec {
        let mut upper = self.upper.clone();
        let mut lower = self.lower.clone();
        'scan: loop {
            for (ui, a) in upper.iter().enumerate() {
                if let Some(li) = lower.iter().position(|b| b == a) {
                    let mut u2 = upper.clone();
                    let mut l2 = lower.clone();
                    u2.remove(ui);
                    l2.remove(li);
                    if lower_params_terminated(&u2, &l2).is_ok() {
                        upper = u2;
                        lower = l2;
                        continue 'scan;
                    }
                }
            }
            break;
        }
        HypergeometricSpec { upper, lower, argument_scale: self.argument_scale.clone() }
    }
}

/// ₖF_{k−1}(r, …, r+k−1; 2, …, k; t): the stream of 𝔑_k(r, ·).
pub fn narayana_series_spec(k: i64, r: i64) -> HypergeometricSpec {
    assert!(k >= 1 && r >= 1, "narayana_series_spec: need k, r >= 1");
    let upper = (0..k).map(|i| to_rat(&crate::exact::int(r + i))).collect();
    let lower = (2..=k).map(|b| to_rat(&crate::exact::int(b))).collect();
    HypergeometricSpec::new(upper, lower, Rat::one()).expect("positive parameters are always valid")
}

/// ₖF_{k−1}(−r, …, −r−k+1; 2, …, k; (−1)^k t): the stream of 𝒩_k(r, ·).
pub fn simple_polynomial_spec(k: i64, r: i64) -> HypergeometricSpec {
    assert!(k >= 1 && r >= 1, "simple_polynomial_spec: need k, r >= 1");
    let upper = (0..k).map(|i| to_rat(&crate::exact::int(-r - i))).collect();
    let lower = (2..=k).map(|b| to_rat(&crate::exact::int(b))).collect();
    let scale = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
    HypergeometricSpec::new(upper, lower, scale).expect("positive lower parameters are always valid")
}

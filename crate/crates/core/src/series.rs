//! Formal power series truncated at a fixed order J — the common currency of
//! the termwise identity checks. Operations never silently extend past J.

use crate::exact::{binomial_rat, Rat};
use crate::poly::Poly;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>, // exactly order+1 entries
}

impl Series {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Truncate or zero-pad a polynomial to the requested order.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series::from_fn(order, |i| p.coeff(i))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &Rat {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Series) -> Series {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        let mut out = vec![Rat::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(self.coeffs.len() - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    /// (1−t)^p for an exponent of either sign (or fractional), to the given
    /// order: coefficient of t^i is binomial(p, i)·(−1)^i.
    pub fn binomial_power(p: &Rat, order: usize) -> Series {
        Series::from_fn(order, |i| {
            let c = binomial_rat(p, i);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// Multiply by (1−t)^p.
    pub fn scale_binomial_power(&self, p: &Rat) -> Series {
        self.mul(&Series::binomial_power(p, self.order()))
    }

    /// Drop trailing zeros and reinterpret as a polynomial (meaningful when
    /// the series is known to terminate within its order).
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_mismatch(&self, rhs: &Series) -> Option<usize> {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        self.coeffs.iter().zip(&rhs.coeffs).position(|(a, b)| a != b)
    }
}

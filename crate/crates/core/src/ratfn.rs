//! Rational functions in one variable, kept in lowest terms with a monic
//! denominator. Only exercised symbolically (the G_l functions and the Q(t)
//! assembly); no evaluation at poles ever happens.

use crate::poly::Poly;
use std::fmt;
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly, // monic, nonzero, coprime to num
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFn { num, den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let num = num.divrem(&g).0;
        let den = den.divrem(&g).0;
        let lead = den.leading().expect("nonzero denominator").clone();
        RatFn { num: num.scale(&lead.recip()), den: den.scale(&lead.recip()) }
    }

    pub fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFn { num: Poly::one(), den: Poly::one() }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Some(numerator) when the denominator has cancelled to 1.
    pub fn into_polynomial(self) -> Option<Poly> {
        self.is_polynomial().then_some(self.num)
    }

    /// f(−t).
    pub fn compose_neg(&self) -> RatFn {
        RatFn::new(self.num.compose_neg(), self.den.compose_neg())
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn normalization() {
        // (2t^2 - 2) / (4t - 4) = (t+1)/2
        let f = RatFn::new(Poly::from_ints(&[-2, 0, 2]), Poly::from_ints(&[-4, 4]));
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &Poly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));

        let g = RatFn::new(Poly::from_ints(&[1]), Poly::from_ints(&[0, 2]));
        assert_eq!(g.denominator(), &Poly::from_ints(&[0, 1]));
        assert_eq!(g.numerator(), &Poly::from_coeffs(vec![rat(1, 2)]));
    }

    #[test]
    fn field_arithmetic() {
        let t = RatFn::from(Poly::x());
        let one = RatFn::one();
        // 1/(t-1) + 1/(t+1) = 2t/(t^2-1)
        let a = RatFn::new(Poly::one(), Poly::from_ints(&[-1, 1]));
        let b = RatFn::new(Poly::one(), Poly::from_ints(&[1, 1]));
        let s = &a + &b;
        assert_eq!(s.numerator(), &Poly::from_ints(&[0, 2]));
        assert_eq!(s.denominator(), &Poly::from_ints(&[-1, 0, 1]));

        let diff = &(&t * &a) - &(&t * &b);
        // t/(t-1) - t/(t+1) = 2t/(t^2-1)
        assert_eq!(diff, s);
        assert_eq!(&(&s - &s) + &one, one);
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn cancellation_to_polynomial() {
        // (t^2 + 2t + 1)/(t + 1) = t + 1
        let f = RatFn::new(Poly::from_ints(&[1, 2, 1]), Poly::from_ints(&[1, 1]));
        assert_eq!(f.into_polynomial(), Some(Poly::from_ints(&[1, 1])));
    }

    #[test]
    fn compose_neg_roundtrip() {
        let f = RatFn::new(Poly::from_ints(&[1, 2, 3]), Poly::from_ints(&[-5, 1, 7]));
        assert_eq!(f.compose_neg().compose_neg(), f);
        // denominator re-normalized monic after negation
        let g = RatFn::new(Poly::from_ints(&[1]), Poly::from_ints(&[2, 1]));
        let gn = g.compose_neg();
        assert_eq!(gn.denominator(), &Poly::from_ints(&[-2, 1]));
        assert_eq!(gn.numerator(), &Poly::from_ints(&[-1]));
    }
}

//! Arbitrary-precision scalars and the combinatorial primitives shared by
//! every other module: generalized binomials, multiset coefficients, rising
//! factorials, and Stirling numbers of the second kind.

use num::{One, Signed, ToPrimitive, Zero};

pub type Int = num::BigInt;
pub type Rat = num::BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

pub fn to_rat(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Generalized binomial coefficient: n(n−1)⋯(n−k+1)/k! for k ≥ 0 (any sign of
/// n), and 0 for k < 0.
pub fn binomial(n: impl Into<Int>, k: impl Into<Int>) -> Int {
    let n: Int = n.into();
    let k: Int = k.into();
    if k.is_negative() || (!n.is_negative() && k > n) {
        return Int::zero();
    }
    let k = k.to_usize().expect("binomial: k too large to enumerate");
    let mut num = Int::one();
    let mut factor = n;
    for _ in 0..k {
        num *= &factor;
        factor -= 1;
    }
    // exact: a falling factorial of length k is divisible by k!
    num / factorial(k)
}

/// Number of multisets of size b drawn from a types: C(a+b−1, b).
pub fn multiset(a: impl Into<Int>, b: impl Into<Int>) -> Int {
    let b: Int = b.into();
    assert!(!b.is_negative(), "multiset: selection count must be nonnegative, got {b}");
    let a: Int = a.into();
    binomial(a + &b - 1, b)
}

/// Rising factorial (a)_k = a(a+1)⋯(a+k−1); (a)_0 = 1.
pub fn pochhammer(a: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += Rat::one();
    }
    acc
}

/// Generalized binomial with rational top argument: x(x−1)⋯(x−k+1)/k!.
/// Powers (1−t)^p for fractional p run through this.
pub fn binomial_rat(x: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    let mut factor = x.clone();
    for _ in 0..k {
        acc *= &factor;
        factor -= Rat::one();
    }
    acc / to_rat(&factorial(k))
}

/// Stirling number of the second kind via S(n,k) = k·S(n−1,k) + S(n−1,k−1).
pub fn stirling2(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut row: Vec<Int> = vec![Int::zero(); k + 1];
    row[0] = Int::one();
    for m in 1..=n {
        for i in (1..=k.min(m)).rev() {
            let carried = row[i - 1].clone();
            row[i] = &row[i] * i + carried;
        }
        row[0] = Int::zero();
    }
    row[k].clone()
}

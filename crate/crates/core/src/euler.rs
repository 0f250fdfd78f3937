//! The generalized hypergeometric Euler transform: σ-coefficients, Stirling-
//! weighted A-coefficients, the symbolic G_l rational functions, the Q(t)
//! polynomial, and the resulting product formula for k-Narayana numbers.
//!
//! Everything downstream of Q is evaluated root-free: the transformed series
//! needs ∏(ηᵢ+j)/ηᵢ over the zeros ηᵢ of Q, which equals Q(−j)/Q(0) without
//! ever extracting a root. Floating-point roots exist only for display.

use crate::exact::{factorial, int, pochhammer, rat, stirling2, to_rat, Rat};
use crate::hypergeom::HypergeometricSpec;
use crate::poly::Poly;
use crate::ratfn::RatFn;
use crate::series::Series;
use num::complex::Complex64;
use num::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EulerError {
    #[error("invalid Euler input: {0}")]
    InvalidInput(String),
    #[error("Q(0) = 0: the transform needs nonvanishing zeros of Q")]
    ZeroConstantTerm,
}

/// Parameters (a, b, c; f₁,…,f_r with multiplicities m₁,…,m_r) of the
/// transform. Construction checks the nonvanishing conditions that keep the
/// transformed side well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerInput {
    a: Rat,
    b: Rat,
    c: Rat,
    f: Vec<Rat>,
    m: Vec<usize>,
}

impl EulerInput {
    pub fn new(a: Rat, b: Rat, c: Rat, f: Vec<Rat>, m: Vec<usize>) -> Result<Self, EulerError> {
        if f.len() != m.len() {
            return Err(EulerError::InvalidInput(format!(
                "{} parameters f but {} multiplicities",
                f.len(),
                m.len()
            )));
        }
        if m.iter().any(|&mi| mi == 0) {
            return Err(EulerError::InvalidInput("multiplicities must be positive".into()));
        }
        let input = EulerInput { a, b, c, f, m };
        let mt = input.m_total();
        let mt_rat = to_rat(&int(mt as i64));
        let requirements = [
            ("(c-a-m)_m", &input.c - &input.a - &mt_rat),
            ("(c-b-m)_m", &input.c - &input.b - &mt_rat),
            ("(1+a+b-c)_m", Rat::one() + &input.a + &input.b - &input.c),
        ];
        for (label, base) in requirements {
            if pochhammer(&base, mt).is_zero() {
                return Err(EulerError::InvalidInput(format!("{label} vanishes")));
            }
        }
        Ok(input)
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn f(&self) -> &[Rat] {
        &self.f
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn m_total(&self) -> usize {
        self.m.iter().sum()
    }

    /// The left-hand ᵣ₊₂F_{r+1}(a, b, f₁+m₁,…; c, f₁,…; t) of the transform.
    pub fn lhs_spec(&self) -> Result<HypergeometricSpec, EulerError> {
        let mut upper = vec![self.a.clone(), self.b.clone()];
        for (fi, &mi) in self.f.iter().zip(&self.m) {
            upper.push(fi + to_rat(&int(mi as i64)));
        }
        let mut lower = vec![self.c.clone()];
        lower.extend(self.f.iter().cloned());
        HypergeometricSpec::new(upper, lower, Rat::one())
            .map_err(|e| EulerError::InvalidInput(format!("left-hand series: {e}")))
    }
}

/// σ(x) = (f₁+x)_{m₁} ⋯ (f_r+x)_{m_r}, expanded; σ_j is the coefficient of x^j.
pub fn sigma_coeffs(f: &[Rat], m: &[usize]) -> Poly {
    assert_eq!(f.len(), m.len(), "sigma_coeffs: f and m lengths differ");
    let mut acc = Poly::one();
    for (fi, &mi) in f.iter().zip(m) {
        for s in 0..mi {
            acc = &acc * &Poly::from_coeffs(vec![fi + to_rat(&int(s as i64)), Rat::one()]);
        }
    }
    acc
}

/// A_k = Σ_{j=k}^{m} S(j,k)·σ_j for k = 0..=m.
pub fn a_coeffs(sigma: &Poly) -> Vec<Rat> {
    let m = sigma.degree().expect("sigma is a product of monic factors, never zero");
    (0..=m)
        .map(|k| (k..=m).map(|j| to_rat(&stirling2(j, k)) * sigma.coeff(j)).sum())
        .collect()
}

/// base(t)·(base(t)+1)⋯(base(t)+k−1) for a polynomial base.
fn poch_poly(base: &Poly, k: usize) -> Poly {
    let mut acc = Poly::one();
    let mut shifted = base.clone();
    for _ in 0..k {
        acc = &acc * &shifted;
        shifted = &shifted + &Poly::one();
    }
    acc
}

/// c₀ − t (the linear polynomials every Pochhammer in t is built from).
fn const_minus_t(c0: Rat) -> Poly {
    Poly::from_coeffs(vec![c0, -Rat::one()])
}

/// G_l(t) = ₃F₂(l−m, l−t, 1−c−t; 1+b+l−c−t, 1+a+l−c−t; 1), a terminating sum
/// of m−l+1 terms, expanded symbolically as a rational function of t.
pub fn g_function(input: &EulerInput, l: usize) -> RatFn {
    let m = input.m_total();
    assert!(l <= m, "g_function: index must satisfy 0 <= l <= m_total");
    let l_rat = to_rat(&int(l as i64));
    let l_minus_m = &l_rat - to_rat(&int(m as i64));
    let one = Rat::one();
    let mut acc = RatFn::zero();
    for s in 0..=(m - l) {
        let scalar = pochhammer(&l_minus_m, s) / to_rat(&factorial(s));
        let num = &poch_poly(&const_minus_t(l_rat.clone()), s)
            * &poch_poly(&const_minus_t(&one - &input.c), s);
        let den = &poch_poly(&const_minus_t(&one + &input.b + &l_rat - &input.c), s)
            * &poch_poly(&const_minus_t(&one + &input.a + &l_rat - &input.c), s);
        acc = &acc + &RatFn::new(num.scale(&scalar), den);
    }
    acc
}

/// Q(t) together with the input it came from.
#[derive(Debug, Clone)]
pub struct QPolynomial {
    poly: Poly,
    input: EulerInput,
}

/// Q(t) = Σ_{l=0}^{m} (−1)^l A_l (a)_l (b)_l (t)_l (c−a−m−t)_{m−l} (c−b−m−t)_{m−l} G_l(−t).
/// The alternating sum of rational functions must cancel to a polynomial of
/// degree ≤ m_total; anything else is an implementation bug and panics.
pub fn q_polynomial(input: &EulerInput) -> QPolynomial {
    let m = input.m_total();
    let sigma = sigma_coeffs(&input.f, &input.m);
    let a_k = a_coeffs(&sigma);
    let mt_rat = to_rat(&int(m as i64));
    let ca = &input.c - &input.a - &mt_rat;
    let cb = &input.c - &input.b - &mt_rat;
    let mut acc = RatFn::zero();
    for l in 0..=m {
        let mut scalar = a_k[l].clone() * pochhammer(&input.a, l) * pochhammer(&input.b, l);
        if scalar.is_zero() {
            continue;
        }
        if l % 2 == 1 {
            scalar = -scalar;
        }
        let mut poly_part = poch_poly(&Poly::x(), l);
        poly_part = &poly_part * &poch_poly(&const_minus_t(ca.clone()), m - l);
        poly_part = &poly_part * &poch_poly(&const_minus_t(cb.clone()), m - l);
        let term = &RatFn::from(poly_part.scale(&scalar)) * &g_function(input, l).compose_neg();
        acc = &acc + &term;
    }
    let poly = acc.into_polynomial().expect("Q(t) did not cancel to a polynomial");
    assert!(
        poly.degree().unwrap_or(0) <= m,
        "Q(t) degree {} exceeds m_total {m}",
        poly.degree().unwrap_or(0)
    );
    QPolynomial { poly, input: input.clone() }
}

impl QPolynomial {
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn input(&self) -> &EulerInput {
        &self.input
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn vanishes_at_zero(&self) -> bool {
        self.poly.coeff(0).is_zero()
    }

    /// ∏(ηᵢ+j)/ηᵢ over the zeros of Q, computed as Q(−j)/Q(0).
    pub fn eta_ratio(&self, j: usize) -> Result<Rat, EulerError> {
        let q0 = self.poly.coeff(0);
        if q0.is_zero() {
            return Err(EulerError::ZeroConstantTerm);
        }
        Ok(self.poly.eval_int(-(j as i64)) / q0)
    }

    /// Coefficient of t^j in the transformed ₘ₊₂F_{m+1} series:
    /// (c−a−m)_j (c−b−m)_j / ((c)_j j!) · Q(−j)/Q(0).
    pub fn transformed_coefficient(&self, j: usize) -> Result<Rat, EulerError> {
        let eta = self.eta_ratio(j)?;
        let mt_rat = to_rat(&int(self.input.m_total() as i64));
        let num = pochhammer(&(&self.input.c - &self.input.a - &mt_rat), j)
            * pochhammer(&(&self.input.c - &self.input.b - &mt_rat), j);
        if num.is_zero() {
            return Ok(Rat::zero());
        }
        let den = pochhammer(&self.input.c, j) * to_rat(&factorial(j));
        if den.is_zero() {
            return Err(EulerError::InvalidInput(format!(
                "lower parameter c = {} reaches a nonpositive integer by order {j}",
                self.input.c
            )));
        }
        Ok(num / den * eta)
    }

    pub fn transformed_series(&self, order: usize) -> Result<Series, EulerError> {
        let coeffs = (0..=order)
            .map(|j| self.transformed_coefficient(j))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series::new(coeffs))
    }
}

/// Convenience free function: build Q once and read off one coefficient.
pub fn transformed_coefficient(input: &EulerInput, j: usize) -> Result<Rat, EulerError> {
    q_polynomial(input).transformed_coefficient(j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityCheck {
    Verified,
    MismatchAt(usize),
}

impl IdentityCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, IdentityCheck::Verified)
    }
}

/// Termwise check to the given order that
/// ᵣ₊₂F_{r+1}(a,b,f+m; c,f; t) = (1−t)^{c−a−b−m} ₘ₊₂F_{m+1}(…; t).
pub fn verify_euler_identity(input: &EulerInput, order: usize) -> Result<IdentityCheck, EulerError> {
    let lhs = Series::new(input.lhs_spec()?.coefficients(order));
    let transformed = q_polynomial(input).transformed_series(order)?;
    let exponent =
        &input.c - &input.a - &input.b - to_rat(&int(input.m_total() as i64));
    let rhs = transformed.scale_binomial_power(&exponent);
    Ok(match lhs.first_mismatch(&rhs) {
        None => IdentityCheck::Verified,
        Some(j) => IdentityCheck::MismatchAt(j),
    })
}

/// The parameter assignment that makes the transform produce k-Narayana
/// numbers: c = 2, a = r+k−2, b = r+k−1, fᵢ = i and mᵢ = r−3 for i = 3,…,k.
/// k = 2 is the classical empty-f Euler transform.
pub fn narayana_euler_input(k: i64, r: i64) -> EulerInput {
    assert!(k >= 2, "narayana_euler_input: need k >= 2");
    assert!(k == 2 || r >= 4, "narayana_euler_input: k >= 3 needs r >= 4 for positive multiplicities");
    let f: Vec<Rat> = (3..=k).map(|i| to_rat(&int(i))).collect();
    let m = vec![(r - 3) as usize; f.len()];
    EulerInput::new(
        to_rat(&int(r + k - 2)),
        to_rat(&int(r + k - 1)),
        rat(2, 1),
        f,
        m,
    )
    .expect("the Narayana assignment always meets the nonvanishing requirements")
}

/// The product formula evaluated exactly; equals sulanke_narayana(k, r−1, j).
pub fn narayana_product_formula(k: i64, r: i64, j: i64) -> Result<crate::exact::Int, EulerError> {
    assert!(j >= 0, "narayana_product_formula: j must be nonnegative");
    let q = q_polynomial(&narayana_euler_input(k, r));
    let value = q.transformed_coefficient(j as usize)?;
    assert!(
        value.is_integer(),
        "narayana_product_formula: non-integral value at k={k}, r={r}, j={j}"
    );
    Ok(value.to_integer())
}

/// A zero of Q with the relative residual of the float evaluation.
#[derive(Debug, Clone, Copy)]
pub struct NumericRoot {
    pub value: Complex64,
    pub residual: f64,
}

/// Display-only floating approximations of the zeros of Q (Durand–Kerner;
/// a degree-1 Q is solved exactly). Sorted by real part for determinism.
pub fn numeric_roots(q: &QPolynomial) -> Vec<NumericRoot> {
    let deg = match q.poly().degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let coeffs: Vec<f64> = q
        .poly()
        .coeffs()
        .iter()
        .map(|c| c.to_f64().expect("Q coefficient overflowed f64 range"))
        .collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    // |Q|(|z|): the natural scale for a relative residual at z
    let scale_at = |z: Complex64| {
        let r = z.norm();
        let mut acc = 0.0f64;
        let mut power = 1.0f64;
        for c in &coeffs {
            acc += c.abs() * power;
            power *= r;
        }
        acc.max(f64::MIN_POSITIVE)
    };
    let mut roots: Vec<Complex64>;
    if deg == 1 {
        let exact = -(q.poly().coeff(0) / q.poly().coeff(1));
        roots = vec![Complex64::new(exact.to_f64().unwrap(), 0.0)];
    } else {
        let lead = *coeffs.last().unwrap();
        let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
        let eval_monic = |z: Complex64| {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in monic.iter().rev() {
                acc = acc * z + c;
            }
            acc
        };
        let seed = Complex64::new(0.4, 0.9);
        roots = (0..deg).map(|i| seed.powu(i as u32 + 1)).collect();
        for _ in 0..500 {
            let mut max_step = 0.0f64;
            for i in 0..deg {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..deg {
                    if j != i {
                        denom *= roots[i] - roots[j];
                    }
                }
                let step = eval_monic(roots[i]) / denom;
                roots[i] -= step;
                max_step = max_step.max(step.norm());
            }
            if max_step < 1e-14 {
                break;
            }
        }
        roots.sort_by(|x, y| {
            x.re.partial_cmp(&y.re).unwrap().then(x.im.partial_cmp(&y.im).unwrap())
        });
    }
    roots
        .into_iter()
        .map(|z| NumericRoot { value: z, residual: eval(z).norm() / scale_at(z) })
        .collect()
}

/// Seeded generator of valid inputs for the randomized identity check. The
/// parameters c and fᵢ are kept away from nonpositive integers: a nonpositive
/// integer c kills the transformed stream's lower parameter, and a
/// nonpositive integer fᵢ makes the terminating left-hand stream disagree
/// with the transform's rational continuation past j = −fᵢ.
pub fn random_euler_input<R: Rng + ?Sized>(rng: &mut R, max_m_total: usize) -> EulerInput {
    fn small_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
        rat(rng.random_range(-6..=6), rng.random_range(1..=3))
    }
    fn nonpositive_integer(x: &Rat) -> bool {
        x.is_integer() && !x.is_positive()
    }
    loop {
        let a = small_rat(rng);
        let b = small_rat(rng);
        let c = small_rat(rng);
        if nonpositive_integer(&c) {
            continue;
        }
        let mut f = Vec::new();
        let mut m = Vec::new();
        let mut remaining = max_m_total;
        for _ in 0..rng.random_range(0..=2usize) {
            if remaining == 0 {
                break;
            }
            let fi = loop {
                let cand = small_rat(rng);
                if !nonpositive_integer(&cand) {
                    break cand;
                }
            };
            let mi = rng.random_range(1..=remaining.min(2));
            remaining -= mi;
            f.push(fi);
            m.push(mi);
        }
        if let Ok(input) = EulerInput::new(a, b, c, f, m) {
            return input;
        }
    }
}

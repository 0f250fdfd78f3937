//! Hilbert series, Hilbert polynomials, and h-polynomials of Grassmannians
//! in their Plücker embedding, plus Hilbert data of Schubert varieties.
//!
//! Conventions that matter here (both are corrections of commonly garbled
//! statements, see ERRATA.md): the h-polynomial of Gr(k,n) is the k-Narayana
//! polynomial N_{k,n−k} (not N_{k,n−k+1}), and the classical dimension
//! formula d reproduces the Plücker Hilbert function of Gr(k,n) under the
//! projective shift d_{k−1,n−1}.

use crate::exact::{binomial, factorial, int, to_rat, Int, Rat};
use crate::narayana::{curly_bracket, multiset_narayana, narayana_polynomial, CurlyForm};
use crate::poly::{self, Poly};
use crate::series::Series;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grassmannian {
    k: i64,
    n: i64,
}

/// Which grading of the Plücker coordinate ring to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grading {
    /// Plücker coordinates in degree 1.
    #[default]
    Plucker,
    /// Degrees inherited from the k×n matrix entries: Plücker coordinates
    /// are k×k minors, so the support sits on multiples of k.
    InvariantRing,
}

impl Grassmannian {
    pub fn new(k: i64, n: i64) -> Self {
        assert!(1 <= k && k <= n, "Grassmannian requires 1 <= k <= n, got ({k},{n})");
        Grassmannian { k, n }
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// k(n−k), the dimension as a projective variety.
    pub fn dimension(&self) -> i64 {
        self.k * (self.n - self.k)
    }

    fn series_value(&self, j: i64) -> Int {
        multiset_narayana(self.k, self.n - self.k + 1, j)
    }

    pub fn hilbert_series_coeffs(&self, order: usize, grading: Grading) -> Vec<Int> {
        (0..=order as i64)
            .map(|j| match grading {
                Grading::Plucker => self.series_value(j),
                Grading::InvariantRing if j % self.k == 0 => self.series_value(j / self.k),
                Grading::InvariantRing => Int::zero(),
            })
            .collect()
    }

    /// The Hilbert polynomial in j, of degree k(n−k). Interpolated from the
    /// series and cross-checked against the classical dimension formula.
    pub fn hilbert_polynomial(&self) -> Poly {
        let d = self.dimension();
        let points: Vec<(Rat, Rat)> = (0..=d + 1)
            .map(|j| (to_rat(&int(j)), to_rat(&self.series_value(j))))
            .collect();
        let p = poly::interpolate(&points);
        assert_eq!(p.degree(), Some(d as usize), "Hilbert polynomial degree for {self:?}");
        for j in 0..=d + 4 {
            assert_eq!(
                p.eval_int(j),
                to_rat(&littlewood_dimension(self.k - 1, self.n - 1, j)),
                "interpolation disagrees with the dimension formula for {self:?} at j = {j}"
            );
        }
        p
    }

    /// The h-polynomial: the k-Narayana polynomial N_{k,n−k}, asserted equal
    /// to (1−t)^{k(n−k)+1} times the Hilbert series.
    pub fn h_polynomial(&self) -> Poly {
        let p = narayana_polynomial(self.k, self.n - self.k);
        let d = self.dimension() as usize;
        let order = d + p.degree().unwrap_or(0) + 2;
        let series = Series::new(
            self.hilbert_series_coeffs(order, Grading::Plucker)
                .iter()
                .map(to_rat)
                .collect(),
        );
        let contracted = series.scale_binomial_power(&to_rat(&int(d as i64 + 1)));
        assert_eq!(contracted.to_poly(), p, "h-polynomial mismatch for {self:?}");
        p
    }
}

/// The classical dimension formula
/// d_{k,n}(j) = (n+j)!⋯(n−k+j)! / (j!⋯(k+j)!) · 1!⋯k! / ((n−k)!⋯n!),
/// with its own 0-based convention: Gr(k,n) data lives at (k−1, n−1).
pub fn littlewood_dimension(k: i64, n: i64, j: i64) -> Int {
    assert!(0 <= k && k <= n && j >= 0, "littlewood_dimension: need 0 <= k <= n, j >= 0");
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..=k {
        num *= factorial((n - i + j) as usize);
        den *= factorial((i + j) as usize);
    }
    for i in 1..=k {
        num *= factorial(i as usize);
    }
    for i in n - k..=n {
        den *= factorial(i as usize);
    }
    let value = Rat::new(num, den);
    assert!(value.is_integer(), "dimension formula produced a non-integer");
    value.to_integer()
}

/// Index (a₁ < … < a_k) of a Schubert variety X(a) ⊆ Gr(k, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertIndex {
    a: Vec<i64>,
    n: i64,
}

impl SchubertIndex {
    pub fn new(a: Vec<i64>, n: i64) -> Self {
        assert!(!a.is_empty(), "Schubert index must be nonempty");
        assert!(a[0] >= 1, "Schubert index entries must be positive");
        assert!(a.windows(2).all(|w| w[0] < w[1]), "Schubert index must be strictly increasing");
        assert!(*a.last().unwrap() <= n, "Schubert index must fit in the ambient bound");
        SchubertIndex { a, n }
    }

    /// Ambient bound taken as tight as possible (n = a_k).
    pub fn minimal(a: Vec<i64>) -> Self {
        let n = *a.last().expect("Schubert index must be nonempty");
        SchubertIndex::new(a, n)
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn k(&self) -> i64 {
        self.a.len() as i64
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn ambient(&self) -> Grassmannian {
        Grassmannian::new(self.k(), self.n)
    }

    /// True when X(a) is all of its ambient Grassmannian: a = (n−k+1,…,n).
    pub fn is_full(&self) -> bool {
        let k = self.k();
        self.a.iter().zip(1..=k).all(|(&ai, i)| ai == self.n - k + i)
    }
}

/// dim_j R(X(a))_j = {a₁,…,a_k}_j.
pub fn schubert_hilbert_value(s: &SchubertIndex, j: i64) -> Int {
    curly_bracket(&s.a, j, CurlyForm::RowIndexed)
}

/// (projective dimension Σ(aᵢ−i), Krull dimension of the cone = that + 1).
pub fn schubert_dimension(s: &SchubertIndex) -> (i64, i64) {
    let pd: i64 = s.a.iter().zip(1..).map(|(&ai, i)| ai - i).sum();
    (pd, pd + 1)
}

/// h_i = Σ_{l=0}^{i} (−1)^l · values(i−l) · C(d, l): one alternating-sum
/// h-vector entry from Hilbert function values and a Krull dimension d.
pub fn h_entry(values: impl Fn(i64) -> Int, d: i64, i: i64) -> Int {
    (0..=i)
        .map(|l| {
            let term = values(i - l) * binomial(d, l);
            if l % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// The h-vector of X(a), trailing zeros trimmed. Computed from the
/// alternating sum with d = Krull dimension of the cone, and asserted equal
/// to the equivalent two-sum form taken with d − 1.
pub fn schubert_h_vector(s: &SchubertIndex) -> Vec<Int> {
    let (pd, cone) = schubert_dimension(s);
    let values = |j: i64| schubert_hilbert_value(s, j);
    let mut h: Vec<Int> = (0..=pd + 1).map(|i| h_entry(values, cone, i)).collect();
    for (i, hi) in h.iter().enumerate() {
        let i = i as i64;
        let first = h_entry(values, cone - 1, i);
        let second = if i == 0 { Int::zero() } else { h_entry(values, cone - 1, i - 1) };
        assert_eq!(*hi, first - second, "h-vector forms disagree for {s:?} at i = {i}");
    }
    while h.len() > 1 && h.last() == Some(&Int::zero()) {
        h.pop();
    }
    h
}

/// The Hilbert polynomial of X(a) in j, interpolated from the determinantal
/// values; degree asserted to be the projective dimension.
pub fn schubert_hilbert_polynomial(s: &SchubertIndex) -> Poly {
    let (pd, _) = schubert_dimension(s);
    let points: Vec<(Rat, Rat)> = (0..=pd + 1)
        .map(|j| (to_rat(&int(j)), to_rat(&schubert_hilbert_value(s, j))))
        .collect();
    let p = poly::interpolate(&points);
    for j in pd + 2..=pd + 4 {
        assert_eq!(
            p.eval_int(j),
            to_rat(&schubert_hilbert_value(s, j)),
            "Hilbert values of {s:?} are not polynomial at j = {j}"
        );
    }
    assert_eq!(p.degree(), Some(pd as usize), "Hilbert polynomial degree of {s:?}");
    p
}

/// deg X(a) = (projective dim)! · leading coefficient; asserted = Σ h_i.
pub fn schubert_degree(s: &SchubertIndex) -> Int {
    let (pd, _) = schubert_dimension(s);
    let p = schubert_hilbert_polynomial(s);
    let value = to_rat(&factorial(pd as usize)) * p.leading().expect("Hilbert polynomial is nonzero");
    assert!(value.is_integer(), "degree must be an integer");
    let degree = value.to_integer();
    let h_sum: Int = schubert_h_vector(s).into_iter().sum();
    assert_eq!(degree, h_sum, "degree of {s:?} must equal the h-vector sum");
    assert!(degree.is_positive(), "degree of {s:?} must be positive");
    degree
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::multiset;
    use crate::narayana::sulanke_narayana;

    fn ints(vals: &[i64]) -> Vec<Int> {
        vals.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn gr24_series_is_the_quadric() {
        let g = Grassmannian::new(2, 4);
        let coeffs = g.hilbert_series_coeffs(10, Grading::Plucker);
        assert_eq!(&coeffs[..4], &ints(&[1, 6, 20, 50])[..]);
        for (j, c) in coeffs.iter().enumerate() {
            let j = j as i64;
            assert_eq!(*c, binomial(j + 5, 5) - binomial(j + 3, 5));
        }
    }

    #[test]
    fn degenerate_grassmannians() {
        let point = Grassmannian::new(3, 3);
        assert!(point.hilbert_series_coeffs(6, Grading::Plucker).iter().all(|c| c.is_one()));
        assert_eq!(point.h_polynomial(), Poly::one());
        assert_eq!(point.hilbert_polynomial(), Poly::one());

        let proj = Grassmannian::new(1, 4);
        for (j, c) in proj.hilbert_series_coeffs(6, Grading::Plucker).iter().enumerate() {
            assert_eq!(*c, multiset(4, j as i64));
        }
        assert_eq!(proj.h_polynomial(), Poly::one());
        assert_eq!(proj.hilbert_polynomial().degree(), Some(3));
    }

    #[test]
    fn invariant_ring_grading_sits_on_multiples_of_k() {
        let g = Grassmannian::new(2, 4);
        let inv = g.hilbert_series_coeffs(6, Grading::InvariantRing);
        assert_eq!(inv, ints(&[1, 0, 6, 0, 20, 0, 50]));
    }

    #[test]
    fn h_polynomials_pinned() {
        assert_eq!(Grassmannian::new(2, 4).h_polynomial(), Poly::from_ints(&[1, 1]));
        assert_eq!(Grassmannian::new(2, 5).h_polynomial(), Poly::from_ints(&[1, 3, 1]));
        assert_eq!(Grassmannian::new(3, 4).h_polynomial(), Poly::one());
        assert_eq!(
            Grassmannian::new(3, 6).h_polynomial(),
            Poly::from_coeffs(sulanke_narayana_row(3, 3)),
        );
    }

    fn sulanke_narayana_row(k: i64, r: i64) -> Vec<Rat> {
        (0..=crate::narayana::sulanke_support(k, r))
            .map(|j| to_rat(&sulanke_narayana(k, r, j)))
            .collect()
    }

    #[test]
    fn hilbert_polynomial_matches_series_and_littlewood() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6), (4, 8)] {
            let g = Grassmannian::new(k, n);
            let p = g.hilbert_polynomial();
            for (j, c) in g.hilbert_series_coeffs(8, Grading::Plucker).iter().enumerate() {
                assert_eq!(p.eval_int(j as i64), to_rat(c), "Gr({k},{n}) at j = {j}");
            }
        }
    }

    #[test]
    fn littlewood_pinned() {
        // Gr(2,4) values via the (k−1, n−1) shift
        assert_eq!(littlewood_dimension(1, 3, 1), int(6));
        assert_eq!(littlewood_dimension(1, 3, 2), int(20));
        assert_eq!(littlewood_dimension(1, 3, 3), int(50));
        // (0, n−1) is projective space P^{n−1}
        assert_eq!(littlewood_dimension(0, 2, 5), multiset(3, 5));
    }

    #[test]
    fn schubert_index_validation() {
        let s = SchubertIndex::minimal(vec![2, 4]);
        assert_eq!(s.n(), 4);
        assert_eq!(s.k(), 2);
        assert!(!s.is_full());
        assert!(SchubertIndex::new(vec![3, 4], 5).ambient().dimension() == 6);
        assert!(SchubertIndex::minimal(vec![3, 4]).is_full());
        assert!(SchubertIndex::minimal(vec![1, 2, 3]).is_full());
    }

    #[test]
    #[should_panic(expected = "strictly increasing")]
    fn schubert_index_rejects_repeats() {
        SchubertIndex::minimal(vec![2, 2, 4]);
    }

    #[test]
    fn schubert_pinned_data() {
        // X(3,4) = Gr(2,4): a quadric fourfold
        let s = SchubertIndex::minimal(vec![3, 4]);
        assert_eq!(schubert_dimension(&s), (4, 5));
        assert_eq!(schubert_h_vector(&s), ints(&[1, 1]));
        assert_eq!(schubert_degree(&s), int(2));
        assert_eq!(schubert_hilbert_value(&s, 1), int(6));

        // X(4,5) = Gr(2,5)
        let s = SchubertIndex::minimal(vec![4, 5]);
        assert_eq!(schubert_dimension(&s), (6, 7));
        assert_eq!(schubert_h_vector(&s), ints(&[1, 3, 1]));
        assert_eq!(schubert_degree(&s), int(5));

        // a proper Schubert subvariety
        let s = SchubertIndex::minimal(vec![2, 4]);
        assert_eq!(schubert_dimension(&s), (3, 4));
        assert_eq!(schubert_h_vector(&s), ints(&[1, 1]));

        // X(2,3,5) in Gr(3,5)
        let s = SchubertIndex::minimal(vec![2, 3, 5]);
        assert_eq!(schubert_dimension(&s), (4, 5));
        assert_eq!(schubert_h_vector(&s), ints(&[1, 2]));
        assert_eq!(schubert_degree(&s), int(3));

        // a point
        let s = SchubertIndex::minimal(vec![1, 2]);
        assert_eq!(schubert_dimension(&s), (0, 1));
        assert_eq!(schubert_h_vector(&s), ints(&[1]));
        assert_eq!(schubert_degree(&s), int(1));
        assert_eq!(schubert_hilbert_polynomial(&s), Poly::one());
    }

    #[test]
    fn full_index_reproduces_grassmannian_data() {
        for (k, n) in [(1, 4), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6)] {
            let a: Vec<i64> = (n - k + 1..=n).collect();
            let s = SchubertIndex::minimal(a);
            assert!(s.is_full());
            let g = Grassmannian::new(k, n);
            for j in 0..=6 {
                assert_eq!(
                    schubert_hilbert_value(&s, j),
                    multiset_narayana(k, n - k + 1, j),
                    "full index Gr({k},{n}) at j = {j}"
                );
            }
            let h = schubert_h_vector(&s);
            let h_poly: Vec<Rat> = h.iter().map(to_rat).collect();
            assert_eq!(Poly::from_coeffs(h_poly), g.h_polynomial(), "h-vector of full Gr({k},{n})");
            assert_eq!(schubert_hilbert_polynomial(&s), g.hilbert_polynomial());
        }
    }

    #[test]
    fn h_entry_reduction_to_sulanke_on_constant_tuples() {
        // Σ_l (−1)^l {n,…,n}_{i−l} C(k(n−k)+1, l) = N_k(n−k, i); repeated
        // tuples are fine for curly_bracket even though no Schubert index
        // repeats.
        for (k, n) in [(2, 4), (2, 5), (3, 4), (3, 5)] {
            let tuple = vec![n; k as usize];
            let d = k * (n - k) + 1;
            let values = |j: i64| curly_bracket(&tuple, j, CurlyForm::RowIndexed);
            for i in 0..=(n - k - 1) * (k - 1) + 2 {
                assert_eq!(
                    h_entry(values, d, i),
                    sulanke_narayana(k, n - k, i),
                    "reduction at k={k}, n={n}, i={i}"
                );
            }
        }
    }
}

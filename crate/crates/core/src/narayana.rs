//! The k-Narayana number families: the three bracket determinants, the two
//! product-formula families, Sulanke's alternating-sum numbers, and the
//! polynomials/series built from them.
//!
//! Conventions, fixed by the path-counting oracles and the identity ledger:
//! round_bracket counts strictly-increasing chains (see `oracle`), and the
//! product family `simple_narayana_product(k, r, ·)` matches the determinant
//! at the *shifted* tuple (r+1,…,r+1) — the two objects are deliberately kept
//! distinct (see ERRATA.md).

use crate::exact::{binomial, int, multiset, to_rat, Int, Rat};
use crate::matrix::determinant_int;
use crate::poly::Poly;
use crate::series::Series;
use num::{One, Zero};

/// det of the k×k matrix whose (i,l) entry is given by the 1-indexed closure.
fn bracket(k: usize, entry: impl Fn(i64, i64) -> Int) -> Int {
    let m = (1..=k as i64)
        .map(|i| (1..=k as i64).map(|l| entry(i, l)).collect())
        .collect();
    determinant_int(m)
}

fn check_tuple(a: &[i64], j: i64) {
    assert!(!a.is_empty(), "bracket tuple must be nonempty");
    assert!(a.iter().all(|&x| x >= 1), "bracket tuple entries must be positive, got {a:?}");
    assert!(j >= 0, "bracket statistic must be nonnegative, got {j}");
}

/// (a₁,…,a_k)_j = det(C(a_l − 1, j + l − i)): the path-chain count.
pub fn round_bracket(a: &[i64], j: i64) -> Int {
    check_tuple(a, j);
    bracket(a.len(), |i, l| binomial(a[l as usize - 1] - 1, j + l - i))
}

/// [a₁,…,a_k]_j = det(C(a_l + j − 1, j + l − i)): the multiset variant.
pub fn square_bracket(a: &[i64], j: i64) -> Int {
    check_tuple(a, j);
    bracket(a.len(), |i, l| binomial(a[l as usize - 1] + j - 1, j + l - i))
}

/// The two printed determinant forms of {a₁,…,a_k}_j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurlyForm {
    /// det(C(a_{k−l+1} + j + l − i − 1, j + l − i)), columns indexed by the
    /// reversed tuple.
    Reversed,
    /// det(C(a_i + j − i, j + l − i)), rows indexed by the tuple directly.
    RowIndexed,
}

/// {a₁,…,a_k}_j: the Schubert-variety Hilbert function values.
pub fn curly_bracket(a: &[i64], j: i64, form: CurlyForm) -> Int {
    check_tuple(a, j);
    let k = a.len() as i64;
    match form {
        CurlyForm::Reversed => {
            bracket(a.len(), |i, l| binomial(a[(k - l) as usize] + j + l - i - 1, j + l - i))
        }
        CurlyForm::RowIndexed => {
            bracket(a.len(), |i, l| binomial(a[i as usize - 1] + j - i, j + l - i))
        }
    }
}

/// Classic Narayana number N(r,j) = (1/r)·C(r,j)·C(r,j+1).
pub fn narayana_classic(r: i64, j: i64) -> Int {
    assert!(r >= 1, "narayana_classic: r must be positive");
    let value = to_rat(&(binomial(r, j) * binomial(r, j + 1))) / to_rat(&int(r));
    assert!(value.is_integer(), "narayana_classic: non-integral value at r={r}, j={j}");
    value.to_integer()
}

/// Multiset k-Narayana number 𝔑_k(r,j) = ∏_{i=1}^{k} multiset(j+i, r−1) / multiset(i, r−1).
pub fn multiset_narayana(k: i64, r: i64, j: i64) -> Int {
    assert!(k >= 1 && r >= 1 && j >= 0, "multiset_narayana: need k,r >= 1, j >= 0");
    let mut acc = Rat::one();
    for i in 1..=k {
        acc *= to_rat(&multiset(j + i, r - 1)) / to_rat(&multiset(i, r - 1));
    }
    assert!(acc.is_integer(), "multiset_narayana: non-integral value at k={k}, r={r}, j={j}");
    acc.to_integer()
}

/// Simple k-Narayana product 𝒩_k(r,j) = ∏_{i=0}^{k−1} C(r+i, j) / C(j+i, j).
pub fn simple_narayana_product(k: i64, r: i64, j: i64) -> Int {
    assert!(k >= 1 && r >= 0 && j >= 0, "simple_narayana_product: need k >= 1 and r, j >= 0");
    let mut acc = Rat::one();
    for i in 0..k {
        let num = binomial(r + i, j);
        if num.is_zero() {
            return Int::zero();
        }
        acc *= to_rat(&num) / to_rat(&binomial(j + i, j));
    }
    assert!(acc.is_integer(), "simple_narayana_product: non-integral value at k={k}, r={r}, j={j}");
    acc.to_integer()
}

/// Support bound of N_k(r,·): degree of the k-Narayana polynomial.
pub fn sulanke_support(k: i64, r: i64) -> i64 {
    ((r - 1) * (k - 1)).max(0)
}

/// Sulanke's k-dimensional Narayana number
/// N_k(r,j) = Σ_{l=0}^{j} (−1)^{j−l} C(kr+1, j−l) ∏_{i=0}^{k−1} C(r+i+l, r)/C(r+i, r);
/// the interior product equals 𝔑_k(r+1, l). Zero outside 0 ≤ j ≤ (r−1)(k−1).
pub fn sulanke_narayana(k: i64, r: i64, j: i64) -> Int {
    assert!(k >= 1 && r >= 0, "sulanke_narayana: need k >= 1, r >= 0");
    if j < 0 || j > sulanke_support(k, r) {
        return Int::zero();
    }
    let mut acc = Rat::zero();
    for l in 0..=j {
        let mut term = to_rat(&binomial(k * r + 1, j - l));
        for i in 0..k {
            term *= to_rat(&binomial(r + i + l, r)) / to_rat(&binomial(r + i, r));
        }
        if (j - l) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    assert!(acc.is_integer(), "sulanke_narayana: non-integral value at k={k}, r={r}, j={j}");
    acc.to_integer()
}

/// The k-Narayana polynomial N_{k,r}(t) = Σ_j N_k(r,j) t^j, degree (r−1)(k−1).
pub fn narayana_polynomial(k: i64, r: i64) -> Poly {
    assert!(k >= 1 && r >= 0, "narayana_polynomial: need k >= 1, r >= 0");
    Poly::from_coeffs(
        (0..=sulanke_support(k, r)).map(|j| to_rat(&sulanke_narayana(k, r, j))).collect(),
    )
}

/// The k-Narayana series 𝔑_{k,r}(t) = Σ_j 𝔑_k(r,j) t^j truncated at the given order.
pub fn multiset_series(k: i64, r: i64, order: usize) -> Series {
    assert!(k >= 1 && r >= 1, "multiset_series: need k, r >= 1");
    Series::from_fn(order, |j| to_rat(&multiset_narayana(k, r, j as i64)))
}

/// The simple k-Narayana polynomial 𝒩_{k,r}(t) = Σ_j 𝒩_k(r,j) t^j, degree r.
pub fn simple_polynomial(k: i64, r: i64) -> Poly {
    assert!(k >= 1 && r >= 1, "simple_polynomial: need k, r >= 1");
    Poly::from_coeffs((0..=r).map(|j| to_rat(&simple_narayana_product(k, r, j))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sulanke_row(k: i64, r: i64) -> Vec<Int> {
        (0..=sulanke_support(k, r)).map(|j| sulanke_narayana(k, r, j)).collect()
    }

    fn ints(vals: &[i64]) -> Vec<Int> {
        vals.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn round_bracket_pinned() {
        for a in 1..=8 {
            for j in 0..=8 {
                assert_eq!(round_bracket(&[a], j), binomial(a - 1, j));
            }
        }
        assert_eq!(round_bracket(&[3, 3], 1), int(3));
        assert_eq!(round_bracket(&[4, 4], 2), int(6));
        assert_eq!(round_bracket(&[5, 3], 2), int(6));
    }

    #[test]
    fn square_bracket_pinned() {
        for a in 1..=8 {
            for j in 0..=8 {
                assert_eq!(square_bracket(&[a], j), multiset(a, j));
            }
        }
        assert_eq!(square_bracket(&[3, 3], 1), int(6));
        assert_eq!(square_bracket(&[3, 3], 2), int(20));
    }

    #[test]
    fn curly_bracket_pinned() {
        for form in [CurlyForm::Reversed, CurlyForm::RowIndexed] {
            assert_eq!(curly_bracket(&[3, 4], 1, form), int(6));
            assert_eq!(curly_bracket(&[4, 4], 1, form), int(6));
            for a in 1..=8 {
                for j in 0..=6 {
                    assert_eq!(curly_bracket(&[a], j, form), multiset(a, j));
                }
            }
        }
    }

    #[test]
    fn curly_forms_agree_with_repeats() {
        // weakly increasing tuples, repeated entries allowed — the proofs use
        // {n,…,n}_l even though Schubert indices are strictly increasing
        let mut tuples: Vec<Vec<i64>> = Vec::new();
        for a1 in 1..=6 {
            for a2 in a1..=6 {
                tuples.push(vec![a1, a2]);
                for a3 in a2..=6 {
                    tuples.push(vec![a1, a2, a3]);
                }
            }
        }
        for t in &tuples {
            for j in 0..=3 {
                assert_eq!(
                    curly_bracket(t, j, CurlyForm::Reversed),
                    curly_bracket(t, j, CurlyForm::RowIndexed),
                    "curly forms disagree at {t:?}, j={j}"
                );
            }
        }
    }

    #[test]
    fn narayana_classic_pinned() {
        assert_eq!(narayana_classic(3, 1), int(3));
        assert_eq!(narayana_classic(4, 1), int(6));
        for r in 1..=8 {
            assert_eq!(narayana_classic(r, 0), int(1));
        }
        // Catalan totals: sum over j of N(r,j)
        let catalan: [i64; 6] = [1, 2, 5, 14, 42, 132];
        for r in 1..=6i64 {
            let total: Int = (0..r).map(|j| narayana_classic(r, j)).sum();
            assert_eq!(total, int(catalan[r as usize - 1]));
        }
    }

    #[test]
    fn multiset_narayana_pinned() {
        for r in 1..=6 {
            for j in 0..=6 {
                assert_eq!(multiset_narayana(1, r, j), multiset(r, j));
            }
        }
        assert_eq!(multiset_narayana(2, 3, 2), int(20));
        assert_eq!(multiset_narayana(3, 5, 1), int(35));
    }

    #[test]
    fn simple_product_pinned() {
        assert_eq!(simple_narayana_product(2, 3, 1), int(6));
        assert_eq!(simple_narayana_product(2, 4, 2), int(20));
        for k in 1..=4 {
            for r in 1..=6 {
                assert_eq!(simple_narayana_product(k, r, 0), int(1));
                // vanishes past j = r
                assert_eq!(simple_narayana_product(k, r, r + 1), int(0));
            }
        }
    }

    #[test]
    fn sulanke_rows_pinned() {
        assert_eq!(sulanke_row(2, 3), ints(&[1, 3, 1]));
        assert_eq!(sulanke_row(2, 4), ints(&[1, 6, 6, 1]));
        assert_eq!(sulanke_row(2, 5), ints(&[1, 10, 20, 10, 1]));
        assert_eq!(sulanke_row(3, 3), ints(&[1, 10, 20, 10, 1]));
        assert_eq!(sulanke_row(3, 4), ints(&[1, 22, 113, 190, 113, 22, 1]));
        assert_eq!(sulanke_row(3, 5), ints(&[1, 40, 400, 1456, 2212, 1456, 400, 40, 1]));
        assert_eq!(sulanke_row(4, 3), ints(&[1, 22, 113, 190, 113, 22, 1]));
        assert_eq!(
            sulanke_row(4, 4),
            ints(&[1, 53, 710, 3548, 7700, 7700, 3548, 710, 53, 1])
        );
    }

    #[test]
    fn sulanke_out_of_support_and_degenerate() {
        assert_eq!(sulanke_narayana(3, 4, 7), int(0));
        assert_eq!(sulanke_narayana(3, 4, -1), int(0));
        for k in 1..=4 {
            // r = 0 collapses to the empty-path case
            assert_eq!(sulanke_narayana(k, 0, 0), int(1));
            assert_eq!(sulanke_narayana(k, 0, 1), int(0));
            // r = 1: a single monotone staircase
            assert_eq!(sulanke_narayana(k, 1, 0), int(1));
        }
        for r in 0..=8 {
            assert_eq!(sulanke_narayana(1, r, 0), int(1));
        }
    }

    #[test]
    fn sulanke_reduces_to_classic_at_k2() {
        for r in 1..=8 {
            for j in 0..=8 {
                assert_eq!(
                    sulanke_narayana(2, r, j),
                    narayana_classic(r, j),
                    "k=2 Sulanke vs classic at r={r}, j={j}"
                );
            }
        }
    }

    #[test]
    fn polynomials_and_series_pinned() {
        assert_eq!(narayana_polynomial(2, 3), Poly::from_ints(&[1, 3, 1]));
        for r in 0..=6 {
            assert_eq!(narayana_polynomial(1, r), Poly::one());
        }
        assert_eq!(narayana_polynomial(4, 0), Poly::one());
        assert_eq!(
            multiset_series(2, 3, 3),
            Series::new(vec![to_rat(&int(1)), to_rat(&int(6)), to_rat(&int(20)), to_rat(&int(50))])
        );
        assert_eq!(simple_polynomial(2, 3).coeffs().len(), 4);
        assert_eq!(simple_polynomial(2, 3).coeff(1), to_rat(&int(6)));
    }

    #[test]
    fn narayana_polynomials_palindromic() {
        for k in 1..=4 {
            for r in 0..=6 {
                assert!(narayana_polynomial(k, r).is_palindromic(), "not palindromic at k={k}, r={r}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn brackets_reject_nonpositive_entries() {
        round_bracket(&[3, 0], 1);
    }
}

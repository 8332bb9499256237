//! Exact univariate polynomials, truncated power series and Hilbert series.
//!
//! Everything here is integer arithmetic on `BigInt` coefficients; no
//! rounding happens anywhere. A Hilbert series is stored in the closed form
//! `numerator(t) / prod_e (1 - t^e)` and expanded on demand to a
//! caller-chosen truncation order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Multiplying the expansion back by the denominator did not terminate
    /// by the expected degree: the series is not of the claimed shape.
    #[error("product does not terminate by degree {expected_degree}: nonzero coefficient at degree {offending_degree}")]
    NotPolynomial {
        expected_degree: usize,
        offending_degree: usize,
    },
}

/// Integer-coefficient polynomial in one variable, sparse by exponent.
///
/// Invariant: no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::from_terms([(0usize, 1i64)])
    }

    /// 1 - t^e
    pub fn one_minus_t_pow(e: usize) -> Self {
        assert!(e >= 1, "exponent must be positive");
        IntPolynomial::from_terms([(0usize, 1i64), (e, -1i64)])
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut p = IntPolynomial::default();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::default();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Product of (1 - t^{d}) over the given exponents.
    pub fn product_one_minus(exps: &[usize]) -> IntPolynomial {
        let mut p = IntPolynomial::one();
        for &e in exps {
            p = p.mul(&IntPolynomial::one_minus_t_pow(e));
        }
        p
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", abs)?;
            }
            if *e > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Power series truncated at a fixed order: coefficients for t^0 .. t^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        for (e, c) in p.terms() {
            if e <= order {
                s.coeffs[e] = c.clone();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Truncate to a (smaller) order.
    pub fn truncated(&self, order: usize) -> TruncatedSeries {
        assert!(order <= self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, ci) in self.coeffs.iter().enumerate().take(n + 1) {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !cj.is_zero() {
                    coeffs[i + j] += ci * cj;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// In-place multiplication by (1 - t^e).
    pub fn mul_one_minus_t_pow(&mut self, e: usize) {
        assert!(e >= 1);
        for k in (e..self.coeffs.len()).rev() {
            let prev = self.coeffs[k - e].clone();
            self.coeffs[k] -= prev;
        }
    }

    /// In-place division by (1 - t^e), i.e. multiplication by the geometric
    /// series 1 + t^e + t^{2e} + ...
    pub fn div_one_minus_t_pow(&mut self, e: usize) {
        assert!(e >= 1);
        for k in e..self.coeffs.len() {
            let prev = self.coeffs[k - e].clone();
            self.coeffs[k] += prev;
        }
    }
}

/// A rational function `numerator(t) / prod_{e in denominator_exponents} (1 - t^e)`
/// whose expansion has integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: IntPolynomial,
    pub denominator_exponents: Vec<usize>,
}

impl HilbertSeries {
    pub fn new(numerator: IntPolynomial, mut denominator_exponents: Vec<usize>) -> Self {
        assert!(
            denominator_exponents.iter().all(|&e| e >= 1),
            "denominator exponents must be positive"
        );
        denominator_exponents.sort_unstable();
        HilbertSeries {
            numerator,
            denominator_exponents,
        }
    }

    /// Expand to the given truncation order. Coefficient k is the dimension
    /// of the degree-k graded piece of the ring the series encodes.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::from_polynomial(&self.numerator, order);
        for &e in &self.denominator_exponents {
            s.div_one_minus_t_pow(e);
        }
        s
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (", self.numerator)?;
        for (i, e) in self.denominator_exponents.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "(1-t^{})", e)?;
        }
        write!(f, ")")
    }
}

/// Recover the Gorenstein numerator of a series: multiply the truncated
/// expansion by `prod (1 - t^e)` and verify the product terminates by
/// `expected_degree` inside the window where the truncation is reliable.
pub fn numerator_from_series(
    series: &TruncatedSeries,
    denominator_exponents: &[usize],
    expected_degree: usize,
) -> Result<IntPolynomial, SeriesError> {
    let max_e = denominator_exponents.iter().copied().max().unwrap_or(0);
    assert!(
        series.order() >= expected_degree + max_e,
        "series truncation order {} too small for socle {} with max denominator exponent {}",
        series.order(),
        expected_degree,
        max_e
    );
    let mut s = series.clone();
    for &e in denominator_exponents {
        s.mul_one_minus_t_pow(e);
    }
    for k in (expected_degree + 1)..=s.order() {
        if !s.coeff(k).is_zero() {
            return Err(SeriesError::NotPolynomial {
                expected_degree,
                offending_degree: k,
            });
        }
    }
    let mut p = IntPolynomial::default();
    for k in 0..=expected_degree {
        p.add_term(k, s.coeff(k).clone());
    }
    Ok(p)
}

/// Palindrome test for a Gorenstein numerator: coefficient(k) equals
/// s * coefficient(socle - k) for a single global sign s in {+1, -1}.
pub fn is_gorenstein_symmetric(p: &IntPolynomial, socle: usize) -> bool {
    match p.degree() {
        None => return true,
        Some(d) if d > socle => return false,
        Some(_) => {}
    }
    let mut sign: Option<bool> = None; // true = +1
    for k in 0..=socle {
        let a = p.coeff(k);
        let b = p.coeff(socle - k);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let same = if a == b {
            true
        } else if a == -&b {
            false
        } else {
            return false;
        };
        match sign {
            None => sign = Some(same),
            Some(s) if s != same => {
                // a == b == -b can only happen at zero, already skipped
                return false;
            }
            Some(_) => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Independent oracle: count monomials of exact weighted degree `d` in
    /// the given weights, by plain recursion over exponent choices.
    fn count_monomials_brute(weights: &[u64], d: u64) -> u64 {
        fn rec(weights: &[u64], d: u64) -> u64 {
            match weights.split_first() {
                None => u64::from(d == 0),
                Some((&w, rest)) => {
                    let mut total = 0;
                    let mut used = 0;
                    while used <= d {
                        total += rec(rest, d - used);
                        used += w;
                    }
                    total
                }
            }
        }
        rec(weights, d)
    }

    /// Independent oracle: dimension of the degree-n piece of the Plucker
    /// coordinate ring of Gr(2,5), by the hook-content closed form.
    fn gr25_dim(n: u64) -> u64 {
        (n + 1) * (n + 2) * (n + 2) * (n + 3) * (n + 3) * (n + 4) / 144
    }

    /// Independent oracle: dimension of the degree-n piece of the Segre
    /// coordinate ring of P^2 x P^2: (dim of degree-n ternary forms)^2.
    fn segre_dim(n: u64) -> u64 {
        let t = (n + 1) * (n + 2) / 2;
        t * t
    }

    #[test]
    fn expand_geometric_square() {
        let hs = HilbertSeries::new(IntPolynomial::one(), vec![1, 1]);
        let s = hs.expand(3);
        assert_eq!(s.coeffs(), &[big(1), big(2), big(3), big(4)]);
    }

    #[test]
    fn expand_weighted_ci_low_orders() {
        // (1-t^36)(1-t^40) / prod(1-t^w), w = (5,5,7,8,9,12,31)
        let num = IntPolynomial::product_one_minus(&[36, 40]);
        let hs = HilbertSeries::new(num, vec![5, 5, 7, 8, 9, 12, 31]);
        let s = hs.expand(5);
        let weights = [5u64, 5, 7, 8, 9, 12, 31];
        for k in 0..=5usize {
            assert_eq!(
                *s.coeff(k),
                big(count_monomials_brute(&weights, k as u64) as i64),
                "coefficient at t^{k}"
            );
        }
        assert_eq!(*s.coeff(1), big(0));
        assert_eq!(*s.coeff(4), big(0));
        assert_eq!(*s.coeff(5), big(2));
    }

    #[test]
    fn expand_segre_numerator_over_p8() {
        let num = IntPolynomial::from_terms([(0, 1i64), (2, -9), (3, 16), (4, -9), (6, 1)]);
        let hs = HilbertSeries::new(num, vec![1; 9]);
        let s = hs.expand(2);
        assert_eq!(s.coeffs(), &[big(1), big(9), big(36)]);
        for k in 0..=2u64 {
            assert_eq!(*s.coeff(k as usize), big(segre_dim(k) as i64));
        }
    }

    #[test]
    fn numerator_from_gr25_series() {
        // Expansion of the Gr(2,5) coordinate ring over ten weight-1
        // variables, socle 5; numerator frozen from the hook-content oracle.
        let order = 7usize;
        let coeffs: Vec<BigInt> = (0..=order as u64).map(|n| big(gr25_dim(n) as i64)).collect();
        let s = TruncatedSeries::from_coeffs(coeffs);
        let num = numerator_from_series(&s, &[1; 10], 5).unwrap();
        let expected =
            IntPolynomial::from_terms([(0, 1i64), (2, -5), (3, 5), (5, -1)]);
        assert_eq!(num, expected);
    }

    #[test]
    fn numerator_from_segre_series() {
        let order = 8usize;
        let coeffs: Vec<BigInt> = (0..=order as u64)
            .map(|n| big(segre_dim(n) as i64))
            .collect();
        let s = TruncatedSeries::from_coeffs(coeffs);
        let num = numerator_from_series(&s, &[1; 9], 6).unwrap();
        let expected =
            IntPolynomial::from_terms([(0, 1i64), (2, -9), (3, 16), (4, -9), (6, 1)]);
        assert_eq!(num, expected);
    }

    #[test]
    fn numerator_roundtrip_on_ci_products() {
        let num = IntPolynomial::product_one_minus(&[16, 18, 20]);
        let denoms = vec![4, 5, 5, 6, 7, 8, 9, 11];
        let hs = HilbertSeries::new(num.clone(), denoms.clone());
        let socle = 16 + 18 + 20;
        let s = hs.expand(socle + 11);
        let back = numerator_from_series(&s, &denoms, socle).unwrap();
        assert_eq!(back, num);
    }

    #[test]
    fn numerator_rejects_wrong_socle() {
        let num = IntPolynomial::product_one_minus(&[36, 40]);
        let hs = HilbertSeries::new(num, vec![5, 5, 7, 8, 9, 12, 31]);
        let s = hs.expand(120);
        let err = numerator_from_series(&s, &[5, 5, 7, 8, 9, 12, 31], 70).unwrap_err();
        match err {
            SeriesError::NotPolynomial { .. } => {}
        }
    }

    #[test]
    fn gorenstein_symmetry_examples() {
        let gr = IntPolynomial::from_terms([(0, 1i64), (2, -5), (3, 5), (5, -1)]);
        assert!(is_gorenstein_symmetric(&gr, 5));
        let segre =
            IntPolynomial::from_terms([(0, 1i64), (2, -9), (3, 16), (4, -9), (6, 1)]);
        assert!(is_gorenstein_symmetric(&segre, 6));
        let bad = IntPolynomial::from_terms([(0, 1i64), (1, 1)]);
        assert!(!is_gorenstein_symmetric(&bad, 3));
        // degree above the socle is never symmetric
        let high = IntPolynomial::from_terms([(0, 1i64), (7, 1)]);
        assert!(!is_gorenstein_symmetric(&high, 5));
    }

    #[test]
    fn random_weight_systems_match_monomial_counts() {
        // deterministic pseudo-random small systems
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let n = (next() % 4 + 2) as usize;
            let weights: Vec<u64> = (0..n).map(|_| next() % 6 + 1).collect();
            let hs = HilbertSeries::new(
                IntPolynomial::one(),
                weights.iter().map(|&w| w as usize).collect(),
            );
            let order = 18usize;
            let s = hs.expand(order);
            for k in 0..=order {
                assert_eq!(
                    *s.coeff(k),
                    big(count_monomials_brute(&weights, k as u64) as i64),
                    "weights {:?} degree {}",
                    weights,
                    k
                );
            }
        }
    }
}

//! Hilbert series of format families and anticanonical plurigenera.
//!
//! The complete-intersection numerator is the classical product
//! prod_j (1 - t^{d_j}). The Pfaffian numerator
//! 1 - sum_k t^{sigma - c_k} + sum_k t^{sigma + c_k} - t^{2 sigma}
//! is pinned down by three independent checks: its degrees match the
//! Pfaffian equation degrees, it is Gorenstein-symmetric with the socle
//! demanded by adjunction, and it reproduces the unweighted Gr(2,5)
//! numerator 1 - 5t^2 + 5t^3 - t^5. The Segre numerator is not hardcoded:
//! the format series is summed directly as a bigraded product and the
//! numerator extracted against the format weights.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::formats::{FormatDescriptor, FormatFamily};
use crate::series::{
    is_gorenstein_symmetric, numerator_from_series, HilbertSeries, IntPolynomial, SeriesError,
    TruncatedSeries,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("descriptor is not of the expected format")]
    WrongFormat,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A family together with its Hilbert series and the first anticanonical
/// plurigenera h^0(-lK) for l = 1..L.
#[derive(Debug, Clone)]
pub struct FamilySeries {
    pub family: FormatFamily,
    pub hs: HilbertSeries,
    pub h0: Vec<u64>,
}

/// Hilbert series of a weighted complete intersection.
pub fn series_ci(family: &FormatFamily) -> Result<HilbertSeries, HilbertError> {
    let FormatDescriptor::Ci { degrees } = &family.descriptor else {
        return Err(HilbertError::WrongFormat);
    };
    let num = IntPolynomial::product_one_minus(
        &degrees.iter().map(|&d| d as usize).collect::<Vec<_>>(),
    );
    Ok(HilbertSeries::new(
        num,
        family.ambient.weights().iter().map(|&w| w as usize).collect(),
    ))
}

/// Hilbert series of a Pfaffian Gr(2,5) pullback.
pub fn series_gr(family: &FormatFamily) -> Result<HilbertSeries, HilbertError> {
    let FormatDescriptor::PfaffianGr25 { c2 } = &family.descriptor else {
        return Err(HilbertError::WrongFormat);
    };
    let sigma2: i64 = c2.iter().sum();
    let mut num = IntPolynomial::one();
    for &ck in c2 {
        num.add_term(((sigma2 - ck) / 2) as usize, BigInt::from(-1));
        num.add_term(((sigma2 + ck) / 2) as usize, BigInt::from(1));
    }
    num.add_term(sigma2 as usize, BigInt::from(-1));
    Ok(HilbertSeries::new(
        num,
        family.ambient.weights().iter().map(|&w| w as usize).collect(),
    ))
}

/// Hilbert series of a Segre P^2 x P^2 pullback. The format series is
/// summed as sum_n A_n(t) B_n(t) over bidegree-(n,n) pieces in doubled
/// weights, then the numerator is extracted against the format weights.
pub fn series_p2p2(family: &FormatFamily) -> Result<HilbertSeries, HilbertError> {
    let FormatDescriptor::SegreP2P2 { a2, b2 } = &family.descriptor else {
        return Err(HilbertError::WrongFormat);
    };
    let format_weights = family.descriptor.format_weights();
    let socle = family.descriptor.socle_degree() as usize;
    let max_w = *format_weights.iter().max().unwrap() as usize;
    let order = socle + max_w;
    let num = segre_numerator(*a2, *b2, &format_weights, socle, order)?;
    Ok(HilbertSeries::new(
        num,
        family.ambient.weights().iter().map(|&w| w as usize).collect(),
    ))
}

fn segre_numerator(
    a2: [i64; 3],
    b2: [i64; 3],
    format_weights: &[u64],
    socle: usize,
    order: usize,
) -> Result<IntPolynomial, HilbertError> {
    // Doubled-exponent coefficient vectors; entries fit in u64 comfortably
    // at the truncation orders that occur here.
    let order2 = 2 * order;
    let mut total = vec![0u64; order2 + 1];
    let min_w = *format_weights.iter().min().unwrap() as usize;
    let n_max = order / min_w;
    for n in 0..=n_max {
        let an = graded_piece(a2, n, order2);
        let bn = graded_piece(b2, n, order2);
        for (ea, &ca) in an.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (eb, &cb) in bn.iter().enumerate().take(order2 + 1 - ea) {
                if cb != 0 {
                    total[ea + eb] += ca * cb;
                }
            }
        }
    }
    // doubled exponents of the product are even: halve
    let coeffs: Vec<BigInt> = (0..=order)
        .map(|k| {
            debug_assert!(2 * k + 1 > order2 || total.get(2 * k + 1).copied().unwrap_or(0) == 0);
            BigInt::from(total[2 * k])
        })
        .collect();
    let series = TruncatedSeries::from_coeffs(coeffs);
    let denom: Vec<usize> = format_weights.iter().map(|&w| w as usize).collect();
    Ok(numerator_from_series(&series, &denom, socle)?)
}

/// Coefficient vector, indexed by doubled weighted degree, of the space of
/// degree-n monomials in three variables of doubled weights `w2`.
fn graded_piece(w2: [i64; 3], n: usize, cap2: usize) -> Vec<u64> {
    let mut out = vec![0u64; cap2 + 1];
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            let e = i as i64 * w2[0] + j as i64 * w2[1] + k as i64 * w2[2];
            if e >= 0 && (e as usize) <= cap2 {
                out[e as usize] += 1;
            }
        }
    }
    out
}

/// Hilbert series of any format family, with the numerator checked for
/// Gorenstein symmetry at the descriptor's socle degree.
pub fn family_series_raw(family: &FormatFamily) -> Result<HilbertSeries, HilbertError> {
    let hs = match &family.descriptor {
        FormatDescriptor::Ci { .. } => series_ci(family)?,
        FormatDescriptor::PfaffianGr25 { .. } => series_gr(family)?,
        FormatDescriptor::SegreP2P2 { .. } => series_p2p2(family)?,
    };
    debug_assert!(is_gorenstein_symmetric(
        &hs.numerator,
        family.descriptor.socle_degree() as usize
    ));
    Ok(hs)
}

/// Plurigenera of an index-1 family: h^0(-lK) is the coefficient of t^l in
/// the Hilbert series, since -K = O(1).
pub fn h0_vector(family: &FormatFamily, depth: usize) -> Result<Vec<u64>, HilbertError> {
    Ok(family_series(family, depth)?.h0)
}

/// Family with series and plurigenera up to depth L.
pub fn family_series(family: &FormatFamily, depth: usize) -> Result<FamilySeries, HilbertError> {
    let hs = family_series_raw(family)?;
    let s = hs.expand(depth);
    let h0 = (1..=depth)
        .map(|l| s.coeff(l).to_u64().expect("plurigenus exceeds u64 range"))
        .collect();
    Ok(FamilySeries {
        family: family.clone(),
        hs,
        h0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::WeightSystem;

    fn fam(s: &str) -> FormatFamily {
        s.parse().unwrap()
    }

    #[test]
    fn ci_numerators() {
        let x3640 = fam("CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]");
        let hs = series_ci(&x3640).unwrap();
        assert_eq!(hs.numerator, IntPolynomial::product_one_minus(&[36, 40]));

        let x2222 = fam("CI c=4 d=[2,2,2,2] w=[1,1,1,1,1,1,1,1,1]");
        let s = series_ci(&x2222).unwrap().expand(1);
        assert_eq!(*s.coeff(1), BigInt::from(9));

        let x161820 = fam("CI c=3 d=[16,18,20] w=[4,5,5,6,7,8,9,11]");
        let s = series_ci(&x161820).unwrap().expand(3);
        for l in 1..=3 {
            assert_eq!(*s.coeff(l), BigInt::from(0));
        }
    }

    #[test]
    fn gr_numerator_matches_plucker_oracle() {
        let fam = FormatFamily::new(
            FormatDescriptor::pfaffian([1, 1, 1, 1, 1]).unwrap(),
            WeightSystem::new(vec![1; 10]),
        );
        let hs = series_gr(&fam).unwrap();
        let expected = IntPolynomial::from_terms([(0, 1i64), (2, -5), (3, 5), (5, -1)]);
        assert_eq!(hs.numerator, expected);
        // expansion matches the hook-content dimensions 1, 10, 50, 175
        let s = hs.expand(3);
        let dims = [1u64, 10, 50, 175];
        for (n, &d) in dims.iter().enumerate() {
            assert_eq!(*s.coeff(n), BigInt::from(d));
        }
    }

    #[test]
    fn gr_linear_coefficients() {
        let g5 = fam("GR c=[1/2,1/2,1/2,21/2,21/2] w=[1,1,1,3,7,11,11,11]");
        let s = series_gr(&g5).unwrap().expand(1);
        assert_eq!(*s.coeff(1), BigInt::from(3));

        let g4 = fam("GR c=[-1/2,7/2,11/2,17/2,37/2] w=[2,3,5,7,8,9,11,27]");
        let s = series_gr(&g4).unwrap().expand(1);
        assert_eq!(*s.coeff(1), BigInt::from(0));
    }

    #[test]
    fn segre_unweighted_numerator() {
        let fam = FormatFamily::new(
            FormatDescriptor::segre([1, 1, 1], [1, 1, 1]).unwrap(),
            WeightSystem::new(vec![1; 9]),
        );
        let hs = series_p2p2(&fam).unwrap();
        let expected =
            IntPolynomial::from_terms([(0, 1i64), (2, -9), (3, 16), (4, -9), (6, 1)]);
        assert_eq!(hs.numerator, expected);
    }

    #[test]
    fn segre_linear_coefficients() {
        let s5 = fam("P2P2 a=[0,0,10] b=[1,1,11] w=[1,1,1,1,3,7,11,11,11]");
        let s = series_p2p2(&s5).unwrap().expand(1);
        assert_eq!(*s.coeff(1), BigInt::from(4));

        let s4 = fam("P2P2 a=[0,2,7] b=[3,4,5] w=[2,3,3,3,4,5,5,7,11]");
        assert_eq!(s4.canonical_degree(), -1);
        let s = series_p2p2(&s4).unwrap().expand(1);
        assert_eq!(*s.coeff(1), BigInt::from(0));
    }

    #[test]
    fn h0_vectors() {
        assert_eq!(
            h0_vector(&fam("CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]"), 4).unwrap(),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            h0_vector(&fam("GR c=[1/2,1/2,1/2,21/2,21/2] w=[1,1,1,3,7,11,11,11]"), 1).unwrap(),
            vec![3]
        );
        assert_eq!(
            h0_vector(&fam("P2P2 a=[0,0,10] b=[1,1,11] w=[1,1,1,1,3,7,11,11,11]"), 1).unwrap(),
            vec![4]
        );
    }

    #[test]
    fn emitted_numerators_are_gorenstein_symmetric() {
        let mut state = 0x452821e638d01377u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let parity = (next() % 2) as i64;
            let c2: [i64; 5] = std::array::from_fn(|_| 2 * (next() % 8 + 1) as i64 + parity);
            let Ok(d) = FormatDescriptor::pfaffian(c2) else { continue };
            let ambient = WeightSystem::new(d.format_weights());
            let f = FormatFamily::new(d.clone(), ambient);
            let hs = series_gr(&f).unwrap();
            assert!(is_gorenstein_symmetric(
                &hs.numerator,
                d.socle_degree() as usize
            ));
        }
        for _ in 0..40 {
            let parity = (next() % 2) as i64;
            let a2: [i64; 3] = std::array::from_fn(|_| 2 * (next() % 6) as i64 + parity);
            let b2: [i64; 3] = std::array::from_fn(|_| 2 * (next() % 6 + 1) as i64 - parity);
            let Ok(d) = FormatDescriptor::segre(a2, b2) else { continue };
            let ambient = WeightSystem::new(d.format_weights());
            let f = FormatFamily::new(d.clone(), ambient);
            let hs = series_p2p2(&f).unwrap();
            assert!(is_gorenstein_symmetric(
                &hs.numerator,
                d.socle_degree() as usize
            ));
            // nonnegative coefficients up to a healthy order
            let s = hs.expand(2 * d.socle_degree() as usize + 5);
            assert!(s.coeffs().iter().all(|c| c.sign() != num_bigint::Sign::Minus));
        }
    }

    #[test]
    fn formats_specialized_to_their_own_weights_have_expected_dimension() {
        let gr = FormatFamily::new(
            FormatDescriptor::pfaffian([1, 1, 1, 1, 1]).unwrap(),
            WeightSystem::new(vec![1; 10]),
        );
        assert_eq!(*series_gr(&gr).unwrap().expand(1).coeff(1), BigInt::from(10));
        let p2 = FormatFamily::new(
            FormatDescriptor::segre([1, 1, 1], [1, 1, 1]).unwrap(),
            WeightSystem::new(vec![1; 9]),
        );
        assert_eq!(*series_p2p2(&p2).unwrap().expand(1).coeff(1), BigInt::from(9));
    }
}

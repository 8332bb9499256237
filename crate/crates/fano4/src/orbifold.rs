//! Cyclic quotient singularities 1/r(a1,a2,a3,a4) and basket algebra.
//!
//! Representatives keep the exact residues handed over by the basket engine
//! (sorted ascending, no unit rescaling), because the displayed basket data
//! and the "no residue equals 1" point test both depend on that
//! polarization-normalized representation. [`unit_orbit_equal`] exists only
//! for deduplication and diagnostics.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("terminality criterion applied to a non-isolated singularity 1/{r}({a:?})")]
    NotIsolated { r: u64, a: [u64; 4] },
}

/// Quotient of affine 4-space by mu_r acting with exponents a1..a4.
///
/// Invariants: r >= 2, each residue reduced mod r and nonzero, stored sorted
/// ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuotientSingularity {
    pub r: u64,
    pub a: [u64; 4],
}

impl QuotientSingularity {
    pub fn new(r: u64, residues: [u64; 4]) -> Self {
        assert!(r >= 2, "group order must be at least 2");
        let mut a = residues.map(|x| x % r);
        assert!(
            a.iter().all(|&x| x != 0),
            "residues must be nonzero mod {}: {:?}",
            r,
            residues
        );
        a.sort_unstable();
        QuotientSingularity { r, a }
    }

    pub fn is_isolated(&self) -> bool {
        self.a.iter().all(|&ai| ai.gcd(&self.r) == 1)
    }

    /// Reid--Tai: terminal iff sum_i bar(k*a_i) > r for every k = 1..r-1,
    /// where bar is the least nonnegative residue mod r. Stated for the
    /// isolated case; applying it elsewhere is an error.
    pub fn is_terminal(&self) -> Result<bool, OrbifoldError> {
        if !self.is_isolated() {
            return Err(OrbifoldError::NotIsolated {
                r: self.r,
                a: self.a,
            });
        }
        Ok(reid_tai_all(self.r, &self.a))
    }

    /// True iff no residue equals 1 in this representation. Only meaningful
    /// on polarization-normalized representatives.
    pub fn k2_point_flag(&self) -> bool {
        self.a.iter().all(|&ai| ai != 1)
    }

    /// True iff some unit u mod r maps the residue multiset of `self` onto
    /// that of `other`.
    pub fn unit_orbit_equal(&self, other: &QuotientSingularity) -> bool {
        if self.r != other.r {
            return false;
        }
        let r = self.r;
        (1..r).filter(|u| u.gcd(&r) == 1).any(|u| {
            let mut mapped = self.a.map(|ai| (ai as u128 * u as u128 % r as u128) as u64);
            mapped.sort_unstable();
            mapped == other.a
        })
    }
}

/// Reid--Tai sum for one k, over residues of any length.
pub fn reid_tai_sum(r: u64, residues: &[u64], k: u64) -> u64 {
    residues
        .iter()
        .map(|&a| (k as u128 * a as u128 % r as u128) as u64)
        .sum()
}

/// Reid--Tai test over a residue tuple of any length.
pub fn reid_tai_all(r: u64, residues: &[u64]) -> bool {
    (1..r).all(|k| reid_tai_sum(r, residues, k) > r)
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1/{}({},{},{},{})",
            self.r, self.a[0], self.a[1], self.a[2], self.a[3]
        )
    }
}

/// Multiset of quotient singularities with multiplicities. Entries with the
/// same (r, residues) are merged; kept sorted for deterministic display and
/// comparison.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basket {
    entries: Vec<(QuotientSingularity, u64)>,
}

impl Basket {
    pub fn new() -> Self {
        Basket::default()
    }

    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (QuotientSingularity, u64)>,
    {
        let mut b = Basket::new();
        for (q, m) in entries {
            b.add(q, m);
        }
        b
    }

    pub fn add(&mut self, q: QuotientSingularity, multiplicity: u64) {
        assert!(multiplicity >= 1, "multiplicity must be positive");
        match self.entries.binary_search_by(|(p, _)| p.cmp(&q)) {
            Ok(i) => self.entries[i].1 += multiplicity,
            Err(i) => self.entries.insert(i, (q, multiplicity)),
        }
    }

    pub fn entries(&self) -> &[(QuotientSingularity, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_points(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn all_isolated(&self) -> bool {
        self.entries.iter().all(|(q, _)| q.is_isolated())
    }

    pub fn all_terminal(&self) -> Result<bool, OrbifoldError> {
        for (q, _) in &self.entries {
            if !q.is_terminal()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Some entry has every residue different from 1.
    pub fn has_k2_point(&self) -> bool {
        self.entries.iter().any(|(q, _)| q.k2_point_flag())
    }
}

/// Multiset equality of (singularity, multiplicity) pairs in the
/// polarization-normalized representation.
pub fn basket_equal(b1: &Basket, b2: &Basket) -> bool {
    b1.entries == b2.entries
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, (q, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *m > 1 {
                write!(f, "{} x {}", m, q)?;
            } else {
                write!(f, "{}", q)?;
            }
        }
        write!(f, "}}")
    }
}

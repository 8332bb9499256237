//! Sparse multivariate polynomials over a prime field with a weighted
//! graded-reverse-lexicographic term order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::field::PrimeField;

/// Exponent vector; the ring fixes the number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// self / other; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Ring context: a coefficient field and weighted variables.
#[derive(Debug, Clone)]
pub struct PolyRing {
    pub field: PrimeField,
    pub weights: Vec<u64>,
    pub names: Vec<String>,
}

impl PolyRing {
    pub fn new(field: PrimeField, weights: Vec<u64>, names: Vec<String>) -> Self {
        assert_eq!(weights.len(), names.len());
        PolyRing {
            field,
            weights,
            names,
        }
    }

    pub fn with_default_names(field: PrimeField, weights: Vec<u64>) -> Self {
        let names = (0..weights.len()).map(|i| format!("y{}", i)).collect();
        PolyRing::new(field, weights, names)
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Weighted graded reverse-lexicographic comparison: higher weighted
    /// degree wins; ties are broken by the smaller exponent on the last
    /// variable where they differ.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da = a.weighted_degree(&self.weights);
        let db = b.weighted_degree(&self.weights);
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.nvars()).rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Polynomial as a coefficient-sorted term list, leading term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    pub terms: Vec<(Monomial, u64)>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: u64) -> Self {
        let c = c % ring.field.p;
        if c == 0 {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn variable(ring: &PolyRing, i: usize) -> Self {
        SparsePoly {
            terms: vec![(Monomial::var(ring.nvars(), i), 1)],
        }
    }

    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, u64)>) -> Self {
        let mut map: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in terms {
            let c = c % ring.field.p;
            if c == 0 {
                continue;
            }
            let e = map.entry(m).or_insert(0);
            *e = ring.field.add(*e, c);
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|(a, _), (b, _)| ring.cmp_monomials(b, a));
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u64)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Weighted degree of the leading term (polynomials here are weighted
    /// homogeneous, so this is the degree).
    pub fn weighted_degree(&self, ring: &PolyRing) -> Option<u64> {
        self.leading_monomial()
            .map(|m| m.weighted_degree(&ring.weights))
    }

    pub fn is_homogeneous(&self, ring: &PolyRing) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.weighted_degree(&ring.weights);
                self.terms
                    .iter()
                    .all(|(m, _)| m.weighted_degree(&ring.weights) == d)
            }
        }
    }

    pub fn add(&self, other: &SparsePoly, ring: &PolyRing) -> SparsePoly {
        let f = &ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ring.cmp_monomials(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        SparsePoly { terms: out }
    }

    pub fn scale(&self, c: u64, ring: &PolyRing) -> SparsePoly {
        let c = c % ring.field.p;
        if c == 0 {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), ring.field.mul(*a, c)))
                .collect(),
        }
    }

    /// self - c * m * other, the S-polynomial / reduction workhorse.
    pub fn sub_scaled_shift(
        &self,
        other: &SparsePoly,
        c: u64,
        m: &Monomial,
        ring: &PolyRing,
    ) -> SparsePoly {
        let f = &ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let shifted = other.terms[j].0.mul(m);
            match ring.cmp_monomials(&self.terms[i].0, &shifted) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let v = f.neg(f.mul(c, other.terms[j].1));
                    if v != 0 {
                        out.push((shifted, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.sub(self.terms[i].1, f.mul(c, other.terms[j].1));
                    if v != 0 {
                        out.push((shifted, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            let shifted = other.terms[j].0.mul(m);
            let v = f.neg(f.mul(c, other.terms[j].1));
            if v != 0 {
                out.push((shifted, v));
            }
            j += 1;
        }
        SparsePoly { terms: out }
    }

    pub fn mul(&self, other: &SparsePoly, ring: &PolyRing) -> SparsePoly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), ring.field.mul(*c1, *c2)));
            }
        }
        SparsePoly::from_terms(ring, terms)
    }

    pub fn monic(&self, ring: &PolyRing) -> SparsePoly {
        match self.leading() {
            None => SparsePoly::zero(),
            Some((_, c)) => self.scale(ring.field.inv(*c), ring),
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize, ring: &PolyRing) -> SparsePoly {
        let f = &ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[i] > 0)
            .map(|(m, c)| {
                let mut e = m.clone();
                let k = e.exps[i] as u64 % f.p;
                e.exps[i] -= 1;
                (e, f.mul(*c, k))
            })
            .collect();
        SparsePoly::from_terms(ring, terms)
    }

    /// Sets the listed variables to 0 and (optionally) one variable to 1,
    /// producing a polynomial in the same ring.
    pub fn substitute_zero_one(
        &self,
        zero_vars: &[bool],
        one_var: Option<usize>,
        ring: &PolyRing,
    ) -> SparsePoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| {
                m.exps
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| e == 0 || !zero_vars[i])
            })
            .map(|(m, c)| {
                let mut e = m.clone();
                if let Some(v) = one_var {
                    e.exps[v] = 0;
                }
                (e, *c)
            })
            .collect();
        SparsePoly::from_terms(ring, terms)
    }

    /// Evaluate at a point given by coordinates in the field.
    pub fn evaluate(&self, point: &[u64], ring: &PolyRing) -> u64 {
        let f = &ring.field;
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    v = f.mul(v, f.pow(point[i], e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    pub fn display<'a>(&'a self, ring: &'a PolyRing) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a SparsePoly,
    ring: &'a PolyRing,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 || m.is_one() {
                write!(f, "{}", c)?;
                if !m.is_one() {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.names[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses a polynomial in the plain text form used by explicit model files:
/// terms joined by `+`/`-`, factors joined by `*`, powers with `^`, variable
/// names must exist in the ring. Example: `2*x0^3 + x1^2 - 3*x0*x12`.
pub fn parse_poly(ring: &PolyRing, text: &str) -> Result<SparsePoly, String> {
    let mut terms: Vec<(Monomial, u64)> = Vec::new();
    let text = text.trim();
    if text.is_empty() {
        return Ok(SparsePoly::zero());
    }
    // split into signed terms
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut neg = false;
    let mut started = false;
    for ch in text.chars() {
        match ch {
            '+' | '-' if started => {
                chunks.push((neg, current.trim().to_string()));
                current = String::new();
                neg = ch == '-';
            }
            '-' if !started => {
                neg = true;
                started = true;
            }
            _ => {
                if !ch.is_whitespace() {
                    started = true;
                }
                current.push(ch);
            }
        }
    }
    chunks.push((neg, current.trim().to_string()));
    for (neg, chunk) in chunks {
        if chunk.is_empty() {
            return Err("empty term".into());
        }
        let mut coeff: u64 = 1;
        let mut mono = Monomial::one(ring.nvars());
        for factor in chunk.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(format!("empty factor in `{chunk}`"));
            }
            if factor.chars().all(|c| c.is_ascii_digit()) {
                let v: u64 = factor.parse().map_err(|_| format!("bad number `{factor}`"))?;
                coeff = ring.field.mul(coeff, v % ring.field.p);
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u16>()
                        .map_err(|_| format!("bad exponent in `{factor}`"))?,
                ),
                None => (factor, 1),
            };
            let idx = ring
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| format!("unknown variable `{name}`"))?;
            mono.exps[idx] += exp;
        }
        let c = if neg { ring.field.neg(coeff) } else { coeff };
        terms.push((mono, c));
    }
    Ok(SparsePoly::from_terms(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(
            PrimeField::new(101),
            vec![1, 1, 2],
            vec!["x".into(), "y".into(), "z".into()],
        )
    }

    #[test]
    fn order_is_weighted_grevlex() {
        let r = ring();
        // z has weight 2: z > x*y? equal degree 2: grevlex tie-break:
        // exponent on the last variable smaller wins => x*y > z
        let xy = Monomial::from_exps(vec![1, 1, 0]);
        let z = Monomial::from_exps(vec![0, 0, 1]);
        assert_eq!(r.cmp_monomials(&xy, &z), Ordering::Greater);
        let x2 = Monomial::from_exps(vec![2, 0, 0]);
        assert_eq!(r.cmp_monomials(&x2, &xy), Ordering::Greater);
        // degree dominates
        let y3 = Monomial::from_exps(vec![0, 3, 0]);
        assert_eq!(r.cmp_monomials(&y3, &x2), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_derivative() {
        let r = ring();
        let f = parse_poly(&r, "x^2 + 2*x*y + z").unwrap();
        let g = parse_poly(&r, "x^2 - z").unwrap();
        let sum = f.add(&g, &r);
        assert_eq!(sum, parse_poly(&r, "2*x^2 + 2*x*y").unwrap());
        let df = f.derivative(0, &r);
        assert_eq!(df, parse_poly(&r, "2*x + 2*y").unwrap());
        let prod = f.mul(&g, &r);
        assert!(prod.is_homogeneous(&r));
        assert_eq!(prod.weighted_degree(&r), Some(4));
    }

    #[test]
    fn substitution_and_evaluation() {
        let r = ring();
        let f = parse_poly(&r, "x^2 + 2*x*y + 3*z").unwrap();
        let g = f.substitute_zero_one(&[false, true, false], Some(0), &r);
        assert_eq!(g, parse_poly(&r, "1 + 3*z").unwrap());
        assert_eq!(f.evaluate(&[1, 2, 3], &r), (1 + 4 + 9) % 101);
    }

    #[test]
    fn parse_negative_and_display() {
        let r = ring();
        let f = parse_poly(&r, "-x + 100*y").unwrap();
        // -1 = 100 mod 101, so -x + 100y = 100x + 100y ... check value
        assert_eq!(f.evaluate(&[1, 0, 0], &r), 100);
        let text = f.display(&r).to_string();
        let g = parse_poly(&r, &text).unwrap();
        assert_eq!(f, g);
    }
}

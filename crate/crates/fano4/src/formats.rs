//! The three Gorenstein format families and their weight combinatorics.
//!
//! Half-integer parameters (Pfaffian c-vectors, Segre a/b-vectors) are kept
//! as doubled integers end to end; integrality of the pairwise sums that
//! become coordinate weights is enforced at construction.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("pairwise parameter sum {doubled}/2 is not an integer weight")]
    NonIntegralWeight { doubled: i64 },
    #[error("format weight {0} is not positive")]
    NonPositiveWeight(i64),
    #[error("no monomial of weighted degree {0} exists in the ambient weights")]
    MissingForm(u64),
    #[error("complete-intersection degree {0} equals an ambient weight (linear cone)")]
    LinearCone(u64),
    #[error("ambient has {got} weights but codimension {codim} needs {want}")]
    AmbientSizeMismatch { got: usize, want: usize, codim: usize },
    #[error("equation degree {0} is not positive")]
    NonPositiveDegree(i64),
    #[error("invalid descriptor: {0}")]
    Parse(String),
}

/// Multiset of positive integer weights of a weighted projective space,
/// stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightSystem(Vec<u64>);

impl WeightSystem {
    pub fn new(mut weights: Vec<u64>) -> Self {
        assert!(!weights.is_empty() && weights.iter().all(|&w| w >= 1));
        weights.sort_unstable();
        WeightSystem(weights)
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Wellformedness of the ambient space: omitting any one weight leaves
    /// gcd 1.
    pub fn is_wellformed(&self) -> bool {
        if self.0.len() <= 1 {
            return self.0 == [1];
        }
        // prefix/suffix gcds avoid the quadratic loop
        let n = self.0.len();
        let mut prefix = vec![0u64; n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i].gcd(&self.0[i]);
        }
        let mut suffix = vec![0u64; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1].gcd(&self.0[i]);
        }
        (0..n).all(|i| prefix[i].gcd(&suffix[i + 1]) == 1)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", w)?;
        }
        write!(f, "]")
    }
}

/// Membership table for weighted-degree monomials: `has(d)` answers whether
/// some monomial of weighted degree `d` exists in the given weights.
#[derive(Debug, Clone)]
pub struct MonomialTable {
    weights: Vec<u64>,
    reachable: Vec<bool>,
}

impl MonomialTable {
    pub fn new(weights: &[u64], max_degree: u64) -> Self {
        let mut reachable = vec![false; (max_degree + 1) as usize];
        reachable[0] = true;
        for &w in weights {
            let w = w as usize;
            if w > max_degree as usize {
                continue;
            }
            for d in w..reachable.len() {
                if reachable[d - w] {
                    reachable[d] = true;
                }
            }
        }
        MonomialTable {
            weights: weights.to_vec(),
            reachable,
        }
    }

    pub fn has(&self, d: u64) -> bool {
        self.reachable.get(d as usize).copied().unwrap_or(false)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

/// True iff some monomial of weighted degree `d` exists in `weights`.
pub fn degree_representable(weights: &[u64], d: u64) -> bool {
    if d == 0 {
        return true;
    }
    let mut reachable = vec![false; (d + 1) as usize];
    reachable[0] = true;
    for &w in weights {
        let w = w as usize;
        if w as u64 > d {
            continue;
        }
        for k in w..reachable.len() {
            if reachable[k - w] {
                reachable[k] = true;
            }
        }
    }
    reachable[d as usize]
}

/// One of the three Gorenstein formats. Pfaffian and Segre parameters are
/// doubled integers (so -1/2 is stored as -1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FormatDescriptor {
    /// Weighted complete intersection of the given degrees, codim = number
    /// of degrees.
    Ci { degrees: Vec<u64> },
    /// Regular pullback of wGr(2,5): five 4x4 Pfaffians of a 5x5 skew
    /// matrix with coordinate weights c_i + c_j.
    PfaffianGr25 { c2: [i64; 5] },
    /// Regular pullback of wP^2 x P^2: nine 2x2 minors of a 3x3 matrix with
    /// coordinate weights a_i + b_j.
    SegreP2P2 { a2: [i64; 3], b2: [i64; 3] },
}

impl FormatDescriptor {
    pub fn ci(mut degrees: Vec<u64>) -> Self {
        assert!(
            (2..=4).contains(&degrees.len()),
            "complete intersections of codimension 2..4 only"
        );
        assert!(degrees.iter().all(|&d| d >= 2));
        degrees.sort_unstable();
        FormatDescriptor::Ci { degrees }
    }

    /// Build from a doubled c-vector; sorts and validates pairwise sums.
    pub fn pfaffian(mut c2: [i64; 5]) -> Result<Self, FormatError> {
        c2.sort_unstable();
        for i in 0..5 {
            for j in (i + 1)..5 {
                let s = c2[i] + c2[j];
                if s.rem_euclid(2) != 0 {
                    return Err(FormatError::NonIntegralWeight { doubled: s });
                }
                if s <= 0 {
                    return Err(FormatError::NonPositiveWeight(s / 2));
                }
            }
        }
        Ok(FormatDescriptor::PfaffianGr25 { c2 })
    }

    /// Build from doubled a/b-vectors; normalizes by the shift gauge
    /// (a,b) -> (a - s, b + s) so that min(a) = 0, sorts each vector and
    /// picks the lexicographically smaller of the (a,b) / (b,a) pair.
    pub fn segre(mut a2: [i64; 3], mut b2: [i64; 3]) -> Result<Self, FormatError> {
        a2.sort_unstable();
        b2.sort_unstable();
        for &ai in &a2 {
            for &bj in &b2 {
                let s = ai + bj;
                if s.rem_euclid(2) != 0 {
                    return Err(FormatError::NonIntegralWeight { doubled: s });
                }
                if s <= 0 {
                    return Err(FormatError::NonPositiveWeight(s / 2));
                }
            }
        }
        let normalize = |a: [i64; 3], b: [i64; 3]| -> ([i64; 3], [i64; 3]) {
            let s = a[0];
            (a.map(|x| x - s), b.map(|x| x + s))
        };
        let (na, nb) = normalize(a2, b2);
        let (ma, mb) = normalize(b2, a2);
        let (a2, b2) = if (na, nb) <= (ma, mb) { (na, nb) } else { (ma, mb) };
        Ok(FormatDescriptor::SegreP2P2 { a2, b2 })
    }

    pub fn codim(&self) -> usize {
        match self {
            FormatDescriptor::Ci { degrees } => degrees.len(),
            FormatDescriptor::PfaffianGr25 { .. } => 3,
            FormatDescriptor::SegreP2P2 { .. } => 4,
        }
    }

    /// Number of ambient weights a family in this format carries.
    pub fn ambient_size(&self) -> usize {
        4 + self.codim() + 1
    }

    /// The coordinate weights of the format variety itself, in coordinate
    /// order (Pfaffian: x_ij for i<j lex; Segre: row-major). Empty for a
    /// complete intersection, whose format weights are the ambient weights.
    pub fn format_weights(&self) -> Vec<u64> {
        match self {
            FormatDescriptor::Ci { .. } => Vec::new(),
            FormatDescriptor::PfaffianGr25 { c2 } => {
                let mut out = Vec::with_capacity(10);
                for i in 0..5 {
                    for j in (i + 1)..5 {
                        out.push(((c2[i] + c2[j]) / 2) as u64);
                    }
                }
                out
            }
            FormatDescriptor::SegreP2P2 { a2, b2 } => {
                let mut out = Vec::with_capacity(9);
                for &ai in a2 {
                    for &bj in b2 {
                        out.push(((ai + bj) / 2) as u64);
                    }
                }
                out
            }
        }
    }

    /// Degrees of the defining equations: the CI degrees, the five Pfaffian
    /// degrees sigma - c_k, or the nine 2x2 minor degrees a_i+a_j+b_k+b_l.
    pub fn equation_degrees(&self) -> Vec<i64> {
        match self {
            FormatDescriptor::Ci { degrees } => degrees.iter().map(|&d| d as i64).collect(),
            FormatDescriptor::PfaffianGr25 { c2 } => {
                let sigma2: i64 = c2.iter().sum();
                c2.iter().map(|&ck| (sigma2 - ck) / 2).collect()
            }
            FormatDescriptor::SegreP2P2 { a2, b2 } => {
                let mut out = Vec::with_capacity(9);
                for i in 0..3 {
                    for j in (i + 1)..3 {
                        for k in 0..3 {
                            for l in (k + 1)..3 {
                                out.push((a2[i] + a2[j] + b2[k] + b2[l]) / 2);
                            }
                        }
                    }
                }
                out
            }
        }
    }

    /// Top degree of the Gorenstein numerator. The adjunction rule
    /// K = (socle - sum of ambient weights) * H holds for every regular
    /// pullback in these formats.
    pub fn socle_degree(&self) -> u64 {
        match self {
            FormatDescriptor::Ci { degrees } => degrees.iter().sum(),
            FormatDescriptor::PfaffianGr25 { c2 } => {
                let sigma2: i64 = c2.iter().sum();
                sigma2 as u64
            }
            FormatDescriptor::SegreP2P2 { a2, b2 } => {
                let s: i64 = a2.iter().sum::<i64>() + b2.iter().sum::<i64>();
                s as u64
            }
        }
    }
}

fn fmt_halves(f: &mut fmt::Formatter<'_>, doubled: &[i64]) -> fmt::Result {
    write!(f, "[")?;
    for (i, &v) in doubled.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        if v % 2 == 0 {
            write!(f, "{}", v / 2)?;
        } else {
            write!(f, "{}/2", v)?;
        }
    }
    write!(f, "]")
}

struct Halves<'a>(&'a [i64]);
impl fmt::Display for Halves<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_halves(f, self.0)
    }
}

/// A format descriptor together with the ambient weight system of its
/// anticanonical embedding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FormatFamily {
    pub descriptor: FormatDescriptor,
    pub ambient: WeightSystem,
}

/// Outcome of regular-pullback validation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PullbackReport {
    /// Format weights realized by a distinct ambient coordinate under the
    /// greedy matching.
    pub matched_weights: Vec<u64>,
    /// Format weights realized by general forms.
    pub general_form_weights: Vec<u64>,
    /// Audit flags that do not invalidate the family (e.g. an equation of
    /// degree 1 in a non-CI format).
    pub warnings: Vec<String>,
}

impl FormatFamily {
    pub fn new(descriptor: FormatDescriptor, ambient: WeightSystem) -> Self {
        FormatFamily {
            descriptor,
            ambient,
        }
    }

    /// socle - sum of ambient weights; index-1 families return -1.
    pub fn canonical_degree(&self) -> i64 {
        self.descriptor.socle_degree() as i64 - self.ambient.sum() as i64
    }

    /// Checks that the family can exist as a regular pullback: the ambient
    /// size matches the codimension, every format weight is realized by some
    /// monomial, and (CI only) no equation degree equals an ambient weight.
    pub fn validate_pullback(&self) -> Result<PullbackReport, FormatError> {
        let want = self.descriptor.ambient_size();
        if self.ambient.len() != want && !self.is_identity_pullback() {
            return Err(FormatError::AmbientSizeMismatch {
                got: self.ambient.len(),
                want,
                codim: self.descriptor.codim(),
            });
        }
        for &d in &self.descriptor.equation_degrees() {
            if d <= 0 {
                return Err(FormatError::NonPositiveDegree(d));
            }
        }
        let mut report = PullbackReport::default();
        let weights = self.ambient.weights();
        let max_needed = self
            .descriptor
            .format_weights()
            .iter()
            .copied()
            .chain(self.descriptor.equation_degrees().iter().map(|&d| d as u64))
            .max()
            .unwrap_or(0);
        let table = MonomialTable::new(weights, max_needed);
        match &self.descriptor {
            FormatDescriptor::Ci { degrees } => {
                for &d in degrees {
                    if weights.contains(&d) {
                        return Err(FormatError::LinearCone(d));
                    }
                    if !table.has(d) {
                        return Err(FormatError::MissingForm(d));
                    }
                }
            }
            _ => {
                let mut pool: Vec<u64> = weights.to_vec();
                for w in self.descriptor.format_weights() {
                    if !table.has(w) {
                        return Err(FormatError::MissingForm(w));
                    }
                    if let Some(pos) = pool.iter().position(|&x| x == w) {
                        pool.remove(pos);
                        report.matched_weights.push(w);
                    } else {
                        report.general_form_weights.push(w);
                    }
                }
                for &d in &self.descriptor.equation_degrees() {
                    if d == 1 {
                        report.warnings.push(format!("equation of degree 1"));
                    }
                }
            }
        }
        Ok(report)
    }

    /// The degenerate pullback of the format along its own coordinates
    /// (ambient equals the format weight multiset). Yields the format
    /// variety itself rather than a 4-fold; used by oracle computations.
    pub fn is_identity_pullback(&self) -> bool {
        let mut fw = self.descriptor.format_weights();
        if fw.is_empty() {
            return false;
        }
        fw.sort_unstable();
        fw == self.ambient.weights()
    }

    /// Canonical census key: the textual descriptor.
    pub fn descriptor_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FormatFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.descriptor {
            FormatDescriptor::Ci { degrees } => {
                write!(f, "CI c={} d=[", degrees.len())?;
                for (i, d) in degrees.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", d)?;
                }
                write!(f, "] w={}", self.ambient)
            }
            FormatDescriptor::PfaffianGr25 { c2 } => {
                write!(f, "GR c={} w={}", Halves(c2), self.ambient)
            }
            FormatDescriptor::SegreP2P2 { a2, b2 } => {
                write!(f, "P2P2 a={} b={} w={}", Halves(a2), Halves(b2), self.ambient)
            }
        }
    }
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, FormatError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| FormatError::Parse(format!("expected [..] list, got `{s}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| FormatError::Parse(format!("bad list entry `{tok}`")))
        })
        .collect()
}

fn parse_halves(s: &str) -> Result<Vec<i64>, FormatError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| FormatError::Parse(format!("expected [..] list, got `{s}`")))?;
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            if let Some(num) = tok.strip_suffix("/2") {
                num.parse::<i64>()
                    .map_err(|_| FormatError::Parse(format!("bad half-integer `{tok}`")))
            } else {
                tok.parse::<i64>()
                    .map(|v| 2 * v)
                    .map_err(|_| FormatError::Parse(format!("bad half-integer `{tok}`")))
            }
        })
        .collect()
}

impl std::str::FromStr for FormatFamily {
    type Err = FormatError;

    /// Parses the textual descriptor format, e.g.
    /// `CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]`,
    /// `GR c=[-1/2,7/2,11/2,17/2,37/2] w=[2,3,5,7,8,9,11,27]`,
    /// `P2P2 a=[0,0,10] b=[1,1,11] w=[1,1,1,1,3,7,11,11,11]`.
    fn from_str(s: &str) -> Result<Self, FormatError> {
        let mut fields = std::collections::HashMap::new();
        let mut tokens = s.split_whitespace();
        let kind = tokens
            .next()
            .ok_or_else(|| FormatError::Parse("empty descriptor".into()))?;
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| FormatError::Parse(format!("expected key=value, got `{tok}`")))?;
            fields.insert(k.to_string(), v.to_string());
        }
        let get = |k: &str| -> Result<&String, FormatError> {
            fields
                .get(k)
                .ok_or_else(|| FormatError::Parse(format!("missing field `{k}`")))
        };
        let ambient = WeightSystem::new(parse_list::<u64>(get("w")?)?);
        let descriptor = match kind {
            "CI" => {
                let degrees = parse_list::<u64>(get("d")?)?;
                if let Some(c) = fields.get("c") {
                    let c: usize = c
                        .parse()
                        .map_err(|_| FormatError::Parse(format!("bad codim `{c}`")))?;
                    if c != degrees.len() {
                        return Err(FormatError::Parse(format!(
                            "codim {} does not match {} degrees",
                            c,
                            degrees.len()
                        )));
                    }
                }
                FormatDescriptor::ci(degrees)
            }
            "GR" => {
                let c2 = parse_halves(get("c")?)?;
                let c2: [i64; 5] = c2
                    .try_into()
                    .map_err(|_| FormatError::Parse("GR needs 5 parameters".into()))?;
                FormatDescriptor::pfaffian(c2)?
            }
            "P2P2" => {
                let a2: [i64; 3] = parse_halves(get("a")?)?
                    .try_into()
                    .map_err(|_| FormatError::Parse("P2P2 needs 3+3 parameters".into()))?;
                let b2: [i64; 3] = parse_halves(get("b")?)?
                    .try_into()
                    .map_err(|_| FormatError::Parse("P2P2 needs 3+3 parameters".into()))?;
                FormatDescriptor::segre(a2, b2)?
            }
            other => return Err(FormatError::Parse(format!("unknown format `{other}`"))),
        };
        Ok(FormatFamily::new(descriptor, ambient))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<u64>) -> Vec<u64> {
        v.sort_unstable();
        v
    }

    #[test]
    fn pfaffian_weights_and_degrees() {
        // doubled c-vector for (-1/2, 7/2, 11/2, 17/2, 37/2)
        let d = FormatDescriptor::pfaffian([-1, 7, 11, 17, 37]).unwrap();
        assert_eq!(
            sorted(d.format_weights()),
            vec![3, 5, 8, 9, 12, 14, 18, 22, 24, 27]
        );
        let mut degs = d.equation_degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![17, 27, 30, 32, 36]);
        assert_eq!(d.socle_degree(), 71);
    }

    #[test]
    fn pfaffian_unweighted() {
        let d = FormatDescriptor::pfaffian([1, 1, 1, 1, 1]).unwrap();
        assert_eq!(d.format_weights(), vec![1; 10]);
        assert_eq!(d.equation_degrees(), vec![2; 5]);
        assert_eq!(d.socle_degree(), 5);
    }

    #[test]
    fn segre_weight_matrix() {
        let d = FormatDescriptor::segre([0, 0, 20], [2, 2, 22]).unwrap();
        // rows (1,1,11),(1,1,11),(11,11,21)
        assert_eq!(d.format_weights(), vec![1, 1, 11, 1, 1, 11, 11, 11, 21]);
        assert_eq!(d.socle_degree(), 46);
    }

    #[test]
    fn segre_degrees_example() {
        let d = FormatDescriptor::segre([0, 4, 14], [6, 8, 10]).unwrap();
        let mut degs = d.equation_degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![9, 10, 11, 14, 15, 16, 16, 17, 18]);
    }

    #[test]
    fn segre_gauge_normalization() {
        // shifting (a,b) by +-1/2 along the gauge yields the same descriptor
        let d1 = FormatDescriptor::segre([0, 0, 20], [2, 2, 22]).unwrap();
        let d2 = FormatDescriptor::segre([1, 1, 21], [1, 1, 21]).unwrap();
        let d3 = FormatDescriptor::segre([2, 2, 22], [0, 0, 20]).unwrap();
        assert_eq!(d1, d2);
        assert_eq!(d1, d3);
    }

    #[test]
    fn parity_validation() {
        assert!(matches!(
            FormatDescriptor::pfaffian([0, 1, 1, 1, 1]),
            Err(FormatError::NonIntegralWeight { .. })
        ));
        assert!(matches!(
            FormatDescriptor::segre([0, 0, 1], [2, 2, 2]),
            Err(FormatError::NonIntegralWeight { .. })
        ));
        assert!(matches!(
            FormatDescriptor::pfaffian([-3, 1, 5, 7, 9]),
            Err(FormatError::NonPositiveWeight(_))
        ));
    }

    #[test]
    fn canonical_degrees() {
        let x3640 = FormatFamily::new(
            FormatDescriptor::ci(vec![36, 40]),
            WeightSystem::new(vec![5, 5, 7, 8, 9, 12, 31]),
        );
        assert_eq!(x3640.canonical_degree(), -1);

        let x2222 = FormatFamily::new(
            FormatDescriptor::ci(vec![2, 2, 2, 2]),
            WeightSystem::new(vec![1; 9]),
        );
        assert_eq!(x2222.canonical_degree(), -1);

        let gr5 = FormatFamily::new(
            FormatDescriptor::pfaffian([1, 1, 1, 21, 21]).unwrap(),
            WeightSystem::new(vec![1, 1, 1, 3, 7, 11, 11, 11]),
        );
        assert_eq!(gr5.descriptor.socle_degree(), 45);
        assert_eq!(gr5.canonical_degree(), -1);
    }

    #[test]
    fn pullback_validation() {
        let gr5 = FormatFamily::new(
            FormatDescriptor::pfaffian([1, 1, 1, 21, 21]).unwrap(),
            WeightSystem::new(vec![1, 1, 1, 3, 7, 11, 11, 11]),
        );
        let report = gr5.validate_pullback().unwrap();
        assert_eq!(report.matched_weights, vec![1, 1, 11, 11, 1, 11]);
        assert_eq!(report.general_form_weights, vec![11, 11, 11, 21]);

        let ci = FormatFamily::new(
            FormatDescriptor::ci(vec![16, 18, 20]),
            WeightSystem::new(vec![4, 5, 5, 6, 7, 8, 9, 11]),
        );
        ci.validate_pullback().unwrap();

        let cone = FormatFamily::new(
            FormatDescriptor::ci(vec![5, 36]),
            WeightSystem::new(vec![5, 5, 7, 8, 9, 6, 1]),
        );
        assert!(matches!(
            cone.validate_pullback(),
            Err(FormatError::LinearCone(5))
        ));

        let missing = FormatFamily::new(
            FormatDescriptor::segre([0, 0, 0], [2, 2, 2]).unwrap(),
            WeightSystem::new(vec![2, 2, 2, 2, 2, 3, 3, 3, 3]),
        );
        assert!(matches!(
            missing.validate_pullback(),
            Err(FormatError::MissingForm(1))
        ));
    }

    #[test]
    fn descriptor_roundtrip() {
        for s in [
            "CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]",
            "GR c=[-1/2,7/2,11/2,17/2,37/2] w=[2,3,5,7,8,9,11,27]",
            "P2P2 a=[0,0,10] b=[1,1,11] w=[1,1,1,1,3,7,11,11,11]",
        ] {
            let fam: FormatFamily = s.parse().unwrap();
            assert_eq!(fam.to_string(), s);
        }
        let half: FormatFamily = "GR c=[1/2,1/2,1/2,21/2,21/2] w=[1,1,1,3,7,11,11,11]"
            .parse()
            .unwrap();
        assert_eq!(half.canonical_degree(), -1);
    }

    #[test]
    fn wellformed_examples() {
        assert!(WeightSystem::new(vec![1, 1, 2, 3]).is_wellformed());
        assert!(!WeightSystem::new(vec![2, 2, 2, 3]).is_wellformed());
        assert!(WeightSystem::new(vec![5, 5, 7, 8, 9, 12, 31]).is_wellformed());
    }

    #[test]
    fn format_weight_identities_on_random_parameters() {
        let mut state = 0x13198a2e03707344u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let parity = (next() % 2) as i64;
            let mut c2: [i64; 5] = std::array::from_fn(|_| 2 * (next() % 12) as i64 + parity);
            c2[0] -= 2 * (next() % 3) as i64;
            let Ok(d) = FormatDescriptor::pfaffian(c2) else {
                continue;
            };
            let sigma2: i64 = c2.iter().sum();
            let fw = d.format_weights();
            assert_eq!(fw.iter().sum::<u64>() as i64, 2 * sigma2);
            assert_eq!(d.socle_degree() as i64, sigma2);
            // equation degree plus its c_k recovers sigma
            let mut c_sorted = c2.to_vec();
            c_sorted.sort_unstable();
            for (deg, ck) in d.equation_degrees().iter().zip(c_sorted.iter()) {
                assert_eq!(2 * deg + ck, sigma2);
            }
        }
        for _ in 0..200 {
            let parity = (next() % 2) as i64;
            let a2: [i64; 3] = std::array::from_fn(|_| 2 * (next() % 10) as i64 + parity);
            let b2: [i64; 3] = std::array::from_fn(|_| 2 * (next() % 10 + 1) as i64 - parity);
            let Ok(d) = FormatDescriptor::segre(a2, b2) else {
                continue;
            };
            let fw = d.format_weights();
            let total: u64 = fw.iter().sum();
            let diag: u64 = (0..3).map(|i| fw[4 * i]).sum();
            assert_eq!(d.socle_degree(), total - diag);
        }
    }
}

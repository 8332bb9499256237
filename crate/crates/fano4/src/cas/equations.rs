//! Construction of explicit sparse equation systems for format families:
//! general forms with deterministic seeded randomness, the greedy matching
//! of format coordinates to ambient variables, Pfaffian and minor
//! expansion, and loading of explicit models from plain text.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::poly::{parse_poly, Monomial, PolyRing, SparsePoly};
use super::CasError;
use crate::formats::{FormatDescriptor, FormatFamily};

/// What a format coordinate was substituted with.
#[derive(Debug, Clone)]
pub enum ModelEntry {
    /// A distinct ambient variable (by index).
    Ambient(usize),
    /// A general form of the given weighted degree.
    Form(u64),
    /// An explicit polynomial loaded from a model file.
    Explicit,
}

/// A format family together with explicit defining equations over F_p.
pub struct EquationSystem {
    pub family: FormatFamily,
    pub ring: PolyRing,
    pub polys: Vec<SparsePoly>,
    pub degrees: Vec<u64>,
    pub provenance: Vec<String>,
    pub substitutions: Vec<(String, ModelEntry)>,
    /// Substituted matrix entries, keyed by coordinate label; empty for
    /// complete intersections.
    pub entries: Vec<(String, SparsePoly)>,
    pub codim: usize,
    pub seed: u64,
}

impl EquationSystem {
    /// Jacobian matrix: rows indexed by equations, columns by variables.
    /// Every entry is weighted-homogeneous of degree d_j - w_i.
    pub fn jacobian(&self) -> Vec<Vec<SparsePoly>> {
        let rows: Vec<Vec<SparsePoly>> = self
            .polys
            .iter()
            .map(|f| {
                (0..self.ring.nvars())
                    .map(|i| f.derivative(i, &self.ring))
                    .collect()
            })
            .collect();
        #[cfg(debug_assertions)]
        for (j, row) in rows.iter().enumerate() {
            for (i, entry) in row.iter().enumerate() {
                if let Some(d) = entry.weighted_degree(&self.ring) {
                    debug_assert!(entry.is_homogeneous(&self.ring));
                    debug_assert_eq!(
                        d,
                        self.degrees[j] - self.ring.weights[i],
                        "Jacobian entry ({j},{i}) has the wrong weighted degree"
                    );
                }
            }
        }
        rows
    }
}

/// All index subsets whose weights share a common factor >= 2, with that
/// gcd. These are the supports on which orbifold points can live.
pub fn stratum_supports(weights: &[u64]) -> Vec<(Vec<usize>, u64)> {
    let pool: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] >= 2).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << pool.len()) {
        let subset: Vec<usize> = pool
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        let g = subset
            .iter()
            .fold(0u64, |acc, &i| num_integer::gcd(acc, weights[i]));
        if g >= 2 {
            out.push((subset, g));
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(&b.0)));
    out
}

/// Monomials of exact weighted degree `d` with support inside `support`
/// (list of variable indices), in lexicographic order of exponents.
pub fn monomials_of_degree(
    weights: &[u64],
    support: &[usize],
    d: u64,
    cap: usize,
) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; weights.len()];
    fn rec(
        weights: &[u64],
        support: &[usize],
        pos: usize,
        remaining: u64,
        exps: &mut Vec<u16>,
        out: &mut Vec<Monomial>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        if pos == support.len() {
            if remaining == 0 {
                out.push(Monomial::from_exps(exps.clone()));
            }
            return;
        }
        let w = weights[support[pos]];
        let max_e = remaining / w;
        for e in 0..=max_e {
            exps[support[pos]] = e as u16;
            rec(weights, support, pos + 1, remaining - e * w, exps, out, cap);
        }
        exps[support[pos]] = 0;
    }
    rec(weights, support, 0, d, &mut exps, &mut out, cap);
    out
}

/// Number of monomials of weighted degree exactly `d`.
pub fn count_monomials(weights: &[u64], d: u64) -> u64 {
    let mut table = vec![0u64; (d + 1) as usize];
    table[0] = 1;
    for &w in weights {
        let w = w as usize;
        if w as u64 > d {
            continue;
        }
        for k in w..table.len() {
            table[k] += table[k - w];
        }
    }
    table[d as usize]
}

/// Unranks the `rank`-th monomial (0-based, lexicographic by exponent of
/// the first variable descending) of weighted degree `d`.
fn unrank_monomial(weights: &[u64], d: u64, mut rank: u64) -> Monomial {
    let n = weights.len();
    let mut exps = vec![0u16; n];
    let mut remaining = d;
    for i in 0..n {
        let rest = &weights[i + 1..];
        let mut e = 0u64;
        loop {
            let used = e * weights[i];
            if used > remaining {
                unreachable!("rank out of range");
            }
            let ways = if rest.is_empty() {
                u64::from(remaining - used == 0)
            } else {
                count_monomials(rest, remaining - used)
            };
            if rank < ways {
                exps[i] = e as u16;
                remaining -= used;
                break;
            }
            rank -= ways;
            e += 1;
        }
    }
    Monomial::from_exps(exps)
}

/// Options controlling sparse general forms.
#[derive(Debug, Clone)]
pub struct FormOptions {
    /// Random extra terms beyond the structural ones.
    pub extra_terms: usize,
    /// Keep every pure-stratum monomial when a stratum has at most this
    /// many; sample beyond it.
    pub stratum_full_cap: usize,
}

impl Default for FormOptions {
    fn default() -> Self {
        FormOptions {
            extra_terms: 12,
            stratum_full_cap: 64,
        }
    }
}

/// A general weighted-homogeneous form of degree `d`. Sparse, but with the
/// monomials that control stratum restrictions and Jacobian ranks forced
/// in: all pure powers, pure-stratum monomials for every stratum support,
/// and one mixed stratum-times-outside-variable monomial per pair.
pub fn general_form(
    ring: &PolyRing,
    d: u64,
    supports: &[(Vec<usize>, u64)],
    rng: &mut ChaCha8Rng,
    opts: &FormOptions,
) -> SparsePoly {
    let weights = &ring.weights;
    let n = ring.nvars();
    let mut chosen: BTreeSet<Monomial> = BTreeSet::new();
    for i in 0..n {
        if d % weights[i] == 0 {
            let mut m = Monomial::one(n);
            m.exps[i] = (d / weights[i]) as u16;
            chosen.insert(m);
        }
    }
    for (support, _) in supports {
        let pure = monomials_of_degree(weights, support, d, 100_000);
        if pure.len() <= opts.stratum_full_cap {
            chosen.extend(pure.iter().cloned());
        } else {
            chosen.extend(pure.iter().take(8).cloned());
            chosen.extend(pure.iter().rev().take(8).cloned());
            for _ in 0..16 {
                let k = rng.gen_range(0..pure.len());
                chosen.insert(pure[k].clone());
            }
        }
        for e in 0..n {
            if support.contains(&e) || weights[e] > d {
                continue;
            }
            let mixed = monomials_of_degree(weights, support, d - weights[e], 4096);
            if !mixed.is_empty() {
                let k = rng.gen_range(0..mixed.len());
                let mut m = mixed[k].clone();
                m.exps[e] += 1;
                chosen.insert(m);
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let total = count_monomials(weights, d);
    if total > 0 {
        for _ in 0..opts.extra_terms {
            let rank = rng.gen_range(0..total);
            let _ = &all;
            chosen.insert(unrank_monomial(weights, d, rank));
        }
    }
    let p = ring.field.p;
    let terms: Vec<(Monomial, u64)> = chosen
        .into_iter()
        .map(|m| (m, rng.gen_range(1..p)))
        .collect();
    SparsePoly::from_terms(ring, terms)
}

fn fnv1a(parts: &[&[u8]]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for part in parts {
        for &b in *part {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

/// Deterministic stream for one substitution slot of one family.
fn slot_rng(seed: u64, family_key: &str, slot: usize) -> ChaCha8Rng {
    let h = fnv1a(&[
        &seed.to_le_bytes(),
        family_key.as_bytes(),
        &(slot as u64).to_le_bytes(),
    ]);
    ChaCha8Rng::seed_from_u64(h)
}

fn ambient_ring(family: &FormatFamily, p: u64) -> PolyRing {
    let weights = family.ambient.weights().to_vec();
    let names = (0..weights.len()).map(|i| format!("x{}", i)).collect();
    PolyRing::new(PrimeField::new(p), weights, names)
}

/// Pfaffian coordinate labels in lexicographic pair order.
fn pfaffian_labels() -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for i in 1..=5usize {
        for j in (i + 1)..=5 {
            out.push((i, j, format!("m{}{}", i, j)));
        }
    }
    out
}

fn segre_labels() -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for i in 1..=3usize {
        for j in 1..=3 {
            out.push((i, j, format!("m{}{}", i, j)));
        }
    }
    out
}

/// Builds the defining equations of a general member. Identical
/// (family, seed, p) inputs always produce identical systems.
pub fn build_equations(
    family: &FormatFamily,
    seed: u64,
    p: u64,
    opts: &FormOptions,
) -> Result<EquationSystem, CasError> {
    build_equations_with(family, seed, p, opts, &HashMap::new())
}

/// As [`build_equations`], with explicit overrides for general-form slots
/// keyed by coordinate label (`m11`, `m12`, ... for matrix formats).
/// Override text is parsed in the ambient variables `x0..xn`.
pub fn build_equations_with(
    family: &FormatFamily,
    seed: u64,
    p: u64,
    opts: &FormOptions,
    overrides: &HashMap<String, String>,
) -> Result<EquationSystem, CasError> {
    family
        .validate_pullback()
        .map_err(|e| CasError::InvalidFamily(e.to_string()))?;
    let ring = ambient_ring(family, p);
    let supports = stratum_supports(&ring.weights);
    let key = family.descriptor_string();
    let codim = family.descriptor.codim();

    let mut substitutions: Vec<(String, ModelEntry)> = Vec::new();
    let mut entry_polys: HashMap<String, SparsePoly> = HashMap::new();

    let build_entry = |label: &str,
                       w: u64,
                       slot: usize,
                       pool: &mut Vec<Option<usize>>,
                       substitutions: &mut Vec<(String, ModelEntry)>,
                       entry_polys: &mut HashMap<String, SparsePoly>|
     -> Result<(), CasError> {
        if let Some(text) = overrides.get(label) {
            let poly =
                parse_poly(&ring, text).map_err(CasError::InvalidFamily)?;
            if !poly.is_zero() {
                if !poly.is_homogeneous(&ring) || poly.weighted_degree(&ring) != Some(w) {
                    return Err(CasError::InvalidFamily(format!(
                        "override `{label}` is not homogeneous of weighted degree {w}"
                    )));
                }
            }
            substitutions.push((label.to_string(), ModelEntry::Explicit));
            entry_polys.insert(label.to_string(), poly);
            return Ok(());
        }
        // greedy matching: the smallest unused ambient variable of weight w
        if let Some(slot_idx) = pool
            .iter()
            .position(|entry| entry.map(|v| ring.weights[v] == w).unwrap_or(false))
        {
            let var = pool[slot_idx].take().unwrap();
            substitutions.push((label.to_string(), ModelEntry::Ambient(var)));
            entry_polys.insert(label.to_string(), SparsePoly::variable(&ring, var));
            return Ok(());
        }
        let mut rng = slot_rng(seed, &key, slot);
        let form = general_form(&ring, w, &supports, &mut rng, opts);
        if form.is_zero() {
            return Err(CasError::InvalidFamily(format!(
                "no monomials of weighted degree {w} exist for `{label}`"
            )));
        }
        substitutions.push((label.to_string(), ModelEntry::Form(w)));
        entry_polys.insert(label.to_string(), form);
        Ok(())
    };

    let mut polys = Vec::new();
    let mut degrees = Vec::new();
    let mut provenance = Vec::new();

    match &family.descriptor {
        FormatDescriptor::Ci { degrees: ds } => {
            for (slot, &d) in ds.iter().enumerate() {
                let mut rng = slot_rng(seed, &key, slot);
                let label = format!("f{}", d);
                let form = if let Some(text) = overrides.get(&label) {
                    parse_poly(&ring, text).map_err(CasError::InvalidFamily)?
                } else {
                    general_form(&ring, d, &supports, &mut rng, opts)
                };
                substitutions.push((label.clone(), ModelEntry::Form(d)));
                polys.push(form);
                degrees.push(d);
                provenance.push(label);
            }
        }
        FormatDescriptor::PfaffianGr25 { c2 } => {
            let mut pool: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
            let labels = pfaffian_labels();
            for (slot, (i, j, label)) in labels.iter().enumerate() {
                let w = ((c2[i - 1] + c2[j - 1]) / 2) as u64;
                build_entry(label, w, slot, &mut pool, &mut substitutions, &mut entry_polys)?;
            }
            let entry = |i: usize, j: usize| -> &SparsePoly {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                &entry_polys[&format!("m{}{}", a, b)]
            };
            // Pf_k omits row/column k of the skew matrix
            for k in 1..=5usize {
                let idx: Vec<usize> = (1..=5).filter(|&x| x != k).collect();
                let (a, b, c, d) = (idx[0], idx[1], idx[2], idx[3]);
                let t1 = entry(a, b).mul(entry(c, d), &ring);
                let t2 = entry(a, c).mul(entry(b, d), &ring);
                let t3 = entry(a, d).mul(entry(b, c), &ring);
                let pf = t1
                    .add(&t2.scale(ring.field.neg(1), &ring), &ring)
                    .add(&t3, &ring);
                let sigma2: i64 = c2.iter().sum();
                let deg = ((sigma2 - c2[k - 1]) / 2) as u64;
                debug_assert!(pf.is_zero() || pf.weighted_degree(&ring) == Some(deg));
                polys.push(pf);
                degrees.push(deg);
                provenance.push(format!("pf{}", k));
            }
        }
        FormatDescriptor::SegreP2P2 { a2, b2 } => {
            let mut pool: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
            let labels = segre_labels();
            for (slot, (i, j, label)) in labels.iter().enumerate() {
                let w = ((a2[i - 1] + b2[j - 1]) / 2) as u64;
                build_entry(label, w, slot, &mut pool, &mut substitutions, &mut entry_polys)?;
            }
            let entry =
                |i: usize, j: usize| -> &SparsePoly { &entry_polys[&format!("m{}{}", i, j)] };
            for r1 in 1..=3usize {
                for r2 in (r1 + 1)..=3 {
                    for c1 in 1..=3usize {
                        for c2_ in (c1 + 1)..=3 {
                            let t1 = entry(r1, c1).mul(entry(r2, c2_), &ring);
                            let t2 = entry(r1, c2_).mul(entry(r2, c1), &ring);
                            let minor = t1.add(&t2.scale(ring.field.neg(1), &ring), &ring);
                            let deg =
                                ((a2[r1 - 1] + a2[r2 - 1] + b2[c1 - 1] + b2[c2_ - 1]) / 2) as u64;
                            debug_assert!(
                                minor.is_zero() || minor.weighted_degree(&ring) == Some(deg)
                            );
                            polys.push(minor);
                            degrees.push(deg);
                            provenance.push(format!("minor({}{},{}{})", r1, r2, c1, c2_));
                        }
                    }
                }
            }
        }
    }

    for poly in &polys {
        debug_assert!(poly.is_homogeneous(&ring));
    }

    let mut entries: Vec<(String, SparsePoly)> = entry_polys.into_iter().collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(EquationSystem {
        family: family.clone(),
        ring,
        polys,
        degrees,
        provenance,
        substitutions,
        entries,
        codim,
        seed,
    })
}

/// Parses an explicit model file: a `vars` line naming the ambient
/// variables with their weights, then one `label = polynomial` line per
/// matrix entry or CI equation. Lines starting with `#` are comments.
pub fn parse_model_file(text: &str) -> Result<(Vec<(String, u64)>, HashMap<String, String>), CasError> {
    let mut vars: Vec<(String, u64)> = Vec::new();
    let mut entries = HashMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars ") {
            for decl in rest.split_whitespace() {
                let (name, w) = decl.split_once(':').ok_or_else(|| {
                    CasError::InvalidFamily(format!("bad variable declaration `{decl}`"))
                })?;
                let w: u64 = w.parse().map_err(|_| {
                    CasError::InvalidFamily(format!("bad weight in `{decl}`"))
                })?;
                vars.push((name.to_string(), w));
            }
            continue;
        }
        let (label, poly) = line.split_once('=').ok_or_else(|| {
            CasError::InvalidFamily(format!("expected `label = polynomial`, got `{line}`"))
        })?;
        entries.insert(label.trim().to_string(), poly.trim().to_string());
    }
    if vars.is_empty() {
        return Err(CasError::InvalidFamily("model file has no vars line".into()));
    }
    Ok((vars, entries))
}

/// Builds an equation system from an explicit model file for a matrix
/// format family. The file's variable names replace the default `x{i}`
/// names; its weights must be a permutation of the ambient weights.
pub fn build_equations_from_model(
    family: &FormatFamily,
    model_text: &str,
    p: u64,
) -> Result<EquationSystem, CasError> {
    let (vars, entries) = parse_model_file(model_text)?;
    let mut sorted: Vec<u64> = vars.iter().map(|(_, w)| *w).collect();
    sorted.sort_unstable();
    if sorted != family.ambient.weights() {
        return Err(CasError::InvalidFamily(
            "model file weights do not match the ambient weight system".into(),
        ));
    }
    let ring = PolyRing::new(
        PrimeField::new(p),
        vars.iter().map(|(_, w)| *w).collect(),
        vars.iter().map(|(n, _)| n.clone()).collect(),
    );
    let codim = family.descriptor.codim();
    let mut entry_polys: HashMap<String, SparsePoly> = HashMap::new();
    let mut substitutions = Vec::new();
    let format_weights = family.descriptor.format_weights();
    let labels = match &family.descriptor {
        FormatDescriptor::PfaffianGr25 { .. } => pfaffian_labels(),
        FormatDescriptor::SegreP2P2 { .. } => segre_labels(),
        FormatDescriptor::Ci { .. } => {
            return Err(CasError::InvalidFamily(
                "explicit models are for matrix formats".into(),
            ))
        }
    };
    for (slot, (_, _, label)) in labels.iter().enumerate() {
        let text = entries.get(label).ok_or_else(|| {
            CasError::InvalidFamily(format!("model file is missing entry `{label}`"))
        })?;
        let poly = parse_poly(&ring, text).map_err(CasError::InvalidFamily)?;
        let w = format_weights[slot];
        if !poly.is_zero()
            && (!poly.is_homogeneous(&ring) || poly.weighted_degree(&ring) != Some(w))
        {
            return Err(CasError::InvalidFamily(format!(
                "entry `{label}` is not homogeneous of weighted degree {w}"
            )));
        }
        substitutions.push((label.clone(), ModelEntry::Explicit));
        entry_polys.insert(label.clone(), poly);
    }

    let mut polys = Vec::new();
    let mut degrees = Vec::new();
    let mut provenance = Vec::new();
    match &family.descriptor {
        FormatDescriptor::PfaffianGr25 { c2 } => {
            let entry = |i: usize, j: usize| -> &SparsePoly {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                &entry_polys[&format!("m{}{}", a, b)]
            };
            for k in 1..=5usize {
                let idx: Vec<usize> = (1..=5).filter(|&x| x != k).collect();
                let (a, b, c, d) = (idx[0], idx[1], idx[2], idx[3]);
                let pf = entry(a, b)
                    .mul(entry(c, d), &ring)
                    .add(
                        &entry(a, c).mul(entry(b, d), &ring).scale(ring.field.neg(1), &ring),
                        &ring,
                    )
                    .add(&entry(a, d).mul(entry(b, c), &ring), &ring);
                let sigma2: i64 = c2.iter().sum();
                polys.push(pf);
                degrees.push(((sigma2 - c2[k - 1]) / 2) as u64);
                provenance.push(format!("pf{}", k));
            }
        }
        FormatDescriptor::SegreP2P2 { a2, b2 } => {
            let entry =
                |i: usize, j: usize| -> &SparsePoly { &entry_polys[&format!("m{}{}", i, j)] };
            for r1 in 1..=3usize {
                for r2 in (r1 + 1)..=3 {
                    for c1 in 1..=3usize {
                        for c2_ in (c1 + 1)..=3 {
                            let minor = entry(r1, c1).mul(entry(r2, c2_), &ring).add(
                                &entry(r1, c2_)
                                    .mul(entry(r2, c1), &ring)
                                    .scale(ring.field.neg(1), &ring),
                                &ring,
                            );
                            polys.push(minor);
                            degrees.push(
                                ((a2[r1 - 1] + a2[r2 - 1] + b2[c1 - 1] + b2[c2_ - 1]) / 2) as u64,
                            );
                            provenance.push(format!("minor({}{},{}{})", r1, r2, c1, c2_));
                        }
                    }
                }
            }
        }
        FormatDescriptor::Ci { .. } => unreachable!(),
    }

    let mut entry_list: Vec<(String, SparsePoly)> = entry_polys.into_iter().collect();
    entry_list.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(EquationSystem {
        family: family.clone(),
        ring,
        polys,
        degrees,
        provenance,
        substitutions,
        entries: entry_list,
        codim,
        seed: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plucker_pfaffians_from_unweighted_family() {
        let family = FormatFamily::new(
            FormatDescriptor::pfaffian([1, 1, 1, 1, 1]).unwrap(),
            crate::formats::WeightSystem::new(vec![1; 10]),
        );
        let sys = build_equations(&family, 7, 32003, &FormOptions::default()).unwrap();
        assert_eq!(sys.polys.len(), 5);
        // every coordinate matched a distinct ambient variable, so each
        // Pfaffian is the classical trinomial
        for pf in &sys.polys {
            assert_eq!(pf.terms.len(), 3);
            assert_eq!(pf.weighted_degree(&sys.ring), Some(2));
        }
        // Pfaffians vanish identically on rank-2 skew matrices x_ij =
        // a_i b_j - a_j b_i
        let f = sys.ring.field;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let a: Vec<u64> = (0..5).map(|_| rng.gen_range(0..f.p)).collect();
            let b: Vec<u64> = (0..5).map(|_| rng.gen_range(0..f.p)).collect();
            let mut point = Vec::new();
            for i in 0..5 {
                for j in (i + 1)..5 {
                    point.push(f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i])));
                }
            }
            for pf in &sys.polys {
                assert_eq!(pf.evaluate(&point, &sys.ring), 0);
            }
        }
    }

    #[test]
    fn segre_minors_vanish_on_rank_one() {
        let family = FormatFamily::new(
            FormatDescriptor::segre([1, 1, 1], [1, 1, 1]).unwrap(),
            crate::formats::WeightSystem::new(vec![1; 9]),
        );
        let sys = build_equations(&family, 7, 32003, &FormOptions::default()).unwrap();
        assert_eq!(sys.polys.len(), 9);
        let f = sys.ring.field;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let u: Vec<u64> = (0..3).map(|_| rng.gen_range(0..f.p)).collect();
            let v: Vec<u64> = (0..3).map(|_| rng.gen_range(0..f.p)).collect();
            let mut point = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    point.push(f.mul(u[i], v[j]));
                }
            }
            for m in &sys.polys {
                assert_eq!(m.evaluate(&point, &sys.ring), 0);
            }
        }
    }

    #[test]
    fn general_forms_are_weighted_homogeneous_and_deterministic() {
        let family: FormatFamily = "CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]".parse().unwrap();
        let s1 = build_equations(&family, 42, 32003, &FormOptions::default()).unwrap();
        let s2 = build_equations(&family, 42, 32003, &FormOptions::default()).unwrap();
        assert_eq!(s1.polys, s2.polys);
        let s3 = build_equations(&family, 43, 32003, &FormOptions::default()).unwrap();
        assert_ne!(s1.polys, s3.polys);
        for (f, &d) in s1.polys.iter().zip(&s1.degrees) {
            assert!(f.is_homogeneous(&s1.ring));
            assert_eq!(f.weighted_degree(&s1.ring), Some(d));
        }
    }

    #[test]
    fn forced_structure_includes_pure_stratum_monomials() {
        // degree 40 must restrict to a nonzero binary form on the two
        // weight-5 variables
        let family: FormatFamily = "CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]".parse().unwrap();
        let sys = build_equations(&family, 1, 32003, &FormOptions::default()).unwrap();
        let f40 = &sys.polys[1];
        let zero_vars: Vec<bool> = sys
            .ring
            .weights
            .iter()
            .map(|&w| w != 5)
            .collect();
        let restricted = f40.substitute_zero_one(&zero_vars, None, &sys.ring);
        // a general binary form of degree 40 in weights (5,5) has 9 monomials
        assert_eq!(restricted.terms.len(), 9);
    }

    #[test]
    fn greedy_matching_follows_coordinate_order() {
        let family: FormatFamily = "P2P2 a=[0,0,10] b=[1,1,11] w=[1,1,1,1,3,7,11,11,11]"
            .parse()
            .unwrap();
        let sys = build_equations(&family, 9, 32003, &FormOptions::default()).unwrap();
        let kinds: Vec<String> = sys
            .substitutions
            .iter()
            .map(|(label, e)| match e {
                ModelEntry::Ambient(v) => format!("{label}:x{v}"),
                ModelEntry::Form(w) => format!("{label}:f{w}"),
                ModelEntry::Explicit => format!("{label}:explicit"),
            })
            .collect();
        assert_eq!(
            kinds,
            vec![
                "m11:x0", "m12:x1", "m13:x6", "m21:x2", "m22:x3", "m23:x7", "m31:x8",
                "m32:f11", "m33:f21"
            ]
        );
    }

    #[test]
    fn stratum_support_enumeration() {
        let w = [5, 5, 7, 8, 9, 12, 31];
        let supports = stratum_supports(&w);
        // singletons for every weight >= 2, the pair of fives, and {8,12},
        // {9,12} pairs with gcds 4 and 3
        assert!(supports.contains(&(vec![0, 1], 5)));
        assert!(supports.contains(&(vec![3, 5], 4)));
        assert!(supports.contains(&(vec![4, 5], 3)));
        assert!(supports.iter().all(|(_, g)| *g >= 2));
    }

    #[test]
    fn model_file_roundtrip() {
        let text = "\
# sample model
vars u:1 v:1 w:2
f2 = u^2 + 3*u*v + w
";
        let (vars, entries) = parse_model_file(text).unwrap();
        assert_eq!(vars.len(), 3);
        assert_eq!(entries["f2"], "u^2 + 3*u*v + w");
    }
}

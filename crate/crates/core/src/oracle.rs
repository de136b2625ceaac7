//! Brute-force component counting for sign conditions of polynomial
//! families, in the regimes where ground truth is computable at desk
//! scale: exact cell decomposition on a line (with or without a finite
//! variety), the structured two-variable tight instances, the finite-grid
//! counterexample family, and a heuristic pixel-grid counter for open
//! conditions in the plane.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::bounds::{main_bound_per_degree, main_bound_uniform, BoundParams, DegreeSequence};
use crate::constructions::{make_counterexample_instance, make_tightness_instance};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, Int, Nat, Rat};
use crate::polyalg::roots::{merge_roots_uni, sign_at_root, IsolatedRoot, MergedRoot};
use crate::polyalg::sparse::{Sign, SparsePolynomial};
use crate::polyalg::univariate::UniPoly;

/// A sign vector over a polynomial family, indexed by family position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignCondition(pub Vec<Sign>);

impl SignCondition {
    /// True when no entry is zero (the condition is an open one).
    pub fn is_strict(&self) -> bool {
        self.0.iter().all(|s| !s.is_zero())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SignCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// Component counts keyed by realized sign condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCountReport {
    /// Only conditions that are actually realized appear; counts are >= 1.
    pub per_condition: BTreeMap<SignCondition, u64>,
    /// Sum of all per-condition counts.
    pub total: u64,
    /// Number of realized sign conditions.
    pub realizable: u64,
    /// Whether the counts are exact or a grid heuristic.
    pub exact: bool,
}

impl ComponentCountReport {
    fn from_map(per_condition: BTreeMap<SignCondition, u64>, exact: bool) -> Self {
        let total = per_condition.values().sum();
        let realizable = per_condition.len() as u64;
        ComponentCountReport { per_condition, total, realizable, exact }
    }

    /// Total over the strict (everywhere-nonzero) conditions only.
    pub fn strict_total(&self) -> u64 {
        self.per_condition
            .iter()
            .filter(|(c, _)| c.is_strict())
            .map(|(_, n)| n)
            .sum()
    }
}

/// Number of cells a generic arrangement of n hyperplanes cuts R^k into:
/// the sum of the binomial coefficients C(n, 0) + ... + C(n, k).
pub fn generic_arrangement_cells(n: u64, k: u32) -> Nat {
    let mut total = Nat::zero();
    for i in 0..=u64::from(k) {
        total += binomial(n, i);
    }
    total
}

/// Exact component counts for a univariate family on the line, or on the
/// finite zero set of `variety` when one is given.
///
/// Without a variety the cells are the merged roots of the family and the
/// open intervals between them; every cell is one connected component of
/// its sign condition. With a variety, each of its roots is a single
/// component of whatever sign condition the family realizes there.
pub fn count_univariate(
    family: &[SparsePolynomial],
    variety: Option<&SparsePolynomial>,
) -> Result<ComponentCountReport> {
    let polys: Vec<UniPoly> = family.iter().map(UniPoly::try_from).collect::<Result<_>>()?;
    for p in &polys {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    match variety {
        None => count_on_line(&polys),
        Some(q) => {
            let q = UniPoly::try_from(q)?;
            count_on_finite_variety(&polys, &q)
        }
    }
}

fn count_on_line(polys: &[UniPoly]) -> Result<ComponentCountReport> {
    let mut merged = merge_roots_uni(polys)?;
    let mut per_condition: BTreeMap<SignCondition, u64> = BTreeMap::new();
    let mut record = |cond: SignCondition| {
        *per_condition.entry(cond).or_insert(0) += 1;
    };

    // Point cells: one per merged root.
    for m in merged.iter_mut() {
        let cond = condition_at_root(polys, m, 0)?;
        record(cond);
    }
    // Open-interval cells: sample one exact rational point in each.
    for x in interval_samples(&mut merged) {
        record(condition_at_point(polys, &x));
    }
    Ok(ComponentCountReport::from_map(per_condition, true))
}

fn count_on_finite_variety(polys: &[UniPoly], q: &UniPoly) -> Result<ComponentCountReport> {
    // Merge the variety (index 0) with the family so membership tells us
    // exactly where the variety vanishes and which members vanish with it.
    let mut all = Vec::with_capacity(polys.len() + 1);
    all.push(q.clone());
    all.extend(polys.iter().cloned());
    let mut merged = merge_roots_uni(&all)?;
    let mut per_condition: BTreeMap<SignCondition, u64> = BTreeMap::new();
    for m in merged.iter_mut() {
        if !m.members.contains(&0) {
            continue; // not a point of the variety
        }
        let cond = condition_at_root(&all[1..], m, 1)?;
        *per_condition.entry(cond).or_insert(0) += 1;
    }
    Ok(ComponentCountReport::from_map(per_condition, true))
}

/// Sign vector of `polys` at a merged root whose membership indices are
/// offset by `base` relative to the family.
fn condition_at_root(
    polys: &[UniPoly],
    m: &mut MergedRoot,
    base: usize,
) -> Result<SignCondition> {
    let mut signs = Vec::with_capacity(polys.len());
    for (t, p) in polys.iter().enumerate() {
        if m.members.contains(&(t + base)) {
            signs.push(Sign::Zero);
        } else {
            signs.push(sign_at_root(p, &mut m.root));
        }
    }
    Ok(SignCondition(signs))
}

fn condition_at_point(polys: &[UniPoly], x: &Rat) -> SignCondition {
    SignCondition(polys.iter().map(|p| p.sign_at(x)).collect())
}

/// One exact rational sample per open interval of the root partition:
/// left of the first root, between consecutive roots, right of the last.
/// With no roots at all the whole line is one cell, sampled at 0.
fn interval_samples(merged: &mut [MergedRoot]) -> Vec<Rat> {
    if merged.is_empty() {
        return vec![Rat::zero()];
    }
    let mut samples = Vec::with_capacity(merged.len() + 1);
    samples.push(merged[0].root.lower_bound() - Rat::one());
    for i in 0..merged.len() - 1 {
        let (left, right) = merged.split_at_mut(i + 1);
        samples.push(sample_between(&mut left[i].root, &mut right[0].root));
    }
    samples.push(merged[merged.len() - 1].root.upper_bound() + Rat::one());
    samples
}

/// An exact rational strictly between two consecutive isolated roots,
/// refining the enclosures as needed.
fn sample_between(a: &mut IsolatedRoot, b: &mut IsolatedRoot) -> Rat {
    loop {
        let hi_a = a.upper_bound();
        let lo_b = b.lower_bound();
        if hi_a < lo_b {
            return (hi_a + lo_b) / Rat::from(Int::from(2));
        }
        // Touching enclosures: the shared endpoint separates the two roots
        // unless it IS one of them (exact case), which refinement fixes.
        if hi_a == lo_b && !a.is_exact() && !b.is_exact() {
            return hi_a;
        }
        if !a.is_exact() {
            a.refine_once();
        } else {
            b.refine_once();
        }
    }
}

/// Heuristic component counts for a two-variable family on a box: exact
/// signs at the centers of a resolution x resolution grid of cells,
/// grouped by sign vector, with 4-neighbor connectivity. Reliable for the
/// open conditions once the resolution separates the components; zero
/// conditions are only ever hit by accident. Never marked exact.
pub fn count_grid_2d(
    family: &[SparsePolynomial],
    bbox: (Rat, Rat, Rat, Rat),
    resolution: u32,
) -> Result<ComponentCountReport> {
    if family.is_empty() {
        return Err(Error::InvalidParams("grid counting needs a nonempty family".into()));
    }
    for p in family {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.nvars() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: p.nvars() });
        }
    }
    if resolution < 2 {
        return Err(Error::InvalidParams("resolution must be >= 2".into()));
    }
    let (x0, y0, x1, y1) = bbox;
    if x0 >= x1 || y0 >= y1 {
        return Err(Error::InvalidParams("degenerate bounding box".into()));
    }

    let res = resolution as usize;
    let wide = Rat::from(Int::from(2 * u64::from(resolution)));
    let dx = (&x1 - &x0) / &wide;
    let dy = (&y1 - &y0) / &wide;
    // Center of cell (i, j) is (x0 + (2i+1)dx, y0 + (2j+1)dy).
    let mut conditions = Vec::with_capacity(res * res);
    for j in 0..res {
        let y = &y0 + Rat::from(Int::from(2 * j as u64 + 1)) * &dy;
        for i in 0..res {
            let x = &x0 + Rat::from(Int::from(2 * i as u64 + 1)) * &dx;
            let point = [x, y.clone()];
            let signs: Vec<Sign> = family
                .iter()
                .map(|p| p.eval_sign(&point))
                .collect::<Result<_>>()?;
            conditions.push(SignCondition(signs));
        }
    }

    let mut dsu = DisjointSet::new(res * res);
    for j in 0..res {
        for i in 0..res {
            let here = j * res + i;
            if i + 1 < res && conditions[here] == conditions[here + 1] {
                dsu.union(here, here + 1);
            }
            if j + 1 < res && conditions[here] == conditions[here + res] {
                dsu.union(here, here + res);
            }
        }
    }
    let mut per_condition: BTreeMap<SignCondition, u64> = BTreeMap::new();
    for cell in 0..res * res {
        if dsu.find(cell) == cell {
            *per_condition.entry(conditions[cell].clone()).or_insert(0) += 1;
        }
    }
    Ok(ComponentCountReport::from_map(per_condition, false))
}

/// Union-find with path halving and union by size.
struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Exact component counts for the generated two-variable tight instance:
/// the variety is a stack of d0 horizontal lines, so components are the
/// univariate cells on each line, summed. Regenerates from fresh seeds on
/// degeneracy; errors only if every attempt degenerates.
pub fn count_tightness_instance(s: u64, d: u64, d0: u64) -> Result<ComponentCountReport> {
    const ATTEMPTS: u64 = 32;
    for seed in 0..ATTEMPTS {
        match count_tightness_instance_seeded(s, d, d0, seed) {
            Err(Error::DegenerateInstance(_)) => continue,
            other => return other,
        }
    }
    Err(Error::DegenerateInstance(format!(
        "no non-degenerate instance for (s={s}, d={d}, d0={d0}) within {ATTEMPTS} seeds"
    )))
}

/// Single-seed variant of `count_tightness_instance`; reports degeneracy
/// (lost degree on a line, or coincident roots) instead of retrying.
pub fn count_tightness_instance_seeded(
    s: u64,
    d: u64,
    d0: u64,
    seed: u64,
) -> Result<ComponentCountReport> {
    let (family, _q) = make_tightness_instance(s, d, d0, 2, seed)?;
    let mut per_condition: BTreeMap<SignCondition, u64> = BTreeMap::new();
    for i in 1..=d0 {
        let level = Rat::from(Int::from(i));
        let mut restricted = Vec::with_capacity(family.len());
        for p in &family {
            let r = p.restrict(1, &level)?;
            if r.is_zero() || r.degree() < d {
                return Err(Error::DegenerateInstance(format!(
                    "family member degenerates on the line X2 = {i}"
                )));
            }
            restricted.push(UniPoly::try_from(&r)?);
        }
        let merged = merge_roots_uni(&restricted)?;
        if merged.len() as u64 != s * d {
            return Err(Error::DegenerateInstance(format!(
                "coincident roots on the line X2 = {i}"
            )));
        }
        let line_report = count_on_line(&restricted)?;
        for (cond, n) in line_report.per_condition {
            *per_condition.entry(cond).or_insert(0) += n;
        }
    }
    let report = ComponentCountReport::from_map(per_condition, true);
    // With s*d distinct roots per line the strict cells are exactly the
    // s*d + 1 open intervals of each of the d0 lines.
    if report.strict_total() != d0 * (s * d + 1) {
        return Err(Error::DegenerateInstance(
            "strict cell count disagrees with the root partition".into(),
        ));
    }
    Ok(report)
}

/// Counts the common zeros of the counterexample family by exhaustive
/// integer search over a box that provably contains them all; every zero
/// is an isolated point, so the cardinality is the component count.
pub fn count_counterexample_instance(d: u64, k: u32, m: u32, cap: u64) -> Result<u64> {
    let expected = 2u128
        .checked_mul(u128::from(d).checked_pow(k).ok_or_else(|| {
            Error::InvalidParams("d^k overflows".into())
        })?)
        .ok_or_else(|| Error::InvalidParams("2 d^k overflows".into()))?;
    if expected > u128::from(cap) {
        return Err(Error::CapExceeded { size: expected, cap: u128::from(cap) });
    }
    let family = make_counterexample_instance(d, k, m)?;
    // The first member forces the first k coordinates into {1..d}; the
    // rest force the last coordinate into {1..m-j+2}. Scanning a slightly
    // larger integer box checks the expansion rather than assuming it.
    let mut point = vec![Rat::zero(); k as usize + 1];
    let mut found = 0u64;
    let mut coords = vec![0u64; k as usize];
    loop {
        for (i, &c) in coords.iter().enumerate() {
            point[i] = Rat::from(Int::from(c));
        }
        for last in 0..=u64::from(m) + 1 {
            point[k as usize] = Rat::from(Int::from(last));
            let all_vanish = family
                .iter()
                .map(|p| p.eval_sign(&point))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .all(|s| s.is_zero());
            if all_vanish {
                found += 1;
            }
        }
        // Odometer over {0..d+1}^k.
        let mut pos = 0;
        loop {
            if pos == coords.len() {
                return Ok(found);
            }
            if coords[pos] < d + 1 {
                coords[pos] += 1;
                break;
            }
            coords[pos] = 0;
            pos += 1;
        }
    }
}

/// The bound a univariate counting instance is checked against: on a
/// finite variety the per-degree bound with the variety's degree and a
/// zero-dimensional ambient count, on the whole line the uniform bound
/// with the zero-polynomial variety convention d0 = 1, k' = k.
pub fn applicable_univariate_bound(
    family: &[SparsePolynomial],
    variety: Option<&SparsePolynomial>,
) -> Result<Nat> {
    match variety {
        Some(q) => {
            let degrees: Vec<u64> = family.iter().map(|p| p.degree().max(1)).collect();
            let d0 = q.degree().max(1);
            main_bound_per_degree(&DegreeSequence::new(degrees)?, d0, 1, 0)
        }
        None => {
            let s = family.len() as u64;
            let d = family.iter().map(|p| p.degree()).max().unwrap_or(1).max(1);
            main_bound_uniform(&BoundParams::new(s, d, 1, 1, 1)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::binomial_big;
    use num_traits::ToPrimitive;

    fn ri(n: i64) -> Rat {
        Rat::from(Int::from(n))
    }

    fn sparse_uni(cs: &[i64]) -> SparsePolynomial {
        let terms = cs
            .iter()
            .enumerate()
            .map(|(e, &c)| (vec![e as u32], Rat::from(Int::from(c))));
        SparsePolynomial::from_terms(1, terms).unwrap()
    }

    fn cond(s: &str) -> SignCondition {
        SignCondition(
            s.chars()
                .map(|c| match c {
                    '-' => Sign::Neg,
                    '0' => Sign::Zero,
                    '+' => Sign::Pos,
                    _ => panic!("bad sign symbol"),
                })
                .collect(),
        )
    }

    #[test]
    fn arrangement_cell_counts() {
        assert_eq!(generic_arrangement_cells(3, 2), Nat::from(7u32));
        assert_eq!(generic_arrangement_cells(0, 5), Nat::from(1u32));
        // With at least as many dimensions as hyperplanes, all 2^n
        // orthants appear.
        for n in 0..=6u64 {
            for k in n as u32..=7 {
                assert_eq!(
                    generic_arrangement_cells(n, k),
                    Nat::from(1u64 << n),
                );
            }
        }
    }

    #[test]
    fn line_with_single_coordinate() {
        let report = count_univariate(&[sparse_uni(&[0, 1])], None).unwrap();
        assert_eq!(report.total, 3);
        assert_eq!(report.realizable, 3);
        assert!(report.exact);
        assert_eq!(report.per_condition[&cond("-")], 1);
        assert_eq!(report.per_condition[&cond("0")], 1);
        assert_eq!(report.per_condition[&cond("+")], 1);
    }

    #[test]
    fn line_with_two_polynomials() {
        // {X^2 - 1, X}: roots -1, 0, 1 give 7 cells, all distinct signs.
        let family = [sparse_uni(&[-1, 0, 1]), sparse_uni(&[0, 1])];
        let report = count_univariate(&family, None).unwrap();
        assert_eq!(report.total, 7);
        assert_eq!(report.realizable, 7);
        let expected = ["+-", "0-", "--", "-0", "-+", "0+", "++"];
        for e in expected {
            assert_eq!(report.per_condition[&cond(e)], 1, "condition {e}");
        }
        assert_eq!(report.strict_total(), 4);
    }

    #[test]
    fn line_with_variety() {
        // Family {X} on the variety {X^2 - 4 = 0} = {-2, 2}.
        let report =
            count_univariate(&[sparse_uni(&[0, 1])], Some(&sparse_uni(&[-4, 0, 1]))).unwrap();
        assert_eq!(report.total, 2);
        assert_eq!(report.per_condition[&cond("-")], 1);
        assert_eq!(report.per_condition[&cond("+")], 1);
    }

    #[test]
    fn variety_roots_shared_with_family() {
        // Family {X} on {X^3 - X = 0} = {-1, 0, 1}: the family vanishes at
        // the middle point.
        let report =
            count_univariate(&[sparse_uni(&[0, 1])], Some(&sparse_uni(&[0, -1, 0, 1]))).unwrap();
        assert_eq!(report.total, 3);
        assert_eq!(report.per_condition[&cond("0")], 1);
        assert_eq!(report.per_condition[&cond("-")], 1);
        assert_eq!(report.per_condition[&cond("+")], 1);
    }

    #[test]
    fn irrational_cells_counted() {
        // {X^2 - 2}: five cells; the sign vector at both irrational roots
        // is 0, so realizable = 3 and the 0 condition has count 2.
        let report = count_univariate(&[sparse_uni(&[-2, 0, 1])], None).unwrap();
        assert_eq!(report.total, 5);
        assert_eq!(report.realizable, 3);
        assert_eq!(report.per_condition[&cond("0")], 2);
        assert_eq!(report.per_condition[&cond("+")], 2);
        assert_eq!(report.per_condition[&cond("-")], 1);
    }

    #[test]
    fn empty_variety_yields_empty_report() {
        // A variety with no real roots has no components at all.
        let report =
            count_univariate(&[sparse_uni(&[0, 1])], Some(&sparse_uni(&[1, 0, 1]))).unwrap();
        assert_eq!(report.total, 0);
        assert_eq!(report.realizable, 0);
    }

    #[test]
    fn zero_polynomials_rejected() {
        assert!(count_univariate(&[SparsePolynomial::zero(1)], None).is_err());
        assert!(
            count_univariate(&[sparse_uni(&[0, 1])], Some(&SparsePolynomial::zero(1))).is_err()
        );
    }

    #[test]
    fn grid_counts_quadrants() {
        // X1 * X2 on [-1,1]^2: four open quadrants, paired by sign.
        let p = SparsePolynomial::from_terms(2, [(vec![1, 1], ri(1))]).unwrap();
        let report =
            count_grid_2d(&[p], (ri(-1), ri(-1), ri(1), ri(1)), 64).unwrap();
        assert!(!report.exact);
        assert_eq!(report.per_condition[&cond("+")], 2);
        assert_eq!(report.per_condition[&cond("-")], 2);
        assert_eq!(report.total, 4);
    }

    #[test]
    fn grid_counts_half_planes() {
        let p = SparsePolynomial::var(2, 0).unwrap();
        let report =
            count_grid_2d(&[p], (ri(-1), ri(-1), ri(1), ri(1)), 16).unwrap();
        assert_eq!(report.per_condition[&cond("+")], 1);
        assert_eq!(report.per_condition[&cond("-")], 1);
    }

    #[test]
    fn grid_counts_circle() {
        // X1^2 + X2^2 - 1 on [-2,2]^2: connected interior, connected
        // exterior within the box.
        let p = SparsePolynomial::from_terms(
            2,
            [(vec![2, 0], ri(1)), (vec![0, 2], ri(1)), (vec![0, 0], ri(-1))],
        )
        .unwrap();
        let report =
            count_grid_2d(&[p], (ri(-2), ri(-2), ri(2), ri(2)), 64).unwrap();
        assert_eq!(report.per_condition[&cond("-")], 1);
        assert_eq!(report.per_condition[&cond("+")], 1);
    }

    #[test]
    fn grid_rejects_bad_input() {
        let p = SparsePolynomial::var(2, 0).unwrap();
        assert!(count_grid_2d(&[], (ri(0), ri(0), ri(1), ri(1)), 8).is_err());
        assert!(count_grid_2d(&[p.clone()], (ri(1), ri(0), ri(0), ri(1)), 8).is_err());
        assert!(count_grid_2d(&[p.clone()], (ri(0), ri(0), ri(1), ri(1)), 1).is_err());
        let uni = SparsePolynomial::var(1, 0).unwrap();
        assert!(count_grid_2d(&[uni], (ri(0), ri(0), ri(1), ri(1)), 8).is_err());
    }

    #[test]
    fn tightness_strict_totals() {
        for (s, d, d0) in [(1u64, 1u64, 1u64), (2, 2, 3), (1, 2, 2)] {
            let report = count_tightness_instance(s, d, d0).unwrap();
            assert!(report.exact);
            assert_eq!(report.strict_total(), d0 * (s * d + 1), "({s},{d},{d0})");
        }
    }

    #[test]
    fn counterexample_counts_match_product() {
        assert_eq!(count_counterexample_instance(2, 2, 2, 1_000_000).unwrap(), 8);
        assert_eq!(count_counterexample_instance(1, 1, 2, 1_000_000).unwrap(), 2);
        assert_eq!(count_counterexample_instance(3, 2, 3, 1_000_000).unwrap(), 18);
        assert!(matches!(
            count_counterexample_instance(10, 10, 2, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn univariate_bound_pairing() {
        // Without a variety: s = 2, max degree 2, the line convention.
        let family = [sparse_uni(&[-1, 0, 1]), sparse_uni(&[0, 1])];
        let bound = applicable_univariate_bound(&family, None).unwrap();
        let params = BoundParams::new(2, 2, 1, 1, 1).unwrap();
        assert_eq!(bound, main_bound_uniform(&params).unwrap());
        let total = count_univariate(&family, None).unwrap().total;
        assert!(Nat::from(total) <= bound);

        // With a variety the zero-dimensional per-degree bound applies.
        let variety = sparse_uni(&[-4, 0, 1]);
        let bound_v = applicable_univariate_bound(&family, Some(&variety)).unwrap();
        let total_v = count_univariate(&family, Some(&variety)).unwrap().total;
        assert!(Nat::from(total_v) <= bound_v);
    }

    #[test]
    fn arrangement_matches_binomial_sum_big() {
        let n = 40u64;
        let mut expected = Nat::zero();
        for i in 0..=3u64 {
            expected += binomial_big(&Nat::from(n), i);
        }
        assert_eq!(generic_arrangement_cells(n, 3), expected);
        assert!(generic_arrangement_cells(40, 3).to_u64().is_some());
    }
}

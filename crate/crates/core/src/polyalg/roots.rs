//! Real root isolation and cross-polynomial root merging, fully exact.
//!
//! Roots are either exact rationals or open intervals with rational
//! endpoints containing exactly one root of a stored square-free defining
//! polynomial. Intervals can be refined on demand, so downstream consumers
//! (cell walks, sign queries) never need approximate arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{Int, Rat};
use crate::polyalg::sparse::{Sign, SparsePolynomial};
use crate::polyalg::univariate::{SturmChain, UniPoly};

/// Location of an isolated root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootKind {
    /// The root is this rational, exactly.
    Exact(Rat),
    /// The root is the unique root of the defining polynomial in the open
    /// interval (lo, hi); the polynomial changes sign across it.
    Interval { lo: Rat, hi: Rat },
}

/// One isolated real root of a square-free univariate polynomial.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    poly: UniPoly,
    kind: RootKind,
}

impl IsolatedRoot {
    fn exact(poly: UniPoly, value: Rat) -> Self {
        IsolatedRoot { poly, kind: RootKind::Exact(value) }
    }

    fn interval(poly: UniPoly, lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo < hi);
        debug_assert!(!poly.eval(&lo).is_zero() && !poly.eval(&hi).is_zero());
        debug_assert!(poly.sign_at(&lo) != poly.sign_at(&hi), "no sign change");
        IsolatedRoot { poly, kind: RootKind::Interval { lo, hi } }
    }

    /// The square-free polynomial this root belongs to.
    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn kind(&self) -> &RootKind {
        &self.kind
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.kind, RootKind::Exact(_))
    }

    pub fn exact_value(&self) -> Option<&Rat> {
        match &self.kind {
            RootKind::Exact(v) => Some(v),
            RootKind::Interval { .. } => None,
        }
    }

    /// A rational lower bound: the value itself for exact roots, the left
    /// endpoint otherwise (strictly below the root).
    pub fn lower_bound(&self) -> Rat {
        match &self.kind {
            RootKind::Exact(v) => v.clone(),
            RootKind::Interval { lo, .. } => lo.clone(),
        }
    }

    /// A rational upper bound, symmetric to `lower_bound`.
    pub fn upper_bound(&self) -> Rat {
        match &self.kind {
            RootKind::Exact(v) => v.clone(),
            RootKind::Interval { hi, .. } => hi.clone(),
        }
    }

    /// Interval width; zero for exact roots.
    pub fn width(&self) -> Rat {
        match &self.kind {
            RootKind::Exact(_) => Rat::zero(),
            RootKind::Interval { lo, hi } => hi - lo,
        }
    }

    /// One bisection step. May upgrade the root to exact when the
    /// midpoint happens to hit it.
    pub fn refine_once(&mut self) {
        let (lo, hi) = match &self.kind {
            RootKind::Exact(_) => return,
            RootKind::Interval { lo, hi } => (lo.clone(), hi.clone()),
        };
        let mid = (&lo + &hi) / Rat::from(Int::from(2));
        match self.poly.sign_at(&mid) {
            Sign::Zero => self.kind = RootKind::Exact(mid),
            s => {
                if s == self.poly.sign_at(&lo) {
                    self.kind = RootKind::Interval { lo: mid, hi };
                } else {
                    self.kind = RootKind::Interval { lo, hi: mid };
                }
            }
        }
    }

    /// Refines until the interval is narrower than `eps` (exact roots are
    /// already width zero).
    pub fn refine_below(&mut self, eps: &Rat) {
        while self.width() >= *eps {
            if self.is_exact() {
                return;
            }
            self.refine_once();
        }
    }

    /// Refines until `point` lies strictly outside the enclosing interval,
    /// upgrading to exact if the point IS the root.
    pub fn refine_away_from(&mut self, point: &Rat) {
        loop {
            match &self.kind {
                RootKind::Exact(_) => return,
                RootKind::Interval { lo, hi } => {
                    if point <= lo || point >= hi {
                        return;
                    }
                    // point strictly inside: either it is the unique root,
                    // or bisection will eventually separate them.
                    if self.poly.eval(point).is_zero() {
                        self.kind = RootKind::Exact(point.clone());
                        return;
                    }
                }
            }
            self.refine_once();
        }
    }

    /// Exact comparison of the root against a rational point.
    pub fn cmp_point(&mut self, point: &Rat) -> Ordering {
        self.refine_away_from(point);
        match &self.kind {
            RootKind::Exact(v) => v.partial_cmp(point).unwrap(),
            RootKind::Interval { lo, hi } => {
                if point <= lo {
                    Ordering::Greater
                } else {
                    debug_assert!(point >= hi);
                    Ordering::Less
                }
            }
        }
    }
}

/// Isolates all distinct real roots of a univariate polynomial, sorted
/// ascending: rational roots exactly when the coefficient budget allows,
/// the rest as sign-change intervals of the square-free part.
pub fn isolate_roots(p: &SparsePolynomial) -> Result<Vec<IsolatedRoot>> {
    let u = UniPoly::try_from(p)?;
    isolate_roots_uni(&u)
}

/// `isolate_roots` on an already-univariate polynomial.
pub fn isolate_roots_uni(p: &UniPoly) -> Result<Vec<IsolatedRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let q = p.square_free_part();

    // Recover rational roots exactly when cheap, and deflate them out.
    let mut exacts: Vec<Rat> = Vec::new();
    let mut q_rem = q.clone();
    if let Some(rats) = q.rational_roots() {
        for r in rats {
            q_rem = q_rem.deflate_root(&r);
            exacts.push(r);
        }
    }

    let mut roots: Vec<IsolatedRoot> = Vec::new();
    if q_rem.degree().unwrap_or(0) >= 1 {
        let (found_exact, intervals) = sturm_isolate(&q_rem);
        exacts.extend(found_exact);
        for (lo, hi) in intervals {
            roots.push(IsolatedRoot::interval(q_rem.clone(), lo, hi));
        }
    }
    for v in &exacts {
        // Keep intervals clear of every exact root so each interval
        // contains exactly one root of the FULL square-free part.
        for r in roots.iter_mut() {
            r.refine_away_from(v);
        }
    }
    for v in exacts {
        roots.push(IsolatedRoot::exact(q.clone(), v));
    }
    sort_roots(&mut roots);
    Ok(roots)
}

/// Sorts isolated roots ascending; inputs must be pairwise disjoint
/// (possibly after refinement, which this performs as needed).
fn sort_roots(roots: &mut [IsolatedRoot]) {
    // Exact values first serve as separators for interval comparisons.
    let exact_vals: Vec<Rat> =
        roots.iter().filter_map(|r| r.exact_value().cloned()).collect();
    for r in roots.iter_mut() {
        for v in &exact_vals {
            if !r.is_exact() {
                r.refine_away_from(v);
            }
        }
    }
    roots.sort_by(|a, b| match (a.exact_value(), b.exact_value()) {
        (Some(x), Some(y)) => x.partial_cmp(y).unwrap(),
        _ => {
            if a.upper_bound() <= b.lower_bound() {
                Ordering::Less
            } else if b.upper_bound() <= a.lower_bound() {
                Ordering::Greater
            } else {
                // Intervals from one isolation run are disjoint, and the
                // refinement above separates them from every exact root.
                unreachable!("isolated roots must be disjoint before sorting")
            }
        }
    });
}

/// Bisection isolation on a square-free polynomial with no cheaply
/// recoverable rational roots removed: returns exact roots discovered at
/// bisection points plus isolating intervals for the rest.
fn sturm_isolate(q: &UniPoly) -> (Vec<Rat>, Vec<(Rat, Rat)>) {
    let chain = SturmChain::new(q);
    let bound = q.cauchy_root_bound();
    let mut exacts = Vec::new();
    let mut intervals = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_roots_between(&lo, &hi);
        match n {
            0 => {}
            1 => intervals.push((lo, hi)),
            _ => {
                let two = Rat::from(Int::from(2));
                let mid = (&lo + &hi) / &two;
                if q.eval(&mid).is_zero() {
                    // The midpoint is itself a root: register it and carve
                    // out a punctured neighbourhood before recursing.
                    let mut delta = (&hi - &lo) / Rat::from(Int::from(4));
                    loop {
                        let (l2, h2) = (&mid - &delta, &mid + &delta);
                        if !q.eval(&l2).is_zero()
                            && !q.eval(&h2).is_zero()
                            && chain.count_roots_between(&l2, &h2) == 1
                        {
                            stack.push((lo.clone(), l2));
                            stack.push((h2, hi.clone()));
                            break;
                        }
                        delta /= &two;
                    }
                    exacts.push(mid);
                } else {
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    (exacts, intervals)
}

/// A root of the union of a polynomial family, tagged with the indices of
/// the family members vanishing there.
#[derive(Debug, Clone)]
pub struct MergedRoot {
    pub root: IsolatedRoot,
    pub members: BTreeSet<usize>,
}

/// Merges the real roots of a family into one ascending sequence, each
/// root annotated with the set of polynomials vanishing at it. Intervals
/// of distinct roots are pairwise disjoint.
pub fn merge_roots(ps: &[SparsePolynomial]) -> Result<Vec<MergedRoot>> {
    let us: Vec<UniPoly> =
        ps.iter().map(UniPoly::try_from).collect::<Result<_>>()?;
    merge_roots_uni(&us)
}

/// `merge_roots` on already-univariate polynomials.
pub fn merge_roots_uni(ps: &[UniPoly]) -> Result<Vec<MergedRoot>> {
    for p in ps {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let parts: Vec<UniPoly> = ps.iter().map(|p| p.square_free_part()).collect();
    let mut product = UniPoly::constant(Rat::one());
    for q in &parts {
        product = product.mul(q);
    }
    // Radical of the product: every distinct root of the family, once.
    let g = product.square_free_part();
    let roots = isolate_roots_uni(&g)?;

    let mut merged = Vec::with_capacity(roots.len());
    for root in roots {
        let mut members = BTreeSet::new();
        for (i, q) in parts.iter().enumerate() {
            if vanishes_at(q, &root) {
                members.insert(i);
            }
        }
        merged.push(MergedRoot { root, members });
    }
    Ok(merged)
}

/// Does `q` (square-free) vanish at the given isolated root?
fn vanishes_at(q: &UniPoly, root: &IsolatedRoot) -> bool {
    match root.kind() {
        RootKind::Exact(v) => q.eval(v).is_zero(),
        RootKind::Interval { lo, hi } => {
            if q.degree().unwrap_or(0) == 0 {
                return false;
            }
            let h = UniPoly::gcd(q, root.poly());
            if h.degree().unwrap_or(0) == 0 {
                return false;
            }
            // The interval contains exactly one root of the defining
            // polynomial; h divides it, so h has that root or none here.
            SturmChain::new(&h).count_roots_between(lo, hi) == 1
        }
    }
}

/// Exact sign of an arbitrary nonzero polynomial at an isolated root.
/// Returns Zero exactly when the root is a common root of `f` and the
/// defining polynomial.
pub fn sign_at_root(f: &UniPoly, root: &mut IsolatedRoot) -> Sign {
    assert!(!f.is_zero(), "sign of the zero polynomial at a root");
    if let Some(v) = root.exact_value() {
        return f.sign_at(v);
    }
    let fsf = f.square_free_part();
    if vanishes_at(&fsf, root) {
        return Sign::Zero;
    }
    let fchain = SturmChain::new(&fsf);
    loop {
        if let Some(v) = root.exact_value() {
            return f.sign_at(v);
        }
        let (lo, hi) = (root.lower_bound(), root.upper_bound());
        let slo = f.sign_at(&lo);
        if slo != Sign::Zero
            && f.sign_at(&hi) != Sign::Zero
            && fchain.count_roots_between(&lo, &hi) == 0
        {
            // f has constant sign on [lo, hi], which contains the root.
            return slo;
        }
        root.refine_once();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn r(s: &str) -> Rat {
        Rat::from_str(s).unwrap()
    }

    fn sparse_uni(cs: &[i64]) -> SparsePolynomial {
        let terms = cs
            .iter()
            .enumerate()
            .map(|(e, &c)| (vec![e as u32], Rat::from(Int::from(c))));
        SparsePolynomial::from_terms(1, terms).unwrap()
    }

    #[test]
    fn cubic_with_rational_roots_is_exact() {
        // x^3 - x: exactly {-1, 0, 1}, all exact.
        let roots = isolate_roots(&sparse_uni(&[0, -1, 0, 1])).unwrap();
        let vals: Vec<Rat> =
            roots.iter().map(|r| r.exact_value().unwrap().clone()).collect();
        assert_eq!(vals, vec![r("-1"), r("0"), r("1")]);
    }

    #[test]
    fn sqrt_two_intervals_refine() {
        // x^2 - 2: two interval roots, refinable below 2^-20.
        let mut roots = isolate_roots(&sparse_uni(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        let eps = Rat::new(Int::one(), Int::from(1u64 << 20));
        for root in roots.iter_mut() {
            assert!(!root.is_exact());
            root.refine_below(&eps);
            assert!(root.width() < eps);
        }
        // The positive root straddles 1.414213...
        assert!(roots[1].lower_bound() < r("14142136/10000000"));
        assert!(roots[1].upper_bound() > r("14142135/10000000"));
    }

    #[test]
    fn square_free_reduction_counts_once() {
        // (x-1)^2: one root, and it is exact.
        let roots = isolate_roots(&sparse_uni(&[1, -2, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].exact_value(), Some(&r("1")));
    }

    #[test]
    fn constant_and_zero_inputs() {
        assert!(isolate_roots(&sparse_uni(&[5])).unwrap().is_empty());
        assert!(isolate_roots(&SparsePolynomial::zero(1)).is_err());
    }

    #[test]
    fn merge_tags_membership() {
        // Family {x, x^2 - 1}: roots -1, 0, 1 with memberships {1},{0},{1}.
        let fam = vec![sparse_uni(&[0, 1]), sparse_uni(&[-1, 0, 1])];
        let merged = merge_roots(&fam).unwrap();
        assert_eq!(merged.len(), 3);
        let at = |i: usize| -> (Rat, Vec<usize>) {
            (
                merged[i].root.exact_value().unwrap().clone(),
                merged[i].members.iter().copied().collect(),
            )
        };
        assert_eq!(at(0), (r("-1"), vec![1]));
        assert_eq!(at(1), (r("0"), vec![0]));
        assert_eq!(at(2), (r("1"), vec![1]));
    }

    #[test]
    fn merge_shared_roots_once() {
        // {x - 1} twice: a single root with both members.
        let fam = vec![sparse_uni(&[-1, 1]), sparse_uni(&[-1, 1])];
        let merged = merge_roots(&fam).unwrap();
        assert_eq!(merged.len(), 1);
        assert_eq!(merged[0].members.len(), 2);
    }

    #[test]
    fn merge_irrational_membership() {
        // {x^2 - 2, x^4 - 4}: sqrt2 is shared, -sqrt2 shared, x^4 - 4 alone
        // has no extra real roots beyond ±sqrt2... it factors as
        // (x^2-2)(x^2+2), so memberships match everywhere.
        let fam = vec![sparse_uni(&[-2, 0, 1]), sparse_uni(&[-4, 0, 0, 0, 1])];
        let merged = merge_roots(&fam).unwrap();
        assert_eq!(merged.len(), 2);
        for m in &merged {
            assert_eq!(m.members.iter().copied().collect::<Vec<_>>(), vec![0, 1]);
        }
    }

    #[test]
    fn sign_at_root_exact_and_interval() {
        // At the positive root of x^2 - 2: x is positive, x - 2 negative,
        // and x^2 - 2 itself vanishes.
        let p = sparse_uni(&[-2, 0, 1]);
        let mut roots = isolate_roots(&p).unwrap();
        let root = &mut roots[1];
        let x = UniPoly::from_integers(&[0, 1]);
        let x_minus_2 = UniPoly::from_integers(&[-2, 1]);
        let itself = UniPoly::from_integers(&[-2, 0, 1]);
        assert_eq!(sign_at_root(&x, root), Sign::Pos);
        assert_eq!(sign_at_root(&x_minus_2, root), Sign::Neg);
        assert_eq!(sign_at_root(&itself, root), Sign::Zero);
    }

    #[test]
    fn cmp_point_detects_equality_by_upgrade() {
        // Root of x^2 - 4 in an interval; comparing against 2 upgrades.
        let mut root = IsolatedRoot::interval(
            UniPoly::from_integers(&[-4, 0, 1]),
            r("1"),
            r("3"),
        );
        assert_eq!(root.cmp_point(&r("2")), Ordering::Equal);
        assert!(root.is_exact());
        assert_eq!(root.cmp_point(&r("5/2")), Ordering::Less);
        assert_eq!(root.cmp_point(&r("0")), Ordering::Greater);
    }
}

//! Component-count bounds for sign conditions of a polynomial family on a
//! real variety.
//!
//! The central quantity: given a family of `s` polynomials of degree at most
//! `d` and a variety of dimension `k'` inside R^k cut out by polynomials of
//! degree at most `d0`, how many connected components can all sign conditions
//! of the family have in total on the variety? `main_bound_uniform` answers
//! with a closed-form bound; `main_bound_per_degree` refines it using the
//! individual degrees of the family. The older arrangement bound
//! (`bpr8_bound`), its leading term (`bpr_tight_leading`), a matching lower
//! bound construction (`tightness_lower_bound`), and a Bezout-style
//! counterexample count round out the comparison surface.
//!
//! All arithmetic is exact; results are arbitrary-precision integers or
//! rationals.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, binomial_big, Int, Nat, PrefixSymmetricTable, Rat};

/// Parameters of a uniform bound computation.
///
/// `s` is the family size (kept arbitrary-precision: applications can make
/// it combinatorially large), `d` the max family degree, `d0` the max degree
/// of the variety equations, `k` the ambient dimension, `kprime` the variety
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundParams {
    pub s: Nat,
    pub d: u64,
    pub d0: u64,
    pub k: u32,
    pub kprime: u32,
}

impl BoundParams {
    /// Validates and builds: requires `k >= 1`, `kprime <= k`, `d >= 1`,
    /// `d0 >= 1`.
    pub fn new(s: u64, d: u64, d0: u64, k: u32, kprime: u32) -> Result<Self> {
        Self::with_big_s(Nat::from(s), d, d0, k, kprime)
    }

    /// Same as `new` for a family size that does not fit a machine word.
    pub fn with_big_s(s: Nat, d: u64, d0: u64, k: u32, kprime: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("ambient dimension k must be >= 1".into()));
        }
        if kprime > k {
            return Err(Error::InvalidParams(format!(
                "variety dimension k'={kprime} exceeds ambient dimension k={k}"
            )));
        }
        if d == 0 || d0 == 0 {
            return Err(Error::InvalidParams("degrees d and d0 must be >= 1".into()));
        }
        Ok(BoundParams { s, d, d0, k, kprime })
    }
}

/// A nondecreasing list of polynomial degrees, each at least 1.
///
/// The constructor sorts, so callers may pass degrees in any order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<u64>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::InvalidParams("degrees must be >= 1".into()));
        }
        degrees.sort_unstable();
        Ok(DegreeSequence(degrees))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Euler characteristic of a generic complete intersection of `m`
/// hypersurfaces of the given degrees in projective k-space (even k), via
/// the degree recurrence. For odd k the same recurrence value is the one
/// the bounds consume.
///
/// Base cases: the empty intersection (m=0) gives k+1; a zero-dimensional
/// one (m=k) gives the Bezout number d1...dm.
pub fn chi(k: u32, degrees: &DegreeSequence) -> Result<Int> {
    let m = degrees.len();
    if m as u64 > k as u64 {
        return Err(Error::InvalidParams(format!(
            "chi needs m <= k; got m={m}, k={k}"
        )));
    }
    let mut memo: HashMap<(u32, usize), Int> = HashMap::new();
    Ok(chi_rec(k, m, degrees.as_slice(), &mut memo))
}

fn chi_rec(k: u32, m: usize, d: &[u64], memo: &mut HashMap<(u32, usize), Int>) -> Int {
    if m == 0 {
        return Int::from(k + 1);
    }
    if m as u64 == k as u64 {
        return d[..m].iter().map(|&x| Int::from(x)).product();
    }
    if let Some(v) = memo.get(&(k, m)) {
        return v.clone();
    }
    // chi^k_m = d_m chi^{k-1}_{m-1} - (d_m - 1) chi^{k-1}_m for 0 < m < k.
    let dm = Int::from(d[m - 1]);
    let a = chi_rec(k - 1, m - 1, d, memo);
    let b = chi_rec(k - 1, m, d, memo);
    let v = &dm * a - (dm - Int::one()) * b;
    memo.insert((k, m), v.clone());
    v
}

/// Upper bound for |chi|: C(k+1, m+1) * d1...d_{m-1} * d_m^{k-m+1}.
pub fn chi_bound(k: u32, degrees: &DegreeSequence) -> Result<Nat> {
    let m = degrees.len();
    if m as u64 > k as u64 {
        return Err(Error::InvalidParams(format!(
            "chi_bound needs m <= k; got m={m}, k={k}"
        )));
    }
    let mut acc = binomial(k as u64 + 1, m as u64 + 1);
    if m > 0 {
        let ds = degrees.as_slice();
        for &di in &ds[..m - 1] {
            acc *= Nat::from(di);
        }
        acc *= Nat::from(ds[m - 1]).pow(k - m as u32 + 1);
    }
    Ok(acc)
}

/// Upper bound for the sum of all Betti numbers of the same intersection:
/// `chi_bound` plus 2(k−m+1).
pub fn betti_sum_bound(k: u32, degrees: &DegreeSequence) -> Result<Nat> {
    let m = degrees.len() as u32;
    Ok(chi_bound(k, degrees)? + Nat::from(2 * (k - m + 1)))
}

/// The degree factor of the main bound at level `j`:
/// C(k+1, k−k'+j+1) * (2d0)^{k−k'} * d^j * max(2d0, d)^{k'−j} + 2(k−j+1).
pub fn f_bound(params: &BoundParams, j: u32) -> Result<Nat> {
    if j > params.kprime {
        return Err(Error::InvalidParams(format!(
            "f_bound needs j <= k'; got j={j}, k'={}",
            params.kprime
        )));
    }
    let (k, kp) = (params.k, params.kprime);
    let two_d0 = Nat::from(2u32) * Nat::from(params.d0);
    let maxdd = two_d0.clone().max(Nat::from(params.d));
    let head = binomial(k as u64 + 1, (k - kp + j) as u64 + 1)
        * two_d0.pow(k - kp)
        * Nat::from(params.d).pow(j)
        * maxdd.pow(kp - j);
    Ok(head + Nat::from(2 * (k as u64 - j as u64 + 1)))
}

/// The main uniform bound: sum over j = 0..=k' of 4^j * C(s+1, j) * F(j).
///
/// Bounds the total number of connected components over ALL sign conditions
/// of an s-element family of degree <= d on a k'-dimensional variety cut
/// out in degree <= d0.
pub fn main_bound_uniform(params: &BoundParams) -> Result<Nat> {
    let s_plus_1 = &params.s + Nat::one();
    let mut total = Nat::zero();
    for j in 0..=params.kprime {
        let term = Nat::from(4u32).pow(j)
            * binomial_big(&s_plus_1, j as u64)
            * f_bound(params, j)?;
        total += term;
    }
    Ok(total)
}

/// The per-degree refinement of the main bound.
///
/// Sums, over all subsets I of the family with |I| = j <= k',
/// 4^j * [C(k+1, k−k'+j+1) * (2d0)^{k−k'} * d_I * M_I^{k'−j} + 2(k−j+1)],
/// where d_I is the product of the degrees in I and M_I the largest
/// max(2d0, d_P) over I (taken as 2d0 for the empty subset).
///
/// The sum is evaluated without subset enumeration: with degrees sorted
/// ascending, every nonempty subset has a well-defined maximal element
/// position t (ties broken by position), and the subset products with
/// maximal element t and size j sum to d_t * e_{j-1}(d_1..d_{t-1}) — an
/// entry of the prefix symmetric table. O(s^2 k') ring operations; tests
/// check the result against the naive enumeration.
pub fn main_bound_per_degree(
    p_degrees: &DegreeSequence,
    d0: u64,
    k: u32,
    kprime: u32,
) -> Result<Nat> {
    if k == 0 || kprime > k {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k and k' <= k; got k={k}, k'={kprime}"
        )));
    }
    if d0 == 0 {
        return Err(Error::InvalidParams("d0 must be >= 1".into()));
    }
    let degrees = p_degrees.as_slice();
    let s = degrees.len();
    let jmax = (kprime as usize).min(s);
    let table = PrefixSymmetricTable::build(degrees, jmax.saturating_sub(1));
    let two_d0 = Nat::from(2u32) * Nat::from(d0);
    let two_d0_pow = two_d0.pow(k - kprime);

    // Empty subset: d_I = 1 and the max convention M_I = 2d0.
    let mut total = binomial(k as u64 + 1, (k - kprime) as u64 + 1)
        * &two_d0_pow
        * two_d0.pow(kprime)
        + Nat::from(2 * (k as u64 + 1));

    for j in 1..=jmax as u32 {
        let c_head = binomial(k as u64 + 1, (k - kprime + j) as u64 + 1);
        // Sum of d_I * M_I^{k'-j} over subsets of size j, grouped by the
        // maximal element position t (1-based into the sorted order).
        let mut inner = Nat::zero();
        for t in j as usize..=s {
            let d_t = degrees[t - 1];
            let m_t = two_d0.clone().max(Nat::from(d_t));
            let prefix = table
                .get(t - 1, j as usize - 1)
                .to_biguint()
                .expect("symmetric sums of positive degrees are positive");
            inner += Nat::from(d_t) * prefix * m_t.pow(kprime - j);
        }
        let four_j = Nat::from(4u32).pow(j);
        total += &four_j * c_head * &two_d0_pow * inner;
        // Each size-j subset also contributes the constant 2(k-j+1).
        total += four_j
            * Nat::from(2 * (k as u64 - j as u64 + 1))
            * binomial(s as u64, j as u64);
    }
    Ok(total)
}

/// Which summation range the arrangement-era bound uses. The two published
/// statements differ in whether the j = 0 term is included; `Section11`
/// (the detailed statement) keeps it, `Abstract` starts at j = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Bpr8Range {
    #[default]
    Section11,
    Abstract,
}

/// The arrangement-era bound this work improves on:
/// sum over j = 0..=(k'−i) of C(s,j) * 4^j * d(2d−1)^{k−1}.
pub fn bpr8_bound(s: u64, d: u64, k: u32, kprime: u32, i: u32) -> Result<Nat> {
    bpr8_bound_in_range(s, d, k, kprime, i, Bpr8Range::Section11)
}

/// `bpr8_bound` with an explicit choice of summation range.
pub fn bpr8_bound_in_range(
    s: u64,
    d: u64,
    k: u32,
    kprime: u32,
    i: u32,
    range: Bpr8Range,
) -> Result<Nat> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidParams("need d >= 1 and k >= 1".into()));
    }
    if i > kprime {
        return Err(Error::InvalidParams(format!(
            "need i <= k'; got i={i}, k'={kprime}"
        )));
    }
    let cell =
        Nat::from(d) * (Nat::from(2u32) * Nat::from(d) - Nat::one()).pow(k - 1);
    let j_min = match range {
        Bpr8Range::Section11 => 0,
        Bpr8Range::Abstract => 1,
    };
    let mut total = Nat::zero();
    for j in j_min..=(kprime - i) as u64 {
        total += binomial(s, j) * Nat::from(4u32).pow(j as u32) * &cell;
    }
    Ok(total)
}

/// Exact leading term (2d)^k s^k / k! of the tight arrangement bound.
///
/// This is the leading term only; the lower-order remainder is not
/// represented and no inequality against it is claimed.
pub fn bpr_tight_leading(s: u64, d: u64, k: u32) -> Result<Rat> {
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1".into()));
    }
    let num = (Nat::from(2u32) * Nat::from(d)).pow(k) * Nat::from(s).pow(k);
    let fact: Nat = (1..=k as u64).map(Nat::from).product();
    Ok(Rat::new(Int::from(num), Int::from(fact)))
}

/// Lower bound achieved by an explicit family on a union of d0 parallel
/// hyperplanes: d0 * sum over i = 0..k-1 of C(sd, i).
pub fn tightness_lower_bound(s: u64, d: u64, d0: u64, k: u32) -> Result<Nat> {
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1".into()));
    }
    let sd = Nat::from(s) * Nat::from(d);
    let mut sum = Nat::zero();
    for i in 0..k as u64 {
        sum += binomial_big(&sd, i);
    }
    Ok(Nat::from(d0) * sum)
}

/// The two sides of the Bezout-failure example: the family on k+1 variables
/// whose zero set has 2d^k isolated points against a degree product of only
/// 2d * m!.
pub fn counterexample_degrees_product(d: u64, k: u32, m: u32) -> Result<(Nat, Nat)> {
    if d == 0 || k == 0 || m < 2 {
        return Err(Error::InvalidParams(
            "need d >= 1, k >= 1, m >= 2".into(),
        ));
    }
    let count = Nat::from(2u32) * Nat::from(d).pow(k);
    let fact: Nat = (1..=m as u64).map(Nat::from).product();
    let product = Nat::from(2u32) * Nat::from(d) * fact;
    Ok((count, product))
}

/// Bound for the incidence application: coarse cells of n points in R^d as
/// seen from the Grassmannian of k-flats.
///
/// Instantiates the main bound with s = C(2^{k+1}−2, k) * C(n, k+1)
/// polynomials of degree 2k on the Plucker variety (degree-2 equations,
/// dimension k(d−k)) inside ambient dimension d^2.
pub fn grassmannian_application_bound(n: u64, k: u32, d: u32) -> Result<Nat> {
    if k == 0 || k >= d {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k < d; got k={k}, d={d}"
        )));
    }
    if n < k as u64 + 1 {
        return Err(Error::InvalidParams(format!(
            "need n >= k+1; got n={n}, k={k}"
        )));
    }
    let pool = Nat::from(2u32).pow(k + 1) - Nat::from(2u32);
    let s = binomial_big(&pool, k as u64) * binomial(n, k as u64 + 1);
    let ambient = d
        .checked_mul(d)
        .ok_or_else(|| Error::InvalidParams("ambient dimension d^2 overflows".into()))?;
    let kprime = k
        .checked_mul(d - k)
        .ok_or_else(|| Error::InvalidParams("variety dimension k(d-k) overflows".into()))?;
    let params = BoundParams::with_big_s(s, 2 * k as u64, 2, ambient, kprime)?;
    main_bound_uniform(&params)
}

/// One row of bound values for a single parameter tuple, as consumed by
/// reporting front ends.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub params: BoundParams,
    pub main_uniform: Nat,
    /// Present when individual degrees were supplied.
    pub main_per_degree: Option<Nat>,
    pub bpr8: Nat,
    pub tightness_lower: Nat,
    pub bpr_tight_leading: Rat,
}

impl BoundReport {
    /// Computes every bound for the tuple. `degrees`, when given, must
    /// be consistent with `params.d` being their maximum.
    pub fn compute(
        params: &BoundParams,
        degrees: Option<&DegreeSequence>,
        range: Bpr8Range,
    ) -> Result<BoundReport> {
        let s_u64 = u64::try_from(&params.s).map_err(|_| {
            Error::InvalidParams("report requires a machine-word family size".into())
        })?;
        Ok(BoundReport {
            params: params.clone(),
            main_uniform: main_bound_uniform(params)?,
            main_per_degree: degrees
                .map(|ds| main_bound_per_degree(ds, params.d0, params.k, params.kprime))
                .transpose()?,
            bpr8: bpr8_bound_in_range(s_u64, params.d, params.k, params.kprime, 0, range)?,
            tightness_lower: tightness_lower_bound(s_u64, params.d, params.d0, params.k)?,
            bpr_tight_leading: bpr_tight_leading(s_u64, params.d, params.k)?,
        })
    }

    /// Exact ratio main_uniform / bpr8, or None when bpr8 is zero (possible
    /// only under the abstract summation range with k' = 0).
    pub fn ratio(&self) -> Option<Rat> {
        if self.bpr8.is_zero() {
            return None;
        }
        Some(Rat::new(
            Int::from(self.main_uniform.clone()),
            Int::from(self.bpr8.clone()),
        ))
    }
}

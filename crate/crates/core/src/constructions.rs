//! Generators for witness instances: products of generic linear forms on a
//! stack of horizontal lines (the tight family), the grid counterexample
//! family, and the moment-curve subspace families used by the
//! transversality argument.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::{Int, Rat};
use crate::polyalg::sparse::SparsePolynomial;

/// An affine-linear polynomial `c · X + constant` with a nonzero
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<Rat>,
    constant: Rat,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rat>, constant: Rat) -> Result<Self> {
        if coefficients.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidParams(
                "linear form needs a nonzero coefficient vector".into(),
            ));
        }
        Ok(LinearForm { coefficients, constant })
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    /// Exact value at a point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.coefficients.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coefficients.len(),
                got: point.len(),
            });
        }
        let mut acc = self.constant.clone();
        for (c, x) in self.coefficients.iter().zip(point) {
            acc += c * x;
        }
        Ok(acc)
    }

    /// The form as a degree-1 sparse polynomial.
    pub fn to_polynomial(&self) -> SparsePolynomial {
        let n = self.coefficients.len();
        let mut p = SparsePolynomial::constant(n, self.constant.clone());
        for (i, c) in self.coefficients.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0u32; n];
                exps[i] = 1;
                p.add_term(exps, c.clone()).expect("exponent length matches nvars");
            }
        }
        p
    }
}

/// A list of linearly independent vectors over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    vectors: Vec<Vec<Rat>>,
}

impl SubspaceBasis {
    pub fn new(vectors: Vec<Vec<Rat>>) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::InvalidParams("basis needs at least one vector".into()));
        };
        let ambient = first.len();
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, got: bad.len() });
        }
        if matrix_rank(&vectors) != vectors.len() {
            return Err(Error::DependentVectors);
        }
        Ok(SubspaceBasis { vectors })
    }

    /// Number of basis vectors (= dimension of the span).
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Dimension of the containing space.
    pub fn ambient_dim(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }
}

/// Exact rank of a list of row vectors, by fraction-free-enough Gaussian
/// elimination over the rationals.
pub fn matrix_rank(vectors: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = vectors.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in (rank + 1)..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &m[rank][c];
            for j in c..cols {
                let delta = &factor * &m[rank][j];
                let updated = &m[i][j] - &delta;
                m[i][j] = updated;
            }
        }
        rank += 1;
    }
    rank
}

/// Builds the tight instance: `s` polynomials in `k` variables, each an
/// expanded product of `d` pseudo-random linear forms, together with the
/// variety polynomial pinning the last coordinate to the levels 1..=d0.
/// Deterministic for a fixed seed; callers draw a fresh seed whenever the
/// counting oracle reports a degeneracy.
pub fn make_tightness_instance(
    s: u64,
    d: u64,
    d0: u64,
    k: u32,
    seed: u64,
) -> Result<(Vec<SparsePolynomial>, SparsePolynomial)> {
    if s == 0 || d == 0 || d0 == 0 || k == 0 {
        return Err(Error::InvalidParams(
            "tightness instance needs s, d, d0, k >= 1".into(),
        ));
    }
    let n = k as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut family = Vec::with_capacity(s as usize);
    for _ in 0..s {
        let mut p = SparsePolynomial::constant(n, Rat::one());
        for _ in 0..d {
            p = &p * &random_linear_form(n, &mut rng).to_polynomial();
        }
        family.push(p);
    }
    let xk = SparsePolynomial::var(n, n - 1)?;
    let mut q = SparsePolynomial::constant(n, Rat::one());
    for i in 1..=d0 {
        let level = SparsePolynomial::constant(n, Rat::from(Int::from(i)));
        q = &q * &(&xk - &level);
    }
    Ok((family, q))
}

/// A linear form with small random rational coefficients. The first
/// coordinate's coefficient is forced nonzero, so restricting to any level
/// of another coordinate keeps the degree.
fn random_linear_form<R: Rng>(n: usize, rng: &mut R) -> LinearForm {
    let mut coefficients = Vec::with_capacity(n);
    coefficients.push(small_rat(rng, true));
    for _ in 1..n {
        coefficients.push(small_rat(rng, false));
    }
    LinearForm::new(coefficients, small_rat(rng, false))
        .expect("first coefficient is nonzero")
}

fn small_rat<R: Rng>(rng: &mut R, nonzero: bool) -> Rat {
    let mut num: i64 = rng.gen_range(-9..=9);
    while nonzero && num == 0 {
        num = rng.gen_range(-9..=9);
    }
    let den: i64 = rng.gen_range(1..=3);
    Rat::new(Int::from(num), Int::from(den))
}

/// The family in k+1 variables whose common zero set is the finite grid
/// {1..d}^k x {1, 2}: one sum of squares of degree 2d pinning the first k
/// coordinates, then products of decreasing numbers of shifts of the last
/// coordinate.
pub fn make_counterexample_instance(d: u64, k: u32, m: u32) -> Result<Vec<SparsePolynomial>> {
    if d == 0 || k == 0 || m < 2 {
        return Err(Error::InvalidParams(
            "counterexample instance needs d, k >= 1 and m >= 2".into(),
        ));
    }
    let n = k as usize + 1;
    let mut family = Vec::with_capacity(m as usize);
    let mut p1 = SparsePolynomial::zero(n);
    for i in 0..k as usize {
        let xi = SparsePolynomial::var(n, i)?;
        let mut u = SparsePolynomial::constant(n, Rat::one());
        for j in 1..=d {
            let shift = SparsePolynomial::constant(n, Rat::from(Int::from(j)));
            u = &u * &(&xi - &shift);
        }
        p1 = &p1 + &(&u * &u);
    }
    family.push(p1);
    let xlast = SparsePolynomial::var(n, n - 1)?;
    for j in 2..=m {
        let mut pj = SparsePolynomial::constant(n, Rat::one());
        for i in 1..=(m - j + 2) {
            let shift = SparsePolynomial::constant(n, Rat::from(Int::from(i)));
            pj = &pj * &(&xlast - &shift);
        }
        family.push(pj);
    }
    Ok(family)
}

/// The moment vector (1, x, x^2, ..., x^{k-1}).
pub fn moment_vector(k: u32, x: &Rat) -> Vec<Rat> {
    assert!(k >= 1, "moment vector needs k >= 1");
    let mut v = Vec::with_capacity(k as usize);
    let mut pow = Rat::one();
    for _ in 0..k {
        v.push(pow.clone());
        pow *= x;
    }
    v
}

/// The family of k(k-j)+1 spans of consecutive moment vectors at nodes
/// m*eps, m*eps+1, ..., m*eps+k-j-1, for m = 0..=k(k-j). Every j-dimensional
/// subspace is transversal to at least one member.
pub fn transversal_family(k: u32, j: u32, eps: &Rat) -> Result<Vec<SubspaceBasis>> {
    if j == 0 || j >= k {
        return Err(Error::InvalidParams(
            "transversal family needs 1 <= j <= k-1 (j = k leaves zero-dimensional spans)".into(),
        ));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidParams("eps must be positive".into()));
    }
    let count = u64::from(k) * u64::from(k - j);
    let mut family = Vec::with_capacity(count as usize + 1);
    for m in 0..=count {
        let base = Rat::from(Int::from(m)) * eps;
        let mut vectors = Vec::with_capacity((k - j) as usize);
        for t in 0..(k - j) {
            let node = &base + Rat::from(Int::from(t));
            vectors.push(moment_vector(k, &node));
        }
        // Distinct nodes make these rows of a Vandermonde matrix, so the
        // rank check never fires; it stays as a guard on the arithmetic.
        family.push(SubspaceBasis::new(vectors)?);
    }
    Ok(family)
}

/// Do the two spans intersect only at the origin, checked by exact rank of
/// the stacked bases?
pub fn is_transversal(a: &SubspaceBasis, b: &SubspaceBasis, k: usize) -> Result<bool> {
    if a.ambient_dim() != k {
        return Err(Error::DimensionMismatch { expected: k, got: a.ambient_dim() });
    }
    if b.ambient_dim() != k {
        return Err(Error::DimensionMismatch { expected: k, got: b.ambient_dim() });
    }
    let total = a.dim() + b.dim();
    if total > k {
        return Err(Error::InvalidParams(
            "combined subspace dimensions exceed the ambient space".into(),
        ));
    }
    let mut stacked = a.vectors().to_vec();
    stacked.extend(b.vectors().iter().cloned());
    Ok(matrix_rank(&stacked) == total)
}

/// A pseudo-random j-dimensional subspace of Q^k (resamples until the drawn
/// vectors are independent).
pub fn random_subspace<R: Rng>(k: u32, j: u32, rng: &mut R) -> Result<SubspaceBasis> {
    if j == 0 || j > k {
        return Err(Error::InvalidParams("need 1 <= j <= k".into()));
    }
    loop {
        let vectors: Vec<Vec<Rat>> = (0..j)
            .map(|_| (0..k).map(|_| small_rat(rng, false)).collect())
            .collect();
        match SubspaceBasis::new(vectors) {
            Ok(basis) => return Ok(basis),
            Err(Error::DependentVectors) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// A small random univariate instance for the counting-versus-bound
/// corpus: 1..=4 polynomials of degree 1..=4 with integer coefficients in
/// [-5, 5], and, half the time, a variety polynomial of degree 1..=3.
pub fn random_univariate_instance(seed: u64) -> (Vec<SparsePolynomial>, Option<SparsePolynomial>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = rng.gen_range(1..=4);
    let family = (0..s).map(|_| random_uni_poly(&mut rng, 4)).collect();
    let variety =
        if rng.gen_bool(0.5) { Some(random_uni_poly(&mut rng, 3)) } else { None };
    (family, variety)
}

fn random_uni_poly<R: Rng>(rng: &mut R, max_deg: u32) -> SparsePolynomial {
    let deg = rng.gen_range(1..=max_deg);
    let mut p = SparsePolynomial::zero(1);
    for e in 0..deg {
        let c: i64 = rng.gen_range(-5..=5);
        if c != 0 {
            p.add_term(vec![e], Rat::from(Int::from(c))).expect("univariate exponent");
        }
    }
    let mut lead: i64 = rng.gen_range(-5..=5);
    while lead == 0 {
        lead = rng.gen_range(-5..=5);
    }
    p.add_term(vec![deg], Rat::from(Int::from(lead))).expect("univariate exponent");
    p
}

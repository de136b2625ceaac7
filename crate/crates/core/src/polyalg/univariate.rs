//! Dense univariate polynomials over exact rationals: division, gcd,
//! square-free parts, Sturm chains, and opportunistic rational-root
//! recovery. This is the engine under root isolation.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{Int, Rat};
use crate::polyalg::sparse::{Sign, SparsePolynomial};

/// Univariate polynomial with exact rational coefficients, ascending by
/// degree, no trailing zeros (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_integers(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rat::from(Int::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> Sign {
        Sign::of(&self.eval(x))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from(Int::from(i as u64)))
            .collect();
        UniPoly::new(cs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, k: &Rat) -> UniPoly {
        if k.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Leading coefficient made +1 (sign information discarded).
    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.clone().recip()),
        }
    }

    /// Divides by |leading coefficient|: a positive rescale, so every sign
    /// evaluation is preserved. Used to tame coefficient growth.
    fn normalized_signs(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.abs().recip()),
        }
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut cs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            cs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            cs[i] += c;
        }
        UniPoly::new(cs)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut cs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                cs[i + j] += a * b;
            }
        }
        UniPoly::new(cs)
    }

    /// Euclidean division: returns (quotient, remainder). Panics on a zero
    /// divisor — that is a caller bug, not input.
    pub fn divmod(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd && !rem.is_empty() {
            let last = rem.last().unwrap();
            if last.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - dd;
            let q = last / lc;
            for i in 0..dd {
                let delta = &q * &divisor.coeffs[i];
                rem[shift + i] -= delta;
            }
            rem.pop();
            quo[shift] = q;
        }
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.divmod(divisor).1
    }

    /// Monic gcd by the Euclidean algorithm, with sign-preserving rescaling
    /// of intermediate remainders to keep coefficients small.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut x = a.normalized_signs();
        let mut y = b.normalized_signs();
        while !y.is_zero() {
            let r = x.rem(&y).normalized_signs();
            x = y;
            y = r;
        }
        x.monic()
    }

    /// The square-free part: same distinct roots, all simple, monic.
    pub fn square_free_part(&self) -> UniPoly {
        match self.degree() {
            None => UniPoly::zero(),
            Some(0) => UniPoly::constant(Rat::one()),
            Some(_) => {
                let g = UniPoly::gcd(self, &self.derivative());
                self.divmod(&g).0.monic()
            }
        }
    }

    /// A bound B with every real root strictly inside (-B, B):
    /// 1 + max |a_i| / |a_n|.
    pub fn cauchy_root_bound(&self) -> Rat {
        let n = match self.degree() {
            None | Some(0) => return Rat::one(),
            Some(n) => n,
        };
        let lc = self.coeffs[n].abs();
        let mut m = Rat::zero();
        for c in &self.coeffs[..n] {
            let v = c.abs() / &lc;
            if v > m {
                m = v;
            }
        }
        m + Rat::one()
    }

    /// Exact division by (X - r); requires r to be a root.
    pub fn deflate_root(&self, r: &Rat) -> UniPoly {
        debug_assert!(self.eval(r).is_zero(), "deflation point must be a root");
        let divisor = UniPoly::new(vec![-r.clone(), Rat::one()]);
        let (q, rem) = self.divmod(&divisor);
        debug_assert!(rem.is_zero());
        q
    }

    /// Clears denominators and content: the primitive integer coefficient
    /// vector of a nonzero polynomial, ascending.
    pub fn primitive_integer_coeffs(&self) -> Vec<Int> {
        if self.is_zero() {
            return vec![];
        }
        let mut lcm = Int::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<Int> =
            self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let mut content = Int::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if !content.is_zero() && !content.is_one() {
            for v in &mut ints {
                *v /= &content;
            }
        }
        ints
    }

    /// All rational roots, exactly — or None when the integer coefficients
    /// are too large for the divisor search budget. When `Some` is
    /// returned the list is complete, sorted, and each entry verified.
    pub fn rational_roots(&self) -> Option<Vec<Rat>> {
        // Trial divisions per divisor search, and total p/q candidates;
        // larger inputs fall back to interval isolation instead.
        const TRIALS: u64 = 1 << 17;
        const CANDIDATES: usize = 1 << 13;
        if self.is_zero() || self.degree() == Some(0) {
            return Some(vec![]);
        }
        let mut roots: BTreeSet<Rat> = BTreeSet::new();
        let mut ints = self.primitive_integer_coeffs();
        // Factor out X^v: zero is a root iff the low coefficient vanishes.
        let v = ints.iter().take_while(|c| c.is_zero()).count();
        if v > 0 {
            roots.insert(Rat::zero());
            ints.drain(..v);
        }
        if ints.len() <= 1 {
            return Some(roots.into_iter().collect());
        }
        let a0 = ints.first().unwrap().abs();
        let an = ints.last().unwrap().abs();
        let a0: u64 = u64::try_from(&a0.to_biguint().unwrap()).ok()?;
        let an: u64 = u64::try_from(&an.to_biguint().unwrap()).ok()?;
        let num_divs = divisors_within(a0, TRIALS)?;
        let den_divs = divisors_within(an, TRIALS)?;
        if num_divs.len().saturating_mul(den_divs.len()) > CANDIDATES {
            return None;
        }
        let tail = UniPoly::new(ints.iter().map(|c| Rat::from(c.clone())).collect());
        for p in num_divs {
            for &q in &den_divs {
                for signed in [Rat::new(Int::from(p), Int::from(q)), Rat::new(-Int::from(p), Int::from(q))]
                {
                    if tail.eval(&signed).is_zero() {
                        roots.insert(signed);
                    }
                }
            }
        }
        Some(roots.into_iter().collect())
    }
}

impl TryFrom<&SparsePolynomial> for UniPoly {
    type Error = Error;

    /// Succeeds when at most one variable appears with a nonzero exponent
    /// (so restrictions of multivariate polynomials convert directly).
    fn try_from(p: &SparsePolynomial) -> Result<UniPoly> {
        let mut active: Option<usize> = None;
        for (exps, _) in p.terms() {
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    match active {
                        None => active = Some(i),
                        Some(j) if j == i => {}
                        Some(_) => {
                            return Err(Error::NotUnivariate { nvars: p.nvars() })
                        }
                    }
                }
            }
        }
        let var = active.unwrap_or(0);
        let mut cs = vec![Rat::zero(); p.degree() as usize + 1];
        for (exps, coef) in p.terms() {
            let e = exps.get(var).copied().unwrap_or(0) as usize;
            cs[e] += coef;
        }
        Ok(UniPoly::new(cs))
    }
}

/// All positive divisors of n >= 1, or None when finding them would
/// take more than `trials` trial divisions (i.e. sqrt(n) > trials).
fn divisors_within(n: u64, trials: u64) -> Option<Vec<u64>> {
    if n / trials > trials {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    Some(out)
}

/// Sturm chain of a nonzero polynomial: the signed remainder sequence of
/// (p, p'), each entry positively rescaled.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> SturmChain {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut chain = vec![p.normalized_signs()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.normalized_signs());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().normalized_signs());
            }
        }
        SturmChain { chain }
    }

    /// Number of sign changes in the chain evaluated at x (zeros skipped).
    pub fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = Sign::Zero;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    /// Requires p(lo) != 0 and p(hi) != 0.
    pub fn count_roots_between(&self, lo: &Rat, hi: &Rat) -> usize {
        debug_assert!(lo < hi);
        debug_assert!(!self.chain[0].eval(lo).is_zero(), "left endpoint is a root");
        debug_assert!(!self.chain[0].eval(hi).is_zero(), "right endpoint is a root");
        self.variations_at(lo)
            .checked_sub(self.variations_at(hi))
            .expect("Sturm variations decrease left to right")
    }
}

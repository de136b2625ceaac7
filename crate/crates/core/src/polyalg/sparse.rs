//! Sparse multivariate polynomials over exact rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero as _;

use crate::error::{Error, Result};
use crate::exactmath::{Int, Rat};

/// Sign of an exact rational value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r > &Rat::zero() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    /// One-character rendering: '-', '0', '+'.
    pub fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

/// Exact power of a rational with a machine-word exponent.
pub(crate) fn rat_pow(r: &Rat, e: u32) -> Rat {
    if e == 0 {
        return Rat::from(Int::from(1));
    }
    Rat::new(r.numer().pow(e), r.denom().pow(e))
}

/// A polynomial in `nvars` variables, stored as a map from exponent
/// vectors to nonzero rational coefficients.
///
/// The representation is canonical: no zero coefficients, no duplicate
/// exponent vectors, every exponent vector of length `nvars`. Equality is
/// therefore structural equality of values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SparsePolynomial {
    /// The zero polynomial in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { nvars, terms: BTreeMap::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable X_i (0-based).
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: i + 1 });
        }
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exps, Rat::from(Int::from(1)));
        Ok(p)
    }

    /// Builds from (exponent vector, coefficient) pairs, combining
    /// duplicates and dropping zero coefficients.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = Self::zero(nvars);
        for (exps, coef) in terms {
            p.add_term(exps, coef)?;
        }
        Ok(p)
    }

    /// Adds `coef * X^exps` in place.
    pub fn add_term(&mut self, exps: Vec<u32>, coef: Rat) -> Result<()> {
        if exps.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: exps.len() });
        }
        if coef.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Max total degree over the terms; 0 for the zero polynomial (which
    /// `is_zero` distinguishes from a nonzero constant).
    pub fn degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
            .unwrap_or(0)
    }

    /// Iterates (exponent vector, coefficient) in the canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Rat::zero();
        for (exps, coef) in &self.terms {
            let mut term = coef.clone();
            for (x, &e) in point.iter().zip(exps.iter()) {
                if e > 0 {
                    term *= rat_pow(x, e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Exact sign at a point.
    pub fn eval_sign(&self, point: &[Rat]) -> Result<Sign> {
        Ok(Sign::of(&self.eval(point)?))
    }

    /// Substitutes `value` for variable `var`, keeping `nvars` unchanged
    /// (the substituted variable simply stops appearing).
    pub fn restrict(&self, var: usize, value: &Rat) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: var + 1 });
        }
        let mut out = Self::zero(self.nvars);
        for (exps, coef) in &self.terms {
            let mut e2 = exps.clone();
            let e = e2[var];
            e2[var] = 0;
            out.add_term(e2, coef * rat_pow(value, e))?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c.clone();
        }
        out
    }
}

// The arithmetic operators require matching variable counts; a mismatch is
// a programming error, not recoverable input, so they panic.
impl std::ops::Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone()).expect("same nvars");
        }
        out
    }
}

impl std::ops::Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable counts differ");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea
                    .iter()
                    .zip(eb.iter())
                    .map(|(&x, &y)| x.checked_add(y).expect("exponent overflow"))
                    .collect();
                out.add_term(exps, ca * cb).expect("same nvars");
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coef) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coef})")?;
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

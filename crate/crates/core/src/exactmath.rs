//! Arbitrary-precision integer and rational arithmetic, plus the small
//! combinatorial kernels the bound formulas are built from.
//!
//! Everything downstream computes in these types; no floating point is
//! used anywhere in a bound or a count.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Unsigned arbitrary-precision integer.
pub type Nat = BigUint;
/// Signed arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rat = BigRational;

/// Binomial coefficient C(n, j), with C(n, j) = 0 whenever j > n.
///
/// Uses the multiplicative form; every intermediate division is exact
/// because the running value is itself a binomial coefficient.
pub fn binomial(n: u64, j: u64) -> Nat {
    if j > n {
        return Nat::zero();
    }
    // Symmetry keeps the loop short.
    let j = j.min(n - j);
    let mut acc = Nat::one();
    for i in 0..j {
        acc = acc * Nat::from(n - i) / Nat::from(i + 1);
    }
    acc
}

/// Binomial coefficient C(n, j) for arbitrary-precision n.
///
/// Needed when n itself is a computed quantity too large for a machine
/// word; j stays a machine word in every use at hand.
pub fn binomial_big(n: &Nat, j: u64) -> Nat {
    if Nat::from(j) > *n {
        return Nat::zero();
    }
    let mut acc = Nat::one();
    let mut num = n.clone();
    for i in 0..j {
        if i > 0 {
            num -= Nat::one();
        }
        acc = acc * &num / Nat::from(i + 1);
    }
    acc
}

/// Rising table of elementary symmetric sums over prefixes of a sequence.
///
/// `E[t][j]` is the sum, over all size-`j` subsets `I` of the first `t`
/// entries, of the product of the entries in `I`. Row 0 is the empty
/// prefix: `E[0][0] = 1`, `E[0][j] = 0` for `j > 0`.
#[derive(Debug, Clone)]
pub struct PrefixSymmetricTable {
    table: Vec<Vec<Int>>,
    jmax: usize,
}

impl PrefixSymmetricTable {
    /// Builds the table for `degrees` with columns `0..=jmax`.
    ///
    /// One pass of the standard elementary-symmetric recurrence
    /// `E[t][j] = E[t-1][j] + d_t * E[t-1][j-1]`, O(s * jmax) ring ops.
    pub fn build(degrees: &[u64], jmax: usize) -> Self {
        let s = degrees.len();
        let mut table = vec![vec![Int::zero(); jmax + 1]; s + 1];
        table[0][0] = Int::one();
        for t in 1..=s {
            let d = Int::from(degrees[t - 1]);
            table[t][0] = Int::one();
            for j in 1..=jmax {
                let carry = &table[t - 1][j - 1] * &d;
                table[t][j] = &table[t - 1][j] + carry;
            }
        }
        PrefixSymmetricTable { table, jmax }
    }

    /// `E[t][j]`: elementary symmetric sum of order `j` over the first
    /// `t` entries. Zero when `j` exceeds `t` or the built column range.
    pub fn get(&self, t: usize, j: usize) -> Int {
        if t >= self.table.len() || j > self.jmax {
            return Int::zero();
        }
        self.table[t][j].clone()
    }

    /// Number of sequence entries the table covers.
    pub fn len(&self) -> usize {
        self.table.len() - 1
    }

    /// True when built over the empty sequence.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Renders an exact rational as a decimal string with `digits` fractional
/// digits, rounding half away from zero. Deterministic by construction.
pub fn rat_to_decimal(r: &Rat, digits: u32) -> String {
    let sign = if r < &Rat::zero() { "-" } else { "" };
    let abs = if r < &Rat::zero() { -r.clone() } else { r.clone() };
    let scale = Nat::from(10u32).pow(digits);
    // round(|r| * 10^digits) with ties away from zero
    let scaled_num = abs.numer().to_biguint().unwrap() * &scale;
    let den = abs.denom().to_biguint().unwrap();
    let (q, rem) = num_integer::Integer::div_rem(&scaled_num, &den);
    let q = if &rem * Nat::from(2u32) >= den { q + Nat::one() } else { q };
    let (int_part, frac_part) = num_integer::Integer::div_rem(&q, &scale);
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{frac:0>width$}", frac = frac_part, width = digits as usize)
}

//! Helpers shared by the integration suites.
#![allow(dead_code)]

use signbounds::Nat;

/// Exact binomial coefficient in machine words, for the subset oracle.
pub fn binom_u128(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc = 1u128;
    for i in 0..r {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Per-subset data of a degree multiset, aggregated per (subset size,
/// maximal degree): the sum of the degree products. Built by explicit
/// enumeration of all 2^s subsets, deliberately independent of the
/// production dynamic program, and reusable across (k, k', d0) choices.
pub struct SubsetBuckets {
    /// sums[j][dmax] = sum of prod(d_P for P in I) over subsets I with
    /// |I| = j and max degree dmax (the empty subset lands in [0][0]).
    sums: Vec<Vec<u128>>,
    s: usize,
}

impl SubsetBuckets {
    pub fn build(degrees: &[u64]) -> Self {
        let s = degrees.len();
        assert!(s <= 20, "subset oracle is exponential in s");
        let dcap = degrees.iter().copied().max().unwrap_or(0) as usize;
        let mut sums = vec![vec![0u128; dcap + 1]; s + 1];
        for mask in 0u32..(1u32 << s) {
            let mut j = 0usize;
            let mut prod = 1u128;
            let mut dmax = 0u64;
            for (t, &d) in degrees.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    j += 1;
                    prod *= u128::from(d);
                    dmax = dmax.max(d);
                }
            }
            sums[j][dmax as usize] += prod;
        }
        SubsetBuckets { sums, s }
    }

    /// The per-degree bound evaluated straight from the definition:
    /// sum over subsets I with |I| = j <= k' of
    /// 4^j (C(k+1, k-k'+j+1) (2 d0)^(k-k') d_I M_I^(k'-j) + 2(k-j+1)),
    /// with M_I = max(2 d0, max degree in I) and M_empty = 2 d0.
    pub fn eval(&self, d0: u64, k: u32, kprime: u32) -> Nat {
        let mut total = 0u128;
        let jmax = (kprime as usize).min(self.s);
        for j in 0..=jmax {
            let head = binom_u128(u64::from(k) + 1, u64::from(k - kprime) + j as u64 + 1);
            let shared = u128::from(4u32).pow(j as u32)
                * head
                * (2 * u128::from(d0)).pow(k - kprime);
            for (dmax, &sum) in self.sums[j].iter().enumerate() {
                if sum == 0 {
                    continue;
                }
                let m = (2 * u128::from(d0)).max(dmax as u128);
                total += shared * sum * m.pow(kprime - j as u32);
            }
            // Each subset of size j also contributes the constant 2(k-j+1).
            total += u128::from(4u32).pow(j as u32)
                * binom_u128(self.s as u64, j as u64)
                * 2
                * (u128::from(k) - j as u128 + 1);
        }
        Nat::from(total)
    }
}

/// All nondecreasing sequences over {1..=maxval} of length 0..=maxlen.
pub fn nondecreasing_multisets(maxlen: usize, maxval: u64) -> Vec<Vec<u64>> {
    let mut all: Vec<Vec<u64>> = vec![vec![]];
    let mut frontier: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for seq in &frontier {
            let lo = seq.last().copied().unwrap_or(1);
            for v in lo..=maxval {
                let mut ext = seq.clone();
                ext.push(v);
                next.push(ext);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

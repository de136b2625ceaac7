//! Inclusive parameter sweeps.
//!
//! Every numeric flag accepts either a scalar like `3` or a range like
//! `2..5`; a run is the lexicographic product of all swept flags, so the
//! output row order is stable for a fixed command line.

/// An inclusive range of parameter values; a scalar is a one-value range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sweep {
    lo: u64,
    hi: u64,
}

impl Sweep {
    /// The swept values in increasing order.
    pub fn values(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

/// Parses `lo..hi` (inclusive) or a plain scalar.
pub fn parse_sweep(text: &str) -> Result<Sweep, String> {
    if let Some((a, b)) = text.split_once("..") {
        let lo: u64 =
            a.trim().parse().map_err(|_| format!("bad sweep start {a:?} in {text:?}"))?;
        let hi: u64 =
            b.trim().parse().map_err(|_| format!("bad sweep end {b:?} in {text:?}"))?;
        if lo > hi {
            return Err(format!("empty sweep {text:?}: start exceeds end"));
        }
        Ok(Sweep { lo, hi })
    } else {
        let v: u64 =
            text.trim().parse().map_err(|_| format!("bad parameter value {text:?}"))?;
        Ok(Sweep { lo: v, hi: v })
    }
}

//! Multicharges: non-decreasing integer tuples with spread less than `e`.

use crate::context::{CrystalContext, Residue};
use crate::error::Error;
use std::fmt;

/// A multicharge `v = (v_0, …, v_{l−1})` with `v_0 ≤ … ≤ v_{l−1}` and
/// `v_{l−1} − v_0 < e`. The level is `l ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multicharge {
    values: Vec<i64>,
}

impl Multicharge {
    pub fn new(ctx: &CrystalContext, values: Vec<i64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::InvalidMulticharge("level must be at least 1".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMulticharge(format!(
                "entries must be non-decreasing, got {values:?}"
            )));
        }
        let spread = values[values.len() - 1] - values[0];
        if spread >= ctx.e() as i64 {
            return Err(Error::InvalidMulticharge(format!(
                "spread {spread} must be < e = {}",
                ctx.e()
            )));
        }
        Ok(Multicharge { values })
    }

    pub fn level(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, component: usize) -> i64 {
        self.values[component]
    }

    /// `κ_i(v)`: how many coordinates are congruent to `i` mod `e`.
    pub fn kappa(&self, ctx: &CrystalContext, i: Residue) -> usize {
        self.values.iter().filter(|&&v| ctx.residue(v) == i).count()
    }

    /// The full vector `(κ_0, …, κ_{e−1})`.
    pub fn kappa_vector(&self, ctx: &CrystalContext) -> Vec<usize> {
        let mut counts = vec![0usize; ctx.e() as usize];
        for &v in &self.values {
            counts[ctx.residue(v).value() as usize] += 1;
        }
        counts
    }

    /// The multicharge `(0,…,0,1,…,1,…,e−1,…,e−1)` with `counts[i]` copies
    /// of `i`. Errors when all counts are zero (level 0).
    pub fn canonical(ctx: &CrystalContext, counts: &[usize]) -> Result<Self, Error> {
        assert_eq!(
            counts.len(),
            ctx.e() as usize,
            "counts vector must have one entry per residue"
        );
        let mut values = Vec::new();
        for (i, &c) in counts.iter().enumerate() {
            values.extend(std::iter::repeat_n(i as i64, c));
        }
        if values.is_empty() {
            return Err(Error::InvalidMulticharge(
                "all residue counts are zero (level 0 unsupported)".into(),
            ));
        }
        Multicharge::new(ctx, values)
    }

    /// All canonical multicharges (entries in `{0,…,e−1}`, non-decreasing)
    /// of the given level, in lexicographic order.
    pub fn all_canonical(ctx: &CrystalContext, level: usize) -> Vec<Multicharge> {
        assert!(level >= 1);
        let e = ctx.e() as i64;
        let mut out = Vec::new();
        let mut stack = vec![(Vec::<i64>::new(), 0i64)];
        while let Some((prefix, min)) = stack.pop() {
            if prefix.len() == level {
                out.push(Multicharge { values: prefix });
                continue;
            }
            for v in (min..e).rev() {
                let mut next = prefix.clone();
                next.push(v);
                stack.push((next, v));
            }
        }
        out
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

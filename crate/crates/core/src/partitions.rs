//! Partitions, bipartitions and one-row (Pieri) induction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// Integer sequence whose order matters (intermediate of the label maps).
pub type Composition = Vec<i64>;

/// A partition, stored weakly decreasing without zero parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Parts that may be negative are rejected by returning `None`.
    pub fn from_signed(parts: &[i64]) -> Option<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for &p in parts {
            out.push(usize::try_from(p).ok()?);
        }
        Some(Partition::new(out))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first).map(|j| self.0.iter().take_while(|&&p| p > j).count()).collect();
        Partition(parts)
    }

    /// `Σ (i-1) λ_i` with 1-based `i`.
    pub fn n_value(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Parts in increasing order.
    pub fn ascending(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// Multiplicity of the part `p`.
    pub fn multiplicity(&self, p: usize) -> usize {
        self.0.iter().filter(|&&x| x == p).count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.0.iter().enumerate().all(|(i, &p)| self.part(i) >= p)
    }

    /// Compact form used in tables: parts ascending, concatenated when all
    /// parts are single digits, "-" for the empty partition.
    pub fn compact(&self) -> String {
        if self.0.is_empty() {
            return "-".into();
        }
        let asc = self.ascending();
        if asc.iter().all(|&p| p < 10) {
            asc.iter().map(|p| p.to_string()).collect()
        } else {
            asc.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `3+2+1`, `[3,2,1]`, `(3,2,1)`, and `[]`, `()`, `-` or the empty
/// string for the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() || inner == "-" {
            return Ok(Partition::empty());
        }
        let sep = if inner.contains('+') { '+' } else { ',' };
        let parts = inner
            .split(sep)
            .map(|x| x.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Partition::new(parts))
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Partition::new(v)
    }
}

/// Pair (ξ, η) of partitions indexing an irreducible character of `W(B_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct BiPartition {
    pub xi: Partition,
    pub eta: Partition,
}

impl BiPartition {
    pub fn new(xi: Partition, eta: Partition) -> Self {
        BiPartition { xi, eta }
    }

    /// Shorthand taking parts in any order.
    pub fn from_parts(xi: &[usize], eta: &[usize]) -> Self {
        BiPartition::new(Partition::new(xi.to_vec()), Partition::new(eta.to_vec()))
    }

    pub fn weight(&self) -> usize {
        self.xi.weight() + self.eta.weight()
    }

    pub fn swap(&self) -> BiPartition {
        BiPartition::new(self.eta.clone(), self.xi.clone())
    }

    /// Label of `χ ⊗ ε`.
    pub fn tensor_sign(&self) -> BiPartition {
        BiPartition::new(self.eta.conjugate(), self.xi.conjugate())
    }

    /// Table notation such as `(12,-)`.
    pub fn compact(&self) -> String {
        format!("({},{})", self.xi.compact(), self.eta.compact())
    }
}

impl fmt::Debug for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.xi, self.eta)
    }
}

/// Accepts `([3,1],[2])`.
impl FromStr for BiPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(s.to_string());
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(err)?;
        let close = inner.find(']').ok_or_else(err)?;
        let (a, rest) = inner.split_at(close + 1);
        let b = rest.trim_start().strip_prefix(',').ok_or_else(err)?;
        Ok(BiPartition::new(a.parse()?, b.parse()?))
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n`, ordered by `|ξ|` descending then by the
/// partition orders of each side.
pub fn bipartitions(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for xi in partitions_of(k) {
            for eta in partitions_of(n - k) {
                out.push(BiPartition::new(xi.clone(), eta));
            }
        }
    }
    out
}

/// Whether `λ` dominates `μ`.
pub fn dominance_leq(mu: &Partition, lam: &Partition) -> Result<bool, PartitionError> {
    if mu.weight() != lam.weight() {
        return Err(PartitionError::WeightMismatch(mu.weight(), lam.weight()));
    }
    let (mut a, mut b) = (0, 0);
    for i in 0..mu.len().max(lam.len()) {
        a += lam.part(i);
        b += mu.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All ways of adding `t` boxes to `λ`, no two in one column.
pub fn add_horizontal_strips(lam: &Partition, t: usize) -> Vec<Partition> {
    fn rec(lam: &[usize], i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lam.len() {
            // whatever is left opens a new row, bounded by the last row
            if i == 0 || rem <= lam[i - 1] {
                cur.push(rem);
                out.push(Partition::new(cur.clone()));
                cur.pop();
            }
            return;
        }
        let cap = if i == 0 { rem } else { (lam[i - 1] - lam[i]).min(rem) };
        for add in (0..=cap).rev() {
            cur.push(lam[i] + add);
            rec(lam, i + 1, rem - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam.parts(), 0, t, &mut Vec::new(), &mut out);
    out
}

/// Constituents of `Ind((ξ,η) ⊗ triv_t)` from `W(B_l) × S_t`, each once.
pub fn induce_one_row(a: &BiPartition, t: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for t1 in 0..=t {
        let xs = add_horizontal_strips(&a.xi, t1);
        let es = add_horizontal_strips(&a.eta, t - t1);
        for x in &xs {
            for e in &es {
                out.push(BiPartition::new(x.clone(), e.clone()));
            }
        }
    }
    out
}

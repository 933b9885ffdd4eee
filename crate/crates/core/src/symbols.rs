//! m-symbols of bipartitions, similarity, the a-function and ordered bases.
//!
//! Integer `m` uses `(r,s) = (2,0)` with row lengths differing by `m`;
//! half-integer `m` uses `(2,1)` with lengths differing by `|m| + 1/2`.
//! For `m < 0` comparisons go through the component swap at `|m|`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{bipartitions, BiPartition, Partition};
use crate::residual::MParam;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("variant {0:?} does not apply at m = {1}")]
    VariantMismatch(Variant, MParam),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    Plain,
    Plus0,
    Minus0,
    PlusEps,
    MinusEps,
}

impl Variant {
    /// Infinitesimal shift of the bottom row, in units of ε.
    fn bottom_flag(self) -> i64 {
        match self {
            Variant::PlusEps => -1,
            Variant::MinusEps => 1,
            _ => 0,
        }
    }

    fn flipped(self) -> Variant {
        match self {
            Variant::PlusEps => Variant::MinusEps,
            Variant::MinusEps => Variant::PlusEps,
            Variant::Plus0 => Variant::Minus0,
            Variant::Minus0 => Variant::Plus0,
            Variant::Plain => Variant::Plain,
        }
    }
}

/// Length difference of the rows and bottom offset `s` for `m >= 0`.
pub fn shape_of(m: MParam) -> (usize, i64) {
    let a = m.twice.unsigned_abs() as usize;
    if a.is_multiple_of(2) {
        (a / 2, 0)
    } else {
        (a.div_ceil(2), 1)
    }
}

/// Row entries of `(ξ,η)` at `|m|` with bottom length `l2`.
pub fn symbol_rows(a: &BiPartition, m: MParam, l2: usize) -> (Vec<i64>, Vec<i64>) {
    let (d, s) = shape_of(m);
    let l1 = l2 + d;
    assert!(l1 >= a.xi.len() && l2 >= a.eta.len(), "symbol rows too short");
    let row = |p: &Partition, len: usize, off: i64| -> Vec<i64> {
        let asc = p.ascending();
        let pad = len - asc.len();
        (0..len)
            .map(|i| {
                let part = if i < pad { 0 } else { asc[i - pad] as i64 };
                part + 2 * i as i64 + off
            })
            .collect()
    };
    (row(&a.xi, l1, 0), row(&a.eta, l2, s))
}

fn canon(a: &BiPartition, m: MParam) -> (BiPartition, MParam, bool) {
    if m.is_negative() {
        (a.swap(), m.neg(), true)
    } else {
        (a.clone(), m, false)
    }
}

/// Sorted (value, ε-coefficient) pairs of the symbol at bottom length `l2`.
pub fn deformed_entries(a: &BiPartition, m: MParam, variant: Variant, l2: usize) -> Vec<(i64, i64)> {
    let (c, mm, flipped) = canon(a, m);
    let v = if flipped { variant.flipped() } else { variant };
    let (top, bottom) = symbol_rows(&c, mm, l2);
    let f = v.bottom_flag();
    let mut out: Vec<(i64, i64)> = top.into_iter().map(|x| (x, 0)).chain(bottom.into_iter().map(|y| (y, f))).collect();
    out.sort_unstable();
    out
}

/// Sorted entry multiset at the canonical lengths `l2 = n`.
pub fn class_key(a: &BiPartition, m: MParam) -> Vec<i64> {
    let (c, mm, _) = canon(a, m);
    let (top, bottom) = symbol_rows(&c, mm, c.weight());
    let mut v: Vec<i64> = top.into_iter().chain(bottom).collect();
    v.sort_unstable();
    v
}

pub fn similar(a: &BiPartition, b: &BiPartition, m: MParam) -> bool {
    a.weight() == b.weight() && class_key(a, m) == class_key(b, m)
}

fn pair_min_sum(sorted: &[(i64, i64)]) -> (i64, i64) {
    let n = sorted.len() as i64;
    sorted.iter().enumerate().fold((0, 0), |(x, y), (i, &(v, f))| {
        let c = n - 1 - i as i64;
        (x + c * v, y + c * f)
    })
}

fn a_pair_at(a: &BiPartition, m: MParam, variant: Variant, l2: usize) -> (i64, i64) {
    let with = pair_min_sum(&deformed_entries(a, m, variant, l2));
    let empty = pair_min_sum(&deformed_entries(&BiPartition::default(), m, variant, l2));
    (with.0 - empty.0, with.1 - empty.1)
}

/// `a_m`, computed at bottom length `l2` (any `l2 >= n` gives the same value).
pub fn a_value_at(a: &BiPartition, m: MParam, l2: usize) -> i64 {
    a_pair_at(a, m, Variant::Plain, l2).0
}

pub fn a_m(a: &BiPartition, m: MParam) -> i64 {
    a_value_at(a, m, a.weight())
}

/// `a_{m±ε}` as (value, ε-coefficient), compared lexicographically.
pub fn a_eps(a: &BiPartition, m: MParam, variant: Variant) -> (i64, i64) {
    a_pair_at(a, m, variant, a.weight())
}

/// Bipartitions with the given entry multiset at `m >= 0`, row lengths
/// `(l2 + d, l2)`.
pub fn bipartitions_with_entries(entries: &[i64], m: MParam, l2: usize) -> Vec<BiPartition> {
    debug_assert!(!m.is_negative());
    let (d, s) = shape_of(m);
    let l1 = l2 + d;
    if entries.len() != l1 + l2 {
        return Vec::new();
    }
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    let mut out = BTreeSet::new();
    let mut top = Vec::with_capacity(l1);
    let mut bottom = Vec::with_capacity(l2);
    assign(&sorted, 0, s, l1, l2, &mut top, &mut bottom, &mut out);
    out.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn assign(
    e: &[i64],
    i: usize,
    s: i64,
    l1: usize,
    l2: usize,
    top: &mut Vec<i64>,
    bottom: &mut Vec<i64>,
    out: &mut BTreeSet<BiPartition>,
) {
    if i == e.len() {
        let xi: Vec<usize> = top.iter().enumerate().map(|(k, &x)| (x - 2 * k as i64) as usize).collect();
        let eta: Vec<usize> = bottom.iter().enumerate().map(|(k, &y)| (y - 2 * k as i64 - s) as usize).collect();
        out.insert(BiPartition::new(Partition::new(xi), Partition::new(eta)));
        return;
    }
    let x = e[i];
    let fits = |row: &Vec<i64>, lo: i64| row.last().map_or(x >= lo, |&p| x >= p + 2);
    if e.get(i + 1) == Some(&x) {
        // a repeated entry goes once into each row
        if top.len() < l1 && bottom.len() < l2 && fits(top, 0) && fits(bottom, s) {
            top.push(x);
            bottom.push(x);
            assign(e, i + 2, s, l1, l2, top, bottom, out);
            top.pop();
            bottom.pop();
        }
        return;
    }
    if top.len() < l1 && fits(top, 0) {
        top.push(x);
        assign(e, i + 1, s, l1, l2, top, bottom, out);
        top.pop();
    }
    if bottom.len() < l2 && fits(bottom, s) {
        bottom.push(x);
        assign(e, i + 1, s, l1, l2, top, bottom, out);
        bottom.pop();
    }
}

/// The similarity class `[A]_m`, sorted.
pub fn similarity_class(a: &BiPartition, m: MParam) -> Vec<BiPartition> {
    let (c, mm, flipped) = canon(a, m);
    let mut out = bipartitions_with_entries(&class_key(&c, mm), mm, c.weight());
    if flipped {
        out = out.iter().map(BiPartition::swap).collect();
        out.sort();
    }
    out
}

/// All similarity classes of bipartitions of `n`, keyed by entry multiset.
pub fn similarity_classes(n: usize, m: MParam) -> Vec<Vec<BiPartition>> {
    let mut by_key: BTreeMap<Vec<i64>, Vec<BiPartition>> = BTreeMap::new();
    for a in bipartitions(n) {
        by_key.entry(class_key(&a, m)).or_default().push(a);
    }
    by_key
        .into_values()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect()
}

/// Two-row symbol of a bipartition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MSymbol {
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
    pub m: MParam,
    pub variant: Variant,
}

impl MSymbol {
    /// Entries with ε-coefficients, top row first.
    pub fn deformed(&self) -> Vec<(i64, i64)> {
        let f = self.variant.bottom_flag();
        self.top.iter().map(|&x| (x, 0)).chain(self.bottom.iter().map(|&y| (y, f))).collect()
    }

    pub fn entries(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.top.iter().chain(&self.bottom).copied().collect();
        v.sort_unstable();
        v
    }
}

/// Symbol at the shortest admissible lengths.
pub fn msymbol(a: &BiPartition, m: MParam, variant: Variant) -> Result<MSymbol, SymbolError> {
    let zero_variant = matches!(variant, Variant::Plus0 | Variant::Minus0);
    if zero_variant != (m.twice == 0) && variant != Variant::PlusEps && variant != Variant::MinusEps {
        return Err(SymbolError::VariantMismatch(variant, m));
    }
    let (d, s) = shape_of(m);
    let d = d as i64 * m.twice.signum();
    // lengths l1 - l2 = d with l1 >= len(ξ), l2 >= len(η)
    let l2 = (a.eta.len() as i64).max(a.xi.len() as i64 - d).max(-d).max(0) as usize;
    let l1 = (l2 as i64 + d) as usize;
    let row = |p: &Partition, len: usize, off: i64| -> Vec<i64> {
        let asc = p.ascending();
        let pad = len - asc.len();
        (0..len).map(|i| if i < pad { 0 } else { asc[i - pad] as i64 } + 2 * i as i64 + off).collect()
    };
    Ok(MSymbol { top: row(&a.xi, l1, 0), bottom: row(&a.eta, l2, s), m, variant })
}

impl fmt::Display for MSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.top.iter().chain(&self.bottom).map(|x| x.to_string().len()).max().unwrap_or(1);
        let top_first = match self.variant {
            Variant::Minus0 => false,
            Variant::Plus0 => true,
            _ => self.top.len() >= self.bottom.len(),
        };
        let render = |row: &[i64], shift: bool| {
            let mut s = String::new();
            if shift {
                s.push_str(&" ".repeat(w + 1));
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>w$}")).collect();
            s.push_str(&cells.join(&" ".repeat(w + 2)));
            s.trim_end().to_string()
        };
        writeln!(f, "{}", render(&self.top, !top_first))?;
        write!(f, "{}", render(&self.bottom, top_first))
    }
}

/// Bipartitions of `n` sorted by `a_m` with similarity classes contiguous.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedBasis {
    pub n: usize,
    pub m: MParam,
    pub items: Vec<BiPartition>,
    pub blocks: Vec<Vec<usize>>,
    pub a_values: Vec<i64>,
}

impl OrderedBasis {
    pub fn index_of(&self, a: &BiPartition) -> Option<usize> {
        self.items.iter().position(|x| x == a)
    }

    /// Block number of each item.
    pub fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.items.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                ids[i] = b;
            }
        }
        ids
    }
}

/// Seed 0 sorts ties between classes by their entry multisets; other seeds
/// shuffle classes sharing an a-value.
pub fn order_basis(n: usize, m: MParam, seed: u64) -> OrderedBasis {
    let mut classes: Vec<(i64, Vec<i64>, Vec<BiPartition>)> = similarity_classes(n, m)
        .into_iter()
        .map(|c| (a_m(&c[0], m), class_key(&c[0], m), c))
        .collect();
    classes.sort();
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut start = 0;
        while start < classes.len() {
            let end = start + classes[start..].iter().take_while(|c| c.0 == classes[start].0).count();
            classes[start..end].shuffle(&mut rng);
            start = end;
        }
    }
    let mut basis = OrderedBasis { n, m, items: Vec::new(), blocks: Vec::new(), a_values: Vec::new() };
    for (a, _, members) in classes {
        let start = basis.items.len();
        basis.blocks.push((start..start + members.len()).collect());
        basis.a_values.extend(std::iter::repeat_n(a, members.len()));
        basis.items.extend(members);
    }
    basis
}

//! m-tableaux, residual points, jumps, extremities and residual subspaces.
//!
//! Half-integers are stored doubled: the value `v` means `v/2`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{partitions_of, BiPartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidualError {
    #[error("not a residual point")]
    NotResidual,
    #[error("not a central character: {0}")]
    NotCentralCharacter(String),
    #[error("m must be a half-integer, got {0:?}")]
    BadParam(String),
}

/// Parameter ratio `m = twice/2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct MParam {
    pub twice: i64,
}

impl MParam {
    pub fn from_twice(twice: i64) -> Self {
        MParam { twice }
    }

    pub fn integer(m: i64) -> Self {
        MParam { twice: 2 * m }
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn abs(self) -> MParam {
        MParam { twice: self.twice.abs() }
    }

    pub fn neg(self) -> MParam {
        MParam { twice: -self.twice }
    }

    /// `⌈|m|⌉`
    pub fn ceil_abs(self) -> usize {
        ((self.twice.abs() + 1) / 2) as usize
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl fmt::Display for MParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_half(self.twice))
    }
}

impl FromStr for MParam {
    type Err = ResidualError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ResidualError::BadParam(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<i64>().map(MParam::integer).map_err(|_| err()),
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| err())?;
                let b: i64 = b.trim().parse().map_err(|_| err())?;
                match b {
                    1 => Ok(MParam::integer(a)),
                    2 => Ok(MParam::from_twice(a)),
                    -1 => Ok(MParam::integer(-a)),
                    -2 => Ok(MParam::from_twice(-a)),
                    _ if b != 0 && (2 * a) % b == 0 => Ok(MParam::from_twice(2 * a / b)),
                    _ => Err(err()),
                }
            }
        }
    }
}

/// Renders a doubled value: `7 -> "7/2"`, `4 -> "2"`.
pub fn fmt_half(twice: i64) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// Young diagram filled with doubled values `|2(c - r) + twice_m|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTableau {
    pub shape: Partition,
    pub m: MParam,
    pub rows: Vec<Vec<i64>>,
}

impl MTableau {
    pub fn entries(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Doubled signed `content + m` of box `(r, c)`.
fn signed_entry(r: usize, c: usize, m: MParam) -> i64 {
    2 * (c as i64 - r as i64) + m.twice
}

pub fn m_tableau(lam: &Partition, m: MParam) -> MTableau {
    let rows = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| (0..len).map(|c| signed_entry(r, c, m).abs()).collect())
        .collect();
    MTableau { shape: lam.clone(), m, rows }
}

pub fn tableau_entries(lam: &Partition, m: MParam) -> Vec<i64> {
    m_tableau(lam, m).entries()
}

pub fn multiplicities(lam: &Partition, m: MParam) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for v in tableau_entries(lam, m) {
        *out.entry(v).or_insert(0) += 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    RowEnd,
    ColumnEnd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Extremity {
    pub row: usize,
    pub col: usize,
    pub role: Role,
    /// doubled
    pub value: i64,
}

/// Last boxes of rows on or above the zero diagonal and last boxes of
/// columns on or below it, with their roles.
pub fn extremity_list(lam: &Partition, m: MParam) -> Vec<Extremity> {
    let mut out = Vec::new();
    for (r, &len) in lam.parts().iter().enumerate() {
        let x = signed_entry(r, len - 1, m);
        if x >= 0 {
            out.push(Extremity { row: r, col: len - 1, role: Role::RowEnd, value: x });
        }
    }
    for (c, &len) in lam.conjugate().parts().iter().enumerate() {
        let x = signed_entry(len - 1, c, m);
        if x <= 0 {
            out.push(Extremity { row: len - 1, col: c, role: Role::ColumnEnd, value: -x });
        }
    }
    out
}

/// Extremity values as a sorted multiset (doubled).
pub fn extremities(lam: &Partition, m: MParam) -> Vec<i64> {
    let mut v: Vec<i64> = extremity_list(lam, m).iter().map(|e| e.value).collect();
    v.sort_unstable();
    v
}

pub fn residual_by_extremities(lam: &Partition, m: MParam) -> bool {
    let v = extremities(lam, m);
    v.windows(2).all(|w| w[0] != w[1])
}

/// Residuality through the multiplicity ladder.
pub fn is_residual(lam: &Partition, m: MParam) -> bool {
    if lam.is_empty() {
        return true;
    }
    let mult = multiplicities(lam, m);
    let mm = |v: i64| mult.get(&v).copied().unwrap_or(0) as i64;
    let a = m.twice.abs();
    let top = *mult.keys().next_back().expect("nonempty");
    if mm(top) != 1 || top < a {
        return false;
    }
    let ladder_ok = |v: i64| {
        let (x, y) = (mm(v), mm(v + 2));
        x == y || x == y + 1
    };
    if a == 0 {
        return (2..top + 1).step_by(2).all(ladder_ok) && mm(0) == (mm(2) + 1) / 2;
    }
    let first = if a % 2 == 0 { 2 } else { 1 };
    let lower_ok = (first..a).step_by(2).all(|v| {
        let (x, y) = (mm(v), mm(v + 2));
        x == y || x + 1 == y
    });
    let upper_ok = (a..=top).step_by(2).all(ladder_ok);
    let zero_ok = a % 2 == 1 || mm(0) == mm(2) / 2;
    lower_ok && upper_ok && zero_ok
}

/// Strictly increasing doubled jumps, padded to length `⌈|m|⌉ + 2r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JumpSet {
    pub m: MParam,
    pub jumps: Vec<i64>,
}

impl fmt::Display for JumpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.jumps.iter().map(|&j| fmt_half(j)).collect();
        write!(f, "({})", v.join(","))
    }
}

impl JumpSet {
    /// Validates the invariants of a jump set.
    pub fn new(jumps: Vec<i64>, m: MParam) -> Option<JumpSet> {
        let a = m.twice.abs();
        let parity_ok = jumps.iter().all(|j| (j - a).rem_euclid(2) == 0);
        let min = if a % 2 == 0 { 0 } else { -1 };
        let ok = parity_ok
            && jumps.windows(2).all(|w| w[0] < w[1])
            && jumps.first().is_none_or(|&j| j >= min)
            && jumps.len() >= m.ceil_abs()
            && (jumps.len() - m.ceil_abs()).is_multiple_of(2);
        ok.then_some(JumpSet { m, jumps })
    }

    /// Jumps without the padding entry.
    pub fn unpadded(&self) -> Vec<i64> {
        unpadded(&self.jumps, self.m)
    }
}

fn unpadded(jumps: &[i64], m: MParam) -> Vec<i64> {
    jumps.iter().copied().filter(|&j| j > 0 || (j == 0 && !padded_zero(jumps, m))).collect()
}

fn padded_zero(jumps: &[i64], m: MParam) -> bool {
    // a genuine jump 0 cannot occur, so a leading 0 is always padding
    m.twice % 2 == 0 && jumps.first() == Some(&0)
}

/// Jumps of the residual point `c(λ, k, mk)`.
pub fn jumps(lam: &Partition, m: MParam) -> Result<JumpSet, ResidualError> {
    if !is_residual(lam, m) {
        return Err(ResidualError::NotResidual);
    }
    let mult = multiplicities(lam, m);
    let mm = |v: i64| mult.get(&v).copied().unwrap_or(0);
    let a = m.twice.abs();
    let top = mult.keys().next_back().copied().unwrap_or(0);
    let mut j = Vec::new();
    if a == 0 {
        j.extend((0..=top).step_by(2).filter(|&v| mm(v) == mm(v + 2) + 1));
    } else {
        let first = if a % 2 == 0 { 2 } else { 1 };
        j.extend((first..a).step_by(2).filter(|&v| mm(v) == mm(v + 2)));
        j.extend((a..=top).step_by(2).filter(|&v| mm(v) == mm(v + 2) + 1));
    }
    if (j.len() + m.ceil_abs()) % 2 == 1 {
        j.insert(0, if a % 2 == 0 { 0 } else { -1 });
    }
    JumpSet::new(j, m).ok_or(ResidualError::NotResidual)
}

/// Removes the hook with corner `(r, c)`, shifting the south-east part
/// one step north-west.
pub fn remove_hook(lam: &Partition, r: usize, c: usize) -> Partition {
    let mut rows = vec![0usize; lam.len()];
    for (i, &len) in lam.parts().iter().enumerate() {
        for j in 0..len {
            let in_hook = (i == r && j >= c) || (i > r && j == c);
            if in_hook {
                continue;
            }
            if i > r && j > c {
                rows[i - 1] += 1;
            } else {
                rows[i] += 1;
            }
        }
    }
    Partition::new(rows)
}

/// Hook length at `(r, c)`.
pub fn hook_length(lam: &Partition, r: usize, c: usize) -> usize {
    let conj = lam.conjugate();
    (lam.part(r) - c - 1) + (conj.part(c) - r - 1) + 1
}

/// Strips hooks ending on equal extremities until none are left.
/// Returns the hook lengths and the residual remainder.
pub fn sp_m(lam: &Partition, m: MParam) -> (Partition, Partition) {
    let mut cur = lam.clone();
    let mut hooks = Vec::new();
    loop {
        let ext = extremity_list(&cur, m);
        let best = ext
            .iter()
            .filter(|e| e.role == Role::RowEnd)
            .filter_map(|re| {
                ext.iter()
                    .find(|ce| ce.role == Role::ColumnEnd && ce.value == re.value)
                    .map(|ce| (re.value, re.row, ce.col))
            })
            .max();
        let Some((v, r, c)) = best else { break };
        debug_assert_eq!(hook_length(&cur, r, c) as i64, v + 1);
        hooks.push((v + 1) as usize);
        cur = remove_hook(&cur, r, c);
    }
    let mu = Partition::new(hooks);
    debug_assert!(mu.parts().windows(2).all(|w| w[0] != w[1]));
    (mu, cur)
}

/// Type of a residual subspace: factors `A_{d-1}` for the parts `d` of
/// `a_parts` and a residual point for `b_part`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubspaceType {
    pub a_parts: Partition,
    pub b_part: Partition,
}

impl SubspaceType {
    pub fn new(a_parts: Partition, b_part: Partition) -> Self {
        SubspaceType { a_parts, b_part }
    }

    pub fn rank(&self) -> usize {
        self.a_parts.weight() + self.b_part.weight()
    }

    /// Display such as `A1xB2,(11)`; `A0` factors are dropped.
    pub fn describe(&self) -> String {
        let mut f: Vec<String> = self
            .a_parts
            .ascending()
            .into_iter()
            .filter(|&d| d >= 2)
            .map(|d| format!("A{}", d - 1))
            .collect();
        if !self.b_part.is_empty() {
            f.push(format!("B{},({})", self.b_part.weight(), self.b_part.compact()));
        }
        if f.is_empty() {
            "0".into()
        } else {
            f.join("x")
        }
    }
}

/// Sorted doubled absolute coordinates of a point, one `W(B_n)` orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CentralCharacter(pub Vec<i64>);

impl CentralCharacter {
    pub fn new(mut coords: Vec<i64>) -> Self {
        for c in coords.iter_mut() {
            *c = c.abs();
        }
        coords.sort_unstable();
        CentralCharacter(coords)
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().rev().map(|&c| fmt_half(c)).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Doubled coordinates `|d-1-2k|`, `k < d`, of the `A_{d-1}` center.
fn a_center(d: usize) -> impl Iterator<Item = i64> {
    (0..d).map(move |k| (d as i64 - 1 - 2 * k as i64).abs())
}

pub fn center_coordinates(t: &SubspaceType, m: MParam) -> CentralCharacter {
    let mut v = tableau_entries(&t.b_part, m);
    for &d in t.a_parts.parts() {
        v.extend(a_center(d));
    }
    CentralCharacter::new(v)
}

/// Residual subspace types of rank `n`, one per `W_0`-orbit.
pub fn enumerate_subspaces(n: usize, m: MParam) -> Vec<SubspaceType> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in 0..=n {
        let residual: Vec<Partition> =
            partitions_of(n - k).into_iter().filter(|nu| is_residual(nu, m)).collect();
        for alpha in partitions_of(k) {
            for nu in &residual {
                let key = (alpha.clone(), CentralCharacter::new(tableau_entries(nu, m)));
                if seen.insert(key) {
                    out.push(SubspaceType::new(alpha.clone(), nu.clone()));
                }
            }
        }
    }
    out
}

/// Partitions of each weight grouped by their tableau entry multiset.
#[derive(Default)]
pub struct EntryIndex {
    m: Option<MParam>,
    by_weight: HashMap<usize, HashMap<Vec<i64>, Vec<Partition>>>,
}

impl EntryIndex {
    pub fn new(m: MParam) -> Self {
        EntryIndex { m: Some(m), by_weight: HashMap::new() }
    }

    /// Partitions whose tableau has exactly the sorted entries `entries`.
    pub fn lookup(&mut self, entries: &[i64]) -> &[Partition] {
        let m = self.m.expect("index built with a parameter");
        let w = entries.len();
        let table = self.by_weight.entry(w).or_insert_with(|| {
            let mut t: HashMap<Vec<i64>, Vec<Partition>> = HashMap::new();
            for lam in partitions_of(w) {
                t.entry(tableau_entries(&lam, m)).or_default().push(lam);
            }
            t
        });
        table.get(entries).map_or(&[], |v| v.as_slice())
    }
}

/// Removes the sorted multiset `sub` from the sorted multiset `from`.
fn multiset_minus(from: &[i64], sub: &[i64]) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(from.len());
    let mut j = 0;
    for &x in from {
        if j < sub.len() && sub[j] == x {
            j += 1;
        } else {
            if j < sub.len() && sub[j] < x {
                return None;
            }
            out.push(x);
        }
    }
    (j == sub.len()).then_some(out)
}

/// All generic types `(α, μ)` whose center specializes to `cc` at `m`.
pub fn confluence_class(cc: &CentralCharacter, n: usize, m: MParam) -> Result<Vec<BiPartition>, ResidualError> {
    let bad = || ResidualError::NotCentralCharacter(cc.to_string());
    if cc.0.len() != n {
        return Err(bad());
    }
    let mut index = EntryIndex::new(m);
    let mut out = Vec::new();
    let mut stack = vec![(cc.0.clone(), Vec::<usize>::new())];
    while let Some((rest, alpha)) = stack.pop() {
        for mu in index.lookup(&rest) {
            out.push(BiPartition::new(Partition::new(alpha.clone()), mu.clone()));
        }
        let max = alpha.last().copied().unwrap_or(rest.len());
        for d in 1..=max.min(rest.len()) {
            let mut c: Vec<i64> = a_center(d).collect();
            c.sort_unstable();
            if let Some(r) = multiset_minus(&rest, &c) {
                let mut a = alpha.clone();
                a.push(d);
                stack.push((r, a));
            }
        }
    }
    out.sort();
    out.dedup();
    if !out.iter().any(|t| is_residual(&t.eta, m)) {
        return Err(bad());
    }
    Ok(out)
}

/// Whether `m ∈ ±{0, 1/2, 1, …, n-1}`.
pub fn is_special_ratio(m: MParam, n: usize) -> bool {
    n >= 1 && m.twice.abs() <= 2 * (n as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn m(t: i64) -> MParam {
        MParam::from_twice(t)
    }

    /// (2^8 3^2) at m = 2
    fn p22() -> Partition {
        p(&[3, 3, 2, 2, 2, 2, 2, 2, 2, 2])
    }

    #[test]
    fn param_parsing() {
        assert_eq!("7/2".parse::<MParam>().unwrap(), m(7));
        assert_eq!("-1/2".parse::<MParam>().unwrap(), m(-1));
        assert_eq!("2".parse::<MParam>().unwrap(), m(4));
        assert_eq!("4/2".parse::<MParam>().unwrap(), m(4));
        assert!("1/3".parse::<MParam>().is_err());
        assert!("x".parse::<MParam>().is_err());
        assert_eq!(m(-7).to_string(), "-7/2");
    }

    #[test]
    fn tableau_examples() {
        assert_eq!(m_tableau(&p(&[3]), m(4)).rows, vec![vec![4, 6, 8]]);
        assert_eq!(m_tableau(&p(&[1]), m(0)).rows, vec![vec![0]]);
        assert_eq!(m_tableau(&p(&[1, 1]), m(4)).rows, vec![vec![4], vec![2]]);
    }

    #[test]
    fn multiplicity_examples() {
        let want: BTreeMap<i64, usize> = [(4, 1), (6, 1), (8, 1)].into_iter().collect();
        assert_eq!(multiplicities(&p(&[3]), m(4)), want);
        assert!(multiplicities(&p(&[]), m(3)).is_empty());
        let coords = [7, 6, 6, 5, 5, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0];
        let mut want: BTreeMap<i64, usize> = BTreeMap::new();
        for c in coords {
            *want.entry(2 * c).or_insert(0) += 1;
        }
        assert_eq!(multiplicities(&p22(), m(4)), want);
    }

    #[test]
    fn extremity_examples() {
        assert_eq!(extremities(&p(&[3]), m(4)), vec![8]);
        assert_eq!(extremities(&p(&[1]), m(0)), vec![0, 0]);
        assert_eq!(extremities(&p22(), m(4)), vec![0, 2, 6, 8, 12, 14]);
        let ext = extremity_list(&p22(), m(4));
        assert_eq!(ext.iter().filter(|e| e.role == Role::RowEnd).count(), 4);
        assert_eq!(ext.iter().filter(|e| e.role == Role::ColumnEnd).count(), 2);
    }

    #[test]
    fn residual_examples() {
        assert!(is_residual(&p(&[1]), m(2)));
        assert!(!is_residual(&p(&[1]), m(0)));
        assert!(is_residual(&p22(), m(4)));
    }

    #[test]
    fn jump_examples() {
        assert_eq!(jumps(&p22(), m(4)).unwrap().jumps, vec![0, 2, 6, 8, 12, 14]);
        assert_eq!(jumps(&p(&[3]), m(4)).unwrap().jumps, vec![0, 8]);
        assert_eq!(jumps(&p(&[1]), m(2)).unwrap().jumps, vec![2]);
        assert_eq!(jumps(&p(&[2]), m(0)).unwrap().jumps, vec![0, 2]);
        assert_eq!(jumps(&p(&[1]), m(0)).unwrap_err(), ResidualError::NotResidual);
    }

    #[test]
    fn residual_criteria_agree() {
        for n in 0..=10usize {
            for lam in partitions_of(n) {
                for t in -2 * n as i64..=2 * n as i64 {
                    assert_eq!(
                        is_residual(&lam, m(t)),
                        residual_by_extremities(&lam, m(t)),
                        "{lam} at m={}",
                        fmt_half(t)
                    );
                }
            }
        }
    }

    #[test]
    fn ladder_and_jump_properties() {
        for n in 1..=10usize {
            for lam in partitions_of(n) {
                for t in -2 * n as i64..=2 * n as i64 {
                    let mm = m(t);
                    let mult = multiplicities(&lam, mm);
                    let get = |v: i64| mult.get(&v).copied().unwrap_or(0);
                    let top = *mult.keys().next_back().unwrap();
                    for v in (t.abs().max(if t == 0 { 2 } else { 0 })..=top).step_by(2) {
                        let d = get(v) as i64 - get(v + 2) as i64;
                        assert!((0..=2).contains(&d), "{lam} m={t} v={v}");
                    }
                    if !is_residual(&lam, mm) {
                        continue;
                    }
                    let j = jumps(&lam, mm).unwrap();
                    // every extremity is a jump
                    let ext = extremities(&lam, mm);
                    assert!(ext.iter().all(|x| j.jumps.contains(x)), "{lam} m={t}");
                    // counting of unpadded jumps
                    let a = t.abs();
                    let expect = if a == 0 {
                        get(2)
                    } else if a % 2 == 0 {
                        get(2) + (a / 2) as usize - 1
                    } else {
                        get(1) + (a as usize - 1) / 2
                    };
                    assert_eq!(j.unpadded().len(), expect, "{lam} m={t}");
                    // weight of the label
                    let s: i64 = j.jumps.iter().map(|&x| x + 1).sum();
                    let want = 2 * n as i64 + if a % 2 == 0 { a * a / 4 } else { (a * a - 1) / 4 };
                    assert_eq!(s, want, "{lam} m={t}");
                }
            }
        }
    }

    #[test]
    fn hook_stripping() {
        for n in 0..=10usize {
            for lam in partitions_of(n) {
                for t in -2 * n as i64..=2 * n as i64 {
                    let (mu, nu) = sp_m(&lam, m(t));
                    assert!(is_residual(&nu, m(t)));
                    assert!(mu.parts().windows(2).all(|w| w[0] > w[1]));
                    let odd = mu.parts().iter().all(|&d| d % 2 == 1);
                    let even = mu.parts().iter().all(|&d| d % 2 == 0);
                    assert!(if t % 2 == 0 { odd } else { even });
                    let st = SubspaceType::new(mu.clone(), nu.clone());
                    assert_eq!(center_coordinates(&st, m(t)).0, tableau_entries(&lam, m(t)));
                }
            }
        }
        assert_eq!(sp_m(&p22(), m(4)), (p(&[]), p22()));
        assert_eq!(sp_m(&p(&[1, 1]), m(0)), (p(&[]), p(&[1, 1])));
        assert_eq!(sp_m(&p(&[1]), m(0)), (p(&[1]), p(&[])));
    }

    #[test]
    fn strips_three_and_nine() {
        let nu = p(&[6, 6, 1, 1, 1, 1]);
        let found = partitions_of(28).into_iter().any(|lam| sp_m(&lam, m(4)) == (p(&[9, 3]), nu.clone()));
        assert!(found);
    }

    #[test]
    fn center_examples() {
        let t = SubspaceType::new(p(&[]), p(&[3]));
        assert_eq!(center_coordinates(&t, m(4)).0, vec![4, 6, 8]);
        let t = SubspaceType::new(p(&[2]), p(&[]));
        assert_eq!(center_coordinates(&t, m(5)).0, vec![1, 1]);
    }

    #[test]
    fn subspace_counts() {
        let l = enumerate_subspaces(1, m(2));
        assert_eq!(l.len(), 2);
        // nine orbits: the two columns (11,1) and (111,-) share one
        let names: Vec<String> = enumerate_subspaces(3, m(4)).iter().map(SubspaceType::describe).collect();
        assert_eq!(names, ["B3,(3)", "B3,(12)", "B2,(2)", "B2,(11)", "A1xB1,(1)", "B1,(1)", "A2", "A1", "0"]);
        assert_eq!(enumerate_subspaces(3, m(200)).len(), 10);
        assert_eq!(enumerate_subspaces(0, m(4)).len(), 1);
        for n in 0..=6 {
            let total = crate::partitions::bipartitions(n).len();
            assert_eq!(enumerate_subspaces(n, m(2 * n as i64 + 3)).len(), total);
        }
    }

    #[test]
    fn subspace_centers_are_distinct() {
        for n in 1..=8usize {
            for t in -2 * (n as i64 - 1)..=2 * (n as i64 - 1) {
                let l = enumerate_subspaces(n, m(t));
                let cc: HashSet<_> = l.iter().map(|s| center_coordinates(s, m(t))).collect();
                assert_eq!(cc.len(), l.len(), "n={n} m={t}");
            }
        }
    }

    #[test]
    fn confluence_examples() {
        let cc = CentralCharacter::new(tableau_entries(&p22(), m(4)));
        let c = confluence_class(&cc, 22, m(4)).unwrap();
        assert_eq!(c.len(), 15);
        assert!(c.iter().all(|t| t.xi.is_empty()));

        let cc = CentralCharacter::new(tableau_entries(&p(&[2, 1]), m(9)));
        assert_eq!(confluence_class(&cc, 3, m(9)).unwrap().len(), 1);

        let t = SubspaceType::new(p(&[3, 7, 9]), p(&[6, 6, 1, 1, 1, 1]));
        let cc = center_coordinates(&t, m(4));
        assert_eq!(confluence_class(&cc, 35, m(4)).unwrap().len(), 16);

        let bogus = CentralCharacter::new(vec![40, 40, 40]);
        assert!(confluence_class(&bogus, 3, m(4)).is_err());
    }

    #[test]
    fn special_ratios() {
        assert!(is_special_ratio(m(0), 1));
        assert!(is_special_ratio(m(2 * 4), 5));
        assert!(!is_special_ratio(m(9), 5));
        assert!(!is_special_ratio(m(4), 2));
        assert!(is_special_ratio(m(-3), 3));
    }
}

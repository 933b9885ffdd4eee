//! The generalized Springer correspondence: splitting and joining of
//! m-tableaux, flips, Springer correspondents of residual points and
//! subspaces, unipotent labels and the maps `f_bc`, `phi`, `psi`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{induce_one_row, partitions_of, BiPartition, Partition};
use crate::residual::{
    center_coordinates, extremity_list, is_residual, jumps, tableau_entries, CentralCharacter, JumpSet, MParam,
    ResidualError, Role, SubspaceType,
};
use crate::symbols::{a_eps, a_m, bipartitions_with_entries, shape_of, similarity_class, symbol_rows, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpringerError {
    #[error("splitting undefined")]
    SplitUndefined,
    #[error("join undefined")]
    JoinUndefined,
    #[error("malformed jump set {0:?}")]
    BadJumps(Vec<i64>),
    #[error("not a unipotent label: {0}")]
    NotUnipotent(String),
    #[error("symbol entries {0:?} match no bipartition")]
    NoClass(Vec<i64>),
    #[error(transparent)]
    Residual(#[from] ResidualError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub orientation: Orientation,
    pub length: usize,
    /// Doubled entry of the last square.
    pub end_entry: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSplitting {
    pub blocks: Vec<Block>,
    pub result: BiPartition,
}

fn half_to_int(doubled: i64) -> Option<usize> {
    (doubled >= 0 && doubled % 2 == 0).then_some((doubled / 2) as usize)
}

/// `(ξ(c), η(c))` read off from the jumps of `c`.
pub fn xi_eta_of_point(j: &JumpSet, m: MParam) -> Result<BiPartition, SpringerError> {
    let bad = || SpringerError::BadJumps(j.jumps.clone());
    if JumpSet::new(j.jumps.clone(), m).is_none() {
        return Err(bad());
    }
    if m.is_negative() {
        return Ok(xi_eta_of_point(&JumpSet { m: m.neg(), jumps: j.jumps.clone() }, m.neg())?.swap());
    }
    let js = &j.jumps;
    let extra = m.ceil_abs();
    let r = (js.len() - extra) / 2;
    let half = !m.is_integer();
    let lift = if half { 1 } else { 0 };
    let mut xi = Vec::new();
    let mut eta = Vec::new();
    if extra == 0 {
        for k in 0..r {
            xi.push(js[2 * k]);
            eta.push(js[2 * k + 1] + 2);
        }
    } else {
        for k in 0..=r {
            xi.push(js[2 * k] + lift);
        }
        for k in 0..r {
            eta.push(js[2 * k + 1] + if half { 1 } else { 2 });
        }
        for i in 1..extra {
            // j_{2r+1+i} - i, or - (i - 1/2)
            let sub = 2 * i as i64 - lift;
            xi.push(js[2 * r + i] - sub);
        }
    }
    let conv = |v: Vec<i64>| -> Result<Partition, SpringerError> {
        v.into_iter().map(|x| half_to_int(x).ok_or_else(bad)).collect::<Result<Vec<_>, _>>().map(Partition::new)
    };
    Ok(BiPartition::new(conv(xi)?, conv(eta)?))
}

/// Greedy block decomposition; ties are resolved by the ε-variants and
/// are an error otherwise.
pub fn split_with(lam: &Partition, m: MParam, variant: Variant) -> Result<BlockSplitting, SpringerError> {
    let conj = lam.conjugate();
    let (mut h, mut v) = (0usize, 0usize);
    let mut blocks = Vec::new();
    let (mut xi, mut eta) = (Vec::new(), Vec::new());
    while h < lam.len() && lam.part(h) > v {
        let x0 = 2 * (v as i64 - h as i64) + m.twice;
        let lh = (lam.part(h) - v) as i64;
        let lv = (conj.part(v) - h) as i64;
        let a = x0 + 2 * (lh - 1);
        let b = 2 * (lv - 1) - x0;
        let horizontal = match a.cmp(&b) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => match variant {
                Variant::PlusEps => true,
                Variant::MinusEps => false,
                _ => return Err(SpringerError::SplitUndefined),
            },
        };
        if horizontal {
            blocks.push(Block { orientation: Orientation::Horizontal, length: lh as usize, end_entry: a });
            xi.push(lh as usize);
            h += 1;
        } else {
            blocks.push(Block { orientation: Orientation::Vertical, length: lv as usize, end_entry: b });
            eta.push(lv as usize);
            v += 1;
        }
    }
    Ok(BlockSplitting { blocks, result: BiPartition::new(Partition::new(xi), Partition::new(eta)) })
}

/// `S_m(λ)`, defined exactly on residual partitions.
pub fn split(lam: &Partition, m: MParam) -> Result<BlockSplitting, SpringerError> {
    if !is_residual(lam, m) {
        return Err(SpringerError::SplitUndefined);
    }
    split_with(lam, m, Variant::Plain)
}

/// `J_m(ξ, η)` together with the blocks in placement order.
pub fn join_blocks(a: &BiPartition, m: MParam) -> Result<(Partition, Vec<Block>), SpringerError> {
    let (xs, es) = (a.xi.parts(), a.eta.parts());
    let (mut i, mut j) = (0usize, 0usize);
    let (mut h, mut v) = (0usize, 0usize);
    let mut rows: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    let row = |rows: &Vec<usize>, r: usize| rows.get(r).copied().unwrap_or(0);
    while i < xs.len() || j < es.len() {
        let x0 = 2 * (v as i64 - h as i64) + m.twice;
        let ra = xs.get(i).map(|&l| x0 + 2 * (l as i64 - 1));
        let rb = es.get(j).map(|&l| 2 * (l as i64 - 1) - x0);
        let horizontal = match (ra, rb) {
            (Some(p), Some(q)) if p == q => return Err(SpringerError::JoinUndefined),
            (Some(p), Some(q)) => p > q,
            (Some(_), None) => true,
            _ => false,
        };
        if horizontal {
            let l = xs[i];
            if row(&rows, h) != v || (h > 0 && rows[h - 1] < v + l) {
                return Err(SpringerError::JoinUndefined);
            }
            if rows.len() == h {
                rows.push(0);
            }
            rows[h] = v + l;
            blocks.push(Block { orientation: Orientation::Horizontal, length: l, end_entry: ra.unwrap_or(0) });
            i += 1;
            h += 1;
        } else {
            let l = es[j];
            if h > 0 && rows[h - 1] < v + 1 {
                return Err(SpringerError::JoinUndefined);
            }
            for r in h..h + l {
                if row(&rows, r) != v {
                    return Err(SpringerError::JoinUndefined);
                }
                if rows.len() == r {
                    rows.push(0);
                }
                rows[r] = v + 1;
            }
            blocks.push(Block { orientation: Orientation::Vertical, length: l, end_entry: rb.unwrap_or(0) });
            j += 1;
            v += 1;
        }
    }
    Ok((Partition::new(rows), blocks))
}

pub fn join(a: &BiPartition, m: MParam) -> Result<Partition, SpringerError> {
    join_blocks(a, m).map(|(p, _)| p)
}

/// `λ(c) = J_m(ξ(c), η(c))`.
pub fn canonical_partition(j: &JumpSet, m: MParam) -> Result<Partition, SpringerError> {
    join(&xi_eta_of_point(j, m)?, m)
}

/// `F_p(λ)` for the 1-based index `p` into the padded jumps; `p = 1`
/// uses the base value 0 (or -1/2) below the first jump.
pub fn flip(lam: &Partition, p: usize, m: MParam) -> Option<Partition> {
    let js = jumps(lam, m).ok()?.jumps;
    if p == 0 || p > js.len() {
        return None;
    }
    let top = js[p - 1];
    let below = if p >= 2 { js[p - 2] } else if m.is_integer() { 0 } else { -1 };
    let len = ((top - below) / 2) as usize;
    let ext = extremity_list(lam, m);
    let at = ext.iter().find(|e| e.value == top)?;
    let mut rows = lam.parts().to_vec();
    let mut cols = lam.conjugate().parts().to_vec();
    let cut_site = match at.role {
        Role::RowEnd => {
            let keep = rows[at.row].checked_sub(len)?;
            if rows.get(at.row + 1).is_some_and(|&below_len| below_len > keep) {
                return None;
            }
            rows[at.row] = keep;
            (keep > 0).then(|| (at.row, keep - 1, Role::RowEnd))
        }
        Role::ColumnEnd => {
            let keep = cols[at.col].checked_sub(len)?;
            if cols.get(at.col + 1).is_some_and(|&next| next > keep) {
                return None;
            }
            cols[at.col] = keep;
            rows = Partition::new(cols.clone()).conjugate().parts().to_vec();
            (keep > 0).then(|| (keep - 1, at.col, Role::ColumnEnd))
        }
    };
    let cut = Partition::new(rows);
    let targets: Vec<_> = extremity_list(&cut, m)
        .into_iter()
        .filter(|e| e.value == below && Some((e.row, e.col, e.role)) != cut_site)
        .collect();
    let [target] = targets.as_slice() else { return None };
    let out = match target.role {
        Role::RowEnd => {
            let mut rows = cut.parts().to_vec();
            rows[target.row] += len;
            if target.row > 0 && rows[target.row - 1] < rows[target.row] {
                return None;
            }
            Partition::new(rows)
        }
        Role::ColumnEnd => {
            let mut cols = cut.conjugate().parts().to_vec();
            cols[target.col] += len;
            if target.col > 0 && cols[target.col - 1] < cols[target.col] {
                return None;
            }
            Partition::new(cols).conjugate()
        }
    };
    debug_assert_eq!(tableau_entries(&out, m), tableau_entries(lam, m));
    Some(out)
}

/// `Σ_m(W_0 c)`: the similarity class of `(ξ(c), η(c))`.
pub fn sigma_point(j: &JumpSet, m: MParam) -> Result<Vec<BiPartition>, SpringerError> {
    Ok(similarity_class(&xi_eta_of_point(j, m)?, m))
}

fn score(a: &BiPartition, m: MParam, variant: Variant) -> (i64, i64) {
    match variant {
        Variant::PlusEps | Variant::MinusEps => a_eps(a, m, variant),
        _ => (a_m(a, m), 0),
    }
}

/// Constituents of maximal a-value in `Ind(triv_λ ⊗ A)`, with multiplicity,
/// inducing one row of `λ` at a time, largest first.
pub fn trunc_ind(a: &BiPartition, lam: &Partition, m: MParam, variant: Variant) -> BTreeMap<BiPartition, usize> {
    let mut cur: BTreeMap<BiPartition, usize> = BTreeMap::from([(a.clone(), 1)]);
    for &t in lam.parts() {
        let mut next: BTreeMap<BiPartition, usize> = BTreeMap::new();
        for (b, mult) in &cur {
            for c in induce_one_row(b, t) {
                *next.entry(c).or_insert(0) += mult;
            }
        }
        let best = next.keys().map(|b| score(b, m, variant)).max();
        next.retain(|b, _| Some(score(b, m, variant)) == best);
        cur = next;
    }
    cur
}

/// `Σ_m(W_0 c_L)`. The plain variant takes the union over the point
/// class; the ε-variants start from `S_{m±ε}(ν)`.
pub fn sigma_subspace(t: &SubspaceType, m: MParam, variant: Variant) -> Result<Vec<BiPartition>, SpringerError> {
    let start = match variant {
        Variant::PlusEps | Variant::MinusEps => vec![split_with(&t.b_part, m, variant)?.result],
        _ => sigma_point(&jumps(&t.b_part, m)?, m)?,
    };
    let mut out: Vec<BiPartition> =
        start.iter().flat_map(|b| trunc_ind(b, &t.a_parts, m, variant).into_keys()).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `Σ_m(W_0 c_L)` as the similarity class of the `m+ε` correspondent.
pub fn sigma_subspace_closed(t: &SubspaceType, m: MParam) -> Result<Vec<BiPartition>, SpringerError> {
    let one = sigma_subspace(t, m, Variant::PlusEps)?;
    match one.as_slice() {
        [b] => Ok(similarity_class(b, m)),
        _ => Err(SpringerError::SplitUndefined),
    }
}

/// Whether an A-strip of length `t` fits into `T_m(ν)`.
pub fn strip_insertable(nu: &Partition, t: usize, m: MParam) -> bool {
    if t == 0 || t.is_multiple_of(2) == m.is_integer() {
        return false;
    }
    let l = t as i64 - 1;
    if extremity_list(nu, m).iter().any(|e| e.value == l) {
        return false;
    }
    let a = m.twice.abs();
    let short = |len: usize| 2 * (len as i64) < a && l < a - 2 * len as i64;
    if m.twice > 0 && short(nu.len()) {
        return false;
    }
    if m.twice < 0 && short(nu.conjugate().len()) {
        return false;
    }
    true
}

/// Partition of `2n + m^2` (or `2n + m^2 - 1/4`) labelling a unipotent class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnipotentLabel {
    pub parts: Partition,
    pub m: MParam,
    pub n: usize,
}

/// `m²`, or `m² - 1/4` at half-integers.
pub fn m_square_part(m: MParam) -> i64 {
    let t = m.twice;
    if t % 2 == 0 {
        t * t / 4
    } else {
        (t * t - 1) / 4
    }
}

/// Number of odd-multiplicity parts a label needs.
fn min_odd(m: MParam) -> usize {
    (m.twice.unsigned_abs() / 2) as usize
}

impl UnipotentLabel {
    pub fn new(parts: Partition, m: MParam) -> Result<Self, SpringerError> {
        let bad = || SpringerError::NotUnipotent(parts.to_string());
        let two_n = parts.weight() as i64 - m_square_part(m);
        if two_n < 0 || two_n % 2 != 0 {
            return Err(bad());
        }
        let odd_par = if m.is_integer() { 1 } else { 0 };
        let mut count = 0;
        let mut p_prev = None;
        for &p in parts.parts() {
            if p_prev == Some(p) {
                continue;
            }
            p_prev = Some(p);
            let odd_mult = parts.multiplicity(p) % 2 == 1;
            if odd_mult {
                if p % 2 != odd_par {
                    return Err(bad());
                }
                count += 1;
            }
        }
        if count < min_odd(m) {
            return Err(bad());
        }
        Ok(UnipotentLabel { parts, m, n: (two_n / 2) as usize })
    }

    /// Parts with odd multiplicity, increasing.
    pub fn odd_multiplicity_parts(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.parts.parts().iter().copied().filter(|&p| self.parts.multiplicity(p) % 2 == 1).collect();
        v.dedup();
        v.reverse();
        v
    }
}

/// `U_m(n)` in increasing order of parts.
pub fn unipotent_set(n: usize, m: MParam) -> Vec<UnipotentLabel> {
    fn distinct(min: usize, step: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let mut p = min;
        while p <= rem {
            cur.push(p);
            distinct(p + step, step, rem - p, cur, out);
            cur.pop();
            p += step;
        }
    }
    let total = 2 * n + m_square_part(m) as usize;
    let first = if m.is_integer() { 1 } else { 2 };
    let mut out = Vec::new();
    for k in 0..=n {
        let mut sets = Vec::new();
        distinct(first, 2, total - 2 * k, &mut Vec::new(), &mut sets);
        sets.retain(|s| s.len() >= min_odd(m));
        for alpha in partitions_of(k) {
            for s in &sets {
                let mut parts: Vec<usize> = alpha.parts().iter().flat_map(|&d| [d, d]).collect();
                parts.extend(s);
                out.push(UnipotentLabel { parts: Partition::new(parts), m, n });
            }
        }
    }
    out.sort();
    out
}

/// The residual subspace type attached to a unipotent label.
pub fn f_bc(lam: &UnipotentLabel) -> Result<SubspaceType, SpringerError> {
    let m = lam.m;
    let odd = lam.odd_multiplicity_parts();
    let mut js: Vec<i64> = odd.iter().map(|&l| l as i64 - 1).collect();
    if (js.len() + m.ceil_abs()) % 2 == 1 {
        js.insert(0, if m.is_integer() { 0 } else { -1 });
    }
    let jset = JumpSet::new(js.clone(), m).ok_or(SpringerError::BadJumps(js))?;
    let mut rest: Vec<usize> = lam.parts.ascending();
    for l in &odd {
        let pos = rest.iter().position(|x| x == l).expect("odd part present");
        rest.remove(pos);
    }
    let d: Vec<usize> = rest.iter().copied().step_by(2).collect();
    let nu = canonical_partition(&jset, m)?;
    Ok(SubspaceType::new(Partition::new(d), nu))
}

/// Sorted entries of the symbol of a 2-composition with rows `xi`, `eta`,
/// shifted until the bottom row has at least `n` entries.
fn composition_entries(xi: &[i64], eta: &[i64], m: MParam, n: usize) -> (Vec<i64>, usize) {
    let (_, s) = shape_of(m);
    let mut top: Vec<i64> = xi.iter().enumerate().map(|(i, &x)| x + 2 * i as i64).collect();
    let mut bottom: Vec<i64> = eta.iter().enumerate().map(|(i, &y)| y + 2 * i as i64 + s).collect();
    while bottom.len() < n {
        top = std::iter::once(0).chain(top.iter().map(|x| x + 2)).collect();
        bottom = std::iter::once(s).chain(bottom.iter().map(|y| y + 2)).collect();
    }
    let l2 = bottom.len();
    let mut e: Vec<i64> = top.into_iter().chain(bottom).collect();
    e.sort_unstable();
    (e, l2)
}

/// `phi_m(λ)` as a sorted similarity class.
pub fn phi(lam: &UnipotentLabel) -> Result<Vec<BiPartition>, SpringerError> {
    let m = lam.m;
    if m.is_negative() {
        let pos = UnipotentLabel { m: m.neg(), ..lam.clone() };
        let mut v: Vec<BiPartition> = phi(&pos)?.iter().map(BiPartition::swap).collect();
        v.sort();
        return Ok(v);
    }
    let half = !m.is_integer();
    let tail = min_odd(m);
    let mut mu: Vec<i64> = lam.parts.ascending().into_iter().map(|p| p as i64).collect();
    if half && (mu.len() + tail) % 2 == 1 {
        mu.insert(0, 0);
    }
    if mu.len() < tail || !(mu.len() - tail).is_multiple_of(2) {
        return Err(SpringerError::NotUnipotent(lam.parts.to_string()));
    }
    let r = (mu.len() - tail) / 2;
    let pair_parity = if half { 1 } else { 0 };
    // every tail entry must end up with the parity of a defect part; fix from the right
    let start = mu.len() - tail;
    let mut j = mu.len();
    while j > start {
        j -= 1;
        if mu[j].rem_euclid(2) == pair_parity {
            if j == 0 || mu[j - 1] != mu[j] {
                return Err(SpringerError::NotUnipotent(lam.parts.to_string()));
            }
            mu[j - 1] += 1;
            mu[j] -= 1;
            j -= 1;
        }
    }
    let off = if half { 2 * r as i64 - 1 } else { 2 * r as i64 };
    let star: Vec<i64> =
        mu.iter().enumerate().map(|(i, &x)| if i < 2 * r { x + i as i64 } else { x + off }).collect();
    let (mut xs, mut es) = (Vec::new(), Vec::new());
    for &x in &star {
        if x.rem_euclid(2) == 1 {
            xs.push(x.div_euclid(2));
        } else {
            es.push(x / 2);
        }
    }
    let mut xi: Vec<i64> = xs.iter().enumerate().map(|(i, &x)| x - i as i64).collect();
    let mut eta: Vec<i64> = es.iter().enumerate().map(|(i, &y)| y - i as i64).collect();
    let (d, _) = shape_of(m);
    while xi.len() < eta.len() + d {
        xi.insert(0, 0);
    }
    while xi.len() > eta.len() + d {
        eta.insert(0, 0);
    }
    let (entries, l2) = composition_entries(&xi, &eta, m, lam.n);
    let class = bipartitions_with_entries(&entries, m, l2);
    if class.is_empty() {
        return Err(SpringerError::NoClass(entries));
    }
    Ok(class)
}

/// `psi_m` of the class of `a`.
pub fn psi(a: &BiPartition, m: MParam) -> Result<UnipotentLabel, SpringerError> {
    if m.is_negative() {
        let l = psi(&a.swap(), m.neg())?;
        return Ok(UnipotentLabel { m, ..l });
    }
    let n = a.weight();
    let half = !m.is_integer();
    let (_, s) = shape_of(m);
    let (top, bottom) = symbol_rows(a, m, n);
    let mut e: Vec<i64> = top.into_iter().chain(bottom).collect();
    e.sort_unstable();
    let mut xi: Vec<i64> = Vec::new();
    let mut eta: Vec<i64> = Vec::new();
    for (k, &x) in e.iter().enumerate() {
        if k < 2 * n && k % 2 == 1 {
            eta.push(x - 2 * eta.len() as i64 - s);
        } else {
            xi.push(x - 2 * xi.len() as i64);
        }
    }
    if half {
        // the leading pad of the top row is not part of the composition
        xi.remove(0);
    }
    let big_n = eta.len();
    let xs: Vec<i64> = xi.iter().enumerate().map(|(i, &x)| x + i as i64).collect();
    let es: Vec<i64> = eta.iter().enumerate().map(|(i, &y)| y + i as i64).collect();
    let mut head: Vec<i64> = xs[..big_n].iter().map(|x| 2 * x + 1).chain(es.iter().map(|y| 2 * y)).collect();
    head.sort_unstable();
    let tail_off = if half { 2 * big_n as i64 - 1 } else { 2 * big_n as i64 };
    let mut mu: Vec<i64> = head.iter().enumerate().map(|(i, &x)| x - i as i64).collect();
    mu.extend(xs[big_n..].iter().map(|x| 2 * x + 1 - tail_off));
    mu.retain(|&x| x != 0);
    let pair_parity = if half { 0 } else { 1 };
    let mut i = 0;
    while i + 1 < mu.len() {
        if mu[i] == mu[i + 1] + 2 && mu[i].rem_euclid(2) == pair_parity {
            mu[i] -= 1;
            mu[i + 1] += 1;
            i += 2;
        } else {
            i += 1;
        }
    }
    let parts: Option<Vec<usize>> = mu.iter().map(|&x| usize::try_from(x).ok()).collect();
    let parts = parts.ok_or_else(|| SpringerError::NotUnipotent(format!("{mu:?}")))?;
    let label = UnipotentLabel::new(Partition::new(parts), m)?;
    if label.n != n {
        return Err(SpringerError::NotUnipotent(label.parts.to_string()));
    }
    Ok(label)
}

/// The central character assigned to the module indexed by `a`.
pub fn predicted_central_character(a: &BiPartition, m: MParam) -> Result<CentralCharacter, SpringerError> {
    Ok(center_coordinates(&f_bc(&psi(a, m)?)?, m))
}

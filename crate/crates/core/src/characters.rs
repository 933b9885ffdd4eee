//! Conjugacy classes and irreducible characters of the hyperoctahedral group
//! `W(B_n)`, fake degrees and the matrix `Ω`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_algebra::{rat, Poly, Rational};
use crate::partitions::{bipartitions, BiPartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("fake degree not polynomial")]
    NotPolynomial,
    #[error("class function has {got} values, expected {expected}")]
    Length { got: usize, expected: usize },
    #[error("weight {0} does not match rank {1}")]
    Weight(usize, usize),
}

/// Signed cycle type: positive cycles `α`, negative cycles `β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConjClass {
    pub pos_cycles: Partition,
    pub neg_cycles: Partition,
    pub size: u128,
}

impl ConjClass {
    pub fn rank(&self) -> usize {
        self.pos_cycles.weight() + self.neg_cycles.weight()
    }

    /// Value of the sign character, `(-1)^(n - ℓ(α))`.
    pub fn sign(&self) -> i64 {
        if (self.rank() - self.pos_cycles.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.neg_cycles.is_empty() && self.pos_cycles.parts().iter().all(|&p| p == 1)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn group_order(n: usize) -> u128 {
    (1u128 << n) * factorial(n)
}

fn centralizer(p: &Partition) -> u128 {
    let mut z = 1u128 << p.len();
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &x in p.parts() {
        *counts.entry(x).or_default() += 1;
    }
    for (x, c) in counts {
        z *= (x as u128).pow(c as u32) * factorial(c);
    }
    z
}

/// One class per bipartition `(α, β)` of `n`, in [`bipartitions`] order.
pub fn conj_classes(n: usize) -> Vec<ConjClass> {
    let order = group_order(n);
    bipartitions(n)
        .into_iter()
        .map(|b| {
            let size = order / (centralizer(&b.xi) * centralizer(&b.eta));
            ConjClass { pos_cycles: b.xi, neg_cycles: b.eta, size }
        })
        .collect()
}

/// Rim hooks of length `k`: the shapes left behind with the sign `(-1)^height`.
fn remove_rim_hooks(lam: &[usize], k: usize) -> Vec<(Vec<usize>, i64)> {
    let len = lam.len();
    let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> =
            nb.iter().enumerate().map(|(j, &c)| c - (len - 1 - j)).filter(|&p| p > 0).collect();
        out.push((shape, if crossed % 2 == 0 { 1 } else { -1 }));
    }
    out
}

type MemoKey = (Vec<usize>, Vec<usize>, usize);

fn mn(
    xi: &[usize],
    eta: &[usize],
    cycles: &[(usize, bool)],
    memo: &mut HashMap<MemoKey, i64>,
) -> i64 {
    if cycles.is_empty() {
        return 1;
    }
    let key = (xi.to_vec(), eta.to_vec(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (k, neg) = cycles[0];
    let rest = &cycles[1..];
    let mut total = 0;
    for (s, sg) in remove_rim_hooks(xi, k) {
        total += sg * mn(&s, eta, rest, memo);
    }
    for (s, sg) in remove_rim_hooks(eta, k) {
        let sg = if neg { -sg } else { sg };
        total += sg * mn(xi, &s, rest, memo);
    }
    memo.insert(key, total);
    total
}

fn cycle_list(c: &ConjClass) -> Vec<(usize, bool)> {
    let mut v: Vec<(usize, bool)> = c.pos_cycles.parts().iter().map(|&a| (a, false)).collect();
    v.extend(c.neg_cycles.parts().iter().map(|&b| (b, true)));
    v
}

/// `χ_A(C)` by signed Murnaghan–Nakayama recursion.
pub fn char_value(a: &BiPartition, c: &ConjClass) -> Result<i64, CharacterError> {
    if a.weight() != c.rank() {
        return Err(CharacterError::Weight(a.weight(), c.rank()));
    }
    Ok(mn(a.xi.parts(), a.eta.parts(), &cycle_list(c), &mut HashMap::new()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTable {
    pub n: usize,
    pub irreps: Vec<BiPartition>,
    pub classes: Vec<ConjClass>,
    /// `values[i][j] = χ_{irreps[i]}(classes[j])`
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn new(n: usize) -> Self {
        let irreps = bipartitions(n);
        let classes = conj_classes(n);
        let cycles: Vec<_> = classes.iter().map(cycle_list).collect();
        let values = irreps
            .par_iter()
            .map(|a| {
                cycles.iter().map(|cy| mn(a.xi.parts(), a.eta.parts(), cy, &mut HashMap::new())).collect()
            })
            .collect();
        CharTable { n, irreps, classes, values }
    }

    pub fn index_of(&self, a: &BiPartition) -> Option<usize> {
        self.irreps.iter().position(|x| x == a)
    }

    pub fn row(&self, a: &BiPartition) -> Option<&[i64]> {
        self.index_of(a).map(|i| self.values[i].as_slice())
    }

    pub fn sign_row(&self) -> Vec<i64> {
        self.classes.iter().map(ConjClass::sign).collect()
    }

    /// `Σ_C |C| f(C) g(C)`, equal to `|W| δ` for irreducible rows.
    pub fn inner(&self, f: &[i64], g: &[i64]) -> BigInt {
        self.classes
            .iter()
            .zip(f.iter().zip(g))
            .map(|(c, (&x, &y))| BigInt::from(c.size) * BigInt::from(x) * BigInt::from(y))
            .sum()
    }
}

/// `det(t - w) = Π (t^a - 1) Π (t^b + 1)`.
pub fn det_char_poly(c: &ConjClass) -> Poly {
    let mut p = Poly::one();
    for &a in c.pos_cycles.parts() {
        p = &p * &(&Poly::t_pow(a) - &Poly::one());
    }
    for &b in c.neg_cycles.parts() {
        p = &p * &(&Poly::t_pow(b) + &Poly::one());
    }
    p
}

fn degree_product(n: usize) -> Poly {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &(&Poly::t_pow(2 * i) - &Poly::one()))
}

/// `Π_{i=1}^n (t^{2i} - 1)/(t - 1)`.
pub fn poincare(n: usize) -> Poly {
    let tm1 = Poly::from_ints(&[-1, 1]);
    degree_product(n).div_exact(&tm1.pow(n)).expect("cyclotomic factors divide")
}

/// Precomputed `Π(t^{2i}-1)/det(t - w)` per class, so that fake degrees
/// are plain weighted sums of polynomials.
pub struct FakeDegreeKernel {
    order: Rational,
    weights: Vec<Poly>,
}

impl FakeDegreeKernel {
    pub fn new(classes: &[ConjClass]) -> Result<Self, CharacterError> {
        let n = classes.first().map_or(0, ConjClass::rank);
        let top = degree_product(n);
        let weights = classes
            .iter()
            .map(|c| {
                let q = top.div_exact(&det_char_poly(c)).ok_or(CharacterError::NotPolynomial)?;
                let w = BigInt::from(c.size) * BigInt::from(c.sign());
                Ok(q.scale(&Rational::from_integer(w)))
            })
            .collect::<Result<_, _>>()?;
        Ok(FakeDegreeKernel { order: rat(1) / Rational::from_integer(BigInt::from(group_order(n))), weights })
    }

    /// `R(f)` for a class function given by its values on each class.
    pub fn apply(&self, f: &[Rational]) -> Result<Poly, CharacterError> {
        if f.len() != self.weights.len() {
            return Err(CharacterError::Length { got: f.len(), expected: self.weights.len() });
        }
        let mut acc = Poly::zero();
        for (w, v) in self.weights.iter().zip(f) {
            if !v.is_zero() {
                acc = &acc + &w.scale(v);
            }
        }
        Ok(acc.scale(&self.order))
    }

    pub fn apply_int(&self, f: &[i64]) -> Result<Poly, CharacterError> {
        self.apply(&f.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }
}

/// Fake degree of a class function with values listed in `conj_classes(n)` order.
pub fn fake_degree(f: &[Rational], n: usize) -> Result<Poly, CharacterError> {
    FakeDegreeKernel::new(&conj_classes(n))?.apply(f)
}

/// `ω_{A,B} = t^n R(χ_A χ_B ε)`, indexed like `table.irreps`.
pub fn omega_from_table(table: &CharTable) -> Result<Vec<Vec<Poly>>, CharacterError> {
    let kernel = FakeDegreeKernel::new(&table.classes)?;
    let eps = table.sign_row();
    let k = table.irreps.len();
    let rows: Vec<Vec<Poly>> = (0..k)
        .into_par_iter()
        .map(|i| {
            (i..k)
                .map(|j| {
                    let f: Vec<i64> = (0..eps.len())
                        .map(|c| table.values[i][c] * table.values[j][c] * eps[c])
                        .collect();
                    kernel.apply_int(&f).map(|p| p.shift(table.n))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut out = vec![vec![Poly::zero(); k]; k];
    for (i, row) in rows.into_iter().enumerate() {
        for (off, p) in row.into_iter().enumerate() {
            out[i + off][i] = p.clone();
            out[i][i + off] = p;
        }
    }
    Ok(out)
}

pub fn omega(n: usize) -> Result<Vec<Vec<Poly>>, CharacterError> {
    omega_from_table(&CharTable::new(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Elements of `W(B_n)` as signed permutations `i -> (perm[i], sign[i])`.
    fn elements(n: usize) -> Vec<(Vec<usize>, Vec<i64>)> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut out = Vec::new();
        for p in perms(n) {
            for mask in 0..(1usize << n) {
                let s = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push((p.clone(), s));
            }
        }
        out
    }

    fn signed_cycle_type(p: &[usize], s: &[i64]) -> BiPartition {
        let n = p.len();
        let mut seen = vec![false; n];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut sg, mut i) = (0, 1, start);
            while !seen[i] {
                seen[i] = true;
                sg *= s[i];
                len += 1;
                i = p[i];
            }
            if sg == 1 {
                pos.push(len)
            } else {
                neg.push(len)
            }
        }
        BiPartition::from_parts(&pos, &neg)
    }

    fn perm_parity(p: &[usize]) -> i64 {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn matrix_trace(p: &[usize], s: &[i64]) -> i64 {
        (0..p.len()).filter(|&i| p[i] == i).map(|i| s[i]).sum()
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for n in 0..=4 {
            let classes = conj_classes(n);
            let mut counts: HashMap<BiPartition, u128> = HashMap::new();
            for (p, s) in elements(n) {
                *counts.entry(signed_cycle_type(&p, &s)).or_default() += 1;
            }
            for c in &classes {
                let key = BiPartition::new(c.pos_cycles.clone(), c.neg_cycles.clone());
                assert_eq!(counts[&key], c.size, "n={n} class {key}");
            }
            assert_eq!(classes.iter().map(|c| c.size).sum::<u128>(), group_order(n));
        }
        assert_eq!(conj_classes(1).len(), 2);
        assert_eq!(conj_classes(2).len(), 5);
        assert_eq!(conj_classes(3).len(), 10);
    }

    #[test]
    fn rank_two_table_against_matrices() {
        let t = CharTable::new(2);
        let els = elements(2);
        let lookup = |cls: &ConjClass| {
            els.iter()
                .find(|(p, s)| {
                    signed_cycle_type(p, s)
                        == BiPartition::new(cls.pos_cycles.clone(), cls.neg_cycles.clone())
                })
                .cloned()
                .unwrap()
        };
        let expected: Vec<(BiPartition, Box<dyn Fn(&[usize], &[i64]) -> i64>)> = vec![
            (BiPartition::from_parts(&[2], &[]), Box::new(|_, _| 1)),
            (BiPartition::from_parts(&[1, 1], &[]), Box::new(|p, _| perm_parity(p))),
            (BiPartition::from_parts(&[], &[2]), Box::new(|_, s| s.iter().product())),
            (
                BiPartition::from_parts(&[], &[1, 1]),
                Box::new(|p, s| perm_parity(p) * s.iter().product::<i64>()),
            ),
            (BiPartition::from_parts(&[1], &[1]), Box::new(matrix_trace)),
        ];
        for (a, f) in &expected {
            let row = t.row(a).unwrap();
            for (j, c) in t.classes.iter().enumerate() {
                let (p, s) = lookup(c);
                assert_eq!(row[j], f(&p, &s), "{a} on {:?}", c);
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 0..=6 {
            let t = CharTable::new(n);
            let order = BigInt::from(group_order(n));
            for i in 0..t.irreps.len() {
                for j in 0..t.irreps.len() {
                    let ip = t.inner(&t.values[i], &t.values[j]);
                    assert_eq!(ip, if i == j { order.clone() } else { BigInt::zero() });
                }
            }
            // columns: Σ_A χ_A(C) χ_A(D) = δ |W|/|C|
            for c in 0..t.classes.len() {
                for d in 0..t.classes.len() {
                    let s: i64 = t.values.iter().map(|r| r[c] * r[d]).sum();
                    let want = if c == d { (group_order(n) / t.classes[c].size) as i64 } else { 0 };
                    assert_eq!(s, want);
                }
            }
        }
    }

    #[test]
    fn trivial_sign_and_swap() {
        for n in 1..=5 {
            let t = CharTable::new(n);
            let triv = t.row(&BiPartition::from_parts(&[n], &[])).unwrap();
            assert!(triv.iter().all(|&v| v == 1));
            let sign = t.row(&BiPartition::from_parts(&[], &vec![1; n])).unwrap();
            assert_eq!(sign, t.sign_row().as_slice());
            let sc = t.row(&BiPartition::from_parts(&[], &[n])).unwrap();
            for a in &t.irreps {
                let row = t.row(a).unwrap();
                let swapped = t.row(&a.swap()).unwrap();
                let tw = t.row(&a.tensor_sign()).unwrap();
                for j in 0..t.classes.len() {
                    assert_eq!(swapped[j], row[j] * sc[j]);
                    assert_eq!(tw[j], row[j] * sign[j]);
                }
            }
        }
        let c1 = conj_classes(1);
        let eps = BiPartition::from_parts(&[], &[1]);
        assert_eq!(char_value(&eps, &c1[0]).unwrap(), 1);
        assert_eq!(char_value(&eps, &c1[1]).unwrap(), -1);
    }

    #[test]
    fn reflection_traces_from_char_poly() {
        for n in 1..=3 {
            let refl = BiPartition::from_parts(&[n - 1], &[1]);
            for (p, s) in elements(n) {
                let ct = signed_cycle_type(&p, &s);
                let cls = ConjClass { pos_cycles: ct.xi.clone(), neg_cycles: ct.eta.clone(), size: 0 };
                let dp = det_char_poly(&cls);
                let tr = -dp.coeff(n - 1);
                assert_eq!(tr, rat(matrix_trace(&p, &s)));
                assert_eq!(char_value(&refl, &cls).unwrap(), matrix_trace(&p, &s));
            }
        }
        let cl = conj_classes(3);
        let id = cl.iter().find(|c| c.is_identity()).unwrap();
        assert_eq!(id.pos_cycles.parts(), [1, 1, 1]);
        assert_eq!(det_char_poly(id), Poly::from_ints(&[-1, 1]).pow(3));
        let c = conj_classes(2).into_iter().find(|c| c.neg_cycles.parts() == [2]).unwrap();
        assert_eq!(det_char_poly(&c), Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn poincare_values() {
        assert_eq!(poincare(1), Poly::from_ints(&[1, 1]));
        assert_eq!(poincare(2), &Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[1, 1, 1, 1]));
        for n in 0..=6 {
            assert_eq!(poincare(n).eval(&rat(1)), Rational::from_integer(BigInt::from(group_order(n))));
        }
    }

    #[test]
    fn fake_degrees() {
        for n in 0..=5 {
            let t = CharTable::new(n);
            let k = FakeDegreeKernel::new(&t.classes).unwrap();
            let triv = t.row(&BiPartition::from_parts(&[n], &[])).unwrap();
            assert_eq!(k.apply_int(triv).unwrap(), Poly::one());
            assert_eq!(k.apply_int(&t.sign_row()).unwrap(), Poly::t_pow(n * n));
            let mut total = Poly::zero();
            for (i, row) in t.values.iter().enumerate() {
                let r = k.apply_int(row).unwrap();
                assert!(r.int_coeffs().unwrap().iter().all(|&c| c >= 0), "{}", t.irreps[i]);
                let dim = row[t.classes.iter().position(ConjClass::is_identity).unwrap()];
                total = &total + &r.scale(&rat(dim));
            }
            assert_eq!(total, poincare(n));
        }
        let f: Vec<Rational> = vec![rat(1), rat(1)];
        assert_eq!(fake_degree(&f, 1).unwrap(), Poly::one());
        let e: Vec<Rational> = vec![rat(1), rat(-1)];
        assert_eq!(fake_degree(&e, 1).unwrap(), Poly::t_pow(1));
    }

    #[test]
    fn omega_small() {
        let w1 = omega(1).unwrap();
        assert_eq!(w1, vec![vec![Poly::t_pow(2), Poly::t_pow(1)], vec![Poly::t_pow(1), Poly::t_pow(2)]]);
        let t3 = CharTable::new(3);
        let w3 = omega_from_table(&t3).unwrap();
        let i = t3.index_of(&BiPartition::from_parts(&[3], &[])).unwrap();
        assert_eq!(w3[i][i], Poly::t_pow(12));
        for a in 0..w3.len() {
            for b in 0..w3.len() {
                assert_eq!(w3[a][b], w3[b][a]);
            }
        }
    }
}

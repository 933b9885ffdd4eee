//! Solving `P Λ ᵀP = Ω` for the generalized Green functions and reading off
//! graded multiplicity tables.
//!
//! Storage: the basis is ascending in `a_m`, and `P[i][j]` holds `P_{B_i,A_j}`
//! (row = constituent, column = module). `P` is then block upper triangular
//! with diagonal blocks `t^{a} Id`, and `Λ` is block diagonal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::{omega, CharacterError};
use crate::exact_algebra::{AlgebraError, MatrixRF, Poly, RatFunc};
use crate::partitions::{bipartitions, BiPartition};
use crate::residual::MParam;
use crate::springer::predicted_central_character;
use crate::symbols::{order_basis, OrderedBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreenError {
    #[error("Lusztig–Shoji block singular")]
    BlockSingular,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("{0} is not in the basis")]
    NotInBasis(BiPartition),
    #[error("Ω has size {got}, expected {expected}")]
    OmegaSize { got: usize, expected: usize },
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug)]
pub struct GreenSolution {
    pub basis: OrderedBasis,
    pub p: MatrixRF,
    pub lambda: MatrixRF,
    /// `Ω` in basis order.
    pub omega: MatrixRF,
}

/// Rows of column `A`: degree `l` to the constituents `B` with the
/// coefficient of `t^l` in `P_{B,A}` as multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTable {
    pub column: BiPartition,
    pub rows: BTreeMap<usize, Vec<(BiPartition, i64)>>,
}

impl GradedTable {
    pub fn top_degree(&self) -> Option<usize> {
        self.rows.keys().next_back().copied()
    }

    /// Each row as an expanded multiset, in descending basis order.
    pub fn multisets(&self) -> BTreeMap<usize, Vec<BiPartition>> {
        self.rows
            .iter()
            .map(|(&l, v)| {
                let mut out = Vec::new();
                for (b, k) in v {
                    for _ in 0..*k {
                        out.push(b.clone());
                    }
                }
                (l, out)
            })
            .collect()
    }
}

/// Reorders `Ω` (indexed by `bipartitions(n)`) into basis order.
pub fn omega_in_basis(basis: &OrderedBasis, omega_std: &[Vec<Poly>]) -> Result<MatrixRF, GreenError> {
    let std = bipartitions(basis.n);
    if omega_std.len() != std.len() {
        return Err(GreenError::OmegaSize { got: omega_std.len(), expected: std.len() });
    }
    let pos: Vec<usize> = basis
        .items
        .iter()
        .map(|a| std.iter().position(|x| x == a).ok_or_else(|| GreenError::NotInBasis(a.clone())))
        .collect::<Result<_, _>>()?;
    Ok(MatrixRF::from_fn(pos.len(), pos.len(), |i, j| RatFunc::from_poly(omega_std[pos[i]][pos[j]].clone())))
}

pub fn solve(n: usize, m: MParam, seed: u64) -> Result<GreenSolution, GreenError> {
    solve_with_omega(order_basis(n, m, seed), &omega(n)?)
}

/// Block back-substitution from the last (largest `a`) block downwards.
pub fn solve_with_omega(basis: OrderedBasis, omega_std: &[Vec<Poly>]) -> Result<GreenSolution, GreenError> {
    let om = omega_in_basis(&basis, omega_std)?;
    let k = basis.items.len();
    let mut p = MatrixRF::zeros(k, k);
    let mut lambda = MatrixRF::zeros(k, k);
    let mut rest = om.clone();
    for bi in (0..basis.blocks.len()).rev() {
        let block = &basis.blocks[bi];
        let a = basis.a_values[block[0]];
        let earlier: Vec<usize> = (0..block[0]).collect();
        let lam_k = MatrixRF::from_fn(block.len(), block.len(), |i, j| {
            rest.get(block[i], block[j]) * &RatFunc::t_ipow(-2 * a)
        });
        for (i, &r) in block.iter().enumerate() {
            p.set(r, r, RatFunc::t_ipow(a));
            for (j, &c) in block.iter().enumerate() {
                lambda.set(r, c, lam_k.get(i, j).clone());
            }
        }
        if earlier.is_empty() {
            continue;
        }
        // Λ_K X = Ω[E,K]ᵀ, then P[E,K] = t^{-a} Xᵀ
        let rhs = rest.select(block, &earlier);
        let x = lam_k.solve(&rhs).map_err(|e| match e {
            AlgebraError::Singular => GreenError::BlockSingular,
            other => other.into(),
        })?;
        let scale = RatFunc::t_ipow(-a);
        for (j, &c) in block.iter().enumerate() {
            for (i, &r) in earlier.iter().enumerate() {
                p.set(r, c, x.get(j, i) * &scale);
            }
        }
        // deflate: rest[E,E] -= P[E,K] Λ_K P[E,K]ᵀ
        let pek = p.select(&earlier, block);
        let corr = pek.mul(&lam_k)?.mul(&pek.transpose())?;
        for (i, &r) in earlier.iter().enumerate() {
            for (j, &c) in earlier.iter().enumerate() {
                let v = rest.get(r, c) - corr.get(i, j);
                rest.set(r, c, v);
            }
        }
    }
    let sol = GreenSolution { basis, p, lambda, omega: om };
    if !sol.residual()?.is_zero() {
        return Err(GreenError::Invariant("P Λ ᵀP = Ω".into()));
    }
    Ok(sol)
}

impl GreenSolution {
    pub fn residual(&self) -> Result<MatrixRF, GreenError> {
        Ok(self.p.mul(&self.lambda)?.mul(&self.p.transpose())?.sub(&self.omega)?)
    }

    fn idx(&self, a: &BiPartition) -> Result<usize, GreenError> {
        self.basis.index_of(a).ok_or_else(|| GreenError::NotInBasis(a.clone()))
    }

    /// `P_{B,A}`.
    pub fn entry(&self, b: &BiPartition, a: &BiPartition) -> Result<&RatFunc, GreenError> {
        Ok(self.p.get(self.idx(b)?, self.idx(a)?))
    }

    /// All `P_{B,A}` as polynomials, keyed by `(B, A)`.
    pub fn p_map(&self) -> Result<BTreeMap<(BiPartition, BiPartition), Poly>, GreenError> {
        let mut out = BTreeMap::new();
        let items = &self.basis.items;
        for (i, b) in items.iter().enumerate() {
            for (j, a) in items.iter().enumerate() {
                let e = self.p.get(i, j);
                let poly = e.to_poly().ok_or_else(|| {
                    GreenError::Invariant(format!("P_{{{b},{a}}} = {e} is not a polynomial"))
                })?;
                out.insert((b.clone(), a.clone()), poly);
            }
        }
        Ok(out)
    }

    /// Verifies support, diagonal, polynomiality, degree bound and the
    /// exact matrix identity.
    pub fn check_invariants(&self) -> Result<(), GreenError> {
        let ids = self.basis.block_ids();
        let k = self.basis.items.len();
        let bad = |s: String| Err(GreenError::Invariant(s));
        for i in 0..k {
            for j in 0..k {
                let (b, a) = (&self.basis.items[i], &self.basis.items[j]);
                let e = self.p.get(i, j);
                let Some(poly) = e.to_poly() else { return bad(format!("P_{{{b},{a}}} not polynomial")) };
                if poly.int_coeffs().is_none() {
                    return bad(format!("P_{{{b},{a}}} has non-integer coefficients"));
                }
                let aa = self.basis.a_values[j];
                if i == j {
                    if poly != Poly::t_pow(aa as usize) {
                        return bad(format!("diagonal P_{{{a},{a}}} is not t^{aa}"));
                    }
                } else if !poly.is_zero() && ids[i] >= ids[j] {
                    return bad(format!("P_{{{b},{a}}} outside the block-triangular support"));
                }
                if poly.degree().is_some_and(|d| d as i64 > aa) {
                    return bad(format!("deg P_{{{b},{a}}} exceeds a_m = {aa}"));
                }
                if ids[i] != ids[j] && !self.lambda.get(i, j).is_zero() {
                    return bad(format!("Λ_{{{b},{a}}} nonzero across blocks"));
                }
                if self.lambda.get(i, j) != self.lambda.get(j, i) {
                    return bad("Λ not symmetric".into());
                }
            }
        }
        if !self.residual()?.is_zero() {
            return bad("P Λ ᵀP = Ω".into());
        }
        Ok(())
    }

    /// Predicted central characters are constant on blocks and separate them.
    pub fn check_column_labels(&self) -> Result<(), GreenError> {
        let m = self.basis.m;
        let mut seen = Vec::new();
        for block in &self.basis.blocks {
            let ccs: Vec<_> = block
                .iter()
                .map(|&i| predicted_central_character(&self.basis.items[i], m))
                .collect::<Result<_, _>>()
                .map_err(|e| GreenError::Invariant(format!("central character: {e}")))?;
            if ccs.windows(2).any(|w| w[0] != w[1]) {
                return Err(GreenError::Invariant("central character varies within a block".into()));
            }
            if seen.contains(&ccs[0]) {
                return Err(GreenError::Invariant("two blocks share a central character".into()));
            }
            seen.push(ccs[0].clone());
        }
        Ok(())
    }
}

/// Column `A` of `P` by degree. With `twist`, each `B` is relabelled `B ⊗ ε`.
pub fn graded_table(sol: &GreenSolution, a: &BiPartition, twist: bool) -> Result<GradedTable, GreenError> {
    let j = sol.idx(a)?;
    let mut rows: BTreeMap<usize, Vec<(BiPartition, i64)>> = BTreeMap::new();
    // largest a first, as tables are usually printed
    for (i, b) in sol.basis.items.iter().enumerate().rev() {
        let e = sol.p.get(i, j);
        if e.is_zero() {
            continue;
        }
        let coeffs = e
            .to_poly()
            .and_then(|p| p.int_coeffs())
            .ok_or_else(|| GreenError::Invariant(format!("P_{{{b},{a}}} not an integer polynomial")))?;
        let label = if twist { b.tensor_sign() } else { b.clone() };
        for (l, c) in coeffs.into_iter().enumerate() {
            if c != 0 {
                rows.entry(l).or_default().push((label.clone(), c));
            }
        }
    }
    Ok(GradedTable { column: a.clone(), rows })
}

/// `P^{-m}_{A,B} = P^m_{Φ(A),Φ(B)}` with `Φ` the component swap.
pub fn check_mp(n: usize, m: MParam) -> Result<bool, GreenError> {
    let om = omega(n)?;
    let pos = solve_with_omega(order_basis(n, m, 0), &om)?.p_map()?;
    let neg = solve_with_omega(order_basis(n, m.neg(), 0), &om)?.p_map()?;
    Ok(neg.iter().all(|((b, a), p)| pos.get(&(b.swap(), a.swap())) == Some(p)))
}

/// Compares the sign column at `m` with the one at `m = 1` (or `1/2`):
/// `P^m_{B,ε} = t^{n(m-1)} P^1_{B,ε}`, or `t^{n(m-1/2)}` at half-integers.
pub fn check_sign_shift(n: usize, m: MParam) -> Result<bool, GreenError> {
    if m.is_negative() {
        return Err(GreenError::Invariant("sign shift needs m ≥ 0".into()));
    }
    let base = MParam::from_twice(if m.is_integer() { 2 } else { 1 });
    let shift = n as i64 * (m.twice - base.twice) / 2;
    let eps = BiPartition::from_parts(&[], &vec![1; n]);
    let om = omega(n)?;
    let here = solve_with_omega(order_basis(n, m, 0), &om)?;
    let there = solve_with_omega(order_basis(n, base, 0), &om)?;
    let f = RatFunc::t_ipow(shift);
    for b in &here.basis.items {
        if here.entry(b, &eps)? != &(there.entry(b, &eps)? * &f) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P` agrees, as a map `(B, A) → P_{B,A}`, across basis refinements.
pub fn check_refinement_independence(n: usize, m: MParam, seeds: &[u64]) -> Result<bool, GreenError> {
    let om = omega(n)?;
    let mut first = None;
    for &s in seeds {
        let map = solve_with_omega(order_basis(n, m, s), &om)?.p_map()?;
        match &first {
            None => first = Some(map),
            Some(f) if f != &map => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

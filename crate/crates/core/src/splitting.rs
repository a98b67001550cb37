//! Betti splittings `I = J + K` and the checks built on them.
//!
//! A partition of the minimal generators of `I` into those of `J` and `K`
//! is a Betti splitting when
//! `β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J ∩ K)` for all `i, j`,
//! with `β_{-1,j} = 0`. A sufficient condition: `J` holds exactly the
//! generators divisible by some variable and has a linear resolution.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::betti::{self, BettiTable, Caps, Method};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::path::{Branch, PathParams};
use crate::varset::VarSet;

/// Field, method and caps used for every table a check computes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Engine {
    pub field: FieldSpec,
    pub method: Method,
    pub caps: Caps,
}

impl Engine {
    pub fn new(field: FieldSpec) -> Self {
        Engine { field, ..Self::default() }
    }

    pub fn table(&self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        betti::betti(ideal, self.field, self.method, self.caps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCase {
    pub whole: MonomialIdeal,
    pub j: MonomialIdeal,
    pub k: MonomialIdeal,
    pub j_cap_k: MonomialIdeal,
    pub table_whole: BettiTable,
    pub table_j: BettiTable,
    pub table_k: BettiTable,
    pub table_j_cap_k: BettiTable,
    pub verdict: bool,
    /// First `(i, j)` in lexicographic order where the identity fails.
    pub witness: Option<(u32, u32)>,
}

impl SplitCase {
    /// `pd(I) = max{pd J, pd K, pd(J∩K)+1}` and
    /// `reg(I) = max{reg J, reg K, reg(J∩K)-1}` on the computed tables.
    pub fn max_formulas_hold(&self) -> (bool, bool) {
        let pd = |t: &BettiTable| t.pd().map_or(-1, i64::from);
        let reg = |t: &BettiTable| t.reg().map_or(-1, i64::from);
        let pd_ok = pd(&self.table_whole) == pd(&self.table_j).max(pd(&self.table_k)).max(pd(&self.table_j_cap_k) + 1);
        let reg_ok =
            reg(&self.table_whole) == reg(&self.table_j).max(reg(&self.table_k)).max(reg(&self.table_j_cap_k) - 1);
        (pd_ok, reg_ok)
    }
}

pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    has_linear_resolution_with(ideal, &Engine::new(field))
}

pub fn has_linear_resolution_with(ideal: &MonomialIdeal, engine: &Engine) -> Result<bool> {
    ideal.ensure_proper_nonzero()?;
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    let d = ideal.min_degree().unwrap_or(0);
    Ok(engine.table(ideal)?.reg() == Some(d))
}

pub fn is_betti_splitting(
    whole: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    field: FieldSpec,
) -> Result<SplitCase> {
    is_betti_splitting_with(whole, j, k, &Engine::new(field))
}

pub fn is_betti_splitting_with(
    whole: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    engine: &Engine,
) -> Result<SplitCase> {
    if whole.n() != j.n() || whole.n() != k.n() {
        return Err(Error::AmbientMismatch { left: whole.n(), right: j.n().max(k.n()) });
    }
    let mut union: Vec<Monomial> = j.gens().iter().chain(k.gens()).copied().collect();
    union.sort();
    let disjoint = j.gens().iter().all(|g| !k.gens().contains(g));
    if j.is_zero() || k.is_zero() || !disjoint || union != whole.gens() {
        return Err(Error::NotAPartition);
    }
    let j_cap_k = j.intersect(k)?;
    let table_whole = engine.table(whole)?;
    let table_j = engine.table(j)?;
    let table_k = engine.table(k)?;
    let table_j_cap_k = engine.table(&j_cap_k)?;

    let mut keys: BTreeSet<(u32, u32)> = BTreeSet::new();
    for t in [&table_whole, &table_j, &table_k] {
        keys.extend(t.iter().map(|(i, d, _)| (i, d)));
    }
    keys.extend(table_j_cap_k.iter().map(|(i, d, _)| (i + 1, d)));
    let witness = keys.into_iter().find(|&(i, d)| {
        let shifted = if i == 0 { 0 } else { table_j_cap_k.get(i - 1, d) };
        table_whole.get(i, d) != table_j.get(i, d) + table_k.get(i, d) + shifted
    });
    Ok(SplitCase {
        whole: whole.clone(),
        j: j.clone(),
        k: k.clone(),
        j_cap_k,
        table_whole,
        table_j,
        table_k,
        table_j_cap_k,
        verdict: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhtCheck {
    /// Generators divisible by the chosen variable.
    pub j: MonomialIdeal,
    pub k: MonomialIdeal,
    /// Whether `J` has a linear resolution.
    pub applies: bool,
    /// The splitting check, computed whenever the condition applies.
    pub split: Option<SplitCase>,
}

impl FhtCheck {
    /// False only when the condition applies but the splitting identity fails.
    pub fn implication_holds(&self) -> bool {
        !self.applies || self.split.as_ref().is_some_and(|s| s.verdict)
    }
}

pub fn fht_condition(ideal: &MonomialIdeal, var: u32, field: FieldSpec) -> Result<FhtCheck> {
    fht_condition_with(ideal, var, &Engine::new(field))
}

pub fn fht_condition_with(ideal: &MonomialIdeal, var: u32, engine: &Engine) -> Result<FhtCheck> {
    if var == 0 || var > ideal.n() {
        return Err(Error::IndexOutOfRange { index: var, n: ideal.n() });
    }
    let (divisible, rest) = ideal.partition_by_var(var);
    if divisible.is_empty() || rest.is_empty() {
        return Err(Error::DegeneratePartition);
    }
    let j = MonomialIdeal::minimalize(ideal.n(), divisible)?;
    let k = MonomialIdeal::minimalize(ideal.n(), rest)?;
    let applies = has_linear_resolution_with(&j, engine)?;
    let split = if applies { Some(is_betti_splitting_with(ideal, &j, &k, engine)?) } else { None };
    Ok(FhtCheck { j, k, applies, split })
}

/// pd and reg of `I + J` and `IJ` for ideals in disjoint sets of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisjointReport {
    pub pd_i: u32,
    pub pd_j: u32,
    pub pd_sum: u32,
    pub reg_i: u32,
    pub reg_j: u32,
    pub reg_sum: u32,
    pub reg_product: u32,
    /// `pd(I+J) = pd(I) + pd(J) + 1`
    pub pd_sum_ok: bool,
    /// `reg(I+J) = reg(I) + reg(J) - 1`
    pub reg_sum_ok: bool,
    /// `reg(IJ) = reg(I) + reg(J)`
    pub reg_product_ok: bool,
}

impl DisjointReport {
    pub fn all_ok(&self) -> bool {
        self.pd_sum_ok && self.reg_sum_ok && self.reg_product_ok
    }
}

pub fn verify_disjoint_identities(a: &MonomialIdeal, b: &MonomialIdeal, field: FieldSpec) -> Result<DisjointReport> {
    verify_disjoint_identities_with(a, b, &Engine::new(field))
}

pub fn verify_disjoint_identities_with(
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    engine: &Engine,
) -> Result<DisjointReport> {
    let product = a.product_disjoint(b)?;
    let sum = a.sum(b)?;
    let inv = |i: &MonomialIdeal| -> Result<betti::Invariants> { betti::invariants_of(&engine.table(i)?) };
    let (ia, ib, is, ip) = (inv(a)?, inv(b)?, inv(&sum)?, inv(&product)?);
    Ok(DisjointReport {
        pd_i: ia.pd,
        pd_j: ib.pd,
        pd_sum: is.pd,
        reg_i: ia.reg,
        reg_j: ib.reg,
        reg_sum: is.reg,
        reg_product: ip.reg,
        pd_sum_ok: is.pd == ia.pd + ib.pd + 1,
        reg_sum_ok: is.reg + 1 == ia.reg + ib.reg,
        reg_product_ok: ip.reg == ia.reg + ib.reg,
    })
}

/// The split of `I(m,l,k)` at its last variable: `J = (u_k)`, `K` the
/// first `k-1` generators. Requires `k >= 2`.
pub fn path_top_split(params: &PathParams, engine: &Engine) -> Result<FhtCheck> {
    if params.k() < 2 {
        return Err(Error::DegeneratePartition);
    }
    fht_condition_with(&params.ideal(), params.n(), engine)
}

/// Number of generators spanned by one period of the closed forms:
/// 2 in the `Small` branch, `(2m - l - s)/(m - l)` otherwise.
pub fn period_in_generators(params: &PathParams) -> u32 {
    let r = params.regime();
    match r.branch {
        Branch::Small => 2,
        Branch::Divisible | Branch::Residual => (2 * params.m() - params.l() - r.s) / params.step(),
    }
}

/// Closed form of `(u_k) ∩ I(m,l,k-1)`: `(u_k) · L` where
/// `L = I(m,l,k-t) + (x_{(k-2)(m-l)+1} ⋯ x_{(k-1)(m-l)})` when `k > t`, and
/// `L` is just the monomial otherwise (`t` from [`period_in_generators`]).
pub fn path_intersection_closed_form(params: &PathParams) -> Result<MonomialIdeal> {
    let (k, step, n) = (params.k(), params.step(), params.n());
    if k < 2 {
        return Err(Error::DegeneratePartition);
    }
    let t = period_in_generators(params);
    let lo = (k - 2) * step + 1;
    let bridge = Monomial::new(VarSet::interval(lo, lo + step - 1));
    let mut l_gens: Vec<Monomial> = alloc::vec![bridge];
    if k > t {
        l_gens.extend((1..=k - t).map(|i| Monomial::new(params.generator_support(i))));
    }
    let l_ideal = MonomialIdeal::minimalize(n, l_gens)?;
    let last = MonomialIdeal::minimalize(n, [Monomial::new(params.generator_support(k))])?;
    last.product_disjoint(&l_ideal)
}

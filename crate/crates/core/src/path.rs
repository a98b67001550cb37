//! Path ideals of the line graph and the closed forms for their projective
//! dimension, regularity and depth.
//!
//! `I(m,l,k)` is generated by `k` monomials of degree `m`; generator `i` is the
//! product of the variables `(i-1)(m-l)+1 ..= (i-1)(m-l)+m`, so consecutive
//! supports overlap in exactly `l` variables and the ambient ring has
//! `n = k(m-l)+l` variables. `J_m(L_n)` is the special case `l = m-1`.

use core::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::{VarSet, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathParams {
    m: u32,
    l: u32,
    k: u32,
    n: u32,
}

impl PathParams {
    pub fn new(m: u32, l: u32, k: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParams("path length m must be at least 2"));
        }
        if l < 1 || l >= m {
            return Err(Error::InvalidParams("overlap l must satisfy 1 <= l <= m-1"));
        }
        if k < 1 {
            return Err(Error::InvalidParams("generator count k must be at least 1"));
        }
        let n = (k as u64) * u64::from(m - l) + u64::from(l);
        if n > u64::from(MAX_VARS) {
            return Err(Error::AmbientTooLarge { n: n.min(u64::from(u32::MAX)) as u32 });
        }
        Ok(PathParams { m, l, k, n: n as u32 })
    }

    /// Parameters of `J_m(L_n)`, i.e. `l = m-1` and `k = n-m+1`.
    pub fn full_path(m: u32, n: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParams("path length m must be at least 2"));
        }
        if m > n {
            return Err(Error::InvalidParams("path length m exceeds vertex count n"));
        }
        Self::new(m, m - 1, n - m + 1)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Offset between consecutive generators, `m - l`.
    pub fn step(&self) -> u32 {
        self.m - self.l
    }

    /// Support of generator `i` (1-based).
    pub fn generator_support(&self, i: u32) -> VarSet {
        debug_assert!(i >= 1 && i <= self.k);
        let start = (i - 1) * self.step() + 1;
        VarSet::interval(start, start + self.m - 1)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let gens = (1..=self.k).map(|i| Monomial::new(self.generator_support(i)));
        MonomialIdeal::minimalize(self.n, gens).expect("path generators fit the ambient ring")
    }

    pub fn regime(&self) -> Regime {
        classify(self.m, self.l, self.k)
    }

    pub fn formulas(&self) -> FormulaResult {
        let pd = formula_pd(self);
        let depth_i = formula_depth(self);
        FormulaResult { pd, reg: formula_reg(self), depth_i, depth_ri: depth_i - 1 }
    }
}

/// Text form `m=3,l=1,k=2`.
impl fmt::Display for PathParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={},l={},k={}", self.m, self.l, self.k)
    }
}

pub fn make_path_ideal(params: &PathParams) -> MonomialIdeal {
    params.ideal()
}

/// `J_m(L_n)`.
pub fn make_full_path_ideal(m: u32, n: u32) -> Result<MonomialIdeal> {
    PathParams::full_path(m, n).map(|p| p.ideal())
}

/// Which closed form governs `(m, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `l < ceil(m/2)`.
    Small,
    /// `ceil(m/2) <= l` and `(m-l) | m`.
    Divisible,
    /// `ceil(m/2) <= l` and `m mod (m-l) = s >= 1`; regularity unknown.
    Residual,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Small => "THM3",
            Branch::Divisible => "THM4",
            Branch::Residual => "THM5",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The branch together with the residue `s = m mod (m-l)` and, outside the
/// `Small` branch, the decomposition `n = p * period + d` with `0 <= d < period`
/// where `period = 2m - l - s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regime {
    pub branch: Branch,
    pub s: u32,
    pub period: Option<u32>,
    pub p: Option<u32>,
    pub d: Option<u32>,
}

/// Branch of `(m, l)` alone; `m >= 2`, `1 <= l < m`.
pub fn classify_branch(m: u32, l: u32) -> (Branch, u32) {
    let s = m % (m - l);
    let half_up = m.div_ceil(2);
    let branch = if l < half_up {
        Branch::Small
    } else if s == 0 {
        Branch::Divisible
    } else {
        Branch::Residual
    };
    (branch, s)
}

pub fn classify(m: u32, l: u32, k: u32) -> Regime {
    let (branch, s) = classify_branch(m, l);
    if branch == Branch::Small {
        return Regime { branch, s, period: None, p: None, d: None };
    }
    let n = k * (m - l) + l;
    let period = 2 * m - l - s;
    Regime { branch, s, period: Some(period), p: Some(n / period), d: Some(n % period) }
}

/// Regularity from the closed forms; [`FormulaReg::Unknown`] where no closed
/// form is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaReg {
    Value(u32),
    Unknown,
}

impl FormulaReg {
    pub fn value(self) -> Option<u32> {
        match self {
            FormulaReg::Value(v) => Some(v),
            FormulaReg::Unknown => None,
        }
    }
}

impl fmt::Display for FormulaReg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaReg::Value(v) => write!(f, "{v}"),
            FormulaReg::Unknown => f.write_str("UNKNOWN"),
        }
    }
}

/// Closed-form invariants. `depth_i` is the depth of the module `I`
/// (`n - pd(I)`); `depth_ri` is the depth of `R/I`, one less.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub pd: u32,
    pub reg: FormulaReg,
    pub depth_i: u32,
    pub depth_ri: u32,
}

fn periodic_pd(p: u32, d: u32, m: u32) -> u32 {
    if d == m {
        2 * p
    } else {
        2 * p - 1
    }
}

pub fn formula_pd(params: &PathParams) -> u32 {
    let r = params.regime();
    match r.branch {
        Branch::Small => params.k - 1,
        Branch::Divisible | Branch::Residual => periodic_pd(r.p.unwrap_or(0), r.d.unwrap_or(0), params.m),
    }
}

pub fn formula_reg(params: &PathParams) -> FormulaReg {
    let (m, l, k) = (params.m, params.l, params.k);
    let r = params.regime();
    match r.branch {
        Branch::Small => FormulaReg::Value((k - 1) * (m - l - 1) + m),
        Branch::Divisible => {
            let (p, d) = (r.p.unwrap_or(0), r.d.unwrap_or(0));
            let base = p * (2 * m - l - 2);
            FormulaReg::Value(if d == m { base + m } else { base + 1 })
        }
        Branch::Residual => FormulaReg::Unknown,
    }
}

/// Depth of `I` from the ceiling/floor expressions, computed without going
/// through `formula_pd`.
pub fn formula_depth(params: &PathParams) -> u32 {
    let (m, l, k, n) = (params.m, params.l, params.k, params.n);
    let r = params.regime();
    match r.branch {
        Branch::Small => n - k + 1,
        Branch::Divisible | Branch::Residual => {
            let period = 2 * m - l - r.s;
            let shifted = n + m - l - r.s;
            n + 2 - shifted.div_ceil(period) - shifted / period
        }
    }
}

/// Closed forms for `J_m(L_n)` via `n = p(m+1) + d`, `0 <= d <= m`.
pub fn formula_jm(m: u32, n: u32) -> Result<FormulaResult> {
    if m < 2 || m > n {
        return Err(Error::InvalidParams("need 2 <= m <= n"));
    }
    let (p, d) = (n / (m + 1), n % (m + 1));
    let pd = periodic_pd(p, d, m);
    let reg = if d == m { p * (m - 1) + m } else { p * (m - 1) + 1 };
    Ok(FormulaResult { pd, reg: FormulaReg::Value(reg), depth_i: n - pd, depth_ri: n - pd - 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u32, l: u32, k: u32) -> PathParams {
        PathParams::new(m, l, k).unwrap()
    }

    fn ideal(n: u32, lists: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_index_lists(n, lists).unwrap()
    }

    #[test]
    fn generator_construction() {
        let p = params(3, 1, 2);
        assert_eq!(p.n(), 5);
        assert_eq!(p.ideal(), ideal(5, &[&[1, 2, 3], &[3, 4, 5]]));
        let q = params(2, 1, 3);
        assert_eq!(q.n(), 4);
        assert_eq!(q.ideal(), ideal(4, &[&[1, 2], &[2, 3], &[3, 4]]));
        let r = params(4, 2, 1);
        assert_eq!(r.n(), 4);
        assert_eq!(r.ideal(), ideal(4, &[&[1, 2, 3, 4]]));
    }

    #[test]
    fn consecutive_supports_overlap_in_l() {
        for m in 2..=6 {
            for l in 1..m {
                for k in 2..=4 {
                    let p = params(m, l, k);
                    for i in 1..k {
                        let a = p.generator_support(i);
                        let b = p.generator_support(i + 1);
                        assert_eq!(a.intersection(b).len(), l);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(PathParams::new(3, 3, 2).is_err());
        assert!(PathParams::new(3, 0, 2).is_err());
        assert!(PathParams::new(1, 1, 2).is_err());
        assert!(PathParams::new(3, 1, 0).is_err());
        assert!(PathParams::new(2, 1, 40).is_err());
        assert!(make_full_path_ideal(5, 4).is_err());
    }

    #[test]
    fn full_path_ideal_examples() {
        assert_eq!(make_full_path_ideal(2, 4).unwrap(), ideal(4, &[&[1, 2], &[2, 3], &[3, 4]]));
        assert_eq!(make_full_path_ideal(3, 5).unwrap(), ideal(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]));
        assert_eq!(make_full_path_ideal(4, 4).unwrap(), ideal(4, &[&[1, 2, 3, 4]]));
    }

    #[test]
    fn full_path_is_overlap_m_minus_one() {
        for m in 2..=6 {
            for n in m..=20 {
                assert_eq!(make_full_path_ideal(m, n).unwrap(), make_path_ideal(&params(m, m - 1, n - m + 1)));
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(3, 1, 2).branch, Branch::Small);
        let r = classify(2, 1, 3);
        assert_eq!((r.branch, r.s, r.p, r.d), (Branch::Divisible, 0, Some(1), Some(1)));
        let r = classify(5, 3, 2);
        assert_eq!((r.branch, r.s, r.p, r.d), (Branch::Residual, 1, Some(1), Some(1)));
    }

    #[test]
    fn branches_partition_legal_pairs() {
        for m in 2..=40u32 {
            for l in 1..m {
                let (branch, s) = classify_branch(m, l);
                let small = 2 * l < m + (m % 2); // l < ceil(m/2)
                let hits = [small, !small && s == 0, !small && s != 0];
                assert_eq!(hits.iter().filter(|h| **h).count(), 1);
                let expected = match hits.iter().position(|h| *h).unwrap() {
                    0 => Branch::Small,
                    1 => Branch::Divisible,
                    _ => Branch::Residual,
                };
                assert_eq!(branch, expected, "m={m} l={l}");
            }
        }
    }

    #[test]
    fn decomposition_is_exact() {
        for m in 2..=8 {
            for l in 1..m {
                for k in 1..=8 {
                    let Ok(p) = PathParams::new(m, l, k) else { continue };
                    let r = p.regime();
                    if let (Some(per), Some(q), Some(d)) = (r.period, r.p, r.d) {
                        assert_eq!(q * per + d, p.n());
                        assert!(d < per);
                    }
                }
            }
        }
    }

    #[test]
    fn pd_examples() {
        assert_eq!(formula_pd(&params(3, 1, 2)), 1);
        assert_eq!(formula_pd(&params(2, 1, 3)), 1);
        for m in 2..=7 {
            for l in 1..m {
                assert_eq!(formula_pd(&params(m, l, 1)), 0, "m={m} l={l}");
            }
        }
    }

    #[test]
    fn reg_examples() {
        assert_eq!(formula_reg(&params(3, 1, 2)), FormulaReg::Value(4));
        assert_eq!(formula_reg(&params(2, 1, 3)), FormulaReg::Value(2));
        assert_eq!(formula_reg(&params(5, 3, 2)), FormulaReg::Unknown);
    }

    #[test]
    fn depth_examples() {
        assert_eq!(formula_depth(&params(4, 1, 3)), 8);
        assert_eq!(formula_depth(&params(2, 1, 3)), 3);
        for m in 2..=7 {
            for l in 1..m {
                assert_eq!(formula_depth(&params(m, l, 1)), m);
            }
        }
    }

    #[test]
    fn depth_is_n_minus_pd_everywhere() {
        for m in 2..=12 {
            for l in 1..m {
                for k in 1..=30 {
                    let Ok(p) = PathParams::new(m, l, k) else { continue };
                    assert_eq!(formula_depth(&p), p.n() - formula_pd(&p), "{p}");
                    let f = p.formulas();
                    assert_eq!(f.depth_ri + 1, f.depth_i);
                }
            }
        }
    }

    #[test]
    fn jm_examples() {
        let f = formula_jm(2, 4).unwrap();
        assert_eq!((f.pd, f.reg), (1, FormulaReg::Value(2)));
        for m in 2..=8 {
            let f = formula_jm(m, m).unwrap();
            assert_eq!((f.pd, f.reg), (0, FormulaReg::Value(m)));
        }
        let f = formula_jm(3, 8).unwrap();
        assert_eq!((f.pd, f.reg), (3, FormulaReg::Value(5)));
    }

    #[test]
    fn jm_agrees_with_overlap_m_minus_one() {
        for m in 2..=6 {
            for n in m..=20 {
                let p = params(m, m - 1, n - m + 1);
                let jm = formula_jm(m, n).unwrap();
                assert_eq!(jm.pd, formula_pd(&p), "m={m} n={n}");
                assert_eq!(jm.reg, formula_reg(&p), "m={m} n={n}");
                assert_eq!(jm.depth_i, formula_depth(&p));
            }
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(alloc::format!("{}", params(3, 1, 2)), "m=3,l=1,k=2");
    }
}

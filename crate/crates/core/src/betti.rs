//! Graded Betti numbers of squarefree monomial ideals.
//!
//! Two independent routes:
//!
//! - Hochster's formula, `β_{i,j}(I) = Σ_{|W|=j} dim H̃_{j-i-2}(Δ[W])` with
//!   `Δ` the Stanley–Reisner complex of `I`;
//! - the Taylor complex on the generators tensored with the residue field.
//!   Tensoring keeps exactly the differential terms `S -> S \ {g}` with
//!   `lcm(S) = lcm(S \ {g})`, so the complex splits into one strand per
//!   multidegree and `β_{i,j}(I)` is the sum of `dim H_{i+1}` over the strands
//!   of total degree `j`.
//!
//! All tables are tables of the ideal `I`; the table of `R/I` is the shift
//! `i -> i + 1` and is never stored.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::chain::ChainComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::SparseMatrix;
use crate::monomial::MonomialIdeal;
use crate::simplicial::{reduced_homology_of_faces, SimplicialComplex, DEFAULT_VERTEX_CAP};
use crate::varset::VarSet;

/// Sparse table `(i, j) -> β_{i,j}` with only positive entries stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (u32, u32, u64)>>(entries: I) -> Self {
        let mut t = Self::new();
        for (i, j, b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn add(&mut self, i: u32, j: u32, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `(i, j, β)` in lexicographic order of `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (i, j, b) in other.iter() {
            self.add(i, j, b);
        }
    }

    /// Sum of `β_{i,j}` over all `(i, j)`.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn pd(&self) -> Option<u32> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn reg(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub pd: u32,
    pub reg: u32,
}

/// Depth of the module `I` and of `R/I` (one less).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Depth {
    pub depth_i: u32,
    pub depth_ri: u32,
}

pub fn invariants_of(table: &BettiTable) -> Result<Invariants> {
    match (table.pd(), table.reg()) {
        (Some(pd), Some(reg)) => Ok(Invariants { pd, reg }),
        _ => Err(Error::EmptyTable),
    }
}

/// Auslander–Buchsbaum: `depth(I) = n - pd(I)`, `depth(R/I) = depth(I) - 1`.
pub fn depth_of(ideal: &MonomialIdeal, table: &BettiTable) -> Result<Depth> {
    let pd = table.pd().ok_or(Error::EmptyTable)?;
    let depth_i = ideal.n().checked_sub(pd).ok_or(Error::InvalidParams("pd exceeds n"))?;
    let depth_ri = depth_i.checked_sub(1).ok_or(Error::InvalidParams("pd equals n"))?;
    Ok(Depth { depth_i, depth_ri })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    Hochster,
    Taylor,
    #[default]
    Auto,
    /// Both methods; disagreement is an error.
    Both,
}

/// Size limits for the two exponential methods.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest number of used variables for Hochster's formula.
    pub hochster_n: u32,
    /// Largest generator count for the Taylor complex.
    pub taylor_k: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { hochster_n: 16, taylor_k: 18 }
    }
}

/// Faces of the Stanley–Reisner complex inside `w`: the subsets of `w`
/// containing no generator support.
fn sr_faces_within(gens: &[VarSet], w: VarSet) -> Vec<VarSet> {
    w.subsets().filter(|s| !gens.iter().any(|g| g.is_subset(*s))).collect()
}

/// Stanley–Reisner complex of a proper nonzero ideal, found by testing every
/// subset of the variables.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    ideal.ensure_proper_nonzero()?;
    if ideal.n() > DEFAULT_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "variable count",
            value: ideal.n() as usize,
            cap: DEFAULT_VERTEX_CAP as usize,
        });
    }
    let gens: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let faces = sr_faces_within(&gens, VarSet::full(ideal.n()));
    SimplicialComplex::new(ideal.n(), faces)
}

pub fn betti_hochster(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_hochster_capped(ideal, field, Caps::default().hochster_n)
}

pub fn betti_hochster_capped(ideal: &MonomialIdeal, field: FieldSpec, cap: u32) -> Result<BettiTable> {
    ideal.ensure_proper_nonzero()?;
    let support = ideal.support();
    if support.len() > cap {
        return Err(Error::CapExceeded {
            what: "variables for Hochster",
            value: support.len() as usize,
            cap: cap as usize,
        });
    }
    let gens: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let mut table = BettiTable::new();
    for w in support.subsets() {
        // If some vertex of W lies in no generator inside W, the induced
        // complex is a cone over it and has no reduced homology.
        let covered = gens.iter().filter(|g| g.is_subset(w)).fold(VarSet::EMPTY, |acc, g| acc.union(*g));
        if covered != w || w.is_empty() {
            continue;
        }
        let faces = sr_faces_within(&gens, w);
        let homology = reduced_homology_of_faces(&faces, field)?;
        let j = w.len();
        for (t, &h) in homology.iter().enumerate() {
            // t indexes H̃_{t-1}; i = j - (t-1) - 2
            let i = j as i64 - t as i64 - 1;
            if h > 0 && i >= 0 {
                table.add(i as u32, j, h as u64);
            }
        }
    }
    Ok(table)
}

pub fn betti_taylor_tor(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_taylor_tor_capped(ideal, field, Caps::default().taylor_k)
}

pub fn betti_taylor_tor_capped(ideal: &MonomialIdeal, field: FieldSpec, cap: u32) -> Result<BettiTable> {
    ideal.ensure_proper_nonzero()?;
    let k = ideal.num_gens();
    if k > cap as usize || k > 30 {
        return Err(Error::CapExceeded { what: "generators for Taylor", value: k, cap: cap as usize });
    }
    let gens: Vec<u32> = ideal.gens().iter().map(|g| g.support().bits()).collect();
    let count = 1usize << k;
    let mut lcm = alloc::vec![0u32; count];
    for s in 1..count {
        let low = s.trailing_zeros() as usize;
        lcm[s] = lcm[s & (s - 1)] | gens[low];
    }
    let mut order: Vec<u32> = (1..count as u32).collect();
    order.sort_unstable_by_key(|&s| (lcm[s as usize], s.count_ones(), s));

    let mut table = BettiTable::new();
    let mut start = 0;
    while start < order.len() {
        let l = lcm[order[start] as usize];
        let mut end = start + 1;
        while end < order.len() && lcm[order[end] as usize] == l {
            end += 1;
        }
        let strand = &order[start..end];
        let j = l.count_ones();
        if strand.len() == 1 {
            let size = strand[0].count_ones();
            table.add(size - 1, j, 1);
        } else {
            for (size, h) in strand_homology(strand, &lcm, field)? {
                if h > 0 {
                    table.add(size - 1, j, h as u64);
                }
            }
        }
        start = end;
    }
    Ok(table)
}

/// Homology of one multidegree strand of the tensored Taylor complex.
/// `strand` lists the generator subsets with a common lcm, sorted by size.
fn strand_homology(strand: &[u32], lcm: &[u32], field: FieldSpec) -> Result<Vec<(u32, usize)>> {
    let min_size = strand[0].count_ones();
    let max_size = strand[strand.len() - 1].count_ones();
    let mut by_size: Vec<Vec<u32>> = alloc::vec![Vec::new(); (max_size - min_size + 1) as usize];
    for &s in strand {
        by_size[(s.count_ones() - min_size) as usize].push(s);
    }
    let target = lcm[strand[0] as usize];
    let mut boundaries = Vec::with_capacity(by_size.len().saturating_sub(1));
    for t in 1..by_size.len() {
        let lower = &by_size[t - 1];
        let mut mat = SparseMatrix::new(lower.len());
        for &s in &by_size[t] {
            let mut row = Vec::new();
            let mut rest = s;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let face = s ^ bit;
                if lcm[face as usize] == target {
                    if let Ok(idx) = lower.binary_search(&face) {
                        row.push((idx as u32, if pos % 2 == 0 { 1 } else { -1 }));
                    }
                }
                pos += 1;
            }
            mat.push_row(row);
        }
        boundaries.push(mat);
    }
    let dims = by_size.iter().map(|v| v.len()).collect();
    let cc = ChainComplex::new(min_size as i32, dims, boundaries)?;
    Ok(cc.homology(field).into_iter().enumerate().map(|(t, h)| (min_size + t as u32, h)).collect())
}

/// Betti table by the requested method. `Auto` uses Hochster when the number
/// of used variables is at most the generator count, otherwise Taylor, and
/// falls back to the other method when the preferred one is over its cap.
pub fn betti(ideal: &MonomialIdeal, field: FieldSpec, method: Method, caps: Caps) -> Result<BettiTable> {
    match method {
        Method::Hochster => betti_hochster_capped(ideal, field, caps.hochster_n),
        Method::Taylor => betti_taylor_tor_capped(ideal, field, caps.taylor_k),
        Method::Both => {
            let h = betti_hochster_capped(ideal, field, caps.hochster_n)?;
            let t = betti_taylor_tor_capped(ideal, field, caps.taylor_k)?;
            if h == t {
                Ok(h)
            } else {
                Err(Error::MethodDisagreement)
            }
        }
        Method::Auto => {
            ideal.ensure_proper_nonzero()?;
            let n = ideal.support().len() as usize;
            let k = ideal.num_gens();
            let hochster_ok = n <= caps.hochster_n as usize;
            let taylor_ok = k <= caps.taylor_k as usize;
            let prefer_hochster = n <= k;
            match (prefer_hochster, hochster_ok, taylor_ok) {
                (true, true, _) | (false, true, false) => betti_hochster_capped(ideal, field, caps.hochster_n),
                (_, _, true) => betti_taylor_tor_capped(ideal, field, caps.taylor_k),
                _ => Err(Error::CapExceeded {
                    what: "variables and generators",
                    value: n.min(k),
                    cap: caps.hochster_n.min(caps.taylor_k) as usize,
                }),
            }
        }
    }
}

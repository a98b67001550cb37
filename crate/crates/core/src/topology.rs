//! Clutters, their cover complexes, and the certificates attached to them:
//! shelling orders, the free vertex property over all minors, and the
//! sequentially Cohen–Macaulay test.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{antichain, Monomial, MonomialIdeal};
use crate::path::PathParams;
use crate::simplicial::{reduced_homology_dims_capped, SimplicialComplex};
use crate::varset::{VarSet, MAX_VARS};

pub const DEFAULT_SHELLING_CAP: usize = 12;
pub const DEFAULT_MINOR_CAP: u32 = 12;
pub const DEFAULT_SCM_CAP: u32 = 10;

/// A family of edges, none contained in another, on a vertex set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: u32,
    vertices: VarSet,
    edges: Vec<VarSet>,
}

impl Clutter {
    /// Clutter on `{1..n}`; non-minimal edges are dropped.
    pub fn new<I: IntoIterator<Item = VarSet>>(n: u32, edges: I) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::AmbientTooLarge { n });
        }
        let edges: Vec<VarSet> = edges.into_iter().collect();
        if let Some(bad) = edges.iter().find(|e| !e.fits(n)) {
            return Err(Error::IndexOutOfRange { index: bad.last().unwrap_or(0), n });
        }
        Ok(Clutter { n, vertices: VarSet::full(n), edges: antichain(edges) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> VarSet {
        self.vertices
    }

    pub fn edges(&self) -> &[VarSet] {
        &self.edges
    }

    /// Edge ideal.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.n, self.edges.iter().map(|e| Monomial::new(*e)))
            .expect("edges fit the ambient size")
    }
}

/// Compact form `n=5; {1,2,3},{3,4,5}`.
impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        for (pos, e) in self.edges.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn clutter_of(ideal: &MonomialIdeal) -> Clutter {
    Clutter {
        n: ideal.n(),
        vertices: VarSet::full(ideal.n()),
        edges: ideal.gens().iter().map(|g| g.support()).collect(),
    }
}

/// Inclusion-minimal transversals, built edge by edge and canonically sorted.
pub fn minimal_vertex_covers(c: &Clutter) -> Vec<VarSet> {
    let mut covers = alloc::vec![VarSet::EMPTY];
    for &edge in &c.edges {
        let mut next = Vec::with_capacity(covers.len() * 2);
        for cover in covers {
            if !cover.is_disjoint(edge) {
                next.push(cover);
            } else {
                next.extend(edge.iter().map(|v| cover.union(VarSet::singleton(v))));
            }
        }
        covers = antichain(next);
    }
    covers
}

/// `Δ_C`: facets are the complements of the minimal vertex covers.
pub fn cover_complex(c: &Clutter) -> SimplicialComplex {
    let facets: Vec<VarSet> = minimal_vertex_covers(c).into_iter().map(|cov| c.vertices.difference(cov)).collect();
    SimplicialComplex::new(c.n, facets).expect("complements stay within the vertex set")
}

/// An ordering of the facets of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder(pub Vec<VarSet>);

/// Direct check of the shelling condition: for all `i < j` some
/// `x ∈ F_j \ F_i` has `F_j \ F_l = {x}` for some `l < j`.
pub fn is_valid_shelling(order: &[VarSet]) -> bool {
    for j in 0..order.len() {
        for i in 0..j {
            let witnessed = order[j]
                .difference(order[i])
                .iter()
                .any(|x| (0..j).any(|l| order[j].difference(order[l]) == VarSet::singleton(x)));
            if !witnessed {
                return false;
            }
        }
    }
    true
}

fn can_append(facets: &[VarSet], used: u32, candidate: VarSet) -> bool {
    if used == 0 {
        return true;
    }
    let mut singles = VarSet::EMPTY;
    for (idx, f) in facets.iter().enumerate() {
        if used & (1 << idx) != 0 {
            let diff = candidate.difference(*f);
            if diff.len() == 1 {
                singles = singles.union(diff);
            }
        }
    }
    facets
        .iter()
        .enumerate()
        .filter(|(idx, _)| used & (1 << idx) != 0)
        .all(|(_, f)| !candidate.difference(*f).is_disjoint(singles))
}

pub fn find_shelling(delta: &SimplicialComplex) -> Result<Option<ShellingOrder>> {
    find_shelling_capped(delta, DEFAULT_SHELLING_CAP)
}

/// Backtracking over facet orders. Whether a facet may come next depends
/// only on the set already placed, so dead sets are memoized.
pub fn find_shelling_capped(delta: &SimplicialComplex, cap: usize) -> Result<Option<ShellingOrder>> {
    let count = delta.facets().len();
    if count > cap || count > 24 {
        return Err(Error::CapExceeded { what: "facet count", value: count, cap: cap.min(24) });
    }
    let mut facets = delta.facets().to_vec();
    // larger facets first
    facets.sort_by_key(|f| (core::cmp::Reverse(f.len()), *f));
    let full = if count == 32 { u32::MAX } else { (1u32 << count) - 1 };
    let mut dead = alloc::vec![false; 1usize << count];
    let mut order: Vec<usize> = Vec::with_capacity(count);

    fn search(facets: &[VarSet], used: u32, full: u32, dead: &mut [bool], order: &mut Vec<usize>) -> bool {
        if used == full {
            return true;
        }
        if dead[used as usize] {
            return false;
        }
        for idx in 0..facets.len() {
            if used & (1 << idx) == 0 && can_append(facets, used, facets[idx]) {
                order.push(idx);
                if search(facets, used | (1 << idx), full, dead, order) {
                    return true;
                }
                order.pop();
            }
        }
        dead[used as usize] = true;
        false
    }

    if search(&facets, 0, full, &mut dead, &mut order) {
        Ok(Some(ShellingOrder(order.into_iter().map(|i| facets[i]).collect())))
    } else {
        Ok(None)
    }
}

/// Variables set to 0 (edges through them vanish) and to 1 (they are
/// removed from every edge).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Assignment {
    pub zeros: VarSet,
    pub ones: VarSet,
}

/// Edges of the minor of `c` under `a`, or `None` when the resulting ideal is
/// zero or the unit ideal.
pub fn minor_edges(c: &Clutter, a: Assignment) -> Option<Vec<VarSet>> {
    let mut edges = Vec::with_capacity(c.edges.len());
    for e in &c.edges {
        if !e.is_disjoint(a.zeros) {
            continue;
        }
        let shrunk = e.difference(a.ones);
        if shrunk.is_empty() {
            return None;
        }
        edges.push(shrunk);
    }
    if edges.is_empty() {
        return None;
    }
    Some(antichain(edges))
}

/// Every proper nonzero minor, over all `3^n` assignments (the identity
/// assignment included).
pub struct Minors<'a> {
    clutter: &'a Clutter,
    next: u64,
    end: u64,
}

impl Iterator for Minors<'_> {
    type Item = (Assignment, Clutter);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.end {
            let mut code = self.next;
            self.next += 1;
            let mut a = Assignment::default();
            for v in 1..=self.clutter.n {
                match code % 3 {
                    1 => a.zeros.insert(v),
                    2 => a.ones.insert(v),
                    _ => {}
                }
                code /= 3;
            }
            if let Some(edges) = minor_edges(self.clutter, a) {
                let minor = Clutter {
                    n: self.clutter.n,
                    vertices: self.clutter.vertices.difference(a.zeros.union(a.ones)),
                    edges,
                };
                return Some((a, minor));
            }
        }
        None
    }
}

pub fn minors(c: &Clutter) -> Result<Minors<'_>> {
    minors_capped(c, DEFAULT_MINOR_CAP)
}

pub fn minors_capped(c: &Clutter, cap: u32) -> Result<Minors<'_>> {
    if c.n > cap || c.n > 30 {
        return Err(Error::CapExceeded { what: "vertices for minors", value: c.n as usize, cap: cap as usize });
    }
    Ok(Minors { clutter: c, next: 0, end: 3u64.pow(c.n) })
}

fn free_vertex_of(edges: &[VarSet]) -> Option<u32> {
    let mut once = VarSet::EMPTY;
    let mut more = VarSet::EMPTY;
    for e in edges {
        more = more.union(once.intersection(*e));
        once = once.union(*e);
    }
    once.difference(more).first()
}

/// Smallest vertex lying in exactly one edge.
pub fn has_free_vertex(c: &Clutter) -> Option<u32> {
    free_vertex_of(&c.edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeVertexReport {
    pub holds: bool,
    /// A minor without a free vertex, when one exists.
    pub counterexample: Option<(Assignment, Clutter)>,
    /// Distinct minors examined.
    pub distinct_minors: usize,
}

pub fn free_vertex_property(c: &Clutter) -> Result<FreeVertexReport> {
    free_vertex_property_capped(c, DEFAULT_MINOR_CAP)
}

pub fn free_vertex_property_capped(c: &Clutter, cap: u32) -> Result<FreeVertexReport> {
    let mut seen: BTreeSet<Vec<VarSet>> = BTreeSet::new();
    for (a, minor) in minors_capped(c, cap)? {
        if !seen.insert(minor.edges.clone()) {
            continue;
        }
        if has_free_vertex(&minor).is_none() {
            return Ok(FreeVertexReport {
                holds: false,
                counterexample: Some((a, minor)),
                distinct_minors: seen.len(),
            });
        }
    }
    Ok(FreeVertexReport { holds: true, counterexample: None, distinct_minors: seen.len() })
}

/// Constructive free vertex for minors of interval clutters such as
/// `C(m,l,k)`: the least vertex of the edge whose least vertex is smallest.
/// Returns the vertex only after confirming it lies in a single edge.
pub fn interval_minor_free_vertex(edges: &[VarSet]) -> Option<u32> {
    let first = edges.iter().min_by_key(|e| e.first())?;
    let d = first.first()?;
    (edges.iter().filter(|e| e.contains(d)).count() == 1).then_some(d)
}

/// Free vertex property of `C(m,l,k)` using [`interval_minor_free_vertex`]
/// on every minor, falling back to a generic search when the constructive
/// vertex is not free. `constructive_failures` counts those fallbacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFreeVertexReport {
    pub holds: bool,
    pub constructive_failures: usize,
}

pub fn path_free_vertex_property(params: &PathParams) -> Result<PathFreeVertexReport> {
    let c = clutter_of(&params.ideal());
    let mut holds = true;
    let mut constructive_failures = 0;
    for (_, minor) in minors(&c)? {
        if interval_minor_free_vertex(&minor.edges).is_none() {
            constructive_failures += 1;
            if has_free_vertex(&minor).is_none() {
                holds = false;
            }
        }
    }
    Ok(PathFreeVertexReport { holds, constructive_failures })
}

/// Reisner's criterion on a pure complex: every link (of `∅` too) has
/// vanishing reduced homology below its dimension.
pub fn is_cohen_macaulay(delta: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let Some(dim) = delta.dim() else { return Ok(true) };
    for sigma in delta.faces() {
        let link = delta.link(sigma);
        let link_dim = dim - sigma.len() as i32;
        let h = reduced_homology_dims_capped(&link, field, MAX_VARS)?;
        // h[t] is H̃_{t-1}
        if h.iter().enumerate().any(|(t, &v)| (t as i32 - 1) < link_dim && v != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_sequentially_cm(delta: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    is_sequentially_cm_capped(delta, field, DEFAULT_SCM_CAP)
}

/// Duval's criterion: every pure `i`-skeleton is Cohen–Macaulay.
pub fn is_sequentially_cm_capped(delta: &SimplicialComplex, field: FieldSpec, cap: u32) -> Result<bool> {
    let used = delta.vertices().len();
    if used > cap {
        return Err(Error::CapExceeded { what: "vertices for sequential CM", value: used as usize, cap: cap as usize });
    }
    let Some(dim) = delta.dim() else { return Ok(true) };
    for i in 0..=dim {
        if !is_cohen_macaulay(&delta.pure_skeleton(i), field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

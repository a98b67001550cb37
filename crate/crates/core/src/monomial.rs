//! Squarefree monomials and the monomial-ideal operations used throughout:
//! minimalization, membership, sum, intersection and disjoint product.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

/// A squarefree monomial, identified with its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(VarSet);

impl Monomial {
    pub const ONE: Monomial = Monomial(VarSet::EMPTY);

    pub fn new(support: VarSet) -> Self {
        Monomial(support)
    }

    /// The product `x_{i_1} * ... * x_{i_r}`; repeated indices collapse.
    pub fn from_vars(vars: &[u32]) -> Result<Self> {
        VarSet::from_indices(vars.iter().copied()).map(Monomial)
    }

    pub fn support(self) -> VarSet {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.len()
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0.union(other.0))
    }

    pub fn is_divisible_by_var(self, i: u32) -> bool {
        self.0.contains(i)
    }

    pub fn vars(self) -> crate::varset::Iter {
        self.0.iter()
    }
}

/// Text form `x1*x2*x3`; the empty product prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (pos, i) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A squarefree monomial ideal in `n` variables, stored by its minimal
/// generators in canonical (lexicographic) order.
///
/// Because generators are always minimalized and sorted, `==` is equality of
/// ideals. An empty generator list is the zero ideal; the generator `1`
/// makes it the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: u32,
    gens: Vec<Monomial>,
}

fn check_ambient(n: u32) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::AmbientTooLarge { n })
    } else {
        Ok(())
    }
}

/// Removes every set that contains another one from the family and sorts
/// the survivors canonically.
pub(crate) fn antichain(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// The zero ideal of `k[x_1..x_n]`.
    pub fn zero(n: u32) -> Result<Self> {
        check_ambient(n)?;
        Ok(MonomialIdeal { n, gens: Vec::new() })
    }

    /// Minimal generators of the ideal generated by `raw`.
    pub fn minimalize<I>(n: u32, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        check_ambient(n)?;
        let mut supports = Vec::new();
        for m in raw {
            if !m.0.fits(n) {
                let index = m.0.last().unwrap_or(0);
                return Err(Error::IndexOutOfRange { index, n });
            }
            supports.push(m.0);
        }
        let gens = antichain(supports).into_iter().map(Monomial).collect();
        Ok(MonomialIdeal { n, gens })
    }

    /// Convenience constructor from index lists, e.g. `&[&[1, 2], &[2, 3]]`.
    pub fn from_index_lists(n: u32, lists: &[&[u32]]) -> Result<Self> {
        let mut raw = Vec::with_capacity(lists.len());
        for l in lists {
            let m = Monomial::from_vars(l)
                .map_err(|_| Error::IndexOutOfRange { index: l.iter().copied().max().unwrap_or(0), n })?;
            raw.push(m);
        }
        Self::minimalize(n, raw)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    /// Zero and unit ideals are rejected by the homological routines.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Union of the supports of all generators.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.0))
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    /// Whether every generator has the same degree.
    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn contains(&self, m: Monomial) -> Result<bool> {
        if !m.0.fits(self.n) {
            return Err(Error::IndexOutOfRange { index: m.0.last().unwrap_or(0), n: self.n });
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::AmbientMismatch { left: self.n, right: other.n })
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Self::minimalize(self.n, self.gens.iter().chain(other.gens.iter()).copied())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let lcms = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(*b)));
        Self::minimalize(self.n, lcms)
    }

    /// Product of two ideals living in disjoint sets of variables.
    pub fn product_disjoint(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        if !self.support().is_disjoint(other.support()) {
            return Err(Error::OverlappingSupport);
        }
        let products = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(*b)));
        Self::minimalize(self.n, products)
    }

    /// Generators divisible by `x_i`, and the rest.
    pub fn partition_by_var(&self, i: u32) -> (Vec<Monomial>, Vec<Monomial>) {
        self.gens.iter().partition(|g| g.is_divisible_by_var(i))
    }
}

/// Text form `n=5; (x1*x2*x3, x3*x4*x5)`; the zero ideal prints as `(0)`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; (", self.n)?;
        if self.gens.is_empty() {
            f.write_str("0")?;
        }
        for (pos, g) in self.gens.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

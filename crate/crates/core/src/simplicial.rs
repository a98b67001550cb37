//! Simplicial complexes given by facets, and reduced simplicial homology.

use alloc::vec::Vec;
use core::fmt;

use crate::chain::ChainComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::SparseMatrix;
use crate::varset::{VarSet, MAX_VARS};

/// Default vertex cap for homology computations.
pub const DEFAULT_VERTEX_CAP: u32 = 20;

/// Keeps the inclusion-maximal members of a family, canonically sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (core::cmp::Reverse(s.len()), *s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// A simplicial complex on the vertex set `{1..n}`, stored by its facets.
///
/// No facets at all is the void complex `{}`; the single facet `∅` is the
/// irrelevant complex `{∅}`. The two differ in reduced homology.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal entries are dropped.
    pub fn new<I: IntoIterator<Item = VarSet>>(n: u32, faces: I) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::AmbientTooLarge { n });
        }
        let faces: Vec<VarSet> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.fits(n)) {
            return Err(Error::IndexOutOfRange { index: bad.last().unwrap_or(0), n });
        }
        Ok(SimplicialComplex { n, facets: maximal_sets(faces) })
    }

    pub fn void(n: u32) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn irrelevant(n: u32) -> Self {
        SimplicialComplex { n, facets: alloc::vec![VarSet::EMPTY] }
    }

    /// Full simplex on `vertices`.
    pub fn simplex(n: u32, vertices: VarSet) -> Result<Self> {
        Self::new(n, [vertices])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, or `None` for the void complex. `{∅}` has dimension -1.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.len() as i32 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, sorted by size and then canonically.
    pub fn faces(&self) -> Vec<VarSet> {
        let mut all: Vec<VarSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort_by_key(|s| (s.len(), *s));
        all.dedup();
        all
    }

    /// Vertices lying in some face.
    pub fn vertices(&self) -> VarSet {
        self.facets.iter().fold(VarSet::EMPTY, |a, f| a.union(*f))
    }

    /// Induced subcomplex on `w`.
    pub fn induced(&self, w: VarSet) -> Self {
        if self.is_void() {
            return self.clone();
        }
        let faces: Vec<VarSet> = self.facets.iter().map(|f| f.intersection(w)).collect();
        SimplicialComplex { n: self.n, facets: maximal_sets(faces) }
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`; void if `σ` is not a face.
    pub fn link(&self, sigma: VarSet) -> Self {
        let faces: Vec<VarSet> =
            self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|f| f.difference(sigma)).collect();
        SimplicialComplex { n: self.n, facets: maximal_sets(faces) }
    }

    /// Subcomplex generated by the faces of dimension exactly `i`; for
    /// `i <= dim` this is the pure `i`-skeleton.
    pub fn pure_skeleton(&self, i: i32) -> Self {
        let size = (i + 1) as u32;
        let mut faces: Vec<VarSet> = Vec::new();
        for f in &self.facets {
            if f.len() < size {
                continue;
            }
            faces.extend(f.subsets().filter(|s| s.len() == size));
        }
        SimplicialComplex { n: self.n, facets: maximal_sets(faces) }
    }
}

/// Facets in compact form, `n=5; {1,2,3},{3,4,5}`.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        for (pos, face) in self.facets.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{face}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Augmented simplicial chain complex on an explicit face list (closed under
/// subsets, containing `∅` unless empty), starting in degree -1.
pub fn augmented_chain_complex(faces: &[VarSet]) -> Result<ChainComplex> {
    if faces.is_empty() {
        return ChainComplex::new(-1, Vec::new(), Vec::new());
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0) as usize;
    let mut by_size: Vec<Vec<VarSet>> = alloc::vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.len() as usize].push(*f);
    }
    for group in &mut by_size {
        group.sort();
    }
    let mut boundaries = Vec::with_capacity(top);
    for size in 1..=top {
        let lower = &by_size[size - 1];
        let mut mat = SparseMatrix::new(lower.len());
        for face in &by_size[size] {
            let mut row = Vec::with_capacity(size);
            for (pos, v) in face.iter().enumerate() {
                let mut sub = *face;
                sub.remove(v);
                let idx = lower.binary_search(&sub).map_err(|_| Error::NotAComplex { degree: size as i32 - 1 })?;
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                row.push((idx as u32, sign));
            }
            mat.push_row(row);
        }
        boundaries.push(mat);
    }
    let dims = by_size.iter().map(|g| g.len()).collect();
    ChainComplex::new(-1, dims, boundaries)
}

/// Reduced homology dimensions of the complex whose faces are listed;
/// entry `t` is `H̃_{t-1}`.
pub fn reduced_homology_of_faces(faces: &[VarSet], field: FieldSpec) -> Result<Vec<usize>> {
    Ok(augmented_chain_complex(faces)?.homology(field))
}

/// `dim H̃_d(Δ; F)` for `d = -1 ..= dim Δ`; entry `t` holds `d = t - 1`.
/// The void complex has no reduced homology and yields an empty list.
pub fn reduced_homology_dims(delta: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    reduced_homology_dims_capped(delta, field, DEFAULT_VERTEX_CAP)
}

pub fn reduced_homology_dims_capped(delta: &SimplicialComplex, field: FieldSpec, cap: u32) -> Result<Vec<usize>> {
    let used = delta.vertices().len();
    if used > cap {
        return Err(Error::CapExceeded { what: "vertex count", value: used as usize, cap: cap as usize });
    }
    reduced_homology_of_faces(&delta.faces(), field)
}

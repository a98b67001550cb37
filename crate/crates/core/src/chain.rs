//! Finite chain complexes with integer boundary matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::SparseMatrix;

/// `C_a <- C_{a+1} <- ... <- C_b` with explicit bases.
///
/// `boundaries[t - 1]` is the map out of degree `min_degree + t`; it has one
/// sparse row per basis element (the image, written in the basis of the degree
/// below). Construction checks that consecutive maps compose to zero over `Z`,
/// hence over every field.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    min_degree: i32,
    dims: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(min_degree: i32, dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if dims.is_empty() {
            if !boundaries.is_empty() {
                return Err(Error::NotAComplex { degree: min_degree });
            }
        } else if boundaries.len() + 1 != dims.len() {
            return Err(Error::NotAComplex { degree: min_degree });
        }
        for (t, b) in boundaries.iter().enumerate() {
            if b.nrows() != dims[t + 1] || b.ncols() != dims[t] {
                return Err(Error::NotAComplex { degree: min_degree + t as i32 + 1 });
            }
        }
        let cc = ChainComplex { min_degree, dims, boundaries };
        cc.check_composition()?;
        Ok(cc)
    }

    fn check_composition(&self) -> Result<()> {
        for t in 1..self.boundaries.len() {
            let lower = &self.boundaries[t - 1];
            for row in self.boundaries[t].rows() {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for &(c, v) in row {
                    for &(c2, v2) in &lower.rows()[c as usize] {
                        *acc.entry(c2).or_insert(0) += v * v2;
                    }
                }
                if acc.values().any(|v| *v != 0) {
                    return Err(Error::NotAComplex { degree: self.min_degree + t as i32 + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn min_degree(&self) -> i32 {
        self.min_degree
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Homology dimensions over `field`, indexed from `min_degree`.
    pub fn homology(&self, field: FieldSpec) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| b.rank(field)).collect();
        (0..self.dims.len())
            .map(|t| {
                let out = if t == 0 { 0 } else { ranks[t - 1] };
                let inc = ranks.get(t).copied().unwrap_or(0);
                self.dims[t] - out - inc
            })
            .collect()
    }
}

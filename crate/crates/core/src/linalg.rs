//! Exact rank of small integer matrices over `GF(2)`, `GF(p)` and `Q`.
//!
//! Matrices arrive as sparse rows with integer entries (boundary matrices
//! have entries in `{-1, 0, 1}`). Over `Q` elimination is fraction-free:
//! a row is reduced as `a * row - b * pivot` and then divided by the gcd of
//! its entries. It runs in `i64` with checked arithmetic and reruns in
//! arbitrary precision if an intermediate overflows.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::FieldSpec;

/// Sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(u32, i64)>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    /// Appends a row; entries may come in any order and may repeat a column.
    pub fn push_row(&mut self, mut entries: SparseRow) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut row: SparseRow = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            debug_assert!((c as usize) < self.ncols);
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|e| e.1 != 0);
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows.is_empty() || self.ncols == 0 {
            return 0;
        }
        match field {
            FieldSpec::Gf2 => rank_gf2(self),
            FieldSpec::Gfp(p) => rank_gfp(self, p),
            FieldSpec::Rational => rank_rational(self),
        }
    }
}

fn rank_gf2(mat: &SparseMatrix) -> usize {
    let words = mat.ncols.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; mat.ncols];
    let mut rank = 0;
    for row in &mat.rows {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                bits[c as usize / 64] |= 1 << (c % 64);
            }
        }
        while let Some(lead) = leading_bit(&bits) {
            match &pivots[lead] {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p).skip(lead / 64) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots[lead] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    bits.iter().position(|w| *w != 0).map(|i| i * 64 + bits[i].trailing_zeros() as usize)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_gfp(mat: &SparseMatrix, p: u32) -> usize {
    let p = u64::from(p);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; mat.ncols];
    let mut rank = 0;
    for row in &mat.rows {
        let mut dense = vec![0u64; mat.ncols];
        for &(c, v) in row {
            dense[c as usize] = v.rem_euclid(p as i64) as u64;
        }
        let mut start = 0;
        while let Some(lead) = (start..mat.ncols).find(|&c| dense[c] != 0) {
            match &pivots[lead] {
                Some(piv) => {
                    let factor = dense[lead];
                    for c in lead..mat.ncols {
                        if piv[c] != 0 {
                            dense[c] = (dense[c] + p - factor * piv[c] % p) % p;
                        }
                    }
                    start = lead + 1;
                }
                None => {
                    let inv = inv_mod(dense[lead], p);
                    for x in dense.iter_mut().skip(lead) {
                        *x = *x * inv % p;
                    }
                    pivots[lead] = Some(dense);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Integer arithmetic needed by fraction-free elimination. Operations
/// return `None` on overflow.
trait ExactInt: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl ExactInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    // i64::MIN is treated as overflow so that abs and gcd stay in range
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other).filter(|v| *v != i64::MIN)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other).filter(|v| *v != i64::MIN)
    }
    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.abs(), other.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        num_integer_gcd(self.abs(), other.abs())
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_one(&self) -> bool {
        *self == BigInt::from(1)
    }
}

fn num_integer_gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !Zero::is_zero(&b) {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Divides the row by the gcd of its entries and makes the leading entry positive.
fn normalize<T: ExactInt>(row: &mut [(u32, T)]) -> Option<()> {
    let Some(first) = row.first() else { return Some(()) };
    let mut g = first.1.gcd(&first.1);
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = row[0].1.is_negative();
    if !g.is_one() {
        for e in row.iter_mut() {
            e.1 = e.1.div_exact(&g);
        }
    }
    if flip {
        for e in row.iter_mut() {
            e.1 = e.1.neg()?;
        }
    }
    Some(())
}

/// `a * row - b * pivot` for `a` = pivot lead, `b` = row lead; the leading
/// column cancels.
fn eliminate<T: ExactInt>(row: &[(u32, T)], pivot: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let a = pivot[0].1.clone();
    let b = row[0].1.clone();
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            let v = a.mul(&row[i].1)?;
            i += 1;
            (row[i - 1].0, v)
        } else if take_piv {
            let v = T::from_i64(0).sub(&b.mul(&pivot[j].1)?)?;
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = a.mul(&row[i].1)?.sub(&b.mul(&pivot[j].1)?)?;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    Some(out)
}

fn rank_fraction_free<T: ExactInt>(mat: &SparseMatrix) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<(u32, T)>>> = vec![None; mat.ncols];
    let mut rank = 0;
    for src in &mat.rows {
        if src.iter().any(|e| e.1 == i64::MIN) {
            return None;
        }
        let mut row: Vec<(u32, T)> = src.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        normalize(&mut row)?;
        while let Some(&(lead, _)) = row.first() {
            match &pivots[lead as usize] {
                Some(piv) => {
                    row = eliminate(&row, piv)?;
                    normalize(&mut row)?;
                }
                None => {
                    pivots[lead as usize] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

fn rank_rational(mat: &SparseMatrix) -> usize {
    rank_fraction_free::<i64>(mat)
        .or_else(|| rank_fraction_free::<BigInt>(mat))
        .expect("arbitrary-precision elimination cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_dense(rows: &[&[i64]]) -> SparseMatrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::new(ncols);
        for r in rows {
            m.push_row(r.iter().enumerate().map(|(c, &v)| (c as u32, v)).collect());
        }
        m
    }

    #[test]
    fn identity_and_zero() {
        let id = from_dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        for f in [FieldSpec::Gf2, FieldSpec::Gfp(3), FieldSpec::Rational] {
            assert_eq!(id.rank(f), 3);
        }
        assert_eq!(from_dense(&[&[0, 0], &[0, 0]]).rank(FieldSpec::Rational), 0);
        assert_eq!(SparseMatrix::new(0).rank(FieldSpec::Gf2), 0);
    }

    #[test]
    fn characteristic_dependence() {
        // det = 2: singular over GF(2), regular elsewhere
        let m = from_dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank(FieldSpec::Gf2), 1);
        assert_eq!(m.rank(FieldSpec::Gfp(3)), 2);
        assert_eq!(m.rank(FieldSpec::Rational), 2);
        // det = 3
        let m = from_dense(&[&[2, 1], &[1, 2]]);
        assert_eq!(m.rank(FieldSpec::Gfp(3)), 1);
        assert_eq!(m.rank(FieldSpec::Gf2), 2);
    }

    #[test]
    fn triangle_boundary() {
        // edges 12, 13, 23 as rows over vertices 1, 2, 3
        let m = from_dense(&[&[-1, 1, 0], &[-1, 0, 1], &[0, -1, 1]]);
        for f in [FieldSpec::Gf2, FieldSpec::Gfp(5), FieldSpec::Rational] {
            assert_eq!(m.rank(f), 2);
        }
    }

    #[test]
    fn bigint_path_agrees() {
        let m = from_dense(&[&[3, 5, 7], &[2, 4, 6], &[1, 1, 2]]);
        assert_eq!(rank_fraction_free::<i64>(&m), rank_fraction_free::<BigInt>(&m));
        let huge = from_dense(&[&[2, 1], &[3, i64::MAX]]);
        assert_eq!(rank_fraction_free::<i64>(&huge), None);
        assert_eq!(huge.rank(FieldSpec::Rational), 2);
    }

    /// Rank over Q by exact Gaussian elimination on i128 fractions of small
    /// matrices; independent of the fraction-free routine.
    fn rank_by_fractions(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<(i128, i128)>> = rows.iter().map(|r| r.iter().map(|&v| (v as i128, 1)).collect()).collect();
        fn g(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                g(b, a % b)
            }
        }
        fn red((n, d): (i128, i128)) -> (i128, i128) {
            if n == 0 {
                return (0, 1);
            }
            let k = g(n, d);
            let (n, d) = (n / k, d / k);
            if d < 0 {
                (-n, -d)
            } else {
                (n, d)
            }
        }
        let ncols = a.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..a.len()).find(|&r| a[r][c].0 != 0) else { continue };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && a[r][c].0 != 0 {
                    let f = red((a[r][c].0 * a[rank][c].1, a[r][c].1 * a[rank][c].0));
                    let pivot = a[rank].clone();
                    for (x, q) in a[r].iter_mut().zip(&pivot) {
                        let t = red((f.0 * q.0, f.1 * q.1));
                        *x = red((x.0 * t.1 - t.0 * x.1, x.1 * t.1));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn rational_rank_matches_fraction_oracle(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 1..6)) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = from_dense(&refs);
            prop_assert_eq!(m.rank(FieldSpec::Rational), rank_by_fractions(&rows));
        }

        #[test]
        fn rank_bounded_and_field_ordered(rows in prop::collection::vec(prop::collection::vec(-1i64..=1, 6), 1..8)) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = from_dense(&refs);
            let q = m.rank(FieldSpec::Rational);
            prop_assert!(q <= rows.len().min(6));
            // reduction mod p can only lose rank
            prop_assert!(m.rank(FieldSpec::Gf2) <= q);
            prop_assert!(m.rank(FieldSpec::Gfp(3)) <= q);
        }
    }
}

use std::fmt;

use crate::error::{GroupError, Result};
use crate::group::GroupElement;

/// Largest supported dimension (one byte per row).
pub const MAX_DIM: usize = 8;

/// A vector in 𝔽₂^dim, `dim` even.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Vector {
    dim: u8,
    bits: u8,
}

impl GF2Vector {
    pub fn new(dim: usize, bits: u8) -> Result<Self> {
        if dim == 0 || !dim.is_multiple_of(2) || dim > MAX_DIM {
            return Err(GroupError::InvalidVector(format!(
                "dimension {dim} must be even and in 2..={MAX_DIM}"
            )));
        }
        if dim < 8 && bits >> dim != 0 {
            return Err(GroupError::InvalidVector(format!(
                "bits {bits:#b} exceed dimension {dim}"
            )));
        }
        Ok(GF2Vector {
            dim: dim as u8,
            bits,
        })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        GF2Vector::new(dim, 0)
    }

    /// Standard basis vector `e_i`, 1-based.
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        if i == 0 || i > dim {
            return Err(GroupError::InvalidVector(format!("e_{i} outside dimension {dim}")));
        }
        GF2Vector::new(dim, 1 << (i - 1))
    }

    /// Parses a string of `0`/`1` characters, first character = first coordinate.
    pub fn parse(text: &str) -> Result<Self> {
        let mut bits = 0u8;
        let chars: Vec<char> = text.trim().chars().collect();
        for (i, c) in chars.iter().enumerate() {
            match c {
                '0' => {}
                '1' if i < 8 => bits |= 1 << i,
                _ => {
                    return Err(GroupError::InvalidVector(format!("cannot parse {text:?}")));
                }
            }
        }
        GF2Vector::new(chars.len(), bits)
    }

    /// All nonzero vectors in ascending bit order.
    pub fn nonzero(dim: usize) -> Result<Vec<GF2Vector>> {
        GF2Vector::zero(dim)?;
        Ok((1..(1u16 << dim)).map(|b| GF2Vector { dim: dim as u8, bits: b as u8 }).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn bits(&self) -> u8 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn add(&self, other: &GF2Vector) -> GF2Vector {
        GF2Vector {
            dim: self.dim,
            bits: self.bits ^ other.bits,
        }
    }

    pub(crate) fn with_bits(&self, bits: u8) -> GF2Vector {
        GF2Vector { dim: self.dim, bits }
    }
}

impl fmt::Display for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Vector({self})")
    }
}

/// A `dim × dim` matrix over 𝔽₂ acting on column vectors; row `i` is
/// packed into byte `i` of a single word.
///
/// As a group element, `a.mul(&b)` applies `a` first, i.e. the matrix
/// product `b·a`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Matrix {
    dim: u8,
    rows: u64,
}

impl GF2Matrix {
    fn check_dim(dim: usize) -> Result<()> {
        if dim == 0 || !dim.is_multiple_of(2) || dim > MAX_DIM {
            return Err(GroupError::InvalidMatrix(format!(
                "dimension {dim} must be even and in 2..={MAX_DIM}"
            )));
        }
        Ok(())
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::check_dim(dim)?;
        let rows = (0..dim).fold(0u64, |acc, i| acc | (1u64 << (8 * i + i)));
        Ok(GF2Matrix { dim: dim as u8, rows })
    }

    /// Builds a matrix from row bitmasks.
    pub fn from_rows(rows: &[u8]) -> Result<Self> {
        let dim = rows.len();
        Self::check_dim(dim)?;
        let mut packed = 0u64;
        for (i, &r) in rows.iter().enumerate() {
            if dim < 8 && r >> dim != 0 {
                return Err(GroupError::InvalidMatrix(format!("row {i} too wide")));
            }
            packed |= (r as u64) << (8 * i);
        }
        Ok(GF2Matrix { dim: dim as u8, rows: packed })
    }

    /// Builds the matrix whose `j`-th column is the image of `e_{j+1}`.
    pub fn from_images(images: &[GF2Vector]) -> Result<Self> {
        let dim = images.len();
        Self::check_dim(dim)?;
        let mut rows = vec![0u8; dim];
        for (j, v) in images.iter().enumerate() {
            if v.dim() != dim {
                return Err(GroupError::DegreeMismatch { left: dim, right: v.dim() });
            }
            for (i, row) in rows.iter_mut().enumerate() {
                if (v.bits() >> i) & 1 == 1 {
                    *row |= 1 << j;
                }
            }
        }
        GF2Matrix::from_rows(&rows)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn row(&self, i: usize) -> u8 {
        (self.rows >> (8 * i)) as u8
    }

    pub fn rows(&self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.row(i)).collect()
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        (self.row(i) >> j) & 1 == 1
    }

    pub fn apply(&self, v: &GF2Vector) -> GF2Vector {
        debug_assert_eq!(v.dim(), self.dim());
        v.with_bits(self.apply_bits(v.bits()))
    }

    #[inline]
    pub(crate) fn apply_bits(&self, v: u8) -> u8 {
        let mut out = 0u8;
        for i in 0..self.dim() {
            out |= (((self.row(i) & v).count_ones() & 1) as u8) << i;
        }
        out
    }

    /// Ordinary matrix product `self · other`.
    pub fn matmul(&self, other: &GF2Matrix) -> GF2Matrix {
        debug_assert_eq!(self.dim, other.dim);
        let mut rows = 0u64;
        for i in 0..self.dim() {
            let a = self.row(i);
            let mut acc = 0u8;
            for k in 0..self.dim() {
                if (a >> k) & 1 == 1 {
                    acc ^= other.row(k);
                }
            }
            rows |= (acc as u64) << (8 * i);
        }
        GF2Matrix { dim: self.dim, rows }
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn try_inverse(&self) -> Option<GF2Matrix> {
        let n = self.dim();
        let mut a: Vec<u8> = self.rows();
        let mut b: Vec<u8> = (0..n).map(|i| 1u8 << i).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| (a[r] >> col) & 1 == 1)?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            for r in 0..n {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    b[r] ^= b[col];
                }
            }
        }
        GF2Matrix::from_rows(&b).ok()
    }

    pub fn is_invertible(&self) -> bool {
        self.try_inverse().is_some()
    }
}

impl GroupElement for GF2Matrix {
    type Key = (u8, u64);

    fn mul(&self, other: &Self) -> Self {
        other.matmul(self)
    }

    fn inv(&self) -> Self {
        self.try_inverse().expect("group elements are invertible")
    }

    fn identity_like(&self) -> Self {
        GF2Matrix::identity(self.dim()).expect("dimension already validated")
    }

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(GroupError::DegreeMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    fn key(&self) -> (u8, u64) {
        (self.dim, self.rows)
    }

    fn render(&self) -> serde_json::Value {
        serde_json::Value::from(
            (0..self.dim())
                .map(|i| {
                    (0..self.dim())
                        .map(|j| if self.entry(i, j) { '1' } else { '0' })
                        .collect::<String>()
                })
                .collect::<Vec<_>>(),
        )
    }

    fn validate(&self) -> Result<()> {
        if self.is_invertible() {
            Ok(())
        } else {
            Err(GroupError::InvalidMatrix("singular matrix".into()))
        }
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Matrix{}", self.render())
    }
}

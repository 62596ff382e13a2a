//! The one exact linear-algebra kernel of the crate: sparse row reduction
//! over an exact field, with projection onto column prefixes, kernel
//! extraction, and small dense determinants.
//!
//! Columns are expected to be ordered so that "truncate to a column prefix"
//! is meaningful to the caller (the truncated-ring code orders columns by
//! ascending monomial degree, so a prefix is a lower-order quotient).

use crate::error::Result;
use crate::field::{FieldCtx, FieldElem};

/// A sparse vector with entries sorted by column index.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVec {
    pub entries: Vec<(u32, FieldElem)>,
}

impl SparseVec {
    pub fn new(mut entries: Vec<(u32, FieldElem)>) -> SparseVec {
        entries.retain(|(_, c)| !c.is_zero());
        entries.sort_by_key(|(i, _)| *i);
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries }
    }

    pub fn empty() -> SparseVec {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lowest column with a nonzero entry.
    pub fn lead(&self) -> Option<u32> {
        self.entries.first().map(|(i, _)| *i)
    }

    fn lead_coeff(&self) -> Option<&FieldElem> {
        self.entries.first().map(|(_, c)| c)
    }

    /// Drop all entries with column >= `bound`.
    pub fn project(&mut self, bound: u32) {
        self.entries.retain(|(i, _)| *i < bound);
    }

    /// `self - c * other`, keeping only columns < `bound`.
    fn axpy(&self, c: &FieldElem, other: &SparseVec, field: FieldCtx, bound: u32) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.entries;
        let b = &other.entries;
        while i < a.len() && j < b.len() {
            if b[j].0 >= bound {
                j = b.len();
                break;
            }
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let v = field.neg(&field.mul(c, &b[j].1).unwrap()).unwrap();
                    if !v.is_zero() {
                        out.push((b[j].0, v));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = field.sub(&a[i].1, &field.mul(c, &b[j].1).unwrap()).unwrap();
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        while j < b.len() && b[j].0 < bound {
            let v = field.neg(&field.mul(c, &b[j].1).unwrap()).unwrap();
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        }
        SparseVec { entries: out }
    }
}

/// A reduced row echelon, maintained invariantly: every stored row is monic
/// on its pivot column (its lowest entry), and no pivot column occurs in any
/// other row. Keeping rows fully reduced bounds the fill-in of later
/// insertions by the reduced form's own sparsity, which for the staircase
/// matrices of this crate is close to diagonal.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: FieldCtx,
    ncols: u32,
    rows: Vec<SparseVec>,
    /// pivot column -> index into `rows`
    pivot_row: Vec<Option<u32>>,
}

impl Echelon {
    pub fn new(field: FieldCtx, ncols: u32) -> Echelon {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols as usize],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> u32 {
        self.ncols
    }

    /// Pivot columns in ascending order.
    pub fn pivot_cols(&self) -> Vec<u32> {
        let mut cols: Vec<u32> = self.rows.iter().map(|r| r.lead().unwrap()).collect();
        cols.sort_unstable();
        cols
    }

    pub fn pivot_count_below(&self, bound: u32) -> usize {
        self.rows
            .iter()
            .filter(|r| r.lead().unwrap() < bound)
            .count()
    }

    /// Canonical residue of `v` modulo the row space, keeping columns
    /// < `bound`: every pivot-column entry is cancelled, so the result is
    /// supported on non-pivot columns and the map v -> residue is linear.
    /// Each cancellation introduces only non-pivot entries, so the number
    /// of reduction steps is bounded by the pivot-column entries of `v`.
    pub fn reduce_projected(&self, mut v: SparseVec, bound: u32) -> SparseVec {
        v.project(bound);
        let mut i = 0;
        while i < v.entries.len() {
            let col = v.entries[i].0;
            match self.pivot_row[col as usize] {
                None => i += 1,
                Some(r) => {
                    let c = v.entries[i].1.clone();
                    v = v.axpy(&c, &self.rows[r as usize], self.field, bound);
                    // Entries before position i are untouched non-pivot
                    // columns; the cancelled column disappeared and any new
                    // entries lie beyond it, so scanning resumes in place.
                }
            }
        }
        v
    }

    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_projected(v, self.ncols)
    }

    /// Insert a row; returns its pivot column if it increased the rank. The
    /// new pivot column is eliminated from every stored row, preserving the
    /// reduced form.
    pub fn insert(&mut self, v: SparseVec) -> Option<u32> {
        let v = self.reduce(v);
        let lead = v.lead()?;
        let inv = self.field.inv(v.lead_coeff().unwrap()).unwrap();
        let monic = SparseVec {
            entries: v
                .entries
                .iter()
                .map(|(i, c)| (*i, self.field.mul(c, &inv).unwrap()))
                .collect(),
        };
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.entries.binary_search_by_key(&lead, |(c, _)| *c) {
                let coeff = row.entries[pos].1.clone();
                *row = row.axpy(&coeff, &monic, self.field, self.ncols);
            }
        }
        self.pivot_row[lead as usize] = Some(self.rows.len() as u32);
        self.rows.push(monic);
        Some(lead)
    }

    /// Membership of `v` in the projection of the row space onto columns < `bound`.
    pub fn contains_projected(&self, v: SparseVec, bound: u32) -> bool {
        self.reduce_projected(v, bound).is_empty()
    }

    /// Rows in reduced echelon form, sorted by pivot column.
    pub fn rref_rows(&self) -> Vec<SparseVec> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r.lead().unwrap());
        rows
    }
}

/// Kernel of the linear map sending the i-th domain coordinate to `rows[i]`.
/// Returns a basis of coefficient vectors (dense, length = rows.len()),
/// deterministic in the input order; each basis vector has coefficient 1 at
/// the domain index that triggered it.
pub fn kernel_of_rows(field: FieldCtx, ncols: u32, rows: &[SparseVec]) -> Vec<Vec<FieldElem>> {
    let n = rows.len() as u32;
    // Augment: value columns [0, ncols), tag columns [ncols, ncols + n).
    let mut ech = Echelon::new(field, ncols + n);
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut entries = row.entries.clone();
        entries.push((ncols + i as u32, field.one()));
        let reduced = ech.reduce(SparseVec { entries });
        if reduced.lead().is_none_or(|c| c >= ncols) {
            // Value part vanished: the tag part is a kernel vector.
            let mut coeffs = vec![field.zero(); rows.len()];
            for (c, v) in &reduced.entries {
                coeffs[(c - ncols) as usize] = v.clone();
            }
            // Normalize so the triggering coordinate has coefficient 1.
            let inv = field.inv(&coeffs[i]).unwrap();
            for c in coeffs.iter_mut() {
                *c = field.mul(c, &inv).unwrap();
            }
            kernel.push(coeffs);
        } else {
            ech.insert(reduced);
        }
    }
    kernel
}

/// Determinant of a small dense matrix by fraction-free-enough Gaussian
/// elimination over the field.
pub fn det(field: FieldCtx, matrix: &[Vec<FieldElem>]) -> Result<FieldElem> {
    let n = matrix.len();
    let mut m: Vec<Vec<FieldElem>> = matrix.to_vec();
    let mut result = field.one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Ok(field.zero());
        };
        if p != col {
            m.swap(p, col);
            result = field.neg(&result)?;
        }
        let pv = m[col][col].clone();
        result = field.mul(&result, &pv)?;
        let inv = field.inv(&pv)?;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = field.mul(&m[r][col], &inv)?;
            let pivot_row = m[col].clone();
            for (c, pc) in pivot_row.iter().enumerate().skip(col) {
                let t = field.mul(&factor, pc)?;
                m[r][c] = field.sub(&m[r][c], &t)?;
            }
        }
    }
    Ok(result)
}

//! Dense matrices over small finite fields, with layout specialised to the
//! coefficient field:
//!
//! - GF(2): one bit plane, 64 entries per machine word;
//! - GF(4): two bit planes (constant part / t part), so a row operation is a
//!   handful of word-wide XORs — multiplication by t maps planes (a,b) to
//!   (b, a+b), by t+1 to (a+b, a);
//! - anything else: one `u16` code per entry, driven by the field tables.
//!
//! The packed layouts matter: enveloping-algebra computations downstream run
//! row reductions on vectors of length in the hundreds, tens of thousands of
//! times. All elimination is deterministic — pivots are chosen as the first
//! nonzero column and, within a column, the first nonzero row — so reduced
//! echelon forms, kernels and solutions are reproducible across runs.

use crate::field::{Field, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinError {
    #[error("linear system has no solution")]
    NoSolution,
}

#[derive(Clone, PartialEq)]
enum Store {
    B1 { wpr: usize, w: Vec<u64> },
    B2 { wpr: usize, a: Vec<u64>, b: Vec<u64> },
    Gen { e: Vec<Scalar> },
}

/// A rows x cols matrix over a fixed finite field.
#[derive(Clone)]
pub struct FMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    st: Store,
}

#[inline]
fn words(cols: usize) -> usize {
    cols.div_ceil(64)
}

// y ^= x, word-wise
#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

impl FMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        let st = match field.q() {
            2 => Store::B1 { wpr: words(cols), w: vec![0; rows * words(cols)] },
            4 => Store::B2 {
                wpr: words(cols),
                a: vec![0; rows * words(cols)],
                b: vec![0; rows * words(cols)],
            },
            _ => Store::Gen { e: vec![0; rows * cols] },
        };
        FMatrix { field: field.clone(), rows, cols, st }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_entries(field: &Field, rows: usize, cols: usize, entries: &[Scalar]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let mut m = Self::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, entries[r * cols + c]);
            }
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rws: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rws.len(), cols);
        for (r, v) in rws.iter().enumerate() {
            assert_eq!(v.len(), cols);
            for (c, &x) in v.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn row_matrix(field: &Field, v: &[Scalar]) -> Self {
        Self::from_rows(field, v.len(), std::slice::from_ref(&v.to_vec()))
    }

    pub fn col_matrix(field: &Field, v: &[Scalar]) -> Self {
        let mut m = Self::zeros(field, v.len(), 1);
        for (r, &x) in v.iter().enumerate() {
            m.set(r, 0, x);
        }
        m
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.st {
            Store::B1 { wpr, w } => ((w[r * wpr + c / 64] >> (c % 64)) & 1) as Scalar,
            Store::B2 { wpr, a, b } => {
                let i = r * wpr + c / 64;
                let s = c % 64;
                (((a[i] >> s) & 1) | (((b[i] >> s) & 1) << 1)) as Scalar
            }
            Store::Gen { e } => e[r * self.cols + c],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(r < self.rows && c < self.cols);
        debug_assert!((v as u32) < self.field.q());
        match &mut self.st {
            Store::B1 { wpr, w } => {
                let i = r * *wpr + c / 64;
                let mask = 1u64 << (c % 64);
                if v & 1 == 1 {
                    w[i] |= mask;
                } else {
                    w[i] &= !mask;
                }
            }
            Store::B2 { wpr, a, b } => {
                let i = r * *wpr + c / 64;
                let mask = 1u64 << (c % 64);
                if v & 1 == 1 {
                    a[i] |= mask;
                } else {
                    a[i] &= !mask;
                }
                if v & 2 == 2 {
                    b[i] |= mask;
                } else {
                    b[i] &= !mask;
                }
            }
            Store::Gen { e } => e[r * self.cols + c] = v,
        }
    }

    pub fn get_row(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    /// self[dst] += c * other[src]. The matrices must share field and width.
    pub fn raxpy_from(&mut self, dst: usize, other: &FMatrix, src: usize, c: Scalar) {
        debug_assert_eq!(self.cols, other.cols);
        debug_assert!(self.field == other.field);
        if c == 0 {
            return;
        }
        match (&mut self.st, &other.st) {
            (Store::B1 { wpr, w }, Store::B1 { w: sw, .. }) => {
                let (d0, s0) = (dst * *wpr, src * *wpr);
                xor_into(&mut w[d0..d0 + *wpr], &sw[s0..s0 + *wpr]);
            }
            (Store::B2 { wpr, a, b }, Store::B2 { a: sa, b: sb, .. }) => {
                let n = *wpr;
                let (d0, s0) = (dst * n, src * n);
                match c {
                    1 => {
                        xor_into(&mut a[d0..d0 + n], &sa[s0..s0 + n]);
                        xor_into(&mut b[d0..d0 + n], &sb[s0..s0 + n]);
                    }
                    // c = t: (a,b) gains (sb, sa+sb)
                    2 => {
                        xor_into(&mut a[d0..d0 + n], &sb[s0..s0 + n]);
                        xor_into(&mut b[d0..d0 + n], &sa[s0..s0 + n]);
                        xor_into(&mut b[d0..d0 + n], &sb[s0..s0 + n]);
                    }
                    // c = t+1: (a,b) gains (sa+sb, sa)
                    3 => {
                        xor_into(&mut a[d0..d0 + n], &sa[s0..s0 + n]);
                        xor_into(&mut a[d0..d0 + n], &sb[s0..s0 + n]);
                        xor_into(&mut b[d0..d0 + n], &sa[s0..s0 + n]);
                    }
                    _ => unreachable!("invalid GF(4) code"),
                }
            }
            (Store::Gen { e }, Store::Gen { e: se }) => {
                let f = &self.field;
                let (d0, s0) = (dst * self.cols, src * other.cols);
                for i in 0..self.cols {
                    e[d0 + i] = f.add(e[d0 + i], f.mul(c, se[s0 + i]));
                }
            }
            // storage kinds can disagree after to_generic(); fall back to
            // entry-wise arithmetic
            _ => {
                let f = self.field.clone();
                for i in 0..self.cols {
                    let v = f.add(self.get(dst, i), f.mul(c, other.get(src, i)));
                    self.set(dst, i, v);
                }
            }
        }
    }

    /// self[r] *= c.
    pub fn rscale(&mut self, r: usize, c: Scalar) {
        match &mut self.st {
            Store::B1 { wpr, w } => {
                if c == 0 {
                    w[r * *wpr..(r + 1) * *wpr].fill(0);
                }
            }
            Store::B2 { wpr, a, b } => {
                let n = *wpr;
                let d0 = r * n;
                match c {
                    0 => {
                        a[d0..d0 + n].fill(0);
                        b[d0..d0 + n].fill(0);
                    }
                    1 => {}
                    2 => {
                        // (a,b) -> (b, a+b)
                        for i in 0..n {
                            let (x, y) = (a[d0 + i], b[d0 + i]);
                            a[d0 + i] = y;
                            b[d0 + i] = x ^ y;
                        }
                    }
                    3 => {
                        // (a,b) -> (a+b, a)
                        for i in 0..n {
                            let (x, y) = (a[d0 + i], b[d0 + i]);
                            a[d0 + i] = x ^ y;
                            b[d0 + i] = x;
                        }
                    }
                    _ => unreachable!("invalid GF(4) code"),
                }
            }
            Store::Gen { e } => {
                let f = &self.field;
                for i in r * self.cols..(r + 1) * self.cols {
                    e[i] = f.mul(e[i], c);
                }
            }
        }
    }

    pub fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        match &mut self.st {
            Store::B1 { wpr, w } => {
                for i in 0..*wpr {
                    w.swap(r1 * *wpr + i, r2 * *wpr + i);
                }
            }
            Store::B2 { wpr, a, b } => {
                for i in 0..*wpr {
                    a.swap(r1 * *wpr + i, r2 * *wpr + i);
                    b.swap(r1 * *wpr + i, r2 * *wpr + i);
                }
            }
            Store::Gen { e } => {
                for i in 0..self.cols {
                    e.swap(r1 * self.cols + i, r2 * self.cols + i);
                }
            }
        }
    }

    /// First nonzero entry of row `r` at column >= `from`, with its value.
    pub fn leading(&self, r: usize, from: usize) -> Option<(usize, Scalar)> {
        match &self.st {
            Store::B1 { wpr, w } => {
                scan_planes(&w[r * wpr..(r + 1) * wpr], None, from, self.cols)
                    .map(|c| (c, 1))
            }
            Store::B2 { wpr, a, b } => {
                let ra = &a[r * wpr..(r + 1) * wpr];
                let rb = &b[r * wpr..(r + 1) * wpr];
                scan_planes(ra, Some(rb), from, self.cols).map(|c| (c, self.get(r, c)))
            }
            Store::Gen { e } => (from..self.cols)
                .find(|&c| e[r * self.cols + c] != 0)
                .map(|c| (c, e[r * self.cols + c])),
        }
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.leading(r, 0).is_none()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rows).all(|r| self.row_is_zero(r))
    }

    /// Append a copy of `other[src]` as a new last row.
    pub fn push_row(&mut self, other: &FMatrix, src: usize) {
        debug_assert_eq!(self.cols, other.cols);
        debug_assert!(self.field == other.field);
        match (&mut self.st, &other.st) {
            (Store::B1 { wpr, w }, Store::B1 { w: sw, .. }) => {
                w.extend_from_slice(&sw[src * *wpr..(src + 1) * *wpr]);
            }
            (Store::B2 { wpr, a, b }, Store::B2 { a: sa, b: sb, .. }) => {
                a.extend_from_slice(&sa[src * *wpr..(src + 1) * *wpr]);
                b.extend_from_slice(&sb[src * *wpr..(src + 1) * *wpr]);
            }
            (Store::Gen { e }, Store::Gen { e: se }) => {
                e.extend_from_slice(&se[src * other.cols..(src + 1) * other.cols]);
            }
            _ => {
                let v = other.get_row(src);
                self.push_row_slice(&v);
                return;
            }
        }
        self.rows += 1;
    }

    pub fn push_row_slice(&mut self, v: &[Scalar]) {
        assert_eq!(v.len(), self.cols);
        let r = self.rows;
        match &mut self.st {
            Store::B1 { wpr, w } => w.extend(std::iter::repeat_n(0, *wpr)),
            Store::B2 { wpr, a, b } => {
                a.extend(std::iter::repeat_n(0, *wpr));
                b.extend(std::iter::repeat_n(0, *wpr));
            }
            Store::Gen { e } => e.extend(std::iter::repeat_n(0, self.cols)),
        }
        self.rows += 1;
        for (c, &x) in v.iter().enumerate() {
            if x != 0 {
                self.set(r, c, x);
            }
        }
    }

    pub fn mul(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        assert!(self.field == rhs.field);
        let mut out = FMatrix::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let c = self.get(i, k);
                if c != 0 {
                    out.raxpy_from(i, rhs, k, c);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for r in 0..self.rows {
            out.raxpy_from(r, rhs, r, 1);
        }
        out
    }

    pub fn sub(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        let minus = self.field.neg(1);
        for r in 0..self.rows {
            out.raxpy_from(r, rhs, r, minus);
        }
        out
    }

    pub fn scale(&self, c: Scalar) -> FMatrix {
        let mut out = self.clone();
        for r in 0..self.rows {
            out.rscale(r, c);
        }
        out
    }

    pub fn transpose(&self) -> FMatrix {
        let mut out = FMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            let mut c = 0usize;
            while let Some((cc, v)) = self.leading(r, c) {
                out.set(cc, r, v);
                c = cc + 1;
            }
        }
        out
    }

    /// [self | rhs] side by side.
    pub fn hstack(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.rows, rhs.rows);
        assert!(self.field == rhs.field);
        let mut out = FMatrix::zeros(&self.field, self.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, rhs);
        out
    }

    /// self stacked on top of rhs.
    pub fn vstack(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, rhs.cols);
        assert!(self.field == rhs.field);
        let mut out = self.clone();
        for r in 0..rhs.rows {
            out.push_row(rhs, r);
        }
        out
    }

    /// Copy `src` into self with top-left corner at (r0, c0).
    pub fn paste(&mut self, r0: usize, c0: usize, src: &FMatrix) {
        assert!(r0 + src.rows <= self.rows && c0 + src.cols <= self.cols);
        for r in 0..src.rows {
            let mut c = 0usize;
            while let Some((cc, v)) = src.leading(r, c) {
                self.set(r0 + r, c0 + cc, v);
                c = cc + 1;
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> FMatrix {
        let mut out = FMatrix::zeros(&self.field, 0, self.cols);
        for &r in idx {
            out.push_row(self, r);
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> FMatrix {
        let mut out = FMatrix::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = 0;
        for i in 0..self.rows {
            t = self.field.add(t, self.get(i, i));
        }
        t
    }

    /// Kronecker product: block (i,j) of the result is self[i,j] * rhs.
    pub fn kron(&self, rhs: &FMatrix) -> FMatrix {
        assert!(self.field == rhs.field);
        let mut out = FMatrix::zeros(&self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let c = self.get(i, j);
                if c == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let v = rhs.get(k, l);
                        if v != 0 {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, self.field.mul(c, v));
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns, in order. Pivots are
    /// the first nonzero column, then the first nonzero row in that column.
    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let v = self.get(r, c);
            if v != 1 {
                self.rscale(r, self.field.inv(v));
            }
            // copy the pivot row out once so we can eliminate with plain
            // two-matrix row operations (no aliasing)
            let mut prow = FMatrix::zeros(&self.field, 0, self.cols);
            prow.push_row(self, r);
            for i in 0..self.rows {
                if i != r {
                    let x = self.get(i, c);
                    if x != 0 {
                        self.raxpy_from(i, &prow, 0, self.field.neg(x));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space { v : self * v^T = 0 }, one vector per
    /// row, in reduced echelon form. Row count is cols - rank.
    pub fn kernel_basis(&self) -> FMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = FMatrix::zeros(&self.field, 0, self.cols);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0 as Scalar; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = self.field.neg(r.get(row, free));
            }
            out.push_row_slice(&v);
        }
        out.rref_in_place();
        out
    }

    /// Solve self * X = B for X (cols x B.cols), free variables set to zero.
    pub fn solve_right(&self, b: &FMatrix) -> Result<FMatrix, LinError> {
        assert_eq!(self.rows, b.rows, "solve_right: row counts must agree");
        let (aug, _) = self.hstack(b).rref();
        let mut x = FMatrix::zeros(&self.field, self.cols, b.cols);
        for r in 0..aug.rows() {
            match aug.leading(r, 0) {
                None => {}
                Some((c, _)) if c < self.cols => {
                    for j in 0..b.cols {
                        let v = aug.get(r, self.cols + j);
                        if v != 0 {
                            x.set(c, j, v);
                        }
                    }
                }
                // a pivot inside the augmented block: inconsistent system
                Some(_) => return Err(LinError::NoSolution),
            }
        }
        Ok(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn invert(&self) -> Option<FMatrix> {
        assert_eq!(self.rows, self.cols);
        let id = FMatrix::identity(&self.field, self.rows);
        match self.solve_right(&id) {
            Ok(x) => {
                debug_assert!(x.mul(self) == id);
                Some(x)
            }
            Err(_) => None,
        }
    }

    /// Re-encode into the generic (table-driven) layout. Only interesting in
    /// tests, to cross-check the packed GF(2)/GF(4) code paths.
    #[doc(hidden)]
    pub fn to_generic(&self) -> FMatrix {
        let mut out = FMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            st: Store::Gen { e: vec![0; self.rows * self.cols] },
        };
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

// Find the first set bit position >= from (interpreting a as the support
// plane, optionally OR'd with b), below `cols`.
fn scan_planes(a: &[u64], b: Option<&[u64]>, from: usize, cols: usize) -> Option<usize> {
    let start_w = from / 64;
    for wi in start_w..a.len() {
        let mut word = a[wi] | b.map_or(0, |b| b[wi]);
        if wi == start_w {
            word &= !0u64 << (from % 64);
        }
        if word != 0 {
            let c = wi * 64 + word.trailing_zeros() as usize;
            return (c < cols).then_some(c);
        }
    }
    None
}

impl PartialEq for FMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == other.get(r, c)))
    }
}
impl Eq for FMatrix {}

// Rows of codes, one line each; big matrices abbreviated.
impl std::fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        let rmax = self.rows.min(24);
        for r in 0..rmax {
            let row: Vec<String> =
                (0..self.cols.min(48)).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        if rmax < self.rows {
            writeln!(f, "... ({} more rows)", self.rows - rmax)?;
        }
        Ok(())
    }
}

/// Incremental row-space maintenance: rows are kept mutually reduced, so the
/// stored basis is a reduced echelon basis of everything inserted so far.
#[derive(Clone)]
pub struct Echelonizer {
    mat: FMatrix,
    pivcols: Vec<usize>,
    is_piv: Vec<bool>,
}

impl Echelonizer {
    pub fn new(field: &Field, cols: usize) -> Self {
        Echelonizer {
            mat: FMatrix::zeros(field, 0, cols),
            pivcols: Vec::new(),
            is_piv: vec![false; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.mat.cols()
    }
    pub fn rank(&self) -> usize {
        self.pivcols.len()
    }
    pub fn field(&self) -> &Field {
        self.mat.field()
    }

    /// Insert row `src` of `m`; returns the new pivot column if the row was
    /// independent of the span so far.
    pub fn insert(&mut self, m: &FMatrix, src: usize) -> Option<usize> {
        let mut row = FMatrix::zeros(self.mat.field(), 0, self.mat.cols());
        row.push_row(m, src);
        self.insert_reduced(row)
    }

    pub fn insert_slice(&mut self, v: &[Scalar]) -> Option<usize> {
        let mut row = FMatrix::zeros(self.mat.field(), 0, self.mat.cols());
        row.push_row_slice(v);
        self.insert_reduced(row)
    }

    fn insert_reduced(&mut self, mut row: FMatrix) -> Option<usize> {
        let f = self.mat.field().clone();
        for (i, &pc) in self.pivcols.iter().enumerate() {
            let c = row.get(0, pc);
            if c != 0 {
                row.raxpy_from(0, &self.mat, i, f.neg(c));
            }
        }
        let (lead, v) = row.leading(0, 0)?;
        if v != 1 {
            row.rscale(0, f.inv(v));
        }
        for i in 0..self.mat.rows() {
            let c = self.mat.get(i, lead);
            if c != 0 {
                self.mat.raxpy_from(i, &row, 0, f.neg(c));
            }
        }
        self.mat.push_row(&row, 0);
        self.pivcols.push(lead);
        self.is_piv[lead] = true;
        Some(lead)
    }

    /// Fully reduce a vector against the span; the result is the canonical
    /// coset representative (zero iff the vector lies in the span).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.mat.field().clone();
        let mut row = FMatrix::zeros(&f, 0, self.mat.cols());
        row.push_row_slice(v);
        for (i, &pc) in self.pivcols.iter().enumerate() {
            let c = row.get(0, pc);
            if c != 0 {
                row.raxpy_from(0, &self.mat, i, f.neg(c));
            }
        }
        row.get_row(0)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.is_piv[col]
    }

    /// The stored basis with rows sorted by pivot column (true RREF order).
    pub fn basis(&self) -> FMatrix {
        let mut order: Vec<usize> = (0..self.pivcols.len()).collect();
        order.sort_by_key(|&i| self.pivcols[i]);
        self.mat.select_rows(&order)
    }

    pub fn pivots_sorted(&self) -> Vec<usize> {
        let mut p = self.pivcols.clone();
        p.sort_unstable();
        p
    }
}

/// A quotient space k^n / W presented by an `Echelonizer` for W. Classes are
/// coordinatised by the non-pivot positions; `lift` of those coordinates is
/// already the canonical representative.
#[derive(Clone)]
pub struct Quotient {
    sub: Echelonizer,
    comp: Vec<usize>,
}

impl Quotient {
    pub fn new(sub: Echelonizer) -> Self {
        let comp: Vec<usize> = (0..sub.cols()).filter(|&c| !sub.is_pivot(c)).collect();
        Quotient { sub, comp }
    }

    pub fn dim(&self) -> usize {
        self.comp.len()
    }
    pub fn ambient_dim(&self) -> usize {
        self.sub.cols()
    }
    pub fn comp_positions(&self) -> &[usize] {
        &self.comp
    }
    pub fn subspace(&self) -> &Echelonizer {
        &self.sub
    }

    /// Coordinates of the class of `v`.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let red = self.sub.reduce(v);
        self.comp.iter().map(|&c| red[c]).collect()
    }

    /// Canonical ambient representative of a class.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.comp.len());
        let mut v = vec![0 as Scalar; self.sub.cols()];
        for (i, &c) in self.comp.iter().enumerate() {
            v[c] = coords[i];
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn gf(p: u64) -> Field {
        make_field(p, 1, &[0, 1]).unwrap()
    }
    fn gf4() -> Field {
        make_field(2, 2, &[1, 1, 1]).unwrap()
    }

    // deterministic junk generator for tests (xorshift)
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> u64 {
            self.0 ^= self.0 << 13;
            self.0 ^= self.0 >> 7;
            self.0 ^= self.0 << 17;
            self.0
        }
        fn mat(&mut self, f: &Field, r: usize, c: usize) -> FMatrix {
            let mut m = FMatrix::zeros(f, r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, (self.next() % f.q() as u64) as Scalar);
                }
            }
            m
        }
    }

    #[test]
    fn kernel_of_repeated_row_gf2() {
        let f = gf(2);
        let m = FMatrix::from_entries(&f, 2, 2, &[1, 1, 1, 1]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.get_row(0), vec![1, 1]);
    }

    #[test]
    fn solve_right_roundtrip_and_failure() {
        for f in [gf(2), gf(3), gf4()] {
            let mut rng = Rng(0x9e3779b97f4a7c15);
            for _ in 0..20 {
                let a = rng.mat(&f, 7, 5);
                let x = rng.mat(&f, 5, 3);
                let b = a.mul(&x);
                let sol = a.solve_right(&b).expect("consistent by construction");
                assert_eq!(a.mul(&sol), b);
            }
        }
        let f = gf(2);
        let a = FMatrix::from_entries(&f, 2, 2, &[1, 0, 0, 0]);
        let b = FMatrix::from_entries(&f, 2, 1, &[0, 1]);
        assert_eq!(a.solve_right(&b), Err(LinError::NoSolution));
    }

    #[test]
    fn rref_is_canonical_under_row_permutation() {
        let f = gf4();
        let mut rng = Rng(42);
        for _ in 0..10 {
            let m = rng.mat(&f, 6, 8);
            let rev = m.select_rows(&(0..6).rev().collect::<Vec<_>>());
            let (r1, p1) = m.rref();
            let (r2, p2) = rev.rref();
            assert_eq!(p1, p2);
            // nonzero parts agree
            for i in 0..p1.len() {
                assert_eq!(r1.get_row(i), r2.get_row(i));
            }
        }
    }

    #[test]
    fn packed_paths_match_generic_tables() {
        // same computation through the packed planes and the generic layout
        for f in [gf(2), gf4()] {
            let mut rng = Rng(7);
            for _ in 0..12 {
                let a = rng.mat(&f, 5, 6);
                let b = rng.mat(&f, 6, 4);
                assert_eq!(a.mul(&b).to_generic(), a.to_generic().mul(&b.to_generic()));
                let (r, p) = a.rref();
                let (rg, pg) = a.to_generic().rref();
                assert_eq!(p, pg);
                assert_eq!(r.to_generic(), rg);
                assert_eq!(
                    a.kernel_basis().to_generic(),
                    a.to_generic().kernel_basis()
                );
            }
        }
    }

    #[test]
    fn echelonizer_matches_batch_rank() {
        for f in [gf(2), gf(3), gf4()] {
            let mut rng = Rng(99);
            let m = rng.mat(&f, 12, 9);
            let mut e = Echelonizer::new(&f, 9);
            for r in 0..12 {
                e.insert(&m, r);
            }
            assert_eq!(e.rank(), m.rank());
            for r in 0..12 {
                assert!(e.contains(&m.get_row(r)));
            }
            assert_eq!(e.basis().rref().0, e.basis());
        }
    }

    #[test]
    fn quotient_projections() {
        let f = gf(2);
        let mut e = Echelonizer::new(&f, 4);
        e.insert_slice(&[1, 1, 0, 0]);
        e.insert_slice(&[0, 0, 1, 1]);
        let q = Quotient::new(e);
        assert_eq!(q.dim(), 2);
        // [1,0,0,0] and [0,1,0,0] are congruent mod W
        assert_eq!(q.project(&[1, 0, 0, 0]), q.project(&[0, 1, 0, 0]));
        let l = q.lift(&q.project(&[1, 0, 1, 0]));
        assert_eq!(q.project(&l), q.project(&[1, 0, 1, 0]));
    }

    #[test]
    fn kron_mixed_product() {
        let f = gf(3);
        let mut rng = Rng(5);
        let a = rng.mat(&f, 3, 2);
        let b = rng.mat(&f, 2, 2);
        let c = rng.mat(&f, 2, 3);
        let d = rng.mat(&f, 2, 2);
        // (A (x) B)(C (x) D) = AC (x) BD
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn invert_round_trip() {
        let f = gf4();
        let m = FMatrix::from_entries(&f, 2, 2, &[2, 1, 1, 1]);
        let inv = m.invert().unwrap();
        assert_eq!(m.mul(&inv), FMatrix::identity(&f, 2));
        let sing = FMatrix::from_entries(&f, 2, 2, &[1, 1, 1, 1]);
        assert!(sing.invert().is_none());
    }
}

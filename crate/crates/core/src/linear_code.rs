//! Matrices over F_q, linear codes as row spaces, and semi-linear maps
//! `v -> theta(v) * T` acting on row vectors.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Automorphism, FieldElement, FieldSpec};

/// Default cap on the work done by [`LinearCode::min_weight`].
pub const MIN_WEIGHT_BUDGET: u64 = 1 << 28;

/// Dense row-major matrix over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFq {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl MatrixFq {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        MatrixFq {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Builds a matrix from equal-length rows. An empty list gives a 0x0
    /// matrix.
    pub fn from_rows(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            if r.iter().any(|&a| !field.contains(a)) {
                return Err(Error::ForeignElement);
            }
            data.extend_from_slice(r);
        }
        Ok(MatrixFq {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Rows given in digit notation.
    pub fn from_digit_rows(field: &FieldSpec, rows: &[Vec<u64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&d| field.from_digit(d)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, &rows)
    }

    pub fn to_digit_rows(&self) -> Result<Vec<Vec<u64>>> {
        self.row_vectors()
            .iter()
            .map(|r| r.iter().map(|&a| self.field.to_digit(a)).collect())
            .collect()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, a: FieldElement) {
        self.data[i * self.cols + j] = a;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixFq) -> Result<MatrixFq> {
        if self.field != other.field {
            return Err(Error::Mismatch);
        }
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(i, j)));
            }
        }
        Ok(out)
    }

    /// Entrywise `theta^j`.
    pub fn frobenius(&self, aut: &Automorphism, j: i64) -> Self {
        let mut m = self.clone();
        for a in &mut m.data {
            *a = aut.apply(j, *a);
        }
        m
    }

    /// Reduced row echelon form without zero rows, and its pivot columns.
    pub fn rref(&self) -> (MatrixFq, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * self.cols);
        m.rows = r;
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of the right kernel `{x : M x^t = 0}`.
    pub fn right_kernel(&self) -> MatrixFq {
        let f = &self.field;
        let (e, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (t, &c) in free.iter().enumerate() {
            out.set(t, c, FieldElement::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(t, pc, f.neg(e.get(i, c)));
            }
        }
        out
    }

    /// Basis (as rows) of the left kernel `{x : x M = 0}`.
    pub fn left_kernel(&self) -> MatrixFq {
        self.transpose().right_kernel()
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<MatrixFq> {
        let n = self.rows;
        if self.cols != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.cols,
            });
        }
        let mut aug = Self::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FieldElement::ONE);
        }
        let (e, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::InvalidParameter("matrix is singular".into()));
        }
        let mut inv = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, e.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Columns selected in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> MatrixFq {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (t, &c) in cols.iter().enumerate() {
                out.set(i, t, self.get(i, c));
            }
        }
        out
    }

    /// Every nonzero row scaled so its first nonzero entry is 1.
    pub fn normalize_rows(&self) -> MatrixFq {
        let f = &self.field;
        let mut out = self.clone();
        for i in 0..self.rows {
            if let Some(&lead) = self.row(i).iter().find(|a| !a.is_zero()) {
                let s = f.inv(lead).expect("nonzero");
                for j in 0..self.cols {
                    out.set(i, j, f.mul(s, self.get(i, j)));
                }
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &MatrixFq) -> Result<MatrixFq> {
        if self.field != other.field {
            return Err(Error::Mismatch);
        }
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixFq {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Human-readable rows in `w^i` notation.
    pub fn render(&self) -> String {
        let mut lines = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|&a| self.field.display(a)).collect();
            lines.push(format!("[{}]", cells.join(" ")));
        }
        lines.join("\n")
    }
}

/// Which exact algorithm computes the minimum distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightRoute {
    /// Walk the projective codewords.
    Codewords,
    /// Find the smallest linearly dependent set of parity-check columns.
    CheckColumns,
}

/// A linear `[n, k]` code stored by the reduced echelon form of a
/// generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    gen: MatrixFq,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row space of `rows`.
    pub fn from_rows(rows: &MatrixFq) -> Result<Self> {
        let (gen, pivots) = rows.rref();
        if pivots.is_empty() {
            return Err(Error::ZeroCode);
        }
        Ok(LinearCode {
            n: rows.cols(),
            gen,
            pivots,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        self.gen.field()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// The canonical (reduced echelon) generator matrix.
    pub fn generator(&self) -> &MatrixFq {
        &self.gen
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for (j, x) in w.iter_mut().enumerate() {
                *x = f.sub(*x, f.mul(c, self.gen.get(i, j)));
            }
        }
        Ok(w.iter().all(|a| a.is_zero()))
    }

    /// The dual code, read off from the systematic form. Its generator
    /// rows are the parity checks of `self` in the original coordinates.
    pub fn dual(&self) -> Result<Self> {
        if self.dim() == self.n {
            return Err(Error::FullCode);
        }
        LinearCode::from_rows(&self.parity_check())
    }

    /// A full-rank `(n-k) x n` parity-check matrix.
    pub fn parity_check(&self) -> MatrixFq {
        self.gen.right_kernel()
    }

    /// Same row space.
    pub fn equals(&self, other: &LinearCode) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(self.field() == other.field() && self.gen == other.gen)
    }

    /// Whether `map` sends the code into itself. Since the map is
    /// bijective this is the same as `C * map = C`.
    pub fn invariant_under(&self, map: &SemiLinearVectorMap) -> Result<bool> {
        if map.dim() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: map.dim(),
            });
        }
        for i in 0..self.dim() {
            if !self.contains(&map.apply(self.gen.row(i))?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Estimated work for each route.
    pub fn route_costs(&self) -> (u128, u128) {
        let q = self.field().order() as u128;
        let k = self.dim() as u32;
        let words = q
            .checked_pow(k)
            .map_or(u128::MAX, |qk| (qk - 1) / (q - 1));
        let mut cols: u128 = 0;
        let mut binom: u128 = 1;
        for j in 0..=(self.n - self.dim()) {
            cols = cols.saturating_add(binom);
            binom = binom.saturating_mul((self.n - j) as u128) / (j as u128 + 1);
        }
        (words, cols)
    }

    /// Exact minimum distance under the default budget.
    pub fn min_weight(&self) -> Result<usize> {
        self.min_weight_with(None, MIN_WEIGHT_BUDGET)
    }

    /// Exact minimum distance by a chosen route (`None` picks the cheaper
    /// one). Fails with `BudgetExceeded` once `budget` steps are spent.
    pub fn min_weight_with(&self, route: Option<WeightRoute>, budget: u64) -> Result<usize> {
        let (words, cols) = self.route_costs();
        let route = route.unwrap_or(if words <= cols {
            WeightRoute::Codewords
        } else {
            WeightRoute::CheckColumns
        });
        match route {
            WeightRoute::Codewords => {
                if words > budget as u128 {
                    return Err(Error::BudgetExceeded(format!(
                        "{words} projective codewords exceed the budget of {budget}"
                    )));
                }
                Ok(self.min_weight_codewords())
            }
            WeightRoute::CheckColumns => {
                if self.dim() == self.n {
                    return Ok(1);
                }
                self.min_weight_columns(budget)
            }
        }
    }

    fn min_weight_codewords(&self) -> usize {
        let f = self.field();
        let q = f.order() as usize;
        let k = self.dim();
        let n = self.n;
        let elems: Vec<FieldElement> = f.elements().collect();
        // scaled[(j * q + c) * n ..] = elems[c] * row_j
        let mut scaled = vec![FieldElement::ZERO; k * q * n];
        for j in 0..k {
            for (c, &e) in elems.iter().enumerate() {
                for t in 0..n {
                    scaled[(j * q + c) * n + t] = f.mul(e, self.gen.get(j, t));
                }
            }
        }
        let best = AtomicUsize::new(n);
        // Representatives have a 1 in the first nonzero information slot
        // `lead`; the remaining k-1-lead slots run over all of F_q. The
        // leading slot count is split into chunks for the thread pool.
        let one = elems.iter().position(|&e| e == FieldElement::ONE).unwrap();
        let mut jobs = Vec::new();
        for lead in 0..k {
            let free = k - 1 - lead;
            let total = (q as u64).pow(free as u32);
            let chunk = 1u64 << 12;
            let mut start = 0;
            while start < total {
                let end = (start + chunk).min(total);
                jobs.push((lead, free, start, end));
                start = end;
            }
        }
        jobs.par_iter().for_each(|&(lead, free, start, end)| {
            if best.load(Ordering::Relaxed) == 1 {
                return;
            }
            let row = |j: usize, c: usize| &scaled[(j * q + c) * n..(j * q + c + 1) * n];
            let mut digits = vec![0usize; free];
            let mut x = start;
            for d in digits.iter_mut() {
                *d = (x % q as u64) as usize;
                x /= q as u64;
            }
            let mut word = row(lead, one).to_vec();
            for (t, &d) in digits.iter().enumerate() {
                add_into(f, &mut word, row(lead + 1 + t, d));
            }
            let mut local = n;
            for idx in start..end {
                let w = word.iter().filter(|a| !a.is_zero()).count();
                local = local.min(w);
                if idx + 1 == end || local == 1 {
                    break;
                }
                for t in 0..free {
                    let old = digits[t];
                    let new = (old + 1) % q;
                    digits[t] = new;
                    sub_into(f, &mut word, row(lead + 1 + t, old));
                    add_into(f, &mut word, row(lead + 1 + t, new));
                    if new != 0 {
                        break;
                    }
                }
            }
            best.fetch_min(local, Ordering::Relaxed);
        });
        best.into_inner()
    }

    fn min_weight_columns(&self, budget: u64) -> Result<usize> {
        let h = self.parity_check();
        let cols: Vec<Vec<FieldElement>> = (0..self.n).map(|j| h.column(j)).collect();
        if cols.iter().any(|c| c.iter().all(|a| a.is_zero())) {
            return Ok(1);
        }
        let spent = AtomicUsize::new(0);
        let f = self.field();
        // a minimal dependent set of size w: its w-1 smallest columns are
        // independent and the largest is in their span
        for w in 2..=(self.n - self.dim() + 1) {
            let found = (0..self.n).into_par_iter().any(|first| {
                let mut basis = Vec::new();
                let v = cols[first].clone();
                let piv = v.iter().position(|a| !a.is_zero()).unwrap();
                basis.push((piv, normalize(f, v, piv)));
                search_dependent(f, &cols, &mut basis, first, w - 1, &spent, budget)
            });
            if found {
                return Ok(w);
            }
            if spent.load(Ordering::Relaxed) as u64 > budget {
                return Err(Error::BudgetExceeded(format!(
                    "parity-check column search beyond {budget} steps"
                )));
            }
        }
        unreachable!("n - k + 1 columns of an (n-k)-row matrix are dependent")
    }

    /// JSON-friendly form; `d` is included when supplied.
    pub fn export(&self, d: Option<usize>) -> Result<CodeExport> {
        Ok(CodeExport {
            n: self.n,
            k: self.dim(),
            d,
            rows: self.gen.to_digit_rows()?,
        })
    }
}

fn add_into(f: &FieldSpec, acc: &mut [FieldElement], v: &[FieldElement]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = f.add(*a, b);
    }
}

fn sub_into(f: &FieldSpec, acc: &mut [FieldElement], v: &[FieldElement]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = f.sub(*a, b);
    }
}

fn normalize(f: &FieldSpec, mut v: Vec<FieldElement>, piv: usize) -> Vec<FieldElement> {
    let inv = f.inv(v[piv]).expect("pivot is nonzero");
    for a in &mut v {
        *a = f.mul(inv, *a);
    }
    v
}

/// Reduces `v` against an echelon basis built in insertion order.
fn reduce(f: &FieldSpec, basis: &[(usize, Vec<FieldElement>)], v: &mut [FieldElement]) {
    for (p, b) in basis {
        let c = v[*p];
        if c.is_zero() {
            continue;
        }
        for (x, &y) in v.iter_mut().zip(b) {
            *x = f.sub(*x, f.mul(c, y));
        }
    }
}

/// Depth-first search over independent column sets `basis` (last index
/// `last`) of target size `size`, then test whether a later column lies in
/// their span.
fn search_dependent(
    f: &FieldSpec,
    cols: &[Vec<FieldElement>],
    basis: &mut Vec<(usize, Vec<FieldElement>)>,
    last: usize,
    size: usize,
    spent: &AtomicUsize,
    budget: u64,
) -> bool {
    if spent.fetch_add(1, Ordering::Relaxed) as u64 > budget {
        return false;
    }
    if basis.len() == size {
        return cols[last + 1..].iter().any(|c| {
            let mut v = c.clone();
            reduce(f, basis, &mut v);
            v.iter().all(|a| a.is_zero())
        });
    }
    let remaining = size - basis.len();
    for next in last + 1..cols.len() {
        // need room for the rest of the set plus the dependent column
        if cols.len() - next < remaining + 1 {
            break;
        }
        let mut v = cols[next].clone();
        reduce(f, basis, &mut v);
        let Some(piv) = v.iter().position(|a| !a.is_zero()) else {
            continue;
        };
        basis.push((piv, normalize(f, v, piv)));
        let hit = search_dependent(f, cols, basis, next, size, spent, budget);
        basis.pop();
        if hit {
            return true;
        }
    }
    false
}

/// Serializable code description with digit-encoded rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeExport {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    pub rows: Vec<Vec<u64>>,
}

/// `v -> theta(v) * T` on row vectors of length n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiLinearVectorMap {
    aut: Automorphism,
    t: MatrixFq,
}

impl SemiLinearVectorMap {
    pub fn new(aut: Automorphism, t: MatrixFq) -> Result<Self> {
        if aut.field() != t.field() {
            return Err(Error::Mismatch);
        }
        if t.rows() != t.cols() {
            return Err(Error::LengthMismatch {
                expected: t.rows(),
                got: t.cols(),
            });
        }
        Ok(SemiLinearVectorMap { aut, t })
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn aut(&self) -> &Automorphism {
        &self.aut
    }

    pub fn matrix(&self) -> &MatrixFq {
        &self.t
    }

    pub fn apply(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let tv: Vec<FieldElement> = v.iter().map(|&a| self.aut.apply(1, a)).collect();
        self.t.vec_mul(&tv)
    }

    /// `v -> theta^-1(v * T^-1)`.
    pub fn apply_inverse(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let u = self.t.inverse()?.vec_mul(v)?;
        Ok(u.iter().map(|&a| self.aut.apply(-1, a)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, None).unwrap()
    }

    fn digits(f: &FieldSpec, rows: &[&[u64]]) -> MatrixFq {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        MatrixFq::from_digit_rows(f, &rows).unwrap()
    }

    #[test]
    fn identity_code() {
        let f = f4();
        let c = LinearCode::from_rows(&MatrixFq::identity(&f, 5)).unwrap();
        assert_eq!((c.len(), c.dim()), (5, 5));
        assert_eq!(c.min_weight().unwrap(), 1);
        assert_eq!(c.dual(), Err(Error::FullCode));
    }

    #[test]
    fn duplicate_rows_and_zero() {
        let f = f4();
        let m = digits(&f, &[&[1, 2, 3], &[1, 2, 3]]);
        assert_eq!(LinearCode::from_rows(&m).unwrap().dim(), 1);
        let z = MatrixFq::zeros(&f, 2, 3);
        assert_eq!(LinearCode::from_rows(&z), Err(Error::ZeroCode));
    }

    #[test]
    fn repetition_dual_is_even_weight() {
        let f = FieldSpec::prime(2).unwrap();
        let rep = LinearCode::from_rows(&digits(&f, &[&[1, 1, 1]])).unwrap();
        let d = rep.dual().unwrap();
        assert_eq!(d.dim(), 2);
        assert!(d.contains(&[FieldElement::ONE, FieldElement::ONE, FieldElement::ZERO]).unwrap());
        assert_eq!(d.min_weight().unwrap(), 2);
        assert_eq!(rep.min_weight().unwrap(), 3);
        assert!(d.dual().unwrap().equals(&rep).unwrap());
    }

    #[test]
    fn both_routes_agree_on_hamming_code() {
        let f = FieldSpec::prime(2).unwrap();
        let h = digits(
            &f,
            &[&[1, 0, 0, 1, 1, 0, 1], &[0, 1, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1, 1, 1]],
        );
        let ham = LinearCode::from_rows(&h).unwrap().dual().unwrap();
        assert_eq!(ham.dim(), 4);
        for route in [WeightRoute::Codewords, WeightRoute::CheckColumns] {
            assert_eq!(ham.min_weight_with(Some(route), 1 << 20).unwrap(), 3);
        }
    }

    #[test]
    fn inverse_and_kernels() {
        let f = f4();
        let m = digits(&f, &[&[1, 2, 0], &[0, 1, 3], &[1, 0, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), MatrixFq::identity(&f, 3));
        let g = digits(&f, &[&[1, 0, 2, 3], &[0, 1, 1, 2]]);
        let k = g.right_kernel();
        assert_eq!(k.rows(), 2);
        assert!(g.mul(&k.transpose()).unwrap().is_zero());
        let lk = g.transpose().left_kernel();
        assert!(lk.mul(&g.transpose()).unwrap().is_zero());
    }

    #[test]
    fn shift_invariance_of_a_weight_one_code_fails() {
        let f = f4();
        let n = 4;
        let c = LinearCode::from_rows(&digits(&f, &[&[1, 0, 0, 0]])).unwrap();
        let mut shift = MatrixFq::zeros(&f, n, n);
        for i in 0..n {
            shift.set(i, (i + 1) % n, FieldElement::ONE);
        }
        let map = SemiLinearVectorMap::new(Automorphism::identity(&f), shift).unwrap();
        assert!(!c.invariant_under(&map).unwrap());
        let id = SemiLinearVectorMap::new(
            Automorphism::frobenius(&f, 0).unwrap(),
            MatrixFq::identity(&f, n),
        )
        .unwrap();
        assert!(c.invariant_under(&id).unwrap());
    }

    #[test]
    fn semilinear_inverse() {
        let f = f4();
        let t = digits(&f, &[&[0, 1], &[2, 3]]);
        let map = SemiLinearVectorMap::new(Automorphism::frobenius(&f, 1).unwrap(), t).unwrap();
        let v = vec![f.from_digit(2).unwrap(), f.from_digit(3).unwrap()];
        assert_eq!(map.apply_inverse(&map.apply(&v).unwrap()).unwrap(), v);
    }

    #[test]
    fn export_round_trip() {
        let f = f4();
        let c = LinearCode::from_rows(&digits(&f, &[&[1, 2, 3, 0]])).unwrap();
        let e = c.export(Some(3)).unwrap();
        assert_eq!(e.rows, vec![vec![1, 2, 3, 0]]);
        let back = MatrixFq::from_digit_rows(&f, &e.rows).unwrap();
        assert!(LinearCode::from_rows(&back).unwrap().equals(&c).unwrap());
    }
}

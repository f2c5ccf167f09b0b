//! Exact integer elimination: reduces a sparse integer matrix to a diagonal
//! form by unimodular row and column operations. The diagonal determines the
//! rank over Q, the rank over every F_p and the cokernel torsion over Z.

use std::collections::BTreeSet;
use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse integer matrix as a triplet list `(row, col, value)`. Duplicate
/// positions are summed when the matrix is consumed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.rows && col < self.cols);
        if value != 0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    /// Rows as sorted `(col, value)` lists with duplicates merged.
    pub fn row_lists(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.rows];
        for &(r, c, v) in &self.entries {
            rows[r].push((c, v));
        }
        for row in rows.iter_mut() {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 = last.1.checked_add(v).expect("matrix entry overflow"),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        rows
    }

    /// `self * other`, exact; `None` on overflow.
    pub fn checked_mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let right = other.row_lists();
        let mut acc: std::collections::BTreeMap<(usize, usize), i64> = Default::default();
        for (r, row) in self.row_lists().into_iter().enumerate() {
            for (k, v) in row {
                for &(c, w) in &right[k] {
                    let e = acc.entry((r, c)).or_insert(0);
                    *e = e.checked_add(v.checked_mul(w)?)?;
                }
            }
        }
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for ((r, c), v) in acc {
            out.push(r, c, v);
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.row_lists().iter().all(|r| r.is_empty())
    }
}

/// Diagonal form: the number of unit entries and the absolute values of the
/// remaining nonzero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagonalForm {
    pub units: usize,
    pub others: Vec<BigUint>,
}

impl DiagonalForm {
    pub fn rank(&self) -> usize {
        self.units + self.others.len()
    }

    pub fn rank_mod(&self, p: u64) -> usize {
        let p = BigUint::from(p);
        self.units + self.others.iter().filter(|d| !(*d % &p).is_zero()).count()
    }

    /// Prime-power orders of the cokernel's torsion summands, sorted.
    pub fn primary_torsion(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for d in &self.others {
            let d = d.to_u64().expect("torsion order exceeds 64 bits");
            out.extend(prime_power_factors(d));
        }
        out.sort_unstable();
        out
    }
}

pub(crate) fn prime_power_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut pk = 1;
            while n.is_multiple_of(p) {
                n /= p;
                pk *= p;
            }
            out.push(pk);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug)]
struct Overflow;

trait Scalar: Clone + Debug + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// `self - f * x`
    fn sub_mul(&self, f: &Self, x: &Self) -> Result<Self, Overflow>;
    fn mul(&self, other: &Self) -> Result<Self, Overflow>;
    /// Truncated quotient.
    fn quot(&self, d: &Self) -> Self;
    fn abs_big(&self) -> BigUint;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Result<Self, Overflow> {
        f.checked_mul(*x).and_then(|p| self.checked_sub(p)).ok_or(Overflow)
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*other).ok_or(Overflow)
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn abs_big(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Result<Self, Overflow> {
        Ok(self - f * x)
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self * other)
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn abs_big(&self) -> BigUint {
        self.abs().to_biguint().expect("nonnegative")
    }
}

/// Diagonalizes `m`, first in machine integers and, on overflow, again with
/// arbitrary precision.
pub fn diagonalize(m: &SparseMatrix) -> DiagonalForm {
    let rows = m.row_lists();
    match diagonalize_in::<i64>(&rows, m.cols) {
        Ok(d) => d,
        Err(Overflow) => diagonalize_in::<BigInt>(&rows, m.cols).expect("bigint arithmetic cannot overflow"),
    }
}

fn diagonalize_in<S: Scalar>(input: &[Vec<(usize, i64)>], ncols: usize) -> Result<DiagonalForm, Overflow> {
    let mut rows: Vec<Vec<(usize, S)>> =
        input.iter().map(|r| r.iter().map(|&(c, v)| (c, S::from_i64(v))).collect()).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
    }
    let mut queue: BTreeSet<(usize, usize)> = rows.iter().enumerate().map(|(r, row)| (row.len(), r)).collect();
    let mut stuck: BTreeSet<usize> = BTreeSet::new();
    let mut form = DiagonalForm::default();

    while let Some((len, r)) = queue.pop_first() {
        if len == 0 {
            continue;
        }
        let pivot = rows[r]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(c, _)| (col_rows[*c].len(), *c))
            .map(|(c, v)| (*c, v.clone()));
        let Some((pc, pv)) = pivot else {
            stuck.insert(r);
            continue;
        };
        form.units += 1;
        let prow = std::mem::take(&mut rows[r]);
        for (c, _) in &prow {
            col_rows[*c].remove(&r);
        }
        let others: Vec<usize> = col_rows[pc].iter().copied().collect();
        for r2 in others {
            let f = {
                let v = &rows[r2].iter().find(|(c, _)| *c == pc).expect("indexed").1;
                v.mul(&pv)?
            };
            let old_len = rows[r2].len();
            let updated = sub_row(&rows[r2], &f, &prow)?;
            // refresh column membership
            for (c, _) in &rows[r2] {
                col_rows[*c].remove(&r2);
            }
            for (c, _) in &updated {
                col_rows[*c].insert(r2);
            }
            rows[r2] = updated;
            if !queue.remove(&(old_len, r2)) {
                stuck.remove(&r2);
            }
            queue.insert((rows[r2].len(), r2));
        }
        debug_assert!(col_rows[pc].is_empty());
    }

    let residual: Vec<Vec<(usize, S)>> =
        stuck.into_iter().map(|r| std::mem::take(&mut rows[r])).filter(|r| !r.is_empty()).collect();
    if !residual.is_empty() {
        dense_diagonalize(residual, &mut form)?;
    }
    Ok(form)
}

fn sub_row<S: Scalar>(a: &[(usize, S)], f: &S, b: &[(usize, S)]) -> Result<Vec<(usize, S)>, Overflow> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let zero = S::from_i64(0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else {
            let base = if ca == cb { &a[i].1 } else { &zero };
            let v = base.sub_mul(f, &b[j].1)?;
            if !v.is_zero() {
                out.push((cb, v));
            }
            if ca == cb {
                i += 1;
            }
            j += 1;
        }
    }
    Ok(out)
}

fn dense_diagonalize<S: Scalar>(rows: Vec<Vec<(usize, S)>>, form: &mut DiagonalForm) -> Result<(), Overflow> {
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    let nr = rows.len();
    let nc = cols.len();
    let zero = S::from_i64(0);
    let mut a = vec![vec![zero.clone(); nc]; nr];
    for (i, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            a[i][cols.binary_search(&c).expect("collected")] = v;
        }
    }
    let mut row_done = vec![false; nr];
    let mut col_done = vec![false; nc];
    loop {
        let mut best: Option<(usize, usize)> = None;
        for i in (0..nr).filter(|&i| !row_done[i]) {
            for j in (0..nc).filter(|&j| !col_done[j]) {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs_lt(&a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((mut pr, mut pc)) = best else { break };
        loop {
            let p = a[pr][pc].clone();
            for i in (0..nr).filter(|&i| i != pr && !row_done[i]) {
                if a[i][pc].is_zero() {
                    continue;
                }
                let f = a[i][pc].quot(&p);
                if f.is_zero() {
                    continue;
                }
                for j in (0..nc).filter(|&j| !col_done[j]) {
                    if !a[pr][j].is_zero() {
                        a[i][j] = a[i][j].sub_mul(&f, &a[pr][j])?;
                    }
                }
            }
            for j in (0..nc).filter(|&j| j != pc && !col_done[j]) {
                if a[pr][j].is_zero() {
                    continue;
                }
                let f = a[pr][j].quot(&p);
                if f.is_zero() {
                    continue;
                }
                for i in (0..nr).filter(|&i| !row_done[i]) {
                    if !a[i][pc].is_zero() {
                        a[i][j] = a[i][j].sub_mul(&f, &a[i][pc])?;
                    }
                }
            }
            // any remainder in the pivot row or column is smaller than the pivot
            let mut smaller = None;
            for i in (0..nr).filter(|&i| i != pr && !row_done[i]) {
                if !a[i][pc].is_zero() {
                    smaller = Some((i, pc));
                    break;
                }
            }
            if smaller.is_none() {
                for j in (0..nc).filter(|&j| j != pc && !col_done[j]) {
                    if !a[pr][j].is_zero() {
                        smaller = Some((pr, j));
                        break;
                    }
                }
            }
            match smaller {
                Some((i, j)) => {
                    pr = i;
                    pc = j;
                }
                None => break,
            }
        }
        let p = &a[pr][pc];
        if p.is_unit() {
            form.units += 1;
        } else {
            form.others.push(p.abs_big());
        }
        row_done[pr] = true;
        col_done[pc] = true;
    }
    form.others.sort();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_dense(a: &[Vec<i64>]) -> SparseMatrix {
        let mut m = SparseMatrix::new(a.len(), a.first().map_or(0, |r| r.len()));
        for (i, r) in a.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.push(i, j, v);
            }
        }
        m
    }

    /// Determinantal-divisor oracle for small matrices: the product of the
    /// first k invariant factors is the gcd of all k x k minors.
    fn det(a: &[Vec<i128>]) -> i128 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    a[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    fn invariant_factor_oracle(a: &[Vec<i64>]) -> (usize, Vec<u64>) {
        let nr = a.len();
        let nc = a.first().map_or(0, |r| r.len());
        let mut divisors = vec![1i128];
        for k in 1..=nr.min(nc) {
            let mut g = 0i128;
            for rs in subsets(nr, k) {
                for cs in subsets(nc, k) {
                    let m: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c] as i128).collect()).collect();
                    g = gcd(g, det(&m));
                }
            }
            if g == 0 {
                break;
            }
            divisors.push(g);
        }
        let rank = divisors.len() - 1;
        let mut tors = Vec::new();
        for k in 1..=rank {
            let f = (divisors[k] / divisors[k - 1]) as u64;
            if f > 1 {
                tors.extend(prime_power_factors(f));
            }
        }
        tors.sort_unstable();
        (rank, tors)
    }

    #[test]
    fn small_cases() {
        let d = diagonalize(&from_dense(&[vec![2]]));
        assert_eq!((d.rank(), d.primary_torsion()), (1, vec![2]));
        assert_eq!(d.rank_mod(2), 0);
        let d = diagonalize(&from_dense(&[vec![2, 4], vec![6, 8]]));
        assert_eq!((d.rank(), d.primary_torsion()), (2, vec![2, 4]));
        let d = diagonalize(&SparseMatrix::new(3, 2));
        assert_eq!(d.rank(), 0);
        assert_eq!(prime_power_factors(360), vec![8, 9, 5]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let d = diagonalize(&from_dense(&[vec![big, 3], vec![3, big]]));
        assert_eq!(d.rank(), 2);
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(a in prop::collection::vec(prop::collection::vec(-4i64..5, 4), 1..5)) {
            let d = diagonalize(&from_dense(&a));
            let (rank, tors) = invariant_factor_oracle(&a);
            prop_assert_eq!(d.rank(), rank);
            prop_assert_eq!(d.primary_torsion(), tors);
        }
    }
}

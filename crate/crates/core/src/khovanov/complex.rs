use std::collections::BTreeMap;

use rayon::prelude::*;

use super::linalg::{diagonalize, DiagonalForm, SparseMatrix};
use super::{Cell, CoefficientRing, GradedTable};
use crate::bracket::LaurentPoly;

/// Bigraded cochain complex of free abelian groups. Degree `t_min + i` has
/// generators whose quantum gradings are `gens[i]`; `diffs[i]` maps degree
/// `t_min + i` to `t_min + i + 1` (rows index the target).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainComplex {
    pub t_min: i64,
    pub gens: Vec<Vec<i64>>,
    pub diffs: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(t_min: i64, gens: Vec<Vec<i64>>) -> Self {
        let diffs = (0..gens.len())
            .map(|i| SparseMatrix::new(gens.get(i + 1).map_or(0, |g| g.len()), gens[i].len()))
            .collect();
        ChainComplex { t_min, gens, diffs }
    }

    pub fn num_generators(&self) -> usize {
        self.gens.iter().map(|g| g.len()).sum()
    }

    /// Checks `d d = 0` exactly; `false` also on arithmetic overflow.
    pub fn check_d_squared(&self) -> bool {
        self.diffs.windows(2).all(|w| w[1].checked_mul(&w[0]).is_some_and(|m| m.is_zero()))
    }

    /// Checks that every differential entry preserves the quantum grading.
    pub fn check_q_preserved(&self) -> bool {
        self.diffs.iter().enumerate().all(|(i, d)| {
            d.entries().iter().all(|&(r, c, _)| self.gens[i + 1][r] == self.gens[i][c])
        })
    }

    pub fn euler_characteristic(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, g) in self.gens.iter().enumerate() {
            let s = if (self.t_min + i as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            for &q in g {
                p.add_term(2 * q, s);
            }
        }
        p
    }

    /// Diagonal forms of every `(t, q)` block of the differential, computed in
    /// parallel.
    pub fn homology_data(&self) -> HomologyData {
        let mut jobs: Vec<(usize, i64)> = Vec::new();
        let mut dims: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for (i, g) in self.gens.iter().enumerate() {
            let mut qs: BTreeMap<i64, usize> = BTreeMap::new();
            for &q in g {
                *qs.entry(q).or_default() += 1;
            }
            for (q, n) in qs {
                dims.insert((self.t_min + i as i64, q), n);
                jobs.push((i, q));
            }
        }
        let forms: Vec<((i64, i64), DiagonalForm)> = jobs
            .par_iter()
            .map(|&(i, q)| ((self.t_min + i as i64, q), diagonalize(&self.block(i, q))))
            .collect();
        HomologyData { dims, out_forms: forms.into_iter().collect() }
    }

    /// The block of `diffs[i]` between generators of quantum grading `q`.
    fn block(&self, i: usize, q: i64) -> SparseMatrix {
        let Some(target) = self.gens.get(i + 1) else {
            return SparseMatrix::new(0, 0);
        };
        let local = |g: &[i64]| {
            let mut map = vec![usize::MAX; g.len()];
            let mut n = 0;
            for (k, &qq) in g.iter().enumerate() {
                if qq == q {
                    map[k] = n;
                    n += 1;
                }
            }
            (map, n)
        };
        let (src, ns) = local(&self.gens[i]);
        let (dst, nt) = local(target);
        let mut m = SparseMatrix::new(nt, ns);
        for &(r, c, v) in self.diffs[i].entries() {
            if src[c] != usize::MAX {
                assert!(dst[r] != usize::MAX, "differential does not preserve q");
                m.push(dst[r], src[c], v);
            }
        }
        m
    }

    pub fn homology(&self, ring: CoefficientRing) -> GradedTable {
        self.homology_data().table(ring)
    }
}

/// Block dimensions and diagonal forms of the outgoing differential at each
/// `(t, q)`; enough to read off homology over every coefficient ring.
#[derive(Clone, Debug, Default)]
pub struct HomologyData {
    dims: BTreeMap<(i64, i64), usize>,
    out_forms: BTreeMap<(i64, i64), DiagonalForm>,
}

impl HomologyData {
    pub fn table(&self, ring: CoefficientRing) -> GradedTable {
        let empty = DiagonalForm::default();
        let mut tbl = GradedTable::new(ring);
        for (&(t, q), &dim) in &self.dims {
            let out = self.out_forms.get(&(t, q)).unwrap_or(&empty);
            let inc = self.out_forms.get(&(t - 1, q)).unwrap_or(&empty);
            let cell = match ring {
                CoefficientRing::Q => Cell::free((dim - out.rank() - inc.rank()) as u64),
                CoefficientRing::Fp(p) => Cell::free((dim - out.rank_mod(p) - inc.rank_mod(p)) as u64),
                CoefficientRing::Z => {
                    Cell { rank: (dim - out.rank() - inc.rank()) as u64, torsion: inc.primary_torsion() }
                }
            };
            tbl.add(t, q, cell);
        }
        tbl
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_differential_and_multiplication_by_two() {
        let c = ChainComplex::new(0, vec![vec![1, -1]]);
        let h = c.homology(CoefficientRing::Z);
        assert_eq!(h.rank(0, 1) + h.rank(0, -1), 2);

        let mut c = ChainComplex::new(-1, vec![vec![3], vec![3]]);
        c.diffs[0].push(0, 0, 2);
        assert!(c.check_d_squared() && c.check_q_preserved());
        let z = c.homology(CoefficientRing::Z);
        assert_eq!(z.get(0, 3), Cell { rank: 0, torsion: vec![2] });
        assert!(z.get(-1, 3).is_zero());
        let f2 = c.homology(CoefficientRing::Fp(2));
        assert_eq!((f2.rank(-1, 3), f2.rank(0, 3)), (1, 1));
        assert!(c.homology(CoefficientRing::Q).is_empty());
    }
}

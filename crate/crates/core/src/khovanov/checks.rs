use serde::Serialize;

use super::{khovanov, Cell, CoefficientRing, Engine, GradedTable, KhError};
use crate::linkdiag::{Diagram, R1Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dominance {
    Equal,
    /// First table at least as large in every cell, larger somewhere.
    FirstDominates,
    SecondDominates,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDiff {
    /// `((t, q), first, second)` for every differing cell, in `(t, q)` order.
    pub cells: Vec<((i64, i64), Cell, Cell)>,
    /// The differing cell that comes first in `(q, t)` order.
    pub first: Option<((i64, i64), Cell, Cell)>,
    pub total_rank: (u64, u64),
    pub total_torsion: (u64, u64),
    /// Compares free ranks (dimensions over a field).
    pub dominance: Dominance,
}

impl TableDiff {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

pub fn compare_tables(a: &GradedTable, b: &GradedTable) -> Result<TableDiff, KhError> {
    if a.ring != b.ring {
        return Err(KhError::RingMismatch(a.ring, b.ring));
    }
    let mut keys: Vec<(i64, i64)> = a.cells().chain(b.cells()).map(|(k, _)| k).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut cells = Vec::new();
    let (mut ge, mut le) = (true, true);
    for (t, q) in keys {
        let (ca, cb) = (a.get(t, q), b.get(t, q));
        ge &= ca.rank >= cb.rank;
        le &= ca.rank <= cb.rank;
        if ca != cb {
            cells.push(((t, q), ca, cb));
        }
    }
    let first = cells.iter().min_by_key(|((t, q), _, _)| (*q, *t)).cloned();
    let torsion = |x: &GradedTable| x.cells().map(|(_, c)| c.torsion.len() as u64).sum();
    let dominance = match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::FirstDominates,
        (false, true) => Dominance::SecondDominates,
        (false, false) => Dominance::Incomparable,
    };
    Ok(TableDiff {
        cells,
        first,
        total_rank: (a.total_rank(), b.total_rank()),
        total_torsion: (torsion(a), torsion(b)),
        dominance,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftCheck {
    /// `N_-(reoriented) - N_-(original)`
    pub k: i64,
    pub delta_t: i64,
    pub delta_q: i64,
    pub verified: bool,
}

/// Reverses the listed components and checks that the homology moves by
/// `(-k, -3k)`, computing both tables independently.
pub fn orientation_shift_check(
    d: &Diagram,
    reverse: &[usize],
    ring: CoefficientRing,
    engine: Engine,
) -> Result<ShiftCheck, KhError> {
    let d2 = d.reverse_components(reverse).map_err(|e| KhError::Reorientation(e.to_string()))?;
    let k = d2.n_minus() as i64 - d.n_minus() as i64;
    let a = khovanov(d, ring, engine)?;
    let b = khovanov(&d2, ring, engine)?;
    Ok(ShiftCheck { k, delta_t: -k, delta_q: -3 * k, verified: b == a.shifted(-k, -3 * k) })
}

/// Removes all kinks and checks that the homology is unchanged.
pub fn r1_invariance_check(d: &Diagram, ring: CoefficientRing, engine: Engine) -> Result<(bool, R1Report), KhError> {
    let (reduced, report) = d.r1_reduce();
    let before = khovanov(d, ring, engine)?;
    let after = khovanov(&reduced, ring, engine)?;
    Ok((before == after, report))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UctReport {
    pub cells_checked: usize,
    /// `((t, q), expected F_p dimension, actual)`
    pub failures: Vec<((i64, i64), u64, u64)>,
}

impl UctReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Universal coefficients: `dim_{F_p} H^{t,q} = rank H^{t,q}(Z) + #p-torsion
/// H^{t,q}(Z) + #p-torsion H^{t+1,q}(Z)`, cell by cell.
pub fn uct_check(z: &GradedTable, fp: &GradedTable) -> Result<UctReport, KhError> {
    let p = match (z.ring, fp.ring) {
        (CoefficientRing::Z, CoefficientRing::Fp(p)) => p,
        (a, b) => return Err(KhError::RingMismatch(a, b)),
    };
    let mut keys: Vec<(i64, i64)> = z.cells().map(|(k, _)| k).chain(fp.cells().map(|(k, _)| k)).collect();
    keys.extend(z.cells().map(|((t, q), _)| (t - 1, q)));
    keys.sort_unstable();
    keys.dedup();
    let mut report = UctReport::default();
    for (t, q) in keys {
        let expected = z.rank(t, q) + z.get(t, q).p_torsion(p) + z.get(t + 1, q).p_torsion(p);
        let actual = fp.rank(t, q);
        report.cells_checked += 1;
        if expected != actual {
            report.failures.push(((t, q), expected, actual));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::gen::braid_closure;

    #[test]
    fn hopf_reorientation() {
        let hopf = braid_closure(2, &[1, 1]).unwrap();
        let s = orientation_shift_check(&hopf, &[1], CoefficientRing::Q, Engine::Naive).unwrap();
        assert_eq!((s.k, s.delta_t, s.delta_q, s.verified), (2, -2, -6, true));
        let both = orientation_shift_check(&hopf, &[0, 1], CoefficientRing::Z, Engine::Naive).unwrap();
        assert_eq!((both.k, both.verified), (0, true));
        let none = orientation_shift_check(&hopf, &[], CoefficientRing::Q, Engine::Naive).unwrap();
        assert_eq!((none.k, none.verified), (0, true));
        assert!(orientation_shift_check(&hopf, &[5], CoefficientRing::Q, Engine::Naive).is_err());
    }

    #[test]
    fn compare_and_uct() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        let z = khovanov(&t, CoefficientRing::Z, Engine::Naive).unwrap();
        let f2 = khovanov(&t, CoefficientRing::Fp(2), Engine::Naive).unwrap();
        let f3 = khovanov(&t, CoefficientRing::Fp(3), Engine::Naive).unwrap();
        assert!(uct_check(&z, &f2).unwrap().ok());
        assert!(uct_check(&z, &f3).unwrap().ok());
        assert!(uct_check(&f2, &z).is_err());
        let diff = compare_tables(&f2, &f3.clone()).unwrap_err();
        assert!(matches!(diff, KhError::RingMismatch(..)));
        let mut f3_as_f2 = f3.clone();
        f3_as_f2.ring = CoefficientRing::Fp(2);
        let d = compare_tables(&f2, &f3_as_f2).unwrap();
        assert_eq!(d.cells.len(), 2);
        assert_eq!(d.first.as_ref().unwrap().0, (2, 7));
        assert_eq!(d.dominance, Dominance::FirstDominates);
        assert!(compare_tables(&f2, &f2).unwrap().is_empty());
    }
}

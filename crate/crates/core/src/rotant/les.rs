//! Consistency checks from the skein long exact sequence at a negative
//! crossing `x` of `D`:
//!
//! ```text
//! ... -> H^{t}_{q+1}(D1) -> H^{t}_{q}(D) -> H^{t-c}_{q-3c-1}(D0) -> H^{t+1}_{q+1}(D1) -> ...
//! ```
//!
//! where `D0`, `D1` are the 0- and 1-smoothings at `x`, `D1` carries the
//! inherited orientation and `c = N_-(D0) - N_-(D)` for whatever orientation
//! `D0` was given.

use std::collections::BTreeSet;

use super::RotantError;
use crate::bracket::LaurentPoly;
use crate::khovanov::{khovanov, CoefficientRing, Engine, GradedTable};
use crate::linkdiag::{CrossingSite, Diagram, Smoothing};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LesReport {
    pub c: i64,
    /// Orientation flags used for `D0`.
    pub d0_orientation: Vec<bool>,
    pub cells_checked: usize,
    /// `(t, q)` where `dim H(D)` exceeds the sum of its neighbours.
    pub subadditivity_failures: Vec<(i64, i64)>,
    pub euler_ok: bool,
    /// Cells where both adjacent `D1` groups vanish.
    pub forced: usize,
    pub forced_failures: Vec<(i64, i64)>,
}

impl LesReport {
    pub fn ok(&self) -> bool {
        self.subadditivity_failures.is_empty() && self.euler_ok && self.forced_failures.is_empty()
    }
}

/// Computes the three tables over a field and runs [`les_check_tables`].
pub fn les_check(
    d: &Diagram,
    crossing: usize,
    ring: CoefficientRing,
    engine: Engine,
) -> Result<LesReport, RotantError> {
    if !ring.is_field() {
        return Err(RotantError::NotAField(ring));
    }
    let n = d.num_crossings();
    if crossing >= n {
        return Err(crate::linkdiag::DiagramError::InvalidCrossing { index: crossing, count: n }.into());
    }
    if d.signs()[crossing] > 0 {
        return Err(RotantError::PositiveCrossing(crossing));
    }
    let d0 = d.resolve(CrossingSite { crossing, smoothing: Smoothing::Zero })?.diagram;
    let d1 = d.resolve(CrossingSite { crossing, smoothing: Smoothing::One })?.diagram;
    let c = d0.n_minus() as i64 - d.n_minus() as i64;
    let kd = khovanov(d, ring, engine)?;
    let k0 = khovanov(&d0, ring, engine)?;
    let k1 = khovanov(&d1, ring, engine)?;
    let mut report = les_check_tables(&kd, &k1, &k0, c);
    report.d0_orientation = d0.orientation().to_vec();
    Ok(report)
}

/// The checks on given tables of `D`, `D1`, `D0` (ranks only).
pub fn les_check_tables(kd: &GradedTable, k1: &GradedTable, k0: &GradedTable, c: i64) -> LesReport {
    let mut keys: BTreeSet<(i64, i64)> = kd.cells().map(|(k, _)| k).collect();
    keys.extend(k1.cells().flat_map(|((t, q), _)| [(t, q - 1), (t - 1, q - 1)]));
    keys.extend(k0.cells().map(|((t, q), _)| (t + c, q + 3 * c + 1)));
    let mut report = LesReport { c, ..Default::default() };
    for (t, q) in keys {
        report.cells_checked += 1;
        let here = kd.rank(t, q);
        let left = k1.rank(t, q + 1);
        let right = k0.rank(t - c, q - 3 * c - 1);
        if here > left + right {
            report.subadditivity_failures.push((t, q));
        }
        if left == 0 && k1.rank(t + 1, q + 1) == 0 {
            report.forced += 1;
            if here != right {
                report.forced_failures.push((t, q));
            }
        }
    }
    let sign = if c.rem_euclid(2) == 0 { 1 } else { -1 };
    let rhs: LaurentPoly = &k1.euler_characteristic().shift(-2) + &k0.euler_characteristic().shift(2 * (3 * c + 1)).scale(sign);
    report.euler_ok = kd.euler_characteristic() == rhs;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanov::Cell;
    use crate::linkdiag::gen::braid_closure;

    #[test]
    fn negative_kink_and_trefoil() {
        let kink = Diagram::new(vec![[1, 2, 2, 1]], 0).unwrap();
        assert_eq!(kink.signs(), &[-1]);
        assert!(les_check(&kink, 0, CoefficientRing::Q, Engine::Naive).unwrap().ok());
        let left = braid_closure(2, &[-1, -1, -1]).unwrap();
        for x in 0..3 {
            for ring in [CoefficientRing::Q, CoefficientRing::Fp(2)] {
                let r = les_check(&left, x, ring, Engine::Naive).unwrap();
                assert!(r.ok(), "{r:?}");
                assert!(r.forced > 0);
            }
        }
    }

    #[test]
    fn rejects_positive_crossings_and_integers() {
        let right = braid_closure(2, &[1, 1, 1]).unwrap();
        assert!(matches!(les_check(&right, 0, CoefficientRing::Q, Engine::Naive), Err(RotantError::PositiveCrossing(0))));
        let left = right.mirror();
        assert!(matches!(les_check(&left, 0, CoefficientRing::Z, Engine::Naive), Err(RotantError::NotAField(_))));
        assert!(les_check(&left, 7, CoefficientRing::Q, Engine::Naive).is_err());
    }

    #[test]
    fn corrupted_table_fails() {
        let left = braid_closure(2, &[-1, -1, -1]).unwrap();
        let d0 = left.resolve(CrossingSite { crossing: 0, smoothing: Smoothing::Zero }).unwrap().diagram;
        let d1 = left.resolve(CrossingSite { crossing: 0, smoothing: Smoothing::One }).unwrap().diagram;
        let c = d0.n_minus() as i64 - left.n_minus() as i64;
        let q = CoefficientRing::Q;
        let (kd, k0, k1) = (
            khovanov(&left, q, Engine::Naive).unwrap(),
            khovanov(&d0, q, Engine::Naive).unwrap(),
            khovanov(&d1, q, Engine::Naive).unwrap(),
        );
        assert!(les_check_tables(&kd, &k1, &k0, c).ok());
        let ((t, qq), _) = kd.cells().next().unwrap();
        let mut bad = kd.clone();
        bad.add(t, qq, Cell::free(1));
        let r = les_check_tables(&bad, &k1, &k0, c);
        assert!(!r.euler_ok);
        assert!(!r.ok());
    }
}

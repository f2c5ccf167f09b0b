//! Random and sample rotors, stators and rotant pairs.
//!
//! Rotors are assembled from `n` copies of one sector. A sector with `k`
//! radial connections has `2k + 2` boundary points, counterclockwise:
//! `R_1 .. R_k` up its right edge (inside out), the two outer points, then
//! `L_k .. L_1` down its left edge. `L_j` of each sector is glued to `R_j` of
//! the next one.

use rand::Rng;

use super::{compose, exterior, glue_tangles, FixtureJson, RotantError, Rotor, TangleJson};
use crate::linkdiag::gen::{random_noncrossing_matching, random_twist_site};
use crate::linkdiag::{Diagram, Tangle};

/// Replicates `sector` (with `k` radial connections) `n` times around the
/// centre.
pub fn sector_rotor(sector: &Tangle, k: usize, n: usize) -> Result<Rotor, RotantError> {
    let m = 2 * k + 2;
    if sector.boundary().len() != m {
        return Err(RotantError::BoundaryMismatch { expected: m, got: sector.boundary().len() });
    }
    let parts: Vec<&Tangle> = vec![sector; n];
    let mut pairs = Vec::new();
    for p in 0..n {
        for j in 1..=k {
            pairs.push(((p, m - j), ((p + 1) % n, j - 1)));
        }
    }
    let outer: Vec<(usize, usize)> = (0..n).flat_map(|p| [(p, k), (p, k + 1)]).collect();
    let (t, _) = glue_tangles(&parts, &pairs, &outer)?;
    Rotor::new(t.compact_labels(), n)
}

/// A crossingless tangle with `2k + 2` points and up to `max_crossings`
/// crossings, each inserted between two arcs of a common face.
pub fn random_sector<R: Rng + ?Sized>(rng: &mut R, k: usize, max_crossings: usize) -> Tangle {
    let pairs = random_noncrossing_matching(rng, k + 1);
    let mut t = Tangle::crossingless(2 * k + 2, &pairs).expect("perfect matching");
    for _ in 0..max_crossings {
        if !rng.random_bool(0.8) {
            continue;
        }
        let Some((a, b)) = random_twist_site(rng, &t) else { break };
        t = t.insert_twists(a, b, if rng.random_bool(0.5) { 1 } else { -1 }).expect("site shares a face").tangle;
    }
    t
}

/// A random rotor of order `n` with at most `max_per_sector` crossings in each
/// sector.
pub fn random_rotor<R: Rng + ?Sized>(rng: &mut R, n: usize, max_per_sector: usize) -> Result<Rotor, RotantError> {
    let k = rng.random_range(1..=3);
    sector_rotor(&random_sector(rng, k, max_per_sector), k, n)
}

/// A random stator for a rotor with `2n` ends: a crossingless matching with a
/// few twist regions.
pub fn random_stator<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Tangle {
    let pairs = random_noncrossing_matching(rng, n);
    let mut t = Tangle::crossingless(2 * n, &pairs).expect("perfect matching");
    for _ in 0..rng.random_range(1..=4) {
        let Some((a, b)) = random_twist_site(rng, &t) else { break };
        let k = rng.random_range(1..=3i64);
        t = t.insert_twists(a, b, if rng.random_bool(0.5) { k } else { -k }).expect("site shares a face").tangle;
    }
    exterior(&t)
}

/// `(S ∪ R, S ∪ flip(R))` for a random stator and rotor of order `n`. The
/// orientations are the defaults; pair them with
/// [`super::writhe_match_check`].
pub fn random_rotant_pair<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_per_sector: usize,
) -> Result<(Diagram, Diagram), RotantError> {
    let rotor = random_rotor(rng, n, max_per_sector)?;
    let stator = random_stator(rng, n);
    let d = compose(&stator, rotor.tangle())?;
    let dr = compose(&stator, rotor.flipped(0)?.tangle())?;
    Ok((d, dr))
}

/// A small sample fixture: a 3-fold rotor of clasps, closed by a stator with a
/// twist site between two of its arcs.
pub fn sample_fixture() -> FixtureJson {
    let sector = Tangle::new(vec![[1, 2, 3, 4]], vec![1, 2, 3, 4], 0).expect("valid sector");
    let rotor = sector_rotor(&sector, 1, 3).expect("symmetric by construction");
    let stator = exterior(&Tangle::crossingless(6, &[(0, 1), (2, 5), (3, 4)]).expect("perfect matching"));
    FixtureJson {
        stator: TangleJson::from_tangle(&stator),
        rotor: TangleJson::from_tangle(rotor.tangle()),
        twist_site: [2, 3],
        orientation_rules: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn sector_rotors_are_symmetric() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 3..=5 {
            for _ in 0..5 {
                let r = random_rotor(&mut rng, n, 2).unwrap();
                assert_eq!(r.tangle().boundary().len(), 2 * n);
                assert!(r.tangle().is_planar());
                assert!(r.flipped(1).is_ok());
            }
        }
    }

    #[test]
    fn random_pairs_are_planar_and_flip_preserves_crossings() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for n in 3..=5 {
            for _ in 0..5 {
                let (d, dr) = random_rotant_pair(&mut rng, n, 2).unwrap();
                assert_eq!(d.num_crossings(), dr.num_crossings());
            }
        }
    }

    #[test]
    fn wrong_sector_size() {
        let t = Tangle::crossingless(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(sector_rotor(&t, 2, 3), Err(RotantError::BoundaryMismatch { .. })));
    }
}

//! Rotors, stators and rotant pairs.
//!
//! A rotor is a tangle with `2n` boundary points that is carried to itself by
//! the rotation sending boundary point `i` to `i + 2`. Flipping the rotor over
//! (a half turn about a diameter) and gluing it back into the stator gives the
//! rotant partner.
//!
//! Stator boundaries are listed in the same counterclockwise order as the
//! rotor they surround, so [`compose`] glues point `i` to point `i`. A disk
//! tangle drawn in its own coordinates becomes a stator through [`exterior`].

mod family;
pub mod gen;
mod les;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::khovanov::KhError;
use crate::linkdiag::{ArcLabel, Diagram, DiagramError, Tangle, TangleIso};

pub use family::{
    grading_params, one_resolution_limit, proposition_chain_check, ArithmeticRow, ChainOptions, ChainReport,
    FamilyParams, Fixture, FixtureJson, LesRow, OrientationRules, SupportRow, SupportSource, LIMIT_SUPPORT_MIN,
};
pub use les::{les_check, les_check_tables, LesReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotantError {
    #[error("expected {expected} boundary points, found {got}")]
    BoundaryMismatch { expected: usize, got: usize },
    #[error("rotational order must be at least 3, got {0}")]
    InvalidOrder(usize),
    #[error("tangle is not {0}-fold rotationally symmetric")]
    NotSymmetric(usize),
    #[error("axis {axis} out of range for {points} boundary points")]
    InvalidAxis { axis: usize, points: usize },
    #[error("crossing {0} is positive; the sequence is set up for negative crossings")]
    PositiveCrossing(usize),
    #[error("diagram carries no twist region")]
    NotFromFamily,
    #[error("homology over {0} is not over a field")]
    NotAField(crate::khovanov::CoefficientRing),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Homology(#[from] KhError),
    #[error("invalid fixture: {0}")]
    Fixture(String),
}

/// Serialized tangle: crossings, boundary labels in counterclockwise order,
/// crossingless loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleJson {
    pub crossings: Vec<[ArcLabel; 4]>,
    pub boundary: Vec<ArcLabel>,
    #[serde(default)]
    pub loops: u32,
}

impl TangleJson {
    pub fn from_tangle(t: &Tangle) -> Self {
        TangleJson { crossings: t.crossings().to_vec(), boundary: t.boundary().to_vec(), loops: t.loops() }
    }

    pub fn to_tangle(&self) -> Result<Tangle, DiagramError> {
        let t = Tangle::new(self.crossings.clone(), self.boundary.clone(), self.loops)?;
        if !t.is_planar() {
            return Err(DiagramError::NonPlanar);
        }
        Ok(t)
    }
}

/// A tangle with verified `order`-fold rotational symmetry.
#[derive(Clone, Debug)]
pub struct Rotor {
    tangle: Tangle,
    order: usize,
    witness: TangleIso,
}

impl Rotor {
    pub fn new(tangle: Tangle, order: usize) -> Result<Self, RotantError> {
        if order < 3 {
            return Err(RotantError::InvalidOrder(order));
        }
        let witness = check_rotational_symmetry(&tangle, order)?.ok_or(RotantError::NotSymmetric(order))?;
        Ok(Rotor { tangle, order, witness })
    }

    pub fn tangle(&self) -> &Tangle {
        &self.tangle
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The automorphism realizing one step of the rotation.
    pub fn witness(&self) -> &TangleIso {
        &self.witness
    }

    /// The rotor turned over about `axis`; still a rotor of the same order.
    pub fn flipped(&self, axis: usize) -> Result<Rotor, RotantError> {
        Rotor::new(rotate_pi(&self.tangle, axis)?, self.order)
    }
}

/// Looks for an automorphism of `t` moving boundary point `i` to `i + 2`.
pub fn check_rotational_symmetry(t: &Tangle, n: usize) -> Result<Option<TangleIso>, RotantError> {
    if t.boundary().len() != 2 * n {
        return Err(RotantError::BoundaryMismatch { expected: 2 * n, got: t.boundary().len() });
    }
    Ok(t.find_isomorphism(t, 2))
}

/// Half turn about a diameter: every crossing is reflected and switched.
/// Axis `a` is the diameter through the gap between boundary points `a` and
/// `a + 1`, so point `j` goes to `2a + 1 - j`. Axes `a` and `a + n` coincide;
/// neighbouring axes differ by one step of the rotor's rotation.
pub fn rotate_pi(t: &Tangle, axis: usize) -> Result<Tangle, RotantError> {
    let m = t.boundary().len();
    if axis >= m.max(1) {
        return Err(RotantError::InvalidAxis { axis, points: m });
    }
    let crossings = t.crossings().iter().map(|&[a, b, c, d]| [d, c, b, a]).collect();
    let boundary = (0..m).map(|j| t.boundary()[(2 * axis + 1 + 2 * m - j) % m]).collect();
    Ok(Tangle::new(crossings, boundary, t.loops())?)
}

/// Reverses the boundary order, turning a disk tangle into the complementary
/// disk's point of view (and back).
pub fn exterior(t: &Tangle) -> Tangle {
    let m = t.boundary().len();
    let boundary = (0..m).map(|j| t.boundary()[(m - j) % m]).collect();
    Tangle::new(t.crossings().to_vec(), boundary, t.loops()).expect("same arcs")
}

/// Glues tangles along pairs of boundary points `(part, index)`. The result has
/// boundary `outer`; crossings keep their order (part by part), and chains of
/// glued arcs that close up without meeting a crossing become loops. Returns
/// the new label of every arc of every part.
/// `(part, boundary position)`.
pub(crate) type PartEnd = (usize, usize);

pub(crate) fn glue_tangles(
    parts: &[&Tangle],
    pairs: &[(PartEnd, PartEnd)],
    outer: &[(usize, usize)],
) -> Result<(Tangle, Vec<HashMap<ArcLabel, ArcLabel>>), DiagramError> {
    let mut offset = Vec::with_capacity(parts.len());
    let mut next = 0;
    for p in parts {
        offset.push(next);
        next += p.labels().max().unwrap_or(0) + 1;
    }
    let global = |p: usize, l: ArcLabel| l + offset[p];
    let mut parent: HashMap<ArcLabel, ArcLabel> = HashMap::new();
    fn find(parent: &mut HashMap<ArcLabel, ArcLabel>, mut x: ArcLabel) -> ArcLabel {
        while let Some(&p) = parent.get(&x) {
            if p == x {
                break;
            }
            x = p;
        }
        x
    }
    for &((p, i), (q, j)) in pairs {
        let a = find(&mut parent, global(p, parts[p].boundary()[i]));
        let b = find(&mut parent, global(q, parts[q].boundary()[j]));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            parent.insert(hi, lo);
            parent.entry(lo).or_insert(lo);
        }
    }
    let maps: Vec<HashMap<ArcLabel, ArcLabel>> = parts
        .iter()
        .enumerate()
        .map(|(p, t)| t.labels().map(|l| (l, find(&mut parent, global(p, l)))).collect())
        .collect();
    let mut crossings = Vec::new();
    for (p, t) in parts.iter().enumerate() {
        for q in t.crossings() {
            crossings.push(q.map(|l| maps[p][&l]));
        }
    }
    let boundary: Vec<ArcLabel> = outer.iter().map(|&(p, i)| maps[p][&parts[p].boundary()[i]]).collect();
    let mut used: Vec<ArcLabel> = crossings.iter().flatten().copied().chain(boundary.iter().copied()).collect();
    used.sort_unstable();
    let mut closed: Vec<ArcLabel> =
        maps.iter().flat_map(|m| m.values().copied()).filter(|l| used.binary_search(l).is_err()).collect();
    closed.sort_unstable();
    closed.dedup();
    let loops = parts.iter().map(|t| t.loops()).sum::<u32>() + closed.len() as u32;
    Ok((Tangle::new(crossings, boundary, loops)?, maps))
}

/// Closes the rotor with the stator, point `i` to point `i`. Stator arcs keep
/// their labels unless two of them merge, in which case the smaller survives;
/// the returned map gives the new label of every stator arc.
pub fn compose_with_map(stator: &Tangle, rotor: &Tangle) -> Result<(Diagram, HashMap<ArcLabel, ArcLabel>), RotantError> {
    let m = rotor.boundary().len();
    if stator.boundary().len() != m {
        return Err(RotantError::BoundaryMismatch { expected: m, got: stator.boundary().len() });
    }
    let pairs: Vec<_> = (0..m).map(|i| ((0, i), (1, i))).collect();
    let (t, mut maps) = glue_tangles(&[stator, rotor], &pairs, &[])?;
    Ok((Diagram::from_tangle(t)?, maps.swap_remove(0)))
}

/// Closes the rotor with the stator.
pub fn compose(stator: &Tangle, rotor: &Tangle) -> Result<Diagram, RotantError> {
    Ok(compose_with_map(stator, rotor)?.0)
}

/// Writhe of every orientation choice (first component fixed), as absolute
/// reversal flags.
pub fn orientation_writhes(d: &Diagram) -> Vec<(Vec<bool>, i64)> {
    d.orientation_choices()
        .into_iter()
        .map(|f| {
            let flips: Vec<bool> = f.iter().zip(d.orientation()).map(|(a, b)| a != b).collect();
            let w = d.signs_with_flips(&flips).iter().map(|&s| s as i64).sum();
            (f, w)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WritheMatch {
    pub a: Vec<bool>,
    pub b: Vec<bool>,
    pub writhe: i64,
}

/// Finds orientations of `a` and `b` with equal writhe, trying `a`'s current
/// orientation first.
pub fn writhe_match_check(a: &Diagram, b: &Diagram) -> Option<WritheMatch> {
    let wb = orientation_writhes(b);
    for (fa, w) in orientation_writhes(a) {
        if let Some((fb, _)) = wb.iter().find(|(_, x)| *x == w) {
            return Some(WritheMatch { a: fa, b: fb.clone(), writhe: w });
        }
    }
    None
}

/// Adds `n` half-twists between arcs `a` and `b` of a closed diagram.
pub fn insert_twists(d: &Diagram, site: (ArcLabel, ArcLabel), n: i64) -> Result<Diagram, RotantError> {
    Ok(d.insert_twists(site.0, site.1, n)?)
}

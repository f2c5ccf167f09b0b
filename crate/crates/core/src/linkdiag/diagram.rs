use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::planar::{ArcLabel, DirectedArc, End, Tangle};
use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Smoothing {
    /// A-smoothing: joins slots (0,1) and (2,3).
    Zero,
    /// B-smoothing: joins slots (1,2) and (3,0).
    One,
}

impl Smoothing {
    pub(crate) fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::Zero => [(0, 1), (2, 3)],
            Smoothing::One => [(1, 2), (3, 0)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingSite {
    pub crossing: usize,
    pub smoothing: Smoothing,
}

/// Construction metadata for a run of half-twists added by
/// [`Diagram::insert_twists`]; crossings are listed lowest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRegion {
    pub site: (ArcLabel, ArcLabel),
    pub twists: i64,
    pub crossings: Vec<usize>,
}

/// A link component with at least one crossing, arcs in orientation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub arcs: Vec<ArcLabel>,
}

/// An oriented, planar link diagram.
#[derive(Clone, Debug)]
pub struct Diagram {
    code: Tangle,
    reversed: Vec<bool>,
    twists: Vec<TwistRegion>,
    components: Vec<Vec<DirectedArc>>,
    heads: BTreeMap<ArcLabel, End>,
    signs: Vec<i8>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.reversed == other.reversed && self.twists == other.twists
    }
}
impl Eq for Diagram {}

enum Orient<'a> {
    Default,
    Flags(&'a [bool]),
    Hints(&'a BTreeMap<ArcLabel, End>),
}

/// Serialized form: `{"crossings":[[a,b,c,d],...],"loops":k,"orientations":[±1,...]}`.
/// Orientations are relative to each component's canonical traversal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<[ArcLabel; 4]>,
    #[serde(default)]
    pub loops: u32,
    #[serde(default)]
    pub orientations: Vec<i8>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub twists: Vec<TwistRegion>,
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub diagram: Diagram,
    /// Sign of the resolved crossing in the original diagram.
    pub sign: i8,
    /// Crossingless circles created by the smoothing.
    pub loops_created: u32,
    /// Whether the smoothing is the orientation-respecting one.
    pub oriented: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct R1Report {
    pub removed: usize,
    pub removed_signs: Vec<i8>,
    pub writhe_change: i64,
    pub n_minus_change: i64,
}

impl Diagram {
    /// Diagram with default orientations: each component follows its
    /// under-strands from slot 0 to slot 2 when that is consistent along the
    /// component, and its canonical traversal otherwise.
    pub fn new(crossings: Vec<[ArcLabel; 4]>, loops: u32) -> Result<Self, DiagramError> {
        Self::from_tangle(Tangle::new(crossings, Vec::new(), loops)?)
    }

    pub fn from_tangle(code: Tangle) -> Result<Self, DiagramError> {
        Self::build(code, Orient::Default, Vec::new())
    }

    fn build(code: Tangle, orient: Orient<'_>, twists: Vec<TwistRegion>) -> Result<Self, DiagramError> {
        if !code.boundary().is_empty() {
            return Err(DiagramError::NotClosed(code.boundary().len()));
        }
        if code.num_crossings() == 0 && code.loops() == 0 {
            return Err(DiagramError::Empty);
        }
        if !code.is_planar() {
            return Err(DiagramError::NonPlanar);
        }
        let canonical: Vec<Vec<DirectedArc>> = code.strands().into_iter().map(|s| s.arcs).collect();
        let reversed: Vec<bool> = match orient {
            Orient::Flags(f) => {
                if f.len() != canonical.len() {
                    return Err(DiagramError::OrientationLength { got: f.len(), expected: canonical.len() });
                }
                f.to_vec()
            }
            Orient::Default => canonical.iter().map(|c| default_reversal(c)).collect(),
            Orient::Hints(h) => canonical
                .iter()
                .map(|c| {
                    c.iter()
                        .find_map(|a| h.get(&a.label).map(|&head| head != a.to))
                        .unwrap_or_else(|| default_reversal(c))
                })
                .collect(),
        };
        let components: Vec<Vec<DirectedArc>> = canonical
            .into_iter()
            .zip(&reversed)
            .map(|(c, &rev)| {
                if rev {
                    c.into_iter().rev().map(|a| DirectedArc { label: a.label, from: a.to, to: a.from }).collect()
                } else {
                    c
                }
            })
            .collect();
        let heads: BTreeMap<ArcLabel, End> =
            components.iter().flatten().map(|a| (a.label, a.to)).collect();
        let signs = code
            .crossings()
            .iter()
            .enumerate()
            .map(|(x, q)| {
                let su = if heads[&q[0]] == End::slot(x, 0) { 1 } else { -1 };
                let so = if heads[&q[1]] == End::slot(x, 1) { 1 } else { -1 };
                -su * so
            })
            .collect();
        Ok(Diagram { code, reversed, twists, components, heads, signs })
    }

    pub fn code(&self) -> &Tangle {
        &self.code
    }

    pub fn crossings(&self) -> &[[ArcLabel; 4]] {
        self.code.crossings()
    }

    pub fn num_crossings(&self) -> usize {
        self.code.num_crossings()
    }

    pub fn loops(&self) -> u32 {
        self.code.loops()
    }

    /// Components carrying at least one crossing (free loops excluded).
    pub fn components(&self) -> Vec<Component> {
        self.components.iter().map(|c| Component { arcs: c.iter().map(|a| a.label).collect() }).collect()
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Total number of link components, free loops included.
    pub fn num_link_components(&self) -> usize {
        self.components.len() + self.loops() as usize
    }

    /// Per-component reversal flags relative to the canonical traversal.
    pub fn orientation(&self) -> &[bool] {
        &self.reversed
    }

    pub fn head(&self, label: ArcLabel) -> End {
        self.heads[&label]
    }

    pub fn twist_regions(&self) -> &[TwistRegion] {
        &self.twists
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn n_plus(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn component_of(&self, label: ArcLabel) -> usize {
        self.components.iter().position(|c| c.iter().any(|a| a.label == label)).expect("arc present")
    }

    /// Crossing signs after reversing the components flagged in `flip`.
    pub fn signs_with_flips(&self, flip: &[bool]) -> Vec<i8> {
        let comp: HashMap<ArcLabel, usize> = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |a| (a.label, i)))
            .collect();
        self.crossings()
            .iter()
            .zip(&self.signs)
            .map(|(q, &s)| if flip[comp[&q[0]]] != flip[comp[&q[1]]] { -s } else { s })
            .collect()
    }

    pub fn with_orientation(&self, reversed: &[bool]) -> Result<Diagram, DiagramError> {
        Self::build(self.code.clone(), Orient::Flags(reversed), self.twists.clone())
    }

    /// Reverses the listed components.
    pub fn reverse_components(&self, which: &[usize]) -> Result<Diagram, DiagramError> {
        let mut flags = self.reversed.clone();
        for &i in which {
            let n = flags.len();
            let f = flags.get_mut(i).ok_or(DiagramError::OrientationLength { got: i + 1, expected: n })?;
            *f = !*f;
        }
        self.with_orientation(&flags)
    }

    /// All orientation choices up to global reversal: the first component keeps
    /// its current direction.
    pub fn orientation_choices(&self) -> Vec<Vec<bool>> {
        let c = self.reversed.len();
        if c == 0 {
            return vec![Vec::new()];
        }
        (0..1u64 << (c - 1))
            .map(|m| {
                let mut f = self.reversed.clone();
                for (i, flag) in f.iter_mut().enumerate().skip(1) {
                    if m >> (i - 1) & 1 == 1 {
                        *flag = !*flag;
                    }
                }
                f
            })
            .collect()
    }

    /// Crossing change at every crossing; orientations are kept.
    pub fn mirror(&self) -> Diagram {
        let code = self.code.mirror();
        let hints = self
            .heads
            .iter()
            .map(|(&l, &e)| {
                let e = match e {
                    End::Slot { crossing, slot } => End::slot(crossing, (slot + 3) % 4),
                    b => b,
                };
                (l, e)
            })
            .collect();
        Self::build(code, Orient::Hints(&hints), self.twists.clone()).expect("mirror of a valid diagram")
    }

    /// Smooths one crossing. The 1-smoothing of a negative crossing (and the
    /// 0-smoothing of a positive one) inherits the orientation; otherwise each new
    /// component follows the old direction of its earliest surviving arc.
    pub fn resolve(&self, site: CrossingSite) -> Result<Resolution, DiagramError> {
        let n = self.num_crossings();
        let x = site.crossing;
        if x >= n {
            return Err(DiagramError::InvalidCrossing { index: x, count: n });
        }
        let quad = self.crossings()[x];
        let mut rep: HashMap<ArcLabel, ArcLabel> = quad.iter().map(|&l| (l, l)).collect();
        fn root(rep: &HashMap<ArcLabel, ArcLabel>, mut l: ArcLabel) -> ArcLabel {
            while rep[&l] != l {
                l = rep[&l];
            }
            l
        }
        for (i, j) in site.smoothing.pairs() {
            let (ri, rj) = (root(&rep, quad[i]), root(&rep, quad[j]));
            let (lo, hi) = (ri.min(rj), ri.max(rj));
            rep.insert(hi, lo);
        }
        let rename = |l: ArcLabel| if rep.contains_key(&l) { root(&rep, l) } else { l };
        let crossings: Vec<[ArcLabel; 4]> = self
            .crossings()
            .iter()
            .enumerate()
            .filter(|&(y, _)| y != x)
            .map(|(_, q)| [rename(q[0]), rename(q[1]), rename(q[2]), rename(q[3])])
            .collect();
        let mut classes: Vec<ArcLabel> = quad.iter().map(|&l| root(&rep, l)).collect();
        classes.sort_unstable();
        classes.dedup();
        let loops_created =
            classes.iter().filter(|&&r| !crossings.iter().any(|q| q.contains(&r))).count() as u32;
        let code = Tangle::new(crossings, Vec::new(), self.loops() + loops_created)?;

        let to_old = |e: End| match e {
            End::Slot { crossing, slot } => End::slot(if crossing < x { crossing } else { crossing + 1 }, slot),
            b => b,
        };
        let mut hints = BTreeMap::new();
        for l in code.labels() {
            if !self.code.contains_arc(l) {
                continue;
            }
            let old_ends = self.code.ends(l);
            for e in code.ends(l) {
                let oe = to_old(e);
                if old_ends.contains(&oe) {
                    let head = if self.heads[&l] == oe { e } else { code.other_end(l, e) };
                    hints.insert(l, head);
                    break;
                }
            }
        }
        let twists = shift_twists(&self.twists, x);
        let sign = self.signs[x];
        let oriented = (sign > 0) == (site.smoothing == Smoothing::Zero);
        let diagram = match Self::build(code.clone(), Orient::Hints(&hints), twists.clone()) {
            Ok(d) => d,
            Err(DiagramError::Empty) => unreachable!("smoothing never removes loops"),
            Err(e) => return Err(e),
        };
        Ok(Resolution { diagram, sign, loops_created, oriented })
    }

    /// Removes Reidemeister-1 kinks (a crossing with two adjacent slots joined by
    /// one arc) until none remain. Orientation of the surviving strands is kept.
    pub fn r1_reduce(&self) -> (Diagram, R1Report) {
        let mut cur = self.clone();
        let mut report = R1Report::default();
        loop {
            let kink = cur.crossings().iter().enumerate().find_map(|(x, q)| {
                (0..4).find(|&p| q[p] == q[(p + 1) % 4]).map(|p| (x, p))
            });
            let Some((x, p)) = kink else { break };
            let sign = cur.signs[x];
            report.removed += 1;
            report.removed_signs.push(sign);
            report.writhe_change -= sign as i64;
            if sign < 0 {
                report.n_minus_change -= 1;
            }
            cur = cur.remove_kink(x, p);
        }
        (cur, report)
    }

    fn remove_kink(&self, x: usize, p: usize) -> Diagram {
        let quad = self.crossings()[x];
        let (g1, g2) = (quad[(p + 2) % 4], quad[(p + 3) % 4]);
        let shift = |e: End| match e {
            End::Slot { crossing, slot } => End::slot(if crossing < x { crossing } else { crossing - 1 }, slot),
            b => b,
        };
        let mut hints: BTreeMap<ArcLabel, End> = BTreeMap::new();
        let mut loops = self.loops();
        let mut crossings: Vec<[ArcLabel; 4]> =
            self.crossings().iter().enumerate().filter(|&(y, _)| y != x).map(|(_, q)| *q).collect();
        if g1 == g2 {
            loops += 1;
        } else {
            let (keep, drop) = (g1.min(g2), g1.max(g2));
            for q in crossings.iter_mut() {
                for l in q.iter_mut() {
                    if *l == drop {
                        *l = keep;
                    }
                }
            }
            let far1 = self.code.other_end(g1, End::slot(x, ((p + 2) % 4) as u8));
            let far2 = self.code.other_end(g2, End::slot(x, ((p + 3) % 4) as u8));
            let head = if self.heads[&g1] == far1 { far1 } else { far2 };
            hints.insert(keep, shift(head));
        }
        for (&l, &h) in &self.heads {
            if l != g1 && l != g2 && l != quad[p] {
                hints.insert(l, shift(h));
            }
        }
        let code = Tangle::new(crossings, Vec::new(), loops).expect("kink removal keeps arcs paired");
        Self::build(code, Orient::Hints(&hints), shift_twists(&self.twists, x)).expect("kink removal is planar")
    }

    /// Inserts `n` half-twists between arcs `a` and `b` (see
    /// [`Tangle::insert_twists`]), recording the new crossings as a twist region.
    /// Strands entering the region keep their direction.
    pub fn insert_twists(&self, a: ArcLabel, b: ArcLabel, n: i64) -> Result<Diagram, DiagramError> {
        if n == 0 {
            return Ok(self.clone());
        }
        let ins = self.code.insert_twists(a, b, n)?;
        let mut hints: BTreeMap<ArcLabel, End> =
            self.heads.iter().filter(|(&l, _)| l != a && l != b).map(|(&l, &e)| (l, e)).collect();
        for (old, bottom, top) in [(a, ins.bottom_left, ins.top_left), (b, ins.bottom_right, ins.top_right)] {
            if self.heads[&old] == bottom.1 {
                hints.insert(bottom.0, bottom.1);
                hints.insert(top.0, top.2);
            } else {
                hints.insert(bottom.0, bottom.2);
                hints.insert(top.0, top.1);
            }
        }
        let mut twists = self.twists.clone();
        twists.push(TwistRegion { site: (a, b), twists: n, crossings: ins.crossings.clone() });
        let d = Self::build(ins.tangle, Orient::Hints(&hints), twists)?;
        Ok(d.normalize_crossings(&ins.crossings))
    }

    /// Rotates the listed crossings' quadruples so that slot 0 is the incoming
    /// under-strand.
    fn normalize_crossings(&self, which: &[usize]) -> Diagram {
        let flip: Vec<usize> = which
            .iter()
            .copied()
            .filter(|&x| self.heads[&self.crossings()[x][0]] != End::slot(x, 0))
            .collect();
        if flip.is_empty() {
            return self.clone();
        }
        let mut crossings = self.crossings().to_vec();
        for &x in &flip {
            let [a, b, c, d] = crossings[x];
            crossings[x] = [c, d, a, b];
        }
        let hints = self
            .heads
            .iter()
            .map(|(&l, &e)| {
                let e = match e {
                    End::Slot { crossing, slot } if flip.contains(&crossing) => End::slot(crossing, (slot + 2) % 4),
                    e => e,
                };
                (l, e)
            })
            .collect();
        let code = Tangle::new(crossings, Vec::new(), self.loops()).expect("rotation keeps arcs");
        Self::build(code, Orient::Hints(&hints), self.twists.clone()).expect("rotation keeps planarity")
    }

    pub fn to_json_value(&self) -> DiagramJson {
        DiagramJson {
            crossings: self.crossings().to_vec(),
            loops: self.loops(),
            orientations: self.reversed.iter().map(|&r| if r { -1 } else { 1 }).collect(),
            twists: self.twists.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("diagram serializes")
    }

    pub fn from_json_value(j: DiagramJson) -> Result<Diagram, DiagramError> {
        let code = Tangle::new(j.crossings, Vec::new(), j.loops)?;
        if j.orientations.is_empty() {
            Self::build(code, Orient::Default, j.twists)
        } else {
            if let Some(bad) = j.orientations.iter().find(|&&o| o != 1 && o != -1) {
                return Err(DiagramError::Json(format!("orientation entries must be ±1, got {bad}")));
            }
            let flags: Vec<bool> = j.orientations.iter().map(|&o| o < 0).collect();
            Self::build(code, Orient::Flags(&flags), j.twists)
        }
    }

    pub fn from_json(text: &str) -> Result<Diagram, DiagramError> {
        let j: DiagramJson = serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))?;
        Self::from_json_value(j)
    }

    /// `PD[X[a,b,c,d],...]`, with `loops=k` appended when there are free loops.
    pub fn to_pd(&self) -> String {
        let mut items: Vec<String> =
            self.crossings().iter().map(|q| format!("X[{},{},{},{}]", q[0], q[1], q[2], q[3])).collect();
        if self.loops() > 0 {
            items.push(format!("loops={}", self.loops()));
        }
        format!("PD[{}]", items.join(","))
    }
}

fn default_reversal(canonical: &[DirectedArc]) -> bool {
    let mut agree = 0;
    let mut disagree = 0;
    for a in canonical {
        if let End::Slot { slot, .. } = a.to {
            match slot {
                0 => agree += 1,
                2 => disagree += 1,
                _ => {}
            }
        }
    }
    agree == 0 && disagree > 0
}

fn shift_twists(twists: &[TwistRegion], removed: usize) -> Vec<TwistRegion> {
    twists
        .iter()
        .map(|t| TwistRegion {
            site: t.site,
            twists: t.twists,
            crossings: t
                .crossings
                .iter()
                .filter(|&&c| c != removed)
                .map(|&c| if c > removed { c - 1 } else { c })
                .collect(),
        })
        .collect()
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Diagram {
        Diagram::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0).unwrap()
    }

    /// Sign oracle: place slot p at angle 90°·(p-1) and take the cross product of
    /// the over and under strand directions.
    fn sign_oracle(d: &Diagram, x: usize) -> i8 {
        let dir = |slot_in: u8| -> (i32, i32) {
            // direction from slot_in through the centre
            match slot_in {
                0 => (0, 1),
                1 => (-1, 0),
                2 => (0, -1),
                _ => (1, 0),
            }
        };
        let q = d.crossings()[x];
        let under_in = if d.head(q[0]) == End::slot(x, 0) { 0 } else { 2 };
        let over_in = if d.head(q[1]) == End::slot(x, 1) { 1 } else { 3 };
        let (u, o) = (dir(under_in), dir(over_in));
        let cross = o.0 * u.1 - o.1 * u.0;
        cross.signum() as i8
    }

    #[test]
    fn trefoil_is_left_handed() {
        let t = trefoil();
        assert_eq!(t.num_components(), 1);
        assert_eq!(t.signs(), &[-1, -1, -1]);
        assert_eq!(t.writhe(), -3);
        for x in 0..3 {
            assert_eq!(t.signs()[x], sign_oracle(&t, x));
        }
        assert_eq!(t.mirror().writhe(), 3);
    }

    #[test]
    fn hopf_link_signs() {
        let hopf = Diagram::new(vec![[4, 1, 3, 2], [2, 3, 1, 4]], 0).unwrap();
        assert_eq!(hopf.num_components(), 2);
        assert_eq!(hopf.writhe(), -2);
        let pos = hopf.mirror();
        assert_eq!((pos.writhe(), pos.n_minus()), (2, 0));
        let flipped = hopf.reverse_components(&[1]).unwrap();
        assert_eq!(flipped.writhe(), 2);
        let both = hopf.reverse_components(&[0, 1]).unwrap();
        assert_eq!(both.signs(), hopf.signs());
        assert_eq!(hopf.signs_with_flips(&[false, true]), flipped.signs());
    }

    #[test]
    fn kink_smoothings() {
        // positive kink: arc 1 joins slots 0 and 1
        let k = Diagram::new(vec![[1, 1, 2, 2]], 0).unwrap();
        assert_eq!(k.signs(), &[1]);
        let r0 = k.resolve(CrossingSite { crossing: 0, smoothing: Smoothing::Zero }).unwrap();
        let r1 = k.resolve(CrossingSite { crossing: 0, smoothing: Smoothing::One }).unwrap();
        assert_eq!((r0.diagram.loops(), r1.diagram.loops()), (2, 1));
        assert!(r0.oriented && !r1.oriented);
        let (u, rep) = k.r1_reduce();
        assert_eq!((u.num_crossings(), u.loops()), (0, 1));
        assert_eq!(rep.writhe_change, -1);
        assert!(k.resolve(CrossingSite { crossing: 3, smoothing: Smoothing::Zero }).is_err());
        assert!(u.resolve(CrossingSite { crossing: 0, smoothing: Smoothing::Zero }).is_err());
    }

    #[test]
    fn resolving_trefoil_oriented() {
        let t = trefoil();
        for x in 0..3 {
            let r = t.resolve(CrossingSite { crossing: x, smoothing: Smoothing::One }).unwrap();
            assert!(r.oriented);
            assert_eq!(r.diagram.num_crossings(), 2);
            // orientation inherited: remaining crossings keep their signs
            assert_eq!(r.diagram.n_minus(), 2);
            let r0 = t.resolve(CrossingSite { crossing: x, smoothing: Smoothing::Zero }).unwrap();
            assert!(!r0.oriented);
            assert_eq!(r0.diagram.num_crossings(), 2);
        }
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let t = trefoil().reverse_components(&[0]).unwrap();
        let s = t.to_json();
        assert_eq!(s, r#"{"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"loops":0,"orientations":[-1]}"#);
        let back = Diagram::from_json(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn twists_on_trefoil() {
        let t = trefoil();
        let d = t.insert_twists(1, 4, -3).unwrap();
        assert_eq!(d.num_crossings(), 6);
        assert_eq!(d.twist_regions()[0].crossings, vec![3, 4, 5]);
        for x in 3..6 {
            assert_eq!(d.head(d.crossings()[x][0]), End::slot(x, 0));
            assert_eq!(d.signs()[x], sign_oracle(&d, x));
        }
        let (r, rep) = d.r1_reduce();
        assert_eq!(r.num_crossings() + rep.removed, 6);
        let (r2, rep2) = r.r1_reduce();
        assert_eq!(r2, r);
        assert_eq!(rep2.removed, 0);
    }
}

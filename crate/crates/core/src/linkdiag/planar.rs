use std::collections::{BTreeMap, HashMap, HashSet};

use super::DiagramError;

pub type ArcLabel = u32;

/// One endpoint of an arc: a crossing slot, or a point on the tangle boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Slot { crossing: usize, slot: u8 },
    Boundary(usize),
}

impl End {
    pub(crate) fn slot(crossing: usize, slot: u8) -> Self {
        End::Slot { crossing, slot }
    }
}

/// An arc traversed from one end to the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirectedArc {
    pub label: ArcLabel,
    pub from: End,
    pub to: End,
}

/// A strand of a tangle: an open path between two boundary points or a closed
/// component, listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub arcs: Vec<DirectedArc>,
    pub closed: bool,
}

/// A PD fragment inside a disk: crossings, the arcs meeting the boundary
/// circle (listed counterclockwise), and crossingless closed loops.
///
/// A closed link diagram is a tangle with an empty boundary. Each arc label
/// occurs exactly twice among crossing slots and boundary points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangle {
    crossings: Vec<[ArcLabel; 4]>,
    boundary: Vec<ArcLabel>,
    loops: u32,
    ends: BTreeMap<ArcLabel, [End; 2]>,
}

/// Result of inserting a twist region; the four outer arcs are reported as
/// `(label, end outside the region, end on the region)`.
#[derive(Clone, Debug)]
pub struct TwistInsertion {
    pub tangle: Tangle,
    /// Inserted crossings, lowest first.
    pub crossings: Vec<usize>,
    pub bottom_left: (ArcLabel, End, End),
    pub top_left: (ArcLabel, End, End),
    pub bottom_right: (ArcLabel, End, End),
    pub top_right: (ArcLabel, End, End),
}

/// A combinatorial isomorphism between two tangles: crossing `x` goes to
/// `crossing_map[x].0` with its slots rotated by `crossing_map[x].1` (0 or 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleIso {
    pub crossing_map: Vec<(usize, u8)>,
    pub arc_map: BTreeMap<ArcLabel, ArcLabel>,
    pub boundary_shift: usize,
}

impl Tangle {
    pub fn new(
        crossings: Vec<[ArcLabel; 4]>,
        boundary: Vec<ArcLabel>,
        loops: u32,
    ) -> Result<Self, DiagramError> {
        let mut occ: BTreeMap<ArcLabel, Vec<End>> = BTreeMap::new();
        for (x, quad) in crossings.iter().enumerate() {
            for (p, &l) in quad.iter().enumerate() {
                occ.entry(l).or_default().push(End::slot(x, p as u8));
            }
        }
        for (i, &l) in boundary.iter().enumerate() {
            occ.entry(l).or_default().push(End::Boundary(i));
        }
        let mut ends = BTreeMap::new();
        for (label, v) in occ {
            if v.len() != 2 {
                return Err(DiagramError::MalformedArc { label, count: v.len() });
            }
            ends.insert(label, [v[0], v[1]]);
        }
        Ok(Tangle { crossings, boundary, loops, ends })
    }

    /// A crossingless tangle from a perfect matching of boundary positions.
    pub fn crossingless(n_points: usize, pairs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let mut boundary = vec![0; n_points];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            boundary[i] = k as ArcLabel + 1;
            boundary[j] = k as ArcLabel + 1;
        }
        Tangle::new(Vec::new(), boundary, 0)
    }

    pub fn crossings(&self) -> &[[ArcLabel; 4]] {
        &self.crossings
    }

    pub fn boundary(&self) -> &[ArcLabel] {
        &self.boundary
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = ArcLabel> + '_ {
        self.ends.keys().copied()
    }

    pub fn num_arcs(&self) -> usize {
        self.ends.len()
    }

    pub fn max_label(&self) -> ArcLabel {
        self.ends.keys().next_back().copied().unwrap_or(0)
    }

    pub fn contains_arc(&self, label: ArcLabel) -> bool {
        self.ends.contains_key(&label)
    }

    pub fn ends(&self, label: ArcLabel) -> [End; 2] {
        self.ends[&label]
    }

    pub fn arc_at(&self, end: End) -> ArcLabel {
        match end {
            End::Slot { crossing, slot } => self.crossings[crossing][slot as usize],
            End::Boundary(i) => self.boundary[i],
        }
    }

    pub fn other_end(&self, label: ArcLabel, end: End) -> End {
        let [a, b] = self.ends[&label];
        if a == end {
            b
        } else {
            debug_assert_eq!(b, end);
            a
        }
    }

    /// Follows a strand through the crossing (or boundary point) it arrives at.
    fn continue_strand(&self, arrive: End) -> Option<DirectedArc> {
        match arrive {
            End::Slot { crossing, slot } => {
                let out = End::slot(crossing, (slot + 2) % 4);
                let label = self.arc_at(out);
                Some(DirectedArc { label, from: out, to: self.other_end(label, out) })
            }
            End::Boundary(_) => None,
        }
    }

    fn walk(&self, first: DirectedArc) -> (Vec<DirectedArc>, bool) {
        let mut arcs = vec![first];
        let mut cur = first;
        loop {
            match self.continue_strand(cur.to) {
                None => return (arcs, false),
                Some(next) => {
                    if next == first {
                        return (arcs, true);
                    }
                    arcs.push(next);
                    cur = next;
                }
            }
        }
    }

    /// All strands. Open strands come first, in order of their starting
    /// boundary point; closed components follow in order of their smallest arc
    /// label and are traversed in their canonical direction: of the two
    /// directions starting on the smallest arc, the one whose label sequence is
    /// lexicographically smaller.
    pub fn strands(&self) -> Vec<Strand> {
        let mut seen: HashSet<ArcLabel> = HashSet::new();
        let mut out = Vec::new();
        for (i, &l) in self.boundary.iter().enumerate() {
            if seen.contains(&l) {
                continue;
            }
            let from = End::Boundary(i);
            let first = DirectedArc { label: l, from, to: self.other_end(l, from) };
            let (arcs, _) = self.walk(first);
            seen.extend(arcs.iter().map(|a| a.label));
            out.push(Strand { arcs, closed: false });
        }
        let labels: Vec<ArcLabel> = self.ends.keys().copied().collect();
        for l in labels {
            if seen.contains(&l) {
                continue;
            }
            let [e0, e1] = self.ends[&l];
            let (fwd, _) = self.walk(DirectedArc { label: l, from: e0, to: e1 });
            let (bwd, _) = self.walk(DirectedArc { label: l, from: e1, to: e0 });
            let key = |v: &[DirectedArc]| v.iter().map(|a| a.label).collect::<Vec<_>>();
            let arcs = if key(&bwd) < key(&fwd) { bwd } else { fwd };
            seen.extend(arcs.iter().map(|a| a.label));
            out.push(Strand { arcs, closed: true });
        }
        out
    }

    /// Faces of the planar structure, each traced with the face on the left.
    /// The boundary circle is treated as a vertex whose rotation is the reverse
    /// of the boundary order.
    pub fn faces(&self) -> Vec<Vec<DirectedArc>> {
        let mut visited: HashSet<(ArcLabel, End)> = HashSet::new();
        let mut faces = Vec::new();
        for (&label, &[e0, e1]) in &self.ends {
            for (from, to) in [(e0, e1), (e1, e0)] {
                if visited.contains(&(label, from)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut cur = DirectedArc { label, from, to };
                while visited.insert((cur.label, cur.from)) {
                    face.push(cur);
                    let next_from = match cur.to {
                        End::Slot { crossing, slot } => End::slot(crossing, (slot + 3) % 4),
                        End::Boundary(i) => End::Boundary((i + 1) % self.boundary.len()),
                    };
                    let l = self.arc_at(next_from);
                    cur = DirectedArc { label: l, from: next_from, to: self.other_end(l, next_from) };
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler-characteristic test on the 4-valent graph (plus a boundary vertex
    /// for tangles): V - E + F = 2 per connected component.
    pub fn is_planar(&self) -> bool {
        if self.ends.is_empty() {
            return true;
        }
        let n = self.crossings.len();
        let has_boundary = !self.boundary.is_empty();
        let vertex = |e: End| match e {
            End::Slot { crossing, .. } => crossing,
            End::Boundary(_) => n,
        };
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for [a, b] in self.ends.values() {
            let (ra, rb) = (find(&mut parent, vertex(*a)), find(&mut parent, vertex(*b)));
            parent[ra] = rb;
        }
        let vertices: Vec<usize> = (0..n).chain(has_boundary.then_some(n)).collect();
        let roots: HashSet<usize> = vertices.iter().map(|&v| find(&mut parent, v)).collect();
        let v = vertices.len() as i64;
        let e = self.ends.len() as i64;
        let f = self.faces().len() as i64;
        v - e + f == 2 * roots.len() as i64
    }

    /// Switches every crossing (over becomes under).
    pub fn mirror(&self) -> Tangle {
        let crossings = self.crossings.iter().map(|&[a, b, c, d]| [b, c, d, a]).collect();
        Tangle::new(crossings, self.boundary.clone(), self.loops).expect("mirror preserves arcs")
    }

    /// Renames arcs; labels missing from `map` are kept.
    pub fn relabel(&self, map: &HashMap<ArcLabel, ArcLabel>) -> Result<Tangle, DiagramError> {
        let f = |l: &ArcLabel| *map.get(l).unwrap_or(l);
        let crossings = self.crossings.iter().map(|q| [f(&q[0]), f(&q[1]), f(&q[2]), f(&q[3])]).collect();
        let boundary = self.boundary.iter().map(f).collect();
        Tangle::new(crossings, boundary, self.loops)
    }

    /// Relabels arcs as 1, 2, ... in strand traversal order.
    pub fn compact_labels(&self) -> Tangle {
        let mut map = HashMap::new();
        for s in self.strands() {
            for a in s.arcs {
                let next = map.len() as ArcLabel + 1;
                map.entry(a.label).or_insert(next);
            }
        }
        self.relabel(&map).expect("bijective relabel")
    }

    /// Inserts `|n|` half-twists between arcs `a` and `b`, which must both lie
    /// once on a common face. Positive `n` gives crossings that are positive when
    /// the two strands run antiparallel through the region (negative when they
    /// run parallel); negative `n` gives the opposite twist.
    pub fn insert_twists(&self, a: ArcLabel, b: ArcLabel, n: i64) -> Result<TwistInsertion, DiagramError> {
        if a == b {
            return Err(DiagramError::InvalidSite(format!("arcs coincide ({a})")));
        }
        for l in [a, b] {
            if !self.contains_arc(l) {
                return Err(DiagramError::InvalidSite(format!("no arc labelled {l}")));
            }
        }
        let face = self
            .faces()
            .into_iter()
            .find(|f| {
                f.iter().filter(|d| d.label == a).count() == 1 && f.iter().filter(|d| d.label == b).count() == 1
            })
            .ok_or_else(|| DiagramError::InvalidSite(format!("arcs {a} and {b} share no face")))?;
        let da = *face.iter().find(|d| d.label == a).unwrap();
        let db = *face.iter().find(|d| d.label == b).unwrap();
        // With the face on the left, `b` runs upward on the right wall and `a`
        // runs downward on the left wall.
        let (a_bot, a_top) = (da.to, da.from);
        let (b_bot, b_top) = (db.from, db.to);

        let k = n.unsigned_abs() as usize;
        let base = self.crossings.len();
        let mut crossings = self.crossings.clone();
        let mut boundary = self.boundary.clone();
        if k == 0 {
            return Ok(TwistInsertion {
                tangle: self.clone(),
                crossings: Vec::new(),
                bottom_left: (a, a_bot, a_top),
                top_left: (a, a_top, a_bot),
                bottom_right: (b, b_bot, b_top),
                top_right: (b, b_top, b_bot),
            });
        }
        let mut next = self.max_label() + 1;
        let mut fresh = || {
            next += 1;
            next - 1
        };
        // slot positions of (sw, se, ne, nw) in the quadruple
        let pos: [u8; 4] = if n > 0 { [0, 1, 2, 3] } else { [3, 0, 1, 2] };
        let (mut sw, mut se) = (a, b);
        let (a_t, b_t) = (fresh(), fresh());
        for j in 0..k {
            let (nw, ne) = if j + 1 == k { (a_t, b_t) } else { (fresh(), fresh()) };
            let mut quad = [0; 4];
            quad[pos[0] as usize] = sw;
            quad[pos[1] as usize] = se;
            quad[pos[2] as usize] = ne;
            quad[pos[3] as usize] = nw;
            crossings.push(quad);
            sw = nw;
            se = ne;
        }
        let mut put = |end: End, label: ArcLabel| match end {
            End::Slot { crossing, slot } => crossings[crossing][slot as usize] = label,
            End::Boundary(i) => boundary[i] = label,
        };
        put(a_top, a_t);
        put(b_top, b_t);
        let tangle = Tangle::new(crossings, boundary, self.loops)?;
        let last = base + k - 1;
        Ok(TwistInsertion {
            tangle,
            crossings: (base..base + k).collect(),
            bottom_left: (a, a_bot, End::slot(base, pos[0])),
            bottom_right: (b, b_bot, End::slot(base, pos[1])),
            top_right: (b_t, b_top, End::slot(last, pos[2])),
            top_left: (a_t, a_top, End::slot(last, pos[3])),
        })
    }

    /// Searches for an isomorphism to `other` that sends boundary point `i` to
    /// `i + shift` (mod the boundary size), preserving slot order and over/under
    /// information at every crossing.
    pub fn find_isomorphism(&self, other: &Tangle, shift: usize) -> Option<TangleIso> {
        if self.crossings.len() != other.crossings.len()
            || self.boundary.len() != other.boundary.len()
            || self.loops != other.loops
            || self.ends.len() != other.ends.len()
        {
            return None;
        }
        let b = self.boundary.len();
        let mut st = IsoState {
            cmap: vec![None; self.crossings.len()],
            used: vec![false; other.crossings.len()],
            emap: HashMap::new(),
            rev: HashMap::new(),
        };
        let seeds: Vec<(End, End)> = (0..b).map(|i| (End::Boundary(i), End::Boundary((i + shift) % b))).collect();
        if !self.propagate(other, &mut st, seeds, shift) {
            return None;
        }
        let st = self.iso_search(other, st, shift)?;
        let mut arc_map = BTreeMap::new();
        for (e1, e2) in &st.emap {
            arc_map.insert(self.arc_at(*e1), other.arc_at(*e2));
        }
        Some(TangleIso {
            crossing_map: st.cmap.into_iter().map(|m| m.expect("complete")).collect(),
            arc_map,
            boundary_shift: if b == 0 { 0 } else { shift % b },
        })
    }

    fn iso_search(&self, other: &Tangle, st: IsoState, shift: usize) -> Option<IsoState> {
        let Some(x) = st.cmap.iter().position(|m| m.is_none()) else {
            return Some(st);
        };
        for y in 0..other.crossings.len() {
            if st.used[y] {
                continue;
            }
            for r in [0u8, 2] {
                let mut trial = st.clone();
                if self.propagate(other, &mut trial, vec![(End::slot(x, 0), End::slot(y, r))], shift) {
                    if let Some(done) = self.iso_search(other, trial, shift) {
                        return Some(done);
                    }
                }
            }
        }
        None
    }

    fn propagate(&self, other: &Tangle, st: &mut IsoState, mut queue: Vec<(End, End)>, shift: usize) -> bool {
        let b = self.boundary.len();
        while let Some((e1, e2)) = queue.pop() {
            if let Some(&m) = st.emap.get(&e1) {
                if m != e2 {
                    return false;
                }
                continue;
            }
            if st.rev.contains_key(&e2) {
                return false;
            }
            match (e1, e2) {
                (End::Boundary(i), End::Boundary(j)) => {
                    if (i + shift) % b != j {
                        return false;
                    }
                }
                (End::Slot { crossing: x, slot: p }, End::Slot { crossing: y, slot: q }) => {
                    if p % 2 != q % 2 {
                        return false;
                    }
                    match st.cmap[x] {
                        Some((yy, r)) => {
                            if yy != y || (p + r) % 4 != q {
                                return false;
                            }
                        }
                        None => {
                            if st.used[y] {
                                return false;
                            }
                            let r = (q + 4 - p) % 4;
                            st.cmap[x] = Some((y, r));
                            st.used[y] = true;
                            for k in 0..4u8 {
                                queue.push((End::slot(x, k), End::slot(y, (k + r) % 4)));
                            }
                        }
                    }
                }
                _ => return false,
            }
            st.emap.insert(e1, e2);
            st.rev.insert(e2, e1);
            let (l1, l2) = (self.arc_at(e1), other.arc_at(e2));
            queue.push((self.other_end(l1, e1), other.other_end(l2, e2)));
        }
        true
    }
}

#[derive(Clone)]
struct IsoState {
    cmap: Vec<Option<(usize, u8)>>,
    used: Vec<bool>,
    emap: HashMap<End, End>,
    rev: HashMap<End, End>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Tangle {
        Tangle::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], vec![], 0).unwrap()
    }

    #[test]
    fn double_occurrence_enforced() {
        let err = Tangle::new(vec![[1, 2, 3, 4]], vec![], 0).unwrap_err();
        assert!(matches!(err, DiagramError::MalformedArc { label: 1, count: 1 }));
    }

    #[test]
    fn trefoil_is_planar_with_five_faces() {
        let t = trefoil();
        assert!(t.is_planar());
        assert_eq!(t.faces().len(), 5);
        let strands = t.strands();
        assert_eq!(strands.len(), 1);
        assert!(strands[0].closed);
        let seq: Vec<_> = strands[0].arcs.iter().map(|a| a.label).collect();
        assert_eq!(seq, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn nonplanar_code_detected() {
        // a single crossing whose under-strand and over-strand each close up
        let t = Tangle::new(vec![[1, 2, 1, 2]], vec![], 0).unwrap();
        assert!(!t.is_planar());
        let hopf = Tangle::new(vec![[4, 1, 3, 2], [2, 3, 1, 4]], vec![], 0).unwrap();
        assert!(hopf.is_planar());
    }

    #[test]
    fn twist_insertion_adds_crossings_and_stays_planar() {
        let t = trefoil();
        // arcs 1 and 4 bound a common face
        let face = t.faces().into_iter().find(|f| f.len() >= 3).unwrap();
        let (a, b) = (face[0].label, face[1].label);
        for n in [-3i64, -1, 1, 2] {
            let ins = t.insert_twists(a, b, n).unwrap();
            assert_eq!(ins.tangle.num_crossings(), 3 + n.unsigned_abs() as usize);
            assert!(ins.tangle.is_planar());
        }
        assert!(t.insert_twists(1, 1, 2).is_err());
    }

    #[test]
    fn isomorphism_finds_relabelling() {
        let t = trefoil();
        let map: HashMap<_, _> = (1..=6).map(|l| (l, l + 10)).collect();
        let u = t.relabel(&map).unwrap();
        let iso = t.find_isomorphism(&u, 0).unwrap();
        assert_eq!(iso.arc_map[&1], 11);
        assert!(t.find_isomorphism(&t.mirror(), 0).is_none());
    }
}

//! Scanning engine. The complex of the processed part of the diagram is kept
//! as a complex over the dotted cobordism category of its open boundary:
//! objects are crossingless matchings of the open arcs with grading shifts,
//! morphisms are integer combinations of dotted disc systems. Each new crossing
//! is tensored in, closed circles are delooped and every invertible entry is
//! cancelled by Gaussian elimination before the next crossing.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::rc::Rc;

use super::{ChainComplex, CoefficientRing, GradedTable, KhError};
use crate::linkdiag::{scan_order, ArcLabel, Diagram, Smoothing};

type Matching = Vec<(ArcLabel, ArcLabel)>;
/// Linear combination of dot masks, sorted by mask, no zero coefficients.
type Entry = Vec<(u64, i64)>;

#[derive(Clone, Copy, Debug)]
struct Obj {
    m: usize,
    t: i64,
    q: i64,
}

/// Cycles of the union of two matchings, numbered by increasing minimal label.
struct Cycles {
    labels: Vec<ArcLabel>,
    cycle: Vec<usize>,
    count: usize,
}

impl Cycles {
    fn of(&self, l: ArcLabel) -> usize {
        self.cycle[self.labels.binary_search(&l).expect("boundary label")]
    }
}

fn partner(m: &Matching) -> HashMap<ArcLabel, ArcLabel> {
    m.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect()
}

fn cycles_of(m1: &Matching, m2: &Matching) -> Cycles {
    let p1 = partner(m1);
    let p2 = partner(m2);
    let mut labels: Vec<ArcLabel> = p1.keys().copied().collect();
    labels.sort_unstable();
    let mut cycle = vec![usize::MAX; labels.len()];
    let idx = |l: ArcLabel| labels.binary_search(&l).expect("same boundary");
    let mut count = 0;
    for k in 0..labels.len() {
        if cycle[k] != usize::MAX {
            continue;
        }
        let mut l = labels[k];
        loop {
            cycle[idx(l)] = count;
            let l2 = p1[&l];
            cycle[idx(l2)] = count;
            l = p2[&l2];
            if l == labels[k] {
                break;
            }
        }
        count += 1;
    }
    Cycles { labels, cycle, count }
}

/// A surface assembled from disc pieces.
#[derive(Default)]
struct Surface {
    dots: Vec<u32>,
    /// interval gluings between pieces
    glue: Vec<(usize, usize)>,
    /// circle gluings (caps and cups on delooped circles)
    seal: Vec<(usize, usize)>,
    /// piece containing each boundary cycle of the result
    boundary: Vec<usize>,
}

impl Surface {
    fn piece(&mut self, dots: u32) -> usize {
        self.dots.push(dots);
        self.dots.len() - 1
    }

    /// Expresses the surface in the dotted-disc basis of its boundary cycles,
    /// using neck cutting, `x^2 = 0` and handle = 2x.
    fn evaluate(&self) -> Entry {
        let n = self.dots.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in self.glue.iter().chain(&self.seal) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        // per component: pieces, interval gluings, dots, boundary cycles
        let mut comp: BTreeMap<usize, (i64, i64, u32, Vec<usize>)> = BTreeMap::new();
        for p in 0..n {
            let r = find(&mut parent, p);
            let e = comp.entry(r).or_default();
            e.0 += 1;
            e.2 += self.dots[p];
        }
        for &(a, _) in &self.glue {
            let r = find(&mut parent, a);
            comp.get_mut(&r).expect("component").1 += 1;
        }
        for (k, &p) in self.boundary.iter().enumerate() {
            let r = find(&mut parent, p);
            comp.get_mut(&r).expect("component").3.push(k);
        }
        let mut acc: Entry = vec![(0, 1)];
        for (pieces, glued, dots, bd) in comp.into_values() {
            let chi = pieces - glued;
            let b = bd.len() as i64;
            let two_g = 2 - b - chi;
            debug_assert!(two_g >= 0 && two_g % 2 == 0, "orientable surface");
            let g = two_g / 2;
            let d = dots as i64 + g;
            if d >= 2 {
                return Vec::new();
            }
            let factor = 1i64 << g;
            let all: u64 = bd.iter().fold(0, |m, &k| m | 1 << k);
            let options: Vec<(u64, i64)> = if bd.is_empty() {
                if d == 1 {
                    vec![(0, factor)]
                } else {
                    return Vec::new();
                }
            } else if d == 1 {
                vec![(all, factor)]
            } else {
                bd.iter().map(|&k| (all & !(1 << k), factor)).collect()
            };
            let mut next = Vec::with_capacity(acc.len() * options.len());
            for &(m1, c1) in &acc {
                for &(m2, c2) in &options {
                    next.push((m1 | m2, c1.checked_mul(c2).expect("coefficient overflow")));
                }
            }
            acc = next;
        }
        normalize(acc)
    }
}

fn normalize(mut e: Vec<(u64, i64)>) -> Entry {
    e.sort_unstable_by_key(|x| x.0);
    let mut out: Entry = Vec::with_capacity(e.len());
    for (m, c) in e {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = last.1.checked_add(c).expect("coefficient overflow"),
            _ => out.push((m, c)),
        }
    }
    out.retain(|x| x.1 != 0);
    out
}

fn add_scaled(target: &mut Entry, src: &Entry, k: i64) {
    let mut all = std::mem::take(target);
    all.extend(src.iter().map(|&(m, c)| (m, c.checked_mul(k).expect("coefficient overflow"))));
    *target = normalize(all);
}

/// Where a piece of a glued arc or loop comes from.
#[derive(Clone, Copy, Debug)]
enum Rep {
    /// an arc of the old matching with this endpoint label
    Old(ArcLabel),
    /// the local crossing piece at this slot
    Local(usize),
}

struct Glued {
    m: usize,
    arc_rep: HashMap<ArcLabel, Rep>,
    loops: Vec<Rep>,
}

struct Scanner {
    matchings: Vec<Matching>,
    ids: HashMap<Matching, usize>,
    cycles: HashMap<(usize, usize), Rc<Cycles>>,
    compose_cache: HashMap<(usize, usize, usize, u64, u64), Entry>,
}

struct Cx {
    objs: Vec<Option<Obj>>,
    out: Vec<BTreeMap<usize, Entry>>,
    inc: Vec<BTreeSet<usize>>,
}

impl Cx {
    fn new() -> Self {
        Cx { objs: Vec::new(), out: Vec::new(), inc: Vec::new() }
    }

    fn push(&mut self, o: Obj) -> usize {
        self.objs.push(Some(o));
        self.out.push(BTreeMap::new());
        self.inc.push(BTreeSet::new());
        self.objs.len() - 1
    }

    fn add_entry(&mut self, from: usize, to: usize, e: &Entry, k: i64) {
        if e.is_empty() {
            return;
        }
        let slot = self.out[from].entry(to).or_default();
        add_scaled(slot, e, k);
        if slot.is_empty() {
            self.out[from].remove(&to);
            self.inc[to].remove(&from);
        } else {
            self.inc[to].insert(from);
        }
    }

    fn alive(&self) -> impl Iterator<Item = (usize, Obj)> + '_ {
        self.objs.iter().enumerate().filter_map(|(i, o)| o.map(|o| (i, o)))
    }
}

impl Scanner {
    fn new() -> Self {
        Scanner { matchings: Vec::new(), ids: HashMap::new(), cycles: HashMap::new(), compose_cache: HashMap::new() }
    }

    fn intern(&mut self, m: Matching) -> usize {
        if let Some(&id) = self.ids.get(&m) {
            return id;
        }
        self.matchings.push(m.clone());
        self.ids.insert(m, self.matchings.len() - 1);
        self.matchings.len() - 1
    }

    fn cycles(&mut self, a: usize, b: usize) -> Rc<Cycles> {
        if let Some(c) = self.cycles.get(&(a, b)) {
            return c.clone();
        }
        let c = Rc::new(cycles_of(&self.matchings[a], &self.matchings[b]));
        self.cycles.insert((a, b), c.clone());
        c
    }

    /// Joins an old matching with the arcs of a smoothed crossing.
    fn glue(&mut self, m: usize, quad: &[ArcLabel; 4], s: Smoothing) -> Glued {
        // edges: (u, v, rep)
        let mut edges: Vec<(ArcLabel, ArcLabel, Rep)> =
            self.matchings[m].iter().map(|&(a, b)| (a, b, Rep::Old(a))).collect();
        for (i, j) in s.pairs() {
            edges.push((quad[i], quad[j], Rep::Local(i)));
        }
        let mut deg: BTreeMap<ArcLabel, usize> = BTreeMap::new();
        for &(a, b, _) in &edges {
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        let mut used = vec![false; edges.len()];
        let walk = |start_edge: usize, from: ArcLabel, used: &mut Vec<bool>| -> ArcLabel {
            let mut v = from;
            let mut k = start_edge;
            loop {
                used[k] = true;
                v = if edges[k].0 == v { edges[k].1 } else { edges[k].0 };
                match (0..edges.len()).find(|&j| !used[j] && (edges[j].0 == v || edges[j].1 == v)) {
                    Some(j) => k = j,
                    None => return v,
                }
            }
        };
        let mut new_m: Matching = Vec::new();
        let mut arc_rep = HashMap::new();
        for (&l, &dg) in &deg {
            if dg != 1 {
                continue;
            }
            let Some(k) = (0..edges.len()).find(|&j| !used[j] && (edges[j].0 == l || edges[j].1 == l)) else {
                continue;
            };
            let end = walk(k, l, &mut used);
            new_m.push((l.min(end), l.max(end)));
            arc_rep.insert(l, edges[k].2);
            arc_rep.insert(end, edges[k].2);
        }
        let mut loops = Vec::new();
        while let Some(k) = used.iter().position(|u| !u) {
            loops.push(edges[k].2);
            let start = edges[k].0;
            let end = walk(k, start, &mut used);
            debug_assert_eq!(end, start);
        }
        new_m.sort_unstable();
        Glued { m: self.intern(new_m), arc_rep, loops }
    }

    /// Basis of the morphism space between two glued objects: the boundary
    /// cycle list, each given by the representative piece of one arc.
    fn boundary_reps(&mut self, src: &Glued, dst: &Glued) -> Vec<Rep> {
        let cyc = self.cycles(src.m, dst.m);
        let mut reps = vec![None; cyc.count];
        for (k, &l) in cyc.labels.iter().enumerate() {
            let c = cyc.cycle[k];
            if reps[c].is_none() {
                reps[c] = Some(src.arc_rep[&l]);
            }
        }
        reps.into_iter().map(|r| r.expect("every cycle has a label")).collect()
    }

    /// `δ ∘ γ` for `γ: C -> M`, `δ: M -> D`.
    fn compose(&mut self, mc: usize, m: usize, md: usize, gamma: &Entry, delta: &Entry) -> Entry {
        let c1 = self.cycles(mc, m);
        let c2 = self.cycles(m, md);
        let c3 = self.cycles(mc, md);
        let mut total: Vec<(u64, i64)> = Vec::new();
        for &(g, cg) in gamma {
            for &(dm, cd) in delta {
                let key = (mc, m, md, g, dm);
                let val = if let Some(v) = self.compose_cache.get(&key) {
                    v.clone()
                } else {
                    let mut s = Surface::default();
                    for k in 0..c1.count {
                        s.piece((g >> k & 1) as u32);
                    }
                    for k in 0..c2.count {
                        s.piece((dm >> k & 1) as u32);
                    }
                    for &(a, _) in &self.matchings[m] {
                        s.glue.push((c1.of(a), c1.count + c2.of(a)));
                    }
                    let mut seen = vec![false; c3.count];
                    for (k, &l) in c3.labels.iter().enumerate() {
                        let c = c3.cycle[k];
                        if !seen[c] {
                            seen[c] = true;
                            s.boundary.push(c1.of(l));
                        }
                    }
                    let v = s.evaluate();
                    self.compose_cache.insert(key, v.clone());
                    v
                };
                let k = cg.checked_mul(cd).expect("coefficient overflow");
                total.extend(val.iter().map(|&(mm, c)| (mm, c.checked_mul(k).expect("coefficient overflow"))));
            }
        }
        normalize(total)
    }

    /// Tensors the complex with one crossing and delooping.
    fn add_crossing(&mut self, cx: &Cx, quad: &[ArcLabel; 4], old_boundary: &BTreeSet<ArcLabel>) -> Cx {
        let mut next = Cx::new();
        let alive: Vec<(usize, Obj)> = cx.alive().collect();
        let mut glued: HashMap<(usize, usize), (Glued, Vec<usize>)> = HashMap::new();
        for &(i, o) in &alive {
            for (si, s) in [Smoothing::Zero, Smoothing::One].into_iter().enumerate() {
                let g = self.glue(o.m, quad, s);
                let nl = g.loops.len();
                let ids = (0u64..1 << nl)
                    .map(|sel| {
                        let minus = sel.count_ones() as i64;
                        next.push(Obj { m: g.m, t: o.t + si as i64, q: o.q + si as i64 + (nl as i64 - 2 * minus) })
                    })
                    .collect();
                glued.insert((i, si), (g, ids));
            }
        }
        let kinks: Vec<(usize, usize)> = (0..4)
            .flat_map(|p| ((p + 1)..4).map(move |r| (p, r)))
            .filter(|&(p, r)| quad[p] == quad[r])
            .collect();

        // old differential tensored with the identity on each smoothing
        for &(i, oi) in &alive {
            for (&j, e) in &cx.out[i] {
                let oj = cx.objs[j].expect("alive target");
                let cyc = self.cycles(oi.m, oj.m);
                for (si, s) in [Smoothing::Zero, Smoothing::One].into_iter().enumerate() {
                    let local_of = |p: usize| if s.pairs()[0].0 == p || s.pairs()[0].1 == p { 0 } else { 1 };
                    let (gi, ids_i) = &glued[&(i, si)];
                    let (gj, ids_j) = &glued[&(j, si)];
                    let reps = self.boundary_reps(gi, gj);
                    for (a, &src) in ids_i.iter().enumerate() {
                        for (b, &dst) in ids_j.iter().enumerate() {
                            let mut total: Vec<(u64, i64)> = Vec::new();
                            for &(mask, c) in e {
                                let mut surf = Surface::default();
                                for k in 0..cyc.count {
                                    surf.piece((mask >> k & 1) as u32);
                                }
                                let base = surf.piece(0);
                                surf.piece(0);
                                let piece = |r: Rep| match r {
                                    Rep::Old(l) => cyc.of(l),
                                    Rep::Local(p) => base + local_of(p),
                                };
                                for (p, a) in quad.iter().enumerate() {
                                    if old_boundary.contains(a) {
                                        surf.glue.push((cyc.of(*a), base + local_of(p)));
                                    }
                                }
                                for &(p, r) in &kinks {
                                    surf.glue.push((base + local_of(p), base + local_of(r)));
                                }
                                seal_loops(&mut surf, &gi.loops, a as u64, &gj.loops, b as u64, piece);
                                surf.boundary = reps.iter().map(|&r| piece(r)).collect();
                                total.extend(
                                    surf.evaluate()
                                        .into_iter()
                                        .map(|(m, x)| (m, x.checked_mul(c).expect("coefficient overflow"))),
                                );
                            }
                            next.add_entry(src, dst, &normalize(total), 1);
                        }
                    }
                }
            }
        }

        // saddles from the 0- to the 1-smoothing
        for &(i, oi) in &alive {
            let cyc = self.cycles(oi.m, oi.m);
            let sign = if oi.t.rem_euclid(2) == 0 { 1 } else { -1 };
            let (g0, ids0) = &glued[&(i, 0)];
            let (g1, ids1) = &glued[&(i, 1)];
            let reps = self.boundary_reps(g0, g1);
            for (a, &src) in ids0.iter().enumerate() {
                for (b, &dst) in ids1.iter().enumerate() {
                    let mut surf = Surface::default();
                    for _ in 0..cyc.count {
                        surf.piece(0);
                    }
                    let saddle = surf.piece(0);
                    let piece = |r: Rep| match r {
                        Rep::Old(l) => cyc.of(l),
                        Rep::Local(_) => saddle,
                    };
                    for &l in quad.iter() {
                        if old_boundary.contains(&l) {
                            surf.glue.push((cyc.of(l), saddle));
                        }
                    }
                    for _ in &kinks {
                        surf.glue.push((saddle, saddle));
                    }
                    seal_loops(&mut surf, &g0.loops, a as u64, &g1.loops, b as u64, piece);
                    surf.boundary = reps.iter().map(|&r| piece(r)).collect();
                    next.add_entry(src, dst, &surf.evaluate(), sign);
                }
            }
        }
        next
    }

    fn is_iso(cx: &Cx, a: usize, b: usize) -> Option<i64> {
        let (oa, ob) = (cx.objs[a]?, cx.objs[b]?);
        if oa.m != ob.m || oa.q != ob.q {
            return None;
        }
        match cx.out[a].get(&b)?.as_slice() {
            [(0, c)] if c.abs() == 1 => Some(*c),
            _ => None,
        }
    }

    /// Cancels invertible entries until none remain, cheapest first.
    fn eliminate(&mut self, cx: &mut Cx) {
        let cost = |cx: &Cx, a: usize, b: usize| (cx.inc[b].len() - 1) * (cx.out[a].len() - 1);
        let mut heap: BinaryHeap<Reverse<(usize, usize, usize)>> = BinaryHeap::new();
        for (a, _) in cx.alive() {
            for &b in cx.out[a].keys() {
                if Self::is_iso(cx, a, b).is_some() {
                    heap.push(Reverse((cost(cx, a, b), a, b)));
                }
            }
        }
        while let Some(Reverse((c, a, b))) = heap.pop() {
            let Some(u) = Self::is_iso(cx, a, b) else { continue };
            let now = cost(cx, a, b);
            if now > c {
                heap.push(Reverse((now, a, b)));
                continue;
            }
            let m = cx.objs[a].expect("alive").m;
            let gammas: Vec<(usize, Entry)> =
                cx.inc[b].iter().filter(|&&x| x != a).map(|&x| (x, cx.out[x][&b].clone())).collect();
            let deltas: Vec<(usize, Entry)> =
                cx.out[a].iter().filter(|(&y, _)| y != b).map(|(&y, e)| (y, e.clone())).collect();
            for (x, gamma) in &gammas {
                let mx = cx.objs[*x].expect("alive").m;
                for (y, delta) in &deltas {
                    let my = cx.objs[*y].expect("alive").m;
                    let prod = self.compose(mx, m, my, gamma, delta);
                    cx.add_entry(*x, *y, &prod, -u);
                    if Self::is_iso(cx, *x, *y).is_some() {
                        heap.push(Reverse((cost(cx, *x, *y), *x, *y)));
                    }
                }
            }
            for v in [a, b] {
                for w in std::mem::take(&mut cx.out[v]).into_keys() {
                    cx.inc[w].remove(&v);
                }
                for w in std::mem::take(&mut cx.inc[v]) {
                    cx.out[w].remove(&v);
                }
                cx.objs[v] = None;
            }
        }
    }
}

/// Attaches cups to source loops and caps to target loops. Selection bit set
/// means the `x` summand (shift -1), clear means the `1` summand (shift +1).
fn seal_loops(
    surf: &mut Surface,
    src_loops: &[Rep],
    src_sel: u64,
    dst_loops: &[Rep],
    dst_sel: u64,
    piece: impl Fn(Rep) -> usize,
) {
    for (k, &r) in src_loops.iter().enumerate() {
        let cup = surf.piece((src_sel >> k & 1) as u32);
        surf.seal.push((piece(r), cup));
    }
    for (k, &r) in dst_loops.iter().enumerate() {
        let cap = surf.piece(1 - (dst_sel >> k & 1) as u32);
        surf.seal.push((piece(r), cap));
    }
}

/// Reduced complex of `d`, homotopy equivalent to the cube of resolutions,
/// with the same grading conventions.
pub fn scan_complex(d: &Diagram) -> ChainComplex {
    let mut sc = Scanner::new();
    let empty = sc.intern(Vec::new());
    let mut cx = Cx::new();
    cx.push(Obj { m: empty, t: 0, q: 0 });
    let mut boundary: BTreeSet<ArcLabel> = BTreeSet::new();
    for x in scan_order(d.code()).order {
        let quad = d.crossings()[x];
        cx = sc.add_crossing(&cx, &quad, &boundary);
        for l in quad {
            if !boundary.remove(&l) {
                boundary.insert(l);
            }
        }
        sc.eliminate(&mut cx);
        sc.compose_cache.clear();
    }
    debug_assert!(boundary.is_empty());

    let shift_t = -(d.n_minus() as i64);
    let shift_q = d.n_plus() as i64 - 2 * d.n_minus() as i64;
    let loops = d.loops();
    let alive: Vec<(usize, Obj)> = cx.alive().collect();
    let t_min = alive.iter().map(|(_, o)| o.t).min().unwrap_or(0);
    let t_max = alive.iter().map(|(_, o)| o.t).max().unwrap_or(0);
    let mut gens: Vec<Vec<i64>> = vec![Vec::new(); (t_max - t_min + 1) as usize];
    let mut pos: HashMap<usize, usize> = HashMap::new();
    for &(i, o) in &alive {
        let slot = &mut gens[(o.t - t_min) as usize];
        pos.insert(i, slot.len());
        for sel in 0u64..1 << loops {
            slot.push(o.q + shift_q + loops as i64 - 2 * sel.count_ones() as i64);
        }
    }
    let mut out = ChainComplex::new(t_min + shift_t, gens);
    let width = 1usize << loops;
    for &(i, o) in &alive {
        for (&j, e) in &cx.out[i] {
            let c = match e.as_slice() {
                [(0, c)] => *c,
                _ => unreachable!("closed objects have scalar morphisms"),
            };
            for sel in 0..width {
                out.diffs[(o.t - t_min) as usize].push(pos[&j] + sel, pos[&i] + sel, c);
            }
        }
    }
    out
}

/// Khovanov homology via the scanning engine.
pub fn scan_compute(d: &Diagram, ring: CoefficientRing) -> Result<GradedTable, KhError> {
    let ring = ring.validate()?;
    Ok(scan_complex(d).homology(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanov::{build_cube, NAIVE_THRESHOLD};
    use crate::linkdiag::gen::{braid_closure, standard_diagrams};

    #[test]
    fn surface_evaluation() {
        // cylinder between two cycles: neck cutting
        let mut s = Surface::default();
        let a = s.piece(0);
        let b = s.piece(0);
        s.glue.push((a, b));
        s.glue.push((a, b));
        s.boundary = vec![a, b];
        assert_eq!(s.evaluate(), vec![(1, 1), (2, 1)]);
        // undotted sphere
        let mut t = Surface::default();
        let p = t.piece(0);
        let q = t.piece(0);
        t.seal.push((p, q));
        assert_eq!(t.evaluate(), Vec::new());
        // annulus capped at both ends is a sphere; one dot evaluates to 1
        let mut w = Surface::default();
        let p = w.piece(0);
        w.glue.push((p, p));
        let c1 = w.piece(0);
        let c2 = w.piece(1);
        w.seal.extend([(p, c1), (p, c2)]);
        assert_eq!(w.evaluate(), vec![(0, 1)]);
        // dotted sphere
        let mut u = Surface::default();
        let p = u.piece(1);
        let q = u.piece(0);
        u.seal.push((p, q));
        assert_eq!(u.evaluate(), vec![(0, 1)]);
    }

    #[test]
    fn matches_cube_on_standard_diagrams() {
        for (name, d) in standard_diagrams() {
            let s = scan_complex(&d);
            assert!(s.check_d_squared(), "{name}");
            let c = build_cube(&d, NAIVE_THRESHOLD).unwrap();
            for ring in [CoefficientRing::Z, CoefficientRing::Fp(2), CoefficientRing::Q] {
                assert_eq!(s.homology(ring), c.homology(ring), "{name} over {ring}");
            }
        }
    }

    #[test]
    fn free_loops_alongside_a_nontrivial_complex() {
        let d = braid_closure(3, &[1, 1, 1]).unwrap();
        assert_eq!(d.loops(), 1);
        let s = scan_complex(&d);
        assert!(s.check_d_squared());
        let c = build_cube(&d, NAIVE_THRESHOLD).unwrap();
        assert_eq!(s.homology(CoefficientRing::Z), c.homology(CoefficientRing::Z));
    }
}

use std::collections::HashMap;

use super::{ChainComplex, KhError};
use crate::linkdiag::{ArcLabel, Diagram, Smoothing};

/// Default largest crossing count accepted by [`build_cube`].
pub const NAIVE_THRESHOLD: usize = 14;

struct Vertex {
    /// circle index of each compact arc index
    circle_of: Vec<usize>,
    /// one arc index per circle (free loops have none)
    rep: Vec<Option<usize>>,
    circles: usize,
}

fn smooth(d: &Diagram, index: &HashMap<ArcLabel, usize>, v: u32) -> Vertex {
    let n_arcs = index.len();
    let mut parent: Vec<usize> = (0..n_arcs).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (x, q) in d.crossings().iter().enumerate() {
        let s = if v >> x & 1 == 1 { Smoothing::One } else { Smoothing::Zero };
        for (i, j) in s.pairs() {
            let (a, b) = (find(&mut parent, index[&q[i]]), find(&mut parent, index[&q[j]]));
            parent[a] = b;
        }
    }
    let mut root_circle: HashMap<usize, usize> = HashMap::new();
    let mut rep = Vec::new();
    let mut circle_of = Vec::with_capacity(n_arcs);
    for a in 0..n_arcs {
        let r = find(&mut parent, a);
        let next = root_circle.len();
        let c = *root_circle.entry(r).or_insert_with(|| {
            rep.push(Some(a));
            next
        });
        circle_of.push(c);
    }
    for _ in 0..d.loops() {
        rep.push(None);
    }
    Vertex { circle_of, circles: rep.len(), rep }
}

/// The cube of resolutions. Generator bit `k` set means the `k`-th circle is
/// labelled `x`; gradings follow `t = r - n_-`, `q = #1 - #x + r + n_+ - 2 n_-`.
pub fn build_cube(d: &Diagram, threshold: usize) -> Result<ChainComplex, KhError> {
    let n = d.num_crossings();
    if n > threshold {
        return Err(KhError::TooManyCrossings { crossings: n, threshold });
    }
    let index: HashMap<ArcLabel, usize> = d.code().labels().enumerate().map(|(i, l)| (l, i)).collect();
    let n_plus = d.n_plus() as i64;
    let n_minus = d.n_minus() as i64;
    let vertices: Vec<Vertex> = (0..1u32 << n).map(|v| smooth(d, &index, v)).collect();
    let mut offset = vec![0usize; vertices.len()];
    let mut gens: Vec<Vec<i64>> = vec![Vec::new(); n + 1];
    for (v, vert) in vertices.iter().enumerate() {
        let r = (v as u32).count_ones() as usize;
        offset[v] = gens[r].len();
        let k = vert.circles;
        for b in 0u64..1 << k {
            gens[r].push(k as i64 - 2 * b.count_ones() as i64 + r as i64 + n_plus - 2 * n_minus);
        }
    }
    let mut cx = ChainComplex::new(-n_minus, gens);
    for (v, vert) in vertices.iter().enumerate() {
        let r = (v as u32).count_ones() as usize;
        for i in (0..n).filter(|&i| v >> i & 1 == 0) {
            let w = v | 1 << i;
            let target = &vertices[w];
            let sign: i64 = if (v & ((1 << i) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
            let q = d.crossings()[i];
            let ca = vert.circle_of[index[&q[0]]];
            let cb = vert.circle_of[index[&q[2]]];
            let da = target.circle_of[index[&q[1]]];
            let db = target.circle_of[index[&q[3]]];
            // image of every untouched circle
            let loops_base = vert.circles - d.loops() as usize;
            let tloops_base = target.circles - d.loops() as usize;
            let map: Vec<Option<usize>> = vert
                .rep
                .iter()
                .enumerate()
                .map(|(c, rep)| {
                    if c == ca || c == cb {
                        None
                    } else {
                        Some(match rep {
                            Some(a) => target.circle_of[*a],
                            None => tloops_base + (c - loops_base),
                        })
                    }
                })
                .collect();
            for b in 0u64..1 << vert.circles {
                let mut base = 0u64;
                for (c, m) in map.iter().enumerate() {
                    if let Some(t) = m {
                        if b >> c & 1 == 1 {
                            base |= 1 << t;
                        }
                    }
                }
                let src = offset[v] + b as usize;
                let mut emit = |bits: u64| cx.diffs[r].push(offset[w] + bits as usize, src, sign);
                if ca != cb {
                    debug_assert_eq!(da, db);
                    let (xa, xb) = (b >> ca & 1, b >> cb & 1);
                    if xa + xb < 2 {
                        emit(base | (xa | xb) << da);
                    }
                } else {
                    debug_assert_ne!(da, db);
                    if b >> ca & 1 == 0 {
                        emit(base | 1 << db);
                        emit(base | 1 << da);
                    } else {
                        emit(base | 1 << da | 1 << db);
                    }
                }
            }
        }
    }
    Ok(cx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanov::CoefficientRing;
    use crate::linkdiag::gen::braid_closure;

    #[test]
    fn unknot_and_kink() {
        let u = Diagram::new(vec![], 1).unwrap();
        let c = build_cube(&u, NAIVE_THRESHOLD).unwrap();
        assert_eq!(c.gens, vec![vec![1, -1]]);
        let k = Diagram::new(vec![[1, 1, 2, 2]], 0).unwrap();
        let c = build_cube(&k, NAIVE_THRESHOLD).unwrap();
        assert!(c.check_d_squared() && c.check_q_preserved());
        let h = c.homology(CoefficientRing::Q);
        assert_eq!(h, build_cube(&u, 14).unwrap().homology(CoefficientRing::Q));
    }

    #[test]
    fn trefoil_cube() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        let c = build_cube(&t, NAIVE_THRESHOLD).unwrap();
        assert!(c.check_d_squared());
        let h = c.homology(CoefficientRing::Z);
        let cells: Vec<_> = h.cells().map(|(k, c)| (k, c.rank, c.torsion.clone())).collect();
        assert_eq!(
            cells,
            vec![((0, 1), 1, vec![]), ((0, 3), 1, vec![]), ((2, 5), 1, vec![]), ((3, 7), 0, vec![2]), ((3, 9), 1, vec![])]
        );
        assert!(build_cube(&t, 2).is_err());
    }
}

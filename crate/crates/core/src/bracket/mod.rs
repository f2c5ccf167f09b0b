//! Kauffman bracket and Jones polynomials.
//!
//! The bracket lives in the variable `A`, the Jones polynomials in `q`, both as
//! [`LaurentPoly`] with half-unit exponents.

mod poly;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

pub use poly::{LaurentPoly, PolyJson, PolyParseError};

use crate::linkdiag::{scan_order, ArcLabel, Diagram, Smoothing};

/// `-A^2 - A^-2`.
pub fn delta_a() -> LaurentPoly {
    LaurentPoly::from_terms([(4, -1), (-4, -1)])
}

/// `q + q^-1`.
pub fn quantum_two() -> LaurentPoly {
    LaurentPoly::from_terms([(2, 1), (-2, 1)])
}

type Matching = Vec<(ArcLabel, ArcLabel)>;

/// Kauffman bracket in `A`, normalized so the crossingless unknot is 1.
///
/// Crossings are absorbed one at a time in a girth-minimizing order; the
/// partial states are the non-crossing matchings of the currently open arcs,
/// so the cost is governed by the scan width rather than the crossing count.
pub fn kauffman_bracket(d: &Diagram) -> LaurentPoly {
    let order = scan_order(d.code()).order;
    let mut states: HashMap<Matching, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    let delta = delta_a();
    for x in order {
        let quad = d.crossings()[x];
        let mut next: HashMap<Matching, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (m, coeff) in &states {
            for (s, a_exp) in [(Smoothing::Zero, 2), (Smoothing::One, -2)] {
                let (m2, cycles) = absorb(m, &quad, s);
                let mut c = coeff.shift(a_exp);
                for _ in 0..cycles {
                    c = &c * &delta;
                }
                *next.entry(m2).or_default() += &c;
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    let mut total = states.remove(&Vec::new()).unwrap_or_default();
    debug_assert!(states.is_empty());
    for _ in 0..d.loops() {
        total = &total * &delta;
    }
    total.div_exact(&delta).expect("every state has at least one circle")
}

/// Adds one smoothed crossing to a partial state; returns the new matching of
/// open arcs and the number of closed circles formed.
fn absorb(m: &Matching, quad: &[ArcLabel; 4], s: Smoothing) -> (Matching, u32) {
    let touches = |l: ArcLabel| quad.contains(&l);
    let mut edges: Vec<(ArcLabel, ArcLabel)> = Vec::with_capacity(8);
    let mut out: Matching = Vec::with_capacity(m.len() + 2);
    for &(a, b) in m {
        if touches(a) || touches(b) {
            edges.push((a, b));
        } else {
            out.push((a, b));
        }
    }
    for (i, j) in s.pairs() {
        edges.push((quad[i], quad[j]));
    }
    let degree = |v: ArcLabel, edges: &[(ArcLabel, ArcLabel)]| {
        edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum::<usize>()
    };
    let mut used = vec![false; edges.len()];
    let mut nodes: Vec<ArcLabel> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    for &start in &nodes {
        if degree(start, &edges) != 1 || edges.iter().zip(&used).any(|(&(a, b), &u)| u && (a == start || b == start)) {
            continue;
        }
        let mut v = start;
        while let Some(k) = (0..edges.len()).find(|&k| !used[k] && (edges[k].0 == v || edges[k].1 == v)) {
            used[k] = true;
            v = if edges[k].0 == v { edges[k].1 } else { edges[k].0 };
        }
        if start < v {
            out.push((start, v));
        }
    }
    // remaining edges form cycles
    let mut cycles = 0;
    while let Some(k0) = used.iter().position(|u| !u) {
        cycles += 1;
        let mut v = edges[k0].0;
        let first = v;
        used[k0] = true;
        v = if edges[k0].0 == v { edges[k0].1 } else { edges[k0].0 };
        while v != first {
            let k = (0..edges.len())
                .find(|&k| !used[k] && (edges[k].0 == v || edges[k].1 == v))
                .expect("closed cycle");
            used[k] = true;
            v = if edges[k].0 == v { edges[k].1 } else { edges[k].0 };
        }
    }
    out.sort_unstable();
    (out, cycles)
}

/// Converts a writhe-normalized bracket in `A` to `q` via `A^2 -> -q^-1`.
fn a_to_q(p: &LaurentPoly) -> LaurentPoly {
    p.map_exponents(|e| {
        assert!(e % 4 == 0, "normalized bracket has only even powers of A");
        let k = e / 4;
        (-2 * k, if k % 2 == 0 { 1 } else { -1 })
    })
}

/// `(-A^3)^(-w) <D>`, in `A`.
pub fn normalized_bracket(d: &Diagram) -> LaurentPoly {
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    kauffman_bracket(d).shift(-6 * w).scale(sign)
}

/// Jones polynomial normalized so that the unknot is `q + q^-1`; equals the
/// graded Euler characteristic of Khovanov homology.
pub fn unnormalized_jones(d: &Diagram) -> LaurentPoly {
    &a_to_q(&normalized_bracket(d)) * &quantum_two()
}

/// Reduced Jones polynomial in both the engine variable `q` and the printed
/// variable `t` with `t^(1/2) = -q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedJones {
    /// Quotient by `q + q^-1`; the unnormalized form if not divisible.
    pub q_form: LaurentPoly,
    pub divisible: bool,
    pub t_form: LaurentPoly,
}

pub fn jones_reduced(d: &Diagram) -> ReducedJones {
    reduce_jones(&unnormalized_jones(d))
}

pub fn reduce_jones(unnormalized: &LaurentPoly) -> ReducedJones {
    match unnormalized.div_exact(&quantum_two()) {
        Some(q_form) => ReducedJones { t_form: q_to_t(&q_form), q_form, divisible: true },
        None => ReducedJones { t_form: q_to_t(unnormalized), q_form: unnormalized.clone(), divisible: false },
    }
}

/// `c q^k -> c (-1)^k t^(k/2)`.
pub fn q_to_t(p: &LaurentPoly) -> LaurentPoly {
    p.map_exponents(|e| {
        assert!(e % 2 == 0, "q-form has integer exponents");
        let k = e / 2;
        (k, if k % 2 == 0 { 1 } else { -1 })
    })
}

/// Which symmetry relates a computed `t`-form to a printed polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrintedMatch {
    Identity,
    Inverted,
    Negated,
    NegatedInverted,
}

/// Compares up to `t -> t^-1` and an overall sign, preferring the identity.
pub fn match_printed(computed: &LaurentPoly, printed: &LaurentPoly) -> Option<PrintedMatch> {
    let inv = computed.invert_var();
    [
        (PrintedMatch::Identity, computed.clone()),
        (PrintedMatch::Inverted, inv.clone()),
        (PrintedMatch::Negated, computed.scale(-1)),
        (PrintedMatch::NegatedInverted, inv.scale(-1)),
    ]
    .into_iter()
    .find(|(_, p)| p == printed)
    .map(|(m, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::gen::{braid_closure, standard_diagrams};

    /// Direct 2^n state sum: sum over all states of A^(#0 - #1) delta^(circles - 1).
    fn bracket_oracle(d: &Diagram) -> LaurentPoly {
        let n = d.num_crossings();
        let mut total = LaurentPoly::zero();
        for mask in 0u32..1 << n {
            let mut parent: HashMap<ArcLabel, ArcLabel> = HashMap::new();
            fn find(p: &mut HashMap<ArcLabel, ArcLabel>, x: ArcLabel) -> ArcLabel {
                let px = *p.entry(x).or_insert(x);
                if px == x {
                    x
                } else {
                    let r = find(p, px);
                    p.insert(x, r);
                    r
                }
            }
            let mut ones = 0i64;
            for (x, q) in d.crossings().iter().enumerate() {
                let s = if mask >> x & 1 == 1 { Smoothing::One } else { Smoothing::Zero };
                ones += (s == Smoothing::One) as i64;
                for (i, j) in s.pairs() {
                    let (a, b) = (find(&mut parent, q[i]), find(&mut parent, q[j]));
                    parent.insert(a, b);
                }
            }
            let labels: Vec<ArcLabel> = parent.keys().copied().collect();
            let mut roots: Vec<ArcLabel> = labels.iter().map(|&l| find(&mut parent, l)).collect();
            roots.sort_unstable();
            roots.dedup();
            let circles = roots.len() as u32 + d.loops();
            let term = delta_a().pow(circles - 1).shift(2 * (n as i64 - 2 * ones));
            total += &term;
        }
        total
    }

    #[test]
    fn trivial_values() {
        let u = Diagram::new(vec![], 1).unwrap();
        assert_eq!(kauffman_bracket(&u), LaurentPoly::one());
        assert_eq!(unnormalized_jones(&u), quantum_two());
        let u2 = Diagram::new(vec![], 2).unwrap();
        assert_eq!(kauffman_bracket(&u2), delta_a());
        assert_eq!(unnormalized_jones(&u2), quantum_two().pow(2));
        let r = jones_reduced(&u);
        assert!(r.divisible);
        assert_eq!(r.q_form, LaurentPoly::one());
    }

    #[test]
    fn right_trefoil_jones() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        let expect = LaurentPoly::from_terms([(2, 1), (6, 1), (10, 1), (18, -1)]);
        assert_eq!(unnormalized_jones(&t), expect);
        // classical V(t) = t + t^3 - t^4
        let v = jones_reduced(&t).t_form;
        assert_eq!(v, LaurentPoly::from_terms([(2, 1), (6, 1), (8, -1)]));
        let left = Diagram::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0).unwrap();
        assert_eq!(unnormalized_jones(&left), expect.invert_var());
    }

    #[test]
    fn scanning_matches_state_sum() {
        for (name, d) in standard_diagrams() {
            assert_eq!(kauffman_bracket(&d), bracket_oracle(&d), "{name}");
            assert_eq!(kauffman_bracket(&d.mirror()), kauffman_bracket(&d).invert_var(), "{name}");
        }
    }

    #[test]
    fn printed_match_branches() {
        let p = LaurentPoly::from_terms([(-3, -1), (1, 2)]);
        assert_eq!(match_printed(&p, &p), Some(PrintedMatch::Identity));
        assert_eq!(match_printed(&p, &p.invert_var().scale(-1)), Some(PrintedMatch::NegatedInverted));
        assert_eq!(match_printed(&p, &LaurentPoly::one()), None);
    }
}

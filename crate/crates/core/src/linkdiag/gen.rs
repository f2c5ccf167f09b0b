//! Diagram generators: braid closures, a small table of standard knots and
//! links, and random corpora for property tests.

use rand::seq::IndexedRandom;
use rand::Rng;

use super::{ArcLabel, Diagram, DiagramError, Tangle};

/// Closure of a braid word on `strands` strands. Generator `i` (1-based) is the
/// positive crossing of strands `i` and `i+1`, `-i` its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::Empty);
    }
    let mut cur: Vec<ArcLabel> = (1..=strands as ArcLabel).collect();
    let mut next = strands as ArcLabel + 1;
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(DiagramError::InvalidSite(format!("braid generator {g} on {strands} strands")));
        }
        let (sw, se) = (cur[i - 1], cur[i]);
        let (nw, ne) = (next, next + 1);
        next += 2;
        crossings.push(if g > 0 { [se, ne, nw, sw] } else { [sw, se, ne, nw] });
        cur[i - 1] = nw;
        cur[i] = ne;
    }
    let mut loops = 0;
    let rename: std::collections::HashMap<ArcLabel, ArcLabel> = cur
        .iter()
        .enumerate()
        .filter_map(|(i, &top)| {
            let bottom = i as ArcLabel + 1;
            if top == bottom {
                loops += 1;
                None
            } else {
                Some((top, bottom))
            }
        })
        .collect();
    let crossings = crossings
        .into_iter()
        .map(|q: [ArcLabel; 4]| q.map(|l| *rename.get(&l).unwrap_or(&l)))
        .collect();
    let code = Tangle::new(crossings, Vec::new(), loops)?.compact_labels();
    Diagram::from_tangle(code)
}

/// Named small knots and links, as `(name, diagram)`.
pub fn standard_diagrams() -> Vec<(&'static str, Diagram)> {
    let braids: &[(&str, usize, &[i32])] = &[
        ("unknot-kink", 2, &[1]),
        ("hopf", 2, &[1, 1]),
        ("trefoil", 2, &[1, 1, 1]),
        ("figure-eight", 3, &[1, -2, 1, -2]),
        ("solomon", 2, &[1, 1, 1, 1]),
        ("cinquefoil", 2, &[1, 1, 1, 1, 1]),
        ("three-twist", 3, &[1, 1, 1, 2, -1, 2]),
        ("borromean", 3, &[1, -2, 1, -2, 1, -2]),
        ("t34", 3, &[1, 2, 1, 2, 1, 2, 1, 2]),
        ("split-unlink", 3, &[1, -1]),
    ];
    let mut out = vec![("unknot", Diagram::new(Vec::new(), 1).expect("unknot"))];
    out.push(("unlink2", Diagram::new(Vec::new(), 2).expect("unlink")));
    out.push((
        "trefoil-pd",
        Diagram::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0).expect("trefoil"),
    ));
    for &(name, s, w) in braids {
        out.push((name, braid_closure(s, w).expect("valid braid")));
    }
    out
}

/// A uniformly random sign-and-generator braid word closure, followed by
/// `twists` random twist insertions of 1 to 3 half-twists each.
pub fn random_diagram<R: Rng + ?Sized>(
    rng: &mut R,
    strands: usize,
    length: usize,
    twists: usize,
) -> Diagram {
    let word: Vec<i32> = (0..length)
        .map(|_| {
            let g = rng.random_range(1..strands.max(2)) as i32;
            if rng.random_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    let mut d = braid_closure(strands.max(2), &word).expect("valid braid");
    for _ in 0..twists {
        if let Some((a, b)) = random_twist_site(rng, d.code()) {
            let n = rng.random_range(1..=3i64) * if rng.random_bool(0.5) { 1 } else { -1 };
            d = d.insert_twists(a, b, n).expect("site shares a face");
        }
    }
    d
}

/// Two distinct arcs that each occur once on some common face.
pub fn random_twist_site<R: Rng + ?Sized>(rng: &mut R, code: &Tangle) -> Option<(ArcLabel, ArcLabel)> {
    let faces: Vec<Vec<ArcLabel>> = code
        .faces()
        .into_iter()
        .map(|f| {
            let labels: Vec<ArcLabel> = f.iter().map(|a| a.label).collect();
            labels.iter().copied().filter(|l| labels.iter().filter(|m| *m == l).count() == 1).collect()
        })
        .filter(|v: &Vec<ArcLabel>| v.len() >= 2)
        .collect();
    let face = faces.choose(rng)?;
    let i = rng.random_range(0..face.len());
    let mut j = rng.random_range(0..face.len() - 1);
    if j >= i {
        j += 1;
    }
    Some((face[i], face[j]))
}

/// A random non-crossing perfect matching of `2k` points on a circle.
pub fn random_noncrossing_matching<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(k);
    fill_matching(rng, 0, 2 * k, &mut out);
    out
}

fn fill_matching<R: Rng + ?Sized>(rng: &mut R, lo: usize, hi: usize, out: &mut Vec<(usize, usize)>) {
    if lo >= hi {
        return;
    }
    let half = (hi - lo) / 2;
    let j = lo + 2 * rng.random_range(0..half) + 1;
    out.push((lo, j));
    fill_matching(rng, lo + 1, j, out);
    fill_matching(rng, j + 1, hi, out);
}

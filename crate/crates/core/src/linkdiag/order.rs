use std::collections::HashMap;

use super::{ArcLabel, Tangle};

/// A crossing order for tangle-by-tangle evaluation, with the largest number
/// of open arc ends seen along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOrder {
    pub order: Vec<usize>,
    pub max_width: usize,
}

/// Greedy girth minimization: repeatedly add the crossing that leaves the
/// fewest open arc ends (ties: most arcs closed, then lowest index). Every start
/// crossing is tried and the order with the smallest peak width wins.
pub fn scan_order(code: &Tangle) -> ScanOrder {
    let n = code.num_crossings();
    if n == 0 {
        return ScanOrder { order: Vec::new(), max_width: 0 };
    }
    let mut best: Option<ScanOrder> = None;
    for start in 0..n {
        let cand = greedy_from(code, start);
        if best.as_ref().is_none_or(|b| cand.max_width < b.max_width) {
            best = Some(cand);
        }
    }
    best.expect("at least one crossing")
}

fn greedy_from(code: &Tangle, start: usize) -> ScanOrder {
    let n = code.num_crossings();
    let mut done = vec![false; n];
    // number of ends of each arc already inside the processed region
    let mut inside: HashMap<ArcLabel, u8> = HashMap::new();
    let mut width = 0usize;
    let mut order = Vec::with_capacity(n);
    let mut max_width = 0;
    let mut next = Some(start);
    while let Some(x) = next {
        done[x] = true;
        order.push(x);
        for &l in &code.crossings()[x] {
            let e = inside.entry(l).or_insert(0);
            *e += 1;
            if *e == 1 {
                width += 1;
            } else {
                width -= 1;
            }
        }
        max_width = max_width.max(width);
        next = (0..n).filter(|&y| !done[y]).min_by_key(|&y| {
            let mut w = width as i64;
            let mut closed = 0i64;
            let mut local: HashMap<ArcLabel, u8> = HashMap::new();
            for &l in &code.crossings()[y] {
                let c = inside.get(&l).copied().unwrap_or(0) + *local.get(&l).unwrap_or(&0);
                *local.entry(l).or_insert(0) += 1;
                if c == 0 {
                    w += 1;
                } else {
                    w -= 1;
                    closed += 1;
                }
            }
            (w, -closed, y)
        });
    }
    ScanOrder { order, max_width }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_a_permutation() {
        let t = Tangle::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], vec![], 0).unwrap();
        let s = scan_order(&t);
        let mut o = s.order.clone();
        o.sort();
        assert_eq!(o, vec![0, 1, 2]);
        assert_eq!(s.max_width, 4);
    }
}

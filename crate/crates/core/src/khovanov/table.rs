use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CoefficientRing, KhError};
use crate::bracket::LaurentPoly;

/// One bigraded group: free part of the given rank plus cyclic torsion
/// summands of prime-power order (always empty over a field).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl Cell {
    pub fn free(rank: u64) -> Self {
        Cell { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Number of torsion summands of order a power of `p`.
    pub fn p_torsion(&self, p: u64) -> u64 {
        self.torsion.iter().filter(|&&m| is_power_of(m, p)).count() as u64
    }

    pub fn render(&self) -> String {
        let mut groups: BTreeMap<u64, usize> = BTreeMap::new();
        for &m in &self.torsion {
            *groups.entry(m).or_default() += 1;
        }
        let mut parts = Vec::new();
        if self.rank > 0 || groups.is_empty() {
            parts.push(self.rank.to_string());
        }
        for (m, k) in groups {
            parts.push(if k == 1 { format!("Z{m}") } else { format!("Z{m}^{k}") });
        }
        parts.join("+")
    }
}

fn is_power_of(mut m: u64, p: u64) -> bool {
    if m < p {
        return false;
    }
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Khovanov homology groups indexed by `(t, q)`: homological then quantum
/// grading. Zero cells are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTable {
    pub ring: CoefficientRing,
    cells: BTreeMap<(i64, i64), Cell>,
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    t: i64,
    q: i64,
    rank: u64,
    torsion: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    ring: CoefficientRing,
    cells: Vec<CellJson>,
}

impl GradedTable {
    pub fn new(ring: CoefficientRing) -> Self {
        GradedTable { ring, cells: BTreeMap::new() }
    }

    /// Adds `cell` to the group at `(t, q)`.
    pub fn add(&mut self, t: i64, q: i64, cell: Cell) {
        if cell.is_zero() {
            return;
        }
        let e = self.cells.entry((t, q)).or_default();
        e.rank += cell.rank;
        e.torsion.extend(cell.torsion);
        e.torsion.sort_unstable();
    }

    pub fn set(&mut self, t: i64, q: i64, cell: Cell) {
        if cell.is_zero() {
            self.cells.remove(&(t, q));
        } else {
            let mut cell = cell;
            cell.torsion.sort_unstable();
            self.cells.insert((t, q), cell);
        }
    }

    pub fn get(&self, t: i64, q: i64) -> Cell {
        self.cells.get(&(t, q)).cloned().unwrap_or_default()
    }

    pub fn rank(&self, t: i64, q: i64) -> u64 {
        self.cells.get(&(t, q)).map_or(0, |c| c.rank)
    }

    /// Nonzero cells in `(t, q)` order.
    pub fn cells(&self) -> impl Iterator<Item = ((i64, i64), &Cell)> {
        self.cells.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn total_rank(&self) -> u64 {
        self.cells.values().map(|c| c.rank).sum()
    }

    /// Moves the cell at `(t, q)` to `(t + dt, q + dq)`.
    pub fn shifted(&self, dt: i64, dq: i64) -> GradedTable {
        GradedTable { ring: self.ring, cells: self.cells.iter().map(|(&(t, q), c)| ((t + dt, q + dq), c.clone())).collect() }
    }

    /// Tensor product with `k` copies of the rank-two algebra (free loops).
    pub fn tensor_loops(&self, k: u32) -> GradedTable {
        let mut cur = self.clone();
        for _ in 0..k {
            let mut next = GradedTable::new(self.ring);
            for ((t, q), c) in cur.cells() {
                next.add(t, q + 1, c.clone());
                next.add(t, q - 1, c.clone());
            }
            cur = next;
        }
        cur
    }

    /// `sum (-1)^t q^q rank`, in `q` with half-unit exponents.
    pub fn euler_characteristic(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.cells().map(|((t, q), c)| (2 * q, if t.rem_euclid(2) == 0 { c.rank as i128 } else { -(c.rank as i128) })),
        )
    }

    /// Smallest quantum grading with a nonzero group.
    pub fn support_min_q(&self) -> Result<i64, KhError> {
        self.cells.keys().map(|&(_, q)| q).min().ok_or(KhError::EmptyTable)
    }

    pub fn support_max_q(&self) -> Result<i64, KhError> {
        self.cells.keys().map(|&(_, q)| q).max().ok_or(KhError::EmptyTable)
    }

    pub fn to_json(&self) -> String {
        let j = TableJson {
            ring: self.ring,
            cells: self
                .cells()
                .map(|((t, q), c)| CellJson { t, q, rank: c.rank, torsion: c.torsion.clone() })
                .collect(),
        };
        serde_json::to_string(&j).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<GradedTable, KhError> {
        let j: TableJson = serde_json::from_str(text).map_err(|e| KhError::Json(e.to_string()))?;
        let mut tbl = GradedTable::new(j.ring);
        for c in j.cells {
            if j.ring.is_field() && !c.torsion.is_empty() {
                return Err(KhError::Json(format!("torsion in a {} table at ({},{})", j.ring, c.t, c.q)));
            }
            tbl.add(c.t, c.q, Cell { rank: c.rank, torsion: c.torsion });
        }
        Ok(tbl)
    }

    /// `t,q,rank,torsion` rows in `(t, q)` order; torsion orders joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,q,rank,torsion\n");
        for ((t, q), c) in self.cells() {
            let tors: Vec<String> = c.torsion.iter().map(|m| m.to_string()).collect();
            s += &format!("{t},{q},{},{}\n", c.rank, tors.join(";"));
        }
        s
    }

    /// Grid with one row per quantum grading (ascending, every other value) and
    /// one column per homological grading (ascending). Blank cells are zero.
    pub fn to_text_grid(&self) -> String {
        let mut s = format!("Kh over {}\n", self.ring);
        if self.cells.is_empty() {
            s += "(zero)\n";
            return s;
        }
        let tmin = self.cells.keys().map(|k| k.0).min().expect("nonempty");
        let tmax = self.cells.keys().map(|k| k.0).max().expect("nonempty");
        let qmin = self.support_min_q().expect("nonempty");
        let qmax = self.support_max_q().expect("nonempty");
        let rendered: BTreeMap<(i64, i64), String> = self.cells().map(|(k, c)| (k, c.render())).collect();
        let width = rendered
            .values()
            .map(|r| r.len())
            .chain((tmin..=tmax).map(|t| t.to_string().len()))
            .max()
            .expect("nonempty");
        let qwidth = [qmin, qmax].iter().map(|q| q.to_string().len()).max().expect("two").max(3);
        s += &format!("{:>qwidth$} |", "q\\t");
        for t in tmin..=tmax {
            s += &format!(" {t:>width$}");
        }
        s += "\n";
        s += &"-".repeat(qwidth + 2 + (width + 1) * (tmax - tmin + 1) as usize);
        s += "\n";
        let parity_step = if self.cells.keys().all(|k| (k.1 - qmin) % 2 == 0) { 2 } else { 1 };
        let mut q = qmin;
        while q <= qmax {
            let mut line = format!("{q:>qwidth$} |");
            for t in tmin..=tmax {
                line += &format!(" {:>width$}", rendered.get(&(t, q)).map_or("", |r| r.as_str()));
            }
            s += line.trim_end();
            s += "\n";
            q += parity_step;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> GradedTable {
        let mut t = GradedTable::new(CoefficientRing::Z);
        t.add(0, -1, Cell::free(1));
        t.add(0, 1, Cell::free(1));
        t.add(-2, -5, Cell { rank: 0, torsion: vec![2] });
        t.add(-3, -9, Cell { rank: 1, torsion: vec![2, 2, 4] });
        t
    }

    #[test]
    fn json_round_trip() {
        let t = sample();
        let s = t.to_json();
        assert!(s.starts_with(r#"{"ring":"Z","cells":[{"t":-3,"q":-9,"rank":1,"torsion":[2,2,4]}"#));
        assert_eq!(GradedTable::from_json(&s).unwrap(), t);
        assert!(GradedTable::from_json(r#"{"ring":"Q","cells":[{"t":0,"q":0,"rank":1,"torsion":[2]}]}"#).is_err());
    }

    #[test]
    fn grid_and_csv() {
        let t = sample();
        let g = t.to_text_grid();
        assert!(g.contains("1+Z2^2+Z4"));
        assert!(g.lines().nth(3).unwrap().starts_with(" -9 |"));
        assert!(t.to_csv().contains("-3,-9,1,2;2;4\n"));
        assert_eq!(t.get(-3, -9).p_torsion(2), 3);
        assert_eq!(t.get(-3, -9).p_torsion(3), 0);
    }

    #[test]
    fn euler_and_support() {
        let t = sample();
        assert_eq!(t.support_min_q().unwrap(), -9);
        let chi = t.euler_characteristic();
        assert_eq!(chi, LaurentPoly::from_terms([(-2, 1), (2, 1), (-18, -1)]));
        assert!(GradedTable::new(CoefficientRing::Q).support_min_q().is_err());
        let loops = GradedTable::new(CoefficientRing::Q);
        assert!(loops.tensor_loops(2).is_empty());
    }
}

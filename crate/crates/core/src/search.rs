//! Exhaustive searches over small Cayley tables.
//!
//! [`bol_search`] finds every left Bol loop of a given order with the
//! identity fixed at index 0. Cells are decided in row-major order; after
//! each decision the row and column candidate sets are propagated (naked and
//! hidden singles) and every Bol triple `x(y·xz) = (x·yx)z` is checked as
//! soon as its six cells are known. A triple with one side known and only
//! the final cell of the other side missing forces that cell.

use crate::error::{Error, Result};
use crate::loops::LoopTable;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Largest order accepted by the searches here.
pub const MAX_SEARCH_ORDER: usize = 16;

const EMPTY: u8 = u8::MAX;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub solutions: u64,
}

struct BolSearch {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl BolSearch {
    fn new(n: usize, budget: u64) -> Self {
        let mut s = BolSearch {
            n,
            cells: vec![EMPTY; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            trail: Vec::new(),
            nodes: 0,
            budget,
        };
        for i in 0..n {
            s.place(i, i as u8);
            if i != 0 {
                s.place(i * n, i as u8);
            }
        }
        s.trail.clear();
        s
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.cells[x * self.n + y];
        (v != EMPTY).then_some(v as usize)
    }

    #[inline]
    fn domain(&self, cell: usize) -> u32 {
        let full = (1u32 << self.n) - 1;
        full & !self.row_used[cell / self.n] & !self.col_used[cell % self.n]
    }

    fn place(&mut self, cell: usize, v: u8) {
        self.cells[cell] = v;
        self.row_used[cell / self.n] |= 1 << v;
        self.col_used[cell % self.n] |= 1 << v;
        self.trail.push(cell);
    }

    /// Assign `v` to an empty cell if allowed, or check agreement with the
    /// existing value. Returns whether anything changed, `Err` on conflict.
    fn force(&mut self, cell: usize, v: usize) -> std::result::Result<bool, ()> {
        match self.cells[cell] {
            EMPTY if self.domain(cell) >> v & 1 == 1 => {
                self.place(cell, v as u8);
                Ok(true)
            }
            EMPTY => Err(()),
            w if w as usize == v => Ok(false),
            _ => Err(()),
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap();
            let v = self.cells[cell];
            self.row_used[cell / self.n] &= !(1 << v);
            self.col_used[cell % self.n] &= !(1 << v);
            self.cells[cell] = EMPTY;
        }
    }

    fn latin_pass(&mut self) -> std::result::Result<bool, ()> {
        let n = self.n;
        let mut changed = false;
        for cell in 0..n * n {
            if self.cells[cell] == EMPTY {
                let d = self.domain(cell);
                if d == 0 {
                    return Err(());
                }
                if d.is_power_of_two() {
                    self.place(cell, d.trailing_zeros() as u8);
                    changed = true;
                }
            }
        }
        // hidden singles in rows, then columns
        for line in 0..2 * n {
            let (used, cell_at): (u32, Box<dyn Fn(usize) -> usize>) = if line < n {
                (self.row_used[line], Box::new(move |j| line * n + j))
            } else {
                let c = line - n;
                (self.col_used[c], Box::new(move |i| i * n + c))
            };
            for v in 0..n {
                if used >> v & 1 == 1 {
                    continue;
                }
                let mut spot = None;
                let mut count = 0;
                for j in 0..n {
                    let cell = cell_at(j);
                    if self.cells[cell] == EMPTY && self.domain(cell) >> v & 1 == 1 {
                        count += 1;
                        spot = Some(cell);
                    }
                }
                match (count, spot) {
                    (0, _) => return Err(()),
                    (1, Some(cell)) => {
                        self.place(cell, v as u8);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        Ok(changed)
    }

    fn bol_pass(&mut self) -> std::result::Result<bool, ()> {
        let n = self.n;
        let mut changed = false;
        for x in 1..n {
            for y in 0..n {
                // s = x·(y·x)
                let s = self.get(y, x).and_then(|yx| self.get(x, yx));
                for z in 1..n {
                    let t2 = self.get(x, z).and_then(|xz| self.get(y, xz));
                    let lhs = t2.and_then(|t2| self.get(x, t2));
                    let rhs = s.and_then(|s| self.get(s, z));
                    match (lhs, rhs) {
                        (Some(l), Some(r)) if l != r => return Err(()),
                        (Some(l), None) => {
                            if let Some(s) = s {
                                changed |= self.force(s * n + z, l)?;
                            }
                        }
                        (None, Some(r)) => {
                            if let Some(t2) = t2 {
                                changed |= self.force(x * n + t2, r)?;
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(changed)
    }

    fn propagate(&mut self) -> bool {
        loop {
            let latin = match self.latin_pass() {
                Ok(c) => c,
                Err(()) => return false,
            };
            let bol = match self.bol_pass() {
                Ok(c) => c,
                Err(()) => return false,
            };
            if !latin && !bol {
                return true;
            }
        }
    }

    fn run(&mut self, out: &mut Vec<LoopTable>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        if !self.propagate() {
            return Ok(());
        }
        let Some(cell) = self.cells.iter().position(|&v| v == EMPTY) else {
            let table =
                LoopTable::from_cells(self.n, self.cells.iter().map(|&v| v as u16).collect())
                    .expect("complete search state is a loop");
            out.push(table);
            return Ok(());
        };
        let mut d = self.domain(cell);
        while d != 0 {
            let v = d.trailing_zeros();
            d &= d - 1;
            let mark = self.trail.len();
            self.place(cell, v as u8);
            let res = self.run(out);
            self.undo(mark);
            res?;
        }
        Ok(())
    }
}

/// Every left Bol loop of order `n` with identity 0, in lexicographic order
/// of the row-major cell sequence.
pub fn bol_search(n: usize, budget: u64) -> Result<(Vec<LoopTable>, SearchStats)> {
    if n == 0 || n > MAX_SEARCH_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut search = BolSearch::new(n, budget);
    let mut out = Vec::new();
    search.run(&mut out)?;
    let stats = SearchStats {
        nodes: search.nodes,
        solutions: out.len() as u64,
    };
    Ok((out, stats))
}

/// Largest order for which [`enumerate_loops`] is allowed.
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// All loops of order `n` with identity 0 (identity-normalized Latin
/// squares), in lexicographic order.
pub fn enumerate_loops(n: usize) -> Result<Vec<LoopTable>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut cells = vec![0u16; n * n];
    let mut row_used = vec![0u32; n];
    let mut col_used = vec![0u32; n];
    for i in 0..n {
        cells[i] = i as u16;
        cells[i * n] = i as u16;
        row_used[i] |= 1 << i;
        col_used[i] |= 1 << i;
    }
    row_used[0] = (1 << n) - 1;
    col_used[0] = (1 << n) - 1;
    let mut out = Vec::new();
    fill(n, n + 1, &mut cells, &mut row_used, &mut col_used, &mut out);
    Ok(out)
}

fn fill(
    n: usize,
    cell: usize,
    cells: &mut [u16],
    rows: &mut [u32],
    cols: &mut [u32],
    out: &mut Vec<LoopTable>,
) {
    if cell >= n * n {
        out.push(
            LoopTable::from_cells(n, cells.to_vec()).expect("complete Latin square with identity"),
        );
        return;
    }
    let (x, y) = (cell / n, cell % n);
    if y == 0 {
        return fill(n, cell + 1, cells, rows, cols, out);
    }
    for v in 0..n {
        let bit = 1u32 << v;
        if rows[x] & bit != 0 || cols[y] & bit != 0 {
            continue;
        }
        cells[cell] = v as u16;
        rows[x] |= bit;
        cols[y] |= bit;
        fill(n, cell + 1, cells, rows, cols, out);
        rows[x] &= !bit;
        cols[y] &= !bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{check_identity, Identity};

    #[test]
    fn small_loop_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_loops(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 56]);
        assert!(enumerate_loops(7).is_err());
    }

    #[test]
    fn bol_search_agrees_with_filter_up_to_order_5() {
        for n in 1..=5 {
            let brute: Vec<LoopTable> = enumerate_loops(n)
                .unwrap()
                .into_iter()
                .filter(|q| check_identity(q, Identity::LeftBol))
                .collect();
            let (found, stats) = bol_search(n, DEFAULT_NODE_BUDGET).unwrap();
            assert_eq!(found, brute, "order {n}");
            assert_eq!(stats.solutions as usize, found.len());
        }
    }

    #[test]
    fn order_6_bol_loops_are_groups() {
        // 5!/|Aut(Z6)| + 5!/|Aut(S3)| labelings with identity fixed
        let (found, _) = bol_search(6, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(found.len(), 60 + 20);
        assert!(found
            .iter()
            .all(|q| check_identity(q, Identity::Associative)));
        assert!(found.contains(&LoopTable::cyclic(6)));
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            bol_search(6, 3).unwrap_err(),
            Error::SearchBudgetExceeded(3)
        );
    }
}

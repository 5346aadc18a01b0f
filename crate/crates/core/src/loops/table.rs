use std::hash::{Hash, Hasher};

use super::{Element, Permutation, MAX_ORDER};
use crate::error::{Error, Result};

/// Which translation: `L_a: x ↦ a·x` or `R_a: x ↦ x·a`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Cayley table of a finite loop whose identity is element 0.
///
/// Cells are stored row-major, `cells[a * n + b] = a·b`. Left and right
/// division tables are computed once at construction, since nearly every
/// structural query needs them.
#[derive(Clone, Debug)]
pub struct LoopTable {
    order: usize,
    cells: Vec<u16>,
    ldiv: Vec<u16>,
    rdiv: Vec<u16>,
    name: Option<String>,
}

impl PartialEq for LoopTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cells == other.cells
    }
}

impl Eq for LoopTable {}

impl Hash for LoopTable {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.cells.hash(state);
    }
}

impl LoopTable {
    /// Validates a zero-based row-major table whose identity is element 0.
    pub fn from_cells(order: usize, cells: Vec<u16>) -> Result<Self> {
        check_shape(order, &cells)?;
        let (ldiv, rdiv) = division_tables(order, &cells)?;
        if find_identity(order, &cells) != Some(0) {
            return Err(Error::NoIdentity);
        }
        Ok(LoopTable {
            order,
            cells,
            ldiv,
            rdiv,
            name: None,
        })
    }

    /// Like [`LoopTable::from_cells`], but accepts a table whose identity is
    /// any element and moves it to index 0.
    ///
    /// The identity `e` becomes 0, the elements before it shift up by one and
    /// the elements after it keep their index. Returns the original index of
    /// the identity when a relabeling was applied.
    pub fn normalized(order: usize, cells: Vec<u16>) -> Result<(Self, Option<usize>)> {
        check_shape(order, &cells)?;
        division_tables(order, &cells)?;
        let e = find_identity(order, &cells).ok_or(Error::NoIdentity)?;
        if e == 0 {
            return Ok((LoopTable::from_cells(order, cells)?, None));
        }
        let relabel = |x: usize| -> usize {
            match x.cmp(&e) {
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Less => x + 1,
                std::cmp::Ordering::Greater => x,
            }
        };
        let mut moved = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                moved[relabel(a) * order + relabel(b)] =
                    relabel(cells[a * order + b] as usize) as u16;
            }
        }
        Ok((LoopTable::from_cells(order, moved)?, Some(e)))
    }

    /// Table from a zero-based product function.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                if v >= order {
                    return Err(Error::Malformed(format!("product {v} out of range")));
                }
                cells.push(v as u16);
            }
        }
        LoopTable::from_cells(order, cells)
    }

    /// Table from one-based rows, normalizing the identity to label 1.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v == 0 || v > n {
                    return Err(Error::Malformed(format!("entry {v} out of range 1..={n}")));
                }
                cells.push((v - 1) as u16);
            }
        }
        LoopTable::normalized(n, cells).map(|(t, _)| t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.set_name(name);
        self
    }

    /// Zero-based row-major cells.
    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.order).map(Element::new)
    }

    pub fn contains(&self, a: Element) -> bool {
        a.index() < self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element::new(self.mul_ix(a.index(), b.index()))
    }

    /// [`LoopTable::mul`] on zero-based indices.
    #[inline]
    pub fn mul_ix(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b] as usize
    }

    /// The unique `x` with `a·x = b`.
    #[inline]
    pub fn left_divide(&self, a: Element, b: Element) -> Element {
        Element::new(self.ldiv_ix(a.index(), b.index()))
    }

    /// The unique `y` with `y·a = b`.
    #[inline]
    pub fn right_divide(&self, a: Element, b: Element) -> Element {
        Element::new(self.rdiv_ix(a.index(), b.index()))
    }

    #[inline]
    pub(crate) fn ldiv_ix(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.order + b] as usize
    }

    #[inline]
    pub(crate) fn rdiv_ix(&self, a: usize, b: usize) -> usize {
        self.rdiv[a * self.order + b] as usize
    }

    pub fn translation(&self, a: Element, side: Side) -> Permutation {
        let n = self.order;
        let images = match side {
            Side::Left => self.cells[a.index() * n..(a.index() + 1) * n].to_vec(),
            Side::Right => (0..n).map(|b| self.cells[b * n + a.index()]).collect(),
        };
        Permutation::from_images_unchecked(images)
    }

    /// The two-sided inverse of `a`.
    pub fn inverse(&self, a: Element) -> Result<Element> {
        let right = self.ldiv_ix(a.index(), 0);
        let left = self.rdiv_ix(a.index(), 0);
        if right == left {
            Ok(Element::new(right))
        } else {
            Err(Error::NoTwoSidedInverse(a))
        }
    }

    /// Left-associated power: `a^0 = 1`, `a^m = a·a^(m-1)`, and for negative
    /// `m` the power of the two-sided inverse.
    pub fn power(&self, a: Element, m: i64) -> Result<Element> {
        let base = if m < 0 {
            self.inverse(a)?.index()
        } else {
            a.index()
        };
        let mut x = 0;
        for _ in 0..m.unsigned_abs() {
            x = self.mul_ix(base, x);
        }
        Ok(Element::new(x))
    }

    /// Least `m > 0` with `a^m = 1`.
    ///
    /// Left-associated powers always cycle back to 1 (they trace the orbit of
    /// 1 under `L_a`), so the check that matters is that those powers close
    /// into a cyclic group: `a^i · a^j = a^((i+j) mod m)` for all `i, j < m`.
    /// An element failing it has no well-defined order.
    pub fn element_order(&self, a: Element) -> Result<usize> {
        let powers = self.power_cycle(a.index());
        let m = powers.len();
        for i in 0..m {
            for j in 0..m {
                if self.mul_ix(powers[i], powers[j]) != powers[(i + j) % m] {
                    return Err(Error::NotPeriodicThroughIdentity(a));
                }
            }
        }
        Ok(m)
    }

    /// `[a^0, a^1, ..., a^(m-1)]` where `a^m` is the first return to 1.
    pub(crate) fn power_cycle(&self, a: usize) -> Vec<usize> {
        let mut powers = vec![0];
        let mut x = self.mul_ix(a, 0);
        while x != 0 {
            powers.push(x);
            x = self.mul_ix(a, x);
        }
        powers
    }
}

fn check_shape(order: usize, cells: &[u16]) -> Result<()> {
    if order == 0 {
        return Err(Error::Malformed("order must be positive".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    if cells.len() != order * order {
        return Err(Error::Malformed(format!(
            "expected {} cells, found {}",
            order * order,
            cells.len()
        )));
    }
    if let Some(&v) = cells.iter().find(|&&v| v as usize >= order) {
        return Err(Error::Malformed(format!(
            "entry {} out of range 1..={order}",
            v as usize + 1
        )));
    }
    Ok(())
}

/// Division tables, failing with `NotLatin` on the first repeated value.
fn division_tables(n: usize, cells: &[u16]) -> Result<(Vec<u16>, Vec<u16>)> {
    const UNSET: u16 = u16::MAX;
    let mut ldiv = vec![UNSET; n * n];
    let mut rdiv = vec![UNSET; n * n];
    for a in 0..n {
        for b in 0..n {
            let v = cells[a * n + b] as usize;
            // row a: a·b = v, so a\v = b
            if ldiv[a * n + v] != UNSET {
                return Err(Error::NotLatin {
                    line: "row",
                    index: a + 1,
                    value: v + 1,
                });
            }
            ldiv[a * n + v] = b as u16;
            // column b: a·b = v, so v/b = a
            if rdiv[b * n + v] != UNSET {
                return Err(Error::NotLatin {
                    line: "column",
                    index: b + 1,
                    value: v + 1,
                });
            }
            rdiv[b * n + v] = a as u16;
        }
    }
    Ok((ldiv, rdiv))
}

fn find_identity(n: usize, cells: &[u16]) -> Option<usize> {
    (0..n)
        .find(|&e| (0..n).all(|x| cells[e * n + x] as usize == x && cells[x * n + e] as usize == x))
}

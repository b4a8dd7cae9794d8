//! Low-index subgroups by coset-table backtracking.
//!
//! Tables are filled in row-major order, so cosets are always numbered by
//! first occurrence. After every choice the relators are scanned at every
//! coset to deduce forced entries or detect a contradiction. A table is kept
//! only if no renumbering from another base coset is lexicographically
//! smaller; this leaves exactly one table per conjugacy class of subgroups.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{cyclic_reduce, Letter, Presentation, Word};

/// Largest index the search accepts.
pub const MAX_INDEX_BOUND: usize = 12;

/// Default bound on search-tree nodes.
pub const DEFAULT_NODE_CAP: usize = 20_000_000;

/// Column of a letter: generator `k` (1-based) uses `2(k-1)` and its inverse `2(k-1)+1`.
#[inline]
pub fn column(l: Letter) -> usize {
    let g = (l.unsigned_abs() - 1) as usize;
    if l > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

#[inline]
fn inverse_column(c: usize) -> usize {
    c ^ 1
}

/// A complete coset table: a transitive action of the free group on
/// `0..index` in which every relator acts trivially. Coset 0 is the subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CosetTable {
    pub index: usize,
    /// `table[c][column(l)]` is the coset `c · l`.
    pub table: Vec<Vec<usize>>,
    pub is_normal: bool,
}

impl CosetTable {
    pub fn num_generators(&self) -> usize {
        self.table.first().map_or(0, |r| r.len() / 2)
    }

    pub fn act(&self, coset: usize, l: Letter) -> usize {
        self.table[coset][column(l)]
    }

    pub fn act_word(&self, coset: usize, w: &[Letter]) -> usize {
        w.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Checks the table is a valid action of `p` (permutations, relators trivial).
    pub fn validate(&self, p: &Presentation) -> Result<()> {
        let cols = 2 * p.num_generators();
        if self.table.len() != self.index || self.table.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidCosetTable("shape does not match presentation".into()));
        }
        for c in 0..self.index {
            for col in 0..cols {
                let d = self.table[c][col];
                if d >= self.index || self.table[d][inverse_column(col)] != c {
                    return Err(Error::InvalidCosetTable(format!("entry ({c},{col}) is not invertible")));
                }
            }
            for r in &p.relators {
                if self.act_word(c, r) != c {
                    return Err(Error::InvalidCosetTable(format!("a relator moves coset {c}")));
                }
            }
        }
        Ok(())
    }
}

const UNDEF: u32 = u32::MAX;

#[derive(Clone)]
struct Partial {
    cols: usize,
    defined: usize,
    cells: Vec<u32>,
}

impl Partial {
    fn get(&self, c: usize, col: usize) -> u32 {
        self.cells[c * self.cols + col]
    }

    fn set(&mut self, c: usize, col: usize, d: usize) {
        self.cells[c * self.cols + col] = d as u32;
    }

    /// Sets `c·x = d` and `d·x⁻¹ = c`; false on conflict.
    fn join(&mut self, c: usize, col: usize, d: usize) -> bool {
        let back = self.get(d, inverse_column(col));
        if back != UNDEF && back as usize != c {
            return false;
        }
        let fwd = self.get(c, col);
        if fwd != UNDEF && fwd as usize != d {
            return false;
        }
        self.set(c, col, d);
        self.set(d, inverse_column(col), c);
        true
    }

    fn first_undefined(&self) -> Option<(usize, usize)> {
        (0..self.defined * self.cols)
            .find(|&i| self.cells[i] == UNDEF)
            .map(|i| (i / self.cols, i % self.cols))
    }

    /// Scans `r` from `c`, deducing a single missing entry if possible.
    /// Returns `Err(())` on contradiction and `Ok(true)` if an entry was added.
    fn scan(&mut self, c: usize, r: &[usize]) -> std::result::Result<bool, ()> {
        let mut f = c;
        let mut i = 0;
        while i < r.len() {
            let next = self.get(f, r[i]);
            if next == UNDEF {
                break;
            }
            f = next as usize;
            i += 1;
        }
        if i == r.len() {
            return if f == c { Ok(false) } else { Err(()) };
        }
        let mut b = c;
        let mut j = r.len();
        while j > i {
            let prev = self.get(b, inverse_column(r[j - 1]));
            if prev == UNDEF {
                break;
            }
            b = prev as usize;
            j -= 1;
        }
        if j == i {
            // forward and backward scans met
            return if f == b { Ok(false) } else { Err(()) };
        }
        if j == i + 1 {
            return if self.join(f, r[i], b) { Ok(true) } else { Err(()) };
        }
        Ok(false)
    }

    /// Scans every relator at every coset until nothing changes.
    fn propagate(&mut self, relators: &[Vec<usize>]) -> bool {
        loop {
            let mut changed = false;
            for c in 0..self.defined {
                for r in relators {
                    match self.scan(c, r) {
                        Err(()) => return false,
                        Ok(added) => changed |= added,
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Compares the table renumbered from base coset `s` against the table
    /// itself. `None` means an undefined entry was reached first.
    fn compare_from(&self, s: usize) -> Option<Ordering> {
        let n = self.defined;
        let mut map = vec![UNDEF; n];
        let mut back = Vec::with_capacity(n);
        map[s] = 0;
        back.push(s);
        for row in 0..n {
            let old = *back.get(row)?;
            for col in 0..self.cols {
                let t = self.get(old, col);
                if t == UNDEF {
                    return None;
                }
                if map[t as usize] == UNDEF {
                    map[t as usize] = back.len() as u32;
                    back.push(t as usize);
                }
                let renumbered = map[t as usize];
                let orig = self.get(row, col);
                if orig == UNDEF {
                    return None;
                }
                match renumbered.cmp(&orig) {
                    Ordering::Equal => continue,
                    other => return Some(other),
                }
            }
        }
        Some(Ordering::Equal)
    }

    /// False if some other base coset gives a definitely smaller table.
    fn may_be_canonical(&self) -> bool {
        (1..self.defined).all(|s| self.compare_from(s) != Some(Ordering::Less))
    }

    fn is_normal(&self) -> bool {
        (0..self.cols).step_by(2).all(|col| {
            let s = self.get(0, col) as usize;
            self.compare_from(s) == Some(Ordering::Equal)
        })
    }

    fn to_table(&self) -> CosetTable {
        let table = (0..self.defined)
            .map(|c| (0..self.cols).map(|col| self.get(c, col) as usize).collect())
            .collect();
        CosetTable { index: self.defined, table, is_normal: self.is_normal() }
    }
}

struct Search<'a> {
    relators: &'a [Vec<usize>],
    max_index: usize,
    node_cap: usize,
    nodes: usize,
    found: Vec<CosetTable>,
}

impl Search<'_> {
    fn visit(&mut self, state: Partial) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::CapExceeded { what: "low-index search", limit: self.node_cap });
        }
        let Some((c, col)) = state.first_undefined() else {
            if state.may_be_canonical() {
                self.found.push(state.to_table());
            }
            return Ok(());
        };
        let inv = inverse_column(col);
        for d in 0..state.defined {
            if state.get(d, inv) != UNDEF {
                continue;
            }
            let mut next = state.clone();
            if next.join(c, col, d) && next.propagate(self.relators) && next.may_be_canonical() {
                self.visit(next)?;
            }
        }
        if state.defined < self.max_index {
            let mut next = state.clone();
            let d = next.defined;
            next.defined += 1;
            if next.join(c, col, d) && next.propagate(self.relators) && next.may_be_canonical() {
                self.visit(next)?;
            }
        }
        Ok(())
    }
}

/// One coset table per conjugacy class of subgroups of index at most
/// `max_index`, sorted by index.
pub fn low_index_subgroups(p: &Presentation, max_index: usize) -> Result<Vec<CosetTable>> {
    low_index_subgroups_with_cap(p, max_index, DEFAULT_NODE_CAP)
}

pub fn low_index_subgroups_with_cap(p: &Presentation, max_index: usize, node_cap: usize) -> Result<Vec<CosetTable>> {
    if max_index == 0 || max_index > MAX_INDEX_BOUND {
        return Err(Error::CapExceeded { what: "maximum index", limit: MAX_INDEX_BOUND });
    }
    let relators: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(|r| cyclic_reduce(r))
        .filter(|r: &Word| !r.is_empty())
        .map(|r| r.iter().map(|&l| column(l)).collect())
        .collect();
    let cols = 2 * p.num_generators();
    let root = Partial { cols, defined: 1, cells: vec![UNDEF; cols * max_index] };
    let mut search = Search { relators: &relators, max_index, node_cap, nodes: 0, found: Vec::new() };
    let mut root = root;
    if !root.propagate(&relators) {
        return Ok(Vec::new());
    }
    search.visit(root)?;
    let mut found = search.found;
    found.sort_by(|a, b| a.index.cmp(&b.index).then_with(|| a.table.cmp(&b.table)));
    Ok(found)
}

//! Shared test support: an independent Littlewood-Richardson oracle and a
//! tiny deterministic generator for randomized checks.
//!
//! The oracle counts Littlewood-Richardson skew tableaux directly (cell by
//! cell, semistandard plus the lattice-word condition) and never touches
//! the Pieri/Giambelli machinery it is used to check.

// Compiled once per test target; not every target uses every helper.
#![allow(dead_code)]

use schubert::{Frame, Partition};
use std::collections::BTreeMap;

/// Number of LR tableaux of shape `outer`/`inner` with content `content`:
/// the coefficient of sigma_outer in sigma_inner * sigma_content.
pub fn lr_tableaux(outer: &Partition, inner: &Partition, content: &Partition) -> i128 {
    if inner.rows() > outer.rows() {
        return 0;
    }
    for r in 1..=inner.rows() {
        if inner.row(r) > outer.row(r) {
            return 0;
        }
    }
    if outer.area() != inner.area() + content.area() {
        return 0;
    }
    let letters = content.rows() as usize;
    // Cells in reverse reading order: rows top to bottom, right to left
    // within each row, so the lattice condition can be checked prefix by
    // prefix as cells are filled.
    let mut cells: Vec<(u32, u32)> = Vec::new();
    for r in 1..=outer.rows() {
        for c in (inner.row(r) + 1..=outer.row(r)).rev() {
            cells.push((r, c));
        }
    }
    if cells.is_empty() {
        return if content.is_empty() { 1 } else { 0 };
    }
    if letters == 0 {
        return 0;
    }

    let mut search = TableauSearch {
        outer,
        inner,
        grid: vec![vec![0u32; outer.row(1) as usize + 1]; outer.rows() as usize + 1],
        counts: vec![0u64; letters + 1],
        quota: std::iter::once(0)
            .chain((1..=letters as u32).map(|v| content.row(v) as u64))
            .collect(),
        letters,
    };
    search.fill(&cells, 0)
}

struct TableauSearch<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    grid: Vec<Vec<u32>>,
    counts: Vec<u64>,
    quota: Vec<u64>,
    letters: usize,
}

impl TableauSearch<'_> {
    fn fill(&mut self, cells: &[(u32, u32)], idx: usize) -> i128 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0i128;
        for v in 1..=self.letters as u32 {
            if self.counts[v as usize] >= self.quota[v as usize] {
                continue;
            }
            // lattice: letter v may not overtake letter v-1
            if v >= 2 && self.counts[v as usize] >= self.counts[v as usize - 1] {
                continue;
            }
            // weakly increasing along the row (right neighbor is filled)
            if c < self.outer.row(r) && v > self.grid[r as usize][c as usize + 1] {
                continue;
            }
            // strictly increasing down the column when the box above is
            // part of the skew shape
            if r >= 2 && c > self.inner.row(r - 1) && v <= self.grid[r as usize - 1][c as usize] {
                continue;
            }
            self.grid[r as usize][c as usize] = v;
            self.counts[v as usize] += 1;
            total += self.fill(cells, idx + 1);
            self.counts[v as usize] -= 1;
            self.grid[r as usize][c as usize] = 0;
        }
        total
    }
}

/// Full product of two basis classes by the tableau rule, as a coefficient
/// map over the frame basis.
pub fn lr_product(a: &Partition, b: &Partition, frame: Frame) -> BTreeMap<Partition, i128> {
    let mut out = BTreeMap::new();
    for c in frame.partitions_of_area(a.area() + b.area()) {
        let n = lr_tableaux(&c, a, b);
        if n != 0 {
            out.insert(c, n);
        }
    }
    out
}

/// xorshift64*; fixed seeds keep the randomized suites reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

//! The mod-2 Chow ring of Gr(k, n), the twisted Steenrod squares and the
//! linear algebra needed to decide membership in their images.
//!
//! Sq2 is implemented twice on purpose: the checkerboard rule
//! ([`Ch2Class::sq2`]) is the production path, the Wu-formula expansion
//! ([`Ch2Class::sq2_wu`]) is an independent oracle used by the test suite
//! to cross-validate it diagram by diagram.

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::young::{checkerboard_color, Color, Frame, Partition, Twist};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// An element of Ch(Gr(k, n)): a set of frame diagrams with mod-2
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Ch2Class {
    frame: Frame,
    terms: BTreeSet<Partition>,
}

impl Ch2Class {
    pub fn zero(frame: Frame) -> Self {
        Ch2Class {
            frame,
            terms: BTreeSet::new(),
        }
    }

    pub fn unit(frame: Frame) -> Self {
        let mut c = Self::zero(frame);
        c.toggle(Partition::empty());
        c
    }

    pub fn basis(frame: Frame, p: &Partition) -> Result<Self> {
        if !p.fits(frame) {
            return Err(Error::Frame {
                partition: p.clone(),
                frame,
            });
        }
        let mut c = Self::zero(frame);
        c.toggle(p.clone());
        Ok(c)
    }

    /// Mod-2 reduction of an integral class.
    pub fn reduce(x: &ChowClass) -> Self {
        let mut out = Self::zero(x.frame());
        for (p, c) in x.terms() {
            if c.rem_euclid(2) == 1 {
                out.toggle(p.clone());
            }
        }
        out
    }

    /// Lift to the integral ring with all coefficients 1.
    pub fn lift(&self) -> ChowClass {
        let mut out = ChowClass::zero(self.frame);
        for p in &self.terms {
            out.add_term(p.clone(), 1);
        }
        out
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn terms(&self) -> impl Iterator<Item = &Partition> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.terms.contains(p)
    }

    pub(crate) fn toggle(&mut self, p: Partition) {
        debug_assert!(p.fits(self.frame));
        if !self.terms.remove(&p) {
            self.terms.insert(p);
        }
    }

    /// Mod-2 sum (symmetric difference).
    pub fn add(&self, other: &Ch2Class) -> Result<Ch2Class> {
        self.check_frame(other)?;
        let mut out = self.clone();
        for p in &other.terms {
            out.toggle(p.clone());
        }
        Ok(out)
    }

    /// Product, computed as the integral product of unit-coefficient lifts
    /// reduced mod 2.
    pub fn mul(&self, other: &Ch2Class) -> Result<Ch2Class> {
        self.check_frame(other)?;
        Ok(Self::reduce(&self.lift().mul(&other.lift())?))
    }

    fn check_frame(&self, other: &Ch2Class) -> Result<()> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                left: self.frame,
                right: other.frame,
            });
        }
        Ok(())
    }

    /// The twisted Steenrod square by the checkerboard rule: fill the
    /// diagram with a checkerboard pattern, black in the upper left corner;
    /// Sq2_O adds one white box, Sq2_det one black box, in every position
    /// that yields a diagram inside the frame. Applied termwise, which is
    /// the degreewise linear extension.
    pub fn sq2(&self, tw: Twist) -> Ch2Class {
        let frame = self.frame;
        let k = frame.rows();
        let w = frame.cols();
        let wanted = match tw {
            Twist::O => Color::White,
            Twist::Det => Color::Black,
        };
        let mut out = Self::zero(frame);
        for p in &self.terms {
            for row in 1..=k {
                let col = p.row(row) + 1;
                if col > w {
                    continue;
                }
                if row > 1 && p.row(row - 1) < col {
                    continue;
                }
                if checkerboard_color(row, col) != wanted {
                    continue;
                }
                let mut parts: Vec<u32> = (1..=k).map(|i| p.row(i)).collect();
                parts[row as usize - 1] = col;
                out.toggle(Partition::from_sorted(parts));
            }
        }
        out
    }

    /// Independent Sq2 oracle via the Wu formula: expand each diagram in
    /// Stiefel-Whitney (column) classes through the dual Giambelli
    /// determinant, apply Sq2_O as a derivation with
    /// Sq2_O(c_j) = c_1 c_j + (j-1) c_{j+1}, and multiply back out. The
    /// det twist is Sq2_det(x) = c_1 x + Sq2_O(x).
    pub fn sq2_wu(&self, tw: Twist) -> Ch2Class {
        let frame = self.frame;
        let mut monomials: HashSet<Vec<u32>> = HashSet::new();
        for p in &self.terms {
            for m in column_monomials(p, frame) {
                toggle_set(&mut monomials, m);
            }
        }
        // Derivation on each monomial of column classes.
        let mut derived: HashSet<Vec<u32>> = HashSet::new();
        for m in &monomials {
            let mut idx = 0;
            while idx < m.len() {
                let j = m[idx];
                let mult = m.iter().filter(|&&v| v == j).count();
                if mult % 2 == 1 {
                    let mut rest: Vec<u32> = m.clone();
                    rest.remove(m.iter().position(|&v| v == j).unwrap());
                    // c_1 c_j term
                    let mut with_c1 = rest.clone();
                    with_c1.push(1);
                    with_c1.push(j);
                    with_c1.sort_unstable();
                    toggle_set(&mut derived, with_c1);
                    // (j-1) c_{j+1} term, nonzero mod 2 iff j is even
                    if j % 2 == 0 && j < frame.rows() {
                        let mut bumped = rest;
                        bumped.push(j + 1);
                        bumped.sort_unstable();
                        toggle_set(&mut derived, bumped);
                    }
                }
                // skip the whole block of equal values
                idx += mult;
            }
        }
        let mut out = Self::zero(frame);
        for m in derived {
            out = out.add(&evaluate_column_monomial(&m, frame)).unwrap();
        }
        if tw == Twist::Det {
            let c1 = Self::reduce(&ChowClass::special_col(frame, 1));
            out = out.add(&c1.mul(self).unwrap()).unwrap();
        }
        out
    }

    /// A class lifts to twisted I-cohomology iff its Steenrod square for
    /// that twist vanishes.
    pub fn liftable(&self, tw: Twist) -> bool {
        self.sq2(tw).is_zero()
    }

    /// Solves Sq2_tw(y) = self for y by Gaussian elimination over GF(2),
    /// degree by degree. Returns a witness preimage, or None if the class
    /// is not in the image.
    pub fn sq2_preimage(&self, tw: Twist) -> Option<Ch2Class> {
        let frame = self.frame;
        let mut witness = Ch2Class::zero(frame);
        let mut degrees: BTreeSet<u64> = self.terms.iter().map(|p| p.area()).collect();
        degrees.remove(&0); // degree 0 has no preimage candidates
        if self.terms.iter().any(|p| p.area() == 0) {
            return None;
        }
        for degree in degrees {
            let sources = frame.partitions_of_area(degree - 1);
            let targets = frame.partitions_of_area(degree);
            let index: std::collections::HashMap<&Partition, usize> =
                targets.iter().zip(0..).collect();
            let to_bits = |class: &Ch2Class| -> Vec<u64> {
                let mut bits = vec![0u64; targets.len().div_ceil(64)];
                for p in class.terms() {
                    if p.area() == degree {
                        let i = index[p];
                        bits[i / 64] ^= 1 << (i % 64);
                    }
                }
                bits
            };
            let mut solver = Gf2Solver::new(sources.len());
            for (i, src) in sources.iter().enumerate() {
                let img = Ch2Class::basis(frame, src).unwrap().sq2(tw);
                solver.insert(to_bits(&img), i);
            }
            let combo = solver.solve(to_bits(self))?;
            for (i, src) in sources.iter().enumerate() {
                if combo[i / 64] >> (i % 64) & 1 == 1 {
                    witness.toggle(src.clone());
                }
            }
        }
        Some(witness)
    }
}

impl fmt::Display for Ch2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.terms.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(" + "))
    }
}

impl fmt::Debug for Ch2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn toggle_set(set: &mut HashSet<Vec<u32>>, m: Vec<u32>) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

/// Expands a diagram into monomials of column classes via the dual
/// Giambelli determinant det(c_{conj_i - i + j}); signs are irrelevant
/// mod 2. Monomials with a factor beyond the frame's row count vanish.
fn column_monomials(p: &Partition, frame: Frame) -> Vec<Vec<u32>> {
    if p.is_empty() {
        return vec![Vec::new()];
    }
    let shape = p.conjugate();
    let m = shape.rows() as usize;
    let mut out = Vec::new();
    let mut used = vec![false; m];
    let mut mono: Vec<u32> = Vec::new();
    fn go(
        shape: &Partition,
        k: u32,
        used: &mut Vec<bool>,
        mono: &mut Vec<u32>,
        row: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        let m = used.len();
        if row == m {
            let mut key = mono.clone();
            key.sort_unstable();
            out.push(key);
            return;
        }
        for col in 0..m {
            if used[col] {
                continue;
            }
            let entry = shape.row(row as u32 + 1) as i64 + col as i64 - row as i64;
            if entry < 0 {
                continue;
            }
            let deg = entry as u32;
            if deg > k {
                continue; // column class beyond the frame rows is zero
            }
            used[col] = true;
            if deg > 0 {
                mono.push(deg);
            }
            go(shape, k, used, mono, row + 1, out);
            if deg > 0 {
                mono.pop();
            }
            used[col] = false;
        }
    }
    go(&shape, frame.rows(), &mut used, &mut mono, 0, &mut out);
    out
}

/// Multiplies out a monomial of column classes in the mod-2 ring.
fn evaluate_column_monomial(m: &[u32], frame: Frame) -> Ch2Class {
    let mut acc = ChowClass::unit(frame);
    for &j in m {
        acc = acc.pieri_col(j);
        if acc.is_zero() {
            break;
        }
    }
    Ch2Class::reduce(&acc)
}

/// Evaluates the twisted-square vanishing criterion straight off the
/// boundary profile, without touching the checkerboard rule.
///
/// For the trivial twist, Sq2_O vanishes iff all consecutive hook corners
/// agree in color and the first row cannot take a white box; for the det
/// twist the colors flip. Conditions referring to segments that do not
/// exist (one-group profiles) are vacuously true.
pub fn sq2_vanishes_by_parity(p: &Partition, frame: Frame, tw: Twist) -> Result<bool> {
    let b = p.boundary(frame)?;
    let seg = b.segments();
    let w = frame.cols();
    // Consecutive hook corners i, i+1 exist for i+2 <= seg.
    for i in 0..seg.saturating_sub(2) {
        if (b.d[i + 1] - b.d[i] + b.e[i + 2] - b.e[i + 1]) % 2 != 0 {
            return Ok(false);
        }
    }
    let e1 = b.e[0];
    let anchor_even = seg < 2 || (b.d[0] + b.e[1] - b.e[0]) % 2 == 0;
    let anchor_odd = seg < 2 || !anchor_even;
    Ok(match tw {
        Twist::O => ((w - e1) % 2 == 0 && anchor_even) || (e1 == 0 && w % 2 == 1 && anchor_odd),
        Twist::Det => ((w - e1) % 2 == 1 && anchor_even) || (e1 == 0 && w % 2 == 0 && anchor_odd),
    })
}

/// Dense GF(2) elimination over u64 blocks, tracking the combination of
/// inserted rows that produced each pivot.
struct Gf2Solver {
    /// (pivot bit, image bits, combination bits)
    rows: Vec<(usize, Vec<u64>, Vec<u64>)>,
    combo_words: usize,
}

impl Gf2Solver {
    fn new(source_dim: usize) -> Self {
        Gf2Solver {
            rows: Vec::new(),
            combo_words: source_dim.div_ceil(64).max(1),
        }
    }

    fn insert(&mut self, mut bits: Vec<u64>, source_index: usize) {
        let mut combo = vec![0u64; self.combo_words];
        combo[source_index / 64] ^= 1 << (source_index % 64);
        for (pivot, row_bits, row_combo) in &self.rows {
            if bits[pivot / 64] >> (pivot % 64) & 1 == 1 {
                xor_assign(&mut bits, row_bits);
                xor_assign(&mut combo, row_combo);
            }
        }
        if let Some(pivot) = first_set(&bits) {
            self.rows.push((pivot, bits, combo));
        }
    }

    fn solve(&self, mut target: Vec<u64>) -> Option<Vec<u64>> {
        let mut combo = vec![0u64; self.combo_words];
        for (pivot, row_bits, row_combo) in &self.rows {
            if target[pivot / 64] >> (pivot % 64) & 1 == 1 {
                xor_assign(&mut target, row_bits);
                xor_assign(&mut combo, row_combo);
            }
        }
        if target.iter().all(|&w| w == 0) {
            Some(combo)
        } else {
            None
        }
    }
}

fn xor_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn first_set(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

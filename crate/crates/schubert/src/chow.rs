//! The integral Chow ring of Gr(k, n) in the Schubert basis.
//!
//! Classes are finitely supported integer combinations of frame diagrams.
//! Multiplication expands one factor through the Giambelli determinant
//! into special (single row or single column) classes and applies the
//! Pieri rules, truncating to the frame after every step. Truncation is
//! exact: any Schur class with a row longer than the frame width already
//! lies in the defining ideal of the quotient ring.

use crate::error::{Error, Result};
use crate::young::{Frame, Partition};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// An element of CH(Gr(k, n)), sparse over the Schubert basis.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass {
    frame: Frame,
    terms: BTreeMap<Partition, i128>,
}

impl ChowClass {
    pub fn zero(frame: Frame) -> Self {
        ChowClass {
            frame,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class (empty diagram).
    pub fn unit(frame: Frame) -> Self {
        let mut c = Self::zero(frame);
        c.add_term(Partition::empty(), 1);
        c
    }

    /// The basis class of a single diagram.
    pub fn basis(frame: Frame, p: &Partition) -> Result<Self> {
        if !p.fits(frame) {
            return Err(Error::Frame {
                partition: p.clone(),
                frame,
            });
        }
        let mut c = Self::zero(frame);
        c.add_term(p.clone(), 1);
        Ok(c)
    }

    /// The special row class sigma_b; zero if b exceeds the frame width.
    pub fn special_row(frame: Frame, b: u32) -> Self {
        if b == 0 {
            return Self::unit(frame);
        }
        Self::basis(frame, &Partition::rect(1, b)).unwrap_or_else(|_| Self::zero(frame))
    }

    /// The special column class sigma_{1^b}; zero if b exceeds the frame rows.
    pub fn special_col(frame: Frame, b: u32) -> Self {
        if b == 0 {
            return Self::unit(frame);
        }
        Self::basis(frame, &Partition::rect(b, 1)).unwrap_or_else(|_| Self::zero(frame))
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i128)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> i128 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, p: Partition, c: i128) {
        if c == 0 {
            return;
        }
        debug_assert!(p.fits(self.frame));
        match self.terms.entry(p) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_frame(other)?;
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i128) -> ChowClass {
        if c == 0 {
            return Self::zero(self.frame);
        }
        let mut out = Self::zero(self.frame);
        for (p, m) in self.terms() {
            out.add_term(p.clone(), m * c);
        }
        out
    }

    fn check_frame(&self, other: &ChowClass) -> Result<()> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                left: self.frame,
                right: other.frame,
            });
        }
        Ok(())
    }

    /// Multiplication by the special row class sigma_b: for every basis
    /// diagram, sum over all ways of adding a horizontal strip of b boxes
    /// within the frame.
    pub fn pieri_row(&self, b: u32) -> ChowClass {
        if b == 0 {
            return self.clone();
        }
        let frame = self.frame;
        if b > frame.cols() {
            return Self::zero(frame);
        }
        let k = frame.rows();
        let mut out = Self::zero(frame);
        let mut rows: Vec<u32> = Vec::with_capacity(k as usize);
        for (a, coeff) in self.terms.iter() {
            rows.clear();
            rows.extend((1..=k).map(|i| a.row(i)));
            horizontal_strips(&rows, frame.cols(), b, &mut |c| {
                out.add_term(Partition::from_sorted(c.to_vec()), *coeff);
            });
        }
        out
    }

    /// Multiplication by the special column class sigma_{1^b}: add a
    /// vertical strip of b boxes, at most one per row.
    pub fn pieri_col(&self, b: u32) -> ChowClass {
        if b == 0 {
            return self.clone();
        }
        let frame = self.frame;
        if b > frame.rows() {
            return Self::zero(frame);
        }
        let k = frame.rows();
        let mut out = Self::zero(frame);
        let mut rows: Vec<u32> = Vec::with_capacity(k as usize);
        for (a, coeff) in self.terms.iter() {
            rows.clear();
            rows.extend((1..=k).map(|i| a.row(i)));
            vertical_strips(&rows, frame.cols(), b, &mut |c| {
                out.add_term(Partition::from_sorted(c.to_vec()), *coeff);
            });
        }
        out
    }

    /// Full product. Expands the factor with the smaller support basis
    /// class by basis class through the Giambelli determinant.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_frame(other)?;
        let (small, big) = if self.support_len() <= other.support_len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(self.frame);
        for (p, c) in small.terms() {
            check_det_size(p)?;
            let prod = giambelli_product(big, p);
            for (q, m) in prod.terms() {
                acc.add_term(q.clone(), m * c);
            }
        }
        Ok(acc)
    }

    /// The coefficient of the full rectangle. Errors unless every term has
    /// top codimension k*w.
    pub fn degree(&self) -> Result<i128> {
        let top = self.frame.dim();
        for (p, _) in self.terms() {
            if p.area() != top {
                return Err(Error::Degree(format!(
                    "term {p} has codimension {}, expected {top}",
                    p.area()
                )));
            }
        }
        Ok(self.coefficient(&self.frame.rect()))
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{c}*({p})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Enumerates all partitions obtained from `rows` (padded shape) by adding
/// a horizontal strip of exactly `b` boxes, staying inside width `w`.
fn horizontal_strips(rows: &[u32], w: u32, b: u32, emit: &mut dyn FnMut(&[u32])) {
    let k = rows.len();
    // cap[i]: most boxes addable to row i (bounded above by row i-1).
    let mut cap = vec![0u32; k];
    let mut suffix = vec![0u32; k + 1];
    for i in 0..k {
        cap[i] = if i == 0 {
            w - rows[0]
        } else {
            rows[i - 1] - rows[i]
        };
    }
    for i in (0..k).rev() {
        suffix[i] = suffix[i + 1].saturating_add(cap[i]);
    }

    fn go(
        rows: &[u32],
        cap: &[u32],
        suffix: &[u32],
        cur: &mut Vec<u32>,
        i: usize,
        rem: u32,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if rem == 0 {
            emit(cur);
            return;
        }
        if i == rows.len() || suffix[i] < rem {
            return;
        }
        let max_here = cap[i].min(rem);
        for add in (0..=max_here).rev() {
            if suffix[i + 1] < rem - add {
                break;
            }
            cur[i] = rows[i] + add;
            go(rows, cap, suffix, cur, i + 1, rem - add, emit);
        }
        cur[i] = rows[i];
    }

    let mut cur = rows.to_vec();
    go(rows, &cap, &suffix, &mut cur, 0, b, emit);
}

/// Enumerates all partitions obtained by adding a vertical strip of
/// exactly `b` boxes: at most one box per row, result weakly decreasing.
fn vertical_strips(rows: &[u32], w: u32, b: u32, emit: &mut dyn FnMut(&[u32])) {
    fn go(
        rows: &[u32],
        w: u32,
        cur: &mut Vec<u32>,
        i: usize,
        rem: u32,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if rem == 0 {
            emit(cur);
            return;
        }
        if i == rows.len() || ((rows.len() - i) as u32) < rem {
            return;
        }
        let prev = if i == 0 { w } else { cur[i - 1] };
        if rows[i] < prev {
            cur[i] = rows[i] + 1;
            go(rows, w, cur, i + 1, rem - 1, emit);
            cur[i] = rows[i];
        }
        go(rows, w, cur, i + 1, rem, emit);
    }

    let mut cur = rows.to_vec();
    go(rows, w, &mut cur, 0, b, emit);
}

/// The determinant expansion walks all permutations, so its dimension --
/// the smaller of a diagram's row and column counts -- must stay modest.
const MAX_DET_SIZE: u32 = 11;

pub(crate) fn check_det_size(p: &Partition) -> Result<()> {
    let m = p.rows().min(p.row(1));
    if m > MAX_DET_SIZE {
        return Err(Error::Resource(format!(
            "expanding {p} needs a {m}x{m} Giambelli determinant; the permutation \
             sum is capped at {MAX_DET_SIZE}x{MAX_DET_SIZE}"
        )));
    }
    Ok(())
}

/// Multiplies `x` by the basis class of `p` via the Giambelli determinant.
///
/// The determinant is expanded as a signed sum over permutations; terms
/// with equal degree multisets are merged first (the Pieri operators
/// commute), then each surviving multiset is applied as a chain of Pieri
/// multiplications. The conjugate diagram is used when it has fewer rows,
/// switching to column classes.
pub(crate) fn giambelli_product(x: &ChowClass, p: &Partition) -> ChowClass {
    if p.is_empty() {
        return x.clone();
    }
    let frame = x.frame();
    let use_rows = p.rows() <= p.row(1);
    let shape: Vec<u32> = if use_rows {
        p.parts().to_vec()
    } else {
        p.conjugate().parts().to_vec()
    };
    // Largest degree whose special class survives in the frame.
    let limit = if use_rows { frame.cols() } else { frame.rows() };

    let mut acc = ChowClass::zero(frame);
    for (degrees, coeff) in det_term_multisets(&shape, limit) {
        let mut tmp = x.clone();
        for &b in &degrees {
            tmp = if use_rows {
                tmp.pieri_row(b)
            } else {
                tmp.pieri_col(b)
            };
            if tmp.is_zero() {
                break;
            }
        }
        for (q, m) in tmp.terms() {
            acc.add_term(q.clone(), m * coeff);
        }
    }
    acc
}

/// Expands det(sigma_{shape_i + j - i}) over permutations and groups the
/// terms by their multiset of degrees with accumulated signs. Terms with a
/// negative index or a degree beyond `limit` vanish.
fn det_term_multisets(shape: &[u32], limit: u32) -> Vec<(Vec<u32>, i128)> {
    fn go(
        shape: &[u32],
        limit: u32,
        used: &mut Vec<bool>,
        degrees: &mut Vec<u32>,
        row: usize,
        sign: i128,
        grouped: &mut HashMap<Vec<u32>, i128>,
    ) {
        if row == shape.len() {
            let mut key = degrees.clone();
            key.sort_unstable();
            *grouped.entry(key).or_insert(0) += sign;
            return;
        }
        for col in 0..shape.len() {
            if used[col] {
                continue;
            }
            let entry = shape[row] as i64 + col as i64 - row as i64;
            if entry < 0 {
                continue;
            }
            let deg = entry as u32;
            if deg > limit {
                continue;
            }
            // Placing this column after the ones already used adds one
            // inversion per used column with a larger index.
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[col] = true;
            if deg > 0 {
                degrees.push(deg);
            }
            go(shape, limit, used, degrees, row + 1, s, grouped);
            if deg > 0 {
                degrees.pop();
            }
            used[col] = false;
        }
    }

    let m = shape.len();
    let mut grouped: HashMap<Vec<u32>, i128> = HashMap::new();
    let mut used = vec![false; m];
    let mut degrees: Vec<u32> = Vec::with_capacity(m);
    go(shape, limit, &mut used, &mut degrees, 0, 1, &mut grouped);
    grouped
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(mut key, c)| {
            // Largest degree first keeps intermediate supports smaller.
            key.sort_unstable_by(|a, b| b.cmp(a));
            (key, c)
        })
        .collect()
}

/// Evaluates the Giambelli determinant for `p` from scratch; the result is
/// the single basis class of `p`.
pub fn giambelli(p: &Partition, frame: Frame) -> Result<ChowClass> {
    if !p.fits(frame) {
        return Err(Error::Frame {
            partition: p.clone(),
            frame,
        });
    }
    check_det_size(p)?;
    Ok(giambelli_product(&ChowClass::unit(frame), p))
}

/// The Littlewood-Richardson coefficient of sigma_c in sigma_a * sigma_b,
/// zero when the codimensions do not match.
pub fn lr_coeff(a: &Partition, b: &Partition, c: &Partition, frame: Frame) -> Result<i128> {
    for q in [a, b, c] {
        if !q.fits(frame) {
            return Err(Error::Frame {
                partition: q.clone(),
                frame,
            });
        }
    }
    if a.area() + b.area() != c.area() {
        return Ok(0);
    }
    let prod = ChowClass::basis(frame, a)?.mul(&ChowClass::basis(frame, b)?)?;
    Ok(prod.coefficient(c))
}

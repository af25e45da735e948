//! W-cohomology of Gr(k, n) on the even-Young-diagram basis.
//!
//! A basis element is a pair (core, extra): a partition in the halved
//! frame together with one of the four extra classes. Multiplication
//! reduces to classical Schubert calculus for the cores in the Chow ring
//! of the halved Grassmannian, with the extra classes combining by the
//! Euler-class relations, and terms whose recombined diagram leaves the
//! frame discarded.

use crate::chow::{self, ChowClass};
use crate::error::{Error, Result};
use crate::young::{EvenDecomposition, Extra, Frame, Partition, Twist};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// An element of H(Gr(k,n), W + W(det)). Integer coefficients mean
/// multiples of the form <1> in the Witt ring of the base field; no
/// computation in this calculus ever produces anything else.
#[derive(Clone, PartialEq, Eq)]
pub struct WClass {
    frame: Frame,
    terms: BTreeMap<(Partition, Extra), i128>,
}

impl WClass {
    pub fn zero(frame: Frame) -> Self {
        WClass {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(frame: Frame) -> Self {
        let mut c = Self::zero(frame);
        c.add_term(Partition::empty(), Extra::None, 1);
        c
    }

    /// The basis class of an even diagram, via its decomposition.
    pub fn even_basis(p: &Partition, frame: Frame) -> Result<Self> {
        let dec = p.decompose_even(frame)?;
        let mut c = Self::zero(frame);
        c.add_term(dec.core, dec.extra, 1);
        Ok(c)
    }

    /// The Euler class of the tautological subbundle (full column).
    pub fn euler_sub(frame: Frame) -> Result<Self> {
        if frame.rows() % 2 != 0 {
            return Err(Error::Tag(format!("e_k needs even k, frame is {frame}")));
        }
        let mut c = Self::zero(frame);
        c.add_term(Partition::empty(), Extra::Ek, 1);
        Ok(c)
    }

    /// The Euler class of the tautological quotient bundle (full row).
    pub fn euler_quot(frame: Frame) -> Result<Self> {
        if frame.cols() % 2 != 0 {
            return Err(Error::Tag(format!(
                "e_perp needs even width, frame is {frame}"
            )));
        }
        let mut c = Self::zero(frame);
        c.add_term(Partition::empty(), Extra::Eperp, 1);
        Ok(c)
    }

    /// The exterior hook class, present only for odd-dimensional frames.
    pub fn hook(frame: Frame) -> Result<Self> {
        if frame.rows() % 2 == 0 || frame.cols() % 2 == 0 {
            return Err(Error::Tag(format!(
                "R needs k and width odd, frame is {frame}"
            )));
        }
        let mut c = Self::zero(frame);
        c.add_term(Partition::empty(), Extra::R, 1);
        Ok(c)
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn halved_frame(&self) -> Frame {
        self.frame.halved()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Extra), i128)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    /// Terms with their recombined diagrams.
    pub fn diagram_terms(&self) -> impl Iterator<Item = (Partition, Extra, i128)> + '_ {
        self.terms.iter().map(|((core, extra), &c)| {
            let dec = EvenDecomposition {
                core: core.clone(),
                extra: *extra,
            };
            (
                dec.combine(self.frame).expect("stored term fits frame"),
                *extra,
                c,
            )
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, core: &Partition, extra: Extra) -> i128 {
        self.terms.get(&(core.clone(), extra)).copied().unwrap_or(0)
    }

    /// Twist shared by all terms; None for the zero class. Mixed-twist
    /// classes are representable but have no single twist.
    pub fn twist(&self) -> Option<Twist> {
        let mut it = self.terms.keys().map(|(_, e)| e.twist());
        let first = it.next()?;
        it.all(|t| t == first).then_some(first)
    }

    fn add_term(&mut self, core: Partition, extra: Extra, c: i128) {
        if c == 0 {
            return;
        }
        let (max_rows, max_cols) = EvenDecomposition::core_bounds(extra, self.frame);
        debug_assert!(core.rows() <= max_rows && core.row(1) <= max_cols);
        match self.terms.entry((core, extra)) {
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

    pub fn add(&self, other: &WClass) -> Result<WClass> {
        self.check_frame(other)?;
        let mut out = self.clone();
        for ((core, extra), c) in other.terms() {
            out.add_term(core.clone(), *extra, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i128) -> WClass {
        let mut out = Self::zero(self.frame);
        if c != 0 {
            for ((core, extra), m) in self.terms() {
                out.add_term(core.clone(), *extra, m * c);
            }
        }
        out
    }

    fn check_frame(&self, other: &WClass) -> Result<()> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                left: self.frame,
                right: other.frame,
            });
        }
        Ok(())
    }

    /// Full product: extras combine by the Euler-class relations, cores
    /// multiply in the Chow ring of the halved Grassmannian, and result
    /// cores that do not recombine into the frame are dropped.
    pub fn mul(&self, other: &WClass) -> Result<WClass> {
        self.check_frame(other)?;
        let frame = self.frame;
        let hf = frame.halved();
        let mut out = Self::zero(frame);
        for ((a, s), ca) in self.terms() {
            let left = ChowClass::basis(hf, a).expect("core fits halved frame");
            for ((b, t), cb) in other.terms() {
                let (extra, factor) = match extra_product(*s, *t, frame)? {
                    Some(pair) => pair,
                    None => continue,
                };
                chow::check_det_size(b)?;
                let mut prod = chow::giambelli_product(&left, b);
                if let Some(extra_core) = factor {
                    prod = chow::giambelli_product(&prod, &extra_core);
                }
                let (max_rows, max_cols) = EvenDecomposition::core_bounds(extra, frame);
                for (c, m) in prod.terms() {
                    if c.rows() <= max_rows && c.row(1) <= max_cols {
                        out.add_term(c.clone(), extra, m * ca * cb);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The Pieri rule for untagged classes: cores gain a horizontal strip
    /// in the halved frame.
    pub fn pieri(&self, b: u32) -> Result<WClass> {
        if let Some((_, extra)) = self.terms.keys().find(|(_, e)| *e != Extra::None) {
            return Err(Error::Tag(format!(
                "Pieri rule applies to untagged classes, found {}",
                extra.label()
            )));
        }
        let hf = self.frame.halved();
        let mut cores = ChowClass::zero(hf);
        for ((core, _), c) in self.terms() {
            cores.add_term(core.clone(), c);
        }
        let moved = cores.pieri_row(b);
        let mut out = Self::zero(self.frame);
        for (core, c) in moved.terms() {
            out.add_term(core.clone(), Extra::None, c);
        }
        Ok(out)
    }

    /// Coefficient of the top cell. Errors if a term misses top
    /// codimension or carries a twist different from the top cell's.
    pub fn degree(&self) -> Result<i128> {
        if self.is_zero() {
            return Ok(0);
        }
        let frame = self.frame;
        let top = frame.rect().decompose_even(frame)?;
        let top_twist = top.extra.twist();
        for (diagram, extra, _) in self.diagram_terms() {
            if extra.twist() != top_twist {
                return Err(Error::Twist(format!(
                    "term {diagram} has twist {}, top cell has twist {top_twist}",
                    extra.twist()
                )));
            }
            if diagram.area() != frame.dim() {
                return Err(Error::Degree(format!(
                    "term {diagram} has codimension {}, expected {}",
                    diagram.area(),
                    frame.dim()
                )));
            }
        }
        Ok(self.coefficient(&top.core, top.extra))
    }
}

impl fmt::Display for WClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (diagram, _, c) in self.diagram_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}<1>*({diagram})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How two extra classes combine: `None` kills the product, otherwise the
/// resulting tag plus an optional core factor (from the Euler-class
/// squares e_k^2 and e_perp^2). Pairs ruled out by frame parity are a
/// caller bug and raise [`Error::Tag`].
fn extra_product(s: Extra, t: Extra, frame: Frame) -> Result<Option<(Extra, Option<Partition>)>> {
    use Extra::*;
    Ok(match (s, t) {
        (None, e) | (e, None) => Some((e, Option::None)),
        (Ek, Ek) => Some((None, Some(Partition::rect(frame.rows() / 2, 1)))),
        (Eperp, Eperp) => Some((None, Some(Partition::rect(1, frame.cols() / 2)))),
        (Ek, Eperp) | (Eperp, Ek) => Option::None,
        (R, R) => Option::None,
        (Ek, R) | (R, Ek) | (Eperp, R) | (R, Eperp) => {
            return Err(Error::Tag(format!(
                "{} and {} cannot coexist in one frame",
                s.label(),
                t.label()
            )))
        }
    })
}

/// The ring map from the Chow ring of the halved Grassmannian: basis
/// classes become untagged cores, coefficients pass through as m<1>.
pub fn omega(x: &ChowClass, frame: Frame) -> Result<WClass> {
    let hf = frame.halved();
    if x.frame() != hf {
        return Err(Error::FrameMismatch {
            left: x.frame(),
            right: hf,
        });
    }
    let mut out = WClass::zero(frame);
    for (p, c) in x.terms() {
        out.add_term(p.clone(), Extra::None, c);
    }
    Ok(out)
}

/// The image of the single-row class sigma_b of the halved frame; zero
/// when b exceeds the halved width.
pub fn omega_row(b: u32, frame: Frame) -> WClass {
    omega(&ChowClass::special_row(frame.halved(), b), frame).expect("frames match")
}

/// Evaluates the Giambelli determinant over W-classes; the result is the
/// single untagged basis term of `core`.
pub fn giambelli_w(core: &Partition, frame: Frame) -> Result<WClass> {
    let hf = frame.halved();
    if !core.fits(hf) {
        return Err(Error::Frame {
            partition: core.clone(),
            frame: hf,
        });
    }
    let expanded = chow::giambelli(core, hf)?;
    // Evaluate the determinant once more, this time multiplying W-classes,
    // so the oriented Pieri/Giambelli route is exercised rather than
    // delegated to the Chow ring wholesale.
    let mut acc = WClass::zero(frame);
    for (degrees, coeff) in det_rows(core) {
        let mut tmp = WClass::unit(frame);
        for &b in &degrees {
            tmp = tmp.mul(&omega_row(b, frame))?;
            if tmp.is_zero() {
                break;
            }
        }
        acc = acc.add(&tmp.scale(coeff))?;
    }
    debug_assert_eq!(acc, omega(&expanded, frame)?);
    Ok(acc)
}

/// Signed degree multisets of the row Giambelli determinant of `core`.
fn det_rows(core: &Partition) -> Vec<(Vec<u32>, i128)> {
    fn go(
        shape: &[u32],
        used: &mut Vec<bool>,
        degrees: &mut Vec<u32>,
        row: usize,
        sign: i128,
        out: &mut std::collections::HashMap<Vec<u32>, i128>,
    ) {
        if row == shape.len() {
            let mut key = degrees.clone();
            key.sort_unstable();
            *out.entry(key).or_insert(0) += sign;
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
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[col] = true;
            if entry > 0 {
                degrees.push(entry as u32);
            }
            go(shape, used, degrees, row + 1, s, out);
            if entry > 0 {
                degrees.pop();
            }
            used[col] = false;
        }
    }
    let shape = core.parts().to_vec();
    let mut grouped = std::collections::HashMap::new();
    let mut used = vec![false; shape.len()];
    go(&shape, &mut used, &mut Vec::new(), 0, 1, &mut grouped);
    grouped.into_iter().filter(|&(_, c)| c != 0).collect()
}

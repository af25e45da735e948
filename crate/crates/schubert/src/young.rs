//! Young diagrams in a rectangular frame: partitions, boundary profiles,
//! evenness, the doubling map and the classification of even diagrams.
//!
//! Everything else in the crate is built on the combinatorics in this
//! module. A partition is a weakly decreasing sequence of nonnegative
//! integers with trailing zeros stripped; a frame is the k x w rectangle
//! of the Grassmannian Gr(k, k+w) whose diagrams index Schubert classes.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A partition, kept weakly decreasing with no trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly
    /// decreasing. Trailing zeros are stripped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut v: Vec<u32> = parts.into();
        if v.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("{v:?} is not weakly decreasing")));
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    /// Internal constructor for sequences known to be sorted.
    pub(crate) fn from_sorted(mut v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] >= w[1]));
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `rows x cols` rectangle.
    pub fn rect(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part at 1-based `row`, zero beyond the last nonzero row.
    pub fn row(&self, row: u32) -> u32 {
        self.0.get(row as usize - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn area(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        let mut v = Vec::with_capacity(cols as usize);
        for c in 1..=cols {
            v.push(self.0.iter().take_while(|&&p| p >= c).count() as u32);
        }
        Partition(v)
    }

    /// The doubling map: every box becomes a 2x2 square, so
    /// (a1, ..., ar) becomes (2a1, 2a1, ..., 2ar, 2ar).
    pub fn doubled(&self) -> Partition {
        let mut v = Vec::with_capacity(2 * self.0.len());
        for &a in &self.0 {
            v.push(2 * a);
            v.push(2 * a);
        }
        Partition::from_sorted(v)
    }

    /// True iff this is the double of some partition: all parts even and
    /// the nonzero rows paired off from the top.
    pub fn is_doubled(&self) -> bool {
        if self.0.len() % 2 != 0 {
            return false;
        }
        self.0
            .chunks(2)
            .all(|pair| pair[0] == pair[1] && pair[0] % 2 == 0)
    }

    /// Inverse of [`Partition::doubled`]; fails on non-doubled input.
    pub fn halved(&self) -> Result<Partition> {
        if !self.is_doubled() {
            return Err(Error::NotDoubled(self.clone()));
        }
        Ok(Partition(
            self.0.chunks(2).map(|pair| pair[0] / 2).collect(),
        ))
    }

    /// True iff the diagram has at most `f.rows()` rows and width at most
    /// `f.cols()`.
    pub fn fits(&self, f: Frame) -> bool {
        self.rows() <= f.rows() && self.0.first().copied().unwrap_or(0) <= f.cols()
    }

    fn check_fits(&self, f: Frame) -> Result<()> {
        if self.fits(f) {
            Ok(())
        } else {
            Err(Error::Frame {
                partition: self.clone(),
                frame: f,
            })
        }
    }

    /// Groups the rows of the frame-padded diagram by equal length. The
    /// `d` sequence records the 1-based index of the last row of each
    /// group (so it ends at `f.rows()`), and `e[i] = f.cols() - length of
    /// group i`.
    pub fn boundary(&self, f: Frame) -> Result<BoundaryProfile> {
        self.check_fits(f)?;
        let k = f.rows();
        let mut d = Vec::new();
        let mut e = Vec::new();
        let mut row = 1u32;
        while row <= k {
            let len = self.row(row);
            let mut last = row;
            while last < k && self.row(last + 1) == len {
                last += 1;
            }
            d.push(last);
            e.push(f.cols() - len);
            row = last + 1;
        }
        if d.is_empty() {
            // Degenerate zero-row frame: a single empty group keeps the
            // downstream index conventions alive.
            d.push(0);
            e.push(f.cols());
        }
        Ok(BoundaryProfile { d, e })
    }

    /// Evenness of the diagram: every boundary segment strictly inside the
    /// frame has even length.
    pub fn is_even(&self, f: Frame) -> Result<bool> {
        let b = self.boundary(f)?;
        let p = b.segments();
        let w = f.cols();
        // Interior vertical runs (between the first and last group).
        for i in 1..p.saturating_sub(1) {
            if (b.d[i] - b.d[i - 1]) % 2 != 0 {
                return Ok(false);
            }
        }
        // All horizontal runs are strictly inside the frame.
        for i in 0..p - 1 {
            if (b.e[i + 1] - b.e[i]) % 2 != 0 {
                return Ok(false);
            }
        }
        // First vertical run, strictly inside iff the top row is neither
        // full nor empty.
        if 0 < b.e[0] && b.e[0] < w && b.d[0] % 2 != 0 {
            return Ok(false);
        }
        // Last vertical run, with d_0 = 0 in the one-group case.
        if 0 < b.e[p - 1] && b.e[p - 1] < w {
            let prev = if p >= 2 { b.d[p - 2] } else { 0 };
            if (b.d[p - 1] - prev) % 2 != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Complete evenness: the diagram is a doubled partition, i.e. every
    /// boundary segment has even length including the frame-adjacent
    /// vertical runs bounding nonzero rows.
    pub fn is_completely_even(&self, f: Frame) -> Result<bool> {
        self.check_fits(f)?;
        Ok(self.is_doubled())
    }

    /// Classifies an even diagram as a doubled core plus one of the four
    /// extra classes. Exactly one branch must match; matching zero or
    /// several signals a classification bug and returns
    /// [`Error::Decomposition`].
    pub fn decompose_even(&self, f: Frame) -> Result<EvenDecomposition> {
        if !self.is_even(f)? {
            return Err(Error::NotEven {
                partition: self.clone(),
                frame: f,
            });
        }
        let k = f.rows();
        let w = f.cols();
        let mut matches: Vec<EvenDecomposition> = Vec::new();

        if self.is_doubled() {
            matches.push(EvenDecomposition {
                core: self.halved()?,
                extra: Extra::None,
            });
        }
        // Full first column: strip one box from each of the k rows.
        if k % 2 == 0 && k > 0 && self.rows() == k {
            let stripped = Partition::from_sorted(self.0.iter().map(|&a| a - 1).collect());
            if stripped.is_doubled() {
                matches.push(EvenDecomposition {
                    core: stripped.halved()?,
                    extra: Extra::Ek,
                });
            }
        }
        // Full first row: strip it.
        if w % 2 == 0 && w > 0 && self.row(1) == w {
            let rest = Partition::from_sorted(self.0[1..].to_vec());
            if rest.is_doubled() {
                matches.push(EvenDecomposition {
                    core: rest.halved()?,
                    extra: Extra::Eperp,
                });
            }
        }
        // Maximal hook: full first row, full first column, both odd.
        if k % 2 == 1 && w % 2 == 1 && self.row(1) == w && self.rows() == k {
            let inner = Partition::from_sorted(self.0[1..].iter().map(|&a| a - 1).collect());
            if inner.is_doubled() {
                matches.push(EvenDecomposition {
                    core: inner.halved()?,
                    extra: Extra::R,
                });
            }
        }

        match matches.len() {
            1 => Ok(matches.pop().unwrap()),
            n => Err(Error::Decomposition {
                partition: self.clone(),
                frame: f,
                branches: n,
            }),
        }
    }

    /// The twist bit: 1 for the Euler-class factors, 0 for doubled and
    /// hook diagrams.
    pub fn twist(&self, f: Frame) -> Result<Twist> {
        Ok(self.decompose_even(f)?.extra.twist())
    }

    /// The 180-degree rotated complement inside the frame.
    pub fn complement(&self, f: Frame) -> Result<Partition> {
        self.check_fits(f)?;
        let k = f.rows();
        let w = f.cols();
        let v: Vec<u32> = (1..=k).map(|i| w - self.row(k + 1 - i)).collect();
        Ok(Partition::from_sorted(v))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses "5,3,3,1,1"; "0" and "" denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Partition::new(v),
            Err(_) => Err(Error::Input(format!("cannot parse partition {s:?}"))),
        }
    }
}

/// The k x w rectangle framing the diagrams of Gr(k, k+w).
///
/// Frames constructed by the public API have k, w >= 1; degenerate frames
/// (zero rows or columns) appear internally as halved frames of small
/// Grassmannians and carry only the empty diagram.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frame {
    k: u32,
    w: u32,
}

impl Frame {
    pub fn new(k: u32, w: u32) -> Result<Self> {
        if k == 0 || w == 0 {
            return Err(Error::Input(format!("frame {k}x{w} must have k, w >= 1")));
        }
        Ok(Frame { k, w })
    }

    /// The frame of Gr(k, n).
    pub fn grassmannian(k: u32, n: u32) -> Result<Self> {
        if !(1 <= k && k < n) {
            return Err(Error::Input(format!("Gr({k},{n}) requires 1 <= k < n")));
        }
        Frame::new(k, n - k)
    }

    pub(crate) fn from_dims(k: u32, w: u32) -> Self {
        Frame { k, w }
    }

    pub fn rows(&self) -> u32 {
        self.k
    }

    pub fn cols(&self) -> u32 {
        self.w
    }

    pub fn n(&self) -> u32 {
        self.k + self.w
    }

    /// Dimension of the Grassmannian, k*w.
    pub fn dim(&self) -> u64 {
        self.k as u64 * self.w as u64
    }

    /// The full rectangle, i.e. the top-codimension diagram.
    pub fn rect(&self) -> Partition {
        Partition::rect(self.k, self.w)
    }

    /// The frame of the halved Grassmannian whose Chow ring surjects onto
    /// the W-cohomology of this one. Case split on the parities of k and n:
    /// (k/2, n/2) for both even, (floor(k/2), (n-1)/2) for n odd, and
    /// ((k-1)/2, (n-2)/2) when k and n-k are both odd.
    pub fn halved(&self) -> Frame {
        let (k, n) = (self.k, self.n());
        let (a, b) = if n % 2 == 0 {
            if k % 2 == 0 {
                (k / 2, n / 2)
            } else {
                ((k - 1) / 2, (n - 2) / 2)
            }
        } else {
            (k / 2, (n - 1) / 2)
        };
        Frame::from_dims(a, b - a)
    }

    /// Twist of the top cell; equals n mod 2.
    pub fn top_twist(&self) -> Twist {
        self.rect()
            .twist(*self)
            .expect("full rectangle is always even")
    }

    /// All diagrams fitting the frame, in increasing lexicographic order.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        fn go(out: &mut Vec<Partition>, cur: &mut Vec<u32>, rows_left: u32, max: u32) {
            out.push(Partition::from_sorted(cur.clone()));
            if rows_left == 0 {
                return;
            }
            for part in (1..=max).rev() {
                cur.push(part);
                go(out, cur, rows_left - 1, part);
                cur.pop();
            }
        }
        go(&mut out, &mut cur, self.k, self.w);
        out.sort();
        out.dedup();
        out
    }

    /// All diagrams of the given area fitting the frame.
    pub fn partitions_of_area(&self, area: u64) -> Vec<Partition> {
        self.partitions()
            .into_iter()
            .filter(|p| p.area() == area)
            .collect()
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.k, self.w)
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.k, self.w)
    }
}

impl FromStr for Frame {
    type Err = Error;

    /// Parses "5x5" or "Gr(5,10)".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix("Gr(").and_then(|t| t.strip_suffix(')')) {
            let mut it = body.split(',');
            let (k, n) = (it.next(), it.next());
            if let (Some(k), Some(n), None) = (k, n, it.next()) {
                if let (Ok(k), Ok(n)) = (k.trim().parse(), n.trim().parse()) {
                    return Frame::grassmannian(k, n);
                }
            }
        } else if let Some((k, w)) = s.split_once(['x', 'X']) {
            if let (Ok(k), Ok(w)) = (k.trim().parse(), w.trim().parse()) {
                return Frame::new(k, w);
            }
        }
        Err(Error::Input(format!(
            "cannot parse frame {s:?}, expected KxW or Gr(k,n)"
        )))
    }
}

/// The two rows of segment data read off the staircase boundary of a
/// padded diagram; see [`Partition::boundary`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    /// Strictly increasing, ends at the frame's row count.
    pub d: Vec<u32>,
    /// Weakly increasing complements of the group lengths.
    pub e: Vec<u32>,
}

impl BoundaryProfile {
    pub fn segments(&self) -> usize {
        self.d.len()
    }
}

/// The line-bundle grading on twisted cohomology: trivial or determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Twist {
    O,
    Det,
}

impl Twist {
    pub fn xor(self, other: Twist) -> Twist {
        if self == other {
            Twist::O
        } else {
            Twist::Det
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Twist::O => 0,
            Twist::Det => 1,
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::O => write!(f, "O"),
            Twist::Det => write!(f, "det"),
        }
    }
}

/// The extra factor carried by an even diagram on top of its doubled core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extra {
    /// Purely doubled diagram.
    None,
    /// Euler class of the rank-k subbundle: the full column, k even.
    Ek,
    /// Euler class of the rank-(n-k) quotient: the full row, n-k even.
    Eperp,
    /// The maximal hook, present only when k(n-k) is odd.
    R,
}

impl Extra {
    pub fn twist(self) -> Twist {
        match self {
            Extra::Ek | Extra::Eperp => Twist::Det,
            Extra::None | Extra::R => Twist::O,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Extra::None => "none",
            Extra::Ek => "ek",
            Extra::Eperp => "eperp",
            Extra::R => "r",
        }
    }
}

/// An even diagram written as (doubled core, extra class).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvenDecomposition {
    pub core: Partition,
    pub extra: Extra,
}

impl EvenDecomposition {
    /// Reassembles the even diagram in the given frame. Inverse of
    /// [`Partition::decompose_even`].
    pub fn combine(&self, f: Frame) -> Result<Partition> {
        let k = f.rows();
        let w = f.cols();
        let doubled = self.core.doubled();
        let parts = match self.extra {
            Extra::None => doubled.parts().to_vec(),
            Extra::Ek => {
                if k % 2 != 0 {
                    return Err(Error::Tag(format!("e_k requires even k, frame is {f}")));
                }
                (1..=k).map(|i| doubled.row(i) + 1).collect()
            }
            Extra::Eperp => {
                if w % 2 != 0 {
                    return Err(Error::Tag(format!(
                        "e_perp requires even width, frame is {f}"
                    )));
                }
                let mut v = vec![w];
                v.extend(doubled.parts());
                v
            }
            Extra::R => {
                if k % 2 == 0 || w % 2 == 0 {
                    return Err(Error::Tag(format!(
                        "R requires k and width odd, frame is {f}"
                    )));
                }
                let mut v = vec![w];
                v.extend((1..k).map(|i| doubled.row(i) + 1));
                v
            }
        };
        let p = Partition::new(parts).map_err(|_| Error::Frame {
            partition: self.core.clone(),
            frame: f,
        })?;
        p.check_fits(f)?;
        Ok(p)
    }

    /// Largest core dimensions admissible for this tag in the given frame;
    /// the recombined diagram fits iff the core fits these.
    pub fn core_bounds(extra: Extra, f: Frame) -> (u32, u32) {
        let k = f.rows();
        let w = f.cols();
        match extra {
            Extra::None => (k / 2, w / 2),
            Extra::Ek => (k / 2, w.saturating_sub(1) / 2),
            Extra::Eperp => (k.saturating_sub(1) / 2, w / 2),
            Extra::R => (k.saturating_sub(1) / 2, w.saturating_sub(1) / 2),
        }
    }
}

/// Checkerboard color of the box at 1-based (row, col), with (1,1) black.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

pub fn checkerboard_color(row: u32, col: u32) -> Color {
    debug_assert!(row >= 1 && col >= 1);
    if (row + col) % 2 == 0 {
        Color::Black
    } else {
        Color::White
    }
}

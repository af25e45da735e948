//! I-cohomology of Gr(k, n): a free part on the even-diagram basis plus
//! 2-torsion, with the integral Bockstein and the reduction map to the
//! mod-2 Chow ring.
//!
//! The torsion part is the image of the Bockstein and the reduction is
//! injective on it, so a torsion class is stored as its mod-2 reduction.
//! The basis classes of the free part are the canonical geometric lifts
//! of even diagrams, whose reduction is the diagram itself; the reduction
//! of a whole class is therefore the sum of its odd-coefficient diagrams
//! plus the stored torsion.

use crate::chow_mod2::Ch2Class;
use crate::error::{Error, Result};
use crate::witt::WClass;
use crate::young::{Frame, Twist};
use std::fmt;

/// An element of H(Gr(k,n), I(L)) for a fixed twist L.
#[derive(Clone, PartialEq, Eq)]
pub struct IClass {
    frame: Frame,
    twist: Twist,
    free: WClass,
    torsion: Ch2Class,
}

impl IClass {
    pub fn zero(frame: Frame, twist: Twist) -> Self {
        IClass {
            frame,
            twist,
            free: WClass::zero(frame),
            torsion: Ch2Class::zero(frame),
        }
    }

    pub fn unit(frame: Frame) -> Self {
        IClass {
            frame,
            twist: Twist::O,
            free: WClass::unit(frame),
            torsion: Ch2Class::zero(frame),
        }
    }

    /// Assembles a class, rejecting mixed twists: every free term must
    /// carry the twist of the cohomology group the class lives in.
    pub fn new(frame: Frame, twist: Twist, free: WClass, torsion: Ch2Class) -> Result<Self> {
        if free.frame() != frame {
            return Err(Error::FrameMismatch {
                left: free.frame(),
                right: frame,
            });
        }
        if torsion.frame() != frame {
            return Err(Error::FrameMismatch {
                left: torsion.frame(),
                right: frame,
            });
        }
        if let Some(t) = free.twist() {
            if t != twist {
                return Err(Error::Twist(format!(
                    "free part has twist {t}, class is declared with twist {twist}"
                )));
            }
        } else if !free.is_zero() {
            return Err(Error::Twist("free part mixes twists".into()));
        }
        Ok(IClass {
            frame,
            twist,
            free,
            torsion,
        })
    }

    /// The integral Bockstein of a mod-2 class: pure torsion, represented
    /// by its reduction Sq2_tw(x).
    pub fn bockstein(x: &Ch2Class, tw: Twist) -> Self {
        IClass {
            frame: x.frame(),
            twist: tw,
            free: WClass::zero(x.frame()),
            torsion: x.sq2(tw),
        }
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn free(&self) -> &WClass {
        &self.free
    }

    pub fn torsion(&self) -> &Ch2Class {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.is_zero() && self.torsion.is_zero()
    }

    pub fn is_torsion(&self) -> bool {
        self.free.is_zero()
    }

    /// The reduction to the mod-2 Chow ring: odd-coefficient diagrams of
    /// the free part plus the stored torsion.
    pub fn reduction(&self) -> Ch2Class {
        let mut out = self.torsion.clone();
        for (diagram, _, c) in self.free.diagram_terms() {
            if c.rem_euclid(2) == 1 {
                out.toggle(diagram);
            }
        }
        out
    }

    pub fn add(&self, other: &IClass) -> Result<IClass> {
        if self.twist != other.twist {
            return Err(Error::Twist(format!(
                "cannot add classes of twist {} and {}",
                self.twist, other.twist
            )));
        }
        IClass::new(
            self.frame,
            self.twist,
            self.free.add(&other.free)?,
            self.torsion.add(&other.torsion)?,
        )
    }

    /// Ring multiplication. Twists add; free parts multiply on the
    /// even-diagram basis; the torsion part is pinned down by requiring
    /// the reduction to be multiplicative:
    /// torsion(xy) = red(x) red(y) + red(free(xy)).
    pub fn mul(&self, other: &IClass) -> Result<IClass> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                left: self.frame,
                right: other.frame,
            });
        }
        let twist = self.twist.xor(other.twist);
        let free = self.free.mul(&other.free)?;
        let red = self.reduction().mul(&other.reduction())?;
        let free_only = IClass {
            frame: self.frame,
            twist,
            free,
            torsion: Ch2Class::zero(self.frame),
        };
        let torsion = red.add(&free_only.reduction())?;
        Ok(IClass {
            torsion,
            ..free_only
        })
    }
}

impl fmt::Display for IClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "free: {}; torsion: {}", self.free, self.torsion)
    }
}

impl fmt::Debug for IClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reduction of the characteristic-class basis instead of the geometric
/// one: the image of a halved-frame Schubert class under the composite
/// that sends the i-th Chern class to the square of the 2i-th
/// Stiefel-Whitney class. Differs from the diagram reduction by an
/// element of the image of Sq2_O, which is what makes the Pontryagin
/// classes lifts of doubled diagrams up to Bockstein classes.
pub fn pontryagin_reduction(core: &crate::young::Partition, frame: Frame) -> Result<Ch2Class> {
    use crate::chow::ChowClass;
    let hf = frame.halved();
    if !core.fits(hf) {
        return Err(Error::Frame {
            partition: core.clone(),
            frame: hf,
        });
    }
    // Substitute mod 2, monomial by monomial of the dual Giambelli
    // expansion of the core in column classes.
    let shape = core.conjugate();
    let m = shape.rows() as usize;
    let mut out = Ch2Class::zero(frame);
    let mut used = vec![false; m];
    let mut mono: Vec<u32> = Vec::new();
    fn go(
        shape: &crate::young::Partition,
        frame: Frame,
        used: &mut Vec<bool>,
        mono: &mut Vec<u32>,
        row: usize,
        out: &mut Ch2Class,
    ) {
        let m = used.len();
        if row == m {
            // evaluate the monomial: product of squares of column classes
            let mut acc = ChowClass::unit(frame);
            for &i in mono.iter() {
                acc = acc.pieri_col(2 * i).pieri_col(2 * i);
                if acc.is_zero() {
                    break;
                }
            }
            for term in Ch2Class::reduce(&acc).terms() {
                out.toggle(term.clone());
            }
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
            if 2 * deg > frame.rows() {
                continue; // the squared column class vanishes
            }
            used[col] = true;
            if deg > 0 {
                mono.push(deg);
            }
            go(shape, frame, used, mono, row + 1, out);
            if deg > 0 {
                mono.pop();
            }
            used[col] = false;
        }
    }
    if core.is_empty() {
        return Ok(Ch2Class::unit(frame));
    }
    go(&shape, frame, &mut used, &mut mono, 0, &mut out);
    Ok(out)
}

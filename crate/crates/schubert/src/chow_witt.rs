//! Chow-Witt classes of Gr(k, n) as compatible pairs of an I-cohomology
//! class and an integral Chow class, canonical lifts of Schubert classes,
//! and the quadratic-form-valued degrees of oriented Schubert problems.

use crate::chow::ChowClass;
use crate::chow_mod2::Ch2Class;
use crate::error::{Error, Result};
use crate::icoh::IClass;
use crate::witt::WClass;
use crate::young::{Frame, Partition, Twist};
use std::fmt;

/// A diagonal quadratic form a<1> + b<-1>, the value of an oriented
/// intersection number. The hyperbolic plane is (1, 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GwForm {
    pos: i128,
    neg: i128,
}

impl GwForm {
    pub fn new(pos: i128, neg: i128) -> Self {
        assert!(pos >= 0 && neg >= 0, "negative multiplicity in a GW form");
        GwForm { pos, neg }
    }

    pub fn pos(&self) -> i128 {
        self.pos
    }

    pub fn neg(&self) -> i128 {
        self.neg
    }

    /// Count over the algebraic closure.
    pub fn rank(&self) -> i128 {
        self.pos + self.neg
    }

    /// Signed count over the reals.
    pub fn signature(&self) -> i128 {
        self.pos - self.neg
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.pos == self.neg
    }
}

impl fmt::Display for GwForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<1> + {}<-1>", self.pos, self.neg)
    }
}

impl fmt::Debug for GwForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree of a top-codimension Chow-Witt class: a GW form when the top
/// cohomology is Witt-valued for the class's twist, the plain Chow degree
/// otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GwDegree {
    Form(GwForm),
    Plain(i128),
}

impl GwDegree {
    pub fn rank(&self) -> i128 {
        match self {
            GwDegree::Form(f) => f.rank(),
            GwDegree::Plain(r) => *r,
        }
    }

    pub fn as_form(&self) -> Option<GwForm> {
        match self {
            GwDegree::Form(f) => Some(*f),
            GwDegree::Plain(_) => None,
        }
    }
}

impl fmt::Display for GwDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GwDegree::Form(form) => write!(f, "{form}"),
            GwDegree::Plain(r) => write!(f, "{r}"),
        }
    }
}

/// An element of the twisted Chow-Witt group: an I-cohomology class and a
/// Chow class with equal reductions mod 2.
#[derive(Clone, PartialEq, Eq)]
pub struct CwClass {
    frame: Frame,
    twist: Twist,
    ipart: IClass,
    chow: ChowClass,
}

impl CwClass {
    pub fn unit(frame: Frame) -> Self {
        CwClass {
            frame,
            twist: Twist::O,
            ipart: IClass::unit(frame),
            chow: ChowClass::unit(frame),
        }
    }

    /// The canonical lift of a Schubert class to the twist-tw Chow-Witt
    /// group. Fails with the Steenrod obstruction when no lift exists.
    ///
    /// Even diagrams whose twist matches lift to their even-basis class
    /// with no torsion correction; every other liftable diagram lifts to a
    /// torsion class determined by its mod-2 reduction.
    pub fn lift(p: &Partition, frame: Frame, tw: Twist) -> Result<Self> {
        let chow = ChowClass::basis(frame, p)?;
        let red = Ch2Class::reduce(&chow);
        let obstruction = red.sq2(tw);
        if !obstruction.is_zero() {
            return Err(Error::NotLiftable {
                partition: p.clone(),
                twist: tw,
                obstruction,
            });
        }
        let ipart = if p.is_even(frame)? && p.twist(frame)? == tw {
            IClass::new(
                frame,
                tw,
                WClass::even_basis(p, frame)?,
                Ch2Class::zero(frame),
            )?
        } else {
            IClass::new(frame, tw, WClass::zero(frame), red)?
        };
        let out = CwClass {
            frame,
            twist: tw,
            ipart,
            chow,
        };
        out.check_compatible()?;
        Ok(out)
    }

    /// Wraps raw parts, verifying the fiber-square compatibility.
    pub fn new(frame: Frame, twist: Twist, ipart: IClass, chow: ChowClass) -> Result<Self> {
        if ipart.frame() != frame || chow.frame() != frame {
            return Err(Error::FrameMismatch {
                left: ipart.frame(),
                right: chow.frame(),
            });
        }
        if ipart.twist() != twist {
            return Err(Error::Twist(format!(
                "I-part has twist {}, class declared with twist {twist}",
                ipart.twist()
            )));
        }
        let out = CwClass {
            frame,
            twist,
            ipart,
            chow,
        };
        out.check_compatible()?;
        Ok(out)
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn ipart(&self) -> &IClass {
        &self.ipart
    }

    pub fn chow(&self) -> &ChowClass {
        &self.chow
    }

    /// The two reductions to the mod-2 Chow ring must agree, and the Chow
    /// part must have vanishing Steenrod square for the class's twist.
    pub fn check_compatible(&self) -> Result<()> {
        let red = Ch2Class::reduce(&self.chow);
        if self.ipart.reduction() != red {
            return Err(Error::Internal(format!(
                "fiber-square compatibility broken: I-part reduces to {}, Chow part to {red}",
                self.ipart.reduction()
            )));
        }
        if !red.sq2(self.twist).is_zero() {
            return Err(Error::Internal(format!(
                "Chow part is not in the kernel of Sq2_{}: {}",
                self.twist,
                red.sq2(self.twist)
            )));
        }
        Ok(())
    }

    /// Componentwise product, with the compatibility re-verified.
    pub fn mul(&self, other: &CwClass) -> Result<CwClass> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                left: self.frame,
                right: other.frame,
            });
        }
        let out = CwClass {
            frame: self.frame,
            twist: self.twist.xor(other.twist),
            ipart: self.ipart.mul(&other.ipart)?,
            chow: self.chow.mul(&other.chow)?,
        };
        out.check_compatible()?;
        Ok(out)
    }

    /// Degree of a top-codimension class.
    ///
    /// When the class's twist equals the top cell's, the top Chow-Witt
    /// group is GW-valued: with r the Chow degree and m the Witt degree of
    /// the free part (zero for torsion classes), the answer is
    /// ((r+m)/2)<1> + ((r-m)/2)<-1>. Otherwise the top group is plain
    /// integers and the Chow degree is the whole answer.
    pub fn degree(&self) -> Result<GwDegree> {
        let rank = self.chow.degree()?;
        if self.twist != self.frame.top_twist() {
            return Ok(GwDegree::Plain(rank));
        }
        let witt = if self.ipart.is_torsion() {
            0
        } else {
            self.ipart.free().degree()?
        };
        if (rank - witt).rem_euclid(2) != 0 {
            return Err(Error::Parity { rank, witt });
        }
        Ok(GwDegree::Form(GwForm::new(
            (rank + witt) / 2,
            (rank - witt) / 2,
        )))
    }
}

impl fmt::Display for CwClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chow: {}; {}", self.chow, self.ipart)
    }
}

impl fmt::Debug for CwClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Runs an oriented Schubert problem: lifts every factor canonically,
/// multiplies, and takes the degree. Factor codimensions must sum to the
/// dimension of the Grassmannian.
pub fn schubert_problem(factors: &[(Partition, Twist)], frame: Frame) -> Result<GwDegree> {
    let total: u64 = factors.iter().map(|(p, _)| p.area()).sum();
    if total != frame.dim() {
        return Err(Error::Area {
            total,
            expected: frame.dim(),
        });
    }
    let mut acc = CwClass::unit(frame);
    for (p, tw) in factors {
        let lifted = CwClass::lift(p, frame, *tw)?;
        acc = acc.mul(&lifted)?;
    }
    acc.degree()
}

//! Exact oriented Schubert calculus for Grassmannians.
//!
//! This crate computes products and intersection numbers in five rings
//! attached to Gr(k, n) = Gr(k, k+w):
//!
//! * [`chow`] - the integral Chow ring on the Schubert basis (Pieri,
//!   Giambelli, Littlewood-Richardson structure constants, degrees);
//! * [`chow_mod2`] - its mod-2 reduction with the twisted Steenrod
//!   squares computed by the checkerboard rule, plus the Wu-formula
//!   oracle and GF(2) preimage solving;
//! * [`witt`] - W-cohomology on the even-Young-diagram basis, where
//!   multiplication reduces to Schubert calculus for a halved
//!   Grassmannian;
//! * [`icoh`] - I-cohomology as free part plus Bockstein torsion;
//! * [`chow_witt`] - Chow-Witt classes as compatible pairs, canonical
//!   lifts of Schubert classes and quadratic-form-valued degrees of
//!   oriented Schubert problems.
//!
//! The combinatorial layer lives in [`young`]; packaged applications
//! (balanced subspaces, powers of the first Pontryagin class, the
//! refined Pluecker degree) in [`problems`].
//!
//! All arithmetic is exact over i128 with overflow checks enabled in
//! every build profile; no floating point is used anywhere. The answer
//! to an oriented Schubert problem is a diagonal quadratic form
//! a<1> + b<-1>: its rank a+b is the classical count over the algebraic
//! closure, its signature a-b the signed count over the reals.
//!
//! ```
//! use schubert::{schubert_problem, Frame, GwDegree, GwForm, Partition, Twist};
//!
//! // Four 2-planes in general position in a 4-space: how many 2-planes
//! // meet all of them nontrivially? Classically 2; the refined answer
//! // is the hyperbolic form.
//! let frame = Frame::grassmannian(2, 4).unwrap();
//! let line = Partition::new(vec![1]).unwrap();
//! let deg = schubert_problem(&vec![(line, Twist::Det); 4], frame).unwrap();
//! assert_eq!(deg, GwDegree::Form(GwForm::new(1, 1)));
//! ```

// Parity tests are written `x % 2 == 0` throughout; the combinatorics
// reads better that way than through is_multiple_of.
#![allow(clippy::manual_is_multiple_of)]

pub mod chow;
pub mod chow_mod2;
pub mod chow_witt;
pub mod error;
pub mod icoh;
pub mod problems;
pub mod witt;
pub mod young;

pub use chow::{giambelli, lr_coeff, ChowClass};
pub use chow_mod2::{sq2_vanishes_by_parity, Ch2Class};
pub use chow_witt::{schubert_problem, CwClass, GwDegree, GwForm};
pub use error::{Error, Result};
pub use icoh::IClass;
pub use problems::ProblemReport;
pub use witt::{giambelli_w, omega, WClass};
pub use young::{
    checkerboard_color, BoundaryProfile, Color, EvenDecomposition, Extra, Frame, Partition, Twist,
};

//! Packaged enumerative applications with their closed-form cross-checks.

use crate::chow_witt::{schubert_problem, GwDegree, GwForm};
use crate::error::{Error, Result};
use crate::young::{Frame, Partition, Twist};

/// Largest n accepted by [`p1_power`]; Gr(4, 2n+4) grows quickly and
/// everything beyond this bound is untested territory.
pub const P1_POWER_MAX: u32 = 12;

/// Outcome of a packaged problem, ready for rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemReport {
    pub frame: Frame,
    pub inputs: String,
    pub gw: GwDegree,
    pub rank: i128,
    pub signature_proxy: i128,
    pub notes: Vec<String>,
}

impl ProblemReport {
    fn new(frame: Frame, inputs: String, gw: GwDegree) -> Self {
        let (rank, signature_proxy) = match gw {
            GwDegree::Form(f) => (f.rank(), f.signature()),
            GwDegree::Plain(r) => (r, 0),
        };
        ProblemReport {
            frame,
            inputs,
            gw,
            rank,
            signature_proxy,
            notes: Vec::new(),
        }
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// The n-th Catalan number (2n)! / (n! (n+1)!).
pub fn catalan(n: u64) -> i128 {
    binomial(2 * n, n) / (n as i128 + 1)
}

/// The refined count of balanced subspaces: 2a-dimensional subspaces of a
/// 2b-dimensional space meeting four b-dimensional subspaces in dimension
/// a, for a = 2i, b = 2j. Computed as the fourfold self-intersection of
/// the canonical lift of the a x (b-a) rectangle in Gr(2a, 2b) and checked
/// against the closed form (binom(2j,2i) +- binom(j,i))/2.
pub fn balanced(i: u32, j: u32) -> Result<GwForm> {
    if i == 0 || i >= j {
        return Err(Error::Input(format!(
            "balanced({i},{j}) requires 0 < i < j"
        )));
    }
    let frame = Frame::grassmannian(4 * i, 4 * j)?;
    let rect = Partition::rect(2 * i, 2 * (j - i));
    let factors = vec![(rect, Twist::O); 4];
    let form = match schubert_problem(&factors, frame)? {
        GwDegree::Form(f) => f,
        GwDegree::Plain(r) => {
            return Err(Error::Internal(format!(
                "balanced problem produced a plain degree {r}"
            )))
        }
    };
    let big = binomial(2 * j as u64, 2 * i as u64);
    let small = binomial(j as u64, i as u64);
    let expected = GwForm::new((big + small) / 2, (big - small) / 2);
    if form != expected {
        return Err(Error::Internal(format!(
            "balanced({i},{j}) computed {form}, closed form {expected}"
        )));
    }
    Ok(form)
}

/// The 2n-fold self-intersection of the canonical lift of sigma_{2,2} in
/// Gr(4, 2n+4): rank is the Chow degree D_n (computed, never tabulated),
/// the Witt degree is cross-checked against the n-th Catalan number.
pub fn p1_power(n: u32) -> Result<GwForm> {
    if n < 2 {
        return Err(Error::Input(format!("p1_power({n}) requires n >= 2")));
    }
    if n > P1_POWER_MAX {
        return Err(Error::Resource(format!(
            "p1_power({n}) exceeds the configured bound {P1_POWER_MAX}"
        )));
    }
    let frame = Frame::grassmannian(4, 2 * n + 4)?;
    let factors = vec![(Partition::new(vec![2, 2])?, Twist::O); 2 * n as usize];
    let form = match schubert_problem(&factors, frame)? {
        GwDegree::Form(f) => f,
        GwDegree::Plain(r) => {
            return Err(Error::Internal(format!(
                "p1 power produced a plain degree {r}"
            )))
        }
    };
    let cn = catalan(n as u64);
    if form.signature() != cn {
        return Err(Error::Internal(format!(
            "p1_power({n}): Witt degree {} differs from Catalan number {cn}",
            form.signature()
        )));
    }
    Ok(form)
}

/// The refined degree of Gr(2, n+1) in the Pluecker embedding: the
/// (2n-2)-nd power of the det-twisted lift of sigma_1. For odd n the
/// answer is Catalan(n-1)/2 hyperbolic planes; for even n the top group
/// is not GW-valued and the answer is the plain Catalan degree. The
/// report also records whether the top mod-2 class survives (Catalan
/// parity), which detects the nontrivial Bockstein power.
pub fn plucker(n: u32) -> Result<ProblemReport> {
    if n < 2 {
        return Err(Error::Input(format!("plucker({n}) requires n >= 2")));
    }
    let frame = Frame::grassmannian(2, n + 1)?;
    let factors = vec![(Partition::new(vec![1])?, Twist::Det); (2 * n - 2) as usize];
    let gw = schubert_problem(&factors, frame)?;
    let c = catalan(n as u64 - 1);
    match gw {
        GwDegree::Form(f) => {
            if n % 2 == 0 || f.rank() != c || !f.is_hyperbolic() {
                return Err(Error::Internal(format!(
                    "plucker({n}) expected {}/2 hyperbolic planes, got {f}",
                    c
                )));
            }
        }
        GwDegree::Plain(r) => {
            if n % 2 == 1 || r != c {
                return Err(Error::Internal(format!(
                    "plucker({n}) expected plain degree {c}, got {r}"
                )));
            }
        }
    }
    let mut report = ProblemReport::new(
        frame,
        format!("lift(sigma_1, det)^{} in Gr(2,{})", 2 * n - 2, n + 1),
        gw,
    );
    let parity_note = if c % 2 == 1 {
        format!(
            "top mod-2 class c_1^{} is nonzero (Catalan {} odd)",
            2 * n - 2,
            c
        )
    } else {
        format!(
            "top mod-2 class c_1^{} vanishes (Catalan {} even)",
            2 * n - 2,
            c
        )
    };
    report.notes.push(parity_note);
    Ok(report)
}

/// Report wrapper around [`balanced`].
pub fn balanced_report(i: u32, j: u32) -> Result<ProblemReport> {
    let form = balanced(i, j)?;
    Ok(ProblemReport::new(
        Frame::grassmannian(4 * i, 4 * j)?,
        format!(
            "four copies of the {}x{} rectangle in Gr({},{})",
            2 * i,
            2 * (j - i),
            4 * i,
            4 * j
        ),
        GwDegree::Form(form),
    ))
}

/// Report wrapper around [`p1_power`].
pub fn p1_power_report(n: u32) -> Result<ProblemReport> {
    let form = p1_power(n)?;
    Ok(ProblemReport::new(
        Frame::grassmannian(4, 2 * n + 4)?,
        format!("lift(sigma_{{2,2}})^{} in Gr(4,{})", 2 * n, 2 * n + 4),
        GwDegree::Form(form),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_catalans() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(3, 5), 0);
        let cs = [1i128, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in cs.iter().enumerate() {
            assert_eq!(catalan(n as u64), c, "C_{n}");
        }
    }

    #[test]
    fn balanced_smallest() {
        assert_eq!(balanced(1, 2).unwrap(), GwForm::new(4, 2));
        assert!(balanced(2, 2).is_err());
        assert!(balanced(0, 1).is_err());
    }

    #[test]
    fn p1_power_small() {
        assert_eq!(p1_power(2).unwrap(), GwForm::new(4, 2));
        assert_eq!(p1_power(3).unwrap(), GwForm::new(75, 70));
        assert!(p1_power(1).is_err());
        assert!(p1_power(P1_POWER_MAX + 1).is_err());
    }

    #[test]
    fn plucker_small() {
        let r = plucker(3).unwrap();
        assert_eq!(r.gw, GwDegree::Form(GwForm::new(1, 1)));
        assert_eq!(r.rank, 2);

        let r = plucker(4).unwrap();
        assert_eq!(r.gw, GwDegree::Plain(5));

        let r = plucker(5).unwrap();
        assert_eq!(r.gw, GwDegree::Form(GwForm::new(7, 7)));
    }
}

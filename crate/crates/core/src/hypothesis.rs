//! Decide which finiteness clause applies to a Pisot-type recurrence:
//! the non-square condition on f1 and f1*alpha in the splitting field, or
//! the unconditional degree/unit clauses.

use std::fmt;

use num_traits::Zero;

use crate::arith::dyadic::rational_sqrt_exact;
use crate::arith::Rat;
use crate::cancel::CancelToken;
use crate::nf::poly::NFPoly;
use crate::nf::{build_splitting_field, nf_sqrt, NFElem, NfError};
use crate::recurrence::{binet_coefficients, RecError, RecurrenceSpec};

/// Why an element is certifiably not a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    NormNotRationalSquare,
    NegativeInRealEmbedding,
    NoRootInSplittingField,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::NormNotRationalSquare => "norm-not-rational-square",
            Obstruction::NegativeInRealEmbedding => "negative-in-real-embedding",
            Obstruction::NoRootInSplittingField => "no-root-in-splitting-field",
        })
    }
}

/// Outcome of the squareness decision procedure. `Square` carries an
/// exact witness (in Q(alpha) when found there, otherwise in the
/// splitting field); `Undecided` is a first-class outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquarenessVerdict {
    Square { witness: NFElem },
    NotSquare { obstruction: Obstruction },
    Undecided { reason: String },
}

impl SquarenessVerdict {
    pub fn is_not_square(&self) -> bool {
        matches!(self, SquarenessVerdict::NotSquare { .. })
    }

    pub fn is_square(&self) -> bool {
        matches!(self, SquarenessVerdict::Square { .. })
    }
}

const EMBED_START_BITS: u32 = 128;
const EMBED_MAX_BITS: u32 = 4096;

/// Decide whether e (nonzero, in Q(alpha)) is a square in the splitting
/// field K of alpha's minimal polynomial. Steps, in order: square root in
/// Q(alpha); norm obstruction (skipped when [K:Q(alpha)] is even); a
/// certified negative real embedding when K is totally real; exhaustive
/// square root in K. Cap overruns degrade to Undecided.
pub fn squareness_in_splitting_field(
    e: &NFElem,
    cap: usize,
    cancel: &CancelToken,
) -> Result<SquarenessVerdict, NfError> {
    assert!(!e.is_zero(), "squareness of the zero element is trivial");
    // (1) a square in the subfield is a square in K
    if let Some(w) = nf_sqrt(e)? {
        return Ok(SquarenessVerdict::Square { witness: w });
    }

    let field = e.field().clone();
    let k = field.degree();
    let splitting = match build_splitting_field(field.defining_poly(), cap, cancel) {
        Ok(sf) => Some(sf),
        Err(NfError::DegreeCapExceeded { .. }) => None,
        Err(other) => return Err(other),
    };

    // (2) norm obstruction: Norm_{K/Q}(e) = N^m must be a rational square
    if let Some(sf) = &splitting {
        let m = sf.degree() / k;
        if m % 2 == 1 {
            let n = e.norm();
            let mut nm = Rat::from_integer(1.into());
            for _ in 0..m {
                nm *= &n;
            }
            if rational_sqrt_exact(&nm).is_none() {
                return Ok(SquarenessVerdict::NotSquare {
                    obstruction: Obstruction::NormNotRationalSquare,
                });
            }
        }
    }

    // (3) in a totally real K, squares are totally positive
    if field.root_boxes().iter().all(|b| b.is_real()) {
        for i in 0..k {
            let mut bits = EMBED_START_BITS;
            loop {
                if cancel.is_cancelled() {
                    return Err(NfError::Cancelled);
                }
                let bx = e.embedding_box(i, bits)?;
                if bx.re().hi < Rat::zero() {
                    return Ok(SquarenessVerdict::NotSquare {
                        obstruction: Obstruction::NegativeInRealEmbedding,
                    });
                }
                if bx.re().lo > Rat::zero() || bits >= EMBED_MAX_BITS {
                    break;
                }
                bits *= 2;
            }
        }
    }

    // (4) exhaustive: take a square root in K itself
    let Some(sf) = splitting else {
        return Ok(SquarenessVerdict::Undecided {
            reason: format!("splitting field degree exceeds cap {cap}"),
        });
    };
    if cancel.is_cancelled() {
        return Err(NfError::Cancelled);
    }
    let alpha_img = &sf.root_images()[0];
    let e_k = NFPoly::from_rat_poly(sf.field().clone(), &e.coord_poly()).eval(alpha_img)?;
    match nf_sqrt(&e_k)? {
        Some(w) => Ok(SquarenessVerdict::Square { witness: w }),
        None => Ok(SquarenessVerdict::NotSquare {
            obstruction: Obstruction::NoRootInSplittingField,
        }),
    }
}

/// Finiteness verdict, strongest applicable clause first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    FiniteByNonsquare,
    FiniteByK5Nonunit,
    FiniteByK6,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::FiniteByNonsquare => "finite-by-nonsquare",
            Verdict::FiniteByK5Nonunit => "finite-by-k5-nonunit",
            Verdict::FiniteByK6 => "finite-by-k6",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApplicabilityReport {
    pub k: usize,
    pub nonsquare_f1: SquarenessVerdict,
    pub nonsquare_f1alpha: SquarenessVerdict,
    pub alpha_is_unit: bool,
    pub verdict: Verdict,
    pub clause_citations: Vec<String>,
}

/// Check a recurrence against the theorem clauses. Clause precedence is
/// k>=6, then k>=5 with alpha not a unit, then the non-square condition;
/// the expensive squareness computation is skipped when an unconditional
/// clause already applies, unless `force_squareness` is set.
pub fn theorem_applicability(
    spec: &RecurrenceSpec,
    cap: usize,
    force_squareness: bool,
    cancel: &CancelToken,
) -> Result<ApplicabilityReport, RecError> {
    let cert = spec.validate_pisot_type()?;
    let k = cert.degree();
    let alpha_is_unit = cert.is_unit();

    let unconditional = if k >= 6 {
        Some(Verdict::FiniteByK6)
    } else if k >= 5 && !alpha_is_unit {
        Some(Verdict::FiniteByK5Nonunit)
    } else {
        None
    };

    let skipped = SquarenessVerdict::Undecided {
        reason: "skipped: unconditional clause applies".into(),
    };
    let (v_f1, v_f1a) = if unconditional.is_none() || force_squareness {
        let bd = binet_coefficients(spec)?;
        let f1 = bd.f1().clone();
        let alpha = NFElem::alpha(f1.field().clone());
        let f1a = f1.mul(&alpha)?;
        (
            squareness_in_splitting_field(&f1, cap, cancel)?,
            squareness_in_splitting_field(&f1a, cap, cancel)?,
        )
    } else {
        (skipped.clone(), skipped)
    };

    let verdict = match unconditional {
        Some(v) => v,
        None if v_f1.is_not_square() && v_f1a.is_not_square() => Verdict::FiniteByNonsquare,
        None => Verdict::Unknown,
    };

    let mut clause_citations = Vec::new();
    if k >= 6 {
        clause_citations.push("(ii) k >= 6".to_string());
    }
    if k >= 5 && !alpha_is_unit {
        clause_citations.push("(i) k >= 5 and alpha is not a unit".to_string());
    }
    if v_f1.is_not_square() && v_f1a.is_not_square() {
        clause_citations
            .push("neither f_1 nor f_1*alpha_1 is a square in the splitting field".to_string());
    }

    Ok(ApplicabilityReport {
        k,
        nonsquare_f1: v_f1,
        nonsquare_f1alpha: v_f1a,
        alpha_is_unit,
        verdict,
        clause_citations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Int, IntPoly};
    use crate::nf::NumberField;
    use crate::recurrence::{fibonacci, plastic_exceptional, tribonacci};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn fibonacci_f1_not_square_by_norm() {
        let bd = binet_coefficients(&fibonacci()).unwrap();
        let v = squareness_in_splitting_field(bd.f1(), 64, &CancelToken::new()).unwrap();
        assert_eq!(
            v,
            SquarenessVerdict::NotSquare {
                obstruction: Obstruction::NormNotRationalSquare
            }
        );
        // norm of (2a-1)/5 over Q(phi) is -1/5
        assert_eq!(bd.f1().norm(), r(-1, 5));
    }

    #[test]
    fn five_square_in_golden_field() {
        let f = NumberField::new(IntPoly::from_i64(&[-1, -1, 1])).unwrap();
        let five = NFElem::from_rat(f, r(5, 1));
        let v = squareness_in_splitting_field(&five, 64, &CancelToken::new()).unwrap();
        match v {
            SquarenessVerdict::Square { witness } => {
                assert_eq!(witness.mul(&witness).unwrap(), five);
            }
            other => panic!("expected square, got {other:?}"),
        }
    }

    #[test]
    fn cap_gives_undecided() {
        let f = NumberField::new(IntPoly::from_i64(&[-1, -1, 0, 1])).unwrap();
        let th = NFElem::alpha(f.clone());
        let e = th.add(&NFElem::from_rat(f, r(2, 1))).unwrap();
        let v = squareness_in_splitting_field(&e, 2, &CancelToken::new()).unwrap();
        assert!(matches!(v, SquarenessVerdict::Undecided { .. }));
    }

    #[test]
    fn tribonacci_finite_by_nonsquare() {
        let rep = theorem_applicability(&tribonacci(), 64, false, &CancelToken::new()).unwrap();
        assert_eq!(rep.verdict, Verdict::FiniteByNonsquare);
        assert!(rep.nonsquare_f1.is_not_square());
        assert!(rep.nonsquare_f1alpha.is_not_square());
        assert_eq!(rep.k, 3);
        assert!(rep.alpha_is_unit);
    }

    #[test]
    fn plastic_exceptional_unknown_with_witness() {
        let rep =
            theorem_applicability(&plastic_exceptional(), 64, false, &CancelToken::new()).unwrap();
        assert_eq!(rep.verdict, Verdict::Unknown);
        // the non-square hypothesis must fail: a concrete witness exists
        let squares = [&rep.nonsquare_f1, &rep.nonsquare_f1alpha];
        assert!(squares.iter().any(|v| v.is_square()));
        for v in squares {
            if let SquarenessVerdict::Square { witness } = v {
                assert!(!witness.is_zero());
            }
        }
    }

    #[test]
    fn degree_six_always_finite() {
        // x^6 - x^5 - x^4 - x^3 - x^2 - x - 1 (6-step Fibonacci analogue)
        let spec = RecurrenceSpec::new(
            IntPoly::from_i64(&[-1, -1, -1, -1, -1, -1, 1]),
            vec![
                Int::from(0),
                Int::from(0),
                Int::from(0),
                Int::from(0),
                Int::from(0),
                Int::from(1),
            ],
        )
        .unwrap();
        let rep = theorem_applicability(&spec, 64, false, &CancelToken::new()).unwrap();
        assert_eq!(rep.verdict, Verdict::FiniteByK6);
        assert!(matches!(
            rep.nonsquare_f1,
            SquarenessVerdict::Undecided { .. }
        ));
    }
}

//! Exact in-field square roots.

use num_traits::Signed;

use crate::arith::dyadic::rational_sqrt_exact;

use super::poly::NFPoly;
use super::trager::{canonical_sign, factor_squarefree_nf};
use super::{NFElem, NfError};

/// Exact square root of `a` inside its own field, if one exists. The sign
/// is normalized so the first nonzero coordinate is positive.
pub fn nf_sqrt(a: &NFElem) -> Result<Option<NFElem>, NfError> {
    let field = a.field().clone();
    if a.is_zero() {
        return Ok(Some(NFElem::zero(field)));
    }
    if let Some(r) = a.is_rational() {
        if !r.is_negative() {
            if let Some(s) = rational_sqrt_exact(&r) {
                return Ok(Some(NFElem::from_rat(field, s)));
            }
        }
        // a negative or irrational-square rational may still be a square
        // of an irrational element; fall through to the factor test.
    }
    // t^2 - a is squarefree for a != 0; any root lies among its linear
    // factors over the field.
    let g = NFPoly::new(
        field.clone(),
        vec![a.neg(), NFElem::zero(field.clone()), NFElem::one(field)],
    );
    for f in factor_squarefree_nf(&g)? {
        if f.deg() != 1 {
            continue;
        }
        // monic linear factor t + c: root is -c
        let w = f.coeff(0).neg();
        debug_assert_eq!(&w.mul(&w)?, a);
        return Ok(Some(canonical_sign(w)));
    }
    Ok(None)
}

//! Splitting fields by iterated primitive elements: adjoin one root at a
//! time, collapsing each extension tower step into a single generator via
//! a squarefree shifted norm.

use std::sync::Arc;

use num_traits::One;

use crate::arith::factor::is_irreducible;
use crate::arith::{Int, IntPoly, Rat};
use crate::cancel::CancelToken;

use super::poly::NFPoly;
use super::trager::{factor_squarefree_nf, shifted_norm};
use super::{NFElem, NfError, NumberField};

/// Splitting field of a monic squarefree integer polynomial, presented as
/// Q(gamma) for a single primitive element together with the exact images
/// of every root of the input.
#[derive(Debug)]
pub struct SplittingField {
    base_poly: IntPoly,
    field: Arc<NumberField>,
    root_images: Vec<NFElem>,
}

impl SplittingField {
    /// The polynomial whose roots were adjoined.
    pub fn base_poly(&self) -> &IntPoly {
        &self.base_poly
    }

    /// The splitting field as a plain number field Q(gamma).
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Defining polynomial of the primitive element gamma.
    pub fn primitive_poly(&self) -> &IntPoly {
        self.field.defining_poly()
    }

    /// [splitting field : Q].
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// Exact images of the roots of the base polynomial, in the order the
    /// construction discovered them (deterministic).
    pub fn root_images(&self) -> &[NFElem] {
        &self.root_images
    }
}

/// Rational-coefficient polynomial from a polynomial over a degree-1 field.
fn rationalize(q: &NFPoly) -> Result<IntPoly, NfError> {
    let coeffs: Vec<Rat> = q
        .coeffs()
        .iter()
        .map(|c| c.is_rational().expect("degree-1 field element"))
        .collect();
    let (p, denom) = crate::arith::RatPoly::new(coeffs).clear_denominators();
    debug_assert!(denom.is_one(), "monic factor of integer polynomial");
    Ok(p)
}

/// Build the splitting field of a monic squarefree integer polynomial.
/// Fails with `DegreeCapExceeded` when the next adjunction would push the
/// degree past `degree_cap`; the error carries the degree reached so far.
pub fn build_splitting_field(
    p: &IntPoly,
    degree_cap: usize,
    cancel: &CancelToken,
) -> Result<SplittingField, NfError> {
    if p.is_zero() || p.degree() == Some(0) {
        return Err(NfError::DegreeZero);
    }
    if !p.is_monic() {
        return Err(NfError::NotMonic);
    }
    if !p.is_squarefree() {
        return Err(NfError::Arith(crate::arith::ArithError::NotSquarefree));
    }

    // start over Q, modelled as the degree-1 field Q[x]/(x)
    let mut field = NumberField::new(IntPoly::x())?;
    let mut images: Vec<NFElem> = Vec::new();

    loop {
        if cancel.is_cancelled() {
            return Err(NfError::Cancelled);
        }
        // remaining factor of p over the current field
        let mut remaining = NFPoly::from_rat_poly(field.clone(), &p.to_rat());
        for im in &images {
            let lin = NFPoly::new(
                field.clone(),
                vec![im.neg(), NFElem::one(field.clone())],
            );
            let (q, r) = remaining.div_rem(&lin)?;
            debug_assert!(r.is_zero(), "recorded images are roots of p");
            remaining = q;
        }
        if remaining.deg() == 0 {
            break;
        }

        let mut factors = factor_squarefree_nf(&remaining)?;
        factors.sort_by_key(|f| f.deg());
        let mut adjoined = false;
        for f in factors {
            if f.deg() == 1 {
                images.push(f.coeff(0).neg());
                continue;
            }
            if adjoined {
                continue; // revisit after the field grows
            }
            let new_degree = field.degree() * f.deg();
            if new_degree > degree_cap {
                return Err(NfError::DegreeCapExceeded {
                    cap: degree_cap,
                    reached: field.degree(),
                });
            }
            if field.degree() == 1 {
                // ground case: the factor has rational coefficients
                let new_field = NumberField::new(rationalize(&f)?)?;
                images = images
                    .iter()
                    .map(|e| {
                        NFElem::from_rat(
                            new_field.clone(),
                            e.is_rational().expect("degree-1 field element"),
                        )
                    })
                    .collect();
                images.push(NFElem::alpha(new_field.clone()));
                field = new_field;
            } else {
                let (new_field, gamma_img) = adjoin_root(&field, &f)?;
                let c_used = gamma_img.1;
                let gamma_img = gamma_img.0;
                let gamma_new = NFElem::alpha(new_field.clone());
                // beta = gamma' - c * gamma
                let beta = gamma_new
                    .sub(&gamma_img.scale(&Rat::from_integer(Int::from(c_used))))?;
                images = images
                    .iter()
                    .map(|e| {
                        NFPoly::from_rat_poly(new_field.clone(), &e.coord_poly())
                            .eval(&gamma_img)
                    })
                    .collect::<Result<_, _>>()?;
                images.push(beta);
                field = new_field;
            }
            adjoined = true;
        }
    }

    Ok(SplittingField {
        base_poly: p.clone(),
        field,
        root_images: images,
    })
}

/// Adjoin a root beta of the monic irreducible f over Q(gamma): find c with
/// gamma' = beta + c*gamma primitive, return the new field Q(gamma') and
/// the image of gamma in it (plus the c used).
fn adjoin_root(
    field: &Arc<NumberField>,
    f: &NFPoly,
) -> Result<(Arc<NumberField>, (NFElem, i64)), NfError> {
    let m = field.defining_poly();
    for c in 1..64i64 {
        // characteristic polynomial of beta + c*gamma
        let h = shifted_norm(f, c)?;
        if h.gcd(&h.derivative()).deg() != 0 {
            continue;
        }
        let (h_int, denom) = h.clear_denominators();
        if !denom.is_one() || !h_int.is_monic() {
            continue;
        }
        if !is_irreducible(&h_int)? {
            continue;
        }
        let new_field = NumberField::new(h_int)?;
        let gamma_new = NFElem::alpha(new_field.clone());
        // gamma's image: unique common root x of m(x) and f~(x, gamma' - c x)
        let c_rat = Rat::from_integer(Int::from(c));
        let lin = NFPoly::new(
            new_field.clone(),
            vec![gamma_new.clone(), NFElem::from_rat(new_field.clone(), -c_rat)],
        );
        let mut q = NFPoly::zero(new_field.clone());
        for coeff in f.coeffs().iter().rev() {
            let cp = NFPoly::from_rat_poly(new_field.clone(), &coeff.coord_poly());
            q = q.mul(&lin)?.add(&cp)?;
        }
        let m_new = NFPoly::from_rat_poly(new_field.clone(), &m.to_rat());
        let g = m_new.gcd(&q)?;
        debug_assert_eq!(g.degree(), Some(1), "primitive shift isolates gamma");
        let gamma_img = g.coeff(0).neg();
        return Ok((new_field, (gamma_img, c)));
    }
    unreachable!("some small shift yields a primitive element")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(coeffs: &[i64], cap: usize) -> SplittingField {
        build_splitting_field(&IntPoly::from_i64(coeffs), cap, &CancelToken::new()).unwrap()
    }

    fn check_images(sf: &SplittingField) {
        let field = sf.field().clone();
        let mut prod = NFPoly::one(field.clone());
        for im in sf.root_images() {
            let lin = NFPoly::new(
                field.clone(),
                vec![im.neg(), NFElem::one(field.clone())],
            );
            prod = prod.mul(&lin).unwrap();
        }
        let expect = NFPoly::from_rat_poly(field, &sf.base_poly().to_rat());
        assert_eq!(prod, expect);
    }

    #[test]
    fn quadratic_splits_in_degree_two() {
        let sf = split(&[-2, 0, 1], 16);
        assert_eq!(sf.degree(), 2);
        assert_eq!(sf.root_images().len(), 2);
        check_images(&sf);
    }

    #[test]
    fn rational_and_quadratic_roots() {
        // (x-1)(x+1)(x^2+1)
        let sf = split(&[-1, 0, 0, 0, 1], 16);
        assert_eq!(sf.degree(), 2);
        assert_eq!(sf.root_images().len(), 4);
        check_images(&sf);
    }

    #[test]
    fn plastic_cubic_needs_degree_six() {
        let sf = split(&[-1, -1, 0, 1], 16);
        assert_eq!(sf.degree(), 6);
        assert_eq!(sf.root_images().len(), 3);
        check_images(&sf);
        // images are pairwise distinct
        let ims = sf.root_images();
        for i in 0..ims.len() {
            for j in i + 1..ims.len() {
                assert!(!ims[i].sub(&ims[j]).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let err =
            build_splitting_field(&IntPoly::from_i64(&[-1, -1, 0, 1]), 3, &CancelToken::new())
                .unwrap_err();
        match err {
            NfError::DegreeCapExceeded { cap, reached } => {
                assert_eq!(cap, 3);
                assert!(reached >= 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn cancellation_observed() {
        let tok = CancelToken::new();
        tok.cancel();
        let err = build_splitting_field(&IntPoly::from_i64(&[-2, 0, 1]), 16, &tok).unwrap_err();
        assert_eq!(err, NfError::Cancelled);
    }

    #[test]
    fn rejects_non_squarefree() {
        let p = IntPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        let err = build_splitting_field(&p, 16, &CancelToken::new()).unwrap_err();
        assert!(matches!(err, NfError::Arith(_)));
    }
}

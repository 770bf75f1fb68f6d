//! Trager's norm method: factorization of squarefree polynomials over a
//! number field by factoring a shifted norm over Q.

use num_traits::{One, Signed, Zero};

use crate::arith::factor::factor_over_rationals;
use crate::arith::linalg::interpolate;
use crate::arith::{Int, Rat, RatPoly};

use super::poly::NFPoly;
use super::{NFElem, NfError};

/// Norm of d(t - s*alpha) as a polynomial in t:
/// N(t) = prod over conjugates alpha_i of sum_j c_j(alpha_i) (t - s*alpha_i)^j,
/// computed as Res_x(m(x), sum_j c_j(x) (t - s*x)^j) by evaluation and
/// interpolation (m is monic, so degree drops at a node are harmless).
pub fn shifted_norm(d: &NFPoly, s: i64) -> Result<RatPoly, NfError> {
    let field = d.field().clone();
    let m = field.defining_poly().to_rat();
    let k = field.degree();
    let dg = d.deg();
    let deg_t = k * dg;
    let coeff_polys: Vec<RatPoly> = d.coeffs().iter().map(|c| c.coord_poly()).collect();
    let s_rat = Rat::from_integer(Int::from(s));

    let mut nodes: Vec<(Rat, Rat)> = Vec::with_capacity(deg_t + 1);
    let mut t0 = Int::zero();
    while nodes.len() < deg_t + 1 {
        let t_val = Rat::from_integer(t0.clone());
        // x-polynomial: sum_j c_j(x) * (t0 - s*x)^j
        let lin = RatPoly::new(vec![t_val.clone(), -s_rat.clone()]);
        let mut xpoly = RatPoly::zero();
        let mut lin_pow = RatPoly::one();
        for c in &coeff_polys {
            xpoly = xpoly.add(&c.mul(&lin_pow));
            lin_pow = lin_pow.mul(&lin);
        }
        if !xpoly.is_zero() {
            let r = m.resultant(&xpoly).map_err(NfError::Arith)?;
            nodes.push((t_val, r));
        }
        t0 += Int::one();
    }
    Ok(interpolate(&nodes))
}

/// Factor a monic squarefree polynomial over its number field into monic
/// irreducible factors, ordered deterministically by (degree, then the
/// rational factor of the norm they came from).
pub fn factor_squarefree_nf(g: &NFPoly) -> Result<Vec<NFPoly>, NfError> {
    let field = g.field().clone();
    if g.is_zero() {
        return Err(NfError::Arith(crate::arith::ArithError::ZeroPolynomial));
    }
    let g = g.monic()?;
    if g.deg() == 0 {
        return Ok(Vec::new());
    }
    if g.deg() == 1 {
        return Ok(vec![g]);
    }
    let alpha = NFElem::alpha(field.clone());
    for s in 0..64i64 {
        let norm = shifted_norm(&g, s)?;
        // squarefree norm needed for the gcd split
        if norm.gcd(&norm.derivative()).deg() != 0 {
            continue;
        }
        let (norm_int, _) = norm.clear_denominators();
        let rational_factors = factor_over_rationals(&norm_int)?;
        // D(t) = g(t - s*alpha)
        let shift_elem = alpha.scale(&Rat::from_integer(Int::from(-s)));
        let d = g.shift_var(&shift_elem)?;
        let back = alpha.scale(&Rat::from_integer(Int::from(s)));
        let mut out = Vec::new();
        for (nj, _) in &rational_factors {
            let njf = NFPoly::from_rat_poly(field.clone(), &nj.to_rat());
            let gj = d.gcd(&njf)?;
            if gj.degree().map_or(false, |dg| dg >= 1) {
                out.push(gj.shift_var(&back)?.monic()?);
            }
        }
        let total: usize = out.iter().map(|f| f.deg()).sum();
        debug_assert_eq!(total, g.deg(), "norm factor split must cover g");
        return Ok(out);
    }
    // 64 distinct shifts cannot all collide for a squarefree input
    unreachable!("no squarefree shifted norm found")
}

/// Check that g is squarefree over its field.
pub fn is_squarefree_nf(g: &NFPoly) -> Result<bool, NfError> {
    if g.is_zero() {
        return Ok(false);
    }
    if g.deg() == 0 {
        return Ok(true);
    }
    let d = g.derivative();
    let gc = g.gcd(&d)?;
    Ok(gc.degree() == Some(0))
}

/// Canonical sign for a square root: first nonzero coordinate positive.
pub fn canonical_sign(w: NFElem) -> NFElem {
    for c in w.coords() {
        if c.is_zero() {
            continue;
        }
        return if c.is_negative() { w.neg() } else { w };
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPoly;
    use crate::nf::NumberField;

    #[test]
    fn norm_of_linear_is_char_poly() {
        // t - phi over Q(phi): norm = t^2 - t - 1
        let f = NumberField::new(IntPoly::from_i64(&[-1, -1, 1])).unwrap();
        let phi = NFElem::alpha(f.clone());
        let g = NFPoly::new(f.clone(), vec![phi.neg(), NFElem::one(f)]);
        let n = shifted_norm(&g, 0).unwrap();
        let (ni, _) = n.clear_denominators();
        assert_eq!(ni, IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn factor_x2_minus_5_over_golden_field() {
        // x^2 - 5 = (x - (2phi-1))(x + (2phi-1)) over Q(phi)
        let f = NumberField::new(IntPoly::from_i64(&[-1, -1, 1])).unwrap();
        let g = NFPoly::from_rat_poly(
            f.clone(),
            &IntPoly::from_i64(&[-5, 0, 1]).to_rat(),
        );
        let fs = factor_squarefree_nf(&g).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|q| q.deg() == 1));
    }

    #[test]
    fn irreducible_stays_whole() {
        // x^2 + 1 stays irreducible over Q(phi) (a real field)
        let f = NumberField::new(IntPoly::from_i64(&[-1, -1, 1])).unwrap();
        let g = NFPoly::from_rat_poly(f, &IntPoly::from_i64(&[1, 0, 1]).to_rat());
        let fs = factor_squarefree_nf(&g).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].deg(), 2);
    }
}

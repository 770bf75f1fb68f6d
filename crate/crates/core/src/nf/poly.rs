//! Univariate polynomials with number-field coefficients, used by the
//! Trager factorization and splitting-field construction.

use std::sync::Arc;

use crate::arith::{Rat, RatPoly};

use super::{NFElem, NfError, NumberField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NFPoly {
    field: Arc<NumberField>,
    coeffs: Vec<NFElem>,
}

impl NFPoly {
    pub fn new(field: Arc<NumberField>, mut coeffs: Vec<NFElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NFPoly { field, coeffs }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        NFPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Arc<NumberField>) -> Self {
        let one = NFElem::one(field.clone());
        NFPoly::new(field, vec![one])
    }

    pub fn constant(c: NFElem) -> Self {
        NFPoly::new(c.field().clone(), vec![c])
    }

    /// Build from rational coefficients (ascending).
    pub fn from_rat_poly(field: Arc<NumberField>, p: &RatPoly) -> Self {
        NFPoly::new(
            field.clone(),
            p.coeffs()
                .iter()
                .map(|c| NFElem::from_rat(field.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> NFElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| NFElem::zero(self.field.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("zero polynomial has no degree")
    }

    pub fn lc(&self) -> NFElem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| NFElem::zero(self.field.clone()))
    }

    pub fn add(&self, other: &Self) -> Result<Self, NfError> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).add(&other.coeff(i))?);
        }
        Ok(NFPoly::new(self.field.clone(), v))
    }

    pub fn neg(&self) -> Self {
        NFPoly::new(
            self.field.clone(),
            self.coeffs.iter().map(|c| c.neg()).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NfError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, NfError> {
        if self.is_zero() || other.is_zero() {
            return Ok(NFPoly::zero(self.field.clone()));
        }
        let mut v = vec![NFElem::zero(self.field.clone()); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(NFPoly::new(self.field.clone(), v))
    }

    pub fn scale_elem(&self, c: &NFElem) -> Result<Self, NfError> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a.mul(c)?);
        }
        Ok(NFPoly::new(self.field.clone(), v))
    }

    pub fn monic(&self) -> Result<Self, NfError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.lc().inverse()?;
        self.scale_elem(&inv)
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), NfError> {
        if d.is_zero() {
            return Err(NfError::DivisionByZero);
        }
        let dd = d.deg();
        let lcd_inv = d.lc().inverse()?;
        let mut r = self.clone();
        let mut q = NFPoly::zero(self.field.clone());
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = r.lc().mul(&lcd_inv)?;
            let mut tv = vec![NFElem::zero(self.field.clone()); dr - dd + 1];
            tv[dr - dd] = c;
            let t = NFPoly::new(self.field.clone(), tv);
            q = q.add(&t)?;
            r = r.sub(&t.mul(d)?)?;
        }
        Ok((q, r))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self, NfError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b)?.1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return NFPoly::zero(self.field.clone());
        }
        NFPoly::new(
            self.field.clone(),
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    c.scale(&Rat::from_integer(crate::arith::Int::from(i + 1)))
                })
                .collect(),
        )
    }

    pub fn eval(&self, x: &NFElem) -> Result<NFElem, NfError> {
        let mut acc = NFElem::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(c)?;
        }
        Ok(acc)
    }

    /// Compose with t -> t + shift, i.e. returns p(t + s).
    pub fn shift_var(&self, s: &NFElem) -> Result<Self, NfError> {
        // Horner in (t + s)
        let lin = NFPoly::new(
            self.field.clone(),
            vec![s.clone(), NFElem::one(self.field.clone())],
        );
        let mut acc = NFPoly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin)?.add(&NFPoly::constant(c.clone()))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPoly;
    use crate::nf::NumberField;

    #[test]
    fn division_and_gcd_over_field() {
        let f = NumberField::new(IntPoly::from_i64(&[-1, -1, 1])).unwrap();
        let phi = NFElem::alpha(f.clone());
        // (t - phi)(t + 1)
        let a = NFPoly::new(
            f.clone(),
            vec![phi.neg(), NFElem::one(f.clone())],
        );
        let b = NFPoly::new(
            f.clone(),
            vec![NFElem::one(f.clone()), NFElem::one(f.clone())],
        );
        let prod = a.mul(&b).unwrap();
        let (q, r) = prod.div_rem(&a).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, b);
        let g = prod.gcd(&a).unwrap();
        assert_eq!(g, a.monic().unwrap());
    }

    #[test]
    fn shift_var_round_trip() {
        let f = NumberField::new(IntPoly::from_i64(&[-1, -1, 1])).unwrap();
        let phi = NFElem::alpha(f.clone());
        let p = NFPoly::new(
            f.clone(),
            vec![phi.clone(), NFElem::one(f.clone()), phi.clone()],
        );
        let shifted = p.shift_var(&phi).unwrap();
        let back = shifted.shift_var(&phi.neg()).unwrap();
        assert_eq!(p, back);
    }
}

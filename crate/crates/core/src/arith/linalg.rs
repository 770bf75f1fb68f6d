//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::{Rat, RatPoly};

/// Solve A x = b by Gaussian elimination. Returns None when A is singular.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = Rat::one() / m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=n {
                    let s = &f * &m[col][j];
                    m[r][j] = &m[r][j] - s;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// First linear dependence among the given vectors: returns coefficients
/// c_0..c_m (c_m = 1) with sum c_i v_i = 0, where v_m is the first vector
/// dependent on its predecessors. Returns None if all are independent.
pub fn first_dependence(vectors: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    if vectors.is_empty() {
        return None;
    }
    let dim = vectors[0].len();
    // rows of the reduced basis plus bookkeeping of the combination
    let mut basis: Vec<(Vec<Rat>, Vec<Rat>)> = Vec::new(); // (vector, expression in inputs)
    for (idx, v) in vectors.iter().enumerate() {
        assert_eq!(v.len(), dim);
        let mut w = v.clone();
        let mut expr = vec![Rat::zero(); vectors.len()];
        expr[idx] = Rat::one();
        for (bv, be) in &basis {
            let lead = bv.iter().position(|x| !x.is_zero()).unwrap();
            if !w[lead].is_zero() {
                let f = &w[lead] / &bv[lead];
                for j in 0..dim {
                    let s = &f * &bv[j];
                    w[j] = &w[j] - s;
                }
                for j in 0..vectors.len() {
                    let s = &f * &be[j];
                    expr[j] = &expr[j] - s;
                }
            }
        }
        if w.iter().all(|x| x.is_zero()) {
            // normalize so the coefficient of v_idx is one
            let lead = expr[idx].clone();
            let coeffs: Vec<Rat> = expr[..=idx].iter().map(|c| c / &lead).collect();
            return Some(coeffs);
        }
        basis.push((w, expr));
    }
    None
}

/// Lagrange interpolation through distinct nodes.
pub fn interpolate(points: &[(Rat, Rat)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut li = RatPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            assert!(!denom.is_zero(), "interpolation nodes must be distinct");
            // (x - xj) / (xi - xj)
            let lin = RatPoly::new(vec![-xj / &denom, Rat::one() / denom]);
            li = li.mul(&lin);
        }
        acc = acc.add(&li);
    }
    acc
}

//! Classical Diophantine quadruple formulas: Euler's family and the d+
//! extension of an arbitrary triple.

use num_traits::One;

use crate::arith::Int;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuadError {
    #[error("{a}*{b}+1 = {value} is not a perfect square")]
    PairNotSquare { a: Int, b: Int, value: Int },
}

fn exact_sqrt(n: &Int) -> Option<Int> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

fn pair_root(a: &Int, b: &Int) -> Result<Int, QuadError> {
    let v = a * b + 1;
    exact_sqrt(&v).ok_or_else(|| QuadError::PairNotSquare {
        a: a.clone(),
        b: b.clone(),
        value: v,
    })
}

fn assert_quadruple(q: &[Int; 4]) {
    for i in 0..4 {
        for j in i + 1..4 {
            let v = &q[i] * &q[j] + 1;
            assert!(
                exact_sqrt(&v).is_some(),
                "product {}*{}+1 = {v} is not a square",
                q[i],
                q[j]
            );
        }
    }
}

/// Euler's quadruple (a, b, a+b+2r, 4r(a+r)(b+r)) with r = sqrt(ab+1);
/// all six pairwise conditions are re-verified before returning.
pub fn euler_quadruple(a: &Int, b: &Int) -> Result<[Int; 4], QuadError> {
    assert!(a >= &Int::one() && b >= &Int::one());
    let r = pair_root(a, b)?;
    let c = a + b + Int::from(2) * &r;
    let d = Int::from(4) * &r * (a + &r) * (b + &r);
    let q = [a.clone(), b.clone(), c, d];
    assert_quadruple(&q);
    Ok(q)
}

/// d+ = a + b + c + 2abc + 2rst for a Diophantine triple {a,b,c}; the
/// result always extends the triple to a quadruple.
pub fn dplus_extension(a: &Int, b: &Int, c: &Int) -> Result<Int, QuadError> {
    assert!(a >= &Int::one() && b >= &Int::one() && c >= &Int::one());
    let r = pair_root(a, b)?;
    let s = pair_root(a, c)?;
    let t = pair_root(b, c)?;
    let d = a + b + c + Int::from(2) * a * b * c + Int::from(2) * r * s * t;
    assert_quadruple(&[a.clone(), b.clone(), c.clone(), d.clone()]);
    Ok(d)
}

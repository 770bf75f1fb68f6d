//! Power sums of the roots of a monic integer polynomial via Newton's
//! identities. These are exactly the traces Tr(alpha^n) for the power basis
//! of Q[x]/(p), which feed the trace-form linear system for Binet data.

use num_traits::Zero;

use super::{ArithError, Int, IntPoly};

/// Returns [Tr(alpha^0), ..., Tr(alpha^m)] for the monic polynomial `p`,
/// where Tr(alpha^n) is the sum of n-th powers of all roots of `p`.
pub fn power_traces(p: &IntPoly, m: usize) -> Result<Vec<Int>, ArithError> {
    if p.is_zero() || !p.is_monic() {
        return Err(ArithError::NotMonic);
    }
    let k = p.deg();
    // e[i] = i-th elementary symmetric function of the roots:
    // p = x^k - e1 x^(k-1) + e2 x^(k-2) - ...
    let e: Vec<Int> = (1..=k)
        .map(|i| {
            let c = p.coeff(k - i);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let mut tr: Vec<Int> = Vec::with_capacity(m + 1);
    tr.push(Int::from(k));
    for n in 1..=m {
        let mut s = Int::zero();
        // p_n = e1 p_{n-1} - e2 p_{n-2} + ... +- n*e_n (last term only for n <= k)
        let top = n.min(k);
        for i in 1..=top {
            let term = if i < n {
                &e[i - 1] * &tr[n - i]
            } else {
                &e[i - 1] * Int::from(n)
            };
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        tr.push(s);
    }
    Ok(tr)
}

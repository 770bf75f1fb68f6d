//! Polynomial and integer-list parsing for the command line. The textual
//! form accepted here round-trips with the canonical printer, so
//! `x^3-x-1` parses back to the polynomial that prints as `x^3-x-1`.

use num_bigint::BigInt;
use num_traits::Zero;
use pisotriple_core::{Int, IntPoly};

/// Parse "x^3-x-1", "2*x^2 + 3x - 4", "7" and similar. Terms are
/// [coefficient][*][x[^exponent]]; whitespace is ignored.
pub fn parse_poly(s: &str) -> Result<IntPoly, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".into());
    }
    let bytes = compact.as_bytes();
    let mut i = 0usize;
    let mut coeffs: Vec<Int> = Vec::new();
    let mut add_term = |coeff: Int, exp: usize| {
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Int::zero());
        }
        coeffs[exp] += coeff;
    };
    while i < bytes.len() {
        // sign
        let mut sign = 1i32;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= bytes.len() {
            return Err(format!("dangling sign at end of `{compact}`"));
        }
        // coefficient digits
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let digits = &compact[start..i];
        if i < bytes.len() && bytes[i] == b'*' {
            if digits.is_empty() {
                return Err(format!("unexpected `*` at position {i} in `{compact}`"));
            }
            i += 1;
        }
        let has_x = i < bytes.len() && (bytes[i] == b'x' || bytes[i] == b'X');
        if !has_x && digits.is_empty() {
            return Err(format!(
                "unexpected token `{}` in `{compact}`",
                &compact[i..]
            ));
        }
        let coeff: Int = if digits.is_empty() {
            Int::from(1)
        } else {
            digits
                .parse::<BigInt>()
                .map_err(|_| format!("bad coefficient `{digits}`"))?
        };
        let coeff = if sign < 0 { -coeff } else { coeff };
        if !has_x {
            add_term(coeff, 0);
            continue;
        }
        i += 1; // past 'x'
        let exp: usize = if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let est = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if est == i {
                return Err(format!("missing exponent after `^` in `{compact}`"));
            }
            compact[est..i]
                .parse()
                .map_err(|_| format!("bad exponent `{}`", &compact[est..i]))?
        } else {
            1
        };
        add_term(coeff, exp);
    }
    let p = IntPoly::new(coeffs);
    if p.is_zero() {
        return Err("zero polynomial".into());
    }
    Ok(p)
}

/// Ascending comma-separated coefficient list, e.g. "-1,-1,0,1".
pub fn parse_coeffs(s: &str) -> Result<IntPoly, String> {
    let coeffs = parse_int_list(s)?;
    let p = IntPoly::new(coeffs);
    if p.is_zero() {
        return Err("zero polynomial".into());
    }
    Ok(p)
}

pub fn parse_int_list(s: &str) -> Result<Vec<Int>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| format!("bad integer `{t}`"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_canonical_printer() {
        for s in ["x^3-x-1", "x^2-x-1", "x^7-x^5-x^4-x^3-x^2-x-1", "2x^2+3", "x"] {
            let p = parse_poly(s).unwrap();
            let printed = p.to_string();
            assert_eq!(parse_poly(&printed).unwrap(), p);
        }
    }

    #[test]
    fn poly_and_coeffs_agree() {
        assert_eq!(
            parse_poly("x^3-x-1").unwrap(),
            parse_coeffs("-1,-1,0,1").unwrap()
        );
        assert_eq!(
            parse_poly("x^2 - 2*x - 2").unwrap(),
            parse_coeffs("-2,-2,1").unwrap()
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("y+1").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("3-").is_err());
        assert!(parse_coeffs("1,two").is_err());
    }
}

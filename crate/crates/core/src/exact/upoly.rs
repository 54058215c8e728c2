//! Dense univariate polynomials over the integers.
//!
//! These are the workhorse of the gcd routines for [`QTPoly`](super::QTPoly):
//! a bivariate polynomial is viewed as a polynomial in `q` whose
//! coefficients are dense polynomials in `t`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in increasing degree order; no trailing zeros.
pub type UPoly = Vec<BigInt>;

pub fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut out: UPoly = Vec::with_capacity(a.len().max(b.len()));
    for i in 0..a.len().max(b.len()) {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x + y);
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut out: UPoly = Vec::with_capacity(a.len().max(b.len()));
    for i in 0..a.len().max(b.len()) {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Gcd of all coefficients, non-negative.
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(a: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a` in `Z[x]`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem: UPoly = a.to_vec();
    let lb = b.last().unwrap();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qk, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &qk * bj;
        }
        quo[k] = qk;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quo);
    Some(quo)
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
pub fn prem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut r: UPoly = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn max_norm(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Symmetric `xi`-adic expansion of an integer into a polynomial.
pub fn interpolate_int(mut gamma: BigInt, xi: &BigInt) -> UPoly {
    let mut out = Vec::new();
    let half = xi / 2;
    while !gamma.is_zero() {
        let mut r = gamma.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        gamma = (gamma - &r) / xi;
        out.push(r);
    }
    out
}

/// Gcd in `Z[x]`, normalized with positive leading coefficient.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return primitive_sign(b);
    }
    if b.is_empty() {
        return primitive_sign(a);
    }
    let ca = content(a);
    let cb = content(b);
    let c = ca.gcd(&cb);
    let pa = primitive(a);
    let pb = primitive(b);
    if pa.len() == 1 || pb.len() == 1 {
        return vec![c];
    }
    let g = gcd_heuristic(&pa, &pb).unwrap_or_else(|| gcd_prs(&pa, &pb));
    scale(&g, &c)
}

fn primitive_sign(a: &[BigInt]) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        a.iter().map(|c| -c).collect()
    } else {
        a.to_vec()
    }
}

fn gcd_heuristic(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    let mut xi: BigInt = BigInt::from(2) * max_norm(a).min(max_norm(b)) + 29;
    let deg = a.len().max(b.len()) as u64;
    for _ in 0..6 {
        if xi.bits() * deg > 20_000 {
            return None;
        }
        let ga = eval(a, &xi);
        let gb = eval(b, &xi);
        if !ga.is_zero() && !gb.is_zero() {
            let gamma = ga.gcd(&gb);
            let cand = primitive(&interpolate_int(gamma, &xi));
            if !cand.is_empty() && div_exact(a, &cand).is_some() && div_exact(b, &cand).is_some() {
                return Some(cand);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Primitive polynomial remainder sequence; inputs must be primitive.
pub fn gcd_prs(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let (mut x, mut y) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive(&r) };
    }
    primitive(&x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        let mut out: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+2) and (x-1)(x^2+1)
        let a = mul(&p(&[-1, 1]), &p(&[2, 1]));
        let b = mul(&p(&[-1, 1]), &p(&[1, 0, 1]));
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(gcd_prs(&primitive(&a), &primitive(&b)), p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_content() {
        let a = p(&[6, 6]);
        let b = p(&[4, 4]);
        assert_eq!(gcd(&a, &b), p(&[2, 2]));
        assert_eq!(gcd(&p(&[3]), &p(&[0, 6])), p(&[3]));
    }

    #[test]
    fn division() {
        let a = mul(&p(&[1, 2, 3]), &p(&[-5, 0, 7]));
        assert_eq!(div_exact(&a, &p(&[1, 2, 3])), Some(p(&[-5, 0, 7])));
        assert_eq!(div_exact(&p(&[1, 0, 1]), &p(&[1, 1])), None);
    }

    #[test]
    fn xi_adic_roundtrip() {
        let poly = p(&[3, -4, 0, 2]);
        let xi = BigInt::from(101);
        assert_eq!(interpolate_int(eval(&poly, &xi), &xi), poly);
    }
}

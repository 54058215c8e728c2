//! Dense univariate polynomials over an arbitrary [`Field`].

use super::field::Field;

/// Coefficients in increasing degree; no trailing zeros.
pub type Dense<F> = Vec<F>;

pub fn trim<F: Field>(p: &mut Dense<F>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn add<F: Field>(a: &[F], b: &[F]) -> Dense<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.plus(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Dense<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.minus(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.negated(),
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Dense<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].plus(&x.times(y));
            }
        }
    }
    trim(&mut out);
    out
}

pub fn scale<F: Field>(a: &[F], c: &F) -> Dense<F> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x.times(c)).collect()
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Dense<F>, Dense<F>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), rem);
    }
    let inv = b
        .last()
        .unwrap()
        .inverse()
        .expect("nonzero leading coefficient");
    let mut quo = vec![F::zero(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let c = top.times(&inv);
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] = rem[k + j].minus(&c.times(bj));
        }
        quo[k] = c;
    }
    trim(&mut quo);
    rem.truncate(b.len() - 1);
    trim(&mut rem);
    (quo, rem)
}

pub fn monic<F: Field>(a: &[F]) -> Dense<F> {
    match a.last() {
        None => Vec::new(),
        Some(l) if l.is_one() => a.to_vec(),
        Some(l) => scale(a, &l.inverse().unwrap()),
    }
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Dense<F> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = monic(&r);
    }
    monic(&x)
}

/// Inverse of `a` modulo `m`, when they are coprime.
pub fn inverse_mod<F: Field>(a: &[F], m: &[F]) -> Option<Dense<F>> {
    // invariant: r_i = s_i * a (mod m)
    let (_, a0) = divrem(a, m);
    let (mut r0, mut r1) = (m.to_vec(), a0);
    let (mut s0, mut s1): (Dense<F>, Dense<F>) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (quo, r2) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&quo, &s1));
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].inverse()?;
    let (_, out) = divrem(&scale(&s0, &c), m);
    Some(out)
}

pub fn eval<F: Field>(a: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in a.iter().rev() {
        acc = acc.times(x).plus(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(v: &[i64]) -> Dense<BigRational> {
        let mut out: Vec<BigRational> = v.iter().map(|&c| BigRational::from_i64(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn euclid_gcd() {
        let a = mul(&p(&[1, 1]), &p(&[2, 0, 1]));
        let b = mul(&p(&[1, 1]), &p(&[-3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn modular_inverse() {
        let m = p(&[1, 1, 1]);
        let a = p(&[2, 3]);
        let inv = inverse_mod(&a, &m).unwrap();
        let (_, r) = divrem(&mul(&a, &inv), &m);
        assert_eq!(r, p(&[1]));
        assert!(inverse_mod(&p(&[1, 1]), &mul(&p(&[1, 1]), &p(&[0, 1]))).is_none());
    }
}

//! Cyclotomic polynomials and the number fields `Q(w_n)`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::dense;
use super::field::{write_term, Field};
use super::upoly;

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    assert!(n >= 1, "cyclotomic index must be positive");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by the cyclotomic factors of proper divisors
    let mut p = vec![BigInt::from(0); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::from(1);
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = upoly::div_exact(&p, &cyclotomic(d)).expect("cyclotomic factor divides");
        }
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// An element of `Q(w)` with `w` a primitive `n`-th root of unity, stored as
/// a polynomial in `w` of degree below `phi(n)`.
///
/// Rational elements carry `n = 1` and combine with any field; mixing two
/// different orders above 1 is a logic error and panics.
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    c: Vec<BigRational>,
}

impl Cyclo {
    pub fn rational(r: BigRational) -> Self {
        let mut c = vec![r];
        dense::trim(&mut c);
        Cyclo { n: 1, c }
    }

    /// `w^k` in `Q(w_n)`.
    pub fn root_power(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Cyclo::reduce(n, c)
    }

    /// Builds from coefficients in `w`, reducing modulo the cyclotomic polynomial.
    pub fn from_coeffs(n: u32, c: Vec<BigRational>) -> Self {
        Cyclo::reduce(n, c)
    }

    fn reduce(n: u32, mut c: Vec<BigRational>) -> Self {
        dense::trim(&mut c);
        let phi = cyclotomic(n);
        let d = phi.len() - 1;
        while c.len() > d {
            let top = c.pop().unwrap();
            let shift = c.len() - d;
            for (j, pj) in phi[..d].iter().enumerate() {
                c[shift + j] -= &top * pj;
            }
            dense::trim(&mut c);
        }
        let n = if c.len() <= 1 { 1 } else { n };
        Cyclo { n, c }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn common(&self, other: &Self) -> u32 {
        match (self.n, other.n) {
            (1, m) | (m, 1) => m,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing Q(w_{a}) with Q(w_{b})"),
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo {
            n: 1,
            c: Vec::new(),
        }
    }
    fn one() -> Self {
        Cyclo {
            n: 1,
            c: vec![BigRational::one()],
        }
    }
    fn from_int(n: &BigInt) -> Self {
        Cyclo::rational(BigRational::from_integer(n.clone()))
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.common(other);
        let mut c = dense::add(&self.c, &other.c);
        dense::trim(&mut c);
        let n = if c.len() <= 1 { 1 } else { n };
        Cyclo { n, c }
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        let n = self.common(other);
        if self.c.len() <= 1 || other.c.len() <= 1 {
            let c = dense::mul(&self.c, &other.c);
            let n = if c.len() <= 1 { 1 } else { n };
            return Cyclo { n, c };
        }
        Cyclo::reduce(n, dense::mul(&self.c, &other.c))
    }
    fn negated(&self) -> Self {
        Cyclo {
            n: self.n,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        match self.c.len() {
            0 => None,
            1 => Some(Cyclo {
                n: 1,
                c: vec![self.c[0].recip()],
            }),
            _ => {
                let m: Vec<BigRational> = cyclotomic(self.n)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect();
                let inv =
                    dense::inverse_mod(&self.c, &m).expect("cyclotomic field element invertible");
                Some(Cyclo::reduce(self.n, inv))
            }
        }
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if Field::is_zero(x) {
                continue;
            }
            let vars = match k {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{k}"),
            };
            write_term(f, first, x, &vars)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic(3), ints(&[1, 1, 1]));
        assert_eq!(*cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_multiply() {
        let w = Cyclo::root_power(3, 1);
        let w2 = w.times(&w);
        assert_eq!(w2, Cyclo::root_power(3, 2));
        assert!(w2.times(&w).is_one());
        // 1 + w + w^2 = 0
        assert!(Cyclo::one().plus(&w).plus(&w2).is_zero());
        assert_eq!(w.inverse().unwrap(), w2);
        assert_eq!(Cyclo::root_power(2, 1), Cyclo::from_i64(-1));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(7), 6);
    }
}

//! Rational functions in one variable over a [`Field`].

use std::fmt;
use std::marker::PhantomData;

use super::dense::{self, Dense};
use super::field::Field;

/// Display name of the variable of a [`UniRatFunc`].
pub trait VarName: Send + Sync + 'static {
    const NAME: &'static str;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Z;
impl VarName for Z {
    const NAME: &'static str = "z";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha;
impl VarName for Alpha {
    const NAME: &'static str = "a";
}

/// Laurent polynomial `x^low * (c[0] + c[1] x + ...)` with `c[0] != 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<F> {
    pub low: i32,
    pub c: Dense<F>,
}

impl<F: Field> Laurent<F> {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            c: Vec::new(),
        }
    }

    pub fn monomial(c: F, e: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { low: e, c: vec![c] }
        }
    }

    pub fn from_parts(low: i32, mut c: Dense<F>) -> Self {
        dense::trim(&mut c);
        let lead = c.iter().take_while(|x| x.is_zero()).count();
        if lead == c.len() {
            return Self::zero();
        }
        c.drain(..lead);
        Laurent {
            low: low + lead as i32,
            c,
        }
    }

    /// Collects `(exponent, coefficient)` pairs.
    pub fn from_terms(it: impl IntoIterator<Item = (i32, F)>) -> Self {
        let items: Vec<(i32, F)> = it.into_iter().collect();
        if items.is_empty() {
            return Self::zero();
        }
        let lo = items.iter().map(|x| x.0).min().unwrap();
        let hi = items.iter().map(|x| x.0).max().unwrap();
        let mut c = vec![F::zero(); (hi - lo + 1) as usize];
        for (e, x) in items {
            let slot = &mut c[(e - lo) as usize];
            *slot = slot.plus(&x);
        }
        Self::from_parts(lo, c)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn high(&self) -> i32 {
        self.low + self.c.len() as i32 - 1
    }

    fn aligned(&self, other: &Self) -> (i32, Dense<F>, Dense<F>) {
        if self.is_zero() {
            return (other.low, Vec::new(), other.c.clone());
        }
        if other.is_zero() {
            return (self.low, self.c.clone(), Vec::new());
        }
        let lo = self.low.min(other.low);
        let pad = |l: &Laurent<F>| {
            let mut v = vec![F::zero(); (l.low - lo) as usize];
            v.extend(l.c.iter().cloned());
            v
        };
        (lo, pad(self), pad(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (lo, a, b) = self.aligned(other);
        Self::from_parts(lo, dense::add(&a, &b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (lo, a, b) = self.aligned(other);
        Self::from_parts(lo, dense::sub(&a, &b))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_parts(self.low + other.low, dense::mul(&self.c, &other.c))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &F)> {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (self.low + k as i32, x))
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        Some(dense::eval(&self.c, x).times(&x.pow_i(self.low as i64)?))
    }
}

/// A normalized fraction: the denominator is a monic polynomial with
/// nonzero constant term, coprime to the numerator.
pub struct UniRatFunc<F, V> {
    num: Laurent<F>,
    den: Dense<F>,
    _v: PhantomData<V>,
}

impl<F: Clone, V> Clone for UniRatFunc<F, V> {
    fn clone(&self) -> Self {
        UniRatFunc {
            num: self.num.clone(),
            den: self.den.clone(),
            _v: PhantomData,
        }
    }
}

impl<F: PartialEq, V> PartialEq for UniRatFunc<F, V> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<F: Field, V: VarName> UniRatFunc<F, V> {
    pub fn var() -> Self {
        Self::from_laurent(Laurent::monomial(F::one(), 1))
    }

    pub fn from_laurent(num: Laurent<F>) -> Self {
        UniRatFunc {
            num,
            den: vec![F::one()],
            _v: PhantomData,
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_laurent(Laurent::monomial(c, 0))
    }

    /// `num / den`; `None` when `den` is zero.
    pub fn new(num: Laurent<F>, den: Laurent<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_laurent(num));
        }
        let mut low = num.low - den.low;
        let g = dense::gcd(&num.c, &den.c);
        let (mut n, _) = dense::divrem(&num.c, &g);
        let (mut d, _) = dense::divrem(&den.c, &g);
        let lc = d.last().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inverse().unwrap();
            n = dense::scale(&n, &inv);
            d = dense::scale(&d, &inv);
        }
        // d already has nonzero constant term because den.c[0] != 0
        let lead = n.iter().take_while(|x| x.is_zero()).count();
        n.drain(..lead);
        low += lead as i32;
        Some(UniRatFunc {
            num: Laurent { low, c: n },
            den: d,
            _v: PhantomData,
        })
    }

    pub fn num(&self) -> &Laurent<F> {
        &self.num
    }

    pub fn den(&self) -> &Dense<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }

    /// Evaluation at a point of the coefficient field; `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = dense::eval(&self.den, x);
        if d.is_zero() {
            return None;
        }
        self.num.eval(x)?.divided(&d)
    }

    fn den_laurent(&self) -> Laurent<F> {
        Laurent {
            low: 0,
            c: self.den.clone(),
        }
    }
}

impl<F: Field, V: VarName> Field for UniRatFunc<F, V> {
    fn zero() -> Self {
        Self::from_laurent(Laurent::zero())
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn from_int(n: &num_bigint::BigInt) -> Self {
        Self::constant(F::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            return Self::new(n, self.den_laurent()).unwrap();
        }
        let n = self
            .num
            .mul(&other.den_laurent())
            .add(&other.num.mul(&self.den_laurent()));
        Self::new(n, self.den_laurent().mul(&other.den_laurent())).unwrap()
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let n = self.num.mul(&other.num);
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_laurent(n);
        }
        Self::new(n, self.den_laurent().mul(&other.den_laurent())).unwrap()
    }
    fn negated(&self) -> Self {
        UniRatFunc {
            num: Laurent {
                low: self.num.low,
                c: self.num.c.iter().map(|x| x.negated()).collect(),
            },
            den: self.den.clone(),
            _v: PhantomData,
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(self.den_laurent(), self.num.clone())
    }
    fn is_monomial(&self) -> bool {
        self.is_polynomial() && self.num.terms().count() == 1
    }
}

impl<F: Field, V: VarName> fmt::Display for UniRatFunc<F, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = laurent_text::<F, V>(&self.num);
        if self.is_polynomial() {
            return write!(f, "{num}");
        }
        let den = laurent_text::<F, V>(&Laurent {
            low: 0,
            c: self.den.clone(),
        });
        write!(f, "({num})/({den})")
    }
}

impl<F: Field, V: VarName> fmt::Debug for UniRatFunc<F, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn laurent_text<F: Field, V: VarName>(p: &Laurent<F>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (e, c) in p.terms() {
        let var = match e {
            0 => String::new(),
            1 => V::NAME.to_string(),
            _ => format!("{}^{e}", V::NAME),
        };
        let cs = c.to_string();
        let simple = !cs[1..].contains([' ', '+', '-']);
        let (neg, body) = match cs.strip_prefix('-') {
            Some(rest) if simple => (true, rest.to_string()),
            _ => (false, cs.clone()),
        };
        if !out.is_empty() {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let body = if simple { body } else { format!("({body})") };
        match (var.is_empty(), body.as_str()) {
            (true, _) => out.push_str(&body),
            (false, "1") => out.push_str(&var),
            (false, _) => out.push_str(&format!("{body}*{var}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = UniRatFunc<BigRational, Alpha>;

    fn r(n: i64) -> R {
        R::from_i64(n)
    }

    #[test]
    fn cancellation() {
        let a = R::var();
        // (a^2 - 1)/(a - 1) = a + 1
        let x = a.times(&a).minus(&r(1)).divided(&a.minus(&r(1))).unwrap();
        assert_eq!(x, a.plus(&r(1)));
        assert!(x.is_polynomial());
    }

    #[test]
    fn evaluation_and_pole() {
        let a = R::var();
        let x = r(1).divided(&a.plus(&r(3))).unwrap();
        assert_eq!(
            x.eval(&BigRational::from_i64(1)),
            Some(BigRational::new(1.into(), 4.into()))
        );
        assert_eq!(x.eval(&BigRational::from_i64(-3)), None);
    }

    #[test]
    fn laurent_normalizes_monomials() {
        let a = R::var();
        let x = a.inverse().unwrap().times(&a.times(&a));
        assert_eq!(x, a);
        assert_eq!(format!("{}", a.inverse().unwrap()), "a^-1");
    }
}

//! Sparse Laurent polynomials in `x_1, ..., x_N` over a [`Field`].

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::exact::{Field, ToJson};

/// Maximum number of variables a [`Mono`] can hold.
pub const MAX_VARS: usize = 12;

/// Exponent vector; ordered graded-lexicographically (total degree first,
/// then `x_1 > x_2 > ...`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    deg: i32,
    e: [i16; MAX_VARS],
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn from_exps(exps: &[i64]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Mono::default();
        for (k, &x) in exps.iter().enumerate() {
            m.e[k] = i16::try_from(x).expect("exponent out of range");
            m.deg += x as i32;
        }
        m
    }

    pub fn from_u32(exps: &[u32]) -> Self {
        Mono::from_exps(&exps.iter().map(|&x| x as i64).collect::<Vec<_>>())
    }

    /// The variable `x_{k+1}` (0-based `k`).
    pub fn var(k: usize) -> Self {
        let mut m = Mono::default();
        m.e[k] = 1;
        m.deg = 1;
        m
    }

    /// Exponent of the 0-based variable `k`.
    #[inline]
    pub fn get(&self, k: usize) -> i64 {
        self.e[k] as i64
    }

    #[inline]
    pub fn set(&mut self, k: usize, x: i64) {
        self.deg += (x - self.e[k] as i64) as i32;
        self.e[k] = i16::try_from(x).expect("exponent out of range");
    }

    #[inline]
    pub fn bump(&mut self, k: usize, by: i64) {
        self.set(k, self.get(k) + by);
    }

    pub fn degree(&self) -> i64 {
        self.deg as i64
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for k in 0..MAX_VARS {
            m.e[k] += o.e[k];
        }
        m.deg += o.deg;
        m
    }

    /// Swaps two 0-based variables.
    #[inline]
    pub fn swapped(&self, a: usize, b: usize) -> Mono {
        let mut m = *self;
        m.e.swap(a, b);
        m
    }

    pub fn exps(&self, n: usize) -> Vec<i64> {
        (0..n).map(|k| self.get(k)).collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.e.iter().all(|&x| x >= 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| self.e.cmp(&other.e))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.e)
    }
}

/// A Laurent polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<F> {
    n: usize,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::monomial(n, Mono::one(), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn monomial(n: usize, m: Mono, c: F) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `x_{k+1}` for 0-based `k`.
    pub fn var(n: usize, k: usize) -> Self {
        assert!(k < n);
        Self::monomial(n, Mono::var(k), F::one())
    }

    /// `x_{k+1} - c` for 0-based `k`.
    pub fn var_minus(n: usize, k: usize, c: F) -> Self {
        let mut p = Self::var(n, k);
        p.add_term(Mono::one(), c.negated());
        p
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Mono, F)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Mono, F)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Mono) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> F {
        self.coeff(&Mono::from_u32(exps))
    }

    /// Leading term in graded lex order.
    pub fn leading(&self) -> Option<(&Mono, &F)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        big.add_assign(small);
        big
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.negated());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        self.map_coeffs(|x| x.times(c))
    }

    fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, f(c))).collect(),
        }
    }

    /// Multiplies by a monomial `c x^m`.
    pub fn mul_monomial(&self, m: &Mono, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.mul(m), x.times(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        if other.len() == 1 {
            let (m, c) = other.leading().unwrap();
            return self.mul_monomial(m, c);
        }
        if self.len() == 1 {
            let (m, c) = self.leading().unwrap();
            return other.mul_monomial(m, c);
        }
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.times(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Maximal total degree; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn homogeneous_component(&self, d: i64) -> Self {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of maximal degree.
    pub fn top_component(&self) -> Self {
        match self.degree() {
            None => self.clone(),
            Some(d) => self.homogeneous_component(d),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.is_polynomial())
    }

    /// Swaps the 0-based variables `a` and `b`.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swapped(a, b), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|k| self.swap_vars(k, k + 1) == *self)
    }

    /// Evaluates at a point; `None` when a negative power of zero occurs.
    pub fn eval(&self, point: &[F]) -> Option<F> {
        assert_eq!(point.len(), self.n, "point has wrong dimension");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (k, x) in point.iter().enumerate() {
                let e = m.get(k);
                if e != 0 {
                    term = term.times(&x.pow_i(e)?);
                }
            }
            acc = acc.plus(&term);
        }
        Some(acc)
    }

    /// Substitutes each variable by a polynomial in `target_n` variables.
    pub fn substitute(&self, images: &[MultiPoly<F>], target_n: usize) -> MultiPoly<F> {
        assert_eq!(images.len(), self.n);
        let mut powers: Vec<BTreeMap<i64, MultiPoly<F>>> = vec![BTreeMap::new(); self.n];
        let mut out = MultiPoly::zero(target_n);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target_n, c.clone());
            for (k, img) in images.iter().enumerate() {
                let e = m.get(k);
                if e == 0 {
                    continue;
                }
                assert!(
                    e > 0 || img.len() == 1,
                    "negative power of a non-monomial image"
                );
                let pw = powers[k].entry(e).or_insert_with(|| {
                    if e > 0 {
                        img.pow(e as u32)
                    } else {
                        let (mm, cc) = img.leading().unwrap();
                        let inv = Mono::from_exps(
                            &mm.exps(target_n).iter().map(|x| x * e).collect::<Vec<_>>(),
                        );
                        MultiPoly::monomial(target_n, inv, cc.pow_i(e).unwrap())
                    }
                });
                term = term.mul(pw);
            }
            out.add_assign(&term);
        }
        out
    }

    /// Applies a coefficient map that may fail (e.g. a specialization).
    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<MultiPoly<G>, E> {
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Exact quotient by `x_a - c x_b` (0-based `a != b`); `None` if not divisible.
    pub fn div_linear(&self, a: usize, b: usize, c: &F) -> Option<Self> {
        // group by the exponents of all variables except x_a and x_b, then run
        // synthetic division in x_a on each homogeneous slice in (x_a, x_b)
        let mut groups: BTreeMap<(Mono, i64), BTreeMap<i64, F>> = BTreeMap::new();
        for (m, coef) in &self.terms {
            let mut rest = *m;
            let ea = m.get(a);
            let eb = m.get(b);
            rest.set(a, 0);
            rest.set(b, 0);
            groups
                .entry((rest, ea + eb))
                .or_default()
                .insert(ea, coef.clone());
        }
        let mut out = Self::zero(self.n);
        for ((rest, total), slice) in groups {
            // slice: sum_k f_k x_a^k x_b^(total-k); divide by (x_a - c x_b)
            let lo = *slice.keys().next().unwrap();
            let hi = *slice.keys().next_back().unwrap();
            let mut carry = F::zero();
            for k in (lo..=hi).rev() {
                let fk = slice.get(&k).cloned().unwrap_or_else(F::zero);
                let qk = fk.plus(&carry);
                if k == lo {
                    if !qk.is_zero() {
                        return None;
                    }
                    break;
                }
                // quotient term qk x_a^(k-1) x_b^(total-k)
                let mut m = rest;
                m.set(a, k - 1);
                m.set(b, total - k);
                out.add_term(m, qk.clone());
                carry = qk.times(c);
            }
        }
        Some(out)
    }

    /// Returns `s` with `self = s * other` when `s` is a single field scalar.
    pub fn scalar_ratio(&self, other: &Self) -> Option<F> {
        match (self.leading(), other.leading()) {
            (None, None) => Some(F::one()),
            (Some((m1, c1)), Some((m2, c2))) if m1 == m2 => {
                let s = c1.divided(c2)?;
                if self.len() == other.len() && other.scale(&s) == *self {
                    Some(s)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Equality up to a signed monomial in the parameters.
    pub fn star_equal(&self, other: &Self) -> bool {
        self.scalar_ratio(other).is_some_and(|s| s.is_monomial())
    }

    /// Text form like `x1^2*x2 - (1 - q)*x3`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.n).map(|k| format!("x{k}")).collect();
        self.to_text_named(&names)
    }

    /// Text form with the given variable names.
    pub fn to_text_named(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.n);
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let vars: Vec<String> = (0..self.n)
                .filter(|&k| m.get(k) != 0)
                .map(|k| match m.get(k) {
                    1 => names[k].clone(),
                    e => format!("{}^{}", names[k], e),
                })
                .collect();
            let vars = vars.join("*");
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '(']) => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let compound = body.contains(' ') || body.contains('(');
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (vars.is_empty(), body.as_str()) {
                (true, _) => out.push_str(&body),
                (false, "1") => out.push_str(&vars),
                (false, _) if compound => out.push_str(&format!("({body})*{vars}")),
                (false, _) => out.push_str(&format!("{body}*{vars}")),
            }
        }
        out
    }
}

impl<F: Field + ToJson> MultiPoly<F> {
    /// JSON form: `{"nvars": N, "terms": [{"x": [...], "c": scalar}, ...]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| json!({"x": m.exps(self.n), "c": c.to_json()}))
            .collect();
        json!({"nvars": self.n, "terms": terms})
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{BigRational, RatFunc};

    type P = MultiPoly<BigRational>;

    fn x(n: usize, k: usize) -> P {
        P::var(n, k)
    }

    #[test]
    fn arithmetic_and_order() {
        let p = x(2, 0).add(&x(2, 1)).pow(2);
        assert_eq!(p.to_text(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(p.sub(&p), P::zero(2));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn linear_division() {
        let c = BigRational::from_i64(3);
        let lin = x(3, 0).sub(&x(3, 2).scale(&c));
        let g = x(3, 1).pow(2).add(&x(3, 0)).add(&P::one(3));
        let prod = lin.mul(&g);
        assert_eq!(prod.div_linear(0, 2, &c), Some(g.clone()));
        assert_eq!(g.div_linear(0, 2, &c), None);
    }

    #[test]
    fn substitution() {
        // (x1 + x2)(x1 - x2) at x1 -> y, x2 -> 2
        let p = x(2, 0).add(&x(2, 1)).mul(&x(2, 0).sub(&x(2, 1)));
        let images = vec![P::var(1, 0), P::constant(1, BigRational::from_i64(2))];
        let r = p.substitute(&images, 1);
        assert_eq!(
            r,
            P::var(1, 0)
                .pow(2)
                .sub(&P::constant(1, BigRational::from_i64(4)))
        );
    }

    #[test]
    fn star_equality() {
        let q = RatFunc::q();
        let p: MultiPoly<RatFunc> = MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1));
        assert!(p.scale(&q.negated()).star_equal(&p));
        let not_mono = RatFunc::one().plus(&q);
        assert!(!p.scale(&not_mono).star_equal(&p));
        assert_eq!(p.scale(&not_mono).scalar_ratio(&p), Some(not_mono));
    }
}

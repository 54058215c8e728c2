//! Sparse Laurent polynomials in `q, t` with integer coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, UPoly};

/// Exponent pair of a monomial `q^q t^t`.
///
/// Ordered graded-lexicographically with `q > t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct QtExp {
    pub q: i32,
    pub t: i32,
}

impl QtExp {
    pub const fn new(q: i32, t: i32) -> Self {
        QtExp { q, t }
    }
    fn add(self, o: QtExp) -> QtExp {
        QtExp::new(self.q + o.q, self.t + o.t)
    }
    fn sub(self, o: QtExp) -> QtExp {
        QtExp::new(self.q - o.q, self.t - o.t)
    }
}

impl Ord for QtExp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q + self.t, self.q).cmp(&(other.q + other.t, other.q))
    }
}

impl PartialOrd for QtExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms are kept sorted increasingly with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: Vec<(QtExp, BigInt)>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, q: i32, t: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QTPoly {
                terms: vec![(QtExp::new(q, t), c)],
            }
        }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (QtExp, BigInt)>) -> Self {
        let mut map: HashMap<QtExp, BigInt> = HashMap::new();
        for (e, c) in it {
            *map.entry(e).or_default() += c;
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<QtExp, BigInt>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        QTPoly { terms }
    }

    pub fn terms(&self) -> &[(QtExp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == QtExp::default() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if *e == QtExp::default() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(QtExp, BigInt)> {
        self.terms.last()
    }

    /// Componentwise minimum exponent; `(0,0)` for the zero polynomial.
    pub fn min_exp(&self) -> QtExp {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return QtExp::default();
        };
        let mut m = *first;
        for (e, _) in it {
            m.q = m.q.min(e.q);
            m.t = m.t.min(e.t);
        }
        m
    }

    pub fn max_exp(&self) -> QtExp {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return QtExp::default();
        };
        let mut m = *first;
        for (e, _) in it {
            m.q = m.q.max(e.q);
            m.t = m.t.max(e.t);
        }
        m
    }

    pub fn shift(&self, by: QtExp) -> Self {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(by), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        QTPoly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return QTPoly {
                terms: self.terms.iter().map(|(f, x)| (f.add(*e), x * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut map: HashMap<QtExp, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                *map.entry(e1.add(*e2)).or_default() += c1 * c2;
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Substitutes `q -> q^aq t^at`, `t -> q^bq t^bt`.
    pub fn subs_monomial(&self, q_to: QtExp, t_to: QtExp) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            (
                QtExp::new(e.q * q_to.q + e.t * t_to.q, e.q * q_to.t + e.t * t_to.t),
                c.clone(),
            )
        }))
    }

    /// Exact division in the Laurent ring `Z[q^±, t^±]`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (f, x) in &self.terms {
                let (quo, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push((f.sub(*e), quo));
            }
            return Some(QTPoly { terms: out });
        }
        let ma = self.min_exp();
        let mb = other.min_exp();
        let a = self.shift(QtExp::new(-ma.q, -ma.t));
        let b = other.shift(QtExp::new(-mb.q, -mb.t));
        let quo = a.div_poly(&b)?;
        Some(quo.shift(ma.sub(mb)))
    }

    /// Polynomial division for inputs with non-negative exponents.
    fn div_poly(&self, b: &Self) -> Option<Self> {
        let mut rem: std::collections::BTreeMap<QtExp, BigInt> =
            self.terms.iter().cloned().collect();
        let (lb_e, lb_c) = b.leading().unwrap().clone();
        let mut quo = Vec::new();
        while let Some((&e, _)) = rem.last_key_value() {
            let c = rem.remove(&e).unwrap();
            let d = e.sub(lb_e);
            if d.q < 0 || d.t < 0 {
                return None;
            }
            let (qc, r) = c.div_rem(&lb_c);
            if !r.is_zero() {
                return None;
            }
            for (be, bc) in &b.terms[..b.terms.len() - 1] {
                let key = be.add(d);
                let entry = rem.entry(key).or_default();
                *entry -= &qc * bc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quo.push((d, qc));
        }
        quo.reverse();
        Some(QTPoly { terms: quo })
    }

    /// Gcd in `Z[q^±, t^±]`, normalized to have no monomial factor and a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let c = self.content().gcd(&other.content());
        if self.terms.len() == 1 || other.terms.len() == 1 {
            return Self::constant(c);
        }
        let a = self.primitive_part();
        let b = other.primitive_part();
        if a == b {
            return a.scale(&c);
        }
        if a.terms.len() <= b.terms.len() {
            if b.div_exact(&a).is_some() {
                return a.scale(&c);
            }
        } else if a.div_exact(&b).is_some() {
            return b.scale(&c);
        }
        let g = gcd_heuristic(&a, &b).unwrap_or_else(|| gcd_prs(&a, &b));
        g.scale(&c)
    }

    /// Removes monomial factors and integer content, leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let m = self.min_exp();
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        QTPoly {
            terms: self.terms.iter().map(|(e, x)| (e.sub(m), x / &c)).collect(),
        }
    }

    /// Multiplies by the unit that removes monomial factors and makes the
    /// leading coefficient positive.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let m = self.min_exp();
        let neg = self.leading().unwrap().1.is_negative();
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.sub(m), if neg { -x } else { x.clone() }))
                .collect(),
        }
    }

    /// Dense representation for non-negative exponents: `out[i]` is the
    /// coefficient of `q^i`, a polynomial in `t`.
    fn to_dense(&self) -> Vec<UPoly> {
        let mx = self.max_exp();
        let mut out = vec![Vec::new(); mx.q as usize + 1];
        for (e, c) in &self.terms {
            let row = &mut out[e.q as usize];
            if row.len() <= e.t as usize {
                row.resize(e.t as usize + 1, BigInt::zero());
            }
            row[e.t as usize] = c.clone();
        }
        out
    }

    fn from_dense(rows: &[UPoly]) -> Self {
        let mut terms = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((QtExp::new(i as i32, j as i32), c.clone()));
                }
            }
        }
        terms.sort_unstable_by_key(|a| a.0);
        QTPoly { terms }
    }

    fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Evaluates at integer or rational points given as closures on exponents.
    pub fn eval_with<T, F>(&self, mut term: F, zero: T) -> T
    where
        F: FnMut(QtExp, &BigInt) -> T,
        T: std::ops::Add<Output = T>,
    {
        let mut acc = zero;
        for (e, c) in &self.terms {
            acc = acc + term(*e, c);
        }
        acc
    }

    pub fn degree_q(&self) -> i32 {
        self.max_exp().q
    }

    pub fn degree_t(&self) -> i32 {
        self.max_exp().t
    }

    /// Text form in `q, t`; integer coefficients are printed as-is.
    pub fn write_terms(&self, f: &mut impl fmt::Write, denom: Option<&BigInt>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let coeff = match denom {
                Some(d) => num_rational::BigRational::new(c.clone(), d.clone()),
                None => num_rational::BigRational::from_integer(c.clone()),
            };
            let mut vars = Vec::new();
            for (name, ex) in [("q", e.q), ("t", e.t)] {
                match ex {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{ex}")),
                }
            }
            super::write_term(f, k == 0, &coeff, &vars.join("*"))?;
        }
        Ok(())
    }
}

fn eval_t(p: &QTPoly, xi: &BigInt) -> UPoly {
    let dense = p.to_dense();
    let mut out: UPoly = dense.iter().map(|row| upoly::eval(row, xi)).collect();
    upoly::trim(&mut out);
    out
}

fn gcd_heuristic(a: &QTPoly, b: &QTPoly) -> Option<QTPoly> {
    let mut xi: BigInt = BigInt::from(2) * a.max_abs_coeff().min(b.max_abs_coeff()) + 29;
    let deg = (a.degree_t().max(b.degree_t()) + 1) as u64;
    for _ in 0..6 {
        if xi.bits() * deg > 40_000 {
            return None;
        }
        let ga = eval_t(a, &xi);
        let gb = eval_t(b, &xi);
        // a and b are primitive with no monomial factor, so the images keep
        // their q-degree unless xi is a root of the leading t-coefficient.
        if ga.len() == a.degree_q() as usize + 1 && gb.len() == b.degree_q() as usize + 1 {
            let gamma = upoly::gcd(&ga, &gb);
            let rows: Vec<UPoly> = gamma
                .into_iter()
                .map(|c| upoly::interpolate_int(c, &xi))
                .collect();
            let cand = QTPoly::from_dense(&rows).primitive_part();
            if !cand.is_zero() && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Recursive primitive PRS over `Z[t][q]`; inputs primitive without monomial factors.
fn gcd_prs(a: &QTPoly, b: &QTPoly) -> QTPoly {
    let da = a.to_dense();
    let db = b.to_dense();
    let ca = dense_content(&da);
    let cb = dense_content(&db);
    let c = upoly::gcd(&ca, &cb);
    let mut x = dense_primitive(&da);
    let mut y = dense_primitive(&db);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = dense_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { dense_primitive(&r) };
    }
    let g: Vec<UPoly> = x.iter().map(|row| upoly::mul(row, &c)).collect();
    QTPoly::from_dense(&g).primitive_part()
}

fn dense_trim(p: &mut Vec<UPoly>) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn dense_content(p: &[UPoly]) -> UPoly {
    let mut g: UPoly = Vec::new();
    for row in p {
        if row.is_empty() {
            continue;
        }
        g = upoly::gcd(&g, row);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn dense_primitive(p: &[UPoly]) -> Vec<UPoly> {
    let c = dense_content(p);
    let mut out: Vec<UPoly> = p
        .iter()
        .map(|row| upoly::div_exact(row, &c).expect("content divides"))
        .collect();
    dense_trim(&mut out);
    out
}

fn dense_prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let mut r: Vec<UPoly> = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = upoly::mul(c, &lb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = upoly::sub(&r[shift + j], &upoly::mul(&lr, bj));
        }
        dense_trim(&mut r);
    }
    r
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, None)
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(c: i64, q: i32, t: i32) -> QTPoly {
        QTPoly::monomial(BigInt::from(c), q, t)
    }

    fn one_minus(q: i32, t: i32) -> QTPoly {
        QTPoly::one().sub(&m(1, q, t))
    }

    #[test]
    fn geometric_quotient() {
        let num = one_minus(3, 3);
        let den = one_minus(1, 1);
        let expect = m(1, 0, 0).add(&m(1, 1, 1)).add(&m(1, 2, 2));
        assert_eq!(num.div_exact(&den), Some(expect));
        assert_eq!(den.div_exact(&num), None);
    }

    #[test]
    fn laurent_division() {
        let a = one_minus(1, 0).mul(&m(3, -2, 5));
        assert_eq!(a.div_exact(&one_minus(1, 0)), Some(m(3, -2, 5)));
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = one_minus(1, 1);
        let g = one_minus(2, 0).add(&m(3, 0, 1));
        let h = m(1, 1, 0).add(&m(-2, 0, 3));
        let a = f.mul(&g).mul(&m(6, 0, 0));
        let b = f.mul(&h).mul(&m(4, 3, 1));
        let expect = f.normalize_unit().scale(&BigInt::from(2));
        assert_eq!(a.gcd(&b), expect);
        assert_eq!(
            gcd_prs(&a.primitive_part(), &b.primitive_part()),
            f.normalize_unit()
        );
    }

    #[test]
    fn gcd_coprime() {
        let a = one_minus(1, 0);
        let b = one_minus(0, 1);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn ordering_is_graded() {
        assert!(QtExp::new(0, 3) > QtExp::new(2, 0));
        assert!(QtExp::new(2, 0) > QtExp::new(1, 1));
    }
}

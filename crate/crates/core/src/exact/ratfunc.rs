//! Rational functions in `q, t` with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::qtpoly::{QTPoly, QtExp};

/// Canonical fraction of integer Laurent polynomials.
///
/// Invariants: the numerator and denominator are coprime in `Z[q,t]`
/// (including integer content), the denominator has no monomial factor
/// and a positive leading coefficient. Zero is `0/1`. Canonical form makes
/// structural equality decide equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QTPoly,
    den: QTPoly,
}

impl RatFunc {
    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * q^a * t^b`.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        Self::from_poly(QTPoly::monomial(BigInt::from(c), a, b))
    }

    pub fn from_poly(num: QTPoly) -> Self {
        RatFunc {
            num,
            den: QTPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            QTPoly::constant(r.numer().clone()),
            QTPoly::constant(r.denom().clone()),
        )
    }

    /// Normalizes `num / den`. Panics on a zero denominator.
    pub fn new(num: QTPoly, den: QTPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::fix_units(num, den)
    }

    /// Moves monomial factors and the sign of the denominator into the numerator.
    fn fix_units(num: QTPoly, den: QTPoly) -> Self {
        let m = den.min_exp();
        let (mut num, mut den) = if m == QtExp::default() {
            (num, den)
        } else {
            let back = QtExp::new(-m.q, -m.t);
            (num.shift(back), den.shift(back))
        };
        if den.leading().unwrap().1.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &QTPoly {
        &self.num
    }

    pub fn den(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Some when the value is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    /// `(c, e)` when the value is `c * q^e.q * t^e.t`.
    pub fn as_monomial(&self) -> Option<(BigRational, QtExp)> {
        if !self.num.is_monomial() {
            return None;
        }
        let d = self.den.as_constant()?;
        let (e, c) = &self.num.terms()[0];
        Some((BigRational::new(c.clone(), d), *e))
    }

    /// Substitutes `q -> 1/q`, `t -> 1/t`.
    pub fn invert_params(&self) -> Self {
        let inv = |p: &QTPoly| p.subs_monomial(QtExp::new(-1, 0), QtExp::new(0, -1));
        Self::fix_units(inv(&self.num), inv(&self.den))
    }

    /// Substitutes monomials for `q` and `t`; `None` if the denominator vanishes
    /// (it cannot, being a nonzero polynomial mapped by an injective map, unless
    /// the substitution is degenerate).
    pub fn subs_monomial(&self, q_to: QtExp, t_to: QtExp) -> Option<Self> {
        let d = self.den.subs_monomial(q_to, t_to);
        if d.is_zero() {
            return None;
        }
        Some(Self::new(self.num.subs_monomial(q_to, t_to), d))
    }

    /// Evaluates at rational `q, t`; `None` at a pole.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let ev = |p: &QTPoly| -> Option<BigRational> {
            let mut acc = <BigRational as Field>::zero();
            for (e, c) in p.terms() {
                let term = BigRational::from_integer(c.clone())
                    * q.pow_i(e.q as i64)?
                    * t.pow_i(e.t as i64)?;
                acc += term;
            }
            Some(acc)
        };
        let d = ev(&self.den)?;
        if Field::is_zero(&d) {
            return None;
        }
        Some(ev(&self.num)? / d)
    }

    /// Multiplies by `c * q^e.q * t^e.t` without any gcd work.
    pub fn scale_monomial(&self, c: &BigInt, e: QtExp) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let dc = self.den.content();
        let g = c.gcd(&dc);
        if g.is_one() {
            return RatFunc {
                num: self.num.shift(e).scale(c),
                den: self.den.clone(),
            };
        }
        let cg = c / &g;
        let den = self.den.div_exact(&QTPoly::constant(g)).unwrap();
        RatFunc {
            num: self.num.shift(e).scale(&cg),
            den,
        }
    }

    fn monomial_parts(&self) -> Option<(BigInt, QtExp)> {
        if self.num.is_monomial() && self.den.is_one() {
            let (e, c) = &self.num.terms()[0];
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn pow(&self, n: i32) -> Self {
        if n < 0 {
            return self.inverse().expect("negative power of zero").pow(-n);
        }
        RatFunc {
            num: self.num.pow(n as u32),
            den: self.den.pow(n as u32),
        }
    }

    /// Size heuristic used by tests and reports.
    pub fn complexity(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// Text form such as `1 - q*t^2 + 3/2*q^2` or `(1 - q)/(1 - q*t)`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(d) = self.den.as_constant() {
            let d = if d.is_one() { None } else { Some(d) };
            self.num.write_terms(&mut s, d.as_ref()).unwrap();
        } else {
            s.push('(');
            self.num.write_terms(&mut s, None).unwrap();
            s.push_str(")/(");
            self.den.write_terms(&mut s, None).unwrap();
            s.push(')');
        }
        s
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: QTPoly::zero(),
            den: QTPoly::one(),
        }
    }
    fn one() -> Self {
        Self::from_poly(QTPoly::one())
    }
    fn from_int(n: &BigInt) -> Self {
        Self::from_poly(QTPoly::constant(n.clone()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            // gcd(a*d + c, d) = gcd(c, d) = 1
            return RatFunc {
                num: self.num.mul(&other.den).add(&other.num),
                den: other.den.clone(),
            };
        }
        if other.den.is_one() {
            return RatFunc {
                num: other.num.mul(&self.den).add(&self.num),
                den: self.den.clone(),
            };
        }
        let g = self.den.gcd(&other.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = other.den.div_exact(&g).unwrap();
        let n = self.num.mul(&d1).add(&other.num.mul(&b1));
        if n.is_zero() {
            return Self::zero();
        }
        if g.is_one() {
            return Self::fix_units(n, b1.mul(&d1));
        }
        let h = n.gcd(&g);
        if h.is_one() {
            return Self::fix_units(n, b1.mul(&other.den));
        }
        let n = n.div_exact(&h).unwrap();
        let den = b1.mul(&other.den.div_exact(&h).unwrap());
        Self::fix_units(n, den)
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((c, e)) = other.monomial_parts() {
            return self.scale_monomial(&c, e);
        }
        if let Some((c, e)) = self.monomial_parts() {
            return other.scale_monomial(&c, e);
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1).unwrap()
        };
        let d = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.div_exact(&g1).unwrap()
        };
        let c = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.div_exact(&g2).unwrap()
        };
        let b = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).unwrap()
        };
        Self::fix_units(a.mul(&c), b.mul(&d))
    }
    fn negated(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::fix_units(self.den.clone(), self.num.clone()))
    }
    fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.as_constant().is_some()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(a: i32, b: i32) -> RatFunc {
        RatFunc::one().minus(&RatFunc::monomial(1, a, b))
    }

    #[test]
    fn quotient_is_reduced() {
        let x = one_minus(3, 3).divided(&one_minus(1, 1)).unwrap();
        assert!(x.is_polynomial());
        assert_eq!(x.to_text(), "1 + q*t + q^2*t^2");
    }

    #[test]
    fn denominator_is_canonical() {
        // 1/(t - 1) == -1/(1 - t)
        let a = RatFunc::one()
            .divided(&RatFunc::t().minus(&RatFunc::one()))
            .unwrap();
        let b = RatFunc::one().divided(&one_minus(0, 1)).unwrap().negated();
        assert_eq!(a, b);
        // q^-2/(q^-1 - 1) == 1/(q - q^2)
        let c = RatFunc::monomial(1, -2, 0)
            .divided(&RatFunc::monomial(1, -1, 0).minus(&RatFunc::one()))
            .unwrap();
        let d = RatFunc::one()
            .divided(&RatFunc::q().minus(&RatFunc::monomial(1, 2, 0)))
            .unwrap();
        assert_eq!(c, d);
        assert_eq!(d.num(), &QTPoly::monomial(BigInt::from(-1), -1, 0));
    }

    #[test]
    fn rational_coefficients() {
        let x = RatFunc::from_rational(&BigRational::new(3.into(), 2.into()))
            .times(&RatFunc::monomial(1, 2, 0));
        let y = RatFunc::one().minus(&RatFunc::monomial(1, 1, 2)).plus(&x);
        assert_eq!(y.to_text(), "1 + 3/2*q^2 - q*t^2");
    }

    #[test]
    fn henrici_sum() {
        // 1/(1-q) + 1/(1-q)(1-t) = (2-t)/((1-q)(1-t))
        let a = one_minus(1, 0).inverse().unwrap();
        let b = one_minus(1, 0).times(&one_minus(0, 1)).inverse().unwrap();
        let s = a.plus(&b);
        let expect = RatFunc::from_i64(2)
            .minus(&RatFunc::t())
            .divided(&one_minus(1, 0).times(&one_minus(0, 1)))
            .unwrap();
        assert_eq!(s, expect);
        assert!(s.minus(&b).minus(&a).is_zero());
    }

    #[test]
    fn inversion_of_parameters() {
        let x = one_minus(1, 0).divided(&one_minus(0, 1)).unwrap();
        // (1 - 1/q)/(1 - 1/t) = t(q-1)/(q(t-1))
        let expect = RatFunc::t()
            .times(&RatFunc::q().minus(&RatFunc::one()))
            .divided(&RatFunc::q().times(&RatFunc::t().minus(&RatFunc::one())))
            .unwrap();
        assert_eq!(x.invert_params(), expect);
    }
}

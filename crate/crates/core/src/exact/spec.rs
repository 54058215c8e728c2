//! Specializations `q -> w^a z^b`, `t -> w^c z^d` with `w` a root of unity.

use std::fmt;

use num_integer::Integer;

use super::cyclo::Cyclo;
use super::field::Field;
use super::qtpoly::QTPoly;
use super::ratfunc::RatFunc;
use super::unirf::{Laurent, UniRatFunc, Z};
use crate::error::AlgebraError;

/// Rational functions in `z` over `Q(w)`.
pub type SpecRF = UniRatFunc<Cyclo, Z>;

/// Image `w^root * z^z` of a parameter, `w` a primitive `order`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonoImage {
    pub root: i64,
    pub z: i32,
}

/// A monomial specialization of `(q, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecMap {
    order: u32,
    q: MonoImage,
    t: MonoImage,
}

impl SpecMap {
    /// Builds the map and reduces the root order to the smallest one used.
    pub fn new(order: u32, q: MonoImage, t: MonoImage) -> Self {
        assert!(order >= 1);
        let n = order as i64;
        let mut q = MonoImage {
            root: q.root.rem_euclid(n),
            z: q.z,
        };
        let mut t = MonoImage {
            root: t.root.rem_euclid(n),
            z: t.z,
        };
        let g = n.gcd(&q.root).gcd(&t.root);
        q.root /= g;
        t.root /= g;
        SpecMap {
            order: (n / g) as u32,
            q,
            t,
        }
    }

    /// `q -> z^a`, `t -> z^b`.
    pub fn pure(a: i32, b: i32) -> Self {
        Self::new(1, MonoImage { root: 0, z: a }, MonoImage { root: 0, z: b })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn q_image(&self) -> MonoImage {
        self.q
    }

    pub fn t_image(&self) -> MonoImage {
        self.t
    }

    pub fn q(&self) -> SpecRF {
        self.image(self.q)
    }

    pub fn t(&self) -> SpecRF {
        self.image(self.t)
    }

    fn image(&self, m: MonoImage) -> SpecRF {
        SpecRF::from_laurent(Laurent::monomial(
            Cyclo::root_power(self.order, m.root),
            m.z,
        ))
    }

    fn poly_image(&self, p: &QTPoly, roots: &[Cyclo]) -> Laurent<Cyclo> {
        let n = self.order as i64;
        Laurent::from_terms(p.terms().iter().map(|(e, c)| {
            let k = (self.q.root * e.q as i64 + self.t.root * e.t as i64).rem_euclid(n);
            let z = self.q.z * e.q + self.t.z * e.t;
            (z, roots[k as usize].times(&Cyclo::from_int(c)))
        }))
    }

    /// Image of a rational function; fails if the denominator vanishes.
    pub fn apply(&self, f: &RatFunc) -> Result<SpecRF, AlgebraError> {
        let roots: Vec<Cyclo> = (0..self.order as i64)
            .map(|k| Cyclo::root_power(self.order, k))
            .collect();
        let den = self.poly_image(f.den(), &roots);
        if den.is_zero() {
            return Err(AlgebraError::PoleAtSpecialization {
                spec: self.to_string(),
                den: f.den().to_string(),
            });
        }
        let num = self.poly_image(f.num(), &roots);
        Ok(SpecRF::new(num, den).expect("nonzero denominator"))
    }

    /// Parses `q=z^3,t=z^-1`, `q=z,t=w[3]*z^-1`, `q=z,t=-q^-1` and similar.
    ///
    /// Each side is a product of `-1`, `w[n]` or `w[n]^e`, `z^k`, and (for
    /// `t`) `q^k`. A missing parameter defaults to `z`.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let err = |msg: &str| AlgebraError::Parse(format!("specialization `{s}`: {msg}"));
        // images as (root numerator, root denominator, z power)
        let mut q_img: Option<(i64, i64, i32)> = None;
        let mut t_img: Option<(i64, i64, i32)> = None;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (lhs, rhs) = part
                .split_once('=')
                .ok_or_else(|| err("expected `name=value`"))?;
            let img = parse_image(rhs.trim(), q_img).map_err(|m| err(&m))?;
            match lhs.trim() {
                "q" => q_img = Some(img),
                "t" => t_img = Some(img),
                other => return Err(err(&format!("unknown parameter `{other}`"))),
            }
        }
        let q_img = q_img.unwrap_or((0, 1, 1));
        let t_img = t_img.ok_or_else(|| err("missing `t=`"))?;
        let order = q_img.1.lcm(&t_img.1);
        let q = MonoImage {
            root: q_img.0 * (order / q_img.1),
            z: q_img.2,
        };
        let t = MonoImage {
            root: t_img.0 * (order / t_img.1),
            z: t_img.2,
        };
        Ok(Self::new(order as u32, q, t))
    }
}

/// Returns `(a, n, k)` for the value `exp(2 pi i a/n) z^k`.
fn parse_image(s: &str, q: Option<(i64, i64, i32)>) -> Result<(i64, i64, i32), String> {
    let mut root = (0i64, 1i64);
    let mut zpow = 0i32;
    let mut add_root = |a: i64, n: i64| {
        let l = root.1.lcm(&n);
        root = ((root.0 * (l / root.1) + a * (l / n)).rem_euclid(l), l);
    };
    let mut rest = s.trim();
    if let Some(r) = rest.strip_prefix('-') {
        add_root(1, 2);
        rest = r.trim_start();
    }
    for factor in rest.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err("empty factor".into());
        }
        if factor == "1" {
            continue;
        }
        if factor == "-1" {
            add_root(1, 2);
            continue;
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (
                b.trim(),
                e.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("bad exponent in `{factor}`"))?,
            ),
            None => (factor, 1),
        };
        if base == "z" {
            zpow += exp as i32;
        } else if base == "q" {
            let (a, n, k) = q.ok_or("`q` used before it is defined")?;
            add_root(a * exp, n);
            zpow += k * exp as i32;
        } else if let Some(inner) = base.strip_prefix("w[").and_then(|b| b.strip_suffix(']')) {
            let n: i64 = inner
                .parse()
                .map_err(|_| format!("bad root order in `{factor}`"))?;
            if n < 1 {
                return Err("root order must be positive".into());
            }
            add_root(exp, n);
        } else {
            return Err(format!("unrecognized factor `{factor}`"));
        }
    }
    Ok((root.0, root.1, zpow))
}

impl fmt::Display for SpecMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |m: MonoImage| {
            let mut parts = Vec::new();
            if m.root != 0 {
                parts.push(if m.root == 1 {
                    format!("w[{}]", self.order)
                } else {
                    format!("w[{}]^{}", self.order, m.root)
                });
            }
            if m.z != 0 {
                parts.push(if m.z == 1 {
                    "z".to_string()
                } else {
                    format!("z^{}", m.z)
                });
            }
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        };
        write!(f, "q={},t={}", side(self.q), side(self.t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let m = SpecMap::parse("q=z^3,t=z^-1").unwrap();
        assert_eq!(m, SpecMap::pure(3, -1));
        let m = SpecMap::parse("q=z,t=-q^-1").unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(m.t_image(), MonoImage { root: 1, z: -1 });
        let m = SpecMap::parse("q=z, t=w[3]*z^-1").unwrap();
        assert_eq!(m.to_string(), "q=z,t=w[3]*z^-1");
        // w[6]^2 is a primitive cube root
        let m = SpecMap::parse("q=z,t=w[6]^2*z^-1").unwrap();
        assert_eq!(m.order(), 3);
        assert!(SpecMap::parse("q=z,t=x").is_err());
    }

    #[test]
    fn pole_is_reported() {
        let m = SpecMap::pure(1, -1);
        let f = RatFunc::one()
            .divided(&RatFunc::one().minus(&RatFunc::q().times(&RatFunc::t())))
            .unwrap();
        assert!(matches!(
            m.apply(&f),
            Err(AlgebraError::PoleAtSpecialization { .. })
        ));
        let g = RatFunc::one()
            .divided(&RatFunc::one().minus(&RatFunc::q()))
            .unwrap();
        assert!(m.apply(&g).is_ok());
    }

    #[test]
    fn root_of_unity_specialization() {
        // 1 + t + t^2 vanishes at t = w
        let m = SpecMap::parse("q=z,t=w[3]").unwrap();
        let f = RatFunc::one()
            .plus(&RatFunc::t())
            .plus(&RatFunc::t().times(&RatFunc::t()));
        assert!(m.apply(&f).unwrap().is_zero());
    }
}

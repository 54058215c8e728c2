//! Principal specializations, the rectangular admissible locus, and the
//! clustering factorizations of `P_{m^k}`, `E_{m^k 0^{N-k}}` and the
//! permuted rectangles `u(β)`.

pub mod appendix;
pub mod examples;
pub mod staircase;
pub mod verify;

use num_integer::Integer;

use crate::combinatorics::{
    hook_product, infinite_extension_pairs, nprime_stat, pochhammer_qt, poincare_poly, poincare_sn,
    size, sort_decreasing, spectral_inf_exponents, spectral_vector,
};
use crate::error::AlgebraError;
use crate::exact::{cyclotomic, Field, MonoImage, Params, QTPoly, QtExp, RatFunc, SpecMap, SpecRF};
use crate::macdonald::{div_or_pole, Family, MacCache};
use crate::poly::MultiPoly;

fn signed<F: Field>(x: F, odd: bool) -> F {
    if odd {
        x.negated()
    } else {
        x
    }
}

/// `M_v(0) = (-1)^{|v|} (t^N q; q,t)_{v⁺} / h(v, qt)`.
pub fn principal_m0<F: Field>(v: &[u32], p: &Params<F>) -> Result<F, AlgebraError> {
    let n = v.len() as i64;
    let num = pochhammer_qt(&p.mono(1, n), &sort_decreasing(v), p);
    let den = hook_product(v, &p.q.times(&p.t), p);
    Ok(signed(
        div_or_pole(&num, &den, "h(v,qt)")?,
        size(v) % 2 == 1,
    ))
}

/// Closed form for `E_v(⟨0⟩)`, up to a signed monomial.
pub fn principal_e0<F: Field>(v: &[u32], p: &Params<F>) -> Result<F, AlgebraError> {
    let n = v.len() as i64;
    let num = pochhammer_qt(&p.mono(1, n), &sort_decreasing(v), p);
    div_or_pole(&num, &hook_product(v, &p.q.times(&p.t), p), "h(v,qt)")
}

/// `M_{λ⁻}(0) = (-1)^{|λ|} (t^N; q,t)_λ / h(λ,t) · φ(S_λ)/φ(S_N)`.
pub fn principal_mrev<F: Field>(lam: &[u32], p: &Params<F>) -> Result<F, AlgebraError> {
    let n = lam.len() as i64;
    let num = pochhammer_qt(&p.t_pow(n), lam, p).times(&poincare_poly(lam, p));
    let den = hook_product(lam, &p.t, p).times(&poincare_sn(lam.len(), p));
    Ok(signed(
        div_or_pole(&num, &den, "h(λ,t) φ(S_N)")?,
        size(lam) % 2 == 1,
    ))
}

/// Closed form for `P_λ(⟨0⟩)`, up to a signed monomial.
pub fn principal_p0<F: Field>(lam: &[u32], p: &Params<F>) -> Result<F, AlgebraError> {
    let n = lam.len() as i64;
    div_or_pole(
        &pochhammer_qt(&p.t_pow(n), lam, p),
        &hook_product(lam, &p.t, p),
        "h(λ,t)",
    )
}

/// Product over the pairs of the infinite extension `v^∞`.
pub fn lascoux_product<F: Field>(v: &[u32], p: &Params<F>) -> Result<F, AlgebraError> {
    let one = F::one();
    let mut num = one.clone();
    let mut den = one.clone();
    for (i, j) in infinite_extension_pairs(v) {
        let (ai, bi) = spectral_inf_exponents(v, i);
        let (aj, bj) = spectral_inf_exponents(v, j);
        let r = p.mono(ai - aj, bi - bj);
        num = num.times(&p.t.times(&r).minus(&one));
        den = den.times(&r.minus(&one));
    }
    Ok(signed(
        div_or_pole(&num, &den, "Lascoux factor")?,
        size(v) % 2 == 1,
    ))
}

/// Ratio `M_{v s_i}(0) / M_v(0)` predicted for `v[i] < v[i+1]` (1-based `i`).
pub fn intertwiner_m0_ratio<F: Field>(
    v: &[u32],
    i: usize,
    p: &Params<F>,
) -> Result<F, AlgebraError> {
    let sv = spectral_vector(v, p);
    let r = sv[i]
        .divided(&sv[i - 1])
        .expect("spectral entries are monomials");
    let one = F::one();
    div_or_pole(
        &one.minus(&p.t.times(&r)),
        &one.minus(&r),
        "1 - ⟨v⟩[i+1]/⟨v⟩[i]",
    )
}

/// Rectangle `[m^k, 0^{N-k}]` with the exponent of `q` in the defining
/// relation `q^a t^{N-k+1} = 1`: `a = m-1` (symmetric) or `a = m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectSpec {
    pub m: u32,
    pub k: usize,
    pub n: usize,
    pub symmetric: bool,
}

impl RectSpec {
    pub fn new(m: u32, k: usize, n: usize, symmetric: bool) -> Result<Self, AlgebraError> {
        if m == 0 || k == 0 || 2 * k > n {
            return Err(AlgebraError::InvalidRect(format!(
                "m={m}, k={k}, N={n} (need m,k ≥ 1 and 2k ≤ N)"
            )));
        }
        Ok(RectSpec { m, k, n, symmetric })
    }

    pub fn q_exponent(&self) -> u32 {
        if self.symmetric {
            self.m - 1
        } else {
            self.m
        }
    }

    pub fn t_exponent(&self) -> u32 {
        (self.n - self.k + 1) as u32
    }

    /// `(d, m0, n0)` with `d = gcd(a, N-k+1)`, `a = d m0`, `N-k+1 = d n0`.
    pub fn reduced(&self) -> (u32, u32, u32) {
        let (a, b) = (self.q_exponent(), self.t_exponent());
        let d = a.gcd(&b);
        (d, a / d, b / d)
    }

    pub fn rectangle(&self) -> Vec<u32> {
        crate::combinatorics::rectangle(self.m, self.k, self.n)
    }
}

/// One map `q = z^{n0}`, `t = ω z^{-m0}` for each primitive `d`-th root `ω`.
pub fn admissible_specializations(spec: &RectSpec) -> Vec<SpecMap> {
    let (d, m0, n0) = spec.reduced();
    let roots: Vec<u32> = if d == 1 {
        vec![0]
    } else {
        (1..d).filter(|kk| kk.gcd(&d) == 1).collect()
    };
    roots
        .into_iter()
        .map(|kk| {
            SpecMap::new(
                n0 * d,
                MonoImage {
                    root: 0,
                    z: n0 as i32,
                },
                MonoImage {
                    root: kk as i64,
                    z: -(m0 as i32),
                },
            )
        })
        .collect()
}

/// Whether `q^a t^b = 1` under `map` and no `q^{a/e} t^{b/e} = 1` for a
/// common divisor `e > 1`.
pub fn is_admissible(spec: &RectSpec, map: &SpecMap) -> bool {
    let (a, b) = (spec.q_exponent() as i32, spec.t_exponent() as i32);
    let is_one = |x: i32, y: i32| {
        map.apply(&RatFunc::monomial(1, x, y))
            .map(|v| v.is_one())
            .unwrap_or(false)
    };
    let g = (a as u32).gcd(&(b as u32)) as i32;
    is_one(a, b)
        && (2..=g)
            .filter(|e| g % e == 0)
            .all(|e| !is_one(a / e, b / e))
}

/// `Φ_d(q^{m0} t^{n0})`, the irreducible factor of `1 - q^a t^{N-k+1}`
/// vanishing on the admissible locus.
pub fn locus_factor(spec: &RectSpec) -> QTPoly {
    let (d, m0, n0) = spec.reduced();
    let phi = cyclotomic(d);
    QTPoly::from_terms(
        phi.iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| {
                (
                    QtExp::new((m0 as usize * i) as i32, (n0 as usize * i) as i32),
                    c.clone(),
                )
            }),
    )
}

/// `1 - q^a t^{N-k+1}`.
pub fn literal_factor(spec: &RectSpec) -> QTPoly {
    QTPoly::one().sub(&QTPoly::monomial(
        1.into(),
        spec.q_exponent() as i32,
        spec.t_exponent() as i32,
    ))
}

pub fn divides(f: &QTPoly, g: &QTPoly) -> bool {
    !g.is_zero() && g.div_exact(f).is_some()
}

/// `𝒟^y_{N,k,m}(x_1..x_k) = ∏_{i≤k} ∏_{j<m} (x_i - y t^{N-k} q^j)` in the
/// variables `x_1..x_k, y`.
pub fn resultant_d<F: Field>(n: usize, k: usize, m: u32, p: &Params<F>) -> MultiPoly<F> {
    let y = MultiPoly::<F>::var(k + 1, k);
    let mut acc = MultiPoly::one(k + 1);
    for i in 0..k {
        for j in 0..m {
            let c = p.mono(j as i64, (n - k) as i64);
            acc = acc.mul(&MultiPoly::var(k + 1, i).sub(&y.scale(&c)));
        }
    }
    acc
}

/// Images of `x_1..x_N` for `f(x_1,…,x_k, y t^{N-k-1},…,y t, y)` in the
/// variables `x_1..x_k, y`.
pub fn clustered_point<F: Field>(n: usize, k: usize, p: &Params<F>) -> Vec<MultiPoly<F>> {
    let y = MultiPoly::<F>::var(k + 1, k);
    (0..n)
        .map(|i| {
            if i < k {
                MultiPoly::var(k + 1, i)
            } else {
                y.scale(&p.t_pow((n - 1 - i) as i64))
            }
        })
        .collect()
}

/// Images `x_1 t^{N-k},…,x_k t^{N-k}, t^{N-k-1},…,t,1` in `k` variables.
fn restriction_point<F: Field>(n: usize, k: usize, p: &Params<F>) -> Vec<MultiPoly<F>> {
    (0..n)
        .map(|i| {
            if i < k {
                MultiPoly::var(k, i).scale(&p.t_pow((n - k) as i64))
            } else {
                MultiPoly::constant(k, p.t_pow((n - 1 - i) as i64))
            }
        })
        .collect()
}

/// Checks `f_v(x_1 t^{N-k},…,x_k t^{N-k}, t^{N-k-1},…,1) = t^{(N-k)|v|} f^{(k)}_{v^{(k)}}`
/// for `f = M` (compositions) or `f = MS` (partitions).
pub fn restrict_to_k<F: Field>(
    fam: Family,
    index: &[u32],
    k: usize,
    p: &Params<F>,
) -> Result<bool, AlgebraError> {
    let n = index.len();
    if k == 0 || k >= n || index[k..].iter().any(|&x| x != 0) {
        return Err(AlgebraError::LengthTooLarge(format!(
            "ℓ({index:?}) must be at most k = {k} < N"
        )));
    }
    let mut big = MacCache::new(p.clone());
    let mut small = MacCache::new(p.clone());
    let (lhs, rhs) = match fam {
        Family::M => (big.m(index)?, small.m(&index[..k])?),
        Family::MS => (big.ms(index)?, small.ms(&index[..k])?),
        _ => {
            return Err(AlgebraError::Invalid(format!(
                "restriction is stated for M and MS, not {fam}"
            )))
        }
    };
    let restricted = lhs.substitute(&restriction_point(n, k, p), k);
    Ok(restricted == rhs.scale(&p.t_pow(((n - k) as u32 * size(index)) as i64)))
}

/// Product form of `M_{[m^{N-k}, (m+1)^k]}`. The prefactor `q^{m(k+(m-1)N/2)}`
/// equals `q^{n'(v)}`, so this is the monic rescaling `q^{n'(v)} M_v`.
pub fn almost_rect_m<F: Field>(m: u32, k: usize, n: usize, p: &Params<F>) -> MultiPoly<F> {
    let one = MultiPoly::one(n);
    let mut acc = one.clone();
    for i in 0..n {
        let len = if i < n - k { m } else { m + 1 };
        for j in 0..len {
            acc = acc.mul(&one.sub(&MultiPoly::var(n, i).scale(&p.q_pow(-(j as i64)))));
        }
    }
    let m = m as i64;
    let e = m * (k as i64) + m * (m - 1) * (n as i64) / 2;
    let s = p.q_pow(e);
    acc.scale(&signed(s, (n as i64 * m + k as i64) % 2 == 1))
}

/// `[m^{N-k}, (m+1)^k]`.
pub fn almost_rect_index(m: u32, k: usize, n: usize) -> Vec<u32> {
    (0..n).map(|i| if i < n - k { m } else { m + 1 }).collect()
}

/// Specializes every coefficient through `map`.
pub fn specialize(
    f: &MultiPoly<RatFunc>,
    map: &SpecMap,
) -> Result<MultiPoly<SpecRF>, AlgebraError> {
    f.try_map(|c| map.apply(c))
}

/// A family member at a specialization: built directly over the specialized
/// field when the recursion meets no pole, otherwise built generically and
/// then specialized.
pub fn family_at(
    fam: Family,
    index: &[u32],
    map: &SpecMap,
    generic: &mut MacCache<RatFunc>,
) -> Result<MultiPoly<SpecRF>, AlgebraError> {
    let mut direct = MacCache::new(Params::from_map(map));
    match direct.basic(fam, index) {
        Ok(f) => Ok((*f).clone()),
        Err(AlgebraError::PoleAtSpecialization { .. }) => {
            specialize(&*generic.basic(fam, index)?, map)
        }
        Err(e) => Err(e),
    }
}

/// `q^{n'(v)}`, turning the `M`/`MS` leading coefficient into 1.
pub fn monic_shift<F: Field>(index: &[u32], p: &Params<F>) -> F {
    p.q_pow(nprime_stat(index) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_up_to;

    #[test]
    fn principal_values_small() {
        let p = Params::<RatFunc>::generic();
        assert_eq!(principal_m0(&[0, 0], &p).unwrap(), RatFunc::one());
        assert_eq!(principal_m0(&[1], &p).unwrap(), RatFunc::one().negated());
        let one = RatFunc::one();
        let t = RatFunc::t();
        assert_eq!(principal_p0(&[1, 0], &p).unwrap(), one.plus(&t));
        assert_eq!(principal_mrev(&[1, 0], &p).unwrap(), one.negated());
    }

    #[test]
    fn lascoux_equals_hook_form() {
        let p = Params::<RatFunc>::generic();
        for v in compositions_up_to(3, 3) {
            assert_eq!(
                lascoux_product(&v, &p).unwrap(),
                principal_m0(&v, &p).unwrap(),
                "{v:?}"
            );
        }
    }

    #[test]
    fn admissible_maps_examples() {
        let s = RectSpec::new(2, 2, 4, true).unwrap();
        assert_eq!(admissible_specializations(&s), vec![SpecMap::pure(3, -1)]);
        let s = RectSpec::new(3, 1, 2, true).unwrap();
        let maps = admissible_specializations(&s);
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].t().times(&maps[0].q()), SpecRF::one().negated());
        assert!(is_admissible(&s, &maps[0]));
        assert!(!is_admissible(&s, &SpecMap::pure(1, -1)));
        let s = RectSpec::new(5, 2, 4, true).unwrap();
        assert_eq!(admissible_specializations(&s), vec![SpecMap::pure(3, -4)]);
        let s = RectSpec::new(4, 2, 4, true).unwrap();
        assert_eq!(admissible_specializations(&s).len(), 2);
        assert!(RectSpec::new(2, 3, 4, true).is_err());
    }

    #[test]
    fn resultant_small() {
        let p = Params::<RatFunc>::generic();
        let d = resultant_d(4, 1, 1, &p);
        let expect = MultiPoly::var(2, 0).sub(&MultiPoly::var(2, 1).scale(&p.t_pow(3)));
        assert_eq!(d, expect);
        assert_eq!(resultant_d(2, 1, 3, &p).degree(), Some(3));
    }

    #[test]
    fn almost_rectangular() {
        let p = Params::<RatFunc>::generic();
        let mut c = MacCache::new(p.clone());
        for (m, k, n) in [(0, 0, 2), (1, 0, 2), (1, 1, 2), (1, 1, 3), (2, 1, 2)] {
            let idx = almost_rect_index(m, k, n);
            let monic = c.m(&idx).unwrap().scale(&monic_shift(&idx, &p));
            assert_eq!(almost_rect_m(m, k, n, &p), monic, "{idx:?}");
        }
    }

    #[test]
    fn restrictions() {
        let p = Params::<RatFunc>::generic();
        assert!(restrict_to_k(Family::M, &[2, 0], 1, &p).unwrap());
        assert!(restrict_to_k(Family::MS, &[1, 0, 0], 1, &p).unwrap());
        assert!(restrict_to_k(Family::M, &[1, 1, 0], 2, &p).unwrap());
        assert!(restrict_to_k(Family::M, &[0, 1], 1, &p).is_err());
    }

    #[test]
    fn locus_factor_divides_literal() {
        for (m, k, n) in [(3, 1, 2), (4, 2, 4), (3, 1, 4), (2, 2, 4)] {
            let s = RectSpec::new(m, k, n, true).unwrap();
            assert!(divides(&locus_factor(&s), &literal_factor(&s)));
        }
    }
}

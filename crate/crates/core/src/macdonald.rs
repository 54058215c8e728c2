//! The four families `E_v`, `M_v`, `P_λ`, `MS_λ`, their normalizations and
//! the generalized binomial coefficients.
//!
//! `M_v` is built along the Yang-Baxter graph: descents are removed by the
//! intertwiner `T_i + (1-t)/(1 - ⟨v⟩[i+1]/⟨v⟩[i])` and weakly increasing
//! vectors are reached through the raising step `f ↦ (f τ)(x_N - 1)`.
//! `E_v` follows the same path with the homogeneous raising step
//! `f ↦ q^{v_1} (f τ) x_N`, which is the top-degree part of the former.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::combinatorics::{
    conjugate, contained, hook_product, is_partition, n_stat, nprime_stat, partitions_up_to,
    pochhammer_qt, poincare_poly, size, sort_decreasing, sort_increasing, spectral_exponents,
    spectral_vector,
};
use crate::error::AlgebraError;
use crate::exact::{Field, Params, RatFunc};
use crate::hecke::{apply_t, apply_tau, symmetrize};
use crate::linalg;
use crate::poly::{Mono, MultiPoly};

pub type Poly<F> = Arc<MultiPoly<F>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    E,
    M,
    P,
    MS,
}

/// `Monic` is the basic normalization of each family (`E_v`, `P_λ` monic,
/// `M_v` with leading coefficient `q^{-n'(v)}`); `Rm` the roman variants
/// `𝔼, 𝕄, ℙ, 𝕄𝕊`; `J` the integral form of `P`; `CalE` Knop's `ℰ_v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Norm {
    Monic,
    Rm,
    J,
    CalE,
}

impl Family {
    pub fn symmetric(self) -> bool {
        matches!(self, Family::P | Family::MS)
    }
}

impl FromStr for Family {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "E" => Ok(Family::E),
            "M" => Ok(Family::M),
            "P" => Ok(Family::P),
            "MS" => Ok(Family::MS),
            _ => Err(AlgebraError::Parse(format!(
                "unknown family {s:?} (expected E, M, P or MS)"
            ))),
        }
    }
}

impl FromStr for Norm {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "monic" => Ok(Norm::Monic),
            "rm" => Ok(Norm::Rm),
            "J" => Ok(Norm::J),
            "calE" => Ok(Norm::CalE),
            _ => Err(AlgebraError::Parse(format!("unknown normalization {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::E => "E",
            Family::M => "M",
            Family::P => "P",
            Family::MS => "MS",
        };
        f.write_str(s)
    }
}

pub(crate) fn pole<F: Field>(what: &str, den: &F) -> AlgebraError {
    AlgebraError::PoleAtSpecialization {
        spec: what.to_string(),
        den: den.to_string(),
    }
}

pub(crate) fn div_or_pole<F: Field>(a: &F, b: &F, what: &str) -> Result<F, AlgebraError> {
    a.divided(b).ok_or_else(|| pole(what, b))
}

/// Environment variable bounding the number of memoized polynomials per cache.
pub const CACHE_LIMIT_VAR: &str = "MACDONALD_CACHE_LIMIT";

/// Memo tables for one parameter context.
///
/// When `MACDONALD_CACHE_LIMIT` is set, all tables are dropped whenever the
/// number of stored polynomials would exceed it.
pub struct MacCache<F> {
    p: Params<F>,
    limit: Option<usize>,
    m: HashMap<Vec<u32>, Poly<F>>,
    e: HashMap<Vec<u32>, Poly<F>>,
    sym_p: HashMap<Vec<u32>, Poly<F>>,
    sym_ms: HashMap<Vec<u32>, Poly<F>>,
}

impl<F: Field> MacCache<F> {
    pub fn new(p: Params<F>) -> Self {
        let limit = std::env::var(CACHE_LIMIT_VAR)
            .ok()
            .and_then(|v| v.parse().ok());
        MacCache {
            p,
            limit,
            m: HashMap::new(),
            e: HashMap::new(),
            sym_p: HashMap::new(),
            sym_ms: HashMap::new(),
        }
    }

    pub fn params(&self) -> &Params<F> {
        &self.p
    }

    /// Overrides the limit read from `MACDONALD_CACHE_LIMIT`.
    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    fn make_room(&mut self) {
        if self.limit.is_some_and(|l| self.cache_len() >= l) {
            self.m.clear();
            self.e.clear();
            self.sym_p.clear();
            self.sym_ms.clear();
        }
    }

    /// Shifted nonsymmetric `M_v`.
    pub fn m(&mut self, v: &[u32]) -> Result<Poly<F>, AlgebraError> {
        self.nonsym(v, true)
    }

    /// Nonsymmetric `E_v`, monic in `x^v`.
    pub fn e(&mut self, v: &[u32]) -> Result<Poly<F>, AlgebraError> {
        self.nonsym(v, false)
    }

    fn nonsym(&mut self, v: &[u32], shifted: bool) -> Result<Poly<F>, AlgebraError> {
        let table = if shifted { &self.m } else { &self.e };
        if let Some(f) = table.get(v) {
            return Ok(f.clone());
        }
        let n = v.len();
        let out = if v.iter().all(|&x| x == 0) {
            MultiPoly::one(n)
        } else if let Some(i) = (1..n).find(|&i| v[i - 1] > v[i]) {
            let mut w = v.to_vec();
            w.swap(i - 1, i);
            let prev = self.nonsym(&w, shifted)?;
            let c = intertwiner_constant(&w, i, &self.p)?;
            apply_t(&prev, i, &self.p).add(&prev.scale(&c))
        } else {
            let mut w = Vec::with_capacity(n);
            w.push(v[n - 1] - 1);
            w.extend_from_slice(&v[..n - 1]);
            let prev = self.nonsym(&w, shifted)?;
            let rot = apply_tau(&prev, &self.p);
            let xn = Mono::var(n - 1);
            if shifted {
                rot.mul_monomial(&xn, &F::one()).sub(&rot)
            } else {
                rot.mul_monomial(&xn, &self.p.q_pow(w[0] as i64))
            }
        };
        let out = Arc::new(out);
        self.make_room();
        let table = if shifted { &mut self.m } else { &mut self.e };
        table.insert(v.to_vec(), out.clone());
        Ok(out)
    }

    /// Monic symmetric `P_λ` from `E_{λ⁻} 𝒮_N`.
    pub fn p(&mut self, lam: &[u32]) -> Result<Poly<F>, AlgebraError> {
        check_partition(lam)?;
        if let Some(f) = self.sym_p.get(lam) {
            return Ok(f.clone());
        }
        let e = self.e(&sort_increasing(lam))?;
        let s = symmetrize(&e, &self.p);
        let lead = s.coeff_of(lam);
        let phi = poincare_poly(lam, &self.p);
        debug_assert!(lead == phi, "x^λ coefficient of E_λ⁻ S_N is not φ_t(S_λ)");
        let out = Arc::new(s.scale(&div_or_pole(&F::one(), &lead, "x^λ coefficient of E S_N")?));
        self.make_room();
        self.sym_p.insert(lam.to_vec(), out.clone());
        Ok(out)
    }

    /// Shifted symmetric `MS_λ = M_{λ⁻} 𝒮_N / φ_t(S_λ)`.
    pub fn ms(&mut self, lam: &[u32]) -> Result<Poly<F>, AlgebraError> {
        check_partition(lam)?;
        if let Some(f) = self.sym_ms.get(lam) {
            return Ok(f.clone());
        }
        let m = self.m(&sort_increasing(lam))?;
        let s = symmetrize(&m, &self.p);
        let phi = poincare_poly(lam, &self.p);
        let out = Arc::new(s.scale(&div_or_pole(
            &F::one(),
            &phi,
            "Poincaré polynomial φ_t(S_λ)",
        )?));
        self.make_room();
        self.sym_ms.insert(lam.to_vec(), out.clone());
        Ok(out)
    }

    /// Any family in its basic normalization.
    pub fn basic(&mut self, fam: Family, index: &[u32]) -> Result<Poly<F>, AlgebraError> {
        match fam {
            Family::E => self.e(index),
            Family::M => self.m(index),
            Family::P => self.p(index),
            Family::MS => self.ms(index),
        }
    }

    /// Any family in any valid normalization.
    pub fn family(
        &mut self,
        fam: Family,
        norm: Norm,
        index: &[u32],
    ) -> Result<MultiPoly<F>, AlgebraError> {
        let f = self.basic(fam, index)?;
        let s = norm_factor(fam, norm, index, &self.p)?;
        Ok(if s.is_one() {
            (*f).clone()
        } else {
            f.scale(&s)
        })
    }

    pub fn cache_len(&self) -> usize {
        self.m.len() + self.e.len() + self.sym_p.len() + self.sym_ms.len()
    }
}

fn check_partition(lam: &[u32]) -> Result<(), AlgebraError> {
    if is_partition(lam) {
        Ok(())
    } else {
        Err(AlgebraError::Invalid(format!("{lam:?} is not a partition")))
    }
}

/// `(1 - t)/(1 - ⟨v⟩[i+1]/⟨v⟩[i])` for the step `v → v s_i`, `v[i] < v[i+1]`.
pub fn intertwiner_constant<F: Field>(
    v: &[u32],
    i: usize,
    p: &Params<F>,
) -> Result<F, AlgebraError> {
    let sp = spectral_exponents(v);
    let (a1, b1) = sp[i - 1];
    let (a2, b2) = sp[i];
    let den = p.one_minus(a2 - a1, b2 - b1);
    div_or_pole(&F::one().minus(&p.t), &den, "Yang-Baxter intertwiner")
}

/// Scalar turning the basic normalization into `norm`.
///
/// * `𝔼_v = t^{n(v)}/c'_v E_v`, `ℰ_v = c''_v E_v`
/// * `𝕄_v = q^{n'(v)} t^{n(v)}/c'_v M_v`
/// * `ℙ_λ = t^{n(λ)}/c'_λ P_λ`, `J_λ = c_λ P_λ`
/// * `𝕄𝕊_λ = q^{n'(λ)} t^{n(λ)}/c'_λ MS_λ`
pub fn norm_factor<F: Field>(
    fam: Family,
    norm: Norm,
    index: &[u32],
    p: &Params<F>,
) -> Result<F, AlgebraError> {
    let c_prime = || hook_product(index, &p.q, p);
    let tn = p.t_pow(n_stat(index) as i64);
    let qn = p.q_pow(nprime_stat(index) as i64);
    match (fam, norm) {
        (_, Norm::Monic) => Ok(F::one()),
        (Family::E | Family::P, Norm::Rm) => div_or_pole(&tn, &c_prime(), "c'"),
        (Family::M | Family::MS, Norm::Rm) => div_or_pole(&qn.times(&tn), &c_prime(), "c'"),
        (Family::P, Norm::J) => Ok(hook_product(index, &p.t, p)),
        (Family::E, Norm::CalE) => Ok(hook_product(index, &p.q.times(&p.t), p)),
        _ => Err(AlgebraError::Invalid(format!(
            "normalization {norm:?} is not defined for family {fam}"
        ))),
    }
}

/// `τ_v`, defined by `𝕄_v(0,…,0) = τ_v 𝔼_v(⟨0⟩)`.
pub fn tau_v<F: Field>(v: &[u32], cache: &mut MacCache<F>) -> Result<F, AlgebraError> {
    let n = v.len();
    let p = cache.params().clone();
    let m0 = cache
        .family(Family::M, Norm::Rm, v)?
        .eval(&vec![F::zero(); n])
        .unwrap();
    let zero = spectral_vector(&vec![0; n], &p);
    let e0 = cache.family(Family::E, Norm::Rm, v)?.eval(&zero).unwrap();
    div_or_pole(&m0, &e0, "E_v(⟨0⟩)")
}

/// Closed form `(-1)^{|v|} q^{n'(v)} t^{-n'(v⁺)}`.
pub fn tau_closed<F: Field>(v: &[u32], p: &Params<F>) -> F {
    let s = p.mono(nprime_stat(v) as i64, -(n_stat(&sort_decreasing(v)) as i64));
    if size(v) % 2 == 1 {
        s.negated()
    } else {
        s
    }
}

/// Sahi's binomial `[u v] = M_v(⟨u⟩)/M_v(⟨v⟩)`, computed in the parameters
/// of `cache` (pass a cache over inverted parameters for `(q⁻¹, t⁻¹)`).
pub fn binom_nonsym<F: Field>(
    u: &[u32],
    v: &[u32],
    cache: &mut MacCache<F>,
) -> Result<F, AlgebraError> {
    assert_eq!(u.len(), v.len());
    let m = cache.m(v)?;
    let p = cache.params();
    let num = m.eval(&spectral_vector(u, p)).unwrap();
    let den = m.eval(&spectral_vector(v, p)).unwrap();
    div_or_pole(&num, &den, "M_v(⟨v⟩)")
}

/// Symmetric binomial `(λ μ) = MS_μ(⟨λ⟩)/MS_μ(⟨μ⟩)`.
pub fn binom_sym<F: Field>(
    lam: &[u32],
    mu: &[u32],
    cache: &mut MacCache<F>,
) -> Result<F, AlgebraError> {
    assert_eq!(lam.len(), mu.len());
    let ms = cache.ms(mu)?;
    let p = cache.params();
    let num = ms.eval(&spectral_vector(lam, p)).unwrap();
    let den = ms.eval(&spectral_vector(mu, p)).unwrap();
    div_or_pole(&num, &den, "MS_μ(⟨μ⟩)")
}

/// Expansion `MS_λ = Σ_{μ⊆λ} c_μ P_μ` by the Okounkov-type formula
/// `c_μ = q^{-n'(λ)} (τ_λ/τ_μ) (λ μ)_{q⁻¹,t⁻¹} P_λ(⟨0⟩)/P_μ(⟨0⟩)`.
/// `inv` must be a cache over the inverted parameters.
pub fn okounkov_expand<F: Field>(
    lam: &[u32],
    cache: &mut MacCache<F>,
    inv: &mut MacCache<F>,
) -> Result<Vec<(Vec<u32>, F)>, AlgebraError> {
    check_partition(lam)?;
    let n = lam.len();
    let p = cache.params().clone();
    let zero = spectral_vector(&vec![0; n], &p);
    let p_lam0 = cache.p(lam)?.eval(&zero).unwrap();
    let tau_lam = tau_closed(lam, &p);
    let lead = p.q_pow(-(nprime_stat(lam) as i64));
    let mut out = Vec::new();
    for mu in partitions_up_to(size(lam), n) {
        if !contained(&mu, lam) {
            continue;
        }
        let b = binom_sym(lam, &mu, inv)?;
        if b.is_zero() {
            continue;
        }
        let p_mu0 = cache.p(&mu)?.eval(&zero).unwrap();
        let ratio = div_or_pole(&p_lam0, &p_mu0, "P_μ(⟨0⟩)")?;
        let taus = div_or_pole(&tau_lam, &tau_closed(&mu, &p), "τ_μ")?;
        out.push((mu, lead.times(&taus).times(&b).times(&ratio)));
    }
    Ok(out)
}

/// `Σ c_μ P_μ` for an expansion from [`okounkov_expand`].
pub fn reconstruct<F: Field>(
    terms: &[(Vec<u32>, F)],
    cache: &mut MacCache<F>,
) -> Result<MultiPoly<F>, AlgebraError> {
    let n = terms.first().map_or(0, |(mu, _)| mu.len());
    let mut acc = MultiPoly::zero(n);
    for (mu, c) in terms {
        acc.add_assign(&cache.p(mu)?.scale(c));
    }
    Ok(acc)
}

/// The ratio `P_λ(q⁻¹,t⁻¹) / P_λ(q,t)` as a scalar, or `None` when the two
/// polynomials are not proportional.
pub fn param_inversion_ratio(
    lam: &[u32],
    cache: &mut MacCache<RatFunc>,
) -> Result<Option<RatFunc>, AlgebraError> {
    let p = cache.p(lam)?;
    let swapped = p.try_map(|c| Ok::<_, AlgebraError>(c.invert_params()))?;
    Ok(swapped.scalar_ratio(&p))
}

fn cells(lam: &[u32]) -> Vec<(u32, u32, u32, u32)> {
    // (i, j, arm, leg), 1-based
    let conj = conjugate(lam);
    let mut out = Vec::new();
    for (i, &row) in lam.iter().enumerate() {
        for j in 0..row {
            out.push((
                i as u32 + 1,
                j + 1,
                row - j - 1,
                conj[j as usize] - i as u32 - 1,
            ));
        }
    }
    out
}

/// Product formula for the binomial `(m^k λ)` with `λ ⊆ m^k`.
pub fn lassalle_rect_binom<F: Field>(
    m: u32,
    k: u32,
    lam: &[u32],
    p: &Params<F>,
) -> Result<F, AlgebraError> {
    let one = F::one();
    let k = k as i64;
    let m = m as i64;
    let mut num = one.clone();
    let mut den = one.clone();
    for (i, j, a, l) in cells(lam) {
        let (i, j, a, l) = (i as i64, j as i64, a as i64, l as i64);
        let f1 = p.t_pow(i - k);
        let f2 = p.t_pow(i - 1).minus(&p.mono(j - 1, k));
        let f3 = one.minus(&p.mono(m - j + 1, i - 1));
        num = num.times(&f1).times(&f2).times(&f3);
        den = den
            .times(&one.minus(&p.mono(a, 1 + l)))
            .times(&one.minus(&p.mono(1 + a, l)));
    }
    div_or_pole(&num, &den, "hook factors")
}

/// Hook-product form of [`lassalle_rect_binom`].
pub fn lassalle_rect_binom_hooks<F: Field>(
    m: u32,
    k: u32,
    lam: &[u32],
    p: &Params<F>,
) -> Result<F, AlgebraError> {
    let sz = size(lam) as i64;
    let (k, m) = (k as i64, m as i64);
    let e_t = 3 * n_stat(lam) as i64 - (k - 1) * sz;
    let e_q = m * sz - n_stat(&conjugate(lam)) as i64;
    let mut num = p.mono(e_q, e_t);
    if sz % 2 == 1 {
        num = num.negated();
    }
    num = num
        .times(&pochhammer_qt(&p.t_pow(k), lam, p))
        .times(&pochhammer_qt(&p.q_pow(-m), lam, p));
    let den = hook_product(lam, &p.q, p).times(&hook_product(lam, &p.t, p));
    div_or_pole(&num, &den, "h(λ,q) h(λ,t)")
}

/// `M_v` as the solution of the interpolation problem: vanishing at `⟨u⟩`
/// for `|u| ≤ |v|`, `u ≠ v`, with `x^v`-coefficient `q^{-n'(v)}`.
pub fn shifted_by_interpolation<F: Field>(v: &[u32], p: &Params<F>) -> Option<MultiPoly<F>> {
    let n = v.len();
    let d = size(v);
    let monos: Vec<Vec<u32>> = crate::combinatorics::compositions_up_to(d, n);
    let idx = monos.iter().position(|u| u.as_slice() == v)?;
    let mut rows = Vec::with_capacity(monos.len());
    let mut rhs = Vec::with_capacity(monos.len());
    for (r, w) in monos.iter().enumerate() {
        if r == idx {
            rows.push(
                (0..monos.len())
                    .map(|c| if c == idx { F::one() } else { F::zero() })
                    .collect(),
            );
            rhs.push(p.q_pow(-(nprime_stat(v) as i64)));
            continue;
        }
        let pt = spectral_vector(w, p);
        rows.push(monos.iter().map(|u| pow_point(&pt, u)).collect());
        rhs.push(F::zero());
    }
    let sol = linalg::solve(rows, rhs)?;
    Some(MultiPoly::from_terms(
        n,
        monos.iter().zip(sol).map(|(u, c)| (Mono::from_u32(u), c)),
    ))
}

fn pow_point<F: Field>(pt: &[F], u: &[u32]) -> F {
    pt.iter().zip(u).fold(F::one(), |acc, (x, &e)| {
        acc.times(&x.pow_i(e as i64).unwrap())
    })
}

/// All distinct permutations of `v`, in lexicographically decreasing order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = sort_decreasing(v);
    let mut out = vec![cur.clone()];
    // previous permutation in lexicographic order
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] > cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] < cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    #[test]
    fn cache_limit_clears_tables() {
        let mut c = MacCache::new(Params::generic()).with_limit(Some(3));
        let before = c.p(&[2, 1, 0]).unwrap();
        assert!(c.cache_len() <= 3);
        assert_eq!(*c.p(&[2, 1, 0]).unwrap(), *before);
    }

    use super::*;

    fn cache() -> MacCache<RatFunc> {
        MacCache::new(Params::generic())
    }

    fn x(n: usize, k: usize) -> MultiPoly<RatFunc> {
        MultiPoly::var(n, k)
    }

    #[test]
    fn small_shifted() {
        let mut c = cache();
        assert_eq!(*c.m(&[0, 0]).unwrap(), MultiPoly::one(2));
        let one = MultiPoly::one(1);
        assert_eq!(*c.m(&[1]).unwrap(), x(1, 0).sub(&one));
        // M_[2] = (x/q - 1)(x - 1)
        let q_inv = RatFunc::q().inverse().unwrap();
        let expect = x(1, 0).scale(&q_inv).sub(&one).mul(&x(1, 0).sub(&one));
        assert_eq!(*c.m(&[2]).unwrap(), expect);
    }

    #[test]
    fn leading_coefficients() {
        let mut c = cache();
        let p = Params::generic();
        for v in crate::combinatorics::compositions_up_to(3, 3) {
            let m = c.m(&v).unwrap();
            assert_eq!(m.coeff_of(&v), p.q_pow(-(nprime_stat(&v) as i64)), "{v:?}");
            let e = c.e(&v).unwrap();
            assert_eq!(e.coeff_of(&v), RatFunc::one());
        }
    }

    #[test]
    fn e_is_top_of_m() {
        let mut c = cache();
        let p = Params::generic();
        for v in crate::combinatorics::compositions_up_to(3, 3) {
            let top = c.m(&v).unwrap().homogeneous_component(size(&v) as i64);
            let e = c.e(&v).unwrap();
            assert_eq!(*e, top.scale(&p.q_pow(nprime_stat(&v) as i64)), "{v:?}");
        }
    }

    #[test]
    fn vanishing_of_m20() {
        let mut c = cache();
        let p = Params::generic();
        let m = c.m(&[2, 0]).unwrap();
        for u in [[0, 0], [1, 0], [0, 1], [1, 1], [0, 2]] {
            assert!(m.eval(&spectral_vector(&u, &p)).unwrap().is_zero(), "{u:?}");
        }
        assert!(!m.eval(&spectral_vector(&[2, 0], &p)).unwrap().is_zero());
    }

    #[test]
    fn p_small() {
        let mut c = cache();
        assert_eq!(*c.p(&[1, 0]).unwrap(), x(2, 0).add(&x(2, 1)));
        assert_eq!(*c.p(&[1, 1]).unwrap(), x(2, 0).mul(&x(2, 1)));
        assert!(c.p(&[0, 1]).is_err());
    }

    #[test]
    fn interpolation_small() {
        let p = Params::generic();
        let mut c = cache();
        for v in [vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0]] {
            assert_eq!(
                shifted_by_interpolation(&v, &p).unwrap(),
                *c.m(&v).unwrap(),
                "{v:?}"
            );
        }
    }

    #[test]
    fn permutations() {
        assert_eq!(
            distinct_permutations(&[0, 1, 1]),
            vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]
        );
        assert_eq!(distinct_permutations(&[2, 0, 1]).len(), 6);
    }

    #[test]
    fn norm_tags() {
        let p = Params::generic();
        assert!(norm_factor(Family::E, Norm::J, &[1], &p).is_err());
        assert_eq!(
            norm_factor(Family::P, Norm::J, &[1], &p).unwrap(),
            RatFunc::one().minus(&RatFunc::t())
        );
    }

    #[test]
    fn tau_matches_closed_form() {
        let p = Params::generic();
        let mut c = cache();
        for v in crate::combinatorics::compositions_up_to(3, 3) {
            assert_eq!(tau_v(&v, &mut c).unwrap(), tau_closed(&v, &p), "{v:?}");
        }
    }

    #[test]
    fn okounkov_reconstructs_ms() {
        let p = Params::generic();
        let mut c = cache();
        let mut inv = MacCache::new(p.inverted());
        for lam in [
            vec![1, 0, 0],
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![2, 1, 0],
            vec![2, 2, 0],
        ] {
            let terms = okounkov_expand(&lam, &mut c, &mut inv).unwrap();
            assert_eq!(
                reconstruct(&terms, &mut c).unwrap(),
                *c.ms(&lam).unwrap(),
                "{lam:?}"
            );
        }
    }

    #[test]
    fn inversion_ratio_is_one() {
        let mut c = cache();
        for lam in [vec![2, 1, 0], vec![3, 0, 0], vec![2, 2, 1]] {
            assert_eq!(
                param_inversion_ratio(&lam, &mut c).unwrap(),
                Some(RatFunc::one()),
                "{lam:?}"
            );
        }
    }

    #[test]
    fn lassalle_forms() {
        let p = Params::generic();
        let mut c = cache();
        for (m, k, n) in [(2u32, 2usize, 4usize), (3, 1, 3), (1, 2, 3)] {
            let rect = crate::combinatorics::rectangle(m, k, n);
            for lam in crate::combinatorics::partitions_in_box(m, k, n) {
                let direct = binom_sym(&rect, &lam, &mut c).unwrap();
                assert_eq!(
                    lassalle_rect_binom(m, k as u32, &lam, &p).unwrap(),
                    direct,
                    "{lam:?}"
                );
                assert_eq!(
                    lassalle_rect_binom_hooks(m, k as u32, &lam, &p).unwrap(),
                    direct,
                    "{lam:?}"
                );
            }
        }
    }
}

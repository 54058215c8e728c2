//! Jack polynomials by Gram-Schmidt orthogonalization, and Schur functions
//! as bialternants. Neither uses the Macdonald constructions.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::combinatorics::{multiplicities, partitions};
use crate::error::AlgebraError;
use crate::exact::{Alpha, Field, Laurent, UniRatFunc};
use crate::linalg;
use crate::macdonald::distinct_permutations;
use crate::poly::{Mono, MultiPoly};

/// Elements of `Q(α)`.
pub type QAlpha = UniRatFunc<BigRational, Alpha>;

fn strip(mu: &[u32]) -> Vec<u32> {
    mu.iter().copied().filter(|&x| x > 0).collect()
}

fn pad(mu: &[u32], n: usize) -> Option<Vec<u32>> {
    let s = strip(mu);
    if s.len() > n {
        return None;
    }
    let mut v = s;
    v.resize(n, 0);
    Some(v)
}

/// Monomial symmetric polynomial `m_μ(x_1..x_n)`; zero when `ℓ(μ) > n`.
pub fn monomial_symmetric<F: Field>(mu: &[u32], n: usize) -> MultiPoly<F> {
    match pad(mu, n) {
        None => MultiPoly::zero(n),
        Some(v) => MultiPoly::from_terms(
            n,
            distinct_permutations(&v)
                .iter()
                .map(|w| (Mono::from_u32(w), F::one())),
        ),
    }
}

/// `z_μ = ∏_i i^{m_i} m_i!`.
pub fn z_lambda(mu: &[u32]) -> BigInt {
    let mult = multiplicities(&strip(mu));
    let mut z = BigInt::from(1);
    for (i, &m) in mult.iter().enumerate() {
        if i == 0 {
            continue;
        }
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

/// Matrix `A` with `m_μ = Σ_ρ A[μ][ρ] p_ρ` over partitions of `d`, in the
/// order of [`partitions`].
fn monomial_to_power(d: u32) -> (Vec<Vec<u32>>, Vec<Vec<BigRational>>) {
    let parts = partitions(d, d as usize);
    let n = d as usize;
    // L[ρ][μ] = coefficient of x^μ in p_ρ, with enough variables
    let mut l = Vec::with_capacity(parts.len());
    for rho in &parts {
        let mut prod: MultiPoly<BigRational> = MultiPoly::one(n);
        for &r in rho.iter().filter(|&&r| r > 0) {
            let pr = MultiPoly::from_terms(
                n,
                (0..n).map(|k| {
                    let mut e = vec![0u32; n];
                    e[k] = r;
                    (Mono::from_u32(&e), <BigRational as Field>::one())
                }),
            );
            prod = prod.mul(&pr);
        }
        l.push(parts.iter().map(|mu| prod.coeff_of(mu)).collect::<Vec<_>>());
    }
    // p = L m, so m = L⁻¹ p
    let a = linalg::inverse(&l).expect("power sums form a basis");
    (parts, a)
}

/// Monic Jack polynomial `P^{(α)}_λ` over `Q(α)` in `N = λ.len()` variables.
pub fn jack_p_generic(lam: &[u32]) -> MultiPoly<QAlpha> {
    let n = lam.len();
    let d: u32 = lam.iter().sum();
    if d == 0 {
        return MultiPoly::one(n);
    }
    let (parts, a) = monomial_to_power(d);
    let lift = |r: &BigRational| QAlpha::constant(r.clone());
    // <p_ρ, p_σ> = δ_ρσ z_ρ α^{ℓ(ρ)}
    let weights: Vec<QAlpha> = parts
        .iter()
        .map(|rho| {
            let z = BigRational::from_integer(z_lambda(rho));
            QAlpha::from_laurent(Laurent::monomial(z, strip(rho).len() as i32))
        })
        .collect();
    let gram = |x: &[QAlpha], y: &[QAlpha]| -> QAlpha {
        // x, y in monomial coordinates
        let mut px = vec![QAlpha::zero(); parts.len()];
        let mut py = vec![QAlpha::zero(); parts.len()];
        for (mu, c) in x.iter().enumerate() {
            if !c.is_zero() {
                for rho in 0..parts.len() {
                    px[rho] = px[rho].plus(&c.times(&lift(&a[mu][rho])));
                }
            }
        }
        for (mu, c) in y.iter().enumerate() {
            if !c.is_zero() {
                for rho in 0..parts.len() {
                    py[rho] = py[rho].plus(&c.times(&lift(&a[mu][rho])));
                }
            }
        }
        (0..parts.len()).fold(QAlpha::zero(), |acc, r| {
            acc.plus(&px[r].times(&py[r]).times(&weights[r]))
        })
    };
    // partitions() is in decreasing lexicographic order; orthogonalize from the bottom
    let target = strip(lam);
    let pos = parts.iter().position(|mu| strip(mu) == target).unwrap();
    let mut basis: Vec<Vec<QAlpha>> = Vec::new();
    let mut norms: Vec<QAlpha> = Vec::new();
    for idx in (pos..parts.len()).rev() {
        let mut v = vec![QAlpha::zero(); parts.len()];
        v[idx] = QAlpha::one();
        let mut w = v.clone();
        for (b, nb) in basis.iter().zip(&norms) {
            let c = gram(&v, b).divided(nb).expect("nonzero generic norm");
            for k in 0..parts.len() {
                w[k] = w[k].minus(&c.times(&b[k]));
            }
        }
        norms.push(gram(&w, &w));
        basis.push(w);
    }
    let top = basis.pop().unwrap();
    let mut out = MultiPoly::zero(n);
    for (mu, c) in parts.iter().zip(top) {
        if !c.is_zero() {
            out.add_assign(&monomial_symmetric::<QAlpha>(mu, n).scale(&c));
        }
    }
    out
}

/// `P^{(α)}_λ` at a rational `α`.
pub fn jack_p(lam: &[u32], alpha: &BigRational) -> Result<MultiPoly<BigRational>, AlgebraError> {
    jack_p_generic(lam).try_map(|c| {
        c.eval(alpha)
            .ok_or_else(|| AlgebraError::PoleInGramSchmidt(format!("α = {alpha}")))
    })
}

/// Schur polynomial `s_λ = a_{λ+δ}/a_δ` in `λ.len()` variables.
pub fn schur_bialternant(lam: &[u32]) -> MultiPoly<BigRational> {
    let n = lam.len();
    let shifted: Vec<u32> = lam
        .iter()
        .enumerate()
        .map(|(i, &x)| x + (n - 1 - i) as u32)
        .collect();
    let mut alt = alternant(&shifted);
    for a in 0..n {
        for b in a + 1..n {
            alt = alt
                .div_linear(a, b, &<BigRational as Field>::one())
                .expect("alternant divisible by Vandermonde");
        }
    }
    alt
}

fn alternant(e: &[u32]) -> MultiPoly<BigRational> {
    let n = e.len();
    let mut out = MultiPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm with sign tracking
    fn rec(
        k: usize,
        perm: &mut Vec<usize>,
        sign: i64,
        e: &[u32],
        out: &mut MultiPoly<BigRational>,
    ) -> i64 {
        if k == 1 {
            let exps: Vec<u32> = (0..perm.len()).map(|i| e[perm[i]]).collect();
            out.add_term(
                Mono::from_u32(&exps),
                BigRational::from_integer(BigInt::from(sign)),
            );
            return sign;
        }
        let mut s = rec(k - 1, perm, sign, e, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
            s = rec(k - 1, perm, -s, e, out);
        }
        s
    }
    if n > 0 {
        rec(n, &mut perm, 1, e, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&[1, 1]), BigInt::from(2));
        assert_eq!(z_lambda(&[2, 1, 1]), BigInt::from(4));
        assert_eq!(z_lambda(&[3]), BigInt::from(3));
    }

    #[test]
    fn jack_degree_one() {
        let p = jack_p(&[1, 0, 0], &rat(5, 3)).unwrap();
        assert_eq!(p, monomial_symmetric(&[1], 3));
    }

    #[test]
    fn jack_two_at_minus_two() {
        // (x1 - x2)^2
        let p = jack_p(&[2, 0], &rat(-2, 1)).unwrap();
        let d = MultiPoly::<BigRational>::var(2, 0).sub(&MultiPoly::var(2, 1));
        assert_eq!(p, d.mul(&d));
    }

    #[test]
    fn schur_small() {
        let s = schur_bialternant(&[1, 1, 0]);
        assert_eq!(s, monomial_symmetric(&[1, 1], 3));
        let s21 = schur_bialternant(&[2, 1, 0]);
        let expect = monomial_symmetric::<BigRational>(&[2, 1], 3)
            .add(&monomial_symmetric(&[1, 1, 1], 3).scale(&rat(2, 1)));
        assert_eq!(s21, expect);
    }

    #[test]
    fn jack_at_one_is_schur() {
        for lam in [vec![2, 1, 0], vec![2, 2, 0], vec![3, 1, 1]] {
            assert_eq!(
                jack_p(&lam, &rat(1, 1)).unwrap(),
                schur_bialternant(&lam),
                "{lam:?}"
            );
        }
    }
}

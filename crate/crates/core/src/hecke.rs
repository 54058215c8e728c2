//! Operators acting on the right of Laurent polynomials: Demazure-Lusztig
//! `T_i`, the two-parameter family `G_{a,b,c}`, the affine shift `τ`, the
//! Cherednik operators `ξ_i`, their shifted analogues `Ξ_i`, the Dunkl
//! operators `D_i`, the Hecke symmetrizer and the operator `L₊`.
//!
//! Operator indices `i` are 1-based. A word `A B` acts as `f ↦ (f A) B`.

use crate::exact::{Field, Params};
use crate::poly::{Mono, MultiPoly};

/// Divided difference `(f - f s_i)/(x_i - x_{i+1})`.
pub fn divided_difference<F: Field>(f: &MultiPoly<F>, i: usize) -> MultiPoly<F> {
    let n = f.nvars();
    assert!(1 <= i && i < n, "s_{i} undefined for N = {n}");
    let (a, b) = (i - 1, i);
    let mut out = MultiPoly::zero(n);
    for (m, c) in f.terms() {
        let (ea, eb) = (m.get(a), m.get(b));
        if ea == eb {
            continue;
        }
        // x_a^α x_b^β - x_a^β x_b^α over (x_a - x_b), with d = |α - β|
        let (lo, d, sign) = if ea > eb {
            (eb, ea - eb, false)
        } else {
            (ea, eb - ea, true)
        };
        let coef = if sign { c.negated() } else { c.clone() };
        let mut base = *m;
        for j in 0..d {
            base.set(a, lo + d - 1 - j);
            base.set(b, lo + j);
            out.add_term(base, coef.clone());
        }
    }
    out
}

/// `f G^i_{a,b,c} = a f + ∂_i(f) (b x_i - c x_{i+1})`.
pub fn apply_g<F: Field>(f: &MultiPoly<F>, i: usize, a: &F, b: &F, c: &F) -> MultiPoly<F> {
    let n = f.nvars();
    let dd = divided_difference(f, i);
    let mut out = f.scale(a);
    let xb = Mono::var(i - 1);
    let xc = Mono::var(i);
    out.add_assign(&dd.mul_monomial(&xb, b));
    out.add_assign(&dd.mul_monomial(&xc, &c.negated()));
    debug_assert_eq!(out.nvars(), n);
    out
}

/// `f T_i` with `T_i = G^i_{t,-1,-t}`.
pub fn apply_t<F: Field>(f: &MultiPoly<F>, i: usize, p: &Params<F>) -> MultiPoly<F> {
    let m1 = F::one().negated();
    apply_g(f, i, &p.t, &m1, &p.t.negated())
}

/// `f T_i⁻¹` with `T_i⁻¹ = G^i_{1/t,-1/t,-1}`.
pub fn apply_t_inv<F: Field>(f: &MultiPoly<F>, i: usize, p: &Params<F>) -> MultiPoly<F> {
    let ti = p.t_inv();
    apply_g(f, i, ti, &ti.negated(), &F::one().negated())
}

/// `f T_i⁻¹` computed from the quadratic relation as `(f T_i - (t-1) f)/t`.
pub fn apply_t_inv_quadratic<F: Field>(f: &MultiPoly<F>, i: usize, p: &Params<F>) -> MultiPoly<F> {
    let tm1 = p.t.minus(&F::one());
    apply_t(f, i, p).sub(&f.scale(&tm1)).scale(p.t_inv())
}

/// `f(x) τ = f(x_N/q, x_1, ..., x_{N-1})`.
pub fn apply_tau<F: Field>(f: &MultiPoly<F>, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    MultiPoly::from_terms(
        n,
        f.terms().map(|(m, c)| {
            let e = m.exps(n);
            let mut r = vec![0i64; n];
            r[n - 1] = e[0];
            r[..(n - 1)].copy_from_slice(&e[1..n]);
            (Mono::from_exps(&r), c.times(&p.q_pow(-e[0])))
        }),
    )
}

/// Inverse of τ: `f(x) τ⁻¹ = f(x_2, ..., x_N, q x_1)`.
pub fn apply_tau_inv<F: Field>(f: &MultiPoly<F>, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    MultiPoly::from_terms(
        n,
        f.terms().map(|(m, c)| {
            let e = m.exps(n);
            let mut r = vec![0i64; n];
            r[0] = e[n - 1];
            r[1..n].copy_from_slice(&e[..n - 1]);
            (Mono::from_exps(&r), c.times(&p.q_pow(e[n - 1])))
        }),
    )
}

/// Raising step `f ↦ (f τ)(x_N - 1)`.
pub fn raising_phi<F: Field>(f: &MultiPoly<F>, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    apply_tau(f, p).mul(&MultiPoly::var_minus(n, n - 1, F::one()))
}

/// Index map `[v1, ..., vN] Φ = [v2, ..., vN, v1 + 1]`.
pub fn phi_index(v: &[u32]) -> Vec<u32> {
    let mut w = v[1..].to_vec();
    w.push(v[0] + 1);
    w
}

/// `ξ_i = t^{1-i} T_{i-1} ... T_1 τ T_{N-1}⁻¹ ... T_i⁻¹`.
pub fn cherednik_xi<F: Field>(f: &MultiPoly<F>, i: usize, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    assert!(1 <= i && i <= n);
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = apply_t(&g, j, p);
    }
    g = apply_tau(&g, p);
    for j in (i..n).rev() {
        g = apply_t_inv(&g, j, p);
    }
    g.scale(&p.t_pow(1 - i as i64))
}

/// `Ξ_i = t^{1-i} T_{i-1} ... T_1 τ (1 - 1/x_N) T_{N-1}⁻¹ ... T_i⁻¹ + 1/x_i`.
pub fn knop_cherednik_xi<F: Field>(f: &MultiPoly<F>, i: usize, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    assert!(1 <= i && i <= n);
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = apply_t(&g, j, p);
    }
    g = apply_tau(&g, p);
    let mut inv_xn = Mono::one();
    inv_xn.set(n - 1, -1);
    g = g.sub(&g.mul_monomial(&inv_xn, &F::one()));
    for j in (i..n).rev() {
        g = apply_t_inv(&g, j, p);
    }
    let mut inv_xi = Mono::one();
    inv_xi.set(i - 1, -1);
    g.scale(&p.t_pow(1 - i as i64))
        .add(&f.mul_monomial(&inv_xi, &F::one()))
}

/// Dunkl operators: `D_N f = (f - f ξ_N)/x_N`, `D_i = t T_i⁻¹ D_{i+1} T_i⁻¹`.
pub fn dunkl<F: Field>(f: &MultiPoly<F>, i: usize, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    assert!(1 <= i && i <= n);
    let mut g = f.clone();
    for j in i..n {
        g = apply_t_inv(&g, j, p);
    }
    let mut inv_xn = Mono::one();
    inv_xn.set(n - 1, -1);
    g = g
        .sub(&cherednik_xi(&g, n, p))
        .mul_monomial(&inv_xn, &F::one());
    for j in (i..n).rev() {
        g = apply_t_inv(&g, j, p).scale(&p.t);
    }
    if f.is_polynomial() {
        assert!(
            g.is_polynomial(),
            "Dunkl image of a polynomial has a pole at x_N = 0"
        );
    }
    g
}

/// `f 𝒮_N = Σ_σ f T_σ`, using the factorization of `S_N` into minimal coset
/// representatives `1, s_{k-1}, s_{k-1}s_{k-2}, ..., s_{k-1}...s_1` of
/// `S_{k-1}` in `S_k` for `k = 2..N`.
pub fn symmetrize<F: Field>(f: &MultiPoly<F>, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    let mut acc = f.clone();
    for k in 2..=n {
        let mut chain = acc.clone();
        let mut sum = acc.clone();
        for j in (1..k).rev() {
            chain = apply_t(&chain, j, p);
            sum.add_assign(&chain);
        }
        acc = sum;
    }
    acc
}

/// `Σ_σ f T_σ` summed over a breadth-first reduced-word tree of `S_N`.
pub fn symmetrize_by_words<F: Field>(f: &MultiPoly<F>, p: &Params<F>) -> MultiPoly<F> {
    use std::collections::HashSet;
    let n = f.nvars();
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut layer = vec![(id, f.clone())];
    let mut total = f.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (w, g) in &layer {
            for i in 1..n {
                // w s_i is longer than w iff w(i) < w(i+1)
                if w[i - 1] < w[i] {
                    let mut ws = w.clone();
                    ws.swap(i - 1, i);
                    if seen.insert(ws.clone()) {
                        let h = apply_t(g, i, p);
                        total.add_assign(&h);
                        next.push((ws, h));
                    }
                }
            }
        }
        layer = next;
    }
    total
}

/// q-derivative in `x_i`: `x^a ↦ (1 - q^{a_i})/(1 - q) x^{a - e_i}`.
pub fn qderiv<F: Field>(f: &MultiPoly<F>, i: usize, p: &Params<F>) -> MultiPoly<F> {
    let n = f.nvars();
    let one_minus_q = F::one().minus(&p.q);
    MultiPoly::from_terms(
        n,
        f.terms().filter(|(m, _)| m.get(i - 1) != 0).map(|(m, c)| {
            let a = m.get(i - 1);
            let qnum = F::one()
                .minus(&p.q_pow(a))
                .divided(&one_minus_q)
                .expect("q != 1");
            let mut m2 = *m;
            m2.bump(i - 1, -1);
            (m2, c.times(&qnum))
        }),
    )
}

/// `f L₊ = Σ_i ∏_{j≠i} (t x_i - x_j)/(x_i - x_j) · ∂_{q,i} f` for symmetric `f`.
///
/// Computed over the common denominator `∏_{a<b} (x_a - x_b)`, which is then
/// divided out exactly one linear factor at a time. On symmetric inputs
/// `(1 - 1/q) L₊` at parameters `(1/q, 1/t)` equals `Σ_i D_i`.
pub fn l_plus<F: Field>(f: &MultiPoly<F>, p: &Params<F>) -> MultiPoly<F> {
    assert!(
        f.is_symmetric(),
        "L+ is applied to symmetric polynomials only"
    );
    let n = f.nvars();
    let lin = |a: usize, b: usize, c: &F| {
        // x_a - c x_b
        MultiPoly::var(n, a).sub(&MultiPoly::var(n, b).scale(c))
    };
    let mut numer = MultiPoly::zero(n);
    for i in 0..n {
        let mut term = qderiv(f, i + 1, p);
        if term.is_zero() {
            continue;
        }
        for j in 0..n {
            if j != i {
                // t x_i - x_j
                term = term.mul(&lin(i, j, p.t_inv()).scale(&p.t));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if a != i && b != i {
                    term = term.mul(&lin(a, b, &F::one()));
                }
            }
        }
        if i % 2 == 1 {
            term = term.neg();
        }
        numer.add_assign(&term);
    }
    for a in 0..n {
        for b in a + 1..n {
            numer = numer
                .div_linear(a, b, &F::one())
                .expect("L+ numerator divisible by the Vandermonde product");
        }
    }
    numer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatFunc;

    type P = MultiPoly<RatFunc>;

    fn x(n: usize, k: usize) -> P {
        P::var(n, k - 1)
    }

    #[test]
    fn t_on_small_inputs() {
        let p = Params::generic();
        assert_eq!(apply_t(&P::one(3), 1, &p), P::constant(3, p.t.clone()));
        assert_eq!(apply_t(&x(3, 2), 1, &p), x(3, 1));
        let expect = x(3, 1)
            .scale(&p.t.minus(&RatFunc::one()))
            .add(&x(3, 2).scale(&p.t));
        assert_eq!(apply_t(&x(3, 1), 1, &p), expect);
    }

    #[test]
    fn g_evaluations() {
        let p = Params::generic();
        let (t1, t2) = (p.t.clone(), p.q.clone());
        let g = apply_g(&P::one(2), 1, &t1, &t2, &RatFunc::from_i64(5));
        assert_eq!(g, P::constant(2, t1.clone()));
        let g = apply_g(&x(2, 1), 1, &t1, &t1.negated(), &t2);
        assert_eq!(g, x(2, 2).scale(&t2.negated()));
        let g = apply_g(&x(2, 2), 1, &t1, &t2, &t1.negated());
        assert_eq!(g, x(2, 1).scale(&t2.negated()));
    }

    #[test]
    fn tau_rotation() {
        let p = Params::generic();
        assert_eq!(apply_tau(&x(3, 1), &p), x(3, 3).scale(p.q_inv()));
        assert_eq!(apply_tau(&x(3, 2), &p), x(3, 1));
        assert_eq!(
            apply_tau(&x(3, 1).mul(&x(3, 2)), &p),
            x(3, 3).mul(&x(3, 1)).scale(p.q_inv())
        );
        let f = x(3, 1).pow(2).add(&x(3, 3));
        assert_eq!(apply_tau_inv(&apply_tau(&f, &p), &p), f);
    }

    #[test]
    fn constants_under_cherednik() {
        let p = Params::generic();
        for i in 1..=3 {
            assert_eq!(
                cherednik_xi(&P::one(3), i, &p),
                P::constant(3, p.t_pow(i as i64 - 3))
            );
            assert_eq!(
                knop_cherednik_xi(&P::one(3), i, &p),
                P::constant(3, p.t_pow(i as i64 - 3))
            );
            assert!(dunkl(&P::one(3), i, &p).is_zero());
        }
    }

    #[test]
    fn symmetrizer_small() {
        let p = Params::generic();
        assert_eq!(
            symmetrize(&P::one(2), &p),
            P::constant(2, RatFunc::one().plus(&p.t))
        );
        assert_eq!(symmetrize(&x(2, 2), &p), x(2, 1).add(&x(2, 2)));
        let f = x(3, 1).pow(2).mul(&x(3, 3));
        assert_eq!(symmetrize(&f, &p), symmetrize_by_words(&f, &p));
    }

    #[test]
    fn raising_index() {
        assert_eq!(phi_index(&[0, 0]), vec![0, 1]);
        assert_eq!(phi_index(&[0, 1]), vec![1, 1]);
        assert_eq!(phi_index(&[2, 0, 1]), vec![0, 1, 3]);
        let p = Params::generic();
        assert_eq!(raising_phi(&P::one(2), &p), x(2, 2).sub(&P::one(2)));
    }

    #[test]
    fn q_derivative_and_l_plus() {
        let p = Params::generic();
        let f = x(1, 1).pow(2);
        assert_eq!(qderiv(&f, 1, &p), x(1, 1).scale(&RatFunc::one().plus(&p.q)));
        assert!(qderiv(&P::one(2), 1, &p).is_zero());
        assert!(l_plus(&P::one(3), &p).is_zero());
        let mono = |e: &[i64]| P::monomial(3, Mono::from_exps(e), RatFunc::one());
        for g in [
            symmetrize(&mono(&[2, 0, 1]), &p),
            symmetrize(&mono(&[2, 0, -1]), &p),
        ] {
            let lhs = l_plus(&g, &p.inverted()).scale(&RatFunc::one().minus(p.q_inv()));
            let mut rhs = P::zero(3);
            for i in 1..=3 {
                rhs.add_assign(&dunkl(&g, i, &p));
            }
            assert_eq!(lhs, rhs);
        }
    }
}

//! Permuted rectangles `u(β)`: the factorization of `M_{u(β)}` at the point
//! `x^{(β)}` and, under the reverse lattice condition, of `E_{u(β)}`.

use serde_json::{json, Value};

use super::verify::{equal_outcome, star_outcome};
use super::*;
use crate::report::{run, Check, Outcome};

/// `Ω_{N,k}`: strictly increasing `k`-tuples in `1..=N`.
pub fn omega(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for b in start..=n {
            cur.push(b);
            rec(b + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn check_beta(beta: &[usize], n: usize) -> Result<(), AlgebraError> {
    let ok = !beta.is_empty()
        && beta[0] >= 1
        && beta.windows(2).all(|w| w[0] < w[1])
        && *beta.last().unwrap() <= n;
    if ok {
        Ok(())
    } else {
        Err(AlgebraError::Invalid(format!(
            "β = {beta:?} is not in Ω_{{{n},{}}}",
            beta.len()
        )))
    }
}

/// `u(β)`: `m` at the positions of `β`, zero elsewhere.
pub fn u_beta(beta: &[usize], m: u32, n: usize) -> Vec<u32> {
    let mut u = vec![0; n];
    for &b in beta {
        u[b - 1] = m;
    }
    u
}

/// `χ_β(i) = N - i - #{l : β[l] > i}` (1-based `i`).
pub fn chi(beta: &[usize], i: usize, n: usize) -> i64 {
    n as i64 - i as i64 - beta.iter().filter(|&&b| b > i).count() as i64
}

/// `x^{(β)}` in `N` variables: `x_i` on `β`, `t^{χ_β(i)}` elsewhere.
pub fn x_beta<F: Field>(beta: &[usize], n: usize, p: &Params<F>) -> Vec<MultiPoly<F>> {
    (1..=n)
        .map(|i| {
            if beta.contains(&i) {
                MultiPoly::var(n, i - 1)
            } else {
                MultiPoly::constant(n, p.t_pow(chi(beta, i, n)))
            }
        })
        .collect()
}

/// `z^{(β)}` in `N + 1` variables (`y` last): `x_i` on `β`, `y t^{χ_β(i)}` elsewhere.
pub fn z_beta<F: Field>(beta: &[usize], n: usize, p: &Params<F>) -> Vec<MultiPoly<F>> {
    let y = MultiPoly::<F>::var(n + 1, n);
    (1..=n)
        .map(|i| {
            if beta.contains(&i) {
                MultiPoly::var(n + 1, i - 1)
            } else {
                y.scale(&p.t_pow(chi(beta, i, n)))
            }
        })
        .collect()
}

/// `∏_j (x_{β_j} - t^{N+j-k-β_j} y) ∏_{i<m} (x_{β_j} - t^{N-k} q^i y)` with
/// `y` the variable `y_index`, or `y = 1` when `y_index` is `None`.
pub fn beta_product<F: Field>(
    beta: &[usize],
    m: u32,
    n: usize,
    nv: usize,
    y_index: Option<usize>,
    p: &Params<F>,
) -> MultiPoly<F> {
    let k = beta.len() as i64;
    let y = match y_index {
        Some(i) => MultiPoly::var(nv, i),
        None => MultiPoly::one(nv),
    };
    let mut acc = MultiPoly::one(nv);
    for (j0, &b) in beta.iter().enumerate() {
        let x = MultiPoly::var(nv, b - 1);
        let j = j0 as i64 + 1;
        acc = acc.mul(&x.sub(&y.scale(&p.t_pow(n as i64 + j - k - b as i64))));
        for i in 1..m {
            acc = acc.mul(&x.sub(&y.scale(&p.mono(i as i64, n as i64 - k))));
        }
    }
    acc
}

/// `β[j] ≤ N - 2k + 2j - 1` for all `j`.
pub fn satisfies_revlat(beta: &[usize], n: usize) -> bool {
    let k = beta.len() as i64;
    beta.iter()
        .enumerate()
        .all(|(j0, &b)| (b as i64) < n as i64 - 2 * k + 2 * (j0 as i64 + 1))
}

fn case(beta: &[usize], m: u32, n: usize, check: &str) -> Value {
    json!({"beta": beta, "m": m, "N": n, "check": check})
}

/// All permuted-rectangle checks for one `β`.
pub fn appendix_c_verify(
    beta: &[usize],
    m: u32,
    n: usize,
    generic: &mut MacCache<RatFunc>,
) -> Vec<Check> {
    let suite = "appendixC";
    if let Err(e) = check_beta(beta, n) {
        return vec![run(suite, case(beta, m, n, "input"), || Err(e))];
    }
    let p = generic.params().clone();
    let u = u_beta(beta, m, n);
    let mut out = Vec::new();
    let mu = generic.m(&u);
    out.push(run(suite, case(beta, m, n, "Mux_fact"), || {
        let mu = mu.clone()?;
        let lhs = mu.substitute(&x_beta(beta, n, &p), n);
        let rhs = beta_product(beta, m, n, n, None, &p);
        let monic = lhs.scale(&monic_shift(&u, &p));
        if monic == rhs {
            return Ok(Outcome {
                status: crate::report::Status::Pass,
                witness: Some("exact for q^{n'(u)} M_u".into()),
            });
        }
        Ok(star_outcome(&lhs, &rhs))
    }));
    for (j0, &b) in beta.iter().enumerate() {
        if b == 1 || beta.contains(&(b - 1)) {
            continue;
        }
        let i = b - 1;
        let mut prev = beta.to_vec();
        prev[j0] -= 1;
        out.push(run(
            suite,
            case(beta, m, n, &format!("Mxi=0 at s_{i}")),
            || {
                let mu = mu.clone()?;
                let mut pt = x_beta(beta, n, &p);
                pt.swap(i - 1, i);
                let v = mu.substitute(&pt, n);
                Ok(Outcome::check(v.is_zero(), || format!("{} terms", v.len())))
            },
        ));
        out.push(run(
            suite,
            case(beta, m, n, &format!("Msiy at s_{i}")),
            || {
                let mu = mu.clone()?;
                let m_prev = generic.m(&u_beta(&prev, m, n))?;
                let y = x_beta(&prev, n, &p);
                let mut ys = y.clone();
                ys.swap(i - 1, i);
                let lhs = m_prev.substitute(&y, n).mul(&y[i - 1].sub(&y[i]));
                let rhs = mu.substitute(&ys, n).mul(&y[i - 1].sub(&y[i].scale(&p.t)));
                Ok(equal_outcome(&lhs, &rhs))
            },
        ));
    }
    if satisfies_revlat(beta, n) && 2 * beta.len() <= n {
        let spec = RectSpec::new(m, beta.len(), n, false).expect("2k ≤ N");
        for map in admissible_specializations(&spec) {
            let pm = Params::from_map(&map);
            let mut c = case(beta, m, n, "revlat E=M");
            c["map"] = json!(map.to_string());
            let e_at = family_at(Family::E, &u, &map, generic);
            out.push(run(suite, c.clone(), || {
                let e = e_at.clone()?;
                let mm = family_at(Family::M, &u, &map, generic)?.scale(&monic_shift(&u, &pm));
                Ok(equal_outcome(&mm, &e))
            }));
            c["check"] = json!("revlat E(z^β)");
            out.push(run(suite, c, || {
                let e = e_at.clone()?;
                let lhs = e.substitute(&z_beta(beta, n, &pm), n + 1);
                Ok(equal_outcome(
                    &lhs,
                    &beta_product(beta, m, n, n + 1, Some(n), &pm),
                ))
            }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_and_points() {
        assert_eq!(omega(4, 2).len(), 6);
        assert_eq!(
            u_beta(&[2, 5, 6, 9], 2, 10),
            vec![0, 2, 0, 0, 2, 2, 0, 0, 2, 0]
        );
        let chis: Vec<i64> = [1, 3, 4, 7, 8, 10]
            .iter()
            .map(|&i| chi(&[2, 5, 6, 9], i, 10))
            .collect();
        assert_eq!(chis, vec![5, 4, 3, 2, 1, 0]);
        // the boundary β starts at t^{N-k-1}
        assert_eq!(chi(&[3, 4], 1, 4), 1);
        assert!(satisfies_revlat(&[1, 2], 4) && satisfies_revlat(&[1, 3], 4));
        assert!(!satisfies_revlat(&[2, 3], 4) && !satisfies_revlat(&[1, 4], 4));
    }
}

//! The three worked rectangular examples, with right-hand sides typed in as
//! printed rather than generated from `𝒟`.

use serde_json::json;

use super::verify::{equal_outcome, star_outcome};
use super::*;
use crate::exact::{rat, Cyclo, Laurent};
use crate::report::{run, Check, Outcome};

type SP = MultiPoly<SpecRF>;

fn lin(n: usize, a: usize, c: &SpecRF, b: usize) -> SP {
    // x_a - c x_b
    SP::var(n, a).sub(&SP::var(n, b).scale(c))
}

fn z_pow(e: i32) -> SpecRF {
    SpecRF::from_laurent(Laurent::monomial(Cyclo::one(), e))
}

/// `P_λ` at `map`, evaluated at `images`.
fn p_at_point(
    lam: &[u32],
    map: &SpecMap,
    images: impl Fn(&Params<SpecRF>) -> Vec<SP>,
    nv: usize,
    generic: &mut MacCache<RatFunc>,
) -> Result<SP, AlgebraError> {
    let p = family_at(Family::P, lam, map, generic)?;
    Ok(p.substitute(&images(&Params::from_map(map)), nv))
}

/// `P_{2200}(x1,x2,yt,y)` at `q = t^{-3}`.
pub fn example_1(generic: &mut MacCache<RatFunc>) -> Check {
    let map = SpecMap::pure(3, -1);
    run(
        "clustering-sym",
        json!({"example": 1, "map": map.to_string()}),
        || {
            let pm = Params::from_map(&map);
            let lhs = p_at_point(
                &[2, 2, 0, 0],
                &map,
                |p| clustered_point(4, 2, p),
                3,
                generic,
            )?;
            let t = pm.t.clone();
            let t_inv = t.inverse().unwrap();
            let t2 = t.times(&t);
            let mut rhs = SP::one(3);
            for i in 0..2 {
                rhs = rhs.mul(&lin(3, i, &t_inv, 2)).mul(&lin(3, i, &t2, 2));
            }
            Ok(equal_outcome(&lhs, &rhs))
        },
    )
}

/// `P_{30}(x1,y)` at `t = -1/q` factors; at `t = 1/q` it does not.
pub fn example_2(generic: &mut MacCache<RatFunc>) -> Vec<Check> {
    let good = SpecMap::new(2, MonoImage { root: 0, z: 1 }, MonoImage { root: 1, z: -1 });
    let bad = SpecMap::pure(1, -1);
    let point = |_: &Params<SpecRF>| vec![SP::var(2, 0), SP::var(2, 1)];
    let mut out = Vec::new();
    out.push(run(
        "clustering-sym",
        json!({"example": 2, "map": good.to_string()}),
        || {
            let lhs = p_at_point(&[3, 0], &good, point, 2, generic)?;
            let q = good.q();
            let one = SpecRF::one().negated();
            let rhs = lin(2, 0, &q.inverse().unwrap().negated(), 1)
                .mul(&lin(2, 0, &one, 1))
                .mul(&lin(2, 0, &q.negated(), 1));
            Ok(equal_outcome(&lhs, &rhs))
        },
    ));
    out.push(run("clustering-sym", json!({"example": 2, "map": bad.to_string(), "check": "negative control"}), || {
        let lhs = p_at_point(&[3, 0], &bad, point, 2, generic)?;
        let q = bad.q();
        let quadratic = |c: &SpecRF| {
            SP::var(2, 0).pow(2).sub(&SP::var(2, 0).mul(&SP::var(2, 1)).scale(c)).add(&SP::var(2, 1).pow(2))
        };
        let x_plus_y = lin(2, 0, &SpecRF::one().negated(), 1);
        // printed: x1^2 - (1 + 1/q)^2 y x1 + y^2
        let s = SpecRF::one().plus(&q.inverse().unwrap());
        let printed = quadratic(&s.times(&s)).mul(&x_plus_y);
        let corrected = quadratic(&s.times(&s).times(&q)).mul(&x_plus_y);
        let d = resultant_d(2, 1, 3, &Params::from_map(&bad));
        if lhs == d {
            return Ok(Outcome::fail("factorization holds at t = 1/q"));
        }
        if lhs == printed {
            return Ok(Outcome::pass());
        }
        Ok(Outcome {
            status: if lhs == corrected { crate::report::Status::Pass } else { crate::report::Status::Fail },
            witness: Some(format!("does not factor as 𝒟; computed {}; the printed middle coefficient (1+1/q)^2 must be q(1+1/q)^2", lhs.to_text())),
        })
    }));
    out
}

/// `P_{4400}(x1,x2,ty,y)` at `t = ω/q`, `ω = e^{2πi/3}`, and the
/// pole at `t = 1/q` with its numerator.
pub fn example_3(generic: &mut MacCache<RatFunc>) -> Vec<Check> {
    let map = SpecMap::new(3, MonoImage { root: 0, z: 1 }, MonoImage { root: 1, z: -1 });
    let mut out = Vec::new();
    out.push(run(
        "clustering-sym",
        json!({"example": 3, "map": map.to_string()}),
        || {
            let lhs = p_at_point(
                &[4, 4, 0, 0],
                &map,
                |p| clustered_point(4, 2, p),
                3,
                generic,
            )?;
            let q = map.q();
            let w2 = map.t().times(&q).pow_i(2).unwrap();
            let mut rhs = SP::one(3);
            for i in 0..2 {
                for e in -2..=1 {
                    rhs = rhs.mul(&lin(3, i, &w2.times(&q.pow_i(e).unwrap()), 2));
                }
            }
            Ok(equal_outcome(&lhs, &rhs))
        },
    ));
    out.push(run(
        "clustering-sym",
        json!({"example": 3, "map": "q=z,t=z^-1", "check": "pole numerator"}),
        || pole_numerator(generic),
    ));
    out
}

/// Clears denominators of `P_{4400}(x1,x2,ty,y)` over `Q(q,t)` and
/// specializes the numerator at `t = 1/q`.
fn pole_numerator(generic: &mut MacCache<RatFunc>) -> Result<Outcome, AlgebraError> {
    let p = generic.p(&[4, 4, 0, 0])?;
    let gp = generic.params().clone();
    let sub = p.substitute(&clustered_point(4, 2, &gp), 3);
    let mut lcm = QTPoly::one();
    for (_, c) in sub.terms() {
        let g = lcm.gcd(c.den());
        lcm = lcm.mul(c.den()).div_exact(&g).expect("gcd divides");
    }
    let d = RatFunc::from_poly(lcm);
    let map = SpecMap::pure(1, -1);
    if !map.apply(&d)?.is_zero() {
        return Ok(Outcome::fail("no pole at t = 1/q"));
    }
    let numer = specialize(&sub.scale(&d), &map)?;
    // 3 (y^4/q^6)(1-q^2)(1-q^3)^2(1-q^4) x1^2 x2^2
    let q = z_pow(1);
    let one = SpecRF::one();
    let f = |e: i32| one.minus(&q.pow_i(e as i64).unwrap());
    let c = SpecRF::from_laurent(Laurent::monomial(Cyclo::rational(rat(3, 1)), -6))
        .times(&f(2))
        .times(&f(3))
        .times(&f(3))
        .times(&f(4));
    let printed = SP::monomial(3, crate::poly::Mono::from_u32(&[2, 2, 4]), c);
    let out = star_outcome(&numer, &printed);
    Ok(match (out.status, out.witness) {
        (crate::report::Status::Pass, None) => Outcome {
            status: out.status,
            witness: Some("exact match".into()),
        },
        (s, w) => Outcome {
            status: s,
            witness: w,
        },
    })
}

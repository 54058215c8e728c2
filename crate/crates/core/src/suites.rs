//! Named verification suites. Each suite is planned as a list of independent
//! tasks; every task owns its construction caches, so tasks can run on
//! separate threads and their rows are concatenated in plan order.

use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::clustering::{
    admissible_specializations, appendix, examples, intertwiner_m0_ratio, lascoux_product,
    principal_e0, principal_m0, principal_mrev, principal_p0, staircase, verify, RectSpec,
};
use crate::combinatorics::{
    compositions_up_to, contained, nprime_stat, partitions_in_box, partitions_up_to, size,
    sort_decreasing, sort_increasing, spectral_vector,
};
use crate::error::AlgebraError;
use crate::exact::{Field, Params, RatFunc};
use crate::hecke::{
    apply_g, apply_t, apply_t_inv, apply_t_inv_quadratic, cherednik_xi, dunkl, knop_cherednik_xi,
    l_plus, phi_index,
};
use crate::jack::monomial_symmetric;
use crate::macdonald::{
    binom_nonsym, binom_sym, lassalle_rect_binom, lassalle_rect_binom_hooks, okounkov_expand,
    param_inversion_ratio, reconstruct, shifted_by_interpolation, tau_closed, Family, MacCache,
    Norm,
};
use crate::poly::{Mono, MultiPoly};
use crate::report::{run, Check, Outcome, Status};

pub const SUITES: [&str; 12] = [
    "hecke",
    "eigen",
    "vanishing",
    "hooks",
    "binomials",
    "okounkov",
    "clustering-sym",
    "clustering-nonsym",
    "jack",
    "appendixC",
    "singular",
    "staircase-fixtures",
];

pub const SYM_GRID: [(u32, usize, usize); 5] =
    [(2, 1, 2), (2, 2, 4), (3, 1, 2), (3, 1, 4), (2, 1, 3)];
pub const NONSYM_GRID: [(u32, usize, usize); 4] = [(1, 1, 2), (2, 1, 3), (1, 1, 4), (1, 2, 4)];
pub const JACK_GRID: [(usize, usize, u32); 3] = [(2, 1, 2), (4, 2, 2), (3, 1, 3)];

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<u32>,
    pub beta: Option<Vec<usize>>,
    pub seed: u64,
    /// Random inputs per relation in the `hecke` suite.
    pub count: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n: None,
            k: None,
            m: None,
            beta: None,
            seed: 0,
            count: 100,
        }
    }
}

pub type Task = Box<dyn FnOnce() -> Vec<Check> + Send>;

fn generic() -> MacCache<RatFunc> {
    MacCache::new(Params::generic())
}

fn invalid(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Invalid(msg.into())
}

/// Splits a suite into independent tasks, validating options first.
pub fn plan(name: &str, opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    match name {
        "hecke" => plan_hecke(opts),
        "eigen" => Ok(per_n(opts, 3, eigen_suite)?),
        "vanishing" => Ok(per_n(opts, 3, vanishing_suite)?),
        "hooks" => Ok(per_n(opts, 3, hooks_suite)?),
        "binomials" => plan_binomials(opts),
        "okounkov" => Ok(per_n(opts, 3, okounkov_suite)?),
        "clustering-sym" => plan_clustering_sym(opts),
        "clustering-nonsym" => plan_clustering_nonsym(opts),
        "jack" => plan_jack(opts),
        "appendixC" => plan_appendix(opts),
        "singular" => plan_singular(opts),
        "staircase-fixtures" => Ok(vec![Box::new(|| {
            staircase::staircase_fixtures(&mut generic())
        })]),
        _ => Err(invalid(format!(
            "unknown suite '{name}'; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Runs `tasks` on up to `jobs` threads; rows keep plan order.
pub fn execute(tasks: Vec<Task>, jobs: usize) -> Vec<Check> {
    let jobs = jobs.max(1).min(tasks.len().max(1));
    if jobs == 1 {
        return tasks.into_iter().flat_map(|t| t()).collect();
    }
    let n = tasks.len();
    let queue = Mutex::new(tasks.into_iter().enumerate());
    let results: Mutex<Vec<Option<Vec<Check>>>> = Mutex::new(vec![None; n]);
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let next = queue.lock().unwrap().next();
                let Some((i, task)) = next else { break };
                let rows = task();
                results.lock().unwrap()[i] = Some(rows);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .flatten()
        .flatten()
        .collect()
}

pub fn run_suite(name: &str, opts: &SuiteOptions, jobs: usize) -> Result<Vec<Check>, AlgebraError> {
    Ok(execute(plan(name, opts)?, jobs))
}

fn per_n(
    opts: &SuiteOptions,
    max_n: usize,
    f: fn(usize) -> Vec<Check>,
) -> Result<Vec<Task>, AlgebraError> {
    let ns: Vec<usize> = match opts.n {
        Some(n) if (1..=max_n).contains(&n) => vec![n],
        Some(n) => {
            return Err(invalid(format!(
                "N = {n} is outside 1..={max_n} for this suite"
            )))
        }
        None => (1..=max_n).collect(),
    };
    Ok(ns
        .into_iter()
        .map(|n| Box::new(move || f(n)) as Task)
        .collect())
}

// ---------------------------------------------------------------- hecke

/// A random Laurent polynomial in `n` variables: up to four terms, exponents
/// in `-2..=3`, total absolute degree at most 6, small integer coefficients.
pub fn random_laurent<F: Field>(rng: &mut impl Rng, n: usize) -> MultiPoly<F> {
    let terms = rng.gen_range(1..=4);
    let mut f = MultiPoly::zero(n);
    while f.len() < terms {
        let e: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=3)).collect();
        if e.iter().map(|x| x.abs()).sum::<i64>() > 6 {
            continue;
        }
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        f.add_term(Mono::from_exps(&e), F::from_i64(c));
    }
    f
}

/// A random symmetric Laurent polynomial: a combination of monomial symmetric
/// functions times a power of `x_1 ⋯ x_n`.
pub fn random_symmetric<F: Field>(rng: &mut impl Rng, n: usize) -> MultiPoly<F> {
    let mut f = MultiPoly::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let d = rng.gen_range(0..=3);
        let parts = partitions_up_to(d, n);
        let mu = &parts[rng.gen_range(0..parts.len())];
        f.add_assign(&monomial_symmetric::<F>(mu, n).scale(&F::from_i64(rng.gen_range(1..=3))));
    }
    let s = rng.gen_range(-1..=0);
    f.mul_monomial(&Mono::from_exps(&vec![s; n]), &F::one())
}

struct Relation {
    name: &'static str,
    min_n: usize,
    symmetric_input: bool,
    /// `Some(witness)` on failure.
    check: fn(&MultiPoly<RatFunc>, &mut ChaCha8Rng, &Params<RatFunc>) -> Option<String>,
}

type RP = MultiPoly<RatFunc>;

fn diff(a: &RP, b: &RP) -> Option<String> {
    (a != b).then(|| format!("difference {}", a.sub(b).to_text()))
}

fn g_apply(f: &RP, i: usize, abc: &(RatFunc, RatFunc, RatFunc)) -> RP {
    apply_g(f, i, &abc.0, &abc.1, &abc.2)
}

fn g_family(
    second: bool,
) -> (
    (RatFunc, RatFunc, RatFunc),
    (RatFunc, RatFunc, RatFunc),
    RatFunc,
    RatFunc,
) {
    // t1 = q, t2 = t as two independent parameters
    let (t1, t2) = (RatFunc::q(), RatFunc::t());
    let (i1, i2) = (t1.inverse().unwrap(), t2.inverse().unwrap());
    if second {
        (
            (t1.clone(), t2.clone(), t1.negated()),
            (i1.clone(), i1.negated(), i2),
            t1,
            t2,
        )
    } else {
        (
            (t1.clone(), t1.negated(), t2.clone()),
            (i1.clone(), i2, i1.negated()),
            t1,
            t2,
        )
    }
}

fn g_braid(f: &RP, rng: &mut ChaCha8Rng, second: bool) -> Option<String> {
    let n = f.nvars();
    let i = rng.gen_range(1..=n - 2);
    let (g, _, _, _) = g_family(second);
    let lhs = g_apply(&g_apply(&g_apply(f, i, &g), i + 1, &g), i, &g);
    let rhs = g_apply(&g_apply(&g_apply(f, i + 1, &g), i, &g), i + 1, &g);
    diff(&lhs, &rhs).map(|w| format!("i = {i}: {w}"))
}

fn g_quadratic(f: &RP, rng: &mut ChaCha8Rng, second: bool) -> Option<String> {
    let i = rng.gen_range(1..f.nvars());
    let (g, _, t1, t2) = g_family(second);
    let h = g_apply(f, i, &g).sub(&f.scale(&t1));
    let out = g_apply(&h, i, &g).sub(&h.scale(&t2));
    (!out.is_zero()).then(|| format!("i = {i}: (G - t1)(G - t2) leaves {}", out.to_text()))
}

fn g_inverse(f: &RP, rng: &mut ChaCha8Rng, second: bool) -> Option<String> {
    let i = rng.gen_range(1..f.nvars());
    let (g, gi, _, _) = g_family(second);
    diff(&g_apply(&g_apply(f, i, &g), i, &gi), f)
        .or_else(|| diff(&g_apply(&g_apply(f, i, &gi), i, &g), f))
}

fn relations() -> Vec<Relation> {
    vec![
        Relation {
            name: "T quadratic (T - t)(T + 1) = 0",
            min_n: 2,
            symmetric_input: false,
            check: |f, rng, p| {
                let i = rng.gen_range(1..f.nvars());
                let h = apply_t(f, i, p).sub(&f.scale(&p.t));
                let out = apply_t(&h, i, p).add(&h);
                (!out.is_zero()).then(|| format!("i = {i}: leaves {}", out.to_text()))
            },
        },
        Relation {
            name: "T braid",
            min_n: 3,
            symmetric_input: false,
            check: |f, rng, p| {
                let i = rng.gen_range(1..=f.nvars() - 2);
                let lhs = apply_t(&apply_t(&apply_t(f, i, p), i + 1, p), i, p);
                let rhs = apply_t(&apply_t(&apply_t(f, i + 1, p), i, p), i + 1, p);
                diff(&lhs, &rhs).map(|w| format!("i = {i}: {w}"))
            },
        },
        Relation {
            name: "T far commutation",
            min_n: 4,
            symmetric_input: false,
            check: |f, rng, p| {
                let n = f.nvars();
                let i = rng.gen_range(1..=n - 3);
                let j = rng.gen_range(i + 2..n);
                diff(
                    &apply_t(&apply_t(f, i, p), j, p),
                    &apply_t(&apply_t(f, j, p), i, p),
                )
                .map(|w| format!("i = {i}, j = {j}: {w}"))
            },
        },
        Relation {
            name: "T inverse",
            min_n: 2,
            symmetric_input: false,
            check: |f, rng, p| {
                let i = rng.gen_range(1..f.nvars());
                let inv = apply_t_inv(f, i, p);
                diff(&inv, &apply_t_inv_quadratic(f, i, p))
                    .or_else(|| diff(&apply_t(&inv, i, p), f))
                    .or_else(|| diff(&apply_t_inv(&apply_t(f, i, p), i, p), f))
                    .map(|w| format!("i = {i}: {w}"))
            },
        },
        Relation {
            name: "T commutes with symmetric functions of x_i, x_{i+1}",
            min_n: 2,
            symmetric_input: false,
            check: |f, rng, p| {
                let n = f.nvars();
                let i = rng.gen_range(1..n);
                let e1 = MultiPoly::var(n, i - 1).add(&MultiPoly::var(n, i));
                let mut e2 = Mono::one();
                e2.set(i - 1, 1);
                e2.set(i, 1);
                let (a, b) = (rng.gen_range(0..=2), rng.gen_range(-1..=1));
                let g = e1.pow(a).mul_monomial(
                    &Mono::from_exps(&e2.exps(n).iter().map(|x| x * b).collect::<Vec<_>>()),
                    &RatFunc::one(),
                );
                diff(&apply_t(&g.mul(f), i, p), &g.mul(&apply_t(f, i, p)))
                    .map(|w| format!("i = {i}: {w}"))
            },
        },
        Relation {
            name: "G(t1,-t1,t2) braid",
            min_n: 3,
            symmetric_input: false,
            check: |f, r, _| g_braid(f, r, false),
        },
        Relation {
            name: "G(t1,-t1,t2) quadratic",
            min_n: 2,
            symmetric_input: false,
            check: |f, r, _| g_quadratic(f, r, false),
        },
        Relation {
            name: "G(t1,-t1,t2) inverse",
            min_n: 2,
            symmetric_input: false,
            check: |f, r, _| g_inverse(f, r, false),
        },
        Relation {
            name: "G(t1,t2,-t1) braid",
            min_n: 3,
            symmetric_input: false,
            check: |f, r, _| g_braid(f, r, true),
        },
        Relation {
            name: "G(t1,t2,-t1) quadratic",
            min_n: 2,
            symmetric_input: false,
            check: |f, r, _| g_quadratic(f, r, true),
        },
        Relation {
            name: "G(t1,t2,-t1) inverse",
            min_n: 2,
            symmetric_input: false,
            check: |f, r, _| g_inverse(f, r, true),
        },
        Relation {
            name: "xi_i = t T_i^-1 xi_{i+1} T_i^-1",
            min_n: 2,
            symmetric_input: false,
            check: |f, rng, p| {
                let i = rng.gen_range(1..f.nvars());
                let rhs =
                    apply_t_inv(&cherednik_xi(&apply_t_inv(f, i, p), i + 1, p), i, p).scale(&p.t);
                diff(&cherednik_xi(f, i, p), &rhs).map(|w| format!("i = {i}: {w}"))
            },
        },
        Relation {
            name: "Xi_i = t T_i^-1 Xi_{i+1} T_i^-1",
            min_n: 2,
            symmetric_input: false,
            check: |f, rng, p| {
                let i = rng.gen_range(1..f.nvars());
                let rhs = apply_t_inv(&knop_cherednik_xi(&apply_t_inv(f, i, p), i + 1, p), i, p)
                    .scale(&p.t);
                diff(&knop_cherednik_xi(f, i, p), &rhs).map(|w| format!("i = {i}: {w}"))
            },
        },
        Relation {
            name: "xi commutativity",
            min_n: 2,
            symmetric_input: false,
            check: |f, rng, p| {
                let n = f.nvars();
                let i = rng.gen_range(1..n);
                let j = rng.gen_range(i + 1..=n);
                diff(
                    &cherednik_xi(&cherednik_xi(f, i, p), j, p),
                    &cherednik_xi(&cherednik_xi(f, j, p), i, p),
                )
                .map(|w| format!("i = {i}, j = {j}: {w}"))
            },
        },
        Relation {
            name: "Xi_i = xi_i + D_i",
            min_n: 1,
            symmetric_input: false,
            check: |f, rng, p| {
                let i = rng.gen_range(1..=f.nvars());
                let rhs = cherednik_xi(f, i, p).add(&dunkl(f, i, p));
                diff(&knop_cherednik_xi(f, i, p), &rhs).map(|w| format!("i = {i}: {w}"))
            },
        },
        Relation {
            name: "(1 - q) L+ = sum D_i (L+ at inverted parameters)",
            min_n: 1,
            symmetric_input: true,
            check: |f, _, p| {
                let n = f.nvars();
                let lhs = l_plus(f, &p.inverted()).scale(&RatFunc::one().minus(p.q_inv()));
                let rhs = (1..=n).fold(MultiPoly::zero(n), |acc, i| acc.add(&dunkl(f, i, p)));
                diff(&lhs, &rhs)
            },
        },
    ]
}

fn plan_hecke(opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    if let Some(n) = opts.n {
        if !(1..=5).contains(&n) {
            return Err(invalid(format!("hecke suite needs 1 ≤ N ≤ 5, got {n}")));
        }
    }
    let (fixed_n, seed, count) = (opts.n, opts.seed, opts.count);
    Ok(relations()
        .into_iter()
        .enumerate()
        .map(|(idx, rel)| {
            Box::new(move || {
                let case =
                    json!({"relation": rel.name, "count": count, "seed": seed, "N": fixed_n});
                if fixed_n.is_some_and(|n| n < rel.min_n) {
                    return vec![run("hecke", case, || {
                        Ok(Outcome::report(format!("skipped: needs N ≥ {}", rel.min_n)))
                    })];
                }
                vec![run("hecke", case, || {
                    let p = Params::generic();
                    let mut rng = ChaCha8Rng::seed_from_u64(
                        seed.wrapping_mul(1_000_003).wrapping_add(idx as u64),
                    );
                    for trial in 0..count {
                        let n = fixed_n.unwrap_or_else(|| rng.gen_range(rel.min_n.max(2)..=5));
                        let f = if rel.symmetric_input {
                            random_symmetric(&mut rng, n)
                        } else {
                            random_laurent(&mut rng, n)
                        };
                        if let Some(w) = (rel.check)(&f, &mut rng, &p) {
                            return Ok(Outcome::fail(format!(
                                "trial {trial}, N = {n}, f = {}: {w}",
                                f.to_text()
                            )));
                        }
                    }
                    Ok(Outcome::pass())
                })]
            }) as Task
        })
        .collect())
}

// ---------------------------------------------------------------- eigen, vanishing, hooks

fn eigen_suite(n: usize) -> Vec<Check> {
    let mut c = generic();
    let p = c.params().clone();
    let mut out = Vec::new();
    for v in compositions_up_to(4, n) {
        let spec = spectral_vector(&v, &p);
        for fam in [Family::E, Family::M] {
            let case = json!({"family": fam.to_string(), "index": v, "eigenvalue": "1/<v>[i]"});
            out.push(run("eigen", case, || {
                let f = c.basic(fam, &v)?;
                for i in 1..=n {
                    let image = match fam {
                        Family::E => cherednik_xi(&f, i, &p),
                        _ => knop_cherednik_xi(&f, i, &p),
                    };
                    let expect = f.scale(&spec[i - 1].inverse().unwrap());
                    if image != expect {
                        return Ok(Outcome::fail(format!(
                            "i = {i}: not an eigenfunction with eigenvalue 1/<v>[{i}]"
                        )));
                    }
                }
                Ok(Outcome::pass())
            }));
        }
    }
    out
}

fn vanishing_suite(n: usize) -> Vec<Check> {
    let mut c = generic();
    let p = c.params().clone();
    let all = compositions_up_to(4, n);
    let mut out = Vec::new();
    for v in &all {
        let case = json!({"index": v, "check": "Yang-Baxter = interpolation"});
        out.push(run("vanishing", case, || {
            let m = c.m(v)?;
            let oracle = shifted_by_interpolation(v, &p)
                .ok_or_else(|| invalid("singular interpolation system"))?;
            Ok(verify::equal_outcome(&m, &oracle))
        }));
        let case =
            json!({"index": v, "check": "M_v(<u>) = 0 for |u| ≤ |v|, u ≠ v; leading q^-n'(v)"});
        out.push(run("vanishing", case, || {
            let m = c.m(v)?;
            for u in all.iter().filter(|u| size(u) <= size(v) && *u != v) {
                if !m.eval(&spectral_vector(u, &p)).unwrap().is_zero() {
                    return Ok(Outcome::fail(format!("M_v(<{u:?}>) ≠ 0")));
                }
            }
            let lead = m.coeff_of(v);
            Ok(Outcome::check(
                lead == p.q_pow(-(nprime_stat(v) as i64)),
                || format!("x^v coefficient {lead}"),
            ))
        }));
    }
    out
}

fn hooks_suite(n: usize) -> Vec<Check> {
    let mut c = generic();
    let p = c.params().clone();
    let zero = vec![RatFunc::zero(); n];
    let origin = spectral_vector(&vec![0; n], &p);
    let mut out = Vec::new();
    let m0 = |c: &mut MacCache<RatFunc>, v: &[u32]| -> Result<RatFunc, AlgebraError> {
        Ok(c.m(v)?.eval(&zero).unwrap())
    };
    for v in compositions_up_to(4, n) {
        let case = |check: &str| json!({"index": v, "check": check});
        out.push(run("hooks", case("M_v(0) hook formula"), || {
            let direct = m0(&mut c, &v)?;
            let closed = principal_m0(&v, &p)?;
            Ok(Outcome::check(direct == closed, || {
                format!("direct {direct}, hook form {closed}")
            }))
        }));
        out.push(run("hooks", case("M_v(0) Lascoux product"), || {
            let direct = m0(&mut c, &v)?;
            let closed = lascoux_product(&v, &p)?;
            Ok(Outcome::check(direct == closed, || {
                format!("direct {direct}, product {closed}")
            }))
        }));
        out.push(run(
            "hooks",
            case("E_v(<0>) hook formula up to (∗)"),
            || {
                let direct = c.e(&v)?.eval(&origin).unwrap();
                let ratio = direct.divided(&principal_e0(&v, &p)?).unwrap();
                Ok(if ratio.is_monomial() {
                    Outcome {
                        status: Status::Pass,
                        witness: (!ratio.is_one()).then(|| format!("(∗) = {ratio}")),
                    }
                } else {
                    Outcome::fail(format!("ratio {ratio}"))
                })
            },
        ));
        out.push(run("hooks", case("tau_v closed form"), || {
            let rm_m = c.family(Family::M, Norm::Rm, &v)?.eval(&zero).unwrap();
            let rm_e = c.family(Family::E, Norm::Rm, &v)?.eval(&origin).unwrap();
            let tau = rm_m.divided(&rm_e).ok_or_else(|| invalid("E_v(<0>) = 0"))?;
            Ok(Outcome::check(tau == tau_closed(&v, &p), || {
                format!("tau_v = {tau}")
            }))
        }));
        for i in 1..n {
            if v[i - 1] < v[i] {
                let mut w = v.clone();
                w.swap(i - 1, i);
                out.push(run(
                    "hooks",
                    case(&format!("intertwiner recurrence at s_{i}")),
                    || {
                        let lhs = m0(&mut c, &w)?;
                        let rhs = m0(&mut c, &v)?.times(&intertwiner_m0_ratio(&v, i, &p)?);
                        Ok(Outcome::check(lhs == rhs, || format!("{lhs} vs {rhs}")))
                    },
                ));
            }
        }
        if size(&v) < 4 {
            let w = phi_index(&v);
            out.push(run(
                "hooks",
                case("raising recurrence M_{vΦ}(0) = -M_v(0)"),
                || {
                    let lhs = m0(&mut c, &w)?;
                    let rhs = m0(&mut c, &v)?.negated();
                    Ok(Outcome::check(lhs == rhs, || format!("{lhs} vs {rhs}")))
                },
            ));
        }
    }
    for lam in partitions_up_to(4, n) {
        let case = |check: &str| json!({"index": lam, "check": check});
        out.push(run(
            "hooks",
            case("M_{λ⁻}(0) reversed hook formula"),
            || {
                let direct = m0(&mut c, &sort_increasing(&lam))?;
                let closed = principal_mrev(&lam, &p)?;
                Ok(Outcome::check(direct == closed, || {
                    format!("direct {direct}, closed {closed}")
                }))
            },
        ));
        out.push(run("hooks", case("P_λ(<0>) up to (∗)"), || {
            let direct = c.p(&lam)?.eval(&origin).unwrap();
            let ratio = direct.divided(&principal_p0(&lam, &p)?).unwrap();
            Ok(if ratio.is_monomial() {
                Outcome {
                    status: Status::Pass,
                    witness: (!ratio.is_one()).then(|| format!("(∗) = {ratio}")),
                }
            } else {
                Outcome::fail(format!("ratio {ratio}"))
            })
        }));
    }
    out
}

// ---------------------------------------------------------------- binomials, okounkov

fn plus_contained(v: &[u32], u: &[u32]) -> bool {
    contained(&sort_decreasing(v), &sort_decreasing(u))
}

fn binomial_rules(n: usize) -> Vec<Check> {
    let mut c = generic();
    let all = compositions_up_to(3, n);
    let mut out = Vec::new();
    out.push(run(
        "binomials",
        json!({"N": n, "check": "[u v] vanishing"}),
        || {
            let mut nonzero = 0;
            for u in &all {
                for v in &all {
                    let b = binom_nonsym(u, v, &mut c)?;
                    let forced = (size(u) <= size(v) && u != v) || !plus_contained(v, u);
                    if forced && !b.is_zero() {
                        return Ok(Outcome::fail(format!("[{u:?} {v:?}] = {b}")));
                    }
                    if (v.iter().all(|&x| x == 0) || u == v) && !b.is_one() {
                        return Ok(Outcome::fail(format!("[{u:?} {v:?}] = {b}, expected 1")));
                    }
                    nonzero += usize::from(!b.is_zero());
                }
            }
            Ok(Outcome {
                status: Status::Pass,
                witness: Some(format!(
                    "{} pairs, {nonzero} nonzero",
                    all.len() * all.len()
                )),
            })
        },
    ));
    let parts = partitions_up_to(3, n);
    out.push(run(
        "binomials",
        json!({"N": n, "check": "(λ μ) vanishing"}),
        || {
            for lam in &parts {
                for mu in &parts {
                    let b = binom_sym(lam, mu, &mut c)?;
                    if !contained(mu, lam) && !b.is_zero() {
                        return Ok(Outcome::fail(format!("({lam:?} {mu:?}) = {b}")));
                    }
                    if (mu.iter().all(|&x| x == 0) || lam == mu) && !b.is_one() {
                        return Ok(Outcome::fail(format!("({lam:?} {mu:?}) = {b}, expected 1")));
                    }
                }
            }
            Ok(Outcome::pass())
        },
    ));
    out
}

fn lassalle_rows(m: u32, k: usize, n: usize) -> Vec<Check> {
    let mut c = generic();
    let p = c.params().clone();
    let rect = crate::combinatorics::rectangle(m, k, n);
    partitions_in_box(m, k, n)
        .into_iter()
        .map(|lam| {
            run("binomials", json!({"m": m, "k": k, "N": n, "index": lam, "check": "Lassalle closed = hook = ratio"}), || {
                let direct = binom_sym(&rect, &lam, &mut c)?;
                let closed = lassalle_rect_binom(m, k as u32, &lam, &p)?;
                let hooks = lassalle_rect_binom_hooks(m, k as u32, &lam, &p)?;
                Ok(Outcome::check(direct == closed && direct == hooks, || {
                    format!("ratio {direct}, closed {closed}, hooks {hooks}")
                }))
            })
        })
        .collect()
}

fn plan_binomials(opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    let mut tasks: Vec<Task> = Vec::new();
    match (opts.m, opts.k, opts.n) {
        (Some(m), Some(k), Some(n)) => {
            RectSpec::new(m, k, n, true)?;
            tasks.push(Box::new(move || lassalle_rows(m, k, n)));
            tasks.push(Box::new(move || binomial_rules(n.min(3))));
        }
        (None, None, n) => {
            let ns = match n {
                Some(n) if (1..=3).contains(&n) => vec![n],
                Some(n) => {
                    return Err(invalid(format!(
                        "N = {n} is outside 1..=3 for the vanishing rules"
                    )))
                }
                None => vec![2, 3],
            };
            for n in ns {
                tasks.push(Box::new(move || binomial_rules(n)));
            }
            if n.is_none() {
                for m in 1..=3 {
                    for k in 1..=2 {
                        tasks.push(Box::new(move || lassalle_rows(m, k, 4)));
                    }
                }
            }
        }
        _ => {
            return Err(invalid(
                "binomials takes either no rectangle or all of --m, --k, --N",
            ))
        }
    }
    Ok(tasks)
}

fn okounkov_suite(n: usize) -> Vec<Check> {
    let mut c = generic();
    let mut inv = MacCache::new(c.params().inverted());
    let mut out = Vec::new();
    for lam in partitions_up_to(3, n) {
        out.push(run(
            "okounkov",
            json!({"index": lam, "check": "MS_λ = Σ c_μ P_μ"}),
            || {
                let terms = okounkov_expand(&lam, &mut c, &mut inv)?;
                Ok(verify::equal_outcome(
                    &reconstruct(&terms, &mut c)?,
                    &*c.ms(&lam)?,
                ))
            },
        ));
        out.push(run(
            "okounkov",
            json!({"index": lam, "check": "P_λ(q⁻¹,t⁻¹) / P_λ(q,t)"}),
            || {
                Ok(match param_inversion_ratio(&lam, &mut c)? {
                    Some(r) => Outcome::report(format!("ratio {r}")),
                    None => Outcome::report("not proportional"),
                })
            },
        ));
    }
    out
}

// ---------------------------------------------------------------- clustering

fn rect_grid(
    opts: &SuiteOptions,
    default: &[(u32, usize, usize)],
    symmetric: bool,
) -> Result<Vec<RectSpec>, AlgebraError> {
    match (opts.m, opts.k, opts.n) {
        (None, None, None) => default
            .iter()
            .map(|&(m, k, n)| RectSpec::new(m, k, n, symmetric))
            .collect(),
        (Some(m), Some(k), Some(n)) => Ok(vec![RectSpec::new(m, k, n, symmetric)?]),
        _ => Err(invalid("give all of --m, --k, --N or none of them")),
    }
}

fn plan_clustering_sym(opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    let specs = rect_grid(opts, &SYM_GRID, true)?;
    let all = opts.m.is_none();
    let mut tasks: Vec<Task> = Vec::new();
    for spec in specs {
        tasks.push(Box::new(move || {
            let mut g = generic();
            let mut out = Vec::new();
            for map in admissible_specializations(&spec) {
                out.extend(verify::verify_symmetric_clustering(&spec, &map, &mut g));
            }
            out.extend(verify::negative_control(&spec, &mut g));
            out.extend(verify::verify_denominator_lemmas(&spec, &mut g));
            out
        }));
        let key = (spec.m, spec.k, spec.n);
        if all || key == (2, 2, 4) {
            tasks.push(Box::new(|| vec![examples::example_1(&mut generic())]));
        }
        if all || key == (3, 1, 2) {
            tasks.push(Box::new(|| examples::example_2(&mut generic())));
        }
    }
    if all || (opts.m, opts.k, opts.n) == (Some(4), Some(2), Some(4)) {
        tasks.push(Box::new(|| examples::example_3(&mut generic())));
    }
    Ok(tasks)
}

fn plan_clustering_nonsym(opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    let specs = rect_grid(opts, &NONSYM_GRID, false)?;
    let mut tasks: Vec<Task> = Vec::new();
    for spec in specs {
        tasks.push(Box::new(move || {
            let mut g = generic();
            let mut out = Vec::new();
            for map in admissible_specializations(&spec) {
                out.extend(verify::verify_nonsym_clustering(&spec, &map, &mut g));
            }
            out.push(verify::verify_b_support(&spec, &mut g));
            out
        }));
    }
    if opts.m.is_none() {
        tasks.push(Box::new(|| vec![staircase::e210(&mut generic())]));
    }
    Ok(tasks)
}

fn plan_jack(opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    let mut tasks: Vec<Task> = Vec::new();
    match (opts.n, opts.k, opts.m) {
        (None, None, None) => {
            for (n, k, m) in JACK_GRID {
                tasks.push(Box::new(move || {
                    vec![verify::verify_jack_clustering(n, k, m)]
                }));
            }
            tasks.push(Box::new(|| verify::verify_jack_schur(4)));
        }
        (Some(n), Some(k), Some(m)) => {
            RectSpec::new(m, k, n, true)?;
            if m < 2 {
                return Err(invalid("the Jack specialization needs m ≥ 2"));
            }
            tasks.push(Box::new(move || {
                vec![verify::verify_jack_clustering(n, k, m)]
            }));
        }
        _ => return Err(invalid("give all of --m, --k, --N or none of them")),
    }
    Ok(tasks)
}

fn plan_singular(opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    let specs = rect_grid(opts, &SYM_GRID, true)?;
    let mut tasks: Vec<Task> = Vec::new();
    for spec in specs {
        tasks.push(Box::new(move || {
            let mut g = generic();
            let mut out = Vec::new();
            for map in admissible_specializations(&spec) {
                out.extend(verify::singular_checks(&spec, &map, &mut g));
            }
            out.extend(verify::jolicoeur_luque_rows(&spec, &mut g));
            out
        }));
    }
    let seed = opts.seed;
    tasks.push(Box::new(move || {
        let rel = relations().into_iter().last().unwrap();
        let case = json!({"check": rel.name, "count": 20, "seed": seed});
        vec![run("singular", case, || {
            let p = Params::generic();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for trial in 0..20 {
                let n = rng.gen_range(1..=4);
                let f = random_symmetric(&mut rng, n);
                if let Some(w) = (rel.check)(&f, &mut rng, &p) {
                    return Ok(Outcome::fail(format!("trial {trial}: {w}")));
                }
            }
            Ok(Outcome::pass())
        })]
    }));
    Ok(tasks)
}

// ---------------------------------------------------------------- appendix C

pub const APPENDIX_GRID: [(usize, usize); 2] = [(4, 2), (5, 2)];
pub const APPENDIX_EXAMPLE: [usize; 4] = [2, 5, 6, 9];

fn plan_appendix(opts: &SuiteOptions) -> Result<Vec<Task>, AlgebraError> {
    let mut tasks: Vec<Task> = Vec::new();
    match (&opts.beta, opts.n, opts.k, opts.m) {
        (None, None, None, None) => {
            for (n, k) in APPENDIX_GRID {
                for m in 1..=2 {
                    tasks.push(Box::new(move || {
                        let mut g = generic();
                        appendix::omega(n, k)
                            .iter()
                            .flat_map(|b| appendix::appendix_c_verify(b, m, n, &mut g))
                            .collect()
                    }));
                }
            }
            tasks.push(Box::new(|| {
                appendix::appendix_c_verify(&APPENDIX_EXAMPLE, 2, 10, &mut generic())
            }));
        }
        (beta, Some(n), k, Some(m)) => {
            if m == 0 {
                return Err(invalid("m must be positive"));
            }
            let betas = match beta {
                Some(b) => {
                    appendix::check_beta(b, n)?;
                    if k.is_some_and(|k| k != b.len()) {
                        return Err(invalid(format!(
                            "--k {} disagrees with |β| = {}",
                            k.unwrap(),
                            b.len()
                        )));
                    }
                    vec![b.clone()]
                }
                None => {
                    let k = k.ok_or_else(|| invalid("give --k or --beta"))?;
                    if k == 0 || k > n {
                        return Err(invalid(format!("need 1 ≤ k ≤ N, got k = {k}")));
                    }
                    appendix::omega(n, k)
                }
            };
            tasks.push(Box::new(move || {
                let mut g = generic();
                betas
                    .iter()
                    .flat_map(|b| appendix::appendix_c_verify(b, m, n, &mut g))
                    .collect()
            }));
        }
        _ => {
            return Err(invalid(
                "appendixC needs --N and --m (with --k or --beta), or no options",
            ))
        }
    }
    Ok(tasks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_and_bad_options() {
        assert!(plan("nope", &SuiteOptions::default()).is_err());
        let o = SuiteOptions {
            m: Some(2),
            ..Default::default()
        };
        assert!(plan("clustering-sym", &o).is_err());
        let o = SuiteOptions {
            n: Some(4),
            m: Some(1),
            beta: Some(vec![3, 2]),
            ..Default::default()
        };
        assert!(plan("appendixC", &o).is_err());
    }

    #[test]
    fn execute_keeps_order() {
        let tasks: Vec<Task> = (0..6)
            .map(|i| Box::new(move || vec![run("t", json!(i), || Ok(Outcome::pass()))]) as Task)
            .collect();
        let rows = execute(tasks, 3);
        assert_eq!(
            rows.iter()
                .map(|c| c.case.as_i64().unwrap())
                .collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn random_inputs_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let f: MultiPoly<RatFunc> = random_laurent(&mut rng, 4);
            assert!(f
                .terms()
                .all(|(m, _)| m.exps(4).iter().map(|x| x.abs()).sum::<i64>() <= 6));
            let g: MultiPoly<RatFunc> = random_symmetric(&mut rng, 3);
            assert!(g.is_symmetric());
        }
    }
}

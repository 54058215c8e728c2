//! Compositions, partitions and Ferrers-diagram statistics.
//!
//! Indices `i, j` of cells are 1-based as in the usual diagram conventions;
//! compositions are stored as 0-based slices, so `v[i - 1]` is part `i`.

use std::cmp::Ordering;

use crate::error::AlgebraError;
use crate::exact::{Field, Params};

/// Parses `"2,0,1"`.
pub fn parse_composition(s: &str) -> Result<Vec<u32>, AlgebraError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(AlgebraError::Parse("empty index".into()));
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| AlgebraError::Parse(format!("bad part `{}` in `{s}`", p.trim())))
        })
        .collect()
}

pub fn parse_partition(s: &str) -> Result<Vec<u32>, AlgebraError> {
    let v = parse_composition(s)?;
    if !is_partition(&v) {
        return Err(AlgebraError::Invalid(format!(
            "`{s}` is not weakly decreasing"
        )));
    }
    Ok(v)
}

pub fn format_composition(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn is_partition(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

pub fn size(v: &[u32]) -> u32 {
    v.iter().sum()
}

/// Decreasing rearrangement `v⁺`.
pub fn sort_decreasing(v: &[u32]) -> Vec<u32> {
    let mut w = v.to_vec();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

/// Increasing rearrangement `v⁻`.
pub fn sort_increasing(v: &[u32]) -> Vec<u32> {
    let mut w = v.to_vec();
    w.sort_unstable();
    w
}

/// Cells `(i, j)` of the diagram, row by row.
pub fn cells(v: &[u32]) -> impl Iterator<Item = (usize, u32)> + '_ {
    v.iter()
        .enumerate()
        .flat_map(|(r, &len)| (1..=len).map(move |j| (r + 1, j)))
}

fn check_cell(v: &[u32], i: usize, j: u32) -> Result<(), AlgebraError> {
    if i == 0 || i > v.len() || j == 0 || j > v[i - 1] {
        Err(AlgebraError::Invalid(format!(
            "cell ({i},{j}) outside diagram of [{}]",
            format_composition(v)
        )))
    } else {
        Ok(())
    }
}

pub fn arm(v: &[u32], i: usize, j: u32) -> Result<u32, AlgebraError> {
    check_cell(v, i, j)?;
    Ok(v[i - 1] - j)
}

pub fn leg(v: &[u32], i: usize, j: u32) -> Result<u32, AlgebraError> {
    check_cell(v, i, j)?;
    let vi = v[i - 1];
    let above = v[..i - 1]
        .iter()
        .filter(|&&vk| j <= vk + 1 && vk < vi)
        .count();
    let below = v[i..].iter().filter(|&&vk| j <= vk && vk <= vi).count();
    Ok((above + below) as u32)
}

pub fn coarm(j: u32) -> u32 {
    j - 1
}

pub fn coleg(v: &[u32], i: usize) -> u32 {
    let vi = v[i - 1];
    let above = v[..i - 1].iter().filter(|&&vk| vi <= vk).count();
    let below = v[i..].iter().filter(|&&vk| vi < vk).count();
    (above + below) as u32
}

/// `r_v[i] = 1 + coleg_v(i)`; a permutation of `1..=N`.
pub fn rank_vector(v: &[u32]) -> Vec<usize> {
    (1..=v.len()).map(|i| 1 + coleg(v, i) as usize).collect()
}

/// Exponents `(v[i], N - r_v[i])` of the spectral vector entries `q^a t^b`.
pub fn spectral_exponents(v: &[u32]) -> Vec<(i64, i64)> {
    let n = v.len();
    rank_vector(v)
        .iter()
        .zip(v)
        .map(|(&r, &vi)| (vi as i64, (n - r) as i64))
        .collect()
}

/// `⟨v⟩` as field elements.
pub fn spectral_vector<F: Field>(v: &[u32], p: &Params<F>) -> Vec<F> {
    spectral_exponents(v)
        .into_iter()
        .map(|(a, b)| p.mono(a, b))
        .collect()
}

/// `n(v)`, the sum of legs.
pub fn n_stat(v: &[u32]) -> u32 {
    cells(v).map(|(i, j)| leg(v, i, j).unwrap()).sum()
}

/// `n'(v)`, the sum of arms.
pub fn nprime_stat(v: &[u32]) -> u32 {
    cells(v).map(|(i, j)| arm(v, i, j).unwrap()).sum()
}

/// `h(v, z) = ∏ (1 - z q^arm t^leg)` over the cells.
pub fn hook_product<F: Field>(v: &[u32], z: &F, p: &Params<F>) -> F {
    let mut acc = F::one();
    for (i, j) in cells(v) {
        let a = arm(v, i, j).unwrap() as i64;
        let l = leg(v, i, j).unwrap() as i64;
        acc = acc.times(&F::one().minus(&z.times(&p.mono(a, l))));
    }
    acc
}

/// `(a; q)_n = ∏_{i=1}^{n} (1 - a q^{i-1})`.
pub fn pochhammer_q<F: Field>(a: &F, q: &F, n: u32) -> F {
    let mut acc = F::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = acc.times(&F::one().minus(&aq));
        aq = aq.times(q);
    }
    acc
}

/// `(a; q, t)_λ = ∏_i (a t^{1-i}; q)_{λ[i]}`.
pub fn pochhammer_qt<F: Field>(a: &F, lam: &[u32], p: &Params<F>) -> F {
    let mut acc = F::one();
    for (r, &part) in lam.iter().enumerate() {
        let ai = a.times(&p.t_pow(-(r as i64)));
        acc = acc.times(&pochhammer_q(&ai, &p.q, part));
    }
    acc
}

/// Conjugate partition.
pub fn conjugate(lam: &[u32]) -> Vec<u32> {
    let m = lam.iter().copied().max().unwrap_or(0);
    (1..=m)
        .map(|j| lam.iter().filter(|&&x| x >= j).count() as u32)
        .collect()
}

/// Dominance of equal-size vectors by partial sums: `Some(Less)` when `u ≼_D v`.
fn partial_sum_compare(u: &[u32], v: &[u32]) -> Option<Ordering> {
    let (mut su, mut sv) = (0i64, 0i64);
    let (mut le, mut ge) = (true, true);
    for k in 0..u.len().max(v.len()) {
        su += *u.get(k).unwrap_or(&0) as i64;
        sv += *v.get(k).unwrap_or(&0) as i64;
        le &= su <= sv;
        ge &= su >= sv;
    }
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// The extended dominance order on compositions; `None` means incomparable.
pub fn dominance_compare(u: &[u32], v: &[u32]) -> Option<Ordering> {
    match size(u).cmp(&size(v)) {
        Ordering::Equal => {}
        o => return Some(o),
    }
    let (up, vp) = (sort_decreasing(u), sort_decreasing(v));
    if up != vp {
        return partial_sum_compare(&up, &vp);
    }
    partial_sum_compare(u, v)
}

/// Multiplicities `m_λ(i)` for `i = 0, 1, ...` (zero parts included).
pub fn multiplicities(lam: &[u32]) -> Vec<u32> {
    let m = lam.iter().copied().max().unwrap_or(0) as usize;
    let mut out = vec![0; m + 1];
    for &x in lam {
        out[x as usize] += 1;
    }
    out
}

/// `(t; t)_n / (1 - t)^n = ∏_{i=1}^{n} (1 - t^i)/(1 - t)`, i.e. `[n]_t!`.
fn t_factorial<F: Field>(n: u32, p: &Params<F>) -> F {
    let mut acc = F::one();
    let mut s = F::zero();
    for i in 0..n {
        s = s.plus(&p.t_pow(i as i64));
        acc = acc.times(&s);
    }
    acc
}

/// Poincaré polynomial of the stabilizer of `λ` (length `N`).
pub fn poincare_poly<F: Field>(lam: &[u32], p: &Params<F>) -> F {
    multiplicities(lam)
        .iter()
        .fold(F::one(), |acc, &m| acc.times(&t_factorial(m, p)))
}

/// Poincaré polynomial of the full symmetric group `S_N`.
pub fn poincare_sn<F: Field>(n: usize, p: &Params<F>) -> F {
    t_factorial(n as u32, p)
}

/// `(t,t)_N / ∏_i (t,t)_{m_λ(i)}`.
pub fn t_multinomial<F: Field>(lam: &[u32], p: &Params<F>) -> F {
    poincare_sn(lam.len(), p)
        .divided(&poincare_poly(lam, p))
        .unwrap()
}

/// `v^∞[j]` (1-based `j`).
pub fn v_inf(v: &[u32], j: usize) -> i64 {
    let n = v.len();
    v[(j - 1) % n] as i64 + ((j - 1) / n) as i64
}

/// Exponents of `⟨v⟩^∞[j] = q^{⌊(j-1)/N⌋} ⟨v⟩[(j-1) mod N + 1]`.
pub fn spectral_inf_exponents(v: &[u32], j: usize) -> (i64, i64) {
    let n = v.len();
    let (a, b) = spectral_exponents(v)[(j - 1) % n];
    (a + ((j - 1) / n) as i64, b)
}

/// Pairs `(i, j)` with `i ≤ N < ... `, `j > i` and `v^∞[i] > v^∞[j]`.
pub fn infinite_extension_pairs(v: &[u32]) -> Vec<(usize, usize)> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let spread = (v.iter().max().unwrap() - v.iter().min().unwrap() + 1) as usize;
    let mut out = Vec::new();
    for i in 1..=n {
        let bound = i + n * spread;
        for j in i + 1..=bound {
            if v_inf(v, i) > v_inf(v, j) {
                out.push((i, j));
            }
        }
        // past the bound every later entry is at least v^∞[i]
        debug_assert!((bound + 1..=bound + 2 * n).all(|j| v_inf(v, j) >= v_inf(v, i)));
    }
    out
}

/// All compositions of `total` into `n` parts, in lexicographically decreasing order.
pub fn compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions with `|v| <= max_size`, by increasing size.
pub fn compositions_up_to(max_size: u32, n: usize) -> Vec<Vec<u32>> {
    (0..=max_size).flat_map(|s| compositions(s, n)).collect()
}

/// Partitions of `total` with at most `n` parts, padded with zeros to length `n`.
pub fn partitions(total: u32, n: usize) -> Vec<Vec<u32>> {
    compositions(total, n)
        .into_iter()
        .filter(|v| is_partition(v))
        .collect()
}

pub fn partitions_up_to(max_size: u32, n: usize) -> Vec<Vec<u32>> {
    (0..=max_size).flat_map(|s| partitions(s, n)).collect()
}

/// Partitions of length `n` contained in the rectangle `[m^k, 0^{n-k}]`.
pub fn partitions_in_box(m: u32, k: usize, n: usize) -> Vec<Vec<u32>> {
    partitions_up_to(m * k as u32, n)
        .into_iter()
        .filter(|l| l[0] <= m && l[k..].iter().all(|&x| x == 0))
        .collect()
}

/// `μ ⊆ λ` as diagrams (after sorting).
pub fn contained(mu: &[u32], lam: &[u32]) -> bool {
    let (a, b) = (sort_decreasing(mu), sort_decreasing(lam));
    a.iter().zip(&b).all(|(x, y)| x <= y) && a.len() <= b.len()
}

/// `[m^k, 0^{n-k}]`.
pub fn rectangle(m: u32, k: usize, n: usize) -> Vec<u32> {
    let mut v = vec![m; k];
    v.resize(n, 0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Params, RatFunc};

    #[test]
    fn arms_and_legs() {
        assert_eq!(arm(&[2, 1], 1, 1).unwrap(), 1);
        assert_eq!(arm(&[2, 1], 1, 2).unwrap(), 0);
        assert_eq!(leg(&[2, 1], 1, 1).unwrap(), 1);
        assert!(leg(&[2, 1], 2, 2).is_err());
        assert_eq!(coleg(&[0, 2, 1], 1), 2);
        assert_eq!(coleg(&[0, 2, 1], 2), 0);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_vector(&[0, 0, 0]), vec![1, 2, 3]);
        assert_eq!(rank_vector(&[2, 0]), vec![1, 2]);
        assert_eq!(rank_vector(&[0, 2, 1]), vec![3, 1, 2]);
    }

    #[test]
    fn spectral_vectors() {
        assert_eq!(spectral_exponents(&[0, 0]), vec![(0, 1), (0, 0)]);
        assert_eq!(spectral_exponents(&[2, 0]), vec![(2, 1), (0, 0)]);
        assert_eq!(spectral_exponents(&[0, 1]), vec![(0, 0), (1, 1)]);
        let p = Params::generic();
        assert_eq!(
            spectral_vector(&[0, 0, 0], &p),
            vec![p.mono(0, 2), p.t.clone(), RatFunc::one()]
        );
    }

    #[test]
    fn hooks() {
        let p = Params::generic();
        assert!(hook_product(&[0, 0], &p.q, &p).is_one());
        let qt = p.mono(1, 1);
        assert_eq!(hook_product(&[1, 0], &qt, &p), p.one_minus(1, 1));
        let expect = p
            .one_minus(1, 2)
            .times(&p.one_minus(0, 1))
            .times(&p.one_minus(0, 1));
        assert_eq!(hook_product(&[2, 1], &p.t, &p), expect);
    }

    #[test]
    fn pochhammers() {
        let p = Params::generic();
        let a = RatFunc::monomial(1, 2, 3);
        assert!(pochhammer_q(&a, &p.q, 0).is_one());
        let two = RatFunc::one()
            .minus(&a)
            .times(&RatFunc::one().minus(&a.times(&p.q)));
        assert_eq!(pochhammer_q(&a, &p.q, 2), two);
        let expect = two.times(&RatFunc::one().minus(&a.times(p.t_inv())));
        assert_eq!(pochhammer_qt(&a, &[2, 1], &p), expect);
    }

    #[test]
    fn statistics() {
        assert_eq!(n_stat(&[2, 1]), 1);
        assert_eq!(nprime_stat(&[2, 1]), 1);
        assert_eq!(conjugate(&[3, 1, 0]), vec![2, 1, 1]);
    }

    #[test]
    fn dominance() {
        assert_eq!(dominance_compare(&[1, 1], &[2, 0]), Some(Ordering::Less));
        assert_eq!(dominance_compare(&[0, 2], &[2, 0]), Some(Ordering::Less));
        assert_eq!(dominance_compare(&[1, 0], &[0, 2]), Some(Ordering::Less));
        assert_eq!(dominance_compare(&[3, 1, 1, 1], &[2, 2, 2, 0]), None);
    }

    #[test]
    fn poincare() {
        let p = Params::generic();
        assert!(poincare_poly(&[1, 0], &p).is_one());
        assert_eq!(poincare_sn(2, &p), RatFunc::one().plus(&p.t));
        let expect = RatFunc::one().plus(&p.t).plus(&p.mono(0, 2));
        assert_eq!(t_multinomial(&[1, 0, 0], &p), expect);
    }

    #[test]
    fn infinite_vectors() {
        assert!(infinite_extension_pairs(&[0, 0, 0]).is_empty());
        // v^∞ = [1,0,2,1,3,2,...]
        assert_eq!(
            (1..=6).map(|j| v_inf(&[1, 0], j)).collect::<Vec<_>>(),
            vec![1, 0, 2, 1, 3, 2]
        );
        assert_eq!(infinite_extension_pairs(&[1, 0]), vec![(1, 2)]);
    }

    #[test]
    fn enumerations() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(partitions(3, 3).len(), 3);
        assert_eq!(
            partitions_in_box(2, 1, 3),
            vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 0, 0]]
        );
    }
}

use proptest::prelude::*;

use macdonald::combinatorics::{
    conjugate, dominance_compare, rank_vector, size, sort_decreasing, spectral_exponents,
};
use macdonald::exact::{
    BigInt, BigRational, Cyclo, Field, MonoImage, Params, QTPoly, RatFunc, SpecMap,
};
use macdonald::hecke::{apply_t, apply_t_inv, divided_difference};
use macdonald::poly::{Mono, MultiPoly};

fn laurent<F: Field>(n: usize) -> impl Strategy<Value = MultiPoly<F>> {
    prop::collection::vec((prop::collection::vec(-2i64..=3, n), -3i64..=3), 1..5).prop_map(
        move |terms| {
            MultiPoly::from_terms(
                n,
                terms
                    .into_iter()
                    .map(|(e, c)| (Mono::from_exps(&e), F::from_i64(c))),
            )
        },
    )
}

fn qt_poly() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -3i64..=3), 1..4).prop_map(|terms| {
        let mut acc = QTPoly::zero();
        for (a, b, c) in terms {
            acc = acc.add(&QTPoly::monomial(BigInt::from(c), a, b));
        }
        acc
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (qt_poly(), qt_poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d))
}

fn partition() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..5, 1..5).prop_map(|v| sort_decreasing(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in laurent::<BigRational>(3), b in laurent::<BigRational>(3), c in laurent::<BigRational>(3)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in laurent::<BigRational>(2), b in laurent::<BigRational>(2), img in prop::collection::vec(1i64..4, 2)) {
        // polynomial images keep negative powers out of the way
        let a = a.mul_monomial(&Mono::from_exps(&[2, 2]), &BigRational::from_integer(1.into()));
        let b = b.mul_monomial(&Mono::from_exps(&[2, 2]), &BigRational::from_integer(1.into()));
        let images: Vec<MultiPoly<BigRational>> = img.iter().enumerate()
            .map(|(k, &s)| MultiPoly::var(3, k).add(&MultiPoly::var(3, 2).scale(&BigRational::from_integer(s.into()))))
            .collect();
        prop_assert_eq!(a.mul(&b).substitute(&images, 3), a.substitute(&images, 3).mul(&b.substitute(&images, 3)));
    }

    #[test]
    fn divided_difference_definition(f in laurent::<BigRational>(3), i in 1usize..3) {
        let dd = divided_difference(&f, i);
        let lhs = dd.mul(&MultiPoly::var(3, i - 1).sub(&MultiPoly::var(3, i)));
        prop_assert_eq!(lhs, f.sub(&f.swap_vars(i - 1, i)));
    }

    #[test]
    fn hecke_quadratic_and_inverse(f in laurent::<RatFunc>(3), i in 1usize..3) {
        let p = Params::generic();
        let h = apply_t(&f, i, &p).sub(&f.scale(&p.t));
        prop_assert!(apply_t(&h, i, &p).add(&h).is_zero());
        prop_assert_eq!(apply_t_inv(&apply_t(&f, i, &p), i, &p), f);
    }

    #[test]
    fn ratfunc_field(a in ratfunc(), b in ratfunc()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.divided(&b).unwrap().times(&b), a.clone());
        prop_assert_eq!(a.invert_params().invert_params(), a.clone());
        prop_assert_eq!(a.plus(&b).invert_params(), a.invert_params().plus(&b.invert_params()));
    }

    #[test]
    fn roots_of_unity(n in 1u32..13, a in -20i64..20, b in -20i64..20) {
        let w = |k| Cyclo::root_power(n, k);
        prop_assert_eq!(w(a).times(&w(b)), w(a + b));
        let total = (0..n as i64).fold(Cyclo::zero(), |acc, k| acc.plus(&w(k)));
        prop_assert_eq!(total.is_zero(), n > 1);
    }

    #[test]
    fn spec_map_round_trip(n in 1u32..7, qr in 0i64..7, qz in -4i32..5, tr in 0i64..7, tz in -4i32..5) {
        let map = SpecMap::new(n, MonoImage { root: qr, z: qz }, MonoImage { root: tr, z: tz });
        prop_assert_eq!(SpecMap::parse(&map.to_string()).unwrap(), map);
    }

    #[test]
    fn partition_statistics(lam in partition(), v in prop::collection::vec(0u32..4, 1..5)) {
        let c = conjugate(&lam);
        let trimmed: Vec<u32> = lam.iter().copied().filter(|&x| x > 0).collect();
        prop_assert_eq!(conjugate(&c), trimmed);
        prop_assert_eq!(size(&c), size(&lam));
        let mut r = rank_vector(&v);
        r.sort_unstable();
        prop_assert_eq!(r, (1..=v.len()).collect::<Vec<_>>());
        // ⟨v⟩ is a rearrangement of ⟨v⁺⟩
        let mut a = spectral_exponents(&v);
        let mut b = spectral_exponents(&sort_decreasing(&v));
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dominance_is_antisymmetric(u in prop::collection::vec(0u32..4, 3), v in prop::collection::vec(0u32..4, 3)) {
        let uv = dominance_compare(&u, &v);
        let vu = dominance_compare(&v, &u);
        prop_assert_eq!(uv.map(|o| o.reverse()), vu);
        prop_assert_eq!(uv == Some(std::cmp::Ordering::Equal), u == v);
    }
}

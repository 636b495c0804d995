use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use lrsym::birational::BirationalContext;
use lrsym::lr::{lr_family, lr_tableau, lr_via_r};
use lrsym::symmetric::{schur_laurent, x_pi_power, SchurCache};
use lrsym::tropical::{phi, phi_direct, phi_inverse, PhiParams, TropicalContext};
use lrsym::tuple::{enumerate_r, partitions_of, RSetParams};
use lrsym::{IntTuple, QPlus, Semifield, Snake};

fn tuple(n: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> impl Strategy<Value = IntTuple> {
    prop::collection::vec(lo..=hi, n).prop_map(|v| IntTuple::new(v).unwrap())
}

fn partition(n: usize, max: i64) -> impl Strategy<Value = Snake> {
    prop::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Snake::new(IntTuple::new(v).unwrap()).unwrap()
    })
}

fn qplus_pair() -> impl Strategy<Value = (Vec<QPlus>, Vec<QPlus>)> {
    (1usize..=5).prop_flat_map(|n| {
        let entry = (1u32..=30, 1u32..=30).prop_map(|(p, q)| QPlus::new(p, q).unwrap());
        (
            prop::collection::vec(entry.clone(), n),
            prop::collection::vec(entry, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qplus_map_is_an_involution_preserving_the_product((u, x) in qplus_pair()) {
        let ctx = BirationalContext::new(u.clone()).unwrap();
        let y = ctx.apply(&x).unwrap();
        prop_assert_eq!(ctx.apply(&y).unwrap(), x.clone());
        let prod = |v: &[QPlus]| lrsym::semifield::product(v);
        prop_assert_eq!(prod(&y).mul(&prod(&x)), prod(&u).mul(&prod(&u)));
        prop_assert_eq!(ctx.apply_via_back_formula(&x).unwrap(), y);
    }

    #[test]
    fn tropical_map_is_an_involution_on_wide_inputs(
        (mu, gamma) in (2usize..=6).prop_flat_map(|n| (tuple(n..=n, -40, 40), tuple(n..=n, -40, 40)))
    ) {
        let ctx = TropicalContext::new(mu);
        prop_assert!(ctx.failed_identities(&gamma).unwrap().is_empty());
    }

    #[test]
    fn phi_inverse_undoes_phi(
        (mu, omega, a, b) in (2usize..=5).prop_flat_map(|n| (partition(n, 6), tuple(n..=n, -10, 15), 0i64..=5, 0i64..=5))
    ) {
        let params = PhiParams::new(a, b, mu).unwrap();
        let image = phi(&params, &omega).unwrap();
        prop_assert_eq!(phi_inverse(&params, &image).unwrap(), omega.clone());
        prop_assert_eq!(phi_direct(&params, &omega).unwrap().image, image);
    }

    #[test]
    fn zeta_round_trips(
        (mu, gamma, a, b) in (2usize..=4).prop_flat_map(|n| (tuple(n..=n, -3, 4), tuple(n..=n, -3, 4), -1i64..=3, -1i64..=3))
    ) {
        let ctx = TropicalContext::new(mu.clone());
        let eta = ctx.apply(&gamma).unwrap();
        let src = enumerate_r(&RSetParams { mu: mu.clone(), gamma: gamma.clone(), a, b });
        let dst = enumerate_r(&RSetParams { mu, gamma: eta.clone(), a: b, b: a });
        prop_assert_eq!(src.len(), dst.len());
        for nu in &src {
            let zeta = ctx.zeta_match(&gamma, nu, a, b).unwrap();
            prop_assert!(dst.contains(&zeta));
            prop_assert_eq!(&ctx.zeta_match(&eta, &zeta, b, a).unwrap(), nu);
        }
    }

    #[test]
    fn lr_coefficients_are_graded_nonnegative_and_symmetric(
        (mu, nu) in (1usize..=4).prop_flat_map(|n| (partition(n, 3), partition(n, 3)))
    ) {
        let cache = SchurCache::new();
        let fam = lr_family(&mu, &nu, &cache).unwrap();
        prop_assert_eq!(&fam, &lr_family(&nu, &mu, &cache).unwrap());
        for (lambda, c) in fam.iter() {
            prop_assert!(c.is_positive());
            prop_assert_eq!(lambda.size(), mu.size() + nu.size());
            prop_assert_eq!(c.clone(), BigInt::from(lr_tableau(&mu, &nu, lambda)));
        }
    }

    #[test]
    fn schur_shift_rule(lambda in (1usize..=3).prop_flat_map(|n| tuple(n..=n, -2, 3)), d in -3i64..=3) {
        let mut v = lambda.into_entries();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Snake::new(IntTuple::new(v).unwrap()).unwrap();
        let n = lambda.dim();
        prop_assert_eq!(
            schur_laurent(&lambda.shift(d)).unwrap(),
            &x_pi_power(n, d).unwrap() * &schur_laurent(&lambda).unwrap()
        );
    }

    #[test]
    fn r_set_formula_matches_expansion(mu in partition(3, 3), a in 0i64..=2, b in 0i64..=2) {
        let cache = SchurCache::new();
        let params = PhiParams::new(a, b, mu.clone()).unwrap();
        let fam = lr_family(&params.alpha(), &mu, &cache).unwrap();
        for lambda in partitions_of(params.alpha().size() + mu.size(), 3) {
            prop_assert_eq!(BigInt::from(lr_via_r(&params, &lambda)), fam.get(&lambda));
        }
    }
}

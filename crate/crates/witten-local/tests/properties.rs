use proptest::prelude::*;

use witten_local::amplitude::{monomial, AmplitudeSpec, Bump};
use witten_local::coeff::pinelis_identity_check;
use witten_local::exact::rat;
use witten_local::oracle::extract_coefficients;
use witten_local::scenario::{ModelConfig, Scenario};
use witten_local::schwartz::SchwartzSpec;
use witten_local::sphere::{monomial_moment, SphereRule};
use witten_local::{ExactScalar, Sign};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn half_line_functionals_sum_to_the_derivative(
        poly in prop::collection::vec(-2.0f64..2.0, 1..5),
        tau in 0.3f64..2.0,
        j in 0usize..7,
    ) {
        let s = SchwartzSpec::new(poly, tau).unwrap();
        let d = s.deriv_at_zero(j);
        let sum = s.bracket(j, Sign::Plus) + s.bracket(j, Sign::Minus);
        prop_assert!((sum - d).norm() <= 1e-12 * d.norm().max(1.0));
    }

    #[test]
    fn pinelis_holds(p in 0usize..18, q in 0usize..18) {
        prop_assert!(pinelis_identity_check(p, q));
    }

    #[test]
    fn exact_scalars_distribute(a in -20i64..20, b in 1i64..20, pa in -2i32..3, ia in 0i64..4, pb in -2i32..3, ib in 0i64..4) {
        let x = ExactScalar::term(rat(a, b), pa, ia);
        let y = ExactScalar::term(rat(b, 3), pb, ib);
        let z = ExactScalar::int(a);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        let lhs = (&x * &y).to_complex();
        let rhs = x.to_complex() * y.to_complex();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
    }

    #[test]
    fn sphere_rules_integrate_monomials(alpha in prop::collection::vec(0u32..4, 2..5)) {
        let n = alpha.len();
        let degree: u32 = alpha.iter().sum();
        let rule = SphereRule::new(n, degree as usize);
        let got = rule.integrate(|x| x.iter().zip(&alpha).map(|(v, &e)| v.powi(e as i32)).product());
        let want = monomial_moment(&alpha);
        prop_assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0));
    }

    #[test]
    fn fit_recovers_exact_series(a in prop::collection::vec(-5.0f64..5.0, 3)) {
        let eps: Vec<f64> = (0..8).map(|i| 0.1 * 0.6f64.powi(i)).collect();
        let v: Vec<f64> = eps.iter().map(|e| a[0] * e + a[1] * e * e + a[2] * e.powi(3)).collect();
        let got = extract_coefficients(&eps, &v, 2).unwrap();
        for (g, w) in got.iter().zip(&a) {
            prop_assert!((g - w).abs() <= 1e-6 * (1.0 + w.abs()), "{got:?} vs {a:?}");
        }
    }

    #[test]
    fn scenarios_round_trip(
        weights in prop::collection::vec(1i64..5, 1..3),
        negatives in 0usize..3,
        zetas in prop::collection::vec(-1.0f64..1.0, 1..4),
        order in 0usize..4,
        num in -9i64..10,
        den in 1i64..7,
        tau in 0.2f64..3.0,
    ) {
        let k = negatives.min(weights.len());
        let w: Vec<i64> = weights.iter().enumerate().map(|(i, &x)| if i >= weights.len() - k { -x } else { x }).collect();
        let d = 2 * w.len();
        let mut e = vec![0u32; d];
        e[0] = 2;
        let mut amp = AmplitudeSpec::new(vec![monomial(1, &vec![0; d])], Bump::new(0.5, 2.0).unwrap());
        amp.monomials.push(witten_local::amplitude::Monomial::new(rat(num, den), e));
        let sc = Scenario {
            zeta_values: zetas,
            order,
            model: ModelConfig { weights: w, j_f: 0.25 },
            amplitude: amp,
            sigma: SchwartzSpec::new(vec![1.0, -0.5], tau).unwrap(),
            oracle: Default::default(),
        };
        let text = sc.to_toml().unwrap();
        prop_assert_eq!(Scenario::from_toml(&text).unwrap(), sc);
    }
}

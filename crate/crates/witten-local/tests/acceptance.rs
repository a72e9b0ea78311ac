//! One PASS/FAIL line per acceptance criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use witten_local::amplitude::{monomial, AmplitudeSpec, Bump, LaplacianNormalization, Monomial, ScriptS};
use witten_local::coeff::{
    c_pm_j0pq, c_pm_leading_closed, leading_constants, n_pm, n_pm_raw, pinelis_identity_check, CTable,
    LeadingConstants,
};
use witten_local::exact::{factorial, rat, sign_pow, two_pow};
use witten_local::expansion::{leading_singular_weight, one_sided_limit};
use witten_local::harness::{verify, SlopeStatus, DEFAULT_SLOPE_TOL};
use witten_local::kernel::{central_difference, interior_integral, FKernel};
use witten_local::oracle::{
    extract_coefficients, noise_floor, oracle_integral, oracle_sweep, remainder_slope, OracleMethod, DEFAULT_TOL,
};
use witten_local::quadric::{w_dpm_integral, QuadricSlice};
use witten_local::scenario::Scenario;
use witten_local::schwartz::SchwartzSpec;
use witten_local::{ExactScalar, LocalModel, Sign};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn run(n: usize, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t0 = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f));
    let dt = t0.elapsed();
    let (pass, detail) = match res {
        Ok(o) => (o.pass && dt <= budget, o.detail),
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        }
    };
    let over = if dt > budget { format!(", over budget {:.0}s", budget.as_secs_f64()) } else { String::new() };
    println!(
        "criterion {n:>2} {}: {title} ({detail}; {:.1}s{over})",
        if pass { "PASS" } else { "FAIL" },
        dt.as_secs_f64()
    );
    pass
}

fn model(w: &[i64]) -> LocalModel {
    LocalModel::new(w.to_vec(), 0.0).unwrap()
}

fn exps(d: usize, set: &[(usize, u32)]) -> Vec<u32> {
    let mut e = vec![0; d];
    for &(i, p) in set {
        e[i] = p;
    }
    e
}

/// `1 + x_1² − x_d² + 2x_1²x_d² + x_d⁴` with a cutoff whose transition covers `|ζ'| = 1`.
fn quartic_amplitude(d: usize) -> AmplitudeSpec {
    AmplitudeSpec::new(
        vec![
            monomial(1, &exps(d, &[])),
            monomial(1, &exps(d, &[(0, 2)])),
            monomial(-1, &exps(d, &[(d - 1, 2)])),
            monomial(2, &exps(d, &[(0, 2), (d - 1, 2)])),
            monomial(1, &exps(d, &[(d - 1, 4)])),
        ],
        Bump::new(0.5, 2.0).unwrap(),
    )
}

fn amplitude_toml(amp: &AmplitudeSpec) -> String {
    let rows: Vec<String> = amp
        .monomials
        .iter()
        .map(|m: &Monomial| format!("  {{ coeff = \"{}\", exponents = {:?} }},", m.coeff, m.exponents))
        .collect();
    format!("bump = {{ r0 = {}, r1 = {} }}\nmonomials = [\n{}\n]\n", amp.bump.r0, amp.bump.r1, rows.join("\n"))
}

fn slope_scenario(w: &[i64]) -> Scenario {
    let d = 2 * w.len();
    let text = format!(
        "zeta_values = [-0.5, 0.0, 0.5]\norder = 2\n\n[model]\nweights = {w:?}\n\n[amplitude]\n{}\n[sigma]\npoly = [1.0, 0.5]\ntau = 1.0\n",
        amplitude_toml(&quartic_amplitude(d))
    );
    Scenario::from_toml(&text).unwrap()
}

// 1 ------------------------------------------------------------------------

fn exact_identities() -> Outcome {
    let mut checked = 0usize;
    for n in 0..=8usize {
        let t = CTable::build(n, n + 2);
        for m in 1..=n + 2 {
            assert_eq!(t.get(m, m - 1, 0), BigRational::one(), "C_(N,m,m-1,0), N={n} m={m}");
            assert_eq!(t.get(m, 0, m - 1), two_pow(1 - m as i64), "C_(N,m,0,m-1), N={n} m={m}");
            let floor = (m as i64 - 1 - n as i64).max(0) as usize;
            for p in 0..m {
                for q in 0..(m - p) {
                    if p + q < floor {
                        assert!(t.get(m, p, q).is_zero(), "vanishing C, N={n} m={m} p={p} q={q}");
                    }
                }
            }
            checked += 1;
        }
        let expect = BigRational::from_integer(BigInt::from(sign_pow(n as i64)) * factorial(n as u64));
        assert_eq!(t.get(n + 1, 0, 0), expect, "C_(N,N+1,0,0), N={n}");
    }
    for p in 0..=10 {
        for q in 0..=10 {
            assert!(pinelis_identity_check(p, q), "Pinelis p={p} q={q}");
        }
    }
    for np in (2..=12).step_by(2) {
        for nm in (2..=12).step_by(2) {
            let a = n_pm(np, nm, Sign::Plus).unwrap();
            let b = n_pm(np, nm, Sign::Minus).unwrap();
            assert_eq!(n_pm_raw(np, nm, Sign::Plus).unwrap(), rat(a, 1), "N+ ({np},{nm})");
            assert_eq!(n_pm_raw(np, nm, Sign::Minus).unwrap(), rat(b, 1), "N- ({np},{nm})");
            assert!(a != 0 && b != 0 && a != b, "N± ({np},{nm}) = {a}, {b}");
        }
    }
    let mut leading = 0;
    for lp in 1..=7usize {
        for lm in 1..=7usize {
            let bl = lp + lm - 2;
            if bl > 6 {
                continue;
            }
            for sign in [Sign::Plus, Sign::Minus] {
                let general = c_pm_j0pq(lp, lm, sign, bl + 1, 0, 0).unwrap();
                assert_eq!(general, c_pm_leading_closed(lp, lm, sign).unwrap(), "c± L+={lp} L-={lm} {sign:?}");
                leading += 1;
            }
        }
    }
    outcome(true, format!("{checked} (N, m) slices of C, 121 Pinelis pairs, 36 N± pairs, {leading} leading c±"))
}

// 2 ------------------------------------------------------------------------

fn functional_identities() -> Outcome {
    let specs = [
        SchwartzSpec::gaussian(),
        SchwartzSpec::new(vec![1.0, 1.0], 1.0).unwrap(),
        SchwartzSpec::new(vec![0.5, -1.0, 0.25], 0.7).unwrap(),
        SchwartzSpec::new(vec![0.0, 0.0, 1.0, 0.3], 1.6).unwrap(),
        SchwartzSpec::new(vec![2.0, 0.0, 0.0, 0.0, -0.1], 1.2).unwrap(),
        SchwartzSpec::new(vec![1.0, -0.5], 0.4).unwrap(),
    ];
    let (mut sum_err, mut quad_err) = (0.0f64, 0.0f64);
    for s in &specs {
        for j in 0..=6 {
            let p = s.bracket(j, Sign::Plus);
            let m = s.bracket(j, Sign::Minus);
            let d = s.deriv_at_zero(j);
            sum_err = sum_err.max((p + m - d).norm() / d.norm().max(1.0));
            for (side, closed) in [(Sign::Plus, p), (Sign::Minus, m)] {
                let q = s.bracket_by_quadrature(j, side);
                quad_err = quad_err.max((q - closed).norm() / closed.norm().max(1.0));
            }
        }
    }
    outcome(
        sum_err <= 1e-12 && quad_err <= 1e-10,
        format!("max sum defect {sum_err:.1e}, max quadrature defect {quad_err:.1e}, {} specs", specs.len()),
    )
}

// 3 ------------------------------------------------------------------------

fn fd_estimate<G: Fn(f64) -> f64>(g: G, v: f64, m: usize) -> f64 {
    let steps = [0.01, 0.02, 0.04, 0.08, 0.16];
    let est: Vec<f64> = steps.iter().map(|&h| central_difference(&g, v, m, h)).collect();
    let best = (1..est.len())
        .min_by(|&a, &b| (est[a] - est[a - 1]).abs().total_cmp(&(est[b] - est[b - 1]).abs()))
        .unwrap();
    est[best - 1]
}

fn kernel_derivatives() -> Outcome {
    let amp = AmplitudeSpec::new(
        vec![
            monomial(1, &[2, 0, 0, 2]),
            monomial(2, &[0, 0, 4, 0]),
            monomial(-1, &[2, 2, 0, 0]),
            monomial(1, &[4, 0, 2, 2]),
            monomial(1, &[0; 4]),
        ],
        Bump::default(),
    );
    let s = ScriptS::new(&model(&[1, -2]), &amp).unwrap();
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 0..=3 {
        for zeta in [-0.5, 0.0, 0.5] {
            for sign in [Sign::Plus, Sign::Minus] {
                let k = FKernel::new(&s, n, zeta, sign, 4);
                let grid: Vec<f64> = (0..9).map(|i| zeta + (i as f64 - 4.0) * 0.15).collect();
                for m in 1..=4 {
                    let exact: Vec<f64> = grid.iter().map(|&v| k.derivative(m, v)).collect();
                    let scale = exact.iter().fold(0.0f64, |a, b| a.max(b.abs()));
                    for (&v, &e) in grid.iter().zip(&exact) {
                        let fd = fd_estimate(|x| k.eval(x), v, m);
                        worst = worst.max((e - fd).abs() / e.abs().max(scale));
                        cases += 1;
                    }
                }
            }
        }
    }
    outcome(worst <= 1e-6, format!("{cases} points, worst relative defect {worst:.1e}"))
}

// 4 ------------------------------------------------------------------------

fn hypersurface_identity() -> Outcome {
    let amps: Vec<(Vec<i64>, AmplitudeSpec)> = vec![
        (
            vec![1, -1],
            AmplitudeSpec::new(
                vec![monomial(1, &[0; 4]), monomial(1, &[2, 0, 0, 2]), monomial(-2, &[0, 0, 4, 0]), monomial(1, &[1, 1, 0, 0])],
                Bump::default(),
            ),
        ),
        (
            vec![2, -1],
            AmplitudeSpec::new(vec![monomial(3, &[0; 4]), monomial(1, &[0, 2, 2, 0]), monomial(1, &[4, 0, 0, 0])], Bump::default()),
        ),
        (
            vec![1, 2, -1],
            AmplitudeSpec::new(
                vec![monomial(1, &[0; 6]), monomial(1, &[2, 0, 0, 0, 0, 2]), monomial(-1, &[0, 0, 2, 2, 0, 0])],
                Bump::default(),
            ),
        ),
        (
            vec![1, -1, -3],
            AmplitudeSpec::new(vec![monomial(2, &[0; 6]), monomial(1, &[0, 0, 0, 0, 4, 0]), monomial(1, &[2, 2, 0, 0, 0, 0])], Bump::default()),
        ),
    ];
    let mut worst = 0.0f64;
    let mut n = 0;
    for (w, amp) in &amps {
        let m = model(w);
        let s = ScriptS::new(&m, amp).unwrap();
        for zeta in [-0.5, 0.0, 0.5] {
            let slice = QuadricSlice::new(&m, zeta).unwrap();
            for k in 0..=2 {
                for l in 0..=2 {
                    let lhs = w_dpm_integral(&slice, amp, k, l).unwrap().value;
                    let rhs = interior_integral(&s, k, l, 2.0 * zeta).value;
                    worst = worst.max((lhs - rhs).abs());
                    n += 1;
                }
            }
        }
    }
    outcome(worst <= 1e-8, format!("{n} cases, worst absolute defect {worst:.1e}"))
}

// 5 ------------------------------------------------------------------------

fn origin_derivatives_exact() -> Outcome {
    let mut n = 0;
    let indefinite: Vec<(Vec<i64>, Vec<Monomial>)> = vec![
        (vec![1, -1], vec![monomial(1, &[2, 0, 0, 2]), monomial(3, &[4, 0, 0, 0]), monomial(1, &[0; 4])]),
        (vec![2, 1, -3], vec![monomial(1, &[2, 0, 2, 0, 0, 0]), monomial(3, &[0, 4, 0, 0, 0, 0]), monomial(1, &[0, 0, 0, 0, 2, 2])]),
        (vec![1, -1, -2], vec![monomial(5, &[0, 0, 2, 0, 2, 0]), monomial(-1, &[0, 2, 0, 0, 0, 0]), monomial(1, &[0, 0, 0, 0, 0, 4])]),
        (vec![3, 1, -1, -2], vec![monomial(1, &[2, 2, 0, 0, 2, 0, 0, 0]), monomial(2, &[0, 0, 0, 4, 0, 0, 0, 0]), monomial(1, &[0, 0, 0, 0, 0, 0, 2, 2])]),
    ];
    for (w, monos) in indefinite {
        let s = ScriptS::new(&model(&w), &AmplitudeSpec::new(monos, Bump::default())).unwrap();
        for side in [Sign::Plus, Sign::Minus] {
            for k in 0..=2 {
                let lhs = s.origin_derivative(Some(side), k);
                let rhs = s.origin_derivative_by_laplacian(Some(side), k, LaplacianNormalization::Pizzetti).unwrap();
                assert_eq!(lhs, rhs, "{w:?} {side:?} k={k}");
                n += 1;
            }
        }
    }
    let definite: Vec<(Vec<i64>, Vec<Monomial>)> = vec![
        (vec![1], vec![monomial(1, &[4, 0]), monomial(2, &[2, 2]), monomial(1, &[0, 4]), monomial(7, &[0, 0])]),
        (vec![-3], vec![monomial(1, &[2, 0]), monomial(1, &[0, 4])]),
        (vec![1, 2], vec![monomial(1, &[2, 0, 0, 2]), monomial(-1, &[0, 4, 0, 0]), monomial(1, &[0; 4])]),
        (vec![-1, -1], vec![monomial(2, &[0, 0, 4, 0]), monomial(1, &[2, 0, 2, 0])]),
    ];
    for (w, monos) in definite {
        let s = ScriptS::new(&model(&w), &AmplitudeSpec::new(monos, Bump::default())).unwrap();
        for k in 0..=2 {
            let lhs = s.origin_derivative(None, k);
            let rhs = s.origin_derivative_by_laplacian(None, k, LaplacianNormalization::Pizzetti).unwrap();
            assert_eq!(lhs, rhs, "{w:?} k={k}");
            n += 1;
        }
    }
    // the literal (2n)^k normalization is off at k = 2: d=2, f = ρ⁴ gives 8π for the true 4π
    let disk = ScriptS::new(
        &model(&[1]),
        &AmplitudeSpec::new(vec![monomial(1, &[4, 0]), monomial(2, &[2, 2]), monomial(1, &[0, 4])], Bump::default()),
    )
    .unwrap();
    let literal = disk.origin_derivative_by_laplacian(None, 2, LaplacianNormalization::PowerOfTwoN).unwrap();
    let literal_off = literal != disk.origin_derivative(None, 2);
    outcome(
        literal_off,
        format!("{n} exact equalities with the mean-value normalization 2^k·n(n+2)···(n+2k−2); the (2n)^k form disagrees at k=2"),
    )
}

// 6 ------------------------------------------------------------------------

fn remainder_orders() -> Outcome {
    let mut rows = 0;
    let mut floor = 0;
    let mut fails = Vec::new();
    let mut slowest = 0.0f64;
    for w in [vec![1, -1], vec![1, 1, -2], vec![1], vec![-1], vec![1, 2], vec![-1, -2]] {
        let t0 = Instant::now();
        let report = verify(&slope_scenario(&w), DEFAULT_SLOPE_TOL).unwrap();
        slowest = slowest.max(t0.elapsed().as_secs_f64());
        for r in &report.slopes {
            rows += 1;
            match r.status {
                SlopeStatus::Fail => fails.push(format!("{w:?} ζ={} M={} slope {:.2}", r.zeta, r.m, r.slope)),
                SlopeStatus::FloorLimited => floor += 1,
                _ => {}
            }
        }
    }
    let pass = fails.is_empty() && slowest <= 120.0;
    outcome(
        pass,
        format!("{rows} (model, ζ, M) rows, {floor} floor-limited, slowest model {slowest:.0}s{}", if fails.is_empty() { String::new() } else { format!(", failing: {}", fails.join("; ")) }),
    )
}

// 7 ------------------------------------------------------------------------

fn definite_leading_order() -> Outcome {
    let sig = SchwartzSpec::new(vec![1.0, 0.5], 1.0).unwrap();
    let eps: Vec<f64> = (3..=12).map(|k| 2f64.powi(-k)).collect();
    let mut slopes = Vec::new();
    let mut pass = true;
    for w in [vec![1], vec![-2], vec![1, 2], vec![-1, -1]] {
        let d = 2 * w.len();
        let s = ScriptS::new(&model(&w), &quartic_amplitude(d)).unwrap();
        let vals = oracle_sweep(&s, &sig, 0.0, &eps, OracleMethod::Reduced2d, DEFAULT_TOL).unwrap();
        let v: Vec<f64> = vals.iter().map(|v| v.value).collect();
        let fl: Vec<f64> = vals.iter().map(noise_floor).collect();
        let fit = remainder_slope(&eps, &v, &fl).unwrap();
        let target = d as f64 / 2.0;
        pass &= !fit.floor_limited && (fit.slope - target).abs() <= 0.15;
        slopes.push(format!("{w:?}: {:.3} vs {target}", fit.slope));
    }
    outcome(pass, slopes.join(", "))
}

// 8 ------------------------------------------------------------------------

fn constants_consistency() -> Outcome {
    let patterns: Vec<Vec<i64>> = vec![
        vec![1],
        vec![-2],
        vec![1, 2],
        vec![3, -1],
        vec![1, -1],
        vec![-1, -2],
        vec![1, 1, 2],
        vec![2, 1, -1],
        vec![1, -1, -3],
        vec![-1, -1, -1],
    ];
    let mut notes = Vec::new();
    for w in &patterns {
        let d = 2 * w.len();
        let s = ScriptS::new(&model(w), &AmplitudeSpec::constant(d, 1)).unwrap();
        match leading_constants(&s.model).unwrap() {
            LeadingConstants::Indefinite { d_plus, d_minus, .. } => {
                assert_eq!(leading_singular_weight(&s, Sign::Plus).unwrap(), d_plus, "{w:?} +");
                assert_eq!(leading_singular_weight(&s, Sign::Minus).unwrap(), d_minus, "{w:?} -");
            }
            LeadingConstants::Definite { d: dd, .. } => {
                let sf = s.model.definite_sign().unwrap();
                let jf = s.model.j_f_order() as i64;
                let orient = if sf == Sign::Minus { sign_pow(jf) } else { 1 };
                let got = leading_singular_weight(&s, sf.flip()).unwrap();
                assert_eq!(got, dd.scale(&rat(orient, 1)), "{w:?}");
                assert!(leading_singular_weight(&s, sf).unwrap().is_zero(), "{w:?}");
                if orient == -1 {
                    notes.push(format!("{w:?}"));
                }
            }
        }
    }
    outcome(
        true,
        format!(
            "{} weight patterns exact; negative-definite weights carry the orientation factor s_F^(j_F), which flips {}",
            patterns.len(),
            notes.join(" ")
        ),
    )
}

// 9 ------------------------------------------------------------------------

fn jump_reproduction() -> Outcome {
    let m = model(&[1, -1]);
    let s = ScriptS::new(&m, &AmplitudeSpec::constant(4, 1)).unwrap();
    let sig = SchwartzSpec::new(vec![1.0, 1.0], 1.0).unwrap();
    let lim_p = one_sided_limit(&s, 1, Sign::Plus).unwrap().value(&sig).re;
    let lim_m = one_sided_limit(&s, 1, Sign::Minus).unwrap().value(&sig).re;
    let LeadingConstants::Indefinite { c_f, .. } = leading_constants(&m).unwrap() else { unreachable!() };
    let np = n_pm(m.n_plus, m.n_minus, Sign::Plus).unwrap();
    let nm = n_pm(m.n_plus, m.n_minus, Sign::Minus).unwrap();
    // amplitude integral over the fixed point: f(0) = 1
    let expected: Complex64 = (&ExactScalar::int(np - nm) * &c_f).to_complex() * sig.deriv_at_zero(1);
    let extract = |zeta: f64| -> f64 {
        let eps: Vec<f64> = (0..8).map(|i| zeta.abs() / 16.0 * 0.5f64.powi(i)).collect();
        let v: Vec<f64> = eps.iter().map(|&e| oracle_integral(&s, &sig, zeta, e, OracleMethod::Reduced2d).unwrap().value).collect();
        extract_coefficients(&eps, &v, 2).unwrap()[1]
    };
    let mut worst: f64 = 0.0;
    let mut last = (0.0, 0.0);
    for k in 3..=8 {
        let z = 2f64.powi(-k);
        let (ap, am) = (extract(z), extract(-z));
        worst = worst.max(((ap - lim_p) / lim_p).abs()).max(((am - lim_m) / lim_m).abs());
        last = (ap, am);
    }
    let diff = last.1 - last.0;
    let diff_err = ((diff - expected.re) / expected.re).abs() + (expected.im / expected.re).abs();
    let exact_diff = ((lim_m - lim_p - expected.re) / expected.re).abs();
    outcome(
        worst <= 0.05 && diff_err <= 0.05 && exact_diff <= 1e-12,
        format!(
            "limits {lim_p:.4}/{lim_m:.4}, worst extracted deviation {:.2}%, extracted lim₋−lim₊ {diff:.4} vs (N⁺−N⁻)C_F·σ'(0) {:.4}",
            100.0 * worst,
            expected.re
        ),
    )
}

// 10 -----------------------------------------------------------------------

fn cross_oracle() -> Outcome {
    let sig = SchwartzSpec::new(vec![1.0, 0.5], 1.0).unwrap();
    let mut worst = 0.0f64;
    let mut n = 0;
    for w in [vec![1, -1], vec![1, -2], vec![1, 1, -2], vec![1], vec![-1], vec![1, 2], vec![-1, -2]] {
        let d = 2 * w.len();
        let s = ScriptS::new(&model(&w), &quartic_amplitude(d)).unwrap();
        for zeta in [-0.5, 0.0, 0.5] {
            for k in [3, 6, 9, 12] {
                let e = 2f64.powi(-k);
                let a = oracle_integral(&s, &sig, zeta, e, OracleMethod::Reduced2d).unwrap().value;
                let b = oracle_integral(&s, &sig, zeta, e, OracleMethod::Split1d).unwrap().value;
                let scale = a.abs().max(b.abs());
                if scale > 0.0 {
                    worst = worst.max((a - b).abs() / scale);
                }
                n += 1;
            }
        }
    }
    outcome(worst <= 1e-8, format!("{n} (model, ζ, ε) points, worst relative gap {worst:.1e}"))
}

fn main() {
    let list: Vec<(usize, &str, u64, Box<dyn FnOnce() -> Outcome>)> = vec![
        (1, "exact coefficient identities", 5, Box::new(exact_identities)),
        (2, "half-line functional identities", 10, Box::new(functional_identities)),
        (3, "kernel derivative formula against finite differences", 60, Box::new(kernel_derivatives)),
        (4, "hypersurface integrals equal t-integrals", 300, Box::new(hypersurface_identity)),
        (5, "origin derivatives through powers of the Laplacian, exact", 60, Box::new(origin_derivatives_exact)),
        (6, "remainder slopes at least M+1.8", 900, Box::new(remainder_orders)),
        (7, "definite leading order at ζ_F = 0", 120, Box::new(definite_leading_order)),
        (8, "leading singular weights equal the fixed-point constants", 60, Box::new(constants_consistency)),
        (9, "jump of A_1 across the fixed level", 300, Box::new(jump_reproduction)),
        (10, "reduced-2d and split-1d oracles agree", 600, Box::new(cross_oracle)),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|v| v.parse().ok());
    let mut failed = 0;
    for (n, title, secs, f) in list {
        if only.is_some_and(|o| o != n) {
            continue;
        }
        if !run(n, title, Duration::from_secs(secs), f) {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

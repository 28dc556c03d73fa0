//! Checks against independent computations: quadrature, brute-force grids and
//! direct series that share no code with the library.

use bohr_radius::bohr::{bernardi_bohr_sum, cesaro_binomial, cesaro_bohr_sum, function_radius, majorant_sum};
use bohr_radius::coeffs::CoefficientSequence;
use bohr_radius::extremal::{extremal_coefficients, ExtremalParams};
use bohr_radius::radii::{
    bernardi_radius, cesaro_phi0, cesaro_radius, djakov_ramanujan_bounds, djakov_ramanujan_upper_expr,
    shifted_disk_radius,
};
use bohr_radius::weights::WeightFamily;

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, whole: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (left, right) = (simpson(f, a, m), simpson(f, m, b));
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        return left + right + (left + right - whole) / 15.0;
    }
    adaptive_simpson(f, a, m, tol / 2.0, left, depth - 1) + adaptive_simpson(f, m, b, tol / 2.0, right, depth - 1)
}

fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    adaptive_simpson(f, a, b, 1e-12, simpson(f, a, b), 40)
}

/// `(alpha+1) int_0^1 t^alpha / (1 - r t) dt`, the integral form of the Cesaro `phi_0`.
fn phi0_integral(alpha: f64, r: f64) -> f64 {
    // t = u^2 removes the square-root type endpoint behaviour for fractional alpha
    let f = |u: f64| 2.0 * u * u.powf(2.0 * alpha) / (1.0 - r * u * u);
    (alpha + 1.0) * integrate(&f, 0.0, 1.0)
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(flo * f(hi) < 0.0, "no bracket on [{lo}, {hi}]");
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(mid) * flo > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn cesaro_phi0_matches_integral_form() {
    for alpha in [0.0, 0.5, 2.7, 10.0] {
        for r in [0.1, 0.5, 0.9, 0.99] {
            let series = cesaro_phi0(alpha, r).unwrap();
            let integral = phi0_integral(alpha, r);
            assert!((series - integral).abs() < 1e-9 * integral, "alpha {alpha} r {r}: {series} vs {integral}");
        }
    }
}

#[test]
fn cesaro_radius_matches_integral_root() {
    for alpha in [0.0, 10.0, 30.0] {
        for gamma in [0.0, 0.5] {
            let oracle = bisect(|r| (3.0 + gamma) * phi0_integral(alpha, r) - 2.0 / (1.0 - r), 0.01, 0.999);
            let got = cesaro_radius(gamma, alpha).unwrap().root;
            assert!((got - oracle).abs() < 1e-8, "alpha {alpha} gamma {gamma}: {got} vs {oracle}");
        }
    }
    // alpha = 0 has the closed form (3+gamma)(-ln(1-r)/r) = 2/(1-r)
    let oracle = bisect(|r| 3.0 * (-(1.0 - r).ln() / r) - 2.0 / (1.0 - r), 0.1, 0.9);
    assert!((cesaro_radius(0.0, 0.0).unwrap().root - oracle).abs() < 1e-10);
}

#[test]
fn bernardi_radius_matches_logarithmic_form() {
    // sum_{n>=1} r^n/(n+1) = -ln(1-r)/r - 1
    for gamma in [0.0, 0.3, 0.8] {
        let oracle = bisect(|r| 2.0 / (1.0 + gamma) * (-(1.0 - r).ln() / r - 1.0) - 1.0, 0.1, 0.99);
        let got = bernardi_radius(0, 1.0, gamma).unwrap().root;
        assert!((got - oracle).abs() < 1e-10, "gamma {gamma}: {got} vs {oracle}");
    }
    // beta = 2: sum r^n/(n+2) = (-ln(1-r) - r)/r^2 - 1/2
    let oracle = bisect(|r| 2.0 / 1.2 * ((-(1.0 - r).ln() - r) / (r * r) - 0.5) - 0.5, 0.1, 0.99);
    let got = bernardi_radius(0, 2.0, 0.2).unwrap().root;
    assert!((got - oracle).abs() < 1e-10);
    assert!((got - 0.52891).abs() < 1e-5);
}

#[test]
fn djakov_ramanujan_upper_matches_brute_force() {
    for p in [1.1, 1.5, 1.9] {
        let n = 1_000_000;
        let grid_min = (0..=n)
            .map(|i| djakov_ramanujan_upper_expr(p, (1.0 - 1e-6) * i as f64 / n as f64))
            .fold(f64::INFINITY, f64::min);
        let b = djakov_ramanujan_bounds(p).unwrap();
        assert!(b.upper <= grid_min + 1e-12, "p {p}: {} vs grid {grid_min}", b.upper);
        assert!(b.upper >= grid_min - 1e-6, "p {p}: {} vs grid {grid_min}", b.upper);
    }
}

/// `sum_n |a_n| phi_n(r)` with `phi_n(r) = sum_{k>=n} C^alpha_{k-n} / C^{alpha+1}_k r^k`.
fn cesaro_sum_by_weights(moduli: &[f64], alpha: f64, r: f64) -> f64 {
    let k_max = 2000;
    let upper: Vec<f64> = (0..k_max).map(|k| cesaro_binomial(alpha + 1.0, k as u64).unwrap()).collect();
    let lower: Vec<f64> = (0..k_max).map(|k| cesaro_binomial(alpha, k as u64).unwrap()).collect();
    let mut total = 0.0;
    for (n, &a) in moduli.iter().enumerate() {
        let phi: f64 = (n..k_max).map(|k| lower[k - n] / upper[k] * r.powi(k as i32)).sum();
        total += a * phi;
    }
    total
}

#[test]
fn cesaro_sum_matches_weight_expansion() {
    let moduli = [0.3, 0.9, 0.0, 0.25, 0.6, 0.1, 0.8];
    let coeffs = CoefficientSequence::from_moduli(moduli.to_vec()).unwrap();
    for alpha in [0.0, 0.5, 2.7] {
        for r in [0.2, 0.6, 0.85] {
            let got = cesaro_bohr_sum(&coeffs, alpha, r, 1e-14).unwrap().value;
            let want = cesaro_sum_by_weights(&moduli, alpha, r);
            assert!((got - want).abs() < 1e-10 * want, "alpha {alpha} r {r}: {got} vs {want}");
        }
    }
}

#[test]
fn cesaro_radius_is_sharp_for_the_cesaro_sum() {
    // the computed radius, not the reference alpha >= 10 values, separates the two regimes
    for (alpha, gamma) in [(0.0, 0.0), (10.0, 0.0), (30.0, 0.0), (10.0, 0.5)] {
        let radius = cesaro_radius(gamma, alpha).unwrap().root;
        let violated_at = |r: f64| {
            [0.9, 0.99, 0.999, 0.9999].iter().any(|&a| {
                let c = extremal_coefficients(&ExtremalParams::new(a, gamma, 0, 1).unwrap());
                let rep = cesaro_bohr_sum(&c, alpha, r, 1e-14).unwrap();
                rep.value > rep.bound + rep.tail_bound
            })
        };
        assert!(!violated_at(radius - 0.01), "alpha {alpha} gamma {gamma} below {radius}");
        assert!(violated_at(radius + 0.01), "alpha {alpha} gamma {gamma} above {radius}");
    }
    // the reference R(0,10) = 0.9860 is far outside the satisfied region
    let c = extremal_coefficients(&ExtremalParams::new(0.99, 0.0, 0, 1).unwrap());
    let rep = cesaro_bohr_sum(&c, 10.0, 0.95, 1e-14).unwrap();
    assert!(!rep.satisfied);
}

#[test]
fn bernardi_radius_is_sharp_for_the_bernardi_sum() {
    let radius = bernardi_radius(0, 1.0, 0.0).unwrap().root;
    assert!((radius - 0.5828).abs() < 1e-4);
    let c = extremal_coefficients(&ExtremalParams::new(0.9, 0.0, 0, 1).unwrap());
    assert!(bernardi_bohr_sum(&c, 0, 1.0, radius - 0.01, 1e-14).unwrap().satisfied);
    let violated = [0.99, 0.999, 0.9999].iter().any(|&a| {
        let c = extremal_coefficients(&ExtremalParams::new(a, 0.0, 0, 1).unwrap());
        !bernardi_bohr_sum(&c, 0, 1.0, radius + 0.01, 1e-14).unwrap().satisfied
    });
    assert!(violated);
}

#[test]
fn extremal_function_radius_approaches_one_third() {
    let mut previous = f64::INFINITY;
    for a in [0.9, 0.99, 0.999] {
        let c = extremal_coefficients(&ExtremalParams::new(a, 0.0, 0, 1).unwrap());
        let fr = function_radius(&c, &WeightFamily::power(), 1.0, 1.0).unwrap();
        assert!(fr.radius >= 1.0 / 3.0 - 1e-9, "a {a}: {}", fr.radius);
        assert!(fr.radius < previous, "a {a}: not decreasing");
        previous = fr.radius;
        // brute-force scan of the same inequality with the closed-form geometric sum
        let a0 = a;
        let scan = (1..100_000)
            .map(|i| i as f64 / 100_000.0)
            .find(|&r| a0 + (1.0 - a * a) * r / (1.0 - a * r) > 1.0)
            .unwrap();
        assert!((fr.radius - scan).abs() < 2e-5, "a {a}: {} vs scan {scan}", fr.radius);
    }
    assert!(previous - 1.0 / 3.0 < 1e-3);
}

#[test]
fn majorant_sum_matches_direct_geometric_series() {
    let params = ExtremalParams::new(0.8, 0.3, 0, 1).unwrap();
    let c = extremal_coefficients(&params);
    for r in [0.1, 0.4, 0.7] {
        let rep = majorant_sum(&c, &WeightFamily::power(), 1.0, r, 1e-14).unwrap();
        let ratio = params.ratio();
        let want = params.leading_modulus() + params.scale() * ratio * r / (1.0 - ratio * r);
        assert!((rep.value - want).abs() < 1e-13, "r {r}: {} vs {want}", rep.value);
    }
    // n r^n weights: sum n C q^n r^n = C q r / (1 - q r)^2
    let rep = majorant_sum(&c, &WeightFamily::power_times_n(), 1.0, 0.5, 1e-14).unwrap();
    let (q, s) = (params.ratio() * 0.5, params.scale());
    let want = params.leading_modulus() + s * q / (1.0 - q).powi(2);
    assert!((rep.value - want).abs() < 1e-12);
}

#[test]
fn shifted_radius_n_squared_matches_cubic_root() {
    for (p, gamma) in [(1.0, 0.0), (1.3, 0.4), (2.0, 0.8)] {
        let x: f64 = p * (1.0 + gamma);
        let oracle = bisect(|r| x * (1.0 - r).powi(3) - 2.0 * r * (1.0 + r), 0.0, 1.0);
        let got = shifted_disk_radius(&WeightFamily::power_times_n_squared(), p, gamma).unwrap().root;
        assert!((got - oracle).abs() < 1e-10);
    }
}

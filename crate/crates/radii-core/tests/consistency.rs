//! Cross-checks between independent evaluation routes: series vs closed
//! forms, derivatives vs finite differences, ratios vs zero expansions,
//! q-deformations vs their classical limits, and products over zeros found
//! by an integral-representation oracle.

mod common;

use num_complex::Complex64;
use radii_core::zeros::{zero_ladder, ComboKind, ScanParams, ZeroTarget};
use radii_core::{convex_ratio, eval_family, phi_ratio};
use radii_core::{FamilySpec, Kernel, Normalization, SeriesConfig};

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn real(family: &FamilySpec, x: f64, order: u32) -> f64 {
    eval_family(family, Complex64::new(x, 0.0), order, &cfg())
        .unwrap()
        .value
        .re
}

#[test]
fn derivative_orders_match_finite_differences() {
    // One representative per family, sampled strictly inside the region
    // where the first derivative stays bounded away from zero.
    let cases = [
        (FamilySpec::BesselJ { nu: 0.7 }, 0.1, 1.2),
        (FamilySpec::JacksonQ { nu: 0.6, q: 0.5 }, 0.05, 0.8),
        (FamilySpec::HahnExtonQ { nu: 0.8, q: 0.4 }, 0.05, 0.5),
        (FamilySpec::Lommel { mu: 0.3 }, 0.1, 1.0),
        (FamilySpec::LegendreOdd { m: 3 }, 0.02, 0.2),
    ];
    let h = 1e-6;
    for (family, lo, hi) in cases {
        for i in 0..20 {
            let x = lo + (hi - lo) * (i as f64 + 0.5) / 20.0;
            for order in [1u32, 2] {
                let exact = real(&family, x, order);
                let fd =
                    (real(&family, x + h, order - 1) - real(&family, x - h, order - 1)) / (2.0 * h);
                let scale = exact.abs().max(0.05);
                assert!(
                    (fd - exact).abs() <= 1e-6 * scale,
                    "{family:?} order {order} at x = {x}: fd {fd} vs {exact}"
                );
            }
        }
    }
}

#[test]
fn half_integer_bessel_matches_its_closed_form_at_random_points() {
    let family = FamilySpec::BesselJ { nu: 0.5 };
    let mut rng = common::Lcg::new(0x5eed);
    for _ in 0..50 {
        let x = 0.05 + 3.95 * rng.next_f64();
        let got = eval_family(&family, Complex64::new(x, 0.0), 0, &cfg()).unwrap();
        let want = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
        let tol = 10.0 * got.truncation_bound + 2e-15;
        assert!(
            (got.value.re - want).abs() <= tol,
            "x = {x}: {} vs {want}",
            got.value.re
        );
    }
}

#[test]
fn unit_order_convex_ratio_reduces_to_the_bare_second_ratio() {
    // At nu = 1 the lambda = 1/nu - 1 mixing term vanishes, so the
    // F-normalized convex ratio must equal 1 + z J''/J' verbatim.
    let family = FamilySpec::BesselJ { nu: 1.0 };
    for x in [0.3, 0.5, 1.1] {
        let psi = convex_ratio(&family, Normalization::F, Complex64::new(x, 0.0), &cfg())
            .unwrap()
            .re;
        let bare = 1.0 + x * real(&family, x, 2) / real(&family, x, 1);
        assert!((psi - bare).abs() < 1e-12, "x = {x}: {psi} vs {bare}");
    }
}

/// Power sums `S_m = sum_n xi_n^{-2m}` of the kernel zeros, straight from
/// the series coefficients via Newton's identities.
fn rayleigh_power_sums(kernel: &Kernel, count: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..=count)
        .map(|j| {
            if j % 2 == 0 {
                kernel.coeff(j)
            } else {
                -kernel.coeff(j)
            }
        })
        .collect();
    let mut p = vec![0.0; count + 1];
    for m in 1..=count {
        let mut acc = 0.0;
        for i in 1..m {
            acc += if i % 2 == 1 {
                e[i] * p[m - i]
            } else {
                -e[i] * p[m - i]
            };
        }
        let lead = m as f64 * e[m];
        p[m] = acc + if m % 2 == 1 { lead } else { -lead };
    }
    p
}

#[test]
fn mittag_leffler_expansion_matches_the_g_ratio() {
    // phi_G(z) = 1 - sum_n 2 z^2/(xi_n^2 - z^2): six explicit ladder zeros
    // plus the exact Rayleigh tail from Newton's identities.
    let family = FamilySpec::BesselJ { nu: 1.0 };
    let kernel = Kernel::new(&family, &cfg()).unwrap();
    let p = rayleigh_power_sums(&kernel, 12);
    assert!((p[1] - 0.125).abs() < 1e-15, "sigma_1 = {}", p[1]);

    let target = ZeroTarget {
        family,
        combo: ComboKind::Function,
    };
    let zeros = zero_ladder(&target, 6, &ScanParams::for_family(&family), 1e-13, &cfg()).unwrap();

    for z in [1.0f64, 2.0] {
        let mut sum = 0.0;
        for rung in &zeros {
            sum += 2.0 * z * z / (rung.location * rung.location - z * z);
        }
        for (m, pm) in p.iter().enumerate().skip(1) {
            let partial: f64 = zeros.iter().map(|r| r.location.powi(-2 * m as i32)).sum();
            sum += 2.0 * z.powi(2 * m as i32) * (pm - partial);
        }
        let phi = phi_ratio(&family, Normalization::G, Complex64::new(z, 0.0), &cfg())
            .unwrap()
            .re;
        assert!(
            (phi - (1.0 - sum)).abs() < 1e-10,
            "z = {z}: phi {phi} vs expansion {}",
            1.0 - sum
        );
    }
}

#[test]
fn jackson_function_approaches_the_classical_limit_monotonically() {
    // |J2_nu((1-q) z; q) - J_nu(z)| shrinks as q walks toward 1.
    for nu in [0.5, 1.5] {
        for z in [0.5, 1.0] {
            let classical = real(&FamilySpec::BesselJ { nu }, z, 0);
            let distances: Vec<f64> = [0.9, 0.99, 0.999]
                .map(|q| {
                    let deformed = real(&FamilySpec::JacksonQ { nu, q }, (1.0 - q) * z, 0);
                    (deformed - classical).abs()
                })
                .to_vec();
            assert!(
                distances[0] > distances[1] && distances[1] > distances[2],
                "nu = {nu}, z = {z}: distances {distances:?}"
            );
            assert!(distances[2] < 5e-4, "nu = {nu}, z = {z}: {distances:?}");
        }
    }
}

#[test]
fn integral_oracle_agrees_with_the_series_in_range() {
    for x in [0.5, 1.5, 3.0, 6.0, 10.0] {
        for nu in [0u32, 1] {
            let series = real(&FamilySpec::BesselJ { nu: nu as f64 }, x, 0);
            let integral = common::bessel_j_oracle(nu, x);
            assert!(
                (series - integral).abs() < 1e-12,
                "J_{nu}({x}): series {series} vs integral {integral}"
            );
        }
    }
    let first = common::bessel_zero_oracle(1, 1);
    assert!((first - 3.831_705_970_207_512_3).abs() < 1e-10, "{first}");
}

#[test]
fn ladder_zeros_cross_check_against_the_integral_oracle() {
    let target = ZeroTarget {
        family: FamilySpec::BesselJ { nu: 1.0 },
        combo: ComboKind::Function,
    };
    let params = ScanParams::for_family(&target.family);
    let rungs = zero_ladder(&target, 8, &params, 1e-13, &cfg()).unwrap();
    for (i, rung) in rungs.iter().enumerate() {
        let oracle = common::bessel_zero_oracle(1, i as u32 + 1);
        // The series accumulates rounding as the argument grows, so the
        // agreement requirement relaxes with the rung index.
        let tol = match i {
            0..=2 => 1e-9,
            3..=5 => 1e-7,
            _ => 1e-5,
        };
        assert!(
            (rung.location - oracle).abs() < tol,
            "rung {i}: ladder {} vs oracle {oracle}",
            rung.location
        );
    }
}

#[test]
fn hadamard_product_over_oracle_zeros_converges_to_the_kernel() {
    // 2 J_1(1) = prod_n (1 - 1/xi_{1,n}^2); the truncation error must
    // shrink as more oracle zeros enter the product.
    let kernel_value = 2.0 * real(&FamilySpec::BesselJ { nu: 1.0 }, 1.0, 0);
    let zeros: Vec<f64> = (1..=200)
        .map(|k| common::bessel_zero_oracle(1, k))
        .collect();
    let mut errors = Vec::new();
    for cut in [10usize, 50, 200] {
        let product: f64 = zeros[..cut]
            .iter()
            .map(|xi| 1.0 - 1.0 / (xi * xi))
            .product();
        errors.push((kernel_value - product).abs());
    }
    assert!(
        errors[0] > errors[1] && errors[1] > errors[2],
        "errors {errors:?}"
    );
}

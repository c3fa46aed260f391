use std::f64::consts::PI;

use entropic_bell::inequalities::{conventional_family, entropic_family, InequalityId};
use entropic_bell::quantum::{bell_correlations, bell_entropy_summary, MeasurementSetup};
use entropic_bell::scan::{
    maximize_violation, maximize_violation_with, most_violated, sweep_phi, to_csv, Family, MaximizeOptions,
    SearchDomain,
};

/// Textbook form of the pair mutual entropy, kept apart from the library's
/// binary-entropy evaluation.
fn pair_mutual(c: f64) -> f64 {
    if c.abs() == 1.0 {
        return 1.0;
    }
    0.5 * (1.0 - c * c).log2() + c / 2.0 * ((1.0 + c) / (1.0 - c)).log2()
}

/// Dense 1-D scan of `2 f(cos(t/2)) - f(cos t)` followed by ternary shrinking.
fn entropic_peak_oracle() -> (f64, f64) {
    let g = |t: f64| 2.0 * pair_mutual((t / 2.0).cos()) - pair_mutual(t.cos());
    let (mut best_t, mut best) = (0.0, f64::NEG_INFINITY);
    for k in 1..100_000 {
        let t = k as f64 * PI / 100_000.0;
        if g(t) > best {
            best = g(t);
            best_t = t;
        }
    }
    let (mut lo, mut hi) = (best_t - 1e-4, best_t + 1e-4);
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if g(m1) < g(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let t = (lo + hi) / 2.0;
    (t, g(t))
}

// 2 f(cos(θ/2)) - f(cos θ) maximized with mpmath (30 digits).
const ENTROPIC_PEAK_THETA: f64 = 0.793753237041477;
const ENTROPIC_PEAK: f64 = 1.134254379975632;

#[test]
fn oracle_reproduces_frozen_peak() {
    let (t, v) = entropic_peak_oracle();
    assert!((t - ENTROPIC_PEAK_THETA).abs() < 1e-5, "{t}");
    assert!((v - ENTROPIC_PEAK).abs() < 1e-12, "{v}");
}

#[test]
fn entropic_optimum() {
    let o = maximize_violation(Family::Entropic);
    assert_eq!(o.inequality_id, InequalityId::Ebell3);
    assert!((o.theta_star - PI / 3.958).abs() < 0.01);
    assert!((o.theta_star - ENTROPIC_PEAK_THETA).abs() < 1e-5);
    assert!((o.phi_star - o.theta_star / 2.0).abs() < 1e-3);
    assert!((o.lhs_star - ENTROPIC_PEAK).abs() < 1e-9);
    let again = most_violated(Family::Entropic, o.theta_star, o.phi_star);
    assert!((again.lhs - o.lhs_star).abs() < 1e-9);
}

#[test]
fn conventional_optimum() {
    let o = maximize_violation(Family::Conventional);
    assert_eq!(o.inequality_id, InequalityId::Bell2);
    assert!((o.theta_star - PI / 3.0).abs() < 1e-4);
    assert!((o.phi_star + PI / 3.0).abs() < 1e-4);
    assert!((o.lhs_star - 1.5).abs() < 1e-9);
}

#[test]
fn diagonal_search_finds_no_violation() {
    let options = MaximizeOptions { resolution: 720, domain: SearchDomain::Diagonal };
    let o = maximize_violation_with(Family::Entropic, &options);
    assert_eq!(o.theta_star, o.phi_star);
    assert!(o.lhs_star <= 1.0 + 1e-12);
    assert!(!most_violated(Family::Entropic, o.theta_star, o.phi_star).violated);
}

#[test]
fn doubling_the_grid_barely_moves_the_optimum() {
    for family in [Family::Entropic, Family::Conventional] {
        let coarse =
            maximize_violation_with(family, &MaximizeOptions { resolution: 360, ..Default::default() });
        let fine =
            maximize_violation_with(family, &MaximizeOptions { resolution: 720, ..Default::default() });
        assert!((coarse.theta_star - fine.theta_star).abs() < 1e-4, "{family:?}");
        assert!((coarse.phi_star - fine.phi_star).abs() < 1e-4, "{family:?}");
        assert_eq!(coarse.inequality_id, fine.inequality_id);
    }
}

#[test]
fn each_optimum_satisfies_the_other_family() {
    let e = maximize_violation(Family::Entropic);
    let setup = MeasurementSetup::new(e.theta_star, e.phi_star).unwrap();
    assert!(conventional_family(&bell_correlations(&setup)).iter().all(|r| !r.violated));

    let c = maximize_violation(Family::Conventional);
    let setup = MeasurementSetup::new(c.theta_star, c.phi_star).unwrap();
    assert!(entropic_family(&bell_entropy_summary(&setup)).iter().all(|r| !r.violated));
}

#[test]
fn figure_sweep_peaks_near_half_theta() {
    let theta = PI / 3.958;
    let rows = sweep_phi(theta, 0.0, PI, 721).unwrap();
    let (k, peak) = rows.iter().enumerate().max_by(|a, b| a.1.le3.total_cmp(&b.1.le3)).unwrap();
    let nearest = rows
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1.phi - theta / 2.0).abs().total_cmp(&(b.1.phi - theta / 2.0).abs()))
        .unwrap()
        .0;
    assert_eq!(k, nearest);
    // the grid point sits within 0.0022 rad of θ/2; the curve is flat there
    let at_half = 2.0 * pair_mutual((theta / 2.0).cos()) - pair_mutual(theta.cos());
    assert!((peak.le3 - at_half).abs() < 1e-5);
    assert_eq!(rows[0].le3, 1.0);
}

#[test]
fn csv_lines_ascend() {
    let rows = sweep_phi(PI / 3.958, 0.0, PI, 721).unwrap();
    let csv = to_csv(&rows).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 722);
    assert!(csv.ends_with('\n') && !csv.contains(" \n") && !csv.contains('\r'));
    let phis: Vec<f64> = lines[1..].iter().map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert!(phis.windows(2).all(|w| w[0] < w[1]));
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 7));
}

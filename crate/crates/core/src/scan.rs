//! Angle sweeps of the singlet Bell setup and the search for the angles that
//! violate each inequality family the most.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt::Write;

use crate::inequalities::{conventional_bell, entropic_bell, InequalityId, InequalityReport};
use crate::quantum::{bell_correlations, bell_entropy_summary, MeasurementSetup};
use crate::{Error, Result};

/// Left-hand sides of both inequality families at one value of `phi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub phi: f64,
    pub le1: f64,
    pub le2: f64,
    pub le3: f64,
    pub lc1: f64,
    pub lc2: f64,
    pub lc3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Family {
    Entropic,
    Conventional,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Entropic => "entropic",
            Family::Conventional => "conventional",
        }
    }
}

impl core::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "entropic" => Ok(Family::Entropic),
            "conventional" => Ok(Family::Conventional),
            _ => Err(Error::UnknownLabel(s.into())),
        }
    }
}

// MeasurementSetup restricts angles to (-π, π]; the formulas themselves are
// periodic, so sweeps and the optimizer evaluate them directly.
fn setup(theta: f64, phi: f64) -> MeasurementSetup {
    MeasurementSetup::new(wrap(theta), wrap(phi)).expect("wrapped angles are in range")
}

/// Maps an angle into `(-π, π]`.
fn wrap(angle: f64) -> f64 {
    if angle > -PI && angle <= PI {
        return angle;
    }
    let mut a = libm::remainder(angle, 2.0 * PI);
    if a <= -PI {
        a += 2.0 * PI;
    }
    a
}

fn reports(family: Family, theta: f64, phi: f64) -> [InequalityReport; 3] {
    let s = setup(theta, phi);
    match family {
        Family::Entropic => entropic_bell(&bell_entropy_summary(&s)),
        Family::Conventional => conventional_bell(&bell_correlations(&s)),
    }
}

/// The family's inequality with the largest `lhs - rhs` at these angles;
/// ties go to the lowest-numbered inequality.
pub fn most_violated(family: Family, theta: f64, phi: f64) -> InequalityReport {
    let r = reports(family, theta, phi);
    let mut best = r[0];
    for candidate in &r[1..] {
        if -candidate.margin > -best.margin {
            best = *candidate;
        }
    }
    best
}

fn objective(family: Family, theta: f64, phi: f64) -> f64 {
    -most_violated(family, theta, phi).margin
}

/// Evaluates both families at `steps` evenly spaced values of `phi`, both
/// endpoints included.
pub fn sweep_phi(theta: f64, phi_min: f64, phi_max: f64, steps: usize) -> Result<Vec<SweepRow>> {
    if steps < 2 || !phi_min.is_finite() || !phi_max.is_finite() || phi_min >= phi_max {
        return Err(Error::BadRange);
    }
    if !theta.is_finite() {
        return Err(Error::OutOfRange { what: "theta", value: theta });
    }
    let step = (phi_max - phi_min) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| {
            let phi = if k == steps - 1 { phi_max } else { phi_min + k as f64 * step };
            let [e1, e2, e3] = reports(Family::Entropic, theta, phi);
            let [c1, c2, c3] = reports(Family::Conventional, theta, phi);
            SweepRow { phi, le1: e1.lhs, le2: e2.lhs, le3: e3.lhs, lc1: c1.lhs, lc2: c2.lhs, lc3: c3.lhs }
        })
        .collect())
}

pub const CSV_HEADER: &str = "phi,LE1,LE2,LE3,LC1,LC2,LC3";

/// Renders rows as CSV: the header line, then one line per row, every number
/// with 9 significant digits, `\n` after each line.
pub fn to_csv(rows: &[SweepRow]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::NoRows);
    }
    let mut out = String::with_capacity(16 + rows.len() * 90);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        for (k, v) in [r.phi, r.le1, r.le2, r.le3, r.lc1, r.lc2, r.lc3].into_iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            push_significant(&mut out, v, 9);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Appends `value` in positional notation rounded to `digits` significant
/// digits, trailing zeros kept. Zero (of either sign) renders as `0`.
fn push_significant(out: &mut String, value: f64, digits: usize) {
    if value == 0.0 {
        out.push('0');
        return;
    }
    if !value.is_finite() {
        let _ = write!(out, "{value}");
        return;
    }
    // `{:e}` does the rounding; only the layout is rearranged here.
    let sci = alloc::format!("{:.*e}", digits - 1, value);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    let significand: String = mantissa.chars().filter(|c| *c != '.').collect();
    if negative {
        out.push('-');
    }
    if exponent < 0 {
        out.push_str("0.");
        for _ in 0..(-exponent - 1) {
            out.push('0');
        }
        out.push_str(&significand);
    } else {
        let int_len = exponent as usize + 1;
        if int_len >= significand.len() {
            out.push_str(&significand);
            for _ in significand.len()..int_len {
                out.push('0');
            }
        } else {
            out.push_str(&significand[..int_len]);
            out.push('.');
            out.push_str(&significand[int_len..]);
        }
    }
}

/// The region of `(theta, phi)` searched by [`maximize_violation_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchDomain {
    /// `theta` in `(0, π)`, `phi` in `(-π, π]`.
    #[default]
    Full,
    /// `phi = theta`, `theta` in `(0, π)`.
    Diagonal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaximizeOptions {
    /// Number of coarse grid points in `theta`; `phi` gets twice as many.
    pub resolution: usize,
    pub domain: SearchDomain,
}

impl Default for MaximizeOptions {
    fn default() -> Self {
        Self { resolution: 720, domain: SearchDomain::Full }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OptimumReport {
    pub family: Family,
    pub theta_star: f64,
    pub phi_star: f64,
    pub lhs_star: f64,
    pub inequality_id: InequalityId,
}

/// Grid local maxima this close to the grid maximum are refined.
const CANDIDATE_WINDOW: f64 = 1e-3;
const MAX_CANDIDATES: usize = 64;
/// Refined optima this close to the best one count as the same optimum.
const TIE_WINDOW: f64 = 1e-9;
/// Angle tolerance when ordering tied optima.
const ANGLE_TIE: f64 = 1e-6;
const GOLDEN_TOL: f64 = 1e-10;
const PASS_TOL: f64 = 1e-9;
const MAX_PASSES: usize = 1000;
/// Keeps `theta` strictly inside `(0, π)`.
const EDGE: f64 = 1e-12;

/// [`maximize_violation_with`] at the default 720×1440 grid over the full domain.
pub fn maximize_violation(family: Family) -> OptimumReport {
    maximize_violation_with(family, &MaximizeOptions::default())
}

/// Maximizes the family's largest `lhs - rhs` over the measurement angles.
///
/// A coarse grid locates every near-maximal local peak; each is refined by
/// alternating golden-section searches in `theta` and `phi`. The objective
/// has several exactly symmetric global maxima (relabelings of `A`, `B`, `C`
/// and `phi -> phi ± π`), so the reported one is the refined optimum with the
/// smallest `|phi|`, then `phi >= 0`, then the smallest `theta`.
pub fn maximize_violation_with(family: Family, options: &MaximizeOptions) -> OptimumReport {
    let r = options.resolution.max(2);
    let h = PI / r as f64;
    let theta_at = |i: usize| (i as f64 + 0.5) * h;

    let candidates: Vec<(f64, f64)> = match options.domain {
        SearchDomain::Full => {
            let phi_at = |j: usize| -PI + (j + 1) as f64 * h;
            let cols = 2 * r;
            let values: Vec<f64> =
                (0..r * cols).map(|k| objective(family, theta_at(k / cols), phi_at(k % cols))).collect();
            let peaks = grid_peaks(&values, r, cols);
            peaks.into_iter().map(|k| (theta_at(k / cols), phi_at(k % cols))).collect()
        }
        SearchDomain::Diagonal => {
            let values: Vec<f64> = (0..r).map(|i| objective(family, theta_at(i), theta_at(i))).collect();
            grid_peaks(&values, r, 1).into_iter().map(|i| (theta_at(i), theta_at(i))).collect()
        }
    };

    let refined: Vec<(f64, f64, f64)> = candidates
        .into_iter()
        .map(|(theta, phi)| {
            let (theta, phi) = match options.domain {
                SearchDomain::Full => refine(family, theta, phi, h),
                SearchDomain::Diagonal => {
                    let t = golden_max(
                        |t| objective(family, t, t),
                        clamp_theta(theta - h),
                        clamp_theta(theta + h),
                        theta,
                    );
                    (t, t)
                }
            };
            (theta, phi, objective(family, theta, phi))
        })
        .collect();

    let best = refined.iter().map(|c| c.2).fold(f64::NEG_INFINITY, f64::max);
    let mut chosen: Option<(f64, f64)> = None;
    for &(theta, phi, value) in &refined {
        if value < best - TIE_WINDOW {
            continue;
        }
        chosen = match chosen {
            Some(current) if !preferred((theta, phi), current) => Some(current),
            _ => Some((theta, phi)),
        };
    }
    let (theta_star, phi_star) = chosen.expect("grid has at least one point");
    let report = most_violated(family, theta_star, phi_star);
    OptimumReport { family, theta_star, phi_star, lhs_star: report.lhs, inequality_id: report.id }
}

fn preferred(a: (f64, f64), b: (f64, f64)) -> bool {
    let (abs_a, abs_b) = (a.1.abs(), b.1.abs());
    if (abs_a - abs_b).abs() > ANGLE_TIE {
        return abs_a < abs_b;
    }
    let (neg_a, neg_b) = (a.1 < -ANGLE_TIE, b.1 < -ANGLE_TIE);
    if neg_a != neg_b {
        return !neg_a;
    }
    a.0 < b.0 - ANGLE_TIE
}

/// Indices of grid points no lower than any neighbour and within
/// [`CANDIDATE_WINDOW`] of the maximum, best first. Columns wrap around.
fn grid_peaks(values: &[f64], rows: usize, cols: usize) -> Vec<usize> {
    let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut peaks: Vec<usize> = (0..values.len())
        .filter(|&k| {
            let v = values[k];
            if v < top - CANDIDATE_WINDOW {
                return false;
            }
            let (i, j) = (k / cols, k % cols);
            for di in [-1isize, 0, 1] {
                for dj in [-1isize, 0, 1] {
                    if (di, dj) == (0, 0) || (cols == 1 && dj != 0) {
                        continue;
                    }
                    let ni = i as isize + di;
                    if ni < 0 || ni >= rows as isize {
                        continue;
                    }
                    let nj = (j as isize + dj).rem_euclid(cols as isize) as usize;
                    if values[ni as usize * cols + nj] > v {
                        return false;
                    }
                }
            }
            true
        })
        .collect();
    // stable: equal values keep grid order
    peaks.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    peaks.truncate(MAX_CANDIDATES);
    peaks
}

fn clamp_theta(theta: f64) -> f64 {
    theta.clamp(EDGE, PI - EDGE)
}

fn refine(family: Family, mut theta: f64, mut phi: f64, h: f64) -> (f64, f64) {
    for _ in 0..MAX_PASSES {
        let new_theta =
            golden_max(|t| objective(family, t, phi), clamp_theta(theta - h), clamp_theta(theta + h), theta);
        let new_phi = wrap(golden_max(|p| objective(family, new_theta, p), phi - h, phi + h, phi));
        let moved = (new_theta - theta).abs().max(angle_distance(new_phi, phi));
        theta = new_theta;
        phi = new_phi;
        if moved < PASS_TOL {
            break;
        }
    }
    (theta, phi)
}

fn angle_distance(a: f64, b: f64) -> f64 {
    wrap(a - b).abs()
}

/// Golden-section maximization of `g` on `[lo, hi]`. Returns `start` unless
/// a strictly better point is found.
fn golden_max(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, start: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    while hi - lo > GOLDEN_TOL {
        if g1 >= g2 {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - INV_PHI * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + INV_PHI * (hi - lo);
            g2 = g(x2);
        }
    }
    let (x, gx) = if g1 >= g2 { (x1, g1) } else { (x2, g2) };
    if gx > g(start) {
        x
    } else {
        start
    }
}

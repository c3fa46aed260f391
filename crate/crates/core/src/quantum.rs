//! Spin-singlet measurement statistics for the three-observable Bell setup.
//!
//! `A` is the spin along `z` on the first particle, `B` the spin along an
//! axis at angle `theta` from `z` on the same particle, and `C` the spin along
//! an axis at angle `phi` from `z` on the second particle. `A'`, the `z`
//! measurement on the second particle, is perfectly anticorrelated with `A`,
//! which is how `⟨ab⟩ = -⟨a'b⟩` becomes accessible even though `A` and `B`
//! cannot be measured jointly. All axes lie in the x–z plane.

use core::f64::consts::PI;

use libm::cos;

use crate::entropy::{mutual_from_correlation, PairwiseEntropySummary};
use crate::probability::{correlation, JointDistribution};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSetup {
    theta: f64,
    phi: f64,
}

impl MeasurementSetup {
    /// Both angles must lie in `(-π, π]`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        for (what, v) in [("theta", theta), ("phi", phi)] {
            if !(v > -PI && v <= PI) {
                return Err(Error::OutOfRange { what, value: v });
            }
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Correlation coefficients among `A`, `B`, `C` and `A'`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorrelationSet {
    pub ab: f64,
    pub ac: f64,
    pub bc: f64,
    pub a_prime_b: f64,
    pub a_a_prime: f64,
}

impl CorrelationSet {
    pub fn new(ab: f64, ac: f64, bc: f64, a_prime_b: f64, a_a_prime: f64) -> Result<Self> {
        for (what, v) in
            [("ab", ab), ("ac", ac), ("bc", bc), ("a_prime_b", a_prime_b), ("a_a_prime", a_a_prime)]
        {
            if !(-1.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange { what, value: v });
            }
        }
        Ok(Self { ab, ac, bc, a_prime_b, a_a_prime })
    }

    /// Pairwise correlations of a classical triple (variables in order `A, B, C`).
    /// `A'` is taken to be `-A`.
    pub fn from_triple(joint: &JointDistribution) -> Result<Self> {
        if joint.arity() != 3 {
            return Err(Error::BadArity { expected: "3 variables", found: joint.arity() });
        }
        let l = joint.labels();
        let ab = correlation(&joint.pair(&l[0], &l[1])?)?;
        let ac = correlation(&joint.pair(&l[0], &l[2])?)?;
        let bc = correlation(&joint.pair(&l[1], &l[2])?)?;
        Ok(Self { ab, ac, bc, a_prime_b: -ab, a_a_prime: -1.0 })
    }
}

/// `p(s₁, s₂) = (1 - s₁s₂ cos(axis1 - axis2)) / 4` for the two halves of a
/// singlet measured along the given polar angles. Labels are `S1`, `S2`.
pub fn singlet_pair_distribution(axis1: f64, axis2: f64) -> JointDistribution {
    let c = cos(axis1 - axis2);
    let aligned = (1.0 - c) / 4.0;
    let opposite = (1.0 + c) / 4.0;
    JointDistribution::new(&["S1", "S2"], &[aligned, opposite, opposite, aligned])
        .expect("singlet table is a probability distribution")
}

pub fn bell_correlations(setup: &MeasurementSetup) -> CorrelationSet {
    let (theta, phi) = (setup.theta, setup.phi);
    let ab = cos(theta);
    CorrelationSet { ab, ac: -cos(phi), bc: -cos(theta - phi), a_prime_b: -ab, a_a_prime: -1.0 }
}

fn f(c: f64) -> f64 {
    mutual_from_correlation(c.clamp(-1.0, 1.0)).expect("clamped correlation")
}

/// Marginals of every observable are fair coins, so `hA = hB = hC = 1`.
pub fn bell_entropy_summary(setup: &MeasurementSetup) -> PairwiseEntropySummary {
    let (theta, phi) = (setup.theta, setup.phi);
    PairwiseEntropySummary {
        h_a: 1.0,
        h_b: 1.0,
        h_c: 1.0,
        i_ab: f(cos(theta)),
        i_ac: f(cos(phi)),
        i_bc: f(cos(theta - phi)),
    }
}

/// The four mutual entropies of the entropic CHSH form, in the order
/// `H(A':B), H(A:C), H(B:C), H(A:A')`.
pub fn chsh_entropies(setup: &MeasurementSetup) -> [f64; 4] {
    let c = bell_correlations(setup);
    [f(c.a_prime_b), f(c.ac), f(c.bc), f(c.a_a_prime)]
}

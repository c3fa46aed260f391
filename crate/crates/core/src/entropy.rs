//! Shannon entropies (in bits) of one to three dichotomic variables and the
//! seven-cell Venn diagram of a triple.
//!
//! Cell names follow the usual three-circle picture:
//!
//! ```text
//!   alpha = H(A|BC)    abar = H(B:C|A)
//!   beta  = H(B|AC)    bbar = H(A:C|B)
//!   gamma = H(C|AB)    gbar = H(A:B|C)
//!   delta = H(A:B:C)   (center; may be negative even classically)
//! ```
//!
//! Pairwise statistics fix six of the seven cells only up to `delta`; see
//! [`diagram_from_summary`] and [`degree_sums`].

use libm::log2;

use crate::probability::JointDistribution;
use crate::{Error, Result};

/// Below this distance from `|c| = 1` the mutual entropy is reported as exactly 1.
const CORRELATION_EDGE: f64 = 1e-15;

/// `-Σ p log₂ p`, with empty cells skipped.
pub fn shannon_entropy(joint: &JointDistribution) -> f64 {
    let h: f64 = joint.probabilities().iter().filter(|&&p| p > 0.0).map(|&p| -p * log2(p)).sum();
    // a point mass sums to -0.0
    h + 0.0
}

/// `h₂(p) = -p log₂ p - (1-p) log₂(1-p)`.
pub fn binary_entropy(p: f64) -> f64 {
    binary_entropy_split(p, 1.0 - p)
}

fn binary_entropy_split(p: f64, q: f64) -> f64 {
    let term = |x: f64| if x > 0.0 { -x * log2(x) } else { 0.0 };
    term(p) + term(q)
}

fn entropy_of(joint: &JointDistribution, labels: &[&str]) -> Result<f64> {
    if labels.is_empty() {
        return Ok(0.0);
    }
    Ok(shannon_entropy(&joint.marginalize(labels)?))
}

/// `H(X:Y) = H(X) + H(Y) - H(XY)`.
pub fn mutual_information(joint: &JointDistribution, x: &str, y: &str) -> Result<f64> {
    joint.position(x)?;
    joint.position(y)?;
    if x == y {
        return Err(Error::SameLabel(x.into()));
    }
    Ok(entropy_of(joint, &[x])? + entropy_of(joint, &[y])? - entropy_of(joint, &[x, y])?)
}

/// `H(X|Z) = H(XZ) - H(Z)` for a (possibly empty) conditioning set `Z`.
pub fn conditional_entropy(joint: &JointDistribution, x: &str, given: &[&str]) -> Result<f64> {
    joint.position(x)?;
    for g in given {
        joint.position(g)?;
    }
    if given.contains(&x) {
        return Err(Error::Overlap(x.into()));
    }
    let mut all = alloc::vec::Vec::with_capacity(given.len() + 1);
    all.push(x);
    all.extend_from_slice(given);
    Ok(entropy_of(joint, &all)? - entropy_of(joint, given)?)
}

/// `H(X:Y|Z) = H(XZ) + H(YZ) - H(Z) - H(XYZ)`.
pub fn conditional_mutual(joint: &JointDistribution, x: &str, y: &str, z: &str) -> Result<f64> {
    for l in [x, y, z] {
        joint.position(l)?;
    }
    if x == y || x == z {
        return Err(Error::SameLabel(x.into()));
    }
    if y == z {
        return Err(Error::SameLabel(y.into()));
    }
    Ok(entropy_of(joint, &[x, z])? + entropy_of(joint, &[y, z])?
        - entropy_of(joint, &[z])?
        - entropy_of(joint, &[x, y, z])?)
}

/// The entropies of every non-empty subset of a triple.
#[derive(Debug, Clone, Copy)]
struct SubsetEntropies {
    a: f64,
    b: f64,
    c: f64,
    ab: f64,
    ac: f64,
    bc: f64,
    abc: f64,
}

impl SubsetEntropies {
    fn of(joint: &JointDistribution) -> Result<Self> {
        if joint.arity() != 3 {
            return Err(Error::BadArity { expected: "3 variables", found: joint.arity() });
        }
        let l = joint.labels();
        let (a, b, c) = (l[0].as_str(), l[1].as_str(), l[2].as_str());
        Ok(Self {
            a: entropy_of(joint, &[a])?,
            b: entropy_of(joint, &[b])?,
            c: entropy_of(joint, &[c])?,
            ab: entropy_of(joint, &[a, b])?,
            ac: entropy_of(joint, &[a, c])?,
            bc: entropy_of(joint, &[b, c])?,
            abc: shannon_entropy(joint),
        })
    }

    fn ternary(&self) -> f64 {
        self.a + self.b + self.c - self.ab - self.ac - self.bc + self.abc
    }
}

/// `H(A:B:C) = H(A)+H(B)+H(C) - H(AB)-H(AC)-H(BC) + H(ABC)`, with the
/// variables taken in the distribution's order.
pub fn ternary_mutual(joint: &JointDistribution) -> Result<f64> {
    Ok(SubsetEntropies::of(joint)?.ternary())
}

/// The seven cells of the three-variable entropy Venn diagram, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EntropyDiagram {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub abar: f64,
    pub bbar: f64,
    pub gbar: f64,
    pub delta: f64,
}

impl EntropyDiagram {
    /// Sum of all seven cells, i.e. `H(ABC)`.
    pub fn total(&self) -> f64 {
        self.alpha + self.beta + self.gamma + self.abar + self.bbar + self.gbar + self.delta
    }

    /// The cells making up the `A`, `B` and `C` circles.
    pub fn marginals(&self) -> [f64; 3] {
        [
            self.alpha + self.bbar + self.gbar + self.delta,
            self.beta + self.abar + self.gbar + self.delta,
            self.gamma + self.abar + self.bbar + self.delta,
        ]
    }

    /// `(alpha + abar, beta + bbar, gamma + gbar)`.
    pub fn degree_sums(&self) -> [f64; 3] {
        [self.alpha + self.abar, self.beta + self.bbar, self.gamma + self.gbar]
    }

    /// All cells in the order alpha, beta, gamma, abar, bbar, gbar, delta.
    pub fn cells(&self) -> [f64; 7] {
        [self.alpha, self.beta, self.gamma, self.abar, self.bbar, self.gbar, self.delta]
    }
}

pub fn ternary_diagram(joint: &JointDistribution) -> Result<EntropyDiagram> {
    let s = SubsetEntropies::of(joint)?;
    Ok(EntropyDiagram {
        alpha: s.abc - s.bc,
        beta: s.abc - s.ac,
        gamma: s.abc - s.ab,
        abar: s.ab + s.ac - s.a - s.abc,
        bbar: s.ab + s.bc - s.b - s.abc,
        gbar: s.ac + s.bc - s.c - s.abc,
        delta: s.ternary(),
    })
}

/// The six entropies measurable from single-variable and pair statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairwiseEntropySummary {
    #[cfg_attr(feature = "serde", serde(rename = "hA"))]
    pub h_a: f64,
    #[cfg_attr(feature = "serde", serde(rename = "hB"))]
    pub h_b: f64,
    #[cfg_attr(feature = "serde", serde(rename = "hC"))]
    pub h_c: f64,
    #[cfg_attr(feature = "serde", serde(rename = "iAB"))]
    pub i_ab: f64,
    #[cfg_attr(feature = "serde", serde(rename = "iAC"))]
    pub i_ac: f64,
    #[cfg_attr(feature = "serde", serde(rename = "iBC"))]
    pub i_bc: f64,
}

impl PairwiseEntropySummary {
    /// Checks `0 <= h <= 1` and `0 <= i <= min(h_x, h_y)`, each within [`crate::TOLERANCE`].
    pub fn validate(&self) -> Result<()> {
        let tol = crate::TOLERANCE;
        for (what, h) in [("hA", self.h_a), ("hB", self.h_b), ("hC", self.h_c)] {
            if !(h >= -tol && h <= 1.0 + tol) {
                return Err(Error::OutOfRange { what, value: h });
            }
        }
        for (what, i, hx, hy) in [
            ("iAB", self.i_ab, self.h_a, self.h_b),
            ("iAC", self.i_ac, self.h_a, self.h_c),
            ("iBC", self.i_bc, self.h_b, self.h_c),
        ] {
            if !(i >= -tol && i <= hx.min(hy) + tol) {
                return Err(Error::OutOfRange { what, value: i });
            }
        }
        Ok(())
    }

    /// The summary with the roles of `A` and `C` exchanged.
    pub fn swap_a_c(&self) -> Self {
        Self {
            h_a: self.h_c,
            h_b: self.h_b,
            h_c: self.h_a,
            i_ab: self.i_bc,
            i_ac: self.i_ac,
            i_bc: self.i_ab,
        }
    }
}

pub fn pairwise_summary(joint: &JointDistribution) -> Result<PairwiseEntropySummary> {
    let s = SubsetEntropies::of(joint)?;
    Ok(PairwiseEntropySummary {
        h_a: s.a,
        h_b: s.b,
        h_c: s.c,
        i_ab: s.a + s.b - s.ab,
        i_ac: s.a + s.c - s.ac,
        i_bc: s.b + s.c - s.bc,
    })
}

/// Fills in the diagram from pairwise data and a chosen center `delta`.
///
/// Any `delta` is accepted; the result may contain negative cells.
pub fn diagram_from_summary(summary: &PairwiseEntropySummary, delta: f64) -> EntropyDiagram {
    let gbar = summary.i_ab - delta;
    let bbar = summary.i_ac - delta;
    let abar = summary.i_bc - delta;
    EntropyDiagram {
        alpha: summary.h_a - bbar - gbar - delta,
        beta: summary.h_b - abar - gbar - delta,
        gamma: summary.h_c - abar - bbar - delta,
        abar,
        bbar,
        gbar,
        delta,
    }
}

/// `(alpha + abar, beta + bbar, gamma + gbar)` from pairwise data alone;
/// the unknown center cancels.
pub fn degree_sums(summary: &PairwiseEntropySummary) -> [f64; 3] {
    let s = summary;
    [s.h_a + s.i_bc - s.i_ab - s.i_ac, s.h_b + s.i_ac - s.i_ab - s.i_bc, s.h_c + s.i_ab - s.i_ac - s.i_bc]
}

/// Mutual entropy of two equiprobable ±1 variables with correlation `c`,
/// `½log₂(1-c²) + (c/2)log₂((1+c)/(1-c)) = 1 - h₂((1+c)/2)`.
///
/// Depends on `|c|` only, so `f(c) == f(-c)` bit for bit.
pub fn mutual_from_correlation(c: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&c) {
        return Err(Error::OutOfRange { what: "correlation", value: c });
    }
    let c = c.abs();
    if 1.0 - c < CORRELATION_EDGE {
        return Ok(1.0);
    }
    Ok(1.0 - binary_entropy_split((1.0 + c) / 2.0, (1.0 - c) / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probability::random_joint;

    fn triple(f: impl FnMut(&[crate::probability::Outcome]) -> f64) -> JointDistribution {
        JointDistribution::from_fn(&["A", "B", "C"], f).unwrap()
    }

    fn xor() -> JointDistribution {
        triple(|o| if o[2].value() == o[0].value() * o[1].value() { 0.25 } else { 0.0 })
    }

    fn identical() -> JointDistribution {
        triple(|o| if o[0] == o[1] && o[1] == o[2] { 0.5 } else { 0.0 })
    }

    fn independent() -> JointDistribution {
        triple(|_| 0.125)
    }

    fn pair(table: [f64; 4]) -> JointDistribution {
        JointDistribution::new(&["A", "B"], &table).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    // Expected values below come from direct evaluation of -Σ p log₂ p
    // (mpmath, 30 digits), independent of this module.
    const H2_QUARTER: f64 = 0.811_278_124_459_132_9;
    const I_HALF: f64 = 0.188_721_875_540_867_1;

    #[test]
    fn shannon_examples() {
        assert_eq!(shannon_entropy(&pair([0.25; 4])), 2.0);
        let point = JointDistribution::new(&["A", "B"], &[0.0, 0.0, 1.0, 0.0]).unwrap();
        assert_eq!(shannon_entropy(&point), 0.0);
        assert!(shannon_entropy(&point).is_sign_positive());
        let bit = JointDistribution::new(&["A"], &[0.75, 0.25]).unwrap();
        assert!(close(shannon_entropy(&bit), H2_QUARTER, 1e-15));
    }

    #[test]
    fn mutual_examples() {
        assert_eq!(mutual_information(&pair([0.25; 4]), "A", "B").unwrap(), 0.0);
        assert_eq!(mutual_information(&pair([0.5, 0.0, 0.0, 0.5]), "A", "B").unwrap(), 1.0);
        let half = pair([0.375, 0.125, 0.125, 0.375]);
        assert!(close(mutual_information(&half, "A", "B").unwrap(), I_HALF, 1e-15));
        assert!(matches!(mutual_information(&half, "A", "A"), Err(Error::SameLabel(_))));
        assert!(matches!(mutual_information(&half, "A", "Z"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn conditional_examples() {
        assert_eq!(conditional_entropy(&pair([0.5, 0.0, 0.0, 0.5]), "A", &["B"]).unwrap(), 0.0);
        assert_eq!(conditional_entropy(&pair([0.25; 4]), "A", &["B"]).unwrap(), 1.0);
        let half = pair([0.375, 0.125, 0.125, 0.375]);
        let h = conditional_entropy(&half, "A", &["B"]).unwrap();
        assert!(close(h, 1.0 - I_HALF, 1e-15));
        assert!(close(h, H2_QUARTER, 1e-15));
        assert!(matches!(conditional_entropy(&half, "A", &["A"]), Err(Error::Overlap(_))));
        assert!(matches!(conditional_entropy(&half, "A", &["Q"]), Err(Error::UnknownLabel(_))));
        assert_eq!(conditional_entropy(&half, "A", &[]).unwrap(), 1.0);
    }

    #[test]
    fn conditional_mutual_examples() {
        assert_eq!(conditional_mutual(&xor(), "A", "B", "C").unwrap(), 1.0);
        assert_eq!(conditional_mutual(&independent(), "A", "B", "C").unwrap(), 0.0);
        assert_eq!(conditional_mutual(&identical(), "A", "B", "C").unwrap(), 0.0);
        assert!(conditional_mutual(&xor(), "A", "A", "C").is_err());
        assert!(conditional_mutual(&xor(), "A", "B", "B").is_err());
    }

    #[test]
    fn ternary_examples() {
        assert_eq!(ternary_mutual(&independent()).unwrap(), 0.0);
        assert_eq!(ternary_mutual(&identical()).unwrap(), 1.0);
        assert_eq!(ternary_mutual(&xor()).unwrap(), -1.0);
        assert!(matches!(ternary_mutual(&pair([0.25; 4])), Err(Error::BadArity { .. })));
    }

    #[test]
    fn diagram_examples() {
        let d = ternary_diagram(&independent()).unwrap();
        assert_eq!(d.cells(), [1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let d = ternary_diagram(&identical()).unwrap();
        assert_eq!(d.cells(), [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let d = ternary_diagram(&xor()).unwrap();
        assert_eq!(d.cells(), [0.0, 0.0, 0.0, 1.0, 1.0, 1.0, -1.0]);
        assert!(ternary_diagram(&pair([0.25; 4])).is_err());
    }

    #[test]
    fn diagram_cells_match_their_definitions() {
        let t = random_joint(11, 3).unwrap();
        let d = ternary_diagram(&t).unwrap();
        let tol = 1e-12;
        assert!(close(d.alpha, conditional_entropy(&t, "A", &["B", "C"]).unwrap(), tol));
        assert!(close(d.beta, conditional_entropy(&t, "B", &["A", "C"]).unwrap(), tol));
        assert!(close(d.gamma, conditional_entropy(&t, "C", &["A", "B"]).unwrap(), tol));
        assert!(close(d.abar, conditional_mutual(&t, "B", "C", "A").unwrap(), tol));
        assert!(close(d.bbar, conditional_mutual(&t, "A", "C", "B").unwrap(), tol));
        assert!(close(d.gbar, conditional_mutual(&t, "A", "B", "C").unwrap(), tol));
        assert!(close(d.total(), shannon_entropy(&t), tol));
    }

    #[test]
    fn summary_examples() {
        let s = pairwise_summary(&independent()).unwrap();
        assert_eq!([s.h_a, s.h_b, s.h_c, s.i_ab, s.i_ac, s.i_bc], [1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let s = pairwise_summary(&identical()).unwrap();
        assert_eq!([s.h_a, s.h_b, s.h_c, s.i_ab, s.i_ac, s.i_bc], [1.0; 6]);
        let s = pairwise_summary(&xor()).unwrap();
        assert_eq!([s.h_a, s.h_b, s.h_c, s.i_ab, s.i_ac, s.i_bc], [1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        s.validate().unwrap();
    }

    #[test]
    fn summary_validation() {
        let mut s = pairwise_summary(&identical()).unwrap();
        s.i_ab = 1.5;
        assert!(matches!(s.validate(), Err(Error::OutOfRange { what: "iAB", .. })));
        let mut s = pairwise_summary(&identical()).unwrap();
        s.h_c = -0.1;
        assert!(s.validate().is_err());
    }

    #[test]
    fn diagram_from_summary_examples() {
        let indep = pairwise_summary(&independent()).unwrap();
        assert_eq!(diagram_from_summary(&indep, 0.0), ternary_diagram(&independent()).unwrap());
        let ident = pairwise_summary(&identical()).unwrap();
        assert_eq!(diagram_from_summary(&ident, 1.0), ternary_diagram(&identical()).unwrap());
        let x = pairwise_summary(&xor()).unwrap();
        assert_eq!(diagram_from_summary(&x, -1.0), ternary_diagram(&xor()).unwrap());
    }

    #[test]
    fn degree_sum_examples() {
        assert_eq!(degree_sums(&pairwise_summary(&independent()).unwrap()), [1.0; 3]);
        assert_eq!(degree_sums(&pairwise_summary(&identical()).unwrap()), [0.0; 3]);
        let x = degree_sums(&pairwise_summary(&xor()).unwrap());
        assert_eq!(x, [1.0; 3]);
        let d = ternary_diagram(&xor()).unwrap();
        assert_eq!(d.alpha + d.abar, x[0]);
    }

    #[test]
    fn mutual_from_correlation_examples() {
        assert_eq!(mutual_from_correlation(0.0).unwrap(), 0.0);
        assert_eq!(mutual_from_correlation(1.0).unwrap(), 1.0);
        assert_eq!(mutual_from_correlation(-1.0).unwrap(), 1.0);
        assert!(close(mutual_from_correlation(0.5).unwrap(), I_HALF, 1e-15));
        assert!(matches!(mutual_from_correlation(1.0001), Err(Error::OutOfRange { .. })));
        assert!(mutual_from_correlation(f64::NAN).is_err());
    }

    #[test]
    fn mutual_from_correlation_near_the_edge() {
        let f = mutual_from_correlation(1.0 - 1e-16).unwrap();
        assert_eq!(f, 1.0);
        let g = mutual_from_correlation(1.0 - 1e-12).unwrap();
        assert!(g < 1.0 && g > 1.0 - 1e-10);
        // the textbook form agrees away from the edge
        for c in [0.1, 0.37, 0.9, 0.999] {
            let textbook = 0.5 * log2(1.0 - c * c) + c / 2.0 * log2((1.0 + c) / (1.0 - c));
            assert!(close(mutual_from_correlation(c).unwrap(), textbook, 1e-13));
        }
    }

    #[test]
    fn binary_entropy_endpoints() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert_eq!(binary_entropy(0.5), 1.0);
        assert!(close(binary_entropy(0.25), H2_QUARTER, 1e-15));
    }
}

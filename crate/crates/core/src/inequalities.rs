//! Conventional and entropic Bell inequalities, and the conditional-entropy
//! diagnosis that follows from an entropic violation.
//!
//! Every checker returns an [`InequalityReport`] for `lhs <= rhs`.

use alloc::vec::Vec;
use core::fmt;

use crate::entropy::{degree_sums, PairwiseEntropySummary};
use crate::quantum::CorrelationSet;
use crate::{Error, Result, TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "SCREAMING_SNAKE_CASE"))]
pub enum InequalityId {
    /// `ab + ac - bc <= 1`
    Bell1,
    /// `ab - ac + bc <= 1`
    Bell2,
    /// `-ab + ac + bc <= 1`
    Bell3,
    /// `|ab - ac| + bc <= 1`
    BellStd,
    /// `H(A:B) + H(A:C) - H(B:C) <= H(A)`
    Ebell1,
    /// `H(A:B) - H(A:C) + H(B:C) <= H(B)`
    Ebell2,
    /// `-H(A:B) + H(A:C) + H(B:C) <= H(C)`
    Ebell3,
    /// `|H(A:B) - H(A:C)| + H(B:C) <= 1`
    EbellStd,
    /// `H(A':B) + H(A:C) - H(B:C) + H(A:A') <= 2`
    Echsh,
    /// `n(a, ¬b) <= n(a, ¬c) + n(¬b, c)`
    Wigner,
}

impl InequalityId {
    pub fn as_str(self) -> &'static str {
        match self {
            InequalityId::Bell1 => "BELL1",
            InequalityId::Bell2 => "BELL2",
            InequalityId::Bell3 => "BELL3",
            InequalityId::BellStd => "BELL_STD",
            InequalityId::Ebell1 => "EBELL1",
            InequalityId::Ebell2 => "EBELL2",
            InequalityId::Ebell3 => "EBELL3",
            InequalityId::EbellStd => "EBELL_STD",
            InequalityId::Echsh => "ECHSH",
            InequalityId::Wigner => "WIGNER",
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InequalityReport {
    pub id: InequalityId,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; negative when the inequality fails.
    pub margin: f64,
    /// `margin < -TOLERANCE`
    pub violated: bool,
}

impl InequalityReport {
    pub fn new(id: InequalityId, lhs: f64, rhs: f64) -> Self {
        let margin = rhs - lhs;
        Self { id, lhs, rhs, margin, violated: margin < -TOLERANCE }
    }
}

/// The three correlation-coefficient Bell inequalities, each bounded by 1.
pub fn conventional_bell(corr: &CorrelationSet) -> [InequalityReport; 3] {
    let CorrelationSet { ab, ac, bc, .. } = *corr;
    [
        InequalityReport::new(InequalityId::Bell1, ab + ac - bc, 1.0),
        InequalityReport::new(InequalityId::Bell2, ab - ac + bc, 1.0),
        InequalityReport::new(InequalityId::Bell3, -ab + ac + bc, 1.0),
    ]
}

/// `|ab - ac| + bc <= 1`, the union of the second and third conventional forms.
pub fn standard_bell(corr: &CorrelationSet) -> InequalityReport {
    InequalityReport::new(InequalityId::BellStd, (corr.ab - corr.ac).abs() + corr.bc, 1.0)
}

/// The three entropic Bell inequalities. Each is bounded by the entropy of
/// the variable whose circle it measures.
pub fn entropic_bell(summary: &PairwiseEntropySummary) -> [InequalityReport; 3] {
    let s = summary;
    [
        InequalityReport::new(InequalityId::Ebell1, s.i_ab + s.i_ac - s.i_bc, s.h_a),
        InequalityReport::new(InequalityId::Ebell2, s.i_ab - s.i_ac + s.i_bc, s.h_b),
        InequalityReport::new(InequalityId::Ebell3, -s.i_ab + s.i_ac + s.i_bc, s.h_c),
    ]
}

/// `|H(A:B) - H(A:C)| + H(B:C) <= 1`.
///
/// The bound assumes fair-coin marginals (`H(A) = H(B) = H(C) = 1`); no
/// general-marginal version is attempted.
pub fn entropic_bell_standard(summary: &PairwiseEntropySummary) -> InequalityReport {
    let s = summary;
    InequalityReport::new(InequalityId::EbellStd, (s.i_ab - s.i_ac).abs() + s.i_bc, 1.0)
}

/// `H(A':B) + H(A:C) - H(B:C) + H(A:A') <= 2`. Each input must lie in `[0, 1]`.
pub fn entropic_chsh(i_a_prime_b: f64, i_ac: f64, i_bc: f64, i_a_a_prime: f64) -> Result<InequalityReport> {
    for (what, v) in [("H(A':B)", i_a_prime_b), ("H(A:C)", i_ac), ("H(B:C)", i_bc), ("H(A:A')", i_a_a_prime)]
    {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::OutOfRange { what, value: v });
        }
    }
    Ok(InequalityReport::new(InequalityId::Echsh, i_a_prime_b + i_ac - i_bc + i_a_a_prime, 2.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ConditionalEntropy {
    #[cfg_attr(feature = "serde", serde(rename = "H(A|BC)"))]
    AGivenBC,
    #[cfg_attr(feature = "serde", serde(rename = "H(B|AC)"))]
    BGivenAC,
    #[cfg_attr(feature = "serde", serde(rename = "H(C|AB)"))]
    CGivenAB,
}

impl ConditionalEntropy {
    pub const ALL: [ConditionalEntropy; 3] =
        [ConditionalEntropy::AGivenBC, ConditionalEntropy::BGivenAC, ConditionalEntropy::CGivenAB];

    pub fn as_str(self) -> &'static str {
        match self {
            ConditionalEntropy::AGivenBC => "H(A|BC)",
            ConditionalEntropy::BGivenAC => "H(B|AC)",
            ConditionalEntropy::CGivenAB => "H(C|AB)",
        }
    }

    /// The entropic inequality whose violation forces this entropy negative.
    pub fn inequality(self) -> InequalityId {
        match self {
            ConditionalEntropy::AGivenBC => InequalityId::Ebell1,
            ConditionalEntropy::BGivenAC => InequalityId::Ebell2,
            ConditionalEntropy::CGivenAB => InequalityId::Ebell3,
        }
    }
}

impl fmt::Display for ConditionalEntropy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A conditional entropy that must be negative, with an upper bound on it.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NegativeEntropy {
    pub label: ConditionalEntropy,
    pub upper_bound: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NegativityDiagnosis {
    pub entries: Vec<NegativeEntropy>,
}

impl NegativityDiagnosis {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: ConditionalEntropy) -> Option<f64> {
        self.entries.iter().find(|e| e.label == label).map(|e| e.upper_bound)
    }
}

/// Lists the conditional entropies forced below zero by the pairwise data.
///
/// With `abar >= 0` (strong subadditivity holds for quantum entropies too),
/// `alpha <= alpha + abar`, so a negative degree sum bounds `alpha` from above
/// by a negative number. The same holds for `beta` and `gamma`.
pub fn diagnose_negativity(summary: &PairwiseEntropySummary) -> NegativityDiagnosis {
    let entries = ConditionalEntropy::ALL
        .into_iter()
        .zip(degree_sums(summary))
        .filter(|&(_, sum)| sum < -TOLERANCE)
        .map(|(label, upper_bound)| NegativeEntropy { label, upper_bound })
        .collect();
    NegativityDiagnosis { entries }
}

/// All conventional reports followed by the standard form.
pub fn conventional_family(corr: &CorrelationSet) -> [InequalityReport; 4] {
    let [a, b, c] = conventional_bell(corr);
    [a, b, c, standard_bell(corr)]
}

/// All entropic reports followed by the standard form.
pub fn entropic_family(summary: &PairwiseEntropySummary) -> [InequalityReport; 4] {
    let [a, b, c] = entropic_bell(summary);
    [a, b, c, entropic_bell_standard(summary)]
}

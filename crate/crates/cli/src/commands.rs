//! One function per subcommand. Each returns the JSON document to print.

use std::path::Path;

use entropic_bell::entropy::{pairwise_summary, ternary_diagram, EntropyDiagram, PairwiseEntropySummary};
use entropic_bell::inequalities::{
    conventional_family, diagnose_negativity, entropic_chsh, entropic_family, InequalityReport,
    NegativityDiagnosis,
};
use entropic_bell::probability::wigner_check;
use entropic_bell::quantum::{
    bell_correlations, bell_entropy_summary, chsh_entropies, CorrelationSet, MeasurementSetup,
};
use entropic_bell::scan::{maximize_violation_with, sweep_phi, Family, MaximizeOptions, OptimumReport};
use serde::Serialize;

use crate::formats::{emit_rows_to_path, load_counts, load_distribution};
use crate::{CliError, Result};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema_version: &'static str,
    #[serde(flatten)]
    body: T,
}

fn render<T: Serialize>(body: T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope { schema_version: SCHEMA_VERSION, body })
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn require_triple(arity: usize) -> Result<()> {
    if arity != 3 {
        return Err(CliError::Invalid(format!("expected a distribution over 3 variables, found {arity}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct DiagramOutput<'a> {
    variables: &'a [String],
    diagram: EntropyDiagram,
    summary: PairwiseEntropySummary,
}

pub fn diagram(dist: &Path) -> Result<String> {
    let joint = load_distribution(dist)?;
    require_triple(joint.arity())?;
    render(DiagramOutput {
        variables: joint.labels(),
        diagram: ternary_diagram(&joint)?,
        summary: pairwise_summary(&joint)?,
    })
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Source {
    Distribution { variables: Vec<String> },
    Quantum { theta: f64, phi: f64 },
}

#[derive(Serialize)]
struct CheckOutput {
    source: Source,
    correlations: CorrelationSet,
    summary: PairwiseEntropySummary,
    reports: Vec<InequalityReport>,
    diagnosis: NegativityDiagnosis,
}

fn check_output(
    source: Source,
    correlations: CorrelationSet,
    summary: PairwiseEntropySummary,
    chsh: [f64; 4],
) -> Result<String> {
    let mut reports = Vec::with_capacity(9);
    reports.extend(conventional_family(&correlations));
    reports.extend(entropic_family(&summary));
    let [a_prime_b, ac, bc, a_a_prime] = chsh.map(|i| i.clamp(0.0, 1.0));
    reports.push(entropic_chsh(a_prime_b, ac, bc, a_a_prime)?);
    render(CheckOutput { source, correlations, summary, reports, diagnosis: diagnose_negativity(&summary) })
}

/// Inequalities from the pairwise marginals of a classical triple.
///
/// `A'` is `-A`, so `H(A':B) = H(A:B)` and `H(A:A') = H(A)`.
pub fn check_distribution(dist: &Path) -> Result<String> {
    let joint = load_distribution(dist)?;
    require_triple(joint.arity())?;
    let correlations = CorrelationSet::from_triple(&joint)?;
    let summary = pairwise_summary(&joint)?;
    let chsh = [summary.i_ab, summary.i_ac, summary.i_bc, summary.h_a];
    let source = Source::Distribution { variables: joint.labels().to_vec() };
    check_output(source, correlations, summary, chsh)
}

pub fn check_quantum(theta: f64, phi: f64) -> Result<String> {
    let setup = MeasurementSetup::new(theta, phi)?;
    check_output(
        Source::Quantum { theta, phi },
        bell_correlations(&setup),
        bell_entropy_summary(&setup),
        chsh_entropies(&setup),
    )
}

#[derive(Serialize)]
struct SweepOutput<'a> {
    theta: f64,
    phi_min: f64,
    phi_max: f64,
    rows: usize,
    out: &'a str,
}

pub fn sweep(theta: f64, phi_min: f64, phi_max: f64, steps: usize, out: &Path) -> Result<String> {
    let rows = sweep_phi(theta, phi_min, phi_max, steps)?;
    emit_rows_to_path(&rows, out)?;
    render(SweepOutput { theta, phi_min, phi_max, rows: rows.len(), out: &out.to_string_lossy() })
}

pub fn maximize(family: Family, resolution: usize) -> Result<String> {
    if resolution < 2 {
        return Err(CliError::Invalid(format!("resolution must be at least 2, got {resolution}")));
    }
    let options = MaximizeOptions { resolution, ..MaximizeOptions::default() };
    let report: OptimumReport = maximize_violation_with(family, &options);
    render(report)
}

pub fn wigner(counts: &Path) -> Result<String> {
    let table = load_counts(counts)?;
    render(wigner_check(&table))
}

//! Joint probability tables over one to three dichotomic variables, plus the
//! purely combinatorial inequalities that hold for any population of objects.
//!
//! Tables are stored densely. Outcome tuples are ordered lexicographically
//! with `+1` before `-1`, the first variable being the most significant; for
//! two variables the order is `++, +-, -+, --`.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::inequalities::{InequalityId, InequalityReport};
use crate::{Error, Result};

/// Allowed deviation of a table's total mass from one.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

pub const MAX_ARITY: usize = 3;

/// The value of a dichotomic observable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    pub fn value(self) -> i32 {
        match self {
            Outcome::Plus => 1,
            Outcome::Minus => -1,
        }
    }

    pub fn from_value(value: i32) -> Option<Self> {
        match value {
            1 => Some(Outcome::Plus),
            -1 => Some(Outcome::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Outcome::Plus => Outcome::Minus,
            Outcome::Minus => Outcome::Plus,
        }
    }

    fn bit(self) -> usize {
        match self {
            Outcome::Plus => 0,
            Outcome::Minus => 1,
        }
    }
}

/// Outcome of variable `var` in the tuple stored at `index` of an `arity`-variable table.
pub fn outcome_at(index: usize, var: usize, arity: usize) -> Outcome {
    if (index >> (arity - 1 - var)) & 1 == 0 {
        Outcome::Plus
    } else {
        Outcome::Minus
    }
}

/// Table position of an outcome tuple.
pub fn tuple_index(outcomes: &[Outcome]) -> usize {
    outcomes.iter().fold(0, |acc, o| (acc << 1) | o.bit())
}

/// A validated probability table `p(x_1, ..., x_n)` with `1 <= n <= 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    labels: Vec<String>,
    probabilities: Vec<f64>,
}

impl JointDistribution {
    /// Builds a distribution, rejecting tables that are not a probability
    /// measure. No renormalization is attempted.
    pub fn new<S: AsRef<str>>(labels: &[S], table: &[f64]) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > MAX_ARITY {
            return Err(Error::BadArity { expected: "1 to 3 variables", found: n });
        }
        if table.len() != 1 << n {
            return Err(Error::BadArity { expected: "2^n table entries", found: table.len() });
        }
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for (index, &value) in table.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::NegativeProbability { index, value });
            }
        }
        let sum: f64 = table.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { labels, probabilities: table.to_vec() })
    }

    /// Builds a table by evaluating `f` on every outcome tuple in storage order.
    pub fn from_fn<S: AsRef<str>>(labels: &[S], mut f: impl FnMut(&[Outcome]) -> f64) -> Result<Self> {
        let n = labels.len().clamp(1, MAX_ARITY);
        let mut tuple = [Outcome::Plus; MAX_ARITY];
        let table: Vec<f64> = (0..1usize << n)
            .map(|i| {
                for (v, slot) in tuple[..n].iter_mut().enumerate() {
                    *slot = outcome_at(i, v, n);
                }
                f(&tuple[..n])
            })
            .collect();
        Self::new(labels, &table)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arity(&self) -> usize {
        self.labels.len()
    }

    /// Entries in storage order.
    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn probability(&self, outcomes: &[Outcome]) -> Option<f64> {
        (outcomes.len() == self.arity()).then(|| self.probabilities[tuple_index(outcomes)])
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Sums out every variable not in `keep`. The result lists the kept
    /// variables in this distribution's order, whatever the order of `keep`.
    ///
    /// Dropped variables are eliminated one at a time, first to last, so
    /// dropping `A` and then `B` reproduces dropping `{A, B}` bit for bit.
    pub fn marginalize<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::BadArity { expected: "at least one kept variable", found: 0 });
        }
        let mut kept = [false; MAX_ARITY];
        for label in keep {
            let pos = self.position(label.as_ref())?;
            if kept[pos] {
                return Err(Error::DuplicateLabel(label.as_ref().to_owned()));
            }
            kept[pos] = true;
        }

        let mut labels = self.labels.clone();
        let mut table = self.probabilities.clone();
        let mut var = 0;
        for &keep_it in &kept[..self.arity()] {
            if keep_it {
                var += 1;
            } else {
                table = sum_out(&table, labels.len(), var);
                labels.remove(var);
            }
        }
        Ok(Self { labels, probabilities: table })
    }

    /// Two-variable marginal in the stated order (`x` first).
    pub fn pair(&self, x: &str, y: &str) -> Result<Self> {
        let px = self.position(x)?;
        let py = self.position(y)?;
        if px == py {
            return Err(Error::SameLabel(x.to_owned()));
        }
        let m = self.marginalize(&[x, y])?;
        Ok(if px < py { m } else { m.swapped() })
    }

    fn swapped(&self) -> Self {
        debug_assert_eq!(self.arity(), 2);
        let p = &self.probabilities;
        Self {
            labels: alloc::vec![self.labels[1].clone(), self.labels[0].clone()],
            probabilities: alloc::vec![p[0], p[2], p[1], p[3]],
        }
    }

    /// The same table under different variable names.
    pub fn relabeled<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        Self::new(labels, &self.probabilities)
    }

    /// Reorders the variables; `order[k]` names the variable placed at position `k`.
    pub fn permuted<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        let n = self.arity();
        if order.len() != n {
            return Err(Error::BadArity { expected: "one entry per variable", found: order.len() });
        }
        let mut src = [0usize; MAX_ARITY];
        for (k, label) in order.iter().enumerate() {
            src[k] = self.position(label.as_ref())?;
        }
        let mut tuple = [Outcome::Plus; MAX_ARITY];
        let table: Vec<f64> = (0..1usize << n)
            .map(|i| {
                for k in 0..n {
                    tuple[src[k]] = outcome_at(i, k, n);
                }
                self.probabilities[tuple_index(&tuple[..n])]
            })
            .collect();
        Self::new(order, &table)
    }
}

fn sum_out(table: &[f64], arity: usize, var: usize) -> Vec<f64> {
    let low_bits = arity - 1 - var;
    let low_mask = (1usize << low_bits) - 1;
    (0..table.len() / 2)
        .map(|j| {
            let hi = (j & !low_mask) << 1;
            let lo = j & low_mask;
            let plus = hi | lo;
            let minus = plus | (1 << low_bits);
            table[plus] + table[minus]
        })
        .collect()
}

/// `⟨xy⟩ = Σ x·y·p(x, y)`, clamped to `[-1, 1]` against rounding.
///
/// For equiprobable marginals this reduces to `4 p(+,+) - 1`.
pub fn correlation(pair: &JointDistribution) -> Result<f64> {
    if pair.arity() != 2 {
        return Err(Error::BadArity { expected: "2 variables", found: pair.arity() });
    }
    let p = pair.probabilities();
    let c = (p[0] + p[3]) - (p[1] + p[2]);
    Ok(c.clamp(-1.0, 1.0))
}

/// `ab + ac - bc` for one deterministic assignment of the three outcomes.
/// Never exceeds 1.
pub fn deterministic_bound(a: Outcome, b: Outcome, c: Outcome) -> i32 {
    a.value() * b.value() + a.value() * c.value() - b.value() * c.value()
}

/// Population counts over the eight combinations of three yes/no properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountTable {
    counts: [u64; 8],
}

impl CountTable {
    /// `counts` is indexed by `(not a)·4 + (not b)·2 + (not c)`, so index 0
    /// holds objects with all three properties.
    pub fn new(counts: [u64; 8]) -> Result<Self> {
        if counts.iter().all(|&n| n == 0) {
            return Err(Error::EmptyCountTable);
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[u64; 8] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Number of objects matching each given property; `None` leaves it free.
    pub fn count_where(&self, a: Option<bool>, b: Option<bool>, c: Option<bool>) -> u64 {
        let matches = |want: Option<bool>, has: bool| want.is_none_or(|w| w == has);
        (0..8)
            .filter(|i| matches(a, i & 4 == 0) && matches(b, i & 2 == 0) && matches(c, i & 1 == 0))
            .map(|i| self.counts[i])
            .sum()
    }
}

/// `n(a, ¬b) <= n(a, ¬c) + n(¬b, c)`, which holds for every population.
pub fn wigner_check(table: &CountTable) -> InequalityReport {
    let lhs = table.count_where(Some(true), Some(false), None);
    let rhs =
        table.count_where(Some(true), None, Some(false)) + table.count_where(None, Some(false), Some(true));
    InequalityReport::new(InequalityId::Wigner, lhs as f64, rhs as f64)
}

/// A strictly interior distribution over `n` variables named `A`, `B`, `C`,
/// obtained by normalizing `2^n` independent draws from the open unit
/// interval. Deterministic in `seed`.
pub fn random_joint(seed: u64, n: usize) -> Result<JointDistribution> {
    if n == 0 || n > MAX_ARITY {
        return Err(Error::BadArity { expected: "1 to 3 variables", found: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table: Vec<f64> = (0..1usize << n).map(|_| rng.sample::<f64, _>(Open01)).collect();
    let total: f64 = table.iter().sum();
    for p in &mut table {
        *p /= total;
    }
    JointDistribution::new(&["A", "B", "C"][..n], &table)
}

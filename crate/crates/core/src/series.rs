//! Series accumulation with explicit truncation diagnostics.

/// Value of a truncated series together with how the truncation went.
///
/// `error_estimate` is an absolute estimate. For convergent series it is
/// the magnitude of the largest recently discarded term; for asymptotic
/// (smallest-term truncated) series it is the first omitted term. Both
/// are floored at a multiple of machine epsilon times the accumulated
/// term magnitudes, since no f64 sum can claim accuracy below that.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    pub last_term: f64,
    pub converged: bool,
    pub error_estimate: f64,
}

/// Rounding floor for error estimates: `ROUNDING_FLOOR_ULPS * eps * sum |t_k|`.
/// Covers accumulated summation error plus the accuracy limit of the
/// quadrature-backed factors inside individual terms.
pub(crate) const ROUNDING_FLOOR_ULPS: f64 = 32.0;

pub(crate) fn rounding_floor(abs_sum: f64) -> f64 {
    ROUNDING_FLOOR_ULPS * f64::EPSILON * abs_sum
}

/// Relative settle threshold used by the fixed-length diagnostic sums,
/// which take a term count instead of a tolerance.
pub(crate) const SETTLE_REL: f64 = 1e-12;

/// Diagnostics for a series summed to a fixed term count: `converged`
/// means the final three terms each sit below `SETTLE_REL * |sum|`.
pub(crate) fn diagnose_partial_sums(terms: &[f64]) -> SeriesResult {
    let sum: f64 = terms.iter().sum();
    let abs_sum: f64 = terms.iter().map(|t| t.abs()).sum();
    let last_term = terms.last().map_or(0.0, |t| t.abs());
    let tail_settled = terms.len() >= 3
        && terms[terms.len() - 3..]
            .iter()
            .all(|t| t.abs() <= SETTLE_REL * sum.abs());
    SeriesResult {
        value: sum,
        terms_used: terms.len(),
        last_term,
        converged: tail_settled,
        error_estimate: last_term.max(rounding_floor(abs_sum)),
    }
}

/// Accumulator implementing the shared termination policy: stop once
/// three consecutive terms fall below `tol * |partial sum|`, hard cap at
/// `max_terms`. The three-in-a-row rule keeps an accidental zero term
/// (parity) from being mistaken for convergence.
pub(crate) struct TailSum {
    tol: f64,
    max_terms: usize,
    sum: f64,
    abs_sum: f64,
    small_run: usize,
    terms_used: usize,
    last_term: f64,
    recent_max: f64,
}

impl TailSum {
    pub fn new(tol: f64, max_terms: usize) -> Self {
        TailSum {
            tol,
            max_terms,
            sum: 0.0,
            abs_sum: 0.0,
            small_run: 0,
            terms_used: 0,
            last_term: 0.0,
            recent_max: 0.0,
        }
    }

    /// Add one term; returns `true` when the caller should stop.
    pub fn push(&mut self, term: f64) -> bool {
        self.sum += term;
        self.abs_sum += term.abs();
        self.terms_used += 1;
        self.last_term = term.abs();
        self.recent_max = if self.small_run == 0 {
            term.abs()
        } else {
            self.recent_max.max(term.abs())
        };
        if term.abs() <= self.tol * self.sum.abs() {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run >= 3 || self.terms_used >= self.max_terms
    }

    pub fn finish(self) -> SeriesResult {
        let converged = self.small_run >= 3;
        let estimate = if converged {
            self.recent_max.max(rounding_floor(self.abs_sum))
        } else {
            // ran into the cap: the tail is unknown, report the last
            // term as a lower bound on what is missing
            self.last_term.max(rounding_floor(self.abs_sum))
        };
        SeriesResult {
            value: self.sum,
            terms_used: self.terms_used,
            last_term: self.last_term,
            converged,
            error_estimate: estimate,
        }
    }
}

//! Measure tuples, their `L^t` norms and the dominance order.
//!
//! A tuple `(m_1, …, m_N)` stands for the vector `(log m_1, …, log m_N)`.
//! Norms are evaluated in the log domain: `Σ (log m)^t = Σ exp(t · log log m)`
//! is summed with the largest exponent factored out.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factorization::Representation;

/// Default horizon of the numerical dominance scan.
pub const DEFAULT_T_MAX: f64 = 64.0;
/// Default grid step of the dominance and crossing scans.
pub const DEFAULT_SCAN_STEP: f64 = 1e-3;
/// Log-domain slack below which two power sums count as equal.
pub const DOMINANCE_TOL: f64 = 1e-12;

/// The exponent `t` of an `L^t` norm, with `∞` kept distinct from floats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinite,
}

impl Exponent {
    pub fn finite(t: f64) -> Result<Self> {
        if t.is_nan() || t <= 0.0 {
            return Err(Error::domain(format!("exponent t = {t} must be positive")));
        }
        if t.is_infinite() {
            return Ok(Exponent::Infinite);
        }
        Ok(Exponent::Finite(t))
    }

    fn validate(self) -> Result<Self> {
        match self {
            Exponent::Finite(t) => Exponent::finite(t),
            Exponent::Infinite => Ok(self),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(t) => write!(f, "{t}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Exponent::Infinite),
            text => {
                let t: f64 = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid exponent `{s}`")))?;
                Exponent::finite(t).map_err(|e| Error::Parse(e.to_string()))
            }
        }
    }
}

impl From<f64> for Exponent {
    /// Panics on nonpositive or NaN input; use [`Exponent::finite`] for checked construction.
    fn from(t: f64) -> Self {
        Exponent::finite(t).expect("exponent must be positive")
    }
}

/// Multiset of part measures, each `>= 2`, stored in descending order.
///
/// Ordering: shorter tuples first, then larger leading entries first. For
/// `7/30` this lists `(30), (15,2), (10,3), (7,5), (7,3,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MeasureTuple {
    entries: Vec<u64>,
}

impl MeasureTuple {
    pub fn new(mut entries: Vec<u64>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&m| m < 2) {
            return Err(Error::domain(format!("tuple entry {bad} is below 2")));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MeasureTuple { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_entry(&self) -> Option<u64> {
        self.entries.first().copied()
    }

    /// Product of the entries, or `None` on u128 overflow.
    pub fn product(&self) -> Option<u128> {
        self.entries
            .iter()
            .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128))
    }

    /// The vector fed to the norm: `log m` per entry.
    pub fn logs(&self) -> Vec<f64> {
        self.entries.iter().map(|&m| (m as f64).ln()).collect()
    }

    /// The tuple with one more entry `m >= 2`.
    pub(crate) fn with_entry(&self, m: u64) -> MeasureTuple {
        debug_assert!(m >= 2);
        let at = self.entries.partition_point(|&e| e > m);
        let mut entries = self.entries.clone();
        entries.insert(at, m);
        MeasureTuple { entries }
    }

    pub(crate) fn power_sum(&self) -> PowerSum {
        PowerSum::new(self)
    }
}

impl Ord for MeasureTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| other.entries.cmp(&self.entries))
    }
}

impl PartialOrd for MeasureTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MeasureTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.entries.iter().map(u64::to_string).collect();
        write!(f, "({})", text.join(","))
    }
}

/// `{ max(a,b) : a/b ∈ rep }`.
pub fn measure_tuple(rep: &Representation) -> MeasureTuple {
    let entries = rep.parts().iter().map(|p| p.measure()).collect();
    MeasureTuple::new(entries).expect("parts other than 1/1 have measure >= 2")
}

/// `t ↦ log Σ (log m)^t` for one tuple, with `log log m` precomputed.
#[derive(Debug, Clone)]
pub(crate) struct PowerSum {
    log_logs: Vec<f64>,
    max_log: f64,
}

impl PowerSum {
    fn new(x: &MeasureTuple) -> Self {
        let log_logs: Vec<f64> = x.entries.iter().map(|&m| (m as f64).ln().ln()).collect();
        let max_log = x.max_entry().map_or(0.0, |m| (m as f64).ln());
        PowerSum { log_logs, max_log }
    }

    /// `log Σ (log m)^t`; `-∞` for the empty tuple.
    pub(crate) fn log_at(&self, t: f64) -> f64 {
        let Some(&top) = self.log_logs.first() else {
            return f64::NEG_INFINITY;
        };
        // entries are descending, so the first exponent is the largest
        let shift = t * top;
        let sum: f64 = self.log_logs.iter().map(|&ll| (t * ll - shift).exp()).sum();
        shift + sum.ln()
    }

    pub(crate) fn norm_at(&self, t: f64) -> f64 {
        if self.log_logs.is_empty() {
            return 0.0;
        }
        (self.log_at(t) / t).exp()
    }

    pub(crate) fn max_log(&self) -> f64 {
        self.max_log
    }
}

/// `‖(log m_n)‖_t`; `log max m` at `t = ∞`; `0` for the empty tuple.
pub fn norm_t(x: &MeasureTuple, t: Exponent) -> Result<f64> {
    let t = t.validate()?;
    Ok(match t {
        _ if x.is_empty() => 0.0,
        Exponent::Infinite => x.power_sum().max_log(),
        Exponent::Finite(t) => x.power_sum().norm_at(t),
    })
}

/// `log Σ (log m_n)^t` for a nonempty tuple.
pub fn log_power_sum(x: &MeasureTuple, t: f64) -> Result<f64> {
    Exponent::finite(t)?;
    if x.is_empty() {
        return Err(Error::domain("log power sum of the empty tuple"));
    }
    Ok(x.power_sum().log_at(t))
}

/// Coordinatewise test: pad `x` with zeros to the length of `y` and compare
/// the descending entries. Sufficient for `x ≤ y`.
pub fn dominates_coordinatewise(x: &MeasureTuple, y: &MeasureTuple) -> bool {
    x.len() <= y.len() && x.entries.iter().zip(&y.entries).all(|(a, b)| a <= b)
}

/// A `t` beyond which `Σ(log y)^t − Σ(log x)^t` has the sign of its leading
/// coefficient, or `None` when the two tuples are equal.
///
/// Writing the difference as `Σ c_v v^t` over distinct `v = log m`, with the
/// top nonzero coefficient `c*` at `v*` and the next nonzero one at `v₂`,
/// the tail is controlled once `Σ|c| (v₂/v*)^t < |c*|`.
pub(crate) fn tail_certificate(x: &MeasureTuple, y: &MeasureTuple) -> Option<(f64, Ordering)> {
    let mut coeffs: BTreeMap<u64, i64> = BTreeMap::new();
    for &m in &y.entries {
        *coeffs.entry(m).or_default() += 1;
    }
    for &m in &x.entries {
        *coeffs.entry(m).or_default() -= 1;
    }
    let mut nonzero = coeffs.into_iter().rev().filter(|&(_, c)| c != 0);
    let (top, lead) = nonzero.next()?;
    let sign = lead.cmp(&0);
    let rest: Vec<(u64, i64)> = nonzero.collect();
    let Some(&(second, _)) = rest.first() else {
        return Some((0.0, sign));
    };
    let total: i64 = rest.iter().map(|(_, c)| c.abs()).sum();
    let (v_top, v_second) = ((top as f64).ln(), (second as f64).ln());
    let ratio = v_top.ln() - v_second.ln();
    let t = ((total as f64) / lead.abs() as f64).ln() / ratio;
    // small margin absorbs rounding in the logs
    Some((t.max(0.0) * (1.0 + 1e-9) + 1e-9, sign))
}

/// Settings of the numerical dominance check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominanceConfig {
    pub t_max: f64,
    pub scan_step: f64,
}

impl Default for DominanceConfig {
    fn default() -> Self {
        DominanceConfig {
            t_max: DEFAULT_T_MAX,
            scan_step: DEFAULT_SCAN_STEP,
        }
    }
}

/// Whether `‖x‖_t ≤ ‖y‖_t` for every `t > 0`, with default settings.
pub fn dominates(x: &MeasureTuple, y: &MeasureTuple) -> bool {
    dominates_with(x, y, &DominanceConfig::default())
}

pub fn dominates_with(x: &MeasureTuple, y: &MeasureTuple, cfg: &DominanceConfig) -> bool {
    if x == y || dominates_coordinatewise(x, y) {
        return true;
    }
    // t → 0⁺: Σ(log m)^t → N
    if x.len() > y.len() {
        return false;
    }
    // t = 1: Σ log m = log ∏ m
    match (x.product(), y.product()) {
        (Some(px), Some(py)) if px > py => return false,
        (None, Some(_)) => return false,
        _ => {}
    }
    // t → ∞: descending lexicographic order decides
    if x.entries > y.entries {
        return false;
    }
    let (px, py) = (x.power_sum(), y.power_sum());
    if x.len() == y.len() {
        // first-order term at t → 0⁺ is t · Σ log log m
        let first_x: f64 = px.log_logs.iter().sum();
        let first_y: f64 = py.log_logs.iter().sum();
        if first_x > first_y + DOMINANCE_TOL {
            return false;
        }
    }
    let horizon = match tail_certificate(x, y) {
        Some((t, _)) => t.min(cfg.t_max),
        None => return true,
    };
    let steps = (horizon / cfg.scan_step).ceil() as usize;
    (1..=steps).all(|k| {
        let t = (k as f64 * cfg.scan_step).min(horizon);
        px.log_at(t) - py.log_at(t) <= DOMINANCE_TOL
    })
}

/// Drops every tuple strictly dominated by another input tuple. The result
/// is deduplicated and sorted by the [`MeasureTuple`] order.
pub fn prune_minimal(tuples: &[MeasureTuple]) -> Result<Vec<MeasureTuple>> {
    prune_minimal_with(tuples, &DominanceConfig::default())
}

pub fn prune_minimal_with(tuples: &[MeasureTuple], cfg: &DominanceConfig) -> Result<Vec<MeasureTuple>> {
    if tuples.is_empty() {
        return Err(Error::domain("cannot prune an empty tuple set"));
    }
    let mut distinct = tuples.to_vec();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    // Coordinatewise dominance forces (len, product) to decrease, so after
    // sorting every coordinatewise dominator precedes what it dominates.
    let key = |x: &MeasureTuple| (x.len(), x.product().unwrap_or(u128::MAX));
    distinct.sort_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.cmp(b)));
    let mut survivors: Vec<MeasureTuple> = Vec::new();
    for y in distinct {
        if !survivors.iter().any(|x| dominates_coordinatewise(x, &y)) {
            survivors.push(y);
        }
    }
    // Anything dominated by a dropped tuple is dominated by a survivor too.
    let survivors_ref = &survivors;
    let mut minimal: Vec<MeasureTuple> = survivors
        .par_iter()
        .enumerate()
        .filter(|&(i, y)| {
            !survivors_ref
                .iter()
                .enumerate()
                .any(|(j, x)| i != j && dominates_with(x, y, cfg))
        })
        .map(|(_, y)| y.clone())
        .collect();
    minimal.sort();
    Ok(minimal)
}

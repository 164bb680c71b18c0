//! The envelope `μ_α(t) = min ‖x‖_t` over minimal tuples, its piecewise
//! profile on `(0, T]`, and pairwise crossing search.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::rc::Rc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factorization::{divisors, DEFAULT_ENUMERATION_CAP};
use crate::rational::{mahler_measure, prime_factors, ReducedRational};
use crate::tuples::{
    prune_minimal_with, tail_certificate, DominanceConfig, Exponent, MeasureTuple,
    PowerSum, DEFAULT_SCAN_STEP,
};

pub const DEFAULT_BISECT_TOL: f64 = 1e-12;
/// Lower cutoff of the crossing search; `μ_α` is constant on `(0, 1]`.
pub const DEFAULT_EPSILON: f64 = 1e-3;
/// Crossings closer than this are treated as one breakpoint.
pub const BREAKPOINT_MERGE_TOL: f64 = 1e-9;
/// `|Σx^t − Σy^t|` below this inside a piece is reported as a near-degeneracy.
pub const NEAR_DEGENERACY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeConfig {
    pub scan_step: f64,
    pub bisect_tol: f64,
    pub epsilon: f64,
    pub enumeration_cap: usize,
    pub dominance: DominanceConfig,
}

impl Default for EnvelopeConfig {
    fn default() -> Self {
        EnvelopeConfig {
            scan_step: DEFAULT_SCAN_STEP,
            bisect_tol: DEFAULT_BISECT_TOL,
            epsilon: DEFAULT_EPSILON,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            dominance: DominanceConfig::default(),
        }
    }
}

impl EnvelopeConfig {
    fn validate(&self) -> Result<()> {
        if !(self.scan_step > 0.0 && self.scan_step.is_finite()) {
            return Err(Error::domain("scan step must be positive"));
        }
        if !(self.bisect_tol > 0.0) {
            return Err(Error::domain("bisection tolerance must be positive"));
        }
        if !(self.epsilon > 0.0) {
            return Err(Error::domain("epsilon must be positive"));
        }
        Ok(())
    }
}

/// `|Σ (log x)^t − Σ (log y)^t|` from the two log power sums.
fn linear_gap(lx: f64, ly: f64) -> f64 {
    if lx == f64::NEG_INFINITY && ly == f64::NEG_INFINITY {
        return 0.0;
    }
    let (hi, lo) = if lx >= ly { (lx, ly) } else { (ly, lx) };
    hi.exp() * (-(lo - hi).exp_m1())
}

/// Memoized search for the minimal tuples of `r/s` over divisor pairs.
///
/// Every representation of `r'/s'` has a part whose numerator holds the
/// smallest prime of `r'` (of `s'` when `r' = 1`). Fixing that part `a/b`
/// leaves a representation of `(r'/a)/(s'/b)`. Adding the same entry to two
/// tuples preserves dominance, so every subproblem is pruned before it is
/// extended without losing a minimal tuple.
struct MinimalSearch<'a> {
    numerator: u64,
    denominator: u64,
    divs_r: Vec<u64>,
    divs_s: Vec<u64>,
    primes_r: Vec<u64>,
    primes_s: Vec<u64>,
    config: &'a EnvelopeConfig,
    memo: HashMap<(u64, u64), Rc<Vec<MeasureTuple>>>,
}

impl<'a> MinimalSearch<'a> {
    fn new(alpha: &ReducedRational, config: &'a EnvelopeConfig) -> Self {
        let (r, s) = (alpha.abs_numerator(), alpha.denominator());
        let primes = |n: u64| prime_factors(n).into_iter().map(|(p, _)| p).collect();
        MinimalSearch {
            numerator: r,
            denominator: s,
            divs_r: divisors(r),
            divs_s: divisors(s),
            primes_r: primes(r),
            primes_s: primes(s),
            config,
            memo: HashMap::new(),
        }
    }

    fn run(mut self) -> Result<Vec<MeasureTuple>> {
        let (r, s) = (self.numerator, self.denominator);
        Ok(self.solve(r, s)?.as_ref().clone())
    }

    fn solve(&mut self, r: u64, s: u64) -> Result<Rc<Vec<MeasureTuple>>> {
        if r == 1 && s == 1 {
            return Ok(Rc::new(vec![MeasureTuple::default()]));
        }
        if let Some(hit) = self.memo.get(&(r, s)) {
            return Ok(hit.clone());
        }
        let (on_numerator, p) = if r > 1 {
            (true, *self.primes_r.iter().find(|&&p| r.is_multiple_of(p)).expect("r > 1 has a prime factor"))
        } else {
            (false, *self.primes_s.iter().find(|&&p| s.is_multiple_of(p)).expect("s > 1 has a prime factor"))
        };
        let numerators: Vec<u64> = self
            .divs_r
            .iter()
            .copied()
            .filter(|&a| r.is_multiple_of(a) && (!on_numerator || a % p == 0))
            .collect();
        let denominators: Vec<u64> = self
            .divs_s
            .iter()
            .copied()
            .filter(|&b| s.is_multiple_of(b) && (on_numerator || b % p == 0))
            .collect();
        let cap = self.config.enumeration_cap;
        let mut candidates = Vec::new();
        for &a in &numerators {
            for &b in &denominators {
                let rest = self.solve(r / a, s / b)?;
                let m = a.max(b);
                candidates.extend(rest.iter().map(|x| x.with_entry(m)));
                if candidates.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
            }
        }
        let minimal = Rc::new(prune_minimal_with(&candidates, &self.config.dominance)?);
        self.memo.insert((r, s), minimal.clone());
        Ok(minimal)
    }
}

/// The minimal tuples of one rational and the envelope of their norms.
#[derive(Debug, Clone)]
pub struct Envelope {
    alpha: ReducedRational,
    minimal: Vec<MeasureTuple>,
    sums: Vec<PowerSum>,
    config: EnvelopeConfig,
}

impl Envelope {
    pub fn new(alpha: ReducedRational) -> Result<Self> {
        Self::with_config(alpha, EnvelopeConfig::default())
    }

    pub fn with_config(alpha: ReducedRational, config: EnvelopeConfig) -> Result<Self> {
        config.validate()?;
        let minimal = MinimalSearch::new(&alpha, &config).run()?;
        Ok(Self::from_minimal(alpha, minimal, config))
    }

    /// Builds an envelope from an already pruned tuple set.
    pub fn from_minimal(alpha: ReducedRational, minimal: Vec<MeasureTuple>, config: EnvelopeConfig) -> Self {
        let sums = minimal.iter().map(MeasureTuple::power_sum).collect();
        Envelope { alpha, minimal, sums, config }
    }

    pub fn alpha(&self) -> ReducedRational {
        self.alpha
    }

    pub fn minimal_tuples(&self) -> &[MeasureTuple] {
        &self.minimal
    }

    pub fn config(&self) -> &EnvelopeConfig {
        &self.config
    }

    /// Always true: only rational parts are searched.
    pub fn assumes_conjecture(&self) -> bool {
        true
    }

    /// Norm of every minimal tuple at `t`, in tuple order.
    pub fn norms(&self, t: Exponent) -> Result<Vec<f64>> {
        let t = match t {
            Exponent::Finite(t) => Exponent::finite(t)?,
            e => e,
        };
        Ok(self
            .sums
            .iter()
            .map(|s| match t {
                Exponent::Infinite => s.max_log(),
                Exponent::Finite(t) => s.norm_at(t),
            })
            .collect())
    }

    /// `μ_α(t)`.
    pub fn measure(&self, t: Exponent) -> Result<f64> {
        Ok(self.norms(t)?.into_iter().fold(f64::INFINITY, f64::min))
    }

    /// Index of the smallest power sum at finite `t`; ties go to the earlier tuple.
    fn argmin(&self, t: f64) -> usize {
        let mut best = 0;
        let mut best_value = f64::INFINITY;
        for (i, s) in self.sums.iter().enumerate() {
            let v = s.log_at(t);
            if v < best_value {
                best = i;
                best_value = v;
            }
        }
        best
    }

    pub fn attaining(&self, t: Exponent, tol: f64) -> Result<Vec<MeasureTuple>> {
        if !(tol > 0.0) {
            return Err(Error::domain("tolerance must be positive"));
        }
        let norms = self.norms(t)?;
        let min = norms.iter().copied().fold(f64::INFINITY, f64::min);
        Ok(self
            .minimal
            .iter()
            .zip(norms)
            .filter(|(_, n)| *n - min <= tol)
            .map(|(x, _)| x.clone())
            .collect())
    }

    /// Piecewise description of `μ_α` on `(0, T]`.
    pub fn profile(&self, t_max: f64) -> Result<EnvelopeProfile> {
        if !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::domain("T must be a positive real"));
        }
        let single = |active: MeasureTuple| EnvelopeProfile {
            alpha: self.alpha,
            t_max,
            pieces: vec![Piece { t_lo: 0.0, t_hi: t_max, active }],
            exceptional_points: Vec::new(),
            near_degeneracies: Vec::new(),
            assumes_conjecture: true,
        };
        if self.minimal.len() == 1 {
            return Ok(single(self.minimal[0].clone()));
        }
        let cfg = &self.config;
        let lo = cfg.epsilon.min(t_max);
        let pairs: Vec<(usize, usize)> = (0..self.minimal.len())
            .flat_map(|i| (i + 1..self.minimal.len()).map(move |j| (i, j)))
            .collect();
        let mut crossings: Vec<(f64, usize, usize, f64)> = if lo < t_max {
            pairs
                .par_iter()
                .flat_map_iter(|&(i, j)| {
                    crossings_of(&self.minimal[i], &self.minimal[j], &self.sums[i], &self.sums[j], lo, t_max, cfg.scan_step, cfg.bisect_tol)
                        .into_iter()
                        .map(move |(t, residual)| (t, i, j, residual))
                })
                .collect()
        } else {
            Vec::new()
        };
        crossings.retain(|c| c.0 < t_max);
        crossings.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));

        let mut clusters: Vec<Vec<(f64, usize, usize, f64)>> = Vec::new();
        for c in crossings {
            match clusters.last_mut() {
                Some(group) if c.0 - group.last().unwrap().0 <= BREAKPOINT_MERGE_TOL => group.push(c),
                _ => clusters.push(vec![c]),
            }
        }
        let representative = |group: &[(f64, usize, usize, f64)]| group[group.len() / 2].0;
        let mut bounds = vec![0.0];
        bounds.extend(clusters.iter().map(|g| representative(g)));
        bounds.push(t_max);
        let actives: Vec<usize> = bounds
            .windows(2)
            .map(|w| self.argmin(0.5 * (w[0] + w[1])))
            .collect();

        let mut pieces: Vec<Piece> = Vec::new();
        let mut exceptional_points = Vec::new();
        let mut current = (0.0, actives[0]);
        for (k, group) in clusters.iter().enumerate() {
            let (left, right) = (current.1, actives[k + 1]);
            if left == right {
                continue;
            }
            let (a, b) = (left.min(right), left.max(right));
            let (t, residual) = match group.iter().find(|c| c.1 == a && c.2 == b) {
                Some(c) => (c.0, c.3),
                None => {
                    let t = representative(group);
                    (t, linear_gap(self.sums[left].log_at(t), self.sums[right].log_at(t)))
                }
            };
            pieces.push(Piece { t_lo: current.0, t_hi: t, active: self.minimal[left].clone() });
            exceptional_points.push(CrossingPoint {
                t,
                left_tuple: self.minimal[left].clone(),
                right_tuple: self.minimal[right].clone(),
                residual,
            });
            current = (t, right);
        }
        pieces.push(Piece { t_lo: current.0, t_hi: t_max, active: self.minimal[current.1].clone() });

        let near_degeneracies = self.near_degeneracies(&pieces, lo);
        Ok(EnvelopeProfile {
            alpha: self.alpha,
            t_max,
            pieces,
            exceptional_points,
            near_degeneracies,
            assumes_conjecture: true,
        })
    }

    /// Grid points inside pieces where another tuple comes within
    /// [`NEAR_DEGENERACY_TOL`] of the active one without a sign change.
    fn near_degeneracies(&self, pieces: &[Piece], lo: f64) -> Vec<f64> {
        let step = self.config.scan_step;
        let mut found = Vec::new();
        for piece in pieces {
            let active = self.minimal.iter().position(|x| *x == piece.active).expect("active tuple is minimal");
            let start = piece.t_lo.max(lo) + step;
            let end = piece.t_hi - step;
            let mut k = 0usize;
            loop {
                let t = start + k as f64 * step;
                if t >= end {
                    break;
                }
                let la = self.sums[active].log_at(t);
                let close = self
                    .sums
                    .iter()
                    .enumerate()
                    .any(|(i, s)| i != active && linear_gap(la, s.log_at(t)) < NEAR_DEGENERACY_TOL);
                if close {
                    found.push(t);
                }
                k += 1;
            }
        }
        found
    }
}

/// One interval of the profile with the tuple attaining the minimum on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub t_lo: f64,
    pub t_hi: f64,
    pub active: MeasureTuple,
}

/// A root of `Σ (log x)^t − Σ (log y)^t`. `left_tuple` has the smaller norm
/// just below `t`, `right_tuple` just above.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossingPoint {
    pub t: f64,
    pub left_tuple: MeasureTuple,
    pub right_tuple: MeasureTuple,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeProfile {
    pub alpha: ReducedRational,
    pub t_max: f64,
    /// `(0, b₁], [b₁, b₂], …, [b_k, T]`; the first `t_lo` is the open end `0`.
    pub pieces: Vec<Piece>,
    /// Points where the active tuple changes.
    pub exceptional_points: Vec<CrossingPoint>,
    /// Grid points where a non-active tuple nearly touches the envelope.
    pub near_degeneracies: Vec<f64>,
    pub assumes_conjecture: bool,
}

/// Sign scan of `log Σx^t − log Σy^t` refined by bisection. Returns `(t, |F(t)|)`.
#[allow(clippy::too_many_arguments)]
fn crossings_of(
    x: &MeasureTuple,
    y: &MeasureTuple,
    sx: &PowerSum,
    sy: &PowerSum,
    t_lo: f64,
    t_hi: f64,
    step: f64,
    tol: f64,
) -> Vec<(f64, f64)> {
    let g = |t: f64| sx.log_at(t) - sy.log_at(t);
    // past the tail certificate the sign is fixed
    let end = match tail_certificate(x, y) {
        Some((tail, _)) => t_hi.min(tail.max(t_lo)),
        None => return Vec::new(),
    };
    let steps = ((end - t_lo) / step).ceil().max(1.0) as usize;
    let mut roots = Vec::new();
    let mut prev = (t_lo, g(t_lo));
    if prev.1 == 0.0 {
        roots.push((t_lo, 0.0));
    }
    let mut pending_zero: Option<f64> = None;
    for k in 1..=steps {
        let t = if k == steps { end } else { t_lo + k as f64 * step };
        let v = g(t);
        if v == 0.0 {
            pending_zero.get_or_insert(t);
            continue;
        }
        if prev.1 != 0.0 && (v > 0.0) != (prev.1 > 0.0) {
            let root = match pending_zero {
                Some(z) => z,
                None => bisect(&g, prev.0, t, prev.1, tol),
            };
            roots.push((root, linear_gap(sx.log_at(root), sy.log_at(root))));
        }
        pending_zero = None;
        prev = (t, v);
    }
    if let Some(z) = pending_zero {
        roots.push((z, 0.0));
    }
    roots
}

fn bisect(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, g_lo: f64, tol: f64) -> f64 {
    let lo_positive = g_lo > 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g(mid);
        if v == 0.0 {
            return mid;
        }
        if (v > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Roots of `Σ (log x)^t − Σ (log y)^t` on `[t_lo, t_hi]`, with default
/// scan step `10⁻³` and bisection tolerance `10⁻¹²`.
pub fn find_crossings(x: &MeasureTuple, y: &MeasureTuple, t_lo: f64, t_hi: f64) -> Result<Vec<CrossingPoint>> {
    find_crossings_with(x, y, t_lo, t_hi, DEFAULT_SCAN_STEP, DEFAULT_BISECT_TOL)
}

pub fn find_crossings_with(
    x: &MeasureTuple,
    y: &MeasureTuple,
    t_lo: f64,
    t_hi: f64,
    step: f64,
    tol: f64,
) -> Result<Vec<CrossingPoint>> {
    if x == y {
        return Err(Error::domain("identical tuples define the same function"));
    }
    if !(t_lo > 0.0 && t_lo < t_hi && t_hi.is_finite()) {
        return Err(Error::domain("need 0 < t_lo < t_hi < ∞"));
    }
    if !(step > 0.0 && tol > 0.0) {
        return Err(Error::domain("scan step and tolerance must be positive"));
    }
    let (sx, sy) = (x.power_sum(), y.power_sum());
    let crossings = crossings_of(x, y, &sx, &sy, t_lo, t_hi, step, tol);
    Ok(crossings
        .into_iter()
        .map(|(t, residual)| {
            // the left tuple is the smaller one just below the root
            let below = t - 0.5 * step.min(t - t_lo);
            let x_left = if below < t {
                sx.log_at(below) < sy.log_at(below)
            } else {
                let above = t + 0.5 * step;
                sx.log_at(above) > sy.log_at(above)
            };
            let (left_tuple, right_tuple) = if x_left { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
            CrossingPoint { t, left_tuple, right_tuple, residual }
        })
        .collect())
}

/// `M_t(α)` under the rational-parts assumption.
///
/// Equal to the minimum over the minimal tuples, but computed at the single
/// exponent `t` by a memoized search over divisor pairs: fixing the part
/// that holds the smallest remaining prime, `M_t(r/s)^t` is the minimum of
/// `(log max(a, b))^t + M_t((r/a)/(s/b))^t`. This avoids building the
/// minimal set, which is large for highly composite inputs.
pub fn mt_measure(alpha: &ReducedRational, t: Exponent) -> Result<f64> {
    let t = match t {
        Exponent::Finite(t) => Exponent::finite(t)?,
        e => e,
    };
    if alpha.is_torsion() {
        return Ok(0.0);
    }
    let mut search = PointSearch::new(alpha, t);
    let best = search.solve(alpha.abs_numerator(), alpha.denominator());
    Ok(match t {
        Exponent::Infinite => best,
        Exponent::Finite(t) => (best / t).exp(),
    })
}

/// Single-exponent search. Values are `log Σ (log m)^t` for finite `t` and
/// `max log m` at `t = ∞`.
struct PointSearch {
    t: Exponent,
    divs_r: Vec<u64>,
    divs_s: Vec<u64>,
    primes_r: Vec<u64>,
    primes_s: Vec<u64>,
    memo: HashMap<(u64, u64), f64>,
}

impl PointSearch {
    fn new(alpha: &ReducedRational, t: Exponent) -> Self {
        let (r, s) = (alpha.abs_numerator(), alpha.denominator());
        let primes = |n: u64| prime_factors(n).into_iter().map(|(p, _)| p).collect();
        PointSearch {
            t,
            divs_r: divisors(r),
            divs_s: divisors(s),
            primes_r: primes(r),
            primes_s: primes(s),
            memo: HashMap::new(),
        }
    }

    fn combine(&self, m: u64, rest: f64) -> f64 {
        let log_m = (m as f64).ln();
        match self.t {
            Exponent::Infinite => log_m.max(rest),
            Exponent::Finite(t) => {
                let head = t * log_m.ln();
                if rest == f64::NEG_INFINITY {
                    return head;
                }
                let (hi, lo) = if head >= rest { (head, rest) } else { (rest, head) };
                hi + (lo - hi).exp().ln_1p()
            }
        }
    }

    fn solve(&mut self, r: u64, s: u64) -> f64 {
        if r == 1 && s == 1 {
            return match self.t {
                Exponent::Infinite => 0.0,
                Exponent::Finite(_) => f64::NEG_INFINITY,
            };
        }
        if let Some(&hit) = self.memo.get(&(r, s)) {
            return hit;
        }
        let (on_numerator, p) = if r > 1 {
            (true, *self.primes_r.iter().find(|&&p| r.is_multiple_of(p)).expect("r > 1 has a prime factor"))
        } else {
            (false, *self.primes_s.iter().find(|&&p| s.is_multiple_of(p)).expect("s > 1 has a prime factor"))
        };
        let mut best = f64::INFINITY;
        for i in 0..self.divs_r.len() {
            let a = self.divs_r[i];
            if a > r {
                break;
            }
            if !r.is_multiple_of(a) || (on_numerator && !a.is_multiple_of(p)) {
                continue;
            }
            for j in 0..self.divs_s.len() {
                let b = self.divs_s[j];
                if b > s {
                    break;
                }
                if !s.is_multiple_of(b) || (!on_numerator && !b.is_multiple_of(p)) {
                    continue;
                }
                let rest = self.solve(r / a, s / b);
                best = best.min(self.combine(a.max(b), rest));
            }
        }
        self.memo.insert((r, s), best);
        best
    }

    /// Tuples of `r/s` whose power sum, scaled by `exp(-total)`, is within
    /// `slack` of the subproblem minimum. Finite `t` only.
    fn collect_near(
        &mut self,
        r: u64,
        s: u64,
        total: f64,
        slack: f64,
        memo: &mut HashMap<(u64, u64), Rc<Vec<(f64, MeasureTuple)>>>,
    ) -> Rc<Vec<(f64, MeasureTuple)>> {
        let Exponent::Finite(t) = self.t else {
            unreachable!("collect_near runs at finite t")
        };
        if r == 1 && s == 1 {
            return Rc::new(vec![(0.0, MeasureTuple::default())]);
        }
        if let Some(hit) = memo.get(&(r, s)) {
            return hit.clone();
        }
        let bound = (self.solve(r, s) - total).exp() + slack;
        let (on_numerator, p) = if r > 1 {
            (true, *self.primes_r.iter().find(|&&p| r.is_multiple_of(p)).expect("prime factor"))
        } else {
            (false, *self.primes_s.iter().find(|&&p| s.is_multiple_of(p)).expect("prime factor"))
        };
        let numerators: Vec<u64> = self.divs_r.iter().copied().filter(|&a| r.is_multiple_of(a) && (!on_numerator || a % p == 0)).collect();
        let denominators: Vec<u64> = self.divs_s.iter().copied().filter(|&b| s.is_multiple_of(b) && (on_numerator || b % p == 0)).collect();
        let mut found: Vec<(f64, MeasureTuple)> = Vec::new();
        for &a in &numerators {
            for &b in &denominators {
                let m = a.max(b);
                let head = (t * (m as f64).ln().ln() - total).exp();
                if head > bound {
                    continue;
                }
                let rest = self.collect_near(r / a, s / b, total, slack, memo);
                for (value, x) in rest.iter() {
                    if head + value <= bound {
                        found.push((head + value, x.with_entry(m)));
                    }
                }
            }
        }
        found.sort_by(|a, b| a.1.cmp(&b.1));
        found.dedup_by(|a, b| a.1 == b.1);
        let found = Rc::new(found);
        memo.insert((r, s), found.clone());
        found
    }
}

/// Minimal tuples whose norm at `t` is within `tol` of `M_t(α)`.
///
/// For finite `t` a tuple within the tolerance has every sub-tuple within
/// the same power-sum slack of its own subproblem minimum, so the point
/// search collects only those and prunes the survivors.
pub fn attaining_tuples(alpha: &ReducedRational, t: Exponent, tol: f64) -> Result<Vec<MeasureTuple>> {
    if !(tol > 0.0) {
        return Err(Error::domain("tolerance must be positive"));
    }
    let t_value = match t {
        Exponent::Finite(t) => Exponent::finite(t).map(|_| t)?,
        Exponent::Infinite => return Envelope::new(*alpha)?.attaining(t, tol),
    };
    if alpha.is_torsion() {
        return Ok(vec![MeasureTuple::default()]);
    }
    let (r, s) = (alpha.abs_numerator(), alpha.denominator());
    let mut search = PointSearch::new(alpha, t);
    let total = search.solve(r, s);
    let min = (total / t_value).exp();
    let slack = ((min + tol) / min).powf(t_value) - 1.0;
    let mut memo = HashMap::new();
    let near = search.collect_near(r, s, total, slack, &mut memo);
    let tuples: Vec<MeasureTuple> = near
        .iter()
        .filter(|(_, x)| x.power_sum().norm_at(t_value) - min <= tol)
        .map(|(_, x)| x.clone())
        .collect();
    prune_minimal_with(&tuples, &DominanceConfig::default())
}

pub fn profile(alpha: &ReducedRational, t_max: f64) -> Result<EnvelopeProfile> {
    if !(t_max > 0.0) {
        return Err(Error::domain("T must be positive"));
    }
    Envelope::new(*alpha)?.profile(t_max)
}

/// `log n` for `t ≤ 1`, else `(Σ (log p)^t)^(1/t)` over the prime factors
/// of `n` with multiplicity.
pub fn integer_closed_form(n: u64, t: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("closed form needs n >= 2"));
    }
    if !(t > 0.0) {
        return Err(Error::domain("t must be positive"));
    }
    if t <= 1.0 {
        return Ok((n as f64).ln());
    }
    let sum: f64 = prime_factors(n)
        .into_iter()
        .map(|(p, e)| e as f64 * (p as f64).ln().powf(t))
        .sum();
    Ok(sum.powf(1.0 / t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomKind {
    /// `M_t(αβ)^t ≤ M_t(α)^t + M_t(β)^t`
    TriangleInequality,
    /// `M_s(α) ≥ M_t(α)` for `s < t`
    Monotonicity,
    /// `M_t(α) ≤ M(α)`
    BoundedByMahler,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomCheck {
    pub kind: AxiomKind,
    pub alpha: ReducedRational,
    pub beta: Option<ReducedRational>,
    /// Slack of the inequality, `rhs − lhs`; negative beyond `tol` means failure.
    pub margin: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn worst_margin(&self, kind: AxiomKind) -> Option<f64> {
        self.checks
            .iter()
            .filter(|c| c.kind == kind)
            .map(|c| c.margin)
            .min_by(|a, b| a.total_cmp(b))
    }
}

/// Checks the t-triangle inequality, monotonicity in `t` and the bound by
/// the classical measure for each pair. Failures are report entries.
pub fn check_axioms(pairs: &[(ReducedRational, ReducedRational)], t: f64, tol: f64) -> Result<AxiomReport> {
    if !(t > 0.0) {
        return Err(Error::domain("t must be positive"));
    }
    let samples = [0.25, 0.5, 0.75];
    let per_pair: Vec<Result<Vec<AxiomCheck>>> = pairs
        .par_iter()
        .map(|&(alpha, beta)| {
            let product = alpha.mul(&beta)?;
            let at = Exponent::Finite(t);
            let (ma, mb, mp) = (mt_measure(&alpha, at)?, mt_measure(&beta, at)?, mt_measure(&product, at)?);
            let mut checks = Vec::new();
            let margin = ma.powf(t) + mb.powf(t) - mp.powf(t);
            checks.push(AxiomCheck {
                kind: AxiomKind::TriangleInequality,
                alpha,
                beta: Some(beta),
                margin,
                passed: margin >= -tol,
            });
            for (x, m) in [(alpha, ma), (beta, mb), (product, mp)] {
                for f in samples {
                    let margin = mt_measure(&x, Exponent::Finite(t * f))? - m;
                    checks.push(AxiomCheck {
                        kind: AxiomKind::Monotonicity,
                        alpha: x,
                        beta: None,
                        margin,
                        passed: margin >= -tol,
                    });
                }
                let margin = mahler_measure(&x) - m;
                checks.push(AxiomCheck {
                    kind: AxiomKind::BoundedByMahler,
                    alpha: x,
                    beta: None,
                    margin,
                    passed: margin >= -tol,
                });
            }
            Ok(checks)
        })
        .collect();
    let mut report = AxiomReport::default();
    for checks in per_pair {
        report.checks.extend(checks?);
    }
    Ok(report)
}

//! Representations of a rational as a product of coprime rational parts.
//!
//! For `|α| = r/s` every representation is obtained from a multiplicative
//! partition `A` of `r`, a multiplicative partition `B` of `s`, and a partial
//! matching between their blocks. Matched blocks become `a/b`, unmatched
//! ones become `a/1` or `1/b`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{gcd, mahler_measure, prime_factors, ReducedRational};

/// Default maximum number of distinct representations enumerated per input.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// One factor `a/b` of a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    a: u64,
    b: u64,
}

impl Part {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::domain("part sides must be positive"));
        }
        if a == 1 && b == 1 {
            return Err(Error::domain("part 1/1 is not allowed"));
        }
        if gcd(a as u128, b as u128) != 1 {
            return Err(Error::domain(format!("part {a}/{b} is not reduced")));
        }
        Ok(Part { a, b })
    }

    pub fn numerator(&self) -> u64 {
        self.a
    }

    pub fn denominator(&self) -> u64 {
        self.b
    }

    /// Non-logarithmic Mahler measure of the part.
    pub fn measure(&self) -> u64 {
        self.a.max(self.b)
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

/// A multiset of parts, kept sorted so that equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Representation {
    parts: Vec<Part>,
}

impl Representation {
    pub fn new(mut parts: Vec<Part>) -> Self {
        parts.sort_unstable();
        Representation { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(∏a, ∏b)` in wide arithmetic.
    pub fn products(&self) -> (u128, u128) {
        self.parts.iter().fold((1u128, 1u128), |(r, s), p| {
            (r * p.a as u128, s * p.b as u128)
        })
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "1");
        }
        let text: Vec<String> = self.parts.iter().map(Part::to_string).collect();
        write!(f, "{}", text.join(" * "))
    }
}

/// Sorted list of the divisors of `n`.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in prime_factors(n) {
        let current = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// All unordered factorizations of `n` into factors `>= 2`, each sorted
/// ascending. `1` has exactly one: the empty product.
pub fn multiplicative_partitions(n: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 {
        return Err(Error::domain("multiplicative partitions need n >= 1"));
    }
    let divs = divisors(n);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    partitions_into(n, 2, &divs, &mut prefix, &mut out);
    Ok(out)
}

fn partitions_into(n: u64, min: u64, divs: &[u64], prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if n == 1 {
        out.push(prefix.clone());
        return;
    }
    let start = divs.partition_point(|&d| d < min);
    for &d in &divs[start..] {
        if d > n / d {
            break;
        }
        if n.is_multiple_of(d) {
            prefix.push(d);
            partitions_into(n / d, d, divs, prefix, out);
            prefix.pop();
        }
    }
    if n >= min {
        prefix.push(n);
        out.push(prefix.clone());
        prefix.pop();
    }
}

struct Enumerator<'a> {
    numerators: &'a [u64],
    denominators: &'a [u64],
    used: Vec<bool>,
    current: Vec<Part>,
    cap: usize,
    out: &'a mut BTreeSet<Representation>,
}

impl Enumerator<'_> {
    fn run(&mut self, i: usize) -> Result<()> {
        if i == self.numerators.len() {
            let mut parts = self.current.clone();
            for (j, &b) in self.denominators.iter().enumerate() {
                if !self.used[j] {
                    parts.push(Part { a: 1, b });
                }
            }
            self.out.insert(Representation::new(parts));
            if self.out.len() > self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            return Ok(());
        }
        let a = self.numerators[i];
        self.current.push(Part { a, b: 1 });
        self.run(i + 1)?;
        self.current.pop();
        for j in 0..self.denominators.len() {
            // equal blocks give identical multisets; try only the first free one
            if self.used[j] || (j > 0 && self.denominators[j - 1] == self.denominators[j] && !self.used[j - 1]) {
                continue;
            }
            self.used[j] = true;
            self.current.push(Part { a, b: self.denominators[j] });
            self.run(i + 1)?;
            self.current.pop();
            self.used[j] = false;
        }
        Ok(())
    }
}

fn representations_with(alpha: &ReducedRational, cap: usize) -> Result<BTreeSet<Representation>> {
    let mut out = BTreeSet::new();
    let a_parts = multiplicative_partitions(alpha.abs_numerator())?;
    let b_parts = multiplicative_partitions(alpha.denominator())?;
    for a in &a_parts {
        for b in &b_parts {
            let mut e = Enumerator {
                numerators: a,
                denominators: b,
                used: vec![false; b.len()],
                current: Vec::with_capacity(a.len() + b.len()),
                cap,
                out: &mut out,
            };
            e.run(0)?;
        }
    }
    Ok(out)
}

/// Every distinct representation of `|α|`, using the default cap.
pub fn enumerate_representations(alpha: &ReducedRational) -> Result<Vec<Representation>> {
    enumerate_representations_capped(alpha, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_representations_capped(
    alpha: &ReducedRational,
    cap: usize,
) -> Result<Vec<Representation>> {
    Ok(representations_with(alpha, cap)?
        .into_iter()
        .collect())
}

/// `⌊(M(α)/log 2)^T + 1⌋`, a bound on the number of nontrivial parts of any
/// representation that can attain the minimum for some `t <= T`.
pub fn part_count_bound(alpha: &ReducedRational, t_max: f64) -> Result<u64> {
    if alpha.is_torsion() {
        return Err(Error::domain("part count bound is undefined for ±1"));
    }
    if !(t_max > 0.0) {
        return Err(Error::domain("T must be positive"));
    }
    let ratio = mahler_measure(alpha) / std::f64::consts::LN_2;
    let bound = (ratio.powf(t_max) + 1.0).floor();
    Ok(if bound >= u64::MAX as f64 { u64::MAX } else { bound as u64 })
}

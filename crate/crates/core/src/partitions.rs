//! Young diagram combinatorics: hooks, hook removal, e-cores, e-quotients
//! and core towers.
//!
//! Hook removal, cores and quotients all go through β-numbers (first-column
//! hook lengths) laid out on an e-runner abacus. Quotients use a β-set whose
//! size is the least multiple of `e` that is at least the number of parts;
//! runner `i` holds the beads congruent to `i` modulo `e`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a finite non-increasing sequence of positive
/// integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be non-increasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts the input and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n - x, 1^x)`.
    pub fn hook(n: usize, x: usize) -> Self {
        assert!(x < n, "hook leg must be shorter than the hook");
        let mut parts = vec![n - x];
        parts.extend(std::iter::repeat(1).take(x));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    /// Reflection of the diagram in the main diagonal.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// `h_{r,c}(λ) = 1 + (λ_r - c) + (λ'_c - r)`.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::domain(format!("cell {cell} lies outside the diagram of {self}")));
        }
        let leg = self.parts[cell.row - 1..].iter().take_while(|&&p| p >= cell.col).count() - 1;
        let arm = self.parts[cell.row - 1] - cell.col;
        Ok(1 + arm + leg)
    }

    /// Hook lengths laid out row by row, matching the diagram.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| (1..=len).map(|c| 1 + (len - c) + (conj.parts[c - 1] - (i + 1))).collect())
            .collect()
    }

    /// Multiset of hook lengths, sorted descending.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.hook_lengths().into_iter().flatten().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }

    /// Cells whose hook length is divisible by `e`, in row-major order.
    pub fn e_hooks(&self, e: usize) -> Vec<Cell> {
        assert!(e >= 1, "hook divisor must be positive");
        self.hook_lengths()
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |(_, &h)| h % e == 0)
                    .map(move |(j, _)| Cell::new(i + 1, j + 1))
            })
            .collect()
    }

    /// Number of hooks of length divisible by `e`.
    pub fn count_e_hooks(&self, e: usize) -> usize {
        self.hook_lengths().iter().flatten().filter(|&&h| h % e == 0).count()
    }

    /// β-numbers with `beads >= len` beads, descending.
    pub fn beta_set(&self, beads: usize) -> Vec<usize> {
        assert!(beads >= self.len(), "too few beads for this partition");
        (1..=beads).map(|i| self.part(i) + beads - i).collect()
    }

    /// Inverse of [`Partition::beta_set`] for any bead count.
    pub fn from_beta(beta: &[usize]) -> Partition {
        let mut sorted = beta.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(sorted.windows(2).all(|w| w[0] > w[1]), "β-set has repeated beads");
        let s = sorted.len();
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (s - 1 - i))
            .filter(|&x| x > 0)
            .collect();
        Partition { parts }
    }

    /// Removes the rim hook attached to `cell`.
    pub fn remove_hook(&self, cell: Cell) -> Result<Partition> {
        let h = self.hook_length(cell)?;
        let mut beta = self.beta_set(self.len());
        beta[cell.row - 1] -= h;
        Ok(Partition::from_beta(&beta))
    }

    /// The e-core: what remains once no hook of length `e` can be removed.
    pub fn e_core(&self, e: usize) -> Partition {
        assert!(e >= 2, "core base must be at least 2");
        let mut beads_on_runner = vec![0usize; e];
        for b in self.beta_set(self.len()) {
            beads_on_runner[b % e] += 1;
        }
        let beta: Vec<usize> = beads_on_runner
            .iter()
            .enumerate()
            .flat_map(|(runner, &count)| (0..count).map(move |k| runner + k * e))
            .collect();
        Partition::from_beta(&beta)
    }

    /// `w_e(λ) = (|λ| - |C_e(λ)|) / e`.
    pub fn e_weight(&self, e: usize) -> usize {
        (self.size() - self.e_core(e).size()) / e
    }

    /// The e-quotient `(λ^(0), ..., λ^(e-1))`.
    pub fn e_quotient(&self, e: usize) -> Vec<Partition> {
        assert!(e >= 2, "quotient base must be at least 2");
        let beads = self.len().div_ceil(e) * e;
        let mut runners: Vec<Vec<usize>> = vec![Vec::new(); e];
        for b in self.beta_set(beads) {
            runners[b % e].push(b / e);
        }
        runners.iter().map(|r| Partition::from_beta(r)).collect()
    }

    /// The e-core tower, truncated after the last layer `j` with `e^j <= |λ|`.
    pub fn core_tower(&self, e: usize) -> Tower {
        assert!(e >= 2, "tower base must be at least 2");
        let n = self.size();
        let mut top = 0usize;
        let mut power = e;
        while power <= n {
            top += 1;
            power = match power.checked_mul(e) {
                Some(x) => x,
                None => break,
            };
        }
        let mut layers = Vec::with_capacity(top + 1);
        let mut quotient_layer = vec![self.clone()];
        for j in 0..=top {
            layers.push(quotient_layer.iter().map(|mu| mu.e_core(e)).collect());
            if j < top {
                quotient_layer = quotient_layer.iter().flat_map(|mu| mu.e_quotient(e)).collect();
            }
        }
        Tower { base: e, layers }
    }

    /// `n(λ) = Σ (i - 1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }
}

/// Layered sequence of partitions; layer `j` has `base^j` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tower {
    base: usize,
    layers: Vec<Vec<Partition>>,
}

impl Tower {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn layers(&self) -> &[Vec<Partition>] {
        &self.layers
    }

    /// `|T_j|` for each stored layer; layers past the end are empty.
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers
            .iter()
            .map(|layer| layer.iter().map(Partition::size).sum())
            .collect()
    }

    pub fn layer_size(&self, j: usize) -> usize {
        self.layers
            .get(j)
            .map(|layer| layer.iter().map(Partition::size).sum())
            .unwrap_or(0)
    }
}

/// Every partition of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    PartitionIter::new(n).collect()
}

/// Reverse-lexicographic iterator over partitions of `n`.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl PartitionIter {
    pub fn new(n: usize) -> Self {
        PartitionIter {
            next: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut parts = current.clone();
        let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
        parts.truncate(parts.len() - ones);
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let v = *last;
            let mut rem = ones + 1;
            while rem >= v {
                parts.push(v);
                rem -= v;
            }
            if rem > 0 {
                parts.push(rem);
            }
            self.next = Some(parts);
        }
        Some(Partition { parts: current })
    }
}

/// The `n` hook partitions `(n - x, 1^x)`, `x = 0..n-1`.
pub fn hook_partitions(n: usize) -> Vec<Partition> {
    (0..n).map(|x| Partition::hook(n, x)).collect()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts with `a^k` run shorthand; the empty partition is
/// `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{v}^{run}")?;
            } else {
                write!(f, "{v}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        } else if let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (value, count) = match token.split_once('^') {
                Some((v, k)) => (v.trim(), k.trim()),
                None => (token, "1"),
            };
            let value: usize = value
                .parse()
                .map_err(|_| Error::parse(format!("bad part {token:?} in {s:?}")))?;
            let count: usize = count
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent in {token:?}")))?;
            if value == 0 || count == 0 {
                return Err(Error::parse(format!("part {token:?} must be positive")));
            }
            parts.extend(std::iter::repeat(value).take(count));
        }
        Partition::new(parts).map_err(|_| Error::parse(format!("{s:?} is not non-increasing")))
    }
}

//! Named verification suites.
//!
//! Each suite checks one property over an exhaustive desk-scale range against
//! an oracle computed along a different code path, and reports how many
//! instances it checked and the first counterexample in a fixed scan order.
//! Work inside a suite is spread over the current rayon pool; results are
//! collected in input order so reports do not depend on the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{log_exact, nu, prime_power, primes_up_to};
use crate::gltype::{self, gl_character_degrees, gl_order, Eps, GLParams};
use crate::graph::PrimeGraph;
use crate::partitions::{enumerate_partitions, hook_partitions, Cell, Partition};
use crate::piclass::{self, PrimePair};
use crate::symdeg::{
    alt_degrees, degree_hook_formula, factorial, nu_p_macdonald, sum_of_squares, sym_degrees,
    LastLayer, PPrimeTest, TowerDigits,
};

/// Hard ceiling on `n` for the suites that scan every partition.
pub const SCAN_LIMIT: usize = 40;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Upper bound on `n`; each suite also has its own default range.
    pub max_n: usize,
    pub seed: u64,
    /// Random instances drawn by sampling suites.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: SCAN_LIMIT,
            seed: 0x5eed,
            samples: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub pi: Vec<u64>,
    pub lambda: Option<String>,
    pub detail: String,
}

impl Counterexample {
    fn new(n: usize, pi: &[u64], lambda: Option<&Partition>, detail: impl Into<String>) -> Self {
        Counterexample {
            n,
            pi: pi.to_vec(),
            lambda: lambda.map(|l| l.to_string()),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if !self.pi.is_empty() {
            let pi: Vec<String> = self.pi.iter().map(u64::to_string).collect();
            write!(f, " pi={{{}}}", pi.join(","))?;
        }
        if let Some(lambda) = &self.lambda {
            write!(f, " lambda={lambda}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            suite: &'a str,
            passed: bool,
            checked: String,
            counterexample: Option<String>,
            notes: &'a [String],
        }
        serde_json::to_string(&Line {
            suite: &self.suite,
            passed: self.passed(),
            checked: self.checked.to_string(),
            counterexample: self.counterexample.as_ref().map(|c| c.to_string()),
            notes: &self.notes,
        })
        .expect("report serializes")
    }

    /// `suite  PASS|FAIL  checked  [counterexample]`, then `note` lines.
    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "{}\t{}\t{}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked
        );
        if let Some(c) = &self.counterexample {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for note in &self.notes {
            out.push_str(&format!("note\t{}\t{}\n", self.suite, note));
        }
        out
    }
}

/// Count of checked instances and the first failure.
#[derive(Debug, Default)]
pub struct Outcome {
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl Outcome {
    fn merge(mut self, other: Outcome) -> Outcome {
        self.checked += other.checked;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self.notes.extend(other.notes);
        self
    }

    fn check(&mut self, ok: bool, fail: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(fail());
        }
    }
}

/// Runs `f` on every item in parallel and merges outcomes in input order.
fn scan<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> Outcome {
    items
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Outcome::default(), Outcome::merge)
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, config: &VerifyConfig) -> SuiteReport;
}

/// A suite whose body sees the effective upper bound for `n`.
struct RangeSuite {
    name: &'static str,
    description: &'static str,
    default_max: usize,
    body: fn(usize, &VerifyConfig) -> Outcome,
}

impl Suite for RangeSuite {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn run(&self, config: &VerifyConfig) -> SuiteReport {
        let max = self.default_max.min(config.max_n);
        let outcome = catch_unwind(AssertUnwindSafe(|| (self.body)(max, config))).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Outcome {
                checked: 0,
                counterexample: Some(Counterexample::new(max, &[], None, format!("suite aborted: {msg}"))),
                notes: Vec::new(),
            }
        });
        SuiteReport {
            suite: self.name.to_string(),
            checked: outcome.checked,
            counterexample: outcome.counterexample,
            notes: outcome.notes,
        }
    }
}

macro_rules! range_suite {
    ($name:expr, $max:expr, $body:ident, $desc:expr) => {
        Box::new(RangeSuite {
            name: $name,
            description: $desc,
            default_max: $max,
            body: $body,
        }) as Box<dyn Suite>
    };
}

/// Every suite, in the order `all` runs them.
pub fn suites() -> Vec<Box<dyn Suite>> {
    vec![
        range_suite!("core-weight", 25, core_weight, "|λ| = e·weight + |core| for 2 <= e <= n"),
        range_suite!("hook-intersection", 25, hook_intersection, "a hook of length e·f contains exactly f hooks divisible by e"),
        range_suite!("tower-layers", 25, tower_layers, "hooks divisible by p^k counted from core tower layer sizes"),
        range_suite!("core-order", 25, core_order, "random e-hook removal orders reach the abacus e-core"),
        range_suite!("tower-injective", 18, tower_injective, "p-core towers separate partitions of n for p in {2,3,5}"),
        range_suite!("conjugate", 25, conjugate, "conjugation is an involution preserving the hook multiset"),
        range_suite!("macdonald", 30, macdonald, "tower valuation equals the valuation of the hook-formula degree"),
        range_suite!("last-layer", 30, last_layer, "top-hook recursion agrees with the tower-digit p′ test"),
        range_suite!("prime-power-hooks", 32, prime_power_hooks, "p′-degree labels of S_{p^k} are exactly the hooks"),
        range_suite!("two-layer", 33, two_layer, "no 2^k-hooks and two 2^{k-1}-hooks give 2-adic valuation 1 at n = 2^k, 2^k+1"),
        range_suite!("orthogonality", 30, orthogonality, "squared degrees sum to n! for S_n and n!/2 for A_n"),
        range_suite!("self-conjugate", 30, self_conjugate, "self-conjugate labels have even degree for n >= 3"),
        range_suite!("sym-classification", SCAN_LIMIT, sym_classification, "S_n only-linear criterion against exhaustive scan"),
        range_suite!("witness", SCAN_LIMIT, witness, "S_n witnesses are non-linear with degree prime to both primes"),
        range_suite!("alt-witness", SCAN_LIMIT, alt_witness, "A_n always has a non-principal witness and the constructor finds one"),
        range_suite!("alt-extendible", SCAN_LIMIT, alt_extendible, "criterion for a non-self-conjugate non-linear witness against exhaustive scan"),
        range_suite!("sym-graph", SCAN_LIMIT, sym_graph, "Γ′(S_n) misses at most the edge from 2 to the exceptional prime"),
        range_suite!("alt-graph", SCAN_LIMIT, alt_graph, "Γ′(A_n) is complete for n >= 5"),
        range_suite!("gl-oracle", 4, gl_oracle, "GL_n(q) degree tables against the order, class numbers and the closed-form criterion"),
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name()).collect()
}

pub fn suite(name: &str) -> Option<Box<dyn Suite>> {
    suites().into_iter().find(|s| s.name() == name)
}

/// Runs one suite by name, or all of them for `"all"`.
pub fn run(name: &str, config: &VerifyConfig) -> Option<Vec<SuiteReport>> {
    if name == "all" {
        Some(suites().iter().map(|s| s.run(config)).collect())
    } else {
        suite(name).map(|s| vec![s.run(config)])
    }
}

/// Partitions of `n` with degrees and prime-divisibility masks.
struct Scan {
    n: usize,
    primes: Vec<u64>,
    /// `(λ, χ^λ(1), mask)`; bit `i` set when `primes[i]` divides the degree.
    sym: Vec<(Partition, BigUint, u64)>,
}

fn prime_mask(d: &BigUint, primes: &[u64]) -> u64 {
    primes
        .iter()
        .enumerate()
        .filter(|(_, &p)| (d % BigUint::from(p)).is_zero())
        .fold(0, |m, (i, _)| m | (1 << i))
}

impl Scan {
    fn build(n: usize) -> Scan {
        let primes = primes_up_to(n as u64);
        assert!(primes.len() <= 64);
        let sym = enumerate_partitions(n)
            .into_par_iter()
            .map(|lambda| {
                let d = degree_hook_formula(&lambda);
                let mask = prime_mask(&d, &primes);
                (lambda, d, mask)
            })
            .collect();
        Scan { n, primes, sym }
    }

    fn get(n: usize) -> Arc<Scan> {
        static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Scan>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.lock().unwrap().get(&n) {
            return s.clone();
        }
        let scan = Arc::new(Scan::build(n));
        cache.lock().unwrap().entry(n).or_insert(scan).clone()
    }

    fn pair_mask(&self, pair: PrimePair) -> u64 {
        self.primes
            .iter()
            .enumerate()
            .filter(|(_, p)| pair.contains(**p))
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    fn is_linear(&self, lambda: &Partition) -> bool {
        lambda.len() == 1 || lambda.len() == self.n
    }

    fn pairs(&self) -> Vec<PrimePair> {
        let mut out = Vec::new();
        for (i, &p) in self.primes.iter().enumerate() {
            for &q in &self.primes[i + 1..] {
                out.push(PrimePair::new(p, q).expect("distinct primes"));
            }
        }
        out
    }

    /// Non-linear labels of π′-degree, in enumeration order.
    fn pi_prime(&self, pair: PrimePair) -> impl Iterator<Item = &(Partition, BigUint, u64)> + '_ {
        let m = self.pair_mask(pair);
        self.sym.iter().filter(move |(l, _, mask)| mask & m == 0 && !self.is_linear(l))
    }

    /// `(label, degree, mask)` for every non-principal character of `A_n`,
    /// labelled by the larger of `λ, λ′`.
    fn alt(&self) -> Vec<(Partition, BigUint, u64)> {
        let mut out = Vec::new();
        for (lambda, d, mask) in &self.sym {
            let conj = lambda.conjugate();
            if *lambda < conj {
                continue;
            }
            if *lambda == conj {
                let half = d / 2u32;
                let m = prime_mask(&half, &self.primes);
                out.push((lambda.clone(), half, m));
            } else if !d.is_one() {
                out.push((lambda.clone(), d.clone(), *mask));
            }
        }
        out
    }
}

fn ns(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

fn core_weight(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(1, max), |&n| {
        let mut out = Outcome::default();
        for lambda in enumerate_partitions(n) {
            for e in 2..=n {
                let core = lambda.e_core(e);
                let w = lambda.e_weight(e);
                out.check(n == e * w + core.size(), || {
                    Counterexample::new(n, &[], Some(&lambda), format!("e={e}: weight {w}, core {core}"))
                });
            }
        }
        out
    })
}

/// Cells of the hook at `c`: the cell, its arm and its leg.
fn hook_cells(lambda: &Partition, c: Cell) -> BTreeSet<Cell> {
    let conj = lambda.conjugate();
    let arm = (c.col..=lambda.part(c.row)).map(|j| Cell::new(c.row, j));
    let leg = (c.row + 1..=conj.part(c.col)).map(|i| Cell::new(i, c.col));
    arm.chain(leg).collect()
}

fn hook_intersection(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(1, max), |&n| {
        let mut out = Outcome::default();
        for lambda in enumerate_partitions(n) {
            let by_e: Vec<BTreeSet<Cell>> =
                (0..=n).map(|e| if e == 0 { BTreeSet::new() } else { lambda.e_hooks(e).into_iter().collect() }).collect();
            for c in lambda.cells() {
                let h = lambda.hook_length(c).expect("cell of λ");
                let hook = hook_cells(&lambda, c);
                for e in (1..=h).filter(|e| h % e == 0) {
                    let inside = by_e[e].intersection(&hook).count();
                    out.check(inside == h / e, || {
                        Counterexample::new(n, &[], Some(&lambda), format!("cell {c}, e={e}: {inside} hooks, expected {}", h / e))
                    });
                }
            }
        }
        out
    })
}

fn tower_layers(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(1, max), |&n| {
        let mut out = Outcome::default();
        for lambda in enumerate_partitions(n) {
            for p in primes_up_to(n as u64) {
                let sizes = lambda.core_tower(p as usize).layer_sizes();
                let mut pk = 1usize;
                let mut k = 0;
                while pk <= n {
                    let expected: usize = sizes
                        .iter()
                        .enumerate()
                        .skip(k)
                        .map(|(j, s)| s * (p as usize).pow((j - k) as u32))
                        .sum();
                    let got = lambda.count_e_hooks(pk);
                    out.check(got == expected, || {
                        Counterexample::new(n, &[p], Some(&lambda), format!("{got} hooks divisible by {pk}, layers give {expected}"))
                    });
                    pk *= p as usize;
                    k += 1;
                }
            }
        }
        out
    })
}

/// Strips `e`-hooks in a random order until none are left.
fn random_core(lambda: &Partition, e: usize, rng: &mut StdRng) -> Partition {
    let mut current = lambda.clone();
    loop {
        let rims: Vec<Cell> = current
            .cells()
            .filter(|&c| current.hook_length(c).expect("cell") == e)
            .collect();
        if rims.is_empty() {
            return current;
        }
        let cell = rims[rng.gen_range(0..rims.len())];
        current = current.remove_hook(cell).expect("hook of λ");
    }
}

fn core_order(max: usize, config: &VerifyConfig) -> Outcome {
    let mut rng = StdRng::seed_from_u64(config.seed);
    let mut out = Outcome::default();
    let tables: Vec<Vec<Partition>> = (0..=max).map(enumerate_partitions).collect();
    for _ in 0..config.samples {
        let n = rng.gen_range(2..=max.max(2));
        let lambda = &tables[n.min(max)][rng.gen_range(0..tables[n.min(max)].len())];
        let e = rng.gen_range(2..=lambda.size().max(2));
        let first = random_core(lambda, e, &mut rng);
        let second = random_core(lambda, e, &mut rng);
        let abacus = lambda.e_core(e);
        out.check(first == second && first == abacus, || {
            Counterexample::new(n, &[], Some(lambda), format!("e={e}: orders give {first} and {second}, abacus {abacus}"))
        });
    }
    out
}

fn tower_injective(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(1, max), |&n| {
        let mut out = Outcome::default();
        for p in [2usize, 3, 5] {
            let mut seen: BTreeMap<Vec<Vec<Partition>>, Partition> = BTreeMap::new();
            for lambda in enumerate_partitions(n) {
                let key = lambda.core_tower(p).layers().to_vec();
                let clash = seen.insert(key, lambda.clone());
                out.check(clash.is_none(), || {
                    Counterexample::new(n, &[p as u64], Some(&lambda), format!("same tower as {}", clash.clone().unwrap()))
                });
            }
        }
        out
    })
}

fn conjugate(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(0, max), |&n| {
        let mut out = Outcome::default();
        for lambda in enumerate_partitions(n) {
            let conj = lambda.conjugate();
            out.check(conj.conjugate() == lambda && conj.hook_multiset() == lambda.hook_multiset(), || {
                Counterexample::new(n, &[], Some(&lambda), format!("conjugate {conj}"))
            });
        }
        out
    })
}

fn macdonald(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(1, max), |&n| {
        let scan = Scan::get(n);
        let mut out = Outcome::default();
        for (lambda, d, _) in &scan.sym {
            for &p in &scan.primes {
                let tower = nu_p_macdonald(lambda, p);
                let direct = nu(d, p).expect("degrees are positive");
                out.check(tower == direct, || {
                    Counterexample::new(n, &[p], Some(lambda), format!("tower gives {tower}, degree {d} gives {direct}"))
                });
            }
        }
        out
    })
}

fn last_layer(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(1, max), |&n| {
        let mut out = Outcome::default();
        for lambda in enumerate_partitions(n) {
            for p in primes_up_to(n as u64) {
                let a = LastLayer.is_p_prime(&lambda, p);
                let b = TowerDigits.is_p_prime(&lambda, p);
                out.check(a == b, || {
                    Counterexample::new(n, &[p], Some(&lambda), format!("last-layer {a}, tower-digits {b}"))
                });
            }
        }
        out
    })
}

fn prime_power_hooks(max: usize, _: &VerifyConfig) -> Outcome {
    let powers: Vec<(u64, usize)> = (2..=max)
        .filter_map(|n| prime_power(n as u64).map(|(p, _)| (p, n)))
        .collect();
    scan(&powers, |&(p, n)| {
        let mut out = Outcome::default();
        let p_prime: BTreeSet<Partition> = Scan::get(n)
            .sym
            .iter()
            .filter(|(_, d, _)| !(d % BigUint::from(p)).is_zero())
            .map(|(l, _, _)| l.clone())
            .collect();
        let hooks: BTreeSet<Partition> = hook_partitions(n).into_iter().collect();
        let stray = p_prime.symmetric_difference(&hooks).next().cloned();
        out.check(stray.is_none(), || {
            Counterexample::new(n, &[p], stray.as_ref(), "in exactly one of the p′-degree set and the hook set")
        });
        out
    })
}

fn two_layer(max: usize, _: &VerifyConfig) -> Outcome {
    let targets: Vec<(usize, usize)> = (1..6)
        .flat_map(|k| [(1usize << k, k), ((1usize << k) + 1, k)])
        .filter(|&(n, _)| n <= max)
        .collect();
    scan(&targets, |&(n, k)| {
        let mut out = Outcome::default();
        for lambda in enumerate_partitions(n) {
            if lambda.count_e_hooks(1 << k) == 0 && lambda.count_e_hooks(1 << (k - 1)) == 2 {
                let v = nu_p_macdonald(&lambda, 2);
                out.check(v == 1, || Counterexample::new(n, &[2], Some(&lambda), format!("2-adic valuation {v}")));
            }
        }
        out
    })
}

fn orthogonality(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(1, max), |&n| {
        let mut out = Outcome::default();
        let sym = sum_of_squares(&sym_degrees(n).expect("n >= 1"));
        out.check(sym == factorial(n), || Counterexample::new(n, &[], None, format!("S_n squares sum to {sym}")));
        if n >= 3 {
            let alt = sum_of_squares(&alt_degrees(n).expect("n >= 3"));
            out.check(alt * 2u32 == factorial(n), || Counterexample::new(n, &[], None, "A_n squares do not sum to n!/2"));
        }
        out
    })
}

fn self_conjugate(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(3, max), |&n| {
        let mut out = Outcome::default();
        for (lambda, d, _) in Scan::get(n).sym.iter().filter(|(l, _, _)| l.is_self_conjugate()) {
            out.check((d % 2u32).is_zero(), || Counterexample::new(n, &[2], Some(lambda), format!("degree {d} is odd")));
        }
        out
    })
}

fn sym_classification(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(2, max), |&n| {
        let scan = Scan::get(n);
        let mut out = Outcome::default();
        for pair in scan.pairs() {
            let found = scan.pi_prime(pair).next();
            let brute = found.is_none();
            let closed = piclass::sym_only_linear_closed_form(n, pair);
            let dispatched = piclass::sym_only_linear(n, pair);
            out.check(closed == brute && dispatched == brute, || {
                Counterexample::new(
                    n,
                    &pair.primes(),
                    found.map(|(l, _, _)| l),
                    format!("criterion says only-linear = {closed}, scan says {brute}"),
                )
            });
        }
        out
    })
}

fn witness(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(2, max), |&n| {
        let scan = Scan::get(n);
        let mut out = Outcome::default();
        for pair in scan.pairs() {
            let exists = scan.pi_prime(pair).next().is_some();
            let report = piclass::sym_witness(n, pair);
            let ok = match &report.witness {
                Some(lambda) => {
                    let d = degree_hook_formula(lambda);
                    lambda.size() == n && !scan.is_linear(lambda) && pair.coprime_to(&d)
                }
                None => !exists,
            };
            out.check(ok && report.is_witness() == exists, || {
                Counterexample::new(n, &pair.primes(), report.witness.as_ref(), format!("witness report {:?}", report.construction))
            });
        }
        out
    })
}

fn alt_witness(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(5, max), |&n| {
        let scan = Scan::get(n);
        let alt = scan.alt();
        let mut out = Outcome::default();
        for pair in scan.pairs() {
            let m = scan.pair_mask(pair);
            let brute: BTreeSet<&Partition> = alt.iter().filter(|(_, _, mask)| mask & m == 0).map(|(l, _, _)| l).collect();
            let report = piclass::alt_witness(n, pair).expect("n >= 5");
            let ok = match (&report.witness, &report.degree) {
                (Some(lambda), Some(d)) => {
                    let label = lambda.clone().max(lambda.conjugate());
                    let full = degree_hook_formula(lambda);
                    let expected = if lambda.is_self_conjugate() { full / 2u32 } else { full };
                    brute.contains(&label) && *d == expected
                }
                _ => false,
            };
            out.check(!brute.is_empty() && ok, || {
                Counterexample::new(
                    n,
                    &pair.primes(),
                    report.witness.as_ref(),
                    format!("{} brute-force witnesses; constructor degree {:?}", brute.len(), report.degree.as_ref().map(|d| d.to_string())),
                )
            });
        }
        out
    })
}

fn alt_extendible(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(5, max), |&n| {
        let scan = Scan::get(n);
        let mut out = Outcome::default();
        for pair in scan.pairs() {
            let found = scan.pi_prime(pair).find(|(l, _, _)| !l.is_self_conjugate());
            let brute = found.is_some();
            let closed = piclass::alt_extendible_exists(n, pair).expect("n >= 5");
            out.check(closed == brute, || {
                Counterexample::new(
                    n,
                    &pair.primes(),
                    found.map(|(l, _, _)| l),
                    format!("criterion says exists = {closed}, scan says {brute}"),
                )
            });
        }
        out
    })
}

fn mask_graph(primes: &[u64], masks: impl Iterator<Item = u64>) -> PrimeGraph {
    let mut graph = PrimeGraph::new(primes.iter().copied());
    let distinct: BTreeSet<u64> = masks.collect();
    for mask in distinct {
        for i in 0..primes.len() {
            for j in i + 1..primes.len() {
                if mask & (1 << i) == 0 && mask & (1 << j) == 0 {
                    graph.add_edge(primes[i], primes[j]).expect("vertices from the same set");
                }
            }
        }
    }
    graph
}

/// `Γ′(S_n)` from the scan masks.
fn scan_sym_graph(scan: &Scan) -> PrimeGraph {
    mask_graph(&scan.primes, scan.sym.iter().filter(|(l, _, _)| !scan.is_linear(l)).map(|(_, _, m)| *m))
}

fn sym_graph(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(2, max), |&n| {
        let scan = Scan::get(n);
        let brute = scan_sym_graph(&scan);
        let closed = piclass::gamma_prime_sym_closed_form(n).expect("n >= 2");
        let missing = brute.missing_edges();
        let shape_ok = match missing.as_slice() {
            [] => true,
            [(2, p)] => {
                let (n, p) = (n as u64, *p);
                let two = |x: u64| matches!(log_exact(x, 2), Some(k) if k >= 1);
                let pw = |x: u64| matches!(log_exact(x, p), Some(m) if m >= 1);
                (two(n) && pw(n - 1)) || (two(n - 1) && pw(n))
            }
            _ => false,
        };
        let mut out = Outcome::default();
        out.check(brute == closed && shape_ok, || {
            Counterexample::new(n, &[], None, format!("scan misses {missing:?}, criterion misses {:?}", closed.missing_edges()))
        });
        if !missing.is_empty() {
            out.notes.push(format!("n={n} missing {missing:?}"));
        }
        out
    })
}

fn alt_graph(max: usize, _: &VerifyConfig) -> Outcome {
    scan(&ns(5, max), |&n| {
        let scan = Scan::get(n);
        let graph = mask_graph(&scan.primes, scan.alt().into_iter().map(|(_, _, m)| m));
        let mut out = Outcome::default();
        out.check(graph.is_complete(), || {
            Counterexample::new(n, &[], None, format!("Γ′(A_n) misses {:?}", graph.missing_edges()))
        });
        out
    })
}

/// Field orders checked by the GL suite.
pub const GL_FIELD_ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Cases where the closed form is not expected to describe the table: the
/// abelian `GL_1(q)` and `GL_2(2) ≅ S_3`.
pub fn gl_degenerate(n: usize, q_f: u64) -> bool {
    n == 1 || (n, q_f) == (2, 2)
}

fn gl_oracle(max: usize, _: &VerifyConfig) -> Outcome {
    let cases: Vec<(usize, u64)> = (1..=max).flat_map(|n| GL_FIELD_ORDERS.map(|q| (n, q))).collect();
    scan(&cases, |&(n, q_f)| gl_case(n, q_f))
}

/// One `(n, q_f)` cell of the GL suite.
pub fn gl_case(n: usize, q_f: u64) -> Outcome {
    let mut out = Outcome::default();
    let table = gl_character_degrees(n, q_f).expect("prime power");
    let params = GLParams::from_field_order(n, q_f, Eps::Plus).expect("prime power");
    let q = BigUint::from(q_f);
    let order = gl_order(n, &q);
    let fail = |detail: String| Counterexample::new(n, &[], None, format!("GL_{n}({q_f}): {detail}"));

    let squares = table.sum_of_squares();
    out.check(squares == order, || fail(format!("squares sum to {squares}, order {order}")));

    let linear = table.count_of(1).to_u64().unwrap_or(0);
    let expected_linear = if (n, q_f) == (2, 2) { 2 } else { q_f - 1 };
    out.check(linear == expected_linear, || fail(format!("{linear} linear characters")));

    let steinberg = q.pow((n * (n - 1) / 2) as u32);
    let central = gltype::enumerate_shapes(n, q_f)
        .iter()
        .filter(|s| s.is_central() && s.degree(n, q_f, params.r()) == steinberg)
        .count();
    out.check(central == 1, || fail(format!("{central} central shapes of degree {steinberg}")));

    let classes = table.total_characters();
    let known = match n {
        2 => Some(q_f * q_f - 1),
        3 => Some(q_f * q_f * q_f - q_f),
        _ => None,
    };
    if let Some(k) = known {
        out.check(classes == BigUint::from(k), || fail(format!("{classes} classes, expected {k}")));
    }

    let report = gltype::gamma_prime_gl(&params).expect("small parameters");
    let primes = params.order_primes().expect("small parameters");
    for (i, &a) in primes.iter().enumerate() {
        for &b in &primes[i + 1..] {
            let pair = PrimePair::new(a, b).expect("distinct primes");
            let closed = gltype::gl_only_linear(&params, pair).expect("primes divide the order");
            let oracle = table.only_linear_pi_prime(pair);
            if closed != oracle && gl_degenerate(n, q_f) {
                out.checked += 1;
                out.notes.push(format!(
                    "GL_{n}({q_f}) pi={{{a},{b}}}: criterion says only-linear = {closed}, table says {oracle} (degenerate case)"
                ));
                continue;
            }
            out.check(closed == oracle, || {
                Counterexample::new(n, &[a, b], None, format!("GL_{n}({q_f}): criterion {closed}, table {oracle}"))
            });
        }
    }
    out.check(report.disagreements.iter().all(|_| gl_degenerate(n, q_f)), || {
        fail(format!("graph disagreements {:?}", report.disagreements))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_n: 12,
            samples: 40,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn registry_names_are_unique() {
        let names = suite_names();
        let set: BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
        assert!(suite("macdonald").is_some());
        assert!(suite("nope").is_none());
        assert!(run("nope", &small()).is_none());
    }

    #[test]
    fn all_suites_pass_small() {
        for report in run("all", &small()).unwrap() {
            assert!(report.passed(), "{}", report.to_tsv());
            assert!(report.checked > 0, "{} checked nothing", report.suite);
        }
    }

    #[test]
    fn degenerate_gl_cases_are_noted() {
        let report = suite("gl-oracle").unwrap().run(&small());
        assert!(report.passed());
        assert!(report.notes.iter().any(|n| n.starts_with("GL_2(2) pi={2,3}")));
        assert!(report.notes.iter().any(|n| n.starts_with("GL_1(7) pi={2,3}")));
    }

    #[test]
    fn reports_render() {
        let report = SuiteReport {
            suite: "x".into(),
            checked: 3,
            counterexample: Some(Counterexample::new(9, &[2, 3], Some(&"5,1^4".parse().unwrap()), "boom")),
            notes: vec!["hello".into()],
        };
        assert_eq!(report.to_tsv(), "x\tFAIL\t3\tn=9 pi={2,3} lambda=5,1^4: boom\nnote\tx\thello\n");
        assert!(report.to_json().contains(r#""passed":false"#));
    }
}

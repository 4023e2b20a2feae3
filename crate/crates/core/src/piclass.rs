//! Characters of π′-degree for `π = {p, q}` in symmetric, alternating and
//! nilpotent groups.
//!
//! Each classification comes in two forms: an arithmetic criterion on `n`
//! and the primes, and an exhaustive scan of `P(n)` with exact degrees. The
//! witness constructors produce an explicit non-linear π′-degree label for
//! every case the criterion says one exists.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{is_prime, log_exact, primes_up_to, PAdicDigits};
use crate::error::{Error, Result};
use crate::graph::PrimeGraph;
use crate::partitions::{enumerate_partitions, Partition};
use crate::symdeg::{alt_constituents, degree_hook_formula};

/// Two distinct primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimePair {
    p: u64,
    q: u64,
}

impl PrimePair {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        for x in [p, q] {
            if !is_prime(x) {
                return Err(Error::domain(format!("{x} is not prime")));
            }
        }
        if p == q {
            return Err(Error::domain(format!("primes must be distinct, got {p} twice")));
        }
        Ok(PrimePair { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn primes(&self) -> [u64; 2] {
        [self.p, self.q]
    }

    pub fn swapped(&self) -> Self {
        PrimePair { p: self.q, q: self.p }
    }

    pub fn contains(&self, r: u64) -> bool {
        self.p == r || self.q == r
    }

    /// Neither prime divides `m`.
    pub fn coprime_to(&self, m: &BigUint) -> bool {
        self.primes().iter().all(|&r| !(m % BigUint::from(r)).is_zero())
    }

    /// The other prime, when `r` is a member.
    pub fn other(&self, r: u64) -> Option<u64> {
        if self.p == r {
            Some(self.q)
        } else if self.q == r {
            Some(self.p)
        } else {
            None
        }
    }
}

impl fmt::Display for PrimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

fn is_linear(lambda: &Partition, n: usize) -> bool {
    *lambda == Partition::row(n) || *lambda == Partition::column(n)
}

/// Partitions of `n` with their exact degrees, in enumeration order.
#[derive(Clone, Debug)]
pub struct SymTable {
    n: usize,
    entries: Vec<(Partition, BigUint)>,
}

impl SymTable {
    pub fn new(n: usize) -> Self {
        let entries = enumerate_partitions(n)
            .into_par_iter()
            .map(|lambda| {
                let d = degree_hook_formula(&lambda);
                (lambda, d)
            })
            .collect();
        SymTable { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(Partition, BigUint)] {
        &self.entries
    }

    /// Non-linear labels with π′-degree.
    pub fn non_linear_pi_prime(&self, pair: PrimePair) -> impl Iterator<Item = &(Partition, BigUint)> + '_ {
        self.entries
            .iter()
            .filter(move |(lambda, d)| !is_linear(lambda, self.n) && pair.coprime_to(d))
    }
}

/// `Irr_{π′}(S_n)` by exhaustive scan, in enumeration order.
pub fn irr_pi_prime_sym(n: usize, pair: PrimePair) -> Vec<Partition> {
    SymTable::new(n)
        .entries()
        .iter()
        .filter(|(_, d)| pair.coprime_to(d))
        .map(|(lambda, _)| lambda.clone())
        .collect()
}

/// `n = 2^k = p^m + 1` or `n = 2^k + 1 = p^m` with `k, m >= 1`.
fn is_sym_exceptional(n: u64, p: u64) -> bool {
    let two_power = |x: u64| matches!(log_exact(x, 2), Some(k) if k >= 1);
    let p_power = |x: u64| matches!(log_exact(x, p), Some(m) if m >= 1);
    (two_power(n) && p_power(n - 1)) || (n >= 1 && two_power(n - 1) && p_power(n))
}

/// Arithmetic criterion for `Irr_{π′}(S_n) = Lin(S_n)`: one prime is 2 and
/// `n` is of the form `2^k = p^m + 1` or `2^k + 1 = p^m` for the other.
pub fn sym_only_linear_closed_form(n: usize, pair: PrimePair) -> bool {
    match pair.other(2) {
        Some(p) => is_sym_exceptional(n as u64, p),
        None => false,
    }
}

pub fn sym_only_linear_brute(n: usize, pair: PrimePair) -> bool {
    SymTable::new(n).non_linear_pi_prime(pair).next().is_none()
}

/// Below `n = 5`, or with a prime above `n`, the criterion is not claimed.
fn in_sym_regime(n: usize, pair: PrimePair) -> bool {
    n >= 5 && pair.primes().iter().all(|&r| r <= n as u64)
}

/// Whether every π′-degree character of `S_n` is linear. Uses the criterion
/// where it applies and an exhaustive scan otherwise.
pub fn sym_only_linear(n: usize, pair: PrimePair) -> bool {
    if in_sym_regime(n, pair) {
        sym_only_linear_closed_form(n, pair)
    } else {
        sym_only_linear_brute(n, pair)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    OnlyLinear,
    Witness,
}

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `(n - B, n - A + 1, 1^{B - n + A - 1})` from the leading terms
    /// `A > B` of the two prime-adic expansions of `n`.
    LeadingTerms,
    /// A hook `(1 + (b-1)q^k, 1^{q^k})` when `n = 1 + b q^k`.
    Hook,
    /// A shape `(x, 2, 1^y)`.
    HookWithTwo,
    /// A self-conjugate label whose S_n degree is exactly divisible by 2.
    SelfConjugate,
    /// First hit of an exhaustive scan.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub classification: Classification,
    pub witness: Option<Partition>,
    /// Degree of the witnessing character of the group asked about.
    pub degree: Option<BigUint>,
    pub construction: Option<Construction>,
    /// The witness labels one of two conjugate A_n constituents.
    pub split: bool,
}

impl WitnessReport {
    pub fn only_linear() -> Self {
        WitnessReport {
            classification: Classification::OnlyLinear,
            witness: None,
            degree: None,
            construction: None,
            split: false,
        }
    }

    fn found(witness: Partition, degree: BigUint, construction: Construction, split: bool) -> Self {
        WitnessReport {
            classification: Classification::Witness,
            witness: Some(witness),
            degree: Some(degree),
            construction: Some(construction),
            split,
        }
    }

    pub fn is_witness(&self) -> bool {
        self.classification == Classification::Witness
    }
}

/// `(x, 2, 1^y)`.
fn with_two(x: usize, y: usize) -> Partition {
    let mut parts = vec![x, 2];
    parts.extend(std::iter::repeat(1).take(y));
    Partition::new(parts).expect("x >= 2 keeps the shape non-increasing")
}

fn hook_shape(arm_row: usize, leg: usize) -> Partition {
    let mut parts = vec![arm_row];
    parts.extend(std::iter::repeat(1).take(leg));
    Partition::new(parts).expect("hook shape")
}

struct Leading {
    prime: u64,
    coeff: usize,
    power: usize,
}

impl Leading {
    fn of(n: usize, prime: u64) -> Self {
        let (coeff, _, term) = PAdicDigits::new(n as u64, prime).leading().expect("n >= 1");
        Leading {
            prime,
            coeff: coeff as usize,
            power: (term / coeff) as usize,
        }
    }

    fn term(&self) -> usize {
        self.coeff * self.power
    }
}

/// Runs the case analysis; `None` means every π′-degree character is linear.
fn construct_sym_witness(n: usize, pair: PrimePair) -> Option<(Partition, Construction)> {
    let first = Leading::of(n, pair.p());
    let second = Leading::of(n, pair.q());
    let (big, small) = if first.term() > second.term() { (first, second) } else { (second, first) };
    let a_term = big.term();
    let b_term = small.term();

    if !(n - b_term == 1 && n == a_term) {
        let mut parts = vec![n - b_term, n - a_term + 1];
        parts.extend(std::iter::repeat(1).take(b_term - (n - a_term + 1)));
        let lambda = Partition::new(parts).expect("leading-term shape is a partition");
        return Some((lambda, Construction::LeadingTerms));
    }

    // Here n = a p^m and n - 1 = b q^k with single-term expansions.
    let (p, a, pm) = (big.prime, big.coeff, big.power);
    let (q, b, qk) = (small.prime, small.coeff, small.power);
    if p != 2 && q != 2 {
        if b >= 2 {
            Some((hook_shape(1 + (b - 1) * qk, qk), Construction::Hook))
        } else {
            let c = a / 2;
            Some((with_two(c * pm, c * pm - 2), Construction::HookWithTwo))
        }
    } else if q == 2 {
        // n = 2^k + 1 = a p^m
        (a > 1).then(|| (with_two((a - 1) * pm, pm - 2), Construction::HookWithTwo))
    } else {
        // n = 2^m = b q^k + 1
        (b > 1).then(|| (hook_shape(1 + (b - 1) * qk, qk), Construction::Hook))
    }
}

fn checked_sym_witness(n: usize, pair: PrimePair, lambda: Partition, construction: Construction) -> WitnessReport {
    assert_eq!(lambda.size(), n, "witness {lambda} has the wrong size");
    assert!(!is_linear(&lambda, n), "witness {lambda} is linear");
    let degree = degree_hook_formula(&lambda);
    assert!(
        pair.coprime_to(&degree),
        "witness {lambda} for n = {n}, π = {pair} has degree {degree}"
    );
    WitnessReport::found(lambda, degree, construction, false)
}

/// A non-linear character of `S_n` of π′-degree, following the case analysis
/// (leading terms first, then the collapsed `n = a p^m = b q^k + 1` cases).
pub fn sym_witness(n: usize, pair: PrimePair) -> WitnessReport {
    if !in_sym_regime(n, pair) {
        return match SymTable::new(n).non_linear_pi_prime(pair).next() {
            Some((lambda, degree)) => {
                WitnessReport::found(lambda.clone(), degree.clone(), Construction::Search, false)
            }
            None => WitnessReport::only_linear(),
        };
    }
    match construct_sym_witness(n, pair) {
        Some((lambda, construction)) => checked_sym_witness(n, pair, lambda, construction),
        None => WitnessReport::only_linear(),
    }
}

fn alt_degree_of(lambda: &Partition) -> (BigUint, bool) {
    let records = alt_constituents(lambda);
    let split = records.len() == 2;
    (records[0].degree.clone(), split)
}

/// Self-conjugate label with 2-adic degree valuation 1 and p′-degree, for
/// `n = 2^k + 1 = p^m` or `n = 2^k = p^m + 1`.
fn self_conjugate_witness(n: usize) -> Option<Partition> {
    let n64 = n as u64;
    if let Some(k) = log_exact(n64 - 1, 2).filter(|&k| k >= 2) {
        let half = 1usize << (k - 1);
        return Some(hook_shape(half + 1, half));
    }
    if let Some(k) = log_exact(n64, 2).filter(|&k| k >= 3) {
        let half = 1usize << (k - 1);
        return Some(with_two(half, half - 2));
    }
    None
}

/// A non-principal character of `A_n` (`n >= 5`) of π′-degree: the
/// restriction of the S_n witness, or, where S_n has none, a constituent of a
/// split self-conjugate character.
pub fn alt_witness(n: usize, pair: PrimePair) -> Result<WitnessReport> {
    if n < 5 {
        return Err(Error::domain("alternating witnesses need n >= 5"));
    }
    let sym = sym_witness(n, pair);
    if let Some(lambda) = sym.witness {
        let (degree, split) = alt_degree_of(&lambda);
        assert!(pair.coprime_to(&degree));
        return Ok(WitnessReport::found(lambda, degree, sym.construction.unwrap(), split));
    }
    if in_sym_regime(n, pair) {
        if let Some(mu) = self_conjugate_witness(n) {
            let (degree, split) = alt_degree_of(&mu);
            assert!(split, "{mu} is not self-conjugate");
            assert!(
                pair.coprime_to(&degree) && degree > BigUint::one(),
                "self-conjugate witness {mu} for n = {n}, π = {pair} has A_n degree {degree}"
            );
            return Ok(WitnessReport::found(mu, degree, Construction::SelfConjugate, true));
        }
    }
    // Not reached for n >= 5; kept so the search fallback stays total.
    for lambda in enumerate_partitions(n) {
        for rec in alt_constituents(&lambda) {
            if rec.degree > BigUint::one() && pair.coprime_to(&rec.degree) {
                let split = rec.label.is_split();
                return Ok(WitnessReport::found(lambda, rec.degree, Construction::Search, split));
            }
        }
    }
    Ok(WitnessReport::only_linear())
}

/// `n = 2q^k = p^m + 1` or `n = 2q^k + 1 = p^m` with `k, m >= 1`.
fn is_alt_ext_exceptional(n: u64, p: u64, q: u64) -> bool {
    let q_power = |x: u64| matches!(log_exact(x, q), Some(k) if k >= 1);
    let p_power = |x: u64| matches!(log_exact(x, p), Some(m) if m >= 1);
    let even_case = n % 2 == 0 && q_power(n / 2) && p_power(n - 1);
    let odd_case = n % 2 == 1 && q_power((n - 1) / 2) && p_power(n);
    even_case || odd_case
}

/// Criterion for the existence of a non-trivial π′-degree character of `A_n`
/// that extends to `S_n`, taken over both orderings of the pair.
pub fn alt_extendible_exists(n: usize, pair: PrimePair) -> Result<bool> {
    if n < 5 {
        return Err(Error::domain("extendibility criterion needs n >= 5"));
    }
    let n = n as u64;
    Ok(!(is_alt_ext_exceptional(n, pair.p(), pair.q()) || is_alt_ext_exceptional(n, pair.q(), pair.p())))
}

/// Exhaustive form: some `λ ∉ {(n), (1^n)}` with `λ ≠ λ′` has π′-degree.
pub fn alt_extendible_exists_brute(n: usize, pair: PrimePair) -> bool {
    SymTable::new(n)
        .non_linear_pi_prime(pair)
        .any(|(lambda, _)| !lambda.is_self_conjugate())
}

/// `{p, q}` is an edge when some degree above 1 is divisible by neither.
pub(crate) fn graph_from_degrees<'a>(vertices: Vec<u64>, degrees: impl Iterator<Item = &'a BigUint>) -> PrimeGraph {
    let mut graph = PrimeGraph::new(vertices.iter().copied());
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    for d in degrees {
        if *d <= BigUint::one() {
            continue;
        }
        let avoid: Vec<u64> = vertices
            .iter()
            .copied()
            .filter(|&r| !(d % BigUint::from(r)).is_zero())
            .collect();
        if !seen.insert(avoid.clone()) {
            continue;
        }
        for (i, &p) in avoid.iter().enumerate() {
            for &q in &avoid[i + 1..] {
                graph.add_edge(p, q).expect("vertices come from the same set");
            }
        }
    }
    graph
}

/// `Γ′(S_n)` by exhaustive scan of `Irr(S_n)`.
pub fn gamma_prime_sym(n: usize) -> Result<PrimeGraph> {
    if n < 2 {
        return Err(Error::domain("Γ′(S_n) needs n >= 2"));
    }
    let table = SymTable::new(n);
    let degrees = table
        .entries()
        .iter()
        .filter(|(lambda, _)| !is_linear(lambda, n))
        .map(|(_, d)| d);
    Ok(graph_from_degrees(primes_up_to(n as u64), degrees))
}

/// `Γ′(S_n)` from the criterion: complete, except that 2 and `p` are not
/// adjacent when `n = 2^k = p^m + 1` or `n = 2^k + 1 = p^m`.
pub fn gamma_prime_sym_closed_form(n: usize) -> Result<PrimeGraph> {
    if n < 2 {
        return Err(Error::domain("Γ′(S_n) needs n >= 2"));
    }
    let primes = primes_up_to(n as u64);
    let mut graph = PrimeGraph::complete(primes.iter().copied());
    for &p in primes.iter().filter(|&&p| p != 2) {
        if is_sym_exceptional(n as u64, p) {
            graph.remove_edge(2, p);
        }
    }
    Ok(graph)
}

/// `Γ′(A_n)` by exhaustive scan of `Irr(A_n)`.
pub fn gamma_prime_alt(n: usize) -> Result<PrimeGraph> {
    if n < 5 {
        return Err(Error::domain("Γ′(A_n) needs n >= 5"));
    }
    let records = crate::symdeg::alt_degrees(n)?;
    Ok(graph_from_degrees(primes_up_to(n as u64), records.iter().map(|r| &r.degree)))
}

/// Sylow data of a nilpotent group: one prime per Sylow subgroup and whether
/// that subgroup is abelian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sylow {
    pub prime: u64,
    pub abelian: bool,
}

/// `Γ′` of a direct product of Sylow subgroups: `{p_i, p_j}` is an edge iff
/// some Sylow subgroup for a prime outside the pair is non-abelian.
pub fn gamma_prime_nilpotent(sylows: &[Sylow]) -> Result<PrimeGraph> {
    if sylows.is_empty() {
        return Err(Error::domain("need at least one Sylow subgroup"));
    }
    let mut primes = BTreeSet::new();
    for s in sylows {
        if !is_prime(s.prime) {
            return Err(Error::domain(format!("{} is not prime", s.prime)));
        }
        if !primes.insert(s.prime) {
            return Err(Error::domain(format!("duplicate Sylow prime {}", s.prime)));
        }
    }
    let mut graph = PrimeGraph::new(primes.iter().copied());
    let non_abelian: Vec<u64> = sylows.iter().filter(|s| !s.abelian).map(|s| s.prime).collect();
    let all: Vec<u64> = primes.into_iter().collect();
    for (i, &p) in all.iter().enumerate() {
        for &q in &all[i + 1..] {
            if non_abelian.iter().any(|&r| r != p && r != q) {
                graph.add_edge(p, q)?;
            }
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pair(a: u64, b: u64) -> PrimePair {
        PrimePair::new(a, b).unwrap()
    }

    #[test]
    fn prime_pairs_validate() {
        assert!(PrimePair::new(2, 2).is_err());
        assert!(PrimePair::new(4, 3).is_err());
        assert_eq!(pair(3, 2).other(2), Some(3));
    }

    #[test]
    fn pi_prime_lists() {
        assert_eq!(irr_pi_prime_sym(9, pair(2, 3)), vec![p("9"), p("1^9")]);
        assert!(irr_pi_prime_sym(10, pair(2, 3)).contains(&p("2^2,1^6")));
        assert_eq!(irr_pi_prime_sym(8, pair(2, 7)), vec![p("8"), p("1^8")]);
    }

    #[test]
    fn only_linear_criterion() {
        assert!(sym_only_linear(9, pair(2, 3)));
        assert!(!sym_only_linear(10, pair(2, 3)));
        assert!(sym_only_linear(32, pair(2, 31)));
        assert!(sym_only_linear(3, pair(2, 3)));
        assert!(!sym_only_linear(4, pair(2, 5)));
    }

    #[test]
    fn sym_witness_examples() {
        let w = sym_witness(10, pair(3, 2));
        assert_eq!(w.witness, Some(p("2^2,1^6")));
        assert_eq!(w.degree, Some(BigUint::from(35u8)));
        assert_eq!(w.construction, Some(Construction::LeadingTerms));
        assert_eq!(sym_witness(9, pair(3, 2)).classification, Classification::OnlyLinear);
        // 15 = 3·5 = 2·7 + 1 collapses the leading-term shape to (1^15).
        let w = sym_witness(15, pair(7, 5));
        assert_eq!(w.witness, Some(p("8,1^7")));
        assert_eq!(w.construction, Some(Construction::Hook));
        assert_eq!(w.degree, Some(BigUint::from(3432u32)));
    }

    #[test]
    fn collapsed_cases_use_the_right_shapes() {
        // 21 = 3·7 = 5·4 + 1: odd pair, b = 4.
        assert_eq!(sym_witness(21, pair(7, 5)).construction, Some(Construction::Hook));
        // 28 = 4·7 = 27 + 1: odd pair, b = 1, a = 4.
        let w = sym_witness(28, pair(7, 3));
        assert_eq!(w.witness, Some(p("14,2,1^12")));
        // 16 = 3·5 + 1 with 2 in π.
        assert_eq!(sym_witness(16, pair(2, 5)).witness, Some(p("11,1^5")));
        // 33 = 2^5 + 1 = 3·11.
        assert_eq!(sym_witness(33, pair(2, 11)).witness, Some(p("22,2,1^9")));
    }

    #[test]
    fn alt_witness_examples() {
        let w = alt_witness(9, pair(3, 2)).unwrap();
        assert_eq!(w.witness, Some(p("5,1^4")));
        assert_eq!(w.degree, Some(BigUint::from(35u8)));
        assert!(w.split);
        // Hook product of (4,2,1,1) is 448, so χ(1) = 8!/448 = 90.
        let w = alt_witness(8, pair(7, 2)).unwrap();
        assert_eq!(w.witness, Some(p("4,2,1,1")));
        assert_eq!(w.degree, Some(BigUint::from(45u8)));
        let w = alt_witness(10, pair(3, 2)).unwrap();
        assert_eq!(w.witness, Some(p("2^2,1^6")));
        assert_eq!(w.degree, Some(BigUint::from(35u8)));
        assert!(!w.split);
        assert!(alt_witness(4, pair(2, 3)).is_err());
    }

    #[test]
    fn extendibility() {
        assert_eq!(alt_extendible_exists(9, pair(3, 2)), Ok(false));
        assert_eq!(alt_extendible_exists(10, pair(3, 2)), Ok(true));
        assert_eq!(alt_extendible_exists(19, pair(19, 3)), Ok(alt_extendible_exists_brute(19, pair(19, 3))));
        assert!(alt_extendible_exists(4, pair(2, 3)).is_err());
    }

    #[test]
    fn sym_graphs() {
        let g = gamma_prime_sym(9).unwrap();
        assert_eq!(g.missing_edges(), vec![(2, 3)]);
        assert!(gamma_prime_sym(7).unwrap().is_complete());
        let g = gamma_prime_sym(17).unwrap();
        assert_eq!(g.missing_edges(), vec![(2, 17)]);
        assert_eq!(gamma_prime_sym_closed_form(17).unwrap(), g);
    }

    #[test]
    fn alt_graphs() {
        assert!(gamma_prime_alt(9).unwrap().is_complete());
        let g = gamma_prime_alt(5).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![2, 3, 5]);
    }

    #[test]
    fn alt7_three_primes() {
        let only_trivial = crate::symdeg::alt_degrees(7)
            .unwrap()
            .iter()
            .filter(|r| [2u64, 3, 5].iter().all(|&x| !(&r.degree % BigUint::from(x)).is_zero()))
            .count();
        assert_eq!(only_trivial, 1);
    }

    #[test]
    fn nilpotent_graphs() {
        let s = |prime, abelian| Sylow { prime, abelian };
        let g = gamma_prime_nilpotent(&[s(2, false), s(3, false), s(5, true)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(2, 5), (3, 5)]);
        let g = gamma_prime_nilpotent(&[s(2, true), s(3, true), s(5, true)]).unwrap();
        assert_eq!(g.edge_count(), 0);
        // Three non-abelian Sylows: complete.
        let g = gamma_prime_nilpotent(&[s(2, false), s(3, false), s(5, false), s(7, true)]).unwrap();
        assert!(g.is_complete());
        // One non-abelian Sylow: its prime is isolated, the rest complete.
        let g = gamma_prime_nilpotent(&[s(2, true), s(3, true), s(5, true), s(7, false)]).unwrap();
        assert!(g.is_isolated(7));
        assert_eq!(g.edge_count(), 3);
        assert!(gamma_prime_nilpotent(&[s(2, true), s(2, false)]).is_err());
        assert!(gamma_prime_nilpotent(&[]).is_err());
        assert!(gamma_prime_nilpotent(&[s(4, true)]).is_err());
    }
}

//! Character degrees of symmetric and alternating groups.
//!
//! Degrees are exact: `n!` divided by the hook product, with the remainder
//! checked. p-adic valuations come either from the degree itself or, without
//! touching the degree, from the sizes of the p-core tower layers.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{self, PAdicDigits};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

static FACTORIALS: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();

/// `n!`, memoized for the lifetime of the process.
pub fn factorial(n: usize) -> BigUint {
    let cache = FACTORIALS.get_or_init(|| RwLock::new(vec![BigUint::one()]));
    {
        let table = cache.read().expect("factorial cache poisoned");
        if let Some(f) = table.get(n) {
            return f.clone();
        }
    }
    let mut table = cache.write().expect("factorial cache poisoned");
    while table.len() <= n {
        let next = table.last().unwrap() * BigUint::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// `ν_p(m)` for a positive integer `m`.
pub fn nu(m: &BigUint, p: u64) -> Result<u32> {
    arith::nu(m, p)
}

/// `χ^λ(1) = n! / Π h_c(λ)`.
pub fn degree_hook_formula(lambda: &Partition) -> BigUint {
    let hook_product = lambda
        .hook_multiset()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    let (degree, rem) = factorial(lambda.size()).div_rem(&hook_product);
    assert!(rem.is_zero(), "hook product does not divide n! for {lambda}");
    degree
}

/// `ν_p(χ^λ(1))` from the p-core tower layer sizes and the base-p digits of
/// `n` alone.
pub fn nu_p_macdonald(lambda: &Partition, p: u64) -> u32 {
    let n = lambda.size();
    let tower_total: usize = lambda.core_tower(p as usize).layer_sizes().iter().sum();
    let digit_total = PAdicDigits::new(n as u64, p).digit_sum() as usize;
    assert!(tower_total >= digit_total, "tower smaller than digit sum for {lambda}, p = {p}");
    let excess = tower_total - digit_total;
    let step = (p - 1) as usize;
    assert_eq!(excess % step, 0, "valuation is not integral for {lambda}, p = {p}");
    (excess / step) as u32
}

/// A decision procedure for `p ∤ χ^λ(1)`.
pub trait PPrimeTest: Send + Sync {
    fn name(&self) -> &'static str;
    fn is_p_prime(&self, lambda: &Partition, p: u64) -> bool;
}

/// `|T_j^C(λ)| = a_j` for every layer `j`.
#[derive(Debug, Default, Clone, Copy)]
pub struct TowerDigits;

impl PPrimeTest for TowerDigits {
    fn name(&self) -> &'static str {
        "tower-digits"
    }

    fn is_p_prime(&self, lambda: &Partition, p: u64) -> bool {
        let digits = PAdicDigits::new(lambda.size() as u64, p);
        let sizes = lambda.core_tower(p as usize).layer_sizes();
        let layers = sizes.len().max(digits.digits().len());
        (0..layers).all(|j| sizes.get(j).copied().unwrap_or(0) as u64 == digits.digit(j))
    }
}

/// Peels off the top layer: `λ` is p′ iff it has exactly `a_k` hooks of
/// length divisible by `p^k` and its `p^k`-core is p′, where `a_k p^k` is the
/// leading term of `n`.
#[derive(Debug, Default, Clone, Copy)]
pub struct LastLayer;

impl PPrimeTest for LastLayer {
    fn name(&self) -> &'static str {
        "last-layer"
    }

    fn is_p_prime(&self, lambda: &Partition, p: u64) -> bool {
        let mut current = lambda.clone();
        loop {
            let n = current.size();
            let Some((a_k, k, _)) = PAdicDigits::new(n as u64, p).leading() else {
                return true;
            };
            if k == 0 {
                return true;
            }
            let pk = p.pow(k) as usize;
            if current.count_e_hooks(pk) as u64 != a_k {
                return false;
            }
            current = current.e_core(pk);
        }
    }
}

/// Divides the hook-formula degree directly.
#[derive(Debug, Default, Clone, Copy)]
pub struct HookFormula;

impl PPrimeTest for HookFormula {
    fn name(&self) -> &'static str {
        "hook-formula"
    }

    fn is_p_prime(&self, lambda: &Partition, p: u64) -> bool {
        !(degree_hook_formula(lambda) % BigUint::from(p)).is_zero()
    }
}

/// All registered p′-degree tests.
pub fn p_prime_tests() -> Vec<Box<dyn PPrimeTest>> {
    vec![Box::new(TowerDigits), Box::new(LastLayer), Box::new(HookFormula)]
}

pub fn p_prime_test(name: &str) -> Option<Box<dyn PPrimeTest>> {
    p_prime_tests().into_iter().find(|t| t.name() == name)
}

/// `p ∤ χ^λ(1)`, decided from the core tower.
pub fn is_p_prime_degree(lambda: &Partition, p: u64) -> bool {
    TowerDigits.is_p_prime(lambda, p)
}

/// No prime of `pi` divides `χ^λ(1)`.
pub fn is_pi_prime_degree(lambda: &Partition, pi: &[u64]) -> bool {
    assert!(!pi.is_empty(), "prime set must be non-empty");
    pi.iter().all(|&p| is_p_prime_degree(lambda, p))
}

/// Label of an irreducible character of `A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltLabel {
    lambda: Partition,
    split_index: Option<u8>,
}

impl AltLabel {
    /// Canonicalizes to the lexicographically larger of `λ`, `λ′`.
    pub fn non_split(lambda: &Partition) -> Self {
        let conj = lambda.conjugate();
        assert!(conj != *lambda, "self-conjugate {lambda} restricts reducibly");
        AltLabel {
            lambda: lambda.clone().max(conj),
            split_index: None,
        }
    }

    pub fn split(lambda: &Partition, index: u8) -> Self {
        assert!(lambda.is_self_conjugate(), "{lambda} is not self-conjugate");
        assert!(index < 2, "split index must be 0 or 1");
        AltLabel {
            lambda: lambda.clone(),
            split_index: Some(index),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn is_split(&self) -> bool {
        self.split_index.is_some()
    }

    pub fn split_index(&self) -> Option<u8> {
        self.split_index
    }
}

impl fmt::Display for AltLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.split_index {
            Some(i) => write!(f, "{}#{}", self.lambda, i),
            None => write!(f, "{}", self.lambda),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Sym(Partition),
    Alt(AltLabel),
}

impl Label {
    pub fn partition(&self) -> &Partition {
        match self {
            Label::Sym(p) => p,
            Label::Alt(a) => a.lambda(),
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, Label::Alt(a) if a.is_split())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Sym(p) => p.fmt(f),
            Label::Alt(a) => a.fmt(f),
        }
    }
}

/// One irreducible character degree with its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRecord {
    pub label: Label,
    pub degree: BigUint,
    pub multiplicity: u32,
}

#[derive(Serialize)]
struct DegreeRecordLine {
    label: String,
    degree: String,
    mult: u32,
    split: bool,
}

impl DegreeRecord {
    /// One JSON object: `{"label", "degree" (decimal string), "mult", "split"}`.
    pub fn to_json(&self) -> String {
        let line = DegreeRecordLine {
            label: self.label.to_string(),
            degree: self.degree.to_string(),
            mult: self.multiplicity,
            split: self.label.is_split(),
        };
        serde_json::to_string(&line).expect("record serializes")
    }
}

/// One record per `λ ⊢ n`, in enumeration order.
pub fn sym_degrees(n: usize) -> Result<Vec<DegreeRecord>> {
    if n == 0 {
        return Err(Error::domain("S_n degrees need n >= 1"));
    }
    Ok(enumerate_partitions(n)
        .into_iter()
        .map(|lambda| DegreeRecord {
            degree: degree_hook_formula(&lambda),
            label: Label::Sym(lambda),
            multiplicity: 1,
        })
        .collect())
}

/// A_n constituents of `χ^λ`: one of full degree when `λ ≠ λ′`, two of half
/// degree otherwise.
pub fn alt_constituents(lambda: &Partition) -> Vec<DegreeRecord> {
    let degree = degree_hook_formula(lambda);
    if lambda.is_self_conjugate() {
        let (half, rem) = degree.div_rem(&BigUint::from(2u8));
        assert!(rem.is_zero(), "self-conjugate {lambda} has odd degree {degree}");
        (0..2)
            .map(|i| DegreeRecord {
                label: Label::Alt(AltLabel::split(lambda, i)),
                degree: half.clone(),
                multiplicity: 1,
            })
            .collect()
    } else {
        vec![DegreeRecord {
            label: Label::Alt(AltLabel::non_split(lambda)),
            degree,
            multiplicity: 1,
        }]
    }
}

/// Irreducible degrees of `A_n`, one record per character, ordered by the
/// canonical label's position in the enumeration of `P(n)`.
pub fn alt_degrees(n: usize) -> Result<Vec<DegreeRecord>> {
    if n < 3 {
        return Err(Error::domain("A_n degrees need n >= 3"));
    }
    Ok(enumerate_partitions(n)
        .into_iter()
        .filter(|lambda| *lambda >= lambda.conjugate())
        .flat_map(|lambda| alt_constituents(&lambda))
        .collect())
}

/// `Σ degree² · multiplicity`.
pub fn sum_of_squares(records: &[DegreeRecord]) -> BigUint {
    records
        .iter()
        .map(|r| &r.degree * &r.degree * BigUint::from(r.multiplicity))
        .sum()
}


#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;

    fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
    }

    fn small_prime() -> impl Strategy<Value = u64> {
        prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn tower_valuation_matches_degree(lambda in partition(9, 9), p in small_prime()) {
            let d = degree_hook_formula(&lambda);
            let mut v = 0;
            let mut m = d.clone();
            while (&m % p) == BigUint::from(0u8) {
                m /= p;
                v += 1;
            }
            prop_assert_eq!(nu_p_macdonald(&lambda, p), v);
        }

        #[test]
        fn p_prime_strategies_agree(lambda in partition(8, 8), p in small_prime()) {
            let verdicts: Vec<(&str, bool)> = p_prime_tests().iter().map(|t| (t.name(), t.is_p_prime(&lambda, p))).collect();
            prop_assert!(verdicts.iter().all(|v| v.1 == verdicts[0].1), "{:?}", verdicts);
        }
    }
}

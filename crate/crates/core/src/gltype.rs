//! General linear and unitary groups `GL_n^ε(r^a)`.
//!
//! The π′-degree criterion and the graph it predicts are closed forms. For
//! `ε = +1` there is also a full degree table of `GL_n(q)`: characters are
//! indexed by a semisimple class shape (distinct monic irreducibles `f ≠ x` of
//! degree `d_f` with multiplicities `m_f`, `Σ d_f m_f = n`) together with a
//! partition `λ_f ⊢ m_f` per polynomial. The centralizer is
//! `Π GL_{m_f}(q^{d_f})` and the degree is the r′-part of its index times the
//! product of the unipotent degrees `ψ_{λ_f}(1)` at `q^{d_f}`. Only degrees
//! of polynomials matter, so no finite-field arithmetic is done.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{factorize, is_prime, log_exact, prime_power, strip_prime};
use crate::error::{Error, Result};
use crate::graph::PrimeGraph;
use crate::partitions::{enumerate_partitions, Partition};
use crate::piclass::PrimePair;

/// Largest rank for which [`gamma_prime_gl`] builds the degree-table graph.
pub const ORACLE_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Eps {
    /// General linear.
    Plus,
    /// General unitary.
    Minus,
}

impl Eps {
    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Eps::Plus),
            -1 => Ok(Eps::Minus),
            other => Err(Error::domain(format!("ε must be +1 or -1, got {other}"))),
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
        }
    }
}

/// `GL_n^ε(r^a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GLParams {
    n: usize,
    r: u64,
    a: u32,
    eps: Eps,
}

impl GLParams {
    pub fn new(n: usize, r: u64, a: u32, eps: Eps) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("rank must be positive"));
        }
        if !is_prime(r) {
            return Err(Error::domain(format!("characteristic {r} is not prime")));
        }
        if a == 0 {
            return Err(Error::domain("field exponent must be positive"));
        }
        r.checked_pow(a)
            .ok_or_else(|| Error::Overflow(format!("{r}^{a} does not fit in 64 bits")))?;
        Ok(GLParams { n, r, a, eps })
    }

    /// Splits a prime-power field order `q_f = r^a`.
    pub fn from_field_order(n: usize, q_f: u64, eps: Eps) -> Result<Self> {
        let (r, a) = prime_power(q_f)
            .ok_or_else(|| Error::domain(format!("{q_f} is not a prime power")))?;
        Self::new(n, r, a, eps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn eps(&self) -> Eps {
        self.eps
    }

    pub fn field_order(&self) -> u64 {
        self.r.pow(self.a)
    }

    /// `q^i - ε^i` for `i = 1..n`, checked against 64-bit overflow.
    fn cyclotomic_factors(&self) -> Result<Vec<u64>> {
        let q = self.field_order();
        (1..=self.n as u32)
            .map(|i| {
                let qi = q
                    .checked_pow(i)
                    .ok_or_else(|| Error::Overflow(format!("{q}^{i} does not fit in 64 bits")))?;
                let plus = self.eps == Eps::Minus && i % 2 == 1;
                if plus {
                    qi.checked_add(1).ok_or_else(|| Error::Overflow(format!("{q}^{i} + 1")))
                } else {
                    Ok(qi - 1)
                }
            })
            .collect()
    }

    /// `q^{n(n-1)/2} Π_{i=1..n} (q^i - ε^i)`.
    pub fn order(&self) -> Result<BigUint> {
        let q = BigUint::from(self.field_order());
        let unipotent = q.pow((self.n * (self.n - 1) / 2) as u32);
        Ok(self
            .cyclotomic_factors()?
            .into_iter()
            .fold(unipotent, |acc, f| acc * BigUint::from(f)))
    }

    /// Primes dividing the group order, ascending.
    pub fn order_primes(&self) -> Result<Vec<u64>> {
        let mut primes = std::collections::BTreeSet::new();
        if self.n >= 2 {
            primes.insert(self.r);
        }
        for f in self.cyclotomic_factors()? {
            primes.extend(factorize(f).into_iter().map(|(p, _)| p));
        }
        Ok(primes.into_iter().collect())
    }
}

/// Arithmetic criterion for `Irr_{π′}(GL_n^ε(r^a)) = Lin`: up to reordering,
/// `r = p`, `n` is a power `q^k` (`k >= 0`) and `q | p^a - ε`.
pub fn gl_only_linear(params: &GLParams, pair: PrimePair) -> Result<bool> {
    let primes = params.order_primes()?;
    for r in pair.primes() {
        if !primes.contains(&r) {
            return Err(Error::domain(format!("{r} does not divide the group order")));
        }
    }
    let q_f = params.field_order() as i128;
    let matches = |p: u64, q: u64| {
        params.r == p
            && log_exact(params.n as u64, q).is_some()
            && (q_f - params.eps.sign() as i128).rem_euclid(q as i128) == 0
    };
    Ok(matches(pair.p(), pair.q()) || matches(pair.q(), pair.p()))
}

/// The graph predicted by the criterion: complete on the primes dividing the
/// order, minus the pairs where only linear characters are π′.
pub fn gamma_prime_gl_closed_form(params: &GLParams) -> Result<PrimeGraph> {
    let primes = params.order_primes()?;
    let mut graph = PrimeGraph::complete(primes.iter().copied());
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if gl_only_linear(params, PrimePair::new(p, q)?)? {
                graph.remove_edge(p, q);
            }
        }
    }
    Ok(graph)
}

/// Closed-form and (for `ε = +1`, `n <= ORACLE_MAX_N`) degree-table graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlGraph {
    /// The table graph when available, otherwise the closed form.
    pub graph: PrimeGraph,
    pub closed_form: PrimeGraph,
    pub oracle: Option<PrimeGraph>,
    /// Pairs whose adjacency differs between the two constructions.
    pub disagreements: Vec<(u64, u64)>,
}

pub fn gamma_prime_gl(params: &GLParams) -> Result<GlGraph> {
    let closed_form = gamma_prime_gl_closed_form(params)?;
    let oracle = if params.eps == Eps::Plus && params.n <= ORACLE_MAX_N {
        let table = gl_character_degrees(params.n, params.field_order())?;
        Some(table.prime_graph(closed_form.vertices()))
    } else {
        None
    };
    let disagreements = match &oracle {
        Some(o) => closed_form
            .missing_edges()
            .into_iter()
            .chain(closed_form.edges())
            .filter(|&(p, q)| o.has_edge(p, q) != closed_form.has_edge(p, q))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect(),
        None => Vec::new(),
    };
    Ok(GlGraph {
        graph: oracle.clone().unwrap_or_else(|| closed_form.clone()),
        closed_form,
        oracle,
        disagreements,
    })
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`:
/// `(1/d) Σ_{e | d} μ(d/e) q^e`.
pub fn count_irreducible_polys(q_f: u64, d: usize) -> BigUint {
    assert!(q_f >= 2 && d >= 1);
    let q = BigInt::from(q_f);
    let total: BigInt = (1..=d)
        .filter(|e| d % e == 0)
        .map(|e| BigInt::from(mobius((d / e) as u64)) * q.pow(e as u32))
        .sum();
    let (count, rem) = total.div_rem(&BigInt::from(d));
    assert!(rem.is_zero() && count.is_positive());
    count.to_biguint().unwrap()
}

/// Irreducibles of degree `d` available as eigenvalue polynomials of an
/// invertible matrix: the `x` polynomial is excluded in degree 1.
pub fn polynomial_pool(q_f: u64, d: usize) -> BigUint {
    let all = count_irreducible_polys(q_f, d);
    if d == 1 {
        all - BigUint::one()
    } else {
        all
    }
}

/// `|GL_n(q)| = q^{n(n-1)/2} Π_{i=1..n} (q^i - 1)`, for any `q >= 2`.
pub fn gl_order(n: usize, q: &BigUint) -> BigUint {
    let mut order = q.pow((n * n.saturating_sub(1) / 2) as u32);
    for i in 1..=n {
        order *= q.pow(i as u32) - BigUint::one();
    }
    order
}

/// Degree of the unipotent character of `GL_m(Q)` labelled by `λ ⊢ m`:
/// `Q^{n(λ)} Π_{i=1..m}(Q^i - 1) / Π_c (Q^{h_c} - 1)`.
pub fn unipotent_degree(lambda: &Partition, q: &BigUint) -> BigUint {
    let m = lambda.size();
    let one = BigUint::one();
    let numerator = (1..=m).fold(q.pow(lambda.n_statistic() as u32), |acc, i| {
        acc * (q.pow(i as u32) - &one)
    });
    let denominator = lambda
        .hook_multiset()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * (q.pow(h as u32) - &one));
    let (degree, rem) = numerator.div_rem(&denominator);
    assert!(rem.is_zero(), "q-hook product does not divide for {lambda} at Q = {q}");
    degree
}

/// One polynomial slot of a class shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeFactor {
    /// Degree of the irreducible polynomial.
    pub degree: usize,
    /// Its multiplicity as an elementary divisor.
    pub multiplicity: usize,
    /// Unipotent label `λ ⊢ multiplicity`.
    pub label: Partition,
}

/// A family of characters sharing centralizer shape and unipotent labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLCharShape {
    pub factors: Vec<ShapeFactor>,
    /// Number of ways to pick distinct polynomials for the slots, which is
    /// the number of characters with this shape.
    pub class_multiplier: BigUint,
}

impl GLCharShape {
    /// One factor of degree 1 holding the whole rank: `s` is central.
    pub fn is_central(&self) -> bool {
        matches!(self.factors.as_slice(), [f] if f.degree == 1)
    }

    /// `χ(1) = |G : C(s)|_{r′} · Π ψ_{λ_f}(1)`.
    pub fn degree(&self, n: usize, q_f: u64, r: u64) -> BigUint {
        let q = BigUint::from(q_f);
        let mut centralizer = BigUint::one();
        let mut unipotent = BigUint::one();
        for f in &self.factors {
            let qd = q.pow(f.degree as u32);
            centralizer *= gl_order(f.multiplicity, &qd);
            unipotent *= unipotent_degree(&f.label, &qd);
        }
        let (index, rem) = gl_order(n, &q).div_rem(&centralizer);
        assert!(rem.is_zero(), "centralizer order does not divide |GL_{n}({q_f})|");
        strip_prime(&index, r) * unipotent
    }
}

fn falling_factorial(n: &BigUint, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - BigUint::from(i)))
}

fn multiplier(factors: &[ShapeFactor], q_f: u64) -> Option<BigUint> {
    let mut result = BigUint::one();
    let mut by_degree: BTreeMap<usize, Vec<&ShapeFactor>> = BTreeMap::new();
    for f in factors {
        by_degree.entry(f.degree).or_default().push(f);
    }
    for (d, slots) in by_degree {
        let pool = polynomial_pool(q_f, d);
        if BigUint::from(slots.len()) > pool {
            return None;
        }
        let mut ways = falling_factorial(&pool, slots.len());
        // slots are sorted, so identical factors are adjacent
        let mut i = 0;
        while i < slots.len() {
            let run = slots[i..].iter().take_while(|f| **f == slots[i]).count();
            ways /= (1..=run).fold(BigUint::one(), |acc, x| acc * BigUint::from(x));
            i += run;
        }
        result *= ways;
    }
    Some(result)
}

/// Every character shape of `GL_n(q_f)` with its multiplicity; shapes that
/// need more distinct irreducibles of some degree than exist are skipped.
pub fn enumerate_shapes(n: usize, q_f: u64) -> Vec<GLCharShape> {
    let mut atoms = Vec::new();
    for d in 1..=n {
        for m in 1..=n / d {
            for label in enumerate_partitions(m) {
                atoms.push(ShapeFactor {
                    degree: d,
                    multiplicity: m,
                    label,
                });
            }
        }
    }
    atoms.sort();
    let mut shapes = Vec::new();
    let mut current = Vec::new();
    collect_shapes(&atoms, 0, n, &mut current, q_f, &mut shapes);
    shapes
}

fn collect_shapes(
    atoms: &[ShapeFactor],
    start: usize,
    remaining: usize,
    current: &mut Vec<ShapeFactor>,
    q_f: u64,
    out: &mut Vec<GLCharShape>,
) {
    if remaining == 0 {
        if let Some(class_multiplier) = multiplier(current, q_f) {
            out.push(GLCharShape {
                factors: current.clone(),
                class_multiplier,
            });
        }
        return;
    }
    for (i, atom) in atoms.iter().enumerate().skip(start) {
        let weight = atom.degree * atom.multiplicity;
        if weight <= remaining {
            current.push(atom.clone());
            collect_shapes(atoms, i, remaining - weight, current, q_f, out);
            current.pop();
        }
    }
}

/// Multiset of irreducible character degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeTable {
    entries: BTreeMap<BigUint, BigUint>,
}

#[derive(Serialize)]
struct TableEntry {
    degree: String,
    count: String,
}

impl DegreeTable {
    pub fn add(&mut self, degree: BigUint, count: BigUint) {
        *self.entries.entry(degree).or_default() += count;
    }

    /// `(degree, count)` in ascending degree order.
    pub fn entries(&self) -> impl Iterator<Item = (&BigUint, &BigUint)> {
        self.entries.iter()
    }

    pub fn count_of(&self, degree: u64) -> BigUint {
        self.entries.get(&BigUint::from(degree)).cloned().unwrap_or_default()
    }

    pub fn total_characters(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn sum_of_squares(&self) -> BigUint {
        self.entries.iter().map(|(d, c)| d * d * c).sum()
    }

    /// Small tables as `(degree, count)` machine integers.
    pub fn to_pairs(&self) -> Option<Vec<(u64, u64)>> {
        self.entries
            .iter()
            .map(|(d, c)| Some((d.to_u64()?, c.to_u64()?)))
            .collect()
    }

    /// Every character of degree above 1 is divisible by `p` or by `q`.
    pub fn only_linear_pi_prime(&self, pair: PrimePair) -> bool {
        self.entries
            .keys()
            .filter(|d| **d > BigUint::one())
            .all(|d| !pair.coprime_to(d))
    }

    /// `{p, q}` joined when some degree above 1 avoids both.
    pub fn prime_graph(&self, vertices: impl IntoIterator<Item = u64>) -> PrimeGraph {
        crate::piclass::graph_from_degrees(vertices.into_iter().collect(), self.entries.keys())
    }

    /// `degree<TAB>count` lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (d, c) in &self.entries {
            let _ = writeln!(out, "{d}\t{c}");
        }
        out
    }

    /// `{"entries":[{"degree":"1","count":"2"},...]}`
    pub fn to_json(&self) -> String {
        let entries: Vec<TableEntry> = self
            .entries
            .iter()
            .map(|(d, c)| TableEntry {
                degree: d.to_string(),
                count: c.to_string(),
            })
            .collect();
        #[derive(Serialize)]
        struct Table {
            entries: Vec<TableEntry>,
        }
        serde_json::to_string(&Table { entries }).expect("table serializes")
    }
}

/// Degree table of `GL_n(q_f)`.
pub fn gl_character_degrees(n: usize, q_f: u64) -> Result<DegreeTable> {
    if n == 0 {
        return Err(Error::domain("rank must be positive"));
    }
    let (r, _) = prime_power(q_f).ok_or_else(|| Error::domain(format!("{q_f} is not a prime power")))?;
    let mut table = DegreeTable::default();
    for shape in enumerate_shapes(n, q_f) {
        table.add(shape.degree(n, q_f, r), shape.class_multiplier.clone());
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: u64, b: u64) -> PrimePair {
        PrimePair::new(a, b).unwrap()
    }

    fn gl(n: usize, r: u64, a: u32, eps: Eps) -> GLParams {
        GLParams::new(n, r, a, eps).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn criterion_examples() {
        assert_eq!(gl_only_linear(&gl(4, 3, 1, Eps::Plus), pair(3, 2)), Ok(true));
        assert_eq!(gl_only_linear(&gl(3, 2, 1, Eps::Plus), pair(2, 7)), Ok(false));
        assert_eq!(gl_only_linear(&gl(2, 3, 1, Eps::Minus), pair(3, 2)), Ok(true));
        assert!(matches!(gl_only_linear(&gl(3, 2, 1, Eps::Plus), pair(2, 5)), Err(Error::Domain(_))));
    }

    #[test]
    fn params_validate() {
        assert!(GLParams::new(2, 4, 1, Eps::Plus).is_err());
        assert!(GLParams::new(0, 2, 1, Eps::Plus).is_err());
        assert!(GLParams::from_field_order(2, 6, Eps::Plus).is_err());
        assert_eq!(GLParams::from_field_order(2, 9, Eps::Plus).unwrap().a(), 2);
        assert!(Eps::from_sign(0).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(gl_order(2, &big(2)), big(6));
        assert_eq!(gl_order(2, &big(3)), big(48));
        assert_eq!(gl_order(3, &big(2)), big(168));
        assert_eq!(gl(3, 2, 1, Eps::Plus).order(), Ok(big(168)));
        // |GU_2(3)| = 3 · 4 · 8
        assert_eq!(gl(2, 3, 1, Eps::Minus).order(), Ok(big(96)));
        assert_eq!(gl(4, 3, 1, Eps::Plus).order_primes(), Ok(vec![2, 3, 5, 13]));
        assert_eq!(gl(1, 7, 1, Eps::Plus).order_primes(), Ok(vec![2, 3]));
    }

    #[test]
    fn polynomial_counts() {
        assert_eq!(count_irreducible_polys(2, 3), big(2));
        assert_eq!(count_irreducible_polys(2, 1), big(2));
        assert_eq!(polynomial_pool(2, 1), big(1));
        assert_eq!(count_irreducible_polys(3, 2), big(3));
        assert_eq!(count_irreducible_polys(2, 4), big(3));
    }

    #[test]
    fn unipotent_degrees() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(unipotent_degree(&p("5"), &big(7)), big(1));
        assert_eq!(unipotent_degree(&p("1,1"), &big(2)), big(2));
        assert_eq!(unipotent_degree(&p("1,1,1"), &big(2)), big(8));
        // q(q+1) for (2,1) in GL_3(q)
        assert_eq!(unipotent_degree(&p("2,1"), &big(3)), big(12));
    }

    #[test]
    fn shapes() {
        let total = |n, q| enumerate_shapes(n, q).iter().map(|s| s.class_multiplier.clone()).sum::<BigUint>();
        assert_eq!(total(2, 2), big(3));
        assert_eq!(total(2, 3), big(8));
        let gl1 = enumerate_shapes(1, 5);
        assert_eq!(gl1.len(), 1);
        assert_eq!(gl1[0].class_multiplier, big(4));
    }

    #[test]
    fn degree_tables() {
        assert_eq!(gl_character_degrees(2, 2).unwrap().to_pairs(), Some(vec![(1, 2), (2, 1)]));
        let t = gl_character_degrees(2, 3).unwrap();
        assert_eq!(t.to_pairs(), Some(vec![(1, 2), (2, 3), (3, 2), (4, 1)]));
        assert_eq!(t.sum_of_squares(), big(48));
        let t = gl_character_degrees(3, 2).unwrap();
        assert_eq!(t.to_pairs(), Some(vec![(1, 1), (3, 2), (6, 1), (7, 1), (8, 1)]));
        assert!(gl_character_degrees(2, 6).is_err());
    }

    #[test]
    fn closed_form_graphs() {
        let g = gamma_prime_gl_closed_form(&gl(4, 3, 1, Eps::Plus)).unwrap();
        assert_eq!(g.missing_edges(), vec![(2, 3)]);
        assert!(gamma_prime_gl_closed_form(&gl(3, 2, 1, Eps::Plus)).unwrap().is_complete());
    }

    #[test]
    fn small_case_uses_table() {
        let report = gamma_prime_gl(&gl(2, 2, 1, Eps::Plus)).unwrap();
        assert_eq!(report.graph.edge_count(), 0);
        assert!(report.closed_form.has_edge(2, 3));
        assert_eq!(report.disagreements, vec![(2, 3)]);
        let report = gamma_prime_gl(&gl(2, 3, 1, Eps::Minus)).unwrap();
        assert!(report.oracle.is_none());
        assert_eq!(report.graph.missing_edges(), vec![(2, 3)]);
    }

    #[test]
    fn table_serialization() {
        let t = gl_character_degrees(2, 2).unwrap();
        assert_eq!(t.to_tsv(), "1\t2\n2\t1\n");
        assert_eq!(
            t.to_json(),
            r#"{"entries":[{"degree":"1","count":"2"},{"degree":"2","count":"1"}]}"#
        );
    }
}

#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn unipotent_extremes(m in 1usize..7, q in 2u64..6) {
            let q = BigUint::from(q);
            prop_assert_eq!(unipotent_degree(&Partition::row(m), &q), BigUint::from(1u8));
            prop_assert_eq!(unipotent_degree(&Partition::column(m), &q), q.pow((m * (m - 1) / 2) as u32));
        }
    }
}

//! Small integer helpers: primality, factorization, p-adic digits and
//! valuations.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `p <= n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Decomposes `q = r^a` with `r` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(r, a)] => Some((*r, *a)),
        _ => None,
    }
}

/// `Some(k)` when `n = base^k` for some `k >= 0`.
pub fn log_exact(n: u64, base: u64) -> Option<u32> {
    if n == 0 || base < 2 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m % base == 0 {
        m /= base;
        k += 1;
    }
    (m == 1).then_some(k)
}

/// p-adic valuation of a positive machine integer.
pub fn nu_u64(m: u64, p: u64) -> Result<u32> {
    if m == 0 {
        return Err(Error::domain("valuation of 0 is undefined"));
    }
    let mut k = 0;
    let mut m = m;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    Ok(k)
}

/// p-adic valuation of a positive big integer: the largest `k` with
/// `p^k | m`.
pub fn nu(m: &BigUint, p: u64) -> Result<u32> {
    if m.is_zero() {
        return Err(Error::domain("valuation of 0 is undefined"));
    }
    if let Some(small) = m.to_u64() {
        return nu_u64(small, p);
    }
    let p = BigUint::from(p);
    let mut k = 0;
    let mut m = m.clone();
    loop {
        let (quot, rem) = m.div_rem(&p);
        if !rem.is_zero() {
            return Ok(k);
        }
        m = quot;
        k += 1;
    }
}

/// `m` with every factor of `p` removed.
pub fn strip_prime(m: &BigUint, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut m = m.clone();
    if m.is_zero() {
        return m;
    }
    loop {
        let (quot, rem) = m.div_rem(&p);
        if !rem.is_zero() {
            return m;
        }
        m = quot;
    }
}

/// Base-`p` expansion of a natural number, least significant digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicDigits {
    p: u64,
    digits: Vec<u64>,
}

impl PAdicDigits {
    pub fn new(n: u64, p: u64) -> Self {
        assert!(p >= 2, "base must be at least 2");
        let mut digits = Vec::new();
        let mut m = n;
        while m > 0 {
            digits.push(m % p);
            m /= p;
        }
        PAdicDigits { p, digits }
    }

    pub fn base(&self) -> u64 {
        self.p
    }

    /// `a_0, a_1, ..., a_k` with `a_k > 0`; empty for `n = 0`.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn digit(&self, j: usize) -> u64 {
        self.digits.get(j).copied().unwrap_or(0)
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// Leading term `(a_k, k, a_k p^k)`, or `None` for `n = 0`.
    pub fn leading(&self) -> Option<(u64, u32, u64)> {
        let k = self.digits.len().checked_sub(1)?;
        let a = self.digits[k];
        Some((a, k as u32, a * self.p.pow(k as u32)))
    }

    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.p + d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn valuations() {
        assert_eq!(nu_u64(70, 2), Ok(1));
        assert_eq!(nu_u64(70, 3), Ok(0));
        assert_eq!(nu_u64(103680, 2), Ok(8));
        assert!(nu_u64(0, 2).is_err());
        assert!(nu(&BigUint::zero(), 5).is_err());
        let big = BigUint::from(3u32).pow(50) * BigUint::from(7u32);
        assert_eq!(nu(&big, 3), Ok(50));
        assert_eq!(strip_prime(&big, 3), BigUint::from(7u32));
    }

    #[test]
    fn padic_expansion() {
        let d = PAdicDigits::new(10, 3);
        assert_eq!(d.digits(), &[1, 0, 1]);
        assert_eq!(d.leading(), Some((1, 2, 9)));
        assert_eq!(d.value(), 10);
        assert_eq!(PAdicDigits::new(0, 2).leading(), None);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(log_exact(32, 2), Some(5));
        assert_eq!(log_exact(1, 7), Some(0));
        assert_eq!(log_exact(12, 2), None);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(168), vec![(2, 3), (3, 1), (7, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}

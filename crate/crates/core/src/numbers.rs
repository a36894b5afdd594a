//! Arithmetic classification of group orders.
//!
//! A number `n` is *cyclic* (*abelian*, *CCLT*, *ACLT*) when every group of
//! order `n` is cyclic (abelian, CCLT, ACLT). All four are decided here from
//! the prime factorization alone; the brute-force side lives in
//! [`crate::predicates`] and the two are cross-checked by the acceptance suite.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::NumberError;

/// Inputs above this are rejected; trial division is all we use.
pub const MAX_N: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check(n: u64) -> Result<(), NumberError> {
    match n {
        0 => Err(NumberError::Zero),
        n if n > MAX_N => Err(NumberError::TooLarge(n)),
        _ => Ok(()),
    }
}

/// `n = ∏ p_i^{a_i}` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn prime_count(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a == 1)
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }
}

pub fn factorize(n: u64) -> Result<Factorization, NumberError> {
    check(n)?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        let mut a = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            a += 1;
        }
        if a > 0 {
            factors.push((p, a));
        }
        p += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Number of divisors.
pub fn tau(n: u64) -> Result<u64, NumberError> {
    Ok(factorize(n)?
        .factors
        .iter()
        .map(|&(_, a)| u64::from(a) + 1)
        .product())
}

/// Euler's totient.
pub fn phi(n: u64) -> Result<u64, NumberError> {
    Ok(factorize(n)?
        .factors
        .iter()
        .map(|&(p, a)| p.pow(a - 1) * (p - 1))
        .product())
}

/// The set of primes dividing `n`.
pub fn prime_set(n: u64) -> Result<BTreeSet<u64>, NumberError> {
    Ok(factorize(n)?.primes().collect())
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn is_cyclic_number(n: u64) -> Result<bool, NumberError> {
    Ok(gcd(n, phi(n)?) == 1)
}

/// Cube-free, and no `p_i` divides `p_j^k − 1` for `1 ≤ k ≤ a_j`.
pub fn is_abelian_number(n: u64) -> Result<bool, NumberError> {
    Ok(abelian_obstruction(&factorize(n)?).is_none())
}

enum AbelianObstruction {
    Cube(u64),
    Divides { p: u64, q: u64, k: u32 },
}

fn abelian_obstruction(f: &Factorization) -> Option<AbelianObstruction> {
    if let Some(&(p, _)) = f.factors.iter().find(|&&(_, a)| a >= 3) {
        return Some(AbelianObstruction::Cube(p));
    }
    for &(p, _) in &f.factors {
        for &(q, a) in &f.factors {
            if p == q {
                continue;
            }
            for k in 1..=a {
                if (q.pow(k) - 1) % p == 0 {
                    return Some(AbelianObstruction::Divides { p, q, k });
                }
            }
        }
    }
    None
}

fn is_two_primes(f: &Factorization) -> bool {
    f.factors.iter().map(|&(_, a)| a).sum::<u32>() == 2
}

pub fn is_cclt_number(n: u64) -> Result<bool, NumberError> {
    Ok(cclt_clause(n)? != CcltClause::None)
}

pub fn is_aclt_number(n: u64) -> Result<bool, NumberError> {
    Ok(aclt_clause(n)? != AcltClause::None)
}

/// Which characterization made `n` a CCLT number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CcltClause {
    CyclicNumber,
    /// `n = pq`, primes not necessarily distinct.
    ProductOfTwoPrimes,
    None,
}

/// Which characterization made `n` an ACLT number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AcltClause {
    AbelianNumber,
    TwoDistinctPrimes,
    /// `n = p^m` with `m ≤ 4`.
    SmallPrimePower,
    /// `n = 4q`, `q ≡ 3 (mod 4)`, `q ≥ 7`.
    FourTimesPrimeThreeModFour,
    /// `n = p²q` with `p | q−1`, `p² ∤ q−1`, `p ∤ q+1`, `q ∤ p²−1`.
    SquareTimesPrimeDivisibility,
    None,
}

pub fn cclt_clause(n: u64) -> Result<CcltClause, NumberError> {
    let f = factorize(n)?;
    Ok(if is_cyclic_number(n)? {
        CcltClause::CyclicNumber
    } else if is_two_primes(&f) {
        CcltClause::ProductOfTwoPrimes
    } else {
        CcltClause::None
    })
}

/// `(p, q)` when `n = p²q` with distinct primes.
pub(crate) fn square_times_prime(f: &Factorization) -> Option<(u64, u64)> {
    match f.factors[..] {
        [(a, 2), (b, 1)] => Some((a, b)),
        [(a, 1), (b, 2)] => Some((b, a)),
        _ => None,
    }
}

pub fn aclt_clause(n: u64) -> Result<AcltClause, NumberError> {
    let f = factorize(n)?;
    if abelian_obstruction(&f).is_none() {
        return Ok(AcltClause::AbelianNumber);
    }
    if f.factors.len() == 2 && f.is_squarefree() {
        return Ok(AcltClause::TwoDistinctPrimes);
    }
    if f.factors.len() <= 1 && f.factors.first().map_or(0, |&(_, a)| a) <= 4 {
        return Ok(AcltClause::SmallPrimePower);
    }
    if let Some((p, q)) = square_times_prime(&f) {
        // k ranges over k ≥ 1, so q = 3 (n = 12) is excluded
        if p == 2 && q % 4 == 3 && q >= 7 {
            return Ok(AcltClause::FourTimesPrimeThreeModFour);
        }
        if (q - 1) % p == 0 && (q - 1) % (p * p) != 0 && (q + 1) % p != 0 && (p * p - 1) % q != 0 {
            return Ok(AcltClause::SquareTimesPrimeDivisibility);
        }
    }
    Ok(AcltClause::None)
}

/// Number of CCLT groups of order `n` up to isomorphism, for `n` with at
/// least two distinct prime factors: 2 when `n = p^r q` with `p | q − 1`,
/// otherwise 1.
pub fn g_cclt_count(n: u64) -> Result<u64, NumberError> {
    let f = factorize(n)?;
    if f.factors.len() < 2 {
        return Err(NumberError::PrimePower(n));
    }
    if let [(a, ea), (b, eb)] = f.factors[..] {
        let split = |p: u64, q: u64, eq: u32| eq == 1 && (q - 1).is_multiple_of(p);
        if split(a, b, eb) || split(b, a, ea) {
            return Ok(2);
        }
    }
    Ok(1)
}

/// The three shapes of CCLT group covered by the subgroup-count formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountShape {
    /// `C_n`
    Cyclic { n: u64 },
    /// `C_p × C_{p^{k−1}}`, `k ≥ 2`
    AbelianPGroup { p: u64, k: u32 },
    /// the non-cyclic CCLT group of order `p^r q`, `p | q − 1`
    NonabelianPrq { p: u64, r: u32, q: u64 },
}

impl CountShape {
    fn validate(self) -> Result<Self, NumberError> {
        match self {
            CountShape::Cyclic { n } => {
                check(n)?;
            }
            CountShape::AbelianPGroup { p, k } => {
                if !is_prime(p) || k < 2 {
                    return Err(NumberError::InvalidShape(format!(
                        "abelian p-group needs prime p and k ≥ 2, got p={p}, k={k}"
                    )));
                }
            }
            CountShape::NonabelianPrq { p, r, q } => {
                if !is_prime(p) || !is_prime(q) || p == q || r == 0 || (q - 1) % p != 0 {
                    return Err(NumberError::InvalidShape(format!(
                        "p^r q shape needs distinct primes with p | q−1 and r ≥ 1, got p={p}, r={r}, q={q}"
                    )));
                }
            }
        }
        Ok(self)
    }
}

/// Number of subgroups of a CCLT group of the given shape.
pub fn subgroup_count_closed_form(shape: CountShape) -> Result<u64, NumberError> {
    Ok(match shape.validate()? {
        CountShape::Cyclic { n } => tau(n)?,
        CountShape::AbelianPGroup { p, k } => 2 + (p + 1) * u64::from(k - 1),
        CountShape::NonabelianPrq { r, q, .. } => 2 * u64::from(r) + q + 1,
    })
}

/// Number of cyclic subgroups of a CCLT group of the given shape.
pub fn cyclic_subgroup_count_closed_form(shape: CountShape) -> Result<u64, NumberError> {
    Ok(match shape.validate()? {
        CountShape::Cyclic { n } => tau(n)?,
        CountShape::AbelianPGroup { p, k } => u64::from(k - 1) * p + 2,
        CountShape::NonabelianPrq { r, q, .. } => 2 * u64::from(r) + q,
    })
}

/// The four number-level flags for `n`, each with the clause that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumberClass {
    pub n: u64,
    pub cyclic: bool,
    pub abelian: bool,
    pub cclt: bool,
    pub aclt: bool,
    pub reasons: BTreeMap<&'static str, String>,
}

pub fn classify(n: u64) -> Result<NumberClass, NumberError> {
    let f = factorize(n)?;
    let totient = phi(n)?;
    let cyclic = gcd(n, totient) == 1;
    let obstruction = abelian_obstruction(&f);
    let cclt = cclt_clause(n)?;
    let aclt = aclt_clause(n)?;

    let mut reasons = BTreeMap::new();
    reasons.insert("cyclic", format!("gcd(n,phi(n))={}", gcd(n, totient)));
    reasons.insert(
        "abelian",
        match obstruction {
            None => "cube-free, no p | q^k-1".to_string(),
            Some(AbelianObstruction::Cube(p)) => format!("{p}^3 divides n"),
            Some(AbelianObstruction::Divides { p, q, k }) => format!("{p} divides {q}^{k}-1"),
        },
    );
    reasons.insert("cclt", tag(&cclt));
    reasons.insert("aclt", tag(&aclt));
    Ok(NumberClass {
        n,
        cyclic,
        abelian: obstruction.is_none(),
        cclt: cclt != CcltClause::None,
        aclt: aclt != AcltClause::None,
        reasons,
    })
}

fn tag<T: Serialize>(value: &T) -> String {
    serde_json::to_value(value)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

impl NumberClass {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("class serializes")
    }

    pub const CSV_HEADER: &'static str = "n,cyclic,abelian,cclt,aclt";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n, self.cyclic, self.abelian, self.cclt, self.aclt
        )
    }
}

impl fmt::Display for NumberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n = {}: cyclic={} abelian={} cclt={} aclt={}",
            self.n, self.cyclic, self.abelian, self.cclt, self.aclt
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_functions() {
        let f = factorize(360).unwrap();
        assert_eq!(f.factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1).unwrap().factors(), &[]);
        assert_eq!(tau(28).unwrap(), 6);
        assert_eq!(phi(15).unwrap(), 8);
        assert_eq!(prime_set(12).unwrap().into_iter().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(factorize(0), Err(NumberError::Zero));
        assert_eq!(factorize(MAX_N + 1), Err(NumberError::TooLarge(MAX_N + 1)));
    }

    #[test]
    fn tau_and_phi_against_counting() {
        for n in 1..=200u64 {
            assert_eq!(tau(n).unwrap(), divisors(n).len() as u64, "tau({n})");
            let coprime = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(phi(n).unwrap(), coprime, "phi({n})");
        }
    }

    #[test]
    fn cyclic_numbers() {
        assert!(is_cyclic_number(15).unwrap());
        assert!(!is_cyclic_number(4).unwrap());
        for p in [2, 3, 5, 97, 7919] {
            assert!(is_cyclic_number(p).unwrap());
        }
    }

    #[test]
    fn abelian_numbers() {
        assert!(is_abelian_number(45).unwrap());
        assert!(!is_abelian_number(6).unwrap());
        for p in [2u64, 3, 5] {
            assert!(is_abelian_number(p * p).unwrap());
            assert!(!is_abelian_number(p * p * p).unwrap());
        }
        // 3 | 2^2 - 1
        assert!(!is_abelian_number(12).unwrap());
    }

    #[test]
    fn cclt_numbers() {
        assert!(is_cclt_number(4).unwrap());
        assert!(!is_cclt_number(8).unwrap());
        assert!(is_cclt_number(6).unwrap());
        assert!(is_cclt_number(49).unwrap());
        assert!(!is_cclt_number(30).unwrap());
        assert!(is_cclt_number(1).unwrap());
    }

    #[test]
    fn aclt_numbers() {
        assert!(is_aclt_number(16).unwrap());
        assert!(is_aclt_number(28).unwrap());
        assert!(!is_aclt_number(20).unwrap());
        assert!(!is_aclt_number(12).unwrap());
        assert!(!is_aclt_number(32).unwrap());
        assert_eq!(aclt_clause(63).unwrap(), AcltClause::SquareTimesPrimeDivisibility);
        assert_eq!(aclt_clause(44).unwrap(), AcltClause::FourTimesPrimeThreeModFour);
        assert_eq!(aclt_clause(81).unwrap(), AcltClause::SmallPrimePower);
        assert_eq!(aclt_clause(1).unwrap(), AcltClause::AbelianNumber);
    }

    #[test]
    fn g_cclt() {
        assert_eq!(g_cclt_count(6).unwrap(), 2);
        assert_eq!(g_cclt_count(20).unwrap(), 2);
        assert_eq!(g_cclt_count(15).unwrap(), 1);
        assert_eq!(g_cclt_count(18).unwrap(), 1);
        assert_eq!(g_cclt_count(30).unwrap(), 1);
        assert_eq!(g_cclt_count(8), Err(NumberError::PrimePower(8)));
        assert_eq!(g_cclt_count(1), Err(NumberError::PrimePower(1)));
    }

    #[test]
    fn closed_forms() {
        use CountShape::*;
        assert_eq!(subgroup_count_closed_form(Cyclic { n: 28 }).unwrap(), 6);
        assert_eq!(subgroup_count_closed_form(AbelianPGroup { p: 2, k: 3 }).unwrap(), 8);
        assert_eq!(cyclic_subgroup_count_closed_form(AbelianPGroup { p: 2, k: 3 }).unwrap(), 6);
        assert_eq!(subgroup_count_closed_form(NonabelianPrq { p: 2, r: 1, q: 3 }).unwrap(), 6);
        assert_eq!(cyclic_subgroup_count_closed_form(NonabelianPrq { p: 2, r: 1, q: 3 }).unwrap(), 5);
        assert_eq!(cyclic_subgroup_count_closed_form(NonabelianPrq { p: 2, r: 2, q: 5 }).unwrap(), 9);
        assert!(subgroup_count_closed_form(NonabelianPrq { p: 3, r: 1, q: 5 }).is_err());
        assert!(subgroup_count_closed_form(AbelianPGroup { p: 4, k: 3 }).is_err());
        assert!(subgroup_count_closed_form(AbelianPGroup { p: 2, k: 1 }).is_err());
    }

    #[test]
    fn classify_examples() {
        let one = classify(1).unwrap();
        assert!(one.cyclic && one.abelian && one.cclt && one.aclt);
        let six = classify(6).unwrap();
        assert_eq!((six.cyclic, six.abelian, six.cclt, six.aclt), (false, false, true, true));
        let twelve = classify(12).unwrap();
        assert_eq!(
            (twelve.cyclic, twelve.abelian, twelve.cclt, twelve.aclt),
            (false, false, false, false)
        );
        let json: serde_json::Value = serde_json::from_str(&classify(28).unwrap().to_json()).unwrap();
        assert_eq!(json["cclt"], false);
        assert_eq!(json["aclt"], true);
        assert_eq!(json["reasons"]["aclt"], "four-times-prime-three-mod-four");
        assert_eq!(classify(28).unwrap().csv_row(), "28,false,false,false,true");
    }
}

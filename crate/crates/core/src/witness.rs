//! Explicit groups showing that a number is not CCLT or not ACLT.
//!
//! Each construction follows the shape of `n` and names a proper divisor `d`
//! for which the group has no cyclic (resp. abelian) subgroup of order `d`.
//! Whenever the group fits inside the enumeration bound the claim is checked
//! by brute force before the witness is returned.

use serde::Serialize;

use crate::catalog;
use crate::construct::{
    abelian, cyclic, direct_product, elementary_semidirect, metacyclic, smallest_unit_of_order, Matrix,
};
use crate::error::{GroupError, WitnessError};
use crate::group::{CayleyTableJson, FiniteGroup, DEFAULT_ENUMERATION_BOUND};
use crate::numbers::{factorize, is_aclt_number, is_cclt_number, square_times_prime};
use crate::predicates::{is_aclt_group_within, is_cclt_group_within};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Cclt,
    Aclt,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Self::Cclt => "CCLT",
            Self::Aclt => "ACLT",
        }
    }
}

/// Which case of the construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    PrimePower,
    Squarefree,
    RepeatedPrime,
    HighPrimePower,
    HighExponentFactor,
    ThreeOrMorePrimes,
    FourTimesPrimeOneModFour,
    AlternatingTwelve,
    SquareTimesPrime,
    SquareTimesSquare,
    CatalogSearch,
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub n: u64,
    pub kind: Property,
    pub group: FiniteGroup,
    pub failing_divisor: u64,
    pub clause: Clause,
    /// Whether the missing subgroup was confirmed by brute force.
    pub verified: bool,
}

#[derive(Serialize)]
struct WitnessJson {
    n: u64,
    kind: Property,
    clause: Clause,
    failing_divisor: u64,
    verified: bool,
    group: CayleyTableJson,
}

impl Witness {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&WitnessJson {
            n: self.n,
            kind: self.kind,
            clause: self.clause,
            failing_divisor: self.failing_divisor,
            verified: self.verified,
            group: self.group.to_json_value(),
        })
        .expect("witness serializes")
    }

    /// Brute-force check that the group lacks the claimed subgroup.
    pub fn verify_within(&self, bound: usize) -> Result<(), WitnessError> {
        let fail = |reason: String| WitnessError::VerificationFailed { n: self.n, reason };
        let d = self.failing_divisor;
        if self.group.order() as u64 != self.n {
            return Err(fail(format!("group has order {}", self.group.order())));
        }
        if d >= self.n || !self.n.is_multiple_of(d) {
            return Err(fail(format!("{d} is not a proper divisor")));
        }
        let report = match self.kind {
            Property::Cclt => is_cclt_group_within(&self.group, bound)?,
            Property::Aclt => is_aclt_group_within(&self.group, bound)?,
        };
        match report.divisors.get(&(d as usize)) {
            Some(entry) if !entry.found => Ok(()),
            _ => Err(fail(format!(
                "{} has a {} subgroup of order {d}",
                self.group.label(),
                match self.kind {
                    Property::Cclt => "cyclic",
                    Property::Aclt => "abelian",
                }
            ))),
        }
    }
}

fn finish(
    n: u64,
    kind: Property,
    group: FiniteGroup,
    failing_divisor: u64,
    clause: Clause,
    bound: usize,
) -> Result<Witness, WitnessError> {
    let mut w = Witness {
        n,
        kind,
        group,
        failing_divisor,
        clause,
        verified: false,
    };
    if w.group.order() <= bound {
        w.verify_within(bound)?;
        w.verified = true;
    }
    Ok(w)
}

fn pow(p: u64, e: u32) -> usize {
    p.pow(e) as usize
}

fn product_with_cyclic(h: FiniteGroup, rest: usize) -> Result<FiniteGroup, GroupError> {
    if rest == 1 {
        Ok(h)
    } else {
        direct_product(&h, &cyclic(rest)?)
    }
}

/// Smallest `r ≥ 2` with multiplicative order `k` mod `m`.
fn unit(m: usize, k: usize) -> Result<usize, GroupError> {
    smallest_unit_of_order(m as u64, k as u64)
        .map(|r| r as usize)
        .ok_or_else(|| GroupError::InvalidParameters(format!("no unit of order {k} modulo {m}")))
}

/// Lexicographically least 2×2 matrix over `F_p` of prime order `q`.
fn matrix_of_prime_order(p: u64, q: usize) -> Result<Matrix, GroupError> {
    let id = Matrix::identity(2);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = Matrix::new(vec![vec![a, b], vec![c, d]])?;
                    if m != id && m.rank_mod(p) == 2 && m.pow_mod(q, p) == id {
                        return Ok(m);
                    }
                }
            }
        }
    }
    Err(GroupError::InvalidParameters(format!(
        "GL(2,{p}) has no element of order {q}"
    )))
}

/// A nonabelian group of order `q·p^a` with `q | p^a − 1`, `a ≤ 2`: the
/// cyclic extension `C_{p^a} ⋊ C_q` when `q | p − 1`, otherwise `C_p² ⋊ C_q`
/// with an irreducible action.
fn nonabelian_prime_by_square(p: u64, a: u32, q: u64) -> Result<FiniteGroup, GroupError> {
    if (p - 1).is_multiple_of(q) {
        let m = pow(p, a);
        metacyclic(m, q as usize, unit(m, q as usize)?)
    } else {
        elementary_semidirect(p, &matrix_of_prime_order(p, q as usize)?, q as usize)
    }
}

pub fn non_cclt_witness(n: u64) -> Result<Witness, WitnessError> {
    non_cclt_witness_within(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn non_cclt_witness_within(n: u64, bound: usize) -> Result<Witness, WitnessError> {
    if is_cclt_number(n)? {
        return Err(WitnessError::NotApplicable { n, kind: "CCLT" });
    }
    let f = factorize(n)?;
    let kind = Property::Cclt;
    let factors = f.factors();
    if f.is_prime_power() {
        // C_p × C_p × C_{p^{k−2}} has exponent p^{k−2}
        let (p, k) = factors[0];
        let g = abelian(&[p as usize, p as usize, pow(p, k - 2)])?;
        return finish(n, kind, g, p.pow(k - 1), Clause::PrimePower, bound);
    }
    if f.is_squarefree() {
        // a nonabelian C_{p_j} ⋊ C_{p_i} times the rest has no element of order p_i p_j
        let primes: Vec<u64> = f.primes().collect();
        let (pi, pj) = primes
            .iter()
            .flat_map(|&pi| primes.iter().map(move |&pj| (pi, pj)))
            .find(|&(pi, pj)| pi < pj && (pj - 1) % pi == 0)
            .ok_or_else(|| WitnessError::Gap {
                n,
                reason: "no prime pair p | q − 1".into(),
            })?;
        let h = metacyclic(pj as usize, pi as usize, unit(pj as usize, pi as usize)?)?;
        let g = product_with_cyclic(h, (n / (pi * pj)) as usize)?;
        return finish(n, kind, g, pi * pj, Clause::Squarefree, bound);
    }
    // the largest repeated prime p^a: C_p × C_{p^{a−1}} has no element of order p^a
    let &(p, a) = factors.iter().rev().find(|(_, a)| *a >= 2).expect("not squarefree");
    let h = abelian(&[p as usize, pow(p, a - 1)])?;
    let g = product_with_cyclic(h, (n / p.pow(a)) as usize)?;
    finish(n, kind, g, p.pow(a), Clause::RepeatedPrime, bound)
}

pub fn non_aclt_witness(n: u64) -> Result<Witness, WitnessError> {
    non_aclt_witness_within(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn non_aclt_witness_within(n: u64, bound: usize) -> Result<Witness, WitnessError> {
    if is_aclt_number(n)? {
        return Err(WitnessError::NotApplicable { n, kind: "ACLT" });
    }
    let (g, d, clause) = aclt_construction(n)?;
    match finish(n, Property::Aclt, g, d, clause, bound) {
        Err(WitnessError::Gap { .. }) => catalog_witness(n, Property::Aclt, bound),
        other => other,
    }
}

fn aclt_construction(n: u64) -> Result<(FiniteGroup, u64, Clause), WitnessError> {
    let f = factorize(n)?;
    let factors = f.factors().to_vec();
    let primes: Vec<u64> = f.primes().collect();

    if f.is_squarefree() {
        let (pi, pj) = primes
            .iter()
            .flat_map(|&pi| primes.iter().map(move |&pj| (pi, pj)))
            .find(|&(pi, pj)| pi < pj && (pj - 1) % pi == 0)
            .ok_or_else(|| WitnessError::Gap {
                n,
                reason: "no prime pair p | q − 1".into(),
            })?;
        let h = metacyclic(pj as usize, pi as usize, unit(pj as usize, pi as usize)?)?;
        let g = product_with_cyclic(h, (n / (pi * pj)) as usize)?;
        return Ok((g, pi * pj, Clause::Squarefree));
    }

    if f.is_prime_power() {
        let (p, m) = factors[0];
        // m ≥ 5 here: smaller prime powers are ACLT numbers
        let h = if p == 2 {
            let jordan = Matrix::new(vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]])?;
            elementary_semidirect(2, &jordan, 4)?
        } else {
            let m3 = pow(p, 3);
            metacyclic(m3, pow(p, 2), unit(m3, pow(p, 2))?)?
        };
        let g = product_with_cyclic(h, pow(p, m - 5))?;
        return Ok((g, p.pow(m - 1), Clause::HighPrimePower));
    }

    if let Some(&(p, a)) = factors.iter().find(|(_, a)| *a >= 3) {
        // a nonabelian group of order p^a: C_{p^{a−1}} ⋊ C_p
        let h = metacyclic(pow(p, a - 1), p as usize, 1 + pow(p, a - 2))?;
        let g = product_with_cyclic(h, (n / p.pow(a)) as usize)?;
        return Ok((g, p.pow(a), Clause::HighExponentFactor));
    }

    if primes.len() >= 3 {
        for &(pi, ai) in &factors {
            for &(pj, aj) in &factors {
                if pi != pj && (pj.pow(aj) - 1) % pi == 0 {
                    let h = nonabelian_prime_by_square(pj, aj, pi)?;
                    let g = product_with_cyclic(h, (n / (pi * pj.pow(aj))) as usize)?;
                    return Ok((g, pi.pow(ai) * pj.pow(aj), Clause::ThreeOrMorePrimes));
                }
            }
        }
        return Err(WitnessError::Gap {
            n,
            reason: "no prime pair p | q^a − 1".into(),
        });
    }

    if let Some((p, q)) = square_times_prime(&f) {
        return square_times_prime_witness(n, p, q);
    }

    // two primes, both squared
    let (p, q) = (primes[0], primes[1]);
    if (q - 1) % p == 0 && (q - 1) % (p * p) != 0 && (q + 1) % p != 0 && (p * p - 1) % q != 0 {
        // (C_q × C_q) ⋊ C_{p²}, generator acting as a scalar of order p
        let s = unit(q as usize, p as usize)? as u64;
        let scalar = Matrix::new(vec![vec![s, 0], vec![0, s]])?;
        let g = elementary_semidirect(q, &scalar, pow(p, 2))?;
        return Ok((g, p * p * q, Clause::SquareTimesSquare));
    }
    for (x, y) in [(p, q), (q, p)] {
        let sub = x * x * y;
        if !is_aclt_number(sub)? {
            let (h, d, _) = aclt_construction(sub)?;
            let g = direct_product(&h, &cyclic(y as usize)?)?;
            return Ok((g, d * y, Clause::SquareTimesSquare));
        }
    }
    Err(WitnessError::Gap {
        n,
        reason: "no construction for this p²q² shape".into(),
    })
}

fn square_times_prime_witness(n: u64, p: u64, q: u64) -> Result<(FiniteGroup, u64, Clause), WitnessError> {
    let (pu, qu) = (p as usize, q as usize);
    if n == 12 {
        let a4 = elementary_semidirect(2, &Matrix::new(vec![vec![0, 1], vec![1, 1]])?, 3)?;
        return Ok((a4, 6, Clause::AlternatingTwelve));
    }
    if p == 2 {
        if q % 4 == 1 {
            return Ok((metacyclic(qu, 4, unit(qu, 4)?)?, 2 * q, Clause::FourTimesPrimeOneModFour));
        }
    } else if (q - 1).is_multiple_of(p * p) {
        return Ok((metacyclic(qu, pu * pu, unit(qu, pu * pu)?)?, p * q, Clause::SquareTimesPrime));
    } else if (p - 1).is_multiple_of(q) {
        return Ok((metacyclic(pu * pu, qu, unit(pu * pu, qu)?)?, p * q, Clause::SquareTimesPrime));
    } else if (p + 1).is_multiple_of(q) {
        let g = elementary_semidirect(p, &matrix_of_prime_order(p, qu)?, qu)?;
        return Ok((g, p * q, Clause::SquareTimesPrime));
    }
    Err(WitnessError::Gap {
        n,
        reason: format!("no construction for {p}²·{q}"),
    })
}

/// Searches the catalog for a group failing the property, when the order has one.
fn catalog_witness(n: u64, kind: Property, bound: usize) -> Result<Witness, WitnessError> {
    let gap = || WitnessError::Gap {
        n,
        reason: "no construction and no catalog group fails".into(),
    };
    let Ok((groups, _)) = catalog::groups_of_order(n as usize) else {
        return Err(gap());
    };
    for g in groups {
        let report = match kind {
            Property::Cclt => is_cclt_group_within(&g, bound)?,
            Property::Aclt => is_aclt_group_within(&g, bound)?,
        };
        if let Some(&d) = report.missing().first() {
            return finish(n, kind, g, d as u64, Clause::CatalogSearch, bound);
        }
    }
    Err(gap())
}

/// The witness for `kind`, dispatching on the number's class.
pub fn witness(n: u64, kind: Property) -> Result<Witness, WitnessError> {
    match kind {
        Property::Cclt => non_cclt_witness(n),
        Property::Aclt => non_aclt_witness(n),
    }
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_cclt() {
        let w = non_cclt_witness(8).unwrap();
        assert_eq!(w.group.spec(), Some("A2x2x2"));
        assert_eq!(w.failing_divisor, 4);
        assert!(w.verified);
    }

    #[test]
    fn squarefree_cclt() {
        let w = non_cclt_witness(30).unwrap();
        assert_eq!(w.group.spec(), Some("M(3,2,2)xC5"));
        assert_eq!(w.failing_divisor, 6);
        assert!(w.verified);
    }

    #[test]
    fn repeated_prime_cclt() {
        let w = non_cclt_witness(36).unwrap();
        assert_eq!(w.group.spec(), Some("A3x3xC4"));
        assert_eq!(w.failing_divisor, 9);
    }

    #[test]
    fn not_applicable() {
        assert!(matches!(non_cclt_witness(6), Err(WitnessError::NotApplicable { .. })));
        assert!(matches!(non_aclt_witness(28), Err(WitnessError::NotApplicable { .. })));
    }

    #[test]
    fn aclt_cases() {
        let w = non_aclt_witness(20).unwrap();
        assert_eq!(w.group.spec(), Some("M(5,4,2)"));
        assert_eq!(w.failing_divisor, 10);
        let w = non_aclt_witness(32).unwrap();
        assert_eq!(w.failing_divisor, 16);
        assert_eq!(w.clause, Clause::HighPrimePower);
        let w = non_aclt_witness(12).unwrap();
        assert_eq!(w.failing_divisor, 6);
        assert_eq!(w.clause, Clause::AlternatingTwelve);
        let w = non_aclt_witness(36).unwrap();
        assert_eq!(w.failing_divisor, 18);
        assert!(w.verified);
    }

    #[test]
    fn deterministic() {
        let a = non_aclt_witness(60).unwrap();
        let b = non_aclt_witness(60).unwrap();
        assert_eq!(a.group, b.group);
        assert!(a.verified);
    }

    #[test]
    fn json_carries_table() {
        let json = non_cclt_witness(8).unwrap().to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["failing_divisor"], 4);
        assert_eq!(v["clause"], "prime-power");
        assert_eq!(v["group"]["order"], 8);
        assert_eq!(v["group"]["table"].as_array().unwrap().len(), 8);
    }
}

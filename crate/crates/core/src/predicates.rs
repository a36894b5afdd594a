//! Brute-force group properties.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::abelian::subgroup_of_abelian;
use crate::error::GroupError;
use crate::group::{FiniteGroup, DEFAULT_ENUMERATION_BOUND};
use crate::numbers::{divisors, factorize, is_prime};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    /// Any subgroup, every divisor including the order itself.
    Clt,
    /// Cyclic subgroups, proper divisors.
    Cclt,
    /// Abelian subgroups, proper divisors.
    Aclt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorEntry {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

/// For each required divisor, whether a subgroup of that order and kind
/// exists, with its element set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorWitnessReport {
    pub group: String,
    pub kind: WitnessKind,
    pub ok: bool,
    pub divisors: BTreeMap<usize, DivisorEntry>,
}

impl DivisorWitnessReport {
    fn new(g: &FiniteGroup, kind: WitnessKind, entries: impl IntoIterator<Item = (usize, Option<Vec<usize>>)>) -> Self {
        let divisors: BTreeMap<usize, DivisorEntry> = entries
            .into_iter()
            .map(|(d, witness)| {
                (
                    d,
                    DivisorEntry {
                        found: witness.is_some(),
                        witness,
                    },
                )
            })
            .collect();
        Self {
            group: g.label().to_string(),
            kind,
            ok: divisors.values().all(|e| e.found),
            divisors,
        }
    }

    /// Divisors with no subgroup of the required kind, ascending.
    pub fn missing(&self) -> Vec<usize> {
        self.divisors
            .iter()
            .filter(|(_, e)| !e.found)
            .map(|(&d, _)| d)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn check_bound(g: &FiniteGroup, bound: usize) -> Result<(), GroupError> {
    if g.order() > bound {
        Err(GroupError::BoundExceeded {
            order: g.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

fn proper_divisors(n: usize) -> impl Iterator<Item = usize> {
    divisors(n as u64).into_iter().map(|d| d as usize).filter(move |&d| d < n)
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    g.whole().is_abelian()
}

pub fn is_cyclic(g: &FiniteGroup) -> bool {
    g.element_orders().contains(&g.order())
}

pub fn is_clt_group(g: &FiniteGroup) -> Result<DivisorWitnessReport, GroupError> {
    is_clt_group_within(g, DEFAULT_ENUMERATION_BOUND)
}

pub fn is_clt_group_within(g: &FiniteGroup, bound: usize) -> Result<DivisorWitnessReport, GroupError> {
    let subgroups = g.all_subgroups_within(bound)?;
    let entries = divisors(g.order() as u64).into_iter().map(|d| {
        let d = d as usize;
        let witness = subgroups.iter().find(|h| h.order() == d).map(|h| h.elements().to_vec());
        (d, witness)
    });
    Ok(DivisorWitnessReport::new(g, WitnessKind::Clt, entries))
}

pub fn is_cclt_group(g: &FiniteGroup) -> Result<DivisorWitnessReport, GroupError> {
    is_cclt_group_within(g, DEFAULT_ENUMERATION_BOUND)
}

/// A cyclic subgroup of order `d` exists exactly when some element has order
/// divisible by `d`; the witness is generated by a suitable power of it.
pub fn is_cclt_group_within(g: &FiniteGroup, bound: usize) -> Result<DivisorWitnessReport, GroupError> {
    check_bound(g, bound)?;
    let orders = g.element_orders();
    let entries = proper_divisors(g.order()).map(|d| {
        let witness = (0..g.order()).find(|&x| orders[x].is_multiple_of(d)).map(|x| {
            let y = g.pow(x, orders[x] / d);
            g.cyclic_subgroup(y).expect("valid index").elements().to_vec()
        });
        (d, witness)
    });
    Ok(DivisorWitnessReport::new(g, WitnessKind::Cclt, entries.collect::<Vec<_>>()))
}

pub fn is_aclt_group(g: &FiniteGroup) -> Result<DivisorWitnessReport, GroupError> {
    is_aclt_group_within(g, DEFAULT_ENUMERATION_BOUND)
}

pub fn is_aclt_group_within(g: &FiniteGroup, bound: usize) -> Result<DivisorWitnessReport, GroupError> {
    check_bound(g, bound)?;
    let maximal = g.maximal_abelian_subgroups();
    let entries = proper_divisors(g.order()).map(|d| {
        let witness = maximal
            .iter()
            .find(|a| a.order() % d == 0)
            .map(|a| subgroup_of_abelian(a, d).elements().to_vec());
        (d, witness)
    });
    Ok(DivisorWitnessReport::new(g, WitnessKind::Aclt, entries.collect::<Vec<_>>()))
}

/// Some cyclic normal subgroup has a cyclic quotient.
pub fn is_metacyclic(g: &FiniteGroup) -> bool {
    g.all_cyclic_subgroups().iter().any(|h| {
        g.is_normal(h).expect("own subgroup") && is_cyclic(&g.quotient(h).expect("normal"))
    })
}

fn sylows(g: &FiniteGroup) -> Vec<Subgroup<'_>> {
    factorize(g.order() as u64)
        .expect("order ≥ 1")
        .primes()
        .map(|p| g.sylow_subgroup(p).expect("prime"))
        .collect()
}

/// Every Sylow subgroup is cyclic.
pub fn is_z_group(g: &FiniteGroup) -> bool {
    sylows(g).iter().all(Subgroup::is_cyclic)
}

/// Every Sylow subgroup is abelian.
pub fn is_a_group(g: &FiniteGroup) -> bool {
    sylows(g).iter().all(Subgroup::is_abelian)
}

pub fn is_metabelian(g: &FiniteGroup) -> bool {
    g.commutator_subgroup().is_abelian()
}

/// Every maximal subgroup has prime index.
pub fn is_supersolvable(g: &FiniteGroup) -> Result<bool, GroupError> {
    Ok(g
        .maximal_subgroups()?
        .iter()
        .all(|m| is_prime(m.index() as u64)))
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    sylows(g).iter().all(|s| g.is_normal(s).expect("own subgroup"))
}

/// Non-cyclic with every proper subgroup cyclic. Checking maximal subgroups
/// suffices since subgroups of cyclic groups are cyclic.
pub fn is_minimal_noncyclic(g: &FiniteGroup) -> Result<bool, GroupError> {
    if is_cyclic(g) {
        return Ok(false);
    }
    Ok(g.maximal_subgroups()?.iter().all(Subgroup::is_cyclic))
}

pub fn is_minimal_nonabelian(g: &FiniteGroup) -> Result<bool, GroupError> {
    if is_abelian(g) {
        return Ok(false);
    }
    Ok(g.maximal_subgroups()?.iter().all(Subgroup::is_abelian))
}

/// Whether `h × k` is CCLT, decided from the factors: both cyclic, and either
/// coprime orders or the shape `C_p × C_{p^j}`. A trivial factor leaves the
/// other factor unchanged, so then the answer is that factor's own status.
pub fn product_cclt_expected(h: &FiniteGroup, k: &FiniteGroup) -> Result<bool, GroupError> {
    if h.order() == 1 || k.order() == 1 {
        let other = if h.order() == 1 { k } else { h };
        return Ok(is_cclt_group(other)?.ok);
    }
    if !is_cyclic(h) || !is_cyclic(k) {
        return Ok(false);
    }
    let (a, b) = (h.order() as u64, k.order() as u64);
    if crate::numbers::gcd(a, b) == 1 {
        return Ok(true);
    }
    let (small, large) = (a.min(b), a.max(b));
    let large = factorize(large).expect("order ≥ 1");
    Ok(is_prime(small) && large.is_prime_power() && large.smallest_prime() == Some(small))
}

/// Whether `h × k` is ACLT, decided from the factors: both ACLT, one abelian,
/// and when the other is nonabelian, every prime dividing the abelian factor's
/// order also divides the nonabelian one's.
pub fn product_aclt_expected(h: &FiniteGroup, k: &FiniteGroup) -> Result<bool, GroupError> {
    let (h_abelian, k_abelian) = (is_abelian(h), is_abelian(k));
    if h_abelian && k_abelian {
        return Ok(true);
    }
    if !h_abelian && !k_abelian {
        return Ok(false);
    }
    let (ab, non) = if h_abelian { (h, k) } else { (k, h) };
    if !is_aclt_group(non)?.ok {
        return Ok(false);
    }
    let non_order = non.order() as u64;
    Ok(factorize(ab.order() as u64)
        .expect("order ≥ 1")
        .primes()
        .all(|p| non_order.is_multiple_of(p)))
}

pub fn count_subgroups(g: &FiniteGroup) -> Result<usize, GroupError> {
    Ok(g.all_subgroups()?.len())
}

pub fn count_cyclic_subgroups(g: &FiniteGroup) -> usize {
    g.all_cyclic_subgroups().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        abelian, cyclic, dicyclic, dihedral, direct_product, elementary_semidirect, from_permutations, Matrix,
        Permutation,
    };

    fn s4() -> FiniteGroup {
        from_permutations(
            4,
            &[
                Permutation::from_cycles(4, &[vec![1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn a4() -> FiniteGroup {
        elementary_semidirect(2, &Matrix::new(vec![vec![0, 1], vec![1, 1]]).unwrap(), 3).unwrap()
    }

    #[test]
    fn abelian_and_cyclic() {
        assert!(is_abelian(&cyclic(7).unwrap()) && is_cyclic(&cyclic(7).unwrap()));
        let v4 = abelian(&[2, 2]).unwrap();
        assert!(is_abelian(&v4) && !is_cyclic(&v4));
        let s3 = dihedral(3).unwrap();
        assert!(!is_abelian(&s3) && !is_cyclic(&s3));
    }

    #[test]
    fn clt_reports() {
        assert!(is_clt_group(&s4()).unwrap().ok);
        let report = is_clt_group(&a4()).unwrap();
        assert!(!report.ok);
        assert_eq!(report.missing(), vec![6]);
        assert!(report.divisors.contains_key(&12));
        assert!(is_clt_group(&abelian(&[2, 6]).unwrap()).unwrap().ok);
    }

    #[test]
    fn cclt_and_aclt_reports() {
        let report = is_cclt_group(&abelian(&[2, 2, 2]).unwrap()).unwrap();
        assert_eq!(report.missing(), vec![4]);
        assert!(!report.divisors.contains_key(&8));
        assert!(is_cclt_group(&dicyclic(5).unwrap()).unwrap().ok);
        assert!(is_cclt_group(&dihedral(3).unwrap()).unwrap().ok);
        assert_eq!(is_aclt_group(&a4()).unwrap().missing(), vec![6]);
    }

    #[test]
    fn witnesses_are_genuine() {
        let g = dicyclic(5).unwrap();
        for (kind, report) in [
            ("cclt", is_cclt_group(&g).unwrap()),
            ("aclt", is_aclt_group(&g).unwrap()),
            ("clt", is_clt_group(&g).unwrap()),
        ] {
            for (&d, entry) in &report.divisors {
                let h = Subgroup::new(&g, entry.witness.clone().unwrap()).unwrap();
                assert_eq!(h.order(), d, "{kind}");
                if kind == "cclt" {
                    assert!(h.is_cyclic());
                }
                if kind == "aclt" {
                    assert!(h.is_abelian());
                }
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let json = is_cclt_group(&abelian(&[2, 2]).unwrap()).unwrap().to_json();
        assert_eq!(
            json,
            r#"{"group":"A2x2","kind":"cclt","ok":true,"divisors":{"1":{"found":true,"witness":[0]},"2":{"found":true,"witness":[0,1]}}}"#
        );
        let json = is_cclt_group(&abelian(&[2, 2, 2]).unwrap()).unwrap().to_json();
        assert!(json.contains(r#""4":{"found":false}"#), "{json}");
    }

    #[test]
    fn metacyclic_predicate() {
        assert!(is_metacyclic(&cyclic(12).unwrap()));
        assert!(is_metacyclic(&abelian(&[2, 2]).unwrap()));
        assert!(!is_metacyclic(&abelian(&[2, 2, 2]).unwrap()));
    }

    #[test]
    fn sylow_predicates() {
        assert!(is_z_group(&dihedral(15).unwrap()));
        assert!(!is_z_group(&dicyclic(2).unwrap()));
        assert!(is_a_group(&dihedral(3).unwrap()));
        assert!(!is_nilpotent(&dihedral(3).unwrap()));
        assert!(is_nilpotent(&dihedral(4).unwrap()));
        assert!(is_nilpotent(&cyclic(6).unwrap()));
    }

    #[test]
    fn solvability_flavours() {
        assert!(is_metabelian(&dihedral(3).unwrap()));
        assert!(!is_metabelian(&s4()));
        assert!(!is_supersolvable(&a4()).unwrap());
        assert!(is_supersolvable(&dihedral(3).unwrap()).unwrap());
        assert!(is_supersolvable(&dihedral(8).unwrap()).unwrap());
    }

    #[test]
    fn minimal_groups() {
        assert!(is_minimal_noncyclic(&abelian(&[2, 2]).unwrap()).unwrap());
        assert!(!is_minimal_noncyclic(&cyclic(4).unwrap()).unwrap());
        assert!(is_minimal_nonabelian(&dicyclic(2).unwrap()).unwrap());
        assert!(!is_minimal_nonabelian(&s4()).unwrap());
    }

    #[test]
    fn product_rules() {
        let (c3, c5) = (cyclic(3).unwrap(), cyclic(5).unwrap());
        assert!(product_cclt_expected(&c3, &c5).unwrap());
        let s3 = dihedral(3).unwrap();
        assert!(!product_aclt_expected(&s3, &s3).unwrap());
        assert!(product_aclt_expected(&dihedral(14).unwrap(), &cyclic(28).unwrap()).unwrap());
        assert!(product_cclt_expected(&s3, &cyclic(1).unwrap()).unwrap());
        assert!(product_cclt_expected(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap());
        assert!(!product_cclt_expected(&cyclic(4).unwrap(), &cyclic(4).unwrap()).unwrap());
        let brute = is_aclt_group(&direct_product(&s3, &s3).unwrap()).unwrap();
        assert_eq!(brute.missing(), vec![12, 18]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_subgroups(&cyclic(28).unwrap()).unwrap(), 6);
        assert_eq!(count_subgroups(&abelian(&[2, 4]).unwrap()).unwrap(), 8);
        assert_eq!(count_subgroups(&dicyclic(5).unwrap()).unwrap(), 10);
        assert_eq!(count_cyclic_subgroups(&dicyclic(5).unwrap()), 9);
    }

    #[test]
    fn bound_is_enforced() {
        let big = cyclic(401).unwrap();
        assert!(is_cclt_group(&big).is_err());
        assert!(is_cclt_group_within(&big, 500).unwrap().ok);
    }
}

//! Brute-force verification suites: each check compares an arithmetic or
//! structural claim against exhaustive computation on explicit groups.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::catalog::{self, Completeness};
use crate::construct::{dicyclic, dihedral, direct_product, metacyclic, smallest_unit_of_order};
use crate::group::{FiniteGroup, DEFAULT_ENUMERATION_BOUND};
use crate::numbers::{
    classify, cyclic_subgroup_count_closed_form, factorize, g_cclt_count, is_aclt_number, is_abelian_number,
    is_cclt_number, is_cyclic_number, is_prime, subgroup_count_closed_form, CountShape,
};
use crate::predicates::{
    count_cyclic_subgroups, count_subgroups, is_abelian, is_aclt_group_within, is_cclt_group_within, is_cyclic,
    is_metabelian, is_metacyclic, is_minimal_nonabelian, is_minimal_noncyclic, is_supersolvable, is_z_group,
    product_aclt_expected, product_cclt_expected,
};
use crate::spec::GroupSpec;
use crate::witness::{non_aclt_witness_within, non_cclt_witness_within, Property, Witness};
use crate::xgraph::{self, brute_edge_check};

/// Failure messages kept per check; the count of further failures is still reported.
const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Largest group order drawn from the catalog.
    pub max_order: usize,
    /// Largest group order that may be enumerated by brute force.
    pub bound: usize,
    /// Include the expensive order-243 witness.
    pub slow: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            max_order: catalog::MAX_CATALOG_ORDER,
            bound: DEFAULT_ENUMERATION_BOUND,
            slow: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// Number of individual cases examined.
    pub checked: usize,
    pub failures: Vec<String>,
    pub omitted_failures: usize,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
            omitted_failures: 0,
        }
    }

    fn case(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(message());
        }
    }

    fn fail(&mut self, message: String) {
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(message);
        } else {
            self.omitted_failures += 1;
        }
    }

    fn absorb(&mut self, results: Vec<Result<(), String>>) {
        for r in results {
            self.checked += 1;
            if let Err(m) = r {
                self.fail(m);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status}  {} ({} cases)", self.name, self.checked)?;
        for m in &self.failures {
            write!(f, "\n      {m}")?;
        }
        if self.omitted_failures > 0 {
            write!(f, "\n      ... and {} more", self.omitted_failures)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    CcltNumbers,
    AcltNumbers,
    SubgroupCounts,
    Hereditary,
    Structure,
    Products,
    XgraphClaims,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "cclt-numbers",
        "aclt-numbers",
        "subgroup-counts",
        "hereditary",
        "structure",
        "products",
        "xgraph-claims",
        "all",
    ];

    const EACH: [Suite; 7] = [
        Suite::CcltNumbers,
        Suite::AcltNumbers,
        Suite::SubgroupCounts,
        Suite::Hereditary,
        Suite::Structure,
        Suite::Products,
        Suite::XgraphClaims,
    ];

    pub fn run(self, settings: &Settings) -> Vec<Check> {
        match self {
            Suite::CcltNumbers => vec![
                cclt_number_ground_truth(settings),
                cyclic_number_ground_truth(settings),
                g_cclt_formula(settings),
                dihedral_dicyclic_criteria(),
                cclt_witnesses(settings),
                number_containments(500),
            ],
            Suite::AcltNumbers => vec![
                aclt_number_ground_truth(settings),
                abelian_number_ground_truth(settings),
                aclt_witnesses(settings),
                order_16_abelian_subgroups(),
            ],
            Suite::SubgroupCounts => vec![counting_formulas(settings)],
            Suite::Hereditary => vec![hereditary_theorems(settings)],
            Suite::Structure => vec![structure_theorems(settings), catalog_consistency(settings)],
            Suite::Products => vec![product_theorems(settings)],
            Suite::XgraphClaims => vec![order_28_graph(), graph_claims(settings)],
            Suite::All => Suite::EACH.iter().flat_map(|s| s.run(settings)).collect(),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| Suite::EACH.get(i).copied().unwrap_or(Suite::All))
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))
    }
}

fn complete_orders(settings: &Settings) -> Vec<usize> {
    catalog::complete_orders()
        .into_iter()
        .filter(|&n| n <= settings.max_order)
        .collect()
}

fn groups(n: usize) -> Vec<FiniteGroup> {
    catalog::groups_of_order(n).expect("catalog order").0
}

/// Every catalog group up to `max_order`, complete and partial entries alike.
fn catalog_groups(settings: &Settings) -> Vec<FiniteGroup> {
    catalog::supported_orders()
        .into_iter()
        .filter(|&(n, _)| n <= settings.max_order.min(settings.bound))
        .flat_map(|(n, _)| groups(n))
        .collect()
}

fn cclt(g: &FiniteGroup, bound: usize) -> Result<bool, String> {
    is_cclt_group_within(g, bound).map(|r| r.ok).map_err(|e| e.to_string())
}

fn aclt(g: &FiniteGroup, bound: usize) -> Result<bool, String> {
    is_aclt_group_within(g, bound).map(|r| r.ok).map_err(|e| e.to_string())
}

fn number_ground_truth(
    name: &'static str,
    settings: &Settings,
    arithmetic: fn(u64) -> bool,
    brute: impl Fn(&FiniteGroup) -> Result<bool, String> + Sync,
) -> Check {
    let mut check = Check::new(name);
    let results: Vec<Result<(), String>> = complete_orders(settings)
        .into_par_iter()
        .map(|n| {
            let expected = arithmetic(n as u64);
            let mut all = true;
            for g in groups(n) {
                all &= brute(&g)?;
            }
            if all == expected {
                Ok(())
            } else {
                Err(format!("n = {n}: arithmetic says {expected}, brute force says {all}"))
            }
        })
        .collect();
    check.absorb(results);
    check
}

pub fn cclt_number_ground_truth(settings: &Settings) -> Check {
    let bound = settings.bound;
    number_ground_truth(
        "CCLT numbers agree with brute force on every complete catalog order",
        settings,
        |n| is_cclt_number(n).expect("n ≥ 1"),
        move |g| cclt(g, bound),
    )
}

pub fn aclt_number_ground_truth(settings: &Settings) -> Check {
    let bound = settings.bound;
    number_ground_truth(
        "ACLT numbers agree with brute force on every complete catalog order",
        settings,
        |n| is_aclt_number(n).expect("n ≥ 1"),
        move |g| aclt(g, bound),
    )
}

pub fn cyclic_number_ground_truth(settings: &Settings) -> Check {
    number_ground_truth(
        "cyclic numbers agree with brute force on every complete catalog order",
        settings,
        |n| is_cyclic_number(n).expect("n ≥ 1"),
        |g| Ok(is_cyclic(g)),
    )
}

pub fn abelian_number_ground_truth(settings: &Settings) -> Check {
    number_ground_truth(
        "abelian numbers agree with brute force on every complete catalog order",
        settings,
        |n| is_abelian_number(n).expect("n ≥ 1"),
        |g| Ok(is_abelian(g)),
    )
}

fn count_case(g: &FiniteGroup, shape: CountShape) -> Result<(), String> {
    let subgroups = count_subgroups(g).map_err(|e| e.to_string())? as u64;
    let cyclic = count_cyclic_subgroups(g) as u64;
    let expected = subgroup_count_closed_form(shape).map_err(|e| e.to_string())?;
    let expected_cyclic = cyclic_subgroup_count_closed_form(shape).map_err(|e| e.to_string())?;
    if (subgroups, cyclic) == (expected, expected_cyclic) {
        Ok(())
    } else {
        Err(format!(
            "{}: {subgroups} subgroups / {cyclic} cyclic, formula gives {expected} / {expected_cyclic}",
            g.label()
        ))
    }
}

/// The nonabelian CCLT group of order `p^r q`: `C_q ⋊ C_{p^r}` with kernel of index `p`.
pub fn nonabelian_cclt_prq(p: u64, r: u32, q: u64) -> Option<FiniteGroup> {
    let s = smallest_unit_of_order(q, p)?;
    metacyclic(q as usize, p.pow(r) as usize, s as usize).ok()
}

pub fn counting_formulas(settings: &Settings) -> Check {
    let mut check = Check::new("subgroup and cyclic-subgroup counts match the closed forms");
    let mut cases: Vec<(FiniteGroup, CountShape)> = Vec::new();
    for n in 1..=100u64 {
        cases.push((crate::construct::cyclic(n as usize).expect("n ≥ 1"), CountShape::Cyclic { n }));
    }
    for p in [2u64, 3, 5] {
        for k in 2u32.. {
            if p.pow(k) > 250 {
                break;
            }
            let g = crate::construct::abelian(&[p as usize, p.pow(k - 1) as usize]).expect("small");
            cases.push((g, CountShape::AbelianPGroup { p, k }));
        }
    }
    let primes: Vec<u64> = (2..200).filter(|&x| is_prime(x)).collect();
    for &p in &primes {
        for &q in &primes {
            if p == q || (q - 1) % p != 0 {
                continue;
            }
            for r in 1u32.. {
                if p.pow(r) * q > 200 {
                    break;
                }
                let g = nonabelian_cclt_prq(p, r, q).expect("p | q − 1");
                cases.push((g, CountShape::NonabelianPrq { p, r, q }));
            }
        }
    }
    let results: Vec<Result<(), String>> = cases
        .par_iter()
        .map(|(g, shape)| {
            if g.order() > settings.bound {
                return Err(format!("{} exceeds the enumeration bound", g.label()));
            }
            count_case(g, *shape)
        })
        .collect();
    check.absorb(results);
    // every nonabelian CCLT catalog group of order p^r q is the group above
    for n in complete_orders(settings) {
        let f = factorize(n as u64).expect("n ≥ 1");
        let shape = match *f.factors() {
            [(a, ea), (b, 1)] if (b - 1) % a == 0 => Some((a, ea, b)),
            [(a, 1), (b, eb)] if (a - 1) % b == 0 => Some((b, eb, a)),
            _ => None,
        };
        let Some((p, r, q)) = shape else { continue };
        let reference = nonabelian_cclt_prq(p, r, q).expect("p | q − 1");
        for g in groups(n) {
            if !is_abelian(&g) && cclt(&g, settings.bound) == Ok(true) {
                check.case(g.is_isomorphic(&reference), || {
                    format!("{} is nonabelian CCLT but not {}", g.label(), reference.label())
                });
            }
        }
    }
    check
}

pub fn g_cclt_formula(settings: &Settings) -> Check {
    let mut check = Check::new("CCLT group counts per order match the formula and prime-power values");
    let results: Vec<(usize, Result<usize, String>)> = complete_orders(settings)
        .into_par_iter()
        .map(|n| {
            let mut count = 0;
            for g in groups(n) {
                match cclt(&g, settings.bound) {
                    Ok(true) => count += 1,
                    Ok(false) => {}
                    Err(e) => return (n, Err(e)),
                }
            }
            (n, Ok(count))
        })
        .collect();
    for (n, count) in results {
        let count = match count {
            Ok(c) => c,
            Err(e) => {
                check.case(false, || format!("n = {n}: {e}"));
                continue;
            }
        };
        let f = factorize(n as u64).expect("n ≥ 1");
        if f.prime_count() >= 2 {
            let expected = g_cclt_count(n as u64).expect("two primes") as usize;
            check.case(count == expected, || format!("n = {n}: {count} CCLT groups, formula gives {expected}"));
        }
        match n {
            8 => check.case(count == 4, || format!("order 8: {count} CCLT groups, expected exactly 4")),
            16 => check.case(count >= 6, || format!("order 16: {count} CCLT groups, expected at least 6")),
            27 => check.case(count >= 3, || format!("order 27: {count} CCLT groups, expected at least 3")),
            _ => {}
        }
    }
    check
}

pub fn dihedral_dicyclic_criteria() -> Check {
    let mut check = Check::new("dihedral and dicyclic CCLT/ACLT criteria hold");
    let is_two_power = |n: usize| n.is_power_of_two();
    let prime = |n: usize| is_prime(n as u64);
    let twice_prime = |n: usize| n.is_multiple_of(2) && prime(n / 2);
    for n in 2..=32 {
        let g = dihedral(n).expect("n ≥ 2");
        let expect_cclt = prime(n) || is_two_power(n);
        let expect_aclt = expect_cclt || twice_prime(n);
        let (c, a) = (cclt(&g, usize::MAX), aclt(&g, usize::MAX));
        check.case(c == Ok(expect_cclt), || format!("D{n}: CCLT {c:?}, expected {expect_cclt}"));
        check.case(a == Ok(expect_aclt), || format!("D{n}: ACLT {a:?}, expected {expect_aclt}"));
    }
    for n in 2..=16 {
        let g = dicyclic(n).expect("n ≥ 2");
        // the Sylow 2-subgroup of Dic_n for non-2-power even n is quaternion of
        // order 8, so the ACLT condition coincides with the CCLT one
        let expected = prime(n) || is_two_power(n);
        let (c, a) = (cclt(&g, usize::MAX), aclt(&g, usize::MAX));
        check.case(c == Ok(expected), || format!("Dic{n}: CCLT {c:?}, expected {expected}"));
        check.case(a == Ok(expected), || format!("Dic{n}: ACLT {a:?}, expected {expected}"));
    }
    check
}

fn subgroup_pairs_isomorphic(g: &FiniteGroup, bound: usize) -> Result<bool, String> {
    let subgroups = g.all_subgroups_within(bound).map_err(|e| e.to_string())?;
    let mut by_order: std::collections::BTreeMap<usize, Vec<FiniteGroup>> = Default::default();
    for h in &subgroups {
        by_order.entry(h.order()).or_default().push(h.to_group());
    }
    Ok(by_order
        .values()
        .all(|hs| hs.iter().skip(1).all(|h| h.is_isomorphic(&hs[0]))))
}

/// Checks on one catalog group that follow from its CCLT / ACLT status.
fn structure_case(g: &FiniteGroup, bound: usize) -> Vec<Result<(), String>> {
    let mut out = Vec::new();
    let label = g.label();
    let mut claim = |ok: Result<bool, String>, what: &str| {
        out.push(match ok {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("{label}: {what}")),
            Err(e) => Err(format!("{label}: {e}")),
        });
    };
    let order = factorize(g.order() as u64).expect("order ≥ 1");
    let (is_cclt, is_aclt) = match (cclt(g, bound), aclt(g, bound)) {
        (Ok(c), Ok(a)) => (c, a),
        (Err(e), _) | (_, Err(e)) => {
            claim(Err(e), "");
            return out;
        }
    };
    if is_cclt {
        claim(Ok(is_metacyclic(g)), "CCLT but not metacyclic");
        if !order.is_prime_power() {
            claim(Ok(is_z_group(g)), "CCLT of non-prime-power order but not a Z-group");
            if !is_cyclic(g) {
                claim(
                    is_minimal_noncyclic(g).map_err(|e| e.to_string()),
                    "CCLT, neither cyclic nor of prime-power order, but not minimal non-cyclic",
                );
            }
        }
    }
    if is_z_group(g) {
        claim(
            subgroup_pairs_isomorphic(g, bound),
            "Z-group with non-isomorphic subgroups of equal order",
        );
    }
    if is_aclt {
        claim(Ok(is_metabelian(g)), "ACLT but not metabelian");
        claim(is_supersolvable(g).map_err(|e| e.to_string()), "ACLT but not supersolvable");
        if !is_abelian(g) {
            claim(Ok(order.prime_count() <= 2), "nonabelian ACLT with three or more primes");
            if order.prime_count() == 2 {
                let p = order.smallest_prime().expect("two primes");
                let q = order.largest_prime().expect("two primes");
                let k = g.sylow_subgroup(q).expect("prime");
                claim(Ok(g.is_normal(&k).expect("own subgroup")), "Sylow subgroup for the largest prime not normal");
                claim(
                    Ok(g.commutator_subgroup().is_subgroup_of(&k)),
                    "commutator subgroup not inside the largest-prime Sylow subgroup",
                );
                let c = g.centralizer(&k).expect("own subgroup");
                claim(
                    Ok(c.is_abelian() && c.index() == p as usize),
                    "centralizer of the largest-prime Sylow subgroup is not abelian of smallest-prime index",
                );
            }
        }
    }
    out
}

pub fn structure_theorems(settings: &Settings) -> Check {
    let mut check = Check::new("structural consequences of CCLT and ACLT hold on every catalog group");
    let bound = settings.bound;
    let results: Vec<Result<(), String>> = catalog_groups(settings)
        .par_iter()
        .flat_map_iter(|g| structure_case(g, bound))
        .collect();
    check.absorb(results);
    check
}

fn hereditary_case(g: &FiniteGroup, bound: usize) -> Vec<Result<(), String>> {
    let (is_cclt, is_aclt) = match (cclt(g, bound), aclt(g, bound)) {
        (Ok(c), Ok(a)) => (c, a),
        (Err(e), _) | (_, Err(e)) => return vec![Err(format!("{}: {e}", g.label()))],
    };
    if !is_cclt && !is_aclt {
        return Vec::new();
    }
    let subgroups = match g.all_subgroups_within(bound) {
        Ok(s) => s,
        Err(e) => return vec![Err(format!("{}: {e}", g.label()))],
    };
    let mut out = Vec::new();
    for h in &subgroups {
        let sub = h.to_group();
        if is_cclt {
            out.push(match cclt(&sub, bound) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("{}: subgroup {:?} not CCLT", g.label(), h.elements())),
                Err(e) => Err(e),
            });
            if g.is_normal(h).expect("own subgroup") {
                let quotient = g.quotient(h).expect("normal");
                out.push(match cclt(&quotient, bound) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err(format!("{}: quotient by {:?} not CCLT", g.label(), h.elements())),
                    Err(e) => Err(e),
                });
            }
        }
        if is_aclt {
            out.push(match aclt(&sub, bound) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("{}: subgroup {:?} not ACLT", g.label(), h.elements())),
                Err(e) => Err(e),
            });
        }
    }
    out
}

pub fn hereditary_theorems(settings: &Settings) -> Check {
    let mut check = Check::new("subgroups and quotients of CCLT groups are CCLT; subgroups of ACLT groups are ACLT");
    let bound = settings.bound;
    let results: Vec<Result<(), String>> = catalog_groups(settings)
        .par_iter()
        .flat_map_iter(|g| hereditary_case(g, bound))
        .collect();
    check.absorb(results);
    check
}

pub fn product_theorems(settings: &Settings) -> Check {
    let mut check = Check::new("direct-product rules agree with brute force on catalog pairs");
    let groups = catalog_groups(settings);
    let mut pairs = Vec::new();
    for i in 0..groups.len() {
        for j in i..groups.len() {
            if groups[i].order() * groups[j].order() <= settings.bound {
                pairs.push((i, j));
            }
        }
    }
    let bound = settings.bound;
    let results: Vec<Result<(), String>> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (h, k) = (&groups[i], &groups[j]);
            let product = match direct_product(h, k) {
                Ok(p) => p,
                Err(e) => return vec![Err(e.to_string())],
            };
            let name = format!("{} × {}", h.label(), k.label());
            let compare = |kind: &str, expected: Result<bool, crate::GroupError>, actual: Result<bool, String>| {
                match (expected, actual) {
                    (Ok(e), Ok(a)) if e == a => Ok(()),
                    (Ok(e), Ok(a)) => Err(format!("{name}: {kind} rule says {e}, brute force says {a}")),
                    (Err(e), _) => Err(format!("{name}: {e}")),
                    (_, Err(e)) => Err(format!("{name}: {e}")),
                }
            };
            vec![
                compare("CCLT", product_cclt_expected(h, k), cclt(&product, bound)),
                compare("ACLT", product_aclt_expected(h, k), aclt(&product, bound)),
            ]
        })
        .collect();
    check.absorb(results);
    check
}

fn witness_check(name: &'static str, settings: &Settings, property: Property) -> Check {
    let mut check = Check::new(name);
    let mut orders: Vec<u64> = (1..=settings.max_order as u64)
        .filter(|&n| match property {
            Property::Cclt => !is_cclt_number(n).expect("n ≥ 1"),
            Property::Aclt => !is_aclt_number(n).expect("n ≥ 1"),
        })
        .collect();
    if settings.slow && property == Property::Aclt {
        orders.push(243);
    }
    let bound = settings.bound.max(orders.iter().copied().max().unwrap_or(0) as usize);
    let results: Vec<Result<(), String>> = orders
        .par_iter()
        .map(|&n| {
            let w: Witness = match property {
                Property::Cclt => non_cclt_witness_within(n, bound),
                Property::Aclt => non_aclt_witness_within(n, bound),
            }
            .map_err(|e| e.to_string())?;
            if w.verified {
                Ok(())
            } else {
                Err(format!("n = {n}: witness {} was not verified", w.group.label()))
            }
        })
        .collect();
    check.absorb(results);
    check
}

pub fn cclt_witnesses(settings: &Settings) -> Check {
    witness_check("every non-CCLT order has a verified witness group", settings, Property::Cclt)
}

pub fn aclt_witnesses(settings: &Settings) -> Check {
    witness_check("every non-ACLT order has a verified witness group", settings, Property::Aclt)
}

pub fn order_28_graph() -> Check {
    let mut check = Check::new("order-28 graph has the expected vertices and five edges");
    match xgraph::build(28) {
        Ok(x) => {
            let names: Vec<String> = x.vertices.iter().map(GroupSpec::to_string).collect();
            check.case(names == ["C28", "C2xC14", "D14", "Dic7"], || format!("vertices {names:?}"));
            check.case(x.edges == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], || format!("edges {:?}", x.edges));
            check.case(!x.complete && x.connected, || "expected connected and not complete".into());
        }
        Err(e) => check.case(false, || e.to_string()),
    }
    check
}

pub fn graph_claims(settings: &Settings) -> Check {
    let mut check = Check::new("graph completeness and connectivity match the number classes");
    let results: Vec<Result<(), String>> = complete_orders(settings)
        .into_par_iter()
        .flat_map_iter(|n| {
            let x = match xgraph::build(n) {
                Ok(x) => x,
                Err(e) => return vec![Err(format!("n = {n}: {e}"))],
            };
            let class = classify(n as u64).expect("n ≥ 1");
            let mut out = vec![
                if x.complete == (class.abelian || class.cclt) {
                    Ok(())
                } else {
                    Err(format!("n = {n}: complete = {}", x.complete))
                },
                if x.connected == class.aclt {
                    Ok(())
                } else {
                    Err(format!("n = {n}: connected = {}", x.connected))
                },
            ];
            if class.aclt {
                let star = (1..x.vertices.len()).all(|j| x.has_edge(0, j));
                out.push(if star {
                    Ok(())
                } else {
                    Err(format!("n = {n}: cyclic group not adjacent to every vertex"))
                });
            }
            if n * n <= settings.bound {
                let gs = groups(n);
                for i in 0..gs.len() {
                    for j in i + 1..gs.len() {
                        out.push(match brute_edge_check(&gs[i], &gs[j]) {
                            Ok(b) if b == x.has_edge(i, j) => Ok(()),
                            Ok(b) => Err(format!(
                                "n = {n}: {} × {} brute force {b}, rule {}",
                                gs[i].label(),
                                gs[j].label(),
                                x.has_edge(i, j)
                            )),
                            Err(e) => Err(e.to_string()),
                        });
                    }
                }
            }
            out
        })
        .collect();
    check.absorb(results);
    check
}

pub fn number_containments(limit: u64) -> Check {
    let mut check = Check::new("cyclic ⇒ CCLT ⇒ ACLT and abelian ⇒ ACLT at the number level");
    for n in 1..=limit {
        let c = classify(n).expect("n ≥ 1");
        check.case(!c.cyclic || c.cclt, || format!("n = {n}: cyclic but not CCLT"));
        check.case(!c.cclt || c.aclt, || format!("n = {n}: CCLT but not ACLT"));
        check.case(!c.abelian || c.aclt, || format!("n = {n}: abelian but not ACLT"));
    }
    check
}

/// Minimal non-abelian catalog groups that are not ACLT. The alternating
/// group of order 12 is one: its proper subgroups are abelian, yet it has no
/// subgroup of order 6.
pub fn minimal_nonabelian_non_aclt(settings: &Settings) -> Vec<String> {
    catalog_groups(settings)
        .par_iter()
        .filter(|g| is_minimal_nonabelian(g).unwrap_or(false) && aclt(g, settings.bound) == Ok(false))
        .map(|g| g.label().to_string())
        .collect()
}

pub fn order_16_abelian_subgroups() -> Check {
    let mut check = Check::new("every group of order 16 has an abelian subgroup of order 8");
    for g in groups(16) {
        check.case(g.abelian_subgroup_of_order(8).is_some(), || g.label().to_string());
    }
    check
}

/// Pairwise non-isomorphism within each catalog order, and recipe counts
/// equal to the fixture for complete orders.
pub fn catalog_consistency(settings: &Settings) -> Check {
    let mut check = Check::new("catalog entries are pairwise non-isomorphic and match the fixture counts");
    let results: Vec<Result<(), String>> = catalog::supported_orders()
        .into_par_iter()
        .filter(|&(n, _)| n <= settings.max_order)
        .flat_map_iter(|(n, completeness)| {
            let entry = catalog::entry(n).expect("supported");
            let gs = groups(n);
            let mut out = Vec::new();
            for i in 0..gs.len() {
                for j in i + 1..gs.len() {
                    out.push(if gs[i].is_isomorphic(&gs[j]) {
                        Err(format!("{} ≅ {}", gs[i].label(), gs[j].label()))
                    } else {
                        Ok(())
                    });
                }
            }
            if completeness == Completeness::Complete {
                out.push(if Some(gs.len()) == entry.fixture_count {
                    Ok(())
                } else {
                    Err(format!("n = {n}: {} recipes, fixture {:?}", gs.len(), entry.fixture_count))
                });
            }
            out
        })
        .collect();
    check.absorb(results);
    check
}

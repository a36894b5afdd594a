use proptest::prelude::*;

use gclt_core::catalog::{self, Completeness, MAX_CATALOG_ORDER};
use gclt_core::construct::{abelian, cyclic, dicyclic, dihedral, direct_product, metacyclic};
use gclt_core::numbers::{classify, factorize, is_cyclic_number};
use gclt_core::predicates::{count_subgroups, is_abelian, is_aclt_group, is_minimal_nonabelian};
use gclt_core::verify::{self, Settings};
use gclt_core::{FiniteGroup, GroupSpec};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn naive_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn partitions(k: u32) -> u64 {
    fn count(k: u32, max: u32) -> u64 {
        if k == 0 {
            return 1;
        }
        (1..=max.min(k)).map(|part| count(k - part, part)).sum()
    }
    count(k, k)
}

/// Number of groups of squarefree order, summed over the possible kernel orders.
fn squarefree_group_count(n: u64) -> u64 {
    let primes: Vec<u64> = factorize(n).unwrap().primes().collect();
    let mut total = 0;
    for m in (1..=n).filter(|m| n.is_multiple_of(*m)) {
        let mut product = 1;
        for &p in primes.iter().filter(|&&p| (n / m).is_multiple_of(p)) {
            let c = primes.iter().filter(|&&q| m % q == 0 && q % p == 1).count() as u32;
            product *= (p.pow(c) - 1) / (p - 1);
        }
        total += product;
    }
    total
}

fn check_axioms(g: &FiniteGroup) {
    let n = g.order();
    for x in 0..n {
        assert_eq!(g.mul(0, x), x);
        assert_eq!(g.mul(x, 0), x);
        assert_eq!(g.mul(x, g.inv(x)), 0);
    }
    let step = (n / 12).max(1);
    for x in (0..n).step_by(step) {
        for y in (0..n).step_by(step) {
            for z in 0..n {
                assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)), "{}", g.label());
            }
        }
    }
}

fn relabel(g: &FiniteGroup, perm: &[usize]) -> FiniteGroup {
    let n = g.order();
    let mut inverse = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inverse[p] = i;
    }
    let rows = (0..n)
        .map(|a| (0..n).map(|b| perm[g.mul(inverse[a], inverse[b])]).collect())
        .collect();
    FiniteGroup::from_table(rows).unwrap()
}

fn metacyclic_params() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..20, 1usize..8).prop_flat_map(|(m, n)| {
        let valid: Vec<usize> = (1..m)
            .filter(|&r| gcd(r as u64, m as u64) == 1)
            .filter(|&r| (0..n).fold(1, |acc, _| acc * r % m) == 1 % m)
            .collect();
        (Just(m), Just(n), proptest::sample::select(valid))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructors_satisfy_group_axioms(n in 2usize..24, (m, k, r) in metacyclic_params()) {
        check_axioms(&cyclic(n).unwrap());
        check_axioms(&dihedral(n).unwrap());
        check_axioms(&dicyclic(n.min(12)).unwrap());
        let g = metacyclic(m, k, r).unwrap();
        prop_assert_eq!(g.order(), m * k);
        check_axioms(&g);
    }

    #[test]
    fn abelian_constructor_satisfies_axioms(parts in proptest::collection::vec(1usize..6, 1..4)) {
        let g = abelian(&parts).unwrap();
        prop_assert_eq!(g.order(), parts.iter().product::<usize>());
        prop_assert!(is_abelian(&g));
        check_axioms(&g);
    }

    #[test]
    fn subgroup_count_invariant_under_relabeling(
        index in 0usize..40,
        seed in proptest::collection::vec(any::<u32>(), 64),
    ) {
        let groups = catalog::all_groups().unwrap();
        let g = &groups[index % groups.len()];
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (2..n).rev() {
            let j = 1 + seed[i % seed.len()] as usize % i;
            perm.swap(i, j);
        }
        let h = relabel(g, &perm);
        prop_assert_eq!(count_subgroups(g).unwrap(), count_subgroups(&h).unwrap());
        prop_assert!(g.is_isomorphic(&h));
    }

    #[test]
    fn lagrange_quotient_and_sylow_orders(index in 0usize..200) {
        let groups = catalog::all_groups().unwrap();
        let g = &groups[index % groups.len()];
        let n = g.order();
        for h in g.all_subgroups().unwrap() {
            prop_assert_eq!(n % h.order(), 0);
            if g.is_normal(&h).unwrap() {
                prop_assert_eq!(g.quotient(&h).unwrap().order(), n / h.order());
            }
        }
        for &(p, a) in factorize(n as u64).unwrap().factors() {
            prop_assert_eq!(g.sylow_subgroup(p).unwrap().order(), p.pow(a) as usize);
        }
    }

    #[test]
    fn number_class_containments(n in 1u64..200_000) {
        let c = classify(n).unwrap();
        prop_assert!(!c.cyclic || c.abelian);
        prop_assert!(!c.cyclic || c.cclt);
        prop_assert!(!c.cclt || c.aclt);
        prop_assert!(!c.abelian || c.aclt);
    }

    #[test]
    fn cyclic_numbers_match_totient_gcd(n in 1u64..3000) {
        prop_assert_eq!(is_cyclic_number(n).unwrap(), gcd(n, naive_phi(n)) == 1);
    }
}

#[test]
fn squarefree_orders_match_counting_formula_and_metacyclic_enumeration() {
    for n in 1..=MAX_CATALOG_ORDER as u64 {
        if !factorize(n).unwrap().is_squarefree() {
            continue;
        }
        let expected = squarefree_group_count(n);
        let fixture = catalog::entry(n as usize).unwrap().fixture_count;
        assert_eq!(fixture, Some(expected as usize), "fixture for {n}");

        let mut classes: Vec<FiniteGroup> = Vec::new();
        for m in (1..=n).filter(|m| n % m == 0 && gcd(*m, n / m) == 1) {
            let k = n / m;
            for r in (0..m.max(2)).filter(|&r| gcd(r, m) == 1 || m == 1) {
                let Ok(g) = metacyclic(m as usize, k as usize, r as usize) else { continue };
                if !classes.iter().any(|c| c.is_isomorphic(&g)) {
                    classes.push(g);
                }
            }
        }
        assert_eq!(classes.len() as u64, expected, "metacyclic classes of order {n}");
    }
}

#[test]
fn catalog_abelian_groups_match_partition_counts() {
    for n in catalog::complete_orders() {
        let expected: u64 = factorize(n as u64).unwrap().factors().iter().map(|&(_, a)| partitions(a)).product();
        let (groups, _) = catalog::groups_of_order(n).unwrap();
        let found = groups.iter().filter(|g| is_abelian(g)).count() as u64;
        assert_eq!(found, expected, "abelian groups of order {n}");
    }
}

#[test]
fn catalog_groups_pairwise_non_isomorphic() {
    for (n, _) in catalog::supported_orders() {
        let (groups, _) = catalog::groups_of_order(n).unwrap();
        for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                assert!(!groups[i].is_isomorphic(&groups[j]), "{} ≅ {}", groups[i].label(), groups[j].label());
            }
        }
    }
}

#[test]
fn pauli_group_is_central_product_quotient() {
    let c4 = cyclic(4).unwrap();
    let d4 = dihedral(4).unwrap();
    let product = direct_product(&c4, &d4).unwrap();
    // (2, r²) with r² at index 2 of D4
    let diagonal = product.generated_subgroup(&[2 + 4 * 2]).unwrap();
    assert_eq!(diagonal.order(), 2);
    let quotient = product.quotient(&diagonal).unwrap();
    let (groups, completeness) = catalog::groups_of_order(16).unwrap();
    assert_eq!(completeness, Completeness::Complete);
    let pauli = groups.iter().find(|g| g.label().starts_with("P(")).unwrap();
    assert!(pauli.is_isomorphic(&quotient));
}

#[test]
fn alternating_group_of_order_12_is_minimal_nonabelian_without_order_6_subgroup() {
    let a4 = GroupSpec::parse("E(2,2,[0,1;1,1],3)").unwrap().build().unwrap();
    assert!(is_minimal_nonabelian(&a4).unwrap());
    assert_eq!(is_aclt_group(&a4).unwrap().missing(), vec![6]);
    let exceptions = verify::minimal_nonabelian_non_aclt(&Settings::default());
    assert_eq!(exceptions, vec![a4.label().to_string()]);
}

#[test]
fn golden_order_28_dot() {
    let dot = gclt_core::xgraph::build(28).unwrap().to_dot();
    assert_eq!(dot, include_str!("golden/x28.dot"));
}

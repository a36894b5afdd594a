//! Abelian subgroups without enumerating the whole lattice.
//!
//! Every abelian subgroup lies in a maximal one, and an abelian group has a
//! subgroup of every order dividing its own, so the orders of abelian
//! subgroups are exactly the divisors of the orders of maximal abelian
//! subgroups. Maximal abelian subgroups are the self-centralizing ones; they
//! are reached by repeatedly shrinking a centralizer `C_G(A)` by one more
//! non-central element until it becomes abelian.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::group::FiniteGroup;
use crate::numbers::factorize;
use crate::subgroup::Subgroup;

fn central_part(g: &FiniteGroup, members: &[usize]) -> BitSet {
    let mut z = BitSet::new(g.order());
    for &x in members {
        if members.iter().all(|&y| g.commutes(x, y)) {
            z.insert(x);
        }
    }
    z
}

impl FiniteGroup {
    /// All maximal abelian subgroups, sorted by order then elements.
    pub fn maximal_abelian_subgroups(&self) -> Vec<Subgroup<'_>> {
        let n = self.order();
        let mut visited: HashSet<BitSet> = HashSet::new();
        let mut found: HashSet<BitSet> = HashSet::new();
        let mut stack = vec![BitSet::from_indices(n, 0..n)];
        while let Some(current) = stack.pop() {
            if !visited.insert(current.clone()) {
                continue;
            }
            let members: Vec<usize> = current.iter().collect();
            let center = central_part(self, &members);
            if center.count() == members.len() {
                found.insert(current);
                continue;
            }
            for &x in &members {
                if center.contains(x) {
                    continue;
                }
                let child = BitSet::from_indices(
                    n,
                    members.iter().copied().filter(|&y| self.commutes(x, y)),
                );
                if !visited.contains(&child) {
                    stack.push(child);
                }
            }
        }
        let mut out: Vec<Subgroup<'_>> = found.iter().map(|b| Subgroup::from_bits(self, b)).collect();
        out.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements().cmp(b.elements()))
        });
        out
    }

    /// An abelian subgroup of order `d`, if one exists.
    pub fn abelian_subgroup_of_order(&self, d: usize) -> Option<Subgroup<'_>> {
        self.maximal_abelian_subgroups()
            .iter()
            .find(|m| m.order() % d == 0)
            .map(|m| subgroup_of_abelian(m, d))
    }
}

/// A subgroup of order `d` inside the abelian subgroup `a`; `d` must divide `|a|`.
pub(crate) fn subgroup_of_abelian<'g>(a: &Subgroup<'g>, d: usize) -> Subgroup<'g> {
    let g = a.parent();
    assert_eq!(a.order() % d, 0, "{d} does not divide {}", a.order());
    let orders = g.element_orders();
    let mut gens: Vec<usize> = Vec::new();
    for &(p, exp) in factorize(d as u64).expect("d ≥ 1").factors() {
        let p = p as usize;
        let target = p.pow(exp);
        let p_part: Vec<usize> = a
            .elements()
            .iter()
            .copied()
            .filter(|&x| is_power_of(orders[x], p))
            .collect();
        let mut members = vec![false; g.order()];
        members[0] = true;
        let mut local: Vec<usize> = Vec::new();
        let mut size = 1;
        while size < target {
            // some y outside the current subgroup has y^p inside it
            let y = p_part
                .iter()
                .copied()
                .find(|&y| !members[y] && members[g.pow(y, p)])
                .expect("abelian p-group has a subgroup of every p-power order");
            local.push(y);
            size = g.close_into(&mut members, &local);
        }
        gens.extend(local);
    }
    g.generated_subgroup(&gens).expect("indices are valid")
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

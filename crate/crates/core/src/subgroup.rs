//! Subgroups of an explicit [`FiniteGroup`] and the lattice operations on them.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::GroupError;
use crate::group::{FiniteGroup, DEFAULT_ENUMERATION_BOUND};
use crate::numbers::is_prime;

/// A subgroup, stored as the sorted element indices of its parent group.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.label())
            .field("elements", &self.elements)
            .finish()
    }
}

impl<'g> Subgroup<'g> {
    /// Checks closure and returns the subgroup with the given elements.
    pub fn new(parent: &'g FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self, GroupError> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        for &x in &elements {
            parent.check_index(x)?;
        }
        elements.sort_unstable();
        elements.dedup();
        let members = BitSet::from_indices(parent.order(), elements.iter().copied());
        if !members.contains(0) {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        for &x in &elements {
            if !members.contains(parent.inv(x)) {
                return Err(GroupError::NotASubgroup(format!("inverse of {x} missing")));
            }
            for &y in &elements {
                if !members.contains(parent.mul(x, y)) {
                    return Err(GroupError::NotASubgroup(format!("{x}·{y} missing")));
                }
            }
        }
        Ok(Self { parent, elements })
    }

    pub(crate) fn from_bits(parent: &'g FiniteGroup, bits: &BitSet) -> Self {
        Self {
            parent,
            elements: bits.iter().collect(),
        }
    }

    pub(crate) fn from_sorted(parent: &'g FiniteGroup, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { parent, elements }
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.parent.commutes(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        let orders = self.parent.element_orders();
        self.elements.iter().any(|&x| orders[x] == self.order())
    }

    /// A short generating sequence of this subgroup.
    pub fn generators(&self) -> Vec<usize> {
        let g = self.parent;
        let orders = g.element_orders();
        let mut candidates = self.elements[1..].to_vec();
        candidates.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut members = vec![false; g.order()];
        members[0] = true;
        let mut size = 1;
        let mut gens = Vec::new();
        for x in candidates {
            if size == self.order() {
                break;
            }
            if !members[x] {
                gens.push(x);
                size = g.close_into(&mut members, &gens);
            }
        }
        gens
    }

    /// The subgroup as a group in its own right, elements relabelled in
    /// increasing parent-index order (so the identity stays at 0).
    pub fn to_group(&self) -> FiniteGroup {
        let position: HashMap<usize, usize> =
            self.elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let g = self.parent;
        FiniteGroup::from_fn(self.order(), |i, j| {
            position[&g.mul(self.elements[i], self.elements[j])]
        })
        .expect("subgroup of a valid group is a valid group")
    }
}

/// Subgroup generated by `gens` inside `g`, as a bit set.
fn span_bits(g: &FiniteGroup, gens: &[usize]) -> BitSet {
    let mut members = vec![false; g.order()];
    members[0] = true;
    g.close_into(&mut members, gens);
    BitSet::from_indices(g.order(), (0..g.order()).filter(|&x| members[x]))
}

fn cyclic_bits(g: &FiniteGroup, x: usize) -> BitSet {
    let mut bits = BitSet::new(g.order());
    let mut y = 0;
    loop {
        bits.insert(y);
        y = g.mul(y, x);
        if y == 0 {
            return bits;
        }
    }
}

impl FiniteGroup {
    fn owns(&self, h: &Subgroup<'_>) -> Result<(), GroupError> {
        if std::ptr::eq(self, h.parent) {
            Ok(())
        } else {
            Err(GroupError::ForeignSubgroup)
        }
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_sorted(self, (0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        Subgroup::from_sorted(self, vec![0])
    }

    /// Smallest subgroup containing `set`.
    pub fn generated_subgroup(&self, set: &[usize]) -> Result<Subgroup<'_>, GroupError> {
        for &x in set {
            self.check_index(x)?;
        }
        Ok(Subgroup::from_bits(self, &span_bits(self, set)))
    }

    pub fn cyclic_subgroup(&self, x: usize) -> Result<Subgroup<'_>, GroupError> {
        self.check_index(x)?;
        Ok(Subgroup::from_bits(self, &cyclic_bits(self, x)))
    }

    /// One entry per distinct cyclic subgroup `⟨x⟩`, ordered by first generator.
    pub fn all_cyclic_subgroups(&self) -> Vec<Subgroup<'_>> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for x in 0..self.order() {
            let bits = cyclic_bits(self, x);
            if seen.insert(bits.clone()) {
                out.push(Subgroup::from_bits(self, &bits));
            }
        }
        out
    }

    /// Every subgroup, with the default enumeration bound.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup<'_>>, GroupError> {
        self.all_subgroups_within(DEFAULT_ENUMERATION_BOUND)
    }

    /// Every subgroup: cyclic subgroups closed under pairwise joins until no
    /// new subgroup appears. Sorted by order, then by element set.
    pub fn all_subgroups_within(&self, bound: usize) -> Result<Vec<Subgroup<'_>>, GroupError> {
        if self.order() > bound {
            return Err(GroupError::BoundExceeded {
                order: self.order(),
                bound,
            });
        }
        let mut subgroups: Vec<(BitSet, Vec<usize>)> = Vec::new();
        let mut index: HashMap<BitSet, usize> = HashMap::new();
        for x in 0..self.order() {
            let bits = cyclic_bits(self, x);
            if !index.contains_key(&bits) {
                index.insert(bits.clone(), subgroups.len());
                subgroups.push((bits, if x == 0 { vec![] } else { vec![x] }));
            }
        }
        let mut i = 0;
        while i < subgroups.len() {
            for j in 0..i {
                let (a, b) = (&subgroups[i], &subgroups[j]);
                if a.0.is_subset(&b.0) || b.0.is_subset(&a.0) {
                    continue;
                }
                let mut gens = a.1.clone();
                gens.extend(b.1.iter().copied().filter(|&x| !a.0.contains(x)));
                let bits = span_bits(self, &gens);
                if !index.contains_key(&bits) {
                    let gens = minimise_gens(self, &gens);
                    index.insert(bits.clone(), subgroups.len());
                    subgroups.push((bits, gens));
                }
            }
            i += 1;
        }
        let mut out: Vec<Subgroup<'_>> = subgroups
            .iter()
            .map(|(bits, _)| Subgroup::from_bits(self, bits))
            .collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        Ok(out)
    }

    /// Subgroups that are maximal among proper subgroups.
    pub fn maximal_subgroups(&self) -> Result<Vec<Subgroup<'_>>, GroupError> {
        let all = self.all_subgroups()?;
        let proper: Vec<&Subgroup<'_>> = all.iter().filter(|h| !h.is_whole()).collect();
        Ok(proper
            .iter()
            .filter(|h| {
                !proper
                    .iter()
                    .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
            })
            .map(|h| (*h).clone())
            .collect())
    }

    pub fn center(&self) -> Subgroup<'_> {
        let gens = self.generating_set();
        Subgroup::from_sorted(
            self,
            (0..self.order())
                .filter(|&x| gens.iter().all(|&g| self.commutes(x, g)))
                .collect(),
        )
    }

    /// `⟨x⁻¹y⁻¹xy⟩` over all pairs.
    pub fn commutator_subgroup(&self) -> Subgroup<'_> {
        let n = self.order();
        let mut commutators = BitSet::new(n);
        for x in 0..n {
            for y in 0..n {
                commutators.insert(self.commutator(x, y));
            }
        }
        let gens: Vec<usize> = commutators.iter().filter(|&c| c != 0).collect();
        Subgroup::from_bits(self, &span_bits(self, &gens))
    }

    pub fn centralizer(&self, h: &Subgroup<'_>) -> Result<Subgroup<'_>, GroupError> {
        self.owns(h)?;
        let gens = h.generators();
        Ok(Subgroup::from_sorted(
            self,
            (0..self.order())
                .filter(|&x| gens.iter().all(|&g| self.commutes(x, g)))
                .collect(),
        ))
    }

    pub fn normalizer(&self, h: &Subgroup<'_>) -> Result<Subgroup<'_>, GroupError> {
        self.owns(h)?;
        let gens = h.generators();
        Ok(Subgroup::from_sorted(
            self,
            (0..self.order())
                .filter(|&x| {
                    gens.iter()
                        .all(|&g| h.contains(self.mul(self.mul(x, g), self.inv(x))))
                })
                .collect(),
        ))
    }

    pub fn is_normal(&self, h: &Subgroup<'_>) -> Result<bool, GroupError> {
        Ok(self.normalizer(h)?.is_whole())
    }

    /// A Sylow `p`-subgroup, grown one step at a time inside normalizers.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup<'_>, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let p = p as usize;
        let mut target = 1;
        let mut rest = self.order();
        while rest.is_multiple_of(p) {
            rest /= p;
            target *= p;
        }
        let mut current = self.trivial_subgroup();
        while current.order() < target {
            let normalizer = self.normalizer(&current)?;
            let step = normalizer
                .elements()
                .iter()
                .copied()
                .find(|&x| !current.contains(x) && current.contains(self.pow(x, p)))
                .expect("p divides |N(P)/P| while P is not Sylow");
            let mut gens = current.generators();
            gens.push(step);
            current = self.generated_subgroup(&gens)?;
        }
        Ok(current)
    }

    /// Quotient by a normal subgroup; cosets are numbered by their least
    /// element, so the identity coset is 0.
    pub fn quotient(&self, n: &Subgroup<'_>) -> Result<FiniteGroup, GroupError> {
        self.owns(n)?;
        if !self.is_normal(n)? {
            return Err(GroupError::NotNormal);
        }
        let mut coset = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if coset[x] == usize::MAX {
                for &h in n.elements() {
                    coset[self.mul(x, h)] = reps.len();
                }
                reps.push(x);
            }
        }
        FiniteGroup::from_fn(reps.len(), |i, j| coset[self.mul(reps[i], reps[j])])
    }
}

fn minimise_gens(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut members = vec![false; g.order()];
    members[0] = true;
    let mut kept = Vec::new();
    for &x in gens {
        if !members[x] {
            kept.push(x);
            g.close_into(&mut members, &kept);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{abelian, cyclic, dicyclic, dihedral, direct_product};

    #[test]
    fn generated_subgroups_of_c12() {
        let g = cyclic(12).unwrap();
        assert_eq!(g.generated_subgroup(&[]).unwrap().elements(), &[0]);
        assert_eq!(g.generated_subgroup(&[4]).unwrap().elements(), &[0, 4, 8]);
        assert_eq!(g.generated_subgroup(&[2, 3]).unwrap().order(), 12);
        assert!(g.generated_subgroup(&[12]).is_err());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(cyclic(6).unwrap().all_subgroups().unwrap().len(), 4);
        assert_eq!(dihedral(3).unwrap().all_subgroups().unwrap().len(), 6);
        assert_eq!(dicyclic(2).unwrap().all_subgroups().unwrap().len(), 6);
        assert_eq!(cyclic(1).unwrap().all_cyclic_subgroups().len(), 1);
        assert_eq!(dihedral(3).unwrap().all_cyclic_subgroups().len(), 5);
        assert_eq!(abelian(&[2, 4]).unwrap().all_cyclic_subgroups().len(), 6);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let g = cyclic(401).unwrap();
        assert!(matches!(
            g.all_subgroups(),
            Err(GroupError::BoundExceeded { order: 401, bound: 400 })
        ));
        assert_eq!(g.all_subgroups_within(401).unwrap().len(), 2);
    }

    #[test]
    fn subgroup_validation() {
        let g = cyclic(6).unwrap();
        assert!(Subgroup::new(&g, [0, 2, 4]).is_ok());
        assert!(Subgroup::new(&g, [0, 2]).is_err());
        assert!(Subgroup::new(&g, [2, 4]).is_err());
    }

    #[test]
    fn quotients() {
        let g = cyclic(12).unwrap();
        let q = g.quotient(&g.whole()).unwrap();
        assert_eq!(q.order(), 1);
        let n3 = g.generated_subgroup(&[4]).unwrap();
        let q = g.quotient(&n3).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.order_profile(), vec![1, 2, 4, 4]);

        let d4 = dihedral(4).unwrap();
        let z = d4.center();
        assert_eq!(z.order(), 2);
        assert_eq!(d4.quotient(&z).unwrap().order_profile(), vec![1, 2, 2, 2]);

        let s3 = dihedral(3).unwrap();
        let reflection = s3.cyclic_subgroup(3).unwrap();
        assert_eq!(s3.quotient(&reflection), Err(GroupError::NotNormal));
    }

    #[test]
    fn center_and_commutator() {
        let a = abelian(&[2, 6]).unwrap();
        assert!(a.center().is_whole());
        assert!(a.commutator_subgroup().is_trivial());

        let s3 = dihedral(3).unwrap();
        assert_eq!(s3.center().order(), 1);
        assert_eq!(s3.commutator_subgroup().order(), 3);

        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.center(), d4.commutator_subgroup());
        assert_eq!(d4.center().order(), 2);
    }

    #[test]
    fn centralizers_and_normalizers() {
        let s3 = dihedral(3).unwrap();
        assert!(s3.centralizer(&s3.trivial_subgroup()).unwrap().is_whole());
        let reflection = s3.cyclic_subgroup(3).unwrap();
        assert_eq!(reflection.order(), 2);
        assert_eq!(s3.centralizer(&reflection).unwrap(), reflection);
        assert!(!s3.is_normal(&reflection).unwrap());
        let rotations = s3.cyclic_subgroup(1).unwrap();
        assert!(s3.normalizer(&rotations).unwrap().is_whole());

        let other = dihedral(3).unwrap();
        assert_eq!(
            s3.centralizer(&other.trivial_subgroup()),
            Err(GroupError::ForeignSubgroup)
        );
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(dihedral(3).unwrap().sylow_subgroup(2).unwrap().order(), 2);
        assert_eq!(cyclic(12).unwrap().sylow_subgroup(3).unwrap().order(), 3);
        assert_eq!(dihedral(6).unwrap().sylow_subgroup(2).unwrap().order(), 4);
        assert_eq!(cyclic(12).unwrap().sylow_subgroup(5).unwrap().order(), 1);
        assert_eq!(cyclic(12).unwrap().sylow_subgroup(4), Err(GroupError::NotPrime(4)));
        let g = direct_product(&dihedral(4).unwrap(), &dihedral(3).unwrap()).unwrap();
        assert_eq!(g.sylow_subgroup(2).unwrap().order(), 16);
    }

    #[test]
    fn to_group_keeps_structure() {
        let d4 = dihedral(4).unwrap();
        let rotations = d4.cyclic_subgroup(1).unwrap();
        let c4 = rotations.to_group();
        assert_eq!(c4.order_profile(), vec![1, 2, 4, 4]);
    }

    #[test]
    fn maximal_subgroups_of_s3() {
        let s3 = dihedral(3).unwrap();
        let max = s3.maximal_subgroups().unwrap();
        let mut orders: Vec<_> = max.iter().map(|h| h.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 2, 2, 3]);
    }
}

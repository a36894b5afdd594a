//! Isomorphism testing by backtracking over images of a generating sequence.

use crate::group::FiniteGroup;

fn centralizer_sizes(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order())
        .map(|x| (0..g.order()).filter(|&y| g.commutes(x, y)).count())
        .collect()
}

struct Search<'a> {
    source: &'a FiniteGroup,
    target: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends `map` (and its inverse `used`) so it is defined on the subgroup
    /// generated by the first `level` generators, checking the homomorphism
    /// rule `φ(x·s) = φ(x)·φ(s)` and injectivity along the way.
    fn close(&self, map: &mut [usize], used: &mut [bool], images: &[usize]) -> bool {
        let gens = &self.gens[..images.len()];
        let mut queue: Vec<usize> = (0..map.len()).filter(|&x| map[x] != usize::MAX).collect();
        while let Some(x) = queue.pop() {
            for (&s, &img) in gens.iter().zip(images) {
                let y = self.source.mul(x, s);
                let fy = self.target.mul(map[x], img);
                if map[y] == usize::MAX {
                    if used[fy] {
                        return false;
                    }
                    map[y] = fy;
                    used[fy] = true;
                    queue.push(y);
                } else if map[y] != fy {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, map: &[usize], used: &[bool], images: &mut Vec<usize>) -> Option<Vec<usize>> {
        let level = images.len();
        if level == self.gens.len() {
            return Some(map.to_vec());
        }
        for &c in &self.candidates[level] {
            images.push(c);
            let (mut next_map, mut next_used) = (map.to_vec(), used.to_vec());
            if self.close(&mut next_map, &mut next_used, images) {
                if let Some(found) = self.extend(&next_map, &next_used, images) {
                    return Some(found);
                }
            }
            images.pop();
        }
        None
    }
}

impl FiniteGroup {
    /// An isomorphism `self → other` as an image array, if one exists.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() || self.order_profile() != other.order_profile() {
            return None;
        }
        let (cs, ct) = (centralizer_sizes(self), centralizer_sizes(other));
        {
            let mut a = cs.clone();
            let mut b = ct.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return None;
            }
        }
        let gens = self.generating_set();
        let (os, ot) = (self.element_orders(), other.element_orders());
        let candidates = gens
            .iter()
            .map(|&s| {
                (0..other.order())
                    .filter(|&t| ot[t] == os[s] && ct[t] == cs[s])
                    .collect()
            })
            .collect();
        let search = Search {
            source: self,
            target: other,
            gens,
            candidates,
        };
        let mut map = vec![usize::MAX; self.order()];
        let mut used = vec![false; other.order()];
        map[0] = 0;
        used[0] = true;
        search.extend(&map, &used, &mut Vec::new())
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

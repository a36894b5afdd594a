//! Explicit finite groups stored as Cayley tables.
//!
//! Every group carries a dense `n × n` multiplication table over element indices
//! `0..n`, with index 0 the identity. Tables are validated on construction:
//! identity row and column, Latin-square rows and columns, and associativity
//! (exhaustively up to order 64, on `10·n²` seeded random triples above that).

use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::GroupError;

/// Default cap on the order of groups whose subgroup lattice is enumerated.
pub const DEFAULT_ENUMERATION_BOUND: usize = 400;

/// Largest order for which a Cayley table is materialised.
pub const CONSTRUCTION_LIMIT: usize = 2048;

const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    spec: Option<String>,
    element_orders: OnceLock<Vec<usize>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

/// On-disk form of a Cayley table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CayleyTableJson {
    pub order: usize,
    pub spec: String,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Builds a group from explicit rows, `rows[x][y] = x·y`.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(GroupError::InvalidTable(format!(
                "row {i} has length {}, expected {n}",
                row.len()
            )));
        }
        Self::from_fn(n, |x, y| rows[x][y])
    }

    /// Builds a group of the given order from a multiplication function.
    pub(crate) fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if order > CONSTRUCTION_LIMIT {
            return Err(GroupError::TooLarge {
                order,
                limit: CONSTRUCTION_LIMIT,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let z = mul(x, y);
                if z >= order {
                    return Err(GroupError::InvalidTable(format!(
                        "entry ({x},{y}) = {z} out of range"
                    )));
                }
                table.push(z as u32);
            }
        }
        Self::validated(order, table)
    }

    fn validated(order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        let n = order;
        for x in 0..n {
            if table[x] as usize != x || table[x * n] as usize != x {
                return Err(GroupError::InvalidTable(format!(
                    "index 0 is not an identity at {x}"
                )));
            }
        }
        let mut seen = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                let z = table[x * n + y] as usize;
                if seen[z] == 2 * x + 1 {
                    return Err(GroupError::InvalidTable(format!("row {x} repeats {z}")));
                }
                seen[z] = 2 * x + 1;
            }
        }
        seen.fill(0);
        for y in 0..n {
            for x in 0..n {
                let z = table[x * n + y] as usize;
                if seen[z] == 2 * y + 2 {
                    return Err(GroupError::InvalidTable(format!("column {y} repeats {z}")));
                }
                seen[z] = 2 * y + 2;
            }
        }
        let mut inverse = vec![0u32; n];
        for x in 0..n {
            let y = (0..n).find(|&y| table[x * n + y] == 0).expect("Latin row contains 0");
            inverse[x] = y as u32;
        }
        let group = Self {
            order,
            table,
            inverse,
            spec: None,
            element_orders: OnceLock::new(),
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let check = |x: usize, y: usize, z: usize| {
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                Err(GroupError::InvalidTable(format!(
                    "not associative on ({x},{y},{z})"
                )))
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for x in 1..n {
                for y in 1..n {
                    for z in 1..n {
                        check(x, y, z)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(n as u64);
            for _ in 0..10 * n * n {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn with_spec(mut self, spec: impl Into<String>) -> Self {
        self.spec = Some(spec.into());
        self
    }

    pub fn spec(&self) -> Option<&str> {
        self.spec.as_deref()
    }

    /// Spec string, or `?` when the group has no recorded provenance.
    pub fn label(&self) -> &str {
        self.spec.as_deref().unwrap_or("?")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let (mut acc, mut base, mut k) = (0, x, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// `x⁻¹ y⁻¹ x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        self.mul(self.mul(self.inv(x), self.inv(y)), xy)
    }

    pub(crate) fn check_index(&self, x: usize) -> Result<(), GroupError> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    /// Smallest `k ≥ 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> Result<usize, GroupError> {
        self.check_index(x)?;
        Ok(self.element_orders()[x])
    }

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> &[usize] {
        self.element_orders.get_or_init(|| {
            (0..self.order)
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != 0 {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut profile = self.element_orders().to_vec();
        profile.sort_unstable();
        profile
    }

    /// A short generating sequence, chosen greedily by decreasing element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut candidates: Vec<usize> = (1..self.order).collect();
        candidates.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut size = 1;
        for x in candidates {
            if size == self.order {
                break;
            }
            if span[x] {
                continue;
            }
            gens.push(x);
            size = self.close_into(&mut span, &gens);
        }
        gens
    }

    /// Extends `members` (already containing the identity) to the subgroup
    /// generated by it and `gens`; returns the resulting size.
    pub(crate) fn close_into(&self, members: &mut [bool], gens: &[usize]) -> usize {
        let mut stack: Vec<usize> = (0..self.order).filter(|&x| members[x]).collect();
        let mut size = stack.len();
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    size += 1;
                    stack.push(y);
                }
            }
        }
        size
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&z| z as usize).collect())
            .collect()
    }

    pub fn to_json_value(&self) -> CayleyTableJson {
        CayleyTableJson {
            order: self.order,
            spec: self.spec.clone().unwrap_or_default(),
            table: self.rows(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        let doc: CayleyTableJson =
            serde_json::from_str(text).map_err(|e| GroupError::InvalidTable(e.to_string()))?;
        if doc.table.len() != doc.order {
            return Err(GroupError::InvalidTable(format!(
                "declared order {} but {} rows",
                doc.order,
                doc.table.len()
            )));
        }
        let group = Self::from_table(doc.table)?;
        Ok(if doc.spec.is_empty() {
            group
        } else {
            group.with_spec(doc.spec)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, |x, y| (x + y) % n).unwrap()
    }

    #[test]
    fn cyclic_element_orders() {
        let g = z(6);
        assert_eq!(g.element_order(0).unwrap(), 1);
        assert_eq!(g.element_order(1).unwrap(), 6);
        assert_eq!(g.element_order(4).unwrap(), 3);
        assert!(matches!(
            g.element_order(6),
            Err(GroupError::IndexOutOfRange { index: 6, order: 6 })
        ));
    }

    #[test]
    fn rejects_bad_tables() {
        // identity not at index 0
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        // repeated entry
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        // ragged
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1]]).is_err());
        // Latin square with identity but not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(loop5).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
    }

    #[test]
    fn inverses_and_pow() {
        let g = z(12);
        for x in 0..12 {
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
        assert_eq!(g.pow(5, 3), 3);
        assert_eq!(g.pow(5, 0), 0);
    }

    #[test]
    fn generating_set_of_cyclic_is_single() {
        assert_eq!(z(10).generating_set().len(), 1);
        assert!(z(1).generating_set().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let g = z(4).with_spec("C4");
        let text = g.to_json();
        assert!(text.starts_with("{\"order\":4,\"spec\":\"C4\",\"table\":[[0,1,2,3],"));
        let back = FiniteGroup::from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.spec(), Some("C4"));
    }

    #[test]
    fn large_tables_use_sampled_associativity() {
        let g = z(100);
        assert_eq!(g.order(), 100);
    }
}

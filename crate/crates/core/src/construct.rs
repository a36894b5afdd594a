//! Deterministic builders for the group families used throughout the crate.
//!
//! Every builder fixes a canonical element numbering so the same parameters
//! always produce the same Cayley table:
//!
//! * `cyclic(n)`: `k ↦ k`, addition mod `n`.
//! * `abelian(parts)`: mixed radix, first part varies fastest.
//! * `direct_product(G, H)`: `(g, h) ↦ g + |G|·h`.
//! * `metacyclic(m, n, r)`: `a^i b^j ↦ i + m·j`, with `b a b⁻¹ = a^r`.
//! * `dicyclic(n)`: `a^i x^j ↦ i + 2n·j`.
//! * `elementary_semidirect(p, M, m)`: `(v, j) ↦ v + p^k·j`, `v` read base `p`
//!   with coordinate 0 least significant.
//! * `from_permutations`: breadth-first from the identity.

use std::collections::HashMap;
use std::fmt;

use crate::error::GroupError;
use crate::group::{FiniteGroup, CONSTRUCTION_LIMIT};
use crate::numbers::{gcd, is_prime};

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameters(msg.into())
}

fn check_size(order: usize) -> Result<(), GroupError> {
    if order > CONSTRUCTION_LIMIT {
        Err(GroupError::TooLarge {
            order,
            limit: CONSTRUCTION_LIMIT,
        })
    } else {
        Ok(())
    }
}

fn mod_pow(base: u64, exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let (mut acc, mut base, mut exp) = (1u64, base % modulus, exp);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `r` modulo `m`, or `None` when `r` is not a unit.
pub fn multiplicative_order(r: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(r % m, m) != 1 {
        return None;
    }
    let mut k = 1;
    let mut x = r % m;
    while x != 1 {
        x = x * (r % m) % m;
        k += 1;
    }
    Some(k)
}

/// Smallest `r ≥ 2` whose multiplicative order mod `m` is exactly `k`.
pub fn smallest_unit_of_order(m: u64, k: u64) -> Option<u64> {
    (2..m).find(|&r| multiplicative_order(r, m) == Some(k))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(invalid("cyclic group needs n ≥ 1"));
    }
    check_size(n)?;
    Ok(FiniteGroup::from_fn(n, |x, y| (x + y) % n)?.with_spec(format!("C{n}")))
}

/// `C_{n1} × C_{n2} × …`
pub fn abelian(parts: &[usize]) -> Result<FiniteGroup, GroupError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid("abelian group needs a nonempty list of positive orders"));
    }
    let order = parts
        .iter()
        .try_fold(1usize, |acc, &p| acc.checked_mul(p).filter(|&o| o <= CONSTRUCTION_LIMIT))
        .ok_or(GroupError::TooLarge {
            order: usize::MAX,
            limit: CONSTRUCTION_LIMIT,
        })?;
    let add = |x: usize, y: usize| {
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        for &p in parts {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    };
    let spec = format!(
        "A{}",
        parts.iter().map(usize::to_string).collect::<Vec<_>>().join("x")
    );
    Ok(FiniteGroup::from_fn(order, add)?.with_spec(spec))
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (m, n) = (g.order(), h.order());
    let order = m.saturating_mul(n);
    check_size(order)?;
    let product = FiniteGroup::from_fn(order, |x, y| {
        g.mul(x % m, y % m) + m * h.mul(x / m, y / m)
    })?;
    Ok(match (g.spec(), h.spec()) {
        (Some(a), Some(b)) => product.with_spec(format!("{a}x{b}")),
        _ => product,
    })
}

/// `⟨a, b | a^m = b^n = e, b a b⁻¹ = a^r⟩` on pairs `(i, j)` with
/// `(i, j)(i', j') = (i + r^j i', j + j')`. Needs `r^n ≡ 1 (mod m)`.
pub fn metacyclic(m: usize, n: usize, r: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 || n == 0 {
        return Err(invalid("metacyclic group needs m, n ≥ 1"));
    }
    let (m64, n64, r64) = (m as u64, n as u64, r as u64);
    if mod_pow(r64, n64, m64) != 1 % m64 {
        return Err(invalid(format!("r^n ≡ 1 (mod m) fails: {r}^{n} mod {m} ≠ 1")));
    }
    check_size(m * n)?;
    let twist: Vec<usize> = (0..n).map(|j| mod_pow(r64, j as u64, m64) as usize).collect();
    let group = FiniteGroup::from_fn(m * n, |x, y| {
        let (i, j) = (x % m, x / m);
        let (i2, j2) = (y % m, y / m);
        (i + twist[j] * i2) % m + m * ((j + j2) % n)
    })?;
    Ok(group.with_spec(format!("M({m},{n},{r})")))
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(invalid("dihedral group needs n ≥ 2"));
    }
    Ok(metacyclic(n, 2, n - 1)?.with_spec(format!("D{n}")))
}

/// Dicyclic group of order `4n`: `⟨a, x | a^{2n} = e, x² = a^n, x a x⁻¹ = a⁻¹⟩`.
pub fn dicyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(invalid("dicyclic group needs n ≥ 2"));
    }
    let m = 2 * n;
    check_size(2 * m)?;
    let group = FiniteGroup::from_fn(2 * m, |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let k = if j == 1 { (m - k) % m } else { k };
        let (mut e, mut t) = ((i + k) % m, j + l);
        if t == 2 {
            e = (e + n) % m;
            t = 0;
        }
        e + m * t
    })?;
    Ok(group.with_spec(format!("Dic{n}")))
}

fn two_power_exponent(order: usize) -> Option<u32> {
    (order.is_power_of_two() && order > 0).then(|| order.trailing_zeros())
}

/// Semidihedral group of order `2^k`, `k ≥ 4`.
pub fn semidihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    match two_power_exponent(order) {
        Some(k) if k >= 4 => {
            Ok(metacyclic(order / 2, 2, order / 4 - 1)?.with_spec(format!("SD{order}")))
        }
        _ => Err(invalid(format!(
            "semidihedral order must be 2^k with k ≥ 4, got {order}"
        ))),
    }
}

/// Generalized quaternion group of order `2^k`, `k ≥ 3`.
pub fn generalized_quaternion(order: usize) -> Result<FiniteGroup, GroupError> {
    match two_power_exponent(order) {
        Some(k) if k >= 3 => Ok(dicyclic(order / 4)?.with_spec(format!("Q{order}"))),
        _ => Err(invalid(format!(
            "generalized quaternion order must be 2^k with k ≥ 3, got {order}"
        ))),
    }
}

/// Square matrix with small non-negative integer entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vec<u64>>,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self, GroupError> {
        let k = rows.len();
        if k == 0 || rows.iter().any(|r| r.len() != k) {
            return Err(invalid("matrix must be square and nonempty"));
        }
        Ok(Self { rows })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            rows: (0..k)
                .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    fn reduce(&self, p: u64) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| x % p).collect())
                .collect(),
        }
    }

    fn mul_mod(&self, other: &Self, p: u64) -> Self {
        let k = self.dim();
        Self {
            rows: (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| (0..k).map(|t| self.rows[i][t] * other.rows[t][j]).sum::<u64>() % p)
                        .collect()
                })
                .collect(),
        }
    }

    fn apply_mod(&self, v: &[u64], p: u64) -> Vec<u64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p)
            .collect()
    }

    /// Rank over `F_p` by Gaussian elimination.
    pub fn rank_mod(&self, p: u64) -> usize {
        let mut m = self.reduce(p).rows;
        let k = m.len();
        let mut rank = 0;
        for col in 0..k {
            let Some(pivot) = (rank..k).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = mod_pow(m[rank][col], p - 2, p);
            for r in 0..k {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col] * inv % p;
                    let pivot_row = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                        *x = (*x + p * p - factor * y % p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn pow_mod(&self, e: usize, p: u64) -> Self {
        let mut acc = Self::identity(self.dim());
        let base = self.reduce(p);
        for _ in 0..e {
            acc = acc.mul_mod(&base, p);
        }
        acc
    }

    /// Multiplicative order in `GL(k, p)`, if invertible.
    pub fn order_mod(&self, p: u64) -> Option<usize> {
        if self.rank_mod(p) != self.dim() {
            return None;
        }
        let id = Self::identity(self.dim());
        let base = self.reduce(p);
        let mut acc = base.clone();
        let mut k = 1;
        while acc != id {
            acc = acc.mul_mod(&base, p);
            k += 1;
        }
        Some(k)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

/// `(C_p)^k ⋊ C_m` where the generator of `C_m` acts as `M`.
/// `M` must be invertible over `F_p` with `M^m = I`.
pub fn elementary_semidirect(p: u64, matrix: &Matrix, m: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if m == 0 {
        return Err(invalid("cyclic factor order m must be ≥ 1"));
    }
    let k = matrix.dim();
    if matrix.rank_mod(p) != k {
        return Err(invalid(format!("matrix {matrix} is not invertible over F_{p}")));
    }
    if matrix.pow_mod(m, p) != Matrix::identity(k) {
        return Err(invalid(format!("matrix {matrix} does not satisfy M^{m} = I over F_{p}")));
    }
    let base = (p as usize)
        .checked_pow(k as u32)
        .filter(|&b| b <= CONSTRUCTION_LIMIT)
        .ok_or(GroupError::TooLarge {
            order: usize::MAX,
            limit: CONSTRUCTION_LIMIT,
        })?;
    check_size(base * m)?;
    let decode = |v: usize| -> Vec<u64> {
        let mut v = v;
        (0..k)
            .map(|_| {
                let c = (v % p as usize) as u64;
                v /= p as usize;
                c
            })
            .collect()
    };
    let encode = |v: &[u64]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * p as usize + c as usize) };
    let powers: Vec<Matrix> = (0..m).map(|j| matrix.pow_mod(j, p)).collect();
    let vectors: Vec<Vec<u64>> = (0..base).map(decode).collect();
    // action[j][w] = M^j w
    let action: Vec<Vec<usize>> = powers
        .iter()
        .map(|mj| vectors.iter().map(|w| encode(&mj.apply_mod(w, p))).collect())
        .collect();
    let add = |a: usize, b: usize| -> usize {
        let s: Vec<u64> = vectors[a]
            .iter()
            .zip(&vectors[b])
            .map(|(x, y)| (x + y) % p)
            .collect();
        encode(&s)
    };
    let mut sums = vec![0usize; base * base];
    for a in 0..base {
        for b in 0..base {
            sums[a * base + b] = add(a, b);
        }
    }
    let group = FiniteGroup::from_fn(base * m, |x, y| {
        let (v, j) = (x % base, x / base);
        let (w, l) = (y % base, y / base);
        sums[v * base + action[j][w]] + base * ((j + l) % m)
    })?;
    Ok(group.with_spec(format!("E({p},{k},{matrix},{m})")))
}

/// A permutation of `0..degree`, stored as the image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self(images))
    }

    /// Builds from disjoint cycles over 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point == 0 || point > degree {
                    return Err(invalid(format!("point {point} outside 1..={degree}")));
                }
                if std::mem::replace(&mut touched[point - 1], true) {
                    return Err(invalid(format!("point {point} appears twice in the cycles")));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                images[point - 1] = next - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self(self.0.iter().map(|&i| other.0[i]).collect())
    }
}

/// The permutation group generated by `generators`, elements in breadth-first
/// order from the identity, multiplication `x·y` = apply `x` then `y`.
pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<FiniteGroup, GroupError> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(invalid(format!(
            "generator of degree {} in a degree-{degree} group",
            g.degree()
        )));
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for g in generators {
            let next = elements[head].then(g);
            if !index.contains_key(&next) {
                if elements.len() == CONSTRUCTION_LIMIT {
                    return Err(GroupError::TooLarge {
                        order: CONSTRUCTION_LIMIT + 1,
                        limit: CONSTRUCTION_LIMIT,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }
    FiniteGroup::from_fn(elements.len(), |x, y| index[&elements[x].then(&elements[y])])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_of_order(g: &FiniteGroup, k: usize) -> usize {
        g.element_orders().iter().filter(|&&o| o == k).count()
    }

    #[test]
    fn cyclic_basics() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(6).unwrap().element_order(1).unwrap(), 6);
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn abelian_parts() {
        let g = abelian(&[2, 2, 2]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(count_of_order(&g, 4), 0);
        assert_eq!(g.spec(), Some("A2x2x2"));
        assert!(abelian(&[]).is_err());
    }

    #[test]
    fn products() {
        let s3 = dihedral(3).unwrap();
        let g = direct_product(&s3, &cyclic(5).unwrap()).unwrap();
        assert_eq!(g.order(), 30);
        assert_eq!(count_of_order(&g, 6), 0);
        assert_eq!(g.spec(), Some("D3xC5"));
        let big = cyclic(64).unwrap();
        assert!(matches!(
            direct_product(&big, &big),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn metacyclic_relations() {
        let g = metacyclic(7, 3, 2).unwrap();
        assert_eq!(g.order(), 21);
        // a = (1,0) = index 1, b = (0,1) = index 7
        let (a, b) = (1, 7);
        assert_eq!(g.element_order(a).unwrap(), 7);
        let conj = g.mul(g.mul(b, a), g.inv(b));
        assert_eq!(conj, g.pow(a, 2));
        assert!(!g.commutes(a, b));
        assert!(metacyclic(7, 3, 3).is_err());
    }

    #[test]
    fn dihedral_and_dicyclic() {
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        for reflection in 4..8 {
            assert_eq!(d4.element_order(reflection).unwrap(), 2);
        }
        let q8 = dicyclic(2).unwrap();
        assert_eq!(count_of_order(&q8, 2), 1);
        for n in 2..10 {
            assert_eq!(count_of_order(&dicyclic(n).unwrap(), 2), 1, "Dic{n}");
        }
        assert!(dihedral(1).is_err());
        assert!(dicyclic(1).is_err());
    }

    #[test]
    fn two_groups() {
        let sd = semidihedral(16).unwrap();
        assert_eq!(count_of_order(&sd, 8), 4);
        assert!(!sd.commutes(1, 8));
        assert_eq!(generalized_quaternion(8).unwrap(), dicyclic(2).unwrap());
        assert!(semidihedral(8).is_err());
        assert!(generalized_quaternion(12).is_err());
    }

    #[test]
    fn elementary_semidirect_a4() {
        let m = Matrix::new(vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.order_mod(2), Some(3));
        let a4 = elementary_semidirect(2, &m, 3).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.spec(), Some("E(2,2,[0,1;1,1],3)"));
        assert!(elementary_semidirect(2, &m, 2).is_err());
        let singular = Matrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(elementary_semidirect(2, &singular, 1).is_err());
    }

    #[test]
    fn identity_action_is_direct_product() {
        let g = elementary_semidirect(3, &Matrix::identity(2), 4).unwrap();
        let expected = abelian(&[3, 3, 4]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn permutation_groups() {
        let s4 = from_permutations(
            4,
            &[
                Permutation::from_cycles(4, &[vec![1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s4.order(), 24);
        let a4 = from_permutations(
            4,
            &[
                Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a4.order(), 12);
        let trivial = from_permutations(3, &[Permutation::identity(3)]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn unit_orders() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(2, 4), None);
        assert_eq!(smallest_unit_of_order(27, 9), Some(4));
        assert_eq!(smallest_unit_of_order(13, 4), Some(5));
    }
}

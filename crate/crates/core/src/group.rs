//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};

/// A finite group on `0..order`, `table[a][b] = a * b`. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if let Some(row) = table.iter().find(|r| r.len() != n) {
            return Err(Error::NotAGroup(format!("row of length {} in a table of order {n}", row.len())));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotAGroup("entry outside the index set".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { table, identity, inverses })
    }

    /// Cyclic group Z/n, element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic table is a group")
    }

    /// Z/d1 x ... x Z/dk with mixed-radix indexing (last factor fastest).
    pub fn abelian(orders: &[usize]) -> FiniteGroup {
        orders
            .iter()
            .map(|&d| FiniteGroup::cyclic(d))
            .reduce(|a, b| a.direct_product(&b))
            .unwrap_or_else(|| FiniteGroup::cyclic(1))
    }

    /// Symmetric group on `n` letters; permutations in lexicographic order,
    /// product `(s * t)(x) = s(t(x))`.
    pub fn symmetric(n: usize) -> FiniteGroup {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&x| s[x]).collect()))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).expect("permutation table is a group")
    }

    /// `G x H` with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugacy_classes(&self) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        for x in 0..n {
            if seen[x] {
                continue;
            }
            count += 1;
            for g in 0..n {
                seen[self.mul(self.mul(g, x), self.inverse(g))] = true;
            }
        }
        count
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_has_three_classes() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.conjugacy_classes(), 3);
        assert_eq!(s3.identity(), 0);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(FiniteGroup::from_table(vec![]).is_err());
        // x*y = x is associative but has no two-sided identity
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![1, 1]]).is_err());
    }

    #[test]
    fn abelian_products() {
        let g = FiniteGroup::abelian(&[2, 6]);
        assert_eq!(g.order(), 12);
        assert!(g.is_abelian());
        assert_eq!(g.conjugacy_classes(), 12);
    }
}

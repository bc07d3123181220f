//! Incremental sparse elimination for large, very sparse linear systems.
//!
//! Equations are fed one at a time and kept in reduced row echelon form, so a
//! redundant equation costs one reduction pass and is dropped. Systems built
//! from structure constants of group-like algebras are mostly two-term rows,
//! which this keeps cheap where a dense `n^3 x n^2` elimination would not be.

use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::matrix::Vector;

type SparseRow = BTreeMap<usize, Scalar>;

#[derive(Debug, Clone)]
pub struct SparseSystem {
    field: Field,
    unknowns: usize,
    /// pivot column -> reduced row (column `unknowns` holds the right-hand side)
    pivots: BTreeMap<usize, SparseRow>,
    inconsistent: bool,
}

impl SparseSystem {
    pub fn new(field: Field, unknowns: usize) -> SparseSystem {
        SparseSystem { field, unknowns, pivots: BTreeMap::new(), inconsistent: false }
    }

    /// Adds `sum coeffs[i].1 * x[coeffs[i].0] = rhs`. Repeated indices accumulate.
    pub fn add_equation(&mut self, coeffs: impl IntoIterator<Item = (usize, Scalar)>, rhs: Scalar) {
        if self.inconsistent {
            return;
        }
        let mut row = SparseRow::new();
        for (j, c) in coeffs {
            assert!(j < self.unknowns, "unknown index out of range");
            accumulate(&mut row, j, &c);
        }
        accumulate(&mut row, self.unknowns, &rhs);

        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (c, f) in hits {
            for (j, v) in &self.pivots[&c] {
                accumulate(&mut row, *j, &-(&f * v));
            }
        }

        let Some((&lead, lead_val)) = row.iter().next() else {
            return;
        };
        if lead == self.unknowns {
            self.inconsistent = true;
            return;
        }
        let inv = lead_val.inv().expect("nonzero leading coefficient");
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        for other in self.pivots.values_mut() {
            if let Some(f) = other.get(&lead).cloned() {
                for (j, v) in &row {
                    accumulate(other, *j, &-(&f * v));
                }
            }
        }
        self.pivots.insert(lead, row);
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A particular solution with every free unknown set to zero.
    pub fn solution(&self) -> Option<Vector> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![self.field.zero(); self.unknowns];
        for (&c, row) in &self.pivots {
            if let Some(v) = row.get(&self.unknowns) {
                x[c] = v.clone();
            }
        }
        Some(x)
    }
}

fn accumulate(row: &mut SparseRow, j: usize, v: &Scalar) {
    if v.is_zero() {
        return;
    }
    let zero = match row.get_mut(&j) {
        Some(x) => {
            *x += v;
            x.is_zero()
        }
        None => {
            row.insert(j, v.clone());
            false
        }
    };
    if zero {
        row.remove(&j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    #[test]
    fn matches_dense_solver() {
        let q = Field::Rationals;
        let m = Matrix::from_i64(q, &[&[1, 1, 0], &[0, 1, -1], &[1, 2, -1]]);
        let rhs = [q.from_i64(3), q.from_i64(1), q.from_i64(4)];
        let mut sys = SparseSystem::new(q, 3);
        for i in 0..3 {
            sys.add_equation(m.row(i).iter().cloned().enumerate(), rhs[i].clone());
        }
        assert_eq!(sys.rank(), m.rank());
        let x = sys.solution().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), rhs.to_vec());
    }

    #[test]
    fn detects_inconsistency() {
        let f = Field::Prime(2);
        let mut sys = SparseSystem::new(f, 2);
        sys.add_equation([(0, f.one()), (1, f.one())], f.zero());
        sys.add_equation([(0, f.one()), (1, f.one())], f.one());
        assert!(!sys.is_consistent());
        assert_eq!(sys.solution(), None);
    }
}

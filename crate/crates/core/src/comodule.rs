//! Finite-dimensional representations as right `A`-comodules.
//!
//! `coaction[i][j][k]` is the coefficient of `v_j (x) e_k` in `rho(v_i)`. The
//! `A*`-module structure is derived: `w . v = (id (x) w)(rho(v))`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hopf::FiniteHopfAlgebra;
use crate::integral;
use crate::linalg::{dot, unit_vector, zero_vector, Matrix, Scalar, Vector};
use crate::report::AxiomReport;
use crate::tensor::Tensor3;

pub const COUNIT_LAW: &str = "counit law";
pub const COASSOCIATIVITY_LAW: &str = "coassociativity law";

#[derive(Debug, Clone)]
pub struct Comodule {
    algebra: Arc<FiniteHopfAlgebra>,
    coaction: Tensor3,
}

fn same_algebra(a: &Arc<FiniteHopfAlgebra>, b: &Arc<FiniteHopfAlgebra>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

impl Comodule {
    /// Validates shape and both comodule laws.
    pub fn new(algebra: Arc<FiniteHopfAlgebra>, coaction: Tensor3) -> Result<Comodule> {
        let v = Comodule::new_unchecked(algebra, coaction)?;
        let report = v.verify();
        if report.all_passed() {
            Ok(v)
        } else {
            Err(Error::ComoduleAxioms(report))
        }
    }

    /// Validates the tensor shape only.
    pub fn new_unchecked(algebra: Arc<FiniteHopfAlgebra>, coaction: Tensor3) -> Result<Comodule> {
        let [a, b, c] = coaction.dims();
        if a == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if b != a {
            return Err(Error::DimensionMismatch { expected: a, found: b });
        }
        if c != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: c });
        }
        if coaction.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), coaction.field()));
        }
        Ok(Comodule { algebra, coaction })
    }

    /// The one-dimensional trivial comodule `rho(v) = v (x) 1`.
    pub fn trivial(algebra: Arc<FiniteHopfAlgebra>) -> Comodule {
        let unit = algebra.unit().to_vec();
        Comodule::one_dimensional(algebra, &unit).expect("1 is grouplike")
    }

    /// `rho(v) = v (x) g` for a grouplike `g` of `A` (a character of `G`).
    pub fn one_dimensional(algebra: Arc<FiniteHopfAlgebra>, grouplike: &[Scalar]) -> Result<Comodule> {
        algebra.check_element(grouplike)?;
        let coaction = Tensor3::from_fn(algebra.field(), [1, 1, algebra.dim()], |_, _, k| {
            grouplike[k].clone()
        });
        Comodule::new(algebra, coaction)
    }

    /// `V = A` with `rho = Delta`.
    pub fn regular(algebra: Arc<FiniteHopfAlgebra>) -> Comodule {
        let coaction = algebra.comult_tensor().clone();
        Comodule { algebra, coaction }
    }

    /// Representation of a finite group through matrices `g -> M_g`, as a comodule
    /// over `constant_group_scheme(group)`: `rho(v) = sum_g (M_g v) (x) delta_g`.
    pub fn from_group_action(
        algebra: Arc<FiniteHopfAlgebra>,
        group: &FiniteGroup,
        matrices: &[Matrix],
    ) -> Result<Comodule> {
        if matrices.len() != group.order() || algebra.dim() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: matrices.len() });
        }
        let dim = matrices[0].rows();
        let coaction = Tensor3::from_fn(algebra.field(), [dim, dim, group.order()], |i, j, g| {
            matrices[g].get(j, i).clone()
        });
        Comodule::new(algebra, coaction)
    }

    pub fn algebra(&self) -> &Arc<FiniteHopfAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.coaction.dims()[0]
    }

    pub fn coaction(&self) -> &Tensor3 {
        &self.coaction
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    pub fn verify(&self) -> AxiomReport {
        let (d, n) = (self.dim(), self.algebra.dim());
        let f = self.algebra.field();
        let eps = self.algebra.counit();
        let mut report = AxiomReport::default();

        let counit = (0..d).all(|i| {
            (0..d).all(|j| {
                let value = dot(self.coaction.fiber(i, j), eps);
                if i == j {
                    value.is_one()
                } else {
                    value.is_zero()
                }
            })
        });
        report.push(COUNIT_LAW, counit);

        let comult = self.algebra.comult_tensor();
        let coassoc = (0..d).all(|i| {
            let mut left = zero_vector(f, d * n * n);
            let mut right = zero_vector(f, d * n * n);
            for (j, k, r) in self.coaction.nonzeros(i) {
                // (rho (x) id): rho(v_j) (x) e_k
                for (l, m, rj) in self.coaction.nonzeros(j) {
                    left[(l * n + m) * n + k] += &(r * rj);
                }
                // (id (x) Delta): v_j (x) Delta(e_k)
                for (m, q, dk) in comult.nonzeros(k) {
                    right[(j * n + m) * n + q] += &(r * dk);
                }
            }
            left == right
        });
        report.push(COASSOCIATIVITY_LAW, coassoc);
        report
    }

    /// `w . v = (id (x) w)(rho(v))`.
    pub fn astar_action(&self, w: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.algebra.check_element(w)?;
        self.check_vector(v)?;
        let f = self.algebra.field();
        let mut out = zero_vector(f, self.dim());
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, r) in self.coaction.nonzeros(i) {
                if !w[k].is_zero() {
                    out[j] += &(&(vi * r) * &w[k]);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `v -> w . v`.
    pub fn action_matrix(&self, w: &[Scalar]) -> Result<Matrix> {
        let f = self.algebra.field();
        let cols = (0..self.dim())
            .map(|i| self.astar_action(w, &unit_vector(f, self.dim(), i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(f, self.dim(), &cols))
    }

    /// The character: partial trace of the coaction, an element of `A`.
    pub fn character(&self) -> Vector {
        let f = self.algebra.field();
        let mut chi = zero_vector(f, self.algebra.dim());
        for i in 0..self.dim() {
            for (k, x) in self.coaction.fiber(i, i).iter().enumerate() {
                chi[k] += x;
            }
        }
        chi
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        same_algebra(&self.algebra, &other.algebra)?;
        let (d1, d2) = (self.dim(), other.dim());
        let f = self.algebra.field();
        let coaction = Tensor3::from_fn(f, [d1 + d2, d1 + d2, self.algebra.dim()], |i, j, k| {
            match (i < d1, j < d1) {
                (true, true) => self.coaction.get(i, j, k).clone(),
                (false, false) => other.coaction.get(i - d1, j - d1, k).clone(),
                _ => f.zero(),
            }
        });
        Ok(Comodule { algebra: self.algebra.clone(), coaction })
    }

    /// `rho(v (x) v') = v_0 (x) v'_0 (x) v_1 v'_1`, basis `(i, i')` at `i * dim V' + i'`.
    pub fn tensor_product(&self, other: &Comodule) -> Result<Comodule> {
        same_algebra(&self.algebra, &other.algebra)?;
        let (d1, d2, n) = (self.dim(), other.dim(), self.algebra.dim());
        let mut coaction = Tensor3::zeros(self.algebra.field(), d1 * d2, d1 * d2, n);
        let mult = self.algebra.mult_tensor();
        for i in 0..d1 {
            for i2 in 0..d2 {
                for (j, a, r) in self.coaction.nonzeros(i) {
                    for (j2, b, r2) in other.coaction.nonzeros(i2) {
                        let c = r * r2;
                        for (k, m) in mult.fiber(a, b).iter().enumerate() {
                            if !m.is_zero() {
                                coaction.add_to(i * d2 + i2, j * d2 + j2, k, &(&c * m));
                            }
                        }
                    }
                }
            }
        }
        Ok(Comodule { algebra: self.algebra.clone(), coaction })
    }

    /// Contragredient comodule on the dual basis, with matrix coefficients
    /// `R*_{ij} = S(R_{ji})`, so that its character is `S(chi_V)`.
    pub fn dual(&self) -> Comodule {
        let (d, n) = (self.dim(), self.algebra.dim());
        let s = self.algebra.antipode_matrix();
        let mut coaction = Tensor3::zeros(self.algebra.field(), d, d, n);
        for i in 0..d {
            for j in 0..d {
                let image = s.mul_vec(self.coaction.fiber(j, i)).expect("dimension");
                for (k, x) in image.into_iter().enumerate() {
                    coaction.set(i, j, k, x);
                }
            }
        }
        Comodule { algebra: self.algebra.clone(), coaction }
    }

    /// `rho(v) = v (x) 1`.
    pub fn is_coinvariant(&self, v: &[Scalar]) -> bool {
        if v.len() != self.dim() {
            return false;
        }
        let (d, n) = (self.dim(), self.algebra.dim());
        let unit = self.algebra.unit();
        let mut rho = zero_vector(self.algebra.field(), d * n);
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, r) in self.coaction.nonzeros(i) {
                rho[j * n + k] += &(vi * r);
            }
        }
        (0..d).all(|j| (0..n).all(|k| rho[j * n + k] == &v[j] * &unit[k]))
    }

    /// Basis of `V^G = {v : rho(v) = v (x) 1}` by a direct linear solve.
    pub fn fixed_space(&self) -> Vec<Vector> {
        let (d, n) = (self.dim(), self.algebra.dim());
        let f = self.algebra.field();
        let unit = self.algebra.unit();
        // row (j, k): sum_i v_i r[i][j][k] - v_j u_k = 0
        let system = Matrix::from_fn(f, d * n, d, |row, i| {
            let (j, k) = (row / n, row % n);
            let mut x = self.coaction.get(i, j, k).clone();
            if i == j {
                x -= &unit[k];
            }
            x
        });
        system.nullspace()
    }

    /// `dim V^G`. Uses the Reynolds projection when the group is linearly
    /// reductive, otherwise the direct solve.
    pub fn invariants_dim(&self) -> usize {
        match integral::invariant_integral(&self.algebra) {
            Ok(integral::IntegralResult { normalized: Some(w_g), .. }) => {
                self.action_matrix(&w_g).expect("integral has algebra dimension").rank()
            }
            _ => self.fixed_space().len(),
        }
    }
}

//! Finite commutative Hopf algebras as dense structure-constant tensors.
//!
//! A finite group scheme `G = Spec A` is stored through the coordinate ring `A`
//! on a basis `e_0..e_{n-1}`:
//!
//! * `mult[i][j][k]`: `e_i * e_j = sum_k mult[i][j][k] e_k`
//! * `unit`: coordinates of `1`
//! * `comult[i][j][k]`: `Delta(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k`
//! * `counit[i] = eps(e_i)`
//! * `antipode`: matrix acting on coordinate columns, `S(e_j) = sum_i S[i][j] e_i`
//!
//! Elements of `A (x) A` are flat vectors indexed by `j * n + k`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{unit_vector, zero_vector, Field, Matrix, Scalar, Vector};
use crate::report::AxiomReport;
use crate::tensor::Tensor3;

pub const ASSOCIATIVITY: &str = "associativity";
pub const UNIT: &str = "unit";
pub const COMMUTATIVITY: &str = "commutativity";
pub const COASSOCIATIVITY: &str = "coassociativity";
pub const COUNIT: &str = "counit";
pub const COMPATIBILITY: &str = "compatibility";
pub const ANTIPODE: &str = "antipode";
pub const ANTIPODE_INVOLUTION: &str = "antipode squared is identity";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHopfAlgebra {
    field: Field,
    dim: usize,
    mult: Tensor3,
    unit: Vector,
    comult: Tensor3,
    counit: Vector,
    antipode: Matrix,
    labels: Vec<String>,
}

impl FiniteHopfAlgebra {
    /// Assembles a Hopf algebra from user-supplied structure constants and
    /// verifies every axiom before returning it.
    pub fn new(
        mult: Tensor3,
        unit: Vector,
        comult: Tensor3,
        counit: Vector,
        antipode: Matrix,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteHopfAlgebra> {
        let a = FiniteHopfAlgebra::new_unchecked(mult, unit, comult, counit, antipode, labels)?;
        let report = a.verify_axioms();
        if report.all_passed() {
            Ok(a)
        } else {
            Err(Error::HopfAxioms(report))
        }
    }

    /// Checks shapes and fields only. Axioms can be inspected with [`Self::verify_axioms`].
    pub fn new_unchecked(
        mult: Tensor3,
        unit: Vector,
        comult: Tensor3,
        counit: Vector,
        antipode: Matrix,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteHopfAlgebra> {
        let field = mult.field();
        let dim = mult.dims()[0];
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let want = |expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected, found })
            }
        };
        for d in mult.dims().into_iter().chain(comult.dims()) {
            want(dim, d)?;
        }
        want(dim, unit.len())?;
        want(dim, counit.len())?;
        want(dim, antipode.rows())?;
        want(dim, antipode.cols())?;
        for f in [comult.field(), antipode.field()]
            .into_iter()
            .chain(unit.iter().chain(&counit).map(Scalar::field))
        {
            if f != field {
                return Err(Error::FieldMismatch(field, f));
            }
        }
        let labels = match labels {
            Some(l) => {
                want(dim, l.len())?;
                l
            }
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        Ok(FiniteHopfAlgebra { field, dim, mult, unit, comult, counit, antipode, labels })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_tensor(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim, i)
    }

    pub fn check_element(&self, a: &[Scalar]) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: a.len() });
        }
        if let Some(x) = a.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        Ok(())
    }

    /// Product in `A`.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, m) in self.mult.fiber(i, j).iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &(&xy * m);
                    }
                }
            }
        }
        out
    }

    /// `Delta(a)` as a flat vector of length `n^2`.
    pub fn comultiply(&self, a: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(self.field, n * n);
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, d) in self.comult.nonzeros(i) {
                out[j * n + k] += &(x * d);
            }
        }
        out
    }

    pub fn apply_counit(&self, a: &[Scalar]) -> Scalar {
        crate::linalg::dot(&self.counit, a)
    }

    pub fn apply_antipode(&self, a: &[Scalar]) -> Vector {
        self.antipode.mul_vec(a).expect("element has algebra dimension")
    }

    /// Product in `A (x) A`: `(a (x) b)(c (x) d) = ac (x) bd`.
    fn multiply_tensor2(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(self.field, n * n);
        for (p, xp) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (q, yq) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xp * yq;
                let (a, b) = (p / n, p % n);
                let (cc, d) = (q / n, q % n);
                let left = self.mult.fiber(a, cc);
                let right = self.mult.fiber(b, d);
                for (s, l) in left.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let cl = &c * l;
                    for (t, r) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out[s * n + t] += &(&cl * r);
                    }
                }
            }
        }
        out
    }

    /// Checks every Hopf algebra axiom exactly.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.dim;
        let f = self.field;
        let mut report = AxiomReport::default();

        let assoc = (0..n).all(|i| {
            (0..n).all(|j| {
                let ij = self.mult.fiber(i, j).to_vec();
                (0..n).all(|k| {
                    let jk = self.mult.fiber(j, k).to_vec();
                    self.multiply(&ij, &self.basis(k)) == self.multiply(&self.basis(i), &jk)
                })
            })
        });
        report.push(ASSOCIATIVITY, assoc);

        let unit = (0..n).all(|i| {
            let e = self.basis(i);
            self.multiply(&self.unit, &e) == e && self.multiply(&e, &self.unit) == e
        });
        report.push(UNIT, unit);

        let comm = (0..n).all(|i| (0..n).all(|j| self.mult.fiber(i, j) == self.mult.fiber(j, i)));
        report.push(COMMUTATIVITY, comm);

        let coassoc = (0..n).all(|i| {
            let mut left = zero_vector(f, n * n * n);
            let mut right = zero_vector(f, n * n * n);
            for (j, k, d) in self.comult.nonzeros(i) {
                // (Delta (x) id): Delta(e_j) (x) e_k
                for (a, b, dj) in self.comult.nonzeros(j) {
                    left[(a * n + b) * n + k] += &(d * dj);
                }
                // (id (x) Delta): e_j (x) Delta(e_k)
                for (a, b, dk) in self.comult.nonzeros(k) {
                    right[(j * n + a) * n + b] += &(d * dk);
                }
            }
            left == right
        });
        report.push(COASSOCIATIVITY, coassoc);

        let counit = (0..n).all(|i| {
            let mut left = zero_vector(f, n);
            let mut right = zero_vector(f, n);
            for (j, k, d) in self.comult.nonzeros(i) {
                left[k] += &(d * &self.counit[j]);
                right[j] += &(d * &self.counit[k]);
            }
            let e = self.basis(i);
            left == e && right == e
        });
        report.push(COUNIT, counit);

        let unit_vec = &self.unit;
        let mut one_one = zero_vector(f, n * n);
        for (j, x) in unit_vec.iter().enumerate() {
            for (k, y) in unit_vec.iter().enumerate() {
                one_one[j * n + k] = x * y;
            }
        }
        let deltas: Vec<Vector> = (0..n).map(|i| self.comultiply(&self.basis(i))).collect();
        let compat = self.comultiply(unit_vec) == one_one
            && self.apply_counit(unit_vec).is_one()
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let prod = self.mult.fiber(i, j);
                    self.comultiply(prod) == self.multiply_tensor2(&deltas[i], &deltas[j])
                        && self.apply_counit(prod) == &self.counit[i] * &self.counit[j]
                })
            });
        report.push(COMPATIBILITY, compat);

        let s_cols: Vec<Vector> = (0..n).map(|j| self.antipode.column(j)).collect();
        let antipode = (0..n).all(|i| {
            let mut left = zero_vector(f, n);
            let mut right = zero_vector(f, n);
            for (j, k, d) in self.comult.nonzeros(i) {
                let l = self.multiply(&s_cols[j], &self.basis(k));
                let r = self.multiply(&self.basis(j), &s_cols[k]);
                for t in 0..n {
                    left[t] += &(d * &l[t]);
                    right[t] += &(d * &r[t]);
                }
            }
            let expected: Vector = self.unit.iter().map(|u| u * &self.counit[i]).collect();
            left == expected && right == expected
        });
        report.push(ANTIPODE, antipode);

        let involution = self.antipode.mul(&self.antipode).map(|m| m.is_identity()).unwrap_or(false);
        report.push(ANTIPODE_INVOLUTION, involution);

        report
    }

    /// Re-expresses the structure in the basis given by the columns of `p`
    /// (column `i` holds the old coordinates of the new basis vector `i`).
    pub fn change_basis(&self, p: &Matrix) -> Result<FiniteHopfAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.rows().max(p.cols()) });
        }
        let q = p
            .inverse()
            .ok_or_else(|| Error::Unsupported("change of basis matrix is singular".into()))?;
        let new_basis: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        let to_new = |v: &[Scalar]| q.mul_vec(v).expect("square");
        let mut mult = Tensor3::zeros(self.field, n, n, n);
        let mut comult = Tensor3::zeros(self.field, n, n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in to_new(&self.multiply(&new_basis[i], &new_basis[j])).into_iter().enumerate() {
                    mult.set(i, j, k, c);
                }
            }
            // (Q (x) Q) Delta(e'_i), computed as Q * D * Q^T on the n x n coefficient matrix
            let d = self.comultiply(&new_basis[i]);
            let dm = Matrix::from_fn(self.field, n, n, |a, b| d[a * n + b].clone());
            let t = q.mul(&dm)?.mul(&q.transpose())?;
            for a in 0..n {
                for b in 0..n {
                    comult.set(i, a, b, t.get(a, b).clone());
                }
            }
        }
        Ok(FiniteHopfAlgebra {
            field: self.field,
            dim: n,
            mult,
            unit: to_new(&self.unit),
            comult,
            counit: new_basis.iter().map(|v| self.apply_counit(v)).collect(),
            antipode: q.mul(&self.antipode)?.mul(p)?,
            labels: (0..n).map(|i| format!("b{i}")).collect(),
        })
    }

    /// `Delta` is symmetric: `comult[i][j][k] = comult[i][k][j]`.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.comult.get(i, j, k) == self.comult.get(i, k, j))))
    }

    /// True when `e_i` is grouplike: `Delta(e_i) = e_i (x) e_i` and `eps(e_i) = 1`.
    pub fn is_grouplike(&self, a: &[Scalar]) -> bool {
        let n = self.dim;
        let delta = self.comultiply(a);
        let mut aa = zero_vector(self.field, n * n);
        for j in 0..n {
            for k in 0..n {
                aa[j * n + k] = &a[j] * &a[k];
            }
        }
        delta == aa && self.apply_counit(a).is_one()
    }
}

/// Functions on a finite group: `A = K^G` on the indicator basis `delta_g`.
pub fn constant_group_scheme(group: &FiniteGroup, field: Field) -> FiniteHopfAlgebra {
    let n = group.order();
    let mult = Tensor3::from_fn(field, [n; 3], |i, j, k| {
        if i == j && j == k {
            field.one()
        } else {
            field.zero()
        }
    });
    let mut comult = Tensor3::zeros(field, n, n, n);
    for a in 0..n {
        for b in 0..n {
            comult.set(group.mul(a, b), a, b, field.one());
        }
    }
    let counit = unit_vector(field, n, group.identity());
    let antipode = Matrix::from_fn(field, n, n, |i, j| {
        if i == group.inverse(j) {
            field.one()
        } else {
            field.zero()
        }
    });
    let labels = (0..n).map(|g| format!("d{g}")).collect();
    FiniteHopfAlgebra {
        field,
        dim: n,
        mult,
        unit: vec![field.one(); n],
        comult,
        counit,
        antipode,
        labels,
    }
}

/// `mu_n = Spec K[x]/(x^n - 1)` on the basis `1, x, ..., x^{n-1}`.
pub fn mu_n(n: usize, field: Field) -> FiniteHopfAlgebra {
    assert!(n >= 1, "mu_n needs n >= 1");
    let delta = |b: bool| if b { field.one() } else { field.zero() };
    let mult = Tensor3::from_fn(field, [n; 3], |i, j, k| delta((i + j) % n == k));
    let comult = Tensor3::from_fn(field, [n; 3], |i, j, k| delta(i == j && j == k));
    let antipode = Matrix::from_fn(field, n, n, |i, j| delta(i == (n - j) % n));
    FiniteHopfAlgebra {
        field,
        dim: n,
        mult,
        unit: unit_vector(field, n, 0),
        comult,
        counit: vec![field.one(); n],
        antipode,
        labels: (0..n).map(|i| format!("x^{i}")).collect(),
    }
}

/// `alpha_p = Spec K[x]/(x^p)` with `x` primitive; needs characteristic `p > 0`.
pub fn alpha_p(field: Field) -> Result<FiniteHopfAlgebra> {
    let p = match field {
        Field::Rationals => return Err(Error::CharacteristicZero),
        Field::Prime(p) => p as usize,
    };
    if p > 1 << 12 {
        return Err(Error::Unsupported(format!("alpha_p with p = {p} is too large to materialize")));
    }
    let delta = |b: bool| if b { field.one() } else { field.zero() };
    let mult = Tensor3::from_fn(field, [p; 3], |i, j, k| delta(i + j == k));
    // Delta(x^k) = sum_i binom(k, i) x^i (x) x^{k-i}
    let mut binom = vec![vec![field.zero(); p]; p];
    for k in 0..p {
        binom[k][0] = field.one();
        for i in 1..=k {
            binom[k][i] = &binom[k - 1][i - 1] + &binom[k - 1][i];
        }
    }
    let comult = Tensor3::from_fn(field, [p; 3], |k, i, j| {
        if i + j == k {
            binom[k][i].clone()
        } else {
            field.zero()
        }
    });
    let antipode = Matrix::from_fn(field, p, p, |i, j| {
        if i != j {
            field.zero()
        } else if j % 2 == 0 {
            field.one()
        } else {
            -field.one()
        }
    });
    Ok(FiniteHopfAlgebra {
        field,
        dim: p,
        mult,
        unit: unit_vector(field, p, 0),
        comult,
        counit: unit_vector(field, p, 0),
        antipode,
        labels: (0..p).map(|i| format!("x^{i}")).collect(),
    })
}

/// Coordinate ring of `G x H`: `A (x) B` with basis `e_i (x) f_k` at index `i * dim B + k`.
pub fn product(a: &FiniteHopfAlgebra, b: &FiniteHopfAlgebra) -> Result<FiniteHopfAlgebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field, b.field));
    }
    let m = b.dim;
    let n = a.dim * m;
    let split = |x: usize| (x / m, x % m);
    let combine = |ta: &Tensor3, tb: &Tensor3| {
        Tensor3::from_fn(a.field, [n; 3], |x, y, z| {
            let (i, k) = split(x);
            let (j, l) = split(y);
            let (s, t) = split(z);
            let u = ta.get(i, j, s);
            if u.is_zero() {
                return a.field.zero();
            }
            u * tb.get(k, l, t)
        })
    };
    let kron_vec = |u: &[Scalar], v: &[Scalar]| -> Vector {
        u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect()
    };
    let labels = a
        .labels
        .iter()
        .flat_map(|l| b.labels.iter().map(move |r| format!("{l}*{r}")))
        .collect();
    Ok(FiniteHopfAlgebra {
        field: a.field,
        dim: n,
        mult: combine(&a.mult, &b.mult),
        unit: kron_vec(&a.unit, &b.unit),
        comult: combine(&a.comult, &b.comult),
        counit: kron_vec(&a.counit, &b.counit),
        antipode: a.antipode.kron(&b.antipode)?,
        labels,
    })
}

/// The dual Hopf algebra on the dual basis. Requires a cocommutative input so the
/// result is again commutative, i.e. the coordinate ring of a group scheme.
pub fn cartier_dual(a: &FiniteHopfAlgebra) -> Result<FiniteHopfAlgebra> {
    if !a.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let n = a.dim;
    let mult = Tensor3::from_fn(a.field, [n; 3], |i, j, k| a.comult.get(k, i, j).clone());
    let comult = Tensor3::from_fn(a.field, [n; 3], |k, i, j| a.mult.get(i, j, k).clone());
    Ok(FiniteHopfAlgebra {
        field: a.field,
        dim: n,
        mult,
        unit: a.counit.clone(),
        comult,
        counit: a.unit.clone(),
        antipode: a.antipode.transpose(),
        labels: a.labels.iter().map(|l| format!("{l}'")).collect(),
    })
}

//! The convolution algebra `A*`, its trace form, the two polarities, and the
//! reductivity decision.
//!
//! For finite-dimensional `A` every functional generates a finite-dimensional
//! two-sided ideal, so the finite-orbit ideal of `A*` is all of `A*` and the trace
//! form is the symmetric bilinear form `<u, v> = tr(L_{uv})` on `A*`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hopf::FiniteHopfAlgebra;
use crate::linalg::{dot, unit_vector, zero_vector, Field, Matrix, Scalar, SparseSystem, Vector};
use crate::tensor::Tensor3;

/// `A*` on the dual basis `w_i = e_i*`, with `w_i w_j = sum_k c[i][j][k] w_k`
/// and `c[i][j][k] = comult[k][i][j]`.
#[derive(Debug, Clone)]
pub struct ConvolutionAlgebra {
    source: Arc<FiniteHopfAlgebra>,
    mult: Tensor3,
}

pub fn convolution_algebra(a: &FiniteHopfAlgebra) -> ConvolutionAlgebra {
    ConvolutionAlgebra::new(Arc::new(a.clone()))
}

impl ConvolutionAlgebra {
    pub fn new(source: Arc<FiniteHopfAlgebra>) -> ConvolutionAlgebra {
        let n = source.dim();
        let d = source.comult_tensor();
        let mult = Tensor3::from_fn(source.field(), [n; 3], |i, j, k| d.get(k, i, j).clone());
        ConvolutionAlgebra { source, mult }
    }

    pub fn source(&self) -> &Arc<FiniteHopfAlgebra> {
        &self.source
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    pub fn mult_tensor(&self) -> &Tensor3 {
        &self.mult
    }

    /// The unit of `A*`, which is the counit of `A`.
    pub fn unit(&self) -> Vector {
        self.source.counit().to_vec()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field(), self.dim(), i)
    }

    fn check(&self, v: &[Scalar]) -> Result<()> {
        self.source.check_element(v)
    }

    /// Convolution product `(u v)(a) = (u (x) v)(Delta a)`.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field(), self.dim());
        for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.mult.fiber(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// Evaluates a functional on an element of `A`.
    pub fn evaluate(&self, w: &[Scalar], a: &[Scalar]) -> Scalar {
        dot(w, a)
    }

    /// Matrix of `x -> w x` on the dual basis.
    pub fn left_mult_matrix(&self, w: &[Scalar]) -> Result<Matrix> {
        self.check(w)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.multiply(w, &self.basis(j))).collect();
        Ok(Matrix::from_columns(self.field(), n, &cols))
    }

    /// Matrix of `x -> x w` on the dual basis.
    pub fn right_mult_matrix(&self, w: &[Scalar]) -> Result<Matrix> {
        self.check(w)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.multiply(&self.basis(j), w)).collect();
        Ok(Matrix::from_columns(self.field(), n, &cols))
    }

    /// `tr(L_w)` via linearity: `sum_k w_k tr(L_{w_k})`.
    pub fn trace(&self, w: &[Scalar]) -> Scalar {
        dot(w, &self.basis_traces())
    }

    /// `tr(L_{w_k}) = sum_j c[k][j][j]` for every basis functional.
    pub fn basis_traces(&self) -> Vector {
        let n = self.dim();
        (0..n)
            .map(|k| {
                let mut t = self.field().zero();
                for j in 0..n {
                    t += self.mult.get(k, j, j);
                }
                t
            })
            .collect()
    }

    /// Gram matrix of the trace form, `G[i][j] = tr(L_{w_i w_j})`.
    pub fn trace_form_gram(&self) -> GramMatrix {
        let n = self.dim();
        let traces = self.basis_traces();
        let entries = Matrix::from_fn(self.field(), n, n, |i, j| dot(self.mult.fiber(i, j), &traces));
        GramMatrix { entries }
    }

    /// The polarity `Ã -> A`, `w~ -> <-, w~>`; coordinate `i` of the result is `<w_i, w~>`.
    pub fn polarity_phi(&self, gram: &GramMatrix, w_tilde: &[Scalar]) -> Result<Vector> {
        self.check(w_tilde)?;
        gram.entries.mul_vec(w_tilde)
    }

    /// The polarity `A* -> Ã*`, `w -> <w, ->`, as its values on the dual basis.
    pub fn polarity_varphi(&self, gram: &GramMatrix, w: &[Scalar]) -> Result<Vector> {
        self.check(w)?;
        gram.entries.transpose().mul_vec(w)
    }

    /// Matrix of `polarity_phi`, columns are images of the dual basis.
    pub fn phi_matrix(&self, gram: &GramMatrix) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> =
            (0..n).map(|j| self.polarity_phi(gram, &self.basis(j)).expect("basis")).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// Matrix of `polarity_varphi`, columns are images of the dual basis.
    pub fn varphi_matrix(&self, gram: &GramMatrix) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> =
            (0..n).map(|j| self.polarity_varphi(gram, &self.basis(j)).expect("basis")).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// `(f . c)(m) = f(c m)` for a functional `f` on `A*`.
    pub fn functional_times(&self, f: &[Scalar], c: &[Scalar]) -> Vector {
        (0..self.dim()).map(|j| dot(f, &self.multiply(c, &self.basis(j)))).collect()
    }

    /// `(c . f)(m) = f(m c)` for a functional `f` on `A*`.
    pub fn times_functional(&self, c: &[Scalar], f: &[Scalar]) -> Vector {
        (0..self.dim()).map(|j| dot(f, &self.multiply(&self.basis(j), c))).collect()
    }

    /// Left `A*`-action on `A`: `w . a = (id (x) w)(Delta a)`.
    pub fn act_left_on_coordinate(&self, w: &[Scalar], a: &[Scalar]) -> Vector {
        let n = self.dim();
        let d = self.source.comultiply(a);
        (0..n).map(|j| dot(&d[j * n..(j + 1) * n], w)).collect()
    }

    /// Right `A*`-action on `A`: `a . w = (w (x) id)(Delta a)`.
    pub fn act_right_on_coordinate(&self, a: &[Scalar], w: &[Scalar]) -> Vector {
        let n = self.dim();
        let d = self.source.comultiply(a);
        (0..n)
            .map(|k| {
                let mut acc = self.field().zero();
                for j in 0..n {
                    if !w[j].is_zero() {
                        acc += &(&w[j] * &d[j * n + k]);
                    }
                }
                acc
            })
            .collect()
    }
}

/// The trace form on the dual basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Matrix,
}

impl GramMatrix {
    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    pub fn pair(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        Ok(dot(u, &self.entries.mul_vec(v)?))
    }
}

/// The three equivalent forms of the trace-form criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `Ã -> A` is an isomorphism.
    PhiIsomorphism,
    /// `A* -> Ã*` is injective.
    VarphiInjective,
    /// `Ã -> Ã*` is injective and `Ã` is dense in `A*`.
    PhiInjectiveAndDense,
}

pub const FINITE_DIMENSION_NOTE: &str = "finite dimension: the finite-orbit ideal equals A*, \
density is automatic, and all three criteria reduce to rank(Gram) = dim";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductivityDecision {
    pub reductive: bool,
    pub gram_rank: usize,
    pub dim: usize,
    pub criteria_checked: Vec<Criterion>,
    pub note: String,
}

pub fn decide(gram: &GramMatrix) -> ReductivityDecision {
    let rank = gram.rank();
    ReductivityDecision {
        reductive: rank == gram.dim(),
        gram_rank: rank,
        dim: gram.dim(),
        criteria_checked: vec![
            Criterion::PhiIsomorphism,
            Criterion::VarphiInjective,
            Criterion::PhiInjectiveAndDense,
        ],
        note: FINITE_DIMENSION_NOTE.to_string(),
    }
}

/// Linear reductivity by non-degeneracy of the trace form.
pub fn is_linearly_reductive(a: &FiniteHopfAlgebra) -> ReductivityDecision {
    decide(&convolution_algebra(a).trace_form_gram())
}

/// Solves for a separability idempotent `e = sum e_ij w_i (x) w_j` in `A* (x) A*^op`:
/// `sum e_ij w_i w_j = 1` and `x e = e x` for every basis `x`, i.e.
/// `sum_i c[a][i][s] e_it = sum_j c[j][a][t] e_sj` for all `a, s, t`.
pub fn separability_idempotent(c: &ConvolutionAlgebra) -> Option<Vector> {
    let n = c.dim();
    let f = c.field();
    let var = |i: usize, j: usize| i * n + j;
    let mut sys = SparseSystem::new(f, n * n);
    let unit = c.unit();
    for k in 0..n {
        let mut coeffs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let m = c.mult.get(i, j, k);
                if !m.is_zero() {
                    coeffs.push((var(i, j), m.clone()));
                }
            }
        }
        sys.add_equation(coeffs, unit[k].clone());
        if !sys.is_consistent() {
            return None;
        }
    }
    for a in 0..n {
        for s in 0..n {
            for t in 0..n {
                let mut coeffs = Vec::new();
                for i in 0..n {
                    let m = c.mult.get(a, i, s);
                    if !m.is_zero() {
                        coeffs.push((var(i, t), m.clone()));
                    }
                }
                for j in 0..n {
                    let m = c.mult.get(j, a, t);
                    if !m.is_zero() {
                        coeffs.push((var(s, j), -m));
                    }
                }
                if !coeffs.is_empty() {
                    sys.add_equation(coeffs, f.zero());
                }
            }
        }
    }
    sys.solution()
}

/// Checks both defining conditions of a separability idempotent by substitution.
pub fn is_separability_idempotent(c: &ConvolutionAlgebra, e: &[Scalar]) -> bool {
    let n = c.dim();
    if e.len() != n * n {
        return false;
    }
    let f = c.field();
    let mut product = zero_vector(f, n);
    for i in 0..n {
        for j in 0..n {
            if e[i * n + j].is_zero() {
                continue;
            }
            let wij = c.multiply(&c.basis(i), &c.basis(j));
            for k in 0..n {
                product[k] += &(&e[i * n + j] * &wij[k]);
            }
        }
    }
    if product != c.unit() {
        return false;
    }
    (0..n).all(|a| {
        let x = c.basis(a);
        let mut left = zero_vector(f, n * n);
        let mut right = zero_vector(f, n * n);
        for i in 0..n {
            for j in 0..n {
                let coeff = &e[i * n + j];
                if coeff.is_zero() {
                    continue;
                }
                let xa = c.multiply(&x, &c.basis(i));
                let bx = c.multiply(&c.basis(j), &x);
                for s in 0..n {
                    left[s * n + j] += &(coeff * &xa[s]);
                    right[i * n + s] += &(coeff * &bx[s]);
                }
            }
        }
        left == right
    })
}

/// Whether `A*` is separable, decided by the existence of a separability idempotent.
pub fn separability_oracle(c: &ConvolutionAlgebra) -> bool {
    separability_idempotent(c).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{alpha_p, constant_group_scheme, mu_n};

    const Q: Field = Field::Rationals;

    fn ints(f: Field, v: &[i64]) -> Vector {
        v.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn group_algebra_of_z2() {
        let c = convolution_algebra(&constant_group_scheme(&FiniteGroup::cyclic(2), Q));
        let (e, g) = (c.basis(0), c.basis(1));
        assert_eq!(c.multiply(&g, &g), e);
        assert_eq!(c.multiply(&e, &g), g);
        assert_eq!(c.unit(), e);
        assert_eq!(c.left_mult_matrix(&g).unwrap(), Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
        assert!(c.left_mult_matrix(&c.unit()).unwrap().is_identity());
    }

    #[test]
    fn dual_of_mu2_is_split() {
        let c = convolution_algebra(&mu_n(2, Q));
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { c.basis(i) } else { zero_vector(Q, 2) };
                assert_eq!(c.multiply(&c.basis(i), &c.basis(j)), expected);
            }
        }
    }

    #[test]
    fn trivial_group_dual() {
        let c = convolution_algebra(&mu_n(1, Q));
        assert_eq!(c.unit(), vec![Q.one()]);
        assert_eq!(c.trace_form_gram().entries(), &Matrix::identity(Q, 1));
        assert!(is_linearly_reductive(&mu_n(1, Q)).reductive);
    }

    #[test]
    fn left_mult_is_linear() {
        let c = convolution_algebra(&constant_group_scheme(&FiniteGroup::symmetric(3), Q));
        let u = ints(Q, &[1, -2, 0, 3, 0, 1]);
        let v = ints(Q, &[0, 1, 5, 0, -1, 2]);
        let sum = crate::linalg::add_vectors(&u, &v);
        let lhs = c.left_mult_matrix(&sum).unwrap();
        let rhs = c.left_mult_matrix(&u).unwrap().add(&c.left_mult_matrix(&v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(c.left_mult_matrix(&[Q.one()]).is_err());
    }

    #[test]
    fn gram_examples() {
        let z2q = convolution_algebra(&constant_group_scheme(&FiniteGroup::cyclic(2), Q));
        assert_eq!(z2q.trace_form_gram().entries(), &Matrix::from_i64(Q, &[&[2, 0], &[0, 2]]));

        let f2 = Field::Prime(2);
        let z2f2 = convolution_algebra(&constant_group_scheme(&FiniteGroup::cyclic(2), f2));
        assert!(z2f2.trace_form_gram().entries().is_zero());

        let mu2 = convolution_algebra(&mu_n(2, f2));
        assert!(mu2.trace_form_gram().entries().is_identity());
    }

    #[test]
    fn polarity_examples() {
        let c = convolution_algebra(&constant_group_scheme(&FiniteGroup::cyclic(2), Q));
        let g = c.trace_form_gram();
        assert_eq!(c.polarity_phi(&g, &zero_vector(Q, 2)).unwrap(), zero_vector(Q, 2));
        assert_eq!(c.polarity_varphi(&g, &zero_vector(Q, 2)).unwrap(), zero_vector(Q, 2));
        assert_eq!(c.polarity_phi(&g, &c.basis(0)).unwrap(), ints(Q, &[2, 0]));
        assert_eq!(c.varphi_matrix(&g), c.phi_matrix(&g).transpose());

        let m = convolution_algebra(&mu_n(2, Q));
        let gm = m.trace_form_gram();
        // the grouplike dual basis is the idempotent basis; each block is one-dimensional,
        // so phi(1_i) is the trace of A_i*, i.e. the dual indicator of block i in A
        for i in 0..2 {
            assert_eq!(m.polarity_phi(&gm, &m.basis(i)).unwrap(), m.basis(i));
        }

        let z3 = convolution_algebra(&constant_group_scheme(&FiniteGroup::cyclic(3), Q));
        let g3 = z3.trace_form_gram();
        assert_eq!(z3.polarity_varphi(&g3, &z3.unit()).unwrap(), ints(Q, &[3, 0, 0]));
        assert!(z3.polarity_phi(&g3, &[Q.one()]).is_err());
    }

    #[test]
    fn reductivity_examples() {
        let z3 = is_linearly_reductive(&constant_group_scheme(&FiniteGroup::cyclic(3), Q));
        assert!(z3.reductive);
        assert_eq!(z3.gram_rank, 3);
        assert_eq!(z3.criteria_checked.len(), 3);

        let f2 = Field::Prime(2);
        let z2 = is_linearly_reductive(&constant_group_scheme(&FiniteGroup::cyclic(2), f2));
        assert!(!z2.reductive);
        assert_eq!(z2.gram_rank, 0);

        assert!(is_linearly_reductive(&mu_n(2, f2)).reductive);
    }

    #[test]
    fn separability_examples() {
        let c = convolution_algebra(&constant_group_scheme(&FiniteGroup::cyclic(2), Q));
        let e = separability_idempotent(&c).unwrap();
        // the solver fixes free unknowns at zero; any solution must satisfy the equations
        let n = 2;
        let mut m = zero_vector(Q, n);
        for i in 0..n {
            for j in 0..n {
                let prod = c.multiply(&c.basis(i), &c.basis(j));
                m = crate::linalg::add_vectors(&m, &crate::linalg::scale_vector(&e[i * n + j], &prod));
            }
        }
        assert_eq!(m, c.unit());
        assert!(is_separability_idempotent(&c, &e));
        // e = (e (x) e + g (x) g) / 2 satisfies both conditions by substitution
        let half = Q.from_ratio(1, 2).unwrap();
        let by_hand = vec![half.clone(), Q.zero(), Q.zero(), half];
        assert!(is_separability_idempotent(&c, &by_hand));
        assert!(!is_separability_idempotent(&c, &[Q.one(), Q.zero(), Q.zero(), Q.zero()]));

        let f2 = Field::Prime(2);
        assert!(!separability_oracle(&convolution_algebra(&constant_group_scheme(
            &FiniteGroup::cyclic(2),
            f2
        ))));
        for p in [2, 3, 5] {
            let a = alpha_p(Field::Prime(p)).unwrap();
            assert!(!separability_oracle(&convolution_algebra(&a)));
        }
    }
}

//! Invariant integrals, the star map, the Fourier transform `A -> A*`, and the
//! Reynolds projection.

use serde::{Deserialize, Serialize};

use crate::comodule::Comodule;
use crate::dual_trace::{convolution_algebra, ConvolutionAlgebra};
use crate::error::{Error, Result};
use crate::hopf::FiniteHopfAlgebra;
use crate::linalg::{dot, scale_vector, Matrix, Scalar, Vector};

#[derive(Debug, Clone, PartialEq)]
pub struct IntegralResult {
    pub integral_space_dim: usize,
    /// `w_G`, present iff some integral is nonzero on `1`.
    pub normalized: Option<Vector>,
}

/// Basis of `{l in A* : w l = w(1) l = l w for every w}`.
pub fn integral_space(a: &FiniteHopfAlgebra) -> Vec<Vector> {
    integral_space_of(&convolution_algebra(a))
}

fn integral_space_of(c: &ConvolutionAlgebra) -> Vec<Vector> {
    let f = c.field();
    let n = c.dim();
    let unit = c.source().unit();
    let mut blocks = Vec::with_capacity(2 * n);
    for i in 0..n {
        let w = c.basis(i);
        let shift = Matrix::identity(f, n).scale(&unit[i]);
        blocks.push(c.left_mult_matrix(&w).expect("basis").sub(&shift).expect("square"));
        blocks.push(c.right_mult_matrix(&w).expect("basis").sub(&shift).expect("square"));
    }
    Matrix::vstack(f, &blocks).expect("equal widths").nullspace()
}

/// Finds the integral space and normalizes it when possible.
pub fn invariant_integral(a: &FiniteHopfAlgebra) -> Result<IntegralResult> {
    let space = integral_space(a);
    if space.len() != 1 {
        return Err(Error::IntegralSpace(space.len()));
    }
    let lambda = &space[0];
    let at_one = dot(lambda, a.unit());
    let normalized = at_one.inv().map(|s| scale_vector(&s, lambda));
    Ok(IntegralResult { integral_space_dim: 1, normalized })
}

fn require_integral(a: &FiniteHopfAlgebra) -> Result<Vector> {
    invariant_integral(a)?.normalized.ok_or(Error::NoInvariantIntegral)
}

/// `a* = S(a)`.
pub fn star_map(a: &FiniteHopfAlgebra, x: &[Scalar]) -> Result<Vector> {
    a.check_element(x)?;
    Ok(a.apply_antipode(x))
}

/// The Fourier transform of a linearly reductive group, `a -> w_G(a* . -)`.
#[derive(Debug, Clone)]
pub struct FourierTransform<'a> {
    algebra: &'a FiniteHopfAlgebra,
    integral: Vector,
}

impl<'a> FourierTransform<'a> {
    pub fn new(algebra: &'a FiniteHopfAlgebra) -> Result<FourierTransform<'a>> {
        let integral = require_integral(algebra)?;
        Ok(FourierTransform { algebra, integral })
    }

    pub fn integral(&self) -> &[Scalar] {
        &self.integral
    }

    /// Coordinates on the dual basis: `F(x)_j = w_G(x* e_j)`.
    pub fn apply(&self, x: &[Scalar]) -> Result<Vector> {
        let star = star_map(self.algebra, x)?;
        Ok((0..self.algebra.dim())
            .map(|j| dot(&self.integral, &self.algebra.multiply(&star, &self.algebra.basis(j))))
            .collect())
    }

    /// Columns are the transforms of the basis of `A`.
    pub fn matrix(&self) -> Matrix {
        let n = self.algebra.dim();
        let cols: Vec<Vector> =
            (0..n).map(|i| self.apply(&self.algebra.basis(i)).expect("basis")).collect();
        Matrix::from_columns(self.algebra.field(), n, &cols)
    }
}

pub fn fourier(a: &FiniteHopfAlgebra, x: &[Scalar]) -> Result<Vector> {
    FourierTransform::new(a)?.apply(x)
}

pub fn fourier_matrix(a: &FiniteHopfAlgebra) -> Result<Matrix> {
    Ok(FourierTransform::new(a)?.matrix())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParsevalReport {
    pub f_after_phi_is_identity: bool,
    pub phi_after_f_is_identity: bool,
}

impl ParsevalReport {
    pub fn holds(&self) -> bool {
        self.f_after_phi_is_identity && self.phi_after_f_is_identity
    }
}

/// Compares the Fourier matrix with the inverse of the polarity `Ã -> A`.
pub fn verify_parseval(a: &FiniteHopfAlgebra) -> Result<ParsevalReport> {
    let fm = fourier_matrix(a)?;
    let c = convolution_algebra(a);
    let phi = c.phi_matrix(&c.trace_form_gram());
    Ok(ParsevalReport {
        f_after_phi_is_identity: fm.mul(&phi)?.is_identity(),
        phi_after_f_is_identity: phi.mul(&fm)?.is_identity(),
    })
}

/// `w_G . v`, the projection onto the invariants of `V`.
pub fn reynolds(a: &FiniteHopfAlgebra, v: &Comodule, x: &[Scalar]) -> Result<Vector> {
    if v.algebra().as_ref() != a {
        return Err(Error::AlgebraMismatch);
    }
    let w_g = require_integral(a)?;
    v.astar_action(&w_g, x)
}

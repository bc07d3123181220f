//! Block decomposition of `A*` over prime fields through central idempotents.
//!
//! The center of a semisimple `A*` over `F_p` is a product of finite fields. Its
//! Berlekamp subalgebra `{x : x^p = x}` has one dimension per factor, and any of
//! its elements outside `F_p . 1` separates factors by its eigenvalues.

use serde::{Deserialize, Serialize};

use crate::dual_trace::{convolution_algebra, separability_oracle, ConvolutionAlgebra, GramMatrix};
use crate::error::{Error, Result};
use crate::hopf::FiniteHopfAlgebra;
use crate::linalg::{dot, scale_vector, sub_vectors, Field, Matrix, Scalar, Vector};

/// Largest characteristic for which the eigenvalue scan is attempted.
pub const MAX_SPLIT_PRIME: u64 = 10_000;

/// Basis of `Z(A*)`: the common kernel of `x -> w_j x - x w_j`.
pub fn center(c: &ConvolutionAlgebra) -> Vec<Vector> {
    let n = c.dim();
    let blocks: Vec<Matrix> = (0..n)
        .map(|j| {
            let w = c.basis(j);
            let l = c.left_mult_matrix(&w).expect("basis");
            l.sub(&c.right_mult_matrix(&w).expect("basis")).expect("square")
        })
        .collect();
    Matrix::vstack(c.field(), &blocks).expect("equal widths").nullspace()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockDecomposition {
    pub field: Field,
    /// Primitive central idempotents `1_i`.
    pub idempotents: Vec<Vector>,
    /// `dim 1_i A*`.
    pub block_dims: Vec<usize>,
}

fn require_splittable_field(f: Field) -> Result<u64> {
    match f {
        Field::Rationals => Err(Error::Unsupported(
            "block decomposition over Q needs polynomial factorization over Q".into(),
        )),
        Field::Prime(p) if p > MAX_SPLIT_PRIME => Err(Error::Unsupported(format!(
            "block splitting scans F_p and is limited to p <= {MAX_SPLIT_PRIME}, got {p}"
        ))),
        Field::Prime(p) => Ok(p),
    }
}

/// `x^k` in `A*` for `k >= 1`.
fn power(c: &ConvolutionAlgebra, x: &[Scalar], mut k: u64) -> Vector {
    debug_assert!(k >= 1);
    let mut base = x.to_vec();
    let mut acc: Option<Vector> = None;
    loop {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => c.multiply(&a, &base),
            });
        }
        k >>= 1;
        if k == 0 {
            return acc.expect("k >= 1");
        }
        base = c.multiply(&base, &base);
    }
}

/// Basis of the column span, taken from the nonzero rows of the row-reduced transpose.
fn span_basis(f: Field, n: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_columns(f, n, vectors).transpose();
    let rref = m.rref();
    rref.rows.into_iter().take(rref.pivots.len()).collect()
}

/// Basis of `{x in e Z : x^p = x}` for a central idempotent `e`.
fn berlekamp_basis(c: &ConvolutionAlgebra, zbasis: &[Vector], e: &[Scalar], p: u64) -> Vec<Vector> {
    let (f, n) = (c.field(), c.dim());
    let products: Vec<Vector> = zbasis.iter().map(|z| c.multiply(e, z)).collect();
    let local = span_basis(f, n, &products);
    // Frobenius is additive on a commutative algebra of characteristic p.
    let defects: Vec<Vector> = local.iter().map(|b| sub_vectors(&power(c, b, p), b)).collect();
    Matrix::from_columns(f, n, &defects)
        .nullspace()
        .into_iter()
        .map(|coeffs| {
            let mut x = vec![f.zero(); n];
            for (a, b) in coeffs.iter().zip(&local) {
                if !a.is_zero() {
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi += &(a * bi);
                    }
                }
            }
            x
        })
        .collect()
}

fn proportional(u: &[Scalar], v: &[Scalar]) -> bool {
    Matrix::from_columns(u[0].field(), u.len(), &[u.to_vec(), v.to_vec()]).rank() <= 1
}

/// Roots in `F_p` of the minimal polynomial of `y` inside the block with unit `e`.
fn eigenvalues(c: &ConvolutionAlgebra, e: &[Scalar], y: &[Scalar], p: u64) -> Vec<Scalar> {
    let (f, n) = (c.field(), c.dim());
    let mut powers = vec![e.to_vec()];
    let coeffs = loop {
        let next = c.multiply(powers.last().expect("nonempty"), y);
        let m = Matrix::from_columns(f, n, &powers);
        if let Some(sol) = m.solve(&next).expect("dimension") {
            break sol;
        }
        powers.push(next);
    };
    // t^k - sum_i coeffs[i] t^i
    (0..p)
        .map(|v| f.from_u64(v))
        .filter(|t| {
            let mut value = t.pow(coeffs.len() as u64);
            for (i, a) in coeffs.iter().enumerate() {
                value -= &(a * &t.pow(i as u64));
            }
            value.is_zero()
        })
        .collect()
}

fn split_recursive(
    c: &ConvolutionAlgebra,
    zbasis: &[Vector],
    e: Vector,
    p: u64,
    out: &mut Vec<Vector>,
) {
    let berlekamp = berlekamp_basis(c, zbasis, &e, p);
    if berlekamp.len() <= 1 {
        out.push(e);
        return;
    }
    let y = berlekamp
        .into_iter()
        .find(|b| !proportional(b, &e))
        .expect("dimension > 1 leaves a non-scalar element");
    for value in eigenvalues(c, &e, &y, p) {
        let shifted = sub_vectors(&y, &scale_vector(&value, &e));
        let part = sub_vectors(&e, &power(c, &shifted, p - 1));
        split_recursive(c, zbasis, part, p, out);
    }
}

/// `dim x A*`.
fn ideal_dim(c: &ConvolutionAlgebra, x: &[Scalar]) -> usize {
    c.left_mult_matrix(x).expect("dimension").rank()
}

/// Primitive central idempotents of a semisimple `A*` over `F_p`.
pub fn split_center(c: &ConvolutionAlgebra) -> Result<BlockDecomposition> {
    let p = require_splittable_field(c.field())?;
    if !separability_oracle(c) {
        return Err(Error::NotSemisimple);
    }
    let zbasis = center(c);
    let mut idempotents = Vec::new();
    split_recursive(c, &zbasis, c.unit(), p, &mut idempotents);
    let block_dims = idempotents.iter().map(|e| ideal_dim(c, e)).collect();
    Ok(BlockDecomposition { field: c.field(), idempotents, block_dims })
}

/// Splits one central idempotent further. A primitive one comes back unchanged.
pub fn split_block(c: &ConvolutionAlgebra, e: &[Scalar]) -> Result<Vec<Vector>> {
    let p = require_splittable_field(c.field())?;
    c.source().check_element(e)?;
    let mut out = Vec::new();
    split_recursive(c, &center(c), e.to_vec(), p, &mut out);
    Ok(out)
}

/// `<1_i, 1_j>` under the trace form.
pub fn pairing_of_idempotents(b: &BlockDecomposition, gram: &GramMatrix) -> Result<Matrix> {
    let k = b.idempotents.len();
    if let Some(e) = b.idempotents.first() {
        if e.len() != gram.dim() {
            return Err(Error::DimensionMismatch { expected: gram.dim(), found: e.len() });
        }
    }
    if gram.entries().field() != b.field {
        return Err(Error::FieldMismatch(b.field, gram.entries().field()));
    }
    let rows = (0..k)
        .map(|i| {
            let gi = gram.entries().transpose().mul_vec(&b.idempotents[i])?;
            Ok((0..k).map(|j| dot(&gi, &b.idempotents[j])).collect())
        })
        .collect::<Result<Vec<Vector>>>()?;
    if k == 0 {
        return Ok(Matrix::zeros(b.field, 0, 0));
    }
    Matrix::from_rows(b.field, rows)
}

/// Whether the pairing is `diag(block_dims mod p)`.
pub fn pairing_matches_block_dims(b: &BlockDecomposition, pairing: &Matrix) -> bool {
    let k = b.idempotents.len();
    pairing.rows() == k
        && (0..k).all(|i| {
            (0..k).all(|j| {
                let expected =
                    if i == j { b.field.from_u64(b.block_dims[i] as u64) } else { b.field.zero() };
                pairing.get(i, j) == &expected
            })
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGroupSummary {
    pub discrete: bool,
    /// Present when the dual group is discrete.
    pub num_blocks: Option<usize>,
    pub block_dims: Option<Vec<usize>>,
}

/// Points of the dual group as blocks of `A*`, when it is discrete.
pub fn dual_group(a: &FiniteHopfAlgebra) -> Result<DualGroupSummary> {
    require_splittable_field(a.field())?;
    let c = convolution_algebra(a);
    match split_center(&c) {
        Ok(b) => Ok(DualGroupSummary {
            discrete: true,
            num_blocks: Some(b.idempotents.len()),
            block_dims: Some(b.block_dims),
        }),
        Err(Error::NotSemisimple) => {
            Ok(DualGroupSummary { discrete: false, num_blocks: None, block_dims: None })
        }
        Err(e) => Err(e),
    }
}

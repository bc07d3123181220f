use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};

/// Dense three-index array of structure constants, `t[i][j][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, a: usize, b: usize, c: usize) -> Tensor3 {
        Tensor3 { field, dims: [a, b, c], data: vec![field.zero(); a * b * c] }
    }

    pub(crate) fn from_fn(
        field: Field,
        [a, b, c]: [usize; 3],
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Tensor3 {
        let mut data = Vec::with_capacity(a * b * c);
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { field, dims: [a, b, c], data }
    }

    /// Builds from nested vectors `t[i][j][k]`, checking the shape is `dims`.
    pub fn from_nested(field: Field, dims: [usize; 3], nested: Vec<Vec<Vec<Scalar>>>) -> Result<Tensor3> {
        let shape_err = |expected, found| Error::DimensionMismatch { expected, found };
        if nested.len() != dims[0] {
            return Err(shape_err(dims[0], nested.len()));
        }
        let mut data = Vec::with_capacity(dims.iter().product());
        for plane in nested {
            if plane.len() != dims[1] {
                return Err(shape_err(dims[1], plane.len()));
            }
            for row in plane {
                if row.len() != dims[2] {
                    return Err(shape_err(dims[2], row.len()));
                }
                for x in row {
                    if x.field() != field {
                        return Err(Error::FieldMismatch(field, x.field()));
                    }
                    data.push(x);
                }
            }
        }
        Ok(Tensor3 { field, dims, data })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        let [a, b, _] = self.dims;
        (0..a).map(|i| (0..b).map(|j| self.fiber(i, j).to_vec()).collect()).collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = value;
    }

    pub(crate) fn add_to(&mut self, i: usize, j: usize, k: usize, value: &Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] += value;
    }

    /// The vector `t[i][j][..]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j, 0);
        &self.data[o..o + self.dims[2]]
    }

    /// The `dims[1] x dims[2]` slab `t[i][..][..]`, row-major.
    pub fn slab(&self, i: usize) -> &[Scalar] {
        let len = self.dims[1] * self.dims[2];
        &self.data[i * len..(i + 1) * len]
    }

    /// Nonzero entries of slab `i` as `(j, k, value)`.
    pub fn nonzeros(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let c = self.dims[2];
        self.slab(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| (o / c, o % c, v))
    }
}

//! Diagonalizable groups `Spec K[M]` for a finitely generated abelian group `M`.
//!
//! `A = K[M]` has the monomials `x^m` as grouplike basis, so `A* = prod_M K` with
//! the componentwise product. Only two kinds of functionals are representable:
//! finite support, and constant outside a finite set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};

/// An element of `Z^r x Z/d_1 x ... x Z/d_t`, torsion coordinates reduced.
pub type GroupElement = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinGenAbelianGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

fn prime_power_parts(mut n: u64) -> Vec<(u64, u32)> {
    let mut parts = Vec::new();
    let mut q = 2;
    while q * q <= n {
        let mut e = 0;
        while n % q == 0 {
            n /= q;
            e += 1;
        }
        if e > 0 {
            parts.push((q, e));
        }
        q += 1;
    }
    if n > 1 {
        parts.push((n, 1));
    }
    parts
}

/// Invariant factors `d_1 | d_2 | ...` of `prod Z/n_i`, all at least 2.
pub fn invariant_factors(orders: &[u64]) -> Result<Vec<u64>> {
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &n in orders {
        if n == 0 {
            return Err(Error::Descriptor("torsion orders must be positive".into()));
        }
        for (q, e) in prime_power_parts(n) {
            exponents.entry(q).or_default().push(e);
        }
    }
    let count = exponents.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; count];
    for (q, mut es) in exponents {
        es.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, e) in es.into_iter().enumerate() {
            // largest exponents go to the last factor
            let idx = count - 1 - slot;
            factors[idx] = factors[idx]
                .checked_mul(q.pow(e))
                .ok_or_else(|| Error::Descriptor("torsion order overflows".into()))?;
        }
    }
    Ok(factors)
}

impl FinGenAbelianGroup {
    /// `Z^free_rank x prod Z/n_i`, normalized to invariant factors.
    pub fn new(free_rank: usize, torsion_orders: &[u64]) -> Result<FinGenAbelianGroup> {
        Ok(FinGenAbelianGroup { free_rank, torsion: invariant_factors(torsion_orders)? })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// `None` when the group is infinite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn identity(&self) -> GroupElement {
        vec![0; self.rank()]
    }

    /// Reduces torsion coordinates into `0..d_i`.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: coords.len() });
        }
        Ok(self.reduce(coords.to_vec()))
    }

    fn reduce(&self, mut m: GroupElement) -> GroupElement {
        for (x, &d) in m[self.free_rank..].iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(d as i64);
        }
        m
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> GroupElement {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &[i64]) -> GroupElement {
        self.reduce(a.iter().map(|x| -x).collect())
    }

    /// All elements in lexicographic order, for finite groups.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        self.order()?;
        let mut out = vec![Vec::new()];
        for &d in &self.torsion {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d as i64).map(move |x| {
                        let mut m = prefix.clone();
                        m.push(x);
                        m
                    })
                })
                .collect();
        }
        Some(out)
    }
}

fn require_same(g: &FinGenAbelianGroup, h: &FinGenAbelianGroup, f: Field, k: Field) -> Result<()> {
    if g != h {
        return Err(Error::AlgebraMismatch);
    }
    if f != k {
        return Err(Error::FieldMismatch(f, k));
    }
    Ok(())
}

fn insert_nonzero(map: &mut BTreeMap<GroupElement, Scalar>, m: GroupElement, value: Scalar) {
    if value.is_zero() {
        map.remove(&m);
    } else {
        map.insert(m, value);
    }
}

/// A functional on `K[M]` with finite support, an element of `Ã = (+)_M K`.
#[derive(Debug, Clone, PartialEq)]
pub struct FinSupportFunctional {
    group: FinGenAbelianGroup,
    field: Field,
    support: BTreeMap<GroupElement, Scalar>,
}

impl FinSupportFunctional {
    pub fn zero(group: &FinGenAbelianGroup, field: Field) -> FinSupportFunctional {
        FinSupportFunctional { group: group.clone(), field, support: BTreeMap::new() }
    }

    /// Value `value` at `m`, zero elsewhere.
    pub fn indicator(group: &FinGenAbelianGroup, m: &[i64], value: Scalar) -> Result<FinSupportFunctional> {
        let field = value.field();
        FinSupportFunctional::from_entries(group, field, [(m.to_vec(), value)])
    }

    /// Entries at the same element are added; zeros are dropped.
    pub fn from_entries(
        group: &FinGenAbelianGroup,
        field: Field,
        entries: impl IntoIterator<Item = (GroupElement, Scalar)>,
    ) -> Result<FinSupportFunctional> {
        let mut out = FinSupportFunctional::zero(group, field);
        for (m, value) in entries {
            if value.field() != field {
                return Err(Error::FieldMismatch(field, value.field()));
            }
            let m = group.element(&m)?;
            let total = match out.support.get(&m) {
                Some(old) => old + &value,
                None => value,
            };
            insert_nonzero(&mut out.support, m, total);
        }
        Ok(out)
    }

    pub fn group(&self) -> &FinGenAbelianGroup {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn support(&self) -> &BTreeMap<GroupElement, Scalar> {
        &self.support
    }

    pub fn value(&self, m: &[i64]) -> Scalar {
        self.support.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add(&self, other: &FinSupportFunctional) -> Result<FinSupportFunctional> {
        require_same(&self.group, &other.group, self.field, other.field)?;
        let mut out = self.clone();
        for (m, v) in &other.support {
            let total = &out.value(m) + v;
            insert_nonzero(&mut out.support, m.clone(), total);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> FinSupportFunctional {
        let mut out = FinSupportFunctional::zero(&self.group, self.field);
        for (m, v) in &self.support {
            insert_nonzero(&mut out.support, m.clone(), v * s);
        }
        out
    }

    /// `w(a) = sum_m w(m) a_m`.
    pub fn evaluate(&self, a: &LaurentElement) -> Result<Scalar> {
        DiagFunctional::Finite(self.clone()).evaluate(a)
    }
}

/// The representable elements of `A* = prod_M K`.
#[derive(Debug, Clone, PartialEq)]
pub enum DiagFunctional {
    Finite(FinSupportFunctional),
    /// `default` everywhere except at the listed elements.
    ConstantOutside {
        group: FinGenAbelianGroup,
        default: Scalar,
        exceptions: BTreeMap<GroupElement, Scalar>,
    },
}

impl DiagFunctional {
    /// The unit of `A*`, which is the counit `x^m -> 1`.
    pub fn unit(group: &FinGenAbelianGroup, field: Field) -> DiagFunctional {
        DiagFunctional::ConstantOutside {
            group: group.clone(),
            default: field.one(),
            exceptions: BTreeMap::new(),
        }
    }

    pub fn group(&self) -> &FinGenAbelianGroup {
        match self {
            DiagFunctional::Finite(f) => &f.group,
            DiagFunctional::ConstantOutside { group, .. } => group,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            DiagFunctional::Finite(f) => f.field,
            DiagFunctional::ConstantOutside { default, .. } => default.field(),
        }
    }

    pub fn value(&self, m: &[i64]) -> Scalar {
        match self {
            DiagFunctional::Finite(f) => f.value(m),
            DiagFunctional::ConstantOutside { default, exceptions, .. } => {
                exceptions.get(m).unwrap_or(default).clone()
            }
        }
    }

    pub fn evaluate(&self, a: &LaurentElement) -> Result<Scalar> {
        require_same(self.group(), &a.group, self.field(), a.field)?;
        let mut acc = self.field().zero();
        for (m, c) in &a.coeffs {
            acc += &(&self.value(m) * c);
        }
        Ok(acc)
    }

    /// Values on a finite list of coordinates, the projection `prod_M K -> K^S`.
    pub fn project(&self, coords: &[GroupElement]) -> Vec<Scalar> {
        coords.iter().map(|m| self.value(m)).collect()
    }
}

/// `sum_m a_m x^m` in `K[M]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentElement {
    group: FinGenAbelianGroup,
    field: Field,
    coeffs: BTreeMap<GroupElement, Scalar>,
}

impl LaurentElement {
    pub fn zero(group: &FinGenAbelianGroup, field: Field) -> LaurentElement {
        LaurentElement { group: group.clone(), field, coeffs: BTreeMap::new() }
    }

    pub fn one(group: &FinGenAbelianGroup, field: Field) -> LaurentElement {
        LaurentElement::monomial(group, &group.identity(), field.one()).expect("identity")
    }

    pub fn monomial(group: &FinGenAbelianGroup, m: &[i64], c: Scalar) -> Result<LaurentElement> {
        let field = c.field();
        LaurentElement::from_terms(group, field, [(m.to_vec(), c)])
    }

    pub fn from_terms(
        group: &FinGenAbelianGroup,
        field: Field,
        terms: impl IntoIterator<Item = (GroupElement, Scalar)>,
    ) -> Result<LaurentElement> {
        let f = FinSupportFunctional::from_entries(group, field, terms)?;
        Ok(LaurentElement { group: f.group, field, coeffs: f.support })
    }

    pub fn group(&self) -> &FinGenAbelianGroup {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &BTreeMap<GroupElement, Scalar> {
        &self.coeffs
    }

    pub fn coefficient(&self, m: &[i64]) -> Scalar {
        self.coeffs.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn multiply(&self, other: &LaurentElement) -> Result<LaurentElement> {
        require_same(&self.group, &other.group, self.field, other.field)?;
        let mut out = LaurentElement::zero(&self.group, self.field);
        for (m, a) in &self.coeffs {
            for (n, b) in &other.coeffs {
                let k = self.group.add(m, n);
                let total = &out.coefficient(&k) + &(a * b);
                insert_nonzero(&mut out.coeffs, k, total);
            }
        }
        Ok(out)
    }

    /// `a* = sum_m a_m x^{-m}`, the antipode.
    pub fn star(&self) -> LaurentElement {
        let mut out = LaurentElement::zero(&self.group, self.field);
        for (m, a) in &self.coeffs {
            out.coeffs.insert(self.group.neg(m), a.clone());
        }
        out
    }
}

/// Componentwise product in `prod_M K`.
pub fn diag_convolve(u: &FinSupportFunctional, v: &FinSupportFunctional) -> Result<FinSupportFunctional> {
    require_same(&u.group, &v.group, u.field, v.field)?;
    let mut out = FinSupportFunctional::zero(&u.group, u.field);
    for (m, a) in &u.support {
        if let Some(b) = v.support.get(m) {
            insert_nonzero(&mut out.support, m.clone(), a * b);
        }
    }
    Ok(out)
}

/// `<w, w~> = sum_m w(m) w~(m)`: every block of `prod_M K` is one-dimensional.
pub fn diag_trace_pair(w: &DiagFunctional, w_tilde: &FinSupportFunctional) -> Result<Scalar> {
    require_same(w.group(), &w_tilde.group, w.field(), w_tilde.field)?;
    let mut acc = w_tilde.field.zero();
    for (m, b) in &w_tilde.support {
        acc += &(&w.value(m) * b);
    }
    Ok(acc)
}

/// `(a_m) -> sum_m a_m x^m`.
pub fn diag_phi(w_tilde: &FinSupportFunctional) -> LaurentElement {
    LaurentElement {
        group: w_tilde.group.clone(),
        field: w_tilde.field,
        coeffs: w_tilde.support.clone(),
    }
}

/// Projection onto the trivial character: `x^m -> delta_{m,0}`.
pub fn diag_integral(group: &FinGenAbelianGroup, field: Field) -> FinSupportFunctional {
    FinSupportFunctional::indicator(group, &group.identity(), field.one()).expect("identity")
}

/// `F(a) = w_G(a* . -)`, evaluated at every `x^n` where it can be nonzero.
pub fn diag_fourier(a: &LaurentElement) -> FinSupportFunctional {
    let w_g = diag_integral(&a.group, a.field);
    let star = a.star();
    let entries = a.coeffs.keys().map(|n| {
        let probe = LaurentElement::monomial(&a.group, n, a.field.one()).expect("element of the group");
        let product = star.multiply(&probe).expect("same group");
        (n.clone(), w_g.evaluate(&product).expect("same group"))
    });
    FinSupportFunctional::from_entries(&a.group, a.field, entries.collect::<Vec<_>>())
        .expect("elements of the group")
}

/// A finite-support functional whose projection onto `coords` equals `target`,
/// witnessing that `Ã` is dense in `A*` for the product topology.
pub fn density_witness(
    group: &FinGenAbelianGroup,
    field: Field,
    coords: &[GroupElement],
    target: &[Scalar],
) -> Result<FinSupportFunctional> {
    if coords.len() != target.len() {
        return Err(Error::DimensionMismatch { expected: coords.len(), found: target.len() });
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut entries = Vec::new();
    for (m, t) in coords.iter().zip(target) {
        let m = group.element(m)?;
        if !seen.insert(m.clone()) {
            return Err(Error::Descriptor(format!("coordinate {m:?} listed twice")));
        }
        entries.push((m, t.clone()));
    }
    FinSupportFunctional::from_entries(group, field, entries)
}

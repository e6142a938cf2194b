//! Sparse multivariate polynomials with Clifford-algebra coefficients, the
//! differential-operator suite acting on them, and the Fischer inner product.
//!
//! All differential operators multiply Clifford generators from the LEFT;
//! coefficients sit to the right of the variables and are treated as
//! constants by the derivatives.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::clifford::{check_dim, Blade, Involution, Multivector};
use crate::error::{Error, Result};
use crate::jacobi::pochhammer;
use crate::scalar::{factorial_rat, GaussianRational, Rat};

/// Exponent vector of a monomial; length equals the ambient dimension.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn zero(m: usize) -> Self {
        MultiIndex(vec![0; m])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    /// Unit exponent in coordinate `i` (1-based).
    pub fn unit(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i - 1] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree_on(&self, range: IndexRange) -> u32 {
        range.indices().map(|i| self.0[i - 1]).sum()
    }

    pub fn bumped(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e[i - 1] += 1;
        MultiIndex(e)
    }

    pub fn lowered(&self, i: usize) -> Option<Self> {
        if self.0[i - 1] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i - 1] -= 1;
        Some(MultiIndex(e))
    }

    /// alpha! = product of the factorials of the entries.
    pub fn factorial(&self) -> Rat {
        let mut acc = Rat::one();
        for &a in &self.0 {
            acc *= factorial_rat(a);
        }
        acc
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

/// Contiguous block of coordinates/generators, 1-based and inclusive. The
/// split `R^m = R^p (+) R^q` is `head(p)` against `tail(p, m)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IndexRange {
    start: usize,
    end: usize,
}

impl IndexRange {
    pub fn new(start: usize, end: usize) -> Result<Self> {
        if start == 0 || start > end {
            return Err(Error::InvalidRange { start, end, dim: 0 });
        }
        Ok(IndexRange { start, end })
    }

    pub fn full(m: usize) -> Self {
        debug_assert!(m >= 1);
        IndexRange { start: 1, end: m }
    }

    pub fn head(p: usize) -> Self {
        debug_assert!(p >= 1);
        IndexRange { start: 1, end: p }
    }

    pub fn tail(p: usize, m: usize) -> Self {
        debug_assert!(p < m);
        IndexRange {
            start: p + 1,
            end: m,
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn within(&self, m: usize) -> bool {
        self.end <= m
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= self.start && i <= self.end
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }

    /// Ordered pairs i < j inside the range.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.indices()
            .flat_map(move |i| ((i + 1)..=self.end).map(move |j| (i, j)))
    }
}

fn assert_range(range: IndexRange, m: usize) {
    assert!(
        range.within(m),
        "index range {}..={} exceeds ambient dimension {}",
        range.start(),
        range.end(),
        m
    );
}

/// Sparse polynomial in `x_1 .. x_m` with [`Multivector`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordPolynomial {
    dim: usize,
    terms: BTreeMap<MultiIndex, Multivector>,
}

impl CliffordPolynomial {
    pub fn zero(m: usize) -> Self {
        CliffordPolynomial {
            dim: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::from_mv(Multivector::one(m))
    }

    /// Degree-zero polynomial with the given constant coefficient.
    pub fn from_mv(mv: Multivector) -> Self {
        let mut p = Self::zero(mv.dim());
        p.add_term(MultiIndex::zero(mv.dim()), mv);
        p
    }

    pub fn monomial(exps: MultiIndex, coeff: Multivector) -> Self {
        debug_assert_eq!(exps.len(), coeff.dim());
        let mut p = Self::zero(coeff.dim());
        p.add_term(exps, coeff);
        p
    }

    /// The scalar coordinate polynomial `x_i`.
    pub fn coordinate(m: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(m, i), Multivector::one(m))
    }

    /// `sum_{j in range} x_j^2`, a scalar polynomial.
    pub fn rsq(m: usize, range: IndexRange) -> Self {
        assert_range(range, m);
        let mut p = Self::zero(m);
        for j in range.indices() {
            let mut e = MultiIndex::zero(m);
            e.0[j - 1] = 2;
            p.add_term(e, Multivector::one(m));
        }
        p
    }

    /// The vector variable `sum_{j in range} x_j e_j`.
    pub fn vector(m: usize, range: IndexRange) -> Self {
        assert_range(range, m);
        let mut p = Self::zero(m);
        for j in range.indices() {
            p.add_term(
                MultiIndex::unit(m, j),
                Multivector::generator(m, j).expect("in range"),
            );
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Multivector)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &MultiIndex) -> Multivector {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.dim))
    }

    pub(crate) fn add_term(&mut self, exps: MultiIndex, coeff: Multivector) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let merged = e.get().add(&coeff).expect("same dim");
                if merged.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = merged;
                }
            }
        }
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, f: &GaussianRational) -> Self {
        let mut out = Self::zero(self.dim);
        if f.is_zero() {
            return out;
        }
        for (e, c) in self.terms() {
            let scaled = c.scale(f);
            if !scaled.is_zero() {
                out.terms.insert(e.clone(), scaled);
            }
        }
        out
    }

    pub fn scale_rat(&self, f: &Rat) -> Self {
        self.scale(&GaussianRational::from_rat(f.clone()))
    }

    /// Noncommutative product: Clifford multiplication of coefficients and
    /// addition of exponents.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let mut e = ea.0.clone();
                for (x, y) in e.iter_mut().zip(eb.0.iter()) {
                    *x += *y;
                }
                out.add_term(MultiIndex(e), ca.mul(cb)?);
            }
        }
        Ok(out)
    }

    /// Left multiplication by a constant multivector.
    pub fn left_mul_mv(&self, mv: &Multivector) -> Result<Self> {
        if mv.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: mv.dim(),
                right: self.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), mv.mul(c)?);
        }
        Ok(out)
    }

    /// Right multiplication by a constant multivector.
    pub fn right_mul_mv(&self, mv: &Multivector) -> Result<Self> {
        if mv.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: mv.dim(),
                right: self.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c.mul(mv)?);
        }
        Ok(out)
    }

    /// Apply an involution to every coefficient (variables untouched).
    pub fn map_coeff_involution(&self, kind: Involution) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), c.involution(kind));
        }
        out
    }

    /// Formal derivative in `x_i`; coefficients are constants.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(
            i >= 1 && i <= self.dim,
            "coordinate {i} out of range for dim {}",
            self.dim
        );
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            if let Some(lowered) = e.lowered(i) {
                let factor = GaussianRational::from_rat(Rat::from_integer(e.exponent(i).into()));
                out.add_term(lowered, c.scale(&factor));
            }
        }
        out
    }

    /// Multiplication by the scalar coordinate `x_i`.
    pub fn coordinate_mul(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.dim);
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.terms.insert(e.bumped(i), c.clone());
        }
        out
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Total degree when homogeneous.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut degrees = self.terms.keys().map(|e| e.degree());
        let Some(first) = degrees.next() else {
            return Err(Error::NotHomogeneous);
        };
        if degrees.all(|d| d == first) {
            Ok(first)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            if e.degree() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut map: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, c) in self.terms() {
            map.entry(e.degree())
                .or_insert_with(|| Self::zero(self.dim))
                .terms
                .insert(e.clone(), c.clone());
        }
        map
    }

    /// Group terms by their degree in the variables of `range`.
    pub fn components_by_range_degree(&self, range: IndexRange) -> BTreeMap<u32, Self> {
        assert_range(range, self.dim);
        let mut map: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, c) in self.terms() {
            map.entry(e.degree_on(range))
                .or_insert_with(|| Self::zero(self.dim))
                .terms
                .insert(e.clone(), c.clone());
        }
        map
    }

    /// True when every variable and every coefficient generator lies in
    /// `range`.
    pub fn supported_on(&self, range: IndexRange) -> bool {
        for (e, c) in self.terms() {
            for (i, &a) in e.exponents().iter().enumerate() {
                if a > 0 && !range.contains(i + 1) {
                    return false;
                }
            }
            for (b, _) in c.terms() {
                if b.indices().iter().any(|&i| !range.contains(i)) {
                    return false;
                }
            }
        }
        true
    }

    /// Shift variables and generators by `offset` into dimension `m_target`.
    pub fn embed(&self, offset: usize, m_target: usize) -> Result<Self> {
        check_dim(m_target)?;
        if self.dim + offset > m_target {
            return Err(Error::EmbedOverflow { target: m_target });
        }
        let mut out = Self::zero(m_target);
        for (e, c) in self.terms() {
            let mut exps = vec![0u32; m_target];
            exps[offset..offset + self.dim].copy_from_slice(e.exponents());
            out.terms
                .insert(MultiIndex(exps), c.embed(offset, m_target)?);
        }
        Ok(out)
    }

    /// Exact division by `sum_{j in range} x_j^2`, if possible.
    pub fn div_rsq(&self, range: IndexRange) -> Option<Self> {
        assert_range(range, self.dim);
        let lead_var = range.start();
        let mut rem = self.clone();
        let mut quo = Self::zero(self.dim);
        let rsq = Self::rsq(self.dim, range);
        while !rem.is_zero() {
            let (e, c) = rem
                .terms
                .iter()
                .next_back()
                .map(|(e, c)| (e.clone(), c.clone()))?;
            if e.exponent(lead_var) < 2 {
                return None;
            }
            let mut q_exps = e.0.clone();
            q_exps[lead_var - 1] -= 2;
            let q_term = Self::monomial(MultiIndex(q_exps), c);
            rem = rem.sub(&rsq.mul(&q_term).ok()?).ok()?;
            quo = quo.add(&q_term).ok()?;
        }
        Some(quo)
    }
}

impl fmt::Debug for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c:?}]{e:?}")?;
        }
        Ok(())
    }
}

/// Dirac operator over a range: `sum_{j in range} e_j (d/dx_j)`, generators
/// multiplying from the left.
pub fn dirac(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    assert_range(range, p.dim());
    let mut out = CliffordPolynomial::zero(p.dim());
    for j in range.indices() {
        let ej = Multivector::generator(p.dim(), j).expect("in range");
        for (e, c) in p.partial_derivative(j).terms() {
            out.add_term(e.clone(), ej.mul(c).expect("same dim"));
        }
    }
    out
}

/// `sum_{j in range} (d/dx_j)^2`.
pub fn laplace(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    assert_range(range, p.dim());
    let mut out = CliffordPolynomial::zero(p.dim());
    for j in range.indices() {
        let dd = p.partial_derivative(j).partial_derivative(j);
        for (e, c) in dd.terms() {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// Euler operator `sum_{j in range} x_j (d/dx_j)`; scales each term by its
/// range-degree.
pub fn euler(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    assert_range(range, p.dim());
    let mut out = CliffordPolynomial::zero(p.dim());
    for (e, c) in p.terms() {
        let d = e.degree_on(range);
        if d > 0 {
            out.terms
                .insert(e.clone(), c.scale_rat(&Rat::from_integer(d.into())));
        }
    }
    out
}

/// Multiplication by `|x|^2` restricted to a range.
pub fn rsq_mul(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    CliffordPolynomial::rsq(p.dim(), range)
        .mul(p)
        .expect("same dim")
}

/// Left multiplication by the vector variable of the range.
pub fn vector_mul(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    CliffordPolynomial::vector(p.dim(), range)
        .mul(p)
        .expect("same dim")
}

/// Angular momentum operator `L_ij = x_i d_j - x_j d_i`.
pub fn angular_l(p: &CliffordPolynomial, i: usize, j: usize) -> Result<CliffordPolynomial> {
    if i == 0 || i >= j || j > p.dim() {
        return Err(Error::InvalidIndexPair { i, j });
    }
    p.partial_derivative(j)
        .coordinate_mul(i)
        .sub(&p.partial_derivative(i).coordinate_mul(j))
}

/// Spin momentum operator `M_ij = L_ij - e_ij / 2` (left multiplication).
pub fn moment_m(p: &CliffordPolynomial, i: usize, j: usize) -> Result<CliffordPolynomial> {
    let l = angular_l(p, i, j)?;
    let eij = Multivector::from_blade(
        p.dim(),
        Blade::from_indices(&[i, j])?,
        GaussianRational::from_rat(Rat::new(1.into(), 2.into())),
    )?;
    l.sub(&p.left_mul_mv(&eij)?)
}

/// Gamma operator `-sum_{i<j in range} e_ij L_ij` (left multiplication).
pub fn gamma(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    assert_range(range, p.dim());
    let mut out = CliffordPolynomial::zero(p.dim());
    for (i, j) in range.pairs() {
        let eij = Multivector::from_blade(
            p.dim(),
            Blade::from_indices(&[i, j]).expect("valid pair"),
            GaussianRational::one(),
        )
        .expect("in range");
        let term = angular_l(p, i, j)
            .expect("valid pair")
            .left_mul_mv(&eij)
            .expect("same dim");
        for (e, c) in term.terms() {
            out.add_term(e.clone(), c.neg());
        }
    }
    out
}

/// Casimir of the scalar action: `sum_{i<j in range} L_ij^2`.
pub fn casimir_h(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    assert_range(range, p.dim());
    let mut out = CliffordPolynomial::zero(p.dim());
    for (i, j) in range.pairs() {
        let ll = angular_l(&angular_l(p, i, j).expect("pair"), i, j).expect("pair");
        for (e, c) in ll.terms() {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// Casimir of the spinor action: `sum_{i<j in range} M_ij^2`.
pub fn casimir_l(p: &CliffordPolynomial, range: IndexRange) -> CliffordPolynomial {
    assert_range(range, p.dim());
    let mut out = CliffordPolynomial::zero(p.dim());
    for (i, j) in range.pairs() {
        let mm = moment_m(&moment_m(p, i, j).expect("pair"), i, j).expect("pair");
        for (e, c) in mm.terms() {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// Scalar pairing `[conj(a) b]_0`; conjugation is the Clifford anti-involution
/// combined with complex conjugation of the coefficients, which reduces the
/// pairing to `sum_A conj(a_A) b_A`.
fn coefficient_pairing(a: &Multivector, b: &Multivector) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (blade, ca) in a.terms() {
        let cb = b.coeff(*blade);
        if !cb.is_zero() {
            acc += &(&ca.conj() * &cb);
        }
    }
    acc
}

/// Fischer inner product `<P, Q> = [conj(P)(d) Q]_0 |_{x=0}`, sesquilinear in
/// the first argument. On monomials it reduces to
/// `<x^a A, x^b B> = delta_{ab} a! [conj(A) B]_0`.
pub fn fischer_inner(p: &CliffordPolynomial, q: &CliffordPolynomial) -> Result<GaussianRational> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    let mut acc = GaussianRational::zero();
    for (e, ca) in p.terms() {
        if let Some(cb) = q.terms.get(e) {
            let pairing = coefficient_pairing(ca, cb);
            if !pairing.is_zero() {
                acc += &pairing.scale(&e.factorial());
            }
        }
    }
    Ok(acc)
}

/// Fischer norm squared.
pub fn fischer_norm_sq(p: &CliffordPolynomial) -> Rat {
    let g = fischer_inner(p, p).expect("same polynomial");
    debug_assert!(g.is_real());
    g.re
}

/// Inner product on the sphere for spherical monogenics of equal degree,
/// recovered exactly from the Fischer inner product through the constant
/// `2^n (m/2)_n`.
pub fn sphere_inner_monogenic(
    p: &CliffordPolynomial,
    q: &CliffordPolynomial,
) -> Result<GaussianRational> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    let m = p.dim();
    let full = IndexRange::full(m);
    let n = p.homogeneous_degree()?;
    if q.homogeneous_degree()? != n {
        return Err(Error::NotHomogeneous);
    }
    if !dirac(p, full).is_zero() || !dirac(q, full).is_zero() {
        return Err(Error::NotMonogenic);
    }
    let factor = sphere_norm_factor(n, m);
    let fischer = fischer_inner(p, q)?;
    Ok(GaussianRational::new(
        fischer.re / &factor,
        fischer.im / &factor,
    ))
}

/// `2^n (m/2)_n`, the exact ratio between the Fischer and sphere inner
/// products on degree-n monogenics.
pub fn sphere_norm_factor(n: u32, m: usize) -> Rat {
    let half_m = Rat::new((m as i64).into(), 2.into());
    Rat::from_integer(num_bigint::BigInt::from(1u32) << n) * pochhammer(&half_m, n)
}

fn gram_row(basis: &[CliffordPolynomial], i: usize) -> Result<Vec<GaussianRational>> {
    let mut row = Vec::with_capacity(basis.len() - i);
    for j in i..basis.len() {
        row.push(fischer_inner(&basis[i], &basis[j])?);
    }
    Ok(row)
}

fn gram_from_upper(n: usize, upper: Vec<Vec<GaussianRational>>) -> Vec<Vec<GaussianRational>> {
    let mut gram = vec![vec![GaussianRational::zero(); n]; n];
    for (i, row) in upper.into_iter().enumerate() {
        for (off, v) in row.into_iter().enumerate() {
            let j = i + off;
            if i != j {
                gram[j][i] = v.conj();
            }
            gram[i][j] = v;
        }
    }
    gram
}

/// Gram matrix of the Fischer inner product, sequential implementation.
pub fn fischer_gram_seq(basis: &[CliffordPolynomial]) -> Result<Vec<Vec<GaussianRational>>> {
    let upper: Result<Vec<_>> = (0..basis.len()).map(|i| gram_row(basis, i)).collect();
    Ok(gram_from_upper(basis.len(), upper?))
}

/// Gram matrix of the Fischer inner product; rows are assembled in parallel
/// when the `parallel` feature is enabled.
pub fn fischer_gram(basis: &[CliffordPolynomial]) -> Result<Vec<Vec<GaussianRational>>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let upper: Result<Vec<_>> = (0..basis.len())
            .into_par_iter()
            .map(|i| gram_row(basis, i))
            .collect();
        Ok(gram_from_upper(basis.len(), upper?))
    }
    #[cfg(not(feature = "parallel"))]
    {
        fischer_gram_seq(basis)
    }
}

//! Exact arithmetic in the complex Clifford algebra `C_m` over the Gaussian
//! rationals. Generators satisfy `e_i e_j + e_j e_i = -2 delta_ij`, so every
//! generator squares to -1. Blades are encoded as bitmasks over the
//! generators, which keeps products down to popcounts and a symmetric
//! difference.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rat};

/// Largest supported number of generators: blade masks are 16-bit.
pub const MAX_DIM: usize = 16;

pub fn check_dim(m: usize) -> Result<()> {
    if m > MAX_DIM {
        return Err(Error::UnsupportedDimension {
            dim: m,
            max: MAX_DIM,
        });
    }
    Ok(())
}

/// Basis blade `e_A` for an index set `A` of generators, stored as a bitmask
/// with bit `i-1` for generator `e_i`. The empty set is the scalar blade.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u16) -> Self {
        Blade(mask)
    }

    /// Build from strictly increasing 1-based generator indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u16;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i <= prev {
                return Err(Error::Parse(format!(
                    "blade indices must be strictly increasing and positive, got {indices:?}"
                )));
            }
            if i > MAX_DIM {
                return Err(Error::InvalidBlade {
                    index: i,
                    dim: MAX_DIM,
                });
            }
            mask |= 1 << (i - 1);
            prev = i;
        }
        Ok(Blade(mask))
    }

    pub fn generator(i: usize) -> Result<Self> {
        Self::from_indices(&[i])
    }

    pub fn mask(&self) -> u16 {
        self.0
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..MAX_DIM)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= MAX_DIM && self.0 & (1 << (i - 1)) != 0
    }

    pub fn fits(&self, m: usize) -> bool {
        m >= MAX_DIM || self.0 >> m == 0
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            write!(f, "1")
        } else {
            write!(f, "e")?;
            for i in self.indices() {
                write!(f, "{i}")?;
            }
            Ok(())
        }
    }
}

/// Product of basis blades: the sign counts the transpositions needed to
/// interleave the two sorted index lists plus one factor -1 per contracted
/// generator; the result mask is the symmetric difference.
pub fn blade_product(a: Blade, b: Blade, m: usize) -> Result<(i32, Blade)> {
    check_dim(m)?;
    for (blade, name) in [(a, "left"), (b, "right")] {
        if !blade.fits(m) {
            let index = blade.indices().into_iter().max().unwrap_or(0);
            let _ = name;
            return Err(Error::InvalidBlade { index, dim: m });
        }
    }
    let mut swaps = 0u32;
    let mut rest = a.mask() >> 1;
    while rest != 0 {
        swaps += (rest & b.mask()).count_ones();
        rest >>= 1;
    }
    let contractions = (a.mask() & b.mask()).count_ones();
    let sign = if (swaps + contractions) % 2 == 0 {
        1
    } else {
        -1
    };
    Ok((sign, Blade::from_mask(a.mask() ^ b.mask())))
}

/// The three standard (anti-)involutions of the Clifford algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Involution {
    /// `e_i -> -e_i`, algebra homomorphism; sign `(-1)^k` on grade k.
    Main,
    /// Reverses products; sign `(-1)^{k(k-1)/2}` on grade k.
    Reversion,
    /// Reversion composed with the main involution, and complex conjugation
    /// of the scalar coefficients; sign `(-1)^{k(k+1)/2}` on grade k.
    Conjugation,
}

/// Element of `C_m` with Gaussian-rational coefficients. Zero coefficients
/// are never stored, so structural equality is canonical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, GaussianRational>,
}

impl Multivector {
    pub fn zero(m: usize) -> Self {
        Multivector {
            dim: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(m: usize, c: GaussianRational) -> Self {
        let mut mv = Self::zero(m);
        mv.add_term(Blade::SCALAR, c);
        mv
    }

    pub fn one(m: usize) -> Self {
        Self::scalar(m, GaussianRational::one())
    }

    pub fn from_blade(m: usize, blade: Blade, c: GaussianRational) -> Result<Self> {
        check_dim(m)?;
        if !blade.fits(m) {
            let index = blade.indices().into_iter().max().unwrap_or(0);
            return Err(Error::InvalidBlade { index, dim: m });
        }
        let mut mv = Self::zero(m);
        mv.add_term(blade, c);
        Ok(mv)
    }

    /// The generator `e_i` (1-based).
    pub fn generator(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i > m {
            return Err(Error::InvalidBlade { index: i, dim: m });
        }
        Self::from_blade(m, Blade::generator(i)?, GaussianRational::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, blade: Blade) -> GaussianRational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// The scalar part `[a]_0`.
    pub fn scalar_part(&self) -> GaussianRational {
        self.coeff(Blade::SCALAR)
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
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
        for (b, c) in other.terms() {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(*b, -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in self.terms() {
            out.terms.insert(*b, -c);
        }
        out
    }

    pub fn scale(&self, f: &GaussianRational) -> Self {
        let mut out = Self::zero(self.dim);
        if f.is_zero() {
            return out;
        }
        for (b, c) in self.terms() {
            out.add_term(*b, c * f);
        }
        out
    }

    pub fn scale_rat(&self, f: &Rat) -> Self {
        if f.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = Self::zero(self.dim);
        for (b, c) in self.terms() {
            out.terms.insert(*b, c.scale(f));
        }
        out
    }

    /// Clifford product, the bilinear extension of [`blade_product`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (ba, ca) in self.terms() {
            for (bb, cb) in other.terms() {
                let (sign, blade) = blade_product(*ba, *bb, self.dim)?;
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                out.add_term(blade, c);
            }
        }
        Ok(out)
    }

    /// The k-vector part `[a]_k`; out-of-range grades give zero.
    pub fn grade_part(&self, k: u32) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in self.terms() {
            if b.grade() == k {
                out.terms.insert(*b, c.clone());
            }
        }
        out
    }

    pub fn involution(&self, kind: Involution) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in self.terms() {
            let k = b.grade();
            let flips = match kind {
                Involution::Main => k,
                Involution::Reversion => k * (k.saturating_sub(1)) / 2,
                Involution::Conjugation => k * (k + 1) / 2,
            };
            let mut c = if kind == Involution::Conjugation {
                c.conj()
            } else {
                c.clone()
            };
            if flips % 2 == 1 {
                c = -c;
            }
            out.terms.insert(*b, c);
        }
        out
    }

    /// Relabel generators `e_i -> e_{i+offset}` into `C_{m_target}`.
    pub fn embed(&self, offset: usize, m_target: usize) -> Result<Self> {
        check_dim(m_target)?;
        let mut out = Self::zero(m_target);
        for (b, c) in self.terms() {
            let shifted = (b.mask() as u32) << offset;
            if shifted >> m_target != 0 || shifted > u16::MAX as u32 {
                return Err(Error::EmbedOverflow { target: m_target });
            }
            out.terms
                .insert(Blade::from_mask(shifted as u16), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?}){b:?}")?;
        }
        Ok(())
    }
}

/// The Witt-basis fixtures on the `e_1 e_2` plane.
#[derive(Clone, Debug)]
pub struct WittFixtures {
    pub t_plus: Multivector,
    pub t_minus: Multivector,
    pub i_plus: Multivector,
    pub i_minus: Multivector,
}

/// `T_± = (e_1 ± i e_2)/2` and the idempotents `I_± = -T_± T_∓`.
pub fn witt_fixtures(m: usize) -> Result<WittFixtures> {
    check_dim(m)?;
    if m < 2 {
        return Err(Error::WittDimension { dim: m });
    }
    let half = GaussianRational::new(Rat::new(1.into(), 2.into()), Rat::zero());
    let half_i = GaussianRational::new(Rat::zero(), Rat::new(1.into(), 2.into()));
    let e1 = Multivector::generator(m, 1)?;
    let e2 = Multivector::generator(m, 2)?;
    let t_plus = e1.scale(&half).add(&e2.scale(&half_i))?;
    let t_minus = e1.scale(&half).sub(&e2.scale(&half_i))?;
    let i_plus = t_plus.mul(&t_minus)?.neg();
    let i_minus = t_minus.mul(&t_plus)?.neg();
    Ok(WittFixtures {
        t_plus,
        t_minus,
        i_plus,
        i_minus,
    })
}

/// Fischer-self-adjoint unit `c e_P` with `c = (-i)^{p(p+1)/2}` and
/// `e_P = e_1 ... e_p`, together with the projectors `(1 ± c e_P)/2`.
pub fn pseudoscalar_projectors(
    p: usize,
    m: usize,
) -> Result<(GaussianRational, Multivector, Multivector)> {
    let unit = signed_pseudoscalar(p, m)?;
    let c = GaussianRational::neg_i_pow((p as u64) * (p as u64 + 1) / 2);
    let half = GaussianRational::new(Rat::new(1.into(), 2.into()), Rat::zero());
    let one = Multivector::one(m);
    let plus = one.add(&unit)?.scale(&half);
    let minus = one.sub(&unit)?.scale(&half);
    Ok((c, plus, minus))
}

/// `c e_P` alone; squares to one and generates the `±` eigenspace split.
pub fn signed_pseudoscalar(p: usize, m: usize) -> Result<Multivector> {
    check_dim(m)?;
    if p == 0 || p > m {
        return Err(Error::InvalidRange {
            start: 1,
            end: p,
            dim: m,
        });
    }
    let indices: Vec<usize> = (1..=p).collect();
    let blade = Blade::from_indices(&indices)?;
    let c = GaussianRational::neg_i_pow((p as u64) * (p as u64 + 1) / 2);
    Multivector::from_blade(m, blade, c)
}

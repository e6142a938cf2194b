//! Exact Jacobi polynomials with rational parameters, plus the Pochhammer and
//! generalized-binomial helpers shared by the projection closed forms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{factorial_rat, Rat};

/// Univariate polynomial with exact rational coefficients, keyed by power.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalUniPoly {
    coeffs: BTreeMap<u32, Rat>,
}

impl RationalUniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(0, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn monomial(power: u32, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(power, c);
        p
    }

    /// The variable itself.
    pub fn t() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn add_term(&mut self, power: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(power).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&power);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, power: u32) -> Rat {
        self.coeffs.get(&power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Rat)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(*p, -c.clone());
        }
        out
    }

    pub fn scale(&self, f: &Rat) -> Self {
        let mut out = Self::zero();
        if f.is_zero() {
            return out;
        }
        for (p, c) in self.terms() {
            out.coeffs.insert(*p, c * f);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (pa, ca) in self.terms() {
            for (pb, cb) in other.terms() {
                out.add_term(pa + pb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (p, c) in self.terms() {
            let mut tp = Rat::one();
            for _ in 0..*p {
                tp *= t;
            }
            acc += c * tp;
        }
        acc
    }

    /// `p(-t)`.
    pub fn substitute_neg(&self) -> Self {
        let mut out = Self::zero();
        for (p, c) in self.terms() {
            let c = if p % 2 == 1 { -c.clone() } else { c.clone() };
            out.coeffs.insert(*p, c);
        }
        out
    }
}

impl fmt::Debug for RationalUniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})t^{p}")?;
        }
        Ok(())
    }
}

/// Rising factorial `(z)_n = z (z+1) ... (z+n-1)`, with `(z)_0 = 1`.
pub fn pochhammer(z: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    let mut factor = z.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += Rat::one();
    }
    acc
}

/// Generalized binomial `C(a, j) = a (a-1) ... (a-j+1) / j!`.
pub fn gen_binomial(a: &Rat, j: u32) -> Rat {
    let mut num = Rat::one();
    let mut factor = a.clone();
    for _ in 0..j {
        num *= &factor;
        factor -= Rat::one();
    }
    num / factorial_rat(j)
}

/// Jacobi polynomial `P_n^{a,b}(t)` through the finite double-binomial sum
/// `2^{-n} sum_j C(a+n, j) C(b+n, n-j) (t+1)^j (t-1)^{n-j}`.
pub fn jacobi_poly(n: u32, alpha: &Rat, beta: &Rat) -> RationalUniPoly {
    let t_plus = RationalUniPoly::t().add(&RationalUniPoly::one());
    let t_minus = RationalUniPoly::t().sub(&RationalUniPoly::one());
    let an = alpha + Rat::from_integer(n.into());
    let bn = beta + Rat::from_integer(n.into());
    let mut acc = RationalUniPoly::zero();
    for j in 0..=n {
        let coeff = gen_binomial(&an, j) * gen_binomial(&bn, n - j);
        if coeff.is_zero() {
            continue;
        }
        let term = t_plus.pow(j).mul(&t_minus.pow(n - j)).scale(&coeff);
        acc = acc.add(&term);
    }
    let two_pow = Rat::from_integer(num_bigint::BigInt::from(1u32) << n);
    acc.scale(&(Rat::one() / two_pow))
}

/// The same polynomial through the terminating hypergeometric series
/// `C(2n+a+b, n) ((t-1)/2)^n F(-n, -n-a; -2n-a-b; 2/(1-t))`, used as the
/// independent cross-check of [`jacobi_poly`]. Fails if a series denominator
/// vanishes for the given parameters.
pub fn jacobi_poly_hypergeometric(n: u32, alpha: &Rat, beta: &Rat) -> Result<RationalUniPoly> {
    let n_rat = Rat::from_integer(n.into());
    let front = gen_binomial(&(Rat::from_integer(2.into()) * &n_rat + alpha + beta), n);
    let half_t_minus = RationalUniPoly::t()
        .sub(&RationalUniPoly::one())
        .scale(&Rat::new(1.into(), 2.into()));
    let a1 = -n_rat.clone();
    let a2 = -&n_rat - alpha;
    let c = -Rat::from_integer(2.into()) * &n_rat - alpha - beta;
    let mut acc = RationalUniPoly::zero();
    for j in 0..=n {
        let den = pochhammer(&c, j) * factorial_rat(j);
        if den.is_zero() {
            return Err(Error::DegenerateDenominator { degree: j });
        }
        let mut coeff = pochhammer(&a1, j) * pochhammer(&a2, j) / den;
        if j % 2 == 1 {
            coeff = -coeff;
        }
        if coeff.is_zero() {
            continue;
        }
        acc = acc.add(&half_t_minus.pow(n - j).scale(&coeff));
    }
    Ok(acc.scale(&front))
}

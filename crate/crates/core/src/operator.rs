//! Composable operator values over polynomial space. The projector formulas
//! are rational expressions in the Euler operator composed with the
//! differential and multiplication primitives, and the identity suites need
//! to manipulate whole operators, not just apply them.

use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::jacobi::RationalUniPoly;
use crate::poly::{
    angular_l, casimir_h, casimir_l, dirac, euler, gamma, laplace, moment_m, rsq_mul, vector_mul,
    CliffordPolynomial, IndexRange,
};
use crate::projections::{
    harmonic_component, harmonic_part, monogenic_component, monogenic_part, Parity,
};
use crate::scalar::{GaussianRational, Rat};

/// A composable endomorphism of polynomial space.
#[derive(Clone, Debug)]
pub enum PolyOperator {
    Identity,
    /// `d/dx_i`
    Partial(usize),
    Dirac(IndexRange),
    Laplace(IndexRange),
    Euler(IndexRange),
    /// Multiplication by `|x|^2` of the range.
    RsqMul(IndexRange),
    /// Left multiplication by the vector variable of the range.
    VectorMul(IndexRange),
    Gamma(IndexRange),
    AngularL(usize, usize),
    MomentM(usize, usize),
    CasimirH(IndexRange),
    CasimirL(IndexRange),
    /// Left multiplication by a constant.
    ConstMul(Multivector),
    HarmonicPart,
    HarmonicComponent(u32),
    MonogenicPart,
    MonogenicComponent(u32, Parity),
    Scale(GaussianRational, Box<PolyOperator>),
    Sum(Vec<PolyOperator>),
    /// Composition, applied right to left: `Compose([A, B]) = A o B`.
    Compose(Vec<PolyOperator>),
    Pow(Box<PolyOperator>, u32),
    /// `num(E)/den(E)` on the Euler operator of the range, evaluated per
    /// homogeneous component by substituting the component's range-degree.
    EulerRational {
        num: RationalUniPoly,
        den: RationalUniPoly,
        range: IndexRange,
    },
}

impl PolyOperator {
    pub fn scale(self, f: GaussianRational) -> Self {
        PolyOperator::Scale(f, Box::new(self))
    }

    pub fn scale_rat(self, f: Rat) -> Self {
        self.scale(GaussianRational::from_rat(f))
    }

    /// `self o rhs` (apply `rhs` first).
    pub fn compose(self, rhs: Self) -> Self {
        PolyOperator::Compose(vec![self, rhs])
    }

    pub fn add(self, rhs: Self) -> Self {
        PolyOperator::Sum(vec![self, rhs])
    }

    pub fn sub(self, rhs: Self) -> Self {
        PolyOperator::Sum(vec![self, rhs.scale(GaussianRational::from_int(-1))])
    }

    pub fn pow(self, n: u32) -> Self {
        PolyOperator::Pow(Box::new(self), n)
    }

    /// Commutator `[self, rhs]`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        let ab = self.clone().compose(rhs.clone());
        let ba = rhs.clone().compose(self.clone());
        ab.sub(ba)
    }

    /// Anticommutator `{self, rhs}`.
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        let ab = self.clone().compose(rhs.clone());
        let ba = rhs.clone().compose(self.clone());
        ab.add(ba)
    }

    pub fn apply(&self, p: &CliffordPolynomial) -> Result<CliffordPolynomial> {
        match self {
            PolyOperator::Identity => Ok(p.clone()),
            PolyOperator::Partial(i) => Ok(p.partial_derivative(*i)),
            PolyOperator::Dirac(r) => Ok(dirac(p, *r)),
            PolyOperator::Laplace(r) => Ok(laplace(p, *r)),
            PolyOperator::Euler(r) => Ok(euler(p, *r)),
            PolyOperator::RsqMul(r) => Ok(rsq_mul(p, *r)),
            PolyOperator::VectorMul(r) => Ok(vector_mul(p, *r)),
            PolyOperator::Gamma(r) => Ok(gamma(p, *r)),
            PolyOperator::AngularL(i, j) => angular_l(p, *i, *j),
            PolyOperator::MomentM(i, j) => moment_m(p, *i, *j),
            PolyOperator::CasimirH(r) => Ok(casimir_h(p, *r)),
            PolyOperator::CasimirL(r) => Ok(casimir_l(p, *r)),
            PolyOperator::ConstMul(mv) => p.left_mul_mv(mv),
            PolyOperator::HarmonicPart => Ok(harmonic_part(p)),
            PolyOperator::HarmonicComponent(s) => Ok(harmonic_component(p, *s)),
            PolyOperator::MonogenicPart => Ok(monogenic_part(p)),
            PolyOperator::MonogenicComponent(s, parity) => Ok(monogenic_component(p, *s, *parity)),
            PolyOperator::Scale(f, op) => Ok(op.apply(p)?.scale(f)),
            PolyOperator::Sum(ops) => {
                let mut acc = CliffordPolynomial::zero(p.dim());
                for op in ops {
                    acc = acc.add(&op.apply(p)?)?;
                }
                Ok(acc)
            }
            PolyOperator::Compose(ops) => {
                let mut cur = p.clone();
                for op in ops.iter().rev() {
                    cur = op.apply(&cur)?;
                }
                Ok(cur)
            }
            PolyOperator::Pow(op, n) => {
                let mut cur = p.clone();
                for _ in 0..*n {
                    cur = op.apply(&cur)?;
                }
                Ok(cur)
            }
            PolyOperator::EulerRational { num, den, range } => {
                let mut acc = CliffordPolynomial::zero(p.dim());
                for (d, comp) in p.components_by_range_degree(*range) {
                    let at = Rat::from_integer(d.into());
                    let den_val = den.eval(&at);
                    if num_traits::Zero::is_zero(&den_val) {
                        return Err(Error::DegenerateDenominator { degree: d });
                    }
                    let factor = num.eval(&at) / den_val;
                    acc = acc.add(&comp.scale_rat(&factor))?;
                }
                Ok(acc)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn monomials_up_to(m: usize, max_deg: u32) -> Vec<CliffordPolynomial> {
        let mut exps = vec![vec![]];
        for _ in 0..m {
            let mut next = vec![];
            for e in &exps {
                let used: u32 = e.iter().sum();
                for a in 0..=(max_deg - used) {
                    let mut e2: Vec<u32> = e.clone();
                    e2.push(a);
                    next.push(e2);
                }
            }
            exps = next;
        }
        exps.into_iter()
            .map(|e| {
                CliffordPolynomial::monomial(
                    crate::poly::MultiIndex::from_exponents(e),
                    Multivector::one(m),
                )
            })
            .collect()
    }

    fn ops_agree(a: &PolyOperator, b: &PolyOperator, inputs: &[CliffordPolynomial]) -> bool {
        inputs
            .iter()
            .all(|p| a.apply(p).unwrap() == b.apply(p).unwrap())
    }

    #[test]
    fn composition_order_is_right_to_left() {
        // Compose([x-mult, dirac]) applied to x1 gives x * e1
        let m = 2;
        let full = IndexRange::full(m);
        let op = PolyOperator::VectorMul(full).compose(PolyOperator::Dirac(full));
        let x1 = CliffordPolynomial::coordinate(m, 1);
        let expected = CliffordPolynomial::vector(m, full)
            .mul(&CliffordPolynomial::from_mv(
                Multivector::generator(m, 1).unwrap(),
            ))
            .unwrap();
        assert_eq!(op.apply(&x1).unwrap(), expected);
    }

    #[test]
    fn euler_rational_evaluates_per_degree() {
        // E/(E+1) on x1^2 scales by 2/3, on constants by 0
        let m = 2;
        let full = IndexRange::full(m);
        let op = PolyOperator::EulerRational {
            num: RationalUniPoly::t(),
            den: RationalUniPoly::t().add(&RationalUniPoly::one()),
            range: full,
        };
        let x1sq = CliffordPolynomial::coordinate(m, 1)
            .mul(&CliffordPolynomial::coordinate(m, 1))
            .unwrap();
        assert_eq!(op.apply(&x1sq).unwrap(), x1sq.scale_rat(&rat(2, 3)));
        assert!(op.apply(&CliffordPolynomial::one(m)).unwrap().is_zero());

        // 1/E on constants is degenerate
        let bad = PolyOperator::EulerRational {
            num: RationalUniPoly::one(),
            den: RationalUniPoly::t(),
            range: full,
        };
        assert!(matches!(
            bad.apply(&CliffordPolynomial::one(m)),
            Err(Error::DegenerateDenominator { degree: 0 })
        ));
    }

    #[test]
    fn commutator_of_laplace_and_rsq() {
        // [Laplace, |x|^2] = 4(E + m/2) as operators
        for m in 2..=3usize {
            let full = IndexRange::full(m);
            let lhs = PolyOperator::Laplace(full).commutator(&PolyOperator::RsqMul(full));
            let rhs = PolyOperator::Euler(full)
                .add(PolyOperator::Identity.scale_rat(rat(m as i64, 2)))
                .scale_rat(rat_int(4));
            assert!(ops_agree(&lhs, &rhs, &monomials_up_to(m, 4)));
        }
    }

    #[test]
    fn casimir_operators_match_direct_sums() {
        let m = 3;
        let full = IndexRange::full(m);
        let op = PolyOperator::CasimirH(full);
        let p = CliffordPolynomial::coordinate(m, 1)
            .mul(&CliffordPolynomial::coordinate(m, 2))
            .unwrap();
        assert_eq!(op.apply(&p).unwrap(), casimir_h(&p, full));
        let op = PolyOperator::CasimirL(full);
        assert_eq!(op.apply(&p).unwrap(), casimir_l(&p, full));
    }
}

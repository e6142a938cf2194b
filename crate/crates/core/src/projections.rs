//! Harmonic and monogenic extremal projectors, their shifted components, and
//! the Jacobi-expansion fast paths for products split across `R^p (+) R^q`.
//!
//! Rational functions of the Euler operator are applied leftmost and
//! evaluated at the degree of the expression to their right, after all
//! degree-shifting factors. The series for the harmonic projector truncates
//! at `j = floor(d/2)` on a degree-d component since higher Laplacian powers
//! vanish; no retained coefficient is singular for m >= 1, which is asserted
//! at runtime.

use num_traits::{One, Zero};

use crate::branching::SpaceSplit;
use crate::error::{Error, Result};
use crate::jacobi::{gen_binomial, pochhammer};
use crate::poly::{dirac, laplace, vector_mul, CliffordPolynomial, IndexRange};
use crate::scalar::{factorial_rat, Rat};

/// Which of the two monogenic component families is requested.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    /// Component in `|x|^{2s} Mon`.
    Even,
    /// Component in `|x|^{2s} x Mon`.
    Odd,
}

fn half_of(n: i64) -> Rat {
    Rat::new(n.into(), 2.into())
}

fn four_pow(j: u32) -> Rat {
    Rat::from_integer(num_bigint::BigInt::from(4u32).pow(j))
}

/// `A_s` evaluated at degree `y`: `1 / (2^{2s} s! (y + m/2)_s)`.
fn a_s_at(s: u32, y: u32, m: usize) -> Rat {
    let base = Rat::from_integer(y.into()) + half_of(m as i64);
    let poch = pochhammer(&base, s);
    assert!(
        !poch.is_zero(),
        "A_s denominator vanished at degree {y}, s={s}, m={m}"
    );
    Rat::one() / (four_pow(s) * factorial_rat(s) * poch)
}

fn harmonic_part_homogeneous(comp: &CliffordPolynomial, d: u32) -> CliffordPolynomial {
    let m = comp.dim();
    let full = IndexRange::full(m);
    let rsq = CliffordPolynomial::rsq(m, full);
    let mut acc = comp.clone();
    let mut lap = comp.clone();
    let mut rsq_pow = CliffordPolynomial::one(m);
    for j in 1..=(d / 2) {
        lap = laplace(&lap, full);
        if lap.is_zero() {
            break;
        }
        rsq_pow = rsq_pow.mul(&rsq).expect("same dim");
        // kappa_j(-E - m/2) at E = d: 1 / ((-d - m/2 + 2)_j)
        let z = -Rat::from_integer(d.into()) - half_of(m as i64) + Rat::from_integer(2.into());
        let poch = pochhammer(&z, j);
        assert!(
            !poch.is_zero(),
            "harmonic projector coefficient singular at d={d}, j={j}, m={m}"
        );
        let coeff = Rat::one() / (four_pow(j) * factorial_rat(j) * poch);
        let term = rsq_pow.mul(&lap).expect("same dim").scale_rat(&coeff);
        acc = acc.add(&term).expect("same dim");
    }
    acc
}

/// Harmonic projection `P_H`: the component of `P` in `Har(R^m)` along the
/// Fischer decomposition, computed per homogeneous component by the
/// truncated extremal-projector series.
pub fn harmonic_part(p: &CliffordPolynomial) -> CliffordPolynomial {
    let mut out = CliffordPolynomial::zero(p.dim());
    for (d, comp) in p.homogeneous_components() {
        out = out
            .add(&harmonic_part_homogeneous(&comp, d))
            .expect("same dim");
    }
    out
}

/// Projection onto `|x|^{2s} Har(R^m)`: `A_s(E - 2s) |x|^{2s} P_H Lap^s`.
pub fn harmonic_component(p: &CliffordPolynomial, s: u32) -> CliffordPolynomial {
    let m = p.dim();
    let full = IndexRange::full(m);
    let mut out = CliffordPolynomial::zero(m);
    for (d, comp) in p.homogeneous_components() {
        if d < 2 * s {
            continue;
        }
        let mut lap = comp;
        for _ in 0..s {
            lap = laplace(&lap, full);
        }
        if lap.is_zero() {
            continue;
        }
        let mut term = harmonic_part_homogeneous(&lap, d - 2 * s);
        for _ in 0..s {
            term = crate::poly::rsq_mul(&term, full);
        }
        out = out
            .add(&term.scale_rat(&a_s_at(s, d - 2 * s, m)))
            .expect("same dim");
    }
    out
}

fn monogenic_part_homogeneous(comp: &CliffordPolynomial, d: u32) -> CliffordPolynomial {
    let m = comp.dim();
    let full = IndexRange::full(m);
    let h = harmonic_part_homogeneous(comp, d);
    let denom = 2 * d as i64 + m as i64 - 2;
    if denom == 0 {
        // only m = 2, d = 0: constants are already monogenic
        return h;
    }
    let xdh = vector_mul(&dirac(&h, full), full);
    h.add(&xdh.scale_rat(&(Rat::one() / Rat::from_integer(denom.into()))))
        .expect("same dim")
}

/// Monogenic projection `P_M = (x d_x + 2E + m - 2)/(2E + m - 2) . P_H`.
pub fn monogenic_part(p: &CliffordPolynomial) -> CliffordPolynomial {
    let mut out = CliffordPolynomial::zero(p.dim());
    for (d, comp) in p.homogeneous_components() {
        out = out
            .add(&monogenic_part_homogeneous(&comp, d))
            .expect("same dim");
    }
    out
}

/// Projections onto `|x|^{2s} Mon` (even) and `|x|^{2s} x Mon` (odd).
pub fn monogenic_component(p: &CliffordPolynomial, s: u32, parity: Parity) -> CliffordPolynomial {
    let m = p.dim();
    let full = IndexRange::full(m);
    let mut out = CliffordPolynomial::zero(m);
    for (d, comp) in p.homogeneous_components() {
        match parity {
            Parity::Even => {
                if d < 2 * s {
                    continue;
                }
                let mut lap = comp;
                for _ in 0..s {
                    lap = laplace(&lap, full);
                }
                if lap.is_zero() {
                    continue;
                }
                let mut term = monogenic_part_homogeneous(&lap, d - 2 * s);
                for _ in 0..s {
                    term = crate::poly::rsq_mul(&term, full);
                }
                out = out
                    .add(&term.scale_rat(&a_s_at(s, d - 2 * s, m)))
                    .expect("same dim");
            }
            Parity::Odd => {
                if d < 2 * s + 1 {
                    continue;
                }
                let mut cur = dirac(&comp, full);
                for _ in 0..s {
                    cur = laplace(&cur, full);
                }
                if cur.is_zero() {
                    continue;
                }
                let mut term = vector_mul(&monogenic_part_homogeneous(&cur, d - 2 * s - 1), full);
                for _ in 0..s {
                    term = crate::poly::rsq_mul(&term, full);
                }
                let shift = Rat::from_integer(d.into()) + half_of(m as i64)
                    - Rat::from_integer((s as i64 + 1).into());
                assert!(
                    !shift.is_zero(),
                    "odd component denominator vanished at d={d}, s={s}"
                );
                let coeff = -a_s_at(s, d - 2 * s - 1, m) / (Rat::from_integer(2.into()) * shift);
                out = out.add(&term.scale_rat(&coeff)).expect("same dim");
            }
        }
    }
    out
}

/// The exact constants of the split-product closed forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectionConstants {
    /// `lambda(s,k,i) = (-1)^s s! / ((s+k+i+(m-2)/2)_s)`.
    pub lambda: Rat,
    /// `c(s,k,i,p,q) = 4^s s! (k+p/2)_s (i+q/2)_s / ((s+k+i+(m-2)/2)_s)`.
    pub c: Rat,
    /// `k + (p-2)/2`.
    pub k_p: Rat,
    /// `i + (q-2)/2`.
    pub i_q: Rat,
}

pub fn constants(s: u32, k: u32, i: u32, split: &SpaceSplit) -> ProjectionConstants {
    let p = split.p() as i64;
    let q = split.q() as i64;
    let m = split.m() as i64;
    let ski = Rat::from_integer((s as i64 + k as i64 + i as i64).into()) + half_of(m - 2);
    let poch = pochhammer(&ski, s);
    assert!(!poch.is_zero(), "projection constant denominator vanished");
    let mut lambda = factorial_rat(s) / &poch;
    if s % 2 == 1 {
        lambda = -lambda;
    }
    let kp2 = Rat::from_integer((k as i64).into()) + half_of(p);
    let iq2 = Rat::from_integer((i as i64).into()) + half_of(q);
    let c = four_pow(s) * factorial_rat(s) * pochhammer(&kp2, s) * pochhammer(&iq2, s) / poch;
    ProjectionConstants {
        lambda,
        c,
        k_p: Rat::from_integer((k as i64).into()) + half_of(p - 2),
        i_q: Rat::from_integer((i as i64).into()) + half_of(q - 2),
    }
}

/// `|u|^{2s} P_k(u) Q_i(v)` with the factors homogeneous and supported on the
/// two halves of the split; degrees `k` and `i` are read off the factors.
#[derive(Clone, Debug)]
pub struct SplitProductInput {
    s: u32,
    u_factor: CliffordPolynomial,
    v_factor: CliffordPolynomial,
    split: SpaceSplit,
    k: u32,
    i: u32,
}

impl SplitProductInput {
    pub fn new(
        s: u32,
        u_factor: CliffordPolynomial,
        v_factor: CliffordPolynomial,
        split: SpaceSplit,
    ) -> Result<Self> {
        let m = split.m();
        if u_factor.dim() != m {
            return Err(Error::DimensionMismatch {
                left: u_factor.dim(),
                right: m,
            });
        }
        if v_factor.dim() != m {
            return Err(Error::DimensionMismatch {
                left: v_factor.dim(),
                right: m,
            });
        }
        if !u_factor.supported_on(split.u_range()) || !v_factor.supported_on(split.v_range()) {
            return Err(Error::Construction(
                "split-product factors must live on their side of the split".into(),
            ));
        }
        let k = u_factor.homogeneous_degree()?;
        let i = v_factor.homogeneous_degree()?;
        Ok(SplitProductInput {
            s,
            u_factor,
            v_factor,
            split,
            k,
            i,
        })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn split(&self) -> &SpaceSplit {
        &self.split
    }

    pub fn u_factor(&self) -> &CliffordPolynomial {
        &self.u_factor
    }

    pub fn v_factor(&self) -> &CliffordPolynomial {
        &self.v_factor
    }

    /// The raw polynomial `|u|^{2s} P_k(u) Q_i(v)` (or with a leading vector
    /// factor `u` when requested), before any projection.
    pub fn raw_product(&self, with_u: bool) -> CliffordPolynomial {
        let m = self.split.m();
        let mut out = self.u_factor.mul(&self.v_factor).expect("same dim");
        for _ in 0..self.s {
            out = crate::poly::rsq_mul(&out, self.split.u_range());
        }
        if with_u {
            out = CliffordPolynomial::vector(m, self.split.u_range())
                .mul(&out)
                .expect("same dim");
        }
        out
    }
}

/// Closed form for `P_H(|u|^{2s} P_k(u) Q_i(v))` via the expanded Jacobi
/// polynomial: `lambda(s,k,i) sum_j C(k_p+s, j) C(i_q+s, s-j) (-1)^{s-j}
/// |v|^{2j} |u|^{2(s-j)} P_k Q_i`. Factors must be harmonic on their ranges;
/// Clifford values are allowed since the projector coefficients are scalar.
pub fn harmonic_product_fast(inp: &SplitProductInput) -> Result<CliffordPolynomial> {
    let split = &inp.split;
    let m = split.m();
    if !laplace(&inp.u_factor, split.u_range()).is_zero()
        || !laplace(&inp.v_factor, split.v_range()).is_zero()
    {
        return Err(Error::NotHarmonic);
    }
    let consts = constants(inp.s, inp.k, inp.i, split);
    let rsq_u = CliffordPolynomial::rsq(m, split.u_range());
    let rsq_v = CliffordPolynomial::rsq(m, split.v_range());
    let mut radial = CliffordPolynomial::zero(m);
    for j in 0..=inp.s {
        let mut coeff = gen_binomial(&(&consts.k_p + Rat::from_integer(inp.s.into())), j)
            * gen_binomial(&(&consts.i_q + Rat::from_integer(inp.s.into())), inp.s - j);
        if (inp.s - j) % 2 == 1 {
            coeff = -coeff;
        }
        if coeff.is_zero() {
            continue;
        }
        let mut term = CliffordPolynomial::one(m);
        for _ in 0..j {
            term = term.mul(&rsq_v).expect("same dim");
        }
        for _ in 0..(inp.s - j) {
            term = term.mul(&rsq_u).expect("same dim");
        }
        radial = radial.add(&term.scale_rat(&coeff)).expect("same dim");
    }
    let poly = radial
        .mul(&inp.u_factor)
        .expect("same dim")
        .mul(&inp.v_factor)
        .expect("same dim")
        .scale_rat(&consts.lambda);
    Ok(poly)
}

/// Monogenic projection of a split product, together with the exact factor
/// multiplying `||P_k||^2 ||Q_i||^2` in its squared Fischer norm.
///
/// `with_u = false` computes `P_M(|u|^{2s} P_k Q_i)`; `with_u = true`
/// computes `P_M(u |u|^{2s} P_k Q_i)`. Both reduce to harmonic fast paths on
/// composite factors: `u P_k'` and `v Q_i` are harmonic of degrees `k+1` and
/// `i+1`.
pub fn monogenic_product(
    inp: &SplitProductInput,
    with_u: bool,
) -> Result<(CliffordPolynomial, Rat)> {
    let split = inp.split.clone();
    let m = split.m();
    let (p, q) = (split.p() as i64, split.q() as i64);
    if !dirac(&inp.u_factor, split.u_range()).is_zero()
        || !dirac(&inp.v_factor, split.v_range()).is_zero()
    {
        return Err(Error::NotMonogenic);
    }
    let (s, k, i) = (inp.s, inp.k as i64, inp.i as i64);
    let consts = constants(inp.s, inp.k, inp.i, &split);
    let result = if !with_u {
        if s == 0 {
            let poly = inp.u_factor.mul(&inp.v_factor)?;
            (poly, Rat::one())
        } else {
            let denom = Rat::from_integer((2 * (2 * s as i64 + k + i) + m as i64 - 2).into());
            let c1 = Rat::from_integer((2 * (s as i64 + k + i) + m as i64 - 2).into());
            let t1 = harmonic_product_fast(inp)?;
            let u_prime = vector_mul(
                &inp.u_factor
                    .map_coeff_involution(crate::clifford::Involution::Main),
                split.u_range(),
            );
            let v_vec = vector_mul(&inp.v_factor, split.v_range());
            let t2 = harmonic_product_fast(&SplitProductInput::new(
                s - 1,
                u_prime,
                v_vec,
                split.clone(),
            )?)?;
            let c2 = Rat::from_integer((2 * s as i64).into());
            let poly = t1
                .scale_rat(&c1)
                .sub(&t2.scale_rat(&c2))?
                .scale_rat(&(Rat::one() / &denom));
            let factor = c1 / denom * &consts.c;
            (poly, factor)
        }
    } else {
        let denom = Rat::from_integer((2 * (2 * s as i64 + 1 + k + i) + m as i64 - 2).into());
        let c1 = Rat::from_integer((2 * s as i64 + m as i64 - p + 2 * i).into());
        let c2 = Rat::from_integer((p + 2 * s as i64 + 2 * k).into());
        let u_vec = vector_mul(&inp.u_factor, split.u_range());
        let t1 = harmonic_product_fast(&SplitProductInput::new(
            s,
            u_vec,
            inp.v_factor.clone(),
            split.clone(),
        )?)?;
        let u_prime = inp
            .u_factor
            .map_coeff_involution(crate::clifford::Involution::Main);
        let v_vec = vector_mul(&inp.v_factor, split.v_range());
        let t2 = harmonic_product_fast(&SplitProductInput::new(s, u_prime, v_vec, split.clone())?)?;
        let poly = t1
            .scale_rat(&c1)
            .sub(&t2.scale_rat(&c2))?
            .scale_rat(&(Rat::one() / &denom));
        let next = constants(s + 1, inp.k, inp.i, &split);
        let factor = next.c / Rat::from_integer((2 * (s as i64 + 1)).into());
        (poly, factor)
    };
    let _ = q;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::fischer_inner;
    use crate::scalar::{rat, rat_int, GaussianRational};

    fn x(m: usize, i: usize) -> CliffordPolynomial {
        CliffordPolynomial::coordinate(m, i)
    }

    #[test]
    fn harmonic_part_examples() {
        for m in 2..=4usize {
            let full = IndexRange::full(m);
            let x1sq = x(m, 1).mul(&x(m, 1)).unwrap();
            let ph = harmonic_part(&x1sq);
            let expected = x1sq
                .sub(&CliffordPolynomial::rsq(m, full).scale_rat(&rat(1, m as i64)))
                .unwrap();
            assert_eq!(ph, expected, "m={m}");
            assert!(laplace(&ph, full).is_zero());

            assert!(harmonic_part(&CliffordPolynomial::rsq(m, full)).is_zero());

            let x1x2 = x(m, 1).mul(&x(m, 2)).unwrap();
            assert_eq!(harmonic_part(&x1x2), x1x2);
        }
    }

    #[test]
    fn harmonic_components_resolve_identity() {
        for m in 2..=3usize {
            let full = IndexRange::full(m);
            let rsq = CliffordPolynomial::rsq(m, full);
            assert_eq!(harmonic_component(&rsq, 1), rsq);
            let x1sq = x(m, 1).mul(&x(m, 1)).unwrap();
            assert_eq!(harmonic_component(&x1sq, 0), harmonic_part(&x1sq));
            assert_eq!(
                harmonic_component(&x1sq, 1),
                rsq.scale_rat(&rat(1, m as i64))
            );
            let total = harmonic_component(&x1sq, 0)
                .add(&harmonic_component(&x1sq, 1))
                .unwrap();
            assert_eq!(total, x1sq);
        }
    }

    #[test]
    fn monogenic_part_examples() {
        for m in 2..=4usize {
            let full = IndexRange::full(m);
            let xv = CliffordPolynomial::vector(m, full);
            assert!(monogenic_part(&xv).is_zero());

            // P_M(x1) = x1 + (1/m) x e1
            let e1 = crate::clifford::Multivector::generator(m, 1).unwrap();
            let pm = monogenic_part(&x(m, 1));
            let expected = x(m, 1)
                .add(&xv.right_mul_mv(&e1).unwrap().scale_rat(&rat(1, m as i64)))
                .unwrap();
            assert_eq!(pm, expected, "m={m}");
            assert!(dirac(&pm, full).is_zero());

            // odd component complements it
            let odd = monogenic_component(&x(m, 1), 0, Parity::Odd);
            assert_eq!(
                odd,
                xv.right_mul_mv(&e1).unwrap().scale_rat(&rat(-1, m as i64))
            );
            assert_eq!(pm.add(&odd).unwrap(), x(m, 1));

            // P_{M,1}(x) = x
            assert_eq!(monogenic_component(&xv, 0, Parity::Odd), xv);
            assert!(monogenic_component(&xv, 0, Parity::Even).is_zero());

            // P_{M,0} coincides with the monogenic part
            for p in [&xv, &x(m, 1), &CliffordPolynomial::rsq(m, full)] {
                assert_eq!(monogenic_component(p, 0, Parity::Even), monogenic_part(p));
            }
        }
    }

    #[test]
    fn degenerate_constant_case_at_m2() {
        // 2E + m - 2 = 0 only for m = 2, degree 0; constants are monogenic
        let m = 2;
        let c = CliffordPolynomial::from_mv(crate::clifford::Multivector::generator(m, 1).unwrap());
        assert_eq!(monogenic_part(&c), c);
    }

    #[test]
    fn projection_constants() {
        let split = SpaceSplit::new(4, 2).unwrap();
        let c0 = constants(0, 3, 1, &split);
        assert_eq!(c0.lambda, Rat::one());
        assert_eq!(c0.c, Rat::one());
        let c1 = constants(1, 2, 1, &split);
        // lambda(1,k,i) = -1/(k+i+m/2)
        assert_eq!(
            c1.lambda,
            -Rat::one() / (rat_int(2) + rat_int(1) + rat_int(2))
        );
        // c(1,0,0,p,q) = 2pq/m for any split
        for (p, m) in [(1usize, 2usize), (1, 3), (2, 4), (2, 5), (3, 6)] {
            let split = SpaceSplit::new(m, p).unwrap();
            let q = (m - p) as i64;
            let c = constants(1, 0, 0, &split);
            assert_eq!(c.c, rat(2 * p as i64 * q, m as i64));
        }
    }

    #[test]
    fn fast_path_matches_series_on_simple_split() {
        // p = q = 1, m = 2: P_H(u1^2) = u1^2 - |x|^2/2
        let split = SpaceSplit::new(2, 1).unwrap();
        let one = CliffordPolynomial::one(2);
        let inp = SplitProductInput::new(1, one.clone(), one, split).unwrap();
        let fast = harmonic_product_fast(&inp).unwrap();
        let series = harmonic_part(&inp.raw_product(false));
        assert_eq!(fast, series);

        // norm check: ||P_H(|u|^2)||^2 = c(1,0,0,1,1) = 1
        let norm = fischer_inner(&fast, &fast).unwrap();
        assert_eq!(norm, GaussianRational::from_rat(rat_int(1)));
    }

    #[test]
    fn fast_path_rejects_non_harmonic_factor() {
        let split = SpaceSplit::new(2, 1).unwrap();
        let u2 = x(2, 1).mul(&x(2, 1)).unwrap();
        let inp = SplitProductInput::new(0, u2, CliffordPolynomial::one(2), split).unwrap();
        assert!(matches!(
            harmonic_product_fast(&inp),
            Err(Error::NotHarmonic)
        ));
    }

    #[test]
    fn monogenic_product_s0_is_plain_product() {
        let split = SpaceSplit::new(3, 2).unwrap();
        let w = crate::clifford::witt_fixtures(3).unwrap();
        let z = x(3, 1).add(&x(3, 2).scale(&GaussianRational::i())).unwrap();
        let pk = z.right_mul_mv(&w.i_plus).unwrap();
        let qi =
            CliffordPolynomial::from_mv(crate::clifford::Multivector::generator(3, 3).unwrap());
        let inp = SplitProductInput::new(0, pk.clone(), qi.clone(), split).unwrap();
        let (poly, factor) = monogenic_product(&inp, false).unwrap();
        let product = pk.mul(&qi).unwrap();
        assert_eq!(poly, product);
        assert_eq!(factor, Rat::one());
        // the product of monogenics in split variables is annihilated by the
        // full Dirac operator, so the projector fixes it
        assert!(dirac(&product, IndexRange::full(3)).is_zero());
        assert_eq!(monogenic_part(&product), product);
    }

    #[test]
    fn monogenic_product_with_u_at_origin() {
        // s = k = i = 0: P_M(u) = ((m-p) u - p v)/m with norm factor pq/m
        for (m, p) in [(2usize, 1usize), (3, 1), (3, 2), (4, 2), (5, 2)] {
            let split = SpaceSplit::new(m, p).unwrap();
            let one = CliffordPolynomial::one(m);
            let inp = SplitProductInput::new(0, one.clone(), one, split.clone()).unwrap();
            let (poly, factor) = monogenic_product(&inp, true).unwrap();
            let q = (m - p) as i64;
            let u = CliffordPolynomial::vector(m, split.u_range());
            let v = CliffordPolynomial::vector(m, split.v_range());
            let expected = u
                .scale_rat(&rat(q, m as i64))
                .sub(&v.scale_rat(&rat(p as i64, m as i64)))
                .unwrap();
            assert_eq!(poly, expected, "m={m} p={p}");
            assert_eq!(factor, rat(p as i64 * q, m as i64));
            // the returned factor is the actual squared norm for unit factors
            let norm = fischer_inner(&poly, &poly).unwrap();
            assert_eq!(norm, GaussianRational::from_rat(factor));
        }
    }

    #[test]
    fn monogenic_product_rejects_non_monogenic() {
        let split = SpaceSplit::new(2, 1).unwrap();
        let inp = SplitProductInput::new(0, x(2, 1), CliffordPolynomial::one(2), split).unwrap();
        assert!(matches!(
            monogenic_product(&inp, false),
            Err(Error::NotMonogenic)
        ));
    }

    #[test]
    fn split_input_validation() {
        let split = SpaceSplit::new(3, 2).unwrap();
        // v-side variable in the u-factor is rejected
        assert!(
            SplitProductInput::new(0, x(3, 3), CliffordPolynomial::one(3), split.clone()).is_err()
        );
        // inhomogeneous factor is rejected
        let inhom = x(3, 1).add(&CliffordPolynomial::one(3)).unwrap();
        assert!(SplitProductInput::new(0, inhom, CliffordPolynomial::one(3), split).is_err());
    }

    #[test]
    fn raw_product_shapes() {
        let split = SpaceSplit::new(2, 1).unwrap();
        let one = CliffordPolynomial::one(2);
        let inp = SplitProductInput::new(1, one.clone(), one, split.clone()).unwrap();
        let raw = inp.raw_product(false);
        assert_eq!(raw, x(2, 1).mul(&x(2, 1)).unwrap());
        let raw_u = inp.raw_product(true);
        let u = CliffordPolynomial::vector(2, split.u_range());
        assert_eq!(raw_u, u.mul(&x(2, 1).mul(&x(2, 1)).unwrap()).unwrap());
    }
}

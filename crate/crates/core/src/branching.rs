//! Base-case bases on `R^1` and `R^2`, the product maps into `Har(R^m)` and
//! `Mon(R^m, C_m)`, Scasimir operators with exact eigenvalue signatures, and
//! the recursive generator of orthogonal bases driven by a chain of head
//! dimensions (step-two by default).

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::clifford::{
    check_dim, pseudoscalar_projectors, signed_pseudoscalar, witt_fixtures, Multivector,
};
use crate::error::{Error, Result};
use crate::nullspace::{nullity, SparseColumns};
use crate::poly::{
    casimir_h, dirac, fischer_gram, fischer_inner, gamma, laplace, vector_mul, CliffordPolynomial,
    IndexRange,
};
use crate::projections::{
    constants, harmonic_part, harmonic_product_fast, monogenic_part, monogenic_product,
    SplitProductInput,
};
use crate::scalar::{GaussianRational, Rat};

/// The direct-sum designation `R^m = R^p (+) R^q`, head-first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpaceSplit {
    m: usize,
    p: usize,
}

impl SpaceSplit {
    pub fn new(m: usize, p: usize) -> Result<Self> {
        check_dim(m)?;
        if p == 0 || p >= m {
            return Err(Error::InvalidRange {
                start: 1,
                end: p,
                dim: m,
            });
        }
        Ok(SpaceSplit { m, p })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.m - self.p
    }

    pub fn u_range(&self) -> IndexRange {
        IndexRange::head(self.p)
    }

    pub fn v_range(&self) -> IndexRange {
        IndexRange::tail(self.p, self.m)
    }
}

/// Which kernel the basis spans.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BasisMode {
    Harmonic,
    Monogenic,
}

impl BasisMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            BasisMode::Harmonic => "harmonic",
            BasisMode::Monogenic => "monogenic",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "harmonic" | "har" => Ok(BasisMode::Harmonic),
            "monogenic" | "mon" => Ok(BasisMode::Monogenic),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// Family tag of a base-case element. The four two-dimensional monogenic
/// families follow the Witt-basis building blocks; the one-dimensional
/// monogenic base uses the pseudoscalar eigenprojections `P_± = (1 -+ i e)/2`
/// so that every base element is a Scasimir eigenvector; harmonic bases use
/// the holomorphic/antiholomorphic powers and the single axis family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    IPlus,
    TPlus,
    IMinus,
    TMinus,
    PPlus,
    PMinus,
    Holo,
    AntiHolo,
    Axis,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::IPlus => "I+",
            Family::TPlus => "T+",
            Family::IMinus => "I-",
            Family::TMinus => "T-",
            Family::PPlus => "P+",
            Family::PMinus => "P-",
            Family::Holo => "z",
            Family::AntiHolo => "zbar",
            Family::Axis => "x",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "I+" => Family::IPlus,
            "T+" => Family::TPlus,
            "I-" => Family::IMinus,
            "T-" => Family::TMinus,
            "P+" => Family::PPlus,
            "P-" => Family::PMinus,
            "z" => Family::Holo,
            "zbar" => Family::AntiHolo,
            "x" => Family::Axis,
            other => return Err(Error::Parse(format!("unknown family tag `{other}`"))),
        })
    }

    /// Sign of the `c e_P` eigenvalue of the family (monogenic families only).
    fn class_sign(&self) -> i64 {
        match self {
            Family::IPlus | Family::TPlus | Family::PPlus => 1,
            Family::IMinus | Family::TMinus | Family::PMinus => -1,
            Family::Holo | Family::AntiHolo | Family::Axis => 0,
        }
    }
}

/// One recursion level of a branching label: u-power `s`, head degree `k`,
/// and the family of the head factor. The final level is the base case and
/// carries `s = 0` with `k` equal to the tail degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LabelLevel {
    pub s: u32,
    pub k: u32,
    pub family: Family,
}

/// Full branching label: one level per chain entry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct BranchLabel {
    pub levels: Vec<LabelLevel>,
}

impl BranchLabel {
    /// Degree at the deepest level.
    pub fn tail_degree(&self) -> u32 {
        self.levels.last().map(|l| l.k).unwrap_or(0)
    }
}

/// A constructed basis element with its exact squared Fischer norm and the
/// per-level eigenvalue triples.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub poly: CliffordPolynomial,
    pub label: BranchLabel,
    pub norm2: Rat,
    pub signature: Vec<[Rat; 3]>,
}

fn half(n: i64) -> Rat {
    Rat::new(n.into(), 2.into())
}

fn rat_u(n: u32) -> Rat {
    Rat::from_integer(n.into())
}

fn rat_i(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `z = x_1 + i x_2` in the given ambient dimension.
fn complex_coordinate(m: usize, conjugated: bool) -> CliffordPolynomial {
    let x1 = CliffordPolynomial::coordinate(m, 1);
    let x2 = CliffordPolynomial::coordinate(m, 2);
    let i = if conjugated {
        -GaussianRational::i()
    } else {
        GaussianRational::i()
    };
    x1.add(&x2.scale(&i)).expect("same dim")
}

fn poly_pow(base: &CliffordPolynomial, n: u32) -> CliffordPolynomial {
    let mut acc = CliffordPolynomial::one(base.dim());
    for _ in 0..n {
        acc = acc.mul(base).expect("same dim");
    }
    acc
}

/// Base-case harmonic basis: `{1}` / `{x_1}` on the line, `{z^k, zbar^k}` on
/// the plane.
pub fn base_har_basis(p: usize, k: u32) -> Result<Vec<CliffordPolynomial>> {
    Ok(base_har_families(p, k)?
        .into_iter()
        .map(|(_, poly)| poly)
        .collect())
}

fn base_har_families(p: usize, k: u32) -> Result<Vec<(Family, CliffordPolynomial)>> {
    match p {
        1 => Ok(match k {
            0 => vec![(Family::Axis, CliffordPolynomial::one(1))],
            1 => vec![(Family::Axis, CliffordPolynomial::coordinate(1, 1))],
            _ => vec![],
        }),
        2 => {
            if k == 0 {
                return Ok(vec![(Family::Holo, CliffordPolynomial::one(2))]);
            }
            let z = poly_pow(&complex_coordinate(2, false), k);
            let zbar = poly_pow(&complex_coordinate(2, true), k);
            Ok(vec![(Family::Holo, z), (Family::AntiHolo, zbar)])
        }
        _ => Err(Error::InvalidBase { p }),
    }
}

/// Base-case monogenic basis as published: `{1, e_1}` on the line and the
/// four Witt-block families `{z^k I_+, z^k T_+, zbar^k I_-, zbar^k T_-}` on
/// the plane. Every element is verified monogenic.
pub fn base_mon_basis(p: usize, k: u32) -> Result<Vec<CliffordPolynomial>> {
    let list: Vec<CliffordPolynomial> = match p {
        1 => match k {
            0 => vec![
                CliffordPolynomial::one(1),
                CliffordPolynomial::from_mv(Multivector::generator(1, 1)?),
            ],
            _ => vec![],
        },
        2 => base_mon_families(p, k)?
            .into_iter()
            .map(|(_, poly)| poly)
            .collect(),
        _ => return Err(Error::InvalidBase { p }),
    };
    for poly in &list {
        if !dirac(poly, IndexRange::full(p)).is_zero() {
            return Err(Error::NotMonogenic);
        }
    }
    Ok(list)
}

fn base_mon_families(p: usize, k: u32) -> Result<Vec<(Family, CliffordPolynomial)>> {
    match p {
        1 => {
            if k > 0 {
                return Ok(vec![]);
            }
            let (_, plus, minus) = pseudoscalar_projectors(1, 1)?;
            Ok(vec![
                (Family::PPlus, CliffordPolynomial::from_mv(plus)),
                (Family::PMinus, CliffordPolynomial::from_mv(minus)),
            ])
        }
        2 => {
            let w = witt_fixtures(2)?;
            let zk = poly_pow(&complex_coordinate(2, false), k);
            let zbk = poly_pow(&complex_coordinate(2, true), k);
            Ok(vec![
                (Family::IPlus, zk.right_mul_mv(&w.i_plus)?),
                (Family::TPlus, zk.right_mul_mv(&w.t_plus)?),
                (Family::IMinus, zbk.right_mul_mv(&w.i_minus)?),
                (Family::TMinus, zbk.right_mul_mv(&w.t_minus)?),
            ])
        }
        _ => Err(Error::InvalidBase { p }),
    }
}

/// Scasimir `S_u = c e_P (Gamma_u - (p-1)/2)`.
pub fn scasimir_u(p: &CliffordPolynomial, split: &SpaceSplit) -> CliffordPolynomial {
    assert_eq!(p.dim(), split.m());
    let unit = signed_pseudoscalar(split.p(), split.m()).expect("valid split");
    let shifted = gamma(p, split.u_range())
        .sub(&p.scale_rat(&half(split.p() as i64 - 1)))
        .expect("same dim");
    shifted.left_mul_mv(&unit).expect("same dim")
}

/// Scasimir `S_v = c e_P (Gamma_v - (q-1)/2)`; the pseudoscalar factor stays
/// the one of the head block.
pub fn scasimir_v(p: &CliffordPolynomial, split: &SpaceSplit) -> CliffordPolynomial {
    assert_eq!(p.dim(), split.m());
    let unit = signed_pseudoscalar(split.p(), split.m()).expect("valid split");
    let shifted = gamma(p, split.v_range())
        .sub(&p.scale_rat(&half(split.q() as i64 - 1)))
        .expect("same dim");
    shifted.left_mul_mv(&unit).expect("same dim")
}

/// Ratio `mu` with `op_out = mu * p` exactly; the eigenvalue must be real.
fn eigen_ratio(op_out: &CliffordPolynomial, p: &CliffordPolynomial) -> Result<Rat> {
    let Some((e0, mv0)) = p.terms().next() else {
        return Err(Error::NotEigenvector);
    };
    let (blade0, c0) = mv0.terms().next().expect("no zero coefficients stored");
    let c1 = op_out.coeff(e0).coeff(*blade0);
    let mu = c1.checked_div(c0)?;
    if !mu.is_real() {
        return Err(Error::NotEigenvector);
    }
    if *op_out != p.scale(&mu) {
        return Err(Error::NotEigenvector);
    }
    Ok(mu.re)
}

/// Exact eigenvalue triple of `(S_u, S_v, Gamma_x - (m-1)/2)` on `P`; fails
/// if `P` is not a joint eigenvector, which signals a construction bug.
pub fn eigen_signature(p: &CliffordPolynomial, split: &SpaceSplit) -> Result<[Rat; 3]> {
    let m = split.m();
    let su = eigen_ratio(&scasimir_u(p, split), p)?;
    let sv = eigen_ratio(&scasimir_v(p, split), p)?;
    let gx = gamma(p, IndexRange::full(m))
        .sub(&p.scale_rat(&half(m as i64 - 1)))
        .expect("same dim");
    let gx = eigen_ratio(&gx, p)?;
    Ok([su, sv, gx])
}

/// Eigenvalue triple applied at a base level (`q = 0`): `S_v` degenerates to
/// `c e_P / 2` and the Gamma shift uses the base dimension.
fn base_signature(mode: BasisMode, poly: &CliffordPolynomial, p: usize) -> Result<[Rat; 3]> {
    let full = IndexRange::full(p);
    match mode {
        BasisMode::Monogenic => {
            let unit = signed_pseudoscalar(p, p)?;
            let shifted = gamma(poly, full).sub(&poly.scale_rat(&half(p as i64 - 1)))?;
            let su = eigen_ratio(&shifted.left_mul_mv(&unit)?, poly)?;
            let sv_op = poly.scale_rat(&half(1)).left_mul_mv(&unit)?;
            let sv = eigen_ratio(&sv_op, poly)?;
            let gx = eigen_ratio(&shifted, poly)?;
            Ok([su, sv, gx])
        }
        BasisMode::Harmonic => {
            let cu = eigen_ratio(&casimir_h(poly, full), poly)?;
            Ok([cu.clone(), Rat::zero(), cu])
        }
    }
}

/// Table values for a monogenic level: `s` is the full u-power (odd powers
/// carry the extra vector factor), `class` the `c e_P` eigenvalue sign of the
/// head family.
fn expected_monogenic_triple(
    s: u32,
    k: u32,
    i: u32,
    p: usize,
    q: usize,
    m: usize,
    class: i64,
) -> [Rat; 3] {
    let kp = rat_u(k) + half(p as i64 - 1);
    let iq = rat_u(i) + half(q as i64 - 1);
    let gx = -(rat_u(k + i + s) + half(m as i64 - 1));
    let class = rat_i(class);
    if s % 2 == 0 {
        [-&class * kp, -&class * iq, gx]
    } else {
        let sign = if p % 2 == 0 { Rat::one() } else { -Rat::one() };
        [-&class * &sign * kp, class * sign * iq, gx]
    }
}

/// Table values for a harmonic level: eigenvalues of the three commuting
/// Laplace-Beltrami operators.
fn expected_harmonic_triple(s: u32, k: u32, i: u32, p: usize, q: usize, m: usize) -> [Rat; 3] {
    let d = 2 * s + k + i;
    let cas = |deg: u32, dim: usize| -> Rat { -rat_u(deg) * (rat_u(deg) + rat_i(dim as i64 - 2)) };
    [cas(k, p), cas(i, q), cas(d, m)]
}

/// Default chain: step-two levels with a final step-one level for odd `m`.
pub fn default_chain(m: usize) -> Vec<usize> {
    let mut chain = vec![2; m / 2];
    if m % 2 == 1 {
        chain.push(1);
    }
    chain
}

fn validate_chain(m: usize, chain: &[usize]) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::InvalidChain {
            reason: "chain is empty".into(),
        });
    }
    if chain.iter().any(|&p| p != 1 && p != 2) {
        return Err(Error::InvalidChain {
            reason: format!("chain entries must be 1 or 2, got {chain:?}"),
        });
    }
    let total: usize = chain.iter().sum();
    if total != m {
        return Err(Error::InvalidChain {
            reason: format!("chain {chain:?} sums to {total}, expected {m}"),
        });
    }
    Ok(())
}

/// Intermediate element inside the recursion, living in the suffix space.
#[derive(Clone, Debug)]
struct RawElement {
    poly: CliffordPolynomial,
    levels: Vec<LabelLevel>,
    norm2: Rat,
    signature: Vec<[Rat; 3]>,
}

fn base_elements(mode: BasisMode, p: usize, degree: u32) -> Result<Vec<RawElement>> {
    let families = match mode {
        BasisMode::Harmonic => base_har_families(p, degree)?,
        BasisMode::Monogenic => base_mon_families(p, degree)?,
    };
    let mut out = Vec::with_capacity(families.len());
    for (family, poly) in families {
        let norm = fischer_inner(&poly, &poly)?;
        debug_assert!(norm.is_real());
        let triple = base_signature(mode, &poly, p)?;
        let expected = match mode {
            BasisMode::Monogenic => {
                expected_monogenic_triple(0, degree, 0, p, 0, p, family.class_sign())
            }
            BasisMode::Harmonic => expected_harmonic_triple(0, degree, 0, p, 0, p),
        };
        if triple != expected {
            return Err(Error::Construction(format!(
                "base signature {triple:?} does not match table value {expected:?}"
            )));
        }
        out.push(RawElement {
            poly,
            levels: vec![LabelLevel {
                s: 0,
                k: degree,
                family,
            }],
            norm2: norm.re,
            signature: vec![triple],
        });
    }
    Ok(out)
}

/// Harmonic per-level triple verified by applying the three Casimirs.
fn harmonic_level_signature(poly: &CliffordPolynomial, split: &SpaceSplit) -> Result<[Rat; 3]> {
    let cu = eigen_ratio(&casimir_h(poly, split.u_range()), poly)?;
    let cv = eigen_ratio(&casimir_h(poly, split.v_range()), poly)?;
    let cf = eigen_ratio(&casimir_h(poly, IndexRange::full(split.m())), poly)?;
    Ok([cu, cv, cf])
}

struct Combo<'a> {
    s: u32,
    k: u32,
    i: u32,
    family: Family,
    u_poly: CliffordPolynomial,
    u_norm: Rat,
    tail: &'a RawElement,
    tail_embedded: &'a CliffordPolynomial,
}

fn combine(mode: BasisMode, split: &SpaceSplit, combo: &Combo<'_>) -> Result<RawElement> {
    let (poly, factor) = match mode {
        BasisMode::Harmonic => {
            let inp = SplitProductInput::new(
                combo.s,
                combo.u_poly.clone(),
                combo.tail_embedded.clone(),
                split.clone(),
            )?;
            let poly = harmonic_product_fast(&inp)?;
            let factor = constants(combo.s, combo.k, combo.i, split).c;
            (poly, factor)
        }
        BasisMode::Monogenic => {
            let inp = SplitProductInput::new(
                combo.s / 2,
                combo.u_poly.clone(),
                combo.tail_embedded.clone(),
                split.clone(),
            )?;
            monogenic_product(&inp, combo.s % 2 == 1)?
        }
    };
    if poly.is_zero() {
        return Err(Error::Construction(
            "projected basis element vanished".into(),
        ));
    }
    let norm2 = factor * &combo.u_norm * &combo.tail.norm2;
    let actual = fischer_inner(&poly, &poly)?;
    if !actual.is_real() || actual.re != norm2 {
        return Err(Error::Construction(format!(
            "norm mismatch: recursive formula gives {norm2}, Fischer product gives {actual}"
        )));
    }
    let triple = match mode {
        BasisMode::Harmonic => harmonic_level_signature(&poly, split)?,
        BasisMode::Monogenic => eigen_signature(&poly, split)?,
    };
    let expected = match mode {
        BasisMode::Harmonic => {
            expected_harmonic_triple(combo.s, combo.k, combo.i, split.p(), split.q(), split.m())
        }
        BasisMode::Monogenic => expected_monogenic_triple(
            combo.s,
            combo.k,
            combo.i,
            split.p(),
            split.q(),
            split.m(),
            combo.family.class_sign(),
        ),
    };
    if triple != expected {
        return Err(Error::Construction(format!(
            "level signature {triple:?} does not match table value {expected:?}"
        )));
    }
    let mut levels = vec![LabelLevel {
        s: combo.s,
        k: combo.k,
        family: combo.family,
    }];
    levels.extend(combo.tail.levels.iter().copied());
    let mut signature = vec![triple];
    signature.extend(combo.tail.signature.iter().cloned());
    Ok(RawElement {
        poly,
        levels,
        norm2,
        signature,
    })
}

type SuffixCache = HashMap<(usize, u32), Vec<RawElement>>;

fn build_suffix(
    mode: BasisMode,
    chain: &[usize],
    degree: u32,
    cache: &mut SuffixCache,
) -> Result<()> {
    let key = (chain.len(), degree);
    if cache.contains_key(&key) {
        return Ok(());
    }
    let elements = if chain.len() == 1 {
        base_elements(mode, chain[0], degree)?
    } else {
        for i in 0..=degree {
            build_suffix(mode, &chain[1..], i, cache)?;
        }
        let m_suffix: usize = chain.iter().sum();
        let split = SpaceSplit::new(m_suffix, chain[0])?;
        let mut out = Vec::new();
        for (s, k, i) in level_labels(mode, degree) {
            let u_families = match mode {
                BasisMode::Harmonic => base_har_families(split.p(), k)?,
                BasisMode::Monogenic => base_mon_families(split.p(), k)?,
            };
            if u_families.is_empty() {
                continue;
            }
            let tails = cache.get(&(chain.len() - 1, i)).expect("prebuilt").clone();
            if tails.is_empty() {
                continue;
            }
            let embedded: Vec<CliffordPolynomial> = tails
                .iter()
                .map(|t| t.poly.embed(split.p(), m_suffix))
                .collect::<Result<_>>()?;
            for (family, u_poly_small) in u_families {
                let u_norm = fischer_inner(&u_poly_small, &u_poly_small)?.re;
                let u_poly = u_poly_small.embed(0, m_suffix)?;
                for (tail, tail_embedded) in tails.iter().zip(embedded.iter()) {
                    let combo = Combo {
                        s,
                        k,
                        i,
                        family,
                        u_poly: u_poly.clone(),
                        u_norm: u_norm.clone(),
                        tail,
                        tail_embedded,
                    };
                    out.push(combine(mode, &split, &combo)?);
                }
            }
        }
        out
    };
    cache.insert(key, elements);
    Ok(())
}

/// Labels `(s, k, i)` entering one level at the given degree: `s + k + i`
/// for monogenic mode, `2s + k + i` for harmonic mode.
fn level_labels(mode: BasisMode, degree: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    let s_max = match mode {
        BasisMode::Harmonic => degree / 2,
        BasisMode::Monogenic => degree,
    };
    for s in 0..=s_max {
        let used = match mode {
            BasisMode::Harmonic => 2 * s,
            BasisMode::Monogenic => s,
        };
        for k in 0..=(degree - used) {
            out.push((s, k, degree - used - k));
        }
    }
    out
}

fn branch_basis_impl(
    mode: BasisMode,
    m: usize,
    n: u32,
    chain: &[usize],
    parallel: bool,
) -> Result<Vec<BasisElement>> {
    check_dim(m)?;
    validate_chain(m, chain)?;
    let mut cache = SuffixCache::new();
    let raw = if chain.len() == 1 {
        base_elements(mode, chain[0], n)?
    } else {
        for i in 0..=n {
            build_suffix(mode, &chain[1..], i, &mut cache)?;
        }
        let split = SpaceSplit::new(m, chain[0])?;
        let mut combos = Vec::new();
        let mut tails_store: Vec<(Vec<RawElement>, Vec<CliffordPolynomial>)> = Vec::new();
        let mut plan: Vec<(u32, u32, u32, Family, CliffordPolynomial, Rat, usize)> = Vec::new();
        for (s, k, i) in level_labels(mode, n) {
            let u_families = match mode {
                BasisMode::Harmonic => base_har_families(split.p(), k)?,
                BasisMode::Monogenic => base_mon_families(split.p(), k)?,
            };
            if u_families.is_empty() {
                continue;
            }
            let tails = cache.get(&(chain.len() - 1, i)).expect("prebuilt").clone();
            if tails.is_empty() {
                continue;
            }
            let embedded: Vec<CliffordPolynomial> = tails
                .iter()
                .map(|t| t.poly.embed(split.p(), m))
                .collect::<Result<_>>()?;
            let store_idx = tails_store.len();
            tails_store.push((tails, embedded));
            for (family, u_poly_small) in u_families {
                let u_norm = fischer_inner(&u_poly_small, &u_poly_small)?.re;
                let u_poly = u_poly_small.embed(0, m)?;
                plan.push((s, k, i, family, u_poly, u_norm, store_idx));
            }
        }
        for (s, k, i, family, u_poly, u_norm, store_idx) in &plan {
            let (tails, embedded) = &tails_store[*store_idx];
            for (tail, tail_embedded) in tails.iter().zip(embedded.iter()) {
                combos.push(Combo {
                    s: *s,
                    k: *k,
                    i: *i,
                    family: *family,
                    u_poly: u_poly.clone(),
                    u_norm: u_norm.clone(),
                    tail,
                    tail_embedded,
                });
            }
        }
        run_combos(mode, &split, combos, parallel)?
    };
    let mut elements: Vec<BasisElement> = raw
        .into_iter()
        .map(|r| BasisElement {
            poly: r.poly,
            label: BranchLabel { levels: r.levels },
            norm2: r.norm2,
            signature: r.signature,
        })
        .collect();
    elements.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(elements)
}

#[cfg(feature = "parallel")]
fn run_combos(
    mode: BasisMode,
    split: &SpaceSplit,
    combos: Vec<Combo<'_>>,
    parallel: bool,
) -> Result<Vec<RawElement>> {
    if parallel {
        use rayon::prelude::*;
        combos.par_iter().map(|c| combine(mode, split, c)).collect()
    } else {
        combos.iter().map(|c| combine(mode, split, c)).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_combos(
    mode: BasisMode,
    split: &SpaceSplit,
    combos: Vec<Combo<'_>>,
    _parallel: bool,
) -> Result<Vec<RawElement>> {
    combos.iter().map(|c| combine(mode, split, c)).collect()
}

/// Build the orthogonal basis of `Har_n(R^m)` or `Mon_n(R^m, C_m)` along the
/// given chain of head dimensions. Every element is constructed through the
/// closed-form projections, its norm is cross-checked against the Fischer
/// inner product, and its per-level eigenvalue triple is verified by operator
/// application; label order is lexicographic. Uses parallel label fan-out at
/// the top level when the `parallel` feature is enabled.
pub fn branch_basis(
    mode: BasisMode,
    m: usize,
    n: u32,
    chain: &[usize],
) -> Result<Vec<BasisElement>> {
    branch_basis_impl(mode, m, n, chain, true)
}

/// Sequential variant of [`branch_basis`].
pub fn branch_basis_seq(
    mode: BasisMode,
    m: usize,
    n: u32,
    chain: &[usize],
) -> Result<Vec<BasisElement>> {
    branch_basis_impl(mode, m, n, chain, false)
}

/// Product map into the harmonic space: `tau_H(K (x) G) = P_H(K(u) G(v))`,
/// dispatching to the Jacobi closed form when `K` is a radial power times a
/// harmonic factor.
pub fn tau_h(
    k_poly: &CliffordPolynomial,
    g: &CliffordPolynomial,
    split: &SpaceSplit,
) -> Result<CliffordPolynomial> {
    if !k_poly.supported_on(split.u_range()) || !g.supported_on(split.v_range()) {
        return Err(Error::Construction(
            "tau factors must live on their split sides".into(),
        ));
    }
    if !laplace(g, split.v_range()).is_zero() {
        return Err(Error::NotHarmonic);
    }
    let mut out = CliffordPolynomial::zero(split.m());
    for (_, k_comp) in k_poly.homogeneous_components() {
        for (_, g_comp) in g.homogeneous_components() {
            let (s, core) = strip_radial(&k_comp, split.u_range());
            let term = if laplace(&core, split.u_range()).is_zero() {
                let inp = SplitProductInput::new(s, core, g_comp.clone(), split.clone())?;
                harmonic_product_fast(&inp)?
            } else {
                harmonic_part(&k_comp.mul(&g_comp)?)
            };
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

/// Product map into the monogenic space: `tau_M(K (x) G) = P_M(K(u) G(v))`,
/// dispatching to the closed forms when `K` is `|u|^{2s}` or `u |u|^{2s}`
/// times a monogenic factor.
pub fn tau_m(
    k_poly: &CliffordPolynomial,
    g: &CliffordPolynomial,
    split: &SpaceSplit,
) -> Result<CliffordPolynomial> {
    if !k_poly.supported_on(split.u_range()) || !g.supported_on(split.v_range()) {
        return Err(Error::Construction(
            "tau factors must live on their split sides".into(),
        ));
    }
    if !dirac(g, split.v_range()).is_zero() {
        return Err(Error::NotMonogenic);
    }
    let u_range = split.u_range();
    let mut out = CliffordPolynomial::zero(split.m());
    for (_, k_comp) in k_poly.homogeneous_components() {
        for (_, g_comp) in g.homogeneous_components() {
            let (s, core) = strip_radial(&k_comp, u_range);
            let term = if dirac(&core, u_range).is_zero() {
                let inp = SplitProductInput::new(s, core, g_comp.clone(), split.clone())?;
                monogenic_product(&inp, false)?.0
            } else if let Some(inner) = odd_radial_core(&core, u_range) {
                let inp = SplitProductInput::new(s, inner, g_comp.clone(), split.clone())?;
                monogenic_product(&inp, true)?.0
            } else {
                monogenic_part(&k_comp.mul(&g_comp)?)
            };
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

/// Split `K = |u|^{2s} K0` with maximal `s`.
fn strip_radial(k: &CliffordPolynomial, range: IndexRange) -> (u32, CliffordPolynomial) {
    let mut s = 0;
    let mut core = k.clone();
    // zero divides forever; leave it alone
    while !core.is_zero() {
        let Some(next) = core.div_rsq(range) else {
            break;
        };
        core = next;
        s += 1;
    }
    (s, core)
}

/// Recognize `K0 = u M` with `M` monogenic on the range; returns `M`.
fn odd_radial_core(core: &CliffordPolynomial, range: IndexRange) -> Option<CliffordPolynomial> {
    let w = vector_mul(core, range);
    let m_candidate = w.div_rsq(range)?.neg();
    if dirac(&m_candidate, range).is_zero() && vector_mul(&m_candidate, range) == *core {
        Some(m_candidate)
    } else {
        None
    }
}

/// Exact dimension of the harmonic or monogenic kernel on homogeneous
/// degree-n polynomials, via the rational nullspace of the operator matrix in
/// the monomial (x) blade basis.
pub fn kernel_dim_oracle(mode: BasisMode, m: usize, n: u32) -> Result<usize> {
    check_dim(m)?;
    if m == 0 {
        return Err(Error::UnsupportedDimension {
            dim: 0,
            max: crate::clifford::MAX_DIM,
        });
    }
    let cols_exps = monomials_of_degree(m, n);
    match mode {
        BasisMode::Harmonic => {
            if n < 2 {
                return Ok(cols_exps.len());
            }
            let rows_exps = monomials_of_degree(m, n - 2);
            let row_index: HashMap<Vec<u32>, usize> = rows_exps
                .into_iter()
                .enumerate()
                .map(|(i, e)| (e, i))
                .collect();
            let mut cols = Vec::with_capacity(cols_exps.len());
            for alpha in &cols_exps {
                let mut col = Vec::new();
                for j in 0..m {
                    if alpha[j] >= 2 {
                        let mut beta = alpha.clone();
                        beta[j] -= 2;
                        let coeff = rat_u(alpha[j]) * rat_u(alpha[j] - 1);
                        col.push((row_index[&beta], coeff));
                    }
                }
                cols.push(col);
            }
            Ok(nullity(&SparseColumns {
                ncols: cols.len(),
                cols,
            }))
        }
        BasisMode::Monogenic => {
            if n == 0 {
                return Ok(1usize << m);
            }
            let n_blades = 1usize << m;
            let rows_exps = monomials_of_degree(m, n - 1);
            let row_index: HashMap<Vec<u32>, usize> = rows_exps
                .into_iter()
                .enumerate()
                .map(|(i, e)| (e, i))
                .collect();
            let mut cols = Vec::with_capacity(cols_exps.len() * n_blades);
            for alpha in &cols_exps {
                for mask in 0..n_blades {
                    let blade = crate::clifford::Blade::from_mask(mask as u16);
                    let mut col = Vec::new();
                    for j in 1..=m {
                        if alpha[j - 1] == 0 {
                            continue;
                        }
                        let mut beta = alpha.clone();
                        beta[j - 1] -= 1;
                        let (sign, out_blade) = crate::clifford::blade_product(
                            crate::clifford::Blade::generator(j)?,
                            blade,
                            m,
                        )?;
                        let row = row_index[&beta] * n_blades + out_blade.mask() as usize;
                        let coeff = rat_u(alpha[j - 1]) * rat_i(sign.into());
                        col.push((row, coeff));
                    }
                    cols.push(col);
                }
            }
            Ok(nullity(&SparseColumns {
                ncols: cols.len(),
                cols,
            }))
        }
    }
}

fn monomials_of_degree(m: usize, n: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 1 {
            let mut full = prefix.clone();
            full.push(n);
            out.push(full);
            return;
        }
        for a in 0..=n {
            prefix.push(a);
            rec(m - 1, n - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, &mut Vec::new(), &mut out);
    out
}

/// One entry of a verification report.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Machine-readable verification report; failures are entries, not errors.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

/// Per-level geometry of a chain inside the full space.
struct LevelGeom {
    offset: usize,
    p: usize,
    m_level: usize,
}

fn level_geometry(m: usize, chain: &[usize]) -> Vec<LevelGeom> {
    let mut out = Vec::with_capacity(chain.len());
    let mut offset = 0;
    for &p in chain {
        out.push(LevelGeom {
            offset,
            p,
            m_level: m - offset,
        });
        offset += p;
    }
    out
}

/// Degree remaining below level `level` (the tail degree seen by that level).
fn tail_degree_below(mode: BasisMode, label: &BranchLabel, level: usize) -> u32 {
    label.levels[level + 1..]
        .iter()
        .map(|l| match mode {
            BasisMode::Harmonic => 2 * l.s + l.k,
            BasisMode::Monogenic => l.s + l.k,
        })
        .sum()
}

fn expected_triple_at_level(
    mode: BasisMode,
    label: &BranchLabel,
    level: usize,
    geom: &LevelGeom,
) -> [Rat; 3] {
    let l = label.levels[level];
    let i = tail_degree_below(mode, label, level);
    let q = geom.m_level - geom.p;
    match mode {
        BasisMode::Harmonic => expected_harmonic_triple(l.s, l.k, i, geom.p, q, geom.m_level),
        BasisMode::Monogenic => {
            expected_monogenic_triple(l.s, l.k, i, geom.p, q, geom.m_level, l.family.class_sign())
        }
    }
}

/// Class key identifying the eigenvalue block of an element: per level the
/// numeric labels plus, for monogenic step-two levels, the family sign (the
/// two members of a Witt pair share one block, and `k + 1/2 != 0` makes the
/// sign visible in the head Scasimir there). Step-one levels force `k = 0`,
/// where the sign can be invisible to the triple, so it is not part of the
/// key.
fn class_key(mode: BasisMode, label: &BranchLabel, chain: &[usize]) -> Vec<(u32, u32, i64)> {
    label
        .levels
        .iter()
        .zip(chain.iter())
        .map(|(l, &p)| {
            let class = match mode {
                BasisMode::Harmonic => 0,
                BasisMode::Monogenic if p == 2 => l.family.class_sign(),
                BasisMode::Monogenic => 0,
            };
            (l.s, l.k, class)
        })
        .collect()
}

/// Re-verify a constructed (or deserialized) basis: count against the kernel
/// oracle (optional), homogeneity, annihilation, exact Gram diagonality,
/// stored norms, and the eigenvalue signatures. The top-level triple is
/// re-verified by operator application on every element; deeper levels are
/// re-verified by application where the operator passes through the shallower
/// construction (the head-block Scasimir for monogenic mode, all three
/// Casimirs for harmonic mode) and against the label-derived table values
/// everywhere.
pub fn verify_basis(
    elements: &[BasisElement],
    mode: BasisMode,
    m: usize,
    n: u32,
    chain: &[usize],
    check_oracle: bool,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    if let Err(e) = validate_chain(m, chain) {
        report.push("chain_valid", false, format!("{e}"));
        return Ok(report);
    }
    report.push("chain_valid", true, format!("chain {chain:?}"));
    let geoms = level_geometry(m, chain);
    let full = IndexRange::full(m);

    if check_oracle {
        let expected = kernel_dim_oracle(mode, m, n)?;
        report.push(
            "element_count_vs_oracle",
            elements.len() == expected,
            format!(
                "basis has {} elements, kernel dimension is {expected}",
                elements.len()
            ),
        );
    }

    let mut shape_ok = true;
    let mut shape_detail = String::new();
    for (idx, el) in elements.iter().enumerate() {
        if el.poly.dim() != m
            || el.poly.homogeneous_degree().map(|d| d != n).unwrap_or(true)
            || el.label.levels.len() != chain.len()
            || el.signature.len() != chain.len()
        {
            shape_ok = false;
            shape_detail = format!("element {idx} has wrong dimension, degree, or label shape");
            break;
        }
    }
    report.push("element_shape", shape_ok, shape_detail);

    let mut annihilated = true;
    let mut ann_detail = String::new();
    for (idx, el) in elements.iter().enumerate() {
        let image = match mode {
            BasisMode::Harmonic => laplace(&el.poly, full),
            BasisMode::Monogenic => dirac(&el.poly, full),
        };
        if !image.is_zero() {
            annihilated = false;
            ann_detail = format!("element {idx} is not annihilated");
            break;
        }
    }
    report.push("annihilation", annihilated, ann_detail);

    let gram = fischer_gram(&elements.iter().map(|e| e.poly.clone()).collect::<Vec<_>>())?;
    let mut diagonal = true;
    let mut norms_match = true;
    let mut detail = String::new();
    for i in 0..elements.len() {
        for (j, entry) in gram[i].iter().enumerate() {
            if i != j && !entry.is_zero() {
                diagonal = false;
                detail = format!("off-diagonal Gram entry at ({i}, {j})");
            }
        }
        if !(gram[i][i].is_real() && gram[i][i].re == elements[i].norm2) {
            norms_match = false;
        }
    }
    report.push("gram_diagonal", diagonal, detail);
    report.push(
        "norms",
        norms_match,
        if norms_match {
            String::new()
        } else {
            "stored norm2 differs from Fischer norm".into()
        },
    );

    let mut tables_ok = true;
    let mut applied_ok = true;
    let mut sig_detail = String::new();
    for (idx, el) in elements.iter().enumerate() {
        for (level, geom) in geoms.iter().enumerate() {
            let expected = expected_triple_at_level(mode, &el.label, level, geom);
            if el.signature[level] != expected {
                tables_ok = false;
                sig_detail =
                    format!("element {idx} level {level}: stored triple differs from table");
            }
        }
        if let Err(e) = verify_signature_by_application(mode, el, &geoms, m) {
            applied_ok = false;
            sig_detail = format!("element {idx}: {e}");
        }
    }
    report.push("signature_tables", tables_ok, sig_detail.clone());
    report.push("signature_application", applied_ok, sig_detail);

    let mut sorted = true;
    for pair in elements.windows(2) {
        if pair[0].label >= pair[1].label {
            sorted = false;
        }
    }
    report.push("labels_sorted_unique", sorted, String::new());

    // Signature/label uniqueness. Monogenic triples carry strictly positive
    // half-integer magnitudes `k + (p-1)/2` and `i + (q-1)/2`, so an equal
    // signature sequence forces equal numeric labels (and the Witt-pair class
    // at step-two levels). Harmonic Casimir values can degenerate to zero on
    // one-dimensional blocks (`-k(k-1) = 0` for k in {0,1}), so there the
    // claim is per level: among elements agreeing on all shallower labels,
    // hence on the degree entering the level, the level triple determines
    // the level's `(s, k)`.
    let mut coherent = true;
    match mode {
        BasisMode::Monogenic => {
            let keys: Vec<_> = elements
                .iter()
                .map(|e| class_key(mode, &e.label, chain))
                .collect();
            for i in 0..elements.len() {
                for j in (i + 1)..elements.len() {
                    if elements[i].signature == elements[j].signature && keys[i] != keys[j] {
                        coherent = false;
                    }
                }
            }
        }
        BasisMode::Harmonic => {
            let geoms = level_geometry(m, chain);
            for (level, geom) in geoms.iter().enumerate() {
                // On a 1+1 split both Casimir values degenerate to zero for
                // every admissible degree and the labels are genuinely not
                // determined; every other split separates them.
                if geom.p < 2 && geom.m_level - geom.p < 2 {
                    continue;
                }
                for i in 0..elements.len() {
                    for j in (i + 1)..elements.len() {
                        let same_above = elements[i].label.levels[..level]
                            .iter()
                            .zip(&elements[j].label.levels[..level])
                            .all(|(a, b)| (a.s, a.k) == (b.s, b.k));
                        let li = elements[i].label.levels[level];
                        let lj = elements[j].label.levels[level];
                        if same_above
                            && elements[i].signature[level] == elements[j].signature[level]
                            && (li.s, li.k) != (lj.s, lj.k)
                        {
                            coherent = false;
                        }
                    }
                }
            }
        }
    }
    report.push(
        "signature_label_coherence",
        coherent,
        if coherent {
            String::new()
        } else {
            "signatures do not separate label classes".into()
        },
    );

    Ok(report)
}

fn verify_signature_by_application(
    mode: BasisMode,
    el: &BasisElement,
    geoms: &[LevelGeom],
    m: usize,
) -> Result<()> {
    for (level, geom) in geoms.iter().enumerate() {
        let stored = &el.signature[level];
        match mode {
            BasisMode::Harmonic => {
                let u_range = IndexRange::new(geom.offset + 1, geom.offset + geom.p)?;
                let cu = eigen_ratio(&casimir_h(&el.poly, u_range), &el.poly)?;
                if cu != stored[0] {
                    return Err(Error::Construction(format!("level {level} head Casimir")));
                }
                if geom.offset + geom.p < m {
                    let v_range = IndexRange::new(geom.offset + geom.p + 1, m)?;
                    let cv = eigen_ratio(&casimir_h(&el.poly, v_range), &el.poly)?;
                    if cv != stored[1] {
                        return Err(Error::Construction(format!("level {level} tail Casimir")));
                    }
                } else if !stored[1].is_zero() {
                    return Err(Error::Construction(format!("level {level} tail Casimir")));
                }
                let f_range = IndexRange::new(geom.offset + 1, m)?;
                let cf = eigen_ratio(&casimir_h(&el.poly, f_range), &el.poly)?;
                if cf != stored[2] {
                    return Err(Error::Construction(format!("level {level} full Casimir")));
                }
            }
            BasisMode::Monogenic => {
                // Head-block Scasimir embedded in the full space; it commutes
                // with every shallower projection, so the final element stays
                // an exact eigenvector.
                let unit = signed_pseudoscalar(geom.p, geom.p)?.embed(geom.offset, m)?;
                let u_range = IndexRange::new(geom.offset + 1, geom.offset + geom.p)?;
                let op = if geom.p == 1 {
                    gamma(&el.poly, u_range).left_mul_mv(&unit)?
                } else {
                    gamma(&el.poly, u_range)
                        .sub(&el.poly.scale_rat(&half(geom.p as i64 - 1)))?
                        .left_mul_mv(&unit)?
                };
                let su = if geom.p == 1 {
                    // Gamma over a single variable vanishes identically, so
                    // the operator is zero and the eigenvalue must be zero.
                    if !op.is_zero() {
                        return Err(Error::Construction("single-variable Gamma not zero".into()));
                    }
                    Rat::zero()
                } else {
                    eigen_ratio(&op, &el.poly)?
                };
                if su != stored[0] {
                    return Err(Error::Construction(format!("level {level} head Scasimir")));
                }
                if level == 0 {
                    // the remaining two operators of the top triple
                    let full = IndexRange::full(m);
                    if geoms.len() == 1 {
                        let triple = base_signature(mode, &el.poly, geom.p)?;
                        if triple != *stored {
                            return Err(Error::Construction("base triple mismatch".into()));
                        }
                    } else {
                        let split = SpaceSplit::new(m, geom.p)?;
                        let sv = eigen_ratio(&scasimir_v(&el.poly, &split), &el.poly)?;
                        let gx =
                            gamma(&el.poly, full).sub(&el.poly.scale_rat(&half(m as i64 - 1)))?;
                        let gx = eigen_ratio(&gx, &el.poly)?;
                        if sv != stored[1] || gx != stored[2] {
                            return Err(Error::Construction("top-level triple mismatch".into()));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiIndex;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn base_har_basis_examples() {
        assert!(base_har_basis(1, 2).unwrap().is_empty());
        assert_eq!(
            base_har_basis(2, 0).unwrap(),
            vec![CliffordPolynomial::one(2)]
        );
        let k3 = base_har_basis(2, 3).unwrap();
        assert_eq!(k3.len(), 2);
        for b in &k3 {
            assert!(laplace(b, IndexRange::full(2)).is_zero());
        }
        assert!(base_har_basis(3, 1).is_err());
    }

    #[test]
    fn base_mon_basis_examples() {
        let line = base_mon_basis(1, 0).unwrap();
        assert_eq!(line.len(), 2);
        assert_eq!(line[0], CliffordPolynomial::one(1));
        assert_eq!(
            line[1],
            CliffordPolynomial::from_mv(Multivector::generator(1, 1).unwrap())
        );
        assert!(base_mon_basis(1, 1).unwrap().is_empty());

        let plane = base_mon_basis(2, 1).unwrap();
        assert_eq!(plane.len(), 4);
        for b in &plane {
            assert!(dirac(b, IndexRange::full(2)).is_zero());
        }
        assert!(base_mon_basis(4, 0).is_err());
    }

    #[test]
    fn base_norms_follow_closed_form() {
        // 2^{k-1} k! for each of the four plane families
        for k in 0..=4u32 {
            for (_, poly) in base_mon_families(2, k).unwrap() {
                let norm = fischer_inner(&poly, &poly).unwrap();
                let expected = if k == 0 {
                    rat(1, 2)
                } else {
                    rat_int(2).pow(k as i32 - 1) * crate::scalar::factorial_rat(k)
                };
                assert_eq!(norm.re, expected, "k={k}");
                assert!(norm.im.is_zero());
            }
        }
    }

    #[test]
    fn scasimir_fixtures() {
        // S_u (z^k I+) = -(k + 1/2) z^k I+ inside R^3
        let m = 3;
        let split = SpaceSplit::new(m, 2).unwrap();
        let w = witt_fixtures(m).unwrap();
        for k in 0..=3u32 {
            let z = complex_coordinate(m, false);
            let zk = poly_pow(&z, k).right_mul_mv(&w.i_plus).unwrap();
            let out = scasimir_u(&zk, &split);
            assert_eq!(out, zk.scale_rat(&-(rat_u(k) + half(1))), "k={k}");
        }

        // S_v (I+ Q_i(v)) = -(i + (m-3)/2) I+ Q_i for Q_i monogenic in v.
        // Degree 0 at m = 3 (the only monogenic degree on a line):
        let q0 = CliffordPolynomial::from_mv(Multivector::generator(m, 3).unwrap());
        assert!(dirac(&q0, split.v_range()).is_zero());
        let ipq = CliffordPolynomial::from_mv(w.i_plus.clone())
            .mul(&q0)
            .unwrap();
        let out = scasimir_v(&ipq, &split);
        assert_eq!(out, ipq.scale_rat(&-(rat_u(0) + half(m as i64 - 3))));

        // Degree 1 at m = 4 with a plane tail: eigenvalue -(1 + 1/2)
        let m4 = 4;
        let split4 = SpaceSplit::new(m4, 2).unwrap();
        let w4 = witt_fixtures(m4).unwrap();
        for (_, base) in [
            base_mon_families(2, 1).unwrap()[0].clone(),
            base_mon_families(2, 1).unwrap()[3].clone(),
        ] {
            let q1 = base.embed(2, m4).unwrap();
            assert!(dirac(&q1, split4.v_range()).is_zero());
            let ipq = CliffordPolynomial::from_mv(w4.i_plus.clone())
                .mul(&q1)
                .unwrap();
            let out = scasimir_v(&ipq, &split4);
            assert_eq!(out, ipq.scale_rat(&-(rat_u(1) + half(m4 as i64 - 3))));
        }
    }

    #[test]
    fn scasimirs_commute() {
        let m = 4;
        let split = SpaceSplit::new(m, 2).unwrap();
        // a handful of deterministic polynomials
        let w = witt_fixtures(m).unwrap();
        let polys = [
            CliffordPolynomial::coordinate(m, 1)
                .mul(&CliffordPolynomial::coordinate(m, 3))
                .unwrap(),
            CliffordPolynomial::vector(m, IndexRange::full(m)),
            complex_coordinate(m, false)
                .right_mul_mv(&w.t_minus)
                .unwrap(),
        ];
        for p in &polys {
            let uv = scasimir_v(&scasimir_u(p, &split), &split);
            let vu = scasimir_u(&scasimir_v(p, &split), &split);
            assert_eq!(uv, vu);
        }
    }

    #[test]
    fn eigen_signature_table_rows() {
        // P_M(z^s zbar^{k+s+1} T+ Q_i) type rows are exercised through the
        // constructed basis; here check the base rows directly at p = 2.
        let basis = branch_basis_seq(BasisMode::Monogenic, 2, 2, &[2]).unwrap();
        assert_eq!(basis.len(), 4);
        for el in &basis {
            let k = el.label.levels[0].k;
            let class = el.label.levels[0].family.class_sign();
            let expected = expected_monogenic_triple(0, k, 0, 2, 0, 2, class);
            assert_eq!(el.signature[0], expected);
        }
    }

    #[test]
    fn eigen_signature_rejects_non_eigenvectors() {
        let m = 3;
        let split = SpaceSplit::new(m, 2).unwrap();
        let p = CliffordPolynomial::coordinate(m, 1);
        assert!(matches!(
            eigen_signature(&p, &split),
            Err(Error::NotEigenvector)
        ));
    }

    #[test]
    fn tau_maps() {
        // tau_M(1, Q) = Q
        let m = 3;
        let split = SpaceSplit::new(m, 2).unwrap();
        let q = CliffordPolynomial::from_mv(Multivector::generator(m, 3).unwrap());
        assert_eq!(tau_m(&CliffordPolynomial::one(m), &q, &split).unwrap(), q);

        // tau_H(|u|^2, 1) = |u|^2 - (p/m)|x|^2, cross-checked against the series
        for (m, p) in [(2usize, 1usize), (3, 2), (4, 2), (5, 3)] {
            let split = SpaceSplit::new(m, p).unwrap();
            let rsq_u = CliffordPolynomial::rsq(m, split.u_range());
            let out = tau_h(&rsq_u, &CliffordPolynomial::one(m), &split).unwrap();
            let expected = rsq_u
                .sub(
                    &CliffordPolynomial::rsq(m, IndexRange::full(m))
                        .scale_rat(&rat(p as i64, m as i64)),
                )
                .unwrap();
            assert_eq!(out, expected, "m={m} p={p}");
            assert_eq!(out, harmonic_part(&rsq_u));
        }

        // general-path dispatch: a non-harmonic head factor
        let m = 3;
        let split = SpaceSplit::new(m, 2).unwrap();
        let k = CliffordPolynomial::coordinate(m, 1)
            .mul(&CliffordPolynomial::coordinate(m, 1))
            .unwrap();
        let g = CliffordPolynomial::one(m);
        assert_eq!(tau_h(&k, &g, &split).unwrap(), harmonic_part(&k));

        // odd-shape dispatch in tau_M: K = u (vector variable of the head)
        let u = CliffordPolynomial::vector(m, split.u_range());
        let out = tau_m(&u, &g, &split).unwrap();
        assert_eq!(out, monogenic_part(&u.mul(&g).unwrap()));
    }

    #[test]
    fn tau_injectivity_spot_check() {
        // tau_M on a basis of u-polynomials of degree <= 2 against a fixed Q
        // produces linearly independent outputs; exact Gram rank check.
        let m = 3;
        let split = SpaceSplit::new(m, 2).unwrap();
        let q = CliffordPolynomial::from_mv(Multivector::generator(m, 3).unwrap());
        let mut outputs = Vec::new();
        for exps in [[0u32, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]] {
            let mono = CliffordPolynomial::monomial(
                MultiIndex::from_exponents(vec![exps[0], exps[1], 0]),
                Multivector::one(m),
            );
            outputs.push(tau_m(&mono, &q, &split).unwrap());
        }
        // Full rank of the Gram matrix over Q(i) via the standard
        // realification: columns G_j and i G_j stacked as [Re; Im] must have
        // real rank 2n.
        let gram = fischer_gram(&outputs).unwrap();
        let n = gram.len();
        let mut cols = vec![Vec::new(); 2 * n];
        for (r, row) in gram.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for (col, re, im) in [
                    (2 * c, v.re.clone(), v.im.clone()),
                    (2 * c + 1, -v.im.clone(), v.re.clone()),
                ] {
                    if !re.is_zero() {
                        cols[col].push((2 * r, re));
                    }
                    if !im.is_zero() {
                        cols[col].push((2 * r + 1, im));
                    }
                }
            }
        }
        let rank = crate::nullspace::rank(&SparseColumns { ncols: 2 * n, cols });
        assert_eq!(rank, 2 * outputs.len());
    }

    #[test]
    fn default_chains() {
        assert_eq!(default_chain(2), vec![2]);
        assert_eq!(default_chain(3), vec![2, 1]);
        assert_eq!(default_chain(4), vec![2, 2]);
        assert_eq!(default_chain(5), vec![2, 2, 1]);
        assert!(validate_chain(4, &[2, 2]).is_ok());
        assert!(validate_chain(4, &[1, 1, 1, 1]).is_ok());
        assert!(validate_chain(4, &[3, 1]).is_err());
        assert!(validate_chain(4, &[2, 1]).is_err());
        assert!(validate_chain(4, &[]).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(kernel_dim_oracle(BasisMode::Harmonic, 3, 2).unwrap(), 5);
        assert_eq!(kernel_dim_oracle(BasisMode::Harmonic, 4, 0).unwrap(), 1);
        for n in 0..=3u32 {
            assert_eq!(kernel_dim_oracle(BasisMode::Monogenic, 2, n).unwrap(), 4);
        }
    }

    #[test]
    fn small_monogenic_bases() {
        // m = 2: the four base elements at every degree
        let basis = branch_basis(BasisMode::Monogenic, 2, 3, &default_chain(2)).unwrap();
        assert_eq!(basis.len(), 4);
        let families: Vec<Family> = basis.iter().map(|e| e.label.levels[0].family).collect();
        assert_eq!(
            families,
            vec![Family::IPlus, Family::TPlus, Family::IMinus, Family::TMinus]
        );
        for el in &basis {
            let expected = rat_int(2).pow(2) * crate::scalar::factorial_rat(3);
            assert_eq!(el.norm2, expected);
        }

        // m = 3, n = 1 along the default chain, count checked by the oracle
        let basis = branch_basis(BasisMode::Monogenic, 3, 1, &default_chain(3)).unwrap();
        let dim = kernel_dim_oracle(BasisMode::Monogenic, 3, 1).unwrap();
        assert_eq!(basis.len(), dim);
        let report =
            verify_basis(&basis, BasisMode::Monogenic, 3, 1, &default_chain(3), true).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn small_harmonic_basis() {
        let chain = default_chain(3);
        let basis = branch_basis(BasisMode::Harmonic, 3, 2, &chain).unwrap();
        assert_eq!(basis.len(), 5);
        let report = verify_basis(&basis, BasisMode::Harmonic, 3, 2, &chain, true).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn gelfand_zetlin_chain_works() {
        // all-ones chain = step-one branching; [1, 2] mixes a step-one head
        // with a step-two base
        for chain in [vec![1, 1, 1], vec![1, 2]] {
            for (mode, n) in [(BasisMode::Monogenic, 1u32), (BasisMode::Harmonic, 2)] {
                let basis = branch_basis(mode, 3, n, &chain).unwrap();
                assert_eq!(
                    basis.len(),
                    kernel_dim_oracle(mode, 3, n).unwrap(),
                    "chain {chain:?} mode {mode:?}"
                );
                let report = verify_basis(&basis, mode, 3, n, &chain, true).unwrap();
                assert!(report.passed(), "chain {chain:?}: {:?}", report.checks);
            }
        }
    }

    #[test]
    fn verify_catches_tampering() {
        let chain = default_chain(3);
        let mut basis = branch_basis(BasisMode::Monogenic, 3, 1, &chain).unwrap();
        // replace one element by its sum with another: Gram gains an
        // off-diagonal entry
        let other = basis[1].poly.clone();
        basis[0].poly = basis[0].poly.add(&other).unwrap();
        let report = verify_basis(&basis, BasisMode::Monogenic, 3, 1, &chain, false).unwrap();
        assert!(!report.passed());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "gram_diagonal" && !c.passed));

        // the empty basis passes trivially (count check off)
        let report = verify_basis(&[], BasisMode::Monogenic, 3, 1, &chain, false).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn seq_and_parallel_agree() {
        let chain = default_chain(4);
        let a = branch_basis(BasisMode::Monogenic, 4, 2, &chain).unwrap();
        let b = branch_basis_seq(BasisMode::Monogenic, 4, 2, &chain).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.poly, y.poly);
            assert_eq!(x.label, y.label);
            assert_eq!(x.norm2, y.norm2);
            assert_eq!(x.signature, y.signature);
        }
    }
}

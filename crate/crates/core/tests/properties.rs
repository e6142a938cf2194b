//! Structural invariants: involution laws, commutation relations of the
//! bivector basis, Fischer adjointness, operator splittings across a direct
//! sum, and the Scasimir (anti-)commutation table.

use proptest::prelude::*;

use mbasis_core::clifford::{Blade, Involution, Multivector};
use mbasis_core::poly::fischer_norm_sq;
use mbasis_core::scalar::rat;
use mbasis_core::{
    angular_l, dirac, fischer_inner, gamma, harmonic_part, laplace, monogenic_part, rsq_mul,
    scasimir_u, scasimir_v, vector_mul, CliffordPolynomial, GaussianRational, IndexRange,
    MultiIndex, Rat, SpaceSplit,
};

fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| GaussianRational::new(rat(a, b), rat(c, d)))
}

fn arb_multivector(m: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u16..(1 << m), arb_gaussian()), 0..5).prop_map(move |terms| {
        let mut mv = Multivector::zero(m);
        for (mask, c) in terms {
            mv = mv
                .add(&Multivector::from_blade(m, Blade::from_mask(mask), c).unwrap())
                .unwrap();
        }
        mv
    })
}

fn arb_poly(m: usize, max_deg: u32) -> impl Strategy<Value = CliffordPolynomial> {
    let exps = prop::collection::vec(0..=max_deg, m)
        .prop_filter("degree bound", move |e| e.iter().sum::<u32>() <= max_deg);
    prop::collection::vec((exps, arb_multivector(m)), 0..5).prop_map(move |terms| {
        let mut p = CliffordPolynomial::zero(m);
        for (e, mv) in terms {
            p = p
                .add(&CliffordPolynomial::monomial(
                    MultiIndex::from_exponents(e),
                    mv,
                ))
                .unwrap();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn involution_laws(a in arb_multivector(4), b in arb_multivector(4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(
            ab.involution(Involution::Main),
            a.involution(Involution::Main).mul(&b.involution(Involution::Main)).unwrap()
        );
        prop_assert_eq!(
            ab.involution(Involution::Reversion),
            b.involution(Involution::Reversion).mul(&a.involution(Involution::Reversion)).unwrap()
        );
        prop_assert_eq!(
            ab.involution(Involution::Conjugation),
            b.involution(Involution::Conjugation).mul(&a.involution(Involution::Conjugation)).unwrap()
        );
    }

    #[test]
    fn grade_decomposition_sums_back(a in arb_multivector(4)) {
        let mut total = Multivector::zero(4);
        for k in 0..=4 {
            total = total.add(&a.grade_part(k)).unwrap();
        }
        prop_assert_eq!(total, a);
    }

    #[test]
    fn fischer_adjointness_signs(p in arb_poly(3, 3), q in arb_poly(3, 3)) {
        let m = 3;
        let full = IndexRange::full(m);
        // coordinates and partials are adjoint with a plus sign, generators
        // with a minus sign; consequently adjoint(|x|^2) = Lap and
        // adjoint(x) = -d_x.
        let xi_p = p.coordinate_mul(1);
        prop_assert_eq!(
            fischer_inner(&xi_p, &q).unwrap(),
            fischer_inner(&p, &q.partial_derivative(1)).unwrap()
        );
        let e1 = Multivector::generator(m, 1).unwrap();
        prop_assert_eq!(
            fischer_inner(&p.left_mul_mv(&e1).unwrap(), &q).unwrap(),
            -&fischer_inner(&p, &q.left_mul_mv(&e1).unwrap()).unwrap()
        );
        prop_assert_eq!(
            fischer_inner(&rsq_mul(&p, full), &q).unwrap(),
            fischer_inner(&p, &laplace(&q, full)).unwrap()
        );
        prop_assert_eq!(
            fischer_inner(&vector_mul(&p, full), &q).unwrap(),
            -&fischer_inner(&p, &dirac(&q, full)).unwrap()
        );
    }

    #[test]
    fn fischer_positive_and_generator_isometric(p in arb_poly(3, 3)) {
        let norm = fischer_inner(&p, &p).unwrap();
        prop_assert!(norm.is_real());
        prop_assert!(norm.re >= Rat::from_integer(0.into()));
        prop_assert_eq!(norm.re.numer() == &0.into(), p.is_zero());
        let e2 = Multivector::generator(3, 2).unwrap();
        prop_assert_eq!(fischer_norm_sq(&p.left_mul_mv(&e2).unwrap()), fischer_norm_sq(&p));
    }

    #[test]
    fn projections_fischer_self_adjoint(p in arb_poly(3, 3), q in arb_poly(3, 3)) {
        prop_assert_eq!(
            fischer_inner(&harmonic_part(&p), &q).unwrap(),
            fischer_inner(&p, &harmonic_part(&q)).unwrap()
        );
        prop_assert_eq!(
            fischer_inner(&monogenic_part(&p), &q).unwrap(),
            fischer_inner(&p, &monogenic_part(&q)).unwrap()
        );
    }

    #[test]
    fn gamma_splits_with_a_mixed_term(p in arb_poly(4, 3)) {
        let split = SpaceSplit::new(4, 2).unwrap();
        let full = IndexRange::full(4);
        let mut mixed = CliffordPolynomial::zero(4);
        for i in split.u_range().indices() {
            for j in split.v_range().indices() {
                let eij = Multivector::from_blade(
                    4,
                    Blade::from_indices(&[i, j]).unwrap(),
                    GaussianRational::one(),
                )
                .unwrap();
                mixed = mixed
                    .add(&angular_l(&p, i, j).unwrap().left_mul_mv(&eij).unwrap())
                    .unwrap();
            }
        }
        let lhs = gamma(&p, full);
        let rhs = gamma(&p, split.u_range())
            .add(&gamma(&p, split.v_range()))
            .unwrap()
            .sub(&mixed)
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dirac_splits_across_ranges(p in arb_poly(4, 3)) {
        let split = SpaceSplit::new(4, 1).unwrap();
        let lhs = dirac(&p, IndexRange::full(4));
        let rhs = dirac(&p, split.u_range()).add(&dirac(&p, split.v_range())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gram_is_conjugate_symmetric(a in arb_poly(3, 2), b in arb_poly(3, 2)) {
        let lhs = fischer_inner(&a, &b).unwrap();
        let rhs = fischer_inner(&b, &a).unwrap().conj();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn bivector_commutator_relations_at_m5() {
    // [e_ij, e_kl] = 2 d_il e_kj + 2 d_jl e_ik - 2 d_ik e_lj - 2 d_jk e_il
    let m = 5;
    let biv = |i: usize, j: usize| -> Multivector {
        // e_ij = e_i e_j for i != j, signed blade accordingly; zero for i = j
        if i == j {
            return Multivector::zero(m);
        }
        let ei = Multivector::generator(m, i).unwrap();
        let ej = Multivector::generator(m, j).unwrap();
        ei.mul(&ej).unwrap()
    };
    for i in 1..=m {
        for j in (i + 1)..=m {
            for k in 1..=m {
                for l in (k + 1)..=m {
                    let lhs = biv(i, j)
                        .mul(&biv(k, l))
                        .unwrap()
                        .sub(&biv(k, l).mul(&biv(i, j)).unwrap())
                        .unwrap();
                    let d = |a: usize, b: usize| a == b;
                    let mut rhs = Multivector::zero(m);
                    let two = GaussianRational::from_int(2);
                    if d(i, l) {
                        rhs = rhs.add(&biv(k, j).scale(&two)).unwrap();
                    }
                    if d(j, l) {
                        rhs = rhs.add(&biv(i, k).scale(&two)).unwrap();
                    }
                    if d(i, k) {
                        rhs = rhs.sub(&biv(l, j).scale(&two)).unwrap();
                    }
                    if d(j, k) {
                        rhs = rhs.sub(&biv(i, l).scale(&two)).unwrap();
                    }
                    assert_eq!(lhs, rhs, "commutator failed at ({i},{j}),({k},{l})");
                }
            }
        }
    }
}

/// Monomial-blade grid for the operator identities below.
fn grid(m: usize, max_deg: u32) -> Vec<CliffordPolynomial> {
    let mut exps = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for e in &exps {
            let used: u32 = e.iter().sum();
            for a in 0..=(max_deg - used) {
                let mut e2 = e.clone();
                e2.push(a);
                next.push(e2);
            }
        }
        exps = next;
    }
    let mut out = Vec::new();
    for e in exps {
        for mask in 0..(1u32 << m) {
            out.push(CliffordPolynomial::monomial(
                MultiIndex::from_exponents(e.clone()),
                Multivector::from_blade(m, Blade::from_mask(mask as u16), GaussianRational::one())
                    .unwrap(),
            ));
        }
    }
    out
}

#[test]
fn scasimir_commutation_table() {
    // S_u x = (-1)^p x S_u, S_u d_x = (-1)^p d_x S_u,
    // S_v x = (-1)^{p-1} x S_v, S_v d_x = (-1)^{p-1} d_x S_v
    for (m, p) in [(3usize, 1usize), (3, 2), (4, 2), (4, 3)] {
        let split = SpaceSplit::new(m, p).unwrap();
        let full = IndexRange::full(m);
        let sign_u = if p % 2 == 0 { 1 } else { -1 };
        for poly in grid(m, 3) {
            let lhs = scasimir_u(&vector_mul(&poly, full), &split);
            let rhs = vector_mul(&scasimir_u(&poly, &split), full)
                .scale(&GaussianRational::from_int(sign_u));
            assert_eq!(lhs, rhs, "S_u x relation failed at m={m} p={p}");

            let lhs = scasimir_u(&dirac(&poly, full), &split);
            let rhs =
                dirac(&scasimir_u(&poly, &split), full).scale(&GaussianRational::from_int(sign_u));
            assert_eq!(lhs, rhs, "S_u d_x relation failed at m={m} p={p}");

            let lhs = scasimir_v(&vector_mul(&poly, full), &split);
            let rhs = vector_mul(&scasimir_v(&poly, &split), full)
                .scale(&GaussianRational::from_int(-sign_u));
            assert_eq!(lhs, rhs, "S_v x relation failed at m={m} p={p}");

            let lhs = scasimir_v(&dirac(&poly, full), &split);
            let rhs =
                dirac(&scasimir_v(&poly, &split), full).scale(&GaussianRational::from_int(-sign_u));
            assert_eq!(lhs, rhs, "S_v d_x relation failed at m={m} p={p}");
        }
    }
}

#[test]
fn scasimirs_commute_with_monogenic_projection() {
    for (m, p) in [(3usize, 2usize), (4, 2)] {
        let split = SpaceSplit::new(m, p).unwrap();
        for poly in grid(m, 3) {
            let lhs = scasimir_u(&monogenic_part(&poly), &split);
            let rhs = monogenic_part(&scasimir_u(&poly, &split));
            assert_eq!(lhs, rhs, "S_u does not commute with P_M at m={m} p={p}");
            let lhs = scasimir_v(&monogenic_part(&poly), &split);
            let rhs = monogenic_part(&scasimir_v(&poly, &split));
            assert_eq!(lhs, rhs, "S_v does not commute with P_M at m={m} p={p}");
        }
    }
}

use proptest::prelude::*;
use xsquare_algebra::poly::{Monomial, MonomialOrder};
use xsquare_algebra::*;
use xsquare_oracle::{eval, submodule_piece, syzygy_piece};

const BUDGET: u64 = 20_000;

fn qxyz() -> PolyRing {
    PolyRing::new(&["x", "y", "z"], Field::Rational).unwrap()
}

fn poly_strategy(max_terms: usize, max_exp: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0..=max_exp, 0..=max_exp, 0..=max_exp), -4i64..=4), 0..=max_terms).prop_map(
        |terms| {
            let r = qxyz();
            let f = r.field();
            Polynomial::from_terms(
                &r,
                terms
                    .into_iter()
                    .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), f.from_i64(k))),
            )
        },
    )
}

fn nonzero(max_terms: usize, max_exp: u16) -> impl Strategy<Value = Polynomial> {
    poly_strategy(max_terms, max_exp).prop_filter("nonzero", |p| !p.is_zero())
}

fn small_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(nonzero(3, 2), 1..=3)
}

fn budgeted<T>(r: Result<T, GbError>) -> Result<T, TestCaseError> {
    match r {
        Ok(v) => Ok(v),
        Err(GbError::Budget { .. }) => Err(TestCaseError::reject("budget")),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn format_then_parse_is_identity(a in poly_strategy(6, 4)) {
        let text = format_poly(&a);
        prop_assert_eq!(parse_poly(&text, a.ring()).unwrap(), a);
    }

    #[test]
    fn ring_axioms(a in poly_strategy(4, 3), b in poly_strategy(4, 3), c in poly_strategy(4, 3)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_multiplicative(a in poly_strategy(4, 3), b in poly_strategy(4, 3), pt in prop::collection::vec(-5i64..=5, 3)) {
        let f = Field::Rational;
        let pt: Vec<Coeff> = pt.into_iter().map(|v| f.from_i64(v)).collect();
        prop_assert_eq!(eval(&(&a * &b), &pt), &eval(&a, &pt) * &eval(&b, &pt));
        prop_assert_eq!(eval(&(&a + &b), &pt), &eval(&a, &pt) + &eval(&b, &pt));
    }

    #[test]
    fn hom_composition(imgs1 in prop::collection::vec(poly_strategy(3, 2), 3),
                       imgs2 in prop::collection::vec(poly_strategy(3, 2), 3),
                       q in poly_strategy(4, 2)) {
        let r = qxyz();
        let h = RingHom::new(&r, &r, imgs1).unwrap();
        let g = RingHom::new(&r, &r, imgs2).unwrap();
        prop_assert_eq!(h.then(&g).unwrap().apply(&q), g.apply(&h.apply(&q)));
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in small_ideal()) {
        let r = qxyz();
        let a = Ideal::new(&r, gens.clone()).unwrap().with_budget(BUDGET);
        let mut rev = gens;
        rev.reverse();
        let b = Ideal::new(&r, rev).unwrap().with_budget(BUDGET);
        let ga = budgeted(a.groebner_basis())?.to_vec();
        let gb = budgeted(b.groebner_basis())?.to_vec();
        prop_assert_eq!(ga, gb);
    }

    #[test]
    fn cofactors_reconstruct(gens in small_ideal(), mults in prop::collection::vec(poly_strategy(2, 1), 3)) {
        let r = qxyz();
        let i = Ideal::new(&r, gens.clone()).unwrap().with_budget(BUDGET);
        let mut target = r.zero();
        for (g, m) in gens.iter().zip(&mults) {
            target = &target + &(g * m);
        }
        prop_assert!(budgeted(i.contains(&target))?);
        let c = budgeted(i.lift_cofactors(&target))?;
        let mut back = r.zero();
        for (g, m) in i.gens().iter().zip(&c) {
            back = &back + &(g * m);
        }
        prop_assert_eq!(back, target);
    }

    #[test]
    fn intersection_soundness(a in nonzero(2, 2), b in nonzero(2, 2)) {
        let r = qxyz();
        let i = Ideal::new(&r, vec![a.clone()]).unwrap().with_budget(BUDGET);
        let j = Ideal::new(&r, vec![b.clone()]).unwrap().with_budget(BUDGET);
        let k = budgeted(ideal_intersect(&i, &j))?;
        for g in budgeted(k.groebner_basis())? {
            prop_assert!(budgeted(i.contains(g))?);
            prop_assert!(budgeted(j.contains(g))?);
        }
        prop_assert!(budgeted(k.contains(&(&a * &b)))?);
    }

    #[test]
    fn hilbert_data_depends_only_on_the_ideal(gens in small_ideal()) {
        let r = qxyz();
        let i = Ideal::new(&r, gens).unwrap().with_budget(BUDGET);
        let gb = budgeted(i.groebner_basis())?.to_vec();
        let j = Ideal::new(&r, gb).unwrap();
        let hi = budgeted(affine_hilbert(&i, 4))?;
        prop_assert_eq!(hi.clone(), budgeted(affine_hilbert(&j, 4))?);
        prop_assert!(hi.is_nondecreasing());
        prop_assert!(hi.dims[0] <= 1);
    }

    #[test]
    fn lex_and_degrevlex_agree_as_ideals(gens in small_ideal()) {
        let r = qxyz();
        let lex = r.with_order(MonomialOrder::Lex).unwrap();
        let i = Ideal::new(&r, gens.clone()).unwrap().with_budget(BUDGET);
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.transfer_by_name(&lex).unwrap()).collect();
        let j = Ideal::new(&lex, moved).unwrap().with_budget(BUDGET);
        budgeted(j.groebner_basis())?;
        prop_assert!(budgeted(i.equals(&j))?);
    }
}

fn homogeneous_strategy(d: u64) -> impl Strategy<Value = Polynomial> {
    let monos = xsquare_algebra::poly::monomials_of_degree(&[1, 1, 1], d);
    let n = monos.len();
    prop::collection::vec((0..n, prop_oneof![-3i64..=-1, 1i64..=3]), 1..=3).prop_map(move |terms| {
        let r = qxyz();
        let f = r.field();
        Polynomial::from_terms(&r, terms.into_iter().map(|(k, c)| (monos[k].clone(), f.from_i64(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn syzygies_sound_and_complete_in_low_degree(
        g in prop::collection::vec((1u64..=2).prop_flat_map(homogeneous_strategy), 2..=3)
    ) {
        prop_assume!(g.iter().all(|p| !p.is_zero()));
        let r = qxyz();
        let s = budgeted(syzygies(&g, BUDGET))?;
        prop_assert!(s.verify());
        let shifts: Vec<u64> = g.iter().map(|p| p.degree().unwrap()).collect();
        let vecs: Vec<Vec<Polynomial>> = s.vectors.iter().map(|v| v.coords().to_vec()).collect();
        for d in 0..=4 {
            let (_, truth) = syzygy_piece(&r, &g, d);
            let (_, ours) = submodule_piece(&r, &shifts, &vecs, d);
            prop_assert!(truth.equals(&ours), "degree {}", d);
        }
    }
}

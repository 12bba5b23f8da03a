//! Invariants over random 1-skeleta on `Q[x, y]` with homogeneous relations.

use proptest::prelude::*;
use xsquare::homotopy::{aq_h2, pi1, H2Route};
use xsquare::tensor_coprod::{assemble_l, compare_corner, tensor_square};
use xsquare::{moore, verify_square, ConstructionData, CrossedModuleRep, FieldSpec, Generator, Skeleton2, Subquotient};
use xsquare_algebra::{MonomialOrder, RingHom};

const IMAGES: &[&str] = &["x", "y", "x^2", "x*y", "y^2", "x^2 - y^2", "x*y + y^2", "x^3", "x^2*y"];

fn data_strategy() -> impl Strategy<Value = ConstructionData> {
    prop::collection::vec(0..IMAGES.len(), 1..=2).prop_map(|idx| ConstructionData {
        field: FieldSpec::Q,
        s1: vec!["x".into(), "y".into()],
        s2: idx
            .iter()
            .enumerate()
            .map(|(i, &k)| Generator { name: format!("S{}", i + 1), image: IMAGES[k].into() })
            .collect(),
        s3: Vec::new(),
    })
}

fn build(d: &ConstructionData) -> Skeleton2 {
    Skeleton2::build(d, MonomialOrder::DegRevLex, 200_000).unwrap()
}

fn ideal_module(sk: &Skeleton2, gens: Vec<xsquare_algebra::Polynomial>) -> CrossedModuleRep {
    let e1 = sk.ring(1);
    let id = RingHom::identity(e1);
    CrossedModuleRep {
        top: Subquotient::ideal(sk.ideal(1, gens.clone()).unwrap()),
        base: Subquotient::whole(e1, sk.budget()),
        boundary: id.clone(),
        action: id,
        gens,
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn identities_and_pi1_routes(d in data_strategy()) {
        let sk = build(&d);
        prop_assert!(sk.check_identities().iter().all(|c| c.holds));
        let p = pi1(&sk, &moore(&sk).unwrap(), 4).unwrap();
        prop_assert_eq!(p.squared, p.simplicial);
    }

    #[test]
    fn h2_routes_agree(d in data_strategy()) {
        let sk = build(&d);
        prop_assert_eq!(aq_h2(&sk, H2Route::Syzygy, 6).unwrap(), aq_h2(&sk, H2Route::Kernel, 6).unwrap());
    }

    #[test]
    fn renaming_and_shuffling_keep_the_numbers(d in data_strategy()) {
        let mut e = d.clone();
        e.s2.reverse();
        for (i, g) in e.s2.iter_mut().enumerate() {
            g.name = format!("U{i}");
        }
        let (a, b) = (build(&d), build(&e));
        let pa = pi1(&a, &moore(&a).unwrap(), 4).unwrap();
        let pb = pi1(&b, &moore(&b).unwrap(), 4).unwrap();
        prop_assert_eq!(pa.squared, pb.squared);
        prop_assert_eq!(
            aq_h2(&a, H2Route::Syzygy, 5).unwrap(),
            aq_h2(&b, H2Route::Syzygy, 5).unwrap()
        );
    }

    #[test]
    fn tensor_corner_is_crossed_and_matches_the_top_term(d in data_strategy()) {
        let sk = build(&d);
        let asm = assemble_l(&sk).unwrap();
        let rep = verify_square(&asm.tensor.square, "tensor").unwrap();
        prop_assert!(rep.passed(), "{}", rep);
        let sec = compare_corner(&sk, 4).unwrap();
        for c in &sec.checks {
            prop_assert!(c.passed(), "{}", c);
        }
    }

    #[test]
    fn tensor_is_symmetric_in_size(d in data_strategy()) {
        let sk = build(&d);
        let m = ideal_module(&sk, (0..sk.n_s2()).map(|i| sk.s2_var(i)).collect());
        let n = ideal_module(&sk, (0..sk.n_s2()).map(|i| sk.s2_bar(i)).collect());
        let mn = tensor_square(&m, &n).unwrap();
        let nm = tensor_square(&n, &m).unwrap();
        prop_assert_eq!(mn.square.l.dims(4).unwrap(), nm.square.l.dims(4).unwrap());
    }

    #[test]
    fn data_json_round_trips(d in data_strategy()) {
        prop_assert_eq!(ConstructionData::from_json(&d.to_json()).unwrap(), d);
    }
}

use std::sync::OnceLock;

use proptest::prelude::*;
use specht_hecke::bases::CellBasis;
use specht_hecke::{Element, Engine, HeckeParams, Scalar};

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(|| Engine::new(HeckeParams::semisimple(3, 2)))
}

fn prime_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(|| Engine::new(HeckeParams::prime(3, vec![0, 1], 3).unwrap()))
}

fn m_basis() -> &'static CellBasis {
    static BASIS: OnceLock<CellBasis> = OnceLock::new();
    BASIS.get_or_init(|| CellBasis::murphy_m(engine()).unwrap())
}

fn element(e: &'static Engine) -> impl Strategy<Value = Element> {
    prop::collection::vec((0..e.dim(), -3i64..=3), 0..6).prop_map(move |terms| {
        let mut x = Element::zero();
        for (w, c) in terms {
            x.add_term(w, &e.field().from_i64(c));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn multiplication_is_associative(a in element(engine()), b in element(engine()), c in element(engine())) {
        let e = engine();
        prop_assert_eq!(e.multiply(&e.multiply(&a, &b), &c), e.multiply(&a, &e.multiply(&b, &c)));
    }

    #[test]
    fn associative_over_f3(a in element(prime_engine()), b in element(prime_engine()), c in element(prime_engine())) {
        let e = prime_engine();
        prop_assert_eq!(e.multiply(&e.multiply(&a, &b), &c), e.multiply(&a, &e.multiply(&b, &c)));
    }

    #[test]
    fn one_is_neutral(a in element(engine())) {
        let e = engine();
        prop_assert_eq!(e.multiply(&e.one(), &a), a.clone());
        prop_assert_eq!(e.multiply(&a, &e.one()), a);
    }

    #[test]
    fn star_is_an_anti_involution(a in element(engine()), b in element(engine())) {
        let e = engine();
        prop_assert_eq!(e.star(&e.star(&a)), a.clone());
        prop_assert_eq!(e.star(&e.multiply(&a, &b)), e.multiply(&e.star(&b), &e.star(&a)));
    }

    #[test]
    fn distributive(a in element(engine()), b in element(engine()), c in element(engine())) {
        let e = engine();
        prop_assert_eq!(e.multiply(&a, &b.add(&c)), e.multiply(&a, &b).add(&e.multiply(&a, &c)));
    }

    #[test]
    fn m_coordinates_round_trip(coords in prop::collection::vec(-5i64..=5, 48)) {
        let e = engine();
        let m = m_basis();
        let c: Vec<Scalar> = coords.iter().map(|&x| e.field().from_i64(x)).collect();
        prop_assert_eq!(m.coordinates(e, &m.from_coordinates(e, &c)), c);
    }
}

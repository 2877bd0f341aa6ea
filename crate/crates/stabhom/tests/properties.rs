use proptest::prelude::*;
use stabhom::format::{AlgebraFile, FunctorFile, ModuleFile};
use stabhom::laws::{stream_rng, Catalog};
use stabhom::report::run_law;
use stabhom_core::algebra::Side;
use stabhom_core::catalog::{random_module, Fixture};
use stabhom_core::exactla::Field;

fn fixture() -> impl Strategy<Value = Fixture> {
    prop::sample::select(Fixture::ALL.to_vec())
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::prime(2).unwrap()), Just(Field::prime(3).unwrap()), Just(Field::Rational)]
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Left), Just(Side::Right)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn algebra_files_round_trip(fx in fixture(), field in field()) {
        let alg = fx.build(field);
        let text = serde_json::to_string(&AlgebraFile::from_algebra(&alg)).unwrap();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        prop_assert!(back.build().unwrap().same_underlying(&alg));
    }

    #[test]
    fn module_files_round_trip(fx in fixture(), field in field(), side in side(), seed in any::<u64>()) {
        let alg = fx.build(field);
        let m = random_module(&alg, side, 4, &mut stream_rng(seed, 0));
        let text = serde_json::to_string(&ModuleFile::from_module(&m)).unwrap();
        let back: ModuleFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.build(&alg).unwrap(), m);
    }

    #[test]
    fn functor_files_round_trip(fx in fixture(), field in field(), seed in 0u64..1000) {
        let cat = Catalog::generate(&fx.build(field), seed, 4, 2);
        for lf in cat.functors().unwrap().iter().take(12) {
            let file = FunctorFile::from_functor(&lf.functor);
            let text = serde_json::to_string(&file).unwrap();
            let back: FunctorFile = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &file);
            let rebuilt = back.build(&cat.algebra).unwrap();
            prop_assert_eq!(FunctorFile::from_functor(&rebuilt), file);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn laws_hold_at_arbitrary_seeds(fx in fixture(), field in field(), seed in any::<u64>()) {
        let cat = Catalog::generate(&fx.build(field), seed, 8, 3);
        for law in ["torsion-agreement", "radical-law", "trace-idempotence", "transpose-involution", "torsion-radical", "certificates"] {
            let report = run_law(&cat, law);
            prop_assert!(report.passed, "{} failed: {:?}", law, report.witness.map(|w| w.values));
        }
    }
}

//! Every example compiles into this target and runs to completion.

mod semigroup_basics {
    include!("../examples/semigroup_basics.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod delta_sets {
    include!("../examples/delta_sets.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod length_sets {
    include!("../examples/length_sets.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod factorizations {
    include!("../examples/factorizations.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod betti_presentation {
    include!("../examples/betti_presentation.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod embedding_dimension_three {
    include!("../examples/embedding_dimension_three.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod family_verification {
    include!("../examples/family_verification.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod conjectures {
    include!("../examples/conjectures.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod realization_search {
    include!("../examples/realization_search.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod catalog {
    include!("../examples/catalog.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod acceptance_quick {
    include!("../examples/acceptance_quick.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        #[path = $path]
        mod $name;

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(moore_penrose, "../examples/moore_penrose.rs");
example!(determinants, "../examples/determinants.rs");
example!(weighted_drazin, "../examples/weighted_drazin.rs");
example!(core_ep, "../examples/core_ep.rs");
example!(weighted_core_ep, "../examples/weighted_core_ep.rs");
example!(worked_wdmp, "../examples/worked_wdmp.rs");
example!(dmp_variants, "../examples/dmp_variants.rs");
example!(verification, "../examples/verification.rs");
example!(complex_subfield, "../examples/complex_subfield.rs");

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
            pub fn run() {
                run_example().expect(concat!($file, " should run"));
            }
        }
        #[test]
        fn $name() {
            $name::run();
        }
    };
}

example!(greedy, "greedy.rs");
example!(fair_two_groups, "fair_two_groups.rs");
example!(fair_m_groups, "fair_m_groups.rs");
example!(exchange, "exchange.rs");
example!(heuristics, "heuristics.rs");
example!(grid_planted, "grid_planted.rs");
example!(adversarial, "adversarial.rs");
example!(adult, "adult.rs");
example!(instance_json, "instance_json.rs");

use clap::ValueEnum;
use exact_core::Verdict;
use gravity_1d::{cut_and_join_Z, flow_check, partition_function, polymer_check, selection_rule_check, virasoro_check, Family};
use kp_npoint::ks_verify;
use symmetric_functions::verify_bosonic_Z;
use virasoro_recursions::{cross_pipeline_check, fat_total_check, thin_total_check};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Virasoro,
    Flow,
    Polymer,
    Cutjoin,
    Bosonic,
    Ks,
    Selection,
    Crosscheck,
    All,
}

const DEGREE: u32 = 12;

fn suite(s: Suite) -> Vec<Verdict> {
    match s {
        Suite::Virasoro => [Family::Original, Family::Reformulated]
            .into_iter()
            .flat_map(|f| (-1..=5).map(move |m| virasoro_check(f, m, DEGREE)))
            .collect(),
        Suite::Flow => (0..=5).map(|n| flow_check(n, DEGREE)).collect(),
        Suite::Polymer => vec![polymer_check(DEGREE)],
        Suite::Cutjoin => {
            let name = format!("exp(M) 1 = Z at D={DEGREE}");
            let (a, b) = (cut_and_join_Z(DEGREE), partition_function(DEGREE));
            vec![match a.first_difference(&b, DEGREE) {
                None => Verdict::pass(name, format!("{} terms", b.len())),
                Some((m, x, y)) => Verdict::fail(name, format!("{m}: {x} vs {y}")),
            }]
        }
        Suite::Bosonic => vec![verify_bosonic_Z(DEGREE)],
        Suite::Ks => vec![ks_verify(20, 40)],
        Suite::Selection => vec![selection_rule_check(DEGREE)],
        Suite::Crosscheck => vec![thin_total_check(14), fat_total_check(14, 3), cross_pipeline_check(14, 8, 6)],
        Suite::All => [
            Suite::Virasoro,
            Suite::Flow,
            Suite::Polymer,
            Suite::Cutjoin,
            Suite::Bosonic,
            Suite::Ks,
            Suite::Selection,
            Suite::Crosscheck,
        ]
        .into_iter()
        .flat_map(suite)
        .collect(),
    }
}

/// Prints one line per check; true iff all passed.
pub fn run(s: Suite) -> bool {
    let mut ok = true;
    for v in suite(s) {
        println!("{v}");
        ok &= v.passed;
    }
    ok
}

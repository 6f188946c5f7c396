use poisson_forge::verify::{all_pass, render_table, run, Golden};

#[test]
fn embedded_golden_report_passes() {
    let results = run(&Golden::embedded(), 0);
    print!("{}", render_table(&results));
    assert!(results.len() >= 30);
    assert!(all_pass(&results));
}

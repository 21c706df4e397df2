use franel::conjectures::{run_all, ConjectureBounds};
use std::time::Instant;

#[test]
fn full_bounds() {
    let t0 = Instant::now();
    let reports = run_all(None, &ConjectureBounds::default(), 42).unwrap();
    for r in &reports {
        println!(
            "{}: tested={} counterexamples={} complete={}",
            r.id, r.tested, r.counterexamples, r.complete
        );
        for i in r.instances.iter().filter(|i| i.status == "counterexample").take(3) {
            println!("  CE {} {}", i.instance, i.witness);
        }
    }
    println!("elapsed {:.1}s", t0.elapsed().as_secs_f64());
    assert!(reports.iter().all(|r| r.counterexamples == 0));
}

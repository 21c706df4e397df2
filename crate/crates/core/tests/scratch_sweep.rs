use franel::engine::verify_all;
use franel::modarith::primes_in_range;
use std::time::Instant;

#[test]
fn sweep_e1_full() {
    let t0 = Instant::now();
    let primes = primes_in_range(5, 1000);
    let e1: Vec<String> = franel::engine::registry::CASES
        .iter()
        .filter(|c| c.e == 1)
        .map(|c| c.id.to_string())
        .collect();
    let report = verify_all(&primes, Some(&e1), 5, 42, None).unwrap();
    for o in report.failures().take(20) {
        println!(
            "FAIL {} p={} e={} params={:?} lhs={} rhs={} branch={}",
            o.case_id, o.p, o.e, o.params, o.lhs, o.rhs, o.branch
        );
    }
    println!(
        "e1 sweep: outcomes={} failed={} skipped={} in {:.1}s",
        report.summary.outcomes,
        report.summary.failed,
        report.summary.skipped,
        t0.elapsed().as_secs_f64()
    );
    assert_eq!(report.summary.failed, 0);
}

#[test]
fn sweep_high_e() {
    let t0 = Instant::now();
    let primes = primes_in_range(5, 300);
    let ids: Vec<String> = ["T2.13", "E2.7", "T3.4", "T3.5", "L2.2", "E2.1", "E2.3", "E2.4", "E2.5"]
        .iter().map(|s| s.to_string()).collect();
    let report = verify_all(&primes, Some(&ids), 5, 42, None).unwrap();
    for o in report.failures().take(20) {
        println!(
            "FAIL {} p={} e={} params={:?} lhs={} rhs={} branch={}",
            o.case_id, o.p, o.e, o.params, o.lhs, o.rhs, o.branch
        );
    }
    println!(
        "high-e sweep: outcomes={} failed={} skipped={} in {:.1}s",
        report.summary.outcomes,
        report.summary.failed,
        report.summary.skipped,
        t0.elapsed().as_secs_f64()
    );
    assert_eq!(report.summary.failed, 0);
}

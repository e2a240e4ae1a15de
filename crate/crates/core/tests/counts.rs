//! One-variable bounds against a full scan where the scan is cheap.

use indecomp::census::{count_uni, enumerate_census};
use indecomp::parallel::Execution;

#[test]
fn three_factor_bounds_admit_the_scan() {
    // 8 = 2^3 over F_3: 13122 polynomials
    let c = count_uni(3, 8).unwrap();
    assert!(c.lower.is_some() && c.upper.is_some() && c.alpha.is_some());
    let scan = enumerate_census(3, 1, 8, 16, Execution::Parallel).unwrap();
    assert_eq!(scan.total, c.total);
    assert!(
        c.admits(&scan.decomposable),
        "D = {} outside {:?}..{:?}",
        scan.decomposable,
        c.lower,
        c.upper
    );
}

#[test]
fn two_factor_bounds_admit_the_scan() {
    for (q, d) in [(2, 15), (3, 10), (5, 6)] {
        let c = count_uni(q, d).unwrap();
        let scan = enumerate_census(q, 1, d, 16, Execution::Parallel).unwrap();
        assert!(
            c.admits(&scan.decomposable),
            "q={q} d={d}: D = {}",
            scan.decomposable
        );
    }
}

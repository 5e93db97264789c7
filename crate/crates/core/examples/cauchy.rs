//! Both Cauchy identities, as truncated products of polynomials and as
//! statements about transition matrices.

use schurkit::polyval::cauchy_truncated_check;
use schurkit::ring::cauchy_abstract_check;

fn main() {
    for k in 0..=5 {
        let poly: Vec<bool> = (1..=3).map(|n| cauchy_truncated_check(k, n, false)).collect();
        let dual: Vec<bool> = (1..=3).map(|n| cauchy_truncated_check(k, n, true)).collect();
        println!(
            "k={k}  product {poly:?}  dual {dual:?}  matrices {} {}",
            cauchy_abstract_check(k, false),
            cauchy_abstract_check(k, true)
        );
    }
}

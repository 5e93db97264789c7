//! Schur functions as signed sums of products of complete symmetric
//! functions, checked against the tableau definition in a few variables.

use schurkit::polyval::{eval_s_tableau, eval_symfunc};
use schurkit::ring::convert;
use schurkit::schur_core::jacobi_trudi_expand;
use schurkit::{partition, Basis, Partition};

fn main() {
    for lambda in [partition![2, 1], partition![2, 2], partition![3, 1, 1]] {
        let h = jacobi_trudi_expand(&lambda.to_int_vector());
        println!("s{lambda} = {h}");
        assert_eq!(convert(&h, Basis::Schur).to_string(), format!("s{lambda}"));
        assert_eq!(eval_symfunc(&h, 3), eval_s_tableau(&lambda, &Partition::empty(), 3));
    }
    println!(
        "s[2,1](x1,x2) = {}",
        eval_s_tableau(&partition![2, 1], &Partition::empty(), 2)
    );
}

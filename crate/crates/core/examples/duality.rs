//! The involution omega and the relation between h and e.

use schurkit::ring::{convert, multiply, newton_relation, omega};
use schurkit::{partition, Basis, SymFunc};

fn main() {
    let s = SymFunc::basis_element(Basis::Schur, partition![3, 1]);
    println!("omega({s}) = {}", omega(&s));

    let h = SymFunc::basis_element(Basis::Complete, partition![2, 1]);
    let e = omega(&h);
    println!("omega({h}) = {e} = {}", convert(&e, Basis::Schur));

    let m = SymFunc::basis_element(Basis::Monomial, partition![2, 1]);
    println!("omega({m}) = {}", omega(&m));

    for r in 0..=4 {
        println!("r = {r}: sum of (-1)^i h_i e_(r-i) = {}", newton_relation(r));
    }

    let e2 = SymFunc::basis_element(Basis::Elementary, partition![2]);
    println!(
        "e[2] * s[2,1] = {}",
        multiply(&e2, &SymFunc::basis_element(Basis::Schur, partition![2, 1]))
    );
}

//! Explicit polynomials in a few variables: alternants, tableau sums and
//! recovering a product expansion from monomials alone.

use schurkit::polyval::{alternant, bialternant_check, eval_m, eval_s_tableau, product_oracle};
use schurkit::ring::multiply;
use schurkit::{partition, Basis, IntVector, Partition, SymFunc};

fn main() -> schurkit::Result<()> {
    println!("m[2,1](x1,x2) = {}", eval_m(&partition![2, 1], 2));
    println!(
        "s[2,1]/[1](x1,x2) = {}",
        eval_s_tableau(&partition![2, 1], &partition![1], 2)
    );
    println!("A[2,1,0] = {}", alternant(&IntVector::new(vec![2, 1, 0]), 3)?);
    println!(
        "quotient of alternants for [2,1] in 3 variables: {}",
        bialternant_check(&partition![2, 1], 3)?
    );

    let (mu, nu) = (partition![2, 1], partition![2, 1]);
    let oracle = product_oracle(&mu, &nu, 6)?;
    let ring = multiply(
        &SymFunc::basis_element(Basis::Schur, mu),
        &SymFunc::basis_element(Basis::Schur, nu),
    );
    println!("oracle {oracle}\nring   {ring}");
    assert_eq!(oracle, ring);

    let p = eval_s_tableau(&partition![2, 2], &Partition::empty(), 3);
    println!("s[2,2] in 3 variables: {} terms, json {}", p.len(), p.to_json());
    Ok(())
}

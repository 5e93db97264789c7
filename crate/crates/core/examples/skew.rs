//! Skew Schur functions from LR coefficients and from determinants.

use schurkit::ring::{convert, skew_jacobi_trudi, skew_schur, Flavor};
use schurkit::tableaux::{enumerate_ssyt, kostka};
use schurkit::{partition, Basis, SkewShape};

fn main() -> schurkit::Result<()> {
    let (lambda, mu) = (partition![3, 2, 1], partition![2, 1]);
    println!("s{lambda}/{mu} = {}", skew_schur(&lambda, &mu));
    let h = skew_jacobi_trudi(&lambda, &mu, Flavor::Complete);
    let e = skew_jacobi_trudi(&lambda, &mu, Flavor::Elementary);
    println!("  = {h}\n  = {e}");
    assert_eq!(convert(&h, Basis::Schur), convert(&e, Basis::Schur));

    let shape = SkewShape::new(lambda, mu)?;
    println!("m-expansion {}", convert(&h, Basis::Monomial));
    println!(
        "K(shape, [2,1]) = {}",
        kostka(&shape, &partition![2, 1].to_int_vector())
    );
    for t in enumerate_ssyt(&shape, 2, None).iter().take(3) {
        println!("{t}\n");
    }
    Ok(())
}
